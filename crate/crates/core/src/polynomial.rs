use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Ring;

/// Univariate polynomial in `t` with exact coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<R> {
    terms: BTreeMap<u32, R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// Builds from coefficients listed by ascending exponent.
    pub fn from_coefficients<I: IntoIterator<Item = R>>(coefficients: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in coefficients.into_iter().enumerate() {
            p.add_term(e as u32, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: R) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(R::zero);
        *slot = slot.clone() + coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u32) -> R {
        self.terms.get(&exponent).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval(&self, t: &R) -> R {
        let Some(top) = self.degree() else {
            return R::zero();
        };
        // Horner over the dense coefficient range.
        let mut acc = R::zero();
        for e in (0..=top).rev() {
            acc = acc * t.clone() + self.coefficient(e);
        }
        acc
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = magnitude.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{magnitude}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;

    fn poly(c: &[i64]) -> Polynomial<Integer> {
        Polynomial::from_coefficients(c.iter().map(|&v| Integer::from(v)))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = poly(&[1, 0, 2]);
        assert_eq!(p.terms().count(), 2);
        p.add_term(2, Integer::from(-2));
        assert_eq!(p, poly(&[1]));
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn display_and_eval() {
        let p = poly(&[1, -2, 1]);
        assert_eq!(p.to_string(), "t^2 - 2t + 1");
        assert_eq!(p.eval(&Integer::from(3)), Integer::from(4));
        assert_eq!(poly(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[0, -3]).to_string(), "-3t");
    }

    #[test]
    fn machine_integers_work_as_coefficients() {
        let p: Polynomial<i64> = Polynomial::from_coefficients([2, 0, 1]);
        assert_eq!(p.eval(&2), 6);
    }
}
