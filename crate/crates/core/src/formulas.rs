//! Closed forms and partition sums counting decreasing maximal chains.
//!
//! The chain count of the type B/C/D posets is
//! `Σ_{π ∈ Π_n} f(π) · ∏_i (2|π_i| − 3)!!`, where `f` depends only on the
//! number of blocks `k` and nonsingleton blocks `s` of `π`. The sum is
//! evaluated over integer-partition shapes weighted by the number of set
//! partitions of each shape.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Integer;

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `a · (a − 1) ⋯ (a − len + 1)`, the empty product when `len = 0`.
pub fn falling(a: usize, len: usize) -> Integer {
    if len > a {
        return Integer::zero();
    }
    (a - len + 1..=a).fold(Integer::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, r: usize) -> Integer {
    if r > n {
        return Integer::zero();
    }
    falling(n, r) / factorial(r)
}

/// `j · (j − 2) ⋯` down to 1 or 2, with `(−1)!! = 0!! = 1`.
pub fn double_factorial(j: i64) -> Result<Integer> {
    if j < -1 {
        return Err(Error::DomainError(format!("({j})!! is undefined")));
    }
    let mut acc = Integer::one();
    let mut i = j;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// `(2b − 3)!!`, the weight of a block of size `b ≥ 1`.
fn block_weight(b: usize) -> Integer {
    double_factorial(2 * b as i64 - 3).expect("block sizes are positive")
}

/// The block sizes of a set partition of `[n]`, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionShape {
    pub sizes: Vec<usize>,
    pub k: usize,
    pub s: usize,
    /// Number of set partitions of `[n]` with these block sizes.
    pub multiplicity: Integer,
}

impl PartitionShape {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let n: usize = sizes.iter().sum();
        let mut denominator = Integer::one();
        let mut run = 0;
        for (i, &b) in sizes.iter().enumerate() {
            denominator *= factorial(b);
            run = if i > 0 && sizes[i - 1] == b {
                run + 1
            } else {
                1
            };
            denominator *= run;
        }
        Self {
            k: sizes.len(),
            s: sizes.iter().filter(|&&b| b > 1).count(),
            multiplicity: factorial(n) / denominator,
            sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `∏ (2|π_i| − 3)!!`.
    pub fn weight(&self) -> Integer {
        self.sizes.iter().map(|&b| block_weight(b)).product()
    }
}

/// All shapes of set partitions of `[n]`, in reverse lexicographic order
/// of their size sequences (starting from the single block).
pub fn shapes(n: usize) -> Shapes {
    Shapes {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Shapes {
    next: Option<Vec<usize>>,
}

impl Iterator for Shapes {
    type Item = PartitionShape;

    fn next(&mut self) -> Option<PartitionShape> {
        let current = self.next.take()?;
        let mut a = current.clone();
        let mut rest = 0;
        while a.last() == Some(&1) {
            a.pop();
            rest += 1;
        }
        if let Some(last) = a.last_mut() {
            *last -= 1;
            let cap = *last;
            rest += 1;
            while rest > 0 {
                let part = cap.min(rest);
                a.push(part);
                rest -= part;
            }
            self.next = Some(a);
        }
        Some(PartitionShape::new(current))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    B,
    C,
    D,
}

/// `f(π)` for `m` signs, given the number of blocks and nonsingleton blocks.
/// `k = 1` is the single block `[n]`.
pub fn f_counts(family: Family, k: usize, s: usize, m: usize) -> Integer {
    if m == 0 {
        return Integer::zero();
    }
    match family {
        Family::C if m == 1 => Integer::zero(),
        Family::C => falling(k + m - 2, k),
        Family::D | Family::B if k == 1 => Integer::from(m - 1),
        Family::D => (2..=m.min(s))
            .map(|r| binomial(m, r) * falling(k - 2, k - r) * falling(s, r))
            .sum(),
        Family::B => {
            // Terms with r = k + 1 carry the factor k − r + 1 = 0.
            let first: Integer = (2..=m.min(s + 1).min(k))
                .map(|r| {
                    binomial(m - 1, r - 1) * falling(k - 2, k - r) * (k - r + 1) * falling(s, r - 1)
                })
                .sum();
            let second: Integer = (2..=(m - 1).min(s))
                .map(|r| binomial(m - 1, r) * falling(k - 2, k - r) * falling(s, r))
                .sum();
            first + second
        }
    }
}

pub fn f_value(family: Family, shape: &PartitionShape, m: usize) -> Integer {
    f_counts(family, shape.k, shape.s, m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LinearFamily {
    BC,
    D,
}

/// `f(π)` for chains from `0̂` to `[n]_σ` with a single sign.
pub fn f_linear(family: LinearFamily, k: usize, s: usize) -> Integer {
    match family {
        LinearFamily::BC => factorial(k),
        LinearFamily::D if k == 0 => Integer::zero(),
        LinearFamily::D => factorial(k - 1) * s,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    LinearBC,
    LinearD,
    B,
    C,
    D,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::LinearBC,
        Variant::LinearD,
        Variant::B,
        Variant::C,
        Variant::D,
    ];

    pub fn is_linear(self) -> bool {
        matches!(self, Self::LinearBC | Self::LinearD)
    }

    fn f(self, k: usize, s: usize, m: usize) -> Integer {
        match self {
            Self::LinearBC => f_linear(LinearFamily::BC, k, s),
            Self::LinearD => f_linear(LinearFamily::D, k, s),
            Self::B => f_counts(Family::B, k, s, m),
            Self::C => f_counts(Family::C, k, s, m),
            Self::D => f_counts(Family::D, k, s, m),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::LinearBC => "linear-bc",
            Self::LinearD => "linear-d",
            Self::B => "b",
            Self::C => "c",
            Self::D => "d",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear-bc" | "linear-b" | "linear-c" => Ok(Self::LinearBC),
            "linear-d" => Ok(Self::LinearD),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "d" => Ok(Self::D),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

fn check_variant(n: usize, variant: Variant, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    if variant.is_linear() && m != 1 {
        return Err(Error::InvalidParameters(format!(
            "variant {variant} has a single sign, got m = {m}"
        )));
    }
    Ok(())
}

/// The decreasing-chain sum, evaluated shape by shape.
pub fn decreasing_count(n: usize, variant: Variant, m: usize) -> Result<Integer> {
    check_variant(n, variant, m)?;
    Ok(shapes(n)
        .map(|shape| variant.f(shape.k, shape.s, m) * shape.weight() * &shape.multiplicity)
        .sum())
}

/// The same sum aggregated by `(k, s)` instead of by shape.
///
/// Runs in polynomial time, so it reaches `n` in the hundreds where the
/// number of shapes is out of reach.
pub fn decreasing_count_by_block_counts(n: usize, variant: Variant, m: usize) -> Result<Integer> {
    check_variant(n, variant, m)?;
    // big[t][s]: weighted set partitions of t elements into s blocks of size ≥ 2,
    // splitting off the block containing the least element.
    let weights: Vec<Integer> = (0..=n)
        .map(|b| {
            if b == 0 {
                Integer::zero()
            } else {
                block_weight(b)
            }
        })
        .collect();
    let mut pascal: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for t in 1..=n {
        let prev = &pascal[t - 1];
        let row: Vec<Integer> = (0..=t)
            .map(|r| match r {
                0 => Integer::one(),
                r if r == t => Integer::one(),
                r => &prev[r - 1] + &prev[r],
            })
            .collect();
        pascal.push(row);
    }
    let mut big = vec![vec![Integer::zero(); n / 2 + 1]; n + 1];
    big[0][0] = Integer::one();
    for t in 2..=n {
        for s in 1..=t / 2 {
            let mut acc = Integer::zero();
            for j in 2..=t {
                let rest = &big[t - j][s - 1];
                if !rest.is_zero() {
                    acc += &pascal[t - 1][j - 1] * &weights[j] * rest;
                }
            }
            big[t][s] = acc;
        }
    }
    let mut total = Integer::zero();
    for (singletons, choose) in pascal[n].iter().enumerate().take(n + 1) {
        let t = n - singletons;
        for (s, count) in big[t].iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            total += variant.f(singletons + s, s, m) * choose * count;
        }
    }
    Ok(total)
}

/// `μ(0̂, 1̂)` of the lattice of set partitions of `[n]`, from the defining
/// recursion `Σ_π μ(0̂, π) = 0` grouped by shape, since `[0̂, π]` is the
/// product of the partition lattices of its blocks.
pub fn partition_lattice_mobius(n: usize) -> Integer {
    let mut mu = vec![Integer::one(); n.max(1) + 1];
    for size in 2..=n {
        let below: Integer = shapes(size)
            .skip(1)
            .map(|shape| {
                shape
                    .sizes
                    .iter()
                    .map(|&b| mu[b].clone())
                    .product::<Integer>()
                    * &shape.multiplicity
            })
            .sum();
        mu[size] = -below;
    }
    mu[n].clone()
}

/// Bell number of `n`, the total multiplicity of the shapes of `n`.
pub fn bell(n: usize) -> Integer {
    shapes(n).map(|s| s.multiplicity).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableRow {
    A,
    B,
    C,
    D,
}

impl TableRow {
    pub const ALL: [TableRow; 4] = [Self::A, Self::B, Self::C, Self::D];
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            other => Err(Error::Parse(format!("unknown row {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableCase {
    Linear,
    Toric,
    Elliptic,
}

impl TableCase {
    pub const ALL: [TableCase; 3] = [Self::Linear, Self::Toric, Self::Elliptic];

    /// Number of signs of the case.
    pub fn signs(self) -> usize {
        match self {
            Self::Linear => 1,
            Self::Toric => 2,
            Self::Elliptic => 4,
        }
    }
}

impl fmt::Display for TableCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Linear => "linear",
            Self::Toric => "toric",
            Self::Elliptic => "elliptic",
        })
    }
}

impl FromStr for TableCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" => Ok(Self::Linear),
            "toric" => Ok(Self::Toric),
            "elliptic" => Ok(Self::Elliptic),
            other => Err(Error::Parse(format!("unknown case {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    Value(Integer),
    /// No closed formula is known for this cell.
    Unavailable,
    /// The formula leaves the domain of the double factorial.
    Undefined(String),
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value(v) => write!(f, "{v}"),
            Self::Unavailable => f.write_str("unavailable"),
            Self::Undefined(_) => f.write_str("undefined"),
        }
    }
}

/// The closed formula for the number of spheres in one cell of the table.
pub fn table_closed_form(row: TableRow, case: TableCase, n: usize) -> ClosedForm {
    use TableCase::*;
    use TableRow::*;
    let n_i = n as i64;
    let df = |j: i64| double_factorial(j);
    let value = match (row, case) {
        (A, _) => Ok(factorial(n)),
        (B | C, Linear) | (C, Toric) => df(2 * n_i - 1),
        (B, Toric) | (D, Linear) => df(2 * n_i - 3).map(|v| v * (n_i - 1)),
        (D, Toric) => df(2 * n_i - 5).map(|v| v * (n_i * n_i - 3 * n_i + 3)),
        (C, Elliptic) => df(2 * n_i + 1),
        (B | D, Elliptic) => return ClosedForm::Unavailable,
    };
    match value {
        Ok(v) => ClosedForm::Value(v),
        Err(e) => ClosedForm::Undefined(e.to_string()),
    }
}

/// The computed side of a table cell: the decreasing-chain sum for types
/// B/C/D and `|μ|` of the partition lattice on `n + 1` points for type A.
pub fn table_computed(row: TableRow, case: TableCase, n: usize) -> Result<Integer> {
    let variant = match (row, case) {
        (TableRow::A, _) => return Ok(partition_lattice_mobius(n + 1).abs()),
        (TableRow::B | TableRow::C, TableCase::Linear) => Variant::LinearBC,
        (TableRow::D, TableCase::Linear) => Variant::LinearD,
        (TableRow::B, _) => Variant::B,
        (TableRow::C, _) => Variant::C,
        (TableRow::D, _) => Variant::D,
    };
    decreasing_count(n, variant, case.signs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), int(1));
        assert_eq!(double_factorial(0).unwrap(), int(1));
        assert_eq!(double_factorial(5).unwrap(), int(15));
        assert_eq!(double_factorial(7).unwrap(), int(105));
        assert!(matches!(double_factorial(-3), Err(Error::DomainError(_))));
    }

    #[test]
    fn shapes_of_four() {
        let all: Vec<_> = shapes(4).map(|s| (s.sizes, s.multiplicity)).collect();
        assert_eq!(
            all,
            vec![
                (vec![4], int(1)),
                (vec![3, 1], int(4)),
                (vec![2, 2], int(3)),
                (vec![2, 1, 1], int(6)),
                (vec![1, 1, 1, 1], int(1)),
            ]
        );
        let s = PartitionShape::new(vec![1, 2, 2]);
        assert_eq!((s.k, s.s), (3, 2));
    }

    #[test]
    fn bell_numbers() {
        let expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell(n), int(b), "n = {n}");
        }
    }

    #[test]
    fn f_examples() {
        let two = PartitionShape::new(vec![1, 1]);
        assert_eq!(f_value(Family::C, &two, 2), int(2));
        let single = PartitionShape::new(vec![5]);
        for m in 1..6 {
            assert_eq!(f_value(Family::D, &single, m), int(m as i64 - 1));
            assert_eq!(f_value(Family::B, &single, m), int(m as i64 - 1));
        }
        let b = PartitionShape::new(vec![2, 1]);
        assert_eq!(f_value(Family::B, &b, 2), int(1));
        assert_eq!(f_value(Family::C, &b, 1), int(0));
        assert_eq!(f_linear(LinearFamily::BC, 3, 0), int(6));
        assert_eq!(f_linear(LinearFamily::D, 4, 0), int(0));
        assert_eq!(f_linear(LinearFamily::D, 1, 1), int(1));
    }

    #[test]
    fn decreasing_count_examples() {
        assert_eq!(decreasing_count(2, Variant::C, 2).unwrap(), int(3));
        assert_eq!(decreasing_count(3, Variant::B, 2).unwrap(), int(6));
        assert_eq!(decreasing_count(3, Variant::D, 2).unwrap(), int(3));
        assert_eq!(decreasing_count(2, Variant::B, 4).unwrap(), int(3));
        for n in 1..8 {
            assert_eq!(decreasing_count(n, Variant::C, 1).unwrap(), int(0));
        }
        assert!(decreasing_count(2, Variant::LinearD, 2).is_err());
        assert!(decreasing_count(0, Variant::C, 2).is_err());
    }

    #[test]
    fn block_count_aggregation_agrees_with_shapes() {
        for n in 1..=12 {
            for variant in Variant::ALL {
                for m in 1..=5 {
                    if variant.is_linear() && m != 1 {
                        continue;
                    }
                    assert_eq!(
                        decreasing_count(n, variant, m).unwrap(),
                        decreasing_count_by_block_counts(n, variant, m).unwrap(),
                        "n = {n}, {variant}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn large_n_by_block_counts() {
        let n = 200;
        assert_eq!(
            decreasing_count_by_block_counts(n, Variant::C, 4).unwrap(),
            double_factorial(2 * n as i64 + 1).unwrap()
        );
    }

    #[test]
    fn partition_lattice_mobius_values() {
        let expected = [1, -1, 2, -6, 24, -120, 720];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(partition_lattice_mobius(i + 1), int(v));
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            table_closed_form(TableRow::C, TableCase::Elliptic, 3),
            ClosedForm::Value(int(105))
        );
        assert_eq!(
            table_closed_form(TableRow::D, TableCase::Toric, 4),
            ClosedForm::Value(int(21))
        );
        assert_eq!(
            table_closed_form(TableRow::A, TableCase::Linear, 3),
            ClosedForm::Value(int(6))
        );
        assert_eq!(
            table_closed_form(TableRow::B, TableCase::Elliptic, 3),
            ClosedForm::Unavailable
        );
        assert!(matches!(
            table_closed_form(TableRow::D, TableCase::Toric, 1),
            ClosedForm::Undefined(_)
        ));
    }
}
