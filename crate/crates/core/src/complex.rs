//! Order complexes of proper parts and their reduced homology.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::scalar::{Field, Ring};

/// Largest number of nonempty faces built before giving up.
pub const DEFAULT_FACE_CAP: usize = 1_000_000;

/// A simplicial complex stored as all of its nonempty faces, grouped by
/// dimension. Each face lists its vertices (poset indices) bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `−1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Faces of dimension `d ≥ 0`, in canonical order.
    pub fn faces(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// Number of faces of dimension `d`, counting the empty face at `d = −1`.
    pub fn face_count(&self, d: isize) -> usize {
        match d {
            -1 => 1,
            d if d < -1 => 0,
            d => self.faces(d as usize).len(),
        }
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// `Σ_{d ≥ −1} (−1)^d f_d`.
    pub fn reduced_euler_characteristic<R: Ring>(&self) -> R {
        (-1..=self.dimension()).fold(R::zero(), |acc, d| {
            let f = R::from_count(self.face_count(d));
            if d.rem_euclid(2) == 0 {
                acc + f
            } else {
                acc - f
            }
        })
    }
}

/// The order complex of `P ∖ {0̂, 1̂}`: one face per nonempty chain.
pub fn order_complex<P>(poset: &Poset<P>) -> Result<SimplicialComplex> {
    order_complex_with_cap(poset, DEFAULT_FACE_CAP)
}

pub fn order_complex_with_cap<P>(poset: &Poset<P>, cap: usize) -> Result<SimplicialComplex> {
    let top = poset.top().ok_or(Error::NotBounded)?;
    let bottom = poset.bottom();
    let vertices: Vec<usize> = poset
        .by_rank()
        .iter()
        .copied()
        .filter(|&v| v != bottom && v != top)
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut total = 0usize;
    let mut stack: Vec<Vec<usize>> = vertices.iter().rev().map(|&v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        total += 1;
        if total > cap {
            return Err(Error::FaceCapExceeded(cap));
        }
        let last = *chain.last().expect("faces are nonempty");
        for &w in vertices.iter().rev() {
            if w != last && poset.leq(last, w) {
                let mut longer = chain.clone();
                longer.push(w);
                stack.push(longer);
            }
        }
        let d = chain.len() - 1;
        if faces.len() <= d {
            faces.resize_with(d + 1, Vec::new);
        }
        faces[d].push(chain);
    }
    for level in &mut faces {
        level.sort_unstable();
    }
    Ok(SimplicialComplex { vertices, faces })
}

/// Reduced Betti numbers indexed by dimension, starting at `−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBetti(Vec<usize>);

impl ReducedBetti {
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.0.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// `(dimension, betti)` for every dimension from `−1` to the top.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.0.iter().enumerate().map(|(i, &b)| (i as isize - 1, b))
    }

    /// Dimensions with nonzero Betti number.
    pub fn support(&self) -> Vec<isize> {
        self.iter()
            .filter(|&(_, b)| b > 0)
            .map(|(d, _)| d)
            .collect()
    }
}

impl fmt::Display for ReducedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, b)| format!("{d}:{b}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Reduced Betti numbers over the field `F`, from exact ranks of the
/// augmented boundary maps.
pub fn reduced_betti<F: Field>(complex: &SimplicialComplex) -> ReducedBetti {
    let top = complex.dimension();
    // rank of ∂_d : C_d → C_{d−1} for d = 0..=top; ∂_0 maps onto the empty face.
    let ranks: Vec<usize> = (0..=top.max(-1))
        .into_par_iter()
        .map(|d| boundary_rank::<F>(complex, d as usize))
        .collect();
    let rank = |d: isize| -> usize {
        if d < 0 || d > top {
            0
        } else {
            ranks[d as usize]
        }
    };
    let betti = (-1..=top)
        .map(|d| complex.face_count(d) - rank(d) - rank(d + 1))
        .collect();
    ReducedBetti(betti)
}

type SparseVec<F> = Vec<(usize, F)>;

fn boundary_rank<F: Field>(complex: &SimplicialComplex, d: usize) -> usize {
    let faces = complex.faces(d);
    if d == 0 {
        return usize::from(!faces.is_empty());
    }
    let index: HashMap<&[usize], usize> = complex
        .faces(d - 1)
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut pivots: HashMap<usize, SparseVec<F>> = HashMap::new();
    let mut rank = 0;
    for face in faces {
        let mut column: SparseVec<F> = (0..face.len())
            .map(|drop| {
                let facet: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if drop % 2 == 0 { F::one() } else { -F::one() };
                (index[facet.as_slice()], sign)
            })
            .collect();
        column.sort_unstable_by_key(|&(i, _)| i);
        while let Some((low, value)) = column.last().cloned() {
            match pivots.get(&low) {
                Some(pivot) => {
                    let factor = value / pivot.last().expect("pivots are nonempty").1.clone();
                    column = axpy(&column, &factor, pivot);
                }
                None => {
                    pivots.insert(low, column);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a − factor · b` for sorted sparse vectors, dropping zeros.
fn axpy<F: Field>(a: &SparseVec<F>, factor: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(factor.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
