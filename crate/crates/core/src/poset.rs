//! Finite ranked posets given by their Hasse diagram.
//!
//! A [`Poset`] is immutable once built. It stores both cover directions, the
//! rank function and, for every element, the bitset of elements above it, so
//! comparability is a constant-time lookup.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Display};
use std::hash::Hash;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::Ring;

#[derive(Debug, Clone)]
pub struct Poset<P> {
    elements: Vec<P>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<usize>,
    bottom: usize,
    top: Option<usize>,
    above: Vec<FixedBitSet>,
    by_rank: Vec<usize>,
}

impl<P: PartialEq> PartialEq for Poset<P> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
            && self.up == other.up
            && self.bottom == other.bottom
            && self.top == other.top
    }
}

/// A saturated chain, listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain(Vec<usize>);

impl Chain {
    pub fn from_nodes(nodes: Vec<usize>) -> Self {
        Self(nodes)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    /// Consecutive pairs of the chain, i.e. the Hasse edges it uses.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<P> Poset<P> {
    /// Builds a poset from its Hasse diagram.
    ///
    /// The minimum must be unique; the maximum, if unique, becomes `top`.
    pub fn from_covers(elements: Vec<P>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::NotBoundedBelow);
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in covers {
            if x >= n {
                return Err(Error::IndexOutOfRange(x));
            }
            if y >= n {
                return Err(Error::IndexOutOfRange(y));
            }
            if x == y {
                return Err(Error::CycleDetected);
            }
            up[x].push(y);
            down[y].push(x);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        // Kahn's algorithm doubles as cycle detection.
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let minimal: Vec<usize> = queue.iter().copied().collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &up[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CycleDetected);
        }
        if minimal.len() != 1 {
            return Err(Error::NotBoundedBelow);
        }
        let bottom = minimal[0];

        let mut rank = vec![0usize; n];
        for &z in &topo {
            if let Some(&w) = down[z].first() {
                rank[z] = rank[w] + 1;
            }
        }
        for x in 0..n {
            for &y in &up[x] {
                if rank[y] != rank[x] + 1 {
                    return Err(Error::NotRanked(x, y));
                }
            }
        }

        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        let top = (maximal.len() == 1).then(|| maximal[0]);

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }

        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by_key(|&i| (rank[i], i));

        Ok(Self {
            elements,
            up,
            down,
            rank,
            bottom,
            top,
            above,
            by_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[P] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &P {
        &self.elements[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Largest rank of any element; equals `rank(top)` when the top exists.
    pub fn poset_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn require_top(&self) -> Result<usize> {
        self.top.ok_or(Error::NotBounded)
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// All Hasse edges `(x, y)` with `x ⋖ y`, ordered by `x` then `y`.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.up[x].binary_search(&y).is_ok()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Indices ordered by rank, ties broken by index.
    pub fn by_rank(&self) -> &[usize] {
        &self.by_rank
    }

    /// Elements `z` with `x <= z`, as a bitset over indices.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }

    fn check_comparable(&self, x: usize, y: usize) -> Result<()> {
        self.check_index(x)?;
        self.check_index(y)?;
        if self.leq(x, y) {
            Ok(())
        } else {
            Err(Error::NotComparable(x, y))
        }
    }

    /// Indices of the closed interval `[x, y]`, ascending.
    pub fn interval_indices(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        self.check_comparable(x, y)?;
        Ok(self.above[x].ones().filter(|&z| self.leq(z, y)).collect())
    }

    pub fn index_map(&self) -> HashMap<&P, usize>
    where
        P: Hash + Eq,
    {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect()
    }

    pub fn position(&self, p: &P) -> Option<usize>
    where
        P: PartialEq,
    {
        self.elements.iter().position(|q| q == p)
    }

    /// Induced subposet on the given indices, which must be closed under
    /// the covers that connect them (e.g. an interval). Order is preserved.
    pub fn induced(&self, indices: &[usize]) -> Result<Poset<P>>
    where
        P: Clone,
    {
        let local: HashMap<usize, usize> =
            indices.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let elements = indices.iter().map(|&g| self.elements[g].clone()).collect();
        let mut covers = Vec::new();
        for (i, &g) in indices.iter().enumerate() {
            for h in &self.up[g] {
                if let Some(&j) = local.get(h) {
                    covers.push((i, j));
                }
            }
        }
        Poset::from_covers(elements, &covers)
    }

    /// The closed interval `[x, y]` as a poset with bottom `x` and top `y`.
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset<P>>
    where
        P: Clone,
    {
        let indices = self.interval_indices(x, y)?;
        self.induced(&indices)
    }

    /// Möbius values `μ(x, z)` for every `z`, `None` where `x ≰ z`.
    pub fn mobius_row<R: Ring>(&self, x: usize) -> Result<Vec<Option<R>>> {
        self.check_index(x)?;
        let n = self.len();
        let mut row: Vec<Option<R>> = vec![None; n];
        let ups = &self.above[x];
        for &z in &self.by_rank {
            if !ups.contains(z) {
                continue;
            }
            if z == x {
                row[z] = Some(R::one());
                continue;
            }
            let mut sum = R::zero();
            for w in ups.ones() {
                if w != z && self.leq(w, z) {
                    sum = sum + row[w].clone().expect("lower element visited first");
                }
            }
            row[z] = Some(-sum);
        }
        Ok(row)
    }

    pub fn mobius<R: Ring>(&self, x: usize, y: usize) -> Result<R> {
        self.check_comparable(x, y)?;
        Ok(self.mobius_row::<R>(x)?[y]
            .clone()
            .expect("comparable pair has a value"))
    }

    /// `χ(t) = Σ_p μ(0̂, p) t^(rk P - rk p)`.
    pub fn characteristic_polynomial<R: Ring>(&self) -> Polynomial<R> {
        let row = self
            .mobius_row::<R>(self.bottom)
            .expect("bottom is a valid index");
        let rk = self.poset_rank();
        let mut poly = Polynomial::zero();
        for (p, value) in row.into_iter().enumerate() {
            if let Some(v) = value {
                poly.add_term((rk - self.rank[p]) as u32, v);
            }
        }
        poly
    }

    /// Every saturated chain from `x` to `y`, depth first with children in
    /// index order. Lazy; nothing is materialized beyond the current path.
    pub fn maximal_chains(&self, x: usize, y: usize) -> Result<MaximalChains<'_, P>> {
        self.check_comparable(x, y)?;
        Ok(MaximalChains {
            poset: self,
            target: y,
            path: vec![x],
            cursor: vec![0],
        })
    }

    /// Counts saturated chains from `x` to `y` without enumerating them.
    pub fn count_maximal_chains<R: Ring>(&self, x: usize, y: usize) -> Result<R> {
        self.check_comparable(x, y)?;
        let mut count: Vec<R> = vec![R::zero(); self.len()];
        count[x] = R::one();
        for &z in &self.by_rank {
            if z == x || !self.leq(x, z) || !self.leq(z, y) {
                continue;
            }
            let mut sum = R::zero();
            for &w in &self.down[z] {
                if self.leq(x, w) {
                    sum = sum + count[w].clone();
                }
            }
            count[z] = sum;
        }
        Ok(count[y].clone())
    }

    /// Returns `(μ(0̂, 1̂), χ̃(Δ(P̄)))`, the latter from alternating face
    /// counts of the order complex of the proper part. P. Hall's theorem says
    /// the two agree.
    pub fn hall_euler_check<R: Ring>(&self) -> Result<(R, R)> {
        let top = self.require_top()?;
        if top == self.bottom {
            return Err(Error::DomainError(
                "one-element poset has no proper part".into(),
            ));
        }
        let mu = self.mobius::<R>(self.bottom, top)?;

        // chains[z][l] = number of chains of length l + 1 in P̄ ending at z.
        let n = self.len();
        let proper = |z: usize| z != self.bottom && z != top;
        let mut chains: Vec<Vec<R>> = vec![Vec::new(); n];
        let mut faces: Vec<R> = Vec::new();
        for &z in &self.by_rank {
            if !proper(z) {
                continue;
            }
            let mut by_len = vec![R::one()];
            for &w in &self.by_rank {
                if w == z || !proper(w) || !self.leq(w, z) {
                    continue;
                }
                for (l, c) in chains[w].iter().enumerate() {
                    if by_len.len() <= l + 1 {
                        by_len.push(R::zero());
                    }
                    by_len[l + 1] = by_len[l + 1].clone() + c.clone();
                }
            }
            for (l, c) in by_len.iter().enumerate() {
                if faces.len() <= l {
                    faces.push(R::zero());
                }
                faces[l] = faces[l].clone() + c.clone();
            }
            chains[z] = by_len;
        }
        let mut euler = -R::one();
        for (dim, f) in faces.into_iter().enumerate() {
            if dim % 2 == 0 {
                euler = euler + f;
            } else {
                euler = euler - f;
            }
        }
        Ok((mu, euler))
    }

    pub fn map<Q>(&self, f: impl FnMut(&P) -> Q) -> Poset<Q> {
        Poset {
            elements: self.elements.iter().map(f).collect(),
            up: self.up.clone(),
            down: self.down.clone(),
            rank: self.rank.clone(),
            bottom: self.bottom,
            top: self.top,
            above: self.above.clone(),
            by_rank: self.by_rank.clone(),
        }
    }
}

pub struct MaximalChains<'a, P> {
    poset: &'a Poset<P>,
    target: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
}

impl<P> Iterator for MaximalChains<'_, P> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        loop {
            let &current = self.path.last()?;
            if current == self.target {
                let chain = Chain(self.path.clone());
                self.path.pop();
                self.cursor.pop();
                return Some(chain);
            }
            let ups = &self.poset.up[current];
            let depth = self.cursor.len() - 1;
            let mut c = self.cursor[depth];
            while c < ups.len() && !self.poset.leq(ups[c], self.target) {
                c += 1;
            }
            if c < ups.len() {
                self.cursor[depth] = c + 1;
                self.path.push(ups[c]);
                self.cursor.push(0);
            } else {
                self.path.pop();
                self.cursor.pop();
            }
        }
    }
}

/// Serialized form: `{"elements": [...], "covers": [[i,j],...], "bottom": i, "top": j|null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub bottom: usize,
    pub top: Option<usize>,
}

impl<P: Display> Poset<P> {
    pub fn to_json_value(&self) -> PosetJson {
        PosetJson {
            elements: self.elements.iter().map(ToString::to_string).collect(),
            covers: self.covers().map(|(x, y)| [x, y]).collect(),
            bottom: self.bottom,
            top: self.top,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("poset json serializes")
    }

    /// Hasse diagram in Graphviz syntax, one `rank=same` group per rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        let mut r = usize::MAX;
        for &i in &self.by_rank {
            if self.rank[i] != r {
                if r != usize::MAX {
                    out.push_str("  }\n");
                }
                r = self.rank[i];
                out.push_str(&format!("  {{ rank=same; // rank {r}\n"));
            }
            out.push_str(&format!(
                "    n{i} [label=\"{}\"];\n",
                escape_dot(&self.elements[i].to_string())
            ));
        }
        out.push_str("  }\n");
        for (x, y) in self.covers() {
            out.push_str(&format!("  n{x} -> n{y};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl<P: FromStr> Poset<P> {
    pub fn from_json_value(value: &PosetJson) -> Result<Self> {
        let elements = value
            .elements
            .iter()
            .map(|s| {
                s.parse::<P>()
                    .map_err(|_| Error::Parse(format!("bad element payload {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let covers: Vec<(usize, usize)> = value.covers.iter().map(|c| (c[0], c[1])).collect();
        let poset = Poset::from_covers(elements, &covers)?;
        if poset.bottom != value.bottom {
            return Err(Error::Parse(format!(
                "declared bottom {} but the minimum is {}",
                value.bottom, poset.bottom
            )));
        }
        if poset.top != value.top {
            return Err(Error::Parse(format!(
                "declared top {:?} but the maximum is {:?}",
                value.top, poset.top
            )));
        }
        Ok(poset)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&value)
    }

    /// Reads back the output of [`Poset::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let mut labels: Vec<(usize, String)> = Vec::new();
        let mut covers = Vec::new();
        for line in text.lines().map(str::trim) {
            if let Some((lhs, rhs)) = line.split_once("->") {
                let x = parse_node_id(lhs.trim())?;
                let y = parse_node_id(rhs.trim().trim_end_matches(';').trim())?;
                covers.push((x, y));
            } else if let Some(rest) = line.strip_prefix('n') {
                let Some((id, attrs)) = rest.split_once(" [label=\"") else {
                    continue;
                };
                let id: usize = id
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad node line {line:?}")))?;
                let label = attrs
                    .strip_suffix("\"];")
                    .ok_or_else(|| Error::Parse(format!("bad node line {line:?}")))?;
                labels.push((id, unescape_dot(label)));
            }
        }
        labels.sort_by_key(|(id, _)| *id);
        if labels.iter().enumerate().any(|(i, (id, _))| i != *id) {
            return Err(Error::Parse("node ids are not 0..n".into()));
        }
        let elements = labels
            .into_iter()
            .map(|(_, s)| {
                s.parse::<P>()
                    .map_err(|_| Error::Parse(format!("bad element payload {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Poset::from_covers(elements, &covers)
    }
}

fn parse_node_id(token: &str) -> Result<usize> {
    token
        .strip_prefix('n')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad node id {token:?}")))
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unescape_dot(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(next) = chars.next() {
                out.push(next);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Labels for display-only posets built in tests and examples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Name(pub String);

impl Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Name {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(Name(s.to_string()))
    }
}

/// Chain poset `0 ⋖ 1 ⋖ … ⋖ len-1`.
pub fn chain_poset(len: usize) -> Poset<Name> {
    let elements = (0..len).map(|i| Name(i.to_string())).collect();
    let covers: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    Poset::from_covers(elements, &covers).expect("a chain is a valid poset")
}

/// Boolean lattice of all subsets of `{0, …, atoms-1}`, indexed by bitmask.
pub fn boolean_lattice(atoms: usize) -> Poset<Name> {
    let size = 1usize << atoms;
    let elements = (0..size).map(|s| Name(format!("{s:0atoms$b}"))).collect();
    let mut covers = Vec::new();
    for s in 0..size {
        for a in 0..atoms {
            if s & (1 << a) == 0 {
                covers.push((s, s | (1 << a)));
            }
        }
    }
    Poset::from_covers(elements, &covers).expect("boolean lattice is a valid poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;
    use num_traits::Zero;

    fn named(names: &[&str]) -> Vec<Name> {
        names.iter().map(|s| Name(s.to_string())).collect()
    }

    #[test]
    fn two_chain_ranks() {
        let p = Poset::from_covers(named(&["a", "b"]), &[(0, 1)]).unwrap();
        assert_eq!((p.rank(0), p.rank(1)), (0, 1));
        assert_eq!((p.bottom(), p.top()), (0, Some(1)));
    }

    #[test]
    fn skipped_rank_is_rejected() {
        let err = Poset::from_covers(named(&["a", "b", "c"]), &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(err, Err(Error::NotRanked(_, _))));
    }

    #[test]
    fn cycles_and_missing_bottom_are_rejected() {
        let cyc = Poset::from_covers(named(&["a", "b", "c"]), &[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(cyc.unwrap_err(), Error::CycleDetected);
        let two_min = Poset::from_covers(named(&["a", "b", "c"]), &[(0, 2), (1, 2)]);
        assert_eq!(two_min.unwrap_err(), Error::NotBoundedBelow);
        let oob = Poset::from_covers(named(&["a"]), &[(0, 3)]);
        assert_eq!(oob.unwrap_err(), Error::IndexOutOfRange(3));
    }

    #[test]
    fn boolean_lattice_ranks() {
        let b = boolean_lattice(2);
        let ranks: Vec<_> = (0..4).map(|i| b.rank(i)).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
        assert_eq!(b.cover_count(), 4);
    }

    #[test]
    fn intervals() {
        let b = boolean_lattice(2);
        let point = b.interval(1, 1).unwrap();
        assert_eq!(point.len(), 1);
        assert_eq!(b.interval(0, 3).unwrap(), b);
        assert_eq!(b.interval(1, 2).unwrap_err(), Error::NotComparable(1, 2));
        let i = b.interval(1, 3).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!((i.rank(0), i.rank(1)), (0, 1));
    }

    #[test]
    fn mobius_small_cases() {
        let c = chain_poset(3);
        assert_eq!(c.mobius::<Integer>(1, 1).unwrap(), Integer::from(1));
        assert_eq!(c.mobius::<Integer>(0, 1).unwrap(), Integer::from(-1));
        assert!(c.mobius::<Integer>(0, 2).unwrap().is_zero());
        let b = boolean_lattice(2);
        assert_eq!(b.mobius::<i64>(0, 3).unwrap(), 1);
        assert_eq!(
            b.mobius::<i64>(2, 1).unwrap_err(),
            Error::NotComparable(2, 1)
        );
    }

    #[test]
    fn partition_lattice_of_three_has_mobius_two() {
        // 0̂ = 1|2|3, atoms 12|3, 13|2, 1|23, top 123.
        let p = Poset::from_covers(
            named(&["1|2|3", "12|3", "13|2", "1|23", "123"]),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(p.mobius::<Integer>(0, 4).unwrap(), Integer::from(2));
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            chain_poset(2)
                .characteristic_polynomial::<Integer>()
                .to_string(),
            "t - 1"
        );
        assert_eq!(
            boolean_lattice(2)
                .characteristic_polynomial::<Integer>()
                .to_string(),
            "t^2 - 2t + 1"
        );
    }

    #[test]
    fn maximal_chains_stream() {
        let c: Vec<_> = chain_poset(2).maximal_chains(0, 1).unwrap().collect();
        assert_eq!(c, vec![Chain(vec![0, 1])]);
        let b: Vec<_> = boolean_lattice(2).maximal_chains(0, 3).unwrap().collect();
        assert_eq!(b, vec![Chain(vec![0, 1, 3]), Chain(vec![0, 2, 3])]);
        let single: Vec<_> = chain_poset(3).maximal_chains(1, 1).unwrap().collect();
        assert_eq!(single, vec![Chain(vec![1])]);
        assert_eq!(
            boolean_lattice(3)
                .count_maximal_chains::<i64>(0, 7)
                .unwrap(),
            6
        );
    }

    #[test]
    fn hall_small_cases() {
        assert_eq!(chain_poset(2).hall_euler_check::<i64>().unwrap(), (-1, -1));
        assert_eq!(
            boolean_lattice(2).hall_euler_check::<i64>().unwrap(),
            (1, 1)
        );
        assert_eq!(
            boolean_lattice(3).hall_euler_check::<i64>().unwrap(),
            (-1, -1)
        );
        assert!(chain_poset(1).hall_euler_check::<i64>().is_err());
    }

    #[test]
    fn json_and_dot_round_trip() {
        let b = boolean_lattice(3);
        let back = Poset::<Name>::from_json(&b.to_json()).unwrap();
        assert_eq!(back, b);
        let dot = b.to_dot();
        assert!(dot.contains("rank=same"));
        assert_eq!(Poset::<Name>::from_dot(&dot).unwrap(), b);
    }

    #[test]
    fn json_rejects_wrong_bottom() {
        let mut v = chain_poset(3).to_json_value();
        v.bottom = 2;
        assert!(matches!(
            Poset::<Name>::from_json_value(&v),
            Err(Error::Parse(_))
        ));
    }
}
