//! Increasing ordered trees, r-flourishing trees and q-blooming trees.
//!
//! Trees are generated by inserting nodes `1, 2, …, n` one at a time as
//! leaves. A tree with `k` labeled nodes and `q` blooms has `2k − 1 + q`
//! insertion slots (one per gap in every child list), so removing the
//! largest label inverts the insertion and every tree appears exactly once.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{double_factorial, falling};
use crate::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Child {
    Node(usize),
    /// An unlabeled leaf of the root.
    Bloom,
}

/// Rooted tree on labels `0..=n` with ordered child lists; blooms hang
/// from the root only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree {
    children: Vec<Vec<Child>>,
}

impl OrderedTree {
    /// The root alone, with `q` blooms.
    pub fn root(q: usize) -> Self {
        Self {
            children: vec![vec![Child::Bloom; q]],
        }
    }

    /// Number of labeled non-root nodes.
    pub fn n(&self) -> usize {
        self.children.len() - 1
    }

    pub fn blooms(&self) -> usize {
        self.children[0]
            .iter()
            .filter(|c| **c == Child::Bloom)
            .count()
    }

    pub fn children(&self, v: usize) -> &[Child] {
        &self.children[v]
    }

    /// Inserts the next label as a leaf at the given slot, counting the gaps
    /// of each child list in label order.
    fn insert(&mut self, mut slot: usize) {
        let label = self.children.len();
        for list in self.children.iter_mut() {
            if slot <= list.len() {
                list.insert(slot, Child::Node(label));
                self.children.push(Vec::new());
                return;
            }
            slot -= list.len() + 1;
        }
        panic!("insertion slot out of range");
    }

    fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// The root has at least `r` labeled children and none of the first
    /// `r` is a leaf.
    pub fn is_flourishing(&self, r: usize) -> bool {
        let labeled: Vec<usize> = self.children[0]
            .iter()
            .filter_map(|c| match c {
                Child::Node(v) => Some(*v),
                Child::Bloom => None,
            })
            .collect();
        labeled.len() >= r && labeled[..r].iter().all(|&v| !self.is_leaf(v))
    }

    /// Labels increase along every root-to-leaf path.
    pub fn is_increasing(&self) -> bool {
        self.children.iter().enumerate().all(|(v, list)| {
            list.iter().all(|c| match c {
                Child::Node(w) => *w > v,
                Child::Bloom => v == 0,
            })
        })
    }

    /// Preorder encoding such as `0(1(2),*,3)`, with `*` for a bloom.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        self.encode_into(0, &mut out);
        out
    }

    fn encode_into(&self, v: usize, out: &mut String) {
        out.push_str(&v.to_string());
        if self.children[v].is_empty() {
            return;
        }
        out.push('(');
        for (i, c) in self.children[v].iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match c {
                Child::Node(w) => self.encode_into(*w, out),
                Child::Bloom => out.push('*'),
            }
        }
        out.push(')');
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = TreeParser {
            bytes: s.trim().as_bytes(),
            pos: 0,
            lists: HashMap::new(),
        };
        let root = parser.node()?;
        if parser.pos != parser.bytes.len() || root != 0 {
            return Err(Error::Parse(format!("malformed tree {s:?}")));
        }
        let n = parser.lists.len() - 1;
        let mut children = Vec::with_capacity(n + 1);
        for v in 0..=n {
            children.push(
                parser
                    .lists
                    .remove(&v)
                    .ok_or_else(|| Error::Parse(format!("label {v} missing in {s:?}")))?,
            );
        }
        let tree = Self { children };
        if !tree.is_increasing() {
            return Err(Error::Parse(format!("tree {s:?} is not increasing")));
        }
        Ok(tree)
    }
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    lists: HashMap<usize, Vec<Child>>,
}

impl TreeParser<'_> {
    fn error(&self) -> Error {
        Error::Parse(format!("unexpected input at byte {}", self.pos))
    }

    fn node(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let label: usize = std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error())?;
        let mut list = Vec::new();
        if self.bytes.get(self.pos) == Some(&b'(') {
            loop {
                self.pos += 1;
                if self.bytes.get(self.pos) == Some(&b'*') {
                    self.pos += 1;
                    list.push(Child::Bloom);
                } else {
                    list.push(Child::Node(self.node()?));
                }
                match self.bytes.get(self.pos) {
                    Some(b',') => continue,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error()),
                }
            }
        }
        if self.lists.insert(label, list).is_some() {
            return Err(Error::Parse(format!("label {label} repeated")));
        }
        Ok(label)
    }
}

/// Lazy stream of all trees with `n` labeled nodes and `q` blooms, in the
/// order of their insertion sequences.
pub struct TreeStream {
    n: usize,
    q: usize,
    /// Slot chosen for each of the labels `1..=n`.
    choice: Vec<usize>,
    done: bool,
}

impl TreeStream {
    fn new(n: usize, q: usize) -> Self {
        Self {
            n,
            q,
            choice: vec![0; n],
            done: false,
        }
    }

    fn build(&self) -> OrderedTree {
        let mut tree = OrderedTree::root(self.q);
        for &slot in &self.choice {
            tree.insert(slot);
        }
        tree
    }
}

impl Iterator for TreeStream {
    type Item = OrderedTree;

    fn next(&mut self) -> Option<OrderedTree> {
        if self.done {
            return None;
        }
        let tree = self.build();
        // Odometer over the slot choices, last label fastest.
        self.done = true;
        for i in (0..self.n).rev() {
            let slots = 2 * (i + 1) - 1 + self.q;
            if self.choice[i] + 1 < slots {
                self.choice[i] += 1;
                self.done = false;
                break;
            }
            self.choice[i] = 0;
        }
        Some(tree)
    }
}

/// All increasing ordered trees on `n + 1` nodes.
pub fn enumerate_increasing_trees(n: usize) -> TreeStream {
    TreeStream::new(n, 0)
}

/// All r-flourishing trees on `n + 1` nodes.
pub fn enumerate_flourishing(n: usize, r: usize) -> impl Iterator<Item = OrderedTree> {
    enumerate_increasing_trees(n).filter(move |t| t.is_flourishing(r))
}

/// All q-blooming trees on `n + 1` labeled nodes.
pub fn enumerate_blooming(n: usize, q: usize) -> TreeStream {
    TreeStream::new(n, q)
}

/// `(2n − 1)!!`.
pub fn count_increasing(n: usize) -> Integer {
    double_factorial(2 * n as i64 - 1).expect("n ≥ 0")
}

/// Number of r-flourishing trees on `n + 1` nodes, by the recursion
/// `ν(n, r) = ν(n−1, r)(2n − r − 1) + ν(n−2, r−1)(n − 1)r`.
pub fn count_flourishing(n: usize, r: usize) -> Integer {
    let mut memo = HashMap::new();
    flourishing_rec(n, r, &mut memo)
}

fn flourishing_rec(n: usize, r: usize, memo: &mut HashMap<(usize, usize), Integer>) -> Integer {
    if r == 0 {
        return count_increasing(n);
    }
    if n < 2 * r {
        return Integer::zero();
    }
    if let Some(v) = memo.get(&(n, r)) {
        return v.clone();
    }
    let v = flourishing_rec(n - 1, r, memo) * (2 * n - r - 1)
        + flourishing_rec(n - 2, r - 1, memo) * ((n - 1) * r);
    memo.insert((n, r), v.clone());
    v
}

/// `(2n − 2r − 1)!! · (n − r)(n − r − 1)⋯(n − 2r + 1)` for `n ≥ 2r`, else 0.
pub fn flourishing_closed_form(n: usize, r: usize) -> Integer {
    if n < 2 * r {
        return Integer::zero();
    }
    double_factorial(2 * (n - r) as i64 - 1).expect("n ≥ r") * falling(n - r, r)
}

/// `(2n + q − 1)!! / (q − 1)!!`.
pub fn count_blooming(n: usize, q: usize) -> Integer {
    let q = q as i64;
    let top = double_factorial(2 * n as i64 + q - 1).expect("argument ≥ −1");
    let bottom = double_factorial(q - 1).expect("argument ≥ −1");
    if bottom.is_one() {
        top
    } else {
        top / bottom
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn three_node_increasing_trees_in_order() {
        let trees: Vec<String> = enumerate_increasing_trees(2).map(|t| t.encode()).collect();
        assert_eq!(trees, vec!["0(2,1)", "0(1,2)", "0(1(2))"]);
        assert_eq!(enumerate_increasing_trees(0).count(), 1);
        assert_eq!(enumerate_increasing_trees(4).count(), 105);
    }

    #[test]
    fn flourishing_small_cases() {
        let one: Vec<String> = enumerate_flourishing(2, 1).map(|t| t.encode()).collect();
        assert_eq!(one, vec!["0(1(2))"]);
        assert_eq!(count_flourishing(3, 2), int(0));
        assert_eq!(count_flourishing(4, 2), int(6));
        assert_eq!(enumerate_flourishing(4, 2).count(), 6);
        for n in 0..6 {
            assert_eq!(count_flourishing(n, 0), count_increasing(n));
            assert!(enumerate_flourishing(n, 0).eq(enumerate_increasing_trees(n)));
        }
    }

    #[test]
    fn blooming_small_cases() {
        assert_eq!(count_blooming(2, 2), int(15));
        assert_eq!(count_blooming(3, 2), int(105));
        assert_eq!(count_blooming(0, 3), int(1));
        assert_eq!(count_blooming(1, 1), int(2));
        let trees: Vec<String> = enumerate_blooming(1, 1).map(|t| t.encode()).collect();
        assert_eq!(trees, vec!["0(1,*)", "0(*,1)"]);
        assert!(enumerate_blooming(3, 0).eq(enumerate_increasing_trees(3)));
        let fifteen: HashSet<String> = enumerate_blooming(2, 2).map(|t| t.encode()).collect();
        assert_eq!(fifteen.len(), 15);
        for t in ["0(1(2),*,*)", "0(*,1,*,2)", "0(*,*,2,1)"] {
            assert!(fifteen.contains(t), "{t}");
        }
    }

    #[test]
    fn encoding_round_trips() {
        for t in enumerate_blooming(3, 2) {
            let parsed: OrderedTree = t.encode().parse().unwrap();
            assert_eq!(parsed, t);
            assert_eq!(parsed.blooms(), 2);
        }
        assert!("0(2(1))".parse::<OrderedTree>().is_err());
        assert!("0(1(*))".parse::<OrderedTree>().is_err());
        assert!("0(1,1)".parse::<OrderedTree>().is_err());
        assert!("1".parse::<OrderedTree>().is_err());
    }

    #[test]
    fn recursion_matches_closed_form() {
        for n in 0..12 {
            for r in 0..5 {
                assert_eq!(
                    count_flourishing(n, r),
                    flourishing_closed_form(n, r),
                    "{n} {r}"
                );
            }
        }
    }
}
