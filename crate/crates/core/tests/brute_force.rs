//! The type posets against a direct enumeration: every set partition of
//! `[[n]]` closed under conjugation, every injective sign assignment, the
//! type conditions applied literally, and the order computed from block
//! containment.

use std::collections::{BTreeSet, HashMap};

use sigma_posets::partition::{
    build_type_poset, Block, GroundElement, LabeledPartition, Members, PosetType, SignSet,
    SignedPartition,
};

/// Ground element `i` is `⌊i/2⌋ + 1`, barred when `i` is odd.
fn ground(i: usize) -> GroundElement {
    GroundElement::new(i / 2 + 1, i % 2 == 1)
}

fn conjugate_index(i: usize) -> usize {
    i ^ 1
}

fn set_partitions(size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for i in 0..size {
        let mut next = Vec::new();
        for p in out {
            for b in 0..=p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                if b == q.len() {
                    q.push(vec![i]);
                } else {
                    q[b].push(i);
                }
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Raw {
    blocks: Vec<(BTreeSet<usize>, Option<usize>)>,
}

impl Raw {
    fn leq(&self, other: &Raw) -> bool {
        self.blocks.iter().all(|(b, s)| {
            other.blocks.iter().any(|(c, t)| {
                b.is_subset(c)
                    && match s {
                        Some(_) => s == t,
                        None => true,
                    }
            })
        })
    }

    fn pairs(&self) -> usize {
        self.blocks.iter().filter(|(_, s)| s.is_none()).count() / 2
    }

    fn admitted(&self, kind: PosetType, distinguished: usize) -> bool {
        let signed = || self.blocks.iter().filter_map(|(b, s)| s.map(|s| (b, s)));
        match kind {
            PosetType::A => {
                signed().next().is_none()
                    && self.blocks.iter().all(|(b, _)| {
                        b.iter().all(|&i| i % 2 == 0) || b.iter().all(|&i| i % 2 == 1)
                    })
            }
            PosetType::B => signed().all(|(b, s)| b.len() != 2 || s == distinguished),
            PosetType::D => signed().all(|(b, _)| b.len() != 2),
            PosetType::C | PosetType::Full => true,
        }
    }

    fn to_labeled(&self, n: usize) -> LabeledPartition {
        let blocks: Vec<Block> = self
            .blocks
            .iter()
            .map(|(b, s)| Block {
                members: Members::from_elements(b.iter().map(|&i| ground(i))),
                sign: *s,
            })
            .collect();
        SignedPartition::from_blocks(n, &blocks).unwrap().into()
    }
}

fn all_raw(n: usize, m: usize) -> Vec<Raw> {
    let mut out = Vec::new();
    for p in set_partitions(2 * n) {
        let sets: Vec<BTreeSet<usize>> = p.into_iter().map(|b| b.into_iter().collect()).collect();
        let conj = |b: &BTreeSet<usize>| -> BTreeSet<usize> {
            b.iter().map(|&i| conjugate_index(i)).collect()
        };
        if !sets.iter().all(|b| sets.contains(&conj(b))) {
            continue;
        }
        let self_conj: Vec<usize> = (0..sets.len())
            .filter(|&i| sets[i] == conj(&sets[i]))
            .collect();
        for signs in injective(self_conj.len(), m) {
            let blocks = sets
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let sign = self_conj.iter().position(|&j| j == i).map(|k| signs[k]);
                    (b.clone(), sign)
                })
                .collect();
            out.push(Raw { blocks });
        }
    }
    out
}

fn injective(len: usize, m: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in injective(len - 1, m) {
        for s in 0..m {
            if !rest.contains(&s) {
                let mut v = rest.clone();
                v.push(s);
                out.push(v);
            }
        }
    }
    out
}

fn check(n: usize, m: usize, kind: PosetType) {
    let signs = SignSet::new(m).unwrap();
    let raw: Vec<Raw> = all_raw(n, m)
        .into_iter()
        .filter(|r| r.admitted(kind, signs.distinguished()))
        .collect();
    let poset = match build_type_poset(n, &signs, kind) {
        Ok(p) => p,
        Err(e) => {
            // One sign and type D at n = 1: [1]_s is not admissible.
            assert_eq!((n, m, kind), (1, 1, PosetType::D), "{e}");
            assert!(raw.iter().all(|r| r.blocks.len() > 1));
            return;
        }
    };
    let with_top = kind != PosetType::A && m >= 2;
    let ctx = format!("n={n} m={m} {kind}");

    let expected: BTreeSet<String> = raw.iter().map(|r| r.to_labeled(n).to_string()).collect();
    let actual: BTreeSet<String> = poset
        .elements()
        .iter()
        .filter(|p| !p.is_top())
        .map(ToString::to_string)
        .collect();
    assert_eq!(actual, expected, "{ctx}");
    assert_eq!(
        poset.top().is_some() && poset.element(poset.top().unwrap()).is_top(),
        with_top,
        "{ctx}"
    );

    let index = poset.index_map();
    let at: Vec<usize> = raw.iter().map(|r| index[&r.to_labeled(n)]).collect();
    let mut expected_covers: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, x) in raw.iter().enumerate() {
        assert_eq!(poset.rank(at[i]), n - x.pairs(), "{ctx} rank of {x:?}");
        for (j, y) in raw.iter().enumerate() {
            if i == j || !x.leq(y) {
                continue;
            }
            let between = raw.iter().any(|z| z != x && z != y && x.leq(z) && z.leq(y));
            if !between {
                expected_covers.insert((at[i], at[j]));
            }
        }
    }
    if with_top {
        let top = poset.top().unwrap();
        for (i, x) in raw.iter().enumerate() {
            if raw.iter().all(|y| y == x || !x.leq(y)) {
                expected_covers.insert((at[i], top));
            }
        }
    }
    let actual_covers: BTreeSet<(usize, usize)> = poset.covers().collect();
    assert_eq!(actual_covers, expected_covers, "{ctx}");
}

#[test]
fn type_posets_match_direct_enumeration() {
    for n in 1..=3 {
        for m in 1..=4 {
            for kind in PosetType::ALL {
                check(n, m, kind);
            }
        }
    }
}

#[test]
fn set_partition_counts_are_bell_numbers() {
    let bell = [1, 1, 2, 5, 15, 52, 203];
    for (size, &b) in bell.iter().enumerate() {
        assert_eq!(set_partitions(size).len(), b);
    }
}

#[test]
fn full_poset_sizes() {
    let mut sizes = HashMap::new();
    for n in 1..=3 {
        for m in 1..=3 {
            let p = build_type_poset(n, &SignSet::new(m).unwrap(), PosetType::Full).unwrap();
            sizes.insert((n, m), p.len() - usize::from(m >= 2));
        }
    }
    for (&(n, m), &size) in &sizes {
        assert_eq!(size, all_raw(n, m).len(), "n={n} m={m}");
    }
    // With one sign these are the Dowling numbers for a group of order 2.
    assert_eq!(sizes[&(1, 1)], 2);
    assert_eq!(sizes[&(2, 1)], 6);
    assert_eq!(sizes[&(3, 1)], 24);
}
