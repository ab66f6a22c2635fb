//! The edge labeling of labeled-partition posets and EL verification.
//!
//! Labels are pairs `(class, index)` ordered lexicographically:
//! coherent merges get `(0, max(i, j))`, non-coherent merges `(2, min(i, j))`
//! with `i, j` the representatives of the merged pairs, signed edges
//! `(1, ·)` as computed by [`label_edge`], and edges into the formal top
//! `(1, 2)`.
//!
//! Verification is label-type generic: [`verify_el`] takes any totally
//! ordered labels attached to the Hasse edges of a bounded poset.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{refines, LabeledPartition, Members, SignSet, SignedPartition};
use crate::poset::{Chain, Poset};
use crate::scalar::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeLabel {
    pub class: u8,
    pub index: usize,
}

impl EdgeLabel {
    pub const fn new(class: u8, index: usize) -> Self {
        Self { class, index }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.class, self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Coherent,
    NonCoherent,
    Signed(usize),
    ToTop,
}

/// What a cover does, plus the representatives of merged pairs.
struct CoverMove {
    kind: EdgeKind,
    reps: Option<(usize, usize)>,
}

fn analyze_cover(x: &LabeledPartition, y: &LabeledPartition) -> Result<CoverMove> {
    let x = match x {
        LabeledPartition::Top => return Err(Error::NotACover),
        LabeledPartition::Partition(x) => x,
    };
    let y = match y {
        // Which partitions the top covers depends on the subposet, so any
        // edge into it is accepted.
        LabeledPartition::Top => {
            return Ok(CoverMove {
                kind: EdgeKind::ToTop,
                reps: None,
            })
        }
        LabeledPartition::Partition(y) => y,
    };
    if x.n() != y.n() || y.rank() != x.rank() + 1 {
        return Err(Error::NotACover);
    }
    let (xl, yl) = (
        LabeledPartition::Partition(x.clone()),
        LabeledPartition::Partition(y.clone()),
    );
    if !refines(&xl, &yl)? {
        return Err(Error::NotACover);
    }
    for sign in y.signs() {
        let before = x.signed_block(sign);
        let after = y.signed_block(sign);
        if before != after && before.is_subset(after) {
            return Ok(CoverMove {
                kind: EdgeKind::Signed(sign),
                reps: None,
            });
        }
    }
    merged_pairs(x, y)
}

fn merged_pairs(x: &SignedPartition, y: &SignedPartition) -> Result<CoverMove> {
    let gone: Vec<Members> = x
        .normalized_pairs()
        .iter()
        .copied()
        .filter(|r| !y.normalized_pairs().contains(r))
        .collect();
    let [r, r2] = gone[..] else {
        return Err(Error::NotACover);
    };
    let i = r.representative()?;
    let j = r2.representative()?;
    let coherent = r.union(r2);
    let kind = if y.normalized_pairs().contains(&coherent) {
        EdgeKind::Coherent
    } else {
        EdgeKind::NonCoherent
    };
    Ok(CoverMove {
        kind,
        reps: Some((i, j)),
    })
}

/// Classifies a cover `x ⋖ y`.
pub fn classify_edge(x: &LabeledPartition, y: &LabeledPartition) -> Result<EdgeKind> {
    analyze_cover(x, y).map(|m| m.kind)
}

/// The label of a cover `x ⋖ y` under the given sign order.
pub fn label_edge(
    x: &LabeledPartition,
    y: &LabeledPartition,
    signs: &SignSet,
) -> Result<EdgeLabel> {
    let mv = analyze_cover(x, y)?;
    Ok(match mv.kind {
        EdgeKind::ToTop => EdgeLabel::new(1, 2),
        EdgeKind::Coherent => {
            let (i, j) = mv.reps.expect("merge has representatives");
            EdgeLabel::new(0, i.max(j))
        }
        EdgeKind::NonCoherent => {
            let (i, j) = mv.reps.expect("merge has representatives");
            EdgeLabel::new(2, i.min(j))
        }
        EdgeKind::Signed(sign) => {
            let x = x.as_partition().expect("signed edges start at a partition");
            EdgeLabel::new(1, signed_label_index(x, sign, signs))
        }
    })
}

/// `|Σ(x)_{≤σ}|` when `σ ∈ Σ(x)`, else `|Σ_{≤σ} ∪ Σ(x)|`. The comparison
/// is weak, so the least used sign gets index 1.
fn signed_label_index(x: &SignedPartition, sign: usize, signs: &SignSet) -> usize {
    let used_at_most = x.signs().filter(|&t| signs.less_eq(t, sign)).count();
    if x.uses_sign(sign) {
        used_at_most
    } else {
        let used_above = x.signs().filter(|&t| !signs.less_eq(t, sign)).count();
        signs.position(sign) + 1 + used_above
    }
}

/// Labels attached to the Hasse edges of one poset, aligned with
/// [`Poset::upper_covers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabels<L> {
    labels: Vec<Vec<Option<L>>>,
}

impl<L: Clone> EdgeLabels<L> {
    pub fn from_fn<P>(
        poset: &Poset<P>,
        mut f: impl FnMut(usize, usize) -> Result<Option<L>>,
    ) -> Result<Self> {
        let mut labels = Vec::with_capacity(poset.len());
        for x in 0..poset.len() {
            let row = poset
                .upper_covers(x)
                .iter()
                .map(|&y| f(x, y))
                .collect::<Result<Vec<_>>>()?;
            labels.push(row);
        }
        Ok(Self { labels })
    }

    /// Label of the cover `x ⋖ y`, if it is a labeled cover.
    pub fn get<P>(&self, poset: &Poset<P>, x: usize, y: usize) -> Option<&L> {
        let pos = poset.upper_covers(x).binary_search(&y).ok()?;
        self.labels[x][pos].as_ref()
    }

    fn at(&self, x: usize, slot: usize) -> Result<&L> {
        self.labels[x][slot]
            .as_ref()
            .ok_or(Error::UnlabeledEdge(x, slot))
    }

    fn check_complete<P>(&self, poset: &Poset<P>) -> Result<()> {
        for (x, row) in self.labels.iter().enumerate() {
            for (slot, l) in row.iter().enumerate() {
                if l.is_none() {
                    return Err(Error::UnlabeledEdge(x, poset.upper_covers(x)[slot]));
                }
            }
        }
        Ok(())
    }

    /// The label word of a chain.
    pub fn word<P>(&self, poset: &Poset<P>, chain: &Chain) -> Result<Vec<L>> {
        chain
            .edges()
            .map(|(x, y)| {
                self.get(poset, x, y)
                    .cloned()
                    .ok_or(Error::UnlabeledEdge(x, y))
            })
            .collect()
    }
}

/// Labels every cover of a labeled-partition poset.
pub fn label_poset(
    poset: &Poset<LabeledPartition>,
    signs: &SignSet,
) -> Result<EdgeLabels<EdgeLabel>> {
    EdgeLabels::from_fn(poset, |x, y| {
        label_edge(poset.element(x), poset.element(y), signs).map(Some)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    NoIncreasingChain,
    MultipleIncreasingChains,
    IncreasingChainNotLexLeast,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NoIncreasingChain => "no increasing chain",
            Self::MultipleIncreasingChains => "multiple increasing chains",
            Self::IncreasingChainNotLexLeast => "increasing chain not lex-least",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalFailure {
    pub bottom: usize,
    pub top: usize,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElCertificate {
    pub verdict: Verdict,
    pub failure: Option<IntervalFailure>,
    pub intervals_checked: u64,
    pub chains_examined: u64,
    /// Set when an interval cap stopped the run before every interval was seen.
    pub truncated: bool,
}

impl ElCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Stop after roughly this many intervals; the certificate is then truncated.
    pub max_intervals: Option<u64>,
    /// Top elements not started by this instant are skipped (truncating).
    pub deadline: Option<std::time::Instant>,
}

/// Increasing chains from one element up to a fixed top, grouped by first label.
#[derive(Debug, Clone)]
struct IncEntry<L> {
    first: Option<L>,
    count: u64,
    next: usize,
    word: Vec<L>,
}

/// Everything known about the intervals `[x, y]` for one fixed `y`.
struct TopSweep<L> {
    inc: Vec<Vec<IncEntry<L>>>,
    lexmin: Vec<Option<Vec<L>>>,
    members: Vec<usize>,
    relaxations: u64,
}

impl<L> TopSweep<L> {
    fn total(&self, x: usize) -> u64 {
        self.inc[x]
            .iter()
            .fold(0u64, |acc, e| acc.saturating_add(e.count))
    }
}

fn sweep_top<P, L: Ord + Clone>(
    poset: &Poset<P>,
    labels: &EdgeLabels<L>,
    y: usize,
) -> Result<TopSweep<L>> {
    let n = poset.len();
    let mut inc: Vec<Vec<IncEntry<L>>> = vec![Vec::new(); n];
    let mut lexmin: Vec<Option<Vec<L>>> = vec![None; n];
    let mut members = Vec::new();
    let mut relaxations = 0u64;
    for &x in poset.by_rank().iter().rev() {
        if !poset.leq(x, y) {
            continue;
        }
        members.push(x);
        if x == y {
            inc[x].push(IncEntry {
                first: None,
                count: 1,
                next: y,
                word: Vec::new(),
            });
            lexmin[x] = Some(Vec::new());
            continue;
        }
        let mut entries: Vec<IncEntry<L>> = Vec::new();
        let mut best: Option<Vec<L>> = None;
        for (slot, &w) in poset.upper_covers(x).iter().enumerate() {
            if !poset.leq(w, y) {
                continue;
            }
            relaxations += 1;
            let label = labels.at(x, slot)?;

            let tail = lexmin[w].as_ref().expect("upper element swept first");
            let better = match &best {
                None => true,
                Some(b) => (&b[0], &b[1..]) > (label, tail.as_slice()),
            };
            if better {
                let mut word = Vec::with_capacity(tail.len() + 1);
                word.push(label.clone());
                word.extend_from_slice(tail);
                best = Some(word);
            }

            let mut count = 0u64;
            let mut least: Option<&Vec<L>> = None;
            for e in &inc[w] {
                if e.first.as_ref().is_none_or(|f| f > label) {
                    count = count.saturating_add(e.count);
                    if least.is_none_or(|l| e.word < *l) {
                        least = Some(&e.word);
                    }
                }
            }
            if count == 0 {
                continue;
            }
            let mut word = Vec::with_capacity(least.map_or(0, Vec::len) + 1);
            word.push(label.clone());
            word.extend_from_slice(least.expect("count > 0 has a word"));
            match entries.iter_mut().find(|e| e.first.as_ref() == Some(label)) {
                Some(e) => {
                    e.count = e.count.saturating_add(count);
                    if word < e.word {
                        e.word = word;
                        e.next = w;
                    }
                }
                None => entries.push(IncEntry {
                    first: Some(label.clone()),
                    count,
                    next: w,
                    word,
                }),
            }
        }
        inc[x] = entries;
        lexmin[x] = best;
    }
    Ok(TopSweep {
        inc,
        lexmin,
        members,
        relaxations,
    })
}

fn interval_verdict<L: Ord>(sweep: &TopSweep<L>, x: usize) -> Option<FailureReason> {
    match sweep.total(x) {
        0 => Some(FailureReason::NoIncreasingChain),
        1 => {
            let e = sweep.inc[x]
                .iter()
                .find(|e| e.count == 1)
                .expect("a single chain lives in one entry");
            if sweep.lexmin[x].as_ref() == Some(&e.word) {
                None
            } else {
                Some(FailureReason::IncreasingChainNotLexLeast)
            }
        }
        _ => Some(FailureReason::MultipleIncreasingChains),
    }
}

/// The unique increasing chain from `x` to the sweep's top, when it exists.
fn increasing_chain<L: Ord>(sweep: &TopSweep<L>, x: usize, y: usize) -> Option<Chain> {
    if sweep.total(x) != 1 {
        return None;
    }
    let mut nodes = vec![x];
    let mut current = x;
    let mut last: Option<&L> = None;
    while current != y {
        let entry = sweep.inc[current]
            .iter()
            .find(|e| e.count > 0 && last.is_none_or(|l| e.first.as_ref().is_none_or(|f| f > l)))?;
        last = entry.first.as_ref();
        current = entry.next;
        nodes.push(current);
    }
    Some(Chain::from_nodes(nodes))
}

/// Ordering key: larger intervals first, then by bottom and top index.
fn failure_key<P>(
    poset: &Poset<P>,
    f: &IntervalFailure,
) -> (std::cmp::Reverse<usize>, usize, usize) {
    (
        std::cmp::Reverse(poset.rank(f.top) - poset.rank(f.bottom)),
        f.bottom,
        f.top,
    )
}

/// Checks that every closed interval has exactly one strictly increasing
/// maximal chain and that its word is lexicographically least.
///
/// Intervals are processed one top element at a time, larger tops first;
/// tops run in parallel. The reported witness is the failing interval of
/// greatest length, ties broken by bottom then top index, independent of
/// scheduling.
pub fn verify_el<P: Sync, L: Ord + Clone + Send + Sync>(
    poset: &Poset<P>,
    labels: &EdgeLabels<L>,
    options: &VerifyOptions,
) -> Result<ElCertificate> {
    poset.require_top()?;
    labels.check_complete(poset)?;
    let mut tops: Vec<usize> = poset.by_rank().iter().rev().copied().collect();
    let mut truncated = false;
    if let Some(cap) = options.max_intervals {
        let mut budget = 0u64;
        let mut keep = 0;
        for &y in &tops {
            if budget >= cap {
                truncated = true;
                break;
            }
            budget += (0..poset.len()).filter(|&x| poset.leq(x, y)).count() as u64;
            keep += 1;
        }
        tops.truncate(keep);
    }

    // Per top: the worst failure, intervals checked, chain relaxations; `None` past the deadline.
    type TopResult = Option<(Option<IntervalFailure>, u64, u64)>;
    let results: Vec<Result<TopResult>> = tops
        .par_iter()
        .map(|&y| {
            if options
                .deadline
                .is_some_and(|d| std::time::Instant::now() >= d)
            {
                return Ok(None);
            }
            let sweep = sweep_top(poset, labels, y)?;
            let mut worst: Option<IntervalFailure> = None;
            for &x in &sweep.members {
                if let Some(reason) = interval_verdict(&sweep, x) {
                    let f = IntervalFailure {
                        bottom: x,
                        top: y,
                        reason,
                    };
                    if worst.is_none_or(|w| failure_key(poset, &f) < failure_key(poset, &w)) {
                        worst = Some(f);
                    }
                }
            }
            Ok(Some((worst, sweep.members.len() as u64, sweep.relaxations)))
        })
        .collect();

    let mut failure: Option<IntervalFailure> = None;
    let mut intervals = 0u64;
    let mut chains = 0u64;
    for r in results {
        let Some((f, i, c)) = r? else {
            truncated = true;
            continue;
        };
        intervals += i;
        chains += c;
        if let Some(f) = f {
            if failure.is_none_or(|w| failure_key(poset, &f) < failure_key(poset, &w)) {
                failure = Some(f);
            }
        }
    }
    Ok(ElCertificate {
        verdict: if failure.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        failure,
        intervals_checked: intervals,
        chains_examined: chains,
        truncated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum InductionFailure {
    /// The ambient increasing chain of `[bottom, top]` passes through `outside`.
    ChainLeavesSubposet { outside: usize },
    /// The ambient labeling is not EL on this interval.
    AmbientNotEl { reason: FailureReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InductionReport {
    pub verdict: Verdict,
    pub witness: Option<(usize, usize, InductionFailure)>,
    pub intervals_checked: u64,
}

impl InductionReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks, for a subposet `Q` of an EL-labeled poset `P`, that every
/// interval of `Q` contains the increasing chain of the same interval of `P`.
/// When this holds, the restricted labeling is an EL-labeling of `Q`.
///
/// `subset` lists indices of `P`. It must contain the bottom and top of `P`
/// and be ranked by the restriction of the rank of `P`.
pub fn verify_subposet_induction<P, L: Ord + Clone>(
    poset: &Poset<P>,
    labels: &EdgeLabels<L>,
    subset: &[usize],
) -> Result<InductionReport> {
    let top = poset.require_top()?;
    labels.check_complete(poset)?;
    let mut inside = vec![false; poset.len()];
    for &q in subset {
        if q >= poset.len() {
            return Err(Error::IndexOutOfRange(q));
        }
        inside[q] = true;
    }
    if !inside[poset.bottom()] || !inside[top] {
        return Err(Error::NotInducedRanked(
            "subposet must contain the bottom and top".into(),
        ));
    }
    check_ranked_restriction(poset, &inside)?;

    let mut tops: Vec<usize> = poset
        .by_rank()
        .iter()
        .rev()
        .copied()
        .filter(|&y| inside[y])
        .collect();
    tops.dedup();
    let mut checked = 0u64;
    for y in tops {
        let sweep = sweep_top(poset, labels, y)?;
        for &x in sweep.members.iter().rev() {
            if !inside[x] {
                continue;
            }
            checked += 1;
            if let Some(reason) = interval_verdict(&sweep, x) {
                return Ok(InductionReport {
                    verdict: Verdict::Fail,
                    witness: Some((x, y, InductionFailure::AmbientNotEl { reason })),
                    intervals_checked: checked,
                });
            }
            let chain = increasing_chain(&sweep, x, y).expect("EL interval has its chain");
            if let Some(&outside) = chain.nodes().iter().find(|&&z| !inside[z]) {
                return Ok(InductionReport {
                    verdict: Verdict::Fail,
                    witness: Some((x, y, InductionFailure::ChainLeavesSubposet { outside })),
                    intervals_checked: checked,
                });
            }
        }
    }
    Ok(InductionReport {
        verdict: Verdict::Pass,
        witness: None,
        intervals_checked: checked,
    })
}

/// The induced order on `inside` must be generated by the covers of `P`
/// between its members.
fn check_ranked_restriction<P>(poset: &Poset<P>, inside: &[bool]) -> Result<()> {
    for x in (0..poset.len()).filter(|&x| inside[x]) {
        // Elements of Q reachable from x through covers of P inside Q.
        let mut reach = vec![false; poset.len()];
        reach[x] = true;
        for &z in poset.by_rank() {
            if !reach[z] {
                continue;
            }
            for &w in poset.upper_covers(z) {
                if inside[w] {
                    reach[w] = true;
                }
            }
        }
        for y in poset.up_set(x).ones() {
            if inside[y] && !reach[y] {
                return Err(Error::NotInducedRanked(format!(
                    "{x} <= {y} is not a chain of covers inside the subposet"
                )));
            }
        }
    }
    Ok(())
}

/// The subposet on `subset` with the inherited labels.
pub fn restrict<P: Clone, L: Clone>(
    poset: &Poset<P>,
    labels: &EdgeLabels<L>,
    subset: &[usize],
) -> Result<(Poset<P>, EdgeLabels<L>)> {
    let sub = poset.induced(subset)?;
    let sub_labels = EdgeLabels::from_fn(&sub, |x, y| {
        labels
            .get(poset, subset[x], subset[y])
            .cloned()
            .map(Some)
            .ok_or(Error::UnlabeledEdge(subset[x], subset[y]))
    })?;
    Ok((sub, sub_labels))
}

/// Number of maximal chains of `[x, y]` whose label word is weakly decreasing.
pub fn decreasing_maximal_chains<P, L: Ord + Clone, R: Ring>(
    poset: &Poset<P>,
    labels: &EdgeLabels<L>,
    x: usize,
    y: usize,
) -> Result<R> {
    if x >= poset.len() || y >= poset.len() {
        return Err(Error::IndexOutOfRange(x.max(y)));
    }
    if !poset.leq(x, y) {
        return Err(Error::NotComparable(x, y));
    }
    // states[z]: (label of the last edge, number of decreasing chains x..z).
    let mut states: Vec<Vec<(L, R)>> = vec![Vec::new(); poset.len()];
    for &z in poset.by_rank() {
        if z == x || !poset.leq(x, z) || !poset.leq(z, y) {
            continue;
        }
        let mut here: Vec<(L, R)> = Vec::new();
        for &w in poset.lower_covers(z) {
            if !poset.leq(x, w) {
                continue;
            }
            let label = labels.get(poset, w, z).ok_or(Error::UnlabeledEdge(w, z))?;
            let count = if w == x {
                R::one()
            } else {
                states[w]
                    .iter()
                    .filter(|(l, _)| l >= label)
                    .fold(R::zero(), |acc, (_, c)| acc + c.clone())
            };
            if count.is_zero() {
                continue;
            }
            match here.iter_mut().find(|(l, _)| l == label) {
                Some((_, c)) => *c = c.clone() + count,
                None => here.push((label.clone(), count)),
            }
        }
        states[z] = here;
    }
    if x == y {
        return Ok(R::one());
    }
    Ok(states[y]
        .iter()
        .fold(R::zero(), |acc, (_, c)| acc + c.clone()))
}

/// Which label words a [`LabeledChains`] stream keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotone {
    /// Weakly decreasing words.
    Decreasing,
    /// Strictly increasing words.
    Increasing,
}

/// Lazy depth-first stream of maximal chains of `[x, y]` whose words are
/// monotone; branches are pruned as soon as monotonicity breaks.
pub struct LabeledChains<'a, P, L> {
    poset: &'a Poset<P>,
    labels: &'a EdgeLabels<L>,
    target: usize,
    mode: Monotone,
    path: Vec<usize>,
    cursor: Vec<usize>,
}

pub fn monotone_chains<'a, P, L: Ord + Clone>(
    poset: &'a Poset<P>,
    labels: &'a EdgeLabels<L>,
    x: usize,
    y: usize,
    mode: Monotone,
) -> Result<LabeledChains<'a, P, L>> {
    if x >= poset.len() || y >= poset.len() {
        return Err(Error::IndexOutOfRange(x.max(y)));
    }
    if !poset.leq(x, y) {
        return Err(Error::NotComparable(x, y));
    }
    Ok(LabeledChains {
        poset,
        labels,
        target: y,
        mode,
        path: vec![x],
        cursor: vec![0],
    })
}

impl<P, L: Ord + Clone> Iterator for LabeledChains<'_, P, L> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        loop {
            let &current = self.path.last()?;
            if current == self.target {
                let chain = Chain::from_nodes(self.path.clone());
                self.path.pop();
                self.cursor.pop();
                return Some(chain);
            }
            let depth = self.path.len() - 1;
            let previous = (depth > 0).then(|| {
                let a = self.path[depth - 1];
                self.labels
                    .get(self.poset, a, current)
                    .expect("labels complete")
            });
            let ups = self.poset.upper_covers(current);
            let mut c = self.cursor[depth];
            let mut chosen = None;
            while c < ups.len() {
                let w = ups[c];
                c += 1;
                if !self.poset.leq(w, self.target) {
                    continue;
                }
                let label = self.labels.at(current, c - 1).expect("labels complete");
                let ok = match (previous, self.mode) {
                    (None, _) => true,
                    (Some(p), Monotone::Decreasing) => label <= p,
                    (Some(p), Monotone::Increasing) => label > p,
                };
                if ok {
                    chosen = Some(w);
                    break;
                }
            }
            self.cursor[depth] = c;
            match chosen {
                Some(w) => {
                    self.path.push(w);
                    self.cursor.push(0);
                }
                None => {
                    self.path.pop();
                    self.cursor.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{build_type_poset, PosetType};
    use crate::poset::{boolean_lattice, chain_poset};
    use crate::Integer;

    fn lp(s: &str) -> LabeledPartition {
        s.parse().unwrap()
    }

    #[test]
    fn classification() {
        let b = LabeledPartition::bottom(2).unwrap();
        assert_eq!(classify_edge(&b, &lp("{1,2}")).unwrap(), EdgeKind::Coherent);
        assert_eq!(
            classify_edge(&b, &lp("{1,-2}")).unwrap(),
            EdgeKind::NonCoherent
        );
        assert_eq!(
            classify_edge(&b, &lp("{1,-1}:s3|{2}")).unwrap(),
            EdgeKind::Signed(3)
        );
        assert_eq!(
            classify_edge(&lp("{1,-1}:s0|{2,-2}:s1"), &LabeledPartition::Top).unwrap(),
            EdgeKind::ToTop
        );
        assert_eq!(
            classify_edge(&b, &lp("{1,2,-1,-2}:s0")).unwrap_err(),
            Error::NotACover
        );
        assert_eq!(
            classify_edge(&LabeledPartition::Top, &b).unwrap_err(),
            Error::NotACover
        );
        assert_eq!(
            classify_edge(&lp("{1,2}"), &lp("{1,-2}")).unwrap_err(),
            Error::NotACover
        );
    }

    #[test]
    fn unsigned_labels() {
        let signs = SignSet::new(2).unwrap();
        let b = LabeledPartition::bottom(3).unwrap();
        assert_eq!(
            label_edge(&b, &lp("{1,2}|{3}"), &signs).unwrap(),
            EdgeLabel::new(0, 2)
        );
        assert_eq!(
            label_edge(&b, &lp("{1,-2}|{3}"), &signs).unwrap(),
            EdgeLabel::new(2, 1)
        );
        assert_eq!(
            label_edge(&lp("{1,2}|{3}"), &lp("{1,2,-3}"), &signs).unwrap(),
            EdgeLabel::new(2, 1)
        );
        assert_eq!(
            label_edge(&lp("{1}|{2,3}"), &lp("{1,2,3}"), &signs).unwrap(),
            EdgeLabel::new(0, 2)
        );
    }

    #[test]
    fn signed_labels() {
        let signs = SignSet::new(2).unwrap();
        let b = LabeledPartition::bottom(2).unwrap();
        assert_eq!(
            label_edge(&b, &lp("{1,-1}:s0|{2}"), &signs).unwrap(),
            EdgeLabel::new(1, 1)
        );
        assert_eq!(
            label_edge(&b, &lp("{1,-1}:s1|{2}"), &signs).unwrap(),
            EdgeLabel::new(1, 2)
        );
        // σ ∈ Σ(x): count used signs up to σ.
        let x = lp("{1,-1}:s1|{2}");
        assert_eq!(
            label_edge(&x, &lp("{1,-1,2,-2}:s1"), &signs).unwrap(),
            EdgeLabel::new(1, 1)
        );
        // σ ∉ Σ(x), a larger sign already used: counted in.
        assert_eq!(
            label_edge(&x, &lp("{1,-1}:s1|{2,-2}:s0"), &signs).unwrap(),
            EdgeLabel::new(1, 2)
        );
        // Reversing the order swaps the roles.
        let rev = SignSet::new(2).unwrap().with_order(&[1, 0]).unwrap();
        assert_eq!(
            label_edge(&b, &lp("{1,-1}:s1|{2}"), &rev).unwrap(),
            EdgeLabel::new(1, 1)
        );
        assert_eq!(
            label_edge(&lp("{1,-1}:s0|{2,-2}:s1"), &LabeledPartition::Top, &signs).unwrap(),
            EdgeLabel::new(1, 2)
        );
    }

    #[test]
    fn increasing_chain_poset_passes() {
        let c = chain_poset(4);
        let labels = EdgeLabels::from_fn(&c, |x, _| Ok(Some(x))).unwrap();
        let cert = verify_el(&c, &labels, &VerifyOptions::default()).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.intervals_checked, 10);
    }

    #[test]
    fn constant_labels_on_boolean_lattice_fail() {
        let b = boolean_lattice(2);
        let labels = EdgeLabels::from_fn(&b, |_, _| Ok(Some((0, 1)))).unwrap();
        let cert = verify_el(&b, &labels, &VerifyOptions::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
        assert_eq!(
            cert.failure,
            Some(IntervalFailure {
                bottom: 0,
                top: 3,
                reason: FailureReason::NoIncreasingChain
            })
        );
    }

    #[test]
    fn two_increasing_chains_fail() {
        let b = boolean_lattice(2);
        // 0→1 (1), 1→3 (2), 0→2 (1), 2→3 (2): two increasing chains.
        let labels = EdgeLabels::from_fn(&b, |x, _| Ok(Some(if x == 0 { 1 } else { 2 }))).unwrap();
        let cert = verify_el(&b, &labels, &VerifyOptions::default()).unwrap();
        assert_eq!(
            cert.failure.map(|f| f.reason),
            Some(FailureReason::MultipleIncreasingChains)
        );
    }

    #[test]
    fn increasing_but_not_least_fails() {
        let b = boolean_lattice(2);
        // 0→1 (2), 1→3 (3) increasing; 0→2 (1), 2→3 (0) decreasing but lex smaller.
        let labels = EdgeLabels::from_fn(&b, |x, y| {
            Ok(Some(match (x, y) {
                (0, 1) => 2,
                (1, 3) => 3,
                (0, 2) => 1,
                _ => 0,
            }))
        })
        .unwrap();
        let cert = verify_el(&b, &labels, &VerifyOptions::default()).unwrap();
        assert_eq!(
            cert.failure.map(|f| f.reason),
            Some(FailureReason::IncreasingChainNotLexLeast)
        );
    }

    #[test]
    fn unlabeled_edges_are_reported() {
        let b = boolean_lattice(2);
        let labels = EdgeLabels::from_fn(&b, |x, _| Ok((x != 2).then_some(1))).unwrap();
        assert_eq!(
            verify_el(&b, &labels, &VerifyOptions::default()).unwrap_err(),
            Error::UnlabeledEdge(2, 3)
        );
    }

    #[test]
    fn linear_c2_counts() {
        let signs = SignSet::new(1).unwrap();
        let p = build_type_poset(2, &signs, PosetType::C).unwrap();
        let labels = label_poset(&p, &signs).unwrap();
        assert!(verify_el(&p, &labels, &VerifyOptions::default())
            .unwrap()
            .passed());
        let top = p.top().unwrap();
        let d: Integer = decreasing_maximal_chains(&p, &labels, p.bottom(), top).unwrap();
        assert_eq!(d, Integer::from(3));
        let streamed: Vec<_> = monotone_chains(&p, &labels, p.bottom(), top, Monotone::Decreasing)
            .unwrap()
            .collect();
        assert_eq!(streamed.len(), 3);
        let inc: Vec<_> = monotone_chains(&p, &labels, p.bottom(), top, Monotone::Increasing)
            .unwrap()
            .collect();
        assert_eq!(inc.len(), 1);
    }

    #[test]
    fn interval_cap_truncates() {
        let signs = SignSet::new(2).unwrap();
        let p = build_type_poset(2, &signs, PosetType::C).unwrap();
        let labels = label_poset(&p, &signs).unwrap();
        let cert = verify_el(
            &p,
            &labels,
            &VerifyOptions {
                max_intervals: Some(1),
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        assert!(cert.truncated);
        assert!(cert.passed());
        assert_eq!(cert.intervals_checked, p.len() as u64);
    }

    #[test]
    fn subposet_induction_detects_a_missing_midpoint() {
        let c = boolean_lattice(2);
        let labels = EdgeLabels::from_fn(&c, |x, y| {
            Ok(Some(if (x, y) == (0, 1) || (x, y) == (2, 3) {
                1
            } else {
                2
            }))
        })
        .unwrap();
        assert!(verify_el(&c, &labels, &VerifyOptions::default())
            .unwrap()
            .passed());
        let whole: Vec<usize> = (0..4).collect();
        assert!(verify_subposet_induction(&c, &labels, &whole)
            .unwrap()
            .passed());
        // The increasing chain of [0, 3] is 0 → 1 → 3; dropping 1 breaks it.
        let report = verify_subposet_induction(&c, &labels, &[0, 2, 3]).unwrap();
        assert_eq!(
            report.witness,
            Some((0, 3, InductionFailure::ChainLeavesSubposet { outside: 1 }))
        );
        assert!(matches!(
            verify_subposet_induction(&c, &labels, &[0, 3]),
            Err(Error::NotInducedRanked(_))
        ));
        assert!(matches!(
            verify_subposet_induction(&c, &labels, &[1, 3]),
            Err(Error::NotInducedRanked(_))
        ));
    }
}
