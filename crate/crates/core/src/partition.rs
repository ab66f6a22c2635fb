//! Sign-labeled partitions of `[[n]] = {1, 1̄, …, n, n̄}` and the posets
//! they form.
//!
//! A block is stored as a bitmask: element `v` sits at bit `2(v-1)` and its
//! conjugate `v̄` at bit `2(v-1)+1`. A partition keeps its signed blocks
//! sorted by sign and one normalized member per unsigned conjugate pair,
//! sorted by representative, so structural equality is set equality.
//!
//! Payload strings write `v̄` as `-v`: `{1,-1}:s0|{2,-3}` is the partition
//! with signed block `{1,1̄}` carrying sign 0 and the unsigned pair
//! `{2,3̄} | {2̄,3}`. The formal top element is `top`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest supported `n`; blocks are 64-bit masks over `2n` elements.
pub const MAX_N: usize = 32;

const EVEN: u64 = 0x5555_5555_5555_5555;
const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;

/// A finite, totally ordered set of signs `0..m` with a distinguished sign.
///
/// Signs keep their identity under reordering: the order only affects edge
/// labels, never which partitions exist.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignSet {
    position: Vec<usize>,
    distinguished: usize,
}

impl SignSet {
    /// Natural order `0 < 1 < … < m-1`, distinguished sign `m-1`.
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameters("need at least one sign".into()));
        }
        if m > MAX_N {
            return Err(Error::InvalidParameters(format!("at most {MAX_N} signs")));
        }
        Ok(Self {
            position: (0..m).collect(),
            distinguished: m - 1,
        })
    }

    /// Reorders the signs; `order` lists every sign once, least first.
    pub fn with_order(mut self, order: &[usize]) -> Result<Self> {
        let m = self.size();
        let mut position = vec![usize::MAX; m];
        if order.len() != m {
            return Err(Error::InvalidParameters(format!(
                "sign order must list {m} signs"
            )));
        }
        for (p, &s) in order.iter().enumerate() {
            if s >= m || position[s] != usize::MAX {
                return Err(Error::InvalidParameters(format!(
                    "sign order {order:?} is not a permutation of 0..{m}"
                )));
            }
            position[s] = p;
        }
        self.position = position;
        Ok(self)
    }

    pub fn with_distinguished(mut self, sign: usize) -> Result<Self> {
        if sign >= self.size() {
            return Err(Error::InvalidParameters(format!(
                "distinguished sign {sign} out of range"
            )));
        }
        self.distinguished = sign;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.position.len()
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    /// Position of `sign` in the total order, 0 for the least sign.
    pub fn position(&self, sign: usize) -> usize {
        self.position[sign]
    }

    pub fn less_eq(&self, a: usize, b: usize) -> bool {
        self.position[a] <= self.position[b]
    }

    /// Signs from least to greatest.
    pub fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&s| self.position[s]);
        order
    }
}

/// An element of `[[n]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundElement {
    pub value: usize,
    pub barred: bool,
}

impl GroundElement {
    pub fn new(value: usize, barred: bool) -> Self {
        Self { value, barred }
    }

    pub fn conjugate(self) -> Self {
        Self {
            value: self.value,
            barred: !self.barred,
        }
    }

    fn bit(self) -> u32 {
        (2 * (self.value - 1) + usize::from(self.barred)) as u32
    }

    fn from_bit(bit: u32) -> Self {
        Self {
            value: bit as usize / 2 + 1,
            barred: bit % 2 == 1,
        }
    }

    /// Signed-integer form: `v` or `-v`.
    pub fn as_signed(self) -> i64 {
        if self.barred {
            -(self.value as i64)
        } else {
            self.value as i64
        }
    }
}

/// A subset of `[[n]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Members(u64);

impl Members {
    pub const EMPTY: Members = Members(0);

    pub fn from_elements<I: IntoIterator<Item = GroundElement>>(elements: I) -> Self {
        Members(elements.into_iter().fold(0, |m, e| m | (1 << e.bit())))
    }

    /// `{1, …, n}` together with all their conjugates.
    pub fn full(n: usize) -> Self {
        if n == MAX_N {
            Members(u64::MAX)
        } else {
            Members((1u64 << (2 * n)) - 1)
        }
    }

    fn singleton(value: usize) -> Self {
        Members(1 << (2 * (value - 1)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: GroundElement) -> bool {
        self.0 & (1 << e.bit()) != 0
    }

    pub fn is_subset(self, other: Members) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Members) -> Members {
        Members(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Members) -> bool {
        self.0 & other.0 == 0
    }

    pub fn conjugate(self) -> Members {
        Members(((self.0 & EVEN) << 1) | ((self.0 & ODD) >> 1))
    }

    pub fn is_self_conjugate(self) -> bool {
        self.conjugate() == self
    }

    /// `true` when no element is barred.
    pub fn is_unbarred(self) -> bool {
        self.0 & ODD == 0
    }

    pub fn elements(self) -> impl Iterator<Item = GroundElement> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros();
            bits &= bits - 1;
            Some(GroundElement::from_bit(b))
        })
    }

    /// Least `i` with `i` or `ī` in the set.
    pub fn representative(self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyBlock);
        }
        Ok(self.0.trailing_zeros() as usize / 2 + 1)
    }

    /// `true` when the unbarred representative is a member.
    pub fn is_normalized(self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyBlock);
        }
        Ok(self.0.trailing_zeros().is_multiple_of(2))
    }

    /// The normalized one of `self` and its conjugate.
    fn normalized(self) -> Members {
        if self.0.trailing_zeros().is_multiple_of(2) {
            self
        } else {
            self.conjugate()
        }
    }

    /// Conjugates the single coordinate `value` (swaps `v` and `v̄`).
    pub fn flip(self, value: usize) -> Members {
        let lo = 1u64 << (2 * (value - 1));
        let hi = lo << 1;
        let mut bits = self.0 & !(lo | hi);
        if self.0 & lo != 0 {
            bits |= hi;
        }
        if self.0 & hi != 0 {
            bits |= lo;
        }
        Members(bits)
    }
}

impl fmt::Display for Members {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.as_signed())?;
        }
        f.write_str("}")
    }
}

/// A block with an optional sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub members: Members,
    pub sign: Option<usize>,
}

impl Block {
    pub fn unsigned(members: Members) -> Self {
        Self {
            members,
            sign: None,
        }
    }

    pub fn signed(members: Members, sign: usize) -> Self {
        Self {
            members,
            sign: Some(sign),
        }
    }

    pub fn conjugate(self) -> Self {
        Self {
            members: self.members.conjugate(),
            sign: self.sign,
        }
    }

    pub fn representative(&self) -> Result<usize> {
        self.members.representative()
    }

    pub fn is_normalized(&self) -> Result<bool> {
        if self.sign.is_some() {
            return Err(Error::SignedBlock);
        }
        self.members.is_normalized()
    }
}

/// A sign-labeled partition of `[[n]]` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPartition {
    n: usize,
    signed: Vec<(usize, Members)>,
    pairs: Vec<Members>,
}

impl SignedPartition {
    /// `1 | 1̄ | 2 | 2̄ | … | n | n̄`.
    pub fn bottom(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            signed: Vec::new(),
            pairs: (1..=n).map(Members::singleton).collect(),
        })
    }

    /// Validates and canonicalizes a list of blocks. Unsigned blocks may be
    /// given as either member of their pair, or both.
    pub fn from_blocks(n: usize, blocks: &[Block]) -> Result<Self> {
        check_n(n)?;
        let full = Members::full(n);
        let mut covered = Members::EMPTY;
        let mut signed: Vec<(usize, Members)> = Vec::new();
        let mut pairs: Vec<Members> = Vec::new();
        for block in blocks {
            let m = block.members;
            if m.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if !m.is_subset(full) {
                return Err(Error::MismatchedGroundSet);
            }
            match block.sign {
                Some(sign) => {
                    if !m.is_self_conjugate() {
                        return Err(Error::InvalidParameters(format!(
                            "signed block {m} is not self-conjugate"
                        )));
                    }
                    if signed.iter().any(|&(s, _)| s == sign) {
                        return Err(Error::InvalidParameters(format!("sign s{sign} used twice")));
                    }
                    if !covered.is_disjoint(m) {
                        return Err(Error::InvalidParameters(format!("block {m} overlaps")));
                    }
                    covered = covered.union(m);
                    signed.push((sign, m));
                }
                None => {
                    if !m.is_disjoint(m.conjugate()) {
                        return Err(Error::InvalidParameters(format!(
                            "unsigned block {m} meets its conjugate"
                        )));
                    }
                    let normal = m.normalized();
                    if pairs.contains(&normal) {
                        continue;
                    }
                    let both = m.union(m.conjugate());
                    if !covered.is_disjoint(both) {
                        return Err(Error::InvalidParameters(format!("block {m} overlaps")));
                    }
                    covered = covered.union(both);
                    pairs.push(normal);
                }
            }
        }
        if covered != full {
            return Err(Error::InvalidParameters(
                "blocks do not cover the ground set".into(),
            ));
        }
        Ok(Self::canonical(n, signed, pairs))
    }

    fn canonical(n: usize, mut signed: Vec<(usize, Members)>, mut pairs: Vec<Members>) -> Self {
        signed.sort_unstable_by_key(|&(s, _)| s);
        pairs.sort_unstable_by_key(|m| m.0.trailing_zeros());
        Self { n, signed, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Signed blocks `(sign, members)`, sorted by sign.
    pub fn signed_blocks(&self) -> &[(usize, Members)] {
        &self.signed
    }

    /// Normalized member of every unsigned pair, sorted by representative.
    pub fn normalized_pairs(&self) -> &[Members] {
        &self.pairs
    }

    /// `π_σ`, empty when `σ` is unused.
    pub fn signed_block(&self, sign: usize) -> Members {
        self.signed
            .iter()
            .find(|&&(s, _)| s == sign)
            .map_or(Members::EMPTY, |&(_, m)| m)
    }

    pub fn uses_sign(&self, sign: usize) -> bool {
        self.signed.iter().any(|&(s, _)| s == sign)
    }

    pub fn signs(&self) -> impl Iterator<Item = usize> + '_ {
        self.signed.iter().map(|&(s, _)| s)
    }

    /// Every block, unsigned pairs listed as both members.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out: Vec<Block> = self
            .signed
            .iter()
            .map(|&(s, m)| Block::signed(m, s))
            .collect();
        for &r in &self.pairs {
            out.push(Block::unsigned(r));
            out.push(Block::unsigned(r.conjugate()));
        }
        out
    }

    /// `n - k` with `k` the number of unsigned pairs.
    pub fn rank(&self) -> usize {
        self.n - self.pairs.len()
    }

    /// The block of `self` containing `e`.
    pub fn block_of(&self, e: GroundElement) -> Members {
        for &(_, m) in &self.signed {
            if m.contains(e) {
                return m;
            }
        }
        for &r in &self.pairs {
            if r.contains(e) {
                return r;
            }
            if r.conjugate().contains(e) {
                return r.conjugate();
            }
        }
        unreachable!("blocks cover the ground set")
    }

    /// Applies the bar involution to the single coordinate `value`.
    pub fn flip(&self, value: usize) -> Self {
        let signed = self
            .signed
            .iter()
            .map(|&(s, m)| (s, m.flip(value)))
            .collect();
        let pairs = self
            .pairs
            .iter()
            .map(|m| m.flip(value).normalized())
            .collect();
        Self::canonical(self.n, signed, pairs)
    }

    /// Replaces every block by its conjugate.
    pub fn conjugate(&self) -> Self {
        let signed = self
            .signed
            .iter()
            .map(|&(s, m)| (s, m.conjugate()))
            .collect();
        let pairs = self
            .pairs
            .iter()
            .map(|m| m.conjugate().normalized())
            .collect();
        Self::canonical(self.n, signed, pairs)
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(s, m) in &self.signed {
            if !first {
                f.write_str("|")?;
            }
            first = false;
            write!(f, "{m}:s{s}")?;
        }
        for m in &self.pairs {
            if !first {
                f.write_str("|")?;
            }
            first = false;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An element of a poset of labeled partitions: a partition or the formal top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabeledPartition {
    Partition(SignedPartition),
    Top,
}

impl LabeledPartition {
    pub fn bottom(n: usize) -> Result<Self> {
        Ok(Self::Partition(SignedPartition::bottom(n)?))
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Self::Top)
    }

    pub fn as_partition(&self) -> Option<&SignedPartition> {
        match self {
            Self::Partition(p) => Some(p),
            Self::Top => None,
        }
    }
}

impl From<SignedPartition> for LabeledPartition {
    fn from(p: SignedPartition) -> Self {
        Self::Partition(p)
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Partition(p) => p.fmt(f),
            Self::Top => f.write_str("top"),
        }
    }
}

impl FromStr for LabeledPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "top" {
            return Ok(Self::Top);
        }
        let mut raw: Vec<(Vec<i64>, Option<usize>)> = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            let (body, sign) = match part.split_once(':') {
                Some((body, tag)) => {
                    let sign = tag
                        .trim()
                        .strip_prefix('s')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad sign tag in {part:?}")))?;
                    (body.trim(), Some(sign))
                }
                None => (part, None),
            };
            let inner = body
                .strip_prefix('{')
                .and_then(|b| b.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("bad block {part:?}")))?;
            let values = inner
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .ok()
                        .filter(|&v| v != 0)
                        .ok_or_else(|| Error::Parse(format!("bad element in {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            raw.push((values, sign));
        }
        let n = raw
            .iter()
            .flat_map(|(vs, _)| vs.iter().map(|v| v.unsigned_abs() as usize))
            .max()
            .unwrap_or(0);
        check_n(n).map_err(|e| Error::Parse(e.to_string()))?;
        let blocks: Vec<Block> = raw
            .into_iter()
            .map(|(values, sign)| {
                let members = Members::from_elements(
                    values
                        .into_iter()
                        .map(|v| GroundElement::new(v.unsigned_abs() as usize, v < 0)),
                );
                Block { members, sign }
            })
            .collect();
        let p = SignedPartition::from_blocks(n, &blocks)?;
        // Payloads list one member per unsigned pair.
        let listed_unsigned = s.split('|').filter(|b| !b.contains(':')).count();
        if listed_unsigned != p.pairs.len() {
            return Err(Error::Parse(format!(
                "{s:?} must list exactly one block per unsigned pair"
            )));
        }
        Ok(Self::Partition(p))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::InvalidParameters(format!(
            "n must be in 1..={MAX_N}"
        )))
    } else {
        Ok(())
    }
}

/// `r(B)`: least `i ∈ [n]` with `i` or `ī` in the block.
pub fn representative(block: &Block) -> Result<usize> {
    block.representative()
}

/// Whether an unsigned block contains its unbarred representative.
pub fn is_normalized(block: &Block) -> Result<bool> {
    block.is_normalized()
}

/// The refinement order. Signed blocks must sit inside the signed block of
/// the same sign; unsigned blocks inside any block.
pub fn refines(x: &LabeledPartition, y: &LabeledPartition) -> Result<bool> {
    let (x, y) = match (x, y) {
        (_, LabeledPartition::Top) => return Ok(true),
        (LabeledPartition::Top, _) => return Ok(false),
        (LabeledPartition::Partition(x), LabeledPartition::Partition(y)) => (x, y),
    };
    if x.n != y.n {
        return Err(Error::MismatchedGroundSet);
    }
    for &(sign, block) in &x.signed {
        if !block.is_subset(y.signed_block(sign)) {
            return Ok(false);
        }
    }
    for &r in &x.pairs {
        let witness = r.elements().next().expect("blocks are nonempty");
        if !r.is_subset(y.block_of(witness)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n - k` for a partition with `k` unsigned pairs; `n + 1` for the top.
pub fn rank(x: &LabeledPartition, n: usize) -> usize {
    match x {
        LabeledPartition::Partition(p) => p.rank(),
        LabeledPartition::Top => n + 1,
    }
}

/// Which subposet of `Π_{n,Σ}` to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosetType {
    A,
    B,
    C,
    D,
    /// All of `Π_{n,Σ}`.
    Full,
}

impl PosetType {
    pub const ALL: [PosetType; 5] = [Self::A, Self::B, Self::C, Self::D, Self::Full];

    /// Whether the poset for `m` signs carries the formal top element.
    pub fn has_top(self, m: usize) -> bool {
        match self {
            Self::A => false,
            Self::B | Self::C | Self::D | Self::Full => m >= 2,
        }
    }

    pub fn admits(self, x: &SignedPartition, signs: &SignSet) -> bool {
        match self {
            Self::A => x.signed.is_empty() && x.pairs.iter().all(|r| r.is_unbarred()),
            Self::B => x
                .signed
                .iter()
                .all(|&(s, m)| s == signs.distinguished() || m.len() != 2),
            Self::D => x.signed.iter().all(|&(_, m)| m.len() != 2),
            Self::C | Self::Full => true,
        }
    }
}

impl fmt::Display for PosetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::Full => "Full",
        })
    }
}

impl FromStr for PosetType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "d" => Ok(Self::D),
            "full" => Ok(Self::Full),
            other => Err(Error::Parse(format!("unknown poset type {other:?}"))),
        }
    }
}

/// Every partition one step above `x` in the chosen subposet, in canonical
/// order. Moves: merge two pairs coherently or non-coherently, absorb a pair
/// into a signed block, sign a pair with an unused sign. A partition without
/// unsigned pairs is covered by the top when the poset has one.
pub fn covers_of(x: &LabeledPartition, signs: &SignSet, kind: PosetType) -> Vec<LabeledPartition> {
    let LabeledPartition::Partition(x) = x else {
        return Vec::new();
    };
    if x.pairs.is_empty() {
        return if kind.has_top(signs.size()) {
            vec![LabeledPartition::Top]
        } else {
            Vec::new()
        };
    }
    let mut out: Vec<SignedPartition> = Vec::new();
    let k = x.pairs.len();
    for i in 0..k {
        let r = x.pairs[i];
        let rest = |skip: &[usize]| -> Vec<Members> {
            x.pairs
                .iter()
                .enumerate()
                .filter(|(j, _)| !skip.contains(j))
                .map(|(_, &m)| m)
                .collect()
        };
        for j in (i + 1)..k {
            let r2 = x.pairs[j];
            for merged in [r.union(r2), r.union(r2.conjugate())] {
                let mut pairs = rest(&[i, j]);
                pairs.push(merged.normalized());
                out.push(SignedPartition::canonical(x.n, x.signed.clone(), pairs));
            }
        }
        let doubled = r.union(r.conjugate());
        for sign in 0..signs.size() {
            let mut signed = x.signed.clone();
            match signed.iter_mut().find(|(s, _)| *s == sign) {
                Some((_, block)) => *block = block.union(doubled),
                None => signed.push((sign, doubled)),
            }
            out.push(SignedPartition::canonical(x.n, signed, rest(&[i])));
        }
    }
    let mut out: Vec<LabeledPartition> = out
        .into_iter()
        .filter(|p| kind.admits(p, signs))
        .map(LabeledPartition::Partition)
        .collect();
    sort_canonical(&mut out);
    out.dedup();
    out
}

/// Sorts by (rank, payload string), the top last.
pub fn sort_canonical(items: &mut [LabeledPartition]) {
    items.sort_by_cached_key(|p| match p {
        LabeledPartition::Partition(q) => (0, q.rank(), q.to_string()),
        LabeledPartition::Top => (1, 0, String::new()),
    });
}

/// Builds the poset of the given type by breadth-first closure from `0̂`.
///
/// With one sign the result is the interval `[0̂, [n]_σ]` and has no formal
/// top; type A stops at `[n] | [n̄]`.
/// Elements are indexed by (rank, payload string).
pub fn build_type_poset(
    n: usize,
    signs: &SignSet,
    kind: PosetType,
) -> Result<Poset<LabeledPartition>> {
    build_type_poset_capped(n, signs, kind, usize::MAX)
}

/// [`build_type_poset`] that gives up once more than `cap` elements appear.
pub fn build_type_poset_capped(
    n: usize,
    signs: &SignSet,
    kind: PosetType,
    cap: usize,
) -> Result<Poset<LabeledPartition>> {
    check_n(n)?;
    let bottom = LabeledPartition::bottom(n)?;
    if kind != PosetType::A && signs.size() == 1 {
        let max = SignedPartition::canonical(n, vec![(0, Members::full(n))], Vec::new());
        if !kind.admits(&max, signs) {
            return Err(Error::InvalidParameters(format!(
                "type {kind} with one sign has no maximum [n]_s for n = {n}"
            )));
        }
    }

    let mut seen: HashSet<LabeledPartition> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut edges: Vec<(LabeledPartition, LabeledPartition)> = Vec::new();
    seen.insert(bottom.clone());
    queue.push_back(bottom);
    while let Some(x) = queue.pop_front() {
        for y in covers_of(&x, signs, kind) {
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::ElementCapExceeded(cap));
                }
                queue.push_back(y.clone());
            }
            edges.push((x.clone(), y));
        }
    }

    // Top is normally reached from the partitions without unsigned pairs.
    // When no admissible partition gets there (type D with n = 1) it covers
    // the maximal elements directly.
    if kind.has_top(signs.size()) && !seen.contains(&LabeledPartition::Top) {
        let lower: HashSet<&LabeledPartition> = edges.iter().map(|(x, _)| x).collect();
        let maximal: Vec<LabeledPartition> = seen
            .iter()
            .filter(|p| !lower.contains(p))
            .cloned()
            .collect();
        for x in maximal {
            edges.push((x, LabeledPartition::Top));
        }
        seen.insert(LabeledPartition::Top);
    }

    let mut elements: Vec<LabeledPartition> = seen.into_iter().collect();
    sort_canonical(&mut elements);
    let index: HashMap<&LabeledPartition, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let covers: Vec<(usize, usize)> = edges.iter().map(|(x, y)| (index[x], index[y])).collect();
    drop(index);
    Poset::from_covers(elements, &covers)
}
