//! Permutations in one-line notation, block specifications `(A, S)`, cycle
//! types, and exhaustive generation of block-monotone permutations.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on `n` for exhaustive permutation enumeration.
pub const DEFAULT_PERMUTATION_LIMIT: usize = 12;

/// A bijection of `{1..n}` stored in one-line form: `images[i - 1] = π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&j| self.apply(j)).collect(),
        }
    }

    /// Disjoint cycles, each rotated to start at its minimum, sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.len()).all(|i| self.apply(self.apply(i)) == i)
    }

    /// Cycle notation, e.g. `(1 18 16 8 9)(2 17 10)`.
    pub fn cycle_notation(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            s.push('(');
            s.push_str(&join(&cycle));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.images))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(parse_positive)
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    text.parse()
}

fn parse_positive(tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::BadToken(tok.to_string()))
}

pub(crate) fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Block lengths `(a_1, …, a_k)` together with the set `S` of descending blocks.
///
/// Blocks and colors are 1-based throughout, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSpec {
    lengths: Vec<usize>,
    descending: Vec<bool>,
}

impl BlockSpec {
    /// `descending` lists 1-based block indices; duplicates are ignored.
    pub fn new(lengths: Vec<usize>, descending: &[usize]) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidBlocks("at least one block is required".into()));
        }
        if lengths.iter().any(|&a| a == 0) {
            return Err(Error::InvalidBlocks("block lengths must be positive".into()));
        }
        let k = lengths.len();
        let mut flags = vec![false; k];
        for &i in descending {
            if i == 0 || i > k {
                return Err(Error::InvalidBlocks(format!(
                    "descending index {i} is outside 1..={k}"
                )));
            }
            flags[i - 1] = true;
        }
        Ok(BlockSpec {
            lengths,
            descending: flags,
        })
    }

    /// All blocks ascending.
    pub fn ascending(lengths: Vec<usize>) -> Result<Self> {
        Self::new(lengths, &[])
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn k(&self) -> usize {
        self.lengths.len()
    }

    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// 1-based indices of the descending blocks, ascending.
    pub fn descending_set(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&i| self.is_descending(i)).collect()
    }

    pub fn is_descending(&self, color: usize) -> bool {
        self.descending[color - 1]
    }

    /// Values belonging to block `color`.
    pub fn block_range(&self, color: usize) -> RangeInclusive<usize> {
        let start: usize = self.lengths[..color - 1].iter().sum::<usize>() + 1;
        start..=start + self.lengths[color - 1] - 1
    }

    /// Block index of a value in `1..=n`.
    pub fn block_of(&self, value: usize) -> usize {
        let mut end = 0;
        for (i, &a) in self.lengths.iter().enumerate() {
            end += a;
            if value <= end {
                return i + 1;
            }
        }
        panic!("value {value} outside 1..={}", self.n());
    }

    /// Block index for every value, `colors[v - 1]`.
    pub fn coloring(&self) -> Vec<usize> {
        self.lengths
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat(i + 1).take(a))
            .collect()
    }

    /// Same lengths with `S` replaced by `{1..k} \ S`.
    pub fn complement(&self) -> BlockSpec {
        BlockSpec {
            lengths: self.lengths.clone(),
            descending: self.descending.iter().map(|d| !d).collect(),
        }
    }

    /// Relabels the blocks by `sigma` (1-based images of `1..=k`): new block `j`
    /// has length `a_{σ(j)}` and is descending iff old block `σ(j)` was.
    pub fn permute_blocks(&self, sigma: &[usize]) -> Result<BlockSpec> {
        let k = self.k();
        if sigma.len() != k {
            return Err(Error::SizeMismatch {
                expected: k,
                found: sigma.len(),
            });
        }
        Permutation::new(sigma.to_vec())?;
        Ok(BlockSpec {
            lengths: sigma.iter().map(|&s| self.lengths[s - 1]).collect(),
            descending: sigma.iter().map(|&s| self.descending[s - 1]).collect(),
        })
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lengths: Vec<String> = self.lengths.iter().map(ToString::to_string).collect();
        let desc: Vec<String> = self.descending_set().iter().map(ToString::to_string).collect();
        write!(f, "A=({}) S={{{}}}", lengths.join(","), desc.join(","))
    }
}

/// Cycle type of a permutation: a partition of `n`, parts non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidCycleType("parts must be positive".into()));
        }
        Ok(Self::from_unsorted(parts))
    }

    pub(crate) fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Odd parts pairwise distinct and no part congruent to 2 mod 4.
    pub fn allows_complement(&self) -> bool {
        if self.parts.iter().any(|&p| p % 4 == 2) {
            return false;
        }
        let odd: Vec<usize> = self.parts.iter().copied().filter(|p| p % 2 == 1).collect();
        odd.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Comma- or whitespace-separated parts, optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_positive)
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::InvalidCycleType("no parts".into()));
        }
        CycleType::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(CycleType { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into at most `max_k` positive parts.
pub fn compositions(n: usize, max_k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_k, &mut Vec::new(), &mut out);
    out
}

/// Every `BlockSpec` with lengths in `compositions(n, max_k)` and every `S`.
pub fn block_specs(n: usize, max_k: usize) -> Vec<BlockSpec> {
    let mut out = Vec::new();
    for lengths in compositions(n, max_k) {
        let k = lengths.len();
        for mask in 0u32..(1 << k) {
            let desc: Vec<usize> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            out.push(BlockSpec::new(lengths.clone(), &desc).expect("valid composition"));
        }
    }
    out
}

/// Result of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_as: bool,
    pub is_derangement: bool,
    pub is_involution: bool,
}

pub fn classify(p: &Permutation, b: &BlockSpec) -> Result<Classification> {
    Ok(Classification {
        is_as: is_as_permutation(p, b)?,
        is_derangement: p.is_derangement(),
        is_involution: p.is_involution(),
    })
}

/// Strictly descending in every block of `S`, strictly ascending elsewhere.
pub fn is_as_permutation(p: &Permutation, b: &BlockSpec) -> Result<bool> {
    check_size(b, p.len())?;
    for color in 1..=b.k() {
        let block = b.block_range(color);
        let vals = &p.images()[*block.start() - 1..*block.end()];
        let ok = if b.is_descending(color) {
            vals.windows(2).all(|w| w[0] > w[1])
        } else {
            vals.windows(2).all(|w| w[0] < w[1])
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_size(b: &BlockSpec, found: usize) -> Result<()> {
    if b.n() != found {
        return Err(Error::SizeMismatch {
            expected: b.n(),
            found,
        });
    }
    Ok(())
}

pub(crate) fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(())
}

/// Every `(A, S)`-permutation, with `n` capped at [`DEFAULT_PERMUTATION_LIMIT`].
pub fn enumerate_as_permutations(b: &BlockSpec) -> Result<AsPermutations> {
    enumerate_as_permutations_with_limit(b, DEFAULT_PERMUTATION_LIMIT)
}

pub fn enumerate_as_permutations_with_limit(b: &BlockSpec, limit: usize) -> Result<AsPermutations> {
    check_limit(b.n(), limit)?;
    Ok(AsPermutations::new(b.clone()))
}

/// Stream of `(A, S)`-permutations.
///
/// Each permutation corresponds to an ordered set partition `(V_1, …, V_k)` of
/// `{1..n}` with `|V_i| = a_i`; block `i` lists `V_i` increasing or decreasing.
/// Partitions are visited in lexicographic order of the value sets.
#[derive(Debug, Clone)]
pub struct AsPermutations {
    spec: BlockSpec,
    // pools[i]: values still free when block i is chosen, ascending
    pools: Vec<Vec<usize>>,
    // combos[i]: strictly increasing indices into pools[i]
    combos: Vec<Vec<usize>>,
    done: bool,
}

impl AsPermutations {
    fn new(spec: BlockSpec) -> Self {
        let k = spec.k();
        let mut it = AsPermutations {
            pools: vec![Vec::new(); k],
            combos: vec![Vec::new(); k],
            done: false,
            spec,
        };
        it.pools[0] = (1..=it.spec.n()).collect();
        it.combos[0] = (0..it.spec.lengths()[0]).collect();
        it.reset_after(0);
        it
    }

    /// Resets every block after `level` to its first combination.
    fn reset_after(&mut self, level: usize) {
        for i in level + 1..self.spec.k() {
            self.pools[i] = self.remaining_after(i - 1);
            self.combos[i] = (0..self.spec.lengths()[i]).collect();
        }
    }

    fn remaining_after(&self, level: usize) -> Vec<usize> {
        let pool = &self.pools[level];
        let mut taken = vec![false; pool.len()];
        for &c in &self.combos[level] {
            taken[c] = true;
        }
        pool.iter()
            .zip(taken)
            .filter(|(_, t)| !t)
            .map(|(&v, _)| v)
            .collect()
    }

    fn current(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.spec.n());
        for i in 0..self.spec.k() {
            let mut vals: Vec<usize> = self.combos[i].iter().map(|&c| self.pools[i][c]).collect();
            if self.spec.is_descending(i + 1) {
                vals.reverse();
            }
            images.extend(vals);
        }
        Permutation { images }
    }

    fn advance(&mut self) -> bool {
        // the last block takes whatever remains, so only earlier blocks vary
        for level in (0..self.spec.k().saturating_sub(1)).rev() {
            if next_combination(&mut self.combos[level], self.pools[level].len()) {
                self.reset_after(level);
                return true;
            }
        }
        false
    }
}

impl Iterator for AsPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let p = self.current();
        if !self.advance() {
            self.done = true;
        }
        Some(p)
    }
}

/// Advances a strictly increasing index tuple over `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
