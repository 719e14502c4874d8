//! Colored necklaces and ornaments (multisets of necklaces).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{check_limit, join, BlockSpec, CycleType};

/// Default cap on `n` for exhaustive ornament enumeration.
pub const DEFAULT_ORNAMENT_LIMIT: usize = 10;

/// A directed cycle of colors up to rotation, stored as its lexicographically
/// least rotation. Colors are 1-based block indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    colors: Vec<usize>,
}

/// Fundamental period of a necklace and its repetition count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Period {
    pub period: Vec<usize>,
    pub r: usize,
}

/// Descending-colored vertex counts of a necklace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescendingCounts {
    pub in_period: usize,
    pub total: usize,
}

impl Necklace {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        canonicalize_necklace(&colors)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn fundamental_period(&self) -> Period {
        let m = self.len();
        let p = (1..=m)
            .find(|&p| m % p == 0 && (p..m).all(|i| self.colors[i] == self.colors[i - p]))
            .expect("p = m always works");
        Period {
            period: self.colors[..p].to_vec(),
            r: m / p,
        }
    }

    /// `r` such that the necklace is `r` copies of its fundamental period.
    pub fn repetitions(&self) -> usize {
        self.fundamental_period().r
    }

    pub fn descending_counts(&self, b: &BlockSpec) -> Result<DescendingCounts> {
        self.check_colors(b.k())?;
        let Period { period, r } = self.fundamental_period();
        let in_period = period.iter().filter(|&&c| b.is_descending(c)).count();
        Ok(DescendingCounts {
            in_period,
            total: in_period * r,
        })
    }

    /// Color multiplicities, `content[c - 1]`.
    pub fn content(&self, k: usize) -> Vec<usize> {
        let mut content = vec![0; k];
        for &c in &self.colors {
            content[c - 1] += 1;
        }
        content
    }

    /// `copies` repetitions of this necklace's color sequence.
    pub fn repeated(&self, copies: usize) -> Necklace {
        Necklace {
            colors: self.colors.repeat(copies),
        }
    }

    pub(crate) fn check_colors(&self, k: usize) -> Result<()> {
        match self.colors.iter().find(|&&c| c > k) {
            Some(&color) => Err(Error::ColorOutOfRange { color, k }),
            None => Ok(()),
        }
    }

    pub(crate) fn from_canonical(colors: Vec<usize>) -> Self {
        debug_assert_eq!(min_rotation(&colors), colors);
        Necklace { colors }
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.colors))
    }
}

pub fn canonicalize_necklace(colors: &[usize]) -> Result<Necklace> {
    if colors.is_empty() {
        return Err(Error::Empty);
    }
    if colors.contains(&0) {
        return Err(Error::BadToken("0".into()));
    }
    Ok(Necklace {
        colors: min_rotation(colors),
    })
}

fn min_rotation(colors: &[usize]) -> Vec<usize> {
    let m = colors.len();
    (0..m)
        .map(|s| colors[s..].iter().chain(&colors[..s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// A multiset of necklaces, stored as a list with repetition in canonical order:
/// longest necklaces first, equal lengths by color sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornament {
    necklaces: Vec<Necklace>,
}

impl Ornament {
    pub fn new(mut necklaces: Vec<Necklace>) -> Self {
        necklaces.sort_by(canonical_order);
        Ornament { necklaces }
    }

    pub fn empty() -> Self {
        Ornament {
            necklaces: Vec::new(),
        }
    }

    /// Necklaces in canonical order, repeated according to multiplicity.
    pub fn necklaces(&self) -> &[Necklace] {
        &self.necklaces
    }

    pub fn len(&self) -> usize {
        self.necklaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.necklaces.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.necklaces.iter().map(Necklace::len).sum()
    }

    /// Distinct necklaces with their multiplicities `c(ν)`.
    pub fn multiplicities(&self) -> Vec<(&Necklace, usize)> {
        let mut out: Vec<(&Necklace, usize)> = Vec::new();
        for nk in &self.necklaces {
            match out.last_mut() {
                Some((last, c)) if *last == nk => *c += 1,
                _ => out.push((nk, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, nk: &Necklace) -> usize {
        self.necklaces.iter().filter(|x| *x == nk).count()
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_unsorted(self.necklaces.iter().map(Necklace::len).collect())
    }

    pub fn max_color(&self) -> usize {
        self.necklaces
            .iter()
            .flat_map(|nk| nk.colors.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn is_compatible(&self, b: &BlockSpec) -> bool {
        if self.max_color() > b.k() {
            return false;
        }
        let mut content = vec![0; b.k()];
        for nk in &self.necklaces {
            for &c in &nk.colors {
                content[c - 1] += 1;
            }
        }
        content == b.lengths()
    }

    /// First violated image condition, checked necklace by necklace.
    ///
    /// Condition 1: even descending count in the period forces 1-repeating.
    /// Condition 2: odd descending count in the period allows 1- or 2-repeating.
    /// Condition 3: odd total descending count forces multiplicity 1.
    pub fn theorem1_violation(&self, b: &BlockSpec) -> Result<Option<(u8, Necklace)>> {
        if !self.is_compatible(b) {
            return Err(Error::Incompatible);
        }
        for (nk, mult) in self.multiplicities() {
            let counts = nk.descending_counts(b)?;
            let r = nk.repetitions();
            if counts.in_period % 2 == 0 && r != 1 {
                return Ok(Some((1, nk.clone())));
            }
            if counts.in_period % 2 == 1 && r > 2 {
                return Ok(Some((2, nk.clone())));
            }
            if counts.total % 2 == 1 && mult > 1 {
                return Ok(Some((3, nk.clone())));
            }
        }
        Ok(None)
    }

    /// Whether the ornament lies in the image of the forward map for `b`.
    /// Fails with [`Error::Incompatible`] when the color counts do not match.
    pub fn satisfies_theorem1(&self, b: &BlockSpec) -> Result<bool> {
        Ok(self.theorem1_violation(b)?.is_none())
    }

    /// Same as [`Ornament::satisfies_theorem1`] but reports the violation as an error.
    pub fn check_theorem1(&self, b: &BlockSpec) -> Result<()> {
        match self.theorem1_violation(b)? {
            None => Ok(()),
            Some((condition, necklace)) => Err(Error::ConditionViolated {
                condition,
                necklace,
            }),
        }
    }

    /// A-compatible with every necklace 1-repeating.
    pub fn is_good(&self, b: &BlockSpec) -> bool {
        self.is_compatible(b) && self.necklaces.iter().all(|nk| nk.repetitions() == 1)
    }
}

/// Order of necklaces inside an ornament: length descending, then lexicographic.
pub fn canonical_order(a: &Necklace, b: &Necklace) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for nk in &self.necklaces {
            write!(f, "{nk}")?;
        }
        Ok(())
    }
}

impl FromStr for Ornament {
    type Err = Error;

    /// Parses `(c c …)(c …)…`; necklaces may appear in any order and rotation.
    fn from_str(s: &str) -> Result<Self> {
        let mut necklaces = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::MalformedOrnament(format!("expected `(` at `{rest}`")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::MalformedOrnament("unclosed `(`".into()))?;
            let colors = body[..close]
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&c| c > 0)
                        .ok_or_else(|| Error::BadToken(t.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if colors.is_empty() {
                return Err(Error::MalformedOrnament("empty necklace `()`".into()));
            }
            necklaces.push(Necklace::new(colors)?);
            rest = body[close + 1..].trim_start();
        }
        Ok(Ornament::new(necklaces))
    }
}

/// Which ornaments [`enumerate_ornaments`] yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrnamentFilter {
    /// Every A-compatible ornament.
    All,
    /// Ornaments in the image of the forward map.
    Theorem1,
    /// A-good ornaments.
    Good,
}

impl FromStr for OrnamentFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(OrnamentFilter::All),
            "theorem1" => Ok(OrnamentFilter::Theorem1),
            "good" => Ok(OrnamentFilter::Good),
            other => Err(Error::UnknownFilter(other.to_string())),
        }
    }
}

impl OrnamentFilter {
    fn accepts(self, o: &Ornament, b: &BlockSpec) -> bool {
        match self {
            OrnamentFilter::All => true,
            OrnamentFilter::Theorem1 => o.satisfies_theorem1(b).unwrap_or(false),
            OrnamentFilter::Good => o.is_good(b),
        }
    }
}

/// Every A-compatible ornament passing `filter`, for `n` up to [`DEFAULT_ORNAMENT_LIMIT`].
pub fn enumerate_ornaments(b: &BlockSpec, filter: OrnamentFilter) -> Result<Vec<Ornament>> {
    enumerate_ornaments_with_limit(b, filter, DEFAULT_ORNAMENT_LIMIT)
}

/// Ornaments are built as multisets drawn from the list of all canonical
/// necklaces whose content fits in `A`; necklaces are picked in canonical order
/// with non-decreasing index, so each multiset appears once.
pub fn enumerate_ornaments_with_limit(
    b: &BlockSpec,
    filter: OrnamentFilter,
    limit: usize,
) -> Result<Vec<Ornament>> {
    check_limit(b.n(), limit)?;
    let k = b.k();
    let mut pool = necklaces_within(b.lengths(), b.n());
    pool.sort_by(canonical_order);
    let contents: Vec<Vec<usize>> = pool.iter().map(|nk| nk.content(k)).collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut remaining = b.lengths().to_vec();
    pick(
        0,
        &pool,
        &contents,
        &mut remaining,
        &mut chosen,
        &mut |picked: &[usize]| {
            let o = Ornament {
                necklaces: picked.iter().map(|&i| pool[i].clone()).collect(),
            };
            if filter.accepts(&o, b) {
                out.push(o);
            }
        },
    );
    Ok(out)
}

fn pick(
    from: usize,
    pool: &[Necklace],
    contents: &[Vec<usize>],
    remaining: &mut [usize],
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if remaining.iter().all(|&r| r == 0) {
        emit(chosen);
        return;
    }
    for i in from..pool.len() {
        let fits = contents[i].iter().zip(remaining.iter()).all(|(c, r)| c <= r);
        if !fits {
            continue;
        }
        for (r, c) in remaining.iter_mut().zip(&contents[i]) {
            *r -= c;
        }
        chosen.push(i);
        pick(i, pool, contents, remaining, chosen, emit);
        chosen.pop();
        for (r, c) in remaining.iter_mut().zip(&contents[i]) {
            *r += c;
        }
    }
}

/// Every ornament of cycle type `t` that is A-compatible and passes `filter`,
/// for `n` up to `limit`. Only necklaces whose lengths occur in `t` are built,
/// so this scales much further than [`enumerate_ornaments`].
pub fn enumerate_ornaments_of_type(
    b: &BlockSpec,
    t: &CycleType,
    filter: OrnamentFilter,
    limit: usize,
) -> Result<Vec<Ornament>> {
    check_limit(b.n(), limit)?;
    if t.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: b.n(),
            found: t.n(),
        });
    }
    let k = b.k();
    let max_len = t.parts().first().copied().unwrap_or(0);
    let mut by_len: Vec<Vec<(Necklace, Vec<usize>)>> = vec![Vec::new(); max_len + 1];
    for nk in necklaces_within(b.lengths(), max_len) {
        let content = nk.content(k);
        by_len[nk.len()].push((nk, content));
    }

    fn rec(
        parts: &[usize],
        i: usize,
        from: usize,
        by_len: &[Vec<(Necklace, Vec<usize>)>],
        remaining: &mut [usize],
        chosen: &mut Vec<Necklace>,
        emit: &mut dyn FnMut(&[Necklace]),
    ) {
        if i == parts.len() {
            emit(chosen);
            return;
        }
        let len = parts[i];
        for (j, (nk, content)) in by_len[len].iter().enumerate().skip(from) {
            if content.iter().zip(remaining.iter()).any(|(c, r)| c > r) {
                continue;
            }
            for (r, c) in remaining.iter_mut().zip(content) {
                *r -= c;
            }
            chosen.push(nk.clone());
            let next_from = if parts.get(i + 1) == Some(&len) { j } else { 0 };
            rec(parts, i + 1, next_from, by_len, remaining, chosen, emit);
            chosen.pop();
            for (r, c) in remaining.iter_mut().zip(content) {
                *r += c;
            }
        }
    }

    let mut out = Vec::new();
    let mut remaining = b.lengths().to_vec();
    rec(
        t.parts(),
        0,
        0,
        &by_len,
        &mut remaining,
        &mut Vec::new(),
        &mut |chosen: &[Necklace]| {
            let o = Ornament::new(chosen.to_vec());
            if filter.accepts(&o, b) {
                out.push(o);
            }
        },
    );
    Ok(out)
}

/// All canonical necklaces of length at most `max_len` using color `c` at
/// most `caps[c - 1]` times.
fn necklaces_within(caps: &[usize], max_len: usize) -> Vec<Necklace> {
    fn rec(word: &mut Vec<usize>, left: &mut [usize], max_len: usize, out: &mut Vec<Necklace>) {
        if !word.is_empty() && min_rotation(word) == *word {
            out.push(Necklace::from_canonical(word.clone()));
        }
        if word.len() == max_len {
            return;
        }
        let first = word.first().copied().unwrap_or(1);
        for c in first..=left.len() {
            if left[c - 1] == 0 {
                continue;
            }
            word.push(c);
            if is_prenecklace(word) {
                left[c - 1] -= 1;
                rec(word, left, max_len, out);
                left[c - 1] += 1;
            }
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut caps.to_vec(), max_len, &mut out);
    out
}

/// No suffix of `w` is strictly smaller than the prefix of the same length;
/// prefixes of canonical rotations always pass.
fn is_prenecklace(w: &[usize]) -> bool {
    (1..w.len()).all(|j| w[j..] >= w[..w.len() - j])
}
