//! The cycle-preserving map from `(A, S)`-permutations to ornaments, its
//! inverse, and the derived correspondences with good ornaments.
//!
//! The forward map writes a permutation in cycle notation and replaces every
//! element by the index of the block containing it. Recovering the permutation
//! relies on signed walks: walking around a necklace from a vertex `v`, step `i`
//! contributes its color `w_i` negated once for every descending-colored vertex
//! among `w_0..w_{i-1}`. Sorting vertices lexicographically by signed walk gives
//! the only labeling that can yield an `(A, S)`-permutation. Vertices with equal
//! walks form packets, packets form orbits under the successor map, and inside
//! each packet successors are assigned order-preserving for ascending colors and
//! order-reversing for descending ones.

use std::cmp::Ordering;

use num::integer::lcm;

use crate::error::{Error, Result};
use crate::ornament::{canonical_order, Necklace, Ornament};
use crate::perm::{check_size, join, BlockSpec, Permutation};

/// Replaces every element of every cycle of `p` by its block index.
///
/// Total on all permutations of size `n`; injectivity holds on `(A, S)`-permutations.
pub fn forward(p: &Permutation, b: &BlockSpec) -> Result<Ornament> {
    check_size(b, p.len())?;
    let necklaces = p
        .cycles()
        .into_iter()
        .map(|cycle| {
            Necklace::new(cycle.iter().map(|&x| b.block_of(x)).collect())
                .expect("cycles are non-empty")
        })
        .collect();
    Ok(Ornament::new(necklaces))
}

/// The cycles of `p`, each started at its smallest element and listed by that
/// element, with every element replaced by its block index: `(1 2 2 1 2)(1 2 2)`.
///
/// Same multiset of necklaces as [`forward`], but in cycle order rather than
/// canonical form.
pub fn colored_cycle_notation(p: &Permutation, b: &BlockSpec) -> Result<String> {
    check_size(b, p.len())?;
    let mut s = String::new();
    for cycle in p.cycles() {
        let colors: Vec<usize> = cycle.iter().map(|&x| b.block_of(x)).collect();
        s.push('(');
        s.push_str(&join(&colors));
        s.push(')');
    }
    Ok(s)
}

/// [`forward`] together with the original element sitting at every vertex:
/// `labels[j][pos]` is the element at position `pos` of necklace `j` of the result.
pub fn forward_with_labels(p: &Permutation, b: &BlockSpec) -> Result<(Ornament, Vec<Vec<usize>>)> {
    check_size(b, p.len())?;
    let mut pairs: Vec<(Necklace, Vec<usize>)> = p
        .cycles()
        .into_iter()
        .map(|cycle| {
            let colors: Vec<usize> = cycle.iter().map(|&x| b.block_of(x)).collect();
            let nk = Necklace::new(colors.clone()).expect("cycles are non-empty");
            let m = cycle.len();
            let shift = (0..m)
                .find(|&s| (0..m).all(|i| colors[(s + i) % m] == nk.colors()[i]))
                .expect("canonical form is a rotation");
            let labels = (0..m).map(|i| cycle[(shift + i) % m]).collect();
            (nk, labels)
        })
        .collect();
    pairs.sort_by(|x, y| canonical_order(&x.0, &y.0));
    let (necklaces, labels): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    Ok((Ornament::new(necklaces), labels))
}

/// A vertex of an ornament: necklace index (counting multiplicity, canonical
/// order) and position within that necklace's canonical color sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    pub necklace: usize,
    pub position: usize,
}

impl VertexRef {
    pub fn new(necklace: usize, position: usize) -> Self {
        VertexRef { necklace, position }
    }

    pub fn successor(self, o: &Ornament) -> VertexRef {
        let m = o.necklaces()[self.necklace].len();
        VertexRef::new(self.necklace, (self.position + 1) % m)
    }
}

/// Every vertex of `o` in `(necklace, position)` order.
pub fn vertices(o: &Ornament) -> Vec<VertexRef> {
    o.necklaces()
        .iter()
        .enumerate()
        .flat_map(|(j, nk)| (0..nk.len()).map(move |pos| VertexRef::new(j, pos)))
        .collect()
}

/// One period of a signed walk. The walk repeats these terms forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedWalk {
    terms: Vec<i64>,
}

impl SignedWalk {
    pub fn period_len(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, i: usize) -> i64 {
        self.terms[i % self.terms.len()]
    }

    pub fn prefix(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.term(i)).collect()
    }

    /// Color of the starting vertex.
    pub fn color(&self) -> usize {
        self.terms[0].unsigned_abs() as usize
    }

    /// Lexicographic comparison of the infinite sequences. Two periodic
    /// sequences agreeing on `lcm` of their periods agree everywhere.
    pub fn compare(&self, other: &SignedWalk) -> Ordering {
        let len = lcm(self.period_len(), other.period_len());
        (0..len)
            .map(|i| self.term(i).cmp(&other.term(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

/// Sign bookkeeping for signed walks.
///
/// Only [`SignRule::BeforeStep`] is correct; the other variant exists so that
/// the verification suites can be shown to catch a broken convention.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignRule {
    /// `r_i` counts descending vertices among `w_0..w_{i-1}`.
    #[default]
    BeforeStep,
    /// Mutant: `r_i` also counts `w_i`.
    ThroughStep,
}

pub fn signed_walk(v: VertexRef, o: &Ornament, b: &BlockSpec) -> Result<SignedWalk> {
    signed_walk_with(v, o, b, SignRule::BeforeStep)
}

#[doc(hidden)]
pub fn signed_walk_with(v: VertexRef, o: &Ornament, b: &BlockSpec, rule: SignRule) -> Result<SignedWalk> {
    let nk = o
        .necklaces()
        .get(v.necklace)
        .filter(|nk| v.position < nk.len())
        .ok_or_else(|| Error::Precondition(format!("vertex {v:?} is not in the ornament")))?;
    nk.check_colors(b.k())?;
    let colors = nk.colors();
    let m = colors.len();
    let descending = colors.iter().filter(|&&c| b.is_descending(c)).count();
    let period = if descending % 2 == 0 { m } else { 2 * m };

    let mut flips = 0usize;
    let mut terms = Vec::with_capacity(period);
    for i in 0..period {
        let c = colors[(v.position + i) % m];
        if rule == SignRule::ThroughStep && b.is_descending(c) {
            flips += 1;
        }
        terms.push(if flips % 2 == 0 { c as i64 } else { -(c as i64) });
        if rule == SignRule::BeforeStep && b.is_descending(c) {
            flips += 1;
        }
    }
    Ok(SignedWalk { terms })
}

/// Orders two vertices by signed walk; `Equal` means they share a packet.
pub fn compare_vertices(u: VertexRef, v: VertexRef, o: &Ornament, b: &BlockSpec) -> Result<Ordering> {
    Ok(signed_walk(u, o, b)?.compare(&signed_walk(v, o, b)?))
}

/// Vertices with identical signed walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packet {
    pub vertices: Vec<VertexRef>,
    pub walk: SignedWalk,
}

impl Packet {
    pub fn color(&self) -> usize {
        self.walk.color()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Packets closed under the successor-packet map, listed from the packet with
/// the smallest walk and then following successors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub packets: Vec<Packet>,
}

impl Orbit {
    /// Number of packets.
    pub fn x(&self) -> usize {
        self.packets.len()
    }

    /// Common packet size.
    pub fn y(&self) -> usize {
        self.packets[0].len()
    }

    /// Number of descending-colored packets.
    pub fn d(&self, b: &BlockSpec) -> usize {
        self.packets
            .iter()
            .filter(|p| b.is_descending(p.color()))
            .count()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.packets.iter().map(Packet::color).collect()
    }
}

/// The set of orbits of an ornament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub orbits: Vec<Orbit>,
}

/// Packets sorted by walk, with the index of each packet's successor.
struct PacketTable {
    packets: Vec<Packet>,
    successor: Vec<usize>,
}

fn packet_table(o: &Ornament, b: &BlockSpec, rule: SignRule) -> Result<PacketTable> {
    let mut walks = vertices(o)
        .into_iter()
        .map(|v| Ok((v, signed_walk_with(v, o, b, rule)?)))
        .collect::<Result<Vec<_>>>()?;
    // ties inside a packet fall back to (necklace, position)
    walks.sort_by(|(u, wu), (v, wv)| wu.compare(wv).then(u.cmp(v)));

    let mut packets: Vec<Packet> = Vec::new();
    let mut packet_of = std::collections::HashMap::new();
    for (v, walk) in walks {
        match packets.last_mut() {
            Some(last) if last.walk.compare(&walk).is_eq() => last.vertices.push(v),
            _ => packets.push(Packet {
                vertices: vec![v],
                walk,
            }),
        }
        packet_of.insert(v, packets.len() - 1);
    }
    let successor = packets
        .iter()
        .map(|p| packet_of[&p.vertices[0].successor(o)])
        .collect();
    Ok(PacketTable { packets, successor })
}

/// Groups vertices into packets and packets into orbits.
pub fn build_template(o: &Ornament, b: &BlockSpec) -> Result<Template> {
    if !o.is_compatible(b) {
        return Err(Error::Incompatible);
    }
    let table = packet_table(o, b, SignRule::BeforeStep)?;
    let mut seen = vec![false; table.packets.len()];
    let mut orbits = Vec::new();
    for start in 0..table.packets.len() {
        if seen[start] {
            continue;
        }
        let mut packets = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            packets.push(table.packets[i].clone());
            i = table.successor[i];
        }
        orbits.push(Orbit { packets });
    }
    Ok(Template { orbits })
}

/// Cycle lengths contributed by an orbit of `x` packets of size `y` with `d`
/// descending packets, longest first.
pub fn cycle_lengths(x: usize, y: usize, d: usize) -> Vec<usize> {
    if d % 2 == 0 {
        vec![x; y]
    } else {
        let mut out = vec![2 * x; y / 2];
        if y % 2 == 1 {
            out.push(x);
        }
        out
    }
}

pub fn orbit_cycle_structure(orbit: &Orbit, b: &BlockSpec) -> Vec<usize> {
    cycle_lengths(orbit.x(), orbit.y(), orbit.d(b))
}

/// The unique `(A, S)`-permutation mapping to `o`.
///
/// Fails with [`Error::Incompatible`] or [`Error::ConditionViolated`] (naming
/// condition 1, 2 or 3) when `o` is outside the image.
pub fn inverse(o: &Ornament, b: &BlockSpec) -> Result<Permutation> {
    inverse_with(o, b, SignRule::BeforeStep)
}

#[doc(hidden)]
pub fn inverse_with(o: &Ornament, b: &BlockSpec, rule: SignRule) -> Result<Permutation> {
    o.check_theorem1(b)?;
    let table = packet_table(o, b, rule)?;

    let mut first_label = Vec::with_capacity(table.packets.len());
    let mut next = 1;
    for p in &table.packets {
        first_label.push(next);
        next += p.len();
    }

    let mut images = vec![0; b.n()];
    for (i, p) in table.packets.iter().enumerate() {
        let succ = table.successor[i];
        let size = p.len();
        if table.packets[succ].len() != size {
            return Err(Error::Precondition("packet sizes differ along an orbit".into()));
        }
        let reverse = b.is_descending(p.color());
        for j in 0..size {
            let target = if reverse { size - 1 - j } else { j };
            images[first_label[i] + j - 1] = first_label[succ] + target;
        }
    }
    Permutation::new(images)
}

/// Splits every 2-repeating necklace into two copies of its fundamental period.
pub fn to_good_ornament(o: &Ornament, b: &BlockSpec) -> Result<Ornament> {
    o.check_theorem1(b)?;
    let mut out = Vec::with_capacity(o.len());
    for nk in o.necklaces() {
        let period = nk.fundamental_period();
        if period.r == 2 {
            let half = Necklace::new(period.period).expect("non-empty period");
            out.push(half.clone());
            out.push(half);
        } else {
            out.push(nk.clone());
        }
    }
    Ok(Ornament::new(out))
}

/// Inverse of [`to_good_ornament`]: copies of a necklace with an odd number of
/// descending vertices are merged pairwise into 2-repeating necklaces.
pub fn from_good_ornament(o: &Ornament, b: &BlockSpec) -> Result<Ornament> {
    if !o.is_good(b) {
        return Err(Error::Precondition("ornament is not A-good".into()));
    }
    let mut out = Vec::with_capacity(o.len());
    for (nk, count) in o.multiplicities() {
        if nk.descending_counts(b)?.total % 2 == 0 {
            out.extend(std::iter::repeat(nk.clone()).take(count));
            continue;
        }
        let doubled = nk.repeated(2);
        out.extend(std::iter::repeat(doubled).take(count / 2));
        if count % 2 == 1 {
            out.push(nk.clone());
        }
    }
    Ok(Ornament::new(out))
}

/// Permutation to A-good ornament.
pub fn auxiliary_forward(p: &Permutation, b: &BlockSpec) -> Result<Ornament> {
    to_good_ornament(&forward(p, b)?, b)
}

/// A-good ornament to `(A, S)`-permutation.
pub fn auxiliary_inverse(o: &Ornament, b: &BlockSpec) -> Result<Permutation> {
    inverse(&from_good_ornament(o, b)?, b)
}

/// Whether an A-good ornament corresponds to a derangement: no ascending-colored
/// 1-cycles and an even number of 1-cycles of each descending color.
pub fn derangement_ornament_check(o: &Ornament, b: &BlockSpec) -> Result<bool> {
    if !o.is_good(b) {
        return Err(Error::Precondition("ornament is not A-good".into()));
    }
    let mut fixed = vec![0usize; b.k()];
    for nk in o.necklaces().iter().filter(|nk| nk.len() == 1) {
        fixed[nk.colors()[0] - 1] += 1;
    }
    Ok(fixed.iter().enumerate().all(|(i, &count)| {
        if b.is_descending(i + 1) {
            count % 2 == 0
        } else {
            count == 0
        }
    }))
}

/// Merges pairs of equal descending 1-cycles into monochromatic 2-cycles.
pub fn pair_fixed_cycles(o: &Ornament, b: &BlockSpec) -> Result<Ornament> {
    if !derangement_ornament_check(o, b)? {
        return Err(Error::Precondition(
            "ornament has an ascending 1-cycle or an odd number of descending 1-cycles".into(),
        ));
    }
    let mut out = Vec::with_capacity(o.len());
    for (nk, count) in o.multiplicities() {
        if nk.len() == 1 {
            out.extend(std::iter::repeat(nk.repeated(2)).take(count / 2));
        } else {
            out.extend(std::iter::repeat(nk.clone()).take(count));
        }
    }
    Ok(Ornament::new(out))
}

/// Inverse of [`pair_fixed_cycles`]: each monochromatic descending 2-cycle
/// becomes two 1-cycles.
pub fn split_fixed_pairs(o: &Ornament, b: &BlockSpec) -> Result<Ornament> {
    if !is_derangement_ornament(o, b) {
        return Err(Error::Precondition("ornament is not a derangement ornament".into()));
    }
    let mut out = Vec::with_capacity(o.len() + 4);
    for nk in o.necklaces() {
        if nk.len() == 2 && nk.repetitions() == 2 {
            let single = Necklace::new(vec![nk.colors()[0]]).expect("non-empty");
            out.push(single.clone());
            out.push(single);
        } else {
            out.push(nk.clone());
        }
    }
    Ok(Ornament::new(out))
}

/// A-compatible, no 1-cycles, every necklace 1- or 2-repeating, and the only
/// 2-repeating necklaces are monochromatic 2-cycles of a descending color.
pub fn is_derangement_ornament(o: &Ornament, b: &BlockSpec) -> bool {
    o.is_compatible(b)
        && o.necklaces().iter().all(|nk| match nk.repetitions() {
            _ if nk.len() == 1 => false,
            1 => true,
            2 => nk.len() == 2 && b.is_descending(nk.colors()[0]),
            _ => false,
        })
}

/// `(A, S)`-derangement to derangement ornament.
pub fn derangement_forward(p: &Permutation, b: &BlockSpec) -> Result<Ornament> {
    pair_fixed_cycles(&auxiliary_forward(p, b)?, b)
}

pub fn derangement_inverse(o: &Ornament, b: &BlockSpec) -> Result<Permutation> {
    auxiliary_inverse(&split_fixed_pairs(o, b)?, b)
}

/// Sends an `(A, S)`-permutation to an `(A, {1..k} \ S)`-permutation with the
/// same cycle type.
///
/// Applies when the cycle type has pairwise distinct odd parts and no part
/// congruent to 2 mod 4 (the ornament itself is reinterpreted under the
/// complement), or when `p` is an involution (its good ornament is
/// reinterpreted). Applying the map again with the complemented spec returns `p`.
pub fn complement_transfer(p: &Permutation, b: &BlockSpec) -> Result<Permutation> {
    if !crate::perm::is_as_permutation(p, b)? {
        return Err(Error::Precondition(format!("{p} is not an (A,S)-permutation for {b}")));
    }
    let flipped = b.complement();
    if p.cycle_type().allows_complement() {
        inverse(&forward(p, b)?, &flipped)
    } else if p.is_involution() {
        auxiliary_inverse(&auxiliary_forward(p, b)?, &flipped)
    } else {
        Err(Error::Precondition(format!(
            "cycle type {} admits no complement transfer and {p} is not an involution",
            p.cycle_type()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_as_permutations;

    const RUNNING: &str = "18 17 15 14 13 12 11 9 1 2 3 4 5 6 7 8 10 16";
    const EXAMPLE: &str = "(1 2 2 1 2)(1 2 2)(1 2 1 2)(1 2 1 2)(1 2)";

    fn spec(lengths: &[usize], s: &[usize]) -> BlockSpec {
        BlockSpec::new(lengths.to_vec(), s).unwrap()
    }

    fn orn(s: &str) -> Ornament {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Elements of the running permutation sitting at the vertices labelled A..R.
    const LETTERS: [usize; 18] = [1, 18, 16, 8, 9, 2, 17, 10, 3, 15, 7, 11, 4, 14, 6, 12, 5, 13];

    /// The vertex of the canonical ornament carrying the element named `c`.
    fn letter(c: char) -> VertexRef {
        let target = LETTERS[c as usize - 'A' as usize];
        let (_, labels) = forward_with_labels(&perm(RUNNING), &spec(&[8, 10], &[1])).unwrap();
        for (j, row) in labels.iter().enumerate() {
            if let Some(pos) = row.iter().position(|&x| x == target) {
                return VertexRef::new(j, pos);
            }
        }
        unreachable!("every element lies on a cycle")
    }

    #[test]
    fn forward_examples() {
        let b = spec(&[8, 10], &[1]);
        assert_eq!(forward(&perm(RUNNING), &b).unwrap(), orn(EXAMPLE));
        assert_eq!(colored_cycle_notation(&perm(RUNNING), &b).unwrap(), EXAMPLE);
        assert_eq!(
            forward(&perm(RUNNING), &b).unwrap().to_string(),
            "(1 2 1 2 2)(1 2 1 2)(1 2 1 2)(1 2 2)(1 2)"
        );
        assert_eq!(
            forward(&Permutation::identity(4), &spec(&[4], &[1])).unwrap().to_string(),
            "(1)(1)(1)(1)"
        );
        assert_eq!(
            forward(&perm("3 4 1 2"), &spec(&[2, 2], &[])).unwrap().to_string(),
            "(1 2)(1 2)"
        );
        assert!(matches!(
            forward(&perm("2 1"), &b),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn forward_labels_follow_the_cycles() {
        let b = spec(&[8, 10], &[1]);
        let (o, labels) = forward_with_labels(&perm(RUNNING), &b).unwrap();
        assert_eq!(o, orn(EXAMPLE));
        assert_eq!(labels[0], vec![8, 9, 1, 18, 16]);
        assert_eq!(labels[3], vec![2, 17, 10]);
        assert_eq!(labels[4], vec![5, 13]);
        let p = perm(RUNNING);
        for (nk, row) in o.necklaces().iter().zip(&labels) {
            for (pos, &x) in row.iter().enumerate() {
                assert_eq!(b.block_of(x), nk.colors()[pos]);
                assert_eq!(p.apply(x), row[(pos + 1) % row.len()]);
            }
        }
    }

    #[test]
    fn signed_walk_examples() {
        let b = spec(&[8, 10], &[1]);
        let o = orn(EXAMPLE);
        let w = |c| signed_walk(letter(c), &o, &b).unwrap().prefix(7);
        assert_eq!(w('A'), vec![1, -2, -2, -1, 2, 1, -2]);
        assert_eq!(w('G'), vec![2, 2, 1, -2, -2, -1, 2]);
        assert_eq!(signed_walk(letter('A'), &o, &b).unwrap().period_len(), 5);
        assert_eq!(signed_walk(letter('I'), &o, &b).unwrap().period_len(), 4);
        assert_eq!(signed_walk(letter('F'), &o, &b).unwrap().period_len(), 6);

        let fixed = orn("(1)");
        let walk = signed_walk(VertexRef::new(0, 0), &fixed, &spec(&[1], &[])).unwrap();
        assert_eq!(walk.prefix(5), vec![1; 5]);
        assert!(signed_walk(VertexRef::new(0, 1), &fixed, &spec(&[1], &[])).is_err());
    }

    #[test]
    fn vertex_comparisons() {
        let b = spec(&[8, 10], &[1]);
        let o = orn(EXAMPLE);
        let cmp = |u, v| compare_vertices(letter(u), letter(v), &o, &b).unwrap();
        assert_eq!(cmp('C', 'E'), Ordering::Greater);
        assert_eq!(cmp('E', 'B'), Ordering::Less);
        assert_eq!(cmp('A', 'D'), Ordering::Less);
        assert_eq!(cmp('I', 'Q'), Ordering::Equal);
    }

    #[test]
    fn template_of_running_example() {
        let b = spec(&[8, 10], &[1]);
        let t = build_template(&orn(EXAMPLE), &b).unwrap();
        let orbit = t
            .orbits
            .iter()
            .find(|orb| orb.packets.iter().any(|p| p.vertices.contains(&letter('I'))))
            .unwrap();
        assert_eq!((orbit.x(), orbit.y(), orbit.d(&b)), (2, 5, 1));
        let as_letters = |p: &Packet| -> String {
            let mut s: Vec<char> = "ABCDEFGHIJKLMNOPQR"
                .chars()
                .filter(|&c| p.vertices.contains(&letter(c)))
                .collect();
            s.sort();
            s.into_iter().collect()
        };
        assert_eq!(as_letters(&orbit.packets[0]), "IKMOQ");
        assert_eq!(as_letters(&orbit.packets[1]), "JLNPR");
        assert_eq!(orbit_cycle_structure(orbit, &b), vec![4, 4, 2]);
        // the 5-cycle and 3-cycle are orbits of singleton packets
        assert_eq!(t.orbits.len(), 3);
    }

    #[test]
    fn template_of_fixed_points() {
        let t = build_template(&orn("(1)(1)(1)"), &spec(&[3], &[])).unwrap();
        assert_eq!(t.orbits.len(), 1);
        assert_eq!((t.orbits[0].x(), t.orbits[0].y()), (1, 3));
        assert!(build_template(&orn("(1)"), &spec(&[3], &[])).is_err());
    }

    #[test]
    fn template_with_five_packets() {
        // one orbit with colors (1,2,3,2,1), packets of size 5, S = {1,3}
        let b = spec(&[10, 10, 5], &[1, 3]);
        let o = orn("(1 1 2 3 2 1 1 2 3 2)(1 1 2 3 2 1 1 2 3 2)(1 1 2 3 2)");
        let t = build_template(&o, &b).unwrap();
        assert_eq!(t.orbits.len(), 1);
        let orbit = &t.orbits[0];
        assert_eq!((orbit.x(), orbit.y(), orbit.d(&b)), (5, 5, 3));
        let mut colors = orbit.colors();
        let shift = (0..5).find(|&s| colors[s..].starts_with(&[1, 2])).unwrap();
        colors.rotate_left(shift);
        assert_eq!(colors, vec![1, 2, 3, 2, 1]);
        assert_eq!(orbit_cycle_structure(orbit, &b), vec![10, 10, 5]);

        let p = inverse(&o, &b).unwrap();
        assert!(p.cycles().contains(&vec![3, 18, 23, 13, 8]));
        assert_eq!(p.cycle_type().parts(), &[10, 10, 5]);
        assert_eq!(forward(&p, &b).unwrap(), o);
    }

    #[test]
    fn cycle_length_rule() {
        assert_eq!(cycle_lengths(5, 5, 3), vec![10, 10, 5]);
        assert_eq!(cycle_lengths(2, 5, 1), vec![4, 4, 2]);
        assert_eq!(cycle_lengths(3, 1, 2), vec![3]);
        assert_eq!(cycle_lengths(3, 4, 1), vec![6, 6]);
    }

    #[test]
    fn inverse_examples() {
        let b = spec(&[8, 10], &[1]);
        assert_eq!(inverse(&orn(EXAMPLE), &b).unwrap(), perm(RUNNING));
        assert_eq!(
            inverse(&orn("(1)(1)(1)"), &spec(&[3], &[])).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            inverse(&orn("(1 2)(1 2)"), &spec(&[2, 2], &[])).unwrap(),
            perm("3 4 1 2")
        );
        match inverse(&orn("(1 2 1 2)"), &spec(&[2, 2], &[])) {
            Err(Error::ConditionViolated { condition, .. }) => assert_eq!(condition, 1),
            other => panic!("unexpected {other:?}"),
        }
        match inverse(&orn("(1)(1)"), &spec(&[2], &[1])) {
            Err(Error::ConditionViolated { condition, .. }) => assert_eq!(condition, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            inverse(&orn("(1 2)"), &spec(&[2], &[])),
            Err(Error::Incompatible)
        );
    }

    #[test]
    fn good_ornament_examples() {
        let b = spec(&[8, 10], &[1]);
        let seven = orn("(1 2 2 1 2)(1 2 2)(1 2)(1 2)(1 2)(1 2)(1 2)");
        assert_eq!(to_good_ornament(&orn(EXAMPLE), &b).unwrap(), seven);
        assert_eq!(from_good_ornament(&seven, &b).unwrap(), orn(EXAMPLE));
        assert!(to_good_ornament(&seven, &b).is_err());

        let b2 = spec(&[2], &[1]);
        assert_eq!(to_good_ornament(&orn("(1 1)"), &b2).unwrap(), orn("(1)(1)"));
        assert_eq!(from_good_ornament(&orn("(1)(1)"), &b2).unwrap(), orn("(1 1)"));

        let b3 = spec(&[2, 2], &[]);
        assert_eq!(from_good_ornament(&orn("(1 2)(1 2)"), &b3).unwrap(), orn("(1 2)(1 2)"));
        assert!(from_good_ornament(&orn("(1 2 1 2)"), &b3).is_err());
        assert!(to_good_ornament(&orn("(1 2 1 2)"), &b3).is_err());
    }

    #[test]
    fn derangement_check_examples() {
        assert!(derangement_ornament_check(&orn("(1)(1)"), &spec(&[2], &[1])).unwrap());
        assert_eq!(
            auxiliary_inverse(&orn("(1)(1)"), &spec(&[2], &[1])).unwrap(),
            perm("2 1")
        );
        assert!(!derangement_ornament_check(&orn("(1)"), &spec(&[1], &[])).unwrap());
        let seven = orn("(1 2 2 1 2)(1 2 2)(1 2)(1 2)(1 2)(1 2)(1 2)");
        assert!(derangement_ornament_check(&seven, &spec(&[8, 10], &[1])).unwrap());
        assert!(derangement_ornament_check(&orn("(1 1)"), &spec(&[2], &[1])).is_err());
    }

    #[test]
    fn pair_fixed_cycle_examples() {
        let b = spec(&[2], &[1]);
        assert_eq!(pair_fixed_cycles(&orn("(1)(1)"), &b).unwrap(), orn("(1 1)"));
        let b = spec(&[1, 1], &[]);
        assert_eq!(pair_fixed_cycles(&orn("(1 2)"), &b).unwrap(), orn("(1 2)"));
        let b = spec(&[5, 1], &[1]);
        let o = orn("(1)(1)(1)(1)(1 2)");
        let paired = pair_fixed_cycles(&o, &b).unwrap();
        assert_eq!(paired, orn("(1 1)(1 1)(1 2)"));
        assert!(is_derangement_ornament(&paired, &b));
        assert_eq!(split_fixed_pairs(&paired, &b).unwrap(), o);
        assert!(pair_fixed_cycles(&orn("(1)(1)(1)(1 1 2)"), &spec(&[5, 1], &[1])).is_err());
    }

    #[test]
    fn complement_transfer_examples() {
        let b = spec(&[1, 1], &[]);
        assert_eq!(complement_transfer(&Permutation::identity(2), &b).unwrap(), Permutation::identity(2));
        assert_eq!(complement_transfer(&perm("2 1"), &b).unwrap(), perm("2 1"));

        let b = spec(&[2, 3], &[]);
        let sources: Vec<Permutation> = enumerate_as_permutations(&b)
            .unwrap()
            .filter(|p| p.cycle_type().parts() == [4, 1])
            .collect();
        assert!(!sources.is_empty());
        for p in sources {
            let q = complement_transfer(&p, &b).unwrap();
            assert!(crate::perm::is_as_permutation(&q, &b.complement()).unwrap());
            assert_eq!(q.cycle_type(), p.cycle_type());
            assert_eq!(complement_transfer(&q, &b.complement()).unwrap(), p);
        }

        let b = spec(&[1, 1, 1], &[]);
        assert!(complement_transfer(&perm("2 3 1"), &b).is_ok());
        // cycle type (3,1,1) repeats the odd part 1 and is not an involution
        let b = spec(&[1, 1, 1, 1, 1], &[]);
        assert!(matches!(
            complement_transfer(&perm("2 3 1 4 5"), &b),
            Err(Error::Precondition(_))
        ));
        // not an (A,S)-permutation
        assert!(complement_transfer(&perm("2 1 4 3"), &spec(&[2, 2], &[])).is_err());
    }

    #[test]
    fn mutant_sign_rule_breaks_the_round_trip() {
        let broken = crate::perm::block_specs(4, 2).into_iter().any(|b| {
            enumerate_as_permutations(&b).unwrap().any(|p| {
                let o = forward(&p, &b).unwrap();
                inverse_with(&o, &b, SignRule::ThroughStep).ok() != Some(p)
            })
        });
        assert!(broken);
    }
}
