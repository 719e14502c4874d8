//! Exhaustive consistency suites over every block specification up to a size
//! bound. The CLI `verify` command and the acceptance tests both drive these.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num::{BigInt, BigRational};
use rayon::prelude::*;

use crate::bijection::{self, SignRule};
use crate::enumeration::{
    count_by_cycle_type, count_derangements_brute, count_derangements_gf, count_derangements_pie,
    count_involutions, count_involutions_brute, cycle_type_counts, cycle_type_counts_brute,
    multinomial, mystery_polynomial,
};
use crate::ornament::{enumerate_ornaments, Ornament, OrnamentFilter};
use crate::perm::{
    block_specs, compositions, enumerate_as_permutations, partitions, BlockSpec, CycleType,
    Permutation,
    DEFAULT_PERMUTATION_LIMIT,
};

/// Pass/fail tally of one suite. `failures` holds a description of every
/// failing case with its full inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn collect(name: &'static str, outcomes: Vec<Vec<String>>) -> Self {
        let cases = outcomes.len();
        SuiteReport {
            name,
            cases,
            failures: outcomes.into_iter().flatten().collect(),
        }
    }

    pub fn passed(&self) -> usize {
        self.cases - self.failures.len().min(self.cases)
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.name,
            self.cases,
            self.passed(),
            self.failures.len()
        )
    }
}

fn specs_up_to(max_n: usize, max_k: usize) -> Vec<BlockSpec> {
    (1..=max_n).flat_map(|n| block_specs(n, max_k)).collect()
}

fn all_permutations(b: &BlockSpec) -> Vec<Permutation> {
    enumerate_as_permutations(b)
        .expect("suite sizes stay within the permutation limit")
        .collect()
}

fn symmetric_group(k: usize) -> Vec<Vec<usize>> {
    let b = BlockSpec::ascending(vec![1; k]).expect("k >= 1");
    all_permutations(&b).into_iter().map(|p| p.images().to_vec()).collect()
}

/// `inverse(forward(p)) = p` for every `(A, S)`-permutation; one case per permutation.
pub fn round_trip(max_n: usize, max_k: usize) -> SuiteReport {
    round_trip_with(max_n, max_k, SignRule::BeforeStep)
}

#[doc(hidden)]
pub fn round_trip_with(max_n: usize, max_k: usize, rule: SignRule) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .flat_map_iter(|b| {
            all_permutations(b).into_iter().map(move |p| {
                let back = bijection::forward(&p, b).and_then(|o| bijection::inverse_with(&o, b, rule));
                match back {
                    Ok(q) if q == p => vec![],
                    Ok(q) => vec![format!("{b} p={p}: round trip gave {q}")],
                    Err(e) => vec![format!("{b} p={p}: {e}")],
                }
            })
        })
        .collect();
    SuiteReport::collect("round-trip", outcomes)
}

/// The forward image of the `(A, S)`-permutations equals the set of ornaments
/// satisfying the image conditions, every image has the permutation's cycle
/// type, and `forward(inverse(o)) = o`; one case per block specification.
pub fn image_characterization(max_n: usize, max_k: usize) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .map(|b| {
            let mut failures = Vec::new();
            let mut image = BTreeSet::new();
            for p in all_permutations(b) {
                let o = bijection::forward(&p, b).expect("sizes match");
                if o.cycle_type() != p.cycle_type() {
                    failures.push(format!("{b} p={p}: cycle type not preserved"));
                }
                image.insert(o);
            }
            let expected: BTreeSet<Ornament> = enumerate_ornaments(b, OrnamentFilter::Theorem1)
                .expect("suite sizes stay within the ornament limit")
                .into_iter()
                .collect();
            if image != expected {
                let missing: Vec<String> = expected.difference(&image).map(|o| o.to_string()).collect();
                let extra: Vec<String> = image.difference(&expected).map(|o| o.to_string()).collect();
                failures.push(format!("{b}: image mismatch, missing {missing:?}, extra {extra:?}"));
            }
            for o in &expected {
                match bijection::inverse(o, b).and_then(|p| bijection::forward(&p, b)) {
                    Ok(back) if back == *o => {}
                    Ok(back) => failures.push(format!("{b} o={o}: forward(inverse) gave {back}")),
                    Err(e) => failures.push(format!("{b} o={o}: {e}")),
                }
            }
            failures
        })
        .collect();
    SuiteReport::collect("image", outcomes)
}

/// Inclusion-exclusion, generating function and brute force agree on the
/// number of derangements; one case per block specification.
pub fn derangement_counts(max_n: usize, max_k: usize) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .map(|b| {
            let pie = count_derangements_pie(b);
            let gf = count_derangements_gf(b);
            match count_derangements_brute(b) {
                Ok(brute) if pie == gf && gf == brute => vec![],
                Ok(brute) => vec![format!("{b}: pie={pie} gf={gf} brute={brute}")],
                Err(e) => vec![format!("{b}: {e}")],
            }
        })
        .collect();
    SuiteReport::collect("derangement-counts", outcomes)
}

/// Counts by cycle type through ornaments equal counts by filtering
/// permutations, and sum to the multinomial; one case per block specification.
pub fn cycle_type_agreement(max_n: usize, max_k: usize) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .map(|b| {
            let via_ornaments = cycle_type_counts(b);
            let via_perms = cycle_type_counts_brute(b, DEFAULT_PERMUTATION_LIMIT);
            match (via_ornaments, via_perms) {
                (Ok(x), Ok(y)) => {
                    let mut failures = Vec::new();
                    if x != y {
                        failures.push(format!("{b}: ornament counts {x:?} differ from permutation counts {y:?}"));
                    }
                    let total: BigInt = x.values().sum();
                    if total != multinomial(b.lengths()) {
                        failures.push(format!("{b}: counts sum to {total}"));
                    }
                    failures
                }
                (Err(e), _) | (_, Err(e)) => vec![format!("{b}: {e}")],
            }
        })
        .collect();
    SuiteReport::collect("cycle-type-agreement", outcomes)
}

/// Counts by cycle type are unchanged by relabeling blocks; one case per
/// block specification and block permutation.
pub fn block_symmetry(max_n: usize, max_k: usize) -> SuiteReport {
    let specs = specs_up_to(max_n, max_k);
    let counts: HashMap<BlockSpec, Result<BTreeMap<CycleType, BigInt>, String>> = specs
        .par_iter()
        .map(|b| (b.clone(), cycle_type_counts(b).map_err(|e| e.to_string())))
        .collect();
    let groups: HashMap<usize, Vec<Vec<usize>>> = specs
        .iter()
        .map(BlockSpec::k)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|k| (k, symmetric_group(k)))
        .collect();
    let outcomes = specs
        .par_iter()
        .flat_map_iter(|b| groups[&b.k()].iter().map(move |sigma| (b, sigma)))
        .map(|(b, sigma)| {
            let permuted = b.permute_blocks(sigma).expect("sigma is a permutation of the blocks");
            match (&counts[b], &counts[&permuted]) {
                (Ok(x), Ok(y)) if x == y => vec![],
                (Ok(x), Ok(y)) => vec![format!("{b} sigma={sigma:?} ({permuted}): {x:?} vs {y:?}")],
                (Err(e), _) | (_, Err(e)) => vec![format!("{b} sigma={sigma:?}: {e}")],
            }
        })
        .collect();
    SuiteReport::collect("block-symmetry", outcomes)
}

/// For cycle types with distinct odd parts and no part ≡ 2 (mod 4), counts
/// agree for `S` and its complement; one case per (spec, cycle type).
pub fn complement(max_n: usize, max_k: usize) -> SuiteReport {
    let cases: Vec<(BlockSpec, CycleType)> = specs_up_to(max_n, max_k)
        .into_iter()
        .flat_map(|b| {
            partitions(b.n())
                .into_iter()
                .filter(|t| t.allows_complement())
                .map(move |t| (b.clone(), t))
        })
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|(b, t)| {
            match (count_by_cycle_type(b, t), count_by_cycle_type(&b.complement(), t)) {
                (Ok(x), Ok(y)) if x == y => vec![],
                (Ok(x), Ok(y)) => vec![format!("{b} t={t}: {x} vs complement {y}")],
                (Err(e), _) | (_, Err(e)) => vec![format!("{b} t={t}: {e}")],
            }
        })
        .collect();
    SuiteReport::collect("complement", outcomes)
}

/// Involution counts agree for `S` and its complement; for specs with at most
/// `brute_max_k` blocks they are also checked against brute force. One case
/// per block specification.
pub fn involution_complement(max_n: usize, max_k: usize, brute_max_k: usize) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .map(|b| {
            let (x, y) = match (count_involutions(b), count_involutions(&b.complement())) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return vec![format!("{b}: {e}")],
            };
            if x != y {
                return vec![format!("{b}: {x} vs complement {y}")];
            }
            if b.k() > brute_max_k {
                return vec![];
            }
            match count_involutions_brute(b) {
                Ok(z) if z == x => vec![],
                Ok(z) => vec![format!("{b}: ornaments give {x}, brute force {z}")],
                Err(e) => vec![format!("{b}: {e}")],
            }
        })
        .collect();
    SuiteReport::collect("involution-complement", outcomes)
}

/// Evaluation points used for the fixed-point polynomial identity.
pub fn lambda_points() -> Vec<BigRational> {
    vec![
        BigRational::from_integer(0.into()),
        BigRational::from_integer(1.into()),
        BigRational::from_integer(2.into()),
        BigRational::new(1.into(), 2.into()),
    ]
}

/// The fixed-point polynomial sum is the same at every evaluation point and
/// equals the all-descending derangement count; one case per composition.
pub fn mystery_constancy(max_n: usize, max_k: usize) -> SuiteReport {
    let cases: Vec<Vec<usize>> = (1..=max_n).flat_map(|n| compositions(n, max_k)).collect();
    let outcomes = cases
        .par_iter()
        .map(|a| {
            let all: Vec<usize> = (1..=a.len()).collect();
            let expected = count_derangements_pie(&BlockSpec::new(a.clone(), &all).expect("composition"));
            let mut failures = Vec::new();
            for lambda in lambda_points() {
                match mystery_polynomial(a, &lambda) {
                    Ok(v) if v == expected => {}
                    Ok(v) => failures.push(format!("a={a:?} λ={lambda}: {v}, expected {expected}")),
                    Err(e) => failures.push(format!("a={a:?} λ={lambda}: {e}")),
                }
            }
            failures
        })
        .collect();
    SuiteReport::collect("mystery-constancy", outcomes)
}

/// The number of A-good ornaments is the multinomial coefficient; one case per
/// block specification.
pub fn good_ornament_count(max_n: usize, max_k: usize) -> SuiteReport {
    let outcomes = specs_up_to(max_n, max_k)
        .par_iter()
        .map(|b| match enumerate_ornaments(b, OrnamentFilter::Good) {
            Ok(good) if BigInt::from(good.len()) == multinomial(b.lengths()) => vec![],
            Ok(good) => vec![format!("{b}: {} good ornaments, expected {}", good.len(), multinomial(b.lengths()))],
            Err(e) => vec![format!("{b}: {e}")],
        })
        .collect();
    SuiteReport::collect("good-ornament-count", outcomes)
}

/// Every suite at the given bounds, in a fixed order.
pub fn run_all(max_n: usize, max_k: usize) -> Vec<SuiteReport> {
    vec![
        round_trip(max_n, max_k),
        image_characterization(max_n, max_k),
        derangement_counts(max_n, max_k),
        cycle_type_agreement(max_n, max_k),
        block_symmetry(max_n, max_k),
        complement(max_n, max_k),
        involution_complement(max_n, max_k, max_k),
        mystery_constancy(max_n, max_k),
        good_ornament_count(max_n, max_k),
    ]
}
