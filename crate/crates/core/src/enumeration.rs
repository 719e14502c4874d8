//! Exact counts of `(A, S)`-permutations: derangements by inclusion-exclusion
//! and by generating-function coefficient extraction, counts by cycle type via
//! ornaments, involutions, and the fixed-point polynomial identity.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ornament::{enumerate_ornaments_of_type, OrnamentFilter};
use crate::perm::{
    check_limit, check_size, enumerate_as_permutations_with_limit, partitions, BlockSpec, CycleType,
    DEFAULT_PERMUTATION_LIMIT,
};

/// Arbitrary-precision count.
pub type BigCount = BigInt;

/// Default cap on `n` for counts that enumerate ornaments of a fixed cycle type.
pub const DEFAULT_COUNT_LIMIT: usize = 20;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(Σ parts)! / Π parts!`, computed as a product of binomials.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0;
    let mut out = BigInt::one();
    for &p in parts {
        total += p;
        out *= binomial(total, p);
    }
    out
}

/// Power series in `k` variables, truncated at degree `caps[i]` in variable `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    caps: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(caps: &[usize]) -> Self {
        let size = caps.iter().map(|c| c + 1).product();
        TruncatedSeries {
            caps: caps.to_vec(),
            coeffs: vec![BigInt::zero(); size],
        }
    }

    pub fn one(caps: &[usize]) -> Self {
        Self::monomial(caps, &vec![0; caps.len()], BigInt::one())
    }

    /// `coeff · x^exps`, or zero when `exps` exceeds the caps.
    pub fn monomial(caps: &[usize], exps: &[usize], coeff: BigInt) -> Self {
        let mut s = Self::zero(caps);
        if let Some(i) = s.index(exps) {
            s.coeffs[i] = coeff;
        }
        s
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    /// Coefficient of `x^exps`; zero outside the caps.
    pub fn coefficient(&self, exps: &[usize]) -> BigInt {
        self.index(exps)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_default()
    }

    fn index(&self, exps: &[usize]) -> Option<usize> {
        assert_eq!(exps.len(), self.caps.len(), "exponent arity");
        let mut idx = 0;
        for (&e, &cap) in exps.iter().zip(&self.caps) {
            if e > cap {
                return None;
            }
            idx = idx * (cap + 1) + e;
        }
        Some(idx)
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        let mut exps = vec![0; self.caps.len()];
        for (e, &cap) in exps.iter_mut().zip(&self.caps).rev() {
            *e = idx % (cap + 1);
            idx /= cap + 1;
        }
        exps
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.caps, other.caps, "series caps differ");
        TruncatedSeries {
            caps: self.caps.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            caps: self.caps.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product with every term beyond the caps dropped.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.caps, other.caps, "series caps differ");
        let mut out = Self::zero(&self.caps);
        let support: Vec<(Vec<usize>, &BigInt)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (other.exponents(j), c))
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.exponents(i);
            for (eb, b) in &support {
                let sum: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if let Some(t) = out.index(&sum) {
                    out.coeffs[t] += a * *b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::InexactDivision(format!(
                "series with constant term {c0} has no integral inverse"
            )));
        }
        let mut out = Self::zero(&self.caps);
        out.coeffs[0] = c0.clone();
        // mixed-radix order visits every componentwise-smaller exponent first
        for idx in 1..out.coeffs.len() {
            let e = out.exponents(idx);
            let mut acc = BigInt::zero();
            for j in 0..idx {
                let ej = out.exponents(j);
                if ej.iter().zip(&e).any(|(x, y)| x > y) {
                    continue;
                }
                let diff: Vec<usize> = e.iter().zip(&ej).map(|(x, y)| x - y).collect();
                acc += self.coefficient(&diff) * &out.coeffs[j];
            }
            out.coeffs[idx] = -acc * c0;
        }
        Ok(out)
    }
}

/// Inclusion-exclusion count of `(A, S)`-derangements:
/// `Σ (-1)^{Σ b_m} multinomial(a - b)` over `0 ≤ b_m ≤ l_m`, with `l_m = a_m`
/// for descending blocks and `l_m = 1` otherwise.
pub fn count_derangements_pie(b: &BlockSpec) -> BigInt {
    let a = b.lengths();
    let bounds: Vec<usize> = (1..=b.k())
        .map(|m| if b.is_descending(m) { a[m - 1] } else { 1 })
        .collect();
    let mut total = BigInt::zero();
    let mut removed = vec![0usize; a.len()];
    loop {
        let rest: Vec<usize> = a.iter().zip(&removed).map(|(x, y)| x - y).collect();
        let term = multinomial(&rest);
        if removed.iter().sum::<usize>() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        // odometer over the box 0..=bounds
        let mut i = 0;
        loop {
            if i == removed.len() {
                return total;
            }
            if removed[i] < bounds[i] {
                removed[i] += 1;
                break;
            }
            removed[i] = 0;
            i += 1;
        }
    }
}

/// Coefficient of `x^A` in `1/(1 - Σ x_i) · Π_{i∉S}(1 - x_i) / Π_{i∈S}(1 + x_i)`.
pub fn count_derangements_gf(b: &BlockSpec) -> BigInt {
    let caps = b.lengths();
    let k = b.k();
    let unit = |i: usize, e: usize, c: i64| {
        let mut exps = vec![0; k];
        exps[i] = e;
        TruncatedSeries::monomial(caps, &exps, BigInt::from(c))
    };

    let mut denominator = TruncatedSeries::one(caps);
    for i in 0..k {
        denominator = denominator.add(&unit(i, 1, -1));
    }
    let mut series = denominator.inverse().expect("constant term is 1");

    for i in 0..k {
        let factor = if b.is_descending(i + 1) {
            (0..=caps[i]).fold(TruncatedSeries::zero(caps), |acc, j| {
                acc.add(&unit(i, j, if j % 2 == 0 { 1 } else { -1 }))
            })
        } else {
            TruncatedSeries::one(caps).add(&unit(i, 1, -1))
        };
        series = series.mul(&factor);
    }
    series.coefficient(caps)
}

/// Derangements counted by exhaustive enumeration.
pub fn count_derangements_brute(b: &BlockSpec) -> Result<BigInt> {
    count_brute(b, |p| p.is_derangement())
}

fn count_brute(b: &BlockSpec, pred: impl Fn(&crate::perm::Permutation) -> bool) -> Result<BigInt> {
    let count = enumerate_as_permutations_with_limit(b, DEFAULT_PERMUTATION_LIMIT)?
        .filter(|p| pred(p))
        .count();
    Ok(BigInt::from(count))
}

/// `(A, S)`-permutations of cycle type `t`, counted as image ornaments of that type.
pub fn count_by_cycle_type(b: &BlockSpec, t: &CycleType) -> Result<BigInt> {
    count_by_cycle_type_with_limit(b, t, DEFAULT_COUNT_LIMIT)
}

pub fn count_by_cycle_type_with_limit(b: &BlockSpec, t: &CycleType, limit: usize) -> Result<BigInt> {
    let ornaments = enumerate_ornaments_of_type(b, t, OrnamentFilter::Theorem1, limit)?;
    Ok(BigInt::from(ornaments.len()))
}

/// Same count by filtering the `(A, S)`-permutations.
pub fn count_by_cycle_type_brute(b: &BlockSpec, t: &CycleType, limit: usize) -> Result<BigInt> {
    check_size(b, t.n())?;
    let count = enumerate_as_permutations_with_limit(b, limit)?
        .filter(|p| p.cycle_type() == *t)
        .count();
    Ok(BigInt::from(count))
}

/// Counts for every cycle type of `n` (zero counts included), via ornaments.
pub fn cycle_type_counts(b: &BlockSpec) -> Result<BTreeMap<CycleType, BigInt>> {
    check_limit(b.n(), DEFAULT_COUNT_LIMIT)?;
    partitions(b.n())
        .into_iter()
        .map(|t| Ok((t.clone(), count_by_cycle_type(b, &t)?)))
        .collect()
}

/// Counts for every cycle type of `n` (zero counts included), via permutations.
pub fn cycle_type_counts_brute(b: &BlockSpec, limit: usize) -> Result<BTreeMap<CycleType, BigInt>> {
    let mut out: BTreeMap<CycleType, BigInt> =
        partitions(b.n()).into_iter().map(|t| (t, BigInt::zero())).collect();
    for p in enumerate_as_permutations_with_limit(b, limit)? {
        *out.get_mut(&p.cycle_type()).expect("every cycle type is listed") += 1;
    }
    Ok(out)
}

/// Outcome of comparing two counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub left: BigInt,
    pub right: BigInt,
    pub equal: bool,
}

impl CountCheck {
    fn new(left: BigInt, right: BigInt) -> Self {
        let equal = left == right;
        CountCheck { left, right, equal }
    }
}

/// Compares counts of cycle type `t` before and after relabeling the blocks by `sigma`.
pub fn verify_block_symmetry(b: &BlockSpec, sigma: &[usize], t: &CycleType) -> Result<CountCheck> {
    let permuted = b.permute_blocks(sigma)?;
    Ok(CountCheck::new(
        count_by_cycle_type(b, t)?,
        count_by_cycle_type(&permuted, t)?,
    ))
}

/// Result of [`verify_complement`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCheck {
    pub left: BigInt,
    pub right: BigInt,
    pub equal: bool,
    /// Whether `t` has distinct odd parts and no part ≡ 2 (mod 4).
    pub applicable: bool,
}

/// Compares counts of cycle type `t` for `S` and its complement.
pub fn verify_complement(b: &BlockSpec, t: &CycleType) -> Result<ComplementCheck> {
    let check = CountCheck::new(count_by_cycle_type(b, t)?, count_by_cycle_type(&b.complement(), t)?);
    Ok(ComplementCheck {
        left: check.left,
        right: check.right,
        equal: check.equal,
        applicable: t.allows_complement(),
    })
}

/// `(A, S)`-involutions, counted as image ornaments made of 1- and 2-cycles.
pub fn count_involutions(b: &BlockSpec) -> Result<BigInt> {
    check_limit(b.n(), DEFAULT_COUNT_LIMIT)?;
    let n = b.n();
    let mut total = BigInt::zero();
    for twos in 0..=n / 2 {
        let mut parts = vec![2; twos];
        parts.extend(std::iter::repeat(1).take(n - 2 * twos));
        total += count_by_cycle_type(b, &CycleType::new(parts)?)?;
    }
    Ok(total)
}

pub fn count_involutions_brute(b: &BlockSpec) -> Result<BigInt> {
    count_brute(b, |p| p.is_involution())
}

/// Derangement numbers `D_m`.
pub fn derangement_number(m: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero()); // D_0, D_1
    if m == 0 {
        return prev;
    }
    for i in 2..=m {
        let next = (i - 1) * (&cur + &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Permutations of `S_n` by number of fixed points: `coefficients[j]` counts
/// those with exactly `j` fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointPolynomial {
    pub n: usize,
    pub coefficients: Vec<BigInt>,
}

impl FixedPointPolynomial {
    pub fn evaluate(&self, lambda: &BigRational) -> BigRational {
        // Horner
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * lambda + BigRational::from_integer(c.clone()))
    }
}

pub fn fixed_point_polynomial(n: usize) -> FixedPointPolynomial {
    FixedPointPolynomial {
        n,
        coefficients: (0..=n)
            .map(|j| binomial(n, j) * derangement_number(n - j))
            .collect(),
    }
}

/// Evaluates
/// `(1 / Π a_i!) Σ_T (-1)^{|T|} f_λ(n - |T|) Π_i f_λ(|A_i ∩ T|)`
/// where `f_λ(m)` is the fixed-point polynomial of `S_m` at `λ`. The sum over
/// subsets `T ⊆ {1..n}` is grouped by the intersection sizes `t_i = |A_i ∩ T|`,
/// each size vector occurring `Π binomial(a_i, t_i)` times.
pub fn mystery_polynomial(a: &[usize], lambda: &BigRational) -> Result<BigInt> {
    let n: usize = a.iter().sum();
    let f: Vec<BigRational> = (0..=n)
        .map(|m| fixed_point_polynomial(m).evaluate(lambda))
        .collect();

    let mut sum = BigRational::zero();
    let mut t = vec![0usize; a.len()];
    loop {
        let size: usize = t.iter().sum();
        let mut term = f[n - size].clone();
        for (&ai, &ti) in a.iter().zip(&t) {
            term *= BigRational::from_integer(binomial(ai, ti)) * &f[ti];
        }
        if size % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        let mut i = 0;
        loop {
            if i == t.len() {
                let norm = a.iter().fold(BigInt::one(), |acc, &ai| acc * factorial(ai));
                let value = sum / BigRational::from_integer(norm);
                if !value.is_integer() {
                    return Err(Error::InexactDivision(format!(
                        "a = {a:?} at λ = {lambda} gives {value}"
                    )));
                }
                return Ok(value.to_integer());
            }
            if t[i] < a[i] {
                t[i] += 1;
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}
