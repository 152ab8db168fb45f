//! Lattice-point counting in rational simplices.
//!
//! The kernel counts non-negative integer tuples `x` with
//! `Σ xᵢ·wᵢ < t` (or `≤ t`), optionally with exclusive per-coordinate upper
//! bounds. Denominators are cleared once up front, so every comparison is an
//! exact integer comparison; the loop runs over all but the last coordinate
//! and the last one is counted in closed form.

use alloc::vec::Vec;
use core::ops::Sub;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arithmetic::{half, Rational};
use crate::seifert::{check_pairwise_coprime, SeifertData};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strictness {
    /// `Σ xᵢwᵢ < t`
    Strict,
    /// `Σ xᵢwᵢ ≤ t`
    NonStrict,
}

/// A counting problem: tuples `0 ≤ xᵢ < boundᵢ` (or unbounded) with
/// `Σ xᵢ·weightᵢ` below `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSpec {
    pub bounds: Vec<Option<u64>>,
    pub threshold: Rational,
    pub weights: Vec<Rational>,
    pub strictness: Strictness,
}

/// Bit budget under which the kernel runs on `i128`.
const NATIVE_BITS: u64 = 120;

trait KernelInt:
    Clone + Ord + Integer + Signed + ToPrimitive + From<u64> + for<'a> Sub<&'a Self, Output = Self>
{
}

impl<T> KernelInt for T where
    T: Clone
        + Ord
        + Integer
        + Signed
        + ToPrimitive
        + From<u64>
        + for<'a> Sub<&'a T, Output = T>
{
}

struct Kernel<'a, T> {
    bounds: &'a [Option<u64>],
    weights: Vec<T>,
    strict: bool,
}

impl<T: KernelInt> Kernel<'_, T> {
    fn admits(&self, residual: &T) -> bool {
        if self.strict {
            residual.is_positive()
        } else {
            !residual.is_negative()
        }
    }

    fn last(&self, residual: &T, weight: &T, bound: Option<u64>) -> Result<u128> {
        if !self.admits(residual) {
            return Ok(0);
        }
        // x·w < r  ⇔  x < ⌈r/w⌉;   x·w ≤ r  ⇔  x ≤ ⌊r/w⌋
        let count = if self.strict {
            Integer::div_ceil(residual, weight)
        } else {
            Integer::div_floor(residual, weight) + T::one()
        };
        let count = count.to_u128().ok_or(Error::Overflow("lattice count"))?;
        Ok(match bound {
            Some(b) => count.min(b as u128),
            None => count,
        })
    }

    fn walk(&self, i: usize, mut residual: T) -> Result<u128> {
        let weight = &self.weights[i];
        let bound = self.bounds[i];
        if i + 1 == self.weights.len() {
            return self.last(&residual, weight, bound);
        }
        let mut total: u128 = 0;
        let mut x = 0u64;
        while self.admits(&residual) && bound.is_none_or(|b| x < b) {
            total = total
                .checked_add(self.walk(i + 1, residual.clone())?)
                .ok_or(Error::Overflow("lattice count"))?;
            residual = residual - weight;
            x += 1;
        }
        Ok(total)
    }

    fn run(&self, threshold: T) -> Result<u128> {
        if self.weights.is_empty() {
            return Ok(self.admits(&threshold) as u128);
        }
        if self.bounds.contains(&Some(0)) {
            return Ok(0);
        }
        self.walk(0, threshold)
    }
}

impl CountSpec {
    /// Strict count over the box `0 ≤ xᵢ < boundᵢ`.
    pub fn bounded(bounds: Vec<u64>, weights: Vec<Rational>, threshold: Rational) -> Self {
        CountSpec {
            bounds: bounds.into_iter().map(Some).collect(),
            threshold,
            weights,
            strictness: Strictness::Strict,
        }
    }

    pub fn with_strictness(mut self, strictness: Strictness) -> Self {
        self.strictness = strictness;
        self
    }

    pub fn count(&self) -> Result<u64> {
        if self.bounds.len() != self.weights.len() {
            return Err(Error::Domain("bounds and weights differ in length"));
        }
        if self.weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::Domain("counting weights must be positive"));
        }
        let denom = self
            .weights
            .iter()
            .map(|w| w.denom().clone())
            .fold(self.threshold.denom().clone(), |acc, d| acc.lcm(&d));
        let scale = |r: &Rational| (r.numer() * &denom) / r.denom();
        let weights: Vec<BigInt> = self.weights.iter().map(scale).collect();
        let threshold = scale(&self.threshold);
        let strict = self.strictness == Strictness::Strict;

        let native = threshold.bits() <= NATIVE_BITS
            && weights.iter().all(|w| w.bits() <= NATIVE_BITS);
        let total = if native {
            let kernel = Kernel {
                bounds: &self.bounds,
                weights: weights.iter().map(|w| w.to_i128().unwrap()).collect(),
                strict,
            };
            kernel.run(threshold.to_i128().unwrap())?
        } else {
            let kernel = Kernel {
                bounds: &self.bounds,
                weights,
                strict,
            };
            kernel.run(threshold)?
        };
        u64::try_from(total).map_err(|_| Error::Overflow("lattice count exceeds u64"))
    }
}

/// `½(n − 2 − Σ 1/aᵢ)`, the right-hand side shared by `A_e` and `B_e`.
pub fn simplex_threshold(data: &SeifertData) -> Rational {
    let n = data.len() as i64;
    let inverse_sum: Rational = data
        .multiplicities()
        .iter()
        .map(|&a| Rational::new(BigInt::one(), a.into()))
        .fold(Rational::zero(), |acc, x| acc + x);
    (Rational::from_integer((n - 2).into()) - inverse_sum) * half()
}

/// `s = ⌊(n − 3)/2⌋`, the largest `e` with a possibly non-empty `A_e`.
pub fn max_level(data: &SeifertData) -> u64 {
    (data.len() as u64 - 3) / 2
}

fn unit_weights(data: &SeifertData) -> Vec<Rational> {
    data.multiplicities()
        .iter()
        .map(|&a| Rational::new(BigInt::one(), a.into()))
        .collect()
}

/// `|A_e|`: tuples `0 ≤ xᵢ < aᵢ` with `e + Σ xᵢ/aᵢ < ½(n − 2 − Σ 1/aᵢ)`.
pub fn count_a(e: u64, data: &SeifertData) -> Result<u64> {
    if e > max_level(data) {
        return Ok(0);
    }
    let threshold = simplex_threshold(data) - Rational::from_integer(e.into());
    CountSpec::bounded(data.multiplicities().to_vec(), unit_weights(data), threshold).count()
}

/// `|B_e|`: the same inequality over all non-negative tuples.
pub fn count_b(e: u64, data: &SeifertData) -> Result<u64> {
    let threshold = simplex_threshold(data) - Rational::from_integer(e.into());
    if !threshold.is_positive() {
        return Ok(0);
    }
    // xᵢ/aᵢ < t  ⇒  xᵢ < ⌈aᵢ·t⌉
    let bounds = data
        .multiplicities()
        .iter()
        .map(|&a| {
            (&threshold * Rational::from_integer(a.into()))
                .ceil()
                .to_integer()
                .to_u64()
                .ok_or(Error::Overflow("derived bound"))
        })
        .collect::<Result<Vec<_>>>()?;
    CountSpec::bounded(bounds, unit_weights(data), threshold).count()
}

/// Numbers of spectrum points of `x^p + y^q + z^r` in the windows
/// `(0,1)`, `(1,2)` and `(2,3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TauTriple {
    pub tau1: u64,
    pub tau2: u64,
    pub tau3: u64,
}

impl TauTriple {
    pub fn total(&self) -> u64 {
        self.tau1 + self.tau2 + self.tau3
    }
}

fn check_triple(p: u64, q: u64, r: u64) -> Result<()> {
    check_pairwise_coprime(&[p, q, r], 2)
}

/// Every `k/p + ℓ/q + m/r` with `0 < k < p`, `0 < ℓ < q`, `0 < m < r`,
/// sorted ascending.
pub fn spectrum_points(p: u64, q: u64, r: u64) -> Result<Vec<Rational>> {
    check_triple(p, q, r)?;
    let pqr = BigInt::from(p) * q * r;
    let mut numerators = Vec::with_capacity(((p - 1) * (q - 1) * (r - 1)) as usize);
    for k in 1..p {
        for l in 1..q {
            for m in 1..r {
                numerators.push(k as u128 * (q * r) as u128 + l as u128 * (p * r) as u128 + m as u128 * (p * q) as u128);
            }
        }
    }
    numerators.sort_unstable();
    Ok(numerators
        .into_iter()
        .map(|n| Rational::new(n.into(), pqr.clone()))
        .collect())
}

/// Number of spectrum points strictly (or weakly) below `bound`, by direct
/// enumeration.
pub fn spectrum_count_below(
    p: u64,
    q: u64,
    r: u64,
    bound: &Rational,
    strictness: Strictness,
) -> Result<u64> {
    check_triple(p, q, r)?;
    let pqr = BigInt::from(p) * q * r;
    // s/pqr < n/d  ⇔  s·d < n·pqr
    let d = bound.denom().to_i128().ok_or(Error::Overflow("bound"))?;
    let rhs = (bound.numer() * pqr).to_i128().ok_or(Error::Overflow("bound"))?;
    let (qr, pr, pq) = ((q * r) as i128, (p * r) as i128, (p * q) as i128);
    let mut count = 0u64;
    for k in 1..p as i128 {
        for l in 1..q as i128 {
            for m in 1..r as i128 {
                let lhs = (k * qr + l * pr + m * pq) * d;
                let inside = match strictness {
                    Strictness::Strict => lhs < rhs,
                    Strictness::NonStrict => lhs <= rhs,
                };
                count += inside as u64;
            }
        }
    }
    Ok(count)
}

/// Spectrum points below an integer `n`, via the kernel with `k = x + 1`.
fn spectrum_below_integer(p: u64, q: u64, r: u64, n: i64, strictness: Strictness) -> Result<u64> {
    let abc = [p, q, r];
    let weights: Vec<Rational> = abc.iter().map(|&a| Rational::new(BigInt::one(), a.into())).collect();
    let shift = weights.iter().fold(Rational::zero(), |acc, w| acc + w);
    let threshold = Rational::from_integer(n.into()) - shift;
    CountSpec::bounded(abc.iter().map(|a| a - 1).collect(), weights, threshold)
        .with_strictness(strictness)
        .count()
}

/// Partition of the spectrum by the windows `(n − 1, n)`, `n = 1, 2, 3`.
pub fn tau_counts(p: u64, q: u64, r: u64) -> Result<TauTriple> {
    check_triple(p, q, r)?;
    let below = |n| spectrum_below_integer(p, q, r, n, Strictness::Strict);
    let at_most = |n| spectrum_below_integer(p, q, r, n, Strictness::NonStrict);
    let (below1, below2) = (below(1)?, below(2)?);
    if at_most(1)? != below1 || at_most(2)? != below2 {
        return Err(Error::violation("spectrum point on an integer"));
    }
    let total = (p - 1)
        .checked_mul(q - 1)
        .and_then(|x| x.checked_mul(r - 1))
        .ok_or(Error::Overflow("Milnor number"))?;
    let tau = TauTriple {
        tau1: below1,
        tau2: below2 - below1,
        tau3: total - below2,
    };
    if tau.tau1 != tau.tau3 {
        return Err(Error::violation("spectrum is not symmetric"));
    }
    Ok(tau)
}

/// Milnor fiber signature `τ₁ − τ₂ + τ₃` of `x^p + y^q + z^r`.
pub fn milnor_signature(p: u64, q: u64, r: u64) -> Result<i64> {
    let tau = tau_counts(p, q, r)?;
    let sign = tau.tau1 as i64 - tau.tau2 as i64 + tau.tau3 as i64;
    if sign % 8 != 0 {
        return Err(Error::violation("Milnor signature not divisible by 8"));
    }
    Ok(sign)
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Both sides of `Σ_{ℓ=1}^{p−k} C(p−k−1, ℓ−1)·C(n, ℓ) = C(n+p−k−1, n−1)`.
///
/// The identity counts ordered distributions of `p − k` units over `n`
/// slots, so it holds for `k < p`; at `k = p` the left side is an empty sum
/// while the right side is `1`.
pub fn composition_identity(n: u64, p: u64, k: u64) -> (u128, u128) {
    let (n, d) = (n as i64, p as i64 - k as i64);
    let lhs = (1..=d).map(|l| binomial(d - 1, l - 1) * binomial(n, l)).sum();
    (lhs, binomial(n + d - 1, n - 1))
}

/// Both sides of `Σ_{p=0}^{k} (−1)^p C(n+k−p+1, n+1)·C(n, p) = k + 1`, the
/// coefficient comparison in `(1+x)^{−n−2}(1+x)^n = (1+x)^{−2}`.
pub fn alternating_identity(n: u64, k: u64) -> (i128, i128) {
    alternating_sum(n, k, n as i64 + 1)
}

/// The same sum with lower index `n − 1` in the first binomial.
pub fn alternating_identity_lower(n: u64, k: u64) -> (i128, i128) {
    alternating_sum(n, k, n as i64 - 1)
}

fn alternating_sum(n: u64, k: u64, lower: i64) -> (i128, i128) {
    let (n, k) = (n as i64, k as i64);
    let lhs = (0..=k)
        .map(|p| {
            let term = (binomial(n + k - p + 1, lower) * binomial(n, p)) as i128;
            if p % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    (lhs, k as i128 + 1)
}

/// `Σ_{k=0}^{p} C(n+p−k−1, n−1)·|A_{s−k}|`, which should equal `|B_{s−p}|`.
pub fn reduction_rhs(data: &SeifertData, p: u64) -> Result<u64> {
    let s = max_level(data);
    if p > s {
        return Err(Error::Domain("reduction level exceeds ⌊(n−3)/2⌋"));
    }
    let n = data.len() as i64;
    let mut total: u128 = 0;
    for k in 0..=p {
        let coeff = binomial(n + (p - k) as i64 - 1, n - 1);
        total += coeff * count_a(s - k, data)? as u128;
    }
    u64::try_from(total).map_err(|_| Error::Overflow("reduction sum"))
}
