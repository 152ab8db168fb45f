//! The `d`-invariant of `+1` surgery on the torus knot `T(p,q)`.
//!
//! Four routes: gaps of the numerical semigroup `⟨p, q⟩` above the genus,
//! the two-variable spectrum of `x^p + y^q` in `(0, (pq+p+q−1)/2pq]`,
//! lattice points `(a+1)/p + (b+1)/q ≤ (pq+p+q−1)/2pq`, and the torsion
//! coefficients of the Alexander polynomial.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arithmetic::Rational;
use crate::lattice::{CountSpec, Strictness};
use crate::{Error, Result};

/// Largest `p·q` accepted; the membership table and the polynomial division
/// are both linear in it.
pub const MAX_PRODUCT: u64 = 1 << 26;

fn check_pair(p: u64, q: u64) -> Result<()> {
    if let Some(&value) = [p, q].iter().find(|&&v| v == 0) {
        return Err(Error::OutOfRange { value, min: 1 });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime {
            left: p as i128,
            right: q as i128,
        });
    }
    match p.checked_mul(q) {
        Some(pq) if pq <= MAX_PRODUCT => Ok(()),
        _ => Err(Error::Overflow("p·q exceeds the supported range")),
    }
}

/// `(p−1)(q−1)/2`.
pub fn genus(p: u64, q: u64) -> u64 {
    (p - 1) * (q - 1) / 2
}

/// Membership in `⟨p, q⟩ = {ap + bq | a, b ≥ 0}` for `0..=pq−p−q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupData {
    generators: (u64, u64),
    members: Vec<bool>,
}

impl SemigroupData {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        check_pair(p, q)?;
        // Frobenius number pq − p − q; −1 when a generator is 1.
        let frobenius = (p * q) as i64 - p as i64 - q as i64;
        let len = (frobenius + 1).max(0) as usize;
        let mut members = vec![false; len];
        for s in 0..len {
            members[s] = s == 0
                || (s >= p as usize && members[s - p as usize])
                || (s >= q as usize && members[s - q as usize]);
        }
        Ok(SemigroupData {
            generators: (p, q),
            members,
        })
    }

    pub fn generators(&self) -> (u64, u64) {
        self.generators
    }

    pub fn contains(&self, s: u64) -> bool {
        self.members.get(s as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.members.len() as u64)
            .filter(|&s| !self.members[s as usize])
            .collect()
    }
}

pub fn semigroup_gaps(p: u64, q: u64) -> Result<Vec<u64>> {
    Ok(SemigroupData::new(p, q)?.gaps())
}

/// `−2·#{gaps s ≥ g}`.
pub fn d_semigroup(p: u64, q: u64) -> Result<i64> {
    let g = genus(p, q);
    let above = semigroup_gaps(p, q)?.into_iter().filter(|&s| s >= g).count();
    Ok(-2 * above as i64)
}

/// `(pq + p + q − 1)/(2pq)`.
pub fn spectrum_bound(p: u64, q: u64) -> Rational {
    let pq = p * q;
    Rational::new((pq + p + q - 1).into(), (2 * pq).into())
}

/// `−2·#{i/p + j/q ∈ (0, (pq+p+q−1)/2pq]}` over `0 < i < p`, `0 < j < q`.
pub fn d_spectrum(p: u64, q: u64) -> Result<i64> {
    check_pair(p, q)?;
    let bound = spectrum_bound(p, q);
    let scale = BigInt::from(p * q);
    // i/p + j/q = (iq + jp)/pq; compare numerators over the common pq.
    let limit = (&bound * Rational::from_integer(scale)).floor().to_integer();
    let mut count = 0i64;
    for i in 1..p {
        for j in 1..q {
            if BigInt::from(i * q + j * p) <= limit {
                count += 1;
            }
        }
    }
    Ok(-2 * count)
}

/// `#{(a, b) ≥ 0 : (a+1)/p + (b+1)/q ≤ (pq+p+q−1)/2pq}`.
pub fn theta_count(p: u64, q: u64) -> Result<u64> {
    check_pair(p, q)?;
    let (wp, wq) = (
        Rational::new(BigInt::one(), p.into()),
        Rational::new(BigInt::one(), q.into()),
    );
    let threshold = spectrum_bound(p, q) - &wp - &wq;
    CountSpec {
        bounds: vec![None, None],
        threshold,
        weights: vec![wp, wq],
        strictness: Strictness::NonStrict,
    }
    .count()
}

pub fn d_theta(p: u64, q: u64) -> Result<i64> {
    Ok(-2 * theta_count(p, q)? as i64)
}

/// Ordinary coefficients of `(t^{pq}−1)(t−1) / ((t^p−1)(t^q−1))`, lowest
/// degree first.
fn alexander_ordinary(p: u64, q: u64) -> Vec<i64> {
    let (p, q, pq) = (p as usize, q as usize, (p * q) as usize);
    let mut num = vec![0i64; pq + 2];
    // (t^{pq} − 1)(t − 1) = t^{pq+1} − t^{pq} − t + 1
    num[pq + 1] += 1;
    num[pq] -= 1;
    num[1] -= 1;
    num[0] += 1;
    let mut den = vec![0i64; p + q + 1];
    // (t^p − 1)(t^q − 1) = t^{p+q} − t^p − t^q + 1
    den[p + q] += 1;
    den[p] -= 1;
    den[q] -= 1;
    den[0] += 1;
    let quotient = divide_exact(&num, &den);
    debug_assert_eq!(quotient.len(), pq + 2 - (p + q));
    quotient
}

/// Long division by a monic polynomial; the remainder must vanish.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (dn, dd) = (num.len() - 1, den.len() - 1);
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "torus knot quotient is exact");
    quot
}

/// Symmetric Alexander polynomial `Δ(t) = a₀ + Σ_{j≥1} a_j (t^j + t^{−j})`
/// as `[a₀, a₁, …, a_g]`.
pub fn alexander_torus(p: u64, q: u64) -> Result<Vec<i64>> {
    check_pair(p, q)?;
    let ordinary = alexander_ordinary(p, q);
    let g = (ordinary.len() - 1) / 2;
    if ordinary.len().is_multiple_of(2) || (0..=g).any(|j| ordinary[g + j] != ordinary[g - j]) {
        return Err(Error::violation("Alexander polynomial is not symmetric"));
    }
    let a: Vec<i64> = ordinary[g..].to_vec();
    if ordinary.iter().sum::<i64>() != 1 {
        return Err(Error::violation("Δ(1) ≠ 1"));
    }
    Ok(a)
}

/// `Δ(1)` for a symmetric coefficient list.
pub fn alexander_at_one(a: &[i64]) -> i64 {
    a[0] + 2 * a[1..].iter().sum::<i64>()
}

/// `−2 Σ_{j≥1} j·a_j`.
pub fn d_alexander(p: u64, q: u64) -> Result<i64> {
    let a = alexander_torus(p, q)?;
    Ok(-2 * a.iter().enumerate().map(|(j, &c)| j as i64 * c).sum::<i64>())
}

/// `½ Δ''(1)`, from the second derivative of the Laurent polynomial.
pub fn half_second_derivative_at_one(a: &[i64]) -> i64 {
    // d²/dt² t^j at t = 1 is j(j−1); the ±j terms together give 2j².
    let total: i64 = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &c)| {
            let j = j as i64;
            c * (j * (j - 1) + (-j) * (-j - 1))
        })
        .sum();
    total / 2
}

/// `−d/2 ≡ h⁰ ≡ ½Δ''(1) (mod 2)`.
pub fn arf_mod2_check(p: u64, q: u64) -> Result<bool> {
    let minus_half_d = -d_semigroup(p, q)? / 2;
    let h0 = theta_count(p, q)? as i64;
    let arf = half_second_derivative_at_one(&alexander_torus(p, q)?);
    Ok((minus_half_d - h0).rem_euclid(2) == 0 && (h0 - arf).rem_euclid(2) == 0)
}

/// `d` from each route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DRoutes {
    pub semigroup: i64,
    pub spectrum: i64,
    pub h0: i64,
    pub alexander: i64,
}

impl DRoutes {
    pub fn agree(&self) -> bool {
        self.semigroup == self.spectrum
            && self.spectrum == self.h0
            && self.h0 == self.alexander
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusKnotReport {
    pub p: u64,
    pub q: u64,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub d: i64,
    pub routes: DRoutes,
    /// `[a₀, a₁, …, a_g]`.
    pub alexander: Vec<i64>,
    pub arf_consistent: bool,
}

impl TorusKnotReport {
    /// Computes all four routes; any disagreement or broken structural
    /// property is an invariant violation.
    pub fn compute(p: u64, q: u64) -> Result<Self> {
        let semigroup = SemigroupData::new(p, q)?;
        let gaps = semigroup.gaps();
        let g = genus(p, q);
        if gaps.len() as u64 != g {
            return Err(Error::violation("gap count differs from the genus"));
        }
        let routes = DRoutes {
            semigroup: d_semigroup(p, q)?,
            spectrum: d_spectrum(p, q)?,
            h0: d_theta(p, q)?,
            alexander: d_alexander(p, q)?,
        };
        if !routes.agree() {
            return Err(Error::violation(alloc::format!(
                "d routes disagree for T({p},{q}): {routes:?}"
            )));
        }
        let d = routes.semigroup;
        if d > 0 || d % 2 != 0 {
            return Err(Error::violation("d is not a non-positive even integer"));
        }
        let alexander = alexander_torus(p, q)?;
        Ok(TorusKnotReport {
            p,
            q,
            genus: g,
            gaps,
            d,
            routes,
            alexander,
            arf_consistent: arf_mod2_check(p, q)?,
        })
    }
}
