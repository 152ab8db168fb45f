//! Assembly of `λ`, `μ̄`, the instanton Betti numbers and the monopole count.
//!
//! The Betti numbers are determined by `μ̄` and `λ` through
//! `b₃ + b₇ = μ̄ − λ` and `b₁ + b₅ = −μ̄ − λ` together with `b₁ = b₅`,
//! `b₃ = b₇`. Here `b₃ + b₇` is a lattice count, `μ̄` comes from one of three
//! routes and `λ` is solved for; with three fibers `λ` is independently
//! pinned by the Milnor fiber signature.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::arithmetic::{
    cot_cot_sum, csc_cot_alternating_sum, dedekind_rademacher, dedekind_sum, half, Rational,
};
use crate::lattice::{self, Strictness, TauTriple};
use crate::plumbing::{analyze_plumbing, PlumbingInvariants};
use crate::seifert::SeifertData;
use crate::{Error, Result};

/// Largest allowed distance between the trigonometric `μ̄` and an integer.
pub const TRIG_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MuBarMethod {
    Plumbing,
    #[default]
    Dedekind,
    Trig,
}

impl MuBarMethod {
    pub const ALL: [MuBarMethod; 3] = [Self::Plumbing, Self::Dedekind, Self::Trig];

    pub fn name(self) -> &'static str {
        match self {
            Self::Plumbing => "plumbing",
            Self::Dedekind => "dedekind",
            Self::Trig => "trig",
        }
    }
}

impl fmt::Display for MuBarMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MuBarMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(Error::Domain("unknown μ̄ method"))
    }
}

/// Dedekind–Rademacher expression for `μ̄` as an exact rational.
///
/// `[1/(8a)] − 1/8 − ½ Σ s(qᵢ,aᵢ) − Σ s(qᵢ,aᵢ;½,½)`, where the bracketed
/// term is present only for odd `a`. For even `a` exactly one `qᵢ` is even
/// and the remaining terms already sum to `μ̄`.
pub fn mu_bar_dedekind_exact(data: &SeifertData) -> Result<Rational> {
    let mut total = -Rational::new(BigInt::one(), 8.into());
    if data.is_odd() {
        total += Rational::new(BigInt::one(), data.product() * 8);
    }
    let (h, two) = (half(), Rational::from_integer(2.into()));
    for (&ai, qi) in data.multiplicities().iter().zip(data.cofactors()) {
        total -= dedekind_sum(qi.clone(), ai)? / &two;
        total -= dedekind_rademacher(qi.clone(), ai, &h, &h)?;
    }
    Ok(total)
}

/// Trigonometric expression for `μ̄`, defined for odd `a`.
pub fn mu_bar_trig_value(data: &SeifertData) -> Result<f64> {
    if !data.is_odd() {
        return Err(Error::Domain("trigonometric μ̄ needs an odd product"));
    }
    let a = data.product().to_f64().ok_or(Error::Overflow("product"))?;
    let mut total = 1.0 / (8.0 * a) - 0.125;
    for (&ai, &bi) in data.multiplicities().iter().zip(data.residues()) {
        let inv = 1.0 / ai as f64;
        total += inv * cot_cot_sum(bi, ai) / 8.0;
        total += inv * csc_cot_alternating_sum(bi, ai) / 4.0;
    }
    Ok(total)
}

fn exact_integer(value: &Rational, what: &str) -> Result<i64> {
    if !value.is_integer() {
        return Err(Error::violation(format!("{what} = {value} is not an integer")));
    }
    value.to_integer().to_i64().ok_or(Error::Overflow("μ̄"))
}

pub fn mu_bar(data: &SeifertData, method: MuBarMethod) -> Result<i64> {
    match method {
        MuBarMethod::Plumbing => crate::plumbing::mu_bar_plumbing(data),
        MuBarMethod::Dedekind => exact_integer(&mu_bar_dedekind_exact(data)?, "Dedekind μ̄"),
        MuBarMethod::Trig => {
            let value = mu_bar_trig_value(data)?;
            let nearest = libm::round(value);
            if (value - nearest).abs() >= TRIG_TOLERANCE {
                return Err(Error::violation(format!(
                    "trigonometric μ̄ = {value} is not within {TRIG_TOLERANCE} of an integer"
                )));
            }
            Ok(nearest as i64)
        }
    }
}

/// `2 Σ_{e=0}^{s} (e+1)·|A_e|`.
pub fn b3_plus_b7(data: &SeifertData) -> Result<u64> {
    let mut total = 0u64;
    for e in 0..=lattice::max_level(data) {
        total += (e + 1) * lattice::count_a(e, data)?;
    }
    Ok(2 * total)
}

/// `2 Σ_{e=0}^{s} (−1)^e C(n−2, e)·|B_e|`.
pub fn b3_plus_b7_alternating(data: &SeifertData) -> Result<u64> {
    let n = data.len() as i64;
    let mut total: i128 = 0;
    for e in 0..=lattice::max_level(data) {
        let term = lattice::binomial(n - 2, e as i64) as i128 * lattice::count_b(e, data)? as i128;
        total += if e % 2 == 0 { term } else { -term };
    }
    u64::try_from(2 * total)
        .map_err(|_| Error::violation(format!("alternating B sum is negative: {total}")))
}

/// `λ = μ̄ − (b₃ + b₇)`, checked against `⅛ sign M` for three fibers.
pub fn casson(data: &SeifertData) -> Result<i64> {
    let lambda = mu_bar(data, MuBarMethod::Dedekind)? - b3_plus_b7(data)? as i64;
    if let Some(from_signature) = casson_from_signature(data)? {
        if from_signature != lambda {
            return Err(Error::violation(format!(
                "λ = {lambda} from μ̄ − (b₃+b₇) but {from_signature} from the Milnor signature"
            )));
        }
    }
    Ok(lambda)
}

/// `⅛ sign M` for Brieskorn spheres, `None` when `n ≠ 3`.
pub fn casson_from_signature(data: &SeifertData) -> Result<Option<i64>> {
    match *data.multiplicities() {
        [p, q, r] => Ok(Some(lattice::milnor_signature(p, q, r)? / 8)),
        _ => Ok(None),
    }
}

/// Odd-degree instanton Betti numbers; the even ones vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FloerBetti {
    pub b1: u64,
    pub b3: u64,
    pub b5: u64,
    pub b7: u64,
}

impl FloerBetti {
    /// Solves `b₃ + b₇ = μ̄ − λ`, `b₁ + b₅ = −μ̄ − λ` with `b₁ = b₅`, `b₃ = b₇`.
    pub fn from_invariants(mu_bar: i64, casson: i64) -> Result<Self> {
        let half_nonneg = |twice: i64, what: &str| -> Result<u64> {
            if twice < 0 || twice % 2 != 0 {
                return Err(Error::violation(format!(
                    "{what} = {twice} is not a non-negative even integer"
                )));
            }
            Ok((twice / 2) as u64)
        };
        let odd = half_nonneg(mu_bar - casson, "b₃ + b₇")?;
        let even = half_nonneg(-mu_bar - casson, "b₁ + b₅")?;
        Ok(FloerBetti {
            b1: even,
            b3: odd,
            b5: even,
            b7: odd,
        })
    }

    pub fn total(&self) -> u64 {
        self.b1 + self.b3 + self.b5 + self.b7
    }

    /// `[b₀, …, b₇]`.
    pub fn graded(&self) -> [u64; 8] {
        [0, self.b1, 0, self.b3, 0, self.b5, 0, self.b7]
    }

    /// `−(b₁+b₃+b₅+b₇) = 2λ` and `−b₁+b₃−b₅+b₇ = 2μ̄`.
    pub fn satisfies(&self, mu_bar: i64, casson: i64) -> bool {
        let (b1, b3, b5, b7) = (self.b1 as i64, self.b3 as i64, self.b5 as i64, self.b7 as i64);
        self.b1 == self.b5
            && self.b3 == self.b7
            && -(b1 + b3 + b5 + b7) == 2 * casson
            && -b1 + b3 - b5 + b7 == 2 * mu_bar
            && b3 + b7 == mu_bar - casson
            && b1 + b5 == -mu_bar - casson
    }
}

impl core::ops::Add for FloerBetti {
    type Output = FloerBetti;

    fn add(self, o: FloerBetti) -> FloerBetti {
        FloerBetti {
            b1: self.b1 + o.b1,
            b3: self.b3 + o.b3,
            b5: self.b5 + o.b5,
            b7: self.b7 + o.b7,
        }
    }
}

pub fn floer_betti(data: &SeifertData) -> Result<FloerBetti> {
    FloerBetti::from_invariants(mu_bar(data, MuBarMethod::Dedekind)?, casson(data)?)
}

/// `#𝓜 = 2 Σ (e+1)·|A_e|`.
pub fn sw_monopole_count(data: &SeifertData) -> Result<u64> {
    b3_plus_b7(data)
}

/// `λ = −#𝓜 + μ̄`. For `n ≥ 4` this restates how `λ` is defined here; for
/// three fibers `λ` comes from the signature and the check has content.
pub fn lambda_sw_consistency(data: &SeifertData) -> Result<bool> {
    let lambda = casson(data)?;
    let count = sw_monopole_count(data)? as i64;
    Ok(lambda == -count + mu_bar(data, MuBarMethod::Dedekind)?)
}

/// Whether the Betti numbers add up under [`SeifertData::splice_split`].
pub fn additivity_check(data: &SeifertData, j: usize) -> Result<bool> {
    let (left, right) = data.splice_split(j)?;
    Ok(floer_betti(data)? == floer_betti(&left)? + floer_betti(&right)?)
}

/// `χ(⌈K/2⌉) = χ(⌊K/2⌋)`, which equals `b₃ + b₇`.
pub fn chi_half_canonical(data: &SeifertData) -> Result<u64> {
    b3_plus_b7(data)
}

/// `2·#{spectrum points k/p + l/q + m/r < ½(1 + 1/p + 1/q + 1/r)}` for
/// three fibers.
pub fn spectrum_sw_count(data: &SeifertData) -> Result<Option<u64>> {
    let [p, q, r] = *data.multiplicities() else {
        return Ok(None);
    };
    let bound = (Rational::one()
        + Rational::new(BigInt::one(), p.into())
        + Rational::new(BigInt::one(), q.into())
        + Rational::new(BigInt::one(), r.into()))
        * half();
    Ok(Some(2 * lattice::spectrum_count_below(p, q, r, &bound, Strictness::Strict)?))
}

/// `μ̄` from every applicable route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MuBarRoutes {
    pub plumbing: i64,
    pub dedekind: i64,
    pub trig: Option<i64>,
}

impl MuBarRoutes {
    pub fn compute(data: &SeifertData) -> Result<Self> {
        let trig = if data.is_odd() {
            Some(mu_bar(data, MuBarMethod::Trig)?)
        } else {
            None
        };
        Ok(MuBarRoutes {
            plumbing: mu_bar(data, MuBarMethod::Plumbing)?,
            dedekind: mu_bar(data, MuBarMethod::Dedekind)?,
            trig,
        })
    }

    pub fn get(&self, method: MuBarMethod) -> Option<i64> {
        match method {
            MuBarMethod::Plumbing => Some(self.plumbing),
            MuBarMethod::Dedekind => Some(self.dedekind),
            MuBarMethod::Trig => self.trig,
        }
    }

    pub fn agree(&self) -> bool {
        self.plumbing == self.dedekind && self.trig.is_none_or(|t| t == self.dedekind)
    }
}

/// `b₃ + b₇` from the bounded `A` counts and from the alternating `B` counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct B37Routes {
    pub lattice_a: u64,
    pub alternating_b: u64,
}

/// Every invariant of one `Σ(a₁,…,aₙ)`, with all routes cross-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub data: SeifertData,
    pub method: MuBarMethod,
    pub casson: i64,
    pub mu_bar: i64,
    pub mu_bar_routes: MuBarRoutes,
    pub betti: FloerBetti,
    pub sw_count: u64,
    pub chi_half_canonical: u64,
    pub b3_plus_b7_routes: B37Routes,
    pub plumbing: PlumbingInvariants,
    /// Three fibers only.
    pub tau: Option<TauTriple>,
    pub milnor_signature: Option<i64>,
    pub spectrum_sw_count: Option<u64>,
}

impl InvariantReport {
    /// Computes every route and fails with an invariant violation on any
    /// disagreement. The reported `μ̄` is the one from `method`.
    pub fn compute(data: &SeifertData, method: MuBarMethod) -> Result<Self> {
        if method == MuBarMethod::Trig && !data.is_odd() {
            return Err(Error::Domain("trigonometric μ̄ needs an odd product"));
        }
        let mu_bar_routes = MuBarRoutes::compute(data)?;
        if !mu_bar_routes.agree() {
            return Err(Error::violation(format!("μ̄ routes disagree: {mu_bar_routes:?}")));
        }
        let mu = mu_bar_routes.dedekind;

        let b3_plus_b7_routes = B37Routes {
            lattice_a: b3_plus_b7(data)?,
            alternating_b: b3_plus_b7_alternating(data)?,
        };
        if b3_plus_b7_routes.lattice_a != b3_plus_b7_routes.alternating_b {
            return Err(Error::violation(format!(
                "b₃ + b₇ routes disagree: {b3_plus_b7_routes:?}"
            )));
        }
        let b37 = b3_plus_b7_routes.lattice_a;
        let lambda = mu - b37 as i64;

        let (tau, milnor_signature, spectrum_count) = match *data.multiplicities() {
            [p, q, r] => {
                let tau = lattice::tau_counts(p, q, r)?;
                let sign = lattice::milnor_signature(p, q, r)?;
                (Some(tau), Some(sign), spectrum_sw_count(data)?)
            }
            _ => (None, None, None),
        };
        if let Some(sign) = milnor_signature {
            if sign != 8 * lambda {
                return Err(Error::violation(format!(
                    "λ = {lambda} but the Milnor signature is {sign}"
                )));
            }
        }

        let betti = FloerBetti::from_invariants(mu, lambda)?;
        if !betti.satisfies(mu, lambda) {
            return Err(Error::violation(format!("Betti relations fail for {betti:?}")));
        }
        if let Some(tau) = tau {
            let twice = tau.tau2 as i64 - tau.tau1 as i64 - tau.tau3 as i64;
            if twice % 4 != 0 || betti.total() as i64 != twice / 4 {
                return Err(Error::violation(format!(
                    "Betti total {} differs from (−τ₁+τ₂−τ₃)/4 for {tau:?}",
                    betti.total()
                )));
            }
        }
        if let Some(count) = spectrum_count {
            if count != b37 {
                return Err(Error::violation(format!(
                    "spectrum count {count} differs from b₃ + b₇ = {b37}"
                )));
            }
        }

        let plumbing = analyze_plumbing(data)?;
        let mu_bar = mu_bar_routes
            .get(method)
            .expect("requested route was computed");
        Ok(InvariantReport {
            data: data.clone(),
            method,
            casson: lambda,
            mu_bar,
            mu_bar_routes,
            betti,
            sw_count: b37,
            chi_half_canonical: b37,
            b3_plus_b7_routes,
            plumbing,
            tau,
            milnor_signature,
            spectrum_sw_count: spectrum_count,
        })
    }
}

/// Splits with the Betti numbers of both halves, for every admissible `j`.
pub fn additivity_table(
    data: &SeifertData,
) -> Result<Vec<(usize, FloerBetti, FloerBetti, bool)>> {
    let whole = floer_betti(data)?;
    (2..=data.len().saturating_sub(2))
        .map(|j| {
            let (l, r) = data.splice_split(j)?;
            let (bl, br) = (floer_betti(&l)?, floer_betti(&r)?);
            Ok((j, bl, br, bl + br == whole))
        })
        .collect()
}

/// Difference between the Dedekind expression with the `1/(8a)` term kept
/// unconditionally and the reported `μ̄`.
pub fn dedekind_constant_defect(data: &SeifertData) -> Result<Rational> {
    let mut value = mu_bar_dedekind_exact(data)?;
    if !data.is_odd() {
        value += Rational::new(BigInt::one(), data.product() * 8);
    }
    Ok(value - Rational::from_integer(mu_bar(data, MuBarMethod::Plumbing)?.into()))
}
