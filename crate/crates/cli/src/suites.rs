//! Property suites behind `floer-calc verify`.
//!
//! Each suite runs a family of independent checks and records every failure
//! in check order, so reruns with the same arguments give the same report.

use floer_core::arithmetic::{
    cot_cot_dedekind_check, cot_sum_identity_check, csc_cot_rademacher_check,
    csc_sum_identity_check, dedekind_sum, reciprocity_rhs,
};
use floer_core::invariants::{self, MuBarRoutes};
use floer_core::lattice;
use floer_core::plumbing::{analyze_plumbing, build_plumbing};
use floer_core::{SeifertData, TorusKnotReport};
use num_integer::Integer;
use rayon::prelude::*;

use crate::args::Suite;
use crate::sampler;

/// Tolerance for the Fourier and trigonometric identities.
pub const FOURIER_TOLERANCE: f64 = 1e-9;

/// How many failure descriptions a summary keeps.
const MAX_REPORTED: usize = 20;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub checks: u64,
    pub failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    pub fn failed(&self) -> u64 {
        self.failures.len() as u64
    }

    pub fn passed(&self) -> u64 {
        self.checks - self.failed()
    }

    pub fn reported(&self) -> Vec<String> {
        self.failures.iter().take(MAX_REPORTED).cloned().collect()
    }
}

pub fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Reciprocity => "reciprocity",
        Suite::Fourier => "fourier",
        Suite::MuRoutes => "mu-routes",
        Suite::Additivity => "additivity",
        Suite::DinvRoutes => "dinv-routes",
        Suite::Lemmas => "lemmas",
    }
}

pub fn run(suite: Suite, limit: u64, seed: u64) -> Outcome {
    match suite {
        Suite::Reciprocity => reciprocity(limit),
        Suite::Fourier => fourier(limit),
        Suite::MuRoutes => mu_routes(limit),
        Suite::Additivity => additivity(limit as usize, seed),
        Suite::DinvRoutes => dinv_routes(limit),
        Suite::Lemmas => lemmas(limit),
    }
}

/// Runs `per_item` in parallel and merges outcomes in item order.
fn fan_out<T: Sync>(items: &[T], per_item: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    items
        .par_iter()
        .map(per_item)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
}

/// `s(p,q) + s(q,p) = −1/4 + (p/q + q/p + 1/pq)/12` for coprime
/// `1 ≤ p, q ≤ limit`.
pub fn reciprocity(limit: u64) -> Outcome {
    let ps: Vec<u64> = (1..=limit).collect();
    fan_out(&ps, |&p| {
        let mut out = Outcome::default();
        for q in 1..=limit {
            if p.gcd(&q) != 1 {
                continue;
            }
            let ok = match (dedekind_sum(p, q), dedekind_sum(q, p)) {
                (Ok(a), Ok(b)) => a + b == reciprocity_rhs(p, q),
                _ => false,
            };
            out.check(ok, || format!("reciprocity fails for ({p},{q})"));
        }
        out
    })
}

/// Both sawtooth Fourier expansions for odd `p ≤ limit` and every `h` prime
/// to `p`, and the two cotangent/cosecant forms of Dedekind sums.
pub fn fourier(limit: u64) -> Outcome {
    let ps: Vec<u64> = (3..=limit).step_by(2).collect();
    fan_out(&ps, |&p| {
        let mut out = Outcome::default();
        for h in 1..p as i64 {
            if (h as u64).gcd(&p) != 1 {
                continue;
            }
            let tol = FOURIER_TOLERANCE;
            out.check(cot_sum_identity_check(h, p, tol).unwrap_or(false), || {
                format!("cotangent expansion of (({h}/{p}))")
            });
            out.check(csc_sum_identity_check(h, p, tol).unwrap_or(false), || {
                format!("cosecant expansion of (({h}/{p} + 1/2))")
            });
        }
        for q in 1..2 * p {
            if q.gcd(&p) != 1 {
                continue;
            }
            out.check(
                cot_cot_dedekind_check(q, p, FOURIER_TOLERANCE).unwrap_or(false),
                || format!("cotangent form of s({q},{p})"),
            );
            if q % 2 == 1 {
                out.check(
                    csc_cot_rademacher_check(q, p, FOURIER_TOLERANCE).unwrap_or(false),
                    || format!("cosecant form of s({q},{p};1/2,1/2)"),
                );
            }
        }
        out
    })
}

/// Structural plumbing checks and three-route `μ̄` agreement on one tuple.
pub fn mu_routes_for(data: &SeifertData) -> Outcome {
    let mut out = Outcome::default();
    let t = data.multiplicities().to_vec();
    match MuBarRoutes::compute(data) {
        Ok(routes) => out.check(routes.agree(), || format!("μ̄ routes disagree on {t:?}: {routes:?}")),
        Err(e) => out.check(false, || format!("μ̄ failed on {t:?}: {e}")),
    }
    let graph = build_plumbing(data);
    match (analyze_plumbing(data), graph.wu_class()) {
        (Ok(p), Ok(w)) => {
            out.check(p.determinant.magnitude() == &1u32.into(), || {
                format!("plumbing determinant {} on {t:?}", p.determinant)
            });
            out.check(graph.is_characteristic(&w), || format!("Wu class not characteristic on {t:?}"));
            out.check((p.signature - p.wu_square).rem_euclid(8) == 0, || {
                format!("sign P − w·w not divisible by 8 on {t:?}")
            });
        }
        (Err(e), _) | (_, Err(e)) => out.check(false, || format!("plumbing failed on {t:?}: {e}")),
    }
    out
}

/// Every pairwise-coprime triple with product `≤ limit`.
pub fn mu_routes(limit: u64) -> Outcome {
    let tuples = sampler::coprime_tuples(3, limit);
    fan_out(&tuples, |t| match SeifertData::normalize(t) {
        Ok(d) => mu_routes_for(&d),
        Err(e) => Outcome {
            checks: 1,
            failures: vec![format!("{t:?}: {e}")],
        },
    })
}

/// Lattice identities and additivity on one tuple: A = B, the reduction
/// identity at every level, `λ = −#𝓜 + μ̄`, and additivity at every split.
pub fn tuple_identities(data: &SeifertData) -> Outcome {
    let mut out = Outcome::default();
    let t = data.multiplicities().to_vec();
    let a = invariants::b3_plus_b7(data);
    let b = invariants::b3_plus_b7_alternating(data);
    out.check(matches!((&a, &b), (Ok(x), Ok(y)) if x == y), || {
        format!("A/B routes differ on {t:?}: {a:?} vs {b:?}")
    });
    let s = lattice::max_level(data);
    for p in 0..=s {
        let lhs = lattice::count_b(s - p, data);
        let rhs = lattice::reduction_rhs(data, p);
        out.check(matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y), || {
            format!("reduction identity fails on {t:?} at p = {p}")
        });
    }
    out.check(invariants::lambda_sw_consistency(data).unwrap_or(false), || {
        format!("λ ≠ −#𝓜 + μ̄ on {t:?}")
    });
    match invariants::additivity_table(data) {
        Ok(rows) => {
            for (j, _, _, ok) in rows {
                out.check(ok, || format!("additivity fails on {t:?} at j = {j}"));
            }
        }
        Err(e) => out.check(false, || format!("additivity failed on {t:?}: {e}")),
    }
    out
}

/// `count` seeded 4- and 5-tuples.
pub fn additivity(count: usize, seed: u64) -> Outcome {
    let tuples = sampler::sample_tuples(count, seed);
    fan_out(&tuples, |t| match SeifertData::normalize(t) {
        Ok(d) => tuple_identities(&d),
        Err(e) => Outcome {
            checks: 1,
            failures: vec![format!("{t:?}: {e}")],
        },
    })
}

/// Four-route `d` agreement and the mod-2 relation for coprime
/// `2 ≤ p < q ≤ limit`.
pub fn dinv_routes(limit: u64) -> Outcome {
    let ps: Vec<u64> = (2..=limit).collect();
    fan_out(&ps, |&p| {
        let mut out = Outcome::default();
        for q in p + 1..=limit {
            if p.gcd(&q) != 1 {
                continue;
            }
            match TorusKnotReport::compute(p, q) {
                Ok(r) => {
                    out.check(r.routes.agree() && r.d < 0, || format!("T({p},{q}): {:?}", r.routes));
                    out.check(r.arf_consistent, || format!("mod-2 relation fails for T({p},{q})"));
                }
                Err(e) => out.check(false, || format!("T({p},{q}): {e}")),
            }
        }
        out
    })
}

/// Both binomial lemmas for all parameters `≤ limit`. The alternating
/// identity is checked with lower index `n + 1`.
pub fn lemmas(limit: u64) -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=limit {
        for p in 1..=limit {
            for k in 0..p {
                let (l, r) = lattice::composition_identity(n, p, k);
                out.check(l == r, || format!("composition identity n={n} p={p} k={k}: {l} ≠ {r}"));
            }
        }
        for k in 0..=limit {
            let (l, r) = lattice::alternating_identity(n, k);
            out.check(l == r, || format!("alternating identity n={n} k={k}: {l} ≠ {r}"));
        }
    }
    out
}
