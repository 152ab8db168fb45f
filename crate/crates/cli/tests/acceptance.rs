//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.
//!
//! Tolerances and budgets are pinned below and are part of the criteria.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use floer_calc::sampler::{coprime_tuples, sample_tuples, SAMPLE_MAX_PRODUCT};
use floer_core::arithmetic::{
    cot_cot_dedekind_check, cot_sum_identity_check, csc_cot_rademacher_check,
    csc_sum_identity_check, dedekind_sum, reciprocity_rhs,
};
use floer_core::invariants::{
    self, additivity_table, b3_plus_b7, b3_plus_b7_alternating, casson, casson_from_signature,
    chi_half_canonical, floer_betti, mu_bar, spectrum_sw_count, sw_monopole_count, FloerBetti,
    MuBarMethod,
};
use floer_core::lattice::{
    alternating_identity, composition_identity, count_b, max_level, reduction_rhs, tau_counts,
};
use floer_core::plumbing::{analyze_plumbing, build_plumbing};
use floer_core::torusknot::{self, TorusKnotReport};
use floer_core::SeifertData;
use num_integer::Integer;
use rayon::prelude::*;

/// Distance from an integer allowed for the trigonometric `μ̄`.
const TRIG_TOLERANCE: f64 = 1e-6;
/// Tolerance for the Fourier expansions and the cot/csc forms of Dedekind sums.
const FOURIER_TOLERANCE: f64 = 1e-9;
/// Product bound for the triple corpus.
const TRIPLE_MAX_PRODUCT: u64 = 10_000;
/// Number and seed of sampled 4- and 5-tuples.
const SAMPLE_COUNT: usize = 50;
const SAMPLE_SEED: u64 = 0x5eed;
/// Parameter bound for the brute-force lemma checks.
const LEMMA_LIMIT: u64 = 12;
/// Range for torus knots.
const TORUS_LIMIT: u64 = 60;
/// Range for reciprocity and for the Fourier moduli.
const RECIPROCITY_LIMIT: u64 = 200;
const FOURIER_LIMIT: u64 = 99;

const ANCHOR_BUDGET: Duration = Duration::from_secs(1);
const MU_ROUTES_BUDGET: Duration = Duration::from_secs(60);
const DINV_BUDGET: Duration = Duration::from_secs(10);

struct Verdict {
    failures: Vec<String>,
    checks: u64,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: Verdict) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.check(took < limit, || format!("took {took:?}, budget {limit:?}"));
    }
}

fn par_verdict<T: Sync>(items: &[T], f: impl Fn(&T) -> Verdict + Sync + Send) -> Verdict {
    let parts: Vec<Verdict> = items.par_iter().map(f).collect();
    let mut all = Verdict::new();
    for p in parts {
        all.absorb(p);
    }
    all
}

fn data(t: &[u64]) -> SeifertData {
    SeifertData::normalize(t).expect("valid tuple")
}

fn triples() -> Vec<Vec<u64>> {
    coprime_tuples(3, TRIPLE_MAX_PRODUCT)
}

fn samples() -> Vec<Vec<u64>> {
    sample_tuples(SAMPLE_COUNT, SAMPLE_SEED)
}

fn all_mu_routes(d: &SeifertData) -> Result<Vec<i64>, String> {
    let mut out = vec![
        mu_bar(d, MuBarMethod::Plumbing).map_err(|e| e.to_string())?,
        mu_bar(d, MuBarMethod::Dedekind).map_err(|e| e.to_string())?,
    ];
    if d.is_odd() {
        out.push(mu_bar(d, MuBarMethod::Trig).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    // (tuple, λ, μ̄, Betti numbers, #𝓜)
    type Anchor = (&'static [u64], i64, i64, FloerBetti, u64);
    let anchors: [Anchor; 2] = [
        (&[2, 3, 5], -1, -1, FloerBetti { b1: 1, b3: 0, b5: 1, b7: 0 }, 0),
        (&[2, 3, 7], -1, 1, FloerBetti { b1: 0, b3: 1, b5: 0, b7: 1 }, 2),
    ];
    for (t, lambda, mu, betti, count) in anchors {
        let d = data(t);
        match all_mu_routes(&d) {
            Ok(routes) => v.check(routes.iter().all(|&m| m == mu), || format!("μ̄ routes {routes:?} on {t:?}")),
            Err(e) => v.check(false, || e),
        }
        v.check(b3_plus_b7(&d).ok() == Some(count), || format!("A-route #𝓜 on {t:?}"));
        v.check(b3_plus_b7_alternating(&d).ok() == Some(count), || format!("B-route #𝓜 on {t:?}"));
        v.check(casson(&d).ok() == Some(lambda), || format!("λ via μ̄ − (b₃+b₇) on {t:?}"));
        v.check(casson_from_signature(&d).ok().flatten() == Some(lambda), || {
            format!("λ via Milnor signature on {t:?}")
        });
        v.check(floer_betti(&d).ok() == Some(betti), || format!("Betti numbers on {t:?}"));
        v.check(sw_monopole_count(&d).ok() == Some(count), || format!("#𝓜 on {t:?}"));
    }
    let d = data(&[2, 3, 5, 7]);
    v.check(b3_plus_b7(&d).ok() == Some(14), || "A-route b₃+b₇ on (2,3,5,7)".into());
    v.check(b3_plus_b7_alternating(&d).ok() == Some(14), || "B-route b₃+b₇ on (2,3,5,7)".into());
    v.budget(start, ANCHOR_BUDGET);
    v
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut v = par_verdict(&triples(), |t| {
        let mut v = Verdict::new();
        let d = data(t);
        match all_mu_routes(&d) {
            Ok(r) => v.check(r.windows(2).all(|w| w[0] == w[1]), || format!("{t:?}: {r:?}")),
            Err(e) => v.check(false, || format!("{t:?}: {e}")),
        }
        if d.is_odd() {
            let value = invariants::mu_bar_trig_value(&d).unwrap_or(f64::NAN);
            v.check((value - value.round()).abs() < TRIG_TOLERANCE, || {
                format!("{t:?}: trigonometric μ̄ = {value}")
            });
        }
        v
    });
    v.budget(start, MU_ROUTES_BUDGET);
    v
}

fn ab_and_reduction(t: &[u64]) -> Verdict {
    let mut v = Verdict::new();
    let d = data(t);
    let (a, b) = (b3_plus_b7(&d), b3_plus_b7_alternating(&d));
    v.check(a.is_ok() && a == b, || format!("{t:?}: A {a:?} vs B {b:?}"));
    let s = max_level(&d);
    for p in 0..=s {
        let (lhs, rhs) = (count_b(s - p, &d), reduction_rhs(&d, p));
        v.check(lhs.is_ok() && lhs == rhs, || format!("{t:?}: reduction at p = {p}"));
    }
    v
}

fn criterion_3() -> Verdict {
    let mut v = par_verdict(&triples(), |t| ab_and_reduction(t));
    let sampled = samples();
    v.check(
        sampled.iter().all(|t| t.iter().product::<u64>() <= SAMPLE_MAX_PRODUCT),
        || "sampled product bound".into(),
    );
    v.absorb(par_verdict(&sampled, |t| ab_and_reduction(t)));
    for n in 1..=LEMMA_LIMIT {
        for p in 1..=LEMMA_LIMIT {
            for k in 0..p {
                let (l, r) = composition_identity(n, p, k);
                v.check(l == r, || format!("composition lemma n={n} p={p} k={k}"));
            }
        }
        for k in 0..=LEMMA_LIMIT {
            let (l, r) = alternating_identity(n, k);
            v.check(l == r, || format!("alternating lemma n={n} k={k}"));
        }
    }
    v
}

fn criterion_4() -> Verdict {
    par_verdict(&samples(), |t| {
        let mut v = Verdict::new();
        let d = data(t);
        match (floer_betti(&d), additivity_table(&d)) {
            (Ok(whole), Ok(rows)) => {
                v.check(rows.len() == t.len() - 3, || format!("{t:?}: split count"));
                for (j, l, r, ok) in rows {
                    v.check(ok && l + r == whole, || format!("{t:?}: additivity at j = {j}"));
                }
            }
            (a, b) => v.check(false, || format!("{t:?}: {a:?} {b:?}")),
        }
        v
    })
}

fn criterion_5() -> Verdict {
    par_verdict(&triples(), |t| {
        let mut v = Verdict::new();
        let (p, q, r) = (t[0], t[1], t[2]);
        let d = data(t);
        let (Ok(tau), Ok(betti), Ok(Some(count))) = (
            tau_counts(p, q, r),
            floer_betti(&d),
            spectrum_sw_count(&d),
        ) else {
            v.check(false, || format!("{t:?}: computation failed"));
            return v;
        };
        let sign = tau.tau1 as i64 - tau.tau2 as i64 + tau.tau3 as i64;
        let twice = tau.tau2 as i64 - tau.tau1 as i64 - tau.tau3 as i64;
        v.check(tau.tau1 == tau.tau3, || format!("{t:?}: τ₁ ≠ τ₃"));
        v.check(sign % 8 == 0, || format!("{t:?}: 8 ∤ τ₁−τ₂+τ₃"));
        v.check(twice % 4 == 0 && betti.total() as i64 == twice / 4, || {
            format!("{t:?}: Betti total vs τ")
        });
        v.check(betti.b3 + betti.b7 == count, || format!("{t:?}: spectrum count {count}"));
        v
    })
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let mut v = Verdict::new();
    // Closed endpoint: the single spectrum point of T(2,3) lies on the bound.
    v.check(torusknot::d_spectrum(2, 3).ok() == Some(-2), || "T(2,3) spectrum route".into());
    v.check(torusknot::d_theta(2, 3).ok() == Some(-2), || "T(2,3) h⁰ route".into());
    let ps: Vec<u64> = (2..=TORUS_LIMIT).collect();
    v.absorb(par_verdict(&ps, |&p| {
        let mut v = Verdict::new();
        for q in p + 1..=TORUS_LIMIT {
            if p.gcd(&q) != 1 {
                continue;
            }
            match TorusKnotReport::compute(p, q) {
                Ok(r) => {
                    v.check(r.routes.agree() && r.d < 0 && r.d % 2 == 0, || format!("T({p},{q}): {:?}", r.routes));
                    v.check(r.arf_consistent, || format!("T({p},{q}): mod-2 relation"));
                }
                Err(e) => v.check(false, || format!("T({p},{q}): {e}")),
            }
        }
        v
    }));
    v.budget(start, DINV_BUDGET);
    v
}

fn criterion_7() -> Verdict {
    let ps: Vec<u64> = (1..=RECIPROCITY_LIMIT).collect();
    let mut v = par_verdict(&ps, |&p| {
        let mut v = Verdict::new();
        for q in 1..=RECIPROCITY_LIMIT {
            if p.gcd(&q) == 1 {
                let ok = match (dedekind_sum(p, q), dedekind_sum(q, p)) {
                    (Ok(a), Ok(b)) => a + b == reciprocity_rhs(p, q),
                    _ => false,
                };
                v.check(ok, || format!("reciprocity ({p},{q})"));
            }
        }
        v
    });
    let odd: Vec<u64> = (3..=FOURIER_LIMIT).step_by(2).collect();
    v.absorb(par_verdict(&odd, |&p| {
        let mut v = Verdict::new();
        for h in 1..p {
            if h.gcd(&p) != 1 {
                continue;
            }
            let h = h as i64;
            v.check(cot_sum_identity_check(h, p, FOURIER_TOLERANCE).unwrap_or(false), || {
                format!("cotangent lemma h={h} p={p}")
            });
            v.check(csc_sum_identity_check(h, p, FOURIER_TOLERANCE).unwrap_or(false), || {
                format!("cosecant lemma h={h} p={p}")
            });
        }
        for q in 1..2 * p {
            if q.gcd(&p) != 1 {
                continue;
            }
            v.check(cot_cot_dedekind_check(q, p, FOURIER_TOLERANCE).unwrap_or(false), || {
                format!("cotangent form of s({q},{p})")
            });
            if q % 2 == 1 {
                v.check(csc_cot_rademacher_check(q, p, FOURIER_TOLERANCE).unwrap_or(false), || {
                    format!("cosecant form of s({q},{p};½,½)")
                });
            }
        }
        v
    }));
    v
}

fn structural(t: &[u64]) -> Verdict {
    let mut v = Verdict::new();
    let d = data(t);
    let graph = build_plumbing(&d);
    match (analyze_plumbing(&d), graph.wu_class()) {
        (Ok(p), Ok(w)) => {
            v.check(p.determinant.magnitude() == &1u32.into(), || format!("{t:?}: det {}", p.determinant));
            v.check(graph.is_characteristic(&w), || format!("{t:?}: Wu class"));
            v.check((p.signature - p.wu_square) % 8 == 0, || format!("{t:?}: sign P − w·w"));
        }
        (a, b) => v.check(false, || format!("{t:?}: {a:?} {b:?}")),
    }
    match (floer_betti(&d), sw_monopole_count(&d), chi_half_canonical(&d)) {
        (Ok(b), Ok(sw), Ok(chi)) => {
            v.check(sw == b.b3 + b.b7 && chi == sw, || format!("{t:?}: #𝓜 {sw}, χ {chi}, {b:?}"));
        }
        (a, b, c) => v.check(false, || format!("{t:?}: {a:?} {b:?} {c:?}")),
    }
    v
}

fn criterion_8() -> Verdict {
    let mut corpus = triples();
    corpus.extend(samples());
    par_verdict(&corpus, |t| structural(t))
}

type Criterion = fn() -> Verdict;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("calibration anchors", criterion_1),
        ("μ̄ three-route agreement", criterion_2),
        ("A-route equals alternating B-route", criterion_3),
        ("additivity under splice splits", criterion_4),
        ("signature and spectrum consistency", criterion_5),
        ("d-invariant four-route agreement", criterion_6),
        ("number-theory kernel", criterion_7),
        ("structural invariants", criterion_8),
    ];
    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let ok = v.failures.is_empty();
        all_ok &= ok;
        println!(
            "criterion {}: {} {name} ({} checks, {} failed, {:.2?})",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            v.checks,
            v.failures.len(),
            start.elapsed()
        );
        for f in v.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
