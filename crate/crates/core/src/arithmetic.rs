//! Exact rational arithmetic: the sawtooth function, Dedekind and
//! Dedekind–Rademacher sums, and floating-point evaluators for the
//! trigonometric (Fourier) forms of the same quantities.
//!
//! Floating point is confined to the `*_fourier_sum`, `*_identity_check` and
//! trigonometric sum helpers; everything that decides a count or a membership
//! is exact.

use core::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

/// Default tolerance for floating-point identity checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest modulus accepted by the direct-summation kernels.
const MAX_DIRECT_MODULUS: u64 = 1 << 40;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn half() -> Rational {
    rational(1, 2)
}

/// Lossy conversion used only for reporting and float cross-checks.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// `((r))`: zero on integers, `r − ⌊r⌋ − 1/2` otherwise.
pub fn sawtooth(r: &Rational) -> Rational {
    if r.is_integer() {
        return Rational::zero();
    }
    r - r.floor() - half()
}

/// Numerator of `((num/den))` over the fixed denominator `2·den`.
fn scaled_sawtooth(num: &BigInt, den: &BigInt) -> BigInt {
    let r = num.mod_floor(den);
    if r.is_zero() {
        BigInt::zero()
    } else {
        (r << 1) - den
    }
}

fn check_modulus(p: u64) -> Result<()> {
    if p == 0 {
        return Err(Error::OutOfRange { value: 0, min: 1 });
    }
    if p > MAX_DIRECT_MODULUS {
        return Err(Error::Overflow("modulus too large for direct summation"));
    }
    Ok(())
}

fn check_coprime(q: &BigInt, p: u64) -> Result<()> {
    let p_big = BigInt::from(p);
    if !q.gcd(&p_big).is_one() {
        return Err(Error::NotCoprime {
            left: q.to_i128().unwrap_or(i128::MAX),
            right: p as i128,
        });
    }
    Ok(())
}

/// Classical Dedekind sum `s(q,p) = Σ_{h mod p} ((h/p)) ((qh/p))`, by direct
/// summation.
pub fn dedekind_sum(q: impl Into<BigInt>, p: u64) -> Result<Rational> {
    let q = q.into();
    check_modulus(p)?;
    check_coprime(&q, p)?;
    let p_big = BigInt::from(p);
    let q_red = q
        .mod_floor(&p_big)
        .to_u64()
        .expect("residue below a u64 modulus");
    let p_i = p as i128;
    let mut acc: i128 = 0;
    for h in 1..p {
        let r = ((h as u128 * q_red as u128) % p as u128) as i128;
        if r != 0 {
            acc += (2 * h as i128 - p_i) * (2 * r - p_i);
        }
    }
    Ok(Rational::new(acc.into(), BigInt::from(4) * &p_big * &p_big))
}

/// Dedekind–Rademacher sum
/// `s(q,p;x,y) = Σ_{h mod p} (((h+y)/p)) ((q(h+y)/p + x))`, by direct summation.
pub fn dedekind_rademacher(
    q: impl Into<BigInt>,
    p: u64,
    x: &Rational,
    y: &Rational,
) -> Result<Rational> {
    let q = q.into();
    check_modulus(p)?;
    check_coprime(&q, p)?;

    let (xn, xd) = (x.numer(), x.denom());
    let (yn, yd) = (y.numer(), y.denom());
    let p_big = BigInt::from(p);
    let d1 = &p_big * yd;
    let d2 = &d1 * xd;
    // q only matters modulo p·den(y).
    let q = q.mod_floor(&d1);
    let x_shift = xn * &d1;

    let mut acc = BigInt::zero();
    let mut h_big = BigInt::zero();
    for _ in 0..p {
        let n1 = &h_big * yd + yn;
        let s1 = scaled_sawtooth(&n1, &d1);
        if !s1.is_zero() {
            let n2 = &q * &n1 * xd + &x_shift;
            acc += s1 * scaled_sawtooth(&n2, &d2);
        }
        h_big += 1;
    }
    Ok(Rational::new(acc, BigInt::from(4) * d1 * d2))
}

/// Right-hand side of Dedekind reciprocity,
/// `−1/4 + (p/q + q/p + 1/(pq))/12`.
pub fn reciprocity_rhs(p: u64, q: u64) -> Rational {
    let p = BigInt::from(p);
    let q = BigInt::from(q);
    let pq = &p * &q;
    let inner = Rational::new(&p * &p + &q * &q + BigInt::one(), pq);
    inner / Rational::from_integer(12.into()) - rational(1, 4)
}

fn cot(x: f64) -> f64 {
    libm::cos(x) / libm::sin(x)
}

fn csc(x: f64) -> f64 {
    1.0 / libm::sin(x)
}

/// Unit-circle point `ζ^k` with `ζ = e^{2πi/p}`, reducing `k` first.
fn root_of_unity(k: i128, p: u64) -> (f64, f64) {
    let k = k.rem_euclid(p as i128) as f64;
    let t = 2.0 * PI * k / p as f64;
    (libm::cos(t), libm::sin(t))
}

fn fourier_sum(h: i64, p: u64, coeff: impl Fn(u64) -> f64) -> (f64, f64) {
    let (mut re, mut im) = (0.0, 0.0);
    for n in 1..p {
        let c = coeff(n);
        let (zr, zi) = root_of_unity(h as i128 * n as i128, p);
        // i·c·(zr + i·zi) = c·(−zi + i·zr)
        re -= c * zi;
        im += c * zr;
    }
    let scale = 1.0 / (2.0 * p as f64);
    (re * scale, im * scale)
}

/// `(i/2p) Σ_{n=1}^{p−1} cot(πn/p) ζ^{hn}` as `(re, im)`.
pub fn cot_fourier_sum(h: i64, p: u64) -> (f64, f64) {
    fourier_sum(h, p, |n| cot(PI * n as f64 / p as f64))
}

/// `(i/2p) Σ_{n=1}^{p−1} (−1)^n csc(πn/p) ζ^{hn}` as `(re, im)`.
pub fn csc_fourier_sum(h: i64, p: u64) -> (f64, f64) {
    fourier_sum(h, p, |n| {
        let s = csc(PI * n as f64 / p as f64);
        if n % 2 == 0 {
            s
        } else {
            -s
        }
    })
}

fn check_fourier_domain(h: i64, p: u64) -> Result<()> {
    if p == 0 {
        return Err(Error::OutOfRange { value: 0, min: 1 });
    }
    if p.is_multiple_of(2) {
        return Err(Error::Domain("Fourier sawtooth identities need an odd modulus"));
    }
    check_coprime(&BigInt::from(h), p)
}

fn identity_holds(exact: &Rational, (re, im): (f64, f64), tolerance: f64) -> bool {
    (re - to_f64(exact)).abs() < tolerance && im.abs() < tolerance
}

/// Compares `((h/p))` with its cotangent Fourier expansion.
pub fn cot_sum_identity_check(h: i64, p: u64, tolerance: f64) -> Result<bool> {
    check_fourier_domain(h, p)?;
    let exact = sawtooth(&rational(h, p as i64));
    Ok(identity_holds(&exact, cot_fourier_sum(h, p), tolerance))
}

/// Compares `((h/p + 1/2))` with its alternating cosecant Fourier expansion.
pub fn csc_sum_identity_check(h: i64, p: u64, tolerance: f64) -> Result<bool> {
    check_fourier_domain(h, p)?;
    let exact = sawtooth(&(rational(h, p as i64) + half()));
    Ok(identity_holds(&exact, csc_fourier_sum(h, p), tolerance))
}

/// `Σ_{ℓ=1}^{a−1} cot(πℓ/a) cot(πbℓ/a)`.
pub fn cot_cot_sum(b: u64, a: u64) -> f64 {
    (1..a)
        .map(|l| {
            let bl = (b as u128 * l as u128 % a as u128) as f64;
            cot(PI * l as f64 / a as f64) * cot(PI * bl / a as f64)
        })
        .sum()
}

/// `Σ_{ℓ=1}^{a−1} (−1)^ℓ csc(πℓ/a) cot(πbℓ/a)`.
pub fn csc_cot_alternating_sum(b: u64, a: u64) -> f64 {
    (1..a)
        .map(|l| {
            let bl = (b as u128 * l as u128 % a as u128) as f64;
            let term = csc(PI * l as f64 / a as f64) * cot(PI * bl / a as f64);
            if l % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `b` with `b·q ≡ −1 (mod a)`, in `0..a`.
fn negative_inverse(q: u64, a: u64) -> u64 {
    let e = (q as i128).extended_gcd(&(a as i128));
    (-e.x).rem_euclid(a as i128) as u64
}

fn check_cofactor(q: u64, a: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::OutOfRange { value: a, min: 2 });
    }
    check_modulus(a)?;
    check_coprime(&BigInt::from(q), a)
}

/// Compares `−½·s(q,a)` with `(1/8a)·Σ cot(πℓ/a) cot(πbℓ/a)`, where
/// `b·q ≡ −1 (mod a)`.
pub fn cot_cot_dedekind_check(q: u64, a: u64, tolerance: f64) -> Result<bool> {
    check_cofactor(q, a)?;
    let exact = -dedekind_sum(q, a)? / Rational::from_integer(2.into());
    let trig = cot_cot_sum(negative_inverse(q, a), a) / (8.0 * a as f64);
    Ok((trig - to_f64(&exact)).abs() < tolerance)
}

/// Compares `−s(q,a;½,½)` with `(1/4a)·Σ (−1)^ℓ csc(πℓ/a) cot(πbℓ/a)`,
/// where `b·q ≡ −1 (mod a)`. Both `q` and `a` must be odd.
pub fn csc_cot_rademacher_check(q: u64, a: u64, tolerance: f64) -> Result<bool> {
    check_cofactor(q, a)?;
    if a.is_multiple_of(2) || q.is_multiple_of(2) {
        return Err(Error::Domain("needs odd q and odd a"));
    }
    let exact = -dedekind_rademacher(q, a, &half(), &half())?;
    let trig = csc_cot_alternating_sum(negative_inverse(q, a), a) / (4.0 * a as f64);
    Ok((trig - to_f64(&exact)).abs() < tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use num_traits::Signed;
    use proptest::prelude::*;

    /// Oracle: literal sum of sawtooth products over Rationals.
    fn naive_rademacher(q: i64, p: u64, x: &Rational, y: &Rational) -> Rational {
        let p_r = Rational::from_integer(p.into());
        let q_r = Rational::from_integer(q.into());
        (0..p)
            .map(|h| {
                let t = (Rational::from_integer(h.into()) + y) / &p_r;
                sawtooth(&t) * sawtooth(&(&q_r * &t + x))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&rational(0, 1)), rational(0, 1));
        assert_eq!(sawtooth(&rational(1, 2)), rational(0, 1));
        assert_eq!(sawtooth(&rational(1, 4)), rational(-1, 4));
        assert_eq!(sawtooth(&rational(5, 4)), rational(-1, 4));
        assert_eq!(sawtooth(&rational(-7, 3)), rational(1, 6));
    }

    #[test]
    fn dedekind_examples() {
        assert_eq!(dedekind_sum(1, 1).unwrap(), rational(0, 1));
        assert_eq!(dedekind_sum(1, 3).unwrap(), rational(1, 18));
        assert_eq!(dedekind_sum(2, 3).unwrap(), rational(-1, 18));
        assert_eq!(dedekind_sum(-1, 3).unwrap(), rational(-1, 18));
        assert!(matches!(dedekind_sum(2, 4), Err(Error::NotCoprime { .. })));
        assert!(matches!(dedekind_sum(1, 0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn rademacher_examples() {
        let h = half();
        let z = rational(0, 1);
        assert_eq!(dedekind_rademacher(1, 2, &h, &h).unwrap(), rational(-1, 8));
        // h = 0: ((1/6))((1/6 + 1/2)) = (−1/3)(1/6); h = 1: ((1/2)) = 0;
        // h = 2: ((5/6))((4/3)) = (1/3)(−1/6). Total −1/9.
        assert_eq!(dedekind_rademacher(1, 3, &h, &h).unwrap(), rational(-1, 9));
        for (q, p) in [(1i64, 3u64), (2, 5), (7, 12), (-5, 13)] {
            assert_eq!(
                dedekind_rademacher(q, p, &z, &z).unwrap(),
                dedekind_sum(q, p).unwrap()
            );
            let three = rational(3, 1);
            assert_eq!(
                dedekind_rademacher(q, p, &three, &rational(-2, 1)).unwrap(),
                dedekind_sum(q, p).unwrap()
            );
        }
        assert!(dedekind_rademacher(3, 6, &h, &h).is_err());
    }

    #[test]
    fn rademacher_matches_naive_summation() {
        let shifts = [rational(0, 1), half(), rational(1, 3), rational(-2, 5)];
        for p in 1..=23u64 {
            for q in -30i64..=30 {
                if num_integer::gcd(q.unsigned_abs(), p) != 1 {
                    continue;
                }
                for x in &shifts {
                    for y in &shifts {
                        assert_eq!(
                            dedekind_rademacher(q, p, x, y).unwrap(),
                            naive_rademacher(q, p, x, y),
                            "s({q},{p};{x},{y})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reciprocity_small() {
        for p in 1..=60u64 {
            for q in 1..=60u64 {
                if num_integer::gcd(p, q) == 1 {
                    let lhs = dedekind_sum(p, q).unwrap() + dedekind_sum(q, p).unwrap();
                    assert_eq!(lhs, reciprocity_rhs(p, q), "({p},{q})");
                }
            }
        }
    }

    #[test]
    fn fourier_examples() {
        let tol = 1e-12;
        assert!(cot_sum_identity_check(1, 1, tol).unwrap());
        assert!(cot_sum_identity_check(1, 3, tol).unwrap());
        let (re, _) = cot_fourier_sum(1, 3);
        assert!((re + 1.0 / 6.0).abs() < tol);
        assert!(cot_sum_identity_check(2, 5, tol).unwrap());
        assert!(csc_sum_identity_check(1, 1, tol).unwrap());
        assert!(csc_sum_identity_check(1, 3, tol).unwrap());
        let (re, _) = csc_fourier_sum(1, 3);
        assert!((re - 1.0 / 3.0).abs() < tol);
        assert!(csc_sum_identity_check(3, 7, tol).unwrap());
        assert!(matches!(
            cot_sum_identity_check(1, 4, tol),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            csc_sum_identity_check(3, 9, tol),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn fourier_detects_wrong_values() {
        let (re, _) = cot_fourier_sum(2, 7);
        let wrong = sawtooth(&(rational(2, 7) + half()));
        assert!((re - to_f64(&wrong)).abs() > 1e-3);
    }

    #[test]
    fn averaging_identity() {
        for p in 1..=50u64 {
            for x in [rational(0, 1), half(), rational(1, 3)] {
                let total = (0..p)
                    .map(|h| sawtooth(&((Rational::from_integer(h.into()) + &x) / rational(p as i64, 1))))
                    .fold(Rational::zero(), |a, b| a + b);
                assert_eq!(total, sawtooth(&x), "p = {p}");
            }
        }
    }

    proptest! {
        #[test]
        fn sawtooth_is_odd_periodic_and_bounded(n in -10_000i64..10_000, d in 1i64..500, k in -20i64..20) {
            let r = rational(n, d);
            let s = sawtooth(&r);
            prop_assert_eq!(sawtooth(&(-&r)), -s.clone());
            prop_assert_eq!(sawtooth(&(&r + rational(k, 1))), s.clone());
            prop_assert!(s.abs() <= half());
        }

        #[test]
        fn dedekind_depends_on_residue_and_is_odd(q in -500i64..500, p in 1u64..120, k in -5i64..5) {
            prop_assume!(num_integer::gcd(q.unsigned_abs(), p) == 1);
            let s = dedekind_sum(q, p).unwrap();
            prop_assert_eq!(dedekind_sum(q + k * p as i64, p).unwrap(), s.clone());
            prop_assert_eq!(dedekind_sum(-q, p).unwrap(), -s);
        }
    }

    #[test]
    fn trig_sums_are_finite() {
        let v: Vec<f64> = (1..10).map(|b| cot_cot_sum(b, 11)).collect();
        assert!(v.iter().all(|x| x.is_finite()));
    }

    #[test]
    fn trigonometric_dedekind_forms() {
        for a in (3..=41u64).step_by(2) {
            for q in 1..2 * a {
                if q.gcd(&a) != 1 {
                    continue;
                }
                assert!(cot_cot_dedekind_check(q, a, DEFAULT_TOLERANCE).unwrap(), "{q} {a}");
                if q % 2 == 1 {
                    assert!(csc_cot_rademacher_check(q, a, DEFAULT_TOLERANCE).unwrap(), "{q} {a}");
                }
            }
        }
        // The cotangent form needs no parity.
        assert!(cot_cot_dedekind_check(3, 8, DEFAULT_TOLERANCE).unwrap());
        assert!(matches!(csc_cot_rademacher_check(2, 5, 1e-9), Err(Error::Domain(_))));
        assert!(matches!(csc_cot_rademacher_check(3, 9, 1e-9), Err(Error::NotCoprime { .. })));
    }
}
