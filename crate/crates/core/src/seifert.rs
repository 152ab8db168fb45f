//! Validated Seifert data for `Σ(a₁,…,aₙ)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Normalized multiplicities together with everything downstream formulas
/// derive from them.
///
/// * `a = a₁⋯aₙ` and `qᵢ = a/aᵢ`;
/// * `bᵢ` is the least non-negative residue with `bᵢ·qᵢ ≡ −1 (mod aᵢ)`;
/// * `e₀` is the offset with `Σ bᵢ·qᵢ = −1 + e₀·a`;
/// * `m = −(a/2)·(−2 + Σ(1 − 1/aᵢ))`, present only when `a` is odd.
///
/// Multiplicities are sorted ascending, so two permutations of the same
/// tuple normalize to equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    multiplicities: Vec<u64>,
    product: BigInt,
    cofactors: Vec<BigInt>,
    residues: Vec<u64>,
    offset: u64,
    half_shift: Option<BigInt>,
}

/// Checks that every entry is at least `min` and that entries are pairwise
/// coprime.
pub fn check_pairwise_coprime(values: &[u64], min: u64) -> Result<()> {
    if let Some(&value) = values.iter().find(|&&v| v < min) {
        return Err(Error::OutOfRange { value, min });
    }
    for (i, &x) in values.iter().enumerate() {
        for &y in &values[i + 1..] {
            if x.gcd(&y) != 1 {
                return Err(Error::NotCoprime {
                    left: x as i128,
                    right: y as i128,
                });
            }
        }
    }
    Ok(())
}

/// Inverse of `x` modulo `m`, for coprime inputs.
fn mod_inverse(x: u64, m: u64) -> u64 {
    let e = (x as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

impl SeifertData {
    pub fn normalize(a_list: &[u64]) -> Result<Self> {
        if a_list.len() < 3 {
            return Err(Error::TooFewFibers {
                min: 3,
                got: a_list.len(),
            });
        }
        check_pairwise_coprime(a_list, 2)?;

        let mut multiplicities = a_list.to_vec();
        multiplicities.sort_unstable();

        let product: BigInt = multiplicities.iter().map(|&x| BigInt::from(x)).product();
        let cofactors: Vec<BigInt> = multiplicities.iter().map(|&x| &product / x).collect();
        let residues: Vec<u64> = multiplicities
            .iter()
            .zip(&cofactors)
            .map(|(&ai, qi)| {
                let r = (qi % ai).to_u64().expect("residue below a u64 modulus");
                (ai - mod_inverse(r, ai)) % ai
            })
            .collect();

        let sum: BigInt = residues
            .iter()
            .zip(&cofactors)
            .map(|(&b, q)| q * b)
            .sum::<BigInt>()
            + 1;
        let (offset, rem) = sum.div_rem(&product);
        if !rem.is_zero() {
            return Err(Error::violation("Σ bᵢqᵢ ≢ −1 (mod a)"));
        }
        let offset = offset.to_u64().ok_or(Error::Overflow("offset"))?;

        let half_shift = if product.is_odd() {
            // m = (2a − n·a + Σ qᵢ) / 2
            let n = multiplicities.len() as i64;
            let twice: BigInt =
                &product * (2 - n) + cofactors.iter().sum::<BigInt>();
            debug_assert!(twice.is_even());
            Some(twice / 2)
        } else {
            None
        };

        Ok(SeifertData {
            multiplicities,
            product,
            cofactors,
            residues,
            offset,
            half_shift,
        })
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Number of singular fibers `n`.
    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `a = a₁⋯aₙ`.
    pub fn product(&self) -> &BigInt {
        &self.product
    }

    pub fn is_odd(&self) -> bool {
        self.product.is_odd()
    }

    /// `qᵢ = a/aᵢ`.
    pub fn cofactors(&self) -> &[BigInt] {
        &self.cofactors
    }

    /// `bᵢ`, least non-negative residues.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// `e₀ = (Σ bᵢqᵢ + 1)/a`.
    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// `m`, defined when `a` is odd.
    pub fn half_shift(&self) -> Option<&BigInt> {
        self.half_shift.as_ref()
    }

    /// The quotients `(1 + 2m·bᵢ)/aᵢ` for odd `a`; `None` for even `a`.
    pub fn half_shift_quotients(&self) -> Result<Option<Vec<BigInt>>> {
        let Some(m) = &self.half_shift else {
            return Ok(None);
        };
        self.multiplicities
            .iter()
            .zip(&self.residues)
            .map(|(&ai, &bi)| {
                let numerator: BigInt = BigInt::one() + m * bi * 2u32;
                let (quot, rem) = numerator.div_rem(&BigInt::from(ai));
                if rem.is_zero() {
                    Ok(quot)
                } else {
                    Err(Error::violation("aᵢ does not divide 1 + 2m·bᵢ"))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// Splits `Σ(a₁,…,aₙ)` at `j` (1-based, ascending order) into
    /// `Σ(a₁,…,a_j, p)` and `Σ(q, a_{j+1},…,aₙ)` with `q = a₁⋯a_j` and
    /// `p = a_{j+1}⋯aₙ`.
    pub fn splice_split(&self, j: usize) -> Result<(SeifertData, SeifertData)> {
        let n = self.len();
        if j < 2 || j + 2 > n {
            return Err(Error::SplitIndex {
                j,
                max: n.saturating_sub(2),
            });
        }
        let (head, tail) = self.multiplicities.split_at(j);
        let prod = |xs: &[u64]| {
            xs.iter()
                .try_fold(1u64, |acc, &x| acc.checked_mul(x))
                .ok_or(Error::Overflow("splice product exceeds u64"))
        };
        let mut left = head.to_vec();
        left.push(prod(tail)?);
        let mut right = alloc::vec![prod(head)?];
        right.extend_from_slice(tail);
        Ok((Self::normalize(&left)?, Self::normalize(&right)?))
    }
}
