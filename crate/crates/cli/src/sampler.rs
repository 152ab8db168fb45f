//! Deterministic enumeration and seeded sampling of pairwise-coprime tuples.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Product bound for sampled tuples.
pub const SAMPLE_MAX_PRODUCT: u64 = 1_000_000;

/// Largest entry drawn by the sampler.
const SAMPLE_MAX_ENTRY: u64 = 200;

fn coprime_to_all(x: u64, prefix: &[u64]) -> bool {
    prefix.iter().all(|&y| x.gcd(&y) == 1)
}

/// All strictly increasing pairwise-coprime `n`-tuples of integers `≥ 2` with
/// product `≤ max_product`, in lexicographic order.
pub fn coprime_tuples(n: usize, max_product: u64) -> Vec<Vec<u64>> {
    fn extend(n: usize, max_product: u64, prefix: &mut Vec<u64>, product: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().map_or(2, |&x| x + 1);
        let remaining = (n - prefix.len()) as u32;
        let mut x = start;
        // The smallest completion uses x, x+1, …; stop once even that overshoots.
        while (0..remaining as u64)
            .try_fold(product, |acc, i| acc.checked_mul(x + i))
            .is_some_and(|p| p <= max_product)
        {
            if coprime_to_all(x, prefix) {
                prefix.push(x);
                extend(n, max_product, prefix, product * x, out);
                prefix.pop();
            }
            x += 1;
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, max_product, &mut Vec::with_capacity(n), 1, &mut out);
    }
    out
}

/// `count` pairwise-coprime tuples, alternately of length 4 and 5, with
/// product `≤ SAMPLE_MAX_PRODUCT`, sorted ascending within each tuple.
pub fn sample_tuples(count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| sample_one(&mut rng, if i % 2 == 0 { 4 } else { 5 }))
        .collect()
}

fn sample_one(rng: &mut ChaCha8Rng, n: usize) -> Vec<u64> {
    'retry: loop {
        let mut tuple = Vec::with_capacity(n);
        let mut product = 1u64;
        for k in 0..n {
            let left = (n - k - 1) as u32;
            let cap = (SAMPLE_MAX_PRODUCT / product / 2u64.pow(left)).min(SAMPLE_MAX_ENTRY);
            if cap < 2 {
                continue 'retry;
            }
            let mut found = None;
            for _ in 0..64 {
                let x = rng.gen_range(2..=cap);
                if !tuple.contains(&x) && coprime_to_all(x, &tuple) {
                    found = Some(x);
                    break;
                }
            }
            let Some(x) = found else { continue 'retry };
            tuple.push(x);
            product *= x;
        }
        tuple.sort_unstable();
        return tuple;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(coprime_tuples(3, 30), vec![vec![2, 3, 5]]);
        assert!(coprime_tuples(3, 29).is_empty());
        assert_eq!(coprime_tuples(3, 42), vec![vec![2, 3, 5], vec![2, 3, 7]]);
        assert_eq!(coprime_tuples(4, 210), vec![vec![2, 3, 5, 7]]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let n = 3;
        let max = 600;
        let mut brute = Vec::new();
        for a in 2..=max {
            for b in a + 1..=max / a {
                for c in b + 1..=max / (a * b) {
                    if a * b * c <= max && a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1 {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(coprime_tuples(n, max), brute);
    }

    #[test]
    fn sampling_is_seeded_and_valid() {
        let a = sample_tuples(50, 7);
        assert_eq!(a, sample_tuples(50, 7));
        assert_ne!(a, sample_tuples(50, 8));
        for (i, t) in a.iter().enumerate() {
            assert_eq!(t.len(), if i % 2 == 0 { 4 } else { 5 });
            assert!(t.iter().product::<u64>() <= SAMPLE_MAX_PRODUCT);
            assert!(floer_core::seifert::check_pairwise_coprime(t, 2).is_ok());
        }
    }
}
