//! Exact ordinary character values of S_n via the border-strip recursion,
//! computed on beta-sets (first-column hook lengths) and memoized globally.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::CycleType;

fn memo() -> &'static Mutex<HashMap<(Partition, Partition), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Beta-set of a partition with `r` rows as a bitset: bits at lambda_i + (r-1-i).
fn beta_bits(parts: &[u32]) -> u64 {
    let r = parts.len() as u32;
    let mut bits = 0u64;
    for (i, &p) in parts.iter().enumerate() {
        bits |= 1u64 << (p + (r - 1 - i as u32));
    }
    bits
}

fn partition_from_beta(bits: u64, r: u32) -> Partition {
    let mut values: Vec<u32> = (0..64).filter(|&b| bits >> b & 1 == 1).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(values.len() as u32, r);
    let parts: Vec<u32> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| v - (r - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_desc(parts)
}

fn mn_rec(lambda: &Partition, ct: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = memo().lock().unwrap().get(&(lambda.clone(), ct.clone())) {
        return v.clone();
    }
    // remove border strips of the largest cycle length first
    let t = ct.parts()[0];
    let rest = Partition::from_desc(ct.parts()[1..].to_vec());
    let r = lambda.len() as u32;
    let bits = beta_bits(lambda.parts());
    let mut acc = BigInt::zero();
    for b in (0..64u32).filter(|&b| bits >> b & 1 == 1) {
        if b < t {
            continue;
        }
        let lo = b - t;
        if bits >> lo & 1 == 1 {
            continue;
        }
        // height of the strip = number of beta elements strictly between
        let between = if b - lo >= 2 {
            (bits >> (lo + 1) & ((1u64 << (b - lo - 1)) - 1)).count_ones()
        } else {
            0
        };
        let new_bits = bits & !(1u64 << b) | 1u64 << lo;
        let sub = partition_from_beta(new_bits, r);
        let term = mn_rec(&sub, &rest);
        if between % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    memo()
        .lock()
        .unwrap()
        .insert((lambda.clone(), ct.clone()), acc.clone());
    acc
}

/// Exact value of the irreducible S_n character labelled by `lambda` on the
/// class of cycle type `ct`.
pub fn mn_character(lambda: &Partition, ct: &CycleType) -> Result<BigInt> {
    if lambda.n() != ct.n() {
        return Err(Error::domain(format!(
            "character label {lambda} and class {ct} have different degrees"
        )));
    }
    Ok(mn_rec(lambda, ct.partition()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(lambda: &[u32], ct: &[u32]) -> BigInt {
        mn_character(
            &Partition::new(lambda.to_vec()).unwrap(),
            &CycleType::new(ct.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn deleted_permutation_character() {
        // chi_(n-1,1) = #fixed points - 1
        for ct in [vec![1, 1, 1, 1, 1], vec![2, 2, 1], vec![5], vec![3, 1, 1]] {
            let fixed = ct.iter().filter(|&&c| c == 1).count() as i64;
            assert_eq!(chi(&[4, 1], &ct), BigInt::from(fixed - 1));
        }
    }

    #[test]
    fn sign_character() {
        for ct in [vec![5], vec![4, 1], vec![2, 2, 1], vec![3, 2]] {
            let n: u32 = ct.iter().sum();
            let parts = ct.len() as u32;
            let sign = if (n - parts) % 2 == 0 { 1 } else { -1 };
            assert_eq!(chi(&[1, 1, 1, 1, 1], &ct), BigInt::from(sign));
        }
    }

    #[test]
    fn specific_values() {
        assert_eq!(chi(&[3, 1, 1], &[5]), BigInt::from(1));
        assert_eq!(chi(&[2, 2, 1], &[5]), BigInt::from(0));
        assert_eq!(chi(&[3, 2], &[4, 1]), BigInt::from(-1));
        assert_eq!(chi(&[3, 2], &[2, 2, 1]), BigInt::from(1));
        assert_eq!(chi(&[3, 1, 1], &[3, 1, 1]), BigInt::from(0));
        assert_eq!(chi(&[3, 1, 1], &[2, 2, 1]), BigInt::from(-2));
        assert_eq!(chi(&[3, 2, 1], &[5, 1]), BigInt::from(1));
        assert_eq!(chi(&[3, 2, 1], &[3, 1, 1, 1]), BigInt::from(-2));
    }

    #[test]
    fn degree_matches_hook_formula() {
        for n in 1..=8u32 {
            let ones = CycleType::new(vec![1; n as usize]).unwrap();
            for lambda in Partition::all(n) {
                assert_eq!(
                    mn_character(&lambda, &ones).unwrap(),
                    lambda.dimension(),
                    "degree of {lambda}"
                );
            }
        }
    }
}
