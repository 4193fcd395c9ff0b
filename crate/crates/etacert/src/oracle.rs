//! Brute-force ground truth, independent of the series engine.
//!
//! Two separate counting routes live here:
//!
//! * [`count_colored_regular`] counts coloured regular partitions by a plain
//!   dynamic program over part types. It never touches series inversion, so
//!   it can cross-validate the eta-quotient expansion.
//! * [`pentagonal_pair_sign_sum`] evaluates the signed count of ways to write
//!   `n` as an ordered sum of two generalized pentagonal numbers, which is
//!   the residue pattern appearing in the mod-3 characterisation of
//!   `p_{3,3}(3n)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Counts of coloured `ell`-regular partitions: `counts[n]` is the number of
/// multisets of `(size, colour)` parts summing to `n`, with no size divisible
/// by `ell` and `colours` colour labels per size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCountTable {
    limit: usize,
    counts: Vec<BigInt>,
}

impl PartitionCountTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn count(&self, n: usize) -> &BigInt {
        &self.counts[n]
    }
}

/// Count coloured `ell`-regular partitions of every `n < limit` by dynamic
/// programming: each part size `j` with `j % ell != 0` contributes `colours`
/// independent part types, iterated in increasing `(size, colour)` order over
/// a single accumulation array.
pub fn count_colored_regular(limit: usize, ell: u64, colours: u32) -> PartitionCountTable {
    assert!(limit >= 1, "limit must be positive");
    assert!(ell >= 2, "regularity index must be at least 2");
    assert!(colours >= 1, "at least one colour is required");
    let mut counts = vec![BigInt::zero(); limit];
    counts[0] = BigInt::from(1);
    for size in 1..limit {
        if size as u64 % ell == 0 {
            continue;
        }
        for _colour in 0..colours {
            for n in size..limit {
                let prev = counts[n - size].clone();
                counts[n] += prev;
            }
        }
    }
    PartitionCountTable { limit, counts }
}

/// Sum of `(-1)^{k+l}` over all pairs `(k, l)` of integers (of either sign,
/// zero included) with `k(3k-1)/2 + l(3l-1)/2 = n`; zero when `n` has no such
/// representation.
pub fn pentagonal_pair_sign_sum(n: u64) -> i64 {
    let mut sign_at = BTreeMap::new();
    sign_at.insert(0u64, 1i64);
    for k in 1u64.. {
        let gp_pos = k * (3 * k - 1) / 2;
        if gp_pos > n {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sign_at.insert(gp_pos, sign);
        let gp_neg = k * (3 * k + 1) / 2;
        if gp_neg <= n {
            sign_at.insert(gp_neg, sign);
        }
    }
    let mut total = 0;
    for (&value, &sign) in &sign_at {
        if let Some(&other) = sign_at.get(&(n - value)) {
            total += sign * other;
        }
    }
    total
}

/// Check the mod-3 characterisation of 3-coloured 3-regular partition counts
/// for all `n < limit`:
///
/// * `p_{3,3}(3n+1) == p_{3,3}(3n+2) == 0 (mod 3)`, and
/// * `p_{3,3}(3n) == pentagonal_pair_sign_sum(n) (mod 3)`,
///
/// with the counts taken from the DP, not from any series expansion.
pub fn check_mod3_characterization(limit: usize) -> bool {
    assert!(limit >= 1, "limit must be positive");
    let table = count_colored_regular(limit, 3, 3);
    let three = BigInt::from(3);
    for n in 0..limit {
        let residue = ((table.count(n) % &three) + &three) % &three;
        let expected = match n % 3 {
            0 => pentagonal_pair_sign_sum((n / 3) as u64).rem_euclid(3),
            _ => 0,
        };
        if residue != BigInt::from(expected) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{euler_factor, TruncatedSeries};

    #[test]
    fn three_coloured_three_regular_counts_start_1_3_9() {
        // n=1: three colourings of a single part 1. n=2: three colourings of
        // a part 2 plus six multisets of two coloured 1s.
        let table = count_colored_regular(3, 3, 3);
        assert_eq!(table.counts(), &[BigInt::from(1), BigInt::from(3), BigInt::from(9)]);
    }

    #[test]
    fn single_colour_two_regular_partition_of_one() {
        let table = count_colored_regular(2, 2, 1);
        assert_eq!(table.counts(), &[BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn limit_one_counts_only_the_empty_partition() {
        let table = count_colored_regular(1, 3, 3);
        assert_eq!(table.counts(), &[BigInt::from(1)]);
    }

    #[test]
    fn unrestricted_dp_reproduces_partition_numbers() {
        // ell larger than every reachable part size excludes nothing.
        let table = count_colored_regular(11, 101, 1);
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(table.count(n), &BigInt::from(p), "p({n})");
        }
    }

    #[test]
    fn pentagonal_pair_sign_sum_small_values() {
        assert_eq!(pentagonal_pair_sign_sum(0), 1); // only (0,0)
        assert_eq!(pentagonal_pair_sign_sum(1), -2); // (1,0) and (0,1)
        assert_eq!(pentagonal_pair_sign_sum(2), -1); // (-1,0), (0,-1), (1,1)
        assert_eq!(pentagonal_pair_sign_sum(3), 2); // (1,-1), (-1,1)
    }

    #[test]
    fn pentagonal_pair_sign_sum_matches_squared_euler_factor() {
        let square = euler_factor(1, 200).pow(2).unwrap();
        for n in 0..200u64 {
            assert_eq!(
                &BigInt::from(pentagonal_pair_sign_sum(n)),
                square.coefficient(n as usize).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn mod3_characterization_holds_empirically() {
        assert!(check_mod3_characterization(100));
    }

    #[test]
    fn mod3_branch_values() {
        let table = count_colored_regular(2, 3, 3);
        // p_{3,3}(1) = 3 == 0 (mod 3), the 3n+1 branch at n=0.
        assert_eq!(table.count(1) % BigInt::from(3), BigInt::zero());
        // p_{3,3}(0) = 1 and the sign sum at 0 is 1.
        assert_eq!(table.count(0), &BigInt::from(pentagonal_pair_sign_sum(0)));
    }

    #[test]
    fn dp_matches_eta_quotient_expansion() {
        use crate::series::eta_quotient;
        use crate::series::ExponentVector;
        let r = ExponentVector::from_ordered(3, &[-3, 3]).unwrap();
        let series = eta_quotient(&r, 60).unwrap();
        let table = count_colored_regular(60, 3, 3);
        assert_eq!(series, TruncatedSeries::from_coeffs(table.counts().to_vec()));
    }
}
