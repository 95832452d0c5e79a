//! Closed-form counts, computed exactly with big integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{ParkingError, Result};
use crate::street::{order_statistics, ParkingInstance};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// `C(a, b)` for `a >= 0`, with `C(a, b) = 0` when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Result<BigCount> {
    if a < 0 {
        return Err(ParkingError::OutOfRange(format!(
            "binomial top must be non-negative, got {a}"
        )));
    }
    Ok(binom(a as u64, b))
}

fn binom(a: u64, b: i64) -> BigCount {
    if b < 0 || b as u64 > a {
        return BigCount::zero();
    }
    let b = (b as u64).min(a - b as u64);
    // prefix products C(a, i) stay integral at every step
    (0..b).fold(BigCount::one(), |acc, i| acc * (a - i) / (i + 1))
}

fn exact_div(num: BigCount, den: BigCount, what: &str) -> Result<BigCount> {
    if den.is_zero() || !(&num % &den).is_zero() {
        return Err(ParkingError::NonIntegral(format!("{what}: {num} / {den}")));
    }
    Ok(num / den)
}

fn pow(base: u64, exp: u64) -> BigCount {
    num_traits::pow(BigCount::from(base), exp as usize)
}

/// Number of parking sequences:
/// `z * (z + y_1 + n - 1) * (z + y_1 + y_2 + n - 2) * ... * (z + y_1 + ... + y_{n-1} + 1)`.
pub fn count_ps_product(instance: &ParkingInstance) -> BigCount {
    let n = instance.cars() as u64;
    let z = instance.trailer() as u64;
    let mut partial = 0u64;
    let mut total = BigCount::from(z);
    for (i, &y) in instance.lengths()[..n as usize - 1].iter().enumerate() {
        partial += y as u64;
        total *= z + partial + n - (i as u64 + 1);
    }
    total
}

/// Determinant by fraction-free (Bareiss) elimination. Every intermediate
/// value is an integer minor of the input.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Right boundary `(z, z + y_1, ..., z + y_1 + ... + y_{n-1})` of the lattice
/// paths that encode increasing parking sequences.
pub fn ips_boundary(instance: &ParkingInstance) -> Vec<u32> {
    let mut b = Vec::with_capacity(instance.cars());
    let mut acc = instance.trailer();
    for &y in instance.lengths() {
        b.push(acc);
        acc += y;
    }
    b
}

/// `#IPS(y; z) = det[C(b_i, j - i + 1)]` over the path boundary `b`.
pub fn count_ips_determinant(instance: &ParkingInstance) -> BigCount {
    let b = ips_boundary(instance);
    let n = b.len() as i64;
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from_biguint(Sign::Plus, binom(b[i as usize] as u64, j - i + 1)))
                .collect()
        })
        .collect();
    let det = bareiss_determinant(&matrix);
    assert!(
        !det.is_negative(),
        "path count determinant is negative: {det}"
    );
    det.magnitude().clone()
}

fn check_positive(pairs: &[(&str, u64)]) -> Result<()> {
    for &(name, v) in pairs {
        if v == 0 {
            return Err(ParkingError::OutOfRange(format!(
                "{name} must be at least 1"
            )));
        }
    }
    Ok(())
}

/// `#IPS((k^n); z) = z / (z + n(k+1)) * C(z + n(k+1), n)`.
pub fn count_ips_constant(k: u64, n: u64, z: u64) -> Result<BigCount> {
    check_positive(&[("k", k), ("n", n), ("z", z)])?;
    let top = z + n * (k + 1);
    exact_div(
        binom(top, n as i64) * z,
        BigCount::from(top),
        "constant-length increasing count",
    )
}

/// Fuss–Catalan number `1 / (kn + 1) * C((k+1)n, n)`.
pub fn fuss_catalan(k: u64, n: u64) -> Result<BigCount> {
    check_positive(&[("k", k), ("n", n)])?;
    exact_div(
        binom((k + 1) * n, n as i64),
        BigCount::from(k * n + 1),
        "Fuss-Catalan",
    )
}

pub fn catalan(n: u64) -> BigCount {
    binom(2 * n, n as i64) / (n + 1)
}

/// `#PS_inv(y; z) = z^n` for strictly increasing `y`.
pub fn count_inv_strictly_increasing(n: u64, z: u64) -> BigCount {
    pow(z, n)
}

/// `#PS_inv((k^n); z) = z (n + z)^(n-1)`, whatever `k` is.
pub fn count_inv_constant(n: u64, z: u64) -> BigCount {
    count_u_pf_arithmetic(z, n)
}

/// `#PS_inv((a^r, b^(n-r)); z)` for `a < b`:
/// `sum_{j=0}^{r-1} C(n, j) (r - j) r^(j-1) z^(n-j)`.
pub fn count_inv_two_block(n: u64, r: u64, z: u64) -> Result<BigCount> {
    if r == 0 || r >= n {
        return Err(ParkingError::OutOfRange(format!(
            "two-block count needs 1 <= r < n, got r={r}, n={n}"
        )));
    }
    let mut total = BigCount::zero();
    for j in 0..r {
        // (r - j) r^(j-1), which is 1 for j = 0
        let weight = if j == 0 {
            BigCount::one()
        } else {
            pow(r, j - 1) * (r - j)
        };
        total += binom(n, j as i64) * weight * pow(z, n - j);
    }
    Ok(total)
}

/// `#SPS{y; z}`. For non-constant `y` this is
/// `z * prod_{i=1}^{n-1} (z + y_(1) + ... + y_(i))` over the sorted lengths;
/// for constant `y` it coincides with [`count_ps_product`].
pub fn count_sps(instance: &ParkingInstance) -> BigCount {
    let lengths = instance.lengths();
    if lengths.iter().all(|&y| y == lengths[0]) {
        return count_ps_product(instance);
    }
    let sorted = order_statistics(lengths);
    let z = instance.trailer() as u64;
    let mut partial = z;
    let mut total = BigCount::from(z);
    for &y in &sorted[..sorted.len() - 1] {
        partial += y as u64;
        total *= partial;
    }
    total
}

/// Rising factorial `z (z + 1) ... (z + k - 1)`.
pub fn rising_factorial(z: u64, k: u64) -> BigCount {
    (0..k).fold(BigCount::one(), |acc, i| acc * (z + i))
}

/// `#SPS_k(n; z)`: `z^(k)` when `k < n`, `z (n + z)^(n-1)` when `k = n`.
pub fn count_sps_k(n: u64, k: u64, z: u64) -> Result<BigCount> {
    if k == 0 || k > n {
        return Err(ParkingError::OutOfRange(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(if k == n {
        count_u_pf_arithmetic(z, n)
    } else {
        rising_factorial(z, k)
    })
}

/// Number of `u`-parking functions for `u = (z, z + 1, ..., z + n - 1)`:
/// `z (z + n)^(n-1)`.
pub fn count_u_pf_arithmetic(z: u64, n: u64) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    pow(z + n, n - 1) * z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(lengths: &[u32], z: u32) -> ParkingInstance {
        ParkingInstance::new(lengths.to_vec(), z).unwrap()
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    /// Leibniz expansion; independent of the elimination path.
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        let mut idx: Vec<usize> = (0..n).collect();
        let mut total = 0;
        loop {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| idx[i] > idx[j])
                .count();
            let term: i64 = (0..n).map(|i| m[i][idx[i]]).product();
            total += if inversions % 2 == 0 { term } else { -term };
            if !crate::seq::next_permutation(&mut idx) {
                return total;
            }
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(4, 2).unwrap(), big(6));
        assert_eq!(binomial(3, -1).unwrap(), big(0));
        assert_eq!(binomial(6, 2).unwrap(), big(15));
        assert_eq!(binomial(3, 4).unwrap(), big(0));
        assert_eq!(binomial(0, 0).unwrap(), big(1));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn product_formula_values() {
        assert_eq!(count_ps_product(&inst(&[1, 2, 2, 3], 4)), big(2880));
        assert_eq!(count_ps_product(&inst(&[1, 1, 1], 1)), big(16));
        assert_eq!(count_ps_product(&inst(&[1], 7)), big(7));
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let mats: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, 0, 0], vec![1, 2, 1], vec![0, 1, 3]],
            vec![vec![0, 2], vec![3, 4]],
            vec![
                vec![2, -1, 0, 3],
                vec![0, 0, 5, 1],
                vec![4, 1, -2, 0],
                vec![1, 1, 1, 1],
            ],
            vec![vec![1, 2], vec![2, 4]],
            vec![vec![0, 0], vec![0, 1]],
        ];
        for m in mats {
            let b: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            assert_eq!(bareiss_determinant(&b), BigInt::from(leibniz(&m)), "{m:?}");
        }
        assert_eq!(bareiss_determinant(&[]), BigInt::one());
    }

    #[test]
    fn determinant_counts() {
        assert_eq!(count_ips_determinant(&inst(&[1, 1, 1], 1)), big(5));
        assert_eq!(count_ips_determinant(&inst(&[2, 2], 1)), big(3));
        assert_eq!(count_ips_determinant(&inst(&[1], 3)), big(3));
    }

    #[test]
    fn constant_and_fuss_catalan() {
        assert_eq!(count_ips_constant(2, 2, 1).unwrap(), big(3));
        assert_eq!(count_ips_constant(1, 3, 1).unwrap(), big(5));
        assert_eq!(count_ips_constant(1, 1, 1).unwrap(), big(1));
        assert_eq!(fuss_catalan(2, 2).unwrap(), big(3));
        assert_eq!(fuss_catalan(1, 4).unwrap(), big(14));
        for k in 1..6 {
            assert_eq!(fuss_catalan(k, 1).unwrap(), big(1));
        }
        let fc2: Vec<_> = (1..=5).map(|n| fuss_catalan(2, n).unwrap()).collect();
        assert_eq!(fc2, [1u64, 3, 12, 55, 273].map(big));
        assert!(fuss_catalan(0, 3).is_err());
        assert!(count_ips_constant(1, 0, 1).is_err());
    }

    #[test]
    fn catalan_matches_fuss_catalan() {
        let known = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in known.iter().enumerate() {
            assert_eq!(catalan(n as u64), big(c));
            if n >= 1 {
                assert_eq!(fuss_catalan(1, n as u64).unwrap(), big(c));
            }
        }
    }

    #[test]
    fn invariance_counts() {
        assert_eq!(count_inv_strictly_increasing(2, 1), big(1));
        assert_eq!(count_inv_strictly_increasing(3, 2), big(8));
        assert_eq!(count_inv_constant(2, 1), big(3));
        assert_eq!(count_inv_constant(3, 1), big(16));
        assert_eq!(count_inv_constant(1, 5), big(5));
        assert_eq!(count_inv_two_block(2, 1, 1).unwrap(), big(1));
        assert_eq!(count_inv_two_block(3, 2, 1).unwrap(), big(4));
        for n in 2..7 {
            for z in 1..4 {
                assert_eq!(count_inv_two_block(n, 1, z).unwrap(), pow(z, n));
            }
        }
        assert!(count_inv_two_block(3, 3, 1).is_err());
        assert!(count_inv_two_block(3, 0, 1).is_err());
    }

    #[test]
    fn strong_counts() {
        for z in 1..4u32 {
            for (a, b) in [(1, 2), (1, 3), (2, 5)] {
                assert_eq!(count_sps(&inst(&[a, b], z)), big(z as u64 * (z + a) as u64));
                assert_eq!(count_sps(&inst(&[b, a], z)), big(z as u64 * (z + a) as u64));
            }
            let kk = inst(&[2, 2], z);
            assert_eq!(count_sps(&kk), count_ps_product(&kk));
        }
        assert_eq!(count_sps(&inst(&[1, 1, 2], 1)), big(6));
        assert_eq!(count_sps_k(3, 2, 1).unwrap(), big(2));
        assert_eq!(count_sps_k(3, 3, 1).unwrap(), big(16));
        assert_eq!(count_sps_k(5, 1, 1).unwrap(), big(1));
        assert_eq!(count_sps_k(4, 2, 2).unwrap(), big(6));
        assert!(count_sps_k(3, 4, 1).is_err());
        assert_eq!(rising_factorial(1, 4), big(24));
    }

    #[test]
    fn u_pf_counts() {
        assert_eq!(count_u_pf_arithmetic(1, 3), big(16));
        assert_eq!(count_u_pf_arithmetic(2, 2), big(8));
        assert_eq!(count_u_pf_arithmetic(9, 1), big(9));
    }

    #[test]
    fn big_values_stay_exact() {
        // (n+1)^(n-1) for n = 30 is far beyond u64
        let expected = num_traits::pow(BigCount::from(31u32), 29);
        assert_eq!(count_ps_product(&inst(&[1; 30], 1)), expected);
        assert_eq!(count_ips_determinant(&inst(&[1; 30], 1)), catalan(30));
        assert_eq!(
            count_ips_determinant(&inst(&[3; 12], 2)),
            count_ips_constant(3, 12, 2).unwrap()
        );
    }
}
