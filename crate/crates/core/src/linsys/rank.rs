//! Exact rank over `Q` of integer matrices given by an entry oracle.
//!
//! The rank modulo a prime never exceeds the rational rank, and falls short
//! only if the prime divides a non-zero maximal minor. Once the product of
//! the primes tried exceeds a Hadamard bound for those minors, the largest
//! modular rank seen is the rational rank. Full rank ends the search at once.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::primes::PRIMES;

/// Integer matrix known through its entries modulo primes.
pub(crate) trait IntMatrix {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    /// Row-major entries, each multiplied by one fixed unit of `Z/p`
    /// (the same for every entry), so the rank is unchanged.
    fn fill_mod(&self, m: &Mont, out: &mut Vec<u64>);
    /// Per row, an integer `k` with `‖row‖₂ <= 2^k`.
    fn row_bits(&self) -> Vec<u64>;
    fn exact_entries(&self) -> Vec<Vec<BigInt>>;
}

/// Montgomery arithmetic modulo an odd `p < 2^62`, `R = 2^64`.
pub(crate) struct Mont {
    pub p: u64,
    pinv: u64,
    r2: u64,
}

impl Mont {
    pub fn new(p: u64) -> Self {
        debug_assert!(p % 2 == 1 && p < 1 << 62);
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = (((1u128 << 64) % p as u128) as u64) as u128;
        let r2 = (r * r % p as u128) as u64;
        Mont { p, pinv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    fn reduce(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.pinv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// `x·y·R^{-1} mod p`.
    #[inline]
    pub fn mul(&self, x: u64, y: u64) -> u64 {
        self.reduce(x as u128 * y as u128)
    }

    /// Residue of a signed integer, in plain (not Montgomery) form.
    pub fn residue(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Inverse for the product `mul`: `y` with `mul(x, y) = R mod p`.
    fn mont_inverse(&self, x: u64) -> u64 {
        let p = self.p as i128;
        let (mut a, mut b, mut x0, mut x1) = (x as i128, p, 1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        let plain = x0.rem_euclid(p) as u64;
        // plain·R² is the inverse of x under mul, up to representing R
        let t = self.mul(plain, self.r2);
        self.mul(t, self.r2)
    }
}

/// Rank of a row-major matrix over the field `(Z/p, +, mul)`.
pub(crate) fn rank_mod(a: &mut [u64], rows: usize, cols: usize, m: &Mont) -> usize {
    let p = m.p;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        if piv != rank {
            for j in c..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = m.mont_inverse(a[rank * cols + c]);
        for j in c..cols {
            a[rank * cols + j] = m.mul(a[rank * cols + j], inv);
        }
        // pivot entry now represents 1
        for i in rank + 1..rows {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let t = m.mul(f, a[rank * cols + j]);
                let x = a[i * cols + j];
                a[i * cols + j] = if x >= t { x - t } else { x + p - t };
            }
        }
        rank += 1;
    }
    rank
}

/// Bits needed so that a product of primes exceeds every minor of size up
/// to `min(rows, cols)`.
fn hadamard_bits(m: &impl IntMatrix) -> u64 {
    let mut bits = m.row_bits();
    bits.sort_unstable_by(|x, y| y.cmp(x));
    bits.truncate(m.nrows().min(m.ncols()));
    bits.iter().sum::<u64>() + 1
}

pub(crate) fn exact_rank(m: &impl IntMatrix) -> usize {
    let (rows, cols) = (m.nrows(), m.ncols());
    let full = rows.min(cols);
    if full == 0 {
        return 0;
    }
    let need = hadamard_bits(m);
    // every table prime exceeds 2^61
    let primes_needed = need.div_ceil(61) as usize;
    if primes_needed > PRIMES.len() {
        return bareiss_rank(m.exact_entries());
    }
    let mut buf = Vec::with_capacity(rows * cols);
    let mut best = 0;
    for &p in PRIMES.iter().take(primes_needed) {
        let mont = Mont::new(p);
        buf.clear();
        m.fill_mod(&mont, &mut buf);
        best = best.max(rank_mod(&mut buf, rows, cols, &mont));
        if best == full {
            break;
        }
    }
    best
}

/// Fraction-free elimination over the integers.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(piv, rank);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[i][j] * &a[rank][c] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dense integer matrix, used in tests and as a convenience wrapper.
#[cfg(test)]
pub(crate) struct Dense(pub Vec<Vec<i64>>);

#[cfg(test)]
impl IntMatrix for Dense {
    fn nrows(&self) -> usize {
        self.0.len()
    }
    fn ncols(&self) -> usize {
        self.0.first().map_or(0, Vec::len)
    }
    fn fill_mod(&self, m: &Mont, out: &mut Vec<u64>) {
        for row in &self.0 {
            out.extend(row.iter().map(|&x| m.residue(x)));
        }
    }
    fn row_bits(&self) -> Vec<u64> {
        self.0
            .iter()
            .map(|row| {
                let n2: u128 = row.iter().map(|&x| (x as i128 * x as i128) as u128).sum();
                (128 - n2.leading_zeros() as u64).div_ceil(2)
            })
            .collect()
    }
    fn exact_entries(&self) -> Vec<Vec<BigInt>> {
        self.0.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    // Plain Gaussian elimination over Q.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let n = a.len();
        let m = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..m {
            let Some(p) = (rank..n).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(p, rank);
            for i in 0..n {
                if i != rank && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[rank][c];
                    for j in 0..m {
                        let t = &f * &a[rank][j];
                        a[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn montgomery_field() {
        let p = PRIMES[0];
        let m = Mont::new(p);
        for x in [1u64, 2, 12345, p - 1] {
            let inv = m.mont_inverse(x);
            let one = m.mul(x, inv);
            // the unit of mul is R mod p
            assert_eq!(m.mul(one, 7), 7);
        }
    }

    #[test]
    fn known_ranks() {
        let a = Dense(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(exact_rank(&a), 2);
        assert_eq!(bareiss_rank(a.exact_entries()), 2);
        assert_eq!(exact_rank(&Dense(vec![])), 0);
        // p | det for the first prime: still detected through other primes
        let p = PRIMES[0] as i64;
        let b = Dense(vec![vec![p, 0], vec![0, 1]]);
        assert_eq!(exact_rank(&b), 2);
    }

    #[test]
    fn primes_are_prime_and_large() {
        for &p in PRIMES.iter().step_by(97) {
            assert!(p > 1 << 61);
            let mut d = 3u64;
            let mut ok = true;
            while d < 1 << 20 {
                if p % d == 0 {
                    ok = false;
                    break;
                }
                d += 2;
            }
            assert!(ok);
        }
        assert!(PRIMES.windows(2).all(|w| w[0] > w[1]));
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            rows in 0usize..7, cols in 1usize..7, low in 0usize..4,
            vals in proptest::collection::vec(-1_000_000i64..1_000_000, 49),
            mix in proptest::collection::vec(-3i64..4, 49),
        ) {
            // low-rank structure: later rows are combinations of the first `low`
            let mut m: Vec<Vec<i64>> = Vec::new();
            for i in 0..rows {
                let row: Vec<i64> = if i < low || low == 0 {
                    (0..cols).map(|j| vals[i * 7 + j]).collect()
                } else {
                    (0..cols).map(|j| (0..low).map(|k| mix[i * 7 + k] * m[k][j]).sum()).collect()
                };
                m.push(row);
            }
            let r = rational_rank(&m);
            prop_assert_eq!(exact_rank(&Dense(m.clone())), r);
            prop_assert_eq!(bareiss_rank(Dense(m).exact_entries()), r);
        }
    }
}
