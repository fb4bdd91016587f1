//! Small exact linear algebra helpers over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rank of a dense rational matrix (rows of equal length), by Gaussian
/// elimination with partial pivoting on magnitude kept exact.
pub fn rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // pick a pivot with small numerator/denominator to limit growth
        let mut piv = None;
        for i in r..rows {
            if !m[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..cols {
            let v = m[r][j].clone() / inv.clone();
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let delta = f.clone() * m[r][j].clone();
                    m[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of an integer matrix.
pub fn rank_i64(m: &[Vec<i64>]) -> usize {
    rank(m
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect())
}

/// Dimension of the solution space { x : x M = 0 } of a left null space,
/// i.e. rows - rank.
pub fn left_nullity(m: &[Vec<Rat>]) -> usize {
    m.len() - rank(m.to_vec())
}

/// Evaluate an integer polynomial (ascending coefficients) at 1.
pub fn poly_at_one(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

/// Multiply an integer polynomial by (1-t)^k, truncating nothing.
pub fn mul_one_minus_t_pow(poly: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut cur: Vec<BigInt> = poly.to_vec();
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        cur = next;
    }
    cur
}

/// Exact division of an integer polynomial by (1-t)^k; returns None if the
/// division leaves a remainder.
pub fn div_one_minus_t_pow(poly: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    let mut cur: Vec<BigInt> = poly.to_vec();
    for _ in 0..k {
        // divide by (1-t): q_i = sum_{j<=i} c_j must telescope to zero at the end
        let mut q = Vec::with_capacity(cur.len());
        let mut acc = BigInt::zero();
        for c in &cur {
            acc += c;
            q.push(acc.clone());
        }
        match q.pop() {
            Some(last) if last.is_zero() => cur = q,
            _ => return None,
        }
    }
    while cur.last().map(|c| c.is_zero()).unwrap_or(false) {
        cur.pop();
    }
    Some(cur)
}

/// Deterministic xorshift generator for reproducible pseudo-random probes.
#[derive(Clone)]
pub struct XorShift(pub u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    /// Uniform-ish value in [lo, hi] inclusive.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
    /// Nonzero value in [-k, k].
    pub fn nonzero(&mut self, k: i64) -> i64 {
        loop {
            let v = self.range(-k, k);
            if v != 0 {
                return v;
            }
        }
    }
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

pub fn rat_is_int(r: &Rat) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_i64(&m), 2);
        assert_eq!(rank_i64(&[vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn poly_division_roundtrip() {
        let p: Vec<BigInt> = [1i64, 2, 3].iter().map(|&x| BigInt::from(x)).collect();
        let q = mul_one_minus_t_pow(&p, 4);
        let back = div_one_minus_t_pow(&q, 4).unwrap();
        assert_eq!(back, p);
        assert!(div_one_minus_t_pow(&[BigInt::from(1)], 1).is_none());
    }
}
