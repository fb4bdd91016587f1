//! Bott's algorithm: cohomology of irreducible homogeneous bundles.  Two
//! forms are used: the rho-shift-and-sort rule for S_lambda(Q) (x) S_mu(R)
//! on a Grassmannian, and the dotted Weyl action for line bundles on the
//! flag variety of a Levi subgroup, working in fundamental coordinates of
//! the ambient root system.

use crate::rootsys::{RootIdx, RootSystem};
use crate::schur::{gl_dim, levi_rho, weyl_dim_levi};
use num_bigint::BigInt;

/// Result of one Bott computation on a Grassmannian: either everything
/// vanishes, or exactly one cohomological degree survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlBott {
    Zero,
    Coh { degree: usize, weight: Vec<i64> },
}

/// Cohomology of S_lambda(Q) (x) S_mu(R) on Grass(r, E), dim E = n,
/// lambda of length n-r on the quotient, mu of length r on the sub.
pub fn bott_gl(r: usize, n: usize, lambda: &[i64], mu: &[i64]) -> GlBott {
    assert_eq!(lambda.len(), n - r);
    assert_eq!(mu.len(), r);
    let mut seq: Vec<i64> = Vec::with_capacity(n);
    seq.extend_from_slice(lambda);
    seq.extend_from_slice(mu);
    for (i, v) in seq.iter_mut().enumerate() {
        *v += (n - i) as i64;
    }
    // repetitions kill all cohomology
    let mut sorted = seq.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return GlBott::Zero;
    }
    // length of the sorting permutation = number of inversions
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] < seq[j] {
                inv += 1;
            }
        }
    }
    let weight: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| v - (n - i) as i64)
        .collect();
    GlBott::Coh {
        degree: inv,
        weight,
    }
}

/// Dimension of the GL(n) module produced by `bott_gl`.
pub fn gl_bott_dim(res: &GlBott, n: usize) -> BigInt {
    match res {
        GlBott::Zero => BigInt::from(0),
        GlBott::Coh { weight, .. } => gl_dim(weight, n),
    }
}

/// Result of the dotted Weyl action on a Levi flag variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LeviBott {
    Zero,
    Coh { degree: usize, weight: Vec<i64> },
}

/// Cohomology of the line bundle with character `wt` (fundamental
/// coordinates of the ambient system) on the full flag variety of the Levi
/// on `levi_nodes`: if wt + rho_L is singular everything vanishes;
/// otherwise the sorting element w gives H^{l(w)} = V(w.(wt+rho)-rho).
pub fn bott_gb(rs: &RootSystem, levi_nodes: &[usize], wt: &[i64]) -> LeviBott {
    let rho = levi_rho(rs, levi_nodes);
    let mut v: Vec<i64> = (0..rs.rank).map(|i| wt[i] + rho[i]).collect();
    let mut length = 0usize;
    loop {
        let mut touched = false;
        for &j in levi_nodes {
            if v[j] == 0 {
                return LeviBott::Zero;
            }
            if v[j] < 0 {
                let k = v[j];
                for t in 0..rs.rank {
                    v[t] -= k * rs.cartan[j][t];
                }
                length += 1;
                touched = true;
            }
        }
        if !touched {
            break;
        }
    }
    let weight: Vec<i64> = (0..rs.rank).map(|i| v[i] - rho[i]).collect();
    LeviBott::Coh {
        degree: length,
        weight,
    }
}

/// Euler characteristic of the line bundle with character `wt` on the Levi
/// flag variety, as a signed dimension.
pub fn euler_char_line(
    rs: &RootSystem,
    levi_pos: &[RootIdx],
    levi_nodes: &[usize],
    wt: &[i64],
) -> BigInt {
    match bott_gb(rs, levi_nodes, wt) {
        LeviBott::Zero => BigInt::from(0),
        LeviBott::Coh { degree, weight } => {
            let d = weyl_dim_levi(rs, levi_pos, levi_nodes, &weight).unwrap();
            if degree % 2 == 0 {
                d
            } else {
                -d
            }
        }
    }
}

/// Signed multiset of dominant weights obtained by running Bott over a bag
/// of line-bundle characters with multiplicities.
pub fn euler_char_line_bundles(
    rs: &RootSystem,
    levi_nodes: &[usize],
    bag: &[(Vec<i64>, i64)],
) -> Vec<(Vec<i64>, i64)> {
    let mut acc: std::collections::BTreeMap<Vec<i64>, i64> = std::collections::BTreeMap::new();
    for (wt, mult) in bag {
        if let LeviBott::Coh { degree, weight } = bott_gb(rs, levi_nodes, wt) {
            let sign = if degree % 2 == 0 { 1 } else { -1 };
            *acc.entry(weight).or_insert(0) += sign * mult;
        }
    }
    acc.retain(|_, v| *v != 0);
    acc.into_iter().collect()
}
