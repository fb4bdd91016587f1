//! Partition and weight combinatorics: Littlewood-Richardson coefficients,
//! Weyl dimension formula, Freudenthal weight multiplicities, and exact
//! decompositions of exterior/symmetric powers of tensor products into
//! tuples of Schur functors.

use crate::linalg::{rat, Rat};
use crate::rootsys::{RootIdx, RootSystem, SimpleType};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// Weakly decreasing integer sequence; negative entries allowed (GL weights).
pub type Partition = Vec<i64>;

pub fn is_weakly_decreasing(p: &[i64]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

fn weight_size(p: &[i64]) -> i64 {
    p.iter().sum()
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of LR
/// skew tableaux of shape nu/lambda and content mu.  Size mismatch gives 0.
pub fn lr_coefficient(lambda: &[i64], mu: &[i64], nu: &[i64]) -> u64 {
    assert!(is_weakly_decreasing(lambda) && is_weakly_decreasing(mu) && is_weakly_decreasing(nu));
    assert!(lambda.iter().chain(mu).chain(nu).all(|&x| x >= 0));
    if weight_size(lambda) + weight_size(mu) != weight_size(nu) {
        return 0;
    }
    let rows = nu.len();
    let mut lam = lambda.to_vec();
    lam.resize(rows, 0);
    if lam.iter().zip(nu).any(|(&a, &b)| a > b) {
        return 0;
    }
    // Fill cells of nu/lam in reverse reading order (rows top to bottom,
    // each row right to left); then the lattice condition is exactly
    // "count(v) <= count(v-1)" at every placement.
    let cells: Vec<(usize, i64)> = (0..rows)
        .flat_map(|r| {
            let lo = lam[r];
            let hi = nu[r];
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<i64>> = nu.iter().map(|&len| vec![0; len as usize]).collect();
    let mut used = vec![0i64; mu.len()];
    let mut count = 0u64;
    fn rec(
        cells: &[(usize, i64)],
        k: usize,
        grid: &mut Vec<Vec<i64>>,
        used: &mut Vec<i64>,
        mu: &[i64],
        lam: &[i64],
        nu: &[i64],
        count: &mut u64,
    ) {
        if k == cells.len() {
            *count += 1;
            return;
        }
        let (r, c) = cells[k];
        let cu = c as usize;
        // right neighbour was filled earlier within this row
        let right = if c + 1 < nu[r] { grid[r][cu + 1] } else { i64::MAX };
        // cell directly above (previous row) was filled earlier unless it
        // belongs to lambda
        let above = if r > 0 && c < nu[r - 1] && c >= lam[r - 1] {
            grid[r - 1][cu]
        } else {
            0
        };
        for v in 1..=(mu.len() as i64) {
            let vi = (v - 1) as usize;
            if used[vi] == mu[vi] {
                continue;
            }
            if v > right {
                continue; // rows weakly increase left to right
            }
            if above != 0 && v <= above {
                continue; // columns strictly increase
            }
            if v > 1 && used[vi] + 1 > used[vi - 1] {
                continue; // reverse reading word stays a lattice word
            }
            grid[r][cu] = v;
            used[vi] += 1;
            rec(cells, k + 1, grid, used, mu, lam, nu, count);
            used[vi] -= 1;
            grid[r][cu] = 0;
        }
    }
    rec(&cells, 0, &mut grid, &mut used, mu, &lam, nu, &mut count);
    count
}

/// Dimension of the GL(d) Schur module S_lambda(C^d) for a weakly
/// decreasing integer weight of length <= d (negative entries allowed).
pub fn gl_dim(lambda: &[i64], d: usize) -> BigInt {
    assert!(lambda.len() <= d);
    let mut l = lambda.to_vec();
    l.resize(d, 0);
    assert!(is_weakly_decreasing(&l), "not dominant: {l:?}");
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= BigInt::from(l[i] - l[j] + (j as i64) - (i as i64));
            den *= BigInt::from((j as i64) - (i as i64));
        }
    }
    &num / &den
}

/// rho of a Levi: pairing 1 with each Levi simple coroot, 0 at other nodes.
pub fn levi_rho(rs: &RootSystem, levi_nodes: &[usize]) -> Vec<i64> {
    let mut rho = vec![0i64; rs.rank];
    for &j in levi_nodes {
        rho[j] = 1;
    }
    rho
}

/// Weyl dimension of the Levi irreducible with the given dominant highest
/// weight (fundamental coordinates of the ambient system).
pub fn weyl_dim_levi(
    rs: &RootSystem,
    levi_pos: &[RootIdx],
    levi_nodes: &[usize],
    wt: &[i64],
) -> Result<BigInt, String> {
    for &j in levi_nodes {
        if wt[j] < 0 {
            return Err(format!("weight not dominant at node {}", j + 1));
        }
    }
    let rho = levi_rho(rs, levi_nodes);
    let shifted: Vec<i64> = (0..rs.rank).map(|i| wt[i] + rho[i]).collect();
    let mut num = BigRational::one();
    for &b in levi_pos {
        let co = rs.coroot_coords(b);
        let mut top = BigRational::zero();
        let mut bot = BigRational::zero();
        for i in 0..rs.rank {
            if !co[i].is_zero() {
                let c = BigRational::new(BigInt::from(*co[i].numer()), BigInt::from(*co[i].denom()));
                top += c.clone() * rat(shifted[i]);
                bot += c * rat(rho[i]);
            }
        }
        num *= top / bot;
    }
    assert!(num.is_integer() && num.is_positive());
    Ok(num.to_integer())
}

/// Weyl dimension for a standalone simple type with dominant weight in
/// fundamental coordinates.
pub fn weyl_dim(stype: SimpleType, wt: &[i64]) -> Result<BigInt, String> {
    let rs = RootSystem::new(stype);
    let nodes: Vec<usize> = (0..rs.rank).collect();
    let pos: Vec<RootIdx> = (0..rs.n_pos).collect();
    weyl_dim_levi(&rs, &pos, &nodes, wt)
}

/// Convert a weight in fundamental coordinates to simple-root coordinates.
pub fn fund_to_root_coords(rs: &RootSystem, wt: &[i64]) -> Vec<Rat> {
    // solve sum_i a_i cartan[i][j] = wt[j]
    let n = rs.rank;
    let mut sys: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..n).map(|i| rat(rs.cartan[i][j])).collect();
            row.push(rat(wt[j]));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !sys[r][c].is_zero()).unwrap();
        sys.swap(c, p);
        let inv = sys[c][c].clone();
        for j in c..=n {
            let v = sys[c][j].clone() / inv.clone();
            sys[c][j] = v;
        }
        for r in 0..n {
            if r != c && !sys[r][c].is_zero() {
                let f = sys[r][c].clone();
                for j in c..=n {
                    let delta = f.clone() * sys[c][j].clone();
                    sys[r][j] -= delta;
                }
            }
        }
    }
    (0..n).map(|i| sys[i][n].clone()).collect()
}

/// Invariant form on two weights given in fundamental coordinates.
pub fn inner_weights(rs: &RootSystem, a: &[i64], b: &[i64]) -> Rat {
    let ra = fund_to_root_coords(rs, a);
    let rb = fund_to_root_coords(rs, b);
    let mut s = Rat::zero();
    for i in 0..rs.rank {
        for j in 0..rs.rank {
            if !ra[i].is_zero() && !rb[j].is_zero() {
                let f = Rat::new(
                    BigInt::from(*rs.form[i][j].numer()),
                    BigInt::from(*rs.form[i][j].denom()),
                );
                s += ra[i].clone() * rb[j].clone() * f;
            }
        }
    }
    s
}

/// Weight multiset of the Levi irreducible V(hw) by Freudenthal's formula.
/// Returns pairs (weight in fundamental coordinates, multiplicity).
pub fn irrep_weights(
    rs: &RootSystem,
    levi_nodes: &[usize],
    levi_pos: &[RootIdx],
    hw: &[i64],
) -> Vec<(Vec<i64>, u64)> {
    let le_hw = |wt: &Vec<i64>| -> bool {
        // hw - wt must be a nonnegative integral combination of Levi simples
        let diff: Vec<i64> = (0..rs.rank).map(|i| hw[i] - wt[i]).collect();
        let coords = fund_to_root_coords(rs, &diff);
        coords.iter().enumerate().all(|(i, c)| {
            if levi_nodes.contains(&i) {
                c.is_integer() && !c.is_negative()
            } else {
                c.is_zero()
            }
        })
    };
    let dominant = |wt: &Vec<i64>| -> Vec<i64> {
        let mut v = wt.clone();
        loop {
            let mut moved = false;
            for &j in levi_nodes {
                if v[j] < 0 {
                    let k = v[j];
                    for t in 0..rs.rank {
                        v[t] -= k * rs.cartan[j][t];
                    }
                    moved = true;
                }
            }
            if !moved {
                return v;
            }
        }
    };

    let mut weights: Vec<Vec<i64>> = vec![hw.to_vec()];
    let mut seen: std::collections::HashSet<Vec<i64>> = weights.iter().cloned().collect();
    let mut qi = 0;
    while qi < weights.len() {
        let w = weights[qi].clone();
        qi += 1;
        for &j in levi_nodes {
            let v: Vec<i64> = (0..rs.rank).map(|t| w[t] - rs.cartan[j][t]).collect();
            if !seen.contains(&v) && le_hw(&v) && le_hw(&dominant(&v)) {
                seen.insert(v.clone());
                weights.push(v);
            }
        }
    }

    // Freudenthal recursion, by increasing depth below the highest weight
    let rho = levi_rho(rs, levi_nodes);
    let norm = |wt: &[i64]| -> Rat {
        let shifted: Vec<i64> = (0..rs.rank).map(|i| wt[i] + rho[i]).collect();
        inner_weights(rs, &shifted, &shifted)
    };
    let depth = |wt: &Vec<i64>| -> i64 {
        let diff: Vec<i64> = (0..rs.rank).map(|i| hw[i] - wt[i]).collect();
        let coords = fund_to_root_coords(rs, &diff);
        let mut s = Rat::zero();
        for c in coords {
            s += c;
        }
        assert!(s.is_integer());
        i64::try_from(s.to_integer()).unwrap()
    };
    weights.sort_by_key(|w| (depth(w), w.clone()));
    let hw_norm = norm(hw);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for w in &weights {
        if w.as_slice() == hw {
            mult.insert(w.clone(), 1);
            continue;
        }
        let mut acc = Rat::zero();
        for &b in levi_pos {
            let bw = &rs.root_wt[b];
            for k in 1.. {
                let up: Vec<i64> = (0..rs.rank).map(|i| w[i] + k * bw[i]).collect();
                if !seen.contains(&up) {
                    break;
                }
                if let Some(&m) = mult.get(&up) {
                    if m > 0 {
                        let mut ip = inner_weights(rs, &up, bw);
                        ip *= rat(m as i64);
                        acc += ip;
                    }
                }
            }
        }
        let denom = hw_norm.clone() - norm(w);
        if denom.is_zero() {
            mult.insert(w.clone(), 0);
            continue;
        }
        let m = acc * rat(2) / denom;
        assert!(m.is_integer() && !m.is_negative());
        let m64: u64 = u64::try_from(m.to_integer()).unwrap();
        mult.insert(w.clone(), m64);
    }
    let mut out: Vec<(Vec<i64>, u64)> = mult.into_iter().filter(|(_, m)| *m > 0).collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Character bags for tensor products of GL factors

/// One GL weight per tensor factor.
pub type GlTuple = Vec<Partition>;

/// Multiset of GL weight tuples with multiplicities.
pub type CharacterBag = Vec<(GlTuple, u64)>;

/// Monomial character map: exponents (concatenated over factors) -> coeff.
type MonoMap = BTreeMap<Vec<i64>, i64>;

/// Schur polynomial s_lambda(x_1..x_d) as a monomial map, by semistandard
/// tableau enumeration.  Negative entries handled by a determinant shift.
fn schur_monomials(lambda: &[i64], d: usize) -> MonoMap {
    let mut l = lambda.to_vec();
    l.resize(d, 0);
    assert!(is_weakly_decreasing(&l));
    let shift = -l[d - 1].min(0);
    for v in l.iter_mut() {
        *v += shift;
    }
    let mut out: MonoMap = BTreeMap::new();
    if l.iter().all(|&x| x == 0) {
        out.insert(vec![-shift; d], 1);
        return out;
    }
    let mut grid: Vec<Vec<i64>> = l.iter().map(|&len| vec![0; len as usize]).collect();
    fn rec(
        grid: &mut Vec<Vec<i64>>,
        l: &[i64],
        d: usize,
        r: usize,
        c: i64,
        out: &mut MonoMap,
        shift: i64,
    ) {
        if r == l.len() || l[r] == 0 {
            let mut expo = vec![0i64; d];
            for row in grid.iter() {
                for &v in row {
                    if v > 0 {
                        expo[(v - 1) as usize] += 1;
                    }
                }
            }
            for e in expo.iter_mut() {
                *e -= shift;
            }
            *out.entry(expo).or_insert(0) += 1;
            return;
        }
        if c == l[r] {
            rec(grid, l, d, r + 1, 0, out, shift);
            return;
        }
        let cu = c as usize;
        let left = if c > 0 { grid[r][cu - 1] } else { 1 };
        let above = if r > 0 && c < l[r - 1] { grid[r - 1][cu] } else { 0 };
        let lo = left.max(above + 1);
        for v in lo..=(d as i64) {
            grid[r][cu] = v;
            rec(grid, l, d, r, c + 1, out, shift);
        }
        grid[r][cu] = 0;
    }
    rec(&mut grid, &l, d, 0, 0, &mut out, shift);
    out
}

fn tuple_monomials(tuple: &[Partition], dims: &[usize]) -> MonoMap {
    let mut acc: MonoMap = BTreeMap::new();
    acc.insert(vec![], 1);
    for (f, lam) in tuple.iter().enumerate() {
        let part = schur_monomials(lam, dims[f]);
        let mut next: MonoMap = BTreeMap::new();
        for (e1, c1) in &acc {
            for (e2, c2) in &part {
                let mut e = e1.clone();
                e.extend_from_slice(e2);
                *next.entry(e).or_insert(0) += c1 * c2;
            }
        }
        acc = next;
    }
    acc
}

/// Decompose a monomial character of a product of GL factors into Schur
/// tuples by repeated extraction of the lexicographically top term.
fn decompose_character(mut mono: MonoMap, dims: &[usize]) -> CharacterBag {
    let mut out: CharacterBag = Vec::new();
    loop {
        let Some((expo, &coeff)) = mono.iter().rev().find(|(_, &c)| c != 0) else {
            break;
        };
        let expo = expo.clone();
        assert!(coeff > 0, "character not Schur-positive");
        let mut tuple: GlTuple = Vec::new();
        let mut off = 0;
        for &d in dims {
            let part: Vec<i64> = expo[off..off + d].to_vec();
            assert!(is_weakly_decreasing(&part), "leading term not dominant: {part:?}");
            tuple.push(part);
            off += d;
        }
        let sub = tuple_monomials(&tuple, dims);
        for (e, c) in &sub {
            let entry = mono.entry(e.clone()).or_insert(0);
            *entry -= coeff * c;
        }
        out.push((tuple, coeff as u64));
    }
    out.sort();
    out
}

fn product_basis(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut basis = vec![vec![]];
    for &d in dims {
        let mut next = Vec::new();
        for b in &basis {
            for i in 0..d {
                let mut v = b.clone();
                v.push(i);
                next.push(v);
            }
        }
        basis = next;
    }
    basis
}

/// Exterior power of a tensor product of standard GL factors.
pub fn ext_power_decompose(dims: &[usize], k: usize) -> CharacterBag {
    let n: usize = dims.iter().product();
    assert!(n <= 32 && k <= n);
    let basis = product_basis(dims);
    let mut mono: MonoMap = BTreeMap::new();
    let width: usize = dims.iter().sum();
    fn rec(
        start: usize,
        left: usize,
        basis: &[Vec<usize>],
        dims: &[usize],
        expo: &mut Vec<i64>,
        mono: &mut MonoMap,
    ) {
        if left == 0 {
            *mono.entry(expo.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..basis.len() {
            let mut off = 0;
            for (f, &d) in dims.iter().enumerate() {
                expo[off + basis[i][f]] += 1;
                off += d;
            }
            rec(i + 1, left - 1, basis, dims, expo, mono);
            let mut off = 0;
            for (f, &d) in dims.iter().enumerate() {
                expo[off + basis[i][f]] -= 1;
                off += d;
            }
        }
    }
    let mut expo = vec![0i64; width];
    rec(0, k, &basis, dims, &mut expo, &mut mono);
    decompose_character(mono, dims)
}

/// Symmetric power of a tensor product of standard GL factors.
pub fn sym_power_decompose(dims: &[usize], k: usize) -> CharacterBag {
    let basis = product_basis(dims);
    let mut mono: MonoMap = BTreeMap::new();
    let width: usize = dims.iter().sum();
    fn rec(
        start: usize,
        left: usize,
        basis: &[Vec<usize>],
        dims: &[usize],
        expo: &mut Vec<i64>,
        mono: &mut MonoMap,
    ) {
        if left == 0 {
            *mono.entry(expo.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..basis.len() {
            let mut off = 0;
            for (f, &d) in dims.iter().enumerate() {
                expo[off + basis[i][f]] += 1;
                off += d;
            }
            rec(i, left - 1, basis, dims, expo, mono);
            let mut off = 0;
            for (f, &d) in dims.iter().enumerate() {
                expo[off + basis[i][f]] -= 1;
                off += d;
            }
        }
    }
    let mut expo = vec![0i64; width];
    rec(0, k, &basis, dims, &mut expo, &mut mono);
    decompose_character(mono, dims)
}

/// Total dimension of a character bag.
pub fn bag_dimension(bag: &CharacterBag, dims: &[usize]) -> BigInt {
    let mut total = BigInt::zero();
    for (tuple, mult) in bag {
        let mut d = BigInt::from(*mult);
        for (f, lam) in tuple.iter().enumerate() {
            d *= gl_dim(lam, dims[f]);
        }
        total += d;
    }
    total
}

/// Degree of the Grassmannian Grass(r, n) in its Pluecker embedding, by the
/// staircase / hook-length product formula.
pub fn grassmannian_degree(r: usize, n: usize) -> BigInt {
    let k = r * (n - r);
    let mut num = factorial(k);
    for i in 0..r {
        num *= factorial(i);
    }
    let mut den = BigInt::one();
    for i in 0..r {
        den *= factorial(n - r + i);
    }
    num / den
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
