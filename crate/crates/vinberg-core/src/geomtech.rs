//! The geometric technique pipeline.  A desingularization candidate is a
//! Borel-stable subset of the g_1 weights whose total space over the
//! corresponding partial flag variety maps birationally onto an orbit
//! closure.  From it: Euler-level terms of the associated complexes (Bott
//! on the associated graded, ghost pairs cancelled where they match),
//! Hilbert numerators and degrees of the normalizations, duality twists,
//! and the cohomological disjointness evidence for normality and rational
//! singularities.

use crate::bott::{bott_gb, LeviBott};
use crate::cases::Case;
use crate::closure::{signature, G1Elt};
use crate::linalg::{div_one_minus_t_pow, rank_i64};
use crate::rootsys::RootIdx;
use crate::schur::weyl_dim_levi;
use crate::vinberg::OrbitRecord;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// A Borel-stable splitting of the g_1 weights: `eta` spans the subbundle
/// whose total space is the incidence variety, `xi` its complement.
#[derive(Clone, Debug)]
pub struct BundleSpec {
    pub orbit: usize,
    /// upward-closed subset of the weight poset
    pub eta: Vec<RootIdx>,
    pub xi: Vec<RootIdx>,
    /// Levi nodes whose sl2 stabilizes the splitting (parabolic directions)
    pub stab_nodes: Vec<usize>,
    pub base_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerm {
    pub i: i64,
    /// (dominant Levi weight, internal degree, multiplicity)
    pub summands: Vec<(Vec<i64>, i64, u64)>,
}

#[derive(Clone, Debug)]
pub struct HilbertData {
    pub codim: usize,
    /// ascending coefficients; series denominator (1-t)^dim
    pub numerator: Vec<i64>,
    pub degree: i64,
    pub flags: Vec<String>,
}

/// Cohomology evaluator with memoization per case.
pub struct Coh<'a> {
    pub case: &'a Case,
    levi_pos: Vec<RootIdx>,
    memo: std::cell::RefCell<HashMap<Vec<i64>, Option<(usize, Vec<i64>, BigInt)>>>,
}

impl<'a> Coh<'a> {
    pub fn new(case: &'a Case) -> Self {
        Coh {
            case,
            levi_pos: case.levi_pos(),
            memo: Default::default(),
        }
    }

    /// Bott with dimension: (cohomological degree, dominant weight, dim).
    /// The weight is dualized (-w_0 of the sorted output): running the
    /// dotted action on the raw degree-one characters computes the right
    /// dimensions in every degree, but the induced module is the dual of
    /// the sorted representative; only the dual lands in the weight
    /// lattice of Sym(g_1^*), where the tables live.
    pub fn bott(&self, wt: &[i64]) -> Option<(usize, Vec<i64>, BigInt)> {
        if let Some(v) = self.memo.borrow().get(wt) {
            return v.clone();
        }
        let gl = &self.case.gl;
        let res = match bott_gb(&gl.rs, &gl.levi_nodes, wt) {
            LeviBott::Zero => None,
            LeviBott::Coh { degree, weight } => {
                let d = weyl_dim_levi(&gl.rs, &self.levi_pos, &gl.levi_nodes, &weight).unwrap();
                Some((degree, dual_weight(self.case, &weight), d))
            }
        };
        self.memo.borrow_mut().insert(wt.to_vec(), res.clone());
        res
    }
}

// ---------------------------------------------------------------------------
// desingularization search

fn stab_nodes(case: &Case, eta_mask: u64, elements: &[RootIdx]) -> Vec<usize> {
    let gl = &case.gl;
    let rs = &gl.rs;
    let pos: HashMap<RootIdx, usize> = elements.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    gl.levi_nodes
        .iter()
        .copied()
        .filter(|&j| {
            elements.iter().enumerate().all(|(i, &r)| {
                if eta_mask >> i & 1 == 0 {
                    return true;
                }
                for dir in [1i64, -1] {
                    let mut v = rs.roots[r].clone();
                    v[j] += dir;
                    if let Some(idx) = rs.root_index(&v) {
                        if gl.degree(idx) == 1 {
                            let k = pos[&idx];
                            if eta_mask >> k & 1 == 0 {
                                return false;
                            }
                        }
                    }
                }
                true
            })
        })
        .collect()
}

fn base_dimension(case: &Case, stab: &[usize]) -> usize {
    let gl = &case.gl;
    let total = gl.levi_pos().len();
    let stab_set: std::collections::HashSet<usize> = stab.iter().copied().collect();
    let inside = gl
        .levi_pos()
        .iter()
        .filter(|&&r| {
            gl.rs.roots[r]
                .iter()
                .enumerate()
                .all(|(n, &c)| c == 0 || stab_set.contains(&n))
        })
        .count();
    total - inside
}

/// Generic element of the span of a weight set, with its orbit signature.
fn generic_of_span(case: &Case, set: &[RootIdx]) -> (G1Elt, Vec<usize>, usize) {
    let (dim, rep) = crate::vinberg::generic_dim(&case.gl, set);
    let elt: G1Elt = rep.into_iter().collect();
    let sig = signature(case, &elt);
    (elt, sig, dim)
}

/// Exact dimension of { x in g_0 : [x, u] in span(U) }.
fn fiber_stab_dim(case: &Case, u: &G1Elt, eta: &[RootIdx]) -> usize {
    let gl = &case.gl;
    let rs = &gl.rs;
    let inside: std::collections::HashSet<RootIdx> = eta.iter().copied().collect();
    let out_cols: Vec<RootIdx> = gl
        .deg1()
        .iter()
        .copied()
        .filter(|r| !inside.contains(r))
        .collect();
    let col: HashMap<RootIdx, usize> = out_cols.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    // rows: g_0 basis mapped to g_1 / span(eta)
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut n_rows = 0usize;
    for j in 0..rs.rank {
        let mut row = vec![0i64; out_cols.len()];
        for (&b, &c) in u {
            if let Some(&k) = col.get(&b) {
                row[k] += c * rs.root_wt[b][j];
            }
        }
        rows.push(row);
        n_rows += 1;
    }
    for &g in gl.levi_roots() {
        let mut row = vec![0i64; out_cols.len()];
        for (&b, &c) in u {
            if let Some(s) = rs.sum_index(g, b) {
                let n = rs.n_const(g, b);
                if n != 0 {
                    if let Some(&k) = col.get(&s) {
                        row[k] += c * n;
                    }
                }
            }
        }
        rows.push(row);
        n_rows += 1;
    }
    n_rows - rank_i64(&rows)
}

/// All verified desingularization candidates for one orbit, smallest xi
/// first: Borel-stable eta with dim(base) + |eta| = dim(orbit), a generic
/// element of span(eta) in the orbit, and zero-dimensional fiber over it.
pub fn candidate_desingularizations(
    case: &Case,
    orbits: &[OrbitRecord],
    orbit: usize,
) -> Vec<BundleSpec> {
    let gl = &case.gl;
    let o = &orbits[orbit];
    if o.dim == 0 {
        return vec![BundleSpec {
            orbit,
            eta: vec![],
            xi: gl.deg1().to_vec(),
            stab_nodes: gl.levi_nodes.clone(),
            base_dim: 0,
        }];
    }
    let target_sig = signature(case, &o.rep.iter().copied().collect());
    let wp = gl.weight_poset();
    let ups = wp.up_sets().expect("poset within scan bound");
    let mut out = Vec::new();
    for mask in ups {
        let eta: Vec<RootIdx> = (0..wp.n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| wp.elements[i])
            .collect();
        if eta.is_empty() || eta.len() > o.dim {
            continue;
        }
        let stab = stab_nodes(case, mask, &wp.elements);
        let bd = base_dimension(case, &stab);
        if bd + eta.len() != o.dim {
            continue;
        }
        let (u, sig, dim) = generic_of_span(case, &eta);
        if dim != o.dim || sig != target_sig {
            continue;
        }
        // fiber over the generic point: stabilizer of the incidence
        // condition must be exactly the parabolic
        let p_dim = gl.dim_component(0) - bd;
        if fiber_stab_dim(case, &u, &eta) != p_dim {
            continue;
        }
        let eta_set: std::collections::HashSet<RootIdx> = eta.iter().copied().collect();
        let xi: Vec<RootIdx> = gl
            .deg1()
            .iter()
            .copied()
            .filter(|r| !eta_set.contains(r))
            .collect();
        out.push(BundleSpec {
            orbit,
            eta,
            xi,
            stab_nodes: stab,
            base_dim: bd,
        });
    }
    out.sort_by_key(|s| (s.xi.len(), s.eta.clone()));
    out
}

// ---------------------------------------------------------------------------
// complexes

/// Euler-level terms of F(V) for the bundle split, with V given by a twist
/// weight (zero for the trivial bundle): for each subset S of xi in
/// exterior degree k, Bott on twist + sum(S) contributes to F_{k-l} in
/// internal degree k.
pub fn complex_terms(coh: &Coh, spec: &BundleSpec, twist: &[i64]) -> Vec<ComplexTerm> {
    let rs = &coh.case.gl.rs;
    let m = spec.xi.len();
    assert!(m <= 24, "xi too large for subset scan");
    let wts: Vec<Vec<i64>> = spec.xi.iter().map(|&r| rs.root_wt[r].clone()).collect();
    let mut acc: BTreeMap<i64, BTreeMap<(Vec<i64>, i64), u64>> = BTreeMap::new();
    for mask in 0u64..(1 << m) {
        let k = mask.count_ones() as i64;
        let mut lam = twist.to_vec();
        for (t, w) in wts.iter().enumerate() {
            if mask >> t & 1 == 1 {
                for i in 0..rs.rank {
                    lam[i] += w[i];
                }
            }
        }
        if let Some((l, nu, _)) = coh.bott(&lam) {
            let i = k - l as i64;
            *acc.entry(i)
                .or_default()
                .entry((nu, k))
                .or_insert(0) += 1;
        }
    }
    acc.into_iter()
        .map(|(i, m)| ComplexTerm {
            i,
            summands: m.into_iter().map(|((w, d), c)| (w, d, c)).collect(),
        })
        .collect()
}

/// Cancel ghost pairs: identical (weight, degree) summands in adjacent
/// homological degrees.  Returns the reduced terms and the number of
/// cancelled pairs.
pub fn reduce_terms(terms: &[ComplexTerm]) -> (Vec<ComplexTerm>, u64) {
    let mut map: BTreeMap<i64, BTreeMap<(Vec<i64>, i64), u64>> = terms
        .iter()
        .map(|t| {
            (
                t.i,
                t.summands
                    .iter()
                    .map(|(w, d, c)| ((w.clone(), *d), *c))
                    .collect(),
            )
        })
        .collect();
    let mut cancelled = 0u64;
    loop {
        let mut change = false;
        let degrees: Vec<i64> = map.keys().copied().collect();
        for &i in &degrees {
            if !map.contains_key(&(i + 1)) {
                continue;
            }
            let keys: Vec<(Vec<i64>, i64)> = map[&i].keys().cloned().collect();
            for k in keys {
                let a = map[&i].get(&k).copied().unwrap_or(0);
                let b = map[&(i + 1)].get(&k).copied().unwrap_or(0);
                let c = a.min(b);
                if c > 0 {
                    *map.get_mut(&i).unwrap().get_mut(&k).unwrap() -= c;
                    *map.get_mut(&(i + 1)).unwrap().get_mut(&k).unwrap() -= c;
                    cancelled += c;
                    change = true;
                }
            }
        }
        for v in map.values_mut() {
            v.retain(|_, c| *c > 0);
        }
        map.retain(|_, v| !v.is_empty());
        if !change {
            break;
        }
    }
    let out = map
        .into_iter()
        .map(|(i, m)| ComplexTerm {
            i,
            summands: m.into_iter().map(|((w, d), c)| (w, d, c)).collect(),
        })
        .collect();
    (out, cancelled)
}

/// The twist defining the Grothendieck-dual complex: applying
/// complex_terms to it reproduces the dualized, reversed term list.
pub fn duality_twist(coh: &Coh, spec: &BundleSpec, twist: &[i64]) -> Vec<i64> {
    let rs = &coh.case.gl.rs;
    let rho = crate::schur::levi_rho(rs, &coh.case.gl.levi_nodes);
    let mut out: Vec<i64> = (0..rs.rank).map(|i| -2 * rho[i] - twist[i]).collect();
    for &r in &spec.xi {
        for i in 0..rs.rank {
            out[i] -= rs.root_wt[r][i];
        }
    }
    out
}

/// Dominant representative of -w (the dual weight) over the Levi.
pub fn dual_weight(case: &Case, wt: &[i64]) -> Vec<i64> {
    let rs = &case.gl.rs;
    let mut v: Vec<i64> = wt.iter().map(|x| -x).collect();
    loop {
        let mut moved = false;
        for &j in &case.gl.levi_nodes {
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
}

// ---------------------------------------------------------------------------
// Hilbert series

/// Hilbert numerator and degree of the normalization: h(k) is the Euler
/// characteristic of S^k(eta') over the flag variety of the Levi, computed
/// by dynamic programming on weight sums; the numerator is
/// H(t) (1-t)^dim, required to stabilize with three vanishing trailing
/// coefficients.
pub fn hilbert_series(coh: &Coh, spec: &BundleSpec, dim: usize) -> Result<HilbertData, String> {
    let gl = &coh.case.gl;
    let rs = &gl.rs;
    let codim = gl.dim_component(1) - dim;
    // the zero orbit and the dense orbit are polynomial rings
    if spec.eta.is_empty() || spec.xi.is_empty() {
        return Ok(HilbertData {
            codim,
            numerator: vec![1],
            degree: 1,
            flags: vec!["euler-level".into()],
        });
    }
    let wts: Vec<Vec<i64>> = spec.eta.iter().map(|&r| rs.root_wt[r].clone()).collect();
    let mut num: Vec<BigInt> = Vec::new();
    let mut stabilized = false;
    for kmax in [14usize, 24, 40] {
        // dp[k]: weight-sum -> count, built one eta-weight at a time
        let mut dp: Vec<BTreeMap<Vec<i64>, u64>> = vec![BTreeMap::new(); kmax + 1];
        dp[0].insert(vec![0; rs.rank], 1);
        for w in &wts {
            for k in 1..=kmax {
                let (lo, hi) = dp.split_at_mut(k);
                let prev = &lo[k - 1];
                let cur = &mut hi[0];
                let adds: Vec<(Vec<i64>, u64)> = prev
                    .iter()
                    .map(|(s, c)| {
                        let mut t = s.clone();
                        for i in 0..rs.rank {
                            t[i] += w[i];
                        }
                        (t, *c)
                    })
                    .collect();
                for (t, c) in adds {
                    *cur.entry(t).or_insert(0) += c;
                }
                if cur.len() > 4_000_000 {
                    return Err("weight-sum table too large".to_string());
                }
            }
        }
        let mut h: Vec<BigInt> = Vec::with_capacity(kmax + 1);
        for level in dp.iter() {
            let mut total = BigInt::zero();
            for (s, c) in level {
                if let Some((l, _, d)) = coh.bott(s) {
                    let signed = if l % 2 == 0 { d } else { -d };
                    total += signed * BigInt::from(*c);
                }
            }
            h.push(total);
        }
        // numerator = H(t) (1-t)^dim, truncated; verify stabilization
        num.clear();
        for k in 0..=kmax {
            let mut c = BigInt::zero();
            for j in 0..=k.min(dim) {
                let b = crate::schur::binomial(dim, j);
                let term = &h[k - j] * b;
                if j % 2 == 0 {
                    c += term;
                } else {
                    c -= term;
                }
            }
            num.push(c);
        }
        let last_nonzero = num.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        if last_nonzero + 3 <= kmax {
            num.truncate(last_nonzero + 1);
            stabilized = true;
            break;
        }
    }
    if !stabilized {
        return Err(format!(
            "numerator did not stabilize for orbit {}",
            spec.orbit
        ));
    }
    let mut numerator = Vec::with_capacity(num.len());
    for c in &num {
        let v: i64 = c.to_string().parse().map_err(|_| "coefficient overflow")?;
        numerator.push(v);
    }
    let degree: i64 = numerator.iter().sum();
    if degree <= 0 {
        return Err(format!("non-positive degree for orbit {}", spec.orbit));
    }
    Ok(HilbertData {
        codim,
        numerator,
        degree,
        flags: vec!["euler-level".into(), "higher-cohomology-vanishing-assumed".into()],
    })
}

/// Consistency between a complex and a Hilbert numerator:
/// sum_i (-1)^i sum dim t^deg = numerator * (1-t)^codim.
pub fn euler_consistency(
    coh: &Coh,
    terms: &[ComplexTerm],
    numerator: &[i64],
    codim: usize,
) -> bool {
    let mut chi: Vec<BigInt> = Vec::new();
    for t in terms {
        for (w, d, c) in &t.summands {
            let dim = weyl_dim_levi(
                &coh.case.gl.rs,
                &coh.levi_pos,
                &coh.case.gl.levi_nodes,
                w,
            )
            .unwrap();
            let idx = *d as usize;
            if chi.len() <= idx {
                chi.resize(idx + 1, BigInt::zero());
            }
            let signed = dim * BigInt::from(*c);
            if t.i.rem_euclid(2) == 0 {
                chi[idx] += signed;
            } else {
                chi[idx] -= signed;
            }
        }
    }
    while chi.last().map(|c| c.is_zero()).unwrap_or(false) {
        chi.pop();
    }
    let reduced = match div_one_minus_t_pow(&chi, codim) {
        Some(r) => r,
        None => return false,
    };
    let want: Vec<BigInt> = numerator.iter().map(|&c| BigInt::from(c)).collect();
    let mut want = want;
    while want.last().map(|c| c.is_zero()).unwrap_or(false) {
        want.pop();
    }
    reduced == want
}

// ---------------------------------------------------------------------------
// normality / rational singularities evidence

pub struct DisjointnessReport {
    /// per j: (irreducibles of H^i(Lambda^j xi') for i > j shared with
    /// H^*(S_j eta'), same for i >= j)
    pub per_j: Vec<(usize, Vec<Vec<i64>>, Vec<Vec<i64>>)>,
}

impl DisjointnessReport {
    pub fn rational_singularities_evidence(&self) -> bool {
        self.per_j.iter().all(|(_, rs_hits, _)| rs_hits.is_empty())
    }
    pub fn normality_evidence(&self) -> bool {
        self.per_j
            .iter()
            .all(|(_, _, normal_hits)| normal_hits.is_empty())
    }
}

/// The cohomological disjointness check: no irreducible may occur both in
/// H^i(Lambda^j xi') for i > j (resp. i >= j) and in H^*(S_j eta').
pub fn prop_disjointness(coh: &Coh, spec: &BundleSpec, jmax: usize) -> DisjointnessReport {
    let rs = &coh.case.gl.rs;
    let xi_wts: Vec<Vec<i64>> = spec.xi.iter().map(|&r| rs.root_wt[r].clone()).collect();
    let eta_wts: Vec<Vec<i64>> = spec.eta.iter().map(|&r| rs.root_wt[r].clone()).collect();
    let mut per_j = Vec::new();
    for j in 1..=jmax.min(xi_wts.len()) {
        // constituents of H^i(Lambda^j xi') split by i > j and i = j
        let mut high: Vec<Vec<i64>> = Vec::new();
        let mut at_j: Vec<Vec<i64>> = Vec::new();
        let mut subset = vec![0usize; j];
        subsets(xi_wts.len(), j, &mut subset, &mut |s| {
            let mut lam = vec![0i64; rs.rank];
            for &t in s.iter() {
                for i in 0..rs.rank {
                    lam[i] += xi_wts[t][i];
                }
            }
            if let Some((l, nu, _)) = coh.bott(&lam) {
                if l > j {
                    high.push(nu);
                } else if l == j {
                    at_j.push(nu);
                }
            }
        });
        // constituents of H^*(S_j eta')
        let mut sym: Vec<Vec<i64>> = Vec::new();
        multisets(eta_wts.len(), j, &mut |s| {
            let mut lam = vec![0i64; rs.rank];
            for &t in s.iter() {
                for i in 0..rs.rank {
                    lam[i] += eta_wts[t][i];
                }
            }
            if let Some((_, nu, _)) = coh.bott(&lam) {
                sym.push(nu);
            }
        });
        let sym_set: std::collections::HashSet<Vec<i64>> = sym.into_iter().collect();
        let mut rs_hits: Vec<Vec<i64>> = high
            .iter()
            .filter(|w| sym_set.contains(*w))
            .cloned()
            .collect();
        rs_hits.sort();
        rs_hits.dedup();
        let mut normal_hits: Vec<Vec<i64>> = high
            .iter()
            .chain(at_j.iter())
            .filter(|w| sym_set.contains(*w))
            .cloned()
            .collect();
        normal_hits.sort();
        normal_hits.dedup();
        per_j.push((j, rs_hits, normal_hits));
    }
    DisjointnessReport { per_j }
}

fn subsets(n: usize, k: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for i in start..n {
            buf.push(i);
            rec(n, k, i + 1, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    rec(n, k, 0, buf, f);
}

fn multisets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for i in start..n {
            buf.push(i);
            rec(n, k, i, buf, f);
            buf.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}

// ---------------------------------------------------------------------------
// hyperdiscriminant

/// The jet bundle of the highest weight orbit: the highest degree-one
/// root together with its single lowerings spans the one-jets, and the
/// complementary weights span the conormal directions whose generic
/// element generates the projectively dual orbit.
pub fn hyperdiscriminant_bundle(case: &Case) -> BundleSpec {
    let gl = &case.gl;
    let rs = &gl.rs;
    let hw = gl.g1_highest();
    let mut jets: Vec<RootIdx> = vec![hw];
    for &g in gl.levi_roots() {
        if let Some(s) = rs.sum_index(hw, g) {
            if gl.degree(s) == 1 {
                jets.push(s);
            }
        }
    }
    jets.sort_unstable();
    jets.dedup();
    let complement: Vec<RootIdx> = gl
        .deg1()
        .iter()
        .copied()
        .filter(|r| !jets.contains(r))
        .collect();
    BundleSpec {
        orbit: usize::MAX,
        eta: complement,
        xi: jets,
        stab_nodes: vec![],
        base_dim: 0,
    }
}

/// The hyperdiscriminant orbit: the orbit of a generic element supported
/// on the complement of the jet weights.
pub fn hyperdiscriminant_orbit(case: &Case, orbits: &[OrbitRecord]) -> Option<usize> {
    let spec = hyperdiscriminant_bundle(case);
    if spec.eta.is_empty() {
        return None;
    }
    let (_, sig, _) = generic_of_span(case, &spec.eta);
    orbits
        .iter()
        .position(|o| signature(case, &o.rep.iter().copied().collect()) == sig)
}

/// Degree of the defining invariant of a hypersurface orbit closure, from
/// the determinant of the presentation matrix of its (reduced) complex:
/// sum of dim x deg over F_1 minus the positive-degree part of F_0.
pub fn invariant_degree(coh: &Coh, terms: &[ComplexTerm]) -> Option<i64> {
    let gl = &coh.case.gl;
    let f0 = terms.iter().find(|t| t.i == 0)?;
    let f1 = terms.iter().find(|t| t.i == 1)?;
    let weighted = |t: &ComplexTerm, skip_trivial: bool| -> i64 {
        t.summands
            .iter()
            .filter(|(_, d, _)| !skip_trivial || *d > 0)
            .map(|(w, d, c)| {
                let dim = weyl_dim_levi(&gl.rs, &coh.levi_pos, &gl.levi_nodes, w).unwrap();
                let dim: i64 = dim.to_string().parse().unwrap();
                dim * d * (*c as i64)
            })
            .sum()
    };
    Some(weighted(f1, false) - weighted(f0, true))
}
