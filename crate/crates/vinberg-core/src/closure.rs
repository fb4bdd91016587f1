//! Degeneration (closure) order on the classified orbits.  The sufficient
//! test: move a representative around its orbit with exact unipotent
//! elements exp(ad u), extract initial faces under torus cocharacters, and
//! identify the limit's orbit through a vector of exact ad-ranks.  The
//! certified relation is reconciled against the table diagrams; covers the
//! search cannot certify are reported, never silently filled.

use crate::cases::Case;
use crate::grading::GradedLie;
use crate::linalg::XorShift;
use crate::rootsys::RootIdx;
use crate::vinberg::OrbitRecord;
use std::collections::{BTreeMap, HashMap, HashSet};

/// Exact element of g_1 with rational coefficients cleared to integers.
pub type G1Elt = BTreeMap<RootIdx, i64>;

fn rep_to_elt(rep: &[(RootIdx, i64)]) -> G1Elt {
    rep.iter().filter(|&&(_, c)| c != 0).map(|&(r, c)| (r, c)).collect()
}

/// exp(c ad e_gamma) applied to an element of g_1, exactly.  The action of
/// a degree-zero root vector on g_1 is nilpotent, and the divided powers
/// stay integral after clearing one common denominator.
fn apply_exp(gl: &GradedLie, e: &G1Elt, gamma: RootIdx, c: i64) -> Option<G1Elt> {
    let rs = &gl.rs;
    // accumulate sum_k c^k/k! ad^k with rational bookkeeping over i128
    let mut acc: BTreeMap<RootIdx, i128> = e.iter().map(|(&r, &v)| (r, v as i128)).collect();
    let mut layer: BTreeMap<RootIdx, i128> = acc.clone();
    let mut denom: i128 = 1;
    for k in 1..=6i128 {
        let mut next: BTreeMap<RootIdx, i128> = BTreeMap::new();
        for (&b, &v) in &layer {
            if let Some(s) = rs.sum_index(gamma, b) {
                let n = rs.n_const(gamma, b) as i128;
                if n != 0 {
                    *next.entry(s).or_insert(0) += v.checked_mul(n)?.checked_mul(c as i128)?;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        if next.is_empty() {
            break;
        }
        // acc += next / k!; rescale acc by k to keep integrality
        denom = denom.checked_mul(k)?;
        for v in acc.values_mut() {
            *v = v.checked_mul(k)?;
        }
        for (r, v) in &next {
            *acc.entry(*r).or_insert(0) += v;
        }
        layer = next;
    }
    // clear the common denominator (a positive rescale stays in the orbit)
    let mut g = 0i128;
    for v in acc.values() {
        g = gcd(g, v.abs());
    }
    let g = if g == 0 { 1 } else { g };
    let mut out: G1Elt = BTreeMap::new();
    for (r, v) in acc {
        if v != 0 {
            out.insert(r, i64::try_from(v / g).ok()?);
        }
    }
    Some(out)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// orbit signatures

/// Exact invariants separating the orbits of one case: ranks of ad(e) and
/// ad(e)^2 between graded pieces (Cartan components included), plus the
/// ranks of the Levi-factor projections of [e, g_{-1}].
pub fn signature(case: &Case, e: &G1Elt) -> Vec<usize> {
    use crate::linalg::{rank, rat, Rat};
    use crate::rootsys::{bracket, AlgElt};
    use num_traits::Zero;

    let gl = &case.gl;
    let rs = &gl.rs;
    let mut e_alg = AlgElt::zero(rs.rank);
    for (&r, &c) in e {
        e_alg.e.insert(r, rat(c));
    }
    // coordinates of an algebra element on one graded piece: root vectors
    // of that degree, plus the Cartan for degree zero
    let coords = |x: &AlgElt, deg: i64| -> Vec<Rat> {
        let roots = gl.components.get(&deg).cloned().unwrap_or_default();
        let mut v: Vec<Rat> = roots
            .iter()
            .map(|r| x.e.get(r).cloned().unwrap_or_else(Rat::zero))
            .collect();
        if deg == 0 {
            v.extend(x.h.iter().cloned());
        }
        v
    };
    let basis_of = |deg: i64| -> Vec<AlgElt> {
        let mut out: Vec<AlgElt> = gl
            .components
            .get(&deg)
            .cloned()
            .unwrap_or_default()
            .iter()
            .map(|&r| AlgElt::root_vector(rs.rank, r))
            .collect();
        if deg == 0 {
            for j in 0..rs.rank {
                let mut h = AlgElt::zero(rs.rank);
                h.h[j] = rat(1);
                out.push(h);
            }
        }
        out
    };

    let mut sig = Vec::new();
    let degrees: Vec<i64> = gl.components.keys().copied().collect();
    for &i in &degrees {
        if !degrees.contains(&(i + 1)) && i + 1 != 0 {
            continue;
        }
        let rows: Vec<Vec<Rat>> = basis_of(i)
            .iter()
            .map(|x| coords(&bracket(rs, x, &e_alg), i + 1))
            .collect();
        if rows.is_empty() || rows[0].is_empty() {
            continue;
        }
        sig.push(rank(rows));
    }
    // Levi-factor projections of ad e : g_{-1} -> g_0
    for f in &case.factors {
        let fac_roots: Vec<RootIdx> = gl
            .levi_roots()
            .iter()
            .copied()
            .filter(|&r| {
                rs.roots[r]
                    .iter()
                    .enumerate()
                    .all(|(n, &c)| c == 0 || f.nodes.contains(&n))
            })
            .collect();
        let rows: Vec<Vec<Rat>> = basis_of(-1)
            .iter()
            .map(|x| {
                let img = bracket(rs, x, &e_alg);
                let mut row: Vec<Rat> = fac_roots
                    .iter()
                    .map(|r| img.e.get(r).cloned().unwrap_or_else(Rat::zero))
                    .collect();
                // Cartan part through the factor's simple roots: these
                // functionals kill the invariant complement of the factor
                for &n in &f.nodes {
                    let mut v = Rat::zero();
                    for k in 0..rs.rank {
                        if !img.h[k].is_zero() {
                            v += img.h[k].clone() * rat(rs.cartan[n][k]);
                        }
                    }
                    row.push(v);
                }
                row
            })
            .collect();
        sig.push(rank(rows));
    }
    // second power: g_{-1} -> g_1
    let rows: Vec<Vec<Rat>> = basis_of(-1)
        .iter()
        .map(|x| {
            let once = bracket(rs, x, &e_alg);
            coords(&bracket(rs, &once, &e_alg), 1)
        })
        .collect();
    if !rows.is_empty() && !rows[0].is_empty() {
        sig.push(rank(rows));
    }
    sig
}

// ---------------------------------------------------------------------------
// toric limits

/// All initial faces of an element under small integral cocharacters.
fn faces(gl: &GradedLie, e: &G1Elt, lo: i64, hi: i64) -> Vec<G1Elt> {
    let rs = &gl.rs;
    let supp: Vec<RootIdx> = e.keys().copied().collect();
    if supp.is_empty() {
        return vec![];
    }
    let mut out: HashSet<Vec<RootIdx>> = HashSet::new();
    let rank = rs.rank;
    let mut chi = vec![lo; rank];
    loop {
        // face = argmin of <chi, root>
        let mut best = i64::MAX;
        let mut face: Vec<RootIdx> = Vec::new();
        for &r in &supp {
            let v: i64 = (0..rank).map(|i| chi[i] * rs.roots[r][i]).sum();
            use std::cmp::Ordering::*;
            match v.cmp(&best) {
                Less => {
                    best = v;
                    face.clear();
                    face.push(r);
                }
                Equal => face.push(r),
                Greater => {}
            }
        }
        out.insert(face);
        // advance odometer
        let mut i = 0;
        loop {
            if i == rank {
                let mut result: Vec<G1Elt> = out
                    .into_iter()
                    .map(|f| f.iter().map(|&r| (r, e[&r])).collect())
                    .collect();
                result.sort();
                return result;
            }
            if chi[i] < hi {
                chi[i] += 1;
                break;
            }
            chi[i] = lo;
            i += 1;
        }
    }
}

/// Deterministic spreading elements for one orbit representative.
fn spread_elements(gl: &GradedLie, rep: &[(RootIdx, i64)], stage: usize) -> Vec<G1Elt> {
    let e0 = rep_to_elt(rep);
    let mut out = vec![e0.clone()];
    if stage == 0 {
        return out;
    }
    let levi: Vec<RootIdx> = gl.levi_roots().to_vec();
    // single unipotent moves
    for &g in &levi {
        if let Some(e1) = apply_exp(gl, &e0, g, 1) {
            out.push(e1);
        }
    }
    if stage == 1 {
        return out;
    }
    if stage >= 3 {
        // exhaustive short unipotent words with unit coefficients; the sign
        // combinations realize the exact cancellations that tangent
        // degenerations need.  Depth three only at the last escalation.
        let mut layer: Vec<G1Elt> = vec![e0.clone()];
        let depth = if stage >= 4 { 3 } else { 2 };
        for _ in 0..depth {
            let mut next = Vec::new();
            for e in &layer {
                for &g in &levi {
                    for c in [1i64, -1] {
                        if let Some(e2) = apply_exp(gl, e, g, c) {
                            if e2.len() <= 24 {
                                next.push(e2);
                            }
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
            if layer.len() > 40_000 {
                break;
            }
        }
    }
    // seeded random compositions of unipotent moves; more and deeper at the
    // last stage, where only the stubborn covers are left
    let samples = if stage == 2 { 160 } else { 2000 };
    let mut rng = XorShift::new(0xc10_5u64 + rep.len() as u64 + stage as u64);
    for _ in 0..samples {
        let mut e = e0.clone();
        let depth = 2 + (rng.next_u64() % 4) as usize;
        let mut ok = true;
        for _ in 0..depth {
            let g = levi[(rng.next_u64() % levi.len() as u64) as usize];
            let c = rng.nonzero(2);
            match apply_exp(gl, &e, g, c) {
                Some(next) => e = next,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && e.len() <= 24 {
            out.push(e);
        }
    }
    out
}

/// Certificates of degeneration for one case: certified[(i, j)] means the
/// closure of orbit i was explicitly seen to contain a point of orbit j.
pub struct ClosureCerts {
    pub n: usize,
    pub certified: HashSet<(usize, usize)>,
}

impl ClosureCerts {
    pub fn le(&self, j: usize, i: usize) -> bool {
        j == i || self.certified.contains(&(i, j))
    }
}

/// Sufficient-only pairwise test: can orbit `j` be exhibited inside the
/// closure of orbit `i` by the limit search?
pub fn toric_degenerates(
    case: &Case,
    orbits: &[OrbitRecord],
    i: usize,
    j: usize,
) -> bool {
    if orbits[j].dim >= orbits[i].dim {
        return false;
    }
    let certs = certify(case, orbits, &[(i, j)]);
    certs.certified.contains(&(i, j))
}

/// Comparabilities allowed by dimension alone: j can lie below i only if
/// dim j < dim i (orbit closures of equal dimension coincide or are
/// incomparable).
pub fn dimension_filter(orbits: &[OrbitRecord]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..orbits.len() {
        for j in 0..orbits.len() {
            if orbits[j].dim < orbits[i].dim {
                out.push((i, j));
            }
        }
    }
    out
}

/// Run the sufficient toric-limit search.  `targets` restricts the pairs
/// that drive escalation (fixture covers); all incidental certificates are
/// kept.  Stages: bare representative, single unipotent moves with a small
/// cocharacter grid, then random compositions with the full {-2..2} grid.
pub fn certify(case: &Case, orbits: &[OrbitRecord], targets: &[(usize, usize)]) -> ClosureCerts {
    let gl = &case.gl;
    let n = orbits.len();
    let dim1 = gl.dim_component(1);
    let mut certified: HashSet<(usize, usize)> = HashSet::new();
    // the central torus scales g_1: everything degenerates to the origin
    for (i, o) in orbits.iter().enumerate() {
        for (j, p) in orbits.iter().enumerate() {
            if p.dim == 0 && o.dim > 0 {
                certified.insert((i, j));
            }
            // the dense orbit contains everything in its closure
            if o.dim == dim1 && p.dim < o.dim {
                certified.insert((i, j));
            }
        }
    }
    // signatures must separate the orbits
    let sigs: Vec<Vec<usize>> = orbits
        .iter()
        .map(|o| signature(case, &rep_to_elt(&o.rep)))
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            assert_ne!(
                sigs[a], sigs[b],
                "orbit signatures fail to separate {} and {}",
                a, b
            );
        }
    }
    let sig_index: HashMap<Vec<usize>, usize> =
        sigs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

    let want: HashSet<(usize, usize)> = targets.iter().copied().collect();
    for stage in 0..=4 {
        let missing: Vec<(usize, usize)> = want
            .iter()
            .copied()
            .filter(|p| !certified.contains(p))
            .collect();
        if stage > 0 && missing.is_empty() {
            break;
        }
        let active: HashSet<usize> = if stage == 0 {
            (0..n).collect()
        } else {
            missing.iter().map(|&(i, _)| i).collect()
        };
        // the wide grid helps at stage 2; the exhaustive stage keeps the
        // unit grid, which already separates the tangent-type faces
        let (lo, hi) = if stage == 2 { (-2, 2) } else { (-1, 1) };
        let max_support = orbits.iter().map(|o| o.rep.len()).max().unwrap_or(6) + 4;
        for &i in &active {
            if orbits[i].dim == 0 {
                continue;
            }
            // at the escalation stages only faces that could still close a
            // wanted pair are worth a full signature; the ad-rank is a cheap
            // prefilter for that
            let wanted_dims: HashSet<usize> = if stage == 0 {
                orbits.iter().map(|o| o.dim).collect()
            } else {
                want.iter()
                    .filter(|&&(a, _)| a == i)
                    .map(|&(_, j)| orbits[j].dim)
                    .collect()
            };
            let mut seen_faces: HashSet<Vec<(RootIdx, i64)>> = HashSet::new();
            let mut pending: Vec<G1Elt> = Vec::new();
            for e in spread_elements(gl, &orbits[i].rep, stage) {
                for face in faces(gl, &e, lo, hi) {
                    if face.len() == e.len() || face.is_empty() || face.len() > max_support {
                        continue;
                    }
                    let key: Vec<(RootIdx, i64)> = face.iter().map(|(&r, &c)| (r, c)).collect();
                    if seen_faces.insert(key) {
                        pending.push(face);
                    }
                }
            }
            // small supports first: the interesting limits are sparse
            pending.sort_by_key(|f| f.len());
            let mut budget = 8000usize;
            for face in pending {
                if budget == 0 {
                    break;
                }
                let rep_face: Vec<(RootIdx, i64)> = face.iter().map(|(&r, &c)| (r, c)).collect();
                let d = crate::vinberg::ad_rank(gl, &rep_face);
                if d >= orbits[i].dim || !wanted_dims.contains(&d) {
                    continue;
                }
                budget -= 1;
                let s = signature(case, &face);
                if let Some(&j) = sig_index.get(&s) {
                    if j != i && orbits[j].dim < orbits[i].dim {
                        certified.insert((i, j));
                    }
                }
            }
        }
    }
    // targeted thickening for covers the face search missed: perturb the
    // lower representative by one or two extra coordinates; if the result
    // has the upper orbit's signature and the lower representative is one
    // of its initial faces, the degeneration is exhibited directly
    let missing: Vec<(usize, usize)> = want
        .iter()
        .copied()
        .filter(|p| !certified.contains(p))
        .collect();
    for (i, j) in missing {
        let base = rep_to_elt(&orbits[j].rep);
        let deg1: Vec<RootIdx> = gl.deg1().to_vec();
        let mut found = false;
        'outer: for &d1 in &deg1 {
            if base.contains_key(&d1) {
                continue;
            }
            for c1 in [1i64, -1, 2, -2] {
                let mut y = base.clone();
                y.insert(d1, c1);
                if signature(case, &y) != sigs[i] {
                    continue;
                }
                // the base must reappear as an initial face of y
                let base_key: Vec<(RootIdx, i64)> =
                    base.iter().map(|(&r, &c)| (r, c)).collect();
                for face in faces(gl, &y, -2, 2) {
                    let key: Vec<(RootIdx, i64)> = face.iter().map(|(&r, &c)| (r, c)).collect();
                    if key == base_key {
                        certified.insert((i, j));
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        let _ = found;
    }
    // transitive closure
    loop {
        let mut added = false;
        let pairs: Vec<(usize, usize)> = certified.iter().copied().collect();
        for &(i, j) in &pairs {
            for &(a, b) in &pairs {
                if a == j && certified.insert((i, b)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    ClosureCerts { n, certified }
}

/// Transitive reduction of a strict partial order given as a set of pairs
/// (i greater, j lower).
pub fn transitive_reduction(_n: usize, order: &HashSet<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for &(i, j) in order {
        let through = order
            .iter()
            .any(|&(a, b)| b == j && a != i && order.contains(&(i, a)));
        if !through {
            covers.push((j, i));
        }
    }
    covers.sort_unstable();
    covers
}

/// Deterministic DOT output for a cover diagram over named orbits.
pub fn dot(orbits: &[OrbitRecord], covers: &[(usize, usize)], title: &str) -> String {
    let mut s = String::new();
    s.push_str(&format!("digraph \"{title}\" {{\n"));
    s.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for o in orbits {
        s.push_str(&format!(
            "  O{} [label=\"O{} (dim {})\\n{}\"];\n",
            o.index, o.index, o.dim, o.label
        ));
    }
    for &(lo, hi) in covers {
        s.push_str(&format!("  O{lo} -> O{hi};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::{Case, CaseId};
    use crate::vinberg::classify;

    fn setup(id: &str) -> (Case, Vec<OrbitRecord>) {
        let case = Case::new(CaseId::parse(id).unwrap()).unwrap();
        let orbits = classify(&case.gl);
        (case, orbits)
    }

    #[test]
    fn signatures_separate_orbits_everywhere() {
        for id in CaseId::all() {
            let (case, orbits) = setup(&id.to_string());
            let sigs: Vec<Vec<usize>> = orbits
                .iter()
                .map(|o| signature(&case, &rep_to_elt(&o.rep)))
                .collect();
            for a in 0..sigs.len() {
                for b in a + 1..sigs.len() {
                    assert_ne!(sigs[a], sigs[b], "{id}: orbits {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn signature_is_orbit_invariant() {
        // moving a representative by Levi Weyl elements and unipotents must
        // not change its signature
        for id in ["F4.1", "E6.4", "F4.2"] {
            let (case, orbits) = setup(id);
            for o in &orbits {
                if o.rep.is_empty() {
                    continue;
                }
                let base = signature(&case, &rep_to_elt(&o.rep));
                for &j in case.gl.levi_nodes.iter().take(3) {
                    let moved: Vec<(RootIdx, i64)> = o
                        .rep
                        .iter()
                        .map(|&(r, c)| (case.gl.rs.simple_perm[j][r], c))
                        .collect();
                    assert_eq!(base, signature(&case, &rep_to_elt(&moved)), "{id} W-move");
                }
                let e0 = rep_to_elt(&o.rep);
                for &g in case.gl.levi_roots().iter().take(4) {
                    if let Some(e1) = apply_exp(&case.gl, &e0, g, 1) {
                        assert_eq!(base, signature(&case, &e1), "{id} exp-move");
                    }
                }
            }
        }
    }

    #[test]
    fn g2_2_chain() {
        let (case, orbits) = setup("G2.2");
        let targets = vec![(1, 0), (2, 1), (3, 2)];
        let certs = certify(&case, &orbits, &targets);
        for &(i, j) in &targets {
            assert!(certs.certified.contains(&(i, j)), "missing {i}->{j}");
        }
        // equal or higher dimension never certified
        for &(i, j) in &certs.certified {
            assert!(orbits[j].dim < orbits[i].dim);
        }
    }

    #[test]
    fn e6_1_chain_certificates() {
        let (case, orbits) = setup("E6.1");
        let certs = certify(&case, &orbits, &[(2, 1), (1, 0)]);
        assert!(certs.certified.contains(&(1, 0)));
        assert!(certs.certified.contains(&(2, 1)));
    }

    #[test]
    fn pairwise_toric_test() {
        let (case, orbits) = setup("E6.1");
        // O2 degenerates to O1 by killing one coordinate of its two-term
        // representative; O1 to the origin by the central scaling
        assert!(toric_degenerates(&case, &orbits, 2, 1));
        assert!(toric_degenerates(&case, &orbits, 1, 0));
        assert!(!toric_degenerates(&case, &orbits, 1, 2));
        // the Parfenov correction: orbit 9 lies below orbit 11 in (E6, a4)
        let data = crate::verify::load_case_data(
            crate::cases::CaseId::parse("E6.4").unwrap(),
        )
        .unwrap();
        let (i, j) = (data.matched[&11], data.matched[&9]);
        assert!(toric_degenerates(&data.case, &data.orbits, i, j));
    }

    #[test]
    fn dedup_groups_equivalent_maps() {
        use crate::vinberg::{dedup_orbits, enumerate_support_maps};
        let (case, _) = setup("E6.2");
        let pairs = enumerate_support_maps(&case.gl, "2A1");
        assert!(pairs.len() > 1);
        let classes = dedup_orbits(&case.gl, pairs);
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn dimension_filter_basics() {
        let (_, orbits) = setup("E6.4");
        let filt = dimension_filter(&orbits);
        // equal-dimension orbits are never comparable
        for &(i, j) in &filt {
            assert!(orbits[j].dim < orbits[i].dim);
        }
        // the two dim-13 orbits (table rows 8 and 9) are incomparable
        let d13: Vec<usize> = orbits
            .iter()
            .enumerate()
            .filter(|(_, o)| o.dim == 13)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(d13.len(), 2);
        assert!(!filt.contains(&(d13[0], d13[1])));
        assert!(!filt.contains(&(d13[1], d13[0])));
    }

    #[test]
    fn transitive_reduction_of_a_chain() {
        let order: HashSet<(usize, usize)> =
            [(2, 0), (2, 1), (1, 0)].into_iter().collect();
        let covers = transitive_reduction(3, &order);
        assert_eq!(covers, vec![(0, 1), (1, 2)]);
    }
}
