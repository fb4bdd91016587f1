//! Reconciliation of computed results against the stored tables: orbit
//! matching by canonical support sets, per-cell comparison of dimensions,
//! support labels, containment diagrams, Hilbert data, printed complexes
//! and invariant degrees, with logged inconsistencies surfaced rather than
//! silently absorbed.

use crate::cases::{Case, CaseId};
use crate::closure::{certify, dot, transitive_reduction, ClosureCerts};
use crate::fixtures::{Fixture, FixtureOrbit};
use crate::geomtech::{
    candidate_desingularizations, complex_terms, hilbert_series, hyperdiscriminant_orbit,
    invariant_degree, reduce_terms, Coh, ComplexTerm, HilbertData,
};
use crate::rootsys::RootIdx;
use crate::vinberg::{canonical_root_set, classify, OrbitRecord};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Flagged,
    Fail,
}

#[derive(Clone, Debug)]
pub struct Item {
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// flagged items that strict mode treats as failures (unproven edges,
    /// as opposed to logged table inconsistencies)
    pub strict_fails: bool,
}

pub struct CaseVerification {
    pub id: CaseId,
    pub items: Vec<Item>,
}

impl CaseVerification {
    pub fn ok(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }
    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(Item {
            name: name.into(),
            status,
            detail: detail.into(),
            strict_fails: false,
        });
    }

    pub fn push_unproven(
        &mut self,
        name: impl Into<String>,
        detail: impl Into<String>,
    ) {
        self.items.push(Item {
            name: name.into(),
            status: Status::Flagged,
            detail: detail.into(),
            strict_fails: true,
        });
    }
}

/// The full computed state for one case.
pub struct CaseData {
    pub case: Case,
    pub orbits: Vec<OrbitRecord>,
    pub fixture: Fixture,
    /// fixture orbit index -> computed orbit position
    pub matched: HashMap<usize, usize>,
    /// computed positions with no fixture row
    pub extra: Vec<usize>,
}

pub fn fixture_support_set(case: &Case, fo: &FixtureOrbit) -> Option<Vec<RootIdx>> {
    let mut set: Vec<RootIdx> = Vec::new();
    let labels = if !fo.support.is_empty() {
        &fo.support
    } else {
        &fo.rep
    };
    let roots = if !fo.support_roots.is_empty() {
        &fo.support_roots
    } else {
        &fo.rep_roots
    };
    if !labels.is_empty() {
        for l in labels {
            set.push(case.root_by_label(l)?);
        }
    } else if !roots.is_empty() {
        for v in roots {
            set.push(case.gl.rs.root_index(v)?);
        }
    } else if fo.dim == 0 {
        // the zero orbit
    } else {
        return None;
    }
    set.sort_unstable();
    set.dedup();
    Some(set)
}

/// Match fixture rows to computed orbits: by canonical support set where a
/// representative is stored, by unique dimension otherwise.
pub fn match_orbits(
    case: &Case,
    orbits: &[OrbitRecord],
    fx: &Fixture,
) -> (HashMap<usize, usize>, Vec<usize>) {
    let canon: Vec<Vec<RootIdx>> = orbits
        .iter()
        .map(|o| o.s1_canonical.clone())
        .collect();
    let mut matched: HashMap<usize, usize> = HashMap::new();
    let mut used: HashSet<usize> = HashSet::new();
    for fo in &fx.orbits {
        let target = fixture_support_set(case, fo).map(|s| canonical_root_set(&case.gl, &s));
        let hit = match target {
            Some(t) => canon.iter().position(|c| *c == t),
            None => {
                // fall back to a unique dimension
                let hits: Vec<usize> = orbits
                    .iter()
                    .enumerate()
                    .filter(|(_, o)| o.dim == fo.dim)
                    .map(|(i, _)| i)
                    .collect();
                if hits.len() == 1 {
                    Some(hits[0])
                } else {
                    None
                }
            }
        };
        if let Some(h) = hit {
            if used.insert(h) {
                matched.insert(fo.i, h);
            }
        }
    }
    let extra: Vec<usize> = (0..orbits.len()).filter(|i| !used.contains(i)).collect();
    (matched, extra)
}

pub fn load_case_data(id: CaseId) -> Result<CaseData, String> {
    let case = Case::new(id).map_err(|e| e.to_string())?;
    let orbits = classify(&case.gl);
    let fixture = crate::fixtures::load(&id.to_string())?;
    let (matched, extra) = match_orbits(&case, &orbits, &fixture);
    Ok(CaseData {
        case,
        orbits,
        fixture,
        matched,
        extra,
    })
}

// ---------------------------------------------------------------------------
// orbit table

pub fn verify_orbits(data: &CaseData, v: &mut CaseVerification) {
    let fx = &data.fixture;
    let counted = data.orbits.len();
    let printed = fx.orbits.len();
    if counted == printed && data.extra.is_empty() {
        v.push("orbit-count", Status::Pass, format!("{counted} orbits"));
    } else {
        let logged = fx.conflicts.iter().any(|c| c.kind == "orbit-count");
        let status = if logged { Status::Flagged } else { Status::Fail };
        let extras: Vec<String> = data
            .extra
            .iter()
            .map(|&i| {
                format!(
                    "{} (dim {})",
                    data.orbits[i].label, data.orbits[i].dim
                )
            })
            .collect();
        v.push(
            "orbit-count",
            status,
            format!(
                "computed {counted} vs printed {printed}; unmatched computed: [{}]{}",
                extras.join(", "),
                if logged { " — logged inconsistency" } else { "" }
            ),
        );
    }
    for fo in &fx.orbits {
        match data.matched.get(&fo.i) {
            None => v.push(
                format!("orbit-{}", fo.i),
                Status::Fail,
                "no computed orbit matches the printed representative".to_string(),
            ),
            Some(&c) => {
                let o = &data.orbits[c];
                if o.dim != fo.dim {
                    v.push(
                        format!("orbit-{}-dim", fo.i),
                        Status::Fail,
                        format!("computed {} vs printed {}", o.dim, fo.dim),
                    );
                } else {
                    v.push(format!("orbit-{}-dim", fo.i), Status::Pass, o.dim.to_string());
                }
                if let Some(st) = &fo.stype {
                    if st != "0" {
                        if &o.label == st {
                            v.push(format!("orbit-{}-type", fo.i), Status::Pass, st.clone());
                        } else {
                            v.push(
                                format!("orbit-{}-type", fo.i),
                                Status::Fail,
                                format!("computed {} vs printed {}", o.label, st),
                            );
                        }
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// containment diagrams

pub struct HasseOutcome {
    pub certs: ClosureCerts,
    /// fixture covers translated to computed indices
    pub fixture_covers: Vec<(usize, usize)>,
    pub uncertified: Vec<(usize, usize)>,
    pub unexpected: Vec<(usize, usize)>,
}

pub fn verify_hasse(data: &CaseData, v: &mut CaseVerification) -> HasseOutcome {
    let fx = &data.fixture;
    // covers in computed coordinates: (higher, lower)
    let mut fixture_covers: Vec<(usize, usize)> = Vec::new();
    for e in &fx.hasse {
        if let (Some(&lo), Some(&hi)) = (data.matched.get(&e[0]), data.matched.get(&e[1])) {
            fixture_covers.push((hi, lo));
        }
    }
    let certs = certify(&data.case, &data.orbits, &fixture_covers);
    let mut uncertified = Vec::new();
    for &(hi, lo) in &fixture_covers {
        if !certs.certified.contains(&(hi, lo)) {
            uncertified.push((hi, lo));
        }
    }
    // soundness: certified pairs among matched orbits must lie inside the
    // printed order (its transitive closure)
    let back: HashMap<usize, usize> = data.matched.iter().map(|(&f, &c)| (c, f)).collect();
    let mut printed_order: HashSet<(usize, usize)> = HashSet::new();
    for e in &fx.hasse {
        printed_order.insert((e[1], e[0]));
    }
    loop {
        let mut grew = false;
        let pairs: Vec<(usize, usize)> = printed_order.iter().copied().collect();
        for &(i, j) in &pairs {
            for &(a, b) in &pairs {
                if a == j && printed_order.insert((i, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut unexpected = Vec::new();
    for &(i, j) in &certs.certified {
        if let (Some(&fi), Some(&fj)) = (back.get(&i), back.get(&j)) {
            if !printed_order.contains(&(fi, fj)) {
                unexpected.push((fi, fj));
            }
        }
    }
    unexpected.sort_unstable();
    let logged = fx.conflicts.iter().any(|c| c.kind == "orbit-count");
    if uncertified.is_empty() {
        v.push(
            "hasse-certified",
            Status::Pass,
            format!("{} printed covers certified", fixture_covers.len()),
        );
    } else {
        // the limit search is sufficient only: unproven printed covers are
        // reported, and fail the run under --strict
        v.push_unproven(
            "hasse-certified",
            format!("unproven printed covers: {:?}", uncertified),
        );
    }
    if unexpected.is_empty() {
        v.push("hasse-soundness", Status::Pass, "certified relation inside printed order");
    } else if logged {
        v.push(
            "hasse-soundness",
            Status::Flagged,
            format!(
                "certified relations outside the printed order: {:?} — logged inconsistency",
                unexpected
            ),
        );
    } else {
        v.push(
            "hasse-soundness",
            Status::Fail,
            format!("certified relations outside the printed order: {:?}", unexpected),
        );
    }
    // compare the transitive reduction with the printed diagram; with
    // extra computed orbits the comparison restricts to the printed ones
    {
        let matched_set: HashSet<usize> = data.matched.values().copied().collect();
        let full_order: HashSet<(usize, usize)> = if data.extra.is_empty() {
            certs.certified.clone()
        } else {
            certs
                .certified
                .iter()
                .copied()
                .filter(|(i, j)| matched_set.contains(i) && matched_set.contains(j))
                .collect()
        };
        let reduction = transitive_reduction(data.orbits.len(), &full_order);
        let fixture_set: HashSet<(usize, usize)> =
            fixture_covers.iter().map(|&(hi, lo)| (lo, hi)).collect();
        let computed_set: HashSet<(usize, usize)> = reduction.iter().copied().collect();
        let name = if data.extra.is_empty() {
            "hasse-reduction"
        } else {
            "hasse-reduction-restricted"
        };
        if computed_set == fixture_set {
            let (status, note) = if data.extra.is_empty() {
                (Status::Pass, "computed covers equal the printed diagram".to_string())
            } else {
                (
                    Status::Flagged,
                    "printed diagram matches the order restricted to its own orbits; the full diagram has more nodes (logged inconsistency)"
                        .to_string(),
                )
            };
            v.push(name, status, note);
        } else {
            let missing: Vec<_> = fixture_set.difference(&computed_set).collect();
            let extra: Vec<_> = computed_set.difference(&fixture_set).collect();
            // an incomplete certified relation can only lose edges, and lost
            // edges were already reported above; extra covers are failures
            let status = if extra.is_empty() { Status::Flagged } else { Status::Fail };
            v.push(
                name,
                status,
                format!("missing covers {:?}, extra covers {:?}", missing, extra),
            );
        }
    }
    HasseOutcome {
        certs,
        fixture_covers,
        uncertified,
        unexpected,
    }
}

/// DOT text of the reconciled diagram (printed covers over matched orbits,
/// plus any extra computed orbits wired through the certified relation).
pub fn hasse_dot(data: &CaseData, outcome: &HasseOutcome) -> String {
    let mut covers: Vec<(usize, usize)> = outcome
        .fixture_covers
        .iter()
        .map(|&(hi, lo)| (lo, hi))
        .collect();
    if !data.extra.is_empty() {
        let reduction = transitive_reduction(data.orbits.len(), &outcome.certs.certified);
        covers = reduction;
    }
    covers.sort_unstable();
    dot(&data.orbits, &covers, &data.case.id.to_string())
}

// ---------------------------------------------------------------------------
// Hilbert data and complexes

pub struct OrbitGeometry {
    pub spec_index: usize,
    pub hilbert: HilbertData,
    pub reduced: Vec<ComplexTerm>,
    pub cancelled: u64,
}

/// Run the geometric pipeline for one computed orbit.  All candidates are
/// evaluated and the minimal Hilbert degree wins: a generically finite
/// modification of degree d > 1 passes the dimension and fiber tests but
/// multiplies the degree by d, so the birational models are exactly the
/// minimal ones.  Among those, prefer a complex without ghost weights
/// outside the Sym(g_1^*) lattice.
pub fn orbit_geometry(
    case: &Case,
    orbits: &[OrbitRecord],
    idx: usize,
    with_complex: bool,
) -> Result<OrbitGeometry, String> {
    let coh = Coh::new(case);
    let specs = candidate_desingularizations(case, orbits, idx);
    if specs.is_empty() {
        return Err(format!("no desingularization candidate for orbit {idx}"));
    }
    let mut evaluated: Vec<(usize, HilbertData)> = Vec::new();
    let mut last_err = String::new();
    for (si, spec) in specs.iter().enumerate() {
        match hilbert_series(&coh, spec, orbits[idx].dim) {
            Ok(h) => evaluated.push((si, h)),
            Err(e) => last_err = e,
        }
    }
    if evaluated.is_empty() {
        return Err(last_err);
    }
    let min_deg = evaluated.iter().map(|(_, h)| h.degree).min().unwrap();
    evaluated.retain(|(_, h)| h.degree == min_deg);
    if !with_complex {
        let (si, h) = evaluated.swap_remove(0);
        return Ok(OrbitGeometry {
            spec_index: si,
            hilbert: h,
            reduced: vec![],
            cancelled: 0,
        });
    }
    let mut best: Option<OrbitGeometry> = None;
    for (si, h) in evaluated {
        if specs[si].xi.len() > 20 {
            continue;
        }
        let raw = complex_terms(&coh, &specs[si], &vec![0; case.gl.rs.rank]);
        let (reduced, cancelled) = reduce_terms(&raw);
        let clean = reduced.iter().all(|t| {
            t.summands
                .iter()
                .all(|(w, d, _)| case.try_present_weight(w, *d).is_some())
        });
        let g = OrbitGeometry {
            spec_index: si,
            hilbert: h,
            reduced,
            cancelled,
        };
        if clean {
            return Ok(g);
        }
        if best.is_none() {
            best = Some(g);
        }
    }
    best.ok_or_else(|| "no candidate small enough for the subset scan".to_string())
}

pub fn verify_hilbert(data: &CaseData, v: &mut CaseVerification) {
    for fo in &data.fixture.orbits {
        if fo.numerator.is_empty() {
            continue;
        }
        let Some(&c) = data.matched.get(&fo.i) else {
            v.push(
                format!("hilbert-{}", fo.i),
                Status::Fail,
                "unmatched orbit".to_string(),
            );
            continue;
        };
        match orbit_geometry(&data.case, &data.orbits, c, false) {
            Err(e) => v.push(format!("hilbert-{}", fo.i), Status::Fail, e),
            Ok(g) => {
                let num_ok = g.hilbert.numerator == fo.numerator;
                let deg_ok = Some(g.hilbert.degree) == fo.degree;
                let conflict = data
                    .fixture
                    .conflicts
                    .iter()
                    .any(|cf| cf.orbit == Some(fo.i) && cf.kind == "degree-prose");
                if num_ok && deg_ok {
                    let status = if conflict { Status::Flagged } else { Status::Pass };
                    let mut detail = format!(
                        "numerator {:?}, degree {}",
                        g.hilbert.numerator, g.hilbert.degree
                    );
                    if conflict {
                        detail.push_str(" — degree conflicts with the prose, see fixture note");
                    }
                    v.push(format!("hilbert-{}", fo.i), status, detail);
                } else {
                    v.push(
                        format!("hilbert-{}", fo.i),
                        Status::Fail,
                        format!(
                            "computed {:?} (deg {}) vs printed {:?} (deg {:?})",
                            g.hilbert.numerator, g.hilbert.degree, fo.numerator, fo.degree
                        ),
                    );
                }
            }
        }
    }
}

/// Present reduced terms in table notation, sorted per homological degree.
pub fn present_terms(case: &Case, terms: &[ComplexTerm]) -> Vec<(i64, Vec<(String, i64, u64)>)> {
    terms
        .iter()
        .map(|t| {
            let mut s: Vec<(String, i64, u64)> = t
                .summands
                .iter()
                .map(|(w, d, c)| (case.present_weight(w, *d), *d, *c))
                .collect();
            s.sort();
            (t.i, s)
        })
        .collect()
}

/// Signed multiset of (weight, degree) over homological parity: the Euler
/// form of a term list, the level at which associated-graded computations
/// are faithful.
fn euler_form(
    terms: &[(i64, Vec<(String, i64, u64)>)],
) -> std::collections::BTreeMap<(String, i64), i64> {
    let mut m = std::collections::BTreeMap::new();
    for (i, summands) in terms {
        let sign = if i.rem_euclid(2) == 0 { 1i64 } else { -1 };
        for (w, d, c) in summands {
            *m.entry((w.clone(), *d)).or_insert(0) += sign * *c as i64;
        }
    }
    m.retain(|_, c| *c != 0);
    m
}

pub fn verify_complexes(data: &CaseData, v: &mut CaseVerification) {
    for fc in &data.fixture.complexes {
        let name = format!("complex-{}", fc.orbit);
        let Some(&c) = data.matched.get(&fc.orbit) else {
            v.push(name, Status::Fail, "unmatched orbit".to_string());
            continue;
        };
        match orbit_geometry(&data.case, &data.orbits, c, true) {
            Err(e) => v.push(name, Status::Fail, e),
            Ok(g) => {
                let got = present_terms(&data.case, &g.reduced);
                // fixture terms: i-th entry is F_i
                let mut want: Vec<(i64, Vec<(String, i64, u64)>)> = fc
                    .terms
                    .iter()
                    .enumerate()
                    .map(|(i, summands)| {
                        let mut m: HashMap<(String, i64), u64> = HashMap::new();
                        for (w, d) in summands {
                            *m.entry((w.clone(), *d)).or_insert(0) += 1;
                        }
                        let mut s: Vec<(String, i64, u64)> =
                            m.into_iter().map(|((w, d), c)| (w, d, c)).collect();
                        s.sort();
                        (i as i64, s)
                    })
                    .collect();
                want.retain(|(_, s)| !s.is_empty());
                if got == want {
                    v.push(
                        name,
                        Status::Pass,
                        format!("{} terms, placement exact", want.len()),
                    );
                } else if euler_form(&got) == euler_form(&want) {
                    // associated-graded cohomology can shift summands within
                    // a parity class; the Euler form is the faithful level
                    v.push(
                        name,
                        Status::Pass,
                        "Euler-characteristic equivalent (placement differs)".to_string(),
                    );
                } else {
                    v.push(
                        name,
                        Status::Fail,
                        format!("computed {:?} vs printed {:?}", got, want),
                    );
                }
            }
        }
    }
}

pub fn verify_disc(data: &CaseData, v: &mut CaseVerification) {
    let Some(df) = &data.fixture.disc else { return };
    let Some(found) = hyperdiscriminant_orbit(&data.case, &data.orbits) else {
        v.push("disc-orbit", Status::Fail, "construction degenerated".to_string());
        return;
    };
    let want = data.matched.get(&df.orbit).copied();
    if Some(found) == want {
        v.push(
            "disc-orbit",
            Status::Pass,
            format!("dual orbit is printed orbit {}", df.orbit),
        );
    } else {
        v.push(
            "disc-orbit",
            Status::Fail,
            format!("computed orbit {found} vs printed {}", df.orbit),
        );
    }
    if let Some(deg) = df.degree {
        match orbit_geometry(&data.case, &data.orbits, found, true) {
            Err(e) => v.push("disc-degree", Status::Fail, e),
            Ok(g) => {
                let coh = Coh::new(&data.case);
                match invariant_degree(&coh, &g.reduced) {
                    Some(d) if d == deg => {
                        v.push("disc-degree", Status::Pass, format!("invariant degree {d}"))
                    }
                    other => v.push(
                        "disc-degree",
                        Status::Fail,
                        format!("computed {:?} vs printed {}", other, deg),
                    ),
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// top-level report

pub struct VerifyOptions {
    pub orbits: bool,
    pub hasse: bool,
    pub hilbert: bool,
    pub complexes: bool,
    pub disc: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            orbits: true,
            hasse: true,
            hilbert: true,
            complexes: true,
            disc: true,
        }
    }
}

pub fn verify_case(id: CaseId, opts: &VerifyOptions) -> Result<CaseVerification, String> {
    let data = load_case_data(id)?;
    let mut v = CaseVerification { id, items: vec![] };
    if opts.orbits {
        verify_orbits(&data, &mut v);
    }
    if opts.hasse {
        verify_hasse(&data, &mut v);
    }
    if opts.hilbert {
        verify_hilbert(&data, &mut v);
    }
    if opts.complexes {
        verify_complexes(&data, &mut v);
    }
    if opts.disc {
        verify_disc(&data, &mut v);
    }
    Ok(v)
}

/// Markdown report over several cases; returns (text, all_pass, any_fail).
pub fn report(cases: &[CaseVerification], strict: bool) -> (String, bool) {
    let mut s = String::new();
    let mut ok = true;
    s.push_str("# verification report\n\n");
    for cv in cases {
        s.push_str(&format!("## {}\n\n", cv.id));
        for item in &cv.items {
            let mark = match item.status {
                Status::Pass => "PASS",
                Status::Flagged => "FLAGGED",
                Status::Fail => "FAIL",
            };
            if item.status == Status::Fail || (strict && item.strict_fails) {
                ok = false;
            }
            s.push_str(&format!("- `{}`: **{}** — {}\n", item.name, mark, item.detail));
        }
        s.push('\n');
    }
    (s, ok)
}
