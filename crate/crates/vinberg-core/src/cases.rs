//! The ten study cases E6.1-4, F4.1-4, G2.1-2: per-case weight-label
//! dictionaries matching the tables' notation, Levi factor structure, and
//! presentation of dominant Levi weights either as GL weight tuples
//! (a,b;c,d,e;...) or as fundamental coordinates of the Levi type.

use crate::grading::{grade_by_node, GradedLie};
use crate::rootsys::{RootError, RootIdx, SimpleType};
use crate::vinberg::{components, identify_component};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub stype: SimpleType,
    /// marked node, 1-based Bourbaki
    pub node: usize,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.stype, self.node)
    }
}

impl CaseId {
    pub fn parse(s: &str) -> Result<CaseId, RootError> {
        let (ty, node) = s
            .split_once('.')
            .ok_or_else(|| RootError::InvalidType(s.to_string()))?;
        let stype = SimpleType::parse(ty)?;
        let node: usize = node
            .parse()
            .map_err(|_| RootError::InvalidType(s.to_string()))?;
        if node == 0 || node > stype.rank {
            return Err(RootError::NodeOutOfRange {
                rank: stype.rank,
                node,
            });
        }
        Ok(CaseId { stype, node })
    }

    /// The ten study cases, in table order.
    pub fn all() -> Vec<CaseId> {
        let mk = |t: &str, n: usize| CaseId {
            stype: SimpleType::parse(t).unwrap(),
            node: n,
        };
        vec![
            mk("E6", 1),
            mk("E6", 2),
            mk("E6", 3),
            mk("E6", 4),
            mk("F4", 1),
            mk("F4", 2),
            mk("F4", 3),
            mk("F4", 4),
            mk("G2", 1),
            mk("G2", 2),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// tensor products of type-A factors: GL weight tuples "a,b;c,d,e"
    GlTuples,
    /// a single non-A Levi factor: fundamental coordinates "n1,n2,n3"
    FundCoords,
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub ty: SimpleType,
    /// factor nodes (0-based ambient), in the Bourbaki order of `ty`
    pub nodes: Vec<usize>,
    /// for A factors: the chain oriented for the GL presentation
    pub chain: Vec<usize>,
    /// GL basis dimension (rank + 1 for type A)
    pub basis: usize,
    /// |lambda_f| = ratio * internal degree in Sym(g_1^*)
    pub ratio: i64,
}

/// Weight-label scheme of the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelScheme {
    /// E6.1: even subsets of {1..5}, "-" for the empty set
    SpinorSubsets,
    /// index groups per factor separated by ';' ("123", "1;12", "1;1;1")
    FactorIndices,
    /// root coefficient vectors, e.g. "0100"
    RootVector,
}

pub struct Case {
    pub id: CaseId,
    pub gl: GradedLie,
    pub factors: Vec<Factor>,
    pub presentation: Presentation,
    pub scheme: LabelScheme,
    label_of: HashMap<RootIdx, String>,
    root_of: HashMap<String, RootIdx>,
}

impl Case {
    pub fn new(id: CaseId) -> Result<Case, RootError> {
        let gl = grade_by_node(id.stype, id.node)?;
        let rs = &gl.rs;
        // Levi factor structure
        let ln = gl.levi_nodes.clone();
        let comps = components(ln.len(), |i, j| rs.cartan[ln[i]][ln[j]] != 0);
        let mut factors: Vec<Factor> = Vec::new();
        for comp in comps {
            let nodes_raw: Vec<usize> = comp.iter().map(|&i| ln[i]).collect();
            let sub: Vec<Vec<i64>> = nodes_raw
                .iter()
                .map(|&a| nodes_raw.iter().map(|&b| rs.cartan[a][b]).collect())
                .collect();
            let (ty, perm) = identify_component(&sub).expect("Levi factor of known type");
            let nodes: Vec<usize> = perm.iter().map(|&k| nodes_raw[k]).collect();
            factors.push(Factor {
                ty,
                chain: nodes.clone(),
                nodes,
                basis: ty.rank + 1,
                ratio: 0,
            });
        }
        factors.sort_by_key(|f| (f.ty.rank, *f.nodes.iter().min().unwrap()));
        let presentation = if factors
            .iter()
            .all(|f| matches!(f.ty.family, crate::rootsys::Family::A))
        {
            Presentation::GlTuples
        } else {
            Presentation::FundCoords
        };
        let scheme = match (id.stype.family, id.node) {
            (crate::rootsys::Family::E, 1) | (crate::rootsys::Family::E, 6) => {
                LabelScheme::SpinorSubsets
            }
            (crate::rootsys::Family::E, _) => LabelScheme::FactorIndices,
            (crate::rootsys::Family::F, 3) => LabelScheme::FactorIndices,
            _ => LabelScheme::RootVector,
        };
        let mut case = Case {
            id,
            gl,
            factors,
            presentation,
            scheme,
            label_of: HashMap::new(),
            root_of: HashMap::new(),
        };
        case.calibrate();
        case.build_labels();
        Ok(case)
    }

    /// Orient type-A chains and spinor forks, and fix the degree ratios.
    fn calibrate(&mut self) {
        let hw = self.gl.g1_highest();
        let wt = self.gl.rs.root_wt[hw].clone();
        // lowest degree-one weight: its negative is the highest weight of
        // the degree-one part of Sym(g_1^*) and anchors the dual-side
        // normalization of the GL presentation
        let wp = self.gl.weight_poset();
        let low = (0..wp.n)
            .find(|&i| (0..wp.n).all(|j| j == i || !wp.less(j, i)))
            .map(|i| wp.elements[i])
            .expect("unique minimal weight");
        let nu1: Vec<i64> = self.gl.rs.root_wt[low].iter().map(|x| -x).collect();
        let mut factors = std::mem::take(&mut self.factors);
        for f in &mut factors {
            match f.ty.family {
                crate::rootsys::Family::A => {
                    let p: Vec<i64> = f.chain.iter().map(|&n| wt[n]).collect();
                    let mut rev = p.clone();
                    rev.reverse();
                    if rev > p {
                        f.chain.reverse();
                    }
                    // degree ratio from the highest weight, by partial sums
                    let p: Vec<i64> = f.chain.iter().map(|&n| wt[n]).collect();
                    let m = f.basis;
                    let mut t = vec![0i64; m];
                    for j in (0..m - 1).rev() {
                        t[j] = t[j + 1] + p[j];
                    }
                    let min = *t.iter().min().unwrap();
                    f.ratio = t.iter().map(|x| x - min).sum();
                    // orient so that the generator weight nu1 solves in
                    // degree one; flipping the chain toggles the side
                    let consistent = |chain: &[usize]| -> bool {
                        let p: Vec<i64> = chain.iter().map(|&n| nu1[n]).collect();
                        let mut t = vec![0i64; m];
                        for j in (0..m - 1).rev() {
                            t[j] = t[j + 1] + p[j];
                        }
                        let total: i64 = t.iter().sum();
                        (-f.ratio - total).rem_euclid(m as i64) == 0
                    };
                    if !consistent(&f.chain) {
                        f.chain.reverse();
                    }
                    assert!(consistent(&f.chain), "no consistent chain orientation");
                }
                crate::rootsys::Family::D => {
                    // spinor labels: choose the fork assignment for which all
                    // degree-one roots give even negative-coordinate subsets
                    if !spinor_subsets_even(&self.gl, &f.nodes) {
                        let r = f.nodes.len();
                        f.nodes.swap(r - 2, r - 1);
                        f.chain = f.nodes.clone();
                    }
                    assert!(spinor_subsets_even(&self.gl, &f.nodes));
                    f.ratio = 1;
                }
                _ => {
                    f.ratio = 1;
                }
            }
        }
        self.factors = factors;
    }

    fn spinor_eps(&self, nodes: &[usize], r: RootIdx) -> Vec<i64> {
        spinor_eps(&self.gl, nodes, r)
    }

    fn build_labels(&mut self) {
        let deg1: Vec<RootIdx> = self.gl.deg1().to_vec();
        for &r in &deg1 {
            let label = match self.scheme {
                LabelScheme::RootVector => self
                    .gl
                    .rs
                    .roots[r]
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(""),
                LabelScheme::SpinorSubsets => {
                    let f = &self.factors[0];
                    let x2 = self.spinor_eps(&f.nodes, r);
                    let subset: Vec<String> = x2
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v < 0)
                        .map(|(i, _)| (i + 1).to_string())
                        .collect();
                    if subset.is_empty() {
                        "-".to_string()
                    } else {
                        subset.join("")
                    }
                }
                LabelScheme::FactorIndices => {
                    let mut parts = Vec::new();
                    for f in &self.factors {
                        let idx = self.factor_indices(f, r);
                        parts.push(idx.iter().map(|i| i.to_string()).collect::<String>());
                    }
                    parts.join(";")
                }
            };
            self.label_of.insert(r, label.clone());
            let prev = self.root_of.insert(label.clone(), r);
            assert!(prev.is_none(), "duplicate label {label}");
        }
    }

    /// Basis indices (1-based, with multiplicity) of a degree-one root in
    /// one type-A factor.
    fn factor_indices(&self, f: &Factor, r: RootIdx) -> Vec<usize> {
        let wt = &self.gl.rs.root_wt[r];
        let p: Vec<i64> = f.chain.iter().map(|&n| wt[n]).collect();
        let m = f.basis;
        let mut t = vec![0i64; m];
        for j in (0..m - 1).rev() {
            t[j] = t[j + 1] + p[j];
        }
        let total: i64 = t.iter().sum();
        let c = (f.ratio - total) / m as i64;
        assert_eq!(c * m as i64, f.ratio - total, "non-integral label decode");
        let chi: Vec<i64> = t.iter().map(|x| x + c).collect();
        assert!(chi.iter().all(|&v| v >= 0));
        let mut idx = Vec::new();
        for (j, &v) in chi.iter().enumerate() {
            for _ in 0..v {
                idx.push(j + 1);
            }
        }
        idx
    }

    pub fn label(&self, r: RootIdx) -> &str {
        &self.label_of[&r]
    }

    pub fn root_by_label(&self, label: &str) -> Option<RootIdx> {
        if let Some(&r) = self.root_of.get(label) {
            return Some(r);
        }
        // root coefficient vectors may be written [0,1,2,1]
        None
    }

    pub fn levi_pos(&self) -> Vec<RootIdx> {
        self.gl.levi_pos()
    }

    /// Present a dominant Levi weight appearing in internal degree k of
    /// Sym(g_1^*), in the notation of the tables.  Returns None when the
    /// weight does not lie in the degree-k lattice coset (associated-graded
    /// ghost contributions that only cancel at the Euler level).
    pub fn try_present_weight(&self, wt: &[i64], k: i64) -> Option<String> {
        match self.presentation {
            Presentation::FundCoords => Some(
                self.factors[0]
                    .nodes
                    .iter()
                    .map(|&n| wt[n].to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            Presentation::GlTuples => {
                let mut parts = Vec::new();
                for f in &self.factors {
                    let p: Vec<i64> = f.chain.iter().map(|&n| wt[n]).collect();
                    let m = f.basis;
                    let mut t = vec![0i64; m];
                    for j in (0..m - 1).rev() {
                        t[j] = t[j + 1] + p[j];
                    }
                    let total: i64 = t.iter().sum();
                    let target = -f.ratio * k;
                    if (target - total).rem_euclid(m as i64) != 0 {
                        return None;
                    }
                    let c = (target - total) / m as i64;
                    let x: Vec<i64> = t.iter().map(|v| v + c).collect();
                    let tuple: Vec<i64> = x.iter().rev().map(|&v| -v).collect();
                    assert!(tuple.windows(2).all(|w| w[0] >= w[1]));
                    parts.push(
                        tuple
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    );
                }
                Some(parts.join(";"))
            }
        }
    }

    /// As `try_present_weight`, with ghost weights rendered as raw
    /// fundamental coordinates prefixed by '!'.
    pub fn present_weight(&self, wt: &[i64], k: i64) -> String {
        self.try_present_weight(wt, k).unwrap_or_else(|| {
            format!(
                "!{}",
                wt.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            )
        })
    }

    /// Dimension of the Levi irreducible with this highest weight.
    pub fn weight_dim(&self, wt: &[i64]) -> num_bigint::BigInt {
        crate::schur::weyl_dim_levi(&self.gl.rs, &self.levi_pos(), &self.gl.levi_nodes, wt)
            .expect("dominant weight")
    }

    /// Grading dimensions as JSON.
    pub fn grading_json(&self) -> serde_json::Value {
        let mut dims = serde_json::Map::new();
        for &i in self.gl.components.keys() {
            if i >= 0 {
                dims.insert(i.to_string(), serde_json::json!(self.gl.dim_component(i)));
            }
        }
        serde_json::json!({
            "case": self.id.to_string(),
            "dim_g": self.gl.dim_g(),
            "dims": dims,
            "levi_factors": self.factors.iter().map(|f| f.ty.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Epsilon coordinates (times 2) of a root along a D-type factor, from
/// fundamental pairings with the chain ending in the fork.
fn spinor_eps(gl: &GradedLie, nodes: &[usize], r: RootIdx) -> Vec<i64> {
    let wt = &gl.rs.root_wt[r];
    let p: Vec<i64> = nodes.iter().map(|&n| wt[n]).collect();
    let m = p.len();
    let mut x2 = vec![0i64; m];
    x2[m - 1] = p[m - 1] - p[m - 2];
    x2[m - 2] = p[m - 1] + p[m - 2];
    for j in (0..m - 2).rev() {
        x2[j] = x2[j + 1] + 2 * p[j];
    }
    x2
}

fn spinor_subsets_even(gl: &GradedLie, nodes: &[usize]) -> bool {
    gl.deg1().iter().all(|&r| {
        let x2 = spinor_eps(gl, nodes, r);
        if !x2.iter().all(|&v| v == 1 || v == -1) {
            return false;
        }
        x2.iter().filter(|&&v| v < 0).count() % 2 == 0
    })
}
