//! Z-gradings of a simple Lie algebra defined by a marked Dynkin node: the
//! degree of a root is its coefficient at the marked simple root.  Exposes
//! the Levi of degree zero, the weight poset of the degree-one piece and
//! its Borel-stable subsets.

use crate::rootsys::{RootError, RootIdx, RootSystem, SimpleType};
use std::collections::BTreeMap;

pub struct GradedLie {
    pub rs: RootSystem,
    /// marked node, 0-based
    pub node: usize,
    /// unmarked nodes (the Levi part of g_0)
    pub levi_nodes: Vec<usize>,
    /// degree -> root indices
    pub components: BTreeMap<i64, Vec<RootIdx>>,
}

pub fn grade_by_node(stype: SimpleType, node1: usize) -> Result<GradedLie, RootError> {
    if node1 == 0 || node1 > stype.rank {
        return Err(RootError::NodeOutOfRange {
            rank: stype.rank,
            node: node1,
        });
    }
    let rs = RootSystem::new(stype);
    Ok(GradedLie::new(rs, node1 - 1))
}

impl GradedLie {
    pub fn new(rs: RootSystem, node: usize) -> Self {
        assert!(node < rs.rank);
        let mut components: BTreeMap<i64, Vec<RootIdx>> = BTreeMap::new();
        for r in 0..rs.roots.len() {
            components.entry(rs.roots[r][node]).or_default().push(r);
        }
        let levi_nodes: Vec<usize> = (0..rs.rank).filter(|&i| i != node).collect();
        GradedLie {
            rs,
            node,
            levi_nodes,
            components,
        }
    }

    pub fn degree(&self, r: RootIdx) -> i64 {
        self.rs.roots[r][self.node]
    }

    /// dim g_i; degree zero includes the full Cartan.
    pub fn dim_component(&self, i: i64) -> usize {
        let nroots = self.components.get(&i).map(|v| v.len()).unwrap_or(0);
        if i == 0 {
            nroots + self.rs.rank
        } else {
            nroots
        }
    }

    pub fn max_degree(&self) -> i64 {
        *self.components.keys().max().unwrap()
    }

    /// Degree-one roots (all positive), in storage order.
    pub fn deg1(&self) -> &[RootIdx] {
        &self.components[&1]
    }

    /// Degree-zero roots, both signs.
    pub fn levi_roots(&self) -> &[RootIdx] {
        &self.components[&0]
    }

    /// Positive degree-zero roots.
    pub fn levi_pos(&self) -> Vec<RootIdx> {
        self.levi_roots()
            .iter()
            .copied()
            .filter(|&r| self.rs.is_positive(r))
            .collect()
    }

    pub fn dim_g(&self) -> usize {
        self.rs.rank + self.rs.roots.len()
    }

    /// The highest weight of g_1 (unique maximal degree-one root).
    pub fn g1_highest(&self) -> RootIdx {
        let wp = self.weight_poset();
        let maxima: Vec<usize> = (0..wp.n)
            .filter(|&i| (0..wp.n).all(|j| j == i || !wp.less(i, j)))
            .collect();
        assert_eq!(maxima.len(), 1, "g_1 is irreducible in all study cases");
        wp.elements[maxima[0]]
    }

    /// Partial order on g_1 weights: b < b' iff b' - b is a nonempty sum of
    /// positive Levi roots.  Covers are taken along simple Levi roots and
    /// then closed transitively.
    pub fn weight_poset(&self) -> WeightPoset {
        let elements: Vec<RootIdx> = self.deg1().to_vec();
        let n = elements.len();
        let pos: BTreeMap<RootIdx, usize> =
            elements.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut covers = Vec::new();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &r in &elements {
            for &jn in &self.levi_nodes {
                let mut up = self.rs.roots[r].clone();
                up[jn] += 1;
                if let Some(next) = self.rs.root_index(&up) {
                    if self.degree(next) == 1 {
                        covers.push((pos[&r], pos[&next]));
                    }
                }
            }
        }
        covers.sort_unstable();
        covers.dedup();
        for &(a, b) in &covers {
            leq[a * n + b] = true;
        }
        // transitive closure
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        WeightPoset {
            elements,
            n,
            leq,
            covers,
        }
    }
}

pub struct WeightPoset {
    pub elements: Vec<RootIdx>,
    pub n: usize,
    leq: Vec<bool>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, PartialEq, Eq)]
pub enum PosetError {
    TooLarge(usize),
}

impl std::fmt::Display for PosetError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetError::TooLarge(n) => {
                write!(f, "weight poset too large for subset scan: {n} > 32")
            }
        }
    }
}

impl std::error::Error for PosetError {}

impl WeightPoset {
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }
    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn is_up_set(&self, mask: u64) -> bool {
        for a in 0..self.n {
            if mask >> a & 1 == 1 {
                for b in 0..self.n {
                    if self.less(a, b) && mask >> b & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All upward-closed subsets, as bit masks over `elements`.
    pub fn up_sets(&self) -> Result<Vec<u64>, PosetError> {
        if self.n > 32 {
            return Err(PosetError::TooLarge(self.n));
        }
        // grow upward-closed sets by adding one maximal element of the
        // complement at a time
        let mut found = std::collections::HashSet::new();
        let mut queue = vec![0u64];
        found.insert(0u64);
        while let Some(mask) = queue.pop() {
            for a in 0..self.n {
                if mask >> a & 1 == 0 {
                    let ok = (0..self.n).all(|b| !self.less(a, b) || mask >> b & 1 == 1);
                    if ok {
                        let m2 = mask | 1 << a;
                        if found.insert(m2) {
                            queue.push(m2);
                        }
                    }
                }
            }
        }
        let mut v: Vec<u64> = found.into_iter().collect();
        v.sort_unstable();
        Ok(v)
    }
}

pub fn b_stable_subsets(wp: &WeightPoset) -> Result<Vec<u64>, PosetError> {
    wp.up_sets()
}
