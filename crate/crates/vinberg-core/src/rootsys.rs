//! Root systems of the finite crystallographic types with exact arithmetic:
//! roots as integer vectors over the simple-root basis (Bourbaki numbering),
//! the Weyl-invariant bilinear form normalized so long roots have squared
//! length 2, Weyl group actions, and a Chevalley structure-constant table
//! N_{a,b} fixed by the extraspecial-pair sign convention.

use crate::linalg::{rat, Rat};
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    InvalidType(String),
    NodeOutOfRange { rank: usize, node: usize },
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::InvalidType(s) => write!(f, "invalid Dynkin type: {s}"),
            RootError::NodeOutOfRange { rank, node } => {
                write!(f, "node {node} out of range for rank {rank}")
            }
        }
    }
}

impl std::error::Error for RootError {}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootError::InvalidType(format!("{family}{rank}")))
        }
    }

    pub fn parse(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('B') | Some('b') => Family::B,
            Some('C') | Some('c') => Family::C,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            Some('F') | Some('f') => Family::F,
            Some('G') | Some('g') => Family::G,
            _ => return Err(RootError::InvalidType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootError::InvalidType(s.to_string()))?;
        SimpleType::new(fam, rank)
    }

    /// Bourbaki Cartan matrix; entry [i][j] is the pairing of alpha_i with
    /// the coroot of alpha_j.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    chain(&mut c, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    chain(&mut c, i, i + 1);
                }
                // alpha_{n-1} long, alpha_n short
                c[n - 2][n - 1] = -2;
            }
            Family::C => {
                for i in 0..n - 1 {
                    chain(&mut c, i, i + 1);
                }
                // alpha_{n-1} short, alpha_n long
                c[n - 1][n - 2] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                chain(&mut c, n - 3, n - 1);
            }
            Family::E => {
                // nodes 1-3-4-5-6(-7-8) in a chain, node 2 attached to node 4
                chain(&mut c, 0, 2);
                chain(&mut c, 2, 3);
                chain(&mut c, 3, 4);
                chain(&mut c, 4, 5);
                if n >= 7 {
                    chain(&mut c, 5, 6);
                }
                if n >= 8 {
                    chain(&mut c, 6, 7);
                }
                chain(&mut c, 1, 3);
            }
            Family::F => {
                chain(&mut c, 0, 1);
                chain(&mut c, 1, 2);
                chain(&mut c, 2, 3);
                // alpha_2 long, alpha_3 short (1-indexed 2,3)
                c[1][2] = -2;
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }

    /// Half squared lengths d_i = (alpha_i, alpha_i)/2, long roots normalized
    /// to squared length 2.
    pub fn half_lengths(&self) -> Vec<Rational64> {
        let n = self.rank;
        let one = Rational64::one();
        let half = Rational64::new(1, 2);
        match self.family {
            Family::A | Family::D | Family::E => vec![one; n],
            Family::B => {
                let mut d = vec![one; n];
                d[n - 1] = half;
                d
            }
            Family::C => {
                let mut d = vec![half; n];
                d[n - 1] = one;
                d
            }
            Family::F => vec![one, one, half, half],
            Family::G => vec![Rational64::new(1, 3), one],
        }
    }

    pub fn dim(&self) -> usize {
        // rank + number of roots
        let n = self.rank;
        let nroots = match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        };
        n + nroots
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root index into `RootSystem::roots`.  Positives come first in height
/// order; the negative of root r is `r ± n_pos`.
pub type RootIdx = usize;

pub struct RootSystem {
    pub stype: SimpleType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// d[i] = (alpha_i, alpha_i)/2
    pub d: Vec<Rational64>,
    /// form[i][j] = (alpha_i, alpha_j)
    pub form: Vec<Vec<Rational64>>,
    /// all roots; positives first, then negatives in the same order
    pub roots: Vec<Vec<i64>>,
    pub n_pos: usize,
    index: HashMap<Vec<i64>, RootIdx>,
    /// fundamental-weight coordinates of each root
    pub root_wt: Vec<Vec<i64>>,
    /// squared length of each root
    pub norm2: Vec<Rational64>,
    pub heights: Vec<i64>,
    /// permutation action of the simple reflections on root indices
    pub simple_perm: Vec<Vec<RootIdx>>,
    /// Chevalley constants N_{a,b} for all root pairs with a+b a root
    ntable: HashMap<(RootIdx, RootIdx), i64>,
}

pub fn build_root_system(stype: SimpleType) -> RootSystem {
    RootSystem::new(stype)
}

impl RootSystem {
    pub fn new(stype: SimpleType) -> Self {
        let rank = stype.rank;
        let cartan = stype.cartan();
        let d = stype.half_lengths();
        let mut form = vec![vec![Rational64::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                form[i][j] = d[j] * Rational64::from_integer(cartan[i][j]);
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                debug_assert_eq!(form[i][j], form[j][i]);
            }
        }

        // positive roots by closure of root strings, level by level in height
        let mut positives: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone());
            positives.push(v);
        }
        let mut level_start = 0;
        loop {
            let level_end = positives.len();
            if level_start == level_end {
                break;
            }
            for bi in level_start..level_end {
                let beta = positives[bi].clone();
                for i in 0..rank {
                    // p = how far the string continues downward from beta
                    let mut p = 0i64;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= p + 1;
                        let neg: Vec<i64> = down.iter().map(|x| -x).collect();
                        if seen.contains(&down) || seen.contains(&neg) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..rank).map(|k| beta[k] * cartan[k][i]).sum();
                    let q = p - pairing;
                    if q >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            positives.push(up);
                        }
                    }
                }
            }
            level_start = level_end;
        }
        positives.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));

        let n_pos = positives.len();
        let mut roots = positives;
        for i in 0..n_pos {
            let neg: Vec<i64> = roots[i].iter().map(|x| -x).collect();
            roots.push(neg);
        }
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.clone(), i);
        }

        let root_wt: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .map(|j| (0..rank).map(|i| r[i] * cartan[i][j]).sum())
                    .collect()
            })
            .collect();
        let norm2: Vec<Rational64> = roots
            .iter()
            .map(|r| {
                let mut s = Rational64::zero();
                for i in 0..rank {
                    for j in 0..rank {
                        s += form[i][j] * Rational64::from_integer(r[i] * r[j]);
                    }
                }
                s
            })
            .collect();
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();

        let mut simple_perm = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut perm = Vec::with_capacity(roots.len());
            for r in 0..roots.len() {
                let mut img = roots[r].clone();
                let pairing = root_wt[r][j];
                img[j] -= pairing;
                perm.push(index[&img]);
            }
            simple_perm.push(perm);
        }

        let mut rs = RootSystem {
            stype,
            rank,
            cartan,
            d,
            form,
            roots,
            n_pos,
            index,
            root_wt,
            norm2,
            heights,
            simple_perm,
            ntable: HashMap::new(),
        };
        rs.ntable = rs.build_ntable();
        rs
    }

    pub fn neg(&self, r: RootIdx) -> RootIdx {
        if r < self.n_pos {
            r + self.n_pos
        } else {
            r - self.n_pos
        }
    }

    pub fn is_positive(&self, r: RootIdx) -> bool {
        r < self.n_pos
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<RootIdx> {
        self.index.get(coeffs).copied()
    }

    pub fn sum_index(&self, a: RootIdx, b: RootIdx) -> Option<RootIdx> {
        let v: Vec<i64> = (0..self.rank)
            .map(|i| self.roots[a][i] + self.roots[b][i])
            .collect();
        self.index.get(&v).copied()
    }

    pub fn diff_is_root(&self, a: RootIdx, b: RootIdx) -> bool {
        let v: Vec<i64> = (0..self.rank)
            .map(|i| self.roots[a][i] - self.roots[b][i])
            .collect();
        self.index.contains_key(&v)
    }

    /// Invariant bilinear form on two roots.
    pub fn inner(&self, a: RootIdx, b: RootIdx) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank {
            if self.roots[a][i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if self.roots[b][j] != 0 {
                    s += self.form[i][j]
                        * Rational64::from_integer(self.roots[a][i] * self.roots[b][j]);
                }
            }
        }
        s
    }

    /// Cartan pairing of root a with the coroot of root b.
    pub fn pairing(&self, a: RootIdx, b: RootIdx) -> i64 {
        let v = self.inner(a, b) * Rational64::from_integer(2) / self.norm2[b];
        assert!(v.is_integer());
        v.to_integer()
    }

    /// Pairing of a weight in fundamental coordinates with the coroot of
    /// root r; exact, asserts integrality.
    pub fn weight_pairing(&self, wt: &[i64], r: RootIdx) -> i64 {
        let db = self.norm2[r] / Rational64::from_integer(2);
        let mut s = Rational64::zero();
        for i in 0..self.rank {
            if self.roots[r][i] != 0 {
                s += Rational64::from_integer(self.roots[r][i] * wt[i]) * self.d[i];
            }
        }
        let v = s / db;
        assert!(v.is_integer(), "non-integral coroot pairing");
        v.to_integer()
    }

    /// s_r(wt) for wt in fundamental coordinates.
    pub fn reflect_weight(&self, r: RootIdx, wt: &[i64]) -> Vec<i64> {
        let k = self.weight_pairing(wt, r);
        (0..self.rank)
            .map(|j| wt[j] - k * self.root_wt[r][j])
            .collect()
    }

    /// Orbit of a weight (fundamental coordinates) under the full Weyl group.
    pub fn weyl_orbit(&self, wt: &[i64]) -> Vec<Vec<i64>> {
        self.weyl_orbit_levi(wt, &(0..self.rank).collect::<Vec<_>>())
    }

    /// Orbit under the parabolic Weyl subgroup generated by the given nodes.
    pub fn weyl_orbit_levi(&self, wt: &[i64], nodes: &[usize]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(wt.to_vec());
        queue.push_back(wt.to_vec());
        while let Some(v) = queue.pop_front() {
            for &j in nodes {
                let mut img = v.clone();
                let k = img[j];
                for t in 0..self.rank {
                    img[t] -= k * self.cartan[j][t];
                }
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Chevalley constant N_{a,b}; zero when a+b is not a root.
    pub fn n_const(&self, a: RootIdx, b: RootIdx) -> i64 {
        self.ntable.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Largest k >= 0 with b - k a a root.
    pub fn string_down(&self, a: RootIdx, b: RootIdx) -> i64 {
        let mut p = 0i64;
        loop {
            let v: Vec<i64> = (0..self.rank)
                .map(|i| self.roots[b][i] - (p + 1) * self.roots[a][i])
                .collect();
            if self.index.contains_key(&v) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn build_ntable(&self) -> HashMap<(RootIdx, RootIdx), i64> {
        // total order on positive roots: height then lex (the storage order)
        let pos_rank: Vec<usize> = (0..self.n_pos).collect();
        // extraspecial pair for each non-simple positive root
        let mut xsp: HashMap<RootIdx, (RootIdx, RootIdx)> = HashMap::new();
        for &g in &pos_rank {
            if self.heights[g] < 2 {
                continue;
            }
            for e in 0..self.n_pos {
                let z: Vec<i64> = (0..self.rank)
                    .map(|i| self.roots[g][i] - self.roots[e][i])
                    .collect();
                if let Some(&zi) = self.index.get(&z) {
                    if zi < self.n_pos {
                        xsp.insert(g, (e, zi));
                        break;
                    }
                }
            }
        }

        struct Ctx<'a> {
            rs: &'a RootSystem,
            xsp: HashMap<RootIdx, (RootIdx, RootIdx)>,
            memo: HashMap<(RootIdx, RootIdx), i64>,
        }
        impl Ctx<'_> {
            fn norm2(&self, coeffs: &[i64]) -> Rational64 {
                let idx = self.rs.index[coeffs];
                self.rs.norm2[idx]
            }
            fn n(&mut self, a: RootIdx, b: RootIdx) -> i64 {
                if let Some(&v) = self.memo.get(&(a, b)) {
                    return v;
                }
                let rs = self.rs;
                let g: Vec<i64> = (0..rs.rank)
                    .map(|i| rs.roots[a][i] + rs.roots[b][i])
                    .collect();
                let gi = rs.index[&g];
                let v = match (rs.is_positive(a), rs.is_positive(b)) {
                    (true, true) => {
                        let (e, z) = self.xsp[&gi];
                        if (a, b) == (e, z) {
                            rs.string_down(e, z) + 1
                        } else if (b, a) == (e, z) {
                            -self.n(b, a)
                        } else {
                            // four-term Jacobi identity on (e, z, -a, -b)
                            let na = rs.neg(a);
                            let nb = rs.neg(b);
                            let mut acc = Rational64::zero();
                            let za: Vec<i64> = (0..rs.rank)
                                .map(|i| rs.roots[z][i] - rs.roots[a][i])
                                .collect();
                            if rs.index.contains_key(&za) {
                                let t = self.n(z, na) * self.n(e, nb);
                                acc += Rational64::from_integer(t) / self.norm2(&za);
                            }
                            let ea: Vec<i64> = (0..rs.rank)
                                .map(|i| rs.roots[e][i] - rs.roots[a][i])
                                .collect();
                            if rs.index.contains_key(&ea) {
                                let t = self.n(na, e) * self.n(z, nb);
                                acc += Rational64::from_integer(t) / self.norm2(&ea);
                            }
                            let nez = self.n(e, z);
                            let val = rs.norm2[gi] * acc / Rational64::from_integer(nez);
                            assert!(val.is_integer(), "non-integral structure constant");
                            val.to_integer()
                        }
                    }
                    (false, false) => -self.n(rs.neg(a), rs.neg(b)),
                    (true, false) => {
                        let bp = rs.neg(b);
                        if rs.is_positive(gi) {
                            // a = g + b'
                            let v = rs.norm2[gi] / rs.norm2[a]
                                * Rational64::from_integer(self.n(gi, bp));
                            assert!(v.is_integer());
                            v.to_integer()
                        } else {
                            let dp = rs.neg(gi); // b' - a, positive
                            let v = rs.norm2[dp] / rs.norm2[bp]
                                * Rational64::from_integer(self.n(dp, a));
                            assert!(v.is_integer());
                            v.to_integer()
                        }
                    }
                    (false, true) => -self.n(b, a),
                };
                self.memo.insert((a, b), v);
                v
            }
        }

        let mut ctx = Ctx {
            rs: self,
            xsp,
            memo: HashMap::new(),
        };
        let total = 2 * self.n_pos;
        let mut table = HashMap::new();
        for a in 0..total {
            for b in 0..total {
                if a == self.neg(b) {
                    continue;
                }
                let s: Vec<i64> = (0..self.rank)
                    .map(|i| self.roots[a][i] + self.roots[b][i])
                    .collect();
                if self.index.contains_key(&s) {
                    table.insert((a, b), ctx.n(a, b));
                }
            }
        }
        table
    }

    /// Coroot of root r expressed in the coroot basis (alpha_i^vee).
    pub fn coroot_coords(&self, r: RootIdx) -> Vec<Rational64> {
        let da = self.norm2[r] / Rational64::from_integer(2);
        (0..self.rank)
            .map(|i| Rational64::from_integer(self.roots[r][i]) * self.d[i] / da)
            .collect()
    }

    /// All root indices supported on the given node set.
    pub fn roots_on_nodes(&self, nodes: &[usize]) -> Vec<RootIdx> {
        let node_set: HashSet<usize> = nodes.iter().copied().collect();
        (0..self.roots.len())
            .filter(|&r| {
                self.roots[r]
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || node_set.contains(&i))
            })
            .collect()
    }
}

/// A sparse element of the Lie algebra: Cartan part in coroot coordinates
/// plus root-vector coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AlgElt {
    pub h: Vec<Rat>,
    pub e: BTreeMap<RootIdx, Rat>,
}

impl AlgElt {
    pub fn zero(rank: usize) -> Self {
        AlgElt {
            h: vec![Rat::zero(); rank],
            e: BTreeMap::new(),
        }
    }

    pub fn root_vector(rank: usize, r: RootIdx) -> Self {
        let mut e = BTreeMap::new();
        e.insert(r, Rat::one());
        AlgElt {
            h: vec![Rat::zero(); rank],
            e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|x| x.is_zero()) && self.e.values().all(|x| x.is_zero())
    }

    pub fn add_scaled(&mut self, other: &AlgElt, c: &Rat) {
        for i in 0..self.h.len() {
            let delta = other.h[i].clone() * c.clone();
            self.h[i] += delta;
        }
        for (&r, v) in &other.e {
            let entry = self.e.entry(r).or_insert_with(Rat::zero);
            *entry += v.clone() * c.clone();
        }
        self.e.retain(|_, v| !v.is_zero());
    }
}

/// Lie bracket of two sparse elements over the Chevalley basis.
pub fn bracket(rs: &RootSystem, x: &AlgElt, y: &AlgElt) -> AlgElt {
    let mut out = AlgElt::zero(rs.rank);
    // [h, e_b]
    for (&b, cb) in &y.e {
        let mut scal = Rat::zero();
        for i in 0..rs.rank {
            if !x.h[i].is_zero() {
                scal += x.h[i].clone() * rat(rs.root_wt[b][i]);
            }
        }
        if !scal.is_zero() {
            let entry = out.e.entry(b).or_insert_with(Rat::zero);
            *entry += scal * cb.clone();
        }
    }
    // [e_a, h] = -[h, e_a]
    for (&a, ca) in &x.e {
        let mut scal = Rat::zero();
        for i in 0..rs.rank {
            if !y.h[i].is_zero() {
                scal += y.h[i].clone() * rat(rs.root_wt[a][i]);
            }
        }
        if !scal.is_zero() {
            let entry = out.e.entry(a).or_insert_with(Rat::zero);
            *entry -= scal * ca.clone();
        }
    }
    // [e_a, e_b]
    for (&a, ca) in &x.e {
        for (&b, cb) in &y.e {
            let c = ca.clone() * cb.clone();
            if c.is_zero() {
                continue;
            }
            if b == rs.neg(a) {
                // [e_a, e_{-a}] = coroot of a
                let co = rs.coroot_coords(a);
                for i in 0..rs.rank {
                    let delta =
                        c.clone() * Rat::new(co[i].numer().to_owned().into(), co[i].denom().to_owned().into());
                    out.h[i] += delta;
                }
            } else if let Some(s) = rs.sum_index(a, b) {
                let n = rs.n_const(a, b);
                if n != 0 {
                    let entry = out.e.entry(s).or_insert_with(Rat::zero);
                    *entry += c * rat(n);
                }
            }
        }
    }
    out.e.retain(|_, v| !v.is_zero());
    out
}
