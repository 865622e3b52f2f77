//! Vogan diagrams and the classification of real forms.
//!
//! A Vogan diagram is a Dynkin diagram with an order-two diagram involution
//! and a set of painted (noncompact) nodes among the involution-fixed ones.
//! `normalize_painting` reduces any painting with trivial involution to an
//! equivalent one with at most one painted node, following the
//! Borel-de Siebenthal argument: take the parity-constrained coweight coset
//! determined by the painting, pick its minimal-norm vectors, make them
//! dominant by Weyl folding, and read off the new painting. A breadth-first
//! move oracle over repaintings is provided for tests and is never used on
//! the primary path.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::diagram::DynkinDiagram;
use crate::matrix::Matrix;
use crate::rootsys::{Family, RootSystem, RootSystemType};
use crate::{rational_from_i64, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoganError {
    #[error("painted node {node} is not fixed by the involution")]
    PaintedNotFixed { node: usize },
    #[error("the node map is not a diagram involution")]
    NotAutomorphism,
    #[error("painting has {count} nodes; classify requires a normalized painting (at most 1)")]
    UnnormalizedPainting { count: usize },
    #[error("node index {index} out of range 0..{rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("node {node} has highest-root coefficient {label}, expected 1 or 2")]
    NodeLabelTooLarge { node: usize, label: i64 },
}

/// Entry of a classification table that the source material may leave open.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableEntry<T> {
    Value(T),
    Unknown,
}

impl<T> TableEntry<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            TableEntry::Value(v) => Some(v),
            TableEntry::Unknown => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for TableEntry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableEntry::Value(v) => write!(f, "{v}"),
            TableEntry::Unknown => write!(f, "?"),
        }
    }
}

/// Dynkin diagram + involution + painted node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganDiagram {
    rs_type: RootSystemType,
    involution: Vec<usize>,
    painted: BTreeSet<usize>,
}

impl VoganDiagram {
    pub fn new(
        rs: &RootSystem,
        involution: Vec<usize>,
        painted: BTreeSet<usize>,
    ) -> Result<VoganDiagram, VoganError> {
        validate(rs, &involution, &painted)?;
        Ok(VoganDiagram { rs_type: rs.rs_type(), involution, painted })
    }

    pub fn trivial(rs: &RootSystem, painted: BTreeSet<usize>) -> Result<VoganDiagram, VoganError> {
        VoganDiagram::new(rs, (0..rs.rank()).collect(), painted)
    }

    pub fn rs_type(&self) -> RootSystemType {
        self.rs_type
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn painted(&self) -> &BTreeSet<usize> {
        &self.painted
    }

    pub fn involution_is_trivial(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_nodes(&self) -> Vec<usize> {
        self.involution.iter().enumerate().filter(|&(i, &j)| i == j).map(|(i, _)| i).collect()
    }
}

/// Checks the two structural invariants: the node map is an order-two
/// diagram automorphism, and every painted node is fixed by it.
pub fn validate(
    rs: &RootSystem,
    involution: &[usize],
    painted: &BTreeSet<usize>,
) -> Result<(), VoganError> {
    let n = rs.rank();
    if involution.len() != n || !is_permutation(involution) {
        return Err(VoganError::NotAutomorphism);
    }
    for i in 0..n {
        if involution[involution[i]] != i {
            return Err(VoganError::NotAutomorphism);
        }
        for j in 0..n {
            if rs.cartan_entry(involution[i], involution[j]) != rs.cartan_entry(i, j) {
                return Err(VoganError::NotAutomorphism);
            }
        }
    }
    for &p in painted {
        if p >= n {
            return Err(VoganError::NodeOutOfRange { index: p, rank: n });
        }
        if involution[p] != p {
            return Err(VoganError::PaintedNotFixed { node: p });
        }
    }
    Ok(())
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// All order-at-most-2 diagram automorphisms, identity first, by brute
/// force over node permutations (rank <= 8 keeps this trivial). Order-3
/// automorphisms of D4 are excluded by construction.
pub fn diagram_involutions(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank();
    let mut result = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |candidate| {
        if validate(rs, candidate, &BTreeSet::new()).is_ok() {
            result.push(candidate.to_vec());
        }
    });
    result.sort();
    // identity sorts first since it is lexicographically minimal
    debug_assert!(result[0].iter().enumerate().all(|(i, &j)| i == j));
    result
}

fn permute_all(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Gram matrix of the fundamental coweights: `D^-1 A^-T`.
pub fn coweight_gram(rs: &RootSystem) -> Matrix<Rational> {
    let a = rs.cartan().map(|&x| rational_from_i64(x));
    let a_inv = a.inverse().expect("square").expect("Cartan matrices are invertible");
    Matrix::from_fn(rs.rank(), rs.rank(), |i, j| {
        a_inv[(j, i)].clone() / rational_from_i64(rs.symmetrizer()[i])
    })
}

/// Minimal-norm integer vectors with prescribed coordinate parities, under a
/// positive definite rational form. Exact Fincke-Pohst enumeration on the
/// LDL decomposition, with the bound shrunk as better vectors appear.
fn minimal_parity_vectors(gram: &Matrix<Rational>, parity: &[bool]) -> Vec<Vec<i64>> {
    let n = parity.len();

    // LDL: q(c) = sum_i d[i] * (c_i + sum_{j>i} l[i][j] c_j)^2
    let mut q = gram.clone();
    for i in 0..n {
        for j in i + 1..n {
            let lij = q[(i, j)].clone() / q[(i, i)].clone();
            q[(j, i)] = lij;
        }
        for k in i + 1..n {
            for l in k..n {
                let sub = q[(k, i)].clone() * q[(i, l)].clone();
                q[(k, l)] = q[(k, l)].clone() - sub;
            }
        }
    }
    let d: Vec<Rational> = (0..n).map(|i| q[(i, i)].clone()).collect();
    let l = |i: usize, j: usize| q[(j, i)].clone(); // l[i][j] for j > i

    let value = |c: &[i64]| -> Rational {
        let mut acc = Rational::zero();
        for i in 0..n {
            let mut inner = rational_from_i64(c[i]);
            for j in i + 1..n {
                inner += l(i, j) * rational_from_i64(c[j]);
            }
            acc += d[i].clone() * inner.clone() * inner;
        }
        acc
    };

    // initial bound: best sign pattern of the painted indicator
    let painted: Vec<usize> =
        (0..n).filter(|&j| parity[j]).collect();
    let mut bound: Option<Rational> = None;
    for mask in 0u32..(1 << painted.len()) {
        let mut c = vec![0i64; n];
        for (bit, &j) in painted.iter().enumerate() {
            c[j] = if mask & (1 << bit) != 0 { -1 } else { 1 };
        }
        let v = value(&c);
        if bound.as_ref().map_or(true, |b| v < *b) {
            bound = Some(v);
        }
    }
    let mut bound = bound.expect("at least one candidate");

    let mut best: Vec<Vec<i64>> = Vec::new();
    let mut best_value: Option<Rational> = None;
    let mut c = vec![0i64; n];

    // depth-first from the last coordinate; acc carries the value of the
    // levels below i
    fn descend(
        i: isize,
        acc: Rational,
        c: &mut Vec<i64>,
        n: usize,
        d: &[Rational],
        l: &dyn Fn(usize, usize) -> Rational,
        parity: &[bool],
        bound: &mut Rational,
        best: &mut Vec<Vec<i64>>,
        best_value: &mut Option<Rational>,
    ) {
        if i < 0 {
            match best_value {
                Some(v) if acc == *v => best.push(c.clone()),
                Some(v) if acc < *v => {
                    *best_value = Some(acc.clone());
                    *bound = acc;
                    best.clear();
                    best.push(c.clone());
                }
                None => {
                    *best_value = Some(acc.clone());
                    *bound = acc;
                    best.push(c.clone());
                }
                _ => {}
            }
            return;
        }
        let iu = i as usize;
        let mut s = Rational::zero();
        for j in iu + 1..n {
            s += l(iu, j) * rational_from_i64(c[j]);
        }
        // nearest integer of the required parity to -s
        let target = -s.clone();
        let floor = target.floor().to_integer();
        let fl: i64 = i64::try_from(&floor).expect("small coordinates");
        let want_odd = parity[iu];
        let mut center = fl;
        if (center.rem_euclid(2) == 1) != want_odd {
            center += 1;
        }
        // center or center-2 is nearest of that parity; scan outward
        for start in [center, center - 2] {
            let dir: i64 = if start == center { 2 } else { -2 };
            let mut t = start;
            loop {
                let inner = rational_from_i64(t) + s.clone();
                let term = d[iu].clone() * inner.clone() * inner;
                let total = acc.clone() + term;
                if total > *bound {
                    break;
                }
                c[iu] = t;
                descend(i - 1, total, c, n, d, l, parity, bound, best, best_value);
                t += dir;
            }
        }
        c[iu] = 0;
    }

    descend(
        n as isize - 1,
        Rational::zero(),
        &mut c,
        n,
        &d,
        &l,
        parity,
        &mut bound,
        &mut best,
        &mut best_value,
    );
    best.sort();
    best
}

fn fold_dominant(rs: &RootSystem, mut c: Vec<i64>) -> Vec<i64> {
    let n = rs.rank();
    let mut guard = 0usize;
    loop {
        match (0..n).find(|&i| c[i] < 0) {
            None => return c,
            Some(i) => {
                let ci = c[i];
                for j in 0..n {
                    c[j] -= ci * rs.cartan_entry(i, j);
                }
            }
        }
        guard += 1;
        assert!(guard < 100_000, "dominance folding failed to terminate");
    }
}

fn parity_pattern(c: &[i64]) -> BTreeSet<usize> {
    c.iter().enumerate().filter(|(_, &x)| x.rem_euclid(2) == 1).map(|(j, _)| j).collect()
}

/// Reduces a painting (trivial involution) to the canonical equivalent
/// painting with at most one node.
///
/// All minimal-norm vectors of the parity coset are folded to dominant and
/// the least resulting pattern is returned; this makes the output constant
/// on equivalence classes. Panics if any folded pattern has more than one
/// node, which would contradict the at-most-one-marked-node theorem.
pub fn normalize_painting(rs: &RootSystem, painted: &BTreeSet<usize>) -> BTreeSet<usize> {
    let n = rs.rank();
    for &p in painted {
        assert!(p < n, "painted node {p} out of range");
    }
    if painted.is_empty() {
        return BTreeSet::new();
    }
    let parity: Vec<bool> = (0..n).map(|j| painted.contains(&j)).collect();
    let gram = coweight_gram(rs);
    let minimal = minimal_parity_vectors(&gram, &parity);
    let mut patterns: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for v in minimal {
        let dominant = fold_dominant(rs, v);
        let pattern = parity_pattern(&dominant);
        assert!(
            pattern.len() <= 1,
            "minimization produced a multi-node painting {pattern:?}; \
             this contradicts the single-marked-node theorem"
        );
        assert!(!pattern.is_empty(), "parity class collapsed unexpectedly");
        patterns.insert(pattern);
    }
    patterns.into_iter().next().expect("at least one minimal vector")
}

/// Test oracle: are two paintings related by single-node reflection moves?
///
/// Reflecting in a painted node `k` flips the paint of every node `j` with
/// `<alpha_j, alpha_k^v>` odd. This is exactly how the parity pattern of a
/// coweight transforms under the simple reflection `s_k`, so the move
/// closure is the full Weyl orbit of the painting.
pub fn painting_equivalence_oracle(
    rs: &RootSystem,
    p1: &BTreeSet<usize>,
    p2: &BTreeSet<usize>,
) -> bool {
    oracle_class(rs, p1).contains(&to_mask(p2))
}

/// The full equivalence class of a painting under the move oracle, as masks.
pub fn oracle_class(rs: &RootSystem, painted: &BTreeSet<usize>) -> BTreeSet<u32> {
    let n = rs.rank();
    let start = to_mask(painted);
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(mask) = queue.pop_front() {
        for k in 0..n {
            if mask & (1 << k) == 0 {
                continue;
            }
            let mut next = mask;
            for j in 0..n {
                if j != k && rs.cartan_entry(k, j).rem_euclid(2) == 1 {
                    next ^= 1 << j;
                }
            }
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn to_mask(painted: &BTreeSet<usize>) -> u32 {
    painted.iter().fold(0u32, |m, &j| m | (1 << j))
}

/// Isotropy subalgebra structure for a normalized painting with trivial
/// involution: the Dynkin diagram of the semisimple part and the dimension
/// of the center.
///
/// No painting gives the full diagram; a label-1 node deletes itself and
/// contributes a one-dimensional center; a label-2 node is deleted from the
/// extended diagram.
pub fn k0_structure(
    rs: &RootSystem,
    painted_node: Option<usize>,
) -> Result<(DynkinDiagram, u8), VoganError> {
    match painted_node {
        None => Ok((DynkinDiagram::from_root_system(rs), 0)),
        Some(j) => {
            if j >= rs.rank() {
                return Err(VoganError::NodeOutOfRange { index: j, rank: rs.rank() });
            }
            let label = rs.highest_root_labels()[j];
            match label {
                1 => {
                    let d = DynkinDiagram::from_root_system(rs);
                    let pos = d.position_of(crate::diagram::NodeRef::Simple(j)).unwrap();
                    Ok((d.remove_node(pos), 1))
                }
                2 => {
                    let d = DynkinDiagram::extended(rs);
                    let pos = d.position_of(crate::diagram::NodeRef::Simple(j)).unwrap();
                    Ok((d.remove_node(pos), 0))
                }
                other => Err(VoganError::NodeLabelTooLarge { node: j, label: other }),
            }
        }
    }
}

/// Hermitian criterion: trivial involution and a single painted node with
/// highest-root coefficient 1 (equivalently, the isotropy algebra has a
/// one-dimensional center).
pub fn is_hermitian(rs: &RootSystem, v: &VoganDiagram) -> bool {
    v.involution_is_trivial()
        && v.painted().len() == 1
        && v.painted().iter().all(|&j| rs.highest_root_labels()[j] == 1)
}

/// One row of the real-form classification.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RealFormRecord {
    pub rs_type: RootSystemType,
    /// Symbolic name of the real form, e.g. `su(1,3)`, `e6(-14)`.
    pub g0: String,
    /// Symbolic isotropy algebra, e.g. `s(u(1)+u(3))`.
    pub k0: String,
    /// Dimension (0 or 1) of the center of the isotropy algebra.
    pub k0_center_dim: u8,
    pub real_rank: TableEntry<usize>,
    /// Restricted root system label, possibly non-reduced (`BC2`); `-` for
    /// the compact form.
    pub restricted: TableEntry<String>,
    pub hermitian: bool,
    /// `|Z(G_c^sc) ∩ A|`.
    pub z_cap_a: TableEntry<usize>,
    /// Cartan symmetric-space label; `-` for the compact form.
    pub cartan_type: String,
}

fn known<T>(v: T) -> TableEntry<T> {
    TableEntry::Value(v)
}

fn record(
    rs_type: RootSystemType,
    g0: impl Into<String>,
    k0: impl Into<String>,
    k0_center_dim: u8,
    real_rank: TableEntry<usize>,
    restricted: TableEntry<String>,
    hermitian: bool,
    z_cap_a: TableEntry<usize>,
    cartan_type: impl Into<String>,
) -> RealFormRecord {
    RealFormRecord {
        rs_type,
        g0: g0.into(),
        k0: k0.into(),
        k0_center_dim,
        real_rank,
        restricted,
        hermitian,
        z_cap_a,
        cartan_type: cartan_type.into(),
    }
}

fn compact_name(t: RootSystemType) -> String {
    let n = t.rank();
    match t.family() {
        Family::A => format!("su({})", n + 1),
        Family::B => format!("so({})", 2 * n + 1),
        Family::C => format!("sp({n})"),
        Family::D => format!("so({})", 2 * n),
        Family::E => format!("e{n}"),
        Family::F => "f4".to_string(),
        Family::G => "g2".to_string(),
    }
}

fn so_pair_name(p: usize, q: usize) -> (String, String) {
    let (p, q) = (p.min(q), p.max(q));
    // so(1) is trivial, so the isotropy algebra is just so(q)
    let k0 = if p == 1 { format!("so({q})") } else { format!("so({p})+so({q})") };
    (format!("so({p},{q})"), k0)
}

/// Classifies a validated Vogan diagram with at most one painted node.
pub fn classify(rs: &RootSystem, v: &VoganDiagram) -> Result<RealFormRecord, VoganError> {
    if v.painted().len() > 1 {
        return Err(VoganError::UnnormalizedPainting { count: v.painted().len() });
    }
    validate(rs, v.involution(), v.painted())?;
    let t = rs.rs_type();
    let n = rs.rank();

    if v.involution_is_trivial() {
        let painted = normalize_painting(rs, v.painted());
        let Some(&j0) = painted.iter().next() else {
            // compact form
            let name = compact_name(t);
            return Ok(record(
                t,
                name.clone(),
                name,
                0,
                known(0),
                known("-".to_string()),
                false,
                known(1),
                "-",
            ));
        };
        let j = j0 + 1; // 1-based position
        let rec = match t.family() {
            Family::A => {
                let p = j.min(n + 1 - j);
                let q = n + 1 - p;
                let (restricted, z) =
                    if p == q { (format!("C{p}"), 2) } else { (format!("BC{p}"), 1) };
                record(
                    t,
                    format!("su({p},{q})"),
                    format!("s(u({p})+u({q}))"),
                    1,
                    known(p),
                    known(restricted),
                    true,
                    known(z),
                    if p == 1 { "AIV" } else { "AIII" },
                )
            }
            Family::B => {
                let p = if j == n { 1 } else { (2 * j).min(2 * n + 1 - 2 * j) };
                let q = 2 * n + 1 - p;
                let (name, k0) = so_pair_name(p, q);
                record(
                    t,
                    name,
                    k0,
                    if p == 2 { 1 } else { 0 },
                    known(p),
                    known(format!("B{p}")),
                    p == 2,
                    known(2),
                    if p == 1 { "BII" } else { "BI" },
                )
            }
            Family::C => {
                if j == n {
                    record(
                        t,
                        format!("sp({n},R)"),
                        format!("u({n})"),
                        1,
                        known(n),
                        known(format!("C{n}")),
                        true,
                        known(2),
                        "CI",
                    )
                } else {
                    let p = j.min(n - j);
                    let q = n - p;
                    let (restricted, z) =
                        if p == q { (format!("C{p}"), 2) } else { (format!("BC{p}"), 1) };
                    record(
                        t,
                        format!("sp({p},{q})"),
                        format!("sp({p})+sp({q})"),
                        0,
                        known(p),
                        known(restricted),
                        false,
                        known(z),
                        "CII",
                    )
                }
            }
            Family::D => {
                if j >= n - 1 {
                    // spinor node
                    let rank = n / 2;
                    let (restricted, z) = if n % 2 == 0 {
                        (format!("C{}", n / 2), 2)
                    } else {
                        (format!("BC{}", (n - 1) / 2), 1)
                    };
                    record(
                        t,
                        format!("so*({})", 2 * n),
                        format!("u({n})"),
                        1,
                        known(rank),
                        known(restricted),
                        true,
                        known(z),
                        "DIII",
                    )
                } else {
                    let p = (2 * j).min(2 * n - 2 * j);
                    let q = 2 * n - p;
                    let (name, k0) = so_pair_name(p, q);
                    let (restricted, z) =
                        if p == q { (format!("D{p}"), 4) } else { (format!("B{p}"), 2) };
                    record(
                        t,
                        name,
                        k0,
                        if p == 2 { 1 } else { 0 },
                        known(p),
                        known(restricted),
                        p == 2,
                        known(z),
                        "DI",
                    )
                }
            }
            Family::E => classify_exceptional_e(t, n, j0),
            Family::F => {
                if j0 == 0 {
                    record(
                        t,
                        "f4(4)",
                        "sp(3)+su(2)",
                        0,
                        known(4),
                        known("F4".to_string()),
                        false,
                        known(1),
                        "FI",
                    )
                } else {
                    record(
                        t,
                        "f4(-20)",
                        "so(9)",
                        0,
                        known(1),
                        known("BC1".to_string()),
                        false,
                        known(1),
                        "FII",
                    )
                }
            }
            Family::G => record(
                t,
                "g2(2)",
                "su(2)+su(2)",
                0,
                known(2),
                known("G2".to_string()),
                false,
                known(1),
                "G",
            ),
        };
        debug_assert_eq!(rec.hermitian, rec.k0_center_dim == 1);
        return Ok(rec);
    }

    // nontrivial involution
    let rec = match t.family() {
        Family::A => {
            if v.painted().is_empty() && n % 2 == 1 {
                let m = (n + 1) / 2;
                record(
                    t,
                    format!("su*({})", n + 1),
                    format!("sp({m})"),
                    0,
                    known(m),
                    known(format!("A{m}")),
                    false,
                    known(m),
                    "AII",
                )
            } else {
                record(
                    t,
                    format!("sl({},R)", n + 1),
                    format!("so({})", n + 1),
                    0,
                    known(n),
                    known(format!("A{n}")),
                    false,
                    known(n + 1),
                    "AI",
                )
            }
        }
        Family::D => {
            // swap of two fork legs; painted chain node at distance
            // n-1-j from the swapped pair determinesso(2j+1, 2n-2j-1)
            let swapped = v
                .involution()
                .iter()
                .enumerate()
                .find(|&(i, &im)| im != i)
                .map(|(i, _)| i)
                .expect("nontrivial");
            let j = match v.painted().iter().next() {
                None => 0,
                Some(&c) => n - 1 - node_distance(rs, c, swapped),
            };
            let p = (2 * j + 1).min(2 * n - 2 * j - 1);
            let q = 2 * n - p;
            let (name, k0) = so_pair_name(p, q);
            record(
                t,
                name,
                k0,
                0,
                known(p),
                known(format!("B{p}")),
                false,
                known(2),
                "DI",
            )
        }
        Family::E => {
            if v.painted().is_empty() {
                record(
                    t,
                    "e6(-26)",
                    "f4",
                    0,
                    known(2),
                    known("A2".to_string()),
                    false,
                    known(3),
                    "EIV",
                )
            } else {
                record(
                    t,
                    "e6(6)",
                    "sp(4)",
                    0,
                    known(6),
                    known("E6".to_string()),
                    false,
                    known(3),
                    "EI",
                )
            }
        }
        _ => unreachable!("family {t} has no nontrivial diagram involution"),
    };
    debug_assert_eq!(rec.hermitian, rec.k0_center_dim == 1);
    Ok(rec)
}

fn classify_exceptional_e(t: RootSystemType, n: usize, j0: usize) -> RealFormRecord {
    match (n, j0) {
        // E6: label-1 nodes 1 and 6 (Bourbaki); label-2 nodes 2, 3, 5
        (6, 0) | (6, 5) => record(
            t,
            "e6(-14)",
            "so(10)+u(1)",
            1,
            known(2),
            known("BC2".to_string()),
            true,
            known(1),
            "EIII",
        ),
        (6, _) => record(
            t,
            "e6(2)",
            "su(6)+su(2)",
            0,
            known(4),
            known("F4".to_string()),
            false,
            known(1),
            "EII",
        ),
        // E7: Bourbaki labels (2,2,3,4,3,2,1)
        (7, 6) => record(
            t,
            "e7(-25)",
            "e6+u(1)",
            1,
            known(3),
            TableEntry::Unknown,
            true,
            TableEntry::Unknown,
            "EVII",
        ),
        (7, 1) => record(
            t,
            "e7(7)",
            "su(8)",
            0,
            known(7),
            TableEntry::Unknown,
            false,
            TableEntry::Unknown,
            "EV",
        ),
        (7, _) => record(
            t,
            "e7(-5)",
            "so(12)+su(2)",
            0,
            known(4),
            TableEntry::Unknown,
            false,
            TableEntry::Unknown,
            "EVI",
        ),
        // E8: Bourbaki labels (2,3,4,6,5,4,3,2)
        (8, 0) => record(
            t,
            "e8(8)",
            "so(16)",
            0,
            known(8),
            known("E8".to_string()),
            false,
            known(1),
            "EVIII",
        ),
        (8, 7) => record(
            t,
            "e8(-24)",
            "e7+su(2)",
            0,
            known(4),
            known("F4".to_string()),
            false,
            known(1),
            "EIX",
        ),
        other => unreachable!("no E-family real form for painted node {other:?}"),
    }
}

fn node_distance(rs: &RootSystem, a: usize, b: usize) -> usize {
    let d = DynkinDiagram::from_root_system(rs);
    let mut dist = vec![usize::MAX; d.len()];
    dist[a] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(a);
    while let Some(p) = queue.pop_front() {
        for q in d.neighbors(p) {
            if dist[q] == usize::MAX {
                dist[q] = dist[p] + 1;
                queue.push_back(q);
            }
        }
    }
    dist[b]
}

/// All inequivalent real forms of the given type, compact form first.
///
/// With trivial involution only the empty and single-node paintings are
/// scanned: by the at-most-one-marked-node theorem every painting class
/// contains such a representative, and `classify` canonicalizes it. With a
/// nontrivial involution the fixed single-node paintings and the empty
/// painting are scanned. Duplicates (equal records) are removed, preserving
/// first appearance.
pub fn enumerate_real_forms(t: RootSystemType) -> Vec<RealFormRecord> {
    let rs = RootSystem::build(t);
    let mut records: Vec<RealFormRecord> = Vec::new();
    let push = |rec: RealFormRecord, records: &mut Vec<RealFormRecord>| {
        if !records.contains(&rec) {
            records.push(rec);
        }
    };
    for involution in diagram_involutions(&rs) {
        let trivial = involution.iter().enumerate().all(|(i, &j)| i == j);
        if trivial {
            let empty = VoganDiagram::new(&rs, involution.clone(), BTreeSet::new()).unwrap();
            push(classify(&rs, &empty).unwrap(), &mut records);
            for j in 0..rs.rank() {
                let v =
                    VoganDiagram::new(&rs, involution.clone(), BTreeSet::from([j])).unwrap();
                push(classify(&rs, &v).unwrap(), &mut records);
            }
        } else {
            let fixed: Vec<usize> = involution
                .iter()
                .enumerate()
                .filter(|&(i, &im)| i == im)
                .map(|(i, _)| i)
                .collect();
            for &j in &fixed {
                let v =
                    VoganDiagram::new(&rs, involution.clone(), BTreeSet::from([j])).unwrap();
                push(classify(&rs, &v).unwrap(), &mut records);
            }
            let empty = VoganDiagram::new(&rs, involution.clone(), BTreeSet::new()).unwrap();
            push(classify(&rs, &empty).unwrap(), &mut records);
        }
    }
    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::all_types_up_to_rank;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    fn set(nodes: &[usize]) -> BTreeSet<usize> {
        nodes.iter().copied().collect()
    }

    #[test]
    fn involutions_of_a3() {
        let invs = diagram_involutions(&rs(Family::A, 3));
        assert_eq!(invs.len(), 2);
        assert_eq!(invs[0], vec![0, 1, 2]);
        assert_eq!(invs[1], vec![2, 1, 0]);
    }

    #[test]
    fn involutions_of_e7_trivial_only() {
        let invs = diagram_involutions(&rs(Family::E, 7));
        assert_eq!(invs.len(), 1);
    }

    #[test]
    fn involutions_of_d4_are_identity_plus_three_swaps() {
        let invs = diagram_involutions(&rs(Family::D, 4));
        // legs of D4 are nodes 0, 2, 3 around center 1
        assert_eq!(invs.len(), 4);
        for inv in &invs[1..] {
            let moved: Vec<usize> =
                inv.iter().enumerate().filter(|&(i, &j)| i != j).map(|(i, _)| i).collect();
            assert_eq!(moved.len(), 2);
            assert!(moved.iter().all(|&i| [0, 2, 3].contains(&i)));
        }
    }

    #[test]
    fn involutions_counts_by_family() {
        assert_eq!(diagram_involutions(&rs(Family::B, 4)).len(), 1);
        assert_eq!(diagram_involutions(&rs(Family::C, 3)).len(), 1);
        assert_eq!(diagram_involutions(&rs(Family::F, 4)).len(), 1);
        assert_eq!(diagram_involutions(&rs(Family::G, 2)).len(), 1);
        assert_eq!(diagram_involutions(&rs(Family::E, 6)).len(), 2);
        assert_eq!(diagram_involutions(&rs(Family::E, 8)).len(), 1);
        assert_eq!(diagram_involutions(&rs(Family::D, 5)).len(), 2);
        assert_eq!(diagram_involutions(&rs(Family::A, 4)).len(), 2);
    }

    #[test]
    fn validate_examples() {
        let r = rs(Family::A, 3);
        let flip = vec![2, 1, 0];
        // painted middle node of the flip is fine
        assert!(validate(&r, &flip, &set(&[1])).is_ok());
        // painted end node is not fixed
        assert!(matches!(
            validate(&r, &flip, &set(&[0])),
            Err(VoganError::PaintedNotFixed { node: 0 })
        ));
        // a non-automorphism map
        assert!(matches!(
            validate(&r, &[1, 0, 2], &set(&[])),
            Err(VoganError::NotAutomorphism)
        ));
        // identity involution, empty painting: the compact form
        assert!(validate(&r, &[0, 1, 2], &set(&[])).is_ok());
    }

    #[test]
    fn normalize_a2_both_painted() {
        let r = rs(Family::A, 2);
        assert_eq!(normalize_painting(&r, &set(&[0, 1])), set(&[0]));
        assert_eq!(normalize_painting(&r, &BTreeSet::new()), BTreeSet::new());
        let r = rs(Family::B, 2);
        assert_eq!(normalize_painting(&r, &set(&[0])), set(&[0]));
    }

    #[test]
    fn normalize_matches_oracle_exhaustively_small_ranks() {
        for t in all_types_up_to_rank(4) {
            let r = RootSystem::build(t);
            let n = r.rank();
            for mask in 0u32..(1 << n) {
                let painted: BTreeSet<usize> =
                    (0..n).filter(|&j| mask & (1 << j) != 0).collect();
                let normalized = normalize_painting(&r, &painted);
                assert!(normalized.len() <= 1, "multi-node output in {t}");
                assert!(
                    painting_equivalence_oracle(&r, &painted, &normalized),
                    "output not equivalent to input for {painted:?} in {t}"
                );
                // canonical on the whole class
                assert_eq!(
                    normalize_painting(&r, &normalized),
                    normalized,
                    "not idempotent in {t}"
                );
            }
        }
    }

    #[test]
    #[ignore = "slow; run with --ignored for the exhaustive rank-8 sweep"]
    fn normalize_matches_oracle_exhaustively_all_ranks() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let n = r.rank();
            for mask in 0u32..(1 << n) {
                let painted: BTreeSet<usize> =
                    (0..n).filter(|&j| mask & (1 << j) != 0).collect();
                let normalized = normalize_painting(&r, &painted);
                assert!(normalized.len() <= 1);
                assert!(painting_equivalence_oracle(&r, &painted, &normalized), "{t} {painted:?}");
            }
        }
    }

    #[test]
    fn distinct_normal_forms_are_inequivalent() {
        for t in all_types_up_to_rank(4) {
            let r = RootSystem::build(t);
            let n = r.rank();
            let mut by_class: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = Vec::new();
            for mask in 0u32..(1 << n) {
                let painted: BTreeSet<usize> =
                    (0..n).filter(|&j| mask & (1 << j) != 0).collect();
                by_class.push((painted.clone(), normalize_painting(&r, &painted)));
            }
            for (p1, n1) in &by_class {
                for (p2, n2) in &by_class {
                    let equivalent = painting_equivalence_oracle(&r, p1, p2);
                    assert_eq!(equivalent, n1 == n2, "class/normal-form mismatch in {t}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let r = rs(Family::A, 2);
        assert!(painting_equivalence_oracle(&r, &set(&[0]), &set(&[0])));
        assert!(painting_equivalence_oracle(&r, &set(&[0, 1]), &set(&[0])));
        let r = rs(Family::A, 3);
        // su(1,3) and su(2,2) are different forms
        assert!(!painting_equivalence_oracle(&r, &set(&[0]), &set(&[1])));
        // but node 1 and node 3 give isomorphic forms via the same class
        assert!(painting_equivalence_oracle(&r, &set(&[0]), &set(&[2])));
    }

    #[test]
    fn k0_structure_examples() {
        use crate::diagram::NodeRef;
        // A3, node 1: A2 remainder plus a center
        let r = rs(Family::A, 3);
        let (d, center) = k0_structure(&r, Some(0)).unwrap();
        assert_eq!(center, 1);
        assert_eq!(d.identify_components(), vec![(Family::A, 2)]);

        // C3, node 3 (label 1): A2 remainder plus center -> u(3)
        let r = rs(Family::C, 3);
        let (d, center) = k0_structure(&r, Some(2)).unwrap();
        assert_eq!(center, 1);
        assert_eq!(d.identify_components(), vec![(Family::A, 2)]);

        // B3, node 1 (label 1): B2 remainder plus center -> so(2)+so(5)
        let r = rs(Family::B, 3);
        let (d, center) = k0_structure(&r, Some(0)).unwrap();
        assert_eq!(center, 1);
        assert_eq!(d.identify_components(), vec![(Family::B, 2)]);

        // B3, node 3 (label 2): extended minus the short node is D3
        let (d, center) = k0_structure(&r, Some(2)).unwrap();
        assert_eq!(center, 0);
        assert!(d.position_of(NodeRef::Affine).is_some());
        assert_eq!(d.identify_components(), vec![(Family::A, 3)]);

        // no painting: the full diagram
        let (d, center) = k0_structure(&r, None).unwrap();
        assert_eq!(center, 0);
        assert_eq!(d.identify_components(), vec![(Family::B, 3)]);

        // G2 node 2 has label 3
        let r = rs(Family::G, 2);
        assert!(matches!(
            k0_structure(&r, Some(1)),
            Err(VoganError::NodeLabelTooLarge { node: 1, label: 3 })
        ));
    }

    #[test]
    fn hermitian_detection() {
        let r = rs(Family::A, 4);
        for j in 0..4 {
            let v = VoganDiagram::trivial(&r, set(&[j])).unwrap();
            assert!(is_hermitian(&r, &v));
        }
        // B3: only node 1 has label 1
        let r = rs(Family::B, 3);
        assert!(is_hermitian(&r, &VoganDiagram::trivial(&r, set(&[0])).unwrap()));
        assert!(!is_hermitian(&r, &VoganDiagram::trivial(&r, set(&[1])).unwrap()));
        // nontrivial involution is never Hermitian
        let r = rs(Family::A, 3);
        let v = VoganDiagram::new(&r, vec![2, 1, 0], set(&[1])).unwrap();
        assert!(!is_hermitian(&r, &v));
        // compact form is not Hermitian
        let v = VoganDiagram::trivial(&r, BTreeSet::new()).unwrap();
        assert!(!is_hermitian(&r, &v));
    }

    #[test]
    fn classify_su13() {
        let r = rs(Family::A, 3);
        let v = VoganDiagram::trivial(&r, set(&[0])).unwrap();
        let rec = classify(&r, &v).unwrap();
        assert_eq!(rec.g0, "su(1,3)");
        assert_eq!(rec.k0, "s(u(1)+u(3))");
        assert_eq!(rec.real_rank, known(1));
        assert_eq!(rec.restricted, known("BC1".to_string()));
        assert!(rec.hermitian);
        assert_eq!(rec.z_cap_a, known(1));
        assert_eq!(rec.cartan_type, "AIV");
    }

    #[test]
    fn classify_su_star_4() {
        let r = rs(Family::A, 3);
        let v = VoganDiagram::new(&r, vec![2, 1, 0], BTreeSet::new()).unwrap();
        let rec = classify(&r, &v).unwrap();
        assert_eq!(rec.g0, "su*(4)");
        assert_eq!(rec.k0, "sp(2)");
        assert_eq!(rec.real_rank, known(2));
        assert_eq!(rec.restricted, known("A2".to_string()));
        assert!(!rec.hermitian);
        assert_eq!(rec.z_cap_a, known(2));
        assert_eq!(rec.cartan_type, "AII");
    }

    #[test]
    fn classify_e6_minus_14() {
        let r = rs(Family::E, 6);
        let v = VoganDiagram::trivial(&r, set(&[0])).unwrap();
        let rec = classify(&r, &v).unwrap();
        assert_eq!(rec.g0, "e6(-14)");
        assert_eq!(rec.k0, "so(10)+u(1)");
        assert_eq!(rec.real_rank, known(2));
        assert_eq!(rec.restricted, known("BC2".to_string()));
        assert!(rec.hermitian);
        assert_eq!(rec.z_cap_a, known(1));
        assert_eq!(rec.cartan_type, "EIII");
    }

    #[test]
    fn classify_rejects_multinode_painting() {
        let r = rs(Family::A, 3);
        let v = VoganDiagram::trivial(&r, set(&[0, 1])).unwrap();
        assert!(matches!(
            classify(&r, &v),
            Err(VoganError::UnnormalizedPainting { count: 2 })
        ));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_real_forms(RootSystemType::new(Family::A, 1).unwrap()).len(), 2);
        let a2: Vec<String> = enumerate_real_forms(RootSystemType::new(Family::A, 2).unwrap())
            .iter()
            .map(|r| r.g0.clone())
            .collect();
        assert_eq!(a2, vec!["su(3)", "su(1,2)", "sl(3,R)"]);
        let c2: Vec<String> = enumerate_real_forms(RootSystemType::new(Family::C, 2).unwrap())
            .iter()
            .map(|r| r.g0.clone())
            .collect();
        assert_eq!(c2, vec!["sp(2)", "sp(1,1)", "sp(2,R)"]);
        let g2: Vec<String> = enumerate_real_forms(RootSystemType::new(Family::G, 2).unwrap())
            .iter()
            .map(|r| r.g0.clone())
            .collect();
        assert_eq!(g2, vec!["g2", "g2(2)"]);
    }

    #[test]
    fn enumerate_a3_order_and_names() {
        let names: Vec<String> = enumerate_real_forms(RootSystemType::new(Family::A, 3).unwrap())
            .iter()
            .map(|r| format!("{} {}", r.g0, r.cartan_type))
            .collect();
        assert_eq!(
            names,
            vec!["su(4) -", "su(1,3) AIV", "su(2,2) AIII", "sl(4,R) AI", "su*(4) AII"]
        );
    }

    #[test]
    fn enumerate_d4_includes_odd_signatures() {
        let names: Vec<String> = enumerate_real_forms(RootSystemType::new(Family::D, 4).unwrap())
            .iter()
            .map(|r| r.g0.clone())
            .collect();
        assert!(names.contains(&"so(1,7)".to_string()));
        assert!(names.contains(&"so(3,5)".to_string()));
        assert!(names.contains(&"so(2,6)".to_string()));
        assert!(names.contains(&"so(4,4)".to_string()));
        assert!(names.contains(&"so*(8)".to_string()));
        assert!(names.contains(&"so(8)".to_string()));
        assert_eq!(names.len(), 6);
    }

    #[test]
    fn hermitian_iff_isotropy_center_is_one_dimensional() {
        for t in all_types_up_to_rank(8) {
            for rec in enumerate_real_forms(t) {
                assert_eq!(rec.hermitian, rec.k0_center_dim == 1, "mismatch in {}", rec.g0);
            }
        }
    }

    #[test]
    fn classify_is_total_outside_the_e7_gaps() {
        // the noncompact E7 rows are the only ones with missing source data
        for t in all_types_up_to_rank(8) {
            for rec in enumerate_real_forms(t) {
                let rank = rec.real_rank.value().copied();
                assert!(rank.is_some(), "unknown rank for {}", rec.g0);
                assert!(rank.unwrap() <= t.rank(), "real rank exceeds rank for {}", rec.g0);
                if !rec.g0.starts_with("e7(") {
                    assert!(rec.restricted.value().is_some(), "unknown data for {}", rec.g0);
                    assert!(rec.z_cap_a.value().is_some(), "unknown data for {}", rec.g0);
                }
            }
        }
    }

    #[test]
    fn k0_names_match_diagram_components_for_classical_forms() {
        // the named isotropy algebra must agree with the k0 diagram shape
        for t in all_types_up_to_rank(6) {
            let r = RootSystem::build(t);
            for j in 0..r.rank() {
                let label = r.highest_root_labels()[j];
                if label > 2 {
                    continue;
                }
                let v = VoganDiagram::trivial(&r, set(&[j])).unwrap();
                let rec = classify(&r, &v).unwrap();
                // recompute the normalized node classify used
                let node = normalize_painting(&r, &set(&[j]));
                let (diagram, center) = k0_structure(&r, node.iter().next().copied()).unwrap();
                assert_eq!(center == 1, rec.hermitian, "center/hermitian mismatch in {t}");
                // inner involutions have equal rank: rank(k0) = rank(g)
                assert_eq!(diagram.len() + center as usize, r.rank(), "rank mismatch in {t}");
                let _ = label;
            }
        }
    }
}
