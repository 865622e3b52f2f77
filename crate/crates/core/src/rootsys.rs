//! Irreducible root systems A–G built from their Cartan matrices.
//!
//! Roots are stored as integer coefficient vectors in the simple-root basis,
//! so every structural fact (root strings, pairings, reflections, the highest
//! root) is an exact integer identity. Node numbering follows the Bourbaki
//! chains, with the one convention choice that G2 puts the long root first;
//! see the README for the full table.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::{rational_from_i64, Int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unknown family `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("node index {index} out of range 0..{rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("vector has length {found}, expected rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Weyl orbit exceeded cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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

impl FromStr for Family {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(RootSystemError::UnknownFamily(other.to_string())),
        }
    }
}

/// A validated (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, as the integer coefficients of `sum m_i alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Height: the coefficient sum.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root { coords: self.coords.iter().map(|x| -x).collect() }
    }
}

/// An irreducible root system, immutable once built.
#[derive(Debug, Clone)]
pub struct RootSystem {
    rs_type: RootSystemType,
    cartan: Matrix<i64>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    highest_short_root: Root,
    root_set: HashSet<Vec<i64>>,
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under root strings.
    pub fn build(rs_type: RootSystemType) -> RootSystem {
        let n = rs_type.rank();
        let cartan = cartan_matrix(rs_type);
        let symmetrizer = symmetrizer(rs_type);

        // Breadth-first by height: alpha + alpha_i is a root iff the
        // alpha_i-string through alpha has q = p - <alpha, alpha_i^v> >= 1.
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for s in &level {
            set.insert(s.clone());
        }

        while !level.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for alpha in &level {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| cartan[(i, j)] * alpha[j]).sum();
                    // walk down the alpha_i-string
                    let mut p = 0i64;
                    let mut probe = alpha.clone();
                    loop {
                        probe[i] -= 1;
                        if set.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing;
                    if q >= 1 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if set.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            level = next;
        }

        let mut positive_roots: Vec<Root> =
            set.iter().map(|c| Root { coords: c.clone() }).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then(a.coords.cmp(&b.coords)));

        let highest_root = positive_roots.last().unwrap().clone();
        let gram = |a: &Root, b: &Root| -> i64 {
            let mut acc = 0;
            for i in 0..n {
                for j in 0..n {
                    acc += a.coords[i] * symmetrizer[i] * cartan[(i, j)] * b.coords[j];
                }
            }
            acc
        };
        let min_norm = positive_roots.iter().map(|r| gram(r, r)).min().unwrap();
        let highest_short_root = positive_roots
            .iter()
            .filter(|r| gram(r, r) == min_norm)
            .max_by_key(|r| (r.height(), r.coords.clone()))
            .unwrap()
            .clone();

        RootSystem {
            rs_type,
            cartan,
            symmetrizer,
            positive_roots,
            highest_root,
            highest_short_root,
            root_set: set,
        }
    }

    pub fn rs_type(&self) -> RootSystemType {
        self.rs_type
    }

    pub fn rank(&self) -> usize {
        self.rs_type.rank()
    }

    /// Cartan matrix `a[i][j] = <alpha_j, alpha_i^v>`.
    pub fn cartan(&self) -> &Matrix<i64> {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[(i, j)]
    }

    /// Diagonal `d` with `d * cartan` symmetric positive definite;
    /// `d_i` is half the squared length of `alpha_i`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let n = self.rank();
        assert!(i < n);
        Root { coords: (0..n).map(|j| i64::from(i == j)).collect() }
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn highest_short_root(&self) -> &Root {
        &self.highest_short_root
    }

    /// Highest-root coefficients; these are the classical node labels.
    pub fn highest_root_labels(&self) -> &[i64] {
        self.highest_root.coords()
    }

    /// Membership test for arbitrary coefficient vectors (either sign).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.len() != self.rank() {
            return false;
        }
        if self.root_set.contains(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.root_set.contains(&neg)
    }

    pub fn root_from_coords(&self, coords: Vec<i64>) -> Result<Root, RootSystemError> {
        if self.is_root(&coords) {
            Ok(Root { coords })
        } else {
            Err(RootSystemError::NotARoot)
        }
    }

    /// Symmetrized bilinear form `(a, b)`, normalized so short roots have
    /// squared length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        rational_from_i64(self.inner_i64(a, b))
    }

    pub(crate) fn inner_i64(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += a.coords[i] * self.symmetrizer[i] * self.cartan[(i, j)] * b.coords[j];
            }
        }
        acc
    }

    pub fn norm2(&self, a: &Root) -> i64 {
        self.inner_i64(a, a)
    }

    /// `<v, alpha_i^v>` for `v` given in simple-root coordinates.
    pub fn pairing_with_simple_coroot(&self, v: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| self.cartan[(i, j)] * v[j]).sum()
    }

    /// Coroot of `a` in the simple-coroot basis: `a^v = 2a/(a,a)`.
    ///
    /// The coefficients are `m_i d_i / d_a`, always integral for a root; the
    /// return type is rational to match the rest of the coweight-side API.
    pub fn coroot(&self, a: &Root) -> Result<Vec<Rational>, RootSystemError> {
        if !self.is_root(a.coords()) {
            return Err(RootSystemError::NotARoot);
        }
        let half_norm = Rational::new(Int::from(self.norm2(a)), Int::from(2));
        Ok((0..self.rank())
            .map(|i| {
                let num = rational_from_i64(a.coords[i] * self.symmetrizer[i]);
                num / half_norm.clone()
            })
            .collect())
    }

    /// Simple reflection `s_i(v) = v - <v, alpha_i^v> alpha_i` on rational
    /// vectors in simple-root coordinates.
    pub fn simple_reflection(
        &self,
        i: usize,
        v: &[Rational],
    ) -> Result<Vec<Rational>, RootSystemError> {
        let n = self.rank();
        if i >= n {
            return Err(RootSystemError::NodeOutOfRange { index: i, rank: n });
        }
        if v.len() != n {
            return Err(RootSystemError::DimensionMismatch { expected: n, found: v.len() });
        }
        let pairing: Rational = (0..n)
            .map(|j| rational_from_i64(self.cartan[(i, j)]) * v[j].clone())
            .fold(Rational::zero(), |acc, x| acc + x);
        let mut out = v.to_vec();
        out[i] = out[i].clone() - pairing;
        Ok(out)
    }

    /// Simple reflection on a root, staying in integer coordinates.
    pub fn simple_reflection_root(&self, i: usize, a: &Root) -> Root {
        let pairing = self.pairing_with_simple_coroot(&a.coords, i);
        let mut coords = a.coords.clone();
        coords[i] -= pairing;
        Root { coords }
    }

    /// Closure of `{v}` under all simple reflections, capped at `cap` points.
    pub fn weyl_orbit(
        &self,
        v: &[Rational],
        cap: usize,
    ) -> Result<BTreeSet<Vec<Rational>>, RootSystemError> {
        if v.len() != self.rank() {
            return Err(RootSystemError::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
        let mut queue = vec![v.to_vec()];
        seen.insert(v.to_vec());
        while let Some(current) = queue.pop() {
            for i in 0..self.rank() {
                let next = self.simple_reflection(i, &current).expect("valid index");
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(RootSystemError::OrbitCapExceeded { cap });
                    }
                    queue.push(next);
                }
            }
        }
        Ok(seen)
    }

    /// Exponents `e_1 <= ... <= e_n`, read off as the dual partition of the
    /// positive-root height distribution.
    pub fn exponents(&self) -> Vec<usize> {
        let max_height = self.highest_root.height() as usize;
        let mut height_counts = vec![0usize; max_height + 1];
        for r in &self.positive_roots {
            height_counts[r.height() as usize] += 1;
        }
        let mut exponents: Vec<usize> = (1..=self.rank())
            .map(|j| (1..=max_height).filter(|&k| height_counts[k] >= j).count())
            .collect();
        exponents.sort_unstable();
        exponents
    }

    /// `|W| = prod (e_i + 1)` over the exponents.
    pub fn weyl_order(&self) -> Int {
        self.exponents().iter().fold(Int::from(1), |acc, &e| acc * Int::from(e as u64 + 1))
    }

    pub fn dynkin_diagram(&self) -> crate::diagram::DynkinDiagram {
        crate::diagram::DynkinDiagram::from_root_system(self)
    }

    /// Diagram extended by the affine node carrying `-theta`.
    pub fn extended_diagram(&self) -> crate::diagram::DynkinDiagram {
        crate::diagram::DynkinDiagram::extended(self)
    }
}

fn cartan_matrix(t: RootSystemType) -> Matrix<i64> {
    let n = t.rank();
    let mut a = Matrix::filled(n, n, 0i64);
    for i in 0..n {
        a[(i, i)] = 2;
    }
    fn chain_edge(a: &mut Matrix<i64>, i: usize, j: usize) {
        a[(i, j)] = -1;
        a[(j, i)] = -1;
    }
    match t.family() {
        Family::A => {
            for i in 0..n - 1 {
                chain_edge(&mut a, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                chain_edge(&mut a, i, i + 1);
            }
            // last node short: <alpha_{n-1}, alpha_n^v> = -2
            a[(n - 1, n - 2)] = -2;
        }
        Family::C => {
            for i in 0..n - 1 {
                chain_edge(&mut a, i, i + 1);
            }
            // last node long: <alpha_n, alpha_{n-1}^v> = -2
            a[(n - 2, n - 1)] = -2;
        }
        Family::D => {
            // chain 1..n-2 with both fork nodes attached to node n-2
            for i in 0..n - 3 {
                chain_edge(&mut a, i, i + 1);
            }
            chain_edge(&mut a, n - 3, n - 2);
            chain_edge(&mut a, n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki: chain 1,3,4,...,n with node 2 attached to node 4
            let chain: Vec<usize> = std::iter::once(0).chain(2..n).collect();
            for w in chain.windows(2) {
                chain_edge(&mut a, w[0], w[1]);
            }
            chain_edge(&mut a, 1, 3);
        }
        Family::F => {
            for i in 0..3 {
                chain_edge(&mut a, i, i + 1);
            }
            // nodes 1,2 long; 3,4 short
            a[(2, 1)] = -2;
        }
        Family::G => {
            // node 1 long, node 2 short
            a[(0, 1)] = -1;
            a[(1, 0)] = -3;
        }
    }
    a
}

fn symmetrizer(t: RootSystemType) -> Vec<i64> {
    let n = t.rank();
    match t.family() {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![3, 1],
    }
}

/// Number of positive roots of each type, used as an independent check on
/// the closure construction.
pub fn classical_positive_root_count(t: RootSystemType) -> usize {
    let n = t.rank();
    match t.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// All valid types with rank at most `max_rank`, in a fixed scan order.
pub fn all_types_up_to_rank(max_rank: usize) -> Vec<RootSystemType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for rank in 1..=max_rank {
            if let Ok(t) = RootSystemType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    fn rat_vec(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_from_i64(x)).collect()
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(RootSystemType::new(Family::E, 9).is_err());
        assert!(RootSystemType::new(Family::B, 1).is_err());
        assert!(RootSystemType::new(Family::D, 2).is_err());
        assert!(RootSystemType::new(Family::F, 3).is_err());
        assert!(RootSystemType::new(Family::G, 3).is_err());
        assert!(RootSystemType::new(Family::C, 2).is_ok());
        assert!(RootSystemType::new(Family::A, 1).is_ok());
    }

    #[test]
    fn a2_positive_roots_and_theta() {
        let r = rs(Family::A, 2);
        let coords: Vec<&[i64]> = r.positive_roots().iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert_eq!(r.highest_root().coords(), &[1, 1]);
    }

    #[test]
    fn c2_positive_roots_and_theta() {
        let r = rs(Family::C, 2);
        let coords: Vec<&[i64]> = r.positive_roots().iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 0], &[1, 1], &[2, 1]]);
        assert_eq!(r.highest_root().coords(), &[2, 1]);
        assert_eq!(r.highest_short_root().coords(), &[1, 1]);
    }

    #[test]
    fn g2_has_six_positive_roots_with_labels_2_3() {
        let r = rs(Family::G, 2);
        assert_eq!(r.num_positive_roots(), 6);
        let mut labels = r.highest_root_labels().to_vec();
        labels.sort_unstable();
        assert_eq!(labels, vec![2, 3]);
    }

    #[test]
    fn root_counts_match_classical_formulas() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            assert_eq!(
                r.num_positive_roots(),
                classical_positive_root_count(t),
                "count mismatch for {t}"
            );
        }
    }

    #[test]
    fn root_set_stable_under_simple_reflections() {
        for t in all_types_up_to_rank(6) {
            let r = RootSystem::build(t);
            for root in r.positive_roots() {
                for i in 0..r.rank() {
                    let image = r.simple_reflection_root(i, root);
                    assert!(r.is_root(image.coords()), "reflection left root set in {t}");
                }
            }
        }
    }

    #[test]
    fn root_strings_unbroken() {
        for t in all_types_up_to_rank(5) {
            let r = RootSystem::build(t);
            for root in r.positive_roots() {
                for i in 0..r.rank() {
                    let simple = r.simple_root(i);
                    if *root == simple {
                        // p - q = <b, a^v> only holds for b != +-a
                        continue;
                    }
                    let shift = |v: &[i64], sign: i64| -> Vec<i64> {
                        v.iter().zip(simple.coords()).map(|(a, b)| a + sign * b).collect()
                    };
                    let mut down = 0;
                    let mut probe = root.coords().to_vec();
                    while r.is_root(&shift(&probe, -1)) {
                        probe = shift(&probe, -1);
                        down += 1;
                    }
                    let mut up = 0;
                    let mut probe_up = root.coords().to_vec();
                    while r.is_root(&shift(&probe_up, 1)) {
                        probe_up = shift(&probe_up, 1);
                        up += 1;
                    }
                    // p - q = <root, alpha_i^v>
                    let pairing = r.pairing_with_simple_coroot(root.coords(), i);
                    assert_eq!(down - up, pairing, "broken string at {root:?} in {t}");
                }
            }
        }
    }

    #[test]
    fn highest_root_dominant_and_maximal() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let theta = r.highest_root();
            for i in 0..r.rank() {
                assert!(r.pairing_with_simple_coroot(theta.coords(), i) >= 0);
            }
            let max_height = r.positive_roots().iter().map(Root::height).max().unwrap();
            assert_eq!(theta.height(), max_height);
            assert_eq!(
                r.positive_roots().iter().filter(|x| x.height() == max_height).count(),
                1,
                "highest root must be unique in {t}"
            );
        }
    }

    #[test]
    fn coroot_examples() {
        // simple coroots are unit vectors in the coroot basis
        let r = rs(Family::B, 3);
        for i in 0..3 {
            let c = r.coroot(&r.simple_root(i)).unwrap();
            let expected: Vec<Rational> =
                (0..3).map(|j| rational_from_i64(i64::from(i == j))).collect();
            assert_eq!(c, expected);
        }

        // C2: theta = 2a1 + a2 is long, theta^v = a1^v + a2^v
        let r = rs(Family::C, 2);
        let theta = r.highest_root().clone();
        assert_eq!(r.coroot(&theta).unwrap(), rat_vec(&[1, 1]));

        // A2: simply laced, theta^v mirrors theta
        let r = rs(Family::A, 2);
        let theta = r.highest_root().clone();
        assert_eq!(r.coroot(&theta).unwrap(), rat_vec(&[1, 1]));

        // pairing(coroot(a), a) = 2 for every positive root
        for t in all_types_up_to_rank(4) {
            let r = RootSystem::build(t);
            for root in r.positive_roots() {
                let cr = r.coroot(root).unwrap();
                // <root, a^v> = sum_i cr_i * <root, alpha_i^v>
                let pairing: Rational = (0..r.rank())
                    .map(|i| {
                        cr[i].clone()
                            * rational_from_i64(r.pairing_with_simple_coroot(root.coords(), i))
                    })
                    .fold(Rational::zero(), |a, x| a + x);
                assert_eq!(pairing, rational_from_i64(2));
            }
        }
    }

    #[test]
    fn coroot_rejects_non_roots() {
        let r = rs(Family::A, 2);
        assert!(r.coroot(&Root { coords: vec![2, 0] }).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let r = rs(Family::A, 3);
        for i in 0..3 {
            assert_eq!(r.inner(&r.simple_root(i), &r.simple_root(i)), rational_from_i64(2));
        }
        let r = rs(Family::A, 2);
        assert_eq!(r.inner(&r.simple_root(0), &r.simple_root(1)), rational_from_i64(-1));

        // G2 short/long squared length ratio is 1:3
        let r = rs(Family::G, 2);
        let long = r.norm2(&r.simple_root(0));
        let short = r.norm2(&r.simple_root(1));
        assert_eq!((short, long), (2, 6));
    }

    #[test]
    fn simple_reflection_examples() {
        let r = rs(Family::A, 2);
        // s_i(alpha_i) = -alpha_i
        assert_eq!(r.simple_reflection(0, &rat_vec(&[1, 0])).unwrap(), rat_vec(&[-1, 0]));
        // s_1(alpha_2) = alpha_1 + alpha_2
        assert_eq!(r.simple_reflection(0, &rat_vec(&[0, 1])).unwrap(), rat_vec(&[1, 1]));
        // involutive on rational vectors
        let v: Vec<Rational> = vec![
            Rational::new(Int::from(3), Int::from(2)),
            Rational::new(Int::from(-1), Int::from(5)),
        ];
        let w = r.simple_reflection(1, &v).unwrap();
        assert_eq!(r.simple_reflection(1, &w).unwrap(), v);
        // a vector on the wall is fixed: <v, alpha_1^v> = 2*1 - 2 = 0
        let wall = rat_vec(&[1, 2]);
        assert_eq!(r.simple_reflection(0, &wall).unwrap(), wall);
        // out-of-range index
        assert!(r.simple_reflection(2, &rat_vec(&[0, 1])).is_err());
    }

    #[test]
    fn weyl_orbit_examples() {
        let r = rs(Family::A, 2);
        let theta = rat_vec(r.highest_root().coords());
        let orbit = r.weyl_orbit(&theta, 100).unwrap();
        assert_eq!(orbit.len(), 6);

        let zero = rat_vec(&[0, 0]);
        assert_eq!(r.weyl_orbit(&zero, 10).unwrap().len(), 1);

        // C2: orbit of the highest short root is the 4 short roots
        let r = rs(Family::C, 2);
        let theta_s = rat_vec(r.highest_short_root().coords());
        assert_eq!(r.weyl_orbit(&theta_s, 100).unwrap().len(), 4);

        // cap enforcement
        let r = rs(Family::A, 2);
        assert!(matches!(
            r.weyl_orbit(&rat_vec(&[1, 1]), 3),
            Err(RootSystemError::OrbitCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn weyl_order_small_examples() {
        assert_eq!(rs(Family::A, 2).weyl_order(), Int::from(6));
        assert_eq!(rs(Family::C, 2).weyl_order(), Int::from(8));
        assert_eq!(rs(Family::G, 2).weyl_order(), Int::from(12));
        assert_eq!(rs(Family::F, 4).weyl_order(), Int::from(1152));
        assert_eq!(rs(Family::E, 8).weyl_order(), Int::from(696_729_600u64));
    }

    #[test]
    fn exponents_examples() {
        assert_eq!(rs(Family::A, 3).exponents(), vec![1, 2, 3]);
        assert_eq!(rs(Family::E, 8).exponents(), vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(rs(Family::G, 2).exponents(), vec![1, 5]);
    }

    #[test]
    fn symmetrized_cartan_is_symmetric_positive_definite() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let n = r.rank();
            let da = Matrix::from_fn(n, n, |i, j| {
                Rational::from_integer(Int::from(r.symmetrizer()[i] * r.cartan_entry(i, j)))
            });
            assert_eq!(da, da.transpose(), "D*A not symmetric for {t}");
            // positive definite: leading principal minors positive
            for k in 1..=n {
                let minor = Matrix::from_fn(k, k, |i, j| da[(i, j)].clone());
                assert!(minor.det_field().unwrap() > Rational::zero());
            }
        }
    }

    #[test]
    fn short_roots_have_squared_length_two() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let min_norm = r.positive_roots().iter().map(|x| r.norm2(x)).min().unwrap();
            assert_eq!(min_norm, 2, "normalization broken for {t}");
        }
    }
}
