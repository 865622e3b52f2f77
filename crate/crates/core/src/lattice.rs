//! Weight and root lattices and their quotients.
//!
//! Roots live in the simple-root basis, coweights in the dual
//! fundamental-coweight basis, so the coroot lattice is spanned by the rows
//! of the Cartan matrix and every quotient is a Smith-normal-form
//! computation. `center_sc` computes Z(G_sc) as P/Q; the minuscule-coweight
//! count provides an independent route to its order.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::rootsys::RootSystem;
use crate::snf::smith_normal_form;
use crate::{rational_from_i64, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector has length {found}, expected rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice basis must be square of size {expected}, got {rows}x{cols}")]
    BadBasis { expected: usize, rows: usize, cols: usize },
    #[error("basis is singular")]
    SingularBasis,
    #[error("lattice is not between the coroot and coweight lattices")]
    NotBetween,
}

/// A rational vector in the fundamental-coweight basis, i.e. an element of
/// the torus Lie algebra; pairing with the root `sum m_j alpha_j` is
/// `sum c_j m_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoweightVector {
    coeffs: Vec<Rational>,
}

impl CoweightVector {
    pub fn new(coeffs: Vec<Rational>) -> CoweightVector {
        CoweightVector { coeffs }
    }

    pub fn zero(rank: usize) -> CoweightVector {
        CoweightVector { coeffs: vec![Rational::zero(); rank] }
    }

    /// The fundamental coweight dual to node `j` (0-based).
    pub fn fundamental(rank: usize, j: usize) -> CoweightVector {
        assert!(j < rank);
        let mut coeffs = vec![Rational::zero(); rank];
        coeffs[j] = rational_from_i64(1);
        CoweightVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// `v(alpha)` for a root in simple-root coordinates.
    pub fn pairing(&self, root_coords: &[i64]) -> Result<Rational, LatticeError> {
        if root_coords.len() != self.coeffs.len() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.coeffs.len(),
                found: root_coords.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(root_coords)
            .map(|(c, &m)| c.clone() * rational_from_i64(m))
            .fold(Rational::zero(), |a, x| a + x))
    }

    pub fn scale(&self, factor: &Rational) -> CoweightVector {
        CoweightVector { coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect() }
    }
}

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Finite abelian group in invariant-factor form `Z/d1 x Z/d2 x ...` with
/// `d1 | d2 | ...`, all factors at least 2; the empty list is the trivial
/// group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<i64>) -> FiniteAbelianGroup {
        for (i, d) in invariant_factors.iter().enumerate() {
            assert!(*d >= 2, "invariant factors must be at least 2");
            if i + 1 < invariant_factors.len() {
                assert_eq!(invariant_factors[i + 1] % d, 0, "divisibility chain broken");
            }
        }
        FiniteAbelianGroup { invariant_factors }
    }

    pub fn trivial() -> FiniteAbelianGroup {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> i64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "trivial")
        } else {
            let parts: Vec<String> =
                self.invariant_factors.iter().map(|d| format!("C{d}")).collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Center of the simply connected compact group: `Z(G_sc) = P/Q`, computed
/// from the Smith normal form of the Cartan matrix.
pub fn center_sc(rs: &RootSystem) -> FiniteAbelianGroup {
    let snf = smith_normal_form(rs.cartan());
    FiniteAbelianGroup::new(snf.invariant_factors())
}

/// Nodes `j` with `lambda_j^v(theta) = 1`, i.e. highest-root coefficient 1.
pub fn minuscule_coweights(rs: &RootSystem) -> Vec<usize> {
    rs.highest_root_labels()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .map(|(j, _)| j)
        .collect()
}

/// Order of the center counted via minuscule coweights: one per nontrivial
/// central element, plus the identity.
pub fn center_via_minuscule(rs: &RootSystem) -> usize {
    1 + minuscule_coweights(rs).len()
}

/// Candidate involution sites: nodes whose highest-root coefficient is 1
/// or 2.
pub fn order_two_nodes(rs: &RootSystem) -> Vec<usize> {
    rs.highest_root_labels()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1 || d == 2)
        .map(|(j, _)| j)
        .collect()
}

/// An integer lattice `L` in the coweight space, spanned by the rows of
/// `basis` (coordinates in the fundamental-coweight basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightLattice {
    basis: Matrix<i64>,
}

impl CoweightLattice {
    pub fn from_basis(rank: usize, basis: Matrix<i64>) -> Result<CoweightLattice, LatticeError> {
        if basis.rows() != rank || basis.cols() != rank {
            return Err(LatticeError::BadBasis {
                expected: rank,
                rows: basis.rows(),
                cols: basis.cols(),
            });
        }
        if basis.det().expect("square").is_zero() {
            return Err(LatticeError::SingularBasis);
        }
        Ok(CoweightLattice { basis })
    }

    /// The coroot lattice `Q^v`, spanned by the rows of the Cartan matrix.
    pub fn coroot_lattice(rs: &RootSystem) -> CoweightLattice {
        CoweightLattice { basis: rs.cartan().clone() }
    }

    /// The full coweight lattice `P^v` (the identity basis).
    pub fn coweight_lattice(rs: &RootSystem) -> CoweightLattice {
        CoweightLattice { basis: Matrix::identity(rs.rank()) }
    }

    pub fn basis(&self) -> &Matrix<i64> {
        &self.basis
    }

    /// Does `self` contain `other` as a sublattice?
    pub fn contains(&self, other: &CoweightLattice) -> bool {
        // other = C * self for an integer matrix C
        let b = self.basis.map(|&x| rational_from_i64(x));
        let bt = b.transpose();
        for i in 0..other.basis.rows() {
            let row: Vec<Rational> =
                other.basis.row(i).iter().map(|&x| rational_from_i64(x)).collect();
            match bt.solve(&row).expect("square") {
                None => return false,
                Some(coeffs) => {
                    if !coeffs.iter().all(|c| c.is_integer()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{all_types_up_to_rank, Family, RootSystem, RootSystemType};
    use crate::Int;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    #[test]
    fn center_of_an_is_cyclic() {
        for n in 1..=8 {
            let r = rs(Family::A, n);
            let z = center_sc(&r);
            assert_eq!(z.invariant_factors(), &[n as i64 + 1]);
        }
    }

    #[test]
    fn center_of_e8_is_trivial() {
        assert!(center_sc(&rs(Family::E, 8)).is_trivial());
    }

    #[test]
    fn center_of_d4_is_two_by_two() {
        let z = center_sc(&rs(Family::D, 4));
        assert_eq!(z.invariant_factors(), &[2, 2]);
        assert_eq!(z.order(), 4);
    }

    #[test]
    fn center_order_equals_cartan_determinant() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let det = r.cartan().det().unwrap().abs();
            assert_eq!(center_sc(&r).order(), det, "order != |det| for {t}");
        }
    }

    #[test]
    fn minuscule_examples() {
        assert_eq!(minuscule_coweights(&rs(Family::A, 3)), vec![0, 1, 2]);
        assert_eq!(minuscule_coweights(&rs(Family::E, 7)), vec![6]);
        assert!(minuscule_coweights(&rs(Family::E, 8)).is_empty());
        // D5 labels are 1,2,2,1,1
        assert_eq!(minuscule_coweights(&rs(Family::D, 5)), vec![0, 3, 4]);
        assert_eq!(center_via_minuscule(&rs(Family::D, 5)), 4);
        assert_eq!(center_via_minuscule(&rs(Family::G, 2)), 1);
        assert_eq!(center_via_minuscule(&rs(Family::A, 4)), 5);
    }

    #[test]
    fn minuscule_count_matches_center_order() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            assert_eq!(
                center_via_minuscule(&r) as i64,
                center_sc(&r).order(),
                "lemma fails for {t}"
            );
        }
    }

    #[test]
    fn minuscule_nodes_pair_to_one_with_theta() {
        for t in all_types_up_to_rank(8) {
            let r = RootSystem::build(t);
            let theta = r.highest_root().coords();
            for j in 0..r.rank() {
                let v = CoweightVector::fundamental(r.rank(), j);
                let pairing = v.pairing(theta).unwrap();
                let is_minuscule = minuscule_coweights(&r).contains(&j);
                assert_eq!(pairing == rational_from_i64(1), is_minuscule);
                // lambda_j^v(theta) = d_j in general
                assert_eq!(pairing, rational_from_i64(r.highest_root_labels()[j]));
            }
        }
    }

    #[test]
    fn order_two_node_examples() {
        assert_eq!(order_two_nodes(&rs(Family::A, 4)), vec![0, 1, 2, 3]);
        // E8 labels 2,3,4,6,5,4,3,2: the two label-2 nodes
        assert_eq!(order_two_nodes(&rs(Family::E, 8)), vec![0, 7]);
        // F4 labels 2,3,4,2: both ends
        assert_eq!(order_two_nodes(&rs(Family::F, 4)), vec![0, 3]);
    }

    #[test]
    fn pairing_examples() {
        let r = rs(Family::B, 3);
        for j in 0..3 {
            let v = CoweightVector::fundamental(3, j);
            let delta = v.pairing(r.simple_root(j).coords()).unwrap();
            assert_eq!(delta, rational_from_i64(1));
            for k in 0..3 {
                if k != j {
                    assert_eq!(
                        v.pairing(r.simple_root(k).coords()).unwrap(),
                        Rational::zero()
                    );
                }
            }
        }
        let zero = CoweightVector::zero(3);
        assert_eq!(zero.pairing(r.highest_root().coords()).unwrap(), Rational::zero());
        // dimension mismatch
        assert!(zero.pairing(&[1, 0]).is_err());
    }

    #[test]
    fn integral_coweights_pair_integrally_with_all_roots() {
        for t in all_types_up_to_rank(6) {
            let r = RootSystem::build(t);
            let v = CoweightVector::new(
                (0..r.rank()).map(|j| rational_from_i64(3 - j as i64)).collect(),
            );
            for root in r.positive_roots() {
                let p = v.pairing(root.coords()).unwrap();
                assert!(p.is_integer(), "non-integral pairing in {t}");
            }
        }
    }

    #[test]
    fn lattice_containments() {
        let r = rs(Family::D, 4);
        let q = CoweightLattice::coroot_lattice(&r);
        let p = CoweightLattice::coweight_lattice(&r);
        assert!(p.contains(&q));
        assert!(!q.contains(&p));
        assert!(p.contains(&p));
        assert!(q.contains(&q));
    }

    #[test]
    fn abelian_group_display() {
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "trivial");
        assert_eq!(FiniteAbelianGroup::new(vec![2, 2]).to_string(), "C2 x C2");
        assert_eq!(FiniteAbelianGroup::new(vec![4]).to_string(), "C4");
        let _ = Int::from(0); // keep Int import used in this module's tests
    }
}
