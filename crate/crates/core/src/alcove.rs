//! The affine Weyl group's fundamental alcove and point reduction.
//!
//! Points live in the fundamental-coweight basis, where evaluating the
//! simple root `alpha_i` is just reading coordinate `i` and evaluating the
//! highest root is the label-weighted coordinate sum. The closed fundamental
//! alcove for the simply connected group is `{x : alpha_i(x) >= 0,
//! theta(x) <= 1}`, with vertices at the origin and `lambda_j^v / d_j`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{CoweightLattice, CoweightVector};
use crate::rootsys::{Root, RootSystem};
use crate::{rational_from_i64, Int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlcoveError {
    #[error("point has rank {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice is not between the coroot lattice and the coweight lattice")]
    LatticeNotBetween,
}

/// A point of the torus Lie algebra in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcovePoint {
    coords: CoweightVector,
}

impl AlcovePoint {
    pub fn new(coords: CoweightVector) -> AlcovePoint {
        AlcovePoint { coords }
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> AlcovePoint {
        AlcovePoint { coords: CoweightVector::new(coeffs) }
    }

    pub fn coords(&self) -> &CoweightVector {
        &self.coords
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.coords.coeffs()
    }
}

/// Where a point sits relative to the closed fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlcovePosition {
    Interior,
    /// On the boundary: all hyperplanes `alpha(x) = n` through the point
    /// that meet the closed alcove (levels 0 and 1 only).
    OnWall(Vec<(Root, i64)>),
    /// Coincides with vertex `i` of `alcove_vertices` (0 is the origin).
    Vertex(usize),
    Exterior,
}

/// One step of an affine Weyl word, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineStep {
    /// Translation by an element of the coroot lattice.
    Translate(Vec<Rational>),
    /// Reflection in the wall `alpha_i(x) = 0`.
    Reflect(usize),
    /// Reflection in the wall `theta(x) = 1`.
    ReflectHighest,
}

/// `theta(x)` in coweight coordinates.
pub fn theta_value(rs: &RootSystem, coeffs: &[Rational]) -> Rational {
    rs.highest_root_labels()
        .iter()
        .zip(coeffs)
        .map(|(&d, c)| rational_from_i64(d) * c.clone())
        .fold(Rational::zero(), |a, x| a + x)
}

/// Simple reflection acting on coweight coordinates:
/// `s_i(x) = x - alpha_i(x) * alpha_i^v`.
pub fn reflect_coweight(rs: &RootSystem, i: usize, coeffs: &[Rational]) -> Vec<Rational> {
    let ci = coeffs[i].clone();
    coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c.clone() - ci.clone() * rational_from_i64(rs.cartan_entry(i, j)))
        .collect()
}

/// Affine reflection in `theta(x) = 1`.
fn reflect_theta_wall(rs: &RootSystem, coeffs: &[Rational]) -> Vec<Rational> {
    let excess = theta_value(rs, coeffs) - rational_from_i64(1);
    let theta_coroot = theta_coroot_coords(rs);
    coeffs
        .iter()
        .zip(&theta_coroot)
        .map(|(c, t)| c.clone() - excess.clone() * t.clone())
        .collect()
}

/// `theta^v` in coweight coordinates.
fn theta_coroot_coords(rs: &RootSystem) -> Vec<Rational> {
    let k = rs.coroot(rs.highest_root()).expect("theta is a root");
    (0..rs.rank())
        .map(|j| {
            (0..rs.rank())
                .map(|i| k[i].clone() * rational_from_i64(rs.cartan_entry(i, j)))
                .fold(Rational::zero(), |a, x| a + x)
        })
        .collect()
}

/// Vertices of the closed fundamental alcove: the origin and
/// `lambda_j^v / d_j` for each node `j`.
pub fn alcove_vertices(rs: &RootSystem) -> Vec<AlcovePoint> {
    let n = rs.rank();
    let mut out = vec![AlcovePoint::new(CoweightVector::zero(n))];
    for j in 0..n {
        let d = rs.highest_root_labels()[j];
        let v = CoweightVector::fundamental(n, j)
            .scale(&Rational::new(Int::from(1), Int::from(d)));
        out.push(AlcovePoint::new(v));
    }
    out
}

/// Classifies `p` against the closed fundamental alcove.
pub fn locate(rs: &RootSystem, p: &AlcovePoint) -> Result<AlcovePosition, AlcoveError> {
    let n = rs.rank();
    if p.coeffs().len() != n {
        return Err(AlcoveError::DimensionMismatch { expected: n, found: p.coeffs().len() });
    }
    let coeffs = p.coeffs();
    let one = rational_from_i64(1);
    if coeffs.iter().any(|c| c.is_negative()) || theta_value(rs, coeffs) > one {
        return Ok(AlcovePosition::Exterior);
    }
    for (idx, v) in alcove_vertices(rs).iter().enumerate() {
        if v.coeffs() == coeffs {
            return Ok(AlcovePosition::Vertex(idx));
        }
    }
    let mut walls = Vec::new();
    for root in rs.positive_roots() {
        let val = p.coords().pairing(root.coords()).expect("rank checked");
        if val.is_zero() {
            walls.push((root.clone(), 0));
        } else if val == one {
            walls.push((root.clone(), 1));
        }
    }
    if walls.is_empty() {
        Ok(AlcovePosition::Interior)
    } else {
        Ok(AlcovePosition::OnWall(walls))
    }
}

fn in_closed_alcove(rs: &RootSystem, coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| !c.is_negative()) && theta_value(rs, coeffs) <= rational_from_i64(1)
}

/// Reduces `p` to the unique representative of its affine-Weyl orbit in the
/// closed fundamental alcove, returning the applied word.
///
/// Strategy: translate by the coroot lattice into a bounded box, then
/// repeatedly reflect in the most-violated defining wall (ties broken by
/// lowest root index, the theta wall last). Each reflection is in a
/// hyperplane separating the point from the alcove, so the number of
/// separating hyperplanes strictly decreases and the loop terminates.
pub fn reduce_to_alcove(
    rs: &RootSystem,
    p: &AlcovePoint,
) -> Result<(AlcovePoint, Vec<AffineStep>), AlcoveError> {
    let n = rs.rank();
    if p.coeffs().len() != n {
        return Err(AlcoveError::DimensionMismatch { expected: n, found: p.coeffs().len() });
    }
    let mut coeffs = p.coeffs().to_vec();
    let mut word = Vec::new();

    if !in_closed_alcove(rs, &coeffs) {
        // f * lambda_j^v lies in the coroot lattice for f = [P^v : Q^v]
        let f = rational_from_i64(rs.cartan().det().expect("square").abs());
        let half = Rational::new(Int::from(1), Int::from(2));
        let shift: Vec<Rational> = coeffs
            .iter()
            .map(|c| {
                let nearest = (c.clone() / f.clone() + half.clone()).floor();
                -(nearest * f.clone())
            })
            .collect();
        if shift.iter().any(|s| !s.is_zero()) {
            for (c, s) in coeffs.iter_mut().zip(&shift) {
                *c += s.clone();
            }
            word.push(AffineStep::Translate(shift));
        }

        let one = rational_from_i64(1);
        let mut guard = 0usize;
        loop {
            // most-violated constraint among alpha_i(x) >= 0 and theta(x) <= 1
            let mut worst: Option<(Rational, usize)> = None; // (violation, index; n = theta)
            for (i, c) in coeffs.iter().enumerate() {
                if c.is_negative() {
                    let v = -c.clone();
                    if worst.as_ref().map_or(true, |(w, _)| v > *w) {
                        worst = Some((v, i));
                    }
                }
            }
            let theta_excess = theta_value(rs, &coeffs) - one.clone();
            if theta_excess.is_positive()
                && worst.as_ref().map_or(true, |(w, _)| theta_excess > *w)
            {
                worst = Some((theta_excess, n));
            }
            match worst {
                None => break,
                Some((_, i)) if i < n => {
                    coeffs = reflect_coweight(rs, i, &coeffs);
                    word.push(AffineStep::Reflect(i));
                }
                Some(_) => {
                    coeffs = reflect_theta_wall(rs, &coeffs);
                    word.push(AffineStep::ReflectHighest);
                }
            }
            guard += 1;
            assert!(guard < 1_000_000, "alcove reduction failed to terminate");
        }
    }

    debug_assert!(in_closed_alcove(rs, &coeffs));
    Ok((AlcovePoint::from_rationals(coeffs), word))
}

/// Applies a word produced by [`reduce_to_alcove`] to a point.
pub fn apply_word(rs: &RootSystem, p: &AlcovePoint, word: &[AffineStep]) -> AlcovePoint {
    let mut coeffs = p.coeffs().to_vec();
    for step in word {
        match step {
            AffineStep::Translate(v) => {
                for (c, s) in coeffs.iter_mut().zip(v) {
                    *c += s.clone();
                }
            }
            AffineStep::Reflect(i) => coeffs = reflect_coweight(rs, *i, &coeffs),
            AffineStep::ReflectHighest => coeffs = reflect_theta_wall(rs, &coeffs),
        }
    }
    AlcovePoint::from_rationals(coeffs)
}

/// Index `[L : Q^v]` of the coroot lattice inside `L`, for `Q^v <= L <= P^v`.
///
/// The fundamental domain of `W ⋉ τ(L)` has `1/index` times the volume of
/// the simply connected alcove.
pub fn translation_index(rs: &RootSystem, l: &CoweightLattice) -> Result<i64, AlcoveError> {
    let q = CoweightLattice::coroot_lattice(rs);
    let p = CoweightLattice::coweight_lattice(rs);
    if !l.contains(&q) || !p.contains(l) {
        return Err(AlcoveError::LatticeNotBetween);
    }
    let det_q = rs.cartan().det().expect("square").abs();
    let det_l = l.basis().det().expect("square").abs();
    debug_assert_eq!(det_q % det_l, 0);
    Ok(det_q / det_l)
}
