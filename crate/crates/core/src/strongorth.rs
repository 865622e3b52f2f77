//! Strongly orthogonal root sets in the noncompact roots of a Hermitian
//! Vogan datum, and the strongly-orthogonal rank.
//!
//! For a painted node `j` the noncompact positive roots are those whose
//! `alpha_j`-coefficient is odd. Two roots are strongly orthogonal when
//! neither their sum nor their difference is a root; the SO-rank is the
//! maximum size of a pairwise strongly orthogonal subset, computed here as
//! a maximum clique.

use thiserror::Error;

use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrongOrthError {
    #[error("node index {index} out of range 0..{rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("node {node} has highest-root coefficient {label}, expected 1 or 2")]
    NotAnInvolutionNode { node: usize, label: i64 },
    #[error("node {node} has highest-root coefficient {label}; the SO-rank theorem applies to Hermitian nodes (coefficient 1)")]
    NotHermitianNode { node: usize, label: i64 },
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("roots are linearly dependent")]
    DependentRoots,
}

/// The positive noncompact roots attached to a painted node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncompactRootSet {
    pub node: usize,
    pub roots: Vec<Root>,
}

/// Positive roots with odd pairing against `lambda_node^v`, i.e. odd
/// `alpha_node`-coefficient. Covers both label-1 and label-2 paintings.
pub fn noncompact_positive_roots(
    rs: &RootSystem,
    node: usize,
) -> Result<NoncompactRootSet, StrongOrthError> {
    check_node(rs, node)?;
    let label = rs.highest_root_labels()[node];
    if label > 2 {
        return Err(StrongOrthError::NotAnInvolutionNode { node, label });
    }
    let roots: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.coords()[node].rem_euclid(2) == 1)
        .cloned()
        .collect();
    Ok(NoncompactRootSet { node, roots })
}

/// Are `a` and `b` strongly orthogonal: neither `a+b` nor `a-b` a root?
pub fn is_strongly_orthogonal(
    rs: &RootSystem,
    a: &Root,
    b: &Root,
) -> Result<bool, StrongOrthError> {
    if !rs.is_root(a.coords()) || !rs.is_root(b.coords()) {
        return Err(StrongOrthError::NotARoot);
    }
    if dependent(a, b) {
        return Err(StrongOrthError::DependentRoots);
    }
    let sum: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect();
    let diff: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect();
    Ok(!rs.is_root(&sum) && !rs.is_root(&diff))
}

fn dependent(a: &Root, b: &Root) -> bool {
    // roots are dependent iff equal up to sign
    a.coords() == b.coords() || a.coords().iter().zip(b.coords()).all(|(x, y)| *x == -y)
}

fn check_node(rs: &RootSystem, node: usize) -> Result<(), StrongOrthError> {
    if node >= rs.rank() {
        return Err(StrongOrthError::NodeOutOfRange { index: node, rank: rs.rank() });
    }
    Ok(())
}

fn hermitian_node(rs: &RootSystem, node: usize) -> Result<(), StrongOrthError> {
    check_node(rs, node)?;
    let label = rs.highest_root_labels()[node];
    if label != 1 {
        return Err(StrongOrthError::NotHermitianNode { node, label });
    }
    Ok(())
}

/// Strongly-orthogonal rank at a Hermitian node: the maximum cardinality of
/// a pairwise strongly orthogonal subset of the noncompact positive roots.
pub fn so_rank(rs: &RootSystem, node: usize) -> Result<usize, StrongOrthError> {
    hermitian_node(rs, node)?;
    let nc = noncompact_positive_roots(rs, node)?;
    Ok(max_clique(&adjacency(rs, &nc.roots)).len())
}

/// A maximum strongly orthogonal set itself (deterministic).
pub fn so_set(rs: &RootSystem, node: usize) -> Result<Vec<Root>, StrongOrthError> {
    hermitian_node(rs, node)?;
    let nc = noncompact_positive_roots(rs, node)?;
    let clique = max_clique(&adjacency(rs, &nc.roots));
    Ok(clique.into_iter().map(|i| nc.roots[i].clone()).collect())
}

/// Greedy cascade: repeatedly take the highest remaining noncompact root
/// and discard everything not strongly orthogonal to it. Always a strongly
/// orthogonal set; its size is a lower bound for the SO-rank.
pub fn cascade(rs: &RootSystem, node: usize) -> Result<Vec<Root>, StrongOrthError> {
    hermitian_node(rs, node)?;
    let nc = noncompact_positive_roots(rs, node)?;
    let mut remaining = nc.roots;
    let mut out: Vec<Root> = Vec::new();
    while let Some(top) = remaining
        .iter()
        .max_by_key(|r| (r.height(), r.coords().to_vec()))
        .cloned()
    {
        remaining.retain(|r| {
            *r != top && is_strongly_orthogonal(rs, r, &top).unwrap_or(false)
        });
        out.push(top);
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            debug_assert!(is_strongly_orthogonal(rs, &out[i], &out[j]).unwrap());
        }
    }
    Ok(out)
}

fn adjacency(rs: &RootSystem, roots: &[Root]) -> Vec<u64> {
    let n = roots.len();
    assert!(n <= 64, "noncompact root sets stay well under 64 here");
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if is_strongly_orthogonal(rs, &roots[i], &roots[j]).unwrap() {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Branch-and-bound maximum clique with a greedy-coloring bound.
///
/// Vertex indices are assumed ordered by descending height (the natural
/// order of `noncompact_positive_roots` reversed), which the caller
/// guarantees by construction order; instance sizes are at most 27.
fn max_clique(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let order: Vec<usize> = (0..n).rev().collect(); // highest roots first
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    fn coloring_bound(adj: &[u64], candidates: u64) -> usize {
        // greedy coloring: the number of color classes bounds the clique size
        let mut colors = 0usize;
        let mut uncolored = candidates;
        while uncolored != 0 {
            colors += 1;
            let mut class_forbidden = 0u64;
            let mut rest = uncolored;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                let bit = 1u64 << v;
                rest &= !bit;
                if class_forbidden & bit == 0 {
                    uncolored &= !bit;
                    class_forbidden |= adj[v]; // neighbors can't share the class
                }
            }
        }
        colors
    }

    fn expand(
        adj: &[u64],
        order: &[usize],
        current: &mut Vec<usize>,
        candidates: u64,
        best: &mut Vec<usize>,
    ) {
        if candidates == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + coloring_bound(adj, candidates) <= best.len() {
            return;
        }
        let mut cands = candidates;
        for &v in order {
            let bit = 1u64 << v;
            if cands & bit == 0 {
                continue;
            }
            cands &= !bit;
            if current.len() + 1 + (cands.count_ones() as usize) <= best.len() {
                break;
            }
            current.push(v);
            expand(adj, order, current, cands & adj[v], best);
            current.pop();
        }
    }

    let mut current = Vec::new();
    expand(adj, &order, &mut current, full, &mut best);
    best.sort_unstable();
    best
}

/// Exhaustive subset oracle for small instances, used by tests.
pub fn so_rank_by_enumeration(rs: &RootSystem, node: usize) -> Result<usize, StrongOrthError> {
    hermitian_node(rs, node)?;
    let nc = noncompact_positive_roots(rs, node)?;
    let n = nc.roots.len();
    assert!(n <= 20, "enumeration oracle is for small sets");
    let adj = adjacency(rs, &nc.roots);
    let mut best = 0usize;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut ok = true;
        'outer: for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            for j in i + 1..n {
                if mask & (1 << j) != 0 && adj[i] & (1 << j) == 0 {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystemType};

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    fn root(r: &RootSystem, coords: &[i64]) -> Root {
        r.root_from_coords(coords.to_vec()).unwrap()
    }

    #[test]
    fn noncompact_roots_a3_node1() {
        let r = rs(Family::A, 3);
        let nc = noncompact_positive_roots(&r, 0).unwrap();
        let coords: Vec<&[i64]> = nc.roots.iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![&[1, 0, 0][..], &[1, 1, 0], &[1, 1, 1]]);
    }

    #[test]
    fn noncompact_roots_c2_node2() {
        let r = rs(Family::C, 2);
        let nc = noncompact_positive_roots(&r, 1).unwrap();
        let coords: Vec<&[i64]> = nc.roots.iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![&[0, 1][..], &[1, 1], &[2, 1]]);
    }

    #[test]
    fn noncompact_roots_e7_count_27() {
        let r = rs(Family::E, 7);
        // the label-1 node of E7 is Bourbaki node 7
        let nc = noncompact_positive_roots(&r, 6).unwrap();
        assert_eq!(nc.roots.len(), 27);
    }

    #[test]
    fn noncompact_rejects_bad_nodes() {
        let r = rs(Family::G, 2);
        assert!(matches!(
            noncompact_positive_roots(&r, 1),
            Err(StrongOrthError::NotAnInvolutionNode { node: 1, label: 3 })
        ));
        assert!(matches!(
            noncompact_positive_roots(&r, 5),
            Err(StrongOrthError::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn strong_orthogonality_examples() {
        let r = rs(Family::C, 2);
        // alpha_2 and 2a1+a2: neither 2a1 nor 2a1+2a2 is a root
        assert!(is_strongly_orthogonal(&r, &root(&r, &[0, 1]), &root(&r, &[2, 1])).unwrap());

        let r = rs(Family::A, 2);
        assert!(!is_strongly_orthogonal(&r, &root(&r, &[1, 0]), &root(&r, &[0, 1])).unwrap());

        let r = rs(Family::A, 3);
        assert!(is_strongly_orthogonal(&r, &root(&r, &[1, 0, 0]), &root(&r, &[0, 0, 1])).unwrap());

        // dependent roots are rejected
        let a = root(&r, &[1, 0, 0]);
        assert!(matches!(
            is_strongly_orthogonal(&r, &a, &a),
            Err(StrongOrthError::DependentRoots)
        ));
        let neg = a.negated();
        assert!(matches!(
            is_strongly_orthogonal(&r, &a, &neg),
            Err(StrongOrthError::DependentRoots)
        ));
    }

    #[test]
    fn so_rank_examples() {
        // A_n node p: min(p, n+1-p)
        for n in 1..=5 {
            let r = rs(Family::A, n);
            for j in 0..n {
                let p = (j + 1).min(n - j);
                assert_eq!(so_rank(&r, j).unwrap(), p, "A{n} node {}", j + 1);
            }
        }
        // C2 node 2: rank 2
        assert_eq!(so_rank(&rs(Family::C, 2), 1).unwrap(), 2);
        // E7's Hermitian node: rank 3
        assert_eq!(so_rank(&rs(Family::E, 7), 6).unwrap(), 3);
    }

    #[test]
    fn so_rank_rejects_non_hermitian_nodes() {
        let r = rs(Family::B, 3);
        assert!(matches!(
            so_rank(&r, 1),
            Err(StrongOrthError::NotHermitianNode { node: 1, label: 2 })
        ));
    }

    #[test]
    fn so_sets_are_orthogonal() {
        // strong orthogonality implies orthogonality
        for (f, n, node) in [
            (Family::A, 4, 1),
            (Family::C, 3, 2),
            (Family::D, 5, 0),
            (Family::D, 5, 4),
            (Family::E, 6, 0),
            (Family::E, 7, 6),
        ] {
            let r = rs(f, n);
            let set = so_set(&r, node).unwrap();
            for i in 0..set.len() {
                for j in i + 1..set.len() {
                    assert!(is_strongly_orthogonal(&r, &set[i], &set[j]).unwrap());
                    assert_eq!(r.inner_i64(&set[i], &set[j]), 0, "SO pair not orthogonal");
                }
            }
        }
    }

    #[test]
    fn cascade_examples() {
        let r = rs(Family::A, 3);
        // node 2: two strongly orthogonal noncompact roots exist
        let c = cascade(&r, 1).unwrap();
        assert_eq!(c.len(), 2);
        // node 1: the three noncompact roots are pairwise non-SO
        let c = cascade(&r, 0).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].coords(), &[1, 1, 1]); // the highest root

        let r = rs(Family::C, 2);
        let c = cascade(&r, 1).unwrap();
        let coords: Vec<&[i64]> = c.iter().map(|x| x.coords()).collect();
        assert_eq!(coords, vec![&[2, 1][..], &[0, 1]]);
    }

    #[test]
    fn cascade_matches_so_rank_on_hermitian_nodes() {
        for (f, max_rank) in [(Family::A, 6), (Family::B, 6), (Family::C, 6), (Family::D, 6)] {
            for n in 1..=max_rank {
                let Ok(t) = RootSystemType::new(f, n) else { continue };
                let r = RootSystem::build(t);
                for j in 0..n {
                    if r.highest_root_labels()[j] != 1 {
                        continue;
                    }
                    assert_eq!(
                        cascade(&r, j).unwrap().len(),
                        so_rank(&r, j).unwrap(),
                        "greedy cascade fell short at {t} node {}",
                        j + 1
                    );
                }
            }
        }
        for (f, n, j) in [(Family::E, 6, 0), (Family::E, 6, 5), (Family::E, 7, 6)] {
            let r = rs(f, n);
            assert_eq!(cascade(&r, j).unwrap().len(), so_rank(&r, j).unwrap());
        }
    }

    #[test]
    fn clique_matches_enumeration_oracle() {
        for (f, n) in [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let r = rs(f, n);
            for j in 0..n {
                if r.highest_root_labels()[j] != 1 {
                    continue;
                }
                let nc = noncompact_positive_roots(&r, j).unwrap();
                if nc.roots.len() > 12 {
                    continue;
                }
                assert_eq!(so_rank(&r, j).unwrap(), so_rank_by_enumeration(&r, j).unwrap());
            }
        }
    }
}
