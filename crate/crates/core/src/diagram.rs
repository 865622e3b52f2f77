//! Dynkin diagrams, their extended (affine) variants, and recognition of
//! diagram components after node deletions.

use std::fmt;

use crate::rootsys::{Family, RootSystem};

/// A diagram node: either the simple root `alpha_i` (0-based) or the affine
/// node carrying `-theta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeRef {
    Simple(usize),
    Affine,
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRef::Simple(i) => write!(f, "{}", i + 1),
            NodeRef::Affine => write!(f, "0"),
        }
    }
}

/// Edge between positions `a` and `b` of the node list. `bond` is
/// `<a,b^v><b,a^v>`; `shorter` points at the strictly shorter endpoint (the
/// arrow tip) when the lengths differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinEdge {
    pub a: usize,
    pub b: usize,
    pub bond: i64,
    pub shorter: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    /// Node identities, in display order.
    pub nodes: Vec<NodeRef>,
    /// Highest-root coefficient per node (1 for the affine node).
    pub labels: Vec<i64>,
    /// Half squared length per node, to orient multiple bonds.
    pub half_norms: Vec<i64>,
    pub edges: Vec<DynkinEdge>,
}

impl DynkinDiagram {
    /// Diagram of the simple roots of `rs`, labelled by the highest root.
    pub fn from_root_system(rs: &RootSystem) -> DynkinDiagram {
        let n = rs.rank();
        let nodes: Vec<NodeRef> = (0..n).map(NodeRef::Simple).collect();
        let labels = rs.highest_root_labels().to_vec();
        let half_norms = rs.symmetrizer().to_vec();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let bond = rs.cartan_entry(i, j) * rs.cartan_entry(j, i);
                if bond != 0 {
                    edges.push(edge(i, j, bond, &half_norms));
                }
            }
        }
        DynkinDiagram { nodes, labels, half_norms, edges }
    }

    /// Extended diagram: appends the affine node `-theta`, attached to each
    /// simple node by bond `<theta, a_i^v><a_i, theta^v>`.
    pub fn extended(rs: &RootSystem) -> DynkinDiagram {
        let mut d = DynkinDiagram::from_root_system(rs);
        let theta = rs.highest_root();
        let affine_pos = d.nodes.len();
        d.nodes.push(NodeRef::Affine);
        d.labels.push(1);
        d.half_norms.push(rs.norm2(theta) / 2);
        for i in 0..rs.rank() {
            let pair_theta_iv = rs.pairing_with_simple_coroot(theta.coords(), i);
            // <alpha_i, theta^v> = 2 (alpha_i, theta) / (theta, theta)
            let inner = rs.inner_i64(&rs.simple_root(i), theta);
            let pair_i_thetav = 2 * inner / rs.norm2(theta);
            let bond = pair_theta_iv * pair_i_thetav;
            if bond != 0 {
                d.edges.push(edge(i, affine_pos, bond, &d.half_norms));
            }
        }
        d
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Neighbour positions of node position `p`.
    pub fn neighbors(&self, p: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.a == p {
                out.push(e.b);
            } else if e.b == p {
                out.push(e.a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Diagram with node position `p` removed (positions are renumbered).
    pub fn remove_node(&self, p: usize) -> DynkinDiagram {
        let keep: Vec<usize> = (0..self.len()).filter(|&q| q != p).collect();
        let reindex = |q: usize| keep.iter().position(|&r| r == q).unwrap();
        DynkinDiagram {
            nodes: keep.iter().map(|&q| self.nodes[q]).collect(),
            labels: keep.iter().map(|&q| self.labels[q]).collect(),
            half_norms: keep.iter().map(|&q| self.half_norms[q]).collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.a != p && e.b != p)
                .map(|e| DynkinEdge {
                    a: reindex(e.a),
                    b: reindex(e.b),
                    bond: e.bond,
                    shorter: e.shorter.map(reindex),
                })
                .collect(),
        }
    }

    /// Position of a node in the node list.
    pub fn position_of(&self, node: NodeRef) -> Option<usize> {
        self.nodes.iter().position(|&x| x == node)
    }

    /// Connected components as sorted lists of node positions.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(p) = queue.pop() {
                for q in self.neighbors(p) {
                    if !seen[q] {
                        seen[q] = true;
                        comp.push(q);
                        queue.push(q);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Identifies each connected component as a (family, rank) pair, sorted.
    ///
    /// Two-node double-bond components are reported as B2. This is used to
    /// check isotropy algebras after node deletions, so only shapes reachable
    /// that way need recognizing.
    pub fn identify_components(&self) -> Vec<(Family, usize)> {
        let mut out: Vec<(Family, usize)> =
            self.components().iter().map(|c| self.identify_component(c)).collect();
        out.sort();
        out
    }

    fn identify_component(&self, comp: &[usize]) -> (Family, usize) {
        let k = comp.len();
        if k == 1 {
            return (Family::A, 1);
        }
        let edges: Vec<&DynkinEdge> =
            self.edges.iter().filter(|e| comp.contains(&e.a) && comp.contains(&e.b)).collect();
        if edges.iter().any(|e| e.bond == 3) {
            return (Family::G, 2);
        }
        let degree = |p: usize| edges.iter().filter(|e| e.a == p || e.b == p).count();
        if let Some(double) = edges.iter().find(|e| e.bond == 2) {
            if k == 2 {
                return (Family::B, 2);
            }
            if degree(double.a) == 2 && degree(double.b) == 2 {
                return (Family::F, 4);
            }
            // double bond at a chain end: B if the terminal node is the
            // shorter one, C otherwise
            let terminal = if degree(double.a) == 1 { double.a } else { double.b };
            if double.shorter == Some(terminal) {
                return (Family::B, k);
            }
            return (Family::C, k);
        }
        // simply laced: look for a degree-3 branch node
        match comp.iter().find(|&&p| degree(p) == 3) {
            None => (Family::A, k),
            Some(&branch) => {
                let mut leg_lengths: Vec<usize> = self
                    .neighbors(branch)
                    .into_iter()
                    .filter(|q| comp.contains(q))
                    .map(|mut q| {
                        let mut len = 1;
                        let mut prev = branch;
                        loop {
                            let next: Vec<usize> = self
                                .neighbors(q)
                                .into_iter()
                                .filter(|&r| r != prev && comp.contains(&r))
                                .collect();
                            match next.as_slice() {
                                [r] => {
                                    prev = q;
                                    q = *r;
                                    len += 1;
                                }
                                _ => break,
                            }
                        }
                        len
                    })
                    .collect();
                leg_lengths.sort_unstable();
                match leg_lengths.as_slice() {
                    [1, 1, _] => (Family::D, k),
                    [1, 2, _] if (6..=8).contains(&k) => (Family::E, k),
                    other => panic!("unrecognized simply-laced branch shape {other:?}"),
                }
            }
        }
    }
}

fn edge(a: usize, b: usize, bond: i64, half_norms: &[i64]) -> DynkinEdge {
    let shorter = match half_norms[a].cmp(&half_norms[b]) {
        std::cmp::Ordering::Less => Some(a),
        std::cmp::Ordering::Greater => Some(b),
        std::cmp::Ordering::Equal => None,
    };
    DynkinEdge { a, b, bond, shorter }
}
