//! The graded algebra carrying the Z/p-cohomology of a pro-p RAAG: the
//! exterior algebra on dual vertices modulo wedges of non-adjacent vertices.
//! Degree-n basis elements are the n-cliques of the graph, so dimensions are
//! clique counts, and the cup product is the wedge with the usual sign rule.
//! The relation v∧v = 0 is imposed structurally for every p, including p = 2.

use crate::fp::{FpMatrix, Prime};
use crate::graph::SimplicialGraph;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SrError {
    #[error("cochains belong to different algebras")]
    AlgebraMismatch,
    #[error("support subset is empty")]
    EmptySupport,
    #[error("cochain has degree {0}, expected {1}")]
    WrongDegree(usize, usize),
}

/// The cohomology algebra of the RAAG on a graph, with its per-degree clique
/// bases. Degrees are materialized up to the clique number; everything above
/// is zero.
pub struct SRAlgebra {
    graph: SimplicialGraph,
    p: Prime,
    /// bases[n] = sorted n-cliques; bases[0] = [[]]
    bases: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

/// Element of the algebra in a fixed degree, as a coefficient vector over
/// the clique basis. Degree-1 cochains are the characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coeffs: Vec<u32>,
}

impl SRAlgebra {
    pub fn new(graph: SimplicialGraph, p: Prime) -> Self {
        let top = graph.clique_number();
        let mut bases = Vec::with_capacity(top + 1);
        let mut index = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let cliques = graph.enumerate_cliques(n);
            let map = cliques.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
            bases.push(cliques);
            index.push(map);
        }
        Self { graph, p, bases, index }
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// dim Λ_n = number of n-cliques (0 above the clique number).
    pub fn dim(&self, n: usize) -> usize {
        self.bases.get(n).map_or(0, |b| b.len())
    }

    pub fn basis(&self, n: usize) -> &[Vec<usize>] {
        self.bases.get(n).map_or(&[], |b| b.as_slice())
    }

    pub fn zero(&self, degree: usize) -> Cochain {
        Cochain { degree, coeffs: vec![0; self.dim(degree)] }
    }

    /// The dual vertex character χ_i.
    pub fn character(&self, i: usize) -> Cochain {
        let mut c = self.zero(1);
        c.coeffs[i] = 1;
        c
    }

    /// Character with the given coefficient vector.
    pub fn character_from(&self, coeffs: &[i64]) -> Cochain {
        assert_eq!(coeffs.len(), self.dim(1));
        Cochain { degree: 1, coeffs: coeffs.iter().map(|&x| self.p.reduce(x)).collect() }
    }

    /// Sum of χ_i over a vertex subset.
    pub fn support_character(&self, support: &[usize]) -> Cochain {
        let mut c = self.zero(1);
        for &v in support {
            c.coeffs[v] = 1;
        }
        c
    }

    fn check(&self, a: &Cochain) -> Result<(), SrError> {
        if a.coeffs.len() != self.dim(a.degree) {
            return Err(SrError::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &Cochain, b: &Cochain) -> Result<Cochain, SrError> {
        self.check(a)?;
        self.check(b)?;
        if a.degree != b.degree {
            return Err(SrError::WrongDegree(b.degree, a.degree));
        }
        let coeffs =
            a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.p.add(x, y)).collect();
        Ok(Cochain { degree: a.degree, coeffs })
    }

    pub fn scale(&self, a: &Cochain, s: i64) -> Cochain {
        let s = self.p.reduce(s);
        Cochain {
            degree: a.degree,
            coeffs: a.coeffs.iter().map(|&x| self.p.mul(x, s)).collect(),
        }
    }

    /// Bilinear wedge product. Basis monomials multiply by sorting indices
    /// with the permutation sign; a repeated index or a non-clique result
    /// kills the term.
    pub fn wedge(&self, a: &Cochain, b: &Cochain) -> Result<Cochain, SrError> {
        self.check(a)?;
        self.check(b)?;
        let degree = a.degree + b.degree;
        let mut out = self.zero(degree);
        if self.dim(degree) == 0 {
            return Ok(out);
        }
        let abasis = self.basis(a.degree);
        let bbasis = self.basis(b.degree);
        for (ia, ca) in a.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (ib, cb) in b.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
                if let Some((key, sign)) = merge_sorted(&abasis[ia], &bbasis[ib]) {
                    if let Some(&pos) = self.index[degree].get(&key) {
                        let mut term = self.p.mul(*ca, *cb);
                        if sign < 0 {
                            term = self.p.neg(term);
                        }
                        out.coeffs[pos] = self.p.add(out.coeffs[pos], term);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of β ↦ β ⌣ α from degree 1 to degree 2, in the clique bases.
    /// Column i holds the coordinates of χ_i ∧ α.
    pub fn cup_matrix(&self, alpha: &Cochain) -> FpMatrix {
        assert_eq!(alpha.degree, 1);
        let d = self.dim(1);
        let mut m = FpMatrix::zeros(self.p, self.dim(2), d);
        for i in 0..d {
            let col = self.wedge(&self.character(i), alpha).unwrap();
            for (r, &x) in col.coeffs.iter().enumerate() {
                m[(r, i)] = x;
            }
        }
        m
    }

    /// The support-side combinatorial data behind the cup dimension formula.
    pub fn support_data(&self, support: &[usize]) -> Result<SupportData, SrError> {
        if support.is_empty() {
            return Err(SrError::EmptySupport);
        }
        let g = &self.graph;
        let mut s: Vec<usize> = support.to_vec();
        s.sort_unstable();
        s.dedup();
        let in_s: u64 = s.iter().map(|&v| 1u64 << v).sum();
        let mut outside_joined = Vec::new();
        let mut edge_counts = Vec::new();
        let mut outside_edges = Vec::new();
        for v in 0..g.vertex_count() {
            if in_s >> v & 1 == 1 {
                continue;
            }
            let e = (g.neighbors_mask(v) & in_s).count_ones() as usize;
            if e > 0 {
                outside_joined.push(v);
                edge_counts.push(e);
            }
            for w in v + 1..g.vertex_count() {
                if in_s >> w & 1 == 0 && g.has_edge(v, w) {
                    outside_edges.push((v, w));
                }
            }
        }
        Ok(SupportData {
            support: s.clone(),
            induced: g.induced(&s),
            outside_joined,
            support_neighbor_counts: edge_counts,
            outside_edges,
        })
    }

    /// Image dimension of cup-by-α for α supported (with unit coefficients)
    /// on the given subset: (|S| - r(Γ_α)) + |V_0,α|. Must equal the rank of
    /// `cup_matrix` for that α; rescaling coefficients does not change it.
    pub fn cup_image_dim_formula(&self, support: &[usize]) -> Result<usize, SrError> {
        let data = self.support_data(support)?;
        Ok(data.support.len() - data.induced.component_count() + data.outside_joined.len())
    }
}

/// Combinatorics of a character's support: the induced subgraph, the outside
/// vertices joined to it with their support-neighbor counts, and the edges
/// entirely outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportData {
    pub support: Vec<usize>,
    pub induced: SimplicialGraph,
    /// vertices outside the support adjacent to it (V_0,α), ascending
    pub outside_joined: Vec<usize>,
    /// e(v) for each vertex of `outside_joined`: its number of support
    /// neighbors; always >= 1
    pub support_neighbor_counts: Vec<usize>,
    /// edges with both endpoints outside the support, lexicographic
    pub outside_edges: Vec<(usize, usize)>,
}

impl SupportData {
    pub fn chain_relation_count(&self) -> usize {
        self.support_neighbor_counts.iter().map(|&e| e - 1).sum()
    }
}

/// Merge two sorted index sets; `None` on a repeated index, otherwise the
/// merged set with the sign of the interleaving permutation.
fn merge_sorted(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}
