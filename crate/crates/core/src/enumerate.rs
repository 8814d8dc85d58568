//! Graph enumeration for the sweep suites: raw labeled enumeration for small
//! vertex counts, and chordal graphs up to isomorphism via simplicial-vertex
//! augmentation with a branch-and-bound canonical code.

use crate::graph::SimplicialGraph;

/// Vertex pairs (i, j), i < j, in lexicographic order.
pub fn pair_list(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect()
}

pub fn graph_count(d: usize) -> u64 {
    1u64 << (d * (d - 1) / 2)
}

/// Decode an edge bitmask (over `pair_list`) into a graph.
pub fn graph_from_mask(d: usize, mask: u64) -> SimplicialGraph {
    let pairs = pair_list(d);
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    SimplicialGraph::new(d, &edges).unwrap()
}

/// Canonical code of a graph on up to 11 vertices: the minimum, over all
/// vertex orderings, of the column-wise adjacency bit string. Orderings are
/// explored by backtracking with prefix pruning.
pub fn canonical_code(g: &SimplicialGraph) -> u64 {
    let d = g.vertex_count();
    assert!(d * (d - 1) / 2 <= 64);
    if d <= 1 {
        return 0;
    }
    let total = d * (d - 1) / 2;
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(d);
    canon_rec(g, d, total, &mut placed, 0, 0, 0, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn canon_rec(
    g: &SimplicialGraph,
    d: usize,
    total: usize,
    placed: &mut Vec<usize>,
    used: u64,
    code: u64,
    bits: usize,
    best: &mut u64,
) {
    let k = placed.len();
    if k == d {
        if code < *best {
            *best = code;
        }
        return;
    }
    for v in 0..d {
        if used >> v & 1 == 1 {
            continue;
        }
        // adjacency column against the already-placed vertices
        let mut col = 0u64;
        for (i, &u) in placed.iter().enumerate() {
            if g.has_edge(u, v) {
                col |= 1 << (k - 1 - i);
            }
        }
        let new_bits = bits + k;
        let new_code = (code << k) | col;
        if *best != u64::MAX && new_code > (*best >> (total - new_bits)) {
            continue;
        }
        placed.push(v);
        canon_rec(g, d, total, placed, used | (1 << v), new_code, new_bits, best);
        placed.pop();
    }
}

/// All chordal graphs with exactly `d` vertices, one per isomorphism class.
/// Built level by level: every chordal graph arises by attaching a new
/// vertex whose neighborhood is a clique of a smaller chordal graph.
pub fn chordal_representatives(d: usize) -> Vec<SimplicialGraph> {
    let mut level = vec![SimplicialGraph::new(1, &[]).unwrap()];
    for size in 2..=d {
        let mut candidates: Vec<SimplicialGraph> = Vec::new();
        for g in &level {
            let mut cliques = vec![Vec::new()]; // the empty neighborhood
            for n in 1..=g.clique_number() {
                cliques.extend(g.enumerate_cliques(n));
            }
            for clique in cliques {
                let mut edges = g.edges();
                edges.extend(clique.iter().map(|&v| (v, size - 1)));
                candidates.push(SimplicialGraph::new(size, &edges).unwrap());
            }
        }
        let codes = crate::exec::map(&candidates, canonical_code);
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for (g, code) in candidates.into_iter().zip(codes) {
            if seen.insert(code) {
                next.push(g);
            }
        }
        level = next;
    }
    level
}

/// Chordal representatives of every size from 1 through `dmax`.
pub fn chordal_representatives_up_to(dmax: usize) -> Vec<SimplicialGraph> {
    (1..=dmax).flat_map(chordal_representatives).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        // P4 in two labelings
        let a = SimplicialGraph::path(4);
        let b = SimplicialGraph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let c = SimplicialGraph::cycle(4);
        assert_ne!(canonical_code(&a), canonical_code(&c));
    }

    #[test]
    fn generator_matches_raw_enumeration_small() {
        for d in 1..=6 {
            let mut raw = std::collections::HashSet::new();
            for mask in 0..graph_count(d) {
                let g = graph_from_mask(d, mask);
                if is_chordal(&g).is_ok() {
                    raw.insert(canonical_code(&g));
                }
            }
            let reps = chordal_representatives(d);
            assert_eq!(reps.len(), raw.len(), "count mismatch at d={d}");
            for g in &reps {
                assert!(is_chordal(g).is_ok());
                assert!(raw.contains(&canonical_code(g)));
            }
        }
    }
}
