//! Finite simplicial graphs and the combinatorial machinery behind every
//! other module: clique enumeration, chordality with certificates, pasting
//! decompositions, Droms (elementary-type) recognition and ladder embeddings.
//!
//! Vertex identity is the positional index `0..d-1`; labels are display
//! metadata only. All operations are pure and the values are immutable, so
//! everything here is safe to evaluate in parallel.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge {{{0},{0}}} is not allowed in a simplicial graph")]
    LoopEdge(usize),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graphs with more than 64 vertices are out of scope")]
    TooManyVertices,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not connected")]
    NotConnected,
}

/// Finite simplicial graph: ordered vertices `0..d-1` plus a set of
/// unordered edges. No loops, no duplicate edges.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialGraph {
    labels: Vec<String>,
    /// adjacency bitmask per vertex
    adj: Vec<u64>,
}

impl std::fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialGraph(d={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl SimplicialGraph {
    pub fn new(d: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let labels = (1..=d).map(|i| format!("v{i}")).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let d = labels.len();
        if d > 64 {
            return Err(GraphError::TooManyVertices);
        }
        let mut adj = vec![0u64; d];
        for &(a, b) in edges {
            if a >= d {
                return Err(GraphError::VertexOutOfRange(a, d));
            }
            if b >= d {
                return Err(GraphError::VertexOutOfRange(b, d));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { labels, adj })
    }

    /// Complete graph on `d` vertices.
    pub fn complete(d: usize) -> Self {
        let edges: Vec<_> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        Self::new(d, &edges).unwrap()
    }

    /// Path on `d` vertices and `d-1` edges.
    pub fn path(d: usize) -> Self {
        let edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
        Self::new(d, &edges).unwrap()
    }

    /// Cycle on `d >= 3` vertices.
    pub fn cycle(d: usize) -> Self {
        assert!(d >= 3);
        let mut edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
        edges.push((d - 1, 0));
        Self::new(d, &edges).unwrap()
    }

    /// The ladder graph: a row of `n >= 1` squares on `2(n+1)` vertices.
    /// Vertex `2j` sits in the top row, `2j+1` below it; square `i`
    /// (1-based) is induced by vertices `2i-2..=2i+1`.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1);
        let d = 2 * (n + 1);
        let mut edges = Vec::with_capacity(3 * n + 1);
        for j in 0..=n {
            edges.push((2 * j, 2 * j + 1)); // rung
        }
        for j in 0..n {
            edges.push((2 * j, 2 * j + 2)); // top row
            edges.push((2 * j + 1, 2 * j + 3)); // bottom row
        }
        Self::new(d, &edges).unwrap()
    }

    /// Disjoint union, vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut edges = self.edges();
        edges.extend(other.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        Self::with_labels(labels, &edges).unwrap()
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Self) -> Self {
        let offset = self.vertex_count();
        let mut g = self.disjoint_union(other);
        for a in 0..offset {
            for b in offset..g.vertex_count() {
                g.adj[a] |= 1 << b;
                g.adj[b] |= 1 << a;
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let d = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..d {
            for j in mask_iter(self.adj[i] >> (i + 1)) {
                out.push((i, i + 1 + j));
            }
        }
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && (self.adj[a] >> b) & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_iter(self.adj[v]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn full_mask(&self) -> u64 {
        if self.vertex_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count()) - 1
        }
    }

    /// Induced subgraph on the given vertices (sorted ascending internally);
    /// new indices follow the sorted order of `verts`.
    pub fn induced(&self, verts: &[usize]) -> Self {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Self::with_labels(labels, &edges).unwrap()
    }

    /// Is the vertex set a clique (pairwise adjacent)?
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &a)| verts[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_complete(&self) -> bool {
        let d = self.vertex_count();
        self.edge_count() == d * (d - 1) / 2
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let full = self.full_mask();
        let adj = (0..self.vertex_count())
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Self { labels: self.labels.clone(), adj }
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let d = self.vertex_count();
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..d {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            loop {
                let mut frontier = 0;
                for v in mask_iter(comp) {
                    frontier |= self.adj[v];
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(mask_iter(comp).collect());
        }
        comps
    }

    /// Number of connected components r(Γ).
    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// All vertex sets of size `n` inducing complete subgraphs, in
    /// lexicographic order of their sorted index tuples. `n = 1` lists the
    /// vertices themselves; `n = 0` yields the empty clique.
    pub fn enumerate_cliques(&self, n: usize) -> Vec<Vec<usize>> {
        let d = self.vertex_count();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn extend(
            g: &SimplicialGraph,
            n: usize,
            start: usize,
            allowed: u64,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current.len() == n {
                out.push(current.clone());
                return;
            }
            for v in start..g.vertex_count() {
                if allowed >> v & 1 == 1 {
                    current.push(v);
                    extend(g, n, v + 1, allowed & g.adj[v], current, out);
                    current.pop();
                }
            }
        }
        let full = if d == 0 { 0 } else { self.full_mask() };
        extend(self, n, 0, full, &mut current, &mut out);
        out
    }

    /// Largest clique size (the top nonzero degree of the clique basis).
    pub fn clique_number(&self) -> usize {
        let mut n = 0;
        while !self.enumerate_cliques(n + 1).is_empty() {
            n += 1;
        }
        n
    }
}

/// Witness that a graph fails one of the structural recognitions: an induced
/// square, an induced path on four vertices, or a longer chordless cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ForbiddenWitness {
    /// Four vertices inducing a 4-cycle.
    InducedC4(Vec<usize>),
    /// Four vertices inducing a path with three edges.
    InducedL3(Vec<usize>),
    /// Chordless induced cycle of length >= 4, listed in cycle order.
    InducedCycle(Vec<usize>),
}

impl ForbiddenWitness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            ForbiddenWitness::InducedC4(v)
            | ForbiddenWitness::InducedL3(v)
            | ForbiddenWitness::InducedCycle(v) => v,
        }
    }

    /// Re-check the witness against the graph, edge for edge.
    pub fn verify(&self, g: &SimplicialGraph) -> bool {
        match self {
            ForbiddenWitness::InducedC4(vs) => {
                vs.len() == 4 && induced_shape(g, vs) == Some(FourVertexShape::C4)
            }
            ForbiddenWitness::InducedL3(vs) => {
                vs.len() == 4 && induced_shape(g, vs) == Some(FourVertexShape::L3)
            }
            ForbiddenWitness::InducedCycle(vs) => {
                let k = vs.len();
                if k < 4 {
                    return false;
                }
                let mut edges = 0;
                for i in 0..k {
                    for j in i + 1..k {
                        if g.has_edge(vs[i], vs[j]) {
                            edges += 1;
                        }
                    }
                }
                // cycle order: consecutive pairs adjacent, nothing else
                edges == k
                    && (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
            }
        }
    }
}

#[derive(PartialEq, Eq)]
enum FourVertexShape {
    C4,
    L3,
}

fn induced_shape(g: &SimplicialGraph, vs: &[usize]) -> Option<FourVertexShape> {
    let mut degs = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(vs[i], vs[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    let mut sorted = degs;
    sorted.sort_unstable();
    if edges == 4 && sorted == [2, 2, 2, 2] {
        Some(FourVertexShape::C4)
    } else if edges == 3 && sorted == [1, 1, 2, 2] {
        // with 3 edges on 4 vertices this degree sequence forces a path
        Some(FourVertexShape::L3)
    } else {
        None
    }
}

/// A vertex ordering every suffix-neighborhood of which is a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectEliminationOrder(pub Vec<usize>);

impl PerfectEliminationOrder {
    pub fn verify(&self, g: &SimplicialGraph) -> bool {
        let d = g.vertex_count();
        if self.0.len() != d {
            return false;
        }
        let mut later = g.full_mask();
        for &v in &self.0 {
            later &= !(1 << v);
            let suffix_nbrs: Vec<usize> = mask_iter(g.neighbors_mask(v) & later).collect();
            if !g.is_clique(&suffix_nbrs) {
                return false;
            }
        }
        true
    }
}

/// Chordality test by maximum cardinality search. Success returns a perfect
/// elimination order; failure returns a chordless induced cycle of length
/// at least 4.
pub fn is_chordal(g: &SimplicialGraph) -> Result<PerfectEliminationOrder, ForbiddenWitness> {
    let d = g.vertex_count();
    let mut weight = vec![0usize; d];
    let mut visited = vec![false; d];
    let mut mcs = Vec::with_capacity(d);
    for _ in 0..d {
        let v = (0..d)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        visited[v] = true;
        mcs.push(v);
        for u in mask_iter(g.neighbors_mask(v)) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // elimination order = reverse MCS; earlier-in-MCS neighbors must be cliques
    let mut earlier = 0u64;
    let mut ok = true;
    'outer: for &v in &mcs {
        let rn: Vec<usize> = mask_iter(g.neighbors_mask(v) & earlier).collect();
        if !g.is_clique(&rn) {
            ok = false;
            break 'outer;
        }
        earlier |= 1 << v;
    }
    if ok {
        mcs.reverse();
        return Ok(PerfectEliminationOrder(mcs));
    }
    Err(extract_chordless_cycle(g).expect("non-chordal graph must contain a hole"))
}

/// Locate some chordless cycle of length >= 4: pick a vertex `v` with two
/// non-adjacent neighbors `u, w` and close a shortest u-w path avoiding the
/// rest of N[v].
fn extract_chordless_cycle(g: &SimplicialGraph) -> Option<ForbiddenWitness> {
    let d = g.vertex_count();
    for v in 0..d {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut banned = g.neighbors_mask(v) | (1 << v);
                banned &= !(1 << u);
                banned &= !(1 << w);
                if let Some(path) = shortest_path_avoiding(g, u, w, banned) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(ForbiddenWitness::InducedCycle(cycle.clone()).verify(g));
                    return Some(ForbiddenWitness::InducedCycle(cycle));
                }
            }
        }
    }
    None
}

fn shortest_path_avoiding(
    g: &SimplicialGraph,
    from: usize,
    to: usize,
    banned: u64,
) -> Option<Vec<usize>> {
    let d = g.vertex_count();
    let mut prev = vec![usize::MAX; d];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in mask_iter(g.neighbors_mask(x) & !banned) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Droms recognition: no induced C4 and no induced path on four vertices.
/// Failure returns the first witness quadruple in lexicographic order.
pub fn is_elementary_type(g: &SimplicialGraph) -> Result<(), ForbiddenWitness> {
    let d = g.vertex_count();
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                for e in c + 1..d {
                    let vs = [a, b, c, e];
                    match induced_shape(g, &vs) {
                        Some(FourVertexShape::C4) => {
                            return Err(ForbiddenWitness::InducedC4(vs.to_vec()))
                        }
                        Some(FourVertexShape::L3) => {
                            return Err(ForbiddenWitness::InducedL3(vs.to_vec()))
                        }
                        None => {}
                    }
                }
            }
        }
    }
    Ok(())
}

/// Recursive decomposition of a connected chordal graph by pasting along
/// complete subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PastingTree {
    /// A complete subgraph, given by its sorted vertex set.
    Leaf(Vec<usize>),
    Paste {
        left: Box<PastingTree>,
        right: Box<PastingTree>,
        /// Shared clique = intersection of the two parts' vertex sets.
        shared: Vec<usize>,
    },
}

impl PastingTree {
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut mask = 0u64;
        self.collect_vertices(&mut mask);
        mask_iter(mask).collect()
    }

    fn collect_vertices(&self, mask: &mut u64) {
        match self {
            PastingTree::Leaf(vs) => {
                for &v in vs {
                    *mask |= 1 << v;
                }
            }
            PastingTree::Paste { left, right, .. } => {
                left.collect_vertices(mask);
                right.collect_vertices(mask);
            }
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&Vec<usize>> {
        match self {
            PastingTree::Leaf(vs) => vec![vs],
            PastingTree::Paste { left, right, .. } => {
                let mut out = left.leaves();
                out.extend(right.leaves());
                out
            }
        }
    }

    fn collect_edges(&self, edges: &mut std::collections::BTreeSet<(usize, usize)>) {
        match self {
            PastingTree::Leaf(vs) => {
                for (i, &a) in vs.iter().enumerate() {
                    for &b in &vs[i + 1..] {
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
            }
            PastingTree::Paste { left, right, .. } => {
                left.collect_edges(edges);
                right.collect_edges(edges);
            }
        }
    }

    /// Flattening must reproduce the original graph exactly, every leaf must
    /// be complete and every shared set must be a clique equal to the
    /// intersection of its children's vertex sets.
    pub fn validate(&self, g: &SimplicialGraph) -> bool {
        let verts = self.vertex_set();
        if verts != (0..g.vertex_count()).collect::<Vec<_>>() {
            return false;
        }
        let mut edges = std::collections::BTreeSet::new();
        self.collect_edges(&mut edges);
        if edges.into_iter().collect::<Vec<_>>() != g.edges() {
            return false;
        }
        self.validate_inner(g)
    }

    fn validate_inner(&self, g: &SimplicialGraph) -> bool {
        match self {
            PastingTree::Leaf(vs) => g.is_clique(vs),
            PastingTree::Paste { left, right, shared } => {
                let lv = left.vertex_set();
                let rv = right.vertex_set();
                let inter: Vec<usize> =
                    lv.iter().copied().filter(|v| rv.binary_search(v).is_ok()).collect();
                inter == *shared
                    && g.is_clique(shared)
                    && left.validate_inner(g)
                    && right.validate_inner(g)
            }
        }
    }
}

/// Minimal vertex separators via close neighborhoods: N(C) for C a component
/// of G - N[v]. Every minimal separator arises this way.
fn minimal_separators(g: &SimplicialGraph) -> Vec<Vec<usize>> {
    let d = g.vertex_count();
    let mut seps = std::collections::BTreeSet::new();
    for v in 0..d {
        let closed = g.neighbors_mask(v) | (1 << v);
        let rest: Vec<usize> = mask_iter(g.full_mask() & !closed).collect();
        if rest.is_empty() {
            continue;
        }
        let induced = g.induced(&rest);
        for comp in induced.connected_components() {
            let mut nbhd = 0u64;
            for &ci in &comp {
                nbhd |= g.neighbors_mask(rest[ci]);
            }
            for &ci in &comp {
                nbhd &= !(1 << rest[ci]);
            }
            if nbhd != 0 {
                seps.insert(mask_iter(nbhd).collect::<Vec<usize>>());
            }
        }
    }
    // keep genuine separators only
    seps.into_iter()
        .filter(|s| {
            let keep: Vec<usize> =
                (0..d).filter(|v| s.binary_search(v).is_err()).collect();
            !keep.is_empty() && g.induced(&keep).component_count() > 1
        })
        .collect()
}

/// Decompose a connected chordal graph by splitting at the lexicographically
/// smallest minimal clique separator, recursing until the parts are complete.
pub fn chordal_pasting_tree(g: &SimplicialGraph) -> Result<PastingTree, GraphError> {
    if g.component_count() != 1 {
        return Err(GraphError::NotConnected);
    }
    if is_chordal(g).is_err() {
        return Err(GraphError::NotChordal);
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(pasting_tree_rec(g, &all))
}

fn pasting_tree_rec(g: &SimplicialGraph, verts: &[usize]) -> PastingTree {
    let sub = g.induced(verts);
    if sub.is_complete() {
        return PastingTree::Leaf(verts.to_vec());
    }
    let seps = minimal_separators(&sub);
    let sep = seps
        .iter()
        .find(|s| sub.is_clique(s))
        .expect("a connected non-complete chordal graph has a clique separator");
    let sep_global: Vec<usize> = sep.iter().map(|&i| verts[i]).collect();
    let sep_mask: u64 = sep.iter().map(|&i| 1u64 << i).sum();
    let keep: Vec<usize> = (0..verts.len()).filter(|i| sep_mask >> i & 1 == 0).collect();
    let comps = sub.induced(&keep).connected_components();
    // first component + separator on the left, the rest on the right
    let mut left_vs: Vec<usize> = comps[0].iter().map(|&c| verts[keep[c]]).collect();
    left_vs.extend(sep_global.iter().copied());
    left_vs.sort_unstable();
    let mut right_vs: Vec<usize> = comps[1..]
        .iter()
        .flat_map(|comp| comp.iter().map(|&c| verts[keep[c]]))
        .collect();
    right_vs.extend(sep_global.iter().copied());
    right_vs.sort_unstable();
    PastingTree::Paste {
        left: Box::new(pasting_tree_rec(g, &left_vs)),
        right: Box::new(pasting_tree_rec(g, &right_vs)),
        shared: sep_global,
    }
}

/// Count of 4-vertex subsets inducing a square, together with the check
/// `|E| - d + r = q`. The identity is only meaningful for induced subgraphs
/// of ladders; both sides are reported for any input.
pub fn subsquare_census(g: &SimplicialGraph) -> (usize, bool) {
    let d = g.vertex_count();
    let mut q = 0;
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                for e in c + 1..d {
                    if induced_shape(g, &[a, b, c, e]) == Some(FourVertexShape::C4) {
                        q += 1;
                    }
                }
            }
        }
    }
    let lhs = g.edge_count() as i64 - d as i64 + g.component_count() as i64;
    (q, lhs == q as i64)
}

/// Backtracking search for an induced embedding of `g` into the ladder with
/// `n` squares. Returns the image of each vertex. Intended for small graphs.
pub fn embed_in_ladder(g: &SimplicialGraph, n: usize) -> Option<Vec<usize>> {
    let ladder = SimplicialGraph::ladder(n);
    if g.vertex_count() > ladder.vertex_count() {
        return None;
    }
    let mut map = vec![usize::MAX; g.vertex_count()];
    let mut used = vec![false; ladder.vertex_count()];
    if embed_rec(g, &ladder, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn embed_rec(
    g: &SimplicialGraph,
    ladder: &SimplicialGraph,
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    'target: for t in 0..ladder.vertex_count() {
        if used[t] {
            continue;
        }
        for (u, &mu) in map.iter().enumerate().take(v) {
            if g.has_edge(u, v) != ladder.has_edge(mu, t) {
                continue 'target;
            }
        }
        map[v] = t;
        used[t] = true;
        if embed_rec(g, ladder, v + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[t] = false;
    }
    false
}

/// Smallest `n` (up to `2d`) such that `g` embeds as an induced subgraph of
/// the ladder with `n` squares, with the embedding.
pub fn embed_in_some_ladder(g: &SimplicialGraph) -> Option<(usize, Vec<usize>)> {
    let d = g.vertex_count();
    for n in 1..=(2 * d.max(1)) {
        if let Some(map) = embed_in_ladder(g, n) {
            return Some((n, map));
        }
    }
    None
}

/// Is `g` isomorphic to the full ladder with `n` squares? Returns `n` and
/// the vertex correspondence.
pub fn ladder_isomorphism(g: &SimplicialGraph) -> Option<(usize, Vec<usize>)> {
    let d = g.vertex_count();
    if d < 4 || !d.is_multiple_of(2) {
        return None;
    }
    let n = d / 2 - 1;
    if g.edge_count() != 3 * n + 1 {
        return None;
    }
    embed_in_ladder(g, n).map(|map| (n, map))
}

/// Nontrivial bipartition with every cross pair an edge, i.e. a join
/// decomposition. Exists iff the complement graph is disconnected. The first
/// part is the complement component least by (size, smallest index).
pub fn complete_join_decomposition(g: &SimplicialGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let comps = g.complement().connected_components();
    if comps.len() < 2 {
        return None;
    }
    let first = comps
        .iter()
        .min_by_key(|c| (c.len(), c[0]))
        .unwrap()
        .clone();
    let in_first: u64 = first.iter().map(|&v| 1u64 << v).sum();
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| in_first >> v & 1 == 0).collect();
    Some((first, rest))
}

/// The fixture from the worked five-vertex example: a cone over a path,
/// chordal but not of elementary type.
pub fn example_graph() -> SimplicialGraph {
    SimplicialGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap()
}
