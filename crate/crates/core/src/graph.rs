//! Core graph types: bipartite graphs, orientations, matchings, digraphs,
//! and the 0-1 / sign matrices they correspond to.
//!
//! Conventions used everywhere in this crate:
//! * the two sides of a bipartite graph are indexed independently,
//!   `0..n_a` and `0..n_b`;
//! * an edge is an ordered pair `(a, b)` with `a` on the A side;
//! * graphs are immutable once constructed and compare by value, so the
//!   edge insertion order never matters;
//! * whenever a single index space over all vertices is needed, vertex
//!   `A(i)` maps to `i` and `B(j)` maps to `n_a + j`.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A vertex of a bipartite graph, tagged with its side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    A(usize),
    B(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::A(i) => write!(f, "a{}", i + 1),
            Vertex::B(j) => write!(f, "b{}", j + 1),
        }
    }
}

/// Simple bipartite graph with a fixed number of vertices per side.
///
/// Isolated vertices are allowed (the vertex count is independent of the
/// edge list). Parallel edges are not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n_a: usize,
    n_b: usize,
    edges: Vec<(usize, usize)>, // sorted, deduplicated
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BipartiteGraph(n_a={}, n_b={}, edges={:?})",
            self.n_a, self.n_b, self.edges
        )
    }
}

impl BipartiteGraph {
    /// Build a graph from an edge list. Edges are stored as a set: order is
    /// irrelevant and duplicates are rejected.
    pub fn new(n_a: usize, n_b: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n_a {
                return Err(Error::VertexOutOfRange(format!("a{} with n_a={}", a + 1, n_a)));
            }
            if b >= n_b {
                return Err(Error::VertexOutOfRange(format!("b{} with n_b={}", b + 1, n_b)));
            }
            sorted.push((a, b));
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(BipartiteGraph { n_a, n_b, edges: sorted })
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    /// Total number of vertices, both sides.
    pub fn n_vertices(&self) -> usize {
        self.n_a + self.n_b
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Neighbors of an A-side vertex, ascending.
    pub fn neighbors_of_a(&self, a: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(x, _)| x == a).map(|&(_, b)| b).collect()
    }

    /// Neighbors of a B-side vertex, ascending.
    pub fn neighbors_of_b(&self, b: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.edges.iter().filter(|&&(_, y)| y == b).map(|&(a, _)| a).collect();
        out.sort_unstable();
        out
    }

    /// Unified index of a vertex: `A(i) -> i`, `B(j) -> n_a + j`.
    pub fn unified(&self, v: Vertex) -> usize {
        match v {
            Vertex::A(i) => i,
            Vertex::B(j) => self.n_a + j,
        }
    }

    /// Inverse of [`unified`](Self::unified).
    pub fn from_unified(&self, u: usize) -> Vertex {
        if u < self.n_a {
            Vertex::A(u)
        } else {
            Vertex::B(u - self.n_a)
        }
    }

    /// Adjacency lists over the unified index space.
    pub fn unified_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices()];
        for &(a, b) in &self.edges {
            adj[a].push(self.n_a + b);
            adj[self.n_a + b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Degree of every vertex in unified order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n_vertices()];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[self.n_a + b] += 1;
        }
        d
    }

    /// Induced subgraph on the given vertices. Returns the subgraph plus,
    /// for each side, the map from new indices to indices in `self`.
    pub fn induced(&self, a_keep: &[usize], b_keep: &[usize]) -> (Self, Vec<usize>, Vec<usize>) {
        let mut a_map: Vec<usize> = a_keep.to_vec();
        a_map.sort_unstable();
        a_map.dedup();
        let mut b_map: Vec<usize> = b_keep.to_vec();
        b_map.sort_unstable();
        b_map.dedup();
        let a_inv: BTreeMap<usize, usize> =
            a_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let b_inv: BTreeMap<usize, usize> =
            b_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a_inv.get(&a), b_inv.get(&b)) {
                (Some(&na), Some(&nb)) => Some((na, nb)),
                _ => None,
            })
            .collect();
        let g = BipartiteGraph::new(a_map.len(), b_map.len(), &edges)
            .expect("induced subgraph of a valid graph is valid");
        (g, a_map, b_map)
    }

    /// The graph with the given vertices removed.
    pub fn delete_vertices(&self, del: &BTreeSet<Vertex>) -> (Self, Vec<usize>, Vec<usize>) {
        let a_keep: Vec<usize> =
            (0..self.n_a).filter(|&i| !del.contains(&Vertex::A(i))).collect();
        let b_keep: Vec<usize> =
            (0..self.n_b).filter(|&j| !del.contains(&Vertex::B(j))).collect();
        self.induced(&a_keep, &b_keep)
    }

    /// True if the graph is connected (vacuously true when there are no
    /// vertices; false when several components or stray vertices exist).
    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n == 0 {
            return true;
        }
        let adj = self.unified_adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        component_labels(self).1
    }
}

/// One connected component of a graph, with index maps back to the parent.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: BipartiteGraph,
    /// `a_map[i]` is the parent A-index of the component's A-vertex `i`.
    pub a_map: Vec<usize>,
    pub b_map: Vec<usize>,
}

fn component_labels(g: &BipartiteGraph) -> (Vec<usize>, usize) {
    let n = g.n_vertices();
    let adj = g.unified_adjacency();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = next;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    (label, next)
}

/// Split a graph into its connected components, ordered by their smallest
/// unified vertex index. Isolated vertices become single-vertex components.
pub fn connected_components(g: &BipartiteGraph) -> Vec<Component> {
    let (label, count) = component_labels(g);
    let mut comps = Vec::with_capacity(count);
    for c in 0..count {
        let a_keep: Vec<usize> = (0..g.n_a()).filter(|&i| label[i] == c).collect();
        let b_keep: Vec<usize> = (0..g.n_b()).filter(|&j| label[g.n_a() + j] == c).collect();
        let (graph, a_map, b_map) = g.induced(&a_keep, &b_keep);
        comps.push(Component { graph, a_map, b_map });
    }
    comps
}

/// Direction of an oriented bipartite edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    AtoB,
    BtoA,
}

impl Dir {
    pub fn reversed(self) -> Dir {
        match self {
            Dir::AtoB => Dir::BtoA,
            Dir::BtoA => Dir::AtoB,
        }
    }

    /// The sign convention: `AtoB` is `+1`, `BtoA` is `-1`.
    pub fn sign(self) -> i8 {
        match self {
            Dir::AtoB => 1,
            Dir::BtoA => -1,
        }
    }

    pub fn from_sign(s: i8) -> Dir {
        if s >= 0 {
            Dir::AtoB
        } else {
            Dir::BtoA
        }
    }
}

/// An orientation of a bipartite graph: a direction for every edge.
///
/// The domain is carried by the orientation itself (its key set), so an
/// orientation can be validated against a graph but does not borrow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    dirs: BTreeMap<(usize, usize), Dir>,
}

impl Orientation {
    pub fn new(dirs: BTreeMap<(usize, usize), Dir>) -> Self {
        Orientation { dirs }
    }

    /// The orientation of `g` directing every edge from A to B.
    pub fn all_a_to_b(g: &BipartiteGraph) -> Self {
        Orientation { dirs: g.edges().iter().map(|&e| (e, Dir::AtoB)).collect() }
    }

    /// Check that the domain is exactly the edge set of `g`.
    pub fn validate_against(&self, g: &BipartiteGraph) -> Result<()> {
        if self.dirs.len() != g.n_edges() || !g.edges().iter().all(|e| self.dirs.contains_key(e)) {
            return Err(Error::OrientationDomainMismatch);
        }
        Ok(())
    }

    pub fn dir(&self, a: usize, b: usize) -> Option<Dir> {
        self.dirs.get(&(a, b)).copied()
    }

    pub fn sign(&self, a: usize, b: usize) -> Option<i8> {
        self.dir(a, b).map(Dir::sign)
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    /// Edges with their directions, sorted by edge.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), Dir)> + '_ {
        self.dirs.iter().map(|(&e, &d)| (e, d))
    }

    pub fn insert(&mut self, a: usize, b: usize, d: Dir) {
        self.dirs.insert((a, b), d);
    }

    /// Restrict to the edges of `g`, dropping directions for other pairs.
    pub fn restricted_to(&self, g: &BipartiteGraph) -> Result<Self> {
        let mut dirs = BTreeMap::new();
        for &e in g.edges() {
            match self.dirs.get(&e) {
                Some(&d) => {
                    dirs.insert(e, d);
                }
                None => return Err(Error::MissingEdge(e.0, e.1)),
            }
        }
        Ok(Orientation { dirs })
    }
}

/// Reverse every edge with exactly one endpoint in `s`.
///
/// Flipping is an involution, and flipping `s` equals flipping its
/// complement on a connected graph: only the cut edges of `s` move.
pub fn flip_vertices(d: &Orientation, s: &BTreeSet<Vertex>) -> Orientation {
    let mut dirs = BTreeMap::new();
    for ((a, b), dir) in d.iter() {
        let ina = s.contains(&Vertex::A(a));
        let inb = s.contains(&Vertex::B(b));
        let nd = if ina != inb { dir.reversed() } else { dir };
        dirs.insert((a, b), nd);
    }
    Orientation { dirs }
}

/// A matching: a set of edges no two of which share an endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: &[(usize, usize)]) -> Result<Self> {
        let mut a_used = BTreeSet::new();
        let mut b_used = BTreeSet::new();
        for &(a, b) in edges {
            if !a_used.insert(a) || !b_used.insert(b) {
                return Err(Error::NotAMatching(a, b));
            }
        }
        Ok(Matching { edges: edges.iter().copied().collect() })
    }

    pub fn empty() -> Self {
        Matching { edges: BTreeSet::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Partner of an A-side vertex, if matched.
    pub fn partner_of_a(&self, a: usize) -> Option<usize> {
        self.edges.iter().find(|&&(x, _)| x == a).map(|&(_, b)| b)
    }

    pub fn partner_of_b(&self, b: usize) -> Option<usize> {
        self.edges.iter().find(|&&(_, y)| y == b).map(|&(a, _)| a)
    }

    /// True if this matching covers every vertex of `g`.
    pub fn is_perfect_in(&self, g: &BipartiteGraph) -> bool {
        g.n_a() == g.n_b() && self.edges.len() == g.n_a()
    }

    /// Check every matching edge is an edge of `g`.
    pub fn validate_against(&self, g: &BipartiteGraph) -> Result<()> {
        for &(a, b) in &self.edges {
            if !g.has_edge(a, b) {
                return Err(Error::MissingEdge(a, b));
            }
        }
        Ok(())
    }
}

/// Simple directed graph. No self-loops and no duplicate arcs; a pair of
/// opposite arcs (a 2-cycle) is fine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>, // sorted, deduplicated
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(format!("arc ({}, {}) with n={}", u + 1, v + 1, n)));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateArc(w[0].0, w[0].1));
            }
        }
        Ok(Digraph { n, arcs: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn n_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        self.arcs.iter().filter(|&&(x, _)| x == u).map(|&(_, v)| v).collect()
    }

    /// Adjacency lists (out-neighbors), ascending.
    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
        }
        adj
    }

    /// The subdigraph induced by deleting one vertex, keeping the relative
    /// order of the remaining vertices.
    pub fn delete_vertex(&self, x: usize) -> Digraph {
        let re = |v: usize| if v > x { v - 1 } else { v };
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(u, v)| u != x && v != x)
            .map(|&(u, v)| (re(u), re(v)))
            .collect();
        Digraph { n: self.n - 1, arcs }
    }
}

/// A 0-1 square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl ZeroOneMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::NotSquare { rows: n, cols: r.len() });
            }
            for &x in r {
                if x > 1 {
                    return Err(Error::BadEntry(x as i64));
                }
            }
        }
        Ok(ZeroOneMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
}

/// A square matrix over {-1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    n: usize,
    rows: Vec<Vec<i8>>,
}

impl SignMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::NotSquare { rows: n, cols: r.len() });
            }
            for &x in r {
                if !(-1..=1).contains(&x) {
                    return Err(Error::BadEntry(x as i64));
                }
            }
        }
        Ok(SignMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Entrywise absolute value.
    pub fn support(&self) -> ZeroOneMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x.unsigned_abs()).collect())
            .collect();
        ZeroOneMatrix::new(rows).expect("support of a valid sign matrix")
    }

    pub fn negate_row(&self, r: usize) -> SignMatrix {
        let mut rows = self.rows.clone();
        for x in &mut rows[r] {
            *x = -*x;
        }
        SignMatrix { n: self.n, rows }
    }
}

/// The signed biadjacency matrix of an oriented balanced bipartite graph:
/// `+1` where the edge runs A to B, `-1` where it runs B to A, `0` where
/// there is no edge.
pub fn sign_matrix_of_orientation(g: &BipartiteGraph, d: &Orientation) -> Result<SignMatrix> {
    if g.n_a() != g.n_b() {
        return Err(Error::UnbalancedSides(g.n_a(), g.n_b()));
    }
    d.validate_against(g)?;
    let mut rows = vec![vec![0i8; g.n_b()]; g.n_a()];
    for ((a, b), dir) in d.iter() {
        rows[a][b] = dir.sign();
    }
    SignMatrix::new(rows)
}

/// A 0/1 weight per arc of a digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeighting {
    w: BTreeMap<(usize, usize), u8>,
}

impl EdgeWeighting {
    /// The domain must be exactly the arc set of `d` and weights 0 or 1.
    pub fn new(d: &Digraph, w: BTreeMap<(usize, usize), u8>) -> Result<Self> {
        if w.len() != d.n_arcs() || !d.arcs().iter().all(|a| w.contains_key(a)) {
            return Err(Error::OrientationDomainMismatch);
        }
        if w.values().any(|&x| x > 1) {
            return Err(Error::BadEntry(2));
        }
        Ok(EdgeWeighting { w })
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u8> {
        self.w.get(&(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u8)> + '_ {
        self.w.iter().map(|(&a, &x)| (a, x))
    }
}

/// The bipartite graph whose biadjacency matrix is `m`: rows become A-side
/// vertices, columns B-side vertices, ones become edges.
pub fn graph_of_matrix(m: &ZeroOneMatrix) -> BipartiteGraph {
    let mut edges = Vec::new();
    for r in 0..m.n() {
        for c in 0..m.n() {
            if m.get(r, c) == 1 {
                edges.push((r, c));
            }
        }
    }
    BipartiteGraph::new(m.n(), m.n(), &edges).expect("matrix indices are in range")
}

/// Inverse of [`graph_of_matrix`]; the graph must be balanced.
pub fn matrix_of_graph(g: &BipartiteGraph) -> Result<ZeroOneMatrix> {
    if g.n_a() != g.n_b() {
        return Err(Error::UnbalancedSides(g.n_a(), g.n_b()));
    }
    let mut rows = vec![vec![0u8; g.n_b()]; g.n_a()];
    for &(a, b) in g.edges() {
        rows[a][b] = 1;
    }
    ZeroOneMatrix::new(rows)
}

/// The lines of the Fano plane on points {0, .., 6}.
///
/// Every pair of points lies on exactly one line; the constructor asserts
/// this, so downstream code can rely on it.
pub fn fano_lines() -> [[usize; 3]; 7] {
    let lines = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut pair_count = [[0u8; 7]; 7];
    for line in &lines {
        for i in 0..3 {
            for j in (i + 1)..3 {
                let (p, q) = (line[i], line[j]);
                pair_count[p][q] += 1;
                pair_count[q][p] += 1;
            }
        }
    }
    for p in 0..7 {
        for q in 0..7 {
            if p != q {
                assert_eq!(pair_count[p][q], 1, "points {p} and {q} must share exactly one line");
            }
        }
    }
    lines
}

/// The Heawood graph as the point-line incidence graph of the Fano plane:
/// A-side = points, B-side = lines. This is the single canonical copy used
/// throughout the crate.
pub fn heawood_graph() -> BipartiteGraph {
    let mut edges = Vec::with_capacity(21);
    for (l, line) in fano_lines().iter().enumerate() {
        for &p in line {
            edges.push((p, l));
        }
    }
    BipartiteGraph::new(7, 7, &edges).expect("incidence graph is valid")
}

/// The `rows x cols` grid graph, two-colored by coordinate parity. Cell
/// `(i, j)` goes to the A side when `i + j` is even.
pub fn grid_graph(rows: usize, cols: usize) -> BipartiteGraph {
    let mut a_of = vec![vec![usize::MAX; cols]; rows];
    let mut b_of = vec![vec![usize::MAX; cols]; rows];
    let (mut n_a, mut n_b) = (0, 0);
    for i in 0..rows {
        for j in 0..cols {
            if (i + j) % 2 == 0 {
                a_of[i][j] = n_a;
                n_a += 1;
            } else {
                b_of[i][j] = n_b;
                n_b += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            for (di, dj) in [(0usize, 1usize), (1, 0)] {
                let (ni, nj) = (i + di, j + dj);
                if ni < rows && nj < cols {
                    if (i + j) % 2 == 0 {
                        edges.push((a_of[i][j], b_of[ni][nj]));
                    } else {
                        edges.push((a_of[ni][nj], b_of[i][j]));
                    }
                }
            }
        }
    }
    BipartiteGraph::new(n_a, n_b, &edges).expect("grid indices are in range")
}

/// The circular ladder (prism over a cycle): two concentric `k`-cycles
/// joined by spokes. Bipartite exactly when `k` is even, and a brace for
/// even `k >= 4`; `k = 4` gives the cube.
pub fn circular_ladder(k: usize) -> BipartiteGraph {
    assert!(k >= 3 && k % 2 == 0, "circular ladder is bipartite only for even k >= 4");
    // outer vertex j is on the A side when j is even, inner when j is odd
    let side_idx = |ring: usize, j: usize| -> (bool, usize) {
        let on_a = (j + ring) % 2 == 0;
        (on_a, ring * (k / 2) + j / 2)
    };
    let mut edges = Vec::new();
    let mut push = |u: (bool, usize), v: (bool, usize)| {
        assert_ne!(u.0, v.0, "endpoints must be on opposite sides");
        if u.0 {
            edges.push((u.1, v.1));
        } else {
            edges.push((v.1, u.1));
        }
    };
    for ring in 0..2 {
        for j in 0..k {
            push(side_idx(ring, j), side_idx(ring, (j + 1) % k));
        }
    }
    for j in 0..k {
        push(side_idx(0, j), side_idx(1, j));
    }
    BipartiteGraph::new(k, k, &edges).expect("ladder indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> BipartiteGraph {
        // a1-b1-a2-b2-a1
        BipartiteGraph::new(2, 2, &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn grid_and_ladder_shapes() {
        let g22 = grid_graph(2, 2);
        assert_eq!((g22.n_a(), g22.n_b(), g22.n_edges()), (2, 2, 4));
        assert!(g22.is_connected());
        let g23 = grid_graph(2, 3);
        assert_eq!((g23.n_a(), g23.n_b(), g23.n_edges()), (3, 3, 7));
        let g33 = grid_graph(3, 3);
        assert_eq!((g33.n_a(), g33.n_b(), g33.n_edges()), (5, 4, 12));
        let cube = circular_ladder(4);
        assert_eq!((cube.n_a(), cube.n_b(), cube.n_edges()), (4, 4, 12));
        assert!(cube.degrees().iter().all(|&d| d == 3));
        assert!(cube.is_connected());
        let cl6 = circular_ladder(6);
        assert_eq!((cl6.n_a(), cl6.n_b(), cl6.n_edges()), (6, 6, 18));
        assert!(cl6.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn edge_order_is_irrelevant() {
        let g1 = BipartiteGraph::new(2, 2, &[(0, 0), (1, 1), (0, 1)]).unwrap();
        let g2 = BipartiteGraph::new(2, 2, &[(0, 1), (0, 0), (1, 1)]).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn duplicate_edges_rejected() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, &[(0, 0), (0, 0)]),
            Err(Error::DuplicateEdge(0, 0))
        ));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(BipartiteGraph::new(1, 1, &[(1, 0)]).is_err());
        assert!(BipartiteGraph::new(1, 1, &[(0, 1)]).is_err());
    }

    #[test]
    fn all_ones_2x2_gives_c4() {
        let m = ZeroOneMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let g = graph_of_matrix(&m);
        assert_eq!(g, c4());
        assert_eq!(matrix_of_graph(&g).unwrap(), m);
    }

    #[test]
    fn identity_3x3_gives_three_disjoint_edges() {
        let m = ZeroOneMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = graph_of_matrix(&m);
        assert_eq!(g.n_edges(), 3);
        assert_eq!(g.edges(), &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(connected_components(&g).len(), 3);
    }

    #[test]
    fn matrix_of_unbalanced_graph_errors() {
        let g = BipartiteGraph::new(2, 1, &[(0, 0), (1, 0)]).unwrap();
        assert!(matches!(matrix_of_graph(&g), Err(Error::UnbalancedSides(2, 1))));
    }

    #[test]
    fn components_of_disjoint_union() {
        // one C4 on low indices, one disjoint edge, one isolated B vertex
        let g = BipartiteGraph::new(3, 4, &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 2)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].graph, c4());
        assert_eq!(comps[0].a_map, vec![0, 1]);
        assert_eq!(comps[0].b_map, vec![0, 1]);
        assert_eq!(comps[1].graph.n_edges(), 1);
        assert_eq!(comps[1].a_map, vec![2]);
        assert_eq!(comps[1].b_map, vec![2]);
        assert_eq!(comps[2].graph.n_vertices(), 1);
        assert_eq!(comps[2].b_map, vec![3]);
    }

    #[test]
    fn flip_moves_exactly_the_cut() {
        let g = c4();
        let d = Orientation::all_a_to_b(&g);
        let s: BTreeSet<Vertex> = [Vertex::A(0)].into_iter().collect();
        let f = flip_vertices(&d, &s);
        assert_eq!(f.dir(0, 0), Some(Dir::BtoA));
        assert_eq!(f.dir(0, 1), Some(Dir::BtoA));
        assert_eq!(f.dir(1, 0), Some(Dir::AtoB));
        assert_eq!(f.dir(1, 1), Some(Dir::AtoB));
    }

    #[test]
    fn flip_is_an_involution() {
        let g = c4();
        let d = Orientation::all_a_to_b(&g);
        let s: BTreeSet<Vertex> = [Vertex::A(1), Vertex::B(0)].into_iter().collect();
        assert_eq!(flip_vertices(&flip_vertices(&d, &s), &s), d);
    }

    #[test]
    fn flip_complement_agrees_on_connected_graph() {
        let g = c4();
        let d = Orientation::all_a_to_b(&g);
        let s: BTreeSet<Vertex> = [Vertex::A(0), Vertex::B(1)].into_iter().collect();
        let comp: BTreeSet<Vertex> = [Vertex::A(1), Vertex::B(0)].into_iter().collect();
        assert_eq!(flip_vertices(&d, &s), flip_vertices(&d, &comp));
    }

    #[test]
    fn heawood_shape() {
        let h = heawood_graph();
        assert_eq!(h.n_a(), 7);
        assert_eq!(h.n_b(), 7);
        assert_eq!(h.n_edges(), 21);
        assert!(h.degrees().iter().all(|&d| d == 3));
        assert!(h.is_connected());
    }

    #[test]
    fn heawood_girth_is_six() {
        // girth via BFS from every vertex
        let h = heawood_graph();
        let adj = h.unified_adjacency();
        let n = h.n_vertices();
        let mut girth = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        girth = girth.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        assert_eq!(girth, 6);
    }

    #[test]
    fn digraph_rejects_loops_and_duplicates() {
        assert!(matches!(Digraph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(Digraph::new(2, &[(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1))));
        // a 2-cycle is allowed
        assert!(Digraph::new(2, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn matching_rejects_shared_endpoints() {
        assert!(Matching::new(&[(0, 0), (0, 1)]).is_err());
        assert!(Matching::new(&[(0, 0), (1, 0)]).is_err());
        let m = Matching::new(&[(0, 0), (1, 1)]).unwrap();
        assert!(m.is_perfect_in(&c4()));
    }

    #[test]
    fn sign_matrix_of_all_a_to_b_is_biadjacency() {
        let g = c4();
        let d = Orientation::all_a_to_b(&g);
        let s = sign_matrix_of_orientation(&g, &d).unwrap();
        assert_eq!(s.rows(), &[vec![1, 1], vec![1, 1]]);
    }
}
