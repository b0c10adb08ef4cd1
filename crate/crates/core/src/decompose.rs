//! Structural decomposition of 1-extendable bipartite graphs: two-sum
//! splits along reducing matching edges down to braces, trisector
//! enumeration, and trisum splits of braces along 4-circuits.
//!
//! Everything here is orientation-agnostic; it only cuts graphs apart and
//! records how to put them back together. The actual orientation splicing
//! lives one layer up.

use crate::error::{Error, Result};
use crate::graph::{connected_components, BipartiteGraph, Matching, Vertex};
use crate::matching::{digraph_of, is_brace, is_k_extendable, scc_ids};
use std::collections::BTreeSet;

/// One piece of a split, with its embedding into the parent graph.
#[derive(Clone, Debug)]
pub struct SplitPiece {
    pub graph: BipartiteGraph,
    /// `a_map[i]` is the parent A-index of the piece's A-vertex `i`.
    pub a_map: Vec<usize>,
    pub b_map: Vec<usize>,
    /// Piece edges with no counterpart in the parent (join edges and
    /// restored circuit edges), in piece coordinates, sorted.
    pub added_edges: Vec<(usize, usize)>,
}

impl SplitPiece {
    /// Parent edge behind a piece edge, or None for an added edge.
    pub fn parent_edge(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        if self.added_edges.binary_search(&(a, b)).is_ok() {
            None
        } else {
            Some((self.a_map[a], self.b_map[b]))
        }
    }
}

/// A two-sum split of a parent graph along a matching edge `e = (u1, u2)`:
/// `g1` is induced on `X`, its neighborhood, and `e`; `g2` is the rest plus
/// `e`. Both pieces may gain join edges at `u1` resp. `u2`.
#[derive(Clone, Debug)]
pub struct TwoSumSplit {
    /// The reducing edge, parent coordinates.
    pub e: (usize, usize),
    /// The defining set `X` of A-vertices, parent coordinates, sorted.
    pub x: Vec<usize>,
    pub g1: SplitPiece,
    pub g2: SplitPiece,
}

/// Four vertices, two per side, whose removal leaves at least three
/// connected components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Trisector {
    pub a: [usize; 2],
    pub b: [usize; 2],
}

impl Trisector {
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        [Vertex::A(self.a[0]), Vertex::A(self.a[1]), Vertex::B(self.b[0]), Vertex::B(self.b[1])]
            .into_iter()
            .collect()
    }
}

/// A trisum split of a brace along the 4-circuit on a trisector.
#[derive(Clone, Debug)]
pub struct TrisumSplit {
    pub x: Trisector,
    /// The 4-circuit on `x` in parent coordinates, in the fixed cyclic
    /// order a-b-a'-b' with both sides ascending.
    pub circuit: [(usize, usize); 4],
    /// Circuit edges absent from the parent graph (they are restored in
    /// every piece), parent coordinates.
    pub deleted_c_edges: Vec<(usize, usize)>,
    /// Piece 1 and 2 hold one component of `G` minus the trisector each
    /// (smallest first); piece 3 holds all remaining components.
    pub pieces: [SplitPiece; 3],
}

/// Why a graph admits no Pfaffian orientation, as discovered by the
/// decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoPfaffianReason {
    /// A brace on `n >= 3` vertices with more than `2n - 4` edges.
    EdgeBound { n_vertices: usize, n_edges: usize },
    /// A Pfaffian brace on `n >= 5` vertices has at most `n - 5`
    /// trisectors; this one has more.
    TooManyTrisectors { found: usize, bound: usize },
    /// Non-planar, not the Heawood graph, and without a trisector to
    /// split on: no Pfaffian orientation exists.
    NoTrisectorNotBase,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafKind {
    /// A brace left unresolved (produced when only decomposing).
    Brace,
    /// Planar brace, handled by the face-parity orientation.
    Planar,
    /// The Heawood graph, handled by its fixed orientation.
    Heawood,
    /// Graph without a perfect matching; any orientation works.
    NoPerfectMatching,
    NoPfaffian(NoPfaffianReason),
}

/// The record of how a graph was cut down to base cases. Piece maps point
/// to the parent node, so composing them along a path reaches the root.
#[derive(Clone, Debug)]
pub enum DecompositionTree {
    /// Edges in no perfect matching were removed (parent coordinates).
    Pruned { removed: Vec<(usize, usize)>, child: Box<DecompositionTree> },
    Components { pieces: Vec<(SplitPiece, DecompositionTree)> },
    TwoSum { e: (usize, usize), x: Vec<usize>, pieces: Vec<(SplitPiece, DecompositionTree)> },
    Trisum { split: TrisumSplit, children: Vec<DecompositionTree> },
    Leaf { graph: BipartiteGraph, kind: LeafKind },
}

fn edge_name(e: (usize, usize)) -> String {
    format!("{}{}", Vertex::A(e.0), Vertex::B(e.1))
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<&DecompositionTree> {
        match self {
            DecompositionTree::Leaf { .. } => vec![self],
            DecompositionTree::Pruned { child, .. } => child.leaves(),
            DecompositionTree::Components { pieces } | DecompositionTree::TwoSum { pieces, .. } => {
                pieces.iter().flat_map(|(_, t)| t.leaves()).collect()
            }
            DecompositionTree::Trisum { children, .. } => {
                children.iter().flat_map(|t| t.leaves()).collect()
            }
        }
    }

    /// The node reached by following child indices from this node, if the
    /// path exists. The empty path is this node itself.
    pub fn node_at(&self, path: &[usize]) -> Option<&DecompositionTree> {
        let Some((&i, rest)) = path.split_first() else {
            return Some(self);
        };
        match self {
            DecompositionTree::Leaf { .. } => None,
            DecompositionTree::Pruned { child, .. } => {
                if i == 0 {
                    child.node_at(rest)
                } else {
                    None
                }
            }
            DecompositionTree::Components { pieces } | DecompositionTree::TwoSum { pieces, .. } => {
                pieces.get(i).and_then(|(_, t)| t.node_at(rest))
            }
            DecompositionTree::Trisum { children, .. } => {
                children.get(i).and_then(|t| t.node_at(rest))
            }
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            DecompositionTree::Pruned { removed, child } => {
                out.push_str(&format!(
                    "{pad}pruned {} edge(s) outside every perfect matching\n",
                    removed.len()
                ));
                child.render_into(depth + 1, out);
            }
            DecompositionTree::Components { pieces } => {
                out.push_str(&format!("{pad}{} connected component(s)\n", pieces.len()));
                for (_, t) in pieces {
                    t.render_into(depth + 1, out);
                }
            }
            DecompositionTree::TwoSum { e, x, pieces } => {
                out.push_str(&format!(
                    "{pad}two-sum along {} with |X| = {}\n",
                    edge_name(*e),
                    x.len()
                ));
                for (_, t) in pieces {
                    t.render_into(depth + 1, out);
                }
            }
            DecompositionTree::Trisum { split, children } => {
                out.push_str(&format!(
                    "{pad}trisum on {{{}, {}, {}, {}}}\n",
                    Vertex::A(split.x.a[0]),
                    Vertex::A(split.x.a[1]),
                    Vertex::B(split.x.b[0]),
                    Vertex::B(split.x.b[1]),
                ));
                for t in children {
                    t.render_into(depth + 1, out);
                }
            }
            DecompositionTree::Leaf { graph, kind } => {
                let what = match kind {
                    LeafKind::Brace => "brace".to_string(),
                    LeafKind::Planar => "planar brace".to_string(),
                    LeafKind::Heawood => "Heawood graph".to_string(),
                    LeafKind::NoPerfectMatching => "no perfect matching".to_string(),
                    LeafKind::NoPfaffian(r) => match r {
                        NoPfaffianReason::EdgeBound { n_vertices, n_edges } => format!(
                            "too many edges for a Pfaffian brace ({n_edges} > 2*{n_vertices} - 4)"
                        ),
                        NoPfaffianReason::TooManyTrisectors { found, bound } => {
                            format!("too many trisectors ({found} > {bound})")
                        }
                        NoPfaffianReason::NoTrisectorNotBase => {
                            "non-planar, not Heawood, no trisector".to_string()
                        }
                    },
                };
                out.push_str(&format!(
                    "{pad}leaf: {what}, {}+{} vertices, {} edges\n",
                    graph.n_a(),
                    graph.n_b(),
                    graph.n_edges()
                ));
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        fn piece_json(p: &SplitPiece) -> serde_json::Value {
            json!({
                "n_a": p.graph.n_a(),
                "n_b": p.graph.n_b(),
                "n_edges": p.graph.n_edges(),
                "a_map": p.a_map,
                "b_map": p.b_map,
                "added_edges": p.added_edges,
            })
        }
        match self {
            DecompositionTree::Pruned { removed, child } => json!({
                "kind": "pruned",
                "removed_edges": removed,
                "child": child.to_json(),
            }),
            DecompositionTree::Components { pieces } => json!({
                "kind": "components",
                "pieces": pieces.iter().map(|(p, _)| piece_json(p)).collect::<Vec<_>>(),
                "children": pieces.iter().map(|(_, t)| t.to_json()).collect::<Vec<_>>(),
            }),
            DecompositionTree::TwoSum { e, x, pieces } => json!({
                "kind": "two_sum",
                "edge": [e.0, e.1],
                "x": x,
                "pieces": pieces.iter().map(|(p, _)| piece_json(p)).collect::<Vec<_>>(),
                "children": pieces.iter().map(|(_, t)| t.to_json()).collect::<Vec<_>>(),
            }),
            DecompositionTree::Trisum { split, children } => json!({
                "kind": "trisum",
                "x": { "a": split.x.a, "b": split.x.b },
                "deleted_circuit_edges": split.deleted_c_edges,
                "pieces": split.pieces.iter().map(piece_json).collect::<Vec<_>>(),
                "children": children.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            }),
            DecompositionTree::Leaf { graph, kind } => {
                let (kind_str, reason) = match kind {
                    LeafKind::Brace => ("brace", serde_json::Value::Null),
                    LeafKind::Planar => ("planar", serde_json::Value::Null),
                    LeafKind::Heawood => ("heawood", serde_json::Value::Null),
                    LeafKind::NoPerfectMatching => {
                        ("no_perfect_matching", serde_json::Value::Null)
                    }
                    LeafKind::NoPfaffian(r) => (
                        "no_pfaffian",
                        match r {
                            NoPfaffianReason::EdgeBound { n_vertices, n_edges } => json!({
                                "reason": "edge_bound",
                                "n_vertices": n_vertices,
                                "n_edges": n_edges,
                            }),
                            NoPfaffianReason::TooManyTrisectors { found, bound } => json!({
                                "reason": "too_many_trisectors",
                                "found": found,
                                "bound": bound,
                            }),
                            NoPfaffianReason::NoTrisectorNotBase => json!({
                                "reason": "no_trisector_not_base",
                            }),
                        },
                    ),
                };
                json!({
                    "kind": "leaf",
                    "leaf": kind_str,
                    "detail": reason,
                    "n_a": graph.n_a(),
                    "n_b": graph.n_b(),
                    "n_edges": graph.n_edges(),
                })
            }
        }
    }
}

/// The matching of a piece induced by a parent matching: pairs whose
/// endpoints both map into the piece. Join edges are never matched (their
/// endpoints' partners already live elsewhere), so this is well defined.
pub(crate) fn piece_matching(piece: &SplitPiece, parent_m: &Matching) -> Result<Matching> {
    let mut edges = Vec::new();
    for (la, &pa) in piece.a_map.iter().enumerate() {
        if let Some(pb) = parent_m.partner_of_a(pa) {
            if let Ok(lb) = piece.b_map.binary_search(&pb) {
                edges.push((la, lb));
            }
        }
    }
    let m = Matching::new(&edges)?;
    if !m.is_perfect_in(&piece.graph) {
        return Err(Error::Internal("piece did not inherit a perfect matching".into()));
    }
    Ok(m)
}

/// Build the two pieces of a two-sum split of `h` along `e = (u1, u2)`
/// with defining set `x` (A-side, `h` coordinates).
///
/// With `Y1` the matched partners of `X`, the neighborhood condition
/// `N(X) - {u2} = Y1` must hold. Piece 1 is induced on `X + Y1 + e`, piece
/// 2 on the rest plus `e`; a vertex of `Y1` cut off from the outside world
/// (adjacent to the removed `Y2` side but not to `u1`) gets a join edge to
/// `u1` in piece 1, and symmetrically at `u2` in piece 2.
fn build_two_sum(
    h: &BipartiteGraph,
    m: &Matching,
    e: (usize, usize),
    x: &[usize],
) -> Result<TwoSumSplit> {
    let (u1, u2) = e;
    let xset: BTreeSet<usize> = x.iter().copied().collect();
    if xset.contains(&u1) || xset.is_empty() || xset.len() + 1 >= h.n_a() {
        return Err(Error::Internal("two-sum set X out of bounds".into()));
    }
    let y1: BTreeSet<usize> = x
        .iter()
        .map(|&a| m.partner_of_a(a).ok_or_else(|| Error::Internal("X vertex unmatched".into())))
        .collect::<Result<_>>()?;
    for &a in x {
        for b in h.neighbors_of_a(a) {
            if b != u2 && !y1.contains(&b) {
                return Err(Error::Internal("two-sum set X is not closed".into()));
            }
        }
    }
    let y2: Vec<usize> = (0..h.n_a()).filter(|a| !xset.contains(a) && *a != u1).collect();
    let b2: Vec<usize> = (0..h.n_b()).filter(|b| !y1.contains(b) && *b != u2).collect();

    let mut g1_a: Vec<usize> = xset.iter().copied().collect();
    g1_a.push(u1);
    let mut g1_b: Vec<usize> = y1.iter().copied().collect();
    g1_b.push(u2);
    let (g1_graph, g1_amap, g1_bmap) = h.induced(&g1_a, &g1_b);
    let mut g2_a = y2.clone();
    g2_a.push(u1);
    let mut g2_b = b2.clone();
    g2_b.push(u2);
    let (g2_graph, g2_amap, g2_bmap) = h.induced(&g2_a, &g2_b);

    // join edges: u1 picks up the Y1 vertices that lose their Y2 neighbors,
    // u2 the Y2 vertices that lose their Y1 neighbors
    let mut g1_added = Vec::new();
    let u1_local = g1_amap.binary_search(&u1).expect("u1 in piece 1");
    for (lb, &b) in g1_bmap.iter().enumerate() {
        if b == u2 || h.has_edge(u1, b) {
            continue;
        }
        if y2.iter().any(|&z| h.has_edge(z, b)) {
            g1_added.push((u1_local, lb));
        }
    }
    let mut g2_added = Vec::new();
    let u2_local = g2_bmap.binary_search(&u2).expect("u2 in piece 2");
    for (la, &a) in g2_amap.iter().enumerate() {
        if a == u1 || h.has_edge(a, u2) {
            continue;
        }
        if y1.iter().any(|&y| h.has_edge(a, y)) {
            g2_added.push((la, u2_local));
        }
    }
    g1_added.sort_unstable();
    g2_added.sort_unstable();

    let extend = |g: &BipartiteGraph, extra: &[(usize, usize)]| -> Result<BipartiteGraph> {
        let mut edges = g.edges().to_vec();
        edges.extend_from_slice(extra);
        BipartiteGraph::new(g.n_a(), g.n_b(), &edges)
    };
    let g1 = SplitPiece {
        graph: extend(&g1_graph, &g1_added)?,
        a_map: g1_amap,
        b_map: g1_bmap,
        added_edges: g1_added,
    };
    let g2 = SplitPiece {
        graph: extend(&g2_graph, &g2_added)?,
        a_map: g2_amap,
        b_map: g2_bmap,
        added_edges: g2_added,
    };
    if g1.graph.n_vertices() >= h.n_vertices() || g2.graph.n_vertices() >= h.n_vertices() {
        return Err(Error::Internal("two-sum piece failed to shrink".into()));
    }
    Ok(TwoSumSplit { e, x: xset.into_iter().collect(), g1, g2 })
}

/// The chain of two-sum splits of `h` along the matching edge `e`.
///
/// Empty when deleting the ends of `e` leaves a 1-extendable graph (`e` is
/// not reducing). Otherwise the defining sets `X` are read off the
/// strongly connected components of the matching digraph of `h` minus the
/// ends of `e`: each split peels off one component with no outgoing arcs
/// (ties broken by smallest A-vertex), and `splits[i + 1]` applies to
/// `splits[i].g2`, in that piece's coordinates. Peeled pieces never see
/// `e` as reducing again.
pub fn reducing_edge_splits(
    h: &BipartiteGraph,
    m: &Matching,
    e: (usize, usize),
) -> Result<Vec<TwoSumSplit>> {
    m.validate_against(h)?;
    if !m.contains(e.0, e.1) {
        return Err(Error::NotAMatching(e.0, e.1));
    }
    if !is_k_extendable(h, 1)? {
        return Err(Error::NotOneExtendable);
    }

    let mut out = Vec::new();
    let mut work = h.clone();
    let mut work_m = m.clone();
    let (mut u1, mut u2) = e;
    loop {
        let del: BTreeSet<Vertex> = [Vertex::A(u1), Vertex::B(u2)].into_iter().collect();
        let (rest, rest_amap, _) = work.delete_vertices(&del);
        if rest.n_vertices() == 0 {
            break;
        }
        let rest_m = {
            let pairs: Vec<(usize, usize)> = rest_amap
                .iter()
                .enumerate()
                .map(|(la, &pa)| {
                    let pb = work_m.partner_of_a(pa).expect("matched in work graph");
                    let lb = pb - usize::from(pb > u2); // B-indices above u2 shift down
                    (la, lb)
                })
                .collect();
            Matching::new(&pairs)?
        };
        let md = digraph_of(&rest, &rest_m)?;
        let (ids, count) = scc_ids(&md.digraph);
        if count <= 1 {
            break;
        }
        // components with no outgoing arc; take the one whose smallest
        // A-vertex is smallest
        let mut has_out = vec![false; count];
        for &(p, q) in md.digraph.arcs() {
            if ids[p] != ids[q] {
                has_out[ids[p]] = true;
            }
        }
        let sink = (0..count)
            .filter(|&c| !has_out[c])
            .min_by_key(|&c| {
                (0..md.pairs.len())
                    .filter(|&p| ids[p] == c)
                    .map(|p| rest_amap[md.pairs[p].0])
                    .min()
                    .expect("components are nonempty")
            })
            .expect("a finite digraph has a sink component");
        let x: Vec<usize> = (0..md.pairs.len())
            .filter(|&p| ids[p] == sink)
            .map(|p| rest_amap[md.pairs[p].0])
            .collect();

        let split = build_two_sum(&work, &work_m, (u1, u2), &x)?;
        let g2 = split.g2.clone();
        out.push(split);
        u1 = g2.a_map.binary_search(&u1).expect("u1 stays in the remainder");
        u2 = g2.b_map.binary_search(&u2).expect("u2 stays in the remainder");
        work_m = piece_matching(&g2, &work_m)?;
        work = g2.graph;
    }
    Ok(out)
}

/// Decompose a connected 1-extendable graph into braces by exhausting
/// reducing matching edges. Matching edges are processed in ascending
/// order; each piece created while processing edge `i` is only examined
/// for edges after `i`, which suffices because peeled pieces never see an
/// already-processed edge as reducing again. Every leaf is verified to be
/// a brace.
pub fn decompose_into_braces(g: &BipartiteGraph, m: &Matching) -> Result<DecompositionTree> {
    m.validate_against(g)?;
    if !m.is_perfect_in(g) {
        return Err(Error::MatchingNotPerfect);
    }
    if !is_k_extendable(g, 1)? {
        return Err(Error::NotOneExtendable);
    }
    let edges: Vec<(usize, usize)> = m.edges().collect();

    fn rec(
        h: BipartiteGraph,
        h_m: Matching,
        original_edges: &[(usize, usize)],
        // composed maps from h's coordinates to the original graph's
        a_map: &[usize],
        b_map: &[usize],
        start: usize,
    ) -> Result<DecompositionTree> {
        for (i, &(oa, ob)) in original_edges.iter().enumerate().skip(start) {
            let (Ok(u1), Ok(u2)) =
                (a_map.binary_search(&oa), b_map.binary_search(&ob))
            else {
                continue;
            };
            if !h_m.contains(u1, u2) {
                continue;
            }
            let chain = reducing_edge_splits(&h, &h_m, (u1, u2))?;
            if chain.is_empty() {
                continue;
            }
            return chain_tree(&h, &h_m, chain, 0, original_edges, a_map, b_map, i + 1);
        }
        if !is_brace(&h)? {
            return Err(Error::Internal("decomposition leaf is not a brace".into()));
        }
        Ok(DecompositionTree::Leaf { graph: h, kind: LeafKind::Brace })
    }

    #[allow(clippy::too_many_arguments)]
    fn chain_tree(
        parent: &BipartiteGraph,
        parent_m: &Matching,
        chain: Vec<TwoSumSplit>,
        idx: usize,
        original_edges: &[(usize, usize)],
        a_map: &[usize],
        b_map: &[usize],
        next: usize,
    ) -> Result<DecompositionTree> {
        let split = &chain[idx];
        let compose = |piece: &SplitPiece| -> (Vec<usize>, Vec<usize>) {
            (
                piece.a_map.iter().map(|&p| a_map[p]).collect(),
                piece.b_map.iter().map(|&p| b_map[p]).collect(),
            )
        };
        let (g1_a, g1_b) = compose(&split.g1);
        let g1_m = piece_matching(&split.g1, parent_m)?;
        let left =
            rec(split.g1.graph.clone(), g1_m, original_edges, &g1_a, &g1_b, next)?;
        let (g2_a, g2_b) = compose(&split.g2);
        let g2_m = piece_matching(&split.g2, parent_m)?;
        let right = if idx + 1 < chain.len() {
            chain_tree(
                &split.g2.graph,
                &g2_m,
                chain.clone(),
                idx + 1,
                original_edges,
                &g2_a,
                &g2_b,
                next,
            )?
        } else {
            rec(split.g2.graph.clone(), g2_m, original_edges, &g2_a, &g2_b, next)?
        };
        let _ = parent;
        Ok(DecompositionTree::TwoSum {
            e: split.e,
            x: split.x.clone(),
            pieces: vec![(split.g1.clone(), left), (split.g2.clone(), right)],
        })
    }

    let a_map: Vec<usize> = (0..g.n_a()).collect();
    let b_map: Vec<usize> = (0..g.n_b()).collect();
    rec(g.clone(), m.clone(), &edges, &a_map, &b_map, 0)
}

/// All trisectors of a brace: balanced 4-sets (two vertices per side)
/// whose removal leaves at least three components. Exhaustive scan,
/// ascending lexicographic order; independent of edge input order because
/// graphs store edges sorted.
pub fn enumerate_trisectors(g: &BipartiteGraph) -> Result<Vec<Trisector>> {
    if !is_brace(g)? {
        return Err(Error::NotABrace);
    }
    let mut out = Vec::new();
    for a1 in 0..g.n_a() {
        for a2 in (a1 + 1)..g.n_a() {
            for b1 in 0..g.n_b() {
                for b2 in (b1 + 1)..g.n_b() {
                    let t = Trisector { a: [a1, a2], b: [b1, b2] };
                    let (rest, _, _) = g.delete_vertices(&t.vertices());
                    if rest.component_count() >= 3 {
                        out.push(t);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Split a brace along the 4-circuit on a trisector.
///
/// The components of `G` minus the trisector, sorted by size and then by
/// smallest parent vertex, are grouped as (first, second, all the rest);
/// each piece is the component group plus the full 4-circuit, restoring
/// circuit edges the parent lacks.
pub fn trisum_split(g: &BipartiteGraph, x: &Trisector) -> Result<TrisumSplit> {
    for &a in &x.a {
        if a >= g.n_a() {
            return Err(Error::VertexOutOfRange(format!("a{} with n_a={}", a + 1, g.n_a())));
        }
    }
    for &b in &x.b {
        if b >= g.n_b() {
            return Err(Error::VertexOutOfRange(format!("b{} with n_b={}", b + 1, g.n_b())));
        }
    }
    if x.a[0] == x.a[1] || x.b[0] == x.b[1] {
        return Err(Error::NotATrisector);
    }
    let (rest, rest_amap, rest_bmap) = g.delete_vertices(&x.vertices());
    let comps = connected_components(&rest);
    if comps.len() < 3 {
        return Err(Error::NotATrisector);
    }

    // sort components by (size, smallest parent unified index)
    let mut order: Vec<usize> = (0..comps.len()).collect();
    let parent_min = |ci: usize| -> usize {
        let c = &comps[ci];
        let a_min = c.a_map.iter().map(|&ra| rest_amap[ra]).min();
        let b_min = c.b_map.iter().map(|&rb| g.n_a() + rest_bmap[rb]).min();
        a_min.into_iter().chain(b_min).min().expect("components are nonempty")
    };
    order.sort_by_key(|&ci| (comps[ci].graph.n_vertices(), parent_min(ci)));

    let (a1, a2) = (x.a[0].min(x.a[1]), x.a[0].max(x.a[1]));
    let (b1, b2) = (x.b[0].min(x.b[1]), x.b[0].max(x.b[1]));
    let circuit = [(a1, b1), (a2, b1), (a2, b2), (a1, b2)];
    let deleted_c_edges: Vec<(usize, usize)> =
        circuit.iter().copied().filter(|&(a, b)| !g.has_edge(a, b)).collect();

    let piece_of = |comp_ids: &[usize]| -> Result<SplitPiece> {
        let mut a_keep = vec![a1, a2];
        let mut b_keep = vec![b1, b2];
        for &ci in comp_ids {
            a_keep.extend(comps[ci].a_map.iter().map(|&ra| rest_amap[ra]));
            b_keep.extend(comps[ci].b_map.iter().map(|&rb| rest_bmap[rb]));
        }
        let (induced, a_map, b_map) = g.induced(&a_keep, &b_keep);
        let mut added: Vec<(usize, usize)> = deleted_c_edges
            .iter()
            .map(|&(a, b)| {
                (
                    a_map.binary_search(&a).expect("circuit vertex kept"),
                    b_map.binary_search(&b).expect("circuit vertex kept"),
                )
            })
            .collect();
        added.sort_unstable();
        let mut edges = induced.edges().to_vec();
        edges.extend_from_slice(&added);
        Ok(SplitPiece {
            graph: BipartiteGraph::new(induced.n_a(), induced.n_b(), &edges)?,
            a_map,
            b_map,
            added_edges: added,
        })
    };

    let pieces = [
        piece_of(&order[..1])?,
        piece_of(&order[1..2])?,
        piece_of(&order[2..])?,
    ];
    Ok(TrisumSplit {
        x: Trisector { a: [a1, a2], b: [b1, b2] },
        circuit,
        deleted_c_edges,
        pieces,
    })
}
