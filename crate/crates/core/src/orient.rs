//! The top-level decision pipeline: decompose, solve the brace base cases,
//! and splice piece orientations back together across trisums, two-sums,
//! components, and pruned edges.
//!
//! Soundness of the splices rests on two facts. For a trisum, vertex flips
//! inside the shared 4-circuit align the piece orientations, and the union
//! of aligned Pfaffian orientations is Pfaffian. For a two-sum along a
//! matching edge e = (u1, u2), every perfect matching of the whole graph
//! crosses the tight cut around one piece exactly once, which factors its
//! sign as (constant) x (piece-1 sign) x (piece-2 sign) provided each
//! cross edge (z, y) is directed with sign sign(e) * D1(u1, y) * D2(z, u2).
//! The latter identity holds for arbitrary piece orientations, so Pfaffian
//! pieces always splice to a Pfaffian whole; a self-check at desk scale
//! guards the implementation anyway.

use crate::decompose::{
    decompose_into_braces, enumerate_trisectors, piece_matching, trisum_split, DecompositionTree,
    LeafKind, NoPfaffianReason, SplitPiece, Trisector, TrisumSplit, TwoSumSplit,
};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, flip_vertices, BipartiteGraph, Dir, Matching, Orientation, Vertex,
};
use crate::matching::{is_brace, max_matching, prune_non_pm_edges};
use crate::oracle::{all_pm_signs_equal, Limits};
use crate::planar::{fkt_orientation, heawood_orientation, is_heawood};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Why the pipeline concluded there is no Pfaffian orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// A brace with more than `2n - 4` edges.
    EdgeBoundExceeded,
    /// A brace with more than `n - 5` trisectors.
    TooManyTrisectors,
    /// A nonplanar brace without trisectors that is not the Heawood graph.
    NonplanarNonHeawoodNoTrisector,
    /// A piece deeper in the tree failed; the path lists child indices
    /// from the root to the failing leaf.
    PieceFailed(Vec<usize>),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::EdgeBoundExceeded => write!(f, "edge bound exceeded"),
            FailureReason::TooManyTrisectors => write!(f, "too many trisectors"),
            FailureReason::NonplanarNonHeawoodNoTrisector => {
                write!(f, "nonplanar, not the Heawood graph, and has no trisector")
            }
            FailureReason::PieceFailed(path) => write!(f, "piece at {path:?} failed"),
        }
    }
}

/// The answer of the decision pipeline, together with the decomposition
/// that produced it.
#[derive(Clone, Debug)]
pub enum PfaffianVerdict {
    /// A Pfaffian orientation covering exactly the input's edges.
    Yes { orientation: Orientation, tree: DecompositionTree },
    /// No Pfaffian orientation exists; the reason names the tree node
    /// that settled it.
    No { tree: DecompositionTree, reason: FailureReason },
}

impl PfaffianVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PfaffianVerdict::Yes { .. })
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            PfaffianVerdict::Yes { orientation, .. } => Some(orientation),
            PfaffianVerdict::No { .. } => None,
        }
    }

    pub fn tree(&self) -> &DecompositionTree {
        match self {
            PfaffianVerdict::Yes { tree, .. } | PfaffianVerdict::No { tree, .. } => tree,
        }
    }
}

/// Internal verdict with the failure path kept separate so parents can
/// extend it with their child index.
enum Resolved {
    Done(Orientation, DecompositionTree),
    Failed { tree: DecompositionTree, reason: FailureReason, path: Vec<usize> },
}

fn verdict_of(r: Resolved) -> PfaffianVerdict {
    match r {
        Resolved::Done(orientation, tree) => PfaffianVerdict::Yes { orientation, tree },
        Resolved::Failed { tree, reason, path } => {
            let reason = if path.is_empty() { reason } else { FailureReason::PieceFailed(path) };
            PfaffianVerdict::No { tree, reason }
        }
    }
}

/// Flip `d_mov` at a subset of the four circuit vertices so that it agrees
/// with `d_fixed` on the circuit; edge `c_mov[i]` pairs with `c_fixed[i]`.
///
/// Subsets are tried smallest first (by size, then by bit pattern over
/// [A(a1), A(a2), B(b1), B(b2)] with the vertex lists sorted), so an
/// already-agreeing orientation comes back unchanged. Vertex flips
/// preserve the parity of a 4-circuit's orientation and act transitively
/// within each parity class, so agreement is reachable exactly when both
/// restrictions are oddly oriented (or both evenly); otherwise this fails.
pub fn align_on_circuit(
    d_fixed: &Orientation,
    c_fixed: &[(usize, usize); 4],
    d_mov: &Orientation,
    c_mov: &[(usize, usize); 4],
) -> Result<Orientation> {
    for i in 0..4 {
        if d_fixed.dir(c_fixed[i].0, c_fixed[i].1).is_none() {
            return Err(Error::MissingEdge(c_fixed[i].0, c_fixed[i].1));
        }
        if d_mov.dir(c_mov[i].0, c_mov[i].1).is_none() {
            return Err(Error::MissingEdge(c_mov[i].0, c_mov[i].1));
        }
    }
    let avs: BTreeSet<usize> = c_mov.iter().map(|e| e.0).collect();
    let bvs: BTreeSet<usize> = c_mov.iter().map(|e| e.1).collect();
    if avs.len() != 2 || bvs.len() != 2 {
        return Err(Error::Internal("alignment circuit must span 2 + 2 vertices".into()));
    }
    let verts: Vec<Vertex> = avs
        .into_iter()
        .map(Vertex::A)
        .chain(bvs.into_iter().map(Vertex::B))
        .collect();
    let mut masks: Vec<u32> = (0..16).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let s: BTreeSet<Vertex> =
            verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let cand = flip_vertices(d_mov, &s);
        if (0..4).all(|i| cand.dir(c_mov[i].0, c_mov[i].1) == d_fixed.dir(c_fixed[i].0, c_fixed[i].1))
        {
            return Ok(cand);
        }
    }
    Err(Error::NoAligningFlip)
}

fn local_circuit(piece: &SplitPiece, circuit: &[(usize, usize); 4]) -> Result<[(usize, usize); 4]> {
    let mut out = [(0, 0); 4];
    for (i, &(a, b)) in circuit.iter().enumerate() {
        let la = piece
            .a_map
            .binary_search(&a)
            .map_err(|_| Error::Internal("circuit vertex missing from a trisum piece".into()))?;
        let lb = piece
            .b_map
            .binary_search(&b)
            .map_err(|_| Error::Internal("circuit vertex missing from a trisum piece".into()))?;
        out[i] = (la, lb);
    }
    Ok(out)
}

/// Combine Pfaffian orientations of the three trisum pieces into one of
/// the parent graph: align the second and third piece to the first on the
/// shared 4-circuit, take the union, and drop the restored circuit edges
/// the parent never had.
pub fn splice_trisum(
    g: &BipartiteGraph,
    split: &TrisumSplit,
    d1: &Orientation,
    d2: &Orientation,
    d3: &Orientation,
) -> Result<Orientation> {
    d1.validate_against(&split.pieces[0].graph)?;
    d2.validate_against(&split.pieces[1].graph)?;
    d3.validate_against(&split.pieces[2].graph)?;
    let c1 = local_circuit(&split.pieces[0], &split.circuit)?;
    let c2 = local_circuit(&split.pieces[1], &split.circuit)?;
    let c3 = local_circuit(&split.pieces[2], &split.circuit)?;
    let aligned = [
        d1.clone(),
        align_on_circuit(d1, &c1, d2, &c2)?,
        align_on_circuit(d1, &c1, d3, &c3)?,
    ];
    let mut out = Orientation::new(BTreeMap::new());
    for (piece, d) in split.pieces.iter().zip(aligned.iter()) {
        for ((la, lb), dir) in d.iter() {
            let Some((pa, pb)) = piece.parent_edge(la, lb) else {
                continue; // a restored circuit edge the parent lacks
            };
            if let Some(prev) = out.dir(pa, pb) {
                if prev != dir {
                    return Err(Error::Internal("aligned trisum pieces disagree".into()));
                }
            }
            out.insert(pa, pb, dir);
        }
    }
    if out.len() != g.n_edges() {
        return Err(Error::Internal("trisum splice missed parent edges".into()));
    }
    Ok(out)
}

/// Combine Pfaffian orientations of the two pieces of a two-sum along
/// `e = (u1, u2)` into one of the parent graph `h`.
///
/// After flipping `d2` at `u2` if needed so both pieces orient `e` the
/// same way, edges living in a piece keep their piece direction, and each
/// cross edge (z, y) with z on the piece-2 side and y on the piece-1 side
/// gets the sign sign(e) * d1(u1, y) * d2(z, u2); the hub edges u1-y and
/// z-u2 exist in the pieces by construction (as parent or join edges).
/// The result is checked against the matching-sign oracle whenever the
/// parent has at most the configured number of perfect matchings.
pub fn splice_two_sum(
    h: &BipartiteGraph,
    split: &TwoSumSplit,
    d1: &Orientation,
    d2: &Orientation,
) -> Result<Orientation> {
    let (g1, g2) = (&split.g1, &split.g2);
    d1.validate_against(&g1.graph)?;
    d2.validate_against(&g2.graph)?;
    let to_local = |v: usize, map: &[usize], what: &str| -> Result<usize> {
        map.binary_search(&v)
            .map_err(|_| Error::Internal(format!("{what} missing from a two-sum piece")))
    };
    let u1_1 = to_local(split.e.0, &g1.a_map, "u1")?;
    let u2_1 = to_local(split.e.1, &g1.b_map, "u2")?;
    let u1_2 = to_local(split.e.0, &g2.a_map, "u1")?;
    let u2_2 = to_local(split.e.1, &g2.b_map, "u2")?;
    let e_dir =
        d1.dir(u1_1, u2_1).ok_or(Error::MissingEdge(split.e.0, split.e.1))?;
    let d2 = if d2.dir(u1_2, u2_2).ok_or(Error::MissingEdge(split.e.0, split.e.1))? == e_dir {
        d2.clone()
    } else {
        flip_vertices(d2, &BTreeSet::from([Vertex::B(u2_2)]))
    };
    let eps = e_dir.sign();

    let mut out = Orientation::new(BTreeMap::new());
    for (piece, d) in [(g1, d1), (g2, &d2)] {
        for ((la, lb), dir) in d.iter() {
            let Some((pa, pb)) = piece.parent_edge(la, lb) else {
                continue; // join edge, not a parent edge
            };
            if let Some(prev) = out.dir(pa, pb) {
                if prev != dir {
                    return Err(Error::Internal("two-sum pieces disagree on the shared edge".into()));
                }
            }
            out.insert(pa, pb, dir);
        }
    }
    for &(pa, pb) in h.edges() {
        if out.dir(pa, pb).is_some() {
            continue;
        }
        let z = to_local(pa, &g2.a_map, "a cross endpoint")?;
        let y = to_local(pb, &g1.b_map, "a cross endpoint")?;
        let s1 = d1
            .sign(u1_1, y)
            .ok_or_else(|| Error::Internal("piece 1 lacks its hub edge".into()))?;
        let s2 = d2
            .sign(z, u2_2)
            .ok_or_else(|| Error::Internal("piece 2 lacks its hub edge".into()))?;
        out.insert(pa, pb, Dir::from_sign(eps * s1 * s2));
    }
    if out.len() != h.n_edges() {
        return Err(Error::Internal("two-sum splice missed parent edges".into()));
    }
    match all_pm_signs_equal(h, &out, &Limits::default())? {
        Some(false) => Err(Error::SpliceSelfCheck),
        Some(true) | None => Ok(out),
    }
}

/// Decide a brace given its full trisector list, recursing through trisum
/// splits: a list longer than `n - 5` is an immediate No; an empty list
/// means a base case (planar, Heawood, or No); otherwise split on the
/// smallest trisector and recurse on the pieces with freshly enumerated
/// lists.
pub fn brace_pfaffian(g: &BipartiteGraph, trisectors: &[Trisector]) -> Result<PfaffianVerdict> {
    let fresh = enumerate_trisectors(g)?;
    let mut given = trisectors.to_vec();
    given.sort();
    given.dedup();
    if given != fresh {
        return Err(Error::Internal("trisector list does not match the graph".into()));
    }
    Ok(verdict_of(brace_rec(g, &fresh)?))
}

fn brace_rec(g: &BipartiteGraph, trisectors: &[Trisector]) -> Result<Resolved> {
    let n = g.n_vertices();
    // a nonempty list forces n >= 7, so n - 5 cannot underflow
    if !trisectors.is_empty() && trisectors.len() > n - 5 {
        let kind = LeafKind::NoPfaffian(NoPfaffianReason::TooManyTrisectors {
            found: trisectors.len(),
            bound: n - 5,
        });
        return Ok(Resolved::Failed {
            tree: DecompositionTree::Leaf { graph: g.clone(), kind },
            reason: FailureReason::TooManyTrisectors,
            path: Vec::new(),
        });
    }
    if trisectors.is_empty() {
        match fkt_orientation(g) {
            Ok(d) => {
                let tree = DecompositionTree::Leaf { graph: g.clone(), kind: LeafKind::Planar };
                return Ok(Resolved::Done(d, tree));
            }
            Err(Error::NotPlanar) => {}
            Err(e) => return Err(e),
        }
        if is_heawood(g) {
            let tree = DecompositionTree::Leaf { graph: g.clone(), kind: LeafKind::Heawood };
            return Ok(Resolved::Done(heawood_orientation(g)?, tree));
        }
        return Ok(Resolved::Failed {
            tree: DecompositionTree::Leaf {
                graph: g.clone(),
                kind: LeafKind::NoPfaffian(NoPfaffianReason::NoTrisectorNotBase),
            },
            reason: FailureReason::NonplanarNonHeawoodNoTrisector,
            path: Vec::new(),
        });
    }
    let split = trisum_split(g, &trisectors[0])?;
    let mut children = Vec::with_capacity(3);
    let mut dirs = Vec::with_capacity(3);
    let mut fail: Option<(FailureReason, Vec<usize>)> = None;
    for (i, piece) in split.pieces.iter().enumerate() {
        let sub = enumerate_trisectors(&piece.graph).map_err(|e| match e {
            Error::NotABrace => Error::Internal("a trisum piece of a brace must be a brace".into()),
            other => other,
        })?;
        match brace_rec(&piece.graph, &sub)? {
            Resolved::Done(d, t) => {
                dirs.push(d);
                children.push(t);
            }
            Resolved::Failed { tree, reason, mut path } => {
                if fail.is_none() {
                    path.insert(0, i);
                    fail = Some((reason, path));
                }
                children.push(tree);
            }
        }
    }
    if let Some((reason, path)) = fail {
        return Ok(Resolved::Failed {
            tree: DecompositionTree::Trisum { split, children },
            reason,
            path,
        });
    }
    let d = splice_trisum(g, &split, &dirs[0], &dirs[1], &dirs[2])?;
    Ok(Resolved::Done(d, DecompositionTree::Trisum { split, children }))
}

/// Decide a brace: reject on the edge bound (a brace on n >= 3 vertices
/// with more than 2n - 4 edges contains K3,3), then enumerate trisectors
/// and run the trisum recursion.
pub fn brace_entry(g: &BipartiteGraph) -> Result<PfaffianVerdict> {
    if !is_brace(g)? {
        return Err(Error::NotABrace);
    }
    Ok(verdict_of(brace_entry_rec(g)?))
}

fn brace_entry_rec(g: &BipartiteGraph) -> Result<Resolved> {
    let n = g.n_vertices();
    let m = g.n_edges();
    if n >= 3 && m > 2 * n - 4 {
        let kind =
            LeafKind::NoPfaffian(NoPfaffianReason::EdgeBound { n_vertices: n, n_edges: m });
        return Ok(Resolved::Failed {
            tree: DecompositionTree::Leaf { graph: g.clone(), kind },
            reason: FailureReason::EdgeBoundExceeded,
            path: Vec::new(),
        });
    }
    let trisectors = enumerate_trisectors(g)?;
    brace_rec(g, &trisectors)
}

/// Resolve a brace-decomposition tree: decide each brace leaf and splice
/// two-sum pieces back together bottom-up. `h` is the graph the tree
/// describes. All siblings are resolved even after a failure so the
/// returned tree is complete; the first failing child (in child order)
/// supplies the reason.
fn resolve(h: &BipartiteGraph, tree: DecompositionTree) -> Result<Resolved> {
    match tree {
        DecompositionTree::Leaf { graph, kind: LeafKind::Brace } => brace_entry_rec(&graph),
        DecompositionTree::TwoSum { e, x, pieces } => {
            let mut out_pieces = Vec::with_capacity(pieces.len());
            let mut dirs = Vec::with_capacity(pieces.len());
            let mut fail: Option<(FailureReason, Vec<usize>)> = None;
            for (i, (piece, sub)) in pieces.into_iter().enumerate() {
                match resolve(&piece.graph, sub)? {
                    Resolved::Done(d, t) => {
                        dirs.push(d);
                        out_pieces.push((piece, t));
                    }
                    Resolved::Failed { tree, reason, mut path } => {
                        if fail.is_none() {
                            path.insert(0, i);
                            fail = Some((reason, path));
                        }
                        out_pieces.push((piece, tree));
                    }
                }
            }
            if let Some((reason, path)) = fail {
                return Ok(Resolved::Failed {
                    tree: DecompositionTree::TwoSum { e, x, pieces: out_pieces },
                    reason,
                    path,
                });
            }
            let split = TwoSumSplit {
                e,
                x: x.clone(),
                g1: out_pieces[0].0.clone(),
                g2: out_pieces[1].0.clone(),
            };
            let d = splice_two_sum(h, &split, &dirs[0], &dirs[1])?;
            Ok(Resolved::Done(d, DecompositionTree::TwoSum { e, x, pieces: out_pieces }))
        }
        _ => Err(Error::Internal("unexpected node in a brace decomposition".into())),
    }
}

/// Decide one connected 1-extendable graph by brace decomposition.
fn connected_stage(h: &BipartiteGraph, m: &Matching) -> Result<Resolved> {
    let tree = decompose_into_braces(h, m)?;
    resolve(h, tree)
}

/// The full decision pipeline for an arbitrary bipartite graph.
///
/// A graph without a perfect matching has no central circuits, so every
/// orientation works and the canonical all-AtoB one is returned. Otherwise
/// edges outside every perfect matching are removed first (they are also
/// directed AtoB in the final answer), the rest is handled per connected
/// component, and component answers are merged.
pub fn pfaffian_orientation(g: &BipartiteGraph) -> Result<PfaffianVerdict> {
    let m = max_matching(g);
    if !m.is_perfect_in(g) {
        return Ok(PfaffianVerdict::Yes {
            orientation: Orientation::all_a_to_b(g),
            tree: DecompositionTree::Leaf {
                graph: g.clone(),
                kind: LeafKind::NoPerfectMatching,
            },
        });
    }
    let prune = prune_non_pm_edges(g, &m)?;
    if prune.removed.is_empty() {
        return Ok(verdict_of(components_stage(g, &m)?));
    }
    let inner = components_stage(&prune.kept, &m)?;
    Ok(verdict_of(match inner {
        Resolved::Done(mut d, t) => {
            for &(a, b) in &prune.removed {
                d.insert(a, b, Dir::AtoB);
            }
            Resolved::Done(d, DecompositionTree::Pruned { removed: prune.removed, child: Box::new(t) })
        }
        Resolved::Failed { tree, reason, mut path } => {
            path.insert(0, 0);
            Resolved::Failed {
                tree: DecompositionTree::Pruned { removed: prune.removed, child: Box::new(tree) },
                reason,
                path,
            }
        }
    }))
}

fn components_stage(g: &BipartiteGraph, m: &Matching) -> Result<Resolved> {
    let comps = connected_components(g);
    if comps.len() <= 1 {
        return connected_stage(g, m);
    }
    let mut pieces = Vec::with_capacity(comps.len());
    let mut out = Orientation::new(BTreeMap::new());
    let mut fail: Option<(FailureReason, Vec<usize>)> = None;
    for (i, c) in comps.into_iter().enumerate() {
        let piece = SplitPiece {
            graph: c.graph,
            a_map: c.a_map,
            b_map: c.b_map,
            added_edges: Vec::new(),
        };
        let local_m = piece_matching(&piece, m)?;
        match connected_stage(&piece.graph, &local_m)? {
            Resolved::Done(d, t) => {
                for ((la, lb), dir) in d.iter() {
                    out.insert(piece.a_map[la], piece.b_map[lb], dir);
                }
                pieces.push((piece, t));
            }
            Resolved::Failed { tree, reason, mut path } => {
                if fail.is_none() {
                    path.insert(0, i);
                    fail = Some((reason, path));
                }
                pieces.push((piece, tree));
            }
        }
    }
    Ok(match fail {
        Some((reason, path)) => {
            Resolved::Failed { tree: DecompositionTree::Components { pieces }, reason, path }
        }
        None => Resolved::Done(out, DecompositionTree::Components { pieces }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::reducing_edge_splits;
    use crate::graph::{circular_ladder, heawood_graph};
    use crate::oracle::{is_pfaffian_by_definition, is_pfaffian_orientation};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn graph(n_a: usize, n_b: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(n_a, n_b, edges).unwrap()
    }

    fn c4() -> BipartiteGraph {
        graph(2, 2, &[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn c6() -> BipartiteGraph {
        graph(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
    }

    fn k33() -> BipartiteGraph {
        let e: Vec<(usize, usize)> =
            (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        graph(3, 3, &e)
    }

    fn k44() -> BipartiteGraph {
        let e: Vec<(usize, usize)> =
            (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
        graph(4, 4, &e)
    }

    fn book() -> BipartiteGraph {
        graph(3, 3, &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 0), (2, 2), (0, 2)])
    }

    fn glued_cubes(k: usize) -> BipartiteGraph {
        let mut edges = vec![(0, 0), (1, 0), (1, 1), (0, 1)];
        for i in 0..k {
            let (p, q) = (2 + 2 * i, 3 + 2 * i);
            edges.extend_from_slice(&[
                (p, p),
                (p, q),
                (q, q),
                (q, p),
                (0, p),
                (p, 0),
                (1, q),
                (q, 1),
            ]);
        }
        graph(2 + 2 * k, 2 + 2 * k, &edges)
    }

    fn assert_pfaffian_yes(g: &BipartiteGraph) -> Orientation {
        let v = pfaffian_orientation(g).unwrap();
        let PfaffianVerdict::Yes { orientation, .. } = v else {
            panic!("expected Yes for {g:?}, got {v:?}");
        };
        orientation.validate_against(g).unwrap();
        let limits = Limits::default();
        if g.n_a() == g.n_b() {
            assert!(is_pfaffian_orientation(g, &orientation, &limits).unwrap());
        }
        assert!(is_pfaffian_by_definition(g, &orientation, &limits).unwrap());
        orientation
    }

    #[test]
    fn yes_families_pass_both_oracles() {
        for g in [
            graph(1, 1, &[(0, 0)]),
            c4(),
            c6(),
            book(),
            circular_ladder(4),
            circular_ladder(6),
            heawood_graph(),
            glued_cubes(3),
            glued_cubes(4),
        ] {
            assert_pfaffian_yes(&g);
        }
    }

    #[test]
    fn k33_is_rejected_by_the_edge_bound() {
        let v = pfaffian_orientation(&k33()).unwrap();
        let PfaffianVerdict::No { tree, reason } = v else { panic!("K3,3 must fail") };
        assert_eq!(reason, FailureReason::EdgeBoundExceeded);
        let DecompositionTree::Leaf { kind, .. } = &tree else { panic!() };
        assert_eq!(
            *kind,
            LeafKind::NoPfaffian(NoPfaffianReason::EdgeBound { n_vertices: 6, n_edges: 9 })
        );
    }

    #[test]
    fn k33_without_the_bound_is_a_nonplanar_dead_end() {
        let v = brace_pfaffian(&k33(), &[]).unwrap();
        let PfaffianVerdict::No { reason, .. } = v else { panic!() };
        assert_eq!(reason, FailureReason::NonplanarNonHeawoodNoTrisector);
    }

    #[test]
    fn k44_hits_the_edge_bound() {
        let v = brace_entry(&k44()).unwrap();
        let PfaffianVerdict::No { reason, .. } = v else { panic!() };
        assert_eq!(reason, FailureReason::EdgeBoundExceeded);
    }

    #[test]
    fn brace_entry_rejects_non_braces() {
        assert!(matches!(brace_entry(&c6()), Err(Error::NotABrace)));
        assert!(matches!(
            brace_pfaffian(&heawood_graph(), &[Trisector { a: [0, 1], b: [0, 1] }]),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn glued_cubes_resolve_through_a_trisum() {
        let g = glued_cubes(3);
        let v = pfaffian_orientation(&g).unwrap();
        let PfaffianVerdict::Yes { tree, .. } = &v else { panic!() };
        let DecompositionTree::Trisum { split, children } = tree else {
            panic!("expected a trisum at the root, got {tree:?}");
        };
        assert_eq!(split.x, Trisector { a: [0, 1], b: [0, 1] });
        assert_eq!(children.len(), 3);
        for c in children {
            assert!(matches!(
                c,
                DecompositionTree::Leaf { kind: LeafKind::Planar, .. }
            ));
        }
    }

    #[test]
    fn disjoint_union_splices_per_component() {
        // C4 and the Heawood graph side by side
        let mut edges = vec![(0, 0), (1, 0), (1, 1), (0, 1)];
        for &(a, b) in heawood_graph().edges() {
            edges.push((a + 2, b + 2));
        }
        let g = graph(9, 9, &edges);
        let d = assert_pfaffian_yes(&g);
        let v = pfaffian_orientation(&g).unwrap();
        let PfaffianVerdict::Yes { tree, .. } = v else { panic!() };
        let DecompositionTree::Components { pieces } = tree else { panic!("{tree:?}") };
        assert_eq!(pieces.len(), 2);
        // the Heawood component keeps its all-AtoB answer through the maps
        for &(a, b) in heawood_graph().edges() {
            assert_eq!(d.dir(a + 2, b + 2), Some(Dir::AtoB));
        }
    }

    #[test]
    fn pruned_edges_point_a_to_b() {
        // a path: the middle edge lies in no perfect matching
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let d = assert_pfaffian_yes(&g);
        let v = pfaffian_orientation(&g).unwrap();
        let PfaffianVerdict::Yes { tree, .. } = v else { panic!() };
        let DecompositionTree::Pruned { removed, .. } = &tree else { panic!("{tree:?}") };
        assert_eq!(removed, &vec![(1, 0)]);
        assert_eq!(d.dir(1, 0), Some(Dir::AtoB));
    }

    #[test]
    fn graphs_without_perfect_matchings_get_the_canonical_orientation() {
        let g = graph(2, 1, &[(0, 0), (1, 0)]);
        let v = pfaffian_orientation(&g).unwrap();
        let PfaffianVerdict::Yes { orientation, tree } = v else { panic!() };
        assert_eq!(orientation, Orientation::all_a_to_b(&g));
        assert!(matches!(tree, DecompositionTree::Leaf { kind: LeafKind::NoPerfectMatching, .. }));

        let empty = graph(0, 0, &[]);
        let v = pfaffian_orientation(&empty).unwrap();
        assert!(v.is_yes());
        assert!(v.orientation().unwrap().is_empty());
    }

    #[test]
    fn failure_paths_point_at_the_failing_leaf() {
        // a book whose third page is dense enough to embed K3,3
        let g = graph(
            4,
            4,
            &[
                (0, 0),
                (1, 0),
                (1, 1),
                (0, 1),
                (2, 0),
                (2, 2),
                (0, 2),
                (2, 3),
                (3, 0),
                (3, 2),
                (3, 3),
                (0, 3),
            ],
        );
        let v = pfaffian_orientation(&g).unwrap();
        let PfaffianVerdict::No { tree, reason } = v else { panic!("expected No") };
        let FailureReason::PieceFailed(path) = &reason else { panic!("{reason:?}") };
        let node = tree.node_at(path).expect("path must resolve");
        let DecompositionTree::Leaf { kind: LeafKind::NoPfaffian(_), .. } = node else {
            panic!("path must end at the failing leaf, got {node:?}");
        };
    }

    #[test]
    fn alignment_finds_the_smallest_flip() {
        let g = c4();
        let circuit = [(0, 0), (1, 0), (1, 1), (0, 1)];
        let mut d = Orientation::all_a_to_b(&g);
        d.insert(0, 0, Dir::BtoA); // oddly oriented

        // already agreeing: returned unchanged
        let a = align_on_circuit(&d, &circuit, &d, &circuit).unwrap();
        assert_eq!(a, d);

        // two edges sharing a vertex reversed: the flip is that vertex
        let mut two = d.clone();
        two.insert(1, 0, Dir::BtoA);
        two.insert(1, 1, Dir::BtoA);
        let a = align_on_circuit(&d, &circuit, &two, &circuit).unwrap();
        assert_eq!(a, d);

        // a single reversed edge changes parity: no flip can fix it
        let mut one = d.clone();
        one.insert(1, 1, Dir::BtoA);
        assert!(matches!(
            align_on_circuit(&d, &circuit, &one, &circuit),
            Err(Error::NoAligningFlip)
        ));
    }

    #[test]
    fn splice_self_check_catches_a_bad_piece() {
        let g = c6();
        let m = max_matching(&g);
        let chain = reducing_edge_splits(&g, &m, (0, 0)).unwrap();
        let split = &chain[0];
        // all-AtoB on a 4-circuit is evenly oriented, hence not Pfaffian
        let bad = Orientation::all_a_to_b(&split.g1.graph);
        let mut good = Orientation::all_a_to_b(&split.g2.graph);
        let (la, lb) = (split.g2.a_map.len() - 1, split.g2.b_map.len() - 1);
        let some_edge = split.g2.graph.edges().iter().copied().find(|&(a, b)| (a, b) != (la, lb));
        let (fa, fb) = some_edge.unwrap();
        good.insert(fa, fb, Dir::BtoA);
        assert!(is_pfaffian_orientation(&split.g2.graph, &good, &Limits::default()).unwrap());
        assert!(matches!(
            splice_two_sum(&g, split, &bad, &good),
            Err(Error::SpliceSelfCheck)
        ));
    }

    #[test]
    fn vertex_flips_preserve_pfaffian_orientations() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [c6(), circular_ladder(4)] {
            let d = assert_pfaffian_yes(&g);
            for _ in 0..100 {
                let mut s = BTreeSet::new();
                for a in 0..g.n_a() {
                    if rng.random_bool(0.5) {
                        s.insert(Vertex::A(a));
                    }
                }
                for b in 0..g.n_b() {
                    if rng.random_bool(0.5) {
                        s.insert(Vertex::B(b));
                    }
                }
                let flipped = flip_vertices(&d, &s);
                assert!(is_pfaffian_orientation(&g, &flipped, &limits).unwrap());
            }
        }
    }

    #[test]
    fn dense_one_extendable_graphs_are_rejected() {
        // K5,5 minus a perfect matching: 4-regular and 1-extendable
        let edges: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (0..5).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let g = graph(5, 5, &edges);
        assert!(!pfaffian_orientation(&g).unwrap().is_yes());
    }

    /// Two same-side vertices with three common neighbors span a K2,3;
    /// braces the pipeline accepts never contain one.
    #[test]
    fn accepted_braces_have_no_k23() {
        let has_k23 = |g: &BipartiteGraph| {
            let pairs_with = |neigh: &dyn Fn(usize) -> Vec<usize>, n: usize| {
                (0..n).any(|u| {
                    ((u + 1)..n).any(|v| {
                        let nu: BTreeSet<usize> = neigh(u).into_iter().collect();
                        neigh(v).into_iter().filter(|w| nu.contains(w)).count() >= 3
                    })
                })
            };
            pairs_with(&|a| g.neighbors_of_a(a), g.n_a())
                || pairs_with(&|b| g.neighbors_of_b(b), g.n_b())
        };
        assert!(has_k23(&k33()), "sanity: K3,3 contains K2,3");
        for g in [c4(), circular_ladder(4), circular_ladder(6), heawood_graph(), glued_cubes(3)] {
            assert!(brace_entry(&g).unwrap().is_yes());
            assert!(!has_k23(&g), "{g:?}");
        }
    }

    #[test]
    fn verdicts_are_deterministic() {
        for g in [glued_cubes(3), book(), k33()] {
            let v1 = pfaffian_orientation(&g).unwrap();
            let v2 = pfaffian_orientation(&g).unwrap();
            assert_eq!(v1.is_yes(), v2.is_yes());
            assert_eq!(v1.orientation(), v2.orientation());
            assert_eq!(v1.tree().render_text(), v2.tree().render_text());
        }
    }
}
