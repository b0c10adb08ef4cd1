//! Maximum matchings, the matching digraph, edge pruning, and
//! k-extendability tests.
//!
//! The central tool is the digraph `D(G, M)` obtained by directing every
//! edge of `G` from A to B and contracting the perfect matching `M`: one
//! digraph vertex per matching edge, and an arc `u -> v` for every
//! non-matching edge joining the A-vertex of pair `u` to the B-vertex of
//! pair `v`. Alternating circuits of `G` correspond to directed circuits of
//! `D(G, M)`, which turns several matching questions into reachability
//! questions.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Digraph, Matching};
use std::collections::{BTreeMap, VecDeque};

const UNMATCHED: usize = usize::MAX;

/// Maximum matching via Hopcroft-Karp. Deterministic: vertices are scanned
/// in ascending order, so equal inputs give equal matchings.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let n_a = g.n_a();
    let n_b = g.n_b();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n_a];
    for &(a, b) in g.edges() {
        adj[a].push(b);
    }
    // edges are sorted, so each adjacency list is already ascending

    let mut match_a = vec![UNMATCHED; n_a];
    let mut match_b = vec![UNMATCHED; n_b];
    let mut dist = vec![0usize; n_a];

    loop {
        // BFS: layer the free A-vertices and alternate outward.
        let mut queue = VecDeque::new();
        for a in 0..n_a {
            if match_a[a] == UNMATCHED {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found_free_b = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                match match_b[b] {
                    UNMATCHED => found_free_b = true,
                    a2 => {
                        if dist[a2] == usize::MAX {
                            dist[a2] = dist[a] + 1;
                            queue.push_back(a2);
                        }
                    }
                }
            }
        }
        if !found_free_b {
            break;
        }
        // DFS along layered edges, augmenting on every free B-vertex found.
        fn try_augment(
            a: usize,
            adj: &[Vec<usize>],
            match_a: &mut [usize],
            match_b: &mut [usize],
            dist: &mut [usize],
        ) -> bool {
            for &b in &adj[a] {
                let next = match_b[b];
                let ok = match next {
                    UNMATCHED => true,
                    a2 => {
                        dist[a2] == dist[a].wrapping_add(1)
                            && try_augment(a2, adj, match_a, match_b, dist)
                    }
                };
                if ok {
                    match_a[a] = b;
                    match_b[b] = a;
                    return true;
                }
            }
            dist[a] = usize::MAX;
            false
        }
        for a in 0..n_a {
            if match_a[a] == UNMATCHED {
                try_augment(a, &adj, &mut match_a, &mut match_b, &mut dist);
            }
        }
    }

    let edges: Vec<(usize, usize)> = (0..n_a)
        .filter(|&a| match_a[a] != UNMATCHED)
        .map(|a| (a, match_a[a]))
        .collect();
    Matching::new(&edges).expect("matcher never reuses a vertex")
}

/// True iff a perfect matching exists. The empty graph vacuously has one.
pub fn has_perfect_matching(g: &BipartiteGraph) -> bool {
    g.n_a() == g.n_b() && max_matching(g).len() == g.n_a()
}

/// The digraph `D(G, M)` together with the maps between its vertices/arcs
/// and the edges of `G`.
#[derive(Clone, Debug)]
pub struct MatchingDigraph {
    pub digraph: Digraph,
    /// `pairs[u]` is the matching edge behind digraph vertex `u`, in
    /// ascending edge order.
    pub pairs: Vec<(usize, usize)>,
    /// The bipartite edges behind each arc. Distinct non-matching edges
    /// yield distinct arcs in a simple graph, but the map keeps the general
    /// shape: parallel contributions collapse into one arc.
    pub arc_edges: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

/// Build `D(G, M)`. `M` must be a perfect matching of `G`.
pub fn digraph_of(g: &BipartiteGraph, m: &Matching) -> Result<MatchingDigraph> {
    m.validate_against(g)?;
    if !m.is_perfect_in(g) {
        return Err(Error::MatchingNotPerfect);
    }
    let pairs: Vec<(usize, usize)> = m.edges().collect();
    let mut pair_of_a = vec![usize::MAX; g.n_a()];
    let mut pair_of_b = vec![usize::MAX; g.n_b()];
    for (u, &(a, b)) in pairs.iter().enumerate() {
        pair_of_a[a] = u;
        pair_of_b[b] = u;
    }
    let mut arc_edges: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for &(a, b) in g.edges() {
        let u = pair_of_a[a];
        let v = pair_of_b[b];
        if u != v {
            arc_edges.entry((u, v)).or_default().push((a, b));
        }
    }
    let arcs: Vec<(usize, usize)> = arc_edges.keys().copied().collect();
    Ok(MatchingDigraph { digraph: Digraph::new(pairs.len(), &arcs)?, pairs, arc_edges })
}

/// Strongly connected components, Tarjan's algorithm with an explicit stack
/// (no recursion, so deep digraphs are fine). Returns the component id of
/// every vertex plus the component count. Ids are assigned in reverse
/// topological order of the condensation: id 0 has no outgoing condensation
/// arcs.
pub fn scc_ids(d: &Digraph) -> (Vec<usize>, usize) {
    let n = d.n();
    let adj = d.out_adjacency();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0usize;
    let mut next_comp = 0usize;
    // work items: (vertex, next child position)
    let mut work: Vec<(usize, usize)> = Vec::new();

    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        work.push((s, 0));
        while let Some(&mut (v, ref mut ci)) = work.last_mut() {
            if *ci == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *ci < adj[v].len() {
                let w = adj[v][*ci];
                *ci += 1;
                if index[w] == usize::MAX {
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    (comp, next_comp)
}

/// True iff the digraph has at most one strongly connected component. The
/// empty digraph and single vertices count as strongly connected.
pub fn is_strongly_connected(d: &Digraph) -> bool {
    scc_ids(d).1 <= 1
}

/// Result of removing the edges of a graph that lie in no perfect matching.
#[derive(Clone, Debug)]
pub struct PruneResult {
    /// Same vertex set as the input, with only the surviving edges.
    pub kept: BipartiteGraph,
    /// The removed edges, ascending.
    pub removed: Vec<(usize, usize)>,
    /// A perfect matching of the input (all of whose edges survive).
    pub witness_pm: Matching,
}

/// Remove every edge that lies in no perfect matching.
///
/// A non-matching edge lies in some perfect matching exactly when its arc in
/// `D(G, M)` lies on a directed circuit, i.e. inside a strongly connected
/// component; matching edges always survive. `M` must be perfect.
pub fn prune_non_pm_edges(g: &BipartiteGraph, m: &Matching) -> Result<PruneResult> {
    let md = digraph_of(g, m)?;
    let (comp, _) = scc_ids(&md.digraph);
    let mut kept_edges: Vec<(usize, usize)> = m.edges().collect();
    let mut removed: Vec<(usize, usize)> = Vec::new();
    for (&(u, v), edges) in &md.arc_edges {
        for &e in edges {
            if comp[u] == comp[v] {
                kept_edges.push(e);
            } else {
                removed.push(e);
            }
        }
    }
    removed.sort_unstable();
    let kept = BipartiteGraph::new(g.n_a(), g.n_b(), &kept_edges)?;
    Ok(PruneResult { kept, removed, witness_pm: m.clone() })
}

/// Decide k-extendability for k = 1 or 2: every matching of size at most k
/// extends to a perfect matching.
///
/// `G` must be connected and have a perfect matching. The test reduces to
/// strong connectivity: `G` is 1-extendable iff `D(G, M)` is strongly
/// connected, and 2-extendable iff additionally `D(G, M)` minus any one
/// vertex stays strongly connected.
pub fn is_k_extendable(g: &BipartiteGraph, k: usize) -> Result<bool> {
    assert!(k == 1 || k == 2, "only k = 1 and k = 2 are supported");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = max_matching(g);
    if !m.is_perfect_in(g) {
        return Err(Error::NoPerfectMatching);
    }
    let md = digraph_of(g, &m)?;
    if !is_strongly_connected(&md.digraph) {
        return Ok(false);
    }
    if k == 2 {
        for v in 0..md.digraph.n() {
            if !is_strongly_connected(&md.digraph.delete_vertex(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A brace is a connected 2-extendable bipartite graph.
pub fn is_brace(g: &BipartiteGraph) -> Result<bool> {
    is_k_extendable(g, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::heawood_graph;

    fn graph(n_a: usize, n_b: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(n_a, n_b, edges).unwrap()
    }

    fn c4() -> BipartiteGraph {
        graph(2, 2, &[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn c6() -> BipartiteGraph {
        // a1-b1-a2-b2-a3-b3-a1
        graph(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
    }

    fn k33() -> BipartiteGraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                e.push((a, b));
            }
        }
        graph(3, 3, &e)
    }

    /// Definitional k-extendability: every matching of at most k edges
    /// extends to a perfect matching. Exponential; test-only.
    fn k_extendable_by_definition(g: &BipartiteGraph, k: usize) -> bool {
        if !has_perfect_matching(g) {
            return false;
        }
        fn matchings_up_to(g: &BipartiteGraph, k: usize) -> Vec<Vec<(usize, usize)>> {
            let mut out = vec![vec![]];
            let edges = g.edges();
            fn extend(
                edges: &[(usize, usize)],
                start: usize,
                cur: &mut Vec<(usize, usize)>,
                k: usize,
                out: &mut Vec<Vec<(usize, usize)>>,
            ) {
                if cur.len() == k {
                    return;
                }
                for i in start..edges.len() {
                    let (a, b) = edges[i];
                    if cur.iter().all(|&(x, y)| x != a && y != b) {
                        cur.push((a, b));
                        out.push(cur.clone());
                        extend(edges, i + 1, cur, k, out);
                        cur.pop();
                    }
                }
            }
            let mut cur = Vec::new();
            extend(edges, 0, &mut cur, k, &mut out);
            out
        }
        for m in matchings_up_to(g, k) {
            // force the matching: delete its endpoints, ask for a perfect
            // matching of the rest
            let del: std::collections::BTreeSet<crate::graph::Vertex> = m
                .iter()
                .flat_map(|&(a, b)| [crate::graph::Vertex::A(a), crate::graph::Vertex::B(b)])
                .collect();
            let (rest, _, _) = g.delete_vertices(&del);
            if !has_perfect_matching(&rest) {
                return false;
            }
        }
        true
    }

    #[test]
    fn max_matching_is_deterministic_and_maximum() {
        let g = k33();
        let m1 = max_matching(&g);
        let m2 = max_matching(&g);
        assert_eq!(m1, m2);
        assert_eq!(m1.len(), 3);
    }

    #[test]
    fn perfect_matching_detection() {
        assert!(has_perfect_matching(&c4()));
        assert!(has_perfect_matching(&graph(0, 0, &[])));
        // path a1-b1-a2 is unbalanced
        assert!(!has_perfect_matching(&graph(2, 1, &[(0, 0), (1, 0)])));
        // balanced but no perfect matching: two a's pinned to one b
        assert!(!has_perfect_matching(&graph(2, 2, &[(0, 0), (1, 0)])));
    }

    #[test]
    fn digraph_of_c6_is_a_directed_triangle() {
        let g = c6();
        let m = Matching::new(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        let md = digraph_of(&g, &m).unwrap();
        assert_eq!(md.digraph.n(), 3);
        // non-matching edges (1,0), (2,1), (0,2) become a 3-cycle
        assert_eq!(md.digraph.arcs(), &[(0, 2), (1, 0), (2, 1)]);
        assert_eq!(md.arc_edges[&(1, 0)], vec![(1, 0)]);
    }

    #[test]
    fn digraph_of_requires_perfect_matching() {
        let g = c6();
        let m = Matching::new(&[(0, 0)]).unwrap();
        assert!(matches!(digraph_of(&g, &m), Err(Error::MatchingNotPerfect)));
    }

    #[test]
    fn scc_on_two_cycles_joined_by_an_arc() {
        // 0 <-> 1 -> 2 <-> 3
        let d = Digraph::new(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]).unwrap();
        let (comp, count) = scc_ids(&d);
        assert_eq!(count, 2);
        assert_eq!(comp[0], comp[1]);
        assert_eq!(comp[2], comp[3]);
        assert_ne!(comp[0], comp[2]);
        // id 0 is the sink component {2, 3}
        assert_eq!(comp[2], 0);
    }

    #[test]
    fn scc_is_iterative_on_a_deep_path() {
        // a path of 200k vertices would overflow a recursive Tarjan
        let n = 200_000;
        let arcs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let d = Digraph::new(n, &arcs).unwrap();
        let (_, count) = scc_ids(&d);
        assert_eq!(count, n);
    }

    #[test]
    fn strongly_connected_conventions() {
        assert!(is_strongly_connected(&Digraph::new(0, &[]).unwrap()));
        assert!(is_strongly_connected(&Digraph::new(1, &[]).unwrap()));
        assert!(!is_strongly_connected(&Digraph::new(2, &[(0, 1)]).unwrap()));
    }

    #[test]
    fn prune_keeps_all_of_c6() {
        let g = c6();
        let m = max_matching(&g);
        let res = prune_non_pm_edges(&g, &m).unwrap();
        assert!(res.removed.is_empty());
        assert_eq!(res.kept, g);
    }

    #[test]
    fn prune_removes_pendant_chords() {
        // C4 plus a pendant pair a3-b3 attached by chord a3-b1: the chord
        // (a3, b1) lies in no perfect matching.
        let g = graph(3, 3, &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 2), (2, 0)]);
        let m = max_matching(&g);
        assert!(m.is_perfect_in(&g));
        let res = prune_non_pm_edges(&g, &m).unwrap();
        assert_eq!(res.removed, vec![(2, 0)]);
        assert_eq!(res.kept.n_edges(), 5);
    }

    #[test]
    fn prune_agrees_with_enumeration_oracle() {
        // Derive "in some perfect matching" by deleting endpoints; check
        // prune removes exactly the complement.
        let samples = [c4(), c6(), k33(), graph(3, 3, &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 2), (2, 0), (0, 2)])];
        for g in samples {
            let m = max_matching(&g);
            if !m.is_perfect_in(&g) {
                continue;
            }
            let res = prune_non_pm_edges(&g, &m).unwrap();
            for &(a, b) in g.edges() {
                let del: std::collections::BTreeSet<crate::graph::Vertex> =
                    [crate::graph::Vertex::A(a), crate::graph::Vertex::B(b)].into_iter().collect();
                let (rest, _, _) = g.delete_vertices(&del);
                let in_some_pm = has_perfect_matching(&rest);
                assert_eq!(res.kept.has_edge(a, b), in_some_pm, "edge ({a},{b}) of {g:?}");
                assert_eq!(res.removed.contains(&(a, b)), !in_some_pm);
            }
        }
    }

    #[test]
    fn extendability_ladder() {
        assert!(is_k_extendable(&c4(), 1).unwrap());
        assert!(is_k_extendable(&c4(), 2).unwrap(), "C4 is a brace");
        assert!(is_k_extendable(&c6(), 1).unwrap());
        assert!(!is_k_extendable(&c6(), 2).unwrap(), "C6 is not a brace");
        assert!(is_brace(&k33()).unwrap());
        assert!(is_brace(&heawood_graph()).unwrap());
        // K2 is vacuously a brace
        assert!(is_brace(&graph(1, 1, &[(0, 0)])).unwrap());
    }

    #[test]
    fn extendability_matches_definition() {
        let samples = [
            c4(),
            c6(),
            k33(),
            graph(2, 2, &[(0, 0), (1, 1), (0, 1)]),
            graph(3, 3, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2), (0, 1)]),
        ];
        for g in samples {
            if !g.is_connected() || !has_perfect_matching(&g) {
                continue;
            }
            for k in 1..=2 {
                assert_eq!(
                    is_k_extendable(&g, k).unwrap(),
                    k_extendable_by_definition(&g, k),
                    "k={k} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn extendability_errors() {
        let disconnected = graph(2, 2, &[(0, 0), (1, 1)]);
        assert!(matches!(is_k_extendable(&disconnected, 1), Err(Error::Disconnected)));
        // connected, balanced, but a2 and a3 compete for b1
        let no_pm = graph(3, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]);
        assert!(matches!(is_k_extendable(&no_pm, 1), Err(Error::NoPerfectMatching)));
    }

    #[test]
    fn braces_on_at_least_five_vertices_are_three_connected() {
        // brute-force 3-connectivity: no cutset of size <= 2
        fn three_connected(g: &BipartiteGraph) -> bool {
            let n = g.n_vertices();
            if n < 4 {
                return false;
            }
            let verts: Vec<crate::graph::Vertex> = (0..g.n_a())
                .map(crate::graph::Vertex::A)
                .chain((0..g.n_b()).map(crate::graph::Vertex::B))
                .collect();
            let mut cut_candidates: Vec<Vec<crate::graph::Vertex>> = vec![vec![]];
            for (i, &u) in verts.iter().enumerate() {
                cut_candidates.push(vec![u]);
                for &v in &verts[i + 1..] {
                    cut_candidates.push(vec![u, v]);
                }
            }
            for cut in cut_candidates {
                let del: std::collections::BTreeSet<_> = cut.iter().copied().collect();
                let (rest, _, _) = g.delete_vertices(&del);
                if rest.n_vertices() > 1 && !rest.is_connected() {
                    return false;
                }
            }
            true
        }
        for g in [k33(), heawood_graph()] {
            assert!(is_brace(&g).unwrap());
            assert!(three_connected(&g));
        }
    }
}
