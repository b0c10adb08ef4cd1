//! Planarity testing, combinatorial embeddings, and the two base-case
//! orientations: face-parity orientations of planar graphs and the fixed
//! orientation of the Heawood graph.
//!
//! Planarity runs block by block: split the graph into biconnected blocks,
//! embed each by iteratively routing bridge paths through admissible faces
//! (reject when a bridge has none), then merge the block rotation systems
//! at cut vertices. Faces come back out of the merged rotations by orbit
//! tracing, and an Euler-formula check guards every component.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Dir, Orientation};
use crate::matching::max_matching;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A combinatorial embedding over unified vertex indices.
///
/// Faces are directed closed walks; every dart (directed edge) lies on
/// exactly one face. An edgeless component contributes one empty walk.
#[derive(Clone, Debug)]
pub struct Embedding {
    rotations: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_component: Vec<usize>,
    face_of_dart: BTreeMap<(usize, usize), usize>,
    component_of: Vec<usize>,
    /// Outer face index per component.
    outer_face: Vec<usize>,
}

impl Embedding {
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Face walks as vertex sequences (each consecutive pair, cyclically,
    /// is a dart).
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Cyclic neighbor order around each vertex.
    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn is_outer(&self, face: usize) -> bool {
        self.outer_face[self.face_component[face]] == face
    }

    pub fn component_of_vertex(&self, u: usize) -> usize {
        self.component_of[u]
    }

    pub fn component_of_face(&self, face: usize) -> usize {
        self.face_component[face]
    }

    pub fn n_components(&self) -> usize {
        self.outer_face.len()
    }

    /// The face the dart `u -> v` lies on.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.face_of_dart.get(&(u, v)).copied()
    }
}

/// Biconnected blocks as edge lists over unified indices, in DFS discovery
/// order. Every edge lands in exactly one block; isolated vertices in none.
fn blocks(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.1 < adj[v].len() {
                let w = adj[v][frame.1];
                frame.1 += 1;
                if disc[w] == UNSEEN {
                    estack.push((v, w));
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(up) = frames.last() {
                    let u = up.0;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Some cycle of a biconnected block, as a vertex walk: BFS tree plus the
/// first non-tree edge, closed through the lowest common ancestor.
fn find_cycle(verts: &[usize], adj: &BTreeMap<usize, Vec<usize>>) -> Vec<usize> {
    let start = verts[0];
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    parent.insert(start, usize::MAX);
    let mut order = vec![start];
    let mut qi = 0;
    let mut non_tree: Option<(usize, usize)> = None;
    'bfs: while qi < order.len() {
        let u = order[qi];
        qi += 1;
        for &w in &adj[&u] {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(u);
                order.push(w);
            } else if parent[&u] != w {
                non_tree = Some((u, w));
                break 'bfs;
            }
        }
    }
    let (u, w) = non_tree.expect("biconnected block on 3 or more vertices has a cycle");
    let ancestors = |mut x: usize| -> Vec<usize> {
        let mut chain = vec![x];
        while parent[&x] != usize::MAX {
            x = parent[&x];
            chain.push(x);
        }
        chain
    };
    let anc_u = ancestors(u);
    let anc_w = ancestors(w);
    let wset: BTreeSet<usize> = anc_w.iter().copied().collect();
    let lca_pos_u = anc_u.iter().position(|x| wset.contains(x)).expect("chains share the root");
    let lca = anc_u[lca_pos_u];
    let lca_pos_w = anc_w.iter().position(|&x| x == lca).unwrap();
    // u .. lca .. w, closed by the non-tree edge (w, u)
    let mut cycle: Vec<usize> = anc_u[..=lca_pos_u].to_vec();
    cycle.extend(anc_w[..lca_pos_w].iter().rev());
    cycle
}

/// Split a simple face walk along a path whose endpoints lie on the walk
/// and whose interior vertices are new. Returns the two replacement walks;
/// together they carry each old dart once and each path edge once per
/// direction.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let u = path[0];
    let v = *path.last().unwrap();
    let i = f.iter().position(|&x| x == u).expect("path start lies on the face");
    let rot: Vec<usize> = f[i..].iter().chain(f[..i].iter()).copied().collect();
    let j = rot.iter().position(|&x| x == v).expect("path end lies on the face");
    let interior = &path[1..path.len() - 1];
    let mut f1: Vec<usize> = rot[..=j].to_vec();
    f1.extend(interior.iter().rev().copied());
    let mut f2: Vec<usize> = rot[j..].to_vec();
    f2.push(u);
    f2.extend(interior.iter().copied());
    (f1, f2)
}

enum Bridge {
    Chord(usize, usize),
    Piece { verts: BTreeSet<usize>, attach: BTreeSet<usize> },
}

impl Bridge {
    fn attachments(&self) -> BTreeSet<usize> {
        match self {
            Bridge::Chord(x, y) => [*x, *y].into_iter().collect(),
            Bridge::Piece { attach, .. } => attach.clone(),
        }
    }
}

/// Embed one biconnected block (at least 3 vertices) by iterative face
/// splitting, returning the cyclic neighbor order at each block vertex.
///
/// Invariant kept through the loop: across all face walks, each embedded
/// edge appears exactly once per direction. Bridges of the unembedded part
/// are routed one path at a time; a bridge with a single admissible face is
/// forced and goes first, and a bridge with none proves non-planarity.
fn embed_block(edges: &[(usize, usize)]) -> Result<BTreeMap<usize, Vec<usize>>> {
    let eset: BTreeSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in &eset {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for l in adj.values_mut() {
        l.sort_unstable();
    }
    let verts: Vec<usize> = adj.keys().copied().collect();

    let cycle = find_cycle(&verts, &adj);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut emb_v: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut emb_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in 0..cycle.len() {
        let (x, y) = (cycle[t], cycle[(t + 1) % cycle.len()]);
        emb_e.insert((x.min(y), x.max(y)));
    }

    while emb_e.len() < eset.len() {
        // bridges of the embedded subgraph
        let mut bridges: Vec<Bridge> = eset
            .iter()
            .filter(|e| !emb_e.contains(e))
            .filter(|&&(x, y)| emb_v.contains(&x) && emb_v.contains(&y))
            .map(|&(x, y)| Bridge::Chord(x, y))
            .collect();
        let mut free_seen: BTreeSet<usize> = BTreeSet::new();
        for &s in verts.iter().filter(|v| !emb_v.contains(v)) {
            if free_seen.contains(&s) {
                continue;
            }
            let mut piece: BTreeSet<usize> = BTreeSet::new();
            let mut attach: BTreeSet<usize> = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            free_seen.insert(s);
            piece.insert(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[&u] {
                    if emb_v.contains(&w) {
                        attach.insert(w);
                    } else if free_seen.insert(w) {
                        piece.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            bridges.push(Bridge::Piece { verts: piece, attach });
        }

        // admissible faces per bridge; a forced bridge (exactly one) wins
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, usize)> = None; // (bridge idx, face idx)
        let mut fallback: Option<(usize, usize)> = None;
        for (bi, br) in bridges.iter().enumerate() {
            let att = br.attachments();
            let adm: Vec<usize> = (0..faces.len())
                .filter(|&fi| att.iter().all(|a| face_sets[fi].contains(a)))
                .collect();
            match adm.len() {
                0 => return Err(Error::NotPlanar),
                1 => {
                    chosen = Some((bi, adm[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((bi, adm[0]));
                    }
                }
            }
        }
        let (bi, fi) = chosen.or(fallback).expect("an unembedded edge yields a bridge");

        // a path through the bridge between two distinct attachments
        let path: Vec<usize> = match &bridges[bi] {
            Bridge::Chord(x, y) => vec![*x, *y],
            Bridge::Piece { verts: piece, attach } => {
                let x = *attach.iter().next().unwrap();
                let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
                let mut queue: VecDeque<usize> = VecDeque::new();
                for &w in &adj[&x] {
                    if piece.contains(&w) && !parent.contains_key(&w) {
                        parent.insert(w, usize::MAX);
                        queue.push_back(w);
                    }
                }
                let mut end = None;
                'bfs: while let Some(u) = queue.pop_front() {
                    if let Some(&y) = adj[&u].iter().find(|&&w| emb_v.contains(&w) && w != x) {
                        end = Some((u, y));
                        break 'bfs;
                    }
                    for &w in &adj[&u] {
                        if piece.contains(&w)
                            && !parent.contains_key(&w)
                        {
                            parent.insert(w, u);
                            queue.push_back(w);
                        }
                    }
                }
                let (mut u, y) = end.expect("a second attachment is reachable");
                let mut rev = vec![y, u];
                while parent[&u] != usize::MAX {
                    u = parent[&u];
                    rev.push(u);
                }
                rev.push(x);
                rev.reverse();
                rev
            }
        };

        for t in 0..path.len() - 1 {
            let (x, y) = (path[t], path[t + 1]);
            emb_e.insert((x.min(y), x.max(y)));
            emb_v.insert(x);
            emb_v.insert(y);
        }
        let (f1, f2) = split_face(&faces[fi], &path);
        faces[fi] = f1;
        faces.push(f2);
    }

    if faces.len() != eset.len() - verts.len() + 2 {
        return Err(Error::Internal("block face count violates Euler's formula".into()));
    }

    // read the rotation at each vertex off the faces: u -> v -> w in a walk
    // means w follows u in the cyclic order around v
    let mut next_after: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for f in &faces {
        for t in 0..f.len() {
            let u = f[t];
            let v = f[(t + 1) % f.len()];
            let w = f[(t + 2) % f.len()];
            if next_after.entry(v).or_default().insert(u, w).is_some() {
                return Err(Error::Internal("dart traced by two faces".into()));
            }
        }
    }
    let mut rotations = BTreeMap::new();
    for (&v, succ) in &next_after {
        let deg = adj[&v].len();
        let first = adj[&v][0];
        let mut rot = vec![first];
        let mut cur = first;
        for _ in 1..deg {
            cur = *succ
                .get(&cur)
                .ok_or_else(|| Error::Internal("rotation chain broken".into()))?;
            rot.push(cur);
        }
        let back = succ[&cur];
        let distinct: BTreeSet<usize> = rot.iter().copied().collect();
        if back != first || distinct.len() != deg {
            return Err(Error::Internal("face successors are not a single cycle".into()));
        }
        rotations.insert(v, rot);
    }
    Ok(rotations)
}

/// Test planarity and build an embedding. Deterministic: the same graph
/// always produces the same rotations, faces, and outer face choices.
pub fn planar_embed(g: &BipartiteGraph) -> Result<Embedding> {
    let n = g.n_vertices();
    let adj = g.unified_adjacency();

    // component labels over unified indices
    let mut component_of = vec![usize::MAX; n];
    let mut n_components = 0;
    for s in 0..n {
        if component_of[s] != usize::MAX {
            continue;
        }
        component_of[s] = n_components;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if component_of[w] == usize::MAX {
                    component_of[w] = n_components;
                    stack.push(w);
                }
            }
        }
        n_components += 1;
    }

    // rotations: blocks embedded independently, concatenated at cut vertices
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(n, &adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotations[u].push(v);
            rotations[v].push(u);
        } else {
            for (v, rot) in embed_block(&block)? {
                rotations[v].extend(rot);
            }
        }
    }

    // trace faces of the merged rotation system
    let mut rot_next: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for v in 0..n {
        let deg = rotations[v].len();
        for i in 0..deg {
            rot_next[v].insert(rotations[v][i], rotations[v][(i + 1) % deg]);
        }
        if rot_next[v].len() != adj[v].len() {
            return Err(Error::Internal("rotation does not cover the neighborhood".into()));
        }
    }
    let mut darts: Vec<(usize, usize)> = Vec::with_capacity(2 * g.n_edges());
    for &(a, b) in g.edges() {
        darts.push((a, g.n_a() + b));
        darts.push((g.n_a() + b, a));
    }
    darts.sort_unstable();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut face_component: Vec<usize> = Vec::new();
    let mut face_of_dart: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &start in &darts {
        if face_of_dart.contains_key(&start) {
            continue;
        }
        let idx = faces.len();
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            face_of_dart.insert(cur, idx);
            walk.push(cur.0);
            let (u, v) = cur;
            cur = (v, rot_next[v][&u]);
            if cur == start {
                break;
            }
        }
        face_component.push(component_of[start.0]);
        faces.push(walk);
    }
    // edgeless components still get their one face
    let mut comp_has_edge = vec![false; n_components];
    for &(a, _) in g.edges() {
        comp_has_edge[component_of[a]] = true;
    }
    for c in 0..n_components {
        if !comp_has_edge[c] {
            face_component.push(c);
            faces.push(Vec::new());
        }
    }

    // Euler's formula per component certifies genus zero
    let mut vc = vec![0usize; n_components];
    let mut ec = vec![0usize; n_components];
    let mut fc = vec![0usize; n_components];
    for u in 0..n {
        vc[component_of[u]] += 1;
    }
    for &(a, _) in g.edges() {
        ec[component_of[a]] += 1;
    }
    for f in 0..faces.len() {
        fc[face_component[f]] += 1;
    }
    for c in 0..n_components {
        if vc[c] + fc[c] != ec[c] + 2 {
            return Err(Error::Internal(format!(
                "component {c}: v - e + f = {} - {} + {} is not 2",
                vc[c], ec[c], fc[c]
            )));
        }
    }

    // outer face per component: the longest walk, ties by smallest walk
    let mut outer_face = vec![usize::MAX; n_components];
    for c in 0..n_components {
        let best = (0..faces.len())
            .filter(|&f| face_component[f] == c)
            .min_by(|&x, &y| {
                faces[y].len().cmp(&faces[x].len()).then_with(|| faces[x].cmp(&faces[y]))
            })
            .expect("every component has a face");
        outer_face[c] = best;
    }

    Ok(Embedding { rotations, faces, face_component, face_of_dart, component_of, outer_face })
}

fn dart_edge(g: &BipartiteGraph, u: usize, v: usize) -> (usize, usize) {
    if u < g.n_a() {
        (u, v - g.n_a())
    } else {
        (v, u - g.n_a())
    }
}

fn dart_is_forward(g: &BipartiteGraph, d: &Orientation, u: usize, v: usize) -> bool {
    let (a, b) = dart_edge(g, u, v);
    match d.dir(a, b).expect("embedded edge is oriented") {
        Dir::AtoB => u < g.n_a(),
        Dir::BtoA => u >= g.n_a(),
    }
}

/// Orientation of a planar graph in which every bounded face has an odd
/// number of edges directed along the face walk. For bipartite graphs all
/// faces are even circuits, so the parity does not depend on the walk
/// direction, and such an orientation is Pfaffian.
///
/// Construction: orient a spanning forest A to B; the remaining edges form
/// a spanning tree of the dual (bridges always sit in the forest, so every
/// leftover edge separates two distinct faces). Fix them leaf to root with
/// the outer face as root; each bounded face's parity is settled exactly
/// once, by the edge toward its parent.
pub fn fkt_orientation(g: &BipartiteGraph) -> Result<Orientation> {
    let emb = planar_embed(g)?;
    let n = g.n_vertices();
    let adj = g.unified_adjacency();

    let mut in_forest: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    in_forest.insert(dart_edge(g, u, w));
                    queue.push_back(w);
                }
            }
        }
    }

    let mut orient = Orientation::all_a_to_b(g);
    for c in 0..emb.n_components() {
        let mut dual: BTreeMap<usize, Vec<((usize, usize), usize)>> = BTreeMap::new();
        let mut comp_faces: Vec<usize> = (0..emb.n_faces())
            .filter(|&f| emb.component_of_face(f) == c)
            .collect();
        comp_faces.sort_unstable();
        for &(a, b) in g.edges() {
            if in_forest.contains(&(a, b)) || emb.component_of_vertex(a) != c {
                continue;
            }
            let f1 = emb.face_of_dart(a, g.n_a() + b).expect("dart traced");
            let f2 = emb.face_of_dart(g.n_a() + b, a).expect("dart traced");
            if f1 == f2 {
                return Err(Error::Internal("non-forest edge borders a single face".into()));
            }
            dual.entry(f1).or_default().push(((a, b), f2));
            dual.entry(f2).or_default().push(((a, b), f1));
        }

        let root = emb.outer_face[c];
        let mut parent_edge: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut order = vec![root];
        let mut reached: BTreeSet<usize> = [root].into_iter().collect();
        let mut qi = 0;
        while qi < order.len() {
            let f = order[qi];
            qi += 1;
            for &(e, other) in dual.get(&f).into_iter().flatten() {
                if reached.insert(other) {
                    parent_edge.insert(other, e);
                    order.push(other);
                }
            }
        }
        if reached.len() != comp_faces.len() {
            return Err(Error::Internal("dual of the non-forest edges is not spanning".into()));
        }

        for &f in order.iter().skip(1).rev() {
            let pe = parent_edge[&f];
            let walk = &emb.faces()[f];
            let mut fwd = 0usize;
            let mut pe_dart: Option<(usize, usize)> = None;
            for t in 0..walk.len() {
                let (u, v) = (walk[t], walk[(t + 1) % walk.len()]);
                if dart_edge(g, u, v) == pe {
                    if pe_dart.replace((u, v)).is_some() {
                        return Err(Error::Internal("parent edge on face twice".into()));
                    }
                } else if dart_is_forward(g, &orient, u, v) {
                    fwd += 1;
                }
            }
            let (u, _) = pe_dart.ok_or_else(|| Error::Internal("parent edge off face".into()))?;
            let along = if u < g.n_a() { Dir::AtoB } else { Dir::BtoA };
            orient.insert(pe.0, pe.1, if fwd % 2 == 0 { along } else { along.reversed() });
        }
    }

    #[cfg(debug_assertions)]
    for f in 0..emb.n_faces() {
        if emb.is_outer(f) || emb.faces()[f].is_empty() {
            continue;
        }
        let walk = &emb.faces()[f];
        let fwd = (0..walk.len())
            .filter(|&t| dart_is_forward(g, &orient, walk[t], walk[(t + 1) % walk.len()]))
            .count();
        debug_assert_eq!(fwd % 2, 1, "bounded face {f} ended up even");
    }

    Ok(orient)
}

/// Isomorphism test against the canonical Heawood graph, sides preserved.
/// The Fano plane is self-dual, so a side-swapping isomorphism would imply
/// a side-preserving one and this single direction decides the question.
pub fn is_heawood(g: &BipartiteGraph) -> bool {
    if g.n_a() != 7 || g.n_b() != 7 || g.n_edges() != 21 {
        return false;
    }
    if g.degrees().iter().any(|&d| d != 3) {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    // any two points of the Fano plane share one line and vice versa
    for a1 in 0..7 {
        for a2 in (a1 + 1)..7 {
            let n1: BTreeSet<usize> = g.neighbors_of_a(a1).into_iter().collect();
            let common = g.neighbors_of_a(a2).iter().filter(|b| n1.contains(b)).count();
            if common != 1 {
                return false;
            }
        }
    }
    for b1 in 0..7 {
        for b2 in (b1 + 1)..7 {
            let n1: BTreeSet<usize> = g.neighbors_of_b(b1).into_iter().collect();
            let common = g.neighbors_of_b(b2).iter().filter(|a| n1.contains(a)).count();
            if common != 1 {
                return false;
            }
        }
    }

    let h = crate::graph::heawood_graph();
    // B-side assignments compatible with a partial A-side map exist iff the
    // compatibility graph has a perfect matching
    fn b_side_feasible(g: &BipartiteGraph, h: &BipartiteGraph, assign: &[usize]) -> bool {
        let mut compat = Vec::new();
        for b in 0..7 {
            for beta in 0..7 {
                let ok = (0..7).all(|a| {
                    assign[a] == usize::MAX || g.has_edge(a, b) == h.has_edge(assign[a], beta)
                });
                if ok {
                    compat.push((b, beta));
                }
            }
        }
        let cg = BipartiteGraph::new(7, 7, &compat).expect("compatibility pairs in range");
        max_matching(&cg).len() == 7
    }

    fn assign_points(
        a: usize,
        g: &BipartiteGraph,
        h: &BipartiteGraph,
        assign: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if a == 7 {
            return b_side_feasible(g, h, assign);
        }
        for cand in 0..7 {
            if used[cand] {
                continue;
            }
            assign[a] = cand;
            used[cand] = true;
            if b_side_feasible(g, h, assign) && assign_points(a + 1, g, h, assign, used) {
                return true;
            }
            assign[a] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    let mut assign = [usize::MAX; 7];
    let mut used = [false; 7];
    assign_points(0, g, &h, &mut assign, &mut used)
}

/// The fixed Pfaffian orientation of a Heawood-isomorphic graph: every edge
/// A to B. The incidence matrix of the Fano plane has permanent 24 and
/// determinant of absolute value 24, so the all-ones sign pattern works,
/// and relabeling or swapping sides preserves that.
pub fn heawood_orientation(g: &BipartiteGraph) -> Result<Orientation> {
    if !is_heawood(g) {
        return Err(Error::NotHeawood);
    }
    Ok(Orientation::all_a_to_b(g))
}
