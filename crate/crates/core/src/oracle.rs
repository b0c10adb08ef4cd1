//! Exact brute-force checks used to validate everything else.
//!
//! All arithmetic here is exact integer arithmetic (machine words where a
//! bound justifies it, big integers otherwise); no floating point. The
//! module gives three independent routes to "is this orientation Pfaffian":
//!
//! 1. permanent of the 0-1 biadjacency equals |determinant| of the signed
//!    biadjacency ([`is_pfaffian_orientation`]);
//! 2. every central circuit is oddly oriented ([`is_pfaffian_by_definition`]);
//! 3. all perfect matchings carry the same sign ([`all_pm_signs_equal`]).
//!
//! They must agree, and the test suite holds them to that.

use crate::error::{Error, Result};
use crate::graph::{
    matrix_of_graph, sign_matrix_of_orientation, BipartiteGraph, Digraph, Dir, EdgeWeighting,
    Matching, Orientation, SignMatrix, Vertex, ZeroOneMatrix,
};
use crate::matching::has_perfect_matching;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Size limits for the exponential-time checks.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest matrix order for permanents (Ryser is O(2^n * n)).
    pub max_matrix_order: usize,
    /// Largest cyclomatic number for the brute-force orientation search
    /// (2^k candidate orientations).
    pub max_cyclomatic: usize,
    /// Cap on enumerated perfect matchings.
    pub max_pm_count: u64,
    /// Cap on enumerated circuits.
    pub max_circuit_count: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_matrix_order: 24,
            max_cyclomatic: 20,
            max_pm_count: 1_000_000,
            max_circuit_count: 1_000_000,
        }
    }
}

/// Permanent of a 0-1 matrix by Ryser's formula with Gray-code updates:
/// O(2^n * n) exact integer arithmetic.
pub fn permanent(m: &ZeroOneMatrix, limits: &Limits) -> Result<BigInt> {
    let n = m.n();
    if n > limits.max_matrix_order {
        return Err(Error::SizeLimit(format!(
            "permanent of order {n} exceeds the limit of {}",
            limits.max_matrix_order
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    // row sums over the current column subset; entries are 0/1 so each sum
    // fits an i64 and the product of n sums fits an i128 for n <= 24
    let mut row_sums = vec![0i64; n];
    let mut acc: i128 = 0;
    let mut spill = BigInt::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let bit = k.trailing_zeros() as usize;
        let next = k ^ (k >> 1);
        let added = next & !gray != 0;
        gray = next;
        for r in 0..n {
            let v = m.get(r, bit) as i64;
            if added {
                row_sums[r] += v;
            } else {
                row_sums[r] -= v;
            }
        }
        let mut prod: i128 = 1;
        for &s in &row_sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod *= s as i128;
        }
        if prod != 0 {
            let pop = gray.count_ones() as usize;
            let term = if (n - pop) % 2 == 0 { prod } else { -prod };
            match acc.checked_add(term) {
                Some(v) => acc = v,
                None => {
                    spill += BigInt::from(acc);
                    acc = term;
                }
            }
        }
    }
    spill += BigInt::from(acc);
    Ok(spill)
}

/// Exact determinant of a sign matrix via fraction-free (Bareiss)
/// elimination. Entries are in {-1, 0, 1}, so by Hadamard's bound every
/// intermediate value is a minor of magnitude at most n^(n/2); for n <= 24
/// that fits comfortably in an i128, otherwise big integers are used.
pub fn determinant(m: &SignMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    if n <= 24 {
        let a: Vec<Vec<i128>> =
            m.rows().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        BigInt::from(bareiss_i128(a))
    } else {
        let a: Vec<Vec<BigInt>> =
            m.rows().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        bareiss_big(a)
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Route 1: an orientation of a balanced bipartite graph is Pfaffian iff the
/// permanent of its 0-1 biadjacency equals the absolute determinant of its
/// signed biadjacency. Graphs with no perfect matching pass vacuously (both
/// sides are zero).
pub fn is_pfaffian_orientation(
    g: &BipartiteGraph,
    d: &Orientation,
    limits: &Limits,
) -> Result<bool> {
    if g.n_a() != g.n_b() {
        return Err(Error::UnbalancedSides(g.n_a(), g.n_b()));
    }
    d.validate_against(g)?;
    let per = permanent(&matrix_of_graph(g)?, limits)?;
    let det = determinant(&sign_matrix_of_orientation(g, d)?);
    Ok(per == det.abs())
}

/// All simple circuits of the graph over unified vertex indices, each listed
/// once as a closed walk `v0, v1, .., v(2k-1)` with `v0` the smallest vertex
/// on the circuit and `v1 < v(2k-1)` fixing the direction.
pub fn enumerate_circuits(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = g.n_vertices();
    let adj = g.unified_adjacency();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        u: usize,
        s: usize,
        adj: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: u64,
    ) -> Result<()> {
        for &w in &adj[u] {
            if w == s {
                if path.len() >= 4 && path[1] < path[path.len() - 1] {
                    if out.len() as u64 >= cap {
                        return Err(Error::SizeLimit(format!("more than {cap} circuits")));
                    }
                    out.push(path.clone());
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                dfs(w, s, adj, path, on_path, out, cap)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }

    for s in 0..n {
        on_path[s] = true;
        path.push(s);
        dfs(s, s, &adj, &mut path, &mut on_path, &mut out, limits.max_circuit_count)?;
        path.pop();
        on_path[s] = false;
    }
    Ok(out)
}

/// Number of edges of a closed walk directed along the traversal.
pub fn forward_edge_count(g: &BipartiteGraph, d: &Orientation, walk: &[usize]) -> usize {
    let mut fwd = 0;
    for i in 0..walk.len() {
        let u = walk[i];
        let v = walk[(i + 1) % walk.len()];
        let (a, b, along_a_to_b) = if u < g.n_a() {
            (u, v - g.n_a(), true)
        } else {
            (v, u - g.n_a(), false)
        };
        let dir = d.dir(a, b).expect("walk edge must be oriented");
        let forward = match dir {
            Dir::AtoB => along_a_to_b,
            Dir::BtoA => !along_a_to_b,
        };
        if forward {
            fwd += 1;
        }
    }
    fwd
}

/// Route 2, straight from the definition: enumerate every circuit, keep the
/// central ones (deleting the circuit leaves a graph with a perfect
/// matching), and check each is oddly oriented. Even-length circuits have
/// the same parity of forward edges in both traversal directions, so one
/// direction suffices.
pub fn is_pfaffian_by_definition(
    g: &BipartiteGraph,
    d: &Orientation,
    limits: &Limits,
) -> Result<bool> {
    d.validate_against(g)?;
    for walk in enumerate_circuits(g, limits)? {
        let del: BTreeSet<Vertex> = walk.iter().map(|&u| g.from_unified(u)).collect();
        let (rest, _, _) = g.delete_vertices(&del);
        if !has_perfect_matching(&rest) {
            continue; // not central
        }
        if forward_edge_count(g, d, &walk) % 2 == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every perfect matching, in lexicographic order of the B-partner sequence
/// of A-vertices 0, 1, 2, ..
pub fn enumerate_perfect_matchings(g: &BipartiteGraph, limits: &Limits) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    if g.n_a() != g.n_b() {
        return Ok(out);
    }
    let n = g.n_a();
    if n == 0 {
        out.push(Matching::empty());
        return Ok(out);
    }
    let mut b_used = vec![false; n];
    let mut partner = vec![0usize; n];

    fn rec(
        a: usize,
        g: &BipartiteGraph,
        b_used: &mut [bool],
        partner: &mut [usize],
        out: &mut Vec<Matching>,
        cap: u64,
    ) -> Result<()> {
        let n = g.n_a();
        if a == n {
            if out.len() as u64 >= cap {
                return Err(Error::SizeLimit(format!("more than {cap} perfect matchings")));
            }
            let edges: Vec<(usize, usize)> = (0..n).map(|x| (x, partner[x])).collect();
            out.push(Matching::new(&edges).expect("distinct partners"));
            return Ok(());
        }
        for b in g.neighbors_of_a(a) {
            if !b_used[b] {
                b_used[b] = true;
                partner[a] = b;
                rec(a + 1, g, b_used, partner, out, cap)?;
                b_used[b] = false;
            }
        }
        Ok(())
    }

    rec(0, g, &mut b_used, &mut partner, &mut out, limits.max_pm_count)?;
    Ok(out)
}

fn permutation_parity(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut j = start;
        let mut len = 0usize;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Sign of one perfect matching in the signed biadjacency: permutation
/// parity times the product of the matched entries.
pub fn matching_sign(g: &BipartiteGraph, d: &Orientation, m: &Matching) -> Result<i8> {
    if g.n_a() != g.n_b() {
        return Err(Error::UnbalancedSides(g.n_a(), g.n_b()));
    }
    if !m.is_perfect_in(g) {
        return Err(Error::MatchingNotPerfect);
    }
    let mut perm = vec![0usize; g.n_a()];
    let mut entry_sign = 1i8;
    for (a, b) in m.edges() {
        perm[a] = b;
        match d.dir(a, b) {
            Some(dir) => entry_sign *= dir.sign(),
            None => return Err(Error::MissingEdge(a, b)),
        }
    }
    Ok(permutation_parity(&perm) * entry_sign)
}

/// Route 3: enumerate perfect matchings and compare signs. `Ok(None)` means
/// the matching count exceeded the cap and nothing was checked.
pub fn all_pm_signs_equal(
    g: &BipartiteGraph,
    d: &Orientation,
    limits: &Limits,
) -> Result<Option<bool>> {
    let pms = match enumerate_perfect_matchings(g, limits) {
        Ok(v) => v,
        Err(Error::SizeLimit(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut sign = None;
    for m in &pms {
        let s = matching_sign(g, d, m)?;
        match sign {
            None => sign = Some(s),
            Some(prev) if prev != s => return Ok(Some(false)),
            _ => {}
        }
    }
    Ok(Some(true))
}

/// Search every orientation class for a Pfaffian one.
///
/// Vertex flips preserve the Pfaffian property and can normalize any
/// orientation to agree with a fixed orientation of a spanning forest (root
/// each tree and fix edges top-down), so it suffices to pin the forest edges
/// A-to-B and enumerate the `2^(m - n + c)` assignments of the co-tree
/// edges. Returns the first passing assignment in mask order (co-tree edges
/// sorted, bit 0 unset meaning A-to-B), so the witness is deterministic.
pub fn pfaffian_exists_bruteforce(
    g: &BipartiteGraph,
    limits: &Limits,
) -> Result<Option<Orientation>> {
    if !has_perfect_matching(g) {
        // no central circuits at all: every orientation qualifies
        return Ok(Some(Orientation::all_a_to_b(g)));
    }
    let n = g.n_vertices();
    let comps = g.component_count();
    let cyclomatic = g.n_edges() + comps - n;
    if cyclomatic > limits.max_cyclomatic {
        return Err(Error::SizeLimit(format!(
            "cyclomatic number {cyclomatic} exceeds the brute-force limit of {}",
            limits.max_cyclomatic
        )));
    }
    if g.n_a() > limits.max_matrix_order {
        return Err(Error::SizeLimit(format!(
            "matrix order {} exceeds the limit of {}",
            g.n_a(),
            limits.max_matrix_order
        )));
    }

    // spanning forest by BFS over unified indices
    let adj = g.unified_adjacency();
    let mut seen = vec![false; n];
    let mut forest: BTreeSet<(usize, usize)> = BTreeSet::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    let e = if u < g.n_a() { (u, w - g.n_a()) } else { (w, u - g.n_a()) };
                    forest.insert(e);
                    queue.push_back(w);
                }
            }
        }
    }
    let co_tree: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|e| !forest.contains(e)).collect();
    debug_assert_eq!(co_tree.len(), cyclomatic);

    let per = permanent(&matrix_of_graph(g)?, limits)?;
    for mask in 0u64..(1u64 << co_tree.len()) {
        let mut d = Orientation::all_a_to_b(g);
        for (i, &(a, b)) in co_tree.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d.insert(a, b, Dir::BtoA);
            }
        }
        let det = determinant(&sign_matrix_of_orientation(g, &d)?);
        if per == det.abs() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Every simple directed circuit of `d`, 2-cycles included, each written
/// with its smallest vertex first.
///
/// A DFS is rooted at each vertex in increasing order and only walks
/// vertices larger than the root, so each circuit appears exactly once and
/// the output order is deterministic. Errors with [`Error::SizeLimit`] past
/// `limits.max_circuit_count` circuits.
pub fn enumerate_directed_circuits(d: &Digraph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    fn dfs(
        root: usize,
        u: usize,
        out: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        circuits: &mut Vec<Vec<usize>>,
        cap: u64,
    ) -> Result<()> {
        path.push(u);
        on_path[u] = true;
        for &w in &out[u] {
            if w == root {
                if circuits.len() as u64 >= cap {
                    return Err(Error::SizeLimit(format!("more than {cap} directed circuits")));
                }
                circuits.push(path.clone());
            } else if w > root && !on_path[w] {
                dfs(root, w, out, path, on_path, circuits, cap)?;
            }
        }
        on_path[u] = false;
        path.pop();
        Ok(())
    }

    let out = d.out_adjacency();
    let mut circuits = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; d.n()];
    for root in 0..d.n() {
        dfs(root, root, &out, &mut path, &mut on_path, &mut circuits, limits.max_circuit_count)?;
    }
    Ok(circuits)
}

/// Whether every directed circuit of `d` has odd total weight under `w`.
pub fn weighting_makes_all_circuits_odd(
    d: &Digraph,
    w: &EdgeWeighting,
    limits: &Limits,
) -> Result<bool> {
    for c in enumerate_directed_circuits(d, limits)? {
        let mut total = 0u64;
        for i in 0..c.len() {
            let (u, v) = (c[i], c[(i + 1) % c.len()]);
            total += u64::from(
                w.weight(u, v)
                    .ok_or_else(|| Error::Internal(format!("weighting misses arc {u}->{v}")))?,
            );
        }
        if total % 2 == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definitional evenness check. A digraph is even when every 0-1 arc
/// weighting leaves some directed circuit with even total weight, so a
/// weighting under which every circuit is odd witnesses non-evenness.
///
/// Enumerates all `2^m` weightings in mask order (arcs ascending, set bit
/// meaning weight 1) and returns the first witness, or `None` when the
/// digraph is even. Errors with [`Error::SizeLimit`] once the arc count
/// exceeds `limits.max_cyclomatic`.
pub fn evenness_witness_bruteforce(d: &Digraph, limits: &Limits) -> Result<Option<EdgeWeighting>> {
    let m = d.n_arcs();
    if m > limits.max_cyclomatic {
        return Err(Error::SizeLimit(format!(
            "{m} arcs exceeds the brute-force limit of {}",
            limits.max_cyclomatic
        )));
    }
    let arcs = d.arcs();
    let arc_index: BTreeMap<(usize, usize), usize> =
        arcs.iter().copied().enumerate().map(|(i, a)| (a, i)).collect();
    // each circuit becomes an arc bitmask; a weighting passes when every
    // circuit mask intersects it in an odd number of bits
    let masks: Vec<u64> = enumerate_directed_circuits(d, limits)?
        .iter()
        .map(|c| {
            (0..c.len()).fold(0u64, |m, i| m | 1 << arc_index[&(c[i], c[(i + 1) % c.len()])])
        })
        .collect();
    'next: for w in 0u64..(1u64 << m) {
        for &mask in &masks {
            if (w & mask).count_ones() % 2 == 0 {
                continue 'next;
            }
        }
        let weights = arcs.iter().enumerate().map(|(i, &a)| (a, u8::from(w >> i & 1 == 1)));
        return Ok(Some(EdgeWeighting::new(d, weights.collect())?));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{flip_vertices, heawood_graph};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

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
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                e.push((a, b));
            }
        }
        graph(3, 3, &e)
    }

    /// Permanent by summing over all permutations; the independent
    /// reference for small n.
    fn permanent_by_permutations(m: &ZeroOneMatrix) -> BigInt {
        let n = m.n();
        let mut total = BigInt::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(k: usize, perm: &mut Vec<usize>, m: &ZeroOneMatrix, total: &mut BigInt) {
            let n = perm.len();
            if k == n {
                let mut prod = 1u64;
                for r in 0..n {
                    prod *= m.get(r, perm[r]) as u64;
                    if prod == 0 {
                        return;
                    }
                }
                *total += BigInt::from(prod);
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(k + 1, perm, m, total);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, m, &mut total);
        total
    }

    #[test]
    fn permanent_matches_permutation_sum_up_to_7() {
        let mut rng = StdRng::seed_from_u64(7);
        let limits = Limits::default();
        for n in 0..=7 {
            for _ in 0..20 {
                let rows: Vec<Vec<u8>> =
                    (0..n).map(|_| (0..n).map(|_| rng.random_range(0..=1)).collect()).collect();
                let m = ZeroOneMatrix::new(rows).unwrap();
                assert_eq!(permanent(&m, &limits).unwrap(), permanent_by_permutations(&m));
            }
        }
    }

    #[test]
    fn permanent_of_fano_incidence_is_24() {
        let m = matrix_of_graph(&heawood_graph()).unwrap();
        assert_eq!(permanent(&m, &Limits::default()).unwrap(), BigInt::from(24));
    }

    #[test]
    fn permanent_respects_limit() {
        let m = ZeroOneMatrix::new(vec![vec![1; 3]; 3]).unwrap();
        let limits = Limits { max_matrix_order: 2, ..Limits::default() };
        assert!(matches!(permanent(&m, &limits), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn determinant_small_cases() {
        let m = SignMatrix::new(vec![vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(-2));
        let id = SignMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(determinant(&id), BigInt::one());
        let singular = SignMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(determinant(&singular), BigInt::zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion_randomized() {
        fn cofactor_det(rows: &[Vec<i8>]) -> i64 {
            let n = rows.len();
            if n == 0 {
                return 1;
            }
            let mut total = 0i64;
            for (c, &x) in rows[0].iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let minor: Vec<Vec<i8>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()
                    })
                    .collect();
                let term = (x as i64) * cofactor_det(&minor);
                total += if c % 2 == 0 { term } else { -term };
            }
            total
        }
        let mut rng = StdRng::seed_from_u64(11);
        for n in 0..=6 {
            for _ in 0..20 {
                let rows: Vec<Vec<i8>> =
                    (0..n).map(|_| (0..n).map(|_| rng.random_range(-1..=1)).collect()).collect();
                let m = SignMatrix::new(rows.clone()).unwrap();
                assert_eq!(determinant(&m), BigInt::from(cofactor_det(&rows)));
            }
        }
    }

    #[test]
    fn circuit_enumeration_counts() {
        let limits = Limits::default();
        assert_eq!(enumerate_circuits(&c4(), &limits).unwrap().len(), 1);
        assert_eq!(enumerate_circuits(&c6(), &limits).unwrap().len(), 1);
        // K3,3: nine 4-circuits and six 6-circuits
        assert_eq!(enumerate_circuits(&k33(), &limits).unwrap().len(), 15);
        // Heawood: 28 + 21 + 84 + 56 + 24 circuits of lengths 6..14
        assert_eq!(enumerate_circuits(&heawood_graph(), &limits).unwrap().len(), 213);
    }

    #[test]
    fn pm_enumeration_counts() {
        let limits = Limits::default();
        assert_eq!(enumerate_perfect_matchings(&c4(), &limits).unwrap().len(), 2);
        assert_eq!(enumerate_perfect_matchings(&c6(), &limits).unwrap().len(), 2);
        assert_eq!(enumerate_perfect_matchings(&k33(), &limits).unwrap().len(), 6);
        assert_eq!(enumerate_perfect_matchings(&heawood_graph(), &limits).unwrap().len(), 24);
        let cap = Limits { max_pm_count: 3, ..Limits::default() };
        assert!(matches!(enumerate_perfect_matchings(&k33(), &cap), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn odd_c4_orientation_is_pfaffian_on_all_three_routes() {
        let g = c4();
        let limits = Limits::default();
        // three edges A-to-B, one reversed: the single circuit is odd
        let mut d = Orientation::all_a_to_b(&g);
        d.insert(1, 1, Dir::BtoA);
        assert!(is_pfaffian_orientation(&g, &d, &limits).unwrap());
        assert!(is_pfaffian_by_definition(&g, &d, &limits).unwrap());
        assert_eq!(all_pm_signs_equal(&g, &d, &limits).unwrap(), Some(true));
        // all A-to-B: the circuit has two forward edges, not Pfaffian
        let d0 = Orientation::all_a_to_b(&g);
        assert!(!is_pfaffian_orientation(&g, &d0, &limits).unwrap());
        assert!(!is_pfaffian_by_definition(&g, &d0, &limits).unwrap());
        assert_eq!(all_pm_signs_equal(&g, &d0, &limits).unwrap(), Some(false));
    }

    #[test]
    fn no_orientation_of_k33_is_pfaffian() {
        let limits = Limits::default();
        assert_eq!(pfaffian_exists_bruteforce(&k33(), &limits).unwrap(), None);
    }

    #[test]
    fn bruteforce_finds_witnesses_for_easy_graphs() {
        let limits = Limits::default();
        for g in [c4(), c6(), heawood_graph()] {
            let d = pfaffian_exists_bruteforce(&g, &limits).unwrap().expect("witness expected");
            assert!(is_pfaffian_orientation(&g, &d, &limits).unwrap());
            assert!(is_pfaffian_by_definition(&g, &d, &limits).unwrap());
        }
    }

    #[test]
    fn bruteforce_handles_graphs_without_perfect_matchings() {
        let limits = Limits::default();
        let path = graph(2, 1, &[(0, 0), (1, 0)]);
        let d = pfaffian_exists_bruteforce(&path, &limits).unwrap().unwrap();
        assert_eq!(d, Orientation::all_a_to_b(&path));
    }

    #[test]
    fn bruteforce_witness_is_deterministic() {
        let limits = Limits::default();
        let a = pfaffian_exists_bruteforce(&c6(), &limits).unwrap().unwrap();
        let b = pfaffian_exists_bruteforce(&c6(), &limits).unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bruteforce_respects_cyclomatic_limit() {
        let limits = Limits { max_cyclomatic: 3, ..Limits::default() };
        assert!(matches!(pfaffian_exists_bruteforce(&k33(), &limits), Err(Error::SizeLimit(_))));
    }

    /// The normalization behind the brute force: any orientation can be
    /// flipped to agree with the A-to-B orientation of a spanning forest.
    #[test]
    fn forest_normalization_lemma() {
        let mut rng = StdRng::seed_from_u64(23);
        let limits = Limits::default();
        for g in [c6(), k33(), heawood_graph()] {
            for _ in 0..10 {
                // random orientation
                let mut d = Orientation::all_a_to_b(&g);
                for &(a, b) in g.edges() {
                    if rng.random_bool(0.5) {
                        d.insert(a, b, Dir::BtoA);
                    }
                }
                // BFS tree from vertex 0, fix edges top-down by flipping the
                // deeper endpoint when the edge disagrees
                let adj = g.unified_adjacency();
                let n = g.n_vertices();
                let mut seen = vec![false; n];
                let mut order = vec![0usize];
                let mut parent = vec![usize::MAX; n];
                seen[0] = true;
                let mut qi = 0;
                while qi < order.len() {
                    let u = order[qi];
                    qi += 1;
                    for &w in &adj[u] {
                        if !seen[w] {
                            seen[w] = true;
                            parent[w] = u;
                            order.push(w);
                        }
                    }
                }
                let mut s: BTreeSet<Vertex> = BTreeSet::new();
                let mut cur = d.clone();
                for &w in order.iter().skip(1) {
                    let u = parent[w];
                    let (a, b) = if u < g.n_a() { (u, w - g.n_a()) } else { (w, u - g.n_a()) };
                    if cur.dir(a, b) != Some(Dir::AtoB) {
                        let v = g.from_unified(w);
                        let single: BTreeSet<Vertex> = [v].into_iter().collect();
                        cur = flip_vertices(&cur, &single);
                        if !s.remove(&v) {
                            s.insert(v);
                        }
                    }
                }
                // every tree edge now runs A to B, and the flip preserved
                // the Pfaffian verdict
                for &w in order.iter().skip(1) {
                    let u = parent[w];
                    let (a, b) = if u < g.n_a() { (u, w - g.n_a()) } else { (w, u - g.n_a()) };
                    assert_eq!(cur.dir(a, b), Some(Dir::AtoB));
                }
                assert_eq!(cur, flip_vertices(&d, &s));
                assert_eq!(
                    is_pfaffian_orientation(&g, &d, &limits).unwrap(),
                    is_pfaffian_orientation(&g, &cur, &limits).unwrap()
                );
            }
        }
    }

    #[test]
    fn matching_sign_sees_the_parity_and_the_entries() {
        let g = c4();
        let d = Orientation::all_a_to_b(&g);
        let m1 = Matching::new(&[(0, 0), (1, 1)]).unwrap();
        let m2 = Matching::new(&[(0, 1), (1, 0)]).unwrap();
        assert_eq!(matching_sign(&g, &d, &m1).unwrap(), 1);
        assert_eq!(matching_sign(&g, &d, &m2).unwrap(), -1);
    }

    fn complete_digraph(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::new(n, &arcs).unwrap()
    }

    fn directed_cycle(k: usize) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..k).map(|u| (u, (u + 1) % k)).collect();
        Digraph::new(k, &arcs).unwrap()
    }

    #[test]
    fn directed_circuits_are_rooted_at_their_smallest_vertex() {
        let limits = Limits::default();
        // K3 as a digraph: three 2-cycles plus the two triangles
        let cs = enumerate_directed_circuits(&complete_digraph(3), &limits).unwrap();
        assert_eq!(cs.len(), 5);
        for c in &cs {
            assert_eq!(*c.iter().min().unwrap(), c[0]);
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), c.len());
        }
        assert_eq!(cs.iter().filter(|c| c.len() == 2).count(), 3);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 2);

        assert_eq!(enumerate_directed_circuits(&directed_cycle(5), &limits).unwrap().len(), 1);
        let acyclic = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(enumerate_directed_circuits(&acyclic, &limits).unwrap().is_empty());

        let tight = Limits { max_circuit_count: 4, ..limits };
        assert!(matches!(
            enumerate_directed_circuits(&complete_digraph(3), &tight),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn single_cycles_are_not_even_and_the_witness_checks_out() {
        let limits = Limits::default();
        for k in 2..=5 {
            let d = directed_cycle(k);
            let w = evenness_witness_bruteforce(&d, &limits).unwrap().expect("a lone cycle");
            assert!(weighting_makes_all_circuits_odd(&d, &w, &limits).unwrap());
            let total: u8 = w.iter().map(|(_, x)| x).sum();
            assert_eq!(total % 2, 1);
        }
    }

    #[test]
    fn the_complete_digraph_on_three_vertices_is_even() {
        let limits = Limits::default();
        assert!(evenness_witness_bruteforce(&complete_digraph(3), &limits).unwrap().is_none());
        // and stays even with a vertex deleted down to K2, which is a lone
        // 2-cycle, hence not even
        let d = complete_digraph(3).delete_vertex(2);
        assert!(evenness_witness_bruteforce(&d, &limits).unwrap().is_some());
    }

    #[test]
    fn evenness_brute_force_respects_the_arc_cap() {
        let tight = Limits { max_cyclomatic: 5, ..Limits::default() };
        assert!(matches!(
            evenness_witness_bruteforce(&complete_digraph(3), &tight),
            Err(Error::SizeLimit(_))
        ));
    }
}
