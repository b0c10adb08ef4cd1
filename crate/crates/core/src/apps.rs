//! The classical problems that reduce to finding a Pfaffian orientation:
//! signing a 0-1 matrix so its determinant computes its permanent, deciding
//! evenness of a directed graph, and testing sign-nonsingularity.
//!
//! Each operation runs the structural pipeline of [`crate::orient`] and
//! translates the verdict. Where an answer is small enough to check, the
//! exact oracles of [`crate::oracle`] are consulted and any disagreement is
//! an internal error, never a silent wrong answer.

use crate::error::{Error, Result};
use crate::graph::{
    flip_vertices, graph_of_matrix, sign_matrix_of_orientation, BipartiteGraph, Digraph, Dir,
    EdgeWeighting, Orientation, SignMatrix, Vertex, ZeroOneMatrix,
};
use crate::oracle::{determinant, permanent, Limits};
use crate::orient::{pfaffian_orientation, PfaffianVerdict};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of the evenness decision for a digraph.
///
/// `NotEven` carries a 0/1 arc weighting under which every directed circuit
/// has odd total weight; by definition an even digraph admits no such
/// weighting, so the witness is a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvennessVerdict {
    Even,
    NotEven(EdgeWeighting),
}

impl EvennessVerdict {
    pub fn is_even(&self) -> bool {
        matches!(self, EvennessVerdict::Even)
    }

    pub fn witness(&self) -> Option<&EdgeWeighting> {
        match self {
            EvennessVerdict::Even => None,
            EvennessVerdict::NotEven(w) => Some(w),
        }
    }
}

/// A signing `B` of the 0-1 matrix `a` with `det(B) = per(a)`, or `None`
/// when no signing works.
///
/// The signing exists exactly when the bipartite graph with biadjacency
/// matrix `a` has a Pfaffian orientation, and the orientation converts to
/// the signing entry by entry. A Pfaffian orientation only pins the
/// determinant up to sign, so when the order is small enough to evaluate
/// both sides exactly the sign is fixed by negating the first row if
/// needed, and the equality `det(B) = per(a)` is then verified rather than
/// assumed. Past `limits.max_matrix_order` the result is returned
/// unverified with `det(B) = ±per(a)`.
pub fn polya_matrix(a: &ZeroOneMatrix, limits: &Limits) -> Result<Option<SignMatrix>> {
    let g = graph_of_matrix(a);
    let d = match pfaffian_orientation(&g)? {
        PfaffianVerdict::No { .. } => return Ok(None),
        PfaffianVerdict::Yes { orientation, .. } => orientation,
    };
    let mut b = sign_matrix_of_orientation(&g, &d)?;
    if a.n() <= limits.max_matrix_order {
        let per = permanent(a, limits)?;
        if determinant(&b) != per {
            b = b.negate_row(0);
        }
        if determinant(&b) != per {
            return Err(Error::Internal(
                "signed matrix does not reproduce the permanent".into(),
            ));
        }
    }
    Ok(Some(b))
}

/// The balanced bipartite graph whose matching digraph is `d`: one matching
/// edge per vertex and one crossing edge per arc.
fn graph_of_digraph(d: &Digraph) -> Result<BipartiteGraph> {
    let mut edges: Vec<(usize, usize)> = (0..d.n()).map(|v| (v, v)).collect();
    edges.extend_from_slice(d.arcs());
    BipartiteGraph::new(d.n(), d.n(), &edges)
}

/// Decides whether `d` is even: whether every 0/1 weighting of its arcs
/// leaves some directed circuit with even total weight.
///
/// The digraph is encoded as a bipartite graph with one matching edge per
/// vertex and one edge per arc; contracting that matching recovers `d`, so
/// `d` is even exactly when the encoding has no Pfaffian orientation. When
/// an orientation exists it is normalized by vertex flips until every
/// matching edge runs A to B, and the witness weights each arc 1 exactly
/// when its edge then runs A to B: a circuit through k vertices lifts to an
/// alternating circuit of length 2k whose forward edges, traversed with the
/// arcs, are precisely the A-to-B arc edges, so odd orientation of every
/// central circuit makes every circuit weight odd.
pub fn is_even_digraph(d: &Digraph) -> Result<EvennessVerdict> {
    let g = graph_of_digraph(d)?;
    let dg = match pfaffian_orientation(&g)? {
        PfaffianVerdict::No { .. } => return Ok(EvennessVerdict::Even),
        PfaffianVerdict::Yes { orientation, .. } => orientation,
    };
    let flips: BTreeSet<Vertex> = (0..d.n())
        .filter(|&v| dg.dir(v, v) == Some(Dir::BtoA))
        .map(Vertex::B)
        .collect();
    let dnorm = flip_vertices(&dg, &flips);
    // the witness reading below is only valid relative to this convention
    if (0..d.n()).any(|v| dnorm.dir(v, v) != Some(Dir::AtoB)) {
        return Err(Error::Internal("matching normalization failed".into()));
    }
    let mut w = BTreeMap::new();
    for &(u, v) in d.arcs() {
        let dir = dnorm
            .dir(u, v)
            .ok_or_else(|| Error::Internal(format!("orientation misses arc edge {u}->{v}")))?;
        w.insert((u, v), u8::from(dir == Dir::AtoB));
    }
    Ok(EvennessVerdict::NotEven(EdgeWeighting::new(d, w)?))
}

/// Whether every real matrix with the sign pattern `m` is nonsingular.
///
/// Expanding the determinant over the support, the matrix is
/// sign-nonsingular exactly when the nonzero terms all carry the same sign,
/// i.e. when `per(|m|) = |det(m)|` with both sides computed exactly. A zero
/// permanent means every term vanishes, so some (indeed every) realization
/// is singular and the answer is `false`. Orders beyond
/// `limits.max_matrix_order` are rejected with a size error.
pub fn sign_nonsingular(m: &SignMatrix, limits: &Limits) -> Result<bool> {
    if m.n() > limits.max_matrix_order {
        return Err(Error::SizeLimit(format!(
            "order {} exceeds the exact-check limit of {}",
            m.n(),
            limits.max_matrix_order
        )));
    }
    let per = permanent(&m.support(), limits)?;
    if per.is_zero() {
        return Ok(false);
    }
    Ok(per == determinant(m).abs())
}

/// Convenience wrapper: the orientation behind a `polya_matrix` answer, for
/// callers that want the graph view instead of the matrix view.
pub fn polya_orientation(a: &ZeroOneMatrix) -> Result<Option<(BipartiteGraph, Orientation)>> {
    let g = graph_of_matrix(a);
    match pfaffian_orientation(&g)? {
        PfaffianVerdict::No { .. } => Ok(None),
        PfaffianVerdict::Yes { orientation, .. } => Ok(Some((g, orientation))),
    }
}
