//! Exact counting quantities on hypergraphs and tripartitions.

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph3, MultiHypergraph, Vertex};
use crate::partition::{Class, Signature, Tripartition};

pub(crate) fn membership(n: usize, set: &[Vertex]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in set {
        *inside
            .get_mut(v as usize)
            .ok_or(Error::VertexOutOfRange { vertex: v, n })? = true;
    }
    Ok(inside)
}

fn hits(edge: &[Vertex], inside: &[bool]) -> usize {
    edge.iter().filter(|&&v| inside[v as usize]).count()
}

/// Number of edges (with multiplicity) meeting `set`.
pub fn degree<G: EdgeSet>(g: &G, set: &[Vertex]) -> Result<u64> {
    let inside = membership(g.vertex_count(), set)?;
    Ok(g.weighted_edges()
        .filter(|(e, _)| hits(e, &inside) > 0)
        .map(|(_, w)| w)
        .sum())
}

/// Number of edges meeting `set` in at least two vertices.
pub fn degree2<G: EdgeSet>(g: &G, set: &[Vertex]) -> Result<u64> {
    let inside = membership(g.vertex_count(), set)?;
    Ok(g.weighted_edges()
        .filter(|(e, _)| hits(e, &inside) >= 2)
        .map(|(_, w)| w)
        .sum())
}

/// Number of edges `e` with `e ∩ set = {a}`.
pub fn private_degree<G: EdgeSet>(g: &G, a: Vertex, set: &[Vertex]) -> Result<u64> {
    let inside = membership(g.vertex_count(), set)?;
    if !inside.get(a as usize).copied().unwrap_or(false) {
        return Err(Error::NotInSet(a));
    }
    Ok(g.weighted_edges()
        .filter(|(e, _)| e.contains(&a) && hits(e, &inside) == 1)
        .map(|(_, w)| w)
        .sum())
}

fn assert_total(g: &Hypergraph3, p: &Tripartition) {
    assert_eq!(p.len(), g.n(), "partition must assign every vertex of the hypergraph");
}

pub(crate) fn edge_signature(edge: &[Vertex; 3], p: &Tripartition) -> Signature {
    Signature::from_classes(edge.map(|v| p.class_of(v)))
}

/// Edge counts for all ten class signatures of a tripartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureCounts([u64; 16]);

impl SignatureCounts {
    pub fn get(&self, sig: Signature) -> u64 {
        self.0[sig.slot()]
    }

    /// Shorthand for `get(sig.parse())`, panicking on a malformed literal.
    pub fn of(&self, sig: &str) -> u64 {
        self.get(sig.parse().expect("signature literal"))
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

pub fn signature_counts(g: &Hypergraph3, p: &Tripartition) -> SignatureCounts {
    assert_total(g, p);
    let mut counts = [0u64; 16];
    for e in g.edges() {
        counts[edge_signature(e, p).slot()] += 1;
    }
    SignatureCounts(counts)
}

/// Number of edges whose multiset of class labels equals `sig`.
pub fn cross_count(g: &Hypergraph3, p: &Tripartition, sig: Signature) -> u64 {
    assert_total(g, p);
    g.edges().iter().filter(|e| edge_signature(e, p) == sig).count() as u64
}

/// Number of distinct classes the edge meets.
pub(crate) fn classes_met(edge: &[Vertex; 3], p: &Tripartition) -> u64 {
    let mut seen = [false; 3];
    for &v in edge {
        seen[p.class_of(v).index()] = true;
    }
    seen.iter().filter(|&&s| s).count() as u64
}

/// `d(A) + d(B) + d(C)`, computed edge by edge as the number of classes each edge meets.
pub fn triple_degree(g: &Hypergraph3, p: &Tripartition) -> u64 {
    assert_total(g, p);
    g.edges().iter().map(|e| classes_met(e, p)).sum()
}

/// Degrees of the three classes, in the order A, B, C.
pub fn class_degrees(g: &Hypergraph3, p: &Tripartition) -> [u64; 3] {
    assert_total(g, p);
    let mut d = [0u64; 3];
    for e in g.edges() {
        let mut seen = [false; 3];
        for &v in e {
            seen[p.class_of(v).index()] = true;
        }
        for c in Class::ALL {
            d[c.index()] += u64::from(seen[c.index()]);
        }
    }
    d
}

/// Restriction of `g` to `keep`: each edge is replaced by its intersection
/// with `keep`, multiplicities aggregated. Vertices are renumbered densely in
/// increasing order of their original ids, which the result records as its
/// origin.
///
/// At most two vertices may be dropped, so no size-1 edge can repeat.
pub fn restrict(g: &Hypergraph3, keep: &[Vertex]) -> Result<MultiHypergraph> {
    let inside = membership(g.n(), keep)?;
    let dropped = inside.iter().filter(|&&k| !k).count();
    if dropped > 2 {
        return Err(Error::RestrictionTooLarge(dropped));
    }
    let origin: Vec<Vertex> = g.vertices().filter(|&v| inside[v as usize]).collect();
    let mut new_id = vec![Vertex::MAX; g.n()];
    for (i, &v) in origin.iter().enumerate() {
        new_id[v as usize] = i as Vertex;
    }
    let mut edges = Vec::with_capacity(g.edges().len());
    for e in g.edges() {
        let part: Vec<Vertex> = e
            .iter()
            .filter(|&&v| inside[v as usize])
            .map(|&v| new_id[v as usize])
            .collect();
        if part.is_empty() {
            return Err(Error::EdgeOutsideRestriction(e.to_vec()));
        }
        edges.push((part, 1));
    }
    MultiHypergraph::with_origin(origin, edges)
}
