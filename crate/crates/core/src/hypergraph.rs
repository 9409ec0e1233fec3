//! Hypergraph representations.
//!
//! Vertices are dense ids `0..n`. [`Hypergraph3`] is the simple 3-uniform
//! input; [`MultiHypergraph`] is what a restriction produces (edges of size
//! 1 to 3 with multiplicity); [`SpecialMultigraph`] is a multigraph with a
//! distinguished set of special vertices.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Anything whose edges can be listed with multiplicities.
pub trait EdgeSet {
    fn vertex_count(&self) -> usize;

    /// Edges with their multiplicity. Each vertex slice is sorted.
    fn weighted_edges(&self) -> impl Iterator<Item = (&[Vertex], u64)>;

    /// Total number of edges counted with multiplicity.
    fn edge_count(&self) -> u64 {
        self.weighted_edges().map(|(_, w)| w).sum()
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if (v as usize) < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// Simple 3-uniform hypergraph with a per-vertex incidence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[Vertex; 3]>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph3 {
    /// Builds the hypergraph, rejecting out-of-range ids, repeated vertices
    /// inside an edge and repeated edges. Each edge is stored sorted.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for mut e in edges {
            for &v in &e {
                check_vertex(v, n)?;
            }
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::DegenerateEdge(e.to_vec()));
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.to_vec()));
            }
            stored.push(e);
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in stored.iter().enumerate() {
            for &v in e {
                incidence[v as usize].push(i);
            }
        }
        Ok(Self { n, edges: stored, incidence })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edges(&self) -> &[[Vertex; 3]] {
        &self.edges
    }

    /// Indices (into [`Self::edges`]) of the edges containing `v`.
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v as usize]
    }

    pub fn vertex_degree(&self, v: Vertex) -> u64 {
        self.incidence[v as usize].len() as u64
    }

    pub fn max_degree(&self) -> u64 {
        self.incidence.iter().map(|inc| inc.len() as u64).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n as Vertex
    }
}

impl EdgeSet for Hypergraph3 {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn weighted_edges(&self) -> impl Iterator<Item = (&[Vertex], u64)> {
        self.edges.iter().map(|e| (&e[..], 1))
    }

    fn edge_count(&self) -> u64 {
        self.m()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiEdge {
    pub vertices: Vec<Vertex>,
    pub multiplicity: u64,
}

/// Multi-hypergraph with edges of size 1 to 3.
///
/// Repeated edges of size 2 or 3 are allowed; size-1 edges must be distinct.
/// `origin[i]` is the id vertex `i` had in the hypergraph it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHypergraph {
    n: usize,
    origin: Vec<Vertex>,
    edges: Vec<MultiEdge>,
}

impl MultiHypergraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Vertex>, u64)>,
    {
        Self::with_origin((0..n as Vertex).collect(), edges)
    }

    /// Like [`Self::new`], with explicit original ids for the `origin.len()`
    /// vertices. Duplicate vertex sets are merged by adding multiplicities.
    pub fn with_origin<I>(origin: Vec<Vertex>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Vertex>, u64)>,
    {
        let n = origin.len();
        let mut merged: BTreeMap<Vec<Vertex>, u64> = BTreeMap::new();
        for (mut vs, mult) in edges {
            if !(1..=3).contains(&vs.len()) {
                return Err(Error::BadEdgeSize(vs.len()));
            }
            for &v in &vs {
                check_vertex(v, n)?;
            }
            vs.sort_unstable();
            if vs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DegenerateEdge(vs));
            }
            if mult == 0 {
                return Err(Error::ZeroMultiplicity(vs));
            }
            *merged.entry(vs).or_default() += mult;
        }
        let edges: Vec<MultiEdge> = merged
            .into_iter()
            .map(|(vertices, multiplicity)| MultiEdge { vertices, multiplicity })
            .collect();
        if let Some(e) = edges.iter().find(|e| e.vertices.len() == 1 && e.multiplicity > 1) {
            return Err(Error::RepeatedSingleton(e.vertices[0]));
        }
        Ok(Self { n, origin, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn origin(&self) -> &[Vertex] {
        &self.origin
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    /// Number of size-1 edges.
    pub fn singleton_count(&self) -> u64 {
        self.edges.iter().filter(|e| e.vertices.len() == 1).count() as u64
    }

    /// Total multiplicity of the edges of size at least 2.
    pub fn large_edge_count(&self) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.vertices.len() >= 2)
            .map(|e| e.multiplicity)
            .sum()
    }
}

impl From<&Hypergraph3> for MultiHypergraph {
    fn from(g: &Hypergraph3) -> Self {
        Self::new(g.n(), g.edges().iter().map(|e| (e.to_vec(), 1)))
            .expect("a simple 3-uniform hypergraph is a valid multi-hypergraph")
    }
}

impl EdgeSet for MultiHypergraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn weighted_edges(&self) -> impl Iterator<Item = (&[Vertex], u64)> {
        self.edges.iter().map(|e| (&e.vertices[..], e.multiplicity))
    }
}

/// Multigraph with special vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMultigraph {
    n: usize,
    origin: Vec<Vertex>,
    pairs: Vec<(Vertex, Vertex, u64)>,
    special: Vec<bool>,
    adjacency: Vec<Vec<(Vertex, u64)>>,
}

impl SpecialMultigraph {
    pub fn new<I, S>(n: usize, pairs: I, specials: S) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u64)>,
        S: IntoIterator<Item = Vertex>,
    {
        Self::with_origin((0..n as Vertex).collect(), pairs, specials)
    }

    /// Parallel pairs are merged; multiplicities must be positive. Listing a
    /// special vertex twice is harmless.
    pub fn with_origin<I, S>(origin: Vec<Vertex>, pairs: I, specials: S) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u64)>,
        S: IntoIterator<Item = Vertex>,
    {
        let n = origin.len();
        let mut merged: BTreeMap<(Vertex, Vertex), u64> = BTreeMap::new();
        for (u, v, mult) in pairs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::DegenerateEdge(vec![u, v]));
            }
            if mult == 0 {
                return Err(Error::ZeroMultiplicity(vec![u, v]));
            }
            *merged.entry((u.min(v), u.max(v))).or_default() += mult;
        }
        let mut special = vec![false; n];
        for s in specials {
            check_vertex(s, n)?;
            special[s as usize] = true;
        }
        let pairs: Vec<_> = merged.into_iter().map(|((u, v), w)| (u, v, w)).collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v, w) in &pairs {
            adjacency[u as usize].push((v, w));
            adjacency[v as usize].push((u, w));
        }
        Ok(Self { n, origin, pairs, special, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn origin(&self) -> &[Vertex] {
        &self.origin
    }

    /// Total edge count with multiplicity.
    pub fn m(&self) -> u64 {
        self.pairs.iter().map(|p| p.2).sum()
    }

    /// Number of special vertices.
    pub fn k(&self) -> u64 {
        self.special.iter().filter(|&&s| s).count() as u64
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex, u64)] {
        &self.pairs
    }

    pub fn is_special(&self, v: Vertex) -> bool {
        self.special[v as usize]
    }

    pub fn specials(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n as Vertex).filter(|&v| self.special[v as usize])
    }

    /// Neighbours of `v` with edge multiplicities.
    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, u64)] {
        &self.adjacency[v as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph3::new(3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Hypergraph3::new(3, [[0, 1, 1]]),
            Err(Error::DegenerateEdge(vec![0, 1, 1]))
        );
        assert_eq!(
            Hypergraph3::new(3, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge(vec![0, 1, 2]))
        );
    }

    #[test]
    fn incidence_index_matches_edges() {
        let g = Hypergraph3::new(5, [[0, 1, 2], [2, 3, 4], [0, 2, 4]]).unwrap();
        assert_eq!(g.incident(2), &[0, 1, 2]);
        assert_eq!(g.vertex_degree(1), 1);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.edges()[1], [2, 3, 4]);
    }

    #[test]
    fn multi_hypergraph_merges_and_guards_singletons() {
        let h = MultiHypergraph::new(4, [(vec![1, 0], 1), (vec![0, 1], 2), (vec![3], 1)]).unwrap();
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.singleton_count(), 1);
        assert_eq!(h.large_edge_count(), 3);
        assert_eq!(
            MultiHypergraph::new(4, [(vec![3], 1), (vec![3], 1)]),
            Err(Error::RepeatedSingleton(3))
        );
        assert_eq!(MultiHypergraph::new(4, [(vec![], 1)]), Err(Error::BadEdgeSize(0)));
        assert!(MultiHypergraph::new(4, [(vec![0, 1], 0)]).is_err());
    }

    #[test]
    fn special_multigraph_counts() {
        let g = SpecialMultigraph::new(3, [(0, 1, 2), (1, 0, 1), (1, 2, 1)], [2]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.k(), 1);
        assert_eq!(g.pairs(), &[(0, 1, 3), (1, 2, 1)]);
        assert_eq!(g.neighbours(1), &[(0, 3), (2, 1)]);
        assert!(SpecialMultigraph::new(2, [(0, 0, 1)], []).is_err());
        assert!(SpecialMultigraph::new(2, [], [2]).is_err());
    }
}
