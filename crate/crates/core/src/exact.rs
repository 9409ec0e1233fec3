//! Branch and bound for the tripartition maximising the minimum class degree.
//!
//! Vertices are assigned in order of decreasing degree. For each class the
//! search keeps its current degree plus the number of still-open edges
//! (edges with an unassigned vertex) that do not yet meet it; the minimum of
//! these sums over the classes bounds every completion from above.

use crate::hypergraph::{Hypergraph3, Vertex};
use crate::partition::{Class, Tripartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub partition: Tripartition,
    pub value: u64,
    /// False when the node budget ran out before the search space was closed.
    pub proven: bool,
    pub nodes: u64,
}

const UNASSIGNED: u8 = u8::MAX;

struct Search<'g> {
    g: &'g Hypergraph3,
    order: Vec<Vertex>,
    labels: Vec<u8>,
    met: Vec<u8>,
    open: Vec<u8>,
    degree: [u64; 3],
    open_missing: [u64; 3],
    best: Option<(u64, Vec<u8>)>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn bound(&self) -> u64 {
        (0..3).map(|c| self.degree[c] + self.open_missing[c]).min().unwrap()
    }

    fn beats_best(&self, value: u64) -> bool {
        self.best.as_ref().is_none_or(|(b, _)| value > *b)
    }

    /// Returns, per incident edge, whether the edge met `c` for the first time.
    fn assign(&mut self, v: Vertex, c: usize) -> Vec<bool> {
        self.labels[v as usize] = c as u8;
        let bit = 1u8 << c;
        let mut fresh = Vec::with_capacity(self.g.incident(v).len());
        for &e in self.g.incident(v) {
            self.open[e] -= 1;
            let newly = self.met[e] & bit == 0;
            if newly {
                self.met[e] |= bit;
                self.degree[c] += 1;
                self.open_missing[c] -= 1;
            }
            if self.open[e] == 0 {
                for other in (0..3).filter(|&o| self.met[e] >> o & 1 == 0) {
                    self.open_missing[other] -= 1;
                }
            }
            fresh.push(newly);
        }
        fresh
    }

    fn unassign(&mut self, v: Vertex, c: usize, fresh: &[bool]) {
        let bit = 1u8 << c;
        for (&e, &newly) in self.g.incident(v).iter().zip(fresh) {
            if self.open[e] == 0 {
                for other in (0..3).filter(|&o| self.met[e] >> o & 1 == 0) {
                    self.open_missing[other] += 1;
                }
            }
            self.open[e] += 1;
            if newly {
                self.met[e] &= !bit;
                self.degree[c] -= 1;
                self.open_missing[c] += 1;
            }
        }
        self.labels[v as usize] = UNASSIGNED;
    }

    fn visit(&mut self, depth: usize, used: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if !self.beats_best(self.bound()) {
            return;
        }
        if depth == self.order.len() {
            let value = *self.degree.iter().min().unwrap();
            if self.beats_best(value) {
                self.best = Some((value, self.labels.clone()));
            }
            return;
        }
        let v = self.order[depth];
        let mut classes: Vec<usize> = (0..(used + 1).min(3)).collect();
        classes.sort_by_key(|&c| (self.degree[c], c));
        for c in classes {
            let fresh = self.assign(v, c);
            self.visit(depth + 1, used.max(c + 1));
            self.unassign(v, c, &fresh);
        }
    }
}

/// Searches for a partition with the largest minimum class degree, visiting
/// at most `node_budget` nodes. An `incumbent` seeds the search; the
/// returned partition is never worse than it. `None` only if the budget ran
/// out before any complete assignment was seen and no incumbent was given.
pub fn max_min_search(
    g: &Hypergraph3,
    node_budget: u64,
    incumbent: Option<(Tripartition, u64)>,
) -> Option<ExactOutcome> {
    let mut order: Vec<Vertex> = g.vertices().filter(|&v| g.vertex_degree(v) > 0).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.vertex_degree(v)), v));
    let m = g.m();
    let mut search = Search {
        g,
        order,
        labels: vec![UNASSIGNED; g.n()],
        met: vec![0; g.edges().len()],
        open: vec![3; g.edges().len()],
        degree: [0; 3],
        open_missing: [m; 3],
        best: incumbent
            .as_ref()
            .map(|(p, v)| (*v, p.labels().iter().map(|c| c.index() as u8).collect())),
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    search.visit(0, 0);
    let proven = !search.aborted;
    let nodes = search.nodes;
    let (value, labels) = search.best?;
    // isolated vertices meet nothing; put them in A
    let partition = Tripartition::new(
        labels
            .into_iter()
            .map(|c| if c == UNASSIGNED { Class::A } else { Class::from_index(c as usize) })
            .collect(),
    );
    Some(ExactOutcome { partition, value, proven, nodes })
}
