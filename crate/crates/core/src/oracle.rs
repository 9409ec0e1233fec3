//! Brute-force ground truth for small instances.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::binomial;
use crate::hypergraph::{Hypergraph3, SpecialMultigraph, Vertex};
use crate::partition::{Bipartition, Class, Side, Tripartition};
use crate::ratio::GOOD;

/// Failure messages kept per report; the count is always exact.
const MAX_RECORDED_FAILURES: usize = 100;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub instance: String,
    /// Max-min part degree, or min-max side load, of the last single instance solved.
    pub objective: Option<u64>,
    /// Parts of the witness partition, 0-based ids.
    pub witness: Option<Vec<Vec<Vertex>>>,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.failure_count == 0
    }

    fn record_failure(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Combines reports of disjoint instance ranges.
    pub fn merge(mut self, other: OracleReport) -> OracleReport {
        self.instances_checked += other.instances_checked;
        self.failure_count += other.failure_count;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

fn check_budget(needed: u128, cap: u64) -> Result<()> {
    if needed > u128::from(cap) {
        Err(Error::BudgetExceeded { needed, cap })
    } else {
        Ok(())
    }
}

/// Vertex-set degree function `d(S)` over bitmasks.
enum DegreeTable {
    /// `inside[T]` = number of edges contained in `T`; `d(S) = m - inside[!S]`.
    Dense { inside: Vec<u32>, full: usize, m: u64 },
    Direct { edge_masks: Vec<u64> },
}

impl DegreeTable {
    fn new(g: &Hypergraph3) -> Self {
        let edge_masks: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        if g.n() > 22 {
            return DegreeTable::Direct { edge_masks };
        }
        let size = 1usize << g.n();
        let mut inside = vec![0u32; size];
        for &mask in &edge_masks {
            inside[mask as usize] += 1;
        }
        // superset sums: inside[T] = #edges with mask ⊆ T
        for bit in 0..g.n() {
            for t in 0..size {
                if t >> bit & 1 == 1 {
                    inside[t] += inside[t ^ (1 << bit)];
                }
            }
        }
        DegreeTable::Dense { inside, full: size - 1, m: g.m() }
    }

    fn degree(&self, set: u64) -> u64 {
        match self {
            DegreeTable::Dense { inside, full, m } => m - u64::from(inside[full & !(set as usize)]),
            DegreeTable::Direct { edge_masks } => {
                edge_masks.iter().filter(|&&e| e & set != 0).count() as u64
            }
        }
    }
}

struct TriSearch<'a> {
    table: &'a DegreeTable,
    n: usize,
    m: u64,
    labels: Vec<u8>,
    best: Option<(u64, Vec<u8>)>,
}

impl TriSearch<'_> {
    /// Restricted growth: vertex `v` may open at most one new class.
    fn visit(&mut self, v: usize, masks: [u64; 3], used: u8) {
        if self.best.as_ref().is_some_and(|(b, _)| *b == self.m) {
            return;
        }
        if v == self.n {
            let value = masks.iter().map(|&s| self.table.degree(s)).min().unwrap();
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.best = Some((value, self.labels.clone()));
            }
            return;
        }
        for class in 0..(used + 1).min(3) {
            let mut next = masks;
            next[class as usize] |= 1 << v;
            self.labels[v] = class;
            self.visit(v + 1, next, used.max(class + 1));
        }
    }
}

/// Partition maximising the minimum class degree, by exhaustive search over
/// all assignments up to relabelling of the classes.
pub fn best_tripartition(g: &Hypergraph3, cap: u64) -> Result<(Tripartition, u64)> {
    check_budget(3u128.saturating_pow(g.n() as u32), cap)?;
    let table = DegreeTable::new(g);
    let mut search =
        TriSearch { table: &table, n: g.n(), m: g.m(), labels: vec![0; g.n()], best: None };
    search.visit(0, [0; 3], 0);
    let (value, labels) = search.best.expect("at least one assignment");
    let p = Tripartition::new(labels.into_iter().map(|c| Class::from_index(c as usize)).collect());
    Ok((p, value))
}

/// Bipartition minimising the larger side load `e(V_i) + f(V_i)`.
pub fn best_bipartition_special(g: &SpecialMultigraph, cap: u64) -> Result<(Bipartition, u64)> {
    let n = g.n();
    check_budget(2u128.saturating_pow(n as u32), cap)?;
    if n == 0 {
        return Ok((Bipartition::all_in(0, Side::One), 0));
    }
    let special_mask = g.specials().fold(0u64, |acc, v| acc | 1 << v);
    let pairs: Vec<(u64, u64)> = g.pairs().iter().map(|&(u, v, w)| ((1 << u) | (1 << v), w)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // vertex 0 stays on side One; the objective is symmetric
    let (load, two) = (0..1u64 << (n - 1))
        .map(|half| {
            let two = half << 1;
            let one = full & !two;
            let load = |side: u64| {
                let spanned: u64 = pairs.iter().filter(|&&(e, _)| e & side == e).map(|&(_, w)| w).sum();
                spanned + u64::from((special_mask & side).count_ones())
            };
            (load(one).max(load(two)), two)
        })
        .min_by_key(|&(load, two)| (load, two))
        .expect("nonempty range");
    let p = Bipartition::new(
        (0..n).map(|v| if two >> v & 1 == 1 { Side::Two } else { Side::One }).collect(),
    );
    Ok((p, load))
}

/// Visits every nonempty simple 3-uniform hypergraph on `n <= 6` vertices
/// (one per nonempty subset of the `C(n,3)` triples) in parallel. The
/// visitor returns a failure message or `Ok`.
pub fn enumerate_hypergraphs<F>(n: usize, visitor: F) -> Result<OracleReport>
where
    F: Fn(&Hypergraph3) -> std::result::Result<(), String> + Sync,
{
    if n > 6 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration is limited to n <= 6, got {n}"
        )));
    }
    let n32 = n as Vertex;
    let triples: Vec<[Vertex; 3]> = (0..n32)
        .flat_map(|a| (a + 1..n32).flat_map(move |b| (b + 1..n32).map(move |c| [a, b, c])))
        .collect();
    debug_assert_eq!(triples.len() as u128, binomial(n as u64, 3));
    let count = 1u64 << triples.len();
    let report = (1..count)
        .into_par_iter()
        .fold(OracleReport::default, |mut report, mask| {
            let edges = triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Hypergraph3::new(n, edges).expect("distinct triples");
            report.instances_checked += 1;
            if let Err(msg) = visitor(&g) {
                report.record_failure(format!("edge mask {mask:#x}: {msg}"));
            }
            report
        })
        .reduce(OracleReport::default, OracleReport::merge);
    Ok(OracleReport { instance: format!("all hypergraphs on {n} vertices"), ..report })
}

/// For every hypergraph on `n` vertices, checks that the exhaustive max-min
/// part degree `v` satisfies `5v >= 3m` (and the weaker `9v >= 5m`).
pub fn exhaustive_theorem_check(n: usize) -> Result<OracleReport> {
    enumerate_hypergraphs(n, |g| {
        let (_, v) = best_tripartition(g, u64::MAX).map_err(|e| e.to_string())?;
        let m = g.m();
        if !GOOD.is_met_by(v, m) {
            return Err(format!("max-min degree {v} below 3m/5 with m = {m}"));
        }
        if 9 * v < 5 * m {
            return Err(format!("max-min degree {v} below 5m/9 with m = {m}"));
        }
        Ok(())
    })
}

/// Single-instance report for the tripartition oracle.
pub fn tripartition_report(g: &Hypergraph3, cap: u64) -> Result<OracleReport> {
    let (p, value) = best_tripartition(g, cap)?;
    Ok(OracleReport {
        instance: format!("hypergraph with n = {}, m = {}", g.n(), g.m()),
        objective: Some(value),
        witness: Some(Class::ALL.iter().map(|&c| p.members(c)).collect()),
        instances_checked: 1,
        ..Default::default()
    })
}

/// Single-instance report for the special bipartition oracle.
pub fn bipartition_report(g: &SpecialMultigraph, cap: u64) -> Result<OracleReport> {
    let (p, value) = best_bipartition_special(g, cap)?;
    Ok(OracleReport {
        instance: format!("special multigraph with n = {}, m = {}, k = {}", g.n(), g.m(), g.k()),
        objective: Some(value),
        witness: Some([Side::One, Side::Two].iter().map(|&s| p.members(s)).collect()),
        instances_checked: 1,
        ..Default::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::class_degrees;
    use crate::generators::{complete, grid3, tight15};

    #[test]
    fn best_tripartition_examples() {
        let cap = 10_000_000;
        let (p, v) = best_tripartition(&tight15(), cap).unwrap();
        // ({a,e,f}, {b,d}, {c,g}) has degrees (5, 4, 4)
        assert_eq!(v, 4);
        assert_eq!(*class_degrees(&tight15(), &p).iter().min().unwrap(), 4);
        assert_eq!(best_tripartition(&complete(4).unwrap(), cap).unwrap().1, 3);
        let single = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(best_tripartition(&single, cap).unwrap().1, 1);
        // the three diagonals of the grid each meet every row and column
        assert_eq!(best_tripartition(&grid3(), cap).unwrap().1, 6);
    }

    #[test]
    fn complete_hypergraph_optima() {
        let (p, v) = best_tripartition(&complete(6).unwrap(), 10_000_000).unwrap();
        // a pair misses the C(4,3) = 4 triples of the other four vertices
        assert_eq!(v, 16);
        assert_eq!(p.sizes(), [2, 2, 2]);
        let (p, v) = best_tripartition(&complete(9).unwrap(), 10_000_000).unwrap();
        assert_eq!(v, 64);
        assert_eq!(p.sizes(), [3, 3, 3]);
    }

    #[test]
    fn direct_and_dense_degrees_agree() {
        let g = crate::generators::random_hypergraph(10, 30, 4).unwrap();
        let dense = DegreeTable::new(&g);
        let direct = DegreeTable::Direct {
            edge_masks: g.edges().iter().map(|e| e.iter().fold(0, |a, &v| a | 1 << v)).collect(),
        };
        for s in 0..1u64 << 10 {
            assert_eq!(dense.degree(s), direct.degree(s));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = crate::generators::random_hypergraph(20, 10, 0).unwrap();
        assert!(matches!(
            best_tripartition(&g, 10_000_000),
            Err(Error::BudgetExceeded { cap: 10_000_000, .. })
        ));
    }

    #[test]
    fn best_bipartition_special_examples() {
        let triangle = SpecialMultigraph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)], []).unwrap();
        assert_eq!(best_bipartition_special(&triangle, 1 << 20).unwrap().1, 1);
        let star = SpecialMultigraph::new(3, [(0, 1, 1), (0, 2, 1)], [0]).unwrap();
        assert_eq!(best_bipartition_special(&star, 1 << 20).unwrap().1, 1);
        let edgeless = SpecialMultigraph::new(2, [], [0, 1]).unwrap();
        let (p, v) = best_bipartition_special(&edgeless, 1 << 20).unwrap();
        assert_eq!(v, 1);
        assert_ne!(p.side_of(0), p.side_of(1));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_hypergraphs(4, |_| Ok(())).unwrap().instances_checked, 15);
        assert_eq!(enumerate_hypergraphs(5, |_| Ok(())).unwrap().instances_checked, 1023);
        assert!(enumerate_hypergraphs(7, |_| Ok(())).is_err());
        let r = enumerate_hypergraphs(4, |g| if g.m() == 4 { Err("full".into()) } else { Ok(()) })
            .unwrap();
        assert_eq!(r.failure_count, 1);
    }

    #[test]
    fn three_fifths_holds_exhaustively_up_to_five_vertices() {
        for n in 3..=5 {
            let r = exhaustive_theorem_check(n).unwrap();
            assert!(r.is_clean(), "{:?}", r.failures);
        }
    }
}
