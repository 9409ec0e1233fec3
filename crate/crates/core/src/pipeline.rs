//! End-to-end construction of a tripartition in which every class meets at
//! least `3m/5` edges.
//!
//! [`solve`] tries, in order: exhaustive branch and bound for small
//! instances, the two degree-based constructions, the engine (local search
//! followed by restriction or a bounded exhaustive repair), and finally a
//! budgeted exact search. Whatever route succeeds, the returned certificate
//! is recomputed from the partition alone.

use crate::certificate::{Certificate, Method};
use crate::counting::{class_degrees, degree, restrict, triple_degree};
use crate::error::{Error, Result};
use crate::exact::max_min_search;
use crate::hypergraph::{Hypergraph3, SpecialMultigraph, Vertex};
use crate::local_search::{
    engine_partition, hill_climb, is_locally_optimal, is_semi_optimal, random_partition,
    EngineOutcome, EngineResult, SearchConfig,
};
use crate::partition::{Class, Side, Tripartition};
use crate::ratio::GOOD;
use crate::special::{bipartition_hypergraph_meeting, special_bipartition};

/// Instances with at most this many edges always go to the exact search.
pub const SMALL_M: u64 = 24;

/// Largest `|A ∪ B|` repaired by exhaustive reassignment.
const BOUNDED_UNION: usize = 9;

const ENGINE_ROUNDS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub partition: Tripartition,
    pub certificate: Certificate,
    pub restarts_used: usize,
    /// Set only when no route produced a good partition.
    pub warning: Option<String>,
}

/// `5 d(S) >= 3m`.
pub fn is_good(g: &Hypergraph3, set: &[Vertex]) -> Result<bool> {
    Ok(GOOD.is_met_by(degree(g, set)?, g.m()))
}

/// Recomputes the class degrees of `p` and compares each with `3m/5`.
pub fn verify_good(g: &Hypergraph3, p: &Tripartition) -> Result<Certificate> {
    p.check_len(g.n())?;
    let mut cert = Certificate::new(class_degrees(g, p).to_vec(), g.m(), GOOD);
    cert.flags.semi_optimal = is_semi_optimal(g, p);
    cert.flags.locally_optimal = is_locally_optimal(g, p);
    Ok(cert)
}

fn outcome(g: &Hypergraph3, p: Tripartition, method: Method, restarts_used: usize, exact: bool) -> SolveOutcome {
    let mut certificate = verify_good(g, &p).expect("partition covers the hypergraph");
    certificate.method = Some(method);
    certificate.flags.exact = exact;
    SolveOutcome { partition: p, certificate, restarts_used, warning: None }
}

fn min_degree(g: &Hypergraph3, p: &Tripartition) -> u64 {
    class_degrees(g, p).into_iter().min().unwrap_or(0)
}

fn good_partition(g: &Hypergraph3, p: &Tripartition) -> bool {
    GOOD.is_met_by(min_degree(g, p), g.m())
}

/// Partition `(A, B, C)` from `A` plus a bipartition of the remaining
/// vertices, each edge shrunk to a pair avoiding `A`. Needs every edge to
/// meet `A` at most once.
fn split_rest_by_pairs(g: &Hypergraph3, a: &[Vertex], cfg: &SearchConfig) -> Option<Tripartition> {
    let mut in_a = vec![false; g.n()];
    for &v in a {
        in_a[v as usize] = true;
    }
    let rest: Vec<Vertex> = g.vertices().filter(|&v| !in_a[v as usize]).collect();
    let mut new_id = vec![Vertex::MAX; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        new_id[v as usize] = i as Vertex;
    }
    let pairs = g.edges().iter().map(|e| {
        let outside: Vec<Vertex> = e.iter().filter(|&&v| !in_a[v as usize]).copied().collect();
        debug_assert!(outside.len() >= 2);
        (new_id[outside[0] as usize], new_id[outside[1] as usize], 1)
    });
    let h = SpecialMultigraph::with_origin(rest.clone(), pairs, []).ok()?;
    let (bi, _) = special_bipartition(&h, cfg).ok()?;
    let mut p = Tripartition::all_in(g.n(), Class::A);
    for (i, &v) in rest.iter().enumerate() {
        let class = match bi.side_of(i as Vertex) {
            Side::One => Class::B,
            Side::Two => Class::C,
        };
        p.set_class(v, class);
    }
    Some(p)
}

/// A good set meeting every edge at most once, grown greedily from the
/// highest-degree vertices (a single vertex when the maximum degree already
/// suffices), with the rest split by a special bipartition with no specials.
pub fn max_degree_path(g: &Hypergraph3, cfg: &SearchConfig) -> Option<SolveOutcome> {
    let m = g.m();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.vertex_degree(v)), v));
    let mut touched = vec![false; g.edges().len()];
    let mut a = Vec::new();
    let mut d = 0;
    for v in order {
        if GOOD.is_met_by(d, m) {
            break;
        }
        if g.vertex_degree(v) == 0 {
            break;
        }
        if g.incident(v).iter().any(|&e| touched[e]) {
            continue;
        }
        for &e in g.incident(v) {
            touched[e] = true;
        }
        d += g.vertex_degree(v);
        a.push(v);
    }
    if !GOOD.is_met_by(d, m) {
        return None;
    }
    let p = split_rest_by_pairs(g, &a, cfg)?;
    good_partition(g, &p).then(|| outcome(g, p, Method::MaxDegreePath, 0, false))
}

/// Two vertices `a`, `b` of degree `⌈3m/5⌉ - 1` (for `m >= 10`): pair `a`
/// with a vertex `c` of an edge missing `a`, `b` with a vertex `d` of an
/// edge missing `b`, and put everything else in C.
pub fn two_high_degree_path(g: &Hypergraph3) -> Option<SolveOutcome> {
    let m = g.m();
    if m < 10 {
        return None;
    }
    let target = GOOD.ceil_of(m) - 1;
    let high: Vec<Vertex> = g.vertices().filter(|&v| g.vertex_degree(v) == target).collect();
    let vertices_of_edges_missing = |x: Vertex| {
        let mut vs: Vec<Vertex> = g
            .edges()
            .iter()
            .filter(|e| !e.contains(&x))
            .flat_map(|e| e.iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    for (i, &a) in high.iter().enumerate() {
        let cs = vertices_of_edges_missing(a);
        for &b in &high[i + 1..] {
            let ds = vertices_of_edges_missing(b);
            for &c in cs.iter().filter(|&&c| c != b) {
                for &d in ds.iter().filter(|&&d| d != a && d != c) {
                    let mut p = Tripartition::all_in(g.n(), Class::C);
                    p.set_class(a, Class::A);
                    p.set_class(c, Class::A);
                    p.set_class(b, Class::B);
                    p.set_class(d, Class::B);
                    if good_partition(g, &p) {
                        return Some(outcome(g, p, Method::TwoDegreePath, 0, false));
                    }
                }
            }
        }
    }
    None
}

/// Discrete form of the engine certificate: with `t = ⌈3m/5⌉`,
/// `d(A)+d(B)+d(C) >= 4m - 3(t-1)` and `d(A)+d(B) >= 4m - 4(t-1)`.
pub fn discrete_engine_bounds_hold(g: &Hypergraph3, r: &EngineResult) -> bool {
    let m = i128::from(g.m());
    let t = i128::from(GOOD.ceil_of(g.m()));
    let [da, db, _] = r.degrees.map(i128::from);
    i128::from(r.triple_degree) >= 4 * m - 3 * (t - 1) && da + db >= 4 * m - 4 * (t - 1)
}

/// With `|A| = 2` (classes A and B swapped first if only `|B| = 2`): keep A,
/// restrict the hypergraph to `B ∪ C` and split that by
/// [`bipartition_hypergraph_meeting`].
pub fn restrict_route(g: &Hypergraph3, p: &Tripartition, cfg: &SearchConfig) -> Option<Tripartition> {
    let p = match p.sizes() {
        [2, _, _] => p.clone(),
        [_, 2, _] => p.swapped(Class::A, Class::B),
        _ => return None,
    };
    let a = p.members(Class::A);
    let keep: Vec<Vertex> = g.vertices().filter(|&v| p.class_of(v) != Class::A).collect();
    let h = restrict(g, &keep).ok()?;
    let (bi, _) = bipartition_hypergraph_meeting(&h, cfg).ok()?;
    let mut out = Tripartition::all_in(g.n(), Class::A);
    for (i, &v) in h.origin().iter().enumerate() {
        let class = match bi.side_of(i as Vertex) {
            Side::One => Class::B,
            Side::Two => Class::C,
        };
        out.set_class(v, class);
    }
    debug_assert!(a.iter().all(|&v| out.class_of(v) == Class::A));
    Some(out)
}

/// With `|A ∪ B| <= 9`: keep C and try every reassignment of the vertices
/// of `A ∪ B` to the three classes.
pub fn bounded_route(g: &Hypergraph3, p: &Tripartition) -> Option<Tripartition> {
    let union: Vec<Vertex> = g.vertices().filter(|&v| p.class_of(v) != Class::C).collect();
    if union.len() > BOUNDED_UNION {
        return None;
    }
    let avoiding_c = g
        .edges()
        .iter()
        .filter(|e| e.iter().all(|&v| p.class_of(v) != Class::C))
        .count();
    assert!(avoiding_c <= 84, "{avoiding_c} edges inside {} vertices", union.len());
    let mut q = p.clone();
    for code in 0..3usize.pow(union.len() as u32) {
        let mut rest = code;
        for &v in &union {
            q.set_class(v, Class::from_index(rest % 3));
            rest /= 3;
        }
        if good_partition(g, &q) {
            return Some(q);
        }
    }
    None
}

/// A tripartition of `g` in which every class meets at least `3m/5` edges.
///
/// Errors only on invalid configuration or an edgeless hypergraph. If every
/// route fails, the best partition seen is returned with
/// `meets_bound = false` and a warning.
pub fn solve(g: &Hypergraph3, cfg: &SearchConfig) -> Result<SolveOutcome> {
    cfg.validate()?;
    let m = g.m();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let mut best: Option<(u64, Tripartition)> = None;
    let consider = |best: &mut Option<(u64, Tripartition)>, p: &Tripartition| {
        let d = min_degree(g, p);
        if best.as_ref().is_none_or(|(b, _)| d > *b) {
            *best = Some((d, p.clone()));
        }
    };

    let small = 3u128.saturating_pow(g.n() as u32) <= u128::from(cfg.exact_cap) || m <= SMALL_M;
    if small {
        let seed = hill_climb(g, &random_partition(g, cfg.seed), cfg);
        let seed_value = min_degree(g, &seed);
        if let Some(out) = max_min_search(g, cfg.exact_cap, Some((seed, seed_value))) {
            if GOOD.is_met_by(out.value, m) {
                return Ok(outcome(g, out.partition, Method::Exact, 0, out.proven));
            }
            consider(&mut best, &out.partition);
        }
    }

    if let Some(out) = max_degree_path(g, cfg) {
        return Ok(out);
    }
    if let Some(out) = two_high_degree_path(g) {
        return Ok(out);
    }

    let mut restarts_used = 0;
    for round in 0..ENGINE_ROUNDS {
        let round_cfg = SearchConfig {
            max_restarts: cfg.max_restarts << round,
            seed: cfg.seed.wrapping_add(u64::from(round)),
            ..cfg.clone()
        };
        match engine_partition(g, cfg.epsilon, &round_cfg) {
            Ok(EngineOutcome::ThreeGood { partition, restarts_used: used }) => {
                restarts_used += used;
                if good_partition(g, &partition) {
                    return Ok(outcome(g, partition, Method::EngineDirect, restarts_used, false));
                }
                consider(&mut best, &partition);
            }
            Ok(EngineOutcome::Reduced(result)) => {
                restarts_used += result.restarts_used;
                consider(&mut best, &result.partition);
                if !discrete_engine_bounds_hold(g, &result) {
                    continue;
                }
                debug_assert_eq!(triple_degree(g, &result.partition), result.triple_degree);
                if let Some(p) = restrict_route(g, &result.partition, cfg) {
                    if good_partition(g, &p) {
                        return Ok(outcome(g, p, Method::EngineRestrict, restarts_used, false));
                    }
                    consider(&mut best, &p);
                }
                if let Some(p) = bounded_route(g, &result.partition) {
                    return Ok(outcome(g, p, Method::EngineBounded, restarts_used, false));
                }
            }
            Err(Error::RetryNeeded) => restarts_used += round_cfg.max_restarts,
            Err(e) => return Err(e),
        }
    }

    let incumbent = best.clone().map(|(v, p)| (p, v));
    let fallback_budget = cfg.exact_cap.saturating_mul(16);
    if let Some(out) = max_min_search(g, fallback_budget, incumbent) {
        if GOOD.is_met_by(out.value, m) {
            return Ok(outcome(g, out.partition, Method::RestartExactFallback, restarts_used, out.proven));
        }
        consider(&mut best, &out.partition);
    }

    let (_, p) = best.unwrap_or_else(|| (0, Tripartition::all_in(g.n(), Class::A)));
    let mut out = outcome(g, p, Method::RestartExactFallback, restarts_used, false);
    out.warning = Some(format!(
        "no partition meeting 3m/5 edges per class found within the search limits (m = {m})"
    ));
    Ok(out)
}
