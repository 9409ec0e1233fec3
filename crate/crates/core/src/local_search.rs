//! Single-vertex-move local search over tripartitions, maximising the
//! triple degree `d(A) + d(B) + d(C)`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::counting::{class_degrees, membership, signature_counts, triple_degree};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Vertex};
use crate::partition::{Class, Tripartition};
use crate::ratio::{epsilon_threshold, Ratio, DEFAULT_EPSILON};
use crate::rng;

/// Effect of moving one vertex on the triple degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveDelta {
    pub vertex: Vertex,
    pub from: Class,
    pub to: Class,
    pub delta: i64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ScanOrder {
    #[default]
    Ascending,
    /// One seeded permutation of the vertices, reused for every pass.
    Shuffled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_restarts: usize,
    pub seed: u64,
    pub scan_order: ScanOrder,
    /// Largest number of assignments (3^n for tripartitions, 2^n for
    /// bipartitions) an exhaustive search may visit.
    pub exact_cap: u64,
    /// Slack of the engine step.
    pub epsilon: Ratio,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_restarts: 32,
            seed: 0,
            scan_order: ScanOrder::Ascending,
            exact_cap: 10_000_000,
            epsilon: DEFAULT_EPSILON,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_restarts == 0 {
            return Err(Error::InvalidParameter("max_restarts must be positive".into()));
        }
        if self.exact_cap == 0 {
            return Err(Error::InvalidParameter("exact_cap must be positive".into()));
        }
        epsilon_threshold(self.epsilon).map(|_| ())
    }

    pub(crate) fn scan(&self, n: usize) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..n as Vertex).collect();
        if self.scan_order == ScanOrder::Shuffled {
            order.shuffle(&mut rng::stream(self.seed, u64::MAX));
        }
        order
    }
}

/// Partition plus per-edge class counts, so a move is priced from the
/// moved vertex's incident edges alone.
struct Climber<'g> {
    g: &'g Hypergraph3,
    p: Tripartition,
    counts: Vec<[u8; 3]>,
}

impl<'g> Climber<'g> {
    fn new(g: &'g Hypergraph3, p: Tripartition) -> Self {
        assert_eq!(p.len(), g.n(), "partition must assign every vertex of the hypergraph");
        let counts = g
            .edges()
            .iter()
            .map(|e| {
                let mut c = [0u8; 3];
                for &v in e {
                    c[p.class_of(v).index()] += 1;
                }
                c
            })
            .collect();
        Self { g, p, counts }
    }

    fn gain(&self, v: Vertex, to: Class) -> i64 {
        let from = self.p.class_of(v);
        if from == to {
            return 0;
        }
        self.g
            .incident(v)
            .iter()
            .map(|&e| {
                let c = self.counts[e];
                i64::from(c[to.index()] == 0) - i64::from(c[from.index()] == 1)
            })
            .sum()
    }

    fn apply(&mut self, v: Vertex, to: Class) {
        let from = self.p.class_of(v);
        for &e in self.g.incident(v) {
            self.counts[e][from.index()] -= 1;
            self.counts[e][to.index()] += 1;
        }
        self.p.set_class(v, to);
    }

    fn improving_move(&self, v: Vertex) -> Option<Class> {
        let from = self.p.class_of(v);
        Class::ALL
            .into_iter()
            .filter(|&c| c != from)
            .find(|&c| self.gain(v, c) > 0)
    }
}

/// Change in triple degree when `v` moves to `target`.
pub fn move_gain(g: &Hypergraph3, p: &Tripartition, v: Vertex, target: Class) -> Result<MoveDelta> {
    if v as usize >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    p.check_len(g.n())?;
    let from = p.class_of(v);
    if from == target {
        return Err(Error::NoOpMove(v));
    }
    let class_after = |u: Vertex| if u == v { target } else { p.class_of(u) };
    let mut delta = 0i64;
    for &e in g.incident(v) {
        let edge = g.edges()[e];
        let distinct = |f: &dyn Fn(Vertex) -> Class| {
            let mut seen = [false; 3];
            for &u in &edge {
                seen[f(u).index()] = true;
            }
            seen.iter().filter(|&&s| s).count() as i64
        };
        delta += distinct(&class_after) - distinct(&|u| p.class_of(u));
    }
    Ok(MoveDelta { vertex: v, from, to: target, delta })
}

/// Takes strictly improving single-vertex moves until none is left.
///
/// Vertices are scanned in the configured order, targets in the order
/// A, B, C, and the first improving target of each vertex is taken. Zero-gain
/// moves are never made, so the climb terminates.
pub fn hill_climb(g: &Hypergraph3, p0: &Tripartition, cfg: &SearchConfig) -> Tripartition {
    let order = cfg.scan(g.n());
    let mut climber = Climber::new(g, p0.clone());
    loop {
        let mut moved = false;
        for &v in &order {
            if let Some(to) = climber.improving_move(v) {
                climber.apply(v, to);
                moved = true;
            }
        }
        if !moved {
            return climber.p;
        }
    }
}

pub fn is_locally_optimal(g: &Hypergraph3, p: &Tripartition) -> bool {
    let climber = Climber::new(g, p.clone());
    g.vertices().all(|v| climber.improving_move(v).is_none())
}

/// True when no vertex of A or B can be moved into C with a gain.
pub fn is_semi_optimal(g: &Hypergraph3, p: &Tripartition) -> bool {
    let climber = Climber::new(g, p.clone());
    g.vertices()
        .filter(|&v| p.class_of(v) != Class::C)
        .all(|v| climber.gain(v, Class::C) <= 0)
}

/// Each vertex assigned uniformly at random, stream 0 of `seed`.
pub fn random_partition(g: &Hypergraph3, seed: u64) -> Tripartition {
    random_labels(g.n(), seed, 0)
}

pub(crate) fn random_labels(n: usize, seed: u64, stream: u64) -> Tripartition {
    let mut rng = rng::stream(seed, stream);
    Tripartition::new((0..n).map(|_| Class::from_index(rng.gen_range(0..3))).collect())
}

/// Both sides of the two inequalities every semi-optimal partition satisfies:
/// `3e(AAA) + 2e(AAB) <= e(ABC) + e(ACC)` and
/// `3e(BBB) + 2e(ABB) <= e(ABC) + e(BCC)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrepReport {
    pub lhs_a: u64,
    pub rhs_a: u64,
    pub lhs_b: u64,
    pub rhs_b: u64,
    pub holds: bool,
}

pub fn check_prep_inequalities(g: &Hypergraph3, p: &Tripartition) -> PrepReport {
    let e = signature_counts(g, p);
    let lhs_a = 3 * e.of("AAA") + 2 * e.of("AAB");
    let rhs_a = e.of("ABC") + e.of("ACC");
    let lhs_b = 3 * e.of("BBB") + 2 * e.of("ABB");
    let rhs_b = e.of("ABC") + e.of("BCC");
    PrepReport { lhs_a, rhs_a, lhs_b, rhs_b, holds: lhs_a <= rhs_a && lhs_b <= rhs_b }
}

/// Both sides of the per-vertex inequality behind semi-optimality. For `a`
/// in A this is `e(a,A,A) + e(a,A,B) <= e(a,B,C) + e(a,C,C)`, counting the
/// edges through `a` by the classes of their other two vertices; vertices of
/// B use the mirror image. `None` for vertices of C.
pub fn vertex_inequality(g: &Hypergraph3, p: &Tripartition, a: Vertex) -> Option<(u64, u64)> {
    let own = p.class_of(a);
    let other = match own {
        Class::A => Class::B,
        Class::B => Class::A,
        Class::C => return None,
    };
    let (mut lhs, mut rhs) = (0, 0);
    for &e in g.incident(a) {
        let mut rest = g.edges()[e].iter().filter(|&&u| u != a).map(|&u| p.class_of(u));
        let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
        let pair = |s: Class, t: Class| (x == s && y == t) || (x == t && y == s);
        if pair(own, own) || pair(own, other) {
            lhs += 1;
        } else if pair(other, Class::C) || pair(Class::C, Class::C) {
            rhs += 1;
        }
    }
    Some((lhs, rhs))
}

/// Reassigns `vs` to C. Semi-optimality is preserved by such moves, so the
/// input must be semi-optimal and `vs` must avoid C.
pub fn move_into_c(g: &Hypergraph3, p: &Tripartition, vs: &[Vertex]) -> Result<Tripartition> {
    p.check_len(g.n())?;
    for &v in vs {
        if v as usize >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if p.class_of(v) == Class::C {
            return Err(Error::AlreadyInC(v));
        }
    }
    if !is_semi_optimal(g, p) {
        return Err(Error::NotSemiOptimal);
    }
    let mut out = p.clone();
    for &v in vs {
        out.set_class(v, Class::C);
    }
    debug_assert!(is_semi_optimal(g, &out));
    Ok(out)
}

/// Shrinks `set` to a subset that still meets `threshold · m` edges but
/// whose every proper subset does not.
///
/// Vertices are removed one at a time, always the one with the fewest
/// private edges among those whose removal keeps the set above the
/// threshold (ties by smallest id). Degree is monotone under inclusion, so
/// a set none of whose single-vertex deletions is good is minimal.
pub fn minimal_good_subset(g: &Hypergraph3, set: &[Vertex], threshold: Ratio) -> Result<Vec<Vertex>> {
    let mut inside = membership(g.n(), set)?;
    let m = g.m();
    // number of members of the current set in each edge
    let mut hits: Vec<u8> = g
        .edges()
        .iter()
        .map(|e| e.iter().filter(|&&v| inside[v as usize]).count() as u8)
        .collect();
    let mut degree = hits.iter().filter(|&&h| h > 0).count() as u64;
    if !threshold.is_met_by(degree, m) {
        return Err(Error::BelowThreshold { degree, m, num: threshold.num, den: threshold.den });
    }
    loop {
        let private = |v: Vertex| g.incident(v).iter().filter(|&&e| hits[e] == 1).count() as u64;
        let removable = g
            .vertices()
            .filter(|&v| inside[v as usize])
            .map(|v| (private(v), v))
            .filter(|&(own, _)| threshold.is_met_by(degree - own, m))
            .min();
        let Some((own, v)) = removable else {
            break;
        };
        inside[v as usize] = false;
        for &e in g.incident(v) {
            hits[e] -= 1;
        }
        degree -= own;
    }
    Ok(g.vertices().filter(|&v| inside[v as usize]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineResult {
    /// `A` and `B` are minimal good sets for the engine's threshold and the
    /// partition is semi-optimal.
    pub partition: Tripartition,
    pub degrees: [u64; 3],
    pub triple_degree: u64,
    pub restarts_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineOutcome {
    /// All three classes meet `(2/3 - epsilon) · m` edges.
    ThreeGood { partition: Tripartition, restarts_used: usize },
    Reduced(EngineResult),
}

/// Searches for a partition with three `epsilon`-good classes (each
/// meeting at least `(2/3 - epsilon) · m` edges).
///
/// Runs `cfg.max_restarts` hill climbs from seeded random partitions and
/// returns the first local optimum whose classes are all good. Failing that,
/// the best local optimum is relabelled so C has the smallest degree, A and B
/// are cut down to minimal good subsets with the surplus moved into C, and
/// the result is returned once it is certified to have triple degree above
/// `(2 + 3 epsilon) · m`. [`Error::RetryNeeded`] when the local optimum is
/// too weak for that.
pub fn engine_partition(g: &Hypergraph3, epsilon: Ratio, cfg: &SearchConfig) -> Result<EngineOutcome> {
    let threshold = epsilon_threshold(epsilon)?;
    let m = g.m();
    let mut best: Option<(u64, Tripartition)> = None;
    for restart in 0..cfg.max_restarts {
        let start = random_labels(g.n(), cfg.seed, restart as u64);
        let p = hill_climb(g, &start, cfg);
        let degrees = class_degrees(g, &p);
        if degrees.iter().all(|&d| threshold.is_met_by(d, m)) {
            return Ok(EngineOutcome::ThreeGood { partition: p, restarts_used: restart + 1 });
        }
        let total = degrees.iter().sum();
        if best.as_ref().is_none_or(|(t, _)| total > *t) {
            best = Some((total, p));
        }
    }
    let (_, p) = best.ok_or(Error::RetryNeeded)?;
    reduce_local_optimum(g, &p, epsilon, cfg.max_restarts)
}

/// The reduction half of [`engine_partition`], applied to a given locally
/// optimal partition.
pub fn reduce_local_optimum(
    g: &Hypergraph3,
    p: &Tripartition,
    epsilon: Ratio,
    restarts_used: usize,
) -> Result<EngineOutcome> {
    let threshold = epsilon_threshold(epsilon)?;
    let m = g.m();
    let degrees = class_degrees(g, p);
    let good = |d: u64| threshold.is_met_by(d, m);
    if degrees.iter().all(|&d| good(d)) {
        return Ok(EngineOutcome::ThreeGood { partition: p.clone(), restarts_used });
    }
    // smallest degree into the C role, preferring to leave C where it is
    let weakest = Class::ALL
        .into_iter()
        .rev()
        .min_by_key(|c| degrees[c.index()])
        .expect("three classes");
    let p = p.with_c_role(weakest);
    let [da, db, _] = class_degrees(g, &p);
    if !good(da) || !good(db) {
        return Err(Error::RetryNeeded);
    }
    let a = p.members(Class::A);
    let b = p.members(Class::B);
    let a_min = minimal_good_subset(g, &a, threshold)?;
    let b_min = minimal_good_subset(g, &b, threshold)?;
    let surplus: Vec<Vertex> = a
        .iter()
        .filter(|v| a_min.binary_search(v).is_err())
        .chain(b.iter().filter(|v| b_min.binary_search(v).is_err()))
        .copied()
        .collect();
    let reduced = move_into_c(g, &p, &surplus).map_err(|_| Error::RetryNeeded)?;
    let degrees = class_degrees(g, &reduced);
    if good(degrees[Class::C.index()]) {
        return Ok(EngineOutcome::ThreeGood { partition: reduced, restarts_used });
    }
    let total = triple_degree(g, &reduced);
    // d(A,B,C) > (2 + 3 epsilon) m
    let Ratio { num: p_eps, den: q_eps } = epsilon;
    if u128::from(q_eps) * u128::from(total) <= u128::from(2 * q_eps + 3 * p_eps) * u128::from(m) {
        return Err(Error::RetryNeeded);
    }
    Ok(EngineOutcome::Reduced(EngineResult {
        partition: reduced,
        degrees,
        triple_degree: total,
        restarts_used,
    }))
}
