//! Bipartitions of multigraphs with special vertices.
//!
//! The load of a side `W` is `e(W) + f(W)`: edges spanned by `W` plus special
//! vertices in `W`. Every multigraph with `m` edges and `k` specials has a
//! bipartition where both loads are at most `m/3 + (k+1)/2`, which is
//! compared in integers as `6·load <= 2m + 3(k+1)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{MultiHypergraph, SpecialMultigraph, Vertex};
use crate::local_search::SearchConfig;
use crate::oracle;
use crate::partition::{Bipartition, Side};
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionCertificate {
    /// Edges spanned by each side, with multiplicity.
    pub spanned: [u64; 2],
    /// Special vertices on each side.
    pub specials: [u64; 2],
    pub m: u64,
    pub k: u64,
    pub holds: bool,
}

impl BipartitionCertificate {
    pub fn loads(&self) -> [u64; 2] {
        [self.spanned[0] + self.specials[0], self.spanned[1] + self.specials[1]]
    }

    pub fn max_load(&self) -> u64 {
        self.loads().into_iter().max().unwrap_or(0)
    }
}

fn load_fits(load: u64, m: u64, k: u64) -> bool {
    6 * u128::from(load) <= 2 * u128::from(m) + 3 * (u128::from(k) + 1)
}

pub fn certify_bipartition(g: &SpecialMultigraph, p: &Bipartition) -> BipartitionCertificate {
    assert_eq!(p.len(), g.n(), "bipartition must assign every vertex");
    let mut spanned = [0u64; 2];
    for &(u, v, w) in g.pairs() {
        let s = p.side_of(u);
        if s == p.side_of(v) {
            spanned[s.index()] += w;
        }
    }
    let mut specials = [0u64; 2];
    for s in g.specials() {
        specials[p.side_of(s).index()] += 1;
    }
    let (m, k) = (g.m(), g.k());
    let holds = (0..2).all(|i| load_fits(spanned[i] + specials[i], m, k));
    BipartitionCertificate { spanned, specials, m, k, holds }
}

/// Edge multiplicity between `v` and each side.
fn side_weights(g: &SpecialMultigraph, p: &Bipartition, v: Vertex) -> [u64; 2] {
    let mut w = [0u64; 2];
    for &(u, mult) in g.neighbours(v) {
        w[p.side_of(u).index()] += mult;
    }
    w
}

fn special_counts(g: &SpecialMultigraph, p: &Bipartition) -> [i64; 2] {
    let mut f = [0i64; 2];
    for s in g.specials() {
        f[p.side_of(s).index()] += 1;
    }
    f
}

/// Local search minimising `(e(V1) + e(V2), |f(V1) - f(V2)|)` in
/// lexicographic order over single-vertex moves.
///
/// At a fixed point every vertex has at least as many edges to the other
/// side as to its own, and when one side holds at least two more specials
/// than the other, each of its specials has strictly more.
pub fn lex_local_search(g: &SpecialMultigraph, p0: &Bipartition, cfg: &SearchConfig) -> Bipartition {
    assert_eq!(p0.len(), g.n(), "bipartition must assign every vertex");
    let order = cfg.scan(g.n());
    let mut p = p0.clone();
    let mut f = special_counts(g, &p);
    loop {
        let mut moved = false;
        for &v in &order {
            let from = p.side_of(v);
            let to = from.other();
            let w = side_weights(g, &p, v);
            let de = w[to.index()] as i64 - w[from.index()] as i64;
            let gap = (f[0] - f[1]).abs();
            let new_gap = if g.is_special(v) {
                let mut nf = f;
                nf[from.index()] -= 1;
                nf[to.index()] += 1;
                (nf[0] - nf[1]).abs()
            } else {
                gap
            };
            if de < 0 || (de == 0 && new_gap < gap) {
                p.set_side(v, to);
                if g.is_special(v) {
                    f[from.index()] -= 1;
                    f[to.index()] += 1;
                }
                moved = true;
            }
        }
        if !moved {
            return p;
        }
    }
}

/// Grows side Two by single vertices from side One, in passes over
/// ascending ids, while side Two's load stays within the bound. Side Two
/// only ever gains vertices.
pub fn maximal_extension(g: &SpecialMultigraph, p: &Bipartition) -> Bipartition {
    let (m, k) = (g.m(), g.k());
    let cert = certify_bipartition(g, p);
    let mut load = cert.spanned[1] + cert.specials[1];
    let mut w = p.clone();
    loop {
        let mut grown = false;
        for v in 0..g.n() as Vertex {
            if w.side_of(v) == Side::Two {
                continue;
            }
            let added = side_weights(g, &w, v)[Side::Two.index()] + u64::from(g.is_special(v));
            if load_fits(load + added, m, k) {
                w.set_side(v, Side::Two);
                load += added;
                grown = true;
            }
        }
        if !grown {
            return w;
        }
    }
}

/// Specials alternate between the sides in ascending id order; everything
/// else starts on side One.
fn balanced_start(g: &SpecialMultigraph) -> Bipartition {
    let mut p = Bipartition::all_in(g.n(), Side::One);
    for (i, s) in g.specials().enumerate() {
        if i % 2 == 1 {
            p.set_side(s, Side::Two);
        }
    }
    p
}

/// Lexicographic search, then sides relabelled so side One holds at least as
/// many specials, then [`maximal_extension`].
fn search_from(g: &SpecialMultigraph, start: &Bipartition, cfg: &SearchConfig) -> Bipartition {
    let mut p = lex_local_search(g, start, cfg);
    let f = special_counts(g, &p);
    if f[1] > f[0] {
        p = p.flipped();
    }
    maximal_extension(g, &p)
}

/// A bipartition whose two loads are both within `m/3 + (k+1)/2`.
///
/// Falls back to exhaustive search when `2^n` is within `cfg.exact_cap`,
/// otherwise to seeded random restarts; [`Error::ResourceCap`] carries the
/// best bipartition seen if all of those fail.
pub fn special_bipartition(
    g: &SpecialMultigraph,
    cfg: &SearchConfig,
) -> Result<(Bipartition, BipartitionCertificate)> {
    let p = search_from(g, &balanced_start(g), cfg);
    let cert = certify_bipartition(g, &p);
    if cert.holds {
        return Ok((p, cert));
    }
    let mut best = (p, cert);
    match oracle::best_bipartition_special(g, cfg.exact_cap) {
        Ok((p, _)) => {
            let cert = certify_bipartition(g, &p);
            if cert.holds {
                return Ok((p, cert));
            }
            if cert.max_load() < best.1.max_load() {
                best = (p, cert);
            }
        }
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    for restart in 0..cfg.max_restarts {
        let mut rng = rng::stream(cfg.seed, restart as u64);
        let start = Bipartition::new(
            (0..g.n()).map(|_| if rng.gen_bool(0.5) { Side::One } else { Side::Two }).collect(),
        );
        let p = search_from(g, &start, cfg);
        let cert = certify_bipartition(g, &p);
        if cert.holds {
            return Ok((p, cert));
        }
        if cert.max_load() < best.1.max_load() {
            best = (p, cert);
        }
    }
    Err(Error::ResourceCap { best: Box::new(best) })
}

/// Multigraph obtained by replacing every edge of size 3 with its two
/// smallest vertices and turning every size-1 edge into a special vertex.
pub fn shrink_to_pairs(h: &MultiHypergraph) -> SpecialMultigraph {
    let pairs = h
        .edges()
        .iter()
        .filter(|e| e.vertices.len() >= 2)
        .map(|e| (e.vertices[0], e.vertices[1], e.multiplicity));
    let specials = h.edges().iter().filter(|e| e.vertices.len() == 1).map(|e| e.vertices[0]);
    SpecialMultigraph::with_origin(h.origin().to_vec(), pairs, specials)
        .expect("subedges of a valid multi-hypergraph are valid")
}

/// Number of edges of `h` (with multiplicity) meeting each side.
pub fn meeting_counts(h: &MultiHypergraph, p: &Bipartition) -> [u64; 2] {
    let mut d = [0u64; 2];
    for e in h.edges() {
        let mut seen = [false; 2];
        for &v in &e.vertices {
            seen[p.side_of(v).index()] = true;
        }
        for (count, hit) in d.iter_mut().zip(seen) {
            *count += u64::from(hit) * e.multiplicity;
        }
    }
    d
}

/// Whether a side meeting `d` edges of `h` reaches `2m/3 + (k-1)/2`, where
/// `m` counts edges of size at least 2 and `k` edges of size 1.
pub fn meets_pair_bound(h: &MultiHypergraph, d: u64) -> bool {
    let (m, k) = (i128::from(h.large_edge_count()), i128::from(h.singleton_count()));
    6 * i128::from(d) >= 4 * m + 3 * (k - 1)
}

/// Bipartition of a multi-hypergraph in which each side meets at least
/// `2m/3 + (k-1)/2` edges, via [`shrink_to_pairs`] and
/// [`special_bipartition`]. Returns the meeting count of each side.
pub fn bipartition_hypergraph_meeting(
    h: &MultiHypergraph,
    cfg: &SearchConfig,
) -> Result<(Bipartition, [u64; 2])> {
    let g = shrink_to_pairs(h);
    let (p, _) = special_bipartition(&g, cfg)?;
    let d = meeting_counts(h, &p);
    Ok((p, d))
}
