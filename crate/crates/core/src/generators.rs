//! Extremal examples and seeded random instances.
//!
//! Random instances draw from [`crate::rng::stream`] (ChaCha8, 64-bit seed),
//! so a `(parameters, seed)` pair always produces the same instance.

use std::collections::HashSet;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, SpecialMultigraph, Vertex};
use crate::partition::{Class, Tripartition};
use crate::rng;

/// The 3×3 grid: vertex `v_ij` (1-based `i`, `j`) is id `3(i-1) + (j-1)`;
/// edges are the three rows followed by the three columns.
pub fn grid3() -> Hypergraph3 {
    let rows = (0..3).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]);
    let cols = (0..3).map(|j| [j, j + 3, j + 6]);
    Hypergraph3::new(9, rows.chain(cols)).expect("grid is simple")
}

/// Rows of [`grid3`] as classes A, B, C.
pub fn grid3_rows() -> Tripartition {
    Tripartition::new((0..9).map(|v| Class::from_index(v / 3)).collect())
}

/// Id of a named vertex `'a'..='g'` of [`tight15`].
pub fn tight15_vertex(name: char) -> Vertex {
    assert!(('a'..='g').contains(&name), "tight15 vertices are a..g");
    name as Vertex - 'a' as Vertex
}

/// Seven vertices `a..g` (ids 0..6) with edges abc, def, adg, beg, cfg.
pub fn tight15() -> Hypergraph3 {
    let edges = ["abc", "def", "adg", "beg", "cfg"].map(|e| {
        let v: Vec<Vertex> = e.chars().map(tight15_vertex).collect();
        [v[0], v[1], v[2]]
    });
    Hypergraph3::new(7, edges).expect("tight15 is simple")
}

/// The locally optimal partition `({a,d,g}, {b,e}, {c,f})` of [`tight15`].
pub fn tight15_local_optimum() -> Tripartition {
    let ids = |s: &str| s.chars().map(tight15_vertex).collect::<Vec<_>>();
    Tripartition::from_sets(7, [&ids("adg"), &ids("be"), &ids("cf")]).expect("valid partition")
}

/// All `C(n,3)` triples on `n` vertices.
pub fn complete(n: usize) -> Result<Hypergraph3> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("complete hypergraph needs n >= 3, got {n}")));
    }
    let n = n as Vertex;
    let triples = (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))
    });
    Hypergraph3::new(n as usize, triples)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Inverse of the colexicographic rank of a 3-subset.
fn unrank_triple(mut rank: u128) -> [Vertex; 3] {
    let mut out = [0; 3];
    for (slot, k) in (1..=3u64).rev().enumerate() {
        let mut c = k - 1;
        while binomial(c + 1, k) <= rank {
            c += 1;
        }
        rank -= binomial(c, k);
        out[2 - slot] = c as Vertex;
    }
    out
}

/// `m` distinct triples on `n` vertices, sampled uniformly without replacement.
pub fn random_hypergraph(n: usize, m: usize, seed: u64) -> Result<Hypergraph3> {
    let total = binomial(n as u64, 3);
    if m as u128 > total {
        return Err(Error::InvalidParameter(format!(
            "cannot place {m} distinct triples on {n} vertices (at most {total})"
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let mut edges: Vec<[Vertex; 3]> = if total <= 1 << 24 {
        index::sample(&mut rng, total as usize, m)
            .into_iter()
            .map(|r| unrank_triple(r as u128))
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let picked = index::sample(&mut rng, n, 3);
            let mut e = [picked.index(0), picked.index(1), picked.index(2)].map(|v| v as Vertex);
            e.sort_unstable();
            if seen.insert(e) {
                edges.push(e);
            }
        }
        edges
    };
    edges.sort_unstable();
    Hypergraph3::new(n, edges)
}

/// Multigraph with total edge multiplicity `m`, every pair used at most
/// `maxmult` times, and `k` special vertices chosen without replacement.
pub fn random_special_multigraph(
    n: usize,
    m: u64,
    k: usize,
    maxmult: u64,
    seed: u64,
) -> Result<SpecialMultigraph> {
    if k > n {
        return Err(Error::InvalidParameter(format!("{k} specials exceed {n} vertices")));
    }
    if maxmult == 0 {
        return Err(Error::InvalidParameter("maxmult must be at least 1".into()));
    }
    let pair_count = binomial(n as u64, 2);
    if u128::from(m) > pair_count * u128::from(maxmult) {
        return Err(Error::InvalidParameter(format!(
            "{m} edges exceed {pair_count} pairs of multiplicity at most {maxmult}"
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    let mut mult = vec![0u64; pairs.len()];
    let mut placed = 0;
    while placed < m {
        let i = rng.gen_range(0..pairs.len());
        if mult[i] < maxmult {
            mult[i] += 1;
            placed += 1;
        }
    }
    let edges = pairs
        .iter()
        .zip(&mult)
        .filter(|(_, &w)| w > 0)
        .map(|(&(u, v), &w)| (u, v, w));
    let specials = index::sample(&mut rng, n, k).into_iter().map(|v| v as Vertex);
    SpecialMultigraph::new(n, edges, specials)
}

/// A named instance family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Grid3,
    Tight15,
    Complete { n: usize },
    Random { n: usize, m: usize, seed: u64 },
    RandomSpecial { n: usize, m: u64, k: usize, maxmult: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Hypergraph(Hypergraph3),
    Special(SpecialMultigraph),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Instance> {
        Ok(match *self {
            GeneratorSpec::Grid3 => Instance::Hypergraph(grid3()),
            GeneratorSpec::Tight15 => Instance::Hypergraph(tight15()),
            GeneratorSpec::Complete { n } => Instance::Hypergraph(complete(n)?),
            GeneratorSpec::Random { n, m, seed } => {
                Instance::Hypergraph(random_hypergraph(n, m, seed)?)
            }
            GeneratorSpec::RandomSpecial { n, m, k, maxmult, seed } => {
                Instance::Special(random_special_multigraph(n, m, k, maxmult, seed)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{degree, triple_degree};

    #[test]
    fn grid3_shape() {
        let g = grid3();
        assert_eq!((g.n(), g.m()), (9, 6));
        assert!(g.vertices().all(|v| g.vertex_degree(v) == 2));
        assert_eq!(triple_degree(&g, &grid3_rows()), 2 * g.m());
    }

    #[test]
    fn tight15_shape() {
        let g = tight15();
        assert_eq!((g.n(), g.m()), (7, 5));
        let ids = |s: &str| s.chars().map(tight15_vertex).collect::<Vec<_>>();
        assert_eq!(degree(&g, &ids("be")).unwrap(), 3);
        assert_eq!(degree(&g, &ids("cf")).unwrap(), 3);
        assert_eq!(degree(&g, &ids("adg")).unwrap(), 5);
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete(4).unwrap().m(), 4);
        assert_eq!(complete(6).unwrap().m(), 20);
        assert_eq!(complete(9).unwrap().m(), 84);
        assert!(complete(2).is_err());
    }

    #[test]
    fn unranking_covers_all_triples() {
        let all: HashSet<[Vertex; 3]> = (0..binomial(7, 3)).map(unrank_triple).collect();
        assert_eq!(all.len(), 35);
        assert!(all.iter().all(|e| e[0] < e[1] && e[1] < e[2] && e[2] < 7));
    }

    #[test]
    fn random_hypergraph_is_reproducible_and_simple() {
        let g = random_hypergraph(3, 1, 9).unwrap();
        assert_eq!(g.edges(), &[[0, 1, 2]]);
        let a = random_hypergraph(10, 24, 42).unwrap();
        assert_eq!(a, random_hypergraph(10, 24, 42).unwrap());
        assert_eq!(a.m(), 24);
        assert_ne!(a, random_hypergraph(10, 24, 43).unwrap());
        assert!(random_hypergraph(5, 11, 0).is_err());
        assert_eq!(random_hypergraph(9, 84, 5).unwrap(), complete(9).unwrap());
        let big = random_hypergraph(2000, 50, 1).unwrap();
        assert_eq!(big.m(), 50);
    }

    #[test]
    fn random_special_multigraph_parameters() {
        let g = random_special_multigraph(5, 0, 5, 1, 3).unwrap();
        assert_eq!((g.m(), g.k()), (0, 5));
        let g = random_special_multigraph(6, 10, 2, 2, 7).unwrap();
        assert_eq!((g.n(), g.m(), g.k()), (6, 10, 2));
        assert!(g.pairs().iter().all(|p| p.2 <= 2));
        assert_eq!(g, random_special_multigraph(6, 10, 2, 2, 7).unwrap());
        assert!(random_special_multigraph(3, 7, 0, 2, 0).is_err());
        assert!(random_special_multigraph(3, 1, 4, 2, 0).is_err());
        assert!(random_special_multigraph(3, 1, 0, 0, 0).is_err());
    }
}
