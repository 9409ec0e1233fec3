use proptest::prelude::*;

use judicious::counting::{
    class_degrees, degree, degree2, private_degree, restrict, signature_counts, triple_degree,
};
use judicious::generators::{random_hypergraph, random_special_multigraph};
use judicious::local_search::{
    check_prep_inequalities, hill_climb, is_locally_optimal, is_semi_optimal, minimal_good_subset,
    move_gain, move_into_c, SearchConfig,
};
use judicious::special::{
    certify_bipartition, lex_local_search, maximal_extension, meeting_counts, meets_pair_bound,
    shrink_to_pairs, special_bipartition,
};
use judicious::{solve, verify_good, Bipartition, Class, Hypergraph3, Ratio, Side, Tripartition, Vertex};

fn max_edges(n: usize) -> usize {
    n * (n - 1) * (n - 2) / 6
}

prop_compose! {
    fn hypergraph(max_n: usize, max_m: usize)(n in 3..=max_n)
        (m in 0..=max_edges(n).min(max_m), seed in any::<u64>(), n in Just(n)) -> Hypergraph3 {
        random_hypergraph(n, m, seed).unwrap()
    }
}

prop_compose! {
    fn with_partition(max_n: usize, max_m: usize)(g in hypergraph(max_n, max_m))
        (labels in prop::collection::vec(0..3usize, g.n()), g in Just(g)) -> (Hypergraph3, Tripartition) {
        (g, Tripartition::new(labels.into_iter().map(Class::from_index).collect()))
    }
}

fn side_sets(p: &Tripartition) -> [Vec<Vertex>; 3] {
    Class::ALL.map(|c| p.members(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counting_identities((g, p) in with_partition(12, 40)) {
        let e = signature_counts(&g, &p);
        let m = g.m();
        prop_assert_eq!(e.total(), m);
        let [da, db, dc] = class_degrees(&g, &p);
        prop_assert_eq!(triple_degree(&g, &p), da + db + dc);
        prop_assert_eq!(
            triple_degree(&g, &p) + e.of("AAA") + e.of("BBB") + e.of("CCC"),
            2 * m + e.of("ABC")
        );
        prop_assert_eq!(e.of("AAA") + e.of("BBB") + e.of("AAB") + e.of("ABB"), m - dc);
        prop_assert!(e.of("ABC") + e.of("ACC") + e.of("BBC") + e.of("CCC") <= dc);
    }

    #[test]
    fn degree_splits_into_private_and_double((g, p) in with_partition(12, 40)) {
        for set in side_sets(&p) {
            let private: u64 = set.iter().map(|&a| private_degree(&g, a, &set).unwrap()).sum();
            prop_assert_eq!(degree(&g, &set).unwrap(), private + degree2(&g, &set).unwrap());
        }
    }

    #[test]
    fn restriction_conserves_multiplicity(g in hypergraph(12, 40), a in 0..12u32, b in 0..12u32) {
        let dropped = [a % g.n() as u32, b % g.n() as u32];
        let keep: Vec<Vertex> = g.vertices().filter(|v| !dropped.contains(v)).collect();
        let h = restrict(&g, &keep).unwrap();
        let total: u64 = h.edges().iter().map(|e| e.multiplicity).sum();
        prop_assert_eq!(total, g.m());
        prop_assert_eq!(h.singleton_count() + h.large_edge_count(), g.m());
        let s = shrink_to_pairs(&h);
        prop_assert_eq!(s.k(), h.singleton_count());
        prop_assert_eq!(s.m(), h.large_edge_count());
    }

    #[test]
    fn hill_climb_reaches_local_optimum((g, p) in with_partition(12, 40)) {
        let q = hill_climb(&g, &p, &SearchConfig::default());
        prop_assert!(triple_degree(&g, &q) >= triple_degree(&g, &p));
        prop_assert!(is_locally_optimal(&g, &q));
        for v in g.vertices() {
            for c in Class::ALL {
                if c != q.class_of(v) {
                    prop_assert!(move_gain(&g, &q, v, c).unwrap().delta <= 0);
                }
            }
        }
        for c in Class::ALL {
            prop_assert!(check_prep_inequalities(&g, &q.with_c_role(c)).holds);
        }
    }

    #[test]
    fn moves_into_c_keep_semi_optimality((g, p) in with_partition(12, 40), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let mut q = hill_climb(&g, &p, &SearchConfig::default());
        prop_assert!(is_semi_optimal(&g, &q));
        for pick in picks {
            let outside: Vec<Vertex> = g.vertices().filter(|&v| q.class_of(v) != Class::C).collect();
            if outside.is_empty() {
                break;
            }
            q = move_into_c(&g, &q, &[outside[pick.index(outside.len())]]).unwrap();
            prop_assert!(is_semi_optimal(&g, &q));
        }
    }

    #[test]
    fn minimal_good_subsets_are_minimal((g, p) in with_partition(12, 40)) {
        let thr = Ratio::new(3, 5);
        for set in side_sets(&p) {
            let Ok(sub) = minimal_good_subset(&g, &set, thr) else { continue };
            prop_assert!(sub.iter().all(|v| set.contains(v)));
            prop_assert!(thr.is_met_by(degree(&g, &sub).unwrap(), g.m()));
            for &v in &sub {
                let rest: Vec<Vertex> = sub.iter().copied().filter(|&u| u != v).collect();
                prop_assert!(!thr.is_met_by(degree(&g, &rest).unwrap(), g.m()));
            }
        }
    }

    #[test]
    fn lex_fixed_points_and_extension(n in 2..=9usize, m in 0..=14u64, k in 0..=9usize, seed in any::<u64>(), labels in prop::collection::vec(any::<bool>(), 9)) {
        let k = k.min(n);
        let m = m.min((n * (n - 1) / 2) as u64 * 2);
        let g = random_special_multigraph(n, m, k, 2, seed).unwrap();
        let p0 = Bipartition::new(labels[..n].iter().map(|&b| if b { Side::Two } else { Side::One }).collect());
        let p = lex_local_search(&g, &p0, &SearchConfig::default());
        let c = certify_bipartition(&g, &p);
        let [e1, e2] = c.spanned;
        prop_assert!(3 * e1 + e2 <= g.m());
        prop_assert!(3 * e2 + e1 <= g.m());
        let w = maximal_extension(&g, &p);
        for v in 0..n as Vertex {
            if p.side_of(v) == Side::Two {
                prop_assert_eq!(w.side_of(v), Side::Two);
            }
        }
        let (best, cert) = special_bipartition(&g, &SearchConfig::default()).unwrap();
        prop_assert!(cert.holds);
        prop_assert_eq!(certify_bipartition(&g, &best), cert);
    }

    #[test]
    fn restricted_meeting_bound(g in hypergraph(12, 40), a in 0..12u32, b in 0..12u32) {
        let dropped = [a % g.n() as u32, b % g.n() as u32];
        let keep: Vec<Vertex> = g.vertices().filter(|v| !dropped.contains(v)).collect();
        let h = restrict(&g, &keep).unwrap();
        let (p, d) = judicious::special::bipartition_hypergraph_meeting(&h, &SearchConfig::default()).unwrap();
        prop_assert_eq!(meeting_counts(&h, &p), d);
        prop_assert!(meets_pair_bound(&h, d[0]) && meets_pair_bound(&h, d[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_is_sound(g in hypergraph(40, 160), seed in any::<u64>()) {
        prop_assume!(g.m() > 0);
        let cfg = SearchConfig { seed, ..SearchConfig::default() };
        let out = solve(&g, &cfg).unwrap();
        let again = verify_good(&g, &out.partition).unwrap();
        prop_assert_eq!(&again.degrees, &out.certificate.degrees);
        prop_assert!(out.certificate.meets_bound);
        prop_assert!(out.warning.is_none());
    }
}
