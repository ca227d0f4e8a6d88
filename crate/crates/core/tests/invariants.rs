use num_rational::Ratio;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gel_core::entropy::{
    h2_degree, majorizes, renyi_entropy, renyi_graph_entropy, shannon_entropy, star_test, sum_squares_monotone_check, tr2,
    union_entropy, von_neumann_entropy, Majorization, ProbabilityDistribution,
};
use gel_core::enumerate::{enumerate_graphs, for_each_graph};
use gel_core::graph::{disjoint_union, star};
use gel_core::spectral::{density_spectrum, laplacian_eigenvalues, DEFAULT_TOL};
use gel_core::{parse_graph6, write_graph6, Graph};

fn random_distribution(rng: &mut StdRng) -> ProbabilityDistribution {
    let len = rng.gen_range(1..=12);
    let raw: Vec<f64> = (0..len).map(|_| rng.gen_range(0.0..1.0f64).powi(3)).collect();
    let total: f64 = raw.iter().sum();
    if total == 0.0 {
        return ProbabilityDistribution::uniform(len);
    }
    ProbabilityDistribution::new(raw.iter().map(|x| x / total).collect()).unwrap()
}

#[test]
fn renyi_non_increasing_in_alpha() {
    let mut rng = StdRng::seed_from_u64(7);
    let alphas = [0.5, 1.0, 1.1, 2.0, 5.0, 10.0];
    for _ in 0..200 {
        let p = random_distribution(&mut rng);
        let h: Vec<f64> = alphas.iter().map(|&a| renyi_entropy(&p, a).unwrap()).collect();
        for w in h.windows(2) {
            assert!(w[1] <= w[0] + 1e-9, "{h:?} for {:?}", p.probs());
        }
    }
}

#[test]
fn renyi_bounded_by_uniform() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_distribution(&mut rng);
        let n = p.probs().len();
        let top = (n as f64).log2();
        for alpha in [0.5, 1.0, 2.0, 5.0] {
            let h = renyi_entropy(&p, alpha).unwrap();
            assert!((-1e-12..=top + 1e-9).contains(&h));
            let u = renyi_entropy(&ProbabilityDistribution::uniform(n), alpha).unwrap();
            assert!((u - top).abs() < 1e-12);
        }
    }
}

#[test]
fn von_neumann_at_least_h2() {
    for n in 2..=7 {
        for g in enumerate_graphs(n, true).unwrap() {
            let s = von_neumann_entropy(&g).unwrap();
            let h2 = h2_degree(&g.degree_sequence()).unwrap();
            assert!(s >= h2 - 1e-9, "{}", write_graph6(&g));
            assert!((renyi_graph_entropy(&g, 2.0).unwrap() - h2).abs() < 1e-9);
        }
    }
}

#[test]
fn edge_addition_keeps_tr2_below_star() {
    for n in 3..=7 {
        let star_t = tr2(&star(n).unwrap().degree_sequence()).unwrap();
        for g in enumerate_graphs(n, true).unwrap() {
            if tr2(&g.degree_sequence()).unwrap() > star_t {
                continue;
            }
            for (u, v) in g.complement_edges() {
                let h = g.add_edge(u, v).unwrap();
                assert!(tr2(&h.degree_sequence()).unwrap() < star_t);
            }
        }
    }
}

#[test]
fn graph6_round_trip_exhaustive() {
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn zero_multiplicity_counts_components() {
    for n in 1..=6 {
        for_each_graph(n, false, |g| {
            let zeros = if g.size() == 0 {
                laplacian_eigenvalues(g, DEFAULT_TOL).unwrap().iter().filter(|&&x| x.abs() < 1e-12).count()
            } else {
                density_spectrum(g, DEFAULT_TOL).unwrap().zero_multiplicity()
            };
            assert_eq!(zeros, g.components().len(), "{}", write_graph6(g));
        })
        .unwrap();
    }
}

#[test]
fn union_formula_matches_spectrum() {
    let parts: Vec<Graph> = (2..=5).flat_map(|n| enumerate_graphs(n, true).unwrap()).collect();
    for a in &parts {
        for b in &parts {
            if a.order() + b.order() > 8 {
                continue;
            }
            let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
            let formula = union_entropy(&[
                (von_neumann_entropy(a).unwrap(), a.degree_sum()),
                (von_neumann_entropy(b).unwrap(), b.degree_sum()),
            ])
            .unwrap();
            assert!((formula - von_neumann_entropy(&u).unwrap()).abs() < 1e-9);
        }
    }
}

#[test]
fn star_test_certifies_star_bound() {
    for n in 3..=7 {
        let star_s = von_neumann_entropy(&star(n).unwrap()).unwrap();
        for g in enumerate_graphs(n, true).unwrap() {
            if star_test(&g.degree_sequence(), n).unwrap() {
                assert!(von_neumann_entropy(&g).unwrap() >= star_s - 1e-9);
            }
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=64).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .zip(&bits)
                .filter(|(_, &b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip_random(g in arb_graph()) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn mediant_between_extreme_ratios(st in proptest::collection::vec((1u64..1000, 1u64..1000), 1..10)) {
        let ratios: Vec<Ratio<u64>> = st.iter().map(|&(s, t)| Ratio::new(s, t)).collect();
        let mediant = Ratio::new(st.iter().map(|p| p.0).sum(), st.iter().map(|p| p.1).sum());
        let lo = *ratios.iter().min().unwrap();
        let hi = *ratios.iter().max().unwrap();
        if lo == hi {
            prop_assert_eq!(mediant, lo);
        } else {
            prop_assert!(lo < mediant && mediant < hi);
        }
    }

    #[test]
    fn majorization_orders_sum_of_squares(
        b in proptest::collection::vec(0u64..20, 1..10),
        moves in proptest::collection::vec((0usize..10, 0usize..10), 0..6),
    ) {
        // Robin Hood transfers in reverse: moving a unit from a smaller entry
        // to a not-smaller one yields a majorizing sequence.
        let mut c = b.clone();
        for (i, j) in moves {
            let (i, j) = (i % c.len(), j % c.len());
            if i != j && c[i] >= c[j] && c[j] > 0 {
                c[i] += 1;
                c[j] -= 1;
            }
        }
        let m = majorizes(&c, &b).unwrap();
        prop_assert_ne!(m, Majorization::No);
        prop_assert!(sum_squares_monotone_check(&c, &b).unwrap());
        let mut sorted_c = c.clone();
        let mut sorted_b = b.clone();
        sorted_c.sort_unstable();
        sorted_b.sort_unstable();
        prop_assert_eq!(m == Majorization::WeaklyMajorizes, sorted_c == sorted_b);
    }

    #[test]
    fn shannon_matches_renyi_limit(seed in any::<u64>()) {
        let p = random_distribution(&mut StdRng::seed_from_u64(seed));
        let s = shannon_entropy(&p);
        let near = renyi_entropy(&p, 1.0 + 1e-7).unwrap();
        prop_assert!((s - near).abs() < 1e-5);
    }
}
