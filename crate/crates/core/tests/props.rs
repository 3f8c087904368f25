//! Property tests for the algebraic and enumerative primitives.

use nestohedra::buildset::Subset;
use nestohedra::moves::LabeledGraph;
use nestohedra::poly::{expand_gamma, f_to_h, gamma_le, h_to_gamma, IntPolynomial};
use nestohedra::poset::canonical_code;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..50, 0..6).prop_map(IntPolynomial::from_coeffs)
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::bool::ANY, pairs).prop_map(move |bits| {
            let mut g = LabeledGraph::new(n);
            let mut k = 0;
            for v in 2..=n {
                for u in 1..v {
                    if bits[k] {
                        g.add_edge(u, v).expect("fresh edge");
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn tree_strategy(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        // attach vertex k to a uniformly chosen earlier vertex
        prop::collection::vec(0usize..64, n.saturating_sub(1)).prop_map(move |choices| {
            let mut g = LabeledGraph::new(n);
            for (i, &c) in choices.iter().enumerate() {
                let k = i + 2;
                g.add_edge(c % (k - 1) + 1, k).expect("tree edge");
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn gamma_le_is_reflexive(a in poly_strategy()) {
        prop_assert!(gamma_le(&a, &a));
    }

    #[test]
    fn gamma_le_is_antisymmetric(a in poly_strategy(), b in poly_strategy()) {
        if gamma_le(&a, &b) && gamma_le(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn gamma_le_is_transitive(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        if gamma_le(&a, &b) && gamma_le(&b, &c) {
            prop_assert!(gamma_le(&a, &c));
        }
    }

    #[test]
    fn gamma_extraction_inverts_expansion(
        coeffs in prop::collection::vec(0i64..20, 1..4),
        extra in 0usize..3,
    ) {
        // any gamma of degree m expands to a symmetric h of degree d
        let gamma = IntPolynomial::from_coeffs(coeffs.clone());
        let m = gamma.degree().unwrap_or(0);
        let d = 2 * m + extra;
        let h = expand_gamma(&gamma, d);
        prop_assert_eq!(h_to_gamma(&h, d).unwrap(), gamma);
    }

    #[test]
    fn f_to_h_preserves_evaluation_shift(
        coeffs in prop::collection::vec(0i64..100, 1..6),
        x in -5i64..5,
    ) {
        let f = {
            let mut c = coeffs;
            if *c.last().unwrap() == 0 {
                *c.last_mut().unwrap() = 1;
            }
            IntPolynomial::from_coeffs(c)
        };
        let d = f.degree().unwrap();
        let h = f_to_h(&f, d).unwrap();
        // h(x + 1) = f(x) pointwise
        prop_assert_eq!(h.evaluate(x + 1), f.evaluate(x));
    }

    #[test]
    fn polynomial_json_is_the_coefficient_array(p in poly_strategy()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: IntPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn connected_set_enumeration_matches_subset_scan(g in graph_strategy(9)) {
        let mut fast = g.connected_vertex_sets();
        fast.sort_by_key(|s| s.canonical_key());
        let n = g.vertex_count();
        let mut brute: Vec<Subset> = (1u64..(1 << n))
            .map(Subset::from_bits)
            .filter(|&s| g.induces_connected(s))
            .collect();
        brute.sort_by_key(|s| s.canonical_key());
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(
        t in tree_strategy(8),
        seed in prop::array::uniform8(0usize..64),
    ) {
        let n = t.vertex_count();
        // build a permutation of 1..=n from the seed
        let mut perm: Vec<usize> = (1..=n).collect();
        for (i, &s) in seed.iter().enumerate() {
            if n > 1 {
                perm.swap(i % n, s % n);
            }
        }
        let mut relabeled = LabeledGraph::new(n);
        for (u, v) in t.edges() {
            relabeled.add_edge(perm[u - 1], perm[v - 1]).expect("permuted edge");
        }
        prop_assert_eq!(canonical_code(&t).unwrap(), canonical_code(&relabeled).unwrap());
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy(10)) {
        let text = g.to_text();
        prop_assert_eq!(LabeledGraph::from_text(&text).unwrap(), g);
    }
}
