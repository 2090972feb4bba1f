mod common;

use proptest::prelude::*;

use vmtk_core::bits;
use vmtk_core::corpus;
use vmtk_core::io::{from_graph6, read_edge_list, to_graph6, write_edge_list};
use vmtk_core::iso::canonical_form;
use vmtk_core::rank::{check_submodularity, cutrank, layout_width, linear_rankwidth_exact, lrw_at_most};
use vmtk_core::split::{canonical_decomposition, is_distance_hereditary, MarkedGraph};
use vmtk_core::vm::{elementary_representatives, local_complement, local_orbit, pivot, pivot_direct};
use vmtk_core::{isomorphic, Graph};

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn with_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..n)
    })
}

fn dh_graph() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1usize..=12).prop_map(|(seed, n)| corpus::random_dh_graph(&mut corpus::rng(seed), n))
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1..=max_n, 0.1f64..0.7)
        .prop_map(|(seed, n, p)| corpus::random_connected_graph(&mut corpus::rng(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn local_complement_matches_definition((g, v) in with_vertex(12)) {
        let h = local_complement(&g, v).unwrap();
        prop_assert_eq!(&h, &lc_oracle(&g, v));
        prop_assert_eq!(local_complement(&h, v).unwrap(), g);
    }

    #[test]
    fn pivot_descriptions_agree(g in graph(12), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let p = pivot(&g, u, v).unwrap();
        prop_assert_eq!(&p, &pivot_direct(&g, u, v).unwrap());
        prop_assert_eq!(&p, &pivot(&g, v, u).unwrap());
    }

    #[test]
    fn cutrank_is_symmetric_and_invariant((g, v) in with_vertex(12), x in any::<u128>()) {
        let x = x & g.vertex_set();
        let c = cutrank(&g, x).unwrap();
        prop_assert_eq!(c, cut_rank(&adjacency_rows(&g), x));
        prop_assert_eq!(c, cutrank(&g, g.vertex_set() & !x).unwrap());
        prop_assert!(c <= bits::len(x).min(g.n() - bits::len(x)));
        prop_assert_eq!(c, cutrank(&local_complement(&g, v).unwrap(), x).unwrap());
    }

    #[test]
    fn submodular(g in graph(12), x in any::<u128>(), y in any::<u128>()) {
        let (x, y) = (x & g.vertex_set(), y & g.vertex_set());
        prop_assert!(check_submodularity(&g, x, y).unwrap());
    }

    #[test]
    fn exact_width_matches_witness_and_decision(g in graph(9)) {
        let (w, l) = linear_rankwidth_exact(&g).unwrap();
        prop_assert_eq!(layout_width(&g, &l).unwrap(), w);
        prop_assert_eq!(width_of(&g, &l.order), w);
        let yes = lrw_at_most(&g, w, 1_000_000).unwrap().unwrap();
        prop_assert!(layout_width(&g, &yes).unwrap() <= w);
        if w > 0 {
            prop_assert!(lrw_at_most(&g, w - 1, 1_000_000).unwrap().is_none());
        }
    }

    #[test]
    fn width_is_a_local_equivalence_invariant((g, v) in with_vertex(9)) {
        let h = local_complement(&g, v).unwrap();
        prop_assert_eq!(linear_rankwidth_exact(&g).unwrap().0, linear_rankwidth_exact(&h).unwrap().0);
    }

    #[test]
    fn canonical_form_ignores_vertex_order(g in graph(9), seed in any::<u64>()) {
        let h = corpus::shuffle_vertices(&mut corpus::rng(seed), &g);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn text_formats_round_trip(g in graph(20)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g.clone());
        let back = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back.raw_adjacency(), g.raw_adjacency());
    }

    #[test]
    fn decompositions_recompose_to_the_graph(g in connected(12)) {
        let d = canonical_decomposition(&g).unwrap();
        d.validate().unwrap();
        prop_assert_eq!(d.recompose_all(), g.clone());
        let text = d.to_text();
        let back = MarkedGraph::from_text(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert!(back.isomorphic_fixing_labels(&d));
    }

    #[test]
    fn bags_are_induced_subgraphs(g in connected(9)) {
        let d = canonical_decomposition(&g).unwrap();
        for bag in d.bags() {
            let h = d.bag_graph(bag);
            let found = (0u128..1 << g.n())
                .filter(|s| s.count_ones() as usize == h.n())
                .any(|s| isomorphic(&g.induced(s), &h));
            prop_assert!(found);
        }
    }

    #[test]
    fn local_complement_commutes_with_decomposition(g in dh_graph(), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.n());
        let lhs = canonical_decomposition(&g).unwrap().local_complement(v).unwrap();
        let rhs = canonical_decomposition(&local_complement(&g, v).unwrap()).unwrap();
        prop_assert!(lhs.isomorphic_fixing_labels(&rhs));
    }

    #[test]
    fn local_orbits_keep_size_and_connectivity(g in connected(6)) {
        for cf in local_orbit(&g, 100_000).unwrap() {
            let h = cf.to_graph();
            prop_assert_eq!(h.n(), g.n());
            prop_assert!(h.is_connected());
        }
    }
}

#[test]
fn distance_hereditary_recognition_matches_distances() {
    for n in 1..=7 {
        for g in corpus::all_graphs(n).into_iter().filter(|g| g.is_connected()) {
            assert_eq!(is_distance_hereditary(&g).unwrap(), is_distance_hereditary_oracle(&g), "{g:?}");
        }
    }
    let mut rng = corpus::rng(corpus::DEFAULT_SEED);
    for _ in 0..200 {
        let g = corpus::random_connected_graph(&mut rng, 8, 0.35);
        assert_eq!(is_distance_hereditary(&g).unwrap(), is_distance_hereditary_oracle(&g));
    }
}

#[test]
fn local_complement_is_an_involution_up_to_eight_vertices() {
    for n in 1..=8 {
        for g in corpus::all_graphs(n) {
            for v in 0..n {
                let h = local_complement(&g, v).unwrap();
                assert_eq!(local_complement(&h, v).unwrap(), g);
            }
        }
    }
}

#[test]
fn vertex_minors_never_increase_width() {
    for n in 1..=6 {
        for g in corpus::all_graphs(n) {
            let w = linear_rankwidth_exact(&g).unwrap().0;
            for v in 0..n {
                for h in elementary_representatives(&g, v).unwrap() {
                    assert!(linear_rankwidth_exact(&h).unwrap().0 <= w);
                }
            }
        }
    }
}

#[test]
fn exact_width_matches_all_orders() {
    for n in 1..=7 {
        for g in corpus::all_graphs(n) {
            assert_eq!(linear_rankwidth_exact(&g).unwrap().0, brute_force_lrw(&g));
        }
    }
}
