use hyperbolicity::generators::{
    find_colored_independent_set, find_orthogonal_pair, gen_4is_graph, gen_gnp, gen_ov_graph, gen_random_cograph,
    gen_random_tree, gen_subdivided, gen_theta, gen_tree_plus_edges, plant_p4s, solve_4is_bruteforce,
    solve_ov_bruteforce, FourPartiteInstance, OvInstance,
};
use hyperbolicity::cograph::cograph_recognize;
use proptest::prelude::*;

#[test]
fn ov_parse_and_solve() {
    let yes = OvInstance::parse(&["110", "011"], &["001", "110"]).unwrap();
    assert_eq!(find_orthogonal_pair(&yes), Some((0, 0)));
    let no = OvInstance::parse(&["11"], &["11", "01"]).unwrap();
    assert!(!solve_ov_bruteforce(&no));
    assert!(OvInstance::parse(&["10"], &["101"]).is_err());
}

#[test]
fn ov_graph_layout() {
    let inst = OvInstance::random(4, 3, 0.5, 11);
    let og = gen_ov_graph(&inst).unwrap();
    let l = &og.landmarks;
    assert_eq!(og.graph.n(), 2 * 4 + 2 * 3 + 6);
    assert_eq!((l.a.len(), l.b.len(), l.c.len(), l.d.len()), (4, 4, 3, 3));
    assert_eq!(og.graph.connected_components().len(), 1);
}

#[test]
fn four_partite_validation() {
    let inst = FourPartiteInstance::random([2, 3, 2, 1], 0.3, 4);
    assert_eq!(inst.sizes(), [2, 3, 2, 1]);
    if let Some(q) = find_colored_independent_set(&inst) {
        for i in 0..4 {
            assert!(inst.parts[i].contains(&q[i]));
            for j in i + 1..4 {
                assert!(!inst.graph.has_edge(q[i], q[j]));
            }
        }
    }
    let bad = FourPartiteInstance::new(inst.graph.clone(), [vec![0], vec![0], vec![], vec![]]);
    assert!(bad.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seeded_generators_are_deterministic(n in 4usize..40, seed in any::<u64>()) {
        prop_assert_eq!(gen_gnp(n, 0.2, seed), gen_gnp(n, 0.2, seed));
        prop_assert_eq!(gen_random_tree(n, seed), gen_random_tree(n, seed));
        prop_assert_eq!(gen_tree_plus_edges(n, 3, seed), gen_tree_plus_edges(n, 3, seed));
        prop_assert_eq!(gen_random_cograph(n, seed), gen_random_cograph(n, seed));
        let c = gen_random_cograph(n, seed);
        prop_assert_eq!(plant_p4s(&c, 2, seed), plant_p4s(&c, 2, seed));
        let ov = OvInstance::random(3, 4, 0.5, seed);
        prop_assert_eq!(gen_ov_graph(&ov).unwrap(), gen_ov_graph(&OvInstance::random(3, 4, 0.5, seed)).unwrap());
        let fp = FourPartiteInstance::random([2, 2, 2, 2], 0.4, seed);
        prop_assert_eq!(&fp.graph, &FourPartiteInstance::random([2, 2, 2, 2], 0.4, seed).graph);
        prop_assert_eq!(gen_4is_graph(&fp).unwrap().graph, gen_4is_graph(&fp).unwrap().graph);
        prop_assert_eq!(solve_4is_bruteforce(&fp), find_colored_independent_set(&fp).is_some());
    }

    #[test]
    fn random_cographs_are_cographs(n in 1usize..40, seed in any::<u64>()) {
        let g = gen_random_cograph(n, seed);
        prop_assert!(matches!(cograph_recognize(&g), hyperbolicity::cograph::Recognition::Cograph(_)));
    }

    #[test]
    fn theta_and_subdivision_sizes(lens in proptest::collection::vec(2usize..8, 1..6), f in 1usize..4) {
        let g = gen_theta(&lens);
        let inner: usize = lens.iter().map(|l| l - 1).sum();
        prop_assert_eq!(g.n(), 2 + inner);
        prop_assert_eq!(g.m(), lens.iter().sum::<usize>());
        let s = gen_subdivided(&g, f);
        prop_assert_eq!(s.m(), f * g.m());
        prop_assert_eq!(s.n(), g.n() + (f - 1) * g.m());
    }
}
