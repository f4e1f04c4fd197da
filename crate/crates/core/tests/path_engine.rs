use hyperbolicity::generators::{gen_cycle, gen_gnp, gen_subdivided, gen_complete, gen_theta, gen_tree_plus_edges};
use hyperbolicity::ilp::{solve_with, Exact, IlpStatus};
use hyperbolicity::path_engine::{
    cycle_hyperbolicity_with, hyperbolicity_degree3, hyperbolicity_feedback_edge_with, hyperbolicity_via_path_cover,
    hyperbolicity_via_path_cover_with, EngineOptions,
};
use hyperbolicity::{brute_force_delta, Graph};
use proptest::prelude::*;

fn ilp_only() -> EngineOptions {
    EngineOptions { enumeration_limit: 0, ..Default::default() }
}

#[test]
fn cycles_closed_form_agrees() {
    for len in 4..=160 {
        let exhaustive = cycle_hyperbolicity_with(len, usize::MAX).0;
        let closed = cycle_hyperbolicity_with(len, 0).0;
        assert_eq!(exhaustive, closed, "C{len}");
        if len <= 24 {
            assert_eq!(brute_force_delta(&gen_cycle(len)).unwrap().delta, exhaustive, "C{len}");
        }
    }
}

#[test]
fn isolated_cycles_are_reported() {
    let g = gen_cycle(9).disjoint_union(&gen_theta(&[2, 2, 3]));
    let r = hyperbolicity_via_path_cover_with(&g, &EngineOptions::default());
    assert_eq!(r.stats.isolated_cycles, vec![9]);
    assert_eq!(r.result.delta, brute_force_delta(&g).unwrap().delta);
}

#[test]
fn subdivided_cliques() {
    for k in 4..=5 {
        for f in 1..=3 {
            let g = gen_subdivided(&gen_complete(k), f);
            let want = brute_force_delta(&g).unwrap().delta;
            let opts = if k == 4 { ilp_only() } else { EngineOptions::default() };
            assert_eq!(hyperbolicity_via_path_cover_with(&g, &opts).result.delta, want, "K{k} x{f}");
        }
    }
}

#[test]
fn feedback_edge_number_reported() {
    let g = gen_tree_plus_edges(30, 4, 8);
    let (r, _, k) = hyperbolicity_feedback_edge_with(&g, &EngineOptions::default());
    assert_eq!(k, 4);
    assert_eq!(r.delta, brute_force_delta(&g).unwrap().delta);
}

#[test]
fn exact_and_float_relaxations_agree() {
    let g = gen_theta(&[3, 4, 6, 7]);
    let opts = EngineOptions { enumeration_limit: 0, dump_ilp: true, ..Default::default() };
    let r = hyperbolicity_via_path_cover_with(&g, &opts);
    assert!(!r.models.is_empty());
    for case in &r.models {
        let a = solve_with::<Exact>(&case.model, None).unwrap();
        let b = solve_with::<f64>(&case.model, None).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.objective, b.objective);
        if a.status == IlpStatus::Optimal {
            assert!(case.model.is_feasible(&b.values));
        }
    }
}

fn check(g: &Graph) -> Result<(), TestCaseError> {
    let want = brute_force_delta(g).unwrap().delta;
    let r = hyperbolicity_via_path_cover(g);
    prop_assert_eq!(r.delta, want);
    prop_assert!(r.is_consistent(g));
    let r = hyperbolicity_degree3(g);
    prop_assert_eq!(r.delta, want);
    prop_assert!(r.is_consistent(g));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engine_matches_brute_force_gnp(n in 4usize..13, p in 0.1f64..0.45, seed in any::<u64>()) {
        check(&gen_gnp(n, p, seed))?;
    }

    #[test]
    fn ilp_path_matches_brute_force(n in 4usize..9, p in 0.2f64..0.5, seed in any::<u64>()) {
        let g = gen_gnp(n, p, seed);
        let r = hyperbolicity_via_path_cover_with(&g, &ilp_only()).result;
        prop_assert_eq!(r.delta, brute_force_delta(&g).unwrap().delta);
        prop_assert!(r.is_consistent(&g));
    }

    #[test]
    fn engine_matches_brute_force_sparse(n in 5usize..30, extra in 0usize..5, seed in any::<u64>()) {
        check(&gen_tree_plus_edges(n, extra, seed))?;
    }

    #[test]
    fn engine_matches_brute_force_theta(lens in proptest::collection::vec(1usize..7, 2..6)) {
        let mut lens = lens;
        // At most one direct edge.
        let ones = lens.iter().filter(|&&l| l == 1).count();
        if ones > 1 {
            lens.retain(|&l| l != 1);
            lens.push(1);
        }
        prop_assume!(lens.len() >= 2);
        check(&gen_theta(&lens))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn engine_ignores_labeling(n in 5usize..20, extra in 0usize..4, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = gen_tree_plus_edges(n, extra, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 1));
        let h = g.permuted(&perm);
        let a = hyperbolicity_via_path_cover(&g);
        let b = hyperbolicity_via_path_cover(&h);
        prop_assert_eq!(a.delta, b.delta);
        prop_assert!(b.is_consistent(&h));
    }
}
