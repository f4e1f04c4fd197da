use hyperbolicity::generators::{gen_complete_bipartite, gen_gnp, gen_star};
use hyperbolicity::vertex_cover::{approx_vertex_cover_2, hyperbolicity_vc, is_vertex_cover, kernelize_vc};
use hyperbolicity::{brute_force_delta, Graph};
use proptest::prelude::*;

fn min_cover(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| g.edges().all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

#[test]
fn complete_bipartite_kernel() {
    let g = gen_complete_bipartite(5, 5);
    let (kernel, report) = kernelize_vc(&g);
    assert_eq!(report.k, 10);
    assert_eq!(kernel.graph().n(), 8);
    assert!(report.bound_ok);
    assert_eq!(hyperbolicity_vc(&g).unwrap().delta, 2);
}

#[test]
fn star_collapses() {
    let g = gen_star(20);
    let (kernel, _) = kernelize_vc(&g);
    assert_eq!(kernel.graph().n(), 5);
    assert_eq!(hyperbolicity_vc(&g).unwrap().delta, 0);
}

#[test]
fn empty_graph() {
    let g = Graph::empty(6);
    assert!(approx_vertex_cover_2(&g).is_empty());
    assert_eq!(hyperbolicity_vc(&g).unwrap().delta, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn approximate_cover_within_factor_two(n in 2usize..14, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = gen_gnp(n, p, seed);
        let c = approx_vertex_cover_2(&g);
        prop_assert!(is_vertex_cover(&g, &c));
        prop_assert!(c.len() <= 2 * min_cover(&g));
    }

    #[test]
    fn kernel_preserves_delta(n in 4usize..14, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = gen_gnp(n, p, seed);
        let (kernel, report) = kernelize_vc(&g);
        prop_assert!(report.bound_ok);
        prop_assert_eq!(report.vertices, kernel.graph().n());
        let want = brute_force_delta(&g).unwrap().delta;
        prop_assert_eq!(brute_force_delta(kernel.graph()).unwrap().delta, want);
        let r = hyperbolicity_vc(&g).unwrap();
        prop_assert_eq!(r.delta, want);
        prop_assert!(r.is_consistent(&g));
    }
}
