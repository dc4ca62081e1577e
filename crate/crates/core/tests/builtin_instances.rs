use udgds_core::algorithms::{
    adversarial_search, enumerate_coronas, find_reduction_core, find_weak_reduction,
    reduce44_geometric, reduce44_graph, sole_dominated, weak43,
};
use udgds_core::instances::{paper_instance, PaperInstance};
use udgds_core::oracle::{exact_min_dominating_set, DEFAULT_BUDGET};
use udgds_core::spatial::build_adjacency;
use udgds_core::{is_independent, OrderPolicy, Ranking, SolveOptions};

const R_STAR: usize = 0;
const CORES: [usize; 4] = [1, 2, 3, 4];
const WITNESSES: [usize; 4] = [5, 6, 7, 8];

#[test]
fn fig4_reliever_structure() {
    let g = build_adjacency(&paper_instance(PaperInstance::Fig4));
    for (&c, &w) in CORES.iter().zip(&WITNESSES) {
        let nbrs: Vec<usize> = g.neighbors(c).to_vec();
        assert_eq!(nbrs.len(), 5, "core {c}");
        let set = udgds_core::VertexSet::new(g.n(), nbrs).unwrap();
        assert!(is_independent(&g, &set).unwrap(), "core {c}");
        assert!(g.is_adjacent(R_STAR, w));
        assert!(!g.is_adjacent(c, w));
    }
}

#[test]
fn fig4_optimum_is_five() {
    let g = build_adjacency(&paper_instance(PaperInstance::Fig4));
    assert!(exact_min_dominating_set(&g, 4, DEFAULT_BUDGET)
        .unwrap()
        .is_none());
    assert_eq!(
        exact_min_dominating_set(&g, 5, DEFAULT_BUDGET)
            .unwrap()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn fig6_optimum_is_eight() {
    let g = build_adjacency(&paper_instance(PaperInstance::Fig6));
    assert!(exact_min_dominating_set(&g, 7, DEFAULT_BUDGET)
        .unwrap()
        .is_none());
    assert_eq!(
        exact_min_dominating_set(&g, 8, DEFAULT_BUDGET)
            .unwrap()
            .unwrap()
            .len(),
        8
    );
}

#[test]
fn fig4_worst_order_reaches_24_and_is_irreducible() {
    let inst = paper_instance(PaperInstance::Fig4);
    let g = build_adjacency(&inst);
    let out = adversarial_search(g.n(), 10_000, 0, Some(24), |order| {
        reduce44_graph(&g, &SolveOptions::with_order(order.clone()))
    })
    .unwrap();
    assert_eq!(out.worst.len(), 24);
    let d = &out.worst.set;
    let coronas = enumerate_coronas(&g, d).unwrap();
    assert!(coronas
        .iter()
        .all(|c| find_reduction_core(&g, d, c).is_none()));
    let stuck: Vec<_> = coronas
        .iter()
        .filter(|c| CORES.iter().any(|k| c.cores.contains(k)))
        .collect();
    assert_eq!(stuck.len(), 4);
    // each w_i is dominated only by petals of c*_i's corona and misses c*_i
    for (&c, &w) in CORES.iter().zip(&WITNESSES) {
        let corona = stuck.iter().find(|k| k.cores == [c]).unwrap();
        assert!(!d.contains(w));
        assert!(sole_dominated(&g, d, corona).contains(&w));
        assert!(!g.is_adjacent(c, w));
    }

    // the geometric variant on the same order agrees
    let geo = reduce44_geometric(
        &inst,
        &SolveOptions::with_order(OrderPolicy::Explicit(out.worst_order)),
    )
    .unwrap();
    assert_eq!(geo.len(), 24);
}

#[test]
fn fig6_worst_order_reaches_34() {
    let g = build_adjacency(&paper_instance(PaperInstance::Fig6));
    let out = adversarial_search(g.n(), 10_000, 0, Some(34), |order| {
        weak43(&g, &SolveOptions::with_order(order.clone()))
    })
    .unwrap();
    assert_eq!(out.worst.len(), 34);
    let d = &out.worst.set;
    let ranking = Ranking::from_order(&out.worst_order);
    for c in enumerate_coronas(&g, d).unwrap() {
        assert!(find_weak_reduction(&g, d, &c, &ranking).is_none());
    }
}

#[test]
fn default_orders_respect_bounds() {
    let g4 = build_adjacency(&paper_instance(PaperInstance::Fig4));
    let g6 = build_adjacency(&paper_instance(PaperInstance::Fig6));
    for seed in 0..50 {
        let opts = SolveOptions {
            order: OrderPolicy::Seeded(seed),
            check_iterations: true,
        };
        assert!(reduce44_graph(&g4, &opts).unwrap().len() <= 24);
        assert!(9 * weak43(&g6, &opts).unwrap().len() <= 43 * 8);
    }
}
