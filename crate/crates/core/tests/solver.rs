use std::collections::BTreeSet;

use vertex_position::census::connected_up_to;
use vertex_position::distance::DistanceMatrix;
use vertex_position::format::parse_graph6;
use vertex_position::generators::{complete_multipartite, cycle, gnp, kneser, random_tree, FamilySpec};
use vertex_position::metrics::{boundary, leaves};
use vertex_position::oracle::{oracle_px, oracle_px_exhaustive, OracleBudget};
use vertex_position::solver::{
    geodesic_order, geodesic_order_by_distances, max_antichain, queue_construction_edges, reduced_graph, solve_all_with,
    solve_px, SolveOptions,
};
use vertex_position::{verify_position_set, Graph};

fn sample_graphs() -> Vec<Graph> {
    let mut gs = connected_up_to(6).unwrap();
    gs.extend((0..40).map(|s| gnp(9 + (s % 4) as usize, 0.35, s)));
    gs.extend((0..10).map(|s| gnp(10, 0.15, 100 + s)));
    gs
}

#[test]
fn three_order_constructions_agree() {
    for g in sample_graphs() {
        let dm = DistanceMatrix::new(&g);
        for x in 0..g.n() {
            let order = geodesic_order(&g, x).unwrap();
            let relations: BTreeSet<_> = order.relations().collect();
            assert_eq!(relations, geodesic_order_by_distances(&g, x, &dm).unwrap(), "{g:?} x = {x}");
            assert_eq!(order.comparability_edges(), queue_construction_edges(&g, x).unwrap(), "{g:?} x = {x}");
        }
    }
}

#[test]
fn solver_matches_oracles() {
    let budget = OracleBudget::default();
    for g in sample_graphs() {
        let s = solve_all_with(&g, SolveOptions::audited()).unwrap();
        for x in 0..g.n() {
            let r = &s.per_vertex[x];
            assert!(verify_position_set(&g, x, &r.witness));
            assert_eq!(r.value, oracle_px(&g, x, &budget).unwrap().value, "x = {x}");
            if g.n() <= 9 {
                assert_eq!(r.value, oracle_px_exhaustive(&g, x).unwrap());
            }
        }
    }
}

#[test]
fn reduced_graph_has_same_values() {
    for s in 0..20 {
        let g = gnp(11, 0.3, s);
        for x in 0..g.n() {
            let h = reduced_graph(&g, x).unwrap();
            assert!(h.m() <= g.m());
            assert_eq!(solve_px(&h, x).unwrap().value, solve_px(&g, x).unwrap().value);
        }
    }
}

#[test]
fn antichain_plus_matching_covers_ground() {
    for s in 0..20 {
        let g = gnp(30, 0.12, s);
        for x in 0..g.n() {
            let order = geodesic_order(&g, x).unwrap();
            let a = max_antichain(&order);
            assert_eq!(a.vertices.len() + a.matching_size, a.ground_size);
            assert_eq!(a.ground_size + 1, order.component_size());
        }
    }
}

#[test]
fn c6_order_and_value() {
    let g = cycle(6);
    let order = geodesic_order(&g, 0).unwrap();
    assert!(order.less(1, 2) && order.less(1, 3) && order.less(2, 3));
    assert!(!order.comparable(1, 5) && !order.comparable(2, 4));
    assert_eq!(solve_px(&g, 0).unwrap().value, 2);
    assert!(verify_position_set(&g, 0, &[2, 4]));
    assert!(!verify_position_set(&g, 0, &[1, 3]));
}

#[test]
fn star_leaf_root() {
    let star = complete_multipartite(&[1, 4]);
    assert_eq!(solve_px(&star, 1).unwrap().value, 3);
    assert_eq!(solve_px(&star, 0).unwrap().value, 4);
}

#[test]
fn trees_follow_leaf_count() {
    for s in 0..30 {
        let t = random_tree(25, s);
        let l = leaves(&t);
        let s = solve_all_with(&t, SolveOptions::audited()).unwrap();
        for x in 0..t.n() {
            let want = if l.contains(&x) { l.len() - 1 } else { l.len() };
            assert_eq!(s.per_vertex[x].value, want);
        }
    }
}

#[test]
fn table1_fixture() {
    let lg = FamilySpec::Table1.generate().unwrap();
    assert_eq!(lg.graph.n(), 13);
    for (label, want) in [("x", 4), ("c1", 8), ("b1", 11), ("a1", 7)] {
        let x = lg.vertex(label).unwrap();
        assert_eq!(solve_px(&lg.graph, x).unwrap().value, want, "{label}");
    }
    let x = lg.vertex("x").unwrap();
    let order = geodesic_order(&lg.graph, x).unwrap();
    let cs: Vec<usize> = (1..=4).map(|i| lg.vertex(&format!("c{i}")).unwrap()).collect();
    for &a in &cs {
        for &b in &cs {
            assert!(!order.comparable(a, b));
        }
    }
}

#[test]
fn boundary_fixture_is_maximum() {
    let lg = FamilySpec::BoundaryTight.generate().unwrap();
    let x = lg.vertex("x").unwrap();
    let b = boundary(&lg.graph, x);
    assert_eq!(b.len(), 3);
    assert!(verify_position_set(&lg.graph, x, &b));
    assert_eq!(solve_px(&lg.graph, x).unwrap().value, 3);
}

#[test]
fn disconnected_inputs() {
    let g = parse_graph6(b"E?Bw").unwrap();
    let s = solve_all_with(&g, SolveOptions::audited()).unwrap();
    let budget = OracleBudget::default();
    for x in 0..g.n() {
        assert_eq!(s.per_vertex[x].value, oracle_px(&g, x, &budget).unwrap().value);
    }
}

#[test]
fn kneser_and_petersen() {
    let p = kneser(5, 2).graph;
    let s = solve_all_with(&p, SolveOptions::audited()).unwrap();
    assert_eq!((s.vp, s.vp_minus), (6, 6));
    let k = kneser(10, 2).graph;
    assert_eq!(solve_px(&k, 0).unwrap().value, 28);
}

#[test]
fn witnesses_are_sets() {
    let g = gnp(40, 0.1, 9);
    for r in solve_all_with(&g, SolveOptions::default()).unwrap().per_vertex {
        let set: BTreeSet<_> = r.witness.iter().collect();
        assert_eq!(set.len(), r.witness.len());
        assert_eq!(set.len(), r.value);
        assert_eq!(set.contains(&r.root), g.degree(r.root) == 0);
    }
}
