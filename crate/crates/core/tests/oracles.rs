mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use tpkit::complex::{enumerate_induced_cycles, link_of, Graph, LinkEdge, LinkGraph, Provenance};
use tpkit::curvature::{shortest_link_loop, vertex_angle_sum};
use tpkit::locality::{enumerate_dwheels, enumerate_wheels, DwheelKind};
use tpkit::{subdivide, AngleWeight, CellComplex, SimplicialComplex2D};

fn sorted_triangles(x: &SimplicialComplex2D) -> BTreeSet<[usize; 3]> {
    x.triangles()
        .iter()
        .map(|t| {
            let mut t = *t;
            t.sort_unstable();
            t
        })
        .collect()
}

fn library_cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
    enumerate_induced_cycles(g, max_len)
        .into_iter()
        .map(|c| {
            let mut v = c.vertices().to_vec();
            v.sort_unstable();
            v
        })
        .collect()
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
}

#[test]
fn petersen_cycle_counts() {
    let g = petersen();
    let cycles = library_cycles(&g, 10);
    let by_len = |k: usize| cycles.iter().filter(|c| c.len() == k).count();
    assert_eq!((by_len(5), by_len(6)), (12, 10));
    assert_eq!(cycles, brute_induced_cycles(&g, 10));
}

#[test]
fn subdivision_matches_hand_construction() {
    for inst in corpus() {
        let x = &inst.x;
        let ours = subdivide(x).unwrap();
        let theirs = raw_star(x.vertex_count(), x.triangles(), x.pentagons());
        assert_eq!(sorted_triangles(&ours), sorted_triangles(&theirs), "{}", inst.name);
        assert_eq!(ours.center_of(), theirs.center_of(), "{}", inst.name);
    }
}

#[test]
fn quoted_angle_sums() {
    for c in angle_cases() {
        let expected = AngleWeight::from_pi_fraction(c.fraction.0, c.fraction.1).unwrap();
        assert_eq!(expected.units(), c.units, "{}", c.source);
        assert_eq!(vertex_angle_sum(&c.star(), 0).unwrap(), expected, "{} in the subdivision", c.source);
        if let Some(tp) = c.tp() {
            assert_eq!(vertex_angle_sum(&tp, 0).unwrap(), expected, "{} before subdividing", c.source);
        }
    }
}

#[test]
fn link_loops_on_configurations() {
    let mut stars: Vec<SimplicialComplex2D> = angle_cases().iter().map(|c| c.star()).collect();
    stars.extend(presets().iter().map(|p| subdivide(&p.x).unwrap()));
    for x in &stars {
        for v in 0..x.vertex_count() {
            let link = link_of(x, v).unwrap();
            assert_eq!(shortest_link_loop(&link).map(|l| l.weight.units()), brute_min_cycle_weight(&link));
        }
    }
}

#[test]
fn wheels_and_dwheels_on_configurations() {
    let mut stars = vec![adjacent_five_wheels(), five_six_wheels()];
    stars.extend(presets().iter().map(|p| subdivide(&p.x).unwrap()));
    for x in &stars {
        compare_wheels(x);
        compare_dwheels(x, 12);
    }
}

fn compare_wheels(x: &SimplicialComplex2D) {
    let ours: BTreeSet<(usize, BTreeSet<usize>)> = enumerate_wheels(x, x.vertex_count())
        .unwrap()
        .into_iter()
        .map(|w| (w.hub, w.rim.vertices().iter().copied().collect()))
        .collect();
    let theirs: BTreeSet<_> = brute_wheels(x).into_iter().collect();
    assert_eq!(ours, theirs);
}

fn compare_dwheels(x: &SimplicialComplex2D, bound: usize) {
    let ours: BTreeSet<_> = enumerate_dwheels(x, bound)
        .unwrap()
        .into_iter()
        .map(|d| {
            let r1: BTreeSet<usize> = d.wheel1.rim.vertices().iter().copied().collect();
            let r2: BTreeSet<usize> = d.wheel2.rim.vertices().iter().copied().collect();
            let (ra, rb) = if d.wheel1.hub < d.wheel2.hub { (r1, r2) } else { (r2, r1) };
            let key = (
                BTreeSet::from([d.wheel1.hub, d.wheel2.hub]),
                d.kind == DwheelKind::Planar,
                BTreeSet::from([d.v1, d.v3, d.w1]),
                d.boundary_length,
            );
            (key, ra, rb)
        })
        .collect();
    assert_eq!(ours, brute_dwheels(x, bound));
}

#[test]
fn adjacent_five_wheels_have_a_planar_dwheel() {
    let found = brute_dwheels(&adjacent_five_wheels(), 6);
    assert!(found.iter().any(|((hubs, planar, _, len), _, _)| *planar && *len == 6 && hubs == &BTreeSet::from([0, 7])));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (3..=max_n).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..3 * n)))
}

const WEIGHTS: [u32; 4] = [9, 10, 12, 18];

fn arb_link() -> impl Strategy<Value = LinkGraph> {
    (2usize..=9).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, 0..WEIGHTS.len()), 0..2 * n).prop_map(move |raw| {
            let mut edges: Vec<LinkEdge> = Vec::new();
            for (a, b, w) in raw {
                let (a, b) = (a.min(b), a.max(b));
                if a == b || edges.iter().any(|e| (e.a, e.b) == (a, b)) {
                    continue;
                }
                let weight = AngleWeight::from_units(WEIGHTS[w]);
                edges.push(LinkEdge { a, b, weight, provenance: Provenance::TriangleCorner });
            }
            edges.sort();
            LinkGraph { center: usize::MAX, nodes: (0..n).collect(), edges }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_cycles_match_subset_search((n, edges) in arb_graph(11)) {
        let g = Graph::from_edges(n, edges.into_iter().filter(|(a, b)| a != b));
        prop_assert_eq!(library_cycles(&g, n), brute_induced_cycles(&g, n));
        prop_assert_eq!(library_cycles(&g, 5), brute_induced_cycles(&g, 5));
    }

    #[test]
    fn shortest_loop_matches_exhaustive_search(link in arb_link()) {
        let ours = shortest_link_loop(&link);
        prop_assert_eq!(ours.as_ref().map(|l| l.weight.units()), brute_min_cycle_weight(&link));
        if let Some(l) = ours {
            let (g, _) = link.to_local_graph();
            let total: u32 = (0..l.nodes.len())
                .map(|i| {
                    let (a, b) = (l.nodes[i], l.nodes[(i + 1) % l.nodes.len()]);
                    assert!(g.has_edge(a, b));
                    link.edges.iter().find(|e| (e.a, e.b) == (a.min(b), a.max(b))).unwrap().weight.units()
                })
                .sum();
            prop_assert_eq!(total, l.weight.units());
        }
    }

    #[test]
    fn wheels_and_dwheels_match_on_flag_complexes((n, edges) in arb_graph(10)) {
        let x = clique_complex(n, &k4_free(n, &edges));
        prop_assert!(x.is_flag());
        compare_wheels(&x);
        compare_dwheels(&x, 2 * n);
    }
}
