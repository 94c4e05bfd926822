//! Exhaustive structural invariants over enumerated small graphs, checked
//! against the independent reference implementations in `common`.

mod common;

use common::*;
use middledom::families::{generate, FamilyKind, FamilySpec};
use middledom::graph::{Graph, DEFAULT_PATH_SEARCH_BUDGET};
use middledom::solvers::{gamma_middle_fast, maximum_matching};
use middledom::theorems::enumerate::{enumerate_graphs, graph_from_mask, total_masks};
use middledom::transforms::{corona_k1, join_empty, line_graph, middle_graph};
use rayon::prelude::*;

#[test]
fn distances_behave_on_all_connected_graphs_up_to_7() {
    for n in 1..=7usize {
        let failures: usize = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(4096)
            .map(|mask| {
                let g = graph_from_mask(n, mask as u64);
                if !g.is_connected() {
                    return 0;
                }
                let dist: Vec<Vec<usize>> = (0..n)
                    .map(|v| (0..n).map(|w| g.distance(v, w).unwrap().unwrap()).collect())
                    .collect();
                let mut bad = 0;
                for v in 0..n {
                    if dist[v][v] != 0 {
                        bad += 1;
                    }
                    for w in 0..n {
                        if dist[v][w] != dist[w][v] {
                            bad += 1;
                        }
                        for x in 0..n {
                            if dist[v][x] > dist[v][w] + dist[w][x] {
                                bad += 1;
                            }
                        }
                    }
                }
                bad
            })
            .sum();
        assert_eq!(failures, 0, "metric axioms failed at n={n}");
    }
}

#[test]
fn tree_iff_connected_with_n_minus_1_edges_up_to_6() {
    for n in 1..=6usize {
        for (_, g) in enumerate_graphs(n, false).unwrap() {
            assert_eq!(
                g.is_tree(),
                g.is_connected() && g.size() == n - 1,
                "on {g:?}"
            );
        }
    }
}

#[test]
fn components_partition_and_have_no_cross_edges_up_to_5() {
    for n in 1..=5usize {
        for (_, g) in enumerate_graphs(n, false).unwrap() {
            let comps = g.connected_components();
            let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>(), "not a partition on {g:?}");
            for e in g.edges() {
                let cu = comps.iter().position(|c| c.contains(&e.u()));
                let cv = comps.iter().position(|c| c.contains(&e.v()));
                assert_eq!(cu, cv, "cross-component edge on {g:?}");
            }
        }
    }
}

#[test]
fn middle_graph_order_size_identity_up_to_6() {
    for n in 1..=6usize {
        for (_, g) in enumerate_graphs(n, false).unwrap() {
            let mg = middle_graph(&g);
            let (lg, _) = line_graph(&g);
            assert_eq!(mg.graph().order(), g.order() + g.size());
            assert_eq!(mg.graph().size(), 2 * g.size() + lg.size());
            for e in mg.graph().edges() {
                assert!(
                    !(e.u() < n && e.v() < n),
                    "originals must stay independent on {g:?}"
                );
            }
        }
    }
}

#[test]
fn corona_and_join_degree_facts() {
    for n in 1..=5usize {
        for (_, g) in enumerate_graphs(n, false).unwrap() {
            let c = corona_k1(&g);
            assert_eq!(c.order(), 2 * n);
            assert_eq!(c.leaves().len(), {
                // Pendants are always leaves; an original is a leaf only if
                // it was isolated (degree 0 + 1 pendant).
                n + g.isolated_vertices().len()
            });
            for v in 0..n {
                assert_eq!(c.degree(v).unwrap(), g.degree(v).unwrap() + 1);
            }
            for p in 0..3 {
                let j = join_empty(&g, p);
                for w in n..n + p {
                    assert_eq!(j.degree(w).unwrap(), n);
                }
            }
        }
    }
}

#[test]
fn matching_agrees_with_bruteforce_exhaustively_up_to_7() {
    for n in 1..=7usize {
        let bad: usize = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(1024)
            .filter(|&mask| {
                let g = graph_from_mask(n, mask as u64);
                maximum_matching(&g).len() != max_matching_bruteforce(&g)
            })
            .count();
        assert_eq!(bad, 0, "matching mismatch at n={n}");
    }
}

#[test]
fn matching_agrees_with_bruteforce_on_a_slice_of_8() {
    for (n, stride) in [(8usize, 9973u64)] {
        let total = total_masks(n);
        let bad: usize = (0..(total / stride) as usize)
            .into_par_iter()
            .filter(|&i| {
                let g = graph_from_mask(n, i as u64 * stride);
                let m = maximum_matching(&g);
                let mut seen = vec![false; n];
                for e in m.edges() {
                    if seen[e.u()] || seen[e.v()] || !g.has_edge(e.u(), e.v()) {
                        return true;
                    }
                    seen[e.u()] = true;
                    seen[e.v()] = true;
                }
                m.len() != max_matching_bruteforce(&g)
            })
            .count();
        assert_eq!(bad, 0, "matching mismatch at n={n}");
    }
}

#[test]
fn monotone_vertex_deletion_up_to_6() {
    for n in 3..=6usize {
        let bad: usize = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(1024)
            .filter(|&mask| {
                let g = graph_from_mask(n, mask as u64);
                let gamma = gamma_middle_fast(&g).value;
                (0..n).any(|v| {
                    let down = gamma_middle_fast(&g.delete_vertex(v).unwrap()).value;
                    !(down <= gamma && gamma <= down + 1)
                })
            })
            .count();
        assert_eq!(bad, 0, "deletion sandwich failed at n={n}");
    }
}

#[test]
fn family_shapes_across_ranges() {
    let spec = |kind, params: &[usize]| FamilySpec::new(kind, params.to_vec());
    for n in 1..=12 {
        let g = generate(&spec(FamilyKind::Path, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (n, n - 1));
    }
    for n in 3..=12 {
        let g = generate(&spec(FamilyKind::Cycle, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (n, n));
    }
    for n in 1..=8 {
        let g = generate(&spec(FamilyKind::Star, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (n + 1, n));
        let g = generate(&spec(FamilyKind::DoubleStar, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (2 * n + 1, 2 * n));
    }
    for n in 3..=10 {
        let g = generate(&spec(FamilyKind::Wheel, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (n + 1, 2 * n));
    }
    for n in 1..=12 {
        let g = generate(&spec(FamilyKind::Complete, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (n, n * (n - 1) / 2));
    }
    for n1 in 1..=6 {
        for n2 in 1..=6 {
            let g = generate(&spec(FamilyKind::CompleteBipartite, &[n1, n2])).unwrap();
            assert_eq!((g.order(), g.size()), (n1 + n2, n1 * n2));
        }
    }
    for n in 1..=5 {
        let g = generate(&spec(FamilyKind::Friendship, &[n])).unwrap();
        assert_eq!((g.order(), g.size()), (2 * n + 1, 3 * n));
    }
}

#[test]
fn spanning_paths_in_the_ceil_half_families() {
    // Wheels, cycles, and complete graphs all carry spanning paths, which is
    // the independent route to their ceil(order/2) values.
    for n in 3..=12 {
        assert!(cycle(n).has_hamiltonian_path(DEFAULT_PATH_SEARCH_BUDGET).unwrap().is_some());
        assert!(complete(n).has_hamiltonian_path(DEFAULT_PATH_SEARCH_BUDGET).unwrap().is_some());
    }
    for n in 3..=10 {
        let w = generate(&FamilySpec::new(FamilyKind::Wheel, vec![n])).unwrap();
        assert!(w.has_hamiltonian_path(DEFAULT_PATH_SEARCH_BUDGET).unwrap().is_some());
    }
    assert!(star(3).has_hamiltonian_path(DEFAULT_PATH_SEARCH_BUDGET).unwrap().is_none());
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_graphs(2, false).unwrap().count(), 2);
    assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
    assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
}

#[test]
fn corona_of_k2_is_a_path() {
    assert!(is_isomorphic_small(&corona_k1(&path(2)), &path(4)));
    assert!(!is_isomorphic_small(&corona_k1(&path(2)), &star(3)));
}

#[test]
fn induced_p5_on_alternating_vertices_is_empty() {
    let sub = path(5).induced_subgraph(&[0, 2, 4]).unwrap();
    assert_eq!(sub.graph, Graph::empty(3));
}

#[test]
fn family_edge_lists_round_trip() {
    use middledom::io::{parse_edge_list, to_edge_list};
    let mut specs = Vec::new();
    for n in 1..=12 {
        specs.push(FamilySpec::new(FamilyKind::Path, vec![n]));
        specs.push(FamilySpec::new(FamilyKind::Complete, vec![n]));
    }
    for n in 3..=12 {
        specs.push(FamilySpec::new(FamilyKind::Cycle, vec![n]));
    }
    for n in 1..=8 {
        specs.push(FamilySpec::new(FamilyKind::Star, vec![n]));
        specs.push(FamilySpec::new(FamilyKind::DoubleStar, vec![n]));
    }
    for n in 3..=10 {
        specs.push(FamilySpec::new(FamilyKind::Wheel, vec![n]));
    }
    for n1 in 1..=6 {
        for n2 in 1..=6 {
            specs.push(FamilySpec::new(FamilyKind::CompleteBipartite, vec![n1, n2]));
        }
    }
    for n in 1..=5 {
        specs.push(FamilySpec::new(FamilyKind::Friendship, vec![n]));
    }
    for s in specs {
        let g = generate(&s).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g, "round trip of {s}");
        let mg = middle_graph(&g);
        assert_eq!(
            parse_edge_list(&middledom::io::middle_to_edge_list(&mg)).unwrap(),
            *mg.graph(),
            "middle round trip of {s}"
        );
    }
}
