//! Acceptance suite: exact worked values, exhaustive formula/solver/oracle
//! agreement, the matching identity against brute force, full certification,
//! sharpness exhibits, and the normalization contract. One test per
//! criterion; each prints a pass line with its runtime.

mod common;

use std::time::Instant;

use common::*;
use middledom::families::{
    family_gamma_result, formula_gamma_middle, generate, FamilyKind, FamilySpec, FormulaQuery,
};
use middledom::graph::Graph;
use middledom::solvers::{
    edge_cover_number, gamma_middle_fast, gamma_middle_oracle, gamma_oracle, is_dominating_set,
    maximum_matching, normalize_to_edge_set, GammaResult, SolverError,
};
use middledom::theorems::{certify, sharpness_exhibits, CertifyOptions};
use middledom::theorems::enumerate::{graph_from_mask, total_masks};
use middledom::transforms::{join_empty, middle_graph, MiddleGraph};
use rayon::prelude::*;

const BUDGET: u64 = 100_000_000;

fn spec(kind: FamilyKind, params: &[usize]) -> FamilySpec {
    FamilySpec::new(kind, params.to_vec())
}

/// Witness validity: required for every result the suite produces.
fn assert_valid_middle_result(g: &Graph, mg: &MiddleGraph, res: &GammaResult) {
    assert_eq!(res.witness.len(), res.value, "witness size != value on {g:?}");
    assert!(
        is_dominating_set(mg.graph(), &res.witness).unwrap(),
        "witness does not dominate M(G) for {g:?}"
    );
}

fn gamma_both_routes(g: &Graph) -> usize {
    let mg = middle_graph(g);
    let fast = gamma_middle_fast(g);
    let oracle = gamma_middle_oracle(&mg, BUDGET).unwrap();
    assert_valid_middle_result(g, &mg, &fast);
    assert_valid_middle_result(g, &mg, &oracle);
    assert_eq!(fast.value, oracle.value, "route disagreement on {g:?}");
    fast.value
}

#[test]
fn criterion_1_worked_values() {
    let t = Instant::now();

    let c4 = cycle(4);
    assert_eq!(gamma_both_routes(&c4), 2);

    // Complement pair of C_4: sum and product both 4, meeting all four
    // bounds at n = 4.
    let gamma_c4 = gamma_middle_fast(&c4).value;
    let gamma_comp = gamma_both_routes(&c4.complement());
    assert_eq!(gamma_c4 + gamma_comp, 4);
    assert_eq!(gamma_c4 * gamma_comp, 4);

    assert_eq!(gamma_both_routes(&path(5)), 3);
    assert_eq!(gamma_both_routes(&join_empty(&c4, 2)), 3);
    assert_eq!(gamma_both_routes(&join_empty(&c4, 3)), 4);

    // Five-vertex tree with a degree-3 branch vertex: value 3 - and it has
    // no spanning path, so the ceil(n/2) value is not via that route.
    let tree = Graph::build(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
    assert_eq!(gamma_both_routes(&tree), 3);
    assert_eq!(tree.has_hamiltonian_path(1_000_000).unwrap(), None);

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 1, "criterion 1 took {elapsed:?}");
    println!("criterion 1 PASS: worked values reproduced exactly ({elapsed:?})");
}

#[test]
fn criterion_2_family_formula_suite() {
    let t = Instant::now();
    let mut checked = 0usize;

    let mut check = |s: FamilySpec| {
        let (g, formula_res) = family_gamma_result(&s).unwrap();
        let formula = formula_res.value;
        assert_eq!(
            formula,
            formula_gamma_middle(&FormulaQuery::Family(s.clone())).unwrap()
        );
        let mg = middle_graph(&g);
        assert_valid_middle_result(&g, &mg, &formula_res);
        let fast = gamma_middle_fast(&g);
        assert_valid_middle_result(&g, &mg, &fast);
        assert_eq!(formula, fast.value, "formula vs fast path on {s}");
        if mg.graph().order() <= 30 {
            let oracle = gamma_middle_oracle(&mg, BUDGET).unwrap();
            assert_valid_middle_result(&g, &mg, &oracle);
            assert_eq!(formula, oracle.value, "formula vs oracle on {s}");
        }
        checked += 1;
    };

    for n in 2..=12 {
        check(spec(FamilyKind::Path, &[n]));
        check(spec(FamilyKind::Complete, &[n]));
    }
    for n in 3..=12 {
        check(spec(FamilyKind::Cycle, &[n]));
    }
    for n in 1..=8 {
        check(spec(FamilyKind::Star, &[n]));
    }
    for n in 2..=8 {
        check(spec(FamilyKind::DoubleStar, &[n]));
    }
    for n1 in 1..=6 {
        for n2 in n1..=6 {
            check(spec(FamilyKind::CompleteBipartite, &[n1, n2]));
        }
    }
    for n in 2..=5 {
        check(spec(FamilyKind::Friendship, &[n]));
    }

    // Wheels under both indexing conventions. Writing the wheel by its rim r
    // gives order r+1 and value ceil((r+1)/2); writing it by its order N
    // uses a rim of N-1 and gives ceil(N/2). Both reduce to ceil(order/2).
    for rim in 3..=8usize {
        check(spec(FamilyKind::Wheel, &[rim]));
    }
    for order in 4..=8usize {
        let g = generate(&spec(FamilyKind::Wheel, &[order - 1])).unwrap();
        assert_eq!(g.order(), order);
        assert_eq!(gamma_both_routes(&g), order.div_ceil(2));
        checked += 1;
    }

    // Join closed forms against the solver: stars with any empty-side size,
    // and the four spanning-path families below the threshold.
    for n in 1..=5usize {
        for p in 0..=7usize {
            let formula = formula_gamma_middle(&FormulaQuery::StarJoin { n, p }).unwrap();
            let joined = join_empty(&star(n), p);
            assert_eq!(formula, gamma_middle_fast(&joined).value, "star join n={n} p={p}");
            if joined.order() + joined.size() <= 30 {
                assert_eq!(formula, gamma_both_routes(&joined), "star join oracle n={n} p={p}");
            }
            checked += 1;
        }
    }
    for kind in [FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Wheel, FamilyKind::Complete] {
        for n in 3..=6usize {
            let base = generate(&spec(kind, &[n])).unwrap();
            for p in 0..base.order() {
                let formula =
                    formula_gamma_middle(&FormulaQuery::FamilyJoin { kind, n, p }).unwrap();
                let direct = gamma_middle_fast(&join_empty(&base, p)).value;
                assert_eq!(formula, direct, "{kind:?} join n={n} p={p}");
                checked += 1;
            }
        }
    }

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 120, "criterion 2 took {elapsed:?}");
    println!("criterion 2 PASS: {checked} family instances agree across routes ({elapsed:?})");
}

#[test]
fn criterion_3_oracle_fast_path_equivalence() {
    let t = Instant::now();

    // Every labeled graph on at most 5 vertices.
    let mut small_total = 0u64;
    for n in 1..=5usize {
        let mismatches: u64 = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(64)
            .map(|mask| {
                let g = graph_from_mask(n, mask as u64);
                let mg = middle_graph(&g);
                let fast = gamma_middle_fast(&g);
                let oracle = gamma_middle_oracle(&mg, BUDGET).unwrap();
                assert_valid_middle_result(&g, &mg, &fast);
                assert_valid_middle_result(&g, &mg, &oracle);
                u64::from(fast.value != oracle.value)
            })
            .sum();
        assert_eq!(mismatches, 0, "fast/oracle mismatch at n={n}");
        small_total += total_masks(n);
    }

    // Deterministic 10,000-graph slice of n = 6: an evenly spaced sweep of
    // the 2^15 masks.
    let slice: Vec<u64> = (0..10_000u64).map(|i| i * 32_768 / 10_000).collect();
    assert_eq!(slice.len(), 10_000);
    let mismatches: u64 = slice
        .par_iter()
        .map(|&mask| {
            let g = graph_from_mask(6, mask);
            let mg = middle_graph(&g);
            let fast = gamma_middle_fast(&g);
            let oracle = gamma_middle_oracle(&mg, BUDGET).unwrap();
            assert_valid_middle_result(&g, &mg, &fast);
            assert_valid_middle_result(&g, &mg, &oracle);
            u64::from(fast.value != oracle.value)
        })
        .sum();
    assert_eq!(mismatches, 0, "fast/oracle mismatch in the n=6 slice");

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 300, "criterion 3 took {elapsed:?}");
    println!(
        "criterion 3 PASS: fast path = oracle on {small_total} graphs (n ≤ 5) + 10000-graph n=6 slice ({elapsed:?})"
    );
}

#[test]
fn criterion_4_matching_identity_against_bruteforce() {
    let t = Instant::now();
    let mut tested_total = 0u64;

    for n in 1..=7usize {
        let (tested, mismatches) = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(2048)
            .map(|mask| {
                let g = graph_from_mask(n, mask as u64);
                if !g.isolated_vertices().is_empty() {
                    return (0u64, 0u64);
                }
                let nu = maximum_matching(&g).len();
                let via_matching = n - nu;
                let brute = min_edge_cover_bruteforce(&g).expect("no isolated vertices");
                let (rho, cover) = edge_cover_number(&g).unwrap();
                let fast = gamma_middle_fast(&g).value;
                let ok = via_matching == brute
                    && rho == brute
                    && fast == brute
                    && cover.len() == rho;
                (1u64, u64::from(!ok))
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        assert_eq!(mismatches, 0, "edge-cover identity mismatch at n={n}");
        tested_total += tested;
    }

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 600, "criterion 4 took {elapsed:?}");
    println!(
        "criterion 4 PASS: n − ν = brute-force ρ = fast path on {tested_total} graphs without isolated vertices, n ≤ 7 ({elapsed:?})"
    );
}

#[test]
fn criterion_5_full_certification() {
    let t = Instant::now();
    let report = certify(&CertifyOptions { n_max: 6, ..CertifyOptions::default() }).unwrap();
    assert_eq!(report.graphs_considered, 1 + 2 + 8 + 64 + 1024 + 32768);
    for p in &report.predicates {
        assert!(
            p.violations.is_empty(),
            "{} violated on {:?}",
            p.id,
            p.violations.first().map(|v| (&v.graph, &v.detail))
        );
    }
    assert_eq!(report.total_violations(), 0);
    assert_eq!(report.exit_code(), 0);

    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 900, "criterion 5 took {elapsed:?}");
    println!(
        "criterion 5 PASS: certify over n ≤ 6 with {} checks, zero violations ({elapsed:?})",
        report.predicates.len()
    );
}

#[test]
fn criterion_6_sharpness_witnesses() {
    let t = Instant::now();

    // Named exhibits, computed fresh.
    let exhibits = sharpness_exhibits();
    for e in &exhibits {
        assert!(e.attained, "{} missed: value {} vs bound {}", e.description, e.value, e.bound);
    }
    for label in [
        "tree-lower",
        "tree-upper",
        "join-lower",
        "join-upper",
        "ng-sum-lower",
        "ng-sum-upper",
        "ng-product-lower",
        "ng-product-upper",
    ] {
        assert!(exhibits.iter().any(|e| e.label == label), "missing exhibit {label}");
    }

    // The certification report also carries enumeration-found equality
    // witnesses for the bound predicates.
    let report = certify(&CertifyOptions { n_max: 4, ..CertifyOptions::default() }).unwrap();
    let sides = |id: &str| -> Vec<String> {
        report
            .predicates
            .iter()
            .find(|p| p.id == id)
            .unwrap()
            .sharpness
            .iter()
            .map(|s| s.side.clone())
            .collect()
    };
    for side in ["lower", "upper"] {
        assert!(sides("tree-bounds").iter().any(|s| s == side));
        assert!(sides("general-bounds").iter().any(|s| s == side));
        assert!(sides("join-small-p").iter().any(|s| s == side));
    }
    for side in ["sum-lower", "sum-upper", "product-lower", "product-upper"] {
        assert!(sides("nordhaus-gaddum").iter().any(|s| s == side));
    }

    // The worked complement-pair families, at a few orders each.
    for n in 2..=8usize {
        let half = n.div_ceil(2);
        let (s, sc) = (
            gamma_middle_fast(&star(n)).value,
            gamma_middle_fast(&star(n).complement()).value,
        );
        assert_eq!((s + sc, s * sc), (n + half + 1, n * (half + 1)), "star pair at n={n}");
        let (k, kc) = (
            gamma_middle_fast(&complete(n)).value,
            gamma_middle_fast(&complete(n).complement()).value,
        );
        assert_eq!((k + kc, k * kc), (half + n, n * half), "complete pair at n={n}");
    }
    for n in 4..=10usize {
        let half = n.div_ceil(2);
        let (p, pc) = (
            gamma_middle_fast(&path(n)).value,
            gamma_middle_fast(&path(n).complement()).value,
        );
        assert_eq!((p + pc, p * pc), (2 * half, half * half), "path pair at n={n}");
    }

    let elapsed = t.elapsed();
    println!("criterion 6 PASS: all sharpness witnesses attained ({elapsed:?})");
}

#[test]
fn criterion_7_normalization_and_witness_contracts() {
    let t = Instant::now();
    let mut graphs = 0u64;
    let mut sets = 0u64;

    for n in 2..=5usize {
        let (g_count, s_count) = (0..total_masks(n) as usize)
            .into_par_iter()
            .with_min_len(16)
            .map(|mask| {
                let g = graph_from_mask(n, mask as u64);
                let mg = middle_graph(&g);
                if !g.isolated_vertices().is_empty() {
                    // Out of contract: must refuse, naming an isolated vertex.
                    let originals: Vec<usize> = (0..n).collect();
                    assert!(matches!(
                        normalize_to_edge_set(&mg, &originals),
                        Err(SolverError::IsolatedVertex(_))
                    ));
                    return (0u64, 0u64);
                }
                let mut local = 0u64;
                for s in minimal_dominating_sets(mg.graph()) {
                    let out = normalize_to_edge_set(&mg, &s).unwrap();
                    assert!(out.len() <= s.len(), "grew on {g:?} from {s:?}");
                    assert!(out.iter().all(|&v| mg.is_edge_vertex(v)), "non-edge vertex kept");
                    assert!(is_dominating_set(mg.graph(), &out).unwrap());
                    local += 1;
                }
                // Non-dominating inputs are rejected.
                if n >= 2 {
                    assert!(matches!(
                        normalize_to_edge_set(&mg, &[]),
                        Err(SolverError::NotDominating)
                    ));
                }
                (1u64, local)
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        graphs += g_count;
        sets += s_count;
    }

    // Witness validity for the general oracle route as well.
    for n in 1..=5usize {
        for mask in 0..total_masks(n) {
            let g = graph_from_mask(n, mask);
            let res = gamma_oracle(&g, BUDGET).unwrap();
            assert_eq!(res.witness.len(), res.value);
            assert!(is_dominating_set(&g, &res.witness).unwrap());
        }
    }

    let elapsed = t.elapsed();
    println!(
        "criterion 7 PASS: normalization contract on {sets} minimal dominating sets across {graphs} graphs ({elapsed:?})"
    );
}
