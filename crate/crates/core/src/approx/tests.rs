use super::*;
use crate::gen::{gen_random, gen_random_undirected};
use crate::oracle::perm_opt;
use crate::error::Error;
use crate::report::within_factor;

fn path(n: usize) -> Digraph {
    Digraph::unweighted(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

fn two_cycles() -> Digraph {
    let arcs = [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 6), (6, 3)];
    Digraph::unweighted(6, arcs.map(|(u, v)| (u - 1, v - 1))).unwrap()
}

// two directed triangles joined by the arcs 6->2 and 6->3 (1-based), every
// other pair between the triangles pointing from the first to the second
fn triangles_one_way() -> Digraph {
    let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (5, 1), (5, 2)];
    for u in 0..3 {
        for v in 3..6 {
            if !arcs.contains(&(v, u)) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::unweighted(6, arcs).unwrap()
}

fn check(g: &Digraph, r: &ApproxReport, opt: Weight, label: &str) {
    assert_eq!(
        r.value(),
        r.report.objective.evaluate(g, &r.report.ordering),
        "{label}: value does not match ordering"
    );
    assert!(r.value() >= opt, "{label}: below optimum");
    assert!(r.lower_bound <= opt, "{label}: lower bound {} above opt {opt}", r.lower_bound);
    assert!(within_factor(r.value(), opt, r.factor), "{label}: {} vs {opt} at {}", r.value(), r.factor);
}

#[test]
fn paths_cost_nothing() {
    let g = path(7);
    assert_eq!(fas_balanced_approx(&g, CutMode::Exact).unwrap().value(), 0);
    assert_eq!(fas_balanced_approx(&g, CutMode::Rounded { eps: 1.0 }).unwrap().value(), 0);
    assert_eq!(cutwidth_balanced_approx(&g, CutMode::Exact).unwrap().value(), 0);
    assert_eq!(ola_directed_approx(&g, 0.5, false).unwrap().value(), 0);
    assert_eq!(ola_directed_approx(&g, 0.75, true).unwrap().value(), 0);
    assert_eq!(dpw_2approx(&g).unwrap().value(), 0);
    for eps in [1.0, 0.5, 0.34] {
        assert_eq!(fas_scheme(&g, eps, false, &SchemeConfig::default()).unwrap().value(), 0);
    }
    let edgeless = Digraph::undirected(6, []).unwrap();
    assert_eq!(ola_undirected_approx(&edgeless, 0.5, false).unwrap().value(), 0);
}

#[test]
fn single_back_arc_pathwidth() {
    let g = Digraph::unweighted(2, [(1, 0)]).unwrap();
    assert_eq!(dpw_2approx(&g).unwrap().value(), 0);
    let g = Digraph::unweighted(2, [(0, 1), (1, 0)]).unwrap();
    assert_eq!(dpw_2approx(&g).unwrap().value(), 1);
}

#[test]
fn two_cycle_graph_balanced_and_scheme() {
    let g = two_cycles();
    assert_eq!(perm_opt(&g, Objective::Fas).unwrap().opt, 1);
    let r = fas_balanced_approx(&g, CutMode::Exact).unwrap();
    assert!(r.value() <= 2);
    check(&g, &r, 1, "balanced");
    assert_eq!(r.cuts.len(), 1);
    assert_eq!(r.cuts[0].k, 3);
    assert_eq!(r.cuts[0].value, 1);

    let s = fas_scheme(&g, 0.5, false, &SchemeConfig::default()).unwrap();
    assert!(2 * s.value() <= 3);
    check(&g, &s, 1, "scheme");
}

#[test]
fn scheme_level_one_is_balanced() {
    let config = SchemeConfig::default();
    for seed in 0..20 {
        let g = gen_random(8, 0.4, 1..=1, seed);
        let a = fas_scheme(&g, 1.0, false, &config).unwrap();
        let b = fas_balanced_approx(&g, CutMode::Exact).unwrap();
        assert_eq!(a.report.ordering, b.report.ordering);
        assert_eq!(a.factor, b.factor);
        assert_eq!(scheme_level(1.5, false).unwrap(), 1);
    }
}

#[test]
fn scheme_levels_and_guard() {
    assert_eq!(scheme_level(0.5, false).unwrap(), 2);
    assert_eq!(scheme_level(1.0 / 3.0, false).unwrap(), 3);
    assert_eq!(scheme_level(0.5, true).unwrap(), 4);
    assert!(scheme_level(0.0, false).is_err());
    assert!(scheme_level(f64::NAN, false).is_err());
    let g = gen_random(20, 0.2, 1..=1, 3);
    let err = fas_scheme(&g, 0.25, false, &SchemeConfig::default()).unwrap_err();
    assert!(matches!(err, Error::TooLarge { .. }));
    let bad = SchemeConfig {
        alpha_override: Some(1.0),
        ..SchemeConfig::default()
    };
    assert!(fas_scheme(&path(4), 0.5, false, &bad).is_err());
}

#[test]
fn scheme_recursion_with_forced_prefix() {
    let config = SchemeConfig {
        alpha_override: Some(0.3),
        ..SchemeConfig::default()
    };
    for seed in 0..12 {
        let weighted = seed % 2 == 1;
        let w = if weighted { 1..=20 } else { 1..=1 };
        let g = gen_random(8, 0.45, w, seed);
        let opt = perm_opt(&g, Objective::Fas).unwrap().opt;
        for eps in [0.5, 1.0 / 3.0] {
            let r = fas_scheme(&g, eps, weighted, &config).unwrap();
            check(&g, &r, opt, "forced prefix");
            assert_eq!(r.trace[0].part_sizes, vec![2, 6]);
            assert!(r.report.stats.recursive_calls > 0);
            assert!(r.report.stats.table_entries > 0);
        }
    }
}

#[test]
fn scheme_never_worse_than_exact_split() {
    let config = SchemeConfig {
        alpha_override: Some(0.25),
        ..SchemeConfig::default()
    };
    for seed in 0..8 {
        let g = gen_random(8, 0.5, 1..=1, 100 + seed);
        let r = fas_scheme(&g, 0.5, false, &config).unwrap();
        // the exact split at the cheapest prefix is one of the candidates
        let m = 2;
        let adj = crate::subset_dp::Adjacency::new(&g);
        let cheapest = itertools::Itertools::combinations(0..8usize, m)
            .map(|c| c.into_iter().collect::<VertexSet>())
            .min_by_key(|&s| (adj.crossing(s), s.to_vec()))
            .unwrap();
        let (gp, _) = g.induced_set(cheapest);
        let (gr, _) = g.induced_set(cheapest.complement(8));
        let split = crate::subset_dp::fas_exact(&gp).unwrap().value
            + adj.crossing(cheapest)
            + crate::subset_dp::fas_exact(&gr).unwrap().value;
        assert!(r.value() <= split);
    }
}

#[test]
fn scheme_without_override_degenerates_to_exact() {
    let g = gen_random(8, 0.5, 1..=1, 9);
    let opt = perm_opt(&g, Objective::Fas).unwrap().opt;
    let r = fas_scheme(&g, 0.5, false, &SchemeConfig::default()).unwrap();
    assert_eq!(r.value(), opt);
    assert_eq!(r.ladder.len(), 1);
    assert!(r.trace[0].exact_rest);
}

#[test]
fn cutwidth_triangles() {
    use itertools::Itertools;
    let g = triangles_one_way();
    let opt = perm_opt(&g, Objective::Cutwidth).unwrap().opt;
    let r = cutwidth_balanced_approx(&g, CutMode::Exact).unwrap();
    check(&g, &r, opt, "triangles");
    assert!(r.value() <= 2 * opt);
    assert_eq!(r.cuts[0].value, 2);

    // every minimum 3-cut with every pair of optimal side orders: the joined
    // widths are not all the same
    let optimal_orders = |set: VertexSet| -> Vec<Vec<usize>> {
        let (h, map) = g.induced_set(set);
        let best = crate::subset_dp::cutwidth_exact(&h).unwrap().value;
        (0..h.n())
            .permutations(h.n())
            .filter(|p| crate::eval::cutwidth_of(&h, &Ordering::from_sequence(p.clone()).unwrap()) == best)
            .map(|p| map.lift(&p))
            .collect()
    };
    let mut widths = std::collections::BTreeSet::new();
    for c in (0..6).combinations(3) {
        let left: VertexSet = c.into_iter().collect();
        if crate::kcut::cut_value(&g, left) != 2 {
            continue;
        }
        for a in optimal_orders(left) {
            for b in optimal_orders(left.complement(6)) {
                let seq: Vec<usize> = a.iter().chain(&b).copied().collect();
                widths.insert(crate::eval::cutwidth_of(&g, &Ordering::from_sequence(seq).unwrap()));
            }
        }
    }
    assert_eq!(widths.into_iter().collect::<Vec<_>>(), vec![2, 3]);
}

#[test]
fn orientation_picks_shorter_side() {
    // edges 2-8 and 3-6 on positions 1..8, split after 4
    let g = Digraph::undirected(8, [(7, 1, 1), (5, 2, 1)]).unwrap();
    let left = [0, 1, 2, 3];
    let right = [4, 5, 6, 7];
    let o = choose_orientation(&g, &left, &right);
    assert!(o.reverse_right);
    assert!(!o.reverse_left, "ties keep the forward order");
    // left-side parts 2 + 1 either way; right-side parts 4 + 2 against 1 + 3
    assert_eq!(crossing_length(&g, &left, &right), 3 + 6);
    assert_eq!(crossing_length(&g, &left, &[7, 6, 5, 4]), 3 + 4);
    assert_eq!(crossing_length(&g, &[3, 2, 1, 0], &right), 3 + 6);
}

#[test]
fn orientation_minimises_over_four_combinations() {
    for seed in 0..40 {
        let g = gen_random_undirected(9, 0.4, 1..=5, seed);
        let left: Vec<usize> = (0..4).collect();
        let right: Vec<usize> = (4..9).collect();
        let o = choose_orientation(&g, &left, &right);
        let orient = |s: &[usize], r: bool| {
            let mut s = s.to_vec();
            if r {
                s.reverse();
            }
            s
        };
        let chosen = crossing_length(&g, &orient(&left, o.reverse_left), &orient(&right, o.reverse_right));
        for rl in [false, true] {
            for rr in [false, true] {
                assert!(chosen <= crossing_length(&g, &orient(&left, rl), &orient(&right, rr)));
            }
        }
    }
}

#[test]
fn undirected_rejects_directed_input() {
    let err = ola_undirected_approx(&path(4), 0.5, false).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)));
    assert!(ola_directed_approx(&path(4), 1.0, false).is_err());
    assert!(ola_directed_approx(&path(4), 0.0, false).is_err());
}

#[test]
fn small_inputs_fall_back_to_exact() {
    let g = Digraph::unweighted(2, [(0, 1), (1, 0)]).unwrap();
    for r in [
        fas_balanced_approx(&g, CutMode::Exact).unwrap(),
        ola_directed_approx(&g, 0.5, false).unwrap(),
        cutwidth_balanced_approx(&g, CutMode::Exact).unwrap(),
    ] {
        assert_eq!(r.factor, Factor::from_integer(1));
        assert_eq!(r.trace[0].level, 0);
        assert_eq!(r.value(), 1);
    }
    let empty = Digraph::unweighted(0, []).unwrap();
    assert_eq!(dpw_2approx(&empty).unwrap().value(), 0);
}

#[test]
fn ratios_against_oracle() {
    let mut seed = 0u64;
    for n in 5..=8 {
        for p in [0.3, 0.6] {
            for weighted in [false, true] {
                seed += 1;
                let w = if weighted { 1..=50 } else { 1..=1 };
                let g = gen_random(n, p, w.clone(), seed);
                let fas = perm_opt(&g, Objective::Fas).unwrap().opt;
                let cw = perm_opt(&g, Objective::Cutwidth).unwrap().opt;
                let ola = perm_opt(&g, Objective::Ola).unwrap().opt;
                let dpw = perm_opt(&g, Objective::Dpw).unwrap().opt;
                let mode = if weighted {
                    CutMode::Rounded { eps: 1.0 }
                } else {
                    CutMode::Exact
                };
                let r = fas_balanced_approx(&g, mode).unwrap();
                check(&g, &r, fas, "fas balanced");
                assert!(within_factor(r.value(), fas, Factor::from_integer(if weighted { 3 } else { 2 })));
                let r = cutwidth_balanced_approx(&g, mode).unwrap();
                check(&g, &r, cw, "cutwidth");
                let r = ola_directed_approx(&g, 0.5, weighted).unwrap();
                check(&g, &r, ola, "ola directed");
                assert!(within_factor(r.value(), ola, Factor::from_integer(3)));
                if !weighted {
                    let r = dpw_2approx(&g).unwrap();
                    check(&g, &r, dpw, "dpw");
                    assert!(within_factor(r.value(), dpw, Factor::from_integer(2)));
                }
                let u = gen_random_undirected(n, p, w, seed);
                let opt = perm_opt(&u, Objective::Ola).unwrap().opt;
                let r = ola_undirected_approx(&u, 0.5, weighted).unwrap();
                check(&u, &r, opt, "ola undirected");
            }
        }
    }
}

#[test]
fn ola_factor_follows_split_range() {
    let g = gen_random(8, 0.5, 1..=1, 4);
    let r = ola_directed_approx(&g, 0.5, false).unwrap();
    // k ranges over 2..=6: five positions, so 1 + 7/5
    assert_eq!(r.factor, Factor::new(12, 5));
    let u = gen_random_undirected(8, 0.5, 1..=1, 4);
    let r = ola_undirected_approx(&u, 0.5, false).unwrap();
    assert_eq!(r.factor, Factor::new(9, 5));
    assert!(r.orientation.is_some());
}
