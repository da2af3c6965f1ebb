use proptest::prelude::*;
use treewalk_core::hitting::{
    hit_formula, hit_oracle, jmax, joining_time, return_time, stationary, t_bestmeet, t_meet,
};
use treewalk_core::rational::{expect_u64, integer, ratio};
use treewalk_core::{families, surgery, verify, SpineDecomposition, Tree};

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2)
            .prop_map(move |seq| Tree::from_pruefer(&seq, n).unwrap())
    })
}

fn arb_tree_and_perm(max_n: usize) -> impl Strategy<Value = (Tree, Vec<usize>)> {
    arb_tree(max_n).prop_flat_map(|t| {
        let n = t.n();
        (Just(t), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

// Caterpillar with spine 0..=d and at least two extra leaves at spine
// position 2, so the outward double shift is always available.
fn arb_caterpillar() -> impl Strategy<Value = Tree> {
    (5..=9usize).prop_flat_map(|d| {
        proptest::collection::vec(0..=2usize, d - 1).prop_map(move |mut counts| {
            counts[1] += 2;
            let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
            let mut next = d + 1;
            for (offset, &count) in counts.iter().enumerate() {
                for _ in 0..count {
                    edges.push((offset + 1, next));
                    next += 1;
                }
            }
            Tree::build(next, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_split_identities(t in arb_tree(16)) {
        let n = t.n();
        for &(u, v) in t.edges() {
            let cut = t.split_at_edge(u, v).unwrap();
            prop_assert_eq!(cut.deg_u + cut.deg_v, 2 * (n as u64 - 1));
            prop_assert_eq!(cut.deg_u, 2 * cut.side_u.len() as u64 - 1);
            prop_assert_eq!(cut.deg_v, 2 * cut.side_v.len() as u64 - 1);
            prop_assert_eq!(cut.side_u.len() + cut.side_v.len(), n);
            prop_assert!(cut.side_u.binary_search(&u).is_ok());
            prop_assert!(cut.side_v.binary_search(&v).is_ok());
        }
    }

    #[test]
    fn overlap_lengths_are_bounded(t in arb_tree(10)) {
        let dist = t.distances();
        for u in 0..t.n() {
            for v in 0..t.n() {
                for w in 0..t.n() {
                    let overlap = t.path_overlap(u, w, v).unwrap();
                    prop_assert!(overlap <= dist[u][v].min(dist[w][v]));
                }
                prop_assert_eq!(t.path_overlap(u, u, v).unwrap(), dist[u][v]);
                prop_assert_eq!(t.path_overlap(u, v, v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn geodesic_is_a_diameter_path_between_leaves(t in arb_tree(16)) {
        let (d, path) = t.diameter_and_geodesic().unwrap();
        let longest = t.distances().iter().flatten().copied().max().unwrap();
        prop_assert_eq!(d, longest);
        prop_assert_eq!(path.len(), d + 1);
        prop_assert!(t.is_leaf(path[0]));
        prop_assert!(t.is_leaf(path[d]));
        for pair in path.windows(2) {
            prop_assert!(t.has_edge(pair[0], pair[1]));
        }
    }

    #[test]
    fn codes_ignore_labels((t, perm) in arb_tree_and_perm(12)) {
        let relabeled: Vec<(usize, usize)> =
            t.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let s = Tree::build(t.n(), &relabeled).unwrap();
        prop_assert_eq!(t.canonical_code(), s.canonical_code());
        for v in 0..t.n() {
            prop_assert_eq!(t.rooted_code(v).unwrap(), s.rooted_code(perm[v]).unwrap());
        }
    }

    #[test]
    fn hitting_has_distance_parity_and_bound(t in arb_tree(12)) {
        let dist = t.distances();
        for u in 0..t.n() {
            for v in 0..t.n() {
                let h = hit_formula(&t, u, v).unwrap();
                prop_assert!(h >= dist[u][v] as u64);
                prop_assert_eq!(h % 2, dist[u][v] as u64 % 2);
            }
        }
    }

    #[test]
    fn formula_matches_linear_solve(t in arb_tree(12)) {
        for target in 0..t.n() {
            let profile = hit_oracle(&t, target).unwrap();
            for u in 0..t.n() {
                prop_assert_eq!(
                    expect_u64(&profile.times[u]),
                    hit_formula(&t, u, target).unwrap()
                );
            }
        }
    }

    #[test]
    fn commute_identity_from_solver(t in arb_tree(10)) {
        let n = t.n() as i64;
        let dist = t.distances();
        let profiles: Vec<_> = (0..t.n()).map(|w| hit_oracle(&t, w).unwrap()).collect();
        for u in 0..t.n() {
            for v in (u + 1)..t.n() {
                let sum = &profiles[v].times[u] + &profiles[u].times[v];
                prop_assert_eq!(sum, ratio(2 * (n - 1) * dist[u][v] as i64, 1));
            }
        }
    }

    #[test]
    fn stationary_weights_and_returns(t in arb_tree(16)) {
        let pi = stationary(&t).unwrap();
        let total: treewalk_core::Rational = pi.weights.iter().cloned().sum();
        prop_assert_eq!(total, integer(1));
        for v in 0..t.n() {
            prop_assert_eq!(
                return_time(&t, v).unwrap() * &pi.weights[v],
                integer(1)
            );
        }
    }

    #[test]
    fn joining_times_match_their_definition(t in arb_tree(12)) {
        for v in 0..t.n() {
            let by_definition: u64 = (0..t.n())
                .map(|u| t.degree(u) as u64 * hit_formula(&t, u, v).unwrap())
                .sum();
            prop_assert_eq!(joining_time(&t, v).unwrap(), by_definition);
        }
    }

    #[test]
    fn meeting_time_extremes_are_consistent(t in arb_tree(16)) {
        let n = t.n() as i64;
        let (value, argmax) = jmax(&t).unwrap();
        prop_assert!(argmax.iter().all(|&v| t.is_leaf(v)));
        let meet = t_meet(&t).unwrap();
        prop_assert_eq!(meet.clone(), ratio(value as i64, 2 * (n - 1)));
        let (best, argmin) = t_bestmeet(&t).unwrap();
        prop_assert!(best <= meet);
        prop_assert!(!argmin.is_empty());
    }

    #[test]
    fn sigma_is_monotone_when_applicable(t in arb_tree(14)) {
        let (d, path) = t.diameter_and_geodesic().unwrap();
        let eligible = (0..t.n()).find(|&y| {
            t.is_leaf(y) && !path.contains(&y) && !path.contains(&t.neighbors(y)[0])
        });
        if let Some(y) = eligible {
            let moved = surgery::sigma(&t, &path, y).unwrap();
            prop_assert_eq!(moved.n(), t.n());
            prop_assert_eq!(moved.diameter_and_geodesic().unwrap().0, d);
            for &vj in &path {
                prop_assert!(
                    joining_time(&moved, vj).unwrap() < joining_time(&t, vj).unwrap()
                );
                prop_assert!(
                    hit_formula(&moved, y, vj).unwrap() < hit_formula(&t, y, vj).unwrap()
                );
                for v in 0..t.n() {
                    prop_assert!(
                        hit_formula(&moved, v, vj).unwrap() <= hit_formula(&t, v, vj).unwrap()
                    );
                }
            }
            for &a in &path {
                for &b in &path {
                    prop_assert_eq!(
                        hit_formula(&moved, a, b).unwrap(),
                        hit_formula(&t, a, b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn tau_double_shift_lowers_both_endpoints(t in arb_caterpillar()) {
        let spine = SpineDecomposition::decompose(&t).unwrap();
        let d = spine.diameter();
        let v0 = spine.spine()[0];
        let vd = spine.spine()[d];
        let j0 = joining_time(&t, v0).unwrap();
        let jd = joining_time(&t, vd).unwrap();
        for i in 2..=d - 2 {
            for k in i..=d - 2 {
                let enough = if i == k {
                    spine.attachments_at(i).len() >= 2
                } else {
                    !spine.attachments_at(i).is_empty() && !spine.attachments_at(k).is_empty()
                };
                if !enough {
                    continue;
                }
                let shifted = surgery::tau(&t, &spine, (i, i - 1), Some((k, k + 1))).unwrap();
                prop_assert!(joining_time(&shifted, v0).unwrap() < j0, "i={i} k={k}");
                prop_assert!(joining_time(&shifted, vd).unwrap() < jd, "i={i} k={k}");
            }
        }
    }

    #[test]
    fn moving_a_leaf_onto_a_target_lowers_it(t in arb_tree(12)) {
        if t.n() < 3 {
            return Ok(());
        }
        let z = (0..t.n()).find(|&v| t.is_leaf(v)).unwrap();
        let anchor = t.neighbors(z)[0];
        let x = (0..t.n()).rev().find(|&v| v != z && v != anchor).unwrap();
        let moved = surgery::move_leaf(&t, z, x).unwrap();
        prop_assert!(joining_time(&moved, x).unwrap() < joining_time(&t, x).unwrap());
        for v in 0..t.n() {
            prop_assert!(hit_formula(&moved, v, x).unwrap() <= hit_formula(&t, v, x).unwrap());
        }
    }
}

#[test]
fn broom_tip_hitting_time_is_quadratic() {
    for n in 4..=30usize {
        for d in 2..n {
            let (t, lm) = families::generate(&families::FamilySpec::broom(n, d)).unwrap();
            let tip = lm[&format!("v{d}")];
            let expected = (2 * d * n) as u64 - (2 * n) as u64 - (d * d) as u64 + 2;
            assert_eq!(hit_formula(&t, lm["v0"], tip).unwrap(), expected, "broom({n},{d})");
        }
    }
}

#[test]
fn balanced_split_minimises_double_broom_endpoints() {
    for d in 3..=8usize {
        for total in 2..=10usize {
            let n = total + d - 1;
            let worst_of = |l: usize, r: usize| {
                let (j0, jd) = families::j_double_broom_endpoints(n, d, l, r).unwrap();
                j0.max(jd)
            };
            let best = (1..total).map(|l| worst_of(l, total - l)).min().unwrap();
            for l in 1..total {
                let r = total - l;
                let balanced = l.abs_diff(r) <= 1;
                assert_eq!(worst_of(l, r) == best, balanced, "d={d} split ({l},{r})");
            }
        }
    }
}

#[test]
fn enumeration_reaches_the_default_cap() {
    let classes = verify::enumerate_trees(16, verify::DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(classes.len(), 19_320);
}

#[test]
fn five_vertex_meeting_times_are_ordered() {
    let trees = verify::enumerate_trees(5, verify::DEFAULT_ENUM_CAP).unwrap();
    let mut values: Vec<u64> = trees.iter().map(|t| jmax(t).unwrap().0).collect();
    values.sort_unstable();
    assert_eq!(values, vec![52, 76, 84]);
}
