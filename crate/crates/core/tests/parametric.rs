use num_rational::BigRational;
use num_traits::{Signed, Zero};
use pivotal::parametric::{
    build_game, johnston_closed_form, johnston_negative_check, pbinomial_negative_witness,
    psi_p_closed_form, rounding_case, ssi_closed_form, tail_lemmas_check, type_deltas,
    weighted_repr, ParametricParams, Which,
};
use pivotal::rat::{int, rat};
use pivotal::{power_index, Coalition, Error, IndexId, IndexKind, ReducedGame};
use rayon::prelude::*;

fn params(k: usize, l: usize, m: usize, n: usize) -> ParametricParams {
    ParametricParams::new(k, l, m, n).unwrap()
}

/// Every family tuple with at most `max` voters, paired with each of the
/// three closed-form selectors and the m-value of the actual table behind
/// the selector.
fn grid(max: usize) -> Vec<(ParametricParams, Which, usize)> {
    let mut out = Vec::new();
    for k in 2..max {
        for l in 1..k {
            for n in 1..=max.saturating_sub(k) {
                for m in 1..=n {
                    let p = params(k, l, m, n);
                    out.push((p, Which::G1, m));
                    out.push((p, Which::G2, n + 1));
                    out.push((p, Which::G3, 0));
                }
            }
        }
    }
    out
}

fn brute(p: &ParametricParams, table_m: usize, kind: IndexKind) -> Vec<BigRational> {
    let g = build_game(&ParametricParams { m: table_m, ..*p }).unwrap();
    power_index(&g, &IndexId::absolute(kind)).unwrap().values
}

#[test]
fn closed_forms_match_brute_force_for_the_binomial_semivalue() {
    let probs = [rat(1, 3), rat(1, 2), rat(2, 3)];
    grid(9).par_iter().for_each(|(p, which, table_m)| {
        for prob in &probs {
            let closed = psi_p_closed_form(p, *which, prob).unwrap().expand(p);
            let direct = brute(p, *table_m, IndexKind::PBinomial(prob.clone()));
            assert_eq!(closed, direct, "{p} {which} at p={prob}");
        }
    });
}

#[test]
fn closed_forms_match_brute_force_for_johnston() {
    grid(9)
        .par_iter()
        .filter(|(p, _, _)| p.l == 1)
        .for_each(|(p, which, table_m)| {
            let closed = johnston_closed_form(p.k, p.n, p.m, *which).unwrap().expand(p);
            let direct = brute(p, *table_m, IndexKind::Js);
            assert_eq!(closed, direct, "{p} {which}");
        });
}

#[test]
fn closed_forms_match_brute_force_for_shapley_shubik() {
    grid(9).par_iter().for_each(|(p, which, table_m)| {
        let closed = ssi_closed_form(p, *which).unwrap().expand(p);
        let direct = brute(p, *table_m, IndexKind::Ssi);
        assert_eq!(closed, direct, "{p} {which}");
    });
}

#[test]
fn weighted_representations_reproduce_the_tables() {
    let mut tuples = Vec::new();
    for k in 2..9 {
        for l in 1..k {
            for n in 1..=9usize.saturating_sub(k) {
                for m in 0..=n + 1 {
                    tuples.push(params(k, l, m, n));
                }
            }
        }
    }
    tuples.par_iter().for_each(|p| {
        let repr = weighted_repr(p).unwrap();
        assert_eq!(repr.to_game().unwrap(), build_game(p).unwrap(), "{p}");
    });
}

#[test]
fn the_known_representation_of_a_midsize_member() {
    let repr = weighted_repr(&params(3, 2, 2, 3)).unwrap();
    assert_eq!(repr.quota, int(10));
    let w: Vec<BigRational> = [6, 4, 4, 1, 1, 1].iter().map(|&x| int(x)).collect();
    assert_eq!(repr.weights, w);

    let degenerate = weighted_repr(&params(3, 2, 0, 3)).unwrap();
    assert_eq!(degenerate.quota, int(2));
    assert_eq!(degenerate.weights[..3], [int(1), int(1), int(1)]);
    assert!(degenerate.weights[3..].iter().all(|x| x.is_zero()));

    let blocked = weighted_repr(&params(3, 2, 4, 3)).unwrap();
    assert_eq!(blocked.quota, int(5));
    assert_eq!(blocked.weights[..3], [int(3), int(2), int(2)]);
}

#[test]
fn rounding_lands_on_the_predicted_case() {
    // The internal table comparison runs on every call at these sizes.
    assert_eq!(rounding_case(&params(2, 1, 2, 3)).unwrap(), Which::G2);
    assert_eq!(rounding_case(&params(2, 1, 1, 3)).unwrap(), Which::G3);
    assert_eq!(rounding_case(&params(2, 1, 0, 3)).unwrap(), Which::G3);
    assert_eq!(rounding_case(&params(2, 1, 4, 3)).unwrap(), Which::G2);
    // Even ocean: exactly half of the fringes winning is still a tie, and
    // ties lose, but m = n/2 keeps a strict majority thanks to the j = m
    // terms themselves.
    assert_eq!(rounding_case(&params(3, 2, 2, 4)).unwrap(), Which::G3);
    assert_eq!(rounding_case(&params(3, 2, 3, 4)).unwrap(), Which::G2);

    let mut checked = 0;
    for k in 2..6 {
        for l in 1..k {
            for n in 1..=7usize.saturating_sub(k) {
                for m in 0..=n + 1 {
                    let p = params(k, l, m, n);
                    let expect = if m <= n / 2 { Which::G3 } else { Which::G2 };
                    assert_eq!(rounding_case(&p).unwrap(), expect, "{p}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn only_the_bloc_leaves_an_undecided_residual() {
    for (p, which, table_m) in grid(7) {
        if which != Which::G1 {
            continue;
        }
        let g = build_game(&ParametricParams { m: table_m, ..p }).unwrap();
        let t = p.t_mask();
        for a in 0..(1u32 << p.k) {
            let reduced = g.reduced_game(Coalition(a), p.k).unwrap();
            if a == t.0 {
                assert!(matches!(reduced, ReducedGame::Proper(_)), "{p} bloc");
            } else {
                assert!(
                    matches!(reduced, ReducedGame::AllLosing | ReducedGame::AllWinning),
                    "{p} committee part {a:b}"
                );
            }
        }
    }
    // Both roundings are pure: every committee part decides alone.
    for (p, w) in [(params(3, 2, 0, 3), Which::G3), (params(3, 2, 4, 3), Which::G2)] {
        assert_eq!(rounding_case(&ParametricParams { m: p.m, ..p }).unwrap(), w);
        let g = build_game(&p).unwrap();
        for a in 0..(1u32 << p.k) {
            assert!(
                !matches!(
                    g.reduced_game(Coalition(a), p.k).unwrap(),
                    ReducedGame::Proper(_)
                ),
                "{p} part {a:b}"
            );
        }
    }
}

#[test]
fn pinned_values_on_small_members() {
    let js = johnston_closed_form(2, 3, 2, Which::G1).unwrap();
    assert_eq!(js.type1, int(12));
    assert_eq!(js.type2, int(2));
    assert_eq!(js.type3, rat(2, 3));
    let js2 = johnston_closed_form(2, 3, 2, Which::G2).unwrap();
    assert_eq!(
        (js2.type1, js2.type2, js2.type3),
        (int(16), int(0), int(0))
    );
    let js3 = johnston_closed_form(2, 3, 2, Which::G3).unwrap();
    assert_eq!((js3.type1, js3.type2, js3.type3), (int(8), int(8), int(0)));

    let ssi = ssi_closed_form(&params(3, 2, 2, 3), Which::G1).unwrap();
    assert_eq!(ssi.type1, rat(2, 5));
    assert_eq!(ssi.type2, rat(1, 4));
    assert_eq!(ssi.type3, rat(1, 30));

    let psi = psi_p_closed_form(&params(3, 2, 2, 3), Which::G1, &rat(1, 3)).unwrap();
    assert_eq!(psi.type1, rat(128, 243));
    assert_eq!(psi.type2, rat(68, 243));
    assert_eq!(psi.type3, rat(8, 243));

    let p = params(3, 2, 2, 3);
    assert_eq!(
        psi.total(&p),
        rat(128, 243) + int(2) * rat(68, 243) + int(3) * rat(8, 243)
    );
    assert_eq!(psi.expand(&p).len(), 6);
}

#[test]
fn displacement_carries_the_whole_tail() {
    let p = params(3, 2, 2, 3);
    for prob in [rat(1, 3), rat(1, 2), rat(2, 3)] {
        let g1 = psi_p_closed_form(&p, Which::G1, &prob).unwrap();
        for which in [Which::G2, Which::G3] {
            let other = psi_p_closed_form(&p, which, &prob).unwrap();
            let d = type_deltas(&g1, &other, &p).unwrap();
            assert_eq!(d.xi, int(p.n as i64) * &g1.type3);
            assert_eq!(d.xi, int(p.n as i64) * &d.d3);
            assert!(d.xi.is_positive());
        }
    }
    let g1 = psi_p_closed_form(&p, Which::G1, &rat(1, 2)).unwrap();
    assert!(matches!(
        type_deltas(&g1, &g1, &p),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn elementary_estimates_certify_on_sample_points() {
    // Central binomial at n = 8, m = 4: C(7,3) = 35 against 2^7/sqrt(8).
    let report = tail_lemmas_check(8, 4, &BigRational::zero()).unwrap();
    assert!(report.all_hold);
    let central = &report.checks[0];
    assert_eq!(central.lhs, int(35));
    assert!(central.bound_lo > int(45) && central.bound_hi < int(46));
    // At delta = 0 both tail bounds degenerate to comparisons against 0.
    assert!(report.checks[1].bound_hi.is_zero());

    // A real gap: n = 20, delta = 1/4 puts the upper tail against
    // 1 - exp(-5/2), which is strictly inside (0, 1).
    let report = tail_lemmas_check(20, 10, &rat(1, 4)).unwrap();
    assert!(report.all_hold);
    let upper = &report.checks[1];
    assert!(upper.bound_lo > rat(9, 11) && upper.bound_hi < rat(93, 100));
    assert!(upper.lhs > upper.bound_hi);

    for n in [3usize, 5, 9, 14] {
        for (m, delta) in [(1, rat(1, 5)), (n / 2 + 1, rat(2, 5)), (n, BigRational::zero())] {
            let r = tail_lemmas_check(n, m, &delta).unwrap();
            assert!(r.all_hold, "n={n} m={m} delta={delta}");
            assert_eq!(r.checks.len(), 7);
        }
    }
    // The n < 3 slice has no point-probability rows.
    assert_eq!(tail_lemmas_check(2, 1, &rat(1, 4)).unwrap().checks.len(), 3);

    let jsonl = tail_lemmas_check(8, 4, &rat(1, 8)).unwrap().to_jsonl().unwrap();
    assert_eq!(jsonl.lines().count(), 7);
    assert!(jsonl.lines().all(|l| l.contains("\"lhs\"")));
}

#[test]
fn johnston_distances_outgrow_the_tail_mass() {
    let reports: Vec<_> = (1..=30usize)
        .flat_map(|nt| [2, 3, 4].map(|k| (k, nt)))
        .collect();
    reports.par_iter().for_each(|&(k, nt)| {
        let r = johnston_negative_check(k, nt).unwrap();
        assert!(r.absolute_tail_winning.holds, "k={k} ntilde={nt}");
        assert!(r.absolute_tail_losing.holds, "k={k} ntilde={nt}");
        assert!(r.xi.is_positive());
        assert_eq!(r.n, 2 * nt + 1);
        if let Some(share) = &r.xi_share_check {
            assert!(share.holds, "k={k} ntilde={nt}");
        } else {
            assert_eq!(nt, 1);
        }
    });
}

#[test]
fn normalized_johnston_distances_keep_a_floor_at_large_sizes() {
    (50..=100usize)
        .into_par_iter()
        .flat_map(|nt| [2usize, 3].into_par_iter().map(move |k| (k, nt)))
        .for_each(|(k, nt)| {
            let r = johnston_negative_check(k, nt).unwrap();
            assert!(r.normalized_floor_holds, "k={k} ntilde={nt}");
            let floor = rat(1, 5 * k as i64);
            assert!(r.normalized_distance_tail_winning >= floor);
            assert!(r.normalized_distance_tail_losing >= floor);
        });
}

#[test]
fn binomial_semivalue_displacement_diverges_away_from_one_half() {
    let high = pbinomial_negative_witness(4, 2, &rat(2, 3), &[11, 21, 31]).unwrap();
    assert!(high.ratio_strictly_increasing);
    assert!(high.xi_strictly_decreasing);
    assert_eq!(high.rows.len(), 3);
    assert!(high.rows.iter().all(|r| r.bound_holds));
    assert_eq!(high.rows[0].m, 6);

    let low = pbinomial_negative_witness(4, 2, &rat(1, 3), &[10, 20, 30]).unwrap();
    assert!(low.ratio_strictly_increasing);
    assert!(low.xi_strictly_decreasing);
    assert_eq!(low.rows[0].m, 5);

    // At p = 1/2 nothing diverges; the report just records the rows.
    let flat = pbinomial_negative_witness(4, 2, &rat(1, 2), &[10, 20, 30]).unwrap();
    assert_eq!(flat.rows.len(), 3);
    assert!(!flat.ratio_strictly_increasing);

    let jsonl = high.to_jsonl().unwrap();
    assert_eq!(jsonl.lines().count(), 3);
    assert!(jsonl.lines().all(|l| l.contains("\"ratio\"")));
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(ParametricParams::new(2, 2, 0, 3).is_err());
    assert!(ParametricParams::new(2, 0, 0, 3).is_err());
    assert!(ParametricParams::new(3, 1, 5, 3).is_err());
    assert!(ParametricParams::new(3, 1, 1, 0).is_err());
    assert!(build_game(&ParametricParams {
        k: 4,
        l: 1,
        m: 1,
        n: 17
    })
    .is_err());
    assert!(psi_p_closed_form(&params(3, 1, 1, 2), Which::G1, &int(1)).is_err());
    assert!(psi_p_closed_form(&params(3, 1, 0, 2), Which::G1, &rat(1, 2)).is_err());
    assert!(psi_p_closed_form(&params(3, 1, 0, 2), Which::G3, &rat(1, 2)).is_ok());
    assert!(johnston_closed_form(1, 3, 2, Which::G1).is_err());
    assert!(johnston_closed_form(2, 3, 0, Which::G1).is_err());
    assert!(ssi_closed_form(&params(3, 1, 3, 2), Which::G1).is_err());
    assert!(johnston_negative_check(1, 5).is_err());
    assert!(pbinomial_negative_witness(3, 1, &rat(1, 3), &[1]).is_err());
    assert!(pbinomial_negative_witness(3, 1, &rat(1, 3), &[]).is_err());
    assert!(tail_lemmas_check(5, 3, &rat(1, 2)).is_err());
    assert!(tail_lemmas_check(5, 6, &rat(1, 4)).is_err());
    assert!("g2".parse::<Which>().unwrap() == Which::G2);
    assert!("G3".parse::<Which>().is_ok());
    assert!("g4".parse::<Which>().is_err());
}
