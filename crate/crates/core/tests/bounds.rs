use num_rational::BigRational;
use num_traits::One;
use pivotal::bounds::{
    approximation_lower_bound, empirical_bound_sweep, epsilon_of, lambda_min, local_bounds_hold,
    main_theorem_bounds, pk_conjecture_probe, quality, shortening_probe, SigmaTarget, SweepRow,
};
use pivotal::game::enumerate_games;
use pivotal::rat::{int, rat};
use pivotal::shortening::ShorteningId;
use pivotal::{Error, Game, GameClass, IndexId, IndexKind};

fn wvg(q: i64, w: &[i64]) -> Game {
    let weights: Vec<BigRational> = w.iter().map(|&x| int(x)).collect();
    Game::from_weighted(&int(q), &weights).unwrap()
}

fn abs(kind: IndexKind) -> IndexId {
    IndexId::absolute(kind)
}

/// A semivalue with weight spread 3 on n voters, for n up to 4.
fn spread_three(n: usize) -> IndexKind {
    let w = match n {
        2 => vec![rat(1, 4), rat(3, 4)],
        3 => vec![rat(1, 8), rat(1, 4), rat(3, 8)],
        4 => vec![rat(1, 16), rat(1, 8), rat(1, 8), rat(3, 16)],
        _ => panic!("no tabled weights for n={n}"),
    };
    IndexKind::Semivalue(w)
}

/// Indices with tabled quality functions, instantiated for n voters. The
/// shift pair only applies to complete games; the caller filters.
fn tabled_kinds(n: usize) -> Vec<IndexKind> {
    vec![
        IndexKind::Tijs,
        IndexKind::Bz,
        IndexKind::Swing,
        IndexKind::Rae,
        IndexKind::ColPrev,
        IndexKind::ColIni,
        IndexKind::Pgi,
        IndexKind::Dp,
        IndexKind::Shift,
        IndexKind::Sdp,
        IndexKind::PBinomial(rat(1, 2)),
        spread_three(n),
    ]
}

#[test]
fn quality_function_table() {
    let q = |kind: IndexKind, k: usize| quality(&abs(kind), k).unwrap();

    assert_eq!(q(IndexKind::Bz, 2), (int(1), int(3)));
    assert_eq!(q(IndexKind::Pgi, 3), (int(4), int(8)));
    for k in 1..=5 {
        assert_eq!(q(IndexKind::Tijs, k), (int(0), int(1)));
        assert_eq!(q(IndexKind::PBinomial(rat(1, 2)), k), (int(1), int(k as i64 + 1)));
    }
    assert_eq!(q(IndexKind::Swing, 1), (int(1), int(2)));
    assert_eq!(q(IndexKind::Rae, 4), (int(1), int(5)));
    assert_eq!(q(IndexKind::ColPrev, 3), (int(2), int(7)));
    assert_eq!(q(IndexKind::ColIni, 1), (int(2), int(3)));
    assert_eq!(q(IndexKind::Dp, 2), (int(4), rat(25, 4)));
    assert_eq!(q(IndexKind::Shift, 2), (rat(5, 2), int(6)));
    assert_eq!(q(IndexKind::Sdp, 2), (int(5), int(11)));
    // weight spread c2/c1 = 3 scales the whole pair
    assert_eq!(q(spread_three(3), 1), (int(3), int(6)));

    // everything except the per-winning-coalition pair runs on the default
    // f2 = k*f1 + 1; those two are tabled strictly below it
    for k in 1..=6i64 {
        for kind in [
            IndexKind::Tijs,
            IndexKind::Bz,
            IndexKind::Swing,
            IndexKind::Rae,
            IndexKind::ColPrev,
            IndexKind::ColIni,
            IndexKind::Shift,
            IndexKind::Sdp,
        ] {
            let (f1, f2) = q(kind, k as usize);
            assert_eq!(f2, int(k) * f1 + int(1));
        }
        for kind in [IndexKind::Pgi, IndexKind::Dp] {
            let (f1, f2) = q(kind, k as usize);
            let canonical = int(k) * f1 + int(1);
            if k == 1 {
                assert_eq!(f2, canonical);
            } else {
                assert!(f2 < canonical);
            }
        }
    }

    for kind in [
        IndexKind::Js,
        IndexKind::Ssi,
        IndexKind::Kb,
        IndexKind::Phi,
        IndexKind::Chow,
        IndexKind::PBinomial(rat(1, 3)),
        // a valid semivalue whose smallest weight is zero
        IndexKind::Semivalue(vec![int(0), rat(1, 2), int(0)]),
    ] {
        assert!(matches!(
            quality(&abs(kind), 2),
            Err(Error::UnsupportedIndex(_, _))
        ));
    }
}

#[test]
fn epsilon_measures_the_tail() {
    let bz = abs(IndexKind::Bz);
    let dictator = wvg(1, &[1, 0, 0]);
    assert_eq!(epsilon_of(&dictator, 1, &bz).unwrap(), int(0));
    assert_eq!(epsilon_of(&dictator, 2, &bz).unwrap(), int(0));

    let g = wvg(3, &[2, 1, 1]);
    assert_eq!(epsilon_of(&g, 1, &bz).unwrap(), rat(2, 5));
    assert_eq!(epsilon_of(&g, 2, &bz).unwrap(), rat(1, 5));

    let majority = wvg(2, &[1, 1, 1]);
    assert_eq!(epsilon_of(&majority, 2, &bz).unwrap(), rat(1, 3));

    // normalization switch changes nothing: the ratio is scale-free
    assert_eq!(
        epsilon_of(&g, 1, &IndexId::normalized(IndexKind::Bz)).unwrap(),
        rat(2, 5)
    );

    // a vetoless game has no Tijs mass at all
    assert!(matches!(
        epsilon_of(&majority, 1, &abs(IndexKind::Tijs)),
        Err(Error::NormalizationOfZero)
    ));
    assert!(matches!(
        epsilon_of(&g, 0, &bz),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        epsilon_of(&g, 3, &bz),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn theorem_bounds_on_small_weighted_games() {
    let bz = abs(IndexKind::Bz);

    // quota-3 game: Bz = (3/4,1/4,1/4), 1-rounding collapses to dictator 1
    let g = wvg(3, &[2, 1, 1]);
    let tb = main_theorem_bounds(&g, 1, &bz).unwrap();
    assert_eq!(tb.epsilon, rat(2, 5));
    assert_eq!(tb.absolute_bound, int(1));
    assert_eq!(tb.actual_absolute, rat(3, 4));
    assert_eq!(tb.normalized_bound, Some(rat(8, 5)));
    assert_eq!(tb.actual_normalized, Some(rat(4, 5)));
    assert_eq!(tb.shortening, ShorteningId::KRounding { k: 1 });

    // majority of three at k=2 rounds to unanimity on {1,2}
    let majority = wvg(2, &[1, 1, 1]);
    let tb = main_theorem_bounds(&majority, 2, &bz).unwrap();
    assert_eq!(tb.epsilon, rat(1, 3));
    assert_eq!(tb.absolute_bound, rat(3, 2));
    assert_eq!(tb.actual_absolute, rat(1, 2));
    assert_eq!(tb.normalized_bound, Some(int(2)));
    assert_eq!(tb.actual_normalized, Some(rat(2, 3)));

    // five voters: epsilon 9/25, total 25/16, both sides checked against
    // the dictator the rounding produces
    let g5 = wvg(4, &[3, 2, 1, 1, 1]);
    let tb = main_theorem_bounds(&g5, 2, &bz).unwrap();
    assert_eq!(tb.epsilon, rat(9, 25));
    assert_eq!(tb.absolute_bound, rat(27, 16));
    assert_eq!(tb.actual_absolute, rat(19, 16));

    // a dictator is already 1-pure, so nothing moves
    let dictator = wvg(1, &[1, 0, 0]);
    let tb = main_theorem_bounds(&dictator, 1, &bz).unwrap();
    assert_eq!(tb.epsilon, int(0));
    assert_eq!(tb.absolute_bound, int(0));
    assert_eq!(tb.actual_absolute, int(0));
    assert_eq!(tb.normalized_bound, Some(int(0)));
    assert_eq!(tb.actual_normalized, Some(int(0)));

    // unanimity under up-rounding for Tijs: every bound is attained exactly
    let unanimity = wvg(3, &[1, 1, 1]);
    let tb = main_theorem_bounds(&unanimity, 1, &abs(IndexKind::Tijs)).unwrap();
    assert_eq!(tb.shortening, ShorteningId::KUpRounding { k: 1 });
    assert_eq!(tb.epsilon, rat(2, 3));
    assert_eq!(tb.absolute_bound, int(2));
    assert_eq!(tb.actual_absolute, int(2));
    assert_eq!(tb.normalized_bound, Some(rat(4, 3)));
    assert_eq!(tb.actual_normalized, Some(rat(4, 3)));
}

#[test]
fn shortened_games_without_power_skip_the_normalized_side() {
    let tijs = abs(IndexKind::Tijs);

    // dictator on the last voter: up-rounding at k=1 turns every block
    // winning, and the constant table carries no power
    let d3 = Game::from_winning(3, &[4, 5, 6, 7]).unwrap();
    let tb = main_theorem_bounds(&d3, 1, &tijs).unwrap();
    assert_eq!(tb.epsilon, int(1));
    assert_eq!(tb.absolute_bound, int(1));
    assert_eq!(tb.actual_absolute, int(1));
    assert_eq!(tb.normalized_bound, None);
    assert_eq!(tb.actual_normalized, None);

    // voter 3 vetoes here, but the up-rounded game is a vetoless proper
    // game, so its Tijs vector is zero without being constant
    let g = Game::from_winning(3, &[5, 6, 7]).unwrap();
    let gamma = ShorteningId::KUpRounding { k: 2 }.apply(&g).unwrap();
    assert_eq!(gamma.constant_value(), None);
    let tb = main_theorem_bounds(&g, 2, &tijs).unwrap();
    assert_eq!(tb.actual_absolute, int(1));
    assert_eq!(tb.normalized_bound, None);

    // zero total power: no hypothesis to evaluate at all
    assert!(matches!(
        main_theorem_bounds(&wvg(2, &[1, 1, 1]), 1, &tijs),
        Err(Error::NormalizationOfZero)
    ));
}

#[test]
fn per_voter_inequalities_hold_exhaustively() {
    for n in 2..=3usize {
        let simple = enumerate_games(n, GameClass::Simple).unwrap();
        for kind in tabled_kinds(n) {
            let id = abs(kind.clone());
            let shift_based = matches!(kind, IndexKind::Shift | IndexKind::Sdp);
            for g in &simple {
                if shift_based && !g.is_complete() {
                    continue;
                }
                for k in 1..n {
                    assert!(
                        local_bounds_hold(g, k, &id).unwrap(),
                        "{kind} at k={k} on {g:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn below_threshold_roundings_stay_nonconstant() {
    for n in 2..=4usize {
        let simple = enumerate_games(n, GameClass::Simple).unwrap();
        for kind in tabled_kinds(n) {
            let id = abs(kind.clone());
            let shift_based = matches!(kind, IndexKind::Shift | IndexKind::Sdp);
            for g in &simple {
                if shift_based && !g.is_complete() {
                    continue;
                }
                for k in 1..n {
                    let eps = match epsilon_of(g, k, &id) {
                        Ok(e) => e,
                        Err(Error::NormalizationOfZero) => continue,
                        Err(e) => panic!("{e}"),
                    };
                    let (_, f2) = quality(&id, k).unwrap();
                    if eps < BigRational::one() / f2 {
                        let qf = pivotal::bounds::QualityFunctions::for_index(&id).unwrap();
                        let gamma = qf.shortening(k).apply(g).unwrap();
                        assert_eq!(
                            gamma.constant_value(),
                            None,
                            "{kind} at k={k} rounded {g:?} to a constant below the threshold"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn tightness_margin_over_the_original_bound() {
    // the coefficient (2k+2) beats (2k+1)/(1-(k+1)e)+1 everywhere on the
    // admissible range of e
    for k in 1..=5i64 {
        for j in 1..100i64 {
            let e = BigRational::new(j.into(), (100 * (k + 1)).into());
            let original = int(2 * k + 1) * &e / (int(1) - int(k + 1) * &e) + &e;
            let tightened = int(2 * k + 2) * &e;
            assert!(original > tightened, "k={k}, e={e}");
        }
    }
}

#[test]
fn lambda_examples() {
    let bz = abs(IndexKind::Bz);
    let target = [rat(3, 4), rat(1, 4)];
    assert_eq!(
        lambda_min(&target, GameClass::Simple, 2, &bz).unwrap(),
        rat(1, 2)
    );
    // the same four labeled games are complete and weighted
    assert_eq!(
        lambda_min(&target, GameClass::Complete, 2, &bz).unwrap(),
        rat(1, 2)
    );
    assert_eq!(
        lambda_min(&target, GameClass::Weighted, 2, &bz).unwrap(),
        rat(1, 2)
    );

    assert_eq!(
        lambda_min(&[rat(1, 2), rat(1, 2)], GameClass::Simple, 2, &bz).unwrap(),
        int(0)
    );
    assert_eq!(
        lambda_min(&[rat(29, 40), rat(9, 40)], GameClass::Simple, 2, &bz).unwrap(),
        rat(1, 2)
    );

    // the shift index only lives on games in the canonical order, which
    // drops the reversed dictator from the two-voter candidates
    assert_eq!(
        lambda_min(&target, GameClass::Complete, 2, &abs(IndexKind::Shift)).unwrap(),
        rat(1, 2)
    );

    assert!(matches!(
        lambda_min(&target, GameClass::Simple, 1, &bz),
        Err(Error::InvalidArgument(_))
    ));
    let six = vec![rat(1, 6); 6];
    assert!(matches!(
        lambda_min(&six, GameClass::Simple, 6, &bz),
        Err(Error::EnumerationLimit(6, _))
    ));
}

#[test]
fn lower_bound_matches_the_worked_cases() {
    let bz = abs(IndexKind::Bz);

    // mass on the first two voters only: min{2/3, 2*(1/2)/8} = 1/8,
    // independent of how many powerless voters follow
    for n in [3usize, 4, 6] {
        let mut sigma = vec![rat(3, 4), rat(1, 4)];
        sigma.resize(n, int(0));
        let sigma = SigmaTarget::new(sigma).unwrap();
        for class in [GameClass::Simple, GameClass::Complete, GameClass::Weighted] {
            assert_eq!(
                approximation_lower_bound(&sigma, 2, &bz, class).unwrap(),
                rat(1, 8)
            );
        }
    }

    // swings normalize to the Banzhaf distribution, so the bound agrees
    let sigma = SigmaTarget::new(vec![rat(3, 4), rat(1, 4), int(0), int(0)]).unwrap();
    assert_eq!(
        approximation_lower_bound(&sigma, 2, &abs(IndexKind::Swing), GameClass::Simple).unwrap(),
        rat(1, 8)
    );

    // per-winning-coalition variant of the same target
    assert_eq!(
        approximation_lower_bound(&sigma, 2, &abs(IndexKind::Pgi), GameClass::Simple).unwrap(),
        rat(4, 57)
    );

    // spilling 1/20 beyond the prefix: alpha = 1/20, lambda = 1/2,
    // min{2*(1/3 - 1/20), 1/8 - (7/4)*(1/20)} = 3/80
    let sigma =
        SigmaTarget::new(vec![rat(29, 40), rat(9, 40), rat(1, 40), rat(1, 40)]).unwrap();
    assert_eq!(
        approximation_lower_bound(&sigma, 2, &bz, GameClass::Simple).unwrap(),
        rat(3, 80)
    );

    // an attainable prefix gives a vacuous bound
    let sigma = SigmaTarget::new(vec![rat(1, 2), rat(1, 2), int(0), int(0)]).unwrap();
    assert_eq!(
        approximation_lower_bound(&sigma, 2, &bz, GameClass::Simple).unwrap(),
        int(0)
    );

    // too much mass beyond the prefix violates the precondition
    let sigma = SigmaTarget::new(vec![rat(1, 4); 4]).unwrap();
    assert!(matches!(
        approximation_lower_bound(&sigma, 2, &bz, GameClass::Simple),
        Err(Error::InvalidArgument(_))
    ));

    let sigma = SigmaTarget::new(vec![rat(3, 4), rat(1, 4), int(0)]).unwrap();
    for kind in [
        IndexKind::Tijs,
        IndexKind::Rae,
        IndexKind::Js,
        IndexKind::PBinomial(rat(1, 3)),
    ] {
        assert!(matches!(
            approximation_lower_bound(&sigma, 2, &abs(kind), GameClass::Simple),
            Err(Error::UnsupportedIndex(_, _))
        ));
    }
}

#[test]
fn sigma_targets_are_validated() {
    assert!(SigmaTarget::new(vec![]).is_err());
    assert!(SigmaTarget::new(vec![rat(1, 2), rat(1, 3)]).is_err());
    assert!(SigmaTarget::new(vec![rat(3, 2), rat(-1, 2)]).is_err());

    let sigma = SigmaTarget::new(vec![rat(3, 4), rat(1, 4)]).unwrap();
    let json = serde_json::to_string(&sigma).unwrap();
    assert_eq!(json, r#"{"sigma":["3/4","1/4"]}"#);
    assert_eq!(serde_json::from_str::<SigmaTarget>(&json).unwrap(), sigma);
    assert!(serde_json::from_str::<SigmaTarget>(r#"{"sigma":["1/2","1/3"]}"#).is_err());
}

#[test]
fn sweeps_verify_every_small_game() {
    let report = empirical_bound_sweep(3, &abs(IndexKind::Bz), GameClass::Simple).unwrap();
    assert_eq!(report.games, 18);
    assert_eq!(report.rows.len(), 36);
    assert_eq!(report.zero_total_skipped, 0);
    let max = report.max_ratio.clone().unwrap();
    assert!(max > int(0) && max <= int(1));

    // every row round-trips through the line format
    let jsonl = report.to_jsonl().unwrap();
    assert_eq!(jsonl.lines().count(), 36);
    for line in jsonl.lines() {
        let row: SweepRow = serde_json::from_str(line).unwrap();
        assert_eq!(row.index, "bz");
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["game", "k", "index", "epsilon", "bound", "actual", "ratio"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
    }

    let report = empirical_bound_sweep(4, &abs(IndexKind::Bz), GameClass::Simple).unwrap();
    assert_eq!(report.games, 166);
    assert_eq!(report.rows.len(), 498);

    // vetoless games carry no Tijs mass and sit out; one of the remaining
    // rows is the vetoless up-rounding image without a normalized side
    let report = empirical_bound_sweep(3, &abs(IndexKind::Tijs), GameClass::Simple).unwrap();
    assert!(report.zero_total_skipped > 0);
    assert!(report.normalized_skipped > 0);
    assert_eq!(
        report.games,
        report.zero_total_skipped + report.rows.len() / 2
    );

    // the shift family runs on the complete subset
    let report = empirical_bound_sweep(4, &abs(IndexKind::Shift), GameClass::Simple).unwrap();
    assert_eq!(report.games, 25);
    assert_eq!(report.rows.len(), 3 * 25);
}

#[test]
fn probes_report_displacement_ratios() {
    // at p = 1/2 the probe walks proven ground, so the measured quantities
    // must respect the tabled pair (1, k+1) and the aggregate coefficient
    let report = pk_conjecture_probe(&rat(1, 2), 4, 2, GameClass::Simple).unwrap();
    assert!(report.unbounded.is_none());
    assert!(report.empirical_f1.unwrap() <= int(1));
    assert!(report.empirical_f2.unwrap() <= int(3));
    assert!(report.max_ratio.clone().unwrap() <= int(6));
    assert!(report.witness.is_some());

    // away from 1/2 nothing is proven; the measurements are just recorded
    for n in [3usize, 4] {
        let report = pk_conjecture_probe(&rat(1, 3), n, 1, GameClass::Simple).unwrap();
        assert!(report.unbounded.is_none());
        assert!(report.cases > 0);
        assert!(report.max_ratio.is_some());
    }

    // the Shapley-Shubik index has no proven pair either; probe it under
    // plain majority rounding
    let report = shortening_probe(
        &abs(IndexKind::Ssi),
        &ShorteningId::KRounding { k: 1 },
        3,
        GameClass::Simple,
    )
    .unwrap();
    assert!(report.cases > 0);
    assert!(report.max_ratio.is_some());
    assert!(report.unbounded.is_none());
}
