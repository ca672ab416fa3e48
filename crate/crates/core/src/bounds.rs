//! Rounding-error machinery. A shortening that keeps only the first k voters
//! can only move a power index so far: if the voters beyond k carry at most an
//! ε-fraction of the total power, a pair of quality functions (f1, f2) turns ε
//! into exact bounds on the per-voter and total displacement. The same
//! machinery yields unconditional lower bounds on how well *any* game of a
//! class can match a prescribed power distribution whose mass sits on the
//! first k voters.
//!
//! Everything here works in exact rational arithmetic; the sweep and probe
//! operations enumerate whole game classes and check the inequalities against
//! brute force.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::game::{enumerate_games, Game, GameClass};
use crate::Result;
use crate::indices::{power_index, IndexId, IndexKind};
use crate::rat::{format_rational, int, l1_distance, rat, serde_ratio, total};
use crate::shortening::ShorteningId;

// ---------------------------------------------------------------------------
// quality functions
// ---------------------------------------------------------------------------

/// Quality functions of an index for its tabled shortening map (majority
/// rounding, or up-rounding for Tijs). With `t = Σ_{i>k} P_i(g) = ε·ΣP(g)`,
/// the shortened game Γg satisfies
///
///   |P_i(Γg) − P_i(g)| ≤ f1(k)·t   for every voter i ≤ k, and
///   |ΣP(Γg) − ΣP(g)|  ≤ f2(k)·t.
///
/// Where no sharper f2 is tabled, the canonical value k·f1(k)+1 applies.
#[derive(Debug, Clone)]
pub struct QualityFunctions {
    kind: IndexKind,
    /// Largest over smallest semivalue weight; 1 for every other index.
    spread: BigRational,
}

impl QualityFunctions {
    /// Look up the quality functions of an index, rejecting the ones that
    /// have none: the Johnston index defeats every shortening map, p-binomial
    /// indices with p ≠ 1/2 defeat majority rounding, and the
    /// Koenig-Braeuninger/Nevison/Chow families sit in a fixed band on every
    /// game, so rounding bounds would say nothing about them.
    pub fn for_index(id: &IndexId) -> Result<QualityFunctions> {
        use IndexKind::*;
        let name = id.kind.to_string();
        let spread = match &id.kind {
            Js => {
                return Err(Error::UnsupportedIndex(
                    name,
                    "no shortening map admits quality functions for it".into(),
                ))
            }
            Ssi => {
                return Err(Error::UnsupportedIndex(
                    name,
                    "no quality functions are known for it".into(),
                ))
            }
            Kb | Phi | Chow => {
                return Err(Error::UnsupportedIndex(
                    name,
                    "the index is confined to a narrow band on every game, so \
                     rounding bounds carry no information"
                        .into(),
                ))
            }
            PBinomial(p) => {
                if *p != rat(1, 2) {
                    return Err(Error::UnsupportedIndex(
                        name,
                        "majority rounding admits no quality functions unless p = 1/2".into(),
                    ));
                }
                BigRational::one()
            }
            Semivalue(w) => {
                let c1 = w.iter().min().cloned().unwrap_or_else(BigRational::zero);
                let c2 = w.iter().max().cloned().unwrap_or_else(BigRational::zero);
                if !c1.is_positive() {
                    return Err(Error::UnsupportedIndex(
                        name,
                        "quality functions need strictly positive semivalue weights".into(),
                    ));
                }
                c2 / c1
            }
            _ => BigRational::one(),
        };
        Ok(QualityFunctions {
            kind: id.kind.clone(),
            spread,
        })
    }

    pub fn kind(&self) -> &IndexKind {
        &self.kind
    }

    /// Per-voter displacement factor.
    pub fn f1(&self, k: usize) -> BigRational {
        use IndexKind::*;
        let k = k as i64;
        match &self.kind {
            Tijs => BigRational::zero(),
            Bz | Swing | Rae => BigRational::one(),
            Semivalue(_) | PBinomial(_) => self.spread.clone(),
            ColPrev | ColIni => int(2),
            Pgi => int(k + 1),
            Dp => int(k + 2),
            Shift => rat(k + 3, 2),
            Sdp => int(2 * k + 1),
            Ssi | Js | Kb | Phi | Chow => unreachable!("rejected at construction"),
        }
    }

    /// Total-displacement factor: the tabled value where one exists, else the
    /// canonical k·f1(k)+1.
    pub fn f2(&self, k: usize) -> BigRational {
        let ki = k as i64;
        match &self.kind {
            IndexKind::Semivalue(_) | IndexKind::PBinomial(_) => &self.spread * int(ki + 1),
            IndexKind::Pgi => rat((ki + 1) * (ki + 5), 4),
            IndexKind::Dp => rat(ki * ki + 6 * ki + 9, 4),
            _ => int(ki) * self.f1(k) + BigRational::one(),
        }
    }

    /// The shortening map the table pairs with this index: up-rounding for
    /// Tijs (vetoers survive it unchanged), majority rounding for the rest.
    pub fn shortening(&self, k: usize) -> ShorteningId {
        match self.kind {
            IndexKind::Tijs => ShorteningId::KUpRounding { k },
            _ => ShorteningId::KRounding { k },
        }
    }
}

/// Tabled quality-function pair (f1(k), f2(k)) for an index.
pub fn quality(id: &IndexId, k: usize) -> Result<(BigRational, BigRational)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let qf = QualityFunctions::for_index(id)?;
    Ok((qf.f1(k), qf.f2(k)))
}

// ---------------------------------------------------------------------------
// the tail-mass hypothesis
// ---------------------------------------------------------------------------

/// Tight ε for the cut after voter k: the fraction of the total absolute
/// power carried by voters k+1..n. The normalization switch of `id` is
/// irrelevant because the ratio is scale-free.
pub fn epsilon_of(g: &Game, k: usize, id: &IndexId) -> Result<BigRational> {
    if k == 0 || k >= g.n() {
        return Err(Error::InvalidArgument(format!(
            "k={k} must satisfy 0 < k < n={}",
            g.n()
        )));
    }
    let p = power_index(g, &IndexId::absolute(id.kind.clone()))?;
    if p.values.iter().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument(
            "the rounding-error hypothesis needs a nonnegative power vector".into(),
        ));
    }
    let tot = p.total();
    if tot.is_zero() {
        return Err(Error::NormalizationOfZero);
    }
    Ok(total(&p.values[k..]) / tot)
}

// ---------------------------------------------------------------------------
// distance bounds for shortened games
// ---------------------------------------------------------------------------

/// Both sides of the two displacement theorems for one game, cut, and index.
#[derive(Debug, Clone)]
pub struct TheoremBounds {
    pub k: usize,
    pub shortening: ShorteningId,
    pub epsilon: BigRational,
    /// (k·f1(k)+1)·ε·ΣP(g).
    pub absolute_bound: BigRational,
    /// ‖P(Γg) − P(g)‖₁ computed directly.
    pub actual_absolute: BigRational,
    /// (f2(k)+k·f1(k)+1)·ε; `None` when the shortened game has no
    /// normalized vector to compare against.
    pub normalized_bound: Option<BigRational>,
    pub actual_normalized: Option<BigRational>,
}

/// Shorten `g` at cut `k` with the index's tabled map and compare the moved
/// power vector against the proven bounds. The absolute comparison always
/// happens; the normalized one is skipped when the shortened game's absolute
/// vector has total zero, which covers the two constant tables (their power
/// is zero by convention) and vetoless up-rounding images of Tijs.
///
/// The inequalities are theorems, so the function asserts them; a violation
/// is a bug, not an error value. Only monotone games enter the framework.
pub fn main_theorem_bounds(g: &Game, k: usize, id: &IndexId) -> Result<TheoremBounds> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let qf = QualityFunctions::for_index(id)?;
    let shortening = qf.shortening(k);
    shortening.validate(g.n())?;
    let abs = IndexId::absolute(id.kind.clone());
    let p = power_index(g, &abs)?;
    let tot = p.total();
    if tot.is_zero() {
        return Err(Error::NormalizationOfZero);
    }
    let epsilon = total(&p.values[k..]) / &tot;
    let f1 = qf.f1(k);
    let f2 = qf.f2(k);

    let gamma = shortening.apply(g)?;
    let shortened = match gamma.constant_value() {
        Some(_) => vec![BigRational::zero(); g.n()],
        None => power_index(&gamma, &abs)?.values,
    };

    let absolute_bound = (int(k as i64) * &f1 + BigRational::one()) * &epsilon * &tot;
    let actual_absolute = l1_distance(&shortened, &p.values);
    assert!(
        actual_absolute <= absolute_bound,
        "{} moved by {} > bound {} under {} on {:?}",
        qf.kind,
        format_rational(&actual_absolute),
        format_rational(&absolute_bound),
        shortening,
        g
    );

    let gamma_total = total(&shortened);
    let (normalized_bound, actual_normalized) = if gamma_total.is_zero() {
        (None, None)
    } else {
        let ph: Vec<BigRational> = p.values.iter().map(|x| x / &tot).collect();
        let gh: Vec<BigRational> = shortened.iter().map(|x| x / &gamma_total).collect();
        let bound = (&f2 + int(k as i64) * &f1 + BigRational::one()) * &epsilon;
        let actual = l1_distance(&gh, &ph);
        assert!(
            actual <= bound,
            "normalized {} moved by {} > bound {} under {} on {:?}",
            qf.kind,
            format_rational(&actual),
            format_rational(&bound),
            shortening,
            g
        );
        (Some(bound), Some(actual))
    };

    Ok(TheoremBounds {
        k,
        shortening,
        epsilon,
        absolute_bound,
        actual_absolute,
        normalized_bound,
        actual_normalized,
    })
}

/// Check the per-voter and total displacement inequalities directly, without
/// forming ε as a quotient: with t = Σ_{i>k} P_i(g),
/// |P_i(Γg) − P_i(g)| ≤ f1(k)·t for each i ≤ k and |ΣP(Γg) − ΣP(g)| ≤ f2(k)·t.
pub fn local_bounds_hold(g: &Game, k: usize, id: &IndexId) -> Result<bool> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let qf = QualityFunctions::for_index(id)?;
    let shortening = qf.shortening(k);
    shortening.validate(g.n())?;
    let abs = IndexId::absolute(id.kind.clone());
    let p = power_index(g, &abs)?;
    let tail = total(&p.values[k..]);
    let gamma = shortening.apply(g)?;
    let shortened = match gamma.constant_value() {
        Some(_) => vec![BigRational::zero(); g.n()],
        None => power_index(&gamma, &abs)?.values,
    };
    let f1_slack = qf.f1(k) * &tail;
    let per_voter = (0..k).all(|i| (&shortened[i] - &p.values[i]).abs() <= f1_slack);
    let aggregate = (total(&shortened) - p.total()).abs() <= qf.f2(k) * &tail;
    Ok(per_voter && aggregate)
}

// ---------------------------------------------------------------------------
// lower bounds for the inverse problem
// ---------------------------------------------------------------------------

/// A desired power distribution: nonnegative rationals summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTarget {
    sigma: Vec<BigRational>,
}

impl SigmaTarget {
    pub fn new(sigma: Vec<BigRational>) -> Result<SigmaTarget> {
        if sigma.is_empty() {
            return Err(Error::InvalidArgument(
                "a target distribution needs at least one voter".into(),
            ));
        }
        if sigma.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(
                "target entries must be nonnegative".into(),
            ));
        }
        let sum = total(&sigma);
        if !sum.is_one() {
            return Err(Error::InvalidArgument(format!(
                "target entries must sum to 1, got {}",
                format_rational(&sum)
            )));
        }
        Ok(SigmaTarget { sigma })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.sigma
    }
}

#[derive(Serialize, Deserialize)]
struct SigmaRepr {
    sigma: Vec<String>,
}

impl Serialize for SigmaTarget {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SigmaRepr {
            sigma: self.sigma.iter().map(format_rational).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SigmaTarget {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<SigmaTarget, D::Error> {
        let repr = SigmaRepr::deserialize(de)?;
        let sigma: Result<Vec<BigRational>> = repr
            .sigma
            .iter()
            .map(|s| crate::rat::parse_rational(s))
            .collect();
        SigmaTarget::new(sigma.map_err(D::Error::custom)?).map_err(D::Error::custom)
    }
}

/// True when the framework covers the game for this index: the game must be
/// monotone, and the shift family additionally needs the canonical complete
/// order. Games outside this set have no index value to compare.
fn framework_admits(kind: &IndexKind, g: &Game) -> bool {
    g.is_simple() && (!matches!(kind.domain(), GameClass::Complete) || g.is_complete())
}

/// Λ: the least L1 distance from `sigma_prefix` to the normalized index
/// vector of any k-voter game of the class (exhaustive, so k ≤ 5). Games on
/// which the index is undefined are left out; a game whose absolute vector
/// vanishes counts with the zero vector, at distance ‖σ′‖₁.
pub fn lambda_min(
    sigma_prefix: &[BigRational],
    class: GameClass,
    k: usize,
    id: &IndexId,
) -> Result<BigRational> {
    if k == 0 || k != sigma_prefix.len() {
        return Err(Error::InvalidArgument(format!(
            "the target prefix has {} entries but k = {k}",
            sigma_prefix.len()
        )));
    }
    if sigma_prefix.iter().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument(
            "target entries must be nonnegative".into(),
        ));
    }
    id.kind.validate_params(k)?;
    let abs = IndexId::absolute(id.kind.clone());
    let mut best: Option<BigRational> = None;
    for g in enumerate_games(k, class)? {
        if !framework_admits(&id.kind, &g) {
            continue;
        }
        let p = power_index(&g, &abs)?;
        let tot = p.total();
        let d = if tot.is_zero() {
            total(sigma_prefix)
        } else {
            let ph: Vec<BigRational> = p.values.iter().map(|x| x / &tot).collect();
            l1_distance(sigma_prefix, &ph)
        };
        best = Some(match best {
            Some(b) => b.min(d),
            None => d,
        });
    }
    best.ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no {k}-voter {class} game admits the index {}",
            id.kind
        ))
    })
}

/// Unconditional lower bound on ‖P̂(g) − σ‖₁ over every n-voter game of the
/// class, where P̂ is the normalized index. Writing σ′ for the first k
/// entries, α = 1 − ‖σ′‖₁ and β = f2(k)+k·f1(k)+1, the bound is
///
///   min{ 2·(1/f2(k) − α),  (2/(β+2))·Λ − ((2β+2)/(β+2))·α },
///
/// valid whenever min{(Λ+α)/(β+2), 1/f2(k)} ≥ α; the function errors when
/// that precondition fails. Λ is the `lambda_min` of σ′ extended by the two
/// k-voter constant tables, which sit at distance ‖σ′‖₁ (their power vector
/// is zero by convention); adjoining them can only lower Λ, so the bound
/// stays valid. When σ vanishes beyond voter k the expression collapses to
/// min{2/f2(k), 2Λ/(β+2)} and the precondition always holds.
///
/// The argument needs a positive index with the null-voter property whose
/// normalized vector survives null-voter deletion. Tijs fails positivity
/// (vetoless games get the zero vector), Rae hands null voters 1/2 instead
/// of 0, and the rest of the rejections have no quality functions at all.
/// The count-of-swings index enters through its normalized form, which
/// coincides with the normalized Banzhaf index.
pub fn approximation_lower_bound(
    sigma: &SigmaTarget,
    k: usize,
    id: &IndexId,
    class: GameClass,
) -> Result<BigRational> {
    let n = sigma.n();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "k={k} must satisfy 0 < k < n={n}"
        )));
    }
    match &id.kind {
        IndexKind::Tijs => {
            return Err(Error::UnsupportedIndex(
                id.kind.to_string(),
                "the vector vanishes on vetoless games, so the index is not positive".into(),
            ))
        }
        IndexKind::Rae => {
            return Err(Error::UnsupportedIndex(
                id.kind.to_string(),
                "null voters keep power 1/2, so the null-voter property fails".into(),
            ))
        }
        _ => {}
    }
    let qf = QualityFunctions::for_index(id)?;
    id.kind.validate_params(n)?;

    let f1 = qf.f1(k);
    let f2 = qf.f2(k);
    let beta = &f2 + int(k as i64) * &f1 + BigRational::one();
    let sigma_prefix = &sigma.values()[..k];
    let prefix_mass = total(sigma_prefix);
    let alpha = BigRational::one() - &prefix_mass;

    // The index instance living on k-voter games: deleting the n−k tail
    // voters reshapes a semivalue weight vector and fixes everything else.
    let kind_k = id.kind.after_null_removal(n - k)?;
    let lam = lambda_min(sigma_prefix, class, k, &IndexId::absolute(kind_k))?.min(prefix_mass);

    let inv_f2 = BigRational::one() / &f2;
    let two = int(2);
    let precondition = ((&lam + &alpha) / (&beta + &two)).min(inv_f2.clone());
    if precondition < alpha {
        return Err(Error::InvalidArgument(format!(
            "lower-bound precondition fails: min{{(Λ+α)/(β+2), 1/f2}} = {} < α = {}",
            format_rational(&precondition),
            format_rational(&alpha)
        )));
    }

    let arm_constant = &two * (&inv_f2 - &alpha);
    let arm_lambda =
        (&two / (&beta + &two)) * &lam - ((&two * &beta + &two) / (&beta + &two)) * &alpha;
    Ok(arm_constant.min(arm_lambda))
}

// ---------------------------------------------------------------------------
// exhaustive verification
// ---------------------------------------------------------------------------

/// One verified comparison of the absolute displacement bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub game: Game,
    pub k: usize,
    pub index: String,
    #[serde(with = "serde_ratio")]
    pub epsilon: BigRational,
    #[serde(with = "serde_ratio")]
    pub bound: BigRational,
    #[serde(with = "serde_ratio")]
    pub actual: BigRational,
    /// actual/bound; absent when the bound is zero (then actual is zero too).
    #[serde(with = "serde_ratio::opt")]
    pub ratio: Option<BigRational>,
}

/// Outcome of an exhaustive displacement-bound sweep.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub n: usize,
    pub index: String,
    /// Games of the class the framework admits for this index.
    pub games: usize,
    /// Games whose absolute power vector is identically zero; the hypothesis
    /// says nothing about them.
    pub zero_total_skipped: usize,
    /// (game, k) rows whose normalized comparison had to be skipped.
    pub normalized_skipped: usize,
    pub rows: Vec<SweepRow>,
    /// Largest actual/bound across all rows with a nonzero bound.
    pub max_ratio: Option<BigRational>,
}

impl SweepReport {
    /// One JSON object per row, newline-separated.
    pub fn to_jsonl(&self) -> Result<String> {
        let mut lines = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            lines.push(serde_json::to_string(row)?);
        }
        Ok(lines.join("\n"))
    }
}

/// Run `main_theorem_bounds` for every admissible game of the class and
/// every cut 1 ≤ k < n. Both inequalities are asserted on every row, so a
/// violation aborts loudly; the report records how tight the absolute bound
/// got. Games run in parallel.
pub fn empirical_bound_sweep(n: usize, id: &IndexId, class: GameClass) -> Result<SweepReport> {
    let games: Vec<Game> = enumerate_games(n, class)?
        .into_iter()
        .filter(|g| framework_admits(&id.kind, g))
        .collect();
    let name = id.kind.to_string();

    let per_game: Result<Vec<(Vec<SweepRow>, usize, bool)>> = games
        .par_iter()
        .map(|g| {
            let mut rows = Vec::with_capacity(n - 1);
            let mut skipped = 0usize;
            for k in 1..n {
                match main_theorem_bounds(g, k, id) {
                    Ok(tb) => {
                        let ratio = if tb.absolute_bound.is_zero() {
                            None
                        } else {
                            Some(&tb.actual_absolute / &tb.absolute_bound)
                        };
                        if tb.normalized_bound.is_none() {
                            skipped += 1;
                        }
                        rows.push(SweepRow {
                            game: g.clone(),
                            k,
                            index: name.clone(),
                            epsilon: tb.epsilon,
                            bound: tb.absolute_bound,
                            actual: tb.actual_absolute,
                            ratio,
                        });
                    }
                    // the game's total power is zero for every cut alike
                    Err(Error::NormalizationOfZero) => return Ok((Vec::new(), 0, true)),
                    Err(e) => return Err(e),
                }
            }
            Ok((rows, skipped, false))
        })
        .collect();

    let mut report = SweepReport {
        n,
        index: name,
        games: games.len(),
        zero_total_skipped: 0,
        normalized_skipped: 0,
        rows: Vec::new(),
        max_ratio: None,
    };
    for (rows, skipped, zero_total) in per_game? {
        if zero_total {
            report.zero_total_skipped += 1;
        }
        report.normalized_skipped += skipped;
        for row in rows {
            if let Some(r) = &row.ratio {
                report.max_ratio = Some(match report.max_ratio.take() {
                    Some(m) => m.max(r.clone()),
                    None => r.clone(),
                });
            }
            report.rows.push(row);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// probes for shortenings without proven bounds
// ---------------------------------------------------------------------------

/// Measured (never asserted) displacement statistics of a shortening map
/// against one index over an enumerated class.
#[derive(Debug, Clone)]
pub struct ProbeReport {
    /// Games with a well-defined hypothesis (positive total power).
    pub cases: usize,
    pub zero_total_skipped: usize,
    /// sup ‖P̂(Γg) − P̂(g)‖₁ / ε over games with ε > 0 and a normalizable
    /// shortened vector.
    pub max_ratio: Option<BigRational>,
    /// A game attaining `max_ratio`.
    pub witness: Option<Game>,
    /// sup over voters i ≤ k of |P_i(Γg) − P_i(g)| / (ε·ΣP(g)): the least f1
    /// any quality pair for this map could have.
    pub empirical_f1: Option<BigRational>,
    /// Same for the total: the least admissible f2.
    pub empirical_f2: Option<BigRational>,
    /// A game that moved although its tail mass was zero. Such a game would
    /// rule out quality functions altogether; `None` expected.
    pub unbounded: Option<Game>,
}

/// Measure how far `shortening` moves `id` across every admissible game of
/// the class. Nothing is asserted: the point is exploring maps and indices
/// without proven bounds.
pub fn shortening_probe(
    id: &IndexId,
    shortening: &ShorteningId,
    n: usize,
    class: GameClass,
) -> Result<ProbeReport> {
    shortening.validate(n)?;
    id.kind.validate_params(n)?;
    let k = shortening.k();
    let abs = IndexId::absolute(id.kind.clone());
    let games: Vec<Game> = enumerate_games(n, class)?
        .into_iter()
        .filter(|g| framework_admits(&id.kind, g))
        .collect();

    struct Sample {
        zero_total: bool,
        ratio: Option<BigRational>,
        f1: Option<BigRational>,
        f2: Option<BigRational>,
        moved_without_tail: bool,
    }

    let samples: Result<Vec<(Sample, &Game)>> = games
        .par_iter()
        .map(|g| {
            let p = power_index(g, &abs)?;
            let tot = p.total();
            if tot.is_zero() {
                return Ok((
                    Sample {
                        zero_total: true,
                        ratio: None,
                        f1: None,
                        f2: None,
                        moved_without_tail: false,
                    },
                    g,
                ));
            }
            let tail = total(&p.values[k..]);
            let gamma = shortening.apply(g)?;
            let shortened = match gamma.constant_value() {
                Some(_) => vec![BigRational::zero(); g.n()],
                None => power_index(&gamma, &abs)?.values,
            };
            let moved = l1_distance(&shortened, &p.values);
            if tail.is_zero() {
                return Ok((
                    Sample {
                        zero_total: false,
                        ratio: None,
                        f1: None,
                        f2: None,
                        moved_without_tail: !moved.is_zero(),
                    },
                    g,
                ));
            }
            let f1 = (0..k)
                .map(|i| (&shortened[i] - &p.values[i]).abs() / &tail)
                .max();
            let f2 = Some((total(&shortened) - &tot).abs() / &tail);
            let gamma_total = total(&shortened);
            let ratio = if gamma_total.is_zero() {
                None
            } else {
                let eps = &tail / &tot;
                let ph: Vec<BigRational> = p.values.iter().map(|x| x / &tot).collect();
                let gh: Vec<BigRational> = shortened.iter().map(|x| x / &gamma_total).collect();
                Some(l1_distance(&gh, &ph) / eps)
            };
            Ok((
                Sample {
                    zero_total: false,
                    ratio,
                    f1,
                    f2,
                    moved_without_tail: false,
                },
                g,
            ))
        })
        .collect();

    let mut report = ProbeReport {
        cases: 0,
        zero_total_skipped: 0,
        max_ratio: None,
        witness: None,
        empirical_f1: None,
        empirical_f2: None,
        unbounded: None,
    };
    for (s, g) in samples? {
        if s.zero_total {
            report.zero_total_skipped += 1;
            continue;
        }
        report.cases += 1;
        if s.moved_without_tail && report.unbounded.is_none() {
            report.unbounded = Some(g.clone());
        }
        if let Some(r) = s.ratio {
            if report.max_ratio.as_ref().is_none_or(|m| r > *m) {
                report.max_ratio = Some(r);
                report.witness = Some(g.clone());
            }
        }
        for (slot, v) in [
            (&mut report.empirical_f1, s.f1),
            (&mut report.empirical_f2, s.f2),
        ] {
            if let Some(v) = v {
                if slot.as_ref().is_none_or(|m| v > *m) {
                    *slot = Some(v);
                }
            }
        }
    }
    Ok(report)
}

/// Probe the p-binomial index under (p,k)-rounding, the pairing conjectured
/// to admit quality functions for every p. At p = 1/2 it coincides with the
/// proven majority-rounding setup, so the ratios must respect those bounds;
/// elsewhere the numbers are reported as evidence only.
pub fn pk_conjecture_probe(
    p: &BigRational,
    n: usize,
    k: usize,
    class: GameClass,
) -> Result<ProbeReport> {
    let id = IndexId::absolute(IndexKind::PBinomial(p.clone()));
    let shortening = ShorteningId::PkRounding { p: p.clone(), k };
    shortening_probe(&id, &shortening, n, class)
}
