//! Power indices in exact rational arithmetic.
//!
//! Each index aggregates per-coalition contributions: swings weighted by
//! coalition size (Shapley-Shubik, semivalues), plain swing counts and their
//! rescalings (Banzhaf, the two Coleman measures), winning-set counts (Rae,
//! Koenig-Braeuninger, Public Help, Chow parameters), critical-voter shares
//! (Johnston), and (shift-)minimal winning coalition counts (Public Good,
//! Deegan-Packel, Shift, Shift-Deegan-Packel). `counting_value` exposes the
//! per-coalition contribution itself; `power_index` sums it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::game::{Coalition, Game, GameClass};
use crate::rat::{binomial, factorial, format_rational, parse_rational, pow, rat};
use crate::{Error, Result};

/// The family of supported power indices. Parametric members carry their
/// parameters: a semivalue its full weight vector, a p-binomial semivalue the
/// success probability p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexKind {
    /// Shapley-Shubik index (signed marginal contributions).
    Ssi,
    /// Tijs index: indicator of being a vetoer.
    Tijs,
    /// Semivalue with an explicit weight vector p_0..p_{n-1}.
    Semivalue(Vec<BigRational>),
    /// p-binomial semivalue, weights p^j (1-p)^{n-1-j}.
    PBinomial(BigRational),
    /// Absolute Banzhaf index, swings / 2^{n-1}.
    Bz,
    /// Raw number of swings.
    Swing,
    /// Coleman's power of a member to prevent action, swings / |W|.
    ColPrev,
    /// Coleman's power of a member to initiate action, swings / |L|.
    ColIni,
    /// Rae index: agreement probability with the outcome.
    Rae,
    /// Koenig-Braeuninger inclusiveness, |W_i| / |W|.
    Kb,
    /// Public Help index, |W_i| / sum_j |W_j|.
    Phi,
    /// Chow parameter, the raw count |W_i|.
    Chow,
    /// Absolute Johnston index: equal shares among critical voters.
    Js,
    /// Absolute Public Good (Holler) index, |W^m_i|.
    Pgi,
    /// Absolute Deegan-Packel index, sum of 1/|S| over minimal winning S with i.
    Dp,
    /// Absolute Shift index, |W^sm_i|.
    Shift,
    /// Absolute Shift-Deegan-Packel index, sum of 1/|S| over shift-minimal S.
    Sdp,
}

impl IndexKind {
    /// The widest class of games the index is defined on. Value-derived and
    /// winning-set-based indices live on boolean games; swing- and minimal-
    /// winning-based ones need monotonicity; the shift family needs complete
    /// games in the canonical voter order.
    pub fn domain(&self) -> GameClass {
        use IndexKind::*;
        match self {
            Ssi | Semivalue(_) | PBinomial(_) | Rae | Kb | Phi | Chow | Js => GameClass::Boolean,
            Tijs | Bz | Swing | ColPrev | ColIni | Pgi | Dp => GameClass::Simple,
            Shift | Sdp => GameClass::Complete,
        }
    }

    fn admit(&self, g: &Game) -> Result<()> {
        match self.domain() {
            GameClass::Boolean if !g.is_boolean() => Err(Error::NotBoolean),
            GameClass::Simple if !g.is_simple() => Err(Error::NotSimple),
            GameClass::Complete if !g.is_complete() => Err(Error::NotComplete),
            _ => Ok(()),
        }
    }

    /// Check the parameter constraints against a voter count: a semivalue
    /// weight vector must have length n, nonnegative entries, and satisfy
    /// sum_j p_j * C(n-1,j) = 1; a p-binomial parameter must lie strictly
    /// between 0 and 1.
    pub fn validate_params(&self, n: usize) -> Result<()> {
        match self {
            IndexKind::Semivalue(p) => {
                if p.len() != n {
                    return Err(Error::InvalidArgument(format!(
                        "semivalue weight vector has length {} but the game has {} voters",
                        p.len(),
                        n
                    )));
                }
                if p.iter().any(|x| x.is_negative()) {
                    return Err(Error::InvalidArgument(
                        "semivalue weights must be nonnegative".into(),
                    ));
                }
                let mut sum = BigRational::zero();
                for (j, pj) in p.iter().enumerate() {
                    sum += pj * BigRational::from_integer(binomial(n - 1, j));
                }
                if !sum.is_one() {
                    return Err(Error::InvalidArgument(format!(
                        "semivalue weights must satisfy sum p_j C(n-1,j) = 1, got {}",
                        format_rational(&sum)
                    )));
                }
                Ok(())
            }
            IndexKind::PBinomial(p) => {
                if p <= &BigRational::zero() || p >= &BigRational::one() {
                    return Err(Error::InvalidArgument(format!(
                        "p-binomial parameter must lie strictly between 0 and 1, got {}",
                        format_rational(p)
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// The index instance that applies after deleting `removed` null voters.
    /// A semivalue weight vector shrinks by merging adjacent entries
    /// (p'_j = p_j + p_{j+1}); every other member of the family keeps its
    /// identity across voter counts.
    pub fn after_null_removal(&self, removed: usize) -> Result<IndexKind> {
        match self {
            IndexKind::Semivalue(p) => {
                if removed >= p.len() {
                    return Err(Error::InvalidArgument(format!(
                        "cannot drop {} voters from a {}-voter semivalue",
                        removed,
                        p.len()
                    )));
                }
                let mut p = p.clone();
                for _ in 0..removed {
                    for j in 0..p.len() - 1 {
                        p[j] = &p[j] + &p[j + 1];
                    }
                    p.pop();
                }
                Ok(IndexKind::Semivalue(p))
            }
            other => Ok(other.clone()),
        }
    }

    fn base_name(&self) -> &'static str {
        use IndexKind::*;
        match self {
            Ssi => "ssi",
            Tijs => "tijs",
            Semivalue(_) => "semivalue",
            PBinomial(_) => "pbinomial",
            Bz => "bz",
            Swing => "swing",
            ColPrev => "colprev",
            ColIni => "colini",
            Rae => "rae",
            Kb => "kb",
            Phi => "phi",
            Chow => "chow",
            Js => "js",
            Pgi => "pgi",
            Dp => "dp",
            Shift => "shift",
            Sdp => "sdp",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Semivalue(p) => {
                let parts: Vec<String> = p.iter().map(format_rational).collect();
                write!(f, "semivalue({})", parts.join(","))
            }
            IndexKind::PBinomial(p) => write!(f, "pbinomial({})", format_rational(p)),
            other => f.write_str(other.base_name()),
        }
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexKind> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let close = s
                    .rfind(')')
                    .ok_or_else(|| Error::InvalidArgument(format!("unbalanced '(' in {s:?}")))?;
                (&s[..open], Some(&s[open + 1..close]))
            }
            None => (s, None),
        };
        let kind = match (name, args) {
            ("ssi", None) => IndexKind::Ssi,
            ("tijs", None) => IndexKind::Tijs,
            ("bz", None) => IndexKind::Bz,
            ("swing", None) => IndexKind::Swing,
            ("colprev", None) => IndexKind::ColPrev,
            ("colini", None) => IndexKind::ColIni,
            ("rae", None) => IndexKind::Rae,
            ("kb", None) => IndexKind::Kb,
            ("phi", None) => IndexKind::Phi,
            ("chow", None) => IndexKind::Chow,
            ("js", None) => IndexKind::Js,
            ("pgi", None) => IndexKind::Pgi,
            ("dp", None) => IndexKind::Dp,
            ("shift", None) => IndexKind::Shift,
            ("sdp", None) => IndexKind::Sdp,
            ("pbinomial", Some(a)) => IndexKind::PBinomial(parse_rational(a)?),
            ("semivalue", Some(a)) => {
                let weights: Result<Vec<BigRational>> =
                    a.split(',').map(|x| parse_rational(x.trim())).collect();
                IndexKind::Semivalue(weights?)
            }
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown power index {s:?}"
                )))
            }
        };
        Ok(kind)
    }
}

/// An index together with the normalization switch: `normalized` divides the
/// absolute vector by its total so the result sums to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexId {
    pub kind: IndexKind,
    pub normalized: bool,
}

impl IndexId {
    pub fn absolute(kind: IndexKind) -> IndexId {
        IndexId {
            kind,
            normalized: false,
        }
    }

    pub fn normalized(kind: IndexKind) -> IndexId {
        IndexId {
            kind,
            normalized: true,
        }
    }
}

/// The weight vector that makes a semivalue coincide with the Shapley-Shubik
/// index on n voters: p_j = 1 / (n * C(n-1,j)).
pub fn ssi_weights(n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|j| {
            BigRational::new(
                BigInt::from(1),
                BigInt::from(n as u64) * binomial(n - 1, j),
            )
        })
        .collect()
}

/// A power distribution attached to the index that produced it. Entry i-1
/// belongs to voter i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerVector {
    pub index: IndexId,
    pub values: Vec<BigRational>,
}

impl PowerVector {
    pub fn total(&self) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Value of a 1-based voter.
    pub fn value(&self, voter: usize) -> &BigRational {
        &self.values[voter - 1]
    }
}

impl fmt::Display for PowerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct PowerVectorRepr {
    index: String,
    normalized: bool,
    values: Vec<String>,
}

impl Serialize for PowerVector {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PowerVectorRepr {
            index: self.index.kind.to_string(),
            normalized: self.index.normalized,
            values: self.values.iter().map(format_rational).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PowerVector {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<PowerVector, D::Error> {
        let repr = PowerVectorRepr::deserialize(de)?;
        let kind: IndexKind = repr.index.parse().map_err(D::Error::custom)?;
        let values: Result<Vec<BigRational>> =
            repr.values.iter().map(|s| parse_rational(s)).collect();
        Ok(PowerVector {
            index: IndexId {
                kind,
                normalized: repr.normalized,
            },
            values: values.map_err(D::Error::custom)?,
        })
    }
}

// ---------------------------------------------------------------------------
// swing census
// ---------------------------------------------------------------------------

/// Integer counts collected in one sweep over all coalitions: |W|, the
/// per-voter |W_i|, swings split by coalition size and sign of the marginal,
/// and per-voter histograms of the critical-set size of winning coalitions.
struct Census {
    n: usize,
    winning: u64,
    winning_with: Vec<u64>,
    // pos[(i-1)*(n+1) + s]: coalitions S with |S|=s, i in S, v(S)=1, v(S-i)=0
    pos: Vec<u64>,
    // same with the roles of winning and losing exchanged (negative marginal)
    neg: Vec<u64>,
    // crit[(i-1)*(n+1) + c]: winning S where i is critical and S has c critical voters
    crit: Vec<u64>,
}

impl Census {
    fn zero(n: usize) -> Census {
        Census {
            n,
            winning: 0,
            winning_with: vec![0; n],
            pos: vec![0; n * (n + 1)],
            neg: vec![0; n * (n + 1)],
            crit: vec![0; n * (n + 1)],
        }
    }

    fn absorb(&mut self, g: &Game, mask: usize) {
        let n = self.n;
        let s = mask.count_ones() as usize;
        if g.win_raw(mask) {
            self.winning += 1;
            let mut crit_bits = 0usize;
            let mut m = mask;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                let i = bit.trailing_zeros() as usize;
                self.winning_with[i] += 1;
                if !g.win_raw(mask ^ bit) {
                    self.pos[i * (n + 1) + s] += 1;
                    crit_bits |= bit;
                }
                m ^= bit;
            }
            let c = crit_bits.count_ones() as usize;
            let mut m = crit_bits;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                let i = bit.trailing_zeros() as usize;
                self.crit[i * (n + 1) + c] += 1;
                m ^= bit;
            }
        } else {
            let mut m = mask;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                let i = bit.trailing_zeros() as usize;
                if g.win_raw(mask ^ bit) {
                    self.neg[i * (n + 1) + s] += 1;
                }
                m ^= bit;
            }
        }
    }

    fn merge(mut self, other: Census) -> Census {
        self.winning += other.winning;
        for (a, b) in self.winning_with.iter_mut().zip(&other.winning_with) {
            *a += b;
        }
        for (a, b) in self.pos.iter_mut().zip(&other.pos) {
            *a += b;
        }
        for (a, b) in self.neg.iter_mut().zip(&other.neg) {
            *a += b;
        }
        for (a, b) in self.crit.iter_mut().zip(&other.crit) {
            *a += b;
        }
        self
    }

    fn swings(&self, i: usize) -> u64 {
        (1..=self.n).map(|s| self.pos[(i - 1) * (self.n + 1) + s]).sum()
    }
}

fn swing_census(g: &Game) -> Census {
    let size = g.num_coalitions();
    if g.n() <= 16 {
        let mut c = Census::zero(g.n());
        for mask in 0..size {
            c.absorb(g, mask);
        }
        c
    } else {
        (0..size)
            .into_par_iter()
            .with_min_len(1 << 14)
            .fold(
                || Census::zero(g.n()),
                |mut c, mask| {
                    c.absorb(g, mask);
                    c
                },
            )
            .reduce(|| Census::zero(g.n()), Census::merge)
    }
}

// ---------------------------------------------------------------------------
// index evaluation
// ---------------------------------------------------------------------------

fn ssi_size_weight(n: usize, s: usize) -> BigRational {
    BigRational::new(factorial(s - 1) * factorial(n - s), factorial(n))
}

fn pbinomial_size_weight(p: &BigRational, n: usize, s: usize) -> BigRational {
    pow(p, s - 1) * pow(&(BigRational::one() - p), n - s)
}

/// Sum the signed swing counts against a size-dependent weight.
fn weighted_marginal_sum<F: Fn(usize) -> BigRational>(census: &Census, weight: F) -> Vec<BigRational> {
    let n = census.n;
    (1..=n)
        .map(|i| {
            let mut acc = BigRational::zero();
            for s in 1..=n {
                let p = census.pos[(i - 1) * (n + 1) + s];
                let q = census.neg[(i - 1) * (n + 1) + s];
                if p != q {
                    let diff = BigInt::from(p as i64 - q as i64);
                    acc += BigRational::from_integer(diff) * weight(s);
                }
            }
            acc
        })
        .collect()
}

fn absolute_values(g: &Game, kind: &IndexKind) -> Result<Vec<BigRational>> {
    let n = g.n();
    use IndexKind::*;
    let values = match kind {
        Ssi => weighted_marginal_sum(&swing_census(g), |s| ssi_size_weight(n, s)),
        Semivalue(p) => weighted_marginal_sum(&swing_census(g), |s| p[s - 1].clone()),
        PBinomial(p) => weighted_marginal_sum(&swing_census(g), |s| pbinomial_size_weight(p, n, s)),
        Bz | Swing | ColPrev | ColIni => {
            let census = swing_census(g);
            let denom: Option<BigInt> = match kind {
                Bz => Some(BigInt::from(1u64 << (n - 1))),
                ColPrev => {
                    if census.winning == 0 {
                        return Err(Error::InvalidArgument(
                            "no winning coalitions; prevention shares undefined".into(),
                        ));
                    }
                    Some(BigInt::from(census.winning))
                }
                ColIni => {
                    let losing = (1u64 << n) - census.winning;
                    if losing == 0 {
                        return Err(Error::InvalidArgument(
                            "no losing coalitions; initiation shares undefined".into(),
                        ));
                    }
                    Some(BigInt::from(losing))
                }
                _ => None,
            };
            (1..=n)
                .map(|i| {
                    let eta = BigInt::from(census.swings(i));
                    match &denom {
                        Some(d) => BigRational::new(eta, d.clone()),
                        None => BigRational::from_integer(eta),
                    }
                })
                .collect()
        }
        Rae => {
            let census = swing_census(g);
            let half = 1u64 << (n - 1);
            (1..=n)
                .map(|i| {
                    let agree = 2 * census.winning_with[i - 1] + half - census.winning;
                    BigRational::new(BigInt::from(agree), BigInt::from(1u64 << n))
                })
                .collect()
        }
        Kb | Phi | Chow => {
            let census = swing_census(g);
            let denom: Option<BigInt> = match kind {
                Kb => Some(BigInt::from(census.winning)),
                Phi => Some(BigInt::from(census.winning_with.iter().sum::<u64>())),
                _ => None,
            };
            (1..=n)
                .map(|i| {
                    let wi = BigInt::from(census.winning_with[i - 1]);
                    match &denom {
                        Some(d) => BigRational::new(wi, d.clone()),
                        None => BigRational::from_integer(wi),
                    }
                })
                .collect()
        }
        Js => {
            let census = swing_census(g);
            (1..=n)
                .map(|i| {
                    let mut acc = BigRational::zero();
                    for c in 1..=n {
                        let count = census.crit[(i - 1) * (n + 1) + c];
                        if count != 0 {
                            acc += rat(count as i64, c as i64);
                        }
                    }
                    acc
                })
                .collect()
        }
        Tijs => {
            let vetoers = g.vetoers()?;
            (1..=n)
                .map(|i| {
                    if vetoers.contains(&i) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        }
        Pgi | Dp => per_voter_coalition_shares(n, &g.minimal_winning()?, matches!(kind, Dp)),
        Shift | Sdp => per_voter_coalition_shares(n, &g.shift_minimal_winning()?, matches!(kind, Sdp)),
    };
    Ok(values)
}

/// Count memberships in the listed coalitions, either plainly or with each
/// coalition contributing 1/|S| to its members.
fn per_voter_coalition_shares(n: usize, sets: &[Coalition], share: bool) -> Vec<BigRational> {
    let mut values = vec![BigRational::zero(); n];
    for &s in sets {
        let contribution = if share {
            rat(1, s.size() as i64)
        } else {
            BigRational::one()
        };
        for i in s.voters() {
            values[i - 1] += &contribution;
        }
    }
    values
}

/// Evaluate an index on a game. The game must lie in the index's domain
/// (`IndexKind::domain`), and parametric indices must carry parameters valid
/// for the game's voter count. With `normalized` set, the absolute vector is
/// divided by its total; a zero (or negative) total is an error.
///
/// Note the Tijs index follows the veto definition directly, so it is the one
/// member of the family whose value is not the coalition-wise sum of
/// `counting_value` on every game: the two agree exactly when the game has a
/// unique minimal winning coalition.
pub fn power_index(g: &Game, id: &IndexId) -> Result<PowerVector> {
    id.kind.validate_params(g.n())?;
    id.kind.admit(g)?;
    let values = absolute_values(g, &id.kind)?;
    let values = if id.normalized {
        normalized_values(values)?
    } else {
        values
    };
    Ok(PowerVector {
        index: id.clone(),
        values,
    })
}

fn normalized_values(values: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let total = values.iter().fold(BigRational::zero(), |a, b| a + b);
    if !total.is_positive() {
        return Err(Error::NormalizationOfZero);
    }
    Ok(values.into_iter().map(|v| v / &total).collect())
}

/// Rescale a power vector so it sums to one. Errors when the total is zero
/// (for instance the Tijs vector of a game without vetoers) or negative.
pub fn normalize(v: &PowerVector) -> Result<PowerVector> {
    Ok(PowerVector {
        index: IndexId {
            kind: v.index.kind.clone(),
            normalized: true,
        },
        values: normalized_values(v.values.clone())?,
    })
}

// ---------------------------------------------------------------------------
// counting values
// ---------------------------------------------------------------------------

/// The per-coalition contribution of voter `i` at coalition `s`, i.e. the
/// underlying counting function evaluated at one point. Summed over all
/// coalitions this reproduces `power_index` for every index except Tijs,
/// whose tabulated counting function only charges the unique minimal winning
/// coalition when there is exactly one.
///
/// With `normalized` set, the contribution is divided by the total mass of
/// the counting function on the game, mirroring the normalized index.
pub fn counting_value(g: &Game, id: &IndexId, voter: usize, s: Coalition) -> Result<BigRational> {
    id.kind.validate_params(g.n())?;
    id.kind.admit(g)?;
    if voter == 0 || voter > g.n() {
        return Err(Error::InvalidArgument(format!(
            "voter {voter} out of range 1..={}",
            g.n()
        )));
    }
    if !s.is_subset_of(Coalition::full(g.n())) {
        return Err(Error::InvalidArgument(format!(
            "coalition {s} mentions voters beyond {}",
            g.n()
        )));
    }
    let raw = raw_counting_value(g, &id.kind, voter, s)?;
    if !id.normalized {
        return Ok(raw);
    }
    let mass = match id.kind {
        // the tabulated Tijs counting function has total mass |T| when a
        // unique minimal winning coalition T exists and 0 otherwise
        IndexKind::Tijs => match g.minimal_winning()?.as_slice() {
            [t] => BigRational::from_integer(BigInt::from(t.size() as u64)),
            _ => BigRational::zero(),
        },
        _ => absolute_values(g, &id.kind)?
            .iter()
            .fold(BigRational::zero(), |a, b| a + b),
    };
    if !mass.is_positive() {
        return Err(Error::NormalizationOfZero);
    }
    Ok(raw / mass)
}

fn raw_counting_value(g: &Game, kind: &IndexKind, i: usize, s: Coalition) -> Result<BigRational> {
    let n = g.n();
    use IndexKind::*;

    let positive_swing = s.contains(i) && g.win(s) && !g.win(s.without(i));
    let value = match kind {
        Ssi => {
            if positive_swing {
                ssi_size_weight(n, s.size())
            } else {
                BigRational::zero()
            }
        }
        Semivalue(p) => {
            if positive_swing {
                p[s.size() - 1].clone()
            } else {
                BigRational::zero()
            }
        }
        PBinomial(p) => {
            if positive_swing {
                pbinomial_size_weight(p, n, s.size())
            } else {
                BigRational::zero()
            }
        }
        Bz => {
            if positive_swing {
                BigRational::new(BigInt::one(), BigInt::from(1u64 << (n - 1)))
            } else {
                BigRational::zero()
            }
        }
        Swing => {
            if positive_swing {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }
        ColPrev => {
            if positive_swing {
                let w = g.count_winning();
                if w == 0 {
                    return Err(Error::InvalidArgument(
                        "no winning coalitions; prevention shares undefined".into(),
                    ));
                }
                rat(1, w as i64)
            } else {
                BigRational::zero()
            }
        }
        ColIni => {
            if !s.contains(i) && !g.win(s) && g.win(s.with(i)) {
                let losing = g.num_coalitions() - g.count_winning();
                if losing == 0 {
                    return Err(Error::InvalidArgument(
                        "no losing coalitions; initiation shares undefined".into(),
                    ));
                }
                rat(1, losing as i64)
            } else {
                BigRational::zero()
            }
        }
        Rae => {
            let agrees = if s.contains(i) { g.win(s) } else { !g.win(s) };
            if agrees {
                BigRational::new(BigInt::one(), BigInt::from(g.num_coalitions() as u64))
            } else {
                BigRational::zero()
            }
        }
        Kb => {
            if s.contains(i) && g.win(s) {
                rat(1, g.count_winning() as i64)
            } else {
                BigRational::zero()
            }
        }
        Phi => {
            if s.contains(i) && g.win(s) {
                let mass: usize = g
                    .winning_coalitions()
                    .iter()
                    .map(|w| w.size())
                    .sum();
                rat(1, mass as i64)
            } else {
                BigRational::zero()
            }
        }
        Chow => {
            if s.contains(i) && g.win(s) {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }
        Js => {
            if positive_swing {
                let c = s.voters().filter(|&j| !g.win(s.without(j))).count();
                rat(1, c as i64)
            } else {
                BigRational::zero()
            }
        }
        Tijs => {
            let unique = match g.minimal_winning()?.as_slice() {
                [t] => *t == s,
                _ => false,
            };
            if unique && s.contains(i) {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }
        Pgi | Dp => {
            let minimal =
                s.contains(i) && g.win(s) && s.voters().all(|j| !g.win(s.without(j)));
            if minimal {
                if matches!(kind, Dp) {
                    rat(1, s.size() as i64)
                } else {
                    BigRational::one()
                }
            } else {
                BigRational::zero()
            }
        }
        Shift | Sdp => {
            if s.contains(i) && g.shift_minimal_winning()?.contains(&s) {
                if matches!(kind, Sdp) {
                    rat(1, s.size() as i64)
                } else {
                    BigRational::one()
                }
            } else {
                BigRational::zero()
            }
        }
    };
    Ok(value)
}

// ---------------------------------------------------------------------------
// incremental updates
// ---------------------------------------------------------------------------

/// Update an absolute power vector when a minimal winning coalition `t` of
/// `g` is turned losing, without recomputing from scratch. The index travels
/// with `current` and must be one of swing, Bz, Rae, SSI, p-binomial, Chow,
/// KB, ColPrev, or JS; `current` must equal `power_index(g, current.index)`.
///
/// Swing-weighted indices shift by the weight of the vanished swing at |T|
/// for members and gain the weight of the new swing at |T|+1 for outsiders.
/// KB and ColPrev additionally rescale by |W|/(|W|-1). The Johnston update
/// walks the coalitions T+j whose critical sets grow by j, adjusting the
/// equal shares accordingly.
pub fn update_on_mwc_removal(g: &Game, t: Coalition, current: &PowerVector) -> Result<PowerVector> {
    let id = &current.index;
    if id.normalized {
        return Err(Error::InvalidArgument(
            "incremental updates apply to absolute power vectors only".into(),
        ));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    if current.values.len() != n {
        return Err(Error::InvalidArgument(format!(
            "power vector has {} entries but the game has {} voters",
            current.values.len(),
            n
        )));
    }
    if t == Coalition::full(n) {
        return Err(Error::InvalidArgument(
            "turning the grand coalition losing is not covered by the update rules".into(),
        ));
    }
    if !g.win(t) || t.voters().any(|i| g.win(t.without(i))) {
        return Err(Error::InvalidArgument(format!(
            "{t} is not a minimal winning coalition"
        )));
    }

    let tsz = t.size();
    let mut values = current.values.clone();
    use IndexKind::*;
    match &id.kind {
        Swing | Bz | Rae | Ssi | PBinomial(_) => {
            let (down, up) = match &id.kind {
                Swing => (BigRational::one(), BigRational::one()),
                Bz => {
                    let d = BigRational::new(BigInt::one(), BigInt::from(1u64 << (n - 1)));
                    (d.clone(), d)
                }
                Rae => {
                    let d = BigRational::new(BigInt::one(), BigInt::from(1u64 << n));
                    (d.clone(), d)
                }
                Ssi => (ssi_size_weight(n, tsz), ssi_size_weight(n, tsz + 1)),
                PBinomial(p) => (
                    pbinomial_size_weight(p, n, tsz),
                    pbinomial_size_weight(p, n, tsz + 1),
                ),
                _ => unreachable!(),
            };
            for i in 1..=n {
                if t.contains(i) {
                    values[i - 1] -= &down;
                } else {
                    values[i - 1] += &up;
                }
            }
        }
        Chow => {
            for i in t.voters() {
                values[i - 1] -= BigRational::one();
            }
        }
        Kb | ColPrev => {
            let w = g.count_winning() as i64;
            // t != N and N stays winning, so w >= 2
            let scale = rat(w, w - 1);
            let shift = rat(1, w - 1);
            for i in 1..=n {
                values[i - 1] *= &scale;
                if t.contains(i) {
                    values[i - 1] -= &shift;
                } else if matches!(id.kind, ColPrev) {
                    values[i - 1] += &shift;
                }
            }
        }
        Js => {
            // T itself stops contributing: every member was critical in it.
            let gone = rat(1, tsz as i64);
            for i in t.voters() {
                values[i - 1] -= &gone;
            }
            // In each T+j the outsider j becomes critical once T is losing,
            // so the coalition's equal share spreads over one more voter.
            for j in 1..=n {
                if t.contains(j) {
                    continue;
                }
                let grown = t.with(j);
                let old_crit: Vec<usize> = t
                    .voters()
                    .filter(|&i| !g.win(grown.without(i)))
                    .collect();
                let c = old_crit.len();
                let new_share = rat(1, (c + 1) as i64);
                if c > 0 {
                    let old_share = rat(1, c as i64);
                    for &i in &old_crit {
                        values[i - 1] += &new_share - &old_share;
                    }
                }
                values[j - 1] += &new_share;
            }
        }
        other => {
            return Err(Error::UnsupportedIndex(
                other.to_string(),
                "no incremental update rule for removing a minimal winning coalition".into(),
            ))
        }
    }
    Ok(PowerVector {
        index: id.clone(),
        values,
    })
}

/// The index whose counting function arises from the given one by sharing
/// each coalition's payoff equally among the voters with a positive entry:
/// swing counts become the Johnston index, Public Good becomes Deegan-Packel,
/// and Shift becomes Shift-Deegan-Packel.
pub fn equal_division_transform(kind: &IndexKind) -> Result<IndexKind> {
    match kind {
        IndexKind::Swing => Ok(IndexKind::Js),
        IndexKind::Pgi => Ok(IndexKind::Dp),
        IndexKind::Shift => Ok(IndexKind::Sdp),
        other => Err(Error::UnsupportedIndex(
            other.to_string(),
            "no equal-division counterpart".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// properties
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexProperty {
    /// Invariant under relabeling the voters.
    Symmetric,
    /// Nonnegative entries, not all zero.
    Positive,
    /// Entries sum to one.
    Efficient,
    /// Null voters receive zero.
    NullVoter,
    /// Deleting all null voters leaves the remaining values unchanged.
    NullVoterRemovable,
}

impl fmt::Display for IndexProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexProperty::Symmetric => "symmetric",
            IndexProperty::Positive => "positive",
            IndexProperty::Efficient => "efficient",
            IndexProperty::NullVoter => "null voter",
            IndexProperty::NullVoterRemovable => "null voter removable",
        })
    }
}

/// Outcome of an exhaustive property check; `counterexample` describes the
/// first violating game when the property fails.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl PropertyCheck {
    fn ok() -> PropertyCheck {
        PropertyCheck {
            holds: true,
            counterexample: None,
        }
    }

    fn violated(witness: String) -> PropertyCheck {
        PropertyCheck {
            holds: false,
            counterexample: Some(witness),
        }
    }
}

fn describe_game(g: &Game) -> String {
    let mwcs = g
        .minimal_winning_unchecked()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("game with minimal winning coalitions {mwcs}")
}

/// Decide a property by sweeping every simple game on n voters (restricted to
/// complete games for the shift-based indices). Symmetry quantifies over all
/// relabelings; removability compares against the game with its null voters
/// deleted, with semivalue weight vectors reduced to match. Games where a
/// normalized index is undefined (zero total) are skipped.
///
/// The sweep is exhaustive, so n is capped at 4.
pub fn check_property(id: &IndexId, property: IndexProperty, n: usize) -> Result<PropertyCheck> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive property checks cover 1..=4 voters, got {n}"
        )));
    }
    id.kind.validate_params(n)?;
    let shift_based = matches!(id.kind, IndexKind::Shift | IndexKind::Sdp);
    let permutations: Vec<Vec<usize>> = permutations_of(n);

    for g in crate::game::enumerate_games(n, GameClass::Simple)? {
        if shift_based && !g.is_complete() {
            continue;
        }
        let p = match power_index(&g, id) {
            Ok(p) => p,
            Err(Error::NormalizationOfZero) => continue,
            Err(e) => return Err(e),
        };
        let witness = match property {
            IndexProperty::Symmetric => {
                symmetry_witness(&g, id, &p, &permutations, shift_based)?
            }
            IndexProperty::Positive => {
                if p.values.iter().any(|v| v.is_negative()) {
                    Some(format!("{} has a negative entry {p}", describe_game(&g)))
                } else if p.values.iter().all(|v| v.is_zero()) {
                    Some(format!("{} receives the zero vector", describe_game(&g)))
                } else {
                    None
                }
            }
            IndexProperty::Efficient => {
                if p.total().is_one() {
                    None
                } else {
                    Some(format!(
                        "{} has total {} instead of 1",
                        describe_game(&g),
                        format_rational(&p.total())
                    ))
                }
            }
            IndexProperty::NullVoter => {
                let nulls = g.null_voters()?;
                nulls
                    .iter()
                    .find(|&&i| !p.value(i).is_zero())
                    .map(|&i| {
                        format!(
                            "null voter {i} of {} receives {}",
                            describe_game(&g),
                            format_rational(p.value(i))
                        )
                    })
            }
            IndexProperty::NullVoterRemovable => removal_witness(&g, id, &p, shift_based)?,
        };
        if let Some(w) = witness {
            return Ok(PropertyCheck::violated(w));
        }
    }
    Ok(PropertyCheck::ok())
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).permutations(n).collect()
}

fn symmetry_witness(
    g: &Game,
    id: &IndexId,
    p: &PowerVector,
    permutations: &[Vec<usize>],
    shift_based: bool,
) -> Result<Option<String>> {
    for tau in permutations {
        let h = g.permuted(tau);
        if shift_based && !h.is_complete() {
            continue;
        }
        let q = power_index(&h, id)?;
        // h's voter i plays the role of g's voter tau(i)
        for i in 1..=g.n() {
            if q.value(i) != p.value(tau[i - 1]) {
                return Ok(Some(format!(
                    "relabeling {tau:?} of {} moves voter {}'s value from {} to {}",
                    describe_game(g),
                    tau[i - 1],
                    format_rational(p.value(tau[i - 1])),
                    format_rational(q.value(i))
                )));
            }
        }
    }
    Ok(None)
}

fn removal_witness(
    g: &Game,
    id: &IndexId,
    p: &PowerVector,
    shift_based: bool,
) -> Result<Option<String>> {
    let nulls = g.null_voters()?;
    if nulls.is_empty() || nulls.len() == g.n() {
        return Ok(None);
    }
    let reduced = g.remove_null_voters()?;
    if shift_based && !reduced.is_complete() {
        return Ok(None);
    }
    let reduced_id = IndexId {
        kind: id.kind.after_null_removal(nulls.len())?,
        normalized: id.normalized,
    };
    let q = match power_index(&reduced, &reduced_id) {
        Ok(q) => q,
        Err(Error::NormalizationOfZero) => return Ok(None),
        Err(e) => return Err(e),
    };
    let kept: Vec<usize> = (1..=g.n()).filter(|i| !nulls.contains(i)).collect();
    for (pos, &j) in kept.iter().enumerate() {
        if p.value(j) != &q.values[pos] {
            return Ok(Some(format!(
                "dropping null voters {nulls:?} from {} changes voter {j}'s value from {} to {}",
                describe_game(g),
                format_rational(p.value(j)),
                format_rational(&q.values[pos])
            )));
        }
    }
    Ok(None)
}
