//! Shortenings: maps that collapse a game onto its first k voters.
//!
//! A game is *k-pure* when every voter past position k is irrelevant, i.e.
//! the winning status of A ∪ B with A ⊆ [k], B ⊆ (k,n] depends on A alone.
//! A shortening produces a k-pure game while leaving every block whose
//! reduced game was already trivial untouched. Three concrete maps live
//! here: k-rounding (majority vote over each reduced block, ties lose),
//! (p,k)-rounding (threshold p·2^(n-k) instead of a majority), and
//! k-up-rounding (a block wins as soon as it contains a single winner).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::fmt;

use crate::game::{Coalition, Game};
use crate::{Error, Result};

/// Selects one of the three shortening maps together with its cut k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShorteningId {
    /// Block becomes winning iff more than half of its reduced game wins.
    KRounding { k: usize },
    /// Block becomes winning iff more than p·2^(n-k) of its reduced game wins.
    PkRounding { p: BigRational, k: usize },
    /// Block becomes winning iff its reduced game wins anywhere.
    KUpRounding { k: usize },
}

impl ShorteningId {
    pub fn k(&self) -> usize {
        match self {
            ShorteningId::KRounding { k }
            | ShorteningId::PkRounding { k, .. }
            | ShorteningId::KUpRounding { k } => *k,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let k = self.k();
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "cut k={k} must satisfy 0 < k < n={n}"
            )));
        }
        if let ShorteningId::PkRounding { p, .. } = self {
            if p <= &BigRational::zero() || p >= &BigRational::one() {
                return Err(Error::InvalidArgument(format!(
                    "threshold p={p} must lie strictly between 0 and 1"
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, g: &Game) -> Result<Game> {
        match self {
            ShorteningId::KRounding { k } => k_rounding(g, *k),
            ShorteningId::PkRounding { p, k } => pk_rounding(g, p, *k),
            ShorteningId::KUpRounding { k } => k_up_rounding(g, *k),
        }
    }
}

impl fmt::Display for ShorteningId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShorteningId::KRounding { k } => write!(f, "{k}-rounding"),
            ShorteningId::PkRounding { p, k } => write!(f, "({p},{k})-rounding"),
            ShorteningId::KUpRounding { k } => write!(f, "{k}-up-rounding"),
        }
    }
}

/// Which tie a k-rounding block resolves to when exactly half of its
/// reduced game wins. `Losing` is the standard rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieRule {
    Losing,
    Winning,
}

// Any table is admitted, not just boolean games: the two constants must be
// fixed points (their blocks are all trivial), which keeps the rounded
// classes closed under a second application.
fn check_cut(g: &Game, k: usize) -> Result<()> {
    if k == 0 || k >= g.n() {
        return Err(Error::InvalidArgument(format!(
            "cut k={k} must satisfy 0 < k < n={}",
            g.n()
        )));
    }
    Ok(())
}

/// Per-block winner tallies: counts[a] = |{B ⊆ (k,n] : A ∪ B winning}| for
/// the block mask a over the first k voters.
fn block_tallies(g: &Game, k: usize) -> Vec<usize> {
    let blocks = 1usize << k;
    let ocean = 1usize << (g.n() - k);
    let tally = |a: usize| (0..ocean).filter(|b| g.win_raw(a | b << k)).count();
    if g.n() > 16 {
        (0..blocks).into_par_iter().map(tally).collect()
    } else {
        (0..blocks).map(tally).collect()
    }
}

fn from_block_decisions(n: usize, k: usize, wins: &[bool]) -> Game {
    let mut out = Game::from_winning(n, &[]).expect("voter count already validated");
    for (a, &w) in wins.iter().enumerate() {
        if w {
            for b in 0..1usize << (n - k) {
                out.set_win(Coalition((a | b << k) as u32), true);
            }
        }
    }
    out
}

/// Majority rounding with an explicit tie rule; blocks with exactly half
/// their reduced game winning go to `ties`.
pub fn k_rounding_with(g: &Game, k: usize, ties: TieRule) -> Result<Game> {
    check_cut(g, k)?;
    let half = 1usize << (g.n() - k - 1);
    let wins: Vec<bool> = block_tallies(g, k)
        .into_iter()
        .map(|c| c > half || (ties == TieRule::Winning && c == half))
        .collect();
    Ok(from_block_decisions(g.n(), k, &wins))
}

/// Rounds each reduced block to the majority of its entries, ties losing.
/// The output is k-pure but may be one of the two constant games; callers
/// can detect that through [`Game::constant_value`].
pub fn k_rounding(g: &Game, k: usize) -> Result<Game> {
    k_rounding_with(g, k, TieRule::Losing)
}

/// Rounds each reduced block against the threshold p·2^(n-k); a block with
/// tally at or below the threshold loses. At p = 1/2 this is `k_rounding`.
pub fn pk_rounding(g: &Game, p: &BigRational, k: usize) -> Result<Game> {
    check_cut(g, k)?;
    if p <= &BigRational::zero() || p >= &BigRational::one() {
        return Err(Error::InvalidArgument(format!(
            "threshold p={p} must lie strictly between 0 and 1"
        )));
    }
    let threshold = p * BigRational::from_integer(BigInt::from(1usize << (g.n() - k)));
    let wins: Vec<bool> = block_tallies(g, k)
        .into_iter()
        .map(|c| BigRational::from_integer(BigInt::from(c)) > threshold)
        .collect();
    Ok(from_block_decisions(g.n(), k, &wins))
}

/// Rounds each reduced block up: one winning entry makes the whole block win.
pub fn k_up_rounding(g: &Game, k: usize) -> Result<Game> {
    check_cut(g, k)?;
    let wins: Vec<bool> = block_tallies(g, k).into_iter().map(|c| c > 0).collect();
    Ok(from_block_decisions(g.n(), k, &wins))
}

/// Which class memberships survive a k-rounding of this concrete game.
/// Each field is None when the premise fails (the input is not in the
/// class), otherwise Some(membership of the rounded game). `boolean`
/// follows the special rule: its premise is that the rounded game keeps
/// the empty coalition losing and the grand coalition winning.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub boolean: Option<bool>,
    pub simple: Option<bool>,
    pub complete: Option<bool>,
    pub weighted: Option<bool>,
    pub proper: Option<bool>,
    pub strong: Option<bool>,
}

impl PreservationReport {
    /// True when no implication is violated, i.e. every premise that holds
    /// comes with a holding conclusion.
    pub fn all_hold(&self) -> bool {
        [
            self.boolean,
            self.simple,
            self.complete,
            self.weighted,
            self.proper,
            self.strong,
        ]
        .iter()
        .all(|f| f.unwrap_or(true))
    }
}

/// Evaluates, for this game and cut, the class-preservation implications of
/// k-rounding: boolean endpoints, simple, complete, weighted, proper, and
/// strong-given-simple. The rounded game must not be constant.
pub fn check_preservation(g: &Game, k: usize) -> Result<PreservationReport> {
    let rounded = k_rounding(g, k)?;
    if rounded.constant_value().is_some() {
        return Err(Error::InvalidArgument(
            "k-rounding collapsed the game to a constant; no class survives".into(),
        ));
    }
    let endpoints_ok =
        !rounded.win(Coalition::EMPTY) && rounded.win(Coalition::full(rounded.n()));
    Ok(PreservationReport {
        boolean: endpoints_ok.then(|| rounded.is_boolean()),
        simple: g.is_simple().then(|| rounded.is_simple()),
        complete: g.is_complete().then(|| rounded.is_complete()),
        weighted: (g.is_simple() && g.is_weighted().is_some())
            .then(|| rounded.is_weighted().is_some()),
        proper: g.is_proper().then(|| rounded.is_proper()),
        strong: (g.is_strong() && g.is_simple()).then(|| rounded.is_strong()),
    })
}
