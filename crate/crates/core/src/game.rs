//! Binary voting games on up to 24 voters: construction, classification,
//! coalition machinery (minimal winning sets, shifts, duals, reduced games),
//! weightedness certificates, and exhaustive enumeration of small game classes.
//!
//! Voter `i` (1-based, as in all public APIs) occupies bit `i-1` of a coalition
//! mask. The winning table is bit-packed so that even n = 24 games stay at 2 MB.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rat::serde_ratio;
use crate::simplex::{Cmp, LinearProgram};
use crate::{Error, Result};

pub const MAX_VOTERS: usize = 24;

/// A coalition as a bitmask; voter i sits on bit i-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(pub u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn full(n: usize) -> Coalition {
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(voter: usize) -> Coalition {
        Coalition(1 << (voter - 1))
    }

    pub fn from_voters<I: IntoIterator<Item = usize>>(voters: I) -> Coalition {
        let mut mask = 0u32;
        for v in voters {
            mask |= 1 << (v - 1);
        }
        Coalition(mask)
    }

    pub fn contains(self, voter: usize) -> bool {
        self.0 >> (voter - 1) & 1 == 1
    }

    pub fn with(self, voter: usize) -> Coalition {
        Coalition(self.0 | 1 << (voter - 1))
    }

    pub fn without(self, voter: usize) -> Coalition {
        Coalition(self.0 & !(1 << (voter - 1)))
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Coalition {
        Coalition(Self::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// Voters of the coalition in increasing order.
    pub fn voters(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=MAX_VOTERS).filter(move |v| mask >> (v - 1) & 1 == 1)
    }
}

impl std::ops::BitOr for Coalition {
    type Output = Coalition;
    fn bitor(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Coalition {
    type Output = Coalition;
    fn bitand(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & rhs.0)
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.voters() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Classification flags; `complete` refers to the canonical voter order
/// 1 ⪰ 2 ⪰ … ⪰ n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameFlags {
    pub boolean: bool,
    pub simple: bool,
    pub complete: bool,
    pub proper: bool,
    pub strong: bool,
}

/// Game classes the enumerator and the CLI understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameClass {
    Boolean,
    Simple,
    Complete,
    Weighted,
}

impl std::str::FromStr for GameClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<GameClass> {
        match s {
            "boolean" => Ok(GameClass::Boolean),
            "simple" => Ok(GameClass::Simple),
            "complete" => Ok(GameClass::Complete),
            "weighted" => Ok(GameClass::Weighted),
            other => Err(Error::InvalidArgument(format!(
                "unknown game class {other:?} (expected boolean|simple|complete|weighted)"
            ))),
        }
    }
}

impl fmt::Display for GameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GameClass::Boolean => "boolean",
            GameClass::Simple => "simple",
            GameClass::Complete => "complete",
            GameClass::Weighted => "weighted",
        };
        write!(f, "{s}")
    }
}

/// A binary game: every coalition is winning (1) or losing (0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Game {
    n: usize,
    /// 2^n winning bits, packed into 64-bit words; coalition mask indexes the bit.
    words: Vec<u64>,
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game(n={}, winning=[", self.n)?;
        let mut first = true;
        for s in self.winning_coalitions() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", s.0)?;
            first = false;
        }
        write!(f, "])")
    }
}

impl Game {
    fn blank(n: usize) -> Result<Game> {
        if n == 0 || n > MAX_VOTERS {
            return Err(Error::VoterCount(n));
        }
        let bits = 1usize << n;
        Ok(Game {
            n,
            words: vec![0; bits.div_ceil(64)],
        })
    }

    /// Game from the list of winning coalition masks.
    pub fn from_winning(n: usize, winning: &[u32]) -> Result<Game> {
        let mut g = Game::blank(n)?;
        for &mask in winning {
            if u64::from(mask) >= 1u64 << n {
                return Err(Error::InvalidArgument(format!(
                    "coalition mask {mask} out of range for n={n}"
                )));
            }
            g.set_win(Coalition(mask), true);
        }
        Ok(g)
    }

    /// Game from a full truth table (index = coalition mask).
    pub fn from_table(n: usize, table: &[bool]) -> Result<Game> {
        if table.len() != 1 << n {
            return Err(Error::InvalidArgument(format!(
                "table length {} does not match n={n}",
                table.len()
            )));
        }
        let mut g = Game::blank(n)?;
        for (mask, &w) in table.iter().enumerate() {
            if w {
                g.set_win(Coalition(mask as u32), true);
            }
        }
        Ok(g)
    }

    /// Weighted game [q; w]: S wins iff w(S) >= q.
    pub fn from_weighted(quota: &BigRational, weights: &[BigRational]) -> Result<Game> {
        let n = weights.len();
        if !quota.is_positive() {
            return Err(Error::InvalidArgument("quota must be positive".into()));
        }
        if weights.iter().any(|w| w < &BigRational::zero()) {
            return Err(Error::InvalidArgument("weights must be nonnegative".into()));
        }
        let total = weights
            .iter()
            .fold(BigRational::zero(), |acc, w| acc + w);
        if &total < quota {
            return Err(Error::InvalidArgument(
                "total weight below quota: the grand coalition would lose".into(),
            ));
        }
        let mut g = Game::blank(n)?;
        // prefix sums over the mask's set bits, reusing lower results
        let mut sums: Vec<BigRational> = Vec::with_capacity(1 << n);
        sums.push(BigRational::zero());
        for mask in 1usize..1 << n {
            let low = mask & (mask - 1); // mask without its lowest set bit
            let bit = mask.trailing_zeros() as usize;
            let s = &sums[low] + &weights[bit];
            if s >= *quota {
                g.set_win(Coalition(mask as u32), true);
            }
            sums.push(s);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_coalitions(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn win(&self, s: Coalition) -> bool {
        self.win_raw(s.0 as usize)
    }

    #[inline]
    pub fn win_raw(&self, mask: usize) -> bool {
        self.words[mask >> 6] >> (mask & 63) & 1 == 1
    }

    pub fn set_win(&mut self, s: Coalition, value: bool) {
        let mask = s.0 as usize;
        if value {
            self.words[mask >> 6] |= 1u64 << (mask & 63);
        } else {
            self.words[mask >> 6] &= !(1u64 << (mask & 63));
        }
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> {
        (0..1u32 << self.n).map(Coalition)
    }

    pub fn winning_coalitions(&self) -> Vec<Coalition> {
        self.coalitions().filter(|&s| self.win(s)).collect()
    }

    pub fn count_winning(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    // ----- classification -----

    pub fn is_boolean(&self) -> bool {
        !self.win(Coalition::EMPTY) && self.win(Coalition::full(self.n))
    }

    /// Monotone under inclusion and boolean.
    pub fn is_simple(&self) -> bool {
        if !self.is_boolean() {
            return false;
        }
        // monotone iff adding any single voter to a winning set keeps it winning
        for mask in 0..self.num_coalitions() {
            if !self.win_raw(mask) {
                continue;
            }
            let absent = !mask & (self.num_coalitions() - 1);
            let mut rest = absent;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !self.win_raw(mask | bit) {
                    return false;
                }
                rest ^= bit;
            }
        }
        true
    }

    /// Voter i is at least as desirable as voter j: swapping j for i never
    /// hurts a coalition containing neither.
    pub fn desirability_ge(&self, i: usize, j: usize) -> bool {
        let bi = 1usize << (i - 1);
        let bj = 1usize << (j - 1);
        for mask in 0..self.num_coalitions() {
            if mask & bi != 0 || mask & bj != 0 {
                continue;
            }
            if self.win_raw(mask | bj) && !self.win_raw(mask | bi) {
                return false;
            }
        }
        true
    }

    /// Complete in the canonical order: simple, with 1 ⪰ 2 ⪰ … ⪰ n.
    /// (Desirability is transitive on simple games, so consecutive pairs
    /// suffice; the test suite cross-checks against the all-pairs version.)
    pub fn is_complete(&self) -> bool {
        self.is_simple() && (1..self.n).all(|i| self.desirability_ge(i, i + 1))
    }

    /// Complete after *some* relabeling: the desirability relation is total.
    /// This is the label-free property; it is what weightedness requires.
    pub fn is_complete_up_to_relabeling(&self) -> bool {
        self.complete_relabeling().is_some()
    }

    /// A desirability-nonincreasing ordering of the voters, when one exists.
    /// Returns `perm` with `perm[new_position] = old_voter` (1-based voters).
    pub fn complete_relabeling(&self) -> Option<Vec<usize>> {
        if !self.is_simple() {
            return None;
        }
        let n = self.n;
        let mut ge = vec![vec![false; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    ge[i][j] = self.desirability_ge(i, j);
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                if !ge[i][j] && !ge[j][i] {
                    return None;
                }
            }
        }
        let mut perm: Vec<usize> = (1..=n).collect();
        // total preorder: count of dominated voters sorts it
        perm.sort_by_key(|&i| std::cmp::Reverse(ge[i].iter().filter(|&&b| b).count()));
        Some(perm)
    }

    pub fn is_proper(&self) -> bool {
        let full = self.num_coalitions() - 1;
        (0..self.num_coalitions()).all(|mask| !self.win_raw(mask) || !self.win_raw(full ^ mask))
    }

    pub fn is_strong(&self) -> bool {
        let full = self.num_coalitions() - 1;
        (0..self.num_coalitions()).all(|mask| self.win_raw(mask) || self.win_raw(full ^ mask))
    }

    pub fn classify(&self) -> GameFlags {
        GameFlags {
            boolean: self.is_boolean(),
            simple: self.is_simple(),
            complete: self.is_complete(),
            proper: self.is_proper(),
            strong: self.is_strong(),
        }
    }

    /// Some(false) if every coalition loses, Some(true) if every coalition
    /// wins, None otherwise. The two constants are the only non-boolean
    /// games a rounding can produce.
    pub fn constant_value(&self) -> Option<bool> {
        match self.count_winning() {
            0 => Some(false),
            c if c == self.num_coalitions() => Some(true),
            _ => None,
        }
    }

    // ----- structure -----

    pub fn minimal_winning(&self) -> Result<Vec<Coalition>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        Ok(self.minimal_winning_unchecked())
    }

    pub(crate) fn minimal_winning_unchecked(&self) -> Vec<Coalition> {
        let mut out = Vec::new();
        'outer: for mask in 1..self.num_coalitions() {
            if !self.win_raw(mask) {
                continue;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if self.win_raw(mask ^ bit) {
                    continue 'outer;
                }
                rest ^= bit;
            }
            out.push(Coalition(mask as u32));
        }
        out
    }

    pub fn maximal_losing(&self) -> Result<Vec<Coalition>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let full = self.num_coalitions() - 1;
        let mut out = Vec::new();
        'outer: for mask in 0..self.num_coalitions() {
            if self.win_raw(mask) {
                continue;
            }
            let mut absent = !mask & full;
            while absent != 0 {
                let bit = absent & absent.wrapping_neg();
                if !self.win_raw(mask | bit) {
                    continue 'outer;
                }
                absent ^= bit;
            }
            out.push(Coalition(mask as u32));
        }
        Ok(out)
    }

    /// Winning coalitions whose direct right-shifts (replace voter i by i+1
    /// when i+1 is absent; drop voter n) are all losing.
    pub fn shift_minimal_winning(&self) -> Result<Vec<Coalition>> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        let n = self.n;
        let mut out = Vec::new();
        'outer: for mask in 1..self.num_coalitions() {
            if !self.win_raw(mask) {
                continue;
            }
            for i in 1..n {
                let bi = 1usize << (i - 1);
                let bnext = bi << 1;
                if mask & bi != 0 && mask & bnext == 0 && self.win_raw(mask ^ bi | bnext) {
                    continue 'outer;
                }
            }
            let bn = 1usize << (n - 1);
            if mask & bn != 0 && self.win_raw(mask ^ bn) {
                continue 'outer;
            }
            out.push(Coalition(mask as u32));
        }
        Ok(out)
    }

    /// Losing coalitions whose direct left-shifts (replace voter i by i-1
    /// when i-1 is absent; add voter n) are all winning.
    pub fn shift_maximal_losing(&self) -> Result<Vec<Coalition>> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        let n = self.n;
        let mut out = Vec::new();
        'outer: for mask in 0..self.num_coalitions() {
            if self.win_raw(mask) {
                continue;
            }
            for i in 2..=n {
                let bi = 1usize << (i - 1);
                let bprev = bi >> 1;
                if mask & bi != 0 && mask & bprev == 0 && !self.win_raw(mask ^ bi | bprev) {
                    continue 'outer;
                }
            }
            let bn = 1usize << (n - 1);
            if mask & bn == 0 && !self.win_raw(mask | bn) {
                continue 'outer;
            }
            out.push(Coalition(mask as u32));
        }
        Ok(out)
    }

    pub fn dual(&self) -> Game {
        let full = self.num_coalitions() - 1;
        let mut g = Game::blank(self.n).expect("same voter count");
        for mask in 0..self.num_coalitions() {
            if !self.win_raw(full ^ mask) {
                g.set_win(Coalition(mask as u32), true);
            }
        }
        g
    }

    /// The game with voters relabeled: value at S = original value at tau(S),
    /// tau given 1-based as tau[i-1] = image of voter i.
    pub fn permuted(&self, tau: &[usize]) -> Game {
        assert_eq!(tau.len(), self.n);
        let mut g = Game::blank(self.n).expect("same voter count");
        for mask in 0..self.num_coalitions() {
            let mut image = 0usize;
            for i in 1..=self.n {
                if mask >> (i - 1) & 1 == 1 {
                    image |= 1 << (tau[i - 1] - 1);
                }
            }
            if self.win_raw(image) {
                g.set_win(Coalition(mask as u32), true);
            }
        }
        g
    }

    /// The residual game on voters (k, n] once A ⊆ [k] is fixed present and
    /// the rest of [k] fixed absent.
    pub fn reduced_game(&self, a: Coalition, k: usize) -> Result<ReducedGame> {
        if k == 0 || k >= self.n {
            return Err(Error::InvalidArgument(format!(
                "k={k} must satisfy 0 < k < n={}",
                self.n
            )));
        }
        if !a.is_subset_of(Coalition::full(k)) {
            return Err(Error::InvalidArgument(format!(
                "coalition {a} is not within the first {k} voters"
            )));
        }
        let ocean = self.n - k;
        let mut table = Game::blank(ocean)?;
        let mut count = 0usize;
        for b in 0..1usize << ocean {
            if self.win_raw(a.0 as usize | b << k) {
                table.set_win(Coalition(b as u32), true);
                count += 1;
            }
        }
        Ok(if count == 0 {
            ReducedGame::AllLosing
        } else if count == 1 << ocean {
            ReducedGame::AllWinning
        } else {
            ReducedGame::Proper(table)
        })
    }

    pub fn null_voters(&self) -> Result<Vec<usize>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let mut nulls = Vec::new();
        'voters: for i in 1..=self.n {
            let bi = 1usize << (i - 1);
            for mask in 0..self.num_coalitions() {
                if mask & bi == 0 && self.win_raw(mask | bi) && !self.win_raw(mask) {
                    continue 'voters;
                }
            }
            nulls.push(i);
        }
        Ok(nulls)
    }

    pub fn vetoers(&self) -> Result<Vec<usize>> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let full = self.num_coalitions() - 1;
        Ok((1..=self.n)
            .filter(|i| !self.win_raw(full ^ (1 << (i - 1))))
            .collect())
    }

    /// Delete the null voters, keeping the relative order of the rest.
    pub fn remove_null_voters(&self) -> Result<Game> {
        let nulls = self.null_voters()?;
        if nulls.len() == self.n {
            return Err(Error::InvalidArgument(
                "all voters are null; no game remains".into(),
            ));
        }
        let kept: Vec<usize> = (1..=self.n).filter(|i| !nulls.contains(i)).collect();
        let mut g = Game::blank(kept.len())?;
        for mask in 0..1usize << kept.len() {
            let mut old = 0usize;
            for (newi, &oldv) in kept.iter().enumerate() {
                if mask >> newi & 1 == 1 {
                    old |= 1 << (oldv - 1);
                }
            }
            if self.win_raw(old) {
                g.set_win(Coalition(mask as u32), true);
            }
        }
        Ok(g)
    }

    /// Exact-rational feasibility over the minimal-winning / maximal-losing
    /// system: w(S) >= q on minimal winning, w(T) <= q - 1 on maximal losing,
    /// w >= 0, q >= 1. Totality of the desirability relation is necessary for
    /// weightedness, so anything else short-circuits to None.
    pub fn is_weighted(&self) -> Option<WeightedRepr> {
        if !self.is_complete_up_to_relabeling() {
            return None;
        }
        let n = self.n;
        let q = n; // variable layout: w_1..w_n then q
        let mut lp = LinearProgram::new(n + 1);
        for s in self.minimal_winning_unchecked() {
            let mut terms: Vec<(usize, BigRational)> =
                s.voters().map(|v| (v - 1, BigRational::one())).collect();
            terms.push((q, -BigRational::one()));
            lp.push_sparse(&terms, Cmp::Ge, BigRational::zero());
        }
        for t in self.maximal_losing().expect("simple was checked") {
            let mut terms: Vec<(usize, BigRational)> =
                t.voters().map(|v| (v - 1, -BigRational::one())).collect();
            terms.push((q, BigRational::one()));
            lp.push_sparse(&terms, Cmp::Ge, BigRational::one());
        }
        lp.push_sparse(&[(q, BigRational::one())], Cmp::Ge, BigRational::one());
        let point = lp.feasible_point()?;
        let repr = WeightedRepr {
            quota: point[q].clone(),
            weights: point[..n].to_vec(),
        };
        debug_assert_eq!(
            &Game::from_weighted(&repr.quota, &repr.weights).expect("valid repr"),
            self
        );
        Some(repr)
    }
}

/// `[q; w]` with the integer-separated convention: winning needs w(S) >= q,
/// losing stays at w(T) <= q - 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedRepr {
    #[serde(with = "serde_ratio")]
    pub quota: BigRational,
    #[serde(with = "serde_ratio::vec")]
    pub weights: Vec<BigRational>,
}

impl WeightedRepr {
    pub fn to_game(&self) -> Result<Game> {
        Game::from_weighted(&self.quota, &self.weights)
    }
}

impl fmt::Display for WeightedRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", crate::rat::format_rational(&self.quota))?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", crate::rat::format_rational(w))?;
        }
        write!(f, "]")
    }
}

/// What remains of a game once the first k voters' membership is fixed.
#[derive(Debug, Clone, PartialEq)]
pub enum ReducedGame {
    AllLosing,
    AllWinning,
    Proper(Game),
}

// ----- serde -----

#[derive(Serialize, Deserialize)]
struct GameRepr {
    n: usize,
    winning: Vec<u32>,
}

impl Serialize for Game {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GameRepr {
            n: self.n,
            winning: self.winning_coalitions().iter().map(|c| c.0).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Game {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Game, D::Error> {
        let repr = GameRepr::deserialize(de)?;
        Game::from_winning(repr.n, &repr.winning).map_err(serde::de::Error::custom)
    }
}

// ----- enumeration -----

/// All labeled games of the class. Simple games come from the monotone-function
/// recursion (a function on k variables is an ordered pair of pointwise-comparable
/// functions on k-1 variables) with the two constants stripped; complete and
/// weighted games by filtering.
pub fn enumerate_games(n: usize, class: GameClass) -> Result<Vec<Game>> {
    let limit = match class {
        GameClass::Boolean => 4,
        _ => 5,
    };
    if n == 0 || n > limit {
        return Err(Error::EnumerationLimit(n, class.to_string()));
    }
    match class {
        GameClass::Boolean => {
            // free bits: every coalition except the fixed empty (0) and full (1)
            let free = (1usize << n) - 2;
            let mut out = Vec::with_capacity(1 << free);
            for code in 0..1usize << free {
                let mut g = Game::blank(n)?;
                g.set_win(Coalition::full(n), true);
                for (bit, mask) in (1..(1usize << n) - 1).enumerate() {
                    if code >> bit & 1 == 1 {
                        g.set_win(Coalition(mask as u32), true);
                    }
                }
                out.push(g);
            }
            Ok(out)
        }
        GameClass::Simple => Ok(monotone_tables(n)
            .into_iter()
            .filter(|&t| t & 1 == 0 && t >> ((1usize << n) - 1) & 1 == 1)
            .map(|t| {
                let mut g = Game::blank(n).expect("n checked");
                for mask in 0..1usize << n {
                    if t >> mask & 1 == 1 {
                        g.set_win(Coalition(mask as u32), true);
                    }
                }
                g
            })
            .collect()),
        GameClass::Complete => Ok(enumerate_games(n, GameClass::Simple)?
            .into_iter()
            .filter(|g| g.is_complete_up_to_relabeling())
            .collect()),
        GameClass::Weighted => Ok(enumerate_games(n, GameClass::Simple)?
            .into_iter()
            .filter(|g| g.is_weighted().is_some())
            .collect()),
    }
}

/// Monotone 0/1 functions on n <= 5 variables as truth-table bitmasks.
fn monotone_tables(n: usize) -> Vec<u64> {
    let mut tables: Vec<u64> = vec![0, 1];
    for k in 1..=n {
        let half = 1u32 << (k - 1);
        let mut next = Vec::new();
        for &f0 in &tables {
            for &f1 in &tables {
                if f0 & !f1 == 0 {
                    next.push(f0 | f1 << half);
                }
            }
        }
        tables = next;
    }
    tables
}
