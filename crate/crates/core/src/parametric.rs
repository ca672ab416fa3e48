//! A three-type family of weighted games: k committee voters whose last l
//! members form a pivot bloc T, and n oceanic voters. Winning takes an
//! l-subset of the committee other than T, or T together with at least m
//! oceanic voters. Because T is the only committee coalition whose residual
//! game is undecided, every shortening can only flip the T-block, which
//! makes the family the standard source of counterexamples: closed-form
//! index values exist for the game and for both possible roundings, so the
//! displacement of an index under k-rounding can be evaluated at sizes far
//! beyond any table.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::enclose::{certify_ge, certify_le, exp_enclosure, sqrt_enclosure, Enclosure};
use crate::error::Error;
use crate::game::{Coalition, Game, WeightedRepr};
use crate::rat::{binomial, factorial, int, rat, serde_ratio};
use crate::shortening::ShorteningId;
use crate::Result;

/// Family parameters. The committee is [1, k] with the bloc T = (k−l, k];
/// the oceanic voters are (k, k+n].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametricParams {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl ParametricParams {
    pub fn new(k: usize, l: usize, m: usize, n: usize) -> Result<ParametricParams> {
        let p = ParametricParams { k, l, m, n };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.l < 1 || self.l + 1 > self.k {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= l <= k-1, got l={}, k={}",
                self.l, self.k
            )));
        }
        if self.n < 1 {
            return Err(Error::InvalidArgument("need n >= 1".into()));
        }
        if self.m > self.n + 1 {
            return Err(Error::InvalidArgument(format!(
                "need 0 <= m <= n+1, got m={}, n={}",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// Total number of voters, k + n.
    pub fn voters(&self) -> usize {
        self.k + self.n
    }

    /// The pivot bloc T = (k−l, k] as a mask.
    pub fn t_mask(&self) -> Coalition {
        Coalition((((1u64 << self.l) - 1) << (self.k - self.l)) as u32)
    }
}

impl fmt::Display for ParametricParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(k={}, l={}, m={}, n={})",
            self.k, self.l, self.m, self.n
        )
    }
}

/// Selects one of the three games with closed forms: the family member
/// itself (G1), the rounding that turns every T∪V coalition losing (G2,
/// the member at m = n+1), or the one turning them all winning (G3, the
/// member at m = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    G1,
    G2,
    G3,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::G1 => "g1",
            Which::G2 => "g2",
            Which::G3 => "g3",
        })
    }
}

impl std::str::FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Which> {
        match s.to_ascii_lowercase().as_str() {
            "g1" => Ok(Which::G1),
            "g2" => Ok(Which::G2),
            "g3" => Ok(Which::G3),
            other => Err(Error::InvalidArgument(format!(
                "unknown game selector {other:?}, expected g1, g2, or g3"
            ))),
        }
    }
}

/// One index value per voter type: the committee outside the bloc [1, k−l],
/// the bloc T = (k−l, k], and the oceanic voters (k, k+n].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypedPowerTriple {
    #[serde(with = "serde_ratio")]
    pub type1: BigRational,
    #[serde(with = "serde_ratio")]
    pub type2: BigRational,
    #[serde(with = "serde_ratio")]
    pub type3: BigRational,
}

impl TypedPowerTriple {
    /// The full per-voter vector of length k + n.
    pub fn expand(&self, p: &ParametricParams) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(p.voters());
        v.extend(std::iter::repeat_n(self.type1.clone(), p.k - p.l));
        v.extend(std::iter::repeat_n(self.type2.clone(), p.l));
        v.extend(std::iter::repeat_n(self.type3.clone(), p.n));
        v
    }

    /// Aggregate index mass, respecting the type multiplicities.
    pub fn total(&self, p: &ParametricParams) -> BigRational {
        int((p.k - p.l) as i64) * &self.type1
            + int(p.l as i64) * &self.type2
            + int(p.n as i64) * &self.type3
    }
}

/// Per-type displacement between the family member and one of its two
/// roundings, together with the tail mass ξ (the aggregate oceanic power of
/// the original game, which both roundings wipe out entirely, so that
/// ξ = n·d3 always holds).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeDeltas {
    #[serde(with = "serde_ratio")]
    pub d1: BigRational,
    #[serde(with = "serde_ratio")]
    pub d2: BigRational,
    #[serde(with = "serde_ratio")]
    pub d3: BigRational,
    #[serde(with = "serde_ratio")]
    pub xi: BigRational,
}

/// Displacement of `original` against a rounded variant; the variant must
/// carry no oceanic power.
pub fn type_deltas(
    original: &TypedPowerTriple,
    rounded: &TypedPowerTriple,
    p: &ParametricParams,
) -> Result<TypeDeltas> {
    if !rounded.type3.is_zero() {
        return Err(Error::InvalidArgument(
            "displacement is against a rounded variant, which has no oceanic power".into(),
        ));
    }
    let xi = int(p.n as i64) * &original.type3;
    Ok(TypeDeltas {
        d1: (&original.type1 - &rounded.type1).abs(),
        d2: (&original.type2 - &rounded.type2).abs(),
        d3: (&original.type3 - &rounded.type3).abs(),
        xi,
    })
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

/// Build the explicit table. A coalition S with committee part A = S ∩ [k]
/// wins iff A has an l-subset other than T (equivalently |A| ≥ l and
/// A ≠ T), or A ⊇ T and S has at least m oceanic members.
pub fn build_game(p: &ParametricParams) -> Result<Game> {
    p.validate()?;
    let v = p.voters();
    if v > 20 {
        return Err(Error::InvalidArgument(format!(
            "a table for k+n = {v} voters is past the 2^20 budget"
        )));
    }
    let t = p.t_mask().0;
    let kmask = ((1u64 << p.k) - 1) as u32;
    let mut winning = Vec::new();
    for s in 0..(1u64 << v) as u32 {
        let a = s & kmask;
        let committee = a.count_ones() as usize;
        let ocean = (s >> p.k).count_ones() as usize;
        if (committee >= p.l && a != t) || (a & t == t && ocean >= p.m) {
            winning.push(s);
        }
    }
    Game::from_winning(v, &winning)
}

/// The family is weighted; the representation splits by whether the bloc's
/// oceanic requirement is attainable, trivial, or void.
pub fn weighted_repr(p: &ParametricParams) -> Result<WeightedRepr> {
    p.validate()?;
    let (l, m, n) = (p.l as i64, p.m as i64, p.n as i64);
    let (quota, high, low, ocean) = if p.m == 0 {
        (l, 1, 1, 0)
    } else if p.m == p.n + 1 {
        (l * l + 1, l + 1, l, 0)
    } else {
        let b = (l - 2) * m + n + 1;
        let a = (l - 1) * m + n + 1;
        (l * b + m, a, b, 1)
    };
    let mut weights = Vec::with_capacity(p.voters());
    weights.extend(std::iter::repeat_n(int(high), p.k - p.l));
    weights.extend(std::iter::repeat_n(int(low), p.l));
    weights.extend(std::iter::repeat_n(int(ocean), p.n));
    Ok(WeightedRepr {
        quota: int(quota),
        weights,
    })
}

/// Which closed form k-rounding lands on: G3 when at most half of the
/// oceanic blocks behind T are winning (m ≤ ⌊n/2⌋, ties counted losing),
/// G2 otherwise. Small instances are checked against the actual tables.
pub fn rounding_case(p: &ParametricParams) -> Result<Which> {
    p.validate()?;
    let case = if p.m <= p.n / 2 { Which::G3 } else { Which::G2 };
    if p.voters() <= 12 {
        let m = match case {
            Which::G3 => 0,
            _ => p.n + 1,
        };
        let target = build_game(&ParametricParams { m, ..*p })?;
        let rounded = ShorteningId::KRounding { k: p.k }.apply(&build_game(p)?)?;
        assert_eq!(
            rounded, target,
            "k-rounding of {p} missed its closed-form case"
        );
    }
    Ok(case)
}

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------

fn pow(x: &BigRational, e: usize) -> BigRational {
    x.pow(e as i32)
}

fn rbinom(n: usize, k: usize) -> BigRational {
    BigRational::from(binomial(n, k))
}

/// Binomial tail Σ_{j=from}^{to} C(n,j) p^j (1−p)^{n−j}.
fn binomial_mass(n: usize, from: usize, to: usize, p: &BigRational) -> BigRational {
    let q = BigRational::one() - p;
    let mut sum = BigRational::zero();
    for j in from..=to.min(n) {
        sum += rbinom(n, j) * pow(p, j) * pow(&q, n - j);
    }
    sum
}

/// Binomial semivalue values per voter type. The swings of all three games
/// are committee (l−1)-subsets plus, behind T, oceanic fringes, which is
/// what makes the sums collapse.
pub fn psi_p_closed_form(
    params: &ParametricParams,
    which: Which,
    pval: &BigRational,
) -> Result<TypedPowerTriple> {
    params.validate()?;
    if !pval.is_positive() || *pval >= BigRational::one() {
        return Err(Error::InvalidArgument(
            "the success probability must lie strictly between 0 and 1".into(),
        ));
    }
    let (k, l, m, n) = (params.k, params.l, params.m, params.n);
    let q = BigRational::one() - pval;
    let c = rbinom(k - 1, l - 1);
    let committee_base = &c * pow(pval, l - 1) * pow(&q, k - l);
    Ok(match which {
        Which::G3 => TypedPowerTriple {
            type1: committee_base.clone(),
            type2: committee_base,
            type3: BigRational::zero(),
        },
        Which::G2 => TypedPowerTriple {
            type1: &committee_base + pow(pval, l) * pow(&q, k - l - 1),
            type2: (&c - BigRational::one()) * pow(pval, l - 1) * pow(&q, k - l),
            type3: BigRational::zero(),
        },
        Which::G1 => {
            if m < 1 || m > n {
                return Err(Error::InvalidArgument(format!(
                    "the original game's formulas need 1 <= m <= n, got m={m}, n={n}"
                )));
            }
            let below = binomial_mass(n, 0, m - 1, pval);
            let above = BigRational::one() - &below;
            TypedPowerTriple {
                type1: &committee_base + pow(pval, l) * pow(&q, k - l - 1) * below,
                type2: (&c - BigRational::one()) * pow(pval, l - 1) * pow(&q, k - l)
                    + pow(pval, l - 1) * pow(&q, k - l) * above,
                type3: pow(pval, l) * pow(&q, k - l) * rbinom(n - 1, m - 1) * pow(pval, m - 1)
                    * pow(&q, n - m),
            }
        }
    })
}

/// Johnston values per voter type for the l = 1 slice of the family, where
/// every vulnerable coalition holds exactly one committee voter. For the
/// rounded variants the whole index concentrates there: G2 pays 2^{n+1} to
/// each committee voter before the bloc, G3 pays 2^n to all of the
/// committee.
pub fn johnston_closed_form(k: usize, n: usize, m: usize, which: Which) -> Result<TypedPowerTriple> {
    if k < 2 {
        return Err(Error::InvalidArgument("need k >= 2".into()));
    }
    if m < 1 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    let two_n = pow(&int(2), n);
    Ok(match which {
        Which::G2 => TypedPowerTriple {
            type1: int(2) * two_n,
            type2: BigRational::zero(),
            type3: BigRational::zero(),
        },
        Which::G3 => TypedPowerTriple {
            type1: two_n.clone(),
            type2: two_n,
            type3: BigRational::zero(),
        },
        Which::G1 => {
            let below: BigRational = (0..m).map(|j| rbinom(n, j)).sum();
            let strictly_above: BigRational = (m + 1..=n).map(|j| rbinom(n, j)).sum();
            let share = int(m as i64 + 1).recip();
            TypedPowerTriple {
                type1: two_n + below,
                type2: strictly_above + rbinom(n, m) * &share,
                type3: rbinom(n - 1, m - 1) * share,
            }
        }
    })
}

/// Shapley-Shubik values per voter type. G3 splits evenly over the
/// committee; G2 shifts mass from the bloc to the rest of the committee;
/// for the family member itself the bloc's value is recovered from
/// efficiency.
pub fn ssi_closed_form(params: &ParametricParams, which: Which) -> Result<TypedPowerTriple> {
    params.validate()?;
    let (k, l, m, n) = (params.k, params.l, params.m, params.n);
    let even = int(k as i64).recip();
    Ok(match which {
        Which::G3 => TypedPowerTriple {
            type1: even.clone(),
            type2: even,
            type3: BigRational::zero(),
        },
        Which::G2 => {
            let c = rbinom(k - 1, l);
            TypedPowerTriple {
                type1: &even + (int(k as i64) * &c).recip(),
                type2: &even - int((k - l) as i64) / (int((k * l) as i64) * &c),
                type3: BigRational::zero(),
            }
        }
        Which::G1 => {
            if m < 1 || m > n {
                return Err(Error::InvalidArgument(format!(
                    "the original game's formulas need 1 <= m <= n, got m={m}, n={n}"
                )));
            }
            let fact_all = BigRational::from(factorial(k + n));
            let type3 = rbinom(n - 1, m - 1)
                * BigRational::from(factorial(l + m - 1))
                * BigRational::from(factorial(n + k - m - l))
                / &fact_all;
            let r: BigRational = (0..m)
                .map(|j| {
                    rbinom(n, j)
                        * BigRational::from(factorial(l + j))
                        * BigRational::from(factorial(n + k - l - j - 1))
                })
                .sum::<BigRational>()
                / &fact_all;
            let type1 = &even + r;
            let type2 = (BigRational::one()
                - int((k - l) as i64) * &type1
                - int(n as i64) * &type3)
                / int(l as i64);
            TypedPowerTriple {
                type1,
                type2,
                type3,
            }
        }
    })
}

// ---------------------------------------------------------------------------
// inequality checks
// ---------------------------------------------------------------------------

/// One exact left-hand side compared against an enclosed right-hand side.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub label: String,
    #[serde(with = "serde_ratio")]
    pub lhs: BigRational,
    #[serde(with = "serde_ratio")]
    pub bound_lo: BigRational,
    #[serde(with = "serde_ratio")]
    pub bound_hi: BigRational,
    pub holds: bool,
}

fn decide<B, C>(build: B, cmp: C) -> Result<(Enclosure, bool)>
where
    B: Fn(&BigRational) -> Result<Enclosure>,
    C: Fn(&Enclosure) -> Option<bool>,
{
    let mut tol = rat(1, 1 << 20);
    for _ in 0..6 {
        let enc = build(&tol)?;
        if let Some(v) = cmp(&enc) {
            return Ok((enc, v));
        }
        tol /= int(1i64 << 40);
    }
    Err(Error::InvalidArgument(
        "inequality undecidable at maximum enclosure precision".into(),
    ))
}

fn check_le(label: &str, lhs: BigRational, build: impl Fn(&BigRational) -> Result<Enclosure>) -> Result<BoundCheck> {
    let (enc, holds) = decide(build, |e| certify_le(&lhs, e))?;
    Ok(BoundCheck {
        label: label.into(),
        lhs,
        bound_lo: enc.lo,
        bound_hi: enc.hi,
        holds,
    })
}

fn check_ge(label: &str, lhs: BigRational, build: impl Fn(&BigRational) -> Result<Enclosure>) -> Result<BoundCheck> {
    let (enc, holds) = decide(build, |e| certify_ge(&lhs, e))?;
    Ok(BoundCheck {
        label: label.into(),
        lhs,
        bound_lo: enc.lo,
        bound_hi: enc.hi,
        holds,
    })
}

/// The elementary estimates used by the displacement analysis, decided with
/// certified enclosures: the central binomial coefficient against
/// 2^{n−1}/√n, the two Hoeffding tail bounds at p = 1/2 ± δ, and the point
/// probability bound p^{m−1}(1−p)^{n−m} ≤ 4(1−4δ²)^{(n−3)/2}/2^{n−1}
/// (checked for n ≥ 3 at both central m and both signs).
pub fn tail_lemmas_check(n: usize, m: usize, delta: &BigRational) -> Result<TailLemmaReport> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    if delta.is_negative() || *delta >= rat(1, 2) {
        return Err(Error::InvalidArgument(
            "need 0 <= delta < 1/2".into(),
        ));
    }
    let mut checks = Vec::new();

    let two_pow = pow(&int(2), n - 1);
    checks.push(check_le("central binomial", rbinom(n - 1, m - 1), |tol| {
        Ok(sqrt_enclosure(&int(n as i64), tol)?
            .recip()?
            .affine(&two_pow, &BigRational::zero()))
    })?);

    let half = rat(1, 2);
    let m_hi = (n + 1).div_ceil(2);
    let p_hi = &half + delta;
    let upper_tail = binomial_mass(n, m_hi, n, &p_hi);
    let a_hi = int(2) * int(n as i64) * delta * delta;
    checks.push(check_ge("upper tail", upper_tail, |tol| {
        Ok(exp_enclosure(&-&a_hi, tol)?.one_minus())
    })?);

    let m_lo = n / 2;
    let p_lo = &half - delta;
    let lower_tail = if m_lo == 0 {
        BigRational::zero()
    } else {
        binomial_mass(n, 0, m_lo - 1, &p_lo)
    };
    let a_lo = &a_hi - int(2) * delta;
    checks.push(check_ge("lower tail", lower_tail, |tol| {
        Ok(exp_enclosure(&-&a_lo, tol)?.one_minus())
    })?);

    if n >= 3 {
        let base = BigRational::one() - int(4) * delta * delta;
        let whole = (n - 3) / 2;
        let coeff = int(4) * pow(&base, whole) / pow(&int(2), n - 1);
        for (mm, tag) in [(m_hi, "high m"), (m_lo, "low m")] {
            for (pp, ptag) in [(&p_hi, "p above"), (&p_lo, "p below")] {
                let lhs = pow(pp, mm - 1) * pow(&(BigRational::one() - pp), n - mm);
                let label = format!("point probability, {tag}, {ptag}");
                let check = check_le(&label, lhs, |tol| {
                    if (n - 3) % 2 == 0 {
                        Ok(Enclosure::point(coeff.clone()))
                    } else {
                        Ok(sqrt_enclosure(&base, tol)?.affine(&coeff, &BigRational::zero()))
                    }
                })?;
                checks.push(check);
            }
        }
    }

    let all_hold = checks.iter().all(|c| c.holds);
    Ok(TailLemmaReport {
        n,
        m,
        delta: delta.clone(),
        checks,
        all_hold,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TailLemmaReport {
    pub n: usize,
    pub m: usize,
    #[serde(with = "serde_ratio")]
    pub delta: BigRational,
    pub checks: Vec<BoundCheck>,
    pub all_hold: bool,
}

impl TailLemmaReport {
    /// One JSON object per check, newline-separated.
    pub fn to_jsonl(&self) -> Result<String> {
        let mut lines = Vec::with_capacity(self.checks.len());
        for c in &self.checks {
            lines.push(serde_json::to_string(c)?);
        }
        Ok(lines.join("\n"))
    }
}

/// Evidence that no displacement bound can exist for the Johnston index:
/// at l = 1, odd n = 2ñ+1, and the central m = ñ+1, the L1 distance between
/// the family member and either rounding exceeds a multiple of the tail
/// mass that grows like √ñ, while the tail mass itself stays positive. The
/// coefficient comparisons use certified enclosures of √(ñ/2); the
/// normalized distances and their 1/(5k) floors are exact rationals.
#[derive(Debug, Clone, Serialize)]
pub struct JohnstonNegativeReport {
    pub k: usize,
    pub ntilde: usize,
    pub n: usize,
    pub m: usize,
    #[serde(with = "serde_ratio")]
    pub xi: BigRational,
    /// ‖JS(G1) − JS(G3)‖₁ against (k·√(ñ/2) + 1)·ξ.
    pub absolute_tail_winning: BoundCheck,
    /// ‖JS(G1) − JS(G2)‖₁ against ((k−1)·√(ñ/2) + 1)·ξ.
    pub absolute_tail_losing: BoundCheck,
    #[serde(with = "serde_ratio")]
    pub normalized_distance_tail_winning: BigRational,
    #[serde(with = "serde_ratio")]
    pub normalized_distance_tail_losing: BigRational,
    /// Both normalized distances reach the 1/(5k) floor.
    pub normalized_floor_holds: bool,
    #[serde(with = "serde_ratio")]
    pub xi_share: BigRational,
    /// ξ/ΣJS(G1) ≤ √2/((3k−3)√ñ); needs ñ ≥ 2.
    pub xi_share_check: Option<BoundCheck>,
}

fn l1_typed(a: &TypedPowerTriple, b: &TypedPowerTriple, p: &ParametricParams) -> BigRational {
    int((p.k - p.l) as i64) * (&a.type1 - &b.type1).abs()
        + int(p.l as i64) * (&a.type2 - &b.type2).abs()
        + int(p.n as i64) * (&a.type3 - &b.type3).abs()
}

fn normalized(t: &TypedPowerTriple, p: &ParametricParams) -> Result<TypedPowerTriple> {
    let total = t.total(p);
    if !total.is_positive() {
        return Err(Error::NormalizationOfZero);
    }
    Ok(TypedPowerTriple {
        type1: &t.type1 / &total,
        type2: &t.type2 / &total,
        type3: &t.type3 / &total,
    })
}

pub fn johnston_negative_check(k: usize, ntilde: usize) -> Result<JohnstonNegativeReport> {
    if k < 2 || ntilde < 1 {
        return Err(Error::InvalidArgument(
            "need k >= 2 and ntilde >= 1".into(),
        ));
    }
    let n = 2 * ntilde + 1;
    let m = ntilde + 1;
    let params = ParametricParams::new(k, 1, m, n)?;
    let g1 = johnston_closed_form(k, n, m, Which::G1)?;
    let g2 = johnston_closed_form(k, n, m, Which::G2)?;
    let g3 = johnston_closed_form(k, n, m, Which::G3)?;
    let xi = int(n as i64) * &g1.type3;

    let d3 = l1_typed(&g1, &g3, &params);
    let d2 = l1_typed(&g1, &g2, &params);
    let half_ntilde = rat(ntilde as i64, 2);
    let winning = check_ge("distance to the all-winning rounding", d3, |tol| {
        Ok(sqrt_enclosure(&half_ntilde, tol)?.affine(&(int(k as i64) * &xi), &xi))
    })?;
    let losing = check_ge("distance to the all-losing rounding", d2, |tol| {
        Ok(sqrt_enclosure(&half_ntilde, tol)?.affine(&(int(k as i64 - 1) * &xi), &xi))
    })?;

    let n1 = normalized(&g1, &params)?;
    let nd_winning = l1_typed(&n1, &normalized(&g3, &params)?, &params);
    let nd_losing = l1_typed(&n1, &normalized(&g2, &params)?, &params);
    let floor = rat(1, 5 * k as i64);
    let normalized_floor_holds = nd_winning >= floor && nd_losing >= floor;

    let xi_share = &xi / g1.total(&params);
    let xi_share_check = if ntilde >= 2 {
        let coeff = rat(1, 3 * (k as i64 - 1));
        Some(check_le("tail share", xi_share.clone(), |tol| {
            Ok(sqrt_enclosure(&rat(2, ntilde as i64), tol)?
                .affine(&coeff, &BigRational::zero()))
        })?)
    } else {
        None
    };

    Ok(JohnstonNegativeReport {
        k,
        ntilde,
        n,
        m,
        xi,
        absolute_tail_winning: winning,
        absolute_tail_losing: losing,
        normalized_distance_tail_winning: nd_winning,
        normalized_distance_tail_losing: nd_losing,
        normalized_floor_holds,
        xi_share,
        xi_share_check,
    })
}

/// One family instance in a growing-n scan of the binomial semivalue's
/// displacement.
#[derive(Debug, Clone, Serialize)]
pub struct PBinomialWitnessRow {
    pub n: usize,
    pub m: usize,
    /// Δ¹/ξ against the rounding the case analysis selects.
    #[serde(with = "serde_ratio")]
    pub ratio: BigRational,
    #[serde(with = "serde_ratio")]
    pub xi: BigRational,
    /// |ΣΨ(G1) − ΣΨ(G2)|.
    #[serde(with = "serde_ratio")]
    pub change_tail_losing: BigRational,
    /// |ΣΨ(G1) − ΣΨ(G3)|.
    #[serde(with = "serde_ratio")]
    pub change_tail_winning: BigRational,
    /// k·p^{l−1}(1−p)^{k−l−1} + ξ, bounding both changes.
    #[serde(with = "serde_ratio")]
    pub change_bound: BigRational,
    pub bound_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PBinomialWitnessReport {
    pub k: usize,
    pub l: usize,
    #[serde(with = "serde_ratio")]
    pub p: BigRational,
    pub rows: Vec<PBinomialWitnessRow>,
    /// The per-voter displacement outgrows the tail mass along the list.
    pub ratio_strictly_increasing: bool,
    /// The tail mass itself shrinks along the list.
    pub xi_strictly_decreasing: bool,
}

impl PBinomialWitnessReport {
    /// One JSON object per row, newline-separated.
    pub fn to_jsonl(&self) -> Result<String> {
        let mut lines = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            lines.push(serde_json::to_string(r)?);
        }
        Ok(lines.join("\n"))
    }
}

/// Scan Δ¹/ξ over growing n at the central m for the given p. Away from
/// p = 1/2 the ratio must rise and ξ must fall for any displacement bound
/// to be impossible; at p = 1/2 the rows are only recorded, since ξ does
/// not vanish there. The aggregate-change bound is asserted at p ≠ 1/2,
/// where it is a theorem.
pub fn pbinomial_negative_witness(
    k: usize,
    l: usize,
    p: &BigRational,
    n_list: &[usize],
) -> Result<PBinomialWitnessReport> {
    if !p.is_positive() || *p >= BigRational::one() {
        return Err(Error::InvalidArgument(
            "the success probability must lie strictly between 0 and 1".into(),
        ));
    }
    if n_list.is_empty() {
        return Err(Error::InvalidArgument("need at least one n".into()));
    }
    let half = rat(1, 2);
    let q = BigRational::one() - p;
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let m = if *p > half { (n + 1).div_ceil(2) } else { n / 2 };
        if m < 1 {
            return Err(Error::InvalidArgument(format!(
                "n={n} leaves no valid central m below 1/2"
            )));
        }
        let params = ParametricParams::new(k, l, m, n)?;
        let g1 = psi_p_closed_form(&params, Which::G1, p)?;
        let g2 = psi_p_closed_form(&params, Which::G2, p)?;
        let g3 = psi_p_closed_form(&params, Which::G3, p)?;
        let pair = if *p > half { &g2 } else { &g3 };
        let deltas = type_deltas(&g1, pair, &params)?;
        let change_tail_losing = (g1.total(&params) - g2.total(&params)).abs();
        let change_tail_winning = (g1.total(&params) - g3.total(&params)).abs();
        let change_bound = int(k as i64) * pow(p, l - 1) * pow(&q, k - l - 1) + &deltas.xi;
        let bound_holds =
            change_tail_losing <= change_bound && change_tail_winning <= change_bound;
        if *p != half {
            assert!(
                bound_holds,
                "aggregate change past its bound at {params} and p = {p}"
            );
        }
        rows.push(PBinomialWitnessRow {
            n,
            m,
            ratio: &deltas.d1 / &deltas.xi,
            xi: deltas.xi,
            change_tail_losing,
            change_tail_winning,
            change_bound,
            bound_holds,
        });
    }
    let ratio_strictly_increasing = rows.windows(2).all(|w| w[0].ratio < w[1].ratio);
    let xi_strictly_decreasing = rows.windows(2).all(|w| w[0].xi > w[1].xi);
    Ok(PBinomialWitnessReport {
        k,
        l,
        p: p.clone(),
        rows,
        ratio_strictly_increasing,
        xi_strictly_decreasing,
    })
}
