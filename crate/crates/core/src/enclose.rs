//! Certified rational enclosures for the few irrational quantities (square
//! roots, the exponential) that show up on the right-hand side of otherwise
//! exact inequalities. Every function returns a closed interval [lo, hi]
//! guaranteed to contain the true value, so a comparison against an exact
//! rational can be decided conservatively and tightened on demand.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rat::int;
use crate::Result;

/// A closed rational interval certified to contain a real value.
#[derive(Debug, Clone, PartialEq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    pub fn point(v: BigRational) -> Enclosure {
        Enclosure {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Image under x ↦ c·x + d for a nonnegative factor c.
    pub fn affine(&self, c: &BigRational, d: &BigRational) -> Enclosure {
        debug_assert!(!c.is_negative());
        Enclosure {
            lo: c * &self.lo + d,
            hi: c * &self.hi + d,
        }
    }

    /// Image under x ↦ 1 − x.
    pub fn one_minus(&self) -> Enclosure {
        Enclosure {
            lo: BigRational::one() - &self.hi,
            hi: BigRational::one() - &self.lo,
        }
    }

    /// Image under x ↦ 1/x; the interval must be strictly positive.
    pub fn recip(&self) -> Result<Enclosure> {
        if !self.lo.is_positive() {
            return Err(Error::InvalidArgument(
                "cannot invert an enclosure touching zero".into(),
            ));
        }
        Ok(Enclosure {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }
}

/// Is lhs ≤ x for the real x inside the enclosure? `None` when the interval
/// straddles lhs and the question needs a tighter enclosure.
pub fn certify_le(lhs: &BigRational, x: &Enclosure) -> Option<bool> {
    if lhs <= &x.lo {
        Some(true)
    } else if lhs > &x.hi {
        Some(false)
    } else {
        None
    }
}

/// Is lhs ≥ x for the real x inside the enclosure?
pub fn certify_ge(lhs: &BigRational, x: &Enclosure) -> Option<bool> {
    if lhs >= &x.hi {
        Some(true)
    } else if lhs < &x.lo {
        Some(false)
    } else {
        None
    }
}

fn is_square(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// √y for a nonnegative rational y, to within `tol`. Exact rationals come
/// back as point intervals; otherwise Newton iteration from above supplies
/// the upper end and y/x the lower one.
pub fn sqrt_enclosure(y: &BigRational, tol: &BigRational) -> Result<Enclosure> {
    if y.is_negative() {
        return Err(Error::InvalidArgument(
            "square root of a negative rational".into(),
        ));
    }
    if !tol.is_positive() {
        return Err(Error::InvalidArgument(
            "enclosure tolerance must be positive".into(),
        ));
    }
    if y.is_zero() {
        return Ok(Enclosure::point(BigRational::zero()));
    }
    if let (Some(a), Some(b)) = (is_square(y.numer()), is_square(y.denom())) {
        return Ok(Enclosure::point(BigRational::new(a, b)));
    }
    // (y+1)/2 ≥ √y by AM-GM, and the iteration never drops below the root
    let mut x = (y + BigRational::one()) / int(2);
    for _ in 0..128 {
        let lo = y / &x;
        if &x - &lo <= *tol {
            return Ok(Enclosure { lo, hi: x });
        }
        x = (&x + lo) / int(2);
    }
    Err(Error::InvalidArgument(format!(
        "square-root enclosure of {y} did not reach tolerance {tol}"
    )))
}

/// e^x for rational x of either sign, to within `tol`. Positive arguments
/// use the Taylor series with a geometric tail bound; negative ones invert
/// the enclosure of e^|x|.
pub fn exp_enclosure(x: &BigRational, tol: &BigRational) -> Result<Enclosure> {
    if !tol.is_positive() {
        return Err(Error::InvalidArgument(
            "enclosure tolerance must be positive".into(),
        ));
    }
    if x.is_zero() {
        return Ok(Enclosure::point(BigRational::one()));
    }
    if x.is_negative() {
        // e^x = 1/e^|x| with e^|x| ≥ 1, so the width only shrinks
        return exp_enclosure(&(-x), tol)?.recip();
    }
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut i = 1usize;
    loop {
        term = term * x / int(i as i64);
        sum += &term;
        // once the term ratio drops to 1/2 the tail is under twice the
        // next term
        if int(i as i64 + 2) >= x * int(2) {
            let next = &term * x / int(i as i64 + 1);
            let tail = &next * int(2);
            if tail <= *tol {
                return Ok(Enclosure {
                    hi: &sum + tail,
                    lo: sum,
                });
            }
        }
        i += 1;
        if i > 10_000 {
            return Err(Error::InvalidArgument(format!(
                "exponential enclosure of {x} did not reach tolerance {tol}"
            )));
        }
    }
}
