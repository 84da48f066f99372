//! Directed-rounding interval arithmetic over arbitrary-precision dyadics.
//!
//! Every operation returns an enclosure of the exact real result: lower
//! endpoints round toward negative infinity, upper endpoints toward positive
//! infinity, at the precision carried by the operands (the max of the two).
//! A strict comparison between intervals therefore certifies the
//! corresponding strict inequality between the enclosed reals.

mod consts;
mod dyadic;
mod functions;

pub use consts::pi;
pub use dyadic::{Dir, Dyadic};
pub use functions::{cos_pi, exp, sin_pi};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A closed interval `[lo, hi]` with an attached working precision in bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl Interval {
    /// Enclosure from explicit endpoints.
    pub fn from_endpoints(lo: Dyadic, hi: Dyadic, prec: u32) -> Interval {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi, prec }
    }

    /// Exact singleton.
    pub fn singleton(value: Dyadic, prec: u32) -> Interval {
        Interval {
            lo: value.clone(),
            hi: value,
            prec,
        }
    }

    pub fn zero(prec: u32) -> Interval {
        Interval::singleton(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Interval {
        Interval::singleton(Dyadic::one(), prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Interval {
        Interval::singleton(Dyadic::from_i64(n), prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Interval {
        Interval::singleton(Dyadic::from_bigint(n), prec)
    }

    /// Tight enclosure of an exact rational.
    pub fn from_rational(r: &BigRational, prec: u32) -> Interval {
        let num = Dyadic::from_bigint(r.numer());
        let den = Dyadic::from_bigint(r.denom());
        Interval {
            lo: num.div_round(&den, prec, Dir::Floor),
            hi: num.div_round(&den, prec, Dir::Ceil),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub_exact(&self.lo)
    }

    /// Midpoint as an exact rational (used for reporting, never for bounds).
    pub fn mid(&self) -> BigRational {
        let sum = self.lo.add_exact(&self.hi);
        let num = sum.mant().clone();
        let e = sum.exp() - 1;
        if e >= 0 {
            BigRational::from_integer(num << e as u64)
        } else {
            BigRational::new(num, BigInt::one() << (-e) as u64)
        }
    }

    fn p2(&self, other: &Interval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let p = self.p2(other);
        Interval {
            lo: self.lo.add_round(&other.lo, p, Dir::Floor),
            hi: self.hi.add_round(&other.hi, p, Dir::Ceil),
            prec: p,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let p = self.p2(other);
        let cands = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for (a, b) in cands {
            let down = a.mul_round(b, p, Dir::Floor);
            let up = a.mul_round(b, p, Dir::Ceil);
            lo = Some(match lo {
                Some(cur) => cur.min(down),
                None => down,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(up),
                None => up,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: p,
        }
    }

    /// True if every point of the interval is strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        // lo <= r: lo*den <= num (den > 0).
        let den = Dyadic::from_bigint(r.denom());
        let num = Dyadic::from_bigint(r.numer());
        self.lo.mul_exact(&den) <= num && num <= self.hi.mul_exact(&den)
    }

    pub fn contains_int(&self, n: &BigInt) -> bool {
        let d = Dyadic::from_bigint(n);
        self.lo <= d && d <= self.hi
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Interval {
        Interval::one(self.prec).div(self)
    }

    /// Quotient; panics if `other` contains zero (all call sites divide by
    /// sign-definite quantities; hitting this is a logic error, not a
    /// precision problem).
    pub fn div(&self, other: &Interval) -> Interval {
        assert!(
            !other.contains_zero(),
            "interval division by an interval containing zero"
        );
        let p = self.p2(other);
        let cands = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for (a, b) in cands {
            let down = a.div_round(b, p, Dir::Floor);
            let up = a.div_round(b, p, Dir::Ceil);
            lo = Some(match lo {
                Some(cur) => cur.min(down),
                None => down,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(up),
                None => up,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: p,
        }
    }

    /// Square root; the lower endpoint must be nonnegative.
    pub fn sqrt(&self) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "interval sqrt of a possibly negative value"
        );
        Interval {
            lo: self.lo.sqrt_round(self.prec, Dir::Floor),
            hi: self.hi.sqrt_round(self.prec, Dir::Ceil),
            prec: self.prec,
        }
    }

    /// Integer power by repeated squaring with correct sign handling.
    pub fn powi(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::one(self.prec);
        }
        if n == 1 {
            return self.clone();
        }
        let half = self.powi(n / 2);
        // half*half is a square of one real quantity, so a negative lower
        // bound from the generic product rule is spurious.
        let mut sq = half.mul(&half);
        if sq.lo.is_negative() {
            sq.lo = Dyadic::zero();
        }
        if n.is_multiple_of(2) {
            sq
        } else {
            sq.mul(self)
        }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            let hi = self.lo.abs().max(self.hi.abs());
            Interval {
                lo: Dyadic::zero(),
                hi,
                prec: self.prec,
            }
        }
    }

    /// Convex hull.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            prec: self.p2(other),
        }
    }

    /// Widen by `[-pad, +pad]`.
    pub fn widen(&self, pad: &Dyadic) -> Interval {
        assert!(!pad.is_negative());
        Interval {
            lo: self.lo.sub_exact(pad).round(self.prec, Dir::Floor),
            hi: self.hi.add_exact(pad).round(self.prec, Dir::Ceil),
            prec: self.prec,
        }
    }

    /// Certified strict comparison: true only if every point of `self` is
    /// below every point of `other`.
    pub fn strictly_less_than(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    /// Certified non-strict comparison.
    pub fn less_equal(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    /// The unique integer contained in the interval, if there is exactly one.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo = self.lo.ceil_int();
        let hi = self.hi.floor_int();
        match lo.cmp(&hi) {
            Ordering::Equal => Some(lo),
            _ => None,
        }
    }

    /// Re-round both endpoints outward to precision `p`.
    pub fn with_prec(&self, p: u32) -> Interval {
        Interval {
            lo: self.lo.round(p, Dir::Floor),
            hi: self.hi.round(p, Dir::Ceil),
            prec: p,
        }
    }

    /// True if `other` is contained in `self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Directed decimal endpoints (lo rounded down, hi rounded up), suitable
    /// for reports: the printed interval still encloses the true value.
    pub fn to_decimal_pair(&self, digits: u32) -> (String, String) {
        (
            self.lo.to_decimal(digits, Dir::Floor),
            self.hi.to_decimal(digits, Dir::Ceil),
        )
    }

    /// Midpoint rendered as a decimal string (reporting only).
    pub fn mid_decimal(&self, digits: u32) -> String {
        let m = self.mid();
        rational_to_decimal(&m, digits)
    }
}

/// Decimal rendering of an exact rational, round-to-nearest, reporting only.
pub fn rational_to_decimal(r: &BigRational, digits: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let p = 64 + digits * 4;
    let num = Dyadic::from_bigint(r.numer());
    let den = Dyadic::from_bigint(r.denom());
    // The two directed renderings agree through `digits` digits except on
    // half-way ties; picking the floor rendering keeps output deterministic.
    num.div_round(&den, p, Dir::Floor)
        .to_decimal(digits, Dir::Floor)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(17);
        write!(f, "[{lo}, {hi}]")
    }
}

/// An f64 estimate of an interval midpoint, for heuristics (never bounds).
pub fn estimate_f64(iv: &Interval) -> f64 {
    let m = iv.mid();
    let num = m.numer();
    let den = m.denom();
    let shift = (num.bits() as i64 - den.bits() as i64 - 53).max(0);
    let num_s = num >> shift as u64;
    let nf = num_s.to_f64().unwrap_or(f64::MAX);
    let df = den.to_f64().unwrap_or(f64::MAX);
    (nf / df) * 2f64.powi(shift.min(1023) as i32)
}
