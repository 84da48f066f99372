//! Modified Bessel functions of the first kind from the defining series,
//! with certified truncation.
//!
//! `I_nu(s) = sum_r (s/2)^(2r+nu) / (r! Gamma(r+nu+1))`, for integer and
//! half-integer orders. The series has positive terms for `s >= 0`, so an
//! enclosure is the partial interval sum plus `[0, tail]` with a geometric
//! tail majorant.

use crate::interval::{pi, Dir, Dyadic, Interval};
use num_bigint::BigInt;
use num_traits::One;

const GUARD: u32 = 16;

/// Bessel order: an integer or half-integer `nu >= 0`, stored as `2 nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BesselIndex {
    twice: u32,
}

impl BesselIndex {
    pub fn integer(nu: u32) -> BesselIndex {
        BesselIndex { twice: 2 * nu }
    }

    /// Construct from `2 nu`, allowing half-integers like `3/2`.
    pub fn from_twice(twice: u32) -> BesselIndex {
        BesselIndex { twice }
    }

    pub fn twice(&self) -> u32 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice.is_multiple_of(2)
    }

    fn integer_part(&self) -> u32 {
        self.twice / 2
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(s/2)^nu / Gamma(nu+1)` as an interval, for s >= 0.
///
/// Half-integer orders use `Gamma(q + 3/2) = (2q+2)! sqrt(pi) / (4^(q+1) (q+1)!)`.
fn leading_term(index: BesselIndex, half_s: &Interval, prec: u32) -> Interval {
    let q = index.integer_part();
    if index.is_integer() {
        let power = half_s.powi(q);
        power.div(&Interval::from_bigint(&factorial(q), prec))
    } else {
        // (s/2)^(q + 1/2) = (s/2)^q * sqrt(s/2)
        let power = half_s.powi(q).mul(&half_s.sqrt());
        let num = Interval::from_bigint(&(BigInt::one() << (2 * q as u64 + 2)), prec)
            .mul(&Interval::from_bigint(&factorial(q + 1), prec));
        let den = Interval::from_bigint(&factorial(2 * q + 2), prec).mul(&pi(prec).sqrt());
        power.mul(&num).div(&den)
    }
}

/// Shared series driver: sums `sum_m c_m * b_m` where
/// `b_m = (y/2)^(2m+nu) / (m! Gamma(m+nu+1))` and `c_m` is either 1 (the
/// Bessel series itself) or `1/(2m+nu-1)` (the tail integral), with a
/// certified geometric tail bound appended to the upper endpoint.
fn series_sum(index: BesselIndex, y: &Interval, prec: u32, integral_weights: bool) -> Interval {
    let wp = prec + GUARD;
    let y = y.with_prec(wp);
    let half_y = y.mul_pow2(-1);
    let ratio_num = half_y.powi(2); // (y/2)^2
    let two = index.twice();

    let weight = |m: u64| -> Option<Interval> {
        if integral_weights {
            // 1/(2m + nu - 1) = 2/(4m + 2nu - 2), exact integer denominator.
            Some(
                Interval::from_i64(2, wp)
                    .div(&Interval::from_i64(4 * m as i64 + two as i64 - 2, wp)),
            )
        } else {
            None
        }
    };

    let mut b = leading_term(index, &half_y, wp);
    let mut sum = match weight(0) {
        Some(w) => b.mul(&w),
        None => b.clone(),
    };
    let mut m: u64 = 0;
    loop {
        // b_{m+1} = b_m * (y/2)^2 * 2 / ((m+1)(2m + 2nu + 2))
        let div = BigInt::from(m + 1) * BigInt::from(2 * m + two as u64 + 2);
        let next_b = b
            .mul(&ratio_num)
            .mul_pow2(1)
            .div(&Interval::from_bigint(&div, wp));
        let next_term = match weight(m + 1) {
            Some(w) => next_b.mul(&w),
            None => next_b.clone(),
        };
        // Ratio bound for everything past m+1.
        let rho_den = BigInt::from(m + 2) * BigInt::from(2 * m + two as u64 + 4);
        let rho = ratio_num
            .mul_pow2(1)
            .div(&Interval::from_bigint(&rho_den, wp));
        let rho_small = *rho.hi() < Dyadic::new(BigInt::one(), -1);
        let sum_scale = sum.hi().pos().max(0);
        let term_small = next_term.hi().pos() < sum_scale - (prec as i64 + 4);
        if rho_small && term_small {
            // tail <= next_term / (1 - rho) <= 2 * next_term
            let tail = next_term.hi().mul_pow2(1).round(wp, Dir::Ceil);
            let widened = Interval::from_endpoints(
                sum.lo().clone(),
                sum.hi().add_round(&tail, wp, Dir::Ceil),
                wp,
            );
            return widened.with_prec(prec);
        }
        sum = sum.add(&next_term);
        b = next_b;
        m += 1;
    }
}

/// Certified enclosure of `I_nu(s)` for `s >= 0`.
///
/// Terms are accumulated until the next one drops below `2^-prec` of the
/// running sum and the term ratio is provably below 1/2; the geometric tail
/// is then added to the upper endpoint.
pub fn bessel_i(index: BesselIndex, s: &Interval, prec: u32) -> Interval {
    assert!(
        !s.lo().is_negative(),
        "bessel_i requires a nonnegative argument"
    );
    if s.hi().is_zero() {
        return if index.twice() == 0 {
            Interval::one(prec)
        } else {
            Interval::zero(prec)
        };
    }
    series_sum(index, s, prec, false)
}

/// Upper-bounding enclosure of the tail integral
/// `int_N^infty I_nu(s/t) dt = N sum_m (s/2N)^(2m+nu) / ((2m+nu-1) m! Gamma(m+nu+1))`,
/// used for certified truncation of sums over `I_nu(s/j)`. Requires `nu > 1`.
pub fn bessel_tail_integral(index: BesselIndex, s: &Interval, n_from: u64, prec: u32) -> Interval {
    assert!(index.twice() > 2, "tail integral diverges for nu <= 1");
    assert!(n_from >= 1);
    assert!(!s.lo().is_negative());
    if s.hi().is_zero() {
        return Interval::zero(prec);
    }
    let y = s.div(&Interval::from_i64(n_from as i64, prec + GUARD));
    let series = series_sum(index, &y, prec, true);
    series.mul(&Interval::from_i64(n_from as i64, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::exp;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn i2(s: i64, prec: u32) -> Interval {
        bessel_i(BesselIndex::integer(2), &Interval::from_i64(s, prec), prec)
    }

    #[test]
    fn zero_argument() {
        let z = Interval::zero(64);
        assert_eq!(
            bessel_i(BesselIndex::integer(2), &z, 64),
            Interval::zero(64)
        );
        assert!(bessel_i(BesselIndex::integer(0), &z, 64).contains_rational(&BigRational::one()));
    }

    #[test]
    fn i1_upper_bound_at_one() {
        // I_1(s) <= sqrt(2/(pi s)) e^s at s = 1.
        let p = 96;
        let i1 = bessel_i(BesselIndex::integer(1), &Interval::from_i64(1, p), p);
        let bound = Interval::from_i64(2, p)
            .div(&pi(p))
            .sqrt()
            .mul(&exp(&Interval::one(p)));
        assert!(i1.strictly_less_than(&bound));
    }

    #[test]
    fn i2_matches_exact_rational_partial_sum() {
        // Oracle: 200 exact-rational terms of the series at s = 10, which is
        // accurate to far more than 30 significant digits.
        let mut oracle = BigRational::zero();
        let mut term = BigRational::new(BigInt::from(25), BigInt::from(2)); // r=0: 5^2/(0! 2!)
        for r in 0u32..200 {
            oracle += &term;
            term *= BigRational::new(BigInt::from(25), BigInt::from((r + 1) * (r + 3)));
        }
        let enclosure = i2(10, 160);
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u8).pow(30));
        let lo = &oracle * (BigRational::one() - &tol);
        let hi = &oracle * (BigRational::one() + &tol);
        assert!(enclosure.contains_rational(&oracle));
        let outer = Interval::from_endpoints(
            Interval::from_rational(&lo, 200).lo().clone(),
            Interval::from_rational(&hi, 200).hi().clone(),
            200,
        );
        assert!(outer.contains_interval(&enclosure));
    }

    #[test]
    fn i2_is_increasing_on_grid() {
        let mut prev = i2(1, 96);
        for s in 2..=30 {
            let cur = i2(s, 96);
            assert!(prev.strictly_less_than(&cur), "not increasing at s={s}");
            prev = cur;
        }
    }

    #[test]
    fn enclosures_nest_with_precision() {
        for s in [1i64, 7, 23, 152] {
            let coarse = i2(s, 64);
            let fine = i2(s, 128);
            assert!(coarse.contains_interval(&fine), "nesting failed at s={s}");
        }
    }

    #[test]
    fn half_integer_order_matches_closed_form() {
        // I_{3/2}(s) = sqrt(2/(pi s)) (cosh s - sinh s / s); check s = 2.
        let p = 128;
        let s = Interval::from_i64(2, p);
        let e2 = exp(&Interval::from_i64(2, p));
        let em2 = exp(&Interval::from_i64(-2, p));
        let cosh = e2.add(&em2).mul_pow2(-1);
        let sinh = e2.sub(&em2).mul_pow2(-1);
        let closed = Interval::from_i64(2, p)
            .div(&pi(p).mul(&s))
            .sqrt()
            .mul(&cosh.sub(&sinh.div(&s)));
        let series = bessel_i(BesselIndex::from_twice(3), &s, p);
        // Both enclose the true value, so they must intersect tightly.
        assert!(series.lo() <= closed.hi() && closed.lo() <= series.hi());
        assert!(series.width() <= Dyadic::new(BigInt::one(), -100));
        assert!(closed.width() <= Dyadic::new(BigInt::one(), -100));
    }

    #[test]
    fn large_argument_magnitude() {
        // I_2(232) ~ e^232/sqrt(2 pi 232) (1 - eps): check the leading digits
        // by bracketing with exp-based bounds.
        let p = 420;
        let v = i2(232, p);
        assert!(v.is_strictly_positive());
        let e232 = exp(&Interval::from_i64(232, p));
        let sqrt_term = pi(p).mul(&Interval::from_i64(464, p)).sqrt();
        let upper = e232.div(&sqrt_term); // asymptotically I_2 < e^s/sqrt(2 pi s)
        assert!(v.strictly_less_than(&upper));
    }
}
