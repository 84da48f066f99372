//! Certified elementary functions: exp on intervals, and cos/sin of pi times
//! an exact rational (the only trigonometric form the tool needs; keeping the
//! angle exact until the final series evaluation avoids phase drift).

use super::consts::{ln2, pi};
use super::{Dir, Dyadic, Interval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

const GUARD: u32 = 16;

impl Dyadic {
    /// Exact scaling by 2^k.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            Dyadic::zero()
        } else {
            Dyadic::new(self.mant().clone(), self.exp() + k)
        }
    }
}

impl Interval {
    pub fn mul_pow2(&self, k: i64) -> Interval {
        Interval::from_endpoints(self.lo().mul_pow2(k), self.hi().mul_pow2(k), self.prec())
    }
}

/// exp of a single dyadic point, enclosed at precision `p`.
fn exp_point(d: &Dyadic, p: u32) -> Interval {
    let wp = p + GUARD;
    // Argument reduction: r = d - k ln2 with |r| <= 0.7.
    let l2 = ln2(wp);
    let k_est = Interval::singleton(d.clone(), 64).div(&ln2(64));
    let k = {
        let mid = k_est.mid();
        // Round to nearest integer; only closeness matters, not direction.
        (mid + BigRational::new(BigInt::one(), BigInt::from(2)))
            .floor()
            .to_integer()
    };
    let k_i64 = i64::try_from(&k).expect("exp argument out of range");
    let r = Interval::singleton(d.clone(), wp).sub(&l2.mul(&Interval::from_bigint(&k, wp)));

    // Taylor sum of exp(r), |r| <= 0.7 < 1.
    let mut sum = Interval::one(wp);
    let mut term = Interval::one(wp);
    let mut m: u32 = 1;
    let r_abs_hi = r.abs().hi().clone();
    let mut tail_bound = Dyadic::one();
    loop {
        term = term.mul(&r).div(&Interval::from_i64(m as i64, wp));
        sum = sum.add(&term);
        // Remaining tail <= |r|^(m+1)/(m+1)! * 1/(1 - |r|/(m+2)) <= 2 * next term bound.
        tail_bound = tail_bound.mul_round(&r_abs_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64(m as i64),
            wp,
            Dir::Ceil,
        );
        let next = tail_bound.mul_round(&r_abs_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64(m as i64 + 1),
            wp,
            Dir::Ceil,
        );
        if m >= 2 && next.mul_pow2(1).pos() < -(p as i64 + 4) {
            sum = sum.widen(&next.mul_pow2(1));
            break;
        }
        m += 1;
    }
    sum.mul_pow2(k_i64).with_prec(p)
}

/// Certified exp over an interval (monotone, so endpoint evaluation).
pub fn exp(x: &Interval) -> Interval {
    let p = x.prec();
    let lo = exp_point(x.lo(), p);
    let hi = exp_point(x.hi(), p);
    Interval::from_endpoints(lo.lo().clone(), hi.hi().clone(), p)
}

/// Reduce `t` into `[0, 1]` with a sign flag such that
/// cos(pi t) = sign * cos(pi u) and the companion identity for sin is handled
/// by the callers below.
fn fold_mod2(t: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let q = (t / &two).floor();
    t - q * two
}

/// Alternating even series sum_{m} (-1)^m z^(2m)/(2m)! (cos) evaluated on an
/// interval argument with |z| <= pi, certified by the alternating-series tail.
fn cos_series(z: &Interval, p: u32) -> Interval {
    let wp = p + GUARD;
    let z2 = z.powi(2);
    let mut sum = Interval::one(wp);
    let mut term = Interval::one(wp);
    let z2_hi = z2.hi().clone();
    let mut term_hi = Dyadic::one();
    let mut m: i64 = 1;
    loop {
        term = term
            .mul(&z2)
            .div(&Interval::from_i64((2 * m - 1) * 2 * m, wp));
        term_hi = term_hi.mul_round(&z2_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64((2 * m - 1) * 2 * m),
            wp,
            Dir::Ceil,
        );
        if m % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        let next = term_hi.mul_round(&z2_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64((2 * m + 1) * (2 * m + 2)),
            wp,
            Dir::Ceil,
        );
        // Terms decrease once (2m+1)(2m+2) > z^2, true from m >= 2 for |z| <= pi.
        if m >= 2 && next.pos() < -(p as i64 + 4) {
            sum = sum.widen(&next);
            break;
        }
        m += 1;
    }
    sum.with_prec(p)
}

/// Odd series z * sum_m (-1)^m z^(2m)/(2m+1)! (sin), |z| <= pi.
fn sin_series(z: &Interval, p: u32) -> Interval {
    let wp = p + GUARD;
    let z2 = z.powi(2);
    let mut sum = Interval::one(wp);
    let mut term = Interval::one(wp);
    let z2_hi = z2.hi().clone();
    let mut term_hi = Dyadic::one();
    let mut m: i64 = 1;
    loop {
        term = term
            .mul(&z2)
            .div(&Interval::from_i64(2 * m * (2 * m + 1), wp));
        term_hi = term_hi.mul_round(&z2_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64(2 * m * (2 * m + 1)),
            wp,
            Dir::Ceil,
        );
        if m % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        let next = term_hi.mul_round(&z2_hi, wp, Dir::Ceil).div_round(
            &Dyadic::from_i64((2 * m + 2) * (2 * m + 3)),
            wp,
            Dir::Ceil,
        );
        if m >= 2 && next.pos() < -(p as i64 + 4) {
            sum = sum.widen(&next);
            break;
        }
        m += 1;
    }
    sum.mul(&z.clone().with_prec(wp)).with_prec(p)
}

/// Certified cos(pi * t) for an exact rational t.
pub fn cos_pi(t: &BigRational, p: u32) -> Interval {
    let wp = p + GUARD;
    let mut u = fold_mod2(t);
    // u in [0, 2): reflect into [0, 1] (cos(pi(2-u)) = cos(pi u)).
    if u > BigRational::one() {
        u = BigRational::from_integer(BigInt::from(2)) - u;
    }
    // Reflect into [0, 1/2] (cos(pi(1-u)) = -cos(pi u)).
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let (u, sign) = if u > half {
        (BigRational::one() - u, -1)
    } else {
        (u, 1)
    };
    let z = pi(wp).mul(&Interval::from_rational(&u, wp));
    let c = cos_series(&z, p);
    let c = if sign < 0 { c.neg() } else { c };
    clamp_unit(c)
}

/// Certified sin(pi * t) for an exact rational t.
pub fn sin_pi(t: &BigRational, p: u32) -> Interval {
    let wp = p + GUARD;
    let mut u = fold_mod2(t);
    let mut sign = 1;
    // u in [0, 2): sin(pi(u)) = -sin(pi(u-1)) for u > 1.
    if u > BigRational::one() {
        u -= BigRational::one();
        sign = -1;
    }
    // u in [0, 1]: reflect into [0, 1/2] (sin(pi(1-u)) = sin(pi u)).
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if u > half {
        u = BigRational::one() - u;
    }
    let z = pi(wp).mul(&Interval::from_rational(&u, wp));
    let s = sin_series(&z, p);
    let s = if sign < 0 { s.neg() } else { s };
    clamp_unit(s)
}

/// Intersect an enclosure of a sine/cosine value with [-1, 1].
fn clamp_unit(x: Interval) -> Interval {
    let one = Dyadic::one();
    let neg_one = one.neg();
    let lo = if *x.lo() < neg_one {
        neg_one
    } else {
        x.lo().clone()
    };
    let hi = if *x.hi() > one { one } else { x.hi().clone() };
    Interval::from_endpoints(lo, hi, x.prec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rational_digits(digits: &str, scale: u32) -> BigRational {
        BigRational::new(
            BigInt::from_str(digits).unwrap(),
            BigInt::from(10u8).pow(scale),
        )
    }

    #[test]
    fn exp_of_one_matches_reference() {
        // e = 2.71828182845904523536028747135266249775...
        let x = exp(&Interval::one(128));
        let lo = rational_digits("271828182845904523536028747135266", 32);
        let hi = rational_digits("271828182845904523536028747135267", 32);
        let outer = Interval::from_endpoints(
            Interval::from_rational(&lo, 160).lo().clone(),
            Interval::from_rational(&hi, 160).hi().clone(),
            160,
        );
        assert!(outer.contains_interval(&x));
        assert!(x.width() <= Dyadic::new(BigInt::from(1), -100));
    }

    #[test]
    fn exp_handles_large_magnitudes() {
        // e^300 = 1.94242639524125593658420883601769...e130
        let big = exp(&Interval::from_i64(300, 160));
        let scale = BigRational::from_integer(BigInt::from(10u8).pow(130));
        let lo = rational_digits("19424263952412559", 16) * &scale;
        let hi = rational_digits("19424263952412560", 16) * &scale;
        let outer = Interval::from_endpoints(
            Interval::from_rational(&lo, 200).lo().clone(),
            Interval::from_rational(&hi, 200).hi().clone(),
            200,
        );
        assert!(outer.contains_interval(&big));
        let tiny = exp(&Interval::from_i64(-300, 160));
        assert!(tiny.is_strictly_positive());
        assert!(tiny.mul(&big).contains_rational(&BigRational::one()));
    }

    #[test]
    fn cos_sin_special_angles() {
        let p = 96;
        assert!(cos_pi(&rat(0, 1), p).contains_rational(&BigRational::one()));
        assert!(cos_pi(&rat(1, 1), p).contains_rational(&-BigRational::one()));
        assert!(cos_pi(&rat(1, 2), p).contains_zero());
        assert!(sin_pi(&rat(1, 2), p).contains_rational(&BigRational::one()));
        assert!(sin_pi(&rat(3, 2), p).contains_rational(&-BigRational::one()));
        // cos(pi/3) = 1/2 exactly.
        assert!(cos_pi(&rat(1, 3), p).contains_rational(&rat(1, 2)));
        assert!(cos_pi(&rat(-1, 3), p).contains_rational(&rat(1, 2)));
        // sin(pi/6) = 1/2.
        assert!(sin_pi(&rat(1, 6), p).contains_rational(&rat(1, 2)));
        // Folding of large arguments: 2000001/3 = 666667 (odd), so cos = -1.
        assert!(cos_pi(&rat(2_000_001, 3), p).contains_rational(&-BigRational::one()));
    }

    #[test]
    fn pythagorean_identity_on_random_rationals() {
        let p = 80;
        for (n, d) in [(1i64, 7i64), (3, 11), (22, 7), (-5, 9), (100, 13)] {
            let t = rat(n, d);
            let c = cos_pi(&t, p);
            let s = sin_pi(&t, p);
            let one = c.powi(2).add(&s.powi(2));
            assert!(
                one.contains_rational(&BigRational::one()),
                "c^2+s^2 missed 1 at {n}/{d}: {one}"
            );
            assert!(one.width() <= Dyadic::new(BigInt::from(1), -(p as i64) + 10));
        }
    }
}
