//! Exact Dedekind sums, Kloosterman-type sums with certified enclosures, and
//! arbitrary-precision modified Bessel functions.

mod bessel;

pub use bessel::{bessel_i, bessel_tail_integral, BesselIndex};

pub use crate::interval::pi as pi_interval;

use crate::interval::{cos_pi, sin_pi, Dyadic, Interval};
use crate::qseries::EtaQuotient;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, thiserror::Error)]
pub enum SpecialError {
    /// The imaginary-part enclosure of a Kloosterman-type sum excluded zero.
    /// The sums are real by conjugate pairing; this can only fire if the
    /// phase convention is wrong, so it is surfaced instead of swallowed.
    #[error("imaginary part of A_{j}({n}) excludes zero at {prec} bits")]
    NonRealKloosterman { j: u64, n: u64, prec: u32 },
}

/// Exact Dedekind sum
/// `s(h, j) = sum_{r=1}^{j-1} ((r/j)) ((h r / j))`
/// with the sawtooth `((x)) = x - floor(x) - 1/2`, by direct summation.
///
/// `h` may be any integer (only `h mod j` matters); `j >= 1`.
pub fn dedekind_sum(h: i64, j: u64) -> BigRational {
    assert!(j >= 1);
    assert!(j <= (1 << 30), "denominator too large for direct summation");
    if j == 1 {
        return BigRational::zero();
    }
    let ji = j as i128;
    let h_red = (h as i128).rem_euclid(ji);
    // 4 j^2 s(h,j) = sum (2r - j)(2 (h r mod j) - j), exact in i128:
    // each factor is < 2j in magnitude and there are j-1 terms.
    let mut acc: i128 = 0;
    let mut hr_mod = 0i128; // h*r mod j, updated incrementally
    for r in 1..ji {
        hr_mod += h_red;
        if hr_mod >= ji {
            hr_mod -= ji;
        }
        acc += (2 * r - ji) * (2 * hr_mod - ji);
    }
    BigRational::new(BigInt::from(acc), BigInt::from(4) * ji * ji)
}

/// The n-independent data of one Kloosterman-type sum `A_j(n)` for a fixed
/// eta quotient: for each residue `h` coprime to `j`, the exact rational
/// Dedekind phase `sum_r delta_r s(m_r h / gcd(m_r,j), j / gcd(m_r,j))`.
#[derive(Debug, Clone)]
pub struct KloostermanPlan {
    j: u64,
    phases: Vec<(u64, BigRational)>,
}

impl KloostermanPlan {
    pub fn new(quotient: &EtaQuotient, j: u64) -> KloostermanPlan {
        assert!(j >= 1);
        let mut phases = Vec::new();
        for h in 0..j {
            // gcd(0, 1) = 1, so j = 1 contributes exactly the h = 0 term.
            if h.gcd(&j) != 1 {
                continue;
            }
            let mut dedekind_part = BigRational::zero();
            for &(m, delta) in quotient.factors() {
                let g = m.gcd(&j);
                let h_arg = (m / g) as i64 * h as i64;
                let j_arg = j / g;
                let s = dedekind_sum(h_arg, j_arg);
                dedekind_part += BigRational::from_integer(BigInt::from(delta)) * s;
            }
            phases.push((h, dedekind_part));
        }
        KloostermanPlan { j, phases }
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// Enclosure of `A_j(n)`: phases are kept as exact rationals and only the
    /// final cosine is evaluated in intervals. The sine parts must cancel
    /// (the sum is real); their enclosure is checked to contain zero.
    ///
    /// Phase convention: the exponent carries `-2 pi i h n / j`, i.e. the
    /// circle-method phase including its n-dependence (some statements of
    /// the sum print the exponent without the n). Two independent checks pin
    /// this down: the enclosures round-trip the exact eta-quotient
    /// coefficients, and on `1/(q;q)` the same convention reproduces the
    /// classical series for the partition numbers.
    pub fn eval(&self, n: u64, prec: u32) -> Result<Interval, SpecialError> {
        let mut real = Interval::zero(prec);
        let mut imag = Interval::zero(prec);
        let n_mod = n % self.j;
        for (h, dedekind_part) in &self.phases {
            // theta = -2 h n / j - dedekind_part, exact.
            let theta = BigRational::new(
                BigInt::from(-2i64) * BigInt::from(*h) * BigInt::from(n_mod),
                BigInt::from(self.j),
            ) - dedekind_part;
            real = real.add(&cos_pi(&theta, prec));
            imag = imag.add(&sin_pi(&theta, prec));
        }
        if !imag.contains_zero() {
            return Err(SpecialError::NonRealKloosterman { j: self.j, n, prec });
        }
        Ok(real)
    }
}

/// One-shot enclosure of `A_j(n)` for an eta quotient.
///
/// Callers evaluating many `n` for the same quotient should build a
/// [`KloostermanPlan`] once per `j` instead; the Dedekind phases do not
/// depend on `n`.
pub fn a_hat(j: u64, n: u64, quotient: &EtaQuotient, prec: u32) -> Result<Interval, SpecialError> {
    KloostermanPlan::new(quotient, j).eval(n, prec)
}

/// Width padding used by tests when comparing interval magnitudes.
pub fn slack(prec: u32) -> Dyadic {
    Dyadic::new(BigInt::from(1), -(prec as i64) / 2)
}
