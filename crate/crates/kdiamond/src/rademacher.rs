//! Convergent-series evaluation of eta-quotient coefficients: applicability
//! checking, the exact-form series with certified truncation tails, the
//! dominant main term, and the classical error envelope.
//!
//! The engine is generic over any applicable eta quotient; the broken
//! k-diamond quotients for k = 1, 2 are the primary clients, and k >= 3 is
//! rejected with the witness index that breaks the applicability condition.

use crate::interval::{exp, pi, Dyadic, Interval};
use crate::qseries::EtaQuotient;
use crate::special::{bessel_i, bessel_tail_integral, BesselIndex, KloostermanPlan, SpecialError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::RwLock;

/// Default ceiling for precision escalation, in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

#[derive(Debug, thiserror::Error)]
pub enum RademacherError {
    #[error("series does not apply to this quotient: beta({witness}) < 0")]
    Inapplicable { witness: u64 },
    #[error("series requires c1 > 0, got {c1}")]
    NonPositiveGrowth { c1: BigRational },
    #[error("argument out of domain: 24n - n0 must be positive (n = {n})")]
    Domain { n: u64 },
    #[error("enclosure still indecisive at the {cap}-bit precision cap (n = {n})")]
    PrecisionExhausted { n: u64, cap: u32 },
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// The gcd-periodic constants attached to an eta quotient: growth exponent
/// `c1`, multiplier square `c2(j)^2`, Bessel-argument factor `c3(j)`, and the
/// applicability margin `beta(j)`, tabulated over one full period.
#[derive(Debug, Clone)]
pub struct SeriesConstants {
    c1: BigRational,
    period: u64,
    c2_squared: Vec<BigRational>,
    c3: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl SeriesConstants {
    /// Exact constants for a quotient, tabulated for `j = 1..=period`.
    ///
    /// The multiplier is `c2(j)^2 = prod_r (gcd(m_r, j) / m_r)^{delta_r}`
    /// (each factor's own modulus in the denominator; printed statements of
    /// this product sometimes garble the subscript). For the k-diamond
    /// quotients it collapses to 1 for every j, which the tests pin down.
    pub fn new(quotient: &EtaQuotient) -> SeriesConstants {
        let period = quotient.period();
        let mut c2_squared = Vec::with_capacity(period as usize);
        let mut c3 = Vec::with_capacity(period as usize);
        let mut beta = Vec::with_capacity(period as usize);
        let delta_sum: i64 = quotient.factors().iter().map(|&(_, d)| d).sum();
        let c1 = BigRational::new(BigInt::from(-delta_sum), BigInt::from(2));
        for j in 1..=period {
            let mut c2s = BigRational::one();
            let mut c3j = BigRational::zero();
            let mut min_term: Option<BigRational> = None;
            for &(m, delta) in quotient.factors() {
                let g = m.gcd(&j);
                let ratio = BigRational::new(g.into(), m.into());
                c2s *= rational_powi(&ratio, delta);
                let g2_over_m = BigRational::new((g * g).into(), m.into());
                c3j -= BigRational::from_integer(delta.into()) * &g2_over_m;
                min_term = Some(match min_term {
                    None => g2_over_m,
                    Some(cur) => cur.min(g2_over_m),
                });
            }
            let beta_j = min_term.unwrap() - &c3j / BigRational::from_integer(24.into());
            c2_squared.push(c2s);
            c3.push(c3j);
            beta.push(beta_j);
        }
        SeriesConstants {
            c1,
            period,
            c2_squared,
            c3,
            beta,
        }
    }

    pub fn c1(&self) -> &BigRational {
        &self.c1
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    fn idx(&self, j: u64) -> usize {
        assert!(j >= 1);
        (((j - 1) % self.period) + 1) as usize - 1
    }

    pub fn c2_squared(&self, j: u64) -> &BigRational {
        &self.c2_squared[self.idx(j)]
    }

    pub fn c3(&self, j: u64) -> &BigRational {
        &self.c3[self.idx(j)]
    }

    pub fn beta(&self, j: u64) -> &BigRational {
        &self.beta[self.idx(j)]
    }

    /// Applicability: `c1 > 0` and `beta(j) >= 0` over a full period.
    /// Returns the smallest failing `j` as a witness.
    pub fn check_applicable(&self) -> Result<(), RademacherError> {
        if !self.c1.is_positive() {
            return Err(RademacherError::NonPositiveGrowth {
                c1: self.c1.clone(),
            });
        }
        for j in 1..=self.period {
            if self.beta(j).is_negative() {
                return Err(RademacherError::Inapplicable { witness: j });
            }
        }
        Ok(())
    }
}

fn rational_powi(r: &BigRational, e: i64) -> BigRational {
    r.pow(i32::try_from(e).expect("small exponent"))
}

/// Verdict of the applicability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    /// Smallest j with beta(j) < 0.
    Inapplicable {
        witness: u64,
    },
}

pub fn applicable(quotient: &EtaQuotient) -> Applicability {
    match SeriesConstants::new(quotient).check_applicable() {
        Ok(()) => Applicability::Applicable,
        Err(RademacherError::Inapplicable { witness }) => Applicability::Inapplicable { witness },
        Err(_) => Applicability::Inapplicable { witness: 0 },
    }
}

/// `r^(e4/4)` for a nonnegative exact rational, as an enclosure: an exact
/// integer power followed by up to two square roots.
fn rational_pow_quarter(r: &BigRational, e4: u32, prec: u32) -> Interval {
    assert!(!r.is_negative());
    if e4 == 0 {
        return Interval::one(prec);
    }
    let whole = rational_powi(r, (e4 / 4) as i64);
    let rem = e4 % 4;
    let base = Interval::from_rational(&whole, prec);
    if rem == 0 {
        return base;
    }
    // r^(rem/4) = sqrt(sqrt(r^rem))
    let frac = Interval::from_rational(&rational_powi(r, rem as i64), prec)
        .sqrt()
        .sqrt();
    base.mul(&frac)
}

/// Evaluation statistics attached to a certified value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalStats {
    pub truncation: u64,
    pub precision: u32,
}

/// Series evaluator for one applicable eta quotient. Caches the
/// n-independent Kloosterman phase data per denominator `j`.
pub struct SeriesEngine {
    quotient: EtaQuotient,
    constants: SeriesConstants,
    index: BesselIndex,
    /// 2(c1+1); the Bessel order doubled, also the quarter-power exponent
    /// times two used in the prefactor and per-term weights.
    two_nu: u32,
    plans: RwLock<HashMap<u64, KloostermanPlan>>,
}

impl SeriesEngine {
    pub fn new(quotient: EtaQuotient) -> Result<SeriesEngine, RademacherError> {
        let constants = SeriesConstants::new(&quotient);
        constants.check_applicable()?;
        // 2 c1 is an integer by construction; nu = c1 + 1.
        let two_c1_rat = constants.c1() * BigRational::from_integer(2.into());
        assert!(two_c1_rat.is_integer());
        let two_c1 = two_c1_rat.to_integer().to_i64().expect("small c1");
        let two_nu = u32::try_from(two_c1 + 2).expect("positive Bessel order");
        Ok(SeriesEngine {
            quotient,
            constants,
            index: BesselIndex::from_twice(two_nu),
            two_nu,
            plans: RwLock::new(HashMap::new()),
        })
    }

    pub fn quotient(&self) -> &EtaQuotient {
        &self.quotient
    }

    pub fn constants(&self) -> &SeriesConstants {
        &self.constants
    }

    fn with_plan<T>(&self, j: u64, f: impl FnOnce(&KloostermanPlan) -> T) -> T {
        {
            let plans = self.plans.read().unwrap();
            if let Some(plan) = plans.get(&j) {
                return f(plan);
            }
        }
        let plan = KloostermanPlan::new(&self.quotient, j);
        let mut plans = self.plans.write().unwrap();
        let entry = plans.entry(j).or_insert(plan);
        f(entry)
    }

    /// Precompute phase plans for all `j <= j_max` (so that later parallel
    /// evaluations only take read locks).
    pub fn prepare(&self, j_max: u64) {
        for j in 1..=j_max {
            self.with_plan(j, |_| ());
        }
    }

    /// `24n - n0`; positive for every index the series covers.
    fn t24(&self, n: u64) -> Result<BigInt, RademacherError> {
        let v = BigInt::from(24u8) * BigInt::from(n) - BigInt::from(self.quotient.n0());
        if v.is_positive() {
            Ok(v)
        } else {
            Err(RademacherError::Domain { n })
        }
    }

    /// Prefactor `2 pi (24n - n0)^(-(c1+1)/2)`.
    fn prefactor(&self, t24: &BigInt, prec: u32) -> Interval {
        let base = BigRational::from_integer(t24.clone());
        let power = rational_pow_quarter(&base, self.two_nu, prec);
        pi(prec).mul_pow2(1).div(&power)
    }

    /// `pi sqrt(c3(j) (24n - n0)) / 6`: the class-constant part of the
    /// Bessel argument (the full argument divides this by `j`).
    fn class_scale(&self, j: u64, t24: &BigInt, prec: u32) -> Interval {
        let c3 = self.constants.c3(j);
        let scaled = c3 * BigRational::from_integer(t24.clone());
        Interval::from_rational(&scaled, prec)
            .sqrt()
            .mul(&pi(prec))
            .div(&Interval::from_i64(6, prec))
    }

    /// Bessel argument `pi sqrt(c3(j) (24n - n0)) / (6 j)`.
    fn bessel_arg(&self, j: u64, t24: &BigInt, prec: u32) -> Interval {
        self.class_scale(j, t24, prec)
            .div(&Interval::from_i64(j as i64, prec))
    }

    /// Certified upper bound for the absolute tail of the series beyond
    /// truncation `j_trunc`, using `|A_j(n)| <= j`, the periodic per-class
    /// constants, and the integral comparison
    /// `sum_{j in class, j >= j0} I_nu(s/j) <= I_nu(s/j0) + (1/L) int_{j0}^inf I_nu(s/t) dt`.
    pub fn tail_bound(&self, n: u64, j_trunc: u64, prec: u32) -> Result<Dyadic, RademacherError> {
        let t24 = self.t24(n)?;
        let period = self.constants.period();
        let pref = self.prefactor(&t24, prec);
        let mut acc = Interval::zero(prec);
        for class in 1..=period {
            let c3 = self.constants.c3(class);
            if !c3.is_positive() {
                continue;
            }
            // Smallest series index beyond the truncation in this class.
            let rem = class % period;
            let mut j0 = (j_trunc / period) * period + rem;
            while j0 <= j_trunc {
                j0 += period;
            }
            let s = self.class_scale(class, &t24, prec);
            let boundary = bessel_i(
                self.index,
                &s.div(&Interval::from_i64(j0 as i64, prec)),
                prec,
            );
            let integral = bessel_tail_integral(self.index, &s, j0, prec)
                .div(&Interval::from_i64(period as i64, prec));
            let c2 = Interval::from_rational(self.constants.c2_squared(class), prec).sqrt();
            let weight = rational_pow_quarter(c3, self.two_nu, prec).mul(&c2);
            acc = acc.add(&weight.mul(&boundary.add(&integral)));
        }
        Ok(pref.mul(&acc).hi().clone())
    }

    /// Enclosure of the full series value at `n`: partial sum over
    /// `j = 1..=j_trunc` plus `[-tail, +tail]`.
    pub fn eval(&self, n: u64, j_trunc: u64, prec: u32) -> Result<Interval, RademacherError> {
        let t24 = self.t24(n)?;
        let pref = self.prefactor(&t24, prec);
        let mut sum = Interval::zero(prec);
        for j in 1..=j_trunc {
            let c3 = self.constants.c3(j);
            if !c3.is_positive() {
                continue;
            }
            let a = self.with_plan(j, |plan| plan.eval(n, prec))?;
            let arg = self.bessel_arg(j, &t24, prec);
            let bessel = bessel_i(self.index, &arg, prec);
            let c2 = Interval::from_rational(self.constants.c2_squared(j), prec).sqrt();
            let weight = rational_pow_quarter(c3, self.two_nu, prec)
                .mul(&c2)
                .div(&Interval::from_i64(j as i64, prec));
            sum = sum.add(&weight.mul(&a).mul(&bessel));
        }
        let tail = self.tail_bound(n, j_trunc, prec)?;
        Ok(pref.mul(&sum).widen(&tail))
    }

    /// Smallest truncation on a doubling schedule whose certified tail is
    /// below 1/4 (margin for the one-integer enclosure contract).
    pub fn choose_truncation(&self, n: u64) -> Result<u64, RademacherError> {
        self.t24(n)?;
        let quarter = Dyadic::new(BigInt::one(), -2);
        let mut j = 4u64;
        loop {
            let tail = self.tail_bound(n, j, 64)?;
            if tail < quarter {
                return Ok(j);
            }
            j *= 2;
            assert!(j < 1 << 40, "tail refuses to shrink");
        }
    }

    /// Certified integer value of the coefficient at `n`: evaluates with
    /// escalating precision until the enclosure contains exactly one integer.
    pub fn eval_integer(&self, n: u64, cap: u32) -> Result<(BigInt, EvalStats), RademacherError> {
        let truncation = self.choose_truncation(n)?;
        let mut prec = self.initial_precision(n)?.min(cap).max(64);
        loop {
            let value = self.eval(n, truncation, prec)?;
            if let Some(z) = value.unique_integer() {
                return Ok((
                    z,
                    EvalStats {
                        truncation,
                        precision: prec,
                    },
                ));
            }
            if prec >= cap {
                return Err(RademacherError::PrecisionExhausted { n, cap });
            }
            prec = (prec * 2).min(cap);
        }
    }

    /// Starting precision: enough bits for the coefficient's integer part
    /// (which grows like exp(sqrt(c3(1)) x)) plus working margin.
    fn initial_precision(&self, n: u64) -> Result<u32, RademacherError> {
        let t24 = self.t24(n)?;
        let c3_1 = self.constants.c3(1).clone();
        let s =
            estimate_sqrt(&(c3_1 * BigRational::from_integer(t24))) * std::f64::consts::FRAC_PI_6;
        Ok((s * std::f64::consts::LOG2_E).ceil() as u32 + 64)
    }
}

/// Rough f64 square root of a nonnegative rational, for sizing decisions
/// only (never for bounds).
fn estimate_sqrt(r: &BigRational) -> f64 {
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let shift = (num_bits - den_bits - 40).max(0) as u64;
    let num = (r.numer() >> shift).to_f64().unwrap_or(f64::MAX);
    let den = r.denom().to_f64().unwrap_or(f64::MAX);
    ((num / den) * 2f64.powi(shift as i32)).max(0.0).sqrt()
}

// --- broken k-diamond specializations -------------------------------------

/// `x_k(n) = pi sqrt(24n - (2k+2)) / 6`, defined when `24n > 2k+2`.
#[derive(Debug, Clone)]
pub struct XShift {
    pub k: u64,
    pub n: u64,
    pub value: Interval,
}

/// Dominant main term `M_k(n)` of the k-diamond series.
#[derive(Debug, Clone)]
pub struct MainTerm {
    pub k: u64,
    pub n: u64,
    pub value: Interval,
}

/// `alpha_k(1) = (5k+2)/(2k+1)`, the Bessel-argument factor at j = 1.
pub fn alpha_k1(k: u64) -> BigRational {
    BigRational::new((5 * k + 2).into(), (2 * k + 1).into())
}

pub fn x_shift(k: u64, n: u64, prec: u32) -> Result<XShift, RademacherError> {
    assert!(k >= 1);
    let arg = 24i64 * n as i64 - (2 * k as i64 + 2);
    if arg <= 0 {
        return Err(RademacherError::Domain { n });
    }
    let value = Interval::from_i64(arg, prec)
        .sqrt()
        .mul(&pi(prec))
        .div(&Interval::from_i64(6, prec));
    Ok(XShift { k, n, value })
}

/// Main term `M_k(n) = alpha_k(1) pi^3 / (18 x^2) * I_2(sqrt(alpha_k(1)) x)`.
pub fn main_term(k: u64, n: u64, prec: u32) -> Result<MainTerm, RademacherError> {
    assert!((1..=2).contains(&k), "main term is defined for k = 1, 2");
    let x = x_shift(k, n, prec)?.value;
    let alpha = alpha_k1(k);
    let alpha_iv = Interval::from_rational(&alpha, prec);
    let arg = alpha_iv.sqrt().mul(&x);
    let bessel = bessel_i(BesselIndex::integer(2), &arg, prec);
    let value = alpha_iv
        .mul(&pi(prec).powi(3))
        .div(&x.powi(2).mul(&Interval::from_i64(18, prec)))
        .mul(&bessel);
    Ok(MainTerm { k, n, value })
}

/// Certified upper bound for the series remainder:
/// `8 pi^(5/2) / (alpha_k(1)^(3/4) x^(7/2)) exp(sqrt(alpha_k(1)) x / 2)`.
pub fn error_bound(k: u64, n: u64, prec: u32) -> Result<Interval, RademacherError> {
    assert!((1..=2).contains(&k));
    let x = x_shift(k, n, prec)?.value;
    let alpha = alpha_k1(k);
    let pi_v = pi(prec);
    let num = pi_v
        .powi(2)
        .mul(&pi_v.sqrt())
        .mul(&Interval::from_i64(8, prec));
    let alpha34 = rational_pow_quarter(&alpha, 3, prec);
    let x72 = x.powi(3).mul(&x.sqrt());
    let half_arg = Interval::from_rational(&alpha, prec)
        .sqrt()
        .mul(&x)
        .mul_pow2(-1);
    Ok(num.div(&alpha34.mul(&x72)).mul(&exp(&half_arg)))
}

/// Engine for the broken k-diamond quotient; `Err(Inapplicable)` with the
/// witness index for every k >= 3.
pub fn delta_engine(k: u64) -> Result<SeriesEngine, RademacherError> {
    SeriesEngine::new(EtaQuotient::broken_diamond(k))
}
