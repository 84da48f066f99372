//! Exact power-series arithmetic over big integers.
//!
//! The generating function engine: Euler-factor expansions, eta-quotient
//! coefficient tables, and the broken k-diamond counting sequence, all
//! computed with exact integer arithmetic so they can serve as ground truth
//! for every approximate evaluation elsewhere in the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;
use std::fmt::Write as _;

/// Errors from constructing eta quotients.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QseriesError {
    #[error("eta quotient needs at least one factor")]
    Empty,
    #[error("repeated modulus {0} in eta quotient")]
    DuplicateModulus(u64),
    #[error("zero exponent on modulus {0}")]
    ZeroExponent(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// A finite product `prod_r (q^{m_r}; q^{m_r})^{delta_r}` described by its
/// `(m_r, delta_r)` pairs; the `m_r` are distinct positive integers and the
/// `delta_r` are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u64, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: Vec<(u64, i64)>) -> Result<EtaQuotient, QseriesError> {
        if factors.is_empty() {
            return Err(QseriesError::Empty);
        }
        for (i, &(m, d)) in factors.iter().enumerate() {
            if m == 0 {
                return Err(QseriesError::ZeroModulus);
            }
            if d == 0 {
                return Err(QseriesError::ZeroExponent(m));
            }
            if factors[..i].iter().any(|&(m2, _)| m2 == m) {
                return Err(QseriesError::DuplicateModulus(m));
            }
        }
        Ok(EtaQuotient { factors })
    }

    /// The quotient whose coefficients count broken k-diamond partitions:
    /// `(q^2)(q^{2k+1}) / ((q)^3 (q^{4k+2}))` in Euler-product shorthand.
    pub fn broken_diamond(k: u64) -> EtaQuotient {
        assert!(k >= 1, "broken_diamond requires k >= 1");
        EtaQuotient::new(vec![(1, -3), (2, 1), (2 * k + 1, 1), (4 * k + 2, -1)])
            .expect("distinct moduli for k >= 1")
    }

    /// The ordinary partition function as an eta quotient, `1/(q;q)`.
    pub fn partition() -> EtaQuotient {
        EtaQuotient::new(vec![(1, -1)]).expect("valid")
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    /// `n0 = -sum m_r delta_r`; may have either sign.
    pub fn n0(&self) -> i64 {
        -self.factors.iter().map(|&(m, d)| m as i64 * d).sum::<i64>()
    }

    /// Common period of the gcd-periodic constants: lcm of the moduli.
    pub fn period(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, &(m, _)| acc.lcm(&m))
    }
}

/// Exact coefficients `g(0..=order)` of `q^{n0/24} G(q)` for an eta quotient
/// `G`; the dyadic prefactor is bookkeeping only and never materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSeries {
    quotient: EtaQuotient,
    coeffs: Vec<BigInt>,
}

impl ExactSeries {
    pub fn quotient(&self) -> &EtaQuotient {
        &self.quotient
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// JSON array of exact decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }

    /// CSV with an `n,coefficient` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,coefficient\n");
        for (n, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{n},{c}");
        }
        out
    }
}

/// Truncated product of two coefficient tables, skipping zero coefficients
/// (the Euler factors are pentagonal-sparse, which makes this the dominant
/// fast path).
fn mul_trunc(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact reciprocal of a series with constant term 1.
fn invert_trunc(a: &[BigInt], order: usize) -> Vec<BigInt> {
    assert!(a[0].is_one(), "series inversion needs constant term 1");
    let nonzero: Vec<(usize, &BigInt)> = a
        .iter()
        .enumerate()
        .take(order + 1)
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut b = vec![BigInt::zero(); order + 1];
    b[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for &(i, ai) in &nonzero {
            if i > n {
                break;
            }
            acc += ai * &b[n - i];
        }
        b[n] = -acc;
    }
    b
}

/// Pentagonal-number expansion of `(q^m; q^m)_inf` truncated at `order`.
fn euler_product(m: u64, order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    out[0] = BigInt::one();
    let mut t: i64 = 1;
    loop {
        let mut placed = false;
        for s in [t, -t] {
            let g = s * (3 * s - 1) / 2;
            let e = m as i64 * g;
            if e >= 0 && (e as usize) <= order {
                let sign = if t % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                out[e as usize] += sign;
                placed = true;
            }
        }
        if !placed {
            break;
        }
        t += 1;
    }
    out
}

/// Coefficients of one Euler factor `(q^m; q^m)_inf^delta` mod `q^{order+1}`.
///
/// Positive powers multiply the pentagonal expansion repeatedly; negative
/// powers invert the corresponding positive power exactly.
pub fn euler_factor_series(m: u64, delta: i64, order: usize) -> ExactSeries {
    assert!(m >= 1 && delta != 0);
    let coeffs = euler_factor_coeffs(m, delta, order);
    let quotient = EtaQuotient::new(vec![(m, delta)]).expect("valid");
    ExactSeries { quotient, coeffs }
}

fn euler_factor_coeffs(m: u64, delta: i64, order: usize) -> Vec<BigInt> {
    let base = euler_product(m, order);
    let mut pow = base.clone();
    for _ in 1..delta.unsigned_abs() {
        pow = mul_trunc(&pow, &base, order);
    }
    if delta < 0 {
        invert_trunc(&pow, order)
    } else {
        pow
    }
}

/// Exact `g(0..=order)` for an eta quotient, by multiplying all factor
/// series. The result does not depend on the factor order.
pub fn eta_quotient_coeffs(quotient: &EtaQuotient, order: usize) -> ExactSeries {
    let mut acc: Option<Vec<BigInt>> = None;
    for &(m, delta) in quotient.factors() {
        let factor = euler_factor_coeffs(m, delta, order);
        acc = Some(match acc {
            None => factor,
            Some(cur) => mul_trunc(&cur, &factor, order),
        });
    }
    ExactSeries {
        quotient: quotient.clone(),
        coeffs: acc.expect("non-empty quotient"),
    }
}

/// The broken k-diamond counting sequence `Delta_k(0..=order)`, exact.
pub fn delta_coeffs(k: u64, order: usize) -> ExactSeries {
    eta_quotient_coeffs(&EtaQuotient::broken_diamond(k), order)
}
