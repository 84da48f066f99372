//! Certified enclosures of the constants the tool needs: pi and ln 2.
//!
//! Both are computed by scaled-integer series summation with explicit error
//! accounting, then cached at the highest precision seen so far.

use super::{Dir, Dyadic, Interval};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// atan(1/x) * 2^w enclosed as `[s - err, s + err]`, x >= 2 an integer.
///
/// Alternating series sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)); each term is
/// floored to an integer (error < 1 per term), and the truncation tail is
/// below the first omitted term, which is itself < 1 at the stopping index.
fn atan_recip_scaled(x: u64, w: u64) -> (BigInt, BigInt) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut xpow = BigInt::from(x); // x^(2k+1)
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    let top = BigInt::from(1u8) << w;
    loop {
        let term = &top / (&xpow * BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        xpow *= &x2;
        k += 1;
    }
    // k floored terms plus one tail term, each worth < 1 unit.
    (sum, BigInt::from(k + 2))
}

fn compute_pi(p: u32) -> Interval {
    let w = p as u64 + 16;
    let (s5, e5) = atan_recip_scaled(5, w);
    let (s239, e239) = atan_recip_scaled(239, w);
    // pi = 16 atan(1/5) - 4 atan(1/239)
    let lo = BigInt::from(16) * (&s5 - &e5) - BigInt::from(4) * (&s239 + &e239);
    let hi = BigInt::from(16) * (&s5 + &e5) - BigInt::from(4) * (&s239 - &e239);
    let e = -(w as i64);
    Interval::from_endpoints(
        Dyadic::new(lo, e).round(p, Dir::Floor),
        Dyadic::new(hi, e).round(p, Dir::Ceil),
        p,
    )
}

fn compute_ln2(p: u32) -> Interval {
    // ln 2 = sum_{k>=1} 1/(k 2^k), positive decreasing terms.
    let w = p as u64 + 16;
    let mut sum = BigInt::zero();
    let mut k: u64 = 1;
    loop {
        if k > w {
            break;
        }
        let term = (BigInt::from(1u8) << (w - k)) / BigInt::from(k);
        if term.is_zero() {
            break;
        }
        sum += term;
        k += 1;
    }
    // Flooring deficit < k units; tail sum < 2 units.
    let lo = sum.clone();
    let hi = sum + BigInt::from(k + 2);
    let e = -(w as i64);
    Interval::from_endpoints(
        Dyadic::new(lo, e).round(p, Dir::Floor),
        Dyadic::new(hi, e).round(p, Dir::Ceil),
        p,
    )
}

struct ConstCache {
    computed_prec: u32,
    value: Interval,
}

fn cached(
    cell: &OnceLock<Mutex<HashMap<&'static str, ConstCache>>>,
    key: &'static str,
    p: u32,
    compute: fn(u32) -> Interval,
) -> Interval {
    let lock = cell.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = lock.lock().unwrap();
    match map.get(key) {
        Some(c) if c.computed_prec >= p => c.value.with_prec(p),
        _ => {
            // Compute ahead of demand so escalating callers mostly hit cache.
            let target = (2 * p).max(256);
            let value = compute(target);
            let out = value.with_prec(p);
            map.insert(
                key,
                ConstCache {
                    computed_prec: target,
                    value,
                },
            );
            out
        }
    }
}

static CACHE: OnceLock<Mutex<HashMap<&'static str, ConstCache>>> = OnceLock::new();

/// Enclosure of pi at `p` bits; width is at most `2^(2-p)`.
pub fn pi(p: u32) -> Interval {
    cached(&CACHE, "pi", p.max(8), compute_pi)
}

/// Enclosure of ln 2 at `p` bits.
pub fn ln2(p: u32) -> Interval {
    cached(&CACHE, "ln2", p.max(8), compute_ln2)
}
