//! Exact dyadic rationals `m * 2^e` with directed rounding.
//!
//! These are the endpoints of every [`super::Interval`]. Arithmetic is exact
//! until an explicit rounding step; every rounding step states its direction,
//! so enclosures never silently tighten.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction for an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    /// Toward negative infinity (lower endpoints).
    Floor,
    /// Toward positive infinity (upper endpoints).
    Ceil,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Floor => Dir::Ceil,
            Dir::Ceil => Dir::Floor,
        }
    }
}

/// An exact dyadic rational `mant * 2^exp`.
///
/// Zero is canonically `(0, 0)`; otherwise `mant` may carry trailing zero
/// bits (representations are not unique, so equality goes through `cmp`).
#[derive(Debug, Clone)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Dyadic) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Dyadic {
        if mant.is_zero() {
            Dyadic::zero()
        } else {
            Dyadic { mant, exp }
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_bigint(n: &BigInt) -> Dyadic {
        Dyadic::new(n.clone(), 0)
    }

    pub fn from_i64(n: i64) -> Dyadic {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Position of the leading bit: `2^(pos-1) <= |self| < 2^pos`.
    /// Zero reports `i64::MIN`.
    pub fn pos(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic::new(-&self.mant, self.exp)
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic::new(self.mant.abs(), self.exp)
    }

    /// Exact sum. Alignment cost is proportional to the exponent gap, so use
    /// [`Dyadic::add_round`] in precision-bounded contexts.
    pub fn add_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub_exact(&self, other: &Dyadic) -> Dyadic {
        self.add_exact(&other.neg())
    }

    pub fn mul_exact(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Directed rounding to `p` significant bits. Exact values pass through.
    pub fn round(&self, p: u32, dir: Dir) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let bits = self.mant.bits();
        if bits <= p as u64 {
            return self.clone();
        }
        let k = bits - p as u64;
        let den = BigInt::one() << k;
        let q = match dir {
            Dir::Floor => self.mant.div_floor(&den),
            Dir::Ceil => self.mant.div_ceil(&den),
        };
        Dyadic::new(q, self.exp + k as i64)
    }

    /// One unit in the last place at `p`-bit precision around this value.
    fn ulp(&self, p: u32) -> Dyadic {
        debug_assert!(!self.is_zero());
        Dyadic::new(BigInt::one(), self.pos() - p as i64)
    }

    /// Directed sum at `p` bits. When the magnitudes differ by far more than
    /// `p` bits the smaller operand is absorbed into a one-ulp nudge instead
    /// of materializing the alignment.
    pub fn add_round(&self, other: &Dyadic, p: u32, dir: Dir) -> Dyadic {
        if self.is_zero() {
            return other.round(p, dir);
        }
        if other.is_zero() {
            return self.round(p, dir);
        }
        let (big, small) = if self.pos() >= other.pos() {
            (self, other)
        } else {
            (other, self)
        };
        let gap = big.pos() - small.pos();
        if gap > p as i64 + 4 {
            // |small| < ulp(big at p bits) / 8
            let r = big.round(p, dir);
            let nudge_needed = match dir {
                Dir::Floor => small.is_negative(),
                Dir::Ceil => small.is_positive(),
            };
            if nudge_needed {
                let u = big.ulp(p);
                let r = match dir {
                    Dir::Floor => r.sub_exact(&u),
                    Dir::Ceil => r.add_exact(&u),
                };
                return r;
            }
            return r;
        }
        big.add_exact(small).round(p, dir)
    }

    pub fn sub_round(&self, other: &Dyadic, p: u32, dir: Dir) -> Dyadic {
        self.add_round(&other.neg(), p, dir)
    }

    pub fn mul_round(&self, other: &Dyadic, p: u32, dir: Dir) -> Dyadic {
        self.mul_exact(other).round(p, dir)
    }

    /// Directed quotient at `p` bits. Panics on a zero divisor.
    pub fn div_round(&self, other: &Dyadic, p: u32, dir: Dir) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let na = self.mant.bits();
        let nb = other.mant.bits();
        let shift = (nb + p as u64 + 2).saturating_sub(na);
        let num = &self.mant << shift;
        let (q, r) = num.div_rem(&other.mant);
        let value = if r.is_zero() {
            q
        } else {
            // div_rem truncates toward zero; fix up to the requested direction.
            let exact_negative = self.mant.is_negative() != other.mant.is_negative();
            match dir {
                Dir::Floor => {
                    if exact_negative {
                        q - 1
                    } else {
                        q
                    }
                }
                Dir::Ceil => {
                    if exact_negative {
                        q
                    } else {
                        q + 1
                    }
                }
            }
        };
        Dyadic::new(value, self.exp - other.exp - shift as i64).round(p, dir)
    }

    /// Directed square root at `p` bits. Panics on negative input.
    pub fn sqrt_round(&self, p: u32, dir: Dir) -> Dyadic {
        assert!(!self.is_negative(), "dyadic sqrt of negative value");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // Scale so the square root carries p+2 significant bits and the
        // exponent is even.
        let bits = self.mant.bits() as i64;
        let mut shift = (2 * (p as i64 + 2) - bits).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled: BigInt = &self.mant << shift as u64;
        let root = scaled.sqrt();
        let exact = (&root * &root) == scaled;
        let value = match dir {
            Dir::Floor => root,
            Dir::Ceil => {
                if exact {
                    root
                } else {
                    root + 1
                }
            }
        };
        Dyadic::new(value, (self.exp - shift) / 2).round(p, dir)
    }

    /// Floor of the value as an integer.
    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_floor(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    /// Ceiling of the value as an integer.
    pub fn ceil_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_ceil(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    /// Decimal rendering with `digits` significant digits, rounded in `dir`.
    ///
    /// The output is deterministic for a given (value, digits, dir) triple:
    /// sign, one leading digit, fraction, and a decimal exponent, e.g.
    /// `-1.0294061e12`.
    pub fn to_decimal(&self, digits: u32, dir: Dir) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        // 10^(d10-1) <= |self| < 10^(d10+1) with d10 from a log10 estimate.
        let pos = self.pos();
        let mut d10 = ((pos as f64 - 1.0) * std::f64::consts::LOG10_2).floor() as i64;
        // scaled = |self| * 10^(digits-1-d10), adjusted until it has exactly
        // `digits` digits. Directed rounding can push the value across a
        // digit boundary, so re-check both bounds after each adjustment.
        let bound = BigInt::from(10u32).pow(digits);
        let low = BigInt::from(10u32).pow(digits - 1);
        let mut scaled = self.scale_decimal(digits as i64 - 1 - d10, dir);
        loop {
            if scaled.magnitude() >= bound.magnitude() {
                d10 += 1;
            } else if scaled.magnitude() < low.magnitude() {
                d10 -= 1;
            } else {
                break;
            }
            scaled = self.scale_decimal(digits as i64 - 1 - d10, dir);
        }
        let sign = if scaled.is_negative() { "-" } else { "" };
        let s = scaled.magnitude().to_string();
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{sign}{head}e{d10}")
        } else {
            format!("{sign}{head}.{tail}e{d10}")
        }
    }

    /// `round_dir(self * 10^k)` as an integer.
    fn scale_decimal(&self, k: i64, dir: Dir) -> BigInt {
        let ten_pow = |e: u64| BigInt::from(10u32).pow(e as u32);
        let (num, den): (BigInt, BigInt) = if k >= 0 {
            (&self.mant * ten_pow(k as u64), BigInt::one())
        } else {
            (self.mant.clone(), ten_pow((-k) as u64))
        };
        let (num, den) = if self.exp >= 0 {
            (num << self.exp as u64, den)
        } else {
            (num, den << (-self.exp) as u64)
        };
        match dir {
            Dir::Floor => num.div_floor(&den),
            Dir::Ceil => num.div_ceil(&den),
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let sa = self.mant.sign();
        let sb = other.mant.sign();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if self.is_zero() {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare leading-bit positions first to avoid
        // aligning wildly different exponents.
        let (pa, pb) = (self.pos(), other.pos());
        if pa != pb {
            let mag = pa.cmp(&pb);
            return if self.is_negative() {
                mag.reverse()
            } else {
                mag
            };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20, Dir::Floor))
    }
}


#[cfg(test)]
mod directed_rounding_properties {
    use super::*;

    /// Exhaustive small-case check that directed ops really bracket the
    /// exact value, including the remote-operand nudge path.
    #[test]
    fn add_round_brackets_exact_sum() {
        let vals: Vec<Dyadic> = {
            let mut v = Vec::new();
            for m in [-7i64, -3, -1, 0, 1, 3, 7] {
                for e in [-90i64, -8, 0, 8, 90] {
                    v.push(Dyadic::new(BigInt::from(m), e));
                }
            }
            v
        };
        for a in &vals {
            for b in &vals {
                let exact = a.add_exact(b);
                for p in [4u32, 12, 48] {
                    let lo = a.add_round(b, p, Dir::Floor);
                    let hi = a.add_round(b, p, Dir::Ceil);
                    assert!(lo <= exact && exact <= hi, "a={a:?} b={b:?} p={p}");
                }
            }
        }
    }

    #[test]
    fn cmp_is_total_and_consistent_with_subtraction() {
        let vals: Vec<Dyadic> = [(3i64, 5i64), (96, 0), (-96, 0), (1, -70), (-5, 63), (0, 0)]
            .iter()
            .map(|&(m, e)| Dyadic::new(BigInt::from(m), e))
            .collect();
        for a in &vals {
            for b in &vals {
                let by_cmp = a.cmp(b);
                let diff = a.sub_exact(b);
                let by_diff = if diff.is_zero() {
                    std::cmp::Ordering::Equal
                } else if diff.is_negative() {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
                assert_eq!(by_cmp, by_diff, "a={a:?} b={b:?}");
            }
        }
    }
}
