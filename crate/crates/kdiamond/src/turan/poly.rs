//! Integer polynomials with exact real-root counting.
//!
//! Sturm chains are computed with sign-true pseudo-remainders over the
//! integers (no rational normalization, no floating point), so hyperbolicity
//! decisions are exact even at multiple roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content, keeping signs.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn scale(&self, f: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * f).collect())
    }

    /// `self - f * x^shift * other`, in place arithmetic.
    fn sub_scaled_shifted(&self, f: &BigInt, shift: usize, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len() + shift);
        let mut out = self.coeffs.clone();
        out.resize(len, BigInt::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i + shift] -= f * c;
        }
        IntPoly::new(out)
    }

    /// Sign-true pseudo-remainder: returns `r` with
    /// `|lc(d)|^k * self = q * d + r`, `deg r < deg d`, for some `k >= 0`.
    /// The positive multiplier means `sign(r(x)) = sign(rem(self, d)(x))`
    /// pointwise, which is what Sturm chains need.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_sign_neg = lc.is_negative();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let top = r.leading().unwrap().clone();
            // |lc| * r - sign(lc) * top * x^(dr-dd) * d cancels the top term.
            let f = if lc_sign_neg { -top } else { top };
            r = r.scale(&lc_abs).sub_scaled_shifted(&f, dr - dd, d);
        }
        r
    }

    /// Exact quotient; panics if the division is not exact.
    fn div_exact(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let self_deg = match self.degree() {
            Some(v) => v,
            None => return IntPoly::zero(),
        };
        assert!(self_deg >= dd);
        let mut q = vec![BigInt::zero(); self_deg - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(lc);
            assert!(rem.is_zero(), "polynomial division not exact");
            q[dr - dd] = qc.clone();
            r = r.sub_scaled_shifted(&qc, dr - dd, d);
        }
        assert!(r.is_zero(), "polynomial division not exact");
        IntPoly::new(q)
    }

    /// Primitive gcd via a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        loop {
            if b.is_zero() {
                // Normalize to positive leading coefficient.
                if a.leading().is_some_and(|l| l.is_negative()) {
                    a = a.scale(&-BigInt::one());
                }
                return a;
            }
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
    }

    /// Square-free part `self / gcd(self, self')`; same distinct roots,
    /// all with multiplicity one.
    pub fn square_free_part(&self) -> IntPoly {
        assert!(!self.is_zero());
        if self.degree() == Some(0) {
            return self.primitive();
        }
        let g = self.primitive().gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.primitive()
        } else {
            self.primitive().div_exact(&g)
        }
    }

    /// Number of distinct real roots, by Sturm's theorem over (-inf, +inf).
    ///
    /// The chain uses sign-true pseudo-remainders with contents stripped, so
    /// every element is a positive multiple of the rational Sturm chain entry
    /// and the sign-variation counts agree.
    pub fn count_distinct_real_roots(&self) -> usize {
        let f = self.square_free_part();
        let deg = f.degree().expect("nonzero polynomial");
        if deg == 0 {
            return 0;
        }
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_zero() {
                break;
            }
            if last.degree() == Some(0) {
                break;
            }
            let prev = &chain[chain.len() - 2];
            let mut r = prev.pseudo_rem(last).primitive();
            // Sturm recurrence takes the negated remainder.
            r = r.scale(&-BigInt::one());
            chain.push(r);
        }
        // Sign variations at -inf and +inf from leading terms.
        let mut v_neg = 0usize;
        let mut v_pos = 0usize;
        let mut last_neg: Option<bool> = None;
        let mut last_pos: Option<bool> = None;
        for p in &chain {
            let Some(d) = p.degree() else { continue };
            let lead_positive = p.leading().unwrap().is_positive();
            let at_pos = lead_positive;
            let at_neg = lead_positive == (d % 2 == 0);
            if let Some(prev) = last_pos {
                if prev != at_pos {
                    v_pos += 1;
                }
            }
            if let Some(prev) = last_neg {
                if prev != at_neg {
                    v_neg += 1;
                }
            }
            last_pos = Some(at_pos);
            last_neg = Some(at_neg);
        }
        v_neg - v_pos
    }

    /// True when every complex root is real, decided exactly.
    pub fn is_hyperbolic(&self) -> bool {
        assert!(!self.is_zero(), "hyperbolicity of the zero polynomial");
        let deg = self.degree().unwrap();
        if deg <= 1 {
            return true;
        }
        let sf = self.square_free_part();
        self.count_distinct_real_roots() == sf.degree().unwrap()
    }
}
