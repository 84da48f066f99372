//! Jensen polynomials, exact hyperbolicity testing, minimal-shift scans, and
//! log-concavity / multiplicative-inequality checks for integer sequences.

mod poly;

pub use poly::IntPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// Exact binomial coefficient.
fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for t in 1..=k {
        out = out * BigInt::from(n - k + t) / BigInt::from(t);
    }
    out
}

/// Jensen polynomial of degree `d` and shift `n` for a sequence:
/// `J^{d,n}(X) = sum_i C(d,i) a_{n+i} X^i`, exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenPoly {
    pub d: usize,
    pub shift: usize,
    poly: IntPoly,
}

impl JensenPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.poly.is_hyperbolic()
    }
}

/// Build `J^{d,n}` from a coefficient table; the table must cover
/// `n ..= n+d`.
pub fn jensen(seq: &[BigInt], d: usize, shift: usize) -> JensenPoly {
    assert!(d >= 1, "jensen polynomials need degree >= 1");
    assert!(
        shift + d < seq.len(),
        "sequence too short: need indices {shift}..={} but have {}",
        shift + d,
        seq.len()
    );
    let coeffs = (0..=d)
        .map(|i| binomial(d, i) * &seq[shift + i])
        .collect::<Vec<_>>();
    JensenPoly {
        d,
        shift,
        poly: IntPoly::new(coeffs),
    }
}

/// Exact log-concavity test at index `n >= 1`: `a_n^2 >= a_{n-1} a_{n+1}`.
pub fn log_concave_at(seq: &[BigInt], n: usize) -> bool {
    assert!(n >= 1 && n + 1 < seq.len(), "index out of range");
    &seq[n] * &seq[n] >= &seq[n - 1] * &seq[n + 1]
}

/// Exact third-order Turán inequality at `n >= 1`:
/// `4 (a_n^2 - a_{n-1} a_{n+1}) (a_{n+1}^2 - a_n a_{n+2})
///    >= (a_n a_{n+1} - a_{n-1} a_{n+2})^2`.
pub fn turan3_at(seq: &[BigInt], n: usize) -> bool {
    assert!(n >= 1 && n + 2 < seq.len(), "index out of range");
    let t1 = &seq[n] * &seq[n] - &seq[n - 1] * &seq[n + 1];
    let t2 = &seq[n + 1] * &seq[n + 1] - &seq[n] * &seq[n + 2];
    let cross = &seq[n] * &seq[n + 1] - &seq[n - 1] * &seq[n + 2];
    BigInt::from(4) * t1 * t2 >= &cross * &cross
}

/// Result of scanning shifts `n = 0..=horizon` for hyperbolicity of
/// `J^{d,n}`. `minimal_shift` is the least `N` with no failures in
/// `[N, horizon]`; it is `None` when the last scanned shift itself fails
/// (unstable at the horizon, no honest `N` can be reported). Hyperbolicity
/// beyond the horizon is unverified; results are conjectural there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranScanResult {
    pub d: usize,
    pub horizon: usize,
    pub minimal_shift: Option<usize>,
    pub failures: Vec<usize>,
}

/// Scan `J^{d,n}` for `n = 0..=horizon`; the sequence must cover
/// `0..=horizon+d`.
pub fn scan_minimal_shift(seq: &[BigInt], d: usize, horizon: usize) -> TuranScanResult {
    assert!(d >= 1);
    assert!(horizon + d < seq.len(), "sequence too short for scan");
    let mut failures = Vec::new();
    for n in 0..=horizon {
        if !jensen(seq, d, n).is_hyperbolic() {
            failures.push(n);
        }
    }
    let minimal_shift = match failures.last() {
        None => Some(0),
        Some(&last) if last == horizon => None,
        Some(&last) => Some(last + 1),
    };
    TuranScanResult {
        d,
        horizon,
        minimal_shift,
        failures,
    }
}

/// All violations of `a_a * a_b >= a_{a+b}` over `1 <= a <= a_max`,
/// `1 <= b <= b_max`; empty means the multiplicative inequality holds on the
/// whole rectangle. The table must cover `0..=a_max+b_max`.
pub fn multiplicative_violations(
    seq: &[BigInt],
    a_max: usize,
    b_max: usize,
) -> Vec<(usize, usize)> {
    assert!(a_max >= 1 && b_max >= 1);
    assert!(a_max + b_max < seq.len(), "sequence too short");
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            if &seq[a] * &seq[b] < seq[a + b] {
                out.push((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{delta_coeffs, eta_quotient_coeffs, EtaQuotient};
    use proptest::prelude::*;

    fn delta(k: u64, order: usize) -> Vec<BigInt> {
        delta_coeffs(k, order).coeffs().to_vec()
    }

    fn partition_numbers(order: usize) -> Vec<BigInt> {
        eta_quotient_coeffs(&EtaQuotient::partition(), order)
            .coeffs()
            .to_vec()
    }

    #[test]
    fn jensen_coefficients_match_binomials() {
        // Delta_1(1..3) = 3, 8, 18 with weights (1, 2, 1).
        let j = jensen(&delta(1, 5), 2, 1);
        assert_eq!(
            j.coeffs(),
            &[BigInt::from(3), BigInt::from(16), BigInt::from(18)][..]
        );
        // Constant sequence gives (1+X)^d.
        let ones = vec![BigInt::one(); 5];
        let j = jensen(&ones, 2, 0);
        assert_eq!(
            j.coeffs(),
            &[BigInt::one(), BigInt::from(2), BigInt::one()][..]
        );
        assert!(j.is_hyperbolic());
    }

    #[test]
    fn degree_one_always_hyperbolic() {
        let seq = delta(1, 40);
        for n in 0..30 {
            assert!(jensen(&seq, 1, n).is_hyperbolic());
        }
    }

    #[test]
    fn delta1_degree3_threshold() {
        let seq = delta(1, 20);
        assert!(!jensen(&seq, 3, 3).is_hyperbolic());
        assert!(jensen(&seq, 3, 4).is_hyperbolic());
    }

    #[test]
    fn log_concavity_small_cases() {
        let seq = delta(1, 10);
        assert!(log_concave_at(&seq, 1)); // 9 >= 1*8
        assert!(log_concave_at(&seq, 2)); // 64 >= 3*18
    }

    #[test]
    fn partition_function_negative_controls() {
        // p(n) is log-concave exactly from n = 26 onward; 25 fails.
        let p = partition_numbers(600);
        assert!(!log_concave_at(&p, 25));
        for n in 26..=500 {
            assert!(log_concave_at(&p, n), "p log-concavity failed at {n}");
        }
        // Third-order Turán holds for p from 95; 94 fails.
        assert!(!turan3_at(&p, 94));
        for n in 95..=500 {
            assert!(turan3_at(&p, n), "p order-3 failed at {n}");
        }
    }

    #[test]
    fn turan3_examples() {
        // The order-3 inequality at n tracks hyperbolicity of J^{3,n-1}:
        // the d=3 minimal shift 4 means the last failure is at n = 5 - 1.
        let seq = delta(1, 10);
        assert!(!turan3_at(&seq, 2));
        assert!(turan3_at(&seq, 3));
        assert!(!turan3_at(&seq, 4));
        for n in 5..=7 {
            assert!(turan3_at(&seq, n), "expected order-3 to hold at {n}");
        }
        let ones = vec![BigInt::one(); 6];
        assert!(turan3_at(&ones, 1)); // both sides zero
    }

    #[test]
    fn order_equivalences_with_jensen_shifts() {
        // d=2: log-concave at n iff J^{2,n-1} hyperbolic;
        // d=3: order-3 at n iff J^{3,n-1} hyperbolic.
        for k in [1u64, 2] {
            let seq = delta(k, 503);
            for n in 1..=500 {
                assert_eq!(
                    log_concave_at(&seq, n),
                    jensen(&seq, 2, n - 1).is_hyperbolic(),
                    "d=2 equivalence failed at k={k}, n={n}"
                );
                assert_eq!(
                    turan3_at(&seq, n),
                    jensen(&seq, 3, n - 1).is_hyperbolic(),
                    "d=3 equivalence failed at k={k}, n={n}"
                );
            }
        }
    }

    #[test]
    fn scan_reports_minimal_shift_and_failures() {
        let seq = delta(1, 320);
        let r = scan_minimal_shift(&seq, 4, 300);
        assert_eq!(r.minimal_shift, Some(17));
        assert_eq!(r.failures.last(), Some(&16));
        assert!(r.failures.iter().all(|&n| n < 17));
        // d=2 never fails (log-concavity from n=1, and n=0 holds too).
        let r2 = scan_minimal_shift(&seq, 2, 100);
        assert_eq!(r2.minimal_shift, Some(0));
        assert!(r2.failures.is_empty());
    }

    #[test]
    fn scan_unstable_at_horizon() {
        // Delta_1 d=4 fails at n=16; a horizon of 16 has no honest N.
        let seq = delta(1, 30);
        let r = scan_minimal_shift(&seq, 4, 16);
        assert_eq!(r.minimal_shift, None);
    }

    #[test]
    fn multiplicative_small() {
        let seq = delta(1, 3);
        // 3 * 3 = 9 >= Delta_1(2) = 8.
        assert!(multiplicative_violations(&seq, 1, 1).is_empty());
    }

    // --- numeric cross-check of the exact hyperbolicity decision ---

    #[derive(Clone, Copy)]
    struct C {
        re: f64,
        im: f64,
    }

    impl C {
        fn new(re: f64, im: f64) -> C {
            C { re, im }
        }
        fn add(self, o: C) -> C {
            C::new(self.re + o.re, self.im + o.im)
        }
        fn sub(self, o: C) -> C {
            C::new(self.re - o.re, self.im - o.im)
        }
        fn mul(self, o: C) -> C {
            C::new(
                self.re * o.re - self.im * o.im,
                self.re * o.im + self.im * o.re,
            )
        }
        fn div(self, o: C) -> C {
            let d = o.re * o.re + o.im * o.im;
            C::new(
                (self.re * o.re + self.im * o.im) / d,
                (self.im * o.re - self.re * o.im) / d,
            )
        }
        fn abs(self) -> f64 {
            self.re.hypot(self.im)
        }
    }

    /// Durand-Kerner iteration; None if it fails to settle.
    fn numeric_roots(coeffs: &[f64]) -> Option<Vec<C>> {
        let deg = coeffs.len() - 1;
        if deg == 0 {
            return Some(Vec::new());
        }
        let lead = coeffs[deg];
        let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
        let eval = |z: C| {
            let mut acc = C::new(0.0, 0.0);
            for c in monic.iter().rev() {
                acc = acc.mul(z).add(C::new(*c, 0.0));
            }
            acc
        };
        let mut zs: Vec<C> = (0..deg)
            .map(|i| {
                let base = C::new(0.4, 0.9);
                let mut acc = C::new(1.0, 0.0);
                for _ in 0..=i {
                    acc = acc.mul(base);
                }
                acc
            })
            .collect();
        for _ in 0..600 {
            let mut max_step = 0.0f64;
            for i in 0..deg {
                let mut denom = C::new(1.0, 0.0);
                for j in 0..deg {
                    if i != j {
                        denom = denom.mul(zs[i].sub(zs[j]));
                    }
                }
                if denom.abs() < 1e-280 {
                    return None;
                }
                let step = eval(zs[i]).div(denom);
                zs[i] = zs[i].sub(step);
                max_step = max_step.max(step.abs());
            }
            if max_step < 1e-13 {
                return Some(zs);
            }
        }
        None
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        /// Exact Sturm decision vs numeric companion roots, wherever the
        /// numeric picture is unambiguous.
        #[test]
        fn sturm_agrees_with_numeric_roots(
            coeffs in proptest::collection::vec(-50i64..=50, 3..=9),
        ) {
            prop_assume!(*coeffs.last().unwrap() != 0);
            let p = IntPoly::from_i64(&coeffs);
            let exact = p.is_hyperbolic();
            let floats: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();
            if let Some(roots) = numeric_roots(&floats) {
                let max_im = roots.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
                if max_im <= 1e-9 {
                    prop_assert!(exact, "numeric says all real, Sturm disagrees: {coeffs:?}");
                } else if max_im > 1e-6 {
                    prop_assert!(!exact, "numeric says complex root, Sturm disagrees: {coeffs:?}");
                }
                // Ambiguous band: no claim either way.
            }
        }

        /// Permuting which equivalent formulation we use never changes the
        /// exact d=2 answer on random positive sequences.
        #[test]
        fn d2_equivalence_random_sequences(
            vals in proptest::collection::vec(1i64..=10_000, 3..=12),
        ) {
            let seq: Vec<BigInt> = vals.iter().map(|&v| BigInt::from(v)).collect();
            for n in 1..seq.len() - 1 {
                prop_assert_eq!(
                    log_concave_at(&seq, n),
                    jensen(&seq, 2, n - 1).is_hyperbolic()
                );
            }
        }
    }
}
