//! Machine-readable report rows shared by the library and the CLI.
//!
//! All numeric payloads are decimal strings so reports are diffable,
//! precision-faithful, and independent of binary float formatting.

use crate::interval::Interval;
use serde::Serialize;

/// Digits used when rendering interval endpoints in reports.
pub const REPORT_DIGITS: u32 = 36;

/// An interval rendered for reports; the printed pair still encloses the
/// true value (lo rounded down, hi rounded up).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IntervalRepr {
    pub lo: String,
    pub hi: String,
    pub prec: u32,
}

impl IntervalRepr {
    pub fn of(iv: &Interval) -> IntervalRepr {
        let (lo, hi) = iv.to_decimal_pair(REPORT_DIGITS);
        IntervalRepr {
            lo,
            hi,
            prec: iv.prec(),
        }
    }
}

/// One row of a coefficient round-trip verification.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub k: u64,
    pub n: u64,
    pub exact: String,
    pub series_value: String,
    pub main_term_mid: String,
    pub error_bound_hi: String,
    pub truncation: u64,
    pub precision: u32,
    pub matched: bool,
}

/// One row of a minimal-shift scan, in the shape of the reference table.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub k: u64,
    pub d: usize,
    pub horizon: usize,
    /// None when the scan is unstable at the horizon.
    pub minimal_shift: Option<usize>,
    pub failures: Vec<usize>,
    /// Shifts beyond the horizon are unverified.
    pub conjectural_beyond_horizon: bool,
}

/// Render any serializable row as one JSON line.
pub fn json_line<T: Serialize>(row: &T) -> String {
    serde_json::to_string(row).expect("report rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_are_deterministic() {
        let row = ScanRow {
            k: 1,
            d: 4,
            horizon: 2000,
            minimal_shift: Some(17),
            failures: vec![2, 16],
            conjectural_beyond_horizon: true,
        };
        let a = json_line(&row);
        let b = json_line(&row);
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"k":1,"d":4,"#));
    }

    #[test]
    fn interval_repr_encloses() {
        let iv = Interval::from_i64(1, 64).div(&Interval::from_i64(3, 64));
        let repr = IntervalRepr::of(&iv);
        assert!(repr.lo.starts_with("3.333"));
        assert!(repr.hi.starts_with("3.333"));
        assert_eq!(repr.prec, 64);
    }
}
