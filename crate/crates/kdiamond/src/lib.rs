//! Exact and certified-interval toolkit for the broken k-diamond partition
//! function.
//!
//! The crate has three layers:
//!
//! * ground truth — [`qseries`] computes eta-quotient coefficients with exact
//!   big-integer arithmetic;
//! * analytic evaluation — [`special`] and [`rademacher`] evaluate the
//!   convergent series form of the same coefficients with certified interval
//!   enclosures, including truncation and precision control;
//! * verification — [`turan`] decides hyperbolicity and Turán-type
//!   inequalities exactly, and [`audit`] certifies the analytic inequality
//!   chain at sampled parameter points.
//!
//! Everything numerical is directed-rounding interval arithmetic
//! ([`interval`]); a certified verdict means the enclosure landed strictly on
//! one side of the inequality being checked.

pub mod audit;
pub mod interval;
pub mod qseries;
pub mod rademacher;
pub mod report;
pub mod special;
pub mod turan;
