//! Closed-form roots of the general quintic.
//!
//! A quartic Tschirnhaus substitution takes `x^5 + m x^4 + n x^3 + p x^2 + q x + r`
//! to Bring-Jerrard form `y^5 + A y + B`, the scaled Bring root
//! `z^5 - z - s = 0` comes from a 4F3 hypergeometric series (or its analytic
//! continuation), and Ferrari's method on the substitution quartic recovers the
//! quintic root, after which the remaining four come from deflation.
//!
//! ```no_run
//! use quintic::{closedform::solve_quintic, mpfield::PrecisionCtx, tschirnhaus::MonicQuintic};
//!
//! let ctx = PrecisionCtx::new(60).unwrap();
//! let f = MonicQuintic::parse(["0", "0", "0", "0", "-1"], &ctx).unwrap();
//! let report = solve_quintic(&f, &ctx).unwrap();
//! for root in &report.roots {
//!     println!("{root:.30}");
//! }
//! ```

pub mod bring;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod mpfield;
pub mod oracle;
pub mod polyring;
pub mod tschirnhaus;

pub use error::{Error, Result, Stage};
pub use mpfield::{AppComplex, PrecisionCtx};
