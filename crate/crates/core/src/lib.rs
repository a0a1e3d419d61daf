//! A Bell-type inequality for two spin-1 particles.
//!
//! Two spin-1 particles are measured by Stern-Gerlach analyzers set at angles
//! in the x-z plane. With two settings per side the functional
//!
//! ```text
//! S = P11(b1, b2) - P11(b1, b2') + P11(b1', b2') + P00 + P0,-1 + P-1,0 + P-1,-1  (last four at b1', b2)
//! ```
//!
//! is at most 1 for every local hidden variable model. The spin-1 singlet
//! reaches about 1.12, while product states never exceed 1.
//!
//! - [`spin`]: rotation matrices, states, joint probability tables
//! - [`functional`]: `S`, its closed forms, and the Clauser-Horne lemma
//! - [`lhv`]: local models and exhaustive certification of `S <= 1`
//! - [`optimizer`]: family scan, four-angle search, product-state sweeps
//! - [`verify`]: the randomized invariant suite
//! - [`cli`] and [`report`]: the `qutrit-bell` command and its JSON/CSV output
//!
//! ```
//! use qutrit_bell::{functional::{s_value, AngleConfig}, spin::singlet_state};
//!
//! let angles = AngleConfig::from_degrees([0.0, 295.4, 147.7, 443.1]).unwrap();
//! let s = s_value(&singlet_state(), &angles).s;
//! assert!((s - 1.12).abs() < 5e-3);
//! ```

pub mod cli;
pub mod error;
pub mod functional;
pub mod lhv;
pub mod optimizer;
pub mod report;
pub mod sampling;
pub mod spin;
pub mod verify;

pub use error::{Error, Result};
pub use functional::{s_value, AngleConfig, SBreakdown};
pub use spin::{singlet_state, Angle, Outcome, SpinState};
