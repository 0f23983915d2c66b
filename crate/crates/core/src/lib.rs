//! Exact arithmetic for restricted integer compositions.
//!
//! For a part-set `A ⊂ N₊` this crate builds the composition polynomials
//! `f_{A,n}(t) = Σ_i c_A(i,n) tⁱ`, the alternating moment sums
//! `S_{A,k}(n) = Σ_i (−1)ⁱ iᵏ c_A(i,n)`, and tools for studying the sign
//! sequence `n ↦ sign((−1)ⁿ S_{A,k}(n))`:
//!
//! - [`sets`]: part-set descriptions with an explicit query horizon.
//! - [`poly`]: exact integer polynomials, rational power series, resultants
//!   and cyclotomic polynomials.
//! - [`compositions`]: composition tables, partition counts, the `q_A`
//!   series and the generating-function identity checks.
//! - [`sums`]: four independent routes to the `S_{A,k}(n)` grid.
//! - [`signs`]: sign words and eventual-period detection.
//! - [`nonperiodic`]: the dominant-root certificate for non-periodic signs
//!   of `1/p(x)`.
//! - [`explorer`]: subset searches and construction verifiers.
//!
//! All integer work is arbitrary precision; nothing here reduces modulo a
//! prime, because the sign is the quantity of interest.

pub mod compositions;
pub mod error;
pub mod explorer;
pub mod nonperiodic;
pub mod poly;
pub mod sets;
pub mod signs;
pub mod sums;

pub use error::{Error, Result};
pub use sets::SetSpec;
