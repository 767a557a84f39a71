//! Exact counting and enumeration of S-restricted integer compositions.
//!
//! A composition of `n` is an ordered tuple of positive integers summing to
//! `n`; it is S-restricted when every part belongs to a set `S`. This crate
//! counts such compositions through several independent routes that must
//! agree exactly:
//!
//! * [`oracle`]: brute-force enumeration and a memoized counting recursion.
//! * [`diophantine`]: summing multinomials over the nonnegative solutions of
//!   `v·x = n`.
//! * [`interpreters`]: two linear recurrences whose solutions are the counts,
//!   evaluated with [`lhrc`].
//! * [`lhrc`]: a closed form for linear homogeneous recurrences expressed as
//!   sums over Diophantine solutions, with two- and three-term specializations.
//! * [`closedforms`]: explicit formulas for classical families of part sets.
//!
//! [`sequences`] builds on the same machinery for Fibonacci-like sequences,
//! and [`engine`] dispatches between the routes and cross-checks them.

pub mod closedforms;
pub mod diophantine;
pub mod engine;
mod error;
pub mod interpreters;
pub mod lhrc;
pub mod oracle;
pub mod partset;
pub mod sequences;
mod serde_util;

pub use error::{Error, Result};
pub use partset::{PartSet, PartVector};
