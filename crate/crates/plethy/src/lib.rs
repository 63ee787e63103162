//! Exact plethystic calculus of symmetric functions, aimed at the
//! combinatorics of stable graphs and moduli of stable curves of genus at
//! most one.
//!
//! The library provides, over the exact coefficient ring
//! `Q[L, L^-1][S_12, S_16, ...]`:
//!
//! - degree-truncated symmetric functions in the power-sum basis with
//!   plethysm, Adams operations, plethystic exp/log, and the classical
//!   `h`/`e`/Schur bases ([`symf`]);
//! - the Legendre transform, both for exponential power series and for
//!   symmetric functions ([`legendre`]);
//! - the semi-classical approximation computing the genus-one sum over
//!   stable graphs from genus-zero data ([`genus1`]);
//! - builders for the generating functions of Serre polynomials of the
//!   open moduli of genus 0 and 1 curves, and the extraction pipeline for
//!   the `S_n`-equivariant Serre polynomials of the compactified
//!   genus-one moduli spaces ([`moduli`]);
//! - exact generating functions and asymptotics of their Euler
//!   characteristics ([`eulerchar`]);
//! - a brute-force stable-graph enumerator serving as an independent
//!   oracle for all of the above ([`graph`]).
//!
//! Each major capability has a runnable demo under `examples/`; the
//! `plethy` binary exposes the same tables on the command line and
//! `plethy verify` runs the full self-check suite.

pub mod arith;
pub mod coeff;
pub mod eulerchar;
pub mod genus1;
pub mod graph;
pub mod legendre;
pub mod moduli;
pub mod partition;
pub mod series;
pub mod symf;
pub mod tables;
pub mod verify;
pub mod vpoly;

pub use coeff::{Coeff, Rat};
pub use partition::Partition;
pub use series::{ExpSeries, RationalSeries, Series};
pub use symf::SymFunc;

/// Errors shared across the crate. These mostly signal violated
/// mathematical preconditions; in the moduli builders a `NonExactDivision`
/// means a closed formula was transcribed wrongly.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("Adams operation applied to a cusp symbol")]
    AdamsOnCuspSymbol,
    #[error("specialization hits a negative power of L at L = 0")]
    DivideByZero,
    #[error("argument has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series linear coefficient is not a unit")]
    NonUnitLinearTerm,
    #[error("series does not start with x^2/2")]
    WrongLeadingTerm,
    #[error("symmetric function is not in the Legendre domain")]
    NotInLambdaStar,
    #[error("omega window exceeded during residue assembly")]
    WindowOverflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
