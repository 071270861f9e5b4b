//! Fine-grained uncertainty bounds for quantum measurements performed by
//! relativistically moving observers.
//!
//! Two scenarios are modeled:
//!
//! * a uniformly accelerated observer whose measurements are described in
//!   a Rindler wedge, with the inaccessible wedge traced out
//!   ([`unruh`], [`measurement`]), backed by an exact four-mode fermionic
//!   Fock engine that serves as a brute-force oracle ([`fock`]);
//! * an observer confined to a rigid cavity undergoing a finite period of
//!   acceleration, where the mode mixing is carried by a polylogarithm
//!   coefficient stack ([`cavity`]).
//!
//! For a pair of projective measurements drawn with equal probability, the
//! probability-weighted sum of obtaining a fixed outcome combination is
//! bounded by a state-independent constant ζ. The closed-form bounds are
//! evaluated at fixed maximally-certain-state angles; [`optimizer`] searches
//! the full Bloch sphere and reports how far the true maximum sits from the
//! fixed-angle value.

use std::fmt;

pub mod cavity;
pub mod fock;
pub mod measurement;
pub mod optimizer;
pub mod unruh;

pub use fock::{DensityMatrix, FockVector, ModeIndex, OrderingConvention};
pub use measurement::{MeasurementSetting, OutcomePair, PauliBasis};
pub use optimizer::McsResult;
pub use unruh::{BlochState, UnruhParams};

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Mode slot outside {1, 2, 3, 4}.
    InvalidMode(u8),
    /// Matrix or vector dimension incompatible with the requested operation.
    DimensionMismatch { expected: usize, actual: usize },
    /// Density matrix whose trace deviates too far from one for a
    /// probability to be meaningful.
    TraceDeviation(f64),
    /// Scalar parameter outside its allowed range.
    OutOfRange { name: &'static str, value: f64 },
    /// Outcome pair whose two settings share a measurement basis.
    DuplicateBasis,
    /// Outcome pair without the x/z structure required for a closed-form
    /// bound.
    UnsupportedPair,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMode(slot) => write!(f, "invalid mode slot {slot}, expected 1..=4"),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::TraceDeviation(dev) => {
                write!(f, "density matrix trace deviates from one by {dev:e}")
            }
            Error::OutOfRange { name, value } => {
                write!(f, "parameter `{name}` out of range: {value}")
            }
            Error::DuplicateBasis => write!(f, "outcome pair requires two distinct bases"),
            Error::UnsupportedPair => {
                write!(
                    f,
                    "closed-form bounds are defined for x/z outcome pairs only"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
