//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Hard failures. Diagnostic checks that merely *report* violations return a
/// [`crate::report::Report`] instead; an `Error` means the requested object
/// cannot be constructed at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must live over the same space or algebra do not.
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    /// A product in a truncated enveloping algebra (or a bialgebroid built on
    /// one) would exceed the truncation degree. Nothing is silently dropped.
    DegreeOverflow { degree: u32, truncation: u32 },
    /// The right ("black") actions of a bimodule were required but absent.
    MissingRightActions,
    /// An induced action does not preserve the relation subspace of a tensor
    /// quotient; the input bimodule is broken.
    IllDefinedAction { context: &'static str },
    /// A structural precondition failed; the message names the first witness.
    Precondition { context: &'static str, witness: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { context, expected, found } => {
                write!(f, "dimension mismatch in {context}: expected {expected}, found {found}")
            }
            Error::DegreeOverflow { degree, truncation } => {
                write!(f, "degree overflow: degree {degree} exceeds truncation {truncation}")
            }
            Error::MissingRightActions => {
                write!(f, "bimodule carries no right actions, Takeuchi product undefined")
            }
            Error::IllDefinedAction { context } => {
                write!(f, "induced action ill-defined on the quotient: {context}")
            }
            Error::Precondition { context, witness } => {
                write!(f, "precondition failed in {context}: {witness}")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
