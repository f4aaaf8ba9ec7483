use alloc::vec::Vec;
use core::fmt;

use crate::realalg::AlgebraicNumber;

/// Domain errors surfaced by the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The given number is not a root of the target polynomial.
    NotARoot,
    /// A breakpoint's minimal polynomial does not divide the difference
    /// of the two pieces meeting there.
    Discontinuous { at: AlgebraicNumber },
    /// Two adjacent pieces of a piecewise definition are equal.
    EqualAdjacentPieces { index: usize },
    /// Breakpoints of a piecewise definition are not strictly ascending.
    UnorderedBreakpoints,
    /// The function has corners at these breakpoints.
    NotDifferentiable { at: Vec<AlgebraicNumber> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotARoot => write!(f, "not a root of the target polynomial"),
            Error::Discontinuous { .. } => {
                write!(f, "pieces do not agree at a breakpoint")
            }
            Error::EqualAdjacentPieces { index } => {
                write!(f, "pieces {} and {} are equal", index, index + 1)
            }
            Error::UnorderedBreakpoints => {
                write!(f, "breakpoints are not strictly ascending")
            }
            Error::NotDifferentiable { at } => {
                write!(f, "not differentiable at {} breakpoint(s)", at.len())
            }
        }
    }
}

impl core::error::Error for Error {}
