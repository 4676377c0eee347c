//! Exact combinatorics of signed permutations (hyperoctahedral groups).
//!
//! The crate provides the group machinery for `B_n` in window notation,
//! the classical statistics (inversions, negative entries, negative sum
//! pairs, Coxeter length, descent sets) together with the mixed-parity
//! statistic `L`, the chessboard/diagonal/ascending class hierarchy with
//! its sign-reversing involutions, exact integer polynomial arithmetic
//! for the `q`-objects `(k)`, `(n)!`, binomials and the descent-class
//! polynomials `f_{n,I}`, and batch verifiers that test the signed
//! generating-function identities by exhaustive enumeration.
//!
//! Every computation is exact; there is no floating point anywhere.
//!
//! ```
//! use hyperoct::{IndexSet, SignedPermutation};
//! use hyperoct::genfun::DescentTable;
//! use hyperoct::poly::f_poly;
//!
//! let w: SignedPermutation = "[1,-4,-3,2]".parse()?;
//! assert_eq!(hyperoct::stats::l_value(&w), 5);
//!
//! // the signed L-distribution over a descent class matches its
//! // product formula
//! let subset = IndexSet::new(4, [0, 2])?;
//! let table = DescentTable::build(4);
//! assert_eq!(table.class_sum(&subset), f_poly(4, &subset));
//! # Ok::<(), hyperoct::Error>(())
//! ```

pub mod classes;
pub mod cli;
pub mod genfun;
pub mod group;
pub mod involutions;
pub mod matrix;
pub mod poly;
pub mod stats;
pub mod symrank;

pub use classes::IndexSet;
pub use genfun::{DescentTable, Verdict, VerificationReport};
pub use group::SignedPermutation;
pub use matrix::ColumnMatrix;
pub use poly::IntPolynomial;
pub use stats::StatRecord;

use std::fmt;

/// Errors produced by fallible constructors and domain-restricted maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Window must contain at least one entry.
    EmptyWindow,
    /// Window entries must be nonzero.
    ZeroEntry { position: usize },
    /// `|entry|` must lie in `1..=n`.
    EntryOutOfRange {
        position: usize,
        value: i32,
        degree: usize,
    },
    /// Each absolute value may appear only once.
    RepeatedValue { value: i32 },
    /// Malformed window or subset text.
    Parse(String),
    /// Subset member outside `0..n`.
    SubsetOutOfRange { member: usize, degree: usize },
    /// `star_merge` needs degrees `m1 ∈ {m2, m2+1}`.
    MergeDegrees { left: usize, right: usize },
    /// Input lies outside the domain of the requested map.
    NotInDomain {
        operation: &'static str,
        window: String,
    },
    /// A custom weight evaluated to a negative exponent.
    NegativeWeight { window: String, weight: i64 },
    /// Modulus for the symmetric-rank census must be prime.
    NotPrime { q: u64 },
    /// Enumeration would exceed the configured budget.
    BudgetExceeded { required: u128, budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWindow => write!(f, "window must be nonempty"),
            Error::ZeroEntry { position } => {
                write!(f, "window entry at position {position} is zero")
            }
            Error::EntryOutOfRange {
                position,
                value,
                degree,
            } => write!(
                f,
                "window entry {value} at position {position} is out of range for degree {degree}"
            ),
            Error::RepeatedValue { value } => {
                write!(f, "absolute value {} appears more than once", value.abs())
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::SubsetOutOfRange { member, degree } => {
                write!(f, "subset member {member} is not in 0..{degree}")
            }
            Error::MergeDegrees { left, right } => {
                write!(f, "cannot merge degrees {left} and {right}")
            }
            Error::NotInDomain { operation, window } => {
                write!(f, "{window} is not in the domain of {operation}")
            }
            Error::NegativeWeight { window, weight } => {
                write!(f, "weight {weight} of {window} is negative")
            }
            Error::NotPrime { q } => write!(f, "{q} is not prime"),
            Error::BudgetExceeded { required, budget } => {
                write!(
                    f,
                    "enumeration of {required} matrices exceeds budget {budget}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
