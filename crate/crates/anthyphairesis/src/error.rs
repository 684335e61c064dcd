//! Error type shared by every module of the crate.

use std::fmt;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Integer square root of a negative number.
    NegativeRadicand(BigInt),
    /// A surd context requires a radicand that is at least 2 and not a
    /// perfect square.
    InvalidSurdRadicand(BigInt),
    /// Two surd elements from different contexts were combined.
    ContextMismatch { left: BigInt, right: BigInt },
    /// An operand that must be strictly positive was zero or negative.
    NotPositive,
    /// A division step requires `larger > smaller > 0`.
    OrderViolated,
    /// The denominator of a surd state must be nonzero.
    ZeroDenominator,
    /// The step budget ran out before a period was certified; carries the
    /// quotients produced so far so the caller can distinguish a short
    /// budget from a bug.
    BudgetExceeded {
        max_steps: usize,
        quotients: Vec<BigInt>,
    },
    /// An index, count or level outside the available range.
    OutOfRange {
        what: &'static str,
        requested: usize,
        available: Option<usize>,
    },
    /// A quotient list fed to the convergent recurrence must consist of
    /// integers that are at least 1.
    InvalidQuotient(BigInt),
    /// The operation needs a periodic expansion but got a terminated one.
    NotPeriodic,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeRadicand(n) => {
                write!(f, "integer square root of negative number {n}")
            }
            Error::InvalidSurdRadicand(n) => {
                if *n >= BigInt::from(2) {
                    write!(f, "radicand {n} is a perfect square")
                } else {
                    write!(f, "radicand {n} must be at least 2")
                }
            }
            Error::ContextMismatch { left, right } => {
                write!(f, "surd contexts differ: sqrt({left}) vs sqrt({right})")
            }
            Error::NotPositive => write!(f, "operand must be strictly positive"),
            Error::OrderViolated => {
                write!(f, "division step requires larger > smaller > 0")
            }
            Error::ZeroDenominator => write!(f, "surd state denominator is zero"),
            Error::BudgetExceeded {
                max_steps,
                quotients,
            } => write!(
                f,
                "no period certified within {max_steps} steps ({} quotients computed)",
                quotients.len()
            ),
            Error::OutOfRange {
                what,
                requested,
                available,
            } => match available {
                Some(available) => {
                    write!(f, "{what} {requested} out of range ({available} available)")
                }
                None => write!(f, "{what} {requested} out of range"),
            },
            Error::InvalidQuotient(q) => {
                write!(f, "quotient {q} invalid: every quotient must be >= 1")
            }
            Error::NotPeriodic => write!(f, "expansion is terminated, not periodic"),
        }
    }
}

impl std::error::Error for Error {}
