use thiserror::Error;

use crate::curve::{Curve, SetKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("{n} exceeds the trial-division factoring bound {bound}")]
    FactorBound { n: i128, bound: i128 },

    #[error("expected a positive integer, got {0}")]
    NotPositive(i128),

    #[error("{0} is not prime")]
    NotPrime(i128),

    #[error("prime {0} is not congruent to 1 mod 3")]
    NotOneModThree(i128),

    #[error("no representation u^2 + 3v^2 with gcd(u, 3v) = 1 for ({s}, {t})")]
    NoRepresentation { s: i128, t: i128 },

    #[error("invalid parameter pair ({s}, {t}): need gcd(s, t) = 1 and 3 not dividing s + t")]
    InvalidParamPair { s: i128, t: i128 },

    #[error("parameter pair ({s}, {t}) yields a point with a zero coordinate")]
    DegeneratePair { s: i128, t: i128 },

    #[error("set {kind:?} lives on the {expected:?} curve, point is tagged {found:?}")]
    CurveMismatch {
        kind: SetKind,
        expected: Curve,
        found: Curve,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{d} is not admissible: {reason}")]
    NotAdmissible { d: i128, reason: String },

    #[error("invalid trinomial X^3 - ({a})X + ({b}): {reason}")]
    InvalidTrinomial { a: i128, b: i128, reason: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
