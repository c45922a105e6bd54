//! Which gcd classes `D` can carry solutions at all.
//!
//! `D` is admissible when it is cube-free and equals `D1` or `9 D1`, where every
//! prime factor of `D1` is `1 mod 3` (or `D1 = 1`). Any prime `2 mod 3`, an
//! exact `3 ∥ D`, or `27 | D` empties the solution sets.

use std::fmt;

use crate::arith::factorize;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleD {
    pub d: i128,
    /// Prime-to-3 part.
    pub d1: i128,
    pub has9: bool,
}

/// Why a `D` fails admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inadmissible {
    NotCubeFree { prime: i128 },
    PrimeTwoModThree { prime: i128 },
    ThreeExactlyDivides,
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotCubeFree { prime } => write!(f, "{prime}^3 divides D (not cube-free)"),
            Self::PrimeTwoModThree { prime } => {
                write!(f, "prime {prime} ≡ 2 (mod 3) divides D, so no starred solutions exist")
            }
            Self::ThreeExactlyDivides => {
                write!(f, "3 ∥ D (3 divides D exactly once), so no starred solutions exist")
            }
        }
    }
}

/// Full verdict, keeping the reason on failure.
pub fn classify_d(d: i128) -> Result<std::result::Result<AdmissibleD, Inadmissible>> {
    let f = factorize(d)?;
    for &(p, e) in f.factors() {
        if e >= 3 {
            return Ok(Err(Inadmissible::NotCubeFree { prime: p }));
        }
    }
    for &(p, _) in f.factors() {
        if p != 3 && p % 3 == 2 {
            return Ok(Err(Inadmissible::PrimeTwoModThree { prime: p }));
        }
    }
    match f.exponent(3) {
        0 => Ok(Ok(AdmissibleD { d, d1: d, has9: false })),
        1 => Ok(Err(Inadmissible::ThreeExactlyDivides)),
        _ => Ok(Ok(AdmissibleD {
            d,
            d1: d / 9,
            has9: true,
        })),
    }
}

pub fn is_admissible(d: i128) -> Result<Option<AdmissibleD>> {
    Ok(classify_d(d)?.ok())
}

/// Like [`is_admissible`], with the failure turned into an error.
pub fn require_admissible(d: i128) -> Result<AdmissibleD> {
    match classify_d(d)? {
        Ok(a) => Ok(a),
        Err(why) => Err(Error::NotAdmissible {
            d,
            reason: why.to_string(),
        }),
    }
}

pub fn admissible_up_to(bound: i128) -> Result<Vec<AdmissibleD>> {
    let mut out = Vec::new();
    for d in 1..=bound {
        if let Some(a) = is_admissible(d)? {
            out.push(a);
        }
    }
    Ok(out)
}
