//! The base level `Y_1^1`: primitive solutions of `x^2 + 3y^2 = 4z^3`.
//!
//! Every such point comes from a coprime pair `(s, t)` with `3 ∤ s + t`,
//! through one of two families:
//!
//! * family 1: `((s+t)(2s-t)(s-2t), 3st(s-t), s^2-st+t^2)`, exactly the points with `6 | y`;
//! * family 2: `(±((s+t)^3 - 9st^2), s^3 - 3s^2t + t^3, s^2-st+t^2)`, the points with `gcd(6, y) = 1`.
//!
//! Coverage: with `M = max(|s|, |t|)`, `s^2 - st + t^2 >= 3M^2/4`, so every
//! point with `z <= Z` comes from a pair with `M <= floor(sqrt(4Z/3))`.
//! See [`st_max_for`].

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::arith::{ck, gcd, is_perfect_square, isqrt};
use crate::curve::{member, CurvePoint, SetKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamPair {
    pub s: i128,
    pub t: i128,
}

/// The polynomials in `(s, t)` that every formula is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StPolys {
    /// `(s+t)(2s-t)(s-2t)`
    pub p: i128,
    /// `st(s-t)`
    pub q: i128,
    /// `s^2 - st + t^2`
    pub n: i128,
    /// `(s+t)^3 - 9st^2`
    pub r: i128,
    /// `s^3 - 3s^2t + t^3`
    pub s: i128,
}

impl ParamPair {
    pub fn new(s: i128, t: i128) -> Result<Self> {
        if gcd(s, t) != 1 || (s + t) % 3 == 0 {
            return Err(Error::InvalidParamPair { s, t });
        }
        Ok(Self { s, t })
    }

    pub fn polys(&self) -> Result<StPolys> {
        let (s, t) = (ck(self.s), ck(self.t));
        Ok(StPolys {
            p: ((s + t) * (ck(2) * s - t) * (s - ck(2) * t)).get()?,
            q: (s * t * (s - t)).get()?,
            n: (s * s - s * t + t * t).get()?,
            r: ((s + t).pow(3) - ck(9) * s * t * t).get()?,
            s: (s.pow(3) - ck(3) * s * s * t + t.pow(3)).get()?,
        })
    }

    /// `max(|s|, |t|)`.
    pub fn height(&self) -> i128 {
        self.s.abs().max(self.t.abs())
    }

    /// Enumeration order: by height, then fewer negative entries, then larger
    /// `s`, then smaller `t`. `(1, 0)` comes first.
    pub fn order_key(&self) -> (i128, u8, i128, i128) {
        let negs = u8::from(self.s < 0) + u8::from(self.t < 0);
        (self.height(), negs, -self.s, self.t)
    }
}

impl PartialOrd for ParamPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ParamPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// All valid pairs with `max(|s|, |t|) <= st_max`, in [`ParamPair::order_key`] order.
pub fn pairs(st_max: i128) -> Vec<ParamPair> {
    let mut out = Vec::new();
    for s in -st_max..=st_max {
        for t in -st_max..=st_max {
            if let Ok(p) = ParamPair::new(s, t) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// Valid pairs with `s^2 - st + t^2 = n`, in enumeration order.
pub fn pairs_with_norm(n: i128) -> Vec<ParamPair> {
    let mut out = Vec::new();
    if n < 1 {
        return out;
    }
    // t = (s ± sqrt(4n - 3s^2)) / 2
    let s_max = isqrt(4 * n / 3);
    for s in -s_max..=s_max {
        let Some(r) = is_perfect_square(4 * n - 3 * s * s) else {
            continue;
        };
        for two_t in [s + r, s - r] {
            if two_t % 2 == 0 {
                if let Ok(p) = ParamPair::new(s, two_t / 2) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Smallest `st_max` whose pairs reach every point of `Y_1^1` with `z <= z_max`.
pub fn st_max_for(z_max: i128) -> i128 {
    isqrt(4 * z_max / 3).max(1)
}

fn checked_y11(x: i128, y: i128, z: i128) -> Result<CurvePoint> {
    let p = CurvePoint::three(x, y, z, 1)?;
    // Family 1 always has x and y even, so gcd(x, y) is 2 there, 1 otherwise.
    if !member(&p, SetKind::YD1, 1)? || 2 % gcd(x, y) != 0 {
        return Err(Error::Internal(format!("{p} escaped Y_1^1")));
    }
    Ok(p)
}

/// Family 1, or `None` when the pair is degenerate (`xyz = 0`).
pub fn family1(pair: &ParamPair) -> Result<Option<CurvePoint>> {
    let f = ParamPair::new(pair.s, pair.t)?.polys()?;
    if f.p == 0 || f.q == 0 {
        return Ok(None);
    }
    checked_y11(f.p, (ck(3) * f.q).get()?, f.n).map(Some)
}

/// Family 2 with `x = sign * ((s+t)^3 - 9st^2)`. `sign` must be ±1.
pub fn family2(pair: &ParamPair, sign: i128) -> Result<CurvePoint> {
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition(format!("sign must be ±1, got {sign}")));
    }
    let f = ParamPair::new(pair.s, pair.t)?.polys()?;
    if f.r == 0 || f.s == 0 {
        return Err(Error::DegeneratePair { s: pair.s, t: pair.t });
    }
    checked_y11(sign * f.r, f.s, f.n)
}

/// `Y_1^1` points reached from pairs with `max(|s|, |t|) <= st_max`.
pub fn enumerate_y11(st_max: i128) -> Result<BTreeSet<CurvePoint>> {
    if st_max < 1 {
        return Err(Error::NotPositive(st_max));
    }
    let mut out = BTreeSet::new();
    for pair in pairs(st_max) {
        if let Some(p) = family1(&pair)? {
            out.insert(p);
        }
        for sign in [1, -1] {
            match family2(&pair, sign) {
                Ok(p) => {
                    out.insert(p);
                }
                Err(Error::DegeneratePair { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// `(±2, 0, 1)`: the family-1 image of the degenerate pair `(1, 0)`. Not in
/// `Y_1^1` since `y = 0`, but raising it produces genuine star points at
/// higher levels (for instance `(2, 0, 1) -> (4, 2, 1)` at level 7).
pub fn degenerate_seeds() -> [CurvePoint; 2] {
    [
        CurvePoint {
            x: 2,
            y: 0,
            z: 1,
            curve: crate::curve::Curve::Three,
            level: 1,
        },
        CurvePoint {
            x: -2,
            y: 0,
            z: 1,
            curve: crate::curve::Curve::Three,
            level: 1,
        },
    ]
}
