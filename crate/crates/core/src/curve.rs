//! Integral points on the level curves
//!
//! * the 27-curve `x^2 + 27 y^2 = 4 D z^3`, and
//! * the 3-curve `x^2 + 3 y^2 = 4 D z^3`,
//!
//! the six solution sets built from them, and the structural maps between
//! them. Set membership depends on gcds of the coordinates, so a single
//! [`CurvePoint`] type carries curve and level tags and [`member`] is the
//! source of truth.
//!
//! | kind        | curve | level | gcd(y, z) | star condition (ℓ² ∣ D) |
//! |-------------|-------|-------|-----------|-------------------------|
//! | `X1D`       | 27    | 1     | D         |                         |
//! | `X1DStar`   | 27    | 1     | D         | ℓ³ ∤ y                  |
//! | `XD1`       | 27    | D     | 1         |                         |
//! | `XD1Star`   | 27    | D     | 1         | ℓ ∤ y                   |
//! | `YD1`       | 3     | D     | 1         |                         |
//! | `YD1Star`   | 3     | D     | 1         | ℓ ∤ y                   |
//!
//! All sets also require `xyz ≠ 0`.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{ck, gcd, square_primes};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    /// `x^2 + 3 y^2 = 4 D z^3`
    Three,
    /// `x^2 + 27 y^2 = 4 D z^3`
    TwentySeven,
}

impl Curve {
    pub fn k(self) -> i128 {
        match self {
            Curve::Three => 3,
            Curve::TwentySeven => 27,
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetKind {
    X1D,
    X1DStar,
    XD1,
    XD1Star,
    YD1,
    YD1Star,
}

impl SetKind {
    pub const ALL: [SetKind; 6] = [
        SetKind::X1D,
        SetKind::X1DStar,
        SetKind::XD1,
        SetKind::XD1Star,
        SetKind::YD1,
        SetKind::YD1Star,
    ];

    pub fn curve(self) -> Curve {
        match self {
            SetKind::YD1 | SetKind::YD1Star => Curve::Three,
            _ => Curve::TwentySeven,
        }
    }

    /// Level of the curve the points live on, for gcd class `d`.
    pub fn level(self, d: i128) -> i128 {
        match self {
            SetKind::X1D | SetKind::X1DStar => 1,
            _ => d,
        }
    }

    pub fn is_star(self) -> bool {
        matches!(self, SetKind::X1DStar | SetKind::XD1Star | SetKind::YD1Star)
    }

    pub fn name(self) -> &'static str {
        match self {
            SetKind::X1D => "X1D",
            SetKind::X1DStar => "X1D_STAR",
            SetKind::XD1 => "XD1",
            SetKind::XD1Star => "XD1_STAR",
            SetKind::YD1 => "YD1",
            SetKind::YD1Star => "YD1_STAR",
        }
    }
}

impl std::str::FromStr for SetKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown set kind {s:?}"))
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point on a level curve. Construction checks the curve equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub x: i128,
    pub y: i128,
    pub z: i128,
    pub curve: Curve,
    pub level: i128,
}

/// `x^2 + k y^2 == 4 level z^3`, with overflow reported.
pub fn on_curve(x: i128, y: i128, z: i128, curve: Curve, level: i128) -> Result<bool> {
    let lhs = ck(x) * x + ck(curve.k()) * y * y;
    let rhs = ck(4) * level * z * z * z;
    Ok(lhs.get()? == rhs.get()?)
}

impl CurvePoint {
    pub fn new(x: i128, y: i128, z: i128, curve: Curve, level: i128) -> Result<Self> {
        if level < 1 {
            return Err(Error::NotPositive(level));
        }
        if !on_curve(x, y, z, curve, level)? {
            return Err(Error::Precondition(format!(
                "({x}, {y}, {z}) is not on x^2 + {}y^2 = 4*{level}*z^3",
                curve.k()
            )));
        }
        Ok(Self { x, y, z, curve, level })
    }

    pub fn three(x: i128, y: i128, z: i128, level: i128) -> Result<Self> {
        Self::new(x, y, z, Curve::Three, level)
    }

    pub fn twenty_seven(x: i128, y: i128, z: i128, level: i128) -> Result<Self> {
        Self::new(x, y, z, Curve::TwentySeven, level)
    }

    pub fn coords(&self) -> (i128, i128, i128) {
        (self.x, self.y, self.z)
    }

    /// `(x, y, z) -> (-x, -y, z)`; stays on the same curve.
    pub fn negate(&self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            ..*self
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Evaluates the defining conditions of `kind` for gcd class / level `d`.
pub fn member(p: &CurvePoint, kind: SetKind, d: i128) -> Result<bool> {
    if p.curve != kind.curve() {
        return Err(Error::CurveMismatch {
            kind,
            expected: kind.curve(),
            found: p.curve,
        });
    }
    if d < 1 {
        return Err(Error::NotPositive(d));
    }
    if p.level != kind.level(d) || !on_curve(p.x, p.y, p.z, p.curve, p.level)? {
        return Ok(false);
    }
    if p.x == 0 || p.y == 0 || p.z == 0 {
        return Ok(false);
    }
    let want_gcd = match kind {
        SetKind::X1D | SetKind::X1DStar => d,
        _ => 1,
    };
    if gcd(p.y, p.z) != want_gcd {
        return Ok(false);
    }
    if kind.is_star() {
        for l in square_primes(d)? {
            let modulus = if kind == SetKind::X1DStar { l * l * l } else { l };
            if p.y % modulus == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn require(p: &CurvePoint, kind: SetKind, d: i128, what: &str) -> Result<()> {
    if member(p, kind, d)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what}: {p} is not in {kind} for D = {d}")))
    }
}

fn require_coprime_to_3(d: i128, what: &str) -> Result<()> {
    if d % 3 == 0 {
        Err(Error::Precondition(format!("{what}: needs 3 ∤ D, got D = {d}")))
    } else {
        Ok(())
    }
}

/// `X_D^1 -> X_1^D`, `(x, y, z) -> (Dx, Dy, Dz)`.
pub fn theta(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require(p, SetKind::XD1, d, "theta")?;
    CurvePoint::twenty_seven((ck(d) * p.x).get()?, (ck(d) * p.y).get()?, (ck(d) * p.z).get()?, 1)
}

pub fn theta_inv(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require(p, SetKind::X1D, d, "theta inverse")?;
    CurvePoint::twenty_seven(p.x / d, p.y / d, p.z / d, d)
}

/// `Y_D^1 -> X_{9D}^1`, `(x, y, z) -> (3x, y, z)`, for `3 ∤ D`.
pub fn delta(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "delta")?;
    require(p, SetKind::YD1, d, "delta")?;
    CurvePoint::twenty_seven((ck(3) * p.x).get()?, p.y, p.z, (ck(9) * d).get()?)
}

/// `X_{9D}^1 -> Y_D^1`, `(a, b, c) -> (a/3, b, c)`; `d` is the prime-to-3 level.
pub fn delta_inv(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "delta inverse")?;
    require(p, SetKind::XD1, 9 * d, "delta inverse")?;
    CurvePoint::three(p.x / 3, p.y, p.z, d)
}

/// `X_D^1 -> Y_D^1`: `(x, 3y, z)` when `3 ∤ z`, `(y, x/9, z/3)` when `3 | z`.
pub fn beta(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "beta")?;
    require(p, SetKind::XD1, d, "beta")?;
    if p.z % 3 != 0 {
        CurvePoint::three(p.x, (ck(3) * p.y).get()?, p.z, d)
    } else {
        CurvePoint::three(p.y, ck(p.x).div_exact(9)?, p.z / 3, d)
    }
}

/// `Y_D^1 -> X_D^1`, `(x, y, z) -> (9y, x, 3z)`.
pub fn alpha(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "alpha")?;
    require(p, SetKind::YD1, d, "alpha")?;
    CurvePoint::twenty_seven((ck(9) * p.y).get()?, p.x, (ck(3) * p.z).get()?, d)
}

/// `(x, y, z) -> (x, y/3, z)` on the points of `Y_D^1` with `3 | y`.
pub fn alpha_prime(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "alpha'")?;
    require(p, SetKind::YD1, d, "alpha'")?;
    if p.y % 3 != 0 {
        return Err(Error::Precondition(format!("alpha': 3 ∤ y in {p}")));
    }
    CurvePoint::twenty_seven(p.x, p.y / 3, p.z, d)
}

/// `X_D^1(Z)*` as the union of `alpha` over all of `Y_D^1(Z)*` and `alpha'`
/// over its `3 | y` part.
pub fn assemble_x1d_star_from_y<'a, I>(d: i128, y_star: I) -> Result<BTreeSet<CurvePoint>>
where
    I: IntoIterator<Item = &'a CurvePoint>,
{
    require_coprime_to_3(d, "assembly")?;
    let mut out = BTreeSet::new();
    for p in y_star {
        require(p, SetKind::YD1Star, d, "assembly")?;
        out.insert(alpha(p, d)?);
        if p.y % 3 == 0 {
            out.insert(alpha_prime(p, d)?);
        }
    }
    Ok(out)
}

/// `Y_D^1 -> Y_{3D}^1`, `(a, b, c) -> (3b, a, c)`.
pub fn lift_3d(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "3D lift")?;
    require(p, SetKind::YD1, d, "3D lift")?;
    CurvePoint::three((ck(3) * p.y).get()?, p.x, p.z, (ck(3) * d).get()?)
}

/// `Y_D^1 -> Y_{9D}^1`, `(a, b, c) -> (3a, 3b, c)`.
pub fn lift_9d(p: &CurvePoint, d: i128) -> Result<CurvePoint> {
    require_coprime_to_3(d, "9D lift")?;
    require(p, SetKind::YD1, d, "9D lift")?;
    CurvePoint::three((ck(3) * p.x).get()?, (ck(3) * p.y).get()?, p.z, (ck(9) * d).get()?)
}

/// Zeros of `x^2 + 27 y^2 = 4 z^3` with `xyz = 0` for parameter `t`:
/// `(0, ±2t^3, 3t^2)` and `(±2t^3, 0, t^2)`.
pub fn trivial_x1_points(t: i128) -> Result<Vec<CurvePoint>> {
    let c = (ck(2) * t * t * t).get()?;
    let t2 = (ck(t) * t).get()?;
    let t2x3 = (ck(3) * t2).get()?;
    [(0, c, t2x3), (0, -c, t2x3), (c, 0, t2), (-c, 0, t2)]
        .into_iter()
        .map(|(x, y, z)| CurvePoint::twenty_seven(x, y, z, 1))
        .collect()
}
