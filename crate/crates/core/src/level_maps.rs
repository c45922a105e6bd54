//! Moving points of the 3-curve between levels.
//!
//! For `p = u^2 + 3v^2` the raises multiply `x + y√-3` by `u ∓ v√-3`:
//!
//! * `Plus`:  `(x, y, z) -> (ux + 3vy, uy - vx, z)`
//! * `Minus`: `(x, y, z) -> (ux - 3vy, uy + vx, z)`
//!
//! and both take level `D` to level `pD`. [`lower`] undoes whichever of the
//! two produced a star point. Levels divisible by 9 are never reached by
//! raising; see [`crate::curve::delta`].

use std::collections::BTreeSet;
use std::fmt;

use crate::admissibility::require_admissible;
use crate::arith::{ck, gcd, gcd3, square_primes};
use crate::curve::{member, Curve, CurvePoint, SetKind};
use crate::error::{Error, Result};
use crate::parametrization::degenerate_seeds;
use crate::representations::{prime_representation, represent_u3v, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RaiseSign {
    Plus,
    Minus,
}

impl RaiseSign {
    pub const BOTH: [RaiseSign; 2] = [RaiseSign::Plus, RaiseSign::Minus];

    pub fn flip(self) -> Self {
        match self {
            RaiseSign::Plus => RaiseSign::Minus,
            RaiseSign::Minus => RaiseSign::Plus,
        }
    }

    pub fn as_i128(self) -> i128 {
        match self {
            RaiseSign::Plus => 1,
            RaiseSign::Minus => -1,
        }
    }
}

impl fmt::Display for RaiseSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RaiseSign::Plus => "+",
            RaiseSign::Minus => "-",
        })
    }
}

/// Raise by an arbitrary (possibly signed) pair `(u, v)`, landing on level
/// `level * (u^2 + 3v^2)`. Only the curve equation is required of `pt`.
pub fn raise_with(u: i128, v: i128, sign: RaiseSign, pt: &CurvePoint) -> Result<CurvePoint> {
    if pt.curve != Curve::Three {
        return Err(Error::CurveMismatch {
            kind: SetKind::YD1,
            expected: Curve::Three,
            found: pt.curve,
        });
    }
    let (x, y) = (ck(pt.x), ck(pt.y));
    let s = sign.as_i128();
    let nx = ck(u) * x + ck(s * 3) * v * y;
    let ny = ck(u) * y - ck(s) * v * x;
    let level = ck(pt.level) * (ck(u) * u + ck(3) * v * v);
    // Construction re-checks the curve equation at the new level.
    CurvePoint::three(nx.get()?, ny.get()?, pt.z, level.get()?)
}

fn require_yd1(pt: &CurvePoint, kind: SetKind, what: &str) -> Result<()> {
    if pt.curve != Curve::Three {
        return Err(Error::CurveMismatch {
            kind,
            expected: Curve::Three,
            found: pt.curve,
        });
    }
    if member(pt, kind, pt.level)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what}: {pt} is not in {kind} at level {}",
            pt.level
        )))
    }
}

/// `[p]^±` on a point of `Y_D^1`. The image is on the level-`pD` curve but
/// need not be primitive.
pub fn raise(p: i128, sign: RaiseSign, pt: &CurvePoint) -> Result<CurvePoint> {
    let r = prime_representation(p)?;
    require_yd1(pt, SetKind::YD1, "raise")?;
    raise_with(r.u, r.v, sign, pt)
}

/// `[p]^±` restricted to star points: the image when it is itself a star point.
pub fn raise_star(p: i128, sign: RaiseSign, pt: &CurvePoint) -> Result<Option<CurvePoint>> {
    let r = prime_representation(p)?;
    require_yd1(pt, SetKind::YD1Star, "raise_star")?;
    let q = raise_with(r.u, r.v, sign, pt)?;
    Ok(member(&q, SetKind::YD1Star, q.level)?.then_some(q))
}

/// `[p]_*`: from a star point at level `pD` back down to level `D`. The
/// result is a star point, or one of `(±2, 0, 1)`.
pub fn lower(p: i128, pt: &CurvePoint) -> Result<CurvePoint> {
    let r = prime_representation(p)?;
    require_yd1(pt, SetKind::YD1Star, "lower")?;
    if pt.level % p != 0 {
        return Err(Error::Precondition(format!(
            "lower: {p} does not divide level {}",
            pt.level
        )));
    }
    let (u, v, x, y) = (r.u, r.v, pt.x, pt.y);
    let plus_y = (ck(u) * y + ck(v) * x).get()?;
    let (nx, ny) = if plus_y % p == 0 {
        ((ck(u) * x - ck(3) * v * y).div_exact(p)?, plus_y / p)
    } else {
        let minus_y = (ck(u) * y - ck(v) * x).get()?;
        if minus_y % p != 0 {
            return Err(Error::Internal(format!("lower: {p} divides neither branch at {pt}")));
        }
        ((ck(u) * x + ck(3) * v * y).div_exact(p)?, minus_y / p)
    };
    let q = CurvePoint::three(nx, ny, pt.z, pt.level / p)?;
    // y = 0 happens for images of the seeds (±2, 0, 1), e.g. (4, 2, 1) at level 7.
    if q.y != 0 && !member(&q, SetKind::YD1Star, q.level)? {
        return Err(Error::Internal(format!("lower: {q} left the star set")));
    }
    Ok(q)
}

/// Result of [`build_yd1_star_report`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct YStarBuild {
    pub points: BTreeSet<CurvePoint>,
    /// Images that passed the gcd filter but failed full star membership.
    pub gcd_only: Vec<CurvePoint>,
}

/// `Y_D^1(Z)*` from base points of `Y_1^1`: every representation of `D`,
/// both signs, kept when `gcd(D, z, new y) = 1` and the image is a star point.
///
/// The seeds `(±2, 0, 1)` are always added to the base; at some levels they
/// are the only preimages of star points with `z = 1`.
pub fn build_yd1_star_report<'a, I>(d: i128, base: I) -> Result<YStarBuild>
where
    I: IntoIterator<Item = &'a CurvePoint>,
{
    let a = require_admissible(d)?;
    if a.has9 {
        return Err(Error::Precondition(format!("build_yd1_star needs 3 ∤ D, got {d}")));
    }
    let mut out = YStarBuild::default();
    let base: Vec<CurvePoint> = base.into_iter().copied().collect();
    for p in &base {
        if p.curve != Curve::Three || p.level != 1 {
            return Err(Error::Precondition(format!("base point {p} is not on Y_1")));
        }
    }
    if d == 1 {
        for p in base {
            if member(&p, SetKind::YD1Star, 1)? {
                out.points.insert(p);
            }
        }
        return Ok(out);
    }
    let reps = represent_u3v(d);
    let seeds = degenerate_seeds();
    for p in base.iter().chain(seeds.iter()) {
        images_into(d, &reps.reps, p, &mut out)?;
    }
    Ok(out)
}

fn images_into(d: i128, reps: &[Representation], p: &CurvePoint, out: &mut YStarBuild) -> Result<()> {
    for r in reps {
        for sign in RaiseSign::BOTH {
            let q = raise_with(r.u, r.v, sign, p)?;
            if gcd3(d, q.z, q.y) != 1 {
                continue;
            }
            if member(&q, SetKind::YD1Star, d)? {
                out.points.insert(q);
            } else {
                out.gcd_only.push(q);
            }
        }
    }
    Ok(())
}

/// The star images of a single base point at level `d` (no seeds added).
pub fn star_images(d: i128, p: &CurvePoint) -> Result<BTreeSet<CurvePoint>> {
    let a = require_admissible(d)?;
    if a.has9 {
        return Err(Error::Precondition(format!("star_images needs 3 ∤ D, got {d}")));
    }
    if d == 1 {
        return Ok(BTreeSet::from_iter(member(p, SetKind::YD1Star, 1)?.then_some(*p)));
    }
    let mut out = YStarBuild::default();
    images_into(d, &represent_u3v(d).reps, p, &mut out)?;
    Ok(out.points)
}

pub fn build_yd1_star<'a, I>(d: i128, base: I) -> Result<BTreeSet<CurvePoint>>
where
    I: IntoIterator<Item = &'a CurvePoint>,
{
    Ok(build_yd1_star_report(d, base)?.points)
}

/// All of `Y_D^1(Z)` (primitive, not only star), as the star set at `D`
/// together with `(Bx, By, z)` for star points at `D/B^2` with `gcd(B, z) = 1`,
/// `B > 1` running over products of primes whose square divides `D`.
pub fn assemble_yd1_full<'a, I>(d: i128, base: I) -> Result<BTreeSet<CurvePoint>>
where
    I: IntoIterator<Item = &'a CurvePoint>,
{
    let base: Vec<CurvePoint> = base.into_iter().copied().collect();
    let mut out = build_yd1_star(d, &base)?;
    let sq = square_primes(d)?;
    for mask in 1u32..(1 << sq.len()) {
        let b: i128 = sq
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &l)| l)
            .product();
        let lower_d = d / (b * b);
        for p in build_yd1_star(lower_d, &base)? {
            if gcd(b, p.z) == 1 {
                out.insert(CurvePoint::three((ck(b) * p.x).get()?, (ck(b) * p.y).get()?, p.z, d)?);
            }
        }
    }
    Ok(out)
}

/// A raise by a product of two primes, computed three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Composition {
    pub point: CurvePoint,
    /// Composed pair, to be applied with [`RaiseSign::Plus`].
    pub u: i128,
    pub v: i128,
}

/// `[p]^{sp} ∘ [q]^{sq}` on `pt`, checked against `[q]^{sq} ∘ [p]^{sp}` and a
/// single raise by the composed pair. `p = q` gives the doubled raises.
pub fn compose_raise(p: i128, sp: RaiseSign, q: i128, sq: RaiseSign, pt: &CurvePoint) -> Result<Composition> {
    let rp = prime_representation(p)?;
    let rq = prime_representation(q)?;
    let pq = raise_with(rp.u, rp.v, sp, &raise_with(rq.u, rq.v, sq, pt)?)?;
    let qp = raise_with(rq.u, rq.v, sq, &raise_with(rp.u, rp.v, sp, pt)?)?;
    // Plus multiplies by u - v√-3, Minus by u + v√-3.
    let (v1, v2) = (sp.as_i128() * rp.v, sq.as_i128() * rq.v);
    let u = (ck(rp.u) * rq.u - ck(3) * v1 * v2).get()?;
    let v = (ck(rp.u) * v2 + ck(rq.u) * v1).get()?;
    let direct = raise_with(u, v, RaiseSign::Plus, pt)?;
    if pq != qp || pq != direct {
        return Err(Error::Internal(format!(
            "raises by {p} and {q} disagree on {pt}: {pq}, {qp}, {direct}"
        )));
    }
    Ok(Composition { point: pq, u, v })
}
