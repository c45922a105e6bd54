//! Exhaustive search for integral points, used as ground truth.
//!
//! Only the curve equations and the set definitions in [`crate::curve`] are
//! used here; nothing from the constructive pipeline.

use std::collections::BTreeSet;

use crate::arith::{ck, is_perfect_square, isqrt};
use crate::curve::{member, Curve, CurvePoint, SetKind};
use crate::error::{Error, Result};

/// All `(x, y, z)` with `1 <= z <= z_max`, `xyz ≠ 0` on `x^2 + k y^2 = 4 level z^3`.
pub fn brute_solutions(curve: Curve, level: i128, z_max: i128) -> Result<BTreeSet<CurvePoint>> {
    scan(curve, level, 1, z_max)
}

/// Scans `z = step, 2 step, ..., z_max * step` and `y` in multiples of `step`.
fn scan(curve: Curve, level: i128, step: i128, z_max: i128) -> Result<BTreeSet<CurvePoint>> {
    if level < 1 {
        return Err(Error::NotPositive(level));
    }
    if z_max < 1 {
        return Err(Error::NotPositive(z_max));
    }
    let k = curve.k();
    let mut out = BTreeSet::new();
    for zi in 1..=z_max {
        let z = (ck(zi) * step).get()?;
        let rhs = (ck(4) * level * z * z * z).get()?;
        let y_max = isqrt(rhs / k) / step;
        for yi in 1..=y_max {
            let y = yi * step;
            let Some(x) = is_perfect_square(rhs - k * y * y) else {
                continue;
            };
            if x == 0 {
                continue;
            }
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.insert(CurvePoint {
                    x: sx * x,
                    y: sy * y,
                    z,
                    curve,
                    level,
                });
            }
        }
    }
    Ok(out)
}

/// Oracle points of `kind` for class/level `d`. For the `X1D` kinds `z_max`
/// bounds `z / d`, and only multiples of `d` are scanned (`gcd(y, z) = d`).
pub fn oracle_set(kind: SetKind, d: i128, z_max: i128) -> Result<BTreeSet<CurvePoint>> {
    let raw = match kind {
        SetKind::X1D | SetKind::X1DStar => scan(Curve::TwentySeven, 1, d, z_max)?,
        _ => brute_solutions(kind.curve(), d, z_max)?,
    };
    let mut out = BTreeSet::new();
    for p in raw {
        if member(&p, kind, d)? {
            out.insert(p);
        }
    }
    Ok(out)
}

/// Whether `p` falls within the oracle's range for `kind`.
pub fn within_bound(p: &CurvePoint, kind: SetKind, d: i128, z_max: i128) -> bool {
    match kind {
        SetKind::X1D | SetKind::X1DStar => p.z <= z_max * d,
        _ => p.z <= z_max,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub d: i128,
    pub curve: Curve,
    pub kind: SetKind,
    pub z_max: i128,
    pub constructed_count: usize,
    pub oracle_count: usize,
    /// Found by the oracle, absent from the constructed set.
    pub missing: Vec<CurvePoint>,
    /// Constructed, but not an oracle point.
    pub extra: Vec<CurvePoint>,
}

impl OracleReport {
    pub fn is_match(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Diffs `constructed` against the oracle. Constructed points beyond the
/// bound are ignored.
pub fn compare<'a, I>(kind: SetKind, d: i128, z_max: i128, constructed: I) -> Result<OracleReport>
where
    I: IntoIterator<Item = &'a CurvePoint>,
{
    let built: BTreeSet<CurvePoint> = constructed
        .into_iter()
        .filter(|p| within_bound(p, kind, d, z_max))
        .copied()
        .collect();
    let truth = oracle_set(kind, d, z_max)?;
    Ok(OracleReport {
        d,
        curve: kind.curve(),
        kind,
        z_max,
        constructed_count: built.len(),
        oracle_count: truth.len(),
        missing: truth.difference(&built).copied().collect(),
        extra: built.difference(&truth).copied().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(s: &BTreeSet<CurvePoint>) -> BTreeSet<(i128, i128, i128)> {
        s.iter().map(|p| p.coords()).collect()
    }

    #[test]
    fn small_searches() {
        let got = coords(&brute_solutions(Curve::Three, 1, 1).unwrap());
        assert_eq!(got, BTreeSet::from([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)]));

        let got = coords(&brute_solutions(Curve::TwentySeven, 1, 3).unwrap());
        assert!(got.contains(&(9, 1, 3)) && got.contains(&(-9, -1, 3)));

        let got = coords(&brute_solutions(Curve::Three, 7, 1).unwrap());
        for q in [(1, 3, 1), (-1, -3, 1), (5, 1, 1), (-5, 1, 1)] {
            assert!(got.contains(&q), "{q:?}");
        }
    }

    #[test]
    fn trivial_zeros_are_excluded() {
        // (±2, 0, 1) solves x^2 + 3y^2 = 4 but has y = 0.
        let got = coords(&brute_solutions(Curve::Three, 1, 1).unwrap());
        assert!(!got.contains(&(2, 0, 1)));
        for p in crate::curve::trivial_x1_points(1).unwrap() {
            assert!(!oracle_set(SetKind::X1D, 1, 3).unwrap().contains(&p));
        }
    }

    #[test]
    fn sign_symmetry() {
        for (curve, level) in [(Curve::Three, 7), (Curve::TwentySeven, 13), (Curve::Three, 49)] {
            let s = brute_solutions(curve, level, 30).unwrap();
            for p in &s {
                assert!(s.contains(&CurvePoint { x: -p.x, ..*p }));
                assert!(s.contains(&CurvePoint { y: -p.y, ..*p }));
            }
        }
    }

    #[test]
    fn empty_level() {
        let r = compare(SetKind::YD1Star, 4, 50, &[]).unwrap();
        assert_eq!(r.oracle_count, 0);
        assert!(r.is_match());
    }

    #[test]
    fn diff_reports_both_directions() {
        let fake = CurvePoint::three(1, 1, 1, 1).unwrap();
        let r = compare(SetKind::YD1Star, 7, 1, &[fake]).unwrap();
        assert!(!r.is_match());
        assert_eq!(r.extra, vec![fake]);
        assert_eq!(r.missing.len(), r.oracle_count);
    }

    #[test]
    fn gcd_class_scan_matches_full_scan() {
        let d = 7;
        let slow: BTreeSet<_> = brute_solutions(Curve::TwentySeven, 1, 7 * 6)
            .unwrap()
            .into_iter()
            .filter(|p| member(p, SetKind::X1DStar, d).unwrap())
            .collect();
        assert_eq!(slow, oracle_set(SetKind::X1DStar, d, 6).unwrap());
    }
}
