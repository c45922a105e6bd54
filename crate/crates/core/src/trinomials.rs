//! Trinomials `X^3 - aX + b` with square discriminant `4a^3 - 27b^2 = c^2`.
//!
//! Two routes lead to the same list per gcd class `D`:
//!
//! * [`emit`] evaluates the closed-form families in `(s, t)` and the
//!   representations `(u_j, v_j)` of `D` (or of `D/9`);
//! * [`pipeline_points`] builds `X_1^D(Z)*` through the level maps, and each
//!   point `(c, b, a)` gives `X^3 - aX + b`.
//!
//! Trinomials are compared up to `(a, b) ~ (q^2 a, q^3 b)`; the canonical
//! representative has `b > 0` and no prime `ℓ` with `ℓ^2 | a`, `ℓ^3 | b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;

use crate::admissibility::{classify_d, AdmissibleD, Inadmissible};
use crate::arith::{ck, factorize, gcd, gcd3, is_cube_free, is_perfect_square, isqrt, square_primes, valuation};
use crate::curve::{assemble_x1d_star_from_y, delta, member, theta, Curve, CurvePoint, SetKind};
use crate::error::{Error, Result};
use crate::level_maps::build_yd1_star;
use crate::oracle::within_bound;
use crate::parametrization::{enumerate_y11, pairs, pairs_with_norm, st_max_for, ParamPair, StPolys};
use crate::representations::{represent_u3v, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trinomial {
    pub a: i128,
    pub b: i128,
    /// `sqrt(4a^3 - 27b^2)`, positive.
    pub c: i128,
    /// `gcd(a, b)`.
    pub d: i128,
}

impl Trinomial {
    /// Checks every invariant: nonzero square discriminant, `b ≠ 0`, `D`
    /// cube-free and `ℓ^3 ∤ b` whenever `ℓ^2 | D`.
    pub fn new(a: i128, b: i128) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidTrinomial {
            a,
            b,
            reason: reason.into(),
        };
        if b == 0 {
            return Err(bad("b = 0, so X divides the polynomial"));
        }
        let c = discriminant_sqrt(a, b)?.ok_or_else(|| bad("discriminant is not a positive square"))?;
        let d = gcd(a, b);
        let f = factorize(d)?;
        if f.factors().iter().any(|&(_, e)| e >= 3) {
            return Err(bad("gcd(a, b) is not cube-free"));
        }
        for l in square_primes(d)? {
            if b % (l * l * l) == 0 {
                return Err(bad("not reduced: l^2 | gcd(a, b) and l^3 | b"));
            }
        }
        Ok(Self { a, b, c, d })
    }
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "X^3 - {}X {} {}", self.a, sign, self.b.abs())
    }
}

/// `c` with `c^2 = 4a^3 - 27b^2 > 0`.
pub fn discriminant_sqrt(a: i128, b: i128) -> Result<Option<i128>> {
    let disc = (ck(4) * ck(a).pow(3) - ck(27) * b * b).get()?;
    if disc <= 0 {
        return Ok(None);
    }
    Ok(is_perfect_square(disc))
}

fn eval(a: i128, b: i128, x: i128) -> Result<i128> {
    (ck(x).pow(3) - ck(a) * x + b).get()
}

/// Integer root of a monotone stretch of `X^3 - aX + b` on `[lo, hi]`.
fn root_in(a: i128, b: i128, lo: i128, hi: i128, increasing: bool) -> Result<bool> {
    let (mut lo, mut hi) = (lo, hi);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        let f = eval(a, b, mid)?;
        if f == 0 {
            return Ok(true);
        }
        if (f < 0) == increasing {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    Ok(false)
}

/// Whether `X^3 - aX + b` has an integer (equivalently, rational) root.
/// Every real root has `|x| <= 2 sqrt(a/3)`, and the polynomial is monotone
/// on each side of `±sqrt(a/3)`.
pub fn has_rational_root(a: i128, b: i128) -> Result<bool> {
    if a <= 0 {
        // Monotone increasing everywhere.
        let bound = (ck(b.abs()) + 1).get()?;
        return root_in(a, b, -bound, bound, true);
    }
    let k = isqrt(a / 3);
    let l = 2 * k + 2;
    Ok(root_in(a, b, -l, -k - 1, true)? || root_in(a, b, -k, k, false)? || root_in(a, b, k + 1, l, true)?)
}

/// Irreducible over `Q`. For `D > 1` this follows from the invariants alone
/// (Eisenstein at a prime of `D`, or the `ℓ^2 | D` variant).
pub fn is_irreducible(t: &Trinomial) -> Result<bool> {
    if t.d > 1 {
        return Ok(true);
    }
    Ok(!has_rational_root(t.a, t.b)?)
}

/// The equivalent reduced trinomial and the `q` with `(a', b') = (q^2 a, q^3 b)`.
pub fn canonicalize(a: i128, b: i128) -> Result<(Trinomial, Ratio<i128>)> {
    let bad = |reason: &str| Error::InvalidTrinomial {
        a,
        b,
        reason: reason.into(),
    };
    if a == 0 || b == 0 {
        return Err(bad("a and b must be nonzero"));
    }
    if discriminant_sqrt(a, b)?.is_none() {
        return Err(bad("discriminant is not a positive square"));
    }
    let (mut a2, mut b2, mut m) = (a, b, 1i128);
    for l in factorize(gcd(a, b))?.primes() {
        let e = (valuation(a2, l)? / 2).min(valuation(b2, l)? / 3);
        if e > 0 {
            let le = l.pow(e);
            a2 /= le * le;
            b2 /= le * le * le;
            m *= le;
        }
    }
    let sign = b2.signum();
    let t = Trinomial::new(a2, sign * b2)?;
    Ok((t, Ratio::new(sign, m)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `D = 1`: `X^3 - 3N X ± R`.
    FSt,
    /// `D = 9`: `X^3 - 9N X + 9S`.
    H9St,
    /// `3 ∤ D`, from the first parametrization.
    FD1,
    /// `3 ∤ D`, from the second parametrization.
    FD2,
    /// `3 ∤ D`, `3 | v_j`.
    GD1,
    /// `3 ∤ D`, `3 | u_j ± v_j`.
    GD2,
    /// `D = 9 D1`, `3 ∤ v_j`.
    H9D1,
    /// `D = 9 D1`, `3 ∤ u_j ± v_j`.
    H9D2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::FSt => "F_ST",
            Family::H9St => "H9_ST",
            Family::FD1 => "F_D1",
            Family::FD2 => "F_D2",
            Family::GD1 => "G_D1",
            Family::GD2 => "G_D2",
            Family::H9D1 => "H9D_1",
            Family::H9D2 => "H9D_2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a trinomial came from. `j` is the 1-based index into the sorted
/// representations (0 for `F_ST`, `H9_ST`); `sign` is the `±` in front of `v_j`
/// (for `F_ST`, the sign of `R`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    pub family: Family,
    pub d: i128,
    pub j: usize,
    pub sign: i128,
    pub s: i128,
    pub t: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Emitted {
    pub trinomial: Trinomial,
    pub tag: FamilyTag,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Emission {
    /// One record per canonical trinomial, sorted by `(a, b)`.
    pub records: Vec<Emitted>,
    /// Raw emissions per canonical `(a, b)`.
    pub multiplicity: BTreeMap<(i128, i128), usize>,
    /// Set when `D` is not admissible; `records` is then empty.
    pub inadmissible: Option<Inadmissible>,
}

struct Candidate {
    family: Family,
    j: usize,
    sign: i128,
    a: Ck3,
    b: Ck3,
    c: Ck3,
}

/// Lazily reported overflow for candidate coefficients.
type Ck3 = Result<i128>;

fn candidates(ad: &AdmissibleD, reps: &[Representation], pair: &ParamPair) -> Result<Vec<(Candidate, bool)>> {
    let f: StPolys = pair.polys()?;
    let StPolys { p, q, n, r, s } = f;
    let fam1_ok = p != 0 && q != 0;
    let fam2_ok = r != 0 && s != 0;
    let mut out = Vec::new();
    let mut push = |c: Candidate, strict: bool| out.push((c, strict));

    if ad.d == 1 {
        for sign in [1, -1] {
            push(
                Candidate {
                    family: Family::FSt,
                    j: 0,
                    sign,
                    a: (ck(3) * n).get(),
                    b: Ok(sign * r),
                    c: (ck(9) * s.abs()).get(),
                },
                fam2_ok,
            );
        }
        return Ok(out);
    }
    if ad.d == 9 {
        push(
            Candidate {
                family: Family::H9St,
                j: 0,
                sign: 1,
                a: (ck(9) * n).get(),
                b: (ck(9) * s).get(),
                c: (ck(27) * r.abs()).get(),
            },
            fam2_ok,
        );
        return Ok(out);
    }
    let d1 = ad.d1;
    for (idx, rep) in reps.iter().enumerate() {
        let (u, v, j) = (rep.u, rep.v, idx + 1);
        for sg in [1i128, -1] {
            // 3u Q ± v P and u P ∓ 9 v Q
            let k1 = (ck(3) * u * q + ck(sg) * v * p).get()?;
            let m1 = (ck(u) * p - ck(sg * 9) * v * q).get()?;
            // u S ± v R and u R ∓ 3 v S
            let k2 = (ck(u) * s + ck(sg) * v * r).get()?;
            let m2 = (ck(u) * r - ck(sg * 3) * v * s).get()?;
            if !ad.has9 {
                let d = ad.d;
                if gcd3(d, n, k1) == 1 {
                    push(
                        Candidate {
                            family: Family::FD1,
                            j,
                            sign: sg,
                            a: (ck(3) * d * n).get(),
                            b: (ck(d) * m1).get(),
                            c: (ck(9) * d * k1.abs()).get(),
                        },
                        fam1_ok,
                    );
                }
                if gcd3(d, n, k2) == 1 {
                    push(
                        Candidate {
                            family: Family::FD2,
                            j,
                            sign: sg,
                            a: (ck(3) * d * n).get(),
                            b: (ck(d) * m2).get(),
                            c: (ck(9) * d * k2.abs()).get(),
                        },
                        fam2_ok,
                    );
                }
                if v % 3 == 0 && gcd3(d, n, k1) == 1 {
                    push(
                        Candidate {
                            family: Family::GD1,
                            j,
                            sign: sg,
                            a: (ck(d) * n).get(),
                            b: (ck(d) * (ck(u) * q + ck(sg) * (v / 3) * p)).get(),
                            c: (ck(d) * m1.abs()).get(),
                        },
                        fam1_ok,
                    );
                }
                if (u + sg * v) % 3 == 0 && gcd3(d, n, k2) == 1 {
                    push(
                        Candidate {
                            family: Family::GD2,
                            j,
                            sign: sg,
                            a: (ck(d) * n).get(),
                            b: (ck(d) * k2).div_exact(3),
                            c: (ck(d) * m2.abs()).get(),
                        },
                        fam2_ok,
                    );
                }
            } else {
                let nine_d1 = (ck(9) * d1).get()?;
                if v % 3 != 0 && gcd3(d1, n, k1) == 1 {
                    push(
                        Candidate {
                            family: Family::H9D1,
                            j,
                            sign: sg,
                            a: (ck(nine_d1) * n).get(),
                            b: (ck(nine_d1) * k1).get(),
                            c: (ck(27) * d1 * m1.abs()).get(),
                        },
                        fam1_ok,
                    );
                }
                if (u + sg * v) % 3 != 0 && gcd3(d1, n, k2) == 1 {
                    push(
                        Candidate {
                            family: Family::H9D2,
                            j,
                            sign: sg,
                            a: (ck(nine_d1) * n).get(),
                            b: (ck(nine_d1) * k2).get(),
                            c: (ck(27) * d1 * m2.abs()).get(),
                        },
                        fam2_ok,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Validates one candidate. Strict candidates (non-degenerate pairs) must
/// pass every check; lenient ones (degenerate pairs) are dropped on failure.
fn accept(ad: &AdmissibleD, cand: &Candidate, strict: bool) -> Result<Option<Trinomial>> {
    let fail = |why: String| -> Result<Option<Trinomial>> {
        if strict {
            Err(Error::Internal(format!("{} emission failed: {why}", cand.family)))
        } else {
            Ok(None)
        }
    };
    let (a, b, c) = match (&cand.a, &cand.b, &cand.c) {
        (Ok(a), Ok(b), Ok(c)) => (*a, *b, *c),
        (Err(Error::Overflow), _, _) | (_, Err(Error::Overflow), _) | (_, _, Err(Error::Overflow)) => {
            return Err(Error::Overflow)
        }
        _ => return fail("inexact coefficient".into()),
    };
    if a == 0 || b == 0 {
        return fail(format!("zero coefficient in ({a}, {b})"));
    }
    match discriminant_sqrt(a, b)? {
        Some(got) if got == c => {}
        got => return fail(format!("({a}, {b}): sqrt disc {got:?}, closed form {c}")),
    }
    let (t, q) = canonicalize(a, b)?;
    if q.denom().abs() != 1 {
        return fail(format!("({a}, {b}) needed rescaling by {q}"));
    }
    if t.d != ad.d {
        return fail(format!("({a}, {b}) has gcd {} instead of {}", t.d, ad.d));
    }
    if !is_irreducible(&t)? {
        return fail(format!("({a}, {b}) is reducible"));
    }
    Ok(Some(t))
}

/// First emission and raw count per canonical `(a, b)`.
type Tally = (BTreeMap<(i128, i128), Emitted>, BTreeMap<(i128, i128), usize>);

fn emit_over(ad: &AdmissibleD, pairs: &[ParamPair]) -> Result<Tally> {
    let reps = represent_u3v(ad.d1).reps;
    let mut first = BTreeMap::new();
    let mut mult = BTreeMap::new();
    for pair in pairs {
        for (cand, strict) in candidates(ad, &reps, pair)? {
            if let Some(t) = accept(ad, &cand, strict)? {
                let tag = FamilyTag {
                    family: cand.family,
                    d: ad.d,
                    j: cand.j,
                    sign: cand.sign,
                    s: pair.s,
                    t: pair.t,
                };
                first.entry((t.a, t.b)).or_insert(Emitted { trinomial: t, tag });
                *mult.entry((t.a, t.b)).or_insert(0) += 1;
            }
        }
    }
    Ok((first, mult))
}

/// Every family member for gcd class `d` over pairs with
/// `max(|s|, |t|) <= st_max`, canonicalized and deduplicated.
pub fn emit(d: i128, st_max: i128) -> Result<Emission> {
    if st_max < 1 {
        return Err(Error::NotPositive(st_max));
    }
    let ad = match classify_d(d)? {
        Ok(ad) => ad,
        Err(why) => {
            return Ok(Emission {
                inadmissible: Some(why),
                ..Emission::default()
            })
        }
    };
    let (first, multiplicity) = emit_over(&ad, &pairs(st_max))?;
    Ok(Emission {
        records: first.into_values().collect(),
        multiplicity,
        inadmissible: None,
    })
}

/// `X_1^D(Z)*` built from `Y_1^1` through the level maps: `theta ∘ alpha`
/// for `3 ∤ D`, `theta ∘ delta` on the `3 ∤ y` part for `D = 9 D1`.
pub fn pipeline_points(d: i128, st_max: i128) -> Result<BTreeSet<CurvePoint>> {
    let ad = match classify_d(d)? {
        Ok(ad) => ad,
        Err(_) => return Ok(BTreeSet::new()),
    };
    let base = enumerate_y11(st_max)?;
    let y_star = build_yd1_star(ad.d1, &base)?;
    let mut out = BTreeSet::new();
    if ad.has9 {
        for p in y_star.iter().filter(|p| p.y % 3 != 0) {
            out.insert(theta(&delta(p, ad.d1)?, d)?);
        }
    } else {
        for p in assemble_x1d_star_from_y(d, &y_star)? {
            out.insert(theta(&p, d)?);
        }
    }
    for p in &out {
        if !member(p, SetKind::X1DStar, d)? {
            return Err(Error::Internal(format!(
                "pipeline point {p} is not in X1D* for D = {d}"
            )));
        }
    }
    Ok(out)
}

/// The constructed version of `oracle_set(kind, d, z_max)`, with `st_max`
/// chosen by [`st_max_for`].
///
/// Star sets come from the level maps (empty when `d` is not admissible);
/// full sets are the disjoint union of `(Bx, By, z)` over star points at
/// `d/B^2` with `gcd(B, z) = 1`. `d` must be cube-free, and the 3-curve kinds
/// are not constructed when `3 ∥ d`.
pub fn construct(kind: SetKind, d: i128, z_max: i128) -> Result<BTreeSet<CurvePoint>> {
    if z_max < 1 {
        return Err(Error::NotPositive(z_max));
    }
    if !is_cube_free(d)? {
        return Err(Error::Precondition(format!("construction needs cube-free D, got {d}")));
    }
    if kind.curve() == Curve::Three && valuation(d, 3)? == 1 {
        return Err(Error::Precondition(format!(
            "{kind} is not constructed when 3 ∥ D (D = {d})"
        )));
    }
    let base = enumerate_y11(st_max_for(z_max))?;
    let star_kind = match kind {
        SetKind::YD1 | SetKind::YD1Star => SetKind::YD1Star,
        _ => SetKind::XD1Star,
    };
    let raw = if kind.is_star() {
        star_set(star_kind, d, &base)?
    } else {
        let mut out = BTreeSet::new();
        let sq = square_primes(d)?;
        for mask in 0u32..(1 << sq.len()) {
            let b: i128 = sq
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &l)| l)
                .product();
            for p in star_set(star_kind, d / (b * b), &base)? {
                if gcd(b, p.z) == 1 {
                    let (x, y) = ((ck(b) * p.x).get()?, (ck(b) * p.y).get()?);
                    out.insert(CurvePoint::new(x, y, p.z, p.curve, d)?);
                }
            }
        }
        out
    };
    let raw = match kind {
        SetKind::X1D | SetKind::X1DStar => raw.iter().map(|p| theta(p, d)).collect::<Result<_>>()?,
        _ => raw,
    };
    let mut out = BTreeSet::new();
    for p in raw {
        if !member(&p, kind, d)? {
            return Err(Error::Internal(format!("constructed {p} is not in {kind} for D = {d}")));
        }
        if within_bound(&p, kind, d, z_max) {
            out.insert(p);
        }
    }
    Ok(out)
}

/// `Y_e^1*` or `X_e^1*` (unbounded beyond the base), empty when `e` is not
/// admissible or, on the 3-curve, when `9 | e`.
fn star_set(kind: SetKind, e: i128, base: &BTreeSet<CurvePoint>) -> Result<BTreeSet<CurvePoint>> {
    let Ok(ad) = classify_d(e)? else {
        return Ok(BTreeSet::new());
    };
    let y_star = build_yd1_star(ad.d1, base)?;
    match (kind, ad.has9) {
        (SetKind::YD1Star, false) => Ok(y_star),
        (SetKind::YD1Star, true) => Ok(BTreeSet::new()),
        (_, false) => assemble_x1d_star_from_y(e, &y_star),
        (_, true) => y_star
            .iter()
            .filter(|p| p.y % 3 != 0)
            .map(|p| delta(p, ad.d1))
            .collect(),
    }
}

/// `(x, y, z) -> X^3 - zX + y`, canonicalized.
pub fn trinomial_of_point(p: &CurvePoint) -> Result<Trinomial> {
    Ok(canonicalize(p.z, p.y)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Found(FamilyTag),
    /// No family member matched within the search budget.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NotSquareDisc,
    /// `canonical` is absent when `b = 0`.
    Reducible {
        canonical: Option<Trinomial>,
    },
    Cyclic {
        trinomial: Trinomial,
        provenance: Provenance,
    },
}

/// Largest `s^2 - st + t^2` that [`classify`] will search for provenance.
pub const CLASSIFY_NORM_BUDGET: i128 = 10_000_000_000;

/// Canonical form, cyclicity verdict and, when the search budget allows, the
/// family member that produces the trinomial.
pub fn classify(a: i128, b: i128) -> Result<Classification> {
    if discriminant_sqrt(a, b)?.is_none() {
        return Ok(Classification::NotSquareDisc);
    }
    if b == 0 {
        return Ok(Classification::Reducible { canonical: None });
    }
    let (t, _) = canonicalize(a, b)?;
    if !is_irreducible(&t)? {
        return Ok(Classification::Reducible { canonical: Some(t) });
    }
    let provenance = match classify_d(t.d)? {
        Ok(ad) => find_provenance(&ad, &t)?,
        Err(_) => Provenance::Inconclusive,
    };
    Ok(Classification::Cyclic {
        trinomial: t,
        provenance,
    })
}

fn find_provenance(ad: &AdmissibleD, t: &Trinomial) -> Result<Provenance> {
    let divisors: &[i128] = match (ad.d, ad.has9) {
        (1, _) => &[3],
        (_, true) => &[1],
        _ => &[3, 1],
    };
    let mut candidates = Vec::new();
    for &k in divisors {
        let m = k * ad.d;
        if t.a % m == 0 && t.a / m <= CLASSIFY_NORM_BUDGET {
            candidates.extend(pairs_with_norm(t.a / m));
        } else if t.a % m == 0 {
            return Ok(Provenance::Inconclusive);
        }
    }
    candidates.sort();
    candidates.dedup();
    let (first, _) = emit_over(ad, &candidates)?;
    Ok(match first.get(&(t.a, t.b)) {
        Some(e) => Provenance::Found(e.tag),
        None => Provenance::Inconclusive,
    })
}
