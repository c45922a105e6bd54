//! Representations `N = u^2 + 3v^2` with `u, v > 0` and `gcd(u, 3v) = 1`.

use crate::arith::{ck, gcd, is_perfect_square, is_prime, isqrt};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    pub u: i128,
    pub v: i128,
    pub n: i128,
}

impl Representation {
    /// Checks every invariant; the only way to build one outside this module.
    pub fn new(u: i128, v: i128) -> Option<Self> {
        let n = u.checked_mul(u)?.checked_add(v.checked_mul(v)?.checked_mul(3)?)?;
        (u > 0 && v > 0 && gcd(u, 3 * v) == 1).then_some(Self { u, v, n })
    }
}

/// All representations of `n`, sorted by ascending `u`. The position in this
/// list (1-based) is the index `j` used by family tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSet {
    pub n: i128,
    pub reps: Vec<Representation>,
}

impl RepresentationSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Representation> {
        self.reps.iter()
    }

    pub fn contains(&self, u: i128, v: i128) -> bool {
        self.reps.iter().any(|r| r.u == u && r.v == v)
    }
}

/// Exhaustive scan over `v = 1..=floor(sqrt((n - 1) / 3))`.
pub fn represent_u3v(n: i128) -> RepresentationSet {
    let mut reps = Vec::new();
    if n >= 4 {
        let v_max = isqrt((n - 1) / 3);
        for v in 1..=v_max {
            if let Some(u) = is_perfect_square(n - 3 * v * v) {
                if let Some(r) = Representation::new(u, v) {
                    reps.push(r);
                }
            }
        }
    }
    reps.sort();
    RepresentationSet { n, reps }
}

/// The unique representation of a prime `p ≡ 1 (mod 3)`.
pub fn prime_representation(p: i128) -> Result<Representation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(Error::NotOneModThree(p));
    }
    let set = represent_u3v(p);
    match set.reps.as_slice() {
        [r] => Ok(*r),
        other => Err(Error::Internal(format!(
            "prime {p} has {} representations",
            other.len()
        ))),
    }
}

/// Converts `n = s^2 - st + t^2` into `n = u^2 + 3v^2`.
///
/// Both odd: `u = (s + t)/2`, `v = |s - t|/2`. One even: with `t` the even one,
/// `u = s - t/2`, `v = t/2`. Signs are dropped and the result is checked
/// against the exhaustive scan.
pub fn st_to_uv(s: i128, t: i128) -> Result<Representation> {
    let bad = || Error::NoRepresentation { s, t };
    if gcd(s, t) != 1 {
        return Err(bad());
    }
    let n = (ck(s) * s - ck(s) * t + ck(t) * t).get()?;
    if n % 3 != 1 {
        return Err(bad());
    }
    let (s, t) = if s % 2 == 0 { (t, s) } else { (s, t) };
    let (u, v) = if t % 2 != 0 {
        ((s + t) / 2, (s - t) / 2)
    } else {
        (s - t / 2, t / 2)
    };
    let r = Representation::new(u.abs(), v.abs()).ok_or_else(bad)?;
    if r.n != n || !represent_u3v(n).contains(r.u, r.v) {
        return Err(bad());
    }
    Ok(r)
}

/// 2 is a cubic residue mod `p` exactly when `3 | v` in `p = u^2 + 3v^2`.
pub fn two_is_cubic_residue(p: i128) -> Result<bool> {
    Ok(prime_representation(p)?.v % 3 == 0)
}
