//! Exact integer utilities: gcd, square roots, valuations, trial-division
//! factorization and an overflow-tracking wrapper for polynomial formulas.
//!
//! Everything works on `i128`. Overflow never wraps: [`Ck`] carries a poisoned
//! state through an expression and surfaces it as [`Error::Overflow`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest integer [`factorize`] will accept. Trial division up to 10^6.
pub const FACTOR_BOUND: i128 = 1_000_000_000_000;

/// An `i128` that remembers whether any operation producing it overflowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ck(Option<i128>);

#[inline]
pub fn ck(v: i128) -> Ck {
    Ck(Some(v))
}

impl Ck {
    pub fn get(self) -> Result<i128> {
        self.0.ok_or(Error::Overflow)
    }

    pub fn pow(self, e: u32) -> Ck {
        Ck(self.0.and_then(|v| v.checked_pow(e)))
    }

    /// Division that must be exact; a nonzero remainder is reported as an
    /// internal error rather than truncated.
    pub fn div_exact(self, d: i128) -> Result<i128> {
        let v = self.get()?;
        if d == 0 || v % d != 0 {
            return Err(Error::Internal(format!("{v} is not divisible by {d}")));
        }
        Ok(v / d)
    }
}

impl From<i128> for Ck {
    fn from(v: i128) -> Self {
        ck(v)
    }
}

macro_rules! ck_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<Ck> for Ck {
            type Output = Ck;
            #[inline]
            fn $method(self, rhs: Ck) -> Ck {
                match (self.0, rhs.0) {
                    (Some(a), Some(b)) => Ck(a.$checked(b)),
                    _ => Ck(None),
                }
            }
        }
        impl $tr<i128> for Ck {
            type Output = Ck;
            #[inline]
            fn $method(self, rhs: i128) -> Ck {
                self.$method(ck(rhs))
            }
        }
        impl $tr<Ck> for i128 {
            type Output = Ck;
            #[inline]
            fn $method(self, rhs: Ck) -> Ck {
                ck(self).$method(rhs)
            }
        }
    };
}

ck_binop!(Add, add, checked_add);
ck_binop!(Sub, sub, checked_sub);
ck_binop!(Mul, mul, checked_mul);

impl Neg for Ck {
    type Output = Ck;
    fn neg(self) -> Ck {
        Ck(self.0.and_then(i128::checked_neg))
    }
}

/// Greatest common divisor, always nonnegative. `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> i128 {
    let g = num_integer::gcd(a.unsigned_abs(), b.unsigned_abs());
    // Only gcd(i128::MIN, 0) or gcd(i128::MIN, i128::MIN) can reach 2^127.
    i128::try_from(g).expect("gcd of i128 values exceeds i128::MAX")
}

pub fn gcd3(a: i128, b: i128, c: i128) -> i128 {
    gcd(gcd(a, b), c)
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: i128) -> i128 {
    debug_assert!(n >= 0);
    (n as u128).isqrt() as i128
}

/// Squares are 0, 1, 4, 9, 16, 17, 25, 33, 36, 41, 49, 57 mod 64.
const SQUARE_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut i = 0;
    while i < 64 {
        mask |= 1 << ((i * i) % 64);
        i += 1;
    }
    mask
};

/// The nonnegative square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    if SQUARE_MOD_64 & (1 << (n & 63)) == 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Largest `e` with `p^e | n`.
pub fn valuation(n: i128, p: i128) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut n = n;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// Prime factorization with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(i128, u32)>);

impl Factorization {
    pub fn factors(&self) -> &[(i128, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = i128> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponent(&self, p: i128) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// Multiplies the factors back together.
    pub fn value(&self) -> i128 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn factorize(n: i128) -> Result<Factorization> {
    if n < 1 {
        return Err(Error::NotPositive(n));
    }
    if n > FACTOR_BOUND {
        return Err(Error::FactorBound { n, bound: FACTOR_BOUND });
    }
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(Factorization(out))
}

pub fn is_cube_free(n: i128) -> Result<bool> {
    Ok(factorize(n)?.factors().iter().all(|&(_, e)| e < 3))
}

/// Deterministic trial division.
pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `ℓ` with `ℓ^2 | n`. These drive every star condition.
pub fn square_primes(n: i128) -> Result<Vec<i128>> {
    Ok(factorize(n)?
        .factors()
        .iter()
        .filter(|&&(_, e)| e >= 2)
        .map(|&(p, _)| p)
        .collect())
}
