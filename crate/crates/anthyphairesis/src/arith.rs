//! Exact arithmetic substrate: arbitrary-precision integer square roots and
//! the ring Z[sqrt(N)] in which every remainder of a surd expansion lives.

use num_bigint::BigInt;
pub use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Floor of the square root of a non-negative integer: the unique `r` with
/// `r^2 <= n < (r+1)^2`.
pub fn isqrt(n: &BigInt) -> Result<BigInt, Error> {
    if n.is_negative() {
        return Err(Error::NegativeRadicand(n.clone()));
    }
    Ok(n.sqrt())
}

/// The field of computation: fixes the radicand `N` of `sqrt(N)`.
///
/// `N` must be at least 2 and not a perfect square, so `sqrt(N)` is
/// irrational and every element `m*sqrt(N) + n` has a unique coefficient
/// representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdContext {
    radicand: BigInt,
    sqrt_floor: BigInt,
}

impl SurdContext {
    pub fn new(radicand: BigInt) -> Result<Self, Error> {
        if radicand < BigInt::from(2) {
            return Err(Error::InvalidSurdRadicand(radicand));
        }
        let sqrt_floor = radicand.sqrt();
        if &sqrt_floor * &sqrt_floor == radicand {
            return Err(Error::InvalidSurdRadicand(radicand));
        }
        Ok(SurdContext {
            radicand,
            sqrt_floor,
        })
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// `floor(sqrt(N))`, cached at construction.
    pub fn sqrt_floor(&self) -> &BigInt {
        &self.sqrt_floor
    }

    /// The element `m*sqrt(N) + n`.
    pub fn element(&self, m: impl Into<BigInt>, n: impl Into<BigInt>) -> SurdElement {
        SurdElement {
            ctx: self.clone(),
            m: m.into(),
            n: n.into(),
        }
    }

    /// `sqrt(N)` itself, the expansion seed `a`.
    pub fn sqrt(&self) -> SurdElement {
        self.element(1, 0)
    }

    /// The unit, the expansion seed `b`.
    pub fn one(&self) -> SurdElement {
        self.element(0, 1)
    }
}

/// An element `m*sqrt(N) + n` of Z[sqrt(N)], stored exactly.
///
/// Irrationality of `sqrt(N)` makes the representation unique, so equality
/// is componentwise and no normalization is ever needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdElement {
    ctx: SurdContext,
    m: BigInt,
    n: BigInt,
}

impl SurdElement {
    pub fn context(&self) -> &SurdContext {
        &self.ctx
    }

    /// Coefficient of `sqrt(N)`.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// Rational part.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn coeffs(&self) -> (&BigInt, &BigInt) {
        (&self.m, &self.n)
    }

    pub(crate) fn check_context(&self, other: &Self) -> Result<(), Error> {
        if self.ctx.radicand == other.ctx.radicand {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.radicand.clone(),
                right: other.ctx.radicand.clone(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_context(other)?;
        Ok(SurdElement {
            ctx: self.ctx.clone(),
            m: &self.m + &other.m,
            n: &self.n + &other.n,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_context(other)?;
        Ok(SurdElement {
            ctx: self.ctx.clone(),
            m: &self.m - &other.m,
            n: &self.n - &other.n,
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        SurdElement {
            ctx: self.ctx.clone(),
            m: &self.m * k,
            n: &self.n * k,
        }
    }

    /// `(m1*sqrt(N) + n1)(m2*sqrt(N) + n2)
    ///   = (m1*n2 + m2*n1)*sqrt(N) + (m1*m2*N + n1*n2)`.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_context(other)?;
        let (m, n) = self.mul_coeffs(other);
        Ok(SurdElement {
            ctx: self.ctx.clone(),
            m,
            n,
        })
    }

    /// Product coefficients without cloning the context; hot path of the
    /// logos scan.
    pub(crate) fn mul_coeffs(&self, other: &Self) -> (BigInt, BigInt) {
        (
            &self.m * &other.n + &other.m * &self.n,
            &self.m * &other.m * &self.ctx.radicand + &self.n * &other.n,
        )
    }

    /// Exact sign of `m*sqrt(N) + n`, decided by comparing `m^2*N` against
    /// `n^2` in the mixed-sign cases. Zero only for the zero element.
    pub fn sign(&self) -> Sign {
        match (self.m.sign(), self.n.sign()) {
            (Sign::NoSign, s) => s,
            (s, Sign::NoSign) => s,
            (Sign::Plus, Sign::Plus) => Sign::Plus,
            (Sign::Minus, Sign::Minus) => Sign::Minus,
            (m_sign, _) => {
                let sqrt_part = &self.m * &self.m * &self.ctx.radicand;
                let rational_part = &self.n * &self.n;
                match sqrt_part.cmp(&rational_part) {
                    Ordering::Greater => m_sign,
                    Ordering::Less => m_sign.neg(),
                    // unreachable for a non-square radicand
                    Ordering::Equal => Sign::NoSign,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Plus
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }

    /// `floor(self / divisor)` for strictly positive operands.
    ///
    /// Rationalizes by the conjugate of the divisor:
    /// `x/y = (A*sqrt(N) + B)/d` with `A = m1*n2 - n1*m2`,
    /// `B = n1*n2 - m1*m2*N`, `d = n2^2 - m2^2*N`, then floors exactly.
    /// `floor(A*sqrt(N))` comes from an integer square root, and because
    /// `A*sqrt(N)` is irrational whenever `A != 0` the outer floor can be
    /// taken on the already-floored numerator.
    pub fn floor_div(&self, divisor: &Self) -> Result<BigInt, Error> {
        self.check_context(divisor)?;
        if self.sign() != Sign::Plus || divisor.sign() != Sign::Plus {
            return Err(Error::NotPositive);
        }
        let radicand = &self.ctx.radicand;
        let mut a = &self.m * &divisor.n - &self.n * &divisor.m;
        let mut b = &self.n * &divisor.n - &self.m * &divisor.m * radicand;
        let mut d = &divisor.n * &divisor.n - &divisor.m * &divisor.m * radicand;
        // d = 0 would make sqrt(N) rational
        debug_assert!(!d.is_zero());
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        let sqrt_term = match a.sign() {
            Sign::NoSign => BigInt::zero(),
            Sign::Plus => self.floor_sqrt_multiple(&a),
            Sign::Minus => -self.floor_sqrt_multiple(&(-a)) - 1,
        };
        Ok((sqrt_term + b).div_floor(&d))
    }

    /// `floor(a * sqrt(N))` for `a > 0`.
    fn floor_sqrt_multiple(&self, a: &BigInt) -> BigInt {
        if a.is_one() {
            self.ctx.sqrt_floor.clone()
        } else {
            (a * a * &self.ctx.radicand).sqrt()
        }
    }
}

/// Cross-multiplication test for `e_n/e_{n+1} = e_m/e_{m+1}`: returns the
/// common product coefficients when `e_n * e_{m+1}` equals `e_m * e_{n+1}`.
/// Compares the sqrt-coefficients first since they almost always differ,
/// which keeps the quadratic witness scan cheap. Callers guarantee shared
/// contexts and positivity.
pub(crate) fn logos_cross_equal(
    e_n: &SurdElement,
    e_n1: &SurdElement,
    e_m: &SurdElement,
    e_m1: &SurdElement,
) -> Option<(BigInt, BigInt)> {
    let lhs_m = &e_n.m * &e_m1.n + &e_m1.m * &e_n.n;
    let rhs_m = &e_m.m * &e_n1.n + &e_n1.m * &e_m.n;
    if lhs_m != rhs_m {
        return None;
    }
    let radicand = &e_n.ctx.radicand;
    let lhs_n = &e_n.m * &e_m1.m * radicand + &e_n.n * &e_m1.n;
    let rhs_n = &e_m.m * &e_n1.m * radicand + &e_m.n * &e_n1.n;
    if lhs_n != rhs_n {
        return None;
    }
    Some((lhs_m, lhs_n))
}

impl fmt::Display for SurdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*sqrt({}) + {}", self.m, self.ctx.radicand, self.n)
    }
}

/// Flip helper for [`Sign`]; `NoSign` stays put.
trait SignExt {
    fn neg(self) -> Self;
}

impl SignExt for Sign {
    fn neg(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::NoSign => Sign::NoSign,
        }
    }
}
