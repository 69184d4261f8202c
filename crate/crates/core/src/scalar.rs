//! Coefficient abstractions.
//!
//! Every algorithm in this crate is written against [`Ring`]; the concrete
//! instantiations used in practice are exact rationals ([`crate::Rational`])
//! and polynomials in the coefficient variables ([`crate::ParamPoly`]).

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with decidable equality and exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `self += c * other` without an intermediate clone when possible.
    fn add_mul(&mut self, c: &Self, other: &Self) {
        let prod = c.clone() * other.clone();
        let cur = std::mem::replace(self, Self::zero());
        *self = cur + prod;
    }
}

impl Ring for BigRational {}
impl Ring for Ratio<i64> {}
impl Ring for f64 {}

/// A field of scalars: exact rationals in every shipped use, but `f64`
/// satisfies the bound as well.
pub trait Field: Ring + num_traits::Num + std::fmt::Display {
    fn from_i64(v: i64) -> Self;
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Field for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

/// Scalars that can be rendered in the `p/q` text grammar and parsed back.
pub trait ExactScalar: Field {
    fn parse_exact(s: &str) -> Option<Self>;
}

impl ExactScalar for BigRational {
    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(BigRational::new(p, q))
            }
            None => Some(BigRational::from_integer(s.parse().ok()?)),
        }
    }
}

pub(crate) fn add_assign<R: Ring>(acc: &mut R, v: R) {
    let cur = std::mem::replace(acc, R::zero());
    *acc = cur + v;
}
