use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Euclidean coefficient ring for the elimination routines.
///
/// Only two rings are ever instantiated: the integers ([`BigInt`]) and the
/// prime field [`Gf2`]. The norm used for pivoting is the absolute value for
/// integers and the constant 1 on nonzero elements of `Gf2`.
pub trait Scalar: Clone + Debug + std::fmt::Display + PartialEq + Eq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    /// `self = q * d + r` with `r` of strictly smaller norm than `d`.
    fn div_rem(&self, d: &Self) -> (Self, Self);

    fn cmp_norm(&self, other: &Self) -> Ordering;

    /// Unit `u` such that `u * self` is the canonical associate (nonnegative).
    fn normalizing_unit(&self) -> Self;

    /// Canonical residue of `self` modulo a nonzero non-unit `m`.
    fn residue(&self, m: &Self) -> Self;

    fn from_int(v: &BigInt) -> Self;
    fn to_int(&self) -> BigInt;

    /// `self -= q * x`
    fn sub_mul_assign(&mut self, q: &Self, x: &Self) {
        *self = self.sub(&q.mul(x));
    }

    /// `self += q * x`
    fn add_mul_assign(&mut self, q: &Self, x: &Self) {
        *self = self.add(&q.mul(x));
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        self.sign() == Sign::NoSign
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        Integer::div_rem(self, d)
    }
    fn cmp_norm(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -<BigInt as One>::one()
        } else {
            <BigInt as One>::one()
        }
    }
    fn residue(&self, m: &Self) -> Self {
        self.mod_floor(&m.abs())
    }
    fn from_int(v: &BigInt) -> Self {
        v.clone()
    }
    fn to_int(&self) -> BigInt {
        self.clone()
    }
    fn sub_mul_assign(&mut self, q: &Self, x: &Self) {
        *self -= q * x;
    }
    fn add_mul_assign(&mut self, q: &Self, x: &Self) {
        *self += q * x;
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf2(pub bool);

impl Scalar for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_unit(&self) -> bool {
        self.0
    }
    fn neg(&self) -> Self {
        *self
    }
    fn add(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Gf2(self.0 & other.0)
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(d.0, "division by zero in Gf2");
        (*self, Gf2(false))
    }
    fn cmp_norm(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
    fn normalizing_unit(&self) -> Self {
        Gf2(true)
    }
    fn residue(&self, _m: &Self) -> Self {
        // Gf2 has no nonzero non-units.
        *self
    }
    fn from_int(v: &BigInt) -> Self {
        Gf2(v.is_odd())
    }
    fn to_int(&self) -> BigInt {
        if self.0 {
            <BigInt as One>::one()
        } else {
            <BigInt as Zero>::zero()
        }
    }
    fn sub_mul_assign(&mut self, q: &Self, x: &Self) {
        self.0 ^= q.0 & x.0;
    }
    fn add_mul_assign(&mut self, q: &Self, x: &Self) {
        self.0 ^= q.0 & x.0;
    }
}

/// Which coefficient ring a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Ring {
    Integers,
    Mod2,
}

impl Ring {
    /// Reduce an integer into the canonical representative of this ring.
    pub fn reduce(self, v: &BigInt) -> BigInt {
        match self {
            Ring::Integers => v.clone(),
            Ring::Mod2 => Gf2::from_int(v).to_int(),
        }
    }
}
