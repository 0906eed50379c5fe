//! Minimal commutative-ring abstraction shared by the determinant code.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub trait CommRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;

    fn ring_sub(&self, other: &Self) -> Self {
        self.ring_add(&other.ring_neg())
    }

    fn ring_add_assign(&mut self, other: &Self) {
        *self = self.ring_add(other);
    }
}

impl CommRing for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }

    fn ring_one() -> Self {
        One::one()
    }

    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }

    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }

    fn ring_neg(&self) -> Self {
        -self
    }

    fn ring_add_assign(&mut self, other: &Self) {
        *self += other;
    }
}
