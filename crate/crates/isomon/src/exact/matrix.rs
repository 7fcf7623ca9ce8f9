//! 2x2 matrices over any scalar with ring operations (symbolic rational
//! functions or complex floats).

use super::poly::VarSet;
use super::ratfunc::RatFunc;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Minimal ring interface needed by the 2x2 matrix type.
pub trait Scalar:
    Clone
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}

impl<V: VarSet> Scalar for RatFunc<V> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix2<T> {
    pub e: [[T; 2]; 2],
}

impl<T: Scalar> Matrix2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Matrix2 { e: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = |i: usize, j: usize| -> T {
            (self.e[i][0].clone() * &other.e[0][j]) + &(self.e[i][1].clone() * &other.e[1][j])
        };
        Self::new(p(0, 0), p(0, 1), p(1, 0), p(1, 1))
    }

    /// ab - ba.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> T {
        self.e[0][0].clone() + &self.e[1][1]
    }

    pub fn det(&self) -> T {
        (self.e[0][0].clone() * &self.e[1][1]) - &(self.e[0][1].clone() * &self.e[1][0])
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix2<U> {
        Matrix2 {
            e: [
                [f(&self.e[0][0]), f(&self.e[0][1])],
                [f(&self.e[1][0]), f(&self.e[1][1])],
            ],
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T; 2]) -> [T; 2] {
        [
            (self.e[0][0].clone() * &v[0]) + &(self.e[0][1].clone() * &v[1]),
            (self.e[1][0].clone() * &v[0]) + &(self.e[1][1].clone() * &v[1]),
        ]
    }

    fn zip(&self, other: &Self, mut f: impl FnMut(&T, &T) -> T) -> Self {
        Matrix2 {
            e: [
                [f(&self.e[0][0], &other.e[0][0]), f(&self.e[0][1], &other.e[0][1])],
                [f(&self.e[1][0], &other.e[1][0]), f(&self.e[1][1], &other.e[1][1])],
            ],
        }
    }
}

impl Matrix2<Complex64> {
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        Some(Self::new(
            self.e[1][1] / det,
            -self.e[0][1] / det,
            -self.e[1][0] / det,
            self.e[0][0] / det,
        ))
    }

    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|x| x.norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise absolute difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }
}

impl<V: VarSet> Matrix2<RatFunc<V>> {
    /// Entrywise cross-multiplication equality.
    pub fn eq_cross(&self, other: &Self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.e[i][j].eq_cross(&other.e[i][j])))
    }

    pub fn eval_c64(&self, values: &[Complex64]) -> Matrix2<Complex64> {
        self.map(|x| x.eval_c64(values))
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}
