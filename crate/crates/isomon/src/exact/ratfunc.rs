//! Rational functions as reduced-by-content fractions of sparse polynomials.
//!
//! There is deliberately no multivariate gcd here: equality and zero-testing
//! go through cross-multiplication, which is exact and cheap at the sizes
//! this crate works with. Normalization only strips shared monomial factors
//! and rational content so intermediate expressions stay bounded.

use super::poly::{Poly, VarSet};
use super::rat::Rat;
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone)]
pub struct RatFunc<V: VarSet> {
    num: Poly<V>,
    den: Poly<V>,
}

impl<V: VarSet> RatFunc<V> {
    /// num/den. Panics if den is the zero polynomial.
    pub fn new(num: Poly<V>, den: Poly<V>) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(p: Poly<V>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Poly::int(n))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::from_poly(Poly::rational(n, d))
    }

    pub fn var(v: V) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly<V> {
        &self.num
    }

    pub fn den(&self) -> &Poly<V> {
        &self.den
    }

    /// Strip the shared monomial factor and make the denominator's content
    /// one with positive leading sign.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let gm = {
            let a = self.num.mono_content();
            let b = self.den.mono_content();
            let mut g = a;
            for k in 0..crate::exact::poly::MAX_VARS {
                g.0[k] = g.0[k].min(b.0[k]);
            }
            g
        };
        if gm.total_degree() > 0 {
            self.num = self.num.div_mono(&gm);
            self.den = self.den.div_mono(&gm);
        }
        let mut c = self.den.content();
        if self
            .den
            .leading()
            .map(|(_, lc)| lc.is_negative())
            .unwrap_or(false)
        {
            c = -c;
        }
        if !c.is_one() {
            let inv = c.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    /// Equality by cross-multiplication: a/b = c/d iff ad - cb = 0.
    pub fn eq_cross(&self, other: &Self) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Exact partial derivative by the quotient rule.
    pub fn diff(&self, v: V) -> Self {
        let dn = self.num.diff(v);
        let dd = self.den.diff(v);
        if dd.is_zero() {
            return Self::new(dn, self.den.clone());
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        Self::new(num, den)
    }

    pub fn depends_on(&self, v: V) -> bool {
        self.num.depends_on(v) || self.den.depends_on(v)
    }

    /// Substitute a rational function for one variable (Horner on the
    /// collected powers).
    pub fn subst(&self, v: V, value: &RatFunc<V>) -> Self {
        let sub_poly = |p: &Poly<V>| -> RatFunc<V> {
            let coeffs = p.coeffs_in(v);
            let mut acc = RatFunc::zero();
            for (e, c) in coeffs {
                acc = &acc + &(&RatFunc::from_poly(c) * &value.pow(e as i32));
            }
            acc
        };
        let n = sub_poly(&self.num);
        let d = sub_poly(&self.den);
        &n / &d
    }

    /// Map every variable into a rational function over another variable set.
    pub fn map_vars<W: VarSet>(&self, f: impl Fn(V) -> RatFunc<W>) -> RatFunc<W> {
        let map_poly = |p: &Poly<V>| -> RatFunc<W> {
            let mut acc = RatFunc::<W>::zero();
            for (m, c) in p.terms() {
                let mut term = RatFunc::<W>::constant(c.clone());
                for v in V::ALL {
                    let e = m.0[v.index()];
                    if e > 0 {
                        term = &term * &f(*v).pow(e as i32);
                    }
                }
                acc = &acc + &term;
            }
            acc
        };
        let n = map_poly(&self.num);
        let d = map_poly(&self.den);
        &n / &d
    }

    /// Substitute an exact rational value for one variable. The denominator
    /// must not vanish identically afterwards.
    pub fn eval_var(&self, v: V, value: &Rat) -> Self {
        Self::new(self.num.eval_var(v, value), self.den.eval_var(v, value))
    }

    /// Full exact evaluation; `None` when the denominator vanishes.
    pub fn eval_rat(&self, values: &[Rat]) -> Option<Rat> {
        let d = self.den.eval_rat(values);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rat(values) / d)
    }

    pub fn eval_c64(&self, values: &[Complex64]) -> Complex64 {
        self.num.eval_c64(values) / self.den.eval_c64(values)
    }

    /// Order of vanishing of `self.num` at the simple root locus v = at
    /// (i.e. how many times (v - at) divides the numerator), together with
    /// the reduced polynomial. `at` must be a polynomial in the other
    /// variables.
    fn extract_linear_factor(p: &Poly<V>, v: V, at: &Poly<V>) -> (u32, Poly<V>) {
        let linear = &Poly::var(v) - at;
        let mut ord = 0;
        let mut cur = p.clone();
        while !cur.is_zero() {
            match cur.div_exact(&linear) {
                Some(q) => {
                    cur = q;
                    ord += 1;
                }
                None => break,
            }
        }
        (ord, cur)
    }

    /// Residue at a simple pole v = at, where `at` is a polynomial in the
    /// remaining variables. Returns `None` if the pole is not simple
    /// (including the no-pole case of order <= 0).
    pub fn residue_simple(&self, v: V, at: &Poly<V>) -> Option<RatFunc<V>> {
        let at_rf = RatFunc::from_poly(at.clone());
        let (ord_n, num_red) = Self::extract_linear_factor(&self.num, v, at);
        let (ord_d, den_red) = Self::extract_linear_factor(&self.den, v, at);
        if (ord_d as i64 - ord_n as i64) != 1 {
            return None;
        }
        // Now self = (v-at)^(ord_n) num_red / ((v-at)^(ord_n+1) den_red)
        // with num_red, den_red nonvanishing at the locus.
        let n_at = RatFunc::from_poly(num_red).subst(v, &at_rf);
        let d_at = RatFunc::from_poly(den_red).subst(v, &at_rf);
        if d_at.is_zero() {
            return None;
        }
        Some(&n_at / &d_at)
    }
}

impl<V: VarSet> PartialEq for RatFunc<V> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}

impl<'a, 'b, V: VarSet> Add<&'b RatFunc<V>> for &'a RatFunc<V> {
    type Output = RatFunc<V>;
    fn add(self, rhs: &'b RatFunc<V>) -> RatFunc<V> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den)
    }
}

impl<'a, 'b, V: VarSet> Sub<&'b RatFunc<V>> for &'a RatFunc<V> {
    type Output = RatFunc<V>;
    fn sub(self, rhs: &'b RatFunc<V>) -> RatFunc<V> {
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den)
    }
}

impl<'a, 'b, V: VarSet> Mul<&'b RatFunc<V>> for &'a RatFunc<V> {
    type Output = RatFunc<V>;
    fn mul(self, rhs: &'b RatFunc<V>) -> RatFunc<V> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, 'b, V: VarSet> Div<&'b RatFunc<V>> for &'a RatFunc<V> {
    type Output = RatFunc<V>;
    fn div(self, rhs: &'b RatFunc<V>) -> RatFunc<V> {
        assert!(!rhs.is_zero(), "division by zero rational function");
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! rf_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<V: VarSet> $trait<RatFunc<V>> for RatFunc<V> {
            type Output = RatFunc<V>;
            fn $method(self, rhs: RatFunc<V>) -> RatFunc<V> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, V: VarSet> $trait<&'a RatFunc<V>> for RatFunc<V> {
            type Output = RatFunc<V>;
            fn $method(self, rhs: &'a RatFunc<V>) -> RatFunc<V> {
                (&self).$method(rhs)
            }
        }
        impl<'a, V: VarSet> $trait<RatFunc<V>> for &'a RatFunc<V> {
            type Output = RatFunc<V>;
            fn $method(self, rhs: RatFunc<V>) -> RatFunc<V> {
                self.$method(&rhs)
            }
        }
    };
}

rf_owned_binop!(Add, add);
rf_owned_binop!(Sub, sub);
rf_owned_binop!(Mul, mul);
rf_owned_binop!(Div, div);

impl<V: VarSet> Neg for &RatFunc<V> {
    type Output = RatFunc<V>;
    fn neg(self) -> RatFunc<V> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<V: VarSet> Neg for RatFunc<V> {
    type Output = RatFunc<V>;
    fn neg(self) -> RatFunc<V> {
        -&self
    }
}

impl<V: VarSet> fmt::Display for RatFunc<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_coeff().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<V: VarSet> fmt::Debug for RatFunc<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
