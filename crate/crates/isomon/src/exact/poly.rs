//! Sparse multivariate polynomials over a fixed, closed variable set.

use super::rat::Rat;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

/// Widest supported variable set. Exponent vectors are fixed-width so
/// monomials hash and compare cheaply; unused slots stay zero.
pub const MAX_VARS: usize = 8;

/// A closed, finite set of symbols. Implementations are plain field-less
/// enums; no dynamic variables exist anywhere in the crate.
pub trait VarSet: Copy + Clone + PartialEq + Eq + fmt::Debug + 'static {
    const COUNT: usize;
    const ALL: &'static [Self];
    fn index(self) -> usize;
    fn symbol(self) -> &'static str;
}

/// Exponent vector of a monomial (lex-ordered via the derived array order).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub fn unit() -> Self {
        Mono([0; MAX_VARS])
    }

    pub fn var(i: usize, e: u16) -> Self {
        let mut m = Self::unit();
        m.0[i] = e;
        m
    }

    pub fn checked_mul(&self, other: &Mono) -> Mono {
        let mut out = [0u16; MAX_VARS];
        for k in 0..MAX_VARS {
            out[k] = self.0[k]
                .checked_add(other.0[k])
                .expect("monomial exponent overflow");
        }
        Mono(out)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..MAX_VARS).all(|k| self.0[k] <= other.0[k])
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut out = [0u16; MAX_VARS];
        for k in 0..MAX_VARS {
            out[k] = self.0[k] - other.0[k];
        }
        Mono(out)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<V: VarSet> {
    terms: BTreeMap<Mono, Rat>,
    _vars: PhantomData<V>,
}

impl<V: VarSet> Poly<V> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
            _vars: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::unit(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_int(n))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::constant(Rat::new(n, d))
    }

    pub fn var(v: V) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: V, e: u16) -> Self {
        let mut p = Self::zero();
        p.terms.insert(Mono::var(v.index(), e), Rat::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Rat)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::unit()))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_coeff(&self) -> Rat {
        self.coeff(&Mono::unit())
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: V) -> u16 {
        let i = v.index();
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, v: V) -> bool {
        self.degree_in(v) > 0
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (*m, a * c))
            .collect::<BTreeMap<_, _>>();
        Poly {
            terms,
            _vars: PhantomData,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact partial derivative.
    pub fn diff(&self, v: V) -> Self {
        let i = v.index();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[i] = e - 1;
            out.add_term(dm, c * &Rat::from_int(e as i64));
        }
        out
    }

    /// Rational content: gcd of all coefficients (zero for the zero poly).
    pub fn content(&self) -> Rat {
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise-minimal exponent vector over all terms.
    pub fn mono_content(&self) -> Mono {
        let mut min = match self.terms.keys().next() {
            Some(m) => *m,
            None => return Mono::unit(),
        };
        for m in self.terms.keys() {
            for k in 0..MAX_VARS {
                min.0[k] = min.0[k].min(m.0[k]);
            }
        }
        min
    }

    pub fn div_mono(&self, m: &Mono) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(mm, c)| {
                debug_assert!(m.divides(mm));
                (mm.div(m), c.clone())
            })
            .collect::<BTreeMap<_, _>>();
        Poly {
            terms,
            _vars: PhantomData,
        }
    }

    /// Exact multivariate division; `None` if the division is not exact.
    pub fn div_exact(&self, d: &Poly<V>) -> Option<Poly<V>> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            if !dm.divides(&rm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = &rc / &dc;
            let mut t = Self::zero();
            t.terms.insert(qm, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Collect as a univariate polynomial in `v`: (power, coefficient) pairs
    /// with nonzero coefficients, ascending in power.
    pub fn coeffs_in(&self, v: V) -> Vec<(u16, Poly<V>)> {
        let i = v.index();
        let mut buckets: BTreeMap<u16, Poly<V>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut rest = *m;
            rest.0[i] = 0;
            buckets.entry(e).or_insert_with(Self::zero).add_term(rest, c.clone());
        }
        buckets.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Substitute an exact rational value for one variable.
    pub fn eval_var(&self, v: V, value: &Rat) -> Self {
        let i = v.index();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut rest = *m;
            rest.0[i] = 0;
            out.add_term(rest, c * &value.pow(e as u32));
        }
        out
    }

    /// Full exact evaluation; `values` is indexed by variable index.
    pub fn eval_rat(&self, values: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in V::ALL {
                let e = m.0[v.index()];
                if e > 0 {
                    term = term * values[v.index()].pow(e as u32);
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Numeric evaluation; `values` is indexed by variable index.
    pub fn eval_c64(&self, values: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64(), 0.0);
            for v in V::ALL {
                let e = m.0[v.index()];
                for _ in 0..e {
                    term *= values[v.index()];
                }
            }
            acc += term;
        }
        acc
    }
}

impl<'a, 'b, V: VarSet> Add<&'b Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &'b Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, 'b, V: VarSet> Sub<&'b Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &'b Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a, 'b, V: VarSet> Mul<&'b Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &'b Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.checked_mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<V: VarSet> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, -c))
            .collect::<BTreeMap<_, _>>();
        Poly {
            terms,
            _vars: PhantomData,
        }
    }
}

macro_rules! poly_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<V: VarSet> $trait<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_owned_binop!(Add, add);
poly_owned_binop!(Sub, sub);
poly_owned_binop!(Mul, mul);

impl<V: VarSet> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<V: VarSet> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_unit_mono = m.total_degree() == 0;
            if !mag.is_one() || is_unit_mono {
                write!(f, "{mag}")?;
                if !is_unit_mono {
                    write!(f, "*")?;
                }
            }
            let mut sep = false;
            for v in V::ALL {
                let e = m.0[v.index()];
                if e == 0 {
                    continue;
                }
                if sep {
                    write!(f, "*")?;
                }
                sep = true;
                write!(f, "{}", v.symbol())?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<V: VarSet> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
