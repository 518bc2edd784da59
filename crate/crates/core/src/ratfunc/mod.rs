//! Exact rational functions in one variable `s` whose denominators split
//! into rational linear factors.
//!
//! A [`RationalFunction`] is `N(s) / ∏ f_k(s)^{e_k}` with each `f_k = a s + b`
//! primitive and `a > 0`. All rational content lives in `N`, and no factor
//! divides `N`, so equal functions have equal representations.

mod parse;
mod poly;

pub use parse::parse_expression;
pub use poly::Poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Q;

/// `a·s + b` with `a > 0` and `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    a: BigInt,
    b: BigInt,
}

impl LinearFactor {
    /// Normalizes `a s + b`, returning the factor and the scalar `c` with
    /// `a s + b = c · factor`.
    pub fn normalize(a: &BigInt, b: &BigInt) -> Result<(LinearFactor, BigInt)> {
        if a.is_zero() {
            return Err(Error::InvalidInput("linear factor with zero slope".into()));
        }
        let mut g = a.gcd(b);
        if a.is_negative() {
            g = -g;
        }
        Ok((LinearFactor { a: a / &g, b: b / &g }, g))
    }

    /// `a s + b` for already primitive data, e.g. `m s + 1`.
    pub fn new(a: i64, b: i64) -> Result<LinearFactor> {
        let (f, c) = Self::normalize(&a.into(), &b.into())?;
        if !c.is_one() {
            return Err(Error::InvalidInput(format!("{a}s + {b} is not primitive with positive slope")));
        }
        Ok(f)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The root `-b/a`.
    pub fn root(&self) -> Q {
        Q::new(-self.b.clone(), self.a.clone())
    }

    pub fn eval(&self, s: &Q) -> Q {
        s * &self.a + &self.b
    }

    pub fn poly(&self) -> Poly {
        Poly::linear(Q::from_integer(self.a.clone()), Q::from_integer(self.b.clone()))
    }

    /// The primitive factor vanishing at `r`.
    pub fn from_root(r: &Q) -> LinearFactor {
        LinearFactor {
            a: r.denom().clone(),
            b: -r.numer().clone(),
        }
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_one() {
            f.write_str("s")?;
        } else {
            write!(f, "{}s", self.a)?;
        }
        if self.b.is_positive() {
            write!(f, " + {}", self.b)
        } else if self.b.is_negative() {
            write!(f, " - {}", -&self.b)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Poly,
    factors: BTreeMap<LinearFactor, u32>,
}

/// Principal parts and polynomial part of a [`RationalFunction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: Poly,
    /// `(factor, k, c)` for the term `c / factor^k`; `c ≠ 0`.
    pub terms: Vec<(LinearFactor, u32, Q)>,
}

impl PartialFractions {
    pub fn resum(&self) -> RationalFunction {
        let mut out = RationalFunction::from_poly(self.polynomial.clone());
        for (f, k, c) in &self.terms {
            let mut t = RationalFunction::constant(c.clone());
            t.factors.insert(f.clone(), *k);
            out = &out + &t;
        }
        out
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Q::from_integer(n.into()))
    }

    pub fn from_poly(numerator: Poly) -> Self {
        RationalFunction {
            numerator,
            factors: BTreeMap::new(),
        }
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::from_poly(Poly::from_i64(&[0, 1]))
    }

    /// `1/(a s + b)` taken literally; content of the factor moves to the numerator.
    pub fn inv_linear(a: i64, b: i64) -> Result<Self> {
        let (f, c) = LinearFactor::normalize(&a.into(), &b.into())?;
        let mut factors = BTreeMap::new();
        factors.insert(f, 1);
        Ok(RationalFunction {
            numerator: Poly::constant(Q::new(BigInt::one(), c)),
            factors,
        })
    }

    /// Build `numerator / ∏ f^e` and bring it to canonical form.
    pub fn from_parts(numerator: Poly, factors: impl IntoIterator<Item = (LinearFactor, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (f, e) in factors {
            if e > 0 {
                *map.entry(f).or_insert(0) += e;
            }
        }
        let mut r = RationalFunction { numerator, factors: map };
        r.canonicalize();
        r
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.factors.clear();
            return;
        }
        let keys: Vec<LinearFactor> = self.factors.keys().cloned().collect();
        for f in keys {
            let root = f.root();
            let a = Q::from_integer(f.a.clone());
            loop {
                let e = self.factors[&f];
                if e == 0 {
                    break;
                }
                let (quot, rem) = self.numerator.div_root(&root);
                if !rem.is_zero() {
                    break;
                }
                // N = (s - r) quot = (a s + b) (quot / a)
                self.numerator = quot.scale(&a.recip());
                self.factors.insert(f.clone(), e - 1);
            }
            if self.factors[&f] == 0 {
                self.factors.remove(&f);
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn factors(&self) -> &BTreeMap<LinearFactor, u32> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Expanded denominator `∏ f^e`.
    pub fn denominator(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(), |acc, (f, &e)| &acc * &f.poly().pow(e))
    }

    pub fn denominator_degree(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Numerator degree below denominator degree. Zero counts as proper.
    pub fn is_proper(&self) -> bool {
        match self.numerator.degree() {
            None => true,
            Some(d) => (d as u32) < self.denominator_degree(),
        }
    }

    pub fn scale(&self, c: &Q) -> RationalFunction {
        RationalFunction::from_parts(self.numerator.scale(c), self.factors.clone())
    }

    pub fn poles(&self) -> Vec<(Q, u32)> {
        let mut v: Vec<_> = self.factors.iter().map(|(f, &e)| (f.root(), e)).collect();
        v.sort_by(|x, y| x.0.cmp(&y.0));
        v
    }

    pub fn pole_order(&self, s0: &Q) -> u32 {
        self.factors.get(&LinearFactor::from_root(s0)).copied().unwrap_or(0)
    }

    pub fn eval(&self, s0: &Q) -> Result<Q> {
        let mut den = Q::one();
        for (f, &e) in &self.factors {
            let v = f.eval(s0);
            if v.is_zero() {
                return Err(Error::Pole(s0.clone()));
            }
            den *= num_traits::pow(v, e as usize);
        }
        Ok(self.numerator.eval(s0) / den)
    }

    /// `((a s + b) · R)(-b/a)` with `(a, b)` taken literally.
    pub fn pole_coefficient(&self, a: &BigInt, b: &BigInt) -> Result<Q> {
        let (f, c) = LinearFactor::normalize(a, b)?;
        let root = f.root();
        match self.factors.get(&f).copied().unwrap_or(0) {
            0 => Ok(Q::zero()),
            1 => {
                let mut rest = self.clone();
                rest.factors.remove(&f);
                Ok(rest.eval(&root)? * Q::from_integer(c))
            }
            order => Err(Error::HigherOrderPole { at: root, order }),
        }
    }

    pub fn pole_coefficient_i64(&self, a: i64, b: i64) -> Result<Q> {
        self.pole_coefficient(&a.into(), &b.into())
    }

    pub fn inverse(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (roots, rest) = self.numerator.rational_roots();
        let Some(lead) = rest.as_constant() else {
            return Err(Error::NonLinearDenominator);
        };
        // N = lead · ∏ (s - r)^k = lead · ∏ (f_r / a_r)^k
        let mut content = lead;
        let mut new_factors = Vec::new();
        for (r, k) in roots {
            let f = LinearFactor::from_root(&r);
            content /= num_traits::pow(Q::from_integer(f.a.clone()), k as usize);
            new_factors.push((f, k));
        }
        let num = self.denominator().scale(&content.recip());
        Ok(RationalFunction::from_parts(num, new_factors))
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, k: i32) -> Result<RationalFunction> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = RationalFunction::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Polynomial part plus `Σ c / f^k`.
    pub fn partial_fractions(&self) -> PartialFractions {
        let mut rest = self.clone();
        let mut terms = Vec::new();
        let fs: Vec<LinearFactor> = self.factors.keys().cloned().collect();
        for f in fs {
            while let Some(&k) = rest.factors.get(&f) {
                let mut cof = rest.clone();
                cof.factors.remove(&f);
                let c = cof.eval(&f.root()).expect("other factors do not vanish here");
                let mut t = RationalFunction::constant(c.clone());
                t.factors.insert(f.clone(), k);
                rest = &rest - &t;
                terms.push((f.clone(), k, c));
            }
        }
        debug_assert!(rest.factors.is_empty());
        terms.sort_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)));
        PartialFractions {
            polynomial: rest.numerator,
            terms,
        }
    }

    /// Structured form: numerator coefficients ascending and `(a, b, e)` triples.
    pub fn factor_triples(&self) -> Vec<(String, String, u32)> {
        self.factors
            .iter()
            .map(|(f, &e)| (f.a.to_string(), f.b.to_string(), e))
            .collect()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut common = self.factors.clone();
        for (f, &e) in &rhs.factors {
            let slot = common.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |r: &RationalFunction| {
            common.iter().fold(r.numerator.clone(), |acc, (f, &e)| {
                let have = r.factors.get(f).copied().unwrap_or(0);
                &acc * &f.poly().pow(e - have)
            })
        };
        let num = &lift(self) + &lift(rhs);
        RationalFunction::from_parts(num, common)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            factors: self.factors.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let mut factors = self.factors.clone();
        for (f, &e) in &rhs.factors {
            *factors.entry(f.clone()).or_insert(0) += e;
        }
        RationalFunction::from_parts(&self.numerator * &rhs.numerator, factors)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

/// `N/(f_1·f_2^2)`; the numerator is parenthesized unless it is a single
/// integer-coefficient term.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        if self.factors.is_empty() {
            return f.write_str(&num);
        }
        let simple = self.numerator.term_count() == 1 && !num.contains('/') && !num.contains('·');
        if simple {
            f.write_str(&num)?;
        } else {
            write!(f, "({num})")?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(lf, &e)| if e == 1 { format!("({lf})") } else { format!("({lf})^{e}") })
            .collect();
        if parts.len() == 1 {
            write!(f, "/{}", parts[0])
        } else {
            write!(f, "/({})", parts.join("·"))
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RationalFunction", 3)?;
        st.serialize_field("text", &self.to_string())?;
        let coeffs: Vec<String> = self.numerator.coeffs().iter().map(|c| c.to_string()).collect();
        st.serialize_field("numerator", &coeffs)?;
        st.serialize_field("factors", &self.factor_triples())?;
        st.end()
    }
}
