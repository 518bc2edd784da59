//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Q;

/// Coefficients ascending, with no trailing zeros. The zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a·s + b`.
    pub fn linear(a: Q, b: Q) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Division by `s - r`: quotient and remainder `p(r)`.
    pub fn div_root(&self, r: &Q) -> (Poly, Q) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), Q::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Q::zero(); n - 1];
        let mut carry = Q::zero();
        for k in (0..n).rev() {
            let c = &self.coeffs[k] + &carry * r;
            if k == 0 {
                return (Poly::from_coeffs(q), c);
            }
            q[k - 1] = c.clone();
            carry = c;
        }
        unreachable!()
    }

    /// `(content, primitive)` with `self = content · primitive`, the
    /// primitive part having coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> (Q, Vec<BigInt>) {
        if self.is_zero() {
            return (Q::zero(), Vec::new());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Q::new(g, lcm), prim)
    }

    /// Rational roots with multiplicity, plus the cofactor left once they
    /// are divided out.
    pub fn rational_roots(&self) -> (Vec<(Q, u32)>, Poly) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return (roots, rest);
        }
        let mut zero_mult = 0;
        while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
            rest.coeffs.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Q::zero(), zero_mult));
        }
        if rest.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }
        let (_, prim) = rest.primitive_part();
        let lead = prim.last().unwrap().abs();
        let tail = prim[0].abs();
        let dens = divisors(&lead);
        for p in divisors(&tail) {
            for qd in &dens {
                for sign in [1, -1] {
                    if !p.gcd(qd).is_one() {
                        continue;
                    }
                    let r = Q::new(&p * sign, qd.clone());
                    let mut mult = 0;
                    loop {
                        if rest.degree().unwrap_or(0) == 0 {
                            break;
                        }
                        let (quot, rem) = rest.div_root(&r);
                        if !rem.is_zero() {
                            break;
                        }
                        rest = quot;
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((r, mult));
                    }
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }
}

/// Positive divisors of `n` by trial division. `divisors(0)` is empty.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    if n.is_zero() {
        return small;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Q::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

fn fmt_coeff_term(c: &Q, k: usize, out: &mut String) {
    let abs = c.abs();
    let var = match k {
        0 => String::new(),
        1 => "s".to_string(),
        _ => format!("s^{k}"),
    };
    if k == 0 {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(&var);
    } else if abs.is_integer() {
        out.push_str(&format!("{abs}{var}"));
    } else {
        out.push_str(&format!("{abs}·{var}"));
    }
}

/// Descending powers, e.g. `-s + 2` or `3/2·s^2 - 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            fmt_coeff_term(c, k, &mut out);
        }
        f.write_str(&out)
    }
}

impl Poly {
    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}
