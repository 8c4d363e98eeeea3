//! Exact integer polynomials in λ.
//!
//! Coefficients are `i128` with checked arithmetic: an overflow panics with
//! a message instead of wrapping. Degrees here never exceed the vertex
//! count of a desk-scale graph, so the width is never approached in
//! practice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Coeff = i128;

/// Dense coefficients, index `i` holding the coefficient of λ^i. The zero
/// polynomial stores nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Coeff>,
}

/// `P = λ(λ−1)⋯(λ−r) · quotient`, with `r` maximal (−1 if λ ∤ P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallingPrefix {
    pub r: i64,
    pub quotient: Poly,
}

impl FallingPrefix {
    pub fn prefix(&self) -> Poly {
        Poly::falling_factorial((self.r + 1) as usize)
    }

    pub fn expand(&self) -> Poly {
        &self.prefix() * &self.quotient
    }
}

fn overflow() -> ! {
    panic!("polynomial coefficient overflow beyond i128")
}

fn checked_add(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

fn checked_mul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    /// λ − a.
    pub fn linear(a: Coeff) -> Self {
        Self::from_coeffs(vec![-a, 1])
    }

    /// λ^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    /// Low-to-high coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// λ(λ−1)⋯(λ−k+1); the empty product for k = 0.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, j| &acc * &Self::linear(j as Coeff))
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: Coeff) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| checked_mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation; panics on overflow.
    pub fn eval(&self, x: Coeff) -> Coeff {
        self.checked_eval(x).unwrap_or_else(|| overflow())
    }

    pub fn checked_eval(&self, x: Coeff) -> Option<Coeff> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0 as Coeff, |acc, &c| acc.checked_mul(x)?.checked_add(c))
    }

    /// Least λ in `1..=bound` with a positive value, or 0 if there is none.
    pub fn smallest_positive_support(&self, bound: usize) -> usize {
        (1..=bound)
            .find(|&x| self.eval(x as Coeff) > 0)
            .unwrap_or(0)
    }

    /// Exact quotient by (λ − a), or `None` if a is not a root.
    pub fn div_linear(&self, a: Coeff) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // synthetic division from the top
        let d = self.coeffs.len() - 1;
        let mut q = vec![0; d];
        let mut carry: Coeff = 0;
        for i in (0..=d).rev() {
            let v = checked_add(self.coeffs[i], carry);
            if i == 0 {
                return (v == 0).then(|| Self::from_coeffs(q));
            }
            q[i - 1] = v;
            carry = checked_mul(v, a);
        }
        unreachable!()
    }

    /// Maximal falling-factorial prefix λ(λ−1)⋯(λ−r) dividing the
    /// polynomial, together with the quotient.
    pub fn falling_prefix(&self) -> Result<FallingPrefix> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut r: i64 = -1;
        let mut quotient = self.clone();
        while let Some(q) = quotient.div_linear((r + 1) as Coeff) {
            quotient = q;
            r += 1;
        }
        Ok(FallingPrefix { r, quotient })
    }

    /// Positive integer roots in `1..=bound`.
    pub fn positive_integer_roots(&self, bound: usize) -> Vec<usize> {
        (1..=bound)
            .filter(|&x| self.eval(x as Coeff) == 0)
            .collect()
    }

    /// LaTeX rendering, highest degree first: `4\lambda^{3} - 12\lambda^{2} + 8\lambda`.
    pub fn to_latex(&self) -> String {
        self.render("\\lambda", |d| format!("^{{{d}}}"))
    }

    fn render(&self, var: &str, exp: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            if i == 0 || mag != 1 {
                out.push_str(&mag.to_string());
            }
            if i >= 1 {
                out.push_str(var);
            }
            if i >= 2 {
                out.push_str(&exp(i));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("λ", |d| format!("^{d}")))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| checked_add(self.coeff(i), rhs.coeff(i)))
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
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| c.checked_neg().unwrap_or_else(|| overflow()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = checked_add(out[i + j], checked_mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<Coeff>::deserialize(d).map(Poly::from_coeffs)
    }
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1 as Coeff, |acc, i| {
        checked_mul(acc, (n - i) as Coeff) / (i + 1) as Coeff
    })
}
