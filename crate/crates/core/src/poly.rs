//! Polynomials in `q` with rational coefficients.
//!
//! Canonical form: no trailing zero coefficients, so the zero polynomial is
//! the empty coefficient vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly {
    coeffs: Vec<Rational>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·q^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CoeffPoly { coeffs }
    }

    /// Integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Coefficients, index = power of `q`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value when the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CoeffPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    /// `self += a·b` without building the intermediate product.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j] += x * y;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Substitutes `q → q^k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        if k == 1 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        CoeffPoly { coeffs }
    }

    /// Exact quotient `self / divisor`; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or_else(|| Error::pre("division by the zero polynomial"))?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Palindromic of the given degree: `c_k = c_{degree−k}` for all k, and
    /// nothing above `degree`.
    pub fn is_palindromic(&self, degree: usize) -> bool {
        if self.coeffs.len() > degree + 1 {
            return false;
        }
        (0..=degree).all(|k| self.coeff(k) == self.coeff(degree - k))
    }

    /// Least common denominator of the coefficients and the integer
    /// numerator polynomial, so that `self = numer / den`.
    pub fn over_common_denominator(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer = self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        (numer, den)
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Renders the coefficient for series output: `q+1`, `1/2`, `q/2`,
    /// `(q^2+8q+1)/48`.
    pub fn fmt_fraction(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (numer, den) = self.over_common_denominator();
        let top = fmt_int_poly(&numer);
        if den.is_one() {
            return top;
        }
        let terms = numer.iter().filter(|c| !c.is_zero()).count();
        if terms == 1 {
            format!("{top}/{den}")
        } else {
            format!("({top})/{den}")
        }
    }
}

fn fmt_int_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if k == 0 || !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        match k {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{k}")),
        }
    }
    out
}

impl fmt::Display for CoeffPoly {
    /// Descending powers, e.g. `q^2+2q+1` or `1/2q-3/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if k == 0 || !abs.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffPoly({self})")
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: CoeffPoly) -> CoeffPoly {
        &self + &rhs
    }
}

impl Sub for CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: CoeffPoly) -> CoeffPoly {
        &self - &rhs
    }
}

impl Mul for CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: CoeffPoly) -> CoeffPoly {
        &self * &rhs
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}
