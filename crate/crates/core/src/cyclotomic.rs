//! Elements of `ℚ(ω)`, `ω = e^{2πi/r}`, stored as coordinates in the power
//! basis `1, ω, …, ω^{φ(r)−1}` of `ℚ[x]/Φ_r(x)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{fmt_rational, Rational};

/// Integer coefficients of the `r`th cyclotomic polynomial, constant term
/// first. Computed as `(x^r − 1) / ∏_{d | r, d < r} Φ_d`.
pub fn cyclotomic_polynomial(r: u32) -> Vec<i64> {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coords: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        let len = cyclotomic_polynomial(order).len() - 1;
        Cyclotomic { order, coords: vec![Rational::zero(); len] }
    }

    pub fn from_rational(order: u32, c: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coords[0] = c;
        z
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    /// `ω^k`.
    pub fn root_power(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Self::reduce(order, raw)
    }

    fn reduce(order: u32, mut raw: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for top in (deg..raw.len()).rev() {
            let c = std::mem::take(&mut raw[top]);
            if c.is_zero() {
                continue;
            }
            // x^top = x^{top−deg}·x^deg and x^deg ≡ −Σ_{j<deg} φ_j x^j.
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    raw[top - deg + j] -= &c * Rational::from_integer(pj.into());
                }
            }
        }
        raw.resize(deg, Rational::zero());
        Cyclotomic { order, coords: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, when it lies in `ℚ`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic numbers of different order");
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coords.len();
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.order, raw)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclotomic { order: self.order, coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Complex conjugate: `ω ↦ ω^{−1}`.
    pub fn conj(&self) -> Self {
        let r = self.order as usize;
        let mut raw = vec![Rational::zero(); r];
        for (i, a) in self.coords.iter().enumerate() {
            raw[(r - i) % r] += a;
        }
        Self::reduce(self.order, raw)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => fmt_rational(c),
                _ => format!("{}*w^{i}", fmt_rational(c)),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
