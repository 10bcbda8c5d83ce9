//! The truncated graded series ring `𝔸(r)[q]`.
//!
//! A [`Series`] is a finite sum of monomials in the generators `p_i(ζ)`,
//! `ζ = ω^k`, truncated at total degree `N` (with `deg p_i(ζ) = i`). Terms
//! are kept grade by grade so that truncated products only visit pairs of
//! grades whose sum survives. Coefficients are generic: [`WreathSeries`]
//! uses `ℚ[q]` and [`CycloSeries`] uses `ℚ(ω)` for irreducible characters.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use smallvec::SmallVec;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::poly::CoeffPoly;
use crate::rational::{int, Rational};

/// The generator `p_index(ω^zeta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub index: u32,
    pub zeta: u32,
}

impl Generator {
    pub fn new(index: u32, zeta: u32) -> Self {
        assert!(index >= 1, "generator index must be positive");
        Generator { index, zeta }
    }
}

/// A product of generators with positive exponents, kept sorted by
/// generator (index, then zeta exponent).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[(Generator, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn gen(g: Generator) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: Generator, e: u32) -> Self {
        let mut v = SmallVec::new();
        if e > 0 {
            v.push((g, e));
        }
        Monomial(v)
    }

    /// Builds the canonical monomial from arbitrary (generator, exponent)
    /// pairs, merging repeats and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut v: SmallVec<[(Generator, u32); 4]> = factors.into_iter().filter(|f| f.1 > 0).collect();
        v.sort_by_key(|f| f.0);
        let mut out: SmallVec<[(Generator, u32); 4]> = SmallVec::with_capacity(v.len());
        for (g, e) in v {
            match out.last_mut() {
                Some((h, acc)) if *h == g => *acc += e,
                _ => out.push((g, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|(g, e)| (g.index * e) as usize).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0.iter().find(|f| f.0 == g).map_or(0, |f| f.1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits off one factor of the largest generator: `self = rest · g`.
    pub fn split_last(&self) -> Option<(Monomial, Generator)> {
        let (g, e) = *self.0.last()?;
        let mut rest = self.clone();
        if e == 1 {
            rest.0.pop();
        } else {
            rest.0.last_mut().unwrap().1 = e - 1;
        }
        Some((rest, g))
    }

    /// Renders with `p_i` names for `r = 1`, `x_i`/`y_i` for `r = 2` and
    /// `p_i(k)` (meaning `p_i(ω^k)`) otherwise.
    pub fn render(&self, r: u32) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| {
                let name = match r {
                    1 => format!("p_{}", g.index),
                    2 if g.zeta == 0 => format!("x_{}", g.index),
                    2 => format!("y_{}", g.index),
                    _ => format!("p_{}({})", g.index, g.zeta),
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0.iter().map(|f| f.0.zeta + 1).max().unwrap_or(1).max(3);
        write!(f, "{}", self.render(r))
    }
}

/// Coefficient rings usable in a [`Series`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    /// Zero of the coefficient ring attached to `𝔸(r)`.
    fn zero_for_rank(r: u32) -> Self;
    fn one_for_rank(r: u32) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.add_assign_ref(&a.mul_ref(b));
    }
}

impl Coefficient for CoeffPoly {
    fn zero_for_rank(_: u32) -> Self {
        CoeffPoly::zero()
    }
    fn one_for_rank(_: u32) -> Self {
        CoeffPoly::one()
    }
    fn is_zero(&self) -> bool {
        CoeffPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        CoeffPoly::add_assign_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        CoeffPoly::scale(self, c)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        CoeffPoly::add_mul_assign(self, a, b)
    }
}

impl Coefficient for Cyclotomic {
    fn zero_for_rank(r: u32) -> Self {
        Cyclotomic::zero(r)
    }
    fn one_for_rank(r: u32) -> Self {
        Cyclotomic::one(r)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        Cyclotomic::add_assign_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Cyclotomic::mul_ref(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        Cyclotomic::scale(self, c)
    }
}

pub(crate) type Grade<C> = BTreeMap<Monomial, C>;

/// A series truncated at total degree `truncation`. Two series are equal
/// iff `r`, the truncation and all stored terms agree.
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    r: u32,
    grades: Vec<Grade<C>>,
}

/// Series with coefficients in `ℚ[q]`: graded characteristics.
pub type WreathSeries = Series<CoeffPoly>;

/// Series with coefficients in `ℚ(ω)`: characteristics of irreducibles.
pub type CycloSeries = Series<Cyclotomic>;

fn add_into<C: Coefficient>(grade: &mut Grade<C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match grade.entry(m) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign_ref(&c);
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// `acc += a · b` for two homogeneous components.
pub(crate) fn mul_grades_into<C: Coefficient>(acc: &mut Grade<C>, a: &Grade<C>, b: &Grade<C>) {
    for (m1, c1) in a {
        for (m2, c2) in b {
            match acc.entry(m1.mul(m2)) {
                Entry::Occupied(mut e) => e.get_mut().add_mul_assign(c1, c2),
                Entry::Vacant(e) => {
                    e.insert(c1.mul_ref(c2));
                }
            }
        }
    }
}

fn prune<C: Coefficient>(grade: &mut Grade<C>) {
    grade.retain(|_, c| !c.is_zero());
}

impl<C: Coefficient> Series<C> {
    pub fn zero(r: u32, truncation: usize) -> Self {
        assert!(r >= 1, "r must be positive");
        Series { r, grades: vec![Grade::new(); truncation + 1] }
    }

    /// The constant series `c`.
    pub fn constant(r: u32, truncation: usize, c: C) -> Self {
        let mut s = Self::zero(r, truncation);
        add_into(&mut s.grades[0], Monomial::one(), c);
        s
    }

    /// Collects terms, summing repeated monomials and discarding terms above
    /// the truncation. Rejects generators with `zeta >= r`.
    pub fn from_terms(r: u32, truncation: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut s = Self::zero(r, truncation);
        for (m, c) in terms {
            if let Some((g, _)) = m.factors().iter().find(|(g, _)| g.zeta >= r) {
                return Err(Error::pre(format!(
                    "generator p_{}({}) has zeta exponent outside [0, {r})",
                    g.index, g.zeta
                )));
            }
            let d = m.degree();
            if d <= truncation {
                add_into(&mut s.grades[d], m, c);
            }
        }
        Ok(s)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn truncation(&self) -> usize {
        self.grades.len() - 1
    }

    /// Terms of total degree `n` (empty above the truncation).
    pub fn grade(&self, n: usize) -> impl Iterator<Item = (&Monomial, &C)> {
        self.grades.get(n).into_iter().flatten()
    }

    /// All terms in canonical order: by degree, then by monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.grades.iter().flat_map(|g| g.iter())
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.grades.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, m: &Monomial) -> Option<&C> {
        self.grades.get(m.degree()).and_then(|g| g.get(m))
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        let d = m.degree();
        if d <= self.truncation() {
            add_into(&mut self.grades[d], m, c);
        }
    }

    /// Lowers the truncation (a larger value is clamped to the current one).
    pub fn truncated(&self, truncation: usize) -> Self {
        let n = truncation.min(self.truncation());
        Series { r: self.r, grades: self.grades[..=n].to_vec() }
    }

    /// Only the degree-`n` component, keeping the truncation.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut s = Self::zero(self.r, self.truncation());
        if n <= self.truncation() {
            s.grades[n] = self.grades[n].clone();
        }
        s
    }

    /// Drops all components of degree `< n`.
    pub fn drop_below(&self, n: usize) -> Self {
        let mut s = self.clone();
        for g in s.grades.iter_mut().take(n) {
            g.clear();
        }
        s
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.r, other.r))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let n = self.truncation().min(other.truncation());
        let mut out = self.truncated(n);
        for (d, g) in other.grades.iter().enumerate().take(n + 1) {
            for (m, c) in g {
                add_into(&mut out.grades[d], m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.r, self.truncation());
        }
        self.map_coeffs(|a| a.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.r, self.truncation());
        for (d, g) in self.grades.iter().enumerate() {
            for (m, c) in g {
                add_into(&mut out.grades[d], m.clone(), f(c));
            }
        }
        out
    }

    /// Truncated product; the result is truncated at the smaller of the two
    /// truncations.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let n = self.truncation().min(other.truncation());
        let mut out = Self::zero(self.r, n);
        for a in 0..=n {
            if self.grades[a].is_empty() {
                continue;
            }
            for b in 0..=(n - a) {
                if other.grades[b].is_empty() {
                    continue;
                }
                let (lhs, rhs) = (&self.grades[a], &other.grades[b]);
                mul_grades_into(&mut out.grades[a + b], lhs, rhs);
            }
        }
        for g in out.grades.iter_mut() {
            prune(g);
        }
        Ok(out)
    }

    pub fn one(r: u32, truncation: usize) -> Self {
        Self::constant(r, truncation, C::one_for_rank(r))
    }
}

impl WreathSeries {
    /// The series consisting of the single generator `g`.
    pub fn generator(r: u32, truncation: usize, g: Generator) -> Self {
        Self::from_terms(r, truncation, [(Monomial::gen(g), CoeffPoly::one())]).expect("generator within range")
    }

    /// `p_1` in `𝔸(1)[q]`, the plethystic identity.
    pub fn p1(truncation: usize) -> Self {
        Self::generator(1, truncation, Generator::new(1, 0))
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff_of(&self, m: &Monomial) -> CoeffPoly {
        self.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> CoeffPoly {
        self.coeff_of(&Monomial::one())
    }

    pub fn scale_poly(&self, p: &CoeffPoly) -> Self {
        self.map_coeffs(|c| c * p)
    }

    /// Divides every coefficient exactly by `p`.
    pub fn div_exact_poly(&self, p: &CoeffPoly) -> Result<Self> {
        let mut out = Self::zero(self.r, self.truncation());
        for (d, g) in self.grades.iter().enumerate() {
            for (m, c) in g {
                out.grades[d].insert(m.clone(), c.div_exact(p)?);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse, degree by degree. The constant term must be a
    /// nonzero rational constant.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.constant_term().as_constant().filter(|c| !c.is_zero()).ok_or(Error::NotInvertible)?;
        let inv0 = c0.recip();
        let n = self.truncation();
        let mut out = Self::zero(self.r, n);
        out.grades[0].insert(Monomial::one(), CoeffPoly::constant(inv0.clone()));
        for d in 1..=n {
            let mut acc = Grade::new();
            for k in 1..=d {
                mul_grades_into(&mut acc, &self.grades[k], &out.grades[d - k]);
            }
            for (m, c) in acc {
                add_into(&mut out.grades[d], m, c.scale(&-inv0.clone()));
            }
        }
        Ok(out)
    }

    /// Formal exponential; requires zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.grades[0].is_empty() {
            return Err(Error::pre("exp requires a zero constant term"));
        }
        let n = self.truncation();
        let mut out = Self::one(self.r, n);
        // n·E_n = Σ_{k=1}^{n} k·f_k·E_{n−k}
        for d in 1..=n {
            let mut acc = Grade::new();
            for k in 1..=d {
                let weighted: Grade<CoeffPoly> =
                    self.grades[k].iter().map(|(m, c)| (m.clone(), c.scale(&int(k as i64)))).collect();
                mul_grades_into(&mut acc, &weighted, &out.grades[d - k]);
            }
            let inv = Rational::new(1.into(), (d as i64).into());
            for (m, c) in acc {
                add_into(&mut out.grades[d], m, c.scale(&inv));
            }
        }
        Ok(out)
    }

    /// Formal logarithm; requires constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() || self.grades[0].len() != 1 {
            return Err(Error::pre("log requires constant term 1"));
        }
        let n = self.truncation();
        let mut out = Self::zero(self.r, n);
        // n·L_n = n·f_n − Σ_{k=1}^{n−1} k·L_k·f_{n−k}
        for d in 1..=n {
            let mut acc = Grade::new();
            for k in 1..d {
                let weighted: Grade<CoeffPoly> =
                    out.grades[k].iter().map(|(m, c)| (m.clone(), c.scale(&int(k as i64)))).collect();
                mul_grades_into(&mut acc, &weighted, &self.grades[d - k]);
            }
            let inv = -Rational::new(1.into(), (d as i64).into());
            let mut grade = self.grades[d].clone();
            for (m, c) in acc {
                add_into(&mut grade, m, c.scale(&inv));
            }
            out.grades[d] = grade;
        }
        Ok(out)
    }

    /// `f^e = exp(e · log f)` for an exponent `e ∈ ℚ[q]`; requires constant
    /// term 1.
    pub fn pow_qpoly(&self, exponent: &CoeffPoly) -> Result<Self> {
        self.log()?.scale_poly(exponent).exp()
    }

    /// The specialization `p_1(1) → x`, every other generator `→ 0`.
    pub fn natural_spec(&self) -> NaturalSeries {
        let x = Generator::new(1, 0);
        let coeffs = (0..=self.truncation()).map(|d| self.coeff_of(&Monomial::power(x, d as u32))).collect();
        NaturalSeries::from_coeffs(self.truncation(), coeffs)
    }

    /// One line, terms in canonical order: `1 + (q-1)/2*x_1 + ...`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms() {
            let single_negative = c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1
                && c.coeffs().last().is_some_and(|x| *x < Rational::zero());
            let (neg, coeff) = if single_negative { (true, (-c).fmt_fraction()) } else { (false, c.fmt_fraction()) };
            let body = match (m.is_one(), coeff.as_str()) {
                (true, _) => coeff.clone(),
                (false, "1") => m.render(self.r),
                (false, _) => format!("{coeff}*{}", m.render(self.r)),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for WreathSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[r={}, N={}]({})", self.r, self.truncation(), self.render())
    }
}

impl fmt::Debug for CycloSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloSeries[r={}, N={}](", self.r, self.truncation())?;
        for (m, c) in self.terms() {
            write!(f, " ({c:?})*{}", m.render(self.r))?;
        }
        write!(f, " )")
    }
}

/// A power series in `x` over `ℚ[q]`, truncated at `x^N`: the image of the
/// natural specialization.
#[derive(Clone, PartialEq)]
pub struct NaturalSeries {
    coeffs: Vec<CoeffPoly>,
}

impl NaturalSeries {
    pub fn zero(truncation: usize) -> Self {
        NaturalSeries { coeffs: vec![CoeffPoly::zero(); truncation + 1] }
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(truncation, CoeffPoly::one())
    }

    pub fn constant(truncation: usize, c: CoeffPoly) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if truncation >= 1 {
            s.coeffs[1] = CoeffPoly::one();
        }
        s
    }

    pub fn from_coeffs(truncation: usize, mut coeffs: Vec<CoeffPoly>) -> Self {
        coeffs.resize(truncation + 1, CoeffPoly::zero());
        NaturalSeries { coeffs }
    }

    /// `(1+x)^e = Σ_k e(e−1)…(e−k+1)/k! · x^k`.
    pub fn binomial(exponent: &CoeffPoly, truncation: usize) -> Self {
        let mut coeffs = Vec::with_capacity(truncation + 1);
        let mut term = CoeffPoly::one();
        for k in 0..=truncation {
            coeffs.push(term.clone());
            let factor = exponent - &CoeffPoly::from_int(k as i64);
            term = (&term * &factor).scale(&Rational::new(1.into(), ((k + 1) as i64).into()));
        }
        NaturalSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CoeffPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> CoeffPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        NaturalSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        NaturalSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut coeffs = vec![CoeffPoly::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=(n - i) {
                coeffs[i + j].add_mul_assign(&self.coeffs[i], &other.coeffs[j]);
            }
        }
        NaturalSeries { coeffs }
    }

    pub fn scale_poly(&self, p: &CoeffPoly) -> Self {
        NaturalSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    pub fn div_exact_poly(&self, p: &CoeffPoly) -> Result<Self> {
        Ok(NaturalSeries { coeffs: self.coeffs.iter().map(|c| c.div_exact(p)).collect::<Result<_>>()? })
    }

    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0].as_constant().filter(|c| !c.is_zero()).ok_or(Error::NotInvertible)?;
        let inv0 = CoeffPoly::constant(c0.recip());
        let n = self.truncation();
        let mut out = vec![CoeffPoly::zero(); n + 1];
        out[0] = inv0.clone();
        for d in 1..=n {
            let mut acc = CoeffPoly::zero();
            for k in 1..=d {
                acc.add_mul_assign(&self.coeffs[k], &out[d - k]);
            }
            out[d] = -(&acc * &inv0);
        }
        Ok(NaturalSeries { coeffs: out })
    }

    /// `self(g)`, substituting `g` (zero constant term) for `x`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::pre("substituted series must have zero constant term"));
        }
        let n = self.truncation().min(g.truncation());
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            out = out.add(&power.scale_poly(&self.coeffs[k]));
            power = power.mul(g);
        }
        Ok(out)
    }
}

impl fmt::Debug for NaturalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("[{c}]x^{k}")).collect();
        write!(f, "Natural[N={}]({})", self.truncation(), parts.join(" + "))
    }
}

impl Default for NaturalSeries {
    fn default() -> Self {
        Self::zero(0)
    }
}
