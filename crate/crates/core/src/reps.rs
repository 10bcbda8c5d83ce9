//! Representations of `W(r,n) = μ_r ≀ S_n`: conjugacy classes, the
//! characteristic map, irreducible characters and decomposition of graded
//! characters.
//!
//! Conventions: a class is the multiset of cycle data `a_i(ω^k)`; the
//! characteristic of a class function `f` is `Σ_w f(w)/z_w · p_w` over
//! classes, with `z_w = ∏ a_i(ζ)! (ri)^{a_i(ζ)}` the centralizer order.
//! Component `c` of a [`MultiPartition`] belongs to the character
//! `ζ ↦ ζ^c` of `μ_r`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::poly::CoeffPoly;
use crate::rational::{big, factorial, Rational};
use crate::series::{Coefficient, CycloSeries, Generator, Monomial, Series, WreathSeries};

/// A conjugacy class of `W(r,n)`: `(i, k) ↦ a_i(ω^k)`, the number of
/// `i`-cycles of type `ω^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassData {
    r: u32,
    mults: BTreeMap<(u32, u32), u32>,
}

impl ClassData {
    pub fn new(r: u32, mults: impl IntoIterator<Item = ((u32, u32), u32)>) -> Result<Self> {
        if r == 0 {
            return Err(Error::pre("r must be positive"));
        }
        let mut out = BTreeMap::new();
        for ((i, k), a) in mults {
            if i == 0 || k >= r {
                return Err(Error::pre(format!("invalid cycle data {i}:{k} for r = {r}")));
            }
            if a > 0 {
                *out.entry((i, k)).or_insert(0) += a;
            }
        }
        Ok(ClassData { r, mults: out })
    }

    /// The class of the identity of `W(r,n)`: `a_1(1) = n`.
    pub fn identity(r: u32, n: usize) -> Self {
        ClassData::new(r, [((1, 0), n as u32)]).expect("valid identity class")
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn mults(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.mults
    }

    /// The rank `n = Σ i·a_i(ζ)`.
    pub fn n(&self) -> usize {
        self.mults.iter().map(|(&(i, _), &a)| (i * a) as usize).sum()
    }

    /// `∏ a_i(ζ)! · (ri)^{a_i(ζ)}`.
    pub fn centralizer_order(&self) -> BigInt {
        self.mults
            .iter()
            .map(|(&(i, _), &a)| factorial(a as u64) * BigInt::from(self.r * i).pow(a))
            .fold(BigInt::one(), |acc, x| acc * x)
    }

    /// `p_w = ∏ p_i(ζ)^{a_i(ζ)}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_factors(self.mults.iter().map(|(&(i, k), &a)| (Generator::new(i, k), a)))
    }

    pub fn from_monomial(r: u32, m: &Monomial) -> Result<Self> {
        ClassData::new(r, m.factors().iter().map(|&(g, e)| ((g.index, g.zeta), e)))
    }

    /// Parses `"i:k^a,..."` (meaning `a_i(ω^k) = a`; `^a` may be omitted
    /// for `a = 1`). The empty string is the class of `W(r,0)`.
    pub fn parse(r: u32, spec: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("class spec {spec:?}: {what}"));
        let mut mults = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (i, rest) = part.split_once(':').ok_or_else(|| bad("expected i:k^a"))?;
            let (k, a) = rest.split_once('^').unwrap_or((rest, "1"));
            let i: u32 = i.trim().parse().map_err(|_| bad("cycle length is not an integer"))?;
            let k: u32 = k.trim().parse().map_err(|_| bad("zeta exponent is not an integer"))?;
            let a: u32 = a.trim().parse().map_err(|_| bad("multiplicity is not an integer"))?;
            if i == 0 {
                return Err(bad("cycle length must be positive"));
            }
            if k >= r {
                return Err(bad(&format!("zeta exponent {k} outside [0, {r})")));
            }
            mults.push(((i, k), a));
        }
        ClassData::new(r, mults)
    }
}

impl fmt::Display for ClassData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mults.iter().map(|(&(i, k), &a)| format!("{i}:{k}^{a}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ClassData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Class[r={}]({self})", self.r)
    }
}

/// All classes of `W(r,n)`, sorted by their monomials.
pub fn enumerate_classes(r: u32, n: usize) -> Vec<ClassData> {
    fn go(
        gens: &[(u32, u32)],
        remaining: usize,
        acc: &mut Vec<((u32, u32), u32)>,
        out: &mut Vec<Vec<((u32, u32), u32)>>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let Some((&(i, k), rest)) = gens.split_first() else {
            return;
        };
        let max = remaining / i as usize;
        for a in (0..=max).rev() {
            if a > 0 {
                acc.push(((i, k), a as u32));
            }
            go(rest, remaining - a * i as usize, acc, out);
            if a > 0 {
                acc.pop();
            }
        }
    }
    let gens: Vec<(u32, u32)> = (1..=n as u32).flat_map(|i| (0..r).map(move |k| (i, k))).collect();
    let mut raw = Vec::new();
    go(&gens, n, &mut Vec::new(), &mut raw);
    let mut classes: Vec<ClassData> =
        raw.into_iter().map(|m| ClassData::new(r, m).expect("generated classes are valid")).collect();
    classes.sort_by_cached_key(ClassData::monomial);
    classes
}

/// `|W(r,n)| = r^n n!`.
pub fn group_order(r: u32, n: usize) -> BigInt {
    BigInt::from(r).pow(n as u32) * factorial(n as u64)
}

/// An element of `W(r,n)` acting on `μ_r × [n]` by
/// `(k, j) ↦ (k + colors[j], perm[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    r: u32,
    perm: Vec<usize>,
    colors: Vec<u32>,
}

impl WreathElement {
    pub fn new(r: u32, perm: Vec<usize>, colors: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::pre("not a permutation"));
            }
        }
        if colors.len() != n || colors.iter().any(|&c| c >= r) {
            return Err(Error::pre("colors must be n exponents in [0, r)"));
        }
        Ok(WreathElement { r, perm, colors })
    }

    pub fn identity(r: u32, n: usize) -> Self {
        WreathElement { r, perm: (0..n).collect(), colors: vec![0; n] }
    }

    /// A fixed representative of the class: each `i`-cycle of type `ω^k`
    /// occupies consecutive points and carries the color `k` on its first
    /// point.
    pub fn representative(class: &ClassData) -> Self {
        let n = class.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        let mut next = 0;
        for (&(i, k), &a) in class.mults() {
            for _ in 0..a {
                let start = next;
                for t in 0..i as usize {
                    perm[start + t] = start + (t + 1) % i as usize;
                }
                colors[start] = k;
                next += i as usize;
            }
        }
        WreathElement { r: class.r(), perm, colors }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Image of the point `(k, j)`.
    pub fn act(&self, k: u32, j: usize) -> (u32, usize) {
        ((k + self.colors[j]) % self.r, self.perm[j])
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n();
        let perm = (0..n).map(|j| self.perm[other.perm[j]]).collect();
        let colors = (0..n).map(|j| (other.colors[j] + self.colors[other.perm[j]]) % self.r).collect();
        WreathElement { r: self.r, perm, colors }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            colors[self.perm[j]] = (self.r - self.colors[j]) % self.r;
        }
        WreathElement { r: self.r, perm, colors }
    }

    /// Cycle type: each cycle contributes its length and the sum of colors
    /// along it.
    pub fn class(&self) -> ClassData {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut mults = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut j, mut len, mut color) = (start, 0u32, 0u32);
            while !seen[j] {
                seen[j] = true;
                color = (color + self.colors[j]) % self.r;
                len += 1;
                j = self.perm[j];
            }
            mults.push(((len, color), 1));
        }
        ClassData::new(self.r, mults).expect("cycle data is valid")
    }
}

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `z_λ = ∏ m_i! i^{m_i}`.
    pub fn z(&self) -> BigInt {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts.iter().map(|(&i, &m)| factorial(m as u64) * BigInt::from(i).pow(m)).fold(BigInt::one(), |a, b| a * b)
    }

    fn fmt_bare(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.fmt_bare())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            acc.push(p);
            go(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// An `r`-tuple of partitions labelling an irreducible character of
/// `W(r,n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has r >= 1 components");
        MultiPartition(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for MultiPartition {
    /// `(3)` for `r = 1`, otherwise `[λ⁰|λ¹|…]` with comma-separated parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(Partition::fmt_bare).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `r`-multipartitions of total size `n`.
pub fn multipartitions(r: u32, n: usize) -> Vec<MultiPartition> {
    fn go(r: u32, n: usize, acc: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if acc.len() as u32 == r - 1 {
            for p in partitions(n) {
                let mut v = acc.clone();
                v.push(p);
                out.push(MultiPartition(v));
            }
            return;
        }
        for size in (0..=n).rev() {
            for p in partitions(size) {
                acc.push(p);
                go(r, n - size, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(r, n, &mut Vec::new(), &mut out);
    out
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule, removing rim hooks on the
/// beta-set (abacus) of `λ`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> i64 {
    fn go(beta: &mut Vec<u32>, hooks: &[u32]) -> i64 {
        let Some((&k, rest)) = hooks.split_first() else {
            return 1;
        };
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[idx] = b - k;
            total += sign * go(beta, rest);
            beta[idx] = b;
        }
        total
    }
    if lambda.size() != mu.size() {
        return 0;
    }
    let len = lambda.0.len() as u32;
    let mut beta: Vec<u32> = lambda.0.iter().enumerate().map(|(i, &p)| p + len - 1 - i as u32).collect();
    go(&mut beta, &mu.0)
}

fn power_monomial(mu: &Partition, zeta: u32) -> Monomial {
    Monomial::from_factors(mu.0.iter().map(|&i| (Generator::new(i, zeta), 1)))
}

/// `s_λ = Σ_μ χ^λ(μ)/z_μ · p_μ` in `𝔸(1)`, truncated at `|λ|`.
pub fn char_power_expansion(lambda: &Partition) -> WreathSeries {
    let n = lambda.size();
    let terms = partitions(n).into_iter().filter_map(|mu| {
        let chi = character_value(lambda, &mu);
        (chi != 0).then(|| {
            let c = Rational::new(chi.into(), mu.z());
            (power_monomial(&mu, 0), CoeffPoly::constant(c))
        })
    });
    WreathSeries::from_terms(1, n, terms).expect("r = 1 monomials")
}

/// `P_j^{(c)} = (1/r) Σ_k ω^{ck} p_j(ω^k)`, the power sums attached to the
/// character `ζ ↦ ζ^c`.
fn fourier_power_sum(r: u32, c: u32, j: u32, truncation: usize) -> CycloSeries {
    let inv_r = Rational::new(1.into(), r.into());
    let terms = (0..r).map(|k| {
        let coeff = Cyclotomic::root_power(r, (c as i64) * (k as i64)).scale(&inv_r);
        (Monomial::gen(Generator::new(j, k)), coeff)
    });
    CycloSeries::from_terms(r, truncation, terms).expect("zeta exponents below r")
}

/// The characteristic of the irreducible character of `W(r,n)` labelled
/// by `label`: `∏_c s_{λ^{(c)}}(P^{(c)})`.
pub fn irreducible_characteristic(r: u32, label: &MultiPartition) -> Result<CycloSeries> {
    if label.r() != r {
        return Err(Error::pre(format!("multipartition has {} components, expected {r}", label.r())));
    }
    let n = label.size();
    let mut out = CycloSeries::one(r, n);
    for (c, lambda) in label.components().iter().enumerate() {
        let c = c as u32;
        let schur = char_power_expansion(lambda);
        let mut factor = CycloSeries::zero(r, n);
        let mut powers: HashMap<u32, CycloSeries> = HashMap::new();
        for (m, coeff) in schur.terms() {
            let coeff = coeff.as_constant().expect("Schur expansions have rational coefficients");
            let mut prod = CycloSeries::constant(r, n, Cyclotomic::from_rational(r, coeff));
            for &(g, e) in m.factors() {
                let p = powers.entry(g.index).or_insert_with(|| fourier_power_sum(r, c, g.index, n));
                for _ in 0..e {
                    prod = prod.mul(p)?;
                }
            }
            factor = factor.add(&prod)?;
        }
        out = out.mul(&factor)?;
    }
    Ok(out)
}

type CharacterTable = Arc<Vec<(MultiPartition, CycloSeries)>>;

/// Irreducible characteristics of `W(r,n)`, memoized per `(r, n)`.
pub fn character_table(r: u32, n: usize) -> Result<CharacterTable> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), CharacterTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(&(r, n)) {
        return Ok(t.clone());
    }
    let table: Vec<_> = multipartitions(r, n)
        .into_iter()
        .map(|label| irreducible_characteristic(r, &label).map(|ch| (label, ch)))
        .collect::<Result<_>>()?;
    let table = Arc::new(table);
    cache.lock().expect("cache poisoned").insert((r, n), table.clone());
    Ok(table)
}

/// Values of a class function on every class of `W(r,n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassFunctionTable<C> {
    pub r: u32,
    pub n: usize,
    pub values: BTreeMap<ClassData, C>,
}

impl<C: Coefficient> ClassFunctionTable<C> {
    pub fn value(&self, class: &ClassData) -> Option<&C> {
        self.values.get(class)
    }
}

fn centralizer_of(r: u32, m: &Monomial) -> BigInt {
    ClassData::from_monomial(r, m).expect("series monomials have valid zeta exponents").centralizer_order()
}

/// Inverse characteristic map: `f(w) = z_w · [p_w] f_n` for every class.
pub fn series_to_traces<C: Coefficient>(f: &Series<C>, n: usize) -> Result<ClassFunctionTable<C>> {
    if n > f.truncation() {
        return Err(Error::pre(format!("degree {n} exceeds the truncation {}", f.truncation())));
    }
    let r = f.r();
    let values = enumerate_classes(r, n)
        .into_iter()
        .map(|w| {
            let z = big(&w.centralizer_order());
            let v = f.get(&w.monomial()).map_or_else(|| C::zero_for_rank(r), |c| c.scale(&z));
            (w, v)
        })
        .collect();
    Ok(ClassFunctionTable { r, n, values })
}

/// The characteristic `Σ_w f(w)/z_w · p_w` of a class-function table.
pub fn characteristic<C: Coefficient>(table: &ClassFunctionTable<C>) -> Series<C> {
    let terms = table.values.iter().map(|(w, v)| {
        let inv = Rational::new(BigInt::one(), w.centralizer_order());
        (w.monomial(), v.scale(&inv))
    });
    Series::from_terms(table.r, table.n, terms).expect("class monomials are valid")
}

/// `⟨f_n, g_n⟩` with `⟨p_w, p_w'⟩ = δ z_w`; rational coefficients, so the
/// pairing is symmetric.
pub fn inner_product(f: &WreathSeries, g: &WreathSeries, n: usize) -> Result<CoeffPoly> {
    if f.r() != g.r() {
        return Err(Error::RankMismatch(f.r(), g.r()));
    }
    if n > f.truncation() || n > g.truncation() {
        return Err(Error::pre("pairing degree exceeds a truncation"));
    }
    let mut acc = CoeffPoly::zero();
    for (m, a) in f.grade(n) {
        if let Some(b) = g.get(m) {
            let z = CoeffPoly::constant(big(&centralizer_of(f.r(), m)));
            acc.add_assign_ref(&(&(a * b) * &z));
        }
    }
    Ok(acc)
}

/// `⟨f_n, g_n⟩` for cyclotomic series, conjugate-linear in `g`.
pub fn inner_product_cyclo(f: &CycloSeries, g: &CycloSeries, n: usize) -> Result<Cyclotomic> {
    if f.r() != g.r() {
        return Err(Error::RankMismatch(f.r(), g.r()));
    }
    let r = f.r();
    let mut acc = Cyclotomic::zero(r);
    for (m, a) in f.grade(n) {
        if let Some(b) = g.get(m) {
            let z = big(&centralizer_of(r, m));
            acc.add_assign_ref(&a.mul_ref(&b.conj()).scale(&z));
        }
    }
    Ok(acc)
}

/// `⟨f_n, χ⟩` as a polynomial in `q` with cyclotomic coefficients
/// (index = power of `q`).
pub fn pair_with_character(f: &WreathSeries, chi: &CycloSeries, n: usize) -> Result<Vec<Cyclotomic>> {
    if f.r() != chi.r() {
        return Err(Error::RankMismatch(f.r(), chi.r()));
    }
    let r = f.r();
    let mut acc: Vec<Cyclotomic> = Vec::new();
    for (m, a) in f.grade(n) {
        let Some(b) = chi.get(m) else { continue };
        let zb = b.conj().scale(&big(&centralizer_of(r, m)));
        for (s, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if acc.len() <= s {
                acc.resize(s + 1, Cyclotomic::zero(r));
            }
            acc[s].add_assign_ref(&zb.scale(c));
        }
    }
    while acc.last().is_some_and(Cyclotomic::is_zero) {
        acc.pop();
    }
    Ok(acc)
}

/// The degree `χ(1) = r^n n! · [p_1(1)^n] χ` of a characteristic.
pub fn dimension(chi: &CycloSeries, n: usize) -> Option<Rational> {
    let id = Monomial::power(Generator::new(1, 0), n as u32);
    let c = chi.get(&id)?.to_rational()?;
    Some(c * big(&group_order(chi.r(), n)))
}

/// Multiplicities `m_λ(q) = ⟨f_n, χ^λ⟩` of every irreducible in the
/// degree-`n` part of `f`. Multiplicities must be integral polynomials;
/// the reconstruction `Σ m_λ χ^λ = f_n` is checked.
pub fn decompose(f: &WreathSeries, r: u32, n: usize) -> Result<BTreeMap<MultiPartition, CoeffPoly>> {
    if f.r() != r {
        return Err(Error::RankMismatch(f.r(), r));
    }
    if n > f.truncation() {
        return Err(Error::pre(format!("degree {n} exceeds the truncation {}", f.truncation())));
    }
    let table = character_table(r, n)?;
    let mut out = BTreeMap::new();
    for (label, chi) in table.iter() {
        let raw = pair_with_character(f, chi, n)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for (s, c) in raw.iter().enumerate() {
            let x = c
                .to_rational()
                .ok_or_else(|| Error::NotACharacter(format!("multiplicity of {label} at q^{s} is not real")))?;
            if !x.is_integer() {
                return Err(Error::NotACharacter(format!("multiplicity of {label} at q^{s} is {x}, not an integer")));
            }
            coeffs.push(x);
        }
        let m = CoeffPoly::from_coeffs(coeffs);
        if !m.is_zero() {
            out.insert(label.clone(), m);
        }
    }
    check_reconstruction(f, r, n, &out, &table)?;
    Ok(out)
}

fn check_reconstruction(
    f: &WreathSeries,
    r: u32,
    n: usize,
    mults: &BTreeMap<MultiPartition, CoeffPoly>,
    table: &[(MultiPartition, CycloSeries)],
) -> Result<()> {
    // Compare q-layer by q-layer: layer s of f_n against Σ_λ [q^s]m_λ · χ^λ.
    let max_q = f.grade(n).filter_map(|(_, c)| c.degree()).max().unwrap_or(0);
    for s in 0..=max_q {
        let mut lhs = CycloSeries::zero(r, n);
        for (m, c) in f.grade(n) {
            let x = c.coeff(s);
            if !x.is_zero() {
                lhs.add_term(m.clone(), Cyclotomic::from_rational(r, x));
            }
        }
        let mut rhs = CycloSeries::zero(r, n);
        for (label, chi) in table {
            if let Some(m) = mults.get(label) {
                let x = m.coeff(s);
                if !x.is_zero() {
                    rhs = rhs.add(&chi.scale(&x))?;
                }
            }
        }
        if lhs != rhs {
            return Err(Error::NotACharacter(format!(
                "degree-{n} part is not spanned by irreducible characteristics (q^{s} layer)"
            )));
        }
    }
    Ok(())
}

/// For `W(2,3)`, the irreducibles on which the centre `{±1}` acts
/// trivially, labelled by the partition of 4 of the corresponding `S_4`
/// representation under `W(2,3)/{±1} ≅ S_4`.
///
/// The isomorphism is realized by the action of signed permutations of
/// `ℝ^3` on the four main diagonals of the cube; labels are matched by
/// comparing character values on every class.
pub fn s4_labels() -> Result<BTreeMap<MultiPartition, Partition>> {
    let classes = enumerate_classes(2, 3);
    // diagonals: sign vectors with first coordinate +1
    let diagonals: Vec<[i32; 3]> =
        (0..4).map(|b| [1, if b & 1 == 0 { 1 } else { -1 }, if b & 2 == 0 { 1 } else { -1 }]).collect();
    let normalize = |v: [i32; 3]| if v[0] < 0 { v.map(|x| -x) } else { v };
    let mut image_type = BTreeMap::new();
    for w in &classes {
        let g = WreathElement::representative(w);
        let perm: Vec<usize> = diagonals
            .iter()
            .map(|d| {
                let mut img = [0; 3];
                for j in 0..3 {
                    let sign = if g.colors()[j] == 0 { 1 } else { -1 };
                    img[g.perm()[j]] = sign * d[j];
                }
                let img = normalize(img);
                diagonals.iter().position(|e| *e == img).expect("diagonals are permuted")
            })
            .collect();
        let s4 = WreathElement::new(1, perm, vec![0; 4])?.class();
        let cycle_type = Partition::new(s4.mults().iter().flat_map(|(&(i, _), &a)| vec![i; a as usize]).collect());
        image_type.insert(w.clone(), cycle_type);
    }
    let mut out = BTreeMap::new();
    for (label, chi) in character_table(2, 3)?.iter() {
        let values = series_to_traces(chi, 3)?;
        'nu: for nu in partitions(4) {
            for w in &classes {
                let v = values.values[w].to_rational().expect("r = 2 characters are rational");
                if v != Rational::from_integer(character_value(&nu, &image_type[w]).into()) {
                    continue 'nu;
                }
            }
            out.insert(label.clone(), nu);
            break;
        }
    }
    Ok(out)
}

/// `true` when every coefficient of `p` is a non-negative integer.
pub fn in_natural_polys(p: &CoeffPoly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(1, 3).len(), 3);
        assert_eq!(enumerate_classes(2, 2).len(), 5);
        assert_eq!(enumerate_classes(2, 3).len(), 10);
        assert_eq!(enumerate_classes(3, 0).len(), 1);
        assert_eq!(enumerate_classes(1, 6).len(), 11);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(ClassData::identity(2, 3).centralizer_order(), BigInt::from(48));
        let x1x2 = ClassData::parse(2, "1:0^1,2:0^1").unwrap();
        assert_eq!(x1x2.centralizer_order(), BigInt::from(8));
        assert_eq!(ClassData::parse(2, "3:0").unwrap().centralizer_order(), BigInt::from(6));
    }

    #[test]
    fn class_orders_sum_to_group_order() {
        for r in 1..=3 {
            for n in 0..=4 {
                let total: Rational =
                    enumerate_classes(r, n).iter().map(|w| Rational::new(BigInt::one(), w.centralizer_order())).sum();
                assert_eq!(total, int(1), "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn class_monomial_bijection() {
        let id = ClassData::identity(1, 2);
        assert_eq!(id.monomial(), Monomial::power(Generator::new(1, 0), 2));
        let y2 = ClassData::parse(2, "2:1^1").unwrap();
        assert_eq!(y2.monomial(), Monomial::gen(Generator::new(2, 1)));
        for w in enumerate_classes(3, 3) {
            assert_eq!(ClassData::from_monomial(3, &w.monomial()).unwrap(), w);
        }
    }

    #[test]
    fn class_spec_parsing() {
        let w = ClassData::parse(2, "1:0^1, 2:0").unwrap();
        assert_eq!(w.to_string(), "1:0^1,2:0^1");
        assert!(matches!(ClassData::parse(2, "1:2^1"), Err(Error::Parse(_))));
        assert!(matches!(ClassData::parse(2, "x"), Err(Error::Parse(_))));
        assert!(matches!(ClassData::parse(2, "0:0^1"), Err(Error::Parse(_))));
        assert_eq!(ClassData::parse(3, "").unwrap().n(), 0);
    }

    #[test]
    fn representatives_have_their_class() {
        for r in 1..=3 {
            for n in 0..=4 {
                for w in enumerate_classes(r, n) {
                    assert_eq!(WreathElement::representative(&w).class(), w);
                }
            }
        }
    }

    #[test]
    fn group_law() {
        let a = WreathElement::new(3, vec![1, 2, 0], vec![1, 0, 2]).unwrap();
        let b = WreathElement::new(3, vec![0, 2, 1], vec![2, 2, 0]).unwrap();
        let ab = a.compose(&b);
        for k in 0..3 {
            for j in 0..3 {
                let (k1, j1) = b.act(k, j);
                assert_eq!(ab.act(k, j), a.act(k1, j1));
            }
        }
        assert_eq!(a.compose(&a.inverse()), WreathElement::identity(3, 3));
    }

    #[test]
    fn murnaghan_nakayama_small_tables() {
        // S_3: rows (3), (2,1), (1,1,1); columns 1^3, 2 1, 3
        let cols = [part(&[1, 1, 1]), part(&[2, 1]), part(&[3])];
        let table = [(part(&[3]), [1, 1, 1]), (part(&[2, 1]), [2, 0, -1]), (part(&[1, 1, 1]), [1, -1, 1])];
        for (lambda, row) in table {
            for (mu, v) in cols.iter().zip(row) {
                assert_eq!(character_value(&lambda, mu), v, "{lambda} at {mu}");
            }
        }
        // S_4 standard representation at a 4-cycle
        assert_eq!(character_value(&part(&[3, 1]), &part(&[4])), -1);
        assert_eq!(character_value(&part(&[2, 2]), &part(&[2, 2])), 2);
    }

    #[test]
    fn schur_power_expansions() {
        let p = |f: &[u32]| Monomial::from_factors(f.iter().map(|&i| (Generator::new(i, 0), 1)));
        let half = CoeffPoly::constant(rat(1, 2));
        let s2 = char_power_expansion(&part(&[2]));
        assert_eq!(s2.coeff_of(&p(&[1, 1])), half);
        assert_eq!(s2.coeff_of(&p(&[2])), half);
        let s11 = char_power_expansion(&part(&[1, 1]));
        assert_eq!(s11.coeff_of(&p(&[2])), -&half);
        let s21 = char_power_expansion(&part(&[2, 1]));
        assert_eq!(s21.coeff_of(&p(&[1, 1, 1])), CoeffPoly::constant(rat(1, 3)));
        assert_eq!(s21.coeff_of(&p(&[2, 1])), CoeffPoly::zero());
        assert_eq!(s21.coeff_of(&p(&[3])), CoeffPoly::constant(rat(-1, 3)));
    }

    #[test]
    fn w21_irreducibles() {
        let x1 = Monomial::gen(Generator::new(1, 0));
        let y1 = Monomial::gen(Generator::new(1, 1));
        let triv = irreducible_characteristic(2, &MultiPartition::new(vec![part(&[1]), part(&[])])).unwrap();
        let sign = irreducible_characteristic(2, &MultiPartition::new(vec![part(&[]), part(&[1])])).unwrap();
        let half = Cyclotomic::from_rational(2, rat(1, 2));
        assert_eq!(triv.get(&x1), Some(&half));
        assert_eq!(triv.get(&y1), Some(&half));
        assert_eq!(sign.get(&x1), Some(&half));
        assert_eq!(sign.get(&y1), Some(&half.neg()));
    }

    #[test]
    fn trivial_character_is_complete_homogeneous() {
        let h3 = char_power_expansion(&part(&[3]));
        let table = series_to_traces(&h3, 3).unwrap();
        assert!(table.values.values().all(|v| *v == CoeffPoly::one()));
        assert_eq!(inner_product(&h3, &h3, 3).unwrap(), CoeffPoly::one());
        let p11 =
            WreathSeries::from_terms(1, 2, [(Monomial::power(Generator::new(1, 0), 2), CoeffPoly::one())]).unwrap();
        assert_eq!(inner_product(&p11, &p11, 2).unwrap(), CoeffPoly::from_int(2));
    }

    #[test]
    fn traces_round_trip() {
        let chi = irreducible_characteristic(3, &MultiPartition::new(vec![part(&[1]), part(&[1]), part(&[])])).unwrap();
        let t = series_to_traces(&chi, 2).unwrap();
        assert_eq!(characteristic(&t), chi);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let half_p1 =
            WreathSeries::from_terms(1, 1, [(Monomial::gen(Generator::new(1, 0)), CoeffPoly::constant(rat(1, 2)))])
                .unwrap();
        assert!(matches!(decompose(&half_p1, 1, 1), Err(Error::NotACharacter(_))));
        // ½(p_1(1) + i·...) style non-real input for r = 4 is rejected too
        let f = WreathSeries::from_terms(4, 1, [(Monomial::gen(Generator::new(1, 1)), CoeffPoly::constant(rat(1, 4)))])
            .unwrap();
        assert!(matches!(decompose(&f, 4, 1), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn multipartition_display() {
        let m = MultiPartition::new(vec![part(&[2, 1]), part(&[1])]);
        assert_eq!(m.to_string(), "[2,1|1]");
        assert_eq!(MultiPartition::new(vec![part(&[3])]).to_string(), "(3)");
        assert_eq!(multipartitions(2, 3).len(), 10);
        assert_eq!(multipartitions(3, 2).len(), 9);
    }
}
