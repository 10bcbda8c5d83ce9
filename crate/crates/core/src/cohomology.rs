//! Weight-polynomial characteristics of the hyperplane complements
//! `M(r,n)` and their wonderful compactifications `M̄(r,n)`.
//!
//! - `open_affine_series(r)`: `Σ_n ch_q H_c^•` of the affine complements, a
//!   product of binomial factors `(1 + p_n(θ))^{R/(rn)}`.
//! - `open_projective_series(r)` (`𝒫(r)`): obtained from the affine series
//!   by dividing out the fibre, `q(q−1)` for `r = 1` and `q−1` otherwise.
//! - `closed_series(r)` (`𝒫̄(r)`): for `r = 1` the plethystic inverse of
//!   `p_1 − 𝒫(1)`; for `r ≥ 2`, `(1 − 𝒫(r) ∘ 𝒫̄(1))^{-1} − 1`.
//!
//! Open series store `Σ_s (−1)^s dim H_c^s · q^{s − dim}`; closed series
//! store `Σ_s dim H^{2s} q^s`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::plethysm::{plethysm_ws, plethystic_inverse};
use crate::poly::CoeffPoly;
use crate::rational::{big, Rational};
use crate::reps::{series_to_traces, ClassData};
use crate::series::{Generator, Monomial, NaturalSeries, WreathSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// The projective complement `M(r,n)`.
    OpenProjective,
    /// The affine complement, a `ℂ^×` (or `ℂ ⋊ ℂ^×` for `r = 1`) bundle over
    /// `M(r,n)`.
    OpenAffine,
    /// The compactification `M̄(r,n)`.
    Closed,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 3] = [SpaceKind::OpenProjective, SpaceKind::OpenAffine, SpaceKind::Closed];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::OpenProjective => "open-proj",
            SpaceKind::OpenAffine => "open-affine",
            SpaceKind::Closed => "closed",
        }
    }

    /// Complex dimension of the space of rank `n`.
    ///
    /// `M(1,n)` has dimension `n−2` and is empty for `n = 1`; `M̄(1,1)` is
    /// taken to be a point. For `r ≥ 2` both have dimension `n−1`. The affine
    /// complements have dimension `n`.
    pub fn dimension(self, r: u32, n: usize) -> Option<usize> {
        match (self, r) {
            (SpaceKind::OpenAffine, _) => Some(n),
            (_, 1) if n == 1 => match self {
                SpaceKind::Closed => Some(0),
                _ => None,
            },
            (_, 1) => n.checked_sub(2),
            _ => n.checked_sub(1),
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open-proj" | "open-projective" => Ok(SpaceKind::OpenProjective),
            "open-affine" => Ok(SpaceKind::OpenAffine),
            "closed" => Ok(SpaceKind::Closed),
            _ => Err(Error::Parse(format!("unknown space {s:?} (expected open-proj, open-affine or closed)"))),
        }
    }
}

/// The Möbius function.
pub fn moebius(d: u64) -> i64 {
    assert!(d >= 1, "moebius(0) is undefined");
    let (mut d, mut sign, mut p) = (d, 1, 2);
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `R_n = Σ_{d|n} μ(d) q^{n/d}` for `r = 1`, and for `r ≥ 2`
/// `R_{r,n,θ} = Σ_{d|n} #{ζ ∈ μ_r : ζ^d = θ} μ(d) (q^{n/d} − 1)` with
/// `θ = ω^theta`.
pub fn lehrer_exponent(r: u32, n: u32, theta: u32) -> CoeffPoly {
    assert!(r >= 1 && n >= 1 && theta < r, "invalid exponent parameters");
    let mut out = CoeffPoly::zero();
    for d in divisors(n as u64) {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let e = (n as u64 / d) as usize;
        if r == 1 {
            out = &out + &CoeffPoly::monomial(Rational::from_integer(mu.into()), e);
        } else {
            let count = (0..r as u64).filter(|k| (k * d) % r as u64 == theta as u64).count() as i64;
            if count > 0 {
                let term = &CoeffPoly::monomial(Rational::from_integer(1.into()), e) - &CoeffPoly::one();
                out = &out + &term.scale(&Rational::from_integer((count * mu).into()));
            }
        }
    }
    out
}

/// `∏ (1 + p_n)^{R_n/n}` (`r = 1`) or `∏ (1 + p_n(θ))^{R_{r,n,θ}/(rn)}`,
/// over `n ≤ truncation`.
pub fn open_affine_series(r: u32, truncation: usize) -> Result<WreathSeries> {
    check_rank(r)?;
    let mut out = WreathSeries::one(r, truncation);
    for n in 1..=truncation as u32 {
        for theta in 0..r {
            let exponent = lehrer_exponent(r, n, theta).scale(&Rational::new(1.into(), ((r * n) as i64).into()));
            if exponent.is_zero() {
                continue;
            }
            let base = WreathSeries::one(r, truncation).add(&WreathSeries::generator(
                r,
                truncation,
                Generator::new(n, theta),
            ))?;
            out = out.mul(&base.pow_qpoly(&exponent)?)?;
        }
    }
    Ok(out)
}

/// `𝒫(r)`, solved from `1 + q p_1 + q(q−1) 𝒫(1)` (`r = 1`) or
/// `1 + (q−1) 𝒫(r)` (`r ≥ 2`) by exact division.
pub fn open_projective_series(r: u32, truncation: usize) -> Result<WreathSeries> {
    check_rank(r)?;
    memoized(SpaceKind::OpenProjective, r, truncation, || {
        let affine = open_affine_series(r, truncation)?;
        let q = CoeffPoly::q();
        let q_minus_1 = &q - &CoeffPoly::one();
        let rest = affine.sub(&WreathSeries::one(r, truncation))?;
        let out = if r == 1 {
            let qp1 = WreathSeries::p1(truncation).scale_poly(&q);
            rest.sub(&qp1)?.div_exact_poly(&(&q * &q_minus_1))
        } else {
            rest.div_exact_poly(&q_minus_1)
        }
        .map_err(|e| Error::consistency(format!("solving for the open series: {e}")))?;
        if r == 1 && out.grade(1).next().is_some() {
            return Err(Error::consistency("degree-1 part of the r = 1 open series is nonzero"));
        }
        Ok(out)
    })
}

/// `𝒫̄(1)` by iterating `P ↦ p_1 + 𝒫(1) ∘ P` from `P = p_1`; each pass fixes
/// one more degree because `𝒫(1)` starts in degree 2.
pub fn closed_series_r1_fixpoint(truncation: usize) -> Result<WreathSeries> {
    let open = open_projective_series(1, truncation)?;
    let p1 = WreathSeries::p1(truncation);
    let mut p = p1.clone();
    for _ in 1..truncation {
        p = p1.add(&plethysm_ws(&open, &p)?)?;
    }
    if p1.add(&plethysm_ws(&open, &p)?)? != p {
        return Err(Error::consistency("fixpoint iteration did not converge"));
    }
    Ok(p)
}

/// `𝒫̄(1)` as the plethystic inverse of `p_1 − 𝒫(1)`.
pub fn closed_series_r1_inverse(truncation: usize) -> Result<WreathSeries> {
    let open = open_projective_series(1, truncation)?;
    plethystic_inverse(&WreathSeries::p1(truncation).sub(&open)?)
}

/// `𝒫̄(1)`, computed by both routes; disagreement is a consistency error.
pub fn closed_series_r1(truncation: usize) -> Result<WreathSeries> {
    memoized(SpaceKind::Closed, 1, truncation, || {
        if truncation == 0 {
            return Ok(WreathSeries::zero(1, 0));
        }
        let a = closed_series_r1_fixpoint(truncation)?;
        let b = closed_series_r1_inverse(truncation)?;
        if a != b {
            return Err(Error::consistency("fixpoint and plethystic-inverse routes disagree for r = 1"));
        }
        Ok(a)
    })
}

/// `𝒫(r) ∘ 𝒫̄(1)`.
pub fn open_composed_closed(r: u32, truncation: usize) -> Result<WreathSeries> {
    check_rank(r)?;
    let open = open_projective_series(r, truncation)?;
    if truncation == 0 {
        return Ok(WreathSeries::zero(r, 0));
    }
    plethysm_ws(&open, &closed_series_r1(truncation)?)
}

/// `𝒫̄(r)`.
pub fn closed_series(r: u32, truncation: usize) -> Result<WreathSeries> {
    check_rank(r)?;
    if r == 1 {
        return closed_series_r1(truncation);
    }
    memoized(SpaceKind::Closed, r, truncation, || {
        let composed = open_composed_closed(r, truncation)?;
        let one = WreathSeries::one(r, truncation);
        one.sub(&composed)?.invert()?.sub(&one)
    })
}

/// The series for `kind`.
pub fn space_series(r: u32, kind: SpaceKind, truncation: usize) -> Result<WreathSeries> {
    match kind {
        SpaceKind::OpenProjective => open_projective_series(r, truncation),
        SpaceKind::OpenAffine => open_affine_series(r, truncation),
        SpaceKind::Closed => closed_series(r, truncation),
    }
}

fn check_rank(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::pre("r must be positive"));
    }
    Ok(())
}

type Memo = Mutex<HashMap<(SpaceKind, u32, usize), WreathSeries>>;

fn memoized(
    kind: SpaceKind,
    r: u32,
    truncation: usize,
    compute: impl FnOnce() -> Result<WreathSeries>,
) -> Result<WreathSeries> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (kind, r, truncation);
    if let Some(s) = memo.lock().expect("memo poisoned").get(&key) {
        return Ok(s.clone());
    }
    let s = compute()?;
    memo.lock().expect("memo poisoned").insert(key, s.clone());
    Ok(s)
}

/// The graded trace of `w` on the cohomology of the rank-`n` space:
/// `z_w · [p_w] series`.
pub fn trace(kind: SpaceKind, class: &ClassData) -> Result<CoeffPoly> {
    let n = class.n();
    let series = space_series(class.r(), kind, n)?;
    let table = series_to_traces(&series, n)?;
    Ok(table.values[class].clone())
}

/// `Σ_s (−1)^s tr(w, H_c^s) q^{s−n}` on the affine complement by the
/// falling-factorial formula `∏ R(R − ri)⋯(R − (a−1)ri)` over the cycle
/// data `a = a_i(ζ)`, `R = R_{r,i,ζ}` (`R_i` and step `i` when `r = 1`).
pub fn trace_open_product(class: &ClassData) -> CoeffPoly {
    let r = class.r();
    let mut out = CoeffPoly::one();
    for (&(i, k), &a) in class.mults() {
        let big_r = lehrer_exponent(r, i, k);
        for t in 0..a {
            let shift = CoeffPoly::from_int((t as i64) * (r as i64) * (i as i64));
            out = &out * &(&big_r - &shift);
        }
    }
    out
}

/// Dimensions of the cohomology of the rank-`n` space, indexed by the power
/// of `q`.
///
/// For [`SpaceKind::Closed`] entry `s` is `dim H^{2s}`. For the open kinds
/// entry `t` is `dim H_c^{t + dim}`, recovered from the alternating sum by
/// minimal purity. A negative or fractional dimension is a consistency error.
pub fn betti(r: u32, n: usize, kind: SpaceKind) -> Result<Vec<u64>> {
    check_rank(r)?;
    betti_from_series(&space_series(r, kind, n)?, n, kind)
}

/// [`betti`] for a precomputed series of `kind` truncated at degree `≥ n`.
pub fn betti_from_series(series: &WreathSeries, n: usize, kind: SpaceKind) -> Result<Vec<u64>> {
    let r = series.r();
    if n == 0 {
        return Err(Error::pre("n must be positive"));
    }
    if series.truncation() < n {
        return Err(Error::pre(format!("series truncated below degree {n}")));
    }
    let identity = identity_trace(series, n);
    let Some(dim) = kind.dimension(r, n) else {
        return if identity.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::consistency(format!("empty space {kind}({r},{n}) has cohomology")))
        };
    };
    let len = identity.degree().map_or(0, |d| d + 1);
    (0..len)
        .map(|t| {
            let mut c = identity.coeff(t);
            if kind != SpaceKind::Closed && (t + dim) % 2 == 1 {
                c = -c;
            }
            if !c.is_integer() || c.is_negative() {
                return Err(Error::consistency(format!("dimension {c} at q^{t} for {kind}({r},{n})")));
            }
            Ok(c.to_integer().try_into().expect("dimension fits in u64"))
        })
        .collect()
}

/// Which part of the exponential species series to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ESpeciesPart {
    Full,
    /// Without the degree-0 term.
    Plus,
    /// Without degrees 0 and 1.
    Geq2,
    /// Only degree `n`.
    Level(usize),
}

/// `Z_{E(r)} = exp(Σ_i 1/(ri) Σ_ζ p_i(ζ))`, or the requested part of it.
pub fn e_species_series(r: u32, part: ESpeciesPart, truncation: usize) -> Result<WreathSeries> {
    check_rank(r)?;
    let terms = (1..=truncation as u32).flat_map(|i| {
        (0..r).map(move |k| {
            let c = Rational::new(1.into(), ((r * i) as i64).into());
            (Monomial::gen(Generator::new(i, k)), CoeffPoly::constant(c))
        })
    });
    let full = WreathSeries::from_terms(r, truncation, terms)?.exp()?;
    Ok(match part {
        ESpeciesPart::Full => full,
        ESpeciesPart::Plus => full.drop_below(1),
        ESpeciesPart::Geq2 => full.drop_below(2),
        ESpeciesPart::Level(n) => full.homogeneous(n),
    })
}

/// `Σ_{d ≤ N} μ(d)/d · log(1 + p_d)`, the plethystic inverse of
/// `Z_{E(1)_+}`.
pub fn e_plus_inverse(truncation: usize) -> Result<WreathSeries> {
    let mut out = WreathSeries::zero(1, truncation);
    for d in 1..=truncation as u32 {
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let log = WreathSeries::one(1, truncation)
            .add(&WreathSeries::generator(1, truncation, Generator::new(d, 0)))?
            .log()?;
        out = out.add(&log.scale(&Rational::new(mu.into(), (d as i64).into())))?;
    }
    Ok(out)
}

/// Closed form of `𝒫(r)^♮`: `((1+x)^q − 1 − qx)/(q(q−1))` for `r = 1`,
/// `((1+x)^{(q−1)/r} − 1)/(q−1)` otherwise.
pub fn open_natural_closed_form(r: u32, truncation: usize) -> Result<NaturalSeries> {
    check_rank(r)?;
    let q = CoeffPoly::q();
    let q_minus_1 = &q - &CoeffPoly::one();
    let one = NaturalSeries::one(truncation);
    if r == 1 {
        let qx = NaturalSeries::x(truncation).scale_poly(&q);
        NaturalSeries::binomial(&q, truncation).sub(&one).sub(&qx).div_exact_poly(&(&q * &q_minus_1))
    } else {
        let e = q_minus_1.scale(&Rational::new(1.into(), (r as i64).into()));
        NaturalSeries::binomial(&e, truncation).sub(&one).div_exact_poly(&q_minus_1)
    }
}

/// Right-hand side of Keel's recursion,
/// `x + ((1+P)^q − 1 − qP)/(q(q−1))`, at `P`.
pub fn keel_rhs(p: &NaturalSeries) -> Result<NaturalSeries> {
    let n = p.truncation();
    Ok(NaturalSeries::x(n).add(&open_natural_closed_form(1, n)?.compose(p)?))
}

/// `(1 + P̄_r) · (1 − ((1+P̄_1)^{(q−1)/r} − 1)/(q−1))`, which equals `1`
/// for the natural forms of the closed series.
pub fn yuzvinsky_product(r: u32, closed_r: &NaturalSeries, closed_1: &NaturalSeries) -> Result<NaturalSeries> {
    let n = closed_r.truncation().min(closed_1.truncation());
    let one = NaturalSeries::one(n);
    let inner = open_natural_closed_form(r, n)?.compose(closed_1)?;
    Ok(one.add(closed_r).mul(&one.sub(&inner)))
}

/// The trace of the identity (the Poincaré polynomial for closed spaces)
/// in the degree-`n` part of a series.
pub fn identity_trace(series: &WreathSeries, n: usize) -> CoeffPoly {
    let class = ClassData::identity(series.r(), n);
    series.coeff_of(&class.monomial()).scale(&big(&class.centralizer_order()))
}
