//! Plethysm between `𝔸(1)[q]` and `𝔸(r)[q]`, and plethystic inversion.
//!
//! Both operations are algebra maps in the left slot, so `f ∘ g` is
//! evaluated by substituting an image series for every generator of `f`.
//! The images are Adams-type transforms of `g`:
//!
//! - `p_i(ζ) ∘ g`: `q → q^i`, `p_j → p_{ij}(ζ^j)` (left slot over `r`),
//! - `p_i ∘ g`: `q → q^i`, `p_j(ζ) → p_{ij}(ζ)` (right slot over `r`).
//!
//! Coefficients of `f` are untouched, since `f ↦ f ∘ g` is `ℚ[q]`-linear.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::series::{Generator, Monomial, WreathSeries};

/// `Σ_m c_m · ∏ image(g)^e` over the terms of `f`. Images and partial
/// products are memoized for the duration of the call.
fn substitute(
    f: &WreathSeries,
    target_r: u32,
    truncation: usize,
    image: impl Fn(Generator) -> WreathSeries,
) -> WreathSeries {
    struct Memo<F> {
        image: F,
        images: HashMap<Generator, WreathSeries>,
        products: HashMap<Monomial, WreathSeries>,
    }

    impl<F: Fn(Generator) -> WreathSeries> Memo<F> {
        fn product(&mut self, m: &Monomial) -> WreathSeries {
            if let Some(p) = self.products.get(m) {
                return p.clone();
            }
            let (rest, g) = m.split_last().expect("the unit monomial is pre-seeded");
            let head = self.product(&rest);
            let img = self.images.entry(g).or_insert_with(|| (self.image)(g)).clone();
            let p = head.mul(&img).expect("images share the target rank");
            self.products.insert(m.clone(), p.clone());
            p
        }
    }

    let mut memo = Memo {
        image,
        images: HashMap::new(),
        products: HashMap::from([(Monomial::one(), WreathSeries::one(target_r, truncation))]),
    };
    let mut out = WreathSeries::zero(target_r, truncation);
    for (m, c) in f.terms() {
        if m.degree() > truncation {
            continue;
        }
        let prod = memo.product(m);
        for (pm, pc) in prod.terms() {
            out.add_term(pm.clone(), c * pc);
        }
    }
    out
}

fn check_right_argument(g: &WreathSeries, truncation: usize) -> Result<()> {
    if !g.constant_term().is_zero() {
        return Err(Error::pre("plethysm needs a zero constant term on the right"));
    }
    if g.truncation() < truncation {
        return Err(Error::pre(format!(
            "right argument truncated at {} but the result needs degree {truncation}",
            g.truncation()
        )));
    }
    Ok(())
}

/// `p_i(ω^k) ∘ g` for `g` over `r = 1`, truncated at `truncation`.
pub fn adams_ws(g: &WreathSeries, i: u32, k: u32, r: u32, truncation: usize) -> WreathSeries {
    let mut out = WreathSeries::zero(r, truncation);
    for (m, c) in g.terms() {
        if m.degree() * i as usize > truncation {
            break;
        }
        let mono = Monomial::from_factors(m.factors().iter().map(|&(gen, e)| {
            let j = gen.index;
            (Generator::new(i * j, (k * j) % r), e)
        }));
        out.add_term(mono, c.dilate(i as usize));
    }
    out
}

/// `p_i ∘ g` for `g` over any `r`, truncated at `truncation`.
pub fn adams_sw(g: &WreathSeries, i: u32, truncation: usize) -> WreathSeries {
    let mut out = WreathSeries::zero(g.r(), truncation);
    for (m, c) in g.terms() {
        if m.degree() * i as usize > truncation {
            break;
        }
        let mono =
            Monomial::from_factors(m.factors().iter().map(|&(gen, e)| (Generator::new(i * gen.index, gen.zeta), e)));
        out.add_term(mono, c.dilate(i as usize));
    }
    out
}

/// `f ∘ g` with `f ∈ 𝔸(r)[q]`, `g ∈ 𝔸(1)[q]_+`. The result has `f`'s
/// truncation, which `g` must reach.
pub fn plethysm_ws(f: &WreathSeries, g: &WreathSeries) -> Result<WreathSeries> {
    if g.r() != 1 {
        return Err(Error::pre(format!("right argument of plethysm must be over r = 1, got r = {}", g.r())));
    }
    let n = f.truncation();
    check_right_argument(g, n)?;
    let r = f.r();
    Ok(substitute(f, r, n, |gen| adams_ws(g, gen.index, gen.zeta, r, n)))
}

/// `f ∘ g` with `f ∈ 𝔸(1)[q]`, `g ∈ 𝔸(r)[q]_+`: classical plethysm applied
/// to each tensor factor.
pub fn plethysm_sw(f: &WreathSeries, g: &WreathSeries) -> Result<WreathSeries> {
    if f.r() != 1 {
        return Err(Error::pre(format!("left argument must be over r = 1, got r = {}", f.r())));
    }
    let n = f.truncation();
    check_right_argument(g, n)?;
    Ok(substitute(f, g.r(), n, |gen| adams_sw(g, gen.index, n)))
}

/// Classical plethysm of symmetric functions (`r = 1` on both sides).
pub fn plethysm(f: &WreathSeries, g: &WreathSeries) -> Result<WreathSeries> {
    if f.r() != 1 {
        return Err(Error::RankMismatch(f.r(), 1));
    }
    plethysm_ws(f, g)
}

/// The plethystic inverse of `g = p_1 + (degree ≥ 2)`.
///
/// Solves `h ∘ g = p_1` degree by degree: with `h_{<n}` known, the degree-`n`
/// part of `h ∘ g` is `h_n + (h_{<n} ∘ g)_n`, so `h_n = −(h_{<n} ∘ g)_n`.
/// The other composition `g ∘ h = p_1` is then checked.
pub fn plethystic_inverse(g: &WreathSeries) -> Result<WreathSeries> {
    if g.r() != 1 {
        return Err(Error::pre("plethystic inverse is defined over r = 1"));
    }
    let n = g.truncation();
    let p1 = WreathSeries::p1(n);
    if !g.constant_term().is_zero() || g.truncated(1) != p1.truncated(1) {
        return Err(Error::pre("plethystic inverse needs g = p_1 + (terms of degree >= 2)"));
    }
    let mut h = p1.clone();
    for d in 2..=n {
        let partial = plethysm(&h.truncated(d), &g.truncated(d))?;
        for (m, c) in partial.grade(d) {
            h.add_term(m.clone(), -c);
        }
    }
    if plethysm(&h, g)? != p1 {
        return Err(Error::consistency("h o g != p_1 after solving"));
    }
    if plethysm(g, &h)? != p1 {
        return Err(Error::consistency("g o h != p_1 for the plethystic inverse"));
    }
    Ok(h)
}
