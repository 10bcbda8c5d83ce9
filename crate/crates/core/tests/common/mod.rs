#![allow(dead_code)]

pub mod golden;

use proptest::prelude::*;
use rand::Rng;
use wreathcoh::rational::rat;
use wreathcoh::{CoeffPoly, Generator, Monomial, WreathSeries};

/// `(num_0 + num_1 q + …)/den`.
pub fn qp(num: &[i64], den: i64) -> CoeffPoly {
    CoeffPoly::from_ints(num).scale(&rat(1, den))
}

/// Monomial from `(index, zeta, power)` triples.
pub fn mono(factors: &[(u32, u32, u32)]) -> Monomial {
    Monomial::from_factors(factors.iter().map(|&(i, k, e)| (Generator::new(i, k), e)))
}

pub fn x(i: u32) -> (u32, u32, u32) {
    (i, 0, 1)
}

pub fn y(i: u32) -> (u32, u32, u32) {
    (i, 1, 1)
}

/// A monomial as `(index, zeta, power)` triples with its coefficient.
pub type Term<'a> = (&'a [(u32, u32, u32)], CoeffPoly);

pub fn series(r: u32, truncation: usize, terms: &[Term]) -> WreathSeries {
    WreathSeries::from_terms(r, truncation, terms.iter().map(|(m, c)| (mono(m), c.clone()))).unwrap()
}

/// A random series over `r`, truncated at `truncation`, with at most
/// `max_terms` terms of degree in `min_degree..=truncation`.
pub fn random_series(
    rng: &mut impl Rng,
    r: u32,
    truncation: usize,
    min_degree: usize,
    max_terms: usize,
) -> WreathSeries {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let target = rng.gen_range(min_degree..=truncation);
        let mut factors = Vec::new();
        let mut d = 0;
        while d < target {
            let i = rng.gen_range(1..=(target - d)) as u32;
            factors.push((Generator::new(i, rng.gen_range(0..r)), 1));
            d += i as usize;
        }
        terms.push((Monomial::from_factors(factors), random_poly(rng)));
    }
    WreathSeries::from_terms(r, truncation, terms).unwrap()
}

pub fn random_poly(rng: &mut impl Rng) -> CoeffPoly {
    let len = rng.gen_range(1..=3);
    let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
    qp(&coeffs, rng.gen_range(1..=4))
}

/// Proptest strategy for series built from a seed, so that shrinking acts
/// on the seed and the structure stays valid.
pub fn arb_series(
    r: u32,
    truncation: usize,
    min_degree: usize,
    max_terms: usize,
) -> impl Strategy<Value = WreathSeries> {
    any::<u64>().prop_map(move |seed| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        random_series(&mut rng, r, truncation, min_degree, max_terms)
    })
}
