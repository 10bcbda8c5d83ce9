//! Series interchange format:
//!
//! ```json
//! {"r": 2, "truncation": 1,
//!  "terms": [{"monomial": [{"i": 1, "zeta": 0, "pow": 1}],
//!             "coeff": [[-1, 2], [1, 2]]}]}
//! ```
//!
//! `coeff` lists the rational coefficients of `q^0, q^1, …` as
//! `[numerator, denominator]`. Integers that do not fit in an `i64` are
//! written as decimal strings. Terms are written in canonical order;
//! readers accept any order and re-canonicalize.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::CoeffPoly;
use crate::rational::Rational;
use crate::series::{Generator, Monomial, WreathSeries};

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    r: u32,
    truncation: usize,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    monomial: Vec<FactorDoc>,
    coeff: Vec<[Int; 2]>,
}

#[derive(Serialize, Deserialize)]
struct FactorDoc {
    i: u32,
    zeta: u32,
    pow: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64().map_or_else(|| Int::Big(n.to_string()), Int::Small)
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            Int::Small(n) => Ok(BigInt::from(*n)),
            Int::Big(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        }
    }
}

fn to_doc(f: &WreathSeries) -> SeriesDoc {
    let terms = f
        .terms()
        .map(|(m, c)| TermDoc {
            monomial: m.factors().iter().map(|&(g, pow)| FactorDoc { i: g.index, zeta: g.zeta, pow }).collect(),
            coeff: c.coeffs().iter().map(|x| [Int::from_big(x.numer()), Int::from_big(x.denom())]).collect(),
        })
        .collect();
    SeriesDoc { r: f.r(), truncation: f.truncation(), terms }
}

fn from_doc(doc: SeriesDoc) -> Result<WreathSeries> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in doc.terms {
        let mut factors = Vec::with_capacity(t.monomial.len());
        for f in t.monomial {
            if f.i == 0 || f.pow == 0 {
                return Err(Error::Parse("generator index and power must be positive".into()));
            }
            if f.zeta >= doc.r {
                return Err(Error::Parse(format!("zeta {} outside [0, {})", f.zeta, doc.r)));
            }
            factors.push((Generator::new(f.i, f.zeta), f.pow));
        }
        let mono = Monomial::from_factors(factors);
        if mono.degree() > doc.truncation {
            return Err(Error::Parse(format!("term of degree {} beyond truncation {}", mono.degree(), doc.truncation)));
        }
        let mut coeffs = Vec::with_capacity(t.coeff.len());
        for [num, den] in &t.coeff {
            let den = den.to_big()?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            coeffs.push(Rational::new(num.to_big()?, den));
        }
        terms.push((mono, CoeffPoly::from_coeffs(coeffs)));
    }
    if doc.r == 0 {
        return Err(Error::Parse("r must be positive".into()));
    }
    // `from_terms` sums repeated monomials and drops zero coefficients.
    WreathSeries::from_terms(doc.r, doc.truncation, terms)
}

/// Compact single-line JSON.
pub fn to_json(f: &WreathSeries) -> String {
    serde_json::to_string(&to_doc(f)).expect("series documents always serialize")
}

/// Indented JSON.
pub fn to_json_pretty(f: &WreathSeries) -> String {
    serde_json::to_string_pretty(&to_doc(f)).expect("series documents always serialize")
}

pub fn from_json(s: &str) -> Result<WreathSeries> {
    let doc: SeriesDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_doc(doc)
}
