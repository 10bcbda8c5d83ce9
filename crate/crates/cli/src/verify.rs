//! Randomized and exhaustive self-checks grouped into suites.

use std::collections::BTreeMap;
use std::fmt;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wreathcoh::cohomology::{
    closed_series, closed_series_r1_fixpoint, closed_series_r1_inverse, e_plus_inverse, e_species_series, keel_rhs,
    open_affine_series, open_natural_closed_form, open_projective_series, trace_open_product, yuzvinsky_product,
    ESpeciesPart, SpaceKind,
};
use wreathcoh::plethysm::{plethysm, plethysm_ws, plethystic_inverse};
use wreathcoh::rational::rat;
use wreathcoh::reps::{
    character_table, characteristic, decompose, dimension, enumerate_classes, group_order, in_natural_polys,
    inner_product_cyclo, series_to_traces, ClassFunctionTable, WreathElement,
};
use wreathcoh::trees::{fixed_tree_count_of, size_limit, verify_tree_recursions};
use wreathcoh::{CoeffPoly, Cyclotomic, Error, Generator, Monomial, NaturalSeries, Rational, WreathSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Plethysm,
    Wreath,
    Cohomology,
    Trees,
    All,
}

impl Suite {
    fn parts(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Algebra, Suite::Plethysm, Suite::Wreath, Suite::Cohomology, Suite::Trees],
            Suite::Algebra => &[Suite::Algebra],
            Suite::Plethysm => &[Suite::Plethysm],
            Suite::Wreath => &[Suite::Wreath],
            Suite::Cohomology => &[Suite::Cohomology],
            Suite::Trees => &[Suite::Trees],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

pub struct Options {
    pub max_degree: usize,
    pub cases: usize,
    pub seed: u64,
}

#[derive(Default)]
pub struct Summary {
    pub failed: usize,
    pub consistency: usize,
}

/// `Ok(None)` on success, `Ok(Some(detail))` on a mismatch.
type Outcome = Result<Option<String>, Error>;

fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(detail()) })
}

fn check_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    check(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

struct Runner {
    summary: Summary,
}

impl Runner {
    fn run(&mut self, suite: Suite, name: &str, body: impl FnOnce() -> Outcome) {
        match body() {
            Ok(None) => println!("PASS {suite}/{name}"),
            Ok(Some(detail)) => {
                self.summary.failed += 1;
                println!("FAIL {suite}/{name}: {detail}");
            }
            Err(err @ (Error::Consistency(_) | Error::NotACharacter(_))) => {
                self.summary.consistency += 1;
                println!("FAIL {suite}/{name}: {err}");
            }
            Err(err) => {
                self.summary.failed += 1;
                println!("FAIL {suite}/{name}: {err}");
            }
        }
    }
}

pub fn run(suite: Suite, opts: &Options) -> Summary {
    let mut runner = Runner { summary: Summary::default() };
    for &part in suite.parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        match part {
            Suite::Algebra => algebra(&mut runner, &mut rng, opts),
            Suite::Plethysm => plethysms(&mut runner, &mut rng, opts),
            Suite::Wreath => wreath(&mut runner, &mut rng, opts),
            Suite::Cohomology => cohomology(&mut runner, opts),
            Suite::Trees => trees(&mut runner, &mut rng, opts),
            Suite::All => unreachable!(),
        }
    }
    runner.summary
}

fn random_poly(rng: &mut ChaCha8Rng) -> CoeffPoly {
    let coeffs: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-3..=3)).collect();
    CoeffPoly::from_ints(&coeffs).scale(&rat(1, rng.gen_range(1..=4)))
}

fn random_series(rng: &mut ChaCha8Rng, r: u32, truncation: usize, min_degree: usize, max_terms: usize) -> WreathSeries {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let target = rng.gen_range(min_degree..=truncation);
        let mut factors = Vec::new();
        let mut d = 0;
        while d < target {
            let i = rng.gen_range(1..=target - d);
            factors.push((Generator::new(i as u32, rng.gen_range(0..r)), 1));
            d += i;
        }
        terms.push((Monomial::from_factors(factors), random_poly(rng)));
    }
    WreathSeries::from_terms(r, truncation, terms).expect("degrees within truncation")
}

fn with_constant(f: &WreathSeries, c: CoeffPoly) -> WreathSeries {
    let mut out = f.drop_below(1);
    out.add_term(Monomial::one(), c);
    out
}

fn random_element(rng: &mut ChaCha8Rng, r: u32, n: usize) -> Result<WreathElement, Error> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let colors = (0..n).map(|_| rng.gen_range(0..r)).collect();
    WreathElement::new(r, perm, colors)
}

/// Runs `body` on `cases` random inputs, stopping at the first mismatch.
fn cases(rng: &mut ChaCha8Rng, count: usize, mut body: impl FnMut(&mut ChaCha8Rng) -> Outcome) -> Outcome {
    for case in 0..count {
        if let Some(detail) = body(rng)? {
            return Ok(Some(format!("case {case}: {detail}")));
        }
    }
    Ok(None)
}

fn algebra(run: &mut Runner, rng: &mut ChaCha8Rng, opts: &Options) {
    let n = opts.max_degree.min(5);
    let s = Suite::Algebra;
    run.run(s, "ring-axioms", || {
        cases(rng, opts.cases, |rng| {
            let r = rng.gen_range(1..=3);
            let [f, g, h] = [0, 1, 2].map(|_| random_series(rng, r, n, 0, 5));
            let ok = f.add(&g)? == g.add(&f)?
                && f.mul(&g)? == g.mul(&f)?
                && f.mul(&g)?.mul(&h)? == f.mul(&g.mul(&h)?)?
                && f.mul(&g.add(&h)?)? == f.mul(&g)?.add(&f.mul(&h)?)?
                && f.mul(&WreathSeries::one(r, n))? == f;
            check(ok, || format!("r={r}"))
        })
    });
    run.run(s, "exp-log-inverse", || {
        cases(rng, opts.cases, |rng| {
            let f = random_series(rng, 2, n, 1, 5);
            let g = with_constant(&f, CoeffPoly::one());
            check(f.exp()?.log()? == f && g.log()?.exp()? == g, || f.render())
        })
    });
    run.run(s, "multiplicative-inverse", || {
        cases(rng, opts.cases, |rng| {
            let c = rng.gen_range(1..5);
            let g = with_constant(&random_series(rng, 2, n, 1, 5), CoeffPoly::from_int(c));
            check(g.mul(&g.invert()?)? == WreathSeries::one(2, n), || g.render())
        })
    });
    run.run(s, "natural-specialization", || {
        cases(rng, opts.cases, |rng| {
            let (f, g) = (random_series(rng, 2, n, 0, 5), random_series(rng, 2, n, 0, 5));
            let ok = f.mul(&g)?.natural_spec() == f.natural_spec().mul(&g.natural_spec())
                && f.add(&g)?.natural_spec() == f.natural_spec().add(&g.natural_spec());
            check(ok, || f.render())
        })
    });
}

fn plethysms(run: &mut Runner, rng: &mut ChaCha8Rng, opts: &Options) {
    let n = opts.max_degree.min(5);
    let s = Suite::Plethysm;
    run.run(s, "mixed-associativity", || {
        cases(rng, opts.cases, |rng| {
            let f = random_series(rng, 2, n, 0, 4);
            let (g, h) = (random_series(rng, 1, n, 1, 3), random_series(rng, 1, n, 1, 3));
            let ok = plethysm_ws(&plethysm_ws(&f, &g)?, &h)? == plethysm_ws(&f, &plethysm(&g, &h)?)?;
            check(ok, || f.render())
        })
    });
    run.run(s, "natural-specialization", || {
        cases(rng, opts.cases, |rng| {
            let r = rng.gen_range(1..=3);
            let (f, g) = (random_series(rng, r, n, 0, 5), random_series(rng, 1, n, 1, 4));
            let ok = plethysm_ws(&f, &g)?.natural_spec() == f.natural_spec().compose(&g.natural_spec())?;
            check(ok, || f.render())
        })
    });
    run.run(s, "inverse-involution", || {
        cases(rng, opts.cases, |rng| {
            let g = random_series(rng, 1, n, 2, 5).add(&WreathSeries::p1(n))?;
            let h = plethystic_inverse(&g)?;
            check(plethysm(&g, &h)? == WreathSeries::p1(n) && plethystic_inverse(&h)? == g, || g.render())
        })
    });
    run.run(s, "logarithmic-inverse", || {
        let e_plus = e_species_series(1, ESpeciesPart::Plus, opts.max_degree)?;
        let want = e_plus_inverse(opts.max_degree)?;
        check(plethystic_inverse(&e_plus)? == want, || "inverse of E_+".into())
    });
}

fn wreath(run: &mut Runner, rng: &mut ChaCha8Rng, opts: &Options) {
    let max_n = opts.max_degree.min(4);
    let s = Suite::Wreath;
    run.run(s, "orthonormal-irreducibles", || {
        for r in 1..=3 {
            for n in 0..=max_n {
                let table = character_table(r, n)?;
                let mut squares = Rational::from_integer(0.into());
                for (i, (a, chi)) in table.iter().enumerate() {
                    for (j, (b, psi)) in table.iter().enumerate() {
                        let want = if i == j { Cyclotomic::one(r) } else { Cyclotomic::zero(r) };
                        if let Some(d) = check_eq(&format!("<{a}, {b}>"), inner_product_cyclo(chi, psi, n)?, want)? {
                            return Ok(Some(d));
                        }
                    }
                    let d = dimension(chi, n).ok_or_else(|| Error::Consistency(format!("{a} has no dimension")))?;
                    squares += &d * &d;
                }
                let order = Rational::from_integer(group_order(r, n));
                if let Some(d) = check_eq(&format!("sum of squares r={r} n={n}"), squares, order)? {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    });
    run.run(s, "characteristic-round-trip", || {
        cases(rng, opts.cases, |rng| {
            let (r, n) = (rng.gen_range(1..=3), rng.gen_range(0..=max_n.min(3)));
            let values: BTreeMap<_, _> = enumerate_classes(r, n).into_iter().map(|w| (w, random_poly(rng))).collect();
            let table = ClassFunctionTable { r, n, values };
            check(series_to_traces(&characteristic(&table), n)? == table, || format!("r={r} n={n}"))
        })
    });
}

fn cohomology(run: &mut Runner, opts: &Options) {
    let top = opts.max_degree;
    let s = Suite::Cohomology;
    run.run(s, "closed-rank-one-routes", || {
        check(closed_series_r1_fixpoint(top)? == closed_series_r1_inverse(top)?, || format!("degree {top}"))
    });
    run.run(s, "falling-factorial-traces", || {
        for r in 1..=3 {
            let affine = open_affine_series(r, top.min(4))?;
            for n in 0..=top.min(4) {
                let traces = series_to_traces(&affine, n)?;
                for w in enumerate_classes(r, n) {
                    if let Some(d) = check_eq(&format!("r={r} {w}"), trace_open_product(&w), traces.values[&w].clone())?
                    {
                        return Ok(Some(d));
                    }
                }
            }
        }
        Ok(None)
    });
    run.run(s, "open-closed-forms", || {
        for r in 1..=3 {
            let nat = open_projective_series(r, top)?.natural_spec();
            if let Some(d) = check_eq(&format!("r={r}"), nat, open_natural_closed_form(r, top)?)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    });
    run.run(s, "keel-recursion", || {
        let p = closed_series(1, top)?.natural_spec();
        check_eq("closed r=1", keel_rhs(&p)?, p)
    });
    run.run(s, "yuzvinsky-identity", || {
        let closed1 = closed_series(1, top)?.natural_spec();
        for r in 2..=3 {
            let closed = closed_series(r, top)?.natural_spec();
            let got = yuzvinsky_product(r, &closed, &closed1)?;
            if let Some(d) = check_eq(&format!("r={r}"), got, NaturalSeries::one(top))? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    });
    run.run(s, "palindromic-closed-traces", || {
        for r in 1..=3 {
            let closed = closed_series(r, top.min(5))?;
            for n in 1..=top.min(5) {
                let dim = SpaceKind::Closed.dimension(r, n).expect("closed spaces are nonempty");
                for (w, t) in series_to_traces(&closed, n)?.values {
                    if !t.is_palindromic(dim) {
                        return Ok(Some(format!("r={r} n={n} {w}: {t}")));
                    }
                }
            }
        }
        Ok(None)
    });
    run.run(s, "natural-multiplicities", || {
        for r in 1..=2 {
            let closed = closed_series(r, top.min(4))?;
            for n in 1..=top.min(4) {
                for (label, m) in decompose(&closed, r, n)? {
                    if !in_natural_polys(&m) {
                        return Ok(Some(format!("r={r} n={n} {label}: {m}")));
                    }
                }
            }
        }
        Ok(None)
    });
}

fn trees(run: &mut Runner, rng: &mut ChaCha8Rng, opts: &Options) {
    let s = Suite::Trees;
    for r in 1..=3 {
        let n = opts.max_degree.min(size_limit(r));
        run.run(s, &format!("species-recursions-r{r}"), || {
            let report = verify_tree_recursions(r, n)?;
            check(report.passed(), || report.to_string())
        });
    }
    run.run(s, "fixed-counts-on-conjugates", || {
        cases(rng, opts.cases, |rng| {
            let (r, n) = (rng.gen_range(1..=2), rng.gen_range(1..=3));
            let w = random_element(rng, r, n)?;
            let g = random_element(rng, r, n)?;
            let conj = g.compose(&w).compose(&g.inverse());
            let ok = fixed_tree_count_of(r, n, &w)? == fixed_tree_count_of(r, n, &conj)?;
            check(ok, || format!("r={r} {}", w.class()))
        })
    });
}
