//! Acceptance criteria 1–7. Prints one line per criterion and exits nonzero
//! if any of them fails or runs over its time limit.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::golden::{expected_closed_rank_one, expected_closed_rank_two, expected_composed, expected_open_rank_two};
use common::{qp, random_series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wreathcoh::cohomology::{
    betti, closed_series, closed_series_r1, closed_series_r1_fixpoint, closed_series_r1_inverse, e_plus_inverse,
    e_species_series, keel_rhs, open_affine_series, open_composed_closed, open_natural_closed_form,
    open_projective_series, trace_open_product, yuzvinsky_product, ESpeciesPart, SpaceKind,
};
use wreathcoh::plethysm::{plethysm, plethysm_ws, plethystic_inverse};
use wreathcoh::reps::{
    character_table, decompose, dimension, enumerate_classes, group_order, in_natural_polys, inner_product_cyclo,
    s4_labels, series_to_traces, ClassData, Partition,
};
use wreathcoh::trees::{enumerate_trees, verify_tree_recursions};
use wreathcoh::{CoeffPoly, Cyclotomic, Monomial, NaturalSeries, Rational, WreathSeries};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, u64);

const CASES: usize = 100;
const SEED: u64 = 0x5eed_2024;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn golden_reproduction() -> Check {
    ensure_eq("P(2)", open_projective_series(2, 3).map_err(e)?, expected_open_rank_two())?;
    ensure_eq("Pbar(1)", closed_series_r1(3).map_err(e)?, expected_closed_rank_one())?;
    ensure_eq("P(2) o Pbar(1)", open_composed_closed(2, 3).map_err(e)?, expected_composed())?;
    ensure_eq("Pbar(2)", closed_series(2, 3).map_err(e)?, expected_closed_rank_two())
}

fn second_cohomology() -> Check {
    let closed = closed_series(2, 3).map_err(e)?;
    let traces = series_to_traces(&closed, 3).map_err(e)?;
    for (spec, want) in [("1:0^3", 8), ("1:0^1,2:0^1", 4), ("3:0^1", 2)] {
        let w = ClassData::parse(2, spec).map_err(e)?;
        let h2 = traces.values[&w].coeff(1);
        ensure_eq(&format!("trace on H^2 at {spec}"), h2, Rational::from_integer(want.into()))?;
    }
    ensure_eq("dim H^2", betti(2, 3, SpaceKind::Closed).map_err(e)?[1], 8)?;

    let labels = s4_labels().map_err(e)?;
    let table = character_table(2, 3).map_err(e)?;
    let mut found: Vec<(Partition, Rational, Rational)> = Vec::new();
    for (label, m) in decompose(&closed, 2, 3).map_err(e)? {
        let nu = labels.get(&label).ok_or_else(|| format!("{label} does not factor through S4"))?;
        let chi = &table.iter().find(|(l, _)| *l == label).expect("label from the table").1;
        let dim = dimension(chi, 3).ok_or("missing dimension")?;
        found.push((nu.clone(), m.coeff(1), dim));
    }
    found.sort();
    let r = |v: i64| Rational::from_integer(v.into());
    let want = vec![
        (Partition::new(vec![2, 2]), r(1), r(2)),
        (Partition::new(vec![3, 1]), r(1), r(3)),
        (Partition::new(vec![4]), r(3), r(1)),
    ];
    ensure_eq("H^2 as an S4 representation (label, multiplicity, dimension)", found.clone(), want)?;
    let total: Rational = found.iter().map(|(_, m, d)| m * d).sum();
    ensure_eq("sum of multiplicity times dimension", total, r(8))
}

fn tree_counts() -> Check {
    for (r, n, want) in [(1, 3, 4), (2, 1, 1), (2, 2, 5), (2, 3, 47)] {
        ensure_eq(&format!("|T({r},{n})|"), enumerate_trees(r, n).map_err(e)?.len(), want)?;
    }
    for (r, n) in [(1, 5), (2, 3)] {
        let report = verify_tree_recursions(r, n).map_err(e)?;
        ensure(report.passed(), || report.to_string())?;
    }
    Ok(())
}

fn dual_routes() -> Check {
    ensure_eq(
        "closed rank-one routes",
        closed_series_r1_fixpoint(6).map_err(e)?,
        closed_series_r1_inverse(6).map_err(e)?,
    )?;
    for r in 1..=3u32 {
        let affine = open_affine_series(r, 4).map_err(e)?;
        for n in 0..=4 {
            let traces = series_to_traces(&affine, n).map_err(e)?;
            for w in enumerate_classes(r, n) {
                ensure_eq(&format!("r={r} class {w}"), trace_open_product(&w), traces.values[&w].clone())?;
            }
        }
    }
    Ok(())
}

fn non_equivariant_oracles() -> Check {
    for r in 1..=3 {
        let nat = open_projective_series(r, 8).map_err(e)?.natural_spec();
        ensure_eq(&format!("open r={r}"), nat, open_natural_closed_form(r, 8).map_err(e)?)?;
    }
    let closed1 = closed_series(1, 8).map_err(e)?.natural_spec();
    ensure_eq("Keel recursion", keel_rhs(&closed1).map_err(e)?, closed1.clone())?;
    let closed2 = closed_series(2, 8).map_err(e)?.natural_spec();
    ensure_eq("Yuzvinsky product", yuzvinsky_product(2, &closed2, &closed1).map_err(e)?, NaturalSeries::one(8))
}

fn with_constant(f: &WreathSeries, c: CoeffPoly) -> WreathSeries {
    let mut out = f.drop_below(1);
    out.add_term(Monomial::one(), c);
    out
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let e_plus = e_species_series(1, ESpeciesPart::Plus, 8).map_err(e)?;
    let e_plus_inv = e_plus_inverse(8).map_err(e)?;
    ensure_eq("plethystic inverse of E_+", plethystic_inverse(&e_plus).map_err(e)?, e_plus_inv.clone())?;
    for case in 0..CASES {
        let fail = |what: &str| format!("{what}, case {case}");
        let r = rng.gen_range(1..=3);
        let [f, g, h] = [0, 1, 2].map(|_| random_series(&mut rng, r, 4, 0, 5));
        let ring_ok = f.add(&g).map_err(e)? == g.add(&f).map_err(e)?
            && f.mul(&g).map_err(e)? == g.mul(&f).map_err(e)?
            && f.mul(&g).map_err(e)?.mul(&h).map_err(e)? == f.mul(&g.mul(&h).map_err(e)?).map_err(e)?
            && f.mul(&g.add(&h).map_err(e)?).map_err(e)?
                == f.mul(&g).map_err(e)?.add(&f.mul(&h).map_err(e)?).map_err(e)?
            && f.mul(&WreathSeries::one(r, 4)).map_err(e)? == f;
        ensure(ring_ok, || fail("ring axioms"))?;

        let f = random_series(&mut rng, 2, 4, 1, 5);
        let g = with_constant(&f, CoeffPoly::one());
        let exp_log_ok = f.exp().map_err(e)?.log().map_err(e)? == f && g.log().map_err(e)?.exp().map_err(e)? == g;
        ensure(exp_log_ok, || fail("exp/log"))?;

        let f = random_series(&mut rng, 2, 4, 0, 4);
        let (g, h) = (random_series(&mut rng, 1, 4, 1, 3), random_series(&mut rng, 1, 4, 1, 3));
        let lhs = plethysm_ws(&plethysm_ws(&f, &g).map_err(e)?, &h).map_err(e)?;
        let rhs = plethysm_ws(&f, &plethysm(&g, &h).map_err(e)?).map_err(e)?;
        ensure(lhs == rhs, || fail("mixed associativity"))?;

        let f = random_series(&mut rng, r, 5, 0, 5);
        let g = random_series(&mut rng, 1, 5, 1, 4);
        let lhs = plethysm_ws(&f, &g).map_err(e)?.natural_spec();
        let rhs = f.natural_spec().compose(&g.natural_spec()).map_err(e)?;
        ensure(lhs == rhs, || fail("natural specialization"))?;

        let g = random_series(&mut rng, 1, 5, 2, 5).add(&WreathSeries::p1(5)).map_err(e)?;
        let inv = plethystic_inverse(&g).map_err(e)?;
        let inverse_ok =
            plethysm(&g, &inv).map_err(e)? == WreathSeries::p1(5) && plethystic_inverse(&inv).map_err(e)? == g;
        ensure(inverse_ok, || fail("plethystic inverse involution"))?;

        let f = random_series(&mut rng, 1, 8, 1, 3);
        let back = plethysm(&e_plus, &plethysm(&e_plus_inv, &f).map_err(e)?).map_err(e)?;
        ensure(back == f, || fail("E_+ composed with its logarithmic inverse"))?;
    }
    Ok(())
}

fn representation_soundness() -> Check {
    for r in 1..=3u32 {
        for n in 0..=4usize {
            let table = character_table(r, n).map_err(e)?;
            let mut squares = Rational::from_integer(0.into());
            for (i, (a, chi)) in table.iter().enumerate() {
                for (j, (b, psi)) in table.iter().enumerate() {
                    let want = if i == j { Cyclotomic::one(r) } else { Cyclotomic::zero(r) };
                    ensure_eq(&format!("<{a}, {b}>"), inner_product_cyclo(chi, psi, n).map_err(e)?, want)?;
                }
                let d = dimension(chi, n).ok_or_else(|| format!("{a} has no dimension"))?;
                squares += &d * &d;
            }
            ensure_eq(&format!("sum of squares r={r} n={n}"), squares, Rational::from_integer(group_order(r, n)))?;
        }
    }
    for r in 1..=2u32 {
        let closed = closed_series(r, 4).map_err(e)?;
        for n in 1..=4 {
            for (label, m) in decompose(&closed, r, n).map_err(e)? {
                ensure(in_natural_polys(&m), || format!("r={r} n={n} {label}: {m}"))?;
            }
        }
    }
    for r in 1..=3u32 {
        for n in 1..=5 {
            let b = betti(r, n, SpaceKind::Closed).map_err(e)?;
            let mut rev = b.clone();
            rev.reverse();
            ensure(b == rev && b.iter().all(|&x| x > 0), || format!("betti r={r} n={n}: {b:?}"))?;
        }
    }
    let d3: Vec<_> = decompose(&closed_series_r1(3).map_err(e)?, 1, 3).map_err(e)?.into_values().collect();
    ensure_eq("closed r=1 n=3 multiplicities", d3, vec![qp(&[1, 1], 1)])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden low-degree series", golden_reproduction, 1),
        ("second cohomology of the closed rank-two degree-3 space", second_cohomology, 1),
        ("tree counts and species recursions", tree_counts, 30),
        ("dual computation routes", dual_routes, 60),
        ("non-equivariant closed forms", non_equivariant_oracles, 60),
        ("randomized property suites", property_suites, u64::MAX),
        ("representation-theoretic soundness", representation_soundness, 120),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit_text = if limit == u64::MAX { "none".to_string() } else { format!("{limit} s") };
        let result = result.and_then(|()| {
            ensure(elapsed < Duration::from_secs(limit), || format!("took {elapsed:.2?}, limit {limit_text}"))
        });
        match result {
            Ok(()) => println!("criterion {}: PASS {name} ({elapsed:.2?}, limit {limit_text})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}, limit {limit_text}): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
