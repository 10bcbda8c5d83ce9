//! Low-degree series compared exactly against hand-entered values.

mod common;

use common::golden::{expected_closed_rank_one, expected_closed_rank_two, expected_composed, expected_open_rank_two};
use common::qp;
use wreathcoh::cohomology::{closed_series, closed_series_r1, open_composed_closed, open_projective_series};
use wreathcoh::reps::{decompose, s4_labels, series_to_traces, ClassData, MultiPartition, Partition};
use wreathcoh::WreathSeries;

#[test]
fn open_rank_two_through_degree_three() {
    assert_eq!(open_projective_series(2, 3).unwrap(), expected_open_rank_two());
}

#[test]
fn closed_rank_one_through_degree_three() {
    assert_eq!(closed_series_r1(3).unwrap(), expected_closed_rank_one());
}

#[test]
fn composed_series_through_degree_three() {
    assert_eq!(open_composed_closed(2, 3).unwrap(), expected_composed());
}

#[test]
fn closed_rank_two_through_degree_three() {
    assert_eq!(closed_series(2, 3).unwrap(), expected_closed_rank_two());
}

#[test]
fn closed_rank_two_is_inverse_of_one_minus_composed() {
    let one = WreathSeries::one(2, 3);
    let lhs = one.add(&expected_closed_rank_two()).unwrap();
    let rhs = one.sub(&expected_composed()).unwrap();
    assert_eq!(lhs.mul(&rhs).unwrap(), one);
}

#[test]
fn stable_under_the_central_involution() {
    // −1 swaps x_i and y_i for odd i and fixes them for even i
    let swap = |f: &WreathSeries| {
        let terms = f.terms().map(|(m, c)| {
            let factors = m.factors().iter().map(|&(g, e)| {
                let zeta = if g.index % 2 == 1 { 1 - g.zeta } else { g.zeta };
                (wreathcoh::Generator::new(g.index, zeta), e)
            });
            (wreathcoh::Monomial::from_factors(factors), c.clone())
        });
        WreathSeries::from_terms(2, f.truncation(), terms).unwrap()
    };
    for f in [open_projective_series(2, 5).unwrap(), open_composed_closed(2, 5).unwrap(), closed_series(2, 5).unwrap()]
    {
        assert_eq!(swap(&f), f);
    }
}

#[test]
fn second_cohomology_traces() {
    let traces = series_to_traces(&closed_series(2, 3).unwrap(), 3).unwrap();
    let trace = |spec: &str| traces.values[&ClassData::parse(2, spec).unwrap()].clone();
    assert_eq!(trace("1:0^3"), qp(&[1, 8, 1], 1));
    assert_eq!(trace("1:0^1,2:0^1"), qp(&[1, 4, 1], 1));
    assert_eq!(trace("3:0^1"), qp(&[1, 2, 1], 1));
}

#[test]
fn second_cohomology_as_an_s4_representation() {
    let mults = decompose(&closed_series(2, 3).unwrap(), 2, 3).unwrap();
    let labels = s4_labels().unwrap();
    let mut s4: Vec<(Partition, i64)> = mults
        .iter()
        .map(|(label, m)| {
            let nu = labels.get(label).expect("the centre acts trivially");
            (nu.clone(), m.coeff(1).to_integer().try_into().unwrap())
        })
        .collect();
    s4.sort();
    assert_eq!(
        s4,
        vec![(Partition::new(vec![2, 2]), 1), (Partition::new(vec![3, 1]), 1), (Partition::new(vec![4]), 3),]
    );
    let bip = |a: Vec<u32>, b: Vec<u32>| MultiPartition::new(vec![Partition::new(a), Partition::new(b)]);
    assert_eq!(mults[&bip(vec![3], vec![])], qp(&[1, 3, 1], 1));
}
