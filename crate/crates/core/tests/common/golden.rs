//! Rank-two and rank-one series through degree 3, entered by hand.

use super::{qp, series, x, y, Term};
use wreathcoh::{CoeffPoly, WreathSeries};

fn sq(g: (u32, u32, u32)) -> (u32, u32, u32) {
    (g.0, g.1, 2)
}

fn cube(g: (u32, u32, u32)) -> (u32, u32, u32) {
    (g.0, g.1, 3)
}

type Group<'a> = (CoeffPoly, &'a [&'a [(u32, u32, u32)]]);

/// Builds a rank-two series from groups sharing a coefficient.
fn grouped(groups: &[Group]) -> WreathSeries {
    let terms: Vec<Term> = groups.iter().flat_map(|(c, monos)| monos.iter().map(move |m| (*m, c.clone()))).collect();
    series(2, 3, &terms)
}

pub fn expected_open_rank_two() -> WreathSeries {
    grouped(&[
        (qp(&[1], 2), &[&[x(1)], &[y(1)]]),
        (qp(&[-3, 1], 8), &[&[sq(x(1))], &[sq(y(1))]]),
        (qp(&[-1, 1], 4), &[&[x(1), y(1)], &[x(2)]]),
        (qp(&[1, 1], 4), &[&[y(2)]]),
        (qp(&[15, -8, 1], 48), &[&[cube(x(1))], &[cube(y(1))]]),
        (qp(&[3, -4, 1], 16), &[&[sq(x(1)), y(1)], &[x(1), sq(y(1))]]),
        (qp(&[-1, 0, 1], 8), &[&[x(1), y(2)], &[y(1), y(2)]]),
        (qp(&[1, -2, 1], 8), &[&[x(1), x(2)], &[x(2), y(1)]]),
        (qp(&[0, 1, 1], 6), &[&[x(3)], &[y(3)]]),
    ])
}

pub fn expected_composed() -> WreathSeries {
    grouped(&[
        (qp(&[1], 2), &[&[x(1)], &[y(1)]]),
        (qp(&[-1, 1], 8), &[&[sq(x(1))], &[sq(y(1))]]),
        (qp(&[-1, 1], 4), &[&[x(1), y(1)]]),
        (qp(&[1, 1], 4), &[&[x(2)], &[y(2)]]),
        (qp(&[1, 2, 1], 48), &[&[cube(x(1))], &[cube(y(1))]]),
        (qp(&[1, -2, 1], 16), &[&[sq(x(1)), y(1)], &[x(1), sq(y(1))]]),
        (qp(&[-1, 0, 1], 8), &[&[x(1), y(2)], &[y(1), y(2)]]),
        (qp(&[-1, 2, 1], 8), &[&[x(1), x(2)], &[x(2), y(1)]]),
        (qp(&[1, 2, 1], 6), &[&[x(3)], &[y(3)]]),
    ])
}

pub fn expected_closed_rank_two() -> WreathSeries {
    grouped(&[
        (qp(&[1], 2), &[&[x(1)], &[y(1)]]),
        (qp(&[1, 1], 8), &[&[sq(x(1))], &[sq(y(1))]]),
        (qp(&[1, 1], 4), &[&[x(1), y(1)], &[x(2)], &[y(2)]]),
        (qp(&[1, 8, 1], 48), &[&[cube(x(1))], &[cube(y(1))]]),
        (qp(&[1, 4, 1], 16), &[&[sq(x(1)), y(1)], &[x(1), sq(y(1))]]),
        (qp(&[1, 2, 1], 8), &[&[x(1), y(2)], &[y(1), y(2)]]),
        (qp(&[1, 4, 1], 8), &[&[x(1), x(2)], &[x(2), y(1)]]),
        (qp(&[1, 2, 1], 6), &[&[x(3)], &[y(3)]]),
    ])
}

pub fn expected_closed_rank_one() -> WreathSeries {
    let p = |i: u32, e: u32| (i, 0, e);
    series(
        1,
        3,
        &[
            (&[p(1, 1)], qp(&[1], 1)),
            (&[p(1, 2)], qp(&[1], 2)),
            (&[p(2, 1)], qp(&[1], 2)),
            (&[p(1, 3)], qp(&[1, 1], 6)),
            (&[p(1, 1), p(2, 1)], qp(&[1, 1], 2)),
            (&[p(3, 1)], qp(&[1, 1], 3)),
        ],
    )
}
