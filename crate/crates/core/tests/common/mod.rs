//! Shared fixtures, random generators and brute-force oracles for the
//! integration tests. The oracles only use scalar arithmetic and plain
//! enumeration; they never call the determinant or solver modules.

#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use semisolve::{rational, ExactMatrix, ExactScalar, ExactVector, Flavor, Scalar};

pub fn q(n: i64, d: i64) -> ExactScalar {
    Scalar::Value(rational(n, d))
}

pub fn int(n: i64) -> ExactScalar {
    q(n, 1)
}

pub fn ints(f: Flavor, rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::new(
        f,
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn int_vec(f: Flavor, v: &[i64]) -> ExactVector {
    ExactVector::new(f, v.iter().map(|&x| int(x)).collect()).unwrap()
}

pub fn scalars(f: Flavor, rows: &[&[ExactScalar]]) -> ExactMatrix {
    ExactMatrix::new(f, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn example_3_1() -> (ExactMatrix, ExactVector) {
    let f = Flavor::MaxTimes;
    (
        ints(
            f,
            &[&[5, 7, 9, 10], &[4, 2, 0, 7], &[3, 0, 3, 5], &[1, 8, 1, 6]],
        ),
        int_vec(f, &[27, 16, 12, 24]),
    )
}

pub fn example_4_4() -> (ExactMatrix, ExactVector) {
    let f = Flavor::MinTimes;
    (
        ints(
            f,
            &[&[1, 6, 9, 8], &[6, 2, 7, 5], &[9, 7, 1, 7], &[8, 5, 6, 3]],
        ),
        int_vec(f, &[4, 6, 1, 6]),
    )
}

/// A small rational in the carrier of `f`, or the zero with probability
/// `zero_prob`.
pub fn random_scalar<R: Rng>(rng: &mut R, f: Flavor, zero_prob: f64) -> ExactScalar {
    if rng.random_bool(zero_prob) {
        return Scalar::Zero;
    }
    let d = rng.random_range(1..=3);
    let n = if f.is_additive() {
        rng.random_range(-6..=6)
    } else {
        rng.random_range(1..=9)
    };
    q(n, d)
}

pub fn random_nonzero<R: Rng>(rng: &mut R, f: Flavor) -> ExactScalar {
    random_scalar(rng, f, 0.0)
}

pub fn random_matrix<R: Rng>(
    rng: &mut R,
    f: Flavor,
    m: usize,
    n: usize,
    zero_prob: f64,
) -> ExactMatrix {
    let rows = (0..m)
        .map(|_| (0..n).map(|_| random_scalar(rng, f, zero_prob)).collect())
        .collect();
    ExactMatrix::new(f, rows).unwrap()
}

pub fn random_vector<R: Rng>(rng: &mut R, f: Flavor, n: usize, zero_prob: f64) -> ExactVector {
    ExactVector::new(
        f,
        (0..n).map(|_| random_scalar(rng, f, zero_prob)).collect(),
    )
    .unwrap()
}

/// ⊕ over all permutations of the diagonal products, by plain enumeration.
pub fn brute_permanent(a: &ExactMatrix) -> ExactScalar {
    let f = a.flavor();
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut acc = Scalar::Zero;
    for sigma in (0..n).permutations(n) {
        let mut p = f.one();
        for (i, &j) in sigma.iter().enumerate() {
            p = f.mul(&p, a.get(i, j)).unwrap();
        }
        acc = f.add(&acc, &p).unwrap();
    }
    acc
}

/// Plain row-by-column evaluation of `A ⊗ x`.
pub fn brute_apply(a: &ExactMatrix, x: &[ExactScalar]) -> Vec<ExactScalar> {
    let f = a.flavor();
    (0..a.rows())
        .map(|i| {
            (0..a.cols()).fold(Scalar::Zero, |acc, j| {
                f.add(&acc, &f.mul(a.get(i, j), &x[j]).unwrap()).unwrap()
            })
        })
        .collect()
}

/// Every solution on the grid of tight values `b_i ⊗ a_ij⁻¹` (zero when a
/// column has no nonzero entry). Whenever the system is solvable its greatest
/// solution lies on this grid.
pub fn grid_solutions(a: &ExactMatrix, b: &ExactVector) -> Vec<Vec<ExactScalar>> {
    let f = a.flavor();
    let grid: Vec<Vec<ExactScalar>> = (0..a.cols())
        .map(|j| {
            let mut vals: Vec<ExactScalar> = (0..a.rows())
                .filter(|&i| !a.get(i, j).is_zero())
                .map(|i| f.div(b.get(i), a.get(i, j)).unwrap())
                .collect();
            vals.dedup();
            if vals.is_empty() {
                vals.push(Scalar::Zero);
            }
            vals
        })
        .collect();
    grid.into_iter()
        .multi_cartesian_product()
        .filter(|c| brute_apply(a, c) == b.entries())
        .collect()
}

pub fn example_3_1_product() -> ExactMatrix {
    scalars(
        Flavor::MaxTimes,
        &[
            &[int(1), q(10, 7), q(40, 21), q(7, 8)],
            &[q(4, 9), int(1), q(4, 3), q(7, 18)],
            &[q(1, 3), q(5, 7), int(1), q(7, 24)],
            &[q(8, 21), q(6, 7), q(8, 7), int(1)],
        ],
    )
}

pub fn example_3_1_pseudo_inverse() -> ExactMatrix {
    scalars(
        Flavor::MaxTimes,
        &[
            &[q(1, 9), q(5, 21), q(1, 3), q(7, 72)],
            &[q(1, 21), q(3, 28), q(1, 7), q(1, 8)],
            &[q(1, 9), q(10, 63), q(40, 189), q(7, 72)],
            &[q(4, 63), q(1, 7), q(4, 21), q(1, 18)],
        ],
    )
}

/// Printed ratio matrix of the max-times example, Top at (2,3) and (3,2).
pub fn example_4_2_ratio() -> Vec<Vec<ExactScalar>> {
    vec![
        vec![q(27, 5), q(27, 7), int(3), q(27, 10)],
        vec![int(4), int(8), Scalar::Top, q(16, 7)],
        vec![int(4), Scalar::Top, int(4), q(12, 5)],
        vec![int(24), int(3), int(24), int(4)],
    ]
}

pub fn example_4_4_ratio() -> Vec<Vec<ExactScalar>> {
    vec![
        vec![int(4), q(2, 3), q(4, 9), q(1, 2)],
        vec![int(1), int(3), q(6, 7), q(6, 5)],
        vec![q(1, 9), q(1, 7), int(1), q(1, 7)],
        vec![q(3, 4), q(6, 5), int(1), int(2)],
    ]
}
