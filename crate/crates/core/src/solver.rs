//! Maximal solutions of `A ⊗ x = b` by the pseudo-inverse criterion, the
//! extended Cramer rule and the normalization (column-minimum) method, plus
//! the cross-checks between them.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::determinant::{det_eps, pseudo_inverse, PseudoInverse};
use crate::error::{Error, Result};
use crate::matvec::{Matrix, Vector};
use crate::semifield::{Coefficient, Flavor, Scalar};

/// Column count accepted by [`maximality_oracle`].
pub const ORACLE_MAX_COLS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    PseudoInverse,
    Cramer,
    Normalization,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::PseudoInverse, Method::Cramer, Method::Normalization];

    pub fn name(self) -> &'static str {
        match self {
            Method::PseudoInverse => "pseudo-inverse",
            Method::Cramer => "cramer",
            Method::Normalization => "normalization",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a method declared a system unsolvable. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `(AA⁻)_{row,col} ⊗ b_col >_S b_row`.
    ViolatedInequality { row: usize, col: usize },
    /// Row `row` of the ratio matrix hosts no column minimum.
    UncoveredRow { row: usize },
}

impl Certificate {
    /// Re-indexes the equation indices, e.g. back to an unreduced system.
    pub fn map_rows(&self, f: impl Fn(usize) -> usize) -> Certificate {
        match *self {
            Certificate::ViolatedInequality { row, col } => Certificate::ViolatedInequality {
                row: f(row),
                col: f(col),
            },
            Certificate::UncoveredRow { row } => Certificate::UncoveredRow { row: f(row) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome<T> {
    pub method: Method,
    /// The maximal solution; present iff the method found the system solvable.
    pub solution: Option<Vector<T>>,
    pub certificate: Option<Certificate>,
}

impl<T> SolveOutcome<T> {
    pub fn solvable(&self) -> bool {
        self.solution.is_some()
    }

    fn solved(method: Method, x: Vector<T>) -> Self {
        SolveOutcome {
            method,
            solution: Some(x),
            certificate: None,
        }
    }

    fn refuted(method: Method, certificate: Certificate) -> Self {
        SolveOutcome {
            method,
            solution: None,
            certificate: Some(certificate),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMinimum<T> {
    pub value: Scalar<T>,
    /// Every row attaining the minimum, ascending.
    pub rows: Vec<usize>,
}

/// The ratio matrix `Q' = (b_i ⊗ a_ij⁻¹)`, with Top where `a_ij` is zero.
///
/// `Q'` differs from the root-normalized matrix only by a nonzero factor per
/// column, so both have the same column argmin sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix<T> {
    flavor: Flavor,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar<T>>,
    minima: Vec<Option<ColumnMinimum<T>>>,
}

impl<T: Coefficient> QMatrix<T> {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar<T> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// `None` when the column is entirely Top.
    pub fn column_minimum(&self, j: usize) -> Option<&ColumnMinimum<T>> {
        self.minima[j].as_ref()
    }

    pub fn unbounded_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&j| self.minima[j].is_none())
            .collect()
    }

    pub fn row_is_covered(&self, i: usize) -> bool {
        self.minima
            .iter()
            .flatten()
            .any(|m| m.rows.binary_search(&i).is_ok())
    }

    pub fn first_uncovered_row(&self) -> Option<usize> {
        (0..self.rows).find(|&i| !self.row_is_covered(i))
    }
}

fn check_system<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<()> {
    if a.flavor() != b.flavor() {
        return Err(Error::FlavorMismatch(a.flavor(), b.flavor()));
    }
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    match b.first_zero() {
        Some(index) => Err(Error::IrregularRhs { index }),
        None => Ok(()),
    }
}

fn check_square_system<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<usize> {
    check_system(a, b)?;
    a.ensure_square()
}

pub fn ratio_matrix<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<QMatrix<T>> {
    check_system(a, b)?;
    let f = a.flavor();
    let (m, n) = (a.rows(), a.cols());
    let mut entries = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let a_ij = a.get(i, j);
            entries.push(if a_ij.is_zero() {
                Scalar::Top
            } else {
                f.div(b.get(i), a_ij)?
            });
        }
    }
    let minima = (0..n)
        .map(|j| {
            let column = || {
                (0..m)
                    .map(|i| (i, &entries[i * n + j]))
                    .filter(|(_, q)| !q.is_top())
            };
            let value = column()
                .map(|(_, q)| q)
                .min_by(|x, y| f.cmp_s(x, y))?
                .clone();
            let rows = column()
                .filter(|(_, q)| f.cmp_s(q, &value).is_eq())
                .map(|(i, _)| i)
                .collect();
            Some(ColumnMinimum { value, rows })
        })
        .collect();
    Ok(QMatrix {
        flavor: f,
        rows: m,
        cols: n,
        entries,
        minima,
    })
}

/// First `(i, j)` in row-major order with `(AA⁻)_ij ⊗ b_j >_S b_i`.
fn violated_inequality<T: Coefficient>(
    a: &Matrix<T>,
    pinv: &PseudoInverse<T>,
    b: &Vector<T>,
) -> Result<Option<(usize, usize)>> {
    let f = a.flavor();
    let m = a.mat_mul(&pinv.matrix)?;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if !f.leq_s(&f.mul(m.get(i, j), b.get(j))?, b.get(i)) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Pseudo-inverse method: `X* = A⁻ ⊗ b` is the maximal solution iff
/// `(AA⁻)_ij ⊗ b_j ≤_S b_i` for all `i, j`.
pub fn solve_pseudo_inverse<T: Coefficient>(
    a: &Matrix<T>,
    b: &Vector<T>,
) -> Result<SolveOutcome<T>> {
    check_square_system(a, b)?;
    let pinv = pseudo_inverse(a)?;
    if let Some((row, col)) = violated_inequality(a, &pinv, b)? {
        return Ok(SolveOutcome::refuted(
            Method::PseudoInverse,
            Certificate::ViolatedInequality { row, col },
        ));
    }
    Ok(SolveOutcome::solved(
        Method::PseudoInverse,
        pinv.matrix.mat_vec_mul(b)?,
    ))
}

/// `A_[i]`: column `i` of `A` replaced by `b`.
pub fn column_replace<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>, i: usize) -> Result<Matrix<T>> {
    a.ensure_square()?;
    a.with_column(i, b)
}

/// Extended Cramer rule: under the pseudo-inverse criterion,
/// `x*_i = det_ε(A)⁻¹ ⊗ det_ε(A_[i])`.
pub fn solve_cramer<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<SolveOutcome<T>> {
    let n = check_square_system(a, b)?;
    let pinv = pseudo_inverse(a)?;
    if let Some((row, col)) = violated_inequality(a, &pinv, b)? {
        return Ok(SolveOutcome::refuted(
            Method::Cramer,
            Certificate::ViolatedInequality { row, col },
        ));
    }
    let f = a.flavor();
    let det_inv = f.inv(&pinv.det)?;
    let x = (0..n)
        .map(|i| f.mul(&det_inv, &det_eps(&column_replace(a, b, i)?)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SolveOutcome::solved(Method::Cramer, Vector::new(f, x)?))
}

/// Normalization method: `x_j` is the ≤_S-least entry of column `j` of `Q'`;
/// the system is solvable iff every row of `Q'` hosts a column minimum.
///
/// Columns of `A` that are entirely zero leave their variable unbounded, so
/// a solvable system with such a column has no maximal solution.
pub fn solve_normalization<T: Coefficient>(
    a: &Matrix<T>,
    b: &Vector<T>,
) -> Result<SolveOutcome<T>> {
    let q = ratio_matrix(a, b)?;
    if let Some(row) = q.first_uncovered_row() {
        return Ok(SolveOutcome::refuted(
            Method::Normalization,
            Certificate::UncoveredRow { row },
        ));
    }
    let unbounded = q.unbounded_columns();
    if !unbounded.is_empty() {
        return Err(Error::UnboundedVariables(unbounded));
    }
    let x = q.minima.into_iter().flatten().map(|m| m.value).collect();
    Ok(SolveOutcome::solved(
        Method::Normalization,
        Vector::new(a.flavor(), x)?,
    ))
}

pub fn solve<T: Coefficient>(
    method: Method,
    a: &Matrix<T>,
    b: &Vector<T>,
) -> Result<SolveOutcome<T>> {
    match method {
        Method::PseudoInverse => solve_pseudo_inverse(a, b),
        Method::Cramer => solve_cramer(a, b),
        Method::Normalization => solve_normalization(a, b),
    }
}

/// Checks `a_ik ⊗ a_kk⁻¹ ≤_S b_i ⊗ b_k⁻¹` for every off-diagonal `(i, k)`.
///
/// Under this condition the diagonal ratios `b_k ⊗ a_kk⁻¹` are the column
/// minima of `Q'` and form the maximal solution.
pub fn check_lu_condition<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<bool> {
    let n = check_square_system(a, b)?;
    if let Some(index) = (0..n).find(|&k| a.get(k, k).is_zero()) {
        return Err(Error::ZeroDiagonal { index });
    }
    let f = a.flavor();
    for i in 0..n {
        for k in (0..n).filter(|&k| k != i) {
            let lhs = f.div(a.get(i, k), a.get(k, k))?;
            let rhs = f.div(b.get(i), b.get(k))?;
            if !f.leq_s(&lhs, &rhs) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `A ⊗ x = b` holds exactly. Mismatched shapes are not solutions.
pub fn verify_solution<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>, x: &Vector<T>) -> bool {
    a.mat_vec_mul(x).is_ok_and(|ax| ax == *b)
}

/// Brute-force maximality check over the grid of tight values
/// `{b_i ⊗ a_ij⁻¹ : a_ij ≠ 0}` per variable.
///
/// The grid contains the greatest solution whenever one exists, so `x` is
/// maximal iff every grid solution is `≤_S x`. A variable whose column is
/// entirely zero is unbounded and makes every `x` non-maximal.
pub fn maximality_oracle<T: Coefficient>(
    a: &Matrix<T>,
    b: &Vector<T>,
    x: &Vector<T>,
) -> Result<bool> {
    if !verify_solution(a, b, x) {
        return Err(Error::NotASolution);
    }
    if a.cols() > ORACLE_MAX_COLS {
        return Err(Error::TooLarge {
            n: a.cols(),
            limit: ORACLE_MAX_COLS,
        });
    }
    let f = a.flavor();
    let mut grid = Vec::with_capacity(a.cols());
    for j in 0..a.cols() {
        let mut values: Vec<Scalar<T>> = Vec::new();
        for i in (0..a.rows()).filter(|&i| !a.get(i, j).is_zero()) {
            let v = f.div(b.get(i), a.get(i, j))?;
            if !values.contains(&v) {
                values.push(v);
            }
        }
        if values.is_empty() {
            return Ok(false);
        }
        grid.push(values);
    }
    for candidate in grid.into_iter().multi_cartesian_product() {
        let c = Vector::new(f, candidate)?;
        if verify_solution(a, b, &c) && !c.leq_s(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All applicable methods on one system, and how their answers relate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport<T> {
    pub outcomes: Vec<SolveOutcome<T>>,
    /// For each pair of methods that ran: same verdict and same solution.
    pub pairwise_equal: BTreeMap<(Method, Method), bool>,
    /// `None` when the matrix is not square or has a zero diagonal entry.
    pub lu_condition_holds: Option<bool>,
    /// When the LU condition holds: the normalization solution is the vector
    /// of diagonal ratios and row `k` attains the minimum of column `k`.
    pub diagonal_solution_check: Option<bool>,
    /// Two methods returned different solutions, a returned vector fails the
    /// residual check, or the pseudo-inverse criterion held while
    /// normalization found no solution.
    pub theorem_violation: bool,
    /// Normalization solved the system but the pseudo-inverse criterion
    /// failed. Consistent with the theory (the criterion is sufficient, not
    /// necessary), reported for visibility.
    pub criterion_gap: bool,
}

impl<T> EquivalenceReport<T> {
    pub fn outcome(&self, method: Method) -> Option<&SolveOutcome<T>> {
        self.outcomes.iter().find(|o| o.method == method)
    }

    pub fn all_solvable(&self) -> bool {
        self.outcomes.iter().all(SolveOutcome::solvable)
    }
}

/// Runs every method that applies: all three on a square matrix with
/// nonzero ε-determinant, normalization alone otherwise.
pub fn solve_all<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<EquivalenceReport<T>> {
    check_system(a, b)?;
    let square_methods = a.is_square() && !det_eps(a)?.is_zero();
    let mut outcomes = Vec::new();
    if square_methods {
        outcomes.push(solve_pseudo_inverse(a, b)?);
        outcomes.push(solve_cramer(a, b)?);
    }
    outcomes.push(solve_normalization(a, b)?);

    let mut pairwise_equal = BTreeMap::new();
    let mut theorem_violation = false;
    for (p, q) in outcomes.iter().tuple_combinations() {
        pairwise_equal.insert((p.method, q.method), p.solution == q.solution);
        if let (Some(x), Some(y)) = (&p.solution, &q.solution) {
            theorem_violation |= x != y;
        }
    }
    theorem_violation |= outcomes
        .iter()
        .filter_map(|o| o.solution.as_ref())
        .any(|x| !verify_solution(a, b, x));

    let normalization = outcomes.last().expect("normalization always runs");
    let criterion_holds = outcomes
        .first()
        .filter(|o| o.method == Method::PseudoInverse)
        .map(SolveOutcome::solvable);
    if criterion_holds == Some(true) && !normalization.solvable() {
        theorem_violation = true;
    }
    let criterion_gap = criterion_holds == Some(false) && normalization.solvable();

    let lu_condition_holds = if a.is_square() && (0..a.rows()).all(|k| !a.get(k, k).is_zero()) {
        Some(check_lu_condition(a, b)?)
    } else {
        None
    };
    let diagonal_solution_check = match lu_condition_holds {
        Some(true) => Some(diagonal_ratios_are_minima(a, b, normalization)?),
        _ => None,
    };

    Ok(EquivalenceReport {
        outcomes,
        pairwise_equal,
        lu_condition_holds,
        diagonal_solution_check,
        theorem_violation,
        criterion_gap,
    })
}

fn diagonal_ratios_are_minima<T: Coefficient>(
    a: &Matrix<T>,
    b: &Vector<T>,
    normalization: &SolveOutcome<T>,
) -> Result<bool> {
    let f = a.flavor();
    let q = ratio_matrix(a, b)?;
    let diagonal = (0..a.rows())
        .map(|k| f.div(b.get(k), a.get(k, k)))
        .collect::<Result<Vec<_>>>()?;
    let rows_attain = (0..a.rows()).all(|k| {
        q.column_minimum(k)
            .is_some_and(|m| m.rows.binary_search(&k).is_ok())
    });
    Ok(rows_attain
        && normalization
            .solution
            .as_ref()
            .is_some_and(|x| x.entries() == diagonal.as_slice()))
}
