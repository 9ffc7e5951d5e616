//! Exact solvers for one-sided linear systems `A ⊗ x = b` over the
//! idempotent semifields max-plus, min-plus, max-times and min-times.
//!
//! Three methods compute the maximal solution: the pseudo-inverse criterion,
//! the extended Cramer rule and the normalization (ratio-matrix column
//! minima) method. [`solver::solve_all`] runs them side by side and reports
//! whether they agree.
//!
//! Every type is generic over its numeric payload; the `Exact*` aliases fix
//! it to arbitrary-precision rationals, which is what the golden results and
//! the CLI use.
//!
//! ```
//! use semisolve::*;
//!
//! let f = Flavor::MaxTimes;
//! let a = ExactMatrix::from_values(f, vec![vec![rational(2, 1), rational(1, 1)],
//!                                          vec![rational(1, 1), rational(3, 1)]]).unwrap();
//! let b = ExactVector::from_values(f, vec![rational(4, 1), rational(6, 1)]).unwrap();
//! let report = solve_all(&a, &b).unwrap();
//! assert!(report.all_solvable() && !report.theorem_violation);
//! ```

mod assignment;
pub mod determinant;
pub mod error;
pub mod matvec;
pub mod semifield;
pub mod solver;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use determinant::{
    adj_eps, bideterminant, det_eps, det_eps_assignment, det_eps_enumerated, pseudo_inverse,
    Bideterminant, PseudoInverse,
};
pub use error::{Error, Result};
pub use matvec::{preprocess_system, Matrix, ReducedSystem, Reduction, Vector};
pub use semifield::{epsilon, Coefficient, Flavor, Scalar};
pub use solver::{
    check_lu_condition, column_replace, maximality_oracle, ratio_matrix, solve, solve_all,
    solve_cramer, solve_normalization, solve_pseudo_inverse, verify_solution, Certificate,
    ColumnMinimum, EquivalenceReport, Method, QMatrix, SolveOutcome,
};

pub type ExactScalar = Scalar<BigRational>;
pub type ExactMatrix = Matrix<BigRational>;
pub type ExactVector = Vector<BigRational>;
pub type ExactQMatrix = QMatrix<BigRational>;
pub type ExactOutcome = SolveOutcome<BigRational>;
pub type ExactReport = EquivalenceReport<BigRational>;

/// Floating-point instantiations. Ties and equality tests are only as good
/// as the rounding; prefer the exact aliases for anything that matters.
pub type F64Scalar = Scalar<f64>;
pub type F64Matrix = Matrix<f64>;
pub type F64Vector = Vector<f64>;

pub use num_rational::BigRational as Rational;

/// `n/d` as an exact rational. Panics when `d == 0`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
