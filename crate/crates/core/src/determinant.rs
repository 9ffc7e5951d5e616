//! Bideterminant, ε-determinant, ε-adjoint and pseudo-inverse.
//!
//! With the identity ε-function the ε-determinant is the ⊕ of all
//! permutation products, i.e. the tropical permanent. Two evaluators are
//! provided: exhaustive permutation enumeration (the reference, bounded by
//! [`ENUMERATION_LIMIT`]) and an optimal-assignment search that scales
//! polynomially.

use itertools::Itertools;

use crate::assignment::best_assignment;
use crate::error::{Error, Result};
use crate::matvec::Matrix;
use crate::semifield::{epsilon, Coefficient, Scalar};

/// Largest order accepted by the enumerating evaluators (9! products).
pub const ENUMERATION_LIMIT: usize = 9;

/// Orders up to this size use enumeration in [`det_eps`]; larger ones go
/// through the assignment search.
const DET_ENUMERATION_CUTOFF: usize = 6;

/// `(|A|⁺, |A|⁻)`: ⊕ of diagonal products over even and odd permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bideterminant<T> {
    pub plus: Scalar<T>,
    pub minus: Scalar<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoInverse<T> {
    /// `A⁻ = det_ε(A)⁻¹ ⊗ adj_ε(A)`.
    pub matrix: Matrix<T>,
    /// `det_ε(A)`, never zero.
    pub det: Scalar<T>,
}

fn inversions(sigma: &[usize]) -> usize {
    sigma
        .iter()
        .enumerate()
        .map(|(i, &si)| sigma[i + 1..].iter().filter(|&&sj| sj < si).count())
        .sum()
}

fn diagonal_product<T: Coefficient>(a: &Matrix<T>, sigma: &[usize]) -> Result<Scalar<T>> {
    a.flavor()
        .product(sigma.iter().enumerate().map(|(i, &j)| a.get(i, j)))
}

pub fn bideterminant<T: Coefficient>(a: &Matrix<T>) -> Result<Bideterminant<T>> {
    let n = a.ensure_square()?;
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let f = a.flavor();
    let mut plus = Scalar::Zero;
    let mut minus = Scalar::Zero;
    for sigma in (0..n).permutations(n) {
        let p = diagonal_product(a, &sigma)?;
        if inversions(&sigma).is_multiple_of(2) {
            plus = f.add(&plus, &p)?;
        } else {
            minus = f.add(&minus, &p)?;
        }
    }
    Ok(Bideterminant { plus, minus })
}

/// `det_ε(A) = |A|⁺ ⊕ ε(|A|⁻)`, evaluated by enumeration.
pub fn det_eps_enumerated<T: Coefficient>(a: &Matrix<T>) -> Result<Scalar<T>> {
    let Bideterminant { plus, minus } = bideterminant(a)?;
    a.flavor().add(&plus, &epsilon(&minus))
}

/// `det_ε(A)` as the value of an optimal assignment w.r.t. ≤_S.
pub fn det_eps_assignment<T: Coefficient>(a: &Matrix<T>) -> Result<Scalar<T>> {
    a.ensure_square()?;
    match best_assignment(a.flavor(), &a.to_rows())? {
        Some(sigma) => diagonal_product(a, &sigma),
        None => Ok(Scalar::Zero),
    }
}

/// `det_ε(A)` under the identity ε-function.
pub fn det_eps<T: Coefficient>(a: &Matrix<T>) -> Result<Scalar<T>> {
    if a.ensure_square()? <= DET_ENUMERATION_CUTOFF {
        det_eps_enumerated(a)
    } else {
        det_eps_assignment(a)
    }
}

/// `adj_ε(A)`: entry `(i, j)` is `det_ε(A(j|i))`.
///
/// For `n = 1` the adjoint is `[[one]]`, so that the pseudo-inverse reduces
/// to scalar inversion.
pub fn adj_eps<T: Coefficient>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.ensure_square()?;
    let f = a.flavor();
    if n == 1 {
        return Matrix::identity(f, 1);
    }
    Matrix::try_from_fn(f, n, n, |i, j| det_eps(&a.minor(j, i)?))
}

pub fn pseudo_inverse<T: Coefficient>(a: &Matrix<T>) -> Result<PseudoInverse<T>> {
    let det = det_eps(a)?;
    if det.is_zero() {
        return Err(Error::SingularDeterminant);
    }
    let f = a.flavor();
    let det_inv = f.inv(&det)?;
    let adj = adj_eps(a)?;
    let n = a.rows();
    let matrix = Matrix::try_from_fn(f, n, n, |i, j| f.mul(&det_inv, adj.get(i, j)))?;
    Ok(PseudoInverse { matrix, det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::Flavor;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Scalar<Q> {
        Scalar::Value(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn int(n: i64) -> Scalar<Q> {
        q(n, 1)
    }

    fn mat(f: Flavor, rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::new(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn example_3_1() -> Matrix<Q> {
        mat(
            Flavor::MaxTimes,
            &[&[5, 7, 9, 10], &[4, 2, 0, 7], &[3, 0, 3, 5], &[1, 8, 1, 6]],
        )
    }

    #[test]
    fn inversion_parity() {
        assert_eq!(inversions(&[0, 1, 2]), 0);
        assert_eq!(inversions(&[1, 0, 2]), 1);
        assert_eq!(inversions(&[2, 1, 0]), 3);
        assert_eq!(inversions(&[2, 3, 0, 1]), 4);
    }

    #[test]
    fn one_by_one() {
        let a = mat(Flavor::MinPlus, &[&[7]]);
        assert_eq!(
            bideterminant(&a).unwrap(),
            Bideterminant {
                plus: int(7),
                minus: Scalar::Zero
            }
        );
        assert_eq!(
            adj_eps(&a).unwrap(),
            Matrix::identity(Flavor::MinPlus, 1).unwrap()
        );
        assert_eq!(pseudo_inverse(&a).unwrap().matrix.get(0, 0), &int(-7));
    }

    #[test]
    fn two_by_two_max_plus() {
        let a = mat(Flavor::MaxPlus, &[&[1, 2], &[3, 1]]);
        assert_eq!(
            bideterminant(&a).unwrap(),
            Bideterminant {
                plus: int(2),
                minus: int(5)
            }
        );
        assert_eq!(det_eps(&a).unwrap(), int(5));
        assert_eq!(det_eps_assignment(&a).unwrap(), int(5));
        // [[a, b], [c, d]] -> [[d, b], [c, a]]
        assert_eq!(
            adj_eps(&a).unwrap(),
            mat(Flavor::MaxPlus, &[&[1, 2], &[3, 1]])
        );
        let b = mat(Flavor::MinTimes, &[&[2, 3], &[5, 7]]);
        assert_eq!(
            adj_eps(&b).unwrap(),
            mat(Flavor::MinTimes, &[&[7, 3], &[5, 2]])
        );
    }

    #[test]
    fn example_3_1_determinant() {
        let a = example_3_1();
        let bd = bideterminant(&a).unwrap();
        assert_eq!(
            Flavor::MaxTimes.add(&bd.plus, &bd.minus).unwrap(),
            int(1512)
        );
        assert_eq!(det_eps(&a).unwrap(), int(1512));
        assert_eq!(det_eps_assignment(&a).unwrap(), int(1512));
        // the maximizing permutation 1->3, 2->4, 3->1, 4->2
        assert_eq!(diagonal_product(&a, &[2, 3, 0, 1]).unwrap(), int(1512));
    }

    #[test]
    fn example_3_1_pseudo_inverse() {
        let a = example_3_1();
        let adj = adj_eps(&a).unwrap();
        assert_eq!(adj.get(0, 0), &int(168));
        let pinv = pseudo_inverse(&a).unwrap();
        assert_eq!(pinv.det, int(1512));
        assert_eq!(pinv.matrix.row(0), &[q(1, 9), q(5, 21), q(1, 3), q(7, 72)]);
    }

    #[test]
    fn identity_matrix() {
        for f in Flavor::ALL {
            let i = Matrix::<Q>::identity(f, 3).unwrap();
            assert_eq!(det_eps(&i).unwrap(), f.one());
            assert_eq!(adj_eps(&i).unwrap(), i);
            assert_eq!(pseudo_inverse(&i).unwrap().matrix, i);
        }
    }

    #[test]
    fn diagonal_pseudo_inverse() {
        let f = Flavor::MaxTimes;
        let d = Matrix::new(
            f,
            vec![vec![int(2), Scalar::Zero], vec![Scalar::Zero, int(4)]],
        )
        .unwrap();
        let expected = Matrix::new(
            f,
            vec![vec![q(1, 2), Scalar::Zero], vec![Scalar::Zero, q(1, 4)]],
        )
        .unwrap();
        assert_eq!(pseudo_inverse(&d).unwrap().matrix, expected);
    }

    #[test]
    fn zero_row_gives_zero_determinant() {
        let f = Flavor::MaxPlus;
        let a = Matrix::new(
            f,
            vec![vec![int(1), int(2)], vec![Scalar::Zero, Scalar::Zero]],
        )
        .unwrap();
        assert_eq!(det_eps(&a).unwrap(), Scalar::Zero);
        assert_eq!(det_eps_assignment(&a).unwrap(), Scalar::Zero);
        assert_eq!(pseudo_inverse(&a), Err(Error::SingularDeterminant));
    }

    #[test]
    fn non_square_rejected() {
        let a = mat(Flavor::MaxPlus, &[&[1, 2, 3]]);
        assert_eq!(det_eps(&a), Err(Error::NotSquare { rows: 1, cols: 3 }));
        assert!(bideterminant(&a).is_err());
        assert!(adj_eps(&a).is_err());
    }

    #[test]
    fn enumeration_limit() {
        let a = Matrix::<Q>::identity(Flavor::MaxPlus, ENUMERATION_LIMIT + 1).unwrap();
        assert!(matches!(bideterminant(&a), Err(Error::TooLarge { .. })));
        assert_eq!(det_eps(&a).unwrap(), int(0));
    }
}
