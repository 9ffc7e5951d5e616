//! Dense matrices and vectors over a [`Flavor`], and the zero-entry
//! reduction of a system `A ⊗ x = b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::semifield::{Coefficient, Flavor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector<T> {
    flavor: Flavor,
    entries: Vec<Scalar<T>>,
}

impl<T: Coefficient> Vector<T> {
    /// Builds a vector, canonicalizing entries. Rejects empty input and Top.
    pub fn new(flavor: Flavor, entries: Vec<Scalar<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        let entries = entries
            .into_iter()
            .map(|s| {
                if s.is_top() {
                    Err(Error::TopEntry)
                } else {
                    flavor.normalize(s)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector { flavor, entries })
    }

    pub fn from_values(flavor: Flavor, values: Vec<T>) -> Result<Self> {
        let entries = values
            .into_iter()
            .map(|v| flavor.scalar(v))
            .collect::<Result<Vec<_>>>()?;
        Vector::new(flavor, entries)
    }

    pub fn filled(flavor: Flavor, len: usize, value: Scalar<T>) -> Result<Self> {
        Vector::new(flavor, vec![value; len])
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar<T> {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Scalar<T>] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar<T>> {
        self.entries.iter()
    }

    pub fn into_entries(self) -> Vec<Scalar<T>> {
        self.entries
    }

    /// A vector is regular when none of its entries is the semifield zero.
    pub fn is_regular(&self) -> bool {
        self.entries.iter().all(|s| !s.is_zero())
    }

    /// Index of the first zero entry, if any.
    pub fn first_zero(&self) -> Option<usize> {
        self.entries.iter().position(Scalar::is_zero)
    }

    /// Entrywise ⊕.
    pub fn oplus(&self, other: &Vector<T>) -> Result<Vector<T>> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.flavor.add(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector {
            flavor: self.flavor,
            entries,
        })
    }

    /// Componentwise `self ≤_S other`.
    pub fn leq_s(&self, other: &Vector<T>) -> bool {
        self.flavor == other.flavor
            && self.len() == other.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| self.flavor.leq_s(a, b))
    }

    fn check_compatible(&self, other: &Vector<T>) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor, other.flavor));
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }
}

impl<'a, T> IntoIterator for &'a Vector<T> {
    type Item = &'a Scalar<T>;
    type IntoIter = std::slice::Iter<'a, Scalar<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Dense row-major matrix. Entries are canonical and never Top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    flavor: Flavor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar<T>>,
}

impl<T: Coefficient> Matrix<T> {
    pub fn new(flavor: Flavor, rows: Vec<Vec<Scalar<T>>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Ragged);
        }
        let data = rows
            .into_iter()
            .flatten()
            .map(|s| {
                if s.is_top() {
                    Err(Error::TopEntry)
                } else {
                    flavor.normalize(s)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            flavor,
            rows: m,
            cols: n,
            data,
        })
    }

    pub fn from_values(flavor: Flavor, rows: Vec<Vec<T>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| flavor.scalar(v)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Matrix::new(flavor, rows)
    }

    /// One on the diagonal, zero elsewhere.
    pub fn identity(flavor: Flavor, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        Ok(Self::from_fn(flavor, n, n, |i, j| {
            if i == j {
                flavor.one()
            } else {
                Scalar::Zero
            }
        }))
    }

    /// Builds a matrix from an entry function. The caller guarantees that
    /// every entry is canonical and not Top.
    pub(crate) fn from_fn(
        flavor: Flavor,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar<T>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            flavor,
            rows,
            cols,
            data,
        }
    }

    pub(crate) fn try_from_fn(
        flavor: Flavor,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Scalar<T>>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix {
            flavor,
            rows,
            cols,
            data,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar<T> {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &Scalar<T>> + '_ {
        self.data.iter().skip(j).step_by(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar<T>>> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.flavor, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `A(i|j)`: removes row `i` and column `j`. Needs at least two rows and
    /// two columns.
    pub fn minor(&self, i: usize, j: usize) -> Result<Matrix<T>> {
        if self.rows < 2 || self.cols < 2 {
            return Err(Error::DimensionMismatch(format!(
                "minor of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        self.check_row(i)?;
        self.check_col(j)?;
        Ok(Matrix::from_fn(
            self.flavor,
            self.rows - 1,
            self.cols - 1,
            |r, c| {
                let r = if r >= i { r + 1 } else { r };
                let c = if c >= j { c + 1 } else { c };
                self.get(r, c).clone()
            },
        ))
    }

    /// `A_r(src ⇒ dst)`: row `dst` overwritten by a copy of row `src`.
    pub fn with_row_replaced(&self, src: usize, dst: usize) -> Result<Matrix<T>> {
        self.check_row(src)?;
        self.check_row(dst)?;
        let mut out = self.clone();
        for c in 0..self.cols {
            out.data[dst * self.cols + c] = self.get(src, c).clone();
        }
        Ok(out)
    }

    /// Column `j` replaced by `v`.
    pub fn with_column(&self, j: usize, v: &Vector<T>) -> Result<Matrix<T>> {
        self.check_col(j)?;
        self.check_flavor(v.flavor())?;
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "column of length {} into a matrix with {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = self.clone();
        for (r, s) in v.iter().enumerate() {
            out.data[r * self.cols + j] = s.clone();
        }
        Ok(out)
    }

    /// Same matrix with its columns reordered: column `k` of the result is
    /// column `order[k]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Result<Matrix<T>> {
        if order.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {} columns",
                order.len(),
                self.cols
            )));
        }
        for &k in order {
            self.check_col(k)?;
        }
        Ok(Matrix::from_fn(
            self.flavor,
            self.rows,
            self.cols,
            |i, j| self.get(i, order[j]).clone(),
        ))
    }

    /// `A ⊗ B`, entry `(i, j)` = ⊕_k a_ik ⊗ b_kj.
    pub fn mat_mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_flavor(other.flavor)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.flavor;
        Matrix::try_from_fn(f, self.rows, other.cols, |i, j| {
            (0..self.cols).try_fold(Scalar::Zero, |acc, k| {
                f.add(&acc, &f.mul(self.get(i, k), other.get(k, j))?)
            })
        })
    }

    pub fn mat_vec_mul(&self, x: &Vector<T>) -> Result<Vector<T>> {
        self.check_flavor(x.flavor())?;
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let f = self.flavor;
        let entries = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.iter())
                    .try_fold(Scalar::Zero, |acc, (a, xj)| f.add(&acc, &f.mul(a, xj)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector { flavor: f, entries })
    }

    /// Column `j` multiplied by `alphas[j]`; the result is in the same
    /// column-scaling equivalence class as `self`.
    pub fn scale_columns(&self, alphas: &Vector<T>) -> Result<Matrix<T>> {
        self.check_flavor(alphas.flavor())?;
        if alphas.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} scale factors for {} columns",
                alphas.len(),
                self.cols
            )));
        }
        if let Some(index) = alphas.first_zero() {
            return Err(Error::ZeroScaleFactor { index });
        }
        let f = self.flavor;
        Matrix::try_from_fn(f, self.rows, self.cols, |i, j| {
            f.mul(alphas.get(j), self.get(i, j))
        })
    }

    fn check_flavor(&self, other: Flavor) -> Result<()> {
        if self.flavor == other {
            Ok(())
        } else {
            Err(Error::FlavorMismatch(self.flavor, other))
        }
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i < self.rows {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            })
        }
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j < self.cols {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            })
        }
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of removing the equations with a zero right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction<T> {
    /// A nonempty system with a regular right-hand side remains.
    Reduced { matrix: Matrix<T>, rhs: Vector<T> },
    /// Every equation was removed; the remaining variables are unconstrained.
    NoEquations,
    /// Original row `row` has a nonzero right-hand side but every column it
    /// touches was forced to zero.
    Unsolvable { row: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSystem<T> {
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    pub forced_zero_vars: Vec<usize>,
    pub original_cols: usize,
    pub reduction: Reduction<T>,
}

impl<T: Coefficient> ReducedSystem<T> {
    pub fn is_identity(&self) -> bool {
        self.forced_zero_vars.is_empty()
            && self.kept_rows.len() == self.kept_rows.last().map_or(0, |r| r + 1)
            && matches!(self.reduction, Reduction::Reduced { .. })
    }

    /// Embeds a solution of the reduced system back into the original
    /// variable space, with forced variables set to zero.
    pub fn expand_solution(&self, flavor: Flavor, reduced: &Vector<T>) -> Result<Vector<T>> {
        if reduced.len() != self.kept_cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "reduced solution of length {} for {} kept columns",
                reduced.len(),
                self.kept_cols.len()
            )));
        }
        let mut full = vec![Scalar::Zero; self.original_cols];
        for (k, &j) in self.kept_cols.iter().enumerate() {
            full[j] = reduced.get(k).clone();
        }
        Vector::new(flavor, full)
    }
}

/// Removes every equation `i` with `b_i = 0` together with each column `j`
/// for which `a_ij ≠ 0`; those variables are forced to zero.
pub fn preprocess_system<T: Coefficient>(a: &Matrix<T>, b: &Vector<T>) -> Result<ReducedSystem<T>> {
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
    let zero_rows: Vec<usize> = (0..a.rows()).filter(|&i| b.get(i).is_zero()).collect();
    let forced: Vec<usize> = (0..a.cols())
        .filter(|&j| zero_rows.iter().any(|&i| !a.get(i, j).is_zero()))
        .collect();
    let kept_rows: Vec<usize> = (0..a.rows()).filter(|&i| !b.get(i).is_zero()).collect();
    let kept_cols: Vec<usize> = (0..a.cols()).filter(|j| !forced.contains(j)).collect();

    let reduction = if kept_rows.is_empty() {
        Reduction::NoEquations
    } else if let Some(&row) = kept_rows
        .iter()
        .find(|&&i| kept_cols.iter().all(|&j| a.get(i, j).is_zero()))
    {
        Reduction::Unsolvable { row }
    } else {
        let matrix = Matrix::from_fn(a.flavor(), kept_rows.len(), kept_cols.len(), |r, c| {
            a.get(kept_rows[r], kept_cols[c]).clone()
        });
        let rhs = Vector {
            flavor: b.flavor(),
            entries: kept_rows.iter().map(|&i| b.get(i).clone()).collect(),
        };
        Reduction::Reduced { matrix, rhs }
    };

    Ok(ReducedSystem {
        kept_rows,
        kept_cols,
        forced_zero_vars: forced,
        original_cols: a.cols(),
        reduction,
    })
}
