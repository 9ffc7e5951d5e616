//! Optimal assignment over the ordered multiplicative group of a semifield.
//!
//! The nonzero elements of each flavor form a totally ordered abelian group
//! under ⊗ and ≤_S, which is all the Kuhn–Munkres potential method needs:
//! "cost minus potential" becomes `c ⊗ u⁻¹ ⊗ v⁻¹` and "less than" becomes
//! `<_S`. Zero entries are forbidden cells.

use crate::error::Result;
use crate::semifield::{Coefficient, Flavor, Scalar};

/// Finds a permutation `σ` maximizing `⊗_i weights[i][σ(i)]` with respect to
/// ≤_S. Returns `None` when every permutation hits a zero entry.
///
/// `weights` must be square and Top-free.
pub(crate) fn best_assignment<T: Coefficient>(
    flavor: Flavor,
    weights: &[Vec<Scalar<T>>],
) -> Result<Option<Vec<usize>>> {
    let n = weights.len();
    // minimizing ⊗ of inverses maximizes ⊗ of weights
    let cost = weights
        .iter()
        .map(|row| {
            row.iter()
                .map(|w| {
                    if w.is_zero() {
                        Ok(None)
                    } else {
                        flavor.inv(w).map(Some)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    // 1-based rows/columns; index 0 is the virtual root of the search tree.
    let one: Scalar<T> = flavor.one();
    let mut u = vec![one.clone(); n + 1];
    let mut v = vec![one; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0usize;
        // None = +infinity
        let mut minv: Vec<Option<Scalar<T>>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<Scalar<T>> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = &cost[i0 - 1][j - 1] {
                    let reduced = flavor.div(&flavor.div(c, &u[i0])?, &v[j])?;
                    let better = match &minv[j] {
                        None => true,
                        Some(m) => flavor.lt_s(&reduced, m),
                    };
                    if better {
                        minv[j] = Some(reduced);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    let better = match &delta {
                        None => true,
                        Some(d) => flavor.lt_s(m, d),
                    };
                    if better {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let Some(delta) = delta else {
                // no augmenting path: Hall's condition fails
                return Ok(None);
            };
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] = flavor.mul(&u[owner[j]], &delta)?;
                    v[j] = flavor.div(&v[j], &delta)?;
                } else if let Some(m) = &minv[j] {
                    minv[j] = Some(flavor.div(m, &delta)?);
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut sigma = vec![0usize; n];
    for j in 1..=n {
        sigma[owner[j] - 1] = j - 1;
    }
    Ok(Some(sigma))
}
