//! Fraction-free linear solving over rational-function fields.
//!
//! Rows are cleared to polynomial form, eliminated Bareiss-style (every
//! intermediate entry stays a polynomial; each two-step update divides
//! exactly by the previous pivot), and the solution is certified by
//! back-substitution into the original system before being returned.

use super::poly::{Poly, VarSet};
use super::ratfunc::RatFunc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinSolveError {
    #[error("system has no unique solution")]
    SingularSystem,
    #[error("overdetermined system is inconsistent")]
    InconsistentSystem,
}

/// Solve M x = rhs exactly. M may be square or overdetermined; extra rows
/// are checked for consistency. Entries of the returned vector satisfy the
/// original equations exactly (verified internally).
pub fn linsolve_fraction_free<V: VarSet>(
    m: &[Vec<RatFunc<V>>],
    rhs: &[RatFunc<V>],
) -> Result<Vec<RatFunc<V>>, LinSolveError> {
    let rows = m.len();
    assert_eq!(rows, rhs.len(), "matrix/rhs size mismatch");
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    if rows < cols {
        return Err(LinSolveError::SingularSystem);
    }

    // Clear denominators row by row: multiply each row by the product of
    // the denominators appearing in it.
    let mut a: Vec<Vec<Poly<V>>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut scale = Poly::<V>::one();
        for x in m[i].iter().chain(std::iter::once(&rhs[i])) {
            if !x.den().is_constant() || !x.den().constant_coeff().is_one() {
                scale = &scale * x.den();
            }
        }
        let mut row: Vec<Poly<V>> = Vec::with_capacity(cols + 1);
        for x in m[i].iter().chain(std::iter::once(&rhs[i])) {
            let cleared = &(&scale * x.num()).div_exact(x.den()).expect("row clearing");
            row.push(cleared.clone());
        }
        a.push(row);
    }

    // Bareiss elimination with row pivoting; pick the sparsest pivot to
    // keep intermediate growth down.
    let mut prev = Poly::<V>::one();
    for k in 0..cols {
        let pivot_row = (k..rows)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].term_count())
            .ok_or(LinSolveError::SingularSystem)?;
        a.swap(k, pivot_row);
        for i in (k + 1)..rows {
            for j in (k + 1)..=cols {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss exact division");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }

    // Leftover rows must have vanished entirely (including the rhs column).
    for row in a.iter().skip(cols) {
        if row.iter().any(|x| !x.is_zero()) {
            return Err(LinSolveError::InconsistentSystem);
        }
    }

    // Back-substitution over the fraction field.
    let mut x = vec![RatFunc::<V>::zero(); cols];
    for k in (0..cols).rev() {
        let mut acc = RatFunc::from_poly(a[k][cols].clone());
        for j in (k + 1)..cols {
            acc = &acc - &(&RatFunc::from_poly(a[k][j].clone()) * &x[j]);
        }
        x[k] = &acc / &RatFunc::from_poly(a[k][k].clone());
    }

    // Certify against the original system.
    for i in 0..rows {
        let mut acc = RatFunc::<V>::zero();
        for j in 0..cols {
            acc = &acc + &(&m[i][j] * &x[j]);
        }
        if !(&acc - &rhs[i]).is_zero() {
            return Err(LinSolveError::InconsistentSystem);
        }
    }

    Ok(x)
}
