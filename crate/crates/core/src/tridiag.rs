//! Tridiagonal systems and the Thomas algorithm.

use crate::error::{Error, Result};

/// Tridiagonal matrix stored as its three diagonals.
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiagMatrix {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

impl TriDiagMatrix {
    /// `sub` and `sup` must be one element shorter than `diag`.
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        if sub.len() != n - 1 {
            return Err(Error::LengthMismatch { expected: n - 1, got: sub.len() });
        }
        if sup.len() != n - 1 {
            return Err(Error::LengthMismatch { expected: n - 1, got: sup.len() });
        }
        Ok(Self { sub, diag, sup })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    /// Entry `(i, j)`; zero off the three diagonals.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag[i]
        } else if j + 1 == i {
            self.sub[j]
        } else if i + 1 == j {
            self.sup[i]
        } else {
            0.0
        }
    }

    /// Matrix-vector product, used by residual checks in tests.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        assert_eq!(x.len(), n);
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * x[i];
                if i > 0 {
                    s += self.sub[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.sup[i] * x[i + 1];
                }
                s
            })
            .collect()
    }
}

/// Solve `M x = rhs` by forward elimination and back substitution without
/// pivoting. Intended for diagonally dominant systems; a zero pivot is
/// reported as a singular-matrix error naming the row.
pub fn thomas_solve(m: &TriDiagMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = m.len();
    if rhs.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: rhs.len() });
    }

    let mut c_prime = vec![0.0; n - 1];
    let mut d_prime = vec![0.0; n];
    let mut pivot = m.diag[0];
    if pivot == 0.0 {
        return Err(Error::SingularMatrix { row: 0 });
    }
    if n > 1 {
        c_prime[0] = m.sup[0] / pivot;
    }
    d_prime[0] = rhs[0] / pivot;

    for i in 1..n {
        pivot = m.diag[i] - m.sub[i - 1] * c_prime[i - 1];
        if pivot == 0.0 {
            return Err(Error::SingularMatrix { row: i });
        }
        if i < n - 1 {
            c_prime[i] = m.sup[i] / pivot;
        }
        d_prime[i] = (rhs[i] - m.sub[i - 1] * d_prime[i - 1]) / pivot;
    }

    let mut x = d_prime;
    for i in (0..n - 1).rev() {
        x[i] -= c_prime[i] * x[i + 1];
    }
    Ok(x)
}
