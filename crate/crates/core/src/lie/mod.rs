//! Matrix realizations of the classical Lie algebras with split forms.

mod realization;
mod roots;

pub use realization::{BuildError, Check, Classical, Realization, ValidationReport};
pub use roots::{PositiveRoot, RootSystem};

use crate::linalg::{LinalgError, Matrix, Subspace};

/// `[x, y] = xy - yx`.
pub fn bracket(x: &Matrix, y: &Matrix) -> Result<Matrix, LinalgError> {
    if !x.is_square() {
        return Err(LinalgError::NotSquare(x.rows(), x.cols()));
    }
    x.mul(y)?.sub(&y.mul(x)?)
}

/// `Ad(g) s = g s g^-1` for a subspace of `n x n` matrices in flattened
/// coordinates.
pub fn adjoint(g: &Matrix, s: &Subspace) -> Result<Subspace, LinalgError> {
    let ginv = g.inverse()?;
    conjugate(g, &ginv, s)
}

/// `g s g^-1` with the inverse supplied by the caller.
pub fn conjugate(g: &Matrix, ginv: &Matrix, s: &Subspace) -> Result<Subspace, LinalgError> {
    let n = g.rows();
    if s.ambient_dim() != n * n {
        return Err(LinalgError::DimensionMismatch {
            expected: n * n,
            found: s.ambient_dim(),
        });
    }
    let vectors = s
        .spanning_vectors()
        .iter()
        .map(|v| {
            let x = Matrix::from_entries(n, n, v.clone())?;
            Ok(g.mul(&x)?.mul(ginv)?.into_entries())
        })
        .collect::<Result<Vec<_>, LinalgError>>()?;
    Subspace::new(n * n, vectors)
}

/// Span of a list of equally sized square matrices, in flattened coordinates.
pub fn span(n: usize, mats: &[Matrix]) -> Subspace {
    Subspace::new(n * n, mats.iter().map(|m| m.entries().to_vec()).collect())
        .expect("matrices share the ambient size")
}

/// Matrix with flattened coordinate vector `v`.
pub fn unflatten(n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_entries(n, n, v.to_vec()).expect("vector of length n^2")
}

/// `true` when every bracket of spanning vectors stays in the span.
pub fn is_bracket_closed(n: usize, s: &Subspace) -> bool {
    let basis = s.basis();
    let ech = crate::linalg::Echelon::from_vectors(n * n, &basis);
    let mats: Vec<Matrix> = basis.iter().map(|v| unflatten(n, v)).collect();
    for (a, x) in mats.iter().enumerate() {
        for y in &mats[a + 1..] {
            let z = bracket(x, y).expect("square matrices of equal size");
            if !ech.contains(z.entries()) {
                return false;
            }
        }
    }
    true
}

/// Span of all brackets `[x, y]` of spanning vectors.
pub fn derived(n: usize, s: &Subspace) -> Subspace {
    let mats: Vec<Matrix> = s.basis().iter().map(|v| unflatten(n, v)).collect();
    let mut out = Vec::new();
    for (a, x) in mats.iter().enumerate() {
        for y in &mats[a + 1..] {
            let z = bracket(x, y).expect("square matrices of equal size");
            if !z.is_zero() {
                out.push(z.into_entries());
            }
        }
    }
    Subspace::new(n * n, out).expect("brackets keep the ambient size")
}

/// Derived series terminates at zero.
pub fn is_solvable(n: usize, s: &Subspace) -> bool {
    let mut cur = s.clone();
    let mut dim = cur.dim();
    while dim > 0 {
        let next = derived(n, &cur);
        let d = next.dim();
        if d == dim {
            return false;
        }
        cur = next;
        dim = d;
    }
    true
}

/// Every spanning vector is a nilpotent matrix.
pub fn is_nilpotent_family(n: usize, s: &Subspace) -> bool {
    s.spanning_vectors().iter().all(|v| {
        let x = unflatten(n, v);
        let mut p = x.clone();
        for _ in 1..n {
            p = p.mul(&x).expect("square");
        }
        p.is_zero()
    })
}

/// Elements of `r` commuting with every spanning vector of `s`.
pub fn centralizer(r: &Realization, s: &Subspace) -> Subspace {
    let n = r.size();
    let others: Vec<Matrix> = s.basis().iter().map(|v| unflatten(n, v)).collect();
    let basis = r.basis();
    // Column k holds the brackets of basis[k] with every element of s.
    let columns: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| {
            others
                .iter()
                .flat_map(|y| bracket(b, y).expect("same size").into_entries())
                .collect()
        })
        .collect();
    let rows = n * n * others.len();
    if rows == 0 {
        return r.algebra().clone();
    }
    let m = Matrix::from_fn(rows, basis.len(), |i, k| columns[k][i].clone());
    let vectors = crate::linalg::kernel(&m)
        .into_iter()
        .map(|coeffs| {
            let terms: Vec<(Scalar, &Matrix)> = coeffs.into_iter().zip(basis.iter()).collect();
            Matrix::combination(&terms).expect("same size").into_entries()
        })
        .collect();
    Subspace::new(n * n, vectors).expect("ambient n^2")
}

use crate::linalg::Scalar;
