use super::{rank_of_rows, LinalgError, Matrix, Scalar};

/// A subspace of `Q(i)^n` given by a (possibly redundant) spanning family.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Ok(Subspace {
            ambient_dim,
            vectors,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&k| {
                let mut v = vec![Scalar::zero(); ambient_dim];
                v[k] = Scalar::one();
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn spanning_vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        let rows: Vec<&[Scalar]> = self.vectors.iter().map(Vec::as_slice).collect();
        rank_of_rows(&rows, self.ambient_dim)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `A + B` as a subspace (spanning sets concatenated).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Ok(Subspace {
            ambient_dim: self.ambient_dim,
            vectors,
        })
    }

    /// A basis of `A ∩ B`, read off the kernel of the block matrix `[A | B]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let a = self.basis();
        let b = other.basis();
        if a.is_empty() || b.is_empty() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Columns are the vectors of A followed by those of B.
        let cols = a.len() + b.len();
        let m = Matrix::from_fn(self.ambient_dim, cols, |i, j| {
            if j < a.len() {
                a[j][i].clone()
            } else {
                b[j - a.len()][i].clone()
            }
        });
        let vectors = kernel(&m)
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient_dim];
                for (c, vec_a) in coeffs.iter().zip(&a) {
                    if c.is_zero() {
                        continue;
                    }
                    for (vi, ai) in v.iter_mut().zip(vec_a) {
                        *vi += &(c * ai);
                    }
                }
                v
            })
            .collect();
        Ok(Subspace {
            ambient_dim: self.ambient_dim,
            vectors,
        })
    }

    /// A basis of the span, as reduced row echelon rows.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        Echelon::from_vectors(self.ambient_dim, &self.vectors).into_rows()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        Echelon::from_vectors(self.ambient_dim, &self.vectors).contains(v)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        let ech = Echelon::from_vectors(self.ambient_dim, &self.vectors);
        Ok(other.vectors.iter().all(|v| ech.contains(v)))
    }
}

/// `dim(A + B)`.
pub fn sum_dim(a: &Subspace, b: &Subspace) -> Result<usize, LinalgError> {
    Ok(a.sum(b)?.dim())
}

/// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize, LinalgError> {
    let s = sum_dim(a, b)?;
    Ok(a.dim() + b.dim() - s)
}

/// Reduced row echelon form over `Q(i)`, used for membership tests and
/// basis extraction on the small, sparse spanning sets of the catalog.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn from_vectors(ncols: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    /// Pivot column of each stored row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the stored rows; zero at every pivot.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    /// Adds `v` to the span; returns `false` if it was already contained.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Keep the form reduced: clear column p from existing rows.
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` lies in
    /// the span. The rows are reduced, so the coordinates are the entries
    /// of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Basis of the right kernel `{x : M x = 0}`.
pub fn kernel(m: &Matrix) -> Vec<Vec<Scalar>> {
    let ncols = m.cols();
    let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let ech = Echelon::from_vectors(ncols, &rows);
    let pivot_set: std::collections::HashSet<usize> = ech.pivots.iter().copied().collect();
    (0..ncols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut x = vec![Scalar::zero(); ncols];
            x[free] = Scalar::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                x[p] = -&row[free];
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[k] = Scalar::one();
        v
    }

    fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    #[test]
    fn sum_dimension_examples() {
        let a = Subspace::new(3, vec![e(3, 0)]).unwrap();
        let b = Subspace::new(3, vec![e(3, 1)]).unwrap();
        assert_eq!(sum_dim(&a, &b).unwrap(), 2);
        assert_eq!(sum_dim(&a, &a).unwrap(), 1);
        let diag = Subspace::new(3, vec![add(&e(3, 0), &e(3, 1))]).unwrap();
        let plane = Subspace::new(3, vec![e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(sum_dim(&diag, &plane).unwrap(), 2);
    }

    #[test]
    fn intersection_dimension_examples() {
        let a = Subspace::new(3, vec![e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::new(3, vec![e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(intersection_dim(&a, &b).unwrap(), 1);
        let l1 = Subspace::new(2, vec![e(2, 0)]).unwrap();
        let l2 = Subspace::new(2, vec![add(&e(2, 0), &e(2, 1))]).unwrap();
        assert_eq!(intersection_dim(&l1, &l2).unwrap(), 0);
        let sub = Subspace::new(3, vec![e(3, 1)]).unwrap();
        assert_eq!(intersection_dim(&sub, &a).unwrap(), 1);
        assert_eq!(a.intersection(&b).unwrap().dim(), 1);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(sum_dim(&a, &b).is_err());
        assert!(intersection_dim(&a, &b).is_err());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let col = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn echelon_coordinates() {
        let ech = Echelon::from_vectors(3, &[e(3, 0), add(&e(3, 1), &e(3, 2))]);
        let v = vec![Scalar::from_int(2), Scalar::from_int(5), Scalar::from_int(5)];
        assert_eq!(
            ech.coordinates(&v).unwrap(),
            vec![Scalar::from_int(2), Scalar::from_int(5)]
        );
        assert!(ech.coordinates(&e(3, 2)).is_none());
    }
}
