use crate::linalg::{Matrix, Scalar};

/// Block decomposition of `k^n` adapted to a form.
///
/// Each block carries its own antidiagonal form (split orthogonal, or the
/// standard symplectic one); `embed` moves a block matrix, written in the
/// block's own coordinates, into the ambient matrix algebra. For the
/// orthogonal case the blocks are nested from the outside in, so the
/// intersection of an embedded subalgebra with the ambient triangular Borel
/// is a Borel of the subalgebra.
#[derive(Debug, Clone)]
pub struct Frame {
    n: usize,
    change: Option<(Matrix, Matrix)>,
    blocks: Vec<(usize, usize)>,
}

impl Frame {
    /// Contiguous diagonal blocks.
    pub fn linear(sizes: &[usize]) -> Frame {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &s in sizes {
            blocks.push((off, s));
            off += s;
        }
        Frame {
            n: off,
            change: None,
            blocks,
        }
    }

    /// Nested orthogonal blocks, outermost first. At most two blocks may be
    /// odd, and two odd blocks share the two middle coordinates through
    /// `e + f/2` and `i(e - f/2)`.
    pub fn orthogonal(sizes: &[usize]) -> Option<Frame> {
        let n: usize = sizes.iter().sum();
        let odd: Vec<usize> = (0..sizes.len()).filter(|&b| sizes[b] % 2 == 1).collect();
        if odd.len() > 2 || odd.len() % 2 != n % 2 {
            return None;
        }
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        let mut blocks = Vec::new();
        let mut lo = 0;
        let unit = |k: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[k] = Scalar::one();
            v
        };
        let mid = (n - odd.len()) / 2;
        let half = Scalar::from_ratio(1, 2);
        for (b, &s) in sizes.iter().enumerate() {
            let h = s / 2;
            blocks.push((columns.len(), s));
            for a in 0..h {
                columns.push(unit(lo + a));
            }
            if s % 2 == 1 {
                let v = match odd.as_slice() {
                    [_] => unit(mid),
                    [first, _] => {
                        let mut v = vec![Scalar::zero(); n];
                        if b == *first {
                            v[mid] = Scalar::one();
                            v[mid + 1] = half.clone();
                        } else {
                            v[mid] = Scalar::i();
                            v[mid + 1] = -(Scalar::i() * &half);
                        }
                        v
                    }
                    _ => unreachable!(),
                };
                columns.push(v);
            }
            let hi = n - lo;
            for t in 0..h {
                columns.push(unit(hi - h + t));
            }
            lo += h;
        }
        Some(Frame::from_columns(n, columns, blocks))
    }

    /// Nested symplectic blocks, outermost first; all sizes even.
    pub fn symplectic(sizes: &[usize]) -> Option<Frame> {
        if sizes.iter().any(|s| s % 2 == 1) {
            return None;
        }
        let n: usize = sizes.iter().sum();
        let mut columns = Vec::with_capacity(n);
        let mut blocks = Vec::new();
        let mut lo = 0;
        for &s in sizes {
            let h = s / 2;
            blocks.push((columns.len(), s));
            let hi = n - lo;
            for k in (lo..lo + h).chain(hi - h..hi) {
                let mut v = vec![Scalar::zero(); n];
                v[k] = Scalar::one();
                columns.push(v);
            }
            lo += h;
        }
        Some(Frame::from_columns(n, columns, blocks))
    }

    fn from_columns(n: usize, columns: Vec<Vec<Scalar>>, blocks: Vec<(usize, usize)>) -> Frame {
        let s = Matrix::from_fn(n, n, |i, j| columns[j][i].clone());
        let change = if s == Matrix::identity(n) {
            None
        } else {
            let inv = s.inverse().expect("frame columns are independent");
            Some((s, inv))
        };
        Frame { n, change, blocks }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self, b: usize) -> usize {
        self.blocks[b].1
    }

    /// Places `x` (in block `b`'s own coordinates) into the ambient algebra.
    pub fn embed(&self, b: usize, x: &Matrix) -> Matrix {
        let (off, s) = self.blocks[b];
        assert_eq!((x.rows(), x.cols()), (s, s), "block size");
        let y = Matrix::from_fn(self.n, self.n, |i, j| {
            if (off..off + s).contains(&i) && (off..off + s).contains(&j) {
                x.get(i - off, j - off).clone()
            } else {
                Scalar::zero()
            }
        });
        self.to_ambient(&y)
    }

    /// Moves a matrix written in frame coordinates to the ambient ones.
    pub fn to_ambient(&self, y: &Matrix) -> Matrix {
        match &self.change {
            None => y.clone(),
            Some((s, inv)) => s.mul(y).and_then(|m| m.mul(inv)).expect("square"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Classical, Realization};

    fn embedded_all(frame: &Frame, family: Classical) -> Vec<Matrix> {
        let mut out = Vec::new();
        for b in 0..frame.num_blocks() {
            let s = frame.block_size(b);
            if s < 2 {
                continue;
            }
            let r = Realization::build(family, s).unwrap();
            out.extend(r.basis().iter().map(|x| frame.embed(b, x)));
        }
        out
    }

    #[test]
    fn orthogonal_blocks_stay_in_so() {
        for sizes in [vec![1, 6], vec![2, 5], vec![3, 5], vec![5, 3], vec![4, 4], vec![2, 2, 3], vec![3, 3]] {
            let frame = Frame::orthogonal(&sizes).unwrap();
            let n = frame.size();
            let so = Realization::build(Classical::So, n).unwrap();
            for x in embedded_all(&frame, Classical::So) {
                assert!(so.algebra().contains_vector(x.entries()), "{sizes:?}");
            }
        }
        assert!(Frame::orthogonal(&[1, 1, 1]).is_none());
        assert!(Frame::orthogonal(&[2, 3]).is_some());
    }

    #[test]
    fn symplectic_blocks_stay_in_sp() {
        let frame = Frame::symplectic(&[2, 4]).unwrap();
        let sp = Realization::build(Classical::Sp, 6).unwrap();
        for x in embedded_all(&frame, Classical::Sp) {
            assert!(sp.algebra().contains_vector(x.entries()));
        }
        assert!(Frame::symplectic(&[3, 3]).is_none());
    }
}
