//! Non-classical subalgebras: `g2 ⊂ so(7)` and the spin representation
//! `so(7) → so(8)`.

use crate::linalg::{Matrix, Scalar};

/// `E_ij - E_{j'i'}` in `so(7)`, with `k' = 6 - k`.
fn so7_root(i: usize, j: usize) -> Matrix {
    let n = 7;
    let mut m = Matrix::unit(n, i, j);
    m = m.sub(&Matrix::unit(n, n - 1 - j, n - 1 - i)).expect("same size");
    m
}

/// Basis of `g2` inside `so(7)` (antidiagonal form). Its intersection with
/// the upper triangular Borel of `so(7)` is a Borel of `g2`.
pub fn g2_basis() -> Vec<Matrix> {
    let terms: [&[(i64, i64, usize, usize)]; 14] = [
        &[(1, 1, 0, 4)],
        &[(1, 1, 0, 5)],
        &[(1, 1, 0, 0), (1, 1, 1, 1)],
        &[(1, 1, 1, 2)],
        &[(-1, 1, 0, 2), (1, 1, 1, 3)],
        &[(2, 1, 0, 3), (1, 1, 1, 4)],
        &[(1, 1, 2, 1)],
        &[(1, 1, 0, 0), (1, 1, 2, 2)],
        &[(1, 1, 0, 1), (1, 1, 2, 3)],
        &[(-1, 2, 2, 0), (1, 1, 3, 1)],
        &[(1, 2, 1, 0), (1, 1, 3, 2)],
        &[(1, 1, 4, 0)],
        &[(1, 1, 3, 0), (1, 1, 4, 1)],
        &[(1, 1, 5, 0)],
    ];
    terms
        .iter()
        .map(|t| {
            let scaled: Vec<(Scalar, Matrix)> = t
                .iter()
                .map(|&(p, q, i, j)| (Scalar::from_ratio(p, q), so7_root(i, j)))
                .collect();
            let refs: Vec<(Scalar, &Matrix)> = scaled.iter().map(|(c, m)| (c.clone(), m)).collect();
            Matrix::combination(&refs).expect("same size")
        })
        .collect()
}

/// Fock states: subsets of `{1, 2, 3}` in the fixed order below.
const STATES: [u8; 8] = [0b111, 0b011, 0b101, 0b001, 0b110, 0b010, 0b100, 0b000];

fn creation(k: usize) -> Matrix {
    let bit = 1u8 << (k - 1);
    let index = |s: u8| STATES.iter().position(|&t| t == s).expect("state");
    let mut m = Matrix::zeros(8, 8);
    for (col, &s) in STATES.iter().enumerate() {
        if s & bit != 0 {
            continue;
        }
        let below = (s & (bit - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
        let row = index(s | bit);
        let mut e = Matrix::unit(8, row, col);
        if sign < 0 {
            e = e.scale(&Scalar::from_int(-1));
        }
        m = m.add(&e).expect("same size");
    }
    m
}

/// Clifford generators `γ_1..γ_7` on the 8-dimensional spinor space.
fn gammas() -> Vec<Matrix> {
    let mut g = Vec::with_capacity(7);
    for k in 1..=3 {
        let up = creation(k);
        let down = up.transpose();
        let sum = up.add(&down).expect("same size");
        g.push(sum.scale(&Scalar::i()));
        g.push(up.sub(&down).expect("same size"));
    }
    let mut prod = Matrix::identity(8);
    for x in &g {
        prod = prod.mul(x).expect("square");
    }
    g.push(prod);
    g
}

/// Image of `so(7)` under the spin representation, conjugated so that it
/// preserves the split antidiagonal form on `k^8` and meets the upper
/// triangular Borel of `so(8)` in a Borel of `so(7)`.
pub fn spin7_basis() -> Vec<Matrix> {
    let g = gammas();
    let d = Matrix::diagonal(&[1, -1, 1, -1, 1, 1, 1, 1].map(Scalar::from_int));
    let half = Scalar::from_ratio(1, 2);
    let mut out = Vec::with_capacity(21);
    for a in 0..7 {
        for b in a + 1..7 {
            let x = g[a].mul(&g[b]).expect("square").scale(&half);
            out.push(d.mul(&x).and_then(|y| y.mul(&d)).expect("square"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{is_bracket_closed, span, Classical, Realization};

    #[test]
    fn clifford_relations() {
        let g = gammas();
        for a in 0..7 {
            for b in 0..7 {
                let ac = g[a].mul(&g[b]).unwrap().add(&g[b].mul(&g[a]).unwrap()).unwrap();
                if a == b {
                    assert!(!ac.is_zero());
                    let s = ac.get(0, 0).clone();
                    assert_eq!(ac, Matrix::identity(8).scale(&s));
                } else {
                    assert!(ac.is_zero(), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn g2_inside_so7() {
        let so7 = Realization::build(Classical::So, 7).unwrap();
        let basis = g2_basis();
        let s = span(7, &basis);
        assert_eq!(s.dim(), 14);
        assert!(so7.algebra().contains(&s).unwrap());
        assert!(is_bracket_closed(7, &s));
    }

    #[test]
    fn spin7_inside_so8() {
        let so8 = Realization::build(Classical::So, 8).unwrap();
        let s = span(8, &spin7_basis());
        assert_eq!(s.dim(), 21);
        assert!(so8.algebra().contains(&s).unwrap());
        assert!(is_bracket_closed(8, &s));
    }
}
