use std::str::FromStr;
use std::sync::Arc;

use super::{
    g2_basis, parabolic_omitting, spin7_basis, CatalogError, Embedding, EmbeddingMeta, Frame,
};
use crate::lie::{centralizer, derived, span, Classical, Realization};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::roots::{Family, ReductiveType};

pub fn realization(family: Classical, n: usize) -> Result<Arc<Realization>, CatalogError> {
    Ok(Arc::new(Realization::build(family, n)?))
}

/// Basis of the full algebra of `family` on an `s x s` block, empty when
/// the group is trivial.
pub fn piece(family: Classical, s: usize) -> Vec<Matrix> {
    let trivial = match family {
        Classical::Gl => s == 0,
        Classical::Sp => s < 2 || s % 2 == 1,
        _ => s < 2,
    };
    if trivial {
        return Vec::new();
    }
    Realization::build(family, s).expect("valid block size").basis().to_vec()
}

/// Embeds block pieces through a frame.
pub fn in_blocks(frame: &Frame, pieces: &[Vec<Matrix>]) -> Vec<Matrix> {
    assert_eq!(frame.num_blocks(), pieces.len(), "one piece per block");
    pieces
        .iter()
        .enumerate()
        .flat_map(|(b, ms)| ms.iter().map(move |m| frame.embed(b, m)))
        .collect()
}

pub fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&e| Scalar::from_int(e)).collect::<Vec<_>>())
}

/// `A ↦ diag(A, 0, -J A^T J)` from `gl(k)` into `so` or `sp` of size `total`
/// (`k = total / 2`, the middle zero only for odd `total`).
pub fn gl_levi_image(total: usize, a: &Matrix) -> Matrix {
    let k = a.rows();
    assert_eq!(k, total / 2, "gl(k) sits in size 2k or 2k + 1");
    Matrix::from_fn(total, total, |i, j| {
        if i < k && j < k {
            a.get(i, j).clone()
        } else if i >= total - k && j >= total - k {
            // (-J A^T J)_{ij} = -A_{k-1-j', k-1-i'} with i' = i - (total - k)
            let ii = i - (total - k);
            let jj = j - (total - k);
            -a.get(k - 1 - jj, k - 1 - ii).clone()
        } else {
            Scalar::zero()
        }
    })
}

fn meta(label: &str, t: ReductiveType) -> EmbeddingMeta {
    EmbeddingMeta::reductive(label, t)
}

/// The standard Levi given by omitted simple roots (0-based).
pub fn levi(parent: &Arc<Realization>, omitted: &[usize], label: &str) -> Result<Embedding, CatalogError> {
    let p = parabolic_omitting(parent, omitted)?;
    let mut e = p.levi().clone();
    e.meta_mut().label = label.to_string();
    Ok(e)
}

/// Derived algebra of a standard Levi.
pub fn levi_commutator(parent: &Arc<Realization>, omitted: &[usize], label: &str) -> Result<Embedding, CatalogError> {
    let p = parabolic_omitting(parent, omitted)?;
    let n = parent.size();
    let d = derived(n, p.levi().sub_basis());
    let ss = p.levi().meta().abstract_type.simple_factors().to_vec();
    let id = format!("{}.comm", p.levi().id());
    Ok(Embedding::from_subspace(id, parent.clone(), &d, meta(label, ReductiveType::new(ss, 0))))
}

/// `g2 ⊂ so(7)`.
pub fn g2_in_so7() -> Embedding {
    let r = realization(Classical::So, 7).expect("so7");
    let t = ReductiveType::simple(Family::G, 2).expect("G2");
    Embedding::new("G2.so7", r, &g2_basis(), meta("G2", t))
}

/// The spin representation of `so(7)` inside `so(8)`.
pub fn spin7_in_so8() -> Embedding {
    let r = realization(Classical::So, 8).expect("so8");
    Embedding::new("SPIN7.so8", r, &spin7_basis(), meta("Spin(7)", ReductiveType::so(7)))
}

/// Vectors of `k^n` fixed by every element of `s`.
pub fn common_fixed_dim(n: usize, s: &Subspace) -> usize {
    let mats: Vec<Matrix> = s.basis().iter().map(|v| crate::lie::unflatten(n, v)).collect();
    if mats.is_empty() {
        return n;
    }
    let rows: Vec<Vec<Scalar>> = mats.iter().flat_map(|m| (0..n).map(|i| m.row(i).to_vec()).collect::<Vec<_>>()).collect();
    let stacked = Matrix::from_rows(rows).expect("rectangular");
    crate::linalg::kernel(&stacked).len()
}

/// Named constructions of classical subalgebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// `sp(2n) ⊂ sl(2n)`; parameter `2n`.
    SpInSl,
    /// Corner `so(m) ⊂ so(m + 1)`; parameter `m`.
    SoInSo,
    /// Levi `gl(n) ⊂ so(2n)`; parameter `n`.
    GlInSo,
    /// Corner `sl(n) ⊂ sl(n + k)`; parameters `n, k`.
    SlCorner,
    /// Corner `so(n - 2) ⊂ so(n)`; parameter `n`.
    SoCorner,
    /// `sl(n) ⊂ so(2n)`; parameter `n`.
    SlInSoEven,
    /// `sl(n) ⊂ so(2n + 1)`; parameter `n`.
    SlInSoOdd,
    /// `so(3) ⊂ so(4)`, diagonal in `sl(2) x sl(2)`.
    So3InSo4,
    /// Diagonal Cartan of `sl(n)`; parameter `n`.
    Torus,
    /// Block-diagonal `sl(a) x sl(b) x ...` in `sl(a + b + ...)`.
    SlProduct,
    /// Nested `so(a) x so(b) x ...` in `so(a + b + ...)`.
    SoProduct,
    /// Nested `sp(a) x sp(b) x ...` in `sp(a + b + ...)`.
    SpProduct,
}

impl FromStr for Kind {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "sp-in-sl" => Kind::SpInSl,
            "so-in-so" => Kind::SoInSo,
            "gl-in-so" => Kind::GlInSo,
            "sl-corner" => Kind::SlCorner,
            "so-corner" => Kind::SoCorner,
            "sl-in-so-even" => Kind::SlInSoEven,
            "sl-in-so-odd" => Kind::SlInSoOdd,
            "so3-in-so4" => Kind::So3InSo4,
            "torus" => Kind::Torus,
            "sl-product" => Kind::SlProduct,
            "so-product" => Kind::SoProduct,
            "sp-product" => Kind::SpProduct,
            _ => return Err(CatalogError::UnknownId(s.to_string())),
        })
    }
}

fn want(params: &[usize], count: usize) -> Result<(), CatalogError> {
    if params.len() == count {
        Ok(())
    } else {
        Err(CatalogError::InvalidParams(format!("expected {count} parameters, got {}", params.len())))
    }
}

fn bad(msg: &str) -> CatalogError {
    CatalogError::InvalidParams(msg.to_string())
}

pub fn classical_embedding(kind: Kind, params: &[usize]) -> Result<Embedding, CatalogError> {
    match kind {
        Kind::SpInSl => {
            want(params, 1)?;
            let s = params[0];
            if s < 2 || s % 2 == 1 {
                return Err(bad("sp needs an even size >= 2"));
            }
            let r = realization(Classical::Sl, s)?;
            let id = format!("sp{s}.in.sl{s}");
            Ok(Embedding::new(id, r, &piece(Classical::Sp, s), meta(&format!("Sp({s})"), ReductiveType::sp(s))))
        }
        Kind::SoInSo => {
            want(params, 1)?;
            let m = params[0];
            if m < 1 {
                return Err(bad("so(m) needs m >= 1"));
            }
            orthogonal_blocks(&[1, m], &[None, Some(Classical::So)], &format!("SO({m})"))
        }
        Kind::SoCorner => {
            want(params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(bad("so(n - 2) in so(n) needs n >= 3"));
            }
            orthogonal_blocks(&[2, n - 2], &[None, Some(Classical::So)], &format!("SO({})", n - 2))
        }
        Kind::GlInSo => {
            want(params, 1)?;
            let n = params[0];
            if n < 2 {
                return Err(bad("gl(n) in so(2n) needs n >= 2"));
            }
            let r = realization(Classical::So, 2 * n)?;
            levi(&r, &[n - 1], &format!("GL({n})"))
        }
        Kind::SlInSoEven | Kind::SlInSoOdd => {
            want(params, 1)?;
            let n = params[0];
            let size = if kind == Kind::SlInSoEven { 2 * n } else { 2 * n + 1 };
            if n < 1 || size < 3 {
                return Err(bad("sl(n) in so needs size >= 3"));
            }
            let r = realization(Classical::So, size)?;
            levi_commutator(&r, &[n - 1], &format!("SL({n})"))
        }
        Kind::SlCorner => {
            want(params, 2)?;
            let (n, k) = (params[0], params[1]);
            if n < 1 || k < 1 {
                return Err(bad("sl(n) in sl(n + k) needs n, k >= 1"));
            }
            let r = realization(Classical::Sl, n + k)?;
            let frame = Frame::linear(&[k, n]);
            let mats = in_blocks(&frame, &[Vec::new(), piece(Classical::Sl, n)]);
            Ok(Embedding::new(format!("sl{n}.in.sl{}", n + k), r, &mats, meta(&format!("SL({n})"), ReductiveType::sl(n))))
        }
        Kind::So3InSo4 => orthogonal_blocks(&[1, 3], &[None, Some(Classical::So)], "SO(3)"),
        Kind::Torus => {
            want(params, 1)?;
            let n = params[0];
            let r = realization(Classical::Sl, n)?;
            let c = r.cartan().clone();
            Ok(Embedding::from_subspace(format!("CARTAN.sl{n}"), r, &c, meta("T", ReductiveType::torus(n - 1))))
        }
        Kind::SlProduct => {
            if params.is_empty() || params.contains(&0) {
                return Err(bad("block sizes must be positive"));
            }
            let total: usize = params.iter().sum();
            let r = realization(Classical::Sl, total)?;
            let frame = Frame::linear(params);
            let pieces: Vec<_> = params.iter().map(|&s| piece(Classical::Sl, s)).collect();
            let t = params.iter().fold(ReductiveType::trivial(), |t, &s| t.times(&ReductiveType::sl(s)));
            let label = params.iter().map(|s| format!("SL({s})")).collect::<Vec<_>>().join("x");
            Ok(Embedding::new(format!("slprod.{}", join(params)), r, &in_blocks(&frame, &pieces), meta(&label, t)))
        }
        Kind::SoProduct => {
            if params.is_empty() || params.contains(&0) {
                return Err(bad("block sizes must be positive"));
            }
            let fams: Vec<_> = params.iter().map(|_| Some(Classical::So)).collect();
            let label = params.iter().map(|s| format!("SO({s})")).collect::<Vec<_>>().join("x");
            orthogonal_blocks(params, &fams, &label)
        }
        Kind::SpProduct => {
            if params.is_empty() || params.iter().any(|s| *s == 0 || s % 2 == 1) {
                return Err(bad("symplectic block sizes must be even and positive"));
            }
            let fams: Vec<_> = params.iter().map(|_| Some(Classical::Sp)).collect();
            let label = params.iter().map(|s| format!("Sp({s})")).collect::<Vec<_>>().join("x");
            symplectic_blocks(params, &fams, &label)
        }
    }
}

fn join(p: &[usize]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join("_")
}

fn block_type(family: Classical, s: usize) -> ReductiveType {
    match family {
        Classical::So => ReductiveType::so(s),
        Classical::Sp => ReductiveType::sp(s),
        Classical::Sl => ReductiveType::sl(s),
        Classical::Gl => ReductiveType::gl(s),
    }
}

/// Nested orthogonal blocks; `None` leaves a block trivial.
pub fn orthogonal_blocks(sizes: &[usize], fams: &[Option<Classical>], label: &str) -> Result<Embedding, CatalogError> {
    let frame = Frame::orthogonal(sizes).ok_or_else(|| bad("at most two odd orthogonal blocks"))?;
    blocks_in(Classical::So, &frame, sizes, fams, label)
}

/// Nested symplectic blocks; `None` leaves a block trivial.
pub fn symplectic_blocks(sizes: &[usize], fams: &[Option<Classical>], label: &str) -> Result<Embedding, CatalogError> {
    let frame = Frame::symplectic(sizes).ok_or_else(|| bad("symplectic blocks must be even"))?;
    blocks_in(Classical::Sp, &frame, sizes, fams, label)
}

/// Contiguous blocks in `sl`.
pub fn linear_blocks(sizes: &[usize], fams: &[Option<Classical>], label: &str) -> Result<Embedding, CatalogError> {
    let frame = Frame::linear(sizes);
    blocks_in(Classical::Sl, &frame, sizes, fams, label)
}

fn blocks_in(
    parent: Classical,
    frame: &Frame,
    sizes: &[usize],
    fams: &[Option<Classical>],
    label: &str,
) -> Result<Embedding, CatalogError> {
    let r = realization(parent, frame.size())?;
    let pieces: Vec<Vec<Matrix>> = sizes
        .iter()
        .zip(fams)
        .map(|(&s, f)| f.map(|f| piece(f, s)).unwrap_or_default())
        .collect();
    let t = sizes
        .iter()
        .zip(fams)
        .filter_map(|(&s, f)| f.map(|f| block_type(f, s)))
        .fold(ReductiveType::trivial(), |t, b| t.times(&b));
    let id = format!("{}.blocks.{}", r.name(), join(sizes));
    Ok(Embedding::new(id, r, &in_blocks(frame, &pieces), meta(label, t)))
}

/// Adds matrices (e.g. a central torus) to an embedding's span.
pub fn extend(e: Embedding, extra: &[Matrix], t: ReductiveType, label: &str) -> Embedding {
    let n = e.parent().size();
    let s = e.sub_basis().sum(&span(n, extra)).expect("same ambient");
    let m = EmbeddingMeta::reductive(label, t);
    Embedding::from_subspace(e.id().to_string(), e.parent().clone(), &s, m)
}

/// Image of `sp(2n)` in `so(4n)` through the `gl(2n)` Levi.
pub fn sp_in_so_via_levi(n: usize) -> Result<(Arc<Realization>, Vec<Matrix>), CatalogError> {
    let total = 4 * n;
    let r = realization(Classical::So, total)?;
    let mats = piece(Classical::Sp, 2 * n).iter().map(|a| gl_levi_image(total, a)).collect();
    Ok((r, mats))
}

/// Centralizer of `mats` inside the realization, as matrices.
pub fn centralizer_of(r: &Realization, mats: &[Matrix]) -> Vec<Matrix> {
    let n = r.size();
    centralizer(r, &span(n, mats))
        .basis()
        .iter()
        .map(|v| crate::lie::unflatten(n, v))
        .collect()
}
