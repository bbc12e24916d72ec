//! Generic orbit dimensions and the complexities built on them.
//!
//! Everything reduces to one quantity: the dimension of `Ad(g^-1) x + y`
//! for sampled `g`. Orbit dimensions equal tangent dimensions in
//! characteristic zero, and the generic value is the maximum over samples.

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Embedding, ParabolicSpec};
use crate::exec;
use crate::lie::{unflatten, Realization};
use crate::linalg::{rank_fast, Echelon, Matrix, Scalar, Subspace};
use crate::sampler::{sample_cell, sample_element, sample_pair, Cell, Sample, SamplerConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityResult {
    pub value: usize,
    pub max_orbit_dim: usize,
    /// Dimension of the variety acted on.
    pub ambient_dim: usize,
    pub samples_used: usize,
    pub seed: u64,
    /// Sample indices attaining the maximum.
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("embeddings live in different algebras ({0} vs {1})")]
    ParentMismatch(String, String),
    #[error("subspace is not contained in {0}")]
    NotInAlgebra(String),
    #[error("at least one sample is required")]
    NoSamples,
    #[error("{0} is not spanned by its lower, diagonal and upper parts")]
    NotTriangular(String),
}

fn check_inside(r: &Realization, s: &Subspace) -> Result<(), EngineError> {
    let d = r.size() * r.size();
    if s.ambient_dim() != d {
        return Err(EngineError::AmbientMismatch {
            expected: d,
            found: s.ambient_dim(),
        });
    }
    if !r.algebra().contains(s).unwrap_or(false) {
        return Err(EngineError::NotInAlgebra(r.name().to_string()));
    }
    Ok(())
}

fn same_parent(a: &Embedding, b: &Embedding) -> Result<(), EngineError> {
    if a.same_parent(b) {
        Ok(())
    } else {
        Err(EngineError::ParentMismatch(
            a.parent().name().to_string(),
            b.parent().name().to_string(),
        ))
    }
}

/// Fixed part of a family of sums: its echelon form in the realization's
/// coordinates, against which moving vectors are reduced before ranking.
struct Quotient {
    ech: Echelon,
    free: Vec<usize>,
}

impl Quotient {
    fn new(ncols: usize, fixed: &[Vec<Scalar>]) -> Self {
        let ech = Echelon::from_vectors(ncols, fixed);
        let pivots: std::collections::HashSet<usize> = ech.pivots().iter().copied().collect();
        let free = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        Quotient { ech, free }
    }

    /// `dim(fixed + span(moving))`.
    fn sum_dim(&self, moving: &[Vec<Scalar>]) -> usize {
        let rows: Vec<Vec<Scalar>> = moving
            .iter()
            .map(|v| {
                let r = self.ech.residual(v);
                self.free.iter().map(|&c| r[c].clone()).collect()
            })
            .collect();
        let refs: Vec<&[Scalar]> = rows.iter().map(Vec::as_slice).collect();
        self.ech.rank() + rank_fast(&refs, self.free.len()).0
    }
}

fn conjugated(r: &Realization, a: &Matrix, a_inv: &Matrix, mats: &[Matrix]) -> Vec<Vec<Scalar>> {
    mats.iter()
        .map(|x| {
            let y = a.mul(x).and_then(|m| m.mul(a_inv)).expect("square");
            r.project(y.entries())
        })
        .collect()
}

fn matrices(n: usize, s: &Subspace) -> Vec<Matrix> {
    s.basis().iter().map(|v| unflatten(n, v)).collect()
}

fn projected(r: &Realization, s: &Subspace) -> Vec<Vec<Scalar>> {
    s.basis().iter().map(|v| r.project(v)).collect()
}

fn collect(values: Vec<usize>, ambient: usize, offset: usize, cfg: &SamplerConfig) -> ComplexityResult {
    let max = values.iter().copied().max().unwrap_or(0);
    let witnesses = (0..values.len()).filter(|&i| values[i] == max).collect();
    let orbit = max - offset;
    ComplexityResult {
        value: ambient - orbit,
        max_orbit_dim: orbit,
        ambient_dim: ambient,
        samples_used: values.len(),
        seed: cfg.seed,
        witnesses,
    }
}

/// `dim g - max_i dim(Ad(g_i^-1) x + y)`.
pub fn generic_sum_codim(
    r: &Realization,
    x: &Subspace,
    y: &Subspace,
    cfg: &SamplerConfig,
) -> Result<ComplexityResult, EngineError> {
    check_inside(r, x)?;
    check_inside(r, y)?;
    if cfg.samples == 0 {
        return Err(EngineError::NoSamples);
    }
    let dims = sum_dims(r, x, y, cfg);
    Ok(collect(dims, r.dim(), 0, cfg))
}

/// `dim(Ad(g_i^-1) x + y)` for every sample. The larger of the two spaces
/// stays fixed; `dim(Ad(g^-1) x + y) = dim(x + Ad(g) y)`.
fn sum_dims(r: &Realization, x: &Subspace, y: &Subspace, cfg: &SamplerConfig) -> Vec<usize> {
    let n = r.size();
    let d = r.dim();
    let move_x = x.dim() <= y.dim();
    let (moving, fixed) = if move_x { (x, y) } else { (y, x) };
    let quotient = Quotient::new(d, &projected(r, fixed));
    let mats = matrices(n, moving);
    exec::map_range(cfg.samples, |i| {
        let Sample { g, g_inv } = sample_element(r, cfg, i as u64);
        let moved = if move_x {
            conjugated(r, &g_inv, &g, &mats)
        } else {
            conjugated(r, &g, &g_inv, &mats)
        };
        quotient.sum_dim(&moved)
    })
}

/// Complexity of `(G1, G2)` acting on `G` by `(g1, g2)·h = g1 h g2^-1`.
pub fn complexity_pair(e1: &Embedding, e2: &Embedding, cfg: &SamplerConfig) -> Result<ComplexityResult, EngineError> {
    same_parent(e1, e2)?;
    generic_sum_codim(e1.parent(), e1.sub_borel(), e2.sub_borel(), cfg)
}

/// `c_G(G/H)`.
pub fn complexity_homspace(h: &Embedding, cfg: &SamplerConfig) -> Result<ComplexityResult, EngineError> {
    let r = h.parent();
    generic_sum_codim(r, r.borel(), h.sub_basis(), cfg)
}

pub fn is_spherical_subgroup(h: &Embedding, cfg: &SamplerConfig) -> Result<bool, EngineError> {
    Ok(complexity_homspace(h, cfg)?.value == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Both factors reductive: an open double coset forces `G = G1 G2`.
    Decomposition,
    /// Some factor is not reductive; only the open orbit is certified.
    OpenOrbitOnly,
}

impl Certificate {
    pub fn label(self) -> &'static str {
        match self {
            Certificate::Decomposition => "decomposition",
            Certificate::OpenOrbitOnly => "open-orbit certificate only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub holds: bool,
    pub certificate: Certificate,
    pub result: ComplexityResult,
}

/// `G = G1 G2`, certified by a generic sum of the full subalgebras spanning.
pub fn is_decomposition(e1: &Embedding, e2: &Embedding, cfg: &SamplerConfig) -> Result<DecompositionReport, EngineError> {
    same_parent(e1, e2)?;
    let result = generic_sum_codim(e1.parent(), e1.sub_basis(), e2.sub_basis(), cfg)?;
    let certificate = if e1.meta().is_reductive && e2.meta().is_reductive {
        Certificate::Decomposition
    } else {
        Certificate::OpenOrbitOnly
    };
    Ok(DecompositionReport {
        holds: result.value == 0,
        certificate,
        result,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HorosphericalReport {
    pub horospherical: bool,
    /// Which conjugate of the maximal unipotent was found inside.
    pub witness: Option<String>,
    pub note: String,
}

/// Looks for a conjugate of the designated maximal unipotent inside `s`.
pub fn is_horospherical(s: &Embedding, cfg: &SamplerConfig) -> Result<HorosphericalReport, EngineError> {
    let r = s.parent();
    let n = r.size();
    let target = s.sub_basis();
    let ds = target.dim();
    let nil = r.nil_pos();
    if ds < nil.dim() {
        return Ok(HorosphericalReport {
            horospherical: false,
            witness: None,
            note: format!("no containment found (dimension {ds} < {})", nil.dim()),
        });
    }
    let quotient = Quotient::new(r.dim(), &projected(r, target));
    let mats = matrices(n, nil);
    let w = r.longest_weyl_element();
    let w_inv = w.inverse().expect("permutation matrix");
    let mut candidates: Vec<(String, Matrix, Matrix)> = vec![
        ("identity".to_string(), Matrix::identity(n), Matrix::identity(n)),
        ("weyl-flip".to_string(), w, w_inv),
    ];
    for i in 0..cfg.samples {
        let Sample { g, g_inv } = sample_element(r, cfg, i as u64);
        candidates.push((format!("sample {i}"), g, g_inv));
    }
    let hits = exec::map(&candidates, |(_, g, g_inv)| quotient.sum_dim(&conjugated(r, g, g_inv, &mats)) == ds);
    let witness = candidates.iter().zip(&hits).find(|(_, &h)| h).map(|((name, _, _), _)| name.clone());
    Ok(match witness {
        Some(wn) => HorosphericalReport {
            horospherical: true,
            note: format!("contains Ad(g)u for g = {wn}"),
            witness: Some(wn),
        },
        None => HorosphericalReport {
            horospherical: false,
            witness: None,
            note: "no containment found".to_string(),
        },
    })
}

/// Big-cell data of a subgroup whose algebra splits along the parent's
/// triangular decomposition.
pub fn subgroup_cell(e: &Embedding) -> Result<Cell, EngineError> {
    let r = e.parent();
    let n = r.size();
    let sub = e.sub_basis();
    let not_triangular = || EngineError::NotTriangular(e.id().to_string());
    let neg = sub.intersection(r.nil_neg()).expect("same ambient");
    let diag = sub.intersection(r.cartan()).expect("same ambient");
    if neg.dim() + diag.dim() + e.sub_nil().dim() != e.dim() {
        return Err(not_triangular());
    }
    let mut cocharacters = Vec::new();
    for v in diag.basis() {
        let m = unflatten(n, &v);
        let entries: Vec<&Scalar> = (0..n).map(|i| m.get(i, i)).collect();
        if entries.iter().any(|x| !x.is_real()) {
            return Err(not_triangular());
        }
        let lcm = entries
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.re().denom()));
        let ints: Option<Vec<i64>> = entries
            .iter()
            .map(|x| num_traits::ToPrimitive::to_i64(&(x.re() * &lcm).to_integer()))
            .collect();
        cocharacters.push(ints.ok_or_else(not_triangular)?);
    }
    Ok(Cell {
        size: n,
        neg: matrices(n, &neg),
        cocharacters,
        pos: matrices(n, e.sub_nil()),
    })
}

/// `c_{G1}(G1/H)` for a subalgebra `h` of `g1`, sampling inside `G1`.
pub fn complexity_within(g1: &Embedding, h: &Subspace, cfg: &SamplerConfig) -> Result<ComplexityResult, EngineError> {
    let r = g1.parent();
    check_inside(r, h)?;
    if !g1.sub_basis().contains(h).unwrap_or(false) {
        return Err(EngineError::NotInAlgebra(g1.id().to_string()));
    }
    if cfg.samples == 0 {
        return Err(EngineError::NoSamples);
    }
    let cell = subgroup_cell(g1)?;
    let n = r.size();
    let quotient = Quotient::new(r.dim(), &projected(r, g1.sub_borel()));
    let mats = matrices(n, h);
    let dims = exec::map_range(cfg.samples, |i| {
        let Sample { g, g_inv } = sample_cell(&cell, cfg, i as u64);
        quotient.sum_dim(&conjugated(r, &g, &g_inv, &mats))
    });
    Ok(collect(dims, g1.dim() - h.dim(), h.dim(), cfg))
}

/// `Ad(g) s` for a sample of the parent group.
pub fn conjugate_by(s: &Subspace, sample: &Sample) -> Subspace {
    crate::lie::conjugate(&sample.g, &sample.g_inv, s).expect("same ambient")
}

/// Complexity of `G` acting diagonally on `G/P x G/H`.
pub fn diagonal_complexity(
    p: &ParabolicSpec,
    h: &Embedding,
    cfg: &SamplerConfig,
) -> Result<ComplexityResult, EngineError> {
    let r = p.parent();
    if r.name() != h.parent().name() {
        return Err(EngineError::ParentMismatch(r.name().to_string(), h.parent().name().to_string()));
    }
    if cfg.samples == 0 {
        return Err(EngineError::NoSamples);
    }
    let n = r.size();
    let d = r.dim();
    let zeros = vec![Scalar::zero(); d];
    let join = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> { a.iter().chain(b).cloned().collect() };
    let diagonal: Vec<Vec<Scalar>> = projected(r, r.borel()).iter().map(|v| join(v, v)).collect();
    let quotient = Quotient::new(2 * d, &diagonal);
    let pm = matrices(n, p.parabolic());
    let hm = matrices(n, h.sub_basis());
    let (dp, dh) = (pm.len(), hm.len());
    let values = exec::map_range(cfg.samples, |i| {
        let (s1, s2) = sample_pair(r, cfg, i as u64);
        let mut rows: Vec<Vec<Scalar>> =
            conjugated(r, &s1.g, &s1.g_inv, &pm).iter().map(|v| join(v, &zeros)).collect();
        rows.extend(conjugated(r, &s2.g, &s2.g_inv, &hm).iter().map(|v| join(&zeros, v)));
        quotient.sum_dim(&rows)
    });
    let ambient = (d - dp) + (d - dh);
    let max = values.iter().copied().max().unwrap_or(0);
    let witnesses = (0..values.len()).filter(|&i| values[i] == max).collect();
    let orbit = max - dp - dh;
    Ok(ComplexityResult {
        value: ambient - orbit,
        max_orbit_dim: orbit,
        ambient_dim: ambient,
        samples_used: values.len(),
        seed: cfg.seed,
        witnesses,
    })
}

/// `c_L(G/H)` through the Levi's Borel: the other side of the bundle
/// equivalence for [`diagonal_complexity`].
pub fn levi_side_complexity(p: &ParabolicSpec, h: &Embedding, cfg: &SamplerConfig) -> Result<ComplexityResult, EngineError> {
    generic_sum_codim(p.parent(), p.levi().sub_borel(), h.sub_basis(), cfg)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog::{
        classical_embedding, g2_in_so7, horospherical_from_parabolic, parabolic_omitting, EmbeddingMeta, Kind,
        LeviPart,
    };
    use crate::lie::Classical;
    use crate::roots::ReductiveType;

    fn sl(n: usize) -> Arc<Realization> {
        Arc::new(Realization::build(Classical::Sl, n).unwrap())
    }

    fn cfg() -> SamplerConfig {
        SamplerConfig::with_seed(11)
    }

    #[test]
    fn sl2_sums() {
        let r = sl(2);
        let v = generic_sum_codim(&r, r.borel(), &r.nil_neg().sum(r.cartan()).unwrap(), &cfg()).unwrap();
        assert_eq!(v.value, 0);
        let v = generic_sum_codim(&r, r.nil_pos(), r.nil_pos(), &cfg()).unwrap();
        assert_eq!(v.value, 1);
        assert_eq!(v.max_orbit_dim, 2);
        let v = generic_sum_codim(&r, r.cartan(), r.borel(), &cfg()).unwrap();
        assert_eq!(v.value, 0);
        assert_eq!(v.witnesses.len(), 5);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = sl(2);
        let b = sl(3);
        assert!(matches!(
            generic_sum_codim(&a, b.borel(), a.borel(), &cfg()),
            Err(EngineError::AmbientMismatch { .. })
        ));
        let zero = SamplerConfig {
            samples: 0,
            ..cfg()
        };
        assert_eq!(generic_sum_codim(&a, a.borel(), a.borel(), &zero), Err(EngineError::NoSamples));
    }

    #[test]
    fn homspace_examples() {
        let sp4 = classical_embedding(Kind::SpInSl, &[4]).unwrap();
        assert_eq!(complexity_homspace(&sp4, &cfg()).unwrap().value, 0);
        let so3 = classical_embedding(Kind::SoCorner, &[5]).unwrap();
        assert_eq!(complexity_homspace(&so3, &cfg()).unwrap().value, 1);
        assert!(is_spherical_subgroup(&g2_in_so7(), &cfg()).unwrap());
    }

    #[test]
    fn trivial_and_borel_in_sl2() {
        let r = sl(2);
        let triv = Embedding::new("e", r.clone(), &[], EmbeddingMeta::reductive("e", ReductiveType::trivial()));
        assert_eq!(complexity_homspace(&triv, &cfg()).unwrap().value, 1);
        let b = parabolic_omitting(&r, &[0]).unwrap();
        let borel = horospherical_from_parabolic(&b, &LeviPart::Full, "B").unwrap();
        assert_eq!(complexity_pair(&triv, &borel, &cfg()).unwrap().value, 1);
        assert!(is_horospherical(&borel, &cfg()).unwrap().horospherical);
        let t = classical_embedding(Kind::Torus, &[2]).unwrap();
        let rep = is_horospherical(&t, &cfg()).unwrap();
        assert!(!rep.horospherical);
        assert!(rep.note.starts_with("no containment found"));
        assert!(!is_decomposition(&t, &t, &cfg()).unwrap().holds);
    }

    #[test]
    fn decompositions() {
        let sp4 = classical_embedding(Kind::SpInSl, &[4]).unwrap();
        let sl3 = classical_embedding(Kind::SlCorner, &[3, 1]).unwrap();
        let rep = is_decomposition(&sp4, &sl3, &cfg()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.certificate, Certificate::Decomposition);
    }

    #[test]
    fn complexity_inside_a_subgroup() {
        // Sp(4) is transitive on lines, so Sp(4)/(Sp(4) ∩ P) is a flag variety.
        let sp4 = classical_embedding(Kind::SpInSl, &[4]).unwrap();
        let p = parabolic_omitting(sp4.parent(), &[0]).unwrap();
        let h = sp4.sub_basis().intersection(p.parabolic()).unwrap();
        assert_eq!(h.dim(), 7);
        let v = complexity_within(&sp4, &h, &cfg()).unwrap();
        assert_eq!((v.value, v.ambient_dim), (0, 3));

        let r = sl(2);
        let whole = Embedding::new("sl2", r.clone(), r.basis(), EmbeddingMeta::reductive("SL(2)", ReductiveType::sl(2)));
        let v = complexity_within(&whole, &Subspace::zero(4), &cfg()).unwrap();
        assert_eq!(v.value, 1);

        let g2 = g2_in_so7();
        let cell = subgroup_cell(&g2).unwrap();
        assert_eq!((cell.neg.len(), cell.cocharacters.len(), cell.pos.len()), (6, 2, 6));
        let s = crate::sampler::sample_cell(&cell, &cfg(), 0);
        let inside = crate::lie::conjugate(&s.g, &s.g_inv, g2.sub_basis()).unwrap();
        assert_eq!(inside.sum(g2.sub_basis()).unwrap().dim(), 14);
    }

    #[test]
    fn diagonal_examples() {
        let r = sl(2);
        let b = parabolic_omitting(&r, &[0]).unwrap();
        let t = classical_embedding(Kind::Torus, &[2]).unwrap();
        let v = diagonal_complexity(&b, &t, &cfg()).unwrap();
        assert_eq!(v.value, 1);
        assert_eq!(levi_side_complexity(&b, &t, &cfg()).unwrap().value, 1);

        let so7 = g2_in_so7();
        let p = parabolic_omitting(so7.parent(), &[0]).unwrap();
        assert_eq!(diagonal_complexity(&p, &so7, &cfg()).unwrap().value, 0);

        let whole = parabolic_omitting(&r, &[]).unwrap();
        let borel = horospherical_from_parabolic(&b, &LeviPart::Full, "B").unwrap();
        assert_eq!(diagonal_complexity(&whole, &borel, &cfg()).unwrap().value, 0);
    }
}
