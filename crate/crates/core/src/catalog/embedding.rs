use std::sync::Arc;

use serde::Serialize;

use super::CatalogError;
use crate::lie::{is_bracket_closed, is_nilpotent_family, is_solvable, span, Check, Realization, ValidationReport};
use crate::linalg::{Matrix, Subspace};
use crate::roots::ReductiveType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRef {
    pub table: String,
    pub row: String,
}

impl TableRef {
    pub fn new(table: &str, row: impl ToString) -> Self {
        TableRef {
            table: table.to_string(),
            row: row.to_string(),
        }
    }
}

/// Classification data attached to a subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingMeta {
    /// Group name as it appears in the tables, e.g. `S(GL(1)xGL(3))`.
    pub label: String,
    /// Type of the reductive part (a Levi factor for non-reductive groups).
    pub abstract_type: ReductiveType,
    /// Dimension of the unipotent radical.
    pub radical_dim: usize,
    pub is_reductive: bool,
    pub is_levi: bool,
    pub is_symmetric: bool,
    pub table_refs: Vec<TableRef>,
}

impl EmbeddingMeta {
    pub fn reductive(label: impl Into<String>, abstract_type: ReductiveType) -> Self {
        EmbeddingMeta {
            label: label.into(),
            abstract_type,
            radical_dim: 0,
            is_reductive: true,
            is_levi: false,
            is_symmetric: false,
            table_refs: Vec::new(),
        }
    }

    pub fn symmetric(mut self, yes: bool) -> Self {
        self.is_symmetric = yes;
        self
    }

    pub fn with_ref(mut self, r: TableRef) -> Self {
        self.table_refs.push(r);
        self
    }
}

/// A subalgebra of a realization with its designated Borel and nilpotent
/// parts, both obtained by intersecting with the parent's triangular
/// subalgebras.
#[derive(Debug, Clone)]
pub struct Embedding {
    id: String,
    parent: Arc<Realization>,
    sub_basis: Subspace,
    sub_borel: Subspace,
    sub_nil: Subspace,
    meta: EmbeddingMeta,
    parabolic: Option<(Subspace, Subspace)>,
}

impl Embedding {
    /// Wraps the span of `mats`. The constructors in this crate place every
    /// subalgebra so that its intersection with the parent's upper
    /// triangular Borel is a Borel of the subalgebra; [`Embedding::check`]
    /// verifies that.
    pub fn new(id: impl Into<String>, parent: Arc<Realization>, mats: &[Matrix], meta: EmbeddingMeta) -> Self {
        let n = parent.size();
        let sub = span(n, mats);
        Embedding::from_subspace(id, parent, &sub, meta)
    }

    pub fn from_subspace(
        id: impl Into<String>,
        parent: Arc<Realization>,
        sub: &Subspace,
        meta: EmbeddingMeta,
    ) -> Self {
        let n = parent.size();
        let basis = Subspace::new(n * n, sub.basis()).expect("same ambient");
        let sub_borel = intersect(&basis, parent.borel());
        let sub_nil = intersect(&basis, parent.nil_pos());
        Embedding {
            id: id.into(),
            parent,
            sub_basis: basis,
            sub_borel,
            sub_nil,
            meta,
            parabolic: None,
        }
    }

    pub(crate) fn with_parabolic(mut self, parabolic: Subspace, nilradical: Subspace) -> Self {
        self.parabolic = Some((parabolic, nilradical));
        self
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn with_meta(mut self, meta: EmbeddingMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn parent(&self) -> &Arc<Realization> {
        &self.parent
    }

    pub fn sub_basis(&self) -> &Subspace {
        &self.sub_basis
    }

    pub fn sub_borel(&self) -> &Subspace {
        &self.sub_borel
    }

    pub fn sub_nil(&self) -> &Subspace {
        &self.sub_nil
    }

    pub fn meta(&self) -> &EmbeddingMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut EmbeddingMeta {
        &mut self.meta
    }

    /// The parabolic and its nilradical, for Levi subalgebras.
    pub fn parabolic(&self) -> Option<(&Subspace, &Subspace)> {
        self.parabolic.as_ref().map(|(p, u)| (p, u))
    }

    pub fn dim(&self) -> usize {
        self.sub_basis.spanning_vectors().len()
    }

    /// Matrices of the subalgebra basis.
    pub fn matrices(&self) -> Vec<Matrix> {
        let n = self.parent.size();
        self.sub_basis
            .spanning_vectors()
            .iter()
            .map(|v| Matrix::from_entries(n, n, v.clone()).expect("n^2 entries"))
            .collect()
    }

    pub fn same_parent(&self, other: &Embedding) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || self.parent.name() == other.parent.name()
    }

    /// Structural checks against the metadata.
    pub fn check(&self) -> ValidationReport {
        let n = self.parent.size();
        let t = &self.meta.abstract_type;
        let rad = self.meta.radical_dim;
        let mut checks = Vec::new();
        let mut push = |name: &str, passed: bool, detail: String| {
            checks.push(Check {
                name: name.to_string(),
                passed,
                detail,
            })
        };
        push(
            "inside-parent",
            self.parent.algebra().contains(&self.sub_basis).unwrap_or(false),
            self.parent.name().to_string(),
        );
        push("bracket-closure", is_bracket_closed(n, &self.sub_basis), String::new());
        let d = self.sub_basis.dim();
        push(
            "dimension",
            d == t.dimension() + rad,
            format!("{} vs {} + {}", d, t.dimension(), rad),
        );
        let b = self.sub_borel.dim();
        push(
            "borel-dimension",
            b == t.borel_dim() + rad,
            format!("{} vs {} + {}", b, t.borel_dim(), rad),
        );
        let u = self.sub_nil.dim();
        push(
            "nil-dimension",
            u == t.unipotent_dim() + rad,
            format!("{} vs {} + {}", u, t.unipotent_dim(), rad),
        );
        push(
            "nested",
            self.sub_basis.contains(&self.sub_borel).unwrap_or(false)
                && self.sub_borel.contains(&self.sub_nil).unwrap_or(false),
            String::new(),
        );
        push("borel-solvable", is_solvable(n, &self.sub_borel), String::new());
        push("nil-nilpotent", is_nilpotent_family(n, &self.sub_nil), String::new());
        if self.meta.is_levi {
            let ok = match &self.parabolic {
                Some((p, u)) => {
                    let sum = self.sub_basis.sum(u).expect("same ambient");
                    let direct = sum.dim() == d + u.dim();
                    direct && sum.dim() == p.dim() && p.contains(&sum).unwrap_or(false)
                }
                None => false,
            };
            push("levi-decomposition", ok, String::new());
        }
        ValidationReport { checks }
    }
}

fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    let i = a.intersection(b).expect("same ambient");
    Subspace::new(a.ambient_dim(), i.basis()).expect("same ambient")
}

/// A standard parabolic subalgebra containing the designated Borel.
#[derive(Debug, Clone)]
pub struct ParabolicSpec {
    parent: Arc<Realization>,
    simple_root_subset: Vec<usize>,
    parabolic: Subspace,
    nilradical: Subspace,
    levi: Embedding,
}

impl ParabolicSpec {
    pub fn parent(&self) -> &Arc<Realization> {
        &self.parent
    }

    /// Simple roots (0-based) whose root spaces lie in the Levi.
    pub fn simple_root_subset(&self) -> &[usize] {
        &self.simple_root_subset
    }

    /// Simple roots (0-based) left out of the Levi.
    pub fn omitted(&self) -> Vec<usize> {
        (0..self.parent.roots().rank())
            .filter(|k| !self.simple_root_subset.contains(k))
            .collect()
    }

    pub fn parabolic(&self) -> &Subspace {
        &self.parabolic
    }

    pub fn nilradical(&self) -> &Subspace {
        &self.nilradical
    }

    pub fn levi(&self) -> &Embedding {
        &self.levi
    }

    /// As an embedding in its own right (a non-reductive subalgebra).
    pub fn as_embedding(&self, id: impl Into<String>) -> Embedding {
        let lt = self.levi.meta().abstract_type.clone();
        let meta = EmbeddingMeta {
            label: format!("P({})", lt),
            abstract_type: lt,
            radical_dim: self.nilradical.spanning_vectors().len(),
            is_reductive: self.nilradical.spanning_vectors().is_empty(),
            is_levi: false,
            is_symmetric: false,
            table_refs: Vec::new(),
        };
        Embedding::from_subspace(id, self.parent.clone(), &self.parabolic, meta)
    }
}

/// The standard parabolic whose Levi contains the root spaces supported on
/// `subset` (0-based simple-root indices).
pub fn levi_of_parabolic(r: &Arc<Realization>, subset: &[usize]) -> Result<ParabolicSpec, CatalogError> {
    let rs = r.roots();
    if let Some(&bad) = subset.iter().find(|&&k| k >= rs.rank()) {
        return Err(CatalogError::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    let mut subset: Vec<usize> = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    let n = r.size();
    let mut levi = Vec::new();
    let mut nil = Vec::new();
    let mut extra_neg = Vec::new();
    for root in rs.positive() {
        let (i, j) = root.position;
        let pos = r.element_at((i, j)).expect("root vector").clone();
        let neg = r.element_at((j, i)).expect("opposite root vector").clone();
        if rs.in_span(root, &subset) {
            levi.push(pos);
            levi.push(neg.clone());
            extra_neg.push(neg);
        } else {
            nil.push(pos);
        }
    }
    let cartan: Vec<Matrix> = r
        .basis()
        .iter()
        .zip(r.positions())
        .filter(|(_, (i, j))| i == j)
        .map(|(m, _)| m.clone())
        .collect();
    levi.extend(cartan);
    let nilradical = span(n, &nil);
    let mut p_vecs: Vec<Vec<_>> = r.borel().spanning_vectors().to_vec();
    p_vecs.extend(extra_neg.iter().map(|m| m.entries().to_vec()));
    let parabolic = Subspace::new(n * n, p_vecs).expect("same ambient");
    let levi_type = rs.levi_type(&subset, r.cartan().dim());
    let omitted: Vec<usize> = (0..rs.rank()).filter(|k| !subset.contains(k)).collect();
    let meta = EmbeddingMeta {
        label: format!("L({})", levi_type),
        abstract_type: levi_type,
        radical_dim: 0,
        is_reductive: true,
        is_levi: true,
        is_symmetric: false,
        table_refs: Vec::new(),
    };
    let levi_emb = Embedding::new(
        format!("LEVI.{}.omit{}", r.name(), node_list(&omitted)),
        r.clone(),
        &levi,
        meta,
    )
    .with_parabolic(parabolic.clone(), nilradical.clone());
    Ok(ParabolicSpec {
        parent: r.clone(),
        simple_root_subset: subset,
        parabolic,
        nilradical,
        levi: levi_emb,
    })
}

/// Parabolic given by the simple roots to leave out (0-based).
pub fn parabolic_omitting(r: &Arc<Realization>, omitted: &[usize]) -> Result<ParabolicSpec, CatalogError> {
    let rank = r.roots().rank();
    if let Some(&bad) = omitted.iter().find(|&&k| k >= rank) {
        return Err(CatalogError::IndexOutOfRange { index: bad, rank });
    }
    let keep: Vec<usize> = (0..rank).filter(|k| !omitted.contains(k)).collect();
    levi_of_parabolic(r, &keep)
}

/// 1-based node list joined by `_`, e.g. `1_3`; `none` when empty.
pub fn node_list(nodes: &[usize]) -> String {
    if nodes.is_empty() {
        return "none".to_string();
    }
    nodes.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join("_")
}

/// Which part of the Levi goes into a horospherical subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeviPart {
    /// The whole Levi; the result is the parabolic itself.
    Full,
    /// The derived algebra `[l, l]` only.
    Commutator,
    /// `[l, l]` plus the given elements of the Levi's centre.
    WithTorus(Vec<Matrix>),
}

/// `nilradical(p) + l0` with `[l, l] ⊆ l0 ⊆ l`.
pub fn horospherical_from_parabolic(
    p: &ParabolicSpec,
    part: &LeviPart,
    id: impl Into<String>,
) -> Result<Embedding, CatalogError> {
    let r = p.parent();
    let n = r.size();
    let levi = p.levi().sub_basis();
    let derived = crate::lie::derived(n, levi);
    let derived = Subspace::new(n * n, derived.basis()).expect("same ambient");
    let l0 = match part {
        LeviPart::Full => levi.clone(),
        LeviPart::Commutator => derived.clone(),
        LeviPart::WithTorus(extra) => {
            let t = span(n, extra);
            if !levi.contains(&t).unwrap_or(false) {
                return Err(CatalogError::InvalidParams(
                    "torus part lies outside the Levi".to_string(),
                ));
            }
            let centre = crate::lie::centralizer(r, levi);
            if !centre.contains(&t).unwrap_or(false) {
                return Err(CatalogError::InvalidParams(
                    "torus part is not central in the Levi".to_string(),
                ));
            }
            derived.sum(&t).expect("same ambient")
        }
    };
    let sub = l0.sum(p.nilradical()).expect("same ambient");
    let ss: Vec<_> = p.levi().meta().abstract_type.simple_factors().to_vec();
    let torus = l0.dim() - derived.dim();
    let reductive_part = ReductiveType::new(ss, torus);
    let radical = p.nilradical().dim();
    let meta = EmbeddingMeta {
        label: format!("Ru(P)x({})", reductive_part),
        abstract_type: reductive_part,
        radical_dim: radical,
        is_reductive: radical == 0,
        is_levi: false,
        is_symmetric: false,
        table_refs: Vec::new(),
    };
    Ok(Embedding::from_subspace(id, r.clone(), &sub, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Classical;

    fn arc(f: Classical, n: usize) -> Arc<Realization> {
        Arc::new(Realization::build(f, n).unwrap())
    }

    #[test]
    fn whole_and_first_node_levis() {
        let sl4 = arc(Classical::Sl, 4);
        let p = levi_of_parabolic(&sl4, &[0, 1, 2]).unwrap();
        assert_eq!(p.parabolic().dim(), 15);
        assert_eq!(p.levi().dim(), 15);
        assert!(p.levi().check().all_passed());

        let p = parabolic_omitting(&sl4, &[0]).unwrap();
        assert_eq!(p.levi().meta().abstract_type.to_string(), "A2+T1");
        assert!(p.levi().check().all_passed(), "{:?}", p.levi().check());

        let so7 = arc(Classical::So, 7);
        let p = parabolic_omitting(&so7, &[0]).unwrap();
        assert_eq!(p.levi().meta().abstract_type.to_string(), "B2+T1");
        assert!(p.levi().check().all_passed());
        assert!(p.parabolic().contains(so7.borel()).unwrap());
    }

    #[test]
    fn out_of_range_index() {
        let sl3 = arc(Classical::Sl, 3);
        assert!(matches!(
            levi_of_parabolic(&sl3, &[2]),
            Err(CatalogError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn horospherical_examples() {
        let sl2 = arc(Classical::Sl, 2);
        let b = parabolic_omitting(&sl2, &[0]).unwrap();
        let full = horospherical_from_parabolic(&b, &LeviPart::Full, "b").unwrap();
        assert_eq!(full.dim(), 2);
        let u = horospherical_from_parabolic(&b, &LeviPart::Commutator, "u").unwrap();
        assert_eq!(u.dim(), 1);
        assert!(u.check().all_passed());

        let so4 = arc(Classical::So, 4);
        let p = parabolic_omitting(&so4, &[1]).unwrap();
        assert_eq!(p.levi().meta().abstract_type.to_string(), "A1+T1");
        let s = horospherical_from_parabolic(&p, &LeviPart::Commutator, "s").unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.check().all_passed(), "{:?}", s.check());
        assert!(s.sub_basis().contains(so4.nil_pos()).unwrap());
    }

    #[test]
    fn torus_part_must_be_central() {
        let sl3 = arc(Classical::Sl, 3);
        let p = parabolic_omitting(&sl3, &[0]).unwrap();
        let bad = LeviPart::WithTorus(vec![Matrix::unit(3, 1, 2)]);
        assert!(horospherical_from_parabolic(&p, &bad, "x").is_err());
    }
}
