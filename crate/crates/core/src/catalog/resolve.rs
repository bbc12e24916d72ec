//! String ids for every subgroup the catalog can build.
//!
//! ```text
//! T1.<row>[.n<k>].H|K     T3.<row>[.n<k>].H|K     T4.Z.<slug>  T4.O.<slug>
//! HORO.<alg>.borel        HORO.<alg>.unipotent    HORO.<alg>.omit<nodes>.full|comm|torus<coeffs>
//! P.<alg>.omit<nodes>     LEVI.<alg>.omit<nodes>
//! CARTAN.<alg>  TRIV.<alg>  WHOLE.<alg>  G2.so7  SPIN7.so8
//! ```
//!
//! `<nodes>` are 1-based simple roots joined by `_`, or `none`. `torus<coeffs>`
//! adds one central element, given by integer coefficients on the parent's
//! Cartan basis (`m` marks a minus sign), e.g. `torus1_m1`.

use std::sync::Arc;

use super::{
    g2_in_so7, horospherical_from_parabolic, parabolic_omitting, spin7_in_so8, table1_instances,
    table3_instances, table4_instance, CatalogError, Embedding, EmbeddingMeta, LeviPart, ParabolicSpec,
};
use crate::lie::Realization;
use crate::roots::ReductiveType;

/// Largest ambient size reachable by id.
pub const MAX_ID_SIZE: usize = 16;

const ALIASES: &[(&str, &str)] = &[("T4.Z.sl2-torus", "T4.Z.sl2-sgl1xgl1")];

fn unknown(id: &str) -> CatalogError {
    CatalogError::UnknownId(id.to_string())
}

fn algebra(name: &str, id: &str) -> Result<Arc<Realization>, CatalogError> {
    let digits = name.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    match digits.parse::<usize>() {
        Ok(n) if n <= MAX_ID_SIZE => {}
        _ => return Err(unknown(id)),
    }
    Ok(Arc::new(Realization::from_name(name).map_err(|_| unknown(id))?))
}

fn nodes(s: &str, id: &str) -> Result<Vec<usize>, CatalogError> {
    let body = s.strip_prefix("omit").ok_or_else(|| unknown(id))?;
    if body == "none" {
        return Ok(Vec::new());
    }
    body.split('_')
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(unknown(id)),
        })
        .collect()
}

/// `P.<alg>.omit<nodes>` as a parabolic.
pub fn resolve_parabolic(id: &str) -> Result<ParabolicSpec, CatalogError> {
    let parts: Vec<&str> = id.split('.').collect();
    match parts.as_slice() {
        ["P", alg, omit] => parabolic_omitting(&algebra(alg, id)?, &nodes(omit, id)?),
        _ => Err(unknown(id)),
    }
}

fn table_factor(id: &str, table: &str, rest: &[&str], enable_spin: bool) -> Result<Embedding, CatalogError> {
    let (factor, key) = rest.split_last().ok_or_else(|| unknown(id))?;
    let want_h = match *factor {
        "H" => true,
        "K" => false,
        _ => return Err(unknown(id)),
    };
    let key = format!("{table}.{}", key.join("."));
    let (h, k) = if table == "T1" {
        let inst = table1_instances(usize::MAX, MAX_ID_SIZE)
            .into_iter()
            .find(|i| i.id == key)
            .ok_or_else(|| unknown(id))?;
        inst.build()?
    } else {
        let inst = table3_instances(usize::MAX, MAX_ID_SIZE)
            .into_iter()
            .find(|i| i.id == key)
            .ok_or_else(|| unknown(id))?;
        inst.build(enable_spin)?
    };
    Ok(if want_h { h } else { k })
}

/// Builds the subgroup named by `id`.
pub fn resolve(id: &str, enable_spin: bool) -> Result<Embedding, CatalogError> {
    let id = ALIASES.iter().find(|(a, _)| *a == id).map_or(id, |(_, t)| t);
    let parts: Vec<&str> = id.split('.').collect();
    match parts.as_slice() {
        [t @ ("T1" | "T3"), rest @ ..] => table_factor(id, t, rest, enable_spin),
        ["T4", ..] => table4_instance(id).ok_or_else(|| unknown(id))?.build(enable_spin),
        ["G2", "so7"] => Ok(g2_in_so7()),
        ["SPIN7", "so8"] => Ok(spin7_in_so8()),
        ["HORO", alg, "borel"] => {
            let p = borel_parabolic(&algebra(alg, id)?)?;
            horospherical_from_parabolic(&p, &LeviPart::Full, id)
        }
        ["HORO", alg, "unipotent"] => {
            let p = borel_parabolic(&algebra(alg, id)?)?;
            horospherical_from_parabolic(&p, &LeviPart::Commutator, id)
        }
        ["HORO", alg, omit, part] => {
            let p = parabolic_omitting(&algebra(alg, id)?, &nodes(omit, id)?)?;
            let part = match *part {
                "full" => LeviPart::Full,
                "comm" => LeviPart::Commutator,
                t => LeviPart::WithTorus(vec![torus_element(p.parent(), t, id)?]),
            };
            horospherical_from_parabolic(&p, &part, id)
        }
        ["P", ..] => Ok(resolve_parabolic(id)?.as_embedding(id)),
        ["LEVI", alg, omit] => {
            let p = parabolic_omitting(&algebra(alg, id)?, &nodes(omit, id)?)?;
            Ok(p.levi().clone().with_id(id))
        }
        ["CARTAN", alg] => {
            let r = algebra(alg, id)?;
            let c = r.cartan().clone();
            let t = ReductiveType::torus(c.dim());
            Ok(Embedding::from_subspace(id, r, &c, EmbeddingMeta::reductive("T", t)))
        }
        ["TRIV", alg] => {
            let r = algebra(alg, id)?;
            Ok(Embedding::new(id, r, &[], EmbeddingMeta::reductive("{e}", ReductiveType::trivial())))
        }
        ["WHOLE", alg] => {
            let r = algebra(alg, id)?;
            let basis = r.basis().to_vec();
            let t = whole_type(&r);
            Ok(Embedding::new(id, r, &basis, EmbeddingMeta::reductive(alg.to_uppercase(), t)))
        }
        _ => Err(unknown(id)),
    }
}

fn torus_element(r: &Realization, spec: &str, id: &str) -> Result<crate::linalg::Matrix, CatalogError> {
    let body = spec.strip_prefix("torus").ok_or_else(|| unknown(id))?;
    let coeffs: Vec<i64> = body
        .split('_')
        .map(|t| match t.strip_prefix('m') {
            Some(rest) => rest.parse::<i64>().map(|v| -v),
            None => t.parse::<i64>(),
        })
        .collect::<Result<_, _>>()
        .map_err(|_| unknown(id))?;
    let basis = r.cartan().basis();
    if coeffs.len() != basis.len() {
        return Err(unknown(id));
    }
    let n = r.size();
    let mats: Vec<_> = basis.iter().map(|v| crate::lie::unflatten(n, v)).collect();
    let terms: Vec<_> = coeffs.iter().zip(&mats).map(|(&c, m)| (crate::linalg::Scalar::from_int(c), m)).collect();
    Ok(crate::linalg::Matrix::combination(&terms).expect("same size"))
}

/// The Borel parabolic: every simple root omitted.
pub fn borel_parabolic(r: &Arc<Realization>) -> Result<ParabolicSpec, CatalogError> {
    let all: Vec<usize> = (0..r.roots().rank()).collect();
    parabolic_omitting(r, &all)
}

fn whole_type(r: &Realization) -> ReductiveType {
    use crate::lie::Classical;
    let n = r.size();
    match r.family() {
        Classical::Sl => ReductiveType::sl(n),
        Classical::Gl => ReductiveType::gl(n),
        Classical::So => ReductiveType::so(n),
        Classical::Sp => ReductiveType::sp(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_kind_of_id_resolves() {
        let cases = [
            ("T1.2.n2.K", 15, 9),
            ("T1.7.H", 21, 14),
            ("T3.1.n2.H", 15, 10),
            ("T3.17.K", 21, 15),
            ("T4.Z.sl4-sp4", 15, 10),
            ("T4.Z.sl2-torus", 3, 1),
            ("HORO.sl2.borel", 3, 2),
            ("HORO.sl2.unipotent", 3, 1),
            ("HORO.so4.omit2.comm", 6, 4),
            ("HORO.so4.omit1_2.torus1_m1", 6, 3),
            ("P.so7.omit1", 21, 16),
            ("LEVI.so7.omit1", 21, 11),
            ("CARTAN.sl3", 8, 2),
            ("TRIV.sl2", 3, 0),
            ("WHOLE.sp4", 10, 10),
            ("G2.so7", 21, 14),
        ];
        for (id, parent, dim) in cases {
            let e = resolve(id, false).unwrap_or_else(|e| panic!("{id}: {e}"));
            assert_eq!(e.parent().dim(), parent, "{id}");
            assert_eq!(e.dim(), dim, "{id}");
            assert!(e.check().all_passed(), "{id}: {:?}", e.check());
        }
    }

    #[test]
    fn bad_ids_are_rejected() {
        for id in ["", "T3.99.H", "T3.1.n2", "T3.1.n2.X", "HORO.sl2.omitx.full", "P.su3.omit1", "CARTAN.sl99", "X.sl2"] {
            assert!(matches!(resolve(id, true), Err(CatalogError::UnknownId(_))), "{id}");
        }
        assert!(matches!(resolve("P.sl3.omit5", true), Err(CatalogError::IndexOutOfRange { .. })));
        assert!(matches!(resolve("T3.9.H", false), Err(CatalogError::SpinDisabled(_))));
    }
}
