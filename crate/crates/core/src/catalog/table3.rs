//! Decompositions `G = HK` into reductive subgroups, and the rows built on
//! them where both factors are spherical.

use serde::Serialize;

use super::build::*;
use super::{CatalogError, Embedding, EmbeddingMeta, TableRef};
use crate::lie::Classical;
use crate::roots::ReductiveType;

type PairBuilder = fn(usize) -> Result<(Embedding, Embedding), CatalogError>;

/// Parameter range of a row: `n` from `min` while the ambient size fits.
#[derive(Debug, Clone, Copy, Serialize)]
pub enum Params {
    Fixed,
    /// Ambient size `a * n + b`.
    Linear { min: usize, a: usize, b: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct Table3Row {
    pub number: usize,
    pub group: &'static str,
    pub h: &'static str,
    pub k: &'static str,
    pub intersection: &'static str,
    pub params: Params,
    pub family: Classical,
    /// `H` is a symmetric subgroup.
    pub h_symmetric: bool,
    /// Uses the spin image of `so(7)` in `so(8)`.
    pub spin: bool,
    #[serde(skip)]
    builder: Option<PairBuilder>,
    #[serde(skip)]
    types: fn(usize) -> (ReductiveType, ReductiveType),
    /// Simple roots omitted by the parabolic whose Levi is `K`.
    #[serde(skip)]
    levi_nodes: Option<fn(usize) -> Vec<usize>>,
}

impl Table3Row {
    pub fn has_model(&self) -> bool {
        self.builder.is_some()
    }

    pub fn size(&self, n: usize) -> usize {
        match self.params {
            Params::Fixed => n,
            Params::Linear { a, b, .. } => a * n + b,
        }
    }
}

fn rt_sl_t(n: usize) -> ReductiveType {
    ReductiveType::sl(n).times(&ReductiveType::torus(1))
}

pub fn table3_rows() -> Vec<Table3Row> {
    use Classical::{Sl, So};
    let lin = |min, a, b| Params::Linear { min, a, b };
    let row = |number,
               group,
               h,
               k,
               intersection,
               params,
               family,
               h_symmetric,
               builder: Option<PairBuilder>,
               types: fn(usize) -> (ReductiveType, ReductiveType)| Table3Row {
        number,
        group,
        h,
        k,
        intersection,
        params,
        family,
        h_symmetric,
        spin: false,
        builder,
        types,
        levi_nodes: None,
    };
    let mut rows = vec![
        row(1, "SL(2n), n>1", "Sp(2n)", "SL(2n-1)", "Sp(2n-2)", lin(2, 2, 0), Sl, true, Some(|n| {
            let h = classical_embedding(Kind::SpInSl, &[2 * n])?;
            let k = classical_embedding(Kind::SlCorner, &[2 * n - 1, 1])?;
            Ok((h, k))
        }), |n| (ReductiveType::sp(2 * n), ReductiveType::sl(2 * n - 1))),
        row(2, "SL(2n), n>1", "Sp(2n)", "S(GL(1)xGL(2n-1))", "Gm.Sp(2n-2)", lin(2, 2, 0), Sl, true, Some(|n| {
            let h = classical_embedding(Kind::SpInSl, &[2 * n])?;
            let k = levi(h.parent(), &[0], "S(GL(1)xGL(2n-1))")?;
            Ok((h, k))
        }), |n| (ReductiveType::sp(2 * n), rt_sl_t(2 * n - 1))),
        row(3, "SO(2n+2), n>2", "SO(2n+1)", "SL(n+1)", "SL(n)", lin(3, 2, 2), So, true, Some(|n| {
            let h = classical_embedding(Kind::SoInSo, &[2 * n + 1])?;
            let k = classical_embedding(Kind::SlInSoEven, &[n + 1])?;
            Ok((h, k))
        }), |n| (ReductiveType::so(2 * n + 1), ReductiveType::sl(n + 1))),
        row(4, "SO(2n+2), n>2", "SO(2n+1)", "Gm.SL(n+1)", "Gm.SL(n)", lin(3, 2, 2), So, true, Some(|n| {
            let h = classical_embedding(Kind::SoInSo, &[2 * n + 1])?;
            let k = classical_embedding(Kind::GlInSo, &[n + 1])?;
            Ok((h, k))
        }), |n| (ReductiveType::so(2 * n + 1), ReductiveType::gl(n + 1))),
        row(5, "SO(4n), n>1", "SO(4n-1)", "Sp(2n)", "Sp(2n-2)", lin(2, 4, 0), So, true, Some(|n| {
            let h = classical_embedding(Kind::SoInSo, &[4 * n - 1])?;
            let (r, sp) = sp_in_so_via_levi(n)?;
            let k = Embedding::new("", r, &sp, EmbeddingMeta::reductive("Sp(2n)", ReductiveType::sp(2 * n)));
            Ok((h, k))
        }), |n| (ReductiveType::so(4 * n - 1), ReductiveType::sp(2 * n))),
        row(6, "SO(4n), n>1", "SO(4n-1)", "Gm.Sp(2n)", "Gm.Sp(2n-2)", lin(2, 4, 0), So, true, Some(|n| {
            let h = classical_embedding(Kind::SoInSo, &[4 * n - 1])?;
            let (r, mut mats) = sp_in_so_via_levi(n)?;
            mats.push(gl_levi_image(4 * n, &crate::linalg::Matrix::identity(2 * n)));
            let t = ReductiveType::sp(2 * n).times(&ReductiveType::torus(1));
            let k = Embedding::new("", r, &mats, EmbeddingMeta::reductive("Gm.Sp(2n)", t));
            Ok((h, k))
        }), |n| (ReductiveType::so(4 * n - 1), ReductiveType::sp(2 * n).times(&ReductiveType::torus(1)))),
        row(7, "SO(4n), n>1", "SO(4n-1)", "SL(2)xSp(2n)", "SL(2)xSp(2n-2)", lin(2, 4, 0), So, true, Some(|n| {
            let h = classical_embedding(Kind::SoInSo, &[4 * n - 1])?;
            let (r, mut mats) = sp_in_so_via_levi(n)?;
            let c = centralizer_of(&r, &mats);
            mats.extend(c);
            let t = ReductiveType::sl(2).times(&ReductiveType::sp(2 * n));
            let k = Embedding::new("", r, &mats, EmbeddingMeta::reductive("SL(2)xSp(2n)", t));
            Ok((h, k))
        }), |n| (ReductiveType::so(4 * n - 1), ReductiveType::sl(2).times(&ReductiveType::sp(2 * n)))),
        row(8, "SO(16)", "SO(15)", "SO(9)", "SO(7)", Params::Fixed, So, true, None, |_| {
            (ReductiveType::so(15), ReductiveType::so(9))
        }),
        row(9, "SO(8)", "SO(7)", "SO(5)", "SL(2)", Params::Fixed, So, true, Some(|_| {
            Ok((spin7_in_so8(), orthogonal_blocks(&[3, 5], &[None, Some(So)], "SO(5)")?))
        }), |_| (ReductiveType::so(7), ReductiveType::so(5))),
        row(10, "SO(8)", "SO(7)", "Gm.SO(5)", "Gm.SL(2)", Params::Fixed, So, true, Some(|_| {
            Ok((spin7_in_so8(), orthogonal_blocks(&[2, 1, 5], &[Some(So), None, Some(So)], "Gm.SO(5)")?))
        }), |_| (ReductiveType::so(7), ReductiveType::so(5).times(&ReductiveType::torus(1)))),
        row(11, "SO(8)", "SO(7)", "SL(2)xSO(5)", "SL(2)xSL(2)", Params::Fixed, So, true, Some(|_| {
            let mut k = orthogonal_blocks(&[3, 5], &[Some(So), Some(So)], "SL(2)xSO(5)")?;
            k.meta_mut().abstract_type = ReductiveType::sl(2).times(&ReductiveType::so(5));
            Ok((spin7_in_so8(), k))
        }), |_| (ReductiveType::so(7), ReductiveType::sl(2).times(&ReductiveType::so(5)))),
        row(12, "SO(8)", "SO(7)", "SO(6)", "SL(3)", Params::Fixed, So, true, Some(|_| {
            Ok((spin7_in_so8(), orthogonal_blocks(&[2, 6], &[None, Some(So)], "SO(6)")?))
        }), |_| (ReductiveType::so(7), ReductiveType::so(6))),
        row(13, "SO(8)", "SO(7)", "Gm.SO(6)", "Gm.SL(3)", Params::Fixed, So, true, Some(|_| {
            let h = spin7_in_so8();
            let k = levi(h.parent(), &[0], "Gm.SO(6)")?;
            Ok((h, k))
        }), |_| (ReductiveType::so(7), ReductiveType::so(6).times(&ReductiveType::torus(1)))),
        row(14, "SO(8)", "SO(7)", "SO(7)", "G2", Params::Fixed, So, true, Some(|_| {
            Ok((spin7_in_so8(), classical_embedding(Kind::SoInSo, &[7])?))
        }), |_| (ReductiveType::so(7), ReductiveType::so(7))),
        row(15, "SO(7)", "G2", "SO(5)", "SL(2)", Params::Fixed, So, false, Some(|_| {
            Ok((g2_in_so7(), orthogonal_blocks(&[2, 5], &[None, Some(So)], "SO(5)")?))
        }), |_| (g2_type(), ReductiveType::so(5))),
        row(16, "SO(7)", "G2", "Gm.SO(5)", "Gm.SL(2)", Params::Fixed, So, false, Some(|_| {
            let h = g2_in_so7();
            let k = levi(h.parent(), &[0], "Gm.SO(5)")?;
            Ok((h, k))
        }), |_| (g2_type(), ReductiveType::so(5).times(&ReductiveType::torus(1)))),
        row(17, "SO(7)", "G2", "SO(6)", "SL(3)", Params::Fixed, So, false, Some(|_| {
            Ok((g2_in_so7(), classical_embedding(Kind::SoInSo, &[6])?))
        }), |_| (g2_type(), ReductiveType::so(6))),
    ];
    for r in rows.iter_mut().filter(|r| (9..=14).contains(&r.number)) {
        r.spin = true;
    }
    rows[1].levi_nodes = Some(|_| vec![0]);
    rows[3].levi_nodes = Some(|n| vec![n]);
    rows[12].levi_nodes = Some(|_| vec![0]);
    rows[15].levi_nodes = Some(|_| vec![0]);
    rows
}

fn g2_type() -> ReductiveType {
    ReductiveType::simple(crate::roots::Family::G, 2).expect("G2")
}

fn fixed_size(row: usize) -> usize {
    match row {
        8 => 16,
        9..=14 => 8,
        _ => 7,
    }
}

/// A row at a concrete parameter.
#[derive(Debug, Clone, Serialize)]
pub struct Table3Instance {
    pub id: String,
    pub row: usize,
    pub n: Option<usize>,
    pub parent: (Classical, usize),
    pub h_type: ReductiveType,
    pub k_type: ReductiveType,
    #[serde(skip)]
    spec: Table3Row,
}

/// Which factor of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Factor {
    H,
    K,
}

impl Table3Instance {
    pub fn spec(&self) -> &Table3Row {
        &self.spec
    }

    pub fn has_model(&self) -> bool {
        self.spec.has_model()
    }

    pub fn spin(&self) -> bool {
        self.spec.spin
    }

    /// Omitted simple roots of the parabolic with Levi `K`, when `K` is one.
    pub fn levi_nodes(&self) -> Option<Vec<usize>> {
        self.spec.levi_nodes.map(|f| f(self.n.unwrap_or(0)))
    }

    /// Both factors, relabelled with this instance's ids and metadata.
    pub fn build(&self, enable_spin: bool) -> Result<(Embedding, Embedding), CatalogError> {
        if self.spec.spin && !enable_spin {
            return Err(CatalogError::SpinDisabled(self.id.clone()));
        }
        self.build_as(&self.id, TableRef::new("T3", self.row))
    }

    pub(crate) fn build_as(&self, id: &str, table_ref: TableRef) -> Result<(Embedding, Embedding), CatalogError> {
        let b = self.spec.builder.ok_or_else(|| CatalogError::NotBuildable(id.to_string()))?;
        let (h, k) = b(self.n.unwrap_or(0))?;
        let hm = EmbeddingMeta {
            label: self.spec.h.to_string(),
            abstract_type: self.h_type.clone(),
            radical_dim: 0,
            is_reductive: true,
            is_levi: h.meta().is_levi,
            is_symmetric: self.spec.h_symmetric,
            table_refs: vec![table_ref.clone()],
        };
        let km = EmbeddingMeta {
            label: self.spec.k.to_string(),
            abstract_type: self.k_type.clone(),
            radical_dim: 0,
            is_reductive: true,
            is_levi: k.meta().is_levi,
            is_symmetric: false,
            table_refs: vec![table_ref],
        };
        Ok((
            h.with_id(format!("{id}.H")).with_meta(hm),
            k.with_id(format!("{id}.K")).with_meta(km),
        ))
    }
}

/// Instances with `n <= max_param` and ambient size `<= max_size`.
pub fn table3_instances(max_param: usize, max_size: usize) -> Vec<Table3Instance> {
    let mut out = Vec::new();
    for spec in table3_rows() {
        let ns: Vec<Option<usize>> = match spec.params {
            Params::Fixed => vec![None],
            Params::Linear { min, .. } => (min..=max_param.min(max_size)).map(Some).collect(),
        };
        for n in ns {
            let size = match n {
                Some(n) => spec.size(n),
                None => fixed_size(spec.number),
            };
            if size > max_size {
                continue;
            }
            let (h_type, k_type) = (spec.types)(n.unwrap_or(0));
            let id = match n {
                Some(n) => format!("T3.{}.n{n}", spec.number),
                None => format!("T3.{}", spec.number),
            };
            out.push(Table3Instance {
                id,
                row: spec.number,
                n,
                parent: (spec.family, size),
                h_type,
                k_type,
                spec: spec.clone(),
            });
        }
    }
    out
}

/// A row of the table of spherical decomposing pairs, pointing at its
/// decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub number: usize,
    pub table3_row: usize,
    pub group: &'static str,
    pub h: &'static str,
    pub k: &'static str,
    /// Only even `n` are listed.
    pub even_n: bool,
}

pub fn table1_rows() -> Vec<Table1Row> {
    let r = |number, table3_row, group, h, k, even_n| Table1Row {
        number,
        table3_row,
        group,
        h,
        k,
        even_n,
    };
    vec![
        r(1, 1, "SL(2n), n>1", "Sp(2n)", "SL(2n-1)", false),
        r(2, 2, "SL(2n), n>1", "Sp(2n)", "S(GL(1)xGL(2n-1))", false),
        r(3, 3, "SO(2n+2), n>2 and n is even", "SO(2n+1)", "SL(n+1)", true),
        r(4, 4, "SO(2n+2), n>2 and n is even", "SO(2n+1)", "Gm.SL(n+1)", true),
        r(5, 13, "SO(8)", "SO(7)", "Gm.SO(6)", false),
        r(6, 14, "SO(8)", "SO(7)+", "SO(7)-", false),
        r(7, 16, "SO(7)", "G2", "Gm.SO(5)", false),
        r(8, 17, "SO(7)", "G2", "SO(6)", false),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Instance {
    pub id: String,
    pub row: usize,
    pub n: Option<usize>,
    pub decomposition: Table3Instance,
}

impl Table1Instance {
    /// Both factors; the spin image is always available here.
    pub fn build(&self) -> Result<(Embedding, Embedding), CatalogError> {
        self.decomposition.build_as(&self.id, TableRef::new("T1", self.row))
    }
}

/// Instances of every row, respecting the even-`n` restriction.
pub fn table1_instances(max_param: usize, max_size: usize) -> Vec<Table1Instance> {
    let t3 = table3_instances(max_param, max_size);
    let mut out = Vec::new();
    for row in table1_rows() {
        for d in t3.iter().filter(|d| d.row == row.table3_row) {
            if row.even_n && d.n.is_some_and(|n| n % 2 == 1) {
                continue;
            }
            let id = match d.n {
                Some(n) => format!("T1.{}.n{n}", row.number),
                None => format!("T1.{}", row.number),
            };
            out.push(Table1Instance {
                id,
                row: row.number,
                n: d.n,
                decomposition: d.clone(),
            });
        }
    }
    out
}
