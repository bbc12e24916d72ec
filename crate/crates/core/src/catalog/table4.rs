//! Spherical and complexity-one reductive subgroups of simple groups.

use serde::Serialize;

use super::build::*;
use super::{g2_basis, spin7_basis, CatalogError, Embedding, EmbeddingMeta, Frame, TableRef};
use crate::lie::Classical;
use crate::roots::{Family, ReductiveType, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Column {
    /// Complexity zero.
    Zero,
    /// Complexity one.
    One,
}

impl Column {
    pub fn expected(self) -> u32 {
        match self {
            Column::Zero => 0,
            Column::One => 1,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Column::Zero => "Z",
            Column::One => "O",
        }
    }
}

/// One line of the table.
#[derive(Debug, Clone, Serialize)]
pub struct Table4Row {
    pub column: Column,
    /// Position within its column, from 1.
    pub number: usize,
    pub text: &'static str,
    pub symmetric: bool,
    /// Needs a spin embedding into `so(9)`, `so(10)` or `so(11)`.
    pub spin: bool,
    /// Exceptional ambient group; catalog data only.
    pub exceptional: bool,
}

type Builder = fn(&[usize]) -> Result<Embedding, CatalogError>;

/// A row at concrete parameter values.
#[derive(Debug, Clone, Serialize)]
pub struct Table4Instance {
    pub id: String,
    pub column: Column,
    pub row: usize,
    pub params: Vec<usize>,
    pub group: String,
    pub subgroup: String,
    /// Matrix algebra of the ambient group, when classical.
    pub parent: Option<(Classical, usize)>,
    pub group_type: ReductiveType,
    pub sub_type: ReductiveType,
    pub symmetric: bool,
    pub spin: bool,
    #[serde(skip)]
    builder: Option<Builder>,
}

impl Table4Instance {
    pub fn expected(&self) -> u32 {
        self.column.expected()
    }

    pub fn has_model(&self) -> bool {
        self.builder.is_some()
    }

    pub fn ambient_size(&self) -> Option<usize> {
        self.parent.map(|(_, n)| n)
    }

    pub fn build(&self, enable_spin: bool) -> Result<Embedding, CatalogError> {
        let b = self.builder.ok_or_else(|| CatalogError::NotBuildable(self.id.clone()))?;
        if self.spin && !enable_spin {
            return Err(CatalogError::SpinDisabled(self.id.clone()));
        }
        let e = b(&self.params)?;
        let is_levi = e.meta().is_levi;
        let radical_dim = e.meta().radical_dim;
        let meta = EmbeddingMeta {
            label: self.subgroup.clone(),
            abstract_type: self.sub_type.clone(),
            radical_dim,
            is_reductive: true,
            is_levi,
            is_symmetric: self.symmetric,
            table_refs: vec![TableRef::new("T4", format!("{}{}", self.column.tag(), self.row))],
        };
        Ok(e.with_id(self.id.clone()).with_meta(meta))
    }
}

pub fn table4_rows() -> Vec<Table4Row> {
    let z = |number, text, symmetric| Table4Row {
        column: Column::Zero,
        number,
        text,
        symmetric,
        spin: false,
        exceptional: false,
    };
    let o = |number, text| Table4Row {
        column: Column::One,
        number,
        text,
        symmetric: false,
        spin: false,
        exceptional: false,
    };
    let mut rows = vec![
        z(1, "(SL(n), SO(n)), n >= 2", true),
        z(2, "(SL(n+m), S(GL(m)xGL(n))), m >= n >= 1", true),
        z(3, "(SL(n+m), SL(m)xSL(n)), m > n >= 1", false),
        z(4, "(SL(2n+1), Gm.Sp(2n)), n >= 1", false),
        z(5, "(SL(2n+1), Sp(2n)), n >= 1", false),
        z(6, "(SL(2n), Sp(2n)), n >= 2", true),
        z(7, "(Sp(2n), GL(n)), n >= 1", true),
        z(8, "(Sp(2n), Gm x Sp(2n-2)), n >= 2", false),
        z(9, "(Sp(n+m), Sp(n)xSp(m)), n, m >= 2 even", true),
        z(10, "(SO(2n), SL(n)), n >= 3 odd", false),
        z(11, "(SO(2n), GL(n)), n >= 2", true),
        z(12, "(SO(2n+1), GL(n)), n >= 2", false),
        z(13, "(SO(n+m), SO(m)xSO(n)), m >= n >= 1", true),
        z(14, "(SO(7), G2)", false),
        z(15, "(SO(8), G2)", false),
        z(16, "(SO(9), Spin(7))", false),
        z(17, "(SO(10), SO(2)xSpin(7))", false),
    ];
    rows[15].spin = true;
    rows[16].spin = true;
    let exceptional_zero = [
        ("(G2, A2)", true),
        ("(G2, A1xA1~)", true),
        ("(F4, B4)", true),
        ("(F4, C3xA1)", true),
        ("(E6, C4)", true),
        ("(E6, F4)", true),
        ("(E6, D5)", false),
        ("(E6, Gm.D5)", true),
        ("(E6, A5xA1)", true),
        ("(E7, Gm.E6)", true),
        ("(E7, A7)", true),
        ("(E7, D6xA1)", true),
        ("(E8, D8)", true),
        ("(E8, E7xA1)", true),
    ];
    for (k, (text, sym)) in exceptional_zero.into_iter().enumerate() {
        rows.push(Table4Row {
            exceptional: true,
            ..z(18 + k, text, sym)
        });
    }
    let mut one = vec![
        o(1, "(SL(2n), SL(n)xSL(n))"),
        o(2, "(SL(n), Gm x SL(n-2)), n >= 5"),
        o(3, "(SL(n), Gm^2 x SL(n-2)), n >= 3"),
        o(4, "(SL(6), Gm x SL(2) x Sp(4))"),
        o(5, "(Sp(2n), Sp(2n-2))"),
        o(6, "(Sp(2n), Sp(2n-4) x SL(2) x SL(2)), n >= 3"),
        o(7, "(Sp(2n), SL(n)), n >= 2"),
        o(8, "(SO(n), SO(n-2)), n >= 4"),
        o(9, "(SO(2n+1), SL(n))"),
        o(10, "(SO(4n), SL(2n)), n >= 2"),
        o(11, "(SO(11), SO(3)xSpin(7))"),
        o(12, "(SO(10), Spin(7))"),
        o(13, "(SO(9), G2xSO(2))"),
    ];
    one[10].spin = true;
    one[11].spin = true;
    for (k, text) in ["(F4, D4)", "(E6, Gm x B4)", "(E7, E6)"].into_iter().enumerate() {
        one.push(Table4Row {
            exceptional: true,
            ..o(14 + k, text)
        });
    }
    rows.extend(one);
    rows
}

fn st(f: Family, r: usize) -> SimpleType {
    SimpleType::new(f, r).expect("valid simple type")
}

fn rt(factors: &[(Family, usize)], torus: usize) -> ReductiveType {
    ReductiveType::new(factors.iter().map(|&(f, r)| st(f, r)).collect(), torus)
}

fn group_type(f: Classical, n: usize) -> ReductiveType {
    match f {
        Classical::Sl => ReductiveType::sl(n),
        Classical::So => ReductiveType::so(n),
        Classical::Sp => ReductiveType::sp(n),
        Classical::Gl => ReductiveType::gl(n),
    }
}

fn group_label(f: Classical, n: usize) -> String {
    match f {
        Classical::Sl => format!("SL({n})"),
        Classical::So => format!("SO({n})"),
        Classical::Sp => format!("Sp({n})"),
        Classical::Gl => format!("GL({n})"),
    }
}

fn prefix(f: Classical) -> &'static str {
    match f {
        Classical::Sl => "sl",
        Classical::So => "so",
        Classical::Sp => "sp",
        Classical::Gl => "gl",
    }
}

struct Acc {
    max_size: usize,
    out: Vec<Table4Instance>,
    rows: Vec<Table4Row>,
}

impl Acc {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        column: Column,
        row: usize,
        params: Vec<usize>,
        parent: (Classical, usize),
        slug: String,
        subgroup: String,
        sub_type: ReductiveType,
        builder: Builder,
    ) {
        if parent.1 > self.max_size {
            return;
        }
        let meta = self
            .rows
            .iter()
            .find(|r| r.column == column && r.number == row)
            .expect("row exists");
        self.out.push(Table4Instance {
            id: format!("T4.{}.{}{}-{}", column.tag(), prefix(parent.0), parent.1, slug),
            column,
            row,
            params,
            group: group_label(parent.0, parent.1),
            subgroup,
            parent: Some(parent),
            group_type: group_type(parent.0, parent.1),
            sub_type,
            symmetric: meta.symmetric,
            spin: meta.spin,
            builder: Some(builder),
        });
    }
}

/// Every classical instance with ambient matrix size at most `max_size`,
/// followed by the exceptional rows (no parameters, no matrix model).
pub fn table4_instances(max_size: usize) -> Vec<Table4Instance> {
    use Classical::{Sl, So, Sp};
    use Column::{One, Zero};
    let mut acc = Acc {
        max_size,
        out: Vec::new(),
        rows: table4_rows(),
    };
    let big = max_size + 1;

    // Zero column.
    for n in 2..big {
        acc.push(Zero, 1, vec![n], (Sl, n), format!("so{n}"), format!("SO({n})"), ReductiveType::so(n), |p| {
            let r = realization(Sl, p[0])?;
            Ok(Embedding::new("", r, &piece(So, p[0]), EmbeddingMeta::reductive("", ReductiveType::so(p[0]))))
        });
    }
    for total in 2..big {
        for n in 1..=total / 2 {
            let m = total - n;
            acc.push(
                Zero,
                2,
                vec![m, n],
                (Sl, total),
                format!("sgl{m}xgl{n}"),
                format!("S(GL({m})xGL({n}))"),
                ReductiveType::sl(m).times(&ReductiveType::sl(n)).times(&ReductiveType::torus(1)),
                |p| levi(&realization(Sl, p[0] + p[1])?, &[p[0] - 1], ""),
            );
        }
    }
    for total in 2..big {
        for n in 1..=total / 2 {
            let m = total - n;
            if m == n {
                continue;
            }
            acc.push(
                Zero,
                3,
                vec![m, n],
                (Sl, total),
                format!("sl{m}xsl{n}"),
                format!("SL({m})xSL({n})"),
                ReductiveType::sl(m).times(&ReductiveType::sl(n)),
                |p| levi_commutator(&realization(Sl, p[0] + p[1])?, &[p[0] - 1], ""),
            );
        }
    }
    for n in 1..big {
        let s = 2 * n;
        acc.push(
            Zero,
            4,
            vec![n],
            (Sl, s + 1),
            format!("gmxsp{s}"),
            format!("Gm.Sp({s})"),
            ReductiveType::sp(s).times(&ReductiveType::torus(1)),
            |p| {
                let s = 2 * p[0];
                let e = linear_blocks(&[s, 1], &[Some(Sp), None], "")?;
                let mut t = vec![1; s];
                t.push(-(s as i64));
                Ok(extend(e, &[diag(&t)], ReductiveType::sp(s).times(&ReductiveType::torus(1)), ""))
            },
        );
        acc.push(Zero, 5, vec![n], (Sl, s + 1), format!("sp{s}"), format!("Sp({s})"), ReductiveType::sp(s), |p| {
            linear_blocks(&[2 * p[0], 1], &[Some(Sp), None], "")
        });
    }
    for n in 2..big {
        let s = 2 * n;
        acc.push(Zero, 6, vec![n], (Sl, s), format!("sp{s}"), format!("Sp({s})"), ReductiveType::sp(s), |p| {
            classical_embedding(Kind::SpInSl, &[2 * p[0]])
        });
    }
    for n in 1..big {
        acc.push(Zero, 7, vec![n], (Sp, 2 * n), format!("gl{n}"), format!("GL({n})"), ReductiveType::gl(n), |p| {
            levi(&realization(Sp, 2 * p[0])?, &[p[0] - 1], "")
        });
    }
    for n in 2..big {
        let s = 2 * n - 2;
        acc.push(
            Zero,
            8,
            vec![n],
            (Sp, 2 * n),
            format!("gmxsp{s}"),
            format!("Gm x Sp({s})"),
            ReductiveType::sp(s).times(&ReductiveType::torus(1)),
            |p| levi(&realization(Sp, 2 * p[0])?, &[0], ""),
        );
    }
    for total in (4..big).step_by(2) {
        for n in (2..=total / 2).step_by(2) {
            let m = total - n;
            acc.push(
                Zero,
                9,
                vec![n, m],
                (Sp, total),
                format!("sp{n}xsp{m}"),
                format!("Sp({n})xSp({m})"),
                ReductiveType::sp(n).times(&ReductiveType::sp(m)),
                |p| symplectic_blocks(&[p[0], p[1]], &[Some(Sp), Some(Sp)], ""),
            );
        }
    }
    for n in (3..big).step_by(2) {
        acc.push(Zero, 10, vec![n], (So, 2 * n), format!("sl{n}"), format!("SL({n})"), ReductiveType::sl(n), |p| {
            classical_embedding(Kind::SlInSoEven, &[p[0]])
        });
    }
    for n in 2..big {
        acc.push(Zero, 11, vec![n], (So, 2 * n), format!("gl{n}"), format!("GL({n})"), ReductiveType::gl(n), |p| {
            classical_embedding(Kind::GlInSo, &[p[0]])
        });
    }
    for n in 2..big {
        acc.push(Zero, 12, vec![n], (So, 2 * n + 1), format!("gl{n}"), format!("GL({n})"), ReductiveType::gl(n), |p| {
            levi(&realization(So, 2 * p[0] + 1)?, &[p[0] - 1], "")
        });
    }
    for total in 3..big {
        for n in 1..=total / 2 {
            let m = total - n;
            acc.push(
                Zero,
                13,
                vec![m, n],
                (So, total),
                format!("so{m}xso{n}"),
                format!("SO({m})xSO({n})"),
                ReductiveType::so(m).times(&ReductiveType::so(n)),
                |p| orthogonal_blocks(&[p[1], p[0]], &[Some(So), Some(So)], ""),
            );
        }
    }
    let g2 = rt(&[(Family::G, 2)], 0);
    let b3 = ReductiveType::so(7);
    acc.push(Zero, 14, vec![], (So, 7), "g2".into(), "G2".into(), g2.clone(), |_| Ok(g2_in_so7()));
    acc.push(Zero, 15, vec![], (So, 8), "g2".into(), "G2".into(), g2.clone(), |_| {
        special_blocks(&[1, 7], &[Piece::Zero, Piece::G2])
    });
    acc.push(Zero, 16, vec![], (So, 9), "spin7".into(), "Spin(7)".into(), b3.clone(), |_| {
        special_blocks(&[1, 8], &[Piece::Zero, Piece::Spin7])
    });
    acc.push(
        Zero,
        17,
        vec![],
        (So, 10),
        "so2xspin7".into(),
        "SO(2)xSpin(7)".into(),
        b3.times(&ReductiveType::torus(1)),
        |_| special_blocks(&[2, 8], &[Piece::Full, Piece::Spin7]),
    );

    // One column.
    for n in 1..big {
        acc.push(
            One,
            1,
            vec![n],
            (Sl, 2 * n),
            format!("sl{n}xsl{n}"),
            format!("SL({n})xSL({n})"),
            ReductiveType::sl(n).times(&ReductiveType::sl(n)),
            |p| levi_commutator(&realization(Sl, 2 * p[0])?, &[p[0] - 1], ""),
        );
    }
    for n in 5..big {
        let k = n - 2;
        acc.push(
            One,
            2,
            vec![n],
            (Sl, n),
            format!("gmxsl{k}"),
            format!("Gm x SL({k})"),
            ReductiveType::sl(k).times(&ReductiveType::torus(1)),
            |p| {
                let k = p[0] - 2;
                // The torus of the SL(2) block; a torus central in
                // S(GL(2)xGL(n-2)) would give complexity 2.
                let e = linear_blocks(&[2, k], &[None, Some(Sl)], "")?;
                let mut t = vec![1, -1];
                t.extend(std::iter::repeat_n(0, k));
                Ok(extend(e, &[diag(&t)], ReductiveType::sl(k).times(&ReductiveType::torus(1)), ""))
            },
        );
    }
    for n in 3..big {
        let k = n - 2;
        acc.push(
            One,
            3,
            vec![n],
            (Sl, n),
            format!("gm2xsl{k}"),
            format!("Gm^2 x SL({k})"),
            ReductiveType::sl(k).times(&ReductiveType::torus(2)),
            |p| levi(&realization(Sl, p[0])?, &[0, 1], ""),
        );
    }
    acc.push(
        One,
        4,
        vec![],
        (Sl, 6),
        "gmxsl2xsp4".into(),
        "Gm x SL(2) x Sp(4)".into(),
        ReductiveType::sl(2).times(&ReductiveType::sp(4)).times(&ReductiveType::torus(1)),
        |_| {
            let e = linear_blocks(&[2, 4], &[Some(Sl), Some(Sp)], "")?;
            let t = ReductiveType::sl(2).times(&ReductiveType::sp(4)).times(&ReductiveType::torus(1));
            Ok(extend(e, &[diag(&[2, 2, -1, -1, -1, -1])], t, ""))
        },
    );
    for n in 1..big {
        let s = 2 * n - 2;
        acc.push(One, 5, vec![n], (Sp, 2 * n), format!("sp{s}"), format!("Sp({s})"), ReductiveType::sp(s), |p| {
            symplectic_blocks(&[2, 2 * p[0] - 2], &[None, Some(Sp)], "")
        });
    }
    for n in 3..big {
        let s = 2 * n - 4;
        acc.push(
            One,
            6,
            vec![n],
            (Sp, 2 * n),
            format!("sp{s}xsl2xsl2"),
            format!("Sp({s}) x SL(2) x SL(2)"),
            ReductiveType::sp(s).times(&ReductiveType::sl(2)).times(&ReductiveType::sl(2)),
            |p| symplectic_blocks(&[2, 2, 2 * p[0] - 4], &[Some(Sp), Some(Sp), Some(Sp)], ""),
        );
    }
    for n in 2..big {
        acc.push(One, 7, vec![n], (Sp, 2 * n), format!("sl{n}"), format!("SL({n})"), ReductiveType::sl(n), |p| {
            levi_commutator(&realization(Sp, 2 * p[0])?, &[p[0] - 1], "")
        });
    }
    for n in 4..big {
        let k = n - 2;
        acc.push(One, 8, vec![n], (So, n), format!("so{k}"), format!("SO({k})"), ReductiveType::so(k), |p| {
            classical_embedding(Kind::SoCorner, &[p[0]])
        });
    }
    for n in 1..big {
        acc.push(One, 9, vec![n], (So, 2 * n + 1), format!("sl{n}"), format!("SL({n})"), ReductiveType::sl(n), |p| {
            classical_embedding(Kind::SlInSoOdd, &[p[0]])
        });
    }
    for n in 2..big {
        let k = 2 * n;
        acc.push(One, 10, vec![n], (So, 4 * n), format!("sl{k}"), format!("SL({k})"), ReductiveType::sl(k), |p| {
            classical_embedding(Kind::SlInSoEven, &[2 * p[0]])
        });
    }
    acc.push(
        One,
        11,
        vec![],
        (So, 11),
        "so3xspin7".into(),
        "SO(3)xSpin(7)".into(),
        ReductiveType::so(3).times(&b3),
        |_| special_blocks(&[3, 8], &[Piece::Full, Piece::Spin7]),
    );
    acc.push(One, 12, vec![], (So, 10), "spin7".into(), "Spin(7)".into(), b3.clone(), |_| {
        special_blocks(&[2, 8], &[Piece::Zero, Piece::Spin7])
    });
    acc.push(
        One,
        13,
        vec![],
        (So, 9),
        "g2xso2".into(),
        "G2xSO(2)".into(),
        g2.times(&ReductiveType::torus(1)),
        |_| special_blocks(&[2, 7], &[Piece::Full, Piece::G2]),
    );

    let mut out = acc.out;
    out.sort_by(|a, b| (a.column, a.row, a.parent.map(|p| p.1), &a.params).cmp(&(b.column, b.row, b.parent.map(|p| p.1), &b.params)));
    out.extend(exceptional_instances());
    out
}

fn exceptional_instances() -> Vec<Table4Instance> {
    use Family::{A, B, C, D, E, F, G};
    let rows = table4_rows();
    let data: [(Column, usize, &str, (Family, usize), &[(Family, usize)], usize); 17] = [
        (Column::Zero, 18, "a2", (G, 2), &[(A, 2)], 0),
        (Column::Zero, 19, "a1xa1", (G, 2), &[(A, 1), (A, 1)], 0),
        (Column::Zero, 20, "b4", (F, 4), &[(B, 4)], 0),
        (Column::Zero, 21, "c3xa1", (F, 4), &[(C, 3), (A, 1)], 0),
        (Column::Zero, 22, "c4", (E, 6), &[(C, 4)], 0),
        (Column::Zero, 23, "f4", (E, 6), &[(F, 4)], 0),
        (Column::Zero, 24, "d5", (E, 6), &[(D, 5)], 0),
        (Column::Zero, 25, "gmxd5", (E, 6), &[(D, 5)], 1),
        (Column::Zero, 26, "a5xa1", (E, 6), &[(A, 5), (A, 1)], 0),
        (Column::Zero, 27, "gmxe6", (E, 7), &[(E, 6)], 1),
        (Column::Zero, 28, "a7", (E, 7), &[(A, 7)], 0),
        (Column::Zero, 29, "d6xa1", (E, 7), &[(D, 6), (A, 1)], 0),
        (Column::Zero, 30, "d8", (E, 8), &[(D, 8)], 0),
        (Column::Zero, 31, "e7xa1", (E, 8), &[(E, 7), (A, 1)], 0),
        (Column::One, 14, "d4", (F, 4), &[(D, 4)], 0),
        (Column::One, 15, "gmxb4", (E, 6), &[(B, 4)], 1),
        (Column::One, 16, "e6", (E, 7), &[(E, 6)], 0),
    ];
    data.iter()
        .map(|&(column, row, slug, (gf, gr), sub, torus)| {
            let meta = rows.iter().find(|r| r.column == column && r.number == row).expect("row");
            let g = rt(&[(gf, gr)], 0);
            let h = rt(sub, torus);
            Table4Instance {
                id: format!("T4.{}.{}-{}", column.tag(), g.to_string().to_lowercase(), slug),
                column,
                row,
                params: Vec::new(),
                group: g.to_string(),
                subgroup: h.to_string(),
                parent: None,
                group_type: g,
                sub_type: h,
                symmetric: meta.symmetric,
                spin: false,
                builder: None,
            }
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Piece {
    Zero,
    Full,
    G2,
    Spin7,
}

/// Nested orthogonal blocks carrying `g2`, `spin(7)` or a full `so`.
fn special_blocks(sizes: &[usize], pieces: &[Piece]) -> Result<Embedding, CatalogError> {
    let frame = Frame::orthogonal(sizes).ok_or_else(|| CatalogError::InvalidParams("odd blocks".into()))?;
    let r = realization(Classical::So, frame.size())?;
    let mats: Vec<_> = sizes
        .iter()
        .zip(pieces)
        .map(|(&s, p)| match p {
            Piece::Zero => Vec::new(),
            Piece::Full => piece(Classical::So, s),
            Piece::G2 => g2_basis(),
            Piece::Spin7 => spin7_basis(),
        })
        .collect();
    let mats = in_blocks(&frame, &mats);
    Ok(Embedding::new("", r, &mats, EmbeddingMeta::reductive("", ReductiveType::trivial())))
}

/// Looks up an instance by id among those with ambient size at most 16.
pub fn table4_instance(id: &str) -> Option<Table4Instance> {
    table4_instances(16).into_iter().find(|i| i.id == id)
}
