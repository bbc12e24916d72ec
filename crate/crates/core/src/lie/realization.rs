use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::roots::RootSystem;
use super::{bracket, is_bracket_closed, span};
use crate::linalg::{sum_dim, Echelon, Matrix, Scalar, Subspace};
use crate::roots::ReductiveType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classical {
    Sl,
    So,
    Sp,
    Gl,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid size {size} for {family:?}")]
    InvalidSize { family: Classical, size: usize },
    #[error("unknown algebra name {0:?}")]
    UnknownName(String),
}

/// A classical matrix Lie algebra `g ⊆ gl(n)` with split Cartan, triangular
/// Borel and (for `so`, `sp`) an antidiagonal invariant form.
///
/// Every subspace is stored in flattened `n^2` coordinates. Each basis
/// element carries the matrix position that identifies it: `(i, j)` with
/// `i < j` for positive root vectors, `i > j` for negative ones and `(i, i)`
/// for Cartan elements.
#[derive(Clone)]
pub struct Realization {
    name: String,
    family: Classical,
    size: usize,
    basis: Vec<Matrix>,
    positions: Vec<(usize, usize)>,
    form: Option<Matrix>,
    algebra: Subspace,
    cartan: Subspace,
    nil_pos: Subspace,
    nil_neg: Subspace,
    borel: Subspace,
    abstract_type: ReductiveType,
    coords: Vec<usize>,
    roots: RootSystem,
}

/// Sign of the antidiagonal symplectic form in row `i`.
fn sp_sign(n: usize, i: usize) -> i64 {
    if i < n / 2 {
        1
    } else {
        -1
    }
}

impl Realization {
    /// Builds `sl(n)`, `so(n)`, `sp(n)` (matrix size `n`, even) or `gl(n)`.
    pub fn build(family: Classical, n: usize) -> Result<Realization, BuildError> {
        let valid = match family {
            Classical::Sl | Classical::So => n >= 2,
            Classical::Sp => n >= 2 && n.is_multiple_of(2),
            Classical::Gl => n >= 1,
        };
        if !valid {
            return Err(BuildError::InvalidSize { family, size: n });
        }
        let (basis, positions) = match family {
            Classical::Gl => gl_basis(n),
            Classical::Sl => sl_basis(n),
            Classical::So => form_basis(n, |_, _| -1),
            Classical::Sp => form_basis(n, |i, j| -sp_sign(n, i) * sp_sign(n, j)),
        };
        let form = match family {
            Classical::So => Some(Matrix::from_fn(n, n, |i, j| {
                if i + j == n - 1 {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })),
            Classical::Sp => Some(Matrix::from_fn(n, n, |i, j| {
                if i + j == n - 1 {
                    Scalar::from_int(sp_sign(n, i))
                } else {
                    Scalar::zero()
                }
            })),
            _ => None,
        };
        let coords = match family {
            Classical::Gl => (0..n * n).collect(),
            Classical::Sl => (0..n * n - 1).collect(),
            Classical::So => (0..n * n).filter(|k| k / n + k % n < n - 1).collect(),
            Classical::Sp => (0..n * n).filter(|k| k / n + k % n < n).collect(),
        };
        let abstract_type = match family {
            Classical::Gl => ReductiveType::gl(n),
            Classical::Sl => ReductiveType::sl(n),
            Classical::So => ReductiveType::so(n),
            Classical::Sp => ReductiveType::sp(n),
        };
        let pick = |keep: &dyn Fn(usize, usize) -> bool| -> Vec<Matrix> {
            basis
                .iter()
                .zip(&positions)
                .filter(|(_, &(i, j))| keep(i, j))
                .map(|(m, _)| m.clone())
                .collect()
        };
        let cartan = span(n, &pick(&|i, j| i == j));
        let nil_pos = span(n, &pick(&|i, j| i < j));
        let nil_neg = span(n, &pick(&|i, j| i > j));
        let borel = span(n, &pick(&|i, j| i <= j));
        let algebra = span(n, &basis);
        let roots = RootSystem::new(family, n, &positions);
        Ok(Realization {
            name: format!("{}{}", family_prefix(family), n),
            family,
            size: n,
            basis,
            positions,
            form,
            algebra,
            cartan,
            nil_pos,
            nil_neg,
            borel,
            abstract_type,
            coords,
            roots,
        })
    }

    /// Parses names such as `sl3`, `so7`, `sp4`, `gl2`.
    pub fn from_name(name: &str) -> Result<Realization, BuildError> {
        let unknown = || BuildError::UnknownName(name.to_string());
        if name.len() < 3 {
            return Err(unknown());
        }
        let (prefix, digits) = name.split_at(2);
        let n: usize = digits.parse().map_err(|_| unknown())?;
        let family = match prefix {
            "sl" => Classical::Sl,
            "so" => Classical::So,
            "sp" => Classical::Sp,
            "gl" => Classical::Gl,
            _ => return Err(unknown()),
        };
        Realization::build(family, n)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Classical {
        self.family
    }

    /// Matrix size `n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }

    pub fn algebra(&self) -> &Subspace {
        &self.algebra
    }

    pub fn cartan(&self) -> &Subspace {
        &self.cartan
    }

    pub fn nil_pos(&self) -> &Subspace {
        &self.nil_pos
    }

    pub fn nil_neg(&self) -> &Subspace {
        &self.nil_neg
    }

    pub fn borel(&self) -> &Subspace {
        &self.borel
    }

    pub fn abstract_type(&self) -> &ReductiveType {
        &self.abstract_type
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// Matrix entries that determine an element of the algebra. Restricting
    /// to them is injective on `g`, so ranks of families inside `g` can be
    /// computed on these coordinates alone.
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.coords.iter().map(|&k| v[k].clone()).collect()
    }

    /// Basis elements that are positive (`i < j`) or negative root vectors,
    /// in basis order.
    pub fn root_vectors(&self, positive: bool) -> Vec<&Matrix> {
        self.basis
            .iter()
            .zip(&self.positions)
            .filter(|(_, &(i, j))| if positive { i < j } else { i > j })
            .map(|(m, _)| m)
            .collect()
    }

    /// Basis element at matrix position `(i, j)`, if any.
    pub fn element_at(&self, pos: (usize, usize)) -> Option<&Matrix> {
        self.positions
            .iter()
            .position(|&p| p == pos)
            .map(|k| &self.basis[k])
    }

    /// The antidiagonal permutation matrix; conjugation by it swaps the
    /// positive and negative nilpotent parts.
    pub fn longest_weyl_element(&self) -> Matrix {
        let n = self.size;
        Matrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Copy with basis element `k` removed (the designated subalgebras are
    /// kept as they were).
    pub fn without_basis_element(&self, k: usize) -> Realization {
        let mut r = self.clone();
        r.basis.remove(k);
        r.positions.remove(k);
        r.algebra = span(r.size, &r.basis);
        r
    }

    /// Copy carrying a different invariant form.
    pub fn with_form(&self, form: Matrix) -> Realization {
        let mut r = self.clone();
        r.form = Some(form);
        r
    }

    /// Checks every structural invariant exactly.
    pub fn validate(&self) -> ValidationReport {
        let n = self.size;
        let mut checks = Vec::new();
        let mut push = |name: &str, passed: bool, detail: String| {
            checks.push(Check {
                name: name.to_string(),
                passed,
                detail,
            })
        };

        let ech = Echelon::from_vectors(n * n, self.algebra.spanning_vectors());
        let mut closed = true;
        'outer: for (a, x) in self.basis.iter().enumerate() {
            for y in &self.basis[a + 1..] {
                let z = bracket(x, y).expect("square");
                if !ech.contains(z.entries()) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        push("bracket-closure", closed, format!("{} basis elements", self.basis.len()));

        if let Some(j) = &self.form {
            let ok = self.basis.iter().all(|x| {
                let lhs = x.transpose().mul(j).unwrap().add(&j.mul(x).unwrap()).unwrap();
                lhs.is_zero()
            });
            push("form-compatibility", ok, "x^T J + J x = 0".to_string());
        }

        let dim = ech.rank();
        let t = &self.abstract_type;
        push(
            "dimension",
            dim == t.dimension() && dim == self.basis.len(),
            format!("{} vs {}", dim, t.dimension()),
        );
        let nil = self.nil_pos.dim();
        push(
            "nil-pos-dimension",
            nil == t.unipotent_dim(),
            format!("{} vs {}", nil, t.unipotent_dim()),
        );
        let c = self.cartan.dim();
        push("cartan-rank", c == t.rank(), format!("{} vs {}", c, t.rank()));
        let b = self.borel.dim();
        let additive = b == c + nil
            && self.borel.contains(&self.cartan).unwrap_or(false)
            && self.borel.contains(&self.nil_pos).unwrap_or(false);
        push("borel-additive", additive, format!("{} = {} + {}", b, c, nil));

        let triangular = self
            .nil_pos
            .spanning_vectors()
            .iter()
            .all(|v| super::unflatten(n, v).is_strictly_upper())
            && self
                .nil_neg
                .spanning_vectors()
                .iter()
                .all(|v| super::unflatten(n, v).is_strictly_lower());
        push("nilpotent-parts-triangular", triangular, String::new());

        let inside = [&self.cartan, &self.nil_pos, &self.nil_neg]
            .iter()
            .all(|s| s.spanning_vectors().iter().all(|v| ech.contains(v)));
        push("designated-subalgebras-inside", inside, String::new());

        let sum = sum_dim(&self.borel, &self.nil_neg).unwrap_or(0);
        let big_cell = sum == dim && b + self.nil_neg.dim() == dim;
        push("big-cell", big_cell, format!("dim(b + u-) = {}", sum));

        let projected: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|m| self.project(m.entries()))
            .collect();
        let proj_rank = Echelon::from_vectors(self.coords.len(), &projected).rank();
        push(
            "projection-injective",
            proj_rank == dim,
            format!("{} coordinates", self.coords.len()),
        );

        ValidationReport { checks }
    }

    /// `true` when the subspace is a bracket-closed subspace of the algebra.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.algebra.contains(s).unwrap_or(false) && is_bracket_closed(self.size, s)
    }
}

impl fmt::Debug for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Realization({}, dim {})", self.name, self.basis.len())
    }
}

fn family_prefix(family: Classical) -> &'static str {
    match family {
        Classical::Sl => "sl",
        Classical::So => "so",
        Classical::Sp => "sp",
        Classical::Gl => "gl",
    }
}

fn gl_basis(n: usize) -> (Vec<Matrix>, Vec<(usize, usize)>) {
    let mut basis = Vec::new();
    let mut pos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(Matrix::unit(n, i, j));
            pos.push((i, j));
        }
    }
    (basis, pos)
}

fn sl_basis(n: usize) -> (Vec<Matrix>, Vec<(usize, usize)>) {
    let mut basis = Vec::new();
    let mut pos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                if i + 1 < n {
                    let h = Matrix::unit(n, i, i).sub(&Matrix::unit(n, i + 1, i + 1)).unwrap();
                    basis.push(h);
                    pos.push((i, i));
                }
            } else {
                basis.push(Matrix::unit(n, i, j));
                pos.push((i, j));
            }
        }
    }
    (basis, pos)
}

/// Basis `E_ij + c(i,j) E_{j'i'}` (with `k' = n-1-k`) for the algebra
/// preserving an antidiagonal form, one element per position with
/// `i + j <= n-1`. Antidiagonal positions are self-paired and survive only
/// when the coefficient is `+1`, which happens for `sp` but not `so`.
fn form_basis(
    n: usize,
    coeff: impl Fn(usize, usize) -> i64,
) -> (Vec<Matrix>, Vec<(usize, usize)>) {
    let mut basis = Vec::new();
    let mut pos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j > n - 1 {
                continue;
            }
            let c = coeff(i, j);
            let (pi, pj) = (n - 1 - j, n - 1 - i);
            if (pi, pj) == (i, j) {
                if c == 1 {
                    basis.push(Matrix::unit(n, i, j));
                    pos.push((i, j));
                }
                continue;
            }
            let partner = Matrix::unit(n, pi, pj).scale(&Scalar::from_int(c));
            basis.push(Matrix::unit(n, i, j).add(&partner).unwrap());
            pos.push((i, j));
        }
    }
    (basis, pos)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
