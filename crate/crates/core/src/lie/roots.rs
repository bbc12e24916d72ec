use std::collections::HashMap;

use serde::Serialize;

use super::Classical;
use crate::roots::{Family, ReductiveType, SimpleType};

/// A positive root, identified by the matrix position of its root vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveRoot {
    pub position: (usize, usize),
    /// Weight on the diagonal Cartan, in the coordinates `t_1, ..., t_m`.
    pub weight: Vec<i64>,
    /// Expansion in simple roots.
    pub coeffs: Vec<u32>,
}

/// Positive and simple roots read off a realization's root vectors.
/// Simple roots are ordered by matrix position, which gives the usual
/// Dynkin numbering (short or forked end last).
#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    family: Classical,
    positive: Vec<PositiveRoot>,
    simple: Vec<usize>,
}

fn weight_of(family: Classical, n: usize, (i, j): (usize, usize)) -> Vec<i64> {
    match family {
        Classical::Sl | Classical::Gl => {
            let mut w = vec![0; n];
            w[i] += 1;
            w[j] -= 1;
            w
        }
        Classical::So | Classical::Sp => {
            let m = n / 2;
            let mut w = vec![0; m];
            let mut add = |k: usize, s: i64| {
                if k < m {
                    w[k] += s;
                } else if !(n % 2 == 1 && k == m) {
                    w[n - 1 - k] -= s;
                }
            };
            add(i, 1);
            add(j, -1);
            w
        }
    }
}

impl RootSystem {
    pub fn new(family: Classical, n: usize, positions: &[(usize, usize)]) -> RootSystem {
        let mut pos: Vec<(usize, usize)> = positions.iter().copied().filter(|(i, j)| i < j).collect();
        pos.sort();
        let weights: Vec<Vec<i64>> = pos.iter().map(|&p| weight_of(family, n, p)).collect();
        let mut decomposable = vec![false; weights.len()];
        let index: HashMap<&Vec<i64>, usize> = weights.iter().enumerate().map(|(k, w)| (w, k)).collect();
        for a in 0..weights.len() {
            for b in a..weights.len() {
                let s: Vec<i64> = weights[a].iter().zip(&weights[b]).map(|(x, y)| x + y).collect();
                if let Some(&k) = index.get(&s) {
                    decomposable[k] = true;
                }
            }
        }
        let simple: Vec<usize> = (0..weights.len()).filter(|&k| !decomposable[k]).collect();
        let rank = simple.len();

        // Peel simple roots off until every root is expressed.
        let mut coeffs: Vec<Option<Vec<u32>>> = vec![None; weights.len()];
        for (s, &k) in simple.iter().enumerate() {
            let mut c = vec![0; rank];
            c[s] = 1;
            coeffs[k] = Some(c);
        }
        let mut changed = true;
        while changed {
            changed = false;
            for k in 0..weights.len() {
                if coeffs[k].is_some() {
                    continue;
                }
                for (s, &sk) in simple.iter().enumerate() {
                    let diff: Vec<i64> = weights[k].iter().zip(&weights[sk]).map(|(x, y)| x - y).collect();
                    if let Some(&d) = index.get(&diff) {
                        if let Some(cd) = &coeffs[d] {
                            let mut c = cd.clone();
                            c[s] += 1;
                            coeffs[k] = Some(c);
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
        let positive = pos
            .into_iter()
            .zip(weights)
            .zip(coeffs)
            .map(|((position, weight), c)| PositiveRoot {
                position,
                weight,
                coeffs: c.expect("every positive root is a sum of simple roots"),
            })
            .collect();
        RootSystem {
            family,
            positive,
            simple,
        }
    }

    pub fn positive(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_roots(&self) -> Vec<&PositiveRoot> {
        self.simple.iter().map(|&k| &self.positive[k]).collect()
    }

    /// `true` when the root's support lies inside `subset` (simple-root
    /// indices).
    pub fn in_span(&self, root: &PositiveRoot, subset: &[usize]) -> bool {
        root.coeffs
            .iter()
            .enumerate()
            .all(|(s, &c)| c == 0 || subset.contains(&s))
    }

    /// Simple roots `a` and `b` are joined in the Dynkin diagram.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b
            && self.positive.iter().any(|r| {
                r.coeffs.iter().enumerate().all(|(s, &c)| {
                    if s == a || s == b {
                        c == 1
                    } else {
                        c == 0
                    }
                })
            })
    }

    /// Connected components of the Dynkin subdiagram on `subset`.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut seen = vec![false; sorted.len()];
        let mut out = Vec::new();
        for start in 0..sorted.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![sorted[start]];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let cur = comp[k];
                for (t, &other) in sorted.iter().enumerate() {
                    if !seen[t] && self.adjacent(cur, other) {
                        seen[t] = true;
                        comp.push(other);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Semisimple type of the Levi subalgebra spanned by the roots supported
    /// on `subset`, read off root counts per component.
    pub fn levi_semisimple_type(&self, subset: &[usize]) -> Vec<SimpleType> {
        let rank = self.rank();
        let mut out = Vec::new();
        for comp in self.components(subset) {
            let m = comp.len();
            let count = self.positive.iter().filter(|r| self.in_span(r, &comp)).count();
            let family = if m == 1 {
                Family::A
            } else if count == m * (m + 1) / 2 {
                let forked = self.family == Classical::So
                    && rank >= 3
                    && self.is_d_type()
                    && comp.contains(&(rank - 1))
                    && comp.contains(&(rank - 2));
                if forked && m >= 3 {
                    Family::D
                } else {
                    Family::A
                }
            } else if count == m * m {
                if self.family == Classical::Sp {
                    Family::C
                } else {
                    Family::B
                }
            } else {
                debug_assert_eq!(count, m * (m - 1));
                Family::D
            };
            out.push(SimpleType::new(family, m).expect("component rank is valid"));
        }
        // The two fork nodes of a D diagram with their neighbour removed are
        // a D2; keep that name so orthogonal Levis read as SO(4).
        if self.is_d_type() && rank >= 3 {
            let fork = [rank - 2, rank - 1];
            let has_both = fork.iter().all(|f| subset.contains(f));
            if has_both && !subset.contains(&(rank - 3)) {
                let a1 = SimpleType::new(Family::A, 1).expect("valid");
                for _ in 0..2 {
                    let k = out.iter().position(|t| *t == a1).expect("two A1 fork nodes");
                    out.remove(k);
                }
                out.push(SimpleType::new(Family::D, 2).expect("valid"));
            }
        }
        out
    }

    fn is_d_type(&self) -> bool {
        self.family == Classical::So
            && self.rank() >= 2
            && self.positive.len() == self.rank() * (self.rank() - 1)
    }

    /// Full reductive type of the standard Levi for `subset`, given the
    /// rank of the ambient Cartan.
    pub fn levi_type(&self, subset: &[usize], cartan_rank: usize) -> ReductiveType {
        let ss = self.levi_semisimple_type(subset);
        let ss_rank: usize = ss.iter().map(SimpleType::rank).sum();
        ReductiveType::new(ss, cartan_rank - ss_rank)
    }
}

#[cfg(test)]
mod tests {
    use super::super::Realization;
    use super::*;

    fn r(f: Classical, n: usize) -> Realization {
        Realization::build(f, n).unwrap()
    }

    #[test]
    fn ranks_and_counts() {
        for (f, n, rank, pos) in [
            (Classical::Sl, 4, 3, 6),
            (Classical::So, 7, 3, 9),
            (Classical::So, 8, 4, 12),
            (Classical::Sp, 6, 3, 9),
            (Classical::So, 4, 2, 2),
        ] {
            let rs = r(f, n);
            assert_eq!(rs.roots().rank(), rank, "{f:?}{n}");
            assert_eq!(rs.roots().positive().len(), pos, "{f:?}{n}");
        }
    }

    #[test]
    fn dynkin_shapes() {
        let so8 = r(Classical::So, 8);
        let rs = so8.roots();
        assert!(rs.adjacent(0, 1));
        assert!(rs.adjacent(1, 2) && rs.adjacent(1, 3));
        assert!(!rs.adjacent(2, 3));
        let so7 = r(Classical::So, 7);
        // short simple root last
        assert_eq!(so7.roots().simple_roots()[2].weight, vec![0, 0, 1]);
        let sp6 = r(Classical::Sp, 6);
        assert_eq!(sp6.roots().simple_roots()[2].weight, vec![0, 0, 2]);
    }

    #[test]
    fn levi_types() {
        let so7 = r(Classical::So, 7);
        assert_eq!(so7.roots().levi_type(&[1, 2], 3).to_string(), "B2+T1");
        let so8 = r(Classical::So, 8);
        assert_eq!(so8.roots().levi_type(&[1, 2, 3], 4).to_string(), "D3+T1");
        assert_eq!(so8.roots().levi_type(&[0, 1, 2], 4).to_string(), "A3+T1");
        let so6 = r(Classical::So, 6);
        assert_eq!(so6.roots().levi_type(&[1, 2], 3).to_string(), "D2+T1");
        let sl4 = r(Classical::Sl, 4);
        assert_eq!(sl4.roots().levi_type(&[1, 2], 3).to_string(), "A2+T1");
        let sp4 = r(Classical::Sp, 4);
        assert_eq!(sp4.roots().levi_type(&[1], 2).to_string(), "A1+T1");
        assert_eq!(sp4.roots().levi_type(&[0], 2).to_string(), "A1+T1");
    }
}
