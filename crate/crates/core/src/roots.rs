//! Root-system bookkeeping: dimensions, ranks and positive-root counts of
//! reductive groups given by their simple factors and central torus.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid rank {rank} for type {family:?}")]
    InvalidRank { family: Family, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn positive_roots(&self) -> usize {
        self.num_roots() / 2
    }

    pub fn dimension(&self) -> usize {
        self.rank + self.num_roots()
    }

    /// Rewrites `self` into the canonical member of its low-rank
    /// coincidence class, as a list of simple factors
    /// (`B1 = C1 -> A1`, `C2 -> B2`, `D3 -> A3`, `D2 -> A1 x A1`).
    pub fn canonical(&self) -> Vec<SimpleType> {
        let a = |r| SimpleType {
            family: Family::A,
            rank: r,
        };
        match (self.family, self.rank) {
            (Family::B, 1) | (Family::C, 1) => vec![a(1)],
            (Family::C, 2) => vec![SimpleType {
                family: Family::B,
                rank: 2,
            }],
            (Family::D, 3) => vec![a(3)],
            (Family::D, 2) => vec![a(1), a(1)],
            _ => vec![*self],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Low-rank coincidences between simple types, each listed in both
/// directions. Every identification preserves dimension and the number of
/// positive roots.
pub fn coincidences() -> Vec<(Vec<SimpleType>, Vec<SimpleType>)> {
    let s = |f, r| SimpleType::new(f, r).expect("valid coincidence entry");
    let one_way = vec![
        (vec![s(Family::A, 1)], vec![s(Family::B, 1)]),
        (vec![s(Family::A, 1)], vec![s(Family::C, 1)]),
        (vec![s(Family::B, 1)], vec![s(Family::C, 1)]),
        (vec![s(Family::B, 2)], vec![s(Family::C, 2)]),
        (vec![s(Family::A, 3)], vec![s(Family::D, 3)]),
        (vec![s(Family::D, 2)], vec![s(Family::A, 1), s(Family::A, 1)]),
    ];
    let mut all = one_way.clone();
    all.extend(one_way.into_iter().map(|(a, b)| (b, a)));
    all
}

/// A connected reductive group up to central isogeny: simple factors plus
/// the rank of the central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReductiveType {
    simple_factors: Vec<SimpleType>,
    central_torus_rank: usize,
}

impl ReductiveType {
    pub fn new(mut simple_factors: Vec<SimpleType>, central_torus_rank: usize) -> Self {
        simple_factors.sort();
        ReductiveType {
            simple_factors,
            central_torus_rank,
        }
    }

    pub fn trivial() -> Self {
        ReductiveType::new(Vec::new(), 0)
    }

    pub fn torus(rank: usize) -> Self {
        ReductiveType::new(Vec::new(), rank)
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self, RootError> {
        Ok(ReductiveType::new(vec![SimpleType::new(family, rank)?], 0))
    }

    /// `SL(n)`; `SL(1)` is trivial.
    pub fn sl(n: usize) -> Self {
        if n <= 1 {
            return ReductiveType::trivial();
        }
        ReductiveType::new(vec![SimpleType { family: Family::A, rank: n - 1 }], 0)
    }

    /// `GL(n)`.
    pub fn gl(n: usize) -> Self {
        ReductiveType::sl(n).times(&ReductiveType::torus(usize::from(n > 0)))
    }

    /// `SO(n)`; `SO(1)` is trivial and `SO(2)` a one-dimensional torus.
    pub fn so(n: usize) -> Self {
        match n {
            0 | 1 => ReductiveType::trivial(),
            2 => ReductiveType::torus(1),
            _ if n % 2 == 1 => {
                ReductiveType::new(vec![SimpleType { family: Family::B, rank: n / 2 }], 0)
            }
            _ => ReductiveType::new(vec![SimpleType { family: Family::D, rank: n / 2 }], 0),
        }
    }

    /// `Sp(2n)` from its matrix size `2n`; `Sp(0)` is trivial.
    pub fn sp(size: usize) -> Self {
        assert!(size.is_multiple_of(2), "symplectic groups have even size");
        if size == 0 {
            return ReductiveType::trivial();
        }
        ReductiveType::new(
            vec![SimpleType {
                family: Family::C,
                rank: size / 2,
            }],
            0,
        )
    }

    /// Direct product.
    pub fn times(&self, other: &ReductiveType) -> ReductiveType {
        let mut f = self.simple_factors.clone();
        f.extend(other.simple_factors.iter().copied());
        ReductiveType::new(f, self.central_torus_rank + other.central_torus_rank)
    }

    pub fn simple_factors(&self) -> &[SimpleType] {
        &self.simple_factors
    }

    pub fn central_torus_rank(&self) -> usize {
        self.central_torus_rank
    }

    pub fn dimension(&self) -> usize {
        self.simple_factors.iter().map(SimpleType::dimension).sum::<usize>()
            + self.central_torus_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_factors.iter().map(SimpleType::rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.central_torus_rank
    }

    /// Dimension of a maximal unipotent subgroup.
    pub fn unipotent_dim(&self) -> usize {
        self.simple_factors.iter().map(SimpleType::positive_roots).sum()
    }

    /// Dimension of a Borel subgroup.
    pub fn borel_dim(&self) -> usize {
        self.rank() + self.unipotent_dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.simple_factors.is_empty() && self.central_torus_rank == 0
    }

    pub fn is_simple(&self) -> bool {
        self.simple_factors.len() == 1 && self.central_torus_rank == 0
    }

    /// Normal form under the low-rank coincidences.
    pub fn canonical(&self) -> ReductiveType {
        ReductiveType::new(
            self.simple_factors.iter().flat_map(SimpleType::canonical).collect(),
            self.central_torus_rank,
        )
    }

    /// `true` when both types agree after coincidence normalization.
    pub fn isogenous(&self, other: &ReductiveType) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for ReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple_factors.iter().map(ToString::to_string).collect();
        if self.central_torus_rank > 0 {
            parts.push(format!("T{}", self.central_torus_rank));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl PartialOrd for ReductiveType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReductiveType {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.simple_factors, self.central_torus_rank)
            .cmp(&(&other.simple_factors, other.central_torus_rank))
    }
}

/// Necessary condition for `(G, G1)` to carry a complexity-one pair with
/// `G1` reductive: a maximal unipotent of `G1` has codimension one in one
/// of `G`, and the semisimple ranks differ by exactly one.
pub fn theorem_a_filter(g: &ReductiveType, g1: &ReductiveType) -> bool {
    g1.unipotent_dim() + 1 == g.unipotent_dim()
        && g.semisimple_rank() == g1.semisimple_rank() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(f: Family, r: usize) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(ReductiveType::sl(2).dimension(), 3);
        assert_eq!(ReductiveType::so(7).dimension(), 21);
        assert_eq!(ReductiveType::gl(2).dimension(), 4);
        assert_eq!(ReductiveType::sp(4).dimension(), 10);
        assert_eq!(ReductiveType::simple(Family::G, 2).unwrap().dimension(), 14);
        assert_eq!(ReductiveType::simple(Family::E, 8).unwrap().dimension(), 248);
        assert_eq!(ReductiveType::simple(Family::F, 4).unwrap().dimension(), 52);
        assert_eq!(ReductiveType::simple(Family::E, 7).unwrap().dimension(), 133);
        assert_eq!(ReductiveType::simple(Family::E, 6).unwrap().dimension(), 78);
    }

    #[test]
    fn unipotent_dims() {
        assert_eq!(ReductiveType::so(7).unipotent_dim(), 9);
        assert_eq!(ReductiveType::so(4).unipotent_dim(), 2);
        assert_eq!(ReductiveType::torus(3).unipotent_dim(), 0);
    }

    #[test]
    fn invalid_ranks() {
        assert!(SimpleType::new(Family::D, 1).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::F, 4).is_ok());
    }

    #[test]
    fn filter_examples() {
        assert!(theorem_a_filter(&ReductiveType::so(4), &ReductiveType::gl(2)));
        let g2 = ReductiveType::simple(Family::G, 2).unwrap();
        assert!(!theorem_a_filter(&ReductiveType::so(7), &g2));
        assert!(theorem_a_filter(&ReductiveType::sl(2), &ReductiveType::trivial()));
        assert!(theorem_a_filter(&ReductiveType::so(3), &ReductiveType::so(2)));
        assert!(theorem_a_filter(&ReductiveType::so(4), &ReductiveType::so(3)));
    }

    #[test]
    fn every_simple_type_has_even_root_count() {
        let mut all = Vec::new();
        for r in 1..=10 {
            all.push(st(Family::A, r));
            all.push(st(Family::B, r));
            all.push(st(Family::C, r));
            if r >= 2 {
                all.push(st(Family::D, r));
            }
        }
        all.extend([6, 7, 8].map(|r| st(Family::E, r)));
        all.push(st(Family::F, 4));
        all.push(st(Family::G, 2));
        for t in all {
            assert_eq!((t.dimension() - t.rank()) % 2, 0);
            assert_eq!(t.positive_roots(), (t.dimension() - t.rank()) / 2);
        }
    }

    #[test]
    fn coincidences_are_involutive_and_preserve_counts() {
        let table = coincidences();
        for (a, b) in &table {
            assert!(table.contains(&(b.clone(), a.clone())));
            let ra = ReductiveType::new(a.clone(), 0);
            let rb = ReductiveType::new(b.clone(), 0);
            assert_eq!(ra.dimension(), rb.dimension());
            assert_eq!(ra.unipotent_dim(), rb.unipotent_dim());
            assert_eq!(ra.semisimple_rank(), rb.semisimple_rank());
            assert!(ra.isogenous(&rb));
        }
    }

    #[test]
    fn filter_respects_coincidences() {
        let pairs = [
            (ReductiveType::so(3), ReductiveType::so(2)),
            (ReductiveType::so(4), ReductiveType::gl(2)),
            (ReductiveType::so(6), ReductiveType::gl(3)),
            (ReductiveType::sp(4), ReductiveType::sp(2)),
        ];
        for (g, h) in pairs {
            let direct = theorem_a_filter(&g, &h);
            assert_eq!(direct, theorem_a_filter(&g.canonical(), &h.canonical()));
        }
    }
}
