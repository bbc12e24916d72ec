use std::sync::Arc;

use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cpairs_core::catalog::{horospherical_from_parabolic, parabolic_omitting, resolve, resolve_parabolic, LeviPart};
use cpairs_core::claims::{run_claims, HarnessConfig, Status};
use cpairs_core::engine::{
    complexity_homspace, complexity_pair, conjugate_by, diagonal_complexity, generic_sum_codim, levi_side_complexity,
};
use cpairs_core::lie::{Classical, Realization};
use cpairs_core::linalg::{intersection_dim, rank, rank_column_order, rank_fast, sum_dim, Matrix, Scalar, Subspace};
use cpairs_core::roots::{theorem_a_filter, Family, ReductiveType, SimpleType};
use cpairs_core::sampler::{sample_element, sample_pair, SamplerConfig};

fn gaussian() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -1i64..=1, 1i64..=3).prop_map(|(a, b, d)| {
        Scalar::from_ratio(a, d) + Scalar::from_int(b) * Scalar::i()
    })
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(gaussian(), r * c).prop_map(move |v| Matrix::from_entries(r, c, v).unwrap())
    })
}

/// A matrix of controlled rank: a product of two random integer factors.
fn low_rank(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max, 0..=max).prop_flat_map(|(r, c, k)| {
        let k = k.min(r).min(c);
        (
            prop::collection::vec(-4i64..=4, r * k),
            prop::collection::vec(-4i64..=4, k * c),
        )
            .prop_map(move |(a, b)| {
                Matrix::from_fn(r, c, |i, j| Scalar::from_int((0..k).map(|t| a[i * k + t] * b[t * c + j]).sum()))
            })
    })
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=n)
        .prop_map(move |vs| Subspace::new(n, vs.into_iter().map(|v| v.into_iter().map(Scalar::from_int).collect()).collect()).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Matrix> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |p| Matrix::from_fn(n, n, |i, j| if p[i] == j { Scalar::one() } else { Scalar::zero() }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn row_and_column_pivoting_agree(m in matrix(7)) {
        prop_assert_eq!(rank(&m), rank_column_order(&m));
    }

    #[test]
    fn fast_rank_agrees_with_elimination(m in low_rank(12)) {
        let rows: Vec<&[Scalar]> = (0..m.rows()).map(|i| m.row(i)).collect();
        prop_assert_eq!(rank_fast(&rows, m.cols()).0, rank(&m));
    }

    #[test]
    fn rank_ignores_column_permutations((m, p) in (1usize..=7).prop_flat_map(|c| (low_rank(7).prop_map(move |m| {
        Matrix::from_fn(m.rows(), c, |i, j| if j < m.cols() { m.get(i, j).clone() } else { Scalar::zero() })
    }), permutation(c)))) {
        prop_assert_eq!(rank(&m.mul(&p).unwrap()), rank(&m));
    }

    #[test]
    fn grassmann_formula((a, b) in (1usize..=6).prop_flat_map(|n| (subspace(n), subspace(n)))) {
        let s = sum_dim(&a, &b).unwrap();
        let i = intersection_dim(&a, &b).unwrap();
        prop_assert_eq!(s + i, a.dim() + b.dim());
    }

    #[test]
    fn exact_rank_matches_svd_rank(m in low_rank(12)) {
        let f = DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_f64_pair().0);
        prop_assert_eq!(rank(&m), svd_rank(&f));
    }
}

fn svd_rank(m: &DMatrix<f64>) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max).max(1.0);
    sv.iter().filter(|&&s| s > 1e-8 * top).count()
}

#[test]
fn exact_and_float_rank_agree_on_seeded_matrices() {
    for seed in [1u64, 2, 3] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let (r, c) = (rng.random_range(1..=30), rng.random_range(1..=30));
            let k = rng.random_range(0..=r.min(c));
            let a: Vec<i64> = (0..r * k).map(|_| rng.random_range(-5..=5)).collect();
            let b: Vec<i64> = (0..k * c).map(|_| rng.random_range(-5..=5)).collect();
            let e = |i: usize, j: usize| (0..k).map(|t| a[i * k + t] * b[t * c + j]).sum::<i64>();
            let exact = rank(&Matrix::from_fn(r, c, |i, j| Scalar::from_int(e(i, j))));
            let float = svd_rank(&DMatrix::from_fn(r, c, |i, j| e(i, j) as f64));
            assert_eq!(exact, float, "seed {seed}, {r}x{c}, inner {k}");
        }
    }
}

fn simple_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1usize..=8).prop_map(|r| (Family::A, r)),
        (1usize..=8).prop_map(|r| (Family::B, r)),
        (1usize..=8).prop_map(|r| (Family::C, r)),
        (2usize..=8).prop_map(|r| (Family::D, r)),
        (6usize..=8).prop_map(|r| (Family::E, r)),
        Just((Family::F, 4)),
        Just((Family::G, 2)),
    ]
    .prop_map(|(f, r)| SimpleType::new(f, r).unwrap())
}

fn reductive_type() -> impl Strategy<Value = ReductiveType> {
    (prop::collection::vec(simple_type(), 0..=3), 0usize..=2).prop_map(|(s, t)| ReductiveType::new(s, t))
}

proptest! {
    #[test]
    fn unipotent_dim_is_half_the_roots(s in simple_type()) {
        prop_assert_eq!((s.dimension() - s.rank()) % 2, 0);
        let t = ReductiveType::new(vec![s], 0);
        prop_assert_eq!(t.unipotent_dim(), (s.dimension() - s.rank()) / 2);
    }

    #[test]
    fn canonical_form_preserves_counts(t in reductive_type()) {
        let c = t.canonical();
        prop_assert_eq!(c.dimension(), t.dimension());
        prop_assert_eq!(c.unipotent_dim(), t.unipotent_dim());
        prop_assert_eq!(c.canonical(), c);
    }

    #[test]
    fn filter_sees_through_coincidences(g in reductive_type(), h in reductive_type()) {
        let f = theorem_a_filter(&g, &h);
        prop_assert_eq!(f, theorem_a_filter(&g.canonical(), &h));
        prop_assert_eq!(f, theorem_a_filter(&g, &h.canonical()));
    }
}

fn realizations() -> Vec<Arc<Realization>> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(Realization::build(Classical::Sl, n).unwrap());
    }
    for n in 1..=4 {
        out.push(Realization::build(Classical::Gl, n).unwrap());
    }
    for n in 3..=8 {
        out.push(Realization::build(Classical::So, n).unwrap());
    }
    for n in [2, 4, 6, 8] {
        out.push(Realization::build(Classical::Sp, n).unwrap());
    }
    out.into_iter().map(Arc::new).collect()
}

#[test]
fn big_cell_and_cartan_bookkeeping() {
    for r in realizations() {
        assert!(r.validate().all_passed(), "{}", r.name());
        assert_eq!(intersection_dim(r.borel(), r.nil_neg()).unwrap(), 0, "{}", r.name());
        assert_eq!(sum_dim(r.borel(), r.nil_neg()).unwrap(), r.dim(), "{}", r.name());
        let t = r.abstract_type();
        assert_eq!(r.cartan().dim(), t.semisimple_rank() + t.central_torus_rank(), "{}", r.name());
    }
}

fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (0..1usize << rank).map(|m| (0..rank).filter(|i| m >> i & 1 == 1).collect()).collect()
}

#[test]
fn levis_complement_nilradicals_and_horospherical_parts_contain_u() {
    for r in realizations() {
        let rank = r.roots().rank();
        for omit in subsets(rank) {
            let p = parabolic_omitting(&r, &omit).unwrap();
            let levi = p.levi().sub_basis();
            assert_eq!(intersection_dim(levi, p.nilradical()).unwrap(), 0, "{} {omit:?}", r.name());
            assert_eq!(
                levi.sum(p.nilradical()).unwrap().dim(),
                p.parabolic().dim(),
                "{} {omit:?}",
                r.name()
            );
            assert!(p.parabolic().contains(r.borel()).unwrap());
            for part in [LeviPart::Full, LeviPart::Commutator] {
                let h = horospherical_from_parabolic(&p, &part, "h").unwrap();
                assert!(h.sub_basis().contains(r.nil_pos()).unwrap(), "{} {omit:?}", r.name());
            }
        }
    }
}

fn cfg(seed: u64, samples: usize) -> SamplerConfig {
    SamplerConfig {
        seed,
        samples,
        ..SamplerConfig::default()
    }
}

fn preserves_form(r: &Realization, g: &Matrix) -> bool {
    match r.form() {
        Some(j) => g.transpose().mul(j).unwrap().mul(g).unwrap() == *j,
        None => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn samples_are_exact_group_elements(seed in any::<u64>(), index in 0u64..1000, which in 0usize..19) {
        let rs = realizations();
        let r = &rs[which];
        let c = cfg(seed, 1);
        let id = Matrix::identity(r.size());
        let s = sample_element(r, &c, index);
        let (p, q) = sample_pair(r, &c, index);
        for s in [&s, &p, &q] {
            prop_assert_eq!(s.g.mul(&s.g_inv).unwrap(), id.clone());
            prop_assert!(preserves_form(r, &s.g));
            if r.family() != Classical::Gl {
                prop_assert!(s.g.det().unwrap().is_one());
            }
        }
        prop_assert_ne!(p.g, q.g);
    }
}

/// Pairs and single subgroups on which the engine is exercised.
const PAIRS: [(&str, &str); 8] = [
    ("CARTAN.sl2", "HORO.sl2.borel"),
    ("CARTAN.sl2", "CARTAN.sl2"),
    ("T4.Z.so4-gl2", "HORO.so4.unipotent"),
    ("T4.Z.so3-so2xso1", "HORO.so3.unipotent"),
    ("T4.Z.sl3-so3", "HORO.sl3.omit1.comm"),
    ("T4.Z.sl4-sp4", "T4.Z.sl4-sgl3xgl1"),
    ("HORO.sl3.unipotent", "CARTAN.sl3"),
    ("G2.so7", "P.so7.omit1"),
];

const SUBGROUPS: [&str; 8] = [
    "T4.Z.sl4-sp4",
    "T4.O.sp4-sp2",
    "T4.Z.so5-gl2",
    "T4.O.so5-so3",
    "CARTAN.sl3",
    "G2.so7",
    "HORO.sl3.omit2.comm",
    "T4.Z.sp4-gl2",
];

fn get(id: &str) -> cpairs_core::catalog::Embedding {
    resolve(id, false).unwrap_or_else(|e| panic!("{id}: {e}"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn pair_complexity_is_symmetric_and_conjugation_invariant(seed in any::<u64>(), index in 0u64..1 << 20) {
        for (a, b) in PAIRS {
            let (e1, e2) = (get(a), get(b));
            let c = cfg(seed, 5);
            let base = complexity_pair(&e1, &e2, &c).unwrap().value;
            prop_assert_eq!(complexity_pair(&e2, &e1, &c).unwrap().value, base, "{} {}", a, b);
            let r = e1.parent();
            let g = sample_element(r, &c, index);
            let moved = generic_sum_codim(r, e1.sub_borel(), &conjugate_by(e2.sub_borel(), &g), &c).unwrap();
            prop_assert_eq!(moved.value, base, "{} {}", a, b);
        }
    }

    #[test]
    fn values_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let base = HarnessConfig::default().sampler;
        for id in SUBGROUPS {
            let e = get(id);
            prop_assert_eq!(
                complexity_homspace(&e, &cfg(seed, 5)).unwrap().value,
                complexity_homspace(&e, &base).unwrap().value,
                "{}", id
            );
        }
    }

    #[test]
    fn shrinking_a_side_never_lowers_the_codimension(seed in any::<u64>(), drop in prop::collection::vec(any::<bool>(), 16)) {
        for (a, b) in PAIRS {
            let (e1, e2) = (get(a), get(b));
            let r = e1.parent();
            let x = e1.sub_borel();
            let kept: Vec<_> = x.basis().into_iter().zip(drop.iter().cycle()).filter(|(_, d)| !**d).map(|(v, _)| v).collect();
            let smaller = Subspace::new(x.ambient_dim(), kept).unwrap();
            let c = cfg(seed, 5);
            let big = generic_sum_codim(r, x, e2.sub_borel(), &c).unwrap().value;
            let small = generic_sum_codim(r, &smaller, e2.sub_borel(), &c).unwrap().value;
            prop_assert!(small >= big, "{} {}: {} < {}", a, b, small, big);
        }
    }
}

#[test]
fn five_samples_reach_the_generic_value() {
    for seed in [1u64, 2, 3] {
        for id in SUBGROUPS {
            let e = get(id);
            let five = complexity_homspace(&e, &cfg(seed, 5)).unwrap();
            let many = complexity_homspace(&e, &cfg(seed, 25)).unwrap();
            assert_eq!(five.value, many.value, "{id} seed {seed}");
        }
        for (a, b) in PAIRS {
            let (e1, e2) = (get(a), get(b));
            let five = complexity_pair(&e1, &e2, &cfg(seed, 5)).unwrap();
            let many = complexity_pair(&e1, &e2, &cfg(seed, 25)).unwrap();
            assert_eq!(five.value, many.value, "{a} {b} seed {seed}");
        }
    }
}

#[test]
fn diagonal_sphericality_matches_the_levi_side() {
    let cases = [
        ("sl3", vec!["CARTAN.sl3", "T4.Z.sl3-so3", "T4.Z.sl3-sgl2xgl1", "TRIV.sl3"]),
        ("sp4", vec!["T4.Z.sp4-gl2", "T4.O.sp4-sp2", "T4.Z.sp4-sp2xsp2"]),
        ("so5", vec!["T4.Z.so5-gl2", "T4.O.so5-so3", "T4.Z.so5-so4xso1"]),
    ];
    let c = cfg(4, 5);
    for (alg, hs) in cases {
        let r = get(&format!("WHOLE.{alg}")).parent().clone();
        for omit in subsets(r.roots().rank()).into_iter().filter(|s| !s.is_empty()) {
            let nodes: Vec<String> = omit.iter().map(|k| (k + 1).to_string()).collect();
            let p = resolve_parabolic(&format!("P.{alg}.omit{}", nodes.join("_"))).unwrap();
            for h in &hs {
                let h = get(h);
                let d = diagonal_complexity(&p, &h, &c).unwrap().value;
                let l = levi_side_complexity(&p, &h, &c).unwrap().value;
                assert_eq!(d == 0, l == 0, "{alg} omit {omit:?} {}: {d} vs {l}", h.id());
            }
        }
    }
}

#[test]
fn asserted_claims_hold_on_three_more_seeds() {
    let cheap: Vec<String> = ["C2", "C3", "C9", "C10", "C11", "C15"].map(String::from).to_vec();
    for seed in [1u64, 2, 3] {
        for rep in run_claims(&cheap, &HarnessConfig::with_seed(seed)).unwrap() {
            assert_eq!(rep.status, Status::Pass, "{} seed {seed}: {:?}", rep.id, rep.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn replaying_a_record_reproduces_its_numbers() {
    let cfg = HarnessConfig::with_seed(11);
    let reps = run_claims(&["C8".to_string()], &cfg).unwrap();
    for rec in &reps[0].records {
        let (a, b) = (get(&rec.ids[0]), get(&rec.ids[1]));
        let again = complexity_pair(&a, &b, &cfg.sampler).unwrap();
        assert_eq!(rec.quantities[0].result.as_ref(), Some(&again), "{}", rec.instance);
    }
}
