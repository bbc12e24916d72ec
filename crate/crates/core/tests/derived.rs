//! Floating-point cross-checks. Every expected number here is recomputed
//! with nalgebra from the raw matrices, independently of the exact engine.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cpairs_core::catalog::{resolve, resolve_parabolic, Embedding};
use cpairs_core::engine::{complexity_pair, diagonal_complexity, generic_sum_codim, is_horospherical, levi_side_complexity};
use cpairs_core::lie::{unflatten, Realization};
use cpairs_core::linalg::{Matrix, Subspace};
use cpairs_core::sampler::{sample_pair, SamplerConfig};

type C = Complex<f64>;
type M = DMatrix<C>;

const TOL: f64 = 1e-8;

fn to_c(m: &Matrix) -> M {
    M::from_fn(m.rows(), m.cols(), |i, j| {
        let (re, im) = m.get(i, j).to_f64_pair();
        C::new(re, im)
    })
}

fn mats(n: usize, s: &Subspace) -> Vec<M> {
    s.basis().iter().map(|v| to_c(&unflatten(n, v))).collect()
}

/// Columns are the row-major flattenings of `ms`.
fn columns(n: usize, ms: &[M]) -> M {
    M::from_fn(n * n, ms.len().max(1), |k, j| if j < ms.len() { ms[j][(k / n, k % n)] } else { C::new(0.0, 0.0) })
}

fn svd_rank(m: &M) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max).max(1.0);
    sv.iter().filter(|&&s| s > TOL * top).count()
}

fn span_dim(n: usize, ms: &[M]) -> usize {
    if ms.is_empty() {
        0
    } else {
        svd_rank(&columns(n, ms))
    }
}

/// Basis of the null space, padding with zero rows so the SVD returns all of `V`.
fn null_space(m: &M) -> Vec<nalgebra::DVector<C>> {
    let (r, c) = m.shape();
    let padded = M::from_fn(r.max(c), c, |i, j| if i < r { m[(i, j)] } else { C::new(0.0, 0.0) });
    let svd = padded.svd(false, true);
    let top = svd.singular_values.iter().cloned().fold(0.0, f64::max).max(1.0);
    let vt = svd.v_t.unwrap();
    (0..c)
        .filter(|&k| svd.singular_values[k] <= TOL * top)
        .map(|k| vt.row(k).adjoint())
        .collect()
}

fn intersect(n: usize, a: &[M], b: &[M]) -> Vec<M> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (ca, cb) = (columns(n, a), columns(n, b));
    let mut stacked = M::zeros(n * n, a.len() + b.len());
    stacked.columns_mut(0, a.len()).copy_from(&ca);
    stacked.columns_mut(a.len(), b.len()).copy_from(&(-cb));
    null_space(&stacked)
        .into_iter()
        .map(|x| {
            let v = &ca * x.rows(0, a.len());
            M::from_fn(n, n, |i, j| v[i * n + j])
        })
        .collect()
}

/// `exp(A)` for a random element `A` of the algebra, with its inverse.
fn random_element(r: &Realization, rng: &mut ChaCha8Rng) -> (M, M) {
    let n = r.size();
    let mut a = M::zeros(n, n);
    for b in r.basis() {
        a += to_c(b) * C::new(rng.random_range(-1.0..1.0), 0.0);
    }
    (a.clone().exp(), (-a).exp())
}

fn conj(g: &M, gi: &M, xs: &[M]) -> Vec<M> {
    xs.iter().map(|x| g * x * gi).collect()
}

/// `dim g - max dim(Ad(g^-1) x + y)` over random group elements.
fn oracle_codim(r: &Realization, x: &Subspace, y: &Subspace) -> usize {
    let n = r.size();
    let (xm, ym) = (mats(n, x), mats(n, y));
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let best = (0..5)
        .map(|_| {
            let (g, gi) = random_element(r, &mut rng);
            let mut all = conj(&gi, &g, &xm);
            all.extend(ym.iter().cloned());
            span_dim(n, &all)
        })
        .max()
        .unwrap();
    r.dim() - best
}

fn get(id: &str) -> Embedding {
    resolve(id, false).unwrap()
}

fn cfg() -> SamplerConfig {
    SamplerConfig::with_seed(5)
}

#[test]
fn unipotent_moves_the_cartan_line() {
    let r = get("CARTAN.sl2");
    let h = mats(2, r.sub_basis());
    let e = to_c(r.parent().nil_pos().basis().first().map(|v| unflatten(2, v)).as_ref().unwrap());
    let g = (e.clone()).exp();
    let gi = (-e).exp();
    let moved = conj(&g, &gi, &h);
    let both: Vec<M> = h.iter().chain(&moved).cloned().collect();
    assert_eq!(span_dim(2, &both), 2);
}

#[test]
fn spin_representation_has_no_fixed_vector() {
    let fixed = |e: &Embedding| {
        let ms = e.matrices();
        let n = e.parent().size();
        let mut stacked = M::zeros(n * ms.len(), n);
        for (k, m) in ms.iter().enumerate() {
            stacked.rows_mut(k * n, n).copy_from(&to_c(m));
        }
        n - svd_rank(&stacked)
    };
    let spin = resolve("SPIN7.so8", true).unwrap();
    assert_eq!(fixed(&spin), 0);
    assert_eq!(fixed(&get("T4.Z.so8-so7xso1")), 1);
}

#[test]
fn paired_samples_are_distinct() {
    let r = get("WHOLE.sl3").parent().clone();
    for seed in 0..1000 {
        let c = SamplerConfig { samples: 1, ..SamplerConfig::with_seed(seed) };
        let (a, b) = sample_pair(&r, &c, 0);
        assert_ne!(a.g, b.g, "seed {seed}");
    }
}

#[test]
fn sl2_sums_match_the_float_oracle() {
    let r = get("WHOLE.sl2").parent().clone();
    let cases = [(r.nil_pos(), r.nil_pos(), 1), (r.cartan(), r.borel(), 0)];
    for (x, y, want) in cases {
        assert_eq!(oracle_codim(&r, x, y), want);
        assert_eq!(generic_sum_codim(&r, x, y, &cfg()).unwrap().value, want);
    }
}

#[test]
fn pair_values_match_the_float_oracle() {
    for (a, b, want) in [
        ("HORO.sl2.unipotent", "HORO.sl2.unipotent", 1),
        ("T4.Z.so3-so2xso1", "HORO.so3.unipotent", 1),
        ("CARTAN.sl2", "HORO.sl2.borel", 0),
    ] {
        let (e1, e2) = (get(a), get(b));
        assert_eq!(oracle_codim(e1.parent(), e1.sub_borel(), e2.sub_borel()), want, "{a} {b}");
        assert_eq!(complexity_pair(&e1, &e2, &cfg()).unwrap().value, want, "{a} {b}");
    }
}

#[test]
fn g2_is_too_small_to_be_horospherical() {
    let g2 = get("G2.so7");
    let r = g2.parent();
    let n = r.size();
    let u = mats(n, r.nil_pos());
    let inside = intersect(n, &mats(n, g2.sub_basis()), &u);
    assert_eq!((span_dim(n, &inside), span_dim(n, &u)), (6, 9));
    assert!(!is_horospherical(&g2, &cfg()).unwrap().horospherical);
}

#[test]
fn borel_flag_times_torus_quotient_has_complexity_one() {
    let p = resolve_parabolic("P.sl2.omit1").unwrap();
    let t = get("CARTAN.sl2");
    let r = p.parent().clone();
    let n = r.size();
    let (b, pm, hm) = (mats(n, r.borel()), mats(n, p.parabolic()), mats(n, t.sub_basis()));
    let ambient = (r.dim() - pm.len()) + (r.dim() - hm.len());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let orbit = (0..5)
        .map(|_| {
            let (g1, g1i) = random_element(&r, &mut rng);
            let (g2, g2i) = random_element(&r, &mut rng);
            let stab = intersect(n, &intersect(n, &b, &conj(&g1, &g1i, &pm)), &conj(&g2, &g2i, &hm));
            b.len() - span_dim(n, &stab)
        })
        .max()
        .unwrap();
    assert_eq!(ambient - orbit, 1);
    assert_eq!(diagonal_complexity(&p, &t, &cfg()).unwrap().value, 1);
    assert_eq!(levi_side_complexity(&p, &t, &cfg()).unwrap().value, 1);
}
