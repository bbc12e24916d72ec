//! Seeded exact sampling of generic group elements.
//!
//! An element is a big-cell product `∏ exp(s_i f_i) · t · ∏ exp(r_i e_i)`
//! over the negative and positive root vectors of a realization, with
//! rational parameters `p/q`, `p, q ∈ [-N, N] \ {0}`. The exponentials are
//! finite sums since root vectors are nilpotent, so every sample is exact
//! and comes with its exact inverse.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::lie::{Classical, Realization};
use crate::linalg::{Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub coefficient_bound: u32,
    pub samples: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            coefficient_bound: 1000,
            samples: 5,
        }
    }
}

impl SamplerConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplerConfig {
            seed,
            ..SamplerConfig::default()
        }
    }
}

/// A sampled group element with its inverse.
#[derive(Debug, Clone)]
pub struct Sample {
    pub g: Matrix,
    pub g_inv: Matrix,
}

fn rng_for(cfg: &SamplerConfig, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    rng
}

fn draw(rng: &mut ChaCha20Rng, bound: u32) -> Scalar {
    let b = i64::from(bound.max(1));
    let mut nonzero = || {
        let v = rng.random_range(1..=2 * b);
        if v <= b {
            v - b - 1
        } else {
            v - b
        }
    };
    let p = nonzero();
    let q = nonzero();
    Scalar::from_ratio(p, q)
}

/// `exp(s x)` for nilpotent `x`.
pub fn exp_nilpotent(x: &Matrix, s: &Scalar) -> Matrix {
    let n = x.rows();
    let sx = x.scale(s);
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(&sx).expect("square").scale(&Scalar::from_ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term).expect("same size");
    }
    out
}

fn torus(r: &Realization, rng: &mut ChaCha20Rng, bound: u32) -> Vec<Scalar> {
    let n = r.size();
    match r.family() {
        Classical::Gl => (0..n).map(|_| draw(rng, bound)).collect(),
        Classical::Sl => {
            let mut t: Vec<Scalar> = (0..n - 1).map(|_| draw(rng, bound)).collect();
            let prod = t.iter().fold(Scalar::one(), |acc, x| acc * x);
            t.push(prod.inv().expect("nonzero"));
            t
        }
        Classical::So | Classical::Sp => {
            let m = n / 2;
            let first: Vec<Scalar> = (0..m).map(|_| draw(rng, bound)).collect();
            let mut t = first.clone();
            if n % 2 == 1 {
                t.push(Scalar::one());
            }
            t.extend(first.iter().rev().map(|x| x.inv().expect("nonzero")));
            t
        }
    }
}

fn element(r: &Realization, cfg: &SamplerConfig, stream: u64) -> Sample {
    let mut rng = rng_for(cfg, stream);
    let n = r.size();
    let neg = r.root_vectors(false);
    let pos = r.root_vectors(true);
    let s: Vec<Scalar> = neg.iter().map(|_| draw(&mut rng, cfg.coefficient_bound)).collect();
    let t = torus(r, &mut rng, cfg.coefficient_bound);
    let rr: Vec<Scalar> = pos.iter().map(|_| draw(&mut rng, cfg.coefficient_bound)).collect();

    let mut g = Matrix::identity(n);
    let mut g_inv = Matrix::identity(n);
    // g = F_1 ... F_k · T · E_1 ... E_l, so g^-1 = E_l^-1 ... E_1^-1 · T^-1 · F_k^-1 ... F_1^-1.
    let mut inv_factors: Vec<Matrix> = Vec::new();
    for (x, c) in neg.iter().zip(&s) {
        g = g.mul(&exp_nilpotent(x, c)).expect("square");
        inv_factors.push(exp_nilpotent(x, &-c.clone()));
    }
    let t_inv: Vec<Scalar> = t.iter().map(|x| x.inv().expect("nonzero")).collect();
    g = g.mul(&Matrix::diagonal(&t)).expect("square");
    inv_factors.push(Matrix::diagonal(&t_inv));
    for (x, c) in pos.iter().zip(&rr) {
        g = g.mul(&exp_nilpotent(x, c)).expect("square");
        inv_factors.push(exp_nilpotent(x, &-c.clone()));
    }
    for f in inv_factors.iter().rev() {
        g_inv = g_inv.mul(f).expect("square");
    }
    Sample { g, g_inv }
}

/// The `index`-th sample of the sequence fixed by `cfg`.
pub fn sample_element(r: &Realization, cfg: &SamplerConfig, index: u64) -> Sample {
    element(r, cfg, index)
}

/// Two independent samples for the `index`-th pair, drawn from streams
/// disjoint from those of [`sample_element`].
pub fn sample_pair(r: &Realization, cfg: &SamplerConfig, index: u64) -> (Sample, Sample) {
    let base = 1u64 << 32;
    (element(r, cfg, base | (2 * index)), element(r, cfg, base | (2 * index + 1)))
}

/// Big-cell data of a connected subgroup: lower and upper nilpotent
/// generators and integral cocharacters spanning its torus.
#[derive(Debug, Clone)]
pub struct Cell {
    pub size: usize,
    pub neg: Vec<Matrix>,
    pub cocharacters: Vec<Vec<i64>>,
    pub pos: Vec<Matrix>,
}

/// Like [`sample_element`], inside the subgroup described by `cell`.
/// Streams are disjoint from the other samplers.
pub fn sample_cell(cell: &Cell, cfg: &SamplerConfig, index: u64) -> Sample {
    let mut rng = rng_for(cfg, (2u64 << 32) | index);
    let n = cell.size;
    let mut g = Matrix::identity(n);
    let mut inv_factors: Vec<Matrix> = Vec::new();
    for x in &cell.neg {
        let c = draw(&mut rng, cfg.coefficient_bound);
        g = g.mul(&exp_nilpotent(x, &c)).expect("square");
        inv_factors.push(exp_nilpotent(x, &-c));
    }
    let mut t = vec![Scalar::one(); n];
    for h in &cell.cocharacters {
        let c = draw(&mut rng, cfg.coefficient_bound);
        let c_inv = c.inv().expect("nonzero");
        for (entry, &e) in t.iter_mut().zip(h) {
            let base = if e >= 0 { &c } else { &c_inv };
            for _ in 0..e.unsigned_abs() {
                *entry = entry.clone() * base;
            }
        }
    }
    let t_inv: Vec<Scalar> = t.iter().map(|x| x.inv().expect("nonzero")).collect();
    g = g.mul(&Matrix::diagonal(&t)).expect("square");
    inv_factors.push(Matrix::diagonal(&t_inv));
    for x in &cell.pos {
        let c = draw(&mut rng, cfg.coefficient_bound);
        g = g.mul(&exp_nilpotent(x, &c)).expect("square");
        inv_factors.push(exp_nilpotent(x, &-c));
    }
    let mut g_inv = Matrix::identity(n);
    for f in inv_factors.iter().rev() {
        g_inv = g_inv.mul(f).expect("square");
    }
    Sample { g, g_inv }
}
