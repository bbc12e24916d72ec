//! Exact rank by fraction-free (Bareiss) elimination.
//!
//! Rows are first scaled to clear denominators, so elimination runs over
//! `Z` when every entry is real and over the Gaussian integers `Z[i]`
//! otherwise. Every intermediate entry is a minor of the cleared input,
//! which keeps coefficient growth linear in the step count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Scalar};
use crate::exec;

/// Entries are updated as `(pivot * x - a * b) / prev`, the division being
/// exact by Sylvester's identity.
trait BareissRing: Clone + Send + Sync {
    fn is_zero(&self) -> bool;
    fn bits(&self) -> u64;
    fn zero() -> Self;
    fn one() -> Self;
    fn step(pivot: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn bits(&self) -> u64 {
        num_bigint::BigInt::bits(self)
    }

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn step(pivot: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Self {
        let mut v = pivot * x;
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            v -= a * b;
        }
        if prev.is_one() {
            v
        } else {
            debug_assert!(Zero::is_zero(&(&v % prev)));
            v / prev
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn mul(&self, o: &GaussInt) -> GaussInt {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return GaussInt {
                re: &self.re * &o.re,
                im: <BigInt as Zero>::zero(),
            };
        }
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn exact_div(&self, d: &GaussInt) -> GaussInt {
        if Zero::is_zero(&d.im) {
            return GaussInt {
                re: &self.re / &d.re,
                im: &self.im / &d.re,
            };
        }
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!(Zero::is_zero(&(&re % &n)) && Zero::is_zero(&(&im % &n)));
        GaussInt {
            re: re / &n,
            im: im / &n,
        }
    }
}

impl BareissRing for GaussInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }

    fn bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }

    fn zero() -> Self {
        GaussInt {
            re: <BigInt as Zero>::zero(),
            im: <BigInt as Zero>::zero(),
        }
    }

    fn one() -> Self {
        GaussInt {
            re: <BigInt as One>::one(),
            im: <BigInt as Zero>::zero(),
        }
    }

    fn step(pivot: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Self {
        let mut v = pivot.mul(x);
        if !a.is_zero() && !b.is_zero() {
            let ab = a.mul(b);
            v.re -= ab.re;
            v.im -= ab.im;
        }
        if prev.re.is_one() && Zero::is_zero(&prev.im) {
            v
        } else {
            v.exact_div(prev)
        }
    }
}

/// Rows above this many entries get their elimination updates fanned out.
const PARALLEL_UPDATE_THRESHOLD: usize = 2048;

fn bareiss_rank<T: BareissRing>(mut a: Vec<Vec<T>>, ncols: usize) -> usize {
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    // Sparse, small rows first: pivots drawn from them keep the minors small.
    a.sort_by_cached_key(|row| {
        let nnz = row.iter().filter(|x| !x.is_zero()).count();
        let bits: u64 = row.iter().map(BareissRing::bits).max().unwrap_or(0);
        (bits, nnz)
    });
    let m = a.len();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let pivot_row = (r..m)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits());
        let Some(p) = pivot_row else { continue };
        a.swap(p, r);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        let pivot = &prow[c];
        let update = |row: &mut Vec<T>| {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                row[j] = T::step(pivot, &row[j], &lead, &prow[j], &prev);
            }
            row[c] = T::zero();
        };
        if tail.len() * (ncols - c) >= PARALLEL_UPDATE_THRESHOLD {
            exec::for_each_mut(tail, update);
        } else {
            tail.iter_mut().for_each(update);
        }
        prev = head[r][c].clone();
        r += 1;
    }
    r
}

/// Denominator-cleared integer rows, or `None` when some entry is non-real.
fn clear_denominators_real(rows: &[&[Scalar]]) -> Option<Vec<Vec<BigInt>>> {
    if rows.iter().any(|row| row.iter().any(|x| !x.is_real())) {
        return None;
    }
    Some(
        rows.iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(<BigInt as One>::one(), |acc, x| acc.lcm(x.re().denom()));
                row.iter()
                    .map(|x| x.re().numer() * (&l / x.re().denom()))
                    .collect()
            })
            .collect(),
    )
}

fn clear_denominators_gauss(rows: &[&[Scalar]]) -> Vec<Vec<GaussInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(<BigInt as One>::one(), |acc, x| {
                acc.lcm(x.re().denom()).lcm(x.im().denom())
            });
            row.iter()
                .map(|x| GaussInt {
                    re: x.re().numer() * (&l / x.re().denom()),
                    im: x.im().numer() * (&l / x.im().denom()),
                })
                .collect()
        })
        .collect()
}

/// Exact rank of the family of row vectors (all of length `ncols`).
pub fn rank_of_rows(rows: &[&[Scalar]], ncols: usize) -> usize {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    match clear_denominators_real(rows) {
        Some(ints) => bareiss_rank(ints, ncols),
        None => bareiss_rank(clear_denominators_gauss(rows), ncols),
    }
}

/// Exact rank over `C` (equivalently over `Q(i)`), pivoting down the rows.
pub fn rank(m: &Matrix) -> usize {
    let rows: Vec<&[Scalar]> = (0..m.rows()).map(|i| m.row(i)).collect();
    rank_of_rows(&rows, m.cols())
}

/// Exact rank computed by eliminating the transpose, so pivots are taken
/// in column order. Agrees with [`rank`] on every input.
pub fn rank_column_order(m: &Matrix) -> usize {
    rank(&m.transpose())
}
