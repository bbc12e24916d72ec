//! Rank modulo a prime as a certified shortcut.
//!
//! Reduction `Z[i][1/d] → F_p` (with `i ↦ √-1`, available since
//! `p ≡ 1 mod 4`) is a ring map, so every minor that survives it was
//! nonzero to begin with: the rank mod `p` never exceeds the exact rank.
//! When it already equals `min(rows, cols)` the exact rank is pinned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{rank_of_rows, Scalar};

/// A 62-bit prime with `PRIME ≡ 1 (mod 4)`.
pub const PRIME: u64 = 4_611_686_018_427_387_817;
const SQRT_NEG_ONE: u64 = 4_490_822_397_581_186_023;

fn mul(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

fn int_mod(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(PRIME)).to_u64().expect("reduced below the prime")
}

/// Image of `x` in `F_p`, or `None` if a denominator vanishes there.
pub fn reduce(x: &Scalar) -> Option<u64> {
    let part = |q: &num_rational::BigRational| -> Option<u64> {
        let d = int_mod(q.denom());
        if d == 0 {
            return None;
        }
        Some(mul(int_mod(q.numer()), inv(d)))
    };
    let re = part(x.re())?;
    let im = part(x.im())?;
    Some(add(re, mul(im, SQRT_NEG_ONE)))
}

/// Rank over `F_p` of reduced rows.
pub fn rank_mod_p(mut a: Vec<Vec<u64>>, ncols: usize) -> usize {
    let m = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, r);
        let pinv = inv(a[r][c]);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul(row[c], pinv);
            for j in c..ncols {
                if prow[j] != 0 {
                    row[j] = sub(row[j], mul(f, prow[j]));
                }
            }
        }
        r += 1;
    }
    r
}

/// How [`rank_fast`] settled the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankPath {
    /// Full rank modulo the prime.
    Modular,
    /// Exact fraction-free elimination.
    Exact,
}

/// Exact rank, taking the modular shortcut when it is conclusive.
pub fn rank_fast(rows: &[&[Scalar]], ncols: usize) -> (usize, RankPath) {
    let full = rows.len().min(ncols);
    if full == 0 {
        return (0, RankPath::Modular);
    }
    let reduced: Option<Vec<Vec<u64>>> = rows.iter().map(|row| row.iter().map(reduce).collect()).collect();
    if let Some(a) = reduced {
        if rank_mod_p(a, ncols) == full {
            return (full, RankPath::Modular);
        }
    }
    (rank_of_rows(rows, ncols), RankPath::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_minus_one() {
        assert_eq!(mul(SQRT_NEG_ONE, SQRT_NEG_ONE), PRIME - 1);
        assert_eq!(PRIME % 4, 1);
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let a = Scalar::new(
            num_rational::BigRational::new(3.into(), 7.into()),
            num_rational::BigRational::new((-2).into(), 5.into()),
        );
        let b = Scalar::from_ratio(-11, 4);
        let (ra, rb) = (reduce(&a).unwrap(), reduce(&b).unwrap());
        assert_eq!(reduce(&(&a * &b)).unwrap(), mul(ra, rb));
        assert_eq!(reduce(&(&a + &b)).unwrap(), add(ra, rb));
        assert_eq!(reduce(&Scalar::i()).unwrap(), SQRT_NEG_ONE);
    }

    #[test]
    fn vanishing_denominator_is_refused() {
        let big = BigInt::from(PRIME);
        let q = num_rational::BigRational::new(1.into(), big);
        assert!(reduce(&Scalar::from_rational(q)).is_none());
    }

    #[test]
    fn fast_rank_agrees_with_exact() {
        let rows: Vec<Vec<Scalar>> = vec![
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
            vec![0.into(), Scalar::i(), 1.into()],
        ];
        let refs: Vec<&[Scalar]> = rows.iter().map(Vec::as_slice).collect();
        assert_eq!(rank_fast(&refs, 3), (2, RankPath::Exact));
        assert_eq!(rank_fast(&refs[1..], 3), (2, RankPath::Modular));
    }
}
