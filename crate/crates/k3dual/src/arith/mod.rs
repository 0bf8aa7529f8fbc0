//! Exact scalar arithmetic shared across the crate.
//!
//! Everything downstream works over arbitrary-precision integers and
//! rationals; there is no floating point anywhere in the crate.

pub mod enumerate;
pub mod matrix;
pub mod snf;

pub use matrix::{IntMat, RatMat};
pub use snf::{smith_normal_form, Snf};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// gcd of all entries, non-negative; zero for an all-zero (or empty) slice.
pub fn content(xs: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in xs {
        g = g.gcd(x);
    }
    g
}

/// Extended gcd over a slice: returns `(g, c)` with `Σ c_i x_i = g = gcd(xs) ≥ 0`.
///
/// For an all-zero slice returns `(0, zeros)`.
pub fn vector_extgcd(xs: &[Int]) -> (Int, Vec<Int>) {
    let mut g = Int::zero();
    let mut coeffs = vec![Int::zero(); xs.len()];
    for (i, x) in xs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if g.is_zero() {
            // first nonzero entry: gcd is |x|
            g = x.abs();
            coeffs[i] = if x.is_negative() { int(-1) } else { int(1) };
            continue;
        }
        let eg = g.extended_gcd(x);
        for c in coeffs.iter_mut() {
            *c *= &eg.x;
        }
        coeffs[i] = eg.y.clone();
        g = eg.gcd;
    }
    debug_assert!(!g.is_negative());
    (g, coeffs)
}

/// Reduce `r` into the half-open interval `[0, m)` for an integer modulus `m > 0`.
pub fn reduce_mod(r: &Rat, m: i64) -> Rat {
    let m = rat_int(m);
    let q = (r / &m).floor();
    r - q * m
}

/// Floor of `(a + sqrt(b)) / c` for integers `a`, `b ≥ 0`, `c > 0`.
///
/// Used to derive exact integer loop bounds from rational ellipsoid radii
/// without any floating point.
pub fn floor_div_sqrt(a: &Int, b: &Int, c: &Int) -> Int {
    debug_assert!(!b.is_negative() && c.is_positive());
    (a + num_integer::Roots::sqrt(b)).div_floor(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_extgcd_basics() {
        let xs = vec![int(6), int(10), int(15)];
        let (g, c) = vector_extgcd(&xs);
        assert_eq!(g, int(1));
        let dot: Int = xs.iter().zip(&c).map(|(a, b)| a * b).sum();
        assert_eq!(dot, int(1));

        let (g, _) = vector_extgcd(&[int(0), int(0)]);
        assert!(g.is_zero());

        let (g, c) = vector_extgcd(&[int(0), int(-4), int(6)]);
        assert_eq!(g, int(2));
        let dot: Int = c[1].clone() * int(-4) + c[2].clone() * int(6);
        assert_eq!(dot, int(2));
    }

    #[test]
    fn reduce_mod_ranges() {
        assert_eq!(reduce_mod(&rat(-1, 2), 2), rat(3, 2));
        assert_eq!(reduce_mod(&rat(5, 2), 2), rat(1, 2));
        assert_eq!(reduce_mod(&rat_int(4), 2), rat_int(0));
        assert_eq!(reduce_mod(&rat(-7, 3), 1), rat(2, 3));
    }
}
