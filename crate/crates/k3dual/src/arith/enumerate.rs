//! Exact lattice-point enumeration in ellipsoids (Fincke-Pohst).
//!
//! Enumerates all integer vectors `x` with `(x - c)ᵀ A (x - c) ≤ r` for a
//! positive-definite rational `A`. Loop bounds come from exact integer
//! square roots, so the enumeration is complete and float-free.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::RatMat;
use super::{Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotPositiveDefinite;

/// LDLᵀ data for a positive-definite form: `A = L · diag(d) · Lᵀ` with `L`
/// unit lower triangular, so `xᵀAx = Σ dᵢ (xᵢ + Σ_{j>i} L[j][i] xⱼ)²`.
struct Ldl {
    d: Vec<Rat>,
    l: RatMat,
}

fn ldl(a: &RatMat) -> Result<Ldl, NotPositiveDefinite> {
    let n = a.nrows();
    let mut m = a.clone();
    let mut l = RatMat::identity(n);
    let mut d = Vec::with_capacity(n);
    for i in 0..n {
        let di = m[(i, i)].clone();
        if !di.is_positive() {
            return Err(NotPositiveDefinite);
        }
        for j in i + 1..n {
            l[(j, i)] = &m[(j, i)] / &di;
        }
        for j in i + 1..n {
            for k in i + 1..=j {
                let v = &l[(j, i)] * &di * &l[(k, i)];
                m[(j, k)] -= &v;
                if j != k {
                    m[(k, j)] = m[(j, k)].clone();
                }
            }
        }
        d.push(di);
    }
    Ok(Ldl { d, l })
}

/// Visit every `x ∈ Zⁿ` with `(x - center)ᵀ A (x - center) ≤ radius`.
///
/// `visit` receives the point and the exact quadratic value; returning
/// `false` stops the enumeration early. Order is deterministic: coordinates
/// are assigned from the last index down, each ascending.
pub fn enumerate_ellipsoid(
    a: &RatMat,
    center: &[Rat],
    radius: &Rat,
    visit: &mut dyn FnMut(&[Int], &Rat) -> bool,
) -> Result<(), NotPositiveDefinite> {
    let n = a.nrows();
    assert_eq!(center.len(), n);
    if radius.is_negative() {
        return Ok(());
    }
    if n == 0 {
        visit(&[], &Rat::zero());
        return Ok(());
    }
    let dec = ldl(a)?;
    let mut x = vec![Int::zero(); n];
    descend(&dec, center, n, radius.clone(), &mut x, visit);
    Ok(())
}

/// Assign coordinate `level-1` given the outer ones; `rem` is the budget
/// left for levels `0..level`.
fn descend(
    dec: &Ldl,
    center: &[Rat],
    level: usize,
    rem: Rat,
    x: &mut [Int],
    visit: &mut dyn FnMut(&[Int], &Rat) -> bool,
) -> bool {
    let i = level - 1;
    // s = centerᵢ - Σ_{j>i} L[j][i] (xⱼ - centerⱼ); the level term is dᵢ(xᵢ - s)²
    let mut s = center[i].clone();
    for j in level..x.len() {
        let t = (Rat::from_integer(x[j].clone()) - &center[j]) * &dec.l[(j, i)];
        s -= t;
    }
    // integer bounds of (xᵢ - s)² ≤ rem/dᵢ via exact integer sqrt
    let bound = &rem / &dec.d[i];
    let (lo, hi) = sqrt_interval(&s, &bound);
    let mut xi = lo;
    while xi <= hi {
        let diff = Rat::from_integer(xi.clone()) - &s;
        let used = &diff * &diff * &dec.d[i];
        let rem2 = &rem - &used;
        if !rem2.is_negative() {
            x[i] = xi.clone();
            if i == 0 {
                let value = visit_value(dec, center, x);
                if !visit(x, &value) {
                    return false;
                }
            } else if !descend(dec, center, i, rem2, x, visit) {
                return false;
            }
        }
        xi += 1;
    }
    true
}

fn visit_value(dec: &Ldl, center: &[Rat], x: &[Int]) -> Rat {
    let n = x.len();
    let mut total = Rat::zero();
    for i in 0..n {
        let mut t = Rat::from_integer(x[i].clone()) - &center[i];
        for j in i + 1..n {
            let v = (Rat::from_integer(x[j].clone()) - &center[j]) * &dec.l[(j, i)];
            t += v;
        }
        total += &t * &t * &dec.d[i];
    }
    total
}

/// Integer interval `{x : (x - s)² ≤ b}` as `[lo, hi]` (empty when `lo > hi`).
fn sqrt_interval(s: &Rat, b: &Rat) -> (Int, Int) {
    if b.is_negative() {
        return (Int::from(1), Int::zero());
    }
    let (sn, sd) = (s.numer(), s.denom());
    let (bn, bd) = (b.numer(), b.denom());
    // floor(sd·sqrt(b)) = floor(sqrt(sd²·bn·bd) / bd)
    let inner = sd * sd * bn * bd;
    let root = num_integer::Roots::sqrt(&inner).div_floor(bd);
    // hi = floor(s + sqrt(b)); lo = ceil(s - sqrt(b)) = -floor(-s + sqrt(b))
    let hi = (sn + &root).div_floor(sd);
    let lo = -(&root - sn).div_floor(sd);
    (lo, hi)
}
