//! Smith normal form over the integers with both transforms retained.
//!
//! The transforms are what make the discriminant-group computation work:
//! generators of `coker(A)` are read off the inverse of the row transform,
//! so `P` and `Q` are carried through every elementary step.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMat;
use super::Int;

/// Result of `smith_normal_form`: `p · a · q = diag(d)` with `p`, `q`
/// unimodular and `d` the non-negative invariant factors, each dividing
/// the next.
pub struct Snf {
    pub d: Vec<Int>,
    pub p: IntMat,
    pub q: IntMat,
}

impl Snf {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|v| !v.is_zero()).count()
    }

    /// Diagonal entry at `i`, zero past the stored diagonal.
    pub fn diag_entry(&self, i: usize) -> Int {
        self.d.get(i).cloned().unwrap_or_else(Int::zero)
    }

    /// Invariant factors greater than one (the nontrivial cyclic orders).
    pub fn nontrivial_factors(&self) -> Vec<Int> {
        use num_traits::One;
        self.d.iter().filter(|v| v.abs() > Int::one()).cloned().collect()
    }
}

pub fn smith_normal_form(a: &IntMat) -> Snf {
    let (m, n) = (a.nrows(), a.ncols());
    let mut b = a.clone();
    let mut p = IntMat::identity(m);
    let mut q = IntMat::identity(n);
    let steps = m.min(n);

    for k in 0..steps {
        if block_is_zero(&b, k) {
            break;
        }
        loop {
            // move a minimal-magnitude nonzero entry to the pivot
            let (i, j) = min_nonzero(&b, k);
            b.swap_rows(k, i);
            p.swap_rows(k, i);
            b.swap_cols(k, j);
            q.swap_cols(k, j);
            if b[(k, k)].is_negative() {
                b.negate_row(k);
                p.negate_row(k);
            }

            // clear the pivot column and row; nonzero remainders shrink the
            // pivot on the next pass, so this terminates
            let mut dirty = false;
            for i in k + 1..m {
                if b[(i, k)].is_zero() {
                    continue;
                }
                let t = -b[(i, k)].div_floor(&b[(k, k)]);
                b.add_row_multiple(i, k, &t);
                p.add_row_multiple(i, k, &t);
                dirty |= !b[(i, k)].is_zero();
            }
            for j in k + 1..n {
                if b[(k, j)].is_zero() {
                    continue;
                }
                let t = -b[(k, j)].div_floor(&b[(k, k)]);
                b.add_col_multiple(j, k, &t);
                q.add_col_multiple(j, k, &t);
                dirty |= !b[(k, j)].is_zero();
            }
            if dirty {
                continue;
            }

            // pivot must divide the remaining block for the divisibility chain
            match first_indivisible(&b, k) {
                Some(i) => {
                    let one = Int::from(1);
                    b.add_row_multiple(k, i, &one);
                    p.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
    }

    let d: Vec<Int> = (0..steps).map(|i| b[(i, i)].clone()).collect();
    debug_assert!(check_snf(a, &d, &p, &q));
    Snf { d, p, q }
}

fn block_is_zero(b: &IntMat, k: usize) -> bool {
    (k..b.nrows()).all(|i| (k..b.ncols()).all(|j| b[(i, j)].is_zero()))
}

fn min_nonzero(b: &IntMat, k: usize) -> (usize, usize) {
    let mut best: Option<(usize, usize)> = None;
    for i in k..b.nrows() {
        for j in k..b.ncols() {
            if b[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(bi) if b[bi].abs() <= b[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best.expect("nonzero block")
}

fn first_indivisible(b: &IntMat, k: usize) -> Option<usize> {
    let pivot = b[(k, k)].clone();
    for i in k + 1..b.nrows() {
        for j in k + 1..b.ncols() {
            if !b[(i, j)].mod_floor(&pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

fn check_snf(a: &IntMat, d: &[Int], p: &IntMat, q: &IntMat) -> bool {
    use num_traits::One;
    if !p.det().abs().is_one() || !q.det().abs().is_one() {
        return false;
    }
    let paq = p.mul(a).mul(q);
    for i in 0..paq.nrows() {
        for j in 0..paq.ncols() {
            let want = if i == j { d.get(i).cloned().unwrap_or_else(Int::zero) } else { Int::zero() };
            if paq[(i, j)] != want {
                return false;
            }
        }
    }
    for w in d.windows(2) {
        if !w[0].is_zero() && !w[1].mod_floor(&w[0]).is_zero() {
            return false;
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn factors(m: &IntMat) -> Vec<Int> {
        smith_normal_form(m).d
    }

    #[test]
    fn snf_known_matrices() {
        assert_eq!(factors(&IntMat::from_i64(&[&[-2]])), vec![int(2)]);
        assert_eq!(
            factors(&IntMat::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]])),
            vec![int(2), int(2), int(156)]
        );
        // rectangular with a zero row
        assert_eq!(
            factors(&IntMat::from_i64(&[&[1, 2, 3], &[0, 0, 0]])),
            vec![int(1), int(0)]
        );
        assert_eq!(
            factors(&IntMat::from_i64(&[
                &[-6, 111, -36, 6],
                &[5, -672, 210, 74],
                &[0, -255, 81, 24],
                &[-7, 255, -81, -10]
            ])),
            vec![int(1), int(3), int(21), int(0)]
        );
    }

    #[test]
    fn snf_transforms_hold() {
        let a = IntMat::from_i64(&[&[0, 3, 0], &[3, -2, 0], &[0, 0, -2]]);
        let snf = smith_normal_form(&a);
        let paq = snf.p.mul(&a).mul(&snf.q);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { snf.d[i].clone() } else { int(0) };
                assert_eq!(paq[(i, j)], want);
            }
        }
        // congruent to a Gram with cyclic discriminant group of order 18
        assert_eq!(snf.nontrivial_factors(), vec![int(18)]);
    }
}
