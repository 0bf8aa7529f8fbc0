//! Exact integer lattice theory.
//!
//! A lattice is represented by its Gram matrix over big integers. This
//! module provides the basic invariants (rank, determinant, signature by
//! exact congruent diagonalization), direct sums, basis changes and
//! torsion orders; discriminant forms and the embedding criteria live in
//! [`forms`], named lattices and the expression grammar in [`names`], and
//! the bounded isometry / hyperbolic-plane searches in [`search`].

pub mod forms;
pub mod names;
pub mod search;

pub use forms::{
    discriminant_form, forms_equal, forms_opposite, min_generators, nikulin_embedding_check,
    FiniteQuadraticForm, FormIsoWitness, NikulinCheck,
};
pub use names::{parse_lattice_expr, standard_lattice, LatticeExpr, LatticeName};
pub use search::{find_hyperbolic_plane, find_isometry, HyperbolicSplit};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{Int, IntMat, Rat, RatMat};

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice is not even")]
    NotEven,
    #[error("lattice is degenerate (det = 0)")]
    Degenerate,
    #[error("discriminant group order {0} exceeds the search bound {1}")]
    GroupTooLarge(Int, Int),
    #[error("basis-change rows are linearly dependent")]
    DependentRows,
    #[error("lattice does not have hyperbolic signature (1, n-1)")]
    NotHyperbolic,
    #[error("matrix entries exceed the exact fixed-width search range")]
    SearchOverflow,
    #[error("invalid lattice name: {0}")]
    InvalidName(String),
    #[error("invalid lattice expression: {0}")]
    InvalidExpression(String),
}

/// Signature `(t_+, t_-)` of a nondegenerate symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignaturePair {
    pub positive: usize,
    pub negative: usize,
}

/// Integer symmetric bilinear form on `Z^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramLattice {
    gram: IntMat,
    pub label: Option<String>,
}

impl GramLattice {
    pub fn new(gram: IntMat, label: Option<String>) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(Self { gram, label })
    }

    pub fn from_i64(rows: &[&[i64]], label: &str) -> Self {
        Self::new(IntMat::from_i64(rows), Some(label.to_string())).expect("symmetric literal")
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    /// Dimension of the underlying `Z^n`.
    pub fn n(&self) -> usize {
        self.gram.nrows()
    }

    /// Matrix rank; equals `n` exactly when nondegenerate.
    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn determinant(&self) -> Int {
        self.gram.det()
    }

    pub fn is_even(&self) -> bool {
        (0..self.n()).all(|i| self.gram[(i, i)].is_even())
    }

    /// Signature by exact congruent diagonalization over the rationals.
    ///
    /// Zero-diagonal blocks are handled as hyperbolic 2×2 blocks, each
    /// contributing `(1, 1)`.
    pub fn signature(&self) -> Result<SignaturePair, LatticeError> {
        let (pos, neg, zero) = inertia(&self.gram);
        if zero > 0 {
            return Err(LatticeError::Degenerate);
        }
        Ok(SignaturePair { positive: pos, negative: neg })
    }

    pub fn is_negative_definite(&self) -> bool {
        let (pos, _, zero) = inertia(&self.gram);
        pos == 0 && zero == 0
    }

    /// Pairing of two integer coordinate vectors under the form.
    pub fn pairing(&self, v: &[Int], w: &[Int]) -> Int {
        self.gram.bilinear(v, w)
    }
}

/// Inertia `(positive, negative, zero)` of a symmetric integer matrix.
pub fn inertia(g: &IntMat) -> (usize, usize, usize) {
    let (p, n, z, _) = diagonalize_congruent(g);
    (p, n, z)
}

/// Congruent diagonalization: returns `(pos, neg, zero, b)` where the rows
/// of `b` satisfy `b · g · bᵀ` diagonal with the counted signs.
pub fn diagonalize_congruent(g: &IntMat) -> (usize, usize, usize, RatMat) {
    assert!(g.is_symmetric());
    let n = g.nrows();
    let mut a = g.to_rat();
    let mut b = RatMat::identity(n);
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;

    // symmetric row+col operation: row_i -= f row_k, col_i -= f col_k;
    // keeps a = b·g·bᵀ for the accumulated b
    fn row_op(a: &mut RatMat, b: &mut RatMat, i: usize, k: usize, f: &Rat) {
        let n = a.nrows();
        for j in 0..n {
            let v = &a[(k, j)] * f;
            a[(i, j)] -= v;
            let v = &b[(k, j)] * f;
            b[(i, j)] -= v;
        }
        for j in 0..n {
            let v = &a[(j, k)] * f;
            a[(j, i)] -= v;
        }
    }
    fn swap(a: &mut RatMat, b: &mut RatMat, i: usize, k: usize) {
        if i == k {
            return;
        }
        let n = a.nrows();
        for j in 0..n {
            let (x, y) = (a[(i, j)].clone(), a[(k, j)].clone());
            a[(i, j)] = y;
            a[(k, j)] = x;
            let (x, y) = (b[(i, j)].clone(), b[(k, j)].clone());
            b[(i, j)] = y;
            b[(k, j)] = x;
        }
        for j in 0..n {
            let (x, y) = (a[(j, i)].clone(), a[(j, k)].clone());
            a[(j, i)] = y;
            a[(j, k)] = x;
        }
    }

    let mut k = 0;
    while k < n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap(&mut a, &mut b, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // zero diagonal block: [[0, s], [s, 0]] contributes (1, 1)
                swap(&mut a, &mut b, k + 1, j);
                let s = a[(k, k + 1)].clone();
                for i in 0..n {
                    if i == k || i == k + 1 {
                        continue;
                    }
                    let f = &a[(i, k + 1)] / &s;
                    row_op(&mut a, &mut b, i, k, &f);
                    let f = &a[(i, k)] / &s;
                    row_op(&mut a, &mut b, i, k + 1, &f);
                }
                pos += 1;
                neg += 1;
                k += 2;
                continue;
            } else {
                // whole remaining row is zero
                zero += 1;
                k += 1;
                continue;
            }
        }
        let piv = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &piv;
            row_op(&mut a, &mut b, i, k, &f);
        }
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        k += 1;
    }
    (pos, neg, zero, b)
}

/// Block-diagonal sum of two Gram lattices.
pub fn direct_sum(l1: &GramLattice, l2: &GramLattice) -> GramLattice {
    let (n1, n2) = (l1.n(), l2.n());
    let gram = IntMat::from_fn(n1 + n2, n1 + n2, |i, j| {
        if i < n1 && j < n1 {
            l1.gram[(i, j)].clone()
        } else if i >= n1 && j >= n1 {
            l2.gram[(i - n1, j - n1)].clone()
        } else {
            Int::zero()
        }
    });
    let label = match (&l1.label, &l2.label) {
        (Some(a), Some(b)) => Some(format!("{a}+{b}")),
        _ => None,
    };
    GramLattice { gram, label }
}

/// Gram matrix `B · G · Bᵀ` of the sublattice spanned by the rows of `b`.
///
/// `b` may be a square unimodular change of basis or any injective row
/// family; dependent rows are rejected.
pub fn apply_basis_change(l: &GramLattice, b: &IntMat) -> Result<GramLattice, LatticeError> {
    assert_eq!(b.ncols(), l.n(), "basis-change width must match the lattice");
    if b.rank() != b.nrows() {
        return Err(LatticeError::DependentRows);
    }
    let gram = b.mul(&l.gram).mul(&b.transpose());
    Ok(GramLattice { gram, label: None })
}

/// Least `s ≥ 1` with `s · x · gram⁻¹` integral, for `x` the coordinate
/// vector of `Σ xᵢ eᵢ*` in the dual basis. This is the order of the class
/// of that dual vector in the discriminant group.
pub fn torsion_order(l: &GramLattice, x: &[Int]) -> Result<Int, LatticeError> {
    assert_eq!(x.len(), l.n());
    let inv = l.gram.to_rat().inverse().ok_or(LatticeError::Degenerate)?;
    let xr: Vec<Rat> = x.iter().map(|v| Rat::from_integer(v.clone())).collect();
    let row = inv.vec_mul(&xr);
    let mut s = Int::one();
    for entry in row {
        s = num_integer::Integer::lcm(&s, entry.denom());
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    pub(crate) fn u_lattice() -> GramLattice {
        GramLattice::from_i64(&[&[0, 1], &[1, 0]], "U")
    }

    #[test]
    fn u_invariants() {
        let u = u_lattice();
        assert_eq!(u.rank(), 2);
        assert_eq!(u.determinant(), int(-1));
        assert_eq!(u.signature().unwrap(), SignaturePair { positive: 1, negative: 1 });
        assert!(u.is_even());
    }

    #[test]
    fn signature_mixed_block() {
        // zero diagonal forcing the hyperbolic 2x2 path, plus a definite tail
        let g = GramLattice::from_i64(&[&[0, 3, 1], &[3, 0, 0], &[1, 0, -2]], "mixed");
        let s = g.signature().unwrap();
        assert_eq!(s, SignaturePair { positive: 1, negative: 2 });
    }

    #[test]
    fn degenerate_signature_is_error() {
        let g = GramLattice::from_i64(&[&[1, 1], &[1, 1]], "deg");
        assert!(matches!(g.signature(), Err(LatticeError::Degenerate)));
        let (p, n, z) = inertia(g.gram());
        assert_eq!((p, n, z), (1, 0, 1));
    }

    #[test]
    fn direct_sum_invariants() {
        let u = u_lattice();
        let uu = direct_sum(&u, &u);
        assert_eq!(uu.rank(), 4);
        assert_eq!(uu.determinant(), int(1));
        assert_eq!(uu.signature().unwrap(), SignaturePair { positive: 2, negative: 2 });
    }

    #[test]
    fn basis_change_examples() {
        // printed 3×3 matrix and printed new basis give an exact block result
        let m = GramLattice::from_i64(&[&[-2, 2, 0], &[2, -2, 3], &[0, 3, -2]], "M'");
        let b = IntMat::from_i64(&[&[1, 1, 0], &[0, 0, 1], &[-1, 0, 0]]);
        let out = apply_basis_change(&m, &b).unwrap();
        assert_eq!(out.gram(), &IntMat::from_i64(&[&[0, 3, 0], &[3, -2, 0], &[0, 0, -2]]));

        let id = IntMat::identity(3);
        assert_eq!(apply_basis_change(&m, &id).unwrap().gram(), m.gram());

        let dep = IntMat::from_i64(&[&[1, 1, 0], &[2, 2, 0]]);
        assert!(matches!(apply_basis_change(&m, &dep), Err(LatticeError::DependentRows)));
    }

    #[test]
    fn torsion_orders() {
        let m = GramLattice::from_i64(&[&[-2]], "A1");
        assert_eq!(torsion_order(&m, &[int(0)]).unwrap(), int(1));
        assert_eq!(torsion_order(&m, &[int(1)]).unwrap(), int(2));
        assert_eq!(torsion_order(&m, &[int(2)]).unwrap(), int(1));
    }

    #[test]
    fn congruence_transform_is_returned() {
        let g = IntMat::from_i64(&[&[0, 2], &[2, -2]]);
        let (p, n, _, b) = diagonalize_congruent(&g);
        assert_eq!((p, n), (1, 1));
        let gr = g.to_rat();
        let bt = RatMat::from_fn(b.ncols(), b.nrows(), |i, j| b[(j, i)].clone());
        let d = b.mul(&gr).mul(&bt);
        for i in 0..2 {
            for j in 0..2 {
                if i != j {
                    assert!(d[(i, j)].is_zero());
                }
            }
        }
    }
}
