//! Embedding of weighted monomials into the polytope lattice.
//!
//! A weight system fixes four positive weights and a basis of the rank-3
//! sublattice of `Z⁴` orthogonal to them; degree-matching monomials then
//! land in `Z³` by expressing `exponents - (1,1,1,1)` in that basis.

use num_traits::{One, Zero};

use super::{LatticeVector, PolytopeError};
use crate::arith::{smith_normal_form, Int, IntMat};

#[derive(Clone, Debug)]
pub struct WeightSystem {
    weights: [Int; 4],
    degree: Int,
    /// columns of the 4×3 solve matrix are the basis vectors
    basis: [[Int; 4]; 3],
    index: Int,
}

impl WeightSystem {
    pub fn new(weights: [Int; 4], basis: [[Int; 4]; 3]) -> Result<Self, PolytopeError> {
        use num_traits::Signed;
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(PolytopeError::InvalidWeightSystem("weights must be positive".into()));
        }
        for (k, b) in basis.iter().enumerate() {
            let dot: Int = b.iter().zip(&weights).map(|(x, w)| x * w).sum();
            if !dot.is_zero() {
                return Err(PolytopeError::InvalidWeightSystem(format!(
                    "basis vector {k} is not orthogonal to the weights"
                )));
            }
        }
        // The three vectors must be independent. They may span the
        // weight-orthogonal sublattice with index > 1 (the Smith normal
        // form of the 3×4 matrix measures the index); monomials outside
        // the spanned sublattice surface as NotInLattice when mapped.
        let m = IntMat::from_rows(basis.iter().map(|b| b.to_vec()).collect());
        let snf = smith_normal_form(&m);
        if snf.rank() != 3 {
            return Err(PolytopeError::InvalidWeightSystem(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let index: Int = snf.d.iter().product();
        let degree = weights.iter().sum();
        Ok(Self { weights, degree, basis, index })
    }

    pub fn from_i64(weights: [i64; 4], basis: [[i64; 4]; 3]) -> Result<Self, PolytopeError> {
        Ok(Self::new(
            weights.map(Int::from),
            basis.map(|b| b.map(Int::from)),
        )?)
    }

    pub fn weights(&self) -> &[Int; 4] {
        &self.weights
    }

    pub fn degree(&self) -> &Int {
        &self.degree
    }

    pub fn basis(&self) -> &[[Int; 4]; 3] {
        &self.basis
    }

    /// Index of the spanned sublattice inside the full weight-orthogonal
    /// sublattice of `Z⁴`; 1 means the basis spans everything.
    pub fn sublattice_index(&self) -> &Int {
        &self.index
    }
}

/// Coordinates of `exponents - (1,1,1,1)` in the weight basis.
///
/// The monomial must have weighted degree equal to the system degree, and
/// the shifted exponent vector must be an exact integer combination of the
/// basis.
pub fn monomial_to_lattice_point(
    ws: &WeightSystem,
    exponents: &[Int; 4],
) -> Result<LatticeVector, PolytopeError> {
    let deg: Int = exponents.iter().zip(&ws.weights).map(|(e, w)| e * w).sum();
    if deg != ws.degree {
        return Err(PolytopeError::WrongDegree { want: ws.degree.clone(), got: deg });
    }
    let shifted: Vec<Int> = exponents.iter().map(|e| e - Int::one()).collect();
    // 4×3 system: columns are basis vectors
    let m = IntMat::from_fn(4, 3, |i, j| ws.basis[j][i].clone());
    let sol = m.solve(&shifted).ok_or(PolytopeError::NotInLattice)?;
    Ok(LatticeVector::new(sol[0].clone(), sol[1].clone(), sol[2].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn q17_system() -> WeightSystem {
        WeightSystem::from_i64(
            [1, 1, 3, 5],
            [[-3, 3, 0, 0], [-8, 0, 1, 1], [-6, 1, 0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn weighted_monomials_map_to_vertices() {
        let ws = q17_system();
        let cases: [([i64; 4], (i64, i64, i64)); 4] = [
            ([7, 0, 1, 0], (0, 0, -1)),  // W^7 Y
            ([0, 5, 0, 1], (1, -1, 1)),  // X^5 Z
            ([0, 1, 3, 0], (1, 2, -3)),  // X Y^3
            ([0, 0, 0, 2], (-1, -1, 2)), // Z^2
        ];
        for (exps, want) in cases {
            let got = monomial_to_lattice_point(&ws, &exps.map(Int::from)).unwrap();
            assert_eq!(got, LatticeVector::from_i64(want.0, want.1, want.2));
        }
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let ws = q17_system();
        let err = monomial_to_lattice_point(&ws, &[int(1), int(0), int(0), int(0)]);
        assert!(matches!(err, Err(PolytopeError::WrongDegree { .. })));
    }

    #[test]
    fn bad_basis_rejected() {
        // not orthogonal to the weights
        let err = WeightSystem::from_i64(
            [1, 1, 3, 5],
            [[-3, 3, 0, 1], [-8, 0, 1, 1], [-6, 1, 0, 1]],
        );
        assert!(matches!(err, Err(PolytopeError::InvalidWeightSystem(_))));
        // linearly dependent
        let err = WeightSystem::from_i64(
            [1, 1, 3, 5],
            [[-3, 3, 0, 0], [-6, 6, 0, 0], [-6, 1, 0, 1]],
        );
        assert!(matches!(err, Err(PolytopeError::InvalidWeightSystem(_))));
    }

    #[test]
    fn sublattice_indices() {
        // the hand-picked basis spans with index 3; the standard one with index 1
        assert_eq!(*q17_system().sublattice_index(), int(3));
        let std = WeightSystem::from_i64(
            [1, 1, 2, 3],
            [[-1, 1, 0, 0], [-2, 0, 1, 0], [-3, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(*std.sublattice_index(), int(1));
    }

    #[test]
    fn point_outside_spanned_sublattice() {
        // degree-10 monomial W^5 X^2 Y: the shift lands outside the
        // index-3 sublattice, which is a typed error
        let ws = q17_system();
        let r = monomial_to_lattice_point(&ws, &[int(5), int(2), int(1), int(0)]);
        assert!(matches!(r, Err(PolytopeError::NotInLattice)));
    }
}
