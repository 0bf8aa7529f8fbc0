//! Discriminant groups, quadratic forms on them, and the two embedding
//! criteria used for K3 lattices.
//!
//! The discriminant group `A_L = L*/L` of an even nondegenerate lattice is
//! computed from the Smith normal form of the Gram matrix, with generators
//! lifted through the retained transforms. Quadratic values are reduced to
//! `[0, 2)` mod `2Z` and bilinear values to `[0, 1)` mod `Z` so forms
//! compare by equality.

use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{GramLattice, LatticeError, SignaturePair};
use crate::arith::{reduce_mod, smith_normal_form, Int, Rat};

/// Finite quadratic form on the discriminant group, presented on the
/// cyclic generators of the invariant-factor decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    /// invariant factors > 1, each dividing the next
    invariant_factors: Vec<Int>,
    /// dual-basis integer coordinates of each generator (columns of P⁻¹)
    generators: Vec<Vec<Int>>,
    /// q(gᵢ) mod 2Z, reduced to [0, 2)
    q_diag: Vec<Rat>,
    /// b(gᵢ, gⱼ) mod Z, reduced to [0, 1)
    b_mat: Vec<Vec<Rat>>,
}

impl FiniteQuadraticForm {
    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
            generators: Vec::new(),
            q_diag: Vec::new(),
            b_mat: Vec::new(),
        }
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    pub fn q_values(&self) -> &[Rat] {
        &self.q_diag
    }

    pub fn bilinear_values(&self) -> &[Vec<Rat>] {
        &self.b_mat
    }

    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    /// q(Σ cᵢ gᵢ) mod 2Z, determined by the generator values.
    pub fn q_of(&self, coeffs: &[Int]) -> Rat {
        assert_eq!(coeffs.len(), self.invariant_factors.len());
        let mut total = Rat::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let cr = Rat::from_integer(c.clone());
            total += &cr * &cr * &self.q_diag[i];
            for (j, d) in coeffs.iter().enumerate().take(i) {
                let dr = Rat::from_integer(d.clone());
                total += Rat::from_integer(Int::from(2)) * &cr * &dr * &self.b_mat[i][j];
            }
        }
        reduce_mod(&total, 2)
    }

    /// b(Σ cᵢ gᵢ, Σ dᵢ gᵢ) mod Z.
    pub fn b_of(&self, c: &[Int], d: &[Int]) -> Rat {
        let mut total = Rat::zero();
        for (i, ci) in c.iter().enumerate() {
            for (j, dj) in d.iter().enumerate() {
                let v = Rat::from_integer(ci.clone()) * Rat::from_integer(dj.clone())
                    * &self.b_mat[i.max(j)][i.min(j)];
                total += v;
            }
        }
        reduce_mod(&total, 1)
    }
}

/// Minimal number of generators of the discriminant group: the count of
/// invariant factors exceeding one.
pub fn min_generators(f: &FiniteQuadraticForm) -> usize {
    f.invariant_factors.len()
}

/// Discriminant form of an even nondegenerate lattice.
pub fn discriminant_form(l: &GramLattice) -> Result<FiniteQuadraticForm, LatticeError> {
    if !l.is_even() {
        return Err(LatticeError::NotEven);
    }
    let det = l.determinant();
    if det.is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let snf = smith_normal_form(l.gram());
    let pinv = snf.p.inverse_unimodular().expect("SNF row transform is unimodular");
    let ginv = l.gram().to_rat().inverse().expect("nondegenerate");

    let mut invariant_factors = Vec::new();
    let mut generators: Vec<Vec<Int>> = Vec::new();
    for (i, d) in snf.d.iter().enumerate() {
        if d.abs() <= Int::one() {
            continue;
        }
        invariant_factors.push(d.clone());
        generators.push(pinv.col(i));
    }

    // rational e-basis coordinates of each generator: G⁻¹ · (dual coords)
    let coords: Vec<Vec<Rat>> = generators
        .iter()
        .map(|g| {
            let gr: Vec<Rat> = g.iter().map(|v| Rat::from_integer(v.clone())).collect();
            ginv.mul_vec(&gr)
        })
        .collect();

    let pair = |a: &[Rat], b: &[Rat]| -> Rat {
        let gb = l.gram().to_rat().mul_vec(b);
        a.iter().zip(&gb).map(|(x, y)| x * y).sum()
    };

    let k = generators.len();
    let q_diag: Vec<Rat> = (0..k).map(|i| reduce_mod(&pair(&coords[i], &coords[i]), 2)).collect();
    let b_mat: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..=i).map(|j| reduce_mod(&pair(&coords[i], &coords[j]), 1)).collect())
        .collect();

    debug_assert_eq!(
        invariant_factors.iter().product::<Int>(),
        det.abs(),
        "group order must equal |det|"
    );
    Ok(FiniteQuadraticForm { invariant_factors, generators, q_diag, b_mat })
}

/// Generator images defining a group isomorphism between two finite
/// quadratic forms (carrying q to -q for `forms_opposite`, to q for
/// `forms_equal`). Witnesses re-verify by [`verify_form_iso`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormIsoWitness {
    /// coefficient tuple of the image of each source generator
    pub images: Vec<Vec<i64>>,
    /// true when the witness carries q to -q
    pub negated: bool,
}

const DEFAULT_GROUP_BOUND: i64 = 10_000;

/// Isomorphism carrying `q₁` to `-q₂` (the orthogonality criterion for
/// primitively embedded K3 sublattices), searched exhaustively over
/// homomorphisms determined on generators.
pub fn forms_opposite(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
) -> Result<Option<FormIsoWitness>, LatticeError> {
    find_form_iso(f1, f2, true, DEFAULT_GROUP_BOUND)
}

/// Isomorphism carrying `q₁` to `q₂`.
pub fn forms_equal(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
) -> Result<Option<FormIsoWitness>, LatticeError> {
    find_form_iso(f1, f2, false, DEFAULT_GROUP_BOUND)
}

pub fn find_form_iso(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    negated: bool,
    bound: i64,
) -> Result<Option<FormIsoWitness>, LatticeError> {
    let order = f1.order();
    if order != f2.order() {
        return Ok(None);
    }
    if order > Int::from(bound) {
        return Err(LatticeError::GroupTooLarge(order, Int::from(bound)));
    }
    // isomorphic groups have identical invariant-factor chains
    if f1.invariant_factors != f2.invariant_factors {
        return Ok(None);
    }
    let factors: Vec<i64> = f2
        .invariant_factors
        .iter()
        .map(|d| d.to_i64().expect("bounded order"))
        .collect();
    if factors.is_empty() {
        return Ok(Some(FormIsoWitness { images: Vec::new(), negated }));
    }

    let elements = enumerate_elements(&factors);
    let mut images: Vec<Vec<i64>> = Vec::new();
    if assign_generator(f1, f2, negated, &factors, &elements, &mut images) {
        return Ok(Some(FormIsoWitness { images, negated }));
    }
    Ok(None)
}

fn enumerate_elements(factors: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &d in factors {
        let mut next = Vec::with_capacity(out.len() * d as usize);
        for tail in &out {
            for c in 0..d {
                let mut t = tail.clone();
                t.push(c);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn assign_generator(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    negated: bool,
    factors: &[i64],
    elements: &[Vec<i64>],
    images: &mut Vec<Vec<i64>>,
) -> bool {
    let k = images.len();
    if k == f1.invariant_factors.len() {
        return generates_group(factors, images);
    }
    let d1 = f1.invariant_factors[k].to_i64().expect("bounded order");
    let sign = if negated { -1 } else { 1 };
    'candidates: for h in elements {
        // order of h must divide the order of the source generator
        if !h.iter().zip(factors).all(|(c, d)| (c * d1) % d == 0) {
            continue;
        }
        let hv: Vec<Int> = h.iter().map(|&c| Int::from(c)).collect();
        let want_q = reduce_mod(&(f1.q_diag[k].clone() * Rat::from_integer(Int::from(sign))), 2);
        if f2.q_of(&hv) != want_q {
            continue;
        }
        for (j, prev) in images.iter().enumerate() {
            let pv: Vec<Int> = prev.iter().map(|&c| Int::from(c)).collect();
            let want_b =
                reduce_mod(&(f1.b_mat[k][j].clone() * Rat::from_integer(Int::from(sign))), 1);
            if f2.b_of(&hv, &pv) != want_b {
                continue 'candidates;
            }
        }
        images.push(h.clone());
        if assign_generator(f1, f2, negated, factors, elements, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Images generate the whole group iff the map is surjective (equal orders
/// then make it bijective).
fn generates_group(factors: &[i64], images: &[Vec<i64>]) -> bool {
    let order: i64 = factors.iter().product();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(vec![0; factors.len()]);
    let mut frontier: Vec<Vec<i64>> = vec![vec![0; factors.len()]];
    while let Some(x) = frontier.pop() {
        for img in images {
            let y: Vec<i64> =
                x.iter().zip(img).zip(factors).map(|((a, b), d)| (a + b) % d).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as i64 == order
}

/// Re-check a witness against the two forms it claims to relate.
pub fn verify_form_iso(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    w: &FormIsoWitness,
) -> bool {
    if f1.invariant_factors != f2.invariant_factors
        || w.images.len() != f1.invariant_factors.len()
    {
        return false;
    }
    let factors: Vec<i64> = match f2.invariant_factors.iter().map(|d| d.to_i64()).collect() {
        Some(f) => f,
        None => return false,
    };
    let sign = if w.negated { -1 } else { 1 };
    for (k, h) in w.images.iter().enumerate() {
        let hv: Vec<Int> = h.iter().map(|&c| Int::from(c)).collect();
        let want_q = reduce_mod(&(f1.q_diag[k].clone() * Rat::from_integer(Int::from(sign))), 2);
        if f2.q_of(&hv) != want_q {
            return false;
        }
        for j in 0..k {
            let pv: Vec<Int> = w.images[j].iter().map(|&c| Int::from(c)).collect();
            let want_b =
                reduce_mod(&(f1.b_mat[k][j].clone() * Rat::from_integer(Int::from(sign))), 1);
            if f2.b_of(&hv, &pv) != want_b {
                return false;
            }
        }
    }
    generates_group(&factors, &w.images)
}

/// Per-condition breakdown of the primitive-embedding criterion for an
/// even lattice into an even unimodular ambient of signature `(l₊, l₋)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NikulinCheck {
    pub ambient: (usize, usize),
    pub signature: (usize, usize),
    pub rank: usize,
    pub ambient_rank: usize,
    pub min_generators: usize,
    /// l₊ - l₋ ≡ 0 mod 8
    pub cond_signature_mod8: bool,
    /// l₋ - t₋ ≥ 0 and l₊ - t₊ ≥ 0
    pub cond_signature_fits: bool,
    /// rk Λ - rk L > l(A_L)  (or ≥ with the relaxed flag)
    pub cond_rank_gap: bool,
    pub strict: bool,
    pub pass: bool,
}

/// Evaluate the three embedding conditions with recomputed quantities.
///
/// `strict` keeps the rank-gap inequality strict as cited; the relaxed
/// variant (≥) is available for experimentation.
pub fn nikulin_embedding_check(
    l: &GramLattice,
    ambient: (usize, usize),
    strict: bool,
) -> Result<NikulinCheck, LatticeError> {
    if !l.is_even() {
        return Err(LatticeError::NotEven);
    }
    let SignaturePair { positive: t_plus, negative: t_minus } = l.signature()?;
    let form = discriminant_form(l)?;
    let l_a = min_generators(&form);
    let (l_plus, l_minus) = ambient;
    let ambient_rank = l_plus + l_minus;
    let rank = l.rank();

    let cond_signature_mod8 = (l_plus as i64 - l_minus as i64).rem_euclid(8) == 0;
    let cond_signature_fits = l_minus >= t_minus && l_plus >= t_plus;
    let gap = ambient_rank as i64 - rank as i64;
    let cond_rank_gap = if strict { gap > l_a as i64 } else { gap >= l_a as i64 };

    Ok(NikulinCheck {
        ambient,
        signature: (t_plus, t_minus),
        rank,
        ambient_rank,
        min_generators: l_a,
        cond_signature_mod8,
        cond_signature_fits,
        cond_rank_gap,
        strict,
        pass: cond_signature_mod8 && cond_signature_fits && cond_rank_gap,
    })
}

/// Verify stored generator data against the lattice it came from: each
/// generator times its invariant factor lies in `L`, and its q-value
/// recomputes from the Gram matrix.
pub fn verify_generators(l: &GramLattice, f: &FiniteQuadraticForm) -> bool {
    let Some(ginv) = l.gram().to_rat().inverse() else {
        return false;
    };
    for (g, d) in f.generators.iter().zip(&f.invariant_factors) {
        let gr: Vec<Rat> = g.iter().map(|v| Rat::from_integer(v.clone())).collect();
        let coords: Vec<Rat> = ginv.mul_vec(&gr);
        // d·g ∈ L: scaled coordinates all integral
        if !coords.iter().all(|c| (c * Rat::from_integer(d.clone())).is_integer()) {
            return false;
        }
    }
    // q values recompute
    let Ok(fresh) = discriminant_form(l) else {
        return false;
    };
    fresh == *f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::lattice::names::{parse_lattice_expr, standard_lattice, LatticeName};

    fn a1() -> GramLattice {
        standard_lattice(&LatticeName::A(1)).unwrap()
    }

    #[test]
    fn a1_discriminant_form() {
        let f = discriminant_form(&a1()).unwrap();
        assert_eq!(f.invariant_factors(), &[int(2)]);
        // q(g) = -1/2 mod 2Z, stored as 3/2
        assert_eq!(f.q_values(), &[rat(3, 2)]);
        assert_eq!(min_generators(&f), 1);
        assert!(verify_generators(&a1(), &f));
    }

    #[test]
    fn trivial_forms_have_identity_witness() {
        let u = crate::lattice::tests::u_lattice();
        let f = discriminant_form(&u).unwrap();
        assert_eq!(min_generators(&f), 0);
        let w = forms_opposite(&f, &f).unwrap().unwrap();
        assert!(w.images.is_empty());
        assert!(verify_form_iso(&f, &f, &w));
    }

    #[test]
    fn a1_is_not_its_own_opposite() {
        let f = discriminant_form(&a1()).unwrap();
        assert!(forms_opposite(&f, &f).unwrap().is_none());
        assert!(forms_equal(&f, &f).unwrap().is_some());
    }

    #[test]
    fn u_a1_a3_factors() {
        let l = parse_lattice_expr("U+A1+A3", None).unwrap();
        assert_eq!(l.determinant(), int(-8));
        let f = discriminant_form(&l).unwrap();
        assert_eq!(f.invariant_factors(), &[int(2), int(4)]);
        assert_eq!(min_generators(&f), 2);
    }

    #[test]
    fn odd_lattice_rejected() {
        let l = GramLattice::from_i64(&[&[1]], "odd");
        assert!(matches!(discriminant_form(&l), Err(LatticeError::NotEven)));
        assert!(matches!(
            nikulin_embedding_check(&l, (3, 19), true),
            Err(LatticeError::NotEven)
        ));
    }

    #[test]
    fn group_too_large_guard() {
        let f1 = FiniteQuadraticForm::trivial();
        let f2 = FiniteQuadraticForm::trivial();
        assert!(find_form_iso(&f1, &f2, true, 0).is_ok());
        let big = discriminant_form(&GramLattice::from_i64(&[&[-20002]], "big")).unwrap();
        assert!(matches!(
            find_form_iso(&big, &big, true, 10_000),
            Err(LatticeError::GroupTooLarge(_, _))
        ));
    }

    #[test]
    fn nikulin_conditions() {
        // rank-2 hyperbolic with group (C2)^2 against the K3 signature
        let l = GramLattice::from_i64(&[&[0, 2], &[2, -2]], "W10'");
        let c = nikulin_embedding_check(&l, (3, 19), true).unwrap();
        assert!(c.pass);
        assert_eq!(c.signature, (1, 1));
        assert_eq!(c.min_generators, 2);
        assert_eq!(c.ambient_rank - c.rank, 20);

        // ambient too small in the negative direction
        let e8sq = {
            let e8 = standard_lattice(&LatticeName::E(8)).unwrap();
            let s = crate::lattice::direct_sum(&e8, &e8);
            let u = crate::lattice::tests::u_lattice();
            let mut t = crate::lattice::direct_sum(&s, &u);
            t = crate::lattice::direct_sum(&t, &u);
            crate::lattice::direct_sum(&t, &u)
        };
        // 22 = rank of e8sq; t_- = 19, l_- - t_- = 0 but rank gap fails
        let c = nikulin_embedding_check(&e8sq, (3, 19), true).unwrap();
        assert!(!c.pass);
        assert!(!c.cond_rank_gap);
    }

    #[test]
    fn torsion_order_of_generators_matches_factor() {
        let l = parse_lattice_expr("U+A1+A3", None).unwrap();
        let f = discriminant_form(&l).unwrap();
        for (g, d) in f.generators().iter().zip(f.invariant_factors()) {
            assert_eq!(crate::lattice::torsion_order(&l, g).unwrap(), *d);
        }
    }
}
