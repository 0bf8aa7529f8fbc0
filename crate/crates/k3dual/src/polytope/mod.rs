//! Exact geometry of full-dimensional integral 3-polytopes.
//!
//! A [`Polytope3`] is stored with its complete face lattice: extreme
//! vertices, facet half-spaces, and edges together with their interior
//! lattice points. Everything is computed over big integers; all values
//! are immutable after construction, so they are safe to share across
//! threads.

mod hull;
mod points;
mod weights;

pub use points::{ClassifiedPoints, PointClass};
pub use weights::{monomial_to_lattice_point, WeightSystem};

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{Int, IntMat, Rat, RatMat};

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("origin is not strictly interior")]
    OriginNotInterior,
    #[error("polar dual is not integral ({} fractional vertices)", .0.len())]
    NonIntegralDual(Vec<[Rat; 3]>),
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("monomial degree {got} does not match weight-system degree {want}")]
    WrongDegree { want: Int, got: Int },
    #[error("point is not in the lattice spanned by the weight basis")]
    NotInLattice,
    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),
}

/// Integer point of the ambient lattice `Z³`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub x: Int,
    pub y: Int,
    pub z: Int,
}

impl LatticeVector {
    pub fn new(x: Int, y: Int, z: Int) -> Self {
        Self { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Self::new(Int::from(x), Int::from(y), Int::from(z))
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0, 0)
    }

    pub fn dot(&self, other: &Self) -> Int {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.x - &other.x, &self.y - &other.y, &self.z - &other.z)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.x + &other.x, &self.y + &other.y, &self.z + &other.z)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn scale(&self, t: &Int) -> Self {
        Self::new(&self.x * t, &self.y * t, &self.z * t)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// gcd of the coordinates, non-negative.
    pub fn content(&self) -> Int {
        self.x.gcd(&self.y).gcd(&self.z)
    }

    pub fn divide_exact(&self, d: &Int) -> Self {
        Self::new(&self.x / d, &self.y / d, &self.z / d)
    }

    pub fn coords(&self) -> [&Int; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Row-vector action `v ↦ v · T` for a 3×3 matrix.
    pub fn apply_right(&self, t: &IntMat) -> Self {
        assert_eq!((t.nrows(), t.ncols()), (3, 3));
        let v = [&self.x, &self.y, &self.z];
        let mut out = [Int::zero(), Int::zero(), Int::zero()];
        for (j, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|i| v[i] * &t[(i, j)]).sum();
        }
        let [x, y, z] = out;
        Self::new(x, y, z)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Closed half-space `{x : ⟨normal, x⟩ ≥ -offset}` with primitive normal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfSpace {
    pub normal: LatticeVector,
    pub offset: Int,
}

impl HalfSpace {
    pub fn contains(&self, p: &LatticeVector) -> bool {
        self.normal.dot(p) >= -self.offset.clone()
    }

    pub fn is_tight(&self, p: &LatticeVector) -> bool {
        self.normal.dot(p) == -self.offset.clone()
    }
}

/// Edge of the polytope: endpoint vertex indices (ascending), the interior
/// lattice points ordered from the first endpoint, and the two incident
/// facets.
#[derive(Clone, Debug)]
pub struct Edge {
    pub vertices: (usize, usize),
    pub interior: Vec<LatticeVector>,
    pub facets: (usize, usize),
}

/// Reference to a face of a `Polytope3`, by dimension and index.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaceRef {
    Vertex(usize),
    Edge(usize),
    Facet(usize),
}

/// Full-dimensional integral 3-polytope with computed face lattice.
#[derive(Clone, Debug)]
pub struct Polytope3 {
    pub label: Option<String>,
    vertices: Vec<LatticeVector>,
    facets: Vec<HalfSpace>,
    edges: Vec<Edge>,
    vertex_facets: Vec<Vec<usize>>,
    facet_vertices: Vec<Vec<usize>>,
    facet_edges: Vec<Vec<usize>>,
    vertex_edges: Vec<Vec<usize>>,
}

impl Polytope3 {
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_facets(&self, v: usize) -> &[usize] {
        &self.vertex_facets[v]
    }

    pub fn facet_vertices(&self, f: usize) -> &[usize] {
        &self.facet_vertices[f]
    }

    pub fn facet_edges(&self, f: usize) -> &[usize] {
        &self.facet_edges[f]
    }

    pub fn vertex_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn contains_point(&self, p: &LatticeVector) -> bool {
        self.facets.iter().all(|h| h.contains(p))
    }

    /// True iff the origin satisfies every facet inequality strictly.
    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|h| h.offset.is_positive())
    }
}

/// Convex hull of a set of lattice points spanning `R³` affinely.
///
/// Redundant input points (interior, or on faces without being extreme)
/// are allowed and do not appear in the vertex list.
pub fn convex_hull(points: &[LatticeVector]) -> Result<Polytope3, PolytopeError> {
    hull::convex_hull(points)
}

/// Polar dual `{y : ⟨x, y⟩ ≥ -1 for all x ∈ P}`.
///
/// Integral exactly when `P` is reflexive; a fractional dual is reported
/// as `NonIntegralDual` carrying the rational vertices.
pub fn polar_dual(p: &Polytope3) -> Result<Polytope3, PolytopeError> {
    if !p.origin_interior() {
        return Err(PolytopeError::OriginNotInterior);
    }
    let mut dual_vertices = Vec::with_capacity(p.facets.len());
    let mut fractional = Vec::new();
    for h in &p.facets {
        if h.normal.x.mod_floor(&h.offset).is_zero()
            && h.normal.y.mod_floor(&h.offset).is_zero()
            && h.normal.z.mod_floor(&h.offset).is_zero()
        {
            dual_vertices.push(h.normal.divide_exact(&h.offset));
        } else {
            fractional.push([
                Rat::new(h.normal.x.clone(), h.offset.clone()),
                Rat::new(h.normal.y.clone(), h.offset.clone()),
                Rat::new(h.normal.z.clone(), h.offset.clone()),
            ]);
        }
    }
    if !fractional.is_empty() {
        return Err(PolytopeError::NonIntegralDual(fractional));
    }
    let dual = convex_hull(&dual_vertices)?;
    // facets of P biject with vertices of the dual
    debug_assert_eq!(dual.vertices().len(), p.facets().len());
    Ok(match &p.label {
        Some(l) => dual.with_label(format!("{l}*")),
        None => dual,
    })
}

/// A polytope is reflexive iff all facet offsets are 1 (equivalently, the
/// polar dual is integral).
pub fn is_reflexive(p: &Polytope3) -> Result<bool, PolytopeError> {
    if !p.origin_interior() {
        return Err(PolytopeError::OriginNotInterior);
    }
    use num_traits::One;
    Ok(p.facets.iter().all(|h| h.offset.is_one()))
}

/// Number of lattice points in the relative interior of a face.
pub fn l_star(p: &Polytope3, face: FaceRef) -> usize {
    match face {
        FaceRef::Vertex(_) => 0,
        FaceRef::Edge(i) => p.edges[i].interior.len(),
        FaceRef::Facet(i) => points::facet_interior_points(p, i).len(),
    }
}

/// Face of `polar_dual(p)` dual to `face`: vertices pair with facets and
/// edges with edges, at pairing value `⟨x, y⟩ = -1`.
///
/// `dual` must be `polar_dual(p)`; this is checked cheaply.
pub fn dual_face(
    p: &Polytope3,
    dual: &Polytope3,
    face: FaceRef,
) -> Result<FaceRef, PolytopeError> {
    if !is_reflexive(p)? || p.facets.len() != dual.vertices.len() {
        return Err(PolytopeError::NotReflexive);
    }
    let facet_of_vertex = |v: &LatticeVector| -> Result<usize, PolytopeError> {
        dual.facets
            .iter()
            .position(|h| &h.normal == v)
            .ok_or(PolytopeError::NotReflexive)
    };
    match face {
        FaceRef::Vertex(i) => Ok(FaceRef::Facet(facet_of_vertex(&p.vertices[i])?)),
        FaceRef::Facet(i) => {
            let n = &p.facets[i].normal;
            let j = dual
                .vertices
                .iter()
                .position(|v| v == n)
                .ok_or(PolytopeError::NotReflexive)?;
            Ok(FaceRef::Vertex(j))
        }
        FaceRef::Edge(i) => {
            let (a, b) = p.edges[i].vertices;
            let fa = facet_of_vertex(&p.vertices[a])?;
            let fb = facet_of_vertex(&p.vertices[b])?;
            let pair = if fa < fb { (fa, fb) } else { (fb, fa) };
            let j = dual
                .edges
                .iter()
                .position(|e| e.facets == pair)
                .ok_or(PolytopeError::NotReflexive)?;
            Ok(FaceRef::Edge(j))
        }
    }
}

/// Classify every lattice point of `p` as vertex, edge-interior,
/// facet-interior, or interior.
pub fn lattice_points(p: &Polytope3) -> ClassifiedPoints {
    points::lattice_points(p)
}

/// True iff every vertex of `q` satisfies all facet inequalities of `p`.
pub fn contains(p: &Polytope3, q: &Polytope3) -> bool {
    q.vertices.iter().all(|v| p.contains_point(v))
}

/// Search for a unimodular `T` whose row action `v ↦ v·T` maps the vertex
/// set of `p` bijectively onto that of `q`. Absence is a value, not an
/// error; the search over vertex correspondences is exhaustive.
pub fn unimodular_equivalent(p: &Polytope3, q: &Polytope3) -> Option<IntMat> {
    if p.vertices.len() != q.vertices.len()
        || p.facets.len() != q.facets.len()
        || p.edges.len() != q.edges.len()
    {
        return None;
    }
    // pivot: first three linearly independent vertices of p
    let pivot = pivot_triple(&p.vertices)?;
    let vmat = RatMat::from_fn(3, 3, |i, j| {
        Rat::from_integer(p.vertices[pivot[i]].coords()[j].clone())
    });
    let vinv = vmat.inverse()?;

    // invariant used to prune candidate images
    let profile = |poly: &Polytope3, v: usize| -> (usize, usize) {
        (poly.vertex_edges(v).len(), poly.vertex_facets(v).len())
    };

    let n = q.vertices.len();
    for a in 0..n {
        if profile(q, a) != profile(p, pivot[0]) {
            continue;
        }
        for b in 0..n {
            if b == a || profile(q, b) != profile(p, pivot[1]) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || profile(q, c) != profile(p, pivot[2]) {
                    continue;
                }
                if let Some(t) = solve_map(&vinv, q, [a, b, c]) {
                    if verifies_bijection(&t, p, q) {
                        return Some(t);
                    }
                }
            }
        }
    }
    None
}

fn pivot_triple(vs: &[LatticeVector]) -> Option<[usize; 3]> {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i].cross(&vs[j]).is_zero() {
                continue;
            }
            for k in j + 1..vs.len() {
                if !vs[i].cross(&vs[j]).dot(&vs[k]).is_zero() {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

fn solve_map(vinv: &RatMat, q: &Polytope3, images: [usize; 3]) -> Option<IntMat> {
    let wmat = RatMat::from_fn(3, 3, |i, j| {
        Rat::from_integer(q.vertices[images[i]].coords()[j].clone())
    });
    let t = vinv.mul(&wmat);
    let mut out = IntMat::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            if !t[(i, j)].is_integer() {
                return None;
            }
            out[(i, j)] = t[(i, j)].to_integer();
        }
    }
    use num_traits::One;
    if out.det().abs().is_one() {
        Some(out)
    } else {
        None
    }
}

/// Check that `v ↦ v·T` maps `p`'s vertex set bijectively onto `q`'s.
pub fn verifies_bijection(t: &IntMat, p: &Polytope3, q: &Polytope3) -> bool {
    if p.vertices.len() != q.vertices.len() {
        return false;
    }
    let mut images: Vec<LatticeVector> = p.vertices.iter().map(|v| v.apply_right(t)).collect();
    images.sort();
    images == q.vertices
}

#[cfg(test)]
mod tests;
