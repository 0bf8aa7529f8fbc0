//! Lattice-point classification.
//!
//! Boundary classes are computed face-locally: edge points by the gcd of
//! the edge vector, facet points by reducing the facet to a 2D lattice
//! polygon. Only the interior class scans the bounding box. The test
//! suite cross-checks the summed class counts against a direct box
//! enumeration.

use num_traits::{One, Signed, Zero};

use super::{HalfSpace, LatticeVector, Polytope3};
use crate::arith::{vector_extgcd, Int, IntMat};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    Vertex,
    EdgeInterior,
    FacetInterior,
    Interior,
}

/// All lattice points of a polytope, partitioned by the smallest face
/// containing them.
#[derive(Clone, Debug)]
pub struct ClassifiedPoints {
    pub vertices: Vec<LatticeVector>,
    /// point together with the index of its edge
    pub edge_interior: Vec<(LatticeVector, usize)>,
    /// point together with the index of its facet
    pub facet_interior: Vec<(LatticeVector, usize)>,
    pub interior: Vec<LatticeVector>,
}

impl ClassifiedPoints {
    pub fn total(&self) -> usize {
        self.vertices.len() + self.edge_interior.len() + self.facet_interior.len() + self.interior.len()
    }

    /// Boundary points that are not facet-interior, sorted.
    pub fn rays(&self) -> Vec<LatticeVector> {
        let mut out: Vec<LatticeVector> = self
            .vertices
            .iter()
            .cloned()
            .chain(self.edge_interior.iter().map(|(p, _)| p.clone()))
            .collect();
        out.sort();
        out
    }
}

pub fn lattice_points(p: &Polytope3) -> ClassifiedPoints {
    let vertices = p.vertices().to_vec();
    let mut edge_interior = Vec::new();
    for (ei, e) in p.edges().iter().enumerate() {
        for q in &e.interior {
            edge_interior.push((q.clone(), ei));
        }
    }
    let mut facet_interior = Vec::new();
    for fi in 0..p.facets().len() {
        for q in facet_interior_points(p, fi) {
            facet_interior.push((q, fi));
        }
    }
    edge_interior.sort_by(|a, b| a.0.cmp(&b.0));
    facet_interior.sort_by(|a, b| a.0.cmp(&b.0));
    let interior = interior_points(p);
    ClassifiedPoints { vertices, edge_interior, facet_interior, interior }
}

/// Lattice points strictly inside the polytope, by bounding-box scan with
/// strict facet inequalities.
fn interior_points(p: &Polytope3) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    let (lo, hi) = bounding_box(p.vertices());
    let mut x = lo[0].clone();
    while x <= hi[0] {
        let mut y = lo[1].clone();
        while y <= hi[1] {
            let mut z = lo[2].clone();
            while z <= hi[2] {
                let q = LatticeVector::new(x.clone(), y.clone(), z.clone());
                if p.facets().iter().all(|h| h.normal.dot(&q) > -h.offset.clone()) {
                    out.push(q);
                }
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    out
}

pub fn bounding_box(points: &[LatticeVector]) -> ([Int; 3], [Int; 3]) {
    let mut lo = [points[0].x.clone(), points[0].y.clone(), points[0].z.clone()];
    let mut hi = lo.clone();
    for p in points {
        for (k, c) in p.coords().into_iter().enumerate() {
            if *c < lo[k] {
                lo[k] = c.clone();
            }
            if *c > hi[k] {
                hi[k] = c.clone();
            }
        }
    }
    (lo, hi)
}

/// Lattice points in the relative interior of facet `fi`, via reduction to
/// a 2D lattice polygon in the facet plane.
pub fn facet_interior_points(p: &Polytope3, fi: usize) -> Vec<LatticeVector> {
    let h = &p.facets()[fi];
    let (origin, u, v) = plane_lattice_frame(h);

    // facet polygon in 2D frame coordinates, ordered around the boundary
    let cycle = facet_vertex_cycle(p, fi);
    let poly2d: Vec<(Int, Int)> = cycle
        .iter()
        .map(|&vi| to_frame(&p.vertices()[vi], &origin, &u, &v))
        .collect();

    let pts2d = polygon_interior_2d(&poly2d);
    let mut out: Vec<LatticeVector> = pts2d
        .into_iter()
        .map(|(a, b)| origin.add(&u.scale(&a)).add(&v.scale(&b)))
        .collect();
    out.sort();
    debug_assert!(out.iter().all(|q| h.is_tight(q) && p.contains_point(q)));
    out
}

/// An integer point of the facet plane and a lattice basis of its
/// direction plane, so plane points are exactly `origin + a·u + b·v`.
fn plane_lattice_frame(h: &HalfSpace) -> (LatticeVector, LatticeVector, LatticeVector) {
    let n = [h.normal.x.clone(), h.normal.y.clone(), h.normal.z.clone()];
    let (g, coeffs) = vector_extgcd(&n);
    debug_assert!(g.is_one(), "facet normals are primitive");
    let t = -h.offset.clone();
    let origin = LatticeVector::new(&coeffs[0] * &t, &coeffs[1] * &t, &coeffs[2] * &t);
    debug_assert!(h.is_tight(&origin));

    let nmat = IntMat::from_rows(vec![n.to_vec()]);
    let kernel = nmat.kernel_basis();
    debug_assert_eq!(kernel.ncols(), 2);
    let u = LatticeVector::new(kernel[(0, 0)].clone(), kernel[(1, 0)].clone(), kernel[(2, 0)].clone());
    let v = LatticeVector::new(kernel[(0, 1)].clone(), kernel[(1, 1)].clone(), kernel[(2, 1)].clone());
    (origin, u, v)
}

/// 2D coordinates of a plane lattice point in the frame `(origin, u, v)`.
fn to_frame(p: &LatticeVector, origin: &LatticeVector, u: &LatticeVector, v: &LatticeVector) -> (Int, Int) {
    let rhs = p.sub(origin);
    let m = IntMat::from_rows(vec![
        vec![u.x.clone(), v.x.clone()],
        vec![u.y.clone(), v.y.clone()],
        vec![u.z.clone(), v.z.clone()],
    ]);
    let sol = m
        .solve(&[rhs.x, rhs.y, rhs.z])
        .expect("plane lattice point lies in the frame lattice");
    (sol[0].clone(), sol[1].clone())
}

/// Vertex indices of facet `fi` ordered along its boundary edge cycle.
fn facet_vertex_cycle(p: &Polytope3, fi: usize) -> Vec<usize> {
    let edges = p.facet_edges(fi);
    let start = p.edges()[edges[0]].vertices.0;
    let mut cycle = vec![start];
    let mut used = vec![false; edges.len()];
    while cycle.len() < edges.len() {
        let cur = *cycle.last().unwrap();
        let next = edges
            .iter()
            .enumerate()
            .find_map(|(k, &ei)| {
                if used[k] {
                    return None;
                }
                let (a, b) = p.edges()[ei].vertices;
                if a == cur {
                    Some((k, b))
                } else if b == cur {
                    Some((k, a))
                } else {
                    None
                }
            })
            .expect("facet edges form a cycle");
        used[next.0] = true;
        cycle.push(next.1);
    }
    cycle
}

/// Interior lattice points of a simple 2D lattice polygon, by exact
/// half-plane tests against each directed edge.
fn polygon_interior_2d(poly: &[(Int, Int)]) -> Vec<(Int, Int)> {
    let n = poly.len();
    // positive orientation: twice the signed area
    let mut area2 = Int::zero();
    for i in 0..n {
        let (x1, y1) = &poly[i];
        let (x2, y2) = &poly[(i + 1) % n];
        area2 += x1 * y2 - x2 * y1;
    }
    let ccw: Vec<(Int, Int)> = if area2.is_negative() {
        poly.iter().rev().cloned().collect()
    } else {
        poly.to_vec()
    };

    let xs: Vec<Int> = ccw.iter().map(|(x, _)| x.clone()).collect();
    let ys: Vec<Int> = ccw.iter().map(|(_, y)| y.clone()).collect();
    let (lo_x, hi_x) = (xs.iter().min().unwrap().clone(), xs.iter().max().unwrap().clone());
    let (lo_y, hi_y) = (ys.iter().min().unwrap().clone(), ys.iter().max().unwrap().clone());

    let mut out = Vec::new();
    let mut x = lo_x;
    while x <= hi_x {
        let mut y = lo_y.clone();
        while y <= hi_y {
            let strictly_inside = (0..n).all(|i| {
                let (x1, y1) = &ccw[i];
                let (x2, y2) = &ccw[(i + 1) % n];
                // cross((p2-p1), (q-p1)) > 0
                (x2 - x1) * (&y - y1) - (y2 - y1) * (&x - x1) > Int::zero()
            });
            if strictly_inside {
                out.push((x.clone(), y.clone()));
            }
            y += 1;
        }
        x += 1;
    }
    out
}
