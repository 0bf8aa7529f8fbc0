//! Incremental exact 3D convex hull.
//!
//! Points are inserted one at a time into a triangulated hull; visibility
//! uses strict determinant-sign predicates over big integers, which keeps
//! the horizon well-defined even for collinear and coplanar inputs. The
//! triangle planes are then merged into maximal facets and the face
//! lattice is rebuilt combinatorially.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::{Edge, HalfSpace, LatticeVector, Polytope3, PolytopeError};
use crate::arith::Int;

/// Oriented supporting plane `⟨n, x⟩ ≤ c` (outward form, `n` not yet primitive).
#[derive(Clone)]
struct Plane {
    n: LatticeVector,
    c: Int,
}

impl Plane {
    fn through(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> Option<Plane> {
        let n = b.sub(a).cross(&c.sub(a));
        if n.is_zero() {
            return None;
        }
        let off = n.dot(a);
        Some(Plane { n, c: off })
    }

    /// Orient outward against `4·interior` (sum of the initial tetrahedron).
    fn oriented(mut self, interior4: &LatticeVector) -> Plane {
        let four_c = &self.c * Int::from(4);
        match self.n.dot(interior4).cmp(&four_c) {
            std::cmp::Ordering::Greater => {
                self.n = self.n.neg();
                self.c = -self.c;
                self
            }
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Equal => unreachable!("interior point on supporting plane"),
        }
    }

    fn strictly_above(&self, p: &LatticeVector) -> bool {
        self.n.dot(p) > self.c
    }
}

struct Triangle {
    v: [usize; 3],
    plane: Plane,
}

pub fn convex_hull(points: &[LatticeVector]) -> Result<Polytope3, PolytopeError> {
    let mut pts: Vec<LatticeVector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 4 {
        return Err(PolytopeError::DegenerateInput(format!(
            "{} distinct points, need at least 4",
            pts.len()
        )));
    }

    let [i0, i1, i2, i3] = initial_tetrahedron(&pts)?;
    let interior4 = pts[i0].add(&pts[i1]).add(&pts[i2]).add(&pts[i3]);

    let mut tris: Vec<Triangle> = Vec::new();
    for tri in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        let plane = Plane::through(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]])
            .expect("tetrahedron face is non-degenerate")
            .oriented(&interior4);
        tris.push(Triangle { v: tri, plane });
    }

    let mut remaining: Vec<usize> = (0..pts.len()).filter(|i| ![i0, i1, i2, i3].contains(i)).collect();
    remaining.sort();
    for p in remaining {
        insert_point(&mut tris, &pts, p, &interior4);
    }

    build_face_lattice(&pts, &tris)
}

fn initial_tetrahedron(pts: &[LatticeVector]) -> Result<[usize; 4], PolytopeError> {
    let a = 0;
    let b = 1; // points are distinct after dedup
    let c = (2..pts.len())
        .find(|&i| !pts[b].sub(&pts[a]).cross(&pts[i].sub(&pts[a])).is_zero())
        .ok_or_else(|| PolytopeError::DegenerateInput("all points collinear".into()))?;
    let n = pts[b].sub(&pts[a]).cross(&pts[c].sub(&pts[a]));
    let d = (2..pts.len())
        .find(|&i| n.dot(&pts[i].sub(&pts[a])) != Int::zero())
        .ok_or_else(|| PolytopeError::DegenerateInput("all points coplanar".into()))?;
    Ok([a, b, c, d])
}

fn insert_point(tris: &mut Vec<Triangle>, pts: &[LatticeVector], p: usize, interior4: &LatticeVector) {
    let visible: Vec<bool> = tris.iter().map(|t| t.plane.strictly_above(&pts[p])).collect();
    if visible.iter().all(|v| !v) {
        // p inside the current hull (possibly on its boundary): it is in the
        // convex hull of the other points, hence never a vertex
        return;
    }

    // horizon = undirected edges on the boundary between visible and invisible
    let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (t, vis) in tris.iter().zip(&visible) {
        if !vis {
            continue;
        }
        for (a, b) in [(t.v[0], t.v[1]), (t.v[1], t.v[2]), (t.v[0], t.v[2])] {
            let key = if a < b { (a, b) } else { (b, a) };
            *edge_count.entry(key).or_insert(0) += 1;
        }
    }
    let horizon: Vec<(usize, usize)> = {
        let mut h = Vec::new();
        for (t, vis) in tris.iter().zip(&visible) {
            if *vis {
                continue;
            }
            for (a, b) in [(t.v[0], t.v[1]), (t.v[1], t.v[2]), (t.v[0], t.v[2])] {
                let key = if a < b { (a, b) } else { (b, a) };
                if edge_count.contains_key(&key) {
                    h.push(key);
                }
            }
        }
        h.sort();
        h.dedup();
        h
    };

    let mut kept: Vec<Triangle> = Vec::with_capacity(tris.len());
    for (t, vis) in tris.drain(..).zip(visible) {
        if !vis {
            kept.push(t);
        }
    }
    for (a, b) in horizon {
        // with strict visibility the horizon edge is never collinear with p
        let plane = Plane::through(&pts[a], &pts[b], &pts[p])
            .expect("horizon cone face is non-degenerate")
            .oriented(interior4);
        kept.push(Triangle { v: [a, b, p], plane });
    }
    *tris = kept;
}

/// Merge triangle planes into facets, derive vertices, edges and incidence.
fn build_face_lattice(pts: &[LatticeVector], tris: &[Triangle]) -> Result<Polytope3, PolytopeError> {
    // facet half-spaces in the crate convention ⟨-n/g, x⟩ ≥ -(c/g)
    let mut facets: Vec<HalfSpace> = Vec::new();
    for t in tris {
        let g = t.plane.n.content();
        debug_assert!(g.is_positive());
        let h = HalfSpace {
            normal: t.plane.n.neg().divide_exact(&g),
            offset: &t.plane.c / &g,
        };
        if !facets.contains(&h) {
            facets.push(h);
        }
    }
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

    for p in pts {
        debug_assert!(facets.iter().all(|h| h.contains(p)), "hull misses an input point");
    }

    // vertices: points tight on three facets whose normals span R³
    let mut vertices: Vec<LatticeVector> = Vec::new();
    for p in pts {
        let tight: Vec<&HalfSpace> = facets.iter().filter(|h| h.is_tight(p)).collect();
        if tight.len() < 3 {
            continue;
        }
        let spans = tight.iter().enumerate().any(|(i, a)| {
            tight.iter().enumerate().any(|(j, b)| {
                j > i && {
                    let cr = a.normal.cross(&b.normal);
                    !cr.is_zero() && tight.iter().any(|c| !cr.dot(&c.normal).is_zero())
                }
            })
        });
        if spans {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    vertices.dedup();

    let mut vertex_facets: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    let mut facet_vertices: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    for (vi, v) in vertices.iter().enumerate() {
        for (fi, h) in facets.iter().enumerate() {
            if h.is_tight(v) {
                vertex_facets[vi].push(fi);
                facet_vertices[fi].push(vi);
            }
        }
    }
    for (fi, fv) in facet_vertices.iter().enumerate() {
        if fv.len() < 3 {
            return Err(PolytopeError::DegenerateInput(format!(
                "facet {fi} has fewer than 3 vertices"
            )));
        }
    }

    // edges: facet pairs sharing exactly two vertices (hull vertices are
    // extreme, so no three of them are collinear)
    let mut edges: Vec<Edge> = Vec::new();
    for f1 in 0..facets.len() {
        for f2 in f1 + 1..facets.len() {
            let shared: Vec<usize> = facet_vertices[f1]
                .iter()
                .filter(|v| facet_vertices[f2].contains(v))
                .copied()
                .collect();
            match shared.len() {
                0 | 1 => {}
                2 => {
                    let (a, b) = (shared[0].min(shared[1]), shared[0].max(shared[1]));
                    edges.push(Edge {
                        vertices: (a, b),
                        interior: edge_interior(&vertices[a], &vertices[b]),
                        facets: (f1, f2),
                    });
                }
                n => {
                    return Err(PolytopeError::DegenerateInput(format!(
                        "facets {f1},{f2} share {n} vertices"
                    )))
                }
            }
        }
    }
    edges.sort_by_key(|e| e.vertices);

    if vertices.len() + facets.len() != edges.len() + 2 {
        return Err(PolytopeError::DegenerateInput(format!(
            "Euler check failed: V={} E={} F={}",
            vertices.len(),
            edges.len(),
            facets.len()
        )));
    }

    let mut facet_edges: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    let mut vertex_edges: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (ei, e) in edges.iter().enumerate() {
        facet_edges[e.facets.0].push(ei);
        facet_edges[e.facets.1].push(ei);
        vertex_edges[e.vertices.0].push(ei);
        vertex_edges[e.vertices.1].push(ei);
    }

    Ok(Polytope3 {
        label: None,
        vertices,
        facets,
        edges,
        vertex_facets,
        facet_vertices,
        facet_edges,
        vertex_edges,
    })
}

/// Lattice points strictly between `a` and `b`, ordered from `a`.
fn edge_interior(a: &LatticeVector, b: &LatticeVector) -> Vec<LatticeVector> {
    let d = b.sub(a);
    let g = d.content();
    let step = d.divide_exact(&g);
    let mut out = Vec::new();
    let mut k = Int::from(1);
    while k < g {
        out.push(a.add(&step.scale(&k)));
        k += 1;
    }
    out
}
