use super::*;
use crate::arith::int;

pub(crate) fn lv(x: i64, y: i64, z: i64) -> LatticeVector {
    LatticeVector::from_i64(x, y, z)
}

pub(crate) fn hull_of(coords: &[(i64, i64, i64)]) -> Polytope3 {
    let pts: Vec<LatticeVector> = coords.iter().map(|&(x, y, z)| lv(x, y, z)).collect();
    convex_hull(&pts).unwrap()
}

pub(crate) fn cube() -> Polytope3 {
    hull_of(&[
        (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
        (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1),
    ])
}

pub(crate) fn octahedron() -> Polytope3 {
    hull_of(&[(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
}

// Two presentations of the 6-vertex reflexive pair from the Q17/Z20 case:
// `small` has the printed matrix witness onto the dual of `big`.
fn small_hexa() -> Polytope3 {
    hull_of(&[(-1, -1, 2), (0, -1, 0), (1, -1, 0), (1, -1, 1), (1, 2, -3), (0, 0, -1)])
}

fn big_hexa() -> Polytope3 {
    hull_of(&[(-1, 2, -1), (-1, -1, 1), (-1, -1, -1), (6, -1, -1), (2, 1, -1), (0, -1, 1)])
}

#[test]
fn cube_face_counts() {
    let c = cube();
    assert_eq!(c.vertices().len(), 8);
    assert_eq!(c.facets().len(), 6);
    assert_eq!(c.edges().len(), 12);
}

#[test]
fn hull_drops_redundant_points() {
    let mut pts: Vec<LatticeVector> =
        small_hexa().vertices().to_vec();
    pts.push(lv(0, 0, 0));
    let p = convex_hull(&pts).unwrap();
    assert_eq!(p.vertices().len(), 6);
    assert_eq!(p.vertices(), small_hexa().vertices());
}

#[test]
fn hull_rejects_degenerate_input() {
    let planar: Vec<LatticeVector> = (0..5).map(|i| lv(i, i * i, 0)).collect();
    assert!(matches!(convex_hull(&planar), Err(PolytopeError::DegenerateInput(_))));
    assert!(matches!(
        convex_hull(&[lv(0, 0, 0), lv(1, 0, 0), lv(0, 1, 0)]),
        Err(PolytopeError::DegenerateInput(_))
    ));
}

#[test]
fn six_vertex_inputs_stay_extreme() {
    assert_eq!(small_hexa().vertices().len(), 6);
    assert_eq!(big_hexa().vertices().len(), 6);
}

#[test]
fn cube_octahedron_polarity() {
    let c = cube();
    let dual = polar_dual(&c).unwrap();
    assert_eq!(dual.vertices(), octahedron().vertices());
    assert!(is_reflexive(&c).unwrap());
    assert!(is_reflexive(&octahedron()).unwrap());
    // involution
    let back = polar_dual(&dual).unwrap();
    assert_eq!(back.vertices(), c.vertices());
}

#[test]
fn doubled_cube_dual_not_integral() {
    let p = hull_of(&[
        (2, 2, 2), (2, 2, -2), (2, -2, 2), (2, -2, -2),
        (-2, 2, 2), (-2, 2, -2), (-2, -2, 2), (-2, -2, -2),
    ]);
    assert!(!is_reflexive(&p).unwrap());
    assert!(matches!(polar_dual(&p), Err(PolytopeError::NonIntegralDual(_))));
}

#[test]
fn origin_on_boundary_is_an_error() {
    let p = hull_of(&[(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]);
    assert!(matches!(polar_dual(&p), Err(PolytopeError::OriginNotInterior)));
    assert!(matches!(is_reflexive(&p), Err(PolytopeError::OriginNotInterior)));
}

#[test]
fn printed_dual_of_big_hexahedron() {
    let dual = polar_dual(&big_hexa()).unwrap();
    let mut want = vec![
        lv(-1, -3, -4), lv(0, -2, -3), lv(0, 1, 0),
        lv(1, 0, 0), lv(0, 0, 1), lv(-1, -2, -3),
    ];
    want.sort();
    assert_eq!(dual.vertices(), &want[..]);
}

#[test]
fn printed_transformation_maps_small_onto_dual() {
    let t = IntMat::from_i64(&[&[1, 1, 1], &[1, 3, 4], &[1, 2, 3]]);
    let dual = polar_dual(&big_hexa()).unwrap();
    assert!(verifies_bijection(&t, &small_hexa(), &dual));

    let found = unimodular_equivalent(&small_hexa(), &dual).unwrap();
    assert!(verifies_bijection(&found, &small_hexa(), &dual));
}

#[test]
fn unimodular_equivalence_edge_cases() {
    let c = cube();
    let t = unimodular_equivalent(&c, &c).unwrap();
    assert!(verifies_bijection(&t, &c, &c));
    assert!(unimodular_equivalent(&c, &octahedron()).is_none());
}

#[test]
fn cube_lattice_point_classes() {
    let pts = lattice_points(&cube());
    assert_eq!(pts.vertices.len(), 8);
    assert_eq!(pts.edge_interior.len(), 12);
    assert_eq!(pts.facet_interior.len(), 6);
    assert_eq!(pts.interior.len(), 1);
    assert_eq!(pts.total(), 27);
}

#[test]
fn l_star_of_faces() {
    let c = cube();
    // every cube edge has one interior point
    for i in 0..c.edges().len() {
        assert_eq!(l_star(&c, FaceRef::Edge(i)), 1);
    }
    for i in 0..c.facets().len() {
        assert_eq!(l_star(&c, FaceRef::Facet(i)), 1);
    }
    assert_eq!(l_star(&c, FaceRef::Vertex(0)), 0);

    // octahedron faces are empty triangles
    let o = octahedron();
    for i in 0..o.edges().len() {
        assert_eq!(l_star(&o, FaceRef::Edge(i)), 0);
    }
    for i in 0..o.facets().len() {
        assert_eq!(l_star(&o, FaceRef::Facet(i)), 0);
    }
}

#[test]
fn dual_faces_pair_at_minus_one() {
    let c = cube();
    let d = polar_dual(&c).unwrap();
    for (vi, v) in c.vertices().iter().enumerate() {
        let FaceRef::Facet(fi) = dual_face(&c, &d, FaceRef::Vertex(vi)).unwrap() else {
            panic!("vertex must dualize to a facet");
        };
        for &wi in d.facet_vertices(fi) {
            assert_eq!(v.dot(&d.vertices()[wi]), int(-1));
        }
    }
    // vertex -> facet -> vertex roundtrip
    for vi in 0..c.vertices().len() {
        let f = dual_face(&c, &d, FaceRef::Vertex(vi)).unwrap();
        let back = dual_face(&d, &polar_dual(&d).unwrap(), f).unwrap();
        assert_eq!(back, FaceRef::Vertex(vi));
    }
    // edges dualize to edges, facets to vertices
    for ei in 0..c.edges().len() {
        assert!(matches!(dual_face(&c, &d, FaceRef::Edge(ei)).unwrap(), FaceRef::Edge(_)));
    }
    for fi in 0..c.facets().len() {
        assert!(matches!(dual_face(&c, &d, FaceRef::Facet(fi)).unwrap(), FaceRef::Vertex(_)));
    }
}

#[test]
fn containment() {
    let c = cube();
    let p = small_hexa();
    assert!(contains(&c, &c));
    assert!(contains(&p, &p));
    let big = hull_of(&[
        (2, 2, 2), (2, 2, -2), (2, -2, 2), (2, -2, -2),
        (-2, 2, 2), (-2, 2, -2), (-2, -2, 2), (-2, -2, -2),
    ]);
    assert!(contains(&big, &c));
    assert!(!contains(&c, &big));
}

#[test]
fn edge_interiors_are_ordered() {
    let p = hull_of(&[
        (3, 1, 1), (3, 1, -1), (3, -1, 1), (3, -1, -1),
        (-3, 1, 1), (-3, 1, -1), (-3, -1, 1), (-3, -1, -1),
    ]);
    let long_edge = p
        .edges()
        .iter()
        .find(|e| e.interior.len() == 5)
        .expect("a long edge with five interior points");
    let a = &p.vertices()[long_edge.vertices.0];
    for w in long_edge.interior.windows(2) {
        assert!(w[0].sub(a).content() < w[1].sub(a).content());
    }
}
