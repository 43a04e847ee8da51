//! Properties of the exact predicates, polygons and visibility queries on
//! generated inputs.

mod common;

use common::{any_polygon, points_in};
use num_traits::Signed;
use proptest::prelude::*;
use vispath::cuts::classified_cuts;
use vispath::geom::{orient, point_in_polygon, ray_shoot, segment_intersection, Intersection, Location, Orientation, Point, Segment};
use vispath::polygon::Polygon;
use vispath::visibility::{visibility_polygon, visible};
use vispath::{PointQ, PolygonQ, Rational, Scalar};

fn pt(x: i64, y: i64) -> PointQ {
    Point::from_ints(x, y)
}

fn unordered(i: Intersection<Rational>) -> Intersection<Rational> {
    match i {
        Intersection::Overlap(s) if s.b.lex_cmp(&s.a).is_lt() => Intersection::Overlap(Segment::new(s.b, s.a)),
        other => other,
    }
}

fn scaled(p: &PointQ, k: &Rational) -> PointQ {
    p.scale(k)
}

fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort();
    pts.dedup();
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn orientation_is_antisymmetric(c in proptest::array::uniform6(-50i64..50)) {
        let (p, q, r) = (pt(c[0], c[1]), pt(c[2], c[3]), pt(c[4], c[5]));
        prop_assert_eq!(orient(&p, &q, &r), orient(&p, &r, &q).reverse());
    }

    #[test]
    fn segment_intersection_is_symmetric(c in proptest::array::uniform8(-4i64..5)) {
        let s1 = Segment::new(pt(c[0], c[1]), pt(c[2], c[3]));
        let s2 = Segment::new(pt(c[4], c[5]), pt(c[6], c[7]));
        prop_assert_eq!(unordered(segment_intersection(&s1, &s2)), unordered(segment_intersection(&s2, &s1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ray_shoot_stops_at_the_first_boundary_point(seed in 0u64..10_000, dx in -9i64..10, dy in -9i64..10) {
        prop_assume!(dx != 0 || dy != 0);
        let poly = any_polygon(seed);
        let direction = pt(dx, dy);
        for origin in points_in(&poly, seed, 8) {
            if point_in_polygon(&poly, &origin) != Location::Inside {
                continue;
            }
            let hit = ray_shoot(&poly, &origin, &direction).expect("interior ray hits the boundary");
            prop_assert_eq!(point_in_polygon(&poly, &hit.point), Location::Boundary);
            prop_assert!(hit.t.is_positive());
            let travelled = Segment::new(origin.clone(), hit.point.clone());
            for edge in poly.edges() {
                match segment_intersection(&travelled, &edge) {
                    Intersection::None => {}
                    Intersection::Point(p) => prop_assert_eq!(&p, &hit.point),
                    Intersection::Overlap(_) => prop_assert!(false, "ray runs along an edge before its hit"),
                }
            }
        }
    }

    #[test]
    fn classifications_survive_scaling(seed in 0u64..10_000, power in 1u32..4) {
        let poly = any_polygon(seed);
        let k = Rational::from_integer(10i64.pow(power));
        let big: PolygonQ = Polygon::validate(poly.vertices().iter().map(|p| scaled(p, &k)).collect()).unwrap();
        for p in points_in(&poly, seed ^ 0xabc, 16) {
            prop_assert_eq!(point_in_polygon(&poly, &p), point_in_polygon(&big, &scaled(&p, &k)));
            let (a, b) = (poly.vertex(0), poly.vertex(poly.len() / 2));
            prop_assert_eq!(orient(a, b, &p), orient(&scaled(a, &k), &scaled(b, &k), &scaled(&p, &k)));
        }
        let small: Vec<_> = classified_cuts(&poly).iter().map(|c| (c.v.clone(), c.is_essential())).collect();
        let large: Vec<_> = classified_cuts(&big).iter().map(|c| (c.v.scale(&(Rational::from_integer(1) / k.clone())), c.is_essential())).collect();
        prop_assert_eq!(small, large);
    }

    #[test]
    fn kernel_points_see_every_vertex(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let kernel = poly.kernel();
        let mut probes = kernel.region.clone();
        probes.extend(kernel.representative());
        for k in &probes {
            prop_assert!(poly.in_kernel(k));
            for v in poly.vertices() {
                prop_assert!(visible(&poly, k, v).unwrap());
            }
        }
    }

    #[test]
    fn total_turning_is_clockwise(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let n = poly.len();
        let turning: f64 = (0..n)
            .map(|i| {
                let (a, b) = (poly.edge(i).direction().to_f64(), poly.edge((i + 1) % n).direction().to_f64());
                (a.0 * b.1 - a.1 * b.0).atan2(a.0 * b.0 + a.1 * b.1)
            })
            .sum();
        prop_assert!((turning + 2.0 * std::f64::consts::PI).abs() < 1e-9, "turning {turning}");
        for i in 0..n {
            let o = orient(poly.vertex(poly.prev_index(i)), poly.vertex(i), poly.vertex(poly.next_index(i)));
            prop_assert_eq!(poly.is_reflex(i), o == Orientation::CounterClockwise);
        }
    }

    #[test]
    fn convex_polygons_have_no_reflex_vertices(c in proptest::collection::vec((0i64..40, 0i64..40), 3..30)) {
        let hull = convex_hull(c);
        prop_assume!(hull.len() >= 3);
        let poly: PolygonQ = Polygon::validate(hull.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap();
        prop_assert!(poly.reflex_vertices().is_empty());
        prop_assert!(!poly.kernel().is_empty());
    }

    #[test]
    fn boundary_coordinates_are_a_bijection(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let mut previous = -1.0;
        for edge in 0..poly.len() {
            for k in 0..7 {
                let frac = Rational::new(k, 7);
                let p = poly.edge(edge).at(&frac);
                let coord = poly.boundary_coord(&p).unwrap();
                prop_assert_eq!(coord.edge, edge);
                prop_assert_eq!(&coord.frac, &frac);
                prop_assert_eq!(coord.point(&poly), p);
                let arc = coord.arc_length(&poly);
                prop_assert!(arc > previous);
                previous = arc;
            }
        }
        prop_assert!(previous < poly.perimeter_f64());
    }

    #[test]
    fn visibility_is_symmetric_and_matches_the_visibility_polygon(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let pts = points_in(&poly, seed, 12);
        for p in &pts {
            let region = visibility_polygon(&poly, p).unwrap();
            prop_assert!(region.area() <= poly.area());
            prop_assert_eq!(region.area() == poly.area(), poly.in_kernel(p));
            for q in &pts {
                let seen = visible(&poly, p, q).unwrap();
                prop_assert_eq!(seen, visible(&poly, q, p).unwrap());
                prop_assert_eq!(region.contains(q), seen, "p={:?} q={:?}", p.display(), q.display());
            }
        }
    }
}

#[test]
fn float_instantiation_agrees_on_integer_inputs() {
    let poly = any_polygon(5);
    let floats: Polygon<f64> = Polygon::validate(poly.vertices().iter().map(|p| Point::new(p.x.to_f64_lossy(), p.y.to_f64_lossy())).collect()).unwrap();
    assert_eq!(poly.reflex_vertices(), floats.reflex_vertices());
    assert_eq!(poly.area().to_f64_lossy(), floats.area());
}
