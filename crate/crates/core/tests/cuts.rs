//! Properties of generated cuts, pockets and the essential-cut filter.

mod common;

use common::{any_polygon, non_star_polygon};
use proptest::prelude::*;
use vispath::cuts::{classified_cuts, pocket_contains, Pocket};
use vispath::funnel::pocket_claims;
use vispath::geom::{locate_in_ring, orient, point_in_polygon, segment_intersection, Intersection, Location, Orientation, Point};
use vispath::polygon::bbox;
use vispath::{PointQ, Rational};

/// Vertices, edge midpoints and a 20 by 20 grid of points of a closed ring.
fn ring_samples(ring: &[PointQ]) -> Vec<PointQ> {
    let mut out: Vec<PointQ> = ring.to_vec();
    for i in 0..ring.len() {
        out.push(Point::midpoint(&ring[i], &ring[(i + 1) % ring.len()]));
    }
    let (lo, hi) = bbox(ring);
    for i in 0..20 {
        for j in 0..20 {
            let fx = Rational::new(2 * i + 1, 40);
            let fy = Rational::new(2 * j + 1, 40);
            let p = Point::new(lo.x.clone() + (hi.x.clone() - lo.x.clone()) * fx, lo.y.clone() + (hi.y.clone() - lo.y.clone()) * fy);
            if locate_in_ring(ring, &p) != Location::Outside {
                out.push(p);
            }
        }
    }
    out
}

fn strictly_contains(a: &Pocket<Rational>, b: &Pocket<Rational>) -> bool {
    pocket_contains(a, b) && !a.same_interval(b)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cuts_are_chords_of_the_polygon(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        for cut in classified_cuts(&poly) {
            prop_assert_ne!(point_in_polygon(&poly, &cut.midpoint()), Location::Outside);
            for edge in poly.edges() {
                match segment_intersection(&cut.segment(), &edge) {
                    Intersection::None => {}
                    Intersection::Point(p) => prop_assert!(p == cut.v || p == cut.w, "cut touches the boundary at {}", p.display()),
                    Intersection::Overlap(s) => prop_assert!(s.is_degenerate() && (s.a == cut.v || s.a == cut.w)),
                }
            }
            prop_assert_eq!(orient(&cut.u, &cut.v, &cut.w), Orientation::Collinear);
            prop_assert!(cut.v.sub(&cut.u).dot(&cut.w.sub(&cut.v)) > Rational::from_integer(0));
        }
    }

    #[test]
    fn pocket_containment_matches_sampled_regions(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let cuts = classified_cuts(&poly);
        for a in &cuts {
            for b in &cuts {
                if !strictly_contains(&a.pocket, &b.pocket) {
                    continue;
                }
                let inner = ring_samples(&b.pocket.region);
                for p in inner.iter().take(200) {
                    prop_assert_ne!(a.pocket.locate(p), Location::Outside);
                }
                let outer = ring_samples(&a.pocket.region);
                prop_assert!(outer.iter().any(|p| b.pocket.locate(p) == Location::Outside));
            }
        }
    }

    #[test]
    fn essential_pockets_are_minimal(seed in 0u64..10_000) {
        let poly = any_polygon(seed);
        let cuts = classified_cuts(&poly);
        for e in cuts.iter().filter(|c| c.is_essential()) {
            for c in &cuts {
                prop_assert!(!strictly_contains(&e.pocket, &c.pocket));
            }
        }
        for r in cuts.iter().filter(|c| !c.is_essential()) {
            prop_assert!(cuts.iter().any(|c| c.is_essential() && strictly_contains(&r.pocket, &c.pocket)));
        }
    }

    #[test]
    fn essential_pockets_satisfy_the_structural_claims(seed in 0u64..10_000) {
        let poly = non_star_polygon(seed);
        for cut in classified_cuts(&poly).iter().filter(|c| c.is_essential()) {
            let claims = pocket_claims(&poly, cut);
            prop_assert!(claims.holds(), "{:?}", claims);
        }
    }
}
