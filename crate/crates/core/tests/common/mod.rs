//! Shared helpers for the integration tests: generated polygons and
//! seeded points inside them.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vispath::gen::{gen_polygon, GenConfig};
use vispath::geom::{point_in_polygon, Location, Point};
use vispath::{PointQ, PolygonQ, Rational};

/// Generated polygon with 8 to 14 vertices, star-shaped or not.
pub fn any_polygon(seed: u64) -> PolygonQ {
    let cfg = GenConfig { require_non_star: false, ..GenConfig::new(8 + (seed % 7) as usize, seed) };
    gen_polygon(&cfg).expect("generator succeeds")
}

/// Generated polygon with an empty kernel.
pub fn non_star_polygon(seed: u64) -> PolygonQ {
    gen_polygon(&GenConfig::new(8 + (seed % 7) as usize, seed)).expect("generator succeeds")
}

/// Points of the closed polygon on a grid of quarter units, so that
/// vertices, edges and alignments with vertices all occur.
pub fn points_in(poly: &PolygonQ, seed: u64, count: usize) -> Vec<PointQ> {
    let (lo, hi) = poly.bbox();
    let (x0, y0) = lo.to_f64();
    let (x1, y1) = hi.to_f64();
    let (x0, y0, x1, y1) = ((x0 * 4.0) as i64, (y0 * 4.0) as i64, (x1 * 4.0) as i64, (y1 * 4.0) as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point::new(Rational::new(rng.gen_range(x0..=x1), 4), Rational::new(rng.gen_range(y0..=y1), 4));
        if point_in_polygon(poly, &p) != Location::Outside {
            out.push(p);
        }
    }
    out
}

pub fn q(x: &str, y: &str) -> PointQ {
    Point::parse(x, y).expect("decimal coordinates")
}
