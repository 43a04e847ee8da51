//! Seeded generators for random simple polygons and for paths that miss a
//! chosen essential cut.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::{self, PolyPath};
use crate::cuts::{essential_cuts, Cut};
use crate::error::{Error, Result};
use crate::geom::{self, Intersection, Point, Segment};
use crate::polygon::Polygon;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
    /// Coordinates are integers in `[0, coordinate_range]`.
    pub coordinate_range: i64,
    pub require_non_star: bool,
    pub max_retries: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { n: 12, seed: 0, coordinate_range: 64, require_non_star: true, max_retries: 1000 }
    }
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GenConfig { n, seed, ..Self::default() }
    }

    fn check(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidConfig(format!("n must be at least 3, got {}", self.n)));
        }
        if self.max_retries == 0 {
            return Err(Error::InvalidConfig("max_retries must be at least 1".into()));
        }
        let side = self.coordinate_range + 1;
        if self.coordinate_range < 1 || (side as u128) * (side as u128) < 2 * self.n as u128 {
            return Err(Error::InvalidConfig(format!(
                "coordinate range {} is too small for {} vertices",
                self.coordinate_range, self.n
            )));
        }
        Ok(())
    }
}

/// Random simple polygon on integer coordinates, clockwise.
///
/// Each attempt draws distinct points, orders them randomly, and applies
/// 2-opt moves until no two edges meet. Attempts that stall, produce
/// collinear consecutive vertices, or (when requested) a star-shaped polygon
/// are discarded. Every polygon with at most five vertices is star-shaped, so
/// such requests fail immediately.
pub fn gen_polygon<T: Scalar>(cfg: &GenConfig) -> Result<Polygon<T>> {
    cfg.check()?;
    if cfg.require_non_star && cfg.n <= 5 {
        return Err(Error::GenerationExhausted(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.max_retries {
        let Some(points) = random_simple_tour(cfg, &mut rng) else {
            continue;
        };
        let points = points.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect();
        let Ok(poly) = Polygon::validate(points) else {
            continue;
        };
        if cfg.require_non_star && !poly.kernel().is_empty() {
            continue;
        }
        return Ok(poly);
    }
    Err(Error::GenerationExhausted(cfg.max_retries))
}

fn random_simple_tour(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Option<Vec<(i64, i64)>> {
    let n = cfg.n;
    let mut points: Vec<(i64, i64)> = Vec::with_capacity(n);
    while points.len() < n {
        let p = (rng.gen_range(0..=cfg.coordinate_range), rng.gen_range(0..=cfg.coordinate_range));
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points.shuffle(rng);
    let seg = |pts: &[(i64, i64)], i: usize| {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        Segment::new(Point::<Rational>::from_ints(a.0, a.1), Point::<Rational>::from_ints(b.0, b.1))
    };
    for _ in 0..(10 * n * n) {
        let mut crossing = None;
        'scan: for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if geom::segment_intersection(&seg(&points, i), &seg(&points, j)) != Intersection::None {
                    crossing = Some((i, j));
                    break 'scan;
                }
            }
        }
        match crossing {
            None => return Some(points),
            Some((i, j)) => points[i + 1..=j].reverse(),
        }
    }
    None
}

/// A path meeting every essential cut except `cut_to_miss`, built as a
/// certified route over the remaining cuts and retried with jittered cut
/// points and shuffled visiting orders until it avoids `cut_to_miss`.
pub fn gen_negative_path<T: Scalar>(poly: &Polygon<T>, cut_to_miss: &Cut<T>, seed: u64) -> Result<PolyPath<T>> {
    let essentials = essential_cuts(poly);
    let others: Vec<&Cut<T>> = essentials
        .iter()
        .filter(|c| !(c.v == cut_to_miss.v && c.w == cut_to_miss.w))
        .collect();
    let miss = cut_to_miss.segment();
    let avoids = |path: &PolyPath<T>| path.first_hit(&miss).is_none();
    if others.is_empty() {
        return point_outside_pocket(poly, cut_to_miss).filter(avoids).ok_or(Error::CannotAvoid);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 48;
    for attempt in 0..ATTEMPTS {
        let mut order: Vec<&Cut<T>> = others.clone();
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        let stops: Vec<Point<T>> = order
            .iter()
            .map(|c| {
                if attempt == 0 {
                    return c.midpoint();
                }
                let k: i64 = rng.gen_range(1..64);
                c.segment().at(&(T::from_int(k) / T::from_int(64)))
            })
            .collect();
        let Ok(path) = certify::route_through(poly, &stops) else {
            continue;
        };
        if avoids(&path) && order.iter().all(|c| path.first_hit(&c.segment()).is_some()) {
            return Ok(path);
        }
    }
    Err(Error::CannotAvoid)
}

/// A single-point path strictly inside the polygon and off the closed pocket
/// of `cut`: a point just across the cut from its midpoint.
fn point_outside_pocket<T: Scalar>(poly: &Polygon<T>, cut: &Cut<T>) -> Option<PolyPath<T>> {
    let directed = cut.directed();
    let left = directed.direction().right_perp().neg();
    let mid = cut.midpoint();
    let mut step = T::one();
    for _ in 0..40 {
        let q = mid.add(&left.scale(&step));
        if geom::point_in_polygon(poly, &q) == geom::Location::Inside
            && cut.pocket.locate(&q) == geom::Location::Outside
            && crate::visibility::visible_unchecked(poly, &mid, &q)
        {
            return Some(PolyPath::point(q));
        }
        step = step * T::half();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_polygons_validate_and_are_deterministic() {
        for seed in 0..20 {
            let cfg = GenConfig { require_non_star: false, ..GenConfig::new(4 + (seed as usize % 9), seed) };
            let a: Polygon<Rational> = gen_polygon(&cfg).unwrap();
            let b: Polygon<Rational> = gen_polygon(&cfg).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.len(), cfg.n);
            assert!(Polygon::validate(a.vertices().to_vec()).is_ok());
        }
    }

    #[test]
    fn non_star_requests() {
        let cfg = GenConfig::new(3, 1);
        assert_eq!(gen_polygon::<Rational>(&cfg), Err(Error::GenerationExhausted(0)));
        let poly: Polygon<Rational> = gen_polygon(&GenConfig::new(12, 7)).unwrap();
        assert!(poly.kernel().is_empty());
        assert_eq!(poly, gen_polygon(&GenConfig::new(12, 7)).unwrap());
        let quad: Polygon<Rational> =
            gen_polygon(&GenConfig { require_non_star: false, ..GenConfig::new(4, 3) }).unwrap();
        assert_eq!(quad.len(), 4);
    }

    #[test]
    fn invalid_configs() {
        assert!(matches!(gen_polygon::<Rational>(&GenConfig::new(2, 0)), Err(Error::InvalidConfig(_))));
        let cfg = GenConfig { max_retries: 0, ..GenConfig::new(8, 0) };
        assert!(matches!(gen_polygon::<Rational>(&cfg), Err(Error::InvalidConfig(_))));
        let cfg = GenConfig { coordinate_range: 2, ..GenConfig::new(8, 0) };
        assert!(matches!(gen_polygon::<Rational>(&cfg), Err(Error::InvalidConfig(_))));
    }
}
