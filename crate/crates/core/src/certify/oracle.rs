use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{self, Location, Point, Segment};
use crate::polygon::Polygon;
use crate::scalar::{self, Scalar};
use crate::visibility::{boundary_contacts, path_sees_point_unchecked, ray_crossings, visible_unchecked};

use super::PolyPath;

fn serialize_scalar<T: Scalar, S: serde::Serializer>(value: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&scalar::display(value))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct SamplingConfig<T> {
    #[serde(serialize_with = "serialize_scalar")]
    pub grid_pitch: T,
    #[serde(serialize_with = "serialize_scalar")]
    pub vertex_offset_eps: T,
    #[serde(serialize_with = "serialize_scalar")]
    pub boundary_spacing: T,
    pub seed: u64,
}

/// `value` rounded down to a multiple of 1/1000, or to a dyadic fraction
/// when that would be zero.
fn round_down<T: Scalar>(value: f64) -> T {
    let thousandths = (value * 1000.0).floor();
    if thousandths >= 1.0 {
        return T::from_int(thousandths as i64) / T::from_int(1000);
    }
    let mut den: i64 = 1024;
    while (value * den as f64).floor() < 1.0 && den < (1 << 60) {
        den <<= 1;
    }
    T::from_int((value * den as f64).floor().max(1.0) as i64) / T::from_int(den)
}

/// `value` rounded to a dyadic fraction keeping about ten significant bits.
fn dyadic<T: Scalar>(value: f64) -> T {
    if value == 0.0 || !value.is_finite() {
        return T::zero();
    }
    let mut den: i64 = 1024;
    while (value.abs() * den as f64) < 1024.0 && den < (1 << 60) {
        den <<= 1;
    }
    T::from_int((value * den as f64).round() as i64) / T::from_int(den)
}

impl<T: Scalar> SamplingConfig<T> {
    /// Pitch of one 64th of the bounding-box diagonal (rounded down to a
    /// thousandth), vertex offsets of a hundredth of the pitch, boundary
    /// spacing equal to the pitch.
    pub fn default_for(poly: &Polygon<T>, seed: u64) -> Self {
        let (lo, hi) = poly.bbox();
        let (x0, y0) = lo.to_f64();
        let (x1, y1) = hi.to_f64();
        let pitch: T = round_down((x1 - x0).hypot(y1 - y0) / 64.0);
        Self::with_pitch(pitch, seed)
    }

    pub fn with_pitch(grid_pitch: T, seed: u64) -> Self {
        SamplingConfig {
            vertex_offset_eps: grid_pitch.clone() / T::from_int(100),
            boundary_spacing: grid_pitch.clone(),
            grid_pitch,
            seed,
        }
    }

    pub fn check(&self) -> Result<()> {
        for (name, v) in [
            ("grid_pitch", &self.grid_pitch),
            ("vertex_offset_eps", &self.vertex_offset_eps),
            ("boundary_spacing", &self.boundary_spacing),
        ] {
            if !v.is_positive() {
                return Err(Error::InvalidConfig(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SampleKind {
    Interior,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Sample<T> {
    pub point: Point<T>,
    pub kind: SampleKind,
}

fn sample_cmp<T: Scalar>(a: &Sample<T>, b: &Sample<T>) -> Ordering {
    a.point.lex_cmp(&b.point).then(a.kind.cmp(&b.kind))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct CoverageReport<T> {
    pub samples_total: usize,
    pub uncovered: Vec<Sample<T>>,
    pub config: SamplingConfig<T>,
}

impl<T: Scalar> CoverageReport<T> {
    pub fn is_covered(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn count(&self, kind: SampleKind) -> usize {
        self.uncovered.iter().filter(|s| s.kind == kind).count()
    }
}

/// The sample set: a randomly offset interior grid, inward offsets along
/// every vertex bisector, evenly spaced boundary points, and boundary and
/// inward probes along both edges at every reflex vertex. Sorted and free of
/// repeated points.
pub fn oracle_samples<T: Scalar>(poly: &Polygon<T>, cfg: &SamplingConfig<T>) -> Result<Vec<Sample<T>>> {
    cfg.check()?;
    let mut samples = Vec::new();
    grid_samples(poly, cfg, &mut samples);
    bisector_samples(poly, cfg, &mut samples);
    boundary_samples(poly, cfg, &mut samples);
    reflex_probes(poly, cfg, &mut samples);
    samples.sort_by(sample_cmp);
    samples.dedup_by(|a, b| a.point == b.point);
    Ok(samples)
}

fn grid_samples<T: Scalar>(poly: &Polygon<T>, cfg: &SamplingConfig<T>, out: &mut Vec<Sample<T>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let sixty_fourth = cfg.grid_pitch.clone() / T::from_int(64);
    let ox = sixty_fourth.clone() * T::from_int(rng.gen_range(0..64));
    let oy = sixty_fourth * T::from_int(rng.gen_range(0..64));
    let (lo, hi) = poly.bbox();
    let mut x = lo.x.clone() + ox;
    while x <= hi.x {
        let mut y = lo.y.clone() + oy.clone();
        while y <= hi.y {
            let p = Point::new(x.clone(), y.clone());
            match geom::point_in_polygon(poly, &p) {
                Location::Inside => out.push(Sample { point: p, kind: SampleKind::Interior }),
                Location::Boundary => out.push(Sample { point: p, kind: SampleKind::Boundary }),
                Location::Outside => {}
            }
            y = y + cfg.grid_pitch.clone();
        }
        x = x + cfg.grid_pitch.clone();
    }
}

/// First point `from + eps * dir`, halving `eps`, that is strictly inside.
fn inward<T: Scalar>(poly: &Polygon<T>, from: &Point<T>, dir: &Point<T>, eps: &T) -> Option<Point<T>> {
    let mut eps = eps.clone();
    for _ in 0..40 {
        let p = from.add(&dir.scale(&eps));
        if geom::point_in_polygon(poly, &p) == Location::Inside {
            return Some(p);
        }
        eps = eps * T::half();
    }
    None
}

fn unit_f64(d: &Point<impl Scalar>) -> (f64, f64) {
    let (x, y) = d.to_f64();
    let len = x.hypot(y);
    (x / len, y / len)
}

fn bisector_samples<T: Scalar>(poly: &Polygon<T>, cfg: &SamplingConfig<T>, out: &mut Vec<Sample<T>>) {
    for i in 0..poly.len() {
        let v = poly.vertex(i);
        let a = unit_f64(&poly.vertex(poly.prev_index(i)).sub(v));
        let b = unit_f64(&poly.vertex(poly.next_index(i)).sub(v));
        let (mut dx, mut dy) = (a.0 + b.0, a.1 + b.1);
        let len = dx.hypot(dy);
        if len < 1e-12 {
            continue;
        }
        (dx, dy) = (dx / len, dy / len);
        if poly.is_reflex(i) {
            (dx, dy) = (-dx, -dy);
        }
        let round = |c: f64| T::from_int((c * 1024.0).round() as i64) / T::from_int(1024);
        let dir = Point::new(round(dx), round(dy));
        if dir.is_zero() {
            continue;
        }
        if let Some(p) = inward(poly, v, &dir, &cfg.vertex_offset_eps) {
            out.push(Sample { point: p, kind: SampleKind::Interior });
        }
    }
}

fn boundary_samples<T: Scalar>(poly: &Polygon<T>, cfg: &SamplingConfig<T>, out: &mut Vec<Sample<T>>) {
    let spacing = cfg.boundary_spacing.to_f64_lossy();
    for e in poly.edges() {
        let (ax, ay) = e.a.to_f64();
        let (bx, by) = e.b.to_f64();
        let m = (((bx - ax).hypot(by - ay) / spacing).ceil() as i64).max(1);
        for j in 0..m {
            let t = T::from_int(j) / T::from_int(m);
            out.push(Sample { point: e.at(&t), kind: SampleKind::Boundary });
        }
    }
}

fn reflex_probes<T: Scalar>(poly: &Polygon<T>, cfg: &SamplingConfig<T>, out: &mut Vec<Sample<T>>) {
    let quarters: Vec<T> = (1..4).map(|k| T::from_int(k) / T::from_int(4)).collect();
    for r in poly.reflex_vertices() {
        for e in [poly.edge(poly.prev_index(r)), poly.edge(r)] {
            let (ux, uy) = unit_f64(&e.direction());
            // interior lies to the right of a clockwise edge
            let normal = Point::new(dyadic::<T>(uy), dyadic::<T>(-ux));
            for t in &quarters {
                let p = e.at(t);
                if let Some(q) = inward(poly, &p, &normal, &cfg.vertex_offset_eps) {
                    out.push(Sample { point: q, kind: SampleKind::Interior });
                }
                out.push(Sample { point: p, kind: SampleKind::Boundary });
            }
        }
    }
}

/// Tests every sample for visibility from the path; the uncovered ones are
/// returned in lexicographic order.
pub fn coverage_oracle<T: Scalar>(
    poly: &Polygon<T>,
    path: &PolyPath<T>,
    cfg: &SamplingConfig<T>,
) -> Result<CoverageReport<T>> {
    let samples = oracle_samples(poly, cfg)?;
    let mut uncovered: Vec<Sample<T>> = samples
        .par_iter()
        .filter(|s| path_sees_point_unchecked(poly, path, &s.point).is_none())
        .cloned()
        .collect();
    uncovered.sort_by(sample_cmp);
    Ok(CoverageReport { samples_total: samples.len(), uncovered, config: cfg.clone() })
}

/// The boundary witness built from one unseen interior sample.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma1Witness<T> {
    pub x: Point<T>,
    /// First reflex vertex on the shortest path from `x` to the path.
    pub v: Point<T>,
    /// Where the ray from `v` through `x` leaves the polygon beyond `x`.
    pub x_prime: Point<T>,
    pub x_prime_uncovered: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma1Record<T> {
    pub boundary_uncovered: usize,
    pub interior_uncovered: usize,
    /// Covered boundary samples imply covered interior samples.
    pub implication_holds: bool,
    pub witnesses: Vec<Lemma1Witness<T>>,
    pub construction_failures: usize,
    pub passed: bool,
}

/// Runs the oracle and checks that unseen interior points come with unseen
/// boundary points, reconstructing one for each unseen interior sample.
pub fn lemma1_check<T: Scalar>(
    poly: &Polygon<T>,
    path: &PolyPath<T>,
    cfg: &SamplingConfig<T>,
) -> Result<Lemma1Record<T>> {
    let report = coverage_oracle(poly, path, cfg)?;
    Ok(lemma1_from_report(poly, path, &report))
}

/// Same as [`lemma1_check`] on an existing oracle report.
pub fn lemma1_from_report<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>, report: &CoverageReport<T>) -> Lemma1Record<T> {
    let boundary_uncovered = report.count(SampleKind::Boundary);
    let interior_uncovered = report.count(SampleKind::Interior);
    let implication_holds = boundary_uncovered > 0 || interior_uncovered == 0;
    let interior: Vec<&Sample<T>> = report.uncovered.iter().filter(|s| s.kind == SampleKind::Interior).collect();
    let mut witnesses = Vec::new();
    let mut construction_failures = 0;
    if !interior.is_empty() {
        let reflex = poly.reflex_vertices();
        let to_path = reflex_distances_to_path(poly, path, &reflex);
        for s in interior {
            match boundary_witness(poly, path, &reflex, &to_path, &s.point) {
                Some(w) => {
                    if !w.x_prime_uncovered {
                        construction_failures += 1;
                    }
                    witnesses.push(w);
                }
                None => construction_failures += 1,
            }
        }
    }
    let passed = implication_holds && construction_failures == 0;
    Lemma1Record { boundary_uncovered, interior_uncovered, implication_holds, witnesses, construction_failures, passed }
}

fn dist_f64<T: Scalar>(a: &Point<T>, b: &Point<T>) -> f64 {
    a.dist2(b).to_f64_lossy().sqrt()
}

/// Distance from `r` to the closed set of path points visible from `r`.
fn direct_distance<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>, r: &Point<T>) -> f64 {
    if path.is_point() {
        let p = &path.waypoints()[0];
        return if visible_unchecked(poly, r, p) { dist_f64(r, p) } else { f64::INFINITY };
    }
    let dirs: Vec<Point<T>> = poly.vertices().iter().filter(|v| *v != r).map(|v| v.sub(r)).collect();
    let mut best = f64::INFINITY;
    for s in path.segments() {
        let mut ts = boundary_contacts(poly, &s);
        ts.extend(ray_crossings(&s, r, &dirs));
        ts.retain(|t| !t.is_negative() && *t <= T::one());
        ts.sort_by(|a, b| a.total_cmp(b));
        ts.dedup();
        for t in &ts {
            let x = s.at(t);
            if visible_unchecked(poly, r, &x) {
                best = best.min(dist_f64(r, &x));
            }
        }
        for w in ts.windows(2) {
            let mid = s.at(&((w[0].clone() + w[1].clone()) * T::half()));
            if visible_unchecked(poly, r, &mid) {
                best = best.min(distance_to_piece(r, &s, &w[0], &w[1]));
            }
        }
    }
    best
}

fn distance_to_piece<T: Scalar>(r: &Point<T>, s: &Segment<T>, t0: &T, t1: &T) -> f64 {
    let (ax, ay) = s.a.to_f64();
    let (bx, by) = s.b.to_f64();
    let (px, py) = r.to_f64();
    let (dx, dy) = (bx - ax, by - ay);
    let len2 = dx * dx + dy * dy;
    let foot = if len2 == 0.0 { 0.0 } else { ((px - ax) * dx + (py - ay) * dy) / len2 };
    let t = foot.clamp(t0.to_f64_lossy(), t1.to_f64_lossy());
    (ax + t * dx - px).hypot(ay + t * dy - py)
}

/// Geodesic distance from each reflex vertex to the path.
fn reflex_distances_to_path<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>, reflex: &[usize]) -> Vec<f64> {
    let k = reflex.len();
    let mut dist: Vec<f64> = reflex.iter().map(|&r| direct_distance(poly, path, poly.vertex(r))).collect();
    let mut done = vec![false; k];
    for _ in 0..k {
        let Some(c) = (0..k).filter(|&i| !done[i] && dist[i].is_finite()).min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
        else {
            break;
        };
        done[c] = true;
        for j in 0..k {
            if done[j] {
                continue;
            }
            let (a, b) = (poly.vertex(reflex[c]), poly.vertex(reflex[j]));
            let through = dist[c] + dist_f64(a, b);
            if through < dist[j] && visible_unchecked(poly, a, b) {
                dist[j] = through;
            }
        }
    }
    dist
}

fn boundary_witness<T: Scalar>(
    poly: &Polygon<T>,
    path: &PolyPath<T>,
    reflex: &[usize],
    to_path: &[f64],
    x: &Point<T>,
) -> Option<Lemma1Witness<T>> {
    let mut candidates: Vec<(f64, usize)> = reflex
        .iter()
        .zip(to_path)
        .filter(|(_, d)| d.is_finite())
        .filter(|(&r, _)| visible_unchecked(poly, x, poly.vertex(r)))
        .map(|(&r, d)| (dist_f64(x, poly.vertex(r)) + d, r))
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));
    let best = candidates.first()?.0;
    let mut fallback = None;
    for &(cost, r) in &candidates {
        if cost > best + 1e-9 * best.max(1.0) {
            break;
        }
        let v = poly.vertex(r);
        let Ok(hit) = geom::ray_shoot(poly, x, &x.sub(v)) else {
            continue;
        };
        let x_prime_uncovered = path_sees_point_unchecked(poly, path, &hit.point).is_none();
        let w = Lemma1Witness { x: x.clone(), v: v.clone(), x_prime: hit.point, x_prime_uncovered };
        if x_prime_uncovered {
            return Some(w);
        }
        fallback.get_or_insert(w);
    }
    fallback
}
