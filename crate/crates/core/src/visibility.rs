//! Point-to-point visibility, visibility polygons and path-sees-point queries.
//!
//! Visibility uses closed-set semantics: a segment that touches the boundary
//! at a vertex or runs along an edge still counts as visible, as long as it
//! never leaves the closed polygon.

use std::cmp::Ordering;

use crate::certify::PolyPath;
use crate::error::{Error, Result};
use crate::geom::{self, locate_in_ring, Intersection, Location, Point, Segment};
use crate::polygon::{signed_area2, Polygon};
use crate::scalar::Scalar;

fn ensure_in<T: Scalar>(poly: &Polygon<T>, p: &Point<T>) -> Result<()> {
    if geom::point_in_polygon(poly, p) == Location::Outside {
        Err(Error::PointOutside(p.display()))
    } else {
        Ok(())
    }
}

/// Whether segment `pq` lies in the closed polygon.
pub fn visible<T: Scalar>(poly: &Polygon<T>, p: &Point<T>, q: &Point<T>) -> Result<bool> {
    ensure_in(poly, p)?;
    ensure_in(poly, q)?;
    Ok(visible_unchecked(poly, p, q))
}

/// [`visible`] for points already known to be in the closed polygon.
pub fn visible_unchecked<T: Scalar>(poly: &Polygon<T>, p: &Point<T>, q: &Point<T>) -> bool {
    if p == q {
        return true;
    }
    let s = Segment::new(p.clone(), q.clone());
    let ring = poly.vertices();
    let n = ring.len();
    let mut contacts: Vec<T> = Vec::new();
    for i in 0..n {
        let e = Segment::new(ring[i].clone(), ring[(i + 1) % n].clone());
        match geom::segment_intersection(&s, &e) {
            Intersection::None => {}
            Intersection::Point(x) => {
                if x != *p && x != *q && x != e.a && x != e.b {
                    return false;
                }
                contacts.push(s.param_of(&x));
            }
            Intersection::Overlap(o) => {
                contacts.push(s.param_of(&o.a));
                contacts.push(s.param_of(&o.b));
            }
        }
    }
    if contacts.is_empty() {
        return true;
    }
    contacts.push(T::zero());
    contacts.push(T::one());
    contacts.sort_by(|a, b| a.total_cmp(b));
    contacts.dedup();
    contacts.windows(2).all(|w| {
        let mid = (w[0].clone() + w[1].clone()) * T::half();
        locate_in_ring(ring, &s.at(&mid)) != Location::Outside
    })
}

/// The region seen from a point, as a clockwise ring.
#[derive(Clone, Debug, PartialEq)]
pub struct VisPolygon<T> {
    pub origin: Point<T>,
    /// Closure of the two-dimensional part of the visible set. One-dimensional
    /// slivers seen through exactly aligned vertices are not represented.
    pub region: Vec<Point<T>>,
}

impl<T: Scalar> VisPolygon<T> {
    pub fn contains(&self, q: &Point<T>) -> bool {
        if self.region.len() < 3 {
            return self.region.iter().any(|r| r == q);
        }
        locate_in_ring(&self.region, q) != Location::Outside
    }

    pub fn area(&self) -> T {
        signed_area2(&self.region).abs() * T::half()
    }

    /// Smallest parameter on `s` at which the segment enters the region.
    fn first_entry(&self, s: &Segment<T>) -> Option<T> {
        if self.contains(&s.a) {
            return Some(T::zero());
        }
        if s.is_degenerate() {
            return None;
        }
        let m = self.region.len();
        let mut best: Option<T> = None;
        for i in 0..m {
            let e = Segment::new(self.region[i].clone(), self.region[(i + 1) % m].clone());
            let t = match geom::segment_intersection(s, &e) {
                Intersection::None => continue,
                Intersection::Point(x) => s.param_of(&x),
                Intersection::Overlap(o) => {
                    let (ta, tb) = (s.param_of(&o.a), s.param_of(&o.b));
                    if ta <= tb {
                        ta
                    } else {
                        tb
                    }
                }
            };
            if best.as_ref().map_or(true, |b| t < *b) {
                best = Some(t);
            }
        }
        best
    }
}

fn half_plane<T: Scalar>(d: &Point<T>) -> u8 {
    if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order of nonzero directions starting at +x.
fn angle_cmp<T: Scalar>(a: &Point<T>, b: &Point<T>) -> Ordering {
    half_plane(a).cmp(&half_plane(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Nearest edge crossed by the open ray `p + t d`, ignoring edges parallel to it.
fn first_hit<T: Scalar>(ring: &[Point<T>], p: &Point<T>, d: &Point<T>) -> Option<(T, usize)> {
    let n = ring.len();
    let mut best: Option<(T, usize)> = None;
    for i in 0..n {
        let a = &ring[i];
        let e = ring[(i + 1) % n].sub(a);
        let denom = d.cross(&e);
        if denom.is_zero() {
            continue;
        }
        let ap = a.sub(p);
        let t = ap.cross(&e) / denom.clone();
        if !t.is_positive() || best.as_ref().is_some_and(|(bt, _)| t >= *bt) {
            continue;
        }
        let s = ap.cross(d) / denom;
        if !s.is_negative() && s <= T::one() {
            best = Some((t, i));
        }
    }
    best
}

fn ray_meets_line<T: Scalar>(p: &Point<T>, d: &Point<T>, a: &Point<T>, b: &Point<T>) -> Option<Point<T>> {
    geom::line_intersection(&Segment::new(p.clone(), p.add(d)), &Segment::new(a.clone(), b.clone()))
}

/// Visibility polygon of `p` by an exact angular sweep over vertex directions.
///
/// Between two consecutive vertex directions the first boundary edge met is
/// fixed, so each angular wedge contributes one triangle.
pub fn visibility_polygon<T: Scalar>(poly: &Polygon<T>, p: &Point<T>) -> Result<VisPolygon<T>> {
    ensure_in(poly, p)?;
    let ring = poly.vertices();
    let mut dirs: Vec<Point<T>> = ring.iter().filter(|v| *v != p).map(|v| v.sub(p)).collect();
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|a, b| angle_cmp(a, b) == Ordering::Equal);
    let m = dirs.len();
    let mut region: Vec<Point<T>> = Vec::with_capacity(2 * m);
    for i in 0..m {
        let d0 = &dirs[i];
        let d1 = &dirs[(i + 1) % m];
        let c = d0.cross(d1);
        let mid = if c.is_positive() {
            d0.add(d1)
        } else if c.is_negative() {
            d0.add(d1).neg()
        } else if m > 1 {
            Point::new(-d0.y.clone(), d0.x.clone())
        } else {
            continue;
        };
        let inside = first_hit(ring, p, &mid).and_then(|(t, edge)| {
            let probe = p.add(&mid.scale(&(t * T::half())));
            (locate_in_ring(ring, &probe) == Location::Inside).then_some(edge)
        });
        match inside {
            Some(edge) => {
                let (a, b) = (&ring[edge], &ring[(edge + 1) % ring.len()]);
                let start = ray_meets_line(p, d0, a, b).unwrap_or_else(|| a.clone());
                let end = ray_meets_line(p, d1, a, b).unwrap_or_else(|| b.clone());
                region.push(start);
                region.push(end);
            }
            None => region.push(p.clone()),
        }
    }
    region.dedup();
    while region.len() > 1 && region.first() == region.last() {
        region.pop();
    }
    region.reverse();
    Ok(VisPolygon { origin: p.clone(), region })
}

/// A point of `path` that sees `p`, if any.
///
/// Waypoints are tried first. Otherwise the path is intersected with the
/// visibility polygon of `p`, and finally with the rays from `p` through the
/// vertices it sees, which carry the one-dimensional parts of the visible
/// set. Every returned witness passes [`visible`] exactly.
pub fn path_sees_point<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>, p: &Point<T>) -> Result<Option<Point<T>>> {
    ensure_in(poly, p)?;
    Ok(path_sees_point_unchecked(poly, path, p))
}

pub(crate) fn path_sees_point_unchecked<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>, p: &Point<T>) -> Option<Point<T>> {
    if path.contains(p) {
        return Some(p.clone());
    }
    if let Some(w) = path.waypoints().iter().find(|w| visible_unchecked(poly, p, w)) {
        return Some(w.clone());
    }
    if path.is_point() {
        return None;
    }
    let segments = path.segments();
    let vis = visibility_polygon(poly, p).ok()?;
    for s in &segments {
        if let Some(t) = vis.first_entry(s) {
            let x = s.at(&t);
            if visible_unchecked(poly, p, &x) {
                return Some(x);
            }
            break;
        }
    }
    let seen: Vec<Point<T>> = poly
        .vertices()
        .iter()
        .filter(|v| *v != p && visible_unchecked(poly, p, v))
        .map(|v| v.sub(p))
        .collect();
    for s in &segments {
        let mut candidates = ray_crossings(s, p, &seen);
        if !T::EXACT {
            candidates.extend(boundary_contacts(poly, s));
        }
        candidates.sort_by(|a, b| a.total_cmp(b));
        candidates.dedup();
        for t in candidates {
            let x = s.at(&t);
            if visible_unchecked(poly, p, &x) {
                return Some(x);
            }
        }
    }
    None
}

/// Parameters on `s` where it meets the rays `p + t d`, `t >= 0`.
pub(crate) fn ray_crossings<T: Scalar>(s: &Segment<T>, p: &Point<T>, dirs: &[Point<T>]) -> Vec<T> {
    let sd = s.direction();
    let ap = s.a.sub(p);
    let mut out = Vec::new();
    for d in dirs {
        let denom = sd.cross(d);
        if denom.is_zero() {
            if ap.cross(d).is_zero() {
                // collinear: the point of s closest to p along the ray
                let ta = ap.dot(d);
                let tb = s.b.sub(p).dot(d);
                if ta.is_negative() && tb.is_negative() {
                    continue;
                }
                if ta.is_negative() != tb.is_negative() {
                    out.push(s.param_of(p));
                } else if ta <= tb {
                    out.push(T::zero());
                } else {
                    out.push(T::one());
                }
            }
            continue;
        }
        let u = d.cross(&ap) / denom;
        if u.is_negative() || u > T::one() {
            continue;
        }
        let x = s.at(&u);
        if !x.sub(p).dot(d).is_negative() {
            out.push(u);
        }
    }
    out
}

/// Parameters on `s` at its endpoints and wherever it touches the boundary,
/// plus midpoints between consecutive ones.
pub(crate) fn boundary_contacts<T: Scalar>(poly: &Polygon<T>, s: &Segment<T>) -> Vec<T> {
    let mut ts = vec![T::zero(), T::one()];
    for e in poly.edges() {
        match geom::segment_intersection(s, &e) {
            Intersection::None => {}
            Intersection::Point(x) => ts.push(s.param_of(&x)),
            Intersection::Overlap(o) => {
                ts.push(s.param_of(&o.a));
                ts.push(s.param_of(&o.b));
            }
        }
    }
    ts.sort_by(|a, b| a.total_cmp(b));
    ts.dedup();
    let mids: Vec<T> = ts.windows(2).map(|w| (w[0].clone() + w[1].clone()) * T::half()).collect();
    ts.extend(mids);
    ts
}
