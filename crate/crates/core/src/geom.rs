//! Planar primitives: orientation, closed segment intersection, ray shooting
//! and point location. Every predicate is a sign test on products of input
//! coordinates, so it is exact whenever the scalar is.

use std::cmp::Ordering;

use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: T::from_int(x), y: T::from_int(y) }
    }

    /// Parses two decimal literals.
    pub fn parse(x: &str, y: &str) -> Option<Self> {
        Some(Point { x: T::parse_decimal(x)?, y: T::parse_decimal(y)? })
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point { x: self.x.clone() - other.x.clone(), y: self.y.clone() - other.y.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Point { x: self.x.clone() + other.x.clone(), y: self.y.clone() + other.y.clone() }
    }

    pub fn scale(&self, k: &T) -> Self {
        Point { x: self.x.clone() * k.clone(), y: self.y.clone() * k.clone() }
    }

    pub fn neg(&self) -> Self {
        Point { x: -self.x.clone(), y: -self.y.clone() }
    }

    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn norm2(&self) -> T {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Self) -> T {
        self.sub(other).norm2()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `a + t (b - a)`.
    pub fn lerp(a: &Self, b: &Self, t: &T) -> Self {
        a.add(&b.sub(a).scale(t))
    }

    pub fn midpoint(a: &Self, b: &Self) -> Self {
        Point::lerp(a, b, &T::half())
    }

    /// Clockwise perpendicular `(y, -x)`; for a clockwise polygon it points
    /// from an edge into the interior.
    pub fn right_perp(&self) -> Self {
        Point { x: self.y.clone(), y: -self.x.clone() }
    }

    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.x.total_cmp(&other.x).then_with(|| self.y.total_cmp(&other.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64_lossy(), self.y.to_f64_lossy())
    }

    pub fn display(&self) -> String {
        format!("{}, {}", scalar::display(&self.x), scalar::display(&self.y))
    }
}

impl<T: Scalar> Serialize for Point<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(2)?;
        tuple.serialize_element(&scalar::display(&self.x))?;
        tuple.serialize_element(&scalar::display(&self.y))?;
        tuple.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point<T>, b: Point<T>) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn direction(&self) -> Point<T> {
        self.b.sub(&self.a)
    }

    pub fn at(&self, t: &T) -> Point<T> {
        Point::lerp(&self.a, &self.b, t)
    }

    pub fn midpoint(&self) -> Point<T> {
        Point::midpoint(&self.a, &self.b)
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        on_segment(p, &self.a, &self.b)
    }

    /// Parameter of a point known to lie on the supporting line.
    pub fn param_of(&self, p: &Point<T>) -> T {
        let d = self.direction();
        p.sub(&self.a).dot(&d) / d.norm2()
    }
}

impl<T: Scalar> Serialize for Segment<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(2)?;
        tuple.serialize_element(&self.a)?;
        tuple.serialize_element(&self.b)?;
        tuple.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    pub fn reverse(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn of<T: Scalar>(det: &T) -> Self {
        if det.is_positive() {
            Orientation::CounterClockwise
        } else if det.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }

    fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }
}

/// `(q - p) x (r - p)`.
pub fn cross3<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> T {
    (q.x.clone() - p.x.clone()) * (r.y.clone() - p.y.clone())
        - (q.y.clone() - p.y.clone()) * (r.x.clone() - p.x.clone())
}

pub fn orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Orientation {
    Orientation::of(&cross3(p, q, r))
}

fn between<T: Scalar>(v: &T, a: &T, b: &T) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

/// Closed test: `p` lies on segment `ab` (endpoints included).
pub fn on_segment<T: Scalar>(p: &Point<T>, a: &Point<T>, b: &Point<T>) -> bool {
    between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y) && cross3(a, b, p).is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Intersection<T> {
    None,
    Point(Point<T>),
    Overlap(Segment<T>),
}

impl<T> Intersection<T> {
    pub fn is_none(&self) -> bool {
        matches!(self, Intersection::None)
    }
}

fn bbox_disjoint<T: Scalar>(a1: &Point<T>, b1: &Point<T>, a2: &Point<T>, b2: &Point<T>) -> bool {
    let (lo1x, hi1x) = if a1.x <= b1.x { (&a1.x, &b1.x) } else { (&b1.x, &a1.x) };
    let (lo2x, hi2x) = if a2.x <= b2.x { (&a2.x, &b2.x) } else { (&b2.x, &a2.x) };
    if hi1x < lo2x || hi2x < lo1x {
        return true;
    }
    let (lo1y, hi1y) = if a1.y <= b1.y { (&a1.y, &b1.y) } else { (&b1.y, &a1.y) };
    let (lo2y, hi2y) = if a2.y <= b2.y { (&a2.y, &b2.y) } else { (&b2.y, &a2.y) };
    hi1y < lo2y || hi2y < lo1y
}

/// Closed-set intersection of two segments. Touching endpoints produce a
/// point; collinear overlaps return the shared piece with endpoints in
/// lexicographic order.
pub fn segment_intersection<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> Intersection<T> {
    let (a1, b1, a2, b2) = (&s1.a, &s1.b, &s2.a, &s2.b);
    if s1.is_degenerate() {
        return if on_segment(a1, a2, b2) { Intersection::Point(a1.clone()) } else { Intersection::None };
    }
    if s2.is_degenerate() {
        return if on_segment(a2, a1, b1) { Intersection::Point(a2.clone()) } else { Intersection::None };
    }
    if bbox_disjoint(a1, b1, a2, b2) {
        return Intersection::None;
    }
    let o1 = orient(a1, b1, a2);
    let o2 = orient(a1, b1, b2);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        let (lo1, hi1) = if a1.lex_cmp(b1) == Ordering::Greater { (b1, a1) } else { (a1, b1) };
        let (lo2, hi2) = if a2.lex_cmp(b2) == Ordering::Greater { (b2, a2) } else { (a2, b2) };
        let lo = if lo1.lex_cmp(lo2) == Ordering::Less { lo2 } else { lo1 };
        let hi = if hi1.lex_cmp(hi2) == Ordering::Less { hi1 } else { hi2 };
        return match lo.lex_cmp(hi) {
            Ordering::Greater => Intersection::None,
            Ordering::Equal => Intersection::Point(lo.clone()),
            Ordering::Less => Intersection::Overlap(Segment::new(lo.clone(), hi.clone())),
        };
    }
    if o1.sign() * o2.sign() > 0 {
        return Intersection::None;
    }
    let o3 = orient(a2, b2, a1);
    let o4 = orient(a2, b2, b1);
    if o3.sign() * o4.sign() > 0 {
        return Intersection::None;
    }
    if o1 == Orientation::Collinear {
        return Intersection::Point(a2.clone());
    }
    if o2 == Orientation::Collinear {
        return Intersection::Point(b2.clone());
    }
    if o3 == Orientation::Collinear {
        return Intersection::Point(a1.clone());
    }
    if o4 == Orientation::Collinear {
        return Intersection::Point(b1.clone());
    }
    let d1 = s1.direction();
    let d2 = s2.direction();
    let t = a2.sub(a1).cross(&d2) / d1.cross(&d2);
    Intersection::Point(s1.at(&t))
}

/// True when the two segments cross at a single point interior to both.
pub fn crosses_properly<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> bool {
    if bbox_disjoint(&s1.a, &s1.b, &s2.a, &s2.b) {
        return false;
    }
    let o1 = orient(&s1.a, &s1.b, &s2.a).sign();
    let o2 = orient(&s1.a, &s1.b, &s2.b).sign();
    if o1 * o2 >= 0 {
        return false;
    }
    let o3 = orient(&s2.a, &s2.b, &s1.a).sign();
    let o4 = orient(&s2.a, &s2.b, &s1.b).sign();
    o3 * o4 < 0
}

/// Intersection of the supporting lines of `s1` and `s2`, if they are not parallel.
pub fn line_intersection<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> Option<Point<T>> {
    let d1 = s1.direction();
    let d2 = s2.direction();
    let denom = d1.cross(&d2);
    if denom.is_zero() {
        return None;
    }
    let t = s2.a.sub(&s1.a).cross(&d2) / denom;
    Some(s1.at(&t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Exact point location against a closed ring of vertices (either orientation).
pub fn locate_in_ring<T: Scalar>(ring: &[Point<T>], p: &Point<T>) -> Location {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        if on_segment(p, a, b) {
            return Location::Boundary;
        }
        let a_above = a.y > p.y;
        let b_above = b.y > p.y;
        if a_above != b_above {
            let o = orient(a, b, p);
            let left = if b.y > a.y { Orientation::CounterClockwise } else { Orientation::Clockwise };
            if o == left {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

pub fn point_in_polygon<T: Scalar>(poly: &Polygon<T>, p: &Point<T>) -> Location {
    locate_in_ring(poly.vertices(), p)
}

/// Which part of the boundary a ray stopped at. Edge `i` runs from vertex
/// `i` to vertex `i + 1`; vertex `k` sits between edges `k - 1` and `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryFeature {
    Edge(usize),
    Vertex { index: usize, edges: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RayHit<T> {
    pub point: Point<T>,
    pub feature: BoundaryFeature,
    /// Ray parameter of the hit: `point = origin + t * direction`.
    pub t: T,
}

/// Nearest boundary point strictly beyond `origin` along `direction`.
///
/// Fails with [`Error::RayExitsImmediately`] when the open ray does not start
/// into the interior (it points outward or runs along an edge).
pub fn ray_shoot<T: Scalar>(poly: &Polygon<T>, origin: &Point<T>, direction: &Point<T>) -> Result<RayHit<T>> {
    let ring = poly.vertices();
    let n = ring.len();
    if direction.is_zero() {
        return Err(Error::RayExitsImmediately);
    }
    let mut best: Option<(T, usize)> = None;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        let edge = b.sub(a);
        let ao = a.sub(origin);
        let denom = direction.cross(&edge);
        let candidate = if !denom.is_zero() {
            let t = ao.cross(&edge) / denom.clone();
            let s = ao.cross(direction) / denom;
            (t.is_positive() && !s.is_negative() && s <= T::one()).then_some(t)
        } else if ao.cross(direction).is_zero() {
            let dd = direction.norm2();
            let ta = ao.dot(direction) / dd.clone();
            let tb = b.sub(origin).dot(direction) / dd;
            let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
            if !hi.is_positive() {
                None
            } else if !lo.is_positive() {
                return Err(Error::RayExitsImmediately);
            } else {
                Some(lo)
            }
        } else {
            None
        };
        if let Some(t) = candidate {
            if best.as_ref().map_or(true, |(bt, _)| t < *bt) {
                best = Some((t, i));
            }
        }
    }
    let (t, edge) = best.ok_or(Error::RayExitsImmediately)?;
    let probe = origin.add(&direction.scale(&(t.clone() * T::half())));
    if locate_in_ring(ring, &probe) != Location::Inside {
        return Err(Error::RayExitsImmediately);
    }
    let point = origin.add(&direction.scale(&t));
    let feature = match ring.iter().position(|v| *v == point) {
        Some(index) => BoundaryFeature::Vertex { index, edges: ((index + n - 1) % n, index) },
        None => BoundaryFeature::Edge(edge),
    };
    Ok(RayHit { point, feature, t })
}
