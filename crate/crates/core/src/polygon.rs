//! Validated simple polygons in clockwise order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::{self, cross3, orient, Intersection, Orientation, Point, Segment};
use crate::scalar::Scalar;

/// A simple polygon with vertices in clockwise order.
///
/// Construction goes through [`Polygon::validate`], which rejects repeated
/// vertices, consecutive collinear triples and self-intersections, and turns
/// counterclockwise input around.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
    reflex: Vec<bool>,
}

impl<T: Scalar> serde::Serialize for Polygon<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Polygon", 1)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

/// Emitted when input vertices were given counterclockwise and reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReversedNotice;

impl<T: Scalar> Polygon<T> {
    pub fn validate(points: Vec<Point<T>>) -> Result<Self> {
        Self::validate_with_notice(points).map(|(poly, _)| poly)
    }

    pub fn validate_with_notice(mut points: Vec<Point<T>>) -> Result<(Self, Option<ReversedNotice>)> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut sorted: Vec<&Point<T>> = points.iter().collect();
        sorted.sort_by(|a, b| a.lex_cmp(b));
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("repeated vertex ({})", w[0].display())));
        }
        for i in 0..n {
            let prev = &points[(i + n - 1) % n];
            let next = &points[(i + 1) % n];
            if orient(prev, &points[i], next) == Orientation::Collinear {
                return Err(Error::Degenerate(format!("collinear vertices around ({})", points[i].display())));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let ei = Segment::new(points[i].clone(), points[(i + 1) % n].clone());
                let ej = Segment::new(points[j].clone(), points[(j + 1) % n].clone());
                if geom::segment_intersection(&ei, &ej) != Intersection::None {
                    return Err(Error::NotSimple(i, j));
                }
            }
        }
        let mut notice = None;
        if signed_area2(&points).is_positive() {
            points[1..].reverse();
            notice = Some(ReversedNotice);
        }
        let reflex = (0..n)
            .map(|i| orient(&points[(i + n - 1) % n], &points[i], &points[(i + 1) % n]) == Orientation::CounterClockwise)
            .collect();
        Ok((Polygon { vertices: points, reflex }, notice))
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point<T> {
        &self.vertices[i % self.len()]
    }

    pub fn prev_index(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn next_index(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    pub fn edge(&self, i: usize) -> Segment<T> {
        Segment::new(self.vertex(i).clone(), self.vertex(i + 1).clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment<T>> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        self.reflex[i % self.len()]
    }

    /// Vertices whose interior angle exceeds pi (left turns when walking clockwise).
    pub fn reflex_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.reflex[i]).collect()
    }

    pub fn index_of(&self, p: &Point<T>) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Twice the signed area; negative for clockwise polygons.
    pub fn signed_area2(&self) -> T {
        signed_area2(&self.vertices)
    }

    pub fn area(&self) -> T {
        self.signed_area2().abs() * T::half()
    }

    pub fn bbox(&self) -> (Point<T>, Point<T>) {
        bbox(&self.vertices)
    }

    pub fn perimeter_f64(&self) -> f64 {
        self.edges().map(|e| e.direction().norm2().to_f64_lossy().sqrt()).sum()
    }

    /// Closed membership in the kernel: on the inner side of every edge line.
    pub fn in_kernel(&self, p: &Point<T>) -> bool {
        self.edges().all(|e| !cross3(&e.a, &e.b, p).is_positive())
    }

    /// Clockwise boundary position of a point on the boundary.
    pub fn boundary_coord(&self, p: &Point<T>) -> Result<BoundaryCoord<T>> {
        for i in 0..self.len() {
            let e = self.edge(i);
            if e.contains(p) && *p != e.b {
                let frac = e.param_of(p);
                return Ok(BoundaryCoord { edge: i, frac });
            }
        }
        Err(Error::NotOnBoundary(p.display()))
    }

    /// Intersection of the inner closed half-planes of all edges.
    pub fn kernel(&self) -> Kernel<T> {
        let (lo, hi) = self.bbox();
        let mut region = vec![
            lo.clone(),
            Point::new(lo.x.clone(), hi.y.clone()),
            hi.clone(),
            Point::new(hi.x.clone(), lo.y.clone()),
        ];
        for e in self.edges() {
            region = clip_half_plane(&region, &e.a, &e.b);
            if region.is_empty() {
                break;
            }
        }
        Kernel { region }
    }
}

pub fn signed_area2<T: Scalar>(ring: &[Point<T>]) -> T {
    let n = ring.len();
    (0..n).fold(T::zero(), |acc, i| acc + ring[i].cross(&ring[(i + 1) % n]))
}

pub fn bbox<T: Scalar>(points: &[Point<T>]) -> (Point<T>, Point<T>) {
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in &points[1..] {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    (lo, hi)
}

/// Keeps the part of a convex ring on the closed right side of line `a -> b`.
fn clip_half_plane<T: Scalar>(ring: &[Point<T>], a: &Point<T>, b: &Point<T>) -> Vec<Point<T>> {
    let n = ring.len();
    let mut out: Vec<Point<T>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &ring[i];
        let next = &ring[(i + 1) % n];
        let c_cur = cross3(a, b, cur);
        let c_next = cross3(a, b, next);
        if !c_cur.is_positive() {
            out.push(cur.clone());
        }
        if (c_cur.is_negative() && c_next.is_positive()) || (c_cur.is_positive() && c_next.is_negative()) {
            let t = c_cur.clone() / (c_cur - c_next);
            out.push(Point::lerp(cur, next, &t));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Position on the boundary: edge index plus fraction in `[0, 1)` along it.
/// The lexicographic order matches clockwise arc length from vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryCoord<T> {
    pub edge: usize,
    pub frac: T,
}

impl<T: Scalar> BoundaryCoord<T> {
    pub fn vertex(index: usize) -> Self {
        BoundaryCoord { edge: index, frac: T::zero() }
    }

    pub fn point(&self, poly: &Polygon<T>) -> Point<T> {
        poly.edge(self.edge).at(&self.frac)
    }

    /// Clockwise arc length from vertex 0 (edge lengths are irrational in
    /// general, hence floating point).
    pub fn arc_length(&self, poly: &Polygon<T>) -> f64 {
        let len = |i: usize| poly.edge(i).direction().norm2().to_f64_lossy().sqrt();
        (0..self.edge).map(len).sum::<f64>() + self.frac.to_f64_lossy() * len(self.edge)
    }

    pub fn is_vertex(&self) -> bool {
        self.frac.is_zero()
    }
}

impl<T: Scalar> PartialOrd for BoundaryCoord<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.edge.cmp(&other.edge).then_with(|| self.frac.total_cmp(&other.frac)))
    }
}

impl<T: Scalar> serde::Serialize for BoundaryCoord<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BoundaryCoord", 2)?;
        s.serialize_field("edge", &self.edge)?;
        s.serialize_field("frac", &crate::scalar::display(&self.frac))?;
        s.end()
    }
}

/// Kernel of a polygon as a convex ring. It can degenerate to a segment or a
/// single point; an empty ring means the polygon is not star-shaped.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel<T> {
    pub region: Vec<Point<T>>,
}

impl<T: Scalar> Kernel<T> {
    pub fn is_empty(&self) -> bool {
        self.region.is_empty()
    }

    /// A point of the kernel (vertex average of the convex ring).
    pub fn representative(&self) -> Option<Point<T>> {
        if self.region.is_empty() {
            return None;
        }
        let count = T::from_int(self.region.len() as i64);
        let sum = self.region.iter().skip(1).fold(self.region[0].clone(), |acc, p| acc.add(p));
        Some(Point::new(sum.x / count.clone(), sum.y / count))
    }
}
