use crate::error::{Error, Result};
use crate::geom::{self, Intersection, Location, Point, Segment};
use crate::polygon::Polygon;
use crate::scalar::Scalar;
use crate::visibility;

/// A piecewise-linear path inside the closed polygon. A single waypoint is a
/// point path.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyPath<T> {
    waypoints: Vec<Point<T>>,
}

impl<T: Scalar> PolyPath<T> {
    /// Checks that every waypoint and every segment stays in the closed
    /// polygon. Consecutive repeated waypoints are merged.
    pub fn new(poly: &Polygon<T>, waypoints: Vec<Point<T>>) -> Result<Self> {
        let path = Self::new_unchecked(waypoints)?;
        path.check_inside(poly)?;
        Ok(path)
    }

    /// Fails if a waypoint or segment leaves the closed polygon.
    pub fn check_inside(&self, poly: &Polygon<T>) -> Result<()> {
        for p in &self.waypoints {
            if geom::point_in_polygon(poly, p) == Location::Outside {
                return Err(Error::PointOutside(p.display()));
            }
        }
        for (i, w) in self.waypoints.windows(2).enumerate() {
            if !visibility::visible_unchecked(poly, &w[0], &w[1]) {
                return Err(Error::PathOutside(i));
            }
        }
        Ok(())
    }

    /// Builds a path without the containment check.
    pub fn new_unchecked(mut waypoints: Vec<Point<T>>) -> Result<Self> {
        waypoints.dedup();
        if waypoints.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(PolyPath { waypoints })
    }

    pub fn point(p: Point<T>) -> Self {
        PolyPath { waypoints: vec![p] }
    }

    pub fn waypoints(&self) -> &[Point<T>] {
        &self.waypoints
    }

    pub fn is_point(&self) -> bool {
        self.waypoints.len() == 1
    }

    /// Path segments in order; a point path yields one degenerate segment.
    pub fn segments(&self) -> Vec<Segment<T>> {
        if self.is_point() {
            let p = self.waypoints[0].clone();
            return vec![Segment::new(p.clone(), p)];
        }
        self.waypoints.windows(2).map(|w| Segment::new(w[0].clone(), w[1].clone())).collect()
    }

    /// First point of the path, in path order, lying on `target`.
    pub fn first_hit(&self, target: &Segment<T>) -> Option<Point<T>> {
        for s in self.segments() {
            let hit = match geom::segment_intersection(&s, target) {
                Intersection::None => continue,
                Intersection::Point(p) => p,
                Intersection::Overlap(o) => {
                    if s.is_degenerate() || s.param_of(&o.a) <= s.param_of(&o.b) {
                        o.a
                    } else {
                        o.b
                    }
                }
            };
            return Some(hit);
        }
        None
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.segments().iter().any(|s| s.contains(p))
    }

    pub fn length_f64(&self) -> f64 {
        self.waypoints
            .windows(2)
            .map(|w| {
                let (ax, ay) = w[0].to_f64();
                let (bx, by) = w[1].to_f64();
                (bx - ax).hypot(by - ay)
            })
            .sum()
    }
}

impl<T: Scalar> serde::Serialize for PolyPath<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PolyPath", 1)?;
        st.serialize_field("waypoints", &self.waypoints)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Rational;

    fn p(x: &str, y: &str) -> Point<Rational> {
        Point::parse(x, y).unwrap()
    }

    #[test]
    fn validates_containment() {
        let u = fixtures::fix_u::<Rational>();
        assert!(PolyPath::new(&u, vec![p("0.5", "0.5"), p("2.5", "0.5")]).is_ok());
        assert_eq!(PolyPath::new(&u, vec![p("0.5", "2"), p("2.5", "2")]), Err(Error::PathOutside(0)));
        assert!(matches!(PolyPath::new(&u, vec![p("1.5", "2")]), Err(Error::PointOutside(_))));
        assert_eq!(PolyPath::<Rational>::new_unchecked(vec![]), Err(Error::EmptyPath));
        // running along the boundary stays in the closed polygon
        assert!(PolyPath::new(&u, vec![p("0", "0"), p("0", "3"), p("1", "3"), p("1", "1")]).is_ok());
    }

    #[test]
    fn first_hit_follows_path_order() {
        let path = PolyPath::new_unchecked(vec![p("0.5", "0.5"), p("2.5", "0.5")]).unwrap();
        let cut = Segment::new(p("2", "1"), p("2", "0"));
        assert_eq!(path.first_hit(&cut), Some(p("2", "0.5")));
        let along = Segment::new(p("3", "0.5"), p("1", "0.5"));
        assert_eq!(path.first_hit(&along), Some(p("1", "0.5")));
        let point = PolyPath::point(p("1", "0.5"));
        assert_eq!(point.first_hit(&Segment::new(p("1", "1"), p("1", "0"))), Some(p("1", "0.5")));
    }
}
