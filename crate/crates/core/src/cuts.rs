//! Cuts generated at reflex vertices, their pockets, and the essential
//! (nonredundant) subset.
//!
//! A cut starts at a reflex vertex `v`, runs along the extension of an
//! incident edge `uv` beyond `v`, and stops at the first boundary point `w`.
//! Its pocket is the side of the polygon containing `u`, stored both as a
//! clockwise boundary interval and as a materialized ring.

use std::cmp::Ordering;

use crate::geom::{self, ray_shoot, BoundaryFeature, Location, Point, Segment};
use crate::polygon::{BoundaryCoord, Polygon};
use crate::scalar::Scalar;

/// Which neighbour of the reflex vertex is the generator endpoint `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSide {
    Prev,
    Next,
}

/// Orientation of the cut segment that keeps the pocket on its right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CutDirection {
    VToW,
    WToV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Essentiality {
    Unknown,
    Essential,
    Redundant,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pocket<T> {
    /// Clockwise boundary interval `[start, end]` owned by the pocket.
    pub start: BoundaryCoord<T>,
    pub end: BoundaryCoord<T>,
    /// Clockwise ring: the boundary arc followed by the cut. Contains `v`
    /// even though `u`, `v`, `w` are collinear.
    pub region: Vec<Point<T>>,
}

impl<T: Scalar> Pocket<T> {
    pub fn locate(&self, p: &Point<T>) -> Location {
        geom::locate_in_ring(&self.region, p)
    }

    /// Closed containment of boundary intervals: `inner` lies within `self`.
    pub fn arc_contains(&self, inner: &Pocket<T>) -> bool {
        arc_holds(&self.start, &self.end, &inner.start)
            && arc_holds(&self.start, &self.end, &inner.end)
            && arc_holds(&inner.start, &self.end, &inner.end)
    }

    pub fn same_interval(&self, other: &Pocket<T>) -> bool {
        self.start == other.start && self.end == other.end
    }
}

/// Whether `x` lies on the clockwise boundary arc from `start` to `end`, inclusive.
pub fn arc_holds<T: Scalar>(start: &BoundaryCoord<T>, end: &BoundaryCoord<T>, x: &BoundaryCoord<T>) -> bool {
    let key = |c: &BoundaryCoord<T>| (c.partial_cmp(start) == Some(Ordering::Less), c.edge, c.frac.clone());
    let cmp = |a: &(bool, usize, T), b: &(bool, usize, T)| {
        a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then_with(|| a.2.total_cmp(&b.2))
    };
    cmp(&key(x), &key(end)) != Ordering::Greater
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cut<T> {
    /// Index of the reflex vertex `v`.
    pub reflex: usize,
    pub side: GeneratorSide,
    pub v: Point<T>,
    pub w: Point<T>,
    pub u: Point<T>,
    pub hit: BoundaryFeature,
    pub direction: CutDirection,
    pub pocket: Pocket<T>,
    pub essential: Essentiality,
}

impl<T: Scalar> Cut<T> {
    /// Builds the cut generated by the edge from the `side` neighbour of
    /// reflex vertex `reflex`. Returns `None` if the vertex is not reflex.
    pub fn generate(poly: &Polygon<T>, reflex: usize, side: GeneratorSide) -> Option<Self> {
        if !poly.is_reflex(reflex) {
            return None;
        }
        let u_index = match side {
            GeneratorSide::Prev => poly.prev_index(reflex),
            GeneratorSide::Next => poly.next_index(reflex),
        };
        Self::from_generator(poly, reflex, poly.vertex(u_index))
    }

    /// The cut obtained by extending segment `u -> vertex[reflex]` beyond the
    /// vertex, where the segment runs inside the closed polygon. Its pocket is
    /// the side of the cut holding `u`. Returns `None` when the extension
    /// leaves the polygon at the vertex.
    pub fn from_generator(poly: &Polygon<T>, reflex: usize, u: &Point<T>) -> Option<Self> {
        let v = poly.vertex(reflex).clone();
        let hit = ray_shoot(poly, &v, &v.sub(u)).ok()?;
        let w = hit.point.clone();
        let w_coord = poly.boundary_coord(&w).ok()?;
        let v_coord = BoundaryCoord::vertex(reflex);
        let n = poly.len();
        let arc_vertices = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(poly.vertex(k).clone());
                if k == to {
                    break;
                }
                k = (k + 1) % n;
            }
            out
        };
        // clockwise from v to w
        let mut ahead = arc_vertices(reflex, w_coord.edge);
        if !w_coord.is_vertex() {
            ahead.push(w.clone());
        }
        let (side, start, end, region, direction) = if geom::locate_in_ring(&ahead, u) != Location::Outside {
            (GeneratorSide::Next, v_coord, w_coord, ahead, CutDirection::WToV)
        } else {
            let mut behind = Vec::new();
            let first = if w_coord.is_vertex() {
                w_coord.edge
            } else {
                behind.push(w.clone());
                (w_coord.edge + 1) % n
            };
            behind.extend(arc_vertices(first, reflex));
            (GeneratorSide::Prev, w_coord, v_coord, behind, CutDirection::VToW)
        };
        Some(Cut {
            reflex,
            side,
            v,
            w,
            u: u.clone(),
            hit: hit.feature,
            direction,
            pocket: Pocket { start, end, region },
            essential: Essentiality::Unknown,
        })
    }

    pub fn segment(&self) -> Segment<T> {
        Segment::new(self.v.clone(), self.w.clone())
    }

    /// The cut oriented so that its pocket lies on the right.
    pub fn directed(&self) -> Segment<T> {
        match self.direction {
            CutDirection::VToW => Segment::new(self.v.clone(), self.w.clone()),
            CutDirection::WToV => Segment::new(self.w.clone(), self.v.clone()),
        }
    }

    pub fn midpoint(&self) -> Point<T> {
        Point::midpoint(&self.v, &self.w)
    }

    pub fn is_essential(&self) -> bool {
        self.essential == Essentiality::Essential
    }
}

impl<T: Scalar> serde::Serialize for Cut<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(serde::Serialize)]
        #[serde(bound(serialize = "T: Scalar"))]
        struct Interval<'a, T> {
            start: &'a BoundaryCoord<T>,
            end: &'a BoundaryCoord<T>,
        }
        let mut s = serializer.serialize_struct("Cut", 7)?;
        s.serialize_field("v", &self.v)?;
        s.serialize_field("w", &self.w)?;
        s.serialize_field("u", &self.u)?;
        s.serialize_field("generator", &self.side)?;
        s.serialize_field("direction", &self.direction)?;
        s.serialize_field("essential", &self.essential)?;
        s.serialize_field("pocket", &Interval { start: &self.pocket.start, end: &self.pocket.end })?;
        s.end()
    }
}

/// Two cuts per reflex vertex, ordered by vertex index with the
/// previous-edge generator first.
pub fn generate_cuts<T: Scalar>(poly: &Polygon<T>) -> Vec<Cut<T>> {
    poly.reflex_vertices()
        .into_iter()
        .flat_map(|i| {
            [GeneratorSide::Prev, GeneratorSide::Next]
                .into_iter()
                .map(move |side| Cut::generate(poly, i, side).expect("reflex vertex yields a cut"))
        })
        .collect()
}

/// Strict containment `b ⊂ a` of pockets of the same polygon.
pub fn pocket_contains<T: Scalar>(a: &Pocket<T>, b: &Pocket<T>) -> bool {
    a.arc_contains(b) && !a.same_interval(b)
}

/// Flags every cut as essential or redundant. A cut is redundant when its
/// pocket strictly contains another cut's pocket; identical pockets keep
/// each other.
pub fn classify<T: Scalar>(mut cuts: Vec<Cut<T>>) -> Vec<Cut<T>> {
    let redundant: Vec<bool> = (0..cuts.len())
        .map(|j| (0..cuts.len()).any(|i| i != j && pocket_contains(&cuts[j].pocket, &cuts[i].pocket)))
        .collect();
    for (cut, r) in cuts.iter_mut().zip(redundant) {
        cut.essential = if r { Essentiality::Redundant } else { Essentiality::Essential };
    }
    cuts
}

/// All cuts with their essentiality resolved.
pub fn classified_cuts<T: Scalar>(poly: &Polygon<T>) -> Vec<Cut<T>> {
    classify(generate_cuts(poly))
}

/// The essential cuts, ordered by the boundary position of their reflex vertex.
pub fn essential_cuts<T: Scalar>(poly: &Polygon<T>) -> Vec<Cut<T>> {
    classified_cuts(poly).into_iter().filter(Cut::is_essential).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num_traits::Zero;
    use crate::Rational;

    type P = Point<Rational>;

    fn pt(x: i64, y: i64) -> P {
        P::from_ints(x, y)
    }

    fn endpoints(cuts: &[Cut<Rational>]) -> Vec<(P, P)> {
        cuts.iter().map(|c| (c.v.clone(), c.w.clone())).collect()
    }

    /// Closed-ring membership sampled on a fine grid: returns the grid points
    /// strictly inside the ring.
    fn grid_inside(ring: &[P], lo: i64, hi: i64, steps: i64) -> Vec<P> {
        let mut out = Vec::new();
        for i in 0..=steps * (hi - lo) {
            for j in 0..=steps * (hi - lo) {
                let p = P::new(Rational::new(lo * steps + i, steps), Rational::new(lo * steps + j, steps));
                if geom::locate_in_ring(ring, &p) == Location::Inside {
                    out.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn fix_l_cuts_and_pockets() {
        let l = fixtures::fix_l::<Rational>();
        let cuts = generate_cuts(&l);
        assert_eq!(endpoints(&cuts), vec![(pt(1, 1), pt(1, 0)), (pt(1, 1), pt(0, 1))]);
        // left slab [0,1]x[0,2] and bottom slab [0,2]x[0,1], checked by sampling
        let slab = |p: &P, w: i64, h: i64| p.x > Rational::zero() && p.y > Rational::zero() && p.x < Rational::from_integer(w) && p.y < Rational::from_integer(h);
        let inside0 = grid_inside(&cuts[0].pocket.region, 0, 2, 4);
        assert!(!inside0.is_empty() && inside0.iter().all(|p| slab(p, 1, 2)));
        assert_eq!(inside0.len(), 3 * 7);
        let inside1 = grid_inside(&cuts[1].pocket.region, 0, 2, 4);
        assert!(inside1.iter().all(|p| slab(p, 2, 1)));
        assert_eq!(inside1.len(), 7 * 3);
        assert_eq!(cuts[0].direction, CutDirection::VToW);
        assert_eq!(cuts[1].direction, CutDirection::WToV);
        assert_eq!(cuts[0].u, pt(1, 2));
        assert_eq!(cuts[1].u, pt(2, 1));
        let classified = classify(cuts);
        assert!(classified.iter().all(Cut::is_essential));
    }

    #[test]
    fn fix_u_cuts_and_essentials() {
        let u = fixtures::fix_u::<Rational>();
        let cuts = generate_cuts(&u);
        let mut got = endpoints(&cuts);
        got.sort_by(|a, b| a.0.lex_cmp(&b.0).then(a.1.lex_cmp(&b.1)));
        let mut want = vec![(pt(1, 1), pt(1, 0)), (pt(1, 1), pt(0, 1)), (pt(2, 1), pt(3, 1)), (pt(2, 1), pt(2, 0))];
        want.sort_by(|a, b| a.0.lex_cmp(&b.0).then(a.1.lex_cmp(&b.1)));
        assert_eq!(got, want);

        let find = |v: P, w: P| cuts.iter().find(|c| c.v == v && c.w == w).unwrap();
        let left = find(pt(1, 1), pt(1, 0));
        let right_big = find(pt(2, 1), pt(3, 1));
        let right = find(pt(2, 1), pt(2, 0));
        assert!(pocket_contains(&right_big.pocket, &left.pocket));
        assert!(!pocket_contains(&left.pocket, &right.pocket));
        assert!(!pocket_contains(&right.pocket, &left.pocket));
        assert!(!pocket_contains(&left.pocket, &left.pocket));

        let essentials = essential_cuts(&u);
        assert_eq!(endpoints(&essentials), vec![(pt(1, 1), pt(1, 0)), (pt(2, 1), pt(2, 0))]);
    }

    #[test]
    fn convex_polygon_has_no_cuts() {
        let sq = fixtures::unit_square::<Rational>();
        assert!(generate_cuts(&sq).is_empty());
        assert!(essential_cuts(&sq).is_empty());
    }

    #[test]
    fn diagonal_cut_ends_inside_an_edge() {
        let through = Polygon::<Rational>::validate(
            [(0, 0), (0, 3), (2, 3), (2, 1), (3, 2), (3, 0)].iter().map(|&(x, y)| pt(x, y)).collect(),
        )
        .unwrap();
        // reflex (2,1): extension of (3,2)->(2,1) heads to (1,0), strictly inside bottom edge
        let cuts = generate_cuts(&through);
        let c = cuts.iter().find(|c| c.u == pt(3, 2)).unwrap();
        assert_eq!(c.w, pt(1, 0));
        let c = cuts.iter().find(|c| c.u == pt(2, 3)).unwrap();
        assert_eq!(c.w, pt(2, 0));
    }

    #[test]
    fn vertex_hit_splits_interval_at_vertex() {
        // The extension of (3,3)->(2,2) passes (1,1) and first meets the boundary at vertex (0,0).
        let poly = Polygon::<Rational>::validate(
            [(0, 0), (-1, 4), (3, 4), (3, 3), (2, 2), (4, 2), (4, -1)].iter().map(|&(x, y)| pt(x, y)).collect(),
        )
        .unwrap();
        let cuts = generate_cuts(&poly);
        let c = cuts.iter().find(|c| c.u == pt(3, 3)).unwrap();
        assert_eq!(c.w, pt(0, 0));
        assert!(matches!(c.hit, BoundaryFeature::Vertex { index: 0, .. }));
        assert!(c.pocket.start.is_vertex() && c.pocket.end.is_vertex());
        assert_eq!(c.pocket.region.first(), Some(&pt(0, 0)));
        assert_eq!(c.pocket.region.last(), Some(&pt(2, 2)));
    }
}
