use serde::Serialize;

use crate::cuts::{essential_cuts, Cut};
use crate::error::{Error, Result};
use crate::geom::{self, orient, Intersection, Location, Orientation, Point, Segment};
use crate::polygon::{self, Polygon};
use crate::scalar::Scalar;
use crate::visibility::path_sees_point_unchecked;

use super::PolyPath;

/// Diagnostics for one reflex vertex `v` of the remaining region: its two
/// neighbours, the cuts of the polygon generated by the edges `t1 v` and
/// `t2 v`, and which essential pockets each of those cuts contains.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct ReflexDiagnostics<T> {
    pub v: Point<T>,
    pub t1: Point<T>,
    pub t2: Point<T>,
    pub l1: Option<Cut<T>>,
    pub l2: Option<Cut<T>>,
    /// Indices into the essential pocket list.
    pub s_p_l1: Vec<usize>,
    pub s_p_l2: Vec<usize>,
}

/// The polygon with every essential pocket cut away.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct KernelDecomposition<T> {
    /// Clockwise ring of the remaining region, `None` when nothing remains.
    pub q: Option<Vec<Point<T>>>,
    pub reflex_diag: Vec<ReflexDiagnostics<T>>,
    /// Essential cuts whose pockets were removed, in essential-cut order.
    pub s_p: Vec<Cut<T>>,
}

impl<T: Scalar> KernelDecomposition<T> {
    /// Area of the remaining region.
    pub fn q_area(&self) -> T {
        self.q.as_ref().map_or_else(T::zero, |ring| polygon::signed_area2(ring).abs() * T::half())
    }

    pub fn is_convex(&self) -> bool {
        self.reflex_diag.is_empty()
    }

    /// Every cut of the remaining region, extended to the polygon boundary,
    /// has an essential pocket inside its pocket.
    pub fn cuts_of_q_redundant(&self) -> bool {
        self.reflex_diag.iter().all(|d| {
            d.l1.is_some() && d.l2.is_some() && !d.s_p_l1.is_empty() && !d.s_p_l2.is_empty()
        })
    }
}

/// Removes the interior of every essential pocket by splitting along the
/// essential cuts one after another. Fails with [`Error::QDisconnected`] if
/// more than one piece survives.
pub fn kernel_subpolygon<T: Scalar>(poly: &Polygon<T>) -> Result<KernelDecomposition<T>> {
    let s_p = essential_cuts(poly);
    let mut pieces = vec![poly.vertices().to_vec()];
    for cut in &s_p {
        let chord = cut.segment();
        let mut next = Vec::new();
        for piece in pieces {
            for part in split_along(piece, &chord) {
                let rep = interior_point(&part).ok_or_else(|| Error::Degenerate(ring_text(&part)))?;
                if cut.pocket.locate(&rep) != Location::Inside {
                    next.push(part);
                }
            }
        }
        pieces = next;
    }
    // pockets never crossed by a chord can still swallow a whole piece
    pieces.retain(|piece| {
        interior_point(piece).is_some_and(|rep| s_p.iter().all(|c| c.pocket.locate(&rep) != Location::Inside))
    });
    if pieces.len() > 1 {
        return Err(Error::QDisconnected(pieces.len()));
    }
    let q = pieces.pop();
    let reflex_diag = match &q {
        Some(ring) => reflex_diagnostics(poly, ring, &s_p)?,
        None => Vec::new(),
    };
    Ok(KernelDecomposition { q, reflex_diag, s_p })
}

fn ring_text<T: Scalar>(ring: &[Point<T>]) -> String {
    ring.iter().map(Point::display).collect::<Vec<_>>().join(" ")
}

fn reflex_diagnostics<T: Scalar>(poly: &Polygon<T>, ring: &[Point<T>], s_p: &[Cut<T>]) -> Result<Vec<ReflexDiagnostics<T>>> {
    let n = ring.len();
    let mut out = Vec::new();
    for i in 0..n {
        let t1 = &ring[(i + n - 1) % n];
        let v = &ring[i];
        let t2 = &ring[(i + 1) % n];
        if orient(t1, v, t2) != Orientation::CounterClockwise {
            continue;
        }
        let index = poly.index_of(v).ok_or_else(|| Error::Degenerate(format!("reflex vertex {} of Q", v.display())))?;
        let l1 = Cut::from_generator(poly, index, t1);
        let l2 = Cut::from_generator(poly, index, t2);
        let contained = |l: &Option<Cut<T>>| -> Vec<usize> {
            l.as_ref()
                .map(|l| (0..s_p.len()).filter(|&k| l.pocket.arc_contains(&s_p[k].pocket)).collect())
                .unwrap_or_default()
        };
        out.push(ReflexDiagnostics {
            v: v.clone(),
            t1: t1.clone(),
            t2: t2.clone(),
            s_p_l1: contained(&l1),
            s_p_l2: contained(&l2),
            l1,
            l2,
        });
    }
    Ok(out)
}

/// Splits a clockwise ring along every stretch of `chord` that runs through
/// its interior.
fn split_along<T: Scalar>(ring: Vec<Point<T>>, chord: &Segment<T>) -> Vec<Vec<Point<T>>> {
    let Some((a, b)) = first_inner_stretch(&ring, chord) else {
        return vec![ring];
    };
    let mut ring = insert_point(ring, &a);
    ring = insert_point(ring, &b);
    let ia = ring.iter().position(|p| *p == a).expect("inserted");
    let ib = ring.iter().position(|p| *p == b).expect("inserted");
    let n = ring.len();
    let walk = |from: usize, to: usize| -> Vec<Point<T>> {
        let mut out = vec![ring[from].clone()];
        let mut k = from;
        while k != to {
            k = (k + 1) % n;
            out.push(ring[k].clone());
        }
        remove_collinear(out)
    };
    let first = walk(ia, ib);
    let second = walk(ib, ia);
    let mut out = split_along(first, chord);
    out.extend(split_along(second, chord));
    out
}

/// A sub-segment of `chord` whose endpoints are on the ring boundary and
/// whose interior is strictly inside the ring.
fn first_inner_stretch<T: Scalar>(ring: &[Point<T>], chord: &Segment<T>) -> Option<(Point<T>, Point<T>)> {
    let n = ring.len();
    let mut ts = Vec::new();
    for i in 0..n {
        let e = Segment::new(ring[i].clone(), ring[(i + 1) % n].clone());
        match geom::segment_intersection(chord, &e) {
            Intersection::None => {}
            Intersection::Point(x) => ts.push(chord.param_of(&x)),
            Intersection::Overlap(o) => {
                ts.push(chord.param_of(&o.a));
                ts.push(chord.param_of(&o.b));
            }
        }
    }
    ts.sort_by(|a, b| a.total_cmp(b));
    ts.dedup();
    ts.windows(2).find_map(|w| {
        let mid = chord.at(&((w[0].clone() + w[1].clone()) * T::half()));
        (geom::locate_in_ring(ring, &mid) == Location::Inside).then(|| (chord.at(&w[0]), chord.at(&w[1])))
    })
}

/// Adds `p` to the ring on the edge containing it, unless it is a vertex.
fn insert_point<T: Scalar>(mut ring: Vec<Point<T>>, p: &Point<T>) -> Vec<Point<T>> {
    if ring.contains(p) {
        return ring;
    }
    let n = ring.len();
    if let Some(i) = (0..n).find(|&i| geom::on_segment(p, &ring[i], &ring[(i + 1) % n])) {
        ring.insert(i + 1, p.clone());
    }
    ring
}

fn remove_collinear<T: Scalar>(mut ring: Vec<Point<T>>) -> Vec<Point<T>> {
    ring.dedup();
    while ring.len() > 1 && ring.first() == ring.last() {
        ring.pop();
    }
    loop {
        let n = ring.len();
        if n < 3 {
            return ring;
        }
        let Some(i) = (0..n).find(|&i| orient(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) == Orientation::Collinear)
        else {
            return ring;
        };
        ring.remove(i);
    }
}

/// A point strictly inside a simple clockwise ring: near a convex vertex,
/// either the centroid of the ear there or the midpoint towards the deepest
/// vertex intruding into that ear.
fn interior_point<T: Scalar>(ring: &[Point<T>]) -> Option<Point<T>> {
    let n = ring.len();
    if n < 3 {
        return None;
    }
    let three = T::from_int(3);
    for i in 0..n {
        let a = &ring[(i + n - 1) % n];
        let v = &ring[i];
        let c = &ring[(i + 1) % n];
        if orient(a, v, c) != Orientation::Clockwise {
            continue;
        }
        let ear = [a.clone(), v.clone(), c.clone()];
        let deepest = ring
            .iter()
            .filter(|p| *p != a && *p != v && *p != c)
            .filter(|p| geom::locate_in_ring(&ear, p) != Location::Outside)
            .map(|p| (geom::cross3(a, c, p).abs(), p))
            .filter(|(depth, _)| !depth.is_zero())
            .max_by(|x, y| x.0.total_cmp(&y.0));
        let candidate = match deepest {
            None => {
                let sum = a.add(v).add(c);
                Point::new(sum.x / three.clone(), sum.y / three.clone())
            }
            Some((_, p)) => Point::midpoint(v, p),
        };
        if geom::locate_in_ring(ring, &candidate) == Location::Inside {
            return Some(candidate);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma3Vertex<T> {
    pub v: Point<T>,
    pub hits_l1: bool,
    pub hits_l2: bool,
    pub t1_seen: bool,
    pub t2_seen: bool,
    /// `l1` (resp. `l2`) contains every essential pocket.
    pub l1_holds_all: bool,
    pub l2_holds_all: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma3Report<T> {
    pub decomposition: KernelDecomposition<T>,
    /// The remaining region is empty or convex.
    pub vacuous: bool,
    pub cuts_of_q_redundant: bool,
    pub vertices: Vec<Lemma3Vertex<T>>,
    /// Vertices of the remaining region not seen from the path.
    pub unseen_q_vertices: Vec<Point<T>>,
    pub passed: bool,
}

/// For a path meeting every essential cut of a non-star polygon: each reflex
/// vertex of the remaining region has the path crossing one of its two
/// extended cuts or sees both neighbours, neighbours across a cut holding all
/// essential pockets are seen, and every vertex of the region is seen.
pub fn lemma3_check<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>) -> Result<Lemma3Report<T>> {
    path.check_inside(poly)?;
    if !poly.kernel().is_empty() {
        return Err(Error::InvalidConfig("polygon is star-shaped".into()));
    }
    let decomposition = kernel_subpolygon(poly)?;
    if let Some(missed) = decomposition.s_p.iter().find(|c| path.first_hit(&c.segment()).is_none()) {
        return Err(Error::InvalidConfig(format!(
            "path misses essential cut {} -> {}",
            missed.v.display(),
            missed.w.display()
        )));
    }
    let all = decomposition.s_p.len();
    let seen = |p: &Point<T>| path_sees_point_unchecked(poly, path, p).is_some();
    let hits = |l: &Option<Cut<T>>| l.as_ref().is_some_and(|l| path.first_hit(&l.segment()).is_some());
    let vertices: Vec<Lemma3Vertex<T>> = decomposition
        .reflex_diag
        .iter()
        .map(|d| {
            let (hits_l1, hits_l2) = (hits(&d.l1), hits(&d.l2));
            let (t1_seen, t2_seen) = (seen(&d.t1), seen(&d.t2));
            let (l1_holds_all, l2_holds_all) = (d.s_p_l1.len() == all, d.s_p_l2.len() == all);
            let passed = (hits_l1 || hits_l2 || (t1_seen && t2_seen))
                && (!l1_holds_all || t1_seen)
                && (!l2_holds_all || t2_seen);
            Lemma3Vertex { v: d.v.clone(), hits_l1, hits_l2, t1_seen, t2_seen, l1_holds_all, l2_holds_all, passed }
        })
        .collect();
    let unseen_q_vertices: Vec<Point<T>> =
        decomposition.q.iter().flatten().filter(|p| !seen(p)).cloned().collect();
    let cuts_of_q_redundant = decomposition.cuts_of_q_redundant();
    let passed = cuts_of_q_redundant && unseen_q_vertices.is_empty() && vertices.iter().all(|v| v.passed);
    Ok(Lemma3Report {
        vacuous: decomposition.is_convex(),
        decomposition,
        cuts_of_q_redundant,
        vertices,
        unseen_q_vertices,
        passed,
    })
}
