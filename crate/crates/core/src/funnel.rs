//! Shortest paths inside the polygon, funnels from a pocket vertex to a cut,
//! and constructive certificates that every pocket vertex of an essential
//! cut is seen by a path crossing all essential cuts.

use std::cmp::Ordering;

use serde::Serialize;

use crate::certify::PolyPath;
use crate::cuts::{Cut, GeneratorSide};
use crate::error::{Error, Result};
use crate::geom::{self, orient, Location, Orientation, Point, Segment};
use crate::polygon::Polygon;
use crate::scalar::{compare_root_sums, Scalar};
use crate::visibility::{path_sees_point_unchecked, visible_unchecked};

/// A polygonal shortest path. Lengths are kept as exact squared segment
/// lengths; total lengths are compared as sums of square roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct GeodesicPath<T> {
    pub waypoints: Vec<Point<T>>,
    #[serde(serialize_with = "serialize_scalars")]
    pub squared_lengths: Vec<T>,
    pub length: f64,
}

fn serialize_scalars<T: Scalar, S: serde::Serializer>(values: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(crate::scalar::display))
}

impl<T: Scalar> GeodesicPath<T> {
    pub fn from_waypoints(waypoints: Vec<Point<T>>) -> Self {
        let squared_lengths: Vec<T> = waypoints.windows(2).map(|w| w[0].dist2(&w[1])).collect();
        let length = squared_lengths.iter().map(|d| d.to_f64_lossy().sqrt()).sum();
        GeodesicPath { waypoints, squared_lengths, length }
    }

    pub fn source(&self) -> &Point<T> {
        &self.waypoints[0]
    }

    pub fn target(&self) -> &Point<T> {
        self.waypoints.last().expect("geodesic has a waypoint")
    }

    pub fn cmp_length(&self, other: &Self) -> Ordering {
        compare_root_sums(&self.squared_lengths, &other.squared_lengths)
    }

    pub fn reversed(&self) -> Self {
        let mut waypoints = self.waypoints.clone();
        waypoints.reverse();
        Self::from_waypoints(waypoints)
    }
}

/// Drops waypoints that lie on the segment joining their neighbours.
fn straighten<T: Scalar>(mut waypoints: Vec<Point<T>>) -> Vec<Point<T>> {
    waypoints.dedup();
    let mut i = 1;
    while i + 1 < waypoints.len() {
        if geom::on_segment(&waypoints[i], &waypoints[i - 1], &waypoints[i + 1]) {
            waypoints.remove(i);
            i = i.max(2) - 1;
        } else {
            i += 1;
        }
    }
    waypoints
}

/// Shortest-path queries over one polygon. Visibility among reflex vertices
/// is computed once; each query adds the two endpoints and runs Dijkstra.
pub struct ShortestPaths<'a, T> {
    poly: &'a Polygon<T>,
    reflex: Vec<usize>,
    sees: Vec<Vec<bool>>,
}

#[derive(Clone)]
struct Label<T> {
    terms: Vec<T>,
    nodes: Vec<usize>,
}

impl<'a, T: Scalar> ShortestPaths<'a, T> {
    pub fn new(poly: &'a Polygon<T>) -> Self {
        let reflex = poly.reflex_vertices();
        let k = reflex.len();
        let mut sees = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let s = visible_unchecked(poly, poly.vertex(reflex[i]), poly.vertex(reflex[j]));
                sees[i][j] = s;
                sees[j][i] = s;
            }
        }
        ShortestPaths { poly, reflex, sees }
    }

    pub fn polygon(&self) -> &'a Polygon<T> {
        self.poly
    }

    /// Euclidean shortest path from `x` to `y` inside the closed polygon.
    /// Among equally long paths the one with fewer turns wins, then the
    /// lexicographically smaller waypoint sequence.
    pub fn shortest_path(&self, x: &Point<T>, y: &Point<T>) -> Result<GeodesicPath<T>> {
        for p in [x, y] {
            if geom::point_in_polygon(self.poly, p) == Location::Outside {
                return Err(Error::PointOutside(p.display()));
            }
        }
        if x == y {
            return Ok(GeodesicPath::from_waypoints(vec![x.clone()]));
        }
        if visible_unchecked(self.poly, x, y) {
            return Ok(GeodesicPath::from_waypoints(vec![x.clone(), y.clone()]));
        }
        let k = self.reflex.len();
        let point = |node: usize| -> &Point<T> {
            if node < k {
                self.poly.vertex(self.reflex[node])
            } else if node == k {
                x
            } else {
                y
            }
        };
        let usable: Vec<bool> = (0..k).map(|i| point(i) != x && point(i) != y).collect();
        let from_x: Vec<bool> = (0..k).map(|i| usable[i] && visible_unchecked(self.poly, x, point(i))).collect();
        let to_y: Vec<bool> = (0..k).map(|i| usable[i] && visible_unchecked(self.poly, point(i), y)).collect();
        let edge = |a: usize, b: usize| -> bool {
            match (a < k, b < k) {
                (true, true) => usable[a] && usable[b] && self.sees[a][b],
                (false, true) => a == k && from_x[b],
                (true, false) => b == k + 1 && to_y[a],
                (false, false) => false,
            }
        };
        let better = |a: &Label<T>, b: &Label<T>| -> bool {
            compare_root_sums(&a.terms, &b.terms)
                .then(a.nodes.len().cmp(&b.nodes.len()))
                .then_with(|| {
                    a.nodes
                        .iter()
                        .map(|&n| point(n))
                        .zip(b.nodes.iter().map(|&n| point(n)))
                        .map(|(p, q)| p.lex_cmp(q))
                        .find(|o| *o != Ordering::Equal)
                        .unwrap_or(Ordering::Equal)
                })
                == Ordering::Less
        };
        let total = k + 2;
        let mut labels: Vec<Option<Label<T>>> = vec![None; total];
        let mut done = vec![false; total];
        labels[k] = Some(Label { terms: Vec::new(), nodes: vec![k] });
        loop {
            let mut current: Option<usize> = None;
            for i in 0..total {
                if done[i] {
                    continue;
                }
                if let Some(l) = &labels[i] {
                    if current.map_or(true, |c| better(l, labels[c].as_ref().unwrap())) {
                        current = Some(i);
                    }
                }
            }
            let Some(c) = current else { break };
            done[c] = true;
            if c == k + 1 {
                break;
            }
            let base = labels[c].clone().unwrap();
            for next in 0..total {
                if done[next] || !edge(c, next) {
                    continue;
                }
                let mut terms = base.terms.clone();
                terms.push(point(c).dist2(point(next)));
                let mut nodes = base.nodes.clone();
                nodes.push(next);
                let candidate = Label { terms, nodes };
                if labels[next].as_ref().map_or(true, |old| better(&candidate, old)) {
                    labels[next] = Some(candidate);
                }
            }
        }
        let label = labels[k + 1].as_ref().ok_or_else(|| Error::PointOutside(y.display()))?;
        let waypoints = label.nodes.iter().map(|&n| point(n).clone()).collect();
        Ok(GeodesicPath::from_waypoints(straighten(waypoints)))
    }
}

pub fn shortest_path<T: Scalar>(poly: &Polygon<T>, x: &Point<T>, y: &Point<T>) -> Result<GeodesicPath<T>> {
    ShortestPaths::new(poly).shortest_path(x, y)
}

/// The two geodesics from a pocket vertex to the endpoints of a cut, split at
/// their last common waypoint.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Funnel<T> {
    pub source: Point<T>,
    pub apex: Point<T>,
    /// Apex to `v` of the cut.
    pub left_chain: GeodesicPath<T>,
    /// Apex to `w` of the cut.
    pub right_chain: GeodesicPath<T>,
}

fn is_pocket_vertex<T: Scalar>(cut: &Cut<T>, x: &Point<T>) -> bool {
    cut.pocket.region.iter().any(|p| p == x)
}

pub fn funnel_to_cut<T: Scalar>(paths: &ShortestPaths<'_, T>, x: &Point<T>, cut: &Cut<T>) -> Result<Funnel<T>> {
    if !is_pocket_vertex(cut, x) {
        return Err(Error::NotPocketVertex(x.display()));
    }
    let to_v = paths.shortest_path(x, &cut.v)?;
    let to_w = paths.shortest_path(x, &cut.w)?;
    let common = to_v.waypoints.iter().zip(&to_w.waypoints).take_while(|(a, b)| a == b).count();
    let apex_at = common.max(1) - 1;
    Ok(Funnel {
        source: x.clone(),
        apex: to_v.waypoints[apex_at].clone(),
        left_chain: GeodesicPath::from_waypoints(to_v.waypoints[apex_at..].to_vec()),
        right_chain: GeodesicPath::from_waypoints(to_w.waypoints[apex_at..].to_vec()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    A,
    B,
    C,
    /// `x` sees both endpoints of the cut.
    DegenerateA,
    /// `x` sees `w` only.
    DegenerateAb,
    /// `x` sees `v` only.
    DegenerateAc,
}

/// Which part of the cut the path crossed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AppliedCase {
    /// Between the two funnel extensions.
    A,
    /// Between `v` and the left extension.
    B,
    /// Between the right extension and `w`.
    C,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma2Certificate<T> {
    pub vertex: Point<T>,
    pub cut: Cut<T>,
    pub case_tag: CaseTag,
    pub applied_case: AppliedCase,
    pub l_x: Point<T>,
    pub r_x: Point<T>,
    pub i_lx: Point<T>,
    pub i_rx: Point<T>,
    pub c_lx: Option<Cut<T>>,
    pub c_rx: Option<Cut<T>>,
    /// Generator endpoints of `c_lx` and `c_rx`.
    pub l_prime: Option<Point<T>>,
    pub r_prime: Option<Point<T>>,
    /// A point where the path meets the cut.
    pub path_on_cut: Point<T>,
    /// In cases B and C, whether the path meets the side cut `c_lx` or `c_rx`.
    pub side_cut_met: Option<bool>,
    pub witness: Point<T>,
}

/// Point where the line through `x` and `through` meets segment `c`.
fn extension_on_cut<T: Scalar>(x: &Point<T>, through: &Point<T>, c: &Segment<T>) -> Option<Point<T>> {
    if through == &c.a || through == &c.b {
        return Some(through.clone());
    }
    let p = geom::line_intersection(&Segment::new(x.clone(), through.clone()), c)?;
    c.contains(&p).then_some(p)
}

/// The segment from `x` through `through` up to the first boundary point
/// beyond `through`.
fn sight_line<T: Scalar>(poly: &Polygon<T>, x: &Point<T>, through: &Point<T>) -> Segment<T> {
    let far = geom::ray_shoot(poly, through, &through.sub(x)).map(|h| h.point).unwrap_or_else(|_| through.clone());
    Segment::new(x.clone(), far)
}

/// The side cut at funnel vertex `l` toward cut endpoint `target`: generated
/// by the neighbour `l'` of `l` whose geodesic to `target` starts at `l`.
fn side_cut<T: Scalar>(
    paths: &ShortestPaths<'_, T>,
    x: &Point<T>,
    l: &Point<T>,
    target: &Point<T>,
) -> Option<(Point<T>, Cut<T>)> {
    let poly = paths.polygon();
    let li = poly.index_of(l)?;
    let mut options: Vec<(GeneratorSide, usize)> =
        vec![(GeneratorSide::Prev, poly.prev_index(li)), (GeneratorSide::Next, poly.next_index(li))];
    options.sort_by_key(|(_, i)| poly.vertex(*i) != x);
    options.into_iter().find_map(|(side, ni)| {
        let nb = poly.vertex(ni);
        let path = paths.shortest_path(nb, target).ok()?;
        let first = path.waypoints.get(1)?;
        (first == l).then(|| Cut::generate(poly, li, side).map(|c| (nb.clone(), c)))?
    })
}

/// Constructive witness that pocket vertex `x` of essential cut `cut` is
/// seen by `path`, following the funnel case analysis.
///
/// Fails with [`Error::NoWitness`] if the construction does not produce a
/// point of the path that sees `x`, which would contradict the claim being
/// certified for a path crossing every essential cut.
pub fn lemma2_certificate<T: Scalar>(
    paths: &ShortestPaths<'_, T>,
    essentials: &[Cut<T>],
    path: &PolyPath<T>,
    cut: &Cut<T>,
    x: &Point<T>,
) -> Result<Lemma2Certificate<T>> {
    let poly = paths.polygon();
    if !is_pocket_vertex(cut, x) {
        return Err(Error::NotPocketVertex(x.display()));
    }
    if let Some(missed) = essentials.iter().find(|c| path.first_hit(&c.segment()).is_none()) {
        return Err(Error::InvalidConfig(format!(
            "path misses essential cut ({})-({})",
            missed.v.display(),
            missed.w.display()
        )));
    }
    let c = cut.segment();
    let path_on_cut = path.first_hit(&c).ok_or_else(|| Error::InvalidConfig("path misses the cut".into()))?;
    let sees_v = visible_unchecked(poly, x, &cut.v);
    let sees_w = visible_unchecked(poly, x, &cut.w);
    let no_witness = || Error::NoWitness(x.display());

    let (l_x, r_x, case_tag) = match (sees_v, sees_w) {
        (true, true) => (cut.v.clone(), cut.w.clone(), CaseTag::DegenerateA),
        (true, false) => {
            let to_w = paths.shortest_path(x, &cut.w)?;
            (cut.v.clone(), to_w.waypoints[1].clone(), CaseTag::DegenerateAc)
        }
        (false, true) => {
            let to_v = paths.shortest_path(x, &cut.v)?;
            (to_v.waypoints[1].clone(), cut.w.clone(), CaseTag::DegenerateAb)
        }
        (false, false) => {
            let funnel = funnel_to_cut(paths, x, cut)?;
            if funnel.apex != *x {
                return Err(no_witness());
            }
            (funnel.left_chain.waypoints[1].clone(), funnel.right_chain.waypoints[1].clone(), CaseTag::A)
        }
    };
    let i_lx = extension_on_cut(x, &l_x, &c).ok_or_else(no_witness)?;
    let i_rx = extension_on_cut(x, &r_x, &c).ok_or_else(no_witness)?;

    let middle = Segment::new(i_lx.clone(), i_rx.clone());
    let applied_case = if path.first_hit(&middle).is_some() {
        AppliedCase::A
    } else if Segment::new(cut.v.clone(), i_lx.clone()).contains(&path_on_cut) {
        AppliedCase::B
    } else {
        AppliedCase::C
    };
    let case_tag = match (case_tag, applied_case) {
        (CaseTag::A, AppliedCase::B) => CaseTag::B,
        (CaseTag::A, AppliedCase::C) => CaseTag::C,
        (tag, _) => tag,
    };

    let (c_lx, l_prime) = match side_cut(paths, x, &l_x, &cut.v) {
        Some((p, c)) if l_x != cut.v => (Some(c), Some(p)),
        _ => (None, None),
    };
    let (c_rx, r_prime) = match side_cut(paths, x, &r_x, &cut.w) {
        Some((p, c)) if r_x != cut.w => (Some(c), Some(p)),
        _ => (None, None),
    };

    let search = match applied_case {
        AppliedCase::A => middle,
        AppliedCase::B => sight_line(poly, x, &l_x),
        AppliedCase::C => sight_line(poly, x, &r_x),
    };
    let witness = path.first_hit(&search).ok_or_else(no_witness)?;
    if !visible_unchecked(poly, &witness, x) {
        return Err(no_witness());
    }
    let side_cut_met = match applied_case {
        AppliedCase::A => None,
        AppliedCase::B => c_lx.as_ref().map(|s| path.first_hit(&s.segment()).is_some()),
        AppliedCase::C => c_rx.as_ref().map(|s| path.first_hit(&s.segment()).is_some()),
    };
    Ok(Lemma2Certificate {
        vertex: x.clone(),
        cut: cut.clone(),
        case_tag,
        applied_case,
        l_x,
        r_x,
        i_lx,
        i_rx,
        c_lx,
        c_rx,
        l_prime,
        r_prime,
        path_on_cut,
        side_cut_met,
        witness,
    })
}

/// Structural facts about an essential cut's pocket.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct PocketClaims<T> {
    pub v: Point<T>,
    pub w: Point<T>,
    /// Interior angle of the pocket at `u` is at most a straight angle.
    pub u_convex: bool,
    pub w_convex: bool,
    /// No two pocket vertices lie strictly on opposite sides of the cut's line.
    pub one_side: bool,
    /// Pocket vertices that see no point of the cut.
    pub blind_vertices: Vec<Point<T>>,
}

impl<T: Scalar> PocketClaims<T> {
    pub fn holds(&self) -> bool {
        self.u_convex && self.w_convex && self.one_side && self.blind_vertices.is_empty()
    }
}

fn convex_in_ring<T: Scalar>(ring: &[Point<T>], p: &Point<T>) -> bool {
    let n = ring.len();
    match ring.iter().position(|q| q == p) {
        Some(i) => orient(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) != Orientation::CounterClockwise,
        None => false,
    }
}

pub fn pocket_claims<T: Scalar>(poly: &Polygon<T>, cut: &Cut<T>) -> PocketClaims<T> {
    let ring = &cut.pocket.region;
    let mut left = false;
    let mut right = false;
    for p in ring {
        match orient(&cut.v, &cut.w, p) {
            Orientation::CounterClockwise => left = true,
            Orientation::Clockwise => right = true,
            Orientation::Collinear => {}
        }
    }
    let c = PolyPath::new_unchecked(vec![cut.v.clone(), cut.w.clone()]).expect("cut has endpoints");
    let blind_vertices = ring.iter().filter(|x| path_sees_point_unchecked(poly, &c, x).is_none()).cloned().collect();
    PocketClaims {
        v: cut.v.clone(),
        w: cut.w.clone(),
        u_convex: convex_in_ring(ring, &cut.u),
        w_convex: convex_in_ring(ring, &cut.w),
        one_side: !(left && right),
        blind_vertices,
    }
}

/// Every certificate and pocket claim for one path.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Lemma2Report<T> {
    pub certificates: Vec<Lemma2Certificate<T>>,
    /// `(cut v, cut w, pocket vertex)` triples with no witness.
    pub failures: Vec<(Point<T>, Point<T>, Point<T>)>,
    pub claims: Vec<PocketClaims<T>>,
}

impl<T: Scalar> Lemma2Report<T> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.claims.iter().all(PocketClaims::holds)
    }
}

/// Certificates for every pocket vertex of every essential cut.
pub fn lemma2_report<T: Scalar>(poly: &Polygon<T>, essentials: &[Cut<T>], path: &PolyPath<T>) -> Result<Lemma2Report<T>> {
    let paths = ShortestPaths::new(poly);
    let mut certificates = Vec::new();
    let mut failures = Vec::new();
    for cut in essentials {
        for x in &cut.pocket.region {
            match lemma2_certificate(&paths, essentials, path, cut, x) {
                Ok(cert) => certificates.push(cert),
                Err(Error::NoWitness(_)) => failures.push((cut.v.clone(), cut.w.clone(), x.clone())),
                Err(e) => return Err(e),
            }
        }
    }
    let claims = essentials.iter().map(|c| pocket_claims(poly, c)).collect();
    Ok(Lemma2Report { certificates, failures, claims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::essential_cuts;
    use crate::fixtures;
    use crate::Rational;

    type P = Point<Rational>;

    fn p(x: &str, y: &str) -> P {
        P::parse(x, y).unwrap()
    }

    fn find_cut(cuts: &[Cut<Rational>], v: P, w: P) -> Cut<Rational> {
        cuts.iter().find(|c| c.v == v && c.w == w).unwrap().clone()
    }

    /// Dijkstra over every vertex pair with f64 lengths.
    fn brute_force_length(poly: &Polygon<Rational>, x: &P, y: &P) -> f64 {
        let mut nodes: Vec<P> = vec![x.clone()];
        nodes.extend(poly.vertices().iter().cloned());
        nodes.push(y.clone());
        let n = nodes.len();
        let len = |a: &P, b: &P| a.dist2(b).to_f64_lossy().sqrt();
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        dist[0] = 0.0;
        for _ in 0..n {
            let c = (0..n).filter(|&i| !done[i]).min_by(|&a, &b| dist[a].total_cmp(&dist[b])).unwrap();
            done[c] = true;
            for j in 0..n {
                if !done[j] && visible_unchecked(poly, &nodes[c], &nodes[j]) {
                    dist[j] = dist[j].min(dist[c] + len(&nodes[c], &nodes[j]));
                }
            }
        }
        dist[n - 1]
    }

    #[test]
    fn shortest_path_examples() {
        let u = fixtures::fix_u::<Rational>();
        let sp = shortest_path(&u, &p("0.5", "0.5"), &p("2.5", "0.5")).unwrap();
        assert_eq!(sp.waypoints, vec![p("0.5", "0.5"), p("2.5", "0.5")]);
        assert_eq!(sp.length, 2.0);

        let sp = shortest_path(&u, &p("0.5", "2.5"), &p("2.5", "2.5")).unwrap();
        assert_eq!(sp.waypoints, vec![p("0.5", "2.5"), p("1", "1"), p("2", "1"), p("2.5", "2.5")]);
        let expected = 2.0 * (0.5f64 * 0.5 + 1.5 * 1.5).sqrt() + 1.0;
        assert!((sp.length - expected).abs() < 1e-12);
        assert!((sp.length - brute_force_length(&u, &p("0.5", "2.5"), &p("2.5", "2.5"))).abs() < 1e-12);

        let same = shortest_path(&u, &p("0.5", "2.5"), &p("0.5", "2.5")).unwrap();
        assert_eq!(same.waypoints.len(), 1);
        assert_eq!(same.length, 0.0);
        assert!(matches!(shortest_path(&u, &p("1.5", "2"), &p("0.5", "0.5")), Err(Error::PointOutside(_))));
    }

    #[test]
    fn straighten_removes_pass_through_vertices() {
        let u = fixtures::fix_u::<Rational>();
        // (0,1) -> (3,1) runs through both reflex vertices
        let sp = shortest_path(&u, &p("0", "1"), &p("3", "1")).unwrap();
        assert_eq!(sp.waypoints, vec![p("0", "1"), p("3", "1")]);
    }

    #[test]
    fn funnel_examples() {
        let u = fixtures::fix_u::<Rational>();
        let cuts = crate::cuts::generate_cuts(&u);
        let left = find_cut(&cuts, p("1", "1"), p("1", "0"));
        let paths = ShortestPaths::new(&u);
        for x in [p("0", "3"), p("0", "0")] {
            let f = funnel_to_cut(&paths, &x, &left).unwrap();
            assert_eq!(f.apex, x);
            assert_eq!(f.left_chain.waypoints.len(), 2);
            assert_eq!(f.right_chain.waypoints.len(), 2);
        }
        assert!(matches!(funnel_to_cut(&paths, &p("3", "3"), &left), Err(Error::NotPocketVertex(_))));

        let l = fixtures::fix_l::<Rational>();
        let cuts = crate::cuts::generate_cuts(&l);
        let c = find_cut(&cuts, p("1", "1"), p("1", "0"));
        let f = funnel_to_cut(&ShortestPaths::new(&l), &p("0", "2"), &c).unwrap();
        assert_eq!(f.apex, p("0", "2"));
        assert_eq!(f.left_chain.target(), &p("1", "1"));
    }

    #[test]
    fn lemma2_examples() {
        let u = fixtures::fix_u::<Rational>();
        let essentials = essential_cuts(&u);
        let paths = ShortestPaths::new(&u);
        let path = PolyPath::new(&u, vec![p("0.5", "0.5"), p("2.5", "0.5")]).unwrap();
        let left = find_cut(&essentials, p("1", "1"), p("1", "0"));
        let cert = lemma2_certificate(&paths, &essentials, &path, &left, &p("0", "3")).unwrap();
        assert_eq!(cert.applied_case, AppliedCase::A);
        assert_eq!(cert.case_tag, CaseTag::DegenerateA);
        assert_eq!(cert.witness, p("1", "0.5"));

        let right = find_cut(&essentials, p("2", "1"), p("2", "0"));
        let cert = lemma2_certificate(&paths, &essentials, &path, &right, &p("3", "3")).unwrap();
        assert_eq!(cert.applied_case, AppliedCase::A);
        assert_eq!(cert.witness, p("2", "0.5"));

        let l = fixtures::fix_l::<Rational>();
        let essentials = essential_cuts(&l);
        let point = PolyPath::point(p("1", "1"));
        let c = find_cut(&essentials, p("1", "1"), p("1", "0"));
        let cert = lemma2_certificate(&ShortestPaths::new(&l), &essentials, &point, &c, &p("0", "0")).unwrap();
        assert_eq!(cert.case_tag, CaseTag::DegenerateA);
        assert_eq!(cert.witness, p("1", "1"));
    }

    #[test]
    fn lemma2_report_on_fixture() {
        let u = fixtures::fix_u::<Rational>();
        let essentials = essential_cuts(&u);
        let path = PolyPath::new(&u, vec![p("0.5", "0.5"), p("2.5", "0.5")]).unwrap();
        let report = lemma2_report(&u, &essentials, &path).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.certificates.len(), essentials.iter().map(|c| c.pocket.region.len()).sum::<usize>());
        let short = PolyPath::new(&u, vec![p("0.5", "0.5"), p("1.5", "0.5")]).unwrap();
        assert!(matches!(lemma2_report(&u, &essentials, &short), Err(Error::InvalidConfig(_))));
    }
}
