//! Certification of visibility paths by the essential-cut criterion, with an
//! independent sampling oracle and executable checks of the supporting
//! lemmas.

mod kernel;
mod oracle;
mod path;
mod route;

use serde::Serialize;

pub use kernel::{kernel_subpolygon, lemma3_check, KernelDecomposition, Lemma3Report, Lemma3Vertex, ReflexDiagnostics};
pub use oracle::{
    coverage_oracle, lemma1_check, lemma1_from_report, oracle_samples, CoverageReport, Lemma1Record, Lemma1Witness,
    Sample, SampleKind, SamplingConfig,
};
pub use path::PolyPath;
pub use route::{make_certified_route, route_through};

use crate::cuts::{essential_cuts, Cut};
use crate::error::Result;
use crate::geom::{Location, Point};
use crate::polygon::Polygon;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    VisibilityPath,
    NotVisibilityPath,
    /// The polygon is star-shaped, where the cut criterion does not apply.
    PreconditionStarShaped,
}

impl Conclusion {
    /// Process exit status used by the command-line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Conclusion::VisibilityPath => 0,
            Conclusion::NotVisibilityPath => 1,
            Conclusion::PreconditionStarShaped => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct CutHit<T> {
    pub cut: Cut<T>,
    pub hit: bool,
    pub first_hit_point: Option<Point<T>>,
    /// The path misses the cut but lies inside its pocket. Such a path can
    /// still see the whole polygon, so the oracle should be consulted.
    pub path_in_pocket: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct Verdict<T> {
    pub per_cut: Vec<CutHit<T>>,
    pub kernel_empty: bool,
    pub conclusion: Conclusion,
}

impl<T: Scalar> Verdict<T> {
    pub fn all_hit(&self) -> bool {
        self.per_cut.iter().all(|c| c.hit)
    }
}

/// Tests the path against every essential cut. For a polygon with an empty
/// kernel, meeting them all makes the path a visibility path and the
/// conclusion is `VISIBILITY_PATH`; missing one gives `NOT_VISIBILITY_PATH`.
/// A path that misses a cut from outside its pocket leaves part of the
/// polygon unseen. A path lying inside the pocket of a missed cut can still
/// see everything; it is flagged with `path_in_pocket` and the coverage
/// oracle is the authority, as it is for star-shaped polygons.
pub fn certify_visibility_path<T: Scalar>(poly: &Polygon<T>, path: &PolyPath<T>) -> Result<Verdict<T>> {
    path.check_inside(poly)?;
    let per_cut: Vec<CutHit<T>> = essential_cuts(poly)
        .into_iter()
        .map(|cut| {
            let first_hit_point = path.first_hit(&cut.segment());
            let hit = first_hit_point.is_some();
            let path_in_pocket = !hit && cut.pocket.locate(&path.waypoints()[0]) != Location::Outside;
            CutHit { hit, first_hit_point, path_in_pocket, cut }
        })
        .collect();
    let kernel_empty = poly.kernel().is_empty();
    let conclusion = if !kernel_empty {
        Conclusion::PreconditionStarShaped
    } else if per_cut.iter().all(|c| c.hit) {
        Conclusion::VisibilityPath
    } else {
        Conclusion::NotVisibilityPath
    };
    Ok(Verdict { per_cut, kernel_empty, conclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::Rational;

    fn p(x: &str, y: &str) -> Point<Rational> {
        Point::parse(x, y).unwrap()
    }

    #[test]
    fn verdicts_on_fixtures() {
        let u = fixtures::fix_u::<Rational>();
        let full = PolyPath::new(&u, vec![p("0.5", "0.5"), p("2.5", "0.5")]).unwrap();
        let v = certify_visibility_path(&u, &full).unwrap();
        assert_eq!(v.conclusion, Conclusion::VisibilityPath);
        let hits: Vec<_> = v.per_cut.iter().map(|c| c.first_hit_point.clone().unwrap()).collect();
        assert_eq!(hits, vec![p("1", "0.5"), p("2", "0.5")]);

        let short = PolyPath::new(&u, vec![p("0.5", "0.5"), p("1.5", "0.5")]).unwrap();
        let v = certify_visibility_path(&u, &short).unwrap();
        assert_eq!(v.conclusion, Conclusion::NotVisibilityPath);
        assert!(!v.per_cut[1].hit && !v.per_cut[1].path_in_pocket);
        assert_eq!(v.per_cut[1].cut.v, p("2", "1"));

        let sq = fixtures::unit_square::<Rational>();
        let v = certify_visibility_path(&sq, &PolyPath::point(p("0.5", "0.5"))).unwrap();
        assert_eq!(v.conclusion, Conclusion::PreconditionStarShaped);
        assert!(v.per_cut.is_empty());
    }

    #[test]
    fn rejects_paths_leaving_the_polygon() {
        let u = fixtures::fix_u::<Rational>();
        let outside = PolyPath::new_unchecked(vec![p("0.5", "2"), p("2.5", "2")]).unwrap();
        assert_eq!(certify_visibility_path(&u, &outside), Err(Error::PathOutside(0)));
    }
}
