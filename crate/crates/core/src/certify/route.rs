use crate::cuts::essential_cuts;
use crate::error::{Error, Result};
use crate::funnel::ShortestPaths;
use crate::geom::Point;
use crate::polygon::Polygon;
use crate::scalar::Scalar;

use super::PolyPath;

/// Joins consecutive stops by shortest paths.
pub fn route_through<T: Scalar>(poly: &Polygon<T>, stops: &[Point<T>]) -> Result<PolyPath<T>> {
    let Some(first) = stops.first() else {
        return Err(Error::EmptyPath);
    };
    let paths = ShortestPaths::new(poly);
    let mut waypoints = vec![first.clone()];
    for pair in stops.windows(2) {
        let leg = paths.shortest_path(&pair[0], &pair[1])?;
        waypoints.extend(leg.waypoints.into_iter().skip(1));
    }
    PolyPath::new_unchecked(waypoints)
}

/// A path through the midpoint of every essential cut, visiting them in
/// boundary order of their reflex endpoints.
pub fn make_certified_route<T: Scalar>(poly: &Polygon<T>) -> Result<PolyPath<T>> {
    let stops: Vec<Point<T>> = essential_cuts(poly).iter().map(|c| c.midpoint()).collect();
    if stops.is_empty() {
        return Err(Error::NoEssentialCuts);
    }
    route_through(poly, &stops)
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
    fn routes_on_fixtures() {
        let u = fixtures::fix_u::<Rational>();
        assert_eq!(make_certified_route(&u).unwrap().waypoints(), &[p("1", "0.5"), p("2", "0.5")]);
        let l = fixtures::fix_l::<Rational>();
        let route = make_certified_route(&l).unwrap();
        assert_eq!(route.waypoints(), &[p("1", "0.5"), p("0.5", "1")]);
        assert_eq!(make_certified_route(&fixtures::unit_square::<Rational>()), Err(Error::NoEssentialCuts));
    }

    #[test]
    fn route_bends_around_reflex_vertices() {
        let u = fixtures::fix_u::<Rational>();
        let route = route_through(&u, &[p("0.5", "2.5"), p("2.5", "2.5")]).unwrap();
        assert_eq!(route.waypoints(), &[p("0.5", "2.5"), p("1", "1"), p("2", "1"), p("2.5", "2.5")]);
        assert!(PolyPath::new(&u, route.waypoints().to_vec()).is_ok());
    }
}
