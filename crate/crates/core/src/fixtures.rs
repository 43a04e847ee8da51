//! Small named polygons used throughout the tests and the CLI demos.

use crate::geom::Point;
use crate::polygon::Polygon;
use crate::scalar::Scalar;

fn build<T: Scalar>(coords: &[(i64, i64)]) -> Polygon<T> {
    Polygon::validate(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).expect("fixture is valid")
}

/// L-shape with one reflex vertex at (1,1); star-shaped, kernel `[0,1]^2`.
pub fn fix_l<T: Scalar>() -> Polygon<T> {
    build(&[(0, 0), (0, 2), (1, 2), (1, 1), (2, 1), (2, 0)])
}

/// U-shape with reflex vertices (1,1) and (2,1); not star-shaped.
pub fn fix_u<T: Scalar>() -> Polygon<T> {
    build(&[(0, 0), (0, 3), (1, 3), (1, 1), (2, 1), (2, 3), (3, 3), (3, 0)])
}

pub fn unit_square<T: Scalar>() -> Polygon<T> {
    build(&[(0, 0), (0, 1), (1, 1), (1, 0)])
}
