//! Text formats for polygons and paths, JSON reports, and SVG rendering.
//!
//! A polygon or path file holds a count on its first line followed by one
//! `x y` pair per line. Coordinates are decimals or fractions `p/q`. Blank
//! lines and lines starting with `#` are skipped.

mod svg;

pub use svg::{render_svg, Overlay, RenderStyle};

use serde::Serialize;

use crate::certify::PolyPath;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polygon::Polygon;
use crate::scalar::Scalar;

fn parse_points<T: Scalar>(text: &str) -> Result<Vec<Point<T>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count();
    let (count_line, count_text) = lines.next().ok_or(Error::Parse { line: 1, message: "missing count".into() })?;
    let count: usize = count_text.parse().map_err(|_| Error::Parse {
        line: count_line,
        message: format!("expected a count, found {count_text:?}"),
    })?;
    let mut points = Vec::with_capacity(count);
    for k in 0..count {
        let Some((line, l)) = lines.next() else {
            return Err(Error::Parse {
                line: last_line + 1,
                message: format!("expected {count} points, found {k}"),
            });
        };
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(Error::Parse { line, message: format!("expected two coordinates, found {l:?}") });
        };
        let point = Point::parse(x, y).ok_or_else(|| Error::Parse { line, message: format!("bad coordinate in {l:?}") })?;
        points.push(point);
    }
    if let Some((line, l)) = lines.next() {
        return Err(Error::Parse { line, message: format!("unexpected trailing content {l:?}") });
    }
    Ok(points)
}

/// Parses and validates a polygon. Counterclockwise input is reversed.
pub fn parse_polygon<T: Scalar>(text: &str) -> Result<Polygon<T>> {
    Polygon::validate(parse_points(text)?)
}

/// Parses a path. Containment in a polygon is checked by the consumer.
pub fn parse_path<T: Scalar>(text: &str) -> Result<PolyPath<T>> {
    PolyPath::new_unchecked(parse_points(text)?)
}

fn format_points<T: Scalar>(points: &[Point<T>]) -> String {
    let mut out = format!("{}\n", points.len());
    for p in points {
        out.push_str(&format!("{} {}\n", p.x.exact_text(), p.y.exact_text()));
    }
    out
}

/// Lossless text form accepted by [`parse_polygon`].
pub fn format_polygon<T: Scalar>(poly: &Polygon<T>) -> String {
    format_points(poly.vertices())
}

/// Lossless text form accepted by [`parse_path`].
pub fn format_path<T: Scalar>(path: &PolyPath<T>) -> String {
    format_points(path.waypoints())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<S: Serialize>(value: &S) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}
