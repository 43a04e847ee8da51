use std::fmt::Write;

use crate::certify::{CoverageReport, PolyPath, Verdict};
use crate::cuts::Cut;
use crate::geom::Point;
use crate::polygon::Polygon;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle<T> {
    pub cut_color: String,
    pub path_color: String,
    pub essential_only: bool,
    pub show_pockets: bool,
    /// Pixels per unit; `None` fits the polygon into 800 pixels.
    pub scale: Option<T>,
}

impl<T> Default for RenderStyle<T> {
    fn default() -> Self {
        RenderStyle {
            cut_color: "red".into(),
            path_color: "blue".into(),
            essential_only: false,
            show_pockets: false,
            scale: None,
        }
    }
}

/// Extra marks drawn over the figure.
#[derive(Clone, Copy, Debug)]
pub enum Overlay<'a, T> {
    None,
    /// First hit points of the path on each cut.
    Verdict(&'a Verdict<T>),
    /// Uncovered oracle samples, as crosses.
    Report(&'a CoverageReport<T>),
}

const MARGIN: f64 = 20.0;
const FIT: f64 = 800.0;

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn map<T: Scalar>(&self, p: &Point<T>) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (MARGIN + (x - self.x0) * self.scale, MARGIN + (self.y1 - y) * self.scale)
    }

    fn pair<T: Scalar>(&self, p: &Point<T>) -> String {
        let (x, y) = self.map(p);
        format!("{},{}", num(x), num(y))
    }
}

fn num(v: f64) -> String {
    let text = format!("{v:.3}");
    let text = text.trim_end_matches('0').trim_end_matches('.');
    if text == "-0" {
        "0".into()
    } else {
        text.into()
    }
}

fn escape(text: &str) -> String {
    text.chars().filter(|c| c.is_ascii_alphanumeric() || *c == '#').collect()
}

/// SVG figure: polygon outline in black, essential cuts in the cut colour,
/// redundant cuts dashed gray, the path in the path colour, and the chosen
/// overlay. The output depends only on the inputs.
pub fn render_svg<T: Scalar>(
    poly: &Polygon<T>,
    cuts: &[Cut<T>],
    path: Option<&PolyPath<T>>,
    overlay: Overlay<'_, T>,
    style: &RenderStyle<T>,
) -> String {
    let (lo, hi) = poly.bbox();
    let (x0, y0) = lo.to_f64();
    let (x1, y1) = hi.to_f64();
    let extent = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let scale = style.scale.as_ref().map_or(FIT / extent, |s| s.to_f64_lossy());
    let frame = Frame { x0, y1, scale };
    let width = num((x1 - x0) * scale + 2.0 * MARGIN);
    let height = num((y1 - y0) * scale + 2.0 * MARGIN);
    let cut_color = escape(&style.cut_color);
    let path_color = escape(&style.path_color);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if style.show_pockets {
        for cut in cuts.iter().filter(|c| c.is_essential()) {
            let pts: Vec<String> = cut.pocket.region.iter().map(|p| frame.pair(p)).collect();
            let _ = writeln!(svg, r#"<polygon points="{}" fill="{cut_color}" fill-opacity="0.12" stroke="none"/>"#, pts.join(" "));
        }
    }
    let outline: Vec<String> = poly.vertices().iter().map(|p| frame.pair(p)).collect();
    let _ = writeln!(svg, r#"<polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, outline.join(" "));
    let mut ordered: Vec<&Cut<T>> = cuts.iter().filter(|c| !c.is_essential()).collect();
    ordered.extend(cuts.iter().filter(|c| c.is_essential()));
    for cut in ordered {
        let (ax, ay) = frame.map(&cut.v);
        let (bx, by) = frame.map(&cut.w);
        let coords = format!(r#"x1="{}" y1="{}" x2="{}" y2="{}""#, num(ax), num(ay), num(bx), num(by));
        if cut.is_essential() {
            let _ = writeln!(svg, r#"<line {coords} stroke="{cut_color}" stroke-width="2"/>"#);
        } else if !style.essential_only {
            let _ = writeln!(svg, r#"<line {coords} stroke="gray" stroke-width="1" stroke-dasharray="4 3"/>"#);
        }
    }
    if let Some(path) = path {
        if path.is_point() {
            let (x, y) = frame.map(&path.waypoints()[0]);
            let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="4" fill="{path_color}"/>"#, num(x), num(y));
        } else {
            let pts: Vec<String> = path.waypoints().iter().map(|p| frame.pair(p)).collect();
            let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="{path_color}" stroke-width="2"/>"#, pts.join(" "));
        }
    }
    match overlay {
        Overlay::None => {}
        Overlay::Verdict(verdict) => {
            for hit in verdict.per_cut.iter().filter_map(|c| c.first_hit_point.as_ref()) {
                let (x, y) = frame.map(hit);
                let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, num(x), num(y));
            }
        }
        Overlay::Report(report) => {
            for s in &report.uncovered {
                let (x, y) = frame.map(&s.point);
                let _ = writeln!(
                    svg,
                    r#"<path class="uncovered" d="M{} {}L{} {}M{} {}L{} {}" stroke="darkorange" stroke-width="1.5"/>"#,
                    num(x - 3.0),
                    num(y - 3.0),
                    num(x + 3.0),
                    num(y + 3.0),
                    num(x - 3.0),
                    num(y + 3.0),
                    num(x + 3.0),
                    num(y - 3.0)
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{coverage_oracle, make_certified_route, SamplingConfig};
    use crate::cuts::{classified_cuts, essential_cuts};
    use crate::fixtures;
    use crate::Rational;

    #[test]
    fn fix_u_figure() {
        let u = fixtures::fix_u::<Rational>();
        let route = make_certified_route(&u).unwrap();
        let svg = render_svg(&u, &essential_cuts(&u), Some(&route), Overlay::None, &RenderStyle::default());
        assert_eq!(svg.matches(r#"stroke="red""#).count(), 2);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches(r#"stroke="blue""#).count(), 1);
        let all = render_svg(&u, &classified_cuts(&u), Some(&route), Overlay::None, &RenderStyle::default());
        assert_eq!(all.matches("stroke-dasharray").count(), 2);
        assert_eq!(all, render_svg(&u, &classified_cuts(&u), Some(&route), Overlay::None, &RenderStyle::default()));
    }

    #[test]
    fn convex_outline_only() {
        let sq = fixtures::unit_square::<Rational>();
        let svg = render_svg(&sq, &[], None, Overlay::None, &RenderStyle::default());
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(!svg.contains("<line") && !svg.contains("<polyline") && !svg.contains("<circle"));
    }

    #[test]
    fn uncovered_samples_are_marked() {
        let u = fixtures::fix_u::<Rational>();
        let short = PolyPath::new(&u, vec![Point::parse("0.5", "0.5").unwrap(), Point::parse("1.5", "0.5").unwrap()]).unwrap();
        let report = coverage_oracle(&u, &short, &SamplingConfig::with_pitch(Rational::parse_decimal("0.25").unwrap(), 0)).unwrap();
        let svg = render_svg(&u, &essential_cuts(&u), Some(&short), Overlay::Report(&report), &RenderStyle::default());
        assert_eq!(svg.matches(r#"class="uncovered""#).count(), report.uncovered.len());
        assert!(!report.uncovered.is_empty());
    }
}
