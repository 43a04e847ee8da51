//! Cuts, pockets and essential cuts of simple polygons, with a certifier for
//! visibility paths and an independent sampling oracle to cross-check it.
//!
//! Every algorithm is generic over [`Scalar`]; the aliases at the crate root
//! fix the scalar to the exact [`Rational`] type that the certification
//! pipeline relies on.

pub mod certify;
pub mod cuts;
pub mod error;
pub mod fixtures;
pub mod funnel;
pub mod gen;
pub mod geom;
pub mod io;
pub mod polygon;
pub mod rational;
pub mod scalar;
pub mod visibility;

pub use error::{Error, Result};
pub use rational::Rational;
pub use scalar::Scalar;

pub type PointQ = geom::Point<Rational>;
pub type SegmentQ = geom::Segment<Rational>;
pub type PolygonQ = polygon::Polygon<Rational>;
pub type CutQ = cuts::Cut<Rational>;
pub type PolyPathQ = certify::PolyPath<Rational>;

pub type PointF = geom::Point<f64>;
pub type PolygonF = polygon::Polygon<f64>;
