//! Elliptic surfaces over Q(t) in short Weierstrass form.

pub mod curve;
pub mod divpoly;
pub mod height;

pub use curve::{discriminant, naive_height_ff, FFPoint, SurfaceModel};
pub use divpoly::{division_poly, DivisionPoly, DivisionPolys, XPoly};
pub use height::{canonical_height_ff, torsion_order_ff, HeightEstimate};
