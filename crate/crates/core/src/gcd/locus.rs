//! Relation loci `[m]P = Q` and height statistics of their roots.

use serde::{Deserialize, Serialize};

use crate::algebra::rational::ln_abs;
use crate::algebra::{squarefree_decompose, DivisorP1, Poly};
use crate::elliptic::{FFPoint, SurfaceModel};
use crate::error::Result;
use crate::numeric::roots::aberth_roots;

use super::pullback::meet_divisor;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationLocus {
    pub divisor: DivisorP1,
    /// Finite part of the locus as a single polynomial.
    pub polynomial: Poly,
}

/// Parameters where `[m]P = Q`: the meet divisor and its finite polynomial.
pub fn relation_locus(e: &SurfaceModel, p: &FFPoint, q: &FFPoint, m: i64) -> Result<RelationLocus> {
    let divisor = meet_divisor(e, p, q, m)?;
    let polynomial = divisor.finite_polynomial();
    Ok(RelationLocus { divisor, polynomial })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusStats {
    /// log M(f) / deg f for the primitive integer multiple of f.
    pub mean_height: f64,
    /// Largest log max(1, |alpha|) over the complex roots.
    pub max_height: f64,
    pub degree: usize,
    /// Bounds on the root-approximation error in the two heights.
    pub mean_error: f64,
    pub max_error: f64,
    pub converged: bool,
}

/// Mahler-measure root statistics of a nonzero polynomial.
pub fn locus_height_stats(f: &Poly) -> Result<LocusStats> {
    let mut stats = LocusStats {
        mean_height: 0.0,
        max_height: 0.0,
        degree: 0,
        mean_error: 0.0,
        max_error: 0.0,
        converged: true,
    };
    let mut log_m = 0.0;
    let mut log_m_err = 0.0;
    for (g, mult) in squarefree_decompose(f)? {
        let coeffs = g.primitive_integer_coeffs();
        let approx = aberth_roots(coeffs);
        stats.converged &= approx.converged;
        let mut part = ln_abs(coeffs.last().unwrap());
        let mut part_err = 0.0;
        for (&(re, im), &r) in approx.roots.iter().zip(&approx.radii) {
            let m = re.hypot(im);
            let h = m.max(1.0).ln();
            let err = if m + r <= 1.0 { 0.0 } else { r / (m - r).max(1.0) };
            part += h;
            part_err += err;
            stats.max_height = stats.max_height.max(h);
            stats.max_error = stats.max_error.max(err);
        }
        log_m += mult as f64 * part;
        log_m_err += mult as f64 * part_err;
        stats.degree += mult as usize * g.deg0();
    }
    if stats.degree > 0 {
        stats.mean_height = log_m / stats.degree as f64;
        stats.mean_error = log_m_err / stats.degree as f64;
    }
    Ok(stats)
}
