//! Canonical height on the generic fiber by the doubling limit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{Limits, TORSION_CAP};

use super::curve::{naive_height_ff, FFPoint, SurfaceModel};

/// A doubling-limit height value with its successive-difference error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightEstimate {
    pub value: f64,
    pub error: f64,
    pub depth: u32,
    /// Estimates at depths 0..=depth (empty when the torsion short-circuit fired).
    pub estimates: Vec<f64>,
    /// Order found by the torsion short-circuit, if any.
    pub torsion_order: Option<u32>,
}

impl HeightEstimate {
    pub fn exact_zero(order: Option<u32>) -> Self {
        HeightEstimate {
            value: 0.0,
            error: 0.0,
            depth: 0,
            estimates: Vec::new(),
            torsion_order: order,
        }
    }
}

/// Smallest k <= 12 with [k]P = O on the generic fiber.
pub fn torsion_order_ff(e: &SurfaceModel, p: &FFPoint) -> Result<Option<u32>> {
    e.check(p)?;
    let mut cur = FFPoint::Identity;
    for k in 1..=TORSION_CAP {
        cur = e.add_unchecked(&cur, p);
        if cur.is_identity() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `naive_height_ff([2^depth] P) / 4^depth`, with exact 0 for torsion.
pub fn canonical_height_ff(e: &SurfaceModel, p: &FFPoint, depth: u32, limits: &Limits) -> Result<HeightEstimate> {
    if depth == 0 {
        return Err(Error::DegenerateInput("height depth must be at least 1"));
    }
    if let Some(k) = torsion_order_ff(e, p)? {
        return Ok(HeightEstimate::exact_zero(Some(k)));
    }
    let mut cur = p.clone();
    let mut estimates = vec![naive_height_ff(&cur) as f64];
    for k in 1..=depth {
        cur = e.double_unchecked(&cur);
        let h = naive_height_ff(&cur);
        limits.check_degree(h)?;
        estimates.push(h as f64 / 4f64.powi(k as i32));
    }
    let value = estimates[depth as usize];
    let error = tail_error(&estimates);
    Ok(HeightEstimate {
        value,
        error,
        depth,
        estimates,
        torsion_order: None,
    })
}

/// Tail bound for the doubling limit. Each step `4^k (e_k - e_{k-1})` samples
/// `h(2Q) - 4 h(Q)`; with C the largest sample seen, the remaining tail is at
/// most C / (3 * 4^depth).
pub(crate) fn tail_error(estimates: &[f64]) -> f64 {
    let depth = estimates.len() - 1;
    let c = (1..=depth)
        .map(|k| (estimates[k] - estimates[k - 1]).abs() * 4f64.powi(k as i32))
        .fold(0.0, f64::max);
    c / (3.0 * 4f64.powi(depth as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    #[test]
    fn running_example_is_positive_and_stable() {
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        let h = canonical_height_ff(&e, &p, 4, &Limits::default()).unwrap();
        assert!(h.value > 0.0);
        assert!((h.estimates[4] - h.estimates[3]).abs() <= h.error + 1e-12);
        assert!((h.estimates[3] - h.estimates[2]).abs() <= 4.0 * h.error + 0.1);
    }

    #[test]
    fn torsion_sections_are_exactly_zero() {
        let e = SurfaceModel::from_ints(&[0, 1], &[1, 1]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::from_ints(&[-1]), Poly::zero()).unwrap();
        let h = canonical_height_ff(&e, &p, 4, &Limits::default()).unwrap();
        assert_eq!(h.value, 0.0);
        assert_eq!(h.torsion_order, Some(2));
        let c = SurfaceModel::from_ints(&[], &[1]).unwrap();
        let q = FFPoint::from_polys(&c, Poly::zero(), Poly::one()).unwrap();
        assert_eq!(canonical_height_ff(&c, &q, 4, &Limits::default()).unwrap().value, 0.0);
    }

    #[test]
    fn constant_point_on_constant_surface_has_height_zero() {
        // (3, 5) on y^2 = x^3 - 2 is non-torsion but constant: every multiple has constant x
        let e = SurfaceModel::from_ints(&[], &[-2]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::from_ints(&[3]), Poly::from_ints(&[5])).unwrap();
        let h = canonical_height_ff(&e, &p, 4, &Limits::default()).unwrap();
        assert_eq!(h.value, 0.0);
        assert_eq!(h.torsion_order, None);
    }

    #[test]
    fn cap_is_enforced() {
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        let tight = Limits {
            degree_cap: 10,
            ..Limits::default()
        };
        assert!(matches!(canonical_height_ff(&e, &p, 4, &tight), Err(Error::ResourceCap { .. })));
    }
}
