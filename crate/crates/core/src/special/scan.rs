//! Scans over rational parameters: simultaneous relations and height traces.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{rat_str, weil_height_q};
use crate::algebra::Rational;
use crate::elliptic::{FFPoint, SurfaceModel};
use crate::error::{Error, Result};
use crate::gcd::SectionPair;
use crate::limits::Limits;

use super::qcurve::{
    canonical_height_q, relation_search, specialize_curve, specialize_point_or_identity, MCap, QCurve,
    QPoint, DEFAULT_Q_DEPTH,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationWitness {
    #[serde(with = "rat_str")]
    pub t: Rational,
    pub m1: i64,
    pub m2: i64,
    pub h_base: f64,
    pub fiber_heights: (f64, f64),
}

/// All t = p/q in lowest terms with max(|p|, q) <= bound, ordered by height then value.
pub fn rationals_up_to_height(bound: u64) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(BigInt::from(0))];
    for q in 1..=bound {
        for p in 1..=bound {
            if p.gcd(&q) == 1 {
                let r = Rational::new(BigInt::from(p), BigInt::from(q));
                out.push(r.clone());
                out.push(-r);
            }
        }
    }
    sort_by_height(&mut out);
    out
}

fn sort_by_height(v: &mut [Rational]) {
    v.sort_by(|a, b| {
        let key = |r: &Rational| r.numer().magnitude().max(r.denom().magnitude()).clone();
        key(a).cmp(&key(b)).then_with(|| a.cmp(b))
    });
}

/// Largest integer B with log B <= cap.
fn height_bound(cap: f64) -> u64 {
    if !(cap >= 0.0) {
        return 0;
    }
    let mut b = cap.exp().floor() as u64;
    while b > 1 && (b as f64).ln() > cap {
        b -= 1;
    }
    while ((b + 1) as f64).ln() <= cap {
        b += 1;
    }
    b.max(1)
}

/// Fiber data for one side of a pair, or `None` on a bad fiber.
fn fiber(e: &SurfaceModel, p: &FFPoint, q: &FFPoint, t: &Rational) -> Result<Option<(QCurve, QPoint, QPoint)>> {
    match specialize_curve(e, t) {
        Ok(c) => Ok(Some((c, specialize_point_or_identity(p, t), specialize_point_or_identity(q, t)))),
        Err(Error::BadFiber(_)) => Ok(None),
        Err(err) => Err(err),
    }
}

fn witness_at(pair: &SectionPair, t: &Rational, limits: &Limits) -> Result<Option<RelationWitness>> {
    let (Some((c1, p1, q1)), Some((c2, p2, q2))) =
        (fiber(&pair.e1, &pair.p1, &pair.q1, t)?, fiber(&pair.e2, &pair.p2, &pair.q2, t)?)
    else {
        return Ok(None);
    };
    let Some(m1) = relation_search(&c1, &p1, &q1, MCap::Auto, limits)?.m else {
        return Ok(None);
    };
    let Some(m2) = relation_search(&c2, &p2, &q2, MCap::Auto, limits)?.m else {
        return Ok(None);
    };
    let h1 = canonical_height_q(&c1, &p1, DEFAULT_Q_DEPTH, limits)?.value;
    let h2 = canonical_height_q(&c2, &p2, DEFAULT_Q_DEPTH, limits)?.value;
    Ok(Some(RelationWitness {
        t: t.clone(),
        m1,
        m2,
        h_base: weil_height_q(Some(t)),
        fiber_heights: (h1, h2),
    }))
}

/// Rational t with h(t) <= cap where both `[m_i] P_i = Q_i` hold on the fibers.
pub fn simultaneous_relation_scan(pair: &SectionPair, t_height_cap: f64, limits: &Limits) -> Result<Vec<RelationWitness>> {
    let ts = rationals_up_to_height(height_bound(t_height_cap));
    let found: Vec<Option<RelationWitness>> =
        ts.par_iter().map(|t| witness_at(pair, t, limits)).collect::<Result<_>>()?;
    let mut out: Vec<RelationWitness> = found.into_iter().flatten().collect();
    for w in &out {
        if !verify_witness(pair, w)? {
            return Err(Error::DegenerateInput("relation witness failed exact re-verification"));
        }
    }
    out.sort_by(|a, b| {
        a.h_base
            .partial_cmp(&b.h_base)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.t.cmp(&b.t))
    });
    Ok(out)
}

/// Re-checks `[m_i] P_i = Q_i` at the witness fiber by double-and-add.
pub fn verify_witness(pair: &SectionPair, w: &RelationWitness) -> Result<bool> {
    for (e, p, q, m) in [(&pair.e1, &pair.p1, &pair.q1, w.m1), (&pair.e2, &pair.p2, &pair.q2, w.m2)] {
        let Some((c, pt, qt)) = fiber(e, p, q, &w.t)? else {
            return Ok(false);
        };
        if c.scalar_mul(m, &pt)? != qt {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    #[serde(with = "rat_str")]
    pub t: Rational,
    pub h_base: f64,
    pub fiber_height: Option<f64>,
    pub fiber_error: Option<f64>,
    /// `None` on bad fibers and where h(t) = 0.
    pub ratio: Option<f64>,
    pub marker: Option<String>,
}

/// ĥ(P_t) / h(t) along a list of parameters.
pub fn fiber_height_trace(
    e: &SurfaceModel,
    p: &FFPoint,
    t_list: &[Rational],
    depth: u32,
    limits: &Limits,
) -> Result<Vec<TraceRow>> {
    e.check(p)?;
    t_list
        .par_iter()
        .map(|t| {
            let h_base = weil_height_q(Some(t));
            let c = match specialize_curve(e, t) {
                Ok(c) => c,
                Err(Error::BadFiber(_)) => {
                    return Ok(TraceRow {
                        t: t.clone(),
                        h_base,
                        fiber_height: None,
                        fiber_error: None,
                        ratio: None,
                        marker: Some("bad_fiber".into()),
                    })
                }
                Err(err) => return Err(err),
            };
            let h = canonical_height_q(&c, &specialize_point_or_identity(p, t), depth, limits)?;
            Ok(TraceRow {
                t: t.clone(),
                h_base,
                fiber_height: Some(h.value),
                fiber_error: Some(h.error),
                ratio: (h_base > 0.0).then(|| h.value / h_base),
                marker: None,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::Poly;
    use crate::gcd::relation_locus;

    fn running_pair(q: impl Fn(&SurfaceModel, &FFPoint) -> FFPoint) -> SectionPair {
        let e1 = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p1 = FFPoint::from_polys(&e1, Poly::zero(), Poly::one()).unwrap();
        let e2 = SurfaceModel::from_ints(&[0, 1], &[4]).unwrap();
        let p2 = FFPoint::from_polys(&e2, Poly::zero(), Poly::from_ints(&[2])).unwrap();
        let (q1, q2) = (q(&e1, &p1), q(&e2, &p2));
        SectionPair::new(e1, p1, q1, e2, p2, q2, true).unwrap()
    }

    #[test]
    fn farey_enumeration() {
        let r = rationals_up_to_height(height_bound(3f64.ln()));
        // 0, +-1, +-2, +-1/2, +-3, +-3/2, +-1/3, +-2/3
        assert_eq!(r.len(), 15);
        assert_eq!(r[..3], [int(-1), int(0), int(1)]);
        assert!(r.windows(2).all(|w| weil_height_q(Some(&w[0])) <= weil_height_q(Some(&w[1]))));
        assert_eq!(height_bound(0.0), 1);
    }

    #[test]
    fn doubled_sections_are_witnesses_everywhere() {
        let pair = running_pair(|e, p| e.double(p).unwrap());
        let l = Limits::default();
        let ws = simultaneous_relation_scan(&pair, 5f64.ln(), &l).unwrap();
        let ts = rationals_up_to_height(5);
        let good: Vec<_> = ts
            .iter()
            .filter(|t| !pair.e1.disc().eval(t).is_zero() && !pair.e2.disc().eval(t).is_zero())
            .collect();
        assert_eq!(ws.len(), good.len());
        for w in &ws {
            // torsion of order 3 turns [2]P into -P
            assert!(w.m1 == 2 || w.m1 == -1);
            assert!(w.m2 == 2 || w.m2 == -1);
            assert!(verify_witness(&pair, w).unwrap());
        }
        assert!(ws.iter().filter(|w| w.m1 == 2 && w.m2 == 2).count() >= good.len() - 1);
    }

    #[test]
    fn constant_non_torsion_sections_give_no_witnesses() {
        let e1 = SurfaceModel::from_ints(&[], &[-2]).unwrap();
        let p1 = FFPoint::from_polys(&e1, Poly::from_ints(&[3]), Poly::from_ints(&[5])).unwrap();
        let e2 = SurfaceModel::from_ints(&[-2], &[]).unwrap();
        let p2 = FFPoint::from_polys(&e2, Poly::from_ints(&[2]), Poly::from_ints(&[2])).unwrap();
        let pair = SectionPair::untranslated(e1, p1, e2, p2).unwrap();
        let ws = simultaneous_relation_scan(&pair, 3f64.ln(), &Limits::default()).unwrap();
        assert!(ws.is_empty());
    }

    #[test]
    fn torsion_witnesses_match_relation_loci() {
        let pair = running_pair(|_, _| FFPoint::Identity);
        let ws = simultaneous_relation_scan(&pair, 4f64.ln(), &Limits::default()).unwrap();
        let torsion_at = |e: &SurfaceModel, p: &FFPoint, t: &Rational| {
            (1..=12).any(|m| {
                relation_locus(e, p, &FFPoint::Identity, m)
                    .map(|l| l.polynomial.eval(t) == int(0))
                    .unwrap_or(false)
            })
        };
        for t in rationals_up_to_height(4) {
            if pair.e1.disc().eval(&t) == int(0) || pair.e2.disc().eval(&t) == int(0) {
                continue;
            }
            let expect = torsion_at(&pair.e1, &pair.p1, &t) && torsion_at(&pair.e2, &pair.p2, &t);
            assert_eq!(ws.iter().any(|w| w.t == t), expect, "t = {t}");
        }
        let w0 = ws.iter().find(|w| w.t == int(0)).unwrap();
        assert_eq!((w0.m1, w0.m2), (3, 3));
        assert_eq!(w0.fiber_heights, (0.0, 0.0));
    }

    #[test]
    fn trace_examples() {
        let l = Limits::default();
        let e = SurfaceModel::from_ints(&[], &[-2]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::from_ints(&[3]), Poly::from_ints(&[5])).unwrap();
        let ts: Vec<Rational> = (2..6).map(int).collect();
        let rows = fiber_height_trace(&e, &p, &ts, 5, &l).unwrap();
        assert!(rows.windows(2).all(|w| w[0].fiber_height == w[1].fiber_height));

        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let tors = FFPoint::from_polys(&e, Poly::from_ints(&[-1]), Poly::zero());
        assert!(tors.is_err());
        let e = SurfaceModel::from_ints(&[0, 1], &[1, 1]).unwrap();
        let tors = FFPoint::from_polys(&e, Poly::from_ints(&[-1]), Poly::zero()).unwrap();
        let ts: Vec<Rational> = (-3..4).map(int).collect();
        let rows = fiber_height_trace(&e, &tors, &ts, 5, &l).unwrap();
        assert!(rows.iter().any(|r| r.marker.as_deref() == Some("bad_fiber")));
        for r in rows.iter().filter(|r| r.marker.is_none()) {
            assert_eq!(r.fiber_height, Some(0.0));
            assert!(r.ratio.map_or(true, |x| x == 0.0));
        }
    }
}
