//! Section pairs, GCD divisors of their multiples, and degree tables.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{divisor_min, divisor_sup, DivisorP1};
use crate::elliptic::{naive_height_ff, FFPoint, SurfaceModel};
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::pullback::{zero_section_pullback_detailed, Pullback};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionPair {
    pub e1: SurfaceModel,
    pub p1: FFPoint,
    pub q1: FFPoint,
    pub e2: SurfaceModel,
    pub p2: FFPoint,
    pub q2: FFPoint,
    /// Independence of P1 and P2 is the caller's claim; it is never verified.
    pub independence_asserted: bool,
}

impl SectionPair {
    pub fn new(
        e1: SurfaceModel,
        p1: FFPoint,
        q1: FFPoint,
        e2: SurfaceModel,
        p2: FFPoint,
        q2: FFPoint,
        independence_asserted: bool,
    ) -> Result<Self> {
        for (e, pts) in [(&e1, [&p1, &q1]), (&e2, [&p2, &q2])] {
            for p in pts {
                e.check(p)?;
            }
        }
        Ok(SectionPair {
            e1,
            p1,
            q1,
            e2,
            p2,
            q2,
            independence_asserted,
        })
    }

    /// Pair with Q1 = Q2 = O.
    pub fn untranslated(e1: SurfaceModel, p1: FFPoint, e2: SurfaceModel, p2: FFPoint) -> Result<Self> {
        Self::new(e1, p1, FFPoint::Identity, e2, p2, FFPoint::Identity, true)
    }

    pub fn is_untranslated(&self) -> bool {
        self.q1.is_identity() && self.q2.is_identity()
    }

    fn side(&self, i: u8) -> (&SurfaceModel, &FFPoint, &FFPoint) {
        if i == 1 {
            (&self.e1, &self.p1, &self.q1)
        } else {
            (&self.e2, &self.p2, &self.q2)
        }
    }
}

/// `GCD([n1] P1 - Q1, [n2] P2 - Q2)`.
pub fn gcd_of_points(pair: &SectionPair, n1: i64, n2: i64) -> Result<DivisorP1> {
    let mut ds = Vec::with_capacity(2);
    for (i, n) in [(1u8, n1), (2u8, n2)] {
        let (e, p, q) = pair.side(i);
        let r = e.add_unchecked(&e.scalar_mul_unchecked(n, p), &q.neg());
        let pb = zero_section_pullback_detailed(e, &r).map_err(|err| tag(err, i))?;
        ds.push(pb.divisor);
    }
    divisor_min(&ds[0], &ds[1])
}

fn tag(err: Error, i: u8) -> Error {
    match err {
        Error::IdenticallyZeroSection { .. } => Error::IdenticallyZeroSection { index: Some(i) },
        other => other,
    }
}

/// Pullbacks of `[n]P - Q` for `n = 1..=n_max`, stopping early at the degree cap.
#[derive(Clone, Debug)]
pub struct PullbackSequence {
    /// `entries[n - 1]` is `None` when `[n]P = Q` identically.
    pub entries: Vec<Option<Pullback>>,
    pub truncated: Option<Error>,
}

impl PullbackSequence {
    pub fn compute(e: &SurfaceModel, p: &FFPoint, q: &FFPoint, n_max: usize, limits: &Limits) -> Result<Self> {
        e.check(p)?;
        e.check(q)?;
        let mut diffs = Vec::with_capacity(n_max);
        let mut truncated = None;
        let mut cur = FFPoint::Identity;
        let neg_q = q.neg();
        for _ in 0..n_max {
            cur = e.add_unchecked(&cur, p);
            let h = naive_height_ff(&cur);
            if let Err(err) = limits.check_degree(h) {
                truncated = Some(err);
                break;
            }
            diffs.push(e.add_unchecked(&cur, &neg_q));
        }
        let entries = diffs
            .par_iter()
            .map(|r| match zero_section_pullback_detailed(e, r) {
                Ok(pb) => Ok(Some(pb)),
                Err(Error::IdenticallyZeroSection { .. }) => Ok(None),
                Err(err) => Err(err),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PullbackSequence { entries, truncated })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&Pullback> {
        self.entries.get(n - 1).and_then(|e| e.as_ref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdRow {
    pub n1: u32,
    pub n2: u32,
    /// `None` marks a row where `[n_i] P_i = Q_i` identically.
    pub divisor: Option<DivisorP1>,
    pub degree: Option<i64>,
    /// Which side was identically the zero section, for marked rows.
    pub zero_section: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdReport {
    pub rows: Vec<GcdRow>,
    pub bad_places: DivisorP1,
    pub n_max: u32,
    pub diagonal_only: bool,
}

impl GcdReport {
    pub fn max_degree(&self, n_range: std::ops::RangeInclusive<u32>) -> Option<i64> {
        self.rows
            .iter()
            .filter(|r| n_range.contains(&r.n1) && n_range.contains(&r.n2))
            .filter_map(|r| r.degree)
            .max()
    }

    pub fn row(&self, n1: u32, n2: u32) -> Option<&GcdRow> {
        self.rows.iter().find(|r| r.n1 == n1 && r.n2 == n2)
    }

    /// True when the upper half of the n-range reaches a larger degree than
    /// the lower half; evidence against the asserted independence.
    pub fn degree_growth_flag(&self) -> bool {
        let top = self.rows.iter().map(|r| r.n1.max(r.n2)).max().unwrap_or(0);
        if top < 2 {
            return false;
        }
        let half = top / 2;
        let lo = self.max_degree(1..=half).unwrap_or(0);
        let hi = self
            .rows
            .iter()
            .filter(|r| r.n1.max(r.n2) > half)
            .filter_map(|r| r.degree)
            .max()
            .unwrap_or(0);
        hi > lo
    }
}

/// A computation that stopped at a resource cap, with what was finished.
#[derive(Clone, Debug, PartialEq)]
pub struct Partial<T> {
    pub partial: T,
    pub error: Error,
}

/// All GCD rows for `1 <= n1, n2 <= n_max` (or the diagonal).
pub fn gcd_degree_table(
    pair: &SectionPair,
    n_max: u32,
    diagonal_only: bool,
    limits: &Limits,
) -> std::result::Result<GcdReport, Partial<GcdReport>> {
    let wrap = |error: Error| Partial {
        partial: GcdReport {
            rows: Vec::new(),
            bad_places: DivisorP1::zero(),
            n_max,
            diagonal_only,
        },
        error,
    };
    if n_max == 0 {
        return Err(wrap(Error::DegenerateInput("n_max must be at least 1")));
    }
    let (s1, s2) = rayon::join(
        || PullbackSequence::compute(&pair.e1, &pair.p1, &pair.q1, n_max as usize, limits),
        || PullbackSequence::compute(&pair.e2, &pair.p2, &pair.q2, n_max as usize, limits),
    );
    let (s1, s2) = match (s1, s2) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Err(wrap(e)),
    };
    let report = assemble(&s1, &s2, n_max, diagonal_only);
    match s1.truncated.or(s2.truncated) {
        None => Ok(report),
        Some(error) => Err(Partial {
            partial: report,
            error,
        }),
    }
}

/// Builds rows from precomputed sequences, covering only indices both reach.
pub(crate) fn assemble(s1: &PullbackSequence, s2: &PullbackSequence, n_max: u32, diagonal_only: bool) -> GcdReport {
    let reach = s1.len().min(s2.len()) as u32;
    let keys: Vec<(u32, u32)> = if diagonal_only {
        (1..=reach).map(|n| (n, n)).collect()
    } else {
        let (r1, r2) = (s1.len() as u32, s2.len() as u32);
        (1..=r1).flat_map(|a| (1..=r2).map(move |b| (a, b))).collect()
    };
    let rows: Vec<GcdRow> = keys
        .par_iter()
        .map(|&(n1, n2)| {
            let (a, b) = (s1.get(n1 as usize), s2.get(n2 as usize));
            match (a, b) {
                (Some(a), Some(b)) => {
                    let d = divisor_min(&a.divisor, &b.divisor).expect("pullbacks are effective");
                    GcdRow {
                        n1,
                        n2,
                        degree: Some(d.degree()),
                        divisor: Some(d),
                        zero_section: None,
                    }
                }
                (a, _) => GcdRow {
                    n1,
                    n2,
                    divisor: None,
                    degree: None,
                    zero_section: Some(if a.is_none() { 1 } else { 2 }),
                },
            }
        })
        .collect();
    let bads: Vec<DivisorP1> = s1
        .entries
        .iter()
        .chain(&s2.entries)
        .flatten()
        .map(|pb| pb.bad_places.clone())
        .collect();
    let bad_places = divisor_sup(&bads);
    let bad_places = DivisorP1::from_basis_unchecked(
        bad_places.finite_terms().map(|(p, _)| (p.clone(), 1)),
        bad_places.inf_mult().min(1),
    );
    GcdReport {
        rows,
        bad_places,
        n_max,
        diagonal_only,
    }
}

/// Per-place supremum over every row of the report.
pub fn bounding_divisor(report: &GcdReport) -> DivisorP1 {
    let ds: Vec<DivisorP1> = report.rows.iter().filter_map(|r| r.divisor.clone()).collect();
    divisor_sup(&ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    pub(crate) fn running_pair() -> SectionPair {
        let e1 = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p1 = FFPoint::from_polys(&e1, Poly::zero(), Poly::one()).unwrap();
        let e2 = SurfaceModel::from_ints(&[0, 1], &[4]).unwrap();
        let p2 = FFPoint::from_polys(&e2, Poly::zero(), Poly::from_ints(&[2])).unwrap();
        SectionPair::untranslated(e1, p1, e2, p2).unwrap()
    }

    #[test]
    fn growth_flag_separates_dependent_pairs() {
        let l = Limits::default();
        let rep = gcd_degree_table(&running_pair(), 12, true, &l).unwrap();
        assert!(!rep.degree_growth_flag());
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        let same = SectionPair::untranslated(e.clone(), p.clone(), e, p).unwrap();
        assert!(gcd_degree_table(&same, 12, true, &l).unwrap().degree_growth_flag());
    }

    #[test]
    fn gcd_examples() {
        let pair = running_pair();
        assert_eq!(gcd_of_points(&pair, 2, 2).unwrap(), DivisorP1::infinity(1));
        assert!(gcd_of_points(&pair, 1, 1).unwrap().is_zero());

        let e = SurfaceModel::from_ints(&[], &[1]).unwrap();
        let t = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        let tors = SectionPair::untranslated(e.clone(), t.clone(), e, t).unwrap();
        assert_eq!(
            gcd_of_points(&tors, 3, 1),
            Err(Error::IdenticallyZeroSection { index: Some(1) })
        );
    }

    #[test]
    fn table_and_bound() {
        let pair = running_pair();
        let rep = gcd_degree_table(&pair, 6, true, &Limits::default()).unwrap();
        assert_eq!(rep.rows.len(), 6);
        let bound = bounding_divisor(&rep);
        for r in &rep.rows {
            assert!(r.degree.unwrap() <= bound.degree());
        }
        let one = gcd_degree_table(&pair, 1, false, &Limits::default()).unwrap();
        assert_eq!(one.rows.len(), 1);
        assert_eq!(one.rows[0].degree, Some(gcd_of_points(&pair, 1, 1).unwrap().degree()));
        let full = gcd_degree_table(&pair, 3, false, &Limits::default()).unwrap();
        assert_eq!(full.rows.len(), 9);
        assert_eq!(full.row(2, 3).unwrap().divisor.as_ref().unwrap(), &gcd_of_points(&pair, 2, 3).unwrap());
    }

    #[test]
    fn cap_returns_partial_rows() {
        let pair = running_pair();
        let limits = Limits {
            degree_cap: 40,
            ..Limits::default()
        };
        let err = gcd_degree_table(&pair, 12, true, &limits).unwrap_err();
        assert!(matches!(err.error, Error::ResourceCap { .. }));
        assert!(!err.partial.rows.is_empty() && err.partial.rows.len() < 12);
    }

    #[test]
    fn bounding_examples() {
        let row = |d: DivisorP1| GcdRow {
            n1: 1,
            n2: 1,
            degree: Some(d.degree()),
            divisor: Some(d),
            zero_section: None,
        };
        let rep = |rows| GcdReport {
            rows,
            bad_places: DivisorP1::zero(),
            n_max: 2,
            diagonal_only: true,
        };
        assert!(bounding_divisor(&rep(vec![row(DivisorP1::zero())])).is_zero());
        assert_eq!(
            bounding_divisor(&rep(vec![row(DivisorP1::infinity(1)), row(DivisorP1::infinity(2))])),
            DivisorP1::infinity(2)
        );
        let t = DivisorP1::finite_place(&Poly::from_ints(&[0, 1]), 1).unwrap();
        let t1 = DivisorP1::finite_place(&Poly::from_ints(&[-1, 1]), 1).unwrap();
        assert_eq!(bounding_divisor(&rep(vec![row(t.clone()), row(t1.clone())])), t.add(&t1));
    }
}
