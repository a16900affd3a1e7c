//! The n_gamma divisibility law, density certificates, and multiplicity scans.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::format_rational;
use crate::algebra::{common_basis, DivisorP1, Place, Rational};
use crate::elliptic::{FFPoint, SurfaceModel};
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::table::{assemble, Partial, PullbackSequence, SectionPair};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawViolation {
    pub place: Place,
    pub n: u32,
    pub n_gamma: u32,
    /// Whether the place was in the support at `n`.
    pub in_support: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub base_gcd: DivisorP1,
    #[serde(with = "place_map")]
    pub n_gamma: BTreeMap<Place, u32>,
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub density_lower_bound: Rational,
    pub stable_primes: Vec<u32>,
    pub exceptional_primes: Vec<u32>,
    pub violations: Vec<LawViolation>,
    /// Diagonal GCD divisors `GCD([n]P1, [n]P2)` for `n = 1..`.
    pub diagonal: Vec<DivisorP1>,
    pub bad_places: DivisorP1,
    pub n_max: u32,
    pub prime_max: u32,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn de_rational<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    crate::algebra::parse_rational(&s).map_err(serde::de::Error::custom)
}

mod place_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::algebra::Place;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        place: Place,
        n_gamma: u32,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Place, u32>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|(place, n)| Entry {
                place: place.clone(),
                n_gamma: *n,
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Place, u32>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?
            .into_iter()
            .map(|e| (e.place, e.n_gamma))
            .collect())
    }
}

pub fn primes_up_to(n: u32) -> Vec<u32> {
    (2..=n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

/// Density of the integers divisible by none of `ns`, by inclusion-exclusion.
pub fn density_avoiding(ns: &[u32]) -> Rational {
    let mut minimal: Vec<u32> = ns.iter().copied().filter(|&n| n > 0).collect();
    minimal.sort_unstable();
    minimal.dedup();
    let minimal: Vec<u32> = minimal
        .iter()
        .copied()
        .filter(|&n| !minimal.iter().any(|&m| m < n && n % m == 0))
        .collect();
    // signed sum over lcms of subsets, merged by lcm value
    let mut terms: BTreeMap<BigInt, i64> = BTreeMap::new();
    terms.insert(BigInt::one(), 1);
    for &a in &minimal {
        let a = BigInt::from(a);
        let mut next = terms.clone();
        for (l, c) in &terms {
            *next.entry(l.lcm(&a)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        terms = next;
    }
    terms
        .into_iter()
        .fold(Rational::zero(), |acc, (l, c)| acc + Rational::new(BigInt::from(c), l))
}

/// Scans `GCD([n]P1, [n]P2)` for `n <= max(n_max, prime_max)`.
pub fn stability_scan(
    pair: &SectionPair,
    n_max: u32,
    prime_max: u32,
    limits: &Limits,
) -> std::result::Result<StabilityReport, Partial<StabilityReport>> {
    let fail = |error: Error| Partial {
        partial: empty_report(n_max, prime_max),
        error,
    };
    if !pair.is_untranslated() {
        return Err(fail(Error::DegenerateInput("stability scan needs Q1 = Q2 = O")));
    }
    if n_max == 0 {
        return Err(fail(Error::DegenerateInput("n_max must be at least 1")));
    }
    let reach = n_max.max(prime_max) as usize;
    let (s1, s2) = rayon::join(
        || PullbackSequence::compute(&pair.e1, &pair.p1, &pair.q1, reach, limits),
        || PullbackSequence::compute(&pair.e2, &pair.p2, &pair.q2, reach, limits),
    );
    let (s1, s2) = match (s1, s2) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Err(fail(e)),
    };
    let table = assemble(&s1, &s2, reach as u32, true);
    if let Some(row) = table.rows.iter().find(|r| r.divisor.is_none()) {
        return Err(fail(Error::IdenticallyZeroSection {
            index: row.zero_section,
        }));
    }
    let diagonal: Vec<DivisorP1> = table.rows.iter().map(|r| r.divisor.clone().unwrap()).collect();
    let report = analyze(&diagonal, n_max, prime_max, table.bad_places);
    match s1.truncated.or(s2.truncated) {
        None => Ok(report),
        Some(error) => Err(Partial { partial: report, error }),
    }
}

fn empty_report(n_max: u32, prime_max: u32) -> StabilityReport {
    StabilityReport {
        base_gcd: DivisorP1::zero(),
        n_gamma: BTreeMap::new(),
        density_lower_bound: Rational::one(),
        stable_primes: Vec::new(),
        exceptional_primes: Vec::new(),
        violations: Vec::new(),
        diagonal: Vec::new(),
        bad_places: DivisorP1::zero(),
        n_max,
        prime_max,
    }
}

/// Derives n_gamma, the divisibility-law check and prime classification from
/// the diagonal divisors `diagonal[n - 1] = GCD([n]P1, [n]P2)`.
pub fn analyze(diagonal: &[DivisorP1], n_max: u32, prime_max: u32, bad_places: DivisorP1) -> StabilityReport {
    let mut report = empty_report(n_max, prime_max);
    report.bad_places = bad_places;
    if diagonal.is_empty() {
        return report;
    }
    let fam = common_basis(diagonal);
    let law_span = (n_max as usize).min(diagonal.len());
    let mut places: Vec<(Place, Vec<i64>)> = fam
        .basis
        .iter()
        .enumerate()
        .map(|(k, b)| (Place::Finite(b.clone()), fam.rows.iter().map(|r| r[k]).collect()))
        .collect();
    places.push((Place::Infinity, fam.inf.clone()));
    for (place, mults) in &places {
        if mults[0] > 0 {
            // base places must stay in the support for every n
            for (i, &m) in mults[..law_span].iter().enumerate() {
                if m == 0 {
                    report.violations.push(LawViolation {
                        place: place.clone(),
                        n: i as u32 + 1,
                        n_gamma: 1,
                        in_support: false,
                    });
                }
            }
            continue;
        }
        let Some(first) = mults[..law_span].iter().position(|&m| m > 0) else {
            continue;
        };
        let ng = first as u32 + 1;
        report.n_gamma.insert(place.clone(), ng);
        for (i, &m) in mults[..law_span].iter().enumerate() {
            let n = i as u32 + 1;
            let in_support = m > 0;
            if in_support != (n % ng == 0) {
                report.violations.push(LawViolation {
                    place: place.clone(),
                    n,
                    n_gamma: ng,
                    in_support,
                });
            }
        }
    }
    let ngs: Vec<u32> = report.n_gamma.values().copied().collect();
    report.density_lower_bound = density_avoiding(&ngs);
    report.base_gcd = diagonal[0].clone();
    for q in primes_up_to(prime_max.min(diagonal.len() as u32)) {
        if diagonal[q as usize - 1] == report.base_gcd {
            report.stable_primes.push(q);
        } else {
            report.exceptional_primes.push(q);
        }
    }
    report.diagonal = diagonal.to_vec();
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityBound {
    pub place: Place,
    pub max_mult: i64,
    pub argmax_n: u32,
}

/// Per-place maximum of `ord(sigma_{[n]P}^* Q)` over `n_min..=n_max`.
pub fn multiplicity_bound_scan_range(
    e: &SurfaceModel,
    p: &FFPoint,
    q: &FFPoint,
    n_min: u32,
    n_max: u32,
    limits: &Limits,
) -> Result<Vec<MultiplicityBound>> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::DegenerateInput("multiplicity scan range must satisfy 1 <= n_min <= n_max"));
    }
    let seq = PullbackSequence::compute(e, p, q, n_max as usize, limits)?;
    if let Some(err) = seq.truncated {
        return Err(err);
    }
    let mut divisors = Vec::new();
    for n in n_min..=n_max {
        match seq.get(n as usize) {
            Some(pb) => divisors.push((n, pb.divisor.clone())),
            None => return Err(Error::IdenticallyZeroSection { index: None }),
        }
    }
    let ds: Vec<DivisorP1> = divisors.iter().map(|(_, d)| d.clone()).collect();
    let fam = common_basis(&ds);
    let mut out = Vec::new();
    let columns = fam
        .basis
        .iter()
        .enumerate()
        .map(|(k, b)| (Place::Finite(b.clone()), fam.rows.iter().map(|r| r[k]).collect::<Vec<_>>()))
        .chain(std::iter::once((Place::Infinity, fam.inf.clone())));
    for (place, col) in columns {
        let (idx, &max) = col
            .iter()
            .enumerate()
            .fold((0, &0), |best, (i, m)| if m > best.1 { (i, m) } else { best });
        if max > 0 {
            out.push(MultiplicityBound {
                place,
                max_mult: max,
                argmax_n: divisors[idx].0,
            });
        }
    }
    Ok(out)
}

pub fn multiplicity_bound_scan(
    e: &SurfaceModel,
    p: &FFPoint,
    q: &FFPoint,
    n_max: u32,
    limits: &Limits,
) -> Result<Vec<MultiplicityBound>> {
    multiplicity_bound_scan_range(e, p, q, 1, n_max, limits)
}

/// Looks up the bound at `place` in a scan over a (possibly finer) basis:
/// the largest value over the scan's places that divide `place`.
pub fn bound_at(scan: &[MultiplicityBound], place: &Place) -> Option<(i64, u32)> {
    scan.iter()
        .filter(|b| match (&b.place, place) {
            (Place::Infinity, Place::Infinity) => true,
            (Place::Finite(f), Place::Finite(g)) => g.exact_div(f).is_some(),
            _ => false,
        })
        .map(|b| (b.max_mult, b.argmax_n))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::Poly;

    #[test]
    fn density_examples() {
        assert_eq!(density_avoiding(&[]), Rational::one());
        assert_eq!(density_avoiding(&[6]), rat(5, 6));
        assert_eq!(density_avoiding(&[2, 4]), rat(1, 2));
        assert_eq!(density_avoiding(&[2, 3]), rat(1, 3));
        assert_eq!(density_avoiding(&[4, 6]), rat(2, 3));
    }

    #[test]
    fn density_matches_counting() {
        let sets: [&[u32]; 4] = [&[2, 3, 5], &[4, 6, 10], &[6, 9, 15, 35], &[12]];
        for ns in sets {
            let l: u32 = ns.iter().fold(1, |a, &b| a.lcm(&b));
            let count = (1..=l).filter(|n| ns.iter().all(|d| n % d != 0)).count();
            assert_eq!(density_avoiding(ns), rat(count as i64, l as i64), "{ns:?}");
        }
    }

    #[test]
    fn single_n_gamma_six() {
        let t = DivisorP1::finite_place(&Poly::from_ints(&[0, 1]), 1).unwrap();
        let diag: Vec<DivisorP1> = (1..=12).map(|n| if n % 6 == 0 { t.clone() } else { DivisorP1::zero() }).collect();
        let rep = analyze(&diag, 12, 11, DivisorP1::zero());
        assert_eq!(rep.density_lower_bound, rat(5, 6));
        assert_eq!(rep.stable_primes, vec![2, 3, 5, 7, 11]);
        assert!(rep.exceptional_primes.is_empty() && rep.violations.is_empty());
    }

    #[test]
    fn violations_are_reported() {
        let t = DivisorP1::finite_place(&Poly::from_ints(&[0, 1]), 1).unwrap();
        let diag: Vec<DivisorP1> = (1..=6).map(|n| if n == 2 || n == 6 { t.clone() } else { DivisorP1::zero() }).collect();
        let rep = analyze(&diag, 6, 5, DivisorP1::zero());
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].n, 4);
    }

    #[test]
    fn multiplicity_scan_on_running_example() {
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let p = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        let scan = multiplicity_bound_scan(&e, &p, &FFPoint::Identity, 10, &Limits::default()).unwrap();
        assert_eq!(bound_at(&scan, &Place::Infinity), Some((1, 2)));
        // Q = P: n = 1 is excluded, the scan from 2 is well defined
        assert!(multiplicity_bound_scan(&e, &p, &p, 4, &Limits::default()).is_err());
        assert!(multiplicity_bound_scan_range(&e, &p, &p, 2, 4, &Limits::default()).is_ok());
        let c = SurfaceModel::from_ints(&[], &[-2]).unwrap();
        let cp = FFPoint::from_polys(&c, Poly::from_ints(&[3]), Poly::from_ints(&[5])).unwrap();
        assert!(multiplicity_bound_scan(&c, &cp, &FFPoint::Identity, 6, &Limits::default()).unwrap().is_empty());
    }
}
