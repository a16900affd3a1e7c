//! Divisors on the projective t-line over a coprime basis.
//!
//! A finite place is a monic squarefree polynomial; it stands for the set of
//! its roots in Q-bar, all carrying the same multiplicity. Keeping the basis
//! pairwise coprime is enough for minima, orders and degrees, so nothing is
//! ever factored into irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::squarefree::{gcd_free_basis, squarefree_decompose};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Number of geometric points bundled in the place.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg0(),
            Place::Infinity => 1,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PlaceRepr {
    Infinity(String),
    Finite { basis_poly: Poly },
}

/// Finite places serialize as `{"basis_poly": [...]}`, infinity as `"inf"`.
impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Place::Infinity => PlaceRepr::Infinity("inf".into()),
            Place::Finite(p) => PlaceRepr::Finite { basis_poly: p.clone() },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match PlaceRepr::deserialize(d)? {
            PlaceRepr::Infinity(s) if s == "inf" => Ok(Place::Infinity),
            PlaceRepr::Infinity(s) => Err(serde::de::Error::custom(format!("unknown place {s:?}"))),
            PlaceRepr::Finite { basis_poly } => {
                if basis_poly.is_constant() {
                    return Err(serde::de::Error::custom("place polynomial must be nonconstant"));
                }
                Ok(Place::Finite(basis_poly.monic()))
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "(inf)"),
        }
    }
}

/// Equality is as divisors: two values written over different bases compare
/// equal when they agree at every point.
#[derive(Clone, Default)]
pub struct DivisorP1 {
    finite: BTreeMap<Poly, i64>,
    inf: i64,
}

impl DivisorP1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn infinity(mult: i64) -> Self {
        DivisorP1 {
            finite: BTreeMap::new(),
            inf: mult,
        }
    }

    /// `mult * (f)` for a nonconstant polynomial; `f` is reduced to its
    /// monic squarefree kernel's components.
    pub fn finite_place(f: &Poly, mult: i64) -> Result<Self> {
        Ok(Self::zeros_of(f)?.scaled(mult))
    }

    /// Divisor of zeros of a nonzero polynomial on the affine line.
    pub fn zeros_of(f: &Poly) -> Result<Self> {
        let mut d = Self::zero();
        for (g, m) in squarefree_decompose(f)? {
            d.finite.insert(g, m as i64);
        }
        Ok(d)
    }

    /// Assembles a divisor from arbitrary (possibly overlapping) terms.
    pub fn from_terms<I: IntoIterator<Item = (Place, i64)>>(terms: I) -> Result<Self> {
        let mut parts = Vec::new();
        for (place, m) in terms {
            match place {
                Place::Infinity => parts.push(Self::infinity(m)),
                Place::Finite(p) => parts.push(Self::finite_place(&p, m)?),
            }
        }
        Ok(parts.iter().fold(Self::zero(), |acc, d| acc.add(d)))
    }

    /// Builds directly from a coprime monic squarefree basis; zero
    /// multiplicities are dropped.
    pub(crate) fn from_basis_unchecked<I: IntoIterator<Item = (Poly, i64)>>(terms: I, inf: i64) -> Self {
        let finite = terms.into_iter().filter(|(_, m)| *m != 0).collect();
        DivisorP1 { finite, inf }
    }

    pub fn inf_mult(&self) -> i64 {
        self.inf
    }

    pub fn finite_terms(&self) -> impl Iterator<Item = (&Poly, i64)> {
        self.finite.iter().map(|(p, m)| (p, *m))
    }

    /// All places with nonzero multiplicity, finite ones first.
    pub fn terms(&self) -> Vec<(Place, i64)> {
        let mut out: Vec<(Place, i64)> = self
            .finite
            .iter()
            .map(|(p, m)| (Place::Finite(p.clone()), *m))
            .collect();
        if self.inf != 0 {
            out.push((Place::Infinity, self.inf));
        }
        out
    }

    pub fn support(&self) -> Vec<Place> {
        self.terms().into_iter().map(|(p, _)| p).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.finite.is_empty() && self.inf == 0
    }

    pub fn is_effective(&self) -> bool {
        self.inf >= 0 && self.finite.values().all(|&m| m >= 0)
    }

    /// Multiplicity of a basis element; zero when absent.
    pub fn mult_of(&self, place: &Place) -> i64 {
        match place {
            Place::Infinity => self.inf,
            Place::Finite(p) => self.finite.get(p).copied().unwrap_or(0),
        }
    }

    pub fn degree(&self) -> i64 {
        self.finite
            .iter()
            .map(|(p, m)| m * p.deg0() as i64)
            .sum::<i64>()
            + self.inf
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        DivisorP1 {
            finite: self.finite.iter().map(|(p, m)| (p.clone(), m * k)).collect(),
            inf: self.inf * k,
        }
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }

    pub fn add(&self, other: &Self) -> Self {
        combine(self, other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        combine(self, other, |a, b| a - b)
    }

    /// Finite part as the single polynomial prod p^m over positive terms.
    pub fn finite_polynomial(&self) -> Poly {
        self.finite
            .iter()
            .filter(|(_, m)| **m > 0)
            .fold(Poly::one(), |acc, (p, m)| acc.mul(&p.pow(*m as u32)))
    }

    /// Drops the given finite places (and infinity when asked).
    pub fn without(&self, excluded: &[Poly], drop_infinity: bool) -> Self {
        let mut out = self.clone();
        for e in excluded {
            out.finite.remove(e);
        }
        if drop_infinity {
            out.inf = 0;
        }
        out
    }
}

impl PartialEq for DivisorP1 {
    fn eq(&self, other: &Self) -> bool {
        if self.inf != other.inf {
            return false;
        }
        if self.finite == other.finite {
            return true;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for DivisorP1 {}

fn combine(a: &DivisorP1, b: &DivisorP1, op: impl Fn(i64, i64) -> i64) -> DivisorP1 {
    let fam = common_basis(&[a.clone(), b.clone()]);
    let terms = fam
        .basis
        .iter()
        .enumerate()
        .map(|(k, p)| (p.clone(), op(fam.rows[0][k], fam.rows[1][k])));
    DivisorP1::from_basis_unchecked(terms, op(fam.inf[0], fam.inf[1]))
}

/// A family of divisors written over one pairwise-coprime basis, zeros kept.
#[derive(Clone, Debug, PartialEq)]
pub struct RefinedFamily {
    pub basis: Vec<Poly>,
    /// `rows[i][k]` is the multiplicity of `basis[k]` in divisor `i`.
    pub rows: Vec<Vec<i64>>,
    pub inf: Vec<i64>,
}

impl RefinedFamily {
    pub fn divisor(&self, i: usize) -> DivisorP1 {
        DivisorP1::from_basis_unchecked(
            self.basis.iter().cloned().zip(self.rows[i].iter().copied()),
            self.inf[i],
        )
    }
}

/// Rewrites all divisors over a shared gcd-free basis.
pub fn common_basis(divisors: &[DivisorP1]) -> RefinedFamily {
    let basis = gcd_free_basis(divisors.iter().flat_map(|d| d.finite.keys()));
    let mut rows = Vec::with_capacity(divisors.len());
    for d in divisors {
        let mut row = vec![0i64; basis.len()];
        for (p, m) in &d.finite {
            let mut remaining = p.deg0();
            for (k, b) in basis.iter().enumerate() {
                if remaining == 0 {
                    break;
                }
                if b.deg0() <= remaining && p.exact_div(b).is_some() {
                    row[k] += m;
                    remaining -= b.deg0();
                }
            }
            debug_assert_eq!(remaining, 0, "basis must refine every input place");
        }
        rows.push(row);
    }
    RefinedFamily {
        basis,
        rows,
        inf: divisors.iter().map(|d| d.inf).collect(),
    }
}

/// The same divisors re-expressed over one shared pairwise-coprime basis.
pub fn coprime_refine(divisors: &[DivisorP1]) -> Vec<DivisorP1> {
    let fam = common_basis(divisors);
    (0..divisors.len()).map(|i| fam.divisor(i)).collect()
}

/// Zeros minus poles of a nonzero rational function, including infinity.
pub fn divisor_of(f: &RationalFunction) -> Result<DivisorP1> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("divisor of the zero function"));
    }
    let zeros = DivisorP1::zeros_of(f.numer())?;
    let poles = DivisorP1::zeros_of(f.denom())?;
    // numerator and denominator are coprime, so their bases are disjoint
    let mut finite = zeros.finite;
    for (p, m) in poles.finite {
        finite.insert(p, -m);
    }
    Ok(DivisorP1 {
        finite,
        inf: f.denom().deg0() as i64 - f.numer().deg0() as i64,
    })
}

/// Per-place minimum of two effective divisors.
pub fn divisor_min(d1: &DivisorP1, d2: &DivisorP1) -> Result<DivisorP1> {
    if !d1.is_effective() || !d2.is_effective() {
        return Err(Error::NotEffective);
    }
    Ok(combine(d1, d2, i64::min))
}

/// Per-place maximum over a family of divisors.
pub fn divisor_sup(divisors: &[DivisorP1]) -> DivisorP1 {
    if divisors.is_empty() {
        return DivisorP1::zero();
    }
    let fam = common_basis(divisors);
    let terms = fam.basis.iter().enumerate().map(|(k, p)| {
        (p.clone(), fam.rows.iter().map(|r| r[k]).max().unwrap_or(0))
    });
    let inf = fam.inf.iter().copied().max().unwrap_or(0);
    DivisorP1::from_basis_unchecked(terms, inf)
}

pub fn divisor_degree(d: &DivisorP1) -> i64 {
    d.degree()
}

/// `d1 <= d2` place by place.
pub fn divisor_le(d1: &DivisorP1, d2: &DivisorP1) -> bool {
    d2.sub(d1).is_effective()
}

impl fmt::Display for DivisorP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (place, m)) in terms.iter().enumerate() {
            let sep = match (i, *m < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}{}*{place}", m.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DivisorP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorP1[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    basis_poly: Poly,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct DivisorRepr {
    places: Vec<TermRepr>,
    inf_mult: i64,
}

impl Serialize for DivisorP1 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DivisorRepr {
            places: self
                .finite
                .iter()
                .map(|(p, m)| TermRepr {
                    basis_poly: p.clone(),
                    mult: *m,
                })
                .collect(),
            inf_mult: self.inf,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorP1 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DivisorRepr::deserialize(d)?;
        let mut terms: Vec<(Place, i64)> = repr
            .places
            .into_iter()
            .map(|p| (Place::Finite(p.basis_poly), p.mult))
            .collect();
        terms.push((Place::Infinity, repr.inf_mult));
        DivisorP1::from_terms(terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_ints(v)
    }

    fn place(v: &[i64], m: i64) -> DivisorP1 {
        DivisorP1::finite_place(&p(v), m).unwrap()
    }

    #[test]
    fn divisor_of_examples() {
        // 2t^2 / (t^3 + 8) = 2(t) - (t^3+8) + (inf)
        let f = RationalFunction::new(p(&[0, 0, 2]), p(&[8, 0, 0, 1])).unwrap();
        let d = divisor_of(&f).unwrap();
        // t^3 + 8 = (t+2)(t^2-2t+4) is squarefree, so it stays one place
        let expected = place(&[0, 1], 2).add(&place(&[8, 0, 0, 1], -1)).add(&DivisorP1::infinity(1));
        assert_eq!(d, expected);
        assert_eq!(d.degree(), 0);
        assert!(divisor_of(&RationalFunction::constant(int(5))).unwrap().is_zero());
        let t = RationalFunction::from_poly(p(&[0, 1]));
        assert_eq!(divisor_of(&t).unwrap(), place(&[0, 1], 1).add(&DivisorP1::infinity(-1)));
        assert!(divisor_of(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn refine_examples() {
        let out = coprime_refine(&[place(&[-1, 0, 1], 1), place(&[-1, 1], 1)]);
        let fam = common_basis(&out);
        assert_eq!(fam.basis, vec![p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(out[0], place(&[-1, 1], 1).add(&place(&[1, 1], 1)));

        let d = place(&[0, 0, 2, 1], 1); // t^2 (t + 2)
        assert_eq!(coprime_refine(&[d.clone()]), vec![d.clone()]);
        let fam = common_basis(&[d, place(&[0, 0, 0, 1], 1)]);
        assert_eq!(fam.basis, vec![p(&[0, 1]), p(&[2, 1])]);
        assert_eq!(fam.rows, vec![vec![2, 1], vec![3, 0]]);
    }

    #[test]
    fn min_and_degree_examples() {
        let d1 = place(&[0, 1], 2).add(&place(&[-1, 1], 1));
        let d2 = place(&[0, 1], 1).add(&place(&[1, 1], 3));
        assert_eq!(divisor_min(&d1, &d2).unwrap(), place(&[0, 1], 1));
        assert!(divisor_min(&d1, &DivisorP1::zero()).unwrap().is_zero());
        assert_eq!(divisor_min(&d1, &d1).unwrap(), d1);
        assert_eq!(divisor_min(&d1, &d2.neg()), Err(Error::NotEffective));

        assert_eq!(place(&[0, 1], 2).add(&DivisorP1::infinity(1)).degree(), 3);
        assert_eq!(DivisorP1::zero().degree(), 0);
        assert_eq!(place(&[1, 0, 1], 1).degree(), 2);
    }

    #[test]
    fn sup_is_per_place() {
        let rows = [DivisorP1::infinity(1), DivisorP1::infinity(2)];
        assert_eq!(divisor_sup(&rows), DivisorP1::infinity(2));
        let rows = [place(&[0, 1], 1), place(&[-1, 1], 1)];
        assert_eq!(divisor_sup(&rows), place(&[0, 1], 1).add(&place(&[-1, 1], 1)));
        assert!(divisor_sup(&[DivisorP1::zero()]).is_zero());
    }

    #[test]
    fn json_shape() {
        let d = place(&[0, 1], 2).add(&DivisorP1::infinity(1));
        let j = serde_json::to_string(&d).unwrap();
        assert_eq!(j, r#"{"places":[{"basis_poly":["0","1"],"mult":2}],"inf_mult":1}"#);
        let back: DivisorP1 = serde_json::from_str(&j).unwrap();
        assert_eq!(back, d);
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-4i64..=4, 1..5),
            prop::collection::vec(-4i64..=4, 1..5),
        )
            .prop_filter_map("nonzero", |(n, d)| {
                let f = RationalFunction::new(p(&n), p(&d)).ok()?;
                (!f.is_zero()).then_some(f)
            })
    }

    fn effective() -> impl Strategy<Value = DivisorP1> {
        prop::collection::vec((prop::collection::vec(-3i64..=3, 2..4), 0i64..4), 0..4).prop_filter_map(
            "nonconstant places",
            |terms| {
                let mut d = DivisorP1::zero();
                for (c, m) in terms {
                    let f = p(&c);
                    if f.is_constant() {
                        return None;
                    }
                    d = d.add(&DivisorP1::finite_place(&f, m).ok()?);
                }
                Some(d)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn divisor_of_is_a_homomorphism(f in small_rf(), g in small_rf()) {
            let df = divisor_of(&f).unwrap();
            let dg = divisor_of(&g).unwrap();
            prop_assert_eq!(divisor_of(&f.mul(&g)).unwrap(), df.add(&dg));
            prop_assert_eq!(divisor_of(&f.inv().unwrap()).unwrap(), df.neg());
            prop_assert_eq!(df.degree(), 0);
        }

        #[test]
        fn min_laws(a in effective(), b in effective()) {
            let m = divisor_min(&a, &b).unwrap();
            prop_assert_eq!(&m, &divisor_min(&b, &a).unwrap());
            prop_assert_eq!(divisor_min(&a, &a).unwrap(), a.clone());
            prop_assert!(m.degree() <= a.degree().min(b.degree()));
            prop_assert!(divisor_le(&m, &a) && divisor_le(&m, &b));
        }

        #[test]
        fn refinement_preserves_polynomial_data(a in effective(), b in effective()) {
            let out = coprime_refine(&[a.clone(), b.clone()]);
            prop_assert_eq!(out[0].finite_polynomial(), a.finite_polynomial());
            prop_assert_eq!(out[1].finite_polynomial(), b.finite_polynomial());
            let fam = common_basis(&out);
            for (i, x) in fam.basis.iter().enumerate() {
                for y in fam.basis.iter().skip(i + 1) {
                    prop_assert!(x.gcd(y).unwrap().is_one());
                }
            }
        }
    }
}
