//! Univariate polynomials over Q in content/primitive-part form.
//!
//! A nonzero polynomial is stored as `content * prim` where `prim` is a
//! primitive integer polynomial with positive leading coefficient. The form is
//! canonical, so structural equality is mathematical equality. Products of
//! primitive polynomials are primitive (Gauss), so multiplication never
//! needs a content computation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::modular::{self, GcdCofactors};
use super::rational::{format_rational, parse_rational, Rational};
use super::subresultant::gcd_subresultant;
use super::zpoly::{self, ZPoly};
use crate::error::{Error, Result};

/// Inputs at most this long go through the subresultant sequence; longer
/// ones use the multi-prime GCD.
const SUBRESULTANT_MAX_LEN: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    content: Rational,
    prim: ZPoly,
}

/// Exact polynomial in Q[t].
pub type RationalPolynomial = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly {
            content: Rational::zero(),
            prim: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            content: c,
            prim: vec![BigInt::one()],
        }
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Poly {
            content: Rational::one(),
            prim: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut prim = vec![BigInt::zero(); k + 1];
        prim[k] = BigInt::one();
        Poly { content: c, prim }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: ZPoly = coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        Self::from_scaled_ints(Rational::new(BigInt::one(), l), ints)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_scaled_ints(
            Rational::one(),
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    /// `scale * ints`, normalized.
    pub(crate) fn from_scaled_ints(scale: Rational, mut ints: ZPoly) -> Self {
        zpoly::trim(&mut ints);
        if ints.is_empty() || scale.is_zero() {
            return Self::zero();
        }
        let (g, prim) = zpoly::primitive(&ints);
        Poly {
            content: scale * Rational::from_integer(g),
            prim,
        }
    }

    /// Builds from an already primitive integer polynomial with positive lead.
    pub(crate) fn from_primitive(content: Rational, prim: ZPoly) -> Self {
        debug_assert!(prim.last().is_some_and(|c| c.is_positive()));
        if content.is_zero() {
            return Self::zero();
        }
        Poly { content, prim }
    }

    pub(crate) fn prim(&self) -> &[BigInt] {
        &self.prim
    }

    /// Rational content: `self = content * primitive_part`.
    pub fn content(&self) -> &Rational {
        &self.content
    }

    /// The primitive part as a polynomial with content 1.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Self::zero();
        }
        Poly {
            content: Rational::one(),
            prim: self.prim.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.prim.len() == 1 && self.content.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.prim.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.prim.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.prim.last() {
            Some(c) => &self.content * Rational::from_integer(c.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        match self.prim.get(i) {
            Some(c) => &self.content * Rational::from_integer(c.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.prim
            .iter()
            .map(|c| &self.content * Rational::from_integer(c.clone()))
            .collect()
    }

    /// Largest coefficient bit size of the primitive part plus the content size.
    pub fn bit_size(&self) -> u64 {
        zpoly::max_bits(&self.prim)
            + self.content.numer().bits().max(self.content.denom().bits())
    }

    pub fn monic(&self) -> Poly {
        match self.prim.last() {
            None => Self::zero(),
            Some(lc) => Poly {
                content: Rational::new(BigInt::one(), lc.clone()),
                prim: self.prim.clone(),
            },
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            content: -&self.content,
            prim: self.prim.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Poly {
            content: &self.content * c,
            prim: self.prim.clone(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (na, da) = (self.content.numer(), self.content.denom());
        let (nb, db) = (other.content.numer(), other.content.denom());
        let g = na.gcd(nb);
        let l = da.lcm(db);
        let fa = (na / &g) * (&l / da);
        let fb = (nb / &g) * (&l / db);
        let sum = zpoly::add(&zpoly::scale(&self.prim, &fa), &zpoly::scale(&other.prim, &fb));
        Self::from_scaled_ints(Rational::new(g, l), sum)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Poly {
            content: &self.content * &other.content,
            prim: zpoly::mul(&self.prim, &other.prim),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = zpoly::div_exact(&self.prim, &d.prim)?;
        Some(Poly::from_primitive(&self.content / &d.content, q))
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg0();
        let mut r = self.coeffs();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let dc = d.coeffs();
        let inv_lead = dc[dd].recip();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in dc.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Poly {
        Self::from_scaled_ints(self.content.clone(), zpoly::derivative(&self.prim))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        // homogeneous Horner on the integer primitive part
        let (n, d) = (x.numer(), x.denom());
        let deg = self.prim.len() - 1;
        let mut acc = self.prim[deg].clone();
        let mut dpow = BigInt::one();
        for i in (0..deg).rev() {
            dpow *= d;
            acc = acc * n + &self.prim[i] * &dpow;
        }
        &self.content * Rational::new(acc, dpow)
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Monic greatest common divisor. Fails only when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::DegenerateInput("gcd of two zero polynomials")),
            (true, false) => Ok(other.monic()),
            (false, true) => Ok(self.monic()),
            (false, false) => {
                let g = gcd_primitive(&self.prim, &other.prim);
                Ok(Poly::from_primitive(Rational::one(), g).monic())
            }
        }
    }

    /// Monic least common multiple of nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = gcd_cofactors(&self.prim, &other.prim);
        Poly::from_primitive(Rational::one(), zpoly::mul(&self.prim, &g.g_cof)).monic()
    }

    /// Integer coefficients of the primitive part (positive leading coefficient).
    pub fn primitive_integer_coeffs(&self) -> &[BigInt] {
        &self.prim
    }

    pub(crate) fn total_cmp(&self, other: &Poly) -> Ordering {
        self.prim
            .len()
            .cmp(&other.prim.len())
            .then_with(|| {
                for (a, b) in self.prim.iter().rev().zip(other.prim.iter().rev()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.content.cmp(&other.content))
    }

    /// Coefficient strings `"p/q"`, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(format_rational).collect()
    }

    pub fn parse_coeffs<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Parses a comma separated coefficient list such as `"0,1"` or `"1/2, -3"`.
    pub fn parse_list(s: &str) -> Result<Poly> {
        let items: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
        Self::parse_coeffs(&items)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Primitive gcd dispatch by input size.
pub(crate) fn gcd_primitive(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    if f.len().max(g.len()) <= SUBRESULTANT_MAX_LEN {
        gcd_subresultant(f, g)
    } else {
        modular::gcd_cofactors(f, g).gcd
    }
}

pub(crate) fn gcd_cofactors(f: &[BigInt], g: &[BigInt]) -> GcdCofactors {
    if f.len().max(g.len()) <= SUBRESULTANT_MAX_LEN {
        let gcd = gcd_subresultant(f, g);
        let f_cof = zpoly::div_exact(f, &gcd).expect("gcd divides input");
        let g_cof = zpoly::div_exact(g, &gcd).expect("gcd divides input");
        GcdCofactors { gcd, f_cof, g_cof }
    } else {
        modular::gcd_cofactors(f, g)
    }
}

/// Monic gcd computed by the subresultant sequence regardless of size.
pub fn poly_gcd_subresultant(f: &Poly, g: &Poly) -> Result<Poly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::DegenerateInput("gcd of two zero polynomials")),
        (true, false) => Ok(g.monic()),
        (false, true) => Ok(f.monic()),
        (false, false) => Ok(Poly::from_primitive(Rational::one(), gcd_subresultant(&f.prim, &g.prim)).monic()),
    }
}

/// Monic gcd computed by the multi-prime method regardless of size.
pub fn poly_gcd_modular(f: &Poly, g: &Poly) -> Result<Poly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::DegenerateInput("gcd of two zero polynomials")),
        (true, false) => Ok(g.monic()),
        (false, true) => Ok(f.monic()),
        (false, false) => {
            Ok(Poly::from_primitive(Rational::one(), modular::gcd_cofactors(&f.prim, &g.prim).gcd).monic())
        }
    }
}

/// Monic gcd of two rational polynomials.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    f.gcd(g)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = format_rational(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coef}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coef}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// A coefficient in a config file: an exact string or a plain integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<CoeffRepr>::deserialize(d)?;
        let strings: Vec<String> = items
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Text(s) => s,
                CoeffRepr::Int(i) => i.to_string(),
            })
            .collect();
        Poly::parse_coeffs(&strings).map_err(serde::de::Error::custom)
    }
}
