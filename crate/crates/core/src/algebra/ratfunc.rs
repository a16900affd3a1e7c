//! Elements of Q(t) as reduced quotients with monic denominator.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{gcd_cofactors, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// Reduces `num / den` to lowest terms.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateInput("zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.leading_coeff();
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = gcd_cofactors(num.prim(), den.prim());
        Self::from_coprime_parts(num.content(), g.f_cof, den.content(), g.g_cof)
    }

    /// `(cn * n) / (cd * d)` with `n`, `d` coprime primitive integer polynomials.
    fn from_coprime_parts(
        cn: &Rational,
        n: Vec<num_bigint::BigInt>,
        cd: &Rational,
        d: Vec<num_bigint::BigInt>,
    ) -> Self {
        let lead = Rational::from_integer(d.last().unwrap().clone());
        let den = Poly::from_primitive(lead.recip(), d);
        let num = Poly::from_primitive(cn / (cd * lead), n);
        RationalFunction { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    /// Monic denominator.
    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg num, deg den): the Weil height on Q(t).
    pub fn height(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    /// Order of vanishing at infinity: deg den - deg num.
    pub fn ord_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.den.deg0() as i64 - self.num.deg0() as i64)
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the numerator
        let g = gcd_cofactors(self.den.prim(), other.den.prim());
        let b1 = Poly::from_primitive(Rational::one(), g.f_cof);
        let d1 = Poly::from_primitive(Rational::one(), g.g_cof);
        let gp = Poly::from_primitive(Rational::one(), g.gcd);
        let num = self
            .num
            .scale(&self.den.content().recip())
            .mul(&d1)
            .add(&other.num.scale(&other.den.content().recip()).mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let h = gcd_cofactors(num.prim(), gp.prim());
        let den = Poly::from_primitive(Rational::one(), h.g_cof).mul(&b1).mul(&d1);
        let numr = Poly::from_primitive(num.content().clone(), h.f_cof);
        let lead = den.leading_coeff();
        RationalFunction {
            num: numr.scale(&lead.recip()),
            den: den.monic(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // (a/b)(c/d) = (a/g1 * c/g2) / (b/g2 * d/g1), g1 = gcd(a, d), g2 = gcd(c, b)
        let (a1, d1) = cancel(&self.num, &other.den);
        let (c1, b1) = cancel(&other.num, &self.den);
        let num = a1.mul(&c1);
        let den = b1.mul(&d1);
        let lead = den.leading_coeff();
        RationalFunction {
            num: num.scale(&lead.recip()),
            den: den.monic(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn square(&self) -> Self {
        RationalFunction {
            num: self.num.mul(&self.num),
            den: self.den.mul(&self.den),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("inverse of zero"));
        }
        let lead = self.num.leading_coeff();
        Ok(RationalFunction {
            num: self.den.scale(&lead.recip()),
            den: self.num.monic(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Value at a rational parameter; `None` when the denominator vanishes.
    pub fn eval(&self, r: &Rational) -> Option<Rational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(r) / d)
        }
    }
}

/// Returns `(a / g, b / g)` with `g = gcd(a, b)`, `b` nonzero.
fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = gcd_cofactors(a.prim(), b.prim());
    (
        Poly::from_primitive(a.content().clone(), g.f_cof),
        Poly::from_primitive(b.content().clone(), g.g_cof),
    )
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
