//! Short Weierstrass surfaces y^2 = x^3 + A(t) x + B(t) and their sections.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::rational::int;
use crate::algebra::{Poly, RationalFunction};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    a: Poly,
    b: Poly,
    disc: Poly,
}

impl SurfaceModel {
    pub fn new(a: Poly, b: Poly) -> Result<Self> {
        let disc = discriminant(&a, &b);
        if disc.is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(SurfaceModel { a, b, disc })
    }

    pub fn from_ints(a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(a), Poly::from_ints(b))
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    /// -16 (4A^3 + 27B^2).
    pub fn disc(&self) -> &Poly {
        &self.disc
    }

    /// x^3 + A x + B evaluated at a rational function.
    pub fn rhs(&self, x: &RationalFunction) -> RationalFunction {
        let a = RationalFunction::from_poly(self.a.clone());
        let b = RationalFunction::from_poly(self.b.clone());
        x.square().add(&a).mul(x).add(&b)
    }

    pub fn contains(&self, p: &FFPoint) -> bool {
        match p {
            FFPoint::Identity => true,
            FFPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    pub fn check(&self, p: &FFPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// j = 1728 * 4A^3 / (4A^3 + 27B^2).
    pub fn j_invariant(&self) -> RationalFunction {
        let a3 = self.a.pow(3).scale(&int(4));
        let denom = a3.add(&self.b.pow(2).scale(&int(27)));
        RationalFunction::new(a3.scale(&int(1728)), denom).expect("nonsingular model")
    }

    pub fn is_isotrivial(&self) -> bool {
        self.j_invariant().is_constant()
    }

    pub fn neg(&self, p: &FFPoint) -> FFPoint {
        p.neg()
    }

    /// Chord-tangent addition; both inputs are validated against the curve.
    pub fn add(&self, p: &FFPoint, q: &FFPoint) -> Result<FFPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn sub(&self, p: &FFPoint, q: &FFPoint) -> Result<FFPoint> {
        self.add(p, &q.neg())
    }

    pub fn double(&self, p: &FFPoint) -> Result<FFPoint> {
        self.check(p)?;
        Ok(self.double_unchecked(p))
    }

    /// `[n] P` by double-and-add; negative `n` negates.
    pub fn scalar_mul(&self, n: i64, p: &FFPoint) -> Result<FFPoint> {
        self.check(p)?;
        Ok(self.scalar_mul_unchecked(n, p))
    }

    pub(crate) fn add_unchecked(&self, p: &FFPoint, q: &FFPoint) -> FFPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (FFPoint::Identity, _) => return q.clone(),
            (_, FFPoint::Identity) => return p.clone(),
            (FFPoint::Affine { x: x1, y: y1 }, FFPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if x1 == x2 {
            if y1 == y2 {
                return self.double_unchecked(p);
            }
            return FFPoint::Identity;
        }
        let lambda = y2.sub(y1).div(&x2.sub(x1)).expect("distinct x");
        let x3 = lambda.square().sub(x1).sub(x2);
        let y3 = lambda.mul(&x1.sub(&x3)).sub(y1);
        FFPoint::Affine { x: x3, y: y3 }
    }

    pub(crate) fn double_unchecked(&self, p: &FFPoint) -> FFPoint {
        let (x, y) = match p {
            FFPoint::Identity => return FFPoint::Identity,
            FFPoint::Affine { x, y } => (x, y),
        };
        if y.is_zero() {
            return FFPoint::Identity;
        }
        let a = RationalFunction::from_poly(self.a.clone());
        let num = x.square().scale(&int(3)).add(&a);
        let lambda = num.div(&y.scale(&int(2))).expect("y nonzero");
        let x3 = lambda.square().sub(&x.scale(&int(2)));
        let y3 = lambda.mul(&x.sub(&x3)).sub(y);
        FFPoint::Affine { x: x3, y: y3 }
    }

    pub(crate) fn scalar_mul_unchecked(&self, n: i64, p: &FFPoint) -> FFPoint {
        if n < 0 {
            return self.scalar_mul_unchecked(n.checked_neg().expect("scalar overflow"), p).neg();
        }
        let mut acc = FFPoint::Identity;
        let mut k = n as u64;
        let mut base = p.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double_unchecked(&base);
            }
        }
        acc
    }

    /// Multiples `[1]P, ..., [n]P` by repeated addition.
    pub fn multiples(&self, p: &FFPoint, n: usize) -> Result<Vec<FFPoint>> {
        self.check(p)?;
        let mut out = Vec::with_capacity(n);
        let mut cur = FFPoint::Identity;
        for _ in 0..n {
            cur = self.add_unchecked(&cur, p);
            out.push(cur.clone());
        }
        Ok(out)
    }
}

/// -16 (4A^3 + 27B^2).
pub fn discriminant(a: &Poly, b: &Poly) -> Poly {
    a.pow(3)
        .scale(&int(4))
        .add(&b.pow(2).scale(&int(27)))
        .scale(&int(-16))
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})*x + ({})", self.a, self.b)
    }
}

impl fmt::Debug for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurfaceModel[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceRepr {
    #[serde(rename = "A")]
    a: Poly,
    #[serde(rename = "B")]
    b: Poly,
}

impl Serialize for SurfaceModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SurfaceRepr {
            a: self.a.clone(),
            b: self.b.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SurfaceModel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SurfaceRepr::deserialize(d)?;
        SurfaceModel::new(r.a, r.b).map_err(serde::de::Error::custom)
    }
}

/// A point of the generic fiber, i.e. a section of the surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FFPoint {
    Identity,
    Affine { x: RationalFunction, y: RationalFunction },
}

impl FFPoint {
    /// Validated affine point.
    pub fn new(e: &SurfaceModel, x: RationalFunction, y: RationalFunction) -> Result<Self> {
        let p = FFPoint::Affine { x, y };
        e.check(&p)?;
        Ok(p)
    }

    pub fn from_polys(e: &SurfaceModel, x: Poly, y: Poly) -> Result<Self> {
        Self::new(e, x.into(), y.into())
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, FFPoint::Identity)
    }

    pub fn x(&self) -> Option<&RationalFunction> {
        match self {
            FFPoint::Identity => None,
            FFPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&RationalFunction> {
        match self {
            FFPoint::Identity => None,
            FFPoint::Affine { y, .. } => Some(y),
        }
    }

    pub fn neg(&self) -> FFPoint {
        match self {
            FFPoint::Identity => FFPoint::Identity,
            FFPoint::Affine { x, y } => FFPoint::Affine {
                x: x.clone(),
                y: y.neg(),
            },
        }
    }

    /// Both coordinates are constants.
    pub fn is_constant(&self) -> bool {
        match self {
            FFPoint::Identity => true,
            FFPoint::Affine { x, y } => x.is_constant() && y.is_constant(),
        }
    }
}

/// Weil height of x(P): max(deg num, deg den), and 0 for the identity.
pub fn naive_height_ff(p: &FFPoint) -> u64 {
    match p {
        FFPoint::Identity => 0,
        FFPoint::Affine { x, .. } => x.height() as u64,
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Literal(String),
    Affine {
        x_num: Poly,
        #[serde(default = "Poly::one")]
        x_den: Poly,
        y_num: Poly,
        #[serde(default = "Poly::one")]
        y_den: Poly,
    },
}

/// `"identity"` or `{x_num, x_den, y_num, y_den}`; curve membership is
/// checked by whoever pairs the point with a surface.
impl Serialize for FFPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FFPoint::Identity => PointRepr::Literal("identity".into()),
            FFPoint::Affine { x, y } => PointRepr::Affine {
                x_num: x.numer().clone(),
                x_den: x.denom().clone(),
                y_num: y.numer().clone(),
                y_den: y.denom().clone(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FFPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match PointRepr::deserialize(d)? {
            PointRepr::Literal(s) if s == "identity" => Ok(FFPoint::Identity),
            PointRepr::Literal(s) => Err(D::Error::custom(format!("expected \"identity\", found {s:?}"))),
            PointRepr::Affine { x_num, x_den, y_num, y_den } => Ok(FFPoint::Affine {
                x: RationalFunction::new(x_num, x_den).map_err(D::Error::custom)?,
                y: RationalFunction::new(y_num, y_den).map_err(D::Error::custom)?,
            }),
        }
    }
}

impl fmt::Display for FFPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FFPoint::Identity => write!(f, "O"),
            FFPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for FFPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFPoint{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_ints(v)
    }

    fn running() -> (SurfaceModel, FFPoint) {
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        let pt = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
        (e, pt)
    }

    #[test]
    fn model_validation() {
        let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
        assert_eq!(e.disc(), &p(&[27, 0, 0, 4]).scale(&int(-16)));
        assert_eq!(SurfaceModel::from_ints(&[], &[]), Err(Error::SingularModel));
        assert_eq!(SurfaceModel::from_ints(&[-3], &[2]), Err(Error::SingularModel));
    }

    #[test]
    fn doubling_running_example() {
        let (e, pt) = running();
        let two = e.double(&pt).unwrap();
        assert_eq!(two.x().unwrap(), &RationalFunction::from_poly(Poly::monomial(rat(1, 4), 2)));
        assert_eq!(two.y().unwrap(), &RationalFunction::from_poly(p(&[8, 0, 0, 1]).scale(&rat(-1, 8))));
        assert_eq!(naive_height_ff(&two), 2);
        assert_eq!(naive_height_ff(&pt), 0);
        assert_eq!(naive_height_ff(&FFPoint::Identity), 0);
        assert_eq!(e.scalar_mul(2, &pt).unwrap(), two);
    }

    #[test]
    fn identity_and_inverse() {
        let (e, pt) = running();
        assert_eq!(e.add(&pt, &FFPoint::Identity).unwrap(), pt);
        assert_eq!(e.add(&pt, &pt.neg()).unwrap(), FFPoint::Identity);
        assert_eq!(e.scalar_mul(0, &pt).unwrap(), FFPoint::Identity);
        assert_eq!(e.scalar_mul(-3, &pt).unwrap(), e.scalar_mul(3, &pt).unwrap().neg());
        let off = FFPoint::Affine {
            x: RationalFunction::zero(),
            y: RationalFunction::zero(),
        };
        assert_eq!(e.add(&pt, &off), Err(Error::NotOnCurve));
    }

    #[test]
    fn two_torsion_section_doubles_to_identity() {
        // y^2 = x^3 + t x + (t + 1) has the section (-1, 0)
        let e = SurfaceModel::from_ints(&[0, 1], &[1, 1]).unwrap();
        let pt = FFPoint::from_polys(&e, p(&[-1]), Poly::zero()).unwrap();
        assert_eq!(e.double(&pt).unwrap(), FFPoint::Identity);
    }

    #[test]
    fn j_invariant_examples() {
        let (e, _) = running();
        let j = e.j_invariant();
        assert_eq!(j, RationalFunction::new(p(&[0, 0, 0, 6912]), p(&[27, 0, 0, 4])).unwrap());
        assert!(!e.is_isotrivial());
        assert!(SurfaceModel::from_ints(&[], &[1]).unwrap().is_isotrivial());
        let e6 = SurfaceModel::from_ints(&[], &[1, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(e6.j_invariant().is_zero() && e6.is_isotrivial());
    }

    #[test]
    fn isotriviality_is_twist_invariant() {
        let u = p(&[1, 1]);
        for (a, b) in [(p(&[0, 1]), p(&[1])), (p(&[1]), p(&[0, 0, 1])), (Poly::zero(), p(&[2, 1]))] {
            let e = SurfaceModel::new(a.clone(), b.clone()).unwrap();
            let tw = SurfaceModel::new(a.mul(&u.pow(4)), b.mul(&u.pow(6))).unwrap();
            assert_eq!(e.is_isotrivial(), tw.is_isotrivial());
            assert_eq!(e.j_invariant(), tw.j_invariant());
        }
    }

    #[test]
    fn multiples_agree_with_scalar_mul() {
        let (e, pt) = running();
        let ms = e.multiples(&pt, 7).unwrap();
        for (i, m) in ms.iter().enumerate() {
            assert_eq!(m, &e.scalar_mul((i + 1) as i64, &pt).unwrap());
            assert!(e.contains(m));
        }
    }

    #[test]
    fn linear_combinations() {
        let (e, pt) = running();
        for m in -3i64..=3 {
            for n in -3i64..=3 {
                let lhs = e.scalar_mul(m + n, &pt).unwrap();
                let rhs = e.add(&e.scalar_mul(m, &pt).unwrap(), &e.scalar_mul(n, &pt).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    /// Surface through (0, y1) and (1, y2): B = y1^2, A = y2^2 - 1 - y1^2.
    fn two_section_surface(y1: &[i64], y2: &[i64]) -> Option<(SurfaceModel, FFPoint, FFPoint)> {
        let (y1, y2) = (p(y1), p(y2));
        let b = y1.mul(&y1);
        let a = y2.mul(&y2).sub(&Poly::one()).sub(&b);
        let e = SurfaceModel::new(a, b).ok()?;
        let p1 = FFPoint::from_polys(&e, Poly::zero(), y1).ok()?;
        let p2 = FFPoint::from_polys(&e, Poly::one(), y2).ok()?;
        Some((e, p1, p2))
    }

    fn combo(e: &SurfaceModel, p1: &FFPoint, p2: &FFPoint, c: (i64, i64)) -> FFPoint {
        e.add(&e.scalar_mul(c.0, p1).unwrap(), &e.scalar_mul(c.1, p2).unwrap()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn associativity(
            y1 in prop::collection::vec(-3i64..=3, 1..3),
            y2 in prop::collection::vec(-3i64..=3, 1..3),
            cs in prop::collection::vec((-1i64..=1, -1i64..=1), 3),
        ) {
            let Some((e, p1, p2)) = two_section_surface(&y1, &y2) else { return Ok(()) };
            let [a, b, c] = [cs[0], cs[1], cs[2]].map(|k| combo(&e, &p1, &p2, k));
            let l = e.add(&e.add(&a, &b).unwrap(), &c).unwrap();
            let r = e.add(&a, &e.add(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(&l, &r);
            prop_assert!(e.contains(&l));
            let n = 3;
            let lhs = e.scalar_mul(n, &e.add(&a, &b).unwrap()).unwrap();
            let rhs = e.add(&e.scalar_mul(n, &a).unwrap(), &e.scalar_mul(n, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
