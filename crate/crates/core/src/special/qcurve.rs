//! Fibers over rational parameters and their Mordell-Weil arithmetic.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, int, rat_str, rational_bits, weil_height_q};
use crate::algebra::{Rational, RationalFunction};
use crate::elliptic::height::tail_error;
use crate::elliptic::{FFPoint, HeightEstimate, SurfaceModel};
use crate::error::{Error, Result};
use crate::limits::{Limits, TORSION_CAP};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QCurve {
    #[serde(with = "rat_str")]
    pub a: Rational,
    #[serde(with = "rat_str")]
    pub b: Rational,
    #[serde(with = "rat_str")]
    pub disc: Rational,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QPoint {
    Identity,
    Affine(
        #[serde(with = "rat_str")] Rational,
        #[serde(with = "rat_str")] Rational,
    ),
}

impl QPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        QPoint::Affine(x, y)
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        QPoint::Affine(int(x), int(y))
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, QPoint::Identity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            QPoint::Identity => None,
            QPoint::Affine(x, _) => Some(x),
        }
    }

    pub fn neg(&self) -> QPoint {
        match self {
            QPoint::Identity => QPoint::Identity,
            QPoint::Affine(x, y) => QPoint::Affine(x.clone(), -y),
        }
    }

    pub fn bits(&self) -> u64 {
        match self {
            QPoint::Identity => 0,
            QPoint::Affine(x, y) => rational_bits(x).max(rational_bits(y)),
        }
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Identity => write!(f, "O"),
            QPoint::Affine(x, y) => write!(f, "({}, {})", format_rational(x), format_rational(y)),
        }
    }
}

impl fmt::Debug for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoint{self}")
    }
}

impl QCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let disc = -int(16) * (int(4) * &a * &a * &a + int(27) * &b * &b);
        if disc.is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(QCurve { a, b, disc })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(int(a), int(b))
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        match p {
            QPoint::Identity => true,
            QPoint::Affine(x, y) => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    pub fn check(&self, p: &QPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn add(&self, p: &QPoint, q: &QPoint) -> Result<QPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn scalar_mul(&self, n: i64, p: &QPoint) -> Result<QPoint> {
        self.check(p)?;
        Ok(self.scalar_mul_unchecked(n, p))
    }

    pub(crate) fn add_unchecked(&self, p: &QPoint, q: &QPoint) -> QPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (QPoint::Identity, _) => return q.clone(),
            (_, QPoint::Identity) => return p.clone(),
            (QPoint::Affine(x1, y1), QPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        if x1 == x2 {
            if y1 == y2 {
                return self.double_unchecked(p);
            }
            return QPoint::Identity;
        }
        let lambda = (y2 - y1) / (x2 - x1);
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1;
        QPoint::Affine(x3, y3)
    }

    pub(crate) fn double_unchecked(&self, p: &QPoint) -> QPoint {
        let (x, y) = match p {
            QPoint::Identity => return QPoint::Identity,
            QPoint::Affine(x, y) => (x, y),
        };
        if y.is_zero() {
            return QPoint::Identity;
        }
        let lambda = (int(3) * x * x + &self.a) / (int(2) * y);
        let x3 = &lambda * &lambda - int(2) * x;
        let y3 = lambda * (x - &x3) - y;
        QPoint::Affine(x3, y3)
    }

    pub(crate) fn scalar_mul_unchecked(&self, n: i64, p: &QPoint) -> QPoint {
        if n < 0 {
            return self.scalar_mul_unchecked(-n, p).neg();
        }
        let mut acc = QPoint::Identity;
        let mut base = p.clone();
        let mut k = n as u64;
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
}

impl fmt::Display for QCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", format_rational(&self.a), format_rational(&self.b))
    }
}

impl fmt::Debug for QCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QCurve[{self}]")
    }
}

/// The fiber over `t = r`.
pub fn specialize_curve(e: &SurfaceModel, r: &Rational) -> Result<QCurve> {
    if e.disc().eval(r).is_zero() {
        return Err(Error::BadFiber(format_rational(r)));
    }
    QCurve::new(e.a().eval(r), e.b().eval(r))
}

/// The section evaluated at `t = r`; a vanishing denominator means the
/// section passes through the fiber's zero point there.
pub fn specialize_point(p: &FFPoint, r: &Rational) -> Result<QPoint> {
    match p {
        FFPoint::Identity => Ok(QPoint::Identity),
        FFPoint::Affine { x, y } => {
            let ev = |f: &RationalFunction| f.eval(r).ok_or_else(|| Error::SectionPole(format_rational(r)));
            Ok(QPoint::Affine(ev(x)?, ev(y)?))
        }
    }
}

/// Specialization where a pole is read as the identity of the fiber.
pub fn specialize_point_or_identity(p: &FFPoint, r: &Rational) -> QPoint {
    specialize_point(p, r).unwrap_or(QPoint::Identity)
}

/// Smallest k <= 12 with [k]P = O.
pub fn torsion_order(e: &QCurve, p: &QPoint) -> Result<Option<u32>> {
    e.check(p)?;
    let mut cur = QPoint::Identity;
    for k in 1..=TORSION_CAP {
        cur = e.add_unchecked(&cur, p);
        if cur.is_identity() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Doubling limit `h(x([2^depth]P)) / 4^depth`; exact 0 on torsion.
pub fn canonical_height_q(e: &QCurve, p: &QPoint, depth: u32, limits: &Limits) -> Result<HeightEstimate> {
    if depth == 0 {
        return Err(Error::DegenerateInput("height depth must be at least 1"));
    }
    if let Some(k) = torsion_order(e, p)? {
        return Ok(HeightEstimate::exact_zero(Some(k)));
    }
    let mut cur = p.clone();
    let mut estimates = vec![weil_height_q(cur.x())];
    for k in 1..=depth {
        cur = e.double_unchecked(&cur);
        limits.check_bits(cur.bits())?;
        estimates.push(weil_height_q(cur.x()) / 4f64.powi(k as i32));
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

pub const DEFAULT_Q_DEPTH: u32 = 5;

/// Search bound for `relation_search`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MCap {
    Auto,
    Fixed(u64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationResult {
    pub m: Option<i64>,
    pub cap_used: u64,
}

/// Smallest |m| >= 1 with [m]P = Q (positive sign preferred), |m| <= cap.
pub fn relation_search(e: &QCurve, p: &QPoint, q: &QPoint, cap: MCap, limits: &Limits) -> Result<RelationResult> {
    e.check(p)?;
    e.check(q)?;
    let cap_used = match cap {
        MCap::Fixed(c) => c,
        MCap::Auto => auto_cap(e, p, q, limits)?,
    };
    let mut cur = QPoint::Identity;
    for k in 1..=cap_used {
        cur = e.add_unchecked(&cur, p);
        limits.check_bits(cur.bits())?;
        if &cur == q {
            return Ok(RelationResult {
                m: Some(k as i64),
                cap_used,
            });
        }
        if cur.neg() == *q {
            return Ok(RelationResult {
                m: Some(-(k as i64)),
                cap_used,
            });
        }
    }
    Ok(RelationResult { m: None, cap_used })
}

fn auto_cap(e: &QCurve, p: &QPoint, q: &QPoint, limits: &Limits) -> Result<u64> {
    if let Some(k) = torsion_order(e, p)? {
        // multiples of a torsion point repeat with period k
        return Ok(k as u64);
    }
    let hp = canonical_height_q(e, p, DEFAULT_Q_DEPTH, limits)?;
    if hp.value > 1e-3 {
        let hq = canonical_height_q(e, q, DEFAULT_Q_DEPTH, limits)?;
        Ok((hq.value / hp.value).sqrt().ceil() as u64 + 2)
    } else {
        Ok(64)
    }
}
