//! Division polynomials psi_n in Q[t][x, y] with y^2 reduced via the curve.

use std::collections::BTreeMap;

use crate::algebra::rational::int;
use crate::algebra::{Poly, RationalFunction};

use super::curve::{FFPoint, SurfaceModel};

/// Polynomial in x with coefficients in Q[t], lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly(pub Vec<Poly>);

impl XPoly {
    pub fn zero() -> Self {
        XPoly(Vec::new())
    }

    pub fn constant(c: Poly) -> Self {
        XPoly(vec![c]).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.0.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        XPoly((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect()).trimmed()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        XPoly((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect()).trimmed()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Poly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        XPoly(out).trimmed()
    }

    pub fn scale(&self, c: &Poly) -> Self {
        XPoly(self.0.iter().map(|a| a.mul(c)).collect()).trimmed()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(XPoly::constant(Poly::one()), |acc, _| acc.mul(self))
    }

    /// Horner evaluation at a rational function.
    pub fn eval(&self, x: &RationalFunction) -> RationalFunction {
        self.0.iter().rev().fold(RationalFunction::zero(), |acc, c| {
            acc.mul(x).add(&RationalFunction::from_poly(c.clone()))
        })
    }
}

/// `y^e * f(x)` kept with the raw y-exponent until the end of a recurrence step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionPoly {
    pub y_exp: u32,
    pub f: XPoly,
}

/// Recurrence engine for psi_n on a fixed surface, memoized.
pub struct DivisionPolys<'a> {
    curve_rhs: XPoly,
    e: &'a SurfaceModel,
    memo: BTreeMap<u64, DivisionPoly>,
}

impl<'a> DivisionPolys<'a> {
    pub fn new(e: &'a SurfaceModel) -> Self {
        let x = |k: usize| {
            let mut v = vec![Poly::zero(); k + 1];
            v[k] = Poly::one();
            XPoly(v)
        };
        let curve_rhs = x(3)
            .add(&x(1).scale(e.a()))
            .add(&XPoly::constant(e.b().clone()));
        DivisionPolys {
            curve_rhs,
            e,
            memo: BTreeMap::new(),
        }
    }

    /// The cubic x^3 + A x + B.
    pub fn rhs(&self) -> &XPoly {
        &self.curve_rhs
    }

    /// psi_n with y-exponent reduced to 0 (n odd) or 1 (n even).
    pub fn psi(&mut self, n: u64) -> DivisionPoly {
        if let Some(p) = self.memo.get(&n) {
            return p.clone();
        }
        let c = |v: i64| XPoly::constant(Poly::from_ints(&[v]));
        let (a, b) = (self.e.a().clone(), self.e.b().clone());
        let xp = |coeffs: Vec<Poly>| XPoly(coeffs).trimmed();
        let out = match n {
            0 => DivisionPoly { y_exp: 0, f: XPoly::zero() },
            1 => DivisionPoly { y_exp: 0, f: c(1) },
            2 => DivisionPoly { y_exp: 1, f: c(2) },
            3 => {
                // 3x^4 + 6A x^2 + 12B x - A^2
                let f = xp(vec![
                    a.mul(&a).neg(),
                    b.scale(&int(12)),
                    a.scale(&int(6)),
                    Poly::zero(),
                    Poly::from_ints(&[3]),
                ]);
                DivisionPoly { y_exp: 0, f }
            }
            4 => {
                // 4y (x^6 + 5A x^4 + 20B x^3 - 5A^2 x^2 - 4AB x - 8B^2 - A^3)
                let f = xp(vec![
                    b.mul(&b).scale(&int(-8)).sub(&a.pow(3)),
                    a.mul(&b).scale(&int(-4)),
                    a.mul(&a).scale(&int(-5)),
                    b.scale(&int(20)),
                    a.scale(&int(5)),
                    Poly::zero(),
                    Poly::one(),
                ])
                .scale(&Poly::from_ints(&[4]));
                DivisionPoly { y_exp: 1, f }
            }
            _ if n % 2 == 1 => {
                let m = (n - 1) / 2;
                let t1 = self.prod(&[(m + 2, 1), (m, 3)]);
                let t2 = self.prod(&[(m - 1, 1), (m + 1, 3)]);
                self.normalize(self.sub(t1, t2))
            }
            _ => {
                let m = n / 2;
                let t1 = self.prod(&[(m + 2, 1), (m - 1, 2)]);
                let t2 = self.prod(&[(m - 2, 1), (m + 1, 2)]);
                let inner = self.sub(t1, t2);
                let pm = self.psi(m);
                let mut full = DivisionPoly {
                    y_exp: pm.y_exp + inner.y_exp,
                    f: pm.f.mul(&inner.f),
                };
                // divide by 2y; the total y-exponent is always at least one here
                assert!(full.y_exp >= 1, "psi_2m numerator lacks a factor of y");
                full.y_exp -= 1;
                full.f = full.f.scale(&Poly::constant(crate::algebra::rational::rat(1, 2)));
                self.normalize(full)
            }
        };
        self.memo.insert(n, out.clone());
        out
    }

    fn prod(&mut self, factors: &[(u64, u32)]) -> DivisionPoly {
        let mut acc = DivisionPoly {
            y_exp: 0,
            f: XPoly::constant(Poly::one()),
        };
        for &(k, e) in factors {
            let p = self.psi(k);
            acc.y_exp += p.y_exp * e;
            acc.f = acc.f.mul(&p.f.pow(e));
        }
        acc
    }

    fn sub(&self, a: DivisionPoly, b: DivisionPoly) -> DivisionPoly {
        let e = a.y_exp.min(b.y_exp);
        debug_assert_eq!(a.y_exp % 2, b.y_exp % 2);
        let lift = |p: DivisionPoly| self.curve_rhs.pow((p.y_exp - e) / 2).mul(&p.f);
        let f = lift(a).sub(&lift(b));
        DivisionPoly { y_exp: e, f }
    }

    fn normalize(&self, p: DivisionPoly) -> DivisionPoly {
        let f = self.curve_rhs.pow(p.y_exp / 2).mul(&p.f);
        DivisionPoly { y_exp: p.y_exp % 2, f }
    }

    /// psi_n evaluated at an affine section.
    pub fn eval_at(&mut self, n: u64, p: &FFPoint) -> RationalFunction {
        let (x, y) = match p {
            FFPoint::Affine { x, y } => (x, y),
            FFPoint::Identity => panic!("division polynomials are evaluated at affine points"),
        };
        let d = self.psi(n);
        let v = d.f.eval(x);
        if d.y_exp == 1 {
            v.mul(y)
        } else {
            v
        }
    }

    /// x([n]P) = x - psi_{n-1} psi_{n+1} / psi_n^2; `None` when psi_n(P) = 0.
    pub fn x_multiple(&mut self, n: u64, p: &FFPoint) -> Option<RationalFunction> {
        assert!(n >= 1);
        let x = p.x()?.clone();
        let pn = self.eval_at(n, p);
        if pn.is_zero() {
            return None;
        }
        let num = self.eval_at(n - 1, p).mul(&self.eval_at(n + 1, p));
        Some(x.sub(&num.div(&pn.square()).expect("nonzero")))
    }
}

/// psi_n of a surface (convenience wrapper).
pub fn division_poly(e: &SurfaceModel, n: u64) -> DivisionPoly {
    DivisionPolys::new(e).psi(n)
}
