//! The multiplicative-group prototype: gcd(a^n - 1, b^m - 1) in Q[x].

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::rat_str;
use crate::algebra::{common_basis, divisor_of, Poly, Rational, RationalFunction};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArConfig {
    pub a: Poly,
    pub b: Poly,
}

impl ArConfig {
    pub fn new(a: Poly, b: Poly) -> Result<Self> {
        if a.is_constant() || b.is_constant() {
            return Err(Error::DegenerateInput("a and b must be nonconstant"));
        }
        Ok(ArConfig { a, b })
    }
}

/// Monic gcd(a^n1 - 1, b^n2 - 1).
pub fn ar_gcd(cfg: &ArConfig, n1: u32, n2: u32) -> Result<Poly> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::DegenerateInput("exponents must be at least 1"));
    }
    let one = Poly::one();
    cfg.a.pow(n1).sub(&one).gcd(&cfg.b.pow(n2).sub(&one))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArRow {
    pub n1: u32,
    pub n2: u32,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArScan {
    pub h_candidate: Poly,
    pub rows: Vec<ArRow>,
}

/// Lcm of the diagonal gcds for n <= n_max, checked to be divisible by each.
pub fn ar_bound_scan(cfg: &ArConfig, n_max: u32) -> Result<ArScan> {
    if let Dependence::Dependent { i, j, .. } = multiplicative_dependence_check(&cfg.a, &cfg.b)? {
        return Err(Error::DependentInputs { i, j });
    }
    let gcds: Vec<Poly> = (1..=n_max).into_par_iter().map(|n| ar_gcd(cfg, n, n)).collect::<Result<_>>()?;
    let h = gcds.iter().fold(Poly::one(), |h, g| h.lcm(g));
    for g in &gcds {
        if !h.rem(g).is_zero() {
            return Err(Error::DegenerateInput("diagonal gcd does not divide the lcm"));
        }
    }
    let rows = gcds
        .iter()
        .zip(1..)
        .map(|(g, n)| ArRow {
            n1: n,
            n2: n,
            degree: g.deg0(),
        })
        .collect();
    Ok(ArScan { h_candidate: h, rows })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Dependence {
    Independent,
    /// `a^i b^j = constant`.
    Dependent {
        i: i64,
        j: i64,
        #[serde(with = "rat_str")]
        constant: Rational,
    },
}

/// Exact test through the rank of the two divisor vectors over a coprime basis.
pub fn multiplicative_dependence_check(a: &Poly, b: &Poly) -> Result<Dependence> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial in dependence check"));
    }
    let da = divisor_of(&RationalFunction::from_poly(a.clone()))?;
    let db = divisor_of(&RationalFunction::from_poly(b.clone()))?;
    let fam = common_basis(&[da, db]);
    let (va, vb) = (&fam.rows[0], &fam.rows[1]);
    let (i, j) = match va.iter().zip(vb).find(|(x, _)| **x != 0) {
        None => (1, 0),
        Some((&x, &y)) => {
            let g = x.gcd(&y);
            let (i, j) = (y / g, -x / g);
            if i < 0 || (i == 0 && j < 0) {
                (-i, -j)
            } else {
                (i, j)
            }
        }
    };
    if va.iter().zip(vb).any(|(x, y)| i * x + j * y != 0) {
        return Ok(Dependence::Independent);
    }
    let constant =
        certify(a, b, i, j).ok_or(Error::DegenerateInput("dependence certificate failed to verify"))?;
    Ok(Dependence::Dependent { i, j, constant })
}

/// The constant a^i b^j, checked by exact polynomial arithmetic.
fn certify(a: &Poly, b: &Poly, i: i64, j: i64) -> Option<Rational> {
    let part = |p: &Poly, e: i64| p.pow(e.max(0) as u32);
    let num = part(a, i).mul(&part(b, j));
    let den = part(a, -i).mul(&part(b, -j));
    let q = num.exact_div(&den)?;
    q.is_constant().then(|| q.coeff(0))
}
