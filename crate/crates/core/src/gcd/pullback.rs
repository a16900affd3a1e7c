//! Pullbacks of the zero section and meet divisors of sections.

use serde::{Deserialize, Serialize};

use crate::algebra::{common_basis, squarefree_part, DivisorP1, Poly, RationalFunction};
use crate::elliptic::{FFPoint, SurfaceModel};
use crate::error::{Error, Result};

/// A pullback divisor together with the places that were excluded from it.
///
/// `bad_places` carries multiplicity 1 on every place where the section met
/// the zero section (x had a pole) but the place was skipped: it divides the
/// discriminant, or the pole orders did not follow the (-2k, -3k) pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pullback {
    pub divisor: DivisorP1,
    pub bad_places: DivisorP1,
}

/// Multiplicity of the intersection of the section `r` with the zero
/// section, ord(x) - ord(y) at every place where x has a pole.
pub fn zero_section_pullback(e: &SurfaceModel, r: &FFPoint) -> Result<DivisorP1> {
    Ok(zero_section_pullback_detailed(e, r)?.divisor)
}

pub fn zero_section_pullback_detailed(e: &SurfaceModel, r: &FFPoint) -> Result<Pullback> {
    let (x, y) = match r {
        FFPoint::Identity => return Err(Error::IdenticallyZeroSection { index: None }),
        FFPoint::Affine { x, y } => (x, y),
    };
    let mut good = Vec::new();
    let mut bad = Vec::new();
    if !x.denom().is_constant() {
        let disc_kernel = squarefree_part(e.disc())?;
        let fam = common_basis(&[
            DivisorP1::zeros_of(x.denom())?,
            DivisorP1::zeros_of(y.denom())?,
            DivisorP1::zeros_of(&disc_kernel)?,
        ]);
        for (k, place) in fam.basis.iter().enumerate() {
            let (px, py, singular) = (fam.rows[0][k], fam.rows[1][k], fam.rows[2][k] > 0);
            if px == 0 && py == 0 {
                continue;
            }
            match pole_pattern(px, py) {
                Some(m) if !singular => good.push((place.clone(), m)),
                _ => bad.push((place.clone(), 1)),
            }
        }
    }
    let (mut inf_good, mut inf_bad) = (0, 0);
    let (ox, oy) = (ord_inf(x), ord_inf(y));
    if ox < 0 || oy < 0 {
        match pole_pattern(-ox, -oy) {
            Some(m) => inf_good = m,
            None => inf_bad = 1,
        }
    }
    Ok(Pullback {
        divisor: DivisorP1::from_basis_unchecked(good, inf_good),
        bad_places: DivisorP1::from_basis_unchecked(bad, inf_bad),
    })
}

/// Pole orders (2k, 3k) give multiplicity k.
fn pole_pattern(px: i64, py: i64) -> Option<i64> {
    (px > 0 && px % 2 == 0 && 2 * py == 3 * px).then_some(px / 2)
}

fn ord_inf(f: &RationalFunction) -> i64 {
    f.ord_infinity().unwrap_or(i64::MAX)
}

/// Divisor where `[n] P` meets `Q`, computed as the pullback of `[n]P - Q`.
pub fn meet_divisor(e: &SurfaceModel, p: &FFPoint, q: &FFPoint, n: i64) -> Result<DivisorP1> {
    e.check(p)?;
    e.check(q)?;
    let r = e.add_unchecked(&e.scalar_mul_unchecked(n, p), &q.neg());
    zero_section_pullback(e, &r)
}

/// Independent oracle for the meet divisor away from bad places and poles
/// of Q: the common zeros of x([n]P) - x(Q) and y([n]P) - y(Q), with
/// multiplicity the minimum of the two orders, restricted to finite places.
pub fn meet_divisor_by_coordinates(r: &FFPoint, q: &FFPoint) -> Result<DivisorP1> {
    let (xr, yr) = match r {
        FFPoint::Identity => return Err(Error::IdenticallyZeroSection { index: None }),
        FFPoint::Affine { x, y } => (x, y),
    };
    let (xq, yq) = match q {
        FFPoint::Identity => {
            // meeting O: poles of x with multiplicity half the pole order
            if xr.denom().is_constant() {
                return Ok(DivisorP1::zero());
            }
            let d = crate::algebra::divisor_of(xr)?;
            let poles: Vec<(Poly, i64)> = d
                .finite_terms()
                .filter(|(_, m)| *m < 0)
                .map(|(p, m)| (p.clone(), -m / 2))
                .collect();
            return Ok(DivisorP1::from_basis_unchecked(poles, 0));
        }
        FFPoint::Affine { x, y } => (x, y),
    };
    let dx = xr.sub(xq);
    let dy = yr.sub(yq);
    let zeros = |f: &RationalFunction| -> Result<DivisorP1> {
        if f.is_zero() {
            return Ok(DivisorP1::zero());
        }
        Ok(DivisorP1::zeros_of(f.numer())?)
    };
    if dx.is_zero() && dy.is_zero() {
        return Err(Error::IdenticallyZeroSection { index: None });
    }
    let (zx, zy) = (zeros(&dx)?, zeros(&dy)?);
    if dy.is_zero() {
        return Ok(zx);
    }
    if dx.is_zero() {
        return Ok(zy);
    }
    crate::algebra::divisor_min(&zx, &zy)
}
