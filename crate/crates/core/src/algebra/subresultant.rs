//! Primitive subresultant remainder sequence over Z[t].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::zpoly::{self, ZPoly};

/// GCD of two nonzero integer polynomials, primitive with positive leading
/// coefficient. Intermediate coefficients stay polynomially bounded because
/// each pseudo-remainder is divided by the known subresultant factor.
pub(crate) fn gcd_subresultant(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    debug_assert!(!f.is_empty() && !g.is_empty());
    let (_, mut a) = zpoly::primitive(f);
    let (_, mut b) = zpoly::primitive(g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g_fac = BigInt::one();
    let mut h_fac = BigInt::one();
    loop {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let delta = (a.len() - b.len()) as u32;
        let r = zpoly::pseudo_rem(&a, &b);
        if r.is_empty() {
            return zpoly::primitive(&b).1;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g_fac * num_traits::pow(h_fac.clone(), delta as usize);
        a = b;
        b = zpoly::div_scalar_exact(&r, &divisor);
        g_fac = a.last().unwrap().clone();
        h_fac = match delta {
            0 => h_fac,
            1 => g_fac.clone(),
            d => {
                let num = num_traits::pow(g_fac.clone(), d as usize);
                let den = num_traits::pow(h_fac, (d - 1) as usize);
                debug_assert!((&num % &den).is_zero());
                num / den
            }
        };
    }
}
