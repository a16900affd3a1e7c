//! Dense integer polynomial kernels. Coefficients are stored lowest degree
//! first and vectors are kept trimmed (no trailing zeros).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

/// Below this length the schoolbook product wins over Kronecker packing.
const KRONECKER_MIN_LEN: usize = 10;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: ZPoly = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn div_scalar_exact(a: &[BigInt], c: &BigInt) -> ZPoly {
    a.iter().map(|x| x / c).collect()
}

/// Non-negative gcd of all coefficients (zero for the zero polynomial).
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient, plus the signed content
/// that was divided out.
pub(crate) fn primitive(a: &[BigInt]) -> (BigInt, ZPoly) {
    if a.is_empty() {
        return (BigInt::zero(), Vec::new());
    }
    let mut g = content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        (g, a.to_vec())
    } else {
        let p = div_scalar_exact(a, &g);
        (g, p)
    }
}

pub(crate) fn max_bits(a: &[BigInt]) -> u64 {
    a.iter().map(|c| c.bits()).max().unwrap_or(0)
}

pub(crate) fn derivative(a: &[BigInt]) -> ZPoly {
    let mut out: ZPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_MIN_LEN {
        mul_schoolbook(a, b)
    } else {
        mul_kronecker(a, b)
    }
}

pub(crate) fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Product by Kronecker substitution: both operands are packed into single
/// integers at a slot width wide enough that no product coefficient can
/// overflow its slot, multiplied once, and unpacked with signed digits.
pub(crate) fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let shorter = a.len().min(b.len()) as u64;
    let log_len = 64 - shorter.leading_zeros() as u64;
    let width = max_bits(a) + max_bits(b) + log_len + 2;
    let pa = pack(a, width);
    let pb = pack(b, width);
    let prod = pa * pb;
    let mut out = unpack(&prod, width, a.len() + b.len() - 1);
    trim(&mut out);
    out
}

fn pack(a: &[BigInt], width: u64) -> BigInt {
    let total_bits = width * a.len() as u64;
    let words = (total_bits / 32 + 2) as usize;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    let mut any_neg = false;
    for (i, c) in a.iter().enumerate() {
        let (sign, mag) = c.to_u32_digits();
        let dst = match sign {
            Sign::NoSign => continue,
            Sign::Plus => &mut pos,
            Sign::Minus => {
                any_neg = true;
                &mut neg
            }
        };
        or_shifted(dst, &mag, i as u64 * width);
    }
    let p = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if any_neg {
        p - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        p
    }
}

fn or_shifted(dst: &mut [u32], src: &[u32], bit_off: u64) {
    let word = (bit_off / 32) as usize;
    let shift = (bit_off % 32) as u32;
    if shift == 0 {
        for (k, s) in src.iter().enumerate() {
            dst[word + k] |= *s;
        }
    } else {
        for (k, s) in src.iter().enumerate() {
            dst[word + k] |= s << shift;
            dst[word + k + 1] |= s >> (32 - shift);
        }
    }
}

fn extract_bits(src: &[u32], bit_off: u64, width: u64) -> BigUint {
    let word = (bit_off / 32) as usize;
    let shift = (bit_off % 32) as u32;
    let nwords = ((width + shift as u64 + 31) / 32) as usize;
    let mut out = Vec::with_capacity(nwords);
    for k in 0..nwords {
        let lo = src.get(word + k).copied().unwrap_or(0);
        let v = if shift == 0 {
            lo
        } else {
            let hi = src.get(word + k + 1).copied().unwrap_or(0);
            (lo >> shift) | (hi << (32 - shift))
        };
        out.push(v);
    }
    // mask to `width` bits
    let full = (width / 32) as usize;
    let rem = (width % 32) as u32;
    out.truncate(full + usize::from(rem > 0));
    if rem > 0 {
        if let Some(last) = out.get_mut(full) {
            *last &= (1u32 << rem) - 1;
        }
    }
    BigUint::new(out)
}

fn unpack(v: &BigInt, width: u64, count: usize) -> ZPoly {
    let (sign, mag) = v.to_u32_digits();
    let half = BigUint::one() << (width - 1);
    let full = BigUint::one() << width;
    let mut carry = false;
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut chunk = extract_bits(&mag, k as u64 * width, width);
        if carry {
            chunk += 1u32;
        }
        let digit = if chunk >= half {
            carry = true;
            BigInt::from_biguint(Sign::Plus, chunk) - BigInt::from_biguint(Sign::Plus, full.clone())
        } else {
            carry = false;
            BigInt::from_biguint(Sign::Plus, chunk)
        };
        out.push(if sign == Sign::Minus { -digit } else { digit });
    }
    out
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    assert!(!b.is_empty(), "pseudo-division by zero polynomial");
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.to_vec();
    }
    let lb = b.last().unwrap().clone();
    let mut r: ZPoly = a.to_vec();
    let mut steps = a.len() - b.len() + 1;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb, steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Exact quotient a / b in Z[t], or `None` if b does not divide a over Z.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: ZPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (qk, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &qk * bj;
        }
        q[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zp(v: &[i64]) -> ZPoly {
        let mut p: ZPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn pseudo_remainder_small() {
        // (t^2 + 1) prem (2t + 1) = 4*(t^2+1) mod (2t+1) = 5
        assert_eq!(pseudo_rem(&zp(&[1, 0, 1]), &zp(&[1, 2])), zp(&[5]));
    }

    #[test]
    fn exact_division_detects_remainder() {
        assert_eq!(div_exact(&zp(&[-1, 0, 1]), &zp(&[-1, 1])), Some(zp(&[1, 1])));
        assert_eq!(div_exact(&zp(&[1, 0, 1]), &zp(&[-1, 1])), None);
        assert_eq!(div_exact(&zp(&[1, 1]), &zp(&[1, 2])), None);
    }

    fn big_coeffs() -> impl Strategy<Value = ZPoly> {
        prop::collection::vec(
            prop::collection::vec(any::<u32>(), 1..6).prop_flat_map(|digits| {
                any::<bool>().prop_map(move |neg| {
                    let m = BigInt::from_biguint(Sign::Plus, BigUint::new(digits.clone()));
                    if neg {
                        -m
                    } else {
                        m
                    }
                })
            }),
            0..40,
        )
    }

    proptest! {
        #[test]
        fn kronecker_matches_schoolbook(a in big_coeffs(), b in big_coeffs()) {
            let mut a = a; trim(&mut a);
            let mut b = b; trim(&mut b);
            prop_assert_eq!(mul_kronecker(&a, &b), mul_schoolbook(&a, &b));
        }
    }
}
