//! Word-size prime arithmetic and the multi-prime GCD over Z[t].
//!
//! The GCD is reconstructed by Chinese remaindering from images modulo
//! 62-bit primes. Primes dividing either leading coefficient are skipped, so
//! every image has degree at least the true GCD degree; a degree-0 image is
//! therefore a proof of coprimality. A candidate is accepted only after it
//! divides both inputs exactly over Z.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::zpoly::{self, ZPoly};

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

const PRIME_CEILING: u64 = 1 << 62;

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[cfg(test)]
#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The i-th prime below 2^62, counting downwards.
pub(crate) fn prime(i: usize) -> u64 {
    let mut primes = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    while primes.len() <= i {
        let mut c = primes.last().copied().unwrap_or(PRIME_CEILING + 1) - 2;
        while !is_prime_u64(c) {
            c -= 2;
        }
        primes.push(c);
    }
    primes[i]
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = (c.magnitude() % p).to_u64().unwrap();
    if c.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

fn reduce_poly(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| reduce(c, p)).collect();
    trim_p(&mut v);
    v
}

fn trim_p(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn make_monic_p(v: &mut [u64], p: u64) {
    if let Some(&lc) = v.last() {
        if lc != 1 {
            let inv = invmod(lc, p);
            for c in v.iter_mut() {
                *c = mulmod(*c, inv, p);
            }
        }
    }
}

/// In-place remainder of `a` modulo the monic polynomial `b`.
fn rem_monic_p(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - db;
        if lead != 0 {
            for (j, &bj) in b.iter().enumerate().take(db) {
                a[shift + j] = submod(a[shift + j], mulmod(lead, bj, p), p);
            }
        }
        a.pop();
    }
    trim_p(a);
}

/// Monic gcd over F_p.
fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    make_monic_p(&mut x, p);
    while !y.is_empty() {
        make_monic_p(&mut y, p);
        rem_monic_p(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    x
}

/// Result of a GCD with its two cofactors: `f = gcd * f_cof`, `g = gcd * g_cof`.
pub(crate) struct GcdCofactors {
    pub gcd: ZPoly,
    pub f_cof: ZPoly,
    pub g_cof: ZPoly,
}

/// GCD of primitive integer polynomials with positive leading coefficients.
/// The result is primitive with positive leading coefficient.
pub(crate) fn gcd_cofactors(f: &[BigInt], g: &[BigInt]) -> GcdCofactors {
    debug_assert!(!f.is_empty() && !g.is_empty());
    if f.len() == 1 || g.len() == 1 {
        return GcdCofactors {
            gcd: vec![BigInt::one()],
            f_cof: f.to_vec(),
            g_cof: g.to_vec(),
        };
    }
    if f == g {
        return GcdCofactors {
            gcd: f.to_vec(),
            f_cof: vec![BigInt::one()],
            g_cof: vec![BigInt::one()],
        };
    }
    let lf = f.last().unwrap();
    let lg = g.last().unwrap();
    let delta = lf.gcd(lg);

    let mut best_deg = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<ZPoly> = None;

    for i in 0.. {
        let p = prime(i);
        if reduce(lf, p) == 0 || reduce(lg, p) == 0 {
            continue;
        }
        let fp = reduce_poly(f, p);
        let gp = reduce_poly(g, p);
        let h = gcd_p(&fp, &gp, p);
        let d = h.len() - 1;
        if d == 0 {
            return GcdCofactors {
                gcd: vec![BigInt::one()],
                f_cof: f.to_vec(),
                g_cof: g.to_vec(),
            };
        }
        if d > best_deg {
            continue;
        }
        if d < best_deg {
            best_deg = d;
            residues = vec![BigInt::zero(); d + 1];
            modulus = BigInt::one();
            last = None;
        }
        // image of the gcd scaled to leading coefficient delta
        let dp = reduce(&delta, p);
        let img: Vec<u64> = h.iter().map(|&c| mulmod(c, dp, p)).collect();
        crt_update(&mut residues, &mut modulus, &img, p);

        let half = &modulus >> 1usize;
        let sym: ZPoly = residues
            .iter()
            .map(|r| if r > &half { r - &modulus } else { r.clone() })
            .collect();
        let (_, cand) = zpoly::primitive(&sym);
        if last.as_ref() == Some(&cand) {
            if let (Some(fq), Some(gq)) = (zpoly::div_exact(f, &cand), zpoly::div_exact(g, &cand)) {
                return GcdCofactors {
                    gcd: cand,
                    f_cof: fq,
                    g_cof: gq,
                };
            }
        }
        last = Some(cand);
    }
    unreachable!("prime supply exhausted")
}

fn crt_update(residues: &mut [BigInt], modulus: &mut BigInt, img: &[u64], p: u64) {
    if modulus.is_one() {
        for (r, &v) in residues.iter_mut().zip(img) {
            *r = BigInt::from(v);
        }
        *modulus = BigInt::from(p);
        return;
    }
    let m_mod_p = reduce(modulus, p);
    let m_inv = invmod(m_mod_p, p);
    let mbig = BigInt::from_biguint(Sign::Plus, modulus.magnitude().clone());
    for (r, &v) in residues.iter_mut().zip(img) {
        let rp = reduce(r, p);
        let k = mulmod(submod(v, rp, p), m_inv, p);
        if k != 0 {
            *r += &mbig * BigInt::from(k);
        }
    }
    *modulus *= BigInt::from_biguint(Sign::Plus, BigUint::from(p));
}

/// Multiply two polynomials modulo p (schoolbook; used by tests).
#[cfg(test)]
fn mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
        }
    }
    trim_p(&mut out);
    out
}
