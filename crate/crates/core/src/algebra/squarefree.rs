//! Squarefree decomposition and gcd-free bases.

use super::poly::Poly;
use crate::error::{Error, Result};

/// Yun's algorithm: `f = lead(f) * prod g_i^{m_i}` with the `g_i` monic,
/// squarefree, pairwise coprime and the `m_i` strictly increasing.
pub fn squarefree_decompose(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("squarefree decomposition of zero"));
    }
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Monic squarefree kernel prod g_i.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    Ok(squarefree_decompose(f)?
        .into_iter()
        .fold(Poly::one(), |acc, (g, _)| acc.mul(&g)))
}

/// Pairwise coprime monic squarefree basis whose products generate every
/// input (each input is squarefree). The output is sorted canonically.
pub fn gcd_free_basis<'a, I>(inputs: I) -> Vec<Poly>
where
    I: IntoIterator<Item = &'a Poly>,
{
    let mut basis: Vec<Poly> = Vec::new();
    for f in inputs {
        if f.is_constant() {
            continue;
        }
        let mut rest = f.monic();
        let mut next: Vec<Poly> = Vec::with_capacity(basis.len() + 2);
        for b in basis.drain(..) {
            if rest.is_constant() {
                next.push(b);
                continue;
            }
            let g = rest.gcd(&b).expect("nonzero inputs");
            if g.is_constant() {
                next.push(b);
                continue;
            }
            let b_rest = b.exact_div(&g).expect("gcd divides basis element");
            rest = rest.exact_div(&g).expect("gcd divides input");
            if !b_rest.is_constant() {
                next.push(b_rest.monic());
            }
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest.monic());
        }
        basis = next;
    }
    basis.sort();
    basis.dedup();
    basis
}
