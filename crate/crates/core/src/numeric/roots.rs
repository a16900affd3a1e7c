//! Simultaneous complex root approximation (Aberth-Ehrlich) with inclusion radii.

use num_bigint::BigInt;
use num_traits::Zero;

use super::dd::{Cdd, Dd};

/// Approximate roots with a radius such that the disc around each contains a root.
#[derive(Clone, Debug)]
pub struct RootApprox {
    pub roots: Vec<(f64, f64)>,
    pub radii: Vec<f64>,
    pub converged: bool,
}

/// Complex roots of a squarefree integer polynomial (lowest degree first).
pub fn aberth_roots(coeffs: &[BigInt]) -> RootApprox {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return RootApprox {
            roots: Vec::new(),
            radii: Vec::new(),
            converged: true,
        };
    }
    let shift = coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
    let c: Vec<Dd> = coeffs.iter().map(|x| Dd::from_bigint_scaled(x, shift)).collect();
    let rev: Vec<Dd> = c.iter().rev().copied().collect();
    let mut z = initial_guesses(coeffs);
    let mut converged = false;
    // coarse phase then refinement, both in double-double; a phase also ends
    // when the set of unconverged roots stops shrinking (tight clusters)
    for &(tol, max_iter) in &[(1e-14, 2000usize), (1e-30, 60)] {
        let mut done = vec![false; d];
        let (mut best, mut stall) = (d, 0);
        converged = false;
        for _ in 0..max_iter {
            let mut remaining = 0;
            for k in 0..d {
                if done[k] {
                    continue;
                }
                let ratio = newton_ratio(&c, &rev, z[k]);
                let mut s = Cdd::ZERO;
                for (j, zj) in z.iter().enumerate() {
                    if j != k {
                        s = s + (z[k] - *zj).recip();
                    }
                }
                let w = ratio / (Cdd::ONE - ratio * s);
                if !(w.re.hi.is_finite() && w.im.hi.is_finite()) {
                    remaining += 1;
                    continue;
                }
                z[k] = z[k] - w;
                if w.abs() <= tol * z[k].abs().max(1e-300) {
                    done[k] = true;
                } else {
                    remaining += 1;
                }
            }
            if remaining == 0 {
                converged = true;
                break;
            }
            if remaining < best {
                best = remaining;
                stall = 0;
            } else {
                stall += 1;
                if stall > 100 {
                    break;
                }
            }
        }
    }
    let radii = inclusion_radii(&c, &rev, &z);
    RootApprox {
        roots: z.iter().map(|v| (v.re.to_f64(), v.im.to_f64())).collect(),
        radii,
        converged,
    }
}

/// Horner for p and p' at x.
fn horner(c: &[Dd], x: Cdd) -> (Cdd, Cdd) {
    let mut p = Cdd::ZERO;
    let mut dp = Cdd::ZERO;
    for a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + Cdd::from_real(*a);
    }
    (p, dp)
}

/// f(z) / f'(z), evaluated through the reversed polynomial outside the unit disc.
fn newton_ratio(c: &[Dd], rev: &[Dd], z: Cdd) -> Cdd {
    if z.abs() <= 1.0 {
        let (p, dp) = horner(c, z);
        return p / dp;
    }
    // f(z) = z^d g(1/z): f/f' = z g / (d g - w g')
    let d = (c.len() - 1) as f64;
    let w = z.recip();
    let (g, dg) = horner(rev, w);
    (z * g) / (g.scale(Dd::new(d)) - w * dg)
}

/// log |f(z)| for the scaled polynomial, overflow-free.
fn log_abs_f(c: &[Dd], rev: &[Dd], z: Cdd) -> f64 {
    let r = z.abs();
    if r <= 1.0 {
        horner(c, z).0.abs().ln()
    } else {
        let d = (c.len() - 1) as f64;
        d * r.ln() + horner(rev, z.recip()).0.abs().ln()
    }
}

/// Radius d |f(z_k)| / |c_d prod_{j != k} (z_k - z_j)|; the union of these
/// discs contains all roots and isolated discs contain exactly one.
fn inclusion_radii(c: &[Dd], rev: &[Dd], z: &[Cdd]) -> Vec<f64> {
    let d = z.len();
    let lc = c[d].to_f64().abs().ln();
    (0..d)
        .map(|k| {
            let mut log_prod = lc;
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    log_prod += (z[k] - *zj).abs().ln();
                }
            }
            let v = (d as f64).ln() + log_abs_f(c, rev, z[k]) - log_prod;
            if v.is_nan() {
                f64::INFINITY
            } else {
                v.exp()
            }
        })
        .collect()
}

/// Starting points on circles read off the Newton polygon of log|c_i|.
fn initial_guesses(coeffs: &[BigInt]) -> Vec<Cdd> {
    let d = coeffs.len() - 1;
    let logs: Vec<Option<f64>> = coeffs
        .iter()
        .map(|c| (!c.is_zero()).then(|| crate::algebra::rational::ln_abs(c)))
        .collect();
    // upper convex hull of (i, log|c_i|)
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..=d {
        let Some(yi) = logs[i] else { continue };
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let (ya, yb) = (logs[a].unwrap(), logs[b].unwrap());
            // drop b if it lies on or below segment a -> i
            if (yb - ya) * (i - a) as f64 <= (yi - ya) * (b - a) as f64 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut out = Vec::with_capacity(d);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, j) = (w[0], w[1]);
        let u = ((logs[i].unwrap() - logs[j].unwrap()) / (j - i) as f64).exp();
        let m = j - i;
        for k in 0..m {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 2.0 * std::f64::consts::PI * i as f64 / d as f64 + sigma;
            out.push(Cdd::new(u * ang.cos(), u * ang.sin()));
        }
    }
    // a zero constant term contributes roots at the origin below the hull
    let lead_zero = logs.iter().position(|l| l.is_some()).unwrap_or(0);
    for k in 0..lead_zero {
        out.insert(0, Cdd::new(1e-3 * (k + 1) as f64, 1e-3));
    }
    out.truncate(d);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted_moduli(r: &RootApprox) -> Vec<f64> {
        let mut m: Vec<f64> = r.roots.iter().map(|(a, b)| a.hypot(*b)).collect();
        m.sort_by(|a, b| a.partial_cmp(b).unwrap());
        m
    }

    #[test]
    fn quadratic_and_cyclotomic() {
        let r = aberth_roots(&ints(&[-4, 0, 1]));
        assert!(r.converged);
        for m in sorted_moduli(&r) {
            assert!((m - 2.0).abs() < 1e-14);
        }
        let r = aberth_roots(&ints(&[1, 1, 1]));
        for m in sorted_moduli(&r) {
            assert!((m - 1.0).abs() < 1e-14);
        }
        assert!(r.radii.iter().all(|&x| x < 1e-20));
    }

    #[test]
    fn spread_magnitudes() {
        // (t - 1/1000)(t - 1)(t - 1000) * 1000
        let p = ints(&[-1000, 1001001, -1001001, 1000]);
        let r = aberth_roots(&p);
        let m = sorted_moduli(&r);
        assert!((m[0] - 1e-3).abs() < 1e-15 && (m[1] - 1.0).abs() < 1e-13 && (m[2] - 1e3).abs() < 1e-10);
    }

    #[test]
    fn wilkinson_like_degree_twenty() {
        // prod_{k=1}^{20} (t - k)
        let mut p = vec![BigInt::from(1)];
        for k in 1..=20i64 {
            let mut q = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                q[i + 1] += c;
                q[i] -= c * k;
            }
            p = q;
        }
        let r = aberth_roots(&p);
        let mut re: Vec<f64> = r.roots.iter().map(|x| x.0).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (k, x) in re.iter().enumerate() {
            assert!((x - (k + 1) as f64).abs() < 1e-9, "{x}");
        }
    }
}
