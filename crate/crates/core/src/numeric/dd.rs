//! Double-double floating point (about 106 significant bits) and its complex form.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let a = self.hi.sqrt();
        // one Newton step from the f64 root
        let (p, e) = two_prod(a, a);
        let diff = (self - Dd { hi: p, lo: e }).to_f64();
        let (s, t) = quick_two_sum(a, diff / (2.0 * a));
        Dd { hi: s, lo: t }
    }

    /// `self * 2^k` exactly (up to underflow).
    pub fn ldexp(self, k: i32) -> Self {
        let f = pow2(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// `n / 2^shift`, rounded to double-double.
    pub fn from_bigint_scaled(n: &BigInt, shift: u64) -> Self {
        if n.is_zero() {
            return Dd::ZERO;
        }
        let bits = n.bits();
        let drop = bits.saturating_sub(106);
        let m: BigInt = n.abs() >> drop;
        let hi = m.to_f64().unwrap();
        let lo = (&m - float_to_bigint(hi)).to_f64().unwrap();
        let (h, l) = quick_two_sum(hi, lo);
        let v = Dd { hi: h, lo: l }.ldexp(drop as i32 - shift as i32);
        if n.is_negative() {
            -v
        } else {
            v
        }
    }
}

fn pow2(k: i32) -> f64 {
    if k < -1074 {
        0.0
    } else if k < -1022 {
        2f64.powi(-1022) * 2f64.powi(k + 1022)
    } else {
        2f64.powi(k)
    }
}

fn float_to_bigint(x: f64) -> BigInt {
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64 - 1075;
    let mant = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    let m = BigInt::from(mant);
    if exp >= 0 {
        m << exp as usize
    } else {
        m >> (-exp) as usize
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    pub fn new(re: f64, im: f64) -> Self {
        Cdd {
            re: Dd::new(re),
            im: Dd::new(im),
        }
    }

    pub fn from_real(re: Dd) -> Self {
        Cdd { re, im: Dd::ZERO }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn recip(self) -> Cdd {
        let d = self.norm_sqr();
        Cdd {
            re: self.re / d,
            im: -(self.im / d),
        }
    }

    pub fn scale(self, k: Dd) -> Cdd {
        Cdd {
            re: self.re * k,
            im: self.im * k,
        }
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Div for Cdd {
    type Output = Cdd;
    fn div(self, o: Cdd) -> Cdd {
        // scale by the larger component to keep norm_sqr in range
        let s = o.re.hi.abs().max(o.im.hi.abs());
        if s == 0.0 {
            return Cdd::new(f64::NAN, f64::NAN);
        }
        let k = Dd::new(1.0 / s);
        let (a, b) = (self.scale(k), o.scale(k));
        let d = b.norm_sqr();
        Cdd {
            re: (a.re * b.re + a.im * b.im) / d,
            im: (a.im * b.re - a.re * b.im) / d,
        }
    }
}
