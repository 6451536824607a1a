//! Multiprecision complex numbers over binary `FBig`.
//!
//! Every value carries an explicit working precision. Mixing a limited and
//! an unlimited operand keeps the limited one, but division at unlimited
//! precision panics, so constructors always round to `prec`.

use std::ops::{Add, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};

use crate::exact::Rational;

pub type Fl = FBig<HalfEven, 2>;

pub fn fl_f64(x: f64, prec: usize) -> Fl {
    Fl::try_from(x).expect("finite float").with_precision(prec).value()
}

pub fn fl_int(n: i64, prec: usize) -> Fl {
    Fl::from(n).with_precision(prec).value()
}

pub fn ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

pub fn fl_rat(r: &Rational, prec: usize) -> Fl {
    let n = Fl::from(ibig(r.numer())).with_precision(prec).value();
    let d = Fl::from(ibig(r.denom())).with_precision(prec).value();
    n / d
}

pub fn to_f64(x: &Fl) -> f64 {
    x.to_f64().value()
}

/// `2^e` at precision `prec`.
pub fn pow2(e: isize, prec: usize) -> Fl {
    Fl::from_parts(IBig::ONE, e).with_precision(prec).value()
}

fn fl_abs(x: &Fl) -> Fl {
    if *x < Fl::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

// Rounding can push a mathematically nonnegative radicand just below zero.
fn sqrt_clamped(x: Fl) -> Fl {
    if x <= Fl::ZERO {
        Fl::ZERO.with_precision(x.precision()).value()
    } else {
        x.sqrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cx {
    pub re: Fl,
    pub im: Fl,
}

impl Cx {
    pub fn new(re: Fl, im: Fl) -> Self {
        Cx { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        Cx::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Cx::from_f64(1.0, 0.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Cx { re: fl_f64(re, prec), im: fl_f64(im, prec) }
    }

    pub fn from_rational(r: &Rational, prec: usize) -> Self {
        Cx { re: fl_rat(r, prec), im: fl_int(0, prec) }
    }

    pub fn from_real(re: Fl, prec: usize) -> Self {
        Cx { re, im: fl_int(0, prec) }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re == Fl::ZERO && self.im == Fl::ZERO
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }

    pub fn conj(&self) -> Self {
        Cx { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Fl {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Fl {
        if self.is_zero() {
            return self.re.clone();
        }
        self.norm_sqr().sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        to_f64(&self.abs())
    }

    /// Max of `|re|` and `|im|`, cheap and good enough for scaling.
    pub fn max_abs(&self) -> Fl {
        let (a, b) = (fl_abs(&self.re), fl_abs(&self.im));
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn scale(&self, k: &Fl) -> Self {
        Cx { re: &self.re * k, im: &self.im * k }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Cx { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn div(&self, rhs: &Cx) -> Self {
        self * &rhs.recip()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn powu(&self, e: u32) -> Self {
        let mut acc = Cx::one(self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        let two = fl_int(2, self.precision());
        let re = sqrt_clamped((&r + &self.re) / &two);
        let im_mag = sqrt_clamped((&r - &self.re) / &two);
        let im = if self.im < Fl::ZERO { -im_mag } else { im_mag };
        Cx { re, im }
    }

    /// Principal cube root, seeded in `f64` and polished by Newton steps.
    pub fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.precision();
        let (x, y) = self.to_f64();
        let (r, t) = ((x * x + y * y).sqrt().cbrt(), y.atan2(x) / 3.0);
        let mut z = Cx::from_f64(r * t.cos(), r * t.sin(), prec);
        let three = Cx::from_f64(3.0, 0.0, prec);
        // Quadratic convergence from ~53 good bits.
        let steps = 2 + (prec / 53).next_power_of_two().trailing_zeros() as usize;
        for _ in 0..steps {
            let z2 = z.square();
            z = &z - &(&(&z2 * &z) - self).div(&(&three * &z2));
        }
        z
    }
}

macro_rules! cx_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Cx> for &'a Cx {
            type Output = Cx;
            fn $m(self, r: &'a Cx) -> Cx {
                let f: fn(&Cx, &Cx) -> Cx = $body;
                f(self, r)
            }
        }
        impl $tr<Cx> for Cx {
            type Output = Cx;
            fn $m(self, r: Cx) -> Cx {
                (&self).$m(&r)
            }
        }
    };
}

cx_binop!(Add, add, |a, b| Cx { re: &a.re + &b.re, im: &a.im + &b.im });
cx_binop!(Sub, sub, |a, b| Cx { re: &a.re - &b.re, im: &a.im - &b.im });
cx_binop!(Mul, mul, |a, b| Cx {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx { re: -self.re, im: -self.im }
    }
}

impl Neg for &Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx { re: -self.re.clone(), im: -self.im.clone() }
    }
}

/// Horner evaluation of an ascending coefficient list.
pub fn horner(coeffs: &[Cx], z: &Cx) -> Cx {
    let mut acc = Cx::zero(z.precision());
    for c in coeffs.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn rational_conversion() {
        let x = fl_rat(&q(-754, 5), 128);
        assert!((to_f64(&x) + 150.8).abs() < 1e-12);
        let big = Rational::from_bigints(BigInt::from(10).pow(40), BigInt::from(3)).unwrap();
        assert!((to_f64(&fl_rat(&big, 128)) / 3.333333333333333e39 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn roots_of_complex() {
        let z = Cx::from_f64(-4.0, 0.0, 128);
        let s = z.sqrt();
        assert!((s.abs_f64() - 2.0).abs() < 1e-30 && to_f64(&s.im) > 0.0);
        let w = Cx::from_f64(-8.0, 1.0, 160);
        let c = w.cbrt();
        let back = &(&c * &c) * &c;
        assert!((&back - &w).abs_f64() < 1e-40);
    }
}
