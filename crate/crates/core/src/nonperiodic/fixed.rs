//! Binary fixed-point reals and complexes: a value is `m / 2^bits`.

use num_bigint::BigInt;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Scale {
    pub bits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

impl Scale {
    pub fn new(bits: usize) -> Self {
        Self { bits }
    }

    pub fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    pub fn lift(&self, v: &BigInt) -> BigInt {
        v << self.bits
    }

    pub fn lift_f64(&self, v: f64) -> BigInt {
        if v == 0.0 || !v.is_finite() {
            return BigInt::zero();
        }
        let (mant, exp, sign) = v.integer_decode();
        let m = BigInt::from(mant);
        let shift = exp as i64 + self.bits as i64;
        let m = if shift >= 0 { m << shift as usize } else { m >> (-shift) as usize };
        if sign < 0 {
            -m
        } else {
            m
        }
    }

    pub fn approx(&self, v: &BigInt) -> f64 {
        let keep = 64usize;
        if self.bits > keep {
            let shifted = v >> (self.bits - keep);
            shifted.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(keep as i32))
        } else {
            v.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(self.bits as i32))
        }
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    pub fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits) / b
    }

    /// `digits` fractional decimal digits, truncated toward zero.
    pub fn decimal(&self, v: &BigInt, digits: usize) -> String {
        let neg = v.is_negative();
        let mag = v.abs();
        let int = &mag >> self.bits;
        let frac_mask = self.one() - 1;
        let frac = ((&mag & &frac_mask) * num_traits::pow(BigInt::from(10), digits)) >> self.bits;
        let frac = frac.to_str_radix(10);
        let frac = format!("{}{}", "0".repeat(digits.saturating_sub(frac.len())), frac);
        let body = if digits == 0 { int.to_string() } else { format!("{int}.{frac}") };
        let all_zero = int.is_zero() && frac.bytes().all(|b| b == b'0');
        if neg && !all_zero {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Decimal digits justified by the binary precision.
    pub fn digits(&self) -> usize {
        (self.bits * 30103 / 100_000).clamp(1, 40)
    }

    pub fn c_from_f64(&self, re: f64, im: f64) -> Cx {
        Cx {
            re: self.lift_f64(re),
            im: self.lift_f64(im),
        }
    }

    pub fn c_one(&self) -> Cx {
        Cx {
            re: self.one(),
            im: BigInt::zero(),
        }
    }

    pub fn c_zero(&self) -> Cx {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn c_add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    pub fn c_sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    pub fn c_mul(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.bits,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.bits,
        }
    }

    /// `None` when `b` is zero at this precision.
    pub fn c_div(&self, a: &Cx, b: &Cx) -> Option<Cx> {
        let den = &b.re * &b.re + &b.im * &b.im;
        if den.is_zero() {
            return None;
        }
        let re = &a.re * &b.re + &a.im * &b.im;
        let im = &a.im * &b.re - &a.re * &b.im;
        Some(Cx {
            re: (re << self.bits) / &den,
            im: (im << self.bits) / &den,
        })
    }

    pub fn c_abs(&self, a: &Cx) -> BigInt {
        (&a.re * &a.re + &a.im * &a.im).sqrt()
    }

    pub fn c_conj(&self, a: &Cx) -> Cx {
        Cx {
            re: a.re.clone(),
            im: -&a.im,
        }
    }

    pub fn c_pow(&self, a: &Cx, mut e: usize) -> Cx {
        let mut base = a.clone();
        let mut acc = self.c_one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.c_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.c_mul(&base, &base);
            }
        }
        acc
    }

    /// `(p(z), p′(z))` by Horner.
    pub fn eval_with_derivative(&self, p: &IntPoly, z: &Cx) -> (Cx, Cx) {
        let mut val = self.c_zero();
        let mut der = self.c_zero();
        for c in p.coeffs().iter().rev() {
            der = self.c_add(&self.c_mul(&der, z), &val);
            val = self.c_mul(&val, z);
            val.re += self.lift(c);
        }
        (val, der)
    }

    pub fn c_to_f64(&self, a: &Cx) -> (f64, f64) {
        (self.approx(&a.re), self.approx(&a.im))
    }
}
