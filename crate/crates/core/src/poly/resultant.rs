//! Resultants over `Z`.
//!
//! Sign convention: `Res(a, b) = lc(a)^{deg b} ∏_{a(α)=0} b(α)`, which is
//! `(−1)^{deg a·deg b} lc(b)^{deg a} ∏_{b(β)=0} a(β)`. So
//! `Res(t−2, t−3) = −1` and `Res(t²+1, t²−1) = 4`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Resultant by the subresultant polynomial remainder sequence.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if db == 0 {
        return Ok(num_traits::pow(b.lc(), da));
    }
    if da == 0 {
        return Ok(num_traits::pow(a.lc(), db));
    }

    let ca = a.content();
    let cb = b.content();
    let mut big_a = IntPoly::from_coeffs(a.coeffs().iter().map(|c| c / &ca).collect());
    let mut big_b = IntPoly::from_coeffs(b.coeffs().iter().map(|c| c / &cb).collect());
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut big_a, &mut big_b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let deg_a = big_a.degree().unwrap();
        let deg_b = big_b.degree().unwrap();
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = big_a.pseudo_rem(&big_b);
        big_a = big_b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        big_b = IntPoly::from_coeffs(r.coeffs().iter().map(|c| c / &divisor).collect());
        g = big_a.lc();
        // h ← g^δ / h^(δ−1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
        if big_b.degree() == Some(0) {
            let deg_a = big_a.degree().unwrap();
            let last = big_b.lc();
            // h ← B^{deg A} / h^{deg A − 1}
            let hh = num_traits::pow(last, deg_a) / num_traits::pow(h, deg_a - 1);
            return Ok(sign * scale * hh);
        }
    }
}

/// `R(x) = Res_y(p(y), p(x·y))`, whose roots are all ratios `βⱼ/βᵢ` of
/// roots of `p`. Built by evaluating at `x = 1, …, d²+1` (where the
/// leading `y`-coefficient `lc(p)·xᵈ` is nonzero) and interpolating.
pub fn ratio_resultant(p: &IntPoly) -> Result<IntPoly> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(IntPoly::one());
    }
    let npts = d * d + 1;
    let mut xs = Vec::with_capacity(npts);
    let mut ys = Vec::with_capacity(npts);
    for x0 in 1..=npts {
        let x0 = BigInt::from(x0);
        let mut pow = BigInt::one();
        let scaled: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow *= &x0;
                v
            })
            .collect();
        ys.push(resultant(p, &IntPoly::from_coeffs(scaled))?);
        xs.push(x0);
    }
    interpolate(&xs, &ys)
}

/// Newton interpolation over `Q`; the result must be integral.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPoly> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // Horner in Newton basis.
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // acc ← acc·(x − xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        let xi = BigRational::from_integer(xs[i].clone());
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xi;
        }
        next[0] += &dd[i];
        acc = next;
    }
    let ints: Option<Vec<BigInt>> = acc
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect();
    ints.map(IntPoly::from_coeffs).ok_or_else(|| Error::NonIntegral {
        k: 0,
        n: 0,
        value: "interpolated resultant".into(),
    })
}

/// `R(x)` with every factor `(x − 1)` removed, i.e. the ratios of distinct
/// roots only (for square-free `p`).
pub(crate) fn distinct_ratio_poly(p: &IntPoly) -> Result<IntPoly> {
    let mut r = ratio_resultant(p)?;
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    while !r.is_zero() {
        match r.exact_div(&x_minus_one) {
            Some(q) => r = q,
            None => break,
        }
    }
    Ok(r.primitive_part())
}
