//! Aberth–Ehrlich simultaneous iteration, first in `f64` for starting
//! values, then in fixed point until every correction is below `tol`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::fixed::{Cx, Scale};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

const F64_ITERATIONS: usize = 800;
const HP_ITERATIONS: usize = 400;

/// A simple root of a square-free factor, with its inclusion radius.
#[derive(Debug, Clone)]
pub(crate) struct HpRoot {
    pub z: Cx,
    /// The disk of this radius about `z` contains a root: `d·|p(z)/p′(z)|`.
    pub radius: BigInt,
    pub residual: BigInt,
}

fn f64_coeffs(p: &IntPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner_f64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// Starting values on a circle whose radius is the geometric mean of the
/// root moduli, rotated off the real axis.
fn initial_guesses(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let r = (c[0].abs() / c[d].abs()).powf(1.0 / d as f64);
    let r = if r.is_finite() && r > 0.0 { r } else { 1.0 };
    (0..d)
        .map(|k| Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect()
}

fn aberth_f64(c: &[f64]) -> Vec<Complex64> {
    let mut z = initial_guesses(c);
    let d = z.len();
    for _ in 0..F64_ITERATIONS {
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let (v, dv) = horner_f64(c, z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let w = v / dv;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = w / (1.0 - w * s);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            worst = worst.max(step.norm() / (1.0 + z[i].norm()));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Roots of a square-free integer polynomial of degree `≥ 1` to absolute
/// correction `≤ tol`.
pub(crate) fn solve_squarefree(p: &IntPoly, scale: Scale, tol: &BigInt) -> Result<Vec<HpRoot>> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    let c = f64_coeffs(p);
    let starts = if c.iter().all(|v| v.is_finite()) {
        aberth_f64(&c)
    } else {
        initial_guesses(&vec![1.0; d + 1])
    };
    let mut z: Vec<Cx> = starts
        .iter()
        .map(|s| {
            let (re, im) = if s.re.is_finite() && s.im.is_finite() { (s.re, s.im) } else { (1.0, 1.0) };
            scale.c_from_f64(re, im)
        })
        .collect();

    let mut converged = false;
    for _ in 0..HP_ITERATIONS {
        let mut worst = BigInt::zero();
        for i in 0..d {
            let (v, dv) = scale.eval_with_derivative(p, &z[i]);
            if v.re.is_zero() && v.im.is_zero() {
                continue;
            }
            let Some(w) = scale.c_div(&v, &dv) else {
                // stationary point: nudge and retry next sweep
                z[i].re += scale.lift_f64(1e-6);
                worst = scale.one();
                continue;
            };
            let mut s = scale.c_zero();
            for j in (0..d).filter(|&j| j != i) {
                if let Some(inv) = scale.c_div(&scale.c_one(), &scale.c_sub(&z[i], &z[j])) {
                    s = scale.c_add(&s, &inv);
                }
            }
            let denom = scale.c_sub(&scale.c_one(), &scale.c_mul(&w, &s));
            let step = scale.c_div(&w, &denom).unwrap_or(w);
            z[i] = scale.c_sub(&z[i], &step);
            let size = scale.c_abs(&step);
            if size > worst {
                worst = size;
            }
        }
        if &worst <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: HP_ITERATIONS,
        });
    }

    Ok(z.into_iter()
        .map(|z| {
            let (v, dv) = scale.eval_with_derivative(p, &z);
            let residual = scale.c_abs(&v);
            let dv_abs = scale.c_abs(&dv);
            let radius = if dv_abs.is_zero() {
                scale.one()
            } else {
                scale.div(&residual, &dv_abs) * BigInt::from(d)
            };
            HpRoot { z, radius, residual }
        })
        .collect())
}
