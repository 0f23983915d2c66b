//! Exact polynomial and power-series kernels.
//!
//! [`IntPoly`] is a dense polynomial over `Z` in one variable; the variable
//! is `t` for composition polynomials and `x` for generating-function
//! denominators, the type does not care. [`RatSeries`] is a truncated power
//! series over `Q`.

mod cyclotomic;
mod resultant;
mod series;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic, totient, totient_candidates};
pub use resultant::{ratio_resultant, resultant};
pub(crate) use resultant::distinct_ratio_poly;
pub use series::{series_inverse, RatNum, RatSeries};

/// Dense integer polynomial; `coeffs[i]` multiplies `tⁱ`. Never stores a
/// trailing zero, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · tⁱ`.
    pub fn monomial(c: BigInt, i: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); i + 1];
        coeffs[i] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `tⁱ` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `p(1)`: sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(−1)`: alternating coefficient sum.
    pub fn eval_neg_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c })
    }

    /// `p(−t)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// `p(t^e)`.
    pub fn compose_power(&self, e: usize) -> Self {
        assert!(e >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `tᵏ`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `δᵏ p` for `δ = t·d/dt`: coefficient `i` becomes `aᵢ·iᵏ`.
    pub fn delta_op(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let exp = u32::try_from(k).expect("delta order fits in u32");
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * num_traits::pow(BigInt::from(i), exp as usize))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `p / content(p)` with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> Self {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut steps = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let off = top - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[off + j] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps -= 1;
        }
        let mut out = Self::from_coeffs(r);
        if steps > 0 {
            out = out.scale(&num_traits::pow(lb, steps));
        }
        out
    }

    /// Exact division in `Z[t]`; `None` if `b` does not divide `self`
    /// with an integral quotient.
    pub fn exact_div(&self, b: &IntPoly) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for off in (0..=da - db).rev() {
            let top = off + db;
            let (qc, rem) = r[top].div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[off + j] -= &qc * bc;
            }
            q[off] = qc;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Remainder modulo a monic polynomial (exact over `Z`).
    pub fn rem_monic(&self, m: &IntPoly) -> Self {
        let dm = m.degree().expect("rem_monic by zero polynomial");
        assert!(m.lc().is_one(), "rem_monic needs a monic modulus");
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = r.len() - 1;
            let lr = r[top].clone();
            if !lr.is_zero() {
                let off = top - dm;
                for (j, mc) in m.coeffs.iter().enumerate() {
                    r[off + j] -= &lr * mc;
                }
            }
            r.pop();
        }
        Self::from_coeffs(r)
    }

    /// Greatest common divisor over `Z[t]`, primitive with positive
    /// leading coefficient times the gcd of the contents.
    pub fn gcd(&self, other: &IntPoly) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    /// Yun square-free decomposition of the primitive part:
    /// `primitive(p) = ∏ fᵢ^{mᵢ}` with pairwise coprime square-free `fᵢ`.
    /// Constant factors are omitted.
    pub fn squarefree_factors(&self) -> Vec<(IntPoly, usize)> {
        let a = self.primitive_part();
        if a.is_constant() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut c = a.gcd(&a.derivative()).primitive_part();
        let mut w = a.exact_div(&c).expect("gcd divides").primitive_part();
        let mut mult = 1;
        while !c.is_constant() {
            let y = w.gcd(&c).primitive_part();
            let z = w.exact_div(&y).expect("gcd divides").primitive_part();
            if !z.is_constant() {
                out.push((z, mult));
            }
            mult += 1;
            c = c.exact_div(&y).expect("gcd divides").primitive_part();
            w = y;
        }
        if !w.is_constant() {
            out.push((w, mult));
        }
        out
    }

    /// Render with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

pub fn poly_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a + b
}

pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

pub fn delta_op(p: &IntPoly, k: usize) -> IntPoly {
    p.delta_op(k)
}

/// Binomial coefficient table `C(n, j)` for `0 ≤ j ≤ n ≤ max`.
pub fn binomials(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigInt::one(); n + 1];
        for j in 1..n {
            row[j] = &rows[n - 1][j - 1] + &rows[n - 1][j];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 4]), p(&[3, 4]));
        assert_eq!(&p(&[1, 1, 1]) * &IntPoly::one(), p(&[1, 1, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(p(&[1, 2, 3]).delta_op(1), p(&[0, 2, 6]));
        assert_eq!(p(&[5, -1, 7]).delta_op(0), p(&[5, -1, 7]));
        assert_eq!(p(&[0, 0, 0, 1]).delta_op(2), p(&[0, 0, 0, 9]));
        assert_eq!(p(&[4]).delta_op(3), IntPoly::zero());
    }

    #[test]
    fn evaluation() {
        let q = p(&[1, -2, 3]);
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(9));
        assert_eq!(q.eval_one(), BigInt::from(2));
        assert_eq!(q.eval_neg_one(), BigInt::from(6));
        assert_eq!(q.reflect(), p(&[1, 2, 3]));
    }

    #[test]
    fn division_helpers() {
        let a = &p(&[1, 1]) * &p(&[-2, 0, 1]);
        assert_eq!(a.exact_div(&p(&[1, 1])), Some(p(&[-2, 0, 1])));
        assert_eq!(a.exact_div(&p(&[3, 1])), None);
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[0, 2])), None);
        assert_eq!(p(&[0, 0, 0, 1]).rem_monic(&p(&[1, 0, 1])), p(&[0, -1]));
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[-1, 1]);
        let a = &f * &p(&[2, 0, 3]);
        let b = &f * &p(&[5, 7]);
        assert_eq!(a.gcd(&b), f);
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])), IntPoly::one());
        assert_eq!(p(&[4, 6]).gcd(&p(&[6, 9])), p(&[2, 3]));
    }

    #[test]
    fn squarefree_decomposition() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 0, 1]);
        let poly = &(&a * &a) * &(&(&b * &b) * &(&b * &p(&[3, 1])));
        let got = poly.squarefree_factors();
        assert_eq!(got, vec![(p(&[3, 1]), 1), (a, 2), (b, 3)]);
        assert!(p(&[7]).squarefree_factors().is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 1]).to_string(), "t^3 - 3t^2 + 1");
        assert_eq!(p(&[0, -1]).display_with("x"), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn delta_leibniz(f in small_poly(), g in small_poly(), k in 0usize..=5) {
            let binom = binomials(k);
            let mut rhs = IntPoly::zero();
            for i in 0..=k {
                let term = &f.delta_op(i) * &g.delta_op(k - i);
                rhs = &rhs + &term.scale(&binom[k][i]);
            }
            prop_assert_eq!((&f * &g).delta_op(k), rhs);
        }

        #[test]
        fn delta_linear(f in small_poly(), g in small_poly(), u in -5i64..5, v in -5i64..5, k in 0usize..4) {
            let (u, v) = (BigInt::from(u), BigInt::from(v));
            let lhs = (&f.scale(&u) + &g.scale(&v)).delta_op(k);
            let rhs = &f.delta_op(k).scale(&u) + &g.delta_op(k).scale(&v);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn delta_keeps_degree(f in small_poly(), k in 0usize..4) {
            prop_assume!(!f.is_constant());
            prop_assert_eq!(f.delta_op(k).degree(), f.degree());
        }

        #[test]
        fn gcd_divides_both(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!h.is_zero() && !f.is_zero() && !g.is_zero());
            let a = &f * &h;
            let b = &g * &h;
            let d = a.gcd(&b);
            prop_assert!(a.exact_div(&d).is_some());
            prop_assert!(b.exact_div(&d).is_some());
            prop_assert!(d.exact_div(&h.primitive_part()).is_some());
        }
    }
}
