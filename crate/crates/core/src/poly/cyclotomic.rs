use num_bigint::BigInt;

use super::IntPoly;

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// `Φ_N`. Squarefree part first via `Φ_{np}(x) = Φ_n(xᵖ)/Φ_n(x)` for
/// `p ∤ n`, then `Φ_N(x) = Φ_{rad N}(x^{N/rad N})`.
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut phi = IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)]);
    let mut rad = 1;
    for p in prime_factors(n) {
        phi = phi
            .compose_power(p)
            .exact_div(&phi)
            .expect("cyclotomic recursion divides exactly");
        rad *= p;
    }
    if n / rad > 1 {
        phi = phi.compose_power(n / rad);
    }
    phi
}

/// Every `N` with `φ(N) ≤ d`, ascending. Uses `φ(N) ≥ √(N/2)`, so no
/// candidate exceeds `2d²`.
pub fn totient_candidates(d: usize) -> Vec<usize> {
    (1..=2 * d * d.max(1)).filter(|&n| totient(n) <= d).collect()
}
