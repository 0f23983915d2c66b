//! The grid `S_{A,k}(n) = Σᵢ (−1)ⁱ iᵏ c_A(i,n) = δᵏ(f_{A,n})(−1)`.
//!
//! Four routes, expected to agree exactly:
//!
//! - [`sk_direct`]: build every `f_{A,n}`, apply `δᵏ`, evaluate at `−1`.
//! - [`sk_fast`]: a recurrence on the integers alone. `δ` is a derivation
//!   with `δ(t) = t`, so Leibniz gives `δᵏ(t·g) = Σⱼ C(k,j) t·δʲ(g)`.
//!   Applied to `f_{A,n} = t Σ_{a∈A(n)} f_{A,n−a}` at `t = −1`:
//!   `S_k(n) = −Σ_{j≤k} C(k,j) Σ_{a∈A(n)} S_j(n−a)`, with `S_0(0) = 1`
//!   and `S_k(0) = 0` for `k ≥ 1`.
//! - [`sk_via_q`]: `S_{k+1}(n) = Σᵢ i·q_A(n−i)·S_k(i)` over `Q`; every
//!   entry must come out integral.
//! - [`sk_via_conv`]: `S_{k+1}(n) = Σ_{i<n} Σ_{j≤k} C(k,j) S_j(n−i) S_{k−j}(i)`.
//!
//! Rows 1..K of the last two are seeded with row 0 from [`sk_fast`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::compositions::{comp_polys, q_series};
use crate::error::{Error, Result};
use crate::poly::{binomials, RatNum};
use crate::sets::SetSpec;

/// `(K+1) × (N+1)` table, row-major by `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkGrid {
    set: SetSpec,
    rows: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridSummary {
    pub set: String,
    #[serde(rename = "K")]
    pub max_k: usize,
    #[serde(rename = "N")]
    pub max_n: usize,
    /// Per row, `Σₙ (n+1)·S_{A,k}(n)` in base 10.
    pub row_checksums: Vec<String>,
}

impl SkGrid {
    pub fn set(&self) -> &SetSpec {
        &self.set
    }

    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_n(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn get(&self, k: usize, n: usize) -> &BigInt {
        &self.rows[k][n]
    }

    pub fn row(&self, k: usize) -> Result<&[BigInt]> {
        self.rows
            .get(k)
            .map(Vec::as_slice)
            .ok_or(Error::RowOutOfRange { k, max: self.max_k() })
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `(−1)ⁿ S_{A,k}(n) ≥ 0` for every `n` in the grid.
    pub fn row_normalized_nonnegative(&self, k: usize) -> bool {
        first_normalized_violation(&self.rows[k]).is_none()
    }

    /// If row 0 is normalized non-negative then so is every row.
    pub fn propagation_holds(&self) -> bool {
        !self.row_normalized_nonnegative(0)
            || (0..=self.max_k()).all(|k| self.row_normalized_nonnegative(k))
    }

    /// CSV with header `k,n,S`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,n,S\n");
        for (k, row) in self.rows.iter().enumerate() {
            for (n, v) in row.iter().enumerate() {
                out.push_str(&format!("{k},{n},{v}\n"));
            }
        }
        out
    }

    pub fn summary(&self) -> GridSummary {
        GridSummary {
            set: self.set.render(),
            max_k: self.max_k(),
            max_n: self.max_n(),
            row_checksums: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .fold(BigInt::zero(), |acc, (n, v)| acc + v * BigInt::from(n + 1))
                        .to_string()
                })
                .collect(),
        }
    }

    /// First `(k, n)` where the grids differ, scanning row by row.
    pub fn first_mismatch(&self, other: &SkGrid) -> Option<(usize, usize)> {
        if self.max_k() != other.max_k() || self.max_n() != other.max_n() {
            return Some((0, 0));
        }
        for k in 0..=self.max_k() {
            if let Some(n) = (0..=self.max_n()).find(|&n| self.rows[k][n] != other.rows[k][n]) {
                return Some((k, n));
            }
        }
        None
    }
}

pub(crate) fn first_normalized_violation(row: &[BigInt]) -> Option<usize> {
    row.iter().enumerate().find_map(|(n, v)| {
        let bad = if n % 2 == 0 { v.is_negative() } else { v.is_positive() };
        bad.then_some(n)
    })
}

pub fn sk_direct(set: &SetSpec, max_k: usize, max_n: usize) -> Result<SkGrid> {
    let table = comp_polys(set, max_n)?;
    let rows = (0..=max_k)
        .map(|k| {
            table
                .polys()
                .iter()
                .map(|p| p.delta_op(k).eval_neg_one())
                .collect()
        })
        .collect();
    Ok(SkGrid {
        set: set.clone(),
        rows,
    })
}

pub fn sk_fast(set: &SetSpec, max_k: usize, max_n: usize) -> Result<SkGrid> {
    set.check_horizon(max_n)?;
    let parts = set.truncate(max_n);
    let binom = binomials(max_k);
    let mut rows = vec![vec![BigInt::zero(); max_n + 1]; max_k + 1];
    rows[0][0] = BigInt::one();
    let mut inner = vec![BigInt::zero(); max_k + 1];
    for n in 1..=max_n {
        for (j, slot) in inner.iter_mut().enumerate() {
            *slot = parts
                .iter()
                .take_while(|&&a| a <= n)
                .fold(BigInt::zero(), |acc, &a| acc + &rows[j][n - a]);
        }
        for k in 0..=max_k {
            let v = (0..=k).fold(BigInt::zero(), |acc, j| acc + &binom[k][j] * &inner[j]);
            rows[k][n] = -v;
        }
    }
    Ok(SkGrid {
        set: set.clone(),
        rows,
    })
}

pub fn sk_via_q(set: &SetSpec, max_k: usize, max_n: usize) -> Result<SkGrid> {
    let q = q_series(set, max_n)?;
    let mut rows = vec![sk_fast(set, 0, max_n)?.rows.swap_remove(0)];
    for k in 0..max_k {
        let prev = &rows[k];
        let mut next = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut acc = RatNum::zero();
            for i in 1..=n {
                if prev[i].is_zero() {
                    continue;
                }
                acc += q.q(n - i) * RatNum::from_integer(&prev[i] * BigInt::from(i));
            }
            if !acc.is_integer() {
                return Err(Error::NonIntegral {
                    k: k + 1,
                    n,
                    value: acc.to_string(),
                });
            }
            next.push(acc.to_integer());
        }
        rows.push(next);
    }
    Ok(SkGrid {
        set: set.clone(),
        rows,
    })
}

pub fn sk_via_conv(set: &SetSpec, max_k: usize, max_n: usize) -> Result<SkGrid> {
    let binom = binomials(max_k);
    let mut rows = vec![sk_fast(set, 0, max_n)?.rows.swap_remove(0)];
    for k in 0..max_k {
        let mut next = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut acc = BigInt::zero();
            for i in 0..n {
                for j in 0..=k {
                    let (a, b) = (&rows[j][n - i], &rows[k - j][i]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc += &binom[k][j] * a * b;
                }
            }
            next.push(acc);
        }
        rows.push(next);
    }
    Ok(SkGrid {
        set: set.clone(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Direct,
    Fast,
    Q,
    Conv,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Direct, Route::Fast, Route::Q, Route::Conv];

    pub fn compute(self, set: &SetSpec, max_k: usize, max_n: usize) -> Result<SkGrid> {
        match self {
            Route::Direct => sk_direct(set, max_k, max_n),
            Route::Fast => sk_fast(set, max_k, max_n),
            Route::Q => sk_via_q(set, max_k, max_n),
            Route::Conv => sk_via_conv(set, max_k, max_n),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RouteMismatch {
    pub route: Route,
    pub k: usize,
    pub n: usize,
}

/// Every applicable route against [`sk_fast`]. The `q` route is skipped
/// for the empty set.
pub fn cross_check(set: &SetSpec, max_k: usize, max_n: usize) -> Result<(SkGrid, Vec<RouteMismatch>)> {
    let reference = sk_fast(set, max_k, max_n)?;
    let mut mismatches = Vec::new();
    for route in [Route::Direct, Route::Q, Route::Conv] {
        if route == Route::Q && set.is_empty() {
            continue;
        }
        let grid = route.compute(set, max_k, max_n)?;
        if let Some((k, n)) = reference.first_mismatch(&grid) {
            mismatches.push(RouteMismatch { route, k, n });
        }
    }
    Ok((reference, mismatches))
}

/// First `n ≤ horizon` with `(−1)ⁿ S_{A,0}(n) < 0`, for a sorted part
/// list. Runs in `i128` with checked arithmetic and restarts in `BigInt`
/// on overflow.
pub fn sk0_first_violation(parts: &[usize], horizon: usize) -> Option<usize> {
    let mut s: Vec<i128> = Vec::with_capacity(horizon + 1);
    s.push(1);
    'fast: {
        for n in 1..=horizon {
            let mut acc: i128 = 0;
            for &a in parts.iter().take_while(|&&a| a <= n) {
                match acc.checked_add(s[n - a]) {
                    Some(v) => acc = v,
                    None => break 'fast,
                }
            }
            let v = -acc;
            if (n % 2 == 0 && v < 0) || (n % 2 == 1 && v > 0) {
                return Some(n);
            }
            s.push(v);
        }
        return None;
    }
    let mut big: Vec<BigInt> = s.into_iter().map(BigInt::from).collect();
    for n in big.len()..=horizon {
        let acc = parts
            .iter()
            .take_while(|&&a| a <= n)
            .fold(BigInt::zero(), |acc, &a| acc + &big[n - a]);
        let v = -acc;
        if (n % 2 == 0 && v.is_negative()) || (n % 2 == 1 && v.is_positive()) {
            return Some(n);
        }
        big.push(v);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::parse_spec;

    fn s(text: &str) -> SetSpec {
        parse_spec(text, 500).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Oracle: `Σᵢ (−1)ⁱ iᵏ c(i,n)` with `c(i,n)` from brute-force tuples.
    fn brute_sk(parts: &[usize], k: u32, n: usize) -> i64 {
        fn count(parts: &[usize], i: usize, rem: usize) -> i64 {
            if i == 0 {
                return i64::from(rem == 0);
            }
            parts.iter().filter(|&&a| a <= rem).map(|&a| count(parts, i - 1, rem - a)).sum()
        }
        (0..=n)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * (i as i64).pow(k) * count(parts, i, n)
            })
            .sum()
    }

    #[test]
    fn direct_small_values() {
        let g = sk_direct(&s("{1,2,3}"), 1, 4).unwrap();
        assert_eq!(g.get(0, 4), &BigInt::from(1));
        assert_eq!(g.get(1, 4), &BigInt::from(1));
        assert_eq!(brute_sk(&[1, 2, 3], 0, 4), 1);
        assert_eq!(brute_sk(&[1, 2, 3], 1, 4), 1);
        let g = sk_direct(&s("{2,5}"), 3, 0).unwrap();
        assert_eq!(g.rows().iter().map(|r| r[0].clone()).collect::<Vec<_>>(), ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn fast_rows() {
        let g = sk_fast(&s("{1,2}"), 0, 8).unwrap();
        assert_eq!(g.row(0).unwrap(), &ints(&[1, -1, 0, 1, -1, 0, 1, -1, 0])[..]);
        let g = sk_fast(&s("{1,3,4}"), 0, 4).unwrap();
        assert_eq!(g.row(0).unwrap(), &ints(&[1, -1, 1, -2, 2])[..]);
        assert!(g.row(1).is_err());
    }

    #[test]
    fn fast_equals_direct() {
        let set = s("{1,2,3}");
        assert_eq!(sk_fast(&set, 4, 60).unwrap(), sk_direct(&set, 4, 60).unwrap());
    }

    #[test]
    fn all_routes_match_brute_force() {
        for parts in [vec![1, 2, 3], vec![2, 3], vec![1, 4], vec![3, 5, 6]] {
            let set = SetSpec::explicit(parts.clone(), 100).unwrap();
            for route in Route::ALL {
                let g = route.compute(&set, 3, 12).unwrap();
                for k in 0..=3u32 {
                    for n in 0..=12 {
                        assert_eq!(g.get(k as usize, n), &BigInt::from(brute_sk(&parts, k, n)), "{route:?} {parts:?} k={k} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn singleton_one_is_closed_form() {
        let set = s("{1}");
        for route in Route::ALL {
            let g = route.compute(&set, 4, 20).unwrap();
            for k in 0..=4u32 {
                for n in 0..=20usize {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    let expect = BigInt::from(sign) * num_traits::pow(BigInt::from(n), k as usize);
                    assert_eq!(g.get(k as usize, n), &expect);
                }
            }
        }
    }

    #[test]
    fn q_route_with_known_q() {
        // q = 1, −1, 0, 3, … for {1,2,3}
        let g = sk_via_q(&s("{1,2,3}"), 1, 4).unwrap();
        assert_eq!(g.get(1, 4), &BigInt::from(1));
        assert_eq!(sk_via_q(&s("{}"), 1, 4).unwrap_err(), Error::EmptySet);
        let e = sk_via_conv(&s("{}"), 2, 5).unwrap();
        assert_eq!(e.get(0, 0), &BigInt::one());
        assert!((1..=5).all(|n| e.get(0, n).is_zero() && e.get(2, n).is_zero()));
    }

    #[test]
    fn cross_check_on_cofinite() {
        let (_, mismatches) = cross_check(&s("N+\\{2,6}"), 3, 40).unwrap();
        assert!(mismatches.is_empty(), "{mismatches:?}");
    }

    #[test]
    fn propagation_on_odd_set() {
        let g = sk_fast(&s("{1,3,5}"), 4, 80).unwrap();
        assert!(g.row_normalized_nonnegative(0));
        assert!(g.propagation_holds());
        assert!((0..=4).all(|k| g.row_normalized_nonnegative(k)));
    }

    #[test]
    fn grid_exports() {
        let g = sk_fast(&s("{1,2}"), 1, 2).unwrap();
        assert_eq!(g.to_csv(), "k,n,S\n0,0,1\n0,1,-1\n0,2,0\n1,0,0\n1,1,-1\n1,2,1\n");
        let summary = g.summary();
        assert_eq!(summary.row_checksums, vec!["-1", "1"]);
    }

    #[test]
    fn fast_violation_kernel_matches_bigint_grid() {
        for parts in [vec![1, 2], vec![2, 3], vec![1, 3, 5], vec![1, 2, 3], vec![1, 2, 4, 8]] {
            let set = SetSpec::explicit(parts.clone(), 400).unwrap();
            let g = sk_fast(&set, 0, 400).unwrap();
            assert_eq!(sk0_first_violation(&parts, 400), first_normalized_violation(g.row(0).unwrap()), "{parts:?}");
        }
        // {1,3,5} grows past i128 long before n = 400 and never violates
        assert_eq!(sk0_first_violation(&[1, 3, 5], 400), None);
    }
}
