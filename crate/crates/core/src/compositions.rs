//! Composition polynomials `f_{A,n}(t) = Σᵢ c_A(i,n) tⁱ` and the identities
//! they satisfy.
//!
//! The table is built from `f_{A,0} = 1`, `f_{A,n} = t Σ_{a∈A(n)} f_{A,n−a}`.
//! [`verify_section2`] re-derives the table from `[xⁿ] f_A(x)ⁱ` and checks
//! every generating-function identity of the composition family exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nonperiodic::{self, CertifierConfig, NonPeriodicityReport};
use crate::poly::{IntPoly, RatNum, RatSeries};
use crate::sets::SetSpec;
use crate::signs::{Sign, SignWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompPolyTable {
    set: SetSpec,
    polys: Vec<IntPoly>,
}

impl CompPolyTable {
    pub fn set(&self) -> &SetSpec {
        &self.set
    }

    /// Largest `n` in the table.
    pub fn upto(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// `f_{A,n}`.
    pub fn poly(&self, n: usize) -> &IntPoly {
        &self.polys[n]
    }

    /// `c_A(i, n)`.
    pub fn by_parts(&self, i: usize, n: usize) -> BigInt {
        self.polys[n].coeff(i)
    }

    /// `c_A(n) = f_{A,n}(1)`.
    pub fn counts(&self) -> Vec<BigInt> {
        self.polys.iter().map(IntPoly::eval_one).collect()
    }

    /// CSV triangle with header `n,i,c_A(i,n)`; one row per `0 ≤ i ≤ n`.
    pub fn triangle_csv(&self) -> String {
        let mut out = String::from("n,i,c_A(i,n)\n");
        for (n, p) in self.polys.iter().enumerate() {
            for i in 0..=n {
                out.push_str(&format!("{n},{i},{}\n", p.coeff(i)));
            }
        }
        out
    }
}

pub fn comp_polys(set: &SetSpec, upto: usize) -> Result<CompPolyTable> {
    set.check_horizon(upto)?;
    let parts = set.truncate(upto);
    let mut polys: Vec<IntPoly> = Vec::with_capacity(upto + 1);
    polys.push(IntPoly::one());
    for n in 1..=upto {
        let mut acc = IntPoly::zero();
        for &a in parts.iter().take_while(|&&a| a <= n) {
            acc = &acc + &polys[n - a];
        }
        polys.push(acc.shift(1));
    }
    Ok(CompPolyTable {
        set: set.clone(),
        polys,
    })
}

/// `c_A(0..=N)` from `c(0) = 1`, `c(n) = Σ_{a∈A(n)} c(n−a)`.
pub fn comp_counts(set: &SetSpec, upto: usize) -> Result<Vec<BigInt>> {
    set.check_horizon(upto)?;
    let parts = set.truncate(upto);
    let mut c: Vec<BigInt> = Vec::with_capacity(upto + 1);
    c.push(BigInt::one());
    for n in 1..=upto {
        let v = parts
            .iter()
            .take_while(|&&a| a <= n)
            .fold(BigInt::zero(), |acc, &a| acc + &c[n - a]);
        c.push(v);
    }
    Ok(c)
}

/// `c_A(i, n)`, the number of compositions of `n` with exactly `i` parts.
pub fn comp_by_parts(set: &SetSpec, i: usize, n: usize) -> Result<BigInt> {
    Ok(comp_polys(set, n)?.by_parts(i, n))
}

/// CSV with header `n,c_A(n)`.
pub fn counts_csv(counts: &[BigInt]) -> String {
    let mut out = String::from("n,c_A(n)\n");
    for (n, c) in counts.iter().enumerate() {
        out.push_str(&format!("{n},{c}\n"));
    }
    out
}

/// `p_B(0..=N)`, partitions with parts in a finite `B` (coin-change DP).
pub fn partition_counts(set: &SetSpec, upto: usize) -> Result<Vec<BigInt>> {
    let parts = set.finite_elements()?;
    let mut p = vec![BigInt::zero(); upto + 1];
    p[0] = BigInt::one();
    for b in parts {
        for n in b..=upto {
            let prev = p[n - b].clone();
            p[n] += prev;
        }
    }
    Ok(p)
}

/// Prefix of `f_A(x) / (x f_A'(x)) = Σ q_A(n) xⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    set: SetSpec,
    coeffs: RatSeries,
}

#[derive(Debug, Clone, Serialize)]
struct RatJson {
    num: String,
    den: String,
}

#[derive(Debug, Clone, Serialize)]
struct QSeriesJson {
    set: String,
    order: usize,
    coeffs: Vec<RatJson>,
}

impl QSeries {
    pub fn set(&self) -> &SetSpec {
        &self.set
    }

    pub fn coeffs(&self) -> &RatSeries {
        &self.coeffs
    }

    pub fn q(&self, n: usize) -> &RatNum {
        self.coeffs.coeff(n)
    }

    /// JSON with base-10 numerator/denominator strings.
    pub fn to_json(&self) -> String {
        let doc = QSeriesJson {
            set: self.set.render(),
            order: self.coeffs.order(),
            coeffs: self
                .coeffs
                .coeffs()
                .iter()
                .map(|c| RatJson {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

/// Numerator and denominator of `f_A(x)/(x f_A'(x))` after dividing
/// both by `x^{min A}`; only parts `≤ N + min A` matter up to order `N`.
fn q_fraction(set: &SetSpec, order: usize) -> Result<(IntPoly, IntPoly)> {
    let m = set.min_element().ok_or(Error::EmptySet)?;
    let parts = set.members_up_to(order + m)?;
    let mut num = vec![BigInt::zero(); order + 1];
    let mut den = vec![BigInt::zero(); order + 1];
    for a in parts {
        num[a - m] = BigInt::one();
        den[a - m] = BigInt::from(a);
    }
    Ok((IntPoly::from_coeffs(num), IntPoly::from_coeffs(den)))
}

pub fn q_series(set: &SetSpec, order: usize) -> Result<QSeries> {
    let (num, den) = q_fraction(set, order)?;
    let inv = RatSeries::from_poly(&den, order).inverse()?;
    Ok(QSeries {
        set: set.clone(),
        coeffs: &RatSeries::from_poly(&num, order) * &inv,
    })
}

/// Where an identity first failed: the smallest `n`, and the lowest power
/// of `t` whose coefficients differ there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub coeff: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail { counterexample: Counterexample },
    NotApplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        !matches!(self.status, CheckStatus::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub set: String,
    pub upto: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == name)
    }
}

fn first_diff(lhs: &[BigInt], rhs: &[BigInt]) -> Option<usize> {
    let n = lhs.len().max(rhs.len());
    let zero = BigInt::zero();
    (0..n).find(|&i| lhs.get(i).unwrap_or(&zero) != rhs.get(i).unwrap_or(&zero))
}

/// Runs `per_n` for every `n ≤ upto` in parallel and keeps the smallest
/// failing `n`.
fn check_all<F>(name: &str, upto: usize, per_n: F) -> IdentityCheck
where
    F: Fn(usize) -> Option<usize> + Sync,
{
    let fail = (0..=upto)
        .into_par_iter()
        .filter_map(|n| per_n(n).map(|coeff| Counterexample { n, coeff }))
        .min_by_key(|c| c.n);
    IdentityCheck {
        identity: name.to_string(),
        status: match fail {
            Some(counterexample) => CheckStatus::Fail { counterexample },
            None => CheckStatus::Pass,
        },
    }
}

fn not_applicable(name: &str, reason: &str) -> IdentityCheck {
    IdentityCheck {
        identity: name.to_string(),
        status: CheckStatus::NotApplicable {
            reason: reason.to_string(),
        },
    }
}

pub const ID_RECURRENCE: &str = "recurrence";
pub const ID_DELTA_WEIGHTED: &str = "delta_weighted";
pub const ID_REFLECTION: &str = "reflection";
pub const ID_PARITY: &str = "parity";
pub const ID_ODD_SYMMETRY: &str = "odd_symmetry";
pub const ID_DELTA_Q: &str = "delta_q";
pub const ID_DELTA_CONV: &str = "delta_convolution";
pub const ID_ROWS_Q: &str = "sk_rows_via_q";
pub const ID_ROWS_CONV: &str = "sk_rows_via_convolution";

/// Exact checks for `n ≤ upto`:
///
/// - `recurrence`: the recurrence table equals `cᵢ,ₙ = [xⁿ] f_A(x)ⁱ`;
/// - `delta_weighted`: `Σ_{a∈A(n)} a δ(f_{n−a}) = Σ_{a∈A(n)} (n−a) f_{n−a}`;
/// - `reflection`: `f_n(t) + f_n(−t) = 2 Σᵢ fᵢ(−t) f_{n−i}(t)`;
/// - `parity`: `½ Σᵢ f_{O,i}(−t)(f_{n−i}(−t) + (−1)^{n−i} f_{n−i}(t)) = Σᵢ (−1)ⁱ fᵢ(t) f_{n−i}(−t)`;
/// - `odd_symmetry`: when `E_A(upto) = ∅`, `f_n(−t) = (−1)ⁿ f_n(t)`;
/// - `delta_q`: `δ f_n = Σᵢ i q_A(n−i) fᵢ` over `Q`;
/// - `delta_convolution`: `δ f_n = Σ_{i<n} f_{n−i} fᵢ`;
/// - `sk_rows_via_q`, `sk_rows_via_convolution`: the two `S_{A,k}`
///   recurrences reproduce the direct grid for `k ≤ max_k`.
///
/// Infinite sets are handled through `A(upto + min A)`; the horizon must
/// reach that far for the `q` checks.
pub fn verify_section2(set: &SetSpec, upto: usize, max_k: usize) -> Result<IdentityReport> {
    let table = comp_polys(set, upto)?;
    let f = table.polys();
    let parts = set.truncate(upto);
    let (odd, even) = set.parity_split(upto)?;
    let odd_set = SetSpec::explicit(odd, set.horizon())?;
    let odd_table = comp_polys(&odd_set, upto)?;
    let reflected: Vec<IntPoly> = f.iter().map(IntPoly::reflect).collect();
    let mut checks = Vec::new();

    // f_A(x)^i, truncated at x^upto, as an independent route to c_A(i, n).
    checks.push({
        let mut fa = vec![BigInt::zero(); upto + 1];
        for &a in &parts {
            fa[a] = BigInt::one();
        }
        let fa = IntPoly::from_coeffs(fa);
        let mut power = IntPoly::one();
        let mut by_power: Vec<IntPoly> = Vec::with_capacity(upto + 1);
        for _ in 0..=upto {
            by_power.push(power.clone());
            let c: Vec<BigInt> = (&power * &fa).into_coeffs().into_iter().take(upto + 1).collect();
            power = IntPoly::from_coeffs(c);
        }
        check_all(ID_RECURRENCE, upto, |n| {
            let col: Vec<BigInt> = by_power.iter().map(|p| p.coeff(n)).collect();
            first_diff(f[n].coeffs(), &IntPoly::from_coeffs(col).into_coeffs())
        })
    });

    checks.push(check_all(ID_DELTA_WEIGHTED, upto, |n| {
        let mut lhs = IntPoly::zero();
        let mut rhs = IntPoly::zero();
        for &a in parts.iter().take_while(|&&a| a <= n) {
            lhs = &lhs + &f[n - a].delta_op(1).scale(&BigInt::from(a));
            rhs = &rhs + &f[n - a].scale(&BigInt::from(n - a));
        }
        first_diff(lhs.coeffs(), rhs.coeffs())
    }));

    checks.push(check_all(ID_REFLECTION, upto, |n| {
        let lhs = &f[n] + &reflected[n];
        let rhs = (0..=n)
            .fold(IntPoly::zero(), |acc, i| &acc + &(&reflected[i] * &f[n - i]))
            .scale(&BigInt::from(2));
        first_diff(lhs.coeffs(), rhs.coeffs())
    }));

    checks.push({
        let fo = odd_table.polys();
        check_all(ID_PARITY, upto, |n| {
            // both sides doubled to stay in Z[t]
            let mut lhs = IntPoly::zero();
            let mut rhs = IntPoly::zero();
            for i in 0..=n {
                let j = n - i;
                let tail = if j % 2 == 0 {
                    &reflected[j] + &f[j]
                } else {
                    &reflected[j] - &f[j]
                };
                lhs = &lhs + &(&fo[i].reflect() * &tail);
                let prod = &f[i] * &reflected[j];
                rhs = if i % 2 == 0 { &rhs + &prod } else { &rhs - &prod };
            }
            first_diff(lhs.coeffs(), rhs.scale(&BigInt::from(2)).coeffs())
        })
    });

    checks.push(if even.is_empty() {
        check_all(ID_ODD_SYMMETRY, upto, |n| {
            let rhs = if n % 2 == 0 { f[n].clone() } else { -&f[n] };
            first_diff(reflected[n].coeffs(), rhs.coeffs())
        })
    } else {
        not_applicable(ID_ODD_SYMMETRY, "set has even parts")
    });

    let delta: Vec<IntPoly> = f.iter().map(|p| p.delta_op(1)).collect();
    checks.push(if set.is_empty() {
        not_applicable(ID_DELTA_Q, "q_A is undefined for the empty set")
    } else {
        let q = q_series(set, upto)?;
        check_all(ID_DELTA_Q, upto, |n| {
            let mut acc = vec![RatNum::zero(); n + 1];
            for i in 1..=n {
                let w = q.q(n - i) * RatNum::from_integer(BigInt::from(i));
                if w.is_zero() {
                    continue;
                }
                for (e, c) in f[i].coeffs().iter().enumerate() {
                    acc[e] += &w * c;
                }
            }
            let target = delta[n].coeffs();
            (0..=n).find(|&e| {
                let t = target.get(e).cloned().unwrap_or_default();
                acc[e] != RatNum::from_integer(t)
            })
        })
    });

    checks.push(check_all(ID_DELTA_CONV, upto, |n| {
        let rhs = (0..n).fold(IntPoly::zero(), |acc, i| &acc + &(&f[n - i] * &f[i]));
        first_diff(delta[n].coeffs(), rhs.coeffs())
    }));

    // Both S_{A,k} recurrences against the direct grid.
    let direct = crate::sums::sk_direct(set, max_k, upto)?;
    let compare = |name: &str, grid: Result<crate::sums::SkGrid>| -> Result<IdentityCheck> {
        let grid = grid?;
        Ok(check_all(name, upto, |n| {
            (0..=max_k).find(|&k| grid.get(k, n) != direct.get(k, n))
        }))
    };
    checks.push(if set.is_empty() {
        not_applicable(ID_ROWS_Q, "q_A is undefined for the empty set")
    } else {
        compare(ID_ROWS_Q, crate::sums::sk_via_q(set, max_k, upto))?
    });
    checks.push(compare(ID_ROWS_CONV, crate::sums::sk_via_conv(set, max_k, upto))?);

    Ok(IdentityReport {
        set: set.render(),
        upto,
        checks,
    })
}

/// Sign word of `q_A(0..=N)` next to the certifier's verdict on its
/// denominator `Σ_{a∈A} a x^{a − min A}` (for `A = {1,2,3}` this is
/// `1 + 2x + 3x²`). The certifier speaks about `1/denominator`; the word
/// is reported alongside it, not inferred from it.
#[derive(Debug, Clone, Serialize)]
pub struct QSignDemo {
    pub set: String,
    pub signs: String,
    pub denominator: Vec<String>,
    pub report: NonPeriodicityReport,
}

pub fn q_sign_demo(set: &SetSpec, upto: usize, config: &CertifierConfig) -> Result<QSignDemo> {
    let q = q_series(set, upto)?;
    let symbols: Vec<Sign> = q
        .coeffs()
        .coeffs()
        .iter()
        .map(|c| Sign::of_int(c.numer()))
        .collect();
    let word = SignWord::new(symbols, set.render(), 0, false)?;
    let elems = set.finite_elements()?;
    let m = elems[0];
    let mut den = vec![BigInt::zero(); elems[elems.len() - 1] - m + 1];
    for &a in &elems {
        den[a - m] = BigInt::from(a);
    }
    let den = IntPoly::from_coeffs(den);
    let report = if den.degree().unwrap_or(0) < 2 {
        nonperiodic::NonPeriodicityReport::inconclusive(&den, config, nonperiodic::REASON_DEGREE)
    } else {
        nonperiodic::check_nonperiodic(&den, config)?
    };
    Ok(QSignDemo {
        set: set.render(),
        signs: word.to_symbol_string(),
        denominator: den.coeffs().iter().map(|c| c.to_string()).collect(),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::parse_spec;
    use num_traits::Signed;

    fn s(text: &str) -> SetSpec {
        parse_spec(text, 200).unwrap()
    }

    /// Oracle: enumerate all `i`-tuples over `parts` summing to `n`.
    fn brute_by_parts(parts: &[usize], i: usize, n: usize) -> u64 {
        fn go(parts: &[usize], left: usize, rem: usize) -> u64 {
            if left == 0 {
                return u64::from(rem == 0);
            }
            parts
                .iter()
                .filter(|&&a| a <= rem)
                .map(|&a| go(parts, left - 1, rem - a))
                .sum()
        }
        go(parts, i, n)
    }

    /// Oracle: partitions as non-increasing tuples.
    fn brute_partitions(parts: &[usize], n: usize) -> u64 {
        fn go(parts: &[usize], max_idx: usize, rem: usize) -> u64 {
            if rem == 0 {
                return 1;
            }
            (0..=max_idx)
                .filter(|&j| parts[j] <= rem)
                .map(|j| go(parts, j, rem - parts[j]))
                .sum()
        }
        if parts.is_empty() {
            return u64::from(n == 0);
        }
        go(parts, parts.len() - 1, n)
    }

    #[test]
    fn seven_compositions_of_four() {
        let t = comp_polys(&s("{1,2,3}"), 4).unwrap();
        assert_eq!(t.poly(4), &IntPoly::from_i64s(&[0, 0, 3, 3, 1]));
        assert_eq!(t.counts()[4], BigInt::from(7));
        assert_eq!(comp_counts(&s("{1,2,3}"), 4).unwrap()[4], BigInt::from(7));
        assert_eq!(comp_by_parts(&s("{1,2,3}"), 2, 4).unwrap(), BigInt::from(3));
        assert_eq!(brute_by_parts(&[1, 2, 3], 2, 4), 3);
    }

    #[test]
    fn degenerate_tables() {
        assert_eq!(comp_polys(&s("{2}"), 5).unwrap().poly(5), &IntPoly::zero());
        for set in [s("{}"), s("{4,7}"), s("N+")] {
            assert_eq!(comp_polys(&set, 0).unwrap().poly(0), &IntPoly::one());
        }
        assert_eq!(comp_counts(&s("{2,3}"), 5).unwrap()[5], BigInt::from(2));
        assert!(comp_polys(&s("{1}"), 201).is_err());
    }

    #[test]
    fn triangle_matches_brute_force() {
        for parts in [vec![1, 2, 3], vec![2, 5], vec![1, 4, 6], vec![3]] {
            let set = SetSpec::explicit(parts.clone(), 50).unwrap();
            let t = comp_polys(&set, 14).unwrap();
            for n in 0..=14 {
                for i in 0..=n + 1 {
                    assert_eq!(t.by_parts(i, n), BigInt::from(brute_by_parts(&parts, i, n)));
                }
            }
        }
    }

    #[test]
    fn partition_examples() {
        let p13 = partition_counts(&s("{1,3}"), 10).unwrap();
        assert_eq!(p13[4], BigInt::from(2));
        assert_eq!(partition_counts(&s("{1,3,5}"), 6).unwrap()[6], BigInt::from(4));
        assert_eq!(partition_counts(&s("{}"), 3).unwrap()[0], BigInt::one());
        for n in 0..=10 {
            assert_eq!(p13[n], BigInt::from(n / 3 + 1));
            assert_eq!(p13[n], BigInt::from(brute_partitions(&[1, 3], n)));
        }
        assert!(partition_counts(&s("N+"), 3).is_err());
    }

    #[test]
    fn q_examples() {
        let q = q_series(&s("{1,2,3}"), 6).unwrap();
        let ints: Vec<RatNum> = [1, -1, 0, 3].iter().map(|&v| RatNum::from_integer(v.into())).collect();
        assert_eq!(&q.coeffs().coeffs()[..4], &ints[..]);
        let q1 = q_series(&s("{1}"), 5).unwrap();
        assert_eq!(q1.coeffs(), &RatSeries::one(5));
        let q2 = q_series(&s("{2}"), 5).unwrap();
        assert_eq!(q2.q(0), &RatNum::new(1.into(), 2.into()));
        assert!((1..=5).all(|n| q2.q(n).is_zero()));
        assert_eq!(q_series(&s("{}"), 3).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn q_json_is_decimal_strings() {
        let js: serde_json::Value = serde_json::from_str(&q_series(&s("{2,3}"), 3).unwrap().to_json()).unwrap();
        assert_eq!(js["coeffs"][0]["num"], "1");
        assert_eq!(js["coeffs"][0]["den"], "2");
        assert_eq!(js["order"], 3);
    }

    #[test]
    fn section2_examples() {
        let report = verify_section2(&s("{1,2,3}"), 40, 2).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(matches!(
            report.check(ID_ODD_SYMMETRY).unwrap().status,
            CheckStatus::NotApplicable { .. }
        ));

        let odd = verify_section2(&s("{1,3,5}"), 40, 2).unwrap();
        assert_eq!(odd.check(ID_ODD_SYMMETRY).unwrap().status, CheckStatus::Pass);
        assert!(odd.all_passed());

        let empty = verify_section2(&s("{}"), 5, 2).unwrap();
        assert!(empty.all_passed());
    }

    #[test]
    fn section2_on_cofinite() {
        let report = verify_section2(&s("N+\\{2,6}"), 30, 2).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn counterexample_points_at_difference() {
        assert_eq!(
            first_diff(&[1.into(), 2.into()], &[1.into(), 3.into(), 0.into()]),
            Some(1)
        );
        assert_eq!(first_diff(&[1.into()], &[1.into(), 0.into()]), None);
    }

    #[test]
    fn odd_sets_reflect_to_alternating_counts() {
        let set = s("{1,3,7}");
        let t = comp_polys(&set, 40).unwrap();
        for (n, p) in t.polys().iter().enumerate() {
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(p.eval_neg_one(), sign * p.eval_one());
            assert!(p.coeffs().iter().all(|c| !c.is_negative()));
        }
    }

    #[test]
    fn q_demo_runs_certifier_on_denominator() {
        let demo = q_sign_demo(&s("{1,2,3}"), 60, &CertifierConfig::default()).unwrap();
        assert_eq!(demo.denominator, vec!["1", "2", "3"]);
        assert!(demo.signs.starts_with("+-0+"));
    }

    #[test]
    fn csv_headers() {
        let c = comp_counts(&s("{1,2,3}"), 4).unwrap();
        assert!(counts_csv(&c).ends_with("4,7\n"));
        let t = comp_polys(&s("{1,2}"), 2).unwrap();
        assert_eq!(t.triangle_csv(), "n,i,c_A(i,n)\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
    }
}
