//! Verifiers for the cofinite and subset-sum constructions, and the
//! horizon-limited searches over part-sets.
//!
//! Every search here decides `(−1)ⁿ S_{A,0}(n) ≥ 0` only for `n` up to a
//! horizon. Non-negativity for all `n` is an instance of the positivity
//! problem for linear recurrences, so results are labelled as horizon
//! verdicts and never as exact answers.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::compositions::{comp_counts, partition_counts};
use crate::error::{Error, Result};
use crate::poly::RatSeries;
use crate::sets::{e_prime, SetKind, SetSpec};
use crate::signs::{sign_word, Sign};
use crate::sums::{first_normalized_violation, sk0_first_violation, sk_fast};

pub const DEFAULT_MAX_F_N: usize = 22;
pub const HORIZON_LABEL: &str = "horizon-limited: non-negativity beyond the horizon is unverified";

fn normalized(n: usize, v: &BigInt) -> BigInt {
    if n.is_multiple_of(2) {
        v.clone()
    } else {
        -v
    }
}

fn render_elems(elems: &[usize]) -> String {
    let inner: Vec<String> = elems.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

#[derive(Debug, Clone, Serialize)]
pub struct Thm34Check {
    #[serde(rename = "E")]
    pub excluded: String,
    pub e_prime: String,
    #[serde(rename = "N")]
    pub upto: usize,
    #[serde(rename = "K")]
    pub max_k: usize,
    /// First `n ≥ 1` with `(−1)ⁿ S_{A,0}(n) ≠ c_{E′}(n) + c_{E′}(n−1)`.
    pub identity_mismatch: Option<usize>,
    pub negative_at: Option<(usize, usize)>,
    pub passed: bool,
}

/// `A = N₊ \ E` for even `E`: `(−1)ⁿ S_{A,0}(n) = c_{E′}(n) + c_{E′}(n−1)`
/// for `1 ≤ n ≤ N`, and every normalized row `k ≤ K` is non-negative.
pub fn verify_thm34(e: &SetSpec, upto: usize, max_k: usize) -> Result<Thm34Check> {
    let excluded = e.finite_elements()?;
    let ep = e_prime(&e.with_horizon(e.horizon().max(upto))?)?;
    let a = SetSpec::cofinite(excluded.clone(), upto.max(1))?;
    let grid = sk_fast(&a, max_k, upto)?;
    let c = comp_counts(&ep, upto)?;
    let identity_mismatch =
        (1..=upto).find(|&n| normalized(n, grid.get(0, n)) != &c[n] + &c[n - 1]);
    let negative_at = (0..=max_k).find_map(|k| first_normalized_violation(grid.row(k).ok()?).map(|n| (k, n)));
    Ok(Thm34Check {
        excluded: render_elems(&excluded),
        e_prime: render_elems(&ep.finite_elements()?),
        upto,
        max_k,
        identity_mismatch,
        negative_at,
        passed: identity_mismatch.is_none() && negative_at.is_none(),
    })
}

/// Exponents of `∏_{b∈B}(1 + x^b) − 1`, i.e. the nonempty subset sums of
/// an all-odd `B`, provided all `2^|B| − 1` of them are distinct.
pub fn construct_thm36(b: &SetSpec) -> Result<SetSpec> {
    let elems = b.finite_elements()?;
    if let Some(even) = elems.iter().find(|&&x| x % 2 == 0) {
        return Err(Error::Precondition(format!("B must be all odd, found {even}")));
    }
    if elems.len() > 24 {
        return Err(Error::Budget(format!("|B| = {} is too large for subset sums", elems.len())));
    }
    let mut sums: Vec<usize> = (1u32..1 << elems.len())
        .map(|mask| {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .sum()
        })
        .collect();
    sums.sort_unstable();
    if sums.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!(
            "subset sums of {} are not distinct",
            render_elems(&elems)
        )));
    }
    let top = sums.last().copied().unwrap_or(1);
    SetSpec::explicit(sums, b.horizon().max(top))
}

#[derive(Debug, Clone, Serialize)]
pub struct Thm36Check {
    #[serde(rename = "B")]
    pub base: String,
    #[serde(rename = "A")]
    pub constructed: String,
    #[serde(rename = "N")]
    pub upto: usize,
    /// First `n` with `(−1)ⁿ S_{A,0}(n) ≠ p_B(n)`.
    pub mismatch: Option<usize>,
    pub passed: bool,
}

pub fn verify_thm36(b: &SetSpec, upto: usize) -> Result<Thm36Check> {
    let a = construct_thm36(b)?;
    let a = a.with_horizon(a.horizon().max(upto))?;
    let grid = sk_fast(&a, 0, upto)?;
    let p = partition_counts(b, upto)?;
    let mismatch = (0..=upto).find(|&n| normalized(n, grid.get(0, n)) != p[n]);
    Ok(Thm36Check {
        base: render_elems(&b.finite_elements()?),
        constructed: render_elems(&a.finite_elements()?),
        upto,
        mismatch,
        passed: mismatch.is_none(),
    })
}

/// One subset of `{1,…,N}`; bit `i` of `mask` stands for `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetVerdict {
    pub mask: u64,
    pub first_violation: Option<usize>,
}

impl SubsetVerdict {
    pub fn elements(&self) -> Vec<usize> {
        mask_elements(self.mask)
    }

    pub fn k0_ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

impl Serialize for SubsetVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            mask: u64,
            set: String,
            k0_ok: bool,
            first_violation: Option<usize>,
        }
        Row {
            mask: self.mask,
            set: render_elems(&self.elements()),
            k0_ok: self.k0_ok(),
            first_violation: self.first_violation,
        }
        .serialize(s)
    }
}

fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FEnumeration {
    #[serde(rename = "N")]
    pub n: usize,
    pub horizon: usize,
    /// Subsets (the empty one included) passing up to the horizon; an
    /// upper-bound candidate for `F(N)`.
    pub count: usize,
    pub lower_bound: usize,
    pub note: &'static str,
    pub verdicts: Vec<SubsetVerdict>,
}

impl FEnumeration {
    pub fn verdict(&self, elems: &[usize]) -> Option<&SubsetVerdict> {
        let mask = elems.iter().try_fold(0u64, |m, &a| (1..=self.n).contains(&a).then_some(m | 1 << (a - 1)))?;
        self.verdicts.get(mask as usize)
    }

    /// CSV with header `mask,set,k0_ok,first_violation`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mask,set,k0_ok,first_violation\n");
        for v in &self.verdicts {
            out.push_str(&format!(
                "{},\"{}\",{},{}\n",
                v.mask,
                render_elems(&v.elements()),
                v.k0_ok(),
                v.first_violation.map(|n| n.to_string()).unwrap_or_default()
            ));
        }
        out
    }
}

/// Tests every `A ⊆ {1,…,N}` for `(−1)ⁿ S_{A,0}(n) ≥ 0`, `n ≤ horizon`.
///
/// Row `k = 0` suffices: it is one of the conditions, and its
/// non-negativity propagates to every `k` through the convolution
/// recurrence.
pub fn enumerate_f(n: usize, horizon: usize) -> Result<FEnumeration> {
    enumerate_f_bounded(n, horizon, DEFAULT_MAX_F_N)
}

pub fn enumerate_f_bounded(n: usize, horizon: usize, max_n: usize) -> Result<FEnumeration> {
    if n > max_n || n >= 63 {
        return Err(Error::Budget(format!("N = {n} exceeds the subset budget N ≤ {max_n}")));
    }
    if horizon < 4 * n {
        return Err(Error::Precondition(format!("horizon {horizon} is below 4N = {}", 4 * n)));
    }
    let verdicts: Vec<SubsetVerdict> = (0u64..1 << n)
        .into_par_iter()
        .map(|mask| SubsetVerdict {
            mask,
            first_violation: sk0_first_violation(&mask_elements(mask), horizon),
        })
        .collect();
    Ok(FEnumeration {
        n,
        horizon,
        count: verdicts.iter().filter(|v| v.k0_ok()).count(),
        lower_bound: 1 << n.div_ceil(2),
        note: HORIZON_LABEL,
        verdicts,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct UnionCheck {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "N")]
    pub upto: usize,
    /// First coefficient of `1/C_A + 1/C_B − 1/C_{A∪B} − 1` that is
    /// nonzero, at `t = 1` and `t = −1`.
    pub mismatch_t_plus: Option<usize>,
    pub mismatch_t_minus: Option<usize>,
    pub passed: bool,
}

/// `1/C_A + 1/C_B − 1/C_{A∪B} = 1` as series in `x` at `t = ±1`, with
/// each `C_X(t,x) = Σ f_{X,n}(t) xⁿ` inverted as a series.
pub fn union_relation_check(a: &SetSpec, b: &SetSpec, upto: usize) -> Result<UnionCheck> {
    let ma = a.members_up_to(upto)?;
    let mb = b.members_up_to(upto)?;
    if let Some(x) = ma.iter().find(|x| mb.binary_search(x).is_ok()) {
        return Err(Error::Precondition(format!("sets share the element {x}")));
    }
    let mut mu: Vec<usize> = ma.iter().chain(&mb).copied().collect();
    mu.sort_unstable();
    let u = SetSpec::explicit(mu, upto.max(1))?;

    let inverse_gf = |set: &SetSpec, t: i8| -> Result<RatSeries> {
        let values: Vec<BigInt> = if t > 0 {
            comp_counts(set, upto)?
        } else {
            sk_fast(set, 0, upto)?.row(0)?.to_vec()
        };
        RatSeries::from_ints(&values, upto).inverse()
    };
    let mut mismatch = [None, None];
    for (slot, t) in [(0, 1i8), (1, -1)] {
        let lhs = &(&inverse_gf(a, t)? + &inverse_gf(b, t)?) - &inverse_gf(&u, t)?;
        let one = RatSeries::one(upto);
        mismatch[slot] = (0..=upto).find(|&n| lhs.coeff(n) != one.coeff(n));
    }
    Ok(UnionCheck {
        a: a.render(),
        b: b.render(),
        upto,
        mismatch_t_plus: mismatch[0],
        mismatch_t_minus: mismatch[1],
        passed: mismatch.iter().all(Option::is_none),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SupersetSearch {
    #[serde(rename = "A")]
    pub a: String,
    pub first_violation: usize,
    pub budget: usize,
    pub horizon: usize,
    pub universe_max: usize,
    /// Size of the smallest repairing `X`, if one was found.
    pub size: Option<usize>,
    /// Every minimal `X` with `A ∪ X` passing, ordered lexicographically.
    pub additions: Vec<Vec<usize>>,
    pub tested: usize,
    pub label: &'static str,
}

impl SupersetSearch {
    /// `A ∪ X` for each minimal `X`.
    pub fn supersets(&self, a: &[usize]) -> Vec<Vec<usize>> {
        self.additions
            .iter()
            .map(|x| {
                let mut b: Vec<usize> = a.iter().chain(x).copied().collect();
                b.sort_unstable();
                b
            })
            .collect()
    }
}

fn combinations(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < size - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Breadth-first search for the smallest `X ⊆ {1,…,universe_max} \ A`,
/// `|X| ≤ budget`, such that `A ∪ X` passes up to the horizon. The default
/// universe is `{1,…,2·max A + 2}`.
pub fn optimal_superset_search(
    a: &SetSpec,
    budget: usize,
    horizon: usize,
    universe_max: Option<usize>,
) -> Result<SupersetSearch> {
    let elems = a.finite_elements()?;
    let Some(first_violation) = sk0_first_violation(&elems, horizon) else {
        return Err(Error::Precondition(format!(
            "{} already passes up to {horizon}; nothing to repair",
            a.render()
        )));
    };
    let umax = universe_max.unwrap_or(2 * elems.last().copied().unwrap_or(0) + 2);
    let pool: Vec<usize> = (1..=umax).filter(|x| elems.binary_search(x).is_err()).collect();
    let mut tested = 0;
    for size in 1..=budget.min(pool.len()) {
        let combos = combinations(&pool, size);
        tested += combos.len();
        let passing: Vec<Vec<usize>> = combos
            .into_par_iter()
            .filter(|x| {
                let mut parts: Vec<usize> = elems.iter().chain(x.iter()).copied().collect();
                parts.sort_unstable();
                sk0_first_violation(&parts, horizon).is_none()
            })
            .collect();
        if !passing.is_empty() {
            return Ok(SupersetSearch {
                a: a.render(),
                first_violation,
                budget,
                horizon,
                universe_max: umax,
                size: Some(size),
                additions: passing,
                tested,
                label: HORIZON_LABEL,
            });
        }
    }
    Ok(SupersetSearch {
        a: a.render(),
        first_violation,
        budget,
        horizon,
        universe_max: umax,
        size: None,
        additions: Vec::new(),
        tested,
        label: HORIZON_LABEL,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Problem44Report {
    pub m: usize,
    pub horizon: usize,
    #[serde(rename = "A")]
    pub set: String,
    pub first_violation: Option<usize>,
    pub passes_to_horizon: bool,
    /// Sign word of `(−1)ⁿ S_{A,0}(n)` up to the horizon.
    pub normalized_word: String,
    pub label: &'static str,
}

/// `A = {(mⁱ − 1)/(m − 1) : i ≥ 1} ∪ {m}` for even `m > 3`, truncated at
/// the horizon.
pub fn problem44_experiment(m: usize, horizon: usize) -> Result<Problem44Report> {
    if m <= 3 || m % 2 == 1 {
        return Err(Error::Precondition(format!("m must be even and greater than 3, got {m}")));
    }
    let mut elems = SetSpec::new(SetKind::Repunit(m), horizon)?.members_up_to(horizon)?;
    if !elems.contains(&m) && m <= horizon {
        elems.push(m);
        elems.sort_unstable();
    }
    let set = SetSpec::explicit(elems.clone(), horizon)?;
    let grid = sk_fast(&set, 0, horizon)?;
    let word = sign_word(&grid, 0, true)?;
    let first_violation = word.symbols().iter().position(|&s| s == Sign::Neg);
    Ok(Problem44Report {
        m,
        horizon,
        set: render_elems(&elems),
        first_violation,
        passes_to_horizon: first_violation.is_none(),
        normalized_word: word.to_symbol_string(),
        label: HORIZON_LABEL,
    })
}
