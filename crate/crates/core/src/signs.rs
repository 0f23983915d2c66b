//! Sign words of grid rows and their eventual-period analysis.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::compositions::comp_counts;
use crate::error::{Error, Result};
use crate::sets::SetSpec;
use crate::sums::{sk_fast, SkGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of_int(v: &BigInt) -> Sign {
        if v.is_positive() {
            Sign::Pos
        } else if v.is_zero() {
            Sign::Zero
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Neg),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Pos),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Neg),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Pos),
            _ => None,
        }
    }
}

/// Renders a run of signs as `+`, `0`, `-`.
pub fn symbols_to_string(symbols: &[Sign]) -> String {
    symbols.iter().map(|s| s.symbol()).collect()
}

/// Parses a `+0-` string.
pub fn parse_symbols(text: &str) -> Result<Vec<Sign>> {
    text.chars()
        .map(|c| {
            Sign::from_symbol(c).ok_or_else(|| Error::Parse {
                text: text.to_string(),
                reason: format!("unexpected sign symbol {c:?}"),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignWord {
    #[serde(serialize_with = "ser_symbols")]
    symbols: Vec<Sign>,
    set: String,
    k: usize,
    normalized: bool,
}

fn ser_symbols<S: serde::Serializer>(symbols: &[Sign], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&symbols_to_string(symbols))
}

impl SignWord {
    pub fn new(symbols: Vec<Sign>, set: String, k: usize, normalized: bool) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Precondition("sign word must be non-empty".into()));
        }
        Ok(Self {
            symbols,
            set,
            k,
            normalized,
        })
    }

    /// Word with no metadata, for analysing arbitrary sequences.
    pub fn bare(symbols: Vec<Sign>) -> Result<Self> {
        Self::new(symbols, String::new(), 0, false)
    }

    pub fn symbols(&self) -> &[Sign] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn set(&self) -> &str {
        &self.set
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn normalized(&self) -> bool {
        self.normalized
    }

    pub fn to_symbol_string(&self) -> String {
        symbols_to_string(&self.symbols)
    }

    pub fn contains(&self, sign: Sign) -> bool {
        self.symbols.contains(&sign)
    }
}

/// Symbol `n` is `sign((−1)ⁿ S_{A,k}(n))` when `normalized`, else `sign(S_{A,k}(n))`.
pub fn sign_word(grid: &SkGrid, k: usize, normalized: bool) -> Result<SignWord> {
    let row = grid.row(k)?;
    let symbols = row
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let s = Sign::of_int(v);
            if normalized && n % 2 == 1 {
                Sign::from_value(-s.value()).unwrap()
            } else {
                s
            }
        })
        .collect();
    SignWord::new(symbols, grid.set().render(), k, normalized)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ConsistentAtHorizon,
    NoPeriodFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodFinding {
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    #[serde(serialize_with = "ser_symbols")]
    pub pattern: Vec<Sign>,
    pub verdict: Verdict,
    pub length: usize,
    pub max_pre: usize,
    pub max_period: usize,
}

impl PeriodFinding {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::ConsistentAtHorizon
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("period finding serializes")
    }
}

/// Lexicographically least `(p, T)` with `p ≤ max_pre`, `T ≤ max_period`
/// and `word[n] = word[n−T]` for every `p + T ≤ n < len`.
///
/// Requires `max_pre + 2·max_period ≤ len`, so any reported pattern is
/// seen at least twice after the preperiod. Consistency is only claimed
/// up to the end of the word.
pub fn detect_period(word: &SignWord, max_pre: usize, max_period: usize) -> Result<PeriodFinding> {
    let w = word.symbols();
    let len = w.len();
    if max_period == 0 || max_pre + 2 * max_period > len {
        return Err(Error::WordTooShort {
            len,
            max_pre,
            max_period,
        });
    }
    let mut best: Option<(usize, usize)> = None;
    for t in 1..=max_period {
        let last_bad = (t..len).rev().find(|&n| w[n] != w[n - t]);
        let p = last_bad.map_or(0, |l| l + 1 - t);
        if p <= max_pre && best.is_none_or(|(bp, _)| p < bp) {
            best = Some((p, t));
            if p == 0 {
                break;
            }
        }
    }
    Ok(match best {
        Some((p, t)) => PeriodFinding {
            preperiod: Some(p),
            period: Some(t),
            pattern: w[p..p + t].to_vec(),
            verdict: Verdict::ConsistentAtHorizon,
            length: len,
            max_pre,
            max_period,
        },
        None => PeriodFinding {
            preperiod: None,
            period: None,
            pattern: Vec::new(),
            verdict: Verdict::NoPeriodFound,
            length: len,
            max_pre,
            max_period,
        },
    })
}

/// Closed-form normalized `k = 0` pattern for `A = {1,…,m}`:
/// `(1, 1, 0_{m−1})` for odd `m`, `(1, 1, 0_{m−1}, −1, −1, 0_{m−1})` for even `m`.
pub fn prop33_pattern(m: usize) -> Vec<Sign> {
    let mut block = vec![Sign::Pos, Sign::Pos];
    block.extend(std::iter::repeat_n(Sign::Zero, m - 1));
    if m.is_multiple_of(2) {
        let neg: Vec<Sign> = block.iter().map(|s| Sign::from_value(-s.value()).unwrap()).collect();
        block.extend(neg);
    }
    block
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop33Check {
    pub m: usize,
    #[serde(rename = "N")]
    pub upto: usize,
    #[serde(serialize_with = "ser_symbols")]
    pub expected_pattern: Vec<Sign>,
    pub word: SignWord,
    pub first_mismatch: Option<usize>,
    pub passed: bool,
}

pub fn check_prop33(m: usize, upto: usize) -> Result<Prop33Check> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let set = SetSpec::range(m, upto.max(m))?;
    let grid = sk_fast(&set, 0, upto)?;
    let word = sign_word(&grid, 0, true)?;
    let pattern = prop33_pattern(m);
    let first_mismatch = word
        .symbols()
        .iter()
        .enumerate()
        .find(|(n, s)| **s != pattern[n % pattern.len()])
        .map(|(n, _)| n);
    Ok(Prop33Check {
        m,
        upto,
        expected_pattern: pattern,
        word,
        first_mismatch,
        passed: first_mismatch.is_none(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OddSetCheck {
    pub set: String,
    #[serde(rename = "N")]
    pub upto: usize,
    #[serde(rename = "K")]
    pub max_k: usize,
    /// First `n` with `(−1)ⁿ S_{A,0}(n) ≠ c_A(n)`.
    pub count_mismatch: Option<usize>,
    /// First `(k, n)` whose normalized sign is `−`.
    pub negative_at: Option<(usize, usize)>,
    pub passed: bool,
}

/// For all-odd `A`: `(−1)ⁿ S_{A,0}(n) = c_A(n)` and no normalized word
/// for `k ≤ max_k` contains `−`.
pub fn check_oddset(set: &SetSpec, upto: usize, max_k: usize) -> Result<OddSetCheck> {
    let members = set.members_up_to(upto)?;
    if let Some(&even) = members.iter().find(|&&a| a % 2 == 0) {
        return Err(Error::Precondition(format!("set contains the even part {even}")));
    }
    let grid = sk_fast(set, max_k, upto)?;
    let counts = comp_counts(set, upto)?;
    let count_mismatch = (0..=upto).find(|&n| {
        let s = grid.get(0, n);
        let normalized = if n % 2 == 0 { s.clone() } else { -s };
        normalized != counts[n]
    });
    let mut negative_at = None;
    'rows: for k in 0..=max_k {
        let word = sign_word(&grid, k, true)?;
        if let Some(n) = word.symbols().iter().position(|&s| s == Sign::Neg) {
            negative_at = Some((k, n));
            break 'rows;
        }
    }
    Ok(OddSetCheck {
        set: set.render(),
        upto,
        max_k,
        count_mismatch,
        negative_at,
        passed: count_mismatch.is_none() && negative_at.is_none(),
    })
}

/// Target pattern `(1_{m+1}, (−1)_{m+1})`.
pub fn conjecture_pattern(m: usize) -> Vec<Sign> {
    let mut v = vec![Sign::Pos; m + 1];
    v.extend(std::iter::repeat_n(Sign::Neg, m + 1));
    v
}

/// Detected period of a normalized word next to the conjectured shape.
/// Instrumentation only; agreement at a finite horizon proves nothing.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureCheck {
    pub m: usize,
    pub k: usize,
    #[serde(rename = "N")]
    pub upto: usize,
    pub finding: PeriodFinding,
    #[serde(serialize_with = "ser_symbols")]
    pub expected_pattern: Vec<Sign>,
    /// Smallest `n ≥ preperiod` from which the word reads the expected
    /// pattern from its first symbol on.
    pub aligned_preperiod: Option<usize>,
    pub expected_period: usize,
    /// The pattern is only conjectured for `k ≥ 2(m+1)`; below that only
    /// the period length is.
    pub pattern_claimed: bool,
    pub matches_conjecture: bool,
    pub label: &'static str,
}

pub fn check_conjecture(m: usize, k: usize, upto: usize) -> Result<ConjectureCheck> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Precondition(format!("conjecture concerns even m ≥ 2, got {m}")));
    }
    let set = SetSpec::range(m, upto.max(m))?;
    let grid = sk_fast(&set, k, upto)?;
    let word = sign_word(&grid, k, true)?;
    let max_period = (4 * (m + 1)).min(word.len() / 4).max(1);
    let max_pre = word.len().saturating_sub(2 * max_period) * 3 / 4;
    let finding = detect_period(&word, max_pre, max_period)?;
    let expected = conjecture_pattern(m);
    let aligned_preperiod = match (finding.preperiod, finding.period) {
        (Some(p), Some(t)) if t == expected.len() => (0..t)
            .find(|&r| (0..t).all(|j| finding.pattern[(r + j) % t] == expected[j]))
            .map(|r| p + r),
        _ => None,
    };
    let pattern_claimed = k >= expected.len();
    let period_ok = finding.period.is_some_and(|t| expected.len().is_multiple_of(t));
    Ok(ConjectureCheck {
        m,
        k,
        upto,
        matches_conjecture: period_ok && (!pattern_claimed || aligned_preperiod.is_some()),
        expected_period: expected.len(),
        pattern_claimed,
        finding,
        expected_pattern: expected,
        aligned_preperiod,
        label: "conjecture-consistency at horizon, not a proof",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::parse_spec;

    fn word(text: &str) -> SignWord {
        SignWord::bare(parse_symbols(text).unwrap()).unwrap()
    }

    fn grid_word(spec: &str, k: usize, n: usize) -> SignWord {
        let set = parse_spec(spec, 20_000).unwrap();
        sign_word(&sk_fast(&set, k, n).unwrap(), k, true).unwrap()
    }

    #[test]
    fn sign_words_of_small_sets() {
        assert_eq!(grid_word("{1,2,3}", 0, 11).to_symbol_string(), "++00++00++00");
        assert_eq!(grid_word("{1,2}", 0, 11).to_symbol_string(), "++0--0++0--0");
        assert_eq!(grid_word("{1}", 0, 7).to_symbol_string(), "++++++++");
        let set = parse_spec("{1,2}", 50).unwrap();
        let raw = sign_word(&sk_fast(&set, 0, 5).unwrap(), 0, false).unwrap();
        assert_eq!(raw.to_symbol_string(), "+-0+-0");
        assert!(sign_word(&sk_fast(&set, 0, 5).unwrap(), 1, true).is_err());
    }

    #[test]
    fn empty_word_rejected() {
        assert!(SignWord::bare(Vec::new()).is_err());
        assert!(parse_symbols("+x").is_err());
    }

    #[test]
    fn detect_simple_periods() {
        let f = detect_period(&word("++++++"), 0, 3).unwrap();
        assert_eq!((f.preperiod, f.period), (Some(0), Some(1)));
        let f = detect_period(&grid_word("{1,2,3}", 0, 99), 10, 20).unwrap();
        assert_eq!((f.preperiod, f.period), (Some(0), Some(4)));
        assert_eq!(symbols_to_string(&f.pattern), "++00");
        let f = detect_period(&word("-0+-+-+-+-"), 4, 3).unwrap();
        assert_eq!((f.preperiod, f.period), (Some(2), Some(2)));
        assert_eq!(symbols_to_string(&f.pattern), "+-");
    }

    #[test]
    fn detect_reports_failure_and_checks_length() {
        let f = detect_period(&word("+-0++-0-+00+-+0-"), 2, 3).unwrap();
        assert_eq!(f.verdict, Verdict::NoPeriodFound);
        assert!(detect_period(&word("++++"), 1, 2).is_err());
        assert!(detect_period(&word("++++"), 0, 0).is_err());
    }

    #[test]
    fn json_shape() {
        let f = detect_period(&word("+0+0+0"), 0, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(v["pattern"], "+0");
        assert_eq!(v["verdict"], "ConsistentAtHorizon");
        assert_eq!(v["period"], 2);
    }

    #[test]
    fn prop33_small_cases() {
        assert_eq!(symbols_to_string(&prop33_pattern(3)), "++00");
        assert_eq!(symbols_to_string(&prop33_pattern(2)), "++0--0");
        for m in 1..=9 {
            let c = check_prop33(m, 200).unwrap();
            assert!(c.passed, "m = {m}: mismatch at {:?}", c.first_mismatch);
        }
    }

    #[test]
    fn odd_range_has_no_negative_rows() {
        for m in [1, 3, 5, 7] {
            let set = SetSpec::range(m, 300).unwrap();
            let g = sk_fast(&set, 4, 150).unwrap();
            for k in 0..=4 {
                assert!(!sign_word(&g, k, true).unwrap().contains(Sign::Neg), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn odd_set_check() {
        let c = check_oddset(&parse_spec("{1,3,5}", 500).unwrap(), 200, 4).unwrap();
        assert!(c.passed);
        let c = check_oddset(&parse_spec("repunit(4)", 500).unwrap(), 120, 2).unwrap();
        assert!(c.passed);
        assert!(check_oddset(&parse_spec("{1,2}", 500).unwrap(), 20, 0).is_err());
    }

    #[test]
    fn conjecture_small_run() {
        let c = check_conjecture(2, 6, 600).unwrap();
        assert_eq!(c.finding.verdict, Verdict::ConsistentAtHorizon);
        assert_eq!(c.finding.period, Some(6));
        assert!(c.matches_conjecture);
        assert!(check_conjecture(3, 6, 100).is_err());
        let low = check_conjecture(4, 1, 300).unwrap();
        assert!(!low.pattern_claimed && low.aligned_preperiod.is_none());
        assert_eq!(low.finding.period, Some(10));
        assert!(low.matches_conjecture);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sign() -> impl Strategy<Value = Sign> {
            prop_oneof![Just(Sign::Neg), Just(Sign::Zero), Just(Sign::Pos)]
        }

        proptest! {
            #[test]
            fn synthesized_words_are_recovered(
                pre in proptest::collection::vec(sign(), 0..12),
                pattern in proptest::collection::vec(sign(), 1..9),
                reps in 2usize..6,
                tail in 0usize..9,
            ) {
                let t = pattern.len();
                let mut symbols = pre.clone();
                for i in 0..reps * t + tail {
                    symbols.push(pattern[i % t]);
                }
                let p = pre.len();
                let w = SignWord::bare(symbols.clone()).unwrap();
                let f = detect_period(&w, p, t).unwrap();
                prop_assert_eq!(f.verdict, Verdict::ConsistentAtHorizon);
                let (pp, tt) = (f.preperiod.unwrap(), f.period.unwrap());
                prop_assert!(pp <= p);
                prop_assert_eq!(t % tt, 0);
                for n in pp..symbols.len() {
                    prop_assert_eq!(symbols[n], f.pattern[(n - pp) % tt]);
                }
            }
        }
    }
}
