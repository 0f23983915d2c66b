//! Dominant-root certificate for non-periodic coefficient signs of `1/p`.
//!
//! Write `p(x) = c ∏ (1 − ωᵢx)^{αᵢ}`, so the `ωᵢ` are reciprocals of the
//! roots. The sign sequence of the coefficients of `1/p` is not eventually
//! periodic when
//!
//! 1. the largest `|ω|` belongs to exactly one non-real conjugate pair,
//! 2. every other `|ωᵢ|` is strictly smaller, and
//! 3. `ζ = ω₀/|ω₀|` is not a root of unity.
//!
//! The numeric screen for (3) tests `|ζᴺ − 1|` for every `N` with
//! `φ(N) ≤ 2d(d−1)`: `ζ² = ω₀/ω̄₀` is a ratio of two roots so has degree
//! at most `d(d−1)`, and `ζ` at most doubles that. The optional exact
//! screen takes `R(x) = Res_y(p(y), p(xy))` with every `x − 1` stripped
//! and checks that no `Φ_N` with `φ(N) ≤ deg R` divides it. Then no ratio
//! of distinct roots, `ζ²` included, is a root of unity.
//!
//! Of the conjugate pair, `ω₀` is the one with negative imaginary part.

mod fixed;
mod roots;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use self::fixed::{Cx, Scale};
use crate::error::{Error, Result};
use crate::poly::{cyclotomic, distinct_ratio_poly, totient_candidates, IntPoly};
use crate::sets::SetSpec;
use crate::signs::{detect_period, PeriodFinding, Sign, SignWord};

pub const REASON_NO_CONVERGENCE: &str = "roots_did_not_converge";
pub const REASON_DOMINANT_REAL: &str = "dominant_root_real";
pub const REASON_DOMINANT_NOT_PAIR: &str = "dominant_not_single_conjugate_pair";
pub const REASON_GAP_TOO_SMALL: &str = "modulus_gap_too_small";
pub const REASON_NEAR_UNITY: &str = "zeta_near_root_of_unity";
pub const REASON_EXACT_CERTIFIED: &str = "exact_screen_certified";
pub const REASON_EXACT_DIVISIBLE: &str = "exact_screen_cyclotomic_factor";
pub const REASON_EXACT_SKIPPED: &str = "exact_screen_skipped_degree";
pub const REASON_UNITY_BY_EXACT: &str = "unity_settled_by_exact_screen";
pub const REASON_ODD_SET: &str = "odd_parts_signs_settled";
pub const REASON_DEGREE: &str = "degree_below_two";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifierConfig {
    /// Fractional bits of the fixed-point arithmetic.
    pub precision: usize,
    #[serde(with = "real_str")]
    pub tol: f64,
    #[serde(with = "real_str")]
    pub gap_tol: f64,
    #[serde(with = "real_str")]
    pub unity_tol: f64,
    pub exact: bool,
    pub exact_max_degree: usize,
}

/// Tolerances travel as decimal strings; plain JSON numbers are accepted
/// on input.
mod real_str {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{v:e}"))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Text(String),
        Num(f64),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Either::deserialize(d)? {
            Either::Num(v) => Ok(v),
            Either::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl Default for CertifierConfig {
    fn default() -> Self {
        Self {
            precision: 256,
            tol: 2f64.powi(-128),
            gap_tol: 2f64.powi(-20),
            unity_tol: 2f64.powi(-20),
            exact: false,
            exact_max_degree: 12,
        }
    }
}

impl CertifierConfig {
    pub fn with_exact(mut self, exact: bool) -> Self {
        self.exact = exact;
        self
    }

    fn validate(&self) -> Result<()> {
        let ok = self.precision >= 64
            && self.tol > 0.0
            && self.gap_tol > 0.0
            && self.unity_tol > 0.0
            && self.tol.log2() > -(self.precision as f64) + 16.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(
                "certifier needs precision ≥ 64, positive tolerances and tol above 2^(16 − precision)".into(),
            ))
        }
    }
}

/// A complex number as decimal strings, plus an `f64` view.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: String,
    pub im: String,
    #[serde(skip)]
    approx: (f64, f64),
}

impl ComplexValue {
    fn from_cx(scale: Scale, z: &Cx) -> Self {
        Self {
            re: scale.decimal(&z.re, scale.digits()),
            im: scale.decimal(&z.im, scale.digits()),
            approx: scale.c_to_f64(z),
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        self.approx
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootEntry {
    pub value: ComplexValue,
    pub modulus: String,
    pub multiplicity: usize,
    /// Radius of a disk about `value` known to contain the root.
    pub error_bound: String,
    pub real: bool,
}

#[derive(Debug, Clone)]
struct HpEntry {
    z: Cx,
    modulus: BigInt,
    radius: BigInt,
}

/// Roots of `p` sorted by modulus, then real part.
#[derive(Debug, Clone, Serialize)]
pub struct RootProfile {
    pub poly: Vec<String>,
    pub squarefree_degree: usize,
    pub roots: Vec<RootEntry>,
    /// Indices into `roots` of numerically coincident groups.
    pub clusters: Vec<Vec<usize>>,
    #[serde(skip)]
    hp: Vec<HpEntry>,
    #[serde(skip)]
    bits: usize,
}

impl RootProfile {
    pub fn approx_roots(&self) -> Vec<(f64, f64)> {
        self.roots.iter().map(|r| r.value.approx()).collect()
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// All complex roots of `p`, multiplicities from an exact square-free
/// decomposition, each refined until its last correction is below `tol`.
pub fn roots_numeric(p: &IntPoly, precision: usize, tol: f64) -> Result<RootProfile> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::Precondition("root finding needs degree ≥ 1".into()));
    }
    let scale = Scale::new(precision);
    let tol_fx = scale.lift_f64(tol);
    let two_tol = &tol_fx * 2;

    let mut found: Vec<(HpEntry, usize)> = Vec::new();
    let mut sf_degree = 0;
    for (factor, mult) in p.squarefree_factors() {
        let fd = factor.degree().unwrap();
        sf_degree += fd;
        let mut local: Vec<HpEntry> = Vec::new();
        for r in roots::solve_squarefree(&factor, scale, &tol_fx)? {
            // |f(r)| ≤ tol·(1+|r|)^deg f
            let modulus = scale.c_abs(&r.z);
            let bound = (0..fd).fold(tol_fx.clone(), |acc, _| scale.mul(&acc, &(scale.one() + &modulus)));
            if r.residual > bound {
                return Err(Error::NoConvergence { iterations: 0 });
            }
            local.push(HpEntry {
                z: r.z,
                modulus,
                radius: r.radius,
            });
        }
        enforce_conjugates(scale, &mut local, &tol_fx)?;
        found.extend(local.into_iter().map(|e| (e, mult)));
    }

    found.sort_by(|(a, _), (b, _)| {
        a.modulus
            .cmp(&b.modulus)
            .then(a.z.re.cmp(&b.z.re))
            .then(a.z.im.cmp(&b.z.im))
    });

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for i in 0..found.len() {
        let near = clusters.iter_mut().find(|c| {
            c.iter()
                .any(|&j| scale.c_abs(&scale.c_sub(&found[i].0.z, &found[j].0.z)) <= two_tol)
        });
        match near {
            Some(c) => c.push(i),
            None => clusters.push(vec![i]),
        }
    }

    let digits = scale.digits();
    let roots = found
        .iter()
        .map(|(e, mult)| RootEntry {
            value: ComplexValue::from_cx(scale, &e.z),
            modulus: scale.decimal(&e.modulus, digits),
            multiplicity: *mult,
            error_bound: format!("{:.3e}", scale.approx(&e.radius)),
            real: e.z.im.is_zero(),
        })
        .collect();
    Ok(RootProfile {
        poly: coeff_strings(p),
        squarefree_degree: sf_degree,
        roots,
        clusters,
        hp: found.into_iter().map(|(e, _)| e).collect(),
        bits: precision,
    })
}

/// Snaps roots within their error disk of the real axis onto it and makes
/// every non-real root the exact conjugate of its partner.
fn enforce_conjugates(scale: Scale, roots: &mut [HpEntry], tol: &BigInt) -> Result<()> {
    for r in roots.iter_mut() {
        if r.z.im.abs() <= &r.radius + tol {
            r.z.im = BigInt::zero();
            r.modulus = r.z.re.abs();
        }
    }
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] || !roots[i].z.im.is_positive() {
            continue;
        }
        let target = scale.c_conj(&roots[i].z);
        let partner = (0..roots.len())
            .filter(|&j| !used[j] && roots[j].z.im.is_negative())
            .min_by_key(|&j| scale.c_abs(&scale.c_sub(&roots[j].z, &target)));
        let Some(j) = partner else {
            return Err(Error::NoConvergence { iterations: 0 });
        };
        used[i] = true;
        used[j] = true;
        roots[j].z = target;
        roots[j].modulus = roots[i].modulus.clone();
        roots[j].radius = roots[j].radius.clone().max(roots[i].radius.clone());
    }
    let unpaired = roots
        .iter()
        .enumerate()
        .any(|(i, r)| r.z.im.is_negative() && !used[i]);
    if unpaired {
        return Err(Error::NoConvergence { iterations: 0 });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertVerdict {
    NotEventuallyPeriodic,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct DominantPair {
    /// Root of `p` in the pair with positive imaginary part.
    pub root: ComplexValue,
    pub omega0: ComplexValue,
    pub root_modulus: String,
    pub multiplicity: usize,
    /// `(|z₁| − |z₀|)/|z₀|` to the next root modulus; absent when the pair
    /// exhausts the roots.
    pub relative_gap: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaTest {
    pub degree_bound: usize,
    pub candidates_checked: usize,
    pub max_order: usize,
    pub min_distance: String,
    pub min_order: usize,
    #[serde(skip)]
    min_distance_f64: f64,
}

impl ZetaTest {
    pub fn min_distance_f64(&self) -> f64 {
        self.min_distance_f64
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactScreen {
    pub ratio_poly_degree: usize,
    pub orders_tested: usize,
    pub dividing_orders: Vec<usize>,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NonPeriodicityReport {
    pub poly: Vec<String>,
    pub config: CertifierConfig,
    pub roots: Option<RootProfile>,
    pub dominant: Option<DominantPair>,
    pub zeta: Option<ComplexValue>,
    pub zeta_pow_12: Option<ComplexValue>,
    pub zeta_test: Option<ZetaTest>,
    pub exact: Option<ExactScreen>,
    pub verdict: CertVerdict,
    pub reasons: Vec<String>,
}

impl NonPeriodicityReport {
    /// Report that stops before any analysis.
    pub fn inconclusive(p: &IntPoly, config: &CertifierConfig, reason: &str) -> Self {
        Self {
            poly: coeff_strings(p),
            config: config.clone(),
            roots: None,
            dominant: None,
            zeta: None,
            zeta_pow_12: None,
            zeta_test: None,
            exact: None,
            verdict: CertVerdict::Inconclusive,
            reasons: vec![reason.to_string()],
        }
    }

    pub fn certified(&self) -> bool {
        self.verdict == CertVerdict::NotEventuallyPeriodic
    }

    pub fn has_reason(&self, code: &str) -> bool {
        self.reasons.iter().any(|r| r == code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `p(x) = 1 + f_A(x)`, whose reciprocal has coefficients `S_{A,0}(n)`.
pub fn denom_poly(set: &SetSpec) -> Result<IntPoly> {
    let elems = set.finite_elements()?;
    let top = elems.last().copied().unwrap_or(0);
    let mut c = vec![BigInt::zero(); top + 1];
    c[0] = BigInt::one();
    for a in elems {
        c[a] += 1;
    }
    Ok(IntPoly::from_coeffs(c))
}

/// Runs the certificate on `p` with `p(0) ≠ 0` and degree `≥ 2`.
///
/// Numeric trouble yields `Inconclusive`, never a certificate.
pub fn check_nonperiodic(p: &IntPoly, config: &CertifierConfig) -> Result<NonPeriodicityReport> {
    config.validate()?;
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if d < 2 {
        return Err(Error::Precondition(format!("certificate needs degree ≥ 2, got {d}")));
    }
    let mut report = NonPeriodicityReport::inconclusive(p, config, "");
    report.reasons.clear();

    let profile = match roots_numeric(p, config.precision, config.tol) {
        Ok(profile) => profile,
        Err(Error::NoConvergence { .. }) => {
            report.reasons.push(REASON_NO_CONVERGENCE.into());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let scale = Scale::new(profile.bits);
    let tol = scale.lift_f64(config.tol);
    let hp = &profile.hp;

    // Roots whose modulus cannot be told apart from the minimum.
    let m0 = &hp[0].modulus;
    let tied: Vec<usize> = (0..hp.len())
        .filter(|&j| &hp[j].modulus - m0 <= &tol * 2 + &hp[0].radius + &hp[j].radius)
        .collect();
    let pair_ok = tied.len() == 2 && {
        let (a, b) = (&hp[tied[0]].z, &hp[tied[1]].z);
        !a.im.is_zero() && a.re == b.re && a.im == -&b.im
    };
    if !pair_ok {
        let code = if tied.iter().any(|&j| hp[j].z.im.is_zero()) {
            REASON_DOMINANT_REAL
        } else {
            REASON_DOMINANT_NOT_PAIR
        };
        report.reasons.push(code.into());
        report.roots = Some(profile);
        return Ok(report);
    }

    let next = (0..hp.len()).find(|j| !tied.contains(j));
    let gap = next.map(|j| scale.div(&(&hp[j].modulus - m0), m0));
    let gap_ok = gap.as_ref().is_none_or(|g| g > &scale.lift_f64(config.gap_tol));
    if !gap_ok {
        report.reasons.push(REASON_GAP_TOO_SMALL.into());
    }

    let upper = tied.iter().copied().find(|&j| hp[j].z.im.is_positive()).unwrap();
    let z = &hp[upper].z;
    let omega0 = scale.c_div(&scale.c_one(), z).expect("p(0) ≠ 0 so roots are nonzero");
    let zeta = Cx {
        re: scale.div(&z.re, &hp[upper].modulus),
        im: -scale.div(&z.im, &hp[upper].modulus),
    };
    report.dominant = Some(DominantPair {
        root: ComplexValue::from_cx(scale, z),
        omega0: ComplexValue::from_cx(scale, &omega0),
        root_modulus: scale.decimal(&hp[upper].modulus, scale.digits()),
        multiplicity: profile.roots[upper].multiplicity,
        relative_gap: gap.map(|g| scale.decimal(&g, scale.digits())),
    });
    report.zeta = Some(ComplexValue::from_cx(scale, &zeta));
    report.zeta_pow_12 = Some(ComplexValue::from_cx(scale, &scale.c_pow(&zeta, 12)));

    let sfd = profile.squarefree_degree;
    let bound = 2 * sfd * (sfd - 1);
    let candidates = totient_candidates(bound);
    let max_order = *candidates.last().unwrap();
    let mut power = scale.c_one();
    let mut next_order = 1;
    let mut min_dist: Option<(BigInt, usize)> = None;
    for &n in &candidates {
        while next_order <= n {
            power = scale.c_mul(&power, &zeta);
            next_order += 1;
        }
        let dist = scale.c_abs(&scale.c_sub(&power, &scale.c_one()));
        if min_dist.as_ref().is_none_or(|(m, _)| &dist < m) {
            min_dist = Some((dist, n));
        }
    }
    let (min_d, min_n) = min_dist.unwrap();
    let numeric_unity_ok = min_d > scale.lift_f64(config.unity_tol);
    report.zeta_test = Some(ZetaTest {
        degree_bound: bound,
        candidates_checked: candidates.len(),
        max_order,
        min_distance: scale.decimal(&min_d, scale.digits()),
        min_order: min_n,
        min_distance_f64: scale.approx(&min_d),
    });

    let mut exact_certified = false;
    if config.exact {
        if sfd <= config.exact_max_degree {
            let screen = exact_screen(p)?;
            exact_certified = screen.certified;
            report.reasons.push(
                if screen.certified { REASON_EXACT_CERTIFIED } else { REASON_EXACT_DIVISIBLE }.into(),
            );
            report.exact = Some(screen);
        } else {
            report.reasons.push(REASON_EXACT_SKIPPED.into());
        }
    }
    if !numeric_unity_ok {
        if exact_certified {
            report.reasons.push(REASON_UNITY_BY_EXACT.into());
        } else {
            report.reasons.push(REASON_NEAR_UNITY.into());
        }
    }

    if gap_ok && (numeric_unity_ok || exact_certified) {
        report.verdict = CertVerdict::NotEventuallyPeriodic;
    }
    report.roots = Some(profile);
    Ok(report)
}

/// Exact root-of-unity screen on the square-free part of `p`.
pub fn exact_screen(p: &IntPoly) -> Result<ExactScreen> {
    let sf = p
        .squarefree_factors()
        .into_iter()
        .fold(IntPoly::one(), |acc, (f, _)| &acc * &f);
    let r = distinct_ratio_poly(&sf)?;
    let deg = r.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(ExactScreen {
            ratio_poly_degree: 0,
            orders_tested: 0,
            dividing_orders: Vec::new(),
            certified: true,
        });
    }
    let orders = totient_candidates(deg);
    let dividing_orders: Vec<usize> = orders
        .iter()
        .copied()
        .filter(|&n| r.rem_monic(&cyclotomic(n)).is_zero())
        .collect();
    Ok(ExactScreen {
        ratio_poly_degree: deg,
        orders_tested: orders.len(),
        certified: dividing_orders.is_empty(),
        dividing_orders,
    })
}

/// Certificate for `1 + f_A`. Sets of odd parts are not sent to the
/// certifier: their normalized signs are non-negative in closed form.
pub fn certify_set(set: &SetSpec, config: &CertifierConfig) -> Result<NonPeriodicityReport> {
    let p = denom_poly(set)?;
    let elems = set.finite_elements()?;
    if !elems.is_empty() && elems.iter().all(|a| a % 2 == 1) {
        return Ok(NonPeriodicityReport::inconclusive(&p, config, REASON_ODD_SET));
    }
    if p.degree().unwrap_or(0) < 2 {
        return Ok(NonPeriodicityReport::inconclusive(&p, config, REASON_DEGREE));
    }
    check_nonperiodic(&p, config)
}


/// First `len` coefficients of `1/p`, for `p(0) = ±1`.
pub fn reciprocal_coeffs(p: &IntPoly, len: usize) -> Result<Vec<BigInt>> {
    let p0 = p.coeff(0);
    if !p0.abs().is_one() {
        return Err(Error::Precondition("integral reciprocal needs p(0) = ±1".into()));
    }
    let c = p.coeffs();
    let mut b: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = if n == 0 { BigInt::one() } else { BigInt::zero() };
        for j in 1..c.len().min(n + 1) {
            if !c[j].is_zero() {
                acc -= &c[j] * &b[n - j];
            }
        }
        b.push(acc * &p0);
    }
    Ok(b)
}

/// Period search on the signs of the first `len` coefficients of `1/p`.
pub fn bridge_check(p: &IntPoly, len: usize, max_pre: usize, max_period: usize) -> Result<PeriodFinding> {
    let signs = reciprocal_coeffs(p, len)?.iter().map(Sign::of_int).collect();
    detect_period(&SignWord::bare(signs)?, max_pre, max_period)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::parse_spec;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn near(a: (f64, f64), b: (f64, f64), eps: f64) -> bool {
        (a.0 - b.0).abs() < eps && (a.1 - b.1).abs() < eps
    }

    #[test]
    fn denominators() {
        assert_eq!(denom_poly(&parse_spec("{2,3}", 10).unwrap()).unwrap(), p(&[1, 0, 1, 1]));
        assert_eq!(denom_poly(&parse_spec("{1,4}", 10).unwrap()).unwrap(), p(&[1, 1, 0, 0, 1]));
        assert_eq!(denom_poly(&parse_spec("{}", 10).unwrap()).unwrap(), p(&[1]));
        assert!(denom_poly(&parse_spec("N+", 10).unwrap()).is_err());
    }

    #[test]
    fn cubic_roots() {
        let prof = roots_numeric(&p(&[1, 0, 1, 1]), 256, 2f64.powi(-128)).unwrap();
        let r = prof.approx_roots();
        assert_eq!(r.len(), 3);
        assert!(near(r[0], (0.2328, -0.7926), 1e-4));
        assert!(near(r[1], (0.2328, 0.7926), 1e-4));
        assert!(near(r[2], (-1.4656, 0.0), 1e-4));
        assert!(prof.roots[2].real);
        assert_eq!(prof.clusters.len(), 3);
    }

    #[test]
    fn trivial_roots() {
        let r = roots_numeric(&p(&[1, -1]), 128, 1e-30).unwrap().approx_roots();
        assert_eq!(r, vec![(1.0, 0.0)]);
        let r = roots_numeric(&p(&[1, 0, 1]), 128, 1e-30).unwrap().approx_roots();
        assert!(near(r[0], (0.0, -1.0), 1e-20) && near(r[1], (0.0, 1.0), 1e-20));
    }

    #[test]
    fn multiplicities_come_from_squarefree_split() {
        // (1 + x)²(1 − x + x²)
        let q = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, -1, 1]);
        let prof = roots_numeric(&q, 200, 1e-40).unwrap();
        assert_eq!(prof.degree(), 4);
        assert_eq!(prof.squarefree_degree, 3);
        let double = prof.roots.iter().find(|r| r.multiplicity == 2).unwrap();
        assert!(near(double.value.approx(), (-1.0, 0.0), 1e-20));
    }

    #[test]
    fn reference_sets_certified() {
        let cfg = CertifierConfig::default().with_exact(true);
        let r = check_nonperiodic(&p(&[1, 0, 1, 1]), &cfg).unwrap();
        assert!(r.certified(), "{:?}", r.reasons);
        let z12 = r.zeta_pow_12.as_ref().unwrap().approx();
        assert!(((z12.0 + 0.95).powi(2) + (z12.1 + 0.28).powi(2)).sqrt() < 0.02, "{z12:?}");
        assert_eq!(r.zeta_test.as_ref().unwrap().degree_bound, 12);
        assert!(r.exact.as_ref().unwrap().certified);
        let r = check_nonperiodic(&p(&[1, 1, 0, 0, 1]), &cfg).unwrap();
        assert!(r.certified(), "{:?}", r.reasons);
        assert!(r.exact.as_ref().unwrap().certified);
    }

    #[test]
    fn golden_ratio_is_inconclusive() {
        let r = check_nonperiodic(&p(&[1, -1, -1]), &CertifierConfig::default()).unwrap();
        assert_eq!(r.verdict, CertVerdict::Inconclusive);
        assert!(r.has_reason(REASON_DOMINANT_REAL));
    }

    #[test]
    fn roots_of_unity_are_inconclusive() {
        // 1 + x + x²: ζ is a primitive cube root of unity
        let cfg = CertifierConfig::default().with_exact(true);
        let r = check_nonperiodic(&p(&[1, 1, 1]), &cfg).unwrap();
        assert_eq!(r.verdict, CertVerdict::Inconclusive);
        assert!(r.has_reason(REASON_NEAR_UNITY));
        assert!(!r.exact.as_ref().unwrap().dividing_orders.is_empty());
        // 1 + x⁴: two pairs on one circle
        let r = check_nonperiodic(&p(&[1, 0, 0, 0, 1]), &cfg).unwrap();
        assert!(r.has_reason(REASON_DOMINANT_NOT_PAIR));
    }

    #[test]
    fn irrational_quadratic() {
        let r = check_nonperiodic(&p(&[1, 2, 3]), &CertifierConfig::default().with_exact(true)).unwrap();
        assert!(r.certified(), "{:?}", r.reasons);
        assert!(r.dominant.as_ref().unwrap().relative_gap.is_none());
    }

    #[test]
    fn preconditions() {
        let cfg = CertifierConfig::default();
        assert!(check_nonperiodic(&p(&[0, 1, 1]), &cfg).is_err());
        assert!(check_nonperiodic(&p(&[1, 1]), &cfg).is_err());
        assert!(check_nonperiodic(&IntPoly::zero(), &cfg).is_err());
        let bad = CertifierConfig { precision: 100, ..CertifierConfig::default() };
        assert!(check_nonperiodic(&p(&[1, 0, 1, 1]), &bad).is_err());
    }

    #[test]
    fn odd_sets_are_guarded() {
        let r = certify_set(&parse_spec("{1,3,5}", 10).unwrap(), &CertifierConfig::default()).unwrap();
        assert!(r.has_reason(REASON_ODD_SET));
        assert!(r.roots.is_none());
        let r = certify_set(&parse_spec("{2,3}", 10).unwrap(), &CertifierConfig::default()).unwrap();
        assert!(r.certified());
    }

    #[test]
    fn reciprocal_series() {
        let b = reciprocal_coeffs(&p(&[1, -1, -1]), 8).unwrap();
        let expect: Vec<BigInt> = [1, 1, 2, 3, 5, 8, 13, 21].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(b, expect);
        assert!(reciprocal_coeffs(&p(&[2, 1]), 3).is_err());
        let b = reciprocal_coeffs(&p(&[-1, 1]), 4).unwrap();
        assert!(b.iter().all(|v| v == &BigInt::from(-1)));
    }

    #[test]
    fn bridge_on_certified_sets() {
        for c in [&[1i64, 0, 1, 1][..], &[1, 1, 0, 0, 1]] {
            let f = bridge_check(&p(c), 2000, 50, 200).unwrap();
            assert_eq!(f.verdict, crate::signs::Verdict::NoPeriodFound);
        }
    }

    #[test]
    fn report_json() {
        let r = check_nonperiodic(&p(&[1, 0, 1, 1]), &CertifierConfig::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "NotEventuallyPeriodic");
        assert_eq!(v["poly"][3], "1");
        assert!(v["roots"]["roots"][0]["value"]["re"].as_str().unwrap().starts_with("0.2327"));
        assert_eq!(v["config"]["precision"], 256);
        assert_eq!(v["config"]["tol"], format!("{:e}", 2f64.powi(-128)));
        let back: CertifierConfig = serde_json::from_value(v["config"].clone()).unwrap();
        assert_eq!(back, CertifierConfig::default());
        let loose: CertifierConfig = serde_json::from_str(
            r#"{"precision":128,"tol":1e-20,"gap_tol":"1e-6","unity_tol":1e-6,"exact":true,"exact_max_degree":8}"#,
        )
        .unwrap();
        assert_eq!(loose.gap_tol, 1e-6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn residuals_and_conjugate_closure(rest in proptest::collection::vec(-4i64..5, 1..6)) {
                let mut c = vec![1i64];
                c.extend(rest);
                let q = p(&c);
                prop_assume!(q.degree().unwrap_or(0) >= 1);
                let prof = roots_numeric(&q, 256, 2f64.powi(-128)).unwrap();
                prop_assert_eq!(prof.degree(), q.degree().unwrap());
                let scale = Scale::new(256);
                for e in &prof.hp {
                    if !e.z.im.is_zero() {
                        let conj = scale.c_conj(&e.z);
                        prop_assert!(prof.hp.iter().any(|o| o.z == conj));
                    }
                }
                let tol = 2f64.powi(-128);
                for (e, r) in prof.hp.iter().zip(&prof.roots) {
                    if r.multiplicity == 1 {
                        let (v, _) = scale.eval_with_derivative(&q, &e.z);
                        let m = scale.approx(&e.modulus);
                        let bound = tol * (1.0 + m).powi(q.degree().unwrap() as i32) * 1e6;
                        prop_assert!(scale.approx(&scale.c_abs(&v)) <= bound);
                    }
                }
            }
        }
    }
}
