//! Python bindings: `import compsign_py`.

use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use compsign::compositions;
use compsign::explorer;
use compsign::nonperiodic::{self, CertifierConfig, NonPeriodicityReport};
use compsign::poly::IntPoly;
use compsign::sets::{parse_spec, DEFAULT_HORIZON};
use compsign::signs::{self, SignWord};
use compsign::sums::{self, Route};
use compsign::SetSpec;

create_exception!(compsign_py, CompsignError, PyValueError);

fn err(e: compsign::Error) -> PyErr {
    CompsignError::new_err(e.to_string())
}

/// A part set with its query horizon.
#[pyclass(name = "PartSet", module = "compsign_py", frozen)]
struct PyPartSet {
    inner: SetSpec,
}

#[pymethods]
impl PyPartSet {
    #[new]
    #[pyo3(signature = (spec, horizon = DEFAULT_HORIZON))]
    fn new(spec: &str, horizon: usize) -> PyResult<Self> {
        Ok(Self {
            inner: parse_spec(spec, horizon).map_err(err)?,
        })
    }

    #[getter]
    fn horizon(&self) -> usize {
        self.inner.horizon()
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    fn contains(&self, a: usize) -> bool {
        self.inner.contains(a)
    }

    fn members_up_to(&self, n: usize) -> PyResult<Vec<usize>> {
        self.inner.members_up_to(n).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PartSet('{}')", self.inner.render())
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }
}

/// Either a `PartSet` or its text form.
#[derive(FromPyObject)]
enum SetArg<'py> {
    Set(PyRef<'py, PyPartSet>),
    Text(String),
}

impl SetArg<'_> {
    fn spec(&self) -> PyResult<SetSpec> {
        match self {
            SetArg::Set(s) => Ok(s.inner.clone()),
            SetArg::Text(t) => parse_spec(t, DEFAULT_HORIZON).map_err(err),
        }
    }
}

#[pyfunction]
fn comp_counts(set: SetArg<'_>, n: usize) -> PyResult<Vec<BigInt>> {
    compositions::comp_counts(&set.spec()?, n).map_err(err)
}

/// Coefficient lists of `f_{A,0..=n}`, lowest power first.
#[pyfunction]
fn comp_polys(set: SetArg<'_>, n: usize) -> PyResult<Vec<Vec<BigInt>>> {
    let t = compositions::comp_polys(&set.spec()?, n).map_err(err)?;
    Ok(t.polys().iter().map(|p| p.coeffs().to_vec()).collect())
}

#[pyfunction]
fn partition_counts(set: SetArg<'_>, n: usize) -> PyResult<Vec<BigInt>> {
    compositions::partition_counts(&set.spec()?, n).map_err(err)
}

/// `q_A(0..=n)` as `(numerator, denominator)` pairs.
#[pyfunction]
fn q_series(set: SetArg<'_>, n: usize) -> PyResult<Vec<(BigInt, BigInt)>> {
    let q = compositions::q_series(&set.spec()?, n).map_err(err)?;
    Ok(q.coeffs()
        .coeffs()
        .iter()
        .map(|c| (c.numer().clone(), c.denom().clone()))
        .collect())
}

fn route(name: &str) -> PyResult<Route> {
    match name {
        "direct" => Ok(Route::Direct),
        "fast" => Ok(Route::Fast),
        "q" => Ok(Route::Q),
        "conv" => Ok(Route::Conv),
        _ => Err(PyValueError::new_err(format!("unknown route `{name}`"))),
    }
}

/// `S_{A,k}(n)` for `k ≤ K`, `n ≤ N`.
#[pyclass(name = "SkGrid", module = "compsign_py", frozen)]
struct PySkGrid {
    inner: sums::SkGrid,
}

#[pymethods]
impl PySkGrid {
    #[getter]
    fn max_k(&self) -> usize {
        self.inner.max_k()
    }

    #[getter]
    fn max_n(&self) -> usize {
        self.inner.max_n()
    }

    fn get(&self, k: usize, n: usize) -> PyResult<BigInt> {
        if k > self.inner.max_k() || n > self.inner.max_n() {
            return Err(pyo3::exceptions::PyIndexError::new_err(format!("({k}, {n}) outside the grid")));
        }
        Ok(self.inner.get(k, n).clone())
    }

    fn row(&self, k: usize) -> PyResult<Vec<BigInt>> {
        self.inner.row(k).map(|r| r.to_vec()).map_err(err)
    }

    fn sign_word(&self, k: usize, normalized: bool) -> PyResult<String> {
        signs::sign_word(&self.inner, k, normalized)
            .map(|w| w.to_symbol_string())
            .map_err(err)
    }

    fn to_csv(&self) -> String {
        self.inner.to_csv()
    }
}

#[pyfunction]
#[pyo3(signature = (set, k, n, route = "fast"))]
fn sk_grid(set: SetArg<'_>, k: usize, n: usize, route: &str) -> PyResult<PySkGrid> {
    let r = self::route(route)?;
    Ok(PySkGrid {
        inner: r.compute(&set.spec()?, k, n).map_err(err)?,
    })
}

/// Routes disagreeing with the fast recurrence, as `(route, k, n)`.
#[pyfunction]
fn cross_check(set: SetArg<'_>, k: usize, n: usize) -> PyResult<Vec<(String, usize, usize)>> {
    let (_, mismatches) = sums::cross_check(&set.spec()?, k, n).map_err(err)?;
    Ok(mismatches
        .into_iter()
        .map(|m| (format!("{:?}", m.route).to_lowercase(), m.k, m.n))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (set, k, n, normalized = true))]
fn sign_word(set: SetArg<'_>, k: usize, n: usize, normalized: bool) -> PyResult<String> {
    let grid = sums::sk_fast(&set.spec()?, k, n).map_err(err)?;
    signs::sign_word(&grid, k, normalized)
        .map(|w| w.to_symbol_string())
        .map_err(err)
}

#[pyclass(name = "PeriodFinding", module = "compsign_py", frozen)]
struct PyPeriodFinding {
    inner: signs::PeriodFinding,
}

#[pymethods]
impl PyPeriodFinding {
    #[getter]
    fn preperiod(&self) -> Option<usize> {
        self.inner.preperiod
    }

    #[getter]
    fn period(&self) -> Option<usize> {
        self.inner.period
    }

    #[getter]
    fn pattern(&self) -> String {
        signs::symbols_to_string(&self.inner.pattern)
    }

    #[getter]
    fn consistent(&self) -> bool {
        self.inner.is_consistent()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "PeriodFinding(preperiod={:?}, period={:?}, pattern='{}')",
            self.inner.preperiod,
            self.inner.period,
            self.pattern()
        )
    }
}

/// Eventual period of a word over `+`, `-`, `0`.
#[pyfunction]
fn detect_period(word: &str, max_pre: usize, max_period: usize) -> PyResult<PyPeriodFinding> {
    let w = SignWord::bare(signs::parse_symbols(word).map_err(err)?).map_err(err)?;
    Ok(PyPeriodFinding {
        inner: signs::detect_period(&w, max_pre, max_period).map_err(err)?,
    })
}

#[pyclass(name = "Certificate", module = "compsign_py", frozen)]
struct PyCertificate {
    inner: NonPeriodicityReport,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn certified(&self) -> bool {
        self.inner.certified()
    }

    #[getter]
    fn verdict(&self) -> String {
        format!("{:?}", self.inner.verdict)
    }

    #[getter]
    fn reasons(&self) -> Vec<String> {
        self.inner.reasons.clone()
    }

    #[getter]
    fn zeta(&self) -> Option<Complex64> {
        self.inner.zeta.as_ref().map(|z| {
            let (re, im) = z.approx();
            Complex64::new(re, im)
        })
    }

    #[getter]
    fn zeta_pow_12(&self) -> Option<Complex64> {
        self.inner.zeta_pow_12.as_ref().map(|z| {
            let (re, im) = z.approx();
            Complex64::new(re, im)
        })
    }

    /// Root approximations as complex numbers.
    fn roots(&self) -> Vec<Complex64> {
        self.inner
            .roots
            .as_ref()
            .map(|r| r.approx_roots().into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
            .unwrap_or_default()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!("Certificate(verdict={}, reasons={:?})", self.verdict(), self.inner.reasons)
    }
}

/// Certify that the signs of the coefficients of `1/p` are not eventually
/// periodic. Pass a finite `set` (then `p = 1 + Σ_{a∈A} xᵃ`) or ascending
/// `coeffs`.
#[pyfunction]
#[pyo3(signature = (set = None, coeffs = None, exact = false, precision = None))]
fn certify(
    set: Option<SetArg<'_>>,
    coeffs: Option<Vec<i64>>,
    exact: bool,
    precision: Option<usize>,
) -> PyResult<PyCertificate> {
    let mut cfg = CertifierConfig::default().with_exact(exact);
    if let Some(p) = precision {
        cfg.precision = p;
    }
    let inner = match (set, coeffs) {
        (Some(s), None) => nonperiodic::certify_set(&s.spec()?, &cfg),
        (None, Some(c)) => nonperiodic::check_nonperiodic(&IntPoly::from_i64s(&c), &cfg),
        _ => return Err(PyValueError::new_err("pass exactly one of `set`, `coeffs`")),
    }
    .map_err(err)?;
    Ok(PyCertificate { inner })
}

/// Denominator of `C_A(−1, x)` as ascending coefficients.
#[pyfunction]
fn denom_poly(set: SetArg<'_>) -> PyResult<Vec<BigInt>> {
    nonperiodic::denom_poly(&set.spec()?)
        .map(|p| p.into_coeffs())
        .map_err(err)
}

/// Outcome of a verifier: `passed` and the full JSON report.
#[pyclass(name = "Report", module = "compsign_py", frozen)]
struct PyReport {
    #[pyo3(get)]
    passed: bool,
    json: String,
}

#[pymethods]
impl PyReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __bool__(&self) -> bool {
        self.passed
    }

    fn __repr__(&self) -> String {
        format!("Report(passed={})", self.passed)
    }
}

fn report<T: serde::Serialize>(passed: bool, value: &T) -> PyReport {
    PyReport {
        passed,
        json: serde_json::to_string_pretty(value).expect("serializable"),
    }
}

#[pyfunction]
#[pyo3(signature = (set, n, k = 3))]
fn verify_section2(set: SetArg<'_>, n: usize, k: usize) -> PyResult<PyReport> {
    let r = compositions::verify_section2(&set.spec()?, n, k).map_err(err)?;
    Ok(report(r.all_passed(), &r))
}

#[pyfunction]
fn check_prop33(m: usize, n: usize) -> PyResult<PyReport> {
    let r = signs::check_prop33(m, n).map_err(err)?;
    Ok(report(r.passed, &r))
}

#[pyfunction]
#[pyo3(signature = (set, n, k = 3))]
fn check_oddset(set: SetArg<'_>, n: usize, k: usize) -> PyResult<PyReport> {
    let r = signs::check_oddset(&set.spec()?, n, k).map_err(err)?;
    Ok(report(r.passed, &r))
}

#[pyfunction]
fn check_conjecture(m: usize, k: usize, n: usize) -> PyResult<PyReport> {
    let r = signs::check_conjecture(m, k, n).map_err(err)?;
    Ok(report(r.matches_conjecture, &r))
}

#[pyfunction]
#[pyo3(signature = (e, n, k = 3))]
fn verify_thm34(e: SetArg<'_>, n: usize, k: usize) -> PyResult<PyReport> {
    let r = explorer::verify_thm34(&e.spec()?, n, k).map_err(err)?;
    Ok(report(r.passed, &r))
}

#[pyfunction]
fn verify_thm36(b: SetArg<'_>, n: usize) -> PyResult<PyReport> {
    let r = explorer::verify_thm36(&b.spec()?, n).map_err(err)?;
    Ok(report(r.passed, &r))
}

#[pyfunction]
fn union_relation_check(a: SetArg<'_>, b: SetArg<'_>, n: usize) -> PyResult<PyReport> {
    let r = explorer::union_relation_check(&a.spec()?, &b.spec()?, n).map_err(err)?;
    Ok(report(r.passed, &r))
}

/// Elements of the subset-sum construction over `b`.
#[pyfunction]
fn construct_thm36(b: SetArg<'_>) -> PyResult<Vec<usize>> {
    explorer::construct_thm36(&b.spec()?)
        .and_then(|a| a.finite_elements())
        .map_err(err)
}

/// Subsets of `{1..n}` passing the k = 0 test up to `horizon`.
#[pyfunction]
fn enumerate_f(n: usize, horizon: usize) -> PyResult<Vec<Vec<usize>>> {
    let f = explorer::enumerate_f(n, horizon).map_err(err)?;
    Ok(f.verdicts
        .iter()
        .filter(|v| v.k0_ok())
        .map(|v| v.elements())
        .collect())
}

#[pyfunction]
#[pyo3(signature = (a, budget, horizon, universe_max = None))]
fn optimal_superset_search(
    a: SetArg<'_>,
    budget: usize,
    horizon: usize,
    universe_max: Option<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    explorer::optimal_superset_search(&a.spec()?, budget, horizon, universe_max)
        .map(|r| r.additions)
        .map_err(err)
}

#[pymodule]
fn compsign_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CompsignError", m.py().get_type::<CompsignError>())?;
    m.add_class::<PyPartSet>()?;
    m.add_class::<PySkGrid>()?;
    m.add_class::<PyPeriodFinding>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(comp_counts, m)?)?;
    m.add_function(wrap_pyfunction!(comp_polys, m)?)?;
    m.add_function(wrap_pyfunction!(partition_counts, m)?)?;
    m.add_function(wrap_pyfunction!(q_series, m)?)?;
    m.add_function(wrap_pyfunction!(sk_grid, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    m.add_function(wrap_pyfunction!(sign_word, m)?)?;
    m.add_function(wrap_pyfunction!(detect_period, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(denom_poly, m)?)?;
    m.add_function(wrap_pyfunction!(verify_section2, m)?)?;
    m.add_function(wrap_pyfunction!(check_prop33, m)?)?;
    m.add_function(wrap_pyfunction!(check_oddset, m)?)?;
    m.add_function(wrap_pyfunction!(check_conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(verify_thm34, m)?)?;
    m.add_function(wrap_pyfunction!(verify_thm36, m)?)?;
    m.add_function(wrap_pyfunction!(union_relation_check, m)?)?;
    m.add_function(wrap_pyfunction!(construct_thm36, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_f, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_superset_search, m)?)?;
    Ok(())
}
