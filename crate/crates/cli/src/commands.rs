use std::collections::BTreeMap;

use serde::Serialize;

use compsign::compositions::{comp_counts, comp_polys, counts_csv, q_sign_demo, q_series, verify_section2};
use compsign::explorer::{
    construct_thm36, enumerate_f_bounded, optimal_superset_search, problem44_experiment, union_relation_check,
    verify_thm34, verify_thm36,
};
use compsign::nonperiodic::{bridge_check, certify_set, check_nonperiodic, CertifierConfig, NonPeriodicityReport};
use compsign::poly::IntPoly;
use compsign::sets::{parse_spec, DEFAULT_HORIZON};
use compsign::signs::{check_conjecture, check_oddset, check_prop33, detect_period, sign_word, PeriodFinding, Verdict};
use compsign::sums::{cross_check, sk_fast, Route};
use compsign::{Error, SetSpec};

use crate::args::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Violation = 1,
    Inconclusive = 2,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 3,
            CliError::Core(Error::NoConvergence { .. }) => 2,
            CliError::Core(Error::NonIntegral { .. }) => 1,
            CliError::Core(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

pub struct Artifact {
    pub name: String,
    pub content: String,
}

/// Result of one subcommand. The first artifact is the primary output.
pub struct Outcome {
    pub status: Status,
    pub artifacts: Vec<Artifact>,
    pub sets: Vec<String>,
    pub params: BTreeMap<String, String>,
}

impl Outcome {
    fn new(status: Status) -> Self {
        Self {
            status,
            artifacts: Vec::new(),
            sets: Vec::new(),
            params: BTreeMap::new(),
        }
    }

    fn artifact(mut self, name: &str, content: String) -> Self {
        self.artifacts.push(Artifact {
            name: name.to_string(),
            content,
        });
        self
    }

    fn json<T: Serialize>(self, name: &str, value: &T) -> Self {
        let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
        self.artifact(name, text)
    }

    fn set(mut self, s: &SetSpec) -> Self {
        self.sets.push(s.render());
        self
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn config(self, cfg: &CertifierConfig) -> Self {
        self.param("precision", cfg.precision)
            .param("tol", format!("{:e}", cfg.tol))
            .param("gap_tol", format!("{:e}", cfg.gap_tol))
            .param("unity_tol", format!("{:e}", cfg.unity_tol))
            .param("exact", cfg.exact)
            .param("exact_max_degree", cfg.exact_max_degree)
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Violation
    }
}

fn parse_set(text: &str) -> Result<SetSpec, CliError> {
    Ok(parse_spec(text, DEFAULT_HORIZON)?)
}

fn need<'a, T>(v: &'a Option<T>, flag: &str, suite: &str) -> Result<&'a T, CliError> {
    v.as_ref()
        .ok_or_else(|| CliError::Usage(format!("{suite} needs {flag}")))
}

fn parse_usizes(text: &str, count: usize, flag: &str) -> Result<Vec<usize>, CliError> {
    let vals: Result<Vec<usize>, _> = text.split(',').map(|t| t.trim().parse()).collect();
    match vals {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(CliError::Usage(format!("{flag} expects {count} comma-separated integers, got `{text}`"))),
    }
}

fn parse_coeffs(text: &str) -> Result<IntPoly, CliError> {
    let coeffs: Result<Vec<_>, _> = text.split(',').map(|t| t.trim().parse()).collect();
    coeffs
        .map(IntPoly::from_coeffs)
        .map_err(|_| CliError::Usage(format!("-p expects comma-separated integers, got `{text}`")))
}

pub fn run(cmd: &Command, cfg: &CertifierConfig) -> Result<Outcome, CliError> {
    match cmd {
        Command::Counts(a) => counts(a),
        Command::Polys(a) => polys(a),
        Command::Sk(a) => sk(a),
        Command::Signs(a) => signs(a),
        Command::Verify(a) => verify(a),
        Command::Nonperiodic(a) => nonperiodic(a, cfg),
        Command::Enumerate(a) => enumerate(a),
        Command::Construct(a) => construct(a),
        Command::Experiment(a) => experiment(a),
        Command::Qseries(a) => qseries(a, cfg),
    }
}

fn counts(a: &SetN) -> Result<Outcome, CliError> {
    let set = parse_set(&a.set)?;
    let c = comp_counts(&set, a.n)?;
    Ok(Outcome::new(Status::Pass)
        .artifact("counts.csv", counts_csv(&c))
        .set(&set)
        .param("N", a.n))
}

fn polys(a: &SetN) -> Result<Outcome, CliError> {
    let set = parse_set(&a.set)?;
    let table = comp_polys(&set, a.n)?;
    Ok(Outcome::new(Status::Pass)
        .artifact("polys.csv", table.triangle_csv())
        .set(&set)
        .param("N", a.n))
}

#[derive(Serialize)]
struct CrossCheckJson<'a> {
    set: String,
    #[serde(rename = "K")]
    k: usize,
    #[serde(rename = "N")]
    n: usize,
    consistent: bool,
    mismatches: &'a [compsign::sums::RouteMismatch],
    summary: compsign::sums::GridSummary,
}

fn sk(a: &SkArgs) -> Result<Outcome, CliError> {
    let set = parse_set(&a.set)?;
    let out = Outcome::new(Status::Pass)
        .set(&set)
        .param("K", a.k)
        .param("N", a.n);
    let route = match a.route {
        RouteArg::Direct => Route::Direct,
        RouteArg::Fast => Route::Fast,
        RouteArg::Q => Route::Q,
        RouteArg::Conv => Route::Conv,
        RouteArg::All => {
            let (grid, mismatches) = cross_check(&set, a.k, a.n)?;
            let report = CrossCheckJson {
                set: set.render(),
                k: a.k,
                n: a.n,
                consistent: mismatches.is_empty(),
                mismatches: &mismatches,
                summary: grid.summary(),
            };
            let mut out = out.param("route", "all").artifact("sk.csv", grid.to_csv()).json("crosscheck.json", &report);
            out.status = pass_if(mismatches.is_empty());
            if !mismatches.is_empty() {
                // Counterexample goes first so it reaches stdout.
                out.artifacts.swap(0, 1);
            }
            return Ok(out);
        }
    };
    let grid = route.compute(&set, a.k, a.n)?;
    Ok(out
        .param("route", format!("{:?}", route).to_lowercase())
        .artifact("sk.csv", grid.to_csv()))
}

#[derive(Serialize)]
struct SignsJson {
    set: String,
    k: usize,
    #[serde(rename = "N")]
    n: usize,
    normalized: bool,
    word: String,
    finding: Option<PeriodFinding>,
}

fn signs(a: &SignsArgs) -> Result<Outcome, CliError> {
    let set = parse_set(&a.set)?;
    let grid = sk_fast(&set, a.k, a.n)?;
    let word = sign_word(&grid, a.k, a.normalized)?;
    let mut out = Outcome::new(Status::Pass)
        .set(&set)
        .param("k", a.k)
        .param("N", a.n)
        .param("normalized", a.normalized);
    let finding = match &a.detect {
        Some(text) => {
            let v = parse_usizes(text, 2, "--detect")?;
            out = out.param("max_pre", v[0]).param("max_period", v[1]);
            Some(detect_period(&word, v[0], v[1])?)
        }
        None => None,
    };
    let doc = SignsJson {
        set: set.render(),
        k: a.k,
        n: a.n,
        normalized: a.normalized,
        word: word.to_symbol_string(),
        finding,
    };
    Ok(out.json("signs.json", &doc))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let out = Outcome::new(Status::Pass).param("suite", format!("{:?}", a.suite).to_lowercase()).param("N", a.n);
    let (status, out) = match a.suite {
        Suite::Section2 => {
            let set = parse_set(need(&a.set, "-A", "section2")?)?;
            let r = verify_section2(&set, a.n, a.max_k)?;
            let ok = r.all_passed();
            (ok, out.set(&set).param("K", a.max_k).json("section2.json", &r))
        }
        Suite::Prop33 => {
            let m = *need(&a.m, "-m", "prop33")?;
            let r = check_prop33(m, a.n)?;
            (r.passed, out.param("m", m).json("prop33.json", &r))
        }
        Suite::Thm34 => {
            let e = parse_set(need(&a.e, "-E", "thm34")?)?;
            let r = verify_thm34(&e, a.n, a.max_k)?;
            (r.passed, out.set(&e).param("K", a.max_k).json("thm34.json", &r))
        }
        Suite::Thm36 => {
            let b = parse_set(need(&a.b, "-B", "thm36")?)?;
            let r = verify_thm36(&b, a.n)?;
            (r.passed, out.set(&b).json("thm36.json", &r))
        }
        Suite::Union => {
            let sa = parse_set(need(&a.set, "-A", "union")?)?;
            let sb = parse_set(need(&a.b, "-B", "union")?)?;
            let r = union_relation_check(&sa, &sb, a.n)?;
            (r.passed, out.set(&sa).set(&sb).json("union.json", &r))
        }
        Suite::Oddset => {
            let set = parse_set(need(&a.set, "-A", "oddset")?)?;
            let r = check_oddset(&set, a.n, a.max_k)?;
            (r.passed, out.set(&set).param("K", a.max_k).json("oddset.json", &r))
        }
        Suite::Conjecture => {
            let m = *need(&a.m, "-m", "conjecture")?;
            let k = *need(&a.k, "-k", "conjecture")?;
            let r = check_conjecture(m, k, a.n)?;
            let mut out = out.param("m", m).param("k", k).json("conjecture.json", &r);
            out.status = match (r.finding.verdict, r.matches_conjecture) {
                (_, true) => Status::Pass,
                (Verdict::ConsistentAtHorizon, false) => Status::Violation,
                (Verdict::NoPeriodFound, false) => Status::Inconclusive,
            };
            return Ok(out);
        }
    };
    let mut out = out;
    out.status = pass_if(status);
    Ok(out)
}

#[derive(Serialize)]
struct NonperiodicJson<'a> {
    report: &'a NonPeriodicityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    bridge: Option<PeriodFinding>,
}

fn nonperiodic(a: &NonperiodicArgs, cfg: &CertifierConfig) -> Result<Outcome, CliError> {
    let cfg = cfg.clone().with_exact(cfg.exact || a.exact);
    let mut out = Outcome::new(Status::Pass).config(&cfg);
    let report = match (&a.set, &a.poly) {
        (Some(text), _) => {
            let set = parse_set(text)?;
            out = out.set(&set);
            certify_set(&set, &cfg)?
        }
        (None, Some(text)) => {
            let p = parse_coeffs(text)?;
            out = out.param("p", text.replace(' ', ""));
            check_nonperiodic(&p, &cfg)?
        }
        (None, None) => return Err(CliError::Usage("nonperiodic needs -A or -p".into())),
    };
    let bridge = match &a.bridge {
        Some(text) => {
            let v = parse_usizes(text, 3, "--bridge")?;
            out = out
                .param("bridge_len", v[0])
                .param("bridge_max_pre", v[1])
                .param("bridge_max_period", v[2]);
            Some(bridge_check(&report_poly(&report)?, v[0], v[1], v[2])?)
        }
        None => None,
    };
    out.status = match (report.certified(), &bridge) {
        (true, Some(f)) if f.is_consistent() => Status::Violation,
        (true, _) => Status::Pass,
        (false, _) => Status::Inconclusive,
    };
    let doc = NonperiodicJson {
        report: &report,
        bridge,
    };
    Ok(out.json("nonperiodic.json", &doc))
}

fn report_poly(r: &NonPeriodicityReport) -> Result<IntPoly, CliError> {
    let coeffs: Result<Vec<_>, _> = r.poly.iter().map(|c| c.parse()).collect();
    coeffs
        .map(IntPoly::from_coeffs)
        .map_err(|_| CliError::Usage("report polynomial is not integral".into()))
}

#[derive(Serialize)]
struct EnumerationJson<'a> {
    #[serde(rename = "N")]
    n: usize,
    horizon: usize,
    count: usize,
    lower_bound: usize,
    note: &'a str,
    failing: usize,
}

fn enumerate(a: &EnumerateArgs) -> Result<Outcome, CliError> {
    let f = enumerate_f_bounded(a.n, a.horizon, a.max_n)?;
    let doc = EnumerationJson {
        n: f.n,
        horizon: f.horizon,
        count: f.count,
        lower_bound: f.lower_bound,
        note: f.note,
        failing: f.verdicts.len() - f.count,
    };
    let out = Outcome::new(Status::Pass).param("N", a.n).param("horizon", a.horizon);
    Ok(if a.csv {
        out.artifact("verdicts.csv", f.to_csv()).json("enumeration.json", &doc)
    } else {
        out.json("enumeration.json", &doc).artifact("verdicts.csv", f.to_csv())
    })
}

#[derive(Serialize)]
struct ConstructJson {
    #[serde(rename = "B")]
    base: String,
    #[serde(rename = "A")]
    constructed: String,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<compsign::explorer::Thm36Check>,
}

fn construct(a: &ConstructArgs) -> Result<Outcome, CliError> {
    let b = parse_set(&a.b)?;
    let built = construct_thm36(&b)?;
    let check = a.n.map(|n| verify_thm36(&b, n)).transpose()?;
    let status = pass_if(check.as_ref().is_none_or(|c| c.passed));
    let doc = ConstructJson {
        base: b.render(),
        constructed: built.render(),
        elements: built.finite_elements()?.iter().map(|x| x.to_string()).collect(),
        check,
    };
    let mut out = Outcome::new(status).set(&b).json("construct.json", &doc);
    if let Some(n) = a.n {
        out = out.param("N", n);
    }
    Ok(out)
}

fn experiment(a: &ExperimentArgs) -> Result<Outcome, CliError> {
    let out = Outcome::new(Status::Pass).param("horizon", a.horizon);
    if a.problem44 {
        let m = *need(&a.m, "-m", "problem44")?;
        let r = problem44_experiment(m, a.horizon)?;
        let mut out = out.param("m", m).json("problem44.json", &r);
        out.status = pass_if(r.passes_to_horizon);
        return Ok(out);
    }
    let set = parse_set(need(&a.set, "-A", "superset")?)?;
    let r = optimal_superset_search(&set, a.budget, a.horizon, a.universe)?;
    let mut out = out
        .set(&set)
        .param("budget", a.budget)
        .param("universe_max", r.universe_max)
        .json("superset.json", &r);
    out.status = if r.size.is_some() {
        Status::Pass
    } else {
        Status::Inconclusive
    };
    Ok(out)
}

fn qseries(a: &QseriesArgs, cfg: &CertifierConfig) -> Result<Outcome, CliError> {
    let set = parse_set(&a.set)?;
    let out = Outcome::new(Status::Pass).set(&set).param("N", a.n);
    if a.demo {
        let d = q_sign_demo(&set, a.n, cfg)?;
        let mut out = out.config(cfg).json("qdemo.json", &d);
        out.status = if d.report.certified() {
            Status::Pass
        } else {
            Status::Inconclusive
        };
        return Ok(out);
    }
    let q = q_series(&set, a.n)?;
    Ok(out.artifact("qseries.json", q.to_json() + "\n"))
}
