//! Part-sets `A ⊂ N₊`.
//!
//! A [`SetSpec`] is a finite, cofinite or parametric description together
//! with a horizon: the largest `n` for which `A(n) = A ∩ {1,…,n}` may be
//! requested. Infinite sets are only ever seen through such truncations.
//!
//! Text form (see [`parse_spec`]):
//!
//! | text          | meaning                          |
//! |---------------|----------------------------------|
//! | `{1,2,3}`     | explicit finite set              |
//! | `1..4`        | `{1,…,4}`                        |
//! | `N+\{2,6}`    | `N₊` minus the listed elements   |
//! | `repunit(3)`  | `{(3ⁱ−1)/2 : i ≥ 1}`             |
//!
//! Any form takes an optional `@H` suffix setting the horizon.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_HORIZON: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetKind {
    /// Strictly increasing positive elements.
    Explicit(Vec<usize>),
    /// `{1,…,m}`.
    Range(usize),
    /// `N₊` minus a strictly increasing list.
    Cofinite(Vec<usize>),
    /// `{(mⁱ−1)/(m−1) : i ≥ 1}` for `m ≥ 2`.
    Repunit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetSpec {
    kind: SetKind,
    horizon: usize,
}

fn check_strictly_increasing(elems: &[usize], what: &str) -> std::result::Result<(), String> {
    if elems.first() == Some(&0) {
        return Err(format!("{what} must be positive integers"));
    }
    for w in elems.windows(2) {
        if w[0] >= w[1] {
            return Err(format!("{what} must be strictly increasing"));
        }
    }
    Ok(())
}

impl SetSpec {
    pub fn new(kind: SetKind, horizon: usize) -> Result<Self> {
        let invalid = |reason: String| Error::Precondition(reason);
        if horizon == 0 {
            return Err(invalid("horizon must be positive".into()));
        }
        match &kind {
            SetKind::Explicit(e) => check_strictly_increasing(e, "elements").map_err(invalid)?,
            SetKind::Cofinite(e) => check_strictly_increasing(e, "exclusions").map_err(invalid)?,
            SetKind::Range(m) if *m == 0 => return Err(invalid("range bound must be ≥ 1".into())),
            SetKind::Repunit(m) if *m < 2 => return Err(invalid("repunit base must be ≥ 2".into())),
            _ => {}
        }
        Ok(Self { kind, horizon })
    }

    /// Explicit set from arbitrary-order distinct positive elements.
    pub fn explicit(mut elems: Vec<usize>, horizon: usize) -> Result<Self> {
        elems.sort_unstable();
        Self::new(SetKind::Explicit(elems), horizon)
    }

    pub fn range(m: usize, horizon: usize) -> Result<Self> {
        Self::new(SetKind::Range(m), horizon)
    }

    pub fn cofinite(mut excluded: Vec<usize>, horizon: usize) -> Result<Self> {
        excluded.sort_unstable();
        Self::new(SetKind::Cofinite(excluded), horizon)
    }

    pub fn repunit(m: usize, horizon: usize) -> Result<Self> {
        Self::new(SetKind::Repunit(m), horizon)
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn with_horizon(&self, horizon: usize) -> Result<Self> {
        Self::new(self.kind.clone(), horizon)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, SetKind::Explicit(_) | SetKind::Range(_))
    }

    /// Exact membership test. Every supported family is decidable, so this
    /// is not bounded by the horizon; the horizon-checked views are
    /// [`members_up_to`](Self::members_up_to) and friends.
    pub fn contains(&self, a: usize) -> bool {
        if a == 0 {
            return false;
        }
        match &self.kind {
            SetKind::Explicit(e) => e.binary_search(&a).is_ok(),
            SetKind::Range(m) => a <= *m,
            SetKind::Cofinite(ex) => ex.binary_search(&a).is_err(),
            SetKind::Repunit(m) => repunits(*m, a).last() == Some(&a),
        }
    }

    /// All elements of a finite set, or an error for infinite ones.
    pub fn finite_elements(&self) -> Result<Vec<usize>> {
        match &self.kind {
            SetKind::Explicit(e) => Ok(e.clone()),
            SetKind::Range(m) => Ok((1..=*m).collect()),
            _ => Err(Error::InfiniteSet(self.render())),
        }
    }

    /// `A(n) = A ∩ {1,…,n}`, ascending.
    pub fn members_up_to(&self, n: usize) -> Result<Vec<usize>> {
        self.check_horizon(n)?;
        Ok(self.truncate(n))
    }

    /// `(O_A(n), E_A(n))`: odd and even members not exceeding `n`.
    pub fn parity_split(&self, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        Ok(self.members_up_to(n)?.into_iter().partition(|a| a % 2 == 1))
    }

    /// Smallest element, if any.
    pub fn min_element(&self) -> Option<usize> {
        match &self.kind {
            SetKind::Explicit(e) => e.first().copied(),
            SetKind::Range(_) | SetKind::Repunit(_) => Some(1),
            SetKind::Cofinite(ex) => {
                // first gap in the exclusion list
                let mut want = 1;
                for &x in ex {
                    if x != want {
                        break;
                    }
                    want += 1;
                }
                Some(want)
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.min_element().is_none()
    }

    pub fn check_horizon(&self, n: usize) -> Result<()> {
        if n > self.horizon {
            Err(Error::HorizonExceeded {
                n,
                horizon: self.horizon,
            })
        } else {
            Ok(())
        }
    }

    /// Members `≤ n` without the horizon check. Crate-internal code uses
    /// this after validating `n` once.
    pub(crate) fn truncate(&self, n: usize) -> Vec<usize> {
        match &self.kind {
            SetKind::Explicit(e) => e.iter().copied().take_while(|&a| a <= n).collect(),
            SetKind::Range(m) => (1..=n.min(*m)).collect(),
            SetKind::Cofinite(ex) => (1..=n).filter(|a| ex.binary_search(a).is_err()).collect(),
            SetKind::Repunit(m) => repunits(*m, n),
        }
    }

    pub fn render(&self) -> String {
        render_spec(self)
    }
}

/// Repunits `1, 1+m, 1+m+m², …` not exceeding `limit`.
fn repunits(m: usize, limit: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut r: usize = 1;
    while r <= limit {
        out.push(r);
        match r.checked_mul(m).and_then(|x| x.checked_add(1)) {
            Some(next) => r = next,
            None => break,
        }
    }
    out
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_spec(self))
    }
}

fn join(elems: &[usize]) -> String {
    elems
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Inverse of [`parse_spec`]; always carries the `@H` suffix.
pub fn render_spec(spec: &SetSpec) -> String {
    let body = match &spec.kind {
        SetKind::Explicit(e) => format!("{{{}}}", join(e)),
        SetKind::Range(m) => format!("1..{m}"),
        SetKind::Cofinite(ex) => format!("N+\\{{{}}}", join(ex)),
        SetKind::Repunit(m) => format!("repunit({m})"),
    };
    format!("{body}@{}", spec.horizon)
}

/// Parse the set mini-language. An `@H` suffix overrides `horizon`.
pub fn parse_spec(text: &str, horizon: usize) -> Result<SetSpec> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let (body, horizon) = match trimmed.rsplit_once('@') {
        Some((body, h)) => {
            let h: usize = h.trim().parse().map_err(|_| err("bad horizon after `@`"))?;
            (body.trim(), h)
        }
        None => (trimmed, horizon),
    };
    if horizon == 0 {
        return Err(err("horizon must be positive"));
    }

    let kind = if let Some(rest) = body.strip_prefix("N+") {
        let rest = rest.trim();
        if rest.is_empty() {
            SetKind::Cofinite(Vec::new())
        } else {
            let list = rest
                .strip_prefix('\\')
                .ok_or_else(|| err("expected `\\` after `N+`"))?;
            SetKind::Cofinite(parse_list(list.trim()).map_err(|r| err(&r))?)
        }
    } else if let Some(rest) = body.strip_prefix("repunit(") {
        let m = rest
            .strip_suffix(')')
            .ok_or_else(|| err("missing `)`"))?
            .trim();
        let m: usize = m.parse().map_err(|_| err("repunit base must be an integer"))?;
        if m < 2 {
            return Err(err("repunit base must be ≥ 2"));
        }
        SetKind::Repunit(m)
    } else if body.starts_with('{') {
        SetKind::Explicit(parse_list(body).map_err(|r| err(&r))?)
    } else if let Some((lo, hi)) = body.split_once("..") {
        if lo.trim() != "1" {
            return Err(err("ranges must start at 1"));
        }
        let m: usize = hi.trim().parse().map_err(|_| err("bad range bound"))?;
        if m == 0 {
            return Err(err("range bound must be ≥ 1"));
        }
        SetKind::Range(m)
    } else {
        return Err(err("unrecognised set form"));
    };
    SetSpec::new(kind, horizon).map_err(|e| err(&e.to_string()))
}

/// `{a,b,c}` → sorted, duplicate-free list of positive integers.
fn parse_list(text: &str) -> std::result::Result<Vec<usize>, String> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or("expected `{…}`")?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.starts_with('-') {
            return Err(format!("negative element {tok}"));
        }
        let v: usize = tok.parse().map_err(|_| format!("bad element `{tok}`"))?;
        if v == 0 {
            return Err("element 0 is not a positive integer".into());
        }
        out.push(v);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err("duplicate element".into());
    }
    Ok(out)
}

/// `E′ = E ∪ (E+1)` for a finite set of even numbers.
pub fn e_prime(e: &SetSpec) -> Result<SetSpec> {
    let elems = e.finite_elements()?;
    if let Some(odd) = elems.iter().find(|x| *x % 2 == 1) {
        return Err(Error::Precondition(format!("E contains odd element {odd}")));
    }
    let mut out: Vec<usize> = elems.iter().flat_map(|&x| [x, x + 1]).collect();
    out.sort_unstable();
    SetSpec::explicit(out, e.horizon())
}
