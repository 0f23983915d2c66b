//! `key=value` certifier settings; `#` starts a comment.

use compsign::nonperiodic::CertifierConfig;

pub fn parse_config(text: &str) -> Result<CertifierConfig, String> {
    let mut cfg = CertifierConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| format!("config line {}: {msg}", lineno + 1);
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| at(format!("expected key=value, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "precision" => cfg.precision = parse_usize(value).map_err(at)?,
            "exact_max_degree" => cfg.exact_max_degree = parse_usize(value).map_err(at)?,
            "tol" => cfg.tol = parse_real(value).map_err(at)?,
            "gap_tol" => cfg.gap_tol = parse_real(value).map_err(at)?,
            "unity_tol" => cfg.unity_tol = parse_real(value).map_err(at)?,
            "exact" => {
                cfg.exact = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(at(format!("`{value}` is not a boolean"))),
                }
            }
            _ => return Err(at(format!("unknown key `{key}`"))),
        }
    }
    Ok(cfg)
}

fn parse_usize(v: &str) -> Result<usize, String> {
    v.parse().map_err(|_| format!("`{v}` is not a non-negative integer"))
}

/// A decimal such as `1e-30`, or a power such as `2^-128`.
fn parse_real(v: &str) -> Result<f64, String> {
    let bad = || format!("`{v}` is not a positive real");
    let x = match v.split_once('^') {
        Some((b, e)) => {
            let b: f64 = b.trim().parse().map_err(|_| bad())?;
            let e: i32 = e.trim().parse().map_err(|_| bad())?;
            b.powi(e)
        }
        None => v.parse().map_err(|_| bad())?,
    };
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_keys_and_powers() {
        let cfg = parse_config("precision = 320\n# note\ntol=2^-150\nexact=true\nunity_tol=1e-9\n").unwrap();
        assert_eq!(cfg.precision, 320);
        assert_eq!(cfg.tol, 2f64.powi(-150));
        assert!(cfg.exact);
        assert_eq!(cfg.unity_tol, 1e-9);
        assert_eq!(cfg.gap_tol, CertifierConfig::default().gap_tol);
    }

    #[test]
    fn rejects_unknown_and_malformed() {
        assert!(parse_config("colour=red").unwrap_err().contains("unknown key"));
        assert!(parse_config("tol").is_err());
        assert!(parse_config("tol=-1").is_err());
        assert!(parse_config("exact=maybe").is_err());
    }
}
