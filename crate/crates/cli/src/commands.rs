use std::fmt::Write as _;

use hilbtail_core::moduli::{betti_tail, motivic_tail, params, verify_chi_independence};
use hilbtail_core::{euler_oracle, HilbStore, LPoly, OutputEnvelope};
use serde_json::{json, Value};

use crate::Format;

/// Rendered command result.
pub struct Outcome {
    pub stdout: String,
    /// Warnings for stderr; plain format only, JSON carries them inline.
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn render(
        format: Format,
        plain: String,
        envelope: OutputEnvelope,
        code: u8,
    ) -> anyhow::Result<Self> {
        Ok(match format {
            Format::Plain => Outcome {
                stdout: plain,
                stderr: envelope.warnings,
                code,
            },
            Format::Json => Outcome {
                stdout: envelope.to_json()? + "\n",
                stderr: Vec::new(),
                code,
            },
        })
    }
}

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Plain => "plain",
        Format::Json => "json",
    }
}

/// `a..b`, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub min: i64,
    pub max: i64,
}

impl DegreeRange {
    pub fn parse(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a range like 3..12, got {s:?}"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("{t:?} is not an integer"))
        };
        let (min, max) = (parse(a)?, parse(b)?);
        if min < 3 {
            return Err(format!("lower end must be at least 3, got {min}"));
        }
        if min > max {
            return Err(format!("empty range {min}..{max}"));
        }
        Ok(DegreeRange { min, max })
    }
}

pub fn hilb(store: &HilbStore, n: u64, format: Format) -> anyhow::Result<Outcome> {
    let class = store.class(n as usize)?;
    let top = 2 * n as i64;
    let euler = class.eval_at_one();
    let palindromic = class.is_palindromic(0, top);
    let plain = format!(
        "{class} (euler {euler})\npalindromic on [0, {top}]: {}\n",
        if palindromic { "yes" } else { "no" }
    );
    let env = OutputEnvelope::new(
        "hilb",
        json!({"n": n, "format": format_name(format)}),
        json!({"n": n, "class": class, "euler": euler.to_string(), "palindromic": palindromic}),
        Vec::new(),
    );
    Outcome::render(format, plain, env, 0)
}

pub fn moduli(store: &HilbStore, d: i64, chi: i64, format: Format) -> anyhow::Result<Outcome> {
    let p = params(d, chi)?;
    let tail = motivic_tail(d, chi, store)?;
    let betti = p.coprime.then(|| betti_tail(d, chi, store)).transpose()?;
    let mut warnings = tail.warnings();
    if !p.coprime {
        warnings.push(format!(
            "no Betti table: d and chi must be coprime (gcd = {})",
            p.gcd()
        ));
    }

    let mut plain = format!(
        "M({d}, {chi}): chi0={} rho={} dbar={} shift={} dim={} level={} threshold={} coprime={}\n",
        p.chi0,
        p.rho,
        p.dbar,
        p.shift,
        p.dim,
        p.level_scheme,
        p.stable_threshold,
        if p.coprime { "yes" } else { "no" }
    );
    if tail.vacuous {
        plain.push_str("tail: vacuous\n");
    } else {
        writeln!(plain, "tail above L^{}: {}", tail.level, tail.tail)?;
    }
    if let Some(b) = betti.as_ref().filter(|b| !b.vacuous) {
        let betti_line: Vec<String> = b
            .entries
            .iter()
            .rev()
            .map(|e| format!("b_{}={}", e.index, e.value))
            .collect();
        writeln!(plain, "{}", betti_line.join(" "))?;
        let hodge_line: Vec<String> = b
            .hodge_diag
            .iter()
            .rev()
            .map(|h| format!("h^{{{0},{0}}}={1}", h.p, h.value))
            .collect();
        writeln!(plain, "{}", hodge_line.join(" "))?;
    }

    let betti_json = match &betti {
        Some(b) => json!({
            "vacuous": b.vacuous,
            "entries": b.entries,
            "hodge_diag": b.hodge_diag,
        }),
        None => Value::Null,
    };
    let env = OutputEnvelope::new(
        "moduli",
        json!({"d": d, "chi": chi, "format": format_name(format)}),
        json!({
            "params": p,
            "motivic_tail": {
                "level": tail.level,
                "tail": tail.tail,
                "semistable_only": tail.semistable_only,
                "vacuous": tail.vacuous,
            },
            "betti_tail": betti_json,
        }),
        warnings,
    );
    Outcome::render(format, plain, env, 0)
}

pub fn verify(store: &HilbStore, range: DegreeRange, format: Format) -> anyhow::Result<Outcome> {
    let mut plain = String::new();
    let mut reports = Vec::new();
    let mut all_pass = true;
    for d in range.min..=range.max {
        let r = verify_chi_independence(d, store)?;
        let status = match &r.outcome {
            hilbtail_core::Agreement::Pass => "pass".to_string(),
            hilbtail_core::Agreement::Vacuous => "pass (vacuous)".to_string(),
            hilbtail_core::Agreement::Fail {
                degree,
                chi0_a,
                chi0_b,
            } => {
                format!("FAIL at degree {degree} (chi0 {chi0_a} vs {chi0_b})")
            }
        };
        all_pass &= r.outcome.passed();
        writeln!(
            plain,
            "d={d} rho={} degrees {}..{} chi0 {}..{}: {status}",
            r.rho,
            r.lowest_degree,
            r.dim,
            r.chi0_values.first().unwrap(),
            r.chi0_values.last().unwrap(),
        )?;
        reports.push(r);
    }
    let env = OutputEnvelope::new(
        "verify",
        json!({"d_min": range.min, "d_max": range.max, "format": format_name(format)}),
        json!({"all_pass": all_pass, "reports": reports}),
        Vec::new(),
    );
    Outcome::render(format, plain, env, if all_pass { 0 } else { 1 })
}

pub fn euler(store: &HilbStore, n: u64, format: Format) -> anyhow::Result<Outcome> {
    let count = euler_oracle(n as i64)?;
    let cached: Option<LPoly> = store.cached(n as usize);
    let class_euler = cached.as_ref().map(LPoly::eval_at_one);
    let matches = class_euler.as_ref().map(|e| *e == count);
    let plain = match (&class_euler, matches) {
        (None, _) => format!("{count}\n"),
        (Some(_), Some(true)) => format!("{count} (matches hilb_class)\n"),
        (Some(e), _) => format!("{count} (MISMATCH: hilb_class gives {e})\n"),
    };
    let env = OutputEnvelope::new(
        "euler",
        json!({"n": n, "format": format_name(format)}),
        json!({
            "n": n,
            "euler": count.to_string(),
            "class_euler": class_euler.map(|e| e.to_string()),
            "matches": matches,
        }),
        Vec::new(),
    );
    Outcome::render(
        format,
        plain,
        env,
        if matches == Some(false) { 1 } else { 0 },
    )
}

pub fn cache_info(store: &HilbStore) -> Outcome {
    let path = store
        .path()
        .map_or_else(|| "(in memory)".to_string(), |p| p.display().to_string());
    let body = match store.max_n() {
        Some(m) => format!("classes 0..={m}"),
        None => "empty".to_string(),
    };
    Outcome {
        stdout: format!(
            "path: {path}\nversion: {}\n{body}\n",
            hilbtail_core::hilb::CACHE_VERSION
        ),
        stderr: Vec::new(),
        code: 0,
    }
}

pub fn cache_clear(store: &HilbStore) -> anyhow::Result<Outcome> {
    store.clear()?;
    let what = store.path().map_or_else(
        || "in-memory cache".to_string(),
        |p| p.display().to_string(),
    );
    Ok(Outcome {
        stdout: format!("cleared {what}\n"),
        stderr: Vec::new(),
        code: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_syntax() {
        assert_eq!(
            DegreeRange::parse("3..12"),
            Ok(DegreeRange { min: 3, max: 12 })
        );
        assert_eq!(
            DegreeRange::parse("5..5"),
            Ok(DegreeRange { min: 5, max: 5 })
        );
        assert!(DegreeRange::parse("2..3").is_err());
        assert!(DegreeRange::parse("7..4").is_err());
        assert!(DegreeRange::parse("7").is_err());
        assert!(DegreeRange::parse("a..4").is_err());
    }

    #[test]
    fn moduli_plain_lines() {
        let store = HilbStore::in_memory();
        let out = moduli(&store, 4, 1, Format::Plain).unwrap();
        assert!(out
            .stdout
            .starts_with("M(4, 1): chi0=-5 rho=3 dbar=7 shift=3 dim=17 level=14 threshold=29"));
        assert!(out.stdout.contains("tail above L^14: 6L^15 + 2L^16 + L^17"));
        assert!(out
            .stdout
            .contains("b_34=1 b_33=0 b_32=2 b_31=0 b_30=6 b_29=0"));
        assert!(out.stdout.contains("h^{17,17}=1 h^{16,16}=2 h^{15,15}=6"));
        assert!(out.stderr.is_empty());
    }
}
