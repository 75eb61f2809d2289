use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::args::Format;

pub fn millis(d: Duration, timing: bool) -> Option<f64> {
    timing.then(|| (d.as_secs_f64() * 1e6).round() / 1e3)
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub class: String,
    #[serde(rename = "box")]
    pub bx: [u32; 3],
    pub method: String,
    pub value: Option<String>,
    pub sign_convention: Option<String>,
    pub elapsed_ms: Option<f64>,
    /// Set when no value was produced: "skipped" or "unsupported".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct EnumerateReport {
    pub results: Vec<CountRecord>,
    /// "OK" or "MISMATCH" when several methods ran.
    pub verdict: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub family: String,
    pub params: String,
    #[serde(rename = "box")]
    pub bx: [u32; 3],
    pub oracle: Option<String>,
    pub pipeline: Option<String>,
    pub formula: Option<String>,
    pub oracle_pipeline: Option<bool>,
    pub oracle_formula: Option<bool>,
    pub pipeline_formula: Option<bool>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub skipped: bool,
    /// A mismatch against a conjectured value.
    pub finding: bool,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct IdentityRecord {
    pub name: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn dims(d: &[u32; 3]) -> String {
    format!("{}x{}x{}", d[0], d[1], d[2])
}

pub fn render_enumerate(r: &EnumerateReport, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(r),
        Format::Tsv => {
            s.push_str("class\tbox\tmethod\tvalue\tsign_convention\telapsed_ms\n");
            for x in &r.results {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    x.class,
                    dims(&x.bx),
                    x.method,
                    x.value.clone().or_else(|| x.status.clone()).unwrap_or_default(),
                    opt(&x.sign_convention),
                    opt(&x.elapsed_ms)
                );
            }
        }
        Format::Human => {
            for x in &r.results {
                let value = x.value.clone().unwrap_or_else(|| opt(&x.status).to_uppercase());
                let _ = write!(s, "{} {} {:<8} {}", x.class, dims(&x.bx), x.method, value);
                if let Some(c) = &x.sign_convention {
                    let _ = write!(s, " ({c})");
                }
                if let Some(ms) = x.elapsed_ms {
                    let _ = write!(s, " {ms} ms");
                }
                s.push('\n');
            }
            if let Some(v) = &r.verdict {
                let _ = writeln!(s, "verdict: {v}");
            }
        }
    }
    s
}

pub fn render_verify(rows: &[VerifyRecord], format: Format) -> String {
    let mut s = String::new();
    let b = |v: Option<bool>| v.map_or("-".to_string(), |x| x.to_string());
    match format {
        Format::Json => return json(&rows),
        Format::Tsv => {
            s.push_str(
                "family\tparams\tbox\toracle\tpipeline\tformula\toracle_pipeline\toracle_formula\tpipeline_formula\tmatch\tskipped\tfinding\telapsed_ms\n",
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.family,
                    r.params,
                    dims(&r.bx),
                    opt(&r.oracle),
                    opt(&r.pipeline),
                    opt(&r.formula),
                    b(r.oracle_pipeline),
                    b(r.oracle_formula),
                    b(r.pipeline_formula),
                    r.matches,
                    r.skipped,
                    r.finding,
                    opt(&r.elapsed_ms)
                );
            }
        }
        Format::Human => {
            for r in rows {
                let verdict = if r.finding {
                    "FINDING"
                } else if !r.matches {
                    "MISMATCH"
                } else if r.skipped {
                    "ok (partly skipped)"
                } else {
                    "ok"
                };
                let _ = write!(
                    s,
                    "{:<7} {:<14} {:<8} oracle={:<8} pipeline={:<8} formula={:<8} {}",
                    r.family,
                    r.params,
                    dims(&r.bx),
                    opt(&r.oracle),
                    opt(&r.pipeline),
                    opt(&r.formula),
                    verdict
                );
                if let Some(ms) = r.elapsed_ms {
                    let _ = write!(s, " {ms} ms");
                }
                s.push('\n');
            }
            let bad = rows.iter().filter(|r| !r.matches && !r.finding).count();
            let findings = rows.iter().filter(|r| r.finding).count();
            let _ = writeln!(s, "{} rows, {} mismatches, {} findings", rows.len(), bad, findings);
        }
    }
    s
}

pub fn render_identity(rows: &[IdentityRecord], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(&rows),
        Format::Tsv => {
            s.push_str("name\tparams\tlhs\trhs\tpassed\n");
            for r in rows {
                let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}", r.name, r.params, r.lhs, r.rhs, r.passed);
            }
        }
        Format::Human => {
            for r in rows {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                let _ = write!(s, "{verdict} {} {}", r.name, r.params);
                if !r.passed {
                    let _ = write!(s, ": {} != {}", r.lhs, r.rhs);
                }
                s.push('\n');
            }
            let passed = rows.iter().filter(|r| r.passed).count();
            let _ = writeln!(s, "{passed} of {} passed", rows.len());
        }
    }
    s
}
