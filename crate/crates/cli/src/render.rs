//! Output rendering. Every format is deterministic: identical inputs
//! produce byte-identical output (benchmark timings excepted). Values
//! that can exceed 64 bits are always rendered as decimal strings in
//! JSON; CSV uses comma delimiters, a header row, and LF line endings.

use clap::ValueEnum;
use fibspace::operator::IdentityReport;
use fibspace::suite::VerifyReport;
use fibspace::{BigInt, SupportChain};
use serde_json::{json, Value};
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

fn csv_unsupported(command: &str) -> String {
    format!("csv output is not available for '{command}'; use plain or json")
}

fn json_string(value: &BigInt) -> Value {
    Value::String(value.to_string())
}

pub fn print_terms(
    format: OutputFormat,
    k: usize,
    window: &[BigInt],
    lo: i64,
    values: &[BigInt],
) -> Result<(), String> {
    match format {
        OutputFormat::Plain => {
            let joined: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            println!("{}", joined.join(","));
        }
        OutputFormat::Csv => {
            println!("n,value");
            for (offset, v) in values.iter().enumerate() {
                println!("{},{v}", lo + offset as i64);
            }
        }
        OutputFormat::Json => {
            let terms: Vec<Value> = values
                .iter()
                .enumerate()
                .map(|(offset, v)| json!({ "n": lo + offset as i64, "value": v.to_string() }))
                .collect();
            let window: Vec<Value> = window.iter().map(json_string).collect();
            println!("{}", json!({ "k": k, "window": window, "terms": terms }));
        }
    }
    Ok(())
}

pub fn print_binomial(format: OutputFormat, n: i64, i: i64, value: &BigInt) {
    match format {
        OutputFormat::Plain => println!("{value}"),
        OutputFormat::Csv => {
            println!("n,i,value");
            println!("{n},{i},{value}");
        }
        OutputFormat::Json => {
            println!("{}", json!({ "n": n, "i": i, "value": value.to_string() }));
        }
    }
}

pub fn print_table(
    format: OutputFormat,
    n_range: RangeInclusive<i64>,
    i_range: RangeInclusive<i64>,
    table: &[Vec<BigInt>],
) {
    match format {
        OutputFormat::Plain => {
            let header: Vec<String> = i_range.clone().map(|i| i.to_string()).collect();
            let rows: Vec<(String, Vec<String>)> = n_range
                .clone()
                .zip(table)
                .map(|(n, row)| {
                    (n.to_string(), row.iter().map(|v| v.to_string()).collect())
                })
                .collect();
            let mut width = 3usize.max(header.iter().map(|h| h.len()).max().unwrap_or(0));
            for (label, cells) in &rows {
                width = width.max(label.len());
                for cell in cells {
                    width = width.max(cell.len());
                }
            }
            let mut line = format!("{:>width$}", "n\\i");
            for h in &header {
                line.push_str(&format!(" {h:>width$}"));
            }
            println!("{line}");
            for (label, cells) in &rows {
                let mut line = format!("{label:>width$}");
                for cell in cells {
                    line.push_str(&format!(" {cell:>width$}"));
                }
                println!("{line}");
            }
        }
        OutputFormat::Csv => {
            let header: Vec<String> = i_range.clone().map(|i| i.to_string()).collect();
            println!("n,{}", header.join(","));
            for (n, row) in n_range.clone().zip(table) {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                println!("{n},{}", cells.join(","));
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|row| Value::Array(row.iter().map(json_string).collect()))
                .collect();
            println!("{}", Value::Array(rows));
        }
    }
}

pub fn print_multinomial(format: OutputFormat, entries: &[i64], value: &BigInt) {
    match format {
        OutputFormat::Plain => println!("{value}"),
        OutputFormat::Csv => {
            let labels: Vec<String> = (1..=entries.len()).map(|t| format!("i{t}")).collect();
            println!("{},value", labels.join(","));
            let cells: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
            println!("{},{value}", cells.join(","));
        }
        OutputFormat::Json => {
            println!("{}", json!({ "index": entries, "value": value.to_string() }));
        }
    }
}

/// Chains are always printed as JSON: an array of partial-sum tuples,
/// every integer a decimal string.
pub fn print_support(chains: &[SupportChain]) {
    let rows: Vec<Value> = chains
        .iter()
        .map(|chain| {
            Value::Array(
                chain
                    .partial_sums()
                    .iter()
                    .map(|s| Value::String(s.to_string()))
                    .collect(),
            )
        })
        .collect();
    println!("{}", Value::Array(rows));
}

pub fn print_identity_checks(
    format: OutputFormat,
    checks: &[(String, IdentityReport)],
) -> Result<(), String> {
    let passed = checks.iter().filter(|(_, o)| o.passed()).count();
    match format {
        OutputFormat::Plain => {
            for (name, outcome) in checks {
                match outcome.first_mismatch() {
                    None => println!("pass  {name}"),
                    Some(m) => println!("FAIL  {name} ({m})"),
                }
            }
            println!("identities: {passed}/{} passed", checks.len());
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = checks
                .iter()
                .map(|(name, outcome)| {
                    json!({
                        "name": name,
                        "passed": outcome.passed(),
                        "counterexample": outcome.first_mismatch().map(|m| m.to_string()),
                    })
                })
                .collect();
            println!(
                "{}",
                json!({ "passed": passed == checks.len(), "checks": entries })
            );
        }
        OutputFormat::Csv => return Err(csv_unsupported("identities")),
    }
    Ok(())
}

pub fn print_verify_report(format: OutputFormat, report: &VerifyReport) -> Result<(), String> {
    let passed = report.results.iter().filter(|r| r.passed).count();
    match format {
        OutputFormat::Plain => {
            for result in &report.results {
                println!("{result}");
            }
            println!("verify: {passed}/{} checks passed", report.results.len());
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "passed": r.passed,
                        "counterexample": r.counterexample,
                    })
                })
                .collect();
            println!("{}", json!({ "passed": report.passed(), "checks": entries }));
        }
        OutputFormat::Csv => return Err(csv_unsupported("verify")),
    }
    Ok(())
}

pub fn print_tiling(
    format: OutputFormat,
    k: usize,
    n: i64,
    count: &BigInt,
    check: Option<&(BigInt, bool)>,
) -> Result<(), String> {
    match format {
        OutputFormat::Plain => {
            println!("tilings(n={n}, k={k}) = {count}");
            if let Some((predicted, ok)) = check {
                let verdict = if *ok { "ok" } else { "MISMATCH" };
                println!("check: C_{} = {predicted} — {verdict}", n + 1);
            }
        }
        OutputFormat::Json => {
            let mut body = json!({ "k": k, "n": n, "count": count.to_string() });
            if let Some((predicted, ok)) = check {
                body["check"] = json!({ "expected": predicted.to_string(), "ok": ok });
            }
            println!("{body}");
        }
        OutputFormat::Csv => return Err(csv_unsupported("tiling")),
    }
    Ok(())
}

pub fn print_bench(
    format: OutputFormat,
    k: usize,
    n: i64,
    value: &BigInt,
    reps: usize,
    timings: &[(&'static str, f64)],
) -> Result<(), String> {
    match format {
        OutputFormat::Plain => {
            println!("value: {value}");
            println!("values agree across {} strategies", timings.len());
            for (method, median) in timings {
                println!("{method}: median {median:.6}s over {reps} reps");
            }
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = timings
                .iter()
                .map(|(method, median)| json!({ "method": method, "median_seconds": median }))
                .collect();
            println!(
                "{}",
                json!({
                    "k": k,
                    "n": n,
                    "value": value.to_string(),
                    "agree": true,
                    "reps": reps,
                    "timings": entries,
                })
            );
        }
        OutputFormat::Csv => return Err(csv_unsupported("bench")),
    }
    Ok(())
}
