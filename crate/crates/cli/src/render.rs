//! Plain-text rendering: tables in the row/column style the identities are
//! usually printed in, reports as one line per check.

use nilops_core::onevar::NormalFormEntry;
use nilops_core::opalgebra::TableJson;
use nilops_core::theorems::VerificationReport;

/// One table per degree: the canonical words head the columns, each rule is
/// a row of tail coefficients under them.
pub fn tables_text(tables: &[TableJson]) -> String {
    let mut out = String::new();
    for table in tables {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!(
            "variety {}, degree {}: {} rule{}, {} canonical word{}\n",
            table.variety,
            table.degree,
            table.rules.len(),
            plural(table.rules.len()),
            table.canonical.len(),
            plural(table.canonical.len()),
        ));
        if table.rules.is_empty() {
            out.push_str(&format!("  canonical: {}\n", table.canonical.join(" ")));
            continue;
        }
        if table.canonical.is_empty() {
            out.push_str("  every word of this degree reduces to 0\n");
            continue;
        }
        // Column widths: pivot column, then one column per canonical word.
        let pivot_width = table
            .rules
            .iter()
            .map(|r| r.pivot.len())
            .max()
            .unwrap_or(0)
            .max(4);
        let mut widths: Vec<usize> = table.canonical.iter().map(String::len).collect();
        for rule in &table.rules {
            for (i, word) in table.canonical.iter().enumerate() {
                let c = coefficient_for(rule, word);
                widths[i] = widths[i].max(c.len());
            }
        }
        out.push_str(&format!("  {:pivot_width$}", ""));
        for (word, w) in table.canonical.iter().zip(&widths) {
            out.push_str(&format!("  {word:>w$}"));
        }
        out.push('\n');
        for rule in &table.rules {
            out.push_str(&format!("  {:pivot_width$}", rule.pivot));
            for (word, w) in table.canonical.iter().zip(&widths) {
                out.push_str(&format!("  {:>w$}", coefficient_for(rule, word)));
            }
            out.push('\n');
        }
    }
    out.trim_end().to_string()
}

fn coefficient_for(rule: &nilops_core::opalgebra::RuleJson, word: &str) -> String {
    rule.tail
        .iter()
        .find(|t| t.word == word)
        .map(|t| t.coeff.to_string())
        .unwrap_or_else(|| "0".to_string())
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

pub fn elements_text(entries: &[NormalFormEntry]) -> String {
    let mut out = String::new();
    let mut degree = 0;
    for entry in entries {
        if entry.degree != degree {
            if degree != 0 {
                out.push('\n');
            }
            degree = entry.degree;
            out.push_str(&format!("degree {degree}\n"));
        }
        let nf = if entry.normal_form.is_empty() {
            "0".to_string()
        } else {
            entry
                .normal_form
                .iter()
                .map(|t| {
                    if t.coeff.is_one() {
                        t.basis.clone()
                    } else {
                        format!("{} {}", t.coeff, t.basis)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        out.push_str(&format!("  {} -> {nf}\n", entry.monomial));
    }
    out.trim_end().to_string()
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut out = format!("variety {}\n", report.variety);
    for check in &report.checks {
        out.push_str(&format!(
            "  {}  {}: {}\n",
            crate::status_label(check.status),
            check.id,
            check.anchor
        ));
        if check.status == nilops_core::theorems::CheckStatus::Fail {
            if let Some(witness) = &check.witness {
                out.push_str(&format!("        {witness}\n"));
            }
        }
    }
    let dims: Vec<String> = report.dims.iter().map(usize::to_string).collect();
    out.push_str(&format!("  dims by degree: {}\n", dims.join(" ")));
    let primes: Vec<String> = report
        .denominator_primes
        .iter()
        .map(u64::to_string)
        .collect();
    out.push_str(&format!(
        "  denominator primes: {}\n",
        if primes.is_empty() {
            "none".to_string()
        } else {
            primes.join(" ")
        }
    ));
    let failures = report.failures().count();
    out.push_str(&format!(
        "  {} check{} run, {} failed",
        report.checks.len(),
        plural(report.checks.len()),
        failures
    ));
    out
}
