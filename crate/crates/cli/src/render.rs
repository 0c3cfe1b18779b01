//! Text rendering of reports. Matrices use a bracket layout with
//! right-aligned columns.

use std::fmt::Write;

use cliffsym::bw::TensorReport;
use cliffsym::{AlgebraSig, ClassificationReport, SweepReport};

fn matrix(name: &str, open: char, close: char, rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(1)).collect();
    let lead = format!("{name} := ");
    let pad = " ".repeat(lead.chars().count());
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        out.push_str(if i == 0 { &lead } else { &pad });
        out.push(open);
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        out.push(' ');
        out.push(close);
        out.push('\n');
    }
    out
}

fn serde_name(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).unwrap_or_default().trim_matches('"').to_string()
}

fn one(r: &ClassificationReport) -> String {
    let sig = if r.complex { AlgebraSig::complex(r.p) } else { AlgebraSig::real(r.p, r.q) };
    let mut out = String::new();
    let _ = write!(out, "{sig}");
    match &r.idempotent {
        Some(f) => {
            let _ = write!(out, ", f = {}", f.f);
        }
        None => out.push_str(", Pauli-matrix representation"),
    }
    out.push('\n');
    if let Some(s) = &r.summand {
        let _ = writeln!(out, "summand {} Cl({},{})", s.variant, s.p, s.q);
    }
    let _ = writeln!(out, "type {}, ring {}, K basis {{{}}}", r.h_type, r.ring, r.k_basis.join(", "));
    out.push('\n');
    for (i, g) in r.generators.iter().enumerate() {
        out.push_str(&matrix(&format!("E{}", i + 1), '[', ']', g));
    }
    if !r.generators.is_empty() {
        out.push('\n');
    }
    out.push_str(&matrix("W", '(', ')', &r.w));
    out.push_str(&matrix("E", '(', ')', &r.e));
    out.push_str(&matrix("C", '(', ')', &r.c));
    let _ = writeln!(out, "E chosen as {}, C = E·W", serde_name(&r.e_choice));
    let scaled: Vec<&str> = ["W", "E", "C"].into_iter().zip(r.phase).filter(|(_, p)| *p).map(|(n, _)| n).collect();
    if !scaled.is_empty() {
        let _ = writeln!(out, "multiplied by the central unit: {}", scaled.join(", "));
    }
    out.push('\n');
    let header = ["", "I", "W", "E", "C"];
    let labels = ["I", "W", "E", "C"];
    let mut table = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for (label, row) in labels.iter().zip(&r.table) {
        let mut line = vec![label.to_string()];
        line.extend(row.iter().cloned());
        table.push(line);
    }
    for line in table {
        let cells: Vec<String> = line.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "signature {}, Aut {}, cover {}{}",
        r.abc,
        r.order4_group,
        r.order8_cover,
        if r.degenerate { " (degenerate)" } else { "" }
    );
    let _ = writeln!(out, "{}", r.pin);
    let _ = writeln!(
        out,
        "symmetric generators {:?}, skew {:?}",
        r.split.sym, r.split.skew
    );
    let c = &r.checks;
    let opt = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
    let _ = writeln!(
        out,
        "checks: transpose corollary {}, commutation {}, W² {}, table {}",
        c.condt,
        opt(c.commutation),
        opt(c.w_square),
        c.table_consistent
    );
    let verdict = if r.conformance.pass { "pass" } else { "FAIL" };
    let _ = writeln!(out, "conformance: {verdict} ({})", r.conformance.case);
    out
}

pub fn classification(reports: &[ClassificationReport]) -> String {
    let rule = format!("{}\n", "-".repeat(60));
    reports.iter().map(one).collect::<Vec<_>>().join(&rule)
}

pub fn sweep(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<8} {:>4} {:<5} {:>6} {:>5}  kinds", "algebra", "type", "ring", "reps", "fail");
    for row in &report.rows {
        let kinds: Vec<String> = row.kinds.iter().map(|(k, n)| format!("{k} ×{n}")).collect();
        let _ = writeln!(
            out,
            "{:<8} {:>4} {:<5} {:>6} {:>5}  {}",
            format!("({},{})", row.p, row.q),
            row.h_type,
            row.ring.to_string(),
            row.reps,
            row.failures,
            kinds.join(", ")
        );
    }
    let t = &report.totals;
    let _ = writeln!(
        out,
        "\n{} representations, {} conformance failures, {} errors",
        t.reps, t.conformance_failures, t.errors
    );
    let _ = writeln!(
        out,
        "check failures: transpose corollary {}, commutation {}, W² {}, table {}",
        t.condt_failures, t.commutation_failures, t.w_square_failures, t.table_failures
    );
    out
}

pub fn tensor(r: &TensorReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ⊗ {} → {}", r.a, r.b, r.target);
    let iso = r.isomorphism.map_or("skipped".to_string(), |b| if b { "verified".into() } else { "FAILED".into() });
    let rel = if r.relations { "verified" } else { "FAILED" };
    let _ = writeln!(out, "generator relations {rel}, structure constants {iso}");
    let _ = writeln!(
        out,
        "class {} + {} ≡ {} (mod {}), target class {}",
        r.class_a.h, r.class_b.h, r.class_sum.h, r.class_sum.modulus, r.class_target.h
    );
    let _ = writeln!(out, "{}", if r.verified() { "verified" } else { "NOT verified" });
    out
}
