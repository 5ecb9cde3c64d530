//! Human-readable summary of a report.

use std::fmt::Write;

use crate::report::{CertificateReport, FixedReport, Payload, VerdictReport, WitnessReport};

fn fixed(f: &FixedReport) -> String {
    match f {
        FixedReport::All => "every slope".into(),
        FixedReport::None => "no slope".into(),
        FixedReport::Slope([p, q]) => format!("({p},{q})"),
    }
}

fn verdict(out: &mut String, v: &VerdictReport) {
    let _ = writeln!(out, "{}: {} ({})", v.question, v.status, v.certificate_kind());
    match &v.payload {
        Payload::Theorem { theorem, checks, .. } => {
            let _ = writeln!(out, "  by {theorem}");
            for c in checks {
                let mark = if c.holds { "ok" } else { "fails" };
                let _ = writeln!(out, "  {}: {} {} {} [{mark}]", c.name, c.lhs.0, c.relation, c.rhs.0);
            }
        }
        Payload::Witness { witness: WitnessReport::Relation { lhs, rhs, .. } } => {
            let _ = writeln!(out, "  relation {} = {}", lhs.text, rhs.text);
        }
        Payload::Witness { witness: WitnessReport::NonAnosov { word, fixed: f, value } } => {
            let trace = value.as_ref().map(|e| format!(", trace {}", e.trace)).unwrap_or_default();
            let _ = writeln!(out, "  {} fixes {}{trace}", word.text, fixed(f));
        }
        Payload::BoundedVerification { mode, height, power_bound, n0, points, moves, uncovered, violations } => {
            let n0 = n0.map(|k| format!(", n0 {k}")).unwrap_or_default();
            let _ = writeln!(out, "  {mode}: height {height}, powers up to {power_bound}{n0}");
            let _ = writeln!(
                out,
                "  {points} curves, {moves} moves, {} uncovered, {} violations",
                uncovered.len(),
                violations.len()
            );
        }
    }
    for n in &v.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    if let Some(c) = &v.consistency {
        let detail = c.detail.as_deref().unwrap_or("");
        let _ = writeln!(out, "  oracle: {} ({detail})", c.status);
    }
}

pub fn render(report: &CertificateReport) -> String {
    let mut out = String::new();
    if let Some(e) = &report.error {
        let _ = writeln!(out, "{}: {}", e.kind, e.message);
        return out;
    }
    for v in &report.verdicts {
        verdict(&mut out, v);
    }
    if let Some(b) = &report.bounds {
        if let Some(s) = &b.stats {
            let ratio = s.max_ratio.map(|r| format!(", M0 = {}", r.0)).unwrap_or_default();
            let _ = writeln!(out, "m = {}, M = {}{ratio}", s.min, s.max);
        }
        for r in &b.results {
            let _ = write!(out, "{}: {}", r.theorem, r.status);
            if let Some(reason) = &r.reason {
                let _ = write!(out, " ({reason})");
            }
            let ns: Vec<String> = r.exponents.iter().map(|e| format!("n >= {} -> {}", e.bound.0, e.n)).collect();
            if !ns.is_empty() {
                let _ = write!(out, "; {}", ns.join(", "));
            }
            out.push('\n');
        }
    }
    if let Some(s) = &report.search {
        let _ = writeln!(
            out,
            "{}: {} found up to {} syllables, step {}",
            s.mode,
            s.found.len(),
            s.max_syllables,
            s.max_step
        );
        for f in s.found.iter().take(10) {
            let _ = writeln!(out, "  {} (trace {}, fixes {})", f.word.text, f.value.trace, fixed(&f.fixed));
        }
        if s.found.len() > 10 {
            let _ = writeln!(out, "  ... {} more in the JSON report", s.found.len() - 10);
        }
    }
    out
}
