//! Plain-text and markdown renderings.

use std::fmt::Write;

use crate::json::{
    EnumerateJson, FixturesJson, FusionJson, SieveJson, SupportCheckJson, TheoremJson,
};

/// ANSI styling for terminal output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn good(self, text: &str) -> String {
        self.paint("32", text)
    }

    pub fn bad(self, text: &str) -> String {
        self.paint("31", text)
    }

    pub fn dim(self, text: &str) -> String {
        self.paint("2", text)
    }
}

fn slot_cell(slot: &Option<String>) -> String {
    slot.as_ref()
        .map_or_else(|| "-".to_string(), |s| format!("({s})"))
}

fn rule_cell(rule: &str, imported: bool) -> String {
    if imported {
        format!("{rule} (imported theorem)")
    } else {
        rule.to_string()
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn enumerate_text(e: &EnumerateJson) -> String {
    let mut out = format!("dimension {}: {} types\n", e.dimension, e.count);
    for t in &e.types {
        let terms: Vec<String> = std::iter::once(format!("{}", t.n))
            .chain(t.entries.iter().map(|[d, c]| format!("{c}·{d}²")))
            .collect();
        let _ = writeln!(
            out,
            "  {:<32} {} = {}",
            t.text,
            terms.join(" + "),
            t.dimension
        );
    }
    out
}

pub fn sieve_text(s: &SieveJson, style: Style) -> String {
    let mut out = String::new();
    let _ = write!(out, "dimension {}: {} raw types", s.dimension, s.raw_count);
    if let Some(p) = &s.pointed {
        let _ = write!(out, ", pointed type {p} excluded");
    }
    let _ = writeln!(out, "\n\nsurvivors ({}):", s.survivors.len());
    for v in &s.survivors {
        let _ = writeln!(
            out,
            "  {:<7} {:<30} {}",
            slot_cell(&v.slot),
            style.good(&v.ty),
            style.dim(&v.annotations.join("; "))
        );
        for verdict in v.verdicts.iter().flatten() {
            let _ = writeln!(
                out,
                "            {:<15} {:<10} {}",
                verdict.rule.as_deref().unwrap_or("-"),
                verdict.outcome,
                verdict.reason
            );
        }
    }
    let _ = writeln!(out, "\neliminated ({}):", s.eliminated.len());
    for e in &s.eliminated {
        let _ = writeln!(
            out,
            "  {:<30} {:<30} {}",
            style.bad(&e.ty),
            rule_cell(&e.rule, e.imported),
            e.reason
        );
        for verdict in e.verdicts.iter().flatten() {
            let _ = writeln!(
                out,
                "      {:<15} {:<10} {}",
                verdict.rule.as_deref().unwrap_or("-"),
                verdict.outcome,
                verdict.reason
            );
        }
    }
    match s.reference_match {
        Some(true) => {
            let _ = writeln!(out, "\nreference: {}", style.good("match"));
        }
        Some(false) => {
            let _ = writeln!(out, "\nreference: {}", style.bad("MISMATCH"));
        }
        None => {}
    }
    out
}

pub fn sieve_markdown(s: &SieveJson) -> String {
    let mut out = format!("# Coalgebra types of dimension {}\n\n", s.dimension);
    let _ = writeln!(
        out,
        "Raw candidates: {}. Survivors: {}. Eliminated: {}.{}\n",
        s.raw_count,
        s.survivors.len(),
        s.eliminated.len(),
        s.pointed
            .as_ref()
            .map(|p| format!(" The pointed type {p} is excluded."))
            .unwrap_or_default()
    );
    out.push_str("## Survivors\n\n| Slot | n | Type | Notes |\n|---|---|---|---|\n");
    for v in &s.survivors {
        let n =
            v.ty.trim_start_matches("(1, ")
                .split(';')
                .next()
                .unwrap_or("")
                .trim_end_matches(')');
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            slot_cell(&v.slot),
            n,
            v.ty,
            md_escape(&v.annotations.join("; "))
        );
    }
    out.push_str("\n## Eliminated\n\n| Type | Rule | Reason |\n|---|---|---|\n");
    for e in &s.eliminated {
        let _ = writeln!(
            out,
            "| {} | {} | {} |",
            e.ty,
            rule_cell(&e.rule, e.imported),
            md_escape(&e.reason)
        );
    }
    match s.reference_match {
        Some(true) => out.push_str("\nReference list: match.\n"),
        Some(false) => out.push_str("\nReference list: **mismatch**.\n"),
        None => {}
    }
    out
}

pub fn fusion_text(f: &FusionJson) -> String {
    let mut out = format!("{} for G = {}\n", f.algebra, f.group);
    let ty: Vec<String> = f.ty.iter().map(|[d, c]| format!("{d}, {c}")).collect();
    let _ = writeln!(out, "coalgebra type ({})", ty.join("; "));
    let _ = writeln!(out, "max rounding residue {:.1e}\n", f.max_residue);
    for l in &f.labels {
        let _ = writeln!(
            out,
            "  [{}] {:<12} degree {}  dual {}",
            l.id, l.name, l.degree, f.labels[l.dual].name
        );
    }
    out.push('\n');
    let len = f.labels.len();
    let mut products = vec![Vec::new(); len * len];
    for &[k, i, j, m] in &f.n {
        products[i as usize * len + j as usize].push((k as usize, m));
    }
    for i in 0..len {
        for j in i..len {
            let terms: Vec<String> = products[i * len + j]
                .iter()
                .map(|&(k, m)| {
                    if m == 1 {
                        f.labels[k].name.clone()
                    } else {
                        format!("{m}·{}", f.labels[k].name)
                    }
                })
                .collect();
            let _ = writeln!(
                out,
                "  {} · {} = {}",
                f.labels[i].name,
                f.labels[j].name,
                terms.join(" + ")
            );
        }
    }
    out
}

pub fn support_text(c: &SupportCheckJson, style: Style) -> String {
    let mut out = format!(
        "{}: {} conjugation-closed supports of size {}\n",
        c.group,
        c.supports.len(),
        c.total
    );
    for s in &c.supports {
        let verdict = if s.verdict == "Unknown" {
            style.dim(&s.verdict)
        } else {
            style.bad(&s.verdict)
        };
        let _ = writeln!(out, "\n  {{{}}}  {}", s.support.join(", "), verdict);
        for line in &s.witness.trace {
            let _ = writeln!(out, "    {line}");
        }
    }
    out
}

pub fn theorems_text(ts: &[TheoremJson], style: Style) -> String {
    let mut out = String::new();
    for t in ts {
        let _ = writeln!(
            out,
            "{} in dimension {}: {}",
            t.group,
            t.total,
            style.good(&t.statement)
        );
        for note in &t.notes {
            let _ = writeln!(out, "  {note}");
        }
        for case in &t.cases {
            let _ = writeln!(out, "  {{{}}} {}", case.support.join(", "), case.verdict);
        }
    }
    out
}

pub fn fixtures_text(f: &FixturesJson, style: Style) -> String {
    let mut out = String::new();
    for e in &f.examples {
        let status = if e.problems.is_empty() {
            style.good("ok")
        } else {
            style.bad("FAIL")
        };
        let duality = match (&e.dual_of, e.self_dual) {
            (_, true) => "self-dual".to_string(),
            (Some(d), false) => format!("dual of {d}"),
            (None, false) => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "{:<3} {:<28} G = {:<3} (order {:>2})  slot {:<7} {:<11} {}",
            e.name,
            e.ty,
            e.grouplikes,
            e.grouplike_order,
            slot_cell(&e.slot),
            duality,
            status
        );
        for p in &e.problems {
            let _ = writeln!(out, "    {p}");
        }
    }
    out
}
