use std::fmt::Write;

use cpairs_core::claims::{ClaimReport, Table1Report, Value};

use crate::{Report, ResultEntry};

pub fn json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn results_table(out: &mut String, results: &[ResultEntry]) {
    out.push_str("| ids | quantity | value | max orbit dim | ambient dim | witnesses | holds | note |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in results {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.ids.join(", "),
            r.quantity,
            opt(r.value),
            opt(r.max_orbit_dim),
            opt(r.ambient_dim),
            list(&r.witnesses),
            r.holds.map_or_else(|| "-".to_string(), |b| b.to_string()),
            r.note.as_deref().unwrap_or(""),
        );
    }
}

fn value(v: &Value) -> String {
    match v {
        Value::Count(c) => c.to_string(),
        Value::Flag(b) => b.to_string(),
        Value::List(l) => format!("[{}]", list(l)),
    }
}

fn claim_section(out: &mut String, c: &ClaimReport) {
    let _ = writeln!(out, "## {}: {}\n", c.id, c.title);
    let _ = writeln!(out, "{}\n", c.statement);
    let _ = writeln!(out, "Mode: {:?}. Status: **{:?}**. Seed {}, {} samples.\n", c.mode, c.status, c.seed, c.samples);
    out.push_str("| instance | status | values | expected | note |\n|---|---|---|---|---|\n");
    for r in &c.records {
        let vals: Vec<String> = r.quantities.iter().map(|q| format!("{} = {}", q.name, value(&q.value))).collect();
        let _ = writeln!(
            out,
            "| {} | {:?} | {} | {} | {} |",
            r.instance,
            r.status,
            vals.join("; "),
            r.expected.as_deref().unwrap_or(""),
            r.note.as_deref().unwrap_or(""),
        );
    }
    out.push('\n');
}

fn table1_section(out: &mut String, t: &Table1Report) {
    out.push_str("## Spherical decompositions\n\n");
    out.push_str("Rows marked with * have K a spherical Levi subgroup; for those G/P x G/H is spherical.\n\n");
    out.push_str("| row | G | H | K | recovered | instances checked | K Levi | K spherical | selected | G/P x G/H | Levi side |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
    for r in &t.rows {
        let checked = r.instances.iter().filter(|i| i.holds()).count();
        let (diag, levi) = match &r.diagonal {
            Some(d) => (d.diagonal.value.to_string(), d.levi_side.value.to_string()),
            None => ("-".to_string(), "-".to_string()),
        };
        let _ = writeln!(
            out,
            "| {}{} | {} | {} | {} | {} | {}/{} | {} | {} | {} | {} | {} |",
            r.number,
            if r.selected { "*" } else { "" },
            r.group,
            r.h,
            r.k,
            if r.recovered { "yes" } else { "no" },
            checked,
            r.instances.len(),
            if r.k_is_levi { "yes" } else { "no" },
            if r.k_spherical { "yes" } else { "no" },
            if r.selected { "**yes**" } else { "no" },
            diag,
            levi,
        );
    }
    out.push('\n');
}

pub fn markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}\n", report.command);
    let c = &report.config;
    let _ = writeln!(
        out,
        "Seed {}, {} samples, coefficient bound {}, max rank {}, max parameter {}, spin rows {}.\n",
        c.seed,
        c.samples,
        c.coefficient_bound,
        c.max_rank,
        c.max_param,
        if c.enable_spin { "enabled" } else { "disabled" },
    );
    if let Some(t) = &report.table1 {
        table1_section(&mut out, t);
    }
    if report.claims.is_empty() {
        results_table(&mut out, &report.results);
    } else {
        for claim in &report.claims {
            claim_section(&mut out, claim);
        }
    }
    out
}
