use std::fmt::Write;

use super::Report;
use crate::prover::{CaseNode, Step};

fn tree(out: &mut String, n: &CaseNode, depth: usize) {
    let pad = "  ".repeat(depth);
    let what = match &n.step {
        Step::Model => format!("**{}**", n.model.name()),
        Step::Link {
            link,
            target,
            back_edge,
            descent,
            ..
        } => format!(
            "{} → {link} to {}{}; {}′ − {} = {} ({}: {})",
            n.branch_label(),
            target.name(),
            if *back_edge { " (back-edge)" } else { "" },
            descent.component,
            descent.component,
            descent.delta,
            descent.hypothesis,
            if descent.holds {
                "negative"
            } else {
                "NOT negative"
            }
        ),
        Step::Refuted { witness } => {
            format!("{} refuted ({})", n.branch_label(), witness.kind_name())
        }
    };
    let open = n
        .open_reason
        .as_ref()
        .map(|r| format!(" **open: {r}**"))
        .unwrap_or_default();
    let _ = writeln!(out, "{pad}- {what}{open}");
    for c in &n.children {
        tree(out, c, depth + 1);
    }
}

pub fn render_markdown(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# torus-cremona: {}\n", r.command);
    let _ = writeln!(s, "- schema version: {}", r.schema_version);
    let _ = writeln!(s, "- seed: {}", r.seed);
    let _ = writeln!(
        s,
        "- result: {} (exit {})",
        if r.passed { "pass" } else { "FAIL" },
        r.exit_code
    );
    if let Some(f) = &r.failure {
        let _ = writeln!(s, "- first failure: {f}");
    }
    if let Some(v) = &r.verdict {
        let _ = writeln!(
            s,
            "- verdict: {} ({} → {})",
            v.status,
            v.start.name(),
            v.target.name()
        );
    }
    if let Some(c) = &r.contrast {
        let _ = writeln!(s, "- S3 contrast: {}", c.status);
    }

    let _ = writeln!(
        s,
        "\n## Checks\n\n| check | result | provenance | detail |\n|---|---|---|---|"
    );
    for c in &r.checks {
        let prov = serde_json::to_value(c.provenance)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            "| {} | {} | {prov} | {} |",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail.replace('|', "\\|")
        );
    }

    if let Some(v) = &r.verdict {
        let _ = writeln!(s, "\n## Case tree\n");
        let _ = writeln!(
            s,
            "Golden comparison: {}",
            v.golden_difference
                .as_deref()
                .unwrap_or("structurally equal")
        );
        for b in &v.open_branches {
            let _ = writeln!(s, "\nOpen branch: {b}");
        }
        let _ = writeln!(s);
        match &v.tree {
            Some(t) => tree(&mut s, t, 0),
            None => {
                let _ = writeln!(
                    s,
                    "```json\n{}\n```",
                    serde_json::to_string_pretty(&v.skeleton).unwrap_or_default()
                );
            }
        }
    }

    if let Some(c) = &r.contrast {
        let _ = writeln!(
            s,
            "\n## S3 contrast\n\n{} samples, {} skipped\n",
            c.samples, c.skipped
        );
        for f in &c.fixed_points {
            let _ = writeln!(
                s,
                "- {} on {}: S3-fixed {}, τ-fixed {}",
                f.point,
                f.model.name(),
                f.s3_fixed,
                f.tau_fixed
            );
        }
        for t in c
            .anchors
            .iter()
            .chain(&c.equivariance)
            .chain([&c.round_trip, &c.tau_control])
        {
            let _ = writeln!(s, "- {}: {}/{}", t.check, t.passed, t.total);
        }
    }

    let _ = writeln!(s, "\n## Readings of the source\n");
    for x in &r.readings {
        let _ = writeln!(
            s,
            "- {}: printed `{}`, read as {}",
            x.item, x.printed, x.reading
        );
    }
    s
}
