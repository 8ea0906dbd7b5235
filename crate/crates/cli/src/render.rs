//! Plain-text tables.

use std::fmt::Write;

use levi_core::cases::CaseReport;
use levi_core::format::NamedIndex;
use levi_core::index::{ClassificationReport, Relation};

fn set(labels: &[usize]) -> String {
    let parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn word(w: &[usize]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

fn class_of(classes: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for (k, c) in classes.iter().enumerate() {
        for &i in c {
            out[i] = k;
        }
    }
    out
}

pub fn classification(name: &str, r: &ClassificationReport) -> String {
    let mut out = String::new();
    let ix = &r.index;
    let gamma = if ix.automorphisms.is_empty() {
        "trivial".to_string()
    } else {
        format!("<{}> of order {}", ix.automorphisms.join(", "), ix.gamma_order)
    };
    writeln!(out, "index      {name}").unwrap();
    writeln!(out, "type       {}", ix.types.join("x")).unwrap();
    writeln!(out, "delta0     {}", set(&ix.delta0)).unwrap();
    writeln!(out, "gamma      {gamma}").unwrap();
    writeln!(out, "subsets    {}", r.subsets.len()).unwrap();
    writeln!(out).unwrap();

    let geo = class_of(&r.geometric_classes, r.subsets.len());
    let rat = class_of(&r.rational_classes, r.subsets.len());
    let rows: Vec<Vec<String>> = r
        .subsets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                i.to_string(),
                set(&s.members),
                s.rank.to_string(),
                if s.kind.is_empty() { "-".into() } else { s.kind.clone() },
                format!("G{}", geo[i]),
                format!("R{}", rat[i]),
            ]
        })
        .collect();
    out.push_str(&table(&["#", "subset", "rank", "type", "geometric", "rational"], &rows));
    writeln!(out).unwrap();
    writeln!(out, "geometric classes  {}", r.geometric_classes.len()).unwrap();
    writeln!(out, "rational classes   {}", r.rational_classes.len()).unwrap();

    if !r.witnesses.is_empty() {
        writeln!(out).unwrap();
        let rows: Vec<Vec<String>> = r
            .witnesses
            .iter()
            .map(|w| {
                vec![
                    match w.relation {
                        Relation::Geometric => "geometric".into(),
                        Relation::Rational => "rational".into(),
                    },
                    set(&r.subsets[w.from].members),
                    set(&r.subsets[w.to].members),
                    word(&w.word),
                ]
            })
            .collect();
        out.push_str(&table(&["witness", "from", "to", "word"], &rows));
    }
    writeln!(out).unwrap();
    writeln!(out, "agreement: {}", if r.agreement { "yes" } else { "no" }).unwrap();
    out
}

pub fn suite(reports: &[CaseReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            vec![
                r.case_id.clone(),
                if params.is_empty() { "-".into() } else { params.join(" ") },
                r.computed.classes.len().to_string(),
                if r.pass { "pass" } else { "FAIL" }.into(),
                format!("{:.3}s", r.elapsed.as_secs_f64()),
            ]
        })
        .collect();
    let mut out = table(&["case", "parameters", "classes", "result", "elapsed"], &rows);
    for r in reports.iter().filter(|r| !r.pass) {
        writeln!(out, "\n{} {:?}", r.case_id, r.parameters).unwrap();
        if r.expected != r.computed {
            writeln!(out, "  expected {:?}", r.expected.classes).unwrap();
            writeln!(out, "  computed {:?}", r.computed.classes).unwrap();
        }
        for c in r.failed_checks() {
            writeln!(out, "  failed: {} ({})", c.name, c.detail).unwrap();
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    writeln!(out, "\n{passed}/{} passed", reports.len()).unwrap();
    out
}

pub fn catalog(entries: &[NamedIndex]) -> String {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            let ix = &e.index;
            let gamma: Vec<String> = ix.generators().iter().map(|g| g.to_cycles()).collect();
            let labels: Vec<usize> = ix.delta0().iter().map(|&i| i + 1).collect();
            vec![
                e.name.clone(),
                ix.root_system().factor_types().iter().map(ToString::to_string).collect::<Vec<_>>().join("x"),
                set(&labels),
                if gamma.is_empty() { "-".into() } else { gamma.join(" ") },
                ix.stable_levi_subsets().len().to_string(),
            ]
        })
        .collect();
    table(&["name", "type", "delta0", "gamma", "subsets"], &rows)
}
