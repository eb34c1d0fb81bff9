use std::fmt::Write;

use pary_md::count::{Counter, Family};
use pary_md::exact::labeled_tree_count;
use pary_md::Nat;
use serde_json::json;

use crate::config::{Format, TableArgs};

struct Row {
    n: u32,
    values: Vec<Nat>,
    row_sum: Option<Nat>,
}

pub fn run(args: &TableArgs) -> anyhow::Result<String> {
    let family = Family::from(args.family);
    let p = args.common.p;
    let mut counter = Counter::new(p)?;
    let rows = args
        .n
        .iter()
        .map(|n| {
            let values = counter.row(family, n as usize)?;
            // The t-table carries the n! C_n column; t_row checks the sum.
            let row_sum = match family {
                Family::T => {
                    counter.t_row(n as usize)?;
                    Some(labeled_tree_count(p, n as u64)?)
                }
                _ => None,
            };
            Ok(Row { n, values, row_sum })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;

    Ok(match args.common.format {
        Format::Text => render_text(&rows, args.n.end),
        Format::Csv => render_csv(&rows, args.n.end, family),
        Format::Json => render_json(&rows, family, p),
    })
}

fn render_text(rows: &[Row], max_n: u32) -> String {
    let has_sum = rows.iter().any(|r| r.row_sum.is_some());
    let mut header: Vec<String> = vec!["n\\k".into()];
    header.extend((0..=max_n).map(|k| k.to_string()));
    if has_sum {
        header.push("n!C_n".into());
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![r.n.to_string()];
            cells.extend(r.values.iter().map(ToString::to_string));
            // Upper triangle stays blank.
            cells.resize(max_n as usize + 2, String::new());
            if let Some(s) = &r.row_sum {
                cells.push(s.to_string());
            }
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            std::iter::once(&header)
                .chain(&body)
                .map(|row| row.get(c).map_or(0, String::len))
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    for row in std::iter::once(&header).chain(&body) {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{cell:<w$} |", w = widths[0]);
            } else {
                let _ = write!(line, " {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[Row], max_n: u32, family: Family) -> String {
    let mut out = String::from("n");
    for k in 0..=max_n {
        let _ = write!(out, ",{k}");
    }
    if family == Family::T {
        out.push_str(",n!C_n");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "{}", r.n);
        for v in &r.values {
            let _ = write!(out, ",{v}");
        }
        if let Some(s) = &r.row_sum {
            let _ = write!(out, ",{s}");
        }
        out.push('\n');
    }
    out
}

fn render_json(rows: &[Row], family: Family, p: u32) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| {
            let mut obj = json!({
                "n": r.n,
                "values": r.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            if let Some(s) = &r.row_sum {
                obj["row_sum"] = json!(s.to_string());
            }
            obj
        })
        .collect();
    let doc = json!({ "family": family.to_string(), "p": p, "rows": rows });
    let mut s = serde_json::to_string_pretty(&doc).expect("json value serializes");
    s.push('\n');
    s
}
