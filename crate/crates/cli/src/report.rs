//! The `sample`, `count` and `encode` commands.

use std::fmt::Write;

use pary_md::count::{Counter, Family};
use pary_md::{sample_md_distribution, sample_tree, PAryTree};
use serde_json::{json, Map, Value};

use crate::config::{CountArgs, EncodeArgs, Format, SampleArgs};

pub fn sample(args: &SampleArgs) -> anyhow::Result<String> {
    let p = args.common.p;
    let r = sample_md_distribution(p, args.n, args.trials, args.seed)?;
    let mut out = String::new();
    match args.common.format {
        Format::Text => {
            let _ = writeln!(
                out,
                "p={} n={} trials={} seed={}",
                r.arity, r.size, r.trials, r.seed
            );
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>12}  expected",
                "k", "observed", "ratio"
            );
            for (k, obs) in &r.observed {
                let exp = &r.expected[k];
                let _ = writeln!(
                    out,
                    "{k:>4} {obs:>12} {:>12.6}  {exp}",
                    *obs as f64 / r.trials as f64
                );
            }
            let _ = writeln!(
                out,
                "chi_square={:.6} df={} p_value={:.6}",
                r.chi_square, r.degrees_of_freedom, r.p_value
            );
        }
        Format::Csv => {
            out.push_str("k,observed,expected\n");
            for (k, obs) in &r.observed {
                let _ = writeln!(out, "{k},{obs},{}", r.expected[k]);
            }
        }
        Format::Json => {
            let observed: Map<String, Value> = r
                .observed
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            let expected: Map<String, Value> = r
                .expected
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v.to_string())))
                .collect();
            let doc = json!({
                "p": r.arity,
                "n": r.size,
                "trials": r.trials,
                "seed": r.seed,
                "observed": observed,
                "expected": expected,
                "chi_square": r.chi_square,
                "degrees_of_freedom": r.degrees_of_freedom,
                "p_value": r.p_value,
            });
            out = serde_json::to_string_pretty(&doc)?;
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn count(args: &CountArgs) -> anyhow::Result<String> {
    let family = Family::from(args.family);
    let p = args.common.p;
    let value = Counter::new(p)?.get(family, args.n as i64, args.k)?;
    Ok(match args.common.format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!(
            "family,p,n,k,value\n{family},{p},{},{},{value}\n",
            args.n, args.k
        ),
        Format::Json => {
            let doc = json!({
                "family": family.to_string(),
                "p": p,
                "n": args.n,
                "k": args.k,
                "value": value.to_string(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
    })
}

pub fn encode(args: &EncodeArgs) -> anyhow::Result<String> {
    let p = args.common.p;
    let tree = match (&args.tree, args.n) {
        (Some(text), _) => PAryTree::decode(text)?,
        (None, Some(n)) => sample_tree(p, n, args.seed.unwrap_or(0))?,
        (None, None) => anyhow::bail!("either --tree or --n is required"),
    };
    let md = tree.md_subtree()?;
    let d = tree.decompose()?;
    let attachments: Vec<String> = d
        .attachments
        .iter()
        .map(|a| format!("{}@{}:{}", a.root, a.parent, a.slot))
        .collect();
    let mut out = String::new();
    match args.common.format {
        Format::Text => {
            let _ = writeln!(out, "tree        {tree}");
            let _ = writeln!(out, "arity       {}", tree.arity());
            let _ = writeln!(out, "vertices    {}", tree.len());
            let _ = writeln!(out, "md_size     {}", md.len());
            let _ = writeln!(out, "md_subtree  {md}");
            let _ = writeln!(out, "y_part      {}", d.y_part);
            let _ = writeln!(out, "z_part      {}", d.z_part);
            let _ = writeln!(out, "attachments {}", attachments.join(" "));
        }
        Format::Csv => {
            out.push_str("tree,arity,vertices,md_size,md_subtree,y_part,z_part\n");
            let z: Vec<String> = d.z_part.components().iter().map(|c| c.encode()).collect();
            let _ = writeln!(
                out,
                "\"{tree}\",{},{},{},\"{md}\",\"{}\",\"{}\"",
                tree.arity(),
                tree.len(),
                md.len(),
                d.y_part,
                z.join(" ")
            );
        }
        Format::Json => {
            let doc = json!({
                "tree": tree.encode(),
                "arity": tree.arity(),
                "vertices": tree.len(),
                "md_size": md.len(),
                "md_subtree": md.encode(),
                "y_part": d.y_part.encode(),
                "z_part": d.z_part.components().iter().map(|c| c.encode()).collect::<Vec<_>>(),
                "attachments": d.attachments.iter().map(|a| json!({
                    "root": a.root, "parent": a.parent, "slot": a.slot,
                })).collect::<Vec<_>>(),
            });
            out = serde_json::to_string_pretty(&doc)?;
            out.push('\n');
        }
    }
    Ok(out)
}
