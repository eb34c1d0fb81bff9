use std::fmt::Write;

use pary_md::count::{Counter, Family};
use pary_md::{forest_oracle, md_histogram, y_histogram, EnumerationBudget, MdHistogram, Nat};
use serde_json::json;

use crate::config::{Format, VerifyArgs};

pub struct Check {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub oracle: Nat,
    pub formula: Nat,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.oracle == self.formula
    }
}

pub struct Outcome {
    pub checks: Vec<Check>,
    /// Set when the budget ran out before all checks were done.
    pub error: Option<pary_md::Error>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::passed)
    }
}

fn oracle_at(hist: &MdHistogram, n: u32, k: u32) -> Nat {
    if n == 0 {
        Nat::from(u32::from(k == 0))
    } else {
        hist.get(k as usize)
    }
}

/// Runs oracle-versus-formula checks for t, y and f over the range,
/// stopping at the first budget error.
pub fn check_all(args: &VerifyArgs) -> anyhow::Result<Outcome> {
    let p = args.common.p;
    let budget = EnumerationBudget::new(args.budget);
    let mut counter = Counter::new(p)?;
    let mut checks = Vec::new();
    let mut run = || -> pary_md::Result<()> {
        for n in args.n.iter() {
            let t_hist = md_histogram(p, n, &budget)?;
            let y_hist = y_histogram(p, n, &budget)?;
            for k in 0..=n {
                let (ni, ki) = (n as i64, k as i64);
                checks.push(Check {
                    family: Family::T,
                    n,
                    k,
                    oracle: oracle_at(&t_hist, n, k),
                    formula: counter.t(ni, ki)?,
                });
                checks.push(Check {
                    family: Family::Y,
                    n,
                    k,
                    oracle: oracle_at(&y_hist, n, k),
                    formula: counter.y(ni, ki)?,
                });
                checks.push(Check {
                    family: Family::F,
                    n,
                    k,
                    oracle: forest_oracle(p, n, k, &budget)?,
                    formula: counter.f(ni, ki)?,
                });
            }
        }
        Ok(())
    };
    let error = match run() {
        Ok(()) => None,
        Err(e @ pary_md::Error::BudgetExceeded { .. }) => Some(e),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome { checks, error })
}

pub fn render(outcome: &Outcome, args: &VerifyArgs) -> String {
    let status = |c: &Check| if c.passed() { "PASS" } else { "FAIL" };
    let mut out = String::new();
    match args.common.format {
        Format::Text => {
            for c in &outcome.checks {
                let _ = writeln!(
                    out,
                    "{} {}(n={},k={}) p={} oracle={} formula={}",
                    status(c),
                    c.family,
                    c.n,
                    c.k,
                    args.common.p,
                    c.oracle,
                    c.formula
                );
            }
            let failed = outcome.checks.iter().filter(|c| !c.passed()).count();
            let _ = writeln!(
                out,
                "{} checks, {} failed{}",
                outcome.checks.len(),
                failed,
                if outcome.error.is_some() {
                    ", incomplete"
                } else {
                    ""
                }
            );
        }
        Format::Csv => {
            out.push_str("family,p,n,k,oracle,formula,status\n");
            for c in &outcome.checks {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    c.family,
                    args.common.p,
                    c.n,
                    c.k,
                    c.oracle,
                    c.formula,
                    status(c)
                );
            }
        }
        Format::Json => {
            let checks: Vec<_> = outcome
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "family": c.family.to_string(),
                        "n": c.n,
                        "k": c.k,
                        "oracle": c.oracle.to_string(),
                        "formula": c.formula.to_string(),
                        "status": status(c),
                    })
                })
                .collect();
            let doc = json!({
                "p": args.common.p,
                "range": args.n.to_string(),
                "passed": outcome.all_passed(),
                "error": outcome.error.as_ref().map(ToString::to_string),
                "checks": checks,
            });
            out = serde_json::to_string_pretty(&doc).expect("json value serializes");
            out.push('\n');
        }
    }
    out
}
