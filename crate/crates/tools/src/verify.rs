//! `sweep verify`: exhaustive runs sharded across threads.

use std::io::Write;
use std::ops::Range;

use clap::{Args, Subcommand};
use rayon::prelude::*;

use sweep_core::general::{Content, DyckParams};
use sweep_core::oracle::{
    check_sweep_injective, check_word_budget, verify_general_sweep, verify_sweep_bijective_range,
    verify_theorems_range, verify_zeta, Budget, VerifyReport,
};

use crate::{json, Failure, Outcome};

#[derive(Subcommand)]
pub enum VerifyAction {
    /// Sweep is a bijection on all words of length N over m letters.
    Bijective(Space),
    /// Every structural claim about equitable partitions, on every word.
    Theorems(Space),
    /// Integer sweep against the modulus lift on every word of a content.
    General {
        /// Content as `letter:multiplicity` pairs.
        #[arg(long, allow_hyphen_values = true)]
        content: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Zeta on D_{a,b} for each `a,b` pair.
    Zeta {
        /// Pairs such as `3,-5`.
        #[arg(required = true, allow_hyphen_values = true)]
        pairs: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
pub struct Space {
    /// Modulus m.
    #[arg(short, long = "mod", value_name = "M")]
    modulus: usize,
    /// Word lengths, e.g. `5` or `2..=5`.
    #[arg(short = 'n', long = "len", value_name = "N")]
    lengths: String,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
pub struct BudgetArgs {
    /// Most words a run may visit.
    #[arg(long, default_value_t = 1_000_000)]
    max_words: u128,
    /// Most partitioned words enumerated per word.
    #[arg(long, default_value_t = 1_000_000)]
    max_partitions: u128,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            words: self.max_words,
            partitions: self.max_partitions,
        }
    }
}

fn lengths(text: &str) -> Outcome<Vec<usize>> {
    let bad = || Failure::Domain(format!("'{text}' is not a length or a range like 2..=5"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((lo, hi)) = text.split_once("..=") {
        Ok((num(lo)?..=num(hi)?).collect())
    } else if let Some((lo, hi)) = text.split_once("..") {
        Ok((num(lo)?..num(hi)?).collect())
    } else {
        Ok(vec![num(text)?])
    }
}

const SHARD: u128 = 256;

fn shards(total: u128) -> Vec<Range<u128>> {
    (0..total.div_ceil(SHARD))
        .map(|i| i * SHARD..((i + 1) * SHARD).min(total))
        .collect()
}

fn sharded(
    total: u128,
    run: impl Fn(Range<u128>) -> sweep_core::Result<VerifyReport> + Sync,
) -> Outcome<Option<VerifyReport>> {
    let parts: Vec<VerifyReport> = shards(total)
        .into_par_iter()
        .map(&run)
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().reduce(VerifyReport::merge))
}

fn show(out: &mut impl Write, as_json: bool, r: &VerifyReport) -> Outcome {
    if as_json {
        writeln!(out, "{}", json::report(r))?;
    } else {
        write!(out, "{r}")?;
    }
    Ok(())
}

pub fn run(as_json: bool, out: &mut impl Write, action: &VerifyAction) -> Outcome {
    let mut reports = Vec::new();
    match action {
        VerifyAction::Bijective(s) => {
            let budget = s.budget.budget();
            for n in lengths(&s.lengths)? {
                let m = s.modulus;
                let total = check_word_budget(m, n, &budget)?;
                let mut r = sharded(total, |r| verify_sweep_bijective_range(m, n, r))?
                    .unwrap_or_else(|| VerifyReport::new(format!("m={m} N={n}")));
                check_sweep_injective(m, n, &mut r);
                reports.push(r);
            }
        }
        VerifyAction::Theorems(s) => {
            let budget = s.budget.budget();
            for n in lengths(&s.lengths)? {
                let m = s.modulus;
                let total = check_word_budget(m, n, &budget)?;
                let r = sharded(total, |r| verify_theorems_range(m, n, r, &budget))?
                    .unwrap_or_else(|| VerifyReport::new(format!("m={m} N={n}")));
                reports.push(r);
            }
        }
        VerifyAction::General { content, budget } => {
            let c = Content::parse(content)?;
            reports.push(verify_general_sweep(&c, &budget.budget())?);
        }
        VerifyAction::Zeta { pairs, budget } => {
            let params = pairs
                .iter()
                .map(|p| {
                    let (a, b) = p
                        .split_once(',')
                        .ok_or_else(|| Failure::Domain(format!("'{p}' is not a pair a,b")))?;
                    let parse = |s: &str| {
                        s.trim()
                            .parse::<i64>()
                            .map_err(|_| Failure::Domain(format!("'{s}' is not an integer")))
                    };
                    Ok(DyckParams::new(parse(a)?, parse(b)?)?)
                })
                .collect::<Outcome<Vec<_>>>()?;
            for p in &params {
                reports.push(verify_zeta(std::slice::from_ref(p), &budget.budget())?);
            }
        }
    }
    let mut failed = Vec::new();
    for r in &reports {
        show(out, as_json, r)?;
        if !r.passed() {
            failed.push(r.instance.clone());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invariant(format!(
            "claims failed on {}",
            failed.join("; ")
        )))
    }
}
