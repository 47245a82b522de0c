//! `sweep`: command-line access to the sweep maps, equitable partitions and
//! the exhaustive checks.
//!
//! Exit status is 0 on success, 1 when an input is rejected, 2 on usage
//! errors and 3 when an internal consistency check fails.

mod json;
mod verify;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sweep_core::equitable::{
    balancing_array, column_statuses, is_equitable, rightmost_trace, successful_from_trace, Fill,
};
use sweep_core::general::{
    dyck_words, is_dyck, sweep_int, unsweep_int, unzeta, zeta, Content, DyckParams, IntWord,
};
use sweep_core::lattice::{enumerate_lattice, leftmost, leftmost_trace};
use sweep_core::schedule::{inspector_check, schedule_all, schedule_latest, Schedule};
use sweep_core::sweep::{inverse_presweep, presweep, sweep_mod, unsweep_mod, InverseOutcome};
use sweep_core::{Error, ModWord, PartitionedWord};

#[derive(Parser)]
#[command(
    name = "sweep",
    version,
    about = "Sweep maps, their inverses and equitable partitions"
)]
struct Cli {
    /// Machine-readable output, one JSON value per input.
    #[arg(long, global = true)]
    json: bool,
    /// ASCII-only output.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModInputs {
    /// Modulus m.
    #[arg(short, long = "mod", value_name = "M")]
    modulus: usize,
    /// Inputs; `-` reads one per line from standard input.
    inputs: Vec<String>,
}

#[derive(Args)]
struct IntInputs {
    /// Content as `letter:multiplicity` pairs; read off each word if omitted.
    #[arg(long, allow_hyphen_values = true)]
    content: Option<String>,
    /// Comma-separated integer words; `-` reads one per line from standard input.
    #[arg(allow_hyphen_values = true)]
    inputs: Vec<String>,
}

#[derive(Args)]
struct DyckInputs {
    /// Up step a > 0.
    #[arg(short = 'a', allow_hyphen_values = true)]
    a: i64,
    /// Down step b < 0.
    #[arg(short = 'b', allow_hyphen_values = true)]
    b: i64,
    /// Comma-separated integer words; `-` reads one per line from standard input.
    #[arg(allow_hyphen_values = true)]
    inputs: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Modular sweep of each word.
    Sweep(ModInputs),
    /// Preimage of each word under the modular sweep.
    Unsweep(ModInputs),
    /// Partitioned word recording each letter's level.
    Presweep(ModInputs),
    /// Inverse presweep of each partitioned word.
    Unpresweep(ModInputs),
    /// Rightmost equitable partition.
    Rightmost {
        #[command(flatten)]
        io: ModInputs,
        /// List every move.
        #[arg(long)]
        trace: bool,
    },
    /// Leftmost equitable partition.
    Leftmost {
        #[command(flatten)]
        io: ModInputs,
        /// List every move.
        #[arg(long)]
        trace: bool,
    },
    /// Successful partition reached from an equitable partition, or from the
    /// leftmost one when given a plain word.
    Successful {
        #[command(flatten)]
        io: ModInputs,
        /// List every failed round.
        #[arg(long)]
        trace: bool,
    },
    /// Lattice of equitable partitions of a word.
    Lattice {
        #[command(flatten)]
        io: ModInputs,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Balancing array of a partitioned word.
    Array(ModInputs),
    /// Sweep of integer words.
    Zsweep(IntInputs),
    /// Inverse sweep of integer words.
    Unzsweep(IntInputs),
    /// Zeta map on D_{a,b}.
    Zeta(DyckInputs),
    /// Inverse zeta map on D_{a,b}.
    Unzeta(DyckInputs),
    /// Dyck words: list D_{a,b}, or keep only the Dyck words among the inputs.
    Dyck {
        #[command(subcommand)]
        action: DyckAction,
    },
    /// Equitable task schedules.
    Schedule {
        #[command(subcommand)]
        action: ScheduleAction,
    },
    /// Exhaustive checks against brute force.
    Verify {
        #[command(subcommand)]
        action: verify::VerifyAction,
    },
}

#[derive(Subcommand)]
enum DyckAction {
    /// Every word of D_{a,b}.
    List {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: i64,
    },
    /// Echo the inputs whose partial sums stay nonnegative.
    Filter {
        #[arg(allow_hyphen_values = true)]
        inputs: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ScheduleAction {
    /// The successful schedule: every task as late as possible.
    Latest(ScheduleArgs),
    /// Every equitable schedule, earliest first.
    All(ScheduleArgs),
    /// Run the inspector on a schedule.
    Check {
        #[command(flatten)]
        args: ScheduleArgs,
        /// Start hours, comma-separated.
        #[arg(long)]
        starts: String,
    },
}

#[derive(Args)]
struct ScheduleArgs {
    /// Hours in a day.
    #[arg(long)]
    hours: usize,
    /// Task lengths, comma-separated.
    lengths: String,
}

enum Failure {
    Domain(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invariant_violation() {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("sweep: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("sweep: internal invariant violated: {msg}");
            ExitCode::from(3)
        }
    }
}

fn inputs(raw: &[String]) -> Outcome<Vec<String>> {
    if raw.len() == 1 && raw[0] == "-" {
        let stdin = io::stdin();
        let mut lines = Vec::new();
        for line in stdin.lock().lines() {
            lines.push(line?.trim_end_matches('\r').to_string());
        }
        return Ok(lines);
    }
    Ok(raw.to_vec())
}

fn part_text(p: &PartitionedWord, ascii: bool) -> String {
    if ascii {
        p.to_string()
    } else {
        p.dotted().to_string()
    }
}

fn emit(out: &mut impl Write, cli: &Cli, text: impl AsRef<str>, value: Value) -> Outcome {
    if cli.json {
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{}", text.as_ref())?;
    }
    Ok(())
}

fn each(raw: &[String], mut f: impl FnMut(&str) -> Outcome) -> Outcome {
    for line in inputs(raw)? {
        f(&line)?;
    }
    Ok(())
}

fn int_word(content: &Option<String>, text: &str) -> Outcome<IntWord> {
    Ok(match content {
        Some(c) => IntWord::parse(&Content::parse(c)?, text)?,
        None => IntWord::from_letters(sweep_core::general::parse_ints(text)?),
    })
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.command {
        Command::Sweep(io) => each(&io.inputs, |s| {
            let w = ModWord::parse(io.modulus, s)?;
            let u = sweep_mod(&w);
            emit(
                out,
                cli,
                u.to_string(),
                json!({"word": w.to_string(), "sweep": u.to_string()}),
            )
        }),
        Command::Unsweep(io) => each(&io.inputs, |s| {
            let u = ModWord::parse(io.modulus, s)?;
            let w = unsweep_mod(&u)?;
            emit(
                out,
                cli,
                w.to_string(),
                json!({"word": u.to_string(), "unsweep": w.to_string()}),
            )
        }),
        Command::Presweep(io) => each(&io.inputs, |s| {
            let p = presweep(&ModWord::parse(io.modulus, s)?);
            emit(out, cli, part_text(&p, cli.ascii), json::partition(&p))
        }),
        Command::Unpresweep(io) => each(&io.inputs, |s| {
            let p = PartitionedWord::parse(io.modulus, s)?;
            match inverse_presweep(&p) {
                InverseOutcome::Succeeded(w) => emit(
                    out,
                    cli,
                    w.to_string(),
                    json!({"partition": part_text(&p, true), "successful": true, "word": w.to_string()}),
                ),
                InverseOutcome::Failed(f) => {
                    if cli.json {
                        emit(out, cli, "", json::failure(&p, &f))?;
                        Ok(())
                    } else {
                        Err(Failure::Domain(format!(
                            "inverse presweep of {} stops after {} letters; unvisited {}",
                            part_text(&p, cli.ascii),
                            f.visited().len(),
                            part_text(f.residue(), cli.ascii)
                        )))
                    }
                }
            }
        }),
        Command::Rightmost { io, trace } => each(&io.inputs, |s| {
            let u = ModWord::parse(io.modulus, s)?;
            let (p, moves) = rightmost_trace(&u)?;
            moves_out(out, cli, &u, &p, &moves, *trace)
        }),
        Command::Leftmost { io, trace } => each(&io.inputs, |s| {
            let u = ModWord::parse(io.modulus, s)?;
            let (p, moves) = leftmost_trace(&u)?;
            moves_out(out, cli, &u, &p, &moves, *trace)
        }),
        Command::Successful { io, trace } => each(&io.inputs, |s| {
            let start = if s.contains('|') {
                PartitionedWord::parse(io.modulus, s)?
            } else {
                leftmost(&ModWord::parse(io.modulus, s)?)?
            };
            if !is_equitable(&start) {
                return Err(Failure::Domain(format!(
                    "{} is not equitable",
                    part_text(&start, cli.ascii)
                )));
            }
            let (p, rounds) = successful_from_trace(&start)?;
            if cli.json {
                let rounds: Vec<Value> = rounds
                    .iter()
                    .map(|r| json::failure(&r.partition, &r.failure))
                    .collect();
                return emit(
                    out,
                    cli,
                    "",
                    json!({"start": part_text(&start, true), "successful": part_text(&p, true), "rounds": rounds}),
                );
            }
            if *trace {
                for r in &rounds {
                    let order: Vec<String> = r
                        .failure
                        .visited()
                        .iter()
                        .map(|&(i, _)| (i + 1).to_string())
                        .collect();
                    writeln!(
                        out,
                        "{}  visited {}  shift {}",
                        part_text(&r.partition, cli.ascii),
                        order.join(","),
                        part_text(r.failure.residue(), cli.ascii)
                    )?;
                }
            }
            emit(out, cli, part_text(&p, cli.ascii), Value::Null)
        }),
        Command::Lattice { io, dot } => each(&io.inputs, |s| {
            let lat = enumerate_lattice(&ModWord::parse(io.modulus, s)?)?;
            if *dot {
                write!(out, "{}", lat.to_dot())?;
                return Ok(());
            }
            if cli.json {
                return emit(out, cli, "", json::lattice(&lat));
            }
            for (i, p) in lat.nodes().iter().enumerate() {
                let mark = if i == lat.bottom() {
                    "  leftmost"
                } else if i == lat.top() {
                    "  rightmost"
                } else {
                    ""
                };
                writeln!(out, "{i}  {}{mark}", part_text(p, cli.ascii))?;
            }
            for &(a, b) in lat.covers() {
                writeln!(out, "{a} -> {b}")?;
            }
            Ok(())
        }),
        Command::Array(io) => each(&io.inputs, |s| {
            let p = PartitionedWord::parse(io.modulus, s)?;
            if cli.json {
                return emit(out, cli, "", json::array(&p));
            }
            let arr = balancing_array(&p);
            for (line, &v) in arr.render(cli.ascii).lines().zip(p.word().letters()) {
                writeln!(out, "{line}  {v}")?;
            }
            let marks: Vec<&str> = column_statuses(&p)
                .iter()
                .rev()
                .map(|c| match c.fill {
                    Fill::Less => "-",
                    Fill::Equitable => "=",
                    Fill::More => "+",
                })
                .collect();
            writeln!(out, "{}", marks.join(" "))?;
            Ok(())
        }),
        Command::Zsweep(io) => each(&io.inputs, |s| {
            let w = int_word(&io.content, s)?;
            let u = sweep_int(&w);
            emit(
                out,
                cli,
                u.to_string(),
                json!({"word": w.letters(), "sweep": u.letters()}),
            )
        }),
        Command::Unzsweep(io) => each(&io.inputs, |s| {
            let u = int_word(&io.content, s)?;
            let w = unsweep_int(&u)?;
            emit(
                out,
                cli,
                w.to_string(),
                json!({"word": u.letters(), "unsweep": w.letters()}),
            )
        }),
        Command::Zeta(d) => {
            let p = DyckParams::new(d.a, d.b)?;
            each(&d.inputs, |s| {
                let w = IntWord::parse(&p.content(), s)?;
                let z = zeta(&w, &p)?;
                emit(
                    out,
                    cli,
                    z.to_string(),
                    json!({"word": w.letters(), "zeta": z.letters()}),
                )
            })
        }
        Command::Unzeta(d) => {
            let p = DyckParams::new(d.a, d.b)?;
            each(&d.inputs, |s| {
                let u = IntWord::parse(&p.content(), s)?;
                let w = unzeta(&u, &p)?;
                emit(
                    out,
                    cli,
                    w.to_string(),
                    json!({"word": u.letters(), "unzeta": w.letters()}),
                )
            })
        }
        Command::Dyck { action } => match action {
            DyckAction::List { a, b } => {
                let p = DyckParams::new(*a, *b)?;
                for w in dyck_words(&p) {
                    emit(out, cli, w.to_string(), json!(w.letters()))?;
                }
                Ok(())
            }
            DyckAction::Filter { inputs } => each(inputs, |s| {
                let w = int_word(&None, s)?;
                if is_dyck(&w) {
                    emit(out, cli, w.to_string(), json!(w.letters()))?;
                }
                Ok(())
            }),
        },
        Command::Schedule { action } => schedule(cli, out, action),
        Command::Verify { action } => verify::run(cli.json, out, action),
    }
}

fn moves_out(
    out: &mut impl Write,
    cli: &Cli,
    u: &ModWord,
    p: &PartitionedWord,
    moves: &[sweep_core::equitable::Move],
    trace: bool,
) -> Outcome {
    if cli.json {
        let moves: Vec<Value> = moves
            .iter()
            .map(|m| json!({"column": m.column, "position": m.position + 1, "from": m.from, "to": m.to}))
            .collect();
        return emit(
            out,
            cli,
            "",
            json!({"word": u.to_string(), "partition": part_text(p, true), "moves": moves}),
        );
    }
    if trace {
        for (i, m) in moves.iter().enumerate() {
            writeln!(
                out,
                "{:>3}  column {}  letter {} block {} -> {}",
                i + 1,
                m.column,
                m.position + 1,
                m.from,
                m.to
            )?;
        }
    }
    emit(out, cli, part_text(p, cli.ascii), Value::Null)
}

fn numbers(text: &str) -> Outcome<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Domain(format!("'{s}' is not a nonnegative integer")))
        })
        .collect()
}

fn join_numbers(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn schedule(cli: &Cli, out: &mut impl Write, action: &ScheduleAction) -> Outcome {
    let show = |out: &mut dyn Write, s: &Schedule, ok: bool, mark: bool| -> Outcome {
        if cli.json {
            writeln!(out, "{}", json::schedule(s, ok))?;
        } else if mark && ok {
            writeln!(out, "{}  successful", join_numbers(s.starts()))?;
        } else {
            writeln!(out, "{}", join_numbers(s.starts()))?;
        }
        Ok(())
    };
    match action {
        ScheduleAction::Latest(a) => {
            let s = schedule_latest(a.hours, &numbers(&a.lengths)?)?;
            show(out, &s, true, false)
        }
        ScheduleAction::All(a) => {
            for s in schedule_all(a.hours, &numbers(&a.lengths)?)? {
                let ok = inspector_check(&s)?.successful;
                show(out, &s, ok, true)?;
            }
            Ok(())
        }
        ScheduleAction::Check { args, starts } => {
            let s = Schedule::new(args.hours, numbers(&args.lengths)?, numbers(starts)?)?;
            let seen = inspector_check(&s)?;
            let watch: Vec<usize> = seen.watch.iter().map(|i| i + 1).collect();
            if cli.json {
                let mut v = json::schedule(&s, seen.successful);
                v["watch"] = json!(watch);
                writeln!(out, "{v}")?;
            } else {
                let verdict = if seen.successful {
                    "successful"
                } else {
                    "delayed"
                };
                writeln!(out, "{verdict}  watched {}", join_numbers(&watch))?;
            }
            Ok(())
        }
    }
}
