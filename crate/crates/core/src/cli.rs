//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain or I/O errors, 2 on usage errors.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::committee::{enumerate_critical, CommitteeCandidate};
use crate::cycle::{enumerate_all_cycles, enumerate_cycles, find_cycle, CycleEnumeration};
use crate::decomposition::{Decomposer, Decomposition};
use crate::dot::tope_graph_dot;
use crate::poset::BasedPoset;
use crate::realization::Arrangement;
use crate::signs::{negative_part, Tope};
use crate::tope_set::TopeSet;

#[derive(Debug, Parser)]
#[command(
    name = "topes",
    version,
    about = "Topes, symmetric cycles and committees of simple oriented matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Tope set file (`.topes`).
    #[arg(long, value_name = "PATH")]
    topes: Option<PathBuf>,
    /// Arrangement file (`.arr`); its chambers are used as the tope set.
    #[arg(long, value_name = "PATH")]
    arr: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Output {
    /// Write output to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a tope set and print a summary.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Also check that graph distances equal Hamming distances.
        #[arg(long)]
        partial_cube: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate the chambers of an arrangement as a tope file.
    Chambers {
        #[arg(long, value_name = "PATH")]
        arr: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Tope graph in DOT.
    Graph {
        #[command(flatten)]
        input: Input,
        /// Highlight the vertices of the first symmetric cycle based here.
        #[arg(long, value_name = "STR")]
        cycle_base: Option<Tope>,
        #[command(flatten)]
        output: Output,
    },
    /// Hasse diagram of the tope poset in DOT.
    Poset {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "STR")]
        base: Tope,
        /// Highlight the vertex set of the first symmetric cycle based here.
        #[arg(long, value_name = "STR")]
        cycle_base: Option<Tope>,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate symmetric cycles through a base, or through every tope.
    Cycles {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "STR")]
        base: Option<Tope>,
        #[arg(long, value_name = "N", default_value_t = 200)]
        budget: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Enumerate bases concurrently (output order is unchanged).
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Decompose a tope (or every tope) over a symmetric cycle.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "STR")]
        tope: Option<Tope>,
        /// Base of the cycle; defaults to the lexicographically smallest tope.
        #[arg(long, value_name = "STR")]
        cycle_base: Option<Tope>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Verify a committee given by `--tope` members, or enumerate critical ones.
    Committee {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        critical: bool,
        #[arg(long, value_name = "STR")]
        tope: Vec<Tope>,
        /// Reorient on the negative part of this tope first.
        #[arg(long, value_name = "STR")]
        base: Option<Tope>,
        #[arg(long, value_name = "N", default_value_t = 200)]
        budget: usize,
        /// Use cycles through every tope, not only the positive tope.
        #[arg(long)]
        all_bases: bool,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let rendered = err.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, out)) => match emit(&text, out.as_deref(), stdout) {
            Ok(()) => 0,
            Err(err) => {
                let _ = writeln!(stderr, "error: {err:#}");
                1
            }
        },
        Err(err) => {
            let _ = writeln!(stderr, "error: {err:#}");
            1
        }
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).context("writing output"),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(input: &Input) -> anyhow::Result<TopeSet> {
    match (&input.topes, &input.arr) {
        (Some(path), _) => {
            TopeSet::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
        }
        (None, Some(path)) => {
            let arrangement = Arrangement::parse(&read(path)?)
                .with_context(|| format!("in {}", path.display()))?;
            Ok(arrangement.chambers()?)
        }
        (None, None) => bail!("one of --topes or --arr is required"),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json renders");
    s.push('\n');
    s
}

fn reject_format(format: Format, allowed: &[Format]) -> anyhow::Result<()> {
    if !allowed.contains(&format) {
        bail!("format {format:?} is not supported by this command");
    }
    Ok(())
}

fn execute(command: Command) -> anyhow::Result<(String, Option<PathBuf>)> {
    match command {
        Command::Validate {
            input,
            partial_cube,
            format,
            output,
        } => {
            reject_format(format, &[Format::Text, Format::Json])?;
            let set = load(&input)?;
            if partial_cube {
                set.check_partial_cube()?;
            }
            let edges = set.adjacency_edges().edges.len();
            let text = match format {
                Format::Json => pretty(&json!({
                    "t": set.t(),
                    "topes": set.len(),
                    "edges": edges,
                    "acyclic": set.is_acyclic(),
                    "partial_cube_checked": partial_cube,
                })),
                _ => format!(
                    "valid\nt {}\ntopes {}\nedges {}\nacyclic {}\n{}",
                    set.t(),
                    set.len(),
                    edges,
                    set.is_acyclic(),
                    if partial_cube {
                        "partial_cube ok\n"
                    } else {
                        ""
                    }
                ),
            };
            Ok((text, output.out))
        }
        Command::Chambers {
            arr,
            format,
            output,
        } => {
            reject_format(format, &[Format::Text, Format::Json])?;
            let arrangement = Arrangement::parse(&read(&arr)?)
                .with_context(|| format!("in {}", arr.display()))?;
            let set = arrangement.chambers()?;
            let text = match format {
                Format::Json => pretty(&json!({ "t": set.t(), "topes": set.topes() })),
                _ => set.to_text(),
            };
            Ok((text, output.out))
        }
        Command::Graph {
            input,
            cycle_base,
            output,
        } => {
            let set = load(&input)?;
            let highlight = match cycle_base {
                Some(b) => find_cycle(&set, &b)?.vertex_set(),
                None => BTreeSet::new(),
            };
            Ok((tope_graph_dot(&set, &highlight), output.out))
        }
        Command::Poset {
            input,
            base,
            cycle_base,
            output,
        } => {
            let set = load(&input)?;
            let poset = BasedPoset::new(&set, &base)?;
            let highlight = match cycle_base {
                Some(b) => find_cycle(&set, &b)?.vertex_set(),
                None => BTreeSet::new(),
            };
            Ok((poset.to_dot(&highlight), output.out))
        }
        Command::Cycles {
            input,
            base,
            budget,
            format,
            parallel,
            output,
        } => {
            reject_format(format, &[Format::Text, Format::Json])?;
            let set = load(&input)?;
            let found = match base {
                Some(b) => enumerate_cycles(&set, &b, budget)?,
                None => enumerate_all_cycles(&set, budget, parallel)?,
            };
            Ok((render_cycles(&found, format), output.out))
        }
        Command::Decompose {
            input,
            tope,
            cycle_base,
            format,
            output,
        } => {
            reject_format(format, &[Format::Text, Format::Json])?;
            let set = load(&input)?;
            let base = cycle_base.unwrap_or_else(|| set.topes()[0].clone());
            let decomposer = Decomposer::new(&find_cycle(&set, &base)?)?;
            let single = tope.is_some();
            let targets: Vec<Tope> = match tope {
                Some(t) => {
                    if !set.contains(&t) {
                        bail!("tope {t} is not in the tope set");
                    }
                    vec![t]
                }
                None => set.topes().to_vec(),
            };
            let results = targets
                .iter()
                .map(|t| decomposer.decompose(t))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match (format, results.as_slice()) {
                (Format::Json, [only]) if single => pretty(&only.to_json()),
                (Format::Json, many) => pretty(&serde_json::Value::Array(
                    many.iter().map(Decomposition::to_json).collect(),
                )),
                (_, many) => many.iter().map(render_decomposition).collect(),
            };
            Ok((text, output.out))
        }
        Command::Committee {
            input,
            critical,
            tope,
            base,
            budget,
            all_bases,
            parallel,
            format,
            output,
        } => {
            reject_format(format, &[Format::Text, Format::Json])?;
            let mut set = load(&input)?;
            if let Some(b) = &base {
                if !set.contains(b) {
                    bail!("tope {b} is not in the tope set");
                }
                set = set.reorient(&negative_part(b))?;
            }
            let text = match (critical, tope.is_empty()) {
                (true, true) => {
                    let found = enumerate_critical(&set, budget, all_bases, parallel)?;
                    match format {
                        Format::Json => {
                            let committees = found
                                .committees
                                .iter()
                                .map(CommitteeCandidate::to_json)
                                .collect::<Result<Vec<_>, _>>()?;
                            pretty(
                                &json!({ "committees": committees, "truncated": found.truncated }),
                            )
                        }
                        _ => {
                            let mut s: String = found
                                .committees
                                .iter()
                                .map(|k| join(k.members()) + "\n")
                                .collect();
                            if found.truncated {
                                s.push_str("# truncated\n");
                            }
                            s
                        }
                    }
                }
                (false, false) => {
                    let candidate = CommitteeCandidate::new(&set, tope)?;
                    let value = candidate.to_json()?;
                    match format {
                        Format::Json => pretty(&value),
                        _ => format!(
                            "members {}\nsum {}\ncommittee {}\nminimal {}\ncritical {}\n",
                            join(candidate.members()),
                            candidate
                                .sum()
                                .entries()
                                .iter()
                                .map(i64::to_string)
                                .collect::<Vec<_>>()
                                .join(" "),
                            candidate.is_committee(),
                            value["minimal"],
                            value["critical"],
                        ),
                    }
                }
                (true, false) => {
                    return Err(anyhow!("--critical enumerates committees; drop --tope"))
                }
                (false, true) => {
                    return Err(anyhow!(
                        "give committee members with --tope, or pass --critical"
                    ))
                }
            };
            Ok((text, output.out))
        }
    }
}

fn join<'a, I: IntoIterator<Item = &'a Tope>>(topes: I) -> String {
    topes
        .into_iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_cycles(found: &CycleEnumeration, format: Format) -> String {
    match format {
        Format::Json => {
            let cycles: Vec<_> = found.cycles.iter().map(|c| c.to_json()).collect();
            pretty(&json!({ "cycles": cycles, "truncated": found.truncated }))
        }
        _ => {
            let mut s = String::new();
            for c in &found.cycles {
                let l: Vec<String> = c.l_sequence().0.iter().map(ToString::to_string).collect();
                s.push_str(&format!("{} | l {}\n", join(c.vertices()), l.join(" ")));
            }
            if found.truncated {
                s.push_str("# truncated\n");
            }
            s
        }
    }
}

fn render_decomposition(d: &Decomposition) -> String {
    let x: Vec<String> = d.x.iter().map(ToString::to_string).collect();
    format!(
        "target {}\nx {}\nq_set {}\n",
        d.target,
        x.join(" "),
        join(&d.q_set)
    )
}
