//! Command-line front end.
//!
//! Exit codes: 0 on success or a unique reconstruction, 2 when the
//! reconstruction is ambiguous, 3 when it is infeasible, 1 on usage, input or
//! verification errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::convexity::{digital_convexity, is_digitally_convex, ConvexityCheck};
use crate::error::{Error, Result};
use crate::families::{neighborhood_multiset, support_of};
use crate::formats::json::json_error;
use crate::formats::{decode_graph6, encode_graph6, to_dot, FamilyJson, GraphJson};
use crate::graph::Graph;
use crate::miner::{find_collisions, GroupRecord, InvariantKind, MineOptions};
use crate::reconstruct::{
    from_digital_convexity, from_multiset, from_support, ReconstructionResult, SearchOptions, Verdict,
};
use crate::verify::{run_suite, SuiteOptions};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_AMBIGUOUS: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nbrecon", version, about = "Reconstruct graphs from neighborhood families and digital convexities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the neighborhood multiset or support of a graph.
    #[command(group(ArgGroup::new("side").args(["closed", "open"])))]
    #[command(group(ArgGroup::new("shape").args(["multiset", "support"])))]
    Nbhd {
        /// graph6 or JSON graph file, `-` for stdin
        input: String,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        open: bool,
        #[arg(long)]
        multiset: bool,
        #[arg(long)]
        support: bool,
    },
    /// Enumerate the digitally convex sets, or test one set.
    Convex {
        input: String,
        /// Comma-separated vertex ids to test
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Print the family as one JSON object instead of one set per line
        #[arg(long)]
        json: bool,
    },
    /// Reconstruct graphs from a family (or from a graph's own invariant).
    Reconstruct {
        #[arg(long, value_enum)]
        from: Source,
        input: String,
        /// Report every realization up to --limit
        #[arg(long, conflicts_with = "count")]
        all: bool,
        /// Count realizations up to --limit
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Mine collision groups among all labeled graphs of one order.
    Mine {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "closed-multiset")]
        kind: InvariantKind,
        /// Allow orders 7 and 8
        #[arg(long)]
        deep: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the property suite at one order.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases for sampled checks
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        deep: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Convert a graph between graph6, JSON and DOT.
    Convert {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        to: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Multiset,
    Support,
    Dc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Dot,
}

impl clap::builder::ValueParserFactory for InvariantKind {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<InvariantKind>().map_err(|e| e.to_string()))
    }
}

/// Parsed input: a family (possibly a multiset) or a graph.
enum Input {
    Family(FamilyJson),
    Graph(Graph),
}

struct Io<'a> {
    stdin: &'a mut dyn FnMut() -> io::Result<String>,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let text = if path == "-" {
            (self.stdin)()
        } else {
            std::fs::read_to_string(path)
        };
        text.map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Error::Input(format!("write failed: {e}")))
    }
}

fn parse_input(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| json_error(text, &e))?;
        if value.get("universe").is_some() {
            Ok(Input::Family(FamilyJson::parse(text)?))
        } else {
            Ok(Input::Graph(GraphJson::parse(text)?.to_graph()?))
        }
    } else {
        let offset = text.len() - trimmed.len();
        decode_graph6(trimmed)
            .map(Input::Graph)
            .map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: position + offset,
                    message,
                },
                e => e,
            })
    }
}

fn parse_graph(text: &str) -> Result<Graph> {
    match parse_input(text)? {
        Input::Graph(g) => Ok(g),
        Input::Family(_) => Err(Error::Input("expected a graph, found a set family".into())),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn FnMut() -> io::Result<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32> {
    match command {
        Command::Nbhd {
            input,
            open,
            multiset,
            ..
        } => {
            let g = parse_graph(&io.read(&input)?)?;
            let m = neighborhood_multiset(&g, !open);
            let json = if multiset {
                FamilyJson::from_multiset(&m)
            } else {
                FamilyJson::from_family(&support_of(&m))
            };
            io.line(json.with_labels(g.labels()).to_json())?;
            Ok(EXIT_OK)
        }
        Command::Convex { input, set, json } => {
            let g = parse_graph(&io.read(&input)?)?;
            match set {
                Some(vs) => {
                    let s = VertexSet::from_vertices(g.n(), vs)?;
                    let record = match is_digitally_convex(&g, s)? {
                        ConvexityCheck::Convex { witnesses } => {
                            json!({"set": s.to_vec(), "convex": true, "witnesses": witnesses})
                        }
                        ConvexityCheck::Violated { vertex } => {
                            json!({"set": s.to_vec(), "convex": false, "violator": vertex})
                        }
                    };
                    io.line(record.to_string())?;
                }
                None => {
                    let d = digital_convexity(&g)?;
                    if json {
                        io.line(FamilyJson::from_family(&d).with_labels(g.labels()).to_json())?;
                    } else {
                        for s in d.iter() {
                            io.line(serde_json::to_string(&s.to_vec()).expect("list serializes"))?;
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reconstruct {
            from,
            input,
            all,
            count,
            limit,
            dot,
        } => {
            let opts = if all {
                SearchOptions::all(limit)
            } else if count {
                SearchOptions::count(limit)
            } else {
                SearchOptions {
                    limit: limit.max(1),
                    ..SearchOptions::first()
                }
            };
            let input = parse_input(&io.read(&input)?)?;
            let (result, labels) = reconstruct(from, input, opts)?;
            emit_result(io, &result, labels.as_deref(), dot)?;
            Ok(match result.verdict {
                Verdict::Unique(_) => EXIT_OK,
                Verdict::Ambiguous { .. } => EXIT_AMBIGUOUS,
                Verdict::Infeasible => EXIT_INFEASIBLE,
            })
        }
        Command::Mine { n, kind, deep, jobs } => {
            if n >= 7 && !deep {
                return Err(Error::Input(format!("order {n} needs --deep")));
            }
            let groups = find_collisions(n, kind, MineOptions { allow_large: deep, jobs })?;
            for group in &groups {
                io.line(serde_json::to_string(&GroupRecord::new(group)).expect("record serializes"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            seed,
            samples,
            deep,
            jobs,
        } => {
            if n >= 7 && !deep {
                return Err(Error::Input(format!("order {n} needs --deep")));
            }
            let outcomes = run_suite(&SuiteOptions {
                n,
                seed,
                samples,
                mine: MineOptions { allow_large: deep, jobs },
            })?;
            let mut ok = true;
            for o in &outcomes {
                ok &= o.failures == 0;
                io.line(serde_json::to_string(o).expect("outcome serializes"))?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_ERROR })
        }
        Command::Convert { input, to } => {
            let g = parse_graph(&io.read(&input)?)?;
            let text = match to {
                Format::Graph6 => encode_graph6(&g),
                Format::Json => GraphJson::from_graph(&g).to_json(),
                Format::Dot => to_dot(&g, "G").trim_end().to_string(),
            };
            io.line(text)?;
            Ok(EXIT_OK)
        }
    }
}

fn reconstruct(
    from: Source,
    input: Input,
    opts: SearchOptions,
) -> Result<(ReconstructionResult, Option<Vec<String>>)> {
    let (family, labels): (FamilyJson, Option<Vec<String>>) = match input {
        Input::Family(f) => {
            let labels = f.labels.clone();
            (f, labels)
        }
        Input::Graph(g) => {
            let labels = g.labels().map(<[String]>::to_vec);
            let m = neighborhood_multiset(&g, true);
            let f = match from {
                Source::Multiset => FamilyJson::from_multiset(&m),
                Source::Support => FamilyJson::from_family(&support_of(&m)),
                Source::Dc => FamilyJson::from_family(&digital_convexity(&g)?),
            };
            (f, labels)
        }
    };
    let result = match from {
        Source::Multiset => from_multiset(&family.to_multiset()?, opts),
        Source::Support => from_support(&family.to_family()?, opts),
        Source::Dc => from_digital_convexity(&family.to_family()?, opts),
    };
    Ok((result, labels))
}

#[derive(Serialize)]
struct GraphRecord {
    graph6: String,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

fn emit_result(io: &mut Io<'_>, result: &ReconstructionResult, labels: Option<&[String]>, dot: bool) -> Result<()> {
    let graphs: Vec<Graph> = result
        .graphs()
        .iter()
        .map(|g| match labels {
            Some(l) => g.clone().with_labels(l.iter().cloned()),
            None => Ok(g.clone()),
        })
        .collect::<Result<_>>()?;
    if dot {
        for (i, g) in graphs.iter().enumerate() {
            io.line(to_dot(g, &format!("G{i}")).trim_end())?;
        }
        return Ok(());
    }
    let (verdict, truncated) = match &result.verdict {
        Verdict::Unique(_) => ("unique", false),
        Verdict::Ambiguous { truncated, .. } => ("ambiguous", *truncated),
        Verdict::Infeasible => ("infeasible", false),
    };
    let records: Vec<GraphRecord> = graphs
        .iter()
        .map(|g| GraphRecord {
            graph6: encode_graph6(g),
            edges: g.edges().collect(),
            labels: labels.map(<[String]>::to_vec),
        })
        .collect();
    let record = json!({
        "verdict": verdict,
        "truncated": truncated,
        "graphs": records,
        "stats": {
            "nodes": result.stats.nodes,
            "solutions": result.stats.solutions,
            "elapsed_ms": result.stats.elapsed.as_secs_f64() * 1e3,
        },
        "note": result.note,
    });
    io.line(record.to_string())
}
