//! Argument parsing and command execution.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crsg_core::instances::{enumerate_semigroups, EXHAUSTIVE_BOUND};
use crsg_core::network::{min_network, Root};
use crsg_core::special::{classify, named_congruences};
use crsg_core::theorems::{Battery, ResultId};
use crsg_core::{all_congruences, CrSemigroup, Error, Semigroup, DEFAULT_LATTICE_BOUND};

use crate::cayley::{self, ParseError};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ASSOCIATIVE: i32 = 3;
pub const EXIT_NOT_COMPLETELY_REGULAR: i32 = 4;
pub const EXIT_BOUND: i32 = 5;
pub const EXIT_VERIFY_FAILED: i32 = 6;

/// JSON output carries this in its top-level `"schema"` field.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug, Clone)]
#[command(name = "crsg", version, about = "Congruences on finite completely regular semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Largest order for which the full congruence lattice is computed.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_BOUND,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub bound: usize,

    /// Worker threads for processing inputs (default: all cores).
    #[arg(long, global = true, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub jobs: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check that each table is an associative semigroup.
    Validate(Inputs),
    /// Structural properties of each semigroup.
    Classify(Inputs),
    /// The named congruences of each completely regular semigroup.
    Congruences {
        #[command(flatten)]
        inputs: Inputs,
        /// Also list the full congruence lattice.
        #[arg(long)]
        all: bool,
    },
    /// The min-network from `ω` and/or `𝒟`.
    Network {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = RootArg::Both)]
        root: RootArg,
    },
    /// The congruence lattice as a Hasse diagram.
    Lattice(Inputs),
    /// Run the theorem battery.
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        /// Only these results (e.g. LEMMA_THETA); all by default.
        #[arg(long = "result", value_parser = parse_result_id)]
        results: Vec<ResultId>,
    },
    /// Enumerate all semigroups up to the given order, classify and verify them.
    Census {
        #[arg(long, default_value_t = EXHAUSTIVE_BOUND)]
        order: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Inputs {
    /// Cayley table files or directories of `*.cayley` files; `-` reads stdin.
    #[arg(long = "input", short = 'i', required = true, num_args = 1..)]
    pub input: Vec<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootArg {
    Omega,
    D,
    Both,
}

impl RootArg {
    fn roots(self) -> Vec<Root> {
        match self {
            RootArg::Omega => vec![Root::Universal],
            RootArg::D => vec![Root::D],
            RootArg::Both => vec![Root::Universal, Root::D],
        }
    }
}

fn parse_result_id(s: &str) -> Result<ResultId, String> {
    ResultId::parse(s).ok_or_else(|| format!("unknown result id {s:?}"))
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Classify(_) => "classify",
            Command::Congruences { .. } => "congruences",
            Command::Network { .. } => "network",
            Command::Lattice(_) => "lattice",
            Command::Verify { .. } => "verify",
            Command::Census { .. } => "census",
        }
    }

    fn inputs(&self) -> Option<&Inputs> {
        match self {
            Command::Validate(i) | Command::Classify(i) | Command::Lattice(i) => Some(i),
            Command::Congruences { inputs, .. } | Command::Network { inputs, .. } | Command::Verify { inputs, .. } => {
                Some(inputs)
            }
            Command::Census { .. } => None,
        }
    }
}

/// Why one input could not be processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Io(String),
    Parse(ParseError),
    Core(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) | Failure::Parse(_) => EXIT_PARSE,
            Failure::Core(e) => match e {
                Error::NotAssociative { .. } => EXIT_NOT_ASSOCIATIVE,
                Error::NotCompletelyRegular { .. } | Error::NotCongruence { .. } => EXIT_NOT_COMPLETELY_REGULAR,
                Error::OrderBoundExceeded { .. } => EXIT_BOUND,
                _ => EXIT_PARSE,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) => f.write_str(m),
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// A table read from an input, or the reason it could not be read.
pub struct Input {
    pub source: String,
    pub semigroup: Result<Semigroup, Failure>,
}

fn expand(path: &Path) -> Result<Vec<PathBuf>, Failure> {
    if path.is_dir() {
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "cayley"))
            .collect();
        files.sort();
        Ok(files)
    } else {
        Ok(vec![path.to_path_buf()])
    }
}

/// Reads every table from `paths`. Sources are `path`, or `path#k` for the
/// `k`-th table (1-based) of a file holding several.
pub fn load_inputs(paths: &[PathBuf], stdin: Option<&str>) -> Vec<Input> {
    let mut out = Vec::new();
    for path in paths {
        let files = match expand(path) {
            Ok(f) => f,
            Err(e) => {
                out.push(Input { source: path.display().to_string(), semigroup: Err(e) });
                continue;
            }
        };
        for file in files {
            let source = file.display().to_string();
            let text = if source == "-" {
                Ok(stdin.unwrap_or("").to_string())
            } else {
                fs::read_to_string(&file).map_err(|e| Failure::Io(format!("{source}: {e}")))
            };
            out.extend(tables_of(&source, text));
        }
    }
    out
}

fn tables_of(source: &str, text: Result<String, Failure>) -> Vec<Input> {
    let text = match text {
        Ok(t) => t,
        Err(e) => return vec![Input { source: source.to_string(), semigroup: Err(e) }],
    };
    match cayley::parse(&text) {
        Err(e) => vec![Input { source: source.to_string(), semigroup: Err(Failure::Parse(e)) }],
        Ok(tables) if tables.is_empty() => vec![Input {
            source: source.to_string(),
            semigroup: Err(Failure::Parse(ParseError { line: 1, message: String::from("no table found") })),
        }],
        Ok(tables) => {
            let many = tables.len() > 1;
            tables
                .iter()
                .enumerate()
                .map(|(k, t)| Input {
                    source: if many { format!("{source}#{}", k + 1) } else { source.to_string() },
                    semigroup: t.to_semigroup().map_err(Failure::Core),
                })
                .collect()
        }
    }
}

/// What one input contributes to the output.
struct Piece {
    json: Value,
    text: String,
    /// A verdict failed (exit code 6).
    failed: bool,
}

/// Result of a run: the text for stdout (or `--out`), diagnostics for
/// stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli, stdin: Option<&str>) -> RunOutput {
    let graph_command = matches!(cli.command, Command::Network { .. } | Command::Lattice(_));
    if cli.format == Format::Dot && !graph_command {
        return RunOutput {
            stdout: String::new(),
            stderr: String::from("error: dot output is available for `network` and `lattice` only\n"),
            code: EXIT_PARSE,
        };
    }
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = cli.jobs {
            b = b.num_threads(j);
        }
        b.build().expect("thread pool")
    };
    pool.install(|| match &cli.command {
        Command::Census { order } => census(cli, *order),
        cmd => {
            let inputs = load_inputs(&cmd.inputs().expect("command reads inputs").input, stdin);
            let results: Vec<Result<Piece, Failure>> = inputs
                .par_iter()
                .map(|input| match &input.semigroup {
                    Ok(s) => process(cli, &input.source, s),
                    Err(e) => Err(e.clone()),
                })
                .collect();
            assemble(cli, &inputs, results)
        }
    })
}

fn assemble(cli: &Cli, inputs: &[Input], results: Vec<Result<Piece, Failure>>) -> RunOutput {
    let mut code = EXIT_OK;
    let mut stderr = String::new();
    let mut texts = Vec::new();
    let mut items = Vec::new();
    let mut errors = Vec::new();
    let mut failed = false;
    for (input, r) in inputs.iter().zip(results) {
        match r {
            Ok(p) => {
                failed |= p.failed;
                texts.push(p.text);
                items.push(p.json);
            }
            Err(e) => {
                if code == EXIT_OK {
                    code = e.exit_code();
                }
                stderr.push_str(&format!("{}: error: {e}\n", input.source));
                errors.push(json!({"source": input.source, "code": e.exit_code(), "message": e.to_string()}));
                if matches!(cli.command, Command::Validate(_)) {
                    texts.push(format!("{}: invalid: {e}\n", input.source));
                    items.push(json!({"source": input.source, "valid": false, "error": e.to_string()}));
                }
            }
        }
    }
    if code == EXIT_OK && failed {
        code = EXIT_VERIFY_FAILED;
    }
    let stdout = match cli.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "command": cli.command.name(),
                "results": items,
                "errors": errors,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Table | Format::Dot => texts.join("\n"),
    };
    RunOutput { stdout, stderr, code }
}

fn cr(s: &Semigroup) -> Result<CrSemigroup, Failure> {
    CrSemigroup::new(s.clone()).map_err(Failure::Core)
}

fn header(source: &str, s: &Semigroup) -> String {
    format!("== {source} (order {}) ==\n", s.order())
}

fn process(cli: &Cli, source: &str, s: &Semigroup) -> Result<Piece, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate(_) => {
            let regular = s.is_completely_regular();
            Ok(Piece {
                json: json!({"source": source, "valid": true, "order": s.order(), "completely_regular": regular}),
                text: format!(
                    "{source}: ok (order {}, {})\n",
                    s.order(),
                    if regular { "completely regular" } else { "not completely regular" }
                ),
                failed: false,
            })
        }
        Command::Classify(_) => {
            let r = classify(s);
            let rows: Vec<Vec<String>> =
                render::classification_rows(&r).into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
            Ok(Piece {
                json: json!({"source": source, "order": s.order(), "classification": render::classification_json(&r)}),
                text: header(source, s) + &render::table(&["property", "value"], &rows),
                failed: false,
            })
        }
        Command::Congruences { all, .. } => {
            let c = cr(s)?;
            let named = named_congruences(&c)?;
            let mut json = json!({"source": source, "order": s.order(), "named": render::named_json(&named)});
            let rows: Vec<Vec<String>> = named
                .iter()
                .map(|(n, c)| {
                    vec![n.to_string(), c.num_classes().to_string(), render::partition_text(c.partition(), s)]
                })
                .collect();
            let mut text = header(source, s) + &render::table(&["name", "classes", "partition"], &rows);
            if *all {
                let lattice = all_congruences(s, cli.bound)?;
                let names = render::lattice_names(&lattice, Some(&named));
                json["lattice"] = render::lattice_json(source, s, &lattice, &names)["congruences"].clone();
                text.push('\n');
                text.push_str(&lattice_table(s, &lattice, &names));
            }
            Ok(Piece { json, text, failed: false })
        }
        Command::Network { root, .. } => {
            let c = cr(s)?;
            let net = min_network(&c, &root.roots())?;
            let text = match fmt {
                Format::Dot => render::network_dot(source, s, &net),
                _ => {
                    let view = render::network_view(&net);
                    let rows: Vec<Vec<String>> = view
                        .nodes
                        .iter()
                        .enumerate()
                        .map(|(i, n)| {
                            vec![
                                i.to_string(),
                                n.names.join("="),
                                n.words.join(" "),
                                render::partition_text(&n.partition, s),
                            ]
                        })
                        .collect();
                    let edges: Vec<String> = view.edges.iter().map(|(u, l)| format!("{l} ⊂ {u}")).collect();
                    header(source, s)
                        + &render::table(&["node", "names", "words", "partition"], &rows)
                        + &format!("covers: {}\n", edges.join(", "))
                }
            };
            Ok(Piece { json: render::network_json(source, s, &net), text, failed: false })
        }
        Command::Lattice(_) => {
            let lattice = all_congruences(s, cli.bound)?;
            let named = CrSemigroup::new(s.clone()).ok().and_then(|c| named_congruences(&c).ok());
            let names = render::lattice_names(&lattice, named.as_ref());
            let text = match fmt {
                Format::Dot => render::lattice_dot(source, s, &lattice, &names),
                _ => header(source, s) + &lattice_table(s, &lattice, &names),
            };
            Ok(Piece { json: render::lattice_json(source, s, &lattice, &names), text, failed: false })
        }
        Command::Verify { results, .. } => {
            let c = cr(s)?;
            let battery = Battery::new(&c, cli.bound)?;
            let ids: Vec<ResultId> = if results.is_empty() { ResultId::ALL.to_vec() } else { results.clone() };
            let verdicts: Vec<_> = ids.iter().map(|&id| battery.verify(id)).collect();
            let failed = verdicts.iter().any(|v| !v.passed());
            let rows: Vec<Vec<String>> = verdicts
                .iter()
                .map(|v| {
                    vec![
                        v.result_id.name().to_string(),
                        v.outcome.name().to_string(),
                        v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                    ]
                })
                .collect();
            Ok(Piece {
                json: json!({
                    "source": source,
                    "order": s.order(),
                    "passed": !failed,
                    "verdicts": verdicts.iter().map(render::verdict_json).collect::<Vec<_>>(),
                }),
                text: header(source, s) + &render::table(&["result", "outcome", "witness"], &rows),
                failed,
            })
        }
        Command::Census { .. } => unreachable!("census reads no inputs"),
    }
}

fn lattice_table(s: &Semigroup, lattice: &crsg_core::CongruenceLattice, names: &[Vec<&str>]) -> String {
    let rows: Vec<Vec<String>> = lattice
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                c.num_classes().to_string(),
                names[i].join("="),
                render::partition_text(c.partition(), s),
            ]
        })
        .collect();
    let covers: Vec<String> = lattice.hasse_edges().iter().map(|(l, u)| format!("{l} ⊂ {u}")).collect();
    render::table(&["index", "classes", "names", "partition"], &rows) + &format!("covers: {}\n", covers.join(", "))
}

#[derive(Default, Clone, Copy)]
struct CensusRow {
    order: usize,
    semigroups: usize,
    completely_regular: usize,
    bands: usize,
    semilattices: usize,
    groups: usize,
    cryptic: usize,
    orthodox: usize,
    clifford: usize,
    verified: usize,
    failures: usize,
}

fn census(cli: &Cli, max_order: usize) -> RunOutput {
    if max_order == 0 || max_order > EXHAUSTIVE_BOUND {
        let e = Failure::Core(Error::OrderBoundExceeded { order: max_order, bound: EXHAUSTIVE_BOUND });
        return RunOutput { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() };
    }
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_order {
        let entries = match enumerate_semigroups(n, None) {
            Ok(e) => e,
            Err(e) => {
                let f = Failure::Core(e);
                return RunOutput { stdout: String::new(), stderr: format!("error: {f}\n"), code: f.exit_code() };
            }
        };
        // per semigroup: Some(true) verified, Some(false) a verdict failed, None not CR
        let checked: Vec<Result<Option<Vec<String>>, Failure>> = entries
            .par_iter()
            .map(|e| {
                let Ok(c) = CrSemigroup::new(e.semigroup.clone()) else { return Ok(None) };
                let b = Battery::new(&c, cli.bound)?;
                Ok(Some(b.verify_all().into_iter().filter(|v| !v.passed()).map(|v| v.result_id.name().to_string()).collect()))
            })
            .collect();
        let mut row = CensusRow { order: n, semigroups: entries.len(), ..CensusRow::default() };
        for (e, r) in entries.iter().zip(checked) {
            let f = &e.flags;
            row.completely_regular += f.completely_regular as usize;
            row.bands += f.band as usize;
            row.semilattices += f.semilattice as usize;
            row.groups += f.group as usize;
            row.cryptic += (f.completely_regular && f.cryptic) as usize;
            row.orthodox += f.orthogroup as usize;
            row.clifford += f.clifford as usize;
            match r {
                Ok(Some(failed)) if failed.is_empty() => row.verified += 1,
                Ok(Some(failed)) => {
                    row.failures += 1;
                    failures.push(json!({"table": e.semigroup.rows(), "failed": failed}));
                }
                Ok(None) => {}
                Err(f) => {
                    return RunOutput { stdout: String::new(), stderr: format!("error: {f}\n"), code: f.exit_code() }
                }
            }
        }
        rows.push(row);
    }
    let code = if failures.is_empty() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let stdout = match cli.format {
        Format::Json => {
            let orders: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "order": r.order,
                        "semigroups": r.semigroups,
                        "completely_regular": r.completely_regular,
                        "bands": r.bands,
                        "semilattices": r.semilattices,
                        "groups": r.groups,
                        "cryptogroups": r.cryptic,
                        "orthogroups": r.orthodox,
                        "clifford": r.clifford,
                        "verified": r.verified,
                        "failures": r.failures,
                    })
                })
                .collect();
            let doc = json!({"schema": SCHEMA_VERSION, "command": "census", "orders": orders, "failures": failures});
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        _ => {
            let table_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    [
                        r.order,
                        r.semigroups,
                        r.completely_regular,
                        r.bands,
                        r.semilattices,
                        r.groups,
                        r.cryptic,
                        r.orthodox,
                        r.clifford,
                        r.verified,
                        r.failures,
                    ]
                    .iter()
                    .map(|x| x.to_string())
                    .collect()
                })
                .collect();
            render::table(
                &[
                    "order",
                    "semigroups",
                    "completely_regular",
                    "bands",
                    "semilattices",
                    "groups",
                    "cryptogroups",
                    "orthogroups",
                    "clifford",
                    "verified",
                    "failures",
                ],
                &table_rows,
            )
        }
    };
    let stderr = failures.iter().map(|f| format!("verification failed: {f}\n")).collect();
    RunOutput { stdout, stderr, code }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn input(source: &str) -> Input {
        Input { source: source.to_string(), semigroup: Ok(Semigroup::from_table(&[vec![0]], None).unwrap()) }
    }

    #[test]
    fn failed_verdict_sets_exit_code() {
        let cli = Cli::try_parse_from(["crsg", "verify", "-i", "x"]).unwrap();
        let piece = |failed| Ok(Piece { json: json!({}), text: String::new(), failed });
        let out = assemble(&cli, &[input("a"), input("b")], vec![piece(false), piece(true)]);
        assert_eq!(out.code, EXIT_VERIFY_FAILED);
        // input errors take precedence
        let err = Err(Failure::Core(Error::OrderBoundExceeded { order: 9, bound: 8 }));
        let out = assemble(&cli, &[input("a"), input("b")], vec![piece(true), err]);
        assert_eq!(out.code, EXIT_BOUND);
        assert!(out.stderr.starts_with("b: error:"));
    }
}
