//! `dpc`: command-line surface for the dpcolor toolkit.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 resource-capped
//! (bracketed) result, 3 verification failure.

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use dpcolor::{
    bound_comparison, chordal_peo, chromatic_coloring, coloring_number, degeneracy_ordering,
    dp_chromatic, falsify, parse_cover, parse_edge_list, parse_graph6, verify, zdp_exact_small,
    zdp_upper_bound, DpStatus, Graph, SearchCaps, ZdpOutcome,
};

#[derive(Parser)]
#[command(
    name = "dpc",
    version,
    about = "Exact DP-coloring computations: covers, chi_DP, and Z_DP bounds"
)]
struct Cli {
    /// Emit one JSON object per computation instead of plain lines.
    #[arg(long, global = true)]
    json_lines: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact chromatic number with a witness coloring.
    Chi(GraphInput),
    /// Coloring number (degeneracy + 1) with a witness ordering.
    Col(GraphInput),
    /// Chordality test; prints a perfect elimination ordering when chordal.
    Chordal(GraphInput),
    /// DP-chromatic number by exhaustive cover enumeration.
    ChiDp {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        caps: CapsArgs,
        /// Write the bad cover for the last failing fold to this path.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Z_DP of a graph: exact probe, closed-form bound, or comparison.
    #[command(group = ArgGroup::new("mode").required(true).args(["exact", "bound", "compare"]))]
    Zdp {
        #[command(flatten)]
        input: GraphInput,
        /// Probe s = 0, 1, ... exactly (may hit resource caps).
        #[arg(long)]
        exact: bool,
        /// Evaluate the piecewise upper bound.
        #[arg(long)]
        bound: bool,
        /// Compare the ceiling formula against ceil(2.4m) and 3m.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Validate a cover file against a graph and decide colorability.
    CheckCover {
        /// Graph file; `-` for stdin.
        graph: String,
        /// Cover file.
        cover: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
    },
    /// Randomized search for an uncolorable cover at a fixed fold.
    Falsify {
        #[command(flatten)]
        input: GraphInput,
        /// List size of the sampled covers.
        #[arg(long)]
        fold: u32,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the first uncolorable cover found to this path.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Print item identifiers without running anything.
        #[arg(long)]
        list: bool,
        /// Run a single item by identifier.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; stdin when omitted or `-`.
    file: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Graph6,
    Edges,
}

#[derive(Args)]
struct CapsArgs {
    /// Largest admissible cycle rank.
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    /// Largest cover count enumerated per fold.
    #[arg(long, default_value_t = 10_000_000)]
    max_covers: u64,
    /// Wall-clock budget per sweep, in milliseconds.
    #[arg(long)]
    time_budget_ms: Option<u64>,
    /// Worker threads; results are identical for any count.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl CapsArgs {
    fn to_caps(&self) -> SearchCaps {
        SearchCaps {
            max_cycle_rank: self.max_rank,
            max_covers: self.max_covers,
            time_budget: self.time_budget_ms.map(std::time::Duration::from_millis),
            workers: self.workers,
        }
    }

    fn params(&self) -> Vec<(String, String)> {
        let mut p = vec![
            ("max_rank".into(), self.max_rank.to_string()),
            ("max_covers".into(), self.max_covers.to_string()),
            ("workers".into(), self.workers.to_string()),
        ];
        if let Some(ms) = self.time_budget_ms {
            p.push(("time_budget_ms".into(), ms.to_string()));
        }
        p
    }
}

/// One machine-readable record per computation.
struct RunRecord {
    command: &'static str,
    digest: String,
    params: Vec<(String, String)>,
    result: Vec<String>,
}

struct CmdOut {
    record: RunRecord,
    exit: i32,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own help/version output still prints normally
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(1);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    let started = Instant::now();
    let json = cli.json_lines;
    match run(cli.cmd) {
        Ok(out) => {
            emit(&out.record, json, started);
            std::process::exit(out.exit);
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn emit(record: &RunRecord, json: bool, started: Instant) {
    if json {
        let mut params = serde_json::Map::new();
        for (k, v) in &record.params {
            params.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        let obj = serde_json::json!({
            "command": record.command,
            "digest": record.digest,
            "params": params,
            "result": record.result,
            "elapsed_ms": started.elapsed().as_millis() as u64,
        });
        println!("{obj}");
    } else {
        for line in &record.result {
            println!("{line}");
        }
    }
}

fn run(cmd: Cmd) -> Result<CmdOut, String> {
    match cmd {
        Cmd::Chi(input) => {
            let (g, digest) = read_graph(&input)?;
            let (k, coloring) = chromatic_coloring(&g);
            let mut result = vec![format!("chi={k}")];
            if !coloring.is_empty() {
                result.push(format!("coloring {}", join_nums(coloring.iter().map(|c| c + 1))));
            }
            Ok(CmdOut {
                record: RunRecord { command: "chi", digest, params: vec![], result },
                exit: 0,
            })
        }
        Cmd::Col(input) => {
            let (g, digest) = read_graph(&input)?;
            let col = coloring_number(&g);
            let (_, ordering) = degeneracy_ordering(&g);
            let mut result = vec![format!("col={col}")];
            if !ordering.is_empty() {
                result.push(format!("ordering {}", join_nums(ordering.iter().copied())));
            }
            Ok(CmdOut {
                record: RunRecord { command: "col", digest, params: vec![], result },
                exit: 0,
            })
        }
        Cmd::Chordal(input) => {
            let (g, digest) = read_graph(&input)?;
            let result = match chordal_peo(&g) {
                Some(peo) => vec![
                    "chordal=yes".to_string(),
                    format!("peo {}", join_nums(peo.as_slice().iter().copied())),
                ],
                None => vec!["chordal=no".to_string()],
            };
            Ok(CmdOut {
                record: RunRecord { command: "chordal", digest, params: vec![], result },
                exit: 0,
            })
        }
        Cmd::ChiDp { input, caps, certificate } => {
            let (g, digest) = read_graph(&input)?;
            let r = dp_chromatic(&g, &caps.to_caps());
            let mut result = vec![r.to_string()];
            if let Some(path) = certificate {
                match r.last_certificate() {
                    Some(cert) => {
                        std::fs::write(&path, cert.to_text())
                            .map_err(|e| format!("writing {}: {e}", path.display()))?;
                        result.push(format!("certificate {}", path.display()));
                    }
                    None => result.push("certificate none".to_string()),
                }
            }
            let exit = match r.status {
                DpStatus::Exact => 0,
                DpStatus::Bracketed => 2,
            };
            Ok(CmdOut {
                record: RunRecord { command: "chi-dp", digest, params: caps.params(), result },
                exit,
            })
        }
        Cmd::Zdp { input, exact, bound, compare, caps } => {
            let (g, digest) = read_graph(&input)?;
            let mut params = caps.params();
            let (result, exit) = if bound {
                params.push(("mode".into(), "bound".into()));
                (vec![zdp_upper_bound(&g).to_string()], 0)
            } else if compare {
                params.push(("mode".into(), "compare".into()));
                (vec![bound_comparison(&g).to_string()], 0)
            } else {
                debug_assert!(exact);
                params.push(("mode".into(), "exact".into()));
                let out = zdp_exact_small(&g, &caps.to_caps());
                let exit = match out {
                    ZdpOutcome::Exact { .. } => 0,
                    ZdpOutcome::Bracketed { .. } => 2,
                };
                (vec![out.to_string()], exit)
            };
            Ok(CmdOut {
                record: RunRecord { command: "zdp", digest, params, result },
                exit,
            })
        }
        Cmd::CheckCover { graph, cover, format } => {
            let (text, digest) = read_input(Some(&graph))?;
            let g = parse_graph_text(&text, format)?;
            let cover_text = std::fs::read_to_string(&cover)
                .map_err(|e| format!("reading {}: {e}", cover.display()))?;
            let cover_digest = hex_digest(cover_text.as_bytes());
            let c = parse_cover(&cover_text, &g).map_err(|e| e.to_string())?;
            let mut result = Vec::new();
            let violations = c.validate();
            if violations.is_empty() {
                result.push("valid".to_string());
                let (witness, _) = c.search_coloring().expect("validated");
                match witness {
                    Some(w) => result.push(format!("witness {w}")),
                    None => result.push("uncolorable (exhaustive)".to_string()),
                }
            } else {
                for v in &violations {
                    result.push(format!("violation: {v}"));
                }
            }
            Ok(CmdOut {
                record: RunRecord {
                    command: "check-cover",
                    digest,
                    params: vec![("cover_digest".into(), cover_digest)],
                    result,
                },
                exit: 0,
            })
        }
        Cmd::Falsify { input, fold, samples, seed, workers, certificate } => {
            let (g, digest) = read_graph(&input)?;
            if !(1..=dpcolor::MAX_FOLD).contains(&fold) {
                return Err(format!("fold must be in 1..={}", dpcolor::MAX_FOLD));
            }
            let found = falsify(&g, fold, samples, seed, workers);
            let mut result = vec![format!(
                "falsify fold={fold} samples={samples} seed={seed} found={}",
                match &found {
                    Some(cert) => match cert.source {
                        dpcolor::CertSource::Sampled { sample, .. } => format!("sample:{sample}"),
                        dpcolor::CertSource::Enumerated { rank } => format!("rank:{rank}"),
                    },
                    None => "none".to_string(),
                }
            )];
            if let Some(path) = certificate {
                match &found {
                    Some(cert) => {
                        std::fs::write(&path, cert.to_text())
                            .map_err(|e| format!("writing {}: {e}", path.display()))?;
                        result.push(format!("certificate {}", path.display()));
                    }
                    None => result.push("certificate none".to_string()),
                }
            }
            Ok(CmdOut {
                record: RunRecord {
                    command: "falsify",
                    digest,
                    params: vec![
                        ("fold".into(), fold.to_string()),
                        ("samples".into(), samples.to_string()),
                        ("seed".into(), seed.to_string()),
                        ("workers".into(), workers.to_string()),
                    ],
                    result,
                },
                exit: 0,
            })
        }
        Cmd::Verify { list, only } => {
            let items = verify::items();
            let mut result = Vec::new();
            let mut failed = 0u32;
            let mut passed = 0u32;
            if list {
                for item in &items {
                    result.push(format!("{} - {}", item.id, item.summary));
                }
            } else {
                for item in &items {
                    if only.as_deref().is_some_and(|id| id != item.id) {
                        continue;
                    }
                    match (item.run)() {
                        Ok(detail) => {
                            passed += 1;
                            result.push(format!("PASS {}: {detail}", item.id));
                        }
                        Err(msg) => {
                            failed += 1;
                            result.push(format!("FAIL {}: {msg}", item.id));
                        }
                    }
                }
                if only.is_some() && passed + failed == 0 {
                    return Err("unknown item id; try `dpc verify --list`".to_string());
                }
                result.push(format!("verify passed={passed} failed={failed}"));
            }
            Ok(CmdOut {
                record: RunRecord {
                    command: "verify",
                    digest: "-".to_string(),
                    params: only.map(|id| vec![("only".into(), id)]).unwrap_or_default(),
                    result,
                },
                exit: if failed > 0 { 3 } else { 0 },
            })
        }
    }
}

fn join_nums(nums: impl Iterator<Item = usize>) -> String {
    nums.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn hex_digest(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    let mut s = String::with_capacity(2 * d.len() + 7);
    s.push_str("sha256:");
    for b in d {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn read_input(file: Option<&str>) -> Result<(String, String), String> {
    let text = match file {
        Some("-") | None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            buf
        }
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
        }
    };
    let digest = hex_digest(text.as_bytes());
    Ok((text, digest))
}

fn read_graph(input: &GraphInput) -> Result<(Graph, String), String> {
    let (text, digest) = read_input(input.file.as_deref())?;
    Ok((parse_graph_text(&text, input.format)?, digest))
}

fn parse_graph_text(text: &str, format: FormatArg) -> Result<Graph, String> {
    let format = match format {
        FormatArg::Auto => {
            let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            if first.trim_start().starts_with("n ") || first.trim() == "n" {
                FormatArg::Edges
            } else {
                FormatArg::Graph6
            }
        }
        f => f,
    };
    match format {
        FormatArg::Graph6 => parse_graph6(text).map_err(|e| e.to_string()),
        FormatArg::Edges => parse_edge_list(text).map_err(|e| e.to_string()),
        FormatArg::Auto => unreachable!("auto resolved above"),
    }
}
