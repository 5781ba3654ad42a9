//! Command-line front end.
//!
//! Exit status: 0 on success with no anomalies, 1 when a campaign reports
//! anomalies, 2 on usage, input or parameter errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dktree::extremal::{self, PolyId, SplitJoinParams};
use dktree::harness::{self, Mode, VerificationReport};
use dktree::io::report::sig15;
use dktree::io::{parse_edge_list, parse_graph6, write_graph6};
use dktree::ktree::has_spanning_ktree;
use dktree::quotient::{quotient_lambda1, quotient_matrix};
use dktree::spectra::{all_pairs_distances, full_spectrum, lambda1, wiener};
use dktree::Graph;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dktree", version, about = "Distance spectral radius and spanning k-tree toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance spectral radius, Wiener index and full distance spectrum.
    Spectra {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        csv: bool,
    },
    /// Exact spanning k-tree decision with certificate.
    Ktree {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Build an extremal graph and report its closed-form values.
    Extremal {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        csv: bool,
    },
    /// Check the spectral spanning k-tree condition on order n.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CliMode::Exhaustive)]
        mode: CliMode,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: bool,
    },
    /// Sweep the comparison claims and polynomial sign conditions.
    Sweep {
        #[arg(long = "kmax")]
        k_max: usize,
        #[arg(long = "smax")]
        s_max: usize,
        #[arg(long = "nmax")]
        n_max: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Seeded lemma property suites.
    Lemmas {
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// edge-list file: "n m" header, then one "u v" per line
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Subcommand)]
enum Family {
    /// K1 ∨ (K_{n-k-1} ∪ kK1)
    Gstar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// K_{(n-3)/3} ∨ ((2n+3)/3)K1
    Gsharp {
        #[arg(long)]
        n: usize,
    },
    /// K_s ∨ (K_{n-(k-1)s-2} ∪ ((k-2)s+2)K1)
    Gtilde {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
    /// K_s ∨ (K_{n-s-t+1} ∪ (t-1)K1)
    Gprime {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Exhaustive,
    Sample,
}

enum Failure {
    Usage(String),
    Anomalies(String),
}

impl From<dktree::Error> for Failure {
    fn from(e: dktree::Error) -> Failure {
        Failure::Usage(format!("error: {e}"))
    }
}

type Outcome = Result<String, Failure>;

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.g6, &input.edges) {
        (Some(text), None) => Ok(parse_graph6(text)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("error: cannot read {path}: {e}")))?;
            Ok(parse_edge_list(&text)?)
        }
        _ => Err(Failure::Usage("error: give exactly one of --g6 or --edges".into())),
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// Two-line CSV from a flat JSON object.
fn flat_csv(pairs: &[(&str, String)]) -> String {
    let quote = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let head: Vec<String> = pairs.iter().map(|(k, _)| quote(k)).collect();
    let row: Vec<String> = pairs.iter().map(|(_, v)| quote(v)).collect();
    format!("{}\n{}\n", head.join(","), row.join(","))
}

fn spectra(input: &GraphInput, csv: bool) -> Outcome {
    let g = read_graph(input)?;
    let d = all_pairs_distances(&g)?;
    let w = wiener(&d);
    let (radius, spectrum) = if g.order() >= 2 {
        let spectrum: Vec<f64> = full_spectrum(&d)?.into_iter().map(sig15).collect();
        (sig15(lambda1(&d)?.lambda1), spectrum)
    } else {
        (0.0, vec![0.0])
    };
    if csv {
        let joined: Vec<String> = spectrum.iter().map(f64::to_string).collect();
        return Ok(flat_csv(&[
            ("n", g.order().to_string()),
            ("graph6", write_graph6(&g)?),
            ("lambda1", radius.to_string()),
            ("wiener", w.to_string()),
            ("spectrum", joined.join(" ")),
        ]));
    }
    Ok(to_json(&json!({
        "n": g.order(),
        "graph6": write_graph6(&g)?,
        "lambda1": radius,
        "wiener": w,
        "spectrum": spectrum,
    })))
}

fn ktree(input: &GraphInput, k: usize, csv: bool) -> Outcome {
    let g = read_graph(input)?;
    let v = has_spanning_ktree(&g, k)?;
    let violation = v.win_violation.map(|s| s.to_vec());
    if csv {
        let edges = v.tree_edges.as_ref().map_or(String::new(), |es| {
            es.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
        });
        let viol = violation.as_ref().map_or(String::new(), |s| {
            s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        });
        let outcome = serde_json::to_value(v.outcome).expect("serializes");
        return Ok(flat_csv(&[
            ("n", g.order().to_string()),
            ("k", k.to_string()),
            ("outcome", outcome.as_str().unwrap_or_default().to_string()),
            ("tree_edges", edges),
            ("win_violation", viol),
            ("nodes", v.nodes.to_string()),
        ]));
    }
    Ok(to_json(&json!({
        "n": g.order(),
        "k": k,
        "outcome": v.outcome,
        "tree_edges": v.tree_edges,
        "win_violation": violation,
        "nodes": v.nodes,
    })))
}

fn extremal_cmd(family: &Family, csv: bool) -> Outcome {
    let (name, params, closed): (&str, SplitJoinParams, Vec<(&str, Value)>) = match *family {
        Family::Gstar { n, k } => {
            let p = extremal::gstar_params(n, k)?;
            let id = PolyId::G { n: n as i64, k: k as i64 };
            let theta = extremal::largest_root(id, 4.0 * (n * n) as f64)?;
            ("gstar", p, vec![("wiener_closed", json!(extremal::gstar_wiener_closed(n, k)?)), ("theta", json!(sig15(theta)))])
        }
        Family::Gsharp { n } => {
            let p = extremal::gsharp_params(n)?;
            ("gsharp", p, vec![("rho_closed", json!(sig15(extremal::rho_sharp_closed(n)?)))])
        }
        Family::Gtilde { n, k, s } => {
            let p = extremal::gtilde_params(n, k, s)?;
            let id = PolyId::F { n: n as i64, k: k as i64, s: s as i64 };
            ("gtilde", p, vec![("f_root", json!(sig15(extremal::largest_root(id, 4.0 * (n * n) as f64)?)))])
        }
        Family::Gprime { n, s, t } => ("gprime", extremal::gprime_params(n, s, t)?, vec![]),
    };
    let g = extremal::build_split_join(params)?;
    let d = all_pairs_distances(&g)?;
    let w = wiener(&d);
    let radius = sig15(lambda1(&d)?.lambda1);
    let quotient = sig15(quotient_lambda1(&quotient_matrix(&d, &params.block_partition())?));
    let g6 = write_graph6(&g)?;
    if csv {
        let mut pairs = vec![
            ("family", name.to_string()),
            ("n", g.order().to_string()),
            ("s", params.s.to_string()),
            ("a", params.a.to_string()),
            ("b", params.b.to_string()),
            ("graph6", g6),
            ("wiener", w.to_string()),
            ("lambda1", radius.to_string()),
            ("quotient_lambda1", quotient.to_string()),
        ];
        pairs.extend(closed.iter().map(|(k, v)| (*k, v.to_string())));
        return Ok(flat_csv(&pairs));
    }
    let mut out = json!({
        "family": name,
        "n": g.order(),
        "params": params,
        "graph6": g6,
        "wiener": w,
        "lambda1": radius,
        "quotient_lambda1": quotient,
    });
    for (k, v) in closed {
        out[k] = v;
    }
    Ok(to_json(&out))
}

fn emit(report: VerificationReport, csv: bool) -> Outcome {
    let text = if csv { report.to_csv()? } else { report.to_json()? };
    if report.has_anomalies() {
        Err(Failure::Anomalies(text))
    } else {
        Ok(text)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spectra { input, csv } => spectra(&input, csv),
        Command::Ktree { input, k, csv } => ktree(&input, k, csv),
        Command::Extremal { family, csv } => extremal_cmd(&family, csv),
        Command::Verify { k, n, mode, budget, seed, csv } => {
            let mode = match mode {
                CliMode::Exhaustive => Mode::Exhaustive,
                CliMode::Sample => Mode::Sample,
            };
            emit(harness::verify_theorem_1_1(k, n, mode, budget, seed)?, csv)
        }
        Command::Sweep { k_max, s_max, n_max, csv } => emit(harness::sweep_claims(k_max, s_max, n_max)?, csv),
        Command::Lemmas { trials, seed, csv } => emit(harness::lemma_property_suite(trials, seed)?, csv),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            println!("{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(Failure::Anomalies(text)) => {
            println!("{}", text.trim_end());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
