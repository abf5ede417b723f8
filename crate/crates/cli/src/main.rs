use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use krcrystal::crystal::{CrystalGraph, GenOptions};
use krcrystal::kr_a::TypeA;
use krcrystal::rsk::{ell, kappa_nw, kappa_se, BiMatrix};
use krcrystal::suites::{FamilyName, Instance, Suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "krcrystal", version, about = "Kirillov-Reshetikhin crystals through RSK")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a crystal graph and write it out.
    Gen {
        #[command(flatten)]
        kr: KrArgs,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exits 0 iff every check passes.
    Verify {
        #[command(flatten)]
        kr: KrArgs,
        /// Repeatable. Defaults to every suite that applies to the family.
        #[arg(long)]
        suite: Vec<Suite>,
        /// Entry-sum bound for the exhaustive matrix checks.
        #[arg(long, default_value_t = 4)]
        max_total: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the generated vertex count with the tableau count.
    Count {
        #[command(flatten)]
        kr: KrArgs,
    },
    /// RSK of one matrix, rectified to a corner.
    Rsk {
        /// Rows separated by `/` or newlines, e.g. "1 0 1 / 2 1 0 / 0 2 0".
        #[arg(long, conflicts_with = "input")]
        matrix: Option<String>,
        /// File holding the matrix.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Corner::Se)]
        corner: Corner,
    },
}

#[derive(Args)]
struct KrArgs {
    #[arg(long)]
    family: FamilyName,
    #[arg(long)]
    n: usize,
    /// Required for A and D1.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: usize,
    /// Maximum number of vertices to generate.
    #[arg(long)]
    budget: Option<usize>,
}

impl KrArgs {
    fn instance(&self) -> Result<Instance> {
        Ok(Instance::new(self.family, self.n, self.r, self.s)?)
    }

    fn gen_options(&self) -> GenOptions {
        self.budget.map_or_else(GenOptions::default, GenOptions::budget)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Corner {
    Se,
    Nw,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(g: &CrystalGraph) -> String {
    let mut out = format!("vertices: {}\nedges: {}\n", g.len(), g.edges.len());
    for (i, count) in g.edge_counts() {
        out.push_str(&format!("  color {i}: {count}\n"));
    }
    let classical: Vec<usize> = g.indices.iter().copied().filter(|&i| i != 0).collect();
    let highest = g.highest_weight(&classical);
    out.push_str(&format!("classical highest weight vertices: {}\n", highest.len()));
    for v in highest {
        let vx = &g.vertices[v];
        let labels: Vec<String> = classical.iter().map(|&i| g.phi(v, i).map_or("?".to_string(), |x| x.to_string())).collect();
        out.push_str(&format!("  {}  wt {}  [{}]\n", vx.key, vx.wt, labels.join(",")));
    }
    out
}

fn parse_matrix(text: &str) -> Result<BiMatrix> {
    let rows: Vec<&str> = text.split(['/', '\n']).map(str::trim).filter(|r| !r.is_empty()).collect();
    let Some(first) = rows.first() else { bail!("empty matrix") };
    let r = rows.len();
    let n = r + first.split_whitespace().count();
    let a = TypeA::new(n, r)?;
    Ok(BiMatrix::parse(a.row_alphabet(), a.col_alphabet(), &rows.join(" / "))?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { kr, format, out } => {
            let g = kr.instance()?.graph(kr.gen_options())?;
            let text = match format {
                Format::Dot => g.to_dot(),
                Format::Json => g.to_json(),
                Format::Summary => summary(&g),
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Command::Verify { kr, suite, max_total, out } => {
            let inst = kr.instance()?;
            let suites = if suite.is_empty() { inst.applicable() } else { suite };
            let opts = SuiteOptions { gen: kr.gen_options(), max_total };
            let mut results = Vec::new();
            let mut all = true;
            for s in suites {
                let rep = inst.run(s, &opts)?;
                all &= rep.passed();
                eprintln!("{} {s}: {} checks, {} violations", if rep.passed() { "PASS" } else { "FAIL" }, rep.checks, rep.violations.len());
                results.push(json!({ "suite": s, "passed": rep.passed(), "report": rep }));
            }
            let report = json!({
                "family": kr.family,
                "n": kr.n,
                "r": kr.r,
                "s": kr.s,
                "passed": all,
                "suites": results,
            });
            emit(&format!("{}\n", serde_json::to_string_pretty(&report)?), out.as_ref())?;
            Ok(all)
        }
        Command::Count { kr } => {
            let inst = kr.instance()?;
            let got = inst.graph(kr.gen_options())?.len() as u128;
            let want = inst.expected_count();
            println!("generated: {got}\nexpected: {want}");
            Ok(got == want)
        }
        Command::Rsk { matrix, input, corner } => {
            let text = match (matrix, input) {
                (Some(m), _) => m,
                (None, Some(path)) => fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?,
                (None, None) => bail!("give --matrix or --input"),
            };
            let m = parse_matrix(&text)?;
            let (p, q) = match corner {
                Corner::Se => kappa_se(&m),
                Corner::Nw => kappa_nw(&m),
            };
            println!("P: {}\nQ: {}\nell: {}", p.to_text(), q.to_text(), ell(&m));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
