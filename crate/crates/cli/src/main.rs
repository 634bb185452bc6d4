mod args;

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, ComplexArgs, ComplexChoice, Family, GenerateArgs, OutputFormat, Param};
use noncover::corpus::{random_hypergraph, rng, CorpusSpec};
use noncover::domination::{DominationReport, ParamSelection};
use noncover::homology::{
    betti_vector_with, eta_with, leray_number_with, Limits, DEFAULT_LERAY_VERTEX_CAP,
    DEFAULT_VERTEX_CAP,
};
use noncover::hypergraph::*;
use noncover::io::{self as nio, Input, FORMAT_VERSION};
use noncover::rainbow::find_rainbow_cover;
use noncover::verify::{run_all, run_suite, Suite, SuiteReport, VerifyConfig};
use noncover::{independence_complex, noncover_complex, BettiVector, SimplicialComplex};

/// Everything a command can end with besides success.
enum Failure {
    Verify,
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<noncover::Error> for Failure {
    fn from(e: noncover::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Generate(a) => {
            json_only(cli, "generate")?;
            let h = generate(a)?;
            emit_json(&mut out, &nio::hypergraph_value(&h))?;
        }
        Command::Betti(a) => {
            let (name, k) = complex_input(a)?;
            let b = betti_vector_with(&k, &limits(cli, DEFAULT_VERTEX_CAP))?;
            match cli.format {
                OutputFormat::Json => emit_json(
                    &mut out,
                    &json!({"format": FORMAT_VERSION, "complex": name, "void": b.is_void(), "betti": b}),
                )?,
                OutputFormat::Csv => betti_csv(&mut out, name, &b)?,
            }
        }
        Command::Eta(a) => {
            let (name, k) = complex_input(a)?;
            let eta = eta_with(&k, &limits(cli, DEFAULT_VERTEX_CAP))?;
            scalar(cli, &mut out, name, "eta", json!(eta), eta.to_string())?;
        }
        Command::Leray(a) => {
            let (name, k) = complex_input(a)?;
            let l = leray_number_with(&k, &limits(cli, DEFAULT_LERAY_VERTEX_CAP))?;
            scalar(cli, &mut out, name, "leray", json!(l), l.to_string())?;
        }
        Command::Domination(a) => {
            let h = nio::parse_hypergraph(&read_input(&a.input.input)?)?;
            let selection = match a.param {
                Param::GammaTilde => ParamSelection::GammaTilde,
                Param::GammaSi => ParamSelection::GammaSi,
                Param::GammaE => ParamSelection::GammaE,
                Param::T => ParamSelection::T,
                Param::All => ParamSelection::All,
            };
            let report = DominationReport::compute(
                &h,
                selection,
                a.witness,
                &limits(cli, DEFAULT_VERTEX_CAP),
            )?;
            match cli.format {
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&report).context("serializing report")?;
                    v["format"] = json!(FORMAT_VERSION);
                    emit_json(&mut out, &v)?;
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["parameter", "value"])
                        .context("writing csv")?;
                    let rows = [
                        ("gamma_tilde", report.gamma_tilde),
                        ("gamma_si", report.gamma_si),
                        ("gamma_E", report.gamma_e),
                        ("t_param", report.t),
                        ("g_value", report.g),
                    ];
                    for (name, value) in rows {
                        if let Some(v) = value {
                            w.write_record([name, &v.to_string()])
                                .context("writing csv")?;
                        }
                    }
                    w.flush().context("writing csv")?;
                }
            }
        }
        Command::Dual(a) => {
            json_only(cli, "dual")?;
            match nio::parse_input(&read_input(&a.input)?)? {
                Input::Hypergraph(h) => {
                    emit_json(&mut out, &nio::hypergraph_value(&h.dual_hypergraph()?))?
                }
                Input::Complex(k) => emit_json(&mut out, &nio::complex_value(&k.alexander_dual()))?,
            }
        }
        Command::Rainbow(a) => {
            json_only(cli, "rainbow")?;
            let sys = nio::parse_cover_system(&read_input(&a.input)?)?;
            let found = match find_rainbow_cover(&sys) {
                Some(rc) => {
                    let labels: Vec<&str> = rc
                        .vertices
                        .iter()
                        .map(|v| sys.hypergraph().label(*v))
                        .collect();
                    json!({"indices": rc.indices, "vertices": labels})
                }
                None => json!("none"),
            };
            emit_json(
                &mut out,
                &json!({"format": FORMAT_VERSION, "covers": sys.covers().len(), "rainbow_cover": found}),
            )?;
        }
        Command::Verify(a) => {
            let cfg = VerifyConfig {
                max_n: a.max_n,
                max_k: a.max_k,
                seed: a.seed,
                samples: a.samples,
            };
            let reports = if a.suite == "all" {
                run_all(&cfg)
            } else {
                let suite = Suite::from_name(&a.suite)
                    .with_context(|| format!("unknown suite {:?}", a.suite))?;
                run_suite(suite, &cfg).map(|r| vec![r])
            }?;
            let passed = reports.iter().all(|r| r.passed);
            match cli.format {
                OutputFormat::Json => emit_json(
                    &mut out,
                    &json!({"format": FORMAT_VERSION, "seed": a.seed, "passed": passed, "suites": reports}),
                )?,
                OutputFormat::Csv => verify_csv(&mut out, &reports)?,
            }
            if !passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn limits(cli: &Cli, default_cap: usize) -> Limits {
    if cli.override_cap {
        return Limits::unlimited();
    }
    Limits {
        vertex_cap: cli.vertex_cap.map_or(default_cap, |c| c as usize),
        ..Limits::default()
    }
}

fn json_only(cli: &Cli, command: &str) -> Result<()> {
    if cli.format == OutputFormat::Csv {
        bail!("{command} only writes JSON");
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn complex_input(a: &ComplexArgs) -> Result<(&'static str, SimplicialComplex)> {
    match nio::parse_input(&read_input(&a.input.input)?)? {
        Input::Hypergraph(h) => Ok(match a.complex.unwrap_or(ComplexChoice::Noncover) {
            ComplexChoice::Noncover => ("noncover", noncover_complex(&h)),
            ComplexChoice::Independence => ("independence", independence_complex(&h)),
        }),
        Input::Complex(k) => match a.complex {
            Some(c) => bail!(
                "--complex {} needs a hypergraph input, got a complex",
                c.name()
            ),
            None => Ok(("input", k)),
        },
    }
}

fn generate(a: &GenerateArgs) -> Result<Hypergraph> {
    let need =
        |v: Option<usize>, flag: &str| v.with_context(|| format!("{:?} needs --{flag}", a.family));
    let h = match a.family {
        Family::TightPath => tight_path(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::TightPathModified => {
            tight_path_modified(need(a.n, "n")?, need(a.k, "k")?, need(a.j, "j")?)?
        }
        Family::TightCycle => tight_cycle(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::TightCycleModified => {
            tight_cycle_modified(need(a.n, "n")?, need(a.k, "k")?, need(a.j, "j")?)?
        }
        Family::CompleteUniform => complete_uniform(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::ExampleHr => example_hr(need(a.r, "r")?)?,
        Family::ExampleFr => example_fr(need(a.r, "r")?)?,
        Family::ExampleAnk => example_ank(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::Genpos => genpos_example(need(a.n, "n")?, need(a.d, "d")?)?,
        Family::Random => {
            if a.max_vertices == 0 || a.max_vertices > 64 || a.max_edge_size == 0 {
                bail!("random needs 1 <= --max-vertices <= 64 and --max-edge-size >= 1");
            }
            let mut spec = CorpusSpec::new(a.max_vertices, a.max_edge_size);
            if a.no_isolated {
                spec = spec.no_isolated();
            }
            random_hypergraph(&mut rng(a.seed), &spec)
        }
    };
    Ok(h)
}

fn emit_json(out: &mut impl Write, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).context("writing output")?;
    writeln!(out).context("writing output")?;
    Ok(())
}

fn scalar(
    cli: &Cli,
    out: &mut impl Write,
    complex: &str,
    key: &str,
    value: Value,
    text: String,
) -> Result<()> {
    match cli.format {
        OutputFormat::Json => emit_json(
            out,
            &json!({"format": FORMAT_VERSION, "complex": complex, key: value}),
        ),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["complex", key])?;
            w.write_record([complex, &text])?;
            w.flush()?;
            Ok(())
        }
    }
}

/// One row; columns `complex`, `void`, then one per dimension from −1.
fn betti_csv(out: &mut impl Write, complex: &str, b: &BettiVector) -> Result<()> {
    let dims: Vec<isize> = (-1..=b.max_dim()).collect();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["complex".to_string(), "void".to_string()];
    header.extend(dims.iter().map(|d| d.to_string()));
    w.write_record(&header)?;
    let mut row = vec![complex.to_string(), b.is_void().to_string()];
    row.extend(dims.iter().map(|d| b.get(*d).to_string()));
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

fn verify_csv(out: &mut impl Write, reports: &[SuiteReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["suite", "cases", "failed", "passed"])?;
    for r in reports {
        w.write_record([
            r.suite.to_string(),
            r.cases.to_string(),
            r.failed.to_string(),
            r.passed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
