use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use solidtorus::crossing::{classify_crossings, is_dotted_reduced, CrossingStatus};
use solidtorus::diagram::{parse_documents, AnnularDiagram, DiagramDocument};
use solidtorus::generate::{generate_random, GeneratorConfig, PuncturePolicy};
use solidtorus::moves::{insert_loop, r1_insert, r2_insert, remove_dotted_reducible, KinkSide, RewriteResult};
use solidtorus::skein::{bracket_with, jones_with, BracketOptions, DEFAULT_MAX_STATES};
use solidtorus::verify::{batch, verify_all, Report};
use solidtorus::{Error, Result};

#[derive(Parser)]
#[command(name = "solidtorus", version, about = "Kauffman bracket and Jones polynomial of links in the solid torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Refuse diagrams with more states than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u64,
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Object,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket of every diagram in FILE ("-" for stdin).
    Bracket { file: PathBuf },
    /// Print the normalized Jones polynomial.
    Jones {
        file: PathBuf,
        /// Show the text form in q = A^-4 instead of A.
        #[arg(long)]
        q: bool,
    },
    /// Classify every crossing as non-nugatory, dotted-reducible or dotted-irreducible.
    Classify { file: PathBuf },
    /// Run the degree checks on every diagram in FILE.
    Verify { file: PathBuf },
    /// Run the degree checks over several files and write a report.
    Batch {
        files: Vec<PathBuf>,
        /// Also write the CSV report here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also write the structured report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit random diagrams.
    Generate(GenerateArgs),
    /// Apply a local rewrite and print the new diagram.
    Rewrite {
        #[command(subcommand)]
        rewrite: Rewrite,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    min_crossings: usize,
    #[arg(long, default_value_t = 8)]
    max_crossings: usize,
    /// Allow any over/under assignment.
    #[arg(long)]
    non_alternating: bool,
    #[arg(long, value_enum, default_value_t = Policy::Uniform)]
    puncture: Policy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Outer,
    Uniform,
    Adversarial,
}

#[derive(Subcommand)]
enum Rewrite {
    /// Add a kink on an edge (on a loop index when there are no crossings).
    R1 {
        file: PathBuf,
        #[arg(long)]
        edge: u32,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+")]
        sign: i8,
    },
    /// Push edge OVER across edge UNDER through a face they share.
    R2 {
        file: PathBuf,
        #[arg(long)]
        over: u32,
        #[arg(long)]
        under: u32,
        #[arg(long)]
        face: Option<usize>,
    },
    /// Add a disjoint loop.
    Loop {
        file: PathBuf,
        #[arg(long)]
        dotted: bool,
    },
    /// Remove a dotted-reducible crossing.
    Untwist {
        file: PathBuf,
        #[arg(long)]
        crossing: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn parse_sign(s: &str) -> std::result::Result<i8, String> {
    match s {
        "+" | "+1" | "1" | "positive" => Ok(1),
        "-" | "-1" | "negative" => Ok(-1),
        other => Err(format!("expected + or -, got `{other}`")),
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load(path: &PathBuf) -> Result<Vec<AnnularDiagram>, String> {
    let text = read_input(path)?;
    parse_documents(&text)
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.map_err(|e| format!("{} document {i}: {e}", path.display())))
        .collect()
}

fn load_one(path: &PathBuf) -> Result<AnnularDiagram, String> {
    let mut docs = load(path)?;
    if docs.len() != 1 {
        return Err(format!("{}: expected one diagram, found {}", path.display(), docs.len()));
    }
    Ok(docs.remove(0))
}

/// Bracket with `i64` coefficients, redone with big integers on overflow.
fn polynomial(
    d: &AnnularDiagram,
    opts: &BracketOptions,
    normalized: bool,
) -> Result<(String, serde_json::Value, String)> {
    let small = if normalized { jones_with::<i64>(d, opts) } else { bracket_with::<i64>(d, opts) };
    match small {
        Ok(p) => Ok((p.to_string(), p.to_object(), p.to_q_string())),
        Err(Error::Overflow) => {
            let p = if normalized {
                jones_with::<num_bigint::BigInt>(d, opts)?
            } else {
                bracket_with::<num_bigint::BigInt>(d, opts)?
            };
            Ok((p.to_string(), p.to_object(), p.to_q_string()))
        }
        Err(e) => Err(e),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn print_rewrite(r: &RewriteResult, format: Format) {
    match format {
        Format::Text => {
            println!("# expected bracket factor: {}", r.expected_bracket_factor);
            println!("# crossing delta: {}", r.crossing_delta);
            print!("{}", r.diagram);
        }
        Format::Object => print_json(&json!({
            "diagram": DiagramDocument::from(&r.diagram),
            "expected_bracket_factor": r.expected_bracket_factor.to_object(),
            "crossing_delta": r.crossing_delta,
        })),
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let opts = BracketOptions { max_states: cli.max_states, threads: cli.threads };
    let format = cli.format;
    match cli.command {
        Command::Bracket { file } => {
            let polys = load(&file)?
                .iter()
                .map(|d| polynomial(d, &opts, false))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            match format {
                Format::Text => polys.iter().for_each(|p| println!("{}", p.0)),
                Format::Object => print_json(&json!(polys.iter().map(|p| &p.1).collect::<Vec<_>>())),
            }
        }
        Command::Jones { file, q } => {
            let polys = load(&file)?
                .iter()
                .map(|d| polynomial(d, &opts, true))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            match format {
                Format::Text => polys.iter().for_each(|p| println!("{}", if q { &p.2 } else { &p.0 })),
                Format::Object => print_json(&json!(polys.iter().map(|p| &p.1).collect::<Vec<_>>())),
            }
        }
        Command::Classify { file } => {
            let docs = load(&file)?;
            let mut objects = Vec::new();
            for (i, d) in docs.iter().enumerate() {
                let reports = classify_crossings(d);
                match format {
                    Format::Text => {
                        if docs.len() > 1 {
                            println!("# diagram {i}");
                        }
                        for r in &reports {
                            let mut line = format!("{}: {}", r.crossing, r.status);
                            if r.status != CrossingStatus::NonNugatory {
                                let pair = &r.curves[0].corners;
                                line += &format!(" (corners {} {})", pair[0], pair[1]);
                            }
                            println!("{line}");
                        }
                        println!("dotted-reduced: {}", is_dotted_reduced(d));
                    }
                    Format::Object => objects.push(json!({
                        "crossings": reports,
                        "dotted_reduced": is_dotted_reduced(d),
                    })),
                }
            }
            if format == Format::Object {
                print_json(&json!(objects));
            }
        }
        Command::Verify { file } => {
            let items: Vec<(String, AnnularDiagram)> =
                load(&file)?.into_iter().enumerate().map(|(i, d)| (format!("{}#{i}", file.display()), d)).collect();
            let items = if items.len() == 1 {
                vec![(file.display().to_string(), items.into_iter().next().expect("one").1)]
            } else {
                items
            };
            let records =
                verify_all(&items, &opts).into_iter().collect::<Result<Vec<_>>>().map_err(|e| e.to_string())?;
            let report = Report::new(cli.seed, records);
            match format {
                Format::Text => print!("{}", report.to_csv()),
                Format::Object => print!("{}", report.to_json()),
            }
            return Ok(u8::from(report.failed()));
        }
        Command::Batch { files, csv, json } => {
            let outcome = batch(&files, cli.seed, &opts);
            for e in &outcome.errors {
                eprintln!("error: {}: {}", e.id, e.message);
            }
            if let Some(p) = csv {
                std::fs::write(&p, outcome.report.to_csv()).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            if let Some(p) = json {
                std::fs::write(&p, outcome.report.to_json()).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            match format {
                Format::Text => print!("{}", outcome.report.to_csv()),
                Format::Object => print!("{}", outcome.report.to_json()),
            }
            return Ok(outcome.exit_code() as u8);
        }
        Command::Generate(g) => {
            if g.min_crossings > g.max_crossings {
                return Err("--min-crossings exceeds --max-crossings".into());
            }
            let cfg = GeneratorConfig {
                min_crossings: g.min_crossings,
                max_crossings: g.max_crossings,
                alternating: !g.non_alternating,
                policy: match g.puncture {
                    Policy::Outer => PuncturePolicy::Outer,
                    Policy::Uniform => PuncturePolicy::UniformRandomFace,
                    Policy::Adversarial => PuncturePolicy::AdversarialInner,
                },
                seed: cli.seed.unwrap_or(0),
            };
            let diagrams: Vec<AnnularDiagram> = generate_random(cfg).take(g.count).collect();
            match format {
                Format::Text => {
                    let docs: Vec<String> = diagrams.iter().map(|d| d.to_string()).collect();
                    print!("{}", docs.join("---\n"));
                }
                Format::Object => print_json(&json!(diagrams.iter().map(DiagramDocument::from).collect::<Vec<_>>())),
            }
        }
        Command::Rewrite { rewrite } => {
            let result = match rewrite {
                Rewrite::R1 { file, edge, side, sign } => {
                    let side = match side {
                        SideArg::Left => KinkSide::Left,
                        SideArg::Right => KinkSide::Right,
                    };
                    r1_insert(&load_one(&file)?, edge, side, sign)
                }
                Rewrite::R2 { file, over, under, face } => r2_insert(&load_one(&file)?, over, under, face),
                Rewrite::Loop { file, dotted } => Ok(insert_loop(&load_one(&file)?, dotted)),
                Rewrite::Untwist { file, crossing } => remove_dotted_reducible(&load_one(&file)?, crossing),
            };
            print_rewrite(&result.map_err(|e| e.to_string())?, format);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
