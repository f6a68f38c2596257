//! `eqhom`: equivariant homology of finite simplicial G-complexes, the real
//! Enriques classifier and the verification suites, from the command line.
//!
//! Exit status is 0 on success, 1 when a verification case fails and 2 when
//! the input cannot be read or validated.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eqhom::enriques::{classify, enumerate_types, EnriquesType, MAX_ENUMERATED_COMPONENTS};
use eqhom::equivariant::{edge_morphism, edge_morphism_cohomology, eq_cohomology, eq_homology};
use eqhom::gcomplex::{builtin, load_complex, CoeffSystem, GComplex, BUILTIN_NAMES};
use eqhom::spectral::e2_page;
use eqhom::verify::{run_suite, Suite};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "eqhom", version, about, term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Equivariant groups and edge morphisms over a range of degrees
    Compute(ComputeArgs),
    /// Answers for real Enriques surfaces of a given topological type
    Classify(ClassifyArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Render the E2 page of the Hochschild-Serre spectral sequence
    E2(E2Args),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Name of a builtin complex; `+` joins names into a disjoint union
    #[arg(long)]
    builtin: Option<String>,
    /// Path to a complex in the JSON exchange format
    #[arg(long)]
    complex: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Output {
    /// Machine-readable output
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Aligned text output (the default)
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Coefficient system: Z2, Z or Z1
    #[arg(long, default_value = "Z2")]
    coeff: CoeffSystem,
    /// Inclusive degree range `a..b`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    range: Option<RangeInclusive<isize>>,
    /// Also report equivariant cohomology
    #[arg(long)]
    cohomology: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Type file: {"half1": [{"orientable": bool, "genus": n}, ..], "half2": [..]}
    #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
    path: Option<PathBuf>,
    /// Tabulate every type with at most this many components
    #[arg(long, value_name = "S")]
    enumerate: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// core, exactness, gm, duality or all
    #[arg(default_value = "all")]
    suite: Suite,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct E2Args {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value = "Z2")]
    coeff: CoeffSystem,
    /// Number of columns below zero to show
    #[arg(long)]
    depth: Option<usize>,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Input(String),
    Verification,
    Internal(String),
}

impl From<eqhom::Error> for Failure {
    fn from(e: eqhom::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<isize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let a: isize = a.trim().parse().map_err(|e| format!("start `{a}`: {e}"))?;
    let b: isize = b.trim().parse().map_err(|e| format!("end `{b}`: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn load(source: &Source) -> Result<(String, GComplex), Failure> {
    if let Some(name) = &source.builtin {
        let x = builtin(name).map_err(|e| Failure::Input(format!("{e} (known: {})", BUILTIN_NAMES.join(", "))))?;
        return Ok((name.clone(), x));
    }
    let path = source.complex.as_ref().expect("clap enforces one source");
    let loaded = load_complex(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if loaded.subdivided {
        eprintln!(
            "note: {} was subdivided once to make the involution regular",
            path.display()
        );
    }
    Ok((path.display().to_string(), loaded.complex))
}

fn echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
    } else {
        print!("{text}");
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), Failure> {
    let (name, x) = load(&args.source)?;
    let range = args.range.clone().unwrap_or(-2..=x.dim().max(0));
    let mut rows = Vec::new();
    let mut text = format!("{name}, coefficients {}\n", args.coeff);
    let mut cotext = format!("{:>4}  {:<16} {}\n", "p", "H^p(X;G)", "edge image");
    let _ = writeln!(
        text,
        "{:>4}  {:<16} {:<16} onto invariants",
        "p", "H_p(X;G)", "edge image"
    );
    for p in range.clone() {
        let h = eq_homology(&x, args.coeff, p)?;
        let e = edge_morphism(&x, args.coeff, p)?;
        let image = e.hom.image().iso_type();
        let onto = e.onto_invariants();
        let _ = writeln!(
            text,
            "{p:>4}  {:<16} {:<16} {}",
            h.group().to_string(),
            image.to_string(),
            yes_no(onto)
        );
        let mut row = json!({
            "p": p,
            "homology": h.group(),
            "edge_image": image,
            "edge_onto_invariants": onto,
        });
        if args.cohomology {
            let c = eq_cohomology(&x, args.coeff, p)?;
            let ec = edge_morphism_cohomology(&x, args.coeff, p)?;
            let image = ec.hom.image().iso_type();
            let _ = writeln!(cotext, "{p:>4}  {:<16} {}", c.group().to_string(), image);
            row["cohomology"] = json!(c.group());
            row["cohomology_edge_image"] = json!(image);
        }
        rows.push(row);
    }
    if args.cohomology {
        text.push_str(&cotext);
    }
    let report = json!({
        "command": echo(),
        "complex": name,
        "coeff": args.coeff,
        "range": [range.start(), range.end()],
        "degrees": rows,
    });
    emit(args.output.json, report, text);
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Failure> {
    let types = match (&args.path, args.enumerate) {
        (_, Some(s)) => {
            if s > MAX_ENUMERATED_COMPONENTS {
                return Err(Failure::Input(format!(
                    "--enumerate accepts at most {MAX_ENUMERATED_COMPONENTS} components"
                )));
            }
            enumerate_types(s).map_err(|e| Failure::Input(e.to_string()))?
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let t = EnriquesType::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let out = classify(&t).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            vec![(t, out)]
        }
        (None, None) => unreachable!("clap requires a path or --enumerate"),
    };
    let mut text = format!(
        "{:<28} {:>3} {:>6} {:<5} {:<5} {}\n",
        "type", "h1", "h1alg", "GM", "Z-GM", "Br"
    );
    let mut rows = Vec::new();
    for (t, out) in &types {
        let key = t.to_string();
        let flag = if out.outside_hypothesis { " *" } else { "" };
        let _ = writeln!(
            text,
            "{key:<28} {:>3} {:>6} {:<5} {:<5} {}{flag}",
            out.dim_h1, out.dim_h1_alg, out.is_gm, out.is_zgm, out.brauer
        );
        rows.push(json!({ "type": key, "input": t, "result": out }));
    }
    if types.iter().any(|(_, o)| o.outside_hypothesis) {
        text.push_str("* empty real part: GM answers are derived from the vanishing edge map\n");
    }
    emit(args.output.json, json!({ "command": echo(), "types": rows }), text);
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let report = run_suite(args.suite);
    if args.output.json {
        println!("{}", report.to_json());
    } else {
        for f in report.failures() {
            println!(
                "FAIL [{}] {} :: {} :: {} :: {}",
                f.suite, f.module, f.property, f.input, f.detail
            );
        }
        println!(
            "{}: {} passed, {} failed, {} total",
            report.suite, report.passed, report.failed, report.total
        );
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_e2(args: &E2Args) -> Result<(), Failure> {
    let (name, x) = load(&args.source)?;
    let page = e2_page(&x, args.coeff, args.depth)?;
    let mut text = format!("E2 page for {name}, coefficients {}: rows q, columns p\n", args.coeff);
    let ps: Vec<isize> = {
        let mut v: Vec<isize> = page.entries.iter().map(|e| e.p).collect();
        v.sort();
        v.dedup();
        v
    };
    let _ = write!(text, "{:>4}", "q\\p");
    for p in &ps {
        let _ = write!(text, " {p:>10}");
    }
    text.push('\n');
    for q in (0..page.rows).rev() {
        let _ = write!(text, "{q:>4}");
        for &p in &ps {
            let cell = page.get(p, q).map(ToString::to_string).unwrap_or_default();
            let _ = write!(text, " {cell:>10}");
        }
        text.push('\n');
    }
    let value = json!({ "command": echo(), "complex": name, "page": page });
    emit(args.output.json, value, text);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::E2(a) => cmd_e2(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
