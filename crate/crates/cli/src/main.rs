use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use composihedra::complex::face_poset_composihedron;
use composihedra::counting::{facet_breakdown, vertex_count_closed_form, vertex_counts_recursive};
use composihedra::export::{export_json, export_polymake};
use composihedra::realization::{
    associahedron_vrep, composihedron_hrep, composihedron_vrep, multiplihedron_vrep, Rational,
    VRep, WeightVector,
};
use composihedra::report::{Parameters, RunReport};
use composihedra::trees::enumerate_binary_painted;
use composihedra::verify::verify_composihedron;
use num::Zero;

#[derive(Parser)]
#[command(
    name = "composihedra",
    version,
    about = "Exact composihedra, multiplihedra and associahedra"
)]
struct Cli {
    /// Print a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex and facet counts of CK(n).
    Count {
        #[arg(long)]
        n: u32,
    },
    /// List the binary painted trees with n leaves.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// List one canonical tree per domain class instead.
        #[arg(long)]
        classes: bool,
    },
    /// Print exact vertex coordinates.
    Realize {
        #[arg(long, value_enum, default_value_t = Family::Ck)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Parameter as an exact fraction such as 1/2.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Polymake)]
        format: Format,
    },
    /// Check the realization of CK(n) against its face poset.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
    },
    /// Write vertices, inequalities or the face poset of CK(n) to a file.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Object::Vrep)]
        object: Object,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u64>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ck,
    K,
    J,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Polymake,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Vrep,
    Hrep,
    Poset,
}

type CliResult<T> = Result<T, String>;

fn weight_vector(n: usize, weights: Option<Vec<u64>>) -> CliResult<WeightVector> {
    match weights {
        None => Ok(WeightVector::units(n)),
        Some(w) if w.len() != n => Err(format!("expected {n} weights, got {}", w.len())),
        Some(w) => WeightVector::new(w).map_err(|e| e.to_string()),
    }
}

fn parse_q(text: &str) -> CliResult<Rational> {
    let q: Rational = text
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse q = {text:?} as a fraction"))?;
    Ok(q)
}

struct Output {
    report: RunReport,
    text: String,
}

fn count(n: u32) -> CliResult<Output> {
    let mut report = RunReport::new(
        "count",
        Parameters {
            n: Some(n as usize),
            ..Parameters::default()
        },
    );
    let recursive = vertex_counts_recursive(n).pop().expect("non-empty");
    let closed = vertex_count_closed_form(n);
    report.count("vertices", &recursive);
    report.check(
        "formulas_agree",
        recursive == closed,
        format!("recursion {recursive}, closed form {closed}"),
    );
    let mut text = format!("vertices {recursive}\n");
    if n >= 2 {
        let f = facet_breakdown(n as usize).map_err(|e| e.to_string())?;
        report.count("upper_facets", f.upper_count);
        report.count("lower_facets", f.lower_count);
        report.count("facets", f.total);
        text += &format!(
            "facets {} (upper {}, lower {})\n",
            f.total, f.upper_count, f.lower_count
        );
    }
    Ok(Output { report, text })
}

fn enumerate(n: usize, classes: bool) -> CliResult<Output> {
    let mut report = RunReport::new(
        "enumerate",
        Parameters {
            n: Some(n),
            ..Parameters::default()
        },
    );
    let trees = enumerate_binary_painted(n).map_err(|e| e.to_string())?;
    let canonical: BTreeSet<String> = trees
        .iter()
        .map(|t| t.canonicalize_domain().to_string())
        .collect();
    report.count("trees", trees.len());
    report.count("classes", canonical.len());
    let expected = vertex_counts_recursive(n as u32).pop().expect("non-empty");
    report.check(
        "classes_match_vertex_count",
        num::BigUint::from(canonical.len()) == expected,
        format!("{} classes, {expected} vertices", canonical.len()),
    );
    let listed: Vec<String> = if classes {
        canonical.into_iter().collect()
    } else {
        trees.iter().map(|t| t.to_string()).collect()
    };
    let text = listed.iter().map(|s| format!("{s}\n")).collect();
    report.data = Some(serde_json::json!(listed));
    Ok(Output { report, text })
}

fn realize_vrep(
    family: Family,
    n: usize,
    q: Option<&str>,
    weights: Option<Vec<u64>>,
) -> CliResult<VRep> {
    let result = match family {
        Family::Ck => {
            if let Some(q) = q {
                if !parse_q(q)?.is_zero() {
                    return Err(
                        "the composihedron is realized at q = 0; use --family j for other values"
                            .into(),
                    );
                }
            }
            composihedron_vrep(n, &weight_vector(n, weights)?)
        }
        Family::J => {
            let q = parse_q(q.ok_or("--family j needs --q")?)?;
            multiplihedron_vrep(n, &q, &weight_vector(n, weights)?)
        }
        Family::K => {
            if q.is_some() || weights.is_some() {
                return Err("--family k takes neither --q nor --weights".into());
            }
            associahedron_vrep(n)
        }
    };
    result.map_err(|e| e.to_string())
}

fn realize(
    family: Family,
    n: usize,
    q: Option<String>,
    weights: Option<Vec<u64>>,
    format: Format,
) -> CliResult<Output> {
    let parameters = Parameters {
        n: Some(n),
        weights: weights.clone(),
        q: q.clone(),
    };
    let mut report = RunReport::new("realize", parameters);
    let v = realize_vrep(family, n, q.as_deref(), weights)?;
    report.count("vertices", v.vertices.len());
    report.data = Some(serde_json::to_value(&v).expect("vertices serialize"));
    let text = match format {
        Format::Polymake => export_polymake(&v).map_err(|e| e.to_string())?,
        Format::Json => export_json(&v) + "\n",
    };
    Ok(Output { report, text })
}

fn verify(n: usize, weights: Option<Vec<u64>>) -> CliResult<Output> {
    let w = weight_vector(n, weights.clone())?;
    let mut report = RunReport::new(
        "verify",
        Parameters {
            n: Some(n),
            weights,
            q: None,
        },
    );
    report.checks = verify_composihedron(n, &w).map_err(|e| e.to_string())?;
    let text = report
        .checks
        .iter()
        .map(|c| {
            format!(
                "{} {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )
        })
        .collect();
    Ok(Output { report, text })
}

fn export(
    format: Format,
    out: PathBuf,
    n: usize,
    object: Object,
    weights: Option<Vec<u64>>,
) -> CliResult<Output> {
    let mut report = RunReport::new(
        "export",
        Parameters {
            n: Some(n),
            weights: weights.clone(),
            q: None,
        },
    );
    let w = weight_vector(n, weights)?;
    let content = match (object, format) {
        (Object::Vrep, Format::Polymake) => {
            export_polymake(&composihedron_vrep(n, &w).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
        }
        (Object::Vrep, Format::Json) => {
            export_json(&composihedron_vrep(n, &w).map_err(|e| e.to_string())?)
        }
        (Object::Hrep, Format::Json) => {
            export_json(&composihedron_hrep(n, &w).map_err(|e| e.to_string())?)
        }
        (Object::Poset, Format::Json) => export_json(
            &face_poset_composihedron(n)
                .map_err(|e| e.to_string())?
                .with_bottom("empty"),
        ),
        (_, Format::Polymake) => return Err("polymake export supports only --object vrep".into()),
    };
    fs::write(&out, &content).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    report.count("bytes", content.len());
    Ok(Output {
        report,
        text: format!("wrote {} bytes to {}\n", content.len(), out.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match cli.command {
        Command::Count { n } => count(n),
        Command::Enumerate { n, classes } => enumerate(n, classes),
        Command::Realize {
            family,
            n,
            q,
            weights,
            format,
        } => realize(family, n, q, weights, format),
        Command::Verify { n, weights } => verify(n, weights),
        Command::Export {
            format,
            out,
            n,
            object,
            weights,
        } => export(format, out, n, object, weights),
    };
    match result {
        Ok(mut output) => {
            output.report.elapsed_ms = start.elapsed().as_millis() as u64;
            if cli.json {
                println!("{}", export_json(&output.report));
            } else {
                print!("{}", output.text);
            }
            if output.report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
