//! Command-line front end: parses Cartan-matrix spec files, runs the
//! library analyses, and emits deterministic JSON reports (or Graphviz DOT
//! for diagrams). Reports go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success; 1 parse/validation error; 2 unsupported request
//! (e.g. enumeration of a non-definite system); 3 internal verification
//! failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use grs::carter;
use grs::diagram::{catalog, CarterDiagram};
use grs::presentation::{CoxeterOrder, GrsPresentation};
use grs::weyl;

mod report;
mod spec;

use report::*;
use spec::{parse_spec, CliError};

const DEFAULT_COXETER_CAP: u64 = 10_000;
const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "grs",
    about = "Exact-arithmetic analysis and classification of simply-laced root-system presentations",
    version
)]
struct Cli {
    /// Override both enumeration caps (Coxeter-order iterations and Weyl
    /// group size).
    #[arg(long, global = true)]
    cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a spec file
    Analyze {
        /// Path to a JSON spec file, or "-" for standard input
        file: String,
    },
    /// Euler form of a spec file, with the uniqueness solve
    Euler { file: String },
    /// Enumerated real roots of a positive-definite spec file
    Roots { file: String },
    /// Per-component diagram classification
    Classify {
        file: String,
        /// Emit Graphviz DOT of the component diagrams instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Emit a spec file presenting a catalog entry
    Realize { name: String },
    /// Decide isomorphism of two irreducible positive-definite systems
    Isomorphic { left: String, right: String },
    /// List the diagram catalog
    Catalog {
        /// Restrict to entries of this rank
        #[arg(long)]
        rank: Option<usize>,
        /// Emit Graphviz DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Run the acceptance suite, one line per criterion
    Selftest,
}

struct Caps {
    coxeter: u64,
    group: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        coxeter: cli.cap.unwrap_or(DEFAULT_COXETER_CAP),
        group: cli.cap.map(|c| c as usize).unwrap_or(DEFAULT_GROUP_CAP),
    };
    match dispatch(cli.command, &caps) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(command: Command, caps: &Caps) -> Result<(), CliError> {
    match command {
        Command::Analyze { file } => {
            let spec = parse_spec(&read_input(&file)?)?;
            let grs = spec.presentation()?;
            let report = analyze(&grs, spec.label.clone(), caps);
            emit(&report)
        }
        Command::Euler { file } => {
            let spec = parse_spec(&read_input(&file)?)?;
            let grs = spec.presentation()?;
            let report = euler_report(&grs, spec.label.clone());
            emit(&report)
        }
        Command::Roots { file } => {
            let spec = parse_spec(&read_input(&file)?)?;
            let grs = spec.presentation()?;
            let set = weyl::enumerate_roots(&grs).map_err(CliError::Grs)?;
            let report = RootsReport {
                label: spec.label.clone(),
                count: set.len(),
                roots: set
                    .roots()
                    .iter()
                    .map(|r| report::int_vector(r.coords()))
                    .collect::<Result<_, _>>()?,
            };
            emit(&report)
        }
        Command::Classify { file, dot } => {
            let spec = parse_spec(&read_input(&file)?)?;
            let grs = spec.presentation()?;
            let classification = carter::classify_grs(&grs).map_err(CliError::Grs)?;
            if dot {
                for component in &classification.components {
                    let entry = catalog()
                        .get(&component.name)
                        .expect("classification names come from the catalog");
                    print!("{}", dot_graph(&component.name, &entry.diagram));
                }
                Ok(())
            } else {
                emit(&ClassifyReport::from_classification(
                    spec.label.clone(),
                    &classification,
                ))
            }
        }
        Command::Realize { name } => {
            let presentation = carter::realize(&name).map_err(CliError::Grs)?;
            let spec = spec::GrsSpecFile::from_presentation(&presentation, Some(name))?;
            emit(&spec)
        }
        Command::Isomorphic { left, right } => {
            let spec_l = parse_spec(&read_input(&left)?)?;
            let spec_r = parse_spec(&read_input(&right)?)?;
            let gl = spec_l.presentation()?;
            let gr = spec_r.presentation()?;
            let isomorphic = carter::are_isomorphic_grs(&gl, &gr).map_err(CliError::Grs)?;
            let name_of = |g: &GrsPresentation| -> Result<String, CliError> {
                Ok(carter::classify_grs(g)
                    .map_err(CliError::Grs)?
                    .single_name()
                    .expect("irreducible input")
                    .to_string())
            };
            emit(&IsomorphicReport {
                isomorphic,
                left: name_of(&gl)?,
                right: name_of(&gr)?,
            })
        }
        Command::Catalog { rank, dot } => {
            let entries: Vec<_> = catalog()
                .entries()
                .iter()
                .filter(|e| rank.is_none_or(|r| e.rank() == r))
                .collect();
            if dot {
                for e in &entries {
                    print!("{}", dot_graph(&e.name, &e.diagram));
                }
                Ok(())
            } else {
                let report: Vec<CatalogEntryReport> = entries
                    .iter()
                    .map(|e| CatalogEntryReport {
                        name: e.name.clone(),
                        rank: e.rank(),
                        ambient: e.ambient.label(),
                        edges: e.diagram.edges().collect(),
                    })
                    .collect();
                emit(&report)
            }
        }
        Command::Selftest => {
            let results = grs::selftest::run_all_streaming(|r| println!("{}", r.line()));
            if grs::selftest::all_passed(&results) {
                Ok(())
            } else {
                Err(CliError::SelftestFailed(
                    results.iter().filter(|r| !r.passed).count(),
                ))
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(path.to_string(), e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e.to_string()))
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    println!("{text}");
    Ok(())
}

/// Graphviz DOT for a diagram: named graph, unlabeled circular nodes,
/// undirected edges.
fn dot_graph(name: &str, diagram: &CarterDiagram) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{name}\" {{\n"));
    out.push_str("  node [shape=circle, label=\"\"];\n");
    for v in 0..diagram.vertex_count() {
        out.push_str(&format!("  v{v};\n"));
    }
    for (a, b) in diagram.edges() {
        out.push_str(&format!("  v{a} -- v{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn analyze(grs: &GrsPresentation, label: Option<String>, caps: &Caps) -> AnalysisReport {
    let positive_definite = grs.is_positive_definite();
    let euler = grs.euler_form();
    let euler_unique = match grs.solve_euler_uniqueness() {
        Ok(_) => Maybe::Value(true),
        Err(e) => Maybe::inapplicable(e.to_string()),
    };
    let coxeter_order = match grs.coxeter_order(caps.coxeter) {
        CoxeterOrder::Finite(k) => OrderReport::Order(k),
        CoxeterOrder::Unknown { cap } => OrderReport::Unknown {
            unknown_at_cap: cap,
        },
    };
    let root_count = if positive_definite {
        match weyl::enumerate_roots(grs) {
            Ok(set) => Maybe::Value(set.len()),
            Err(e) => Maybe::inapplicable(e.to_string()),
        }
    } else {
        Maybe::inapplicable("not enumerable: Cartan form is not positive definite".into())
    };
    let components = weyl::irreducible_components(grs);
    let component_names = if positive_definite {
        match carter::classify_grs(grs) {
            Ok(c) => Maybe::Value(c.names()),
            Err(e) => Maybe::inapplicable(e.to_string()),
        }
    } else {
        Maybe::inapplicable("classification requires a positive-definite Cartan form".into())
    };
    AnalysisReport {
        label,
        rank: grs.rank(),
        positive_definite,
        radical_rank: grs.radical().rank(),
        euler: report::int_matrix(euler.matrix()).expect("euler entries fit"),
        euler_unique,
        coxeter: report::int_matrix(grs.coxeter_matrix().matrix()).expect("coxeter entries fit"),
        coxeter_order,
        root_count,
        components: ComponentsReport {
            groups: components.groups.clone(),
            heuristic: components.heuristic,
        },
        component_names,
        caps: CapsReport {
            coxeter_order: caps.coxeter,
            weyl_group: caps.group,
        },
    }
}

fn euler_report(grs: &GrsPresentation, label: Option<String>) -> EulerReport {
    let x = grs.euler_form();
    let xt = x.matrix().transpose();
    let cox = grs.coxeter_matrix();
    let identities = EulerIdentities {
        symmetrizes_to_cartan: x.matrix().add(&xt) == *grs.cartan(),
        coxeter_twist: x.matrix().mul(cox.matrix()) == xt.neg(),
        det_one: grs::linalg::det_exact(x.matrix()).expect("square") == grs::BigInt::from(1),
    };
    let unique_solve = match grs.solve_euler_uniqueness() {
        Ok(_) => Maybe::Value(true),
        Err(e) => Maybe::inapplicable(e.to_string()),
    };
    EulerReport {
        label,
        euler: report::int_matrix(x.matrix()).expect("euler entries fit"),
        identities,
        unique_solve,
    }
}
