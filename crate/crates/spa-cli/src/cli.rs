//! Command dispatch and output rendering.
//!
//! Exit codes: 0 on success, 1 when parsing/validation/computation fails,
//! 2 on usage errors (from clap).

use std::io::{Read, Write};
use std::sync::Arc;

use clap::{Parser as ClapParser, Subcommand};
use serde::Serialize;
use spa_core::groebner::{buchberger, min_gens_gb, truncated_buchberger};
use spa_core::presentation::{minimize, Presentation};
use spa_core::resolution::{betti, minimal_free_resolution, verify_resolution};
use spa_core::syzygy::syzygies_of_generators;
use spa_core::{
    GbKind, GradedFreeModule, GroebnerBasis, ModuleElement, Polynomial, Provenance,
    TransitionMatrices,
};

use crate::parse::{parse_problem, FrontendError, ProblemFile};

#[derive(ClapParser)]
#[command(name = "spa", version, about = "Left Gröbner bases, syzygies and minimal graded free resolutions over solvable polynomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the algebra: solvability and gradedness
    Check {
        /// Problem file (`-` for stdin)
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Left Gröbner basis of the submodule generated by the elements
    Gb {
        input: String,
        /// Compute an n-truncated basis of homogeneous input
        #[arg(long)]
        truncate: Option<u64>,
        /// Include the transition matrices U and V in the output
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal homogeneous generating set plus a homogeneous Gröbner basis
    Mingens {
        input: String,
        /// Stop after the degree of the largest input generator
        #[arg(long = "early-stop")]
        early_stop: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimize the presentation L0/N by eliminating unit entries
    Minpres {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the syzygy module of the elements
    Syz {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimal graded free resolution of L0/N
    Resolve {
        input: String,
        /// Print the Betti table
        #[arg(long)]
        betti: bool,
        /// Re-verify the resolution independently
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Entry point used by `main` and by tests.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; --help and --version exit 0.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_input(path: &str) -> Result<String, FrontendError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| FrontendError::Io(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| FrontendError::Io(format!("reading `{path}`: {e}")))
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Check { input, json } => {
            let text = read_input(&input)?;
            let problem = crate::parse::parse_problem_unchecked(&text)?;
            let solvable = problem.algebra.check_solvable();
            let graded = problem.algebra.check_graded();
            let ok = solvable.is_valid() && graded.is_valid();
            if json {
                let payload = CheckOut {
                    format: 1,
                    task: "check",
                    solvable: solvable.is_valid(),
                    graded: graded.is_valid(),
                    failures: solvable
                        .failures
                        .iter()
                        .chain(&graded.failures)
                        .cloned()
                        .collect(),
                };
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(
                    out,
                    "algebra: {} generators over {}",
                    problem.algebra.generator_count(),
                    problem.algebra.field()
                )?;
                writeln!(out, "solvable: {}", if solvable.is_valid() { "yes" } else { "no" })?;
                writeln!(out, "graded: {}", if graded.is_valid() { "yes" } else { "no" })?;
                for failure in solvable.failures.iter().chain(&graded.failures) {
                    writeln!(out, "  {failure}")?;
                }
            }
            if !ok {
                return Err(Box::new(FrontendError::Validation {
                    report: {
                        let mut r = solvable;
                        r.merge(graded);
                        r
                    },
                }));
            }
            Ok(())
        }
        Command::Gb { input, truncate, matrices, json } => {
            let problem = parse_problem(&read_input(&input)?)?;
            let n0 = truncate.or(problem.truncate);
            let (basis, transitions) = match n0 {
                Some(n0) => (truncated_buchberger(&problem.elements, &problem.module, n0)?, None),
                None => {
                    let (basis, t) = buchberger(&problem.elements, &problem.module)?;
                    (basis, Some(t))
                }
            };
            let payload = GbOut::build(&problem, &basis, matrices.then_some(transitions.as_ref()).flatten());
            if json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                let label = match basis.kind {
                    GbKind::Full => "left Gröbner basis".to_string(),
                    GbKind::Truncated(n0) => format!("{n0}-truncated left Gröbner basis"),
                };
                writeln!(out, "{label} ({} elements):", payload.basis.len())?;
                for (element, degree) in payload.basis.iter().zip(&payload.degrees) {
                    writeln!(out, "  {element}   (degree {degree})")?;
                }
                writeln!(out, "reduced form ({} elements):", payload.reduced.len())?;
                for element in &payload.reduced {
                    writeln!(out, "  {element}")?;
                }
                if let Some(u) = &payload.u {
                    writeln!(out, "U (input = U*basis):")?;
                    for row in u {
                        writeln!(out, "  [{}]", row.join(", "))?;
                    }
                }
                if let Some(v) = &payload.v {
                    writeln!(out, "V (basis = V*input):")?;
                    for row in v {
                        writeln!(out, "  [{}]", row.join(", "))?;
                    }
                }
            }
            Ok(())
        }
        Command::Mingens { input, early_stop, json } => {
            let problem = parse_problem(&read_input(&input)?)?;
            let minimal = min_gens_gb(&problem.elements, &problem.module, early_stop)?;
            let payload = MingensOut {
                format: 1,
                task: "mingens",
                selected: minimal.selected.iter().map(|&l| l + 1).collect(),
                minimal_generators: minimal
                    .selected
                    .iter()
                    .map(|&l| render_element(&problem.elements[l], &problem.module))
                    .collect(),
                basis: minimal
                    .basis
                    .elements
                    .iter()
                    .map(|e| render_element(e, &problem.module))
                    .collect(),
                degrees: degrees_of(&minimal.basis.elements, &problem.module),
                truncated: match minimal.basis.kind {
                    GbKind::Full => None,
                    GbKind::Truncated(n0) => Some(n0),
                },
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(
                    out,
                    "minimal homogeneous generating set ({} of {} elements):",
                    payload.selected.len(),
                    problem.elements.len()
                )?;
                for (index, element) in payload.selected.iter().zip(&payload.minimal_generators) {
                    writeln!(out, "  #{index}: {element}")?;
                }
                writeln!(out, "Gröbner basis ({} elements):", payload.basis.len())?;
                for element in &payload.basis {
                    writeln!(out, "  {element}")?;
                }
            }
            Ok(())
        }
        Command::Minpres { input, json } => {
            let problem = parse_problem(&read_input(&input)?)?;
            let presentation = Presentation::new(problem.module.clone(), problem.elements.clone())?;
            let minimized = minimize(&presentation)?;
            let payload = MinpresOut {
                format: 1,
                task: "minpres",
                kept: minimized.kept.iter().map(|&i| i + 1).collect(),
                shifts: minimized.module.shifts().to_vec(),
                relations: minimized
                    .relations
                    .iter()
                    .map(|r| render_element(r, &minimized.module))
                    .collect(),
                log: minimized
                    .log
                    .iter()
                    .map(|record| PivotOut {
                        relation: record.relation + 1,
                        component: record.component + 1,
                        dropped: record.dropped,
                        substitutions: record
                            .substitutions
                            .iter()
                            .map(|(l, f)| (l + 1, f.render(problem.module.algebra())))
                            .collect(),
                    })
                    .collect(),
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(out, "kept components: {:?}", payload.kept)?;
                writeln!(out, "shifts: {:?}", payload.shifts)?;
                writeln!(out, "relations ({}):", payload.relations.len())?;
                for relation in &payload.relations {
                    writeln!(out, "  {relation}")?;
                }
                for pivot in &payload.log {
                    writeln!(
                        out,
                        "eliminated component {} via relation {} ({} relations dropped)",
                        pivot.component, pivot.relation, pivot.dropped
                    )?;
                }
            }
            Ok(())
        }
        Command::Syz { input, json } => {
            let problem = parse_problem(&read_input(&input)?)?;
            let inputs: Vec<ModuleElement> =
                problem.elements.iter().filter(|e| !e.is_zero()).cloned().collect();
            let (basis, transitions) = buchberger(&inputs, &problem.module)?;
            let syzygies = syzygies_of_generators(&inputs, &basis, &transitions)?;
            let payload = SyzOut {
                format: 1,
                task: "syz",
                rows: syzygies
                    .generators
                    .iter()
                    .map(|g| SyzRow {
                        provenance: provenance_label(&g.provenance),
                        element: components_of(&g.element, &syzygies.module),
                    })
                    .collect(),
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(out, "syzygy generators ({} rows):", payload.rows.len())?;
                for row in &payload.rows {
                    writeln!(out, "  {}: [{}]", row.provenance, row.element.join(", "))?;
                }
            }
            Ok(())
        }
        Command::Resolve { input, betti: show_betti, verify, json } => {
            let problem = parse_problem(&read_input(&input)?)?;
            let presentation = Presentation::new(problem.module.clone(), problem.elements.clone())?;
            let resolution = minimal_free_resolution(&presentation)?;
            let table = betti(&resolution);
            let verified = if verify {
                let report = verify_resolution(&resolution)?;
                if !report.is_valid() {
                    return Err(Box::new(FrontendError::Validation { report }));
                }
                Some(true)
            } else {
                None
            };
            let algebra = problem.module.algebra();
            let payload = ResolveOut {
                format: 1,
                task: "resolve",
                length: resolution.length(),
                steps: resolution
                    .steps
                    .iter()
                    .map(|step| StepOut {
                        rank: step.module.rank(),
                        shifts: step.module.shifts().to_vec(),
                        matrix: step
                            .matrix
                            .iter()
                            .map(|row| row.iter().map(|p| p.render(algebra)).collect())
                            .collect(),
                    })
                    .collect(),
                betti: table
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(index, row)| BettiOut {
                        index,
                        rank: row.rank,
                        shifts: row.shifts.clone(),
                    })
                    .collect(),
                verified,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            } else {
                writeln!(out, "minimal graded free resolution of length {}", payload.length)?;
                for (i, step) in payload.steps.iter().enumerate() {
                    if i == 0 {
                        writeln!(out, "L_0: rank {}, shifts {:?}", step.rank, step.shifts)?;
                    } else {
                        writeln!(
                            out,
                            "phi_{i}: L_{i} -> L_{}, rank {}, shifts {:?}",
                            i - 1,
                            step.rank,
                            step.shifts
                        )?;
                        for row in &step.matrix {
                            writeln!(out, "  [{}]", row.join(", "))?;
                        }
                    }
                }
                if show_betti {
                    writeln!(out, "betti:")?;
                    for row in &payload.betti {
                        writeln!(out, "  {}: rank {}, shifts {:?}", row.index, row.rank, row.shifts)?;
                    }
                }
                if verified.is_some() {
                    writeln!(out, "verified: ok")?;
                }
            }
            Ok(())
        }
    }
}

fn render_element(element: &ModuleElement, module: &GradedFreeModule) -> String {
    element.render(module)
}

fn components_of(element: &ModuleElement, module: &GradedFreeModule) -> Vec<String> {
    element
        .components(module)
        .iter()
        .map(|p: &Polynomial| p.render(module.algebra()))
        .collect()
}

fn degrees_of(elements: &[ModuleElement], module: &GradedFreeModule) -> Vec<u64> {
    elements
        .iter()
        .map(|e| e.weighted_degree(module).unwrap_or(0))
        .collect()
}

fn provenance_label(provenance: &Provenance) -> String {
    match provenance {
        Provenance::Schreyer { i, j } => format!("s({},{})", i + 1, j + 1),
        Provenance::Transported { row } => format!("transported({})", row + 1),
        Provenance::Diagonal { row } => format!("diagonal({})", row + 1),
    }
}

#[derive(Serialize)]
struct CheckOut {
    format: u32,
    task: &'static str,
    solvable: bool,
    graded: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct GbOut {
    format: u32,
    task: &'static str,
    basis: Vec<String>,
    reduced: Vec<String>,
    degrees: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncated: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<Vec<Vec<String>>>,
}

impl GbOut {
    fn build(problem: &ProblemFile, basis: &GroebnerBasis, matrices: Option<&TransitionMatrices>) -> GbOut {
        let module: &Arc<GradedFreeModule> = &problem.module;
        let algebra = module.algebra();
        let render_matrix = |matrix: &Vec<Vec<Polynomial>>| -> Vec<Vec<String>> {
            matrix
                .iter()
                .map(|row| row.iter().map(|p| p.render(algebra)).collect())
                .collect()
        };
        GbOut {
            format: 1,
            task: "gb",
            basis: basis.elements.iter().map(|e| render_element(e, module)).collect(),
            reduced: basis.reduced.iter().map(|e| render_element(e, module)).collect(),
            degrees: degrees_of(&basis.elements, module),
            truncated: match basis.kind {
                GbKind::Full => None,
                GbKind::Truncated(n0) => Some(n0),
            },
            u: matrices.map(|t| render_matrix(&t.u)),
            v: matrices.map(|t| render_matrix(&t.v)),
        }
    }
}

#[derive(Serialize)]
struct MingensOut {
    format: u32,
    task: &'static str,
    selected: Vec<usize>,
    minimal_generators: Vec<String>,
    basis: Vec<String>,
    degrees: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncated: Option<u64>,
}

#[derive(Serialize)]
struct PivotOut {
    relation: usize,
    component: usize,
    dropped: usize,
    substitutions: Vec<(usize, String)>,
}

#[derive(Serialize)]
struct MinpresOut {
    format: u32,
    task: &'static str,
    kept: Vec<usize>,
    shifts: Vec<u64>,
    relations: Vec<String>,
    log: Vec<PivotOut>,
}

#[derive(Serialize)]
struct SyzRow {
    provenance: String,
    element: Vec<String>,
}

#[derive(Serialize)]
struct SyzOut {
    format: u32,
    task: &'static str,
    rows: Vec<SyzRow>,
}

#[derive(Serialize)]
struct StepOut {
    rank: usize,
    shifts: Vec<u64>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct BettiOut {
    index: usize,
    rank: usize,
    shifts: Vec<u64>,
}

#[derive(Serialize)]
struct ResolveOut {
    format: u32,
    task: &'static str,
    length: usize,
    steps: Vec<StepOut>,
    betti: Vec<BettiOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}
