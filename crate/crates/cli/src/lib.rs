//! Command implementations behind the `semisolve` binary. Each command takes
//! the input document text and returns the output document plus an exit
//! code, leaving file handling to `main`.

mod document;

use std::collections::BTreeMap;

use semisolve::{
    bideterminant, det_eps, preprocess_system, pseudo_inverse, solve, solve_all, verify_solution,
    Certificate, Error, ExactMatrix, ExactOutcome, ExactVector, Flavor, Method, Rational,
    ReducedSystem, Reduction, Scalar,
};
use serde::Serialize;
use thiserror::Error;

pub use document::SystemDocument;
use document::{format_matrix, format_scalar, to_json};

pub const EXIT_SOLVABLE: u8 = 0;
pub const EXIT_UNSOLVABLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_THEOREM_VIOLATION: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("matrix is singular: det_eps(A) is zero")]
    Singular,
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Singular => EXIT_UNSOLVABLE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    One(Method),
    All,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateBlock {
    ViolatedInequality { row: usize, col: usize },
    UncoveredRow { row: usize },
}

impl From<&Certificate> for CertificateBlock {
    fn from(c: &Certificate) -> Self {
        match *c {
            Certificate::ViolatedInequality { row, col } => {
                CertificateBlock::ViolatedInequality { row, col }
            }
            Certificate::UncoveredRow { row } => CertificateBlock::UncoveredRow { row },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MethodBlock {
    pub method: &'static str,
    pub solvable: bool,
    pub solution: Option<Vec<String>>,
    pub certificate: Option<CertificateBlock>,
    pub residual_check: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct EquivalenceBlock {
    pub pairwise_equal: BTreeMap<String, bool>,
    pub lu_condition_holds: Option<bool>,
    pub diagonal_solution_check: Option<bool>,
    pub theorem_violation: bool,
    pub criterion_gap: bool,
}

#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub semifield: &'static str,
    pub forced_zero_variables: Vec<usize>,
    pub methods: Vec<MethodBlock>,
    pub equivalence: Option<EquivalenceBlock>,
    pub residual_check: bool,
}

#[derive(Debug, Serialize)]
pub struct DetDocument {
    pub semifield: &'static str,
    pub plus: String,
    pub minus: String,
    pub det_eps: String,
}

#[derive(Debug, Serialize)]
pub struct PinvDocument {
    pub semifield: &'static str,
    pub det_eps: String,
    pub pseudo_inverse: Vec<Vec<String>>,
    pub product: Vec<Vec<String>>,
}

/// Text output of a command and the process exit code it calls for.
#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: u8,
}

fn require_rhs(doc: &SystemDocument) -> Result<&ExactVector, CliError> {
    doc.b
        .as_ref()
        .ok_or_else(|| CliError::Input("document has no right-hand side b".into()))
}

fn method_block(
    doc: &SystemDocument,
    reduced: &ReducedSystem<Rational>,
    outcome: &ExactOutcome,
) -> Result<MethodBlock, CliError> {
    let b = require_rhs(doc)?;
    let (solution, residual_check) = match &outcome.solution {
        Some(x) => {
            let full = reduced.expand_solution(doc.flavor, x)?;
            let text = full
                .iter()
                .map(|s| format_scalar(doc.flavor, s))
                .collect::<Result<_, _>>()?;
            (Some(text), Some(verify_solution(&doc.a, b, &full)))
        }
        None => (None, None),
    };
    Ok(MethodBlock {
        method: outcome.method.name(),
        solvable: outcome.solvable(),
        solution,
        certificate: outcome
            .certificate
            .as_ref()
            .map(|c| CertificateBlock::from(&c.map_rows(|r| reduced.kept_rows[r]))),
        residual_check,
    })
}

fn unbounded_error(reduced: &ReducedSystem<Rational>, err: Error) -> CliError {
    match err {
        Error::UnboundedVariables(cols) => CliError::Core(Error::UnboundedVariables(
            cols.into_iter().map(|j| reduced.kept_cols[j]).collect(),
        )),
        other => CliError::Core(other),
    }
}

fn requested(choice: MethodChoice) -> Vec<Method> {
    match choice {
        MethodChoice::One(m) => vec![m],
        MethodChoice::All => Method::ALL.to_vec(),
    }
}

/// Runs the requested method(s). Equations with a zero right-hand side are
/// removed first and the variables they force to zero are reported
/// separately; solutions and certificates use the original indices.
pub fn cmd_solve(input: &str, choice: MethodChoice) -> Result<CommandOutput, CliError> {
    let doc = SystemDocument::parse(input)?;
    let b = require_rhs(&doc)?;
    let reduced = preprocess_system(&doc.a, b)?;

    let (outcomes, equivalence) = match &reduced.reduction {
        Reduction::Reduced { matrix, rhs } => match choice {
            MethodChoice::One(m) => (
                vec![solve(m, matrix, rhs).map_err(|e| unbounded_error(&reduced, e))?],
                None,
            ),
            MethodChoice::All => {
                let report = solve_all(matrix, rhs).map_err(|e| unbounded_error(&reduced, e))?;
                let equivalence = EquivalenceBlock {
                    pairwise_equal: report
                        .pairwise_equal
                        .iter()
                        .map(|((p, q), &eq)| (format!("{p}={q}"), eq))
                        .collect(),
                    lu_condition_holds: report.lu_condition_holds,
                    diagonal_solution_check: report.diagonal_solution_check,
                    theorem_violation: report.theorem_violation,
                    criterion_gap: report.criterion_gap,
                };
                (report.outcomes, Some(equivalence))
            }
        },
        Reduction::NoEquations => {
            if !reduced.kept_cols.is_empty() {
                return Err(CliError::Core(Error::UnboundedVariables(
                    reduced.kept_cols.clone(),
                )));
            }
            // every variable is forced to zero, which solves b = 0
            let zero = vec![format_scalar(doc.flavor, &Scalar::Zero)?; doc.a.cols()];
            let blocks = fixed_blocks(choice, |_| (Some(zero.clone()), None));
            return Ok(finish(&doc, &reduced, blocks, None));
        }
        Reduction::Unsolvable { row } => {
            let row = *row;
            let blocks = fixed_blocks(choice, |_| {
                (None, Some(CertificateBlock::UncoveredRow { row }))
            });
            return Ok(finish(&doc, &reduced, blocks, None));
        }
    };

    let methods = outcomes
        .iter()
        .map(|o| method_block(&doc, &reduced, o))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(finish(&doc, &reduced, methods, equivalence))
}

fn fixed_blocks(
    choice: MethodChoice,
    result: impl Fn(Method) -> (Option<Vec<String>>, Option<CertificateBlock>),
) -> Vec<MethodBlock> {
    requested(choice)
        .into_iter()
        .map(|method| {
            let (solution, certificate) = result(method);
            MethodBlock {
                method: method.name(),
                solvable: solution.is_some(),
                residual_check: solution.as_ref().map(|_| true),
                solution,
                certificate,
            }
        })
        .collect()
}

fn finish(
    doc: &SystemDocument,
    reduced: &ReducedSystem<Rational>,
    methods: Vec<MethodBlock>,
    equivalence: Option<EquivalenceBlock>,
) -> CommandOutput {
    let residual_check = methods.iter().all(|m| m.residual_check != Some(false));
    let solvable = methods.iter().all(|m| m.solvable);
    let violation = !residual_check || equivalence.as_ref().is_some_and(|e| e.theorem_violation);

    let exit_code = if violation {
        EXIT_THEOREM_VIOLATION
    } else if solvable {
        EXIT_SOLVABLE
    } else {
        EXIT_UNSOLVABLE
    };
    let doc_out = ResultDocument {
        semifield: doc.flavor.name(),
        forced_zero_variables: reduced.forced_zero_vars.clone(),
        methods,
        equivalence,
        residual_check,
    };
    CommandOutput {
        text: to_json(&doc_out),
        exit_code,
    }
}

fn square_matrix(input: &str) -> Result<(Flavor, ExactMatrix), CliError> {
    let doc = SystemDocument::parse(input)?;
    doc.a.ensure_square()?;
    Ok((doc.flavor, doc.a))
}

pub fn cmd_det(input: &str) -> Result<CommandOutput, CliError> {
    let (f, a) = square_matrix(input)?;
    let bd = bideterminant(&a)?;
    let det = det_eps(&a)?;
    let out = DetDocument {
        semifield: f.name(),
        plus: format_scalar(f, &bd.plus)?,
        minus: format_scalar(f, &bd.minus)?,
        det_eps: format_scalar(f, &det)?,
    };
    Ok(CommandOutput {
        text: to_json(&out),
        exit_code: EXIT_SOLVABLE,
    })
}

pub fn cmd_pinv(input: &str) -> Result<CommandOutput, CliError> {
    let (f, a) = square_matrix(input)?;
    let pinv = match pseudo_inverse(&a) {
        Err(Error::SingularDeterminant) => return Err(CliError::Singular),
        other => other?,
    };
    let product = a.mat_mul(&pinv.matrix)?;
    let out = PinvDocument {
        semifield: f.name(),
        det_eps: format_scalar(f, &pinv.det)?,
        pseudo_inverse: format_matrix(&pinv.matrix)?,
        product: format_matrix(&product)?,
    };
    Ok(CommandOutput {
        text: to_json(&out),
        exit_code: EXIT_SOLVABLE,
    })
}
