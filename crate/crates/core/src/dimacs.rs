//! DIMACS CNF reading and writing.
//!
//! The parser is deliberately forgiving about the things real benchmark
//! files get wrong: declared header counts are advisory (actual content
//! wins, with a warning), duplicate literals inside a clause are dropped,
//! tautological clauses are removed, and an empty clause marks the formula
//! trivially unsatisfiable instead of failing the parse.

use crate::cnf::{Clause, Formula, Literal, Var};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("malformed header on line {line}: {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("invalid token {token:?} on line {line}")]
    InvalidToken { line: usize, token: String },
    #[error("tokens before the problem header on line {line}")]
    TokensBeforeHeader { line: usize },
}

/// Preprocessing notes and header reconciliation warnings collected while
/// parsing. None of these abort the parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    /// A literal occurred twice in one clause; the duplicate was removed.
    DuplicateLiteral { clause: usize, lit: i32 },
    /// A clause contained both v and -v and was dropped.
    TautologyDropped { clause: usize, var: Var },
    /// The input contained an empty clause; the formula is trivially UNSAT.
    EmptyClause { clause: usize },
    /// Header clause count disagrees with the number of clauses read.
    ClauseCountMismatch { declared: usize, actual: usize },
    /// A literal referenced a variable above the declared count; the
    /// variable count was extended to cover it.
    VarCountExtended { declared: Var, actual: Var },
    /// The file ended inside a clause (missing terminating 0).
    UnterminatedClause,
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::DuplicateLiteral { clause, lit } => {
                write!(f, "clause {clause}: duplicate literal {lit} removed")
            }
            ParseWarning::TautologyDropped { clause, var } => {
                write!(f, "clause {clause}: tautological on variable {var}, dropped")
            }
            ParseWarning::EmptyClause { clause } => {
                write!(f, "clause {clause}: empty clause, formula is trivially UNSAT")
            }
            ParseWarning::ClauseCountMismatch { declared, actual } => {
                write!(f, "header declares {declared} clauses, found {actual}")
            }
            ParseWarning::VarCountExtended { declared, actual } => {
                write!(f, "header declares {declared} variables, literals reach {actual}")
            }
            ParseWarning::UnterminatedClause => {
                write!(f, "input ended inside a clause (missing terminating 0)")
            }
        }
    }
}

/// Result of a successful parse: the preprocessed formula plus any notes.
#[derive(Debug, Clone)]
pub struct ParsedDimacs {
    pub formula: Formula,
    pub warnings: Vec<ParseWarning>,
}

/// Parses DIMACS CNF text. Clause order is preserved; clauses are
/// deduplicated and tautologies dropped so downstream consumers never see
/// degenerate clauses.
pub fn parse_dimacs(text: &str) -> Result<ParsedDimacs, ParseError> {
    let mut declared_vars: Option<Var> = None;
    let mut declared_clauses: Option<usize> = None;
    let mut warnings = Vec::new();
    let mut clauses = Vec::new();
    let mut trivially_unsat = false;

    let mut current: Vec<i32> = Vec::new();
    let mut raw_clauses = 0usize; // clause records read, pre-preprocessing
    let mut max_var: Var = 0;

    'lines: for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        // SATLIB corpora terminate with a lone `%`; treat it as EOF.
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if declared_vars.is_some() {
                return Err(ParseError::MalformedHeader {
                    line: line_no,
                    text: trimmed.to_string(),
                });
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let (vars, n_clauses) = match fields.as_slice() {
                ["p", "cnf", v, c] => match (v.parse::<Var>(), c.parse::<usize>()) {
                    (Ok(v), Ok(c)) => (v, c),
                    _ => {
                        return Err(ParseError::MalformedHeader {
                            line: line_no,
                            text: trimmed.to_string(),
                        })
                    }
                },
                _ => {
                    return Err(ParseError::MalformedHeader {
                        line: line_no,
                        text: trimmed.to_string(),
                    })
                }
            };
            declared_vars = Some(vars);
            declared_clauses = Some(n_clauses);
            continue;
        }
        if declared_vars.is_none() {
            return Err(ParseError::TokensBeforeHeader { line: line_no });
        }
        for token in trimmed.split_whitespace() {
            let value: i32 = token.parse().map_err(|_| ParseError::InvalidToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if value == 0 {
                raw_clauses += 1;
                finish_clause(
                    std::mem::take(&mut current),
                    raw_clauses,
                    &mut clauses,
                    &mut warnings,
                    &mut trivially_unsat,
                );
            } else {
                max_var = max_var.max(value.unsigned_abs());
                current.push(value);
            }
        }
        // keep scanning; clauses may span lines
        continue 'lines;
    }

    if !current.is_empty() {
        warnings.push(ParseWarning::UnterminatedClause);
        raw_clauses += 1;
        finish_clause(
            current,
            raw_clauses,
            &mut clauses,
            &mut warnings,
            &mut trivially_unsat,
        );
    }

    let declared_vars = declared_vars.ok_or(ParseError::MissingHeader)?;
    let declared_clauses = declared_clauses.unwrap();

    if raw_clauses != declared_clauses {
        warnings.push(ParseWarning::ClauseCountMismatch {
            declared: declared_clauses,
            actual: raw_clauses,
        });
    }
    let num_vars = if max_var > declared_vars {
        warnings.push(ParseWarning::VarCountExtended {
            declared: declared_vars,
            actual: max_var,
        });
        max_var
    } else {
        declared_vars
    };

    let mut formula = Formula::new(num_vars, clauses);
    if trivially_unsat {
        formula = formula.with_empty_clause();
    }
    Ok(ParsedDimacs { formula, warnings })
}

fn finish_clause(
    raw: Vec<i32>,
    clause_no: usize,
    clauses: &mut Vec<Clause>,
    warnings: &mut Vec<ParseWarning>,
    trivially_unsat: &mut bool,
) {
    if raw.is_empty() {
        warnings.push(ParseWarning::EmptyClause { clause: clause_no });
        *trivially_unsat = true;
        return;
    }
    let mut lits: Vec<i32> = Vec::with_capacity(raw.len());
    for lit in raw {
        if lits.contains(&-lit) {
            warnings.push(ParseWarning::TautologyDropped {
                clause: clause_no,
                var: lit.unsigned_abs(),
            });
            return;
        }
        if lits.contains(&lit) {
            warnings.push(ParseWarning::DuplicateLiteral {
                clause: clause_no,
                lit,
            });
            continue;
        }
        lits.push(lit);
    }
    clauses.push(Clause::new(
        lits.into_iter().map(Literal::new).collect(),
    ));
}

/// Serializes a formula back to DIMACS. `parse_dimacs(write_dimacs(f))`
/// reproduces `f` structurally for preprocessed formulas. A trivially
/// unsatisfiable formula is written with one trailing empty clause so the
/// flag round-trips.
pub fn write_dimacs(formula: &Formula) -> String {
    let extra = usize::from(formula.trivially_unsat());
    let mut out = format!(
        "p cnf {} {}\n",
        formula.num_vars(),
        formula.num_clauses() + extra
    );
    for clause in formula.clauses() {
        for lit in clause.iter() {
            out.push_str(&lit.encoded().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    if formula.trivially_unsat() {
        out.push_str("0\n");
    }
    out
}
