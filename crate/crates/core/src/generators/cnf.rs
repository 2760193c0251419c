use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonzero signed variable index; `-3` is the negation of variable 3.
pub type Literal = i32;

/// Truth values indexed by variable (`assignment[0]` is variable 1).
pub type Assignment = Vec<bool>;

/// A 3-CNF formula over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::MalformedCnf("formula has no variables".into()));
        }
        for (j, clause) in clauses.iter().enumerate() {
            for (a, &lit) in clause.iter().enumerate() {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(Error::MalformedCnf(format!(
                        "clause {} has literal {lit} outside 1..={num_vars}",
                        j + 1
                    )));
                }
                if clause[..a].contains(&lit) {
                    return Err(Error::MalformedCnf(format!(
                        "clause {} repeats literal {lit}",
                        j + 1
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Index of the first clause `assignment` leaves unsatisfied.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Result<Option<usize>> {
        if assignment.len() != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                got: assignment.len(),
            });
        }
        Ok(self.clauses.iter().position(|c| {
            !c.iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        }))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(out, "{} {} {} 0", c[0], c[1], c[2]);
        }
        out
    }
}

/// Parses DIMACS CNF. Every clause must have exactly three distinct literals.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts.as_slice() {
                ["cnf", n, m] if header.is_none() => {
                    let parse = |s: &str| {
                        s.parse::<usize>().map_err(|_| {
                            Error::MalformedCnf(format!("line {}: bad header count {s:?}", lineno + 1))
                        })
                    };
                    header = Some((parse(n)?, parse(m)?));
                }
                _ => {
                    return Err(Error::MalformedCnf(format!("line {}: bad problem line", lineno + 1)));
                }
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::MalformedCnf(format!("line {}: clause before header", lineno + 1)));
        }
        for tok in line.split_whitespace() {
            let lit: Literal = tok
                .parse()
                .map_err(|_| Error::MalformedCnf(format!("line {}: bad literal {tok:?}", lineno + 1)))?;
            if lit == 0 {
                let clause: [Literal; 3] = current.as_slice().try_into().map_err(|_| {
                    Error::MalformedCnf(format!(
                        "clause {} has {} literals, expected 3",
                        clauses.len() + 1,
                        current.len()
                    ))
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::MalformedCnf("missing `p cnf` header".into()))?;
    if !current.is_empty() {
        return Err(Error::MalformedCnf("last clause is not terminated by 0".into()));
    }
    if clauses.len() != m {
        return Err(Error::MalformedCnf(format!(
            "header declares {m} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(n, clauses)
}
