//! Source instances for the reductions: static graphs and CNF formulas.

use thiserror::Error;

use crate::graph::{GraphError, StaticGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SourceError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("clause {clause} has {len} literals, expected 3")]
    ClauseSize { clause: usize, len: usize },
    #[error("variable {var} appears {positive} times positively and {negative} times negatively, expected 2 and 2")]
    Occurrences { var: u32, positive: usize, negative: usize },
    #[error("header announces {expected} clauses, found {found}")]
    ClauseCount { expected: usize, found: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> SourceError {
    SourceError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses `n` on the first line, then one `u v` pair per line. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_static_graph(text: &str) -> Result<StaticGraph, SourceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(SourceError::MissingHeader)?;
    let n: u32 = header
        .parse()
        .map_err(|_| syntax(hline, format!("expected a vertex count, found {header:?}")))?;
    let mut pairs = Vec::new();
    for (line, text) in lines {
        let nums: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = nums[..] else {
            return Err(syntax(line, "expected two endpoints"));
        };
        let parse = |s: &str| -> Result<Vertex, SourceError> {
            s.parse().map_err(|_| syntax(line, format!("bad vertex {s:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v || u == 0 || v == 0 || u > n || v > n {
            return Err(syntax(line, format!("invalid edge {u} {v} for {n} vertices")));
        }
        pairs.push((u, v));
    }
    Ok(StaticGraph::new(n, &pairs)?)
}

pub fn emit_static_graph(g: &StaticGraph) -> String {
    let mut out = format!("{}\n", g.n);
    for e in &g.edges {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// A CNF formula over variables `1..=num_vars`; literals are signed ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Checks the shape required by the partial domination reduction: three
    /// literals per clause, each variable twice positive and twice negative.
    pub fn check_two_two(&self) -> Result<(), SourceError> {
        for (idx, clause) in self.clauses.iter().enumerate() {
            if clause.len() != 3 {
                return Err(SourceError::ClauseSize {
                    clause: idx + 1,
                    len: clause.len(),
                });
            }
        }
        for var in 1..=self.num_vars {
            let lits = self.clauses.iter().flatten();
            let positive = lits.clone().filter(|&&l| l == var as i32).count();
            let negative = lits.filter(|&&l| l == -(var as i32)).count();
            if positive != 2 || negative != 2 {
                return Err(SourceError::Occurrences {
                    var,
                    positive,
                    negative,
                });
            }
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = assignment[(l.unsigned_abs() - 1) as usize];
                if l > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }
}

/// DIMACS `cnf`: comment lines `c …`, a `p cnf vars clauses` header, and
/// zero-terminated clauses that may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SourceError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            let parts: Vec<&str> = l.split_whitespace().collect();
            match parts[..] {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| syntax(line, "bad variable count"))?;
                    let c = c.parse().map_err(|_| syntax(line, "bad clause count"))?;
                    header = Some((v, c));
                }
                _ => return Err(syntax(line, "expected `p cnf <vars> <clauses>`")),
            }
            continue;
        }
        let (vars, _) = header.ok_or_else(|| syntax(line, "clause before header"))?;
        for tok in l.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| syntax(line, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() > vars {
                return Err(syntax(line, format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, expected) = header.ok_or(SourceError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(SourceError::ClauseCount {
            expected,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula { num_vars, clauses })
}

pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            out.push_str(&format!("{l} "));
        }
        out.push_str("0\n");
    }
    out
}

/// What a reduction starts from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceInstance {
    /// Coloring sources, or domination sources with their budget.
    Graph { graph: StaticGraph, budget: Option<u32> },
    Formula(CnfFormula),
}
