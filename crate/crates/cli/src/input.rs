//! Parsing of the file and string inputs accepted on the command line.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use sporbits_core::fpf::FpfInvolution;
use sporbits_core::ideals::QMatrix;
use sporbits_core::poly::{Ideal, TermOrder, VariableSet};
use sporbits_core::Permutation;

pub fn involution(word: &str) -> Result<FpfInvolution> {
    word.parse()
        .with_context(|| format!("parsing involution {word:?}"))
}

pub fn permutation(word: &str) -> Result<Permutation> {
    word.parse()
        .with_context(|| format!("parsing permutation {word:?}"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// A square matrix written as a JSON array of rows of rational strings.
pub fn matrix_file(path: &Path) -> Result<QMatrix> {
    let rows: Vec<Vec<String>> = serde_json::from_str(&read(path)?)
        .with_context(|| format!("parsing matrix {}", path.display()))?;
    Ok(QMatrix::from_strings(&rows)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IdealFile {
    Full(Ideal),
    Bare(Vec<String>),
}

/// Variables mentioned in polynomial strings: `m[i,j]` entries fix the
/// matrix size, other identifiers become auxiliaries in order of appearance.
pub fn infer_vars<S: AsRef<str>>(polys: &[S]) -> Result<VariableSet> {
    let mut size = 0;
    let mut aux: Vec<String> = Vec::new();
    for p in polys {
        let s = p.as_ref();
        let mut chars = s.char_indices().peekable();
        while let Some((start, c)) = chars.next() {
            if !(c.is_alphabetic() || c == '_') {
                continue;
            }
            let mut end = start + c.len_utf8();
            while let Some(&(k, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    end = k + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let name = &s[start..end];
            if name == "m" && s[end..].starts_with('[') {
                let close = s[end..]
                    .find(']')
                    .with_context(|| format!("unclosed matrix index in {s:?}"))?;
                let inner = &s[end + 1..end + close];
                for part in inner.split(',') {
                    let k: usize = part
                        .trim()
                        .parse()
                        .with_context(|| format!("bad matrix index {inner:?}"))?;
                    size = size.max(k);
                }
                while chars.peek().is_some_and(|&(k, _)| k <= end + close) {
                    chars.next();
                }
            } else if !aux.iter().any(|a| a == name) {
                aux.push(name.to_string());
            }
        }
    }
    Ok(VariableSet {
        matrix_size: size,
        aux,
    })
}

pub fn ideal_file(path: &Path) -> Result<Ideal> {
    let parsed: IdealFile = serde_json::from_str(&read(path)?)
        .with_context(|| format!("parsing ideal {}", path.display()))?;
    match parsed {
        IdealFile::Full(i) => Ok(i),
        IdealFile::Bare(gens) => Ok(Ideal::parse(infer_vars(&gens)?, &gens)?),
    }
}

/// `grevlex`, `lex`, `antidiagonal`, `weight` (least column weight first,
/// antidiagonal tie-break) or an inline JSON term order.
pub fn term_order(spec: &str, vars: &VariableSet) -> Result<TermOrder> {
    let n = vars.len();
    let needs_matrix = |name: &str| -> Result<()> {
        if vars.matrix_size == 0 || !vars.aux.is_empty() {
            bail!("order {name:?} needs an ideal in matrix variables only");
        }
        Ok(())
    };
    Ok(match spec.trim() {
        "grevlex" => TermOrder::grevlex(n),
        "lex" => TermOrder::lex(n),
        "antidiagonal" => {
            needs_matrix("antidiagonal")?;
            TermOrder::antidiagonal(vars)
        }
        "weight" => {
            needs_matrix("weight")?;
            TermOrder::min_weight_refinement(
                &TermOrder::column_weights(vars),
                TermOrder::antidiagonal(vars),
            )
        }
        s if s.starts_with('{') => {
            serde_json::from_str(s).with_context(|| format!("parsing term order {s:?}"))?
        }
        other => bail!("unknown term order {other:?}"),
    })
}
