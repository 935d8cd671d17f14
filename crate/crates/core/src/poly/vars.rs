use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Matrix variables `m[i,j]` (`1 ≤ i,j ≤ size`, row-major indices) followed by
/// named auxiliaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSet {
    pub matrix_size: usize,
    pub aux: Vec<String>,
}

impl VariableSet {
    pub fn matrix(size: usize) -> Self {
        Self {
            matrix_size: size,
            aux: Vec::new(),
        }
    }

    /// Only named variables, no matrix block.
    pub fn named<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self {
            matrix_size: 0,
            aux: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.matrix_size * self.matrix_size + self.aux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn matrix_len(&self) -> usize {
        self.matrix_size * self.matrix_size
    }

    /// Index of `m[i,j]`, 1-based `i`, `j`.
    pub fn m(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.matrix_size).contains(&i) && (1..=self.matrix_size).contains(&j),
            "m[{i},{j}] out of range for size {}",
            self.matrix_size
        );
        (i - 1) * self.matrix_size + (j - 1)
    }

    /// `(i, j)` for a matrix-variable index.
    pub fn position(&self, var: usize) -> Option<(usize, usize)> {
        (var < self.matrix_len()).then(|| (var / self.matrix_size + 1, var % self.matrix_size + 1))
    }

    pub fn aux_index(&self, name: &str) -> Option<usize> {
        self.aux
            .iter()
            .position(|a| a == name)
            .map(|k| self.matrix_len() + k)
    }

    /// Appends an auxiliary whose name does not collide with existing ones.
    pub fn with_fresh_aux(&self, stem: &str) -> (Self, usize) {
        let mut name = stem.to_string();
        while self.aux.contains(&name) {
            name.push('\'');
        }
        let mut out = self.clone();
        out.aux.push(name);
        let idx = out.len() - 1;
        (out, idx)
    }

    pub fn name(&self, var: usize) -> String {
        match self.position(var) {
            Some((i, j)) => format!("m[{i},{j}]"),
            None => self.aux[var - self.matrix_len()].clone(),
        }
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        if let Some(inner) = name.strip_prefix("m[").and_then(|s| s.strip_suffix(']')) {
            let (i, j) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad matrix variable {name:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad index in {name:?}: {e}")))
            };
            let (i, j) = (parse(i)?, parse(j)?);
            if !(1..=self.matrix_size).contains(&i) || !(1..=self.matrix_size).contains(&j) {
                return Err(Error::Parse(format!(
                    "{name} outside a {0}x{0} matrix",
                    self.matrix_size
                )));
            }
            return Ok(self.m(i, j));
        }
        self.aux_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))
    }
}
