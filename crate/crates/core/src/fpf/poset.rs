//! The opposite Bruhat order on fixed-point-free involutions. Longer words are
//! lower; `J̄_n` is the top element.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{enumerate_fpf, FpfInvolution, DEFAULT_MAX_HALF_SIZE};
use crate::error::{Error, Result};
use crate::perm::bruhat_leq;

/// `a ≤ b` in the opposite order, i.e. `b ≤ a` in Bruhat order.
pub fn opposite_leq(a: &FpfInvolution, b: &FpfInvolution) -> Result<bool> {
    bruhat_leq(b.perm(), a.perm())
}

impl FpfInvolution {
    /// Involutions covered by `self`: one outlet switch that lengthens the
    /// word by exactly 2.
    pub fn lower_covers(&self) -> BTreeSet<FpfInvolution> {
        self.switch_neighbours(self.fpf_length() + 2)
    }

    /// Involutions covering `self`: one outlet switch that shortens the word
    /// by exactly 2.
    pub fn upper_covers(&self) -> BTreeSet<FpfInvolution> {
        match self.fpf_length().checked_sub(2) {
            Some(target) => self.switch_neighbours(target),
            None => BTreeSet::new(),
        }
    }

    fn switch_neighbours(&self, target_length: usize) -> BTreeSet<FpfInvolution> {
        let size = self.size();
        let mut out = BTreeSet::new();
        for i in 1..=size {
            for j in i + 1..=size {
                if self.apply(i) == j {
                    continue;
                }
                let k = self.switch(i, j);
                if k.fpf_length() == target_length {
                    out.insert(k);
                }
            }
        }
        out
    }

    /// `self` covers `lower` in the opposite order.
    pub fn covers(&self, lower: &FpfInvolution) -> Result<bool> {
        if self.size() != lower.size() {
            return Err(Error::SizeMismatch(self.size(), lower.size()));
        }
        if lower.fpf_length() != self.fpf_length() + 2 {
            return Ok(false);
        }
        Ok(self.lower_covers().contains(lower))
    }
}

/// Greatest lower bound of `set` among involutions of size `2n`, found by
/// exhaustive search over common lower bounds. `glb(∅) = J̄_n`.
pub fn glb(set: &[FpfInvolution], n: usize) -> Result<FpfInvolution> {
    if let Some(bad) = set.iter().find(|x| x.n() != n) {
        return Err(Error::SizeMismatch(bad.size(), 2 * n));
    }
    if set.is_empty() {
        return Ok(FpfInvolution::j_bar(n));
    }
    let ranks: Vec<_> = set.iter().map(|x| x.perm().rank_matrix()).collect();
    // common lower bounds: Bruhat-above every member, i.e. rank matrix
    // entrywise below every member's
    let lower: Vec<(FpfInvolution, _)> = enumerate_fpf(n, DEFAULT_MAX_HALF_SIZE)?
        .into_iter()
        .map(|k| {
            let r = k.perm().rank_matrix();
            (k, r)
        })
        .filter(|(_, r)| ranks.iter().all(|s| s.dominates(r)))
        .collect();
    // maxima in the opposite order have entrywise-maximal rank matrices
    let maxima: Vec<&FpfInvolution> = lower
        .iter()
        .filter(|(k, r)| {
            !lower
                .iter()
                .any(|(other, ro)| other != k && ro.dominates(r))
        })
        .map(|(k, _)| k)
        .collect();
    match maxima.as_slice() {
        [single] => Ok((*single).clone()),
        many => Err(Error::NoUniqueMeet(
            many.iter().map(|k| k.to_string()).collect(),
        )),
    }
}

/// Materialised Hasse diagram of the opposite order at one size.
#[derive(Debug, Clone)]
pub struct FpfPoset {
    n: usize,
    elements: Vec<FpfInvolution>,
    index: HashMap<FpfInvolution, usize>,
    lower_covers: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub n: usize,
    pub elements: Vec<FpfInvolution>,
    pub lengths: Vec<usize>,
    /// `(upper, lower)` index pairs.
    pub covers: Vec<(usize, usize)>,
}

impl FpfPoset {
    pub fn build(n: usize, max_half_size: usize) -> Result<Self> {
        let elements = enumerate_fpf(n, max_half_size)?;
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(k, x)| (x.clone(), k))
            .collect();
        let lower_covers = elements
            .iter()
            .map(|x| x.lower_covers().iter().map(|c| index[c]).collect())
            .collect();
        Ok(Self {
            n,
            elements,
            index,
            lower_covers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[FpfInvolution] {
        &self.elements
    }

    pub fn index_of(&self, x: &FpfInvolution) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn lower_covers_of(&self, k: usize) -> &[usize] {
        &self.lower_covers[k]
    }

    /// `a ≤ b` by reachability along cover edges from `b` downward.
    pub fn leq_by_covers(&self, a: usize, b: usize) -> bool {
        let mut stack = vec![b];
        let mut seen = vec![false; self.elements.len()];
        while let Some(k) = stack.pop() {
            if k == a {
                return true;
            }
            if std::mem::replace(&mut seen[k], true) {
                continue;
            }
            stack.extend(&self.lower_covers[k]);
        }
        false
    }

    pub fn hasse(&self) -> HasseDiagram {
        HasseDiagram {
            n: self.n,
            elements: self.elements.clone(),
            lengths: self.elements.iter().map(|x| x.fpf_length()).collect(),
            covers: self
                .lower_covers
                .iter()
                .enumerate()
                .flat_map(|(u, ls)| ls.iter().map(move |&l| (u, l)))
                .collect(),
        }
    }

    /// Graphviz rendering, one rank per word length, top element first.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph fpf_poset {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        let mut by_length: Vec<(usize, Vec<usize>)> = Vec::new();
        for (k, x) in self.elements.iter().enumerate() {
            let l = x.fpf_length();
            match by_length.iter_mut().find(|(len, _)| *len == l) {
                Some((_, v)) => v.push(k),
                None => by_length.push((l, vec![k])),
            }
        }
        by_length.sort();
        for (l, ks) in &by_length {
            let _ = writeln!(out, "  {{ rank=same; // length {l}");
            for k in ks {
                let _ = writeln!(out, "    n{k} [label=\"{}\"];", self.elements[*k]);
            }
            out.push_str("  }\n");
        }
        for (u, ls) in self.lower_covers.iter().enumerate() {
            for l in ls {
                let _ = writeln!(out, "  n{u} -> n{l};");
            }
        }
        out.push_str("}\n");
        out
    }
}
