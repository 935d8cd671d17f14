//! Permutations in one-line notation and the Schubert toolkit built on them:
//! rank matrices, Rothe diagrams, essential sets, length and Bruhat order.
//!
//! All input and output is 1-based. Internally the word is stored 0-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from a 1-based one-line word.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            map: word.into_iter().map(|v| v - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Self { map }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    /// The longest element `N (N-1) ... 1`.
    pub fn reverse(n: usize) -> Self {
        Self {
            map: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// One-line word, 1-based.
    pub fn word(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.map
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }

    /// Function composition `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(self.len(), other.len()));
        }
        Ok(Self {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    /// Right multiplication by the transposition `t_ij`: swaps positions `i`
    /// and `j` (1-based) of the one-line word.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut map = self.map.clone();
        map.swap(i - 1, j - 1);
        Self { map }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn rank_matrix(&self) -> RankMatrix {
        let n = self.len();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let above = if i == 0 { 0 } else { entries[(i - 1) * n + j] };
                entries[i * n + j] = above + u32::from(self.map[i] <= j);
            }
        }
        RankMatrix { size: n, entries }
    }

    /// Cells `(i, j)` with `j < π(i)` and `π⁻¹(j) > i`.
    pub fn rothe_diagram(&self) -> Diagram {
        let inv = self.inverse();
        let mut cells = BTreeSet::new();
        for i in 0..self.len() {
            for j in 0..self.map[i] {
                if inv.map[j] > i {
                    cells.insert((i + 1, j + 1));
                }
            }
        }
        Diagram { cells }
    }

    pub fn essential_set(&self) -> EssentialSet {
        let diagram = self.rothe_diagram();
        let ranks = self.rank_matrix();
        EssentialSet::from_diagram(&diagram, &ranks)
    }

    /// All permutations of size `n` in lexicographic order of their words.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n)
            .permutations(n)
            .map(|map| Permutation { map })
    }
}

impl fmt::Display for Permutation {
    /// Concatenated digits when every value is a single digit, otherwise
    /// comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in self.word() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word().iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `13425`, `1,3,4,2,5`, `1 3 4 2 5` or a JSON array.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let word: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word()
    }
}

/// `entries[i][j] = #{k ≤ i : π(k) ≤ j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl RankMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// 1-based lookup; row or column 0 reads as 0.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            0
        } else {
            self.entries[(i - 1) * self.size + (j - 1)]
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        if self.size == 0 {
            return Vec::new();
        }
        self.entries.chunks(self.size).map(<[u32]>::to_vec).collect()
    }

    /// Entrywise `self ≥ other`.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        self.size == other.size
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a >= b)
    }
}

impl Serialize for RankMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(d)?;
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(serde::de::Error::custom("rank matrix must be square"));
        }
        Ok(RankMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

/// A set of 1-based `(row, col)` cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Diagram {
    pub cells: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.cells.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EssentialBox {
    pub row: usize,
    pub col: usize,
    pub rank: u32,
}

impl Serialize for EssentialBox {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col, self.rank).serialize(s)
    }
}

impl<'de> Deserialize<'de> for EssentialBox {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (row, col, rank) = <(usize, usize, u32)>::deserialize(d)?;
        Ok(EssentialBox { row, col, rank })
    }
}

/// SE-maximal cells of a diagram, each with its rank-matrix value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EssentialSet {
    pub boxes: Vec<EssentialBox>,
}

impl EssentialSet {
    /// Cells of `diagram` with no diagram cell immediately south or east.
    pub fn from_diagram(diagram: &Diagram, ranks: &RankMatrix) -> Self {
        let boxes = diagram
            .cells
            .iter()
            .filter(|&&(i, j)| !diagram.contains(i + 1, j) && !diagram.contains(i, j + 1))
            .map(|&(row, col)| EssentialBox {
                row,
                col,
                rank: ranks.get(row, col),
            })
            .collect();
        Self { boxes }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn triples(&self) -> Vec<(usize, usize, u32)> {
        self.boxes.iter().map(|b| (b.row, b.col, b.rank)).collect()
    }
}

/// Bruhat order `p ≤ q`.
///
/// The identity has the entrywise-largest rank matrix, so `p ≤ q` holds iff
/// `r(p) ≥ r(q)` entrywise. This direction is checked against the transitive
/// closure of [`bruhat_covers`] on all of S_4 in the test suite.
pub fn bruhat_leq(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    Ok(p.rank_matrix().dominates(&q.rank_matrix()))
}

/// `upper` covers `lower`: `upper = lower · t_ij` with `l(upper) = l(lower) + 1`.
pub fn bruhat_covers(upper: &Permutation, lower: &Permutation) -> Result<bool> {
    if upper.len() != lower.len() {
        return Err(Error::SizeMismatch(upper.len(), lower.len()));
    }
    if upper.length() != lower.length() + 1 {
        return Ok(false);
    }
    let diff: Vec<usize> = (0..upper.len())
        .filter(|&k| upper.map[k] != lower.map[k])
        .collect();
    Ok(diff.len() == 2
        && upper.map[diff[0]] == lower.map[diff[1]]
        && upper.map[diff[1]] == lower.map[diff[0]])
}
