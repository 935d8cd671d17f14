//! Pair permutations: the minimal-length `w` with `w⁻¹ ∘ J̄_n ∘ w = ι`.
//!
//! The equation says `w` carries every arc `{x, ι(x)}` of `ι` onto an arc
//! `{2k−1, 2k}` of `J̄_n`. The candidates are therefore indexed by a
//! bijection between the two arc sets together with an orientation of each
//! arc, `n!·2ⁿ` in all, and the search keeps those of least length.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpf::FpfInvolution;
use crate::perm::Permutation;

/// Default bound on `2n` for [`pair_permutations`].
pub const DEFAULT_PAIR_SEARCH_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPermutationSet {
    pub iota: FpfInvolution,
    /// Sorted by one-line word.
    pub perms: Vec<Permutation>,
    /// Common length of every element.
    pub length: usize,
}

/// `w⁻¹ ∘ J̄_n ∘ w = ι`, composing as functions on one-line words.
pub fn conjugation_check(w: &Permutation, iota: &FpfInvolution) -> Result<bool> {
    if w.len() != iota.size() {
        return Err(Error::SizeMismatch(w.len(), iota.size()));
    }
    let j = FpfInvolution::j_bar(iota.n());
    let conj = w.inverse().compose(&j.perm().compose(w)?)?;
    Ok(&conj == iota.perm())
}

pub fn pair_permutations(iota: &FpfInvolution, bound: usize) -> Result<PairPermutationSet> {
    if iota.size() > bound {
        return Err(Error::BoundExceeded {
            requested: iota.size(),
            limit: bound,
        });
    }
    let n = iota.n();
    let arcs = iota.arcs();
    let mut best: Option<usize> = None;
    let mut perms = Vec::new();
    let mut map = vec![0usize; 2 * n];
    for targets in (0..n).permutations(n) {
        for orient in 0u32..(1 << n) {
            for (k, &(x, y)) in arcs.iter().enumerate() {
                let (lo, hi) = (2 * targets[k], 2 * targets[k] + 1);
                let (wx, wy) = if orient >> k & 1 == 0 { (lo, hi) } else { (hi, lo) };
                map[x - 1] = wx;
                map[y - 1] = wy;
            }
            let w = Permutation::from_zero_based(map.clone());
            let len = w.length();
            match best {
                Some(b) if len > b => {}
                Some(b) if len == b => perms.push(w),
                _ => {
                    best = Some(len);
                    perms.clear();
                    perms.push(w);
                }
            }
        }
    }
    perms.sort();
    Ok(PairPermutationSet {
        iota: iota.clone(),
        perms,
        length: best.unwrap_or(0),
    })
}

/// The conjugation convention selects `P(4321) = {1342, 3124}`.
pub fn convention_self_test() -> bool {
    let iota: FpfInvolution = "4321".parse().expect("valid involution");
    pair_permutations(&iota, 4)
        .map(|p| p.perms.iter().map(ToString::to_string).collect::<Vec<_>>() == ["1342", "3124"])
        .unwrap_or(false)
}
