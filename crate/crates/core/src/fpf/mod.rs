//! Fixed-point-free involutions of `{1..2n}`, viewed as wiring diagrams of
//! `n` arcs over `2n` outlets.

mod poset;
mod symplectic;
mod wiring;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use poset::{glb, opposite_leq, FpfPoset, HasseDiagram};
pub use symplectic::{
    basic_kind, basics_decomposition, construct_a_even, construct_a_even_by_search,
    construct_a_odd, construct_a_odd_by_search, odd_rank_constraint_holds,
    symplectic_diagram, symplectic_essential_set, BasicKind, SymplecticEssentialSet,
};
pub use wiring::{parse_wiring, wiring_ascii};

/// Largest half-size `n` accepted by exhaustive enumeration by default
/// (`2n = 10`, 945 involutions).
pub const DEFAULT_MAX_HALF_SIZE: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FpfInvolution {
    perm: Permutation,
}

/// Crossing, nesting and disjoint arc-pair counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStatistics {
    /// crossing pairs (countryside patterns)
    pub c: usize,
    /// nesting pairs (rainbow patterns)
    pub r: usize,
    /// side-by-side pairs
    pub d: usize,
}

impl FpfInvolution {
    pub fn new(perm: Permutation) -> Result<Self> {
        let fpf = (1..=perm.len()).all(|i| {
            let j = perm.apply(i);
            j != i && perm.apply(j) == i
        });
        if !fpf || perm.len() % 2 != 0 {
            return Err(Error::NotFpfInvolution(perm.to_string()));
        }
        Ok(Self { perm })
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        Self::new(Permutation::new(word)?)
    }

    /// Builds an involution from its arcs (1-based outlet pairs).
    pub fn from_arcs(size: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut word = vec![0; size];
        for &(a, b) in arcs {
            if a == 0 || b == 0 || a > size || b > size || word[a - 1] != 0 || word[b - 1] != 0
            {
                return Err(Error::NotFpfInvolution(format!("arcs {arcs:?}")));
            }
            word[a - 1] = b;
            word[b - 1] = a;
        }
        Self::from_word(word)
    }

    /// `J̄_n = 2143⋯(2n)(2n−1)`.
    pub fn j_bar(n: usize) -> Self {
        let map = (0..2 * n).map(|i| i ^ 1).collect();
        Self {
            perm: Permutation::from_zero_based(map),
        }
    }

    /// Half-size `n`.
    pub fn n(&self) -> usize {
        self.perm.len() / 2
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn word(&self) -> Vec<usize> {
        self.perm.word()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm.apply(i)
    }

    /// Arcs `(i, ι(i))` with `i < ι(i)`, ordered by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .filter_map(|i| {
                let j = self.apply(i);
                (i < j).then_some((i, j))
            })
            .collect()
    }

    /// Places the wiring diagrams side by side.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.size();
        let map = self
            .perm
            .zero_based()
            .iter()
            .copied()
            .chain(other.perm.zero_based().iter().map(|v| v + shift))
            .collect();
        Self {
            perm: Permutation::from_zero_based(map),
        }
    }

    pub fn pair_statistics(&self) -> PairStatistics {
        let arcs = self.arcs();
        let mut stats = PairStatistics::default();
        for (k, &(_, b)) in arcs.iter().enumerate() {
            for &(x, y) in &arcs[k + 1..] {
                // a < x by ordering of arcs
                if y < b {
                    stats.r += 1;
                } else if x < b {
                    stats.c += 1;
                } else {
                    stats.d += 1;
                }
            }
        }
        stats
    }

    /// `n + 2c + 4r`; equals the inversion count of the word.
    pub fn fpf_length(&self) -> usize {
        let s = self.pair_statistics();
        self.n() + 2 * s.c + 4 * s.r
    }

    /// Switches the plugs in outlets `i` and `j`, i.e. conjugates by `t_ij`.
    pub fn switch(&self, i: usize, j: usize) -> Self {
        let mut map = self.perm.zero_based().to_vec();
        let (i, j) = (i - 1, j - 1);
        map.swap(i, j);
        for v in map.iter_mut() {
            if *v == i {
                *v = j;
            } else if *v == j {
                *v = i;
            }
        }
        Self {
            perm: Permutation::from_zero_based(map),
        }
    }
}

/// All `(2n−1)!!` involutions of size `2n`, ordered by pairing the smallest
/// free outlet with each later free outlet in increasing order.
pub fn enumerate_fpf(n: usize, max_half_size: usize) -> Result<Vec<FpfInvolution>> {
    if n > max_half_size {
        return Err(Error::BoundExceeded {
            requested: n,
            limit: max_half_size,
        });
    }
    fn rec(map: &mut Vec<Option<usize>>, out: &mut Vec<FpfInvolution>) {
        let Some(first) = map.iter().position(Option::is_none) else {
            let map = map.iter().map(|v| v.unwrap()).collect();
            out.push(FpfInvolution {
                perm: Permutation::from_zero_based(map),
            });
            return;
        };
        for partner in first + 1..map.len() {
            if map[partner].is_none() {
                map[first] = Some(partner);
                map[partner] = Some(first);
                rec(map, out);
                map[first] = None;
                map[partner] = None;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![None; 2 * n], &mut out);
    Ok(out)
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpfInvolution({self})")
    }
}

impl FromStr for FpfInvolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

impl TryFrom<Vec<usize>> for FpfInvolution {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::from_word(word)
    }
}

impl From<FpfInvolution> for Vec<usize> {
    fn from(i: FpfInvolution) -> Self {
        i.word()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iota(s: &str) -> FpfInvolution {
        s.parse().unwrap()
    }

    #[test]
    fn j_bar_examples() {
        assert_eq!(FpfInvolution::j_bar(1).to_string(), "21");
        assert_eq!(FpfInvolution::j_bar(2).to_string(), "2143");
        assert_eq!(FpfInvolution::j_bar(4).to_string(), "21436587");
        for n in 1..6 {
            assert_eq!(FpfInvolution::j_bar(n).perm().length(), n);
        }
    }

    #[test]
    fn rejects_non_fpf() {
        assert!("1234".parse::<FpfInvolution>().is_err());
        assert!("2314".parse::<FpfInvolution>().is_err());
        assert!("213".parse::<FpfInvolution>().is_err());
    }

    #[test]
    fn direct_sums() {
        let j1 = FpfInvolution::j_bar(1);
        assert_eq!(j1.direct_sum(&j1).to_string(), "2143");
        let countryside = j1.direct_sum(&iota("3412")).direct_sum(&j1);
        assert_eq!(countryside.to_string(), "21563487");
        let rainbow = FpfInvolution::j_bar(2)
            .direct_sum(&iota("4321"))
            .direct_sum(&FpfInvolution::j_bar(1));
        assert_eq!(rainbow.word(), vec![2, 1, 4, 3, 8, 7, 6, 5, 10, 9]);
    }

    #[test]
    fn pair_statistics_examples() {
        let s = iota("532614").pair_statistics();
        assert_eq!((s.c, s.r), (1, 1));
        let s = FpfInvolution::j_bar(4).pair_statistics();
        assert_eq!((s.c, s.r, s.d), (0, 0, 6));
        let s = iota("351624").pair_statistics();
        assert_eq!((s.c, s.r), (2, 0));
    }

    #[test]
    fn fpf_length_examples() {
        assert_eq!(FpfInvolution::j_bar(3).fpf_length(), 3);
        assert_eq!(iota("216543").fpf_length(), 7);
        assert_eq!(iota("532614").fpf_length(), 9);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_fpf(1, 5).unwrap(),
            vec![iota("21")]
        );
        let two: Vec<String> = enumerate_fpf(2, 5)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two, vec!["2143", "3412", "4321"]);
        assert_eq!(enumerate_fpf(3, 5).unwrap().len(), 15);
        assert_eq!(enumerate_fpf(4, 5).unwrap().len(), 105);
        assert!(matches!(
            enumerate_fpf(6, 5),
            Err(Error::BoundExceeded { requested: 6, limit: 5 })
        ));
    }

    #[test]
    fn switch_is_conjugation() {
        // switching outlets 1 and 4 of 214365 gives 341265
        assert_eq!(iota("214365").switch(2, 3).to_string(), "341265");
        assert_eq!(iota("214365").switch(1, 4).to_string(), "341265");
    }

    #[test]
    fn json_round_trip() {
        let i = iota("351624");
        let js = serde_json::to_string(&i).unwrap();
        assert_eq!(js, "[3,5,1,6,2,4]");
        assert_eq!(serde_json::from_str::<FpfInvolution>(&js).unwrap(), i);
        assert!(serde_json::from_str::<FpfInvolution>("[1,2]").is_err());
    }
}
