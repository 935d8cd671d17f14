//! Fixed-point-free involutions, their Bruhat order and the symplectic
//! orbit ideals of the space of skew-symmetric matrices, with an exact
//! Gröbner basis engine to check degenerations.

pub mod error;
pub mod fpf;
pub mod ideals;
pub mod pairperm;
pub mod perm;
pub mod poly;

pub use error::{BudgetStats, Error, Result};
pub use fpf::{enumerate_fpf, FpfInvolution, PairStatistics};
pub use pairperm::{pair_permutations, PairPermutationSet};
pub use perm::{bruhat_covers, bruhat_leq, EssentialBox, EssentialSet, Permutation, RankMatrix};
