//! JSON shapes emitted by commands that have no matching core type.

use serde::{Deserialize, Serialize};
use sporbits_core::fpf::FpfInvolution;
use sporbits_core::poly::{GbStats, Ideal, TermOrder};
use sporbits_core::{EssentialBox, PairStatistics, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub n: usize,
    pub count: usize,
    pub involutions: Vec<FpfInvolution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WiringReport {
    pub iota: FpfInvolution,
    pub arcs: Vec<(usize, usize)>,
    pub statistics: PairStatistics,
    pub ascii: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxesReport {
    pub iota: FpfInvolution,
    pub boxes: Vec<EssentialBox>,
    pub odd_rank_constraint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartKind {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicPart {
    pub involution: FpfInvolution,
    pub kind: PartKind,
    pub boxes: Vec<EssentialBox>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicsReport {
    pub iota: FpfInvolution,
    pub parts: Vec<BasicPart>,
    pub glb: FpfInvolution,
    pub glb_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KmReport {
    pub pi: Permutation,
    pub essential_set: Vec<EssentialBox>,
    pub generators: usize,
    pub groebner_basis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub matrix: Vec<Vec<String>>,
    pub iota: FpfInvolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub order: TermOrder,
    pub basis: Ideal,
    pub stats: GbStats,
}
