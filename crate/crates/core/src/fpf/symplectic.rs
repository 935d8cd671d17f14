//! Symplectic diagrams, the basic-element candidates `𝒜 = 𝒜_e ∪ 𝒜_o`, and the
//! decomposition of an involution as a meet of elements of `𝒜`.

use std::collections::BTreeSet;

use super::{enumerate_fpf, FpfInvolution, DEFAULT_MAX_HALF_SIZE};
use crate::error::{Error, Result};
use crate::perm::{Diagram, EssentialBox, EssentialSet};

/// Essential boxes of the symplectic diagram; every box has `row < col`.
pub type SymplecticEssentialSet = EssentialSet;

/// Rothe diagram of the word intersected with the strict upper triangle.
pub fn symplectic_diagram(iota: &FpfInvolution) -> Diagram {
    let mut d = iota.perm().rothe_diagram();
    d.cells.retain(|&(i, j)| i < j);
    d
}

pub fn symplectic_essential_set(iota: &FpfInvolution) -> SymplecticEssentialSet {
    EssentialSet::from_diagram(&symplectic_diagram(iota), &iota.perm().rank_matrix())
}

/// For every symplectic-diagram cell `(i, j)` of odd rank `2k+1`, the rank at
/// `(i−1, i)` is at most `2k`.
pub fn odd_rank_constraint_holds(iota: &FpfInvolution) -> bool {
    let ranks = iota.perm().rank_matrix();
    symplectic_diagram(iota).cells.iter().all(|&(i, j)| {
        let r = ranks.get(i, j);
        r % 2 == 0 || ranks.get(i - 1, i) < r
    })
}

/// Membership of an involution in `𝒜`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    /// Exactly one symplectic essential box, of even rank.
    Even(EssentialBox),
    /// A box at `(p, p+1)` of even rank `2r` and a box in row `p+1` of rank
    /// `2r+1`, and nothing else.
    Odd {
        companion: EssentialBox,
        odd: EssentialBox,
    },
}

pub fn basic_kind(iota: &FpfInvolution) -> Option<BasicKind> {
    match *symplectic_essential_set(iota).boxes.as_slice() {
        [b] if b.rank % 2 == 0 => Some(BasicKind::Even(b)),
        [a, b] => {
            let (companion, odd) = if a.row < b.row { (a, b) } else { (b, a) };
            let ok = companion.col == companion.row + 1
                && companion.rank % 2 == 0
                && odd.row == companion.row + 1
                && odd.rank == companion.rank + 1;
            ok.then_some(BasicKind::Odd { companion, odd })
        }
        _ => None,
    }
}

impl FpfInvolution {
    pub fn in_a(&self) -> bool {
        basic_kind(self).is_some()
    }
}

fn check_upper(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j || j > 2 * n {
        return Err(Error::Infeasible(format!(
            "box ({i},{j}) is not strictly upper-triangular in size {}",
            2 * n
        )));
    }
    Ok(())
}

/// Built as `J̄_r ⊕ X ⊕ J̄_rest` where `X` has its single box at
/// `(a, b) = (i−2r, j−2r)` with rank 0: outlets `1..=a` run as mutually
/// crossing strands to `b+1..=b+a`, outlets `a+1..=b` carry a copy of `J̄`,
/// and when `b − a` is odd the last of them is wired past the strands instead.
fn formula_a_even(n: usize, i: usize, j: usize, rank: u32) -> Result<(FpfInvolution, Vec<EssentialBox>)> {
    check_upper(n, i, j)?;
    if rank % 2 != 0 {
        return Err(Error::Infeasible(format!("rank {rank} is odd")));
    }
    let r2 = rank as usize;
    if i <= r2 {
        return Err(Error::Infeasible(format!(
            "rank {rank} at ({i},{j}) needs row > rank"
        )));
    }
    let (a, b) = (i - r2, j - r2);
    let odd = (b - a) % 2 == 1;
    let core = a + b + usize::from(odd);
    if r2 + core > 2 * n {
        return Err(Error::Infeasible(format!(
            "box ({i},{j}) rank {rank} does not fit in size {}",
            2 * n
        )));
    }
    let mut arcs: Vec<(usize, usize)> = (1..=a).map(|k| (k, b + k)).collect();
    let jbar_end = if odd { b - 1 } else { b };
    arcs.extend((a + 1..jbar_end).step_by(2).map(|k| (k, k + 1)));
    if odd {
        arcs.push((b, b + a + 1));
    }
    let x = FpfInvolution::from_arcs(core, &arcs)?;
    let built = FpfInvolution::j_bar(r2 / 2)
        .direct_sum(&x)
        .direct_sum(&FpfInvolution::j_bar(n - (r2 + core) / 2));
    let want = [EssentialBox { row: i, col: j, rank }];
    Ok((built, want.to_vec()))
}

/// The element of `𝒜_e` whose only symplectic essential box is `(i, j)` with
/// even rank `rank`.
pub fn construct_a_even(n: usize, i: usize, j: usize, rank: u32) -> Result<FpfInvolution> {
    let (built, want) = formula_a_even(n, i, j, rank)?;
    verify_or_search(built, &want, n)
}

/// Built as `J̄_r ⊕ X ⊕ J̄_rest` where `X` has boxes `(a, a+1)` rank 0 and
/// `(a+1, b)` rank 1: outlet 1 is joined to `a+2`, outlets `2..=a+1` run as
/// crossing strands past `b`, and `a+3..=b` carry a copy of `J̄` (with the
/// last outlet wired past the strands when `b − a` is odd).
fn formula_a_odd(n: usize, i: usize, j: usize, rank: u32) -> Result<(FpfInvolution, Vec<EssentialBox>)> {
    check_upper(n, i, j)?;
    if rank % 2 != 1 {
        return Err(Error::Infeasible(format!("rank {rank} is even")));
    }
    if j == i + 1 {
        return Err(Error::Infeasible(format!(
            "odd rank {rank} on the superdiagonal at ({i},{j}) violates the odd-rank constraint"
        )));
    }
    let r2 = rank as usize - 1;
    if i < r2 + 2 {
        return Err(Error::Infeasible(format!(
            "companion box ({},{i}) cannot carry rank {r2}",
            i - 1
        )));
    }
    let (a, b) = (i - 1 - r2, j - r2);
    let odd = (b - a) % 2 == 1;
    let core = a + b + usize::from(odd);
    if r2 + core > 2 * n {
        return Err(Error::Infeasible(format!(
            "boxes ({},{i}) and ({i},{j}) do not fit in size {}",
            i - 1,
            2 * n
        )));
    }
    let mut arcs: Vec<(usize, usize)> = (2..=a + 1).zip(b + 1..).collect();
    arcs.push((1, a + 2));
    let jbar_end = if odd { b - 1 } else { b };
    arcs.extend((a + 3..jbar_end).step_by(2).map(|k| (k, k + 1)));
    if odd {
        arcs.push((b, b + a + 1));
    }
    let x = FpfInvolution::from_arcs(core, &arcs)?;
    let built = FpfInvolution::j_bar(r2 / 2)
        .direct_sum(&x)
        .direct_sum(&FpfInvolution::j_bar(n - (r2 + core) / 2));
    let want = [
        EssentialBox {
            row: i - 1,
            col: i,
            rank: rank - 1,
        },
        EssentialBox { row: i, col: j, rank },
    ];
    Ok((built, want.to_vec()))
}

/// The element of `𝒜_o` with boxes `(i−1, i)` of rank `rank−1` and `(i, j)`
/// of odd rank `rank`.
pub fn construct_a_odd(n: usize, i: usize, j: usize, rank: u32) -> Result<FpfInvolution> {
    let (built, want) = formula_a_odd(n, i, j, rank)?;
    verify_or_search(built, &want, n)
}

fn verify_or_search(built: FpfInvolution, want: &[EssentialBox], n: usize) -> Result<FpfInvolution> {
    if symplectic_essential_set(&built).boxes == want {
        return Ok(built);
    }
    search_exact(want, n)
}

fn search_exact(want: &[EssentialBox], n: usize) -> Result<FpfInvolution> {
    let mut hits = enumerate_fpf(n, DEFAULT_MAX_HALF_SIZE)?
        .into_iter()
        .filter(|x| symplectic_essential_set(x).boxes == want);
    match (hits.next(), hits.next()) {
        (Some(x), None) => Ok(x),
        (None, _) => Err(Error::Infeasible(format!(
            "no involution of size {} has essential set {want:?}",
            2 * n
        ))),
        (Some(x), Some(y)) => Err(Error::Infeasible(format!(
            "essential set {want:?} is realised by both {x} and {y}"
        ))),
    }
}

/// Exhaustive-filter counterpart of [`construct_a_even`].
pub fn construct_a_even_by_search(n: usize, i: usize, j: usize, rank: u32) -> Result<FpfInvolution> {
    check_upper(n, i, j)?;
    search_exact(&[EssentialBox { row: i, col: j, rank }], n)
}

/// Exhaustive-filter counterpart of [`construct_a_odd`].
pub fn construct_a_odd_by_search(n: usize, i: usize, j: usize, rank: u32) -> Result<FpfInvolution> {
    check_upper(n, i, j)?;
    if i < 2 || rank == 0 {
        return Err(Error::Infeasible(format!("no companion box for ({i},{j})")));
    }
    search_exact(
        &[
            EssentialBox {
                row: i - 1,
                col: i,
                rank: rank - 1,
            },
            EssentialBox { row: i, col: j, rank },
        ],
        n,
    )
}

/// One element of `𝒜` per symplectic essential box of `iota`; their meet is
/// `iota`. Empty for `J̄_n`.
pub fn basics_decomposition(iota: &FpfInvolution) -> Result<BTreeSet<FpfInvolution>> {
    let n = iota.n();
    let mut out = BTreeSet::new();
    for b in symplectic_essential_set(iota).boxes {
        let x = if b.rank % 2 == 0 {
            construct_a_even(n, b.row, b.col, b.rank)?
        } else {
            construct_a_odd(n, b.row, b.col, b.rank)?
        };
        out.insert(x);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iota(s: &str) -> FpfInvolution {
        s.parse().unwrap()
    }

    // The closed-form families hit the wanted essential set directly, with no
    // fallback to search, for every feasible box up to size 8.
    #[test]
    fn formulas_never_need_the_search_fallback() {
        for n in 1..=4 {
            for i in 1..=2 * n {
                for j in i + 1..=2 * n {
                    for rank in 0..i as u32 {
                        let formula = if rank % 2 == 0 { formula_a_even } else { formula_a_odd };
                        let search = if rank % 2 == 0 {
                            construct_a_even_by_search
                        } else {
                            construct_a_odd_by_search
                        };
                        match (formula(n, i, j, rank), search(n, i, j, rank)) {
                            (Ok((built, want)), Ok(found)) => {
                                assert_eq!(symplectic_essential_set(&built).boxes, want);
                                assert_eq!(built, found, "n={n} box ({i},{j}) rank {rank}");
                            }
                            (Err(_), Err(_)) => {}
                            (f, s) => panic!("n={n} box ({i},{j}) rank {rank}: {f:?} vs {s:?}"),
                        }
                    }
                }
            }
        }
    }

    fn triples(s: &str) -> Vec<(usize, usize, u32)> {
        symplectic_essential_set(&iota(s)).triples()
    }

    #[test]
    fn symplectic_boxes_of_worked_examples() {
        assert_eq!(triples("216543"), vec![(3, 5, 2)]);
        assert_eq!(triples("21573846"), vec![(3, 4, 2), (4, 6, 3)]);
        assert_eq!(triples("73254816"), vec![(1, 6, 0)]);
        assert_eq!(triples("361542"), vec![(1, 2, 0), (2, 5, 1)]);
        assert_eq!(triples("351624"), vec![(1, 2, 0), (2, 4, 1)]);
        for n in 1..=5 {
            assert!(symplectic_essential_set(&FpfInvolution::j_bar(n)).is_empty());
            let d = FpfInvolution::j_bar(n).perm().rothe_diagram();
            assert!(d.cells.iter().all(|&(i, j)| i == j && i % 2 == 1));
        }
    }

    #[test]
    fn odd_rank_examples() {
        assert!(odd_rank_constraint_holds(&iota("21573846")));
        assert!(odd_rank_constraint_holds(&iota("361542")));
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(construct_a_even(3, 3, 5, 2).unwrap(), iota("216543"));
        assert_eq!(construct_a_even(4, 1, 6, 0).unwrap(), iota("73254816"));
        assert_eq!(construct_a_odd(3, 2, 5, 1).unwrap(), iota("361542"));
        assert_eq!(construct_a_odd(4, 4, 6, 3).unwrap(), iota("21573846"));
        assert_eq!(construct_a_odd(3, 2, 4, 1).unwrap(), iota("351624"));
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(construct_a_odd(3, 2, 3, 1), Err(Error::Infeasible(_))));
        assert!(matches!(construct_a_even(3, 3, 5, 1), Err(Error::Infeasible(_))));
        assert!(matches!(construct_a_even(3, 2, 2, 0), Err(Error::Infeasible(_))));
        assert!(matches!(construct_a_even(2, 2, 4, 2), Err(Error::Infeasible(_))));
        assert!(matches!(construct_a_even(2, 1, 4, 0), Err(Error::Infeasible(_))));
    }

    #[test]
    fn membership_in_a() {
        assert!(iota("216543").in_a());
        assert!(iota("351624").in_a());
        assert!(iota("21573846").in_a());
        assert!(!FpfInvolution::j_bar(3).in_a());
    }

    #[test]
    fn decomposition_examples() {
        assert!(basics_decomposition(&FpfInvolution::j_bar(3)).unwrap().is_empty());
        let d = basics_decomposition(&iota("216543")).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![iota("216543")]);
    }
}
