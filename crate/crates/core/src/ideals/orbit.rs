use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{union_schubert_ideal, PolyMatrix, QMatrix};
use crate::error::{Error, Result};
use crate::fpf::{symplectic_essential_set, FpfInvolution};
use crate::pairperm::{pair_permutations, DEFAULT_PAIR_SEARCH_BOUND};
use crate::perm::Permutation;
use crate::poly::{
    initial_ideal, GbBudget, GbStats, Ideal, Polynomial, TermOrder, VariableSet,
};

/// Why an involution has a known orbit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CatalogSource {
    /// `J̄_n`: the dense orbit, whose closure is everything.
    DenseOrbit,
    /// One of the explicitly listed small shapes.
    Listed { shape: String },
    /// A single symplectic essential box at `(2r−1, 2r)` of rank `2r−2`.
    SingleBox { r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitIdealCatalogEntry {
    pub iota: FpfInvolution,
    pub source: CatalogSource,
    /// Row and column sets of `MJMᵀ` whose pfaffians generate the ideal.
    pub pfaffian_sets: Vec<Vec<usize>>,
    pub ideal: Ideal,
}

fn with_j_bar_tail(head: &[usize], n: usize) -> Vec<usize> {
    let mut w = head.to_vec();
    for k in head.len() / 2 + 1..=n {
        w.extend([2 * k, 2 * k - 1]);
    }
    w
}

fn catalog_sets(iota: &FpfInvolution) -> Option<(CatalogSource, Vec<Vec<usize>>)> {
    let n = iota.n();
    let word = iota.word();
    if *iota == FpfInvolution::j_bar(n) {
        return Some((CatalogSource::DenseOrbit, Vec::new()));
    }
    if n >= 2 && word == with_j_bar_tail(&[4, 3, 2, 1], n) {
        let shape = "4321".to_string();
        return Some((CatalogSource::Listed { shape }, vec![vec![1, 2], vec![1, 3]]));
    }
    if word == [2, 1, 6, 5, 4, 3] {
        let shape = "216543".to_string();
        return Some((
            CatalogSource::Listed { shape },
            vec![vec![1, 2, 3, 4], vec![1, 2, 3, 5]],
        ));
    }
    if word == [3, 5, 1, 6, 2, 4] {
        let shape = "351624".to_string();
        return Some((
            CatalogSource::Listed { shape },
            vec![vec![1, 2], vec![1, 2, 3, 4]],
        ));
    }
    let ess = symplectic_essential_set(iota);
    if let [b] = ess.boxes.as_slice() {
        if b.row % 2 == 1 && b.col == b.row + 1 && b.rank as usize + 2 == b.col {
            let r = b.col / 2;
            return Some((CatalogSource::SingleBox { r }, vec![(1..=2 * r).collect()]));
        }
    }
    None
}

pub fn catalog_entry(iota: &FpfInvolution) -> Result<OrbitIdealCatalogEntry> {
    let (source, sets) =
        catalog_sets(iota).ok_or_else(|| Error::NotInCatalog(iota.to_string()))?;
    let vars = VariableSet::matrix(iota.size());
    let a = PolyMatrix::mjmt(&vars);
    let gens = sets
        .iter()
        .map(|s| a.submatrix(s, s)?.pfaffian())
        .collect::<Result<Vec<Polynomial>>>()?;
    Ok(OrbitIdealCatalogEntry {
        iota: iota.clone(),
        source,
        pfaffian_sets: sets,
        ideal: Ideal::new(vars, gens)?,
    })
}

/// Known generators of the ideal of the orbit closure of `iota`.
pub fn orbit_ideal(iota: &FpfInvolution) -> Result<Ideal> {
    Ok(catalog_entry(iota)?.ideal)
}

/// The orbit of an invertible matrix: the involution whose rank matrix
/// matches the northwest ranks of `M·J·Mᵀ`.
pub fn classify_orbit(m: &QMatrix) -> Result<FpfInvolution> {
    let size = m.rows();
    if size != m.cols() || size % 2 == 1 || size == 0 {
        return Err(Error::Matrix(format!(
            "expected a square matrix of even size, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.rank() < size {
        return Err(Error::Matrix("matrix is singular".into()));
    }
    let j = QMatrix::symplectic_form(size)?;
    let a = m.mul(&j)?.mul(&m.transpose())?;
    let r = |i: usize, c: usize| {
        if i == 0 || c == 0 {
            0
        } else {
            a.rank_nw(i, c) as i64
        }
    };
    let ranks: Vec<Vec<i64>> = (0..=size).map(|i| (0..=size).map(|c| r(i, c)).collect()).collect();
    let mut word = Vec::with_capacity(size);
    for i in 1..=size {
        let hits: Vec<usize> = (1..=size)
            .filter(|&c| ranks[i][c] - ranks[i - 1][c] - ranks[i][c - 1] + ranks[i - 1][c - 1] == 1)
            .collect();
        match hits.as_slice() {
            [c] => word.push(*c),
            _ => return Err(Error::Matrix("northwest ranks match no involution".into())),
        }
    }
    let iota = Permutation::new(word)
        .and_then(FpfInvolution::new)
        .map_err(|_| Error::Matrix("northwest ranks match no involution".into()))?;
    let rm = iota.perm().rank_matrix();
    let consistent = (1..=size).all(|i| (1..=size).all(|c| i64::from(rm.get(i, c)) == ranks[i][c]));
    if !consistent {
        return Err(Error::Matrix("northwest ranks match no involution".into()));
    }
    Ok(iota)
}

/// The weights `⌈j/2⌉ − 1` on column `j`, used for the degeneration.
pub fn degeneration_weights(vars: &VariableSet) -> Vec<i64> {
    TermOrder::column_weights(vars)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// A generator of one side that is not in the other side's ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub side: Side,
    pub generator: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub left_ms: u64,
    pub right_ms: u64,
    pub compare_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationReport {
    pub iota: FpfInvolution,
    pub pair_permutations: Vec<Permutation>,
    /// Initial ideal of the orbit ideal.
    pub left: Ideal,
    /// Initial ideal of the union of Schubert ideals.
    pub right: Ideal,
    pub equal: bool,
    pub witnesses: Vec<Witness>,
    pub timings: Timings,
    pub left_stats: GbStats,
    pub right_stats: GbStats,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_millis() as u64))
}

/// Compares the initial ideal of the orbit ideal of `iota` with the initial
/// ideal of the union of the Schubert varieties of its pair permutations.
/// The two sides are computed on separate threads.
pub fn verify_degeneration(iota: &FpfInvolution, budget: &GbBudget) -> Result<DegenerationReport> {
    let orbit = orbit_ideal(iota)?;
    let pairs = pair_permutations(iota, DEFAULT_PAIR_SEARCH_BOUND.max(iota.size()))?.perms;
    let vars = VariableSet::matrix(iota.size());
    let w = degeneration_weights(&vars);
    let tiebreak = TermOrder::antidiagonal(&vars);

    let (left, right) = std::thread::scope(|scope| {
        let left = scope.spawn(|| timed(|| initial_ideal(&orbit, &w, &tiebreak, budget)));
        let right = scope.spawn(|| {
            timed(|| {
                let union = union_schubert_ideal(&pairs, budget)?;
                initial_ideal(&union, &w, &tiebreak, budget)
            })
        });
        (
            left.join().expect("left side panicked"),
            right.join().expect("right side panicked"),
        )
    });
    let (left, left_ms) = left?;
    let (right, right_ms) = right?;

    let start = Instant::now();
    let gb_left = left.canonical_basis(budget)?;
    let gb_right = right.canonical_basis(budget)?;
    let mut witnesses: Vec<Witness> = left
        .generators()
        .iter()
        .filter(|g| !gb_right.contains(g))
        .map(|g| Witness {
            side: Side::Left,
            generator: g.display(&vars).to_string(),
        })
        .collect();
    witnesses.extend(
        right
            .generators()
            .iter()
            .filter(|g| !gb_left.contains(g))
            .map(|g| Witness {
                side: Side::Right,
                generator: g.display(&vars).to_string(),
            }),
    );
    let compare_ms = start.elapsed().as_millis() as u64;

    Ok(DegenerationReport {
        iota: iota.clone(),
        pair_permutations: pairs,
        equal: witnesses.is_empty(),
        witnesses,
        timings: Timings {
            left_ms,
            right_ms,
            compare_ms,
        },
        left_stats: gb_left.stats.clone(),
        right_stats: gb_right.stats.clone(),
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fpf(s: &str) -> FpfInvolution {
        s.parse().unwrap()
    }

    #[test]
    fn catalog_shapes() {
        let vars = VariableSet::matrix(4);
        let e = catalog_entry(&fpf("4321")).unwrap();
        assert_eq!(e.pfaffian_sets, vec![vec![1, 2], vec![1, 3]]);
        let a = PolyMatrix::mjmt(&vars);
        assert_eq!(e.ideal.generators(), &[a.get(1, 2).clone(), a.get(1, 3).clone()]);

        let e = catalog_entry(&fpf("3412")).unwrap();
        assert_eq!(e.source, CatalogSource::SingleBox { r: 1 });
        assert_eq!(e.ideal.generators(), &[a.get(1, 2).clone()]);

        assert!(orbit_ideal(&fpf("2143")).unwrap().is_zero());
        assert_eq!(orbit_ideal(&fpf("216543")).unwrap().generators().len(), 2);
        assert_eq!(
            catalog_entry(&fpf("351624")).unwrap().pfaffian_sets,
            vec![vec![1, 2], vec![1, 2, 3, 4]]
        );
        assert_eq!(
            catalog_entry(&fpf("432165")).unwrap().source,
            CatalogSource::Listed { shape: "4321".into() }
        );
    }

    #[test]
    fn catalog_miss() {
        assert!(matches!(orbit_ideal(&fpf("632541")), Err(Error::NotInCatalog(_))));
    }

    #[test]
    fn classify_identity_and_permutation_matrices() {
        assert_eq!(classify_orbit(&QMatrix::identity(4)).unwrap(), fpf("2143"));
        let w: Permutation = "1342".parse().unwrap();
        assert_eq!(classify_orbit(&QMatrix::permutation(&w)).unwrap(), fpf("4321"));
        let dense = QMatrix::from_strings(&[
            vec!["1", "2", "3", "5"],
            vec!["7", "11", "13", "17"],
            vec!["19", "23", "29", "31"],
            vec!["37", "41", "43", "47"],
        ])
        .unwrap();
        assert_eq!(classify_orbit(&dense).unwrap(), fpf("2143"));
    }

    #[test]
    fn classify_rejects_singular() {
        let z = QMatrix::zeros(2, 2);
        assert!(matches!(classify_orbit(&z), Err(Error::Matrix(_))));
        assert!(classify_orbit(&QMatrix::identity(3)).is_err());
    }

    #[test]
    fn degeneration_of_dense_orbit() {
        let r = verify_degeneration(&FpfInvolution::j_bar(2), &GbBudget::default()).unwrap();
        assert!(r.equal);
        assert!(r.left.is_zero() && r.right.is_zero());
    }
}
