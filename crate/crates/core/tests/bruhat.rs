//! Bruhat order on small symmetric groups against a cover-closure oracle.

use std::collections::{BTreeMap, BTreeSet};

use sporbits_core::perm::{bruhat_covers, bruhat_leq, Permutation};

fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

/// Upper neighbours by transpositions of values at two positions that raise
/// the inversion count by exactly one.
fn oracle_up(w: &[usize]) -> Vec<Vec<usize>> {
    let l = inversions(w);
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let mut v = w.to_vec();
            v.swap(i, j);
            if inversions(&v) == l + 1 {
                out.push(v);
            }
        }
    }
    out
}

fn all_words(n: usize) -> Vec<Vec<usize>> {
    Permutation::all(n).map(|p| p.word()).collect()
}

#[test]
fn rank_criterion_matches_cover_closure_on_s4() {
    let words = all_words(4);
    // up-sets by closure of the cover relation
    let mut above: BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> = BTreeMap::new();
    let mut by_len = words.clone();
    by_len.sort_by_key(|w| std::cmp::Reverse(inversions(w)));
    for w in &by_len {
        let mut set = BTreeSet::from([w.clone()]);
        for u in oracle_up(w) {
            set.extend(above[&u].iter().cloned());
        }
        above.insert(w.clone(), set);
    }
    for a in &words {
        for b in &words {
            let pa = Permutation::new(a.clone()).unwrap();
            let pb = Permutation::new(b.clone()).unwrap();
            assert_eq!(
                bruhat_leq(&pa, &pb).unwrap(),
                above[a].contains(b),
                "{pa} <= {pb}"
            );
        }
    }
}

#[test]
fn covers_agree_with_oracle_on_s4() {
    for a in all_words(4) {
        let up: BTreeSet<_> = oracle_up(&a).into_iter().collect();
        let pa = Permutation::new(a.clone()).unwrap();
        for b in all_words(4) {
            let pb = Permutation::new(b.clone()).unwrap();
            assert_eq!(bruhat_covers(&pb, &pa).unwrap(), up.contains(&b), "{pb} covers {pa}");
        }
    }
}

#[test]
fn longest_chain_in_s5_has_length_ten() {
    // longest path from the identity to the reversal through covers
    let words = all_words(5);
    let mut sorted = words.clone();
    sorted.sort_by_key(|w| inversions(w));
    let mut depth: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for w in &sorted {
        let d = depth.get(w).copied().unwrap_or(0);
        for u in oracle_up(w) {
            let e = depth.entry(u).or_insert(0);
            *e = (*e).max(d + 1);
        }
        depth.entry(w.clone()).or_insert(d);
    }
    assert_eq!(depth[&vec![5, 4, 3, 2, 1]], 10);
    assert_eq!(Permutation::reverse(5).length(), 10);
}

#[test]
fn essential_ranks_cut_out_the_bruhat_interval_in_s5() {
    let perms: Vec<Permutation> = Permutation::all(5).collect();
    for pi in &perms {
        let boxes = pi.essential_set().boxes;
        for sigma in &perms {
            let rs = sigma.rank_matrix();
            let satisfies = boxes.iter().all(|b| rs.get(b.row, b.col) <= b.rank);
            assert_eq!(satisfies, bruhat_leq(pi, sigma).unwrap(), "{pi} vs {sigma}");
        }
    }
}

#[test]
fn length_is_inversion_count_in_s6() {
    for p in Permutation::all(6) {
        assert_eq!(p.length(), inversions(&p.word()));
    }
}
