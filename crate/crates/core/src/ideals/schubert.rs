use std::collections::BTreeSet;

use itertools::Itertools;

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{
    ideal_intersection, is_groebner_basis, leading_term, GbBudget, Ideal, Monomial, Polynomial,
    TermOrder, VariableSet,
};

/// A minor of the generic matrix, on 1-based rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub poly: Polynomial,
}

impl Minor {
    /// Product of the antidiagonal entries `m[rows[k], cols[len−1−k]]`.
    pub fn antidiagonal(&self, vars: &VariableSet) -> Monomial {
        let k = self.rows.len();
        let mut e = vec![0u16; vars.len()];
        for t in 0..k {
            e[vars.m(self.rows[t], self.cols[k - 1 - t])] += 1;
        }
        Monomial::from_exponents(e)
    }
}

/// All `(r+1)`-minors of the northwest `i × j` block for every essential box
/// `(i, j, r)`, without repeats.
pub fn fulton_minors(pi: &Permutation) -> Vec<Minor> {
    let vars = VariableSet::matrix(pi.len());
    let generic = PolyMatrix::generic(&vars);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for b in &pi.essential_set().boxes {
        let k = b.rank as usize + 1;
        for rows in (1..=b.row).combinations(k) {
            for cols in (1..=b.col).combinations(k) {
                if !seen.insert((rows.clone(), cols.clone())) {
                    continue;
                }
                let poly = generic
                    .submatrix(&rows, &cols)
                    .expect("indices in range")
                    .determinant();
                out.push(Minor {
                    rows: rows.clone(),
                    cols,
                    poly,
                });
            }
        }
    }
    out
}

/// The Schubert determinantal ideal of `pi`. The identity gives the zero
/// ideal.
pub fn fulton_generators(pi: &Permutation) -> Ideal {
    let vars = VariableSet::matrix(pi.len());
    let gens = fulton_minors(pi).into_iter().map(|m| m.poly).collect();
    Ideal::new(vars, gens).expect("generators built over vars")
}

pub fn schubert_ideal(pi: &Permutation) -> Ideal {
    fulton_generators(pi)
}

/// Ideal of the union of the matrix Schubert varieties of `perms`.
pub fn union_schubert_ideal(perms: &[Permutation], budget: &GbBudget) -> Result<Ideal> {
    let Some(first) = perms.first() else {
        return Err(Error::Infeasible("union over an empty set".into()));
    };
    if let Some(bad) = perms.iter().find(|p| p.len() != first.len()) {
        return Err(Error::SizeMismatch(bad.len(), first.len()));
    }
    let mut acc = fulton_generators(first);
    for pi in &perms[1..] {
        if acc.is_zero() {
            break;
        }
        acc = ideal_intersection(&acc, &fulton_generators(pi), budget)?;
    }
    Ok(acc)
}

/// Checks that the minors of `pi` form a Gröbner basis under the antidiagonal
/// order, with every leading term the antidiagonal product.
pub fn verify_knutson_miller(pi: &Permutation) -> Result<bool> {
    let vars = VariableSet::matrix(pi.len());
    let ord = TermOrder::antidiagonal(&vars);
    let minors = fulton_minors(pi);
    for m in &minors {
        match leading_term(&m.poly, &ord)? {
            Some((lead, _)) if lead == m.antidiagonal(&vars) => {}
            _ => return Ok(false),
        }
    }
    let gens: Vec<Polynomial> = minors.into_iter().map(|m| m.poly).collect();
    is_groebner_basis(&gens, &ord)
}
