//! Term orders. Every total order here is a matrix order: a monomial `x^e`
//! is compared through the integer vector `A·e`, lexicographically. Because
//! the key is linear in `e`, keys of products are sums of keys.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{Monomial, VariableSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TermOrder {
    /// Lex with `ranking[0]` the largest variable. Unranked variables follow
    /// in index order.
    Lex { ranking: Vec<usize> },
    /// Degree first, then reverse lex with `ranking[0]` the largest variable.
    GrevLex { ranking: Vec<usize> },
    /// Weight rows compared in sequence, then the tie-break order.
    WeightRefined {
        weights: Vec<Vec<i64>>,
        tiebreak: Box<TermOrder>,
    },
    /// Degree in `block` first (the block is above everything else), then
    /// `inner` on the full monomial.
    Elimination { block: Vec<usize>, inner: Box<TermOrder> },
    /// A bare weight: ties are not broken, so this is not a total order.
    WeightOnly { weights: Vec<i64> },
}

impl TermOrder {
    pub fn lex(nvars: usize) -> Self {
        TermOrder::Lex {
            ranking: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        TermOrder::GrevLex {
            ranking: (0..nvars).collect(),
        }
    }

    /// Lex ranking `m[1,N] > m[1,N−1] > … > m[1,1] > m[2,N] > …`, auxiliaries
    /// after the matrix block. Selects the antidiagonal term of every minor.
    pub fn antidiagonal(vars: &VariableSet) -> Self {
        let n = vars.matrix_size;
        let mut ranking: Vec<usize> = (1..=n)
            .flat_map(|i| (1..=n).rev().map(move |j| (i, j)))
            .map(|(i, j)| vars.m(i, j))
            .collect();
        ranking.extend(vars.matrix_len()..vars.len());
        TermOrder::Lex { ranking }
    }

    /// `wt(m[i,j]) = ⌈j/2⌉ − 1`, auxiliaries 0.
    pub fn column_weights(vars: &VariableSet) -> Vec<i64> {
        (0..vars.len())
            .map(|v| match vars.position(v) {
                Some((_, j)) => (j as i64 + 1) / 2 - 1,
                None => 0,
            })
            .collect()
    }

    /// Degree first, then smaller `w`-weight is larger, then `tiebreak`. On
    /// homogeneous polynomials the leading term is a term of least weight.
    pub fn min_weight_refinement(w: &[i64], tiebreak: TermOrder) -> Self {
        TermOrder::WeightRefined {
            weights: vec![vec![1; w.len()], w.iter().map(|x| -x).collect()],
            tiebreak: Box::new(tiebreak),
        }
    }

    /// Integer matrix of the order on `nvars` variables.
    pub fn matrix(&self, nvars: usize) -> Result<Vec<Vec<i64>>> {
        let unit = |v: usize, sign: i64| {
            let mut row = vec![0; nvars];
            row[v] = sign;
            row
        };
        let full_ranking = |ranking: &[usize]| -> Result<Vec<usize>> {
            let mut seen = vec![false; nvars];
            for &v in ranking {
                if v >= nvars || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidOrder(format!("bad ranking {ranking:?}")));
                }
            }
            let mut all = ranking.to_vec();
            all.extend((0..nvars).filter(|&v| !seen[v]));
            Ok(all)
        };
        match self {
            TermOrder::Lex { ranking } => {
                Ok(full_ranking(ranking)?.into_iter().map(|v| unit(v, 1)).collect())
            }
            TermOrder::GrevLex { ranking } => {
                let mut rows = vec![vec![1; nvars]];
                rows.extend(full_ranking(ranking)?.into_iter().rev().map(|v| unit(v, -1)));
                rows.pop();
                Ok(rows)
            }
            TermOrder::WeightRefined { weights, tiebreak } => {
                let mut rows = Vec::new();
                for w in weights {
                    if w.len() != nvars {
                        return Err(Error::InvalidOrder(format!(
                            "weight row has {} entries for {nvars} variables",
                            w.len()
                        )));
                    }
                    rows.push(w.clone());
                }
                rows.extend(tiebreak.matrix(nvars)?);
                Ok(rows)
            }
            TermOrder::Elimination { block, inner } => {
                let mut row = vec![0; nvars];
                for &v in block {
                    if v >= nvars {
                        return Err(Error::InvalidOrder(format!("block variable {v} out of range")));
                    }
                    row[v] = 1;
                }
                let mut rows = vec![row];
                rows.extend(inner.matrix(nvars)?);
                Ok(rows)
            }
            TermOrder::WeightOnly { .. } => Err(Error::InvalidOrder(
                "a bare weight vector is not a total order".into(),
            )),
        }
    }

    /// Compiles the order, checking that it is a term order: the first
    /// nonzero entry of every column must be positive.
    pub fn compile(&self, nvars: usize) -> Result<CompiledOrder> {
        let rows = self.matrix(nvars)?;
        for v in 0..nvars {
            match rows.iter().map(|r| r[v]).find(|&x| x != 0) {
                Some(x) if x > 0 => {}
                _ => {
                    return Err(Error::InvalidOrder(format!(
                        "variable {v} is not larger than 1"
                    )))
                }
            }
        }
        Ok(CompiledOrder { rows })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let c = self.compile(a.nvars())?;
        Ok(c.key(a).cmp(&c.key(b)))
    }
}

#[derive(Clone, Debug)]
pub struct CompiledOrder {
    rows: Vec<Vec<i64>>,
}

impl CompiledOrder {
    pub fn key(&self, m: &Monomial) -> Box<[i64]> {
        self.rows.iter().map(|r| m.weight(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_and_grevlex() {
        let lex = TermOrder::lex(3);
        assert_eq!(lex.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])).unwrap(), Ordering::Greater);
        let grl = TermOrder::grevlex(3);
        // x*z vs y^2: same degree, z exponent decides
        assert_eq!(grl.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])).unwrap(), Ordering::Less);
        assert_eq!(grl.cmp(&mono(&[0, 0, 3]), &mono(&[1, 0, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn weight_only_rejected() {
        let w = TermOrder::WeightOnly { weights: vec![1, 1] };
        assert!(w.compile(2).is_err());
        let bad = TermOrder::WeightRefined {
            weights: vec![vec![-1, 0]],
            tiebreak: Box::new(TermOrder::lex(2)),
        };
        assert!(bad.compile(2).is_err());
    }

    #[test]
    fn column_weights_of_4x4() {
        let vars = VariableSet::matrix(4);
        let w = TermOrder::column_weights(&vars);
        assert_eq!(&w[..4], &[0, 0, 1, 1]);
        assert_eq!(w[vars.m(3, 3)], 1);
    }

    #[test]
    fn serde_shape() {
        let o = TermOrder::min_weight_refinement(&[0, 1], TermOrder::lex(2));
        let js = serde_json::to_string(&o).unwrap();
        assert!(js.contains("\"kind\":\"weight-refined\""));
        assert_eq!(serde_json::from_str::<TermOrder>(&js).unwrap(), o);
    }
}
