use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{rat, Polynomial, Rational, VariableSet};

/// Square matrix of polynomials over a shared variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn(size: usize, nvars: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                entries.push(f(i, j));
            }
        }
        Self { size, nvars, entries }
    }

    /// The matrix of variables `m[i,j]`.
    pub fn generic(vars: &VariableSet) -> Self {
        let n = vars.len();
        Self::from_fn(vars.matrix_size, n, |i, j| Polynomial::var(n, vars.m(i, j)))
    }

    /// Generic antisymmetric matrix in variables `a{i}{j}`, `i < j`, listed
    /// row by row.
    pub fn generic_antisymmetric(size: usize) -> (VariableSet, Self) {
        let names: Vec<String> = (1..=size)
            .flat_map(|i| (i + 1..=size).map(move |j| format!("a{i}_{j}")))
            .collect();
        let vars = VariableSet::named(names);
        let n = vars.len();
        let index = |i: usize, j: usize| vars.aux_index(&format!("a{i}_{j}")).expect("named");
        let m = Self::from_fn(size, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => Polynomial::var(n, index(i, j)),
            std::cmp::Ordering::Greater => -&Polynomial::var(n, index(j, i)),
            std::cmp::Ordering::Equal => Polynomial::zero(n),
        });
        (vars, m)
    }

    /// `M·J·Mᵀ` for the generic matrix `M`; entry `(a,b)` is
    /// `Σ_k m[a,2k−1]·m[b,2k] − m[a,2k]·m[b,2k−1]`.
    pub fn mjmt(vars: &VariableSet) -> Self {
        let size = vars.matrix_size;
        let n = vars.len();
        let v = |i, j| Polynomial::var(n, vars.m(i, j));
        Self::from_fn(size, n, |a, b| {
            let mut acc = Polynomial::zero(n);
            for k in 1..=size / 2 {
                acc = &acc + &(&v(a, 2 * k - 1) * &v(b, 2 * k));
                acc = &acc - &(&v(a, 2 * k) * &v(b, 2 * k - 1));
            }
            acc
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * self.size + (j - 1)]
    }

    /// Submatrix on the given 1-based rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::Matrix(format!(
                "submatrix must be square, got {}x{}",
                rows.len(),
                cols.len()
            )));
        }
        if let Some(&bad) = rows.iter().chain(cols).find(|&&x| x == 0 || x > self.size) {
            return Err(Error::Matrix(format!("index {bad} outside a {0}x{0} matrix", self.size)));
        }
        Ok(Self::from_fn(rows.len(), self.nvars, |i, j| {
            self.get(rows[i - 1], cols[j - 1]).clone()
        }))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (1..=self.size).all(|i| {
            self.get(i, i).is_zero()
                && (i + 1..=self.size).all(|j| *self.get(i, j) == -self.get(j, i))
        })
    }

    /// Determinant by Laplace expansion along rows, memoized on the set of
    /// remaining columns.
    pub fn determinant(&self) -> Polynomial {
        let mut memo = HashMap::new();
        self.det_rec(0, (1u64 << self.size) - 1, &mut memo)
    }

    fn det_rec(&self, row: usize, cols: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        if row == self.size {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_neg = false;
        for c in 0..self.size {
            if cols & (1 << c) == 0 {
                continue;
            }
            let e = self.get(row + 1, c + 1);
            if !e.is_zero() {
                let term = e * &self.det_rec(row + 1, cols & !(1 << c), memo);
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Pfaffian by expansion along the first remaining row, with
    /// `pf((0,a),(−a,0)) = a`.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        if self.size % 2 == 1 {
            return Err(Error::Matrix(format!("pfaffian of odd size {}", self.size)));
        }
        if !self.is_antisymmetric() {
            return Err(Error::Matrix("pfaffian of a non-antisymmetric matrix".into()));
        }
        let mut memo = HashMap::new();
        Ok(self.pf_rec((1u64 << self.size) - 1, &mut memo))
    }

    fn pf_rec(&self, idx: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        if idx == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&idx) {
            return p.clone();
        }
        let first = idx.trailing_zeros() as usize;
        let rest = idx & !(1 << first);
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_neg = false;
        for j in 0..self.size {
            if rest & (1 << j) == 0 {
                continue;
            }
            let e = self.get(first + 1, j + 1);
            if !e.is_zero() {
                let term = e * &self.pf_rec(rest & !(1 << j), memo);
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(idx, acc.clone());
        acc
    }
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Matrix("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses entries such as `"3"`, `"-3/2"`.
    pub fn from_strings<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        s.as_ref()
                            .trim()
                            .parse::<Rational>()
                            .map_err(|e| Error::Parse(format!("bad rational {:?}: {e}", s.as_ref())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    /// The standard symplectic form: 2×2 blocks `((0,1),(−1,0))`.
    pub fn symplectic_form(size: usize) -> Result<Self> {
        if size % 2 == 1 {
            return Err(Error::Matrix(format!("symplectic form of odd size {size}")));
        }
        let mut m = Self::zeros(size, size);
        for k in (0..size).step_by(2) {
            m.set(k, k + 1, Rational::one());
            m.set(k + 1, k, -Rational::one());
        }
        Ok(m)
    }

    /// Matrix with a one at `(i, w(i))`.
    pub fn permutation(w: &Permutation) -> Self {
        let n = w.len();
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i - 1, w.apply(i) - 1, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry.
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rank of the top-left `r × c` block, by exact Gaussian elimination.
    pub fn rank_nw(&self, r: usize, c: usize) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..r)
            .map(|i| (0..c).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..c {
            let Some(p) = (rank..r).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for i in rank + 1..r {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = &a[i][col] / &pivot;
                for j in col..c {
                    let delta = &f * &a[rank][j];
                    a[i][j] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rank_nw(self.rows, self.cols)
    }

    /// Random invertible lower-triangular matrix with small integer entries.
    pub fn random_lower_triangular(n: usize, rng: &mut impl Rng) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            let d: i64 = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
            m.set(i, i, rat(d));
            for j in 0..i {
                m.set(i, j, rat(rng.gen_range(-5..=5)));
            }
        }
        m
    }

    /// Random symplectic matrix: a product of `steps` transvections
    /// `x ↦ x + c·(vᵀJx)·v` with small rational `c` and integer `v`.
    pub fn random_symplectic(size: usize, steps: usize, rng: &mut impl Rng) -> Result<Self> {
        let j = Self::symplectic_form(size)?;
        let mut s = Self::identity(size);
        for _ in 0..steps {
            let v: Vec<Rational> = (0..size).map(|_| rat(rng.gen_range(-3..=3))).collect();
            let c = Rational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=3).into());
            // row vector vᵀJ
            let vj: Vec<Rational> = (0..size)
                .map(|col| (0..size).map(|k| &v[k] * j.at(k, col)).sum())
                .collect();
            let mut t = Self::identity(size);
            for a in 0..size {
                for b in 0..size {
                    let add = &c * &v[a] * &vj[b];
                    t.data[a * size + b] += add;
                }
            }
            s = s.mul(&t)?;
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mjmt_entry_of_size_four() {
        let vars = VariableSet::matrix(4);
        let a = PolyMatrix::mjmt(&vars);
        assert!(a.get(1, 1).is_zero());
        assert_eq!(
            a.get(1, 2).display(&vars).to_string(),
            "m[1,1]*m[2,2] - m[1,2]*m[2,1] + m[1,3]*m[2,4] - m[1,4]*m[2,3]"
        );
        assert!(a.is_antisymmetric());
    }

    #[test]
    fn pfaffian_sign_and_four_by_four() {
        let (vars, a) = PolyMatrix::generic_antisymmetric(2);
        assert_eq!(a.pfaffian().unwrap().display(&vars).to_string(), "a1_2");
        let (vars, a) = PolyMatrix::generic_antisymmetric(4);
        assert_eq!(
            a.pfaffian().unwrap().display(&vars).to_string(),
            "a1_2*a3_4 - a1_3*a2_4 + a1_4*a2_3"
        );
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        let vars = VariableSet::matrix(3);
        assert!(PolyMatrix::generic(&vars).pfaffian().is_err());
        let vars = VariableSet::matrix(2);
        assert!(PolyMatrix::generic(&vars).pfaffian().is_err());
    }

    #[test]
    fn determinant_of_two_by_two() {
        let vars = VariableSet::matrix(2);
        let d = PolyMatrix::generic(&vars).determinant();
        assert_eq!(d.display(&vars).to_string(), "m[1,1]*m[2,2] - m[1,2]*m[2,1]");
    }

    #[test]
    fn symplectic_form_squares_to_minus_identity() {
        let j = QMatrix::symplectic_form(4).unwrap();
        let jj = j.mul(&j).unwrap();
        let mut minus_id = QMatrix::identity(4);
        for i in 0..4 {
            minus_id.set(i, i, rat(-1));
        }
        assert_eq!(jj, minus_id);
        assert_eq!(j.transpose().data, j.data.iter().map(|x| -x).collect::<Vec<_>>());
    }

    #[test]
    fn transvections_preserve_the_form() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let j = QMatrix::symplectic_form(4).unwrap();
        for _ in 0..5 {
            let s = QMatrix::random_symplectic(4, 3, &mut rng).unwrap();
            let sjst = s.mul(&j).unwrap().mul(&s.transpose()).unwrap();
            assert_eq!(sjst, j);
        }
    }

    #[test]
    fn nw_ranks() {
        let m = QMatrix::from_strings(&[vec!["1", "2"], vec!["2", "4"]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_nw(1, 1), 1);
        assert_eq!(QMatrix::identity(3).rank(), 3);
        assert_eq!(m.to_strings()[1][1], "4");
    }
}
