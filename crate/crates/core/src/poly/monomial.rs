use std::fmt;

/// Exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Self(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Self(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same monomial with `extra` zero exponents appended.
    pub fn extend(&self, extra: usize) -> Self {
        let mut e = self.0.to_vec();
        e.resize(e.len() + extra, 0);
        Self(e.into_boxed_slice())
    }

    /// Drops trailing variables; `None` if any of them has a positive exponent.
    pub fn truncate(&self, nvars: usize) -> Option<Self> {
        if self.0[nvars..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Self(self.0[..nvars].into()))
    }

    pub fn weight(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(&e, &wi)| i64::from(e) * wi).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
