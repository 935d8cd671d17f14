use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, VariableSet};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, idx), Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Self {
        Self {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    /// Drops trailing variables; `None` if one of them occurs.
    pub fn truncate_vars(&self, nvars: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.truncate(nvars)?, c.clone());
        }
        Some(Self { nvars, terms })
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[var] > 0)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Divides by the coefficient of the largest monomial in the canonical
    /// display order, so that the first displayed coefficient is 1.
    pub fn monic_by_display(&self) -> Self {
        match display_order(self).first() {
            Some((_, c)) => self.scale(&(Rational::one() / (*c).clone())),
            None => self.clone(),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, vars }
    }

    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        Parser::new(text, vars).parse()
    }
}

fn display_order(p: &Polynomial) -> Vec<(&Monomial, &Rational)> {
    let mut terms: Vec<_> = p.terms.iter().collect();
    // degree descending, then lex with lower-index variables larger
    terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
    terms
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|k| format!("x{k}")).collect();
        let vars = VariableSet::named(names);
        write!(f, "{}", self.display(&vars))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VariableSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = display_order(self.poly);
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(v)),
                    _ => factors.push(format!("{}^{e}", self.vars.name(v))),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a VariableSet,
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a VariableSet) -> Self {
        Self {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            vars,
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        let s: String = self.chars.iter().collect();
        Err(Error::Parse(format!("{what} at offset {} in {s:?}", self.pos)))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        let mut out = Polynomial::zero(n);
        if self.chars.is_empty() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        while self.peek().is_some() {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    Rational::one()
                }
                Some('-') => {
                    self.pos += 1;
                    -Rational::one()
                }
                _ if first => Rational::one(),
                _ => return self.err("expected '+' or '-'"),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, sign * c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let n = self.vars.len();
        let mut exps = vec![0u16; n];
        let mut coef = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coef *= self.number()?,
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let v = self.variable()?;
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        BigInt::one()
                    };
                    let e: u16 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    exps[v] += e;
                }
                _ => return self.err("expected a number or variable"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coef))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn number(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        if self.chars[self.pos..].starts_with(&['m', '[']) {
            while self.peek().is_some_and(|c| c != ']') {
                self.pos += 1;
            }
            if self.peek() != Some(']') {
                return self.err("unterminated matrix variable");
            }
            self.pos += 1;
        } else {
            while self
                .peek()
                .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'')
            {
                self.pos += 1;
            }
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        self.vars.lookup(&name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        let vars = VariableSet::matrix(2);
        let p = Polynomial::parse("-3/2*m[1,2]*m[2,1]^2 + m[1,1] - 4", &vars).unwrap();
        assert_eq!(p.display(&vars).to_string(), "-3/2*m[1,2]*m[2,1]^2 + m[1,1] - 4");
        let q = Polynomial::parse(&p.display(&vars).to_string(), &vars).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cancellation_is_canonical() {
        let vars = VariableSet::named(["x", "y"]);
        let p = Polynomial::parse("x*y - y*x + 2*x - x - x", &vars).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.display(&vars).to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        let vars = VariableSet::matrix(2);
        assert!(Polynomial::parse("m[3,1]", &vars).is_err());
        assert!(Polynomial::parse("z", &vars).is_err());
        assert!(Polynomial::parse("1/0", &vars).is_err());
        assert!(Polynomial::parse("", &vars).is_err());
        assert!(Polynomial::parse("m[1,1] m[1,2]", &vars).is_err());
    }

    #[test]
    fn arithmetic() {
        let vars = VariableSet::named(["x", "y"]);
        let p = |s| Polynomial::parse(s, &vars).unwrap();
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        assert_eq!(&p("x + y") - &p("x"), p("y"));
        assert_eq!(-&p("x"), p("-x"));
        assert!(p("x^2 - y^2").is_homogeneous());
        assert!(!p("x^2 - y").is_homogeneous());
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        assert_eq!(p("x*y + 1").eval(&[two, three]), Rational::from_integer(7.into()));
    }
}
