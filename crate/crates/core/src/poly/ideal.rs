use serde::{Deserialize, Serialize};

use super::{buchberger, GbBudget, GroebnerBasis, Monomial, Polynomial, Rational, TermOrder, VariableSet};
use crate::error::{Error, Result};

/// An ideal given by generators in a fixed variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: VariableSet,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: VariableSet, generators: Vec<Polynomial>) -> Result<Self> {
        let n = vars.len();
        if let Some(g) = generators.iter().find(|g| g.nvars() != n) {
            return Err(Error::SizeMismatch(g.nvars(), n));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self { vars, generators })
    }

    pub fn zero(vars: VariableSet) -> Self {
        Self {
            vars,
            generators: Vec::new(),
        }
    }

    pub fn parse<S: AsRef<str>>(vars: VariableSet, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Polynomial::parse(g.as_ref(), &vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, gens)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn groebner(&self, ord: &TermOrder, budget: &GbBudget) -> Result<GroebnerBasis> {
        if self.generators.is_empty() {
            return buchberger(&[Polynomial::zero(self.vars.len())], ord, budget);
        }
        buchberger(&self.generators, ord, budget)
    }

    /// Reduced Gröbner basis in the default order (grevlex).
    pub fn canonical_basis(&self, budget: &GbBudget) -> Result<GroebnerBasis> {
        self.groebner(&TermOrder::grevlex(self.vars.len()), budget)
    }

    pub fn contains(&self, f: &Polynomial, budget: &GbBudget) -> Result<bool> {
        Ok(self.canonical_basis(budget)?.contains(f))
    }

    /// Generators rendered in the canonical text form.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.display(&self.vars).to_string())
            .collect()
    }
}

#[derive(Serialize)]
struct IdealJson<'a> {
    vars: &'a VariableSet,
    generators: Vec<String>,
}

#[derive(Deserialize)]
struct IdealJsonOwned {
    vars: VariableSet,
    generators: Vec<String>,
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJsonOwned::deserialize(d)?;
        Ideal::parse(raw.vars, &raw.generators).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            vars: &self.vars,
            generators: self.generator_strings(),
        }
        .serialize(s)
    }
}

fn check_same_vars(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.vars != b.vars {
        return Err(Error::SizeMismatch(a.vars.len(), b.vars.len()));
    }
    Ok(())
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal, budget: &GbBudget) -> Result<Ideal> {
    check_same_vars(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(a.vars.clone()));
    }
    let n = a.vars.len();
    let (_, t) = a.vars.with_fresh_aux("t");
    let tv = Polynomial::var(n + 1, t);
    let one_minus_t = &Polynomial::one(n + 1) - &tv;
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|f| &f.extend_vars(1) * &tv).collect();
    gens.extend(b.generators.iter().map(|g| &g.extend_vars(1) * &one_minus_t));
    let ord = TermOrder::Elimination {
        block: vec![t],
        inner: Box::new(TermOrder::grevlex(n + 1)),
    };
    let gb = buchberger(&gens, &ord, budget)?;
    let kept = gb
        .into_polys()
        .into_iter()
        .filter_map(|g| g.truncate_vars(n))
        .collect();
    Ideal::new(a.vars.clone(), kept)
}

/// Sum of the terms of `f` of least `w`-weight.
pub fn initial_form(f: &Polynomial, w: &[i64]) -> Result<Polynomial> {
    if w.len() != f.nvars() {
        return Err(Error::SizeMismatch(w.len(), f.nvars()));
    }
    if let Some((var, &weight)) = w.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeWeight { var, weight });
    }
    let Some(min) = f.terms().map(|(m, _)| m.weight(w)).min() else {
        return Ok(f.clone());
    };
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.terms()
            .filter(|(m, _)| m.weight(w) == min)
            .map(|(m, c): (&Monomial, &Rational)| (m.clone(), c.clone())),
    ))
}

/// Initial ideal with respect to `w` (least-weight terms). The ideal must be
/// homogeneous so that the degree-first refinement is a term order.
pub fn initial_ideal(
    ideal: &Ideal,
    w: &[i64],
    tiebreak: &TermOrder,
    budget: &GbBudget,
) -> Result<Ideal> {
    let n = ideal.vars.len();
    if w.len() != n {
        return Err(Error::SizeMismatch(w.len(), n));
    }
    if let Some((var, &weight)) = w.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeWeight { var, weight });
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let ord = TermOrder::min_weight_refinement(w, tiebreak.clone());
    let gb = ideal.groebner(&ord, budget)?;
    let gens = gb
        .polys()
        .iter()
        .map(|g| initial_form(g, w))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.vars.clone(), gens)
}

/// Equality through reduced Gröbner bases in grevlex.
pub fn ideal_equals(a: &Ideal, b: &Ideal, budget: &GbBudget) -> Result<bool> {
    check_same_vars(a, b)?;
    Ok(a.canonical_basis(budget)? == b.canonical_basis(budget)?)
}

/// A generator of one ideal that is not in the other, checking `a ⊆ b`
/// first. `None` when the ideals are equal.
pub fn difference_witness(
    a: &Ideal,
    b: &Ideal,
    budget: &GbBudget,
) -> Result<Option<(Polynomial, bool)>> {
    check_same_vars(a, b)?;
    let gb_b = b.canonical_basis(budget)?;
    if let Some(f) = a.generators.iter().find(|f| !gb_b.contains(f)) {
        return Ok(Some((f.clone(), true)));
    }
    let gb_a = a.canonical_basis(budget)?;
    Ok(b.generators
        .iter()
        .find(|g| !gb_a.contains(g))
        .map(|g| (g.clone(), false)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(names: &[&str], gens: &[&str]) -> Ideal {
        Ideal::parse(VariableSet::named(names.iter().copied()), gens).unwrap()
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let i = ideal(&["x", "y"], &["x"]);
        let j = ideal(&["x", "y"], &["y"]);
        let k = ideal_intersection(&i, &j, &GbBudget::default()).unwrap();
        assert!(ideal_equals(&k, &ideal(&["x", "y"], &["x*y"]), &GbBudget::default()).unwrap());
    }

    #[test]
    fn intersection_with_zero_is_zero() {
        let i = ideal(&["x"], &["x"]);
        let z = Ideal::zero(i.vars().clone());
        assert!(ideal_intersection(&i, &z, &GbBudget::default()).unwrap().is_zero());
    }

    #[test]
    fn initial_form_keeps_least_weight() {
        let vars = VariableSet::named(["x", "y"]);
        let f = Polynomial::parse("x^2 + x*y + y^2", &vars).unwrap();
        let g = initial_form(&f, &[0, 1]).unwrap();
        assert_eq!(g.display(&vars).to_string(), "x^2");
        assert!(matches!(
            initial_form(&f, &[0, -1]),
            Err(Error::NegativeWeight { var: 1, weight: -1 })
        ));
    }

    #[test]
    fn initial_ideal_needs_homogeneity() {
        let i = ideal(&["x", "y"], &["x + y^2"]);
        assert!(matches!(
            initial_ideal(&i, &[0, 0], &TermOrder::lex(2), &GbBudget::default()),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn initial_ideal_is_more_than_initial_forms() {
        // in_w of the generators alone would give <x^2, x*y>; the Gröbner
        // basis adds y^3 to the initial ideal.
        let i = ideal(&["x", "y"], &["x^2 + y^2", "x*y"]);
        let init = initial_ideal(&i, &[0, 1], &TermOrder::lex(2), &GbBudget::default()).unwrap();
        let expected = ideal(&["x", "y"], &["x^2", "x*y", "y^3"]);
        assert!(ideal_equals(&init, &expected, &GbBudget::default()).unwrap());
    }

    #[test]
    fn witness_names_missing_generator() {
        let i = ideal(&["x", "y"], &["x", "y"]);
        let j = ideal(&["x", "y"], &["x"]);
        let (w, in_first) = difference_witness(&i, &j, &GbBudget::default()).unwrap().unwrap();
        assert!(in_first);
        assert_eq!(w.display(j.vars()).to_string(), "y");
        assert!(difference_witness(&j, &j, &GbBudget::default()).unwrap().is_none());
    }
}
