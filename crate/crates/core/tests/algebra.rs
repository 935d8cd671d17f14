//! Polynomial kernel: worked examples and randomized invariants.

use itertools::Itertools;
use proptest::prelude::*;

use sporbits_core::ideals::{fulton_generators, orbit_ideal, PolyMatrix};
use sporbits_core::poly::{
    buchberger, ideal_equals, ideal_intersection, initial_form, initial_ideal, is_groebner_basis,
    leading_term, normal_form, rat, GbBudget, Ideal, Monomial, Polynomial, TermOrder, VariableSet,
};

fn xy() -> VariableSet {
    VariableSet::named(["x", "y"])
}

fn p(vars: &VariableSet, s: &str) -> Polynomial {
    Polynomial::parse(s, vars).unwrap()
}

fn show(vars: &VariableSet, f: &Polynomial) -> String {
    f.display(vars).to_string()
}

#[test]
fn division_examples() {
    let v = xy();
    let lex = TermOrder::lex(2);
    assert!(normal_form(&p(&v, "x^2"), &[p(&v, "x")], &lex).unwrap().is_zero());
    let r = normal_form(&p(&v, "x^2 - y"), &[p(&v, "x^2 - 1")], &lex).unwrap();
    assert_eq!(show(&v, &r), "-y + 1");
    let m = VariableSet::matrix(2);
    let det = p(&m, "m[1,1]*m[2,2] - m[1,2]*m[2,1]");
    let r = normal_form(&det, &[p(&m, "m[1,1]")], &TermOrder::grevlex(4)).unwrap();
    assert_eq!(show(&m, &r), "-m[1,2]*m[2,1]");
}

#[test]
fn buchberger_example_in_lex() {
    let v = xy();
    let gb = buchberger(&[p(&v, "x^2 - 1"), p(&v, "x*y - 1")], &TermOrder::lex(2), &GbBudget::default())
        .unwrap();
    let shown: Vec<String> = gb.polys().iter().map(|f| show(&v, f)).collect();
    assert_eq!(shown, ["x - y", "y^2 - 1"]);
}

#[test]
fn minors_of_2143_are_already_a_basis() {
    let i = fulton_generators(&"2143".parse().unwrap());
    let ord = TermOrder::antidiagonal(i.vars());
    assert!(is_groebner_basis(i.generators(), &ord).unwrap());
    // the reduced basis only tail-reduces: same leading monomials
    let gb = i.groebner(&ord, &GbBudget::default()).unwrap();
    let mut leads: Vec<Monomial> = i
        .generators()
        .iter()
        .map(|g| leading_term(g, &ord).unwrap().unwrap().0)
        .collect();
    let mut gb_leads = gb.leading_monomials();
    leads.sort();
    gb_leads.sort();
    assert_eq!(leads, gb_leads);
}

#[test]
fn intersection_and_equality_examples() {
    let v = xy();
    let id = |gens: &[&str]| Ideal::parse(v.clone(), gens).unwrap();
    let b = GbBudget::default();
    let meet = ideal_intersection(&id(&["x"]), &id(&["y"]), &b).unwrap();
    assert!(ideal_equals(&meet, &id(&["x*y"]), &b).unwrap());
    let meet = ideal_intersection(&id(&["x", "y"]), &id(&["x"]), &b).unwrap();
    assert!(ideal_equals(&meet, &id(&["x"]), &b).unwrap());
    assert!(ideal_equals(&id(&["x", "y"]), &id(&["y", "x"]), &b).unwrap());
    assert!(!ideal_equals(&id(&["x"]), &id(&["x^2"]), &b).unwrap());
    assert!(ideal_equals(&id(&["x - y", "y^2 - 1"]), &id(&["x^2 - 1", "x*y - 1"]), &b).unwrap());
}

#[test]
fn schubert_intersection_lies_in_both_components() {
    let b = GbBudget::default();
    let i = fulton_generators(&"1342".parse().unwrap());
    let j = fulton_generators(&"3124".parse().unwrap());
    let meet = ideal_intersection(&i, &j, &b).unwrap();
    let gi = i.canonical_basis(&b).unwrap();
    let gj = j.canonical_basis(&b).unwrap();
    for g in meet.generators() {
        assert!(gi.contains(g) && gj.contains(g));
    }
    // a product of one generator from each side is in the intersection
    let prod = &i.generators()[0] * &j.generators()[0];
    assert!(meet.contains(&prod, &b).unwrap());
}

#[test]
fn weight_initial_form_of_an_mjmt_entry() {
    let vars = VariableSet::matrix(4);
    let a = PolyMatrix::mjmt(&vars);
    let w = TermOrder::column_weights(&vars);
    let f = initial_form(a.get(1, 2), &w).unwrap();
    assert_eq!(show(&vars, &f), "m[1,1]*m[2,2] - m[1,2]*m[2,1]");
    let c = Polynomial::constant(16, rat(5));
    assert_eq!(initial_form(&c, &w).unwrap(), c);
    let zero = Ideal::zero(vars.clone());
    let init = initial_ideal(&zero, &w, &TermOrder::antidiagonal(&vars), &GbBudget::default()).unwrap();
    assert!(init.is_zero());
}

#[test]
fn antidiagonal_order_picks_antidiagonal_terms() {
    let vars = VariableSet::matrix(2);
    let det = PolyMatrix::generic(&vars).determinant();
    let (lead, _) = leading_term(&det, &TermOrder::antidiagonal(&vars)).unwrap().unwrap();
    assert_eq!(lead, Monomial::from_exponents(vec![0, 1, 1, 0]));
    let vars = VariableSet::matrix(3);
    let ord = TermOrder::antidiagonal(&vars);
    let det = PolyMatrix::generic(&vars).determinant();
    let (lead, _) = leading_term(&det, &ord).unwrap().unwrap();
    let mut e = vec![0; 9];
    for (i, j) in [(1, 3), (2, 2), (3, 1)] {
        e[vars.m(i, j)] = 1;
    }
    assert_eq!(lead, Monomial::from_exponents(e));
    let x = Polynomial::var(9, vars.m(2, 3));
    assert_eq!(leading_term(&x, &ord).unwrap().unwrap().0, Monomial::var(9, vars.m(2, 3)));
}

#[test]
fn every_minor_of_a_generic_4x4_leads_with_its_antidiagonal() {
    let vars = VariableSet::matrix(4);
    let ord = TermOrder::antidiagonal(&vars);
    let m = PolyMatrix::generic(&vars);
    for k in 1..=4 {
        for rows in (1..=4).combinations(k) {
            for cols in (1..=4).combinations(k) {
                let det = m.submatrix(&rows, &cols).unwrap().determinant();
                let mut e = vec![0; 16];
                for t in 0..k {
                    e[vars.m(rows[t], cols[k - 1 - t])] += 1;
                }
                let (lead, _) = leading_term(&det, &ord).unwrap().unwrap();
                assert_eq!(lead, Monomial::from_exponents(e), "rows {rows:?} cols {cols:?}");
            }
        }
    }
}

#[test]
fn initial_ideal_does_not_depend_on_the_tie_break() {
    let b = GbBudget::default();
    let vars = VariableSet::matrix(4);
    let w = TermOrder::column_weights(&vars);
    let ideals = [
        orbit_ideal(&"4321".parse().unwrap()).unwrap(),
        orbit_ideal(&"3412".parse().unwrap()).unwrap(),
        fulton_generators(&"2143".parse().unwrap()),
        fulton_generators(&"1432".parse().unwrap()),
    ];
    for i in &ideals {
        let a = initial_ideal(i, &w, &TermOrder::antidiagonal(&vars), &b).unwrap();
        let c = initial_ideal(i, &w, &TermOrder::grevlex(16), &b).unwrap();
        assert!(ideal_equals(&a, &c, &b).unwrap());
    }
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), -3i64..=3), 1..4).prop_map(|terms| {
        Polynomial::from_terms(
            3,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), rat(c))),
        )
    })
}

fn orders() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::lex(3)),
        Just(TermOrder::grevlex(3)),
        Just(TermOrder::Lex { ranking: vec![2, 0, 1] }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_remainder_is_reduced_and_congruent(
        f in small_poly(),
        gs in prop::collection::vec(small_poly(), 1..3),
        ord in orders(),
    ) {
        let gs: Vec<Polynomial> = gs.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        let r = normal_form(&f, &gs, &ord).unwrap();
        let leads: Vec<Monomial> = gs
            .iter()
            .map(|g| leading_term(g, &ord).unwrap().unwrap().0)
            .collect();
        for (m, _) in r.terms() {
            prop_assert!(leads.iter().all(|l| !l.divides(m)));
        }
        let budget = GbBudget { max_degree: 12, ..GbBudget::default() };
        if let Ok(gb) = buchberger(&gs, &ord, &budget) {
            prop_assert!(gb.contains(&(&f - &r)));
        }
    }

    #[test]
    fn buchberger_output_is_a_fixed_point(
        gs in prop::collection::vec(small_poly(), 1..3),
        ord in orders(),
    ) {
        let budget = GbBudget { max_degree: 12, ..GbBudget::default() };
        if let Ok(gb) = buchberger(&gs, &ord, &budget) {
            prop_assert!(is_groebner_basis(gb.polys(), &ord).unwrap());
            let input = if gb.is_zero_ideal() { vec![Polynomial::zero(3)] } else { gb.polys().to_vec() };
            let again = buchberger(&input, &ord, &budget).unwrap();
            prop_assert_eq!(again.polys(), gb.polys());
            for g in &gs {
                prop_assert!(gb.contains(g));
            }
        }
    }
}
