//! Pfaffians, orbit ideals at sampled orbit points, and orbit classification.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sporbits_core::fpf::{enumerate_fpf, opposite_leq, FpfInvolution};
use sporbits_core::ideals::{
    catalog_entry, classify_orbit, verify_knutson_miller, PolyMatrix, QMatrix,
};
use sporbits_core::pairperm::pair_permutations;
use sporbits_core::perm::Permutation;
use sporbits_core::poly::{Polynomial, Rational};

/// Leibniz determinant: a sum over all permutations, independent of the
/// memoized Laplace expansion used by the library.
fn leibniz(m: &PolyMatrix, nvars: usize) -> Polynomial {
    let k = m.size();
    let mut acc = Polynomial::zero(nvars);
    for p in Permutation::all(k) {
        let mut term = Polynomial::one(nvars);
        for i in 1..=k {
            term = &term * m.get(i, p.apply(i));
        }
        acc = if p.length() % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[test]
fn pfaffian_squares_to_determinant() {
    for size in [2, 4, 6] {
        let (vars, a) = PolyMatrix::generic_antisymmetric(size);
        let pf = a.pfaffian().unwrap();
        let det = leibniz(&a, vars.len());
        assert_eq!(&pf * &pf, det, "size {size}");
        assert_eq!(a.determinant(), det);
    }
}

fn point(m: &QMatrix) -> Vec<Rational> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .map(|(i, j)| m.at(i, j).clone())
        .collect()
}

/// A random matrix in the orbit of `iota`: `b · M_w · s`.
fn sample(iota: &FpfInvolution, rng: &mut ChaCha8Rng) -> QMatrix {
    let size = iota.size();
    let w = &pair_permutations(iota, 8).unwrap().perms[0];
    let b = QMatrix::random_lower_triangular(size, rng);
    let s = QMatrix::random_symplectic(size, 3, rng).unwrap();
    b.mul(&QMatrix::permutation(w)).unwrap().mul(&s).unwrap()
}

#[test]
fn catalog_generators_vanish_exactly_on_the_orbit_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for word in ["4321", "3412", "216543", "351624", "432165", "341265", "215634"] {
        let iota: FpfInvolution = word.parse().unwrap();
        let entry = catalog_entry(&iota).unwrap();
        for other in enumerate_fpf(iota.n(), 5).unwrap() {
            let below = opposite_leq(&other, &iota).unwrap();
            let samples = if other == iota { 50 } else { 4 };
            for _ in 0..samples {
                let m = sample(&other, &mut rng);
                assert_eq!(classify_orbit(&m).unwrap(), other);
                let x = point(&m);
                let vanish = entry
                    .ideal
                    .generators()
                    .iter()
                    .all(|g| g.eval(&x) == Rational::from_integer(0.into()));
                if below {
                    assert!(vanish, "{word} generators at a point of {other}");
                } else {
                    assert!(!vanish, "{word} generators vanish at a point of {other}");
                }
            }
        }
    }
}

#[test]
fn classification_is_invariant_under_both_group_actions() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for iota in enumerate_fpf(2, 5).unwrap() {
        for w in pair_permutations(&iota, 8).unwrap().perms {
            let m = QMatrix::permutation(&w);
            assert_eq!(classify_orbit(&m).unwrap(), iota);
            for _ in 0..20 {
                let b = QMatrix::random_lower_triangular(4, &mut rng);
                let s = QMatrix::random_symplectic(4, 4, &mut rng).unwrap();
                let moved = b.mul(&m).unwrap().mul(&s).unwrap();
                assert_eq!(classify_orbit(&moved).unwrap(), iota);
            }
        }
    }
}

#[test]
fn identity_classifies_as_the_dense_orbit() {
    for n in 1..=4 {
        assert_eq!(
            classify_orbit(&QMatrix::identity(2 * n)).unwrap(),
            FpfInvolution::j_bar(n)
        );
    }
}

#[test]
fn minors_form_an_antidiagonal_basis_for_all_of_s4() {
    for pi in Permutation::all(4) {
        assert!(verify_knutson_miller(&pi).unwrap(), "{pi}");
    }
}

#[test]
fn minors_form_an_antidiagonal_basis_for_sampled_s5() {
    for word in [
        "21543", "35142", "52341", "43512", "13254", "25314", "41352", "32154", "15432", "54321",
    ] {
        let pi: Permutation = word.parse().unwrap();
        assert!(verify_knutson_miller(&pi).unwrap(), "{pi}");
    }
}
