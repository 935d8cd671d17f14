use sporbits_core::fpf::FpfInvolution;
use sporbits_core::ideals::{orbit_ideal, union_schubert_ideal, verify_degeneration};
use sporbits_core::pairperm::pair_permutations;
use sporbits_core::poly::{GbBudget, Polynomial};

fn fpf(s: &str) -> FpfInvolution {
    s.parse().unwrap()
}

#[test]
fn rainbow_of_size_four_degenerates_to_its_schubert_union() {
    let report = verify_degeneration(&fpf("4321"), &GbBudget::default()).unwrap();
    assert!(report.equal, "witnesses: {:?}", report.witnesses);
    let words: Vec<String> = report.pair_permutations.iter().map(|p| p.to_string()).collect();
    assert_eq!(words, ["1342", "3124"]);
    assert!(!report.left.is_zero());
}

#[test]
fn union_ideal_vanishes_on_each_component() {
    let iota = fpf("4321");
    let pairs = pair_permutations(&iota, 8).unwrap().perms;
    let union = union_schubert_ideal(&pairs, &GbBudget::default()).unwrap();
    for pi in &pairs {
        let gb = sporbits_core::ideals::fulton_generators(pi)
            .canonical_basis(&GbBudget::default())
            .unwrap();
        for g in union.generators() {
            assert!(gb.contains(g));
        }
    }
}

#[test]
fn orbit_generators_lie_in_the_union_ideal_after_degeneration() {
    // The orbit generators are not in the union ideal itself: only their
    // initial forms are. This checks the orbit ideal is a proper ideal.
    let orbit = orbit_ideal(&fpf("4321")).unwrap();
    let one = Polynomial::one(16);
    assert!(!orbit.contains(&one, &GbBudget::default()).unwrap());
}

#[test]
fn report_round_trips_through_json() {
    let report = verify_degeneration(&fpf("4321"), &GbBudget::default()).unwrap();
    let js = serde_json::to_string(&report).unwrap();
    let back: sporbits_core::ideals::DegenerationReport = serde_json::from_str(&js).unwrap();
    assert_eq!(back, report);
}
