use menhir_core::lab::*;
use menhir_core::{Algebra, Product};

fn trial(alg: Algebra) -> Trial {
    Trial::new(alg, Product::Menhir)
}

#[test]
fn three_loop_identities_hold_everywhere() {
    for alg in Algebra::ALL {
        for name in [POWER_ASSOCIATIVE, LEFT_ALTERNATIVE, LEFT_BOL] {
            let r = test_identity(&builtin(name).unwrap(), &trial(alg).samples(500)).unwrap();
            assert!(r.holds && r.max_residual < 1e-10, "{name} on {alg}: {r:?}");
            assert!(r.witness.is_none());
        }
    }
}

#[test]
fn right_alternative_and_moufang_fail_off_the_reals() {
    for alg in [Algebra::Complex, Algebra::Quaternion, Algebra::Octonion] {
        for name in [RIGHT_ALTERNATIVE, MOUFANG_LEFT, MOUFANG_RIGHT, MOUFANG_MIDDLE] {
            let r = test_identity(&builtin(name).unwrap(), &trial(alg).samples(100).seed(3)).unwrap();
            assert!(!r.holds, "{name} on {alg}");
            assert!(r.max_residual > WITNESS_THRESHOLD);
            assert_eq!(r.witness.as_ref().unwrap().len(), builtin(name).unwrap().arity());
        }
    }
}

#[test]
fn every_builtin_holds_on_the_reals() {
    for c in builtin_candidates() {
        let r = test_identity(&c, &trial(Algebra::Real).samples(500)).unwrap();
        assert!(r.holds, "{c}");
    }
}

#[test]
fn deformations_share_the_identities() {
    // μ-conjugate loops satisfy the same laws.
    for product in [Product::Relativistic, Product::Deformed(5)] {
        let t = Trial::new(Algebra::Quaternion, product).samples(200);
        assert!(test_identity(&builtin(LEFT_BOL).unwrap(), &t).unwrap().holds);
        assert!(!test_identity(&builtin(MOUFANG_MIDDLE).unwrap(), &t).unwrap().holds);
    }
    // The limit product adds rapidities, so everything holds.
    let t = Trial::new(Algebra::Quaternion, Product::Limit).samples(200);
    for c in builtin_candidates() {
        assert!(test_identity(&c, &t).unwrap().holds, "{c}");
    }
}

#[test]
fn three_letter_survey() {
    let holders = survey_identities(3, &trial(Algebra::Quaternion).samples(300)).unwrap();
    let has = |name| holders.iter().any(|(c, _)| c.same_law(&builtin(name).unwrap()));
    assert!(has(LEFT_ALTERNATIVE));
    assert!(has(POWER_ASSOCIATIVE));
    assert!(!has(RIGHT_ALTERNATIVE));
    assert_eq!(holders.len(), 2);

    assert_eq!(survey_identities(3, &trial(Algebra::Real).samples(300)).unwrap().len(), 5);
}

#[test]
fn four_letter_survey_is_explained_by_two_laws() {
    let laws = [builtin(LEFT_ALTERNATIVE).unwrap(), builtin(LEFT_BOL).unwrap()];
    for alg in [Algebra::Complex, Algebra::Quaternion, Algebra::Octonion] {
        let t = trial(alg).samples(200).seed(7);
        let holders = survey_identities(4, &t).unwrap();
        assert!(holders.iter().any(|(c, _)| c.same_law(&laws[1])), "{alg}");
        for (c, _) in &holders {
            assert!(is_consequence(c, &laws), "{c} on {alg}");
            // soundness: fresh seed, ten times the samples
            let again = test_identity(c, &t.seed(1_000_003).samples(2000)).unwrap();
            assert!(again.holds, "{c} on {alg}");
        }
        for m in [MOUFANG_LEFT, MOUFANG_RIGHT, MOUFANG_MIDDLE] {
            assert!(!holders.iter().any(|(c, _)| c.same_law(&builtin(m).unwrap())));
        }
    }
}

#[test]
fn surveys_are_seed_deterministic() {
    let t = trial(Algebra::Quaternion).samples(50).seed(42);
    assert_eq!(survey_all(4, &t).unwrap(), survey_all(4, &t).unwrap());
}

#[test]
fn render_parse_round_trip_over_survey_space() {
    for n in [3, 4] {
        for c in survey_candidates(n).unwrap() {
            assert_eq!(IdentityCandidate::parse(&c.render_text()).unwrap(), c);
        }
    }
}
