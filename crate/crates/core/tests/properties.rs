use proptest::prelude::*;

use fkt::corpus::builtin;
use fkt::random::{random_diagram, random_flat_move, rng};
use fkt::seifert::parity_class;
use fkt::states::{construct_trail_state, StarredDiagram};
use fkt::statesum::{nabla, theta, verify_theta};

fn seed_diagram(i: usize) -> fkt::Diagram {
    let all: Vec<_> = builtin()
        .into_iter()
        .filter(|d| d.crossing_count() <= 5)
        .collect();
    all[i % all.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // The moves build genuine R1/R2 moves (the finger stays on one level), so
    // the link and hence nabla are unchanged.
    #[test]
    fn flat_moves_keep_nabla(i in 0usize..64, seed in any::<u64>(), moves in 1usize..3) {
        let d = seed_diagram(i);
        let mut r = rng(seed);
        let mut e = d.clone();
        for _ in 0..moves {
            e = random_flat_move(&e, &mut r);
        }
        prop_assert_eq!(nabla(&e), nabla(&d));
        prop_assert_eq!(parity_class(&e), parity_class(&d));
    }

    #[test]
    fn theta_identity_on_random_diagrams(i in 0usize..64, seed in any::<u64>()) {
        let d = random_diagram(&seed_diagram(i), 7, &mut rng(seed));
        let r = verify_theta(&d);
        prop_assert!(r.passed, "{:?}", r.failures());
        prop_assert_eq!(theta(&d), nabla(&d));
    }

    #[test]
    fn trail_state_is_enumerated(i in 0usize..64, seed in any::<u64>()) {
        let d = random_diagram(&seed_diagram(i), 7, &mut rng(seed));
        let sd = StarredDiagram::new(&d, None).unwrap();
        let (_, s) = construct_trail_state(&sd).unwrap();
        prop_assert!(sd.enumerate().contains(&s));
    }

    #[test]
    fn json_round_trip(i in 0usize..64, seed in any::<u64>()) {
        let d = random_diagram(&seed_diagram(i), 8, &mut rng(seed));
        let back = fkt::Diagram::from_json(&d.to_json_string()).unwrap();
        prop_assert_eq!(back, d);
    }
}
