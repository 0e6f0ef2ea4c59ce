use super::*;
use crate::diagram::{EdgeId, OverChoice, Side};
use crate::states::enumerate_states;

fn conway(terms: &[(u32, i64)]) -> ConwayPoly {
    ConwayPoly::from_terms(terms.iter().copied())
}

#[test]
fn normalization() {
    assert_eq!(nabla(&Diagram::unknot()), HalfLaurent::one());
    assert_eq!(theta(&Diagram::unknot()), HalfLaurent::one());
    for side in [Side::Left, Side::Right] {
        for over in [OverChoice::Over, OverChoice::Under] {
            let k = Diagram::unknot().flat_r1(EdgeId(0), side, over).unwrap();
            assert_eq!(nabla(&k), HalfLaurent::one());
            assert_eq!(theta(&k), HalfLaurent::one());
        }
    }
}

#[test]
fn trefoil_brackets() {
    let d = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
    let sd = StarredDiagram::new(&d, None).unwrap();
    let mut exps: Vec<i64> = sd
        .enumerate()
        .iter()
        .map(|s| bracket_angle(&d, s).min_exp().unwrap())
        .collect();
    exps.sort();
    assert_eq!(exps, vec![-2, 0, 2]);
    assert_eq!(nabla_z(&d), conway(&[(0, 1), (2, 1)]));
}

#[test]
fn square_bracket_inverts_labels_at_fixed_sign() {
    let d = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
    for s in enumerate_states(&d, None).unwrap() {
        assert_eq!(
            bracket_square(&d, &s),
            bracket_angle(&d, &s).invert_variable()
        );
    }
}

#[test]
fn known_values() {
    let fig8 = Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap();
    assert_eq!(nabla_z(&fig8), conway(&[(0, 1), (2, -1)]));
    let hopf = Diagram::from_braid(2, &[1, 1]).unwrap();
    assert_eq!(nabla_z(&hopf), conway(&[(1, 1)]));
    assert_eq!(nabla_z(&hopf.mirror()), conway(&[(1, -1)]));
    assert!(nabla(&Diagram::unlink(2)).is_zero());
}

#[test]
fn theta_identity_on_small_diagrams() {
    for word in [&[1, 1, 1][..], &[1, 1], &[-1, -1], &[1, -1, 1]] {
        let d = Diagram::from_braid(2, word).unwrap();
        let r = verify_theta(&d);
        assert!(r.passed, "{word:?}: {:?}", r.failures());
    }
}

#[test]
fn skein_at_every_trefoil_crossing() {
    let d = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
    for c in d.crossings() {
        let r = verify_skein(&d, c.id()).unwrap();
        assert!(r.passed);
        assert_eq!(r.minus, HalfLaurent::one());
    }
}

#[test]
fn star_independence_on_figure_eight() {
    let d = Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap();
    let r = verify_star_independence(&d).unwrap();
    assert!(r.passed);
    assert!(r.rows.iter().all(|row| row.states == 5));
}

#[test]
fn table_symmetries() {
    assert_eq!(WeightTable::ANGLE.inverted().inverted(), WeightTable::ANGLE);
    assert_eq!(WeightTable::SQUARE.rows_swapped(), WeightTable::ANGLE);
    assert_eq!(all_tables().len(), 144);
}

#[test]
fn inverted_table_negates_z() {
    let d = Diagram::from_braid(2, &[1, 1]).unwrap();
    let inv = evaluate(&d, &WeightTable::ANGLE.inverted(), HoleSign::Black);
    assert_eq!(inv.to_conway().unwrap(), conway(&[(1, -1)]));
}
