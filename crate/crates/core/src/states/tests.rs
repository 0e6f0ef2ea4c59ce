use super::*;
use crate::diagram::{Diagram, EdgeId, OverChoice, Side};

fn trefoil() -> Diagram {
    Diagram::from_braid(2, &[1, 1, 1]).unwrap()
}

fn figure_eight() -> Diagram {
    Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap()
}

/// Every injective corner assignment avoiding the stars, by brute force.
fn brute_force_count(sd: &StarredDiagram<'_>) -> usize {
    let n = sd.diagram().crossing_count();
    (0..4usize.pow(n as u32))
        .filter(|code| {
            let quads: Vec<Quadrant> = (0..n)
                .map(|c| Quadrant::ALL[code / 4usize.pow(c as u32) % 4])
                .collect();
            sd.state(&quads).is_ok()
        })
        .count()
}

#[test]
fn trefoil_has_three_states() {
    let d = trefoil();
    let sd = StarredDiagram::new(&d, None).unwrap();
    assert_eq!(sd.enumerate().len(), 3);
    assert_eq!(brute_force_count(&sd), 3);
}

#[test]
fn figure_eight_has_five_states() {
    let d = figure_eight();
    let sd = StarredDiagram::new(&d, None).unwrap();
    assert_eq!(sd.enumerate().len(), 5);
    assert_eq!(brute_force_count(&sd), 5);
}

#[test]
fn enumeration_matches_brute_force_for_every_star_pair() {
    for d in [
        trefoil(),
        figure_eight(),
        Diagram::from_braid(2, &[1, 1]).unwrap(),
    ] {
        let base = StarredDiagram::new(&d, None).unwrap();
        for stars in StarPair::all(base.regions()) {
            let sd = base.with_stars(stars);
            assert_eq!(sd.enumerate().len(), brute_force_count(&sd));
        }
    }
}

#[test]
fn unknot_has_one_empty_state() {
    let d = Diagram::unknot();
    let states = enumerate_states(&d, None).unwrap();
    assert_eq!(states.len(), 1);
    assert!(states[0].is_empty());
}

#[test]
fn markers_hit_each_unstarred_region_once() {
    let d = figure_eight();
    let sd = StarredDiagram::new(&d, None).unwrap();
    for s in sd.enumerate() {
        let mut regions: Vec<usize> = s.markers().iter().map(|m| m.region).collect();
        regions.sort_unstable();
        let expected: Vec<usize> = (0..sd.regions().len())
            .filter(|r| !sd.stars().contains(*r))
            .collect();
        assert_eq!(regions, expected);
    }
}

#[test]
fn invalid_stars_are_rejected() {
    let d = trefoil();
    assert!(matches!(
        StarredDiagram::new(&d, Some((0, 0))),
        Err(StateError::InvalidStars(..))
    ));
    assert!(matches!(
        StarredDiagram::new(&d, Some((0, 99))),
        Err(StateError::InvalidStars(..))
    ));
}

#[test]
fn trefoil_hole_counts() {
    let d = trefoil();
    let sd = StarredDiagram::new(&d, None).unwrap();
    let mut counts: Vec<(usize, usize)> = sd.enumerate().iter().map(hole_counts).collect();
    counts.sort();
    assert_eq!(counts, vec![(0, 2), (1, 1), (2, 0)]);
}

#[test]
fn parity_report_for_trefoil_passes() {
    let d = trefoil();
    let r = verify_parity(&StarredDiagram::new(&d, None).unwrap());
    assert_eq!((r.c, r.s, r.mu, r.expected_total), (3, 2, 1, 2));
    assert!(r.passed);
}

#[test]
fn exact_hole_total_fails_on_the_figure_eight_braid() {
    let d = figure_eight();
    let r = verify_parity(&StarredDiagram::new(&d, None).unwrap());
    assert!(r.parity_holds);
    assert!(!r.total_holds);
    let zero = r
        .rows
        .iter()
        .find(|row| row.total == 0)
        .expect("a hole-free state");
    assert_eq!(r.first_total_violation, Some(zero.state));
}

#[test]
fn trail_state_is_a_state_with_expected_holes() {
    for d in [
        trefoil(),
        figure_eight(),
        Diagram::from_braid(3, &[1, -2, 1, -2, 1, -2]).unwrap(),
    ] {
        let base = StarredDiagram::new(&d, None).unwrap();
        for stars in StarPair::all(base.regions()) {
            let sd = base.with_stars(stars);
            let (trail, s) = construct_trail_state(&sd).unwrap();
            let seifert = seifert_circles(&d);
            assert_eq!(trail.reassembled.len(), seifert.s - 1);
            assert_eq!(trail.trail.len(), d.edges().len());
            assert_eq!((s.black_holes() + s.white_holes()) as i64, seifert.e);
            assert!(sd.enumerate().contains(&s));
        }
    }
}

#[test]
fn unknot_trail_is_the_loop() {
    let d = Diagram::unknot();
    let sd = StarredDiagram::new(&d, None).unwrap();
    let (trail, _) = construct_trail_state(&sd).unwrap();
    assert_eq!(trail.trail, vec![EdgeId(0)]);
}

#[test]
fn trefoil_clock_graph_is_connected() {
    let d = trefoil();
    let sd = StarredDiagram::new(&d, None).unwrap();
    let g = clock_graph(&sd);
    assert_eq!(g.states.len(), 3);
    assert!(g.is_connected() && g.is_symmetric() && g.preserves_hole_total());
}

#[test]
fn clock_moves_change_exactly_two_markers() {
    let d = figure_eight();
    let sd = StarredDiagram::new(&d, None).unwrap();
    for s in sd.enumerate() {
        for t in clock_moves(&sd, &s) {
            let diff = s
                .quadrants()
                .iter()
                .zip(t.quadrants())
                .filter(|(a, b)| **a != *b)
                .count();
            assert_eq!(diff, 2);
        }
    }
}

#[test]
fn kinks_are_nugatory() {
    let d = trefoil()
        .flat_r1(EdgeId(0), Side::Left, OverChoice::Over)
        .unwrap();
    let sd = StarredDiagram::new(&d, None).unwrap();
    assert_eq!(nugatory_crossings(&sd).len(), 1);
    let t = trefoil();
    assert!(nugatory_crossings(&StarredDiagram::new(&t, None).unwrap()).is_empty());
}
