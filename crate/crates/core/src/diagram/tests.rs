use super::*;

fn trefoil() -> Diagram {
    Diagram::from_braid(2, &[1, 1, 1]).unwrap()
}

fn figure_eight() -> Diagram {
    Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap()
}

#[test]
fn braid_closures_have_expected_shape() {
    let t = trefoil();
    assert_eq!(
        (t.crossing_count(), t.component_count(), t.writhe()),
        (3, 1, 3)
    );
    assert_eq!(t.faces().unwrap().len(), 5);
    let h = Diagram::from_braid(2, &[1, 1]).unwrap();
    assert_eq!((h.component_count(), h.faces().unwrap().len()), (2, 4));
    assert_eq!(figure_eight().faces().unwrap().len(), 6);
    let b = Diagram::from_braid(3, &[1, -2, 1, -2, 1, -2]).unwrap();
    assert_eq!(b.component_count(), 3);
}

#[test]
fn faces_partition_all_corners() {
    let d = figure_eight();
    let faces = d.faces().unwrap();
    let corners: usize = faces.regions().iter().map(|r| r.corners.len()).sum();
    assert_eq!(corners, 4 * d.crossing_count());
    for e in 0..d.edges().len() {
        let (r, l) = faces.edge_sides(e);
        assert!(faces.are_adjacent(r, l));
    }
}

#[test]
fn unknot_has_two_regions() {
    let faces = Diagram::unknot().faces().unwrap();
    assert_eq!(faces.len(), 2);
    assert_eq!(faces.adjacent_pairs(), &[(0, 1)]);
}

#[test]
fn unlink_is_not_connected() {
    let d = Diagram::unlink(2);
    assert!(!d.is_connected());
    assert_eq!(d.faces().unwrap_err(), DiagramError::Disconnected);
}

#[test]
fn mirror_and_switch_are_involutions() {
    let d = figure_eight();
    assert_eq!(d.mirror().mirror(), d);
    let v = d.crossing(2).id();
    assert_eq!(d.switch_crossing(v).unwrap().switch_crossing(v).unwrap(), d);
    assert_eq!(d.mirror().writhe(), -d.writhe());
}

#[test]
fn switching_flips_the_sign() {
    let d = trefoil();
    let s = d.switch_crossing(CrossingId(0)).unwrap();
    assert_eq!(s.crossing(0).sign(), Sign::Negative);
    assert_eq!(s.writhe(), 1);
}

#[test]
fn smoothing_hopf_gives_unknot() {
    let h = Diagram::from_braid(2, &[1, 1]).unwrap();
    let s = h.smooth_crossing(CrossingId(0)).unwrap();
    assert_eq!((s.crossing_count(), s.component_count()), (1, 1));
    assert!(s.is_connected());
}

#[test]
fn smoothing_trefoil_gives_hopf() {
    let s = trefoil().smooth_crossing(CrossingId(1)).unwrap();
    assert_eq!((s.crossing_count(), s.component_count()), (2, 2));
}

#[test]
fn smoothing_a_kink_splits_off_a_loop() {
    let k = Diagram::unknot()
        .flat_r1(EdgeId(0), Side::Right, OverChoice::Under)
        .unwrap();
    let s = k.smooth_crossing(k.crossing(0).id()).unwrap();
    assert_eq!(
        (s.crossing_count(), s.component_count(), s.piece_count()),
        (0, 2, 2)
    );
}

#[test]
fn flat_r1_then_remove_is_identity() {
    let d = trefoil();
    for e in d.edges().iter().map(|e| e.id) {
        for side in [Side::Left, Side::Right] {
            for over in [OverChoice::Over, OverChoice::Under] {
                let k = d.flat_r1(e, side, over).unwrap();
                assert_eq!(k.crossing_count(), 4);
                assert_eq!(k.faces().unwrap().len(), 6);
                let back = k.remove_r1(CrossingId(3)).unwrap();
                assert_eq!(back.canonical_code(), d.canonical_code());
            }
        }
    }
}

#[test]
fn flat_r2_then_remove_is_identity() {
    let d = trefoil();
    let faces = d.faces().unwrap();
    let mut tried = 0;
    for region in 0..faces.len() {
        let edges = faces.boundary_edges(&d, region);
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                for over in [OverChoice::Over, OverChoice::Under] {
                    let p = d.flat_r2(d.edge(a).id, d.edge(b).id, over).unwrap();
                    assert_eq!(p.crossing_count(), 5);
                    assert_eq!(p.faces().unwrap().len(), 7);
                    let back = p.remove_r2(CrossingId(3), CrossingId(4)).unwrap();
                    assert_eq!(back.canonical_code(), d.canonical_code());
                    tried += 1;
                }
            }
        }
    }
    assert!(tried > 0);
}

#[test]
fn flat_r2_rejects_edges_without_common_face() {
    let d = figure_eight();
    let faces = d.faces().unwrap();
    let far = (0..d.edges().len())
        .flat_map(|a| (0..d.edges().len()).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let (ra, la) = faces.edge_sides(a);
            let (rb, lb) = faces.edge_sides(b);
            a != b && ra != rb && ra != lb && la != rb && la != lb
        });
    let (a, b) = far.expect("figure-eight has edges with no common face");
    assert!(matches!(
        d.flat_r2(d.edge(a).id, d.edge(b).id, OverChoice::Over),
        Err(DiagramError::InvalidMove(_))
    ));
}

#[test]
fn json_round_trip() {
    for d in [
        trefoil(),
        figure_eight(),
        Diagram::unknot(),
        Diagram::unlink(2),
    ] {
        let d = d.with_name("x").with_link("y");
        let back = Diagram::from_json(&d.to_json_string()).unwrap();
        assert_eq!(back, d);
    }
}

#[test]
fn json_rejects_bad_input() {
    assert!(matches!(
        Diagram::from_json("{"),
        Err(DiagramError::Syntax(_))
    ));
    let mut j = trefoil().to_json();
    j.crossings[0].over = "01".into();
    let text = serde_json::to_string(&j).unwrap();
    assert!(Diagram::from_json(&text).is_err());
    let mut j = trefoil().to_json();
    j.edges.pop();
    let text = serde_json::to_string(&j).unwrap();
    assert!(Diagram::from_json(&text).is_err());
}

#[test]
fn pd_trefoil_matches_braid_up_to_mirror() {
    let p = Diagram::from_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").unwrap();
    assert_eq!(p.crossing_count(), 3);
    assert_eq!(p.component_count(), 1);
    assert_eq!(p.writhe().abs(), 3);
    assert_eq!(p.faces().unwrap().len(), 5);
}

#[test]
fn pd_empty_is_unknot() {
    let p = Diagram::from_pd("").unwrap();
    assert_eq!((p.crossing_count(), p.component_count()), (0, 1));
}

#[test]
fn pd_rejects_garbage() {
    assert!(Diagram::from_pd("X[1,2,3]").is_err());
    assert!(Diagram::from_pd("X[1,1,1,1]").is_err());
}

#[test]
fn canonical_code_ignores_labels() {
    let a = Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap();
    let b = Diagram::from_braid(3, &[-2, 1, -2, 1]).unwrap();
    assert_eq!(a.canonical_code(), b.canonical_code());
    assert_ne!(a.canonical_code(), a.mirror().canonical_code());
}
