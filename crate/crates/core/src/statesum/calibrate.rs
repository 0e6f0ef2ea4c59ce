//! Search over every labeling that puts `u` on one quadrant and `u^{-1}` on
//! another, independently per crossing sign (12 x 12 tables), keeping those
//! that reproduce known values and the skein relation.

use serde::Serialize;

use super::{state_sum, HoleSign, WeightTable};
use crate::diagram::{Diagram, Sign};
use crate::halfpoly::{ConwayPoly, HalfLaurent};
use crate::states::{KState, StarredDiagram};

#[derive(Clone, Debug)]
pub enum Expectation {
    Exact(ConwayPoly),
    UpToSign(ConwayPoly),
}

#[derive(Clone, Debug)]
pub struct CalibrationTarget {
    pub name: String,
    pub diagram: Diagram,
    pub expect: Expectation,
}

impl CalibrationTarget {
    pub fn exact(name: &str, diagram: Diagram, expect: ConwayPoly) -> Self {
        Self {
            name: name.into(),
            diagram,
            expect: Expectation::Exact(expect),
        }
    }

    pub fn up_to_sign(name: &str, diagram: Diagram, expect: ConwayPoly) -> Self {
        Self {
            name: name.into(),
            diagram,
            expect: Expectation::UpToSign(expect),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub candidates: usize,
    pub passing: Vec<WeightTable>,
    /// The shipped table passes and every passing table is it or its
    /// `u -> u^{-1}` image.
    pub unique_up_to_inversion: bool,
}

fn all_rows() -> Vec<[i8; 4]> {
    let mut rows = Vec::new();
    for plus in 0..4 {
        for minus in 0..4 {
            if plus != minus {
                let mut row = [0i8; 4];
                row[plus] = 1;
                row[minus] = -1;
                rows.push(row);
            }
        }
    }
    rows
}

pub fn all_tables() -> Vec<WeightTable> {
    let rows = all_rows();
    rows.iter()
        .flat_map(|p| {
            rows.iter().map(move |n| WeightTable {
                positive: *p,
                negative: *n,
            })
        })
        .collect()
}

fn states_of(d: &Diagram) -> Vec<KState> {
    if !d.is_connected() {
        return Vec::new();
    }
    StarredDiagram::new(d, None).expect("connected").enumerate()
}

struct SkeinCase {
    plus: (Diagram, Vec<KState>),
    minus: (Diagram, Vec<KState>),
    zero: (Diagram, Vec<KState>),
}

fn eval(case: &(Diagram, Vec<KState>), t: &WeightTable) -> HalfLaurent {
    if !case.0.is_connected() {
        return HalfLaurent::zero();
    }
    state_sum(&case.0, &case.1, t, HoleSign::Black)
}

/// Run the search. `skein_corpus` diagrams contribute the skein relation at
/// every crossing.
pub fn calibrate(targets: &[CalibrationTarget], skein_corpus: &[Diagram]) -> Calibration {
    let target_states: Vec<Vec<KState>> = targets.iter().map(|t| states_of(&t.diagram)).collect();
    let mut cases = Vec::new();
    for d in skein_corpus {
        for c in d.crossings() {
            let v = c.id();
            let plus = match c.sign() {
                Sign::Positive => d.clone(),
                Sign::Negative => d.switch_crossing(v).expect("crossing exists"),
            };
            let minus = plus.switch_crossing(v).expect("crossing exists");
            let zero = d.smooth_crossing(v).expect("crossing exists");
            let (sp, sm, sz) = (states_of(&plus), states_of(&minus), states_of(&zero));
            cases.push(SkeinCase {
                plus: (plus, sp),
                minus: (minus, sm),
                zero: (zero, sz),
            });
        }
    }
    let z = HalfLaurent::z();
    let tables = all_tables();
    let passing: Vec<WeightTable> = tables
        .iter()
        .copied()
        .filter(|t| {
            let values_ok = targets.iter().zip(&target_states).all(|(target, states)| {
                let value = if target.diagram.is_connected() {
                    state_sum(&target.diagram, states, t, HoleSign::Black)
                } else {
                    HalfLaurent::zero()
                };
                let Ok(value) = value.to_conway() else {
                    return false;
                };
                match &target.expect {
                    Expectation::Exact(p) => value == *p,
                    Expectation::UpToSign(p) => value == *p || value == p.negate(),
                }
            });
            values_ok
                && cases
                    .iter()
                    .all(|cs| &eval(&cs.plus, t) - &eval(&cs.minus, t) == &z * &eval(&cs.zero, t))
        })
        .collect();
    let shipped = WeightTable::ANGLE;
    let unique_up_to_inversion = passing.contains(&shipped)
        && passing
            .iter()
            .all(|t| *t == shipped || *t == shipped.inverted());
    Calibration {
        candidates: tables.len(),
        passing,
        unique_up_to_inversion,
    }
}

/// The fixed values the search must reproduce, on bundled diagrams.
pub fn standard_targets() -> Vec<CalibrationTarget> {
    let d = |name: &str| crate::corpus::builtin_named(name).expect("bundled diagram");
    let one = ConwayPoly::from_terms([(0, 1)]);
    let z = ConwayPoly::from_terms([(1, 1)]);
    vec![
        CalibrationTarget::exact("unknot0", d("unknot0"), one.clone()),
        CalibrationTarget::exact("unknot1_pos", d("unknot1_pos"), one.clone()),
        CalibrationTarget::exact("unknot1_neg", d("unknot1_neg"), one),
        CalibrationTarget::exact(
            "trefoil_r",
            d("trefoil_r"),
            ConwayPoly::from_terms([(0, 1), (2, 1)]),
        ),
        CalibrationTarget::exact(
            "figure_eight",
            d("figure_eight"),
            ConwayPoly::from_terms([(0, 1), (2, -1)]),
        ),
        CalibrationTarget::up_to_sign("hopf_pos", d("hopf_pos"), z.clone()),
        CalibrationTarget::up_to_sign("hopf_neg", d("hopf_neg"), z),
    ]
}
