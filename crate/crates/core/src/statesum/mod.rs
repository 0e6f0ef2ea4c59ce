//! The state sums
//!
//! ```text
//! nabla(L) = sum over states S of (-1)^{#B_S} <L|S>
//! theta(L) = sum over states S of (-1)^{#W_S} [L|S]
//! ```
//!
//! where `<L|S>` and `[L|S]` multiply one label per marker, read from a
//! [`WeightTable`] by crossing sign and marker quadrant.

mod calibrate;

use serde::Serialize;

use crate::diagram::{CrossingId, Diagram, Quadrant, Sign};
use crate::halfpoly::{ConwayPoly, HalfLaurent};
use crate::states::{KState, StarPair, StarredDiagram, StateError};

pub use calibrate::{
    all_tables, calibrate, standard_targets, Calibration, CalibrationTarget, Expectation,
};

/// Exponent of `u` carried by each quadrant, per crossing sign. Quadrants
/// index as [`Quadrant::index`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightTable {
    pub positive: [i8; 4],
    pub negative: [i8; 4],
}

impl WeightTable {
    /// Labels for `<L|S>`. Only the hole quadrants carry a non-unit label:
    /// at a positive crossing the white hole is `u` and the black hole
    /// `u^{-1}`, at a negative crossing the reverse. `E` and `W` are `1`.
    pub const ANGLE: WeightTable = WeightTable {
        // N, S, E, W
        positive: [1, -1, 0, 0],
        negative: [-1, 1, 0, 0],
    };

    /// Labels for `[L|S]`: the angle table with its sign rows swapped.
    pub const SQUARE: WeightTable = WeightTable::ANGLE.rows_swapped();

    pub const fn rows_swapped(self) -> Self {
        Self {
            positive: self.negative,
            negative: self.positive,
        }
    }

    /// `u -> u^{-1}` in every label.
    pub fn inverted(self) -> Self {
        Self {
            positive: self.positive.map(|x| -x),
            negative: self.negative.map(|x| -x),
        }
    }

    pub fn exponent(&self, sign: Sign, q: Quadrant) -> i8 {
        match sign {
            Sign::Positive => self.positive[q.index()],
            Sign::Negative => self.negative[q.index()],
        }
    }
}

/// Which hole count signs a state's term.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HoleSign {
    Black,
    White,
}

/// `u`-exponent of the label product for one state.
fn bracket_exponent(d: &Diagram, table: &WeightTable, s: &KState) -> i64 {
    s.markers()
        .iter()
        .enumerate()
        .map(|(c, m)| i64::from(table.exponent(d.crossing(c).sign(), m.quadrant)))
        .sum()
}

/// `<L|S>`.
pub fn bracket_angle(d: &Diagram, s: &KState) -> HalfLaurent {
    HalfLaurent::u_pow(bracket_exponent(d, &WeightTable::ANGLE, s))
}

/// `[L|S]`.
pub fn bracket_square(d: &Diagram, s: &KState) -> HalfLaurent {
    HalfLaurent::u_pow(bracket_exponent(d, &WeightTable::SQUARE, s))
}

/// Sum over the given states with an arbitrary table and sign rule.
pub fn state_sum(
    d: &Diagram,
    states: &[KState],
    table: &WeightTable,
    rule: HoleSign,
) -> HalfLaurent {
    let mut acc = HalfLaurent::zero();
    for s in states {
        let holes = match rule {
            HoleSign::Black => s.black_holes(),
            HoleSign::White => s.white_holes(),
        };
        let c = if holes % 2 == 0 { 1 } else { -1 };
        acc.add_term(bracket_exponent(d, table, s), c.into());
    }
    acc
}

/// State sum with the canonical stars; zero for disconnected diagrams.
pub fn evaluate(d: &Diagram, table: &WeightTable, rule: HoleSign) -> HalfLaurent {
    if !d.is_connected() {
        return HalfLaurent::zero();
    }
    let sd = StarredDiagram::new(d, None).expect("connected diagrams have faces");
    state_sum(d, &sd.enumerate(), table, rule)
}

pub fn nabla(d: &Diagram) -> HalfLaurent {
    evaluate(d, &WeightTable::ANGLE, HoleSign::Black)
}

pub fn theta(d: &Diagram) -> HalfLaurent {
    evaluate(d, &WeightTable::SQUARE, HoleSign::White)
}

pub fn nabla_with_stars(sd: &StarredDiagram<'_>) -> HalfLaurent {
    state_sum(
        sd.diagram(),
        &sd.enumerate(),
        &WeightTable::ANGLE,
        HoleSign::Black,
    )
}

/// `nabla` in `z`. State sums always land in `Z[z]`.
pub fn nabla_z(d: &Diagram) -> ConwayPoly {
    nabla(d)
        .to_conway()
        .expect("the state sum is a polynomial in z")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    pub mu: usize,
    pub nabla: HalfLaurent,
    pub theta: HalfLaurent,
    pub nabla_mirror: HalfLaurent,
    /// `theta == nabla`.
    pub theta_equals_nabla: bool,
    /// `nabla(L) == (-1)^{mu+1} nabla(mirror L)`.
    pub mirror_sign: bool,
    /// `nabla_z(L) == nabla_z(mirror L)(-z)`.
    pub mirror_neg_z: bool,
    /// The square-bracket sum with black-hole signs equals `nabla(mirror L)`.
    pub square_is_mirror_angle: bool,
    pub passed: bool,
}

impl ThetaReport {
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.theta_equals_nabla {
            out.push("theta == nabla");
        }
        if !self.mirror_sign {
            out.push("nabla(L) == (-1)^(mu+1) nabla(mirror L)");
        }
        if !self.mirror_neg_z {
            out.push("nabla_z(L) == nabla_z(mirror L)(-z)");
        }
        if !self.square_is_mirror_angle {
            out.push("sum (-1)^#B [L|S] == nabla(mirror L)");
        }
        out
    }
}

pub fn verify_theta(d: &Diagram) -> ThetaReport {
    let mu = d.component_count();
    let n = nabla(d);
    let th = theta(d);
    let mirror = d.mirror();
    let nm = nabla(&mirror);
    let sign_nm = if mu % 2 == 1 { nm.clone() } else { -&nm };
    let mirror_neg_z = match (n.to_conway(), nm.to_conway()) {
        (Ok(a), Ok(b)) => a == b.substitute_neg_z(),
        _ => false,
    };
    let square_black = evaluate(d, &WeightTable::SQUARE, HoleSign::Black);
    let theta_equals_nabla = th == n;
    let mirror_sign = n == sign_nm;
    let square_is_mirror_angle = square_black == nm;
    ThetaReport {
        mu,
        passed: theta_equals_nabla && mirror_sign && mirror_neg_z && square_is_mirror_angle,
        nabla: n,
        theta: th,
        nabla_mirror: nm,
        theta_equals_nabla,
        mirror_sign,
        mirror_neg_z,
        square_is_mirror_angle,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinReport {
    pub crossing: CrossingId,
    pub plus: HalfLaurent,
    pub minus: HalfLaurent,
    pub zero: HalfLaurent,
    pub passed: bool,
}

/// `nabla(L+) - nabla(L-) == z * nabla(L0)` at crossing `v`.
pub fn verify_skein(d: &Diagram, v: CrossingId) -> Result<SkeinReport, StateError> {
    let i = d.crossing_index(v)?;
    let l_plus = match d.crossing(i).sign() {
        Sign::Positive => d.clone(),
        Sign::Negative => d.switch_crossing(v)?,
    };
    let l_minus = l_plus.switch_crossing(v)?;
    let l_zero = d.smooth_crossing(v)?;
    let (plus, minus, zero) = (nabla(&l_plus), nabla(&l_minus), nabla(&l_zero));
    let passed = &plus - &minus == &HalfLaurent::z() * &zero;
    Ok(SkeinReport {
        crossing: v,
        plus,
        minus,
        zero,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarRow {
    pub stars: StarPair,
    pub states: usize,
    pub nabla: HalfLaurent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub rows: Vec<StarRow>,
    /// Star pairs whose value differs from the first row's.
    pub disagreeing: Vec<StarPair>,
    pub passed: bool,
}

/// `nabla` and the state count over every adjacent star pair.
pub fn verify_star_independence(d: &Diagram) -> Result<StarReport, StateError> {
    let base = StarredDiagram::new(d, None)?;
    let rows: Vec<StarRow> = StarPair::all(base.regions())
        .into_iter()
        .map(|stars| {
            let sd = base.with_stars(stars);
            let states = sd.enumerate();
            StarRow {
                stars,
                states: states.len(),
                nabla: state_sum(d, &states, &WeightTable::ANGLE, HoleSign::Black),
            }
        })
        .collect();
    let disagreeing: Vec<StarPair> = rows
        .iter()
        .filter(|r| r.nabla != rows[0].nabla || r.states != rows[0].states)
        .map(|r| r.stars)
        .collect();
    Ok(StarReport {
        passed: disagreeing.is_empty(),
        rows,
        disagreeing,
    })
}

#[cfg(test)]
mod tests;
