//! Seifert circles and the parity of `e(D) = c(D) - s(D) + 1`.
//!
//! Circles are edge cycles under the orientation-respecting smoothing at
//! every crossing; no geometry is involved.

use serde::Serialize;

use crate::diagram::{Diagram, EdgeId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(v: i64) -> Self {
        if v.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    /// Edge ids of each circle in traversal order; a crossingless loop is a
    /// circle of its own.
    pub circles: Vec<Vec<EdgeId>>,
    pub c: usize,
    pub s: usize,
    pub e: i64,
    /// Genus of the surface Seifert's algorithm builds on this diagram.
    pub genus: i64,
    pub mu: usize,
    pub parity: Parity,
}

pub fn seifert_circles(d: &Diagram) -> SeifertData {
    let mut circles: Vec<Vec<EdgeId>> = d
        .edge_cycles(|c, slot| d.crossing(c).oriented_exit(slot))
        .into_iter()
        .map(|cyc| cyc.into_iter().map(|e| d.edge(e).id).collect())
        .collect();
    circles.extend(d.loops().iter().map(|l| vec![*l]));
    let c = d.crossing_count();
    let s = circles.len();
    let e = c as i64 - s as i64 + 1;
    let mu = d.component_count();
    // Euler characteristic s - c = 2k - 2g - mu over k surface pieces.
    let k = d.piece_count() as i64;
    let twice_genus = e - mu as i64 + 2 * k - 1;
    debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
    SeifertData {
        circles,
        c,
        s,
        e,
        genus: twice_genus / 2,
        mu,
        parity: Parity::of(e),
    }
}

pub fn parity_class(d: &Diagram) -> Parity {
    seifert_circles(d).parity
}

/// `e(D) + mu(D)` is odd.
pub fn check_parity_vs_mu(d: &Diagram) -> bool {
    let data = seifert_circles(d);
    (data.e + data.mu as i64).rem_euclid(2) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{OverChoice, Side};

    fn trefoil() -> Diagram {
        Diagram::from_braid(2, &[1, 1, 1]).unwrap()
    }

    fn hopf() -> Diagram {
        Diagram::from_braid(2, &[1, 1]).unwrap()
    }

    fn figure_eight() -> Diagram {
        Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap()
    }

    #[test]
    fn trefoil_counts() {
        let s = seifert_circles(&trefoil());
        assert_eq!((s.c, s.s, s.e, s.genus), (3, 2, 2, 1));
        assert_eq!(s.parity, Parity::Even);
        assert!(check_parity_vs_mu(&trefoil()));
    }

    #[test]
    fn hopf_counts() {
        let s = seifert_circles(&hopf());
        assert_eq!((s.c, s.s, s.e, s.genus), (2, 2, 1, 0));
        assert_eq!(parity_class(&hopf()), Parity::Odd);
        assert!(check_parity_vs_mu(&hopf()));
    }

    #[test]
    fn unknot_counts() {
        let s = seifert_circles(&Diagram::unknot());
        assert_eq!((s.c, s.s, s.e, s.genus), (0, 1, 0, 0));
    }

    #[test]
    fn unlink_parity_matches_one_minus_mu() {
        for mu in 1..5 {
            let d = Diagram::unlink(mu);
            let s = seifert_circles(&d);
            assert_eq!(s.e, 1 - mu as i64);
            assert_eq!(s.parity, Parity::of(1 - mu as i64));
            assert_eq!(s.genus, 0);
        }
    }

    #[test]
    fn figure_eight_counts() {
        // The braid closure has 3 circles (one per strand) and 4 crossings.
        let s = seifert_circles(&figure_eight());
        assert_eq!((s.c, s.s, s.e, s.mu), (4, 3, 2, 1));
        assert!(check_parity_vs_mu(&figure_eight()));
    }

    #[test]
    fn every_edge_in_one_circle() {
        let d = figure_eight();
        let s = seifert_circles(&d);
        let mut all: Vec<EdgeId> = s.circles.concat();
        all.sort();
        let mut expected: Vec<EdgeId> = d.edges().iter().map(|e| e.id).collect();
        expected.sort();
        assert_eq!(all, expected);
    }

    #[test]
    fn kink_keeps_parity() {
        let d = trefoil();
        for e in d.edges().iter().map(|e| e.id) {
            for side in [Side::Left, Side::Right] {
                let k = d.flat_r1(e, side, OverChoice::Over).unwrap();
                let s = seifert_circles(&k);
                assert_eq!(s.c, 4);
                assert_eq!(s.parity, Parity::Even);
            }
        }
    }
}
