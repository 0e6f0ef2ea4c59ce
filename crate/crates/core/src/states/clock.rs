//! Clock moves: two markers at the ends of an edge, on opposite sides of
//! it, both cross to the other side.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{KState, StarredDiagram};
use crate::diagram::Quadrant;

/// States reachable from `s` by one clock move, deduplicated and sorted.
pub fn clock_moves(sd: &StarredDiagram<'_>, s: &KState) -> Vec<KState> {
    let d = sd.diagram();
    let corners: Vec<u8> = s
        .markers()
        .iter()
        .enumerate()
        .map(|(c, m)| d.crossing(c).corner(m.quadrant))
        .collect();
    let mut out: Vec<Vec<Quadrant>> = Vec::new();
    for e in d.edges() {
        let (v, i) = (e.tail.crossing, e.tail.slot);
        let (w, j) = (e.head.crossing, e.head.slot);
        if v == w {
            continue;
        }
        // Right of the edge: corner i-1 at the tail, corner j at the head.
        // Left: corner i at the tail, corner j-1 at the head.
        let (v_right, v_left) = ((i + 3) % 4, i);
        let (w_right, w_left) = (j, (j + 3) % 4);
        let swap = if corners[v] == v_right && corners[w] == w_left {
            Some((v_left, w_right))
        } else if corners[v] == v_left && corners[w] == w_right {
            Some((v_right, w_left))
        } else {
            None
        };
        let Some((cv, cw)) = swap else { continue };
        let mut quads = s.quadrants();
        quads[v] = d.crossing(v).quadrant(cv);
        quads[w] = d.crossing(w).quadrant(cw);
        if sd.state(&quads).is_ok() && !out.contains(&quads) {
            out.push(quads);
        }
    }
    out.sort();
    out.into_iter()
        .map(|q| sd.state(&q).expect("validated above"))
        .collect()
}

/// Enumerated states with clock-move adjacency by state index.
#[derive(Clone, Debug, Serialize)]
pub struct ClockGraph {
    pub states: Vec<KState>,
    pub adjacency: Vec<Vec<usize>>,
}

impl ClockGraph {
    pub fn is_connected(&self) -> bool {
        if self.states.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.states.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &self.adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(i, nbrs)| nbrs.iter().all(|&j| self.adjacency[j].contains(&i)))
    }

    /// Every move keeps `#B + #W`.
    pub fn preserves_hole_total(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(i, nbrs)| {
            let t = self.states[i].black_holes() + self.states[i].white_holes();
            nbrs.iter()
                .all(|&j| self.states[j].black_holes() + self.states[j].white_holes() == t)
        })
    }
}

pub fn clock_graph(sd: &StarredDiagram<'_>) -> ClockGraph {
    let states = sd.enumerate();
    let index: HashMap<Vec<Quadrant>, usize> = states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.quadrants(), i))
        .collect();
    let adjacency = states
        .iter()
        .map(|s| {
            clock_moves(sd, s)
                .iter()
                .map(|t| index[&t.quadrants()])
                .collect()
        })
        .collect();
    ClockGraph { states, adjacency }
}

/// Breadth-first search from the first state reaches every state.
pub fn state_graph_connected(sd: &StarredDiagram<'_>) -> bool {
    clock_graph(sd).is_connected()
}

/// Crossings with two corners in one region. Flat R1 kinks and other
/// nugatory crossings are of this kind.
pub fn nugatory_crossings(sd: &StarredDiagram<'_>) -> Vec<crate::diagram::CrossingId> {
    let d = sd.diagram();
    (0..d.crossing_count())
        .filter(|&c| {
            let mut r: Vec<usize> = (0..4).map(|k| sd.regions().region_of(c, k)).collect();
            r.sort_unstable();
            r.dedup();
            r.len() < 4
        })
        .map(|c| d.crossing(c).id())
        .collect()
}
