//! Marker states of a starred diagram.
//!
//! A state puts one marker at a corner of every crossing so that each
//! unstarred region receives exactly one marker. Markers in the `S` quadrant
//! are black holes, markers in the `N` quadrant white holes.

mod clock;
mod trail;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{CrossingId, Diagram, DiagramError, Quadrant, RegionMap};
use crate::seifert::seifert_circles;

pub use clock::{clock_graph, clock_moves, nugatory_crossings, state_graph_connected, ClockGraph};
pub use trail::{construct_trail_state, JordanTrail};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("invalid star pair ({0}, {1}): {2}")]
    InvalidStars(usize, usize, &'static str),
    #[error("not a state: {0}")]
    NotAState(String),
}

/// Two distinct regions sharing an edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StarPair {
    pub r1: usize,
    pub r2: usize,
}

impl StarPair {
    pub fn new(regions: &RegionMap, a: usize, b: usize) -> Result<Self, StateError> {
        if a == b {
            return Err(StateError::InvalidStars(a, b, "regions must be distinct"));
        }
        if a >= regions.len() || b >= regions.len() {
            return Err(StateError::InvalidStars(a, b, "no such region"));
        }
        if !regions.are_adjacent(a, b) {
            return Err(StateError::InvalidStars(a, b, "regions share no edge"));
        }
        Ok(Self {
            r1: a.min(b),
            r2: a.max(b),
        })
    }

    /// The adjacent pair with the least `(r1, r2)`.
    pub fn canonical(regions: &RegionMap) -> Self {
        let (r1, r2) = regions.adjacent_pairs()[0];
        Self { r1, r2 }
    }

    pub fn all(regions: &RegionMap) -> Vec<Self> {
        regions
            .adjacent_pairs()
            .iter()
            .map(|&(r1, r2)| Self { r1, r2 })
            .collect()
    }

    pub fn contains(&self, r: usize) -> bool {
        r == self.r1 || r == self.r2
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Marker {
    pub crossing: CrossingId,
    pub region: usize,
    pub quadrant: Quadrant,
}

/// Markers are stored in crossing index order (ascending crossing id).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KState {
    markers: Vec<Marker>,
    black: usize,
    white: usize,
}

impl KState {
    fn from_quadrants(d: &Diagram, regions: &RegionMap, quads: &[Quadrant]) -> Self {
        let markers: Vec<Marker> = quads
            .iter()
            .enumerate()
            .map(|(c, &q)| {
                let x = d.crossing(c);
                Marker {
                    crossing: x.id(),
                    region: regions.region_of(c, x.corner(q)),
                    quadrant: q,
                }
            })
            .collect();
        let black = quads.iter().filter(|q| q.is_black_hole()).count();
        let white = quads.iter().filter(|q| q.is_white_hole()).count();
        Self {
            markers,
            black,
            white,
        }
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn quadrants(&self) -> Vec<Quadrant> {
        self.markers.iter().map(|m| m.quadrant).collect()
    }

    pub fn black_holes(&self) -> usize {
        self.black
    }

    pub fn white_holes(&self) -> usize {
        self.white
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }
}

/// `(#B, #W)`.
pub fn hole_counts(s: &KState) -> (usize, usize) {
    (s.black, s.white)
}

/// A diagram with its faces and a fixed star pair.
#[derive(Clone, Debug)]
pub struct StarredDiagram<'a> {
    diagram: &'a Diagram,
    regions: RegionMap,
    stars: StarPair,
}

impl<'a> StarredDiagram<'a> {
    pub fn new(diagram: &'a Diagram, stars: Option<(usize, usize)>) -> Result<Self, StateError> {
        let regions = diagram.faces()?;
        let stars = match stars {
            Some((a, b)) => StarPair::new(&regions, a, b)?,
            None => StarPair::canonical(&regions),
        };
        Ok(Self {
            diagram,
            regions,
            stars,
        })
    }

    pub fn with_stars(&self, stars: StarPair) -> Self {
        Self {
            diagram: self.diagram,
            regions: self.regions.clone(),
            stars,
        }
    }

    pub fn diagram(&self) -> &'a Diagram {
        self.diagram
    }

    pub fn regions(&self) -> &RegionMap {
        &self.regions
    }

    pub fn stars(&self) -> StarPair {
        self.stars
    }

    /// Build a state from one quadrant per crossing, checking validity.
    pub fn state(&self, quads: &[Quadrant]) -> Result<KState, StateError> {
        let d = self.diagram;
        if quads.len() != d.crossing_count() {
            return Err(StateError::NotAState(format!(
                "{} markers for {} crossings",
                quads.len(),
                d.crossing_count()
            )));
        }
        let mut used = vec![false; self.regions.len()];
        for (c, &q) in quads.iter().enumerate() {
            let r = self.regions.region_of(c, d.crossing(c).corner(q));
            if self.stars.contains(r) {
                return Err(StateError::NotAState(format!(
                    "marker in starred region {r}"
                )));
            }
            if used[r] {
                return Err(StateError::NotAState(format!("region {r} has two markers")));
            }
            used[r] = true;
        }
        Ok(KState::from_quadrants(d, &self.regions, quads))
    }

    /// All states in canonical order (ascending quadrant sequence by
    /// crossing id).
    pub fn enumerate(&self) -> Vec<KState> {
        let d = self.diagram;
        let n = d.crossing_count();
        let options: Vec<Vec<(Quadrant, usize)>> = (0..n)
            .map(|c| {
                let x = d.crossing(c);
                Quadrant::ALL
                    .iter()
                    .map(|&q| (q, self.regions.region_of(c, x.corner(q))))
                    .filter(|(_, r)| !self.stars.contains(*r))
                    .collect()
            })
            .collect();
        let mut search = Search {
            options: &options,
            used: vec![false; self.regions.len()],
            chosen: vec![None; n],
            found: Vec::new(),
        };
        search.run(n);
        let mut found = search.found;
        found.sort();
        found
            .into_iter()
            .map(|quads| KState::from_quadrants(d, &self.regions, &quads))
            .collect()
    }
}

struct Search<'o> {
    options: &'o [Vec<(Quadrant, usize)>],
    used: Vec<bool>,
    chosen: Vec<Option<Quadrant>>,
    found: Vec<Vec<Quadrant>>,
}

impl Search<'_> {
    /// Backtracking over the crossing/region incidence, always branching on
    /// the unassigned crossing with the fewest free regions.
    fn run(&mut self, remaining: usize) {
        if remaining == 0 {
            self.found.push(
                self.chosen
                    .iter()
                    .map(|q| q.expect("all assigned"))
                    .collect(),
            );
            return;
        }
        let mut best: Option<(usize, usize)> = None;
        for (c, opts) in self.options.iter().enumerate() {
            if self.chosen[c].is_some() {
                continue;
            }
            let free = opts.iter().filter(|(_, r)| !self.used[*r]).count();
            if free == 0 {
                return;
            }
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((c, free));
            }
        }
        let (c, _) = best.expect("an unassigned crossing exists");
        for &(q, r) in &self.options[c] {
            if self.used[r] {
                continue;
            }
            self.used[r] = true;
            self.chosen[c] = Some(q);
            self.run(remaining - 1);
            self.chosen[c] = None;
            self.used[r] = false;
        }
    }
}

pub fn enumerate_states(
    d: &Diagram,
    stars: Option<(usize, usize)>,
) -> Result<Vec<KState>, StateError> {
    Ok(StarredDiagram::new(d, stars)?.enumerate())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityRow {
    pub state: usize,
    pub black: usize,
    pub white: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub c: usize,
    pub s: usize,
    pub mu: usize,
    /// `c - s + 1`.
    pub expected_total: i64,
    pub rows: Vec<ParityRow>,
    /// First state with `#B + #W != c - s + 1`.
    pub first_total_violation: Option<usize>,
    /// First state with `#B + #W != mu + 1 (mod 2)`.
    pub first_parity_violation: Option<usize>,
    pub total_holds: bool,
    pub parity_holds: bool,
    pub passed: bool,
}

/// Check `#B + #W = c - s + 1` and `#B + #W = mu + 1 (mod 2)` on every state.
///
/// The mod 2 statement holds on every diagram tried. The exact count does
/// not: the four-crossing closed-braid universe `s1 s2^-1 s1 s2^-1` has a
/// state with no holes at all while `c - s + 1 = 2`. Both are reported.
pub fn verify_parity(sd: &StarredDiagram<'_>) -> ParityReport {
    let seifert = seifert_circles(sd.diagram());
    let expected_total = seifert.e;
    let mu = seifert.mu;
    let rows: Vec<ParityRow> = sd
        .enumerate()
        .iter()
        .enumerate()
        .map(|(i, st)| ParityRow {
            state: i,
            black: st.black,
            white: st.white,
            total: st.black + st.white,
        })
        .collect();
    let first_total_violation = rows
        .iter()
        .find(|r| r.total as i64 != expected_total)
        .map(|r| r.state);
    let first_parity_violation = rows
        .iter()
        .find(|r| !(r.total + mu + 1).is_multiple_of(2))
        .map(|r| r.state);
    let total_holds = first_total_violation.is_none();
    let parity_holds = first_parity_violation.is_none();
    ParityReport {
        c: seifert.c,
        s: seifert.s,
        mu,
        expected_total,
        rows,
        first_total_violation,
        first_parity_violation,
        total_holds,
        parity_holds,
        passed: total_holds && parity_holds,
    }
}

#[cfg(test)]
mod tests;
