//! Oriented planar link diagrams stored as a rotation system.
//!
//! Every crossing has four slots numbered counterclockwise. Opposite slots
//! (0/2 and 1/3) carry the same strand. An edge runs from an outbound slot
//! (its tail) to an inbound slot (its head). Crossingless components are
//! kept as bare loop ids.
//!
//! The corner `k` of a crossing is the angle between slot `k` and slot
//! `k + 1`. With both strands drawn pointing up, the corner between the two
//! inbound slots is [`Quadrant::S`], the one between the outbound slots is
//! [`Quadrant::N`], and going counterclockwise from `S` we meet `E`, `N`, `W`.

mod braid;
mod canonical;
mod faces;
mod json;
mod pd;
mod surgery;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use faces::{Region, RegionMap};
pub use json::{DiagramJson, JsonCrossing, JsonEdge};
pub use surgery::{OverChoice, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed input: {0}")]
    Syntax(String),
    #[error("edge {0} must appear exactly twice among crossing slots, found {1}")]
    EdgeMultiplicity(String, usize),
    #[error("slot {slot} of crossing {crossing} is {problem}")]
    Slot {
        crossing: u32,
        slot: u8,
        problem: &'static str,
    },
    #[error("inconsistent orientation at crossing {0}")]
    Orientation(u32),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown crossing id {0}")]
    UnknownCrossing(u32),
    #[error("unknown edge id {0}")]
    UnknownEdge(u32),
    #[error("diagram has no components")]
    Empty,
    #[error(
        "face tracing found {found} faces, expected {expected}; the rotation system is not planar"
    )]
    NotPlanar { found: usize, expected: usize },
    #[error("diagram is not connected")]
    Disconnected,
    #[error("invalid move: {0}")]
    InvalidMove(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A slot position: crossing index (not id) and slot number.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub crossing: usize,
    pub slot: u8,
}

impl Port {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Self { crossing, slot }
    }
}

/// Which opposite slot pair carries the over-strand.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OverPair {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl OverPair {
    pub fn toggled(self) -> Self {
        match self {
            OverPair::Even => OverPair::Odd,
            OverPair::Odd => OverPair::Even,
        }
    }

    pub fn contains(self, slot: u8) -> bool {
        slot.is_multiple_of(2) == (self == OverPair::Even)
    }

    pub fn code(self) -> &'static str {
        match self {
            OverPair::Even => "02",
            OverPair::Odd => "13",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        match s {
            "02" => Some(OverPair::Even),
            "13" => Some(OverPair::Odd),
            _ => None,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Inbound,
    Outbound,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    N,
    S,
    E,
    W,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::N, Quadrant::S, Quadrant::E, Quadrant::W];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Offset of this quadrant's corner from the `S` corner, counterclockwise.
    fn offset(self) -> u8 {
        match self {
            Quadrant::S => 0,
            Quadrant::E => 1,
            Quadrant::N => 2,
            Quadrant::W => 3,
        }
    }

    fn from_offset(k: u8) -> Self {
        match k % 4 {
            0 => Quadrant::S,
            1 => Quadrant::E,
            2 => Quadrant::N,
            _ => Quadrant::W,
        }
    }

    pub fn is_black_hole(self) -> bool {
        self == Quadrant::S
    }

    pub fn is_white_hole(self) -> bool {
        self == Quadrant::N
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    id: CrossingId,
    slots: [usize; 4],
    over: OverPair,
    /// `p` such that slots `p` and `p + 1` are inbound.
    first_inbound: u8,
}

impl Crossing {
    pub fn id(&self) -> CrossingId {
        self.id
    }

    /// Edge indices in counterclockwise slot order.
    pub fn slots(&self) -> [usize; 4] {
        self.slots
    }

    pub fn edge_at(&self, slot: u8) -> usize {
        self.slots[(slot % 4) as usize]
    }

    pub fn over(&self) -> OverPair {
        self.over
    }

    pub fn direction(&self, slot: u8) -> Direction {
        let d = (slot + 4 - self.first_inbound) % 4;
        if d < 2 {
            Direction::Inbound
        } else {
            Direction::Outbound
        }
    }

    /// The inbound slot whose corner to its counterclockwise side is `S`.
    pub fn first_inbound(&self) -> u8 {
        self.first_inbound
    }

    fn inbound_slot(&self, over: bool) -> u8 {
        let a = self.first_inbound;
        let b = (a + 1) % 4;
        if self.over.contains(a) == over {
            a
        } else {
            b
        }
    }

    pub fn under_in(&self) -> u8 {
        self.inbound_slot(false)
    }

    pub fn over_in(&self) -> u8 {
        self.inbound_slot(true)
    }

    /// Right-handed crossings are positive: the under-strand enters one slot
    /// counterclockwise of the over-strand.
    pub fn sign(&self) -> Sign {
        if self.under_in() == (self.over_in() + 1) % 4 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn quadrant(&self, corner: u8) -> Quadrant {
        Quadrant::from_offset((corner + 4 - self.first_inbound) % 4)
    }

    pub fn corner(&self, q: Quadrant) -> u8 {
        (self.first_inbound + q.offset()) % 4
    }

    /// Outbound slot reached from an inbound slot by the orientation-respecting
    /// smoothing.
    pub fn oriented_exit(&self, inbound: u8) -> u8 {
        let p = self.first_inbound;
        if inbound == p {
            (p + 3) % 4
        } else {
            (p + 2) % 4
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: Port,
    pub head: Port,
}

/// An oriented link diagram. Immutable; every surgery returns a new value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    name: Option<String>,
    link: Option<String>,
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    loops: Vec<EdgeId>,
    pieces: usize,
}

/// Unvalidated diagram parts: crossing ids and over pairs, edges between
/// ports (crossing indices), and crossingless loops.
#[derive(Clone, Debug, Default)]
pub(crate) struct Parts {
    pub name: Option<String>,
    pub link: Option<String>,
    pub crossings: Vec<(CrossingId, OverPair)>,
    pub edges: Vec<(EdgeId, Port, Port)>,
    pub loops: Vec<EdgeId>,
}

impl Parts {
    /// Validate and build. Crossing ids must be strictly increasing.
    pub fn assemble(self) -> Result<Diagram, DiagramError> {
        let n = self.crossings.len();
        for w in self.crossings.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(DiagramError::DuplicateId(format!("crossing {}", w[1].0)));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for id in self
            .edges
            .iter()
            .map(|e| e.0)
            .chain(self.loops.iter().copied())
        {
            if !seen.insert(id) {
                return Err(DiagramError::DuplicateId(format!("edge {id}")));
            }
        }
        if n == 0 && !self.edges.is_empty() {
            return Err(DiagramError::Syntax(
                "edges reference crossings but none exist".into(),
            ));
        }

        let mut slot_edge: Vec<Option<(usize, Direction)>> = vec![None; 4 * n];
        for (ei, (id, tail, head)) in self.edges.iter().enumerate() {
            for (port, dir) in [(tail, Direction::Outbound), (head, Direction::Inbound)] {
                if port.crossing >= n || port.slot > 3 {
                    return Err(DiagramError::Syntax(format!(
                        "edge {id} references a missing slot"
                    )));
                }
                let cell = &mut slot_edge[4 * port.crossing + port.slot as usize];
                if cell.is_some() {
                    return Err(DiagramError::Slot {
                        crossing: self.crossings[port.crossing].0 .0,
                        slot: port.slot,
                        problem: "claimed by more than one edge end",
                    });
                }
                *cell = Some((ei, dir));
            }
        }

        let mut crossings = Vec::with_capacity(n);
        for (ci, (id, over)) in self.crossings.iter().enumerate() {
            let mut slots = [0usize; 4];
            let mut dirs = [Direction::Inbound; 4];
            for s in 0..4u8 {
                let (e, d) = slot_edge[4 * ci + s as usize].ok_or(DiagramError::Slot {
                    crossing: id.0,
                    slot: s,
                    problem: "not attached to any edge",
                })?;
                slots[s as usize] = e;
                dirs[s as usize] = d;
            }
            if dirs[0] == dirs[2] || dirs[1] == dirs[3] {
                return Err(DiagramError::Orientation(id.0));
            }
            let first_inbound = (0..4u8)
                .find(|&s| {
                    dirs[s as usize] == Direction::Inbound
                        && dirs[((s + 1) % 4) as usize] == Direction::Inbound
                })
                .ok_or(DiagramError::Orientation(id.0))?;
            crossings.push(Crossing {
                id: *id,
                slots,
                over: *over,
                first_inbound,
            });
        }

        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|(id, tail, head)| Edge {
                id: *id,
                tail: *tail,
                head: *head,
            })
            .collect();

        let crossing_pieces = count_crossing_pieces(n, &edges);
        let pieces = crossing_pieces + self.loops.len();
        if pieces == 0 {
            return Err(DiagramError::Empty);
        }
        let d = Diagram {
            name: self.name,
            link: self.link,
            crossings,
            edges,
            loops: self.loops,
            pieces,
        };
        let found = faces::trace(&d).1;
        let expected = n + 2 * crossing_pieces;
        if found != expected {
            return Err(DiagramError::NotPlanar { found, expected });
        }
        Ok(d)
    }
}

fn count_crossing_pieces(n: usize, edges: &[Edge]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = n;
    for e in edges {
        let a = find(&mut parent, e.tail.crossing);
        let b = find(&mut parent, e.head.crossing);
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

impl Diagram {
    /// The 0-crossing unknot: one loop and two regions.
    pub fn unknot() -> Self {
        Parts {
            name: Some("unknot".into()),
            loops: vec![EdgeId(0)],
            ..Parts::default()
        }
        .assemble()
        .expect("the crossingless unknot is valid")
    }

    /// Crossingless unlink with `mu` components (disconnected for `mu > 1`).
    pub fn unlink(mu: usize) -> Self {
        Parts {
            name: Some(format!("unlink{mu}")),
            loops: (0..mu as u32).map(EdgeId).collect(),
            ..Parts::default()
        }
        .assemble()
        .expect("a non-empty unlink is valid")
    }

    /// Parse the native JSON schema.
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let raw: DiagramJson =
            serde_json::from_str(text).map_err(|e| DiagramError::Syntax(e.to_string()))?;
        raw.into_diagram()
    }

    /// Parse a PD code such as `PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]`.
    pub fn from_pd(text: &str) -> Result<Self, DiagramError> {
        pd::parse(text)
    }

    /// Closure of a braid word on `strands` strands. Generator `i > 0` is
    /// the positive crossing of strands `i` and `i + 1`, `-i` its inverse.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self, DiagramError> {
        braid::closure(strands, word)
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson::from_diagram(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("diagram JSON serializes")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn link(&self) -> Option<&str> {
        self.link.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_link(mut self, link: impl Into<String>) -> Self {
        self.link = Some(link.into());
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, index: usize) -> &Crossing {
        &self.crossings[index]
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing_index(&self, id: CrossingId) -> Result<usize, DiagramError> {
        self.crossings
            .binary_search_by_key(&id, |c| c.id)
            .map_err(|_| DiagramError::UnknownCrossing(id.0))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Ids of crossingless loop components.
    pub fn loops(&self) -> &[EdgeId] {
        &self.loops
    }

    /// Connected pieces of the underlying 4-valent graph, counting each
    /// crossingless loop as its own piece.
    pub fn piece_count(&self) -> usize {
        self.pieces
    }

    pub fn is_connected(&self) -> bool {
        self.pieces == 1
    }

    /// The edge end attached at `(crossing, slot)`.
    pub fn edge_at(&self, port: Port) -> usize {
        self.crossings[port.crossing].edge_at(port.slot)
    }

    /// The other end of the edge leaving through `port`.
    pub fn partner(&self, port: Port) -> Port {
        let e = &self.edges[self.edge_at(port)];
        if e.tail == port {
            e.head
        } else {
            e.tail
        }
    }

    /// Edge cycles of the link components (crossingless loops excluded).
    pub fn strand_cycles(&self) -> Vec<Vec<usize>> {
        self.edge_cycles(|_, slot| (slot + 2) % 4)
    }

    /// Follow each edge to its head and leave through `exit(crossing, slot)`.
    pub(crate) fn edge_cycles(&self, exit: impl Fn(usize, u8) -> u8) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.edges.len()];
        let mut cycles = Vec::new();
        for start in 0..self.edges.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                cycle.push(e);
                let head = self.edges[e].head;
                let out = exit(head.crossing, head.slot);
                e = self.crossings[head.crossing].edge_at(out);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.loops.len()
    }

    /// Per-crossing signs in index order.
    pub fn signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(Crossing::sign).collect()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign().value()).sum()
    }

    /// Faces of a connected diagram.
    pub fn faces(&self) -> Result<RegionMap, DiagramError> {
        RegionMap::new(self)
    }

    /// Labeling-independent structural code: equal codes mean the diagrams
    /// agree up to renaming crossings and edges.
    pub fn canonical_code(&self) -> String {
        canonical::code(self)
    }

    fn next_crossing_id(&self) -> u32 {
        self.crossings.last().map_or(0, |c| c.id.0 + 1)
    }

    pub(crate) fn parts(&self) -> Parts {
        Parts {
            name: self.name.clone(),
            link: self.link.clone(),
            crossings: self.crossings.iter().map(|c| (c.id, c.over)).collect(),
            edges: self.edges.iter().map(|e| (e.id, e.tail, e.head)).collect(),
            loops: self.loops.clone(),
        }
    }
}

#[cfg(test)]
mod tests;
