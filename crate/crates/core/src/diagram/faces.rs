use serde::Serialize;

use super::{CrossingId, Diagram, DiagramError, Port, Quadrant};

/// A face of the diagram. Corners are listed in boundary order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    pub corners: Vec<(CrossingId, Quadrant)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_unbounded: Option<bool>,
}

/// Face structure of a connected diagram.
#[derive(Clone, Debug)]
pub struct RegionMap {
    regions: Vec<Region>,
    /// Indexed by `4 * crossing + corner`.
    corner_region: Vec<usize>,
    /// Per edge index: (face on the right, face on the left) looking along
    /// the edge's orientation.
    edge_sides: Vec<(usize, usize)>,
    adjacent: Vec<(usize, usize)>,
}

/// `(crossing index, corner)` pairs around one face.
pub(crate) type CornerCycle = Vec<(usize, u8)>;

/// Corner `k` at crossing `c` continues to the corner at the far end of
/// the edge leaving through slot `k + 1`.
pub(crate) fn trace(d: &Diagram) -> (Vec<usize>, usize, Vec<CornerCycle>) {
    let n = d.crossing_count();
    let mut face = vec![usize::MAX; 4 * n];
    let mut cycles = Vec::new();
    for start in 0..4 * n {
        if face[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = Vec::new();
        let mut cur = start;
        while face[cur] == usize::MAX {
            face[cur] = id;
            let (c, k) = (cur / 4, (cur % 4) as u8);
            cycle.push((c, k));
            let next = d.partner(Port::new(c, (k + 1) % 4));
            cur = 4 * next.crossing + next.slot as usize;
        }
        cycles.push(cycle);
    }
    let count = cycles.len();
    (face, count, cycles)
}

impl RegionMap {
    pub fn new(d: &Diagram) -> Result<Self, DiagramError> {
        if !d.is_connected() {
            return Err(DiagramError::Disconnected);
        }
        if d.crossing_count() == 0 {
            let empty = |id| Region {
                id,
                corners: Vec::new(),
                is_unbounded: None,
            };
            return Ok(Self {
                regions: vec![empty(0), empty(1)],
                corner_region: Vec::new(),
                edge_sides: Vec::new(),
                adjacent: vec![(0, 1)],
            });
        }
        let (corner_region, count, cycles) = trace(d);
        let regions = cycles
            .into_iter()
            .enumerate()
            .map(|(id, cycle)| Region {
                id,
                corners: cycle
                    .into_iter()
                    .map(|(c, k)| {
                        let x = d.crossing(c);
                        (x.id(), x.quadrant(k))
                    })
                    .collect(),
                is_unbounded: None,
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(count, regions.len());
        let edge_sides: Vec<(usize, usize)> = d
            .edges()
            .iter()
            .map(|e| {
                let (c, s) = (e.tail.crossing, e.tail.slot);
                let right = corner_region[4 * c + ((s + 3) % 4) as usize];
                let left = corner_region[4 * c + s as usize];
                (right, left)
            })
            .collect();
        let mut adjacent: Vec<(usize, usize)> = edge_sides
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .filter(|(a, b)| a != b)
            .collect();
        adjacent.sort_unstable();
        adjacent.dedup();
        Ok(Self {
            regions,
            corner_region,
            edge_sides,
            adjacent,
        })
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    /// Region containing corner `corner` of the crossing at `crossing` index.
    pub fn region_of(&self, crossing: usize, corner: u8) -> usize {
        self.corner_region[4 * crossing + (corner % 4) as usize]
    }

    /// (right, left) faces of an edge, by edge index.
    pub fn edge_sides(&self, edge: usize) -> (usize, usize) {
        self.edge_sides[edge]
    }

    /// Region pairs `(a, b)`, `a < b`, that share at least one edge.
    pub fn adjacent_pairs(&self) -> &[(usize, usize)] {
        &self.adjacent
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Distinct edge indices bordering a region.
    pub fn boundary_edges(&self, d: &Diagram, region: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for c in 0..d.crossing_count() {
            for k in 0..4u8 {
                if self.region_of(c, k) == region {
                    let e = d.crossing(c).edge_at(k + 1);
                    if !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
        }
        out
    }
}
