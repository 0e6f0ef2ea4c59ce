//! A Jordan trail built from the Seifert circles, and the state it induces.
//!
//! Every crossing carries one of two smoothings. The oriented one cups the
//! `E` and `W` corners and leaves a channel joining `S` to `N`; the
//! reassembled one cups `S` and `N` and leaves a channel joining `E` to `W`.
//! Starting from the Seifert circles, a circle with an empty side is merged
//! into a neighbour by reassembling one of its sites until a single curve
//! remains. The channels then form two trees on the regions, one on each
//! side of the curve, and rooting them at the stars places one marker per
//! crossing in the child region of its channel.

use std::collections::VecDeque;

use serde::Serialize;

use super::{KState, StarredDiagram, StateError};
use crate::diagram::{CrossingId, Diagram, EdgeId, Port, Quadrant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanTrail {
    /// Crossings smoothed against the orientation, in the order chosen.
    pub reassembled: Vec<CrossingId>,
    /// The single curve as a cyclic sequence of edges.
    pub trail: Vec<EdgeId>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Smoothing {
    Oriented,
    Reassembled,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Corners cupped by the two arcs at a crossing, and the two channel corners.
fn corner_roles(d: &Diagram, c: usize, sm: Smoothing) -> ([u8; 2], [u8; 2]) {
    let x = d.crossing(c);
    let q = |q| x.corner(q);
    match sm {
        Smoothing::Oriented => (
            [q(Quadrant::E), q(Quadrant::W)],
            [q(Quadrant::S), q(Quadrant::N)],
        ),
        Smoothing::Reassembled => (
            [q(Quadrant::S), q(Quadrant::N)],
            [q(Quadrant::E), q(Quadrant::W)],
        ),
    }
}

/// Curve label per edge: the least edge index on the same curve.
fn curves(d: &Diagram, smoothing: &[Smoothing]) -> Vec<usize> {
    let mut uf = UnionFind::new(d.edges().len());
    for (c, &sm) in smoothing.iter().enumerate() {
        let x = d.crossing(c);
        for k in corner_roles(d, c, sm).0 {
            uf.union(x.edge_at(k), x.edge_at(k + 1));
        }
    }
    let mut label: Vec<usize> = (0..d.edges().len()).map(|e| uf.find(e)).collect();
    let mut least = vec![usize::MAX; d.edges().len()];
    for (e, &r) in label.iter().enumerate() {
        least[r] = least[r].min(e);
    }
    for l in label.iter_mut() {
        *l = least[*l];
    }
    label
}

/// Whether one side of curve `k` holds no other curve.
fn has_empty_side(
    sd: &StarredDiagram<'_>,
    smoothing: &[Smoothing],
    curve: &[usize],
    k: usize,
) -> bool {
    let d = sd.diagram();
    let regions = sd.regions();
    let mut uf = UnionFind::new(regions.len());
    for (e, &cv) in curve.iter().enumerate() {
        if cv != k {
            let (r, l) = regions.edge_sides(e);
            uf.union(r, l);
        }
    }
    for (c, &sm) in smoothing.iter().enumerate() {
        let x = d.crossing(c);
        let ([a, b], [g, h]) = corner_roles(d, c, sm);
        let on_k = |corner: u8| curve[x.edge_at(corner)] == k;
        let reg = |corner: u8| regions.region_of(c, corner);
        let mut group = vec![reg(g), reg(h)];
        if !on_k(a) {
            group.push(reg(a));
        }
        if !on_k(b) {
            group.push(reg(b));
        }
        for w in group.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut touched: Vec<usize> = curve
        .iter()
        .enumerate()
        .filter(|(_, &cv)| cv != k)
        .map(|(e, _)| uf.find(regions.edge_sides(e).0))
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let mut classes: Vec<usize> = (0..regions.len()).map(|r| uf.find(r)).collect();
    classes.sort_unstable();
    classes.dedup();
    debug_assert_eq!(classes.len(), 2, "a simple closed curve has two sides");
    touched.len() < classes.len()
}

/// Walk the single remaining curve from edge 0.
fn trace_trail(d: &Diagram, smoothing: &[Smoothing]) -> Vec<EdgeId> {
    let mut out = Vec::new();
    let start = 0usize;
    let mut e = start;
    let mut arrive = d.edge(e).head;
    loop {
        out.push(d.edge(e).id);
        let Port {
            crossing: c,
            slot: s,
        } = arrive;
        let x = d.crossing(c);
        let [a, b] = corner_roles(d, c, smoothing[c]).0;
        let other = [a, b]
            .into_iter()
            .find_map(|k| {
                if s == k {
                    Some((k + 1) % 4)
                } else if s == (k + 1) % 4 {
                    Some(k)
                } else {
                    None
                }
            })
            .expect("every slot lies on one arc");
        let leave = Port::new(c, other);
        e = x.edge_at(other);
        arrive = d.partner(leave);
        if e == start && leave == d.edge(start).tail {
            break;
        }
    }
    out
}

/// Build the Jordan trail by reassembling `s(D) - 1` sites and read off the
/// state it induces for the given stars.
pub fn construct_trail_state(sd: &StarredDiagram<'_>) -> Result<(JordanTrail, KState), StateError> {
    let d = sd.diagram();
    let n = d.crossing_count();
    if n == 0 {
        let trail = JordanTrail {
            reassembled: Vec::new(),
            trail: d.loops().to_vec(),
        };
        return Ok((trail, sd.state(&[])?));
    }
    let mut smoothing = vec![Smoothing::Oriented; n];
    let mut reassembled = Vec::new();
    loop {
        let curve = curves(d, &smoothing);
        let mut ids: Vec<usize> = curve.clone();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() == 1 {
            break;
        }
        let inner = ids
            .iter()
            .copied()
            .find(|&k| has_empty_side(sd, &smoothing, &curve, k))
            .ok_or_else(|| StateError::NotAState("no innermost curve found".into()))?;
        let site = (0..n)
            .find(|&c| {
                if smoothing[c] != Smoothing::Oriented {
                    return false;
                }
                let x = d.crossing(c);
                let [a, b] = corner_roles(d, c, Smoothing::Oriented).0;
                let (ca, cb) = (curve[x.edge_at(a)], curve[x.edge_at(b)]);
                ca != cb && (ca == inner || cb == inner)
            })
            .ok_or_else(|| StateError::NotAState(format!("curve {inner} has no free site")))?;
        smoothing[site] = Smoothing::Reassembled;
        reassembled.push(d.crossing(site).id());
    }

    // Channel forest rooted at the stars.
    let regions = sd.regions();
    let mut channels: Vec<Vec<(usize, usize, u8)>> = vec![Vec::new(); regions.len()];
    for (c, &sm) in smoothing.iter().enumerate() {
        let [g, h] = corner_roles(d, c, sm).1;
        let (rg, rh) = (regions.region_of(c, g), regions.region_of(c, h));
        channels[rg].push((rh, c, h));
        channels[rh].push((rg, c, g));
    }
    let stars = sd.stars();
    let mut seen = vec![false; regions.len()];
    let mut marker: Vec<Option<Quadrant>> = vec![None; n];
    for root in [stars.r1, stars.r2] {
        if seen[root] {
            return Err(StateError::NotAState(
                "both stars lie in one channel tree".into(),
            ));
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            for &(child, c, corner) in &channels[r] {
                if seen[child] || marker[c].is_some() {
                    continue;
                }
                seen[child] = true;
                marker[c] = Some(d.crossing(c).quadrant(corner));
                queue.push_back(child);
            }
        }
    }
    let quads: Vec<Quadrant> = marker
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| StateError::NotAState("channel trees do not reach every crossing".into()))?;
    let state = sd.state(&quads)?;
    let trail = JordanTrail {
        reassembled,
        trail: trace_trail(d, &smoothing),
    };
    Ok((trail, state))
}
