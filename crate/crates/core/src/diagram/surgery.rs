//! Crossing surgeries and flat Reidemeister moves.
//!
//! `mirror` and `switch_crossing` only toggle over/under data and keep all
//! ids. Every move that changes the graph keeps surviving crossing ids,
//! gives new crossings the next free ids, and renumbers edges: edges between
//! crossings are numbered `0..m` in order of their tail `(crossing, slot)`,
//! crossingless loops follow.

use serde::{Deserialize, Serialize};

use super::{CrossingId, Diagram, DiagramError, EdgeId, OverPair, Parts, Port};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Whether the moving strand goes over or under at the new crossings.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OverChoice {
    Over,
    Under,
}

impl OverChoice {
    /// Over pair when the moving strand uses slots 0/2.
    fn pair(self) -> OverPair {
        match self {
            OverChoice::Over => OverPair::Even,
            OverChoice::Under => OverPair::Odd,
        }
    }
}

/// How a removed crossing reconnects its four ends.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) enum Pass {
    Straight,
    Oriented,
}

impl Parts {
    /// Renumber edges into the stable scheme.
    pub(crate) fn renumbered(mut self) -> Self {
        self.edges.sort_by_key(|(_, tail, _)| *tail);
        let m = self.edges.len() as u32;
        for (i, e) in self.edges.iter_mut().enumerate() {
            e.0 = EdgeId(i as u32);
        }
        let loops = self.loops.len() as u32;
        self.loops = (m..m + loops).map(EdgeId).collect();
        self
    }
}

impl Diagram {
    /// Toggle the over-strand at every crossing.
    pub fn mirror(&self) -> Diagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.over = c.over.toggled();
        }
        d
    }

    pub fn switch_crossing(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let mut d = self.clone();
        d.crossings[i].over = d.crossings[i].over.toggled();
        Ok(d)
    }

    /// Replace the over pair of one crossing.
    pub fn with_over(&self, id: CrossingId, over: OverPair) -> Result<Diagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let mut d = self.clone();
        d.crossings[i].over = over;
        Ok(d)
    }

    /// Orientation-respecting smoothing at one crossing. The result may be
    /// disconnected.
    pub fn smooth_crossing(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        let i = self.crossing_index(id)?;
        self.reconnect(&[(i, Pass::Oriented)])
    }

    /// Remove crossings, joining their ends according to `rules`.
    pub(crate) fn reconnect(&self, rules: &[(usize, Pass)]) -> Result<Diagram, DiagramError> {
        let n = self.crossing_count();
        let mut rule: Vec<Option<Pass>> = vec![None; n];
        for (i, p) in rules {
            rule[*i] = Some(*p);
        }
        let mut new_index = vec![usize::MAX; n];
        let mut parts = Parts {
            name: self.name.clone(),
            link: self.link.clone(),
            loops: self.loops.clone(),
            ..Parts::default()
        };
        for (i, c) in self.crossings.iter().enumerate() {
            if rule[i].is_none() {
                new_index[i] = parts.crossings.len();
                parts.crossings.push((c.id, c.over));
            }
        }
        let exit = |c: usize, slot: u8| -> u8 {
            match rule[c] {
                Some(Pass::Oriented) => self.crossings[c].oriented_exit(slot),
                _ => (slot + 2) % 4,
            }
        };
        let mut used = vec![false; self.edges.len()];
        for (i, c) in self.crossings.iter().enumerate() {
            if rule[i].is_some() {
                continue;
            }
            for s in 0..4u8 {
                let e0 = c.edge_at(s);
                if self.edges[e0].tail != Port::new(i, s) {
                    continue;
                }
                let mut e = e0;
                loop {
                    used[e] = true;
                    let head = self.edges[e].head;
                    if rule[head.crossing].is_none() {
                        parts.edges.push((
                            EdgeId(0),
                            Port::new(new_index[i], s),
                            Port::new(new_index[head.crossing], head.slot),
                        ));
                        break;
                    }
                    e = self.crossings[head.crossing].edge_at(exit(head.crossing, head.slot));
                }
            }
        }
        for start in 0..self.edges.len() {
            if used[start] {
                continue;
            }
            let mut e = start;
            while !used[e] {
                used[e] = true;
                let head = self.edges[e].head;
                e = self.crossings[head.crossing].edge_at(exit(head.crossing, head.slot));
            }
            parts.loops.push(EdgeId(0));
        }
        parts.renumbered().assemble()
    }

    /// Add a kink on edge `edge`. The new crossing's first pass uses slots
    /// 0/2; `side` places the new one-corner lobe to the left or right of the
    /// edge's direction and `over` says whether the first pass is on top.
    pub fn flat_r1(
        &self,
        edge: EdgeId,
        side: Side,
        over: OverChoice,
    ) -> Result<Diagram, DiagramError> {
        let v = self.crossing_count();
        let vid = CrossingId(self.next_crossing_id());
        let mut parts = self.parts();
        parts.crossings.push((vid, over.pair()));
        let (back_in, exit) = match side {
            Side::Right => (1u8, 3u8),
            Side::Left => (3u8, 1u8),
        };
        let lobe = (EdgeId(0), Port::new(v, 2), Port::new(v, back_in));
        if let Some(pos) = parts.loops.iter().position(|l| *l == edge) {
            parts.loops.remove(pos);
            parts.edges.push(lobe);
            parts
                .edges
                .push((EdgeId(0), Port::new(v, exit), Port::new(v, 0)));
        } else {
            let pos = parts
                .edges
                .iter()
                .position(|e| e.0 == edge)
                .ok_or(DiagramError::UnknownEdge(edge.0))?;
            let (_, tail, head) = parts.edges.remove(pos);
            parts.edges.push((EdgeId(0), tail, Port::new(v, 0)));
            parts.edges.push(lobe);
            parts.edges.push((EdgeId(0), Port::new(v, exit), head));
        }
        parts.renumbered().assemble()
    }

    /// Push a finger of `e1` across `e2` through a face both border, adding
    /// two crossings. `over` says whether the finger passes over `e2`.
    pub fn flat_r2(
        &self,
        e1: EdgeId,
        e2: EdgeId,
        over: OverChoice,
    ) -> Result<Diagram, DiagramError> {
        if e1 == e2 {
            return Err(DiagramError::InvalidMove(
                "flat_r2 needs two distinct edges".into(),
            ));
        }
        let i1 = self.edge_index(e1).ok_or(DiagramError::UnknownEdge(e1.0))?;
        let i2 = self.edge_index(e2).ok_or(DiagramError::UnknownEdge(e2.0))?;
        let faces = self.faces()?;
        let (r1, l1) = faces.edge_sides(i1);
        let (r2, l2) = faces.edge_sides(i2);
        let face = [r1, l1]
            .into_iter()
            .filter(|f| *f == r2 || *f == l2)
            .min()
            .ok_or_else(|| {
                DiagramError::InvalidMove(format!("edges {e1} and {e2} share no region"))
            })?;
        // Local picture: e2 runs along the top of `face`, e1 along the
        // bottom. v1 is the left crossing on e2, v2 the right one, both with
        // slots S=0, E=1, N=2, W=3.
        let e2_rightward = face == r2;
        let e1_rightward = face == l1;
        let v1 = self.crossing_count();
        let v2 = v1 + 1;
        let base = self.next_crossing_id();
        let mut parts = self.parts();
        let pair = over.pair();
        parts.crossings.push((CrossingId(base), pair));
        parts.crossings.push((CrossingId(base + 1), pair));
        let (_, t1, h1) = parts.edges[i1];
        let (_, t2, h2) = parts.edges[i2];
        parts.edges.retain(|e| e.0 != e1 && e.0 != e2);
        let p = Port::new;
        let mut add = |a: Port, b: Port| parts.edges.push((EdgeId(0), a, b));
        if e2_rightward {
            add(t2, p(v1, 3));
            add(p(v1, 1), p(v2, 3));
            add(p(v2, 1), h2);
        } else {
            add(t2, p(v2, 1));
            add(p(v2, 3), p(v1, 1));
            add(p(v1, 3), h2);
        }
        if e1_rightward {
            add(t1, p(v1, 0));
            add(p(v1, 2), p(v2, 2));
            add(p(v2, 0), h1);
        } else {
            add(t1, p(v2, 0));
            add(p(v2, 2), p(v1, 2));
            add(p(v1, 0), h1);
        }
        parts.renumbered().assemble()
    }

    /// Undo a kink: `id` must carry an edge joining two adjacent slots.
    pub fn remove_r1(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let has_lobe = self.edges.iter().any(|e| {
            e.tail.crossing == i && e.head.crossing == i && (e.tail.slot + 4 - e.head.slot) % 2 == 1
        });
        if !has_lobe {
            return Err(DiagramError::InvalidMove(format!(
                "crossing {id} is not a kink"
            )));
        }
        self.reconnect(&[(i, Pass::Straight)])
    }

    /// Undo a poke: `a` and `b` must be the two corners of a bigon face.
    pub fn remove_r2(&self, a: CrossingId, b: CrossingId) -> Result<Diagram, DiagramError> {
        let (ia, ib) = (self.crossing_index(a)?, self.crossing_index(b)?);
        if ia == ib {
            return Err(DiagramError::InvalidMove(
                "remove_r2 needs two crossings".into(),
            ));
        }
        let faces = self.faces()?;
        let bigon = faces.regions().iter().any(|r| {
            r.corners.len() == 2
                && r.corners.iter().any(|c| c.0 == a)
                && r.corners.iter().any(|c| c.0 == b)
        });
        if !bigon {
            return Err(DiagramError::InvalidMove(format!(
                "crossings {a} and {b} bound no bigon"
            )));
        }
        self.reconnect(&[(ia, Pass::Straight), (ib, Pass::Straight)])
    }
}
