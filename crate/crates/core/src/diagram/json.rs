use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{CrossingId, Diagram, DiagramError, EdgeId, OverPair, Parts, Port};

/// Native file format.
///
/// ```json
/// { "name": "hopf_pos",
///   "crossings": [ { "id": 0, "slots": [0, 1, 2, 3], "over": "02" } ],
///   "edges": [ { "id": 0, "tail": [0, 2], "head": [1, 0] } ] }
/// ```
///
/// Edge endpoints are `[crossing id, slot]`. An edge with both endpoints
/// `null` is a crossingless loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<String>,
    #[serde(default)]
    pub crossings: Vec<JsonCrossing>,
    pub edges: Vec<JsonEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCrossing {
    pub id: u32,
    pub slots: [u32; 4],
    pub over: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub id: u32,
    #[serde(default)]
    pub tail: Option<(u32, u8)>,
    #[serde(default)]
    pub head: Option<(u32, u8)>,
}

impl DiagramJson {
    pub fn from_diagram(d: &Diagram) -> Self {
        let crossings = d
            .crossings()
            .iter()
            .map(|c| JsonCrossing {
                id: c.id().0,
                slots: c.slots().map(|e| d.edge(e).id.0),
                over: c.over().code().to_string(),
            })
            .collect();
        let end = |p: Port| Some((d.crossing(p.crossing).id().0, p.slot));
        let mut edges: Vec<JsonEdge> = d
            .edges()
            .iter()
            .map(|e| JsonEdge {
                id: e.id.0,
                tail: end(e.tail),
                head: end(e.head),
            })
            .collect();
        edges.extend(d.loops().iter().map(|id| JsonEdge {
            id: id.0,
            tail: None,
            head: None,
        }));
        Self {
            name: d.name().map(str::to_string),
            link: d.link().map(str::to_string),
            crossings,
            edges,
        }
    }

    pub fn into_diagram(self) -> Result<Diagram, DiagramError> {
        let mut crossings: Vec<&JsonCrossing> = self.crossings.iter().collect();
        crossings.sort_by_key(|c| c.id);
        let index: HashMap<u32, usize> = crossings
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id, i))
            .collect();
        if index.len() != crossings.len() {
            return Err(DiagramError::DuplicateId("crossing".into()));
        }

        let mut parts = Parts {
            name: self.name.clone(),
            link: self.link.clone(),
            ..Parts::default()
        };
        for c in &crossings {
            let over = OverPair::from_code(&c.over).ok_or_else(|| {
                DiagramError::Syntax(format!("over must be \"02\" or \"13\", got {:?}", c.over))
            })?;
            parts.crossings.push((CrossingId(c.id), over));
        }

        // Every edge must occupy exactly two slots, and those slots must be
        // the same ones its tail and head name.
        let mut occurrences: HashMap<u32, Vec<(u32, u8)>> = HashMap::new();
        for c in &crossings {
            for (s, e) in c.slots.iter().enumerate() {
                occurrences.entry(*e).or_default().push((c.id, s as u8));
            }
        }
        let port = |(cid, slot): (u32, u8)| -> Result<Port, DiagramError> {
            let ci = *index.get(&cid).ok_or(DiagramError::UnknownCrossing(cid))?;
            if slot > 3 {
                return Err(DiagramError::Syntax(format!("slot {slot} out of range")));
            }
            Ok(Port::new(ci, slot))
        };
        for e in &self.edges {
            let occ = occurrences.remove(&e.id).unwrap_or_default();
            match (e.tail, e.head) {
                (None, None) => {
                    if !occ.is_empty() {
                        return Err(DiagramError::EdgeMultiplicity(e.id.to_string(), occ.len()));
                    }
                    parts.loops.push(EdgeId(e.id));
                }
                (Some(t), Some(h)) => {
                    if occ.len() != 2 {
                        return Err(DiagramError::EdgeMultiplicity(e.id.to_string(), occ.len()));
                    }
                    let mut listed = vec![t, h];
                    listed.sort_unstable();
                    let mut found = occ.clone();
                    found.sort_unstable();
                    if listed != found {
                        return Err(DiagramError::Syntax(format!(
                            "edge {} endpoints {:?} disagree with crossing slots {:?}",
                            e.id, listed, found
                        )));
                    }
                    parts.edges.push((EdgeId(e.id), port(t)?, port(h)?));
                }
                _ => {
                    return Err(DiagramError::Syntax(format!(
                        "edge {} has only one endpoint",
                        e.id
                    )));
                }
            }
        }
        if let Some((id, occ)) = occurrences.into_iter().next() {
            return Err(DiagramError::EdgeMultiplicity(
                format!("{id} (undeclared)"),
                occ.len(),
            ));
        }
        parts.assemble()
    }
}
