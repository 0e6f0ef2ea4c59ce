//! PD-code import.
//!
//! `X[a,b,c,d]` lists edge labels counterclockwise starting from the
//! inbound under-strand, so `a` is inbound and `c` outbound. The direction
//! of the over-strand `b`/`d` is propagated from the under-strand data along
//! each component; a component that never passes under falls back to the
//! consecutive-numbering rule.

use std::collections::{BTreeMap, VecDeque};

use regex::Regex;

use super::{CrossingId, Diagram, DiagramError, EdgeId, OverPair, Parts, Port};

pub(crate) fn parse(text: &str) -> Result<Diagram, DiagramError> {
    let re = Regex::new(r"X\s*\[([^\[\]]*)\]").expect("static regex");
    let mut quads: Vec<[u32; 4]> = Vec::new();
    for cap in re.captures_iter(text) {
        let nums: Result<Vec<u32>, _> =
            cap[1].split(',').map(|s| s.trim().parse::<u32>()).collect();
        let nums =
            nums.map_err(|_| DiagramError::Syntax(format!("bad crossing X[{}]", &cap[1])))?;
        let quad: [u32; 4] = nums.try_into().map_err(|_| {
            DiagramError::Syntax(format!("crossing X[{}] needs four labels", &cap[1]))
        })?;
        quads.push(quad);
    }
    let rest = re.replace_all(text, "");
    if let Some(bad) = rest
        .chars()
        .find(|ch| !(ch.is_whitespace() || "PD[],;".contains(*ch)))
    {
        return Err(DiagramError::Syntax(format!(
            "unexpected character {bad:?} in PD code"
        )));
    }
    if quads.is_empty() {
        return Ok(Diagram::unknot());
    }

    // label -> its two occurrences as (crossing, slot)
    let mut occ: BTreeMap<u32, Vec<(usize, u8)>> = BTreeMap::new();
    for (c, q) in quads.iter().enumerate() {
        for (s, label) in q.iter().enumerate() {
            occ.entry(*label).or_default().push((c, s as u8));
        }
    }
    for (label, v) in &occ {
        if v.len() != 2 {
            return Err(DiagramError::EdgeMultiplicity(label.to_string(), v.len()));
        }
    }

    // inbound[c][s]: Some(true) when slot s of crossing c is inbound.
    let n = quads.len();
    let mut inbound: Vec<[Option<bool>; 4]> = vec![[Some(true), None, Some(false), None]; n];
    let mut queue: VecDeque<(usize, u8)> = (0..n).flat_map(|c| [(c, 0u8), (c, 2u8)]).collect();
    let assign = |inbound: &mut Vec<[Option<bool>; 4]>,
                  queue: &mut VecDeque<(usize, u8)>,
                  c: usize,
                  s: u8,
                  v: bool|
     -> Result<(), DiagramError> {
        match inbound[c][s as usize] {
            Some(old) if old != v => Err(DiagramError::Orientation(c as u32)),
            Some(_) => Ok(()),
            None => {
                inbound[c][s as usize] = Some(v);
                queue.push_back((c, s));
                Ok(())
            }
        }
    };
    loop {
        while let Some((c, s)) = queue.pop_front() {
            let v = inbound[c][s as usize].expect("queued slots are assigned");
            let label = quads[c][s as usize];
            let pair = &occ[&label];
            let other = if pair[0] == (c, s) { pair[1] } else { pair[0] };
            assign(&mut inbound, &mut queue, other.0, other.1, !v)?;
            assign(&mut inbound, &mut queue, c, (s + 2) % 4, !v)?;
        }
        let Some(c) = (0..n).find(|&c| inbound[c][1].is_none()) else {
            break;
        };
        let (b, d) = (quads[c][1], quads[c][3]);
        let b_to_d = d == b + 1 || (b != d + 1 && b > d);
        assign(&mut inbound, &mut queue, c, 1, b_to_d)?;
    }

    let mut parts = Parts {
        crossings: (0..n)
            .map(|c| (CrossingId(c as u32), OverPair::Odd))
            .collect(),
        ..Parts::default()
    };
    for (label, v) in &occ {
        let [x, y] = [v[0], v[1]];
        let x_in = inbound[x.0][x.1 as usize].expect("all slots resolved");
        let (tail, head) = if x_in { (y, x) } else { (x, y) };
        parts.edges.push((
            EdgeId(*label),
            Port::new(tail.0, tail.1),
            Port::new(head.0, head.1),
        ));
    }
    parts.assemble()
}
