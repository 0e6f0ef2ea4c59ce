//! Relabeling-invariant encoding of a diagram.
//!
//! For each piece and each starting slot, crossings are relabeled in
//! breadth-first discovery order with the slot of discovery rotated to
//! position 0. The lexicographically least word over all starts encodes the
//! piece; piece words are sorted and followed by the loop count. Rotations
//! are allowed, reflections are not, so mirror-image diagrams stay distinct.

use std::collections::VecDeque;

use super::{Diagram, Direction, Port};

fn word_from(d: &Diagram, start: Port) -> (Vec<u32>, Vec<bool>) {
    let n = d.crossing_count();
    let mut label: Vec<Option<(u32, u8)>> = vec![None; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    label[start.crossing] = Some((0, start.slot));
    order.push(start.crossing);
    queue.push_back(start.crossing);
    let mut word = Vec::new();
    while let Some(c) = queue.pop_front() {
        let (_, rot) = label[c].expect("queued crossings are labeled");
        let x = d.crossing(c);
        word.push(u32::from(x.over().contains(rot)));
        for ns in 0..4u8 {
            let os = (rot + ns) % 4;
            let far = d.partner(Port::new(c, os));
            if label[far.crossing].is_none() {
                label[far.crossing] = Some((order.len() as u32, far.slot));
                order.push(far.crossing);
                queue.push_back(far.crossing);
            }
            let (fi, frot) = label[far.crossing].expect("just labeled");
            word.push(fi);
            word.push(u32::from((far.slot + 4 - frot) % 4));
            word.push(u32::from(x.direction(os) == Direction::Inbound));
        }
    }
    let mut member = vec![false; n];
    for c in order {
        member[c] = true;
    }
    (word, member)
}

pub(crate) fn code(d: &Diagram) -> String {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut pieces: Vec<Vec<u32>> = Vec::new();
    for c in 0..n {
        if done[c] {
            continue;
        }
        let (_, member) = word_from(d, Port::new(c, 0));
        let mut best: Option<Vec<u32>> = None;
        for (m, _) in member.iter().enumerate().filter(|(_, &b)| b) {
            done[m] = true;
            for s in 0..4u8 {
                let (w, _) = word_from(d, Port::new(m, s));
                if best.as_ref().is_none_or(|b| w < *b) {
                    best = Some(w);
                }
            }
        }
        pieces.push(best.expect("piece has at least one crossing"));
    }
    pieces.sort();
    let mut out = String::new();
    for p in &pieces {
        out.push('[');
        out.push_str(&p.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        out.push(']');
    }
    out.push_str(&format!("L{}", d.loops().len()));
    out
}
