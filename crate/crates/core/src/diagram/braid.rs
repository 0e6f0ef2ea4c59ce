//! Braid closures, drawn with every strand pointing up and the closing
//! arcs nested to one side. Each crossing uses slots SW=0, SE=1, NE=2,
//! NW=3, so both strands enter from below.

use super::{CrossingId, Diagram, DiagramError, EdgeId, OverPair, Parts, Port};

pub(crate) fn closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Syntax(
            "a braid needs at least one strand".into(),
        ));
    }
    let mut parts = Parts::default();
    let mut first_in: Vec<Option<Port>> = vec![None; strands];
    let mut last_out: Vec<Option<Port>> = vec![None; strands];
    for (c, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::Syntax(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
        let (left, right) = (i - 1, i);
        // Positive generators put the SW -> NE strand on top.
        let over = if g > 0 { OverPair::Even } else { OverPair::Odd };
        parts.crossings.push((CrossingId(c as u32), over));
        for (pos, slot) in [(left, 0u8), (right, 1u8)] {
            let input = Port::new(c, slot);
            match last_out[pos] {
                Some(out) => parts.edges.push((EdgeId(0), out, input)),
                None => first_in[pos] = Some(input),
            }
        }
        last_out[left] = Some(Port::new(c, 3));
        last_out[right] = Some(Port::new(c, 2));
    }
    for pos in 0..strands {
        match (last_out[pos], first_in[pos]) {
            (Some(out), Some(input)) => parts.edges.push((EdgeId(0), out, input)),
            _ => parts.loops.push(EdgeId(0)),
        }
    }
    parts.renumbered().assemble()
}
