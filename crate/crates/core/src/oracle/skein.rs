//! `nabla` by rewriting with the skein relation alone.
//!
//! Components are walked in order of their least edge index, each from the
//! tail of that edge. A diagram is descending when every crossing is first
//! met on its over-strand; such a diagram is an unlink stacked in walk order,
//! so `nabla` is `1` for one component and `0` otherwise. Otherwise the first
//! crossing met from below is switched, using
//!
//! ```text
//! nabla(D) = nabla(D') + sign * z * nabla(D_0)
//! ```
//!
//! where `D'` is `D` with that crossing switched and `D_0` its oriented
//! smoothing. Switching strictly lowers the number of bad crossings and
//! smoothing lowers the crossing count, so the recursion terminates.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::Diagram;
use crate::halfpoly::HalfLaurent;

pub const DEFAULT_DEPTH_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("skein recursion exceeded depth {0}")]
    DepthExceeded(usize),
}

/// Index of the first crossing met from below, if any.
fn first_bad_crossing(d: &Diagram) -> Option<usize> {
    let mut seen = vec![false; d.crossing_count()];
    for cycle in d.strand_cycles() {
        for e in cycle {
            let head = d.edge(e).head;
            let c = head.crossing;
            if !seen[c] {
                seen[c] = true;
                if !d.crossing(c).over().contains(head.slot) {
                    return Some(c);
                }
            }
        }
    }
    None
}

struct Evaluator {
    limit: usize,
    memo: HashMap<String, HalfLaurent>,
}

impl Evaluator {
    fn eval(&mut self, d: &Diagram, depth: usize) -> Result<HalfLaurent, SkeinError> {
        if depth > self.limit {
            return Err(SkeinError::DepthExceeded(self.limit));
        }
        if !d.is_connected() {
            return Ok(HalfLaurent::zero());
        }
        let key = d.canonical_code();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let value = match first_bad_crossing(d) {
            None if d.component_count() == 1 => HalfLaurent::one(),
            None => HalfLaurent::zero(),
            Some(c) => {
                let x = d.crossing(c);
                let (id, sign) = (x.id(), x.sign().value());
                let switched = d.switch_crossing(id).expect("crossing exists");
                let smoothed = d.smooth_crossing(id).expect("crossing exists");
                let a = self.eval(&switched, depth + 1)?;
                let b = self.eval(&smoothed, depth + 1)?;
                let zb = &HalfLaurent::z() * &b;
                if sign > 0 {
                    &a + &zb
                } else {
                    &a - &zb
                }
            }
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

/// The memo lives for one call only.
pub fn skein_recursion_nabla(d: &Diagram, depth_limit: usize) -> Result<HalfLaurent, SkeinError> {
    Evaluator {
        limit: depth_limit,
        memo: HashMap::new(),
    }
    .eval(d, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfpoly::ConwayPoly;

    fn conway(d: &Diagram) -> ConwayPoly {
        skein_recursion_nabla(d, DEFAULT_DEPTH_LIMIT)
            .unwrap()
            .to_conway()
            .unwrap()
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(conway(&Diagram::unknot()), ConwayPoly::from_terms([(0, 1)]));
    }

    #[test]
    fn unlink_is_zero() {
        assert!(conway(&Diagram::unlink(2)).is_zero());
    }

    #[test]
    fn hopf_links() {
        let pos = Diagram::from_braid(2, &[1, 1]).unwrap();
        let neg = Diagram::from_braid(2, &[-1, -1]).unwrap();
        assert_eq!(conway(&pos), ConwayPoly::from_terms([(1, 1)]));
        assert_eq!(conway(&neg), ConwayPoly::from_terms([(1, -1)]));
    }

    #[test]
    fn trefoils() {
        let r = Diagram::from_braid(2, &[1, 1, 1]).unwrap();
        let l = Diagram::from_braid(2, &[-1, -1, -1]).unwrap();
        let expected = ConwayPoly::from_terms([(0, 1), (2, 1)]);
        assert_eq!(conway(&r), expected);
        assert_eq!(conway(&l), expected);
    }

    #[test]
    fn figure_eight() {
        let d = Diagram::from_braid(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(conway(&d), ConwayPoly::from_terms([(0, 1), (2, -1)]));
    }

    #[test]
    fn depth_limit_is_enforced() {
        let d = Diagram::from_braid(2, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(
            skein_recursion_nabla(&d, 1),
            Err(SkeinError::DepthExceeded(1))
        );
    }
}
