//! Seeded random diagrams: random flat R1/R2 moves from a seed diagram,
//! then a random over/under choice at every crossing.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, EdgeId, OverChoice, OverPair, Side};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_edge_ids(d: &Diagram) -> Vec<EdgeId> {
    d.edges()
        .iter()
        .map(|e| e.id)
        .chain(d.loops().iter().copied())
        .collect()
}

fn random_r1(d: &Diagram, rng: &mut impl Rng) -> Option<Diagram> {
    let edges = all_edge_ids(d);
    let e = *edges.choose(rng)?;
    let side = if rng.gen() { Side::Left } else { Side::Right };
    let over = if rng.gen() {
        OverChoice::Over
    } else {
        OverChoice::Under
    };
    d.flat_r1(e, side, over).ok()
}

fn random_r2(d: &Diagram, rng: &mut impl Rng) -> Option<Diagram> {
    let faces = d.faces().ok()?;
    let region = rng.gen_range(0..faces.len());
    let boundary = faces.boundary_edges(d, region);
    if boundary.len() < 2 {
        return None;
    }
    let pick: Vec<usize> = boundary.choose_multiple(rng, 2).copied().collect();
    let over = if rng.gen() {
        OverChoice::Over
    } else {
        OverChoice::Under
    };
    d.flat_r2(d.edge(pick[0]).id, d.edge(pick[1]).id, over).ok()
}

/// One random flat R1 or R2 move. Falls back to R1 when no R2 applies.
pub fn random_flat_move(d: &Diagram, rng: &mut impl Rng) -> Diagram {
    if d.crossing_count() > 0 && rng.gen_bool(0.5) {
        for _ in 0..8 {
            if let Some(next) = random_r2(d, rng) {
                return next;
            }
        }
    }
    random_r1(d, rng).expect("every diagram has an edge")
}

/// Toggle each crossing's over pair with probability 1/2.
pub fn randomize_over(d: &Diagram, rng: &mut impl Rng) -> Diagram {
    let mut out = d.clone();
    for x in d.crossings() {
        let pair = if rng.gen() {
            OverPair::Even
        } else {
            OverPair::Odd
        };
        out = out.with_over(x.id(), pair).expect("crossing exists");
    }
    out
}

/// Flat moves from `seed` until another move would exceed `max_crossings`
/// (at least one move when room allows), then random over/under data.
pub fn random_diagram(seed: &Diagram, max_crossings: usize, rng: &mut impl Rng) -> Diagram {
    let mut d = seed.clone();
    let target = rng.gen_range(d.crossing_count()..=max_crossings);
    while d.crossing_count() < target {
        let next = random_flat_move(&d, rng);
        if next.crossing_count() > max_crossings {
            break;
        }
        d = next;
    }
    randomize_over(&d, rng)
}

/// `count` random diagrams grown from connected seeds of at most
/// `max_crossings` crossings, cycling through the seeds.
pub fn random_diagrams(
    seeds: &[Diagram],
    count: usize,
    max_crossings: usize,
    seed: u64,
) -> Vec<Diagram> {
    let pool: Vec<&Diagram> = seeds
        .iter()
        .filter(|d| d.is_connected() && d.crossing_count() <= max_crossings)
        .collect();
    assert!(!pool.is_empty(), "no usable seed diagram");
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let base = pool[i % pool.len()];
            let name = format!("random_{seed}_{i}");
            random_diagram(base, max_crossings, &mut rng).with_name(name)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_diagrams() {
        let seeds = [
            Diagram::unknot(),
            Diagram::from_braid(2, &[1, 1, 1]).unwrap(),
        ];
        let a = random_diagrams(&seeds, 10, 8, 7);
        let b = random_diagrams(&seeds, 10, 8, 7);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|d| d.crossing_count() <= 8 && d.is_connected()));
    }

    #[test]
    fn flat_moves_add_crossings() {
        let mut r = rng(1);
        let d = Diagram::from_braid(2, &[1, 1]).unwrap();
        for _ in 0..20 {
            let n = random_flat_move(&d, &mut r).crossing_count();
            assert!(n == 3 || n == 4);
        }
    }
}
