//! Alexander's matrix: one row per crossing, one column per region.
//!
//! Looking along the under-strand as it enters the crossing, the four
//! corners get
//!
//! ```text
//!   before, left  ->  t      after, left  -> -t
//!   before, right -> -1      after, right ->  1
//! ```
//!
//! with `t = u^2`. Deleting the columns of two adjacent regions (the
//! canonical star pair) leaves a square matrix whose determinant is the
//! Alexander polynomial up to `+-t^k`.

use serde::Serialize;

use crate::diagram::Diagram;
use crate::halfpoly::HalfLaurent;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderMatrix {
    /// Region ids kept as columns, in order.
    pub columns: Vec<usize>,
    pub rows: Vec<Vec<HalfLaurent>>,
}

/// Requires a connected diagram with at least one crossing.
pub fn alexander_matrix(d: &Diagram) -> AlexanderMatrix {
    let regions = d
        .faces()
        .expect("alexander_matrix needs a connected diagram");
    let (r1, r2) = regions.adjacent_pairs()[0];
    let columns: Vec<usize> = (0..regions.len()).filter(|&r| r != r1 && r != r2).collect();
    let mut col_of = vec![None; regions.len()];
    for (j, &r) in columns.iter().enumerate() {
        col_of[r] = Some(j);
    }
    let t = |c: i64| HalfLaurent::monomial(2, c);
    let one = |c: i64| HalfLaurent::monomial(0, c);
    let rows = (0..d.crossing_count())
        .map(|c| {
            let ui = d.crossing(c).under_in();
            let mut row = vec![HalfLaurent::zero(); columns.len()];
            let entries = [
                ((ui + 3) % 4, t(1)),
                ((ui + 2) % 4, t(-1)),
                ((ui + 1) % 4, one(1)),
                (ui, one(-1)),
            ];
            for (corner, v) in entries {
                if let Some(j) = col_of[regions.region_of(c, corner)] {
                    row[j] = &row[j] + &v;
                }
            }
            row
        })
        .collect();
    AlexanderMatrix { columns, rows }
}

/// Fraction-free (Bareiss) determinant over the Laurent ring.
fn determinant(mut m: Vec<Vec<HalfLaurent>>) -> HalfLaurent {
    let n = m.len();
    if n == 0 {
        return HalfLaurent::one();
    }
    let mut sign = false;
    let mut prev = HalfLaurent::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return HalfLaurent::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Alexander polynomial in `u` (even exponents only), defined up to units.
/// Zero for disconnected diagrams; `1` for a crossingless one.
pub fn alexander_determinant(d: &Diagram) -> HalfLaurent {
    if !d.is_connected() {
        return HalfLaurent::zero();
    }
    if d.crossing_count() == 0 {
        return HalfLaurent::one();
    }
    determinant(alexander_matrix(d).rows)
}
