//! Dual equivalence involutions on permutation fillings and standard
//! d-tuples (the d_i / d̃_i moves dispatched by the pistol condition).

use super::{MuFilling, TupleFilling};

/// Entry positions of i-1, i, i+1 in reading order along with the flavor of
/// move to apply; the witness is the middle letter in reading order, which
/// coincides with the shifted-content median.
struct MoveData {
    /// reading order of the three values
    order: [usize; 3],
    witness: usize,
    twisted: bool,
}

fn move_data(contents: [i64; 3], i: usize, d: i64) -> MoveData {
    let values = [i - 1, i, i + 1];
    let mut order: Vec<(i64, usize)> = contents
        .iter()
        .zip(values)
        .map(|(&c, v)| (c, v))
        .collect();
    debug_assert!(
        order[0].0 != order[1].0 && order[1].0 != order[2].0 && order[0].0 != order[2].0,
        "shifted contents of consecutive letters must be distinct"
    );
    order.sort_unstable();
    let twisted =
        (contents[1] - contents[0]).abs() <= d && (contents[1] - contents[2]).abs() <= d;
    MoveData {
        order: [order[0].1, order[1].1, order[2].1],
        witness: order[1].1,
        twisted,
    }
}

/// Applies the move to the three letters' cells: `swap` exchanges values i
/// and the non-witness neighbor; `twist` rotates the values so that i hops
/// from the first-read cell to the last-read cell or back.
fn apply_move<T: Clone>(data: &MoveData, i: usize, cell_of: &mut [T]) {
    if data.witness == i {
        return;
    }
    if !data.twisted {
        let other = if data.witness == i - 1 { i + 1 } else { i - 1 };
        cell_of.swap(i - 1, other - 1);
        return;
    }
    // values in reading order (v1, v2, v3): i sits at an end
    let [v1, v2, v3] = data.order;
    if v1 == i {
        // (i, a, b) -> (a, b, i): i takes b's cell, b takes a's, a takes i's
        let c1 = cell_of[v1 - 1].clone();
        let c2 = cell_of[v2 - 1].clone();
        let c3 = cell_of[v3 - 1].clone();
        cell_of[v2 - 1] = c1;
        cell_of[v3 - 1] = c2;
        cell_of[v1 - 1] = c3;
    } else {
        debug_assert_eq!(v3, i, "i is never the middle read when not witness");
        // (a, b, i) -> (i, a, b): i takes a's cell, a takes b's, b takes i's
        let c1 = cell_of[v1 - 1].clone();
        let c2 = cell_of[v2 - 1].clone();
        let c3 = cell_of[v3 - 1].clone();
        cell_of[v3 - 1] = c1;
        cell_of[v1 - 1] = c2;
        cell_of[v2 - 1] = c3;
    }
}

/// The involution on standard d-tuples preserving the number of
/// d-inversions, 1 < i < m.
pub fn phi_llt(t: &TupleFilling, i: usize) -> TupleFilling {
    assert!(i > 1 && i < t.size());
    let contents = [
        t.shifted_content(i - 1),
        t.shifted_content(i),
        t.shifted_content(i + 1),
    ];
    let data = move_data(contents, i, t.shape().d() as i64);
    let mut cell_of: Vec<(usize, crate::cores::Cell)> =
        (1..=t.size()).map(|e| t.cell_of(e)).collect();
    apply_move(&data, i, &mut cell_of);
    TupleFilling::new(t.shape().clone(), cell_of)
        .expect("dual equivalence keeps the filling standard")
}

/// The involution on permutation fillings of μ preserving maj_μ and inv_μ,
/// 1 < i < m. The pistol condition is evaluated on the shifted contents
/// c̃(col, row) = (col - 1) - μ_1 (row - 1).
pub fn phi_mu(w: &MuFilling, i: usize) -> MuFilling {
    assert!(i > 1 && i < w.size());
    let d = w.mu().part(1) as i64;
    let shifted = |entry: usize| {
        let (col, row) = w.cell_of(entry);
        (col as i64 - 1) - d * (row as i64 - 1)
    };
    let contents = [shifted(i - 1), shifted(i), shifted(i + 1)];
    let data = move_data(contents, i, d);
    // act on the word: cell_of[e-1] = reading position of entry e
    let mut pos_of: Vec<usize> = (1..=w.size())
        .map(|e| w.word().iter().position(|&x| x == e).unwrap())
        .collect();
    apply_move(&data, i, &mut pos_of);
    let mut word = vec![0usize; w.size()];
    for (e, &pos) in pos_of.iter().enumerate() {
        word[pos] = e + 1;
    }
    MuFilling::new(w.mu().clone(), word).expect("permutation stays a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::Partition;

    #[test]
    fn phi_mu_preserves_statistics_exhaustively() {
        for m in 2..=6usize {
            for mu in Partition::all_of_size(m) {
                let mut word: Vec<usize> = (1..=m).collect();
                loop {
                    let f = MuFilling::new(mu.clone(), word.clone()).unwrap();
                    let stats = f.maj_inv();
                    for i in 2..m {
                        let g = phi_mu(&f, i);
                        assert_eq!(g.maj_inv(), stats, "mu={mu} w={word:?} i={i}");
                        assert_eq!(phi_mu(&g, i), f, "involution broken");
                    }
                    if !super::super::macdonald::next_permutation(&mut word) {
                        break;
                    }
                }
            }
        }
    }
}
