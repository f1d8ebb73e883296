//! Abacus surgeries: flattening (delete a rod) and cloning (duplicate a
//! column of the n-rod abacus).

use super::abacus::Abacus;
use super::partition::Partition;

/// Deletes every bead and spacer with content ≡ d (mod n) from the abacus of
/// an n-core and re-indexes; the result is an (n-1)-core.
pub fn flatten_core(lam: &Partition, n: usize, d: i64) -> Partition {
    assert!(n >= 2, "flattening needs n >= 2");
    let a = Abacus::from_partition(lam);
    let n_i = n as i64;
    let res = d.rem_euclid(n_i);
    // cover whole residue blocks around the window; the deleted positions
    // below are all beads and above all spacers, so canonical re-indexing
    // fixes up the offset
    let lo = a.lo() - n_i;
    let hi = a.hi() + n_i;
    let window: Vec<bool> = (lo..=hi)
        .filter(|c| c.rem_euclid(n_i) != res)
        .map(|c| a.bead(c))
        .collect();
    Abacus::from_window(lo, window).to_partition()
}

/// Result of cloning: the new core plus the content at which the inserted
/// block sits in the canonical output string (the inverse squash index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloneOutput {
    pub partition: Partition,
    pub squash_index: i64,
}

/// Inserts a copy of the substring at contents `j..j+n-1` immediately before
/// position `j`, producing another n-core.
pub fn clone_core(lam: &Partition, n: usize, j: i64) -> CloneOutput {
    let a = Abacus::from_partition(lam);
    let n_i = n as i64;
    let lo = a.lo().min(j) - n_i;
    let hi = a.hi().max(j + n_i - 1) + n_i;
    let mut window: Vec<bool> = (lo..=hi).map(|c| a.bead(c)).collect();
    let block: Vec<bool> = (j..j + n_i).map(|c| a.bead(c)).collect();
    let insert_at = (j - lo) as usize;
    for (t, &b) in block.iter().enumerate() {
        window.insert(insert_at + t, b);
    }
    let out = Abacus::from_window(lo, window);
    let delta = clone_shift(&a, &out, j, n);
    CloneOutput {
        partition: out.to_partition(),
        squash_index: j + delta,
    }
}

/// Shift δ such that contents `c < j` of `a` appear at `c + δ` in `out` and
/// contents `c ≥ j` at `c + δ + n`; the cloned block then starts at `j + δ`.
/// Periodic strings admit several shifts, so δ is also required to leave a
/// squashable block (equal to its right neighbor) at `j + δ`.
fn clone_shift(a: &Abacus, out: &Abacus, j: i64, n: usize) -> i64 {
    let n_i = n as i64;
    let lo = a.lo().min(j) - 1;
    let hi = a.hi().max(j + n_i) + 1;
    for delta in -(2 * n_i + 2)..=2 * n_i + 2 {
        let shifted_ok = (lo..=hi).all(|c| {
            if c < j {
                a.bead(c) == out.bead(c + delta)
            } else {
                a.bead(c) == out.bead(c + delta + n_i)
            }
        });
        let block_ok =
            (0..n_i).all(|t| out.bead(j + delta + t) == out.bead(j + delta + n_i + t));
        if shifted_ok && block_ok {
            return delta;
        }
    }
    unreachable!("cloning shift not found for j={j}, n={n}");
}

/// Deletes the block at contents `j..j+n-1`, requiring it to equal the block
/// at `j+n..j+2n-1`; inverse of [`clone_core`] at the returned squash index.
pub fn squash_core(lam: &Partition, n: usize, j: i64) -> Option<Partition> {
    let a = Abacus::from_partition(lam);
    let n_i = n as i64;
    if (0..n_i).any(|t| a.bead(j + t) != a.bead(j + n_i + t)) {
        return None;
    }
    let lo = a.lo().min(j) - n_i;
    let hi = a.hi().max(j + 2 * n_i) + n_i;
    let window: Vec<bool> = (lo..=hi)
        .filter(|&c| !(c >= j && c < j + n_i))
        .map(|c| a.bead(c))
        .collect();
    Some(Abacus::from_window(lo, window).to_partition())
}
