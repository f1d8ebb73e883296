//! The affine symmetric group, minimal coset representatives, and the
//! bijection with n-cores.

use serde::{Deserialize, Serialize};

use crate::cores::{residue, Abacus, Partition};
use crate::error::CoreError;

/// An affine permutation w: Z -> Z with w(i+n) = w(i) + n, stored by its
/// window [w(1), ..., w(n)]. The window entries are pairwise incongruent
/// mod n and sum to n(n+1)/2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self, CoreError> {
        if window.len() != n {
            return Err(CoreError::BadWindow(
                window.clone(),
                n,
                "window length != n".into(),
            ));
        }
        let sum: i64 = window.iter().sum();
        if sum != (n as i64) * (n as i64 + 1) / 2 {
            return Err(CoreError::BadWindow(
                window.clone(),
                n,
                format!("window sums to {sum}, not n(n+1)/2"),
            ));
        }
        let mut seen = vec![false; n];
        for &w in &window {
            let r = w.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(CoreError::BadWindow(
                    window.clone(),
                    n,
                    "window entries congruent mod n".into(),
                ));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { n, window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// The simple reflection s_i = t_{i,i+1} for 0 <= i < n.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i < n);
        AffineTransposition::new(i as i64, i as i64 + 1)
            .unwrap()
            .to_permutation(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Evaluates w(i) for any integer via periodicity.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = i.rem_euclid(n); // class representative in 0..n
        let idx = if r == 0 { self.n - 1 } else { r as usize - 1 };
        let base = if r == 0 { n } else { r };
        self.window[idx] + (i - base)
    }

    /// Composition (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        assert_eq!(self.n, other.n);
        AffinePermutation {
            n: self.n,
            window: (1..=self.n as i64).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> AffinePermutation {
        let n = self.n as i64;
        let mut window = vec![0i64; self.n];
        for (i, &wi) in self.window.iter().enumerate() {
            // w(i+1) = wi means w^{-1}(wi) = i+1; shift into the window
            let r = wi.rem_euclid(n);
            let (idx, base) = if r == 0 {
                (self.n - 1, n)
            } else {
                (r as usize - 1, r)
            };
            window[idx] = (i as i64 + 1) + (base - wi);
        }
        AffinePermutation { n: self.n, window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    /// Coxeter length: the number of affine inversions.
    pub fn length(&self) -> u64 {
        let n = self.n as i64;
        let mut len = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                len += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs();
            }
        }
        len
    }

    /// Minimal length coset representatives of S̃_n / S_n have increasing
    /// windows.
    pub fn is_min_coset_rep(&self) -> bool {
        self.window.windows(2).all(|w| w[0] < w[1])
    }
}

/// The affine transposition t_{r,s} with r < s, r ≢ s mod n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct AffineTransposition {
    pub r: i64,
    pub s: i64,
}

impl AffineTransposition {
    pub fn new(r: i64, s: i64) -> Option<Self> {
        if r < s {
            Some(AffineTransposition { r, s })
        } else {
            None
        }
    }

    pub fn to_permutation(self, n: usize) -> AffinePermutation {
        let n_i = n as i64;
        assert!(
            (self.s - self.r).rem_euclid(n_i) != 0,
            "t_{{r,s}} needs r ≢ s mod n"
        );
        let mut w = AffinePermutation::identity(n);
        for i in 1..=n as i64 {
            let d = if (i - self.r).rem_euclid(n_i) == 0 {
                self.s - self.r
            } else if (i - self.s).rem_euclid(n_i) == 0 {
                self.r - self.s
            } else {
                0
            };
            w.window[i as usize - 1] = i + d;
        }
        w
    }
}

/// The n-core associated to a minimal coset representative: the partition of
/// the bead set w({c ≤ 0}).
pub fn core_of(w: &AffinePermutation) -> Result<Partition, CoreError> {
    if !w.is_min_coset_rep() {
        return Err(CoreError::NotMinCosetRep);
    }
    let core = core_of_unchecked(w);
    // length must match the rank of the output (catches windows that are not
    // products of the coset recursion)
    if w.length() != rank(&core, w.n) {
        return Err(CoreError::BadWindow(
            w.window.clone(),
            w.n,
            "length does not equal the rank of the associated core".into(),
        ));
    }
    Ok(core)
}

fn core_of_unchecked(w: &AffinePermutation) -> Partition {
    // image of the trivial bead set {c <= 0}. The displacement |w(i) - i| is
    // bounded by m, so every content below -(m + n) is a bead and every
    // bead in the stored zone has its preimage at least lo - m.
    let m = w
        .window
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - (i as i64 + 1)).abs())
        .max()
        .unwrap();
    let n = w.n as i64;
    let lo = -(m + n);
    let hi = m + n;
    let mut window = vec![false; (hi - lo + 1) as usize];
    for c in lo - m..=0 {
        let img = w.apply(c);
        if img >= lo {
            window[(img - lo) as usize] = true;
        }
    }
    Abacus::from_window(lo, window).to_partition()
}

/// The minimal coset representative associated to an n-core, built by
/// repeatedly removing all removable corners of one residue.
pub fn affine_of(lam: &Partition, n: usize) -> Result<AffinePermutation, CoreError> {
    if !crate::cores::is_n_core(lam, n) {
        return Err(CoreError::NotNCore(lam.to_string(), n));
    }
    let mut w = AffinePermutation::identity(n);
    // the word s_{r1} s_{r2} ... s_{rl} multiplies onto the identity from
    // the right inward, so apply the residues last-peeled first
    for &res in peel_residues(lam, n).iter().rev() {
        w = AffinePermutation::simple(n, res).compose(&w);
    }
    Ok(w)
}

/// Residues peeled from `lam` down to the empty core, in the order they are
/// applied when rebuilding (first entry = last corner removed... the word
/// read left to right). `lam = s_{w[0]} s_{w[1]} ... ∅` as the corner-adding
/// action.
pub fn reduced_word(lam: &Partition, n: usize) -> Vec<usize> {
    peel_residues(lam, n)
}

fn peel_residues(lam: &Partition, n: usize) -> Vec<usize> {
    let mut cur = lam.clone();
    let mut word = Vec::new();
    while !cur.is_empty() {
        // any removable corner's residue works; take the one of largest content
        let corner = *cur
            .removable_cells()
            .iter()
            .max_by_key(|&&c| crate::cores::content(c))
            .expect("nonempty partition has a corner");
        let res = residue(corner, n);
        word.push(res);
        cur = cur.remove_residue_corners(res, n);
    }
    word
}

/// Rank of an n-core in the core poset = length of its coset representative.
pub fn rank(lam: &Partition, n: usize) -> u64 {
    peel_residues(lam, n).len() as u64
}

/// Action of an affine transposition on an n-core: swap the two rods on the
/// abacus. Always yields another n-core.
pub fn act_transposition(t: AffineTransposition, lam: &Partition, n: usize) -> Partition {
    Abacus::from_partition(lam)
        .swap_rods(t.r, t.s, n)
        .to_partition()
}

/// Action of the simple reflection s_i: adds all addable corners of residue i
/// when there are any, otherwise removes all removable corners of residue i.
pub fn act_simple(i: usize, lam: &Partition, n: usize) -> Partition {
    let added = lam.add_residue_corners(i, n);
    if added != *lam {
        added
    } else {
        lam.remove_residue_corners(i, n)
    }
}

/// Bruhat order on minimal coset representatives: by Lascoux's theorem this
/// is containment of the associated core diagrams.
pub fn bruhat_leq(v: &AffinePermutation, w: &AffinePermutation) -> Result<bool, CoreError> {
    let cv = core_of(v)?;
    let cw = core_of(w)?;
    Ok(cv.contained_in(&cw))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn window_arithmetic() {
        let s0 = AffinePermutation::simple(3, 0);
        assert_eq!(s0.window(), &[0, 2, 4]);
        assert_eq!(s0.length(), 1);
        assert_eq!(s0.apply(4), 3);
        assert_eq!(s0.compose(&s0), AffinePermutation::identity(3));
        let s1 = AffinePermutation::simple(3, 1);
        let w = s1.compose(&s0);
        assert_eq!(w.length(), 2);
        assert_eq!(w.inverse().compose(&w), AffinePermutation::identity(3));
    }

    #[test]
    fn core_bijection_small() {
        // id <-> ∅, s0 <-> (1), s1 s0 <-> (2), s2 s0 <-> (1,1) for n = 3
        let n = 3;
        let id = AffinePermutation::identity(n);
        assert_eq!(core_of(&id).unwrap(), Partition::empty());
        let s = |i| AffinePermutation::simple(n, i);
        assert_eq!(core_of(&s(0)).unwrap(), p(&[1]));
        assert_eq!(core_of(&s(1).compose(&s(0))).unwrap(), p(&[2]));
        assert_eq!(core_of(&s(2).compose(&s(0))).unwrap(), p(&[1, 1]));
        assert_eq!(affine_of(&p(&[2]), n).unwrap(), s(1).compose(&s(0)));
        assert_eq!(affine_of(&Partition::empty(), n).unwrap(), id);
    }

    #[test]
    fn affine_of_531() {
        let w = affine_of(&p(&[5, 3, 1]), 3).unwrap();
        assert_eq!(w.length(), 5);
        assert_eq!(core_of(&w).unwrap(), p(&[5, 3, 1]));
    }

    #[test]
    fn act_transposition_examples() {
        assert_eq!(
            act_transposition(AffineTransposition::new(0, 1).unwrap(), &Partition::empty(), 3),
            p(&[1])
        );
        // involution on cores
        let t = AffineTransposition::new(2, 3).unwrap();
        let lam = p(&[5, 3, 1]);
        assert_eq!(act_transposition(t, &act_transposition(t, &lam, 3), 3), lam);
    }

    #[test]
    fn bruhat_examples() {
        let n = 3;
        let a2 = affine_of(&p(&[2]), n).unwrap();
        let a31 = affine_of(&p(&[3, 1]), n).unwrap();
        let a11 = affine_of(&p(&[1, 1]), n).unwrap();
        assert!(bruhat_leq(&a2, &a31).unwrap());
        assert!(!bruhat_leq(&a31, &a2).unwrap());
        assert!(!bruhat_leq(&a2, &a11).unwrap());
        assert!(!bruhat_leq(&a11, &a2).unwrap());
        let id = AffinePermutation::identity(n);
        for w in [&a2, &a31, &a11] {
            assert!(bruhat_leq(&id, w).unwrap());
        }
    }

    #[test]
    fn length_equals_rank() {
        for n in 3..=5usize {
            for (r, level) in crate::poset::cores_by_rank(n, 8).iter().enumerate() {
                for lam in level {
                    let w = affine_of(lam, n).unwrap();
                    assert_eq!(w.length(), r as u64, "{lam} n={n}");
                    assert_eq!(rank(lam, n), r as u64);
                }
            }
        }
    }

    #[test]
    fn rejects_non_coset_rep() {
        let w = AffinePermutation::new(3, vec![2, 1, 3]).unwrap();
        assert!(core_of(&w).is_err());
    }

    #[test]
    fn addable_removable_residue_exclusion() {
        // an n-core with an addable corner of residue i has no removable one
        for n in 2..=4usize {
            for m in 0..=10 {
                for lam in Partition::all_of_size(m) {
                    if !crate::cores::is_n_core(&lam, n) {
                        continue;
                    }
                    for i in 0..n {
                        let addable = lam
                            .addable_cells()
                            .iter()
                            .any(|&c| residue(c, n) == i);
                        let removable = lam
                            .removable_cells()
                            .iter()
                            .any(|&c| residue(c, n) == i);
                        assert!(!(addable && removable), "{lam} n={n} res={i}");
                    }
                }
            }
        }
    }
}
