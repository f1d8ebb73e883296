//! The bead/spacer (abacus) encoding of partitions.
//!
//! A partition is a doubly infinite binary string: walking the boundary of
//! the diagram from northwest to southeast writes a bead (1) for each
//! vertical step and a spacer (0) for each horizontal step. Positions are
//! indexed by content (the diagonal immediately southeast of the step), so
//! the bead set of `λ` is `{λ_i - i + 1 : i ≥ 1}`. Every position left of
//! the window is a bead, every position right of it a spacer.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;

/// Canonical abacus: `window[t]` is the symbol at content `offset + t`
/// (`true` = bead). Canonical form trims leading beads and trailing spacers,
/// and the indexing is balanced: #beads at positive content = #spacers at
/// nonpositive content.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    offset: i64,
    window: Vec<bool>,
}

impl Abacus {
    /// Builds the abacus from an arbitrary window, re-indexing canonically
    /// (Remark-style: there is a unique shift making the string the abacus of
    /// a partition).
    pub fn from_window(offset: i64, window: Vec<bool>) -> Self {
        let mut a = Abacus { offset, window };
        a.canonicalize();
        a
    }

    pub fn from_partition(p: &Partition) -> Self {
        if p.is_empty() {
            return Abacus {
                offset: 1,
                window: Vec::new(),
            };
        }
        let rows = p.len() as i64;
        let top = p.part(1) as i64; // largest bead content
        let lo = 1 - rows; // below lo everything is a bead
        let mut window = vec![false; (top - lo + 1) as usize];
        for (i, &part) in p.parts().iter().enumerate() {
            let beta = part as i64 - i as i64; // λ_i - i + 1 with i 1-based
            window[(beta - lo) as usize] = true;
        }
        let mut a = Abacus { offset: lo, window };
        a.canonicalize();
        a
    }

    pub fn to_partition(&self) -> Partition {
        let mut beads: Vec<i64> = self
            .window
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b)
            .map(|(t, _)| self.offset + t as i64)
            .collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::new();
        for (i, beta) in beads.iter().enumerate() {
            // λ_i = β_i + i - 1 (i 1-based); implicit beads below the window give 0s
            let part = beta + i as i64;
            if part <= 0 {
                break;
            }
            parts.push(part as usize);
        }
        // beads below the window all give λ_i = 0 because the string is balanced
        Partition::new(parts)
    }

    /// Symbol at an arbitrary content.
    pub fn bead(&self, content: i64) -> bool {
        if content < self.offset {
            true
        } else if content >= self.offset + self.window.len() as i64 {
            false
        } else {
            self.window[(content - self.offset) as usize]
        }
    }

    /// First content that could be a spacer (everything below is a bead).
    pub fn lo(&self) -> i64 {
        self.offset
    }

    /// Last content that could be a bead (everything above is a spacer).
    pub fn hi(&self) -> i64 {
        self.offset + self.window.len() as i64 - 1
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    fn canonicalize(&mut self) {
        // trim
        while self.window.first() == Some(&true) {
            self.window.remove(0);
            self.offset += 1;
        }
        while self.window.last() == Some(&false) {
            self.window.pop();
        }
        // balance: shift so that #beads>0 == #spacers<=0
        let mut f: i64 = 0;
        for (t, &b) in self.window.iter().enumerate() {
            let c = self.offset + t as i64;
            if b && c > 0 {
                f += 1;
            }
            if !b && c <= 0 {
                f -= 1;
            }
        }
        // beads below the window at positive content / spacers above at nonpositive
        if self.offset > 1 {
            f += self.offset - 1;
        }
        let end = self.offset + self.window.len() as i64; // first all-spacer content
        if end <= 0 {
            f -= 1 - end;
        }
        self.offset -= f;
    }

    /// Length of the rod through `content`: beads at `content + mn, m ≥ 0`
    /// minus spacers at `content - mn, m ≥ 1`. Satisfies the scrolling rule
    /// `len(c - n) = len(c) + 1` and, for contents `1..=n`, the definition
    /// "beads at positive content minus spacers at nonpositive content".
    pub fn rod_length(&self, content: i64, n: usize) -> i64 {
        let n = n as i64;
        let mut len = 0i64;
        let mut c = content;
        while c <= self.hi() {
            if self.bead(c) {
                len += 1;
            }
            c += n;
        }
        let mut c = content - n;
        while c >= self.lo() {
            if !self.bead(c) {
                len -= 1;
            }
            c -= n;
        }
        len
    }

    /// Rod lengths for contents `1..=n`.
    pub fn rod_profile(&self, n: usize) -> RodProfile {
        RodProfile {
            n,
            lengths: (1..=n as i64).map(|c| self.rod_length(c, n)).collect(),
        }
    }

    /// An n-core has every rod beads-then-spacers.
    pub fn is_n_core(&self, n: usize) -> bool {
        // a violation is a spacer with a bead n above it inside the window
        (self.lo()..=self.hi()).all(|c| self.bead(c) || !self.bead(c + n as i64))
    }

    /// Swaps the full rods through contents `r` and `s` (all n-translates),
    /// i.e. applies the affine transposition `t_{r,s}` to the binary string.
    pub fn swap_rods(&self, r: i64, s: i64, n: usize) -> Abacus {
        let n_i = n as i64;
        let (r, s) = (r.min(s), r.max(s));
        let d = s - r;
        assert!(d.rem_euclid(n_i) != 0, "t_{{r,s}} needs r ≢ s mod n");
        // A translate pair (r+mn, s+mn) only matters when the lower position
        // is ≤ hi and the upper is ≥ lo; outside that zone both symbols agree.
        let lo = self.lo() - d;
        let hi = self.hi() + d;
        let mut window: Vec<bool> = (lo..=hi).map(|c| self.bead(c)).collect();
        let mut m = (lo - r).div_euclid(n_i);
        while r + m * n_i <= self.hi() {
            let (cr, cs) = (r + m * n_i, s + m * n_i);
            if cr >= lo && cs <= hi {
                window.swap((cr - lo) as usize, (cs - lo) as usize);
            }
            m += 1;
        }
        Abacus::from_window(lo, window)
    }

    /// Binary string of the window, e.g. "110100".
    pub fn window_string(&self) -> String {
        self.window
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // beads/spacers with the main-diagonal divider between contents 0 and 1
        write!(f, "...1")?;
        for c in self.lo()..=self.hi().max(0) {
            if c == 1 {
                write!(f, "|")?;
            }
            write!(f, "{}", if self.bead(c) { '1' } else { '0' })?;
        }
        if self.hi() < 1 {
            write!(f, "|")?;
        }
        write!(f, "0...")
    }
}

impl fmt::Debug for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Abacus[{}@{}]", self.window_string(), self.offset)
    }
}

// Wire format: {"offset": int, "window": "110100"}.
#[derive(Serialize, Deserialize)]
struct AbacusWire {
    offset: i64,
    window: String,
}

impl Serialize for Abacus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AbacusWire {
            offset: self.offset,
            window: self.window_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Abacus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = AbacusWire::deserialize(d)?;
        let window: Result<Vec<bool>, _> = wire
            .window
            .chars()
            .map(|ch| match ch {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(serde::de::Error::custom(format!(
                    "window must be a 0/1 string, found {other:?}"
                ))),
            })
            .collect();
        Ok(Abacus::from_window(wire.offset, window?))
    }
}

/// Rod lengths at contents `1..=n`; other contents follow the scrolling rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RodProfile {
    n: usize,
    lengths: Vec<i64>,
}

impl RodProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of the rod with the given content (any integer).
    pub fn length(&self, content: i64) -> i64 {
        let n = self.n as i64;
        let scroll = (content - 1).div_euclid(n); // content - scroll*n lies in 1..=n
        let base = content - scroll * n;
        self.lengths[(base - 1) as usize] - scroll
    }

    /// Lengths at contents `1..=n`.
    pub fn base_lengths(&self) -> &[i64] {
        &self.lengths
    }

    /// Shifted so the minimum over contents `1..=n` is zero.
    pub fn normalized(&self) -> Vec<i64> {
        let min = self.lengths.iter().copied().min().unwrap_or(0);
        self.lengths.iter().map(|l| l - min).collect()
    }
}
