//! Partitions, Young diagrams and skew shapes.
//!
//! Cells are addressed as `(col, row)`, both 1-based, and the content of a
//! cell is `col - row`. Row 1 is the bottom (longest) row of the diagram.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CoreError;

/// A cell of a Young diagram: `(col, row)`, 1-based.
pub type Cell = (usize, usize);

/// Content of a cell: `col - row`.
pub fn content(cell: Cell) -> i64 {
    cell.0 as i64 - cell.1 as i64
}

/// Residue of a cell modulo `n`, normalized to `0..n`.
pub fn residue(cell: Cell, n: usize) -> usize {
    content(cell).rem_euclid(n as i64) as usize
}

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics when the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self, CoreError> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Self::new(parts))
        } else {
            Err(CoreError::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part `λ_i` with 1-based index, 0 past the last row.
    pub fn part(&self, row: usize) -> usize {
        assert!(row >= 1);
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition::new(parts)
    }

    /// Column length below-and-including: number of rows with a cell in column `col`.
    pub fn col_len(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.0 >= 1 && cell.1 >= 1 && self.part(cell.1) >= cell.0
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| other.part(i + 1) >= p)
    }

    /// All cells, row by row from the bottom.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                out.push((c, r + 1));
            }
        }
        out
    }

    /// Arm length: cells strictly east of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> usize {
        debug_assert!(self.contains_cell(cell));
        self.part(cell.1) - cell.0
    }

    /// Leg length: cells strictly north of `cell` in its column.
    pub fn leg(&self, cell: Cell) -> usize {
        debug_assert!(self.contains_cell(cell));
        self.col_len(cell.0) - cell.1
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook(&self, cell: Cell) -> usize {
        self.arm(cell) + self.leg(cell) + 1
    }

    /// Multiset of all hook lengths.
    pub fn hooks(&self) -> Vec<usize> {
        self.cells().into_iter().map(|c| self.hook(c)).collect()
    }

    /// Number of distinct contents occupied; for a partition this equals the
    /// maximum hook length.
    pub fn bandwidth(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.parts[0] + self.parts.len() - 1
        }
    }

    /// True when all parts are at most `k`.
    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.parts.first().is_none_or(|&p| p <= k)
    }

    /// Cells that can be added to keep a partition shape.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let p = self.part(row);
            if row == 1 || self.part(row - 1) > p {
                out.push((p + 1, row));
            }
        }
        out
    }

    /// Cells whose removal keeps a partition shape (the outer corners).
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.len() {
            let p = self.part(row);
            if self.part(row + 1) < p {
                out.push((p, row));
            }
        }
        out
    }

    /// Adds every addable cell of the given residue mod `n`.
    pub fn add_residue_corners(&self, res: usize, n: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(0);
        for cell in self.addable_cells() {
            if residue(cell, n) == res {
                parts[cell.1 - 1] = cell.0;
            }
        }
        Partition::new(parts)
    }

    /// Removes every removable cell of the given residue mod `n`.
    pub fn remove_residue_corners(&self, res: usize, n: usize) -> Partition {
        let mut parts = self.parts.clone();
        for cell in self.removable_cells() {
            if residue(cell, n) == res {
                parts[cell.1 - 1] = cell.0 - 1;
            }
        }
        Partition::new(parts)
    }

    /// All partitions of `m`, in descending lex order ((m) first).
    pub fn all_of_size(m: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(prefix.clone()));
                return;
            }
            for next in (1..=rem.min(max)).rev() {
                prefix.push(next);
                rec(rem - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

// Wire format: a partition is a bare JSON array of integers.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of weakly decreasing positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<usize>()? {
                    parts.push(p);
                }
                Partition::try_new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer` enforced at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, CoreError> {
        if inner.contained_in(&outer) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(CoreError::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            })
        }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.outer.len() {
            for col in self.inner.part(row) + 1..=self.outer.part(row) {
                out.push((col, row));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cells of `outer/inner` as a difference of partitions.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    let mut out = Vec::new();
    for row in 1..=outer.len() {
        for col in inner.part(row) + 1..=outer.part(row) {
            out.push((col, row));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hooks_of_431() {
        let p = Partition::from([4, 3, 1]);
        let mut h = p.hooks();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 1, 2, 3, 4, 4, 6]);
        assert_eq!(p.bandwidth(), 6);
    }

    #[test]
    fn conjugate_roundtrip() {
        let p = Partition::from([5, 3, 1]);
        assert_eq!(p.conjugate(), Partition::from([3, 2, 2, 1, 1]));
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn addable_removable() {
        let p = Partition::from([3, 1]);
        assert_eq!(p.addable_cells(), vec![(4, 1), (2, 2), (1, 3)]);
        assert_eq!(p.removable_cells(), vec![(3, 1), (1, 2)]);
        assert_eq!(Partition::empty().addable_cells(), vec![(1, 1)]);
    }

    #[test]
    fn partitions_of_4() {
        let all = Partition::all_of_size(4);
        let expect: Vec<Partition> = vec![
            [4].into(),
            [3, 1].into(),
            [2, 2].into(),
            [2, 1, 1].into(),
            [1, 1, 1, 1].into(),
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn json_is_bare_array() {
        let p = Partition::from([4, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,2]");
        let q: Partition = serde_json::from_str("[4,2]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Partition>("[2,4]").is_err());
    }
}
