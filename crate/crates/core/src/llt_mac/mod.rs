//! LLT polynomials via d-tuples and d-inversions, Haglund's formula for
//! transformed Macdonald polynomials, their dual equivalence involutions,
//! and the Macdonald-to-LLT decomposition.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{Cell, Partition, SkewShape};
use crate::error::CoreError;
use crate::symfun::{Coeff, QSymVector, QtPoly};
use crate::tableaux::Signature;

mod involution;
pub use involution::{phi_llt, phi_mu};

/// Hard ceiling on |μ| / total tuple cells for the m!-sized sums.
pub const DEFAULT_SIZE_BOUND: usize = 9;

/// A d-tuple of embedded (skew) shapes. Component i carries an integer
/// content offset; the shifted content of a cell x in component i is
/// d·(c(x) + offset_i) + i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleShape {
    components: Vec<TupleComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleComponent {
    pub outer: Partition,
    pub inner: Partition,
    pub offset: i64,
}

impl TupleComponent {
    pub fn new(outer: Partition, inner: Partition, offset: i64) -> Result<Self, CoreError> {
        SkewShape::new(outer.clone(), inner.clone())?;
        Ok(TupleComponent {
            outer,
            inner,
            offset,
        })
    }

    fn cells(&self) -> Vec<Cell> {
        crate::cores::skew_cells(&self.outer, &self.inner)
    }
}

impl TupleShape {
    pub fn new(components: Vec<TupleComponent>) -> Self {
        assert!(!components.is_empty(), "tuple needs at least one component");
        TupleShape { components }
    }

    /// d single boxes all embedded at content 0.
    pub fn singletons(d: usize) -> Self {
        TupleShape::new(
            (0..d)
                .map(|_| TupleComponent {
                    outer: Partition::from([1]),
                    inner: Partition::empty(),
                    offset: 0,
                })
                .collect(),
        )
    }

    /// A single partition component at offset 0.
    pub fn single(lam: Partition) -> Self {
        TupleShape::new(vec![TupleComponent {
            outer: lam,
            inner: Partition::empty(),
            offset: 0,
        }])
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[TupleComponent] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.outer.size() - c.inner.size())
            .sum()
    }

    /// All cells as (component, cell) with their shifted contents.
    pub fn cells(&self) -> Vec<TupleCell> {
        let d = self.d() as i64;
        let mut out = Vec::new();
        for (idx, comp) in self.components.iter().enumerate() {
            for cell in comp.cells() {
                let content = crate::cores::content(cell) + comp.offset;
                out.push(TupleCell {
                    component: idx,
                    cell,
                    shifted: d * content + idx as i64,
                });
            }
        }
        out
    }

    /// One plus the spread of unshifted (embedded) contents.
    pub fn bandwidth(&self) -> usize {
        let contents: Vec<i64> = self
            .components
            .iter()
            .flat_map(|c| {
                c.cells()
                    .into_iter()
                    .map(move |cell| crate::cores::content(cell) + c.offset)
            })
            .collect();
        match (contents.iter().min(), contents.iter().max()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }
}

/// A cell of a tuple with its shifted content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleCell {
    pub component: usize,
    pub cell: Cell,
    pub shifted: i64,
}

/// A standard filling of a d-tuple: entries 1..m, rows and columns
/// increasing within each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleFilling {
    shape: TupleShape,
    /// cell_of[e-1] = (component, cell) of entry e
    cell_of: Vec<(usize, Cell)>,
}

impl TupleFilling {
    pub fn new(shape: TupleShape, cell_of: Vec<(usize, Cell)>) -> Result<Self, CoreError> {
        let t = TupleFilling { shape, cell_of };
        if t.cell_of.len() != t.shape.size() {
            return Err(CoreError::BadTableau("entry count != cell count".into()));
        }
        for (e, &(comp, (c, r))) in t.cell_of.iter().enumerate() {
            let shape = &t.shape.components()[comp];
            if !shape.outer.contains_cell((c, r)) || shape.inner.contains_cell((c, r)) {
                return Err(CoreError::BadTableau(format!(
                    "cell ({c},{r}) outside component {comp}"
                )));
            }
            for nb in [(c.wrapping_sub(1), r), (c, r.wrapping_sub(1))] {
                if nb.0 >= 1
                    && nb.1 >= 1
                    && shape.outer.contains_cell(nb)
                    && !shape.inner.contains_cell(nb)
                {
                    let other = t
                        .entry_at(comp, nb)
                        .ok_or_else(|| CoreError::BadTableau("missing entry".into()))?;
                    if other > e + 1 {
                        return Err(CoreError::BadTableau(format!(
                            "entries not increasing at component {comp} cell ({c},{r})"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &TupleShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cell_of.len()
    }

    pub fn entry_at(&self, comp: usize, cell: Cell) -> Option<usize> {
        self.cell_of
            .iter()
            .position(|&(c, x)| c == comp && x == cell)
            .map(|i| i + 1)
    }

    pub fn cell_of(&self, entry: usize) -> (usize, Cell) {
        self.cell_of[entry - 1]
    }

    /// Shifted content of an entry.
    pub fn shifted_content(&self, entry: usize) -> i64 {
        let (comp, cell) = self.cell_of(entry);
        let c = crate::cores::content(cell) + self.shape.components()[comp].offset;
        self.shape.d() as i64 * c + comp as i64
    }

    /// Number of d-inversions: attacking pairs (x, y) with
    /// 0 < c̃(y) - c̃(x) < d and entry(x) > entry(y).
    pub fn d_inversions(&self) -> u64 {
        let d = self.shape.d() as i64;
        let mut inv = 0;
        for a in 1..=self.size() {
            for b in 1..=self.size() {
                let diff = self.shifted_content(b) - self.shifted_content(a);
                if 0 < diff && diff < d && a > b {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Descent signature by shifted contents.
    pub fn signature(&self) -> Signature {
        Signature::new(
            (1..self.size())
                .map(|e| self.shifted_content(e) < self.shifted_content(e + 1))
                .collect(),
        )
    }
}

/// All standard fillings of a tuple shape.
pub fn enumerate_tuple_fillings(shape: &TupleShape) -> Vec<TupleFilling> {
    let mut out = Vec::new();
    let all_cells: Vec<(usize, Cell)> = shape
        .cells()
        .into_iter()
        .map(|tc| (tc.component, tc.cell))
        .collect();
    let mut current: Vec<(usize, Cell)> = Vec::new();
    fn rec(
        shape: &TupleShape,
        all: &[(usize, Cell)],
        current: &mut Vec<(usize, Cell)>,
        out: &mut Vec<TupleFilling>,
    ) {
        if current.len() == all.len() {
            out.push(
                TupleFilling::new(shape.clone(), current.clone()).expect("grown filling standard"),
            );
            return;
        }
        for &(comp, (c, r)) in all {
            if current.contains(&(comp, (c, r))) {
                continue;
            }
            let sh = &shape.components()[comp];
            let ok = |nb: Cell| {
                !sh.outer.contains_cell(nb)
                    || sh.inner.contains_cell(nb)
                    || current.contains(&(comp, nb))
            };
            if (c == 1 || ok((c - 1, r))) && (r == 1 || ok((c, r - 1))) {
                current.push((comp, (c, r)));
                rec(shape, all, current, out);
                current.pop();
            }
        }
    }
    rec(shape, &all_cells, &mut current, &mut out);
    out
}

/// Minimum number of d-inversions over standard fillings of the shape.
pub fn a_lambda(shape: &TupleShape) -> u64 {
    enumerate_tuple_fillings(shape)
        .iter()
        .map(TupleFilling::d_inversions)
        .min()
        .expect("nonempty tuple has a standard filling")
}

/// Cross-check for [`a_lambda`]: the maximum number of pairwise
/// nonoverlapping inversion triples (x, y, z) with x immediately north of z
/// and c̃(y) strictly between c̃(x) and c̃(z).
pub fn a_lambda_by_triples(shape: &TupleShape) -> u64 {
    let cells = shape.cells();
    let d = shape.d() as i64;
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for (xi, x) in cells.iter().enumerate() {
        for (zi, z) in cells.iter().enumerate() {
            // x immediately north of z (same component, same column, row + 1)
            if x.component != z.component
                || x.cell.0 != z.cell.0
                || x.cell.1 != z.cell.1 + 1
            {
                continue;
            }
            debug_assert_eq!(x.shifted, z.shifted - d);
            for (yi, y) in cells.iter().enumerate() {
                if x.shifted < y.shifted && y.shifted < z.shifted {
                    triples.push((xi, yi, zi));
                }
            }
        }
    }
    // overlap: (w,x,y) vs (x,y,z) — shared middle pair in pattern position
    type Triple = (usize, usize, usize);
    fn overlaps(a: Triple, b: Triple) -> bool {
        (a.1, a.2) == (b.0, b.1) || (b.1, b.2) == (a.0, a.1)
    }
    fn max_independent(
        triples: &[Triple],
        chosen: &mut Vec<Triple>,
        start: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        for k in start..triples.len() {
            let t = triples[k];
            if chosen.iter().all(|&c| !overlaps(c, t)) {
                chosen.push(t);
                max_independent(triples, chosen, k + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    max_independent(&triples, &mut Vec::new(), 0, &mut best);
    best as u64
}

/// The LLT polynomial of a tuple shape: Σ_T q^{inv_d(T) - a_λ} Q_{σ(T)}.
pub fn llt<C: Coeff>(shape: &TupleShape, bound: usize) -> Result<QSymVector<C>, CoreError> {
    let m = shape.size();
    if m > bound {
        return Err(CoreError::SizeBound { size: m, bound });
    }
    let a = a_lambda(shape);
    let mut out = QSymVector::zero(m);
    for t in enumerate_tuple_fillings(shape) {
        out.add_term(
            t.signature(),
            QtPoly::monomial((t.d_inversions() - a) as u32, 0, C::one()),
        );
    }
    Ok(out)
}

mod macdonald;
pub use macdonald::{
    filling_bijection, filling_bijection_inverse, mac_llt_decomposition, mac_llt_rhs, macdonald,
    maj_inv, mu_descent_tuple, sigma_word, DescentSet, MuFilling,
};

mod expansion;
pub use expansion::{expand_into_modified_kschur, KSchurExpansion};

#[cfg(test)]
mod tests;

impl fmt::Display for TupleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.inner.is_empty() {
                write!(f, "{}", c.outer)?;
            } else {
                write!(f, "{}/{}", c.outer, c.inner)?;
            }
            if c.offset != 0 {
                write!(f, "@{}", c.offset)?;
            }
        }
        write!(f, ")")
    }
}

/// Distinct shifted contents sanity: entries of consecutive values never sit
/// on equal shifted contents in a standard filling.
pub fn consecutive_contents_distinct(t: &TupleFilling) -> bool {
    (1..t.size()).all(|e| t.shifted_content(e) != t.shifted_content(e + 1))
}

/// Bandwidths of all components at most k?
pub fn all_components_bandwidth_at_most(shape: &TupleShape, k: usize) -> bool {
    shape.components().iter().all(|c| {
        let cells: BTreeSet<i64> = crate::cores::skew_cells(&c.outer, &c.inner)
            .into_iter()
            .map(crate::cores::content)
            .collect();
        cells.len() <= k
    })
}
