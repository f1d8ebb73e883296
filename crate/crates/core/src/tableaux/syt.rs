//! Standard Young tableaux as saturated chains in Young's lattice.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{content, Cell, Partition, SkewShape};
use crate::error::CoreError;

use super::{render_grid, Signature};

/// A standard filling of a (skew) shape: `cell_of[i-1]` is the cell holding
/// the entry i.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StandardYoungTableau {
    shape: SkewShape,
    cell_of: Vec<Cell>,
}

impl StandardYoungTableau {
    pub fn new(shape: SkewShape, cell_of: Vec<Cell>) -> Result<Self, CoreError> {
        if cell_of.len() != shape.size() {
            return Err(CoreError::BadTableau("entry count != cell count".into()));
        }
        let t = StandardYoungTableau { shape, cell_of };
        // rows and columns must increase: each entry's west/south neighbor in
        // the shape holds a smaller entry
        for (idx, &(c, r)) in t.cell_of.iter().enumerate() {
            if !t.shape.contains_cell((c, r)) {
                return Err(CoreError::BadTableau(format!("cell ({c},{r}) not in shape")));
            }
            for nb in [(c.wrapping_sub(1), r), (c, r.wrapping_sub(1))] {
                if nb.0 >= 1 && nb.1 >= 1 && t.shape.contains_cell(nb) {
                    let other = t.entry_at(nb).unwrap();
                    if other > idx + 1 {
                        return Err(CoreError::BadTableau(format!(
                            "entries not increasing at ({c},{r})"
                        )));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cell_of(&self, entry: usize) -> Cell {
        self.cell_of[entry - 1]
    }

    pub fn entry_at(&self, cell: Cell) -> Option<usize> {
        self.cell_of.iter().position(|&c| c == cell).map(|i| i + 1)
    }

    pub fn content_of(&self, entry: usize) -> i64 {
        content(self.cell_of(entry))
    }

    /// Swaps the cells of two entries (used by dual equivalence; the caller
    /// guarantees the result is standard, which `new` re-checks).
    pub fn swap_entries(&self, a: usize, b: usize) -> Result<Self, CoreError> {
        let mut cell_of = self.cell_of.clone();
        cell_of.swap(a - 1, b - 1);
        StandardYoungTableau::new(self.shape.clone(), cell_of)
    }

    /// Content reading word: entries in increasing content order, reading
    /// each diagonal southwest to northeast.
    pub fn content_reading_word(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.size()).collect();
        order.sort_by_key(|&e| {
            let cell = self.cell_of(e);
            (content(cell), cell.1)
        });
        order
    }

    pub fn render(&self) -> String {
        render_grid(self.shape.outer(), self.shape.inner(), |cell| {
            (self.entry_at(cell).unwrap().to_string(), false)
        })
    }
}

impl fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT[{} ", self.shape)?;
        for (i, c) in self.cell_of.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}@({},{})", i + 1, c.0, c.1)?;
        }
        write!(f, "]")
    }
}

/// Descent signature of a standard tableau: σ_i = +1 iff the content of i is
/// less than the content of i+1.
pub fn signature_syt(t: &StandardYoungTableau) -> Signature {
    Signature::new(
        (1..t.size())
            .map(|i| t.content_of(i) < t.content_of(i + 1))
            .collect(),
    )
}

/// All standard Young tableaux of a (skew) shape, ordered by the chain
/// enumeration (cells added in lex order of the growing inner shape).
pub fn enumerate_syt(shape: &SkewShape) -> Vec<StandardYoungTableau> {
    let m = shape.size();
    let mut out = Vec::new();
    let mut cells: Vec<Cell> = Vec::with_capacity(m);
    fn rec(
        shape: &SkewShape,
        current: &mut Vec<Cell>,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if current.len() == shape.size() {
            out.push(
                StandardYoungTableau::new(shape.clone(), current.clone())
                    .expect("grown filling is standard"),
            );
            return;
        }
        // addable next cells: in shape, not used, west & south neighbors done
        let mut candidates: Vec<Cell> = shape
            .cells()
            .into_iter()
            .filter(|&(c, r)| {
                !current.contains(&(c, r))
                    && (c == 1
                        || !shape.contains_cell((c - 1, r))
                        || current.contains(&(c - 1, r)))
                    && (r == 1
                        || !shape.contains_cell((c, r - 1))
                        || current.contains(&(c, r - 1)))
            })
            .collect();
        // higher-row additions give lexicographically smaller shapes; this
        // matches the cover order used by the strong tableau enumeration
        candidates.sort_by_key(|&(c, r)| (std::cmp::Reverse(r), c));
        for cell in candidates {
            current.push(cell);
            rec(shape, current, out);
            current.pop();
        }
    }
    rec(shape, &mut cells, &mut out);
    out
}

/// #SYT(λ) by the hook length formula (test oracle for the enumeration).
pub fn hook_length_count(lam: &Partition) -> u128 {
    let m = lam.size() as u128;
    let mut numerator: u128 = 1;
    for k in 1..=m {
        numerator *= k;
    }
    let denom: u128 = lam.hooks().iter().map(|&h| h as u128).product();
    numerator / denom
}
