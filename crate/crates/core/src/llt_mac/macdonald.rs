//! Haglund's combinatorial formula for transformed Macdonald polynomials and
//! the decomposition into LLT polynomials.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cores::{Cell, Partition};
use crate::error::CoreError;
use crate::symfun::{Coeff, QSymVector, QtPoly};
use crate::tableaux::Signature;

use super::{a_lambda, llt, TupleComponent, TupleFilling, TupleShape};

/// A permutation filled into the diagram of μ as its row reading word (rows
/// read north to south, west to east).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuFilling {
    mu: Partition,
    word: Vec<usize>,
}

impl MuFilling {
    pub fn new(mu: Partition, word: Vec<usize>) -> Result<Self, CoreError> {
        if word.len() != mu.size() {
            return Err(CoreError::BadTableau(format!(
                "word length {} != |mu| = {}",
                word.len(),
                mu.size()
            )));
        }
        let mut seen = vec![false; word.len()];
        for &w in &word {
            if w == 0 || w > word.len() || seen[w - 1] {
                return Err(CoreError::BadTableau("word is not a permutation".into()));
            }
            seen[w - 1] = true;
        }
        Ok(MuFilling { mu, word })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// Cells in reading order (rows north to south, west to east).
    pub fn reading_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.mu.size());
        for row in (1..=self.mu.len()).rev() {
            for col in 1..=self.mu.part(row) {
                out.push((col, row));
            }
        }
        out
    }

    pub fn entry_at(&self, cell: Cell) -> usize {
        let idx = self
            .reading_cells()
            .iter()
            .position(|&c| c == cell)
            .expect("cell in diagram");
        self.word[idx]
    }

    pub fn cell_of(&self, entry: usize) -> Cell {
        let idx = self.word.iter().position(|&w| w == entry).unwrap();
        self.reading_cells()[idx]
    }

    /// μ-descents: upper cells x with x immediately north of y and
    /// entry(x) > entry(y).
    pub fn descent_set(&self) -> DescentSet {
        let mut cells = BTreeSet::new();
        for row in 2..=self.mu.len() {
            for col in 1..=self.mu.part(row) {
                if self.entry_at((col, row)) > self.entry_at((col, row - 1)) {
                    cells.insert((col, row));
                }
            }
        }
        DescentSet {
            mu: self.mu.clone(),
            cells,
        }
    }

    /// (maj_μ, inv_μ).
    pub fn maj_inv(&self) -> (u64, u64) {
        let des = self.descent_set();
        let maj: u64 = des
            .cells
            .iter()
            .map(|&x| self.mu.leg(x) as u64 + 1)
            .sum();
        let mut attacking_inversions = 0u64;
        for (ai, &a) in self.reading_cells().iter().enumerate() {
            for &b in &self.reading_cells()[ai + 1..] {
                // reading order visits same-row-west and north-row cells first,
                // so a attacks b iff same row or a in the row north of b, east
                let attacks = (a.1 == b.1 && a.0 < b.0) || (a.1 == b.1 + 1 && a.0 > b.0);
                if attacks && self.entry_at(a) > self.entry_at(b) {
                    attacking_inversions += 1;
                }
            }
        }
        let arm_sum: u64 = des.cells.iter().map(|&x| self.mu.arm(x) as u64).sum();
        (maj, attacking_inversions - arm_sum)
    }
}

/// A μ-descent set: the set of upper cells of descent pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescentSet {
    mu: Partition,
    /// cells (col, row) with row ≥ 2
    cells: BTreeSet<Cell>,
}

impl DescentSet {
    pub fn new(mu: Partition, cells: BTreeSet<Cell>) -> Result<Self, CoreError> {
        for &(c, r) in &cells {
            if r < 2 || !mu.contains_cell((c, r)) {
                return Err(CoreError::InvalidDescentSet(format!(
                    "cell ({c},{r}) has no cell below in {mu}"
                )));
            }
        }
        Ok(DescentSet { mu, cells })
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, upper: Cell) -> bool {
        self.cells.contains(&upper)
    }

    pub fn maj(&self) -> u64 {
        self.cells.iter().map(|&x| self.mu.leg(x) as u64 + 1).sum()
    }

    /// a(D) = Σ_{x ∈ D} arm(x).
    pub fn arm_sum(&self) -> u64 {
        self.cells.iter().map(|&x| self.mu.arm(x) as u64).sum()
    }

    /// All possible μ-descent sets (subsets of the vertical domino tops).
    pub fn all(mu: &Partition) -> Vec<DescentSet> {
        let mut tops = Vec::new();
        for row in 2..=mu.len() {
            for col in 1..=mu.part(row) {
                tops.push((col, row));
            }
        }
        let mut out = Vec::new();
        for mask in 0..(1u32 << tops.len()) {
            let cells: BTreeSet<Cell> = tops
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            out.push(DescentSet {
                mu: mu.clone(),
                cells,
            });
        }
        out
    }
}

/// Signature of a permutation: σ_i = +1 iff i lies left of i+1.
pub fn sigma_word(word: &[usize]) -> Signature {
    let pos = |v: usize| word.iter().position(|&w| w == v).unwrap();
    Signature::new((1..word.len()).map(|i| pos(i) < pos(i + 1)).collect())
}

/// (maj_μ(w), inv_μ(w)) of a permutation filled into μ.
pub fn maj_inv(mu: &Partition, word: &[usize]) -> Result<(u64, u64), CoreError> {
    MuFilling::new(mu.clone(), word.to_vec()).map(|f| f.maj_inv())
}

/// Haglund's formula: H̃_μ(X; q, t) = Σ_w q^{inv_μ(w)} t^{maj_μ(w)} Q_{σ(w)}.
pub fn macdonald<C: Coeff>(mu: &Partition, bound: usize) -> Result<QSymVector<C>, CoreError> {
    let m = mu.size();
    if m > bound {
        return Err(CoreError::SizeBound { size: m, bound });
    }
    let mut out = QSymVector::zero(m);
    let mut word: Vec<usize> = (1..=m).collect();
    loop {
        let filling = MuFilling::new(mu.clone(), word.clone()).unwrap();
        let (maj, inv) = filling.maj_inv();
        out.add_term(
            sigma_word(&word),
            QtPoly::monomial(inv as u32, maj as u32, C::one()),
        );
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

pub(crate) fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// The tuple shape μ_D: component i-1 is the ribbon built from column i of
/// μ, walking down the column and stepping south at descents and east
/// otherwise; each ribbon is embedded with its southeasternmost cell at
/// content 0.
pub fn mu_descent_tuple(mu: &Partition, des: &DescentSet) -> Result<TupleShape, CoreError> {
    if des.mu != *mu {
        return Err(CoreError::InvalidDescentSet(
            "descent set belongs to a different shape".into(),
        ));
    }
    let d = mu.part(1);
    let mut components = Vec::with_capacity(d);
    for col in 1..=d {
        let height = mu.col_len(col);
        // positions of μ-cells (col, height) down to (col, 1), as offsets
        // from the top cell; track (x, y) with y growing downward
        let mut xy: Vec<(i64, i64)> = vec![(0, 0)];
        for row in (1..height).rev() {
            let &(x, y) = xy.last().unwrap();
            if des.contains((col, row + 1)) {
                xy.push((x, y + 1)); // south
            } else {
                xy.push((x + 1, y)); // east
            }
        }
        // convert to diagram cells: flip y so the last cell is southeast
        let max_y = xy.iter().map(|&(_, y)| y).max().unwrap();
        let cells: Vec<Cell> = xy
            .iter()
            .map(|&(x, y)| ((x + 1) as usize, (max_y - y + 1) as usize))
            .collect();
        let (outer, inner) = cells_to_skew(&cells)?;
        // southeasternmost cell at content 0
        let se_content = cells
            .iter()
            .map(|&c| crate::cores::content(c))
            .max()
            .unwrap();
        components.push(TupleComponent::new(outer, inner, -se_content)?);
    }
    Ok(TupleShape::new(components))
}

/// Converts a ribbon cell set (one cell per content, contiguous rows) into
/// an (outer, inner) skew pair.
fn cells_to_skew(cells: &[Cell]) -> Result<(Partition, Partition), CoreError> {
    let rows = cells.iter().map(|c| c.1).max().unwrap();
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for row in 1..=rows {
        let cols: Vec<usize> = cells
            .iter()
            .filter(|c| c.1 == row)
            .map(|c| c.0)
            .collect();
        let hi = *cols.iter().max().ok_or_else(|| {
            CoreError::BadTableau("ribbon with an empty row".into())
        })?;
        let lo = *cols.iter().min().unwrap();
        outer.push(hi);
        inner.push(lo - 1);
    }
    Ok((Partition::new(outer), Partition::new(inner)))
}

/// The standard tuple corresponding to a permutation filling of μ: entries
/// of column i of μ move onto the ribbon μ_D^{(i-1)}.
pub fn filling_bijection(w: &MuFilling) -> Result<TupleFilling, CoreError> {
    let des = w.descent_set();
    let shape = mu_descent_tuple(&w.mu, &des)?;
    tuple_from_filling(w, &shape)
}

fn tuple_from_filling(w: &MuFilling, shape: &TupleShape) -> Result<TupleFilling, CoreError> {
    let m = w.size();
    let mut cell_of: Vec<(usize, Cell)> = vec![(0, (0, 0)); m];
    for col in 1..=w.mu.part(1) {
        let comp = &shape.components()[col - 1];
        // ribbon cells from the top of the column down: contents descend...
        // the μ-cell (col, j) maps to the j-th ribbon cell counted from the
        // southeast (j = 1 is the SE-most)
        let mut ribbon_cells = crate::cores::skew_cells(&comp.outer, &comp.inner);
        ribbon_cells.sort_by_key(|&c| -crate::cores::content(c));
        for (j_minus_1, &cell) in ribbon_cells.iter().enumerate() {
            let entry = w.entry_at((col, j_minus_1 + 1));
            cell_of[entry - 1] = (col - 1, cell);
        }
    }
    TupleFilling::new(shape.clone(), cell_of)
}

/// Inverse of [`filling_bijection`] given the shape μ (checks consistency).
pub fn filling_bijection_inverse(
    t: &TupleFilling,
    mu: &Partition,
) -> Result<MuFilling, CoreError> {
    let m = t.size();
    if mu.size() != m || mu.part(1) != t.shape().d() {
        return Err(CoreError::BadTableau("tuple does not fit mu".into()));
    }
    // entry of μ-cell (col, j): the j-th-from-southeast cell of component col-1
    let mut entries: Vec<Vec<usize>> = Vec::new();
    for col in 1..=mu.part(1) {
        let comp = &t.shape().components()[col - 1];
        let mut ribbon_cells = crate::cores::skew_cells(&comp.outer, &comp.inner);
        if ribbon_cells.len() != mu.col_len(col) {
            return Err(CoreError::BadTableau("component size != column size".into()));
        }
        ribbon_cells.sort_by_key(|&c| -crate::cores::content(c));
        entries.push(
            ribbon_cells
                .iter()
                .map(|&cell| t.entry_at(col - 1, cell).unwrap())
                .collect(),
        );
    }
    let mut word = Vec::with_capacity(m);
    for row in (1..=mu.len()).rev() {
        for col in 1..=mu.part(row) {
            word.push(entries[col - 1][row - 1]);
        }
    }
    MuFilling::new(mu.clone(), word)
}

/// One term of the Macdonald-to-LLT decomposition.
#[derive(Clone, Debug)]
pub struct MacLltTerm {
    pub descents: DescentSet,
    pub t_power: u32,
    pub q_power: u32,
    pub shape: TupleShape,
}

/// H̃_μ = Σ_D t^{maj(D)} q^{a_{μ_D} - a(D)} LLT_{μ_D}; the q exponent is
/// nonnegative because a(D) counts nonoverlapping inversion triples.
pub fn mac_llt_decomposition(
    mu: &Partition,
    bound: usize,
) -> Result<Vec<MacLltTerm>, CoreError> {
    if mu.size() > bound {
        return Err(CoreError::SizeBound {
            size: mu.size(),
            bound,
        });
    }
    let mut out = Vec::new();
    for des in DescentSet::all(mu) {
        let shape = mu_descent_tuple(mu, &des)?;
        let a = a_lambda(&shape);
        let a_d = des.arm_sum();
        assert!(a >= a_d, "a_lambda >= a(D) must hold");
        out.push(MacLltTerm {
            t_power: des.maj() as u32,
            q_power: (a - a_d) as u32,
            shape,
            descents: des,
        });
    }
    Ok(out)
}

/// Evaluates the right-hand side of the decomposition as a QSym vector.
pub fn mac_llt_rhs<C: Coeff>(mu: &Partition, bound: usize) -> Result<QSymVector<C>, CoreError> {
    let mut out = QSymVector::zero(mu.size());
    for term in mac_llt_decomposition(mu, bound)? {
        let f = llt::<C>(&term.shape, bound)?;
        out = out + f.scaled(&QtPoly::monomial(term.q_power, term.t_power, C::one()));
    }
    Ok(out)
}
