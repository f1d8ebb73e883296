//! Ribbons and connected components of skew cell sets.

use std::collections::BTreeSet;

use super::partition::{content, Cell};

/// A connected skew diagram with no 2x2 block. Head = southeasternmost cell
/// (largest content), tail = northwesternmost (smallest content); a ribbon
/// has exactly one cell per content in `[tail_content, head_content]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ribbon {
    cells: Vec<Cell>,
}

impl Ribbon {
    /// Wraps a cell set already known to be connected; validates the ribbon
    /// conditions.
    pub fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort_by_key(|&c| content(c));
        let r = Ribbon { cells };
        debug_assert!(r.is_valid(), "not a ribbon: {:?}", r.cells);
        r
    }

    fn is_valid(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        // one cell per consecutive content, adjacent cells edge-connected
        self.cells.windows(2).all(|w| {
            content(w[1]) == content(w[0]) + 1
                && ((w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1)
                    || (w[1].0 == w[0].0 && w[1].1 + 1 == w[0].1))
        })
    }

    /// Cells ordered by increasing content (tail first).
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn head(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    pub fn tail(&self) -> Cell {
        self.cells[0]
    }

    pub fn head_content(&self) -> i64 {
        content(self.head())
    }

    pub fn tail_content(&self) -> i64 {
        content(self.tail())
    }

    /// Number of distinct rows.
    pub fn height(&self) -> usize {
        self.cells.iter().map(|c| c.1).collect::<BTreeSet<_>>().len()
    }

    /// Number of distinct columns.
    pub fn width(&self) -> usize {
        self.cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len()
    }

    pub fn contents(&self) -> std::ops::RangeInclusive<i64> {
        self.tail_content()..=self.head_content()
    }

    /// Shape up to translation: the sequence of north/east steps from head to
    /// tail. Equal shapes are cell-set translates of each other.
    pub fn shape_code(&self) -> Vec<bool> {
        self.cells
            .windows(2)
            .map(|w| w[1].1 < w[0].1) // true when the step toward the head went south (next cell is one row lower)
            .collect()
    }
}

/// Splits a set of cells into edge-connected components, each returned sorted
/// by content; components ordered by their minimal content.
pub fn connected_components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &set {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((c, r)) = stack.pop() {
            let mut nbrs = vec![(c + 1, r), (c, r + 1)];
            if c > 1 {
                nbrs.push((c - 1, r));
            }
            if r > 1 {
                nbrs.push((c, r - 1));
            }
            for nb in nbrs {
                if set.contains(&nb) && seen.insert(nb) {
                    comp.push(nb);
                    stack.push(nb);
                }
            }
        }
        comp.sort_by_key(|&c| content(c));
        comps.push(comp);
    }
    comps.sort_by_key(|comp| content(comp[0]));
    comps
}

/// Components of a skew cell set as ribbons, ordered northwest to southeast
/// (increasing head content). Panics if a component is not a ribbon.
pub fn ribbon_components(cells: &[Cell]) -> Vec<Ribbon> {
    connected_components(cells)
        .into_iter()
        .map(Ribbon::new)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ribbon_basics() {
        // hook-shaped ribbon: cells of (3,1)/(1) minus nothing... use {(1,2),(1,1),(2,1),(3,1)}
        let r = Ribbon::new(vec![(2, 1), (1, 1), (1, 2), (3, 1)]);
        assert_eq!(r.head(), (3, 1));
        assert_eq!(r.tail(), (1, 2));
        assert_eq!(r.head_content(), 2);
        assert_eq!(r.tail_content(), -1);
        assert_eq!(r.height(), 2);
        assert_eq!(r.width(), 3);
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn components_split() {
        let comps = connected_components(&[(5, 1), (1, 2), (1, 3), (2, 2)]);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![(1, 3), (1, 2), (2, 2)]);
        assert_eq!(comps[1], vec![(5, 1)]);
    }

    #[test]
    fn shape_code_translation_invariant() {
        let a = Ribbon::new(vec![(2, 2), (2, 1), (3, 1)]);
        let b = Ribbon::new(vec![(5, 3), (5, 2), (6, 2)]);
        assert_eq!(a.shape_code(), b.shape_code());
        let c = Ribbon::new(vec![(5, 3), (6, 3), (6, 2)]);
        assert_ne!(a.shape_code(), c.shape_code());
    }
}
