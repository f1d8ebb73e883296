//! Strong tableaux, starred strong tableaux, transposition sequences, the
//! spin/cospin statistics, descent signatures, and standard Young tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::AffineTransposition;
use crate::cores::{
    content, ribbon_components, skew_cells, Abacus, Cell, Partition, Ribbon, SkewShape,
};
use crate::error::CoreError;
use crate::poset::{covers_above, upper_covers};

mod syt;
pub use syt::{enumerate_syt, hook_length_count, signature_syt, StandardYoungTableau};

/// A saturated chain μ = λ⁰ ⊂ λ¹ ⊂ ... ⊂ λᵐ in the n-core poset, drawn as a
/// filling where letter i occupies λⁱ/λ^{i-1}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct StrongTableau {
    n: usize,
    chain: Vec<Partition>,
}

impl StrongTableau {
    pub fn new(n: usize, chain: Vec<Partition>) -> Result<Self, CoreError> {
        if chain.is_empty() {
            return Err(CoreError::BadTableau("empty chain".into()));
        }
        for w in chain.windows(2) {
            if !crate::poset::is_cover(&w[0], &w[1], n) {
                return Err(CoreError::BadTableau(format!(
                    "{} does not cover {} in the {}-core poset",
                    w[1], w[0], n
                )));
            }
        }
        Ok(StrongTableau { n, chain })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of letters.
    pub fn rank(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    /// The i-ribbons (connected components of λⁱ/λ^{i-1}), northwest to
    /// southeast; letters are 1-based.
    pub fn ribbons(&self, letter: usize) -> Vec<Ribbon> {
        assert!(letter >= 1 && letter <= self.rank());
        ribbon_components(&skew_cells(&self.chain[letter], &self.chain[letter - 1]))
    }

    /// The letter occupying each cell of the skew shape.
    pub fn letter_at(&self, cell: Cell) -> Option<usize> {
        (1..=self.rank()).find(|&i| {
            self.chain[i].contains_cell(cell) && !self.chain[i - 1].contains_cell(cell)
        })
    }
}

/// A starred strong tableau: a strong tableau with one component of each
/// letter marked, encoded by the content vector of the starred heads.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StarredStrongTableau {
    strong: StrongTableau,
    c_star: Vec<i64>,
}

impl StarredStrongTableau {
    pub fn new(strong: StrongTableau, c_star: Vec<i64>) -> Result<Self, CoreError> {
        if c_star.len() != strong.rank() {
            return Err(CoreError::BadTableau(format!(
                "content vector length {} != rank {}",
                c_star.len(),
                strong.rank()
            )));
        }
        for (i, &c) in c_star.iter().enumerate() {
            let ribbons = strong.ribbons(i + 1);
            if !ribbons.iter().any(|r| r.head_content() == c) {
                return Err(CoreError::BadTableau(format!(
                    "letter {} has no ribbon with head content {}",
                    i + 1,
                    c
                )));
            }
        }
        for w in c_star.windows(2) {
            if w[0] == w[1] {
                return Err(CoreError::BadTableau(
                    "consecutive starred heads share a content".into(),
                ));
            }
        }
        Ok(StarredStrongTableau { strong, c_star })
    }

    pub fn from_chain(n: usize, chain: Vec<Partition>, c_star: Vec<i64>) -> Result<Self, CoreError> {
        Self::new(StrongTableau::new(n, chain)?, c_star)
    }

    pub fn strong(&self) -> &StrongTableau {
        &self.strong
    }

    pub fn n(&self) -> usize {
        self.strong.n
    }

    pub fn rank(&self) -> usize {
        self.strong.rank()
    }

    pub fn chain(&self) -> &[Partition] {
        self.strong.chain()
    }

    pub fn c_star(&self) -> &[i64] {
        &self.c_star
    }

    /// Content of the starred head of `letter` (1-based).
    pub fn star_content(&self, letter: usize) -> i64 {
        self.c_star[letter - 1]
    }

    /// The starred i-ribbon.
    pub fn starred_ribbon(&self, letter: usize) -> Ribbon {
        self.strong
            .ribbons(letter)
            .into_iter()
            .find(|r| r.head_content() == self.star_content(letter))
            .expect("star sits on a ribbon head")
    }

    /// Number of components of `letter` strictly northwest of the starred
    /// one (smaller head content).
    pub fn depth(&self, letter: usize) -> usize {
        let c = self.star_content(letter);
        self.strong
            .ribbons(letter)
            .iter()
            .filter(|r| r.head_content() < c)
            .count()
    }

    /// spin = Σ_i n(i)·(h(i) - 1) + d(i*).
    pub fn spin(&self) -> u64 {
        (1..=self.rank())
            .map(|i| {
                let ribbons = self.strong.ribbons(i);
                let h = ribbons[0].height();
                (ribbons.len() * (h - 1) + self.depth(i)) as u64
            })
            .sum()
    }

    /// cospin = Σ_i n(i)·(w(i) - 1) + n(i) - (d(i*) + 1).
    pub fn cospin(&self) -> u64 {
        (1..=self.rank())
            .map(|i| {
                let ribbons = self.strong.ribbons(i);
                let w = ribbons[0].width();
                (ribbons.len() * (w - 1) + ribbons.len() - self.depth(i) - 1) as u64
            })
            .sum()
    }

    /// Descent signature: σ_i = +1 iff the content of i* is less than the
    /// content of (i+1)*.
    pub fn signature(&self) -> Signature {
        Signature::new(
            self.c_star
                .windows(2)
                .map(|w| w[0] < w[1])
                .collect(),
        )
    }

    /// The transposition sequence (r_i, s_i) = (tail content, head content + 1)
    /// of the starred i-ribbons.
    pub fn transposition_sequence(&self) -> Vec<AffineTransposition> {
        (1..=self.rank())
            .map(|i| {
                let r = self.starred_ribbon(i);
                AffineTransposition::new(r.tail_content(), r.head_content() + 1).unwrap()
            })
            .collect()
    }

    /// Grid rendering in the paper's style (letters with trailing `*`), top
    /// row first; inner cells print as dots.
    pub fn render(&self) -> String {
        render_grid(
            self.strong.outer(),
            self.strong.inner(),
            |cell| {
                let letter = self.strong.letter_at(cell).unwrap();
                let starred = self.star_content(letter) == content(cell)
                    && self.starred_ribbon(letter).cells().contains(&cell);
                (letter.to_string(), starred)
            },
        )
    }
}

impl fmt::Debug for StarredStrongTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SST*[n={} chain={:?} c*={:?}]",
            self.strong.n, self.strong.chain, self.c_star
        )
    }
}

/// Shared grid renderer: `entry(cell) -> (text, starred)`.
pub(crate) fn render_grid(
    outer: &Partition,
    inner: &Partition,
    entry: impl Fn(Cell) -> (String, bool),
) -> String {
    let rendered = |cell: Cell| -> String {
        if inner.contains_cell(cell) {
            ".".to_string()
        } else {
            let (s, starred) = entry(cell);
            if starred {
                format!("{s}*")
            } else {
                s
            }
        }
    };
    let width = outer
        .cells()
        .iter()
        .map(|&c| rendered(c).len())
        .max()
        .unwrap_or(1)
        + 1;
    let mut lines = Vec::new();
    for row in (1..=outer.len()).rev() {
        let mut line = String::new();
        for col in 1..=outer.part(row) {
            let text = rendered((col, row));
            line.push_str(&format!("{text:<width$}"));
        }
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n")
}

/// ±1 vector recording the ascents (+) and descents (−) of starred-head
/// contents; `true` encodes +1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Signature(Vec<bool>);

impl Signature {
    pub fn new(signs: Vec<bool>) -> Self {
        Signature(signs)
    }

    pub fn from_str_signs(s: &str) -> Result<Self, CoreError> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                other => Err(CoreError::BadTableau(format!(
                    "signature characters must be + or -, found {other:?}"
                ))),
            })
            .collect::<Result<Vec<bool>, _>>()
            .map(Signature)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign at 1-based position i.
    pub fn sign(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn signs(&self) -> &[bool] {
        &self.0
    }

    /// Restriction to 1-based positions `lo..=hi` (clamped to the valid
    /// range).
    pub fn window(&self, lo: i64, hi: i64) -> Signature {
        let lo = lo.max(1) as usize;
        let hi = hi.min(self.0.len() as i64).max(0) as usize;
        if lo > hi {
            return Signature(Vec::new());
        }
        Signature(self.0[lo - 1..hi].to_vec())
    }

    pub fn complement(&self) -> Signature {
        Signature(self.0.iter().map(|&b| !b).collect())
    }

    /// The composition of `len+1` whose descent set is the − positions.
    pub fn to_composition(&self) -> Vec<usize> {
        let mut comp = Vec::new();
        let mut run = 1;
        for &s in &self.0 {
            if s {
                run += 1;
            } else {
                comp.push(run);
                run = 1;
            }
        }
        comp.push(run);
        comp
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", if s { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Signature::from_str_signs(&s).map_err(serde::de::Error::custom)
    }
}

/// All saturated chains from `mu` to `lam`, depth-first with covers in lex
/// order.
pub fn enumerate_strong(
    lam: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Vec<StrongTableau>, CoreError> {
    if !mu.contained_in(lam) {
        return Err(CoreError::EmptyInterval {
            lower: mu.to_string(),
            upper: lam.to_string(),
        });
    }
    let mut out = Vec::new();
    let mut chain = vec![mu.clone()];
    fn rec(
        chain: &mut Vec<Partition>,
        lam: &Partition,
        n: usize,
        out: &mut Vec<Vec<Partition>>,
    ) {
        let top = chain.last().unwrap();
        if top == lam {
            out.push(chain.clone());
            return;
        }
        for up in upper_covers(top, n).iter() {
            if up.contained_in(lam) {
                chain.push(up.clone());
                rec(chain, lam, n, out);
                chain.pop();
            }
        }
    }
    let mut chains = Vec::new();
    rec(&mut chain, lam, n, &mut chains);
    for c in chains {
        out.push(StrongTableau { n, chain: c });
    }
    Ok(out)
}

/// All starred strong tableaux of shape `lam/mu`: every (chain, starring)
/// pair exactly once. For each chain the starrings run in odometer order
/// with letter 1 as the fastest digit and head contents ascending, matching
/// the paper's display order.
pub fn enumerate_sst(
    lam: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Vec<StarredStrongTableau>, CoreError> {
    let mut out = Vec::new();
    for strong in enumerate_strong(lam, mu, n)? {
        let heads: Vec<Vec<i64>> = (1..=strong.rank())
            .map(|i| strong.ribbons(i).iter().map(|r| r.head_content()).collect())
            .collect();
        let total: usize = heads.iter().map(Vec::len).product();
        for mut k in 0..total {
            let mut c_star = Vec::with_capacity(heads.len());
            for h in &heads {
                c_star.push(h[k % h.len()]);
                k /= h.len();
            }
            out.push(
                StarredStrongTableau::new(strong.clone(), c_star)
                    .expect("enumerated starring is valid"),
            );
        }
    }
    Ok(out)
}

/// Reconstructs a starred strong tableau over `mu` from a transposition
/// sequence, validating the bead/spacer and strict-betweenness conditions.
pub fn from_transposition_sequence(
    mu: &Partition,
    seq: &[AffineTransposition],
    n: usize,
) -> Result<StarredStrongTableau, CoreError> {
    let n_i = n as i64;
    let mut chain = vec![mu.clone()];
    let mut c_star = Vec::new();
    for (step, t) in seq.iter().enumerate() {
        let bad = |reason: &str| CoreError::BadTranspositionSequence {
            step: step + 1,
            reason: reason.into(),
        };
        if t.s - t.r <= 0 || t.s - t.r >= n_i {
            return Err(bad("needs 0 < s - r < n"));
        }
        let a = Abacus::from_partition(chain.last().unwrap());
        if !a.bead(t.r) {
            return Err(bad("no bead at position r"));
        }
        if a.bead(t.s) {
            return Err(bad("no spacer at position s"));
        }
        let (lr, ls) = (a.rod_length(t.r, n), a.rod_length(t.s, n));
        let (lo, hi) = (lr.min(ls), lr.max(ls));
        if (t.r + 1..t.s).any(|c| {
            let l = a.rod_length(c, n);
            lo <= l && l <= hi
        }) {
            return Err(bad("a rod between r and s has length weakly between"));
        }
        chain.push(a.swap_rods(t.r, t.s, n).to_partition());
        c_star.push(t.s - 1);
    }
    StarredStrongTableau::from_chain(n, chain, c_star)
}

/// All covers above mu, re-exported here for enumeration tooling.
pub fn cover_edges(mu: &Partition, n: usize) -> Vec<crate::poset::CoverEdge> {
    covers_above(mu, n)
}

/// Convenience: the straight-shape skew pair for SST enumeration.
pub fn straight(outer: &Partition) -> SkewShape {
    SkewShape::straight(outer.clone())
}
