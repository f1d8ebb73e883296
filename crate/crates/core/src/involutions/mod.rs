//! The witness rule and the affine dual equivalence involutions φ_i
//! (basic swap, snake swap, double swap, star swap), elementary dual
//! equivalence on standard Young tableaux, flattening and cloning of starred
//! strong tableaux, and the θ map to permutation fillings.

use std::collections::BTreeSet;
use std::fmt;

use crate::cores::{connected_components, content, Cell, Partition, Ribbon};
use crate::error::CoreError;
use crate::poset::interval_swap;
use crate::tableaux::{StandardYoungTableau, StarredStrongTableau};

mod surgery;
pub use surgery::{clone_component_checked, clone_sst, flatten_fully, flatten_sst, squash_sst, untouched_rods, CloneSstOutput};

/// Which witness rule fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessRule {
    /// c_{i-1} ≠ c_{i+1}: the median content decides.
    Median,
    /// c_{i-1} = c_{i+1}, equal ribbon lengths: i+1 is the witness.
    EqualLengths2a,
    /// c_{i-1} = c_{i+1} > c_i: the longer of the (i∓1)-ribbons wins.
    Longer2b,
    /// c_{i-1} = c_{i+1} < c_i: the shorter wins.
    Shorter2c,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessChoice {
    pub index: usize,
    pub rule: WitnessRule,
}

/// The i-witness of a starred strong tableau, 1 < i < m.
pub fn witness(sst: &StarredStrongTableau, i: usize) -> WitnessChoice {
    assert!(i > 1 && i < sst.rank(), "witness needs 1 < i < m");
    let c_prev = sst.star_content(i - 1);
    let c_mid = sst.star_content(i);
    let c_next = sst.star_content(i + 1);
    if c_prev != c_next {
        let mut items = [(c_prev, i - 1), (c_mid, i), (c_next, i + 1)];
        items.sort_unstable();
        return WitnessChoice {
            index: items[1].1,
            rule: WitnessRule::Median,
        };
    }
    let len_prev = sst.starred_ribbon(i - 1).len();
    let len_next = sst.starred_ribbon(i + 1).len();
    if len_prev == len_next {
        WitnessChoice {
            index: i + 1,
            rule: WitnessRule::EqualLengths2a,
        }
    } else if c_prev > c_mid {
        WitnessChoice {
            index: if len_prev > len_next { i - 1 } else { i + 1 },
            rule: WitnessRule::Longer2b,
        }
    } else {
        WitnessChoice {
            index: if len_prev < len_next { i - 1 } else { i + 1 },
            rule: WitnessRule::Shorter2c,
        }
    }
}

/// Which swap φ_i dispatched to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiCase {
    Fixed,
    Bswap,
    Snake,
    BswapBswap,
    Double,
    Star,
}

/// One φ_i application, with the data the debug trace records.
#[derive(Clone, Debug)]
pub struct PhiOutcome {
    pub result: StarredStrongTableau,
    pub case: PhiCase,
    pub witness: WitnessChoice,
    pub i: usize,
    pub c_before: Vec<i64>,
    pub c_after: Vec<i64>,
}

impl fmt::Display for PhiOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi_{} witness={} ({:?}) case={:?} c*: {:?} -> {:?}",
            self.i, self.witness.index, self.witness.rule, self.case, self.c_before, self.c_after
        )
    }
}

/// Per-letter context for the swap case analysis.
struct LetterCtx {
    ribbons: Vec<Ribbon>,
    star: Ribbon,
    /// tail content of the starred ribbon
    b: i64,
    /// head content of the starred ribbon (= c_i)
    c: i64,
    /// c + 1
    d: i64,
    /// ribbon length
    r: i64,
}

fn letter_ctx(sst: &StarredStrongTableau, letter: usize) -> LetterCtx {
    let ribbons = sst.strong().ribbons(letter);
    let star = sst.starred_ribbon(letter);
    let b = star.tail_content();
    let c = star.head_content();
    LetterCtx {
        ribbons,
        star,
        b,
        c,
        d: c + 1,
        r: c - b + 1,
    }
}

fn congruent(a: i64, b: i64, n: usize) -> bool {
    (a - b).rem_euclid(n as i64) == 0
}

/// Connected skew shape A nests connected skew shape B: the contents of B
/// are covered by A but miss both extreme contents of A.
fn nests_shape(a: &[Cell], b: &[Cell]) -> bool {
    let (min_a, max_a) = content_range(a);
    let (min_b, max_b) = content_range(b);
    min_a < min_b && max_b < max_a
}

fn content_range(cells: &[Cell]) -> (i64, i64) {
    let cs: Vec<i64> = cells.iter().map(|&c| content(c)).collect();
    (*cs.iter().min().unwrap(), *cs.iter().max().unwrap())
}

/// S_q nests S_{p*}: some q-ribbon covers the starred p-ribbon's contents,
/// and no head or tail anywhere in S_q shares a content with its head/tail.
fn union_nests_star(ribbons_q: &[Ribbon], star_p: &Ribbon) -> bool {
    let (b_p, c_p) = (star_p.tail_content(), star_p.head_content());
    let covered = ribbons_q
        .iter()
        .any(|r| r.tail_content() <= b_p && c_p <= r.head_content());
    let clash = ribbons_q.iter().any(|r| {
        [r.tail_content(), r.head_content()]
            .iter()
            .any(|&e| e == b_p || e == c_p)
    });
    covered && !clash
}

/// Cell set normalized by its minimal column/row (shape up to translation).
fn normalized(cells: &[Cell]) -> Vec<(usize, usize)> {
    let min_col = cells.iter().map(|c| c.0).min().unwrap();
    let min_row = cells.iter().map(|c| c.1).min().unwrap();
    let mut out: Vec<(usize, usize)> = cells
        .iter()
        .map(|&(c, r)| (c - min_col, r - min_row))
        .collect();
    out.sort_unstable();
    out
}

/// The affine dual equivalence involution φ_i, with trace data.
pub fn phi_traced(sst: &StarredStrongTableau, i: usize) -> PhiOutcome {
    try_phi(sst, i).unwrap_or_else(|e| panic!("phi_{i} failed on {sst:?}: {e}"))
}

/// The affine dual equivalence involution φ_i for 1 < i < m.
pub fn phi(sst: &StarredStrongTableau, i: usize) -> StarredStrongTableau {
    phi_traced(sst, i).result
}

fn try_phi(sst: &StarredStrongTableau, i: usize) -> Result<PhiOutcome, CoreError> {
    let n = sst.n();
    let w = witness(sst, i);
    let c_before = sst.c_star().to_vec();
    let done = |result: StarredStrongTableau, case: PhiCase| {
        let c_after = result.c_star().to_vec();
        Ok(PhiOutcome {
            result,
            case,
            witness: w,
            i,
            c_before: c_before.clone(),
            c_after,
        })
    };
    if w.index == i {
        return done(sst.clone(), PhiCase::Fixed);
    }
    let h = w.index;
    let j = if h == i - 1 { i + 1 } else { i - 1 };

    let ci = letter_ctx(sst, i);
    let cj = letter_ctx(sst, j);
    let ch = letter_ctx(sst, h);

    // blocks of S_i ∪ S_j containing i* and j*
    let union: Vec<Cell> = ci
        .ribbons
        .iter()
        .chain(cj.ribbons.iter())
        .flat_map(|r| r.cells().iter().copied())
        .collect();
    let comps = connected_components(&union);
    let block_of = |star: &Ribbon| -> &Vec<Cell> {
        comps
            .iter()
            .find(|comp| comp.contains(&star.head()))
            .expect("star lies in its union block")
    };
    let block_i = block_of(&ci.star);
    let block_j = block_of(&cj.star);
    let same_block = block_i[0] == block_j[0];

    let abutting = {
        let vals = [ci.b, cj.b, ci.d, cj.d];
        let mut residues = BTreeSet::new();
        for v in vals {
            residues.insert(v.rem_euclid(n as i64));
        }
        residues.len() < 4
    };

    // Eq. phi: the first case that applies
    if !abutting
        || (!same_block
            && normalized(block_i) != normalized(block_j)
            && !nests_shape(block_i, ch.star.cells())
            && !nests_shape(block_j, ch.star.cells()))
    {
        let result = bswap(sst, i, j)?;
        return done(result, PhiCase::Bswap);
    }
    if congruent(ch.b, cj.b, n) && congruent(ch.c, cj.c, n) {
        let result = snake(sst, i, j, h)?;
        return done(result, PhiCase::Snake);
    }
    if union_nests_star(&ci.ribbons, &ch.star) || union_nests_star(&cj.ribbons, &ch.star) {
        let mid = bswap(sst, i, h)?;
        let result = bswap(&mid, i, j)?;
        return done(result, PhiCase::BswapBswap);
    }
    if nests_shape(block_i, ch.star.cells()) || nests_shape(block_j, ch.star.cells()) {
        let result = double(sst, i, j, h)?;
        return done(result, PhiCase::Double);
    }
    if !same_block && normalized(block_i) == normalized(block_j) {
        let result = star_swap(sst, i, j, block_i, block_j)?;
        return done(result, PhiCase::Star);
    }
    Err(CoreError::UncoveredPhiCase {
        i,
        detail: format!("witness {h}, abutting={abutting}, blocks equal={same_block}"),
    })
}

/// Interval swap on the underlying chain plus the flop on the content vector.
fn bswap(
    sst: &StarredStrongTableau,
    p: usize,
    q: usize,
) -> Result<StarredStrongTableau, CoreError> {
    debug_assert!(p.abs_diff(q) == 1);
    let chain = interval_swap(sst.chain(), p.min(q), sst.n())?;
    let c_star = flop(sst, p, q);
    StarredStrongTableau::from_chain(sst.n(), chain, c_star)
}

/// Eq. e:flop, evaluated on the input tableau with p < q normalized.
fn flop(sst: &StarredStrongTableau, a: usize, b: usize) -> Vec<i64> {
    let n = sst.n();
    let (p, q) = (a.min(b), a.max(b));
    let cp = letter_ctx(sst, p);
    let cq = letter_ctx(sst, q);
    // blocks of S_p ∪ S_q containing p* and q*
    let union: Vec<Cell> = cp
        .ribbons
        .iter()
        .chain(cq.ribbons.iter())
        .flat_map(|r| r.cells().iter().copied())
        .collect();
    let comps = connected_components(&union);
    let size_of = |star: &Ribbon| -> usize {
        comps
            .iter()
            .find(|comp| comp.contains(&star.head()))
            .map(|comp| comp.len())
            .unwrap()
    };
    let bp = size_of(&cp.star);
    let bq = size_of(&cq.star);

    let mut c = sst.c_star().to_vec();
    c.swap(p - 1, q - 1);
    if congruent(cp.d, cq.d, n) && bp < bq {
        c[p - 1] -= cp.r;
    } else if congruent(cp.d, cq.d, n) && bp > bq {
        c[q - 1] -= cq.r;
    } else if congruent(cq.b, cp.d, n) && bp > bq {
        c[q - 1] += cq.r;
    } else if congruent(cp.b, cq.d, n) && bp < bq {
        c[p - 1] += cp.r;
    }
    c
}

/// Snake swap: stars slide along the chain of abutting ribbons; the strong
/// tableau is unchanged.
fn snake(
    sst: &StarredStrongTableau,
    i: usize,
    j: usize,
    h: usize,
) -> Result<StarredStrongTableau, CoreError> {
    let ci = letter_ctx(sst, i);
    let cj = letter_ctx(sst, j);
    let ch = letter_ctx(sst, h);
    let mut c = sst.c_star().to_vec();
    // t_{i,j} t_{i,h}: swap positions (i,h) first, then (i,j)
    c.swap(i - 1, h - 1);
    c.swap(i - 1, j - 1);
    if (cj.c < ci.c) ^ (i < j) {
        c[i - 1] -= cj.r;
        c[h - 1] += ch.r;
    } else {
        c[i - 1] += ci.r;
        c[h - 1] -= ci.r;
    }
    StarredStrongTableau::from_chain(sst.n(), sst.chain().to_vec(), c)
}

/// Double swap: two interval swaps plus the near-permutation of contents.
fn double(
    sst: &StarredStrongTableau,
    i: usize,
    j: usize,
    h: usize,
) -> Result<StarredStrongTableau, CoreError> {
    let n = sst.n();
    let cj = letter_ctx(sst, j);
    let ch = letter_ctx(sst, h);
    let chain = interval_swap(sst.chain(), i.min(h), n)?;
    let chain = interval_swap(&chain, i.min(j), n)?;
    let mut c = sst.c_star().to_vec();
    c.swap(i - 1, h - 1);
    c.swap(i - 1, j - 1);
    if congruent(ch.b, cj.b, n) {
        c[h - 1] += ch.r;
    } else if congruent(ch.c, cj.c, n) {
        c[i - 1] -= ch.r;
    } else {
        return Err(CoreError::UncoveredPhiCase {
            i,
            detail: "double swap without shared head or tail".into(),
        });
    }
    StarredStrongTableau::from_chain(n, chain, c)
}

/// Star swap: both stars hop to the other block; the strong tableau is
/// unchanged.
fn star_swap(
    sst: &StarredStrongTableau,
    i: usize,
    j: usize,
    block_i: &[Cell],
    block_j: &[Cell],
) -> Result<StarredStrongTableau, CoreError> {
    let f = content_range(block_j).1 - content_range(block_i).1;
    let mut c = sst.c_star().to_vec();
    c[i - 1] += f;
    c[j - 1] -= f;
    StarredStrongTableau::from_chain(sst.n(), sst.chain().to_vec(), c)
}

/// Haiman's elementary dual equivalence on standard Young tableaux: when i
/// is not the content-median of {i-1, i, i+1}, swap i with the non-witness
/// neighbor.
pub fn elementary_de(t: &StandardYoungTableau, i: usize) -> StandardYoungTableau {
    assert!(i > 1 && i < t.size());
    let contents = [
        (t.content_of(i - 1), i - 1),
        (t.content_of(i), i),
        (t.content_of(i + 1), i + 1),
    ];
    let mut sorted = contents;
    sorted.sort_unstable();
    let witness = sorted[1].1;
    if witness == i {
        return t.clone();
    }
    let other = if witness == i - 1 { i + 1 } else { i - 1 };
    t.swap_entries(i, other)
        .expect("dual equivalence swap keeps the filling standard")
}

/// θ: starred strong tableaux on the 2-core staircase (m, m-1, ..., 1) to
/// permutations (read as fillings of m single boxes). Letter i is inserted
/// at position depth(i*) from the left.
pub fn theta(sst: &StarredStrongTableau) -> Result<Vec<usize>, CoreError> {
    let m = sst.rank();
    let staircase = Partition::new((1..=m).rev().collect());
    if sst.n() != 2 || !sst.strong().inner().is_empty() || *sst.strong().outer() != staircase {
        return Err(CoreError::WrongShape(format!(
            "n={} shape {}",
            sst.n(),
            sst.strong().outer()
        )));
    }
    let mut word: Vec<usize> = Vec::with_capacity(m);
    for i in 1..=m {
        word.insert(sst.depth(i), i);
    }
    Ok(word)
}

/// Inverse of θ: rebuilds the starred staircase tableau from a permutation.
pub fn theta_inverse(word: &[usize]) -> Result<StarredStrongTableau, CoreError> {
    let m = word.len();
    let chain: Vec<Partition> = (0..=m)
        .map(|r| Partition::new((1..=r).rev().collect()))
        .collect();
    // depth of i = position of i in the prefix word restricted to 1..=i
    let mut c_star = Vec::with_capacity(m);
    for i in 1..=m {
        let depth = word
            .iter()
            .filter(|&&x| x <= i)
            .position(|&x| x == i)
            .expect("word is a permutation");
        // letter i occupies i single cells at contents m - ... compute heads
        let inner = &chain[i - 1];
        let outer = &chain[i];
        let ribbons = crate::cores::ribbon_components(&crate::cores::skew_cells(outer, inner));
        c_star.push(ribbons[depth].head_content());
    }
    StarredStrongTableau::from_chain(2, chain, c_star)
}

/// Number of inversions of a permutation word.
pub fn inversions(word: &[usize]) -> u64 {
    let mut inv = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inv += 1;
            }
        }
    }
    inv
}
