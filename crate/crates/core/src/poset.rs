//! The poset of n-cores induced from Young's lattice: covers, intervals,
//! rank-2 interval taxonomy, and interval swaps on saturated chains.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::affine::AffineTransposition;
use crate::cores::{ribbon_components, skew_cells, Abacus, Partition, Ribbon};
use crate::error::CoreError;

/// A covering relation in the n-core poset. The transposition is the
/// canonical label: r = tail content and s - 1 = head content of the lowest
/// (most northwestern) added ribbon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEdge {
    pub lower: Partition,
    pub upper: Partition,
    pub transposition: AffineTransposition,
    pub ribbon_count: usize,
    pub ribbon_shape: Ribbon,
}

/// All covers above `mu` in the n-core poset: pairs (bead p, spacer q) with
/// 0 < q - p < n, q the lowest spacer of its rod, and no rod strictly between
/// p and q of length weakly between the lengths of rods p and q.
pub fn covers_above(mu: &Partition, n: usize) -> Vec<CoverEdge> {
    let a = Abacus::from_partition(mu);
    let n_i = n as i64;
    let mut out = Vec::new();
    for p in a.lo() - n_i..=a.hi() {
        if !a.bead(p) {
            continue;
        }
        for q in p + 1..p + n_i {
            // q must be the lowest spacer on its rod (q - n a bead) so each
            // affine transposition is counted once
            if a.bead(q) || !a.bead(q - n_i) {
                continue;
            }
            let lp = a.rod_length(p, n);
            let lq = a.rod_length(q, n);
            let (lo_len, hi_len) = (lp.min(lq), lp.max(lq));
            if (p + 1..q).any(|c| {
                let l = a.rod_length(c, n);
                lo_len <= l && l <= hi_len
            }) {
                continue;
            }
            debug_assert!(lp > lq, "bead/spacer cover must raise the rank");
            let upper = a.swap_rods(p, q, n).to_partition();
            let ribbons = ribbon_components(&skew_cells(&upper, mu));
            debug_assert_eq!(ribbons.len() as i64, lp - lq);
            let shape = ribbons
                .iter()
                .find(|r| r.head_content() == q - 1)
                .expect("lowest ribbon has head content s-1")
                .clone();
            debug_assert_eq!(shape.tail_content(), p);
            out.push(CoverEdge {
                lower: mu.clone(),
                upper,
                transposition: AffineTransposition::new(p, q).unwrap(),
                ribbon_count: ribbons.len(),
                ribbon_shape: shape,
            });
        }
    }
    out.sort_by(|a, b| a.upper.cmp(&b.upper));
    out
}

/// The cores covering `mu`, sorted lexicographically. Results are memoized
/// globally: the poset below desk-scale shapes is small and the same
/// elements are queried constantly by chain validation and the involutions.
pub fn upper_covers(mu: &Partition, n: usize) -> std::sync::Arc<Vec<Partition>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    type CoverCache = Mutex<HashMap<(Partition, usize), Arc<Vec<Partition>>>>;
    static CACHE: OnceLock<CoverCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(mu.clone(), n)) {
        return hit.clone();
    }
    let computed = Arc::new(upper_covers_uncached(mu, n));
    cache
        .lock()
        .unwrap()
        .insert((mu.clone(), n), computed.clone());
    computed
}

fn upper_covers_uncached(mu: &Partition, n: usize) -> Vec<Partition> {
    let a = Abacus::from_partition(mu);
    let n_i = n as i64;
    let mut out = Vec::new();
    for p in a.lo() - n_i..=a.hi() {
        if !a.bead(p) {
            continue;
        }
        for q in p + 1..p + n_i {
            if a.bead(q) || !a.bead(q - n_i) {
                continue;
            }
            let lp = a.rod_length(p, n);
            let lq = a.rod_length(q, n);
            let (lo_len, hi_len) = (lp.min(lq), lp.max(lq));
            if (p + 1..q).any(|c| {
                let l = a.rod_length(c, n);
                lo_len <= l && l <= hi_len
            }) {
                continue;
            }
            out.push(a.swap_rods(p, q, n).to_partition());
        }
    }
    out.sort();
    out
}

/// True when `upper` covers `lower`.
pub fn is_cover(lower: &Partition, upper: &Partition, n: usize) -> bool {
    upper_covers(lower, n).binary_search(upper).is_ok()
}

/// All n-cores of each rank `0..=max_rank`, generated by breadth-first
/// search upward from the empty core.
pub fn cores_by_rank(n: usize, max_rank: usize) -> Vec<Vec<Partition>> {
    let mut levels = vec![vec![Partition::empty()]];
    for _ in 0..max_rank {
        let mut next = BTreeSet::new();
        for mu in levels.last().unwrap() {
            next.extend(upper_covers(mu, n).iter().cloned());
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// The Hasse diagram of the interval [mu, lam] in the n-core poset.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntervalDag {
    pub n: usize,
    /// Elements grouped by rank above `mu` (rank 0 = mu itself).
    pub levels: Vec<Vec<Partition>>,
    /// Cover edges as (rank of lower, index in level, index in next level).
    pub edges: Vec<(usize, usize, usize)>,
}

impl IntervalDag {
    pub fn element_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// Number of saturated chains from bottom to top.
    pub fn chain_count(&self) -> u64 {
        let mut counts: Vec<Vec<u64>> = self
            .levels
            .iter()
            .map(|level| vec![0; level.len()])
            .collect();
        counts[0].iter_mut().for_each(|c| *c = 1);
        for &(rank, i, j) in &self.edges {
            counts[rank + 1][j] += counts[rank][i];
        }
        counts.last().unwrap().iter().sum()
    }
}

/// Builds the interval by BFS upward from `mu`, pruning by containment in
/// `lam` (sound because containment is the order, by Lascoux's theorem).
pub fn interval(mu: &Partition, lam: &Partition, n: usize) -> Result<IntervalDag, CoreError> {
    if !mu.contained_in(lam) {
        return Err(CoreError::EmptyInterval {
            lower: mu.to_string(),
            upper: lam.to_string(),
        });
    }
    let mut levels = vec![vec![mu.clone()]];
    let mut edges = Vec::new();
    let mut rank = 0;
    while levels[rank] != [lam.clone()] {
        let mut next: BTreeSet<Partition> = BTreeSet::new();
        for elt in &levels[rank] {
            for up in upper_covers(elt, n).iter() {
                if up.contained_in(lam) {
                    next.insert(up.clone());
                }
            }
        }
        let next: Vec<Partition> = next.into_iter().collect();
        if next.is_empty() {
            // mu ⊆ lam but lam unreachable can only happen when lam = mu
            break;
        }
        for (i, elt) in levels[rank].iter().enumerate() {
            for up in upper_covers(elt, n).iter() {
                if let Ok(j) = next.binary_search(up) {
                    edges.push((rank, i, j));
                }
            }
        }
        levels.push(next);
        rank += 1;
    }
    Ok(IntervalDag { n, levels, edges })
}

/// The elements strictly between `lower` and `upper` when the interval has
/// rank 2 (one or two of them, by Björner–Brenti).
pub fn midpoints(lower: &Partition, upper: &Partition, n: usize) -> Vec<Partition> {
    upper_covers(lower, n)
        .iter()
        .filter(|mid| is_cover(mid, upper, n))
        .cloned()
        .collect()
}

/// Isomorphism type of a rank-2 interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalKind {
    ChainC3,
    BooleanB2,
}

/// Rod-exchange pattern of the two covering transpositions, with their
/// content intervals chosen as close together as possible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExchangeKind {
    Disjoint,
    Interleaving,
    Nested,
    Abutting,
}

/// Classification data of a rank-2 interval (Table-1 taxonomy).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Type {
    pub kind: IntervalKind,
    pub exchange: ExchangeKind,
    pub num_residues: usize,
    pub num_distinct_lengths: usize,
}

/// Classifies the rank-2 interval [mu, lam].
pub fn classify_rank2(mu: &Partition, lam: &Partition, n: usize) -> Result<Rank2Type, CoreError> {
    let mids = midpoints(mu, lam, n);
    if mids.is_empty() {
        return Err(CoreError::NotRank2 {
            lower: mu.to_string(),
            upper: lam.to_string(),
            rank: crate::affine::rank(lam, n) as i64 - crate::affine::rank(mu, n) as i64,
        });
    }
    let kind = match mids.len() {
        1 => IntervalKind::ChainC3,
        2 => IntervalKind::BooleanB2,
        k => unreachable!("rank-2 interval with {k} midpoints"),
    };
    // transpositions along one saturated chain
    let mid = &mids[0];
    let t1 = covers_above(mu, n)
        .into_iter()
        .find(|e| &e.upper == mid)
        .unwrap()
        .transposition;
    let t2 = covers_above(mid, n)
        .into_iter()
        .find(|e| &e.upper == lam)
        .unwrap()
        .transposition;
    let n_i = n as i64;
    let mut residues: BTreeSet<i64> = BTreeSet::new();
    for v in [t1.r, t1.s, t2.r, t2.s] {
        residues.insert(v.rem_euclid(n_i));
    }
    let num_residues = residues.len();

    // slide the second interval by multiples of n to minimize the total span
    let span = |shift: i64| -> i64 {
        let lo = t1.r.min(t2.r + shift);
        let hi = t1.s.max(t2.s + shift);
        hi - lo
    };
    let mut best_shift = 0;
    for k in -3..=3 {
        if span(k * n_i) < span(best_shift) {
            best_shift = k * n_i;
        }
    }
    let (a1, b1) = (t1.r, t1.s);
    let (a2, b2) = (t2.r + best_shift, t2.s + best_shift);
    let exchange = if num_residues <= 3 {
        ExchangeKind::Abutting
    } else if b1 < a2 || b2 < a1 {
        ExchangeKind::Disjoint
    } else if (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2) {
        ExchangeKind::Nested
    } else {
        ExchangeKind::Interleaving
    };

    // distinct rod lengths in mu at the closest-together contents, one rod
    // per residue
    let abacus = Abacus::from_partition(mu);
    let mut reps: BTreeMap<i64, i64> = BTreeMap::new();
    for c in [a1, b1, a2, b2] {
        reps.entry(c.rem_euclid(n_i)).or_insert(c);
    }
    let contents: BTreeSet<i64> = reps.values().copied().collect();
    let lengths: BTreeSet<i64> = contents
        .iter()
        .map(|&c| abacus.rod_length(c, n))
        .collect();

    Ok(Rank2Type {
        kind,
        exchange,
        num_residues,
        num_distinct_lengths: lengths.len(),
    })
}

/// Replaces the rank-i element of a saturated chain by the unique other
/// midpoint of [chain[i-1], chain[i+1]]. Errors when the interval is a chain.
pub fn interval_swap(
    chain: &[Partition],
    i: usize,
    n: usize,
) -> Result<Vec<Partition>, CoreError> {
    assert!(i >= 1 && i + 1 < chain.len(), "swap index out of range");
    let mids = midpoints(&chain[i - 1], &chain[i + 1], n);
    match mids.len() {
        1 => Err(CoreError::ChainInterval {
            lower: chain[i - 1].to_string(),
            upper: chain[i + 1].to_string(),
        }),
        2 => {
            let other = mids.into_iter().find(|m| *m != chain[i]).unwrap();
            let mut out = chain.to_vec();
            out[i] = other;
            Ok(out)
        }
        k => unreachable!("rank-2 interval with {k} midpoints"),
    }
}

/// Hasse-diagram DOT export; edges carry the spin contributions of the
/// possible starrings (`1,t,t^2` style labels).
pub fn interval_dot(dag: &IntervalDag) -> String {
    let mut s = String::from("graph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let id = |rank: usize, i: usize| format!("v{rank}_{i}");
    for (rank, level) in dag.levels.iter().enumerate() {
        for (i, lam) in level.iter().enumerate() {
            let label = if lam.is_empty() {
                "∅".to_string()
            } else {
                format!("{lam}")
            };
            s.push_str(&format!("  {} [label=\"{}\"];\n", id(rank, i), label));
        }
    }
    for &(rank, i, j) in &dag.edges {
        let lower = &dag.levels[rank][i];
        let upper = &dag.levels[rank + 1][j];
        let ribbons = ribbon_components(&skew_cells(upper, lower));
        let k = ribbons.len();
        let h = ribbons[0].height();
        let base = k * (h - 1);
        let label: Vec<String> = (0..k).map(|d| power_of_t(base + d)).collect();
        s.push_str(&format!(
            "  {} -- {} [label=\"{}\"];\n",
            id(rank, i),
            id(rank + 1, j),
            label.join(",")
        ));
    }
    s.push_str("}\n");
    s
}

fn power_of_t(e: usize) -> String {
    match e {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{e}"),
    }
}
