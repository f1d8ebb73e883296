//! Flattening and cloning of starred strong tableaux.

use crate::cores::{clone_core, flatten_core, squash_core, Abacus, Partition};
use crate::error::CoreError;
use crate::poset::interval;
use crate::tableaux::{StarredStrongTableau, StrongTableau};

/// Residues mod n untouched by the transposition sequence of the interval.
pub fn untouched_rods(sst: &StarredStrongTableau) -> Vec<i64> {
    let n = sst.n() as i64;
    let mut touched = vec![false; sst.n()];
    for t in sst.transposition_sequence() {
        touched[t.r.rem_euclid(n) as usize] = true;
        touched[t.s.rem_euclid(n) as usize] = true;
    }
    (0..n).filter(|&d| !touched[d as usize]).collect()
}

/// The flattening map fl_d: deletes rod d from every core in the chain and
/// re-stars each letter at the same depth. Requires the sequence to avoid
/// rod d; preserves the signature and every i-ribbon count.
pub fn flatten_sst(
    sst: &StarredStrongTableau,
    d: i64,
) -> Result<StarredStrongTableau, CoreError> {
    let n = sst.n();
    let n_i = n as i64;
    let res = d.rem_euclid(n_i);
    for t in sst.transposition_sequence() {
        if t.r.rem_euclid(n_i) == res || t.s.rem_euclid(n_i) == res {
            return Err(CoreError::RodTouched(d));
        }
    }
    let chain: Vec<Partition> = sst
        .chain()
        .iter()
        .map(|lam| flatten_core(lam, n, d))
        .collect();
    let strong = StrongTableau::new(n - 1, chain)?;
    let mut c_star = Vec::with_capacity(sst.rank());
    for i in 1..=sst.rank() {
        let depth = sst.depth(i);
        let ribbons = strong.ribbons(i);
        debug_assert_eq!(
            ribbons.len(),
            sst.strong().ribbons(i).len(),
            "flattening preserves ribbon counts"
        );
        c_star.push(ribbons[depth].head_content());
    }
    StarredStrongTableau::new(strong, c_star)
}

/// Flattens until every remaining rod is touched (or n = 2); by the
/// untouched-rod count this always reaches n ≤ 2·rank.
pub fn flatten_fully(sst: &StarredStrongTableau) -> StarredStrongTableau {
    let mut cur = sst.clone();
    while cur.n() > 2 {
        let rods = untouched_rods(&cur);
        match rods.first() {
            Some(&d) => cur = flatten_sst(&cur, d).expect("untouched rod flattens"),
            None => break,
        }
    }
    cur
}

/// A cloned starred strong tableau plus the index at which squashing inverts
/// it.
#[derive(Clone, Debug)]
pub struct CloneSstOutput {
    pub sst: StarredStrongTableau,
    pub squash_index: i64,
}

/// Cloneable index test for the interval of `sst`: no rod of any core in
/// the interval has its rightmost bead at a content in `j..j+n-1`.
pub fn is_cloneable_index(sst: &StarredStrongTableau, j: i64) -> bool {
    let n = sst.n();
    let n_i = n as i64;
    let dag = interval(sst.strong().inner(), sst.strong().outer(), n)
        .expect("tableau interval is nonempty");
    dag.levels.iter().flatten().all(|lam| {
        let a = Abacus::from_partition(lam);
        (0..n_i).all(|res| {
            let mut c = a.hi() - (a.hi() - res).rem_euclid(n_i); // largest content ≡ res in window
            while c >= a.lo() && !a.bead(c) {
                c -= n_i;
            }
            // c is now the rightmost bead of its rod
            c < j || c >= j + n_i
        })
    })
}

/// The cloning map cl_j: clones the column at `j` in every core of the chain;
/// stars of content < j keep their depth, stars of content ≥ j go one deeper.
pub fn clone_sst(sst: &StarredStrongTableau, j: i64) -> Result<CloneSstOutput, CoreError> {
    if !is_cloneable_index(sst, j) {
        return Err(CoreError::NotCloneable(j));
    }
    let n = sst.n();
    let mut chain = Vec::with_capacity(sst.chain().len());
    let mut squash_index = None;
    for lam in sst.chain() {
        let out = clone_core(lam, n, j);
        match squash_index {
            None => squash_index = Some(out.squash_index),
            Some(idx) => debug_assert_eq!(
                idx, out.squash_index,
                "cloneable index gives a uniform shift along the chain"
            ),
        }
        chain.push(out.partition);
    }
    let strong = StrongTableau::new(n, chain)?;
    let mut c_star = Vec::with_capacity(sst.rank());
    for i in 1..=sst.rank() {
        let depth = sst.depth(i) + usize::from(sst.star_content(i) >= j);
        let ribbons = strong.ribbons(i);
        if depth >= ribbons.len() {
            return Err(CoreError::NotCloneable(j));
        }
        c_star.push(ribbons[depth].head_content());
    }
    Ok(CloneSstOutput {
        sst: StarredStrongTableau::new(strong, c_star)?,
        squash_index: squash_index.expect("nonempty chain"),
    })
}

/// The squashing map sq_j: deletes the duplicated column block at `j`; stars
/// with content ≥ j + n come one level up in depth.
pub fn squash_sst(sst: &StarredStrongTableau, j: i64) -> Result<StarredStrongTableau, CoreError> {
    let n = sst.n();
    let n_i = n as i64;
    let mut chain = Vec::with_capacity(sst.chain().len());
    for lam in sst.chain() {
        match squash_core(lam, n, j) {
            Some(out) => chain.push(out),
            None => return Err(CoreError::NotSquashable(j)),
        }
    }
    let strong = StrongTableau::new(n, chain)?;
    let mut c_star = Vec::with_capacity(sst.rank());
    for i in 1..=sst.rank() {
        let deeper = usize::from(sst.star_content(i) >= j + n_i);
        let depth = sst
            .depth(i)
            .checked_sub(deeper)
            .ok_or(CoreError::NotSquashable(j))?;
        let ribbons = strong.ribbons(i);
        if depth >= ribbons.len() {
            return Err(CoreError::NotSquashable(j));
        }
        c_star.push(ribbons[depth].head_content());
    }
    StarredStrongTableau::new(strong, c_star)
}

/// Clones every tableau of a connected affine dual equivalence component and
/// machine-checks that cloning commutes with every φ_i on it (the hypothesis
/// of the cloning proposition is verified, not assumed).
pub fn clone_component_checked(
    component: &[StarredStrongTableau],
    j: i64,
) -> Result<Vec<StarredStrongTableau>, CoreError> {
    let cloned: Result<Vec<CloneSstOutput>, CoreError> =
        component.iter().map(|s| clone_sst(s, j)).collect();
    let cloned = cloned?;
    for (v, original) in component.iter().enumerate() {
        let m = original.rank();
        for i in 2..m {
            let lhs = clone_sst(&super::phi(original, i), j)?.sst;
            let rhs = super::phi(&cloned[v].sst, i);
            if lhs != rhs {
                return Err(CoreError::CloningDoesNotCommute { i, vertex: v });
            }
        }
    }
    Ok(cloned.into_iter().map(|c| c.sst).collect())
}
