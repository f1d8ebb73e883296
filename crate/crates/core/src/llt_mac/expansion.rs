//! Empirical expansion of LLT polynomials into modified k-Schur functions.
//!
//! This is a verification harness, not a theorem: the expansion proceeds by
//! greedy subtraction against the dominance-triangular leading terms, and a
//! coefficient outside ℕ[q] aborts with a report rather than being hidden.

use std::collections::BTreeMap;

use crate::cores::Partition;
use crate::error::CoreError;
use crate::symfun::{kschur_modified, qsym_to_schur};
use crate::{Poly, QSym};

/// Result of the expansion: coefficients in the modified k-Schur basis.
#[derive(Clone, Debug)]
pub struct KSchurExpansion {
    pub k: usize,
    pub terms: Vec<(Partition, Poly)>,
}

impl KSchurExpansion {
    /// True when every coefficient lies in ℕ[q].
    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_nonnegative())
    }
}

/// Expands a (q-weighted) symmetric quasisymmetric vector into modified
/// k-Schur functions by repeatedly matching the reverse-lex smallest Schur
/// term against the unique k-Schur with that leading term.
pub fn expand_into_modified_kschur(f: &QSym, k: usize) -> Result<KSchurExpansion, CoreError> {
    let degree = f.degree();
    // cache images and their leading monomials
    let mut images: BTreeMap<Partition, (QSym, Poly)> = BTreeMap::new();
    for nu in Partition::all_of_size(degree) {
        if !nu.is_k_bounded(k) {
            continue;
        }
        let image = kschur_modified::<i64>(&nu, k)?;
        let schur = qsym_to_schur(&image)?;
        let lead = schur.coeff(&nu);
        if lead.coeffs().len() != 1 {
            return Err(CoreError::ExpansionFailed(format!(
                "leading coefficient of the k-Schur at {nu} is not a monomial: {lead}"
            )));
        }
        images.insert(nu, (image, lead));
    }
    let mut residual = f.clone();
    let mut terms = Vec::new();
    loop {
        if residual.is_zero() {
            break;
        }
        let schur = qsym_to_schur(&residual)?;
        let (nu, coeff) = schur
            .terms()
            .iter()
            .next()
            .map(|(p, c)| (p.clone(), c.clone()))
            .expect("nonzero residual has a term");
        let Some((image, lead)) = images.get(&nu) else {
            return Err(CoreError::ExpansionFailed(format!(
                "leading term {nu} is not {k}-bounded"
            )));
        };
        let Some(quotient) = divide_by_monomial(&coeff, lead) else {
            return Err(CoreError::ExpansionFailed(format!(
                "coefficient {coeff} at {nu} is not divisible by the leading monomial {lead}"
            )));
        };
        residual = residual - image.scaled(&quotient);
        terms.push((nu, quotient));
        if terms.len() > 1000 {
            return Err(CoreError::ExpansionFailed("expansion does not terminate".into()));
        }
    }
    Ok(KSchurExpansion { k, terms })
}

/// Divides by a single monomial with exact integer quotients; `None` when
/// any exponent or coefficient fails to divide.
fn divide_by_monomial(poly: &Poly, monomial: &Poly) -> Option<Poly> {
    let (&(mq, mt), mc) = monomial.coeffs().iter().next()?;
    let mut out = Poly::default();
    for (&(q, t), c) in poly.coeffs() {
        if q < mq || t < mt || c % mc != 0 {
            return None;
        }
        out = out + Poly::monomial(q - mq, t - mt, c / mc);
    }
    Some(out)
}
