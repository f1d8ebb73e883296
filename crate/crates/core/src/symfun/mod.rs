//! Exact symmetric-function arithmetic in the fundamental quasisymmetric
//! basis: Schur expansions, k-Schur and modified k-Schur functions.
//!
//! Degree-m symmetric functions are determined by their fundamental
//! expansion, so nothing here ever materializes a monomial expansion. All
//! arithmetic is exact; the coefficient type is generic over [`Coeff`] with
//! `i64` as the default (`crate::Poly`, `crate::QSym`, `crate::Schur`).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cores::Partition;
use crate::error::CoreError;
use crate::tableaux::{enumerate_syt, signature_syt, Signature};

mod poly;
pub use poly::QtPoly;

/// Exact coefficient scalar: any signed integer-like type from num-traits
/// (i64, i128, BigInt, ...). Floating point types fail `Eq` and are excluded
/// by construction.
pub trait Coeff:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + std::hash::Hash
    + Zero
    + One
    + Signed
    + FromPrimitive
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Ord
        + fmt::Debug
        + fmt::Display
        + std::hash::Hash
        + Zero
        + One
        + Signed
        + FromPrimitive
        + 'static
{
}

/// A degree-m symmetric-function candidate stored as signature →
/// coefficient polynomial in (q, t).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QSymVector<C: Coeff> {
    degree: usize,
    terms: BTreeMap<Signature, QtPoly<C>>,
}

impl<C: Coeff> QSymVector<C> {
    pub fn zero(degree: usize) -> Self {
        QSymVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Signature, QtPoly<C>> {
        &self.terms
    }

    pub fn coeff(&self, sig: &Signature) -> QtPoly<C> {
        self.terms.get(sig).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, sig: Signature, poly: QtPoly<C>) {
        assert_eq!(sig.len() + 1, self.degree, "signature length != degree - 1");
        let entry = self.terms.entry(sig.clone()).or_default();
        *entry = entry.clone() + poly;
        if entry.is_zero() {
            self.terms.remove(&sig);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients evaluated at q = t = 1 (counts the generating
    /// objects).
    pub fn total_at_one(&self) -> C {
        let mut acc = C::zero();
        for p in self.terms.values() {
            acc = acc + p.eval_at_one();
        }
        acc
    }

    pub fn scaled(&self, factor: &QtPoly<C>) -> Self {
        let mut out = QSymVector::zero(self.degree);
        for (s, p) in &self.terms {
            out.add_term(s.clone(), p.clone() * factor.clone());
        }
        out
    }

    /// Swaps the roles of q and t in every coefficient.
    pub fn swap_qt(&self) -> Self {
        let mut out = QSymVector::zero(self.degree);
        for (s, p) in &self.terms {
            out.add_term(s.clone(), p.swap_qt());
        }
        out
    }
}

impl<C: Coeff> std::ops::Add for QSymVector<C> {
    type Output = QSymVector<C>;
    fn add(mut self, rhs: QSymVector<C>) -> QSymVector<C> {
        assert_eq!(self.degree, rhs.degree);
        for (s, p) in rhs.terms {
            self.add_term(s, p);
        }
        self
    }
}

impl<C: Coeff> std::ops::Sub for QSymVector<C> {
    type Output = QSymVector<C>;
    fn sub(mut self, rhs: QSymVector<C>) -> QSymVector<C> {
        assert_eq!(self.degree, rhs.degree);
        for (s, p) in rhs.terms {
            self.add_term(s, -p);
        }
        self
    }
}

/// A vector in the Schur basis: partition → coefficient polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SchurVector<C: Coeff> {
    degree: usize,
    terms: BTreeMap<Partition, QtPoly<C>>,
}

impl<C: Coeff> SchurVector<C> {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(lam: Partition, poly: QtPoly<C>) -> Self {
        let mut v = SchurVector::zero(lam.size());
        v.add_term(lam, poly);
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QtPoly<C>> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> QtPoly<C> {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lam: Partition, poly: QtPoly<C>) {
        assert_eq!(lam.size(), self.degree);
        let entry = self.terms.entry(lam.clone()).or_default();
        *entry = entry.clone() + poly;
        if entry.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient polynomial has nonnegative coefficients.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QtPoly::is_nonnegative)
    }

    /// Leading partition in reverse lexicographic order ((m) first).
    pub fn leading_revlex(&self) -> Option<&Partition> {
        self.terms.keys().next_back()
    }

    pub fn to_qsym(&self) -> QSymVector<C> {
        let mut out = QSymVector::zero(self.degree);
        for (lam, poly) in &self.terms {
            out = out + schur_to_qsym::<C>(lam).scaled(poly);
        }
        out
    }
}

/// Per-degree cache of signature multiplicities #\{T ∈ SYT(λ): σ(T) = σ\}.
fn syt_signature_table(lam: &Partition) -> &'static BTreeMap<Signature, u64> {
    static CACHE: OnceLock<Mutex<BTreeMap<Partition, &'static BTreeMap<Signature, u64>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(lam.clone()).or_insert_with(|| {
        let mut table: BTreeMap<Signature, u64> = BTreeMap::new();
        for t in enumerate_syt(&crate::cores::SkewShape::straight(lam.clone())) {
            *table.entry(signature_syt(&t)).or_insert(0) += 1;
        }
        Box::leak(Box::new(table))
    })
}

/// The Gessel expansion s_λ = Σ_{T ∈ SYT(λ)} Q_{σ(T)}.
pub fn schur_to_qsym<C: Coeff>(lam: &Partition) -> QSymVector<C> {
    let mut out = QSymVector::zero(lam.size());
    for (sig, &count) in syt_signature_table(lam) {
        out.add_term(
            sig.clone(),
            QtPoly::constant(C::from_u64(count).expect("multiplicity fits")),
        );
    }
    out
}

/// Signature of the row-superstandard tableau of λ: descents exactly at the
/// row-end positions. The matrix row λ is the unique one whose pivot
/// signature survives, and its entry there is 1.
fn pivot_signature(lam: &Partition) -> Signature {
    let m = lam.size();
    let mut descents = vec![true; m.saturating_sub(1)];
    let mut acc = 0;
    for &part in lam.parts() {
        acc += part;
        if acc < m {
            descents[acc - 1] = false;
        }
    }
    Signature::new(descents)
}

/// Inverts the Gessel expansion by unitriangular elimination over the
/// integers: partitions processed in reverse lexicographic order, pivoting on
/// the row-superstandard signature. Errors when a residual remains.
pub fn qsym_to_schur<C: Coeff>(f: &QSymVector<C>) -> Result<SchurVector<C>, CoreError> {
    let degree = f.degree();
    let mut residual = f.clone();
    let mut out = SchurVector::zero(degree);
    if degree == 0 {
        return Ok(out);
    }
    for lam in Partition::all_of_size(degree) {
        let c = residual.coeff(&pivot_signature(&lam));
        if c.is_zero() {
            continue;
        }
        residual = residual - schur_to_qsym::<C>(&lam).scaled(&c);
        out.add_term(lam, c);
    }
    if let Some((sig, _)) = residual.terms().iter().next() {
        return Err(CoreError::NotSymmetric(sig.to_string()));
    }
    Ok(out)
}

/// True when the vector lies in the span of the Schur images.
pub fn is_symmetric<C: Coeff>(f: &QSymVector<C>) -> bool {
    qsym_to_schur(f).is_ok()
}

/// The k-Schur function s_ν^{(k)}(X; t): the t^{spin}-weighted generating
/// function of starred strong tableaux of shape ρ(ν) in the (k+1)-core poset.
pub fn kschur<C: Coeff>(nu: &Partition, k: usize) -> Result<QSymVector<C>, CoreError> {
    kschur_weighted(nu, k, false)
}

/// The modified k-Schur function with q^{cospin} weights.
pub fn kschur_modified<C: Coeff>(nu: &Partition, k: usize) -> Result<QSymVector<C>, CoreError> {
    kschur_weighted(nu, k, true)
}

fn kschur_weighted<C: Coeff>(
    nu: &Partition,
    k: usize,
    cospin: bool,
) -> Result<QSymVector<C>, CoreError> {
    let core = crate::cores::rho(nu, k)?;
    let n = k + 1;
    let mut out = QSymVector::zero(nu.size());
    for sst in crate::tableaux::enumerate_sst(&core, &Partition::empty(), n)? {
        let weight = if cospin {
            QtPoly::monomial(sst.cospin() as u32, 0, C::one())
        } else {
            QtPoly::monomial(0, sst.spin() as u32, C::one())
        };
        out.add_term(sst.signature(), weight);
    }
    Ok(out)
}
