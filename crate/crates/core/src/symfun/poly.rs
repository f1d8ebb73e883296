//! Sparse exact polynomials in the formal parameters q and t.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Coeff;

/// A polynomial Σ c_{a,b} q^a t^b with exact coefficients and no zero terms
/// stored. Monomials are keyed by (q exponent, t exponent).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QtPoly<C: Coeff> {
    coeffs: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> Default for QtPoly<C> {
    fn default() -> Self {
        QtPoly {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> QtPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn monomial(q: u32, t: u32, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((q, t), c);
        }
        QtPoly { coeffs }
    }

    /// Univariate in t: coefficients `[c0, c1, ...]` for `c0 + c1 t + ...`.
    pub fn from_t_coeffs(cs: &[C]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in cs.iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert((0u32, e as u32), c.clone());
            }
        }
        QtPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), C> {
        &self.coeffs
    }

    pub fn coeff(&self, q: u32, t: u32) -> C {
        self.coeffs.get(&(q, t)).cloned().unwrap_or_else(C::zero)
    }

    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.values() {
            acc = acc + c.clone();
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn swap_qt(&self) -> Self {
        QtPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(q, t), c)| ((t, q), c.clone()))
                .collect(),
        }
    }

    /// Maps t^b to t^{shift - b} (used for spin/cospin complementation);
    /// panics when an exponent exceeds `shift`.
    pub fn t_complement(&self, shift: u32) -> Self {
        QtPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(q, t), c)| ((q, shift - t), c.clone()))
                .collect(),
        }
    }

    fn insert(&mut self, key: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rendering shared by Display and LaTeX: monomials ascending by
    /// (t degree, q degree), coefficient 1 suppressed.
    fn render(&self, latex: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<(u32, u32)> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(q, t)| (t, q));
        let mut out = String::new();
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.coeffs[key];
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars = format!("{}{}", var_power("q", key.0, latex), var_power("t", key.1, latex));
            if vars.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&vars);
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

fn var_power(v: &str, e: u32, latex: bool) -> String {
    match e {
        0 => String::new(),
        1 => v.to_string(),
        _ if latex => format!("{v}^{{{e}}}"),
        _ => format!("{v}^{e}"),
    }
}

impl<C: Coeff> Add for QtPoly<C> {
    type Output = QtPoly<C>;
    fn add(mut self, rhs: QtPoly<C>) -> QtPoly<C> {
        for (k, c) in rhs.coeffs {
            self.insert(k, c);
        }
        self
    }
}

impl<C: Coeff> Sub for QtPoly<C> {
    type Output = QtPoly<C>;
    fn sub(self, rhs: QtPoly<C>) -> QtPoly<C> {
        self + (-rhs)
    }
}

impl<C: Coeff> Neg for QtPoly<C> {
    type Output = QtPoly<C>;
    fn neg(mut self) -> QtPoly<C> {
        for c in self.coeffs.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Coeff> Mul for QtPoly<C> {
    type Output = QtPoly<C>;
    fn mul(self, rhs: QtPoly<C>) -> QtPoly<C> {
        let mut out = QtPoly::default();
        for (&(qa, ta), a) in &self.coeffs {
            for (&(qb, tb), b) in &rhs.coeffs {
                out.insert((qa + qb, ta + tb), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for QtPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl<C: Coeff> fmt::Debug for QtPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Wire format: a list of monomials `{"q": a, "t": b, "c": coeff}`.
#[derive(Serialize, Deserialize)]
struct MonomialWire<C> {
    q: u32,
    t: u32,
    c: C,
}

impl<C: Coeff + Serialize> Serialize for QtPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let monos: Vec<MonomialWire<C>> = self
            .coeffs
            .iter()
            .map(|(&(q, t), c)| MonomialWire { q, t, c: c.clone() })
            .collect();
        monos.serialize(s)
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for QtPoly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let monos = Vec::<MonomialWire<C>>::deserialize(d)?;
        let mut out = QtPoly::default();
        for m in monos {
            out.insert((m.q, m.t), m.c);
        }
        Ok(out)
    }
}

impl<C: Coeff> Zero for QtPoly<C> {
    fn zero() -> Self {
        QtPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}
