//! Signed colored graphs: the affine dual equivalence graph, the standard
//! dual equivalence graph on SYT, the D-graph axioms, local Schur
//! positivity, rank-4 classification, and canonical forms / isomorphism.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{Partition, SkewShape};
use crate::error::CoreError;
use crate::involutions::{elementary_de, phi};
use crate::symfun::{Coeff, QSymVector, QtPoly};
use crate::tableaux::{
    enumerate_sst, enumerate_syt, signature_syt, Signature, StarredStrongTableau,
};

mod canon;
pub use canon::{canonical_form, iso, iso_brute_force, CanonicalCode};

/// A vertex of a signed colored graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub signature: Signature,
    pub spin: Option<u64>,
    /// Stable identifier (canonical serialization of the underlying object).
    pub label: String,
}

/// A signed, colored graph of degree m: vertices with ±1 signatures of
/// length m-1 and edge sets E_2, ..., E_{m-1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedColoredGraph {
    pub degree: usize,
    pub vertices: Vec<GraphVertex>,
    /// color -> set of unordered vertex index pairs (stored with u < v)
    pub edges: BTreeMap<usize, BTreeSet<(usize, usize)>>,
}

impl SignedColoredGraph {
    pub fn new(degree: usize, vertices: Vec<GraphVertex>) -> Self {
        SignedColoredGraph {
            degree,
            vertices,
            edges: BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, color: usize, u: usize, v: usize) {
        assert!(u != v, "no loops");
        self.edges
            .entry(color)
            .or_default()
            .insert((u.min(v), u.max(v)));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.edges.keys().copied().collect()
    }

    /// Neighbors of `v` through color `c`.
    pub fn neighbors(&self, v: usize, color: usize) -> Vec<usize> {
        self.edges
            .get(&color)
            .map(|set| {
                set.iter()
                    .filter_map(|&(a, b)| {
                        if a == v {
                            Some(b)
                        } else if b == v {
                            Some(a)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Connected components (over all colors), each as a vertex-induced
    /// subgraph with vertices in ascending original order.
    pub fn components(&self) -> Vec<SignedColoredGraph> {
        let n = self.vertex_count();
        let mut comp_id = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp_id[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp_id[start] = count;
            while let Some(v) = stack.pop() {
                for set in self.edges.values() {
                    for &(a, b) in set.iter() {
                        let other = if a == v {
                            b
                        } else if b == v {
                            a
                        } else {
                            continue;
                        };
                        if comp_id[other] == usize::MAX {
                            comp_id[other] = count;
                            stack.push(other);
                        }
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let verts: Vec<usize> = (0..n).filter(|&v| comp_id[v] == c).collect();
                self.induced(&verts)
            })
            .collect()
    }

    /// Vertex-induced subgraph keeping all colors.
    pub fn induced(&self, verts: &[usize]) -> SignedColoredGraph {
        let index: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = SignedColoredGraph::new(
            self.degree,
            verts.iter().map(|&v| self.vertices[v].clone()).collect(),
        );
        for (&color, set) in &self.edges {
            for &(a, b) in set {
                if let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) {
                    g.add_edge(color, u, v);
                }
            }
        }
        g
    }

    /// Restriction to an inclusive color range, with each vertex signature
    /// restricted to the 1-based window `sig_lo..=sig_hi` (clamped).
    pub fn restrict(&self, colors: impl Iterator<Item = usize> + Clone, sig_lo: i64, sig_hi: i64) -> SignedColoredGraph {
        let keep: BTreeSet<usize> = colors.collect();
        let new_len = {
            let lo = sig_lo.max(1);
            let hi = sig_hi.min(self.degree as i64 - 1);
            (hi - lo + 1).max(0) as usize
        };
        let mut g = SignedColoredGraph::new(
            new_len + 1,
            self.vertices
                .iter()
                .map(|v| GraphVertex {
                    signature: v.signature.window(sig_lo, sig_hi),
                    spin: v.spin,
                    label: v.label.clone(),
                })
                .collect(),
        );
        for (&color, set) in &self.edges {
            if keep.contains(&color) {
                for &(a, b) in set {
                    g.add_edge(color, a, b);
                }
            }
        }
        g
    }

    /// Relabels colors by a shift (new color = color - shift).
    pub fn shift_colors(&self, shift: i64) -> SignedColoredGraph {
        let mut g = SignedColoredGraph::new(self.degree, self.vertices.clone());
        for (&color, set) in &self.edges {
            let new_color = (color as i64 - shift) as usize;
            for &(a, b) in set {
                g.edges.entry(new_color).or_default().insert((a, b));
            }
        }
        g
    }

    /// Σ_v t^{spin(v)} Q_{σ(v)} (weight 1 when spin is absent).
    pub fn generating_function<C: Coeff>(&self) -> QSymVector<C> {
        let mut out = QSymVector::zero(self.degree);
        for v in &self.vertices {
            let w = match v.spin {
                Some(s) => QtPoly::monomial(0, s as u32, C::one()),
                None => QtPoly::one(),
            };
            out.add_term(v.signature.clone(), w);
        }
        out
    }

    /// Spin value when constant across the component.
    pub fn constant_spin(&self) -> Option<u64> {
        let first = self.vertices.first()?.spin?;
        self.vertices
            .iter()
            .all(|v| v.spin == Some(first))
            .then_some(first)
    }

    /// DOT export: vertex label = object rendering + signature (+ spin),
    /// edge label = color.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let mut label = v.label.replace('\n', "\\n");
            label.push_str(&format!("\\nsig {}", v.signature));
            if let Some(spin) = v.spin {
                label.push_str(&format!("  spin {spin}"));
            }
            s.push_str(&format!("  v{i} [label=\"{label}\"];\n"));
        }
        for (&color, set) in &self.edges {
            for &(a, b) in set {
                s.push_str(&format!("  v{a} -- v{b} [label=\"{color}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The affine dual equivalence graph on SST*(lam/mu, n): vertices in
/// enumeration order, E_i = pairs {S*, φ_i(S*)}.
pub fn build_adeg(
    lam: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<(SignedColoredGraph, Vec<StarredStrongTableau>), CoreError> {
    let ssts = enumerate_sst(lam, mu, n)?;
    let index: BTreeMap<&StarredStrongTableau, usize> =
        ssts.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let vertices = ssts
        .iter()
        .map(|s| GraphVertex {
            signature: s.signature(),
            spin: Some(s.spin()),
            label: s.render(),
        })
        .collect();
    let mut g = SignedColoredGraph::new(ssts.first().map_or(1, |s| s.rank()), vertices);
    for (u, s) in ssts.iter().enumerate() {
        for i in 2..s.rank() {
            let t = phi(s, i);
            if t != *s {
                let v = *index.get(&t).expect("phi stays within the vertex set");
                g.add_edge(i, u, v);
            }
        }
    }
    Ok((g, ssts))
}

/// The standard dual equivalence graph on SYT(shape).
pub fn build_syt_deg(shape: &SkewShape) -> SignedColoredGraph {
    let syts = enumerate_syt(shape);
    let index: BTreeMap<_, usize> = syts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let m = shape.size();
    let vertices = syts
        .iter()
        .map(|t| GraphVertex {
            signature: signature_syt(t),
            spin: None,
            label: t.render(),
        })
        .collect();
    let mut g = SignedColoredGraph::new(m, vertices);
    for (u, t) in syts.iter().enumerate() {
        for i in 2..m {
            let r = elementary_de(t, i);
            if r != *t {
                g.add_edge(i, u, index[&r]);
            }
        }
    }
    g
}

mod axioms;
pub use axioms::{check_axioms, check_lsp, AxiomReport, AxiomResult};

mod rank4;
pub use rank4::{classify_all_rank4, classify_rank4, rank4_reference_types, Rank4GraphType};


impl fmt::Display for SignedColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "signed colored graph: degree {}, {} vertices, {} edges",
            self.degree,
            self.vertex_count(),
            self.edge_count()
        )?;
        for (i, v) in self.vertices.iter().enumerate() {
            write!(f, "  v{i}: {}", v.signature)?;
            if let Some(s) = v.spin {
                write!(f, " spin {s}")?;
            }
            writeln!(f)?;
        }
        for (color, set) in &self.edges {
            for (a, b) in set {
                writeln!(f, "  v{a} --{color}-- v{b}")?;
            }
        }
        Ok(())
    }
}
