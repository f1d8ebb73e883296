//! Argument parsing helpers.

use anyhow::{anyhow, bail, Result};

use kschur_core::cores::Partition;
use kschur_core::llt_mac::{TupleComponent, TupleShape};
use kschur_core::tableaux::StarredStrongTableau;

/// Parses "4,3,1" (or "" for the empty partition).
pub fn partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|e| anyhow!("bad partition {s:?}: {e}"))?;
    Partition::try_new(parts).map_err(|e| anyhow!(e))
}

/// Builds a tuple shape from exactly one of the three sources.
pub fn tuple_shape(
    tuple_json: Option<String>,
    singletons: Option<usize>,
    single: Option<String>,
) -> Result<TupleShape> {
    match (tuple_json, singletons, single) {
        (Some(json), None, None) => {
            let comps: Vec<TupleComponentWire> = serde_json::from_str(&json)?;
            let comps: Result<Vec<TupleComponent>> = comps
                .into_iter()
                .map(|c| {
                    TupleComponent::new(c.outer, c.inner, c.offset).map_err(|e| anyhow!(e))
                })
                .collect();
            Ok(TupleShape::new(comps?))
        }
        (None, Some(d), None) => {
            if d == 0 {
                bail!("--singletons needs d >= 1");
            }
            Ok(TupleShape::singletons(d))
        }
        (None, None, Some(lam)) => Ok(TupleShape::single(partition(&lam)?)),
        _ => bail!("provide exactly one of --tuple-json, --singletons, --partition"),
    }
}

#[derive(serde::Deserialize)]
struct TupleComponentWire {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    #[serde(default)]
    offset: i64,
}

/// Parses {"n":3, "chain":[[...], ...], "c_star":[...]}.
pub fn sst(json: &str) -> Result<StarredStrongTableau> {
    #[derive(serde::Deserialize)]
    struct Wire {
        n: usize,
        chain: Vec<Partition>,
        c_star: Vec<i64>,
    }
    let w: Wire = serde_json::from_str(json)?;
    StarredStrongTableau::from_chain(w.n, w.chain, w.c_star).map_err(|e| anyhow!(e))
}
