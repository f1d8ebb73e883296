//! Run configuration: optional TOML file, flags override, environment
//! variable for default parallelism.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

use crate::Format;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub threads: usize,
    pub census_max_n: usize,
    pub census_max_count: u64,
}

#[derive(Deserialize, Default)]
struct FileConfig {
    format: Option<String>,
    threads: Option<usize>,
    census: Option<CensusConfig>,
}

#[derive(Deserialize, Default)]
struct CensusConfig {
    max_n: Option<usize>,
    max_count: Option<u64>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>, threads_flag: Option<usize>) -> Result<RunConfig> {
        let file: FileConfig = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading config {}", p.display()))?;
                toml::from_str(&text).with_context(|| format!("parsing {}", p.display()))?
            }
            None => FileConfig::default(),
        };
        let format = match file.format.as_deref() {
            None => Format::Text,
            Some("text") => Format::Text,
            Some("json") => Format::Json,
            Some("dot") => Format::Dot,
            Some("latex") => Format::Latex,
            Some(other) => anyhow::bail!("unknown format {other:?} in config"),
        };
        let env_threads = std::env::var("KSCHUR_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok());
        let threads = threads_flag
            .or(env_threads)
            .or(file.threads)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let census = file.census.unwrap_or_default();
        Ok(RunConfig {
            format,
            threads,
            census_max_n: census.max_n.unwrap_or(5),
            census_max_count: census.max_count.unwrap_or(2000),
        })
    }
}
