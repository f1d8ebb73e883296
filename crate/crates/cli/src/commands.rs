//! Subcommand implementations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::Subcommand;
use rayon::prelude::*;

use kschur_core::affine;
use kschur_core::cores::{self, Abacus, Partition};
use kschur_core::degraphs::{
    build_adeg, build_syt_deg, canonical_form, check_axioms, check_lsp, classify_all_rank4,
    Rank4GraphType, SignedColoredGraph,
};
use kschur_core::involutions::{clone_sst, flatten_sst, squash_sst};
use kschur_core::llt_mac::{self, TupleShape};
use kschur_core::poset::{classify_rank2, cores_by_rank, interval, interval_dot};
use kschur_core::symfun::{kschur, kschur_modified, qsym_to_schur};
use kschur_core::tableaux::enumerate_sst;
use kschur_core::QSym;

use crate::config::RunConfig;
use crate::{emit, parse, render_qsym, render_schur, require_core, skew, Format};

pub fn cores_info(
    lam: &Partition,
    n: Option<usize>,
    k: Option<usize>,
    format: Format,
) -> Result<String> {
    let a = Abacus::from_partition(lam);
    let mut info = serde_json::json!({
        "partition": lam,
        "size": lam.size(),
        "bandwidth": lam.bandwidth(),
        "abacus": a,
        "hooks": lam.hooks(),
    });
    if let Some(n) = n {
        info["n"] = n.into();
        info["is_n_core"] = cores::is_n_core(lam, n).into();
        info["rod_lengths"] = serde_json::to_value(a.rod_profile(n).base_lengths())?;
        if cores::is_n_core(lam, n) {
            info["rank"] = affine::rank(lam, n).into();
            info["affine_window"] =
                serde_json::to_value(affine::affine_of(lam, n).map_err(|e| anyhow!(e))?.window())?;
        }
    }
    if let Some(k) = k {
        let core = cores::rho(lam, k).map_err(|e| anyhow!(e))?;
        info["rho"] = serde_json::to_value(&core)?;
    }
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&info)? + "\n");
    }
    let mut out = String::new();
    writeln!(out, "partition  {lam}")?;
    writeln!(out, "size       {}", lam.size())?;
    writeln!(out, "bandwidth  {}", lam.bandwidth())?;
    writeln!(out, "abacus     {a}")?;
    if let Some(n) = n {
        writeln!(out, "{n}-core     {}", cores::is_n_core(lam, n))?;
        writeln!(
            out,
            "rods 1..{n}  {:?}",
            a.rod_profile(n).base_lengths()
        )?;
        if cores::is_n_core(lam, n) {
            writeln!(out, "rank       {}", affine::rank(lam, n))?;
            writeln!(
                out,
                "window     {:?}",
                affine::affine_of(lam, n).map_err(|e| anyhow!(e))?.window()
            )?;
        }
    }
    if let Some(k) = k {
        writeln!(out, "rho_{k}      {}", cores::rho(lam, k).map_err(|e| anyhow!(e))?)?;
    }
    Ok(out)
}

#[derive(Subcommand)]
pub enum PosetCmd {
    /// Covers above a core.
    Covers {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Hasse diagram of an interval [lower, upper].
    Interval {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lower: String,
        #[arg(long)]
        upper: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Rank-2 interval classification (Table-1 taxonomy).
    Classify2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        lower: String,
        #[arg(long)]
        upper: String,
    },
}

pub fn poset(cmd: PosetCmd, cfg: &RunConfig) -> Result<String> {
    match cmd {
        PosetCmd::Covers { n, lambda, format } => {
            let lam = parse::partition(&lambda)?;
            require_core(&lam, n)?;
            let edges = kschur_core::poset::covers_above(&lam, n);
            if format.unwrap_or(cfg.format) == Format::Json {
                let rows: Vec<serde_json::Value> = edges
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "upper": e.upper,
                            "transposition": {"r": e.transposition.r, "s": e.transposition.s},
                            "ribbons": e.ribbon_count,
                        })
                    })
                    .collect();
                return Ok(serde_json::to_string_pretty(&rows)? + "\n");
            }
            let mut out = String::new();
            for e in edges {
                writeln!(
                    out,
                    "{} -> {}   t_{{{},{}}}  {} ribbon(s)",
                    e.lower, e.upper, e.transposition.r, e.transposition.s, e.ribbon_count
                )?;
            }
            Ok(out)
        }
        PosetCmd::Interval {
            n,
            lower,
            upper,
            format,
        } => {
            let mu = parse::partition(&lower)?;
            let lam = parse::partition(&upper)?;
            require_core(&mu, n)?;
            require_core(&lam, n)?;
            let dag = interval(&mu, &lam, n).map_err(|e| anyhow!(e))?;
            match format.unwrap_or(cfg.format) {
                Format::Dot => Ok(interval_dot(&dag)),
                Format::Json => Ok(serde_json::to_string_pretty(&dag)? + "\n"),
                _ => {
                    let mut out = String::new();
                    writeln!(
                        out,
                        "interval [{mu}, {lam}] in the {n}-core poset: {} elements, {} chains",
                        dag.element_count(),
                        dag.chain_count()
                    )?;
                    for (rank, level) in dag.levels.iter().enumerate() {
                        let names: Vec<String> = level.iter().map(|c| c.to_string()).collect();
                        writeln!(out, "  rank {rank}: {}", names.join(" "))?;
                    }
                    Ok(out)
                }
            }
        }
        PosetCmd::Classify2 { n, lower, upper } => {
            let mu = parse::partition(&lower)?;
            let lam = parse::partition(&upper)?;
            require_core(&mu, n)?;
            require_core(&lam, n)?;
            let t = classify_rank2(&mu, &lam, n).map_err(|e| anyhow!(e))?;
            Ok(format!(
                "[{mu}, {lam}]: {:?}, exchange {:?}, {} residues, {} distinct rod lengths\n",
                t.kind, t.exchange, t.num_residues, t.num_distinct_lengths
            ))
        }
    }
}

pub fn sst_enum(outer: &Partition, inner: &Partition, n: usize, format: Format) -> Result<String> {
    require_core(outer, n)?;
    require_core(inner, n)?;
    skew(outer, inner)?;
    let ssts = enumerate_sst(outer, inner, n).map_err(|e| anyhow!(e))?;
    if format == Format::Json {
        let rows: Vec<serde_json::Value> = ssts
            .iter()
            .map(|s| {
                serde_json::json!({
                    "chain": s.chain(),
                    "c_star": s.c_star(),
                    "spin": s.spin(),
                    "cospin": s.cospin(),
                    "signature": s.signature().to_string(),
                })
            })
            .collect();
        return Ok(serde_json::to_string_pretty(&rows)? + "\n");
    }
    let mut out = String::new();
    writeln!(
        out,
        "{} starred strong tableaux of {} / {} (n = {n})\n",
        ssts.len(),
        outer,
        inner
    )?;
    for s in &ssts {
        writeln!(
            out,
            "{}\nspin {}  cospin {}  signature {}\n",
            s.render(),
            s.spin(),
            s.cospin(),
            s.signature()
        )?;
    }
    Ok(out)
}

pub fn kschur_cmd(
    nu: &Partition,
    k: usize,
    modified: bool,
    basis: &str,
    format: Format,
) -> Result<String> {
    let f: QSym = if modified {
        kschur_modified(nu, k).map_err(|e| anyhow!(e))?
    } else {
        kschur(nu, k).map_err(|e| anyhow!(e))?
    };
    let parts: Vec<String> = nu.parts().iter().map(|p| p.to_string()).collect();
    let name = if modified {
        format!("\\tilde{{s}}^{{({k})}}_{{({})}}", parts.join(","))
    } else {
        format!("s^{{({k})}}_{{({})}}", parts.join(","))
    };
    let mut out = String::new();
    if basis == "qsym" || basis == "both" {
        out.push_str(&render_qsym(&f, &name, format)?);
    }
    if basis == "schur" || basis == "both" {
        let schur = qsym_to_schur(&f).map_err(|e| anyhow!(e))?;
        out.push_str(&render_schur(&schur, &name, format)?);
    }
    if !(basis == "qsym" || basis == "schur" || basis == "both") {
        bail!("--basis must be qsym, schur, or both");
    }
    Ok(out)
}

#[derive(Subcommand)]
pub enum DegCmd {
    /// Build the affine graph (or the standard SYT graph) and export it.
    Build {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Build the standard dual equivalence graph on SYT instead.
        #[arg(long)]
        syt: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Verify D-graph axioms and local Schur positivity; exits 1 on failure.
    Verify {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long)]
        syt: bool,
        /// Comma-separated axiom list, e.g. 1,2,3,5.
        #[arg(long, default_value = "1,2,3,5")]
        axioms: String,
        /// Also check LSP_h for this h.
        #[arg(long)]
        lsp: Option<usize>,
    },
    /// Census of component isomorphism types at a given rank.
    Classify {
        #[arg(long)]
        rank: usize,
        /// Largest n to scan (default from config).
        #[arg(long)]
        max_n: Option<usize>,
        /// Abort after this many intervals (census is open-ended).
        #[arg(long)]
        max_count: Option<u64>,
        /// Include skew intervals up to this ambient rank.
        #[arg(long)]
        max_ambient: Option<usize>,
    },
}

fn build_graph(
    n: Option<usize>,
    shape: &str,
    inner: &str,
    syt: bool,
) -> Result<SignedColoredGraph> {
    let outer = parse::partition(shape)?;
    let inner = parse::partition(inner)?;
    if syt {
        return Ok(build_syt_deg(&skew(&outer, &inner)?));
    }
    let n = n.ok_or_else(|| anyhow!("--n is required unless --syt is set"))?;
    require_core(&outer, n)?;
    require_core(&inner, n)?;
    let (g, _) = build_adeg(&outer, &inner, n).map_err(|e| anyhow!(e))?;
    Ok(g)
}

pub fn deg(cmd: DegCmd, cfg: &RunConfig, out_path: &Option<PathBuf>) -> Result<ExitCode> {
    match cmd {
        DegCmd::Build {
            n,
            shape,
            inner,
            syt,
            format,
        } => {
            let g = build_graph(n, &shape, &inner, syt)?;
            let text = match format.unwrap_or(cfg.format) {
                Format::Json => serde_json::to_string_pretty(&g)? + "\n",
                Format::Dot => g.to_dot("deg"),
                _ => format!("{g}"),
            };
            emit(out_path, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        DegCmd::Verify {
            n,
            shape,
            inner,
            syt,
            axioms,
            lsp,
        } => {
            let g = build_graph(n, &shape, &inner, syt)?;
            let which: Result<Vec<u8>, _> =
                axioms.split(',').map(|a| a.trim().parse::<u8>()).collect();
            let mut report = check_axioms(&g, &which.map_err(|e| anyhow!("bad --axioms: {e}"))?);
            if let Some(h) = lsp {
                report.results.push(check_lsp(&g, h));
            }
            let mut text = format!(
                "graph on {} vertices, degree {}\n{report}",
                g.vertex_count(),
                g.degree
            );
            let ok = report.all_pass();
            text.push_str(if ok { "VERIFIED\n" } else { "FAILED\n" });
            emit(out_path, &text)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        DegCmd::Classify {
            rank,
            max_n,
            max_count,
            max_ambient,
        } => {
            let max_n = max_n.unwrap_or(cfg.census_max_n);
            let max_count = max_count.unwrap_or(cfg.census_max_count);
            let text = census(rank, max_n, max_count, max_ambient.unwrap_or(rank + 2))?;
            emit(out_path, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Open-ended census of component isomorphism types over intervals of the
/// given rank: straight shapes of that rank plus skew intervals up to the
/// ambient bound, for 2 <= n <= max_n. Never claims completeness.
fn census(rank: usize, max_n: usize, max_count: u64, max_ambient: usize) -> Result<String> {
    let mut intervals: Vec<(usize, Partition, Partition)> = Vec::new();
    for n in 2..=max_n {
        let levels = cores_by_rank(n, max_ambient.max(rank));
        for (rm, mus) in levels.iter().enumerate() {
            if rm + rank >= levels.len() {
                break;
            }
            for mu in mus {
                for nu in &levels[rm + rank] {
                    if mu.contained_in(nu) {
                        intervals.push((n, nu.clone(), mu.clone()));
                    }
                }
            }
        }
    }
    let truncated = (intervals.len() as u64) > max_count;
    intervals.truncate(max_count as usize);
    type Comp = (usize, kschur_core::degraphs::CanonicalCode, Vec<Rank4GraphType>);
    let results: Vec<(usize, String, Vec<Comp>)> = intervals
        .par_iter()
        .map(|(n, nu, mu)| {
            let (g, _) = build_adeg(nu, mu, *n).expect("valid interval");
            let rank4 = if rank == 4 {
                classify_all_rank4(&g)
                    .expect("rank-4 components within the seven types")
                    .into_iter()
                    .map(|(_, ty)| ty)
                    .collect()
            } else {
                Vec::new()
            };
            let comps: Vec<Comp> = g
                .components()
                .into_iter()
                .map(|c| (c.vertex_count(), canonical_form(&c), rank4.clone()))
                .collect();
            (*n, format!("n={n} [{mu}, {nu}]"), comps)
        })
        .collect();
    let mut types: BTreeMap<kschur_core::degraphs::CanonicalCode, (usize, u64, String)> =
        BTreeMap::new();
    let mut rank4_seen: BTreeSet<Rank4GraphType> = BTreeSet::new();
    for (_, name, comps) in &results {
        for (size, code, rank4) in comps {
            let entry = types
                .entry(code.clone())
                .or_insert_with(|| (*size, 0, name.clone()));
            entry.1 += 1;
            rank4_seen.extend(rank4.iter().copied());
        }
    }
    let mut out = String::new();
    writeln!(
        out,
        "census over rank-{rank} intervals, n <= {max_n}: {} intervals scanned{}",
        results.len(),
        if truncated { " (truncated)" } else { "" }
    )?;
    writeln!(
        out,
        "{} distinct component isomorphism types (open-ended; bounds are configuration, not a completeness claim)",
        types.len()
    )?;
    let mut rows: Vec<(usize, u64, String)> = types.into_values().collect();
    rows.sort();
    for (size, count, first) in rows {
        writeln!(out, "  {size:>3} vertices  x{count:<6} first seen {first}")?;
    }
    if rank == 4 {
        writeln!(out, "rank-4 reference types observed: {rank4_seen:?}")?;
    }
    Ok(out)
}

pub fn llt_cmd(
    shape: &TupleShape,
    expand_k: Option<usize>,
    max_size: usize,
    format: Format,
) -> Result<String> {
    let f: QSym = llt_mac::llt(shape, max_size).map_err(|e| anyhow!(e))?;
    let mut out = render_qsym(&f, &format!("LLT_{shape}"), format)?;
    let schur = qsym_to_schur(&f).map_err(|e| anyhow!(e))?;
    out.push_str(&render_schur(&schur, &format!("LLT_{shape}"), format)?);
    if let Some(k) = expand_k {
        match llt_mac::expand_into_modified_kschur(&f, k) {
            Ok(exp) => {
                writeln!(out, "modified {k}-Schur expansion:")?;
                for (nu, c) in &exp.terms {
                    writeln!(out, "  {nu}  {c}")?;
                }
                writeln!(
                    out,
                    "coefficients in N[q]: {}",
                    if exp.is_positive() { "yes" } else { "NO" }
                )?;
            }
            Err(e) => writeln!(out, "expansion failed: {e}")?,
        }
    }
    Ok(out)
}

pub fn macdonald_cmd(
    mu: &Partition,
    basis: &str,
    max_size: usize,
    format: Format,
) -> Result<String> {
    let f: QSym = llt_mac::macdonald(mu, max_size).map_err(|e| anyhow!(e))?;
    let parts: Vec<String> = mu.parts().iter().map(|p| p.to_string()).collect();
    let name = format!("\\tilde{{H}}_{{({})}}", parts.join(","));
    let mut out = String::new();
    if basis == "qsym" || basis == "both" {
        out.push_str(&render_qsym(&f, &name, format)?);
    }
    if basis == "schur" || basis == "both" {
        let schur = qsym_to_schur(&f).map_err(|e| anyhow!(e))?;
        out.push_str(&render_schur(&schur, &name, format)?);
    }
    Ok(out)
}

pub fn identities(
    staircase: Option<usize>,
    hag_llt: Option<String>,
    bandwidth: bool,
    k: Option<usize>,
    lambda: Option<String>,
) -> Result<ExitCode> {
    let mut ran = false;
    let mut ok = true;
    if let Some(max_m) = staircase {
        ran = true;
        for m in 1..=max_m {
            let l: QSym = llt_mac::llt(&TupleShape::singletons(m), max_m.max(9))
                .map_err(|e| anyhow!(e))?;
            let h: QSym = llt_mac::macdonald(&Partition::new(vec![m]), max_m.max(9))
                .map_err(|e| anyhow!(e))?;
            let s: QSym =
                kschur_modified(&Partition::new(vec![1; m]), 1).map_err(|e| anyhow!(e))?;
            let pass = l == h && h == s;
            ok &= pass;
            println!(
                "staircase m={m}: LLT_(1)^m = H~_(m) = s~^(1)_(1^m)  {}",
                if pass { "PASS" } else { "FAIL" }
            );
        }
    }
    if let Some(mu) = hag_llt {
        ran = true;
        let mu = parse::partition(&mu)?;
        let lhs: QSym = llt_mac::macdonald(&mu, 9).map_err(|e| anyhow!(e))?;
        let rhs: QSym = llt_mac::mac_llt_rhs(&mu, 9).map_err(|e| anyhow!(e))?;
        let pass = lhs == rhs;
        ok &= pass;
        println!(
            "hag-llt mu={mu}: H~ = sum_D t^maj q^(a-a(D)) LLT  {}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    if bandwidth {
        ran = true;
        let lam = parse::partition(&lambda.ok_or_else(|| anyhow!("--bandwidth needs --lambda"))?)?;
        let k = k.ok_or_else(|| anyhow!("--bandwidth needs --k"))?;
        if lam.bandwidth() > k {
            bail!("bandwidth({lam}) = {} exceeds k = {k}", lam.bandwidth());
        }
        let f: QSym = kschur(&lam, k).map_err(|e| anyhow!(e))?;
        let pass = f == kschur_core::symfun::schur_to_qsym(&lam);
        ok &= pass;
        println!(
            "bandwidth lam={lam} k={k}: s^(k) = s  {}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    if !ran {
        bail!("choose at least one of --staircase, --hag-llt, --bandwidth");
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn flatten_cmd(
    n: usize,
    rod: i64,
    lambda: Option<String>,
    sst_json: Option<String>,
    format: Format,
) -> Result<String> {
    match (lambda, sst_json) {
        (Some(lam), None) => {
            let lam = parse::partition(&lam)?;
            require_core(&lam, n)?;
            let flat = cores::flatten_core(&lam, n, rod);
            if format == Format::Json {
                Ok(serde_json::to_string(&flat)? + "\n")
            } else {
                Ok(format!("{lam} flattened at rod {rod}: {flat} (as a {}-core)\n", n - 1))
            }
        }
        (None, Some(json)) => {
            let s = parse::sst(&json)?;
            if s.n() != n {
                bail!("--n disagrees with the tableau");
            }
            let flat = flatten_sst(&s, rod).map_err(|e| anyhow!(e))?;
            if format == Format::Json {
                Ok(serde_json::to_string_pretty(&serde_json::json!({
                    "n": flat.n(), "chain": flat.chain(), "c_star": flat.c_star(),
                }))? + "\n")
            } else {
                Ok(format!(
                    "{}\nsignature {} (preserved: {})\n",
                    flat.render(),
                    flat.signature(),
                    flat.signature() == s.signature()
                ))
            }
        }
        _ => bail!("provide exactly one of --lambda or --sst-json"),
    }
}

pub fn clone_cmd(
    n: usize,
    index: i64,
    lambda: Option<String>,
    sst_json: Option<String>,
    squash: bool,
    format: Format,
) -> Result<String> {
    match (lambda, sst_json) {
        (Some(lam), None) => {
            let lam = parse::partition(&lam)?;
            require_core(&lam, n)?;
            if squash {
                let out = cores::squash_core(&lam, n, index)
                    .ok_or_else(|| anyhow!("block at {index} is not a clone of its neighbor"))?;
                return Ok(format!("{lam} squashed at {index}: {out}\n"));
            }
            let out = cores::clone_core(&lam, n, index);
            if format == Format::Json {
                Ok(serde_json::to_string_pretty(&serde_json::json!({
                    "partition": out.partition, "squash_index": out.squash_index,
                }))? + "\n")
            } else {
                Ok(format!(
                    "{lam} cloned at {index}: {} (squash index {})\n",
                    out.partition, out.squash_index
                ))
            }
        }
        (None, Some(json)) => {
            let s = parse::sst(&json)?;
            if s.n() != n {
                bail!("--n disagrees with the tableau");
            }
            if squash {
                let out = squash_sst(&s, index).map_err(|e| anyhow!(e))?;
                return Ok(format!("{}\n", out.render()));
            }
            let out = clone_sst(&s, index).map_err(|e| anyhow!(e))?;
            Ok(format!(
                "{}\nsquash index {}  signature preserved: {}\n",
                out.sst.render(),
                out.squash_index,
                out.sst.signature() == s.signature()
            ))
        }
        _ => bail!("provide exactly one of --lambda or --sst-json"),
    }
}

