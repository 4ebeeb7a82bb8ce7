//! Engine dispatch shared by `solve` and `bench`.

use std::time::{Duration, Instant};

use colclust_core::complete::solve_complete;
use colclust_core::fpt_stable::{solve_stable_fpt, StableFptConfig, DEFAULT_DELTA};
use colclust_core::fpt_unstable::solve_unstable_fpt;
use colclust_core::graph::{stability, stable_count};
use colclust_core::mincut::solve_bicoloured;
use colclust_core::oracle::{brute_force_clustering_bounded, search_space, DEFAULT_SEARCH_BOUND};
use colclust_core::{EdgeColouredGraph, VertexColouring};

/// Environment variable overriding the brute-force search-space bound.
pub const ORACLE_BOUND_VAR: &str = "CC_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algo {
    Auto,
    Mincut,
    Complete,
    FptStable,
    FptUnstable,
    Brute,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Mincut => "mincut",
            Algo::Complete => "complete",
            Algo::FptStable => "fpt-stable",
            Algo::FptUnstable => "fpt-unstable",
            Algo::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub algo: Algo,
    pub k: Option<usize>,
    pub delta: f64,
    pub seed: u64,
    pub oracle_bound: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { algo: Algo::Auto, k: None, delta: DEFAULT_DELTA, seed: 0, oracle_bound: DEFAULT_SEARCH_BOUND }
    }
}

/// Reads the oracle bound from the environment, falling back to the default.
pub fn oracle_bound_from_env() -> Result<u128, String> {
    match std::env::var(ORACLE_BOUND_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| format!("{ORACLE_BOUND_VAR}={s} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// Optimization run without a target.
    Solved,
    Yes,
    CertifiedNo,
    /// Randomized search failed; correct with the configured confidence.
    NoWithConfidence,
}

impl Decision {
    pub fn exit_code(self) -> i32 {
        match self {
            Decision::Solved | Decision::Yes => 0,
            Decision::CertifiedNo => 1,
            Decision::NoWithConfidence => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Decision::Solved => "solved",
            Decision::Yes => "yes",
            Decision::CertifiedNo => "no",
            Decision::NoWithConfidence => "no-with-confidence",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Engine that actually ran.
    pub algo: Algo,
    /// Stable edges of the certificate; `None` when there is no certificate.
    pub opt: Option<usize>,
    pub decision: Decision,
    pub colouring: Option<VertexColouring>,
    /// Deleted edge indices, ascending.
    pub deleted: Option<Vec<usize>>,
    /// Engine-specific `key=value` details.
    pub details: Vec<(&'static str, String)>,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn summary_line(&self) -> String {
        let opt = self.opt.map_or_else(|| "none".to_string(), |v| v.to_string());
        format!("opt={opt} algo={} time_ms={}", self.algo.name(), self.elapsed.as_millis())
    }

    pub fn details_line(&self) -> Option<String> {
        if self.details.is_empty() {
            return None;
        }
        let parts: Vec<String> = self.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
        Some(parts.join(" "))
    }
}

/// Engine `auto` would pick, or an explanation of why none applies.
pub fn resolve_auto(g: &EdgeColouredGraph, oracle_bound: u128) -> Result<Algo, String> {
    let used = g.colours_in_use().len();
    if used <= 2 {
        if g.vertex_count() > 0 && g.is_complete() {
            return Ok(Algo::Complete);
        }
        return Ok(Algo::Mincut);
    }
    let space = search_space(g);
    if space <= oracle_bound {
        return Ok(Algo::Brute);
    }
    Err(format!(
        "instance uses {used} edge colours and its search space {space} exceeds the oracle bound \
         {oracle_bound}; pick --algo fpt-stable or --algo fpt-unstable with --k"
    ))
}

/// Runs the requested engine. Errors are usage errors: an engine that does
/// not apply to the instance, a missing `--k`, or an oversized parameter.
pub fn solve(g: &EdgeColouredGraph, opts: &SolveOptions) -> Result<SolveReport, String> {
    let algo = match opts.algo {
        Algo::Auto => resolve_auto(g, opts.oracle_bound)?,
        a => a,
    };
    let need_k = || opts.k.ok_or_else(|| format!("--algo {} needs --k", algo.name()));
    let start = Instant::now();
    let mut report = match algo {
        Algo::Auto => unreachable!("auto resolved above"),
        Algo::Mincut => {
            let sol = solve_bicoloured(g).map_err(|e| format!("mincut: {e}"))?;
            exact(algo, g, sol.colouring, opts.k)
        }
        Algo::Complete => {
            let sol = solve_complete(g).map_err(|e| format!("complete: {e}"))?;
            exact(algo, g, sol.colouring, opts.k)
        }
        Algo::Brute => {
            let res = brute_force_clustering_bounded(g, opts.oracle_bound)
                .map_err(|e| format!("brute: {e}; raise {ORACLE_BOUND_VAR} to allow larger searches"))?;
            exact(algo, g, res.opt_colouring, opts.k)
        }
        Algo::FptStable => {
            let k = need_k()?;
            let config = StableFptConfig { delta: opts.delta, seed: opts.seed, use_kernel_shortcut: true };
            let out = solve_stable_fpt(g, k, &config).map_err(|e| format!("fpt-stable: {e}"))?;
            let details = vec![
                ("k", k.to_string()),
                ("R", out.budget.to_string()),
                ("trials", out.trials_run.to_string()),
                ("seed", out.seed.to_string()),
                ("achieved", out.best_achieved.to_string()),
            ];
            let mut r = match out.colouring {
                Some(f) => with_colouring(algo, g, f, Decision::Yes),
                None => no_certificate(algo, Decision::NoWithConfidence),
            };
            r.details = details;
            r
        }
        Algo::FptUnstable => {
            let k = need_k()?;
            let out = solve_unstable_fpt(g, k).map_err(|e| format!("fpt-unstable: {e}"))?;
            let mut details = vec![("k", k.to_string())];
            match out.verdict {
                Some(v) => {
                    details.push(("n_star", v.n_star.to_string()));
                    details.push(("m_star", v.m_star.to_string()));
                    details.push(("kernel", if v.within_bounds { "within" } else { "exceeded" }.to_string()));
                }
                None => details.push(("kernel", "skipped".to_string())),
            }
            details.push(("cover_weight", out.cover_weight.map_or_else(|| "none".into(), |w| w.to_string())));
            details.push(("search_nodes", out.search_nodes.to_string()));
            let mut r = match (out.colouring, out.deleted_edges) {
                (Some(f), Some(deleted)) => {
                    let mut r = with_colouring(algo, g, f, Decision::Yes);
                    r.deleted = Some(deleted);
                    r
                }
                _ => no_certificate(algo, Decision::CertifiedNo),
            };
            r.details = details;
            r
        }
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn exact(algo: Algo, g: &EdgeColouredGraph, f: VertexColouring, k: Option<usize>) -> SolveReport {
    let mut r = with_colouring(algo, g, f, Decision::Solved);
    if let (Some(k), Some(opt)) = (k, r.opt) {
        r.decision = if opt >= k { Decision::Yes } else { Decision::CertifiedNo };
    }
    r
}

/// Report carrying `f` and, as deletion set, the edges `f` leaves unstable.
fn with_colouring(algo: Algo, g: &EdgeColouredGraph, f: VertexColouring, decision: Decision) -> SolveReport {
    let report = stability(g, &f).expect("engines return colourings of the input graph");
    debug_assert_eq!(report.stable_count, stable_count(g, &f));
    SolveReport {
        algo,
        opt: Some(report.stable_count),
        decision,
        colouring: Some(f),
        deleted: Some(report.unstable),
        details: Vec::new(),
        elapsed: Duration::ZERO,
    }
}

fn no_certificate(algo: Algo, decision: Decision) -> SolveReport {
    SolveReport { algo, opt: None, decision, colouring: None, deleted: None, details: Vec::new(), elapsed: Duration::ZERO }
}
