//! Random-partition search for `k` stable edges.
//!
//! One trial splits the vertices uniformly at random into `k` parts and
//! colours each part with the colour that is most frequent among edges lying
//! inside it. If some colouring has `k` stable edges, one trial reaches `k`
//! with probability at least `k^(-2k)`, so `ceil(k^(2k) ln(1/delta))` trials
//! miss with probability at most `delta`. Success is always certified by the
//! colouring; failure is only a "no" with confidence `1 - delta`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{stable_count, Colour, EdgeColouredGraph, VertexColouring};

pub const DEFAULT_DELTA: f64 = 0.01;

/// Generator for trial `index` under `seed`. Each trial gets its own ChaCha
/// stream, so trials can run in any order or in parallel.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTrial {
    /// Part of each vertex, in `0..k`.
    pub part_of: Vec<usize>,
    /// Most frequent internal edge colour of each part; `None` for parts
    /// without internal edges.
    pub chosen_colour: Vec<Option<Colour>>,
    /// Sum over parts of the chosen colour's internal edge count.
    pub internal: usize,
    /// Stable edges of the induced colouring. At least `internal`, since
    /// edges between parts that chose the same colour are stable too.
    pub achieved: usize,
}

impl PartitionTrial {
    /// Every vertex takes its part's colour; parts without internal edges use colour 1.
    pub fn colouring(&self) -> VertexColouring {
        VertexColouring::new(
            self.part_of
                .iter()
                .map(|&p| self.chosen_colour[p].unwrap_or(1))
                .collect(),
        )
    }
}

/// Runs trial 0 under `seed`.
pub fn run_trial(g: &EdgeColouredGraph, k: usize, seed: u64) -> Result<PartitionTrial> {
    run_trial_indexed(g, k, seed, 0)
}

pub fn run_trial_indexed(
    g: &EdgeColouredGraph,
    k: usize,
    seed: u64,
    index: u64,
) -> Result<PartitionTrial> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let mut rng = trial_rng(seed, index);
    let part_of: Vec<usize> = (0..g.vertex_count()).map(|_| rng.gen_range(0..k)).collect();
    Ok(evaluate_partition(g, k, part_of))
}

/// Picks the best colour per part for a fixed partition.
pub fn evaluate_partition(g: &EdgeColouredGraph, k: usize, part_of: Vec<usize>) -> PartitionTrial {
    let mut internal: Vec<(usize, Colour)> = g
        .edges()
        .iter()
        .filter(|e| part_of[e.u] == part_of[e.v])
        .map(|e| (part_of[e.u], e.colour))
        .collect();
    internal.sort_unstable();

    let mut chosen_colour = vec![None; k];
    let mut best_count = vec![0usize; k];
    let mut i = 0;
    while i < internal.len() {
        let key = internal[i];
        let run = internal[i..].iter().take_while(|&&x| x == key).count();
        let (part, colour) = key;
        // Runs come in ascending colour order, so ties keep the smaller label.
        if run > best_count[part] {
            best_count[part] = run;
            chosen_colour[part] = Some(colour);
        }
        i += run;
    }
    let mut trial = PartitionTrial {
        part_of,
        chosen_colour,
        internal: best_count.iter().sum(),
        achieved: 0,
    };
    trial.achieved = stable_count(g, &trial.colouring());
    trial
}

/// Trials needed for failure probability `delta`: `ceil(k^(2k) ln(1/delta))`.
pub fn repetition_count(k: usize, delta: f64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Parameter(format!("delta must lie in (0, 1), got {delta}")));
    }
    let kf = k as f64;
    let trials = libm::ceil(libm::pow(kf, 2.0 * kf) * libm::log(1.0 / delta));
    // 2^64 is exactly representable; anything at or above it overflows.
    if !trials.is_finite() || trials >= 18_446_744_073_709_551_616.0 {
        return Err(Error::ParameterTooLarge { k: k as u64, trials });
    }
    Ok(trials as u64)
}

/// A colouring with at least `k` stable edges that needs no search: all
/// edges of one colour class are stable at once when their endpoints take
/// that colour. This fires whenever some class has `k` edges, in particular
/// whenever `m > k * t`.
pub fn trivial_kernel_check(g: &EdgeColouredGraph, k: usize) -> Option<VertexColouring> {
    let sizes = g.colour_class_sizes();
    let (colour, &size) = sizes.iter().enumerate().skip(1).max_by_key(|&(c, s)| (s, core::cmp::Reverse(c)))?;
    if size < k {
        return None;
    }
    let colour = colour as Colour;
    let mut f = VertexColouring::uniform(g.vertex_count(), 1);
    for e in g.edges().iter().filter(|e| e.colour == colour) {
        f.set(e.u, colour);
        f.set(e.v, colour);
    }
    Some(f)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableFptConfig {
    pub delta: f64,
    pub seed: u64,
    /// Answer from a single colour class when it is large enough.
    pub use_kernel_shortcut: bool,
}

impl Default for StableFptConfig {
    fn default() -> Self {
        Self { delta: DEFAULT_DELTA, seed: 0, use_kernel_shortcut: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableFptOutcome {
    pub found: bool,
    pub colouring: Option<VertexColouring>,
    /// Trial budget for the configured failure probability.
    pub budget: u64,
    /// Trials actually run; 0 when the shortcut answered.
    pub trials_run: u64,
    /// Best stable-edge count seen in any trial or the shortcut.
    pub best_achieved: usize,
    pub seed: u64,
}

pub fn solve_stable_fpt(
    g: &EdgeColouredGraph,
    k: usize,
    config: &StableFptConfig,
) -> Result<StableFptOutcome> {
    let budget = repetition_count(k, config.delta)?;
    if config.use_kernel_shortcut {
        if let Some(f) = trivial_kernel_check(g, k) {
            let achieved = stable_count(g, &f);
            debug_assert!(achieved >= k);
            return Ok(StableFptOutcome {
                found: true,
                colouring: Some(f),
                budget,
                trials_run: 0,
                best_achieved: achieved,
                seed: config.seed,
            });
        }
    }
    let mut best = 0;
    for index in 0..budget {
        let trial = run_trial_indexed(g, k, config.seed, index)?;
        best = best.max(trial.achieved);
        if trial.achieved >= k {
            let f = trial.colouring();
            debug_assert_eq!(stable_count(g, &f), trial.achieved);
            return Ok(StableFptOutcome {
                found: true,
                colouring: Some(f),
                budget,
                trials_run: index + 1,
                best_achieved: trial.achieved,
                seed: config.seed,
            });
        }
    }
    Ok(StableFptOutcome {
        found: false,
        colouring: None,
        budget,
        trials_run: budget,
        best_achieved: best,
        seed: config.seed,
    })
}
