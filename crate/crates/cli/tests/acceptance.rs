//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::time::{Duration, Instant};

use colclust::format::Certificate;
use colclust::verify::verify;
use colclust_core::complete::solve_complete;
use colclust_core::conflict::{build_conflict_graph, build_weighted_conflict_graph, ConflictGraph};
use colclust_core::fpt_stable::{run_trial_indexed, solve_stable_fpt, StableFptConfig};
use colclust_core::fpt_unstable::{condense, kernel_edge_bound, kernel_vertex_bound, minimum_cover_weight, solve_unstable_fpt};
use colclust_core::graph::{components_edge_monochromatic, has_conflict_pair, is_vertex_monochromatic, stable_count};
use colclust_core::instance_gen::{hardness_reduction, random_complete_bicoloured, random_instance, random_subcubic_graph};
use colclust_core::mincut::solve_bicoloured;
use colclust_core::oracle::{
    brute_force_clustering, brute_force_clustering_unrestricted, brute_force_independent_set, brute_force_max_matching,
    brute_force_weighted_clustering, brute_force_weighted_cover, OracleResult, DEFAULT_SEARCH_BOUND,
};
use colclust_core::{Colour, EdgeColouredGraph, VertexColouring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Verdict + 'a>);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Random instance with `n` in `n_range`, any density, `m <= m_cap`.
fn sample(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>, t: Colour, m_cap: usize) -> EdgeColouredGraph {
    let n = rng.gen_range(n_range);
    let m = rng.gen_range(0..=pairs(n).min(m_cap));
    random_instance(n, m, t, rng.gen()).expect("parameters are in range")
}

fn oracle(g: &EdgeColouredGraph) -> OracleResult {
    brute_force_clustering(g).expect("instance within oracle bounds")
}

fn colouring_verifies(g: &EdgeColouredGraph, f: &VertexColouring, k: usize) -> bool {
    f.check_against(g).is_ok() && verify(g, &Certificate::Colouring(f.clone()), Some(k)).accepted()
}

fn mincut_matches_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    let runs = 1000;
    for _ in 0..runs {
        let g = sample(&mut rng, 1..=8, 2, usize::MAX);
        let sol = solve_bicoloured(&g).expect("bicoloured");
        let opt = sol.stable_count(&g);
        if opt != oracle(&g).opt_stable || !colouring_verifies(&g, &sol.colouring, opt) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{runs} bicoloured instances n<=8, {bad} mismatches"))
}

fn complete_matches_oracle() -> Verdict {
    let mut bad = 0;
    let runs = 600;
    for i in 0..runs {
        let n = 2 + i % 6;
        let g = random_complete_bicoloured(n, 1000 + i as u64);
        let sol = solve_complete(&g).expect("complete bicoloured");
        let oracle = brute_force_clustering_unrestricted(&g, DEFAULT_SEARCH_BOUND).expect("small").opt_stable;
        if sol.opt != oracle || stable_count(&g, &sol.colouring) != sol.opt {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{runs} complete graphs n in 2..=7, {bad} mismatches"))
}

fn unit_cover(x: &ConflictGraph) -> u64 {
    brute_force_weighted_cover(x).expect("at most 12 nodes")
}

fn conflict_graph_correspondence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    let runs = 600;
    for _ in 0..runs {
        let t = rng.gen_range(1..=4);
        let g = sample(&mut rng, 1..=9, t, 12);
        let x = build_conflict_graph(&g);
        let opt = oracle(&g).opt_stable;
        let mis = brute_force_independent_set(&x).expect("at most 12 nodes");
        let cover = unit_cover(&x) as usize;
        if opt != mis || g.edge_count() - opt != cover {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{runs} instances m<=12 t<=4, {bad} mismatches"))
}

fn monochromatic_predicates_agree() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = 0;
    let mut holding = 0;
    let runs = 10_000;
    for _ in 0..runs {
        let t = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=10);
        // Sparse graphs dominate so that all three predicates hold often.
        let cap = if rng.gen_bool(0.7) { n } else { pairs(n) };
        let m = rng.gen_range(0..=pairs(n).min(cap));
        let g = random_instance(n, m, t, rng.gen()).unwrap();
        let a = is_vertex_monochromatic(&g);
        let b = !has_conflict_pair(&g);
        let c = components_edge_monochromatic(&g);
        if a != b || b != c {
            bad += 1;
        }
        holding += usize::from(a);
    }
    verdict(bad == 0, format!("{runs} graphs n<=10 ({holding} with all predicates true), {bad} disagreements"))
}

struct UnstableCase {
    g: EdgeColouredGraph,
    min_deletion: usize,
}

fn unstable_corpus() -> Vec<UnstableCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    (0..1000)
        .map(|_| {
            let t = rng.gen_range(1..=3);
            let g = sample(&mut rng, 1..=8, t, usize::MAX);
            let min_deletion = oracle(&g).min_deletion;
            UnstableCase { g, min_deletion }
        })
        .collect()
}

fn unstable_pipeline(corpus: &[UnstableCase]) -> Verdict {
    let mut wrong = 0;
    let mut unverified = 0;
    let mut decisions = 0;
    for case in corpus {
        for k in 0..=case.g.edge_count() {
            let out = solve_unstable_fpt(&case.g, k).expect("valid k");
            decisions += 1;
            if out.yes != (case.min_deletion <= k) {
                wrong += 1;
            }
            if out.yes {
                let deleted = out.deleted_edges.clone().unwrap_or_default();
                let ok = verify(&case.g, &Certificate::Deletion(deleted), Some(k)).accepted();
                unverified += usize::from(!ok);
            }
        }
    }
    verdict(
        wrong == 0 && unverified == 0,
        format!("{} instances n<=8 t<=3, {decisions} decisions, {wrong} wrong, {unverified} unverified deletion sets", corpus.len()),
    )
}

fn kernel_bounds(corpus: &[UnstableCase]) -> Verdict {
    let mut violations = 0;
    let mut largest = (0, 0);
    for case in corpus {
        let gstar = condense(&case.g);
        let (n, m) = (gstar.vertex_count(), gstar.edge_count());
        largest = largest.max((n, m));
        if n as u128 > kernel_vertex_bound(case.min_deletion) || m as u128 > kernel_edge_bound(case.min_deletion) {
            violations += 1;
        }
    }
    verdict(
        violations == 0,
        format!("{} condensed graphs, largest {}x{}, {violations} violations", corpus.len(), largest.0, largest.1),
    )
}

fn weighted_condensation(corpus: &[UnstableCase]) -> Verdict {
    let mut bad = 0;
    for case in corpus {
        let gstar = condense(&case.g);
        let by_oracle = brute_force_weighted_clustering(&gstar, DEFAULT_SEARCH_BOUND).expect("small");
        let (by_cover, _) = minimum_cover_weight(&build_weighted_conflict_graph(&gstar));
        if by_oracle != case.min_deletion as u64 || by_cover != case.min_deletion as u64 {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{} condensed graphs, {bad} weight mismatches", corpus.len()))
}

fn stable_fpt() -> Verdict {
    let mut details = Vec::new();
    let mut pass = true;

    // Soundness over random instances, every k up to 4, both configurations.
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut runs = 0;
    let mut unsound = 0;
    for i in 0..300u64 {
        let t = rng.gen_range(1..=4);
        let g = sample(&mut rng, 1..=8, t, 14);
        let opt = oracle(&g).opt_stable;
        for k in 1..=4 {
            for shortcut in [true, false] {
                let config = StableFptConfig { delta: 0.01, seed: i, use_kernel_shortcut: shortcut };
                let out = solve_stable_fpt(&g, k, &config).unwrap();
                runs += 1;
                let ok = match (&out.colouring, out.found) {
                    (Some(f), true) => colouring_verifies(&g, f, k) && opt >= k,
                    (None, false) => true,
                    _ => false,
                };
                unsound += usize::from(!ok);
            }
        }
    }
    pass &= unsound == 0;
    details.push(format!("soundness {unsound} violations in {runs} runs"));

    // Completeness at k = 3 on oracle-certified yes-instances; half are tight.
    let k = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut found = 0;
    let mut tight = 0;
    let mut instances = 0;
    while instances < 200 {
        let n = rng.gen_range(4..=10);
        let m = rng.gen_range(3..=pairs(n).min(12));
        let rainbow = rng.gen_bool(0.5);
        let t = if rainbow { m as Colour } else { rng.gen_range(2..=4) };
        let g = random_instance(n, m, t, rng.gen()).unwrap();
        let opt = oracle(&g).opt_stable;
        if opt < k {
            continue;
        }
        instances += 1;
        tight += usize::from(opt == k);
        let config = StableFptConfig { delta: 0.01, seed: instances as u64, use_kernel_shortcut: false };
        let out = solve_stable_fpt(&g, k, &config).unwrap();
        if out.found {
            found += 1;
            pass &= colouring_verifies(&g, out.colouring.as_ref().unwrap(), k);
        }
    }
    pass &= found >= 192;
    details.push(format!("completeness {found}/{instances} found (need 192; {tight} with opt exactly 3)"));

    // Single-trial success frequency on a rainbow 6-cycle, whose optimum is 3.
    let cycle = EdgeColouredGraph::new(6, 6, (0..6).map(|i| (i, (i + 1) % 6, i as Colour + 1))).unwrap();
    let trials = 10_000u64;
    let hits = (0..trials)
        .filter(|&i| run_trial_indexed(&cycle, k, 2024, i).unwrap().achieved >= k)
        .count();
    let p0 = (k as f64).powi(-2 * k as i32);
    let sigma = (p0 * (1.0 - p0) / trials as f64).sqrt();
    let rate = hits as f64 / trials as f64;
    pass &= rate >= p0 - 3.0 * sigma && oracle(&cycle).opt_stable == k;
    details.push(format!("trial rate {rate:.5} vs bound {:.5}", p0 - 3.0 * sigma));

    verdict(pass, details.join("; "))
}

fn reduction_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = 0;
    let mut malformed = 0;
    let mut sources = 0;
    let mut skipped = 0;
    while sources < 200 {
        let n = rng.gen_range(1..=8);
        let source = random_subcubic_graph(n, rng.gen_range(0..=3 * n), rng.gen());
        // K4 components have no proper 3-colouring.
        let Ok(red) = hardness_reduction(&source) else {
            skipped += 1;
            continue;
        };
        sources += 1;
        let x = ConflictGraph::from_parts(vec![1; n], source.edges().to_vec()).unwrap();
        let alpha = brute_force_independent_set(&x).unwrap();
        let g = &red.gprime;
        if alpha + source.edges().len() != oracle(g).opt_stable {
            bad += 1;
        }
        let colours_ok = g.colour_count() == 3 && g.colours_in_use().iter().all(|c| (1..=3).contains(c));
        if g.bipartition().is_none() || g.max_degree() > 4 || !colours_ok {
            malformed += 1;
        }
    }
    verdict(
        bad == 0 && malformed == 0,
        format!("{sources} subcubic sources n<=8 ({skipped} without a 3-colouring skipped), {bad} mismatches, {malformed} malformed gadgets"),
    )
}

fn matching_specialization() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = 0;
    let runs = 500;
    for _ in 0..runs {
        let g = sample(&mut rng, 1..=9, 1, 10);
        let rainbow = EdgeColouredGraph::new(
            g.vertex_count(),
            g.edge_count().max(1) as Colour,
            g.edges().iter().enumerate().map(|(i, e)| (e.u, e.v, i as Colour + 1)),
        )
        .unwrap();
        if oracle(&rainbow).opt_stable != brute_force_max_matching(&rainbow).unwrap() {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{runs} rainbow graphs m<=10, {bad} mismatches"))
}

fn median_solve_time(m: usize, repeat: usize) -> Duration {
    let mut times: Vec<Duration> = (0..repeat)
        .map(|r| {
            let g = random_instance(m / 4, m, 2, 11_000 + r as u64).unwrap();
            let start = Instant::now();
            let sol = solve_bicoloured(&g).unwrap();
            let elapsed = start.elapsed();
            assert!(sol.cut_value <= m);
            elapsed
        })
        .collect();
    times.sort();
    times[repeat / 2]
}

fn scaling() -> Verdict {
    let sizes = [1_000usize, 10_000, 100_000];
    let times: Vec<Duration> = sizes.iter().map(|&m| median_solve_time(m, if m < 100_000 { 5 } else { 3 })).collect();
    let xs: Vec<f64> = sizes.iter().map(|&m| (m as f64).ln()).collect();
    let ys: Vec<f64> = times.iter().map(|t| t.as_secs_f64().max(1e-9).ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let largest = times[2].as_secs_f64();
    let shown: Vec<String> = sizes.iter().zip(&times).map(|(m, t)| format!("m={m}: {:.1} ms", t.as_secs_f64() * 1e3)).collect();
    verdict(
        largest < 10.0 && slope < 2.0,
        format!("{}; log-log slope {slope:.2}", shown.join(", ")),
    )
}

fn main() {
    let corpus_start = Instant::now();
    let corpus = unstable_corpus();
    let corpus_time = corpus_start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("mincut engine equals oracle", Box::new(mincut_matches_oracle)),
        ("complete-graph engine equals oracle", Box::new(complete_matches_oracle)),
        ("stable optimum = max independent set of X(G), deletions = min vertex cover", Box::new(conflict_graph_correspondence)),
        ("three monochromatic predicates agree", Box::new(monochromatic_predicates_agree)),
        ("fpt_unstable decisions equal oracle, deletion sets verify", Box::new(|| unstable_pipeline(&corpus))),
        ("condensed graph within kernel bounds", Box::new(|| kernel_bounds(&corpus))),
        ("weighted condensed optimum equals min deletion", Box::new(|| weighted_condensation(&corpus))),
        ("fpt_stable soundness, completeness, trial frequency", Box::new(stable_fpt)),
        ("gadget optimum = alpha + |E|, gadget shape", Box::new(reduction_equivalence)),
        ("rainbow optimum equals maximum matching", Box::new(matching_specialization)),
        ("mincut scaling", Box::new(scaling)),
    ];

    println!("acceptance: shared fpt_unstable corpus built in {:.1} s", corpus_time.as_secs_f64());
    let mut failed = 0;
    for (i, (title, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {title}: {} [{:.1} s]", i + 1, v.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!v.pass);
    }
    if failed > 0 {
        println!("acceptance: {failed} criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}

