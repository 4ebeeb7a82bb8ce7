//! Corpus benchmarking with CSV output.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use crate::format::parse_instance;
use crate::solve::{solve, Decision, SolveOptions};

pub const CSV_HEADER: [&str; 6] = ["instance", "n", "m", "algo", "result", "time_ms"];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenchSummary {
    pub rows: usize,
    /// Files skipped, with the reason.
    pub skipped: Vec<(PathBuf, String)>,
}

/// Regular files directly inside `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

pub fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    let n = times.len();
    if n == 0 {
        Duration::ZERO
    } else if n % 2 == 1 {
        times[n / 2]
    } else {
        (times[n / 2 - 1] + times[n / 2]) / 2
    }
}

/// Solves every instance in `dir` `repeat` times and writes one CSV row per
/// instance with the median wall-clock time. Unreadable or unsolvable files
/// are reported to `log` and skipped.
pub fn bench(
    dir: &Path,
    opts: &SolveOptions,
    repeat: usize,
    out: impl Write,
    mut log: impl Write,
) -> io::Result<BenchSummary> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(CSV_HEADER)?;
    let mut summary = BenchSummary::default();
    for path in corpus_files(dir)? {
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| parse_instance(&text).map_err(|e| e.to_string()));
        let g = match parsed {
            Ok(g) => g,
            Err(reason) => {
                writeln!(log, "skipping {}: {reason}", path.display())?;
                summary.skipped.push((path, reason));
                continue;
            }
        };
        let mut times = Vec::with_capacity(repeat.max(1));
        let mut last = None;
        for _ in 0..repeat.max(1) {
            match solve(&g, opts) {
                Ok(r) => {
                    times.push(r.elapsed);
                    last = Some(r);
                }
                Err(reason) => {
                    last = None;
                    writeln!(log, "skipping {}: {reason}", path.display())?;
                    summary.skipped.push((path.clone(), reason));
                    break;
                }
            }
        }
        let Some(report) = last else { continue };
        let result = match (report.decision, report.opt) {
            (Decision::Solved, Some(opt)) => opt.to_string(),
            (d, _) => d.name().to_string(),
        };
        let name = path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        let time_ms = median(&mut times).as_secs_f64() * 1e3;
        csv.write_record([
            name,
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            report.algo.name().to_string(),
            result,
            format!("{time_ms:.3}"),
        ])?;
        summary.rows += 1;
    }
    csv.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        let ms = Duration::from_millis;
        assert_eq!(median(&mut []), Duration::ZERO);
        assert_eq!(median(&mut [ms(5), ms(1), ms(3)]), ms(3));
        assert_eq!(median(&mut [ms(4), ms(1), ms(3), ms(2)]), Duration::from_micros(2500));
    }
}
