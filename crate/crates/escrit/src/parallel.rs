//! Parallel drivers for the characterization scan.
//!
//! Work is split into fixed chunks of labelled graphs (or stream lines),
//! each chunk fills its own [`ScanTally`], and the tallies are merged. Tally
//! merging is order-independent, so the report equals the sequential one.

use escrit_core::canon::{mask_count, CanonError, LabeledGraphs, MAX_ENUMERATION_VERTICES};
use escrit_core::parse_graph6;
use escrit_core::scan::{ScanOptions, ScanReport, ScanSource, ScanTally};
use rayon::prelude::*;

const CHUNK: u64 = 1 << 12;

pub fn scan_range_parallel(
    n_min: usize,
    n_max: usize,
    options: &ScanOptions,
) -> Result<ScanReport, CanonError> {
    if n_max > MAX_ENUMERATION_VERTICES {
        return Err(CanonError::TooManyVertices {
            n: n_max,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let jobs: Vec<(usize, u64)> = (n_min..=n_max)
        .flat_map(|n| (0..mask_count(n).div_ceil(CHUNK)).map(move |c| (n, c * CHUNK)))
        .collect();
    let tally = jobs
        .par_iter()
        .map(|&(n, start)| {
            let mut t = ScanTally::new();
            for g in LabeledGraphs::masks(n, start, start + CHUNK).expect("n checked above") {
                t.examine(&g, options);
            }
            t
        })
        .reduce(ScanTally::new, |mut a, b| {
            a.merge(b);
            a
        });
    Ok(tally.finish(ScanSource::Range { n_min, n_max }, options))
}

/// Scans graph6 lines. Lines that fail to parse are reported as errors.
pub fn scan_lines_parallel(lines: &[&str], name: &str, options: &ScanOptions) -> ScanReport {
    let tally = lines
        .par_chunks(256)
        .map(|chunk| {
            let mut t = ScanTally::new();
            for line in chunk {
                let body = line
                    .strip_prefix(escrit_core::graph6::HEADER)
                    .unwrap_or(line);
                if body.is_empty() {
                    continue;
                }
                match parse_graph6(body) {
                    Ok(g) => t.examine(&g, options),
                    Err(e) => t.record_input_error(line, e.to_string()),
                }
            }
            t
        })
        .reduce(ScanTally::new, |mut a, b| {
            a.merge(b);
            a
        });
    tally.finish(
        ScanSource::Stream {
            name: name.to_string(),
        },
        options,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use escrit_core::scan::scan_range;

    #[test]
    fn parallel_equals_sequential() {
        let opts = ScanOptions::default();
        assert_eq!(
            scan_range_parallel(1, 6, &opts).unwrap(),
            scan_range(1, 6, &opts).unwrap()
        );
    }

    #[test]
    fn stream_with_bad_line() {
        let r = scan_lines_parallel(&["DK{", "E@vg", "!!"], "t", &ScanOptions::default());
        assert_eq!(r.records.len(), 2);
        assert_eq!(r.errors.len(), 1);
        assert!(!r.confirmed);
    }

    #[test]
    fn range_bound() {
        assert!(scan_range_parallel(1, 10, &ScanOptions::default()).is_err());
    }
}
