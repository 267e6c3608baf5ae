//! Human-readable scan summary.

use std::collections::BTreeMap;
use std::fmt::Write;

use escrit_core::scan::{ScanReport, ScanSource};
use escrit_core::FamilyTag;

const TAGS: [FamilyTag; 5] = [
    FamilyTag::A,
    FamilyTag::B,
    FamilyTag::C,
    FamilyTag::D,
    FamilyTag::E,
];

pub fn summary_table(r: &ScanReport) -> String {
    let mut s = String::new();
    let source = match &r.source {
        ScanSource::Range { n_min, n_max } => format!("labelled graphs, n = {n_min}..={n_max}"),
        ScanSource::Stream { name } => format!("graph6 stream {name}"),
    };
    let c = &r.counts;
    writeln!(s, "scan of {source}").unwrap();
    for (label, value) in [
        ("graphs examined", c.examined),
        ("isolated vertex, skipped", c.isolated_skipped),
        ("bipartite, skipped", c.bipartite_skipped),
        ("chi = 3, checked", c.chi3_examined),
        ("critical (labelled)", c.critical_labeled),
        ("classified (labelled)", c.classified_labeled),
        ("errors", c.errors),
    ] {
        writeln!(s, "  {label:<26}{value:>12}").unwrap();
    }

    let mut by_n: BTreeMap<usize, [usize; 6]> = BTreeMap::new();
    for rec in &r.records {
        let row = by_n.entry(rec.n).or_default();
        row[0] += 1;
        if let Some(i) = rec.tag.and_then(|t| TAGS.iter().position(|&x| x == t)) {
            row[i + 1] += 1;
        }
    }
    writeln!(s).unwrap();
    writeln!(
        s,
        "  {:>3} {:>9} {:>5} {:>5} {:>5} {:>5} {:>5}",
        "n", "critical", "A", "B", "C", "D", "E"
    )
    .unwrap();
    for (n, row) in &by_n {
        writeln!(
            s,
            "  {:>3} {:>9} {:>5} {:>5} {:>5} {:>5} {:>5}",
            n, row[0], row[1], row[2], row[3], row[4], row[5]
        )
        .unwrap();
    }

    writeln!(s).unwrap();
    for rec in &r.records {
        let spec = rec
            .spec
            .as_ref()
            .map_or("-".to_string(), |sp| sp.to_string());
        let cycles = if rec.odd_cycles.saturated {
            format!(">={}", rec.odd_cycles.count)
        } else {
            rec.odd_cycles.count.to_string()
        };
        writeln!(
            s,
            "  {:<12} {:<24} odd cycles {}",
            rec.canonical, spec, cycles
        )
        .unwrap();
    }

    let expected = r.overlaps.iter().filter(|o| o.expected).count();
    writeln!(s).unwrap();
    writeln!(s, "  violations          {}", r.violations.len()).unwrap();
    writeln!(s, "  lemma failures      {}", r.lemma_failures.len()).unwrap();
    writeln!(s, "  threshold failures  {}", r.threshold_failures.len()).unwrap();
    writeln!(
        s,
        "  overlaps            {} ({} expected)",
        r.overlaps.len(),
        expected
    )
    .unwrap();
    writeln!(
        s,
        "verdict: {}",
        if r.confirmed {
            "confirmed"
        } else {
            "NOT confirmed"
        }
    )
    .unwrap();
    s
}
