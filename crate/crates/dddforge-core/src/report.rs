//! Serialization of search and classification results: the JSON result
//! schema, CSV rows pinned to the `(v, k, l1, l2, m, n)` sort, and a
//! markdown table mirroring the published layout for eyeball diffing.

use crate::classify::ClassificationRow;
use crate::search::{SearchOutcome, SearchStats};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
struct StatsJson {
    candidates: u64,
    filter_passed: u64,
    oracle_confirmed: u64,
    seconds: f64,
}

impl StatsJson {
    fn of(stats: &SearchStats, fixed_seconds: bool) -> StatsJson {
        StatsJson {
            candidates: stats.candidates,
            filter_passed: stats.filter_passed,
            oracle_confirmed: stats.oracle_confirmed,
            seconds: if fixed_seconds { 0.0 } else { stats.seconds },
        }
    }
}

#[derive(Serialize)]
struct RepresentativeJson<'a> {
    d6: &'a str,
    group: &'a str,
    connection_set: &'a [usize],
}

#[derive(Serialize)]
struct RowJson<'a> {
    params: [usize; 6],
    per_group: BTreeMap<&'a str, usize>,
    total: usize,
    representatives: Vec<RepresentativeJson<'a>>,
    search_stats: StatsJson,
}

fn row_json<'a>(row: &'a ClassificationRow, fixed_seconds: bool) -> RowJson<'a> {
    RowJson {
        params: row.params,
        per_group: row
            .per_group
            .iter()
            .map(|(n, c)| (n.as_str(), *c))
            .collect(),
        total: row.total,
        representatives: row
            .representatives
            .iter()
            .map(|r| RepresentativeJson {
                d6: &r.label.0,
                group: &r.group,
                connection_set: &r.connection_set,
            })
            .collect(),
        search_stats: StatsJson::of(&row.stats, fixed_seconds),
    }
}

/// JSON array of classification rows. With `fixed_seconds` the timing field
/// is zeroed so that output files are byte-identical across runs.
pub fn classification_json(rows: &[ClassificationRow], fixed_seconds: bool) -> String {
    let body: Vec<RowJson> = rows.iter().map(|r| row_json(r, fixed_seconds)).collect();
    serde_json::to_string_pretty(&body).expect("serializable") + "\n"
}

pub fn search_outcome_json(out: &SearchOutcome, fixed_seconds: bool) -> String {
    #[derive(Serialize)]
    struct OutJson<'a> {
        group: &'a str,
        params: [usize; 6],
        total: usize,
        representatives: Vec<RepresentativeJson<'a>>,
        search_stats: StatsJson,
        audit_failures: &'a [String],
    }
    let body = OutJson {
        group: &out.group_name,
        params: out.params,
        total: out.hits.len(),
        representatives: out
            .hits
            .iter()
            .map(|h| RepresentativeJson {
                d6: &h.label.0,
                group: &out.group_name,
                connection_set: &h.connection_set,
            })
            .collect(),
        search_stats: StatsJson::of(&out.stats, fixed_seconds),
        audit_failures: &out.audit_failures,
    };
    serde_json::to_string_pretty(&body).expect("serializable") + "\n"
}

fn group_breakdown(row: &ClassificationRow) -> String {
    row.per_group
        .iter()
        .map(|(name, count)| format!("{name}={count}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// CSV with one row per parameter tuple: `v,k,l1,l2,m,n,cayley,ddcd,groups`.
pub fn classification_csv(rows: &[ClassificationRow]) -> String {
    let mut out = String::from("v,k,l1,l2,m,n,cayley,ddcd,groups\n");
    for row in rows {
        let [v, k, l1, l2, m, n] = row.params;
        let cayley = if row.total > 0 { "yes" } else { "no" };
        out.push_str(&format!(
            "{v},{k},{l1},{l2},{m},{n},{cayley},{},\"{}\"\n",
            row.total,
            group_breakdown(row)
        ));
    }
    out
}

/// Markdown table mirroring the published column layout.
pub fn classification_markdown(rows: &[ClassificationRow]) -> String {
    let mut out = String::new();
    out.push_str("| v | k | l1 | l2 | m | n | Cayley | #DDCD | groups |\n");
    out.push_str("|---|---|----|----|---|---|--------|-------|--------|\n");
    for row in rows {
        let [v, k, l1, l2, m, n] = row.params;
        let cayley = if row.total > 0 { "yes" } else { "no" };
        out.push_str(&format!(
            "| {v} | {k} | {l1} | {l2} | {m} | {n} | {cayley} | {} | {} |\n",
            row.total,
            group_breakdown(row)
        ));
    }
    out
}

/// Human-readable single-row summary, e.g. for the `search` subcommand.
pub fn outcome_text(out: &SearchOutcome) -> String {
    let [v, k, l1, l2, m, n] = out.params;
    let mut text = format!(
        "search {} for ({v},{k},{l1},{l2},{m},{n}): {} class(es)\n",
        out.group_name,
        out.hits.len()
    );
    for h in &out.hits {
        text.push_str(&format!("  {}  S = {:?}\n", h.label, h.connection_set));
    }
    text.push_str(&format!(
        "  candidates {}, filter passed {}, oracle confirmed {} ({:.3}s)\n",
        out.stats.candidates,
        out.stats.filter_passed,
        out.stats.oracle_confirmed,
        out.stats.seconds
    ));
    for fail in &out.audit_failures {
        text.push_str(&format!("  AUDIT DISAGREEMENT: {fail}\n"));
    }
    text
}
