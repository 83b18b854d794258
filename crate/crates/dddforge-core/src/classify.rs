//! Classification of divisible design Cayley digraphs on up to 27 vertices:
//! for every bundled feasible parameter tuple, search every group of the
//! matching order, merge the isomorphism classes across groups by canonical
//! label, and report per-group attribution.

use crate::canon::CanonicalLabel;
use crate::catalog::catalog;
use crate::search::{search_group, SearchConfig, SearchStats};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// One bundled feasible parameter tuple with the published verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeasibleRow {
    pub params: [usize; 6],
    /// Published Cayley-existence verdict for the tuple.
    pub cayley: bool,
    /// Published number of divisible design Cayley digraphs up to
    /// isomorphism.
    pub ddcd: usize,
}

static FEASIBLE: OnceLock<Vec<FeasibleRow>> = OnceLock::new();

/// The bundled feasible-parameter table, sorted by `(v, k, l1, l2, m, n)`.
/// The divisibility identity `k(k-1) = l1(n-1) + l2*n*(m-1)` is asserted on
/// load for every row.
pub fn feasible_rows() -> &'static [FeasibleRow] {
    FEASIBLE.get_or_init(|| {
        let text = include_str!("../../../data/feasible_params.tsv");
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(fields.len(), 8, "bad feasible row: {line}");
            let nums: Vec<usize> = fields[..6].iter().map(|f| f.parse().unwrap()).collect();
            let params = [nums[0], nums[1], nums[2], nums[3], nums[4], nums[5]];
            let [v, k, l1, l2, m, n] = params;
            assert_eq!(v, m * n, "v != m*n in {line}");
            assert_eq!(
                k * (k - 1),
                l1 * (n - 1) + l2 * n * (m - 1),
                "divisibility identity fails in {line}"
            );
            rows.push(FeasibleRow {
                params,
                cayley: fields[6] == "yes",
                ddcd: fields[7].parse().unwrap(),
            });
        }
        rows.sort_by_key(|r| r.params);
        rows
    })
}

pub fn feasible_rows_for(v: usize) -> Vec<FeasibleRow> {
    feasible_rows()
        .iter()
        .filter(|r| r.params[0] == v)
        .copied()
        .collect()
}

/// A representative of one isomorphism class: its certificate plus a
/// witness `(group, connection set)` that replays it.
#[derive(Clone, Debug)]
pub struct Representative {
    pub label: CanonicalLabel,
    pub group: String,
    pub connection_set: Vec<usize>,
}

/// Classification result for one parameter tuple.
#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub params: [usize; 6],
    /// Groups realizing at least one class, in catalog order, with the
    /// number of classes each realizes.
    pub per_group: Vec<(String, usize)>,
    /// Size of the union of the canonical-label sets over all groups.
    pub total: usize,
    /// One entry per class, sorted by canonical label bytes; the witness is
    /// the first one found in (catalog order, enumeration order).
    pub representatives: Vec<Representative>,
    pub stats: SearchStats,
    pub audit_failures: Vec<String>,
}

/// Classify one parameter tuple over every group of order `v`.
pub fn classify_tuple(params: [usize; 6], cfg: &SearchConfig) -> ClassificationRow {
    let v = params[0];
    let groups = catalog(v).expect("classification is limited to catalog orders");
    let mut per_group = Vec::new();
    let mut reps: BTreeMap<CanonicalLabel, Representative> = BTreeMap::new();
    let mut stats = SearchStats::default();
    let mut audit_failures = Vec::new();
    for g in &groups {
        let out = search_group(g, params, cfg);
        stats.absorb(&out.stats);
        audit_failures.extend(out.audit_failures);
        if !out.hits.is_empty() {
            per_group.push((g.name().to_string(), out.hits.len()));
        }
        for hit in out.hits {
            reps.entry(hit.label.clone())
                .or_insert_with(|| Representative {
                    label: hit.label,
                    group: g.name().to_string(),
                    connection_set: hit.connection_set,
                });
        }
    }
    ClassificationRow {
        params,
        per_group,
        total: reps.len(),
        representatives: reps.into_values().collect(),
        stats,
        audit_failures,
    }
}

/// Classify every bundled tuple with the given vertex count.
pub fn classify(v: usize, cfg: &SearchConfig) -> Vec<ClassificationRow> {
    feasible_rows_for(v)
        .into_iter()
        .map(|r| classify_tuple(r.params, cfg))
        .collect()
}

/// Classify every bundled tuple with `v <= max_v`, rows sorted by
/// `(v, k, l1, l2, m, n)`.
pub fn classify_all(max_v: usize, cfg: &SearchConfig) -> Vec<ClassificationRow> {
    feasible_rows()
        .iter()
        .filter(|r| r.params[0] <= max_v)
        .map(|r| classify_tuple(r.params, cfg))
        .collect()
}
