//! Exhaustive, symmetry-aware search for connection sets making `Cay(G, S)`
//! a divisible design digraph with given parameters, plus Cayley-realization
//! testing of arbitrary digraphs and the probe for the skew-BGW conjecture.
//!
//! The enumeration walks pair-choice vectors rather than k-subsets, which
//! bakes the skew constraint into the search space. Candidates passing the
//! profile filter are materialized and confirmed by the two-Gram-matrix
//! oracle; audit mode additionally runs the oracle on every candidate and
//! records any filter/oracle disagreement instead of guessing which side is
//! right.

use crate::canon::{canonical_label, CanonicalLabel};
use crate::catalog;
use crate::connset::{binomial, multiset_profile, profile_verdicts, ConnSetIter};
use crate::constructions::bgw_ddd;
use crate::ddd::{ddd_check, DddCheck};
use crate::digraph::{cayley_digraph, Digraph};
use crate::group::{group_automorphisms, Group};
use std::path::Path;

#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub candidates: u64,
    pub filter_passed: u64,
    pub oracle_confirmed: u64,
    pub seconds: f64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.candidates += other.candidates;
        self.filter_passed += other.filter_passed;
        self.oracle_confirmed += other.oracle_confirmed;
        self.seconds += other.seconds;
    }
}

/// One isomorphism class found over a group: its certificate and the first
/// witness connection set in enumeration order.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub label: CanonicalLabel,
    pub connection_set: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub group_name: String,
    pub params: [usize; 6],
    /// Isomorphism classes, sorted by canonical label bytes.
    pub hits: Vec<SearchHit>,
    pub stats: SearchStats,
    /// Filter/oracle disagreements seen in audit mode; always empty unless
    /// the subgroup criterion fails on some group.
    pub audit_failures: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Enumerate connection sets up to the action of `Aut(G)`; results are
    /// identical to the unpruned search after label deduplication.
    pub prune: bool,
    /// Run the oracle on every candidate and compare with the filter.
    /// `None` resolves to "on" for `v <= 16`.
    pub audit: Option<bool>,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            prune: true,
            audit: None,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn audit_on(&self, v: usize) -> bool {
        self.audit.unwrap_or(v <= 16)
    }
}

/// Wall-clock timing where the platform provides it; wasm targets report
/// zero rather than panicking.
struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Stopwatch {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed_seconds(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed().as_secs_f64()
        }
        #[cfg(target_arch = "wasm32")]
        {
            0.0
        }
    }
}

/// Search one group for all connection sets realizing the parameter tuple,
/// deduplicated by canonical label.
pub fn search_group(group: &Group, params: [usize; 6], cfg: &SearchConfig) -> SearchOutcome {
    let start = Stopwatch::start();
    let v = group.order();
    let k = params[1];
    let audit = cfg.audit_on(v);
    let auts = if cfg.prune {
        group_automorphisms(group)
    } else {
        Vec::new()
    };

    let pairs = group.inverse_pairs().len();
    let total_combs = binomial(pairs, k);
    let workers = cfg.workers.max(1).min(total_combs.max(1) as usize);

    let mut worker_results: Vec<WorkerResult> = Vec::with_capacity(workers);
    if workers <= 1 {
        worker_results.push(search_range(group, params, audit, &auts, 0, total_combs));
    } else {
        let chunk = total_combs.div_ceil(workers as u64);
        std::thread::scope(|scope| {
            let mut handles = Vec::with_capacity(workers);
            for w in 0..workers as u64 {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total_combs);
                let auts = &auts;
                handles.push(scope.spawn(move || search_range(group, params, audit, auts, lo, hi)));
            }
            for h in handles {
                worker_results.push(h.join().expect("search worker panicked"));
            }
        });
    }

    // merge in rank order so the first witness per label is the global
    // enumeration-order first, independent of the worker count
    let mut stats = SearchStats::default();
    let mut audit_failures = Vec::new();
    let mut hits: Vec<SearchHit> = Vec::new();
    for wr in worker_results {
        stats.absorb(&wr.stats);
        audit_failures.extend(wr.audit_failures);
        for hit in wr.hits {
            if !hits.iter().any(|h| h.label == hit.label) {
                hits.push(hit);
            }
        }
    }
    hits.sort_by(|a, b| a.label.cmp(&b.label));
    stats.seconds = start.elapsed_seconds();
    SearchOutcome {
        group_name: group.name().to_string(),
        params,
        hits,
        stats,
        audit_failures,
    }
}

struct WorkerResult {
    hits: Vec<SearchHit>,
    stats: SearchStats,
    audit_failures: Vec<String>,
}

fn search_range(
    group: &Group,
    params: [usize; 6],
    audit: bool,
    auts: &[Vec<usize>],
    lo: u64,
    hi: u64,
) -> WorkerResult {
    let v = group.order();
    let k = params[1];
    let [_, _, l1, l2, _, n] = params;
    let mut stats = SearchStats::default();
    let mut audit_failures = Vec::new();
    let mut hits: Vec<SearchHit> = Vec::new();
    let mut counts = vec![0usize; v];
    let mut level = Vec::with_capacity(n);

    for cs in ConnSetIter::with_range(group, k, lo, hi) {
        let s = &cs.elements;
        stats.candidates += 1;

        // SS^-1 profile
        counts.iter_mut().for_each(|c| *c = 0);
        for &a in s {
            for &b in s {
                counts[group.mul(a, group.inv(b))] += 1;
            }
        }
        // two values off the identity, the l1 level set of size n-1, and
        // l1-level union identity closed under multiplication
        let mut pass = true;
        level.clear();
        level.push(0);
        for g in 1..v {
            let c = counts[g];
            if c == l1 {
                level.push(g);
            } else if c != l2 {
                pass = false;
                break;
            }
        }
        let pass = pass && l1 != l2 && level.len() == n && group.is_subgroup(&level);

        if audit {
            let algebraic = profile_verdicts(group, s);
            let oracle = match ddd_check(&cayley_digraph(group, s).expect("admissible set")) {
                DddCheck::Ddd(cands) => Some(cands.iter().map(|p| p.tuple()).collect::<Vec<_>>()),
                DddCheck::NotDdd(_) => None,
            };
            if algebraic != oracle {
                audit_failures.push(format!(
                    "group {} S={:?}: filter says {:?}, oracle says {:?}",
                    group.name(),
                    s,
                    algebraic,
                    oracle
                ));
            }
        }

        if !pass {
            continue;
        }
        stats.filter_passed += 1;

        if !auts.is_empty() && !is_orbit_minimal(s, auts) {
            continue;
        }

        let d = cayley_digraph(group, s).expect("admissible set");
        if !ddd_check(&d).matches(params) {
            continue;
        }
        stats.oracle_confirmed += 1;
        let label = canonical_label(&d);
        if !hits.iter().any(|h| h.label == label) {
            hits.push(SearchHit {
                label,
                connection_set: s.clone(),
            });
        }
    }
    WorkerResult {
        hits,
        stats,
        audit_failures,
    }
}

/// Keep only the lexicographically least set of its `Aut(G)` orbit.
fn is_orbit_minimal(s: &[usize], auts: &[Vec<usize>]) -> bool {
    let mut image = Vec::with_capacity(s.len());
    for sigma in auts {
        image.clear();
        image.extend(s.iter().map(|&x| sigma[x]));
        image.sort_unstable();
        if image.as_slice() < s {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Cayley realization
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    OrderMismatch { digraph: usize, group: usize },
}

impl std::fmt::Display for SearchError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchError::OrderMismatch { digraph, group } => {
                write!(
                    f,
                    "digraph has {digraph} vertices but the group has order {group}"
                )
            }
        }
    }
}

impl std::error::Error for SearchError {}

/// Find a connection set `S` with `Cay(G, S)` isomorphic to `D`, searching
/// the admissible (skew) sets of the matching size, or `None`. Digraphs
/// with 2-cycles are never Cayley digraphs of an admissible set, so they
/// report `None` immediately.
pub fn is_cayley_over(d: &Digraph, group: &Group) -> Result<Option<Vec<usize>>, SearchError> {
    let v = d.v();
    if v != group.order() {
        return Err(SearchError::OrderMismatch {
            digraph: v,
            group: group.order(),
        });
    }
    if !d.is_skew() {
        return Ok(None);
    }
    let k = d.out_degree(0);
    if (0..v).any(|x| d.out_degree(x) != k || d.in_degree(x) != k) {
        return Ok(None);
    }
    let target = canonical_label(d);

    // a proper DDD target lets the subgroup filter cut the enumeration
    let filter_params: Option<[usize; 6]> = match ddd_check(d) {
        DddCheck::Ddd(cands) => cands.iter().find(|p| p.proper()).map(|p| p.tuple()),
        DddCheck::NotDdd(_) => None,
    };

    // off-diagonal common-out multiset of D, for the cheap pre-test below
    let mut d_gram: Vec<usize> = Vec::with_capacity(v * (v - 1));
    for x in 0..v {
        for y in 0..v {
            if x != y {
                d_gram.push(d.common_out(x, y));
            }
        }
    }
    d_gram.sort_unstable();

    for cs in ConnSetIter::new(group, k) {
        let s = &cs.elements;
        if let Some(p) = filter_params {
            if !crate::connset::algebraic_filter(group, s, p) {
                continue;
            }
        } else {
            // vertex-transitivity makes the Gram multiset v copies of the
            // off-identity profile
            let counts = multiset_profile(group, s);
            let mut cand: Vec<usize> = Vec::with_capacity(v * (v - 1));
            for g in 1..v {
                for _ in 0..v {
                    cand.push(counts[g]);
                }
            }
            cand.sort_unstable();
            if cand != d_gram {
                continue;
            }
        }
        let c = cayley_digraph(group, s).expect("admissible set");
        if canonical_label(&c) == target {
            return Ok(Some(s.clone()));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Conjecture probe
// ---------------------------------------------------------------------------

/// Outcome of probing the skew-BGW digraph on `n^2 - 1` vertices for Cayley
/// realizations.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub n: usize,
    pub params: [usize; 6],
    pub ddd_verified: bool,
    pub order: usize,
    /// Groups of order `n^2 - 1` that were available to test.
    pub groups_tried: Vec<String>,
    /// Groups realizing the digraph, with a witness connection set each.
    pub realizations: Vec<(String, Vec<usize>)>,
    /// False when the order exceeds the catalog and no user-supplied
    /// Cayley tables were found.
    pub groups_available: bool,
}

/// Build the BGW digraph for odd prime power `n`, verify its parameters,
/// and test it against every available group of order `n^2 - 1`: the
/// built-in catalog when the order is at most 27, otherwise any groups
/// found in the data directory.
pub fn conjecture_probe(
    n: usize,
    data_dir: Option<&Path>,
) -> Result<ConjectureReport, crate::constructions::ConstructionError> {
    let c = bgw_ddd(n)?;
    let ddd_verified = c.verify().is_ok();
    let order = n * n - 1;
    let groups: Vec<Group> = if order <= 27 {
        catalog::catalog(order).expect("catalog covers orders up to 27")
    } else {
        match data_dir {
            Some(dir) => catalog::load_groups_of_order(dir, order).unwrap_or_default(),
            None => Vec::new(),
        }
    };
    let groups_available = !groups.is_empty();
    let mut realizations = Vec::new();
    let mut groups_tried = Vec::new();
    for g in &groups {
        groups_tried.push(g.name().to_string());
        if let Ok(Some(s)) = is_cayley_over(&c.digraph, g) {
            realizations.push((g.name().to_string(), s));
        }
    }
    Ok(ConjectureReport {
        n,
        params: c.claimed,
        ddd_verified,
        order,
        groups_tried,
        realizations,
        groups_available,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn q8_search_finds_one_class() {
        let q8 = Group::dicyclic(2);
        let out = search_group(&q8, [8, 3, 0, 1, 4, 2], &SearchConfig::default());
        assert_eq!(out.hits.len(), 1);
        assert_eq!(out.stats.candidates, 8);
        assert!(out.audit_failures.is_empty());
    }

    #[test]
    fn z15_search() {
        // exactly 10 connection sets pass the oracle; the multiplier maps
        // x -> ax collapse them into exactly two isomorphism classes
        // (distinguished by their closed-3-walk counts)
        let z15 = Group::cyclic(15);
        let out = search_group(&z15, [15, 4, 0, 1, 5, 3], &SearchConfig::default());
        assert_eq!(out.stats.candidates, 560);
        assert_eq!(out.stats.filter_passed, 10);
        assert_eq!(out.hits.len(), 2);
        assert!(out.audit_failures.is_empty());
    }

    #[test]
    fn nonexistent_order_12_tuple_is_empty() {
        for g in catalog(12).unwrap() {
            let out = search_group(&g, [12, 4, 2, 1, 6, 2], &SearchConfig::default());
            assert!(out.hits.is_empty(), "{}", g.name());
            assert!(out.audit_failures.is_empty(), "{}", g.name());
        }
    }

    #[test]
    fn pruned_and_unpruned_agree() {
        // every bundled tuple on at most 12 vertices, over every group of
        // the matching order
        for row in crate::classify::feasible_rows()
            .iter()
            .filter(|r| r.params[0] <= 12)
        {
            for g in catalog(row.params[0]).unwrap() {
                let pruned = search_group(&g, row.params, &SearchConfig::default());
                let plain = search_group(
                    &g,
                    row.params,
                    &SearchConfig {
                        prune: false,
                        ..SearchConfig::default()
                    },
                );
                let a: Vec<_> = pruned.hits.iter().map(|h| h.label.clone()).collect();
                let b: Vec<_> = plain.hits.iter().map(|h| h.label.clone()).collect();
                assert_eq!(a, b, "{} {:?}", g.name(), row.params);
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let z15 = Group::cyclic(15);
        let base = search_group(&z15, [15, 4, 0, 1, 5, 3], &SearchConfig::default());
        for workers in [2usize, 3, 7] {
            let out = search_group(
                &z15,
                [15, 4, 0, 1, 5, 3],
                &SearchConfig {
                    workers,
                    ..SearchConfig::default()
                },
            );
            assert_eq!(out.hits.len(), base.hits.len());
            for (a, b) in out.hits.iter().zip(&base.hits) {
                assert_eq!(a.label, b.label);
                assert_eq!(a.connection_set, b.connection_set);
            }
            assert_eq!(out.stats.candidates, base.stats.candidates);
        }
    }

    #[test]
    fn witnesses_replay() {
        let z15 = Group::cyclic(15);
        let out = search_group(&z15, [15, 4, 0, 1, 5, 3], &SearchConfig::default());
        for hit in &out.hits {
            let d = cayley_digraph(&z15, &hit.connection_set).unwrap();
            assert!(ddd_check(&d).matches([15, 4, 0, 1, 5, 3]));
            assert_eq!(canonical_label(&d), hit.label);
        }
    }

    #[test]
    fn bgw3_is_cayley_over_q8() {
        let c = bgw_ddd(3).unwrap();
        let q8 = Group::dicyclic(2);
        let s = is_cayley_over(&c.digraph, &q8).unwrap();
        assert!(s.is_some());
        // and the realization is the unique (8,3,0,1,4,2) class
        let found = cayley_digraph(&q8, &s.unwrap()).unwrap();
        assert_eq!(canonical_label(&found), canonical_label(&c.digraph));
    }

    #[test]
    fn cyclic_blocks_is_cayley_over_z12() {
        let c = crate::constructions::construct_cyclic_blocks(3).unwrap();
        let z12 = Group::cyclic(12);
        assert!(is_cayley_over(&c.digraph, &z12).unwrap().is_some());
    }

    #[test]
    fn square3_admits_no_regular_group() {
        // the 9-vertex Paley-square digraph is a (9,3,0,1,3,3) DDD but not
        // a Cayley digraph: no order-9 group acts regularly on it
        let d = crate::constructions::construct_square(3).unwrap().digraph;
        for g in catalog(9).unwrap() {
            assert!(is_cayley_over(&d, &g).unwrap().is_none(), "{}", g.name());
        }
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let d = Digraph::new(3);
        let z4 = Group::cyclic(4);
        assert_eq!(
            is_cayley_over(&d, &z4),
            Err(SearchError::OrderMismatch {
                digraph: 3,
                group: 4
            })
        );
    }

    #[test]
    fn conjecture_probe_n3() {
        let report = conjecture_probe(3, None).unwrap();
        assert!(report.ddd_verified);
        assert!(report.groups_available);
        assert!(report.realizations.iter().any(|(name, _)| name == "Q8"));
    }
}
