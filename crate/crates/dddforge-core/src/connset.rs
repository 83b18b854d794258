//! Connection sets `S` with `e` excluded and `S` disjoint from `S^-1`
//! (exactly the sets whose Cayley digraph is skew), enumerated through
//! inverse-pair choices, plus the `S S^-1` multiset profile and the
//! subgroup criterion that filters divisible-design candidates before the
//! full oracle runs.

use crate::group::Group;

/// Per inverse-pair choice during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairChoice {
    Skip,
    First,
    Second,
}

/// An admissible connection set: sorted elements, one per chosen inverse
/// pair, never containing the identity or an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    pub elements: Vec<usize>,
    pub choices: Vec<PairChoice>,
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Number of admissible sets of size `k`: `C(p, k) * 2^k` for `p` the
/// inverse-pair count.
pub fn candidate_count(group: &Group, k: usize) -> u64 {
    let p = group.inverse_pairs().len();
    binomial(p, k) * (1u64 << k)
}

/// Lexicographically `rank`-th `k`-subset of `0..p`.
fn unrank_combination(p: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut comb = Vec::with_capacity(k);
    let mut next = 0;
    for remaining in (1..=k).rev() {
        loop {
            let with_next = binomial(p - next - 1, remaining - 1);
            if rank < with_next {
                comb.push(next);
                next += 1;
                break;
            }
            rank -= with_next;
            next += 1;
        }
    }
    comb
}

fn advance_combination(comb: &mut [usize], p: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < p - (k - i) {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Stream of admissible connection sets of size `k` over a combination-rank
/// range, for partitioning the search space across workers. Pair subsets
/// run in lexicographic order; orientations in binary order within each.
pub struct ConnSetIter {
    pairs: Vec<(usize, usize)>,
    k: usize,
    comb: Vec<usize>,
    combs_left: u64,
    mask: u64,
    exhausted: bool,
}

impl ConnSetIter {
    pub fn new(group: &Group, k: usize) -> ConnSetIter {
        let pairs = group.inverse_pairs();
        let total = binomial(pairs.len(), k);
        Self::with_range(group, k, 0, total)
    }

    /// Enumerate combinations with ranks in `start..end`.
    pub fn with_range(group: &Group, k: usize, start: u64, end: u64) -> ConnSetIter {
        let pairs = group.inverse_pairs();
        let p = pairs.len();
        let total = binomial(p, k);
        let end = end.min(total);
        if start >= end || k == 0 && start > 0 {
            return ConnSetIter {
                pairs,
                k,
                comb: Vec::new(),
                combs_left: 0,
                mask: 0,
                exhausted: true,
            };
        }
        ConnSetIter {
            comb: unrank_combination(p, k, start),
            pairs,
            k,
            combs_left: end - start,
            mask: 0,
            exhausted: false,
        }
    }

    fn current(&self) -> ConnectionSet {
        let mut choices = vec![PairChoice::Skip; self.pairs.len()];
        let mut elements = Vec::with_capacity(self.k);
        for (bit, &pair_idx) in self.comb.iter().enumerate() {
            let (a, b) = self.pairs[pair_idx];
            if self.mask >> bit & 1 == 0 {
                choices[pair_idx] = PairChoice::First;
                elements.push(a);
            } else {
                choices[pair_idx] = PairChoice::Second;
                elements.push(b);
            }
        }
        elements.sort_unstable();
        ConnectionSet { elements, choices }
    }
}

impl Iterator for ConnSetIter {
    type Item = ConnectionSet;

    fn next(&mut self) -> Option<ConnectionSet> {
        if self.exhausted || self.combs_left == 0 {
            return None;
        }
        let item = self.current();
        self.mask += 1;
        if self.mask == 1 << self.k {
            self.mask = 0;
            self.combs_left -= 1;
            if self.combs_left > 0 && !advance_combination(&mut self.comb, self.pairs.len()) {
                self.combs_left = 0;
            }
        }
        item.into()
    }
}

/// All admissible sets of size `k`.
pub fn enumerate_connection_sets(group: &Group, k: usize) -> ConnSetIter {
    ConnSetIter::new(group, k)
}

/// `counts[g]` = multiplicity of `g` in the multiset `S S^-1`; in
/// particular `counts[0] = |S|`.
pub fn multiset_profile(group: &Group, s: &[usize]) -> Vec<usize> {
    let mut counts = vec![0usize; group.order()];
    for &a in s {
        for &b in s {
            counts[group.mul(a, group.inv(b))] += 1;
        }
    }
    counts
}

/// Parameter readings wrung from the profile alone: if the off-identity
/// counts take two values and one level set together with `e` forms a
/// subgroup `H`, then the cosets of `H` partition `Cay(G, S)` into a
/// divisible design. Returns candidate tuples sorted by class size, the
/// improper single-value reading as `(v,k,l,l,1,v)`, or `None` when the
/// profile rules the digraph out.
pub fn profile_verdicts(group: &Group, s: &[usize]) -> Option<Vec<[usize; 6]>> {
    let v = group.order();
    let k = s.len();
    if k == 0 {
        return None;
    }
    let counts = multiset_profile(group, s);
    let mut values: Vec<usize> = Vec::new();
    for g in 1..v {
        if !values.contains(&counts[g]) {
            values.push(counts[g]);
            if values.len() > 2 {
                return None;
            }
        }
    }
    values.sort_unstable();
    if values.len() == 1 {
        return Some(vec![[v, k, values[0], values[0], 1, v]]);
    }
    let mut out = Vec::new();
    for (ci, &c) in values.iter().enumerate() {
        let other = values[1 - ci];
        let mut level: Vec<usize> = vec![0];
        level.extend((1..v).filter(|&g| counts[g] == c));
        if group.is_subgroup(&level) {
            let n = level.len();
            out.push([v, k, c, other, v / n, n]);
        }
    }
    out.sort_by_key(|t| t[5]);
    if out.is_empty() {
        None
    } else {
        Some(out)
    }
}

/// The subgroup-criterion filter for one target parameter tuple: every `S`
/// whose Cayley digraph is a DDD with these parameters passes (the class
/// of the identity in the canonical partition is a subgroup and the
/// classes are its cosets), so the filter is safe to run before the
/// two-Gram-matrix oracle.
pub fn algebraic_filter(group: &Group, s: &[usize], params: [usize; 6]) -> bool {
    let proper = params[4] > 1 && params[5] > 1 && params[2] != params[3];
    if s.len() != params[1] || !proper {
        return false;
    }
    match profile_verdicts(group, s) {
        Some(cands) => cands.contains(&params),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q8_has_eight_candidate_triples() {
        let q8 = Group::dicyclic(2);
        assert_eq!(q8.inverse_pairs().len(), 3);
        let sets: Vec<ConnectionSet> = enumerate_connection_sets(&q8, 3).collect();
        assert_eq!(sets.len(), 8);
        assert_eq!(candidate_count(&q8, 3), 8);
        // brute-force cross-check over all 3-subsets of non-identity elements
        let mut brute = 0;
        for a in 1..8usize {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    let s = [a, b, c];
                    let ok = s.iter().all(|&x| s.iter().all(|&y| q8.inv(x) != y));
                    if ok {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 8);
    }

    #[test]
    fn elementary_abelian_two_groups_stream_nothing() {
        let e8 = Group::direct_product(
            &Group::direct_product(&Group::cyclic(2), &Group::cyclic(2)),
            &Group::cyclic(2),
        );
        for k in 1..4 {
            assert_eq!(enumerate_connection_sets(&e8, k).count(), 0);
        }
    }

    #[test]
    fn z5_pairs() {
        let z5 = Group::cyclic(5);
        let sets: Vec<ConnectionSet> = enumerate_connection_sets(&z5, 2).collect();
        assert_eq!(sets.len(), 4);
        for s in &sets {
            assert_eq!(s.elements.len(), 2);
            assert!(s.elements.iter().all(|&x| x != 0));
        }
    }

    #[test]
    fn counts_match_formula_on_catalog_groups() {
        for order in [6usize, 8, 12, 15] {
            for g in crate::catalog::catalog(order).unwrap() {
                for k in 0..=g.inverse_pairs().len() + 1 {
                    let streamed = enumerate_connection_sets(&g, k).count() as u64;
                    assert_eq!(streamed, candidate_count(&g, k), "{} k={k}", g.name());
                }
            }
        }
    }

    #[test]
    fn range_partition_is_seamless() {
        let z15 = Group::cyclic(15);
        let k = 4;
        let all: Vec<ConnectionSet> = ConnSetIter::new(&z15, k).collect();
        let total = binomial(7, 4);
        let mid = total / 2;
        let mut split: Vec<ConnectionSet> = ConnSetIter::with_range(&z15, k, 0, mid).collect();
        split.extend(ConnSetIter::with_range(&z15, k, mid, total));
        assert_eq!(all, split);
    }

    #[test]
    fn q8_profile_matches_quaternion_computation() {
        let q8 = Group::dicyclic(2);
        let counts = multiset_profile(&q8, &[1, 4, 5]);
        assert_eq!(counts[0], 3);
        assert_eq!(counts[2], 0); // the central involution never occurs
        for g in [1usize, 3, 4, 5, 6, 7] {
            assert_eq!(counts[g], 1);
        }
    }

    #[test]
    fn singleton_profile() {
        let z5 = Group::cyclic(5);
        let counts = multiset_profile(&z5, &[2]);
        assert_eq!(counts, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn q8_filter_accepts_with_center_subgroup() {
        let q8 = Group::dicyclic(2);
        assert!(algebraic_filter(&q8, &[1, 4, 5], [8, 3, 0, 1, 4, 2]));
        assert!(!algebraic_filter(&q8, &[1, 4, 5], [8, 3, 1, 0, 2, 4]));
    }

    #[test]
    fn z5_filter_rejects() {
        let z5 = Group::cyclic(5);
        // profile of {1, 2} is two-valued off e but no level set is a subgroup
        // (Z5 has no proper nontrivial subgroups)
        assert!(!algebraic_filter(&z5, &[1, 2], [5, 2, 1, 0, 5, 1]));
        assert!(!algebraic_filter(&z5, &[], [5, 0, 0, 0, 1, 5]));
    }

    #[test]
    fn empty_set_rejected() {
        let q8 = Group::dicyclic(2);
        assert!(profile_verdicts(&q8, &[]).is_none());
    }
}
