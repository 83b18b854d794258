//! Canonical labeling of digraphs on at most 64 vertices by iterated
//! degree partition refinement and backtracking over the cells that stay
//! ambiguous, taking the lexicographically least relabeled adjacency matrix
//! over all leaves of the search tree. Automorphisms discovered at equal
//! leaves prune sibling branches in the same orbit.

use crate::d6::encode_digraph6;
use crate::digraph::Digraph;

/// Order-invariant certificate of a digraph's isomorphism class: the
/// digraph6 encoding of the canonically relabeled adjacency matrix. Two
/// digraphs are isomorphic iff their labels are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(pub String);

impl std::fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// The canonically relabeled digraph itself.
pub fn canonical_form(d: &Digraph) -> Digraph {
    let v = d.v();
    assert!(v <= 64, "canonical labeling supports at most 64 vertices");
    if v == 0 {
        return d.clone();
    }
    let mut out = vec![0u64; v];
    let mut inn = vec![0u64; v];
    for x in 0..v {
        for y in 0..v {
            if d.has_arc(x, y) {
                out[x] |= 1 << y;
                inn[y] |= 1 << x;
            }
        }
    }
    let mut searcher = Searcher {
        v,
        out,
        inn,
        best_enc: Vec::new(),
        best_ord: Vec::new(),
        first_enc: Vec::new(),
        first_ord: Vec::new(),
        auts: Vec::new(),
    };
    let initial = vec![(0..v).collect::<Vec<usize>>()];
    searcher.explore(initial, &mut Vec::new());

    // best_ord[i] is the vertex placed at position i
    let mut perm = vec![0usize; v];
    for (pos, &vert) in searcher.best_ord.iter().enumerate() {
        perm[vert] = pos;
    }
    d.relabel(&perm)
}

pub fn canonical_label(d: &Digraph) -> CanonicalLabel {
    CanonicalLabel(encode_digraph6(&canonical_form(d)).expect("label requires v <= 62"))
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.v() == b.v() && canonical_form(a) == canonical_form(b)
}

struct Searcher {
    v: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    best_enc: Vec<u64>,
    best_ord: Vec<usize>,
    first_enc: Vec<u64>,
    first_ord: Vec<usize>,
    auts: Vec<Vec<usize>>,
}

// Beyond this many stored generators, stop recording; pruning only weakens.
const MAX_AUTS: usize = 256;

impl Searcher {
    fn explore(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        self.refine(&mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let ord: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.visit_leaf(ord);
            return;
        }
        // branch on the first smallest non-singleton cell
        let target = {
            let mut best: Option<(usize, usize)> = None;
            for (i, c) in cells.iter().enumerate() {
                if c.len() > 1 && best.map_or(true, |(_, len)| c.len() < len) {
                    best = Some((i, c.len()));
                }
            }
            best.unwrap().0
        };
        let members = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbit = OrbitCache::new(self.v);
        for &u in &members {
            orbit.sync(&self.auts, prefix);
            if explored.iter().any(|&e| orbit.same(e, u)) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![u]);
                    child.push(c.iter().copied().filter(|&x| x != u).collect());
                } else {
                    child.push(c.clone());
                }
            }
            prefix.push(u);
            self.explore(child, prefix);
            prefix.pop();
            explored.push(u);
        }
    }

    fn visit_leaf(&mut self, ord: Vec<usize>) {
        let enc = self.encode(&ord);
        if self.first_enc.is_empty() {
            self.first_enc = enc.clone();
            self.first_ord = ord.clone();
        } else if enc == self.first_enc {
            self.record_aut(&self.first_ord.clone(), &ord);
        }
        if self.best_enc.is_empty() || enc < self.best_enc {
            self.best_enc = enc;
            self.best_ord = ord;
        } else if enc == self.best_enc {
            self.record_aut(&self.best_ord.clone(), &ord);
        }
    }

    /// Row i holds the adjacency bits of the vertex at position i, column 0
    /// at the most significant bit so that `Vec<u64>` ordering matches
    /// row-major bit-string ordering.
    fn encode(&self, ord: &[usize]) -> Vec<u64> {
        let v = self.v;
        let mut enc = vec![0u64; v];
        for (i, &x) in ord.iter().enumerate() {
            let row = self.out[x];
            let mut word = 0u64;
            for (j, &y) in ord.iter().enumerate() {
                word |= (row >> y & 1) << (63 - j);
            }
            enc[i] = word;
        }
        enc
    }

    fn record_aut(&mut self, ord_a: &[usize], ord_b: &[usize]) {
        if self.auts.len() >= MAX_AUTS {
            return;
        }
        let mut sigma = vec![0usize; self.v];
        for i in 0..self.v {
            sigma[ord_a[i]] = ord_b[i];
        }
        if sigma.iter().enumerate().any(|(i, &s)| s != i) && !self.auts.contains(&sigma) {
            self.auts.push(sigma);
        }
    }

    /// One simultaneous splitting pass using (out, in) counts against every
    /// cell, repeated to a fixed point. Sub-cells are ordered by signature,
    /// which is a label-independent value, so the refinement is
    /// isomorphism-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut tagged: Vec<(Vec<(u8, u8)>, usize)> = cell
                    .iter()
                    .map(|&u| {
                        let sig: Vec<(u8, u8)> = masks
                            .iter()
                            .map(|&m| {
                                (
                                    (self.out[u] & m).count_ones() as u8,
                                    (self.inn[u] & m).count_ones() as u8,
                                )
                            })
                            .collect();
                        (sig, u)
                    })
                    .collect();
                tagged.sort();
                let mut start = 0;
                for i in 1..=tagged.len() {
                    if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                        next.push(tagged[start..i].iter().map(|(_, u)| *u).collect());
                        if i - start != cell.len() {
                            split = true;
                        }
                        start = i;
                    }
                }
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }
}

/// Orbit partition of the subgroup of recorded automorphisms that fix the
/// current individualization prefix pointwise. Only those automorphisms
/// stabilize the current search node, so only they may prune siblings.
struct OrbitCache {
    parent: Vec<usize>,
    synced_auts: usize,
}

impl OrbitCache {
    fn new(v: usize) -> Self {
        OrbitCache {
            parent: (0..v).collect(),
            synced_auts: usize::MAX,
        }
    }

    fn sync(&mut self, auts: &[Vec<usize>], prefix: &[usize]) {
        if self.synced_auts == auts.len() {
            return;
        }
        let v = self.parent.len();
        self.parent = (0..v).collect();
        for sigma in auts {
            if prefix.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            for x in 0..v {
                self.union(x, sigma[x]);
            }
        }
        self.synced_auts = auts.len();
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::cayley_digraph;
    use crate::group::Group;

    fn path3() -> Digraph {
        let mut d = Digraph::new(3);
        d.set_arc(0, 1);
        d.set_arc(1, 2);
        d
    }

    fn cycle3() -> Digraph {
        let mut d = Digraph::new(3);
        d.set_arc(0, 1);
        d.set_arc(1, 2);
        d.set_arc(2, 0);
        d
    }

    #[test]
    fn cycle_and_path_differ() {
        assert_ne!(canonical_label(&cycle3()), canonical_label(&path3()));
    }

    #[test]
    fn relabeling_is_invisible() {
        let d = cayley_digraph(&Group::dicyclic(2), &[1, 4, 5]).unwrap();
        let label = canonical_label(&d);
        // a few deterministic permutations
        for shift in 1..8 {
            let perm: Vec<usize> = (0..8).map(|x| (x * 3 + shift) % 8).collect();
            let mut seen = [false; 8];
            perm.iter().for_each(|&p| seen[p] = true);
            assert!(seen.iter().all(|&s| s));
            assert_eq!(canonical_label(&d.relabel(&perm)), label);
        }
    }

    #[test]
    fn paley7_isomorphic_to_its_transpose() {
        // x -> -x maps the quadratic-residue tournament to its converse
        let f = crate::gf::Field::new(7).unwrap();
        let sq = f.nonzero_squares().unwrap();
        let mut d = Digraph::new(7);
        for x in 0..7 {
            for y in 0..7 {
                if x != y && sq.binary_search(&f.sub(y, x)).is_ok() {
                    d.set_arc(x, y);
                }
            }
        }
        assert_eq!(canonical_label(&d), canonical_label(&d.transpose()));
    }

    #[test]
    fn empty_and_tiny() {
        assert!(are_isomorphic(&Digraph::new(1), &Digraph::new(1)));
        let full_pair = {
            let mut d = Digraph::new(2);
            d.set_arc(0, 1);
            d
        };
        let other = {
            let mut d = Digraph::new(2);
            d.set_arc(1, 0);
            d
        };
        assert!(are_isomorphic(&full_pair, &other));
    }

    /// Brute-force minimum encoding over all permutations; the independent
    /// oracle for small v.
    fn brute_min(d: &Digraph) -> Vec<u64> {
        let v = d.v();
        let mut perm: Vec<usize> = (0..v).collect();
        let mut best: Option<Vec<u64>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut enc = vec![0u64; v];
            for i in 0..v {
                for j in 0..v {
                    if d.has_arc(p[i], p[j]) {
                        enc[i] |= 1 << (63 - j);
                    }
                }
            }
            if best.as_ref().is_none_or(|b| &enc < b) {
                best = Some(enc);
            }
        });
        best.unwrap()
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn enc_of_form(d: &Digraph) -> Vec<u64> {
        let f = canonical_form(d);
        let v = f.v();
        let mut enc = vec![0u64; v];
        for i in 0..v {
            for j in 0..v {
                if f.has_arc(i, j) {
                    enc[i] |= 1 << (63 - j);
                }
            }
        }
        enc
    }

    #[test]
    fn label_classes_match_brute_force_on_all_digraphs_with_4_vertices() {
        // all 2^12 loop-free digraphs on 4 labeled vertices: label equality
        // must induce exactly the brute-force isomorphism classes
        use std::collections::BTreeMap;
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|x| (0..4).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y)
            .collect();
        let mut label_to_brute: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
        let mut brute_to_label: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
        for code in 0u32..1 << 12 {
            let mut d = Digraph::new(4);
            for (b, &(x, y)) in pairs.iter().enumerate() {
                if code >> b & 1 == 1 {
                    d.set_arc(x, y);
                }
            }
            let mine = enc_of_form(&d);
            let brute = brute_min(&d);
            assert_eq!(
                label_to_brute
                    .entry(mine.clone())
                    .or_insert_with(|| brute.clone()),
                &brute,
                "code {code}"
            );
            assert_eq!(
                brute_to_label.entry(brute).or_insert_with(|| mine.clone()),
                &mine,
                "code {code}"
            );
        }
    }
}
