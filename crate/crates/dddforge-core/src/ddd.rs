//! The divisible-design-digraph verification oracle.
//!
//! A digraph passes when it is asymmetric, k-regular in and out, and both
//! Gram matrices `A*A^t` (common dominated vertices) and `A^t*A` (common
//! dominators) take exactly two values off the diagonal, realized as `l1`
//! on the classes of one uniform vertex partition and `l2` across classes.
//! Requiring both Gram matrices on the *same* partition is deliberate:
//! square divisible designs do not automatically have the dual property,
//! and a digraph whose converse counts fit only a rearranged partition is
//! rejected rather than silently accepted.

use crate::digraph::Digraph;
use std::fmt;

/// Verified parameters `(v, k, l1, l2, m, n)` together with the vertex
/// partition that realizes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DddParams {
    pub v: usize,
    pub k: usize,
    pub l1: usize,
    pub l2: usize,
    pub m: usize,
    pub n: usize,
    /// `class_of[x]` is the class index of vertex `x`, classes numbered by
    /// first occurrence.
    pub class_of: Vec<usize>,
}

impl DddParams {
    pub fn tuple(&self) -> [usize; 6] {
        [self.v, self.k, self.l1, self.l2, self.m, self.n]
    }

    /// A DDD is proper unless `m = 1`, `n = 1` or `l1 = l2`; improper DDDs
    /// are exactly the symmetric-design incidence matrices.
    pub fn proper(&self) -> bool {
        self.m > 1 && self.n > 1 && self.l1 != self.l2
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.m];
        for (x, &c) in self.class_of.iter().enumerate() {
            classes[c].push(x);
        }
        classes
    }
}

impl fmt::Display for DddParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.v, self.k, self.l1, self.l2, self.m, self.n
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotDddReason {
    NotAsymmetric,
    NotRegular,
    /// `k = 0` or `v = 0`; rejected rather than special-cased.
    Degenerate,
    MoreThanTwoGramValues,
    /// Neither off-diagonal Gram value induces a uniform partition.
    NoUniformPartition,
    /// `A*A^t` fits a partition but `A^t*A` does not realize the same two
    /// values on the same partition.
    DualGramMismatch,
}

impl fmt::Display for NotDddReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NotDddReason::NotAsymmetric => "not asymmetric",
            NotDddReason::NotRegular => "not regular",
            NotDddReason::Degenerate => "degenerate (k = 0)",
            NotDddReason::MoreThanTwoGramValues => "more than two off-diagonal Gram values",
            NotDddReason::NoUniformPartition => "class structure is not a uniform partition",
            NotDddReason::DualGramMismatch => "converse counts disagree with the partition",
        };
        f.write_str(s)
    }
}

/// Outcome of [`ddd_check`]. A digraph may admit two parameter readings in
/// degenerate cases; candidates are listed with smaller `n` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DddCheck {
    Ddd(Vec<DddParams>),
    NotDdd(NotDddReason),
}

impl DddCheck {
    pub fn params(&self) -> Option<&DddParams> {
        match self {
            DddCheck::Ddd(cands) => cands.first(),
            DddCheck::NotDdd(_) => None,
        }
    }

    /// True iff some candidate reading matches the given proper tuple.
    pub fn matches(&self, tuple: [usize; 6]) -> bool {
        match self {
            DddCheck::Ddd(cands) => cands.iter().any(|p| p.tuple() == tuple && p.proper()),
            DddCheck::NotDdd(_) => false,
        }
    }
}

/// Verify the divisible-design property of a digraph.
pub fn ddd_check(d: &Digraph) -> DddCheck {
    let v = d.v();
    if v == 0 {
        return DddCheck::NotDdd(NotDddReason::Degenerate);
    }
    for x in 0..v {
        for y in x + 1..v {
            if d.has_arc(x, y) && d.has_arc(y, x) {
                return DddCheck::NotDdd(NotDddReason::NotAsymmetric);
            }
        }
    }
    let k = d.out_degree(0);
    for x in 0..v {
        if d.out_degree(x) != k || d.in_degree(x) != k {
            return DddCheck::NotDdd(NotDddReason::NotRegular);
        }
    }
    if k == 0 {
        return DddCheck::NotDdd(NotDddReason::Degenerate);
    }

    let dt = d.transpose();
    let p = gram(d);
    let q = gram(&dt);

    let mut values: Vec<usize> = Vec::new();
    for x in 0..v {
        for y in 0..v {
            if x != y && !values.contains(&p[x * v + y]) {
                values.push(p[x * v + y]);
                if values.len() > 2 {
                    return DddCheck::NotDdd(NotDddReason::MoreThanTwoGramValues);
                }
            }
        }
    }
    values.sort_unstable();

    if values.len() == 1 {
        // one common-count everywhere: a symmetric-design incidence matrix
        let lam = values[0];
        if (0..v).any(|x| (0..v).any(|y| x != y && q[x * v + y] != lam)) {
            return DddCheck::NotDdd(NotDddReason::DualGramMismatch);
        }
        return DddCheck::Ddd(vec![DddParams {
            v,
            k,
            l1: lam,
            l2: lam,
            m: 1,
            n: v,
            class_of: vec![0; v],
        }]);
    }

    let mut candidates = Vec::new();
    let mut p_partition_seen = false;
    for (ci, &c) in values.iter().enumerate() {
        let other = values[1 - ci];
        let Some(class_of) = uniform_partition(&p, v, c) else {
            continue;
        };
        p_partition_seen = true;
        let ok_q = (0..v).all(|x| {
            (0..v).all(|y| {
                x == y || q[x * v + y] == if class_of[x] == class_of[y] { c } else { other }
            })
        });
        if !ok_q {
            continue;
        }
        let n = class_of.iter().filter(|&&cl| cl == 0).count();
        candidates.push(DddParams {
            v,
            k,
            l1: c,
            l2: other,
            m: v / n,
            n,
            class_of,
        });
    }
    candidates.sort_by_key(|p| p.n);
    if candidates.is_empty() {
        return DddCheck::NotDdd(if p_partition_seen {
            NotDddReason::DualGramMismatch
        } else {
            NotDddReason::NoUniformPartition
        });
    }
    DddCheck::Ddd(candidates)
}

fn gram(d: &Digraph) -> Vec<usize> {
    let v = d.v();
    let mut p = vec![0usize; v * v];
    for x in 0..v {
        for y in x..v {
            let c = d.common_out(x, y);
            p[x * v + y] = c;
            p[y * v + x] = c;
        }
    }
    p
}

/// If the relation `x ~ y iff x = y or gram[x][y] = c` is an equivalence
/// with classes of one common size, return `class_of`; otherwise `None`.
fn uniform_partition(gram: &[usize], v: usize, c: usize) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut class_of = vec![UNSET; v];
    let mut next = 0;
    for x in 0..v {
        if class_of[x] != UNSET {
            continue;
        }
        class_of[x] = next;
        for y in x + 1..v {
            if gram[x * v + y] == c {
                if class_of[y] != UNSET {
                    return None;
                }
                class_of[y] = next;
            }
        }
        next += 1;
    }
    // the relation must be exactly "same class"
    for x in 0..v {
        for y in 0..v {
            if x != y && (gram[x * v + y] == c) != (class_of[x] == class_of[y]) {
                return None;
            }
        }
    }
    let n = class_of.iter().filter(|&&cl| cl == 0).count();
    if v % n != 0 {
        return None;
    }
    if (0..next).any(|cl| class_of.iter().filter(|&&c2| c2 == cl).count() != n) {
        return None;
    }
    Some(class_of)
}
