//! Dense digraphs on up to a few hundred vertices, stored as bitset rows.
//! An arc `(x, y)` means `x` dominates `y`.

use crate::group::Group;
use crate::matrix::Mat;
use std::fmt;

/// Adjacency-matrix digraph. Loop-free by construction: `set_arc` rejects
/// the diagonal, so every `Digraph` has a zero diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    v: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Digraph {
    pub fn new(v: usize) -> Self {
        let words = v.div_ceil(64).max(1);
        Digraph {
            v,
            words,
            rows: vec![0; v * words],
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.rows[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub fn set_arc(&mut self, x: usize, y: usize) {
        assert!(x != y, "loops are not allowed");
        self.rows[x * self.words + y / 64] |= 1 << (y % 64);
    }

    #[inline]
    pub fn row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.words..(x + 1) * self.words]
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, y: usize) -> usize {
        (0..self.v).filter(|&x| self.has_arc(x, y)).count()
    }

    /// Number of vertices dominated by both `x` and `y` (common out-neighbours).
    #[inline]
    pub fn common_out(&self, x: usize, y: usize) -> usize {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn transpose(&self) -> Digraph {
        let mut t = Digraph::new(self.v);
        for x in 0..self.v {
            for y in 0..self.v {
                if self.has_arc(x, y) {
                    t.set_arc(y, x);
                }
            }
        }
        t
    }

    /// True iff the adjacency matrix `X` satisfies `X + X^t` being a 0/1
    /// matrix; with a zero diagonal that means no 2-cycles.
    pub fn is_skew(&self) -> bool {
        for x in 0..self.v {
            for y in x + 1..self.v {
                if self.has_arc(x, y) && self.has_arc(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Relabel vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.v);
        let mut d = Digraph::new(self.v);
        for x in 0..self.v {
            for y in 0..self.v {
                if self.has_arc(x, y) {
                    d.set_arc(perm[x], perm[y]);
                }
            }
        }
        d
    }

    /// True iff `perm` (as `perm[old] = new`) maps arcs onto arcs exactly.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        for x in 0..self.v {
            for y in 0..self.v {
                if x != y && self.has_arc(x, y) != self.has_arc(perm[x], perm[y]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn from_mat(m: &Mat) -> Result<Digraph, DigraphError> {
        if m.rows() != m.cols() {
            return Err(DigraphError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let v = m.rows();
        let mut d = Digraph::new(v);
        for i in 0..v {
            if m.get(i, i) != 0 {
                return Err(DigraphError::Loop { vertex: i });
            }
            for j in 0..v {
                if i != j && m.get(i, j) == 1 {
                    d.set_arc(i, j);
                }
            }
        }
        Ok(d)
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zero(self.v, self.v);
        for x in 0..self.v {
            for y in 0..self.v {
                if self.has_arc(x, y) {
                    m.set(x, y, 1);
                }
            }
        }
        m
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Digraph on {} vertices", self.v)?;
        for x in 0..self.v {
            for y in 0..self.v {
                write!(f, "{}", self.has_arc(x, y) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DigraphError {
    NotSquare { rows: usize, cols: usize },
    Loop { vertex: usize },
    IdentityInConnectionSet,
    OutOfRange { element: usize, order: usize },
}

impl fmt::Display for DigraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigraphError::NotSquare { rows, cols } => {
                write!(f, "adjacency matrix is {rows}x{cols}, not square")
            }
            DigraphError::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            DigraphError::IdentityInConnectionSet => {
                write!(f, "connection set contains the identity element")
            }
            DigraphError::OutOfRange { element, order } => {
                write!(
                    f,
                    "element {element} out of range for group of order {order}"
                )
            }
        }
    }
}

impl std::error::Error for DigraphError {}

/// The Cayley digraph `Cay(G, S)`: vertices are the group elements, arcs are
/// all couples `(g, gs)` with `s` in `S`. `S` must not contain the identity;
/// it does not have to be inverse-free (the result is skew iff it is).
pub fn cayley_digraph(group: &Group, conn: &[usize]) -> Result<Digraph, DigraphError> {
    let v = group.order();
    let mut d = Digraph::new(v);
    for &s in conn {
        if s == 0 {
            return Err(DigraphError::IdentityInConnectionSet);
        }
        if s >= v {
            return Err(DigraphError::OutOfRange {
                element: s,
                order: v,
            });
        }
        for g in 0..v {
            d.set_arc(g, group.mul(g, s));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    #[test]
    fn cayley_three_cycle() {
        let z3 = Group::cyclic(3);
        let d = cayley_digraph(&z3, &[1]).unwrap();
        assert!(d.has_arc(0, 1) && d.has_arc(1, 2) && d.has_arc(2, 0));
        assert_eq!((0..3).map(|x| d.out_degree(x)).sum::<usize>(), 3);
        assert!(d.is_skew());
    }

    #[test]
    fn cayley_empty_set() {
        let z3 = Group::cyclic(3);
        let d = cayley_digraph(&z3, &[]).unwrap();
        assert_eq!(d.out_degree(0), 0);
    }

    #[test]
    fn cayley_rejects_identity() {
        let z3 = Group::cyclic(3);
        assert_eq!(
            cayley_digraph(&z3, &[0]),
            Err(DigraphError::IdentityInConnectionSet)
        );
    }

    #[test]
    fn skew_detects_two_cycle() {
        let mut d = Digraph::new(2);
        d.set_arc(0, 1);
        assert!(d.is_skew());
        d.set_arc(1, 0);
        assert!(!d.is_skew());
    }

    #[test]
    fn left_translations_are_automorphisms() {
        // x -> gx preserves arcs (g, gs) for every g, on every catalog
        // group with one inverse-pair-free set per group
        for order in 2..=27 {
            for group in crate::catalog::catalog(order).unwrap() {
                let conn: Vec<usize> = group
                    .inverse_pairs()
                    .iter()
                    .take(2)
                    .map(|&(a, _)| a)
                    .collect();
                let d = cayley_digraph(&group, &conn).unwrap();
                for g in 0..group.order() {
                    let perm: Vec<usize> = (0..group.order()).map(|x| group.mul(g, x)).collect();
                    assert!(d.is_automorphism(&perm), "{} g={g}", group.name());
                }
            }
        }
    }
}
