//! Concrete finite groups as Cayley tables, with the identity pinned at
//! index 0, compositional constructors (cyclic, direct and semidirect
//! products, dicyclic, SL(2,3)) and isomorphism testing by generator-image
//! backtracking.

use std::fmt;

const UNSET: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    BadTable { reason: String },
    NotAPermutation { acting: usize },
    NotAnAutomorphism { acting: usize },
    NotAHomomorphism,
    BadOrder { order: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BadTable { reason } => write!(f, "invalid Cayley table: {reason}"),
            GroupError::NotAPermutation { acting } => {
                write!(f, "action image of element {acting} is not a permutation")
            }
            GroupError::NotAnAutomorphism { acting } => {
                write!(f, "action image of element {acting} is not an automorphism")
            }
            GroupError::NotAHomomorphism => write!(f, "action is not a homomorphism"),
            GroupError::BadOrder { order } => write!(f, "unsupported group order {order}"),
        }
    }
}

impl std::error::Error for GroupError {}

/// A finite group given by its full multiplication table. Element 0 is
/// always the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_order: Vec<u16>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.order)
    }
}

impl Group {
    /// Build and fully validate a group from its table: Latin square,
    /// identity at 0, associativity.
    pub fn from_table(name: &str, order: usize, table: Vec<u16>) -> Result<Group, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::BadTable {
                reason: format!("table size {} for order {order}", table.len()),
            });
        }
        let idx = |a: usize, b: usize| table[a * order + b] as usize;
        for a in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for b in 0..order {
                let r = idx(a, b);
                let c = idx(b, a);
                if r >= order || c >= order {
                    return Err(GroupError::BadTable {
                        reason: "entry out of range".into(),
                    });
                }
                if seen_row[r] {
                    return Err(GroupError::BadTable {
                        reason: format!("row {a} is not a permutation"),
                    });
                }
                if seen_col[c] {
                    return Err(GroupError::BadTable {
                        reason: format!("column {a} is not a permutation"),
                    });
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        for g in 0..order {
            if idx(0, g) != g || idx(g, 0) != g {
                return Err(GroupError::BadTable {
                    reason: "element 0 is not the identity".into(),
                });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = idx(a, b);
                for c in 0..order {
                    if idx(ab, c) != idx(a, idx(b, c)) {
                        return Err(GroupError::BadTable {
                            reason: format!("associativity fails at ({a},{b},{c})"),
                        });
                    }
                }
            }
        }
        let mut inverse = vec![0u16; order];
        for g in 0..order {
            inverse[g] = (0..order).find(|&h| idx(g, h) == 0).unwrap() as u16;
        }
        let mut element_order = vec![0u16; order];
        for g in 0..order {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = idx(x, g);
                k += 1;
            }
            element_order[g] = k as u16;
        }
        Ok(Group {
            name: name.to_string(),
            order,
            table,
            inverse,
            element_order,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Group {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a] as usize
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.element_order.iter().map(|&o| o as usize).collect()
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn involution_count(&self) -> usize {
        self.element_order.iter().filter(|&&o| o == 2).count()
    }

    /// Inverse pairs `{g, g^-1}` over the non-involution, non-identity
    /// elements, each listed once as `(g, g^-1)` with `g < g^-1`.
    pub fn inverse_pairs(&self) -> Vec<(usize, usize)> {
        (1..self.order)
            .filter(|&g| self.inv(g) > g)
            .map(|g| (g, self.inv(g)))
            .collect()
    }

    /// The cyclic group `Z_n` with `table[g][h] = (g + h) mod n`.
    pub fn cyclic(n: usize) -> Group {
        assert!(n >= 1);
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = ((a + b) % n) as u16;
            }
        }
        Group::from_table(&format!("Z{n}"), n, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Group {
        Group::cyclic(1).with_name("Z1")
    }

    /// Direct product on pairs ordered lexicographically: the pair `(g, h)`
    /// has index `g * |H| + h`, with componentwise multiplication.
    pub fn direct_product(g: &Group, h: &Group) -> Group {
        let n = g.order * h.order;
        let hn = h.order;
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let (g1, h1) = (a / hn, a % hn);
            for b in 0..n {
                let (g2, h2) = (b / hn, b % hn);
                table[a * n + b] = (g.mul(g1, g2) * hn + h.mul(h1, h2)) as u16;
            }
        }
        let name = format!("{}x{}", g.name, h.name);
        Group::from_table(&name, n, table).expect("direct product table is a group")
    }

    /// Semidirect product `N : H` for a left action of `H` on `N` by
    /// automorphisms: `(n1,h1)(n2,h2) = (n1 * act(h1)(n2), h1 h2)`. The
    /// pair `(n, h)` has index `n * |H| + h`, so the trivial action gives a
    /// table identical to `direct_product(N, H)`.
    pub fn semidirect_product(
        n: &Group,
        h: &Group,
        act: &GroupAction,
    ) -> Result<Group, GroupError> {
        act.validate(n, h)?;
        let order = n.order * h.order;
        let hn = h.order;
        let mut table = vec![0u16; order * order];
        for a in 0..order {
            let (n1, h1) = (a / hn, a % hn);
            for b in 0..order {
                let (n2, h2) = (b / hn, b % hn);
                let n3 = n.mul(n1, act.images[h1][n2]);
                table[a * order + b] = (n3 * hn + h.mul(h1, h2)) as u16;
            }
        }
        let name = format!("{}:{}", n.name, h.name);
        Group::from_table(&name, order, table)
    }

    /// The dicyclic group of order `4m`: presentation
    /// `<a, b | a^{2m} = e, b^2 = a^m, b^-1 a b = a^-1>`. `m = 2` gives the
    /// quaternion group `Q8`; every dicyclic group has exactly one
    /// involution, `a^m`.
    ///
    /// Element `a^i` has index `i`; element `a^i b` has index `2m + i`.
    pub fn dicyclic(m: usize) -> Group {
        assert!(m >= 2);
        let n = 4 * m;
        let c = 2 * m;
        let mut table = vec![0u16; n * n];
        let code = |i: usize, has_b: bool| if has_b { c + i } else { i };
        for x in 0..n {
            let (i, bx) = (x % c, x >= c);
            for y in 0..n {
                let (j, by) = (y % c, y >= c);
                // (a^i b^bx)(a^j b^by); b a^j = a^-j b and b^2 = a^m.
                let z = match (bx, by) {
                    (false, false) => code((i + j) % c, false),
                    (false, true) => code((i + j) % c, true),
                    (true, false) => code((i + c - j) % c, true),
                    (true, true) => code((i + c - j + m) % c, false),
                };
                table[x * n + y] = z as u16;
            }
        }
        let name = if n == 8 {
            "Q8".to_string()
        } else {
            format!("Dic{m}")
        };
        Group::from_table(&name, n, table).expect("dicyclic table is a group")
    }

    /// `SL(2,3)`: the 24 two-by-two matrices of determinant 1 over GF(3),
    /// identity first, remaining elements in lexicographic entry order.
    pub fn sl23() -> Group {
        let mut elems: Vec<[u8; 4]> = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    for d in 0..3u8 {
                        if (a * d + 2 * b * c) % 3 == 1 {
                            elems.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        assert_eq!(elems.len(), 24);
        let id = [1u8, 0, 0, 1];
        elems.retain(|&m| m != id);
        elems.sort_unstable();
        elems.insert(0, id);
        let index_of = |m: [u8; 4]| elems.iter().position(|&e| e == m).unwrap();
        let mut table = vec![0u16; 24 * 24];
        for (x, m1) in elems.iter().enumerate() {
            for (y, m2) in elems.iter().enumerate() {
                let prod = [
                    (m1[0] * m2[0] + m1[1] * m2[2]) % 3,
                    (m1[0] * m2[1] + m1[1] * m2[3]) % 3,
                    (m1[2] * m2[0] + m1[3] * m2[2]) % 3,
                    (m1[2] * m2[1] + m1[3] * m2[3]) % 3,
                ];
                table[x * 24 + y] = index_of(prod) as u16;
            }
        }
        Group::from_table("SL(2,3)", 24, table).expect("SL(2,3) table is a group")
    }

    /// The dihedral group of order `2m` as `Z_m : Z_2` with the inversion
    /// action.
    pub fn dihedral(m: usize) -> Group {
        assert!(m >= 3);
        let zm = Group::cyclic(m);
        let z2 = Group::cyclic(2);
        let inv: Vec<usize> = (0..m).map(|x| (m - x) % m).collect();
        let act = GroupAction::from_generator_power(&z2, inv);
        Group::semidirect_product(&zm, &z2, &act)
            .expect("dihedral action is valid")
            .with_name(&format!("D{}", 2 * m))
    }

    /// True iff `subset` contains the identity and is closed under the
    /// table and inverses.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in subset {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        if !member[0] {
            return false;
        }
        subset
            .iter()
            .all(|&a| member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut todo = vec![0usize];
        while let Some(x) = todo.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    todo.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// A generating set found greedily: repeatedly adjoin the lowest-index
    /// element outside the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = 1;
        while generated < self.order {
            let cl = self.closure(&gens);
            let x = (0..self.order)
                .find(|x| cl.binary_search(x).is_err())
                .unwrap();
            gens.push(x);
            generated = self.closure(&gens).len();
        }
        gens
    }
}

/// An action of a group `H` on a group `N`: one permutation of `N`'s
/// elements per element of `H`. Validated by `semidirect_product` to be a
/// homomorphism into `Aut(N)`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub images: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn trivial(n: &Group, h: &Group) -> GroupAction {
        GroupAction {
            images: vec![(0..n.order()).collect(); h.order()],
        }
    }

    /// Action of a cyclic group through powers of one automorphism `phi`:
    /// element `i` of `H = Z_m` acts by `phi^i`.
    pub fn from_generator_power(h: &Group, phi: Vec<usize>) -> GroupAction {
        let deg = phi.len();
        let mut images = Vec::with_capacity(h.order());
        let mut cur: Vec<usize> = (0..deg).collect();
        for _ in 0..h.order() {
            images.push(cur.clone());
            cur = cur.iter().map(|&x| phi[x]).collect();
        }
        GroupAction { images }
    }

    fn validate(&self, n: &Group, h: &Group) -> Result<(), GroupError> {
        if self.images.len() != h.order() {
            return Err(GroupError::NotAHomomorphism);
        }
        for (acting, img) in self.images.iter().enumerate() {
            if img.len() != n.order() {
                return Err(GroupError::NotAPermutation { acting });
            }
            let mut seen = vec![false; n.order()];
            for &y in img {
                if y >= n.order() || seen[y] {
                    return Err(GroupError::NotAPermutation { acting });
                }
                seen[y] = true;
            }
            for a in 0..n.order() {
                for b in 0..n.order() {
                    if img[n.mul(a, b)] != n.mul(img[a], img[b]) {
                        return Err(GroupError::NotAnAutomorphism { acting });
                    }
                }
            }
        }
        for h1 in 0..h.order() {
            for h2 in 0..h.order() {
                let composed: Vec<usize> = (0..n.order())
                    .map(|x| self.images[h1][self.images[h2][x]])
                    .collect();
                if self.images[h.mul(h1, h2)] != composed {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(())
    }
}

/// Extend generator images to a homomorphism on the subgroup generated by
/// `gens`. Returns the partial map (UNSET outside that subgroup), or `None`
/// on conflict or non-injectivity.
fn extend_images(g: &Group, h: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; g.order()];
    let mut hit = vec![false; h.order()];
    map[0] = 0;
    hit[0] = true;
    let mut todo = vec![0usize];
    while let Some(x) = todo.pop() {
        for (i, &gen) in gens.iter().take(images.len()).enumerate() {
            let y = g.mul(x, gen);
            let fy = h.mul(map[x], images[i]);
            if map[y] == UNSET {
                if hit[fy] {
                    return None; // not injective
                }
                map[y] = fy;
                hit[fy] = true;
                todo.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn search_isomorphisms(
    g: &Group,
    h: &Group,
    gens: &[usize],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    stop_at_first: bool,
) {
    if stop_at_first && !out.is_empty() {
        return;
    }
    if images.len() == gens.len() {
        if let Some(map) = extend_images(g, h, gens, images) {
            if map.iter().all(|&x| x != UNSET) {
                out.push(map);
            }
        }
        return;
    }
    let want_order = g.element_order(gens[images.len()]);
    for cand in 0..h.order() {
        if h.element_order(cand) != want_order {
            continue;
        }
        images.push(cand);
        if extend_images(g, h, gens, images).is_some() {
            search_isomorphisms(g, h, gens, images, out, stop_at_first);
        }
        images.pop();
        if stop_at_first && !out.is_empty() {
            return;
        }
    }
}

/// Some isomorphism `G -> H` as an element map, if one exists. Element-order
/// fingerprints prune the generator-image backtracking.
pub fn find_isomorphism(g: &Group, h: &Group) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let mut og = g.element_orders();
    let mut oh = h.element_orders();
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return None;
    }
    let gens = g.generating_set();
    let mut out = Vec::new();
    search_isomorphisms(g, h, &gens, &mut Vec::new(), &mut out, true);
    out.into_iter().next()
}

pub fn are_isomorphic_groups(g: &Group, h: &Group) -> bool {
    find_isomorphism(g, h).is_some()
}

/// All automorphisms of `G`, each as a permutation fixing index 0.
pub fn group_automorphisms(g: &Group) -> Vec<Vec<usize>> {
    let gens = g.generating_set();
    let mut out = Vec::new();
    search_isomorphisms(g, g, &gens, &mut Vec::new(), &mut out, false);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = Group::cyclic(1);
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.table(), &[0]);
        let z4 = Group::cyclic(4);
        assert_eq!(z4.element_orders(), vec![1, 4, 2, 4]);
        let z26 = Group::cyclic(26);
        assert_eq!(z26.order(), 26);
        assert_eq!(z26.involution_count(), 1);
    }

    #[test]
    fn direct_product_orders() {
        let e9 = Group::direct_product(&Group::cyclic(3), &Group::cyclic(3));
        assert_eq!(e9.order(), 9);
        assert!((1..9).all(|g| e9.element_order(g) == 3));
        let g = Group::direct_product(&Group::cyclic(12), &Group::cyclic(2));
        assert_eq!(g.order(), 24);
        assert!(g.is_abelian());
    }

    #[test]
    fn direct_product_with_trivial_is_identity_map() {
        let g = Group::dicyclic(2);
        let p = Group::direct_product(&g, &Group::trivial());
        assert_eq!(p.table(), g.table());
    }

    #[test]
    fn trivial_action_matches_direct_product() {
        let n = Group::cyclic(3);
        let h = Group::cyclic(4);
        let act = GroupAction::trivial(&n, &h);
        let s = Group::semidirect_product(&n, &h, &act).unwrap();
        let d = Group::direct_product(&n, &h);
        assert_eq!(s.table(), d.table());
    }

    #[test]
    fn semidirect_z7_z3() {
        // x -> 2x has order 3 on Z7.
        let z7 = Group::cyclic(7);
        let phi: Vec<usize> = (0..7).map(|x| 2 * x % 7).collect();
        let act = GroupAction::from_generator_power(&Group::cyclic(3), phi);
        let g = Group::semidirect_product(&z7, &Group::cyclic(3), &act).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
    }

    #[test]
    fn semidirect_z3_z4_by_inversion() {
        let z3 = Group::cyclic(3);
        let inv = vec![0, 2, 1];
        let act = GroupAction::from_generator_power(&Group::cyclic(4), inv);
        let g = Group::semidirect_product(&z3, &Group::cyclic(4), &act).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        // the unique nonabelian Z3:Z4 is dicyclic of order 12
        assert!(are_isomorphic_groups(&g, &Group::dicyclic(3)));
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let z4 = Group::cyclic(4);
        // the transposition (1 2) is a permutation but not an automorphism of Z4
        let act = GroupAction::from_generator_power(&Group::cyclic(2), vec![0, 2, 1, 3]);
        let err = Group::semidirect_product(&z4, &Group::cyclic(2), &act).unwrap_err();
        assert_eq!(err, GroupError::NotAnAutomorphism { acting: 1 });
    }

    #[test]
    fn dicyclic_q8() {
        let q8 = Group::dicyclic(2);
        assert_eq!(q8.order(), 8);
        let mut orders = q8.element_orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(q8.involution_count(), 1);
        // i^2 = j^2 = k^2 = ijk with i = a, j = b, k = ab
        let (i, j) = (1, 4);
        let k = q8.mul(i, j);
        let sq = q8.mul(i, i);
        assert_eq!(q8.mul(j, j), sq);
        assert_eq!(q8.mul(k, k), sq);
        assert_eq!(q8.mul(q8.mul(i, j), k), sq);
    }

    #[test]
    fn dicyclic_q16() {
        let q16 = Group::dicyclic(4);
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.involution_count(), 1);
    }

    #[test]
    fn sl23_is_a_group_of_order_24() {
        let g = Group::sl23();
        assert_eq!(g.order(), 24);
        assert_eq!(g.involution_count(), 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn subgroup_checks() {
        let q8 = Group::dicyclic(2);
        assert!(q8.is_subgroup(&[0, 2])); // the center {e, a^2}
        assert!(q8.is_subgroup(&[0]));
        let z5 = Group::cyclic(5);
        assert!(!z5.is_subgroup(&[0, 1]));
    }

    #[test]
    fn automorphism_counts() {
        // cyclic: phi(n) automorphisms, each fixing 0
        let z7 = Group::cyclic(7);
        let auts = group_automorphisms(&z7);
        assert_eq!(auts.len(), 6);
        assert!(auts.iter().all(|a| a[0] == 0));

        let e9 = Group::direct_product(&Group::cyclic(3), &Group::cyclic(3));
        assert_eq!(group_automorphisms(&e9).len(), 48); // |GL(2,3)|

        assert_eq!(group_automorphisms(&Group::trivial()).len(), 1);
    }

    #[test]
    fn isomorphism_distinguishes() {
        let z4 = Group::cyclic(4);
        let e4 = Group::direct_product(&Group::cyclic(2), &Group::cyclic(2));
        assert!(!are_isomorphic_groups(&z4, &e4));
        let z6 = Group::cyclic(6);
        let z2z3 = Group::direct_product(&Group::cyclic(2), &Group::cyclic(3));
        assert!(are_isomorphic_groups(&z6, &z2z3));
    }

    #[test]
    fn even_order_groups_have_odd_involution_count() {
        for g in [
            Group::cyclic(2),
            Group::cyclic(12),
            Group::dicyclic(3),
            Group::dihedral(7),
            Group::sl23(),
            Group::direct_product(&Group::cyclic(4), &Group::dihedral(3)),
        ] {
            assert_eq!(g.order() % 2, 0);
            assert_eq!(g.involution_count() % 2, 1, "{}", g.name());
        }
    }
}
