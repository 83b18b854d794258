//! The complete catalog of finite groups of each order up to 27, built from
//! explicit recipes (cyclic, abelian invariant factors, dihedral, dicyclic,
//! direct and semidirect products, plus the matrix group SL(2,3)), and the
//! Cayley-table (`.ct`) file interface.
//!
//! Completeness per order is pinned against the standard small-group counts
//! in [`SMALL_GROUP_COUNTS`]; the catalog tests additionally verify that the
//! entries of each order are pairwise non-isomorphic, which together with
//! the counts makes each list complete.

use crate::group::{Group, GroupAction, GroupError};
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

/// Number of groups of order `n` for `n` in `1..=27`.
pub const SMALL_GROUP_COUNTS: [usize; 27] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5,
];

/// Environment variable overriding the bundled data directory.
pub const DATA_DIR_ENV: &str = "DDDFORGE_DATA";

fn cyclic(n: usize) -> Group {
    Group::cyclic(n)
}

fn direct(a: Group, b: Group) -> Group {
    Group::direct_product(&a, &b)
}

fn s3() -> Group {
    Group::dihedral(3).with_name("S3")
}

fn e4() -> Group {
    direct(cyclic(2), cyclic(2)).with_name("E4")
}

fn e9() -> Group {
    direct(cyclic(3), cyclic(3)).with_name("E9")
}

/// `Z_n : Z_m` with the generator of `Z_m` acting as `x -> c x` on `Z_n`.
fn zn_by_scaling(n: usize, m: usize, c: usize, name: &str) -> Group {
    let zn = cyclic(n);
    let zm = cyclic(m);
    let phi: Vec<usize> = (0..n).map(|x| c * x % n).collect();
    let act = GroupAction::from_generator_power(&zm, phi);
    Group::semidirect_product(&zn, &zm, &act)
        .expect("scaling action is a valid automorphism")
        .with_name(name)
}

/// `N : Z_2` with the inversion automorphism of an abelian `N`.
fn generalized_dihedral(n: &Group, name: &str) -> Group {
    let z2 = cyclic(2);
    let phi: Vec<usize> = (0..n.order()).map(|x| n.inv(x)).collect();
    let act = GroupAction::from_generator_power(&z2, phi);
    Group::semidirect_product(n, &z2, &act)
        .expect("inversion of an abelian group is an automorphism")
        .with_name(name)
}

/// The alternating group `A4` as `E4 : Z3`, the 3-cycle on the involutions.
fn a4() -> Group {
    let n = e4();
    // (a, b) -> (b, a + b) on indices 2a + b
    let phi: Vec<usize> = (0..4)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            2 * b + (a + b) % 2
        })
        .collect();
    let act = GroupAction::from_generator_power(&cyclic(3), phi);
    Group::semidirect_product(&n, &cyclic(3), &act)
        .expect("A4 action")
        .with_name("A4")
}

/// The symmetric group `S4` as `E4 : S3`, with `S3` acting as the full
/// automorphism group `GL(2,2)` of `E4`.
fn s4() -> Group {
    let n = e4();
    let h = s3();
    let rot: Vec<usize> = (0..4)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            2 * b + (a + b) % 2
        })
        .collect();
    let flip: Vec<usize> = (0..4).map(|x| 2 * (x % 2) + x / 2).collect();
    // element (r, s) of S3 has index 2r + s and acts by rot^r . flip^s
    let mut images = Vec::with_capacity(6);
    for idx in 0..6 {
        let (r, s) = (idx / 2, idx % 2);
        let mut img: Vec<usize> = (0..4).collect();
        for _ in 0..s {
            img = img.iter().map(|&x| flip[x]).collect();
        }
        for _ in 0..r {
            img = img.iter().map(|&x| rot[x]).collect();
        }
        images.push(img);
    }
    Group::semidirect_product(&n, &h, &GroupAction { images })
        .expect("S4 action")
        .with_name("S4")
}

/// `(Z4 x Z2) : Z2` with `x -> xy`, `y -> y` (SmallGroup(16,3) type).
fn z4z2_semi() -> Group {
    let n = direct(cyclic(4), cyclic(2));
    let phi: Vec<usize> = (0..8)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            2 * a + (a + b) % 2
        })
        .collect();
    let act = GroupAction::from_generator_power(&cyclic(2), phi);
    Group::semidirect_product(&n, &cyclic(2), &act)
        .expect("(Z4xZ2):Z2 action")
        .with_name("(Z4xZ2):Z2")
}

/// The central product `D8 * Z4` as `(Z4 x Z2) : Z2` with `x -> x`,
/// `y -> x^2 y`; its center is cyclic of order 4.
fn d8_z4_central() -> Group {
    let n = direct(cyclic(4), cyclic(2));
    let phi: Vec<usize> = (0..8)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            2 * ((a + 2 * b) % 4) + b
        })
        .collect();
    let act = GroupAction::from_generator_power(&cyclic(2), phi);
    Group::semidirect_product(&n, &cyclic(2), &act)
        .expect("D8*Z4 action")
        .with_name("D8*Z4")
}

/// `Z4 : Z4` with the generator acting by inversion.
fn z4_z4() -> Group {
    let z4 = cyclic(4);
    let phi = vec![0usize, 3, 2, 1];
    let act = GroupAction::from_generator_power(&z4, phi);
    Group::semidirect_product(&z4, &z4, &act)
        .expect("Z4:Z4 action")
        .with_name("Z4:Z4")
}

/// `(Z6 x Z2) : Z2` with `u -> u^-1 t`, `t -> t` (SmallGroup(24,8)).
fn z6z2_semi() -> Group {
    let n = direct(cyclic(6), cyclic(2));
    let phi: Vec<usize> = (0..12)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            2 * (5 * a % 6) + (a + b) % 2
        })
        .collect();
    let act = GroupAction::from_generator_power(&cyclic(2), phi);
    Group::semidirect_product(&n, &cyclic(2), &act)
        .expect("(Z6xZ2):Z2 action")
        .with_name("(Z6xZ2):Z2")
}

/// The Heisenberg group over GF(3): `E9 : Z3` with the shear
/// `(a, b) -> (a + b, b)`.
fn heisenberg3() -> Group {
    let n = e9();
    let phi: Vec<usize> = (0..9)
        .map(|x| {
            let (a, b) = (x / 3, x % 3);
            3 * ((a + b) % 3) + b
        })
        .collect();
    let act = GroupAction::from_generator_power(&cyclic(3), phi);
    Group::semidirect_product(&n, &cyclic(3), &act)
        .expect("E9:Z3 action")
        .with_name("E9:Z3")
}

/// All groups of the given order up to isomorphism, `1 <= order <= 27`.
pub fn catalog(order: usize) -> Result<Vec<Group>, GroupError> {
    let groups = match order {
        1 => vec![Group::trivial()],
        2 | 3 | 5 | 7 | 11 | 13 | 17 | 19 | 23 => vec![cyclic(order)],
        4 => vec![cyclic(4), e4()],
        6 => vec![cyclic(6), s3()],
        8 => vec![
            cyclic(8),
            direct(cyclic(4), cyclic(2)),
            direct(e4(), cyclic(2)).with_name("E8"),
            Group::dihedral(4),
            Group::dicyclic(2),
        ],
        9 => vec![cyclic(9), e9()],
        10 => vec![cyclic(10), Group::dihedral(5)],
        12 => vec![
            cyclic(12),
            direct(cyclic(6), cyclic(2)),
            Group::dihedral(6),
            a4(),
            zn_by_scaling(3, 4, 2, "Z3:Z4"),
        ],
        14 => vec![cyclic(14), Group::dihedral(7)],
        15 => vec![cyclic(15)],
        16 => vec![
            cyclic(16),
            direct(cyclic(8), cyclic(2)),
            direct(cyclic(4), cyclic(4)),
            direct(cyclic(4), e4()).with_name("Z4xZ2xZ2"),
            direct(direct(e4(), cyclic(2)), cyclic(2)).with_name("E16"),
            Group::dihedral(8),
            zn_by_scaling(8, 2, 3, "SD16"),
            zn_by_scaling(8, 2, 5, "M16"),
            Group::dicyclic(4).with_name("Q16"),
            direct(Group::dihedral(4), cyclic(2)),
            direct(Group::dicyclic(2), cyclic(2)),
            z4_z4(),
            z4z2_semi(),
            d8_z4_central(),
        ],
        18 => vec![
            cyclic(18),
            direct(cyclic(6), cyclic(3)),
            Group::dihedral(9),
            direct(cyclic(3), s3()),
            generalized_dihedral(&e9(), "E9:Z2"),
        ],
        20 => vec![
            cyclic(20),
            direct(cyclic(10), cyclic(2)),
            Group::dihedral(10),
            // the Frobenius group, with a faithful action of Z4
            zn_by_scaling(5, 4, 2, "F20"),
            // Z4 acting through its order-2 quotient: the dicyclic group
            Group::dicyclic(5).with_name("Z5:Z4"),
        ],
        21 => vec![cyclic(21), zn_by_scaling(7, 3, 2, "Z7:Z3")],
        22 => vec![cyclic(22), Group::dihedral(11)],
        24 => vec![
            cyclic(24),
            zn_by_scaling(3, 8, 2, "Z3:Z8"),
            Group::sl23(),
            Group::dicyclic(6).with_name("Z3:Q8"),
            direct(cyclic(4), s3()),
            Group::dihedral(12),
            direct(cyclic(2), zn_by_scaling(3, 4, 2, "Z3:Z4")).with_name("Z2x(Z3:Z4)"),
            z6z2_semi(),
            direct(cyclic(12), cyclic(2)),
            direct(cyclic(3), Group::dihedral(4)),
            direct(cyclic(3), Group::dicyclic(2)),
            s4(),
            direct(cyclic(2), a4()).with_name("Z2xA4"),
            direct(e4(), s3()).with_name("Z2xZ2xS3"),
            direct(cyclic(6), e4()).with_name("Z6xZ2xZ2"),
        ],
        25 => vec![cyclic(25), direct(cyclic(5), cyclic(5)).with_name("E25")],
        26 => vec![cyclic(26), Group::dihedral(13)],
        27 => vec![
            cyclic(27),
            direct(cyclic(9), cyclic(3)),
            direct(e9(), cyclic(3)).with_name("E27"),
            zn_by_scaling(9, 3, 4, "Z9:Z3"),
            heisenberg3(),
        ],
        _ => return Err(GroupError::BadOrder { order }),
    };
    debug_assert_eq!(groups.len(), SMALL_GROUP_COUNTS[order - 1]);
    Ok(groups)
}

/// Look up a catalog group by its display name.
pub fn catalog_group(name: &str) -> Option<Group> {
    for order in 1..=27 {
        for g in catalog(order).unwrap() {
            if g.name() == name {
                return Some(g);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Cayley-table files
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub enum CatalogError {
    Io(std::io::Error),
    Group(GroupError),
    BadCt { line: usize, reason: String },
    BadIndex { line: usize },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "i/o error: {e}"),
            CatalogError::Group(e) => write!(f, "{e}"),
            CatalogError::BadCt { line, reason } => {
                write!(f, "bad .ct file at line {line}: {reason}")
            }
            CatalogError::BadIndex { line } => write!(f, "bad catalog index at line {line}"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<std::io::Error> for CatalogError {
    fn from(e: std::io::Error) -> Self {
        CatalogError::Io(e)
    }
}

impl From<GroupError> for CatalogError {
    fn from(e: GroupError) -> Self {
        CatalogError::Group(e)
    }
}

/// Serialize a group as a `.ct` file: line 1 is the order `v`, then `v`
/// lines of `v` space-separated element indices; element 0 is the identity.
pub fn ct_encode(g: &Group) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn ct_decode(name: &str, text: &str) -> Result<Group, CatalogError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .and_then(|l| l.parse().ok())
        .ok_or(CatalogError::BadCt {
            line: 1,
            reason: "missing order".into(),
        })?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines.next().ok_or(CatalogError::BadCt {
            line: i + 2,
            reason: "missing row".into(),
        })?;
        let row: Result<Vec<u16>, _> = line.split_whitespace().map(str::parse::<u16>).collect();
        let row = row.map_err(|e| CatalogError::BadCt {
            line: i + 2,
            reason: e.to_string(),
        })?;
        if row.len() != n {
            return Err(CatalogError::BadCt {
                line: i + 2,
                reason: format!("expected {n} entries"),
            });
        }
        table.extend(row);
    }
    Ok(Group::from_table(name, n, table)?)
}

/// The bundled data directory: `DDDFORGE_DATA` if set, otherwise the
/// repository `data/` directory baked in at compile time.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

/// Read `catalog/index.tsv` under `dir`: lines of `name<TAB>order<TAB>path`.
pub fn read_index(dir: &Path) -> Result<Vec<(String, usize, PathBuf)>, CatalogError> {
    let text = fs::read_to_string(dir.join("catalog/index.tsv"))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split('\t');
        let name = parts.next().ok_or(CatalogError::BadIndex { line: i + 1 })?;
        let order: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(CatalogError::BadIndex { line: i + 1 })?;
        let path = parts.next().ok_or(CatalogError::BadIndex { line: i + 1 })?;
        out.push((name.to_string(), order, dir.join("catalog").join(path)));
    }
    Ok(out)
}

/// Load every indexed group of the given order from a data directory.
/// This is how orders beyond the built-in catalog reach the tool.
pub fn load_groups_of_order(dir: &Path, order: usize) -> Result<Vec<Group>, CatalogError> {
    let mut groups = Vec::new();
    for (name, ord, path) in read_index(dir)? {
        if ord == order {
            let text = fs::read_to_string(&path)?;
            groups.push(ct_decode(&name, &text)?);
        }
    }
    Ok(groups)
}

/// Write the full built-in catalog as `.ct` files plus `index.tsv` under
/// `dir/catalog/`, regenerating the bundled data from the recipes.
pub fn export_catalog(dir: &Path) -> Result<(), CatalogError> {
    let cat_dir = dir.join("catalog");
    fs::create_dir_all(&cat_dir)?;
    let mut index = String::new();
    for order in 1..=27 {
        for (i, g) in catalog(order)?.iter().enumerate() {
            let file = format!("o{order:02}_{i:02}.ct");
            let mut f = fs::File::create(cat_dir.join(&file))?;
            f.write_all(ct_encode(g).as_bytes())?;
            index.push_str(&format!("{}\t{}\t{}\n", g.name(), order, file));
        }
    }
    fs::write(cat_dir.join("index.tsv"), index)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic_groups, find_isomorphism};

    #[test]
    fn counts_match_the_small_group_classification() {
        for order in 1..=27 {
            let groups = catalog(order).unwrap();
            assert_eq!(
                groups.len(),
                SMALL_GROUP_COUNTS[order - 1],
                "group count at order {order}"
            );
        }
    }

    #[test]
    fn entries_are_pairwise_non_isomorphic() {
        for order in 1..=27 {
            let groups = catalog(order).unwrap();
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    assert!(
                        find_isomorphism(&groups[i], &groups[j]).is_none(),
                        "{} and {} are isomorphic",
                        groups[i].name(),
                        groups[j].name()
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_8_names() {
        let names: Vec<String> = catalog(8)
            .unwrap()
            .iter()
            .map(|g| g.name().to_string())
            .collect();
        assert_eq!(names, vec!["Z8", "Z4xZ2", "E8", "D8", "Q8"]);
    }

    #[test]
    fn catalog_27_contains_the_expected_names() {
        let names: Vec<String> = catalog(27)
            .unwrap()
            .iter()
            .map(|g| g.name().to_string())
            .collect();
        for want in ["Z27", "Z9xZ3", "E27", "Z9:Z3", "E9:Z3"] {
            assert!(names.iter().any(|n| n == want), "missing {want}");
        }
    }

    #[test]
    fn catalog_1_is_trivial() {
        let groups = catalog(1).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].order(), 1);
    }

    #[test]
    fn sl23_and_dicyclic24_are_not_isomorphic() {
        // Z3:Q8 and SL(2,3) denote different groups of order 24
        let sl = Group::sl23();
        let dic = Group::dicyclic(6);
        assert!(!are_isomorphic_groups(&sl, &dic));
    }

    #[test]
    fn ct_round_trip() {
        let g = Group::dicyclic(2);
        let text = ct_encode(&g);
        let back = ct_decode("Q8", &text).unwrap();
        assert_eq!(back.table(), g.table());
        assert_eq!(back.name(), "Q8");
    }
}
