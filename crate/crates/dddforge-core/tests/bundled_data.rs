//! The bundled data directory must stay in sync with the in-code recipes.

use dddforge_core::catalog::{catalog, ct_decode, data_dir, read_index, SMALL_GROUP_COUNTS};
use std::collections::BTreeMap;

#[test]
fn bundled_catalog_matches_recipes() {
    let dir = data_dir();
    let index = read_index(&dir).expect("bundled catalog index");
    assert_eq!(index.len(), SMALL_GROUP_COUNTS.iter().sum::<usize>());
    let mut by_name: BTreeMap<String, (usize, std::path::PathBuf)> = BTreeMap::new();
    for (name, order, path) in index {
        assert!(
            by_name.insert(name, (order, path)).is_none(),
            "duplicate name"
        );
    }
    for order in 1..=27 {
        for g in catalog(order).unwrap() {
            let (idx_order, path) = by_name
                .get(g.name())
                .unwrap_or_else(|| panic!("{} missing from index", g.name()));
            assert_eq!(*idx_order, order);
            let text = std::fs::read_to_string(path).unwrap();
            let loaded = ct_decode(g.name(), &text).unwrap();
            assert_eq!(loaded.table(), g.table(), "{} table drifted", g.name());
        }
    }
}

#[test]
fn user_supplied_groups_load_from_an_overriding_data_dir() {
    // write a minimal data directory with one order-48 Cayley table and
    // load it back by order, the path user-supplied tables take
    use dddforge_core::catalog::{ct_encode, load_groups_of_order};
    use dddforge_core::group::Group;

    let dir = std::env::temp_dir().join(format!("dddforge-data-{}", std::process::id()));
    let cat = dir.join("catalog");
    std::fs::create_dir_all(&cat).unwrap();
    let g48 = Group::direct_product(&Group::cyclic(24), &Group::cyclic(2));
    std::fs::write(cat.join("z24xz2.ct"), ct_encode(&g48)).unwrap();
    std::fs::write(cat.join("index.tsv"), "Z24xZ2\t48\tz24xz2.ct\n").unwrap();

    let groups = load_groups_of_order(&dir, 48).unwrap();
    assert_eq!(groups.len(), 1);
    assert_eq!(groups[0].name(), "Z24xZ2");
    assert_eq!(groups[0].order(), 48);
    assert!(load_groups_of_order(&dir, 21).unwrap().is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bundled_tables_pass_full_validation() {
    // from_table re-runs the Latin-square + identity + associativity checks
    let dir = data_dir();
    for (name, _, path) in read_index(&dir).unwrap() {
        let text = std::fs::read_to_string(&path).unwrap();
        ct_decode(&name, &text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
