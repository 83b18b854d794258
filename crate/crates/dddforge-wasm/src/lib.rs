//! Browser bindings: build a construction, check a digraph, or search a
//! group, returning JSON the demo page renders onto a canvas. All heavy
//! lifting lives in dddforge-core; this crate only translates.

use dddforge_core::catalog::{catalog, catalog_group};
use dddforge_core::connset::candidate_count;
use dddforge_core::constructions::{build_by_name, BuildArgs};
use dddforge_core::d6;
use dddforge_core::ddd::{ddd_check, DddCheck, DddParams};
use dddforge_core::digraph::{cayley_digraph, Digraph};
use dddforge_core::search::{search_group, SearchConfig};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn matrix_bits(d: &Digraph) -> String {
    let v = d.v();
    let mut bits = String::with_capacity(v * v);
    for x in 0..v {
        for y in 0..v {
            bits.push(if d.has_arc(x, y) { '1' } else { '0' });
        }
    }
    bits
}

fn verdict_json(d: &Digraph) -> serde_json::Value {
    match ddd_check(d) {
        DddCheck::Ddd(cands) => {
            let readings: Vec<serde_json::Value> = cands
                .iter()
                .map(|p: &DddParams| {
                    json!({
                        "params": p.tuple(),
                        "proper": p.proper(),
                        "class_of": p.class_of,
                    })
                })
                .collect();
            json!({ "ddd": true, "readings": readings })
        }
        DddCheck::NotDdd(reason) => json!({ "ddd": false, "reason": reason.to_string() }),
    }
}

/// The groups available to the search panel: name, order, inverse pairs.
#[wasm_bindgen]
pub fn group_list() -> String {
    let mut rows = Vec::new();
    for order in 2..=27usize {
        for g in catalog(order).unwrap() {
            if !g.inverse_pairs().is_empty() {
                rows.push(json!({
                    "name": g.name(),
                    "order": order,
                    "pairs": g.inverse_pairs().len(),
                }));
            }
        }
    }
    json!(rows).to_string()
}

/// Build a named construction; negative arguments mean "not supplied".
#[wasm_bindgen]
pub fn build_construction(name: &str, q: i32, n: i32, t: i32, t1: i32, t2: i32) -> String {
    let opt = |x: i32| if x < 0 { None } else { Some(x as usize) };
    let args = BuildArgs {
        q: opt(q),
        n: opt(n),
        t: opt(t),
        t1: opt(t1),
        t2: opt(t2),
    };
    match build_by_name(name, &args) {
        Ok(c) => {
            let d6 = d6::encode_digraph6(&c.digraph).ok();
            json!({
                "ok": true,
                "name": c.name,
                "v": c.digraph.v(),
                "claimed": c.claimed,
                "verified": c.verify().is_ok(),
                "matrix": matrix_bits(&c.digraph),
                "d6": d6,
                "check": verdict_json(&c.digraph),
            })
            .to_string()
        }
        Err(e) => json!({ "ok": false, "error": e.to_string() }).to_string(),
    }
}

/// Decode a digraph6 or plain-text matrix and run the verification oracle.
#[wasm_bindgen]
pub fn check_digraph(text: &str) -> String {
    match d6::decode_auto(text.trim()) {
        Ok(d) => json!({
            "ok": true,
            "v": d.v(),
            "matrix": matrix_bits(&d),
            "check": verdict_json(&d),
        })
        .to_string(),
        Err(e) => json!({ "ok": false, "error": e.to_string() }).to_string(),
    }
}

/// Exhaustive search of one catalog group for a parameter tuple
/// `v,k,l1,l2,m,n`; returns the classes with witness sets and matrices.
#[wasm_bindgen]
pub fn search(group_name: &str, params_csv: &str) -> String {
    let Some(group) = catalog_group(group_name) else {
        return json!({ "ok": false, "error": format!("unknown group {group_name}") }).to_string();
    };
    let nums: Result<Vec<usize>, _> = params_csv.split(',').map(|s| s.trim().parse()).collect();
    let params: [usize; 6] = match nums {
        Ok(v) if v.len() == 6 => [v[0], v[1], v[2], v[3], v[4], v[5]],
        _ => return json!({ "ok": false, "error": "expected v,k,l1,l2,m,n" }).to_string(),
    };
    if params[0] != group.order() {
        return json!({ "ok": false, "error": "v must equal the group order" }).to_string();
    }
    let budget = candidate_count(&group, params[1]);
    if budget > 2_000_000 {
        return json!({
            "ok": false,
            "error": format!("{budget} candidate sets is too many for the browser; use the command-line tool"),
        })
        .to_string();
    }
    let out = search_group(&group, params, &SearchConfig::default());
    let hits: Vec<serde_json::Value> = out
        .hits
        .iter()
        .map(|h| {
            let d = cayley_digraph(&group, &h.connection_set).unwrap();
            json!({
                "d6": h.label.0,
                "connection_set": h.connection_set,
                "matrix": matrix_bits(&d),
            })
        })
        .collect();
    json!({
        "ok": true,
        "group": out.group_name,
        "params": out.params,
        "total": out.hits.len(),
        "candidates": candidate_count(&group, params[1]),
        "stats": {
            "candidates": out.stats.candidates,
            "filter_passed": out.stats.filter_passed,
            "oracle_confirmed": out.stats.oracle_confirmed,
        },
        "hits": hits,
    })
    .to_string()
}
