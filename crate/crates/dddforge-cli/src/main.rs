//! dddforge: construct, verify, search and classify divisible design
//! digraphs arising as Cayley digraphs of small groups.

use clap::{Args, Parser, Subcommand, ValueEnum};
use dddforge_core::catalog::{self, catalog as group_catalog};
use dddforge_core::classify::classify_all;
use dddforge_core::connset::candidate_count;
use dddforge_core::constructions::{build_by_name, BuildArgs};
use dddforge_core::d6;
use dddforge_core::ddd::{ddd_check, DddCheck};
use dddforge_core::group::Group;
use dddforge_core::report;
use dddforge_core::search::{conjecture_probe, search_group, SearchConfig};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dddforge", version, about = "divisible design digraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditMode {
    /// Oracle every candidate for v <= 16, filter-then-oracle above.
    Auto,
    On,
    Off,
}

#[derive(Args, Clone, Copy)]
struct SearchFlags {
    /// Enumerate connection sets up to group automorphisms (default).
    #[arg(long, default_value_t = true, overrides_with = "no_prune")]
    prune: bool,
    /// Enumerate every connection set; same classes after deduplication.
    #[arg(long = "no-prune")]
    no_prune: bool,
    #[arg(long, value_enum, default_value_t = AuditMode::Auto)]
    audit: AuditMode,
    /// Parallel workers for the enumeration (0 = all cores).
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl SearchFlags {
    fn config(&self) -> SearchConfig {
        let workers = if self.workers == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            self.workers
        };
        SearchConfig {
            prune: !self.no_prune,
            audit: match self.audit {
                AuditMode::Auto => None,
                AuditMode::On => Some(true),
                AuditMode::Off => Some(false),
            },
            workers,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the groups of one order, or export the whole catalog.
    Catalog {
        #[arg(long)]
        order: Option<usize>,
        /// Write every catalog group as a .ct file plus index.tsv.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
    /// Build a named construction and verify its parameters.
    Construct {
        /// diag | allone | square | pair | fano | two-paley | paley-circ | q8 | cyclic-blocks | bgw
        name: String,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        t1: Option<usize>,
        #[arg(long)]
        t2: Option<usize>,
        /// Output path for the digraph6 file (a .json sidecar is written
        /// next to it).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify the divisible-design property of a digraph file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Search one group for connection sets realizing a parameter tuple.
    Search {
        /// Path to a .ct Cayley table, or the name of a catalog group.
        #[arg(long)]
        group: String,
        /// v,k,l1,l2,m,n
        #[arg(long)]
        params: String,
        #[command(flatten)]
        flags: SearchFlags,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Classify all bundled parameter tuples up to a vertex count.
    Classify {
        #[arg(long, default_value_t = 27)]
        max_v: usize,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[command(flatten)]
        flags: SearchFlags,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Probe the skew-BGW digraph on n^2-1 vertices for Cayley realizations.
    Conjecture {
        #[arg(long)]
        n: usize,
    },
}

fn fail(error: &str, detail: impl ToString) -> ExitCode {
    eprintln!(
        "{}",
        json!({ "error": error, "detail": detail.to_string() })
    );
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog { order, export } => cmd_catalog(order, export),
        Command::Construct {
            name,
            q,
            n,
            t,
            t1,
            t2,
            out,
        } => cmd_construct(&name, BuildArgs { q, n, t, t1, t2 }, out),
        Command::Check { path, format } => cmd_check(&path, format),
        Command::Search {
            group,
            params,
            flags,
            format,
            out,
        } => cmd_search(&group, &params, flags, format, out),
        Command::Classify {
            max_v,
            format,
            flags,
            out,
        } => cmd_classify(max_v, format, flags, out),
        Command::Conjecture { n } => cmd_conjecture(n),
    }
}

fn cmd_catalog(order: Option<usize>, export: Option<PathBuf>) -> ExitCode {
    if let Some(dir) = export {
        return match catalog::export_catalog(&dir) {
            Ok(()) => {
                println!("catalog written to {}", dir.join("catalog").display());
                ExitCode::SUCCESS
            }
            Err(e) => fail("export failed", e),
        };
    }
    let Some(order) = order else {
        return fail("missing flag", "--order or --export required");
    };
    let groups = match group_catalog(order) {
        Ok(g) => g,
        Err(e) => return fail("order out of range", e),
    };
    println!(
        "{:<14} {:>5} {:>12} {:>14}",
        "name", "order", "involutions", "inverse-pairs"
    );
    for g in &groups {
        println!(
            "{:<14} {:>5} {:>12} {:>14}",
            g.name(),
            g.order(),
            g.involution_count(),
            g.inverse_pairs().len()
        );
    }
    ExitCode::SUCCESS
}

fn cmd_construct(name: &str, args: BuildArgs, out: Option<PathBuf>) -> ExitCode {
    let construction = match build_by_name(name, &args) {
        Ok(c) => c,
        Err(e) => return fail("construction failed", e),
    };
    let verified = construction.verify();
    let [v, k, l1, l2, m, n] = construction.claimed;
    println!(
        "{}: {} vertices, claimed ({v},{k},{l1},{l2},{m},{n}), verified: {}",
        construction.name,
        construction.digraph.v(),
        verified.is_ok()
    );
    if let Some(path) = &out {
        let (payload, format) = match d6::encode_digraph6(&construction.digraph) {
            Ok(s) => (s + "\n", "digraph6"),
            // beyond the single-byte digraph6 limit: plain text matrix
            Err(_) => (d6::encode_text(&construction.digraph), "text"),
        };
        if let Err(e) = fs::write(path, payload) {
            return fail("write failed", e);
        }
        let sidecar = json!({
            "construction": construction.name,
            "params": { "q": args.q, "n": args.n, "t": args.t, "t1": args.t1, "t2": args.t2 },
            "ddd_params": construction.claimed,
            "verified": verified.is_ok(),
            "format": format,
        });
        let sidecar_path = path.with_extension(
            path.extension()
                .map_or("json".into(), |e| format!("{}.json", e.to_string_lossy())),
        );
        if let Err(e) = fs::write(&sidecar_path, format!("{sidecar:#}\n")) {
            return fail("write failed", e);
        }
    }
    match verified {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!(
                "{}",
                json!({ "error": "verification failed", "detail": e.to_string() })
            );
            ExitCode::from(2)
        }
    }
}

fn cmd_check(path: &Path, format: Format) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail("read failed", e),
    };
    let digraph = match d6::decode_auto(&text) {
        Ok(d) => d,
        Err(e) => return fail("decode failed", e),
    };
    match ddd_check(&digraph) {
        DddCheck::Ddd(cands) => {
            for p in &cands {
                if format == Format::Json {
                    println!(
                        "{}",
                        json!({
                            "params": p.tuple(),
                            "proper": p.proper(),
                            "classes": p.classes(),
                        })
                    );
                } else if p.proper() {
                    println!("DDD{}, proper, partition {:?}", p, p.classes());
                } else {
                    println!("improper: symmetric ({},{},{}) design", p.v, p.k, p.l1);
                }
            }
            ExitCode::SUCCESS
        }
        DddCheck::NotDdd(reason) => {
            if format == Format::Json {
                println!("{}", json!({ "not_ddd": reason.to_string() }));
            } else {
                println!("NotDdd: {reason}");
            }
            eprintln!("{}", json!({ "error": "not a DDD", "detail": reason.to_string() }));
            ExitCode::from(2)
        }
    }
}

fn load_group(spec: &str) -> Result<Group, String> {
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let name = path
            .file_stem()
            .map_or("group".to_string(), |s| s.to_string_lossy().into());
        return catalog::ct_decode(&name, &text).map_err(|e| e.to_string());
    }
    catalog::catalog_group(spec).ok_or_else(|| format!("no catalog group named '{spec}'"))
}

fn parse_params(text: &str) -> Result<[usize; 6], String> {
    let nums: Result<Vec<usize>, _> = text.split(',').map(|s| s.trim().parse()).collect();
    let nums = nums.map_err(|e| format!("bad --params: {e}"))?;
    if nums.len() != 6 {
        return Err("expected --params v,k,l1,l2,m,n".into());
    }
    Ok([nums[0], nums[1], nums[2], nums[3], nums[4], nums[5]])
}

fn cmd_search(
    group_spec: &str,
    params_text: &str,
    flags: SearchFlags,
    format: Format,
    out: Option<PathBuf>,
) -> ExitCode {
    let group = match load_group(group_spec) {
        Ok(g) => g,
        Err(e) => return fail("bad group", e),
    };
    let params = match parse_params(params_text) {
        Ok(p) => p,
        Err(e) => return fail("bad parameters", e),
    };
    if group.order() != params[0] {
        return fail(
            "bad parameters",
            format!("group order {} != v {}", group.order(), params[0]),
        );
    }
    let outcome = search_group(&group, params, &flags.config());
    eprintln!(
        "enumerated {} of {} candidates",
        outcome.stats.candidates,
        candidate_count(&group, params[1])
    );
    let rendered = match format {
        Format::Json => report::search_outcome_json(&outcome, out.is_some()),
        _ => report::outcome_text(&outcome),
    };
    match &out {
        Some(path) => {
            if let Err(e) = fs::write(path, &rendered) {
                return fail("write failed", e);
            }
        }
        None => print!("{rendered}"),
    }
    if outcome.audit_failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "{}",
            json!({ "error": "audit disagreements", "detail": outcome.audit_failures.len() })
        );
        ExitCode::from(2)
    }
}

fn cmd_classify(
    max_v: usize,
    format: Format,
    flags: SearchFlags,
    out: Option<PathBuf>,
) -> ExitCode {
    let rows = classify_all(max_v.min(27), &flags.config());
    let rendered = match format {
        Format::Csv => report::classification_csv(&rows),
        Format::Md => report::classification_markdown(&rows),
        Format::Json => report::classification_json(&rows, true),
    };
    match &out {
        Some(path) => {
            if let Err(e) = fs::write(path, &rendered) {
                return fail("write failed", e);
            }
        }
        None => print!("{rendered}"),
    }
    let audit_failures: usize = rows.iter().map(|r| r.audit_failures.len()).sum();
    if audit_failures > 0 {
        eprintln!(
            "{}",
            json!({ "error": "audit disagreements", "detail": audit_failures })
        );
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn cmd_conjecture(n: usize) -> ExitCode {
    let data_dir = catalog::data_dir();
    let report = match conjecture_probe(n, Some(&data_dir)) {
        Ok(r) => r,
        Err(e) => return fail("probe failed", e),
    };
    let [v, k, l1, l2, m, nn] = report.params;
    println!(
        "bgw(n={n}): parameters ({v},{k},{l1},{l2},{m},{nn}), verified: {}",
        report.ddd_verified
    );
    if !report.groups_available {
        println!(
            "no groups of order {} available; supply .ct files via {} to test Cayley realization",
            report.order,
            catalog::DATA_DIR_ENV
        );
    } else if report.realizations.is_empty() {
        println!(
            "no Cayley realization over: {}",
            report.groups_tried.join(", ")
        );
    } else {
        for (name, s) in &report.realizations {
            println!("Cayley over {name} with S = {s:?}");
        }
    }
    if report.ddd_verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        assert_eq!(parse_params("8,3,0,1,4,2").unwrap(), [8, 3, 0, 1, 4, 2]);
        assert!(parse_params("8,3,0,1").is_err());
        assert!(parse_params("a,b,c,d,e,f").is_err());
    }
}
