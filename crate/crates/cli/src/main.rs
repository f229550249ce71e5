//! `gcl`: build, inspect and verify graph complexes.
//!
//! Every command emits a JSON envelope on stdout (or `--out`): a
//! deterministic `body`, an FNV checksum of the body bytes, and the wall
//! time outside the checksummed region. Exit codes: 0 all checks pass,
//! 1 a check failed, 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use graph_complexes::{
    b_chain_kg, b_sark_kg, b_edge, cycle_graph, graph_from_edge_list, hom_ex_complex, hom_poset,
    ind_complex, kneser_graph, neighborhood_poset, path_graph, reversal_involution, Graph,
    SetFamily,
};
use homology_engine::{
    connectivity_estimate, euler_char, reduced_betti, reduced_betti_capped,
};
use poset_core::complex_from_json;
use verify::{run_suite, BettiLine, InstanceReport, SuiteName, SuiteParams, VerificationReport};
use z2_core::z2complex_from_json;

#[derive(Parser)]
#[command(name = "gcl", version, about = "graph-complex laboratory")]
struct Cli {
    /// Master seed, recorded in reports.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads (default: all logical cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KneserComplexKind {
    Chain,
    Sark,
    Box,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table, freeness and equality verdict for all avatars of a graph.
    Avatars {
        /// Whitespace edge-list file (`u v` per line, optional `p n m` header).
        graph: PathBuf,
    },
    /// Independence complex of a cycle or path with the reversal action.
    Ind {
        #[arg(long, conflicts_with = "path")]
        cycle: Option<usize>,
        #[arg(long)]
        path: Option<usize>,
        /// Also report the fixed-point complex under the reversal.
        #[arg(long)]
        fixed: bool,
        #[arg(long)]
        large: bool,
        /// Cap the homology computation at this dimension.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Kneser box complexes over the k-subsets of [n].
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        complex: KneserComplexKind,
        #[arg(long)]
        large: bool,
    },
    /// Hom poset (or extended Hom complex) of two graphs.
    Hom {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Round-trip a free Z2-complex through its compatibility graph.
    Csorba {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Reduced GF(2) homology of a complex file.
    Betti {
        complex: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: omega, sigma, theta, extended, enriched, avatars,
        /// kneser, csorba, ind, hom, fatlat.
        #[arg(long)]
        suite: String,
        /// Exhaustive corpus bound: connected graphs on 3..=K vertices.
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Number of seeded 6-vertex samples in graph corpora.
        #[arg(long)]
        six: Option<usize>,
        /// Instance count for sampled-poset suites.
        #[arg(long)]
        count: Option<usize>,
        /// Independence-complex parameter bound.
        #[arg(long)]
        p: Option<usize>,
        /// Unlock the larger documented size budgets.
        #[arg(long)]
        large: bool,
        /// Randomized restart budget for collapse searches.
        #[arg(long)]
        restarts: Option<u32>,
    },
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

/// Prints the envelope; the checksum covers exactly the serialized body.
fn emit(body: serde_json::Value, pass: bool, out: Option<&PathBuf>, started: Instant) -> ExitCode {
    let body_bytes = serde_json::to_string(&body).expect("serializable body");
    let envelope = serde_json::json!({
        "schema": 1,
        "pass": pass,
        "body_checksum": format!("fnv1a:{:016x}", fnv1a(body_bytes.as_bytes())),
        "body": body,
        "wall_time_ms": started.elapsed().as_millis() as u64,
    });
    let text = serde_json::to_string_pretty(&envelope).expect("serializable envelope");
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("gcl: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail_usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("gcl: {msg}");
    ExitCode::from(2)
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            return fail_usage("could not configure the worker pool");
        }
    }
    let started = Instant::now();
    match run(cli, started) {
        Ok(code) => code,
        Err(msg) => fail_usage(msg),
    }
}

fn run(cli: Cli, started: Instant) -> Result<ExitCode, String> {
    let out = cli.out.clone();
    match cli.command {
        Command::Avatars { graph } => {
            let g = graph_from_edge_list(&read(&graph)?).map_err(|e| e.to_string())?;
            if g.edge_count() == 0 {
                return Err("graph has no edges; avatars are undefined".into());
            }
            let mut inst = verify::suites::avatar_instance(&g);
            chromatic_note(&mut inst, &g);
            let pass = inst.pass;
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, pass, out.as_ref(), started))
        }
        Command::Ind {
            cycle,
            path,
            fixed,
            large,
            max_dim,
        } => {
            let (name, g, n) = match (cycle, path) {
                (Some(n), None) => ("cycle", cycle_graph(n).map_err(|e| e.to_string())?, n),
                (None, Some(n)) => ("path", path_graph(n).map_err(|e| e.to_string())?, n),
                _ => return Err("pass exactly one of --cycle N or --path N".into()),
            };
            let cap = if large { 20 } else { 14 };
            if n > cap {
                return Err(format!(
                    "n={n} exceeds the budget ({cap}); use --large for up to 20"
                ));
            }
            let x = ind_complex(&g, Some(&reversal_involution(n))).map_err(|e| e.to_string())?;
            let mut inst = InstanceReport::new(format!("ind({name}[{n}])"));
            let betti = reduced_betti_capped(x.complex(), max_dim);
            inst.betti_line(BettiLine::new("complex", &betti, Some(x.complex())));
            if fixed {
                match x.fixed_point_complex() {
                    Some(fp) => {
                        let bf = reduced_betti_capped(&fp, max_dim);
                        inst.betti_line(BettiLine::new("fixed", &bf, Some(&fp)));
                    }
                    None => inst.betti_line(BettiLine::empty("fixed")),
                }
            }
            inst.note(
                "euler",
                format!("{}", euler_char(x.complex())),
            );
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, true, out.as_ref(), started))
        }
        Command::Kneser { n, k, complex, large } => {
            if k == 0 || k > n {
                return Err(format!("need 1 <= k <= n, got k={k}, n={n}"));
            }
            let cap = if large { 8 } else { 5 };
            if n > cap {
                return Err(format!(
                    "n={n} exceeds the budget ({cap}); use --large for up to 8"
                ));
            }
            let family = SetFamily::k_subsets(n, k).map_err(|e| e.to_string())?;
            let kg = kneser_graph(&family).map_err(|e| e.to_string())?;
            let mut inst = InstanceReport::new(format!("kneser[n={n},k={k}]"));
            if kg.edge_count() == 0 {
                inst.note(
                    "no-edges",
                    "the Kneser graph is edgeless (members pairwise intersect); box complexes are undefined",
                );
                let body = serde_json::to_value(&inst).expect("report");
                return Ok(emit(body, true, out.as_ref(), started));
            }
            let wp = neighborhood_poset(&kg).map_err(|e| e.to_string())?;
            let box_complex = z2_core::box_poset(&wp)
                .order_z2complex()
                .map_err(|e| e.to_string())?;
            let box_betti = reduced_betti(box_complex.complex());
            match complex {
                KneserComplexKind::Chain => {
                    let x = b_chain_kg(&family).map_err(|e| e.to_string())?;
                    let b = reduced_betti(x.complex());
                    inst.betti_line(BettiLine::new("b_chain_kg", &b, Some(x.complex())));
                    inst.betti_line(BettiLine::new("box_chain", &box_betti, None));
                    inst.check("matches-box-avatar", b == box_betti, format!("{b} vs {box_betti}"));
                }
                KneserComplexKind::Sark => {
                    let x = b_sark_kg(&family).map_err(|e| e.to_string())?;
                    let b = reduced_betti(x.complex());
                    inst.betti_line(BettiLine::new("b_sark_kg", &b, Some(x.complex())));
                    let b0 = verify::suites::b0_reference(&mut inst, &kg, &box_betti);
                    inst.check("matches-b0-avatar", b == b0, format!("{b} vs {b0}"));
                }
                KneserComplexKind::Box => {
                    inst.betti_line(BettiLine::new("box_chain", &box_betti, Some(box_complex.complex())));
                    let x = b_chain_kg(&family).map_err(|e| e.to_string())?;
                    let b = reduced_betti(x.complex());
                    inst.check("matches-b_chain_kg", b == box_betti, format!("{box_betti} vs {b}"));
                }
            }
            let pass = inst.pass;
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, pass, out.as_ref(), started))
        }
        Command::Hom {
            g,
            h,
            extended,
            max_dim,
        } => {
            let gg = graph_from_edge_list(&read(&g)?).map_err(|e| e.to_string())?;
            let hh = graph_from_edge_list(&read(&h)?).map_err(|e| e.to_string())?;
            let mut inst = InstanceReport::new(format!(
                "hom(g[n={}],h[n={}]{})",
                gg.vertex_count(),
                hh.vertex_count(),
                if extended { ",extended" } else { "" }
            ));
            if extended {
                let k = hom_ex_complex(&gg, &hh).map_err(|e| e.to_string())?;
                let b = reduced_betti_capped(&k, max_dim);
                inst.betti_line(BettiLine::new("hom_ex", &b, Some(&k)));
                // no chromatic note here: the connectivity bound reads off
                // the plain Hom complex, not the extended one
            } else {
                let hp = hom_poset(&gg, &hh).map_err(|e| e.to_string())?;
                if hp.poset.is_empty() {
                    inst.betti_line(BettiLine::empty("hom"));
                    inst.note("empty", "no multihomomorphisms exist");
                } else {
                    let k = hp.poset.order_complex().map_err(|e| e.to_string())?;
                    let b = reduced_betti_capped(&k, max_dim);
                    inst.betti_line(BettiLine::new("hom", &b, Some(&k)));
                    if gg.vertex_count() == 2 && gg.edge_count() == 1 {
                        let wp = neighborhood_poset(&hh).map_err(|e| e.to_string())?;
                        let bx = z2_core::box_poset(&wp);
                        let bb = reduced_betti(&bx.poset().order_complex().unwrap());
                        inst.check(
                            "edge-source-matches-box-poset",
                            b == bb && hp.poset.len() == bx.poset().len(),
                            format!("{b} vs {bb}"),
                        );
                    }
                    odd_cycle_note(&mut inst, &gg, &k);
                }
            }
            let pass = inst.pass;
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, pass, out.as_ref(), started))
        }
        Command::Csorba { complex } => {
            let x = z2complex_from_json(&read(&complex)?).map_err(|e| e.to_string())?;
            if !x.is_free() {
                return Err("the involution has an invariant face; the round trip needs a free action".into());
            }
            let params = SuiteParams {
                seed: cli.seed,
                ..SuiteParams::default()
            };
            let inst = verify::suites::csorba_instance("csorba(input)", &x, &params);
            let pass = inst.pass;
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, pass, out.as_ref(), started))
        }
        Command::Betti { complex, max_dim } => {
            let k = complex_from_json(&read(&complex)?).map_err(|e| e.to_string())?;
            let mut inst = InstanceReport::new("betti");
            let b = reduced_betti_capped(&k, max_dim);
            inst.betti_line(BettiLine::new("complex", &b, Some(&k)));
            inst.note("euler", format!("{}", euler_char(&k)));
            let conn = connectivity_estimate(&k);
            inst.note(
                "connectivity",
                format!("{} (homology-only)", conn.connectivity),
            );
            let body = serde_json::to_value(&inst).expect("report");
            Ok(emit(body, true, out.as_ref(), started))
        }
        Command::Verify {
            suite,
            max_vertices,
            six,
            count,
            p,
            large,
            restarts,
        } => {
            let name: SuiteName = suite.parse().map_err(|e: verify::VerifyError| e.to_string())?;
            let defaults = SuiteParams::default();
            let params = SuiteParams {
                seed: cli.seed,
                max_vertices: max_vertices.unwrap_or(defaults.max_vertices),
                six_vertex_samples: six.unwrap_or(defaults.six_vertex_samples),
                count: count.unwrap_or(defaults.count),
                p: p.unwrap_or(defaults.p),
                large,
                restarts: restarts.unwrap_or(defaults.restarts),
            };
            let report: VerificationReport =
                run_suite(name, &params).map_err(|e| e.to_string())?;
            let pass = report.pass;
            let body = serde_json::to_value(&report).expect("report");
            Ok(emit(body, pass, out.as_ref(), started))
        }
    }
}

/// Heuristic chromatic line from homological connectivity of the box
/// avatar. Homology-only evidence: the bound is Lovasz-type, chi >= c + 3.
fn chromatic_note(inst: &mut InstanceReport, g: &Graph) {
    let wp = match neighborhood_poset(g) {
        Ok(wp) => wp,
        Err(_) => return,
    };
    let bx = z2_core::box_poset(&wp);
    if let Ok(k) = bx.poset().order_complex() {
        let conn = connectivity_estimate(&k).connectivity;
        inst.note(
            "chromatic-bound",
            format!(
                "chi(G) >= {} [heuristic: homological connectivity {} of the box avatar, not pi_1-certified]",
                conn + 3,
                conn
            ),
        );
    }
    let _ = b_edge(g);
}

/// For odd-cycle sources the connectivity of the Hom complex feeds the
/// stronger chromatic bound; still homology-only evidence.
fn odd_cycle_note(inst: &mut InstanceReport, g: &Graph, k: &poset_core::SimplicialComplex) {
    let n = g.vertex_count();
    let is_odd_cycle = n >= 3
        && n % 2 == 1
        && g.edge_count() == n
        && g.is_connected()
        && (0..n).all(|v| g.neighbors_mask(v).count_ones() == 2);
    if is_odd_cycle {
        let conn = connectivity_estimate(k).connectivity;
        inst.note(
            "chromatic-bound",
            format!(
                "chi(H) >= {} [heuristic: Hom(odd cycle, H) homological connectivity {}, not pi_1-certified]",
                conn + 4,
                conn
            ),
        );
    }
}
