use std::fmt::Write as _;
use std::time::Duration;

use anyhow::{bail, Result};
use serde::Serialize;
use sporbits_core::fpf::{
    basic_kind, basics_decomposition, enumerate_fpf, glb, odd_rank_constraint_holds,
    symplectic_essential_set, wiring_ascii, BasicKind, FpfPoset,
};
use sporbits_core::ideals::{catalog_entry, classify_orbit, verify_degeneration, verify_knutson_miller};
use sporbits_core::pairperm::{pair_permutations, DEFAULT_PAIR_SEARCH_BOUND};

use crate::config::{FileConfig, RunConfig};
use crate::reports::*;
use crate::{input, verify_all, Cli, Command, Format};

/// Rendered output plus whether the command's check passed.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

/// Size from which degeneration runs need `--deep`.
pub const DEEP_ONLY_SIZE: usize = 6;

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(value)?,
        Format::Text | Format::Dot => text(),
    })
}

pub fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let file = match &cli.global.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    RunConfig::resolve(&cli.global, file)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = resolve_config(cli)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()?;
    pool.install(|| dispatch(&cli.command, &cfg))
}

fn passed(output: String) -> Outcome {
    Outcome { output, ok: true }
}

fn boxes_text(boxes: &[sporbits_core::EssentialBox]) -> String {
    if boxes.is_empty() {
        return "(none)".into();
    }
    boxes
        .iter()
        .map(|b| format!("({},{}) rank {}", b.row, b.col, b.rank))
        .collect::<Vec<_>>()
        .join(", ")
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    let f = cfg.format;
    match cmd {
        Command::Enumerate { n } => {
            let involutions = enumerate_fpf(*n, cfg.max_half_size)?;
            let r = EnumerateReport {
                n: *n,
                count: involutions.len(),
                involutions,
            };
            Ok(passed(emit(f, &r, || {
                let mut s = String::new();
                for x in &r.involutions {
                    let _ = writeln!(s, "{x}");
                }
                let _ = write!(s, "{} involutions", r.count);
                s
            })?))
        }
        Command::Poset { n } => {
            let poset = FpfPoset::build(*n, cfg.max_half_size)?;
            let out = match f {
                Format::Dot => poset.to_dot(),
                _ => emit(f, &poset.hasse(), || {
                    let h = poset.hasse();
                    let mut s = String::new();
                    for &(u, l) in &h.covers {
                        let _ = writeln!(s, "{} > {}", h.elements[u], h.elements[l]);
                    }
                    let _ = write!(s, "{} elements, {} covers", h.elements.len(), h.covers.len());
                    s
                })?,
            };
            Ok(passed(out))
        }
        Command::Wiring { iota } => {
            let x = input::involution(iota)?;
            let r = WiringReport {
                arcs: x.arcs(),
                statistics: x.pair_statistics(),
                ascii: wiring_ascii(&x),
                iota: x,
            };
            Ok(passed(emit(f, &r, || r.ascii.trim_end().to_string())?))
        }
        Command::Boxes { iota } => {
            let x = input::involution(iota)?;
            let r = BoxesReport {
                boxes: symplectic_essential_set(&x).boxes,
                odd_rank_constraint: odd_rank_constraint_holds(&x),
                iota: x,
            };
            Ok(passed(emit(f, &r, || {
                format!("{}: {}", r.iota, boxes_text(&r.boxes))
            })?))
        }
        Command::Basics { iota } => {
            let x = input::involution(iota)?;
            let parts: Vec<_> = basics_decomposition(&x)?.into_iter().collect();
            let meet = glb(&parts, x.n())?;
            let parts = parts
                .into_iter()
                .map(|p| {
                    let kind = match basic_kind(&p) {
                        Some(BasicKind::Even(_)) => PartKind::Even,
                        Some(BasicKind::Odd { .. }) => PartKind::Odd,
                        None => bail!("{p} is not a basic element"),
                    };
                    Ok(BasicPart {
                        boxes: symplectic_essential_set(&p).boxes,
                        involution: p,
                        kind,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let r = BasicsReport {
                glb_matches: meet == x,
                glb: meet,
                parts,
                iota: x,
            };
            let out = emit(f, &r, || {
                let mut s = String::new();
                for p in &r.parts {
                    let kind = match p.kind {
                        PartKind::Even => "even",
                        PartKind::Odd => "odd",
                    };
                    let _ = writeln!(s, "{} [{kind}] {}", p.involution, boxes_text(&p.boxes));
                }
                let verdict = if r.glb_matches { "ok" } else { "MISMATCH" };
                let _ = write!(s, "glb = {} ({verdict})", r.glb);
                s
            })?;
            Ok(Outcome {
                output: out,
                ok: r.glb_matches,
            })
        }
        Command::Pairperms { iota } => {
            let x = input::involution(iota)?;
            let r = pair_permutations(&x, DEFAULT_PAIR_SEARCH_BOUND)?;
            Ok(passed(emit(f, &r, || {
                let words: Vec<String> = r.perms.iter().map(ToString::to_string).collect();
                format!("{} (length {})", words.join(" "), r.length)
            })?))
        }
        Command::VerifyAll { n } => {
            let budget = cfg.degeneration_budget(false);
            let r = verify_all::run(*n, cfg.max_half_size, cfg.seed, &budget)?;
            let out = emit(f, &r, || {
                let mut s = String::new();
                for c in &r.checks {
                    let verdict = if c.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{verdict} {} ({} checked)", c.name, c.checked);
                    for fail in &c.failures {
                        let _ = writeln!(s, "  {fail}");
                    }
                }
                s.trim_end().to_string()
            })?;
            Ok(Outcome { output: out, ok: r.ok })
        }
        Command::VerifyDegeneration { iota } => {
            let x = input::involution(iota)?;
            if x.size() >= DEEP_ONLY_SIZE && !cfg.deep {
                bail!("size {} degenerations need --deep", x.size());
            }
            let mut r = verify_degeneration(&x, &cfg.degeneration_budget(false))?;
            if f == Format::Json {
                // timings vary run to run; keep JSON reports reproducible
                r.timings = Default::default();
                r.left_stats.elapsed = Duration::ZERO;
                r.right_stats.elapsed = Duration::ZERO;
            }
            let out = emit(f, &r, || {
                let mut s = String::new();
                let words: Vec<String> = r.pair_permutations.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "iota: {}", r.iota);
                let _ = writeln!(s, "pair permutations: {}", words.join(" "));
                let _ = writeln!(s, "left generators: {}", r.left.generators().len());
                let _ = writeln!(s, "right generators: {}", r.right.generators().len());
                for w in &r.witnesses {
                    let _ = writeln!(s, "witness ({:?}): {}", w.side, w.generator);
                }
                let _ = writeln!(
                    s,
                    "time: left {} ms, right {} ms, compare {} ms",
                    r.timings.left_ms, r.timings.right_ms, r.timings.compare_ms
                );
                let _ = write!(s, "equal: {}", r.equal);
                s
            })?;
            Ok(Outcome { output: out, ok: r.equal })
        }
        Command::VerifyKm { pi } => {
            let p = input::permutation(pi)?;
            let r = KmReport {
                essential_set: p.essential_set().boxes,
                generators: sporbits_core::ideals::fulton_minors(&p).len(),
                groebner_basis: verify_knutson_miller(&p)?,
                pi: p,
            };
            let out = emit(f, &r, || {
                format!(
                    "{}: {} minors, Gröbner basis: {}",
                    r.pi, r.generators, r.groebner_basis
                )
            })?;
            Ok(Outcome {
                output: out,
                ok: r.groebner_basis,
            })
        }
        Command::Classify { matrix } => {
            let m = input::matrix_file(matrix)?;
            let r = ClassifyReport {
                iota: classify_orbit(&m)?,
                matrix: m.to_strings(),
            };
            Ok(passed(emit(f, &r, || r.iota.to_string())?))
        }
        Command::OrbitIdeal { iota } => {
            let e = catalog_entry(&input::involution(iota)?)?;
            Ok(passed(emit(f, &e, || {
                let mut s = format!("{} ({:?})", e.iota, e.source);
                for g in e.ideal.generator_strings() {
                    let _ = write!(s, "\n{g}");
                }
                s
            })?))
        }
        Command::Groebner { ideal, order } => {
            let i = input::ideal_file(ideal)?;
            let ord = input::term_order(order, i.vars())?;
            let gb = i.groebner(&ord, &cfg.budget)?;
            let mut stats = gb.stats.clone();
            if f == Format::Json {
                stats.elapsed = Duration::ZERO;
            }
            let r = GroebnerReport {
                basis: sporbits_core::poly::Ideal::new(i.vars().clone(), gb.polys().to_vec())?,
                order: ord,
                stats,
            };
            Ok(passed(emit(f, &r, || r.basis.generator_strings().join("\n"))?))
        }
    }
}

pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Process exit status for a command result.
pub fn exit_code(result: &Result<Outcome>) -> u8 {
    match result {
        Ok(o) if o.ok => 0,
        Ok(_) => EXIT_VERIFICATION_FAILED,
        Err(err) => {
            let budget = err.chain().any(|e| {
                matches!(
                    e.downcast_ref::<sporbits_core::Error>(),
                    Some(sporbits_core::Error::BudgetExhausted { .. })
                )
            });
            if budget {
                EXIT_BUDGET
            } else {
                EXIT_USAGE
            }
        }
    }
}
