//! The `mgraph` command line.
//!
//! Exit codes: 0 = property holds / nothing found, 1 = counterexample
//! confirmed, 2 = bad input or parameters, 3 = inconclusive (cap reached).
//! The default enumeration cap can be overridden with `MGRAPH_CAP`.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::families::{expected_stats, Family, FamilySpec, FamilyStats};
use crate::hunt::{hunt, hunt_with_workers, HuntConfig};
use crate::matching::{
    enumerate_maximum_matchings, gallai_edmonds, maximum_matching, tutte_berge_witness,
};
use crate::multigraph::{export_dot, parse_mgf, serialize_mgf, Multigraph};
use crate::verify::{conjecture_holds, is_counterexample, PairMode, Verdict};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FOUND: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

pub const CAP_ENV: &str = "MGRAPH_CAP";
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "mgraph",
    version,
    about = "Maximum-matching toolkit for loop-free multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it as MGF.
    Build {
        #[arg(long)]
        family: Family,
        #[arg(long = "r")]
        r: u32,
        /// Output file; MGF goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print size, degree and matching statistics.
    Info { path: Option<PathBuf> },
    /// Check the exposed-pair property or a counterexample claim.
    Verify {
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "conjecture")]
        mode: Mode,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List every maximum matching, one per line.
    Enumerate {
        path: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Search random regular multigraphs for counterexamples.
    Hunt {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 10)]
        min_n: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        simple_only: bool,
        #[arg(long)]
        cap: Option<usize>,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        workers: Option<usize>,
        /// Directory receiving one MGF file per counterexample.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Render as Graphviz DOT.
    ExportDot {
        path: Option<PathBuf>,
        /// Fill the vertices left exposed by a maximum matching.
        #[arg(long)]
        exposed: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Conjecture,
    AllPairs,
    SomePair,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn default_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CAP)
}

/// Runs the CLI on the given arguments (including the program name) and
/// returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_graph(path: Option<&PathBuf>, io: &mut Io<'_>) -> Result<Multigraph, String> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io.stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    parse_mgf(&text).map_err(|e| e.to_string())
}

fn out(io: &mut Io<'_>, text: &str) -> Result<(), String> {
    io.out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<u8, String> {
    match command {
        Command::Build {
            family,
            r,
            out: path,
        } => {
            let spec = FamilySpec::new(family, r).map_err(|e| e.to_string())?;
            let g = spec.build();
            let measured = FamilyStats::measure(&g).ok_or("empty family graph")?;
            debug_assert_eq!(measured, expected_stats(spec));
            let stats = format!("family={} r={} {measured}\n", spec.family, spec.r);
            let mgf = serialize_mgf(&g);
            match path {
                Some(p) => {
                    fs::write(&p, mgf).map_err(|e| format!("{}: {e}", p.display()))?;
                    out(io, &stats)?;
                }
                None => {
                    out(io, &mgf)?;
                    io.err
                        .write_all(stats.as_bytes())
                        .map_err(|e| e.to_string())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Info { path } => {
            let g = read_graph(path.as_ref(), io)?;
            out(io, &info_line(&g)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { path, mode, cap } => {
            let g = read_graph(path.as_ref(), io)?;
            let cap = cap.unwrap_or_else(default_cap);
            let (label, report) = match mode {
                Mode::Conjecture => ("conjecture", conjecture_holds(&g, cap)),
                Mode::AllPairs => ("all-pairs", is_counterexample(&g, PairMode::AllPairs, cap)),
                Mode::SomePair => ("some-pair", is_counterexample(&g, PairMode::SomePair, cap)),
            };
            let report = report.map_err(|e| e.to_string())?;
            out(io, &format!("mode={label}\n{report}"))?;
            Ok(match report.verdict {
                Verdict::Holds => EXIT_OK,
                Verdict::Counterexample => EXIT_FOUND,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Enumerate { path, cap } => {
            let g = read_graph(path.as_ref(), io)?;
            let e = enumerate_maximum_matchings(&g, cap.unwrap_or_else(default_cap))
                .map_err(|e| e.to_string())?;
            let mut text = String::new();
            for m in &e.matchings {
                text.push_str(&m.to_string());
                text.push('\n');
            }
            text.push_str(&format!(
                "count={} exhaustive={}\n",
                e.matchings.len(),
                e.exhaustive
            ));
            out(io, &text)?;
            Ok(EXIT_OK)
        }
        Command::Hunt {
            degree,
            min_n,
            max_n,
            count,
            seed,
            simple_only,
            cap,
            workers,
            dump_dir,
        } => {
            let config = HuntConfig {
                degree,
                n_min: min_n,
                n_max: max_n,
                count,
                seed,
                simple_only,
                cap: cap.unwrap_or_else(default_cap),
            };
            let summary = match workers {
                Some(w) => hunt_with_workers(&config, w),
                None => hunt(&config),
            }
            .map_err(|e| e.to_string())?;
            out(io, &summary.to_string())?;
            if summary.counterexample_graphs.is_empty() {
                return Ok(EXIT_OK);
            }
            if let Some(dir) = dump_dir {
                fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                for (index, mgf) in &summary.counterexample_graphs {
                    let file = dir.join(format!("counterexample_{index}.mgf"));
                    fs::write(&file, mgf).map_err(|e| format!("{}: {e}", file.display()))?;
                }
            }
            Ok(EXIT_FOUND)
        }
        Command::ExportDot { path, exposed } => {
            let g = read_graph(path.as_ref(), io)?;
            let marked = if exposed {
                maximum_matching(&g).exposed()
            } else {
                Vec::new()
            };
            out(io, &export_dot(&g, &marked))?;
            Ok(EXIT_OK)
        }
    }
}

fn info_line(g: &Multigraph) -> Result<String, String> {
    let show = |d: Option<usize>| d.map_or_else(|| "none".to_string(), |d| d.to_string());
    let class = if let Some(d) = g.regular_degree() {
        format!("regular={d}")
    } else if let Some(b) = g.classify_biregular_bipartite() {
        format!("biregular=({},{})", b.degrees.0, b.degrees.1)
    } else {
        "irregular".to_string()
    };
    let ge = gallai_edmonds(g);
    let witness = tutte_berge_witness(g).map_err(|e| e.to_string())?;
    Ok(format!(
        "n={} m={} max_degree={} min_degree={} nu={} {class} def={} d_size={} a_size={} c_size={} tutte_s={} tutte_odd={}\n",
        g.vertex_count(),
        g.edge_count(),
        show(g.max_degree().ok()),
        show(g.min_degree().ok()),
        ge.matching_number,
        ge.deficiency(),
        ge.d.len(),
        ge.a.len(),
        ge.c.len(),
        witness.s.len(),
        witness.odd_count,
    ))
}
