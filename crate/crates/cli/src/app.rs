//! Verb definitions and dispatch.
//!
//! Exit codes: 0 on success, 1 on module errors (invalid topologies,
//! out-of-range sizes, failed covers), 2 on usage errors (unknown flags,
//! malformed literals). Output is deterministic: the only randomness is
//! behind explicit `--seed` flags, which default to 0.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ordtop_core::compactify::{
    EventuallyConstantMap, all_continuous_maps, extend_eventually_constant, run_pipeline,
};
use ordtop_core::finspace::{Topology, closure, derived_set, is_dense};
use ordtop_core::lattice::{
    Strategy, classify_chain, deformation_chain, enumerate_topologies_with, homotopy_eval, join,
    meet,
};
use ordtop_core::ordinal::{
    alexandroff_open, closure_o, derived_set_o, finite_subcover, is_dense_o, is_open,
};
use ordtop_core::separation::classify;

use crate::doc::{
    ChainDoc, CoverResultDoc, EnumerationDoc, ExtendDoc, MapsDoc, OrdinalQueryDoc, PointQueryDoc,
    ProfileDoc, QueryValue, ReportDoc, TopologyDoc,
};
use crate::parse::{
    parse_cover, parse_exceptions, parse_interval_set, parse_ordinal, parse_point_set,
    parse_space, parse_topology_spec,
};
use crate::{CliError, dot, render};

#[derive(Parser, Debug)]
#[command(
    name = "ordtop",
    version,
    about = "Workbench for finite topologies, the lattice of topologies, and order topology on ordinals below w^2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (dot is available for `enumerate` only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// A topology input: inline string or a JSON file.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct TopologyInput {
    /// Inline topology: JSON, `trivial:N`, `discrete:N`, or `@path`.
    #[arg(long)]
    pub topology: Option<String>,
    /// Read the topology JSON from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl TopologyInput {
    fn load(&self) -> Result<Topology, CliError> {
        match (&self.topology, &self.file) {
            (Some(spec), None) => parse_topology_spec(spec),
            (None, Some(path)) => crate::parse::topology_from_file(path),
            _ => Err(CliError::Usage("give exactly one of --topology or --file".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate every topology on a small ground set (n <= 5).
    Enumerate {
        #[arg(long)]
        n: u8,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
        /// Shuffle the search order (the result list is order-stable).
        #[arg(long)]
        shuffle_seed: Option<u64>,
    },
    /// Separation profile (T0..T4, regular, normal) of a topology.
    Classify {
        #[command(flatten)]
        input: TopologyInput,
    },
    /// Deformation chain from the trivial to the discrete topology.
    Chain {
        #[arg(long)]
        n: u8,
        /// `singleton_ascending` or `random_maximal`.
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chain entry at a parameter in [0, 1].
    Homotopy {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter in [0, 1]; 0 is trivial, 1 is discrete.
        #[arg(long)]
        i: f64,
    },
    /// Meet (intersection) of two topologies on the same ground set.
    Meet {
        /// Left topology (JSON, `trivial:N`, `discrete:N`, or `@path`).
        #[arg(long)]
        left: String,
        /// Right topology, same grammar.
        #[arg(long)]
        right: String,
    },
    /// Join (generated topology) of two topologies on the same ground set.
    Join {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Derived set (all limit points) of a point set.
    LimitPoints {
        #[command(flatten)]
        input: TopologyInput,
        /// Comma-separated point indices; empty for the empty set.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Closure of a point set.
    Closure {
        #[command(flatten)]
        input: TopologyInput,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Density check for a point set.
    Dense {
        #[command(flatten)]
        input: TopologyInput,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Queries on an ordinal space: open/closure/derived/dense/alexandroff.
    Ordinal {
        /// Carrier, e.g. `[0,w]` or `[0,w*2)`.
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        op: OrdinalOp,
        /// Interval set, e.g. `[0,w)` or `[0,3] + {w}`.
        #[arg(long, default_value = "{}")]
        set: String,
    },
    /// Extract a finite subcover from cover atoms.
    Cover {
        #[arg(long)]
        space: String,
        /// Comma-separated atoms: `seg`, `sing<b`, or interval sets.
        #[arg(long)]
        atoms: String,
    },
    /// Run the four-step pipeline and report all verdicts.
    Compactify {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Limit ordinal bounding the target space, e.g. `w` or `w*2`.
        #[arg(long, default_value = "w")]
        alpha: String,
    },
    /// Enumerate all continuous maps between two small topologies.
    Maps {
        /// Domain topology (JSON, `trivial:N`, `discrete:N`, or `@path`).
        #[arg(long)]
        dom: String,
        /// Codomain topology, same grammar.
        #[arg(long)]
        cod: String,
    },
    /// Continuous extension of an eventually constant map to the top of [0,w].
    Extend {
        /// Comma-separated `ord:value` exceptions, e.g. `0:3.5,2:-1`.
        #[arg(long, default_value = "")]
        exceptions: String,
        /// Tail value of the map.
        #[arg(long)]
        tail: f64,
    },
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Runtime(format!("serialization failed: {e}")))
}

fn parse_strategy(s: &str) -> Result<Strategy, CliError> {
    s.parse::<Strategy>().map_err(|e| CliError::Usage(format!("bad --strategy {s:?}: {e}")))
}

fn topology_output(t: &Topology, format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(render::topology_text(t)),
        Format::Json => to_json(&TopologyDoc::from_topology(t)),
        Format::Dot => Err(CliError::Usage("dot output is only available for enumerate".into())),
    }
}

/// Runs one parsed command and returns what goes on standard output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Enumerate { .. }) {
        return Err(CliError::Usage("dot output is only available for enumerate".into()));
    }
    match &cli.command {
        Command::Enumerate { n, count_only, shuffle_seed } => {
            if cli.format == Format::Dot {
                return dot::hasse_dot(*n);
            }
            let mut last_reported = 0usize;
            let all = enumerate_topologies_with(*n, *shuffle_seed, |found| {
                // Progress for the slow n = 5 search, 500 at a time.
                if found / 500 > last_reported {
                    last_reported = found / 500;
                    eprintln!("enumerate: {found} topologies so far");
                }
            })
            .map_err(runtime)?;
            match (cli.format, count_only) {
                (Format::Text, true) => Ok(format!("{}\n", all.len())),
                (Format::Text, false) => {
                    let mut out = format!("{} topologies on {} points\n", all.len(), n);
                    for (i, t) in all.iter().enumerate() {
                        let opens: Vec<String> =
                            t.opens().iter().map(|&s| render::point_set_text(s)).collect();
                        out.push_str(&format!(
                            "#{i} opens={} strongest={} {}\n",
                            t.opens().len(),
                            classify(t).strongest,
                            opens.join(" ")
                        ));
                    }
                    Ok(out)
                }
                (_, count_only) => to_json(&EnumerationDoc {
                    n: *n,
                    count: all.len(),
                    topologies: (!count_only)
                        .then(|| all.iter().map(TopologyDoc::from_topology).collect()),
                }),
            }
        }
        Command::Classify { input } => {
            let t = input.load()?;
            let profile = classify(&t);
            match cli.format {
                Format::Text => Ok(render::profile_text(&profile)),
                _ => to_json(&ProfileDoc::from_profile(&profile)),
            }
        }
        Command::Chain { n, strategy, seed } => {
            let strategy = parse_strategy(strategy)?;
            let chain = deformation_chain(*n, strategy, *seed).map_err(runtime)?;
            let trace = classify_chain(&chain);
            match cli.format {
                Format::Text => Ok(render::chain_text(&chain, &trace)),
                _ => to_json(&ChainDoc::new(*n, strategy, *seed, &chain, &trace)),
            }
        }
        Command::Homotopy { n, strategy, seed, i } => {
            let strategy = parse_strategy(strategy)?;
            let chain = deformation_chain(*n, strategy, *seed).map_err(runtime)?;
            let t = homotopy_eval(&chain, *i).map_err(runtime)?;
            topology_output(t, cli.format)
        }
        Command::Meet { left, right } => {
            let t = meet(&parse_topology_spec(left)?, &parse_topology_spec(right)?)
                .map_err(runtime)?;
            topology_output(&t, cli.format)
        }
        Command::Join { left, right } => {
            let t = join(&parse_topology_spec(left)?, &parse_topology_spec(right)?)
                .map_err(runtime)?;
            topology_output(&t, cli.format)
        }
        Command::LimitPoints { input, set } => {
            let t = input.load()?;
            let s = parse_point_set(set)?;
            let d = derived_set(&t, s).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(format!("{}\n", render::point_set_text(d))),
                _ => to_json(&PointQueryDoc {
                    op: "limit-points".into(),
                    set: s.indices().collect(),
                    result: QueryValue::Set(d.indices().collect()),
                }),
            }
        }
        Command::Closure { input, set } => {
            let t = input.load()?;
            let s = parse_point_set(set)?;
            let c = closure(&t, s).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(format!("{}\n", render::point_set_text(c))),
                _ => to_json(&PointQueryDoc {
                    op: "closure".into(),
                    set: s.indices().collect(),
                    result: QueryValue::Set(c.indices().collect()),
                }),
            }
        }
        Command::Dense { input, set } => {
            let t = input.load()?;
            let s = parse_point_set(set)?;
            let dense = is_dense(&t, s).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(format!("{dense}\n")),
                _ => to_json(&PointQueryDoc {
                    op: "dense".into(),
                    set: s.indices().collect(),
                    result: QueryValue::Flag(dense),
                }),
            }
        }
        Command::Ordinal { space, op, set } => {
            let sp = parse_space(space)?;
            let s = parse_interval_set(set)?;
            let result = match op {
                OrdinalOp::Open => QueryValue::Flag(is_open(sp, &s).map_err(runtime)?),
                OrdinalOp::Dense => QueryValue::Flag(is_dense_o(sp, &s).map_err(runtime)?),
                OrdinalOp::Alexandroff => {
                    // The one-point-compactification reading is specific
                    // to the space [0,w].
                    if sp != ordtop_core::ordinal::OrdinalSpace::closed(
                        ordtop_core::ordinal::Ordinal::OMEGA,
                    ) {
                        return Err(CliError::Usage(
                            "--op alexandroff needs --space \"[0,w]\"".into(),
                        ));
                    }
                    QueryValue::Flag(alexandroff_open(&s).map_err(runtime)?)
                }
                OrdinalOp::Closure => {
                    QueryValue::Set(closure_o(sp, &s).map_err(runtime)?.to_string())
                }
                OrdinalOp::Derived => {
                    QueryValue::Set(derived_set_o(sp, &s).map_err(runtime)?.to_string())
                }
            };
            match cli.format {
                Format::Text => Ok(match &result {
                    QueryValue::Flag(b) => format!("{b}\n"),
                    QueryValue::Set(text) => format!("{text}\n"),
                }),
                _ => to_json(&OrdinalQueryDoc {
                    op: op.as_str().into(),
                    space: sp.to_string(),
                    set: s.to_string(),
                    result,
                }),
            }
        }
        Command::Cover { space, atoms } => {
            let sp = parse_space(space)?;
            let cover = parse_cover(atoms)?;
            let parts = finite_subcover(sp, &cover).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(render::cover_text(&parts)),
                _ => to_json(&CoverResultDoc {
                    space: sp.to_string(),
                    parts: parts.iter().map(|p| p.to_string()).collect(),
                }),
            }
        }
        Command::Compactify { n, strategy, seed, alpha } => {
            let strategy = parse_strategy(strategy)?;
            let alpha = parse_ordinal(alpha)?;
            let report = run_pipeline(*n, strategy, *seed, alpha).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(render::report_text(&report)),
                _ => to_json(&ReportDoc::from_report(&report)),
            }
        }
        Command::Maps { dom, cod } => {
            let dom = parse_topology_spec(dom)?;
            let cod = parse_topology_spec(cod)?;
            let maps = all_continuous_maps(&dom, &cod).map_err(runtime)?;
            match cli.format {
                Format::Text => Ok(render::maps_text(&maps)),
                _ => to_json(&MapsDoc {
                    dom_n: dom.n(),
                    cod_n: cod.n(),
                    count: maps.len(),
                    maps,
                }),
            }
        }
        Command::Extend { exceptions, tail } => {
            let pairs = parse_exceptions(exceptions)?;
            let map = EventuallyConstantMap::new(pairs, *tail).map_err(runtime)?;
            let ext = extend_eventually_constant(&map);
            match cli.format {
                Format::Text => Ok(render::extend_text(&ext)),
                _ => to_json(&ExtendDoc {
                    value: ext.value_at_top,
                    tail_start: ext.tail_start.to_string(),
                }),
            }
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum OrdinalOp {
    Open,
    Closure,
    Derived,
    Dense,
    Alexandroff,
}

impl OrdinalOp {
    fn as_str(self) -> &'static str {
        match self {
            OrdinalOp::Open => "open",
            OrdinalOp::Closure => "closure",
            OrdinalOp::Derived => "derived",
            OrdinalOp::Dense => "dense",
            OrdinalOp::Alexandroff => "alexandroff",
        }
    }
}
