//! JSON document types. These mirror the core values in the documented
//! wire shapes: opens as lexicographically sorted index lists, ordinals
//! and interval sets as their literal strings, profiles as flat boolean
//! objects. Field order is fixed by struct order so output is byte-stable.

use serde::{Deserialize, Serialize};

use ordtop_core::compactify::PipelineReport;
use ordtop_core::finspace::Topology;
use ordtop_core::lattice::{Chain, ChainTrace, Strategy, scheduled_axiom};
use ordtop_core::separation::SeparationProfile;

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TopologyDoc {
    pub n: u8,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
    /// Opens as sorted index lists, sorted lexicographically.
    pub opens: Vec<Vec<u8>>,
}

impl TopologyDoc {
    pub fn from_topology(t: &Topology) -> TopologyDoc {
        let mut opens: Vec<Vec<u8>> = t
            .opens()
            .iter()
            .map(|s| s.indices().collect::<Vec<u8>>())
            .collect();
        opens.sort();
        TopologyDoc {
            n: t.n(),
            labels: t.ground().labels().map(|l| l.to_vec()),
            opens,
        }
    }

    pub fn try_into_topology(&self) -> Result<Topology, CliError> {
        crate::parse::topology_doc_to_topology(self)
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ProfileDoc {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
    pub t3: bool,
    pub normal: bool,
    pub t4: bool,
    pub strongest: String,
}

impl ProfileDoc {
    pub fn from_profile(p: &SeparationProfile) -> ProfileDoc {
        ProfileDoc {
            t0: p.t0,
            t1: p.t1,
            t2: p.t2,
            regular: p.regular,
            t3: p.t3,
            normal: p.normal,
            t4: p.t4,
            strongest: p.strongest.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct StepDoc {
    pub index: usize,
    pub parameter: f64,
    pub profile: ProfileDoc,
    /// What the fixed six-band schedule assigns at this parameter.
    pub scheduled: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct StrataDoc {
    pub first_t0: Option<usize>,
    pub first_t1: Option<usize>,
    pub first_t2: Option<usize>,
    pub first_t3: Option<usize>,
    pub first_t4: Option<usize>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct TraceDoc {
    pub steps: Vec<StepDoc>,
    pub strata: StrataDoc,
}

impl TraceDoc {
    pub fn from_trace(trace: &ChainTrace) -> TraceDoc {
        TraceDoc {
            steps: trace
                .steps
                .iter()
                .map(|s| StepDoc {
                    index: s.index,
                    parameter: s.parameter,
                    profile: ProfileDoc::from_profile(&s.profile),
                    scheduled: scheduled_axiom(s.parameter).to_string(),
                })
                .collect(),
            strata: StrataDoc {
                first_t0: trace.strata.first_t0,
                first_t1: trace.strata.first_t1,
                first_t2: trace.strata.first_t2,
                first_t3: trace.strata.first_t3,
                first_t4: trace.strata.first_t4,
            },
        }
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct ChainDoc {
    pub n: u8,
    pub strategy: String,
    pub seed: u64,
    pub length: usize,
    pub entries: Vec<TopologyDoc>,
    pub trace: TraceDoc,
}

impl ChainDoc {
    pub fn new(n: u8, strategy: Strategy, seed: u64, chain: &Chain, trace: &ChainTrace) -> ChainDoc {
        ChainDoc {
            n,
            strategy: strategy.to_string(),
            seed,
            length: chain.len(),
            entries: chain.entries().iter().map(TopologyDoc::from_topology).collect(),
            trace: TraceDoc::from_trace(trace),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct EnumerationDoc {
    pub n: u8,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub topologies: Option<Vec<TopologyDoc>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct ReportDoc {
    pub chain_length: usize,
    pub trace: TraceDoc,
    /// Pairs of (ordinal literal, point index).
    pub indexing: Vec<(String, u8)>,
    pub space: String,
    pub density_ok: bool,
    pub infinity_is_limit_point: bool,
    pub sample_cover_compact: bool,
    pub notes: Vec<String>,
}

impl ReportDoc {
    pub fn from_report(report: &PipelineReport) -> ReportDoc {
        ReportDoc {
            chain_length: report.chain_length,
            trace: TraceDoc::from_trace(&report.trace),
            indexing: report
                .indexing
                .pairs()
                .iter()
                .map(|(ord, point)| (ord.to_string(), *point))
                .collect(),
            space: report.space.to_string(),
            density_ok: report.density_ok,
            infinity_is_limit_point: report.infinity_is_limit_point,
            sample_cover_compact: report.sample_cover_compact,
            notes: report.notes.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct CoverResultDoc {
    pub space: String,
    /// Chosen concrete parts, in descent order, as interval-set literals.
    pub parts: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct MapsDoc {
    pub dom_n: u8,
    pub cod_n: u8,
    pub count: usize,
    pub maps: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct ExtendDoc {
    pub value: f64,
    pub tail_start: String,
}

/// Result of a point-set query on a finite topology.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PointQueryDoc {
    pub op: String,
    pub set: Vec<u8>,
    pub result: QueryValue<Vec<u8>>,
}

/// Result of a query on an ordinal space.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct OrdinalQueryDoc {
    pub op: String,
    pub space: String,
    pub set: String,
    pub result: QueryValue<String>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum QueryValue<S> {
    Flag(bool),
    Set(S),
}
