//! Plain-text rendering. Lines are stable: identical inputs render to
//! identical bytes.

use std::fmt::Write;

use ordtop_core::compactify::{Extension, PipelineReport};
use ordtop_core::finspace::{PointSet, Topology};
use ordtop_core::lattice::{Chain, ChainTrace, scheduled_axiom};
use ordtop_core::ordinal::IntervalSet;
use ordtop_core::separation::SeparationProfile;

pub fn point_set_text(s: PointSet) -> String {
    format!("{s:?}")
}

pub fn topology_text(t: &Topology) -> String {
    let mut out = format!("n: {}\n", t.n());
    if let Some(labels) = t.ground().labels() {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    let opens: Vec<String> = t.opens().iter().map(|&s| point_set_text(s)).collect();
    let _ = writeln!(out, "opens ({}): {}", t.opens().len(), opens.join(" "));
    out
}

pub fn profile_text(p: &SeparationProfile) -> String {
    format!(
        "t0: {}\nt1: {}\nt2: {}\nregular: {}\nt3: {}\nnormal: {}\nt4: {}\nstrongest: {}\n",
        p.t0, p.t1, p.t2, p.regular, p.t3, p.normal, p.t4, p.strongest
    )
}

fn strata_line(label: &str, value: Option<usize>) -> String {
    match value {
        Some(index) => format!("{label} from entry {index}"),
        None => format!("{label} never"),
    }
}

pub fn chain_text(chain: &Chain, trace: &ChainTrace) -> String {
    let mut out = format!("chain of {} entries on {} points\n", chain.len(), chain.n());
    for (step, topo) in trace.steps.iter().zip(chain.entries()) {
        let _ = writeln!(
            out,
            "entry {} i={:.4} opens={} strongest={} scheduled={}",
            step.index,
            step.parameter,
            topo.opens().len(),
            step.profile.strongest,
            scheduled_axiom(step.parameter),
        );
    }
    let _ = writeln!(
        out,
        "observed strata: {}; {}; {}; {}; {}",
        strata_line("t0", trace.strata.first_t0),
        strata_line("t1", trace.strata.first_t1),
        strata_line("t2", trace.strata.first_t2),
        strata_line("t3", trace.strata.first_t3),
        strata_line("t4", trace.strata.first_t4),
    );
    out.push_str(
        "note: the scheduled column is the fixed six-band assignment; on finite carriers T1 \
         collapses to discrete, so the T1..T4 bands are usually empty in the observed strata\n",
    );
    out
}

pub fn report_text(report: &PipelineReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "space: {}", report.space);
    let _ = writeln!(out, "chain length: {}", report.chain_length);
    let pairs: Vec<String> = report
        .indexing
        .pairs()
        .iter()
        .map(|(ord, point)| format!("{ord}->p{point}"))
        .collect();
    let _ = writeln!(out, "indexing: {}", pairs.join(" "));
    let _ = writeln!(out, "density_ok: {}", report.density_ok);
    let _ = writeln!(out, "infinity_is_limit_point: {}", report.infinity_is_limit_point);
    let _ = writeln!(out, "sample_cover_compact: {}", report.sample_cover_compact);
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn cover_text(parts: &[IntervalSet]) -> String {
    let mut out = format!("finite subcover with {} parts\n", parts.len());
    for (i, part) in parts.iter().enumerate() {
        let _ = writeln!(out, "part {i}: {part}");
    }
    out
}

pub fn maps_text(maps: &[Vec<u8>]) -> String {
    let mut out = format!("{} continuous maps\n", maps.len());
    for f in maps {
        let images: Vec<String> = f.iter().map(|y| y.to_string()).collect();
        let _ = writeln!(out, "{}", images.join(" "));
    }
    out
}

pub fn extend_text(ext: &Extension) -> String {
    format!("value at w: {}\ntail start: {}\n", ext.value_at_top, ext.tail_start)
}
