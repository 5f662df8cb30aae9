//! End-to-end pipeline: deform a finite space from trivial to discrete,
//! index its points by ordinals, and verify density, accumulation at the
//! top point and compactness on the ordinal model. Also the two
//! comparison fragments: exhaustive enumeration of continuous maps
//! between small finite spaces, and the unique continuous extension of an
//! eventually constant map on `[0,w)` to the top of `[0,w]`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::finspace::{PointSet, Topology};
use crate::lattice::{Chain, ChainTrace, LatticeError, Strategy, classify_chain, deformation_chain};
use crate::ordinal::{
    CoverAtom, CoverFamily, IntervalSet, Ordinal, OrdinalError, OrdinalSpace, RawInterval, Shape,
    derived_set_o, finite_subcover, is_dense_o,
};

#[derive(Clone, PartialEq, Debug)]
pub enum CompactifyError {
    /// The topology has a non-open singleton at the listed point.
    NotDiscrete { point: u8 },
    OutOfBounds { value: usize, max: usize },
    /// An exception ordinal is not below `w`.
    ExceptionNotBelowOmega { at: Ordinal },
    DuplicateException { at: Ordinal },
    /// Map values must be finite reals so equality of maps is meaningful.
    NonFiniteValue,
}

impl fmt::Display for CompactifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactifyError::NotDiscrete { point } => {
                write!(f, "not discrete: the singleton of point {point} is not open")
            }
            CompactifyError::OutOfBounds { value, max } => {
                write!(f, "out of bounds: {value} (supported range is 1..={max})")
            }
            CompactifyError::ExceptionNotBelowOmega { at } => {
                write!(f, "exception ordinal {at} is not below w")
            }
            CompactifyError::DuplicateException { at } => {
                write!(f, "duplicate exception ordinal {at}")
            }
            CompactifyError::NonFiniteValue => f.write_str("map values must be finite"),
        }
    }
}

impl core::error::Error for CompactifyError {}

/// Bijection from the ordinal initial segment `[0, n)` onto the points of
/// a discrete space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexingMap {
    pairs: Vec<(Ordinal, u8)>,
}

impl IndexingMap {
    pub fn pairs(&self) -> &[(Ordinal, u8)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Indexes the points of a discrete topology by the finite ordinals
/// `0..n` in order.
pub fn ordinal_indexing(t: &Topology) -> Result<IndexingMap, CompactifyError> {
    for i in 0..t.n() {
        if !t.is_open(PointSet::singleton(i)) {
            return Err(CompactifyError::NotDiscrete { point: i });
        }
    }
    let pairs = (0..t.n()).map(|i| (Ordinal::natural(i as u64), i)).collect();
    Ok(IndexingMap { pairs })
}

/// All maps between the point sets of two small spaces whose preimages of
/// opens are open, listed in lexicographic order.
pub fn all_continuous_maps(dom: &Topology, cod: &Topology) -> Result<Vec<Vec<u8>>, CompactifyError> {
    if dom.n() > 5 {
        return Err(CompactifyError::OutOfBounds { value: dom.n() as usize, max: 5 });
    }
    if cod.n() > 5 {
        return Err(CompactifyError::OutOfBounds { value: cod.n() as usize, max: 5 });
    }
    let (nd, nc) = (dom.n() as u32, cod.n() as u32);
    let total = (nc as u64).pow(nd);
    let mut maps = Vec::new();
    for code in 0..total {
        let mut f = alloc::vec![0u8; nd as usize];
        let mut rest = code;
        for slot in f.iter_mut().rev() {
            *slot = (rest % nc as u64) as u8;
            rest /= nc as u64;
        }
        let continuous = cod.opens().iter().all(|&v| {
            let preimage =
                PointSet::from_indices((0..nd as u8).filter(|&i| v.contains(f[i as usize])));
            dom.is_open(preimage)
        });
        if continuous {
            maps.push(f);
        }
    }
    Ok(maps)
}

/// A real-valued map on `[0, w)` that is constant past finitely many
/// exceptions. Exceptions equal to the tail value are normalized away and
/// the rest are kept sorted, so structural equality is map equality.
#[derive(Clone, PartialEq, Debug)]
pub struct EventuallyConstantMap {
    exceptions: Vec<(Ordinal, f64)>,
    tail_value: f64,
}

impl EventuallyConstantMap {
    pub fn new(
        exceptions: Vec<(Ordinal, f64)>,
        tail_value: f64,
    ) -> Result<EventuallyConstantMap, CompactifyError> {
        if !tail_value.is_finite() || exceptions.iter().any(|(_, v)| !v.is_finite()) {
            return Err(CompactifyError::NonFiniteValue);
        }
        let mut kept: Vec<(Ordinal, f64)> = Vec::new();
        for &(at, value) in &exceptions {
            if at >= Ordinal::OMEGA {
                return Err(CompactifyError::ExceptionNotBelowOmega { at });
            }
            if exceptions.iter().filter(|(other, _)| *other == at).count() > 1 {
                return Err(CompactifyError::DuplicateException { at });
            }
            if value != tail_value {
                kept.push((at, value));
            }
        }
        kept.sort_by_key(|(at, _)| *at);
        Ok(EventuallyConstantMap { exceptions: kept, tail_value })
    }

    pub fn exceptions(&self) -> &[(Ordinal, f64)] {
        &self.exceptions
    }

    pub fn tail_value(&self) -> f64 {
        self.tail_value
    }

    /// Value at a point of `[0, w)`.
    pub fn eval(&self, x: Ordinal) -> f64 {
        self.exceptions
            .iter()
            .find(|(at, _)| *at == x)
            .map(|(_, v)| *v)
            .unwrap_or(self.tail_value)
    }
}

/// The unique continuous extension of an eventually constant map to the
/// top of `[0, w]`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Extension {
    /// Value forced at `w`: any other value is separated from a tail
    /// neighborhood on which the map is constant.
    pub value_at_top: f64,
    /// Least ordinal past every exception; the map is constant from here.
    pub tail_start: Ordinal,
}

pub fn extend_eventually_constant(f: &EventuallyConstantMap) -> Extension {
    let tail_start = f
        .exceptions
        .last()
        .map(|(at, _)| at.successor().expect("exceptions are finite ordinals"))
        .unwrap_or(Ordinal::ZERO);
    Extension { value_at_top: f.tail_value, tail_start }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PipelineStep {
    Step1,
    Step2,
    Step3,
    Step4,
}

impl fmt::Display for PipelineStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PipelineStep::Step1 => "step1",
            PipelineStep::Step2 => "step2",
            PipelineStep::Step3 => "step3",
            PipelineStep::Step4 => "step4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum PipelineCause {
    Lattice(LatticeError),
    Ordinal(OrdinalError),
    Compactify(CompactifyError),
    NotALimitOrdinal { alpha: Ordinal },
}

impl fmt::Display for PipelineCause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineCause::Lattice(e) => e.fmt(f),
            PipelineCause::Ordinal(e) => e.fmt(f),
            PipelineCause::Compactify(e) => e.fmt(f),
            PipelineCause::NotALimitOrdinal { alpha } => {
                write!(f, "{alpha} is not a limit ordinal")
            }
        }
    }
}

/// A pipeline failure with the step it happened in.
#[derive(Clone, PartialEq, Debug)]
pub struct PipelineAbort {
    pub step: PipelineStep,
    pub cause: PipelineCause,
}

impl fmt::Display for PipelineAbort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.step, self.cause)
    }
}

impl core::error::Error for PipelineAbort {}

/// Structured record of a full four-step run. The three verdict booleans
/// are always computed, never defaulted.
#[derive(Clone, PartialEq, Debug)]
pub struct PipelineReport {
    pub chain_length: usize,
    pub trace: ChainTrace,
    pub indexing: IndexingMap,
    pub space: OrdinalSpace,
    pub density_ok: bool,
    pub infinity_is_limit_point: bool,
    pub sample_cover_compact: bool,
    pub notes: Vec<String>,
}

fn abort(step: PipelineStep, cause: PipelineCause) -> PipelineAbort {
    PipelineAbort { step, cause }
}

/// Runs the four steps on `n <= 8` points with the topology deformation
/// `strategy` and the target space `[0, alpha]` for a limit ordinal
/// `alpha`:
///
/// 1. record the dense-embedding target;
/// 2. deform the trivial topology to the discrete one and classify every
///    entry of the chain;
/// 3. index the discrete points by the ordinals `0..n`;
/// 4. on `[0, alpha]`, check that `[0, alpha)` is dense, that `alpha`
///    accumulates it, and that the sample cover (all initial segments plus
///    one concrete tail past 3) admits a finite subcover.
pub fn run_pipeline(
    n: u8,
    strategy: Strategy,
    seed: u64,
    alpha: Ordinal,
) -> Result<PipelineReport, PipelineAbort> {
    let mut notes = Vec::new();
    notes.push(format!(
        "step1: target recorded: embed [0,{alpha}) densely in [0,{alpha}] with {alpha} as an accumulation point"
    ));

    let chain: Chain = deformation_chain(n, strategy, seed)
        .map_err(|e| abort(PipelineStep::Step2, PipelineCause::Lattice(e)))?;
    if !chain.entries().last().unwrap().is_discrete() {
        return Err(abort(
            PipelineStep::Step2,
            PipelineCause::Lattice(LatticeError::MalformedChain {
                reason: "last entry is not discrete",
            }),
        ));
    }
    let trace = classify_chain(&chain);
    notes.push(format!(
        "step2: {} strategy reached the discrete topology in {} entries; first T0 at {}, first T1 at {}",
        strategy,
        chain.len(),
        trace.strata.first_t0.map_or_else(|| String::from("-"), |i| format!("{i}")),
        trace.strata.first_t1.map_or_else(|| String::from("-"), |i| format!("{i}")),
    ));
    notes.push(String::from(
        "step2: observed strata are reported next to the fixed six-band schedule; on finite carriers T1 collapses to discrete, so the middle bands are empty",
    ));

    let indexing = ordinal_indexing(chain.entries().last().unwrap())
        .map_err(|e| abort(PipelineStep::Step3, PipelineCause::Compactify(e)))?;
    notes.push(format!("step3: indexed {} points by the ordinals below {}", indexing.len(), n));

    if !alpha.is_limit() {
        return Err(abort(PipelineStep::Step4, PipelineCause::NotALimitOrdinal { alpha }));
    }
    let space = OrdinalSpace::closed(alpha);
    let dense_part = IntervalSet::from_raw(&[RawInterval {
        lo: Ordinal::ZERO,
        lo_closed: true,
        hi: alpha,
        hi_closed: false,
    }]);
    let density_ok = is_dense_o(space, &dense_part)
        .map_err(|e| abort(PipelineStep::Step4, PipelineCause::Ordinal(e)))?;
    let derived = derived_set_o(space, &dense_part)
        .map_err(|e| abort(PipelineStep::Step4, PipelineCause::Ordinal(e)))?;
    let infinity_is_limit_point = derived.contains(alpha);

    let tail = IntervalSet::from_raw(&[RawInterval {
        lo: Ordinal::natural(3),
        lo_closed: false,
        hi: alpha,
        hi_closed: true,
    }]);
    let cover = CoverFamily::new(alloc::vec![
        CoverAtom::Schematic(Shape::InitialSegments),
        CoverAtom::Concrete(tail),
    ])
    .expect("two atoms");
    let sample_cover_compact = match finite_subcover(space, &cover) {
        Ok(parts) => {
            notes.push(format!(
                "step4: sample cover of [0,{alpha}] reduced to {} concrete parts",
                parts.len()
            ));
            true
        }
        Err(OrdinalError::NoFiniteSubcover { at }) => {
            notes.push(format!("step4: sample cover admits no finite subcover (stalls at {at})"));
            false
        }
        Err(e) => return Err(abort(PipelineStep::Step4, PipelineCause::Ordinal(e))),
    };

    Ok(PipelineReport {
        chain_length: chain.len(),
        trace,
        indexing,
        space,
        density_ok,
        infinity_is_limit_point,
        sample_cover_compact,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::{StandardKind, standard_topology, tests::sierpinski};
    use crate::lattice::enumerate_topologies;

    #[test]
    fn indexing_discrete() {
        let d3 = standard_topology(3, StandardKind::Discrete).unwrap();
        let map = ordinal_indexing(&d3).unwrap();
        assert_eq!(
            map.pairs(),
            &[
                (Ordinal::natural(0), 0),
                (Ordinal::natural(1), 1),
                (Ordinal::natural(2), 2)
            ]
        );
        let d1 = standard_topology(1, StandardKind::Discrete).unwrap();
        assert_eq!(ordinal_indexing(&d1).unwrap().len(), 1);
    }

    #[test]
    fn indexing_rejects_non_discrete() {
        assert_eq!(
            ordinal_indexing(&sierpinski()).unwrap_err(),
            CompactifyError::NotDiscrete { point: 1 }
        );
    }

    /// Brute-force continuity oracle on one candidate map.
    fn is_continuous(dom: &Topology, cod: &Topology, f: &[u8]) -> bool {
        cod.opens().iter().all(|&v| {
            let preimage = PointSet::from_indices(
                (0..dom.n()).filter(|&i| v.contains(f[i as usize])),
            );
            dom.is_open(preimage)
        })
    }

    #[test]
    fn maps_out_of_trivial_into_discrete_are_constant() {
        let dom = standard_topology(3, StandardKind::Trivial).unwrap();
        let cod = standard_topology(2, StandardKind::Discrete).unwrap();
        let maps = all_continuous_maps(&dom, &cod).unwrap();
        assert_eq!(maps, vec![vec![0, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn maps_out_of_discrete_are_unrestricted() {
        let dom = standard_topology(2, StandardKind::Discrete).unwrap();
        for cod in enumerate_topologies(3).unwrap() {
            assert_eq!(all_continuous_maps(&dom, &cod).unwrap().len(), 9);
        }
    }

    #[test]
    fn sierpinski_self_maps() {
        let s = sierpinski();
        let maps = all_continuous_maps(&s, &s).unwrap();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        for f in &maps {
            assert!(is_continuous(&s, &s, f));
        }
        assert!(!is_continuous(&s, &s, &[1, 0]));
    }

    #[test]
    fn maps_bounds() {
        let big = standard_topology(6, StandardKind::Trivial).unwrap();
        let small = standard_topology(2, StandardKind::Trivial).unwrap();
        assert!(all_continuous_maps(&big, &small).is_err());
        assert!(all_continuous_maps(&small, &big).is_err());
    }

    #[test]
    fn extension_examples() {
        let f = EventuallyConstantMap::new(
            vec![(Ordinal::natural(0), 3.5), (Ordinal::natural(2), -1.0)],
            7.0,
        )
        .unwrap();
        let ext = extend_eventually_constant(&f);
        assert_eq!(ext.value_at_top, 7.0);
        assert_eq!(ext.tail_start, Ordinal::natural(3));

        let constant = EventuallyConstantMap::new(vec![], 0.0).unwrap();
        let ext = extend_eventually_constant(&constant);
        assert_eq!(ext.value_at_top, 0.0);
        assert_eq!(ext.tail_start, Ordinal::ZERO);

        // An exception equal to the tail value is normalized away.
        let trivial_exception =
            EventuallyConstantMap::new(vec![(Ordinal::natural(9), 9.0)], 9.0).unwrap();
        assert!(trivial_exception.exceptions().is_empty());
        assert_eq!(extend_eventually_constant(&trivial_exception).tail_start, Ordinal::ZERO);
    }

    #[test]
    fn map_validation() {
        assert_eq!(
            EventuallyConstantMap::new(vec![(Ordinal::OMEGA, 1.0)], 0.0).unwrap_err(),
            CompactifyError::ExceptionNotBelowOmega { at: Ordinal::OMEGA }
        );
        assert_eq!(
            EventuallyConstantMap::new(
                vec![(Ordinal::natural(1), 1.0), (Ordinal::natural(1), 2.0)],
                0.0
            )
            .unwrap_err(),
            CompactifyError::DuplicateException { at: Ordinal::natural(1) }
        );
        assert_eq!(
            EventuallyConstantMap::new(vec![], f64::NAN).unwrap_err(),
            CompactifyError::NonFiniteValue
        );
    }

    #[test]
    fn pipeline_happy_path() {
        let report = run_pipeline(4, Strategy::SingletonAscending, 0, Ordinal::OMEGA).unwrap();
        assert!(report.density_ok);
        assert!(report.infinity_is_limit_point);
        assert!(report.sample_cover_compact);
        assert_eq!(report.chain_length, report.trace.steps.len());
        assert_eq!(report.indexing.len(), 4);
    }

    #[test]
    fn pipeline_degenerate_single_point() {
        let report = run_pipeline(1, Strategy::SingletonAscending, 0, Ordinal::OMEGA).unwrap();
        assert_eq!(report.chain_length, 1);
        assert!(report.density_ok && report.infinity_is_limit_point && report.sample_cover_compact);
    }

    #[test]
    fn pipeline_rejects_non_limit_alpha() {
        let err =
            run_pipeline(4, Strategy::SingletonAscending, 0, Ordinal::natural(5)).unwrap_err();
        assert_eq!(err.step, PipelineStep::Step4);
        assert_eq!(err.cause, PipelineCause::NotALimitOrdinal { alpha: Ordinal::natural(5) });
    }
}
