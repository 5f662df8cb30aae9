//! The lattice of topologies on a fixed ground set.
//!
//! Meet is intersection of open families, join is the topology generated by
//! their union; the trivial topology is the bottom element and the discrete
//! topology the top. Deformation chains walk the order from bottom to top,
//! one strict refinement per step, and [`homotopy_eval`] exposes a chain as
//! a map from the unit interval: the interval is quantized onto chain
//! indices with a floor rule, since no topology is imposed on the set of
//! topologies itself.
//!
//! [`enumerate_topologies`] lists every topology on up to 5 points by
//! depth-first search from the trivial topology, adding one candidate open
//! at a time and re-closing under union/intersection. Families are encoded
//! as bit sets over masks (bit `m` set iff mask `m` is open), so closure is
//! cheap and visited states deduplicate exactly. The result is sorted, so
//! the output order is independent of the search order.

use alloc::vec::Vec;
use core::fmt;

use crate::finspace::{
    GroundSet, PointSet, StandardKind, Topology, generate_from_subbasis_on, standard_topology,
};
use crate::rng::SplitMix64;
use crate::separation::{Axiom, SeparationProfile, classify};

#[derive(Clone, PartialEq, Debug)]
pub enum LatticeError {
    DimensionMismatch { left: u8, right: u8 },
    OutOfBounds { value: usize, max: usize },
    InvalidParameter { value: f64 },
    /// Chain invariant violation detected by [`Chain::new`].
    MalformedChain { reason: &'static str },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimensionMismatch { left, right } => {
                write!(f, "ground sets differ: {left} vs {right} points")
            }
            LatticeError::OutOfBounds { value, max } => {
                write!(f, "out of bounds: {value} (supported range is 1..={max})")
            }
            LatticeError::InvalidParameter { value } => {
                write!(f, "parameter {value} is outside [0, 1]")
            }
            LatticeError::MalformedChain { reason } => write!(f, "malformed chain: {reason}"),
        }
    }
}

impl core::error::Error for LatticeError {}

fn require_same_ground(a: &Topology, b: &Topology) -> Result<(), LatticeError> {
    if a.n() != b.n() {
        return Err(LatticeError::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

/// Coarsest topology finer than neither argument: the intersection of the
/// two open families (always a topology). The result keeps the left
/// operand's ground set.
pub fn meet(a: &Topology, b: &Topology) -> Result<Topology, LatticeError> {
    require_same_ground(a, b)?;
    let mut opens = Vec::new();
    let (mut i, mut j) = (0, 0);
    let (xs, ys) = (a.opens(), b.opens());
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                opens.push(xs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(Topology::from_canonical(a.ground().clone(), opens))
}

/// Finest topology coarser than neither argument: generated by the union
/// of the two open families. The result keeps the left operand's ground
/// set.
pub fn join(a: &Topology, b: &Topology) -> Result<Topology, LatticeError> {
    require_same_ground(a, b)?;
    let mut sets: Vec<PointSet> = a.opens().to_vec();
    sets.extend_from_slice(b.opens());
    Ok(generate_from_subbasis_on(a.ground().clone(), &sets)
        .expect("masks from existing topologies are valid"))
}

/// True iff every open of `coarse` is open in `fine`.
pub fn is_refinement(coarse: &Topology, fine: &Topology) -> Result<bool, LatticeError> {
    require_same_ground(coarse, fine)?;
    Ok(coarse.opens().iter().all(|&u| fine.is_open(u)))
}

/// How a deformation chain picks its refinement steps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Join singleton opens `{0}, {1}, ...` in index order, keeping only
    /// strictly refining steps.
    SingletonAscending,
    /// Repeatedly join one seeded-random not-yet-open set until discrete.
    RandomMaximal,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::SingletonAscending => f.write_str("singleton_ascending"),
            Strategy::RandomMaximal => f.write_str("random_maximal"),
        }
    }
}

impl core::str::FromStr for Strategy {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "singleton_ascending" => Ok(Strategy::SingletonAscending),
            "random_maximal" => Ok(Strategy::RandomMaximal),
            _ => Err("expected singleton_ascending or random_maximal"),
        }
    }
}

/// A strictly refining sequence of topologies from trivial to discrete on
/// one shared ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    entries: Vec<Topology>,
}

impl Chain {
    pub fn new(entries: Vec<Topology>) -> Result<Chain, LatticeError> {
        let first = entries.first().ok_or(LatticeError::MalformedChain { reason: "empty" })?;
        if !first.is_trivial() {
            return Err(LatticeError::MalformedChain { reason: "first entry is not trivial" });
        }
        if !entries.last().unwrap().is_discrete() {
            return Err(LatticeError::MalformedChain { reason: "last entry is not discrete" });
        }
        for pair in entries.windows(2) {
            let strictly_finer = pair[0].opens().len() < pair[1].opens().len()
                && is_refinement(&pair[0], &pair[1])?;
            if !strictly_finer {
                return Err(LatticeError::MalformedChain {
                    reason: "entries are not strictly refining",
                });
            }
        }
        Ok(Chain { entries })
    }

    pub fn entries(&self) -> &[Topology] {
        &self.entries
    }

    /// Number of entries; always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> u8 {
        self.entries[0].n()
    }
}

/// Builds a deformation chain from the trivial to the discrete topology on
/// `n <= 8` points. `seed` only matters for [`Strategy::RandomMaximal`];
/// a fixed seed reproduces the chain exactly.
pub fn deformation_chain(n: u8, strategy: Strategy, seed: u64) -> Result<Chain, LatticeError> {
    if n == 0 || n > 8 {
        return Err(LatticeError::OutOfBounds { value: n as usize, max: 8 });
    }
    let trivial = standard_topology(n, StandardKind::Trivial).expect("n is in range");
    let mut entries = alloc::vec![trivial];
    match strategy {
        Strategy::SingletonAscending => {
            for i in 0..n {
                let current = entries.last().unwrap();
                let candidate = join(
                    current,
                    &crate::finspace::generate_from_subbasis(n, &[PointSet::singleton(i)])
                        .expect("singleton mask is valid"),
                )?;
                if candidate.opens().len() > current.opens().len() {
                    entries.push(candidate);
                }
            }
        }
        Strategy::RandomMaximal => {
            let mut rng = SplitMix64::new(seed);
            loop {
                let current = entries.last().unwrap();
                if current.is_discrete() {
                    break;
                }
                let missing: Vec<u16> = (0..1u32 << n)
                    .map(|m| m as u16)
                    .filter(|&m| !current.is_open(PointSet::from_mask(m)))
                    .collect();
                let pick = missing[rng.below(missing.len() as u64) as usize];
                let next = join(
                    current,
                    &crate::finspace::generate_from_subbasis(n, &[PointSet::from_mask(pick)])
                        .expect("mask below 2^n is valid"),
                )?;
                entries.push(next);
            }
        }
    }
    debug_assert!(entries.last().unwrap().is_discrete());
    Ok(Chain { entries })
}

/// Evaluates a chain at a parameter in `[0, 1]`: entry `floor(i * (len-1))`,
/// clamped to the last index. `0` maps to the trivial end and `1` to the
/// discrete end.
pub fn homotopy_eval(chain: &Chain, i: f64) -> Result<&Topology, LatticeError> {
    if !(0.0..=1.0).contains(&i) {
        return Err(LatticeError::InvalidParameter { value: i });
    }
    let last = chain.len() - 1;
    let index = ((i * last as f64) as usize).min(last);
    Ok(&chain.entries[index])
}

/// One classified entry of a chain.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ChainStep {
    pub index: usize,
    /// `index / (len - 1)`; a single-entry chain reports `0.0`.
    pub parameter: f64,
    pub profile: SeparationProfile,
}

/// First chain index at which each axiom flag holds, if any.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Strata {
    pub first_t0: Option<usize>,
    pub first_t1: Option<usize>,
    pub first_t2: Option<usize>,
    pub first_t3: Option<usize>,
    pub first_t4: Option<usize>,
}

/// Per-entry separation profiles along a chain, plus observed strata
/// boundaries.
#[derive(Clone, PartialEq, Debug)]
pub struct ChainTrace {
    pub steps: Vec<ChainStep>,
    pub strata: Strata,
}

/// Classifies every entry of a chain.
pub fn classify_chain(chain: &Chain) -> ChainTrace {
    let len = chain.len();
    let denom = (len - 1).max(1) as f64;
    let mut steps = Vec::with_capacity(len);
    let mut strata = Strata::default();
    for (index, topo) in chain.entries().iter().enumerate() {
        let profile = classify(topo);
        let seen = |flag: bool, slot: &mut Option<usize>| {
            if flag && slot.is_none() {
                *slot = Some(index);
            }
        };
        seen(profile.t0, &mut strata.first_t0);
        seen(profile.t1, &mut strata.first_t1);
        seen(profile.t2, &mut strata.first_t2);
        seen(profile.t3, &mut strata.first_t3);
        seen(profile.t4, &mut strata.first_t4);
        steps.push(ChainStep { index, parameter: index as f64 / denom, profile });
    }
    ChainTrace { steps, strata }
}

/// The fixed six-band reference schedule for chain parameters: `0` maps to
/// no axiom, then successive sixths of the interval to T0..T4, with the
/// final band (the discrete tail) satisfying everything, reported as T4.
/// Observed strata on finite carriers usually diverge from this schedule
/// because T1 already forces the discrete topology; reporting prints both.
pub fn scheduled_axiom(i: f64) -> Axiom {
    debug_assert!((0.0..=1.0).contains(&i));
    if i <= 0.0 {
        Axiom::None
    } else if i <= 1.0 / 6.0 {
        Axiom::T0
    } else if i <= 2.0 / 6.0 {
        Axiom::T1
    } else if i <= 3.0 / 6.0 {
        Axiom::T2
    } else if i <= 4.0 / 6.0 {
        Axiom::T3
    } else {
        Axiom::T4
    }
}

/// Closes a mask-family bit set (bit `m` set iff mask `m` is a member)
/// under pairwise union and intersection, assuming `base` is already
/// closed and `extra` is the one new member.
fn close_family_with(base: u32, extra: u16, n: u8) -> u32 {
    let all = 1u16 << n;
    let mut family = base | (1u32 << extra);
    let mut queue = alloc::vec![extra];
    while let Some(x) = queue.pop() {
        for y in 0..all {
            if family & (1u32 << y) == 0 {
                continue;
            }
            for candidate in [x | y, x & y] {
                if family & (1u32 << candidate) == 0 {
                    family |= 1u32 << candidate;
                    queue.push(candidate);
                }
            }
        }
    }
    family
}

fn family_to_topology(family: u32, n: u8) -> Topology {
    let opens = (0..1u16 << n)
        .filter(|&m| family & (1u32 << m) != 0)
        .map(PointSet::from_mask)
        .collect();
    Topology::from_canonical(GroundSet::new(n).expect("n is in range"), opens)
}

/// Enumerates every topology on `n <= 5` points, in canonical form, sorted
/// by their open families. `progress` is called with the running count
/// each time a new topology is found.
pub fn enumerate_topologies_with<F: FnMut(usize)>(
    n: u8,
    shuffle_seed: Option<u64>,
    mut progress: F,
) -> Result<Vec<Topology>, LatticeError> {
    if n == 0 || n > 5 {
        return Err(LatticeError::OutOfBounds { value: n as usize, max: 5 });
    }
    let all = 1u16 << n;
    let trivial: u32 = (1u32 << 0) | (1u32 << (all - 1));
    let mut rng = shuffle_seed.map(SplitMix64::new);

    let mut visited = alloc::collections::BTreeSet::new();
    visited.insert(trivial);
    progress(1);
    let mut stack = alloc::vec![trivial];
    while let Some(family) = stack.pop() {
        let mut candidates: Vec<u16> =
            (0..all).filter(|&m| family & (1u32 << m) == 0).collect();
        if let Some(rng) = rng.as_mut() {
            rng.shuffle(&mut candidates);
        }
        for m in candidates {
            let child = close_family_with(family, m, n);
            if visited.insert(child) {
                progress(visited.len());
                stack.push(child);
            }
        }
    }

    // BTreeSet iteration is ascending, which is a canonical order.
    Ok(visited.into_iter().map(|family| family_to_topology(family, n)).collect())
}

/// [`enumerate_topologies_with`] with default candidate order and no
/// progress reporting.
pub fn enumerate_topologies(n: u8) -> Result<Vec<Topology>, LatticeError> {
    enumerate_topologies_with(n, None, |_| {})
}

/// Lexicographically least open family among all point relabelings of `t`
/// (`n <= 8`). Labels are dropped: the canonical form is an unlabeled
/// representative, so isomorphic topologies canonicalize identically.
pub fn canonical_form(t: &Topology) -> Result<Topology, LatticeError> {
    let n = t.n();
    if n > 8 {
        return Err(LatticeError::OutOfBounds { value: n as usize, max: 8 });
    }
    let mut perm: Vec<u8> = (0..n).collect();
    let mut best: Option<Vec<PointSet>> = None;
    loop {
        let mut opens: Vec<PointSet> = t
            .opens()
            .iter()
            .map(|s| PointSet::from_indices(s.indices().map(|i| perm[i as usize])))
            .collect();
        opens.sort_unstable();
        if best.as_ref().is_none_or(|b| opens < *b) {
            best = Some(opens);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(Topology::from_canonical(
        GroundSet::new(n).expect("n came from a valid topology"),
        best.expect("at least the identity permutation was tried"),
    ))
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(perm: &mut [u8]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
