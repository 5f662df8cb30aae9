//! Finite topological spaces in canonical form.
//!
//! A space lives on a [`GroundSet`] of `1..=16` points; subsets are bit
//! masks ([`PointSet`]) and a [`Topology`] is the sorted, duplicate-free
//! list of its open masks. The canonical sorted form makes structural
//! equality coincide with equality of topologies and keeps serialized
//! output byte-stable. Point labels are presentation-only: every algorithm
//! works on indices.
//!
//! On a finite carrier a family closed under pairwise unions and pairwise
//! intersections is closed under arbitrary ones, so validation only checks
//! pairs. For the same reason every point has a minimal open neighborhood;
//! other modules exploit that.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported ground-set size. Masks fit in a `u16`.
pub const MAX_POINTS: u8 = 16;

/// A subset of a ground set, encoded as an n-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(u16);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_mask(mask: u16) -> PointSet {
        PointSet(mask)
    }

    /// The full set on `n` points.
    pub fn full(n: u8) -> PointSet {
        debug_assert!(n <= MAX_POINTS);
        PointSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(i: u8) -> PointSet {
        PointSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = u8>>(indices: I) -> PointSet {
        let mut mask = 0u16;
        for i in indices {
            mask |= 1 << i;
        }
        PointSet(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersect(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn minus(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn complement(self, n: u8) -> PointSet {
        PointSet::full(n).minus(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when no bit at position `>= n` is set.
    pub fn is_valid_for(self, n: u8) -> bool {
        self.is_subset(PointSet::full(n))
    }

    /// Point indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u8> {
        let mask = self.0;
        (0..MAX_POINTS).filter(move |i| mask & (1 << i) != 0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The underlying set of points, with optional display labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroundSet {
    n: u8,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: u8) -> Result<GroundSet, TopologyError> {
        if n == 0 || n > MAX_POINTS {
            return Err(TopologyError::OutOfBounds {
                value: n as usize,
                max: MAX_POINTS as usize,
            });
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(n: u8, labels: Vec<String>) -> Result<GroundSet, TopologyError> {
        let mut ground = GroundSet::new(n)?;
        if labels.len() != n as usize {
            return Err(TopologyError::LabelCountMismatch {
                expected: n,
                got: labels.len(),
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(TopologyError::DuplicateLabel { label: a.clone() });
            }
        }
        ground.labels = Some(labels);
        Ok(ground)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of point `i` (defaults to `p{i}`).
    pub fn label(&self, i: u8) -> String {
        match &self.labels {
            Some(labels) => labels[i as usize].clone(),
            None => format!("p{i}"),
        }
    }
}

/// A finite topology in canonical form: open masks sorted ascending,
/// duplicate-free, containing the empty and full sets and closed under
/// pairwise union and intersection.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Topology {
    ground: GroundSet,
    opens: Vec<PointSet>,
}

impl Topology {
    pub fn n(&self) -> u8 {
        self.ground.n
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.n()))
    }

    pub fn is_trivial(&self) -> bool {
        self.opens.len() == 2
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.n()
    }

    /// Internal constructor for families already known to be canonical
    /// (sorted, deduplicated, closed). Debug builds re-check.
    pub(crate) fn from_canonical(ground: GroundSet, opens: Vec<PointSet>) -> Topology {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(opens.first() == Some(&PointSet::EMPTY));
        debug_assert!(opens.last() == Some(&PointSet::full(ground.n)));
        Topology { ground, opens }
    }
}

impl PartialOrd for Topology {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Topology {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.ground.n, &self.opens, &self.ground.labels).cmp(&(
            other.ground.n,
            &other.opens,
            &other.ground.labels,
        ))
    }
}

/// Witness for a family that fails to be a topology.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TopologyDefect {
    MissingEmpty,
    MissingFull(PointSet),
    /// The union of the two listed members is not in the family.
    MissingUnion(PointSet, PointSet),
    /// The intersection of the two listed members is not in the family.
    MissingIntersection(PointSet, PointSet),
}

impl fmt::Display for TopologyDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyDefect::MissingEmpty => write!(f, "missing the empty set"),
            TopologyDefect::MissingFull(full) => write!(f, "missing the full set {full:?}"),
            TopologyDefect::MissingUnion(a, b) => {
                write!(f, "missing the union of {a:?} and {b:?} = {:?}", a.union(*b))
            }
            TopologyDefect::MissingIntersection(a, b) => write!(
                f,
                "missing the intersection of {a:?} and {b:?} = {:?}",
                a.intersect(*b)
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TopologyError {
    /// Ground-set size or point index outside the supported range.
    OutOfBounds { value: usize, max: usize },
    /// A mask uses bits at or above the ground-set size.
    InvalidMask { mask: u16, n: u8 },
    NotATopology(TopologyDefect),
    LabelCountMismatch { expected: u8, got: usize },
    DuplicateLabel { label: String },
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::OutOfBounds { value, max } => {
                write!(f, "out of bounds: {value} (supported range is 1..={max})")
            }
            TopologyError::InvalidMask { mask, n } => {
                write!(f, "invalid mask {mask:#06x} for a ground set of {n} points")
            }
            TopologyError::NotATopology(defect) => write!(f, "not a topology: {defect}"),
            TopologyError::LabelCountMismatch { expected, got } => {
                write!(f, "expected {expected} labels, got {got}")
            }
            TopologyError::DuplicateLabel { label } => write!(f, "duplicate label {label:?}"),
        }
    }
}

impl core::error::Error for TopologyError {}

fn check_masks(n: u8, sets: &[PointSet]) -> Result<(), TopologyError> {
    for s in sets {
        if !s.is_valid_for(n) {
            return Err(TopologyError::InvalidMask { mask: s.mask(), n });
        }
    }
    Ok(())
}

/// Validates `opens` as a topology on `n` points and returns it in
/// canonical form. The reported defect is the first one found: missing
/// empty set, missing full set, then a missing pairwise union or
/// intersection.
pub fn make_topology(n: u8, opens: &[PointSet]) -> Result<Topology, TopologyError> {
    make_topology_on(GroundSet::new(n)?, opens)
}

/// Same as [`make_topology`] with an explicit (possibly labeled) ground set.
pub fn make_topology_on(ground: GroundSet, opens: &[PointSet]) -> Result<Topology, TopologyError> {
    let n = ground.n();
    check_masks(n, opens)?;
    let mut sorted: Vec<PointSet> = opens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    if sorted.first() != Some(&PointSet::EMPTY) {
        return Err(TopologyError::NotATopology(TopologyDefect::MissingEmpty));
    }
    let full = PointSet::full(n);
    if sorted.last() != Some(&full) {
        return Err(TopologyError::NotATopology(TopologyDefect::MissingFull(full)));
    }

    // The full powerset is closed by definition; otherwise check all pairs.
    if sorted.len() != 1usize << n {
        let mut present = alloc::vec![false; 1usize << n];
        for s in &sorted {
            present[s.mask() as usize] = true;
        }
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                if !present[a.union(b).mask() as usize] {
                    return Err(TopologyError::NotATopology(TopologyDefect::MissingUnion(a, b)));
                }
                if !present[a.intersect(b).mask() as usize] {
                    return Err(TopologyError::NotATopology(TopologyDefect::MissingIntersection(
                        a, b,
                    )));
                }
            }
        }
    }

    Ok(Topology { ground, opens: sorted })
}

/// Worklist closure of a mask family under a binary operation.
fn close_under(members: &mut Vec<u16>, present: &mut [bool], op: fn(u16, u16) -> u16) {
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let mut j = 0;
        while j <= i {
            let c = op(a, members[j]);
            if !present[c as usize] {
                present[c as usize] = true;
                members.push(c);
            }
            j += 1;
        }
        i += 1;
    }
}

/// Smallest topology containing every given set: close under finite
/// intersections, then under unions, and adjoin the empty and full sets.
pub fn generate_from_subbasis(n: u8, sets: &[PointSet]) -> Result<Topology, TopologyError> {
    let ground = GroundSet::new(n)?;
    generate_from_subbasis_on(ground, sets)
}

pub(crate) fn generate_from_subbasis_on(
    ground: GroundSet,
    sets: &[PointSet],
) -> Result<Topology, TopologyError> {
    let n = ground.n();
    check_masks(n, sets)?;
    let full = PointSet::full(n);
    let mut present = alloc::vec![false; 1usize << n];
    let mut members: Vec<u16> = Vec::new();
    for s in sets.iter().map(|s| s.mask()).chain([PointSet::EMPTY.mask(), full.mask()]) {
        if !present[s as usize] {
            present[s as usize] = true;
            members.push(s);
        }
    }
    close_under(&mut members, &mut present, |a, b| a & b);
    close_under(&mut members, &mut present, |a, b| a | b);
    members.sort_unstable();
    let opens = members.into_iter().map(PointSet::from_mask).collect();
    Ok(Topology::from_canonical(ground, opens))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StandardKind {
    Trivial,
    Discrete,
}

/// The trivial (`{empty, full}`) or discrete (full powerset) topology.
pub fn standard_topology(n: u8, kind: StandardKind) -> Result<Topology, TopologyError> {
    let ground = GroundSet::new(n)?;
    let opens = match kind {
        StandardKind::Trivial => alloc::vec![PointSet::EMPTY, PointSet::full(n)],
        StandardKind::Discrete => (0..1u32 << n).map(|m| PointSet::from_mask(m as u16)).collect(),
    };
    Ok(Topology::from_canonical(ground, opens))
}

/// Smallest closed superset of `s`: the intersection of every closed set
/// containing it. Equivalently the points whose every open neighborhood
/// meets `s`.
pub fn closure(t: &Topology, s: PointSet) -> Result<PointSet, TopologyError> {
    check_masks(t.n(), &[s])?;
    let mut acc = PointSet::full(t.n());
    for &u in t.opens() {
        let c = u.complement(t.n());
        if s.is_subset(c) {
            acc = acc.intersect(c);
        }
    }
    Ok(acc)
}

/// Largest open subset of `s`.
pub fn interior(t: &Topology, s: PointSet) -> Result<PointSet, TopologyError> {
    check_masks(t.n(), &[s])?;
    let mut acc = PointSet::EMPTY;
    for &u in t.opens() {
        if u.is_subset(s) {
            acc = acc.union(u);
        }
    }
    Ok(acc)
}

/// Points `w` whose every open neighborhood meets `s` minus `w` itself.
pub fn derived_set(t: &Topology, s: PointSet) -> Result<PointSet, TopologyError> {
    check_masks(t.n(), &[s])?;
    let mut acc = PointSet::EMPTY;
    for w in 0..t.n() {
        let punctured = s.minus(PointSet::singleton(w));
        let is_limit = t
            .opens()
            .iter()
            .all(|&u| !u.contains(w) || !u.intersect(punctured).is_empty());
        if is_limit {
            acc = acc.union(PointSet::singleton(w));
        }
    }
    Ok(acc)
}

/// True iff `w` is in the derived set of `s`.
pub fn is_limit_point(t: &Topology, s: PointSet, w: u8) -> Result<bool, TopologyError> {
    if w >= t.n() {
        return Err(TopologyError::OutOfBounds {
            value: w as usize,
            max: t.n() as usize - 1,
        });
    }
    Ok(derived_set(t, s)?.contains(w))
}

/// True iff the closure of `s` is the whole space.
pub fn is_dense(t: &Topology, s: PointSet) -> Result<bool, TopologyError> {
    Ok(closure(t, s)? == PointSet::full(t.n()))
}
