//! Symbolic ordinals below w^2 and the order topology on `[0,a)` / `[0,a]`.
//!
//! An [`Ordinal`] is `w*a + b` with machine-word coefficients; `w` is the
//! first infinite ordinal. Subsets of a space are restricted to finite
//! unions of intervals ([`IntervalSet`]), which keeps openness, closure,
//! density and cover questions decidable:
//!
//! - zero and successors are isolated points, so a set is open iff no
//!   interval of its normal form starts at a limit ordinal;
//! - a limit `w*k` accumulates a set iff some interval starts below it and
//!   reaches it, so derived sets are computable per interval.
//!
//! Open covers may contain schematic atoms describing infinite families
//! (all finite initial segments, or all successor singletons below a
//! bound). [`finite_subcover`] extracts a finite subcover by greedy
//! descent from the top: cover the current greatest uncovered point, drop
//! to the next uncovered region, repeat; well-foundedness bounds the
//! passes through limit points. On a half-open `[0,a)` with `a` a limit the
//! descent can stall at a cofinal tail no single atom reaches; since every
//! atom is bounded below that limit, so is every finite subfamily, and the
//! failure is reported with that witness.

use alloc::vec::Vec;
use core::fmt;

/// An ordinal `w*a + b` below `w^2`. The derived lexicographic order on
/// `(a, b)` is the ordinal order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Ordinal {
    a: u64,
    b: u64,
}

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal { a: 0, b: 0 };
    pub const OMEGA: Ordinal = Ordinal { a: 1, b: 0 };

    pub fn new(a: u64, b: u64) -> Ordinal {
        Ordinal { a, b }
    }

    /// The finite ordinal `b`.
    pub fn natural(b: u64) -> Ordinal {
        Ordinal { a: 0, b }
    }

    pub fn omega_coefficient(self) -> u64 {
        self.a
    }

    pub fn finite_part(self) -> u64 {
        self.b
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// A limit ordinal has no immediate predecessor and is not zero.
    pub fn is_limit(self) -> bool {
        self.b == 0 && self.a > 0
    }

    pub fn is_successor(self) -> bool {
        self.b > 0
    }

    pub fn successor(self) -> Result<Ordinal, OrdinalError> {
        let b = self.b.checked_add(1).ok_or(OrdinalError::Overflow)?;
        Ok(Ordinal { a: self.a, b })
    }

    /// Immediate predecessor; `None` for zero and limit ordinals.
    pub fn predecessor(self) -> Option<Ordinal> {
        if self.b == 0 { None } else { Some(Ordinal { a: self.a, b: self.b - 1 }) }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => write!(f, "w"),
            (1, b) => write!(f, "w+{b}"),
            (a, 0) => write!(f, "w*{a}"),
            (a, b) => write!(f, "w*{a}+{b}"),
        }
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Total comparison of ordinals (the lexicographic order on coefficients).
pub fn ord_compare(x: Ordinal, y: Ordinal) -> core::cmp::Ordering {
    x.cmp(&y)
}

/// The carrier `[0, bound]` (with top) or `[0, bound)` (without).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OrdinalSpace {
    bound: Ordinal,
    includes_top: bool,
}

impl OrdinalSpace {
    /// The closed carrier `[0, bound]`.
    pub fn closed(bound: Ordinal) -> OrdinalSpace {
        OrdinalSpace { bound, includes_top: true }
    }

    /// The half-open carrier `[0, bound)`; `bound` must be positive.
    pub fn half_open(bound: Ordinal) -> Result<OrdinalSpace, OrdinalError> {
        if bound.is_zero() {
            return Err(OrdinalError::EmptyCarrier);
        }
        Ok(OrdinalSpace { bound, includes_top: false })
    }

    pub fn bound(self) -> Ordinal {
        self.bound
    }

    pub fn includes_top(self) -> bool {
        self.includes_top
    }

    pub fn contains(self, x: Ordinal) -> bool {
        if self.includes_top { x <= self.bound } else { x < self.bound }
    }

    /// Greatest point of the carrier, when one exists.
    pub fn max_point(self) -> Option<Ordinal> {
        if self.includes_top { Some(self.bound) } else { self.bound.predecessor() }
    }

    /// The whole carrier as an interval set.
    pub fn carrier(self) -> IntervalSet {
        if self.includes_top {
            IntervalSet::closed_range(Ordinal::ZERO, self.bound)
        } else {
            IntervalSet::from_raw(&[RawInterval {
                lo: Ordinal::ZERO,
                lo_closed: true,
                hi: self.bound,
                hi_closed: false,
            }])
        }
    }
}

impl fmt::Display for OrdinalSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.includes_top { ']' } else { ')' };
        write!(f, "[0,{}{}", self.bound, close)
    }
}

/// An interval written the way it was given; normalization turns it into
/// canonical [`Interval`]s.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RawInterval {
    pub lo: Ordinal,
    pub lo_closed: bool,
    pub hi: Ordinal,
    pub hi_closed: bool,
}

/// Canonical nonempty interval: closed at the left end; the right end is
/// closed unless `hi` is a limit ordinal approached from below (`[lo, hi)`
/// with `lo < hi`), the one case with no greatest element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Ordinal,
    hi: Ordinal,
    hi_closed: bool,
}

impl Interval {
    pub fn lo(self) -> Ordinal {
        self.lo
    }

    pub fn hi(self) -> Ordinal {
        self.hi
    }

    pub fn hi_closed(self) -> bool {
        self.hi_closed
    }

    pub fn contains(self, x: Ordinal) -> bool {
        self.lo <= x && if self.hi_closed { x <= self.hi } else { x < self.hi }
    }

    /// Greatest point, when one exists.
    pub fn max_point(self) -> Option<Ordinal> {
        if self.hi_closed { Some(self.hi) } else { None }
    }

    /// First ordinal above every point of the interval.
    fn reach(self) -> Ordinal {
        if self.hi_closed {
            self.hi.successor().expect("interval bounds stay below the word range")
        } else {
            self.hi
        }
    }

    /// True when the interval has finitely many points.
    pub fn is_finite(self) -> bool {
        self.hi_closed && self.lo.a == self.hi.a
    }

    /// End-bound order: later `hi` wins; at equal `hi` the closed end
    /// covers one more point than the open end.
    fn end_key(self) -> (Ordinal, bool) {
        (self.hi, self.hi_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi_closed && self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{},{}{}", self.lo, self.hi, if self.hi_closed { ']' } else { ')' })
        }
    }
}

/// A normalized finite union of intervals: sorted, pairwise disjoint and
/// non-adjacent, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> IntervalSet {
        IntervalSet { intervals: Vec::new() }
    }

    pub fn singleton(x: Ordinal) -> IntervalSet {
        IntervalSet { intervals: alloc::vec![Interval { lo: x, hi: x, hi_closed: true }] }
    }

    /// `[lo, hi]`.
    pub fn closed_range(lo: Ordinal, hi: Ordinal) -> IntervalSet {
        IntervalSet::from_raw(&[RawInterval { lo, lo_closed: true, hi, hi_closed: true }])
    }

    /// Normalizes any list of raw intervals: empty pieces are dropped,
    /// left ends are closed up, right ends closed down where a greatest
    /// element exists, and overlapping or adjacent pieces merge.
    pub fn from_raw(raws: &[RawInterval]) -> IntervalSet {
        let mut canonical: Vec<Interval> = raws.iter().filter_map(|r| canonicalize(*r)).collect();
        canonical.sort_unstable_by_key(|iv| (iv.lo, iv.end_key()));
        let mut merged: Vec<Interval> = Vec::with_capacity(canonical.len());
        for iv in canonical {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.reach() => {
                    if iv.end_key() > last.end_key() {
                        last.hi = iv.hi;
                        last.hi_closed = iv.hi_closed;
                    }
                }
                _ => merged.push(iv),
            }
        }
        IntervalSet { intervals: merged }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: Ordinal) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x))
    }

    /// Greatest point, when one exists (`None` for the empty set or when
    /// the last interval is open at a limit).
    pub fn max_point(&self) -> Option<Ordinal> {
        self.intervals.last().and_then(|iv| iv.max_point())
    }

    /// Least point, when nonempty.
    pub fn min_point(&self) -> Option<Ordinal> {
        self.intervals.first().map(|iv| iv.lo)
    }

    pub fn is_finite(&self) -> bool {
        self.intervals.iter().all(|iv| iv.is_finite())
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut raws: Vec<RawInterval> = self.intervals.iter().map(|iv| iv.raw()).collect();
        raws.extend(other.intervals.iter().map(|iv| iv.raw()));
        IntervalSet::from_raw(&raws)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut raws = Vec::new();
        for x in &self.intervals {
            for y in &other.intervals {
                let lo = x.lo.max(y.lo);
                let (hi, hi_closed) = if x.end_key() <= y.end_key() {
                    (x.hi, x.hi_closed)
                } else {
                    (y.hi, y.hi_closed)
                };
                raws.push(RawInterval { lo, lo_closed: true, hi, hi_closed });
            }
        }
        IntervalSet::from_raw(&raws)
    }

    /// Complement of `self` inside the carrier of `space`; `self` must be
    /// within the carrier.
    pub fn complement_within(&self, space: OrdinalSpace) -> IntervalSet {
        let mut raws = Vec::new();
        let mut cursor = Ordinal::ZERO;
        for iv in &self.intervals {
            raws.push(RawInterval { lo: cursor, lo_closed: true, hi: iv.lo, hi_closed: false });
            cursor = iv.reach();
        }
        raws.push(RawInterval {
            lo: cursor,
            lo_closed: true,
            hi: space.bound,
            hi_closed: space.includes_top,
        });
        IntervalSet::from_raw(&raws)
    }

    /// Set difference within a carrier.
    pub fn minus(&self, other: &IntervalSet, space: OrdinalSpace) -> IntervalSet {
        self.intersect(&other.complement_within(space))
    }

    /// True iff every point of `self` lies in `other`.
    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.intersect(other) == *self
    }

    /// True iff every point lies in the carrier of `space`.
    pub fn is_within(&self, space: OrdinalSpace) -> bool {
        self.intervals.iter().all(|iv| {
            if iv.hi_closed { space.contains(iv.hi) } else { iv.hi <= space.bound }
        })
    }

    /// First point of the carrier not in `self`, if any.
    fn first_missing_in(&self, space: OrdinalSpace) -> Option<Ordinal> {
        self.complement_within(space).min_point()
    }
}

impl Interval {
    fn raw(self) -> RawInterval {
        RawInterval { lo: self.lo, lo_closed: true, hi: self.hi, hi_closed: self.hi_closed }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// Canonical form of a raw interval, or `None` when it has no points.
fn canonicalize(raw: RawInterval) -> Option<Interval> {
    let lo = if raw.lo_closed {
        raw.lo
    } else {
        raw.lo.successor().ok()?
    };
    let (hi, hi_closed) = if raw.hi_closed {
        (raw.hi, true)
    } else if raw.hi.is_limit() {
        (raw.hi, false)
    } else {
        // Open at zero or a successor: step down to the closed form.
        (raw.hi.predecessor()?, true)
    };
    let nonempty = if hi_closed { lo <= hi } else { lo < hi };
    nonempty.then_some(Interval { lo, hi, hi_closed })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrdinalError {
    /// A finite part would exceed the machine word.
    Overflow,
    /// Half-open space with bound zero.
    EmptyCarrier,
    /// The set reaches outside the carrier of the space.
    OutOfCarrier { witness: Ordinal },
    /// A cover atom is not open in the space.
    NotOpen { atom: usize },
    /// A schematic shape produces points outside the carrier.
    MalformedShape { atom: usize },
    /// The atoms do not cover the carrier at all.
    UncoveredPoint(Ordinal),
    /// The cover has no finite subcover: every atom meets `[0, at)` in a
    /// set bounded strictly below `at`, hence so does every finite
    /// subfamily.
    NoFiniteSubcover { at: Ordinal },
}

impl fmt::Display for OrdinalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdinalError::Overflow => f.write_str("ordinal finite part overflow"),
            OrdinalError::EmptyCarrier => f.write_str("half-open carrier [0,0) is empty"),
            OrdinalError::OutOfCarrier { witness } => {
                write!(f, "set leaves the carrier near {witness}")
            }
            OrdinalError::NotOpen { atom } => write!(f, "cover atom #{atom} is not open"),
            OrdinalError::MalformedShape { atom } => {
                write!(f, "cover atom #{atom} is not well-formed for the space")
            }
            OrdinalError::UncoveredPoint(x) => write!(f, "point {x} is covered by no atom"),
            OrdinalError::NoFiniteSubcover { at } => write!(
                f,
                "no finite subcover: every finite subfamily is bounded strictly below {at}"
            ),
        }
    }
}

impl core::error::Error for OrdinalError {}

fn require_within(space: OrdinalSpace, s: &IntervalSet) -> Result<(), OrdinalError> {
    if let Some(iv) = s.intervals().iter().find(|iv| {
        !(if iv.hi_closed() { space.contains(iv.hi()) } else { iv.hi() <= space.bound() })
    }) {
        return Err(OrdinalError::OutOfCarrier { witness: iv.hi() });
    }
    Ok(())
}

/// Order-topology openness. Zero and successors are isolated, so the only
/// obstruction is a limit ordinal sitting at the left end of one of the
/// normalized intervals: such a point has no tail `(g, x]` inside the set.
pub fn is_open(space: OrdinalSpace, s: &IntervalSet) -> Result<bool, OrdinalError> {
    require_within(space, s)?;
    Ok(s.intervals().iter().all(|iv| !iv.lo().is_limit()))
}

/// Accumulation points of `s` within the carrier: a limit ordinal `x`
/// qualifies iff `s` meets every `(g, x)`, i.e. some interval of `s`
/// starts below `x` and reaches it.
pub fn derived_set_o(space: OrdinalSpace, s: &IntervalSet) -> Result<IntervalSet, OrdinalError> {
    require_within(space, s)?;
    let mut limits = IntervalSet::empty();
    for iv in s.intervals() {
        // Limits w*k with lo < w*k <= hi, clipped to the carrier.
        let k_min = iv.lo().omega_coefficient() + 1;
        let k_max = iv.hi().omega_coefficient();
        for k in k_min..=k_max {
            let w = Ordinal::new(k, 0);
            if space.contains(w) {
                limits = limits.union(&IntervalSet::singleton(w));
            }
        }
    }
    Ok(limits)
}

/// Closure in the order topology: the set plus its accumulation points.
pub fn closure_o(space: OrdinalSpace, s: &IntervalSet) -> Result<IntervalSet, OrdinalError> {
    Ok(s.union(&derived_set_o(space, s)?))
}

/// True iff the closure is the whole carrier.
pub fn is_dense_o(space: OrdinalSpace, s: &IntervalSet) -> Result<bool, OrdinalError> {
    Ok(closure_o(space, s)? == space.carrier())
}

/// Openness in the one-point compactification of the naturals, with `w` as
/// the added point: any set avoiding `w` is open, and a set containing `w`
/// is open iff it misses only finitely many naturals.
pub fn alexandroff_open(s: &IntervalSet) -> Result<bool, OrdinalError> {
    let space = OrdinalSpace::closed(Ordinal::OMEGA);
    require_within(space, s)?;
    if !s.contains(Ordinal::OMEGA) {
        return Ok(true);
    }
    Ok(s.complement_within(space).is_finite())
}

/// Parametric families of open sets for covers of ordinal spaces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    /// All finite initial segments `[0, n)` for natural `n`.
    InitialSegments,
    /// All singletons of non-limit ordinals below the bound.
    SingletonsBelow(Ordinal),
}

/// One atom of a cover: a concrete open set or a schematic family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoverAtom {
    Concrete(IntervalSet),
    Schematic(Shape),
}

/// A nonempty family of cover atoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverFamily {
    atoms: Vec<CoverAtom>,
}

impl CoverFamily {
    pub fn new(atoms: Vec<CoverAtom>) -> Option<CoverFamily> {
        if atoms.is_empty() { None } else { Some(CoverFamily { atoms }) }
    }

    pub fn atoms(&self) -> &[CoverAtom] {
        &self.atoms
    }
}

/// Union of every instance of a schematic shape, as a point set.
fn shape_union(shape: Shape, space: OrdinalSpace) -> IntervalSet {
    match shape {
        // The segments [0, n) jointly cover exactly the naturals.
        Shape::InitialSegments => IntervalSet::from_raw(&[RawInterval {
            lo: Ordinal::ZERO,
            lo_closed: true,
            hi: Ordinal::OMEGA,
            hi_closed: false,
        }])
        .intersect(&space.carrier()),
        // Everything below the bound except the limit ordinals.
        Shape::SingletonsBelow(beta) => {
            let mut raws = Vec::new();
            let mut k = 0u64;
            loop {
                let block_lo = if k == 0 {
                    Ordinal::ZERO
                } else {
                    Ordinal::new(k, 1) // skip the limit w*k itself
                };
                let block_hi = Ordinal::new(k + 1, 0).min(beta);
                if block_lo >= beta {
                    break;
                }
                raws.push(RawInterval {
                    lo: block_lo,
                    lo_closed: true,
                    hi: block_hi,
                    hi_closed: false,
                });
                if block_hi == beta {
                    break;
                }
                k += 1;
            }
            IntervalSet::from_raw(&raws)
        }
    }
}

fn validate_atom(space: OrdinalSpace, index: usize, atom: &CoverAtom) -> Result<(), OrdinalError> {
    match atom {
        CoverAtom::Concrete(set) => {
            // Propagates OutOfCarrier for sets leaving the space.
            if !is_open(space, set)? {
                return Err(OrdinalError::NotOpen { atom: index });
            }
        }
        CoverAtom::Schematic(Shape::InitialSegments) => {
            // Every [0, n) must fit, so the carrier must hold all naturals.
            if space.bound() < Ordinal::OMEGA {
                return Err(OrdinalError::MalformedShape { atom: index });
            }
        }
        CoverAtom::Schematic(Shape::SingletonsBelow(beta)) => {
            let limit_ok = if space.includes_top() {
                *beta <= space.bound().successor().map_err(|_| OrdinalError::Overflow)?
            } else {
                *beta <= space.bound()
            };
            if !limit_ok {
                return Err(OrdinalError::MalformedShape { atom: index });
            }
        }
    }
    Ok(())
}

/// Best instance of an atom covering point `t`, as (downward reach of the
/// run through `t`, instantiated set). Lower reach is better.
fn instance_covering(atom: &CoverAtom, t: Ordinal) -> Option<(Ordinal, IntervalSet)> {
    match atom {
        CoverAtom::Concrete(set) => set
            .intervals()
            .iter()
            .find(|iv| iv.contains(t))
            .map(|iv| (iv.lo(), set.clone())),
        CoverAtom::Schematic(Shape::InitialSegments) => {
            if t.omega_coefficient() == 0 {
                // [0, t+1) reaches all the way down.
                Some((Ordinal::ZERO, IntervalSet::closed_range(Ordinal::ZERO, t)))
            } else {
                None
            }
        }
        CoverAtom::Schematic(Shape::SingletonsBelow(beta)) => {
            (!t.is_limit() && t < *beta).then(|| (t, IntervalSet::singleton(t)))
        }
    }
}

/// Concrete atom interval covering a cofinal tail below the limit `lam`,
/// as (reach, whole atom).
fn tail_covering(atom: &CoverAtom, lam: Ordinal) -> Option<(Ordinal, IntervalSet)> {
    match atom {
        CoverAtom::Concrete(set) => set
            .intervals()
            .iter()
            .find(|iv| iv.lo() < lam && iv.hi() >= lam)
            .map(|iv| (iv.lo(), set.clone())),
        // Schematic instances are all bounded strictly below any limit.
        CoverAtom::Schematic(_) => None,
    }
}

/// Extracts a finite subcover of the carrier by greedy descent from the
/// top. Returns the chosen concrete sets in descent order. Fails with
/// [`OrdinalError::UncoveredPoint`] when the atoms are not a cover, and
/// with [`OrdinalError::NoFiniteSubcover`] when they are but every finite
/// subfamily is bounded below a limit the carrier approaches.
pub fn finite_subcover(
    space: OrdinalSpace,
    cover: &CoverFamily,
) -> Result<Vec<IntervalSet>, OrdinalError> {
    for (index, atom) in cover.atoms().iter().enumerate() {
        validate_atom(space, index, atom)?;
    }

    // Pointwise coverage first, so a later descent stall is a genuine
    // compactness failure rather than a hole in the cover.
    let mut total = IntervalSet::empty();
    for atom in cover.atoms() {
        let atom_union = match atom {
            CoverAtom::Concrete(set) => set.clone(),
            CoverAtom::Schematic(shape) => shape_union(*shape, space),
        };
        total = total.union(&atom_union);
    }
    if let Some(missing) = total.first_missing_in(space) {
        return Err(OrdinalError::UncoveredPoint(missing));
    }

    let mut remaining = space.carrier();
    let mut chosen: Vec<IntervalSet> = Vec::new();
    while let Some(top) = remaining.intervals().last().copied() {
        let pick = match top.max_point() {
            Some(t) => cover
                .atoms()
                .iter()
                .filter_map(|atom| instance_covering(atom, t))
                .min_by_key(|(reach, _)| *reach)
                .ok_or(OrdinalError::UncoveredPoint(t))?,
            None => {
                // Topless tail `[lo, lam)`: only a concrete atom reaching
                // through `lam` can cover it cofinally.
                let lam = top.hi();
                cover
                    .atoms()
                    .iter()
                    .filter_map(|atom| tail_covering(atom, lam))
                    .min_by_key(|(reach, _)| *reach)
                    .ok_or(OrdinalError::NoFiniteSubcover { at: lam })?
            }
        };
        remaining = remaining.minus(&pick.1, space);
        chosen.push(pick.1);
    }
    Ok(chosen)
}
