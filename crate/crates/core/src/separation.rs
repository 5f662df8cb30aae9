//! Separation-axiom classification for finite topologies.
//!
//! The conventions used throughout: T3 = regular + T1 and T4 = normal + T1,
//! so the trivial topology on two or more points satisfies none of T0..T4
//! (it is vacuously regular and normal) while the discrete topology
//! satisfies all of them.
//!
//! Two checkers are kept side by side. [`classify`] is the fast path: it
//! reads T0/T1 off the specialization preorder and decides T2, regularity
//! and normality through minimal open neighborhoods, which exist because
//! finite topologies are closed under arbitrary intersections.
//! [`classify_definitional`] searches open pairs exactly as the textbook
//! definitions state and serves as the oracle in tests.

use alloc::vec::Vec;
use core::fmt;

use crate::finspace::{PointSet, Topology, closure};

/// Separation classes ordered by strength.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Axiom {
    None,
    T0,
    T1,
    T2,
    T3,
    T4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::None => "None",
            Axiom::T0 => "T0",
            Axiom::T1 => "T1",
            Axiom::T2 => "T2",
            Axiom::T3 => "T3",
            Axiom::T4 => "T4",
        };
        f.write_str(s)
    }
}

/// Flags for each axiom plus the strongest satisfied class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
    pub t3: bool,
    pub normal: bool,
    pub t4: bool,
    pub strongest: Axiom,
}

impl SeparationProfile {
    /// Builds a profile from the five independent flags; `t3`, `t4` and
    /// `strongest` are derived.
    pub fn from_flags(t0: bool, t1: bool, t2: bool, regular: bool, normal: bool) -> Self {
        let t3 = regular && t1;
        let t4 = normal && t1;
        let strongest = if t4 {
            Axiom::T4
        } else if t3 {
            Axiom::T3
        } else if t2 {
            Axiom::T2
        } else if t1 {
            Axiom::T1
        } else if t0 {
            Axiom::T0
        } else {
            Axiom::None
        };
        SeparationProfile { t0, t1, t2, regular, t3, normal, t4, strongest }
    }
}

/// The specialization preorder of a finite space: `relates(x, y)` iff
/// `x` lies in the closure of `{y}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Preorder {
    n: u8,
    point_closures: Vec<PointSet>,
}

impl Preorder {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn relates(&self, x: u8, y: u8) -> bool {
        self.point_closures[y as usize].contains(x)
    }

    pub fn is_antisymmetric(&self) -> bool {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.relates(x, y) && self.relates(y, x) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|y| self.point_closures[y as usize] == PointSet::singleton(y))
    }

    /// Row-major matrix with entry `(x, y)` = `relates(x, y)`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.relates(x, y)).collect())
            .collect()
    }
}

/// Computes the specialization preorder (reflexive and transitive by
/// construction).
pub fn specialization_preorder(t: &Topology) -> Preorder {
    let point_closures = (0..t.n())
        .map(|y| closure(t, PointSet::singleton(y)).expect("singleton mask is valid"))
        .collect();
    Preorder { n: t.n(), point_closures }
}

/// Minimal open neighborhood of each point.
fn minimal_neighborhoods(t: &Topology) -> Vec<PointSet> {
    (0..t.n())
        .map(|x| {
            let mut acc = PointSet::full(t.n());
            for &u in t.opens() {
                if u.contains(x) {
                    acc = acc.intersect(u);
                }
            }
            acc
        })
        .collect()
}

/// Minimal open superset of `s` (the union of per-point minimal
/// neighborhoods).
fn minimal_superset(minimal: &[PointSet], s: PointSet) -> PointSet {
    let mut acc = PointSet::EMPTY;
    for x in s.indices() {
        acc = acc.union(minimal[x as usize]);
    }
    acc
}

/// Fast classifier. Two sets with disjoint minimal open supersets are
/// separated by disjoint opens, and conversely, so T2, regularity and
/// normality reduce to neighborhood intersections.
pub fn classify(t: &Topology) -> SeparationProfile {
    let n = t.n();
    let preorder = specialization_preorder(t);
    let t0 = preorder.is_antisymmetric();
    let t1 = preorder.is_identity();

    let minimal = minimal_neighborhoods(t);
    let mut t2 = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            if !minimal[x as usize].intersect(minimal[y as usize]).is_empty() {
                t2 = false;
                break 'outer;
            }
        }
    }

    let closed_sets: Vec<PointSet> = t.opens().iter().map(|u| u.complement(n)).collect();
    let closed_hulls: Vec<PointSet> =
        closed_sets.iter().map(|&c| minimal_superset(&minimal, c)).collect();

    let mut regular = true;
    'reg: for (i, &c) in closed_sets.iter().enumerate() {
        for x in 0..n {
            if c.contains(x) {
                continue;
            }
            if !minimal[x as usize].intersect(closed_hulls[i]).is_empty() {
                regular = false;
                break 'reg;
            }
        }
    }

    let mut normal = true;
    'norm: for (i, &c1) in closed_sets.iter().enumerate() {
        for (j, &c2) in closed_sets.iter().enumerate().skip(i) {
            if !c1.intersect(c2).is_empty() {
                continue;
            }
            if !closed_hulls[i].intersect(closed_hulls[j]).is_empty() {
                normal = false;
                break 'norm;
            }
        }
    }

    SeparationProfile::from_flags(t0, t1, t2, regular, normal)
}

/// Definitional T0: every pair of distinct points has an open set
/// containing exactly one of them.
pub fn t0_by_definition(t: &Topology) -> bool {
    let n = t.n();
    for x in 0..n {
        for y in x + 1..n {
            let separated = t
                .opens()
                .iter()
                .any(|&u| u.contains(x) != u.contains(y));
            if !separated {
                return false;
            }
        }
    }
    true
}

/// Definitional T1: for every ordered pair of distinct points there is an
/// open set containing the first but not the second.
pub fn t1_by_definition(t: &Topology) -> bool {
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let witnessed = t.opens().iter().any(|&u| u.contains(x) && !u.contains(y));
            if !witnessed {
                return false;
            }
        }
    }
    true
}

fn separated_by_opens(t: &Topology, a: PointSet, b: PointSet) -> bool {
    for &u in t.opens() {
        if !a.is_subset(u) {
            continue;
        }
        for &v in t.opens() {
            if b.is_subset(v) && u.intersect(v).is_empty() {
                return true;
            }
        }
    }
    false
}

/// Oracle classifier: exhaustive search over open pairs, following the
/// definitions verbatim.
pub fn classify_definitional(t: &Topology) -> SeparationProfile {
    let n = t.n();
    let t0 = t0_by_definition(t);
    let t1 = t1_by_definition(t);

    let mut t2 = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            if !separated_by_opens(t, PointSet::singleton(x), PointSet::singleton(y)) {
                t2 = false;
                break 'outer;
            }
        }
    }

    let closed_sets: Vec<PointSet> = t.opens().iter().map(|u| u.complement(n)).collect();

    let mut regular = true;
    'reg: for &c in &closed_sets {
        for x in 0..n {
            if !c.contains(x) && !separated_by_opens(t, PointSet::singleton(x), c) {
                regular = false;
                break 'reg;
            }
        }
    }

    let mut normal = true;
    'norm: for (i, &c1) in closed_sets.iter().enumerate() {
        for &c2 in &closed_sets[i..] {
            if c1.intersect(c2).is_empty() && !separated_by_opens(t, c1, c2) {
                normal = false;
                break 'norm;
            }
        }
    }

    SeparationProfile::from_flags(t0, t1, t2, regular, normal)
}
