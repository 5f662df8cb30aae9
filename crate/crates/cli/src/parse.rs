//! Parsers for the command-line literal grammars.
//!
//! - ordinals: `0`, `17`, `w`, `w+3`, `w*2`, `w*2+3`
//! - intervals: `[lo,hi]`, `[lo,hi)`, `(lo,hi]`, `(lo,hi)`, `{x}`
//! - interval sets: intervals joined by `+` at top level, `{}` for empty
//! - spaces: `[0,a]` or `[0,a)`
//! - cover atoms: `seg`, `sing<b`, or a concrete interval set, comma separated
//! - point sets: comma-separated indices, empty string for the empty set
//! - topologies: inline JSON, `@path`, `trivial:N`, `discrete:N`
//!
//! Splitting on `+` and `,` respects bracket depth, since ordinal literals
//! contain `+` and interval literals contain `,`.

use std::fs;

use ordtop_core::finspace::{GroundSet, PointSet, Topology, make_topology_on, standard_topology};
use ordtop_core::finspace::{MAX_POINTS, StandardKind};
use ordtop_core::ordinal::{
    CoverAtom, CoverFamily, IntervalSet, Ordinal, OrdinalSpace, RawInterval, Shape,
};

use crate::doc::TopologyDoc;
use crate::CliError;

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

/// Splits on `sep` at bracket depth zero; `[`, `(` and `{` open a level.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth = depth.saturating_sub(1),
            _ if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.parse::<u64>().map_err(|_| usage(format!("expected a natural number for {what}, got {s:?}")))
}

/// Ordinal literal: `w*A+B`, `w*A`, `w+B`, `w`, or a natural number.
pub fn parse_ordinal(input: &str) -> Result<Ordinal, CliError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(usage("empty ordinal literal (expected e.g. 0, w, w+3, w*2+3)"));
    }
    let Some(rest) = s.strip_prefix('w') else {
        return Ok(Ordinal::natural(parse_u64(s, "an ordinal")?));
    };
    if rest.is_empty() {
        return Ok(Ordinal::OMEGA);
    }
    if let Some(tail) = rest.strip_prefix('*') {
        let (a_str, b_str) = match tail.split_once('+') {
            Some((a, b)) => (a, Some(b)),
            None => (tail, None),
        };
        let a = parse_u64(a_str, "the w coefficient")?;
        let b = b_str.map(|b| parse_u64(b, "the finite part")).transpose()?.unwrap_or(0);
        return Ok(Ordinal::new(a, b));
    }
    if let Some(b_str) = rest.strip_prefix('+') {
        return Ok(Ordinal::new(1, parse_u64(b_str, "the finite part")?));
    }
    Err(usage(format!("bad ordinal literal {s:?} (expected e.g. 0, w, w+3, w*2+3)")))
}

/// One interval literal, including the `{x}` singleton form.
pub fn parse_interval(input: &str) -> Result<RawInterval, CliError> {
    let s = input.trim();
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let x = parse_ordinal(inner)?;
        return Ok(RawInterval { lo: x, lo_closed: true, hi: x, hi_closed: true });
    }
    let mut chars = s.chars();
    let lo_closed = match chars.next() {
        Some('[') => true,
        Some('(') => false,
        _ => return Err(usage(format!("bad interval {s:?} (expected e.g. [0,w) or (3,w])"))),
    };
    let hi_closed = match s.chars().last() {
        Some(']') => true,
        Some(')') => false,
        _ => return Err(usage(format!("bad interval {s:?} (expected e.g. [0,w) or (3,w])"))),
    };
    let body = &s[1..s.len() - 1];
    let parts = split_top_level(body, ',');
    let [lo_str, hi_str] = parts.as_slice() else {
        return Err(usage(format!("bad interval {s:?} (expected two endpoints)")));
    };
    Ok(RawInterval {
        lo: parse_ordinal(lo_str)?,
        lo_closed,
        hi: parse_ordinal(hi_str)?,
        hi_closed,
    })
}

/// Interval set literal: intervals joined by `+`, or `{}` for empty.
pub fn parse_interval_set(input: &str) -> Result<IntervalSet, CliError> {
    let s = input.trim();
    if s == "{}" {
        return Ok(IntervalSet::empty());
    }
    let raws = split_top_level(s, '+')
        .into_iter()
        .map(parse_interval)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntervalSet::from_raw(&raws))
}

/// Space literal `[0,a]` or `[0,a)`.
pub fn parse_space(input: &str) -> Result<OrdinalSpace, CliError> {
    let raw = parse_interval(input.trim())?;
    if !(raw.lo.is_zero() && raw.lo_closed) {
        return Err(usage(format!("bad space {input:?} (expected [0,a] or [0,a))")));
    }
    if raw.hi_closed {
        Ok(OrdinalSpace::closed(raw.hi))
    } else {
        OrdinalSpace::half_open(raw.hi).map_err(|e| CliError::Runtime(e.to_string()))
    }
}

/// Cover atom: `seg`, `sing<b`, or a concrete interval set.
pub fn parse_cover_atom(input: &str) -> Result<CoverAtom, CliError> {
    let s = input.trim();
    if s == "seg" {
        return Ok(CoverAtom::Schematic(Shape::InitialSegments));
    }
    if let Some(bound) = s.strip_prefix("sing<") {
        return Ok(CoverAtom::Schematic(Shape::SingletonsBelow(parse_ordinal(bound)?)));
    }
    Ok(CoverAtom::Concrete(parse_interval_set(s)?))
}

/// Comma-separated cover atoms.
pub fn parse_cover(input: &str) -> Result<CoverFamily, CliError> {
    let atoms = split_top_level(input.trim(), ',')
        .into_iter()
        .filter(|part| !part.trim().is_empty())
        .map(parse_cover_atom)
        .collect::<Result<Vec<_>, _>>()?;
    CoverFamily::new(atoms).ok_or_else(|| usage("a cover needs at least one atom"))
}

/// Point set literal: comma-separated indices; the empty string is empty.
pub fn parse_point_set(input: &str) -> Result<PointSet, CliError> {
    let s = input.trim();
    if s.is_empty() {
        return Ok(PointSet::EMPTY);
    }
    let mut indices = Vec::new();
    for part in s.split(',') {
        let i = parse_u64(part.trim(), "a point index")?;
        if i >= MAX_POINTS as u64 {
            return Err(usage(format!("point index {i} is too large (at most {})", MAX_POINTS - 1)));
        }
        indices.push(i as u8);
    }
    Ok(PointSet::from_indices(indices))
}

/// Exception list for `extend`: `ord:value` pairs, comma separated.
pub fn parse_exceptions(input: &str) -> Result<Vec<(Ordinal, f64)>, CliError> {
    let s = input.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(s, ',')
        .into_iter()
        .map(|pair| {
            let (at, value) = pair
                .split_once(':')
                .ok_or_else(|| usage(format!("bad exception {pair:?} (expected ord:value)")))?;
            let value = value
                .trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("bad value in exception {pair:?}")))?;
            Ok((parse_ordinal(at)?, value))
        })
        .collect()
}

/// Topology input: inline JSON, `@path`, `trivial:N`, or `discrete:N`.
pub fn parse_topology_spec(input: &str) -> Result<Topology, CliError> {
    let s = input.trim();
    if let Some(path) = s.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Runtime(format!("cannot read {path}: {e}")))?;
        return topology_from_json(&text);
    }
    if let Some(n) = s.strip_prefix("trivial:") {
        let n = parse_u64(n, "the point count")?;
        return standard_topology(n.min(u8::MAX as u64) as u8, StandardKind::Trivial)
            .map_err(|e| CliError::Runtime(e.to_string()));
    }
    if let Some(n) = s.strip_prefix("discrete:") {
        let n = parse_u64(n, "the point count")?;
        return standard_topology(n.min(u8::MAX as u64) as u8, StandardKind::Discrete)
            .map_err(|e| CliError::Runtime(e.to_string()));
    }
    if s.starts_with('{') {
        return topology_from_json(s);
    }
    Err(usage(format!(
        "bad topology {s:?} (expected inline JSON, @path, trivial:N or discrete:N)"
    )))
}

/// Decodes the documented JSON encoding into a validated topology.
pub fn topology_from_json(text: &str) -> Result<Topology, CliError> {
    let doc: TopologyDoc = serde_json::from_str(text)
        .map_err(|e| usage(format!("bad topology JSON: {e}")))?;
    doc.try_into_topology()
}

/// Reads a topology from a JSON file.
pub fn topology_from_file(path: &std::path::Path) -> Result<Topology, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
    topology_from_json(&text)
}

pub(crate) fn topology_doc_to_topology(doc: &TopologyDoc) -> Result<Topology, CliError> {
    let ground = match &doc.labels {
        Some(labels) => GroundSet::with_labels(doc.n, labels.clone()),
        None => GroundSet::new(doc.n),
    }
    .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut opens = Vec::with_capacity(doc.opens.len());
    for open in &doc.opens {
        for &i in open {
            if i >= MAX_POINTS {
                return Err(CliError::Runtime(format!(
                    "point index {i} is too large (at most {})",
                    MAX_POINTS - 1
                )));
            }
        }
        opens.push(PointSet::from_indices(open.iter().copied()));
    }
    make_topology_on(ground, &opens).map_err(|e| CliError::Runtime(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_literals() {
        assert_eq!(parse_ordinal("0").unwrap(), Ordinal::ZERO);
        assert_eq!(parse_ordinal("17").unwrap(), Ordinal::natural(17));
        assert_eq!(parse_ordinal("w").unwrap(), Ordinal::OMEGA);
        assert_eq!(parse_ordinal("w+3").unwrap(), Ordinal::new(1, 3));
        assert_eq!(parse_ordinal("w*2").unwrap(), Ordinal::new(2, 0));
        assert_eq!(parse_ordinal(" w*2+3 ").unwrap(), Ordinal::new(2, 3));
        assert!(parse_ordinal("").is_err());
        assert!(parse_ordinal("x").is_err());
        assert!(parse_ordinal("w-1").is_err());
    }

    #[test]
    fn ordinal_display_round_trips() {
        for ord in [
            Ordinal::ZERO,
            Ordinal::natural(9),
            Ordinal::OMEGA,
            Ordinal::new(1, 4),
            Ordinal::new(3, 0),
            Ordinal::new(2, 7),
        ] {
            assert_eq!(parse_ordinal(&ord.to_string()).unwrap(), ord);
        }
    }

    #[test]
    fn interval_literals() {
        let set = parse_interval_set("(3,w]").unwrap();
        assert_eq!(set.min_point(), Some(Ordinal::natural(4)));
        assert!(set.contains(Ordinal::OMEGA));

        let multi = parse_interval_set("[0,3] + (5,9)").unwrap();
        assert!(multi.contains(Ordinal::natural(6)));
        assert!(!multi.contains(Ordinal::natural(5)));

        let with_plus_inside = parse_interval_set("[w+1,w*2]").unwrap();
        assert!(with_plus_inside.contains(Ordinal::new(1, 1)));

        assert!(parse_interval_set("{}").unwrap().is_empty());
        assert_eq!(
            parse_interval_set("{w}").unwrap(),
            IntervalSet::singleton(Ordinal::OMEGA)
        );
        assert!(parse_interval_set("[1,2").is_err());
    }

    #[test]
    fn interval_set_display_round_trips() {
        for text in ["[0,w)", "(3,w]", "[0,3] + [5,9] + {w}", "{}"] {
            let set = parse_interval_set(text).unwrap();
            assert_eq!(parse_interval_set(&set.to_string()).unwrap(), set);
        }
    }

    #[test]
    fn space_literals() {
        let closed = parse_space("[0,w]").unwrap();
        assert!(closed.includes_top());
        let half = parse_space("[0,w)").unwrap();
        assert!(!half.includes_top());
        assert_eq!(parse_space(&closed.to_string()).unwrap(), closed);
        assert!(parse_space("(0,w]").is_err());
        assert!(parse_space("[1,w]").is_err());
    }

    #[test]
    fn cover_literals() {
        let cover = parse_cover("seg,(5,w]").unwrap();
        assert_eq!(cover.atoms().len(), 2);
        assert!(matches!(cover.atoms()[0], CoverAtom::Schematic(Shape::InitialSegments)));

        let cover = parse_cover("sing<w*2,(w,w*2]+(3,w]").unwrap();
        assert_eq!(cover.atoms().len(), 2);
        assert!(matches!(
            cover.atoms()[0],
            CoverAtom::Schematic(Shape::SingletonsBelow(b)) if b == Ordinal::new(2, 0)
        ));
        assert!(parse_cover("  ").is_err());
    }

    #[test]
    fn point_set_literals() {
        assert_eq!(parse_point_set("").unwrap(), PointSet::EMPTY);
        assert_eq!(
            parse_point_set("0, 2").unwrap(),
            PointSet::from_indices([0u8, 2])
        );
        assert!(parse_point_set("16").is_err());
        assert!(parse_point_set("a").is_err());
    }

    #[test]
    fn exception_literals() {
        assert!(parse_exceptions("").unwrap().is_empty());
        let pairs = parse_exceptions("0:3.5, 2:-1").unwrap();
        assert_eq!(pairs, vec![(Ordinal::ZERO, 3.5), (Ordinal::natural(2), -1.0)]);
        assert!(parse_exceptions("5").is_err());
    }

    #[test]
    fn topology_specs() {
        let t = parse_topology_spec("trivial:2").unwrap();
        assert!(t.is_trivial());
        let d = parse_topology_spec("discrete:3").unwrap();
        assert!(d.is_discrete());
        let json = r#"{"n":2,"opens":[[],[0],[0,1]]}"#;
        let s = parse_topology_spec(json).unwrap();
        assert_eq!(s.opens().len(), 3);
        assert!(parse_topology_spec("nope").is_err());
        assert!(matches!(
            parse_topology_spec(r#"{"n":2,"opens":[[],[0],[1]]}"#),
            Err(CliError::Runtime(_))
        ));
    }
}
