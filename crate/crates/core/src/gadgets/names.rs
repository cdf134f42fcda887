//! Structured vertex names of the gadget graphs.
//!
//! Labels: `v(3)`, `a(3,5)`, `b(3,5)`, `c(3,5)`, `d(3,5)` for original and
//! edge-gadget vertices, `p`, `p'`, `q`, `x1` .. `y4'` inside a vertex
//! gadget, `B(3,5).x2'` for a vertex of the copy replacing `b(3,5)`, and `z`
//! for the apex of a cubic completion.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Which copy of gadget A inside gadget B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twin {
    Base,
    Mirror,
}

/// A vertex of gadget A or B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    P(Twin),
    X(Twin, u8),
    Y(Twin, u8),
    Q,
}

impl Part {
    /// The nine vertices of one copy of A.
    pub fn a_vertices(twin: Twin) -> Vec<Part> {
        let mut out = vec![Part::P(twin)];
        for i in 1..=4 {
            out.push(Part::X(twin, i));
            out.push(Part::Y(twin, i));
        }
        out
    }

    /// The nineteen vertices of B.
    pub fn b_vertices() -> Vec<Part> {
        let mut out = Part::a_vertices(Twin::Base);
        out.extend(Part::a_vertices(Twin::Mirror));
        out.push(Part::Q);
        out
    }

    /// Swaps the two rails of A, fixing `p` and `q`.
    pub fn swapped(self) -> Part {
        match self {
            Part::X(t, i) => Part::Y(t, i),
            Part::Y(t, i) => Part::X(t, i),
            other => other,
        }
    }

    fn twin(self) -> Option<Twin> {
        match self {
            Part::P(t) | Part::X(t, _) | Part::Y(t, _) => Some(t),
            Part::Q => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeName {
    Orig(usize),
    A(usize, usize),
    B(usize, usize),
    C(usize, usize),
    D(usize, usize),
    /// Vertex of the copy of B that replaces `b(u,v)`.
    InB(usize, usize, Part),
    /// Vertex of a standalone A or B.
    Part(Part),
    Apex,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::P(_) => write!(f, "p")?,
            Part::X(_, i) => write!(f, "x{i}")?,
            Part::Y(_, i) => write!(f, "y{i}")?,
            Part::Q => write!(f, "q")?,
        }
        if self.twin() == Some(Twin::Mirror) {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl fmt::Display for NodeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeName::Orig(u) => write!(f, "v({u})"),
            NodeName::A(u, v) => write!(f, "a({u},{v})"),
            NodeName::B(u, v) => write!(f, "b({u},{v})"),
            NodeName::C(u, v) => write!(f, "c({u},{v})"),
            NodeName::D(u, v) => write!(f, "d({u},{v})"),
            NodeName::InB(u, v, part) => write!(f, "B({u},{v}).{part}"),
            NodeName::Part(part) => write!(f, "{part}"),
            NodeName::Apex => write!(f, "z"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex name {text:?}")]
pub struct NameError {
    pub text: String,
}

impl FromStr for Part {
    type Err = NameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NameError { text: s.to_string() };
        let (body, twin) = match s.strip_suffix('\'') {
            Some(body) => (body, Twin::Mirror),
            None => (s, Twin::Base),
        };
        let part = match body {
            "p" => Part::P(twin),
            "q" if twin == Twin::Base => Part::Q,
            _ => {
                let mut chars = body.chars();
                let rail = chars.next().ok_or_else(err)?;
                let rest = chars.as_str();
                if rest.len() != 1 {
                    return Err(err());
                }
                let i: u8 = rest.parse().map_err(|_| err())?;
                if !(1..=4).contains(&i) {
                    return Err(err());
                }
                match rail {
                    'x' => Part::X(twin, i),
                    'y' => Part::Y(twin, i),
                    _ => return Err(err()),
                }
            }
        };
        Ok(part)
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || s.len() > 1 && s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (u, v) = s.split_once(',')?;
    Some((parse_index(u)?, parse_index(v)?))
}

impl FromStr for NodeName {
    type Err = NameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NameError { text: s.to_string() };
        if s == "z" {
            return Ok(NodeName::Apex);
        }
        if let Some(rest) = s.strip_prefix("B(") {
            let (pair, part) = rest.split_once(").").ok_or_else(err)?;
            let (u, v) = parse_pair(pair).ok_or_else(err)?;
            return Ok(NodeName::InB(u, v, part.parse().map_err(|_| err())?));
        }
        let Some(open) = s.find('(') else {
            return s.parse().map(NodeName::Part).map_err(|_| err());
        };
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(err)?;
        let name = match &s[..open] {
            "v" => NodeName::Orig(parse_index(inner).ok_or_else(err)?),
            tag => {
                let (u, v) = parse_pair(inner).ok_or_else(err)?;
                match tag {
                    "a" => NodeName::A(u, v),
                    "b" => NodeName::B(u, v),
                    "c" => NodeName::C(u, v),
                    "d" => NodeName::D(u, v),
                    _ => return Err(err()),
                }
            }
        };
        Ok(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let names = [
            NodeName::Orig(3),
            NodeName::A(3, 5),
            NodeName::B(0, 12),
            NodeName::C(1, 2),
            NodeName::D(2, 1),
            NodeName::InB(3, 5, Part::X(Twin::Mirror, 2)),
            NodeName::InB(0, 1, Part::Q),
            NodeName::Part(Part::P(Twin::Mirror)),
            NodeName::Part(Part::Y(Twin::Base, 4)),
            NodeName::Apex,
        ];
        for name in names {
            let text = name.to_string();
            assert_eq!(text.parse::<NodeName>(), Ok(name), "{text}");
        }
        assert_eq!(NodeName::InB(3, 5, Part::X(Twin::Mirror, 2)).to_string(), "B(3,5).x2'");
    }

    #[test]
    fn rejects_junk() {
        for bad in ["", "v()", "v(01)", "a(1)", "e(1,2)", "x5", "x0", "q'", "B(1,2)", "B(1,2).w", "a(1,2", "y12"] {
            assert!(bad.parse::<NodeName>().is_err(), "{bad}");
        }
    }

    #[test]
    fn gadget_vertex_sets() {
        assert_eq!(Part::a_vertices(Twin::Base).len(), 9);
        assert_eq!(Part::b_vertices().len(), 19);
        assert_eq!(Part::X(Twin::Base, 2).swapped(), Part::Y(Twin::Base, 2));
        assert_eq!(Part::Q.swapped(), Part::Q);
    }
}
