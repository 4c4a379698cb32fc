//! Coxeter diagrams and the analyses the centralizer computation consumes.
//!
//! A diagram is stored as a dense symmetric label matrix over an ordered
//! vertex list. The vertex order is the "diagram order" used everywhere a
//! deterministic choice is needed (spanning trees, class representatives).

mod builtin;
mod iso;
mod label;
mod odd;
mod spherical;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use builtin::{builtin_diagram, builtin_names};
pub use iso::diagrams_isomorphic;
pub use label::Label;
pub use odd::{odd_components, OddComponent, OddComponents};
pub use spherical::{recognize_spherical, IrreducibleType, SphericalType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    index: HashMap<String, usize>,
    // row-major n x n, diagonal holds Finite(1)
    labels: Vec<Label>,
}

impl Default for CoxeterDiagram {
    fn default() -> Self {
        Self::new()
    }
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

impl CoxeterDiagram {
    /// The empty diagram (trivial group).
    pub fn new() -> Self {
        Self {
            names: Vec::new(),
            index: HashMap::new(),
            labels: Vec::new(),
        }
    }

    /// Builds a diagram from a vertex list and `(u, v, label)` triples.
    /// Vertices named only in edges are appended in order of appearance.
    pub fn from_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, Label)]) -> Result<Self> {
        let mut d = Self::new();
        for v in vertices {
            d.add_vertex(v.as_ref())?;
        }
        for (a, b, label) in edges {
            let a = d.add_vertex(a.as_ref())?;
            let b = d.add_vertex(b.as_ref())?;
            if a == b {
                return Err(Error::SelfEdge {
                    line: 0,
                    vertex: d.names[a].clone(),
                });
            }
            d.set_label(a, b, *label);
        }
        Ok(d)
    }

    /// Adds a vertex (no-op if present) and returns its index.
    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        check_name(name)?;
        if let Some(&i) = self.index.get(name) {
            return Ok(i);
        }
        let old = self.names.len();
        let n = old + 1;
        let mut labels = vec![Label::UNJOINED; n * n];
        for i in 0..old {
            for j in 0..old {
                labels[i * n + j] = self.labels[i * old + j];
            }
        }
        labels[old * n + old] = Label::Finite(1);
        self.labels = labels;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), old);
        Ok(old)
    }

    /// Sets `m(a, b) = m(b, a)`. Panics on `a == b` or a label below 2.
    pub fn set_label(&mut self, a: usize, b: usize, label: Label) {
        assert_ne!(a, b, "diagonal labels are fixed");
        assert!(
            !matches!(label, Label::Finite(m) if m < 2),
            "labels must be >= 2"
        );
        let n = self.len();
        self.labels[a * n + b] = label;
        self.labels[b * n + a] = label;
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Total and symmetric; `label(v, v)` is the sentinel `Finite(1)`.
    #[inline]
    pub fn label(&self, a: usize, b: usize) -> Label {
        self.labels[a * self.len() + b]
    }

    /// Unordered joined pairs `(a, b)` with `a < b`, in diagram order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| {
            (a + 1..n).filter_map(move |b| {
                let l = self.label(a, b);
                l.is_joined().then_some((a, b, l))
            })
        })
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&w| w != v && self.label(v, w).is_joined())
    }

    pub fn odd_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&w| self.label(v, w).is_odd())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Connected components of the diagram (joined = label != 2), each
    /// sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subdiagram induced on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new();
        for &v in vertices {
            d.add_vertex(&self.names[v])
                .expect("names already validated");
        }
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                let l = self.label(a, b);
                if l != Label::UNJOINED {
                    d.set_label(i, j, l);
                }
            }
        }
        d
    }

    /// Whether every joined pair carries label 3 and the diagram is a tree.
    pub fn is_single_edge_tree(&self) -> bool {
        let mut count = 0;
        for (_, _, l) in self.edges() {
            if l != Label::Finite(3) {
                return false;
            }
            count += 1;
        }
        !self.is_empty() && count + 1 == self.len() && self.components().len() == 1
    }

    /// Text export in the line-based diagram format. Every vertex gets a
    /// `vertex` line so order and isolated vertices survive a round trip.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            let _ = writeln!(out, "vertex {name}");
        }
        for (a, b, l) in self.edges() {
            let _ = writeln!(out, "edge {} {} {}", self.names[a], self.names[b], l);
        }
        out
    }

    /// Graphviz export. Label 3 is left implicit; infinity is dashed.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut out = format!("graph {} {{\n", dot_id(graph_name));
        for name in &self.names {
            let _ = writeln!(out, "  {};", dot_id(name));
        }
        for (a, b, l) in self.edges() {
            let _ = write!(
                out,
                "  {} -- {}",
                dot_id(&self.names[a]),
                dot_id(&self.names[b])
            );
            match l {
                Label::Finite(3) => out.push_str(";\n"),
                Label::Infinity => out.push_str(" [label=\"inf\", style=dashed];\n"),
                Label::Finite(m) => {
                    let _ = writeln!(out, " [label=\"{m}\"];");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(a, b, label)| EdgeJson {
                    u: self.names[a].clone(),
                    v: self.names[b].clone(),
                    label,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        let edges: Vec<(&str, &str, Label)> = json
            .edges
            .iter()
            .map(|e| (e.u.as_str(), e.v.as_str(), e.label))
            .collect();
        let vertices: Vec<&str> = json.vertices.iter().map(String::as_str).collect();
        Self::from_edges(&vertices, &edges)
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Machine-readable form of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: String,
    pub v: String,
    pub label: Label,
}

/// Parses the line-based diagram format:
///
/// ```text
/// # comment
/// vertex NAME
/// edge NAME1 NAME2 LABEL     # LABEL is an integer >= 3 or `inf`
/// ```
pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram> {
    let mut d = CoxeterDiagram::new();
    let mut set: HashMap<(usize, usize), Label> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["vertex", name] => {
                d.add_vertex(name)?;
            }
            ["edge", a, b, label] => {
                if a == b {
                    return Err(Error::SelfEdge {
                        line,
                        vertex: a.to_string(),
                    });
                }
                let label = match Label::from_str(label) {
                    Ok(l @ Label::Infinity) => l,
                    Ok(l @ Label::Finite(m)) if m >= 3 => l,
                    _ => {
                        return Err(Error::BadLabel {
                            line,
                            token: label.to_string(),
                        })
                    }
                };
                let ia = d.add_vertex(a)?;
                let ib = d.add_vertex(b)?;
                let key = (ia.min(ib), ia.max(ib));
                match set.get(&key) {
                    Some(&prev) if prev != label => {
                        return Err(Error::DuplicateEdge {
                            line,
                            a: a.to_string(),
                            b: b.to_string(),
                        })
                    }
                    _ => {
                        set.insert(key, label);
                        d.set_label(ia, ib, label);
                    }
                }
            }
            [directive, ..] => {
                return Err(Error::Syntax {
                    line,
                    message: format!("cannot parse {directive:?} line: {}", raw.trim()),
                })
            }
        }
    }
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    Ok(d)
}

impl FromStr for CoxeterDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_edge() {
        let d = parse_diagram("edge a b 3").unwrap();
        assert_eq!(d.names(), ["a", "b"]);
        assert_eq!(d.label(0, 1), Label::Finite(3));
        assert_eq!(d.label(1, 0), Label::Finite(3));
        assert_eq!(d.label(0, 0), Label::Finite(1));
    }

    #[test]
    fn parse_infinity() {
        let d = parse_diagram("edge a b inf").unwrap();
        assert_eq!(d.label(0, 1), Label::Infinity);
    }

    #[test]
    fn unmentioned_pairs_are_unjoined() {
        let d = parse_diagram("# a path\nvertex z\nedge a b 3\nedge b c 4 # trailing\n").unwrap();
        assert_eq!(d.names(), ["z", "a", "b", "c"]);
        assert_eq!(d.label(0, 1), Label::UNJOINED);
        assert_eq!(d.label(1, 3), Label::UNJOINED);
        assert_eq!(d.label(2, 3), Label::Finite(4));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_diagram("edge a a 3"),
            Err(Error::SelfEdge { line: 1, .. })
        ));
        assert!(matches!(
            parse_diagram("edge a b 3\nedge b a 4"),
            Err(Error::DuplicateEdge { line: 2, .. })
        ));
        // repeating an identical edge is harmless
        assert!(parse_diagram("edge a b 3\nedge b a 3").is_ok());
        for bad in ["2", "1", "x", "3.0", "-4"] {
            assert!(
                matches!(
                    parse_diagram(&format!("edge a b {bad}")),
                    Err(Error::BadLabel { .. })
                ),
                "{bad}"
            );
        }
        assert_eq!(parse_diagram("# nothing\n\n"), Err(Error::EmptyDiagram));
        assert!(matches!(parse_diagram("node a"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_diagram("edge a b"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn text_round_trip_keeps_order() {
        let d = parse_diagram("vertex q\nedge a b 5\nedge b c inf\n").unwrap();
        let back = parse_diagram(&d.to_text()).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn dot_export() {
        let d = parse_diagram("edge a b 3\nedge b c 4\nedge c d inf").unwrap();
        let dot = d.to_dot("g");
        assert!(dot.starts_with("graph \"g\" {"));
        assert!(dot.contains("\"a\" -- \"b\";"));
        assert!(dot.contains("\"b\" -- \"c\" [label=\"4\"];"));
        assert!(dot.contains("\"c\" -- \"d\" [label=\"inf\", style=dashed];"));
    }

    #[test]
    fn json_round_trip() {
        let d = parse_diagram("edge a b 3\nedge b c inf\nvertex e").unwrap();
        let text = serde_json::to_string(&d.to_json()).unwrap();
        assert!(text.contains(r#""label":"inf""#));
        let back: DiagramJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CoxeterDiagram::from_json(&back).unwrap(), d);
    }

    #[test]
    fn induced_subdiagram() {
        let d = parse_diagram("edge a b 3\nedge b c 4\nedge c d 3").unwrap();
        let sub = d.induced(&[3, 1, 2]);
        assert_eq!(sub.names(), ["d", "b", "c"]);
        assert_eq!(sub.label(1, 2), Label::Finite(4));
        assert_eq!(sub.label(0, 2), Label::Finite(3));
        assert_eq!(sub.label(0, 1), Label::UNJOINED);
    }
}
