//! Shortcut for trees of single edges: the generators of `W_Omega` are the
//! A3 subdiagrams, joined according to the shape of their convex hull.

use std::collections::VecDeque;

use crate::diagram::{CoxeterDiagram, Label};
use crate::error::{Error, Result};

/// An induced path `ends.0 - middle - ends.1`, ends in diagram order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct A3 {
    pub ends: (usize, usize),
    pub middle: usize,
}

impl A3 {
    fn vertices(self) -> [usize; 3] {
        [self.ends.0, self.middle, self.ends.1]
    }

    pub fn name(self, d: &CoxeterDiagram) -> String {
        format!(
            "{}-{}-{}",
            d.name(self.ends.0),
            d.name(self.middle),
            d.name(self.ends.1)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullShape {
    D,
    AffineD,
    Other,
}

/// The A3 subdiagrams, ordered by middle vertex then ends.
pub fn a3_subdiagrams(d: &CoxeterDiagram) -> Vec<A3> {
    let mut out = Vec::new();
    for m in 0..d.len() {
        let nb: Vec<usize> = d.neighbors(m).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !d.label(x, y).is_joined() {
                    out.push(A3 {
                        ends: (x, y),
                        middle: m,
                    });
                }
            }
        }
    }
    out
}

/// Computes the diagram of `W_Omega` for a tree of single edges directly.
///
/// Hull of type D gives label 2, type affine D gives infinity, anything
/// else inherits the label between the two middle vertices.
pub fn blowup_fast_path(d: &CoxeterDiagram) -> Result<CoxeterDiagram> {
    if !d.is_single_edge_tree() {
        return Err(Error::NotSingleEdgeTree);
    }
    let triples = a3_subdiagrams(d);
    let mut out = CoxeterDiagram::new();
    for t in &triples {
        out.add_vertex(&t.name(d))?;
    }
    let tree = RootedTree::new(d);
    for (i, &x) in triples.iter().enumerate() {
        for (j, &y) in triples.iter().enumerate().skip(i + 1) {
            let label = match hull_shape(d, &tree, x, y) {
                HullShape::D => Label::UNJOINED,
                HullShape::AffineD => Label::Infinity,
                HullShape::Other => {
                    debug_assert_ne!(x.middle, y.middle);
                    d.label(x.middle, y.middle)
                }
            };
            if label != Label::UNJOINED {
                out.set_label(i, j, label);
            }
        }
    }
    Ok(out)
}

/// Parent pointers and depths from vertex 0, for path queries.
struct RootedTree {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl RootedTree {
    fn new(d: &CoxeterDiagram) -> Self {
        let n = d.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for v in d.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Self { parent, depth }
    }

    /// Marks every vertex on the tree path between `a` and `b`.
    fn mark_path(&self, mut a: usize, mut b: usize, marked: &mut [bool]) {
        marked[a] = true;
        marked[b] = true;
        while a != b {
            if self.depth[a] >= self.depth[b] {
                a = self.parent[a];
                marked[a] = true;
            } else {
                b = self.parent[b];
                marked[b] = true;
            }
        }
    }
}

fn hull_shape(d: &CoxeterDiagram, tree: &RootedTree, x: A3, y: A3) -> HullShape {
    let mut hull = vec![false; d.len()];
    let pts: Vec<usize> = x.vertices().into_iter().chain(y.vertices()).collect();
    for &p in &pts[1..] {
        tree.mark_path(pts[0], p, &mut hull);
    }
    classify_hull(d, &hull)
}

/// Classifies the subtree on `hull` as D_n (n >= 4), affine D_n (n >= 4) or
/// neither.
fn classify_hull(d: &CoxeterDiagram, hull: &[bool]) -> HullShape {
    let members: Vec<usize> = (0..d.len()).filter(|&v| hull[v]).collect();
    let degree = |v: usize| d.neighbors(v).filter(|&w| hull[w]).count();
    let branches: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| degree(v) >= 3)
        .collect();
    // leg = maximal path hanging off a branch vertex; length 1 = a leaf
    let short_legs = |v: usize| {
        d.neighbors(v)
            .filter(|&w| hull[w] && degree(w) == 1)
            .count()
    };
    match branches.as_slice() {
        [c] if degree(*c) == 3 && short_legs(*c) >= 2 => HullShape::D,
        [c] if degree(*c) == 4 && short_legs(*c) == 4 => HullShape::AffineD,
        [a, b]
            if degree(*a) == 3 && degree(*b) == 3 && short_legs(*a) == 2 && short_legs(*b) == 2 =>
        {
            HullShape::AffineD
        }
        _ => HullShape::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{
        builtin_diagram, diagrams_isomorphic, parse_diagram, recognize_spherical,
    };

    #[test]
    fn e8_blows_up_to_e7() {
        let out = blowup_fast_path(&builtin_diagram("E:8").unwrap()).unwrap();
        let e7 = builtin_diagram("E:7").unwrap();
        assert!(diagrams_isomorphic(&out, &e7).is_some());
    }

    #[test]
    fn d4_gives_three_orthogonal_vertices() {
        let out = blowup_fast_path(&builtin_diagram("D:4").unwrap()).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out.edges().count(), 0);
    }

    #[test]
    fn a_n_gives_a_n_minus_2() {
        for n in 3..=9 {
            let out = blowup_fast_path(&builtin_diagram(&format!("A:{n}")).unwrap()).unwrap();
            assert_eq!(recognize_spherical(&out).to_string(), format!("A{}", n - 2));
        }
    }

    #[test]
    fn affine_d4_star() {
        // hull of two A3s through the center using all four leaves is the
        // affine D4 star
        let out = blowup_fast_path(&builtin_diagram("affD:4").unwrap()).unwrap();
        assert_eq!(out.len(), 6);
        let inf = out.edges().filter(|e| e.2 == Label::Infinity).count();
        assert_eq!(inf, 3);
        assert_eq!(out.edges().count(), 3);
    }

    #[test]
    fn rejects_other_diagrams() {
        for text in [
            "edge a b 4",
            "edge a b 3\nedge b c 3\nedge c a 3",
            "edge a b 3\nvertex c",
        ] {
            let d = parse_diagram(text).unwrap();
            assert_eq!(
                blowup_fast_path(&d),
                Err(Error::NotSingleEdgeTree),
                "{text}"
            );
        }
    }

    #[test]
    fn y555_figure() {
        // hexagon whose alternate vertices carry tails of three more vertices
        let mut text = String::new();
        for i in 0..6 {
            text += &format!("edge h{} h{} 3\n", i, (i + 1) % 6);
        }
        for (arm, start) in [("p", 0), ("q", 2), ("r", 4)] {
            text +=
                &format!("edge h{start} {arm}1 3\nedge {arm}1 {arm}2 3\nedge {arm}2 {arm}3 3\n");
        }
        let expected = parse_diagram(&text).unwrap();
        let out = blowup_fast_path(&builtin_diagram("Y555").unwrap()).unwrap();
        assert_eq!(out.len(), 15);
        assert!(diagrams_isomorphic(&out, &expected).is_some());
    }
}
