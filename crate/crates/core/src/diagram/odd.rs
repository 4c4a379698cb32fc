use std::collections::VecDeque;

use super::CoxeterDiagram;

/// A connected component of the odd subdiagram, with a breadth-first
/// spanning tree rooted at `base` and one fundamental loop per non-tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddComponent {
    pub base: usize,
    /// Sorted in diagram order.
    pub members: Vec<usize>,
    /// Odd edges `(a, b)` with `a < b` inside the component, sorted.
    pub odd_edges: Vec<(usize, usize)>,
    /// `parent[v]` for members other than the base; `None` elsewhere.
    parent: Vec<Option<usize>>,
    in_component: Vec<bool>,
    /// Closed vertex paths starting and ending at `base`.
    pub loops: Vec<Vec<usize>>,
    pub cycle_rank: usize,
}

impl OddComponent {
    /// The component containing `base`, rooted there. Neighbors are visited
    /// in diagram order, so the tree and loops are deterministic.
    pub fn rooted_at(d: &CoxeterDiagram, base: usize) -> Self {
        let n = d.len();
        let mut parent = vec![None; n];
        let mut in_component = vec![false; n];
        let mut tree_edges = Vec::new();
        in_component[base] = true;
        let mut queue = VecDeque::from([base]);
        while let Some(u) = queue.pop_front() {
            for v in d.odd_neighbors(u) {
                if !in_component[v] {
                    in_component[v] = true;
                    parent[v] = Some(u);
                    tree_edges.push((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
        let members: Vec<usize> = (0..n).filter(|&v| in_component[v]).collect();
        let odd_edges: Vec<(usize, usize)> = members
            .iter()
            .flat_map(|&a| {
                members
                    .iter()
                    .filter(move |&&b| b > a && d.label(a, b).is_odd())
                    .map(move |&b| (a, b))
            })
            .collect();
        let mut comp = Self {
            base,
            members,
            odd_edges,
            parent,
            in_component,
            loops: Vec::new(),
            cycle_rank: 0,
        };
        tree_edges.sort_unstable();
        let loops: Vec<Vec<usize>> = comp
            .odd_edges
            .iter()
            .filter(|e| tree_edges.binary_search(e).is_err())
            .map(|&(a, b)| {
                // base ~> a, the edge a -> b, then b ~> base
                let mut path = comp.tree_path(a);
                let mut back = comp.tree_path(b);
                back.reverse();
                path.extend(back);
                path
            })
            .collect();
        comp.cycle_rank = comp.odd_edges.len() + 1 - comp.members.len();
        comp.loops = loops;
        comp
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_component.get(v).copied().unwrap_or(false)
    }

    pub fn is_tree(&self) -> bool {
        self.cycle_rank == 0
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Spanning-tree path `base, ..., t`. Panics if `t` is not a member.
    pub fn tree_path(&self, t: usize) -> Vec<usize> {
        assert!(self.contains(t), "vertex {t} is outside the component");
        let mut path = vec![t];
        let mut v = t;
        while let Some(p) = self.parent[v] {
            path.push(p);
            v = p;
        }
        path.reverse();
        path
    }
}

/// All odd components, each rooted at its least vertex.
#[derive(Debug, Clone)]
pub struct OddComponents {
    pub components: Vec<OddComponent>,
    component_of: Vec<usize>,
}

impl OddComponents {
    /// Index into `components` of the component containing `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn odd_components(d: &CoxeterDiagram) -> OddComponents {
    let n = d.len();
    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    for v in 0..n {
        if component_of[v] != usize::MAX {
            continue;
        }
        let comp = OddComponent::rooted_at(d, v);
        for &m in &comp.members {
            component_of[m] = components.len();
        }
        components.push(comp);
    }
    OddComponents {
        components,
        component_of,
    }
}
