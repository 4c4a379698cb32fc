use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::diagram::{CoxeterDiagram, Label, OddComponent};
use crate::error::{Error, Result};

/// A facet of a tile lying in the boundary of the `W_Omega` chamber, named
/// by the tile's type and the vertex it points at. The tile type lies in
/// `s`'s odd component and the join to the target is finite and even.
///
/// Ordering is lexicographic by `(tile, target)` in diagram order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tile: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(tile: usize, target: usize) -> Self {
        Self { tile, target }
    }

    pub fn reversed(self) -> Self {
        Self::new(self.target, self.tile)
    }

    /// `tile>target`, the form used for class names.
    pub fn display<'a>(&self, d: &'a CoxeterDiagram) -> ArrowName<'a> {
        ArrowName {
            tile: d.name(self.tile),
            target: d.name(self.target),
        }
    }
}

pub struct ArrowName<'a> {
    tile: &'a str,
    target: &'a str,
}

impl fmt::Display for ArrowName<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.tile, self.target)
    }
}

/// One facet of the `W_Omega` chamber: its arrows, identified by the least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowClass {
    pub id: Arrow,
    /// Sorted; `members[0] == id`.
    pub members: Vec<Arrow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FusionMode {
    /// Both moves: tail sliding along odd edges and reversal across an A3.
    #[default]
    Full,
    /// Tail sliding alone; yields the tail classes.
    TailOnly,
}

pub(crate) fn check_vertex(d: &CoxeterDiagram, s: usize) -> Result<()> {
    if s < d.len() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{s}")))
    }
}

/// All arrows `[J, K]` with `J` in `s`'s odd component, `K != J` and
/// `m(J, K)` finite and even (absent joins included), sorted.
pub fn enumerate_arrows(d: &CoxeterDiagram, s: usize) -> Result<Vec<Arrow>> {
    check_vertex(d, s)?;
    let comp = OddComponent::rooted_at(d, s);
    Ok(arrows_of(d, &comp))
}

pub(crate) fn arrows_of(d: &CoxeterDiagram, comp: &OddComponent) -> Vec<Arrow> {
    comp.members
        .iter()
        .flat_map(|&tile| {
            (0..d.len())
                .filter(move |&target| target != tile && d.label(tile, target).is_even())
                .map(move |target| Arrow::new(tile, target))
        })
        .collect()
}

/// Dense `(tile, target) -> index` lookup.
pub(crate) struct ArrowIndex {
    n: usize,
    slots: Vec<Option<usize>>,
}

impl ArrowIndex {
    pub(crate) fn new(n: usize, arrows: impl IntoIterator<Item = (Arrow, usize)>) -> Self {
        let mut slots = vec![None; n * n];
        for (a, i) in arrows {
            slots[a.tile * n + a.target] = Some(i);
        }
        Self { n, slots }
    }

    #[inline]
    pub(crate) fn get(&self, a: Arrow) -> Option<usize> {
        self.slots[a.tile * self.n + a.target]
    }
}

/// Closes `arrows` under the fusion moves and returns the classes sorted by
/// their least member. Requires `s`'s odd component to be a tree, so that
/// tiles can be identified with the component's vertices.
///
/// * tail slide: `[J,K] ~ [L,K]` when `m(J,L)` is odd and `K` is unjoined
///   to both.
/// * reversal: `[J,K] ~ [K,J]` when `m(J,K) = 2` and some `L` has
///   `m(J,L) = m(K,L) = 3`.
pub fn fuse_arrow_classes(
    d: &CoxeterDiagram,
    s: usize,
    arrows: &[Arrow],
    mode: FusionMode,
) -> Result<Vec<ArrowClass>> {
    check_vertex(d, s)?;
    let comp = OddComponent::rooted_at(d, s);
    if !comp.is_tree() {
        return Err(Error::UnsupportedCycles {
            cycle_rank: comp.cycle_rank,
        });
    }
    let n = d.len();
    let index = ArrowIndex::new(n, arrows.iter().copied().zip(0..));
    let mut uf = UnionFind::<usize>::new(arrows.len());
    let two = Label::UNJOINED;
    for (i, &a) in arrows.iter().enumerate() {
        let (j, k) = (a.tile, a.target);
        if d.label(j, k) != two {
            continue;
        }
        for l in d.odd_neighbors(j) {
            if l != k && d.label(l, k) == two {
                if let Some(other) = index.get(Arrow::new(l, k)) {
                    uf.union(i, other);
                }
            }
        }
        if mode == FusionMode::Full {
            let three = Label::Finite(3);
            let reversible = (0..n).any(|l| d.label(j, l) == three && d.label(k, l) == three);
            if reversible {
                assert!(comp.contains(k), "reversal target must be a tile type");
                if let Some(other) = index.get(a.reversed()) {
                    uf.union(i, other);
                }
            }
        }
    }

    let labels = uf.into_labeling();
    let mut groups: std::collections::BTreeMap<usize, Vec<Arrow>> = Default::default();
    for (i, &a) in arrows.iter().enumerate() {
        groups.entry(labels[i]).or_default().push(a);
    }
    let mut classes: Vec<ArrowClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort_unstable();
            ArrowClass {
                id: members[0],
                members,
            }
        })
        .collect();
    classes.sort_unstable_by_key(|c| c.id);
    Ok(classes)
}
