//! Dihedral angles between arrow classes.
//!
//! Two facets of the `W_Omega` chamber meet exactly when representatives of
//! their classes sit in a spherical rank-3 configuration `{J, K, L}` with
//! `J` a tile. Each such configuration is a certificate for the label of
//! the pair; classes with no certificate get label infinity.

use std::collections::BTreeMap;

use super::arrows::{check_vertex, Arrow, ArrowClass, ArrowIndex};
use crate::diagram::{CoxeterDiagram, Label, OddComponent};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// Which table row produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// `m(J,L)=4, m(K,L)=3, m(J,K)=2`: `[J,K]`, `[J,L]` at `pi/4`.
    SharedTileB3,
    /// `m(J,K)` even `>= 4`, `L` unjoined to both: `[J,K]` perpendicular to `[J,L]`.
    SharedTileEven,
    /// `J` unjoined to `K` and `L`, `m(K,L)=n`: `[J,K]`, `[J,L]` at `pi/n`.
    SharedTileFree,
    /// `m(J,K)=4, m(J,L)=3, m(K,L)=2`: `[J,K]` perpendicular to `[L,K]`.
    SharedTarget,
    /// `m(J,K)=2`, `{m(J,L), m(K,L)} = {3,5}`: `[J,K]` perpendicular to `[K,J]`.
    TwoStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Certificate {
    pub first: Arrow,
    pub second: Arrow,
    pub label: Label,
    pub rule: Rule,
    /// The third vertex of the configuration.
    pub witness: usize,
}

/// All certificates with tile `j`, in a fixed scan order.
fn certificates_at(d: &CoxeterDiagram, j: usize) -> Vec<Certificate> {
    let n = d.len();
    let two = Label::UNJOINED;
    let three = Label::Finite(3);
    let four = Label::Finite(4);
    let five = Label::Finite(5);
    let mut out = Vec::new();
    let mut push = |first: Arrow, second: Arrow, label: Label, rule: Rule, witness: usize| {
        out.push(Certificate {
            first,
            second,
            label,
            rule,
            witness,
        })
    };
    for k in (0..n).filter(|&k| k != j) {
        let jk = d.label(j, k);
        if !jk.is_even() {
            continue;
        }
        for l in (0..n).filter(|&l| l != j && l != k) {
            let jl = d.label(j, l);
            let kl = d.label(k, l);
            let jk_arrow = Arrow::new(j, k);
            if jk == two && jl == four && kl == three {
                push(jk_arrow, Arrow::new(j, l), four, Rule::SharedTileB3, l);
            }
            if jk.is_even() && jk != two && jl == two && kl == two {
                push(jk_arrow, Arrow::new(j, l), two, Rule::SharedTileEven, l);
            }
            if jk == two && jl == two {
                if let Label::Finite(_) = kl {
                    push(jk_arrow, Arrow::new(j, l), kl, Rule::SharedTileFree, l);
                }
            }
            if jk == four && jl == three && kl == two {
                push(jk_arrow, Arrow::new(l, k), two, Rule::SharedTarget, l);
            }
            if jk == two && ((jl == three && kl == five) || (jl == five && kl == three)) {
                push(jk_arrow, jk_arrow.reversed(), two, Rule::TwoStep, l);
            }
        }
    }
    out
}

/// Symmetric labels between arrow classes, indexed like the class list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLabels {
    n: usize,
    labels: Vec<Label>,
}

impl ClassLabels {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `Finite(1)` on the diagonal.
    pub fn get(&self, a: usize, b: usize) -> Label {
        self.labels[a * self.n + b]
    }
}

/// Scans every `(tile, K, L)` triple exhaustively and assigns each pair of
/// classes its certified label, defaulting to infinity.
///
/// Fails with [`Error::ConflictingCertificates`] when two certificates
/// disagree or a certificate relates a class to itself; either means the
/// classes were computed wrongly.
pub fn compute_edge_labels(
    d: &CoxeterDiagram,
    s: usize,
    classes: &[ArrowClass],
) -> Result<ClassLabels> {
    compute_edge_labels_with(d, s, classes, Execution::default())
}

pub fn compute_edge_labels_with(
    d: &CoxeterDiagram,
    s: usize,
    classes: &[ArrowClass],
    exec: Execution,
) -> Result<ClassLabels> {
    check_vertex(d, s)?;
    let comp = OddComponent::rooted_at(d, s);
    if !comp.is_tree() {
        return Err(Error::UnsupportedCycles {
            cycle_rank: comp.cycle_rank,
        });
    }
    let n = d.len();
    let index = ArrowIndex::new(
        n,
        classes
            .iter()
            .enumerate()
            .flat_map(|(c, class)| class.members.iter().map(move |&a| (a, c))),
    );
    let certificates = par::flat_map(exec, &comp.members, |&j| certificates_at(d, j));

    let name = |c: usize| classes[c].id.display(d).to_string();
    let class_of = |a: Arrow| {
        index
            .get(a)
            .unwrap_or_else(|| panic!("certificate arrow {} has no class", a.display(d)))
    };
    let mut assigned: BTreeMap<(usize, usize), Label> = BTreeMap::new();
    for cert in &certificates {
        let a = class_of(cert.first);
        let b = class_of(cert.second);
        if a == b {
            return Err(Error::ConflictingCertificates {
                a: name(a),
                b: name(b),
                first: Label::Finite(1),
                second: cert.label,
            });
        }
        let key = (a.min(b), a.max(b));
        match assigned.get(&key) {
            Some(&prev) if prev != cert.label => {
                return Err(Error::ConflictingCertificates {
                    a: name(key.0),
                    b: name(key.1),
                    first: prev,
                    second: cert.label,
                })
            }
            Some(_) => {}
            None => {
                assigned.insert(key, cert.label);
            }
        }
    }

    let m = classes.len();
    let mut labels = vec![Label::Infinity; m * m];
    for c in 0..m {
        labels[c * m + c] = Label::Finite(1);
    }
    for ((a, b), l) in assigned {
        labels[a * m + b] = l;
        labels[b * m + a] = l;
    }
    Ok(ClassLabels { n: m, labels })
}

/// Every certificate found for `s`'s component, for inspection.
pub fn certificates(d: &CoxeterDiagram, s: usize) -> Result<Vec<Certificate>> {
    check_vertex(d, s)?;
    let comp = OddComponent::rooted_at(d, s);
    Ok(comp
        .members
        .iter()
        .flat_map(|&j| certificates_at(d, j))
        .collect())
}
