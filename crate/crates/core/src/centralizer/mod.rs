//! The centralizer `C_W(s) = <s> x (W_Omega : Gamma_Omega)`.
//!
//! `Gamma_Omega` is free of rank equal to the cycle rank of `s`'s odd
//! component. When that component is a tree, `W_Omega` has one simple
//! generator per arrow class and its diagram is assembled from the
//! certificates in [`labels`].

mod arrows;
mod blowup;
pub mod labels;

pub use arrows::{enumerate_arrows, fuse_arrow_classes, Arrow, ArrowClass, ArrowName, FusionMode};
pub use blowup::{a3_subdiagrams, blowup_fast_path, HullShape, A3};
pub use labels::{compute_edge_labels, compute_edge_labels_with, ClassLabels};

use crate::diagram::{recognize_spherical, CoxeterDiagram, Label, OddComponent, SphericalType};
use crate::error::Result;
use crate::par::Execution;
use crate::words::{p_gamma, r_gamma_u, Word};

/// The reflection part `W_Omega` as a Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionDiagram {
    /// One vertex per arrow class, named `tile>target` after the class id.
    pub diagram: CoxeterDiagram,
    pub classes: Vec<ArrowClass>,
    /// The reflection word of each class's canonical arrow, in class order.
    pub class_words: Vec<Word>,
    pub spherical: SphericalType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReflectionPart {
    Diagram(ReflectionDiagram),
    /// The odd component has cycles; its universal cover is infinite and no
    /// diagram is computed.
    UnsupportedCycles {
        cycle_rank: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerResult {
    pub reflection: usize,
    pub component: OddComponent,
    pub gamma_rank: usize,
    /// `p_z` for each fundamental loop `z`.
    pub gamma_words: Vec<Word>,
    pub reflection_part: ReflectionPart,
}

impl CentralizerResult {
    pub fn domega(&self) -> Option<&ReflectionDiagram> {
        match &self.reflection_part {
            ReflectionPart::Diagram(r) => Some(r),
            ReflectionPart::UnsupportedCycles { .. } => None,
        }
    }
}

pub fn centralizer_diagram(d: &CoxeterDiagram, s: usize) -> Result<CentralizerResult> {
    centralizer_diagram_with(d, s, Execution::default())
}

pub fn centralizer_diagram_with(
    d: &CoxeterDiagram,
    s: usize,
    exec: Execution,
) -> Result<CentralizerResult> {
    arrows::check_vertex(d, s)?;
    let component = OddComponent::rooted_at(d, s);
    let gamma_words = component
        .loops
        .iter()
        .map(|z| p_gamma(d, z))
        .collect::<Result<Vec<_>>>()?;

    let reflection_part = if component.is_tree() {
        let arrows = arrows::arrows_of(d, &component);
        let classes = fuse_arrow_classes(d, s, &arrows, FusionMode::Full)?;
        let labels = compute_edge_labels_with(d, s, &classes, exec)?;
        let mut diagram = CoxeterDiagram::new();
        for c in &classes {
            diagram.add_vertex(&c.id.display(d).to_string())?;
        }
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                let l = labels.get(a, b);
                if l != Label::UNJOINED {
                    diagram.set_label(a, b, l);
                }
            }
        }
        let class_words = classes
            .iter()
            .map(|c| r_gamma_u(d, &component.tree_path(c.id.tile), c.id.target))
            .collect::<Result<Vec<_>>>()?;
        let spherical = recognize_spherical(&diagram);
        ReflectionPart::Diagram(ReflectionDiagram {
            diagram,
            classes,
            class_words,
            spherical,
        })
    } else {
        ReflectionPart::UnsupportedCycles {
            cycle_rank: component.cycle_rank,
        }
    };

    Ok(CentralizerResult {
        reflection: s,
        gamma_rank: component.cycle_rank,
        gamma_words,
        component,
        reflection_part,
    })
}
