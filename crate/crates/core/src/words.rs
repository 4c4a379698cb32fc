//! Explicit generators for the centralizer.
//!
//! For an odd edge-path `gamma = (t0, ..., tn)` with `m(t(i-1), ti) = 2 l_i + 1`,
//! `p_gamma = (t1 t0)^l1 (t2 t1)^l2 ... (tn t(n-1))^ln` carries the tile of
//! type `t0` to the tile of type `tn`; for `m(tn, u) = 2 lambda`,
//! `r_{gamma,u} = p_gamma . u (tn u)^(lambda-1) . p_gamma^-1` is the
//! reflection across the arrow `[tn, u]`. Words are emitted unreduced.

use std::collections::BTreeMap;
use std::fmt;

use crate::centralizer::{enumerate_arrows, fuse_arrow_classes, Arrow, FusionMode};
use crate::diagram::{CoxeterDiagram, Label, OddComponent};
use crate::error::{Error, Result};

/// A product of simple reflections `w1 w2 ... wk`; the rightmost factor acts
/// first on vectors. Letters are vertex indices of the ambient diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse word: letters reversed (each letter is an involution).
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parses space-separated vertex names.
    pub fn parse(d: &CoxeterDiagram, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|name| {
                d.index_of(name)
                    .map_err(|_| Error::UnknownLetter(name.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Space-separated vertex names, left to right in product order.
    pub fn display<'a>(&'a self, d: &'a CoxeterDiagram) -> WordDisplay<'a> {
        WordDisplay { word: self, d }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    d: &'a CoxeterDiagram,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.d.name(v))?;
        }
        Ok(())
    }
}

/// `p_gamma` for an odd edge-path; the empty word for a length-0 path.
pub fn p_gamma(d: &CoxeterDiagram, gamma: &[usize]) -> Result<Word> {
    let mut letters = Vec::new();
    for pair in gamma.windows(2) {
        let (prev, next) = (pair[0], pair[1]);
        let label = d.label(prev, next);
        let m = match label {
            Label::Finite(m) if label.is_odd() => m,
            _ => {
                return Err(Error::NotOddPath {
                    a: d.name(prev).to_string(),
                    b: d.name(next).to_string(),
                    label,
                })
            }
        };
        for _ in 0..(m - 1) / 2 {
            letters.push(next);
            letters.push(prev);
        }
    }
    Ok(Word(letters))
}

/// `r_{gamma,u}`: `p_gamma`, then `u (tn u)^(lambda-1)`, then `p_gamma`
/// reversed, where `m(tn, u) = 2 lambda`.
pub fn r_gamma_u(d: &CoxeterDiagram, gamma: &[usize], u: usize) -> Result<Word> {
    let &end = gamma.last().ok_or(Error::EmptyPath)?;
    let p = p_gamma(d, gamma)?;
    let label = d.label(end, u);
    let lambda = match label {
        Label::Finite(m) if u != end && label.is_even() => m / 2,
        _ => {
            return Err(Error::NotEvenJoin {
                a: d.name(end).to_string(),
                b: d.name(u).to_string(),
                label,
            })
        }
    };
    let mut letters = p.0.clone();
    letters.push(u);
    for _ in 1..lambda {
        letters.push(end);
        letters.push(u);
    }
    letters.extend(p.0.iter().rev());
    Ok(Word(letters))
}

/// The generating set `{s} u {p_z} u {r_(delta_t, u)}` for `C_W(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub s: usize,
    /// One `p_z` per fundamental loop of the spanning tree.
    pub gamma_words: Vec<Word>,
    /// `r_(delta_t, u)` for every arrow `[t, u]`, with `delta_t` the tree
    /// path from `s` to `t`.
    pub r_words: BTreeMap<Arrow, Word>,
    /// Arrow to arrow-class id; only for tree components.
    pub class_map: Option<BTreeMap<Arrow, Arrow>>,
}

impl GeneratorSet {
    /// Every emitted word, `s` first.
    pub fn all_words(&self) -> Vec<Word> {
        let mut out = vec![Word(vec![self.s])];
        out.extend(self.gamma_words.iter().cloned());
        out.extend(self.r_words.values().cloned());
        out
    }
}

pub fn generator_set(d: &CoxeterDiagram, s: usize) -> Result<GeneratorSet> {
    let arrows = enumerate_arrows(d, s)?;
    let comp = OddComponent::rooted_at(d, s);
    let gamma_words = comp
        .loops
        .iter()
        .map(|z| p_gamma(d, z))
        .collect::<Result<Vec<_>>>()?;
    let r_words = arrows
        .iter()
        .map(|&a| Ok((a, r_gamma_u(d, &comp.tree_path(a.tile), a.target)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let class_map = if comp.is_tree() {
        let classes = fuse_arrow_classes(d, s, &arrows, FusionMode::Full)?;
        Some(
            classes
                .iter()
                .flat_map(|c| c.members.iter().map(move |&a| (a, c.id)))
                .collect(),
        )
    } else {
        None
    };
    Ok(GeneratorSet {
        s,
        gamma_words,
        r_words,
        class_map,
    })
}
