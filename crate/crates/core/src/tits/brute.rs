//! Brute-force oracle for finite Coxeter groups.
//!
//! The root system is enumerated by closing the simple roots under the
//! simple reflections (vectors deduplicated on a 1e-9 grid). Group elements
//! are then permutations of the roots, enumerated breadth-first over the
//! Cayley graph.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use super::TitsRepresentation;
use crate::diagram::{recognize_spherical, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::words::Word;

pub const MAX_ROOTS: usize = 20_000;
pub const DEFAULT_MAX_ORDER: usize = 200_000;
const GRID: f64 = 1e-9;

/// Images of the roots: `perm[k]` is the index of `g(root_k)`.
pub type Perm = Box<[u16]>;

/// `(parent, generator)`: an element is `elements[parent] * sigma_generator`.
type Parent = (u32, u16);

#[derive(Debug, Clone)]
pub struct BruteForce {
    s: usize,
    roots: Vec<Vec<f64>>,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    parents: Vec<Parent>,
    centralizer: HashSet<Perm>,
}

fn key(v: &[f64]) -> Vec<i64> {
    v.iter().map(|x| (x / GRID).round() as i64).collect()
}

/// `a * b` as maps: first `b`, then `a`.
fn compose(a: &[u16], b: &[u16]) -> Perm {
    b.iter().map(|&k| a[k as usize]).collect()
}

fn reflect(rep: &TitsRepresentation, i: usize, v: &[f64]) -> Vec<f64> {
    let b: f64 = (0..v.len()).map(|j| rep.gram()[(i, j)] * v[j]).sum();
    let mut out = v.to_vec();
    out[i] -= 2.0 * b;
    out
}

fn enumerate_roots(rep: &TitsRepresentation) -> Result<(Vec<Vec<f64>>, Vec<Perm>)> {
    let n = rep.rank();
    let mut roots: Vec<Vec<f64>> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        index.insert(key(&e), roots.len());
        queue.push_back(roots.len());
        roots.push(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let image = reflect(rep, i, &roots[r]);
            if let Entry::Vacant(slot) = index.entry(key(&image)) {
                if roots.len() >= MAX_ROOTS {
                    return Err(Error::OrderExceeded { limit: MAX_ROOTS });
                }
                slot.insert(roots.len());
                queue.push_back(roots.len());
                roots.push(image);
            }
        }
    }
    let generators = (0..n)
        .map(|i| {
            roots
                .iter()
                .map(|r| index[&key(&reflect(rep, i, r))] as u16)
                .collect()
        })
        .collect();
    Ok((roots, generators))
}

/// Breadth-first closure of `gens` starting from the identity. Returns the
/// elements in discovery order with their BFS parents.
fn close(
    gens: &[Perm],
    degree: usize,
    max_order: usize,
    exec: Execution,
) -> Result<(Vec<Perm>, Vec<Parent>)> {
    let identity: Perm = (0..degree as u16).collect();
    let mut elements = vec![identity.clone()];
    let mut parents = vec![(0u32, u16::MAX)];
    let mut seen: HashMap<Perm, u32> = HashMap::from([(identity, 0)]);
    let mut frontier: Vec<u32> = vec![0];
    while !frontier.is_empty() {
        let candidates = par::flat_map(exec, &frontier, |&i| {
            let g = &elements[i as usize];
            gens.iter()
                .enumerate()
                .filter_map(|(k, s)| {
                    let h = compose(g, s);
                    (!seen.contains_key(&h)).then_some((h, i, k as u16))
                })
                .collect()
        });
        let mut next = Vec::new();
        for (h, parent, gen) in candidates {
            if seen.contains_key(&h) {
                continue;
            }
            if elements.len() >= max_order {
                return Err(Error::OrderExceeded { limit: max_order });
            }
            let idx = elements.len() as u32;
            seen.insert(h.clone(), idx);
            elements.push(h);
            parents.push((parent, gen));
            next.push(idx);
        }
        frontier = next;
    }
    Ok((elements, parents))
}

pub fn brute_force_centralizer(
    d: &CoxeterDiagram,
    s: usize,
    max_order: usize,
) -> Result<BruteForce> {
    brute_force_centralizer_with(d, s, max_order, Execution::default())
}

/// Enumerates the finite group of `d` and the centralizer of `s`.
pub fn brute_force_centralizer_with(
    d: &CoxeterDiagram,
    s: usize,
    max_order: usize,
    exec: Execution,
) -> Result<BruteForce> {
    if s >= d.len() {
        return Err(Error::UnknownVertex(format!("#{s}")));
    }
    let order = recognize_spherical(d).order().ok_or(Error::NotFinite)?;
    if order > max_order as u128 {
        return Err(Error::OrderExceeded { limit: max_order });
    }
    let rep = TitsRepresentation::new(d);
    let (roots, generators) = enumerate_roots(&rep)?;
    let (elements, parents) = close(&generators, roots.len(), max_order, exec)?;
    let sigma = &generators[s];
    let commuting = par::map(exec, &elements, |g| compose(g, sigma) == compose(sigma, g));
    let centralizer = elements
        .iter()
        .zip(commuting)
        .filter(|(_, c)| *c)
        .map(|(g, _)| g.clone())
        .collect();
    Ok(BruteForce {
        s,
        roots,
        generators,
        elements,
        parents,
        centralizer,
    })
}

impl BruteForce {
    pub fn reflection(&self) -> usize {
        self.s
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn centralizer_order(&self) -> usize {
        self.centralizer.len()
    }

    pub fn roots(&self) -> &[Vec<f64>] {
        &self.roots
    }

    /// Elements in breadth-first order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn centralizer(&self) -> &HashSet<Perm> {
        &self.centralizer
    }

    /// A word for element `i` of minimal length (its BFS path).
    pub fn word_of(&self, mut i: usize) -> Word {
        let mut letters = Vec::new();
        while i != 0 {
            let (parent, gen) = self.parents[i];
            letters.push(gen as usize);
            i = parent as usize;
        }
        letters.reverse();
        Word(letters)
    }

    pub fn perm_of(&self, w: &Word) -> Result<Perm> {
        let mut p: Perm = (0..self.roots.len() as u16).collect();
        for &letter in w.letters() {
            let g = self
                .generators
                .get(letter)
                .ok_or_else(|| Error::UnknownLetter(format!("#{letter}")))?;
            p = compose(&p, g);
        }
        Ok(p)
    }

    pub fn in_centralizer(&self, w: &Word) -> Result<bool> {
        Ok(self.centralizer.contains(&self.perm_of(w)?))
    }

    /// The subgroup generated by `words`, as a set of permutations.
    pub fn closure(&self, words: &[Word], exec: Execution) -> Result<HashSet<Perm>> {
        let gens = words
            .iter()
            .map(|w| self.perm_of(w))
            .collect::<Result<Vec<_>>>()?;
        let (elements, _) = close(&gens, self.roots.len(), self.elements.len(), exec)?;
        Ok(elements.into_iter().collect())
    }

    /// Whether `words` generate exactly the centralizer.
    pub fn generates_centralizer(&self, words: &[Word], exec: Execution) -> Result<bool> {
        Ok(self.closure(words, exec)? == self.centralizer)
    }

    /// Whether simple reflections `a` and `b` are conjugate in the group.
    pub fn are_conjugate(&self, a: usize, b: usize) -> bool {
        let (sa, sb) = (&self.generators[a], &self.generators[b]);
        self.elements
            .iter()
            .any(|g| compose(g, sa) == compose(sb, g))
    }
}
