#![allow(dead_code)]

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use refcent::diagram::builtin_diagram;
use refcent::{CoxeterDiagram, Label};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn builtin(name: &str) -> CoxeterDiagram {
    builtin_diagram(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Disjoint union, vertices renamed `p<i>_<name>`.
pub fn disjoint_union(parts: &[CoxeterDiagram]) -> CoxeterDiagram {
    let mut out = CoxeterDiagram::new();
    for (i, p) in parts.iter().enumerate() {
        let offset = out.len();
        for name in p.names() {
            out.add_vertex(&format!("p{i}_{name}")).unwrap();
        }
        for (a, b, l) in p.edges() {
            out.set_label(offset + a, offset + b, l);
        }
    }
    out
}

/// `k` isolated vertices.
pub fn points(k: usize) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::new();
    for i in 0..k {
        d.add_vertex(&format!("x{i}")).unwrap();
    }
    d
}

fn random_label(rng: &mut ChaCha8Rng) -> Label {
    match rng.gen_range(0..8) {
        0 => Label::Infinity,
        k => Label::Finite(k + 1),
    }
}

fn shuffled_names(rng: &mut ChaCha8Rng, n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    names.shuffle(rng);
    names
}

/// Arbitrary diagram: each pair gets a label from {2,...,8,inf}.
pub fn random_diagram(rng: &mut ChaCha8Rng, n: usize) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::new();
    for name in shuffled_names(rng, n) {
        d.add_vertex(&name).unwrap();
    }
    for a in 0..n {
        for b in a + 1..n {
            let l = random_label(rng);
            if l != Label::UNJOINED {
                d.set_label(a, b, l);
            }
        }
    }
    d
}

/// Like [`random_diagram`], but an odd label closing a cycle of odd edges is
/// replaced by an even one, so every odd component is a tree.
pub fn random_odd_forest_diagram(rng: &mut ChaCha8Rng, n: usize) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::new();
    for name in shuffled_names(rng, n) {
        d.add_vertex(&name).unwrap();
    }
    let mut comp: Vec<usize> = (0..n).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    for (a, b) in pairs {
        let mut l = random_label(rng);
        if l.is_odd() {
            let (ca, cb) = (comp[a], comp[b]);
            if ca == cb {
                l = Label::Finite(2 * rng.gen_range(1..=4));
            } else {
                for c in comp.iter_mut() {
                    if *c == cb {
                        *c = ca;
                    }
                }
            }
        }
        if l != Label::UNJOINED {
            d.set_label(a, b, l);
        }
    }
    d
}

/// Uniform-ish random tree of single edges on `n` vertices.
pub fn random_single_edge_tree(rng: &mut ChaCha8Rng, n: usize) -> CoxeterDiagram {
    let names = shuffled_names(rng, n);
    let mut d = CoxeterDiagram::new();
    for name in &names {
        d.add_vertex(name).unwrap();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        d.set_label(order[i], parent, Label::Finite(3));
    }
    d
}

/// Members of `s`'s odd component and the number of odd edges inside it.
pub fn odd_component_stats(d: &CoxeterDiagram, s: usize) -> (Vec<usize>, usize) {
    let mut seen = vec![false; d.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    let mut members = Vec::new();
    while let Some(u) = queue.pop_front() {
        members.push(u);
        for v in 0..d.len() {
            if v != u && d.label(u, v).is_odd() && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    members.sort_unstable();
    let mut edges = 0;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if d.label(a, b).is_odd() {
                edges += 1;
            }
        }
    }
    (members, edges)
}

/// The path from `a` to `b` in a tree, endpoints included.
pub fn tree_path(d: &CoxeterDiagram, a: usize, b: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; d.len()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for v in d.neighbors(u) {
            if prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
