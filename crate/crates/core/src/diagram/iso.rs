use std::collections::HashMap;

use super::{CoxeterDiagram, Label};

/// A vertex color with the sorted (label, neighbor color) pairs around it.
type Signature = (usize, Vec<(Label, usize)>);

/// Returns a label-preserving bijection `map[v1] = v2` if one exists.
///
/// Vertices of both diagrams are colored jointly by iterated refinement
/// (color, multiset of (label, neighbor color)) starting from the degree,
/// then candidates are matched by exact backtracking within color classes.
pub fn diagrams_isomorphic(d1: &CoxeterDiagram, d2: &CoxeterDiagram) -> Option<Vec<usize>> {
    let n = d1.len();
    if n != d2.len() {
        return None;
    }
    let mut l1: Vec<Label> = d1.edges().map(|e| e.2).collect();
    let mut l2: Vec<Label> = d2.edges().map(|e| e.2).collect();
    l1.sort_unstable();
    l2.sort_unstable();
    if l1 != l2 {
        return None;
    }

    let (c1, c2) = refine(d1, d2);
    let mut h1: Vec<usize> = c1.clone();
    let mut h2: Vec<usize> = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }

    // Most constrained first: small color classes, then connectivity to
    // already-placed vertices.
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order
                    .iter()
                    .filter(|&&u| d1.label(u, v).is_joined())
                    .count();
                (
                    links,
                    std::cmp::Reverse(class_size[&c1[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(d1, d2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    d1: &CoxeterDiagram,
    d2: &CoxeterDiagram,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..d2.len() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| d1.label(u, v) == d2.label(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(d1, d2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Joint color refinement so colors are comparable across both diagrams.
fn refine(d1: &CoxeterDiagram, d2: &CoxeterDiagram) -> (Vec<usize>, Vec<usize>) {
    let n = d1.len();
    let graphs = [d1, d2];
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|d| (0..n).map(|v| d.degree(v)).collect())
        .collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut palette: HashMap<Signature, usize> = HashMap::new();
        let mut signatures: Vec<Vec<Signature>> = Vec::with_capacity(2);
        for (g, d) in graphs.iter().enumerate() {
            let sigs = (0..n)
                .map(|v| {
                    let mut nb: Vec<(Label, usize)> = d
                        .neighbors(v)
                        .map(|w| (d.label(v, w), colors[g][w]))
                        .collect();
                    nb.sort_unstable();
                    (colors[g][v], nb)
                })
                .collect();
            signatures.push(sigs);
        }
        // deterministic color ids: sort the distinct signatures
        let mut all: Vec<&(usize, Vec<(Label, usize)>)> = signatures.iter().flatten().collect();
        all.sort_unstable();
        all.dedup();
        for (i, sig) in all.into_iter().enumerate() {
            palette.insert(sig.clone(), i);
        }
        let next: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sigs| sigs.iter().map(|s| palette[s]).collect())
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let c2 = colors.pop().expect("two graphs");
    let c1 = colors.pop().expect("two graphs");
    (c1, c2)
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
