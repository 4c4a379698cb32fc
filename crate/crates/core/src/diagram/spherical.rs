use std::fmt;

use serde::Serialize;

use super::{CoxeterDiagram, Label};

/// Irreducible finite Coxeter types. Rank-2 diagrams with labels 3 and 4
/// are reported as `A(2)` and `B(2)`; other rank-2 labels as `I2(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleType {
    pub fn rank(self) -> usize {
        match self {
            IrreducibleType::A(n) | IrreducibleType::B(n) | IrreducibleType::D(n) => n,
            IrreducibleType::E6 => 6,
            IrreducibleType::E7 => 7,
            IrreducibleType::E8 => 8,
            IrreducibleType::F4 | IrreducibleType::H4 => 4,
            IrreducibleType::H3 => 3,
            IrreducibleType::I2(_) => 2,
        }
    }

    /// Group order; saturates at `u128::MAX` (only reachable past rank 33).
    pub fn order(self) -> u128 {
        let factorial = |n: usize| (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
        let pow2 = |n: usize| 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
        match self {
            IrreducibleType::A(n) => factorial(n + 1),
            IrreducibleType::B(n) => pow2(n).saturating_mul(factorial(n)),
            IrreducibleType::D(n) => pow2(n - 1).saturating_mul(factorial(n)),
            IrreducibleType::E6 => 51_840,
            IrreducibleType::E7 => 2_903_040,
            IrreducibleType::E8 => 696_729_600,
            IrreducibleType::F4 => 1_152,
            IrreducibleType::H3 => 120,
            IrreducibleType::H4 => 14_400,
            IrreducibleType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(n) => write!(f, "A{n}"),
            IrreducibleType::B(n) => write!(f, "B{n}"),
            IrreducibleType::D(n) => write!(f, "D{n}"),
            IrreducibleType::E6 => f.write_str("E6"),
            IrreducibleType::E7 => f.write_str("E7"),
            IrreducibleType::E8 => f.write_str("E8"),
            IrreducibleType::F4 => f.write_str("F4"),
            IrreducibleType::H3 => f.write_str("H3"),
            IrreducibleType::H4 => f.write_str("H4"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphericalType {
    NotSpherical,
    /// Irreducible components sorted; the empty diagram has no components
    /// and order 1.
    Spherical {
        components: Vec<IrreducibleType>,
        order: u128,
    },
}

impl SphericalType {
    pub fn is_spherical(&self) -> bool {
        matches!(self, SphericalType::Spherical { .. })
    }

    pub fn order(&self) -> Option<u128> {
        match self {
            SphericalType::Spherical { order, .. } => Some(*order),
            SphericalType::NotSpherical => None,
        }
    }
}

impl fmt::Display for SphericalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphericalType::NotSpherical => f.write_str("not spherical"),
            SphericalType::Spherical { components, .. } if components.is_empty() => {
                f.write_str("trivial")
            }
            SphericalType::Spherical { components, .. } => {
                let parts: Vec<String> = components.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

impl Serialize for SphericalType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SphericalType", 3)?;
        st.serialize_field("spherical", &self.is_spherical())?;
        match self {
            SphericalType::NotSpherical => {
                st.serialize_field("type", &Option::<String>::None)?;
                st.serialize_field("order", &Option::<u128>::None)?;
            }
            SphericalType::Spherical { order, .. } => {
                st.serialize_field("type", &self.to_string())?;
                st.serialize_field("order", order)?;
            }
        }
        st.end()
    }
}

/// Classifies each connected component against the finite types.
pub fn recognize_spherical(d: &CoxeterDiagram) -> SphericalType {
    let mut components = Vec::new();
    for comp in d.components() {
        match classify_connected(d, &comp) {
            Some(t) => components.push(t),
            None => return SphericalType::NotSpherical,
        }
    }
    components.sort();
    let order = components
        .iter()
        .fold(1u128, |acc, t| acc.saturating_mul(t.order()));
    SphericalType::Spherical { components, order }
}

fn classify_connected(d: &CoxeterDiagram, comp: &[usize]) -> Option<IrreducibleType> {
    let k = comp.len();
    if k == 1 {
        return Some(IrreducibleType::A(1));
    }
    let mut edges = Vec::new();
    for (i, &a) in comp.iter().enumerate() {
        for &b in &comp[i + 1..] {
            let l = d.label(a, b);
            if l.is_joined() {
                edges.push((a, b, l.finite()?));
            }
        }
    }
    if k == 2 {
        return Some(match edges[0].2 {
            3 => IrreducibleType::A(2),
            4 => IrreducibleType::B(2),
            m => IrreducibleType::I2(m),
        });
    }
    if edges.len() != k - 1 || edges.iter().any(|e| !(3..=5).contains(&e.2)) {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => classify_path(d, comp),
        [center] if degree(*center) == 3 => {
            if edges.iter().any(|e| e.2 != 3) {
                return None;
            }
            let mut legs: Vec<usize> = d
                .neighbors(*center)
                .map(|start| leg_length(d, *center, start))
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, r] => Some(IrreducibleType::D(r + 3)),
                [1, 2, 2] => Some(IrreducibleType::E6),
                [1, 2, 3] => Some(IrreducibleType::E7),
                [1, 2, 4] => Some(IrreducibleType::E8),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Number of vertices on the arm from `center` through `start` in a tree
/// whose non-center vertices have degree <= 2.
fn leg_length(d: &CoxeterDiagram, center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    while let Some(next) = d.neighbors(cur).find(|&w| w != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

fn classify_path(d: &CoxeterDiagram, comp: &[usize]) -> Option<IrreducibleType> {
    let k = comp.len();
    let end = *comp.iter().find(|&&v| d.degree(v) == 1)?;
    let mut labels = Vec::with_capacity(k - 1);
    let (mut prev, mut cur) = (usize::MAX, end);
    while let Some(next) = d.neighbors(cur).find(|&w| w != prev) {
        match d.label(cur, next) {
            Label::Finite(m) => labels.push(m),
            Label::Infinity => return None,
        }
        prev = cur;
        cur = next;
    }
    let special: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    let at_end = |i: usize| i == 0 || i == k - 2;
    match special.as_slice() {
        [] => Some(IrreducibleType::A(k)),
        [(i, 4)] if at_end(*i) => Some(IrreducibleType::B(k)),
        [(1, 4)] if k == 4 => Some(IrreducibleType::F4),
        [(i, 5)] if at_end(*i) && k == 3 => Some(IrreducibleType::H3),
        [(i, 5)] if at_end(*i) && k == 4 => Some(IrreducibleType::H4),
        _ => None,
    }
}
