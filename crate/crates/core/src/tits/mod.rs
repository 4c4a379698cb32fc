//! The standard geometric (Tits) representation, used to check words
//! numerically, and a brute-force enumerator for finite groups.
//!
//! The bilinear form is `B(i,i) = 1`, `B(i,j) = -cos(pi/m)` for finite `m`
//! and `-1` for `m = inf`; the simple reflections act by
//! `sigma_i(v) = v - 2 B(e_i, v) e_i`.

mod brute;

pub use brute::{
    brute_force_centralizer, brute_force_centralizer_with, BruteForce, Perm, DEFAULT_MAX_ORDER,
    MAX_ROOTS,
};

use nalgebra::DMatrix;

use crate::diagram::{CoxeterDiagram, Label};
use crate::error::{Error, Result};
use crate::words::Word;

pub type Matrix = DMatrix<f64>;

pub const DEFAULT_ORDER_BOUND: usize = 50;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct TitsRepresentation {
    gram: Matrix,
    generators: Vec<Matrix>,
}

impl TitsRepresentation {
    pub fn new(d: &CoxeterDiagram) -> Self {
        let n = d.len();
        let gram = Matrix::from_fn(n, n, |i, j| match d.label(i, j) {
            Label::Finite(1) => 1.0,
            Label::Finite(2) => 0.0,
            Label::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
            Label::Infinity => -1.0,
        });
        let generators = (0..n)
            .map(|i| {
                let mut m = Matrix::identity(n, n);
                for j in 0..n {
                    m[(i, j)] -= 2.0 * gram[(i, j)];
                }
                m
            })
            .collect();
        let rep = Self { gram, generators };
        debug_assert!(rep.check_generators(d, 1e-12).is_ok());
        rep
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn generator(&self, i: usize) -> &Matrix {
        &self.generators[i]
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.rank(), self.rank())
    }

    /// Involution, form preservation, and the order of `sigma_i sigma_j`
    /// for finite labels up to 8.
    pub fn check_generators(&self, d: &CoxeterDiagram, tol: f64) -> Result<(), String> {
        let id = self.identity();
        for (i, s) in self.generators.iter().enumerate() {
            if max_abs_diff(&(s * s), &id) > tol {
                return Err(format!("sigma_{i} is not an involution"));
            }
            if max_abs_diff(&(s.transpose() * &self.gram * s), &self.gram) > tol {
                return Err(format!("sigma_{i} does not preserve the form"));
            }
        }
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if let Label::Finite(m @ 2..=8) = d.label(i, j) {
                    let prod = &self.generators[i] * &self.generators[j];
                    // rounding grows with m; 1e-9 is ample for m <= 8
                    match element_order(&prod, 8, tol.max(1e-9)) {
                        ElementOrder::Finite(k) if k == m as usize => {}
                        other => {
                            return Err(format!(
                                "sigma_{i} sigma_{j} has order {other:?}, expected {m}"
                            ))
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The matrix of `w1 w2 ... wk`; the identity for the empty word.
    pub fn evaluate(&self, w: &Word) -> Result<Matrix> {
        let n = self.rank();
        let mut m = self.identity();
        for &letter in w.letters() {
            if letter >= n {
                return Err(Error::UnknownLetter(format!("#{letter}")));
            }
            // M sigma_i = M - 2 (M e_i) B_i  (rank-one update)
            let col: Vec<f64> = m.column(letter).iter().copied().collect();
            for j in 0..n {
                let b = 2.0 * self.gram[(letter, j)];
                if b != 0.0 {
                    for (r, c) in col.iter().enumerate() {
                        m[(r, j)] -= c * b;
                    }
                }
            }
        }
        Ok(m)
    }
}

/// Convenience for [`TitsRepresentation::new`].
pub fn build_representation(d: &CoxeterDiagram) -> TitsRepresentation {
    TitsRepresentation::new(d)
}

pub fn evaluate_word(rep: &TitsRepresentation, w: &Word) -> Result<Matrix> {
    rep.evaluate(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(usize),
    ExceedsBound,
}

/// Entrywise maximum of `|a - b|`.
pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
}

/// Least `k <= bound` with `max |m^k - I| < tol`.
pub fn element_order(m: &Matrix, bound: usize, tol: f64) -> ElementOrder {
    assert!(bound >= 1, "order bound must be positive");
    let id = Matrix::identity(m.nrows(), m.ncols());
    let mut power = m.clone();
    for k in 1..=bound {
        if max_abs_diff(&power, &id) < tol {
            return ElementOrder::Finite(k);
        }
        if !power.iter().all(|x| x.is_finite()) {
            break;
        }
        power = &power * m;
    }
    ElementOrder::ExceedsBound
}

pub fn commutes(a: &Matrix, b: &Matrix, tol: f64) -> bool {
    max_abs_diff(&(a * b), &(b * a)) < tol
}
