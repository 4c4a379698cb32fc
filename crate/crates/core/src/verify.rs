//! Numerical verification of the generating words in the Tits representation.

use std::fmt;

use serde::Serialize;

use crate::centralizer::{centralizer_diagram_with, ReflectionPart};
use crate::diagram::{CoxeterDiagram, Label};
use crate::error::Result;
use crate::par::{self, Execution};
use crate::tits::{
    commutes, element_order, max_abs_diff, ElementOrder, Matrix, TitsRepresentation,
    DEFAULT_ORDER_BOUND, DEFAULT_TOLERANCE,
};
use crate::words::{generator_set, Word};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub tolerance: f64,
    pub order_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            order_bound: DEFAULT_ORDER_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// Descriptions of failed cases, in evaluation order.
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub reflection: String,
    pub words: usize,
    /// Largest absolute entry over all word matrices. Rounding error in the
    /// order checks grows quickly with it.
    pub max_entry: f64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.ok() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} {}/{}", c.name, c.passed, c.total)?;
            for msg in &c.failures {
                writeln!(f, "  {msg}")?;
            }
        }
        writeln!(f, "max-entry {:.3e}", self.max_entry)
    }
}

pub fn verify_generators(
    d: &CoxeterDiagram,
    s: usize,
    opts: VerifyOptions,
) -> Result<VerifyReport> {
    verify_generators_with(d, s, opts, Execution::default())
}

/// Evaluates every generating word and checks:
///
/// * `commute`: each word commutes with `sigma_s`;
/// * `involution`, `trace`, `form`: each reflection word squares to the
///   identity, has trace `n - 2` and preserves the bilinear form;
/// * `fusion`: arrows in one class give the same matrix;
/// * `pair-order`: for each pair of classes, the product of their
///   reflections has the order given by the computed label (infinite labels
///   must exceed the bound).
pub fn verify_generators_with(
    d: &CoxeterDiagram,
    s: usize,
    opts: VerifyOptions,
    exec: Execution,
) -> Result<VerifyReport> {
    let tol = opts.tolerance;
    let gens = generator_set(d, s)?;
    let rep = TitsRepresentation::new(d);
    let sigma = rep.generator(s);
    let n = d.len() as f64;

    let all = gens.all_words();
    let matrices: Vec<Matrix> = par::map(exec, &all, |w| rep.evaluate(w))
        .into_iter()
        .collect::<Result<_>>()?;
    let name = |w: &Word| format!("[{}]", w.display(d));

    let mut commute = Check::new("commute");
    for (w, m) in all.iter().zip(&matrices) {
        commute.record(commutes(m, sigma, tol), || {
            format!("{} does not commute", name(w))
        });
    }

    let mut involution = Check::new("involution");
    let mut trace = Check::new("trace");
    let mut form = Check::new("form");
    let id = rep.identity();
    let r_start = 1 + gens.gamma_words.len();
    let r_matrices: Vec<&Matrix> = matrices[r_start..].iter().collect();
    for ((arrow, w), m) in gens.r_words.iter().zip(&r_matrices) {
        let label = || arrow.display(d).to_string();
        involution.record(max_abs_diff(&(*m * *m), &id) < tol, || {
            format!("{}: {} squared is not the identity", label(), name(w))
        });
        let tr = m.trace();
        trace.record((tr - (n - 2.0)).abs() < tol, || {
            format!("{}: trace {tr}", label())
        });
        let g = rep.gram();
        form.record(max_abs_diff(&(m.transpose() * g * *m), g) < tol, || {
            format!("{}: form not preserved", label())
        });
    }
    let mut checks = vec![commute, involution, trace, form];

    let result = centralizer_diagram_with(d, s, exec)?;
    if let ReflectionPart::Diagram(w) = &result.reflection_part {
        let arrows: Vec<_> = gens.r_words.keys().copied().collect();
        let matrix_of = |a| &r_matrices[arrows.binary_search(&a).expect("arrow has a word")];

        let mut fusion = Check::new("fusion");
        for c in &w.classes {
            let canon = matrix_of(c.id);
            for &a in &c.members[1..] {
                fusion.record(max_abs_diff(matrix_of(a), canon) < tol, || {
                    format!("{} and {} differ", a.display(d), c.id.display(d))
                });
            }
        }

        let k = w.classes.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .collect();
        let orders = par::map(exec, &pairs, |&(a, b)| {
            let prod = *matrix_of(w.classes[a].id) * *matrix_of(w.classes[b].id);
            element_order(&prod, opts.order_bound, tol)
        });
        let mut pair_order = Check::new("pair-order");
        for (&(a, b), got) in pairs.iter().zip(orders) {
            let label = w.diagram.label(a, b);
            let expected = match label {
                Label::Finite(m) if (m as usize) <= opts.order_bound => {
                    ElementOrder::Finite(m as usize)
                }
                _ => ElementOrder::ExceedsBound,
            };
            pair_order.record(got == expected, || {
                format!(
                    "{} {}: label {label}, order {got:?}",
                    w.diagram.name(a),
                    w.diagram.name(b)
                )
            });
        }
        checks.push(fusion);
        checks.push(pair_order);
    }

    Ok(VerifyReport {
        reflection: d.name(s).to_string(),
        words: all.len(),
        max_entry: matrices.iter().map(|m| m.amax()).fold(0.0, f64::max),
        checks,
    })
}
