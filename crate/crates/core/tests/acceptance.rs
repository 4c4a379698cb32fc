//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.
//!
//! Pinned tolerances: matrix comparisons 1e-8, order bound 50, brute-force
//! order cap 200000.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::Rng;
use refcent::centralizer::{
    blowup_fast_path, centralizer_diagram, CentralizerResult, ReflectionPart,
};
use refcent::diagram::{diagrams_isomorphic, parse_diagram};
use refcent::tits::brute_force_centralizer;
use refcent::verify::{verify_generators, VerifyOptions};
use refcent::words::generator_set;
use refcent::{CoxeterDiagram, Execution, Label};

use common::*;

const TOLERANCE: f64 = 1e-8;
const ORDER_BOUND: usize = 50;
const MAX_ORDER: usize = 200_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs `f` and fails if it takes longer than `limit`.
fn timed<T>(
    what: &str,
    limit: Duration,
    f: impl FnOnce() -> Result<T, String>,
) -> Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    ensure(took <= limit, || {
        format!("{what} took {took:?} (limit {limit:?})")
    })?;
    Ok(out)
}

fn domega(d: &CoxeterDiagram, s: usize) -> Result<CentralizerResult, String> {
    centralizer_diagram(d, s).map_err(|e| format!("s={}: {e}", d.name(s)))
}

fn domega_diagram(d: &CoxeterDiagram, s: usize) -> Result<CoxeterDiagram, String> {
    match domega(d, s)?.reflection_part {
        ReflectionPart::Diagram(w) => Ok(w.diagram),
        ReflectionPart::UnsupportedCycles { .. } => {
            Err(format!("s={}: unexpected cycles", d.name(s)))
        }
    }
}

fn expect_iso(got: &CoxeterDiagram, want: &CoxeterDiagram, what: &str) -> Result<(), String> {
    ensure(diagrams_isomorphic(got, want).is_some(), || {
        format!(
            "{what}: got\n{}expected a diagram isomorphic to\n{}",
            got.to_text(),
            want.to_text()
        )
    })
}

fn d_family(k: usize) -> CoxeterDiagram {
    match k {
        2 => points(2),
        3 => builtin("A:3"),
        _ => builtin(&format!("D:{k}")),
    }
}

fn family_identities() -> Outcome {
    let limit = Duration::from_secs(1);
    for n in 3..=10 {
        timed(&format!("A{n}"), limit, || {
            let d = builtin(&format!("A:{n}"));
            let want = if n == 3 {
                points(1)
            } else {
                builtin(&format!("A:{}", n - 2))
            };
            expect_iso(&domega_diagram(&d, 0)?, &want, &format!("A{n}"))
        })?;
    }
    for n in 4..=10 {
        timed(&format!("D{n}"), limit, || {
            let d = builtin(&format!("D:{n}"));
            let want = disjoint_union(&[points(1), d_family(n - 2)]);
            expect_iso(&domega_diagram(&d, 0)?, &want, &format!("D{n}"))
        })?;
    }
    for n in 6..=10 {
        timed(&format!("affD{n}"), limit, || {
            let d = builtin(&format!("affD:{n}"));
            let got = domega_diagram(&d, 0)?;
            let want = disjoint_union(&[builtin("affA:1"), builtin(&format!("affD:{}", n - 2))]);
            expect_iso(&got, &want, &format!("affD{n}"))?;
            let inf = got.edges().filter(|e| e.2 == Label::Infinity).count();
            ensure(inf == 1, || format!("affD{n}: {inf} infinite edges"))
        })?;
    }
    Ok("A3..A10, D4..D10, affD6..affD10".into())
}

/// The diagram of `W_Omega` for Bugaenko's group, assembled from the rules
/// stated for it: tails at either end inherit the joins of their endpoints,
/// and the remaining cross cases are listed explicitly.
fn bugaenko_expected(d: &CoxeterDiagram) -> (CoxeterDiagram, Vec<(String, String)>) {
    // letter -> a member arrow of its class
    let letters: BTreeMap<&str, &str> = [
        ("a", "v1>v6"),
        ("b", "v5>w4"),
        ("b'", "v1>w6"),
        ("c", "v1>w4"),
        ("c'", "v7>w6"),
        ("d", "v1>v5"),
        ("d'", "v1>v7"),
        ("e", "v1>v4"),
        ("e'", "v1>v8"),
        ("f", "v1>v3"),
        ("f'", "v9>v7"),
        ("g", "v3>v1"),
        ("g'", "v1>v9"),
    ]
    .into();
    // right endpoints of tails based at v1, and at v9
    let left: BTreeMap<&str, &str> = [
        ("f", "v3"),
        ("e", "v4"),
        ("d", "v5"),
        ("a", "v6"),
        ("d'", "v7"),
        ("e'", "v8"),
        ("g'", "v9"),
        ("c", "w4"),
        ("b'", "w6"),
    ]
    .into();
    let prime = |x: &str| -> String {
        if let Some(stripped) = x.strip_suffix('\'') {
            stripped.to_string()
        } else if x == "a" {
            x.to_string()
        } else {
            format!("{x}'")
        }
    };
    let mirror = |v: &str| -> String {
        match v {
            "w4" => "w6".into(),
            "w6" => "w4".into(),
            _ => format!("v{}", 10 - v[1..].parse::<usize>().unwrap()),
        }
    };
    let right: BTreeMap<String, String> = left.iter().map(|(l, v)| (prime(l), mirror(v))).collect();

    let mut want = CoxeterDiagram::new();
    for l in letters.keys() {
        want.add_vertex(l).unwrap();
    }
    let idx = |want: &CoxeterDiagram, l: &str| want.index_of(l).unwrap();
    let vx = |v: &str| d.index_of(v).unwrap();
    let set = |want: &mut CoxeterDiagram, x: &str, y: &str, l: Label| {
        let (a, b) = (idx(want, x), idx(want, y));
        let old = want.label(a, b);
        assert!(old == Label::UNJOINED || old == l, "{x}{y}: rules disagree");
        if l != Label::UNJOINED {
            want.set_label(a, b, l);
        }
    };
    for tails in [
        left.iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect::<Vec<_>>(),
        right.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
    ] {
        for (i, (x, vx_)) in tails.iter().enumerate() {
            for (y, vy) in &tails[i + 1..] {
                set(&mut want, x, y, d.label(vx(vx_), vx(vy)));
            }
        }
    }
    let inf = Label::Infinity;
    let two = Label::UNJOINED;
    for (x, y, l) in [
        ("b", "b'", inf),
        ("g", "g'", two),
        ("b", "c", two),
        ("b", "g'", two),
        ("c", "g", two),
        ("f", "g", two),
        ("b", "f", inf),
        ("c", "c'", inf),
        ("c", "f'", inf),
        ("f", "f'", inf),
    ] {
        set(&mut want, x, y, l);
        set(&mut want, &prime(x), &prime(y), l);
    }
    // every tail used above must lie in the class named by its letter
    let mut members: Vec<(String, String)> = letters
        .iter()
        .map(|(l, a)| (l.to_string(), a.to_string()))
        .collect();
    members.extend(left.iter().map(|(l, v)| (l.to_string(), format!("v1>{v}"))));
    members.extend(right.iter().map(|(l, v)| (l.clone(), format!("v9>{v}"))));
    (want, members)
}

fn bugaenko() -> Result<(), String> {
    let d = builtin("bugaenko8");
    let res = domega(&d, 0)?;
    let w = res.domega().ok_or("bugaenko8: unexpected cycles")?;
    ensure(w.classes.len() == 13, || {
        format!("{} classes", w.classes.len())
    })?;
    let (want, members) = bugaenko_expected(&d);
    let mut class_of: BTreeMap<&str, usize> = BTreeMap::new();
    for (letter, arrow) in &members {
        let c = w
            .classes
            .iter()
            .position(|c| {
                c.members
                    .iter()
                    .any(|a| a.display(&d).to_string() == *arrow)
            })
            .ok_or_else(|| format!("no class contains {arrow}"))?;
        let first = *class_of.entry(letter).or_insert(c);
        ensure(first == c, || format!("{arrow} is not in class {letter}"))?;
    }
    let distinct: BTreeSet<usize> = class_of.values().copied().collect();
    ensure(distinct.len() == 13, || {
        "letters do not name distinct classes".into()
    })?;
    for (x, &cx) in &class_of {
        for (y, &cy) in &class_of {
            let (ex, ey) = (want.index_of(x).unwrap(), want.index_of(y).unwrap());
            if ex < ey {
                let (got, expected) = (w.diagram.label(cx, cy), want.label(ex, ey));
                ensure(got == expected, || {
                    format!("bugaenko8 {x}{y}: got {got}, expected {expected}")
                })?;
            }
        }
    }
    Ok(())
}

fn lorentz() -> Result<(), String> {
    let d = builtin("lorentz18");
    let res = domega(&d, 0)?;
    let w = res.domega().ok_or("lorentz18: unexpected cycles")?;
    let inf: Vec<(usize, usize)> = w
        .diagram
        .edges()
        .filter(|e| e.2 == Label::Infinity)
        .map(|e| (e.0, e.1))
        .collect();
    ensure(inf.len() == 1, || {
        format!("lorentz18: {} infinite edges", inf.len())
    })?;
    let (x, y) = inf[0];
    // each class contains the two arrows between the ends of an A3
    let a3_ends = |c: usize| {
        w.classes[c]
            .members
            .iter()
            .find(|a| tree_path(&d, a.tile, a.target).len() == 3)
            .map(|a| tree_path(&d, a.tile, a.target))
            .ok_or_else(|| format!("class {} has no A3 arrow", w.diagram.name(c)))
    };
    let (px, py) = (a3_ends(x)?, a3_ends(y)?);
    let mut hull = BTreeSet::new();
    for &p in px.iter().chain(&py) {
        hull.extend(tree_path(&d, px[0], p));
    }
    let hull: Vec<usize> = hull.into_iter().collect();
    expect_iso(
        &d.induced(&hull),
        &builtin("affD:16"),
        "lorentz18 hull of the infinite edge",
    )
}

fn named_fixtures() -> Outcome {
    let limit = Duration::from_secs(1);
    timed("E8", limit, || {
        let d = builtin("E:8");
        expect_iso(&domega_diagram(&d, 0)?, &builtin("E:7"), "E8")
    })?;
    timed("Y555", limit, || {
        let mut text = String::new();
        for i in 0..6 {
            text += &format!("edge h{i} h{} 3\n", (i + 1) % 6);
        }
        for (arm, at) in [("p", 0), ("q", 2), ("r", 4)] {
            text += &format!("edge h{at} {arm}1 3\nedge {arm}1 {arm}2 3\nedge {arm}2 {arm}3 3\n");
        }
        let want = parse_diagram(&text).map_err(|e| e.to_string())?;
        let d = builtin("Y555");
        let fast = blowup_fast_path(&d).map_err(|e| e.to_string())?;
        expect_iso(&fast, &want, "Y555 blow-up")?;
        expect_iso(&domega_diagram(&d, 0)?, &want, "Y555 centralizer")
    })?;
    timed("bugaenko8", limit, bugaenko)?;
    timed("lorentz18", limit, lorentz)?;
    Ok("E8, Y555, bugaenko8, lorentz18".into())
}

fn class_counts() -> Outcome {
    for n in 3..=12 {
        let d = builtin(&format!("A:{n}"));
        let k = domega(&d, 0)?.domega().map_or(0, |w| w.classes.len());
        ensure(k == n - 2, || format!("A{n}: {k} classes"))?;
    }
    for n in 4..=12 {
        let d = builtin(&format!("D:{n}"));
        let k = domega(&d, 0)?.domega().map_or(0, |w| w.classes.len());
        ensure(k == n - 1, || format!("D{n}: {k} classes"))?;
    }
    Ok("A3..A12, D4..D12".into())
}

fn oracle_equivalence() -> Outcome {
    let mut fixtures: Vec<String> = [
        "A:3", "A:4", "A:5", "A:6", "B:3", "B:4", "D:4", "D:5", "F4", "H3", "E:6",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    fixtures.extend((3..=8).map(|m| format!("I2:{m}")));
    let mut e6 = 0;
    for name in &fixtures {
        timed(name, Duration::from_secs(60), || {
            let d = builtin(name);
            for s in 0..d.len() {
                let bf = brute_force_centralizer(&d, s, MAX_ORDER)
                    .map_err(|e| format!("{name}: {e}"))?;
                let res = domega(&d, s)?;
                let order = res
                    .domega()
                    .and_then(|w| w.spherical.order())
                    .ok_or_else(|| format!("{name}: reflection part not finite"))?;
                ensure(bf.centralizer_order() as u128 == 2 * order, || {
                    format!(
                        "{name} s={}: brute {} vs 2*{order}",
                        d.name(s),
                        bf.centralizer_order()
                    )
                })?;
                let words = generator_set(&d, s).map_err(|e| e.to_string())?.all_words();
                let equal = bf
                    .generates_centralizer(&words, Execution::default())
                    .map_err(|e| e.to_string())?;
                ensure(equal, || format!("{name} s={}: closure differs", d.name(s)))?;
                if name == "E:6" {
                    e6 = bf.centralizer_order();
                }
            }
            Ok(())
        })?;
    }
    ensure(e6 == 1440, || format!("E6 centralizer order {e6}"))?;
    Ok(format!(
        "{} fixtures, every s; E6 centralizer {e6}",
        fixtures.len()
    ))
}

fn word_verification() -> Outcome {
    let opts = VerifyOptions {
        tolerance: TOLERANCE,
        order_bound: ORDER_BOUND,
    };
    let mut checked = 0;
    for name in ["affD:8", "Y555", "bugaenko8", "lorentz18"] {
        timed(name, Duration::from_secs(5), || {
            let d = builtin(name);
            let report = verify_generators(&d, 0, opts).map_err(|e| e.to_string())?;
            ensure(report.checks.len() == 6, || {
                format!("{name}: class checks missing")
            })?;
            ensure(report.all_passed(), || format!("{name}:\n{report}"))?;
            checked += report.checks.iter().map(|c| c.total).sum::<usize>();
            Ok(())
        })?;
    }
    Ok(format!(
        "affD8, Y555, bugaenko8, lorentz18; {checked} checks"
    ))
}

fn fast_path_equivalence() -> Outcome {
    let mut rng = rng(0x5eed_0006);
    let runs = 150;
    for i in 0..runs {
        let n = rng.gen_range(1..=12);
        let d = random_single_edge_tree(&mut rng, n);
        let s = rng.gen_range(0..n);
        let fast = blowup_fast_path(&d).map_err(|e| format!("tree {i}: {e}"))?;
        let slow = domega_diagram(&d, s).map_err(|e| format!("tree {i}:\n{}{e}", d.to_text()))?;
        expect_iso(&fast, &slow, &format!("tree {i}:\n{}", d.to_text()))?;
    }
    Ok(format!("{runs} random trees"))
}

fn gamma_rank() -> Outcome {
    for n in 2..=8 {
        let d = builtin(&format!("affA:{n}"));
        for s in 0..d.len() {
            let r = domega(&d, s)?.gamma_rank;
            ensure(r == 1, || format!("affA{n} s={}: rank {r}", d.name(s)))?;
        }
    }
    let mut rng = rng(0x5eed_0007);
    let runs = 100;
    for i in 0..runs {
        let n = rng.gen_range(1..=10);
        let d = random_diagram(&mut rng, n);
        let s = rng.gen_range(0..n);
        let (members, edges) = odd_component_stats(&d, s);
        let res = domega(&d, s)?;
        let want = edges + 1 - members.len();
        ensure(
            res.gamma_rank == want && res.gamma_words.len() == want,
            || format!("diagram {i}: rank {} vs {want}", res.gamma_rank),
        )?;
    }
    Ok(format!("affA2..affA8, {runs} random diagrams"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 family identities", family_identities),
        ("2 named fixtures", named_fixtures),
        ("3 arrow class counts", class_counts),
        ("4 oracle equivalence", oracle_equivalence),
        ("5 word verification", word_verification),
        ("6 fast-path equivalence", fast_path_equivalence),
        ("7 gamma rank", gamma_rank),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({took:.2}s): {detail}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({took:.2}s): {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
