//! Named fixtures: the classical families plus three diagrams from the
//! hyperbolic world (Y555, Bugaenko's cocompact group on H^8 and the
//! reflection group of the even unimodular Lorentzian lattice II_{17,1}).

use super::{CoxeterDiagram, Label};
use crate::error::{Error, Result};

const THREE: Label = Label::Finite(3);

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "A:n",
        "B:n",
        "D:n",
        "affA:n",
        "affD:n",
        "E:6",
        "E:7",
        "E:8",
        "F4",
        "H3",
        "H4",
        "I2:m",
        "Y555",
        "bugaenko8",
        "lorentz18",
    ]
}

struct Builder {
    d: CoxeterDiagram,
}

impl Builder {
    fn with_vertices(names: impl IntoIterator<Item = String>) -> Self {
        let mut d = CoxeterDiagram::new();
        for n in names {
            d.add_vertex(&n).expect("fixture names are valid");
        }
        Self { d }
    }

    fn prefixed(prefix: &str, count: usize) -> Self {
        Self::with_vertices((1..=count).map(|i| format!("{prefix}{i}")))
    }

    fn join(&mut self, a: &str, b: &str, label: Label) -> &mut Self {
        let a = self.d.index_of(a).expect("fixture vertex");
        let b = self.d.index_of(b).expect("fixture vertex");
        self.d.set_label(a, b, label);
        self
    }

    fn path(&mut self, names: &[String]) -> &mut Self {
        for w in names.windows(2) {
            self.join(&w[0], &w[1], THREE);
        }
        self
    }

    fn finish(&mut self) -> CoxeterDiagram {
        std::mem::take(&mut self.d)
    }
}

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn parse_rank(family: &str, arg: &str) -> Result<usize> {
    arg.parse().map_err(|_| Error::BadRank {
        family: family.to_string(),
        rank: arg.to_string(),
    })
}

fn bad_rank(family: &str, rank: impl ToString) -> Error {
    Error::BadRank {
        family: family.to_string(),
        rank: rank.to_string(),
    }
}

/// Looks up a named diagram. Families take a parameter after a colon,
/// e.g. `A:5`, `affD:8`, `I2:7` or `I2:inf`.
pub fn builtin_diagram(name: &str) -> Result<CoxeterDiagram> {
    let (family, arg) = match name.split_once(':') {
        Some((f, a)) => (f, Some(a)),
        None => (name, None),
    };
    match (family, arg) {
        ("A", Some(arg)) => {
            let n = parse_rank(family, arg)?;
            if n < 1 {
                return Err(bad_rank(family, n));
            }
            Ok(Builder::prefixed("a", n).path(&names("a", 1..=n)).finish())
        }
        ("B", Some(arg)) => {
            // b1 - b2 - ... - b(n-1) =4= bn
            let n = parse_rank(family, arg)?;
            if n < 2 {
                return Err(bad_rank(family, n));
            }
            let mut b = Builder::prefixed("b", n);
            b.path(&names("b", 1..=n - 1));
            b.join(&format!("b{}", n - 1), &format!("b{n}"), Label::Finite(4));
            Ok(b.finish())
        }
        ("D", Some(arg)) => {
            // path d1 .. d(n-1), with dn attached to d(n-2)
            let n = parse_rank(family, arg)?;
            if n < 4 {
                return Err(bad_rank(family, n));
            }
            let mut b = Builder::prefixed("d", n);
            b.path(&names("d", 1..=n - 1));
            b.join(&format!("d{}", n - 2), &format!("d{n}"), THREE);
            Ok(b.finish())
        }
        ("affA", Some(arg)) => {
            // cycle a1 .. a(n+1); affA:1 is a single infinity edge
            let n = parse_rank(family, arg)?;
            if n < 1 {
                return Err(bad_rank(family, n));
            }
            let mut b = Builder::prefixed("a", n + 1);
            if n == 1 {
                b.join("a1", "a2", Label::Infinity);
            } else {
                b.path(&names("a", 1..=n + 1));
                b.join(&format!("a{}", n + 1), "a1", THREE);
            }
            Ok(b.finish())
        }
        ("affD", Some(arg)) => {
            // path d1 .. d(n-1), d(n) attached to d2, d(n+1) attached to d(n-2)
            let n = parse_rank(family, arg)?;
            if n < 4 {
                return Err(bad_rank(family, n));
            }
            let mut b = Builder::prefixed("d", n + 1);
            b.path(&names("d", 1..=n - 1));
            b.join("d2", &format!("d{n}"), THREE);
            b.join(&format!("d{}", n - 2), &format!("d{}", n + 1), THREE);
            Ok(b.finish())
        }
        ("E", Some(arg)) => {
            // Bourbaki numbering: e1 - e3 - e4 - e5 - ..., e2 attached to e4
            let n = parse_rank(family, arg)?;
            if !(6..=8).contains(&n) {
                return Err(bad_rank(family, n));
            }
            let mut b = Builder::prefixed("e", n);
            let mut spine = vec!["e1".to_string()];
            spine.extend(names("e", 3..=n));
            b.path(&spine);
            b.join("e2", "e4", THREE);
            Ok(b.finish())
        }
        ("F4", None) => Ok(Builder::prefixed("f", 4)
            .join("f1", "f2", THREE)
            .join("f2", "f3", Label::Finite(4))
            .join("f3", "f4", THREE)
            .finish()),
        ("H3", None) => Ok(Builder::prefixed("h", 3)
            .join("h1", "h2", Label::Finite(5))
            .join("h2", "h3", THREE)
            .finish()),
        ("H4", None) => Ok(Builder::prefixed("h", 4)
            .join("h1", "h2", Label::Finite(5))
            .join("h2", "h3", THREE)
            .join("h3", "h4", THREE)
            .finish()),
        ("I2", Some(arg)) => {
            let label: Label = arg.parse().map_err(|_| bad_rank(family, arg))?;
            let mut b = Builder::prefixed("i", 2);
            if label != Label::UNJOINED {
                b.join("i1", "i2", label);
            }
            Ok(b.finish())
        }
        ("Y555", None) => {
            // center y0 with three arms p1..p5, q1..q5, r1..r5
            let mut all = vec!["y0".to_string()];
            for arm in ["p", "q", "r"] {
                all.extend(names(arm, 1..=5));
            }
            let mut b = Builder::with_vertices(all);
            for arm in ["p", "q", "r"] {
                let mut spine = vec!["y0".to_string()];
                spine.extend(names(arm, 1..=5));
                b.path(&spine);
            }
            Ok(b.finish())
        }
        ("bugaenko8", None) => {
            // v1 =5= v2 - ... - v8 =5= v9, w4 on v4, w6 on v6, w4 -inf- w6
            let mut all = names("v", 1..=9);
            all.push("w4".into());
            all.push("w6".into());
            let mut b = Builder::with_vertices(all);
            b.path(&names("v", 2..=8));
            b.join("v1", "v2", Label::Finite(5));
            b.join("v8", "v9", Label::Finite(5));
            b.join("v4", "w4", THREE);
            b.join("v6", "w6", THREE);
            b.join("w4", "w6", Label::Infinity);
            Ok(b.finish())
        }
        ("lorentz18", None) => {
            // l1 .. l8 - c - r8 .. r1, with pendants lp on l3 and rp on r3
            let mut all = names("l", 1..=8);
            all.push("lp".into());
            all.push("c".into());
            all.extend(names("r", 1..=8));
            all.push("rp".into());
            let mut b = Builder::with_vertices(all);
            let mut spine = names("l", 1..=8);
            spine.push("c".into());
            spine.extend(names("r", 1..=8).into_iter().rev());
            b.path(&spine);
            b.join("l3", "lp", THREE);
            b.join("r3", "rp", THREE);
            Ok(b.finish())
        }
        ("A" | "B" | "D" | "affA" | "affD" | "E" | "I2", None) => {
            Err(bad_rank(family, "(missing)"))
        }
        ("F4" | "H3" | "H4" | "Y555" | "bugaenko8" | "lorentz18", Some(arg)) => {
            Err(bad_rank(family, arg))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
