//! Command-line frontend for `refcent`.
//!
//! [`run`] parses arguments and writes to the given streams so it can be
//! driven from tests; `main` only forwards the process streams.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use refcent::centralizer::{blowup_fast_path, centralizer_diagram_with, ReflectionPart};
use refcent::diagram::{builtin_diagram, builtin_names, odd_components, recognize_spherical};
use refcent::tits::{
    brute_force_centralizer_with, DEFAULT_MAX_ORDER, DEFAULT_ORDER_BOUND, DEFAULT_TOLERANCE,
};
use refcent::verify::{verify_generators_with, VerifyOptions};
use refcent::words::generator_set;
use refcent::{parse_diagram, CoxeterDiagram, Error, Execution, Word};

#[derive(Parser, Debug)]
#[command(
    name = "refcent",
    version,
    about = "Reflection centralizers in Coxeter groups"
)]
struct Cli {
    /// Run library code on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Odd components, cycle ranks and finite-type classification.
    Info {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
        /// Write the input diagram as Graphviz.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// The centralizer of a simple reflection.
    Centralize {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAME")]
        reflection: String,
        #[arg(long)]
        json: bool,
        /// Write the diagram of the reflection part as Graphviz.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Emit the reflection word of every arrow, not only class representatives.
        #[arg(long)]
        all_words: bool,
    },
    /// Reflection-part diagram of a tree of single edges via A3 subdiagrams.
    Blowup {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Check the generating words numerically.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAME")]
        reflection: String,
        #[arg(long, value_name = "X", default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_BOUND)]
        order_bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a finite group and compare the centralizer with the generated subgroup.
    Brute {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "NAME")]
        reflection: String,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a built-in diagram, or list the available names.
    Builtin { name: Option<String> },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Diagram file.
    #[arg(long, value_name = "PATH")]
    diagram: Option<PathBuf>,
    /// Built-in diagram, e.g. E:8 or affD:6.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

impl Source {
    fn load(&self) -> Result<CoxeterDiagram, Failure> {
        match (&self.diagram, &self.builtin) {
            (Some(path), _) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                Ok(parse_diagram(&text)?)
            }
            (None, Some(name)) => Ok(builtin_diagram(name)?),
            (None, None) => unreachable!("clap enforces a source"),
        }
    }
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// Runs the CLI and returns the exit code: 0 on success, 1 for usage and
/// input errors, 2 when an internal consistency check fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match execute(cli.command, exec, out) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn write_dot(path: &PathBuf, d: &CoxeterDiagram, name: &str) -> Result<(), Failure> {
    fs::write(path, d.to_dot(name)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(out, "{text}").map_err(io)
}

fn word_text(d: &CoxeterDiagram, w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.display(d).to_string()
    }
}

fn names(d: &CoxeterDiagram, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| d.name(v).to_string()).collect()
}

fn execute(cmd: Command, exec: Execution, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Info { source, json, dot } => {
            let d = source.load()?;
            info(&d, json, out)?;
            if let Some(path) = dot {
                write_dot(&path, &d, "diagram")?;
            }
        }
        Command::Centralize {
            source,
            reflection,
            json,
            dot,
            all_words,
        } => {
            let d = source.load()?;
            let s = d.index_of(&reflection)?;
            centralize(&d, s, exec, json, dot, all_words, out)?;
        }
        Command::Blowup { source, json, dot } => {
            let d = source.load()?;
            let b = blowup_fast_path(&d)?;
            if json {
                let ty = recognize_spherical(&b);
                emit_json(out, &json!({ "diagram": b.to_json(), "type": ty }))?;
            } else {
                writeln!(out, "# type {}", recognize_spherical(&b)).map_err(io)?;
                write!(out, "{}", b.to_text()).map_err(io)?;
            }
            if let Some(path) = dot {
                write_dot(&path, &b, "blowup")?;
            }
        }
        Command::Verify {
            source,
            reflection,
            tol,
            order_bound,
            json,
        } => {
            if order_bound == 0 || tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Input(
                    "--tol and --order-bound must be positive".into(),
                ));
            }
            let d = source.load()?;
            let s = d.index_of(&reflection)?;
            let opts = VerifyOptions {
                tolerance: tol,
                order_bound,
            };
            let report = verify_generators_with(&d, s, opts, exec)?;
            if json {
                emit_json(
                    out,
                    &json!({ "passed": report.all_passed(), "report": report }),
                )?;
            } else {
                write!(out, "{report}").map_err(io)?;
            }
            if !report.all_passed() {
                return Err(Failure::Internal("verification failed".into()));
            }
        }
        Command::Brute {
            source,
            reflection,
            max_order,
            json,
        } => {
            let d = source.load()?;
            let s = d.index_of(&reflection)?;
            let bf = brute_force_centralizer_with(&d, s, max_order, exec)?;
            let words = generator_set(&d, s)?.all_words();
            let equal = bf.generates_centralizer(&words, exec)?;
            let verdict = if equal { "EQUAL" } else { "DIFFERENT" };
            if json {
                emit_json(
                    out,
                    &json!({
                        "reflection": reflection,
                        "group_order": bf.group_order(),
                        "centralizer_order": bf.centralizer_order(),
                        "generators": words.len(),
                        "closure": verdict,
                    }),
                )?;
            } else {
                writeln!(out, "group-order {}", bf.group_order()).map_err(io)?;
                writeln!(out, "centralizer-order {}", bf.centralizer_order()).map_err(io)?;
                writeln!(out, "generators {}", words.len()).map_err(io)?;
                writeln!(out, "closure {verdict}").map_err(io)?;
            }
            if !equal {
                return Err(Failure::Internal(
                    "generated subgroup differs from the centralizer".into(),
                ));
            }
        }
        Command::Builtin { name } => match name {
            Some(name) => write!(out, "{}", builtin_diagram(&name)?.to_text()).map_err(io)?,
            None => {
                for n in builtin_names() {
                    writeln!(out, "{n}").map_err(io)?;
                }
            }
        },
    }
    Ok(())
}

fn info(d: &CoxeterDiagram, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let odd = odd_components(d);
    let ty = recognize_spherical(d);
    if json {
        let comps: Vec<Value> = odd
            .components
            .iter()
            .map(|c| json!({ "members": names(d, &c.members), "cycle_rank": c.cycle_rank }))
            .collect();
        return emit_json(
            out,
            &json!({
                "diagram": d.to_json(),
                "odd_components": comps,
                "type": ty,
            }),
        );
    }
    writeln!(out, "vertices {}", d.len()).map_err(io)?;
    writeln!(out, "edges {}", d.edges().count()).map_err(io)?;
    match ty.order() {
        Some(order) => writeln!(out, "type {ty} order {order}"),
        None => writeln!(out, "type {ty}"),
    }
    .map_err(io)?;
    for c in &odd.components {
        writeln!(
            out,
            "odd-component cycle-rank {}: {}",
            c.cycle_rank,
            names(d, &c.members).join(" ")
        )
        .map_err(io)?;
    }
    Ok(())
}

fn centralize(
    d: &CoxeterDiagram,
    s: usize,
    exec: Execution,
    json: bool,
    dot: Option<PathBuf>,
    all_words: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let res = centralizer_diagram_with(d, s, exec)?;
    if dot.is_some() {
        if let ReflectionPart::UnsupportedCycles { cycle_rank } = res.reflection_part {
            return Err(Error::UnsupportedCycles { cycle_rank }.into());
        }
    }
    let gens = if all_words {
        Some(generator_set(d, s)?)
    } else {
        None
    };
    let gamma: Vec<String> = res.gamma_words.iter().map(|w| word_text(d, w)).collect();
    let arrow_words: Vec<(String, String)> = gens
        .iter()
        .flat_map(|g| g.r_words.iter())
        .map(|(a, w)| (a.display(d).to_string(), word_text(d, w)))
        .collect();

    if json {
        let domega = match &res.reflection_part {
            ReflectionPart::Diagram(w) => {
                let classes: Vec<Value> = w
                    .classes
                    .iter()
                    .zip(&w.class_words)
                    .map(|(c, word)| {
                        json!({
                            "id": c.id.display(d).to_string(),
                            "members": c.members.iter().map(|a| a.display(d).to_string()).collect::<Vec<_>>(),
                            "word": word_text(d, word),
                        })
                    })
                    .collect();
                json!({
                    "status": "diagram",
                    "diagram": w.diagram.to_json(),
                    "type": w.spherical,
                    "classes": classes,
                })
            }
            ReflectionPart::UnsupportedCycles { cycle_rank } => {
                json!({ "status": "unsupported-cycles", "cycle_rank": cycle_rank })
            }
        };
        let mut v = json!({
            "reflection": d.name(s),
            "odd_component": names(d, &res.component.members),
            "gamma_rank": res.gamma_rank,
            "gamma_words": gamma,
            "domega": domega,
        });
        if all_words {
            let words: serde_json::Map<String, Value> = arrow_words
                .into_iter()
                .map(|(a, w)| (a, Value::String(w)))
                .collect();
            v["arrow_words"] = Value::Object(words);
        }
        emit_json(out, &v)?;
    } else {
        let mut text = String::new();
        text += &format!("# reflection {}\n", d.name(s));
        text += &format!(
            "# odd-component {}\n",
            names(d, &res.component.members).join(" ")
        );
        text += &format!("# gamma-rank {}\n", res.gamma_rank);
        for w in &gamma {
            text += &format!("# gamma-word {w}\n");
        }
        match &res.reflection_part {
            ReflectionPart::Diagram(w) => {
                text += &format!("# type {}", w.spherical);
                if let Some(order) = w.spherical.order() {
                    text += &format!(" order {order}");
                }
                text += "\n";
                for (c, word) in w.classes.iter().zip(&w.class_words) {
                    let members: Vec<String> =
                        c.members.iter().map(|a| a.display(d).to_string()).collect();
                    text += &format!("# class {}: {}\n", c.id.display(d), members.join(" "));
                    text += &format!("# word {}: {}\n", c.id.display(d), word_text(d, word));
                }
                for (a, w) in &arrow_words {
                    text += &format!("# arrow-word {a}: {w}\n");
                }
                text += &w.diagram.to_text();
            }
            ReflectionPart::UnsupportedCycles { .. } => {
                text += "# domega UNSUPPORTED-CYCLES\n";
                for (a, w) in &arrow_words {
                    text += &format!("# arrow-word {a}: {w}\n");
                }
            }
        }
        out.write_all(text.as_bytes()).map_err(io)?;
    }
    if let (Some(path), ReflectionPart::Diagram(w)) = (dot, &res.reflection_part) {
        write_dot(&path, &w.diagram, "domega")?;
    }
    Ok(())
}
