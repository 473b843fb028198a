use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monoburn::catalog;
use monoburn::io::{self, GroupRef};
use monoburn::lefschetz::{lefschetz, realize};
use monoburn::tensor::{tensor_induce_poset, tensor_induce_ring, tensor_induce_ring_by_marks, RepChoice};
use monoburn::verify::{run_suite, SuiteConfig, SuiteReport, SUITES};
use monoburn::{BurnsideElement, Error, FiniteGroup, MonomialBiset, MonomialPoset, SubcharTable};

#[derive(Parser, Debug)]
#[command(name = "monoburn", version, about = "Monomial Burnside rings, Lefschetz invariants and tensor induction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Catalog name or group file.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Order of the coefficient group C = Z/n.
    #[arg(long, global = true, default_value_t = 1)]
    n: u32,
    #[arg(long, global = true)]
    poset: Option<PathBuf>,
    #[arg(long, global = true)]
    biset: Option<PathBuf>,
    /// Element file; `mul` takes two.
    #[arg(long, global = true)]
    element: Vec<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    #[arg(long, global = true)]
    text: bool,
    #[arg(long, global = true, default_value_t = 48)]
    max_group: usize,
    #[arg(long, global = true, default_value_t = 10)]
    max_poset: usize,
    #[arg(long, global = true, default_value_t = 16)]
    max_biset: usize,
    #[arg(long, global = true, default_value_t = 6)]
    max_n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in groups.
    Catalog,
    /// Conjugacy classes of subcharacters, in basis order.
    Subchars,
    /// The table of marks.
    Marks,
    /// Product of two elements.
    Mul,
    /// Lefschetz invariant of a monomial poset.
    Lefschetz,
    /// A monomial poset with the given invariant.
    Realize,
    /// Tensor induction of a monomial poset along a biset.
    TensorInduce {
        #[arg(long, value_enum, default_value_t = Reps::Least)]
        reps: Reps,
    },
    /// Tensor induction of a ring element along a biset.
    TensorInduceRing {
        /// Also compute through a realizing poset and compare.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite, or `all`, or `list`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 20)]
        cases: usize,
        /// Right-hand group for the tensor suites.
        #[arg(long, default_value = "C2")]
        right: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reps {
    Least,
    Greatest,
}

enum Failure {
    Input(String),
    Verification(Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(Value, String), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((value, text)) => {
            emit(&cli, &value, &text);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(value, text)) => {
            emit(&cli, &value, &text);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, value: &Value, text: &str) {
    let body = if cli.text {
        text.to_string()
    } else {
        serde_json::to_string_pretty(value).expect("serialisable")
    };
    // a closed pipe downstream is not an error
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cap(what: &'static str, size: usize, cap: usize) -> Result<(), Failure> {
    if size > cap {
        return Err(Error::SizeCap { what, size, cap }.into());
    }
    Ok(())
}

fn check_group(cli: &Cli, g: &FiniteGroup) -> Result<(), Failure> {
    cap("group order", g.order(), cli.max_group)
}

fn group(cli: &Cli) -> Result<Arc<FiniteGroup>, Failure> {
    let name = cli.group.as_deref().ok_or_else(|| Failure::Input("--group is required".into()))?;
    let g = GroupRef::Name(name.to_string()).resolve(None)?;
    check_group(cli, &g)?;
    Ok(Arc::new(g))
}

fn modulus(cli: &Cli) -> Result<u32, Failure> {
    if cli.n == 0 {
        return Err(Failure::Input("--n must be positive".into()));
    }
    cap("modulus", cli.n as usize, cli.max_n as usize)?;
    Ok(cli.n)
}

fn table(cli: &Cli, g: &Arc<FiniteGroup>) -> Result<Arc<SubcharTable>, Failure> {
    Ok(SubcharTable::build(Arc::clone(g), modulus(cli)?)?)
}

fn poset(cli: &Cli, g: &Arc<FiniteGroup>) -> Result<MonomialPoset, Failure> {
    let path = cli.poset.as_ref().ok_or_else(|| Failure::Input("--poset is required".into()))?;
    let x = io::parse_poset(&read(path)?, Arc::clone(g), modulus(cli)?)?;
    cap("poset size", x.size(), cli.max_poset)?;
    Ok(x)
}

fn biset(cli: &Cli) -> Result<MonomialBiset, Failure> {
    let path = cli.biset.as_ref().ok_or_else(|| Failure::Input("--biset is required".into()))?;
    let b = io::parse_biset(&read(path)?, modulus(cli)?, path.parent())?;
    check_group(cli, b.left())?;
    check_group(cli, b.right())?;
    cap("biset size", b.size(), cli.max_biset)?;
    Ok(b)
}

fn element(cli: &Cli, i: usize, t: &Arc<SubcharTable>) -> Result<BurnsideElement, Failure> {
    let path = cli
        .element
        .get(i)
        .ok_or_else(|| Failure::Input(format!("--element is required ({} given)", cli.element.len())))?;
    Ok(io::parse_element(&read(path)?, t)?)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Catalog => {
            let rows: Vec<Value> = catalog::NAMES
                .iter()
                .map(|name| {
                    let g = catalog::by_name(name).expect("listed");
                    json!({ "name": name, "order": g.order(), "abelian": g.is_abelian() })
                })
                .collect();
            let text = catalog::NAMES
                .iter()
                .map(|name| format!("{name}\t{}", catalog::by_name(name).expect("listed").order()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((Value::Array(rows), text))
        }
        Command::Subchars => {
            let t = table(cli, &group(cli)?)?;
            let text = (0..t.class_count())
                .map(|c| format!("{c}\t{:?}\tclass size {}", t.class_rep(c), t.class(c).members.len()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((io::table_to_json(&t), text))
        }
        Command::Marks => {
            let t = table(cli, &group(cli)?)?;
            let text = monoburn::burnside::mark_matrix(&t)
                .iter()
                .map(|row| row.iter().map(|v| format!("{v:>4}")).collect::<String>())
                .collect::<Vec<_>>()
                .join("\n");
            Ok((io::marks_to_json(&t), text))
        }
        Command::Mul => {
            let t = table(cli, &group(cli)?)?;
            let (a, b) = (element(cli, 0, &t)?, element(cli, 1, &t)?);
            let p = &a * &b;
            Ok((io::element_to_json(&p), p.to_string()))
        }
        Command::Lefschetz => {
            let g = group(cli)?;
            let t = table(cli, &g)?;
            let r = lefschetz(&poset(cli, &g)?, &t)?;
            Ok((io::lefschetz_to_json(&r), r.element.to_string()))
        }
        Command::Realize => {
            let t = table(cli, &group(cli)?)?;
            let x = realize(&element(cli, 0, &t)?)?;
            cap("poset size", x.size(), cli.max_poset)?;
            let text = format!("{} points", x.size());
            Ok((io::poset_to_json(&x), text))
        }
        Command::TensorInduce { reps } => {
            let b = biset(cli)?;
            let x = poset(cli, b.left())?;
            let choice = match reps {
                Reps::Least => RepChoice::Least,
                Reps::Greatest => RepChoice::Greatest,
            };
            let r = tensor_induce_poset(&b, &x, choice)?;
            let text = format!("{} points over {}", r.poset.size(), b.right().name());
            Ok((io::tensor_result_to_json(&r), text))
        }
        Command::TensorInduceRing { check } => {
            let b = biset(cli)?;
            let gt = table(cli, b.left())?;
            let ht = table(cli, b.right())?;
            let a = element(cli, 0, &gt)?;
            let image = tensor_induce_ring_by_marks(&b, &a, &ht)?;
            let value = io::element_to_json(&image);
            if *check {
                let other = tensor_induce_ring(&b, &a, &ht)?;
                if other != image {
                    let text = format!("fixed-point formula {image} but realization gives {other}");
                    return Err(Failure::Verification(json!({ "marks": value, "realized": io::element_to_json(&other) }), text));
                }
            }
            Ok((value, image.to_string()))
        }
        Command::Verify { suite, cases, right } => verify(cli, suite, *cases, right),
    }
}

fn verify(cli: &Cli, suite: &str, cases: usize, right: &str) -> Outcome {
    if suite == "list" {
        let rows: Vec<Value> = SUITES.iter().map(|(n, d)| json!({ "suite": n, "checks": d })).collect();
        let text = SUITES.iter().map(|(n, d)| format!("{n}\t{d}")).collect::<Vec<_>>().join("\n");
        return Ok((Value::Array(rows), text));
    }
    let g = group(cli)?;
    let right = GroupRef::Name(right.to_string()).resolve(None)?;
    check_group(cli, &right)?;
    let cfg = SuiteConfig {
        group: g,
        right: Arc::new(right),
        n: modulus(cli)?,
        seed: cli.seed,
        cases,
    };
    let names: Vec<&str> = if suite == "all" {
        SUITES.iter().map(|(n, _)| *n).collect()
    } else {
        vec![suite]
    };
    let reports: Vec<SuiteReport> = names.iter().map(|n| run_suite(n, &cfg)).collect::<Result<_, _>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let text = reports
        .iter()
        .map(|r| {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let mut line = format!("{status} {} ({} checks)", r.suite, r.cases);
            for f in &r.failures {
                line.push_str(&format!("\n  failure: {f}"));
            }
            for n in &r.notes {
                line.push_str(&format!("\n  note: {n}"));
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n");
    let value = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("plain data")
    } else {
        serde_json::to_value(&reports).expect("plain data")
    };
    if passed {
        Ok((value, text))
    } else {
        Err(Failure::Verification(value, text))
    }
}
