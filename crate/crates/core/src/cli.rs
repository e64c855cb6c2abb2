//! Command-line front end. `main.rs` only parses arguments and maps the
//! outcome to an exit status.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bimod::{build_ccx, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graded::GradedCcx;
use crate::hecke::{export_multisemigroup, rsk, CoxeterGroup, CoxeterType};
use crate::mscell::MultiSemigroup;
use crate::report::{Record, Report};
use crate::suite;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Parsed command line.
#[derive(Clone, Debug, Parser)]
#[command(
    name = "fiatcell",
    version,
    about = "Cells, C_{C,X} and graded invariants over ℚ"
)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized isomorphism tests.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Either a bundled fixture name or a file on disk.
#[derive(Clone, Debug, Args)]
pub struct Source {
    /// Bundled fixture, e.g. `b2`, `x3local`, `zigzagA2-graded`.
    #[arg(long, conflicts_with = "input")]
    pub fixture: Option<String>,
    /// Input file (`.ms`, `.alg` or `.ccx`).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Cells of a multisemigroup.
    Cells(Source),
    /// Multisemigroup of the Kazhdan–Lusztig basis at v = 1.
    HeckeExport {
        #[arg(long = "type")]
        kind: String,
    },
    /// Robinson–Schensted tableaux of S_n and the induced cells.
    Rsk { n: usize },
    /// Structure of an algebra.
    AlgebraCheck(Source),
    /// Multisemigroup of C_{C,X}.
    CcxBuild(Source),
    /// Run the checks that apply to an input.
    Verify(Source),
    /// Graded checks on C_{C,X}.
    GradedVerify(Source),
    /// Every acceptance check on the bundled fixtures.
    ReportAll,
}

/// Output of a command and whether every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn report(r: &Report, format: Format) -> Self {
        Outcome {
            output: match format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json(),
            },
            passed: r.passed(),
        }
    }
}

enum Loaded {
    Ms(Box<MultiSemigroup>),
    Alg(std::sync::Arc<crate::algebra::FinDimAlgebra>),
    Ccx(crate::bimod::CcxData),
}

struct Input {
    /// Bundled fixture stem, if any.
    fixture: Option<String>,
    label: String,
    loaded: Loaded,
}

fn extension(name: &str) -> &str {
    Path::new(name)
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or("")
}

fn load(src: &Source) -> Result<Input> {
    match (&src.fixture, &src.input) {
        (Some(name), _) => {
            let file = fixtures::resolve_name(name)?;
            let text = fixtures::text(file)?;
            let stem = file.rsplit_once('.').map_or(file, |(s, _)| s).to_string();
            let loaded = match extension(file) {
                "ms" => Loaded::Ms(Box::new(MultiSemigroup::parse(text)?)),
                "alg" => Loaded::Alg(fixtures::algebra(file)?),
                _ => Loaded::Ccx(fixtures::ccx_data(file)?),
            };
            Ok(Input {
                fixture: Some(stem),
                label: file.to_string(),
                loaded,
            })
        }
        (None, Some(path)) => {
            let label = path.display().to_string();
            let with_path = |e: Error| match e {
                Error::Parse {
                    line,
                    column,
                    message,
                } => Error::Parse {
                    line,
                    column,
                    message: format!("{label}: {message}"),
                },
                other => other,
            };
            let loaded = match extension(&label) {
                "ms" => Loaded::Ms(Box::new(
                    MultiSemigroup::parse(&fixtures::read(path)?).map_err(with_path)?,
                )),
                "alg" => Loaded::Alg(std::sync::Arc::new(
                    crate::algebra::FinDimAlgebra::parse(&fixtures::read(path)?)
                        .map_err(with_path)?,
                )),
                "ccx" => Loaded::Ccx(fixtures::ccx_from_path(path).map_err(with_path)?),
                other => {
                    return Err(Error::Argument(format!(
                        "{label}: unknown extension `{other}` (expected ms, alg or ccx)"
                    )))
                }
            };
            Ok(Input {
                fixture: None,
                label,
                loaded,
            })
        }
        (None, None) => Err(Error::Argument(
            "either --fixture or --input is required".into(),
        )),
    }
}

#[derive(Serialize)]
struct MsJson<'a> {
    objects: &'a [String],
    morphisms: &'a [crate::mscell::OneMorphism],
    star: Vec<(&'a str, &'a str)>,
    products: Vec<ProductJson<'a>>,
}

#[derive(Serialize)]
struct ProductJson<'a> {
    left: &'a str,
    right: &'a str,
    result: Vec<(&'a str, u64)>,
}

fn render_ms(ms: &MultiSemigroup, format: Format) -> String {
    match format {
        Format::Text => ms.to_text(),
        Format::Json => {
            let json = MsJson {
                objects: ms.objects(),
                morphisms: ms.morphisms(),
                star: ms
                    .sorted_ids()
                    .into_iter()
                    .map(|f| (ms.name(f), ms.name(ms.star(f))))
                    .collect(),
                products: ms
                    .products()
                    .iter()
                    .map(|(&(f, g), res)| ProductJson {
                        left: ms.name(f),
                        right: ms.name(g),
                        result: res.iter().map(|(&h, &k)| (ms.name(h), k)).collect(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&json).expect("multisemigroup serializes") + "\n"
        }
    }
}

fn want_ms(input: Input) -> Result<(Option<String>, MultiSemigroup)> {
    match input.loaded {
        Loaded::Ms(ms) => Ok((input.fixture, *ms)),
        Loaded::Ccx(data) => Ok((input.fixture, build_ccx(&data)?.ms)),
        Loaded::Alg(_) => Err(Error::Argument(format!(
            "{}: expected a multisemigroup",
            input.label
        ))),
    }
}

fn want_ccx(input: Input) -> Result<crate::bimod::Ccx> {
    match input.loaded {
        Loaded::Ccx(data) => build_ccx(&data),
        Loaded::Alg(a) => build_ccx(&crate::bimod::CcxData::single(a)?),
        Loaded::Ms(_) => Err(Error::Argument(format!(
            "{}: expected a .ccx or .alg input",
            input.label
        ))),
    }
}

fn rsk_report(n: usize) -> Result<Report> {
    if !(2..=5).contains(&n) {
        return Err(Error::Argument(format!("rsk needs 2 ≤ n ≤ 5, got {n}")));
    }
    let g = CoxeterGroup::with_bound(CoxeterType::A(n - 1), 120)?;
    let mut rep = Report::new(format!("RSK for S{n}"));
    let show = |t: &Vec<Vec<usize>>| {
        t.iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    };
    for w in 0..g.len() {
        let perm = g.one_line(w).expect("type A");
        let pair = rsk(&perm)?;
        rep.push(
            Record::new(format!("rsk {}", g.name(w)), "Robinson–Schensted")
                .value(
                    "one_line",
                    perm.iter()
                        .map(|x| (x + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(""),
                )
                .value("P", show(&pair.p))
                .value("Q", show(&pair.q))
                .value("shape", format!("{:?}", pair.shape())),
        );
    }
    if n <= 4 {
        rep.extend(suite::type_a_records(n)?);
    }
    Ok(rep)
}

/// Executes one command.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let fmt = cfg.format;
    match &cfg.command {
        Command::HeckeExport { kind } => {
            let kind: CoxeterType = kind.parse()?;
            Ok(Outcome {
                output: render_ms(&export_multisemigroup(kind)?, fmt),
                passed: true,
            })
        }
        Command::Rsk { n } => Ok(Outcome::report(&rsk_report(*n)?, fmt)),
        Command::Cells(src) => {
            let input = load(src)?;
            let label = input.label.clone();
            let (_, ms) = want_ms(input)?;
            let mut rep = Report::new(format!("cells of {label}"));
            rep.extend(suite::cell_records(&ms)?);
            Ok(Outcome::report(&rep, fmt))
        }
        Command::AlgebraCheck(src) => {
            let input = load(src)?;
            let mut rep = Report::new(format!("algebra check {}", input.label));
            match input.loaded {
                Loaded::Alg(a) => rep.extend(suite::algebra_records(&a)?),
                Loaded::Ccx(data) => {
                    for o in &data.objects {
                        rep.extend(suite::algebra_records(&o.algebra)?);
                    }
                }
                Loaded::Ms(_) => {
                    return Err(Error::Argument(format!(
                        "{}: expected an algebra",
                        input.label
                    )))
                }
            }
            Ok(Outcome::report(&rep, fmt))
        }
        Command::CcxBuild(src) => {
            let ccx = want_ccx(load(src)?)?;
            Ok(Outcome {
                output: render_ms(&ccx.ms, fmt),
                passed: true,
            })
        }
        Command::Verify(src) => Ok(Outcome::report(&verify(src, cfg.seed)?, fmt)),
        Command::GradedVerify(src) => {
            let input = load(src)?;
            let label = input.label.clone();
            let g = GradedCcx::new(want_ccx(input)?)?;
            let mut rep = Report::new(format!("graded verify {label}"));
            rep.extend(g.verify_all(cfg.seed)?);
            Ok(Outcome::report(&rep, fmt))
        }
        Command::ReportAll => Ok(Outcome::report(&suite::report_all(cfg.seed)?, fmt)),
    }
}

fn verify(src: &Source, seed: u64) -> Result<Report> {
    let input = load(src)?;
    let mut rep = Report::new(format!("verify {}", input.label));
    let fixture = input.fixture.clone();
    match input.loaded {
        Loaded::Ms(ms) => {
            rep.extend(suite::cell_records(&ms)?);
            match fixture.as_deref() {
                Some("b2") => rep.extend(suite::b2_records(&ms)?),
                Some("s3") => rep.extend(suite::type_a_records(3)?),
                Some("s4") => rep.extend(suite::type_a_records(4)?),
                _ => {}
            }
        }
        Loaded::Alg(a) => {
            rep.extend(suite::algebra_records(&a)?);
            if fixture.as_deref() == Some("x3local") {
                rep.extend(suite::x3local_records(&a)?);
            }
        }
        Loaded::Ccx(data) => {
            let ccx = build_ccx(&data)?;
            rep.extend(suite::ccx_records(&ccx, seed)?);
            match fixture.as_deref() {
                Some("x3local") => rep.extend(suite::x3local_records(ccx.algebra(0))?),
                Some("exterior2") => rep.extend(suite::exterior_records(&ccx)?),
                Some("sl2-weights") => rep.extend(suite::projective_simple_records(&ccx)?),
                _ => {}
            }
        }
    }
    Ok(rep)
}

/// Exit status for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        2
    } else {
        1
    }
}
