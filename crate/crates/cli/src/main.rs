mod input;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leglab::bounds::{estimate_tau, Polys};
use leglab::corpus::{self, corpus_check, verify_unknotting};
use leglab::skein::{homfly_with, kauffman_with, SkeinConfig, SkeinError, DEFAULT_CROSSING_CAP};
use leglab::tau::TauError;
use leglab::*;
use serde_json::{json, Value};

use input::Input;

#[derive(Parser)]
#[command(name = "leglab", version, about = "Legendrian front invariants and tb bounds")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest diagram, after Reidemeister I/II reduction, for polynomial work.
    #[arg(long, global = true, default_value_t = DEFAULT_CROSSING_CAP)]
    crossing_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Orientation::Canonical)]
    orientation: Orientation,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Orientation {
    Canonical,
    Reversed,
}

#[derive(Subcommand)]
enum Command {
    /// Writhe, tb, r and cusp counts of a front.
    Invariants { path: PathBuf },
    /// PD code of a front with signature, determinant and Seifert genus bound.
    Pd { path: PathBuf },
    /// HOMFLY and Kauffman polynomials and the bounds they give.
    Polys { path: PathBuf },
    /// The full bound table; metadata comes from a corpus entry or the diagram.
    Bounds {
        path: PathBuf,
        #[arg(long)]
        unknotting: Option<i64>,
    },
    /// Tau estimate: the sandwich with `--unknotting`, or every rule the
    /// entry's metadata allows.
    Tau {
        path: PathBuf,
        #[arg(long)]
        unknotting: Option<i64>,
    },
    /// Change crossings of a PD code (or a front's PD code) and test for the
    /// unknot.
    VerifyUnknotting {
        path: PathBuf,
        /// Comma separated crossing indices, from 0. Defaults to the entry's
        /// certificate.
        #[arg(long, value_delimiter = ',')]
        switches: Option<Vec<usize>>,
    },
    /// Check every entry of a corpus directory.
    CorpusCheck {
        #[arg(env = "LEGLAB_CORPUS")]
        dir: Option<PathBuf>,
    },
}

struct Ctx {
    config: SkeinConfig,
    orientation: Orientation,
}

impl Ctx {
    fn orient(&self, front: &FrontDiagram) -> Result<OrientedFront, Error> {
        let f = orient(front)?;
        Ok(if self.orientation == Orientation::Reversed { f.reversed() } else { f })
    }
}

enum Outcome {
    Ok(Value),
    /// Printed, then reported as a failure.
    Failed(Value, Error),
}

fn invariants_json(f: &OrientedFront) -> Value {
    let mut v = serde_json::to_value(f.invariants()).expect("serializes");
    v["name"] = json!(f.name());
    v["crossings"] = json!(f.diagram().crossing_count());
    v
}

fn pd_json(name: &str, pd: &PDCode) -> Value {
    json!({
        "name": name,
        "pd": pd.to_string(),
        "crossings": pd.crossings,
        "writhe": pd.writhe(),
        "signature": signature(pd),
        "determinant": determinant(pd),
        "seifert_genus_upper": seifert_genus_upper(pd),
    })
}

fn polys(pd: &PDCode, config: &SkeinConfig) -> Result<(LaurentPoly2, LaurentPoly2), SkeinError> {
    Ok((homfly_with(pd, config)?.poly, kauffman_with(pd, config)?.poly))
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Outcome, Error> {
    let value = match cmd {
        Command::Invariants { path } => invariants_json(&ctx.orient(&input::read(&path)?.front()?)?),
        Command::Pd { path } => {
            let f = ctx.orient(&input::read(&path)?.front()?)?;
            pd_json(f.name(), &front_to_pd(&f))
        }
        Command::Polys { path } => {
            let f = ctx.orient(&input::read(&path)?.front()?)?;
            let (h, k) = polys(&front_to_pd(&f), &ctx.config)?;
            json!({
                "name": f.name(),
                "homfly": h.to_string(),
                "kauffman": k.to_string(),
                "homfly_bound": homfly_bound(&h)?,
                "kauffman_bound": kauffman_bound(&k)?,
            })
        }
        Command::Bounds { path, unknotting } => {
            let (front, meta) = front_and_metadata(&path)?;
            let f = ctx.orient(&front)?;
            let mut meta = meta.unwrap_or_else(|| KnotMetadata::from_pd(f.name(), &front_to_pd(&f)));
            if unknotting.is_some() {
                meta.unknotting_upper = unknotting;
            }
            let inv = f.invariants();
            let tau = estimate_tau(&inv, &meta)?;
            let computed = match polys(&front_to_pd(&f), &ctx.config) {
                Ok(p) => Some(p),
                Err(SkeinError::CapExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let p = computed.as_ref().map(|(h, k)| Polys { homfly: h, kauffman: k });
            serde_json::to_value(bound_table(&inv, &meta, tau.as_ref(), p)?).expect("serializes")
        }
        Command::Tau { path, unknotting } => {
            let (front, meta) = front_and_metadata(&path)?;
            let f = ctx.orient(&front)?;
            let inv = f.invariants();
            let est = match (unknotting, meta) {
                (Some(u), _) => sandwich(inv.tb, inv.r, u)?,
                (None, Some(meta)) => {
                    estimate_tau(&inv, &meta)?.ok_or(TauError::RuleNotApplicable("no rule applies".into()))?
                }
                (None, None) => {
                    return Err(TauError::RuleNotApplicable("pass --unknotting or a corpus entry".into()).into())
                }
            };
            let mut v = serde_json::to_value(&est).expect("serializes");
            v["tau"] = json!(est.value());
            v
        }
        Command::VerifyUnknotting { path, switches } => {
            let (pd, cert) = match input::read(&path)? {
                Input::Pd(pd) => (pd, None),
                Input::Front(f) => (front_to_pd(&ctx.orient(&f)?), None),
                Input::Entry(e) => (front_to_pd(&ctx.orient(&e.front)?), e.unknotting_certificate),
            };
            let switches = switches.or(cert).unwrap_or_default();
            serde_json::to_value(verify_unknotting(&pd, &switches, &ctx.config)?).expect("serializes")
        }
        Command::CorpusCheck { dir } => {
            let entries = match dir {
                Some(d) => corpus::load_dir(&d)?,
                None => corpus::shipped(),
            };
            let report = corpus_check(&entries, &ctx.config);
            let value = serde_json::to_value(&report).expect("serializes");
            return Ok(match report.first_failure() {
                Some(e) => Outcome::Failed(value, e.into()),
                None => Outcome::Ok(value),
            });
        }
    };
    Ok(Outcome::Ok(value))
}

fn front_and_metadata(path: &Path) -> Result<(FrontDiagram, Option<KnotMetadata>), Error> {
    Ok(match input::read(path)? {
        Input::Entry(e) => (e.front, Some(e.metadata)),
        other => (other.front()?, None),
    })
}

fn table(value: &Value) -> String {
    if let Ok(report) = serde_json::from_value::<corpus::CorpusReport>(value.clone()) {
        return report.to_table();
    }
    if let Ok(report) = serde_json::from_value::<BoundReport>(value.clone()) {
        let mut out = format!("{}  tb {}  r {}\n", report.name, report.tb, report.r);
        for b in &report.bounds {
            let v = b.value.map_or("-".into(), |v| v.to_string());
            let slack = b.slack.map_or("-".into(), |v| v.to_string());
            out += &format!("{:<10} {:>6} {:>6}  {}\n", b.name, v, slack, b.quantity);
        }
        return out;
    }
    let Value::Object(map) = value else { return format!("{value}\n") };
    map.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}: {s}\n"),
            other => format!("{k}: {other}\n"),
        })
        .collect()
}

fn emit(value: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializes")),
        Format::Table => print!("{}", table(value)),
    }
}

fn report_error(e: &Error) {
    eprintln!("{}", json!({ "error": { "code": e.code(), "message": e.to_string() } }));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        config: SkeinConfig { crossing_cap: cli.crossing_cap, ..SkeinConfig::default() },
        orientation: cli.orientation,
    };
    match run(cli.command, &ctx) {
        Ok(Outcome::Ok(v)) => {
            emit(&v, cli.format);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(v, e)) => {
            emit(&v, cli.format);
            report_error(&e);
            ExitCode::from(1)
        }
        Err(e) => {
            report_error(&e);
            ExitCode::from(2)
        }
    }
}
