//! Command-line front end.

pub mod dsl;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{
    automorphism_witness, canonical_form, classify_checked, equivalent_2step, identify, identify_real, Family,
    GeneralNilpotentParams, NonNilpotentParams, ThreeStepTriple, TwoStepTriple,
};
use crate::cohomology::hodge_table;
use crate::deform::{parse_grid, semicontinuity_report, sweep, DeformationFamily};
use crate::error::{Error, ErrorKind, Result};
use crate::exterior::{parse_rational, Rational, Scalar};
use crate::hermitian::{balanced_exists, metric_flags, sg_exists, HermitianParams};
use crate::liealg::{RealStructureEquations, StructureEquations};
use crate::spectral::FrolicherSequence;

pub use dsl::{parse_complex, print_complex};
pub use report::{EquivReport, Format, MetricsReport, Output, Report};

#[derive(Parser, Debug)]
#[command(name = "nilcomplex", version, about = "Complex structures on 6-dimensional nilpotent Lie algebras, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Underlying algebra and normal form.
    Classify(StructureArgs),
    /// Dolbeault numbers and Betti numbers.
    Cohomology(StructureArgs),
    /// Pages E_1..E_4 of the Frölicher spectral sequence.
    Frolicher(StructureArgs),
    /// Metric flags and existence of balanced and strongly Gauduchon metrics.
    Metrics {
        #[command(flatten)]
        structure: StructureArgs,
        /// r2,s2,t2,u,v,z
        #[arg(long)]
        metric: Option<String>,
    },
    /// Equivalence of two non-abelian two-step triples rho,lambda,D.
    Equiv {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Evaluate a deformation family over parameters.
    Sweep {
        #[arg(long)]
        deformation: String,
        /// lo:hi:step
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Compare E_r dimensions at a parameter with nearby ones.
    Semicont {
        #[arg(long)]
        deformation: String,
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        nearby: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    TwoStep,
    ThreeStep,
    Nilpotent,
    NonNilpotent,
    Parallelizable,
}

#[derive(Args, Debug, Clone, Default)]
pub struct StructureArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub rho: Option<u8>,
    #[arg(long)]
    pub eps: Option<u8>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long = "C", allow_hyphen_values = true)]
    pub cap_c: Option<String>,
    #[arg(long = "c", allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long = "D", allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Sign of the non-nilpotent family: + or -.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<String>,
    /// File with Salamon notation or complex equations.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline Salamon notation or complex equations.
    #[arg(long, allow_hyphen_values = true)]
    pub equations: Option<String>,
}

/// A structure given on the command line.
#[derive(Clone, Debug)]
pub enum Input {
    Family(Family),
    Complex(StructureEquations),
    Real(RealStructureEquations),
}

impl Input {
    pub fn equations(&self) -> Result<StructureEquations> {
        match self {
            Input::Family(f) => f.equations(),
            Input::Complex(e) => Ok(e.clone()),
            Input::Real(_) => Err(Error::Domain("Salamon notation fixes no complex structure; give complex equations".into())),
        }
    }
}

fn rational(s: &Option<String>, name: &str) -> Result<Rational> {
    match s {
        None => Ok(Rational::from_integer(0.into())),
        Some(v) => parse_rational(v).ok_or_else(|| Error::parse(0, format!("--{name}: '{v}' is not a rational number"))),
    }
}

fn scalar(s: &Option<String>, name: &str) -> Result<Scalar> {
    match s {
        None => Ok(Scalar::from_int(0)),
        Some(v) => v.parse().map_err(|_| Error::parse(0, format!("--{name}: '{v}' is not a Gaussian rational"))),
    }
}

/// Equations in either notation; Salamon notation starts with '('.
pub fn parse_any(text: &str) -> Result<Input> {
    if text.trim_start().starts_with('(') {
        Ok(Input::Real(RealStructureEquations::from_salamon(text.trim())?))
    } else {
        Ok(Input::Complex(parse_complex(text)?))
    }
}

impl StructureArgs {
    pub fn resolve(&self) -> Result<Input> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))?;
            return parse_any(&text);
        }
        if let Some(text) = &self.equations {
            return parse_any(text);
        }
        let rho = self.rho.unwrap_or(1);
        let eps = self.eps.unwrap_or(0);
        let family = match self.family {
            None => return Err(Error::parse(0, "give --family, --equations or --input")),
            Some(FamilyKind::TwoStep) => Family::TwoStep(TwoStepTriple::new(rho, rational(&self.lambda, "lambda")?, scalar(&self.d, "D")?)?),
            Some(FamilyKind::ThreeStep) => Family::ThreeStep(ThreeStepTriple::new(rho, scalar(&self.b, "B")?, rational(&self.c, "c")?)?),
            Some(FamilyKind::Nilpotent) => Family::General(GeneralNilpotentParams {
                eps,
                rho,
                a: scalar(&self.a, "A")?,
                b: scalar(&self.b, "B")?,
                c: scalar(&self.cap_c, "C")?,
                d: scalar(&self.d, "D")?,
            }),
            Some(FamilyKind::Parallelizable) => Family::General(GeneralNilpotentParams::parallelizable(rho)),
            Some(FamilyKind::NonNilpotent) => {
                let positive = match self.sign.as_deref() {
                    None | Some("+") => true,
                    Some("-") => false,
                    Some(s) => return Err(Error::parse(0, format!("--sign must be + or -, got '{s}'"))),
                };
                Family::NonNilpotent(NonNilpotentParams { eps, positive })
            }
        };
        family.validate()?;
        Ok(Input::Family(family))
    }
}

fn classify_report(input: &Input) -> Result<Report> {
    let mut r = Report::default();
    match input {
        Input::Family(f) => {
            r.algebra_class = Some(classify_checked(f)?);
            r.triple = Some(match canonical_form(f) {
                Ok(c) => c.to_string(),
                Err(Error::Unrepresentable(_)) => f.to_string(),
                Err(e) => return Err(e),
            });
            r.equations = Some(print_complex(&f.equations()?));
        }
        Input::Complex(e) => {
            r.algebra_class = Some(identify(e)?);
            r.equations = Some(print_complex(e));
        }
        Input::Real(real) => r.algebra_class = Some(identify_real(real)?),
    }
    Ok(r)
}

/// Class and parameters only, for the commands that add tables.
fn base_report(input: &Input) -> Result<Report> {
    Ok(match input {
        Input::Family(f) => Report { algebra_class: Some(classify_checked(f)?), triple: Some(f.to_string()), ..Report::default() },
        Input::Complex(e) => Report { algebra_class: Some(identify(e)?), ..Report::default() },
        Input::Real(_) => Report::default(),
    })
}

/// `r2,s2,t2,u,v,z` as accepted by `--metric`.
pub fn parse_metric(s: &str) -> Result<HermitianParams> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 6 {
        return Err(Error::parse(0, "--metric needs six values r2,s2,t2,u,v,z"));
    }
    let r = |k: usize| parse_rational(parts[k]).ok_or_else(|| Error::parse(0, format!("'{}' is not rational", parts[k])));
    let c = |k: usize| parts[k].parse::<Scalar>();
    Ok(HermitianParams { r2: r(0)?, s2: r(1)?, t2: r(2)?, u: c(3)?, v: c(4)?, z: c(5)? })
}

fn parse_triple(s: &str) -> Result<TwoStepTriple> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::parse(0, format!("'{s}' is not rho,lambda,D")));
    }
    let rho: u8 = parts[0].trim().parse().map_err(|_| Error::parse(0, format!("'{}' is not 0 or 1", parts[0])))?;
    let lambda = parse_rational(parts[1]).ok_or_else(|| Error::parse(0, format!("'{}' is not rational", parts[1])))?;
    TwoStepTriple::new(rho, lambda, parts[2].parse()?)
}

fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Unsupported(_)) | Err(Error::Unrepresentable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn metrics_report(input: &Input, metric: Option<&HermitianParams>) -> Result<MetricsReport> {
    let mut m = MetricsReport::default();
    if let Some(p) = metric {
        m.flags = Some(metric_flags(&input.equations()?, p)?);
    }
    if let Input::Family(f) = input {
        if let Some(sg) = optional(sg_exists(f))? {
            m.sg_exists = Some(sg.exists);
            m.witness = sg.witness;
        }
        if let Some(b) = optional(balanced_exists(f))? {
            m.balanced_exists = Some(b.exists);
            if b.witness != m.witness {
                m.balanced_witness = b.witness;
            }
        }
    }
    Ok(m)
}

/// Every section of the report for one structure.
pub fn full_report(input: &Input, metric: Option<&HermitianParams>) -> Result<Report> {
    let mut r = classify_report(input)?;
    let eqs = input.equations()?;
    let seq = FrolicherSequence::new(&eqs)?;
    seq.verify()?;
    let t = hodge_table(&eqs)?;
    r.hodge = Some(t.hodge);
    r.betti = Some(t.betti);
    r.frolicher = Some((1..=4).map(|k| Ok((format!("E{k}"), seq.dims(k)?))).collect::<Result<_>>()?);
    r.behaviour = Some(seq.behaviour().to_string());
    r.degeneration_step = Some(seq.degeneration_step());
    r.metrics = Some(metrics_report(input, metric)?);
    Ok(r)
}

fn scalars(list: &[String]) -> Result<Vec<Scalar>> {
    list.iter().map(|s| s.parse::<Scalar>()).collect()
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Classify(s) => Ok(Output::Report(classify_report(&s.resolve()?)?)),
        Command::Cohomology(s) => {
            let input = s.resolve()?;
            let t = hodge_table(&input.equations()?)?;
            Ok(Output::Report(Report { hodge: Some(t.hodge), betti: Some(t.betti), ..base_report(&input)? }))
        }
        Command::Frolicher(s) => {
            let input = s.resolve()?;
            let seq = FrolicherSequence::new(&input.equations()?)?;
            seq.verify()?;
            let pages = (1..=4).map(|r| Ok((format!("E{r}"), seq.dims(r)?))).collect::<Result<BTreeMap<_, _>>>()?;
            Ok(Output::Report(Report {
                frolicher: Some(pages),
                behaviour: Some(seq.behaviour().to_string()),
                degeneration_step: Some(seq.degeneration_step()),
                ..base_report(&input)?
            }))
        }
        Command::Metrics { structure, metric } => {
            let input = structure.resolve()?;
            let metric = metric.as_deref().map(parse_metric).transpose()?;
            let m = metrics_report(&input, metric.as_ref())?;
            Ok(Output::Report(Report { metrics: Some(m), ..base_report(&input)? }))
        }
        Command::Equiv { lhs, rhs } => {
            let (a, b) = (parse_triple(lhs)?, parse_triple(rhs)?);
            let equivalent = equivalent_2step(&a, &b)?;
            let witness = if equivalent && !a.d.is_zero_scalar() {
                optional(automorphism_witness(&a, &b))?.map(|w| {
                    [("a", w.a), ("b", w.b), ("c", w.c), ("e", w.e), ("f", w.f)]
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .collect()
                })
            } else {
                None
            };
            Ok(Output::Equiv(EquivReport { equivalent, witness }))
        }
        Command::Sweep { deformation, grid, params } => {
            let fam: DeformationFamily = deformation.parse()?;
            let mut ps = scalars(params)?;
            if let Some(g) = grid {
                ps.extend(parse_grid(g)?);
            }
            if ps.is_empty() {
                return Err(Error::parse(0, "give --grid or --params"));
            }
            Ok(Output::Sweep(sweep(&fam, &ps)))
        }
        Command::Semicont { deformation, center, nearby } => {
            let fam: DeformationFamily = deformation.parse()?;
            let c: Scalar = center.parse()?;
            Ok(Output::Semicontinuity(semicontinuity_report(&fam, &c, &scalars(nearby)?)?))
        }
    }
}

trait ZeroScalar {
    fn is_zero_scalar(&self) -> bool;
}

impl ZeroScalar for Scalar {
    fn is_zero_scalar(&self) -> bool {
        num::Zero::is_zero(self)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Parse => 2,
        ErrorKind::Domain => 3,
        ErrorKind::Alarm => 4,
    }
}

/// Runs the CLI and returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&cli.command).and_then(|out| out.render(cli.format));
    match result {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    3
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
