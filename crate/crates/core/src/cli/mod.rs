//! Command line front end.
//!
//! Exit codes: 0 when everything passed, 1 when a verification failed or a
//! computation was rejected, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::complex::{complete, random_complex, whitney, Geometry};
use crate::energy::EnergizedComplex;
use crate::error::{Error, Result};
use crate::io::{self, SCHEMA};
use crate::matrices::{build_g, build_l, checkerboard, green_star_product};
use crate::rings::sample::{
    sample_units, symbolic_generators, EnergyAssignment, SymbolicRing, UnitFamily,
};
use crate::rings::{FreeElem, Gaussian, Octonion, Poly, Quaternion, RingTag, Symbols, Tagged};
use crate::spectral::{self, signature_counts, SpectralReport, ToComplex};

pub mod verify;

use verify::{parse_suite, verdicts_json, Status};

#[derive(Parser, Debug)]
#[command(
    name = "energeia",
    version,
    about = "Connection and Green matrices of energized simplicial complexes"
)]
pub struct Cli {
    /// Seed for random generators and samplers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format for matrices and tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a geometry.
    Gen(GenArgs),
    /// Attach an energy function to a geometry.
    Energize(EnergizeArgs),
    /// Emit L, g, S or g*L.
    Matrix(MatrixArgs),
    /// Report energies and curvatures.
    Energy(EnergyArgs),
    /// Eigenvalues, signature, zeta samples and flows.
    Spectral(SpectralArgs),
    /// Run theorem and corollary checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Complete,
    Whitney,
    Random,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Vertex count for complete complexes.
    #[arg(long)]
    n: Option<usize>,
    /// Edges for Whitney complexes, such as `1-2,1-3,2-3`.
    #[arg(long)]
    edges: Option<String>,
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Where the energy comes from: a file or a sampler.
#[derive(Args, Debug)]
struct Source {
    /// Geometry file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Energy file.
    #[arg(long, conflicts_with = "sampler")]
    h: Option<PathBuf>,
    /// One of symbolic, symbolic_free, pm1, topological, u1, u1_exact,
    /// unit_quaternion, unit_quaternion_exact, ones.
    #[arg(long)]
    sampler: Option<String>,
    /// Variable names for symbolic samplers, such as `x,y,z`.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Args, Debug)]
struct EnergizeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    source: Source,
    /// Comma separated subset of L, g, S, gstarL.
    #[arg(long, default_value = "L,g")]
    emit: String,
    /// Directory receiving one file per matrix; stdout otherwise.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EnergyArgs {
    #[command(flatten)]
    source: Source,
    /// Comma separated subset of chi, omega, omega3, curvature.
    #[arg(long, default_value = "chi,omega")]
    report: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SpectralArgs {
    #[command(flatten)]
    source: Source,
    /// Comma separated complex arguments, such as `0,1,0.5+2i`.
    #[arg(long)]
    zeta: Option<String>,
    #[arg(long)]
    flow_steps: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the zeta samples as CSV.
    #[arg(long)]
    zeta_csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Comma separated theorem ids, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the CLI with the given arguments, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    if let Some(n) = cli.threads {
        // A pool built earlier in the same process is kept.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_)
                | Error::Io(_)
                | Error::InvalidLabel(_)
                | Error::InvalidSimplex
                | Error::RingMismatch(..) => 2,
                _ => 1,
            }
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => io::write_text(p, text),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen(a) => {
            let g = generate(a, cli.seed)?;
            emit(
                out,
                a.out.as_deref(),
                &io::to_pretty(&io::geometry_to_json(&g)),
            )?;
        }
        Command::Energize(a) => {
            let (g, h) = load(&a.source, cli.seed)?;
            emit(
                out,
                a.out.as_deref(),
                &io::to_pretty(&io::energy_to_json(&g, &h)),
            )?;
        }
        Command::Matrix(a) => matrix(a, cli, out)?,
        Command::Energy(a) => {
            let (g, h) = load(&a.source, cli.seed)?;
            let items = split(&a.report);
            let report = energy_report(erase(g, &h)?.as_ref(), h.symbols(), &items)?;
            emit(out, a.out.as_deref(), &io::to_pretty(&report))?;
        }
        Command::Spectral(a) => spectral_command(a, cli, out)?,
        Command::Verify(a) => {
            let suite = parse_suite(&a.suite)?;
            let (g, h) = load(&a.source, cli.seed)?;
            let outcomes = verify::verify(&g, &h, &suite)?;
            emit(
                out,
                a.out.as_deref(),
                &io::to_pretty(&verdicts_json(&outcomes)),
            )?;
            if outcomes.iter().any(|o| o.status == Status::Fail) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn split(s: &str) -> Vec<String> {
    s.split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn generate(a: &GenArgs, seed: u64) -> Result<Geometry> {
    let missing =
        |flag: &str| Error::Parse(format!("--kind {:?} needs --{flag}", a.kind).to_lowercase());
    Ok(match a.kind {
        GenKind::Complete => complete(a.n.ok_or_else(|| missing("n"))?),
        GenKind::Whitney => {
            let text = a.edges.as_deref().ok_or_else(|| missing("edges"))?;
            let edges = text
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|e| {
                    let (u, v) = e
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("bad edge '{e}'")))?;
                    let p = |t: &str| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad edge '{e}'")))
                    };
                    Ok((p(u)?, p(v)?))
                })
                .collect::<Result<Vec<_>>>()?;
            whitney(&edges)
        }
        GenKind::Random => {
            if !(0.0..=1.0).contains(&a.density) {
                return Err(Error::Parse(format!(
                    "density {} outside [0, 1]",
                    a.density
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_complex(
                &mut rng,
                a.vertices.ok_or_else(|| missing("vertices"))?,
                a.density,
            )
        }
    })
}

fn load(src: &Source, seed: u64) -> Result<(Geometry, EnergyAssignment)> {
    let g = io::read_geometry(&src.input)?;
    let h = match (&src.h, &src.sampler) {
        (Some(path), _) => io::read_energy(&g, path)?,
        (None, Some(sampler)) => {
            let names = src.vars.as_deref().map(|v| Symbols::new(split(v)));
            if let Some(n) = &names {
                if n.len() != g.len() {
                    return Err(Error::Parse(format!(
                        "{} names for {} simplices",
                        n.len(),
                        g.len()
                    )));
                }
            }
            match sampler.as_str() {
                "symbolic" | "symbolic_poly" => symbolic_generators(&g, SymbolicRing::Poly, names),
                "symbolic_free" => symbolic_generators(&g, SymbolicRing::Free, names),
                "ones" => EnergyAssignment::from_typed(
                    vec![BigRational::from_integer(1.into()); g.len()],
                    Symbols::default(),
                ),
                family => sample_units(&g, family.parse::<UnitFamily>()?, seed),
            }
        }
        (None, None) => return Err(Error::Parse("either --h or --sampler is required".into())),
    };
    Ok((g, h))
}

/// The energized complex in its concrete ring, behind a ring-erased view.
fn erase(g: Geometry, h: &EnergyAssignment) -> Result<Box<dyn ErasedComplex>> {
    Ok(match h.tag() {
        RingTag::Rational => Box::new(EnergizedComplex::<BigRational>::from_assignment(g, h)?),
        RingTag::Gaussian => Box::new(EnergizedComplex::<Gaussian>::from_assignment(g, h)?),
        RingTag::Complex64 => Box::new(EnergizedComplex::<Complex64>::from_assignment(g, h)?),
        RingTag::Quaternion => {
            Box::new(EnergizedComplex::<Quaternion<BigRational>>::from_assignment(g, h)?)
        }
        RingTag::Quaternion64 => {
            Box::new(EnergizedComplex::<Quaternion<f64>>::from_assignment(g, h)?)
        }
        RingTag::Octonion => Box::new(EnergizedComplex::<Octonion>::from_assignment(g, h)?),
        RingTag::Poly => Box::new(EnergizedComplex::<Poly>::from_assignment(g, h)?),
        RingTag::Free => Box::new(EnergizedComplex::<FreeElem>::from_assignment(g, h)?),
    })
}

/// Ring-erased view of an energized complex for the report commands.
pub trait ErasedComplex {
    fn geometry(&self) -> &Geometry;
    fn ring(&self) -> RingTag;
    fn chi_json(&self, s: &Symbols) -> Value;
    fn omega_json(&self, s: &Symbols) -> Value;
    fn omega3_json(&self, s: &Symbols) -> Result<Value>;
    fn curvature_json(&self, s: &Symbols) -> Value;
    fn matrix_json(&self, name: &str, s: &Symbols) -> Result<Value>;
    fn matrix_csv(&self, name: &str) -> Result<String>;
}

impl<R: Tagged> ErasedComplex for EnergizedComplex<R> {
    fn geometry(&self) -> &Geometry {
        EnergizedComplex::geometry(self)
    }

    fn ring(&self) -> RingTag {
        R::TAG
    }

    fn chi_json(&self, s: &Symbols) -> Value {
        R::into_value(self.chi(None).expect("whole geometry")).to_json(s)
    }

    fn omega_json(&self, s: &Symbols) -> Value {
        self.omega_quadratic().into_value().to_json(s)
    }

    fn omega3_json(&self, s: &Symbols) -> Result<Value> {
        Ok(self.omega_cubic()?.into_value().to_json(s))
    }

    fn curvature_json(&self, s: &Symbols) -> Value {
        let mut m = Map::new();
        for x in EnergizedComplex::geometry(self).simplices() {
            m.insert(
                x.to_string(),
                self.curvature(x).expect("member").into_value().to_json(s),
            );
        }
        Value::Object(m)
    }

    fn matrix_json(&self, name: &str, s: &Symbols) -> Result<Value> {
        Ok(io::matrix_to_json(
            name,
            &named_matrix(self, name)?,
            EnergizedComplex::geometry(self),
            s,
        ))
    }

    fn matrix_csv(&self, name: &str) -> Result<String> {
        io::matrix_to_csv(&named_matrix(self, name)?, EnergizedComplex::geometry(self))
    }
}

fn named_matrix<R: Tagged>(
    e: &EnergizedComplex<R>,
    name: &str,
) -> Result<crate::matrices::Matrix<R>> {
    match name {
        "L" => Ok(build_l(e)),
        "g" => Ok(build_g(e)),
        "S" => Ok(checkerboard(e)),
        "gstarL" => green_star_product(e),
        other => Err(Error::Parse(format!(
            "unknown matrix '{other}' (expected L, g, S or gstarL)"
        ))),
    }
}

fn energy_report(e: &dyn ErasedComplex, s: &Symbols, items: &[String]) -> Result<Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("ring".into(), json!(e.ring().as_str()));
    for item in items {
        let v = match item.as_str() {
            "chi" => e.chi_json(s),
            "omega" => e.omega_json(s),
            "omega3" => e.omega3_json(s)?,
            "curvature" => e.curvature_json(s),
            other => return Err(Error::Parse(format!("unknown report item '{other}'"))),
        };
        m.insert(item.clone(), v);
    }
    Ok(Value::Object(m))
}

fn matrix(a: &MatrixArgs, cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let (g, h) = load(&a.source, cli.seed)?;
    let names = split(&a.emit);
    let format = cli.format;
    let e = erase(g, &h)?;
    let docs = names
        .iter()
        .map(|n| match format {
            Format::Json => e.matrix_json(n, h.symbols()).map(|v| io::to_pretty(&v)),
            Format::Csv => e.matrix_csv(n),
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = match format {
        Format::Json => "json",
        Format::Csv => "csv",
    };
    match &a.out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            for (name, doc) in names.iter().zip(&docs) {
                io::write_text(&dir.join(format!("{name}.{ext}")), doc)?;
            }
        }
        None => {
            for doc in &docs {
                out.write_all(doc.as_bytes())?;
            }
        }
    }
    Ok(())
}

fn complex_json(z: Complex64) -> Value {
    json!({"re": finite(z.re), "im": finite(z.im)})
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn spectrum_json(r: &SpectralReport) -> Value {
    json!({
        "eigenvalues": r.eigenvalues,
        "positive": r.positive,
        "negative": r.negative,
        "zero": r.zero,
    })
}

/// `re(s),im(s),re(zeta),im(zeta)` rows.
pub fn zeta_csv(samples: &[(Complex64, Complex64)]) -> String {
    let mut s = String::from("re(s),im(s),re(ζ),im(ζ)\n");
    for (z, v) in samples {
        s.push_str(&format!("{},{},{},{}\n", z.re, z.im, v.re, v.im));
    }
    s
}

fn spectral_typed<R: ToComplex + Tagged>(
    e: &EnergizedComplex<R>,
    a: &SpectralArgs,
) -> Result<(Value, Vec<(Complex64, Complex64)>)> {
    let s_values = a
        .zeta
        .as_deref()
        .map(io::parse_complex_list)
        .transpose()?
        .unwrap_or_default();
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("ring".into(), json!(R::TAG.as_str()));
    doc.insert("L".into(), spectrum_json(&spectral::spectrum(&build_l(e))?));
    doc.insert("g".into(), spectrum_json(&spectral::spectrum(&build_g(e))?));
    let heat = spectral::heat_operator(e)?;
    doc.insert("H".into(), json!({"eigenvalues": heat.values}));
    let samples: Vec<(Complex64, Complex64)> = s_values
        .par_iter()
        .map(|&s| (s, spectral::zeta_values(&heat.values, s)))
        .collect();
    doc.insert(
        "zeta".into(),
        json!(samples
            .iter()
            .map(|(s, z)| json!({"s": complex_json(*s), "value": complex_json(*z)}))
            .collect::<Vec<_>>()),
    );
    if let Some(steps) = a.flow_steps {
        let start = EnergizedComplex::new(
            e.geometry().clone(),
            e.h().iter().map(ToComplex::to_c64).collect(),
        )?;
        let trajectory = spectral::nonlinear_flow(&start, steps)?;
        doc.insert(
            "flow".into(),
            json!(trajectory
                .iter()
                .map(|u| u.iter().map(|&z| complex_json(z)).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        );
    }
    Ok((Value::Object(doc), samples))
}

fn spectral_command(a: &SpectralArgs, cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let (g, h) = load(&a.source, cli.seed)?;
    let (doc, samples) = match h.tag() {
        RingTag::Rational => {
            let e = EnergizedComplex::<BigRational>::from_assignment(g, &h)?;
            let (mut doc, samples) = spectral_typed(&e, a)?;
            if let Ok(sig) = signature_counts(&e) {
                doc["signature"] = json!({
                    "h": [sig.h.0, sig.h.1],
                    "L": [sig.l.0, sig.l.1],
                    "g": [sig.g.0, sig.g.1],
                    "agrees": sig.agrees(),
                });
            }
            (doc, samples)
        }
        RingTag::Gaussian => {
            spectral_typed(&EnergizedComplex::<Gaussian>::from_assignment(g, &h)?, a)?
        }
        RingTag::Complex64 => {
            spectral_typed(&EnergizedComplex::<Complex64>::from_assignment(g, &h)?, a)?
        }
        other => {
            return Err(Error::UnsupportedRing(format!(
                "{other} (spectral needs a real or complex ring)"
            )))
        }
    };
    if let Some(path) = &a.zeta_csv {
        io::write_text(path, &zeta_csv(&samples))?;
    }
    match cli.format {
        Format::Json => emit(out, a.out.as_deref(), &io::to_pretty(&doc))?,
        Format::Csv => emit(out, a.out.as_deref(), &zeta_csv(&samples))?,
    }
    Ok(())
}
