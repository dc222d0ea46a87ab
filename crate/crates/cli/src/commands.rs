use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;
use tridirep::{
    build_representation, family_compare, jacobi_matrix, quadrature, spectrum, truncation_conditions_with,
    AlgebraParams, FamilySpec, GaugeChoice, MonicRecurrence, Representation, ResidualWindow, TruncationKind,
    TruncationSearch,
};

use crate::args::{
    BuildArgs, Command, FamilyArgs, FamilyName, FamilySelect, Format, GaugeKind, OutputArgs, QuadratureArgs, SeedArgs,
    SpectrumArgs, TruncationArgs, VerifyArgs,
};
use crate::output::{complex, emit, json, real, report_value, Table};

/// Why a command did not succeed; determines the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad or inconsistent command-line input.
    Usage(String),
    Io(PathBuf, io::Error),
    Core(tridirep::Error),
    /// The command ran but its check did not pass.
    Check(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_numerical() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Check(msg) => f.write_str(msg),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<tridirep::Error> for Failure {
    fn from(e: tridirep::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Core(e.into())
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Failure::Usage(msg.into()))
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Build(args) => build(args),
        Command::Verify(args) => verify(args),
        Command::Family(args) => family(args),
        Command::Spectrum(args) => spectrum_cmd(args),
        Command::Quadrature(args) => quadrature_cmd(args),
        Command::Truncations(args) => truncations(args),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(out: &OutputArgs, content: &str) -> Result<()> {
    emit(out.output.as_deref(), content)
        .map_err(|e| Failure::Io(out.output.clone().unwrap_or_else(|| "<stdout>".into()), e))
}

fn seed(args: &SeedArgs) -> Result<AlgebraParams> {
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("{flag} is required")));
    let delta = need(args.delta, "--delta")?;
    let phi0 = need(args.phi0, "--phi0")?;
    let delta0 = need(args.delta0, "--delta0")?;
    let v0 = args.v0.ok_or_else(|| Failure::Usage("--v0 is required".into()))?;
    let b0 = args.b0.ok_or_else(|| Failure::Usage("--b0 is required".into()))?;
    let p = AlgebraParams::new_complex(delta, phi0, delta0, v0, b0);
    p.validate()?;
    Ok(p)
}

fn family_spec(sel: &FamilySelect) -> Result<FamilySpec> {
    if let Some(path) = &sel.spec {
        let spec: FamilySpec = serde_json::from_str(&read(path)?)?;
        spec.validate()?;
        return Ok(spec);
    }
    let Some(name) = sel.family else {
        return usage("--family or --spec is required");
    };
    let real =
        |v: Option<f64>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("{flag} is required for this family")));
    let cplx = |v: Option<Complex64>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("{flag} is required for this family")))
    };
    let big_n = || {
        sel.big_n
            .ok_or_else(|| Failure::Usage("--N is required for this family".into()))
    };
    let spec = match name {
        FamilyName::Jacobi => FamilySpec::Jacobi {
            alpha: real(sel.alpha, "--alpha")?,
            beta: real(sel.beta, "--beta")?,
        },
        FamilyName::ContinuousHahn => FamilySpec::ContinuousHahn {
            a: cplx(sel.a, "--a")?,
            b: cplx(sel.b, "--b")?,
            c: cplx(sel.c, "--c")?,
            d: cplx(sel.d, "--d")?,
        },
        FamilyName::Hahn => FamilySpec::Hahn {
            alpha: real(sel.alpha, "--alpha")?,
            beta: real(sel.beta, "--beta")?,
            n: big_n()?,
        },
        FamilyName::ParaKrawtchouk => FamilySpec::ParaKrawtchouk {
            n: big_n()?,
            gamma: real(sel.gamma, "--gamma")?,
            t: sel.t,
        },
    };
    spec.validate()?;
    Ok(spec)
}

enum Source {
    Seed(AlgebraParams),
    Family(FamilySpec),
}

fn source(seed_args: &SeedArgs, sel: &FamilySelect) -> Result<Source> {
    match (sel.is_set(), seed_args.is_empty()) {
        (true, true) => Ok(Source::Family(family_spec(sel)?)),
        (true, false) => usage("seed flags (--delta, --phi0, ...) cannot be combined with --family or --spec"),
        (false, _) => Ok(Source::Seed(seed(seed_args)?)),
    }
}

fn params_of(src: &Source) -> Result<AlgebraParams> {
    match src {
        Source::Seed(p) => Ok(*p),
        Source::Family(FamilySpec::ParaKrawtchouk { t, .. }) if *t == 0.0 => {
            usage("the para-Krawtchouk seed needs a positive --t; the t = 0 limit has no finite seed")
        }
        Source::Family(spec) => Ok(spec.algebra_params()?),
    }
}

fn gauge(args: &BuildArgs) -> Result<GaugeChoice> {
    match args.gauge {
        GaugeKind::Custom if args.w_seeds.is_empty() => usage("--gauge custom needs --w-seeds"),
        GaugeKind::Custom => Ok(GaugeChoice::Custom(args.w_seeds.clone())),
        _ if !args.w_seeds.is_empty() => usage("--w-seeds is only used with --gauge custom"),
        GaugeKind::SplitSqrt => Ok(GaugeChoice::SplitSqrt),
        GaugeKind::UnitW => Ok(GaugeChoice::UnitW),
    }
}

fn build(args: BuildArgs) -> Result<()> {
    if args.size == 0 {
        return usage("--size must be at least 1");
    }
    let params = params_of(&source(&args.seed, &args.family)?)?;
    let rep = build_representation(&params, args.size, &gauge(&args)?)?;
    log::info!(
        "built {} representation of dimension {}, residual {:e}",
        if rep.closed { "closed" } else { "truncated" },
        rep.dim(),
        rep.residual()
    );
    let content = match args.out.format {
        Format::Json => {
            let mut s = rep.to_json()?;
            s.push('\n');
            s
        }
        Format::Csv => coefficient_table(&rep).to_csv(),
        Format::Table => coefficient_table(&rep).render(),
    };
    write(&args.out, &content)
}

fn coefficient_table(rep: &Representation) -> Table {
    let co = &rep.coefficients;
    let mut t = Table::new(&["n", "a", "b", "c", "u", "v", "w", "kappa", "lambda"]);
    for n in 0..co.size {
        t.row(vec![
            n.to_string(),
            complex(co.a[n]),
            complex(co.b[n]),
            complex(co.c[n]),
            complex(co.u[n]),
            complex(co.v[n]),
            complex(co.w[n]),
            complex(co.kappa[n]),
            complex(co.lambda(n)),
        ]);
    }
    t
}

#[derive(Serialize)]
struct VerifyReport {
    input: String,
    dim: usize,
    closed: bool,
    window: &'static str,
    residual: f64,
    relative_residual: f64,
    metric: &'static str,
    tol: f64,
    passed: bool,
}

fn verify(args: VerifyArgs) -> Result<()> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage("--tol must be positive");
    }
    let rep = Representation::from_json(&read(&args.input)?)?;
    if rep.x.dim() != rep.z.dim() || rep.x.dim() != rep.dim() {
        return Err(tridirep::Error::DimensionMismatch {
            x: rep.x.dim(),
            z: rep.z.dim(),
        }
        .into());
    }
    let residual = rep.residual();
    let relative_residual = rep.relative_residual();
    let measured = if args.relative { relative_residual } else { residual };
    let report = VerifyReport {
        input: args.input.display().to_string(),
        dim: rep.dim(),
        closed: rep.closed,
        window: match rep.residual_window() {
            ResidualWindow::Interior => "interior",
            ResidualWindow::Full => "full",
        },
        residual,
        relative_residual,
        metric: if args.relative { "relative" } else { "absolute" },
        tol: args.tol,
        passed: measured <= args.tol,
    };
    let content = match args.out.format {
        Format::Json => json(&report)?,
        Format::Csv | Format::Table => {
            let mut t = Table::new(&[
                "input",
                "dim",
                "window",
                "residual",
                "relative_residual",
                "tol",
                "passed",
            ]);
            t.row(vec![
                report.input.clone(),
                report.dim.to_string(),
                report.window.to_string(),
                format!("{:e}", report.residual),
                format!("{:e}", report.relative_residual),
                format!("{:e}", report.tol),
                report.passed.to_string(),
            ]);
            if args.out.format == Format::Csv {
                t.to_csv()
            } else {
                t.render()
            }
        }
    };
    write(&args.out, &content)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} residual {measured:e} exceeds tol {:e}",
            report.metric, args.tol
        )))
    }
}

fn family(args: FamilyArgs) -> Result<()> {
    let spec = family_spec(&args.family)?;
    let n_max = args.nmax.or(spec.truncation()).unwrap_or(50);
    let tol = args.tol.unwrap_or(match spec {
        FamilySpec::ParaKrawtchouk { t: 0.0, .. } => 1e-6,
        _ => 1e-12,
    });
    if tol.is_nan() || tol <= 0.0 {
        return usage("--tol must be positive");
    }
    let report = family_compare(&spec, n_max, tol)?;
    let content = match args.out.format {
        Format::Json => json(&report)?,
        Format::Csv | Format::Table => {
            let mut t = Table::new(&[
                "n",
                "lambda_general",
                "lambda_closed",
                "b_general",
                "b_closed",
                "rel_err",
            ]);
            for r in &report.records {
                t.row(vec![
                    r.n.to_string(),
                    report_value(&r.lambda_general),
                    report_value(&r.lambda_closed),
                    report_value(&r.b_general),
                    report_value(&r.b_closed),
                    format!("{:.3e}", r.rel_err),
                ]);
            }
            if args.out.format == Format::Csv {
                t.to_csv()
            } else {
                format!(
                    "{}max rel_err {:.3e} (tol {:e}): {}\n",
                    t.render(),
                    report.max_rel_err,
                    tol,
                    pass_word(report.passed)
                )
            }
        }
    };
    write(&args.out, &content)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "max rel_err {:e} exceeds tol {tol:e}",
            report.max_rel_err
        )))
    }
}

fn pass_word(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Real recurrence with at least `dim` diagonal entries, plus the dimension
/// actually available.
fn recurrence(args: &SpectrumArgs) -> Result<(MonicRecurrence, usize)> {
    match source(&args.seed, &args.family)? {
        Source::Family(spec) => {
            let dim = match (args.dim, spec.truncation()) {
                (Some(d), _) => d,
                (None, Some(n)) => n + 1,
                (None, None) => return usage("--dim is required for an infinite family"),
            };
            if dim == 0 {
                return usage("--dim must be at least 1");
            }
            Ok((MonicRecurrence::real_family(&spec, dim - 1)?, dim))
        }
        Source::Seed(p) => {
            let Some(dim) = args.dim else {
                return usage("--dim is required with seed flags");
            };
            if dim == 0 {
                return usage("--dim must be at least 1");
            }
            let rep = build_representation(&p, dim, &GaugeChoice::SplitSqrt)?;
            if rep.dim() < dim {
                log::warn!("representation closes at dimension {}; using that", rep.dim());
            }
            let co = &rep.coefficients;
            let is_real = |z: &Complex64| z.im.abs() <= 1e-12 * (1.0 + z.re.abs());
            let lambdas = co.lambdas();
            if !lambdas.iter().chain(&co.b).all(is_real) {
                return usage("the recurrence coefficients of this seed are not real");
            }
            let rec = MonicRecurrence::new(
                lambdas.iter().map(|z| z.re).collect(),
                co.b.iter().map(|z| z.re).collect(),
            )?;
            Ok((rec, rep.dim()))
        }
    }
}

#[derive(Serialize)]
struct Nodes {
    nodes: Vec<f64>,
}

fn spectrum_cmd(args: SpectrumArgs) -> Result<()> {
    let (rec, dim) = recurrence(&args)?;
    let nodes = spectrum(&jacobi_matrix(&rec, dim)?)?;
    let content = match args.out.format {
        Format::Json => json(&Nodes { nodes })?,
        Format::Csv => {
            let mut t = Table::new(&["node"]);
            nodes.iter().for_each(|&x| t.row(vec![real(x)]));
            t.to_csv()
        }
        Format::Table => {
            let mut t = Table::new(&["s", "node"]);
            nodes
                .iter()
                .enumerate()
                .for_each(|(s, &x)| t.row(vec![s.to_string(), real(x)]));
            t.render()
        }
    };
    write(&args.out, &content)
}

fn quadrature_cmd(args: QuadratureArgs) -> Result<()> {
    if args.mass.is_nan() || args.mass <= 0.0 {
        return usage("--mass must be positive");
    }
    let (rec, dim) = recurrence(&args.spectrum)?;
    let q = quadrature(&jacobi_matrix(&rec, dim)?, args.mass)?;
    let content = match args.spectrum.out.format {
        Format::Json => json(&q)?,
        Format::Csv => q.to_csv(),
        Format::Table => {
            let mut t = Table::new(&["s", "node", "weight"]);
            for (s, (&x, &w)) in q.nodes.iter().zip(&q.weights).enumerate() {
                t.row(vec![s.to_string(), real(x), real(w)]);
            }
            t.render()
        }
    };
    write(&args.spectrum.out, &content)
}

#[derive(Serialize)]
struct Candidate {
    n: usize,
    kind: TruncationKind,
    dimension: usize,
}

fn truncations(args: TruncationArgs) -> Result<()> {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage("--tol must be positive");
    }
    let params = params_of(&source(&args.seed, &args.family)?)?;
    let search = TruncationSearch {
        n_max: args.nmax,
        tol: args.tol,
    };
    let found: Vec<Candidate> = truncation_conditions_with(&params, &search)
        .into_iter()
        .map(|t| Candidate {
            n: t.n,
            kind: t.kind,
            dimension: t.dimension(),
        })
        .collect();
    let content = match args.out.format {
        Format::Json => json(&found)?,
        Format::Csv | Format::Table => {
            let mut t = Table::new(&["N", "kind", "dimension"]);
            for c in &found {
                let kind = serde_json::to_value(c.kind)?;
                t.row(vec![
                    c.n.to_string(),
                    kind.as_str().unwrap_or_default().to_string(),
                    c.dimension.to_string(),
                ]);
            }
            if args.out.format == Format::Csv {
                t.to_csv()
            } else {
                t.render()
            }
        }
    };
    write(&args.out, &content)
}
