mod error;
mod output;

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use felderhof::bench::{self, Strategy, SWEEP_MAX_M};
use felderhof::gtpattern::{enumerate_bottom_fixed, enumerate_top_fixed, weight_g, weight_g_dual};
use felderhof::lattice::{
    b_matrix_element, b_matrix_element_closed_form, dual_wavefunction, dwbp, five_vertex_b_element,
    wavefunction, z_symbols, LOperatorVariant, ModelParams, Polarity, SiteConfig,
};
use felderhof::mprod::DEFAULT_SEED;
use felderhof::poly::{LaurentPoly, VarId};
use felderhof::schur::{
    alpha_symbols, config_from_partition, factorial_schur, schur, z_vars, Partition,
};
use felderhof::verify::{self, Suite};
use num_rational::BigRational;

use error::CliError;
use output::{Format, Scalar};

/// Exact computations for the Felderhof free-fermion six-vertex model.
#[derive(Parser)]
#[command(name = "felderhof", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized checks (decimal or 0x-hex). FELD_SEED overrides it.
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Evaluate at a rational point, e.g. `z1=3/2,z2=1,t=2`.
    #[arg(long, global = true)]
    eval: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Standard,
    Rescaled,
    Inhomogeneous,
    FiveVertex,
}

impl From<Variant> for LOperatorVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Standard => LOperatorVariant::Standard,
            Variant::Rescaled => LOperatorVariant::Rescaled,
            Variant::Inhomogeneous => LOperatorVariant::Inhomogeneous,
            Variant::FiveVertex => LOperatorVariant::FiveVertex,
        }
    }
}

#[derive(Args)]
struct ConfigArgs {
    /// Number of sites.
    #[arg(long = "M")]
    m: Option<usize>,
    /// Number of particles or holes.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Particle positions, 1-based.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["holes", "partition"])]
    particles: Option<Vec<usize>>,
    /// Hole positions, 1-based.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["particles", "partition"])]
    holes: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    partition: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Variant::Standard)]
    variant: Variant,
    /// Integer factorial parameters for the inhomogeneous variant; symbolic when absent.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alphas: Option<Vec<i64>>,
}

#[derive(Args)]
struct PartitionArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    partition: Vec<usize>,
    #[arg(long = "N")]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// ⟨x| B(z_1) ⋯ B(z_N) |Ω⟩.
    Wavefunction(ConfigArgs),
    /// ⟨1^M| B(z_1) ⋯ B(z_N) |x̄⟩.
    DualWavefunction(ConfigArgs),
    /// Schur polynomial s_λ(z_1, …, z_N).
    Schur(PartitionArgs),
    /// Factorial Schur polynomial s_λ(z | α).
    FactorialSchur {
        #[command(flatten)]
        p: PartitionArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alphas: Option<Vec<i64>>,
    },
    /// Weighted sum over strict Gelfand–Tsetlin patterns with top row λ + ρ.
    GtSum(PartitionArgs),
    /// Weighted sum over strict Gelfand–Tsetlin patterns fixed at the bottom.
    DualGtSum(ConfigArgs),
    /// Domain-wall partition function on M sites.
    Dwbp {
        #[arg(long = "M", required = true)]
        m: usize,
        /// Use site inhomogeneities v_1, …, v_M.
        #[arg(long)]
        inhomogeneous: bool,
    },
    /// Single-row element ⟨x̄| B(z) |ȳ⟩.
    BElement {
        #[arg(long = "M", required = true)]
        m: usize,
        /// Holes of the bra x̄.
        #[arg(long, value_delimiter = ',', required = true)]
        holes: Vec<usize>,
        /// Holes of the ket ȳ.
        #[arg(long, value_delimiter = ',', required = true)]
        in_holes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Variant::Standard)]
        variant: Variant,
        /// Use the closed form (standard and five-vertex only).
        #[arg(long)]
        closed_form: bool,
    },
    /// Run the identity-verification suites.
    Verify {
        /// `all`, or a comma-separated list of suite names or numbers.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Time every applicable strategy for the dual wavefunction.
    Bench {
        #[arg(long = "M", required = true)]
        m: usize,
        #[arg(long = "N", required = true)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        strategies: Option<Vec<String>>,
    },
}

fn parse_seed(s: &str) -> Result<u64, CliError> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| CliError::Invalid(format!("bad seed {s:?}")))
}

fn resolve_seed(flag: Option<&str>) -> Result<u64, CliError> {
    match std::env::var("FELD_SEED") {
        Ok(env) => parse_seed(&env),
        Err(_) => flag.map_or(Ok(DEFAULT_SEED), parse_seed),
    }
}

fn parse_point(s: &str) -> Result<HashMap<VarId, BigRational>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Invalid(format!("expected name=value, got {pair:?}")))?;
            let var: VarId = k.trim().parse()?;
            let val: BigRational = v
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad rational {v:?}")))?;
            Ok((var, val))
        })
        .collect()
}

fn sweep_cap(m: usize) -> Result<(), CliError> {
    if m > SWEEP_MAX_M {
        return Err(CliError::Cap(format!(
            "the sweep needs M <= {SWEEP_MAX_M}, got {m}"
        )));
    }
    Ok(())
}

fn partition(parts: &[usize], n: Option<usize>) -> Result<Partition, CliError> {
    let lam = Partition::new(parts.to_vec())?;
    Ok(match n {
        Some(n) => lam.padded(n)?,
        None => lam,
    })
}

/// The configuration named by `--particles`/`--holes` or `--partition`, in `polarity`.
fn config(args: &ConfigArgs, polarity: Polarity) -> Result<SiteConfig, CliError> {
    let m = args
        .m
        .ok_or_else(|| CliError::Invalid("--M is required".into()))?;
    let (wanted, other) = match polarity {
        Polarity::Particles => (&args.particles, &args.holes),
        Polarity::Holes => (&args.holes, &args.particles),
    };
    if other.is_some() {
        let flag = if polarity == Polarity::Holes {
            "--holes"
        } else {
            "--particles"
        };
        return Err(CliError::Invalid(format!(
            "this command takes {flag} or --partition"
        )));
    }
    let cfg = match (wanted, &args.partition) {
        (Some(pos), None) => SiteConfig::new(m, pos.clone(), polarity)?,
        (None, Some(parts)) => config_from_partition(&partition(parts, args.n)?, m, polarity)?,
        _ => return Err(CliError::Invalid("give positions or --partition".into())),
    };
    if let Some(n) = args.n {
        if n != cfg.len() {
            return Err(CliError::Invalid(format!(
                "--N {n} but {} positions",
                cfg.len()
            )));
        }
    }
    Ok(cfg)
}

fn params(args: &ConfigArgs, m: usize) -> Result<ModelParams, CliError> {
    let p = ModelParams::new(m)?;
    Ok(match (args.variant, &args.alphas) {
        (Variant::Inhomogeneous, Some(a)) => {
            p.with_alphas(a.iter().map(|&x| LaurentPoly::constant(x)).collect())?
        }
        (Variant::Inhomogeneous, None) => p.with_symbolic_alphas(),
        (_, Some(_)) => {
            return Err(CliError::Invalid(
                "--alphas needs --variant inhomogeneous".into(),
            ))
        }
        _ => p,
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let point = cli.eval.as_deref().map(parse_point).transpose()?;
    let point = point.as_ref();
    let format = cli.format;
    let poly = |p: LaurentPoly| -> Result<String, CliError> {
        Ok(output::scalar(&Scalar::new(p, point)?, format))
    };
    match &cli.command {
        Command::Wavefunction(args) => {
            let x = config(args, Polarity::Particles)?;
            sweep_cap(x.m())?;
            poly(wavefunction(
                &x,
                &z_symbols(x.len()),
                args.variant.into(),
                &params(args, x.m())?,
            )?)
        }
        Command::DualWavefunction(args) => {
            let x = config(args, Polarity::Holes)?;
            sweep_cap(x.m())?;
            poly(dual_wavefunction(
                &x,
                &z_symbols(x.len()),
                args.variant.into(),
                &params(args, x.m())?,
            )?)
        }
        Command::Schur(p) => {
            let lam = partition(&p.partition, p.n)?;
            poly(schur(&lam, &z_vars(lam.len()))?)
        }
        Command::FactorialSchur { p, alphas } => {
            let lam = partition(&p.partition, p.n)?;
            let a = match alphas {
                Some(a) => a.iter().map(|&x| LaurentPoly::constant(x)).collect(),
                None => alpha_symbols(lam.part(1) + lam.len()),
            };
            poly(factorial_schur(&lam, &z_vars(lam.len()), &a)?)
        }
        Command::GtSum(p) => {
            let lam = partition(&p.partition, p.n)?;
            let pats = enumerate_top_fixed(&lam, lam.len())?;
            let sum: LaurentPoly = pats.iter().map(weight_g).sum();
            let items = pats
                .into_iter()
                .map(|q| {
                    let w = Scalar::new(weight_g(&q), point)?;
                    Ok((q, w))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(output::patterns(&items, &Scalar::new(sum, point)?, format))
        }
        Command::DualGtSum(args) => {
            let x = config(args, Polarity::Holes)?;
            let lam = felderhof::schur::partition_from_config(&x);
            let pats = enumerate_bottom_fixed(&lam, x.len(), x.m())?;
            let sum: LaurentPoly = pats.iter().map(weight_g_dual).sum();
            let items = pats
                .into_iter()
                .map(|q| {
                    let w = Scalar::new(weight_g_dual(&q), point)?;
                    Ok((q, w))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(output::patterns(&items, &Scalar::new(sum, point)?, format))
        }
        Command::Dwbp { m, inhomogeneous } => {
            sweep_cap(*m)?;
            let vs: Vec<VarId> = (1..=*m as u16).map(VarId::v).collect();
            poly(dwbp(
                &z_symbols(*m),
                inhomogeneous.then_some(vs.as_slice()),
            )?)
        }
        Command::BElement {
            m,
            holes,
            in_holes,
            variant,
            closed_form,
        } => {
            let xbar = SiteConfig::holes(*m, holes.clone())?;
            let ybar = SiteConfig::holes(*m, in_holes.clone())?;
            let z = LaurentPoly::z(1);
            let value = match (closed_form, variant) {
                (false, v) => {
                    let params = match v {
                        Variant::Inhomogeneous => ModelParams::new(*m)?.with_symbolic_alphas(),
                        _ => ModelParams::new(*m)?,
                    };
                    b_matrix_element(&xbar, &ybar, &z, (*v).into(), &params)?
                }
                (true, Variant::Standard) => b_matrix_element_closed_form(&xbar, &ybar, &z)?,
                (true, Variant::FiveVertex) => five_vertex_b_element(&xbar, &ybar, &z)?,
                (true, v) => {
                    return Err(CliError::Invalid(format!(
                        "no closed form for the {v:?} variant"
                    )))
                }
            };
            poly(value)
        }
        Command::Verify { suite } => {
            let seed = resolve_seed(cli.seed.as_deref())?;
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                suite
                    .split(',')
                    .map(|s| s.trim().parse::<Suite>().map_err(CliError::Invalid))
                    .collect::<Result<_, _>>()?
            };
            let report = verify::run(&suites, seed);
            let text = output::verify(&report, format);
            if !report.passed {
                emit(cli, &text)?;
                return Err(CliError::VerificationFailed);
            }
            Ok(text)
        }
        Command::Bench { m, n, strategies } => {
            let list = strategies
                .as_ref()
                .map(|names| {
                    names
                        .iter()
                        .map(|s| s.parse::<Strategy>().map_err(CliError::Invalid))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?;
            let rows = bench::bench(*m, *n, list.as_deref())?;
            Ok(output::bench(&rows, format))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| emit(&cli, &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::VerificationFailed) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
