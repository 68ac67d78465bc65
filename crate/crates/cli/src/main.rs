use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use qent_core::corep::{
    self, fundamental_corep, product_corep, trivial_corep, Corep, ProductCorep,
};
use qent_core::entangle::{self, PdReport, PdVerdict};
use qent_core::fourier::{self, DensityOp};
use qent_core::haar::Haar;
use qent_core::verify::{self, Suite, VerifyConfig};
use qent_core::{io, AlgebraParams, Element, MultiElement};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "qent",
    version,
    about = "Quantum Fourier transform and PPT tests on SU_q(2) x SU_q(2)"
)]
struct Cli {
    /// Deformation parameter, 0 < q <= 1
    #[arg(long, global = true, env = "QENT_DEFAULT_Q", default_value_t = 0.5)]
    q: f64,

    /// Coefficient pruning tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Comma-separated irrep pairs, e.g. fund:fund,triv:triv
    #[arg(long, global = true, value_delimiter = ',', default_values_t = corep::DEFAULT_PAIR_LABELS.map(String::from))]
    catalog: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a density operator into a two-leg element
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Block-wise positive-definiteness test of a two-leg element
    CheckPd {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Partial transpose on the matrix side and partial theta on the algebra side
    Ppt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Haar state of an element or a two-leg element
    Haar {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a property suite
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// The singlet example, end to end
    DemoSinglet,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: qent_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let params = AlgebraParams::new(cli.q, cli.tol)?;
    match &cli.command {
        Command::Transform { input, output } => transform(cli, params, input, output.as_deref()),
        Command::CheckPd { input, output } => check_pd(cli, params, input, output.as_deref()),
        Command::Ppt { input, output } => ppt(cli, params, input, output.as_deref()),
        Command::Haar { input } => haar(cli, input),
        Command::Verify {
            suite,
            samples,
            seed,
        } => run_verify(cli, params, *suite, *samples, *seed),
        Command::DemoSinglet => demo_singlet(cli, params),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_or_print(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pair(c: Complex64) -> Value {
    json!([c.re, c.im])
}

fn corep_for_dim(d: usize, params: AlgebraParams) -> anyhow::Result<Corep> {
    Ok(match d {
        1 => trivial_corep(params),
        2 => fundamental_corep(params)?,
        _ => bail!("no corepresentation of dimension {d} in the catalog (supported: 1, 2)"),
    })
}

fn corep_for_dims(dims: (usize, usize), params: AlgebraParams) -> anyhow::Result<ProductCorep> {
    Ok(product_corep(
        &corep_for_dim(dims.0, params)?,
        &corep_for_dim(dims.1, params)?,
    )?)
}

fn catalog(cli: &Cli, params: AlgebraParams) -> anyhow::Result<Vec<ProductCorep>> {
    Ok(corep::catalog_from_labels(&cli.catalog, params)?)
}

fn load_multi(text: &str, params: AlgebraParams) -> anyhow::Result<MultiElement> {
    let x: MultiElement = io::from_json(text)?;
    if x.params().q() != params.q() {
        bail!(
            "element file has q = {}, run configured with q = {}",
            x.params().q(),
            params.q()
        );
    }
    Ok(x)
}

fn verdict_code(v: PdVerdict) -> u8 {
    match v {
        PdVerdict::PositiveDefinite => EXIT_OK,
        PdVerdict::NotPositiveDefinite => EXIT_NEGATIVE,
        PdVerdict::UndecidedSupport => EXIT_UNDECIDED,
    }
}

fn report_text(r: &PdReport) -> String {
    let mut out = format!("verdict: {}\n", r.verdict);
    for b in &r.per_block {
        out.push_str(&format!(
            "  block {:<10} min eigenvalue {:+.6e}\n",
            b.label, b.min_eigenvalue
        ));
    }
    out.push_str(&format!("support residual: {:.3e}", r.support_residual));
    if let Some(w) = &r.witness {
        out.push_str(&format!("\nwitness: {} terms", w.len()));
    }
    out
}

fn transform(
    cli: &Cli,
    params: AlgebraParams,
    input: &Path,
    output: Option<&Path>,
) -> anyhow::Result<u8> {
    let rho: DensityOp = io::from_json(&read(input)?)?;
    let u = corep_for_dims(rho.dims(), params)?;
    let x = fourier::forward(&rho, &u)?;
    let eps = fourier::normalization_check(&x)?;
    let text = io::to_json(&x)?;
    match output {
        Some(p) => {
            write_or_print(Some(p), &text)?;
            match cli.format {
                Format::Json => {
                    println!("{}", json!({"normalization": pair(eps), "terms": x.len()}))
                }
                Format::Text => println!(
                    "normalization: [{}, {}]\nterms: {}",
                    eps.re,
                    eps.im,
                    x.len()
                ),
            }
        }
        None => {
            println!("{text}");
            eprintln!("normalization: [{}, {}]", eps.re, eps.im);
        }
    }
    Ok(EXIT_OK)
}

fn check_pd(
    cli: &Cli,
    params: AlgebraParams,
    input: &Path,
    output: Option<&Path>,
) -> anyhow::Result<u8> {
    let x = load_multi(&read(input)?, params)?;
    let report = entangle::is_positive_definite(&x, &catalog(cli, params)?)?;
    if let Some(p) = output {
        write_or_print(Some(p), &io::to_json(&report)?)?;
    }
    match cli.format {
        Format::Json if output.is_none() => println!("{}", io::to_json(&report)?),
        Format::Json => println!("{}", json!({"verdict": report.verdict})),
        Format::Text => println!("{}", report_text(&report)),
    }
    Ok(verdict_code(report.verdict))
}

fn ppt(
    cli: &Cli,
    params: AlgebraParams,
    input: &Path,
    output: Option<&Path>,
) -> anyhow::Result<u8> {
    let text = read(input)?;
    let raw: Value = serde_json::from_str(&text)?;
    let cat = catalog(cli, params)?;
    let (value, code, summary) = if raw.get("dims").is_some() {
        let rho: DensityOp = io::from_json(&text)?;
        let u = corep_for_dims(rho.dims(), params)?;
        let matrix = entangle::ppt_matrix(&rho)?;
        let x = fourier::forward(&rho, &u)?;
        let algebra = entangle::ppt_check(&x, &cat)?;
        let agreement = matrix.ppt == algebra.is_positive_definite();
        let code = if algebra.verdict == PdVerdict::UndecidedSupport {
            EXIT_UNDECIDED
        } else if !agreement {
            EXIT_DISAGREE
        } else {
            verdict_code(algebra.verdict)
        };
        let summary = format!(
            "matrix side: {} (spectrum {:?})\nalgebra side:\n{}\nagreement: {agreement}",
            if matrix.ppt { "PPT" } else { "NPT" },
            matrix.spectrum,
            report_text(&algebra)
        );
        let value = json!({
            "matrix": matrix,
            "algebra": serde_json::to_value(&algebra)?,
            "agreement": agreement,
        });
        (value, code, summary)
    } else {
        let x = load_multi(&text, params)?;
        let algebra = entangle::ppt_check(&x, &cat)?;
        let code = verdict_code(algebra.verdict);
        let summary = format!("algebra side:\n{}", report_text(&algebra));
        (
            json!({"algebra": serde_json::to_value(&algebra)?}),
            code,
            summary,
        )
    };
    if let Some(p) = output {
        write_or_print(Some(p), &serde_json::to_string_pretty(&value)?)?;
    }
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value)?),
        Format::Text => println!("{summary}"),
    }
    Ok(code)
}

fn haar(cli: &Cli, input: &Path) -> anyhow::Result<u8> {
    let text = read(input)?;
    let raw: Value = serde_json::from_str(&text)?;
    let h = if raw.pointer("/header/legs").is_some() {
        io::from_json::<MultiElement>(&text)?.haar()
    } else {
        io::from_json::<Element>(&text)?.haar()
    };
    match cli.format {
        Format::Json => println!("{}", json!({"haar": pair(h)})),
        Format::Text => println!("[{}, {}]", h.re, h.im),
    }
    Ok(EXIT_OK)
}

fn run_verify(
    cli: &Cli,
    params: AlgebraParams,
    suite: Suite,
    samples: usize,
    seed: u64,
) -> anyhow::Result<u8> {
    let config = VerifyConfig {
        params,
        seed,
        samples,
    };
    let reports = verify::run(suite, &config)?;
    let passed = reports.iter().all(|r| r.passed());
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Text => {
            for r in &reports {
                println!("suite {} at q = {} ({:.2} s)", r.suite, r.q, r.seconds);
                for c in &r.checks {
                    println!("  {c}");
                }
            }
            println!(
                "{}",
                if passed {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn demo_singlet(cli: &Cli, params: AlgebraParams) -> anyhow::Result<u8> {
    let u = fundamental_corep(params)?;
    let uu = product_corep(&u, &u)?;
    let rho = DensityOp::singlet();
    let x = fourier::forward(&rho, &uu)?;
    let half = verify::singlet_form(params, 0.5);
    let quarter = verify::singlet_form(params, 0.25);
    let eps_half = fourier::normalization_check(&half)?;
    let eps_quarter = fourier::normalization_check(&quarter)?;
    let matrix = entangle::ppt_matrix(&rho)?;
    let algebra = entangle::ppt_check(&x, &corep::default_catalog(params)?)?;
    let separability = entangle::decide_separability_2x2(&rho)?;
    let residual = qent_core::linalg::max_abs(&(fourier::reconstruct(&x, &uu)? - rho.matrix()));
    let classical = params.q() == 1.0;

    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "q": params.q(),
                "transform": serde_json::to_value(&x)?,
                "distance_to_half_form": x.distance(&half),
                "counit_half_form": pair(eps_half),
                "counit_quarter_form": pair(eps_quarter),
                "quarter_form_normalized": (eps_quarter - Complex64::new(1.0, 0.0)).norm() < params.tol(),
                "ppt_matrix": matrix,
                "ppt_algebra": algebra.verdict,
                "separability": separability,
                "reconstruction_residual": residual,
                "classical_limit": classical,
            }))?
        ),
        Format::Text => {
            println!(
                "singlet |psi-> = (|01> - |10>)/sqrt(2) at q = {}",
                params.q()
            );
            println!("transform: {x}");
            println!(
                "  distance to 1/2(a(x)a* + a*(x)a + c(x)c* + c*(x)c): {:.3e}",
                x.distance(&half)
            );
            println!("  counit of the 1/2 form: {}", eps_half.re);
            println!(
                "  counit of the 1/4 form: {} (not a normalized transform of a state)",
                eps_quarter.re
            );
            println!("partial transpose spectrum: {:?}", matrix.spectrum);
            println!("matrix side: {}", if matrix.ppt { "PPT" } else { "NPT" });
            println!("algebra side: partial theta is {}", algebra.verdict);
            if let Some(b) = algebra.min_block() {
                println!(
                    "  most negative block {} at {:+.6}",
                    b.label, b.min_eigenvalue
                );
            }
            println!("verdict: {separability}");
            println!("reconstruction residual: {residual:.3e}");
            if classical {
                println!(
                    "q = 1: the classical SU(2) case, F = identity and the algebra is commutative"
                );
            }
        }
    }
    Ok(EXIT_OK)
}
