use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use weilmot::algebraic::weight::DEFAULT_WEIGHT_TOL;
use weilmot::algebraic::{format_rational, weight_check, Weight};
use weilmot::motive::{parse_spectrum_file, ProbeVerdict, SpectrumFile, VirtualMotive};
use weilmot::report::{json_bigint, json_rationals, InputDigest, Report, Verdict, SCHEMA_VERSION};
use weilmot::variety::{
    congruence_check, count_sequence, esnault_check, parse_variety_file, CountOptions,
    CountSequence,
};
use weilmot::zeta_fit::{
    fit_rational, fit_rational_auto, series_from_counts, series_from_sums, spectrum_from_zeta,
};
use weilmot::Error;

/// Point counts over finite fields, congruences between them, and exact
/// arithmetic on Frobenius spectra. Reports are JSON on stdout.
///
/// Exit status: 0 success, 1 a checked congruence failed, 2 malformed
/// input, 3 a size cap was exceeded, 4 a reduced count is not an integer.
#[derive(Parser)]
#[command(name = "weilmot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count points of a variety over F_{q^n} for n = 1..upto.
    Count {
        #[arg(long)]
        variety: PathBuf,
        #[command(flatten)]
        range: Range,
    },
    /// Compare point counts of two varieties modulo q^{kappa n}.
    Congruence {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[command(flatten)]
        range: Range,
        #[arg(long, default_value_t = 1)]
        kappa: u32,
    },
    /// Fit a rational zeta function to the point counts and extract the
    /// Frobenius spectrum.
    Zeta {
        #[arg(long)]
        variety: PathBuf,
        #[command(flatten)]
        range: Range,
        /// Degree bound for numerator and denominator; searched
        /// automatically when absent.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Operations on a spectrum file.
    Motive {
        #[arg(long)]
        spectrum: PathBuf,
        #[command(subcommand)]
        op: MotiveOp,
    },
}

#[derive(Args)]
struct Range {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    upto: u32,
    /// Worker threads for point enumeration.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum MotiveOp {
    /// #_n for one n.
    Sharp {
        #[arg(long)]
        n: u32,
    },
    /// #_n of the birational part modulo q^{kappa n}.
    SharpBar {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        kappa: u32,
    },
    /// Split off the part divisible by L^kappa.
    Split {
        #[arg(long, default_value_t = 1)]
        kappa: u32,
    },
    /// Search for a non-integral #_n and compare with orbit integrality.
    Effectivity {
        #[arg(long, default_value_t = 50)]
        window: u32,
    },
    /// The zeta function of the motive.
    Zeta,
    /// The integer series a_n = #_n of the birational part.
    An {
        #[arg(long)]
        upto: u32,
    },
}

/// A failure together with the input it came from.
struct Failure {
    error: Error,
    context: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            context: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.to_json());
            let ok = report.verdicts.iter().all(|v| v.pass);
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(f) => {
            match f.context {
                Some(c) => eprintln!("error: {c}: {}", f.error),
                None => eprintln!("error: {}", f.error),
            }
            ExitCode::from(f.error.exit_code())
        }
    }
}

/// Arguments as given, minus `--threads`, so reports do not depend on the
/// thread count.
fn command_echo() -> Vec<String> {
    let mut out = Vec::new();
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--threads" {
            args.next();
        } else if !a.starts_with("--threads=") {
            out.push(a);
        }
    }
    out
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        error: Error::Invalid(e.to_string()),
        context: Some(path.display().to_string()),
    })
}

fn in_file<T>(path: &Path, r: weilmot::Result<T>) -> Result<T, Failure> {
    r.map_err(|error| Failure {
        error,
        context: Some(path.display().to_string()),
    })
}

struct Loaded {
    text: String,
    variety: weilmot::variety::LoadedVariety,
}

fn load_variety(path: &Path) -> Result<Loaded, Failure> {
    let text = read(path)?;
    let variety = in_file(path, parse_variety_file(&text))?;
    Ok(Loaded { text, variety })
}

fn counts_of(v: &Loaded, range: &Range) -> Result<CountSequence, Failure> {
    let opts = CountOptions {
        threads: range.threads,
        ..CountOptions::default()
    };
    Ok(count_sequence(&v.variety.combinator, range.q, range.upto, &opts)?)
}

fn variety_assertions(v: &Loaded) -> Value {
    json!({
        "name": v.variety.file.name,
        "projective": true,
        "smooth": v.variety.file.smooth,
        "ch0_trivial": v.variety.ch0_trivial(),
    })
}

fn esnault_verdicts(v: &Loaded, counts: &CountSequence) -> Vec<Verdict> {
    if !v.variety.ch0_trivial() {
        return Vec::new();
    }
    let e = esnault_check(counts);
    vec![Verdict::new(
        format!("{}: N_1 = 1 mod q", v.variety.file.name),
        e.pass,
        Some(format!("N_1 = {} = {} mod {}", e.n1, e.residue, e.q)),
    )]
}

fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(json_bigint::to_value).collect())
}

fn rationals(xs: &[BigRational]) -> Value {
    Value::Array(xs.iter().map(json_rationals::to_value).collect())
}

fn report(inputs: Vec<InputDigest>, assertions: Value, results: Value, verdicts: Vec<Verdict>) -> Report {
    Report {
        schema: SCHEMA_VERSION,
        command: command_echo(),
        inputs,
        assertions,
        results,
        verdicts,
    }
}

fn spectrum_value(m: &VirtualMotive) -> Value {
    serde_json::to_value(SpectrumFile::from_motive(m)).expect("spectrum serializes")
}

fn weights(m: &VirtualMotive) -> Value {
    Value::Array(
        m.terms()
            .map(|(o, _)| {
                let w = match weight_check(o.poly(), m.q(), DEFAULT_WEIGHT_TOL) {
                    Ok(Weight::Pure(j)) => json!(j),
                    Ok(Weight::Mixed) => json!("mixed"),
                    Err(_) => Value::Null,
                };
                json!({ "orbit": o.to_string(), "weight": w })
            })
            .collect(),
    )
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Count { variety, range } => {
            let v = load_variety(&variety)?;
            let counts = counts_of(&v, &range)?;
            let verdicts = esnault_verdicts(&v, &counts);
            Ok(report(
                vec![InputDigest::of("variety", v.text.as_bytes())],
                variety_assertions(&v),
                json!({ "q": counts.q, "counts": ints(&counts.counts) }),
                verdicts,
            ))
        }
        Command::Congruence { a, b, range, kappa } => {
            let va = load_variety(&a)?;
            let vb = load_variety(&b)?;
            let ca = counts_of(&va, &range)?;
            let cb = counts_of(&vb, &range)?;
            let check = congruence_check(&ca, &cb, kappa)?;
            let mut verdicts = vec![Verdict::new(
                format!("N_n(a) = N_n(b) mod q^({kappa}n) for n <= {}", range.upto),
                check.all_pass(),
                check.first_failure.map(|n| format!("first failure at n = {n}")),
            )];
            verdicts.extend(esnault_verdicts(&va, &ca));
            verdicts.extend(esnault_verdicts(&vb, &cb));
            Ok(report(
                vec![
                    InputDigest::of("a", va.text.as_bytes()),
                    InputDigest::of("b", vb.text.as_bytes()),
                ],
                json!({ "a": variety_assertions(&va), "b": variety_assertions(&vb) }),
                serde_json::to_value(&check).expect("report serializes"),
                verdicts,
            ))
        }
        Command::Zeta {
            variety,
            range,
            max_deg,
        } => {
            let v = load_variety(&variety)?;
            let counts = counts_of(&v, &range)?;
            let series = series_from_counts(&counts);
            let zeta = match max_deg {
                Some(d) => fit_rational(&series, d)?,
                None => fit_rational_auto(&series)?,
            };
            let spectrum = spectrum_from_zeta(&zeta, range.q)?;
            let sharps = spectrum.sharp_upto(range.upto);
            let reproduced = sharps
                .iter()
                .zip(&counts.counts)
                .all(|(s, n)| s == &BigRational::from_integer(n.clone()));
            let mut verdicts = vec![
                Verdict::new(
                    "fitted zeta expands to the full count series",
                    zeta.series(series.len() - 1) == series,
                    None,
                ),
                Verdict::new("#_n of the spectrum reproduces every count", reproduced, None),
            ];
            verdicts.extend(esnault_verdicts(&v, &counts));
            Ok(report(
                vec![InputDigest::of("variety", v.text.as_bytes())],
                variety_assertions(&v),
                json!({
                    "q": counts.q,
                    "counts": ints(&counts.counts),
                    "series": rationals(&series),
                    "zeta": zeta.to_json(),
                    "zeta_text": zeta.to_string(),
                    "spectrum": spectrum_value(&spectrum),
                    "spectrum_text": spectrum.to_string(),
                    "weights": weights(&spectrum),
                }),
                verdicts,
            ))
        }
        Command::Motive { spectrum, op } => {
            let text = read(&spectrum)?;
            let m = in_file(&spectrum, parse_spectrum_file(&text))?;
            let inputs = vec![InputDigest::of("spectrum", text.as_bytes())];
            let assertions = json!({
                "simple_classes_identified_with_orbits": true,
                "q": m.q(),
            });
            let (results, verdicts) = motive_op(&m, op)?;
            Ok(report(inputs, assertions, results, verdicts))
        }
    }
}

fn motive_op(m: &VirtualMotive, op: MotiveOp) -> Result<(Value, Vec<Verdict>), Failure> {
    let positive = |name: &str, v: u32| {
        if v == 0 {
            Err(Failure::from(Error::Invalid(format!("--{name} must be at least 1"))))
        } else {
            Ok(())
        }
    };
    Ok(match op {
        MotiveOp::Sharp { n } => {
            positive("n", n)?;
            let v = m.sharp_n(n);
            (
                json!({ "motive": m.to_string(), "n": n, "sharp": json_rationals::to_value(&v) }),
                vec![],
            )
        }
        MotiveOp::SharpBar { n, kappa } => {
            positive("n", n)?;
            positive("kappa", kappa)?;
            let r = m.sharp_bar_n(n, kappa)?;
            (
                json!({ "motive": m.to_string(), "n": n, "kappa": kappa, "residue": r }),
                vec![],
            )
        }
        MotiveOp::Split { kappa } => {
            positive("kappa", kappa)?;
            let s = m.lefschetz_split(kappa)?;
            let reassembled = s.reassemble()? == *m;
            (
                json!({
                    "kappa": kappa,
                    "motive": m.to_string(),
                    "birational_part": spectrum_value(&s.birational_part),
                    "birational_text": s.birational_part.to_string(),
                    "lefschetz_cofactor": spectrum_value(&s.lefschetz_cofactor),
                    "cofactor_text": s.lefschetz_cofactor.to_string(),
                }),
                vec![Verdict::new("M = birational + L^kappa * cofactor", reassembled, None)],
            )
        }
        MotiveOp::Effectivity { window } => {
            positive("window", window)?;
            let r = m.effectivity_probe(window);
            let detail = match &r.probe {
                ProbeVerdict::Integral { window } => format!("#_n integral for n <= {window}"),
                ProbeVerdict::Witness { n, value } => format!("#_{n} = {value}"),
            };
            (
                serde_json::to_value(&r).expect("report serializes"),
                vec![Verdict::new(
                    "probe agrees with orbit integrality",
                    r.agrees,
                    Some(detail),
                )],
            )
        }
        MotiveOp::Zeta => {
            let z = m.zeta();
            let n_max = 10u32;
            let consistent = z.series(n_max as usize) == series_from_sums(&m.sharp_upto(n_max));
            (
                json!({ "motive": m.to_string(), "zeta": z.to_json(), "zeta_text": z.to_string() }),
                vec![Verdict::new(
                    "zeta expansion matches exp(sum #_n t^n / n) to order 10",
                    consistent,
                    None,
                )],
            )
        }
        MotiveOp::An { upto } => {
            positive("upto", upto)?;
            let a = m.a_n_series(upto)?;
            let q = BigInt::from(m.q());
            let reduced: Vec<BigInt> = (1..=upto)
                .map(|n| m.sharp_bar_n(n, 1).map(|r| r.value))
                .collect::<weilmot::Result<_>>()?;
            let agree = a
                .iter()
                .zip(&reduced)
                .enumerate()
                .all(|(i, (x, r))| num_integer::Integer::mod_floor(x, &q.pow(i as u32 + 1)) == *r);
            (
                json!({
                    "motive": m.to_string(),
                    "a_n": ints(&a),
                    "reduced": ints(&reduced),
                    "sharp": Value::Array(
                        m.sharp_upto(upto).iter().map(|v| json!(format_rational(v))).collect()
                    ),
                }),
                vec![Verdict::new("a_n = #bar_n mod q^n", agree, None)],
            )
        }
    })
}
