mod args;
mod parse;
mod render;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use homfly_core::asymptotics::{f_integral, integral_analogue, sequence, AsymptoticsSample};
use homfly_core::coefficients::{alpha, beta, c_coeff, gamma, s_coeff};
use homfly_core::invariants::{colored_invariant, reduce_invariant, KnotId};
use homfly_core::laurent::json::{q_to_json_value, rational_to_json_value, to_json_value};
use homfly_core::laurent::{framed_integer, gauss_binomial, quantum_integer};
use homfly_core::numeric::evaluate;
use homfly_core::oracle::{fixture, homfly_skein};
use homfly_core::{Error, Rational};
use num_rational::Ratio;
use serde_json::json;

use args::{Cli, Command, DebugItem, Format, Output};
use render::{fixed, number, ratio_parts, Csv};

/// Largest color accepted for the knot formulas and for the Whitehead link.
const MAX_KNOT_COLOR: i32 = 8;
const MAX_LINK_COLOR: i32 = 6;
/// Largest N for the figure-eight sine formula and for the nested sums.
const MAX_N_SINE: u32 = 5000;
const MAX_N_SUM: u32 = 400;

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Usage(msg.into()))
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Usage(_) => 2,
        Failure::Lib(e) => match e {
            Error::Precondition(_)
            | Error::Domain(_)
            | Error::UnknownFixture(_)
            | Error::CrossingBudget { .. }
            | Error::InvalidDiagram(_) => 2,
            Error::PrecisionExhausted { .. }
            | Error::VanishingValue(_)
            | Error::VanishingDenominator(_)
            | Error::Quadrature(_) => 3,
            Error::NonDivisible { .. } | Error::NonQDenominator | Error::Io(_) | Error::Json(_) => 4,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("homfly: error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("homfly: error: {e}");
            return ExitCode::from(4);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("homfly: error: {m}"),
                Failure::Lib(e) => eprintln!("homfly: error: {e}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}

fn pick(out: &Output, default: Format, allowed: &[Format]) -> Res<Format> {
    let f = out.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return usage(format!("format {f:?} is not available for this command").to_lowercase());
    }
    Ok(f)
}

/// Writes to `--out` through a temporary file in the same directory, or
/// to stdout.
fn emit(out: &Output, text: &str) -> Res<()> {
    match &out.out {
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())?;
            so.flush()?;
        }
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
        }
    }
    Ok(())
}

fn json_line(v: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("value serializes"))
}

fn guard_n(knot: KnotId, big_n: u32) -> Res<()> {
    let limit = if knot == KnotId::FigureEight { MAX_N_SINE } else { MAX_N_SUM };
    if big_n > limit {
        return usage(format!("N = {big_n} is above the limit {limit} for {knot}"));
    }
    Ok(())
}

fn run(cmd: Command) -> Res<()> {
    match cmd {
        Command::Invariant { knot, n, out } => cmd_invariant(knot, n, &out),
        Command::Evaluate { knot, m, big_n, prec, out } => cmd_evaluate(knot, m, big_n, prec.prec, &out),
        Command::Asympt { knot, m, range, prec, out } => {
            guard_n(knot, range.to)?;
            let fmt = pick(&out, Format::Csv, &[Format::Csv, Format::Json])?;
            let rows = sequence(knot, m, range.from, range.to, range.step, prec.prec)?;
            emit(&out, &samples(&rows, fmt, None))
        }
        Command::Grid { knot, big_n, divisions, prec, out } => {
            guard_n(knot, big_n)?;
            let fmt = pick(&out, Format::Csv, &[Format::Csv, Format::Json])?;
            let pts = integral_analogue(knot, big_n, prec.prec, divisions)?;
            let ks: Vec<(u32, u32)> = pts.iter().map(|p| (p.k, p.divisions)).collect();
            let rows: Vec<AsymptoticsSample> = pts.into_iter().map(|p| p.sample).collect();
            emit(&out, &samples(&rows, fmt, Some(&ks)))
        }
        Command::Integral { from, to, steps, out } => cmd_integral(from, to, steps, &out),
        Command::Oracle { fixture: name, out } => {
            let fmt = pick(&out, Format::Json, &[Format::Json, Format::Text])?;
            let h = homfly_skein(&fixture(&name)?)?;
            let r = reduce_invariant(&h)?;
            emit(&out, &reduction_out(&r, fmt))
        }
        Command::Debug { what, args, out } => cmd_debug(what, &args, &out),
    }
}

fn reduction_out(r: &homfly_core::invariants::Reduction<Rational>, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{}\n", render::reduction_text(r)),
        _ => json_line(&render::reduction_json(r)),
    }
}

fn cmd_invariant(knot: KnotId, n: i32, out: &Output) -> Res<()> {
    let fmt = pick(out, Format::Json, &[Format::Json, Format::Text])?;
    if n < 1 {
        return usage(format!("color must be at least 1 (got {n})"));
    }
    let limit = if knot.is_link() { MAX_LINK_COLOR } else { MAX_KNOT_COLOR };
    if n > limit {
        return usage(format!("color {n} is above the limit {limit} for {knot}"));
    }
    if knot == KnotId::FigureEight {
        return usage("4_1 has no symbolic formula here; use `evaluate`");
    }
    let c = colored_invariant::<Rational>(knot, n)?;
    let r = c.reduced.expect("reduction is always present");
    emit(out, &reduction_out(&r, fmt))
}

fn cmd_evaluate(knot: KnotId, m: Ratio<i64>, big_n: u32, prec: Option<u32>, out: &Output) -> Res<()> {
    guard_n(knot, big_n)?;
    let fmt = pick(out, Format::Json, &[Format::Json, Format::Csv, Format::Text])?;
    let e = evaluate(knot, m, big_n, prec)?;
    let bits = e.precision_used;
    let (re, im) = (fixed(&e.value.re, bits), fixed(&e.value.im, bits));
    let text = match fmt {
        Format::Json => json_line(&json!({
            "re": number(&re),
            "im": number(&im),
            "precision_used": bits,
            "terms_evaluated": e.terms_evaluated,
            "terms_skipped_zero": e.terms_skipped_zero,
        })),
        Format::Csv => {
            let mut c = Csv::new(&["re", "im", "precision_used", "terms_evaluated", "terms_skipped_zero"]);
            c.row([re, im, bits.to_string(), e.terms_evaluated.to_string(), e.terms_skipped_zero.to_string()]);
            c.finish()
        }
        Format::Text => format!(
            "{re} + {im}*i\nprecision {bits} bits, {} terms, {} exact zeros\n",
            e.terms_evaluated, e.terms_skipped_zero
        ),
    };
    emit(out, &text)
}

/// Sequence rows, or grid rows when `ks` gives (k, divisions) per row.
fn samples(rows: &[AsymptoticsSample], fmt: Format, ks: Option<&[(u32, u32)]>) -> String {
    let fields = |s: &AsymptoticsSample| {
        let (p, q) = ratio_parts(&s.m);
        (p, q, fixed(&s.x, s.precision), fixed(&s.y, s.precision))
    };
    match (fmt, ks) {
        (Format::Json, None) => {
            let v: Vec<_> = rows
                .iter()
                .map(|s| {
                    let (p, q, x, y) = fields(s);
                    json!({"M_num": p, "M_den": q, "N": s.big_n, "x": number(&x), "y": number(&y)})
                })
                .collect();
            json_line(&v.into())
        }
        (Format::Json, Some(ks)) => {
            let v: Vec<_> = rows
                .iter()
                .zip(ks)
                .map(|(s, &(k, d))| {
                    let (p, q, x, y) = fields(s);
                    json!({"k": k, "divisions": d, "M_num": p, "M_den": q, "N": s.big_n,
                           "x": number(&x), "y": number(&y)})
                })
                .collect();
            json_line(&v.into())
        }
        (_, None) => {
            let mut c = Csv::new(&["M_num", "M_den", "N", "x", "y"]);
            for s in rows {
                let (p, q, x, y) = fields(s);
                c.row([p.to_string(), q.to_string(), s.big_n.to_string(), x, y]);
            }
            c.finish()
        }
        (_, Some(ks)) => {
            let mut c = Csv::new(&["k", "divisions", "M_num", "M_den", "N", "x"]);
            for (s, &(k, d)) in rows.iter().zip(ks) {
                let (p, q, x, _) = fields(s);
                c.row([k.to_string(), d.to_string(), p.to_string(), q.to_string(), s.big_n.to_string(), x]);
            }
            c.finish()
        }
    }
}

fn cmd_integral(from: Ratio<i64>, to: Ratio<i64>, steps: u32, out: &Output) -> Res<()> {
    let fmt = pick(out, Format::Csv, &[Format::Csv, Format::Json])?;
    let zero = Ratio::from_integer(0);
    if !(zero <= from && from <= to && to <= Ratio::new(5, 6)) {
        return usage(format!("need 0 <= from <= to <= 5/6 (got {from}, {to})"));
    }
    let n = if from == to { 0 } else { steps.max(1) };
    let mut pts = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let x = if n == 0 { from } else { from + (to - from) * Ratio::new(j as i64, n as i64) };
        let xf = *x.numer() as f64 / *x.denom() as f64;
        pts.push((xf, f_integral(xf)?));
    }
    let text = match fmt {
        Format::Json => {
            let v: Vec<_> = pts
                .iter()
                .map(|(x, f)| json!({"x": number(&format!("{x:.15}")), "f": number(&format!("{f:.15}"))}))
                .collect();
            json_line(&v.into())
        }
        _ => {
            let mut c = Csv::new(&["x", "f"]);
            for (x, f) in &pts {
                c.row([format!("{x:.15}"), format!("{f:.15}")]);
            }
            c.finish()
        }
    };
    emit(out, &text)
}

fn cmd_debug(what: DebugItem, a: &[i32], out: &Output) -> Res<()> {
    let fmt = pick(out, Format::Json, &[Format::Json, Format::Text])?;
    let want = match what {
        DebugItem::Qint | DebugItem::Framed => 1,
        DebugItem::S => 2,
        DebugItem::Gauss | DebugItem::Alpha => 3,
        DebugItem::Gamma => 4,
        DebugItem::Beta | DebugItem::C => 5,
    };
    if a.len() != want {
        return usage(format!("{what:?} takes {want} integer arguments (got {})", a.len()).to_lowercase());
    }
    let (json, text) = match what {
        DebugItem::Qint => {
            let p = quantum_integer::<Rational>(a[0]);
            (q_to_json_value(&p), render::q_text(&p))
        }
        DebugItem::Gauss => {
            let p = gauss_binomial::<Rational>(a[0], a[1], a[2])?;
            (q_to_json_value(&p), render::q_text(&p))
        }
        DebugItem::Alpha => {
            let p = alpha::<Rational>(a[0], a[1], a[2])?;
            (to_json_value(&p), render::poly_text(&p))
        }
        _ => {
            let r = match what {
                DebugItem::Framed => framed_integer::<Rational>(a[0]),
                DebugItem::Beta => beta(a[0], a[1], a[2], a[3], a[4])?,
                DebugItem::Gamma => gamma(a[0], a[1], a[2], a[3])?,
                DebugItem::C => c_coeff(a[0], a[1], a[2], a[3], a[4])?,
                DebugItem::S => s_coeff(a[0], a[1])?,
                _ => unreachable!(),
            };
            (rational_to_json_value(&r), render::ratfn_text(&r))
        }
    };
    let s = match fmt {
        Format::Text => format!("{text}\n"),
        _ => json_line(&json),
    };
    emit(out, &s)
}
