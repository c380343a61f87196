//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use homfly_core::asymptotics::{f_integral, integral_analogue, sequence, volume_target};
use homfly_core::coefficients::*;
use homfly_core::invariants::{h_52, h_61, h_twist, invariant, reduce_invariant, KnotId};
use homfly_core::laurent::{gauss_binomial, QLaurent};
use homfly_core::numeric::{eval_invariant, eval_rational, fig8_sine, EvalPoint, MpReal};
use homfly_core::oracle::{fixture, fixture_name_for, homfly_skein};
use homfly_core::scalar::Real;
use homfly_core::Rational;
use num_rational::Ratio;

const SECOND: Duration = Duration::from_secs(1);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn oracle_equality() -> Outcome {
    let mut bad = Vec::new();
    for knot in [KnotId::FiveTwo, KnotId::SixOne, KnotId::Twist(5), KnotId::Whitehead] {
        let name = fixture_name_for(knot).unwrap();
        let formula = reduce_invariant(&invariant::<Rational>(knot, 1).unwrap()).unwrap();
        let skein = reduce_invariant(&homfly_skein(&fixture(name).unwrap()).unwrap()).unwrap();
        if formula != skein {
            bad.push(knot.to_string());
        }
    }
    outcome(bad.is_empty(), format!("5_2, 6_1, twist:5, wh at n = 1; mismatches: {bad:?}"))
}

fn twist_consistency() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        if h_twist::<Rational>(3, n).unwrap() != h_52(n).unwrap() {
            bad.push(format!("twist:3 n={n}"));
        }
        if h_twist::<Rational>(4, n).unwrap() != h_61(n).unwrap() {
            bad.push(format!("twist:4 n={n}"));
        }
    }
    outcome(bad.is_empty(), format!("n = 1..4; mismatches: {bad:?}"))
}

fn recurrences() -> Outcome {
    let mut bad = Vec::new();
    for m in 3..=6 {
        for n in 3..=6 {
            for j in 2..=4.min(m.min(n) - 1) {
                for i in 2..=j {
                    for k in 0..=i {
                        if beta::<Rational>(i, j, k, m, n).unwrap() != beta_recurrence_rhs(i, j, k, m, n).unwrap() {
                            bad.push(format!("beta {i} {j} {k} {m} {n}"));
                        }
                    }
                }
            }
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                for l1 in 0..=i {
                    for l2 in 0..=j.min(k) {
                        if l1 + l2 > 0 && c_coeff::<Rational>(l1, l2, i, j, k).unwrap() != c_recurrence_rhs(l1, l2, i, j, k).unwrap() {
                            bad.push(format!("c {l1} {l2} {i} {j} {k}"));
                        }
                    }
                }
                for l in 0..=j.min(k) {
                    if gamma::<Rational>(i, j, k, l).unwrap() != gamma_from_c(i, j, k, l).unwrap() {
                        bad.push(format!("gamma {i} {j} {k} {l}"));
                    }
                }
            }
        }
    }
    for b in [1, 2, -2] {
        for n in 1..=12 {
            for k in 0..=n {
                let g = |n, k| gauss_binomial::<Rational>(n, k, b).unwrap();
                let lower = if k >= 1 { g(n - 1, k - 1) } else { QLaurent::zero() };
                if g(n, k) != &lower + &g(n - 1, k).shift(b * k) || g(n, k) != &lower.shift(b * (n - k)) + &g(n - 1, k) {
                    bad.push(format!("gauss {n} {k} {b}"));
                }
            }
        }
    }
    for n in 0..=6 {
        let a = s_coeff_branch::<Rational>(n, n, SBranch::MAtLeastN).unwrap();
        let b = s_coeff_branch::<Rational>(n, n, SBranch::NAtLeastM).unwrap();
        if a != b {
            bad.push(format!("s {n}"));
        }
    }
    outcome(bad.is_empty(), format!("beta, c, gamma, Gauss-Pascal, s branches; failures: {bad:?}"))
}

fn cross_path() -> Outcome {
    const TOL: f64 = 1e-20;
    let mut worst = 0.0f64;
    let knots = [KnotId::FiveTwo, KnotId::SixOne, KnotId::Twist(5), KnotId::Twist(6), KnotId::Whitehead];
    for knot in knots {
        for n in 1..=3u32 {
            let pt = EvalPoint::from_parts(2, 1, n + 1, 128).unwrap();
            let sym = eval_rational::<MpReal>(&invariant(knot, n as i32).unwrap(), &pt).unwrap();
            let num = eval_invariant::<MpReal>(knot, &pt).unwrap().value;
            worst = worst.max(sym.rel_diff(&num));
        }
    }
    outcome(worst < TOL, format!("largest relative difference {worst:.2e} (tolerance {TOL:.0e})"))
}

fn kashaev_base() -> Outcome {
    let prec = 256;
    let v: MpReal = fig8_sine(&EvalPoint::from_parts(2, 1, 2, prec).unwrap());
    let err = (v - MpReal::from_i64_prec(prec, 5)).abs().to_f64();
    let tol = 2f64.powi(-(prec as i32) + 8);
    outcome(err <= tol, format!("|fig8_sine(2, 2) - 5| = {err:.2e}"))
}

fn figure_eight_volume() -> Outcome {
    const N: u32 = 2000;
    let prec = 16 * N;
    let v: MpReal = fig8_sine(&EvalPoint::from_parts(2, 1, N, prec).unwrap());
    let x = 2.0 * PI * v.ln().to_f64() / N as f64;
    let target = volume_target(KnotId::FigureEight).unwrap().vol;
    let d = (x - target).abs();
    outcome(d < 0.05, format!("2π log(fig8_sine)/N = {x:.6} at N = {N}, distance {d:.4} (< 0.05)"))
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton's method.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// f(0) by splitting log(2 sin t) = log(2t) + log(sin t / t): the first part
/// in closed form, the smooth second part by composite Gauss-Legendre with
/// the panel count doubled until two passes agree.
fn f0_oracle() -> f64 {
    let b = 5.0 * PI / 6.0;
    let exact = b * (2.0 * b).ln() - b;
    let rule = gauss_legendre(12);
    let g = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let composite = |panels: usize| {
        let h = b / panels as f64;
        (0..panels)
            .map(|p| {
                let c = (p as f64 + 0.5) * h;
                rule.iter().map(|(x, w)| w * g(c + 0.5 * h * x)).sum::<f64>() * 0.5 * h
            })
            .sum::<f64>()
    };
    let mut panels = 1;
    let mut prev = composite(panels);
    loop {
        panels *= 2;
        let cur = composite(panels);
        if (cur - prev).abs() < 1e-12 || panels > 1 << 16 {
            return 4.0 * (exact + cur);
        }
        prev = cur;
    }
}

fn integral() -> Outcome {
    let oracle = f0_oracle();
    let f0 = f_integral(0.0).unwrap();
    let f_end = f_integral(5.0 / 6.0).unwrap();
    let d = (f0 - oracle).abs();
    outcome(
        d < 1e-10 && f_end == 0.0,
        format!("f(0) = {f0:.15}, oracle {oracle:.15}, difference {d:.1e}; f(5/6) = {f_end}"),
    )
}

fn convergence(knot: KnotId, threshold: f64) -> Outcome {
    let target = volume_target(knot).unwrap();
    let rows = sequence(knot, Ratio::from_integer(2), 80, 175, 5, None).unwrap();
    let first = rows.first().unwrap();
    let last = rows.last().unwrap();
    let d0 = target.distance(first.x_f64(), first.y_f64());
    let d1 = target.distance(last.x_f64(), last.y_f64());
    outcome(
        rows.len() == 20 && d1 < d0 && d1 < threshold,
        format!(
            "M = 2, N = 80..175 step 5: distance {d0:.4} at N = 80, {d1:.4} at N = 175 (< {threshold}); \
             final (x, y) = ({:.5}, {:.5})",
            last.x_f64(),
            last.y_f64()
        ),
    )
}

fn grid_overlap() -> Outcome {
    let a = integral_analogue(KnotId::SixOne, 75, None, 12).unwrap();
    let b = integral_analogue(KnotId::SixOne, 125, None, 12).unwrap();
    let worst = a
        .iter()
        .zip(&b)
        .map(|(p, q)| (p.sample.x_f64() - q.sample.x_f64()).abs())
        .fold(0.0, f64::max);
    outcome(a.len() == 11 && worst < 0.2, format!("6_1, N = 75 vs 125, k = 1..11: largest gap {worst:.4} (< 0.2)"))
}

fn run_cli(threads: usize, args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_homfly"))
        .arg("--threads")
        .arg(threads.to_string())
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 4] = [
        &["grid", "--knot", "6_1", "--N", "75"],
        &["asympt", "--knot", "wh", "--M", "2", "--N-range", "80:100:10"],
        &["asympt", "--knot", "5_2", "--M", "1.3", "--N-range", "80:90:5", "--format", "json"],
        &["invariant", "--knot", "6_1", "--n", "3"],
    ];
    let mut bad = Vec::new();
    for args in runs {
        let one = run_cli(1, args);
        if run_cli(4, args) != one || run_cli(7, args) != one {
            bad.push(args.join(" "));
        }
    }
    outcome(bad.is_empty(), format!("CLI output at 1, 4 and 7 threads; differing runs: {bad:?}"))
}

fn main() {
    type Check = fn() -> Outcome;
    let checks: [(&str, Duration, Check); 12] = [
        ("oracle equality at color 1", 60 * SECOND, oracle_equality),
        ("twist family contains 5_2 and 6_1", 120 * SECOND, twist_consistency),
        ("coefficient recurrences", 120 * SECOND, recurrences),
        ("symbolic/numeric cross-path", 60 * SECOND, cross_path),
        ("fig8 at N = 2", Duration::MAX, kashaev_base),
        ("fig8 volume at N = 2000", 10 * SECOND, figure_eight_volume),
        ("integral f(x)", 10 * SECOND, integral),
        ("5_2 convergence", 1800 * SECOND, || convergence(KnotId::FiveTwo, 0.15)),
        ("6_1 convergence", 1800 * SECOND, || convergence(KnotId::SixOne, 0.2)),
        ("Whitehead convergence", 1800 * SECOND, || convergence(KnotId::Whitehead, 0.2)),
        ("6_1 integral-analogue overlap", Duration::MAX, grid_overlap),
        ("determinism across thread counts", Duration::MAX, determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let r = check();
        let took = start.elapsed();
        let in_time = took <= *budget;
        let ok = r.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget_note = if *budget == Duration::MAX {
            String::new()
        } else {
            format!(", budget {}s", budget.as_secs())
        };
        println!(
            "criterion {:>2} {}: {} ({}; {:.1}s{budget_note})",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            r.detail,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
