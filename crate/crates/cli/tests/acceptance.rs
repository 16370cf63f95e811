//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::Ratio;
use polyvenn::layout::{central_binomial_bound_holds, MAX_BOUND_M};
use polyvenn::scd::central_binomial;
use polyvenn::{
    approximation_ratio, count_column_convex, count_column_convex_bruteforce,
    count_fixed_polyominoes, count_free_polyominoes, generate, is_minimum_area, layout_scd,
    parse_pvn, render_ascii, render_svg, scd_aigner, scd_christmas_tree, serialize_pvn,
    validate_scd, validate_venn, GridDiagram, Method, RatioMethod,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn polyvenn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_polyvenn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    fs::create_dir_all(&dir).unwrap();
    dir
}

/// Every diagram the constructions produce for `n <= max_n`.
fn all_generated(max_n: u32) -> Vec<(Method, u32, GridDiagram)> {
    let mut out = Vec::new();
    for method in Method::ALL {
        for n in method.min_n()..=max_n {
            out.push((method, n, generate(n, method).unwrap()));
        }
    }
    out
}

fn gen_area(n: u32, method: &str) -> Result<usize, String> {
    let o = polyvenn(&["gen", "--n", &n.to_string(), "--method", method]);
    ensure(o.status.success(), || format!("gen {method} n={n} failed"))?;
    let d = parse_pvn(&String::from_utf8_lossy(&o.stdout)).map_err(|e| e.to_string())?;
    Ok(d.area())
}

fn area_formulas() -> Outcome {
    for n in 3..=10u32 {
        let naive = (1usize << n) + (1usize << (n - 1)) - 4;
        let got = gen_area(n, "naive")?;
        ensure(got == naive, || format!("naive n={n}: area {got}, expected {naive}"))?;

        let c = central_binomial(n) as usize;
        let scd = (c.saturating_sub(2)).div_ceil(2).max(1) + (1usize << n) - 2;
        let got = gen_area(n, "scd-aigner")?;
        ensure(got == scd, || format!("scd-aigner n={n}: area {got}, expected {scd}"))?;
    }
    ensure(gen_area(5, "naive")? == 44, || "naive n=5 is not 44".into())?;
    ensure(gen_area(5, "scd-aigner")? == 34, || "scd n=5 is not 34".into())?;
    ensure(gen_area(4, "scd-aigner")? == 16, || "scd n=4 is not 16".into())
}

fn validity_suite() -> Outcome {
    for (method, n, d) in all_generated(10) {
        let report = validate_venn(&d);
        ensure(report.overall(), || format!("{method} n={n}:\n{report}"))?;
        ensure(report.checks().len() == 7, || "expected seven checks".into())?;
    }
    Ok(())
}

fn ratio_claims() -> Outcome {
    let three_halves = Ratio::new(3u64, 2);
    for n in 3..=20 {
        let r = approximation_ratio(RatioMethod::Naive, n).map_err(|e| e.to_string())?;
        ensure(r < three_halves, || format!("naive ratio {r} at n={n} is not below 3/2"))?;
    }
    let at10 = approximation_ratio(RatioMethod::Scd, 10).map_err(|e| e.to_string())?;
    ensure(at10 == Ratio::new(1147, 1023), || format!("scd ratio at n=10 is {at10}"))?;
    let even: Vec<(u32, Ratio<u64>)> = (4..=20)
        .step_by(2)
        .map(|n| (n, approximation_ratio(RatioMethod::Scd, n).unwrap()))
        .collect();
    for w in even.windows(2) {
        let ((a, ra), (b, rb)) = (w[0], w[1]);
        ensure(rb < ra, || {
            format!("scd ratio not strictly decreasing: n={a} gives {ra}, n={b} gives {rb}")
        })?;
    }
    Ok(())
}

fn scd_laws() -> Outcome {
    for n in 1..=12 {
        for (name, dec) in [("aigner", scd_aigner(n)), ("christmas", scd_christmas_tree(n))] {
            let dec = dec.map_err(|e| e.to_string())?;
            let report = validate_scd(&dec);
            ensure(report.passed(), || format!("{name} n={n}: {report:?}"))?;
            ensure(dec.len() as u64 == central_binomial(n), || {
                format!("{name} n={n}: {} chains", dec.len())
            })?;
            if n == 4 {
                let mut lengths = dec.lengths();
                lengths.sort_unstable_by(|a, b| b.cmp(a));
                ensure(lengths == [5, 3, 3, 3, 1, 1], || format!("{name} n=4 lengths {lengths:?}"))?;
            }
        }
    }
    ensure(central_binomial(4) == 6 && central_binomial(6) == 20, || "chain counts".into())
}

/// Coefficients of x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3) by power-series division.
fn series_coefficients(terms: usize) -> Vec<i64> {
    let numerator = [0i64, 1, -3, 3, -1];
    let denominator = [1i64, -5, 7, -4];
    let mut q = vec![0i64; terms + 1];
    for k in 0..=terms {
        let mut v = numerator.get(k).copied().unwrap_or(0);
        for j in 1..denominator.len().min(k + 1) {
            v -= denominator[j] * q[k - j];
        }
        q[k] = v;
    }
    q
}

fn polyomino_counts() -> Outcome {
    let fixed: Vec<u64> = (1..=5).map(|k| count_fixed_polyominoes(k).unwrap()).collect();
    ensure(fixed == [1, 2, 6, 19, 63], || format!("fixed counts {fixed:?}"))?;
    let free4 = count_free_polyominoes(4).map_err(|e| e.to_string())?;
    ensure(free4 == 5, || format!("{free4} free tetrominoes"))?;

    let expected = [1u64, 2, 6, 19, 61, 196];
    for (k, &want) in (1..=6).zip(&expected) {
        let rec = count_column_convex(k).map_err(|e| e.to_string())?;
        let brute = count_column_convex_bruteforce(k).map_err(|e| e.to_string())?;
        ensure(rec == BigUint::from(want) && brute == want, || {
            format!("column-convex k={k}: recurrence {rec}, brute force {brute}, expected {want}")
        })?;
    }
    for (k, coef) in series_coefficients(8).into_iter().enumerate().skip(1) {
        let rec = count_column_convex(k).map_err(|e| e.to_string())?;
        ensure(rec == BigUint::from(coef as u64), || {
            format!("column-convex k={k}: recurrence {rec}, series {coef}")
        })?;
    }
    Ok(())
}

fn search_found(n: u32, area: usize, limit: Duration) -> Outcome {
    let start = Instant::now();
    let o = polyvenn(&["search", "--n", &n.to_string(), "--target", "min-area"]);
    let elapsed = start.elapsed();
    ensure(o.status.code() == Some(0), || {
        format!("search n={n}: {}", String::from_utf8_lossy(&o.stdout).trim())
    })?;
    ensure(elapsed < limit, || format!("search n={n} took {elapsed:?}"))?;
    let d = parse_pvn(&String::from_utf8_lossy(&o.stdout)).map_err(|e| e.to_string())?;
    ensure(d.area() == area, || format!("search n={n} area {}", d.area()))?;
    ensure(validate_venn(&d).overall(), || format!("search n={n} result is not valid"))?;
    ensure(is_minimum_area(&d), || format!("search n={n} result is not minimum area"))
}

fn minimum_area_search() -> Outcome {
    search_found(2, 3, Duration::from_secs(1))?;
    search_found(3, 7, Duration::from_secs(300))?;
    let d = layout_scd(3, &scd_aigner(3).unwrap()).map_err(|e| e.to_string())?;
    ensure(d.area() == 7 && is_minimum_area(&d) && validate_venn(&d).overall(), || {
        "layout_scd(3) is not a minimum-area diagram".into()
    })
}

fn asymptotic_bound() -> Outcome {
    ensure(MAX_BOUND_M >= 30, || "bound range too short".into())?;
    for m in 1..=30 {
        let holds = central_binomial_bound_holds(m).map_err(|e| e.to_string())?;
        ensure(holds, || format!("bound fails at m={m}"))?;
    }
    ensure(central_binomial(10) == 252, || "C(10,5) is not 252".into())
}

fn serialization() -> Outcome {
    let dir = scratch_dir();
    for (method, n, d) in all_generated(8) {
        let text = serialize_pvn(&d);
        let back = parse_pvn(&text).map_err(|e| e.to_string())?;
        ensure(back == d, || format!("{method} n={n}: round trip changed the diagram"))?;
        ensure(serialize_pvn(&back) == text, || format!("{method} n={n}: text changed"))?;
        ensure(render_ascii(&back) == render_ascii(&d), || format!("{method} n={n}: ascii differs"))?;
        let svg = render_svg(&d).map_err(|e| e.to_string())?;
        ensure(render_svg(&back).as_ref() == Ok(&svg), || format!("{method} n={n}: svg differs"))?;

        let file = dir.join(format!("{method}-{n}.pvn"));
        fs::write(&file, &text).unwrap();
        for format in ["ascii", "svg"] {
            let args = ["render", file.to_str().unwrap(), "--format", format];
            let (a, b) = (polyvenn(&args), polyvenn(&args));
            ensure(a.status.success() && a.stdout == b.stdout, || {
                format!("{method} n={n}: {format} renders differ between runs")
            })?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "area formulas", limit: secs(1), run: area_formulas },
        Criterion { id: 2, name: "validity suite", limit: secs(10), run: validity_suite },
        Criterion { id: 3, name: "ratio claims", limit: secs(1), run: ratio_claims },
        Criterion { id: 4, name: "scd laws", limit: secs(5), run: scd_laws },
        Criterion { id: 5, name: "polyomino counts", limit: secs(60), run: polyomino_counts },
        Criterion { id: 6, name: "minimum-area search", limit: secs(301), run: minimum_area_search },
        Criterion { id: 7, name: "asymptotic bound", limit: secs(1), run: asymptotic_bound },
        Criterion { id: 8, name: "serialization", limit: secs(5), run: serialization },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed >= c.limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {:?}", c.limit));
        }
        match outcome {
            Ok(()) => println!("criterion {}: PASS {} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {} ({elapsed:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
