//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hamtour::asymptotics::{
    corollary_asymptotic, internal_free_asymptotic, moser_bound, wilf_f_asymptotic, wilf_relative_error, Log,
};
use hamtour::exact::{
    brute_force_cycles, brute_force_path_covers, count_hamilton_cycles, count_hamilton_paths, find_hamilton_path,
    path_cover_profile, Caps,
};
use hamtour::experiments::{monte_carlo, ExperimentReport, MonteCarloKind};
use hamtour::formula::{hamilton_count_triangular, Tables};
use hamtour::tournament::{all_tournaments, compose_c3, make_random, make_transitive, Tournament};
use hamtour::{BigCount, LogValue};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sci(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>().join(", ")
}

fn small_tournaments() -> Vec<Tournament> {
    (1..=5).flat_map(all_tournaments).collect()
}

fn part_triples() -> Vec<[Tournament; 3]> {
    let parts: Vec<Tournament> = (1..=3).flat_map(all_tournaments).collect();
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            for c in &parts {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}

fn ac1_identity() -> Outcome {
    let triples = part_triples();
    for [a, b, c] in &triples {
        let via_profiles = hamilton_count_triangular(a, b, c).map_err(|e| e.to_string())?;
        let composed = compose_c3(a, b, c).unwrap();
        let direct = count_hamilton_cycles(composed.composed()).unwrap();
        ensure(via_profiles == direct, || {
            format!("{a:?} {b:?} {c:?}: identity {via_profiles} != DP {direct}")
        })?;
    }
    Ok(format!("{} compositions, exact", triples.len()))
}

fn ac2_bound() -> Outcome {
    let mut tables = Tables::new();
    let (mut equal_cases, mut strict_cases) = (0, 0);
    for [a, b, c] in &part_triples() {
        let composed = compose_c3(a, b, c).unwrap();
        let count = count_hamilton_cycles(composed.composed()).unwrap();
        let bound = tables.lower_bound(a.n(), b.n(), c.n()).unwrap();
        let transitive = a.is_transitive() && b.is_transitive() && c.is_transitive();
        ensure(count >= bound, || format!("count {count} < bound {bound}"))?;
        ensure((count == bound) == transitive, || {
            format!("{a:?} {b:?} {c:?}: count {count}, bound {bound}, all transitive {transitive}")
        })?;
        if transitive {
            equal_cases += 1;
        } else {
            strict_cases += 1;
        }
    }
    Ok(format!("{equal_cases} equal (all transitive), {strict_cases} strict"))
}

fn ac3_transitive_formula() -> Outcome {
    let mut tables = Tables::new();
    let t2 = tables.transitive_triangular_count(2).unwrap();
    ensure(t2 == BigCount::from(5u8), || format!("m=2 gives {t2}"))?;
    for m in [2usize, 3] {
        let t = make_transitive(m).unwrap();
        let composed = compose_c3(&t, &t, &t).unwrap();
        let formula = tables.transitive_triangular_count(m).unwrap();
        let dp = count_hamilton_cycles(composed.composed()).unwrap();
        let brute = brute_force_cycles(composed.composed()).unwrap();
        ensure(formula == dp && dp == brute, || {
            format!("m={m}: formula {formula}, DP {dp}, brute force {brute}")
        })?;
    }
    Ok(format!(
        "m=2 -> {t2}, m=3 -> {}",
        tables.transitive_triangular_count(3).unwrap()
    ))
}

fn ac4_transitive_covers() -> Outcome {
    let mut tables = Tables::new();
    for m in 1..=10 {
        let profile = path_cover_profile(&make_transitive(m).unwrap()).unwrap();
        for k in 1..=m {
            let s = tables.stirling2(m, k);
            ensure(profile.get(k) == Some(&s), || {
                format!("m={m}, k={k}: P = {:?}, S = {s}", profile.get(k))
            })?;
        }
    }
    Ok("m <= 10, all k".into())
}

fn ac5_oracles() -> Outcome {
    let small = small_tournaments();
    for t in &small {
        let dp = count_hamilton_cycles(t).unwrap();
        let brute = brute_force_cycles(t).unwrap();
        ensure(dp == brute, || format!("{t:?}: cycles DP {dp} vs brute {brute}"))?;
        let profile = path_cover_profile(t).unwrap();
        for k in 1..=t.n() {
            let b = brute_force_path_covers(t, k).unwrap();
            ensure(profile.get(k) == Some(&b), || format!("{t:?}, k={k}: covers DP vs brute {b}"))?;
        }
    }
    for i in 0..200u64 {
        let n = 6 + (i % 4) as usize;
        let t = make_random(n, 0xACCE_5500 + i).unwrap();
        let dp = count_hamilton_cycles(&t).unwrap();
        let brute = brute_force_cycles(&t).unwrap();
        ensure(dp == brute, || format!("{t:?}: cycles DP {dp} vs brute {brute}"))?;
    }
    Ok(format!("{} exhaustive + 200 random", small.len()))
}

fn ac6_wilf() -> Outcome {
    let mut tables = Tables::new();
    let exact: LogValue = Log::from_big(&tables.ordered_bell(40));
    let asym: LogValue = wilf_f_asymptotic(40).unwrap();
    let err40 = (exact.ratio_to(asym) - 1.0).abs();
    ensure(err40 < 1e-6, || format!("|ratio - 1| = {err40:e} at m = 40"))?;
    let errs: Vec<f64> = [10, 20, 30, 40]
        .iter()
        .map(|&m| wilf_relative_error(&mut tables, m).unwrap().abs())
        .collect();
    ensure(errs.windows(2).all(|w| w[1] < w[0]), || {
        format!("errors not strictly decreasing: {}", sci(&errs))
    })?;
    Ok(format!("f64 error at 40: {err40:.1e}; precise errors {}", sci(&errs)))
}

fn ac7_corollary() -> Outcome {
    let mut tables = Tables::new();
    let mut errs = Vec::new();
    for n in [150usize, 450, 900] {
        let exact: LogValue = Log::from_big(&tables.transitive_triangular_count(n / 3).unwrap());
        let asym: LogValue = corollary_asymptotic(n).unwrap();
        errs.push((asym.ratio_to(exact) - 1.0).abs());
    }
    ensure(errs[2] < 0.05, || format!("|ratio - 1| = {} at n = 900", errs[2]))?;
    ensure(errs.windows(2).all(|w| w[1] < w[0]), || format!("not improving: {errs:?}"))?;
    Ok(format!("|ratio - 1| at n = 150, 450, 900: {}", sci(&errs)))
}

fn ac8_internal_free() -> Outcome {
    let mut tables = Tables::new();
    let exact300: LogValue = Log::from_big(&tables.internal_free_count(100).unwrap());
    let err = (internal_free_asymptotic::<f64>(300).unwrap().ratio_to(exact300) - 1.0).abs();
    ensure(err < 0.01, || format!("|ratio - 1| = {err} at n = 300"))?;
    for n in (3..=300).step_by(3) {
        let exact: LogValue = Log::from_big(&tables.internal_free_count(n / 3).unwrap());
        let moser: LogValue = moser_bound(n).unwrap();
        ensure(exact > moser, || format!("n = {n}: exact {exact:?} <= moser {moser:?}"))?;
    }
    Ok(format!("|ratio - 1| = {err:.3e} at n = 300; above Moser for 3 <= n <= 300"))
}

const MC_SEED: u64 = 0;
const MC_SAMPLES: usize = 10_000;
const MC_BAND: f64 = 3.0;

fn mc(kind: MonteCarloKind, n: usize) -> Outcome {
    let run = || monte_carlo(kind, n, MC_SAMPLES, MC_SEED, &Caps::default()).map_err(|e| e.to_string());
    let report: ExperimentReport = run()?;
    ensure(run()? == report, || "rerun differs".into())?;
    let summary = format!(
        "n = {n}, mean {:.4} vs {} (se {:.4}, z {:.2})",
        report.mean,
        report.theoretical,
        report.std_error,
        report.z_score.unwrap_or(0.0)
    );
    ensure(report.within(MC_BAND), || summary.clone())?;
    Ok(summary)
}

fn ac9a_szele_paths() -> Outcome {
    mc(MonteCarloKind::SzelePaths, 7)
}

fn ac9b_szele_cycles() -> Outcome {
    mc(MonteCarloKind::SzeleCycles, 6)
}

fn ac9c_wormald() -> Outcome {
    mc(MonteCarloKind::Wormald, 9)
}

fn ac10_redei() -> Outcome {
    let small = small_tournaments();
    for t in &small {
        ensure(find_hamilton_path(t).validates(t), || format!("{t:?}: invalid path"))?;
        let p = count_hamilton_paths(t).unwrap();
        ensure(p.bit(0), || format!("{t:?}: even path count {p}"))?;
    }
    for i in 0..500u64 {
        let t = make_random(1 + (i % 16) as usize, 0x5ED_E100 + i).unwrap();
        ensure(find_hamilton_path(&t).validates(&t), || format!("{t:?}: invalid path"))?;
    }
    Ok(format!("{} exhaustive + 500 random", small.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1", "triangular identity, part sizes {1,2,3}^3", ac1_identity),
        ("AC2", "lower bound, equality iff all parts transitive", ac2_bound),
        ("AC3", "transitive formula vs DP and brute force", ac3_transitive_formula),
        ("AC4", "P(transitive m, k) = S(m, k), m <= 10", ac4_transitive_covers),
        ("AC5", "DP vs brute-force oracles", ac5_oracles),
        ("AC6", "Wilf asymptotic at m = 40 and monotone", ac6_wilf),
        ("AC7", "corollary ratio within 5% at n = 900, improving", ac7_corollary),
        ("AC8", "internal-free asymptotic within 1% at n = 300", ac8_internal_free),
        ("AC9a", "Monte Carlo: Hamilton paths, n = 7, vs 78.75", ac9a_szele_paths),
        ("AC9b", "Monte Carlo: Hamilton cycles, n = 6, vs 1.875", ac9b_szele_cycles),
        ("AC9c", "Monte Carlo: triangular cycles, n = 9, vs 157.5", ac9c_wormald),
        ("AC10", "insertion path validates, P(T,1) odd", ac10_redei),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id:<5} {name} [{detail}] ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:<5} {name} [{why}] ({secs:.2}s)");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
