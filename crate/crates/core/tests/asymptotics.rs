//! Asymptotic forms measured against exact big-integer values.

use hamtour::asymptotics::{
    bender_pmf, corollary_asymptotic, integral_approx_sum, internal_free_asymptotic, moser_bound,
    ordered_partition_pmf, total_variation, wilf_f_asymptotic, wilf_relative_error, BellSource, Log,
};
use hamtour::experiments::{convergence, ConvergenceTarget};
use hamtour::formula::Tables;
use hamtour::num::ln_factorial;
use hamtour::{LogValue, NormalParams};

#[test]
fn bender_normal_approximation_at_200() {
    let mut tables = Tables::new();
    let m = 200;
    let exact = ordered_partition_pmf(&mut tables, m);
    assert!((exact.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    let normal: Vec<f64> = (0..=m).map(|k| bender_pmf(m, k).unwrap()).collect();
    let tv = total_variation(&exact, &normal);
    assert!(tv <= 0.05, "total variation {tv}");

    let argmax = (0..=m)
        .max_by(|&a, &b| exact[a].total_cmp(&exact[b]))
        .unwrap();
    let centre = (NormalParams::new().mu * m as f64).round() as i64;
    assert!((argmax as i64 - centre).abs() <= 2, "argmax {argmax} vs {centre}");
}

#[test]
fn integral_step_converges() {
    let mut tables = Tables::new();
    let mut ratio = |m: usize| {
        let exact: LogValue = Log::from_big(&tables.transitive_triangular_count(m).unwrap());
        let approx: LogValue = integral_approx_sum(&mut tables, m, BellSource::Exact).unwrap();
        approx.ratio_to(exact)
    };
    let (r50, r300) = (ratio(50), ratio(300));
    assert!((r300 - 1.0).abs() < 0.05, "ratio at 300: {r300}");
    assert!((r300 - 1.0).abs() < (r50 - 1.0).abs());
}

#[test]
fn wilf_substitution_in_integral_step() {
    let mut tables = Tables::new();
    let a: LogValue = integral_approx_sum(&mut tables, 100, BellSource::Exact).unwrap();
    let b: LogValue = integral_approx_sum(&mut tables, 100, BellSource::Wilf).unwrap();
    assert!((b.ratio_to(a) - 1.0).abs() < 1e-4);
}

#[test]
fn wilf_convergence_table() {
    let rows = convergence(ConvergenceTarget::Wilf, &[10, 20, 40]).unwrap();
    assert!(rows[2].error() < 1e-6);
    assert!(rows[0].error() > rows[2].error());
    let mut tables = Tables::new();
    let precise: Vec<f64> = [10, 20, 30, 40]
        .iter()
        .map(|&m| wilf_relative_error(&mut tables, m).unwrap())
        .collect();
    // correction terms decay roughly like |ln 2 / (ln 2 + 2πi)|^{m+1} ≈ 0.11^{m+1}
    for w in precise.windows(2) {
        let rate = (w[1] / w[0]).abs().powf(0.1);
        assert!(rate > 0.05 && rate < 0.15, "rate {rate}");
    }
}

#[test]
fn corollary_table_and_margin_over_moser() {
    let rows = convergence(ConvergenceTarget::Corollary, &[50, 150, 300]).unwrap();
    assert!(rows[2].error() < 0.05);
    assert!(rows[0].error() > rows[1].error() && rows[1].error() > rows[2].error());

    let mut last = f64::NEG_INFINITY;
    for n in (9..=900).step_by(3) {
        let gap = corollary_asymptotic::<f64>(n).unwrap().ln() - moser_bound::<f64>(n).unwrap().ln();
        assert!(gap > 0.0 && gap > last, "n = {n}: gap {gap}");
        last = gap;
    }
}

#[test]
fn internal_free_improves() {
    let rows = convergence(ConvergenceTarget::InternalFree, &[30, 150, 300]).unwrap();
    assert!(rows[2].error() < 0.01);
    assert!(rows[0].error() > rows[1].error() && rows[1].error() > rows[2].error());
    for n in (3..=900).step_by(3) {
        assert!(internal_free_asymptotic::<f64>(n).unwrap() > moser_bound(n).unwrap());
    }
}

#[test]
fn log_values_match_exact_integers() {
    let mut tables = Tables::new();
    for n in [5usize, 50, 170, 171, 500, 899] {
        let exact: LogValue = Log::from_big(&tables.factorial(n));
        let float: f64 = ln_factorial(n as u64);
        assert!(((exact.ln() - float) / exact.ln()).abs() < 1e-9, "n = {n}");
    }
    // wilf form at m = 1 stays a rough approximation
    let w: LogValue = wilf_f_asymptotic(1).unwrap();
    assert!((w.value() - 1.0).abs() > 0.01);
}
