//! Seeded Monte Carlo experiments, convergence tables and the exhaustive
//! small-case self test.

use std::io::{self, Write};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{
    corollary_asymptotic, integral_approx_sum, internal_free_asymptotic, szele_expected_cycles_exact,
    szele_expected_paths_exact, wilf_f_asymptotic, wormald_expected_cycles_exact, BellSource, Log,
};
use crate::error::{Error, Result};
use crate::exact::{
    brute_force_cycles, brute_force_path_covers, brute_force_paths, check_cap, count_hamilton_cycles,
    count_hamilton_cycles_with, count_hamilton_paths, count_hamilton_paths_with, find_hamilton_path,
    path_cover_profile, Caps,
};
use crate::formula::{hamilton_count_triangular, Tables};
use crate::tournament::{all_tournaments, compose_c3, make_random, Tournament};

/// One SplitMix64 step.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of sample `i` under master seed `master`: the `i`-th output of a
/// SplitMix64 stream started at `master`.
pub fn sample_seed(master: u64, i: u64) -> u64 {
    splitmix64(master.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonteCarloKind {
    /// Hamilton paths of a uniformly random tournament.
    SzelePaths,
    /// Hamilton cycles of a uniformly random tournament.
    SzeleCycles,
    /// Hamilton cycles of `C3` over three random `n/3`-vertex parts.
    Wormald,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub kind: MonteCarloKind,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub mean: f64,
    pub variance: f64,
    pub std_error: f64,
    pub theoretical: f64,
    /// `(mean − theoretical)/std_error`; absent when the variance is zero.
    pub z_score: Option<f64>,
}

impl ExperimentReport {
    /// True iff the sample mean lies within `band` standard errors of the
    /// expectation.
    pub fn within(&self, band: f64) -> bool {
        match self.z_score {
            Some(z) => z.abs() <= band,
            None => self.mean == self.theoretical,
        }
    }
}

fn sample_value(kind: MonteCarloKind, n: usize, seed: u64, caps: &Caps) -> Result<f64> {
    let count: u128 = match kind {
        MonteCarloKind::SzelePaths => count_hamilton_paths_with(&make_random(n, seed)?, caps)?,
        MonteCarloKind::SzeleCycles => count_hamilton_cycles_with(&make_random(n, seed)?, caps)?,
        MonteCarloKind::Wormald => {
            let m = n / 3;
            let part = |j: u64| make_random(m, splitmix64(seed ^ j));
            let c = compose_c3(&part(1)?, &part(2)?, &part(3)?)?;
            count_hamilton_cycles_with(c.composed(), caps)?
        }
    };
    Ok(count as f64)
}

/// Draws `samples` tournaments and counts each exactly.
///
/// Samples are generated in parallel from per-index seeds and reduced in
/// index order, so the report does not depend on the thread count.
pub fn monte_carlo(kind: MonteCarloKind, n: usize, samples: usize, seed: u64, caps: &Caps) -> Result<ExperimentReport> {
    let theoretical = match kind {
        MonteCarloKind::SzelePaths => szele_expected_paths_exact(n)?,
        MonteCarloKind::SzeleCycles => szele_expected_cycles_exact(n)?,
        MonteCarloKind::Wormald => wormald_expected_cycles_exact(n)?,
    }
    .to_f64()
    .expect("finite expectation");
    check_cap("monte carlo sample", n, caps.paths)?;
    if samples < 2 {
        return Err(Error::InvalidSize("at least two samples are needed".into()));
    }

    let values: Vec<f64> = (0..samples as u64)
        .into_par_iter()
        .map(|i| sample_value(kind, n, sample_seed(seed, i), caps))
        .collect::<Result<_>>()?;

    let count = samples as f64;
    let mean = values.iter().sum::<f64>() / count;
    let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count - 1.0);
    let std_error = (variance / count).sqrt();
    let z_score = (variance > 0.0).then(|| (mean - theoretical) / std_error);
    Ok(ExperimentReport {
        kind,
        n,
        samples,
        seed,
        mean,
        variance,
        std_error,
        theoretical,
        z_score,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvergenceTarget {
    /// Ordered Bell numbers against `m!/(2 (ln 2)^{m+1})`; index `m`.
    Wilf,
    /// Transitive triangular count against the corollary form; index `m`
    /// (part size, `n = 3m`).
    Corollary,
    /// Transitive triangular count against the normal-integral step with
    /// exact `f(m)`; index `m`.
    Integral,
    /// `m!³/m` against `sqrt(8π³n/3)(n/3e)^n`; index `n`, reported as `m = n/3`.
    InternalFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub m: usize,
    pub exact_log: f64,
    pub asymptotic_log: f64,
    /// `asymptotic / exact`.
    pub ratio: f64,
}

impl ConvergenceRow {
    fn new(m: usize, exact: Log<f64>, asymptotic: Log<f64>) -> Self {
        ConvergenceRow {
            m,
            exact_log: exact.ln(),
            asymptotic_log: asymptotic.ln(),
            ratio: asymptotic.ratio_to(exact),
        }
    }

    pub fn error(&self) -> f64 {
        (self.ratio - 1.0).abs()
    }
}

pub fn convergence(target: ConvergenceTarget, indices: &[usize]) -> Result<Vec<ConvergenceRow>> {
    let mut tables = Tables::new();
    indices
        .iter()
        .map(|&i| {
            Ok(match target {
                ConvergenceTarget::Wilf => ConvergenceRow::new(
                    i,
                    Log::from_big(&tables.ordered_bell(i)),
                    wilf_f_asymptotic(i)?,
                ),
                ConvergenceTarget::Corollary => ConvergenceRow::new(
                    i,
                    Log::from_big(&tables.transitive_triangular_count(i)?),
                    corollary_asymptotic(3 * i)?,
                ),
                ConvergenceTarget::Integral => ConvergenceRow::new(
                    i,
                    Log::from_big(&tables.transitive_triangular_count(i)?),
                    integral_approx_sum(&mut tables, i, BellSource::Exact)?,
                ),
                ConvergenceTarget::InternalFree => {
                    let asymptotic = internal_free_asymptotic(i)?;
                    ConvergenceRow::new(
                        i / 3,
                        Log::from_big(&tables.internal_free_count(i / 3)?),
                        asymptotic,
                    )
                }
            })
        })
        .collect()
}

pub const CONVERGENCE_CSV_HEADER: &str = "m,exact_log,asymptotic_log,ratio";

pub fn write_convergence_csv<W: Write>(rows: &[ConvergenceRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CONVERGENCE_CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{:.15e},{:.15e},{:.15e}", r.m, r.exact_log, r.asymptotic_log, r.ratio)?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SelftestOptions {
    /// Seed for the random-instance portion.
    pub seed: u64,
    /// Slips a tournament with a doubly oriented pair into the validation
    /// sweep.
    pub inject_corruption: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

/// Runs `check` over `cases`, stopping at the first failure.
fn property<T>(
    name: &'static str,
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> std::result::Result<(), String>,
) -> PropertyResult {
    let mut checked = 0;
    for case in cases {
        checked += 1;
        if let Err(why) = check(&case) {
            return PropertyResult {
                name,
                passed: false,
                checked,
                failure: Some(why),
            };
        }
    }
    PropertyResult {
        name,
        passed: true,
        checked,
        failure: None,
    }
}

fn small_tournaments() -> Vec<Tournament> {
    (1..=5).flat_map(all_tournaments).collect()
}

fn eq_or<T: PartialEq + std::fmt::Debug>(a: T, b: T, ctx: impl Fn() -> String) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: {a:?} != {b:?}", ctx()))
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// Exhaustive oracle sweep over all tournaments on at most five vertices and
/// all compositions with part sizes at most three.
pub fn selftest(opts: SelftestOptions) -> SelftestReport {
    let small = small_tournaments();
    let mut props = Vec::new();

    let mut validation_set = small.clone();
    if opts.inject_corruption {
        let mut m = validation_set[validation_set.len() - 1].to_matrix();
        m[1][0] = m[0][1];
        validation_set.push(Tournament::from_matrix_unchecked(&m));
    }
    props.push(property("tournament invariants, n <= 5", &validation_set, |t| {
        t.validate().map_err(|v| format!("{t:?}: {v}"))
    }));

    props.push(property("cycle DP = permutation brute force, n <= 5", &small, |t| {
        let dp = count_hamilton_cycles(t).map_err(err_str)?;
        eq_or(dp, brute_force_cycles(t).map_err(err_str)?, || format!("{t:?}"))
    }));

    let random: Vec<Tournament> = (0..200u64)
        .map(|i| {
            let s = sample_seed(opts.seed, i);
            make_random(6 + (s % 4) as usize, s).expect("n >= 6")
        })
        .collect();
    props.push(property("cycle DP = permutation brute force, 200 random 6 <= n <= 9", &random, |t| {
        let dp = count_hamilton_cycles(t).map_err(err_str)?;
        eq_or(dp, brute_force_cycles(t).map_err(err_str)?, || format!("{t:?}"))
    }));

    props.push(property("path DP = permutation brute force, n <= 5", &small, |t| {
        let dp = count_hamilton_paths(t).map_err(err_str)?;
        eq_or(dp, brute_force_paths(t).map_err(err_str)?, || format!("{t:?}"))
    }));

    props.push(property("path-cover DP = partition brute force, n <= 5", &small, |t| {
        let profile = path_cover_profile(t).map_err(err_str)?;
        for k in 1..=t.n() {
            let brute = brute_force_path_covers(t, k).map_err(err_str)?;
            eq_or(profile.get(k).cloned(), Some(brute), || format!("{t:?}, k = {k}"))?;
        }
        Ok(())
    }));

    props.push(property("insertion path validates and P(T,1) is odd, n <= 5", &small, |t| {
        if !find_hamilton_path(t).validates(t) {
            return Err(format!("{t:?}: invalid path"));
        }
        let p = count_hamilton_paths(t).map_err(err_str)?;
        if p.bit(0) {
            Ok(())
        } else {
            Err(format!("{t:?}: even path count {p}"))
        }
    }));

    let mut tables = Tables::new();
    props.push(property("P(T,k) >= S(n,k), equality iff transitive, n <= 5", &small, |t| {
        let profile = path_cover_profile(t).map_err(err_str)?;
        let mut all_equal = true;
        for k in 1..=t.n() {
            let s = tables.stirling2(t.n(), k);
            let p = profile.get(k).expect("k <= n");
            if *p < s {
                return Err(format!("{t:?}: P(T,{k}) = {p} < S = {s}"));
            }
            all_equal &= *p == s;
        }
        eq_or(all_equal, t.is_transitive(), || format!("{t:?}: equality vs transitivity"))
    }));

    let parts: Vec<Tournament> = (1..=3).flat_map(all_tournaments).collect();
    let parts = &parts;
    let triples: Vec<[&Tournament; 3]> = parts
        .iter()
        .flat_map(|a| parts.iter().flat_map(move |b| parts.iter().map(move |c| [a, b, c])))
        .collect();
    let mut counts = Vec::with_capacity(triples.len());
    props.push(property("triangular identity, part sizes <= 3", &triples, |[a, b, c]| {
        let via_profiles = hamilton_count_triangular(a, b, c).map_err(err_str)?;
        let composed = compose_c3(a, b, c).map_err(err_str)?;
        let direct = count_hamilton_cycles(composed.composed()).map_err(err_str)?;
        counts.push(direct.clone());
        eq_or(via_profiles, direct, || format!("parts {a:?} {b:?} {c:?}"))
    }));

    props.push(property(
        "count >= lower bound, equality iff all parts transitive, part sizes <= 3",
        triples.iter().zip(&counts),
        |([a, b, c], count)| {
            let bound = tables.lower_bound(a.n(), b.n(), c.n()).map_err(err_str)?;
            let transitive = a.is_transitive() && b.is_transitive() && c.is_transitive();
            if **count < bound {
                return Err(format!("count {count} below bound {bound}"));
            }
            eq_or(**count == bound, transitive, || format!("parts {a:?} {b:?} {c:?}"))
        },
    ));

    SelftestReport {
        seed: opts.seed,
        properties: props,
    }
}
