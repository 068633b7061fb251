//! Log-space evaluation of the asymptotic expressions, generic over the
//! float type.
//!
//! Every magnitude is carried as its natural logarithm so that quantities
//! like `(n−1)!/(3 ln 2)^n` at `n = 900` stay representable.

use std::cmp::Ordering;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Float, FloatConst, One};

use crate::error::{Error, Result};
use crate::formula::{FactorialTable, Tables};
use crate::num::{lit, ln_big, ln_factorial, ln_gamma};

/// A positive real stored as its natural logarithm.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Log<F>(F);

impl<F: Float> Log<F> {
    pub fn from_ln(ln: F) -> Self {
        Log(ln)
    }

    pub fn from_value(v: F) -> Self {
        Log(v.ln())
    }

    /// Exact big integer, logged from its top bits and bit length.
    pub fn from_big(x: &BigUint) -> Self {
        Log(F::from(ln_big(x)).expect("log representable"))
    }

    pub fn ln(self) -> F {
        self.0
    }

    /// The value itself; overflows to infinity for large logs.
    pub fn value(self) -> F {
        self.0.exp()
    }

    /// `self / other`, computed in log space.
    pub fn ratio_to(self, other: Self) -> F {
        (self.0 - other.0).exp()
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

/// Product.
impl<F: Float> Add for Log<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Log(self.0 + rhs.0)
    }
}

/// Quotient.
impl<F: Float> Sub for Log<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Log(self.0 - rhs.0)
    }
}

fn as_f<F: Float>(v: usize) -> F {
    F::from(v).expect("integer representable")
}

fn multiple_of_three(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(3) {
        return Err(Error::NotMultipleOfThree(n));
    }
    Ok(())
}

fn at_least(what: &str, v: usize, min: usize) -> Result<()> {
    if v < min {
        return Err(Error::InvalidSize(format!("{what} = {v}, need at least {min}")));
    }
    Ok(())
}

/// Mean and standard deviation (per unit `m`) of the limiting normal law of
/// `k ↦ S(m,k)·k!/f(m)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalParams<F> {
    pub mu: F,
    pub sigma: F,
}

impl<F: Float + FloatConst> NormalParams<F> {
    /// `mu = 1/(2 ln 2)`, `sigma = sqrt(1 − ln 2)/(2 ln 2)`.
    pub fn new() -> Self {
        let ln2 = F::LN_2();
        let two_ln2 = ln2 + ln2;
        NormalParams {
            mu: two_ln2.recip(),
            sigma: (F::one() - ln2).sqrt() / two_ln2,
        }
    }

    /// Normal density with mean `mu·m` and variance `sigma²·m`, at `x`.
    pub fn density(&self, m: usize, x: F) -> F {
        let mf = as_f::<F>(m);
        let mean = self.mu * mf;
        let var = self.sigma * self.sigma * mf;
        let two = lit::<F>(2.0);
        (-(x - mean) * (x - mean) / (two * var)).exp() / (two * F::PI() * var).sqrt()
    }
}

impl<F: Float + FloatConst> Default for NormalParams<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// `(n / 3e)^n`.
pub fn moser_bound<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    at_least("n", n, 1)?;
    let nf = as_f::<F>(n);
    Ok(Log(nf * (nf.ln() - lit::<F>(3.0).ln() - F::one())))
}

/// `sqrt(8π³n/3)·(n/3e)^n`, the Stirling form of `(n/3)!³/(n/3)`.
pub fn internal_free_asymptotic<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    multiple_of_three(n)?;
    let nf = as_f::<F>(n);
    let pi = F::PI();
    let prefactor = (lit::<F>(8.0) * pi * pi * pi * nf / lit(3.0)).ln() / lit(2.0);
    Ok(Log(prefactor) + moser_bound(n)?)
}

/// `m! / (2 (ln 2)^{m+1})`.
pub fn wilf_f_asymptotic<F: Float + FloatConst>(m: usize) -> Result<Log<F>> {
    at_least("m", m, 1)?;
    let ln_ln2 = F::LN_2().ln();
    Ok(Log(
        ln_gamma(as_f::<F>(m) + F::one()) - F::LN_2() - as_f::<F>(m + 1) * ln_ln2
    ))
}

/// The normal approximation to `S(m,k)·k!/f(m)` at `k`.
pub fn bender_pmf<F: Float + FloatConst>(m: usize, k: usize) -> Result<F> {
    at_least("m", m, 1)?;
    Ok(NormalParams::new().density(m, as_f(k)))
}

/// Exact distribution `p(m,k) = S(m,k)·k!/f(m)` for `k = 0..=m`, each entry
/// obtained from big-integer logarithms.
pub fn ordered_partition_pmf(tables: &mut Tables, m: usize) -> Vec<f64> {
    let f = ln_big(&tables.ordered_bell(m));
    let fact = FactorialTable::with_max(m);
    let row = tables.stirling().row(m).to_vec();
    row.iter()
        .enumerate()
        .map(|(k, s)| (ln_big(&(s * fact.get(k))) - f).exp())
        .collect()
}

/// Half the L1 distance; missing entries count as zero.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    let len = p.len().max(q.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    (0..len).map(|i| (at(p, i) - at(q, i)).abs()).sum::<f64>() / 2.0
}

/// Where `f(m)` comes from in [`integral_approx_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BellSource {
    /// The exact ordered Bell number, isolating the integral step.
    Exact,
    /// [`wilf_f_asymptotic`], reproducing the full chain.
    Wilf,
}

/// `f(m)³·√3·√2·√π / (3·mu·sigma²·(2π)^{3/2}·m²)`.
pub fn integral_approx_sum<F: Float + FloatConst>(
    tables: &mut Tables,
    m: usize,
    source: BellSource,
) -> Result<Log<F>> {
    at_least("m", m, 2)?;
    let ln_f = match source {
        BellSource::Exact => Log::from_big(&tables.ordered_bell(m)),
        BellSource::Wilf => wilf_f_asymptotic(m)?,
    };
    let NormalParams { mu, sigma } = NormalParams::<F>::new();
    let pi = F::PI();
    let two_pi = pi + pi;
    let mf = as_f::<F>(m);
    let numer = lit::<F>(3.0).sqrt() * lit::<F>(2.0).sqrt() * pi.sqrt();
    let denom = lit::<F>(3.0) * mu * sigma * sigma * two_pi.powf(lit(1.5)) * mf * mf;
    Ok(Log(lit::<F>(3.0) * ln_f.ln() + (numer / denom).ln()))
}

/// `1/(1 − ln 2)` and `3 ln 2`.
pub fn corollary_constants<F: Float + FloatConst>() -> (F, F) {
    let ln2 = F::LN_2();
    ((F::one() - ln2).recip(), lit::<F>(3.0) * ln2)
}

/// `(n−1)! / ((1 − ln 2)·(3 ln 2)^n)` for `3 | n`.
pub fn corollary_asymptotic<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    multiple_of_three(n)?;
    let (lead, base) = corollary_constants::<F>();
    Ok(Log(lead.ln() + ln_factorial::<F>(n as u64 - 1) - as_f::<F>(n) * base.ln()))
}

/// `n!/2^{n−1}`, the expected Hamilton path count of a random tournament.
pub fn szele_expected_paths<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    at_least("n", n, 1)?;
    Ok(Log(ln_factorial::<F>(n as u64) - as_f::<F>(n - 1) * F::LN_2()))
}

/// `(n−1)!/2^n`, the expected Hamilton cycle count of a random tournament.
pub fn szele_expected_cycles<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    at_least("n", n, 3)?;
    Ok(Log(ln_factorial::<F>(n as u64 - 1) - as_f::<F>(n) * F::LN_2()))
}

/// `2(n−1)!/2^n`, the expected Hamilton cycle count of `C3` over three
/// random `n/3`-vertex parts.
pub fn wormald_expected_cycles<F: Float + FloatConst>(n: usize) -> Result<Log<F>> {
    multiple_of_three(n)?;
    Ok(Log(F::LN_2()) + szele_expected_cycles(n)?)
}

fn ratio_of(num: BigUint, pow2: usize) -> BigRational {
    BigRational::new(num.into(), BigInt::one() << pow2)
}

/// [`szele_expected_paths`] as an exact rational.
pub fn szele_expected_paths_exact(n: usize) -> Result<BigRational> {
    at_least("n", n, 1)?;
    Ok(ratio_of(FactorialTable::with_max(n).get(n).clone(), n - 1))
}

pub fn szele_expected_cycles_exact(n: usize) -> Result<BigRational> {
    at_least("n", n, 3)?;
    Ok(ratio_of(FactorialTable::with_max(n).get(n - 1).clone(), n))
}

pub fn wormald_expected_cycles_exact(n: usize) -> Result<BigRational> {
    multiple_of_three(n)?;
    Ok(ratio_of(FactorialTable::with_max(n).get(n - 1).clone(), n - 1))
}

/// Exact expected Hamilton cycle count of `C3(T1, T2, T3)` with three
/// independent uniformly random `m`-vertex parts.
///
/// By independence this is `Σ_k E[P(T,k)]³·k!³/k`, where `E[P(T,k)]` sums
/// `Π b!/2^{b−1}` over the block sizes `b` of every partition into `k`
/// blocks. Agrees with [`wormald_expected_cycles`] only as `m → ∞`.
pub fn triangular_random_expected_cycles_exact(m: usize) -> Result<BigRational> {
    at_least("m", m, 1)?;
    let fact = FactorialTable::with_max(m);
    let binom = |a: usize, b: usize| fact.get(a) / (fact.get(b) * fact.get(a - b));
    let paths = |b: usize| ratio_of(fact.get(b).clone(), b - 1);
    // covers[j][k]: expected k-path covers of a random j-vertex tournament
    let mut covers = vec![vec![BigRational::default(); m + 1]; m + 1];
    covers[0][0] = BigRational::one();
    for j in 1..=m {
        for k in 1..=j {
            let mut s = BigRational::default();
            // b = size of the block holding the last vertex
            for b in 1..=j - k + 1 {
                let ways = BigRational::from_integer(binom(j - 1, b - 1).into());
                s += ways * paths(b) * &covers[j - b][k - 1];
            }
            covers[j][k] = s;
        }
    }
    let mut total = BigRational::default();
    for (k, e) in covers[m].iter().enumerate().skip(1) {
        let join = fact.get(k) * fact.get(k) * fact.get(k - 1);
        total += e * e * e * BigRational::from_integer(join.into());
    }
    Ok(total)
}

/// `ln 2` as a fixed-point integer with `bits` fractional bits (truncated),
/// from `ln 2 = Σ_{k≥1} 1/(k·2^k)`.
fn ln2_fixed(bits: usize) -> BigUint {
    let guard = 32;
    let scale = bits + guard;
    let mut sum = BigUint::default();
    for k in 1..=scale {
        sum += (BigUint::one() << (scale - k)) / k;
    }
    sum >> guard
}

/// Signed relative error `f(m) / (m!/(2 (ln 2)^{m+1})) − 1`, evaluated
/// with a 512-bit fixed-point `ln 2` and exact integers.
///
/// The error falls below `f64` resolution of the log-space route by
/// `m ≈ 15`; this is the route for measuring it beyond that.
pub fn wilf_relative_error(tables: &mut Tables, m: usize) -> Result<f64> {
    at_least("m", m, 1)?;
    const BITS: usize = 512;
    let l = ln2_fixed(BITS);
    let f = tables.ordered_bell(m);
    let numer = BigInt::from(f * 2u8 * l.pow((m + 1) as u32));
    let denom_u = tables.factorial(m) << (BITS * (m + 1));
    let diff = numer - BigInt::from(denom_u.clone());
    let mag = match diff.sign() {
        Sign::NoSign => return Ok(0.0),
        _ => (ln_big(diff.magnitude()) - ln_big(&denom_u)).exp(),
    };
    Ok(if diff.sign() == Sign::Minus { -mag } else { mag })
}
