//! Exact closed-form quantities on big integers.
//!
//! Nothing here touches floating point: the asymptotic checks compare
//! against these values.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{path_cover_profile_with, Caps};
use crate::num::Count;
use crate::tournament::Tournament;

/// Triangle of Stirling numbers of the second kind, `S(m, k)` for `k <= m`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        StirlingTable {
            rows: vec![vec![BigUint::one()]],
        }
    }
}

impl StirlingTable {
    pub fn with_max(max_m: usize) -> Self {
        let mut t = Self::default();
        t.extend_to(max_m);
        t
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// Extends rows by `S(m, k) = k·S(m−1, k) + S(m−1, k−1)`.
    pub fn extend_to(&mut self, max_m: usize) {
        while self.rows.len() <= max_m {
            let prev = self.rows.last().expect("row 0");
            let m = prev.len();
            let mut row = vec![BigUint::zero(); m + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let stay = prev.get(k).map_or_else(BigUint::zero, |s| s * k);
                *slot = stay + &prev[k - 1];
            }
            self.rows.push(row);
        }
    }

    /// `S(m, k)`; zero when `k > m`. Panics if `m` exceeds the table.
    pub fn get(&self, m: usize, k: usize) -> BigUint {
        self.rows[m].get(k).cloned().unwrap_or_default()
    }

    /// Row `m` as `[S(m,0), S(m,1), ..., S(m,m)]`.
    pub fn row(&self, m: usize) -> &[BigUint] {
        &self.rows[m]
    }
}

#[derive(Clone, Debug)]
pub struct FactorialTable {
    fact: Vec<BigUint>,
}

impl Default for FactorialTable {
    fn default() -> Self {
        FactorialTable {
            fact: vec![BigUint::one()],
        }
    }
}

impl FactorialTable {
    pub fn with_max(max: usize) -> Self {
        let mut t = Self::default();
        t.extend_to(max);
        t
    }

    pub fn extend_to(&mut self, max: usize) {
        while self.fact.len() <= max {
            let i = self.fact.len();
            let next = &self.fact[i - 1] * i;
            self.fact.push(next);
        }
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.fact[i]
    }
}

/// Stirling and factorial tables grown on demand and reused across calls.
#[derive(Clone, Debug, Default)]
pub struct Tables {
    stirling: StirlingTable,
    factorial: FactorialTable,
}

fn positive(what: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidSize(format!("{what} must be at least 1")));
    }
    Ok(())
}

impl Tables {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure(&mut self, m: usize) {
        self.stirling.extend_to(m);
        self.factorial.extend_to(m);
    }

    pub fn stirling(&mut self) -> &StirlingTable {
        &self.stirling
    }

    pub fn stirling2(&mut self, m: usize, k: usize) -> BigUint {
        if k > m {
            return BigUint::zero();
        }
        self.ensure(m);
        self.stirling.get(m, k)
    }

    pub fn factorial(&mut self, i: usize) -> BigUint {
        self.ensure(i);
        self.factorial.get(i).clone()
    }

    /// `k!³/k`, computed as `k!·k!·(k−1)!`.
    pub fn joining_factor(&mut self, k: usize) -> Result<BigUint> {
        positive("k", k)?;
        self.ensure(k);
        let f = self.factorial.get(k);
        Ok(f * f * self.factorial.get(k - 1))
    }

    /// `Σ_k S(m1,k)·S(m2,k)·S(m3,k)·k!³/k` over `k = 1..=min(m1,m2,m3)`.
    pub fn lower_bound(&mut self, m1: usize, m2: usize, m3: usize) -> Result<BigUint> {
        for m in [m1, m2, m3] {
            positive("part size", m)?;
        }
        self.ensure(m1.max(m2).max(m3));
        let mut total = BigUint::zero();
        for k in 1..=m1.min(m2).min(m3) {
            let s = self.stirling.get(m1, k) * self.stirling.get(m2, k) * self.stirling.get(m3, k);
            total += s * self.joining_factor(k)?;
        }
        Ok(total)
    }

    /// `Σ_k S(m,k)³·k!³/k`: the cycle count of `C3` over three transitive
    /// `m`-vertex parts. Shares no code with [`Tables::lower_bound`] beyond
    /// the tables.
    pub fn transitive_triangular_count(&mut self, m: usize) -> Result<BigUint> {
        positive("m", m)?;
        self.ensure(m);
        let row = self.stirling.row(m);
        let mut total = BigUint::zero();
        for (k, s) in row.iter().enumerate().skip(1) {
            let fk = self.factorial.get(k);
            let term = s * fk;
            total += &term * &term * &term / k;
        }
        Ok(total)
    }

    /// `m!³/m`: cycles of `C3` on `m`-vertex parts using only cross arcs.
    pub fn internal_free_count(&mut self, m: usize) -> Result<BigUint> {
        positive("m", m)?;
        self.ensure(m);
        let f = self.factorial.get(m);
        Ok(f * f * f / m)
    }

    /// Ordered Bell number `f(m) = Σ_k S(m,k)·k!` (`f(0) = 1`).
    pub fn ordered_bell(&mut self, m: usize) -> BigUint {
        self.ensure(m);
        let row = self.stirling.row(m);
        row.iter()
            .enumerate()
            .map(|(k, s)| s * self.factorial.get(k))
            .sum()
    }
}

pub fn stirling2(m: usize, k: usize) -> BigUint {
    Tables::new().stirling2(m, k)
}

pub fn joining_factor(k: usize) -> Result<BigUint> {
    Tables::new().joining_factor(k)
}

pub fn lower_bound(m1: usize, m2: usize, m3: usize) -> Result<BigUint> {
    Tables::new().lower_bound(m1, m2, m3)
}

pub fn transitive_triangular_count(m: usize) -> Result<BigUint> {
    Tables::new().transitive_triangular_count(m)
}

pub fn internal_free_count(m: usize) -> Result<BigUint> {
    Tables::new().internal_free_count(m)
}

pub fn ordered_bell(m: usize) -> BigUint {
    Tables::new().ordered_bell(m)
}

/// Ordered Bell numbers `f(0..=m)` from `f(m) = Σ_{j=1}^{m} C(m,j)·f(m−j)`,
/// independent of the Stirling table.
pub fn ordered_bell_by_recurrence(m: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    let mut binom_row = vec![BigUint::one()];
    for i in 1..=m {
        let mut next = vec![BigUint::one(); i + 1];
        for j in 1..i {
            next[j] = &binom_row[j - 1] + &binom_row[j];
        }
        binom_row = next;
        let v = (1..=i).map(|j| &binom_row[j] * &f[i - j]).sum();
        f.push(v);
    }
    f
}

/// Hamilton cycle count of `C3(t1, t2, t3)` assembled from the three
/// path-cover profiles: `Σ_k P(T1,k)·P(T2,k)·P(T3,k)·k!³/k`.
pub fn hamilton_count_triangular_with<C: Count>(
    t1: &Tournament,
    t2: &Tournament,
    t3: &Tournament,
    caps: &Caps,
) -> Result<C> {
    let profiles = [
        path_cover_profile_with::<C>(t1, caps)?,
        path_cover_profile_with::<C>(t2, caps)?,
        path_cover_profile_with::<C>(t3, caps)?,
    ];
    let kmax = profiles.iter().map(|p| p.m()).min().expect("three parts");
    let mut tables = Tables::new();
    let mut total = C::zero();
    for k in 1..=kmax {
        let join = tables.joining_factor(k)?;
        let mut term = C::try_from_biguint(&join).ok_or(Error::Overflow)?;
        for p in &profiles {
            term = term.try_mul(p.get(k).expect("k <= m")).ok_or(Error::Overflow)?;
        }
        total.try_add_assign(&term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

pub fn hamilton_count_triangular(t1: &Tournament, t2: &Tournament, t3: &Tournament) -> Result<BigUint> {
    hamilton_count_triangular_with(t1, t2, t3, &Caps::default())
}
