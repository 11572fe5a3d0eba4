//! Deterministic random monomial ideals.
//!
//! The stream is SplitMix64, written out here so that a seed pins the exact
//! ideal sequence independently of any crate version.

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi` (modulo reduction; the bias is irrelevant here).
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        let width = hi - lo;
        if width == u64::MAX {
            return self.next_u64();
        }
        lo + self.next_u64() % (width + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomIdealConfig {
    pub nvars: usize,
    pub min_gens: usize,
    pub max_gens: usize,
    pub max_exp: u32,
    /// Require every generator to have degree at least 2.
    pub in_m_squared: bool,
    /// Let the constant monomial through, so the result may be the unit ideal.
    pub allow_unit: bool,
}

impl RandomIdealConfig {
    pub fn new(nvars: usize, max_gens: usize, max_exp: u32) -> Self {
        Self { nvars, min_gens: 1, max_gens, max_exp, in_m_squared: false, allow_unit: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nvars == 0 {
            return Err(Error::InvalidConfig("need at least one variable".into()));
        }
        if self.min_gens == 0 || self.min_gens > self.max_gens {
            return Err(Error::InvalidConfig(format!(
                "generator count range {}..={} is empty or includes 0",
                self.min_gens, self.max_gens
            )));
        }
        if self.max_exp == 0 && !self.allow_unit {
            return Err(Error::InvalidConfig("max exponent 0 only yields constants".into()));
        }
        if self.in_m_squared && (self.nvars as u64) * (self.max_exp as u64) < 2 {
            return Err(Error::InvalidConfig("no monomial of degree 2 fits the exponent bound".into()));
        }
        Ok(())
    }
}

/// Draw a generator count, then exponent vectors, resampling any vector the
/// configuration forbids, and minimalize.
pub fn random_ideal(rng: &mut SplitMix64, config: &RandomIdealConfig) -> Result<MonomialIdeal> {
    config.validate()?;
    let ctx = RingContext::standard(config.nvars)?;
    let count = rng.range(config.min_gens as u64, config.max_gens as u64) as usize;
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<u32> = (0..config.nvars).map(|_| rng.range(0, config.max_exp as u64) as u32).collect();
        let total: u64 = exps.iter().map(|&e| e as u64).sum();
        if (total == 0 && !config.allow_unit) || (config.in_m_squared && total < 2) {
            continue;
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(&ctx, gens)
}
