//! Seeded random searches.
//!
//! Inputs for every trial are drawn first, sequentially from one stream, and
//! only then evaluated in parallel. The report is ordered by trial index, so
//! a `(config, version)` pair always yields the same report.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closure::integral_closure;
use crate::criteria::{check_condition1, verdict, Certificate, Engine, Status, VerdictOptions};
use crate::error::{Error, Result};
use crate::harness::report;
use crate::harness::rng::{random_ideal, RandomIdealConfig, SplitMix64};
use crate::ideal::{product, VarSet};
use crate::linalg::FieldSpec;
use crate::ring::{MonomialIdeal, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Products `JK` in three variables; every one should be Golod.
    Product3,
    /// Products in four variables, archiving any certified non-Golod `JK`.
    Product4,
    /// `[JK : x_i][JK : others] ⊆ JK` with `K` integrally closed in `m^2`.
    Closure3,
    /// Single random ideals and their verdicts.
    Raw,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Product3 => "product3",
            SearchMode::Product4 => "product4",
            SearchMode::Closure3 => "closure3",
            SearchMode::Raw => "raw",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "product3" => Some(SearchMode::Product3),
            "product4" => Some(SearchMode::Product4),
            "closure3" => Some(SearchMode::Closure3),
            "raw" => Some(SearchMode::Raw),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub trials: usize,
    pub seed: u64,
    pub min_gens: usize,
    pub max_gens: usize,
    pub max_exp: u32,
    pub field: FieldSpec,
    pub series_depth: usize,
    /// Number of variables for `raw`; the other modes fix it.
    pub nvars: usize,
}

impl SearchConfig {
    pub fn new(mode: SearchMode, trials: usize, seed: u64) -> Self {
        Self {
            mode,
            trials,
            seed,
            min_gens: 1,
            max_gens: 5,
            max_exp: 4,
            field: FieldSpec::Rationals,
            series_depth: 4,
            nvars: 3,
        }
    }

    fn nvars(&self) -> usize {
        match self.mode {
            SearchMode::Product3 | SearchMode::Closure3 => 3,
            SearchMode::Product4 => 4,
            SearchMode::Raw => self.nvars,
        }
    }

    fn ideal_config(&self) -> RandomIdealConfig {
        RandomIdealConfig {
            nvars: self.nvars(),
            min_gens: self.min_gens,
            max_gens: self.max_gens,
            max_exp: self.max_exp,
            in_m_squared: false,
            allow_unit: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.ideal_config().validate()?;
        if self.mode == SearchMode::Closure3 {
            let mut k = self.ideal_config();
            k.in_m_squared = true;
            k.validate()?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.as_str(),
            "trials": self.trials,
            "seed": self.seed,
            "gens": [self.min_gens, self.max_gens],
            "max_exp": self.max_exp,
            "field": self.field.to_string(),
            "series_depth": self.series_depth,
            "nvars": self.nvars(),
        })
    }
}

/// The pair `J = closure(x^2, y^4, z^2, yz)`, `K = closure(x^4, y^2, w^2, xw)`
/// in `k[x,y,z,w]`, whose product is a known non-Golod ideal.
pub fn four_variable_pair() -> Result<(MonomialIdeal, MonomialIdeal)> {
    let ctx = RingContext::standard(4)?;
    let j = MonomialIdeal::from_exponents(&ctx, &[&[2, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, 2, 0], &[0, 1, 1, 0]])?;
    let k = MonomialIdeal::from_exponents(&ctx, &[&[4, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 0, 2], &[1, 0, 0, 1]])?;
    Ok((integral_closure(&j)?, integral_closure(&k)?))
}

#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub index: usize,
    /// `[J, K]` for the product modes, `[J, K̄]` for closure3, `[I]` for raw.
    pub inputs: Vec<MonomialIdeal>,
    pub subject: MonomialIdeal,
    pub status: Status,
    /// Did the trial agree with the expectation of its mode?
    pub passed: bool,
    pub certificates: Vec<Certificate>,
    pub subject_context: RingContext,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub trials: Vec<TrialRecord>,
}

impl SearchReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.passed).count()
    }

    pub fn count(&self, status: Status) -> usize {
        self.trials.iter().filter(|t| t.status == status).count()
    }

    /// Trials worth keeping: failures of an expectation, or certified non-Golod products.
    pub fn archived(&self) -> Vec<&TrialRecord> {
        self.trials
            .iter()
            .filter(|t| match self.config.mode {
                SearchMode::Product4 | SearchMode::Raw => t.status == Status::NotGolod,
                _ => !t.passed,
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let archived: Vec<Value> = self
            .archived()
            .into_iter()
            .map(|t| {
                json!({
                    "trial": t.index,
                    "inputs": t.inputs.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                    "subject": report::ideal(&t.subject),
                    "status": t.status.as_str(),
                    "certificates": t.certificates.iter()
                        .map(|c| report::certificate(c, &t.subject_context))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "config": self.config.to_json(),
            "trials": self.trials.len(),
            "passed": self.passed(),
            "counts": {
                "golod": self.count(Status::Golod),
                "not_golod": self.count(Status::NotGolod),
                "inconclusive": self.count(Status::Inconclusive),
            },
            "archived": archived,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "mode {} seed {}: {}/{} passed (golod {}, not_golod {}, inconclusive {})\n",
            self.config.mode.as_str(),
            self.config.seed,
            self.passed(),
            self.trials.len(),
            self.count(Status::Golod),
            self.count(Status::NotGolod),
            self.count(Status::Inconclusive)
        );
        for t in self.archived() {
            let inputs: Vec<String> = t.inputs.iter().map(|i| i.to_string()).collect();
            out += &format!("trial {}: {} -> {}\n", t.index, inputs.join(" * "), t.status.as_str());
            for c in &t.certificates {
                out += &format!("  {}\n", c.describe(&t.subject_context));
            }
        }
        out
    }
}

fn draw_inputs(config: &SearchConfig) -> Result<Vec<Vec<MonomialIdeal>>> {
    let mut rng = SplitMix64::new(config.seed);
    let base = config.ideal_config();
    let mut out = Vec::with_capacity(config.trials);
    for index in 0..config.trials {
        let inputs = match config.mode {
            SearchMode::Product3 => vec![random_ideal(&mut rng, &base)?, random_ideal(&mut rng, &base)?],
            SearchMode::Product4 if index == 0 => {
                let (j, k) = four_variable_pair()?;
                vec![j, k]
            }
            SearchMode::Product4 => vec![random_ideal(&mut rng, &base)?, random_ideal(&mut rng, &base)?],
            SearchMode::Closure3 => {
                let mut jc = base.clone();
                jc.allow_unit = true;
                let mut kc = base.clone();
                kc.in_m_squared = true;
                let j = random_ideal(&mut rng, &jc)?;
                let k = integral_closure(&random_ideal(&mut rng, &kc)?)?;
                vec![j, k]
            }
            SearchMode::Raw => vec![random_ideal(&mut rng, &base)?],
        };
        out.push(inputs);
    }
    Ok(out)
}

fn evaluate(config: &SearchConfig, index: usize, inputs: Vec<MonomialIdeal>) -> Result<TrialRecord> {
    let options = VerdictOptions {
        engines: vec![Engine::Colon, Engine::KoszulProduct, Engine::SerreComparison],
        field: config.field,
        series_depth: config.series_depth,
        stop_at_first: true,
    };
    let subject = match inputs.as_slice() {
        [j, k] => product(j, k)?,
        [i] => i.clone(),
        _ => return Err(Error::Internal("trial with no inputs".into())),
    };
    let (status, passed, certificates, subject_context) = match config.mode {
        SearchMode::Closure3 => {
            let mut certs = Vec::new();
            for i in 0..3 {
                let s = VarSet::singleton(i);
                certs.extend(check_condition1(&subject, s, VarSet::full(3).difference(s))?);
            }
            let status = if certs.is_empty() { Status::Inconclusive } else { Status::NotGolod };
            (status, certs.is_empty(), certs, subject.context().clone())
        }
        _ => {
            let v = verdict(&subject, &options)?;
            let passed = match config.mode {
                SearchMode::Product3 => v.status == Status::Golod,
                _ => true,
            };
            let ctx = v.reduced.context().clone();
            (v.status, passed, v.certificates, ctx)
        }
    };
    Ok(TrialRecord { index, inputs, subject, status, passed, certificates, subject_context })
}

pub fn search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let inputs = draw_inputs(config)?;
    let trials: Result<Vec<TrialRecord>> =
        inputs.into_par_iter().enumerate().map(|(index, inp)| evaluate(config, index, inp)).collect();
    Ok(SearchReport { config: config.clone(), trials: trials? })
}
