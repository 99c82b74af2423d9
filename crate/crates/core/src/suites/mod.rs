//! Named verification suites and their JSON reports.
//!
//! Every check draws from its own sampler, forked from the configured seed by
//! the check name, so reports depend only on `(seed, config)`.

mod algebra;
mod geometry;
mod poisson;
mod slices;

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Sampler;
use crate::liecore::LieAlgebra;

pub const SUITES: [&str; 6] = ["liecore", "slodowy", "poisson", "wonderful", "slices", "all"];

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// `a1` or `a2`; both when unset.
    pub algebra: Option<String>,
    /// One partition of `n`; every implemented partition when unset.
    pub partition: Option<Vec<usize>>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { algebra: None, partition: None, seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be positive".into()));
        }
        let algebras = self.algebras()?;
        if let Some(p) = &self.partition {
            if p.contains(&0) {
                return Err(Error::InvalidConfig("partition parts must be positive".into()));
            }
            let n: usize = p.iter().sum();
            if !algebras.iter().any(|a| a.n() == n) {
                return Err(Error::InvalidPartition { partition: p.clone(), n: algebras[0].n() });
            }
        }
        Ok(())
    }

    pub fn algebras(&self) -> Result<Vec<LieAlgebra>> {
        let all = |n| LieAlgebra::sl(n);
        match (&self.algebra, &self.partition) {
            (Some(name), _) => Ok(vec![LieAlgebra::from_name(name)?]),
            (None, Some(p)) => match p.iter().sum::<usize>() {
                n @ (2 | 3) => Ok(vec![all(n)?]),
                n => Err(Error::UnsupportedRank(n)),
            },
            (None, None) => Ok(vec![all(2)?, all(3)?]),
        }
    }

    /// Partitions to sweep for an algebra.
    pub fn partitions(&self, alg: &LieAlgebra) -> Vec<Vec<usize>> {
        match &self.partition {
            Some(p) if p.iter().sum::<usize>() == alg.n() => vec![p.clone()],
            Some(_) => Vec::new(),
            None => match alg.n() {
                2 => vec![vec![2]],
                _ => vec![vec![3], vec![2, 1]],
            },
        }
    }

    /// A count stated for the default of 20 samples, scaled to the configuration.
    pub fn count(&self, at_default: usize) -> usize {
        (at_default * self.samples).div_ceil(DEFAULT_SAMPLES).max(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub samples: usize,
    pub algebra: Vec<String>,
    pub partition: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub config_echo: ConfigEcho,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Failure description carried out of a check.
#[derive(Debug)]
pub(crate) struct Witness(pub String);

impl From<Error> for Witness {
    fn from(e: Error) -> Self {
        Witness(format!("error: {e}"))
    }
}

impl From<String> for Witness {
    fn from(s: String) -> Self {
        Witness(s)
    }
}

pub(crate) type Outcome = std::result::Result<(), Witness>;

pub(crate) fn ensure(condition: bool, witness: impl FnOnce() -> String) -> Outcome {
    if condition {
        Ok(())
    } else {
        Err(Witness(witness()))
    }
}

pub(crate) struct Runner<'c> {
    pub config: &'c Config,
    checks: Vec<Check>,
}

impl<'c> Runner<'c> {
    fn new(config: &'c Config) -> Self {
        Runner { config, checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, body: impl FnOnce(&mut Sampler) -> Outcome) {
        let name = name.into();
        let mut sampler = Sampler::new(self.config.seed).fork(&name);
        let outcome = catch_unwind(AssertUnwindSafe(|| body(&mut sampler)));
        let witness = match outcome {
            Ok(Ok(())) => None,
            Ok(Err(Witness(w))) => Some(w),
            Err(panic) => Some(format!(
                "panic: {}",
                panic
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| panic.downcast_ref::<&str>().copied())
                    .unwrap_or("unknown")
            )),
        };
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name, status, witness });
    }
}

pub(crate) fn tau_label(partition: &[usize]) -> String {
    let parts: Vec<String> = partition.iter().map(usize::to_string).collect();
    format!("tau={}", parts.join(","))
}

pub fn run_suite(name: &str, config: &Config) -> Result<SuiteReport> {
    config.validate()?;
    run_suite_on(name, config, &config.algebras()?)
}

/// Run a suite on explicitly supplied algebras (e.g. a corrupted fixture).
pub fn run_suite_on(name: &str, config: &Config, algebras: &[LieAlgebra]) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if config.samples == 0 {
        return Err(Error::InvalidConfig("samples must be positive".into()));
    }
    let mut runner = Runner::new(config);
    let wants = |suite: &str| name == "all" || name == suite;
    for alg in algebras {
        if wants("liecore") {
            algebra::liecore(&mut runner, alg);
        }
        if wants("slodowy") {
            algebra::slodowy(&mut runner, alg);
        }
        if wants("poisson") {
            poisson::poisson(&mut runner, alg);
        }
        if wants("wonderful") {
            geometry::wonderful(&mut runner, alg);
        }
        if wants("slices") {
            slices::slices(&mut runner, alg);
        }
    }
    let mut checks = runner.checks;
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let status = if checks.iter().all(Check::passed) { Status::Pass } else { Status::Fail };
    Ok(SuiteReport {
        schema: 1,
        suite: name.to_string(),
        status,
        checks,
        config_echo: ConfigEcho {
            seed: config.seed,
            samples: config.samples,
            algebra: algebras.iter().map(LieAlgebra::name).collect(),
            partition: config.partition.clone(),
        },
    })
}

#[cfg(test)]
mod tests;
