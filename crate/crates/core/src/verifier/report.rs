use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::matrix::OperatorMatrix;
use crate::exact::ratfun::MatRatFun;
use crate::exact::ring::Rational;
use crate::GaudinConfig;

/// Parameters a report was produced with.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ConfigEcho {
    pub gl_n: Option<usize>,
    pub sites: Option<usize>,
    pub k: Option<Vec<Rational>>,
    pub z: Option<Vec<Rational>>,
    pub orders: Option<(usize, usize)>,
    pub seed: Option<u64>,
    /// Check-specific settings such as a trace word or a degree bound.
    pub extra: Vec<(String, String)>,
}

impl ConfigEcho {
    pub fn of(cfg: &GaudinConfig) -> Self {
        Self {
            gl_n: Some(cfg.gl_n()),
            sites: Some(cfg.sites()),
            k: Some(cfg.k().to_vec()),
            z: Some(cfg.z().to_vec()),
            ..Self::default()
        }
    }

    pub fn with_orders(mut self, i: usize, j: usize) -> Self {
        self.orders = Some((i, j));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.extra.push((key.into(), value.into()));
        self
    }
}

/// The first comparison that did not cancel exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub location: String,
    /// Matrix entry `(row, col)` for operator comparisons.
    pub entry: Option<(usize, usize)>,
    /// `lhs − rhs` there; absent for failed structural conditions.
    pub value: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    pub config: ConfigEcho,
    pub passed: bool,
    pub comparisons: usize,
    pub first_residual: Option<Residual>,
    pub details: Vec<String>,
}

/// Accumulates exact comparisons for one report.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    comparisons: usize,
    failures: usize,
    first: Option<Residual>,
    details: Vec<String>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn record(&mut self, residual: Residual) {
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(residual);
        }
    }

    pub(crate) fn matrix(&mut self, location: impl FnOnce() -> String, lhs: &OperatorMatrix, rhs: &OperatorMatrix) -> bool {
        self.comparisons += 1;
        let diff = lhs.sub(rhs);
        let Some((r, c, v)) = diff.entries().next() else {
            return true;
        };
        self.record(Residual {
            location: location(),
            entry: Some((r, c)),
            value: Some(v.clone()),
        });
        false
    }

    pub(crate) fn scalar(&mut self, location: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) -> bool {
        self.comparisons += 1;
        if lhs == rhs {
            return true;
        }
        self.record(Residual {
            location: location(),
            entry: None,
            value: Some(lhs - rhs),
        });
        false
    }

    /// Compares normal forms term by term.
    pub(crate) fn ratfun(&mut self, name: &str, lhs: &MatRatFun, rhs: &MatRatFun) -> crate::Result<bool> {
        self.comparisons += 1;
        let diff = lhs.sub(rhs)?;
        if diff.is_zero() {
            return Ok(true);
        }
        let (location, m) = match diff.pole_terms().iter().next() {
            Some((&(a, k), m)) => (format!("{name}: coefficient of (u - z_{})^-{k}", a + 1), m.clone()),
            None => {
                let (d, m) = diff
                    .polynomial_part()
                    .iter()
                    .enumerate()
                    .find(|(_, m)| !m.is_zero_matrix())
                    .map(|(d, m)| (d, m.clone()))
                    .expect("nonzero difference");
                (format!("{name}: coefficient of u^{d}"), m)
            }
        };
        let (r, c, v) = m.entries().next().expect("nonzero coefficient");
        self.record(Residual {
            location,
            entry: Some((r, c)),
            value: Some(v.clone()),
        });
        Ok(false)
    }

    pub(crate) fn condition(&mut self, ok: bool, location: impl FnOnce() -> String) -> bool {
        self.comparisons += 1;
        if !ok {
            self.record(Residual {
                location: location(),
                entry: None,
                value: None,
            });
        }
        ok
    }

    pub(crate) fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    pub(crate) fn passed(&self) -> bool {
        self.failures == 0
    }

    pub(crate) fn finish(mut self, check: &str, config: ConfigEcho) -> VerificationReport {
        let passed = self.failures == 0;
        if !passed {
            self.details.push(format!("{} of {} comparisons failed", self.failures, self.comparisons));
        }
        VerificationReport {
            check: check.into(),
            config,
            passed,
            comparisons: self.comparisons,
            first_residual: self.first,
            details: self.details,
        }
    }
}
