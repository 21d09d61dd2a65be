//! Verification suites: each identity is recomputed exactly and reported as a
//! [`CheckResult`].

mod cherednik;
mod dunkl;
mod misc;
pub mod random;
mod waves;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::dunkl::DunklContext;
use crate::error::Result;
use crate::report::{run_check, CheckResult, VerifyReport};

pub use cherednik::H3_J_WITNESS;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Run checks marked slow instead of reporting them as skipped.
    pub slow: bool,
    /// Seed for the random polynomials used by spot checks.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { slow: false, seed: 20240611 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Group,
    Dunkl,
    Waves,
    Jsquare,
    Spectral,
    Cherednik,
    Macdonald,
    Numeric,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Group,
        Suite::Dunkl,
        Suite::Waves,
        Suite::Jsquare,
        Suite::Spectral,
        Suite::Cherednik,
        Suite::Macdonald,
        Suite::Numeric,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Dunkl => "dunkl",
            Suite::Waves => "waves",
            Suite::Jsquare => "jsquare",
            Suite::Spectral => "spectral",
            Suite::Cherednik => "cherednik",
            Suite::Macdonald => "macdonald",
            Suite::Numeric => "numeric",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s)
    }

    /// Wall-clock budget in seconds, printed next to slow suites.
    pub fn budget_secs(&self) -> u64 {
        match self {
            Suite::Group => 1,
            Suite::Dunkl => 180,
            Suite::Waves => 720,
            Suite::Jsquare => 120,
            Suite::Spectral => 600,
            Suite::Cherednik => 900,
            Suite::Macdonald => 1800,
            Suite::Numeric => 120,
        }
    }
}

/// Collects checks for one suite, honouring the slow flag.
pub(crate) struct Checks<'a> {
    opts: &'a VerifyOptions,
    out: Vec<CheckResult>,
}

impl<'a> Checks<'a> {
    fn new(opts: &'a VerifyOptions) -> Self {
        Checks { opts, out: Vec::new() }
    }

    pub(crate) fn check<F>(&mut self, id: &str, anchor: &str, f: F) -> &mut CheckResult
    where
        F: FnOnce() -> Result<Option<serde_json::Value>>,
    {
        self.out.push(run_check(id, anchor, f));
        self.out.last_mut().unwrap()
    }

    pub(crate) fn slow<F>(&mut self, id: &str, anchor: &str, f: F) -> &mut CheckResult
    where
        F: FnOnce() -> Result<Option<serde_json::Value>>,
    {
        if self.opts.slow {
            self.check(id, anchor, f)
        } else {
            self.out.push(CheckResult::skipped(id, anchor));
            self.out.last_mut().unwrap()
        }
    }

    pub(crate) fn opts(&self) -> &VerifyOptions {
        self.opts
    }
}

pub fn run_suite(ctx: &DunklContext, suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let t = Instant::now();
    let mut c = Checks::new(opts);
    match suite {
        Suite::Group => misc::group(ctx, &mut c),
        Suite::Dunkl => dunkl::run(ctx, &mut c),
        Suite::Waves => waves::run(ctx, &mut c),
        Suite::Jsquare => waves::jsquare(ctx, &mut c),
        Suite::Spectral => waves::spectral(ctx, &mut c),
        Suite::Cherednik => cherednik::run(ctx, &mut c),
        Suite::Macdonald => misc::macdonald(ctx, &mut c),
        Suite::Numeric => misc::numeric(ctx, &mut c),
    }
    VerifyReport { suite: suite.name().into(), checks: c.out, elapsed_ms: t.elapsed().as_secs_f64() * 1e3 }
}

/// Every suite, run concurrently; reports come back in [`Suite::ALL`] order.
pub fn run_all(ctx: &DunklContext, opts: &VerifyOptions) -> Vec<VerifyReport> {
    Suite::ALL.par_iter().map(|s| run_suite(ctx, *s, opts)).collect()
}

/// `None` if equal, otherwise both sides rendered.
pub(crate) fn diff<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Option<serde_json::Value> {
    crate::report::compare(lhs, rhs)
}

/// Collect per-case failures; pass when the list is empty.
pub(crate) fn failures(list: Vec<serde_json::Value>) -> Option<serde_json::Value> {
    if list.is_empty() {
        None
    } else {
        Some(serde_json::Value::Array(list))
    }
}
