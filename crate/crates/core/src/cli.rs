//! Sweep orchestration: prime sieving, parameter grids, parallel execution,
//! and machine-readable JSON/CSV reports.
//!
//! Reports are deterministic: verdicts are sorted by (check, p, b, c, m, t)
//! before emission and the emitted bytes are independent of the worker
//! count. Wall time is surfaced on the report struct (and stderr) but never
//! serialized, so repeated runs of the same configuration are byte-identical.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::congruences::{
    check_bc2_family, check_mortenson, check_s_closed_form, check_sun_tauraso, check_t2_4_36,
    check_t2_cb8, check_t2_cb8_cubed, check_t2_d_cubed, check_t2_m, check_t2_neg8, check_t2_neg_d,
    check_t2_pell8, solve_m, CheckId, CheckVerdict,
};
use crate::identities::{self, IdentityReport};
use crate::modnt::NtError;
use crate::sequences::{rational, TrinomialParams};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("sieve bounds must satisfy 2 <= lo <= hi <= 10^8, got [{lo}, {hi}]")]
    SieveBounds { lo: u64, hi: u64 },
    #[error("invalid sweep config: {0}")]
    BadConfig(String),
    #[error("unknown identity family `{0}`")]
    UnknownIdentity(String),
    #[error("check `{check}` requires --{flag}")]
    MissingParam { check: CheckId, flag: &'static str },
    #[error(transparent)]
    Nt(#[from] NtError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Exactly the primes in `[lo, hi]`, ascending. Bounds: `2 ≤ lo ≤ hi ≤ 10^8`.
pub fn sieve_primes(lo: u64, hi: u64) -> Result<Vec<u64>, CliError> {
    if lo < 2 || lo > hi || hi > 100_000_000 {
        return Err(CliError::SieveBounds { lo, hi });
    }
    let n = hi as usize;
    let mut composite = vec![0u64; n / 64 + 1];
    let mut i = 2usize;
    while i * i <= n {
        if composite[i >> 6] >> (i & 63) & 1 == 0 {
            let mut j = i * i;
            while j <= n {
                composite[j >> 6] |= 1 << (j & 63);
                j += i;
            }
        }
        i += 1;
    }
    Ok((lo as usize..=n)
        .filter(|&v| composite[v >> 6] >> (v & 63) & 1 == 0)
        .map(|v| v as u64)
        .collect())
}

/// Parameter population for checks that take a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamSet {
    Grid { b: (i64, i64), c: (i64, i64) },
    List(Vec<(i64, i64)>),
}

impl ParamSet {
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        match self {
            ParamSet::Grid { b, c } => {
                let mut out = Vec::new();
                for bv in b.0..=b.1 {
                    for cv in c.0..=c.1 {
                        out.push((bv, cv));
                    }
                }
                out
            }
            ParamSet::List(pairs) => pairs.clone(),
        }
    }
}

/// How `m` values are chosen for the parametric `t2_m` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MMode {
    /// Solve `(m-d)^2 = 16mc` per `(b, c)` and skip pairs with no roots.
    Auto,
    /// Explicit list; every value must satisfy the defining equation.
    List(Vec<i64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        }
    }
}

impl std::str::FromStr for ReportFormat {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(CliError::BadConfig(format!("unknown format `{other}`"))),
        }
    }
}

/// Full sweep specification.
///
/// For `s_closed_form` the grid columns are read as `(m, d)` and for
/// `bc2_family` as `(b, γ)`; verdicts record them in the `m`/`c` and `b`/`c`
/// columns respectively.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub checks: Vec<CheckId>,
    pub prime_min: u64,
    pub prime_max: u64,
    pub params: ParamSet,
    pub m_mode: MMode,
    /// Cap on the Sun–Tauraso parameter `t`; `None` runs the full `[1, p-1]`.
    pub t_max: Option<u64>,
    /// Worker count; `None` falls back to `TRICON_THREADS`, then all cores.
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: ReportFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            checks: CheckId::ALL.to_vec(),
            prime_min: 3,
            prime_max: 300,
            params: ParamSet::Grid {
                b: (-4, 4),
                c: (-4, 4),
            },
            m_mode: MMode::Auto,
            t_max: None,
            threads: None,
            output: None,
            format: ReportFormat::Json,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.prime_min < 3 {
            return Err(CliError::BadConfig("prime_min must be >= 3".into()));
        }
        if self.prime_max < self.prime_min {
            return Err(CliError::BadConfig("prime_max must be >= prime_min".into()));
        }
        if self.checks.is_empty() {
            return Err(CliError::BadConfig("no checks selected".into()));
        }
        Ok(())
    }

    fn effective_threads(&self) -> usize {
        self.threads
            .or_else(|| {
                std::env::var("TRICON_THREADS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(0) // 0 lets the pool pick the core count
    }
}

/// Aggregated sweep outcome. `wall` is informational and never serialized.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub verdicts: Vec<CheckVerdict>,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub wall: Duration,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.fail == 0
    }
}

fn no_integer_m_skip(params: &TrinomialParams, p: u64) -> CheckVerdict {
    CheckVerdict {
        check: CheckId::T2M,
        p,
        b: Some(params.b),
        c: Some(params.c),
        m: None,
        t: None,
        e: 2,
        lhs: None,
        rhs: None,
        holds: None,
        skip_reason: Some("no_integer_m".to_string()),
    }
}

fn run_prime_cells(
    config: &SweepConfig,
    pairs: &[(i64, i64)],
    p: u64,
) -> Result<Vec<CheckVerdict>, NtError> {
    let mut out = Vec::new();
    for &check in &config.checks {
        match check {
            CheckId::T2NegD => {
                for &(b, c) in pairs {
                    out.push(check_t2_neg_d(&TrinomialParams::new(b, c), p)?);
                }
            }
            CheckId::T2M => {
                for &(b, c) in pairs {
                    let params = TrinomialParams::new(b, c);
                    match &config.m_mode {
                        MMode::Auto => {
                            let roots = solve_m(&params);
                            if roots.is_empty() {
                                out.push(no_integer_m_skip(&params, p));
                            } else {
                                for mval in roots {
                                    out.push(check_t2_m(&params, mval, p)?);
                                }
                            }
                        }
                        MMode::List(ms) => {
                            for &mval in ms {
                                out.push(check_t2_m(&params, mval, p)?);
                            }
                        }
                    }
                }
            }
            CheckId::T2DCubed => {
                for &(b, c) in pairs {
                    out.push(check_t2_d_cubed(&TrinomialParams::new(b, c), p)?);
                }
            }
            CheckId::T2Pell8 => out.push(check_t2_pell8(p)?),
            CheckId::T2Cb8 => out.push(check_t2_cb8(p)?),
            CheckId::T2Neg8 => out.push(check_t2_neg8(p)?),
            CheckId::T2FourThirtySix => out.push(check_t2_4_36(p)?),
            CheckId::T2Cb8Cubed => out.push(check_t2_cb8_cubed(p)?),
            CheckId::Mortenson => out.push(check_mortenson(p)?),
            CheckId::SunTauraso => {
                let cap = config.t_max.unwrap_or(p - 1).min(p - 1);
                for t in 1..=cap {
                    out.push(check_sun_tauraso(t as i64, p)?);
                }
            }
            CheckId::SClosedForm => {
                for &(mval, dval) in pairs {
                    out.push(check_s_closed_form(mval, dval, p)?);
                }
            }
            CheckId::Bc2Family => {
                for &(b, gamma) in pairs {
                    out.push(check_bc2_family(b, gamma, p)?);
                }
            }
        }
    }
    Ok(out)
}

/// Execute every `(check, prime, params)` cell, in parallel across primes.
/// The verdict list is sorted into a canonical order, so the report is
/// independent of the thread count.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, CliError> {
    config.validate()?;
    let start = Instant::now();
    let primes = sieve_primes(config.prime_min, config.prime_max)?;
    let pairs = config.params.pairs();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.effective_threads())
        .build()
        .map_err(|e| CliError::BadConfig(format!("thread pool: {e}")))?;
    let nested: Result<Vec<Vec<CheckVerdict>>, NtError> = pool.install(|| {
        use rayon::prelude::*;
        primes
            .par_iter()
            .map(|&p| run_prime_cells(config, &pairs, p))
            .collect()
    });

    let mut verdicts: Vec<CheckVerdict> = nested?.into_iter().flatten().collect();
    verdicts.sort_by(|a, b| {
        (a.check.as_str(), a.p, a.b, a.c, a.m, a.t).cmp(&(
            b.check.as_str(),
            b.p,
            b.b,
            b.c,
            b.m,
            b.t,
        ))
    });
    let pass = verdicts.iter().filter(|v| v.is_pass()).count();
    let fail = verdicts.iter().filter(|v| v.is_fail()).count();
    let skip = verdicts.iter().filter(|v| v.is_skip()).count();
    Ok(SweepReport {
        config: config.clone(),
        verdicts,
        pass,
        fail,
        skip,
        wall: start.elapsed(),
    })
}

#[derive(Serialize)]
struct JsonParams {
    b: Option<i64>,
    c: Option<i64>,
    m: Option<i64>,
    t: Option<i64>,
}

#[derive(Serialize)]
struct JsonVerdict<'a> {
    check: &'a str,
    p: u64,
    params: JsonParams,
    e: u32,
    lhs: Option<u64>,
    rhs: Option<u64>,
    holds: Option<bool>,
    skip_reason: Option<&'a str>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonParamSet {
    Grid {
        b_min: i64,
        b_max: i64,
        c_min: i64,
        c_max: i64,
    },
    List {
        pairs: Vec<(i64, i64)>,
    },
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonMMode {
    Auto(&'static str),
    List(Vec<i64>),
}

#[derive(Serialize)]
struct JsonConfig<'a> {
    checks: Vec<&'a str>,
    prime_min: u64,
    prime_max: u64,
    params: JsonParamSet,
    m_mode: JsonMMode,
    t_max: Option<u64>,
    format: &'a str,
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
    skip: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    config: JsonConfig<'a>,
    verdicts: Vec<JsonVerdict<'a>>,
    summary: JsonSummary,
}

fn json_verdict(v: &CheckVerdict) -> JsonVerdict<'_> {
    JsonVerdict {
        check: v.check.as_str(),
        p: v.p,
        params: JsonParams {
            b: v.b,
            c: v.c,
            m: v.m,
            t: v.t,
        },
        e: v.e,
        lhs: v.lhs,
        rhs: v.rhs,
        holds: v.holds,
        skip_reason: v.skip_reason.as_deref(),
    }
}

/// One-line JSON rendering of a single verdict (used by `check`).
pub fn verdict_json_line(v: &CheckVerdict) -> String {
    serde_json::to_string(&json_verdict(v)).expect("verdict serialization cannot fail")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serialize a report. JSON carries the config echo and summary; CSV is the
/// bare verdict table under the fixed header.
pub fn emit_report(report: &SweepReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let cfg = &report.config;
            let json = JsonReport {
                config: JsonConfig {
                    checks: cfg.checks.iter().map(|c| c.as_str()).collect(),
                    prime_min: cfg.prime_min,
                    prime_max: cfg.prime_max,
                    params: match &cfg.params {
                        ParamSet::Grid { b, c } => JsonParamSet::Grid {
                            b_min: b.0,
                            b_max: b.1,
                            c_min: c.0,
                            c_max: c.1,
                        },
                        ParamSet::List(pairs) => JsonParamSet::List {
                            pairs: pairs.clone(),
                        },
                    },
                    m_mode: match &cfg.m_mode {
                        MMode::Auto => JsonMMode::Auto("auto"),
                        MMode::List(ms) => JsonMMode::List(ms.clone()),
                    },
                    t_max: cfg.t_max,
                    format: cfg.format.as_str(),
                },
                verdicts: report.verdicts.iter().map(json_verdict).collect(),
                summary: JsonSummary {
                    pass: report.pass,
                    fail: report.fail,
                    skip: report.skip,
                },
            };
            let mut bytes = serde_json::to_vec_pretty(&json).expect("report serialization");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Csv => {
            let mut out = Vec::new();
            writeln!(out, "check,p,b,c,m,t,e,lhs,rhs,holds,skip_reason").unwrap();
            let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
            let optu = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            for v in &report.verdicts {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    v.check.as_str(),
                    v.p,
                    opt(v.b),
                    opt(v.c),
                    opt(v.m),
                    opt(v.t),
                    v.e,
                    optu(v.lhs),
                    optu(v.rhs),
                    v.holds.map(|h| h.to_string()).unwrap_or_default(),
                    csv_field(v.skip_reason.as_deref().unwrap_or("")),
                )
                .unwrap();
            }
            out
        }
    }
}

/// Partial configuration from a key=value file or command-line flags.
/// Later layers override earlier ones field by field.
#[derive(Clone, Debug, Default)]
pub struct SweepOverlay {
    pub checks: Option<Vec<CheckId>>,
    pub prime_min: Option<u64>,
    pub prime_max: Option<u64>,
    pub b_min: Option<i64>,
    pub b_max: Option<i64>,
    pub c_min: Option<i64>,
    pub c_max: Option<i64>,
    pub params: Option<Vec<(i64, i64)>>,
    pub m_list: Option<Vec<i64>>,
    pub t_max: Option<u64>,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: Option<ReportFormat>,
}

fn parse_pair_list(s: &str) -> Result<Vec<(i64, i64)>, CliError> {
    s.split(';')
        .filter(|chunk| !chunk.trim().is_empty())
        .map(|chunk| {
            let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(CliError::BadConfig(format!("bad pair `{chunk}`")));
            }
            let b = parts[0]
                .parse()
                .map_err(|_| CliError::BadConfig(format!("bad integer `{}`", parts[0])))?;
            let c = parts[1]
                .parse()
                .map_err(|_| CliError::BadConfig(format!("bad integer `{}`", parts[1])))?;
            Ok((b, c))
        })
        .collect()
}

fn parse_int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            v.parse()
                .map_err(|_| CliError::BadConfig(format!("bad integer `{v}`")))
        })
        .collect()
}

impl SweepOverlay {
    /// Parse the plain-text `key=value` config format. Unknown keys are an
    /// error; `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self, CliError> {
        let mut overlay = SweepOverlay::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::BadConfig(format!("line {}: missing `=`", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| CliError::BadConfig(format!("line {}: {what}", lineno + 1));
            match key {
                "checks" => {
                    let ids: Result<Vec<CheckId>, _> =
                        value.split(',').map(|s| s.trim().parse()).collect();
                    overlay.checks = Some(ids.map_err(|e| bad(&e))?);
                }
                "prime_min" => {
                    overlay.prime_min = Some(value.parse().map_err(|_| bad("bad integer"))?)
                }
                "prime_max" => {
                    overlay.prime_max = Some(value.parse().map_err(|_| bad("bad integer"))?)
                }
                "b_min" => overlay.b_min = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "b_max" => overlay.b_max = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "c_min" => overlay.c_min = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "c_max" => overlay.c_max = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "params" => overlay.params = Some(parse_pair_list(value)?),
                "m_list" => overlay.m_list = Some(parse_int_list(value)?),
                "t_max" => overlay.t_max = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "threads" => overlay.threads = Some(value.parse().map_err(|_| bad("bad integer"))?),
                "output" => overlay.output = Some(PathBuf::from(value)),
                "format" => overlay.format = Some(value.parse()?),
                other => return Err(bad(&format!("unknown key `{other}`"))),
            }
        }
        Ok(overlay)
    }

    /// Apply this overlay on top of `config`.
    pub fn apply(&self, config: &mut SweepConfig) {
        if let Some(checks) = &self.checks {
            let mut seen = Vec::new();
            for &c in checks {
                if !seen.contains(&c) {
                    seen.push(c);
                }
            }
            config.checks = seen;
        }
        if let Some(v) = self.prime_min {
            config.prime_min = v;
        }
        if let Some(v) = self.prime_max {
            config.prime_max = v;
        }
        if let Some(pairs) = &self.params {
            config.params = ParamSet::List(pairs.clone());
        } else if self.b_min.is_some()
            || self.b_max.is_some()
            || self.c_min.is_some()
            || self.c_max.is_some()
        {
            let (mut b, mut c) = match &config.params {
                ParamSet::Grid { b, c } => (*b, *c),
                ParamSet::List(_) => ((-4, 4), (-4, 4)),
            };
            if let Some(v) = self.b_min {
                b.0 = v;
            }
            if let Some(v) = self.b_max {
                b.1 = v;
            }
            if let Some(v) = self.c_min {
                c.0 = v;
            }
            if let Some(v) = self.c_max {
                c.1 = v;
            }
            config.params = ParamSet::Grid { b, c };
        }
        if let Some(ms) = &self.m_list {
            config.m_mode = MMode::List(ms.clone());
        }
        if let Some(v) = self.t_max {
            config.t_max = Some(v);
        }
        if let Some(v) = self.threads {
            config.threads = Some(v);
        }
        if let Some(v) = &self.output {
            config.output = Some(v.clone());
        }
        if let Some(v) = self.format {
            config.format = v;
        }
    }
}

/// Run one congruence check at one prime, validating the parameter flags the
/// check needs.
pub fn run_single_check(
    id: CheckId,
    p: u64,
    b: Option<i64>,
    c: Option<i64>,
    m: Option<i64>,
    t: Option<i64>,
) -> Result<CheckVerdict, CliError> {
    let need =
        |flag: &'static str, v: Option<i64>| v.ok_or(CliError::MissingParam { check: id, flag });
    let verdict = match id {
        CheckId::T2NegD => check_t2_neg_d(&TrinomialParams::new(need("b", b)?, need("c", c)?), p)?,
        CheckId::T2M => check_t2_m(
            &TrinomialParams::new(need("b", b)?, need("c", c)?),
            need("m", m)?,
            p,
        )?,
        CheckId::T2DCubed => {
            check_t2_d_cubed(&TrinomialParams::new(need("b", b)?, need("c", c)?), p)?
        }
        CheckId::T2Pell8 => check_t2_pell8(p)?,
        CheckId::T2Cb8 => check_t2_cb8(p)?,
        CheckId::T2Neg8 => check_t2_neg8(p)?,
        CheckId::T2FourThirtySix => check_t2_4_36(p)?,
        CheckId::T2Cb8Cubed => check_t2_cb8_cubed(p)?,
        CheckId::Mortenson => check_mortenson(p)?,
        CheckId::SunTauraso => check_sun_tauraso(need("t", t)?, p)?,
        // (m, d) with d carried by the c column.
        CheckId::SClosedForm => check_s_closed_form(need("m", m)?, need("c", c)?, p)?,
        // (b, γ) with γ carried by the c column.
        CheckId::Bc2Family => check_bc2_family(need("b", b)?, need("c", c)?, p)?,
    };
    Ok(verdict)
}

/// Outcome of one identity family sweep.
#[derive(Clone, Debug)]
pub struct IdentitySummary {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<IdentityReport>,
}

impl IdentitySummary {
    fn collect(name: &'static str, reports: Vec<IdentityReport>) -> Self {
        let cases = reports.len();
        let failures = reports.into_iter().filter(|r| !r.holds).collect();
        IdentitySummary {
            name,
            cases,
            failures,
        }
    }
}

/// The rational sample points used for identity sweeps in `x`.
pub fn identity_sample_points() -> Vec<BigRational> {
    vec![
        rational(1, 2),
        rational(-1, 2),
        rational(2, 1),
        rational(-2, 1),
        rational(3, 5),
        rational(-7, 3),
    ]
}

/// The `(m, d)` pairs used for the double-sum identity sweeps.
pub fn md_sample_pairs() -> [(i64, i64); 4] {
    [(4, 12), (1, 5), (25, 5), (36, 12)]
}

pub const IDENTITY_FAMILIES: [&str; 14] = [
    "clausen_square",
    "harmonic_binomial_sum",
    "harmonic_binomial_recurrence",
    "inverse_binomial_sum",
    "inverse_binomial_odd",
    "inverse_binomial_odd_certificate",
    "md_double_sum",
    "md_double_sum_certificate",
    "legendre_connection",
    "mattarei_tauraso",
    "truncated_log",
    "binom_shifts",
    "half_binomial_square",
    "wolstenholme",
];

/// Run identity sweeps. `name` is one family name, `"wolstenholme"`, or
/// `"all"`. Exact families use `n_max`; congruence families use `p_max`.
pub fn run_identity_suite(
    name: &str,
    n_max: u32,
    p_max: u64,
) -> Result<Vec<IdentitySummary>, CliError> {
    let xs = identity_sample_points();
    let primes = sieve_primes(3, p_max.max(3))?;
    let all = name == "all";
    let mut out = Vec::new();

    if all || name == "clausen_square" {
        let mut reports = Vec::new();
        for b in -4..=4 {
            for c in -4..=4 {
                let params = TrinomialParams::new(b, c);
                for n in 0..=n_max {
                    reports.push(identities::verify_clausen_square(n, &params));
                }
            }
        }
        out.push(IdentitySummary::collect("clausen_square", reports));
    }
    if all || name == "harmonic_binomial_sum" {
        let mut reports = Vec::new();
        let mut points = xs.clone();
        points.push(rational(-1, 1));
        for x in &points {
            for n in 0..=n_max {
                reports.push(identities::verify_harmonic_binomial_sum(n, x));
            }
        }
        out.push(IdentitySummary::collect("harmonic_binomial_sum", reports));
    }
    if all || name == "harmonic_binomial_recurrence" {
        let mut reports = Vec::new();
        for x in &xs {
            for n in 0..=n_max.saturating_sub(2) {
                reports.push(identities::verify_harmonic_binomial_recurrence(n, x));
            }
        }
        out.push(IdentitySummary::collect(
            "harmonic_binomial_recurrence",
            reports,
        ));
    }
    if all || name == "inverse_binomial_sum" {
        let mut reports = Vec::new();
        for x in &xs {
            for n in 0..=n_max.min(25) {
                reports.push(identities::verify_inverse_binomial_sum(n, x)?);
            }
        }
        out.push(IdentitySummary::collect("inverse_binomial_sum", reports));
    }
    if all || name == "inverse_binomial_odd" {
        let mut reports = Vec::new();
        for x in &xs {
            for n in 1..=n_max.min(20) {
                reports.extend(identities::verify_inverse_binomial_odd(n, x)?);
            }
        }
        out.push(IdentitySummary::collect("inverse_binomial_odd", reports));
    }
    if all || name == "inverse_binomial_odd_certificate" {
        let mut reports = Vec::new();
        for x in &xs {
            for n in 1..=n_max.min(20) {
                reports.push(identities::verify_inverse_binomial_odd_certificate(n, x)?);
            }
        }
        out.push(IdentitySummary::collect(
            "inverse_binomial_odd_certificate",
            reports,
        ));
    }
    if all || name == "md_double_sum" {
        let mut reports = Vec::new();
        for (m, d) in md_sample_pairs() {
            for n in 1..=n_max.min(20) {
                reports.push(identities::verify_md_double_sum(n, m, d)?);
            }
        }
        out.push(IdentitySummary::collect("md_double_sum", reports));
    }
    if all || name == "md_double_sum_certificate" {
        let mut reports = Vec::new();
        for (m, d) in md_sample_pairs() {
            for n in 1..=n_max.min(20) {
                reports.push(identities::verify_md_double_sum_certificate(n, m, d)?);
            }
        }
        out.push(IdentitySummary::collect(
            "md_double_sum_certificate",
            reports,
        ));
    }
    if all || name == "legendre_connection" {
        let mut reports = Vec::new();
        for b in -4..=4i64 {
            for c in -4..=4i64 {
                let params = TrinomialParams::new(b, c);
                if params.d == 0 {
                    continue;
                }
                for n in 0..=n_max.min(25) {
                    reports.push(identities::verify_legendre_connection(n, &params)?);
                }
            }
        }
        out.push(IdentitySummary::collect("legendre_connection", reports));
    }
    if all || name == "mattarei_tauraso" {
        let mut reports = Vec::new();
        for &p in &primes {
            for num in [2i128, -1, 3, -2, 5] {
                let x = rational(num, 1);
                match identities::verify_mattarei_tauraso(p, &x) {
                    Ok(r) => reports.push(r),
                    Err(NtError::ExcludedArgument(_)) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
        out.push(IdentitySummary::collect("mattarei_tauraso", reports));
    }
    if all || name == "truncated_log" {
        let mut reports = Vec::new();
        for &p in &primes {
            for num in 0..10i128 {
                reports.push(identities::verify_truncated_log_congruence(
                    p,
                    &rational(num, 1),
                )?);
            }
        }
        out.push(IdentitySummary::collect("truncated_log", reports));
    }
    if all || name == "binom_shifts" {
        let mut reports = Vec::new();
        for &p in primes.iter().filter(|&&p| p <= 100) {
            for l in 1..=(p - 1) / 2 {
                for k in 0..=(p - 2 * l - 1) {
                    reports.push(identities::verify_binom_shift_down(p, l, k)?);
                }
                for k in 0..2 * l {
                    reports.push(identities::verify_binom_shift_up(p, l, k)?);
                }
            }
        }
        out.push(IdentitySummary::collect("binom_shifts", reports));
    }
    if all || name == "half_binomial_square" {
        let mut reports = Vec::new();
        for &p in &primes {
            for l in 0..=(p - 1) / 2 {
                reports.push(identities::verify_half_binomial_square(p, l)?);
            }
        }
        out.push(IdentitySummary::collect("half_binomial_square", reports));
    }
    if all || name == "wolstenholme" {
        let mut reports = Vec::new();
        for &p in primes.iter().filter(|&&p| p > 3) {
            reports.push(identities::verify_wolstenholme(p)?);
        }
        out.push(IdentitySummary::collect("wolstenholme", reports));
    }

    if out.is_empty() {
        return Err(CliError::UnknownIdentity(name.to_string()));
    }
    Ok(out)
}
