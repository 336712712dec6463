use std::time::Instant;

use serde::Serialize;

use quadzeta_core::localfactor::{
    critical_zeros, factor_poly, genfun_check, sweep, Grid, LocalFactorError, SweepOptions,
};
use quadzeta_core::ordoracle::{fundamental_decomposition, oracle_compare, OracleError, OrderSpec};
use quadzeta_core::{Exec, FactorKind, LocalFactorParams};

use crate::args::{FactorArgs, Format, GenfunArgs, OracleArgs, VerifyArgs, ZerosArgs};
use crate::report::{csv_table, fixed, BigNum, Fixed, Report};

pub const JOBS_ENV: &str = "ZETA_ORDER_JOBS";

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// A check could not be carried out; exit code 1.
    Failed(String),
}

/// Rendered output and whether every check passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

pub struct Clock {
    start: Instant,
    enabled: bool,
}

impl Clock {
    pub fn start(enabled: bool) -> Self {
        Self {
            start: Instant::now(),
            enabled,
        }
    }

    fn wall_ms(&self) -> u64 {
        if self.enabled {
            self.start.elapsed().as_millis() as u64
        } else {
            0
        }
    }
}

fn kind_of(star: bool) -> FactorKind {
    if star {
        FactorKind::Star
    } else {
        FactorKind::Proper
    }
}

fn kind_name(kind: FactorKind) -> &'static str {
    match kind {
        FactorKind::Proper => "proper",
        FactorKind::Star => "star",
    }
}

fn local_error(e: LocalFactorError) -> CliError {
    use LocalFactorError::*;
    match e {
        NotPrime(_) | ExponentTooSmall(_) | InvalidChi(_) | NoTerms | NonPositiveWidth => {
            CliError::Usage(e.to_string())
        }
        other => CliError::Failed(other.to_string()),
    }
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::LocalFactor(e) => local_error(e),
        OracleError::Overflow => CliError::Usage(format!("{e}; lower --limit")),
        other => CliError::Usage(other.to_string()),
    }
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--tol must be a positive number, got {tol}"
        )))
    }
}

/// `--jobs`, else `ZETA_ORDER_JOBS`, else `None` (the default pool).
pub fn resolve_jobs(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    let jobs = match flag {
        Some(k) => Some(k),
        None => match std::env::var(JOBS_ENV) {
            Ok(v) if !v.trim().is_empty() => Some(v.trim().parse().map_err(|_| {
                CliError::Usage(format!("{JOBS_ENV} must be a positive integer, got {v:?}"))
            })?),
            _ => None,
        },
    };
    if jobs == Some(0) {
        return Err(CliError::Usage("the number of jobs must be >= 1".into()));
    }
    Ok(jobs)
}

fn with_jobs<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce(Exec) -> T + Send,
) -> Result<T, CliError> {
    match jobs {
        None => Ok(f(Exec::Parallel)),
        Some(1) => Ok(f(Exec::Sequential)),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::Failed(format!("cannot start {k} worker threads: {e}")))?;
            Ok(pool.install(|| f(Exec::Parallel)))
        }
    }
}

fn poly_text(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (k, mag) {
            (0, m) => out.push_str(m),
            (_, "1") => {}
            (_, m) => out.push_str(m),
        }
        match k {
            0 => {}
            1 => out.push('u'),
            _ => out.push_str(&format!("u^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
struct FactorParams {
    p: u64,
    n: u32,
    chi: i64,
    kind: &'static str,
}

#[derive(Serialize)]
struct FactorResult {
    degree: usize,
    coefficients: Vec<BigNum>,
}

pub fn factor(args: &FactorArgs, clock: &Clock) -> Result<Output, CliError> {
    let params = LocalFactorParams::new(args.p, args.n, args.chi).map_err(local_error)?;
    let kind = kind_of(args.star);
    let poly = factor_poly(&params, kind).map_err(local_error)?;
    let coeffs: Vec<String> = poly
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                c.to_string()
            }
        })
        .collect();
    let text = match args.format {
        Format::Text => format!("{}\n", poly_text(&coeffs)),
        Format::Csv => csv_table(None, &[coeffs]),
        Format::Json => Report {
            command: "factor",
            params: FactorParams {
                p: args.p,
                n: args.n,
                chi: args.chi,
                kind: kind_name(kind),
            },
            results: vec![FactorResult {
                degree: coeffs.len() - 1,
                coefficients: coeffs.into_iter().map(BigNum).collect(),
            }],
            pass: true,
            wall_ms: clock.wall_ms(),
        }
        .to_json(),
    };
    Ok(Output { text, pass: true })
}

fn parse_chis(list: &str) -> Result<Vec<i8>, CliError> {
    let mut chis = Vec::new();
    for piece in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match piece.parse::<i8>() {
            Ok(c @ -1..=1) => chis.push(c),
            _ => {
                return Err(CliError::Usage(format!(
                    "chi must be -1, 0 or 1, got {piece:?}"
                )))
            }
        }
    }
    chis.sort_unstable();
    chis.dedup();
    if chis.is_empty() {
        return Err(CliError::Usage("the chi set is empty".into()));
    }
    Ok(chis)
}

#[derive(Serialize)]
struct VerifyParams {
    kind: &'static str,
    p_max: u64,
    primes: Vec<u64>,
    n_min: u32,
    n_max: u32,
    chis: Vec<i8>,
    tol: Fixed,
    width_bits: u32,
}

#[derive(Serialize)]
struct VerifyResult {
    p: u64,
    n: u32,
    chi: i8,
    degree_ok: bool,
    funceq_ok: bool,
    variations_at_minus1: usize,
    variations_at_plus1: usize,
    sturm_root_count: i64,
    intervals_ok: bool,
    numeric_modulus_max_err: Fixed,
    numeric_ok: bool,
    certified: bool,
    pass: bool,
    error: Option<String>,
}

const VERIFY_HEADER: [&str; 14] = [
    "p",
    "n",
    "chi",
    "degree_ok",
    "funceq_ok",
    "variations_at_minus1",
    "variations_at_plus1",
    "sturm_root_count",
    "intervals_ok",
    "numeric_modulus_max_err",
    "numeric_ok",
    "certified",
    "pass",
    "error",
];

pub fn verify(args: &VerifyArgs, clock: &Clock) -> Result<Output, CliError> {
    if args.p_max < 2 {
        return Err(CliError::Usage("--p-max must be >= 2".into()));
    }
    if args.n_max < 1 {
        return Err(CliError::Usage("--n-max must be >= 1".into()));
    }
    if !(1..=256).contains(&args.width_bits) {
        return Err(CliError::Usage(
            "--width-bits must be between 1 and 256".into(),
        ));
    }
    check_tol(args.tol)?;
    let chis = parse_chis(&args.chi)?;
    let jobs = resolve_jobs(args.jobs)?;
    let kind = kind_of(args.star);
    let grid = Grid::new(args.p_max, args.n_max, chis.clone());
    let opts = SweepOptions {
        tol: args.tol,
        width_bits: args.width_bits,
    };
    let results = with_jobs(jobs, |exec| sweep(&grid, kind, &opts, exec))?;
    let pass = results.iter().all(|r| r.pass());

    let rows: Vec<VerifyResult> = results
        .iter()
        .map(|r| VerifyResult {
            p: r.params.p(),
            n: r.params.n(),
            chi: r.params.chi(),
            degree_ok: r.degree_ok,
            funceq_ok: r.funceq_ok,
            variations_at_minus1: r.variations_at_minus1,
            variations_at_plus1: r.variations_at_plus1,
            sturm_root_count: r.sturm_root_count,
            intervals_ok: r.intervals_ok,
            numeric_modulus_max_err: Fixed(r.numeric_modulus_max_err),
            numeric_ok: r.numeric_ok,
            certified: r.certified,
            pass: r.pass(),
            error: r.error.clone(),
        })
        .collect();

    let text = match args.format {
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "p={} n={} chi={} V(-1)={} V(+1)={} roots={} modulus_err={} {}{}\n",
                    r.p,
                    r.n,
                    r.chi,
                    r.variations_at_minus1,
                    r.variations_at_plus1,
                    r.sturm_root_count,
                    fixed(r.numeric_modulus_max_err.0),
                    if r.pass { "certified" } else { "FAILED" },
                    r.error
                        .as_deref()
                        .map(|e| format!(" ({e})"))
                        .unwrap_or_default(),
                ));
            }
            let ok = rows.iter().filter(|r| r.pass).count();
            out.push_str(&format!(
                "{ok}/{} {} triples certified\n",
                rows.len(),
                kind_name(kind)
            ));
            out
        }
        Format::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.p.to_string(),
                        r.n.to_string(),
                        r.chi.to_string(),
                        r.degree_ok.to_string(),
                        r.funceq_ok.to_string(),
                        r.variations_at_minus1.to_string(),
                        r.variations_at_plus1.to_string(),
                        r.sturm_root_count.to_string(),
                        r.intervals_ok.to_string(),
                        fixed(r.numeric_modulus_max_err.0),
                        r.numeric_ok.to_string(),
                        r.certified.to_string(),
                        r.pass.to_string(),
                        r.error.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_table(Some(&VERIFY_HEADER), &table)
        }
        Format::Json => Report {
            command: "verify",
            params: VerifyParams {
                kind: kind_name(kind),
                p_max: args.p_max,
                primes: grid.primes.clone(),
                n_min: 1,
                n_max: args.n_max,
                chis,
                tol: Fixed(args.tol),
                width_bits: args.width_bits,
            },
            results: rows,
            pass,
            wall_ms: clock.wall_ms(),
        }
        .to_json(),
    };
    Ok(Output { text, pass })
}

#[derive(Serialize)]
struct ZerosParams {
    p: u64,
    n: u32,
    chi: i64,
    kind: &'static str,
    digits: usize,
    tol: Fixed,
}

#[derive(Serialize)]
struct ZeroResult {
    s_re: Fixed,
    s_im: Fixed,
    t: Fixed,
    certified: bool,
    modulus_error: Fixed,
}

pub fn zeros(args: &ZerosArgs, clock: &Clock) -> Result<Output, CliError> {
    if args.digits > 15 {
        return Err(CliError::Usage(format!(
            "--digits must be at most 15, got {}",
            args.digits
        )));
    }
    check_tol(args.tol)?;
    let params = LocalFactorParams::new(args.p, args.n, args.chi).map_err(local_error)?;
    let kind = kind_of(args.star);
    let zeros = critical_zeros(&params, kind, args.tol).map_err(local_error)?;
    let pass = zeros.iter().all(|z| z.certified);
    let digits = args.digits;
    let re_text = |re: f64, certified: bool| {
        if certified {
            "0.5".to_string()
        } else {
            format!("{re:.digits$}")
        }
    };

    let text = match args.format {
        Format::Text => zeros
            .iter()
            .map(|z| {
                let sign = if z.s_im < 0.0 { '-' } else { '+' };
                format!(
                    "{} {sign} {:.digits$}i  {}\n",
                    re_text(z.s_re, z.certified),
                    z.s_im.abs(),
                    if z.certified {
                        "certified"
                    } else {
                        "uncertified"
                    }
                )
            })
            .collect(),
        Format::Csv => {
            let rows: Vec<Vec<String>> = zeros
                .iter()
                .map(|z| {
                    vec![
                        re_text(z.s_re, z.certified),
                        format!("{:.digits$}", z.s_im),
                        format!("{:.digits$}", z.t),
                        z.certified.to_string(),
                    ]
                })
                .collect();
            csv_table(Some(&["s_re", "s_im", "t", "certified"]), &rows)
        }
        Format::Json => Report {
            command: "zeros",
            params: ZerosParams {
                p: args.p,
                n: args.n,
                chi: args.chi,
                kind: kind_name(kind),
                digits,
                tol: Fixed(args.tol),
            },
            results: zeros
                .iter()
                .map(|z| ZeroResult {
                    s_re: Fixed(z.s_re),
                    s_im: Fixed(z.s_im),
                    t: Fixed(z.t),
                    certified: z.certified,
                    modulus_error: Fixed(z.modulus_error),
                })
                .collect(),
            pass,
            wall_ms: clock.wall_ms(),
        }
        .to_json(),
    };
    Ok(Output { text, pass })
}

fn order_spec(args: &OracleArgs) -> Result<OrderSpec, CliError> {
    if let Some(disc) = args.disc {
        return OrderSpec::from_discriminant(disc).map_err(oracle_error);
    }
    let d_k = args.dk.expect("clap requires --dk or --disc");
    let f = args.f.unwrap_or(1);
    OrderSpec::new(d_k, f).map_err(|e| match e {
        OracleError::InvalidDiscriminant(_) => {
            let hint = i64::try_from(f)
                .ok()
                .and_then(|f| f.checked_mul(f))
                .and_then(|f2| f2.checked_mul(d_k))
                .and_then(|disc| fundamental_decomposition(disc).ok().map(|(d, g)| (disc, d, g)));
            match hint {
                Some((disc, d, g)) => CliError::Usage(format!(
                    "{e}; the order of discriminant f²·d_K = {disc} is --disc {disc} (d_K = {d}, f = {g})"
                )),
                None => CliError::Usage(format!(
                    "{e}; pass a fundamental --dk, or --disc D for the order of discriminant D"
                )),
            }
        }
        other => oracle_error(other),
    })
}

#[derive(Serialize)]
struct OracleParams {
    d_k: i64,
    f: u64,
    discriminant: i64,
    limit: usize,
    ideals: &'static str,
}

#[derive(Serialize)]
struct OracleRow {
    k: usize,
    enumerated: i64,
    expected: i64,
    #[serde(rename = "match")]
    matches: bool,
}

pub fn oracle(args: &OracleArgs, clock: &Clock) -> Result<Output, CliError> {
    let spec = order_spec(args)?;
    if args.limit < 1 {
        return Err(CliError::Usage("--limit must be >= 1".into()));
    }
    let jobs = resolve_jobs(args.jobs)?;
    let star = args.all_ideals;
    let report = with_jobs(jobs, |exec| oracle_compare(&spec, args.limit, star, exec))?
        .map_err(oracle_error)?;
    let pass = report.pass();
    let ideals = if star { "all" } else { "proper" };
    let rows: Vec<OracleRow> = (1..=report.limit)
        .map(|k| OracleRow {
            k,
            enumerated: report.enumerated.get(k),
            expected: report.expected.get(k),
            matches: report.enumerated.get(k) == report.expected.get(k),
        })
        .collect();

    let text = match args.format {
        Format::Text => {
            let mut out = format!(
                "d_K={} f={} D={} N={} {ideals} ideals: {}\n",
                spec.d_k(),
                spec.f(),
                spec.discriminant(),
                report.limit,
                if pass { "pass" } else { "MISMATCH" }
            );
            if !pass {
                out.push_str("k\tenumerated\texpected\n");
                for (k, a, b) in report.mismatches() {
                    out.push_str(&format!("{k}\t{a}\t{b}\n"));
                }
            }
            out
        }
        Format::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.enumerated.to_string(),
                        r.expected.to_string(),
                        r.matches.to_string(),
                    ]
                })
                .collect();
            csv_table(Some(&["k", "enumerated", "expected", "match"]), &table)
        }
        Format::Json => Report {
            command: "oracle",
            params: OracleParams {
                d_k: spec.d_k(),
                f: spec.f(),
                discriminant: spec.discriminant(),
                limit: report.limit,
                ideals,
            },
            results: rows,
            pass,
            wall_ms: clock.wall_ms(),
        }
        .to_json(),
    };
    Ok(Output { text, pass })
}

#[derive(Serialize)]
struct GenfunParams {
    p: u64,
    chi: i64,
    terms: u32,
}

#[derive(Serialize)]
struct GenfunResult {
    terms: u32,
    pass: bool,
    first_failing_degree: Option<u32>,
}

pub fn genfun(args: &GenfunArgs, clock: &Clock) -> Result<Output, CliError> {
    let report = genfun_check(args.p, args.chi, args.terms).map_err(local_error)?;
    let pass = report.pass;
    let failing = report
        .first_failing_degree
        .map(|d| d.to_string())
        .unwrap_or_default();
    let text = match args.format {
        Format::Text => {
            if pass {
                format!(
                    "p={} chi={} through X^{}: pass\n",
                    args.p, args.chi, report.terms
                )
            } else {
                format!(
                    "p={} chi={} through X^{}: first failure at X^{failing}\n",
                    args.p, args.chi, report.terms
                )
            }
        }
        Format::Csv => csv_table(
            Some(&["p", "chi", "terms", "pass", "first_failing_degree"]),
            &[vec![
                args.p.to_string(),
                args.chi.to_string(),
                report.terms.to_string(),
                pass.to_string(),
                failing,
            ]],
        ),
        Format::Json => Report {
            command: "genfun",
            params: GenfunParams {
                p: args.p,
                chi: args.chi,
                terms: args.terms,
            },
            results: vec![GenfunResult {
                terms: report.terms,
                pass,
                first_failing_degree: report.first_failing_degree,
            }],
            pass,
            wall_ms: clock.wall_ms(),
        }
        .to_json(),
    };
    Ok(Output { text, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn polynomial_text() {
        assert_eq!(poly_text(&strings(&["1", "0", "2"])), "1 + 2u^2");
        assert_eq!(poly_text(&strings(&["1", "-1", "3"])), "1 - u + 3u^2");
        assert_eq!(poly_text(&strings(&["-1", "1"])), "-1 + u");
        assert_eq!(poly_text(&strings(&["0"])), "0");
    }

    #[test]
    fn chi_lists() {
        assert_eq!(parse_chis("-1,0,1").unwrap(), vec![-1, 0, 1]);
        assert_eq!(parse_chis(" 1, -1 ,1").unwrap(), vec![-1, 1]);
        assert!(matches!(parse_chis(""), Err(CliError::Usage(_))));
        assert!(matches!(parse_chis(","), Err(CliError::Usage(_))));
        assert!(matches!(parse_chis("2"), Err(CliError::Usage(_))));
    }
}
