//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadzeta_core::exactnum::{rat, Rational};
use quadzeta_core::localfactor::{
    bridge_max_deviation, build_q, build_q_star, check_functional_equation, count_roots_in,
    critical_zeros, factor_poly, genfun_check, isolate_roots, FactorKind, LocalFactorParams,
};
use quadzeta_core::ordoracle::{enumerate_ideals, oracle_compare, OrderSpec};
use quadzeta_core::par::{map_ordered, Exec};
use quadzeta_core::polyalg::eval_complex;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const N_MAX: u32 = 20;
const CHIS: [i64; 3] = [-1, 0, 1];
const MODULUS_TOL: f64 = 1e-8;
const RESIDUAL_TOL: f64 = 1e-8;
const BRIDGE_TOL: f64 = 1e-9;
const ISOLATION_BITS: u32 = 20;
const ORACLE_LIMIT: usize = 200;
const ORACLE_DISCS: [i64; 6] = [-3, -4, -7, 5, 8, 13];
const ORACLE_CONDUCTORS: [u64; 5] = [2, 3, 4, 6, 12];

fn grid(primes: &[u64], n_max: u32) -> Vec<LocalFactorParams> {
    let mut out = Vec::new();
    for &p in primes {
        for n in 1..=n_max {
            for chi in CHIS {
                out.push(LocalFactorParams::new(p, n, chi).unwrap());
            }
        }
    }
    out
}

fn specs() -> Vec<OrderSpec> {
    ORACLE_DISCS
        .iter()
        .flat_map(|&d| {
            ORACLE_CONDUCTORS
                .iter()
                .map(move |&f| OrderSpec::new(d, f).unwrap())
        })
        .collect()
}

/// Summary on success, first failure otherwise.
type Outcome = Result<String, String>;

/// (name, runtime budget in seconds, check)
type Check = (&'static str, Option<f64>, Box<dyn Fn() -> Outcome>);

fn first_failure<T>(results: Vec<Result<T, String>>) -> Result<Vec<T>, String> {
    results.into_iter().collect()
}

fn degree_and_funceq(kind: FactorKind) -> Outcome {
    let triples = grid(&PRIMES, N_MAX);
    let checked = first_failure(map_ordered(Exec::Parallel, &triples, |t| {
        let f = factor_poly(t, kind).map_err(|e| format!("{t:?}: {e}"))?;
        if f.degree() != Some(2 * t.n() as usize) {
            return Err(format!("{t:?}: degree {:?}", f.degree()));
        }
        match check_functional_equation(&f, t.p(), t.n()) {
            Ok(true) => Ok(()),
            other => Err(format!("{t:?}: functional equation {other:?}")),
        }
    }))?;
    Ok(format!(
        "{} triples, degree 2n and c_(2n-j) = p^(n-j) c_j exactly",
        checked.len()
    ))
}

fn sturm_route(kind: FactorKind) -> Outcome {
    let triples = grid(&PRIMES, N_MAX);
    let width = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << ISOLATION_BITS));
    let checked = first_failure(map_ordered(Exec::Parallel, &triples, |t| {
        let n = t.n() as usize;
        let cert = isolate_roots(t, kind, &width).map_err(|e| format!("{t:?}: {e}"))?;
        if (cert.variations_at_minus1, cert.variations_at_plus1) != (n, 0) {
            return Err(format!(
                "{t:?}: variations ({}, {})",
                cert.variations_at_minus1, cert.variations_at_plus1
            ));
        }
        let count = count_roots_in(t, kind, &rat(-1), &rat(1)).map_err(|e| e.to_string())?;
        if count != n as i64 {
            return Err(format!("{t:?}: count_roots_in(-1, 1) = {count}"));
        }
        let ivs = &cert.isolating_intervals;
        if ivs.len() != n {
            return Err(format!("{t:?}: {} intervals", ivs.len()));
        }
        for (a, b) in ivs {
            if !(a < b && b - a <= width && *a >= rat(-1) && *b <= rat(1)) {
                return Err(format!("{t:?}: bad interval ({a}, {b})"));
            }
            if count_roots_in(t, kind, a, b).map_err(|e| e.to_string())? != 1 {
                return Err(format!("{t:?}: interval ({a}, {b}) does not hold one root"));
            }
        }
        if ivs.windows(2).any(|w| w[0].1 > w[1].0) {
            return Err(format!("{t:?}: overlapping intervals"));
        }
        // Q_n(±1) != 0, so the roots are strictly inside (-1, 1).
        let q = match kind {
            FactorKind::Proper => build_q(t),
            FactorKind::Star => build_q_star(t),
        };
        let lift = |x: i64| q.coeffs()[0].lift(rat(x));
        if q.eval(&lift(1)).sign() != 1 || q.eval(&lift(-1)).sign() == 0 {
            return Err(format!("{t:?}: endpoint sign"));
        }
        Ok(())
    }))?;
    Ok(format!(
        "{} triples, V(-1) = n, V(1) = 0, n disjoint intervals of width <= 2^-{ISOLATION_BITS}",
        checked.len()
    ))
}

fn numeric_route(kind: FactorKind) -> Outcome {
    let triples = grid(&PRIMES, N_MAX);
    let worst = first_failure(map_ordered(Exec::Parallel, &triples, |t| {
        let zeros = critical_zeros(t, kind, MODULUS_TOL).map_err(|e| format!("{t:?}: {e}"))?;
        if zeros.len() != 2 * t.n() as usize {
            return Err(format!("{t:?}: {} zeros", zeros.len()));
        }
        let f = factor_poly(t, kind).unwrap().to_f64_coeffs();
        let p = t.p() as f64;
        let mut worst = (0.0f64, 0.0f64);
        for z in &zeros {
            let modulus = (z.u.norm_sqr() * p - 1.0).abs();
            if modulus > MODULUS_TOL {
                return Err(format!("{t:?}: | |u|^2 p - 1 | = {modulus:e}"));
            }
            if z.s_re != 0.5 || !z.certified {
                return Err(format!("{t:?}: Re(s) = {}", z.s_re));
            }
            let residual = eval_complex(&f, z.u_from_s(t.p())).norm();
            if residual > RESIDUAL_TOL {
                return Err(format!("{t:?}: |P(p^-s)| = {residual:e}"));
            }
            worst = (worst.0.max(modulus), worst.1.max(residual));
        }
        Ok(worst)
    }))?;
    let m = worst.iter().map(|w| w.0).fold(0.0, f64::max);
    let r = worst.iter().map(|w| w.1).fold(0.0, f64::max);
    Ok(format!(
        "{} triples, max | |u|^2 p - 1 | = {m:.2e}, max |P(p^-s)| = {r:.2e}",
        worst.len()
    ))
}

fn generating_function() -> Outcome {
    let mut count = 0;
    for p in [2u64, 3, 5] {
        for chi in CHIS {
            let report = genfun_check(p, chi, 20).map_err(|e| e.to_string())?;
            if !report.pass {
                return Err(format!(
                    "p={p} chi={chi}: first failing X-degree {:?}",
                    report.first_failing_degree
                ));
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} (p, chi) pairs, identity exact through X^20"
    ))
}

fn oracle_equality() -> Outcome {
    let cases: Vec<(OrderSpec, bool)> = specs()
        .into_iter()
        .flat_map(|s| [(s.clone(), false), (s, true)])
        .collect();
    let checked = first_failure(
        cases
            .iter()
            .map(|(spec, star)| {
                let r = oracle_compare(spec, ORACLE_LIMIT, *star, Exec::Parallel)
                    .map_err(|e| e.to_string())?;
                match r.first_mismatch {
                    None => Ok(()),
                    Some(k) => Err(format!(
                        "d_K={} f={} star={star}: mismatch at {k}: {:?}",
                        spec.d_k(),
                        spec.f(),
                        r.mismatches().first()
                    )),
                }
            })
            .collect(),
    )?;
    Ok(format!(
        "{} (order, mode) cases equal at every index <= {ORACLE_LIMIT}",
        checked.len()
    ))
}

fn oracle_multiplicativity() -> Outcome {
    let mut count = 0;
    for spec in specs() {
        for proper_only in [true, false] {
            let coeffs = enumerate_ideals(&spec, ORACLE_LIMIT, proper_only, Exec::Parallel);
            if let Some((m, k)) = coeffs.first_non_multiplicative() {
                return Err(format!(
                    "d_K={} f={} proper={proper_only}: a({}) != a({m}) a({k})",
                    spec.d_k(),
                    spec.f(),
                    m * k
                ));
            }
            if coeffs.get(1) != 1 {
                return Err(format!("d_K={} f={}: a(1) != 1", spec.d_k(), spec.f()));
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} enumerations multiplicative on coprime indices <= {ORACLE_LIMIT}"
    ))
}

fn bridge_identity() -> Outcome {
    let triples = grid(&[2, 3, 5, 7], 10);
    let mut rng = StdRng::seed_from_u64(0x5eed_b41d);
    let samples: Vec<Vec<f64>> = triples
        .iter()
        .map(|_| (0..100).map(|_| rng.random_range(0.1..3.0)).collect())
        .collect();
    let indexed: Vec<usize> = (0..triples.len()).collect();
    let worst = first_failure(map_ordered(Exec::Parallel, &indexed, |&i| {
        let t = &triples[i];
        let d = bridge_max_deviation(t, FactorKind::Proper, &samples[i])
            .map_err(|e| format!("{t:?}: {e}"))?;
        if d > BRIDGE_TOL {
            return Err(format!("{t:?}: deviation {d:e}"));
        }
        Ok(d)
    }))?;
    let max = worst.iter().copied().fold(0.0, f64::max);
    Ok(format!(
        "{} triples x 100 samples, max deviation {max:.2e}",
        triples.len()
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Check> = vec![
        (
            "1 degree + functional equation (P_n)",
            Some(5.0),
            Box::new(|| degree_and_funceq(FactorKind::Proper)),
        ),
        (
            "2 Sturm certification (P_n)",
            Some(60.0),
            Box::new(|| sturm_route(FactorKind::Proper)),
        ),
        (
            "3 numeric critical-line check (P_n)",
            Some(30.0),
            Box::new(|| numeric_route(FactorKind::Proper)),
        ),
        (
            "4 all-ideal factor P*_n passes 1-3",
            Some(95.0),
            Box::new(|| {
                let a = degree_and_funceq(FactorKind::Star)?;
                let b = sturm_route(FactorKind::Star)?;
                let c = numeric_route(FactorKind::Star)?;
                Ok(format!("{a}; {b}; {c}"))
            }),
        ),
        (
            "5 generating function",
            Some(5.0),
            Box::new(generating_function),
        ),
        (
            "6 Euler product vs ideal enumeration",
            Some(120.0),
            Box::new(oracle_equality),
        ),
        (
            "7 enumeration multiplicativity",
            None,
            Box::new(oracle_multiplicativity),
        ),
        (
            "8 Chebyshev bridge identity",
            Some(10.0),
            Box::new(bridge_identity),
        ),
    ];

    let mut failures = 0;
    for (name, budget, run) in &criteria {
        let start = Instant::now();
        let mut outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if secs > *limit {
                outcome = Err(format!("correct but over the {limit}s budget"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} [{secs:.2}s]: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  criterion {name} [{secs:.2}s]: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
