//! Benchmark scenarios.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use hbn::{
    add, best_case, cmp, exp2, from_natural, from_u64, left_shift, measure_succ_cost, mul, pred,
    sub, succ, to_natural, to_u64, tsize, HbnError, Natural, DEFAULT_BIT_BUDGET,
};
use num_bigint::RandBigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Scenario {
    SuccAvg,
    TowerAdd,
    TowerMul,
    VsOracle,
}

const SUCC_AVG_DEFAULT: u64 = 1 << 20;
const TOWER_ADD_DEFAULT: u64 = 20;
const TOWER_MUL_DEFAULT: u64 = 30;
const VS_ORACLE_DEFAULT_BITS: u64 = 1024;
const REPS: usize = 5;

/// Runs a scenario. A scale of zero selects the scenario's default.
pub fn run(scenario: Scenario, scale: &Natural, seed: u64) -> Result<String, CliError> {
    let scale = u64::try_from(scale).map_err(|_| {
        CliError::Resource(HbnError::Resource {
            op: "bench",
            detail: format!("scale {scale}"),
            budget: u64::MAX,
        })
    })?;
    let pick = |default| if scale == 0 { default } else { scale };
    match scenario {
        Scenario::SuccAvg => succ_avg(pick(SUCC_AVG_DEFAULT)),
        Scenario::TowerAdd => tower(pick(TOWER_ADD_DEFAULT), false),
        Scenario::TowerMul => tower(pick(TOWER_MUL_DEFAULT), true),
        Scenario::VsOracle => vs_oracle(pick(VS_ORACLE_DEFAULT_BITS), seed),
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn succ_avg(n: u64) -> Result<String, CliError> {
    let t = Instant::now();
    let stats = measure_succ_cost(n)?;
    let wall = t.elapsed();
    Ok(format!(
        "scenario: succ_avg\nrange: 0..{n}\noperations: {}\nsucc_calls: {}\npred_calls: {}\naverage: {:.4}\nwall_ms: {:.1}",
        stats.operations,
        stats.succ_calls,
        stats.pred_calls,
        stats.average(),
        ms(wall)
    ))
}

/// `best(k) + best(k+10)`, or `(best(k)+1) * (best(k+10)+1)`.
fn tower(k: u64, product: bool) -> Result<String, CliError> {
    let t = Instant::now();
    let a = best_case(&from_u64(k))?;
    let b = best_case(&from_u64(k + 10))?;
    let (label, r) = if product {
        (
            format!("(best({k})+1) * (best({})+1)", k + 10),
            mul(&succ(&a), &succ(&b)),
        )
    } else {
        (format!("best({k}) + best({})", k + 10), add(&a, &b))
    };
    let size = tsize(&r);
    let wall = t.elapsed();
    let name = if product { "tower_mul" } else { "tower_add" };
    Ok(format!(
        "scenario: {name}\nexpr: {label}\ntsize: {}\nwall_ms: {:.1}",
        hbn::describe(&size),
        ms(wall)
    ))
}

/// Median over [`REPS`] runs.
fn time<T>(mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut times = Vec::with_capacity(REPS);
    let mut out = None;
    for _ in 0..REPS {
        let t = Instant::now();
        out = Some(f());
        times.push(t.elapsed());
    }
    times.sort();
    (out.expect("at least one rep"), times[REPS / 2])
}

fn vs_oracle(bits: u64, seed: u64) -> Result<String, CliError> {
    if bits > DEFAULT_BIT_BUDGET {
        return Err(CliError::Resource(HbnError::Resource {
            op: "vs_oracle",
            detail: format!("operand width {bits}"),
            budget: DEFAULT_BIT_BUDGET,
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dense = (rng.gen_biguint(bits), rng.gen_biguint(bits));
    // 2^bits - 1 and 3 * 2^(bits/2): a couple of blocks each
    let sparse_x = pred(&exp2(&from_u64(bits)))?;
    let sparse_y = left_shift(&from_u64(bits / 2), &from_u64(3));
    let sparse = (to_natural(&sparse_x)?, to_natural(&sparse_y)?);

    let mut out = format!(
        "scenario: vs_oracle\nbits: {bits}\nseed: {seed}\n{:<8}{:<6}{:>14}{:>14}  agree\n",
        "shape", "op", "hbn_us", "natural_us"
    );
    for (shape, (a, b)) in [("dense", dense), ("sparse", sparse)] {
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        let (x, y) = (from_natural(&a), from_natural(&b));
        for op in ["add", "sub", "mul", "cmp"] {
            let (h, th) = time(|| match op {
                "add" => add(&x, &y),
                "sub" => sub(&x, &y).expect("x >= y"),
                "mul" => mul(&x, &y),
                _ => from_u64(cmp(&x, &y) as i8 as u8 as u64),
            });
            let (n, tn) = time(|| match op {
                "add" => &a + &b,
                "sub" => &a - &b,
                "mul" => &a * &b,
                _ => Natural::from(a.cmp(&b) as i8 as u8),
            });
            let agree = if op == "cmp" {
                to_u64(&h) == u64::try_from(&n).ok()
            } else {
                to_natural(&h)? == n
            };
            let _ = writeln!(
                out,
                "{shape:<8}{op:<6}{:>14.1}{:>14.1}  {}",
                th.as_secs_f64() * 1e6,
                tn.as_secs_f64() * 1e6,
                if agree { "yes" } else { "NO" }
            );
        }
    }
    Ok(out.trim_end().to_string())
}
