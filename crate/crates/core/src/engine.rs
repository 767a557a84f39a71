//! Dispatch between the counting routes and exact cross-checking.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedforms::Family;
use crate::diophantine::direct_count;
use crate::interpreters::{choose, first_interpreter, second_interpreter};
use crate::oracle::count_brute;
use crate::serde_util::as_string;
use crate::{Error, PartSet, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Brute,
    Dio,
    Dp1,
    Dp2,
    Closed,
    Auto,
}

impl Engine {
    pub const ALL: [Engine; 6] = [
        Engine::Brute,
        Engine::Dio,
        Engine::Dp1,
        Engine::Dp2,
        Engine::Closed,
        Engine::Auto,
    ];

    /// The engines compared by default: every concrete route.
    pub const CONCRETE: [Engine; 5] = [
        Engine::Brute,
        Engine::Dio,
        Engine::Dp1,
        Engine::Dp2,
        Engine::Closed,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Dio => "dio",
            Engine::Dp1 => "dp1",
            Engine::Dp2 => "dp2",
            Engine::Closed => "closed",
            Engine::Auto => "auto",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown engine {s:?}, expected one of brute, dio, dp1, dp2, closed, auto"
                ))
            })
    }
}

/// Sets with at most this many usable parts are handed to `dio` by `auto`.
pub const DIO_MAX_PARTS: usize = 8;

/// Counts with the requested engine and reports the engine that actually
/// ran (never `auto`).
pub fn count(s: &PartSet, n: usize, engine: Engine) -> Result<(Engine, BigUint)> {
    let value = match engine {
        Engine::Brute => count_brute(s, n),
        Engine::Dio => direct_count(s, n)?,
        Engine::Dp1 => dp1(s, n)?,
        Engine::Dp2 => dp2(s, n)?,
        Engine::Closed => closed(s, n)?,
        Engine::Auto => return auto(s, n),
    };
    Ok((engine, value))
}

fn to_count(v: BigInt) -> Result<BigUint> {
    v.to_biguint()
        .ok_or_else(|| Error::invalid(format!("recurrence produced a negative count {v}")))
}

fn dp1(s: &PartSet, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    if s.materialize(n).is_none() {
        return Ok(BigUint::default());
    }
    to_count(first_interpreter(s, n)?.eval_dp(n))
}

fn dp2(s: &PartSet, n: usize) -> Result<BigUint> {
    match n {
        0 => Ok(BigUint::one()),
        1 => Ok(BigUint::from(u8::from(s.contains(1, 1)))),
        _ => to_count(second_interpreter(s, n)?.eval_dp(n)),
    }
}

fn closed(s: &PartSet, n: usize) -> Result<BigUint> {
    let family = Family::detect(s)
        .ok_or_else(|| Error::unsupported(format!("no closed form is known for {s}")))?;
    family.count(n)
}

fn auto(s: &PartSet, n: usize) -> Result<(Engine, BigUint)> {
    if Family::detect(s).is_some() {
        return Ok((Engine::Closed, closed(s, n)?));
    }
    if let Ok(choice) = choose(s, n) {
        let which = match choice.which {
            crate::interpreters::Which::First => Engine::Dp1,
            crate::interpreters::Which::Second => Engine::Dp2,
        };
        return Ok((which, to_count(choice.rec.eval_dp(n))?));
    }
    let small = s.materialize(n).map_or(0, |v| v.len()) <= DIO_MAX_PARTS;
    if s.is_finite() && small {
        return Ok((Engine::Dio, direct_count(s, n)?));
    }
    Ok((Engine::Brute, count_brute(s, n)))
}

/// A value that disagreed with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub engine: Engine,
    #[serde(serialize_with = "as_string")]
    pub value: BigUint,
    #[serde(serialize_with = "as_string")]
    pub expected: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub set_spec: String,
    pub n_range: [usize; 2],
    pub engines_compared: Vec<Engine>,
    pub mismatches: Vec<Mismatch>,
    pub verdict: Verdict,
    /// Oracle counts for `n = 0..=max_n`.
    pub counts: Vec<String>,
}

/// Runs every engine on every `n <= max_n` and compares with the oracle.
/// Engine/`n` pairs an engine does not support are skipped; any other error
/// is returned.
pub fn crosscheck(s: &PartSet, max_n: usize, engines: &[Engine]) -> Result<CrosscheckReport> {
    let mut engines = engines.to_vec();
    engines.sort();
    engines.dedup();
    let expected: Vec<BigUint> = (0..=max_n).map(|n| count_brute(s, n)).collect();
    let jobs: Vec<(usize, Engine)> = (0..=max_n)
        .flat_map(|n| engines.iter().map(move |&e| (n, e)))
        .collect();
    let results: Vec<Result<Option<Mismatch>>> = jobs
        .par_iter()
        .map(|&(n, engine)| match count(s, n, engine) {
            Ok((_, value)) if value == expected[n] => Ok(None),
            Ok((_, value)) => Ok(Some(Mismatch {
                n,
                engine,
                value,
                expected: expected[n].clone(),
            })),
            Err(Error::Unsupported(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in results {
        mismatches.extend(r?);
    }
    mismatches.sort_by(|a, b| (a.n, a.engine.name()).cmp(&(b.n, b.engine.name())));
    let verdict = if mismatches.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CrosscheckReport {
        set_spec: s.canonical(),
        n_range: [0, max_n],
        engines_compared: engines,
        mismatches,
        verdict,
        counts: expected.iter().map(|c| c.to_string()).collect(),
    })
}
