//! Fibonacci-like sequences through their recurrences and through closed
//! forms, plus an empirical check of composition/sequence correspondences.
//!
//! Conventions (all indexed from 0):
//!
//! | sequence | recurrence | seeds |
//! |---|---|---|
//! | m-Fibonacci | `F(n) = F(n−1) + ... + F(n−m)` | `0, ..., 0, 1` (m values) |
//! | Lucas | `L(n) = L(n−1) + L(n−2)` | `1, 3` |
//! | Padovan | `P(n) = P(n−2) + P(n−3)` | `0, 1, 0` |
//! | Perrin | `P(n) = P(n−2) + P(n−3)` | `3, 0, 2` |
//! | Pell | `P(n) = 2P(n−1) + P(n−2)` | `0, 1` |
//! | Pell-Lucas | `Q(n) = 2Q(n−1) + Q(n−2)` | `2, 2` |

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::closedforms::kernel2;
use crate::diophantine::{binomial, BezoutTriple};
use crate::lhrc::Lhrc;
use crate::oracle::count_brute;
use crate::serde_util::as_string;
use crate::{Error, PartSet, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Closed,
    Recurrence,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "recurrence" => Ok(Method::Recurrence),
            _ => Err(Error::invalid(format!(
                "unknown method {s:?}, expected closed or recurrence"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    MFibonacci(usize),
    Lucas,
    Padovan,
    Perrin,
    Pell,
    PellLucas,
}

impl Sequence {
    /// Looks a sequence up by its command-line name; `m` is only used (and
    /// required) for `mfib`.
    pub fn from_name(name: &str, m: Option<usize>) -> Result<Sequence> {
        let seq = match name {
            "mfib" => {
                let m = m.ok_or_else(|| Error::invalid("mfib needs --m"))?;
                if m < 2 {
                    return Err(Error::precondition(format!("mfib needs m >= 2, got {m}")));
                }
                Sequence::MFibonacci(m)
            }
            "lucas" => Sequence::Lucas,
            "padovan" => Sequence::Padovan,
            "perrin" => Sequence::Perrin,
            "pell" => Sequence::Pell,
            "pell-lucas" => Sequence::PellLucas,
            _ => {
                return Err(Error::invalid(format!(
                    "unknown sequence {name:?}, expected one of mfib, lucas, padovan, perrin, pell, pell-lucas"
                )))
            }
        };
        Ok(seq)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Sequence::MFibonacci(_) => "mfib",
            Sequence::Lucas => "lucas",
            Sequence::Padovan => "padovan",
            Sequence::Perrin => "perrin",
            Sequence::Pell => "pell",
            Sequence::PellLucas => "pell-lucas",
        }
    }

    pub fn value(&self, n: usize, method: Method) -> Result<BigUint> {
        match *self {
            Sequence::MFibonacci(m) => m_fibonacci(m, n, method),
            Sequence::Lucas => Ok(lucas(n, method)),
            Sequence::Padovan => Ok(padovan(n, method)),
            Sequence::Perrin => Ok(perrin(n, method)),
            Sequence::Pell => Ok(pell(n, method)),
            Sequence::PellLucas => Ok(pell_lucas(n, method)),
        }
    }

    /// The defining recurrence with its seeds.
    pub fn recurrence(&self) -> Lhrc {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let built = match *self {
            Sequence::MFibonacci(m) => {
                let mut seeds = vec![BigInt::zero(); m];
                seeds[m - 1] = BigInt::one();
                Lhrc::new((1..=m).collect(), vec![1; m], seeds)
            }
            Sequence::Lucas => Lhrc::new(vec![1, 2], vec![1, 1], ints(&[1, 3])),
            Sequence::Padovan => Lhrc::new(vec![2, 3], vec![1, 1], ints(&[0, 1, 0])),
            Sequence::Perrin => Lhrc::new(vec![2, 3], vec![1, 1], ints(&[3, 0, 2])),
            Sequence::Pell => Lhrc::new(vec![1, 2], vec![2, 1], ints(&[0, 1])),
            Sequence::PellLucas => Lhrc::new(vec![1, 2], vec![2, 1], ints(&[2, 2])),
        };
        built.expect("sequence recurrences are well formed")
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequence::MFibonacci(m) => write!(f, "mfib(m={m})"),
            other => f.write_str(other.name()),
        }
    }
}

fn nonneg(v: BigInt) -> BigUint {
    v.to_biguint().expect("sequence values are nonnegative")
}

fn by_recurrence(seq: Sequence, n: usize) -> BigUint {
    nonneg(seq.recurrence().eval_dp(n))
}

/// `F(n) = Σ_{t=0}^{⌊(n−1)/2⌋} C(n−1−t, t)`, with `F(0) = 0`.
pub fn fibonacci_binomial(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    (0..=(n - 1) / 2)
        .map(|t| binomial((n - 1 - t) as u64, t as u64))
        .sum()
}

/// The m-step Fibonacci numbers. The closed form rewrites the recurrence as
/// `F(n) = 2F(n−1) − F(n−m−1)` and evaluates its two-term kernel.
pub fn m_fibonacci(m: usize, n: usize, method: Method) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::precondition(format!(
            "m-Fibonacci needs m >= 2, got {m}"
        )));
    }
    if method == Method::Recurrence {
        return Ok(by_recurrence(Sequence::MFibonacci(m), n));
    }
    if n < m - 1 {
        return Ok(BigUint::zero());
    }
    if n <= m {
        return Ok(BigUint::one());
    }
    let mi = m as i64;
    let bz = BezoutTriple { g: 1, r: -mi, s: 1 };
    let f_r = |q: i64| kernel2([1, mi + 1], [2, -1], bz, q - mi);
    let n = n as i64;
    Ok(nonneg(f_r(n) - f_r(n - mi)))
}

pub fn lucas(n: usize, method: Method) -> BigUint {
    match (method, n) {
        (Method::Recurrence, _) => by_recurrence(Sequence::Lucas, n),
        (Method::Closed, 0) => BigUint::one(),
        (Method::Closed, _) => fibonacci_binomial(n - 1) + 3u32 * fibonacci_binomial(n),
    }
}

pub fn padovan(n: usize, method: Method) -> BigUint {
    if method == Method::Recurrence {
        return by_recurrence(Sequence::Padovan, n);
    }
    let top = n as i64 - 1;
    let lo = Integer::div_ceil(&top, &3).max(0);
    let hi = Integer::div_floor(&top, &2);
    (lo..=hi)
        .map(|t| binomial(t as u64, (top - 2 * t) as u64))
        .sum()
}

pub fn perrin(n: usize, method: Method) -> BigUint {
    match (method, n) {
        (Method::Recurrence, _) => by_recurrence(Sequence::Perrin, n),
        (Method::Closed, 0) => BigUint::from(3u32),
        (Method::Closed, 1) => BigUint::zero(),
        (Method::Closed, _) => {
            2u32 * padovan(n - 1, Method::Closed) + 3u32 * padovan(n - 2, Method::Closed)
        }
    }
}

/// The closed form carries a factor `2^(2t−n+1)` whose exponent is
/// nonnegative over the whole range of `t`.
pub fn pell(n: usize, method: Method) -> BigUint {
    if method == Method::Recurrence {
        return by_recurrence(Sequence::Pell, n);
    }
    if n == 0 {
        return BigUint::zero();
    }
    let top = n - 1;
    (top.div_ceil(2)..=top)
        .map(|t| (BigUint::one() << (2 * t - top)) * binomial(t as u64, (top - t) as u64))
        .sum()
}

pub fn pell_lucas(n: usize, method: Method) -> BigUint {
    match (method, n) {
        (Method::Recurrence, _) => by_recurrence(Sequence::PellLucas, n),
        (Method::Closed, 0) => BigUint::from(2u32),
        (Method::Closed, _) => 2u32 * pell(n, Method::Closed) + 2u32 * pell(n - 1, Method::Closed),
    }
}

/// Which seeds a reference sequence starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Padovan `1, 1, 1, 2, 2, 3, ...`, Fibonacci `1, 1, 2, 3, ...`.
    Standard,
    /// Padovan `0, 1, 0, 1, 1, 1, ...`, Fibonacci `0, 1, 1, 2, ...`.
    Alternate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reference {
    Padovan,
    Fibonacci,
}

impl Reference {
    pub fn value(&self, convention: Convention, i: usize) -> BigUint {
        match (self, convention) {
            (Reference::Padovan, Convention::Standard) => padovan(i + 3, Method::Recurrence),
            (Reference::Padovan, Convention::Alternate) => padovan(i, Method::Recurrence),
            (Reference::Fibonacci, Convention::Standard) => fibonacci_binomial(i + 1),
            (Reference::Fibonacci, Convention::Alternate) => fibonacci_binomial(i),
        }
    }
}

/// A claimed correspondence: compositions of `n` into `set` are counted by
/// `reference` at some fixed index shift.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    #[serde(skip)]
    pub id: u8,
    pub description: &'static str,
    pub set: String,
    pub reference: Reference,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    ConfirmedWithShift { convention: Convention, shift: i64 },
    Refuted,
}

/// One compared value: `lhs` counts compositions of `n`, `rhs` is the
/// reference sequence at `n + shift` under `convention`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub n: usize,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigUint,
    pub convention: Convention,
    pub shift: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionVerdict {
    pub claim_id: u8,
    pub claim: Claim,
    #[serde(flatten)]
    pub status: Status,
    pub evidence: Vec<Evidence>,
}

pub const MAX_SHIFT: i64 = 6;

/// Candidate `(convention, shift)` pairs in search order: standard seeds
/// first, then by increasing `|shift|`, negative before positive.
pub fn candidates() -> Vec<(Convention, i64)> {
    let mut shifts = vec![0i64];
    for d in 1..=MAX_SHIFT {
        shifts.push(-d);
        shifts.push(d);
    }
    [Convention::Standard, Convention::Alternate]
        .into_iter()
        .flat_map(|c| shifts.iter().map(move |&d| (c, d)))
        .collect()
}

fn claims(n_max: usize) -> Vec<(Claim, PartSet)> {
    let odd_above_one: Vec<usize> = (3..=n_max.max(3)).step_by(2).collect();
    let table: [(&'static str, PartSet, Reference); 5] = [
        (
            "compositions into 2 and 3",
            PartSet::explicit(vec![2, 3]).unwrap(),
            Reference::Padovan,
        ),
        (
            "compositions with no part equal to 2",
            PartSet::complement_set(vec![2]).unwrap(),
            Reference::Padovan,
        ),
        (
            "compositions into parts congruent to 2 mod 3",
            PartSet::residue(2, 3).unwrap(),
            Reference::Padovan,
        ),
        (
            "compositions into odd parts greater than 1",
            PartSet::explicit(odd_above_one).unwrap(),
            Reference::Padovan,
        ),
        (
            "compositions into odd parts",
            PartSet::residue(1, 2).unwrap(),
            Reference::Fibonacci,
        ),
    ];
    table
        .into_iter()
        .enumerate()
        .map(|(i, (description, set, reference))| {
            let claim = Claim {
                id: i as u8 + 1,
                description,
                set: set.canonical(),
                reference,
            };
            (claim, set)
        })
        .collect()
}

fn compare(
    lhs: &[BigUint],
    reference: Reference,
    convention: Convention,
    shift: i64,
) -> Vec<Evidence> {
    lhs.iter()
        .enumerate()
        .skip(1)
        .filter(|&(n, _)| n as i64 + shift >= 0)
        .map(|(n, l)| Evidence {
            n,
            lhs: l.clone(),
            rhs: reference.value(convention, (n as i64 + shift) as usize),
            convention,
            shift,
        })
        .collect()
}

/// Tests each claim for `1 <= n <= n_max` against every candidate shift.
///
/// A confirmed claim carries all compared triples; a refuted one carries the
/// first counterexample for every candidate.
pub fn verify_bijections(n_max: usize) -> Result<Vec<BijectionVerdict>> {
    if n_max < 10 {
        return Err(Error::precondition(format!(
            "n_max must be at least 10, got {n_max}"
        )));
    }
    let mut verdicts = Vec::new();
    for (claim, set) in claims(n_max) {
        let lhs: Vec<BigUint> = (0..=n_max).map(|n| count_brute(&set, n)).collect();
        let mut counterexamples = Vec::new();
        let mut confirmed = None;
        for (convention, shift) in candidates() {
            let rows = compare(&lhs, claim.reference, convention, shift);
            match rows.iter().find(|e| e.lhs != e.rhs) {
                Some(bad) => counterexamples.push(bad.clone()),
                None => {
                    confirmed = Some((Status::ConfirmedWithShift { convention, shift }, rows));
                    break;
                }
            }
        }
        let (status, evidence) = confirmed.unwrap_or((Status::Refuted, counterexamples));
        verdicts.push(BijectionVerdict {
            claim_id: claim.id,
            claim,
            status,
            evidence,
        });
    }
    Ok(verdicts)
}

/// Checks that a verdict is backed by its own evidence: a confirmation needs
/// equal triples for every tested `n` at its shift, a refutation needs a
/// differing triple for every candidate. Each triple's `rhs` is recomputed.
pub fn verdict_is_consistent(v: &BijectionVerdict, n_max: usize) -> bool {
    let honest = v.evidence.iter().all(|e| {
        v.claim
            .reference
            .value(e.convention, (e.n as i64 + e.shift) as usize)
            == e.rhs
    });
    if !honest {
        return false;
    }
    match v.status {
        Status::ConfirmedWithShift { convention, shift } => {
            let expected: Vec<usize> = (1..=n_max).filter(|&n| n as i64 + shift >= 0).collect();
            let seen: Vec<usize> = v.evidence.iter().map(|e| e.n).collect();
            seen == expected
                && v.evidence
                    .iter()
                    .all(|e| e.lhs == e.rhs && e.convention == convention && e.shift == shift)
        }
        Status::Refuted => candidates().into_iter().all(|(c, d)| {
            v.evidence
                .iter()
                .any(|e| e.convention == c && e.shift == d && e.lhs != e.rhs)
        }),
    }
}
