//! Recurrences whose solution is `R(S,n)`.
//!
//! The first interpreter sums over every usable part. The second one groups
//! compositions by whether their first part extends a composition of `n−1`
//! (bumping its first part by one) or starts fresh, so its terms only sit at
//! the boundaries of the runs of consecutive integers in `S`. Sets made of a
//! few long runs therefore get short second interpreters.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::lhrc::Lhrc;
use crate::oracle::count_table;
use crate::{Error, PartSet, Result};

/// `f(n) = Σ_{s ∈ S≤n} f(n−s)` with seeds `f(0..max S≤n)`.
pub fn first_interpreter(s: &PartSet, n: usize) -> Result<Lhrc> {
    let parts = s
        .materialize(n)
        .ok_or_else(|| Error::unsupported(format!("{s} has no parts up to {n}")))?;
    let top = parts.max();
    // seeds: f(0) = 1, then the same sum applied in increasing order
    let mut seeds: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 1..top {
        let value = parts
            .iter()
            .take_while(|&p| p <= m)
            .map(|p| seeds[m - p].clone())
            .sum();
        seeds.push(value);
    }
    let coeffs = vec![1; parts.len()];
    Lhrc::new(parts.into_vec(), coeffs, seeds)
}

/// The unmerged terms of the second interpreter: `(1, +1)` for the shifted
/// copy of `R(S,n−1)`, `(s, −1)` when `s−1 ∈ S≤n` but `s ∉ S`, and `(s, +1)`
/// when `s ∈ S≤n` but `s−1 ∉ S`.
pub fn second_interpreter_terms(s: &PartSet, n: usize) -> Result<Vec<(usize, i64)>> {
    if second_is_unbounded(s) {
        return Err(Error::unsupported(format!(
            "the second interpreter of {s} has a number of terms that grows with n"
        )));
    }
    let mut terms = vec![(1usize, 1i64)];
    for o in 1..=n + 1 {
        if o >= 2 && s.contains(o - 1, n) && !s.denotes(o) {
            terms.push((o, -1));
        }
        if s.contains(o, n) && (o == 1 || !s.denotes(o - 1)) {
            terms.push((o, 1));
        }
    }
    Ok(terms)
}

fn second_is_unbounded(s: &PartSet) -> bool {
    matches!(s, PartSet::Residue { m, .. } if *m >= 2)
}

fn merge_terms(terms: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut merged: Vec<(usize, i64)> = Vec::new();
    let mut sorted = terms.to_vec();
    sorted.sort_unstable();
    for (o, k) in sorted {
        match merged.last_mut() {
            Some(last) if last.0 == o => last.1 += k,
            _ => merged.push((o, k)),
        }
    }
    merged.retain(|&(_, k)| k != 0);
    merged
}

/// The second interpreter with equal offsets merged and seeds taken from
/// the oracle.
///
/// The relation only holds from `n = 2` on, so an interpreter with a single
/// seed (largest offset 1) would be applied at `n = 1` where it is wrong.
/// That happens when `S≤n` is empty or `S` contains all of `[1:n+1]`, and is
/// reported as unsupported.
pub fn second_interpreter(s: &PartSet, n: usize) -> Result<Lhrc> {
    if n < 2 {
        return Err(Error::precondition(format!(
            "the second interpreter needs n > 1, got {n}"
        )));
    }
    let merged = merge_terms(&second_interpreter_terms(s, n)?);
    let order = merged.last().map_or(0, |&(o, _)| o);
    if order < 2 {
        return Err(Error::unsupported(format!(
            "the second interpreter of {s} at n = {n} has a single seed and cannot start at n = 1"
        )));
    }
    let seeds = count_table(s, order - 1)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let (offsets, coeffs) = merged.into_iter().unzip();
    Lhrc::new(offsets, coeffs, seeds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    First,
    Second,
}

/// A term count that may not exist as a finite number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermCount {
    Finite(usize),
    Unbounded,
}

impl fmt::Display for TermCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermCount::Finite(t) => write!(f, "{t}"),
            TermCount::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for TermCount {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TermCount::Finite(t) => ser.serialize_u64(*t as u64),
            TermCount::Unbounded => ser.serialize_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct InterpreterChoice {
    pub which: Which,
    pub t1: usize,
    pub t2: TermCount,
    pub rec: Lhrc,
}

/// `T2 = |S'|` where `S' = {1} ∪ {s : s−1 ∈ S≤n, s ∉ S} ∪ {s ∈ S≤n : s−1 ∉ S}`.
pub fn second_term_count(s: &PartSet, n: usize) -> TermCount {
    match second_interpreter_terms(s, n) {
        Ok(terms) => {
            let mut offsets: Vec<usize> = terms.into_iter().map(|(o, _)| o).collect();
            offsets.sort_unstable();
            offsets.dedup();
            TermCount::Finite(offsets.len())
        }
        Err(_) => TermCount::Unbounded,
    }
}

pub fn first_term_count(s: &PartSet, n: usize) -> usize {
    s.materialize(n).map_or(0, |v| v.len())
}

/// Picks the interpreter with fewer terms; ties and an unusable second
/// interpreter go to the first.
pub fn choose(s: &PartSet, n: usize) -> Result<InterpreterChoice> {
    let t1 = first_term_count(s, n);
    let t2 = second_term_count(s, n);
    let first = || first_interpreter(s, n);
    if let TermCount::Finite(t2v) = t2 {
        if t1 > t2v {
            if let Ok(rec) = second_interpreter(s, n) {
                return Ok(InterpreterChoice {
                    which: Which::Second,
                    t1,
                    t2,
                    rec,
                });
            }
        }
    }
    Ok(InterpreterChoice {
        which: Which::First,
        t1,
        t2,
        rec: first()?,
    })
}
