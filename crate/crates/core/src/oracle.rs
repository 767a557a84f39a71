//! Ground truth: explicit enumeration of restricted compositions, a memoized
//! counting recursion, and the two set-building procedures that relate
//! compositions of neighbouring integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, PartSet, Result};

/// Enumeration refuses to materialize more compositions than this by default.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// An ordered tuple of positive parts. The empty tuple is the only
/// composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("composition parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// The composition with its first part removed.
    pub fn tail(&self) -> Composition {
        Composition(self.0.iter().skip(1).copied().collect())
    }

    /// `a;c`: the composition with `a` prepended.
    pub fn prepend(&self, a: usize) -> Composition {
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(a);
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts).expect("composition parts must be positive")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All compositions of `n` with parts in `S≤n`, in lexicographic order.
pub fn enumerate(s: &PartSet, n: usize) -> Result<Vec<Composition>> {
    enumerate_with_ceiling(s, n, DEFAULT_CEILING)
}

pub fn enumerate_with_ceiling(s: &PartSet, n: usize, ceiling: u64) -> Result<Vec<Composition>> {
    let total = count_brute(s, n);
    if total > BigUint::from(ceiling) {
        return Err(Error::CeilingExceeded {
            count: total.to_string(),
            ceiling,
        });
    }
    let parts = s.materialize(n).map(|v| v.into_vec()).unwrap_or_default();
    let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
    let mut prefix = Vec::new();
    extend(&parts, n, &mut prefix, &mut out);
    Ok(out)
}

fn extend(parts: &[usize], remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(prefix.clone()));
        return;
    }
    for &p in parts.iter().take_while(|&&p| p <= remaining) {
        prefix.push(p);
        extend(parts, remaining - p, prefix, out);
        prefix.pop();
    }
}

/// `|R(S,n)|` by the counting recursion on the remaining sum.
pub fn count_brute(s: &PartSet, n: usize) -> BigUint {
    count_table(s, n).pop().expect("table has n+1 entries")
}

/// `[R(S,0), ..., R(S,n)]` computed with the parts of `S≤n`.
pub fn count_table(s: &PartSet, n: usize) -> Vec<BigUint> {
    let parts = s.materialize(n).map(|v| v.into_vec()).unwrap_or_default();
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for m in 1..=n {
        let mut total = BigUint::zero();
        for &p in parts.iter().take_while(|&&p| p <= m) {
            total += &table[m - p];
        }
        table.push(total);
    }
    table
}

/// Builds `R(S,i)` from lower levels: compositions whose first part `s` has
/// `s−1 ∈ S` come from bumping the first part of a composition of `i−1`;
/// the rest are `s;c` for `c` a composition of `i−s`.
///
/// `prior` must hold `R(S,i−s)` for every `s ∈ S≤i` with `s−1 ∉ S`, and
/// `R(S,i−1)` whenever some `s ∈ S≤i` has `s−1 ∈ S`.
pub fn build_next_level(
    s: &PartSet,
    i: usize,
    prior: &BTreeMap<usize, BTreeSet<Composition>>,
) -> Result<BTreeSet<Composition>> {
    if i == 0 {
        return Err(Error::precondition("level must be positive"));
    }
    let level = |j: usize| {
        prior
            .get(&j)
            .ok_or_else(|| Error::precondition(format!("missing prior level R(S,{j})")))
    };
    let parts = s.materialize(i).map(|v| v.into_vec()).unwrap_or_default();
    let mut out = BTreeSet::new();

    let bumps_needed = parts.iter().any(|&p| p >= 2 && s.denotes(p - 1));
    if i != 1 && bumps_needed {
        for c in level(i - 1)? {
            if let Some(first) = c.first() {
                if s.denotes(first + 1) {
                    out.insert(c.tail().prepend(first + 1));
                }
            }
        }
    }
    for &p in &parts {
        if p == 1 || !s.denotes(p - 1) {
            for c in level(i - p)? {
                out.insert(c.prepend(p));
            }
        }
    }
    Ok(out)
}

fn finite_members(s: &PartSet, n: usize) -> Result<Vec<usize>> {
    if !s.is_finite() {
        return Err(Error::unsupported(format!(
            "window generation needs a finite part set, got {s}"
        )));
    }
    // complements live inside [1:n]; the other finite sets stand on their own
    let bound = match s {
        PartSet::ComplementSet(_) | PartSet::ComplementRange { .. } => n,
        _ => usize::MAX,
    };
    let members = s
        .materialize(bound)
        .ok_or_else(|| Error::precondition(format!("{s} has no parts up to {n}")))?
        .into_vec();
    let max = *members.last().expect("non-empty");
    if n < max {
        return Err(Error::precondition(format!(
            "n = {n} is below max(S) = {max}"
        )));
    }
    Ok(members)
}

/// `⋃ R(S,i)` for `i ∈ [n−(max S−1) : n]`, grown from singletons by
/// repeatedly prepending parts. Tuples already inside the window keep
/// growing as long as a further part still fits under `n`.
pub fn window_generate(s: &PartSet, n: usize) -> Result<BTreeSet<Composition>> {
    let members = finite_members(s, n)?;
    let (min, max) = (members[0], *members.last().unwrap());
    let low = n + 1 - max;

    let mut queue: Vec<(Composition, usize)> =
        members.iter().map(|&p| (Composition(vec![p]), p)).collect();
    let mut out = BTreeSet::new();
    for _ in 0..n / min {
        let mut next = Vec::new();
        for (q, sum) in queue {
            if sum >= low {
                out.insert(q.clone());
            }
            for &p in members.iter().take_while(|&&p| sum + p <= n) {
                next.push((q.prepend(p), sum + p));
            }
        }
        queue = next;
    }
    Ok(out)
}

/// The queue procedure taken literally: a tuple whose sum has reached the
/// window is collected and never extended. The result is the set of window
/// compositions `c` with `σ(c) − first(c) <= n − max S`, which is exactly the
/// family of terms that stop expanding when a recurrence with offsets `S` is
/// unrolled down to its seed values.
pub fn window_frontier(s: &PartSet, n: usize) -> Result<BTreeSet<Composition>> {
    let members = finite_members(s, n)?;
    let (min, max) = (members[0], *members.last().unwrap());
    let low = n + 1 - max;

    let mut queue: BTreeSet<Composition> = members.iter().map(|&p| Composition(vec![p])).collect();
    let mut out = BTreeSet::new();
    for _ in 0..n / min {
        let mut next = BTreeSet::new();
        for q in queue {
            if q.sum() >= low {
                out.insert(q.clone());
                next.insert(q);
            } else {
                for &p in &members {
                    next.insert(q.prepend(p));
                }
            }
        }
        queue = next;
    }
    Ok(out)
}
