//! Closed-form counts for classical families of part sets.
//!
//! Every formula here is a specialization of the two- and three-term closed
//! forms in [`crate::lhrc`] to a particular interpreter and its seeds, with
//! the resolvent kernel written through an explicit Bezout parametrization.
//! Small `n` (below the largest offset) is answered from the seeds directly.
//!
//! A few displayed versions of these formulas in circulation need a
//! corrected reading to agree with enumeration; the readings implemented
//! here are:
//!
//! * two-variable family: the first component moves by `a2/g` per step;
//! * three-term kernel: the inner two-variable family solves the residual
//!   after removing `a3·x3`, not the full right-hand side;
//! * two-part sets: seed `i < a2` is 1 exactly when `a1` divides `i`;
//! * parts avoiding `[m1:m2]`: offsets are `[1, m1, m2+1]`, and the terms
//!   coming from the `−1` coefficient at `m1` are all subtracted, starting at
//!   seed index `m2−m1+1`;
//! * parts `>= 2`: the binomial sum runs over compositions of `n−2` into
//!   `{1,2}`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diophantine::{binomial, multinomial, power_product, two_var_family_with, BezoutTriple};
use crate::{Error, PartSet, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    TwoPart { a1: usize, a2: usize },
    Residue { r: usize, m: usize },
    UpToM { m: usize },
    FromM { m: usize },
    WithoutM { m: usize },
    WithoutRange { m1: usize, m2: usize },
}

impl Family {
    /// The family a part set belongs to, if any.
    pub fn detect(s: &PartSet) -> Option<Family> {
        match *s {
            PartSet::Explicit(ref v) if v.len() == 2 => {
                Some(Family::TwoPart { a1: v[0], a2: v[1] })
            }
            PartSet::Range { lo: 1, hi: Some(m) } => Some(Family::UpToM { m }),
            PartSet::Range { lo, hi: None } => Some(Family::FromM { m: lo }),
            PartSet::Residue { r, m } => Some(Family::Residue { r, m }),
            PartSet::ComplementSet(ref v) if v.len() == 1 => Some(Family::WithoutM { m: v[0] }),
            PartSet::ComplementRange { m1, m2 } => Some(Family::WithoutRange { m1, m2 }),
            _ => None,
        }
    }

    pub fn count(&self, n: usize) -> Result<BigUint> {
        match *self {
            Family::TwoPart { a1, a2 } => count_two_part(a1, a2, n),
            Family::Residue { r, m } => count_residue(r, m, n),
            Family::UpToM { m } => count_up_to_m(m, n),
            Family::FromM { m } => count_from_m(m, n),
            Family::WithoutM { m } => count_without_m(m, n),
            Family::WithoutRange { m1, m2 } => count_without_range(m1, m2, n),
        }
    }
}

/// A family count together with its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCount {
    pub family: Family,
    pub n: usize,
    pub count: BigUint,
}

pub fn family_count(s: &PartSet, n: usize) -> Result<FamilyCount> {
    let family = Family::detect(s)
        .ok_or_else(|| Error::unsupported(format!("no closed form is known for {s}")))?;
    Ok(FamilyCount {
        family,
        n,
        count: family.count(n)?,
    })
}

/// Kernel of a two-variable resolvent `a1·x1 + a2·x2 = q'`, summed over the
/// family given by the Bezout pair `(r, s)`.
pub(crate) fn kernel2(a: [i64; 2], k: [i64; 2], bz: BezoutTriple, q_prime: i64) -> BigInt {
    let fam = two_var_family_with(a[0] as u64, a[1] as u64, q_prime, bz)
        .expect("families are only built for valid parameters");
    let total: BigInt = fam
        .solutions()
        .map(|x| power_product(&k, x.as_slice()).unwrap() * BigInt::from(multinomial(x.as_slice())))
        .sum();
    total
}

/// Kernel of a three-variable resolvent, iterating `x3` and solving the
/// residual with a two-variable family.
fn kernel3(a: [i64; 3], k: [i64; 3], bz: BezoutTriple, q_prime: i64) -> BigInt {
    if q_prime < 0 {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for x3 in 0..=q_prime / a[2] {
        let residual = q_prime - a[2] * x3;
        let fam = two_var_family_with(a[0] as u64, a[1] as u64, residual, bz)
            .expect("families are only built for valid parameters");
        for x in fam.solutions() {
            let x = [x.0[0], x.0[1], x3 as u64];
            total += power_product(&k, &x).unwrap() * BigInt::from(multinomial(&x));
        }
    }
    total
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn to_count(v: BigInt) -> BigUint {
    assert!(
        !v.is_negative(),
        "closed form produced a negative count: {v}"
    );
    v.to_biguint().expect("nonnegative")
}

fn all_compositions(n: usize) -> BigUint {
    if n == 0 {
        BigUint::one()
    } else {
        BigUint::one() << (n - 1)
    }
}

/// Compositions of `n` into the two parts `a1 < a2`.
pub fn count_two_part(a1: usize, a2: usize, n: usize) -> Result<BigUint> {
    if a1 == 0 || a1 >= a2 {
        return Err(Error::precondition(format!(
            "two-part count needs 1 <= a1 < a2, got {a1}, {a2}"
        )));
    }
    if n < a2 {
        return Ok(BigUint::from(u8::from(n.is_multiple_of(a1))));
    }
    let bz = crate::diophantine::bezout(a1 as u64, a2 as u64);
    let (a1i, a2i) = (a1 as i64, a2 as i64);
    let f_r = |q: i64| kernel2([a1i, a2i], [1, 1], bz, q - (a2i - a1i));
    let n = n as i64;
    let split = Integer::div_floor(&(a2i - a1i - 1), &a1i);
    let top = Integer::div_floor(&(a2i - 1), &a1i);
    let mut total = BigInt::zero();
    for h in 0..=split {
        total += f_r(n - a1i * (h + 1));
    }
    for h in (split + 1)..=top {
        total += f_r(n - a1i * (h + 1) + a2i);
    }
    Ok(to_count(total))
}

/// Compositions of `n` into parts congruent to `r` modulo `m`.
pub fn count_residue(r: usize, m: usize, n: usize) -> Result<BigUint> {
    if r == 0 || r > m {
        return Err(Error::precondition(format!(
            "residue count needs 1 <= r <= m, got r={r}, m={m}"
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    if r == m {
        // multiples of m: compositions of n/m scaled by m
        return Ok(if n.is_multiple_of(m) {
            all_compositions(n / m)
        } else {
            BigUint::zero()
        });
    }
    if n < r {
        return Ok(BigUint::zero());
    }
    count_two_part(r, m, n - r)
}

/// Compositions of `n` into parts at most `m`, through the interpreter
/// `f(n) = 2f(n−1) − f(n−m−1)`.
pub fn count_up_to_m(m: usize, n: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::precondition("m must be at least 1"));
    }
    if n < m {
        return Ok(all_compositions(n));
    }
    let mi = m as i64;
    let bz = BezoutTriple { g: 1, r: -mi, s: 1 };
    let f_r = |q: i64| kernel2([1, mi + 1], [2, -1], bz, q - mi);
    let n = n as i64;
    let mut total = pow2(m - 1) * f_r(n) - f_r(n - 1);
    for i in 1..m {
        total -= pow2(i - 1) * f_r(n - i as i64 - 1);
    }
    Ok(to_count(total))
}

/// Compositions of `n` into parts at least `m`, which are the compositions
/// of `n−m` into `{1, m}` shifted by one leading part.
pub fn count_from_m(m: usize, n: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::precondition("m must be at least 1"));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    if m == 1 {
        return Ok(all_compositions(n));
    }
    if n < m {
        return Ok(BigUint::zero());
    }
    if n < 2 * m {
        return Ok(BigUint::one());
    }
    let mi = m as i64;
    let bz = BezoutTriple {
        g: 1,
        r: -(mi - 1),
        s: 1,
    };
    let f_r = |q: i64| kernel2([1, mi], [1, 1], bz, q - (mi - 1));
    let rest = (n - m) as i64;
    let mut total = f_r(rest);
    for i in 0..=(mi - 2) {
        total += f_r(rest - i - 1);
    }
    Ok(to_count(total))
}

/// Compositions of `n` with no part equal to `m`.
pub fn count_without_m(m: usize, n: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::precondition("m must be at least 1"));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    if m == 1 {
        return Ok(parts_at_least_two(n));
    }
    if n < m {
        return Ok(all_compositions(n));
    }
    if n == m {
        return Ok(all_compositions(n) - 1u32);
    }
    let mi = m as i64;
    let bz = BezoutTriple {
        g: 1,
        r: -(mi - 1),
        s: 1,
    };
    let f_r = |q: i64| kernel3([1, mi, mi + 1], [2, -1, 1], bz, q - mi);
    let n = n as i64;
    let mut total = (pow2(m - 1) - 1) * f_r(n) + pow2(m - 2) * f_r(n - mi);
    for i in 2..m {
        total -= pow2(i - 2) * f_r(n - i as i64);
    }
    Ok(to_count(total))
}

/// `Σ_{t=⌈(n−2)/2⌉}^{n−2} C(t, n−2−t)`, the compositions of `n−2` into
/// `{1,2}`, valid for `n >= 2`.
fn parts_at_least_two(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::from(u8::from(n == 0));
    }
    let top = n - 2;
    (top.div_ceil(2)..=top)
        .map(|t| binomial(t as u64, (top - t) as u64))
        .sum()
}

/// Compositions of `n` with no part in `[m1:m2]`.
pub fn count_without_range(m1: usize, m2: usize, n: usize) -> Result<BigUint> {
    if m1 == 0 || m2 < m1 {
        return Err(Error::precondition(format!(
            "excluded range needs 1 <= m1 <= m2, got {m1}..{m2}"
        )));
    }
    if m1 == m2 {
        return count_without_m(m1, n);
    }
    if m1 == 1 {
        return count_from_m(m2 + 1, n);
    }
    // seeds: below m2+1 only parts < m1 are usable
    let seed = |i: usize| count_up_to_m(m1 - 1, i).map(BigInt::from);
    if n <= m2 {
        return Ok(to_count(seed(n)?));
    }
    let (m1i, m2i) = (m1 as i64, m2 as i64);
    let bz = BezoutTriple {
        g: 1,
        r: -(m1i - 1),
        s: 1,
    };
    let f_r = |q: i64| kernel3([1, m1i, m2i + 1], [2, -1, 1], bz, q - m2i);
    let n = n as i64;
    let mut total = seed(m2)? * f_r(n);
    for i in 0..m2 {
        total += seed(i)? * f_r(n - i as i64 - 1);
    }
    for i in (m2 - m1 + 1)..m2 {
        total -= seed(i)? * f_r(n - i as i64 - m1i + m2i);
    }
    Ok(to_count(total))
}
