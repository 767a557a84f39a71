//! Linear Diophantine equations `a·x = q` with `x >= 0`.
//!
//! Counting compositions reduces to these equations: a solution `x` says how
//! many times each allowed part occurs, and the multinomial `C(x)` counts the
//! orderings of that multiset of parts.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, PartSet, PartVector, Result};

/// `g = gcd(a1, a2) = r·a1 + s·a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutTriple {
    pub g: i64,
    pub r: i64,
    pub s: i64,
}

/// Extended Euclid. Any valid `(r, s)` pair is acceptable to callers; this
/// returns the one the recursive algorithm produces.
pub fn bezout(a1: u64, a2: u64) -> BezoutTriple {
    fn ext(a: i64, b: i64) -> (i64, i64, i64) {
        if b == 0 {
            (a, 1, 0)
        } else {
            let (g, x, y) = ext(b, a % b);
            (g, y, x - (a / b) * y)
        }
    }
    let (g, r, s) = ext(a1 as i64, a2 as i64);
    BezoutTriple { g, r, s }
}

/// A nonnegative solution of `a·x = q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionVector(pub Vec<u64>);

impl SolutionVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn dot(&self, a: &[usize]) -> u64 {
        self.0.iter().zip(a).map(|(&x, &a)| x * a as u64).sum()
    }
}

/// Every `x >= 0` with `a·x = q`, by recursion on the last coordinate.
pub fn nonneg_solutions(a: &PartVector, q: i64) -> Vec<SolutionVector> {
    let mut out = Vec::new();
    if q < 0 {
        return out;
    }
    let a = a.as_slice();
    let mut x = vec![0u64; a.len()];
    fill(a, a.len(), q as u64, &mut x, &mut out);
    out
}

fn fill(a: &[usize], k: usize, rest: u64, x: &mut [u64], out: &mut Vec<SolutionVector>) {
    if k == 0 {
        if rest == 0 {
            out.push(SolutionVector(x.to_vec()));
        }
        return;
    }
    let coef = a[k - 1] as u64;
    if k == 1 {
        if rest.is_multiple_of(coef) {
            x[0] = rest / coef;
            out.push(SolutionVector(x.to_vec()));
            x[0] = 0;
        }
        return;
    }
    for count in 0..=rest / coef {
        x[k - 1] = count;
        fill(a, k - 1, rest - count * coef, x, out);
    }
    x[k - 1] = 0;
}

/// The solutions of `a1·x1 + a2·x2 = q` as an affine family
/// `x(t) = base + t·step` for `lower <= t <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVarFamily {
    pub bezout: BezoutTriple,
    pub lower: i64,
    pub upper: i64,
    pub base: [i64; 2],
    pub step: [i64; 2],
}

impl TwoVarFamily {
    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }

    pub fn point(&self, t: i64) -> [i64; 2] {
        [
            self.base[0] + t * self.step[0],
            self.base[1] + t * self.step[1],
        ]
    }

    pub fn solutions(&self) -> impl Iterator<Item = SolutionVector> + '_ {
        (self.lower..=self.upper).map(move |t| {
            let [x1, x2] = self.point(t);
            SolutionVector(vec![x1 as u64, x2 as u64])
        })
    }
}

pub fn two_var_family(a1: u64, a2: u64, q: i64) -> Result<TwoVarFamily> {
    two_var_family_with(a1, a2, q, bezout(a1, a2))
}

/// Same as [`two_var_family`] but parametrized by a caller-chosen Bezout
/// pair, which must satisfy `r·a1 + s·a2 = g`.
pub fn two_var_family_with(a1: u64, a2: u64, q: i64, bz: BezoutTriple) -> Result<TwoVarFamily> {
    if a1 == 0 || a1 >= a2 {
        return Err(Error::precondition(format!(
            "two-variable family needs 1 <= a1 < a2, got {a1}, {a2}"
        )));
    }
    let (a1, a2) = (a1 as i64, a2 as i64);
    if bz.g <= 0 || bz.r * a1 + bz.s * a2 != bz.g || a1 % bz.g != 0 || a2 % bz.g != 0 {
        return Err(Error::precondition(format!(
            "{bz:?} is not a Bezout triple for {a1}, {a2}"
        )));
    }
    let g = bz.g;
    let step = [a2 / g, -(a1 / g)];
    if q < 0 || q % g != 0 {
        return Ok(TwoVarFamily {
            bezout: bz,
            lower: 1,
            upper: 0,
            base: [0, 0],
            step,
        });
    }
    let base = [bz.r * (q / g), bz.s * (q / g)];
    // x1 >= 0  <=>  t >= -r·q/a2 ;  x2 >= 0  <=>  t <= s·q/a1
    let lower = Integer::div_ceil(&(-bz.r * q), &a2);
    let upper = Integer::div_floor(&(bz.s * q), &a1);
    Ok(TwoVarFamily {
        bezout: bz,
        lower,
        upper,
        base,
        step,
    })
}

/// `(Σx)! / Π x_i!`, built as a product of binomials.
pub fn multinomial(x: &[u64]) -> BigUint {
    let mut result = BigUint::one();
    let mut total = 0u64;
    for &xi in x {
        total += xi;
        result *= binomial(total, xi);
    }
    result
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `Π k_j^{x_j}` with exact signs.
pub fn power_product(k: &[i64], x: &[u64]) -> Result<BigInt> {
    if k.len() != x.len() {
        return Err(Error::precondition(format!(
            "coefficient vector has length {}, solution has length {}",
            k.len(),
            x.len()
        )));
    }
    let mut acc = BigInt::one();
    for (&kj, &xj) in k.iter().zip(x) {
        if xj == 0 {
            continue;
        }
        let exp = u32::try_from(xj).map_err(|_| Error::invalid("exponent too large"))?;
        acc *= num_traits::pow(BigInt::from(kj), exp as usize);
    }
    Ok(acc)
}

/// `R(S,n) = Σ C(x)` over the nonnegative solutions of `v^{S≤n}·x = n`.
pub fn direct_count(s: &PartSet, n: usize) -> Result<BigUint> {
    if !s.is_finite() {
        return Err(Error::unsupported(format!(
            "direct Diophantine counting needs a finite part set, got {s}"
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let Some(parts) = s.materialize(n) else {
        return Ok(BigUint::zero());
    };
    Ok(nonneg_solutions(&parts, n as i64)
        .iter()
        .map(|x| multinomial(x.as_slice()))
        .sum())
}
