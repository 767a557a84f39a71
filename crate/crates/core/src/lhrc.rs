//! Linear homogeneous recurrences with constant coefficients,
//! `f(n) = Σ k_j f(n − a_j)`, and their exact solution through Diophantine
//! sums.
//!
//! Unrolling the recurrence from `f(n)` down to the seeds `f(0..a_l)` turns
//! every path into an `A`-restricted composition weighted by the product of
//! the coefficients it uses. Grouping paths by how often each offset occurs
//! gives the resolvent kernel
//!
//! ```text
//! f_R(q) = Σ_{x >= 0, a·x = q − (a_l − a_1)} Π k_j^{x_j} · C(x)
//! ```
//!
//! and the seed coefficients `V(n, i)` are sums of shifted kernel values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diophantine::{multinomial, nonneg_solutions, power_product, two_var_family};
use crate::{Error, PartVector, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lhrc {
    offsets: PartVector,
    coeffs: Vec<i64>,
    initial: Vec<BigInt>,
}

impl Lhrc {
    /// `initial` holds `f(0), ..., f(a_l − 1)`.
    pub fn new(offsets: Vec<usize>, coeffs: Vec<i64>, initial: Vec<BigInt>) -> Result<Self> {
        let offsets =
            PartVector::new(offsets).map_err(|e| Error::invalid(format!("offsets: {e}")))?;
        if coeffs.len() != offsets.len() {
            return Err(Error::invalid(format!(
                "{} offsets but {} coefficients",
                offsets.len(),
                coeffs.len()
            )));
        }
        if coeffs.contains(&0) {
            return Err(Error::invalid("coefficients must be nonzero"));
        }
        if initial.len() != offsets.max() {
            return Err(Error::invalid(format!(
                "largest offset is {} so exactly {} initial values are needed, got {}",
                offsets.max(),
                offsets.max(),
                initial.len()
            )));
        }
        Ok(Lhrc {
            offsets,
            coeffs,
            initial,
        })
    }

    pub fn offsets(&self) -> &PartVector {
        &self.offsets
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    pub fn order(&self) -> usize {
        self.offsets.max()
    }

    pub fn terms(&self) -> usize {
        self.offsets.len()
    }

    /// `κ(a)`, zero for anything that is not an offset.
    pub fn coeff_at(&self, offset: usize) -> i64 {
        self.offsets
            .as_slice()
            .binary_search(&offset)
            .map_or(0, |j| self.coeffs[j])
    }

    pub fn with_initial(&self, initial: Vec<BigInt>) -> Result<Lhrc> {
        Lhrc::new(
            self.offsets.as_slice().to_vec(),
            self.coeffs.clone(),
            initial,
        )
    }

    /// `a_l − a_1`, the shift between a kernel argument and its resolvent
    /// right-hand side.
    fn spread(&self) -> i64 {
        (self.offsets.max() - self.offsets.min()) as i64
    }

    /// Forward iteration from the seeds.
    pub fn eval_dp(&self, n: usize) -> BigInt {
        self.sequence(n).pop().expect("non-empty")
    }

    /// `[f(0), ..., f(n)]`.
    pub fn sequence(&self, n: usize) -> Vec<BigInt> {
        let mut f: Vec<BigInt> = self.initial.iter().take(n + 1).cloned().collect();
        for m in f.len()..=n {
            let next = self
                .offsets
                .iter()
                .zip(&self.coeffs)
                .map(|(a, &k)| &f[m - a] * k)
                .sum();
            f.push(next);
        }
        f
    }

    /// The resolvent kernel, summed over all nonnegative solutions.
    pub fn f_r(&self, q: i64) -> BigInt {
        let rhs = q - self.spread();
        if rhs < 0 {
            return BigInt::zero();
        }
        if rhs == 0 {
            return BigInt::one();
        }
        nonneg_solutions(&self.offsets, rhs)
            .iter()
            .map(|x| {
                let weight = power_product(&self.coeffs, x.as_slice()).expect("lengths match");
                weight * BigInt::from(multinomial(x.as_slice()))
            })
            .sum()
    }

    /// `V(n, i)` for every seed index `i`, so that `f(n) = Σ V(n,i) f(i)`.
    ///
    /// A path reaches seed `i` through a last step `α` with `i + α >= a_l`.
    /// For `i >= a_l − a_1` every offset qualifies and the sum collapses to a
    /// single kernel value.
    pub fn v_coeffs(&self, n: usize) -> Result<SolutionCoefficients> {
        if n < self.order() {
            return Err(Error::precondition(format!(
                "seed coefficients need n >= {}, got {n}",
                self.order()
            )));
        }
        let v = self.seed_weights(n, |q| self.f_r(q));
        Ok(SolutionCoefficients { n, values: v })
    }

    fn seed_weights(&self, n: usize, kernel: impl Fn(i64) -> BigInt) -> Vec<BigInt> {
        let al = self.order();
        let a1 = self.offsets.min();
        let spread = self.spread();
        let n = n as i64;
        (0..al)
            .map(|i| {
                if i >= al - a1 {
                    kernel(n - i as i64 + spread)
                } else {
                    self.offsets
                        .iter()
                        .zip(&self.coeffs)
                        .skip(1)
                        .filter(|(alpha, _)| i + alpha >= al)
                        .map(|(alpha, &k)| kernel(n - i as i64 - alpha as i64 + spread) * k)
                        .sum()
                }
            })
            .collect()
    }

    /// Closed-form value built from seed coefficients; equals [`Lhrc::eval_dp`].
    pub fn solve_closed(&self, n: usize) -> BigInt {
        if n < self.order() {
            return self.initial[n].clone();
        }
        let v = self.seed_weights(n, |q| self.f_r(q));
        dot(&v, &self.initial)
    }

    /// Two-offset closed form with the kernel taken from the two-variable
    /// solution family.
    pub fn solve_two_term(&self, n: usize) -> Result<BigInt> {
        if self.terms() != 2 {
            return Err(Error::precondition(format!(
                "two-term solver needs 2 offsets, got {}",
                self.terms()
            )));
        }
        if n < self.order() {
            return Ok(self.initial[n].clone());
        }
        let (a1, a2) = (self.offsets[0], self.offsets[1]);
        let k2 = self.coeffs[1];
        let kernel = |q: i64| self.f_r_two_term(q);
        let n = n as i64;
        let mut total = BigInt::zero();
        for i in 0..(a2 - a1) {
            total += kernel(n - i as i64 - a1 as i64) * &self.initial[i] * k2;
        }
        for i in (a2 - a1)..a2 {
            total += kernel(n - i as i64 + (a2 - a1) as i64) * &self.initial[i];
        }
        Ok(total)
    }

    fn f_r_two_term(&self, q: i64) -> BigInt {
        let (a1, a2) = (self.offsets[0] as u64, self.offsets[1] as u64);
        let fam = two_var_family(a1, a2, q - (a2 - a1) as i64).expect("a1 < a2");
        fam.solutions()
            .map(|x| {
                let weight = power_product(&self.coeffs, x.as_slice()).expect("lengths match");
                weight * BigInt::from(multinomial(x.as_slice()))
            })
            .sum()
    }

    /// Three-offset closed form. The kernel iterates the count of the largest
    /// offset and solves the remaining two-variable equation on the residual.
    pub fn solve_three_term(&self, n: usize) -> Result<BigInt> {
        if self.terms() != 3 {
            return Err(Error::precondition(format!(
                "three-term solver needs 3 offsets, got {}",
                self.terms()
            )));
        }
        if n < self.order() {
            return Ok(self.initial[n].clone());
        }
        let (a1, a2, a3) = (self.offsets[0], self.offsets[1], self.offsets[2]);
        let (k2, k3) = (self.coeffs[1], self.coeffs[2]);
        let kernel = |q: i64| self.f_r_three_term(q);
        let n = n as i64;
        let spread = (a3 - a1) as i64;
        let mut total = BigInt::zero();
        for i in (a3 - a2)..(a3 - a1) {
            total += kernel(n - i as i64 - a2 as i64 + spread) * &self.initial[i] * k2;
        }
        for i in 0..(a3 - a1) {
            total += kernel(n - i as i64 - a1 as i64) * &self.initial[i] * k3;
        }
        for i in (a3 - a1)..a3 {
            total += kernel(n - i as i64 + spread) * &self.initial[i];
        }
        Ok(total)
    }

    fn f_r_three_term(&self, q: i64) -> BigInt {
        let (a1, a2, a3) = (
            self.offsets[0] as i64,
            self.offsets[1] as i64,
            self.offsets[2] as i64,
        );
        let rhs = q - (a3 - a1);
        if rhs < 0 {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        for x3 in 0..=rhs / a3 {
            let residual = rhs - a3 * x3;
            let fam = two_var_family(a1 as u64, a2 as u64, residual).expect("a1 < a2");
            for x in fam.solutions() {
                let x = [x.0[0], x.0[1], x3 as u64];
                let weight = power_product(&self.coeffs, &x).expect("lengths match");
                total += weight * BigInt::from(multinomial(&x));
            }
        }
        total
    }
}

fn dot(v: &[BigInt], f: &[BigInt]) -> BigInt {
    v.iter().zip(f).map(|(a, b)| a * b).sum()
}

/// The weights `V(n, i)` of the seed values in `f(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCoefficients {
    pub n: usize,
    pub values: Vec<BigInt>,
}

impl SolutionCoefficients {
    pub fn apply(&self, initial: &[BigInt]) -> BigInt {
        dot(&self.values, initial)
    }
}
