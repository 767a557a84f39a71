//! Displayed formulas that need a corrected reading.
//!
//! Each check evaluates the formula exactly as displayed, finds the first `n`
//! at which it disagrees with the oracle, and confirms that the corrected
//! reading used by the library agrees with the oracle for every `n <= 28`.
//! The check returns the first divergent `n`; the tests pin it.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use srcomp_core::closedforms::{
    count_two_part, count_up_to_m, count_without_m, count_without_range,
};
use srcomp_core::diophantine::{bezout, binomial, multinomial, power_product};
use srcomp_core::lhrc::Lhrc;
use srcomp_core::oracle::count_brute;
use srcomp_core::sequences::{m_fibonacci, Method};
use srcomp_core::PartSet;

pub const N_MAX: usize = 28;

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn weight(k: &[i64], x: &[i64]) -> BigInt {
    let x: Vec<u64> = x.iter().map(|&v| v as u64).collect();
    power_product(k, &x).unwrap() * BigInt::from(multinomial(&x))
}

/// First `n` in `from..=N_MAX` where `printed` differs from `truth`, after
/// checking that `corrected` equals `truth` on the whole range.
fn divergence<T: PartialEq + std::fmt::Debug>(
    from: usize,
    truth: impl Fn(usize) -> T,
    printed: impl Fn(usize) -> T,
    corrected: impl Fn(usize) -> T,
) -> Result<usize, String> {
    for n in from..=N_MAX {
        let (t, c) = (truth(n), corrected(n));
        if t != c {
            return Err(format!(
                "corrected reading differs at n={n}: {c:?} vs {t:?}"
            ));
        }
    }
    (from..=N_MAX)
        .find(|&n| printed(n) != truth(n))
        .ok_or_else(|| format!("printed reading agrees for all n <= {N_MAX}"))
}

/// Two-term kernel as displayed: `x(t) = [r q'/g + t, s q'/g − t a1/g]` for
/// `t` in `[⌈−r q'/a2⌉ : ⌊s q'/a1⌋]`, dropping vectors with a negative entry.
fn printed_two_term_kernel(a1: i64, a2: i64, k: &[i64], q: i64) -> BigInt {
    let qp = q - (a2 - a1);
    if qp < 0 {
        return BigInt::zero();
    }
    let bz = bezout(a1 as u64, a2 as u64);
    let (g, r, s) = (bz.g, bz.r, bz.s);
    if qp % g != 0 {
        return BigInt::zero();
    }
    (ceil_div(-r * qp, a2)..=floor_div(s * qp, a1))
        .map(|t| [r * qp / g + t, s * qp / g - t * a1 / g])
        .filter(|x| x.iter().all(|&v| v >= 0))
        .map(|x| weight(k, &x))
        .sum()
}

/// The two-term solution with the kernel above.
fn printed_two_term(rec: &Lhrc, n: usize) -> BigInt {
    let (a1, a2) = (rec.offsets()[0], rec.offsets()[1]);
    if n < a2 {
        return rec.initial()[n].clone();
    }
    let k = rec.coeffs();
    let f_r = |q: i64| printed_two_term_kernel(a1 as i64, a2 as i64, k, q);
    let n = n as i64;
    let mut total = BigInt::zero();
    for i in 0..a2 - a1 {
        total += f_r(n - i as i64 - a1 as i64) * &rec.initial()[i] * k[1];
    }
    for i in a2 - a1..a2 {
        total += f_r(n - i as i64 + (a2 - a1) as i64) * &rec.initial()[i];
    }
    total
}

/// The two-variable family moves its first component by one per step.
pub fn two_term_unit_step() -> Result<usize, String> {
    let fib = Lhrc::new(vec![1, 2], vec![1, 1], ints(&[0, 1])).unwrap();
    divergence(
        0,
        |n| fib.eval_dp(n),
        |n| printed_two_term(&fib, n),
        |n| fib.solve_two_term(n).unwrap(),
    )
}

/// Three-term kernel as displayed: the inner family solves the equation for
/// `q'` instead of the residual `q̂ = q' − a3·x3` (steps corrected).
fn printed_three_term_kernel(a: [i64; 3], k: &[i64], q: i64) -> BigInt {
    let qp = q - (a[2] - a[0]);
    if qp < 0 {
        return BigInt::zero();
    }
    let bz = bezout(a[0] as u64, a[1] as u64);
    let (g, r, s) = (bz.g, bz.r, bz.s);
    if qp % g != 0 {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for x3 in 0..=qp / a[2] {
        for t in ceil_div(-r * qp, a[1])..=floor_div(s * qp, a[0]) {
            let x = [r * qp / g + t * a[1] / g, s * qp / g - t * a[0] / g, x3];
            if x.iter().all(|&v| v >= 0) {
                total += weight(k, &x);
            }
        }
    }
    total
}

#[allow(clippy::needless_range_loop)]
fn printed_three_term(rec: &Lhrc, n: usize) -> BigInt {
    let a: Vec<usize> = rec.offsets().iter().collect();
    let (a1, a2, a3) = (a[0], a[1], a[2]);
    if n < a3 {
        return rec.initial()[n].clone();
    }
    let k = rec.coeffs();
    let f_r = |q: i64| printed_three_term_kernel([a1 as i64, a2 as i64, a3 as i64], k, q);
    let f = rec.initial();
    let n = n as i64;
    let spread = (a3 - a1) as i64;
    let mut total = BigInt::zero();
    for i in a3 - a2..a3 - a1 {
        total += f_r(n - i as i64 - a2 as i64 + spread) * &f[i] * k[1];
    }
    for i in 0..a3 - a1 {
        total += f_r(n - i as i64 - a1 as i64) * &f[i] * k[2];
    }
    for i in a3 - a1..a3 {
        total += f_r(n - i as i64 + spread) * &f[i];
    }
    total
}

/// The three-term bounds and vector are written in `q'` rather than `q̂`.
pub fn three_term_residual_bounds() -> Result<usize, String> {
    let trib = Lhrc::new(vec![1, 2, 3], vec![1, 1, 1], ints(&[0, 0, 1])).unwrap();
    divergence(
        0,
        |n| trib.eval_dp(n),
        |n| printed_three_term(&trib, n),
        |n| trib.solve_three_term(n).unwrap(),
    )
}

/// Two-part seeds as displayed: every seed is `[a1 | n]` for the target `n`
/// rather than `[a1 | i]` for the seed index `i`. Shown for `{2,3}`.
pub fn two_part_seed_index() -> Result<usize, String> {
    let set = PartSet::explicit(vec![2, 3]).unwrap();
    divergence(
        0,
        |n| BigInt::from(count_brute(&set, n)),
        |n| {
            let seed = i64::from(n % 2 == 0);
            Lhrc::new(vec![2, 3], vec![1, 1], ints(&[seed; 3]))
                .unwrap()
                .solve_closed(n)
        },
        |n| BigInt::from(count_two_part(2, 3, n).unwrap()),
    )
}

fn without_range_seeds(m1: usize, len: usize) -> Vec<BigInt> {
    (0..len)
        .map(|i| BigInt::from(count_up_to_m(m1 - 1, i).unwrap()))
        .collect()
}

/// Excluding `[m1:m2]`: the offset list `[1, m1, m2]` instead of
/// `[1, m1, m2+1]`, solved exactly with the seeds below the largest offset.
/// Shown for `(m1, m2) = (2, 4)`.
pub fn excluded_range_offsets() -> Result<usize, String> {
    let (m1, m2) = (2, 4);
    let set = PartSet::complement_range(m1, m2).unwrap();
    let printed = Lhrc::new(vec![1, m1, m2], vec![2, -1, 1], without_range_seeds(m1, m2)).unwrap();
    divergence(
        0,
        |n| BigInt::from(count_brute(&set, n)),
        |n| printed.solve_closed(n),
        |n| BigInt::from(count_without_range(m1, m2, n).unwrap()),
    )
}

/// Excluding `[m1:m2]`: the displayed sum, with its signs and index ranges,
/// over the kernel of offsets `[1, m1, m2+1]`. Returns the first divergent
/// `n` for each pair in `pairs`.
pub fn excluded_range_display(pairs: &[(usize, usize)]) -> Result<Vec<usize>, String> {
    pairs
        .iter()
        .map(|&(m1, m2)| {
            let set = PartSet::complement_range(m1, m2).unwrap();
            let kernel_rec = Lhrc::new(
                vec![1, m1, m2 + 1],
                vec![2, -1, 1],
                vec![BigInt::zero(); m2 + 1],
            )
            .unwrap();
            let f_r = |q: i64| kernel_rec.f_r(q);
            let low = |i: usize| BigInt::from(count_up_to_m(m1 - 1, i).unwrap());
            let printed = |n: usize| {
                if n <= m2 {
                    return low(n);
                }
                let n = n as i64;
                let (m1i, m2i) = (m1 as i64, m2 as i64);
                let mut total = f_r(n - 1) + low(m2) * f_r(n);
                for i in 1..m1 {
                    total += (BigInt::one() << (i - 1)) * f_r(n - i as i64 - 1);
                }
                for i in m1..m2 {
                    total += low(i) * f_r(n - i as i64 - 1);
                }
                for i in (m2 - m1 + 1)..m1 {
                    total -= (BigInt::one() << (i - 1)) * f_r(n - i as i64 - m1i + m2i);
                }
                for i in m1..m2 {
                    total += low(i) * f_r(n - i as i64 - m1i + m2i);
                }
                total
            };
            divergence(
                0,
                |n| BigInt::from(count_brute(&set, n)),
                printed,
                |n| BigInt::from(count_without_range(m1, m2, n).unwrap()),
            )
        })
        .collect()
}

/// m-Fibonacci as displayed: `f_R(n) + f_R(n−m)`. Shown for `m = 2`.
pub fn m_fibonacci_sign() -> Result<usize, String> {
    let m = 2;
    let kernel_rec = Lhrc::new(vec![1, m + 1], vec![2, -1], vec![BigInt::zero(); m + 1]).unwrap();
    divergence(
        m + 1,
        |n| BigInt::from(m_fibonacci(m, n, Method::Recurrence).unwrap()),
        |n| kernel_rec.f_r(n as i64) + kernel_rec.f_r(n as i64 - m as i64),
        |n| BigInt::from(m_fibonacci(m, n, Method::Closed).unwrap()),
    )
}

/// Parts at least 2, as displayed: `Σ_{t=⌈(n−1)/2⌉}^{n−1} C(t, n−1−t)`.
pub fn parts_at_least_two_index() -> Result<usize, String> {
    let set = PartSet::range(2, None).unwrap();
    divergence(
        2,
        |n| count_brute(&set, n),
        |n| -> BigUint {
            let top = n - 1;
            (top.div_ceil(2)..=top)
                .map(|t| binomial(t as u64, (top - t) as u64))
                .sum()
        },
        |n| count_without_m(1, n).unwrap(),
    )
}

#[test]
fn unit_step_diverges_at_three() {
    assert_eq!(two_term_unit_step(), Ok(3));
}

#[test]
fn residual_bounds_diverge_at_five() {
    assert_eq!(three_term_residual_bounds(), Ok(5));
}

#[test]
fn seed_index_diverges_at_three() {
    assert_eq!(two_part_seed_index(), Ok(3));
}

#[test]
fn offsets_without_the_shift_diverge_at_four() {
    assert_eq!(excluded_range_offsets(), Ok(4));
}

#[test]
fn displayed_excluded_range_sum_diverges() {
    assert_eq!(
        excluded_range_display(&[(2, 3), (2, 4), (3, 4)]),
        Ok(vec![4, 5, 6])
    );
}

#[test]
fn m_fibonacci_sign_diverges_at_four() {
    assert_eq!(m_fibonacci_sign(), Ok(4));
}

#[test]
fn parts_at_least_two_index_diverges_at_three() {
    assert_eq!(parts_at_least_two_index(), Ok(3));
}
