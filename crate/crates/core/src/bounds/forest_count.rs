use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{binomial, factorial, rational, rational_pow, to_biguint};
use crate::error::{out_of_range, Result};
use crate::guard::Guard;
use crate::report::big_string;
use crate::tree::enumerate_forests;

fn check(n: usize, d: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(out_of_range("d", d, format!("1..={n}")));
    }
    Ok(())
}

fn half_power(i: usize) -> BigRational {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    BigRational::new(BigInt::from(sign), BigInt::from(2u8).pow(i as u32))
}

fn int(x: &BigUint) -> BigRational {
    rational(x)
}

fn finish(value: BigRational) -> BigUint {
    to_biguint(&value).expect("forest counts are non-negative integers")
}

/// Forests on `[n]` with `d` components, by the alternating sum with falling factorials.
pub fn forest_count_moon(n: usize, d: usize) -> Result<BigUint> {
    check(n, d)?;
    let (n64, d64) = (n as u64, d as u64);
    let mut sum = BigRational::zero();
    for i in 0..=d {
        if n < d + i {
            continue;
        }
        let falling = &factorial(n64 - d64) / factorial((n - d - i) as u64);
        let term = half_power(i)
            * int(&binomial(d64, i as u64))
            * int(&(falling * (d + i)))
            * rational_pow(n as i64, -(i as i64));
        sum += term;
    }
    let prefactor = int(&binomial(n64, d64)) * rational_pow(n as i64, n as i64 - d as i64 - 1);
    Ok(finish(prefactor * sum))
}

/// The same count by the alternating sum over binomials of `n - 1`.
pub fn forest_count_bollobas(n: usize, d: usize) -> Result<BigUint> {
    check(n, d)?;
    let (n64, d64) = (n as u64, d as u64);
    let mut sum = BigRational::zero();
    for i in 0..=d {
        let ratio = &factorial(d64 + i as u64) / factorial(d64);
        let term = half_power(i)
            * int(&binomial(d64, i as u64))
            * int(&binomial(n64 - 1, d64 - 1 + i as u64))
            * int(&ratio)
            * rational_pow(n as i64, -(i as i64));
        sum += term;
    }
    Ok(finish(rational_pow(n as i64, n as i64 - d as i64) * sum))
}

/// Closed-form count; both representations are evaluated and must agree.
pub fn forest_count_closed(n: usize, d: usize) -> Result<BigUint> {
    let moon = forest_count_moon(n, d)?;
    debug_assert_eq!(moon, forest_count_bollobas(n, d)?);
    Ok(moon)
}

/// Count by materializing every forest (set partition times per-block trees).
pub fn forest_count_bruteforce(n: usize, d: usize, guard: &Guard) -> Result<BigUint> {
    check(n, d)?;
    guard.check_trees(n)?;
    Ok(BigUint::from(enumerate_forests(n, d).len()))
}

/// One of the eight special-case formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialCase {
    pub case: &'static str,
    pub d: usize,
    #[serde(serialize_with = "big_string")]
    pub value: BigUint,
}

/// Evaluates every special case defined at `n`, in order of `d`.
pub fn special_case_table(n: usize) -> Vec<SpecialCase> {
    let r = |x: i64| BigRational::from_integer(x.into());
    let n_i = n as i64;
    let nr = r(n_i);
    let pw = |e: i64| rational_pow(n_i, e);
    let c = |k: u64| int(&binomial(n as u64, k));
    let c1 = |k: u64| int(&binomial(n as u64 + 1, k));
    let frac = |a: i64, b: i64| BigRational::new(a.into(), b.into());

    let mut rows: Vec<(&'static str, i64, BigRational)> = Vec::new();
    if n >= 1 {
        rows.push(("d=1", 1, pw(n_i - 2)));
    }
    if n >= 2 {
        rows.push((
            "d=2",
            2,
            frac(1, 2) * pw(n_i - 4) * (&nr - r(1)) * (&nr + r(6)),
        ));
    }
    if n >= 3 {
        let quad = &nr * &nr + r(13) * &nr + r(60);
        rows.push((
            "d=3",
            3,
            frac(1, 8) * pw(n_i - 6) * (&nr - r(1)) * (&nr - r(2)) * quad,
        ));
    }
    if n >= 5 {
        let quad = &nr * &nr + r(3) * &nr + r(10);
        rows.push((
            "d=n-4",
            n_i - 4,
            frac(1, 16) * c(4) * quad * (&nr - r(4)) * (&nr + r(3)),
        ));
    }
    if n >= 4 {
        let quad = &nr * &nr + r(3) * &nr + r(4);
        rows.push(("d=n-3", n_i - 3, frac(1, 2) * c(4) * quad));
    }
    if n >= 3 {
        rows.push(("d=n-2", n_i - 2, r(3) * c1(4)));
    }
    if n >= 2 {
        rows.push(("d=n-1", n_i - 1, c(2)));
    }
    if n >= 1 {
        rows.push(("d=n", n_i, r(1)));
    }
    let mut out: Vec<SpecialCase> = rows
        .into_iter()
        .map(|(case, d, v)| SpecialCase {
            case,
            d: d as usize,
            value: finish(v),
        })
        .collect();
    out.sort_by_key(|s| s.d);
    out
}
