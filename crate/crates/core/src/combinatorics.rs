//! Exact big-integer combinatorics shared by the counting formulas.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

pub fn pow(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
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

/// Binomial with a possibly negative upper index. Only `C(-1, 0) = 1` and the
/// ordinary range occur in the ball recursions; a negative top with `k > 0`
/// uses `C(-a, k) = (-1)^k C(a + k - 1, k)` and is reported as `None` when negative.
pub fn binomial_signed(n: i64, k: u64) -> Option<BigUint> {
    if k == 0 {
        return Some(BigUint::one());
    }
    if n >= 0 {
        return Some(binomial(n as u64, k));
    }
    let a = n.unsigned_abs();
    if k.is_multiple_of(2) {
        Some(binomial(a + k - 1, k))
    } else {
        None
    }
}

pub fn multinomial(parts: &[u64]) -> BigUint {
    let total: u64 = parts.iter().sum();
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Multiplies `x` by `n^(t-1)`. For `t = 0` the factor is `1/n` and the division
/// must be exact; every radius-zero quantity in the ball formulas is a multiple of `n`.
pub fn scale_n_pow_t_minus_1(n: u64, t: u64, x: BigUint) -> BigUint {
    if t == 0 {
        let (q, r) = x.div_rem(&big(n));
        assert!(r.is_zero(), "radius-zero quantity not divisible by n");
        q
    } else {
        x * pow(n, (t - 1) as u32)
    }
}

pub fn rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(x.clone().into())
}

pub fn rational_pow(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(base.into());
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), exp.unsigned_abs() as usize)
    }
}

/// Converts an exact rational to an unsigned integer if it is one.
pub fn to_biguint(r: &BigRational) -> Option<BigUint> {
    if r.is_integer() {
        r.to_integer().to_biguint()
    } else {
        None
    }
}

/// All compositions of `total` into `parts` positive integers, in lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if remaining >= 1 {
                cur.push(remaining);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=remaining.saturating_sub(parts - 1) {
            cur.push(first);
            rec(remaining - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
        assert_eq!(binomial_signed(-1, 0), Some(big(1)));
        assert_eq!(binomial_signed(4, 2), Some(big(6)));
    }

    #[test]
    fn multinomial_matches_factorials() {
        assert_eq!(multinomial(&[2, 1, 1]), big(12));
        assert_eq!(multinomial(&[]), big(1));
    }

    #[test]
    fn compositions_count_is_binomial() {
        for n in 1..9usize {
            for k in 1..=n {
                let c = compositions(n, k);
                assert_eq!(big(c.len() as u64), binomial(n as u64 - 1, k as u64 - 1));
                assert!(c
                    .iter()
                    .all(|v| v.iter().sum::<usize>() == n && v.iter().all(|&x| x > 0)));
            }
        }
    }

    #[test]
    fn radius_zero_scaling() {
        assert_eq!(scale_n_pow_t_minus_1(5, 0, big(5)), big(1));
        assert_eq!(scale_n_pow_t_minus_1(5, 3, big(2)), big(50));
    }
}
