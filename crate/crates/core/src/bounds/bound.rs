use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::bounds::forest_count::forest_count_closed;
use crate::combinatorics::binomial;
use crate::error::{out_of_range, Result};
use crate::report::big_string;

/// Which argument produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    SpherePacking,
    ExactNMinus1,
    ImprovedNMinus2,
    ImprovedNMinus3,
    ImprovedNMinus3Small,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Self::SpherePacking => "sphere-packing",
            Self::ExactNMinus1 => "exact-(n-1)",
            Self::ImprovedNMinus2 => "improved-(n-2)",
            Self::ImprovedNMinus3 => "improved-(n-3)",
            Self::ImprovedNMinus3Small => "improved-(n-3)-small",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Upper bound on the size of a code with minimum distance `d` on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    #[serde(serialize_with = "big_string")]
    pub bound: BigUint,
    pub provenance: Provenance,
    #[serde(serialize_with = "big_string")]
    pub sphere_packing: BigUint,
}

fn check(n: usize, d: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(out_of_range("d", d, format!("1..={n}")));
    }
    Ok(())
}

/// `floor(F(n, d) / C(n-1, d-1))`.
pub fn sphere_packing_value(n: usize, d: usize) -> Result<BigUint> {
    check(n, d)?;
    Ok(forest_count_closed(n, d)? / binomial(n as u64 - 1, d as u64 - 1))
}

pub fn sphere_packing_bound(n: usize, d: usize) -> Result<BoundReport> {
    let sp = sphere_packing_value(n, d)?;
    Ok(BoundReport {
        n,
        d,
        bound: sp.clone(),
        provenance: Provenance::SpherePacking,
        sphere_packing: sp,
    })
}

/// The smallest applicable bound. Ties keep sphere packing, except at `d = n - 1`
/// where the value is known to be exact.
pub fn best_upper_bound(n: usize, d: usize) -> Result<BoundReport> {
    let mut report = sphere_packing_bound(n, d)?;
    let mut offer = |value: BigUint, provenance: Provenance, replace_on_tie: bool| {
        if value < report.bound || (replace_on_tie && value == report.bound) {
            report.bound = value;
            report.provenance = provenance;
        }
    };
    let n64 = n as u64;
    if n >= 2 && d == n - 1 {
        offer(BigUint::from(n64 / 2), Provenance::ExactNMinus1, true);
    }
    if n >= 3 && d == n - 2 {
        offer(BigUint::from(n64), Provenance::ImprovedNMinus2, false);
    }
    if n >= 4 && d == n - 3 {
        if n >= 9 {
            offer(BigUint::from(n64 * n64), Provenance::ImprovedNMinus3, false);
        } else {
            offer(
                BigUint::from(3 * n64 * n64 / 2),
                Provenance::ImprovedNMinus3Small,
                false,
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::tree_count;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(sphere_packing_value(4, 2).unwrap(), big(5));
        for n in 2..=12 {
            assert_eq!(sphere_packing_value(n, n - 1).unwrap(), big(n as u64 / 2));
            assert_eq!(sphere_packing_value(n, 1).unwrap(), tree_count(n));
        }
    }

    #[test]
    fn best_bound_examples() {
        let r = best_upper_bound(10, 8).unwrap();
        assert_eq!(
            (r.bound.clone(), r.provenance),
            (big(10), Provenance::ImprovedNMinus2)
        );
        assert_eq!(r.sphere_packing, big(27));
        let r = best_upper_bound(9, 6).unwrap();
        assert_eq!(
            (r.bound, r.provenance),
            (big(81), Provenance::ImprovedNMinus3)
        );
        let r = best_upper_bound(6, 3).unwrap();
        assert_eq!(r.sphere_packing, big(43));
        assert_eq!(
            (r.bound, r.provenance),
            (big(43), Provenance::SpherePacking)
        );
        let r = best_upper_bound(10, 9).unwrap();
        assert_eq!((r.bound, r.provenance), (big(5), Provenance::ExactNMinus1));
    }

    #[test]
    fn small_n_minus_three_is_tagged() {
        let tags: Vec<Provenance> = (4..=12)
            .map(|n| best_upper_bound(n, n - 3).unwrap().provenance)
            .collect();
        assert!(tags[5..].iter().all(|&p| p == Provenance::ImprovedNMinus3));
        assert!(tags[..5].iter().all(|&p| p != Provenance::ImprovedNMinus3));
    }

    #[test]
    fn bounds_are_positive_and_monotone() {
        for n in 1..=10 {
            let bounds: Vec<BigUint> = (1..=n)
                .map(|d| best_upper_bound(n, d).unwrap().bound)
                .collect();
            assert!(bounds.iter().all(|b| *b >= big(1)), "n={n}");
            assert!(bounds.windows(2).all(|w| w[0] >= w[1]), "n={n}: {bounds:?}");
        }
    }

    #[test]
    fn tags_serialize() {
        let json = serde_json::to_string(&best_upper_bound(10, 8).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"n":10,"d":8,"bound":"10","provenance":"improved-(n-2)","sphere_packing":"27"}"#
        );
    }
}
