use std::collections::BTreeSet;

use serde::Serialize;

use crate::codes::decode::{confirm, forest_degrees};
use crate::codes::TreeCode;
use crate::error::{out_of_range, Error, Result};
use crate::tree::{Forest, LabeledTree};

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

fn half(n: usize) -> usize {
    n.div_ceil(2)
}

fn inverse_mod(a: usize, n: usize) -> usize {
    // n is prime, so a^(n-2) is the inverse.
    let (mut base, mut exp, mut acc) = (a % n, n - 2, 1usize);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        exp >>= 1;
    }
    acc
}

/// Largest admissible step, `floor((n-1)/m)`.
pub fn max_step(n: usize, m: usize) -> usize {
    (n - 1) / m
}

/// `floor(3n/4) - ceil(3n/2m) - 2`, possibly negative.
pub fn two_star_distance(n: usize, m: usize) -> i64 {
    (3 * n / 4) as i64 - (3 * n).div_ceil(2 * m) as i64 - 2
}

fn validate(n: usize, m: usize) -> Result<usize> {
    if n < 5 || !is_prime(n) {
        return Err(Error::InvalidParameters(format!(
            "n={n} must be an odd prime at least 5"
        )));
    }
    if !(3..n).contains(&m) {
        return Err(out_of_range("m", m, "3 <= m <= n-1"));
    }
    let d = two_star_distance(n, m);
    if d < 1 {
        return Err(Error::InvalidParameters(format!(
            "floor(3n/4) - ceil(3n/2m) - 2 = {d} for n={n}, m={m}; need at least 1"
        )));
    }
    Ok(d as usize)
}

/// `{<k t>_n : k = 1..alpha}`.
pub fn two_star_w_set(n: usize, t: usize, alpha: usize) -> BTreeSet<usize> {
    (1..=alpha).map(|k| k * t % n).collect()
}

/// `B_t = {<(n+1)/2 * i * t>_n : i odd}` in ascending order.
pub fn step_centers(n: usize, t: usize) -> Vec<usize> {
    let mut b: Vec<usize> = (1..n).step_by(2).map(|i| half(n) * i % n * t % n).collect();
    b.sort_unstable();
    b
}

/// Whether `(s, t)` indexes a codeword, i.e. `s` in `B_t` and `1 <= t <= floor((n-1)/m)`.
pub fn two_star_membership(s: usize, t: usize, n: usize, m: usize) -> bool {
    if t == 0 || t > max_step(n, m) || s >= n {
        return false;
    }
    // s = h*i*t has the unique solution i = 2 s t^-1.
    let i = 2 * s % n * inverse_mod(t, n) % n;
    i % 2 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoStarParams {
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: usize,
}

impl TwoStarParams {
    pub fn new(n: usize, m: usize, s: usize, t: usize) -> Result<Self> {
        validate(n, m)?;
        if !two_star_membership(s, t, n, m) {
            return Err(Error::InvalidParameters(format!(
                "(s={s}, t={t}) is not a codeword index"
            )));
        }
        Ok(Self { n, m, s, t })
    }

    pub fn distance(&self) -> usize {
        two_star_distance(self.n, self.m) as usize
    }

    /// The second center, `<s + (n+1)/2 * t>_n`.
    pub fn partner(&self) -> usize {
        (self.s + half(self.n) * self.t) % self.n
    }

    pub fn tree(&self) -> LabeledTree {
        two_star_tree(self.n, self.s, self.t)
    }
}

/// Star at `s` over `s + i t` for `i <= (n+1)/2`, plus the partner joined to `partner + j t` for `j <= (n-3)/2`.
fn two_star_tree(n: usize, s: usize, t: usize) -> LabeledTree {
    let c = (s + half(n) * t) % n;
    let plus = (1..=half(n)).map(|i| (s, (s + i * t) % n));
    let minus = (1..=(n - 3) / 2).map(|j| (c, (c + j * t) % n));
    let edges: Vec<(usize, usize)> = plus.chain(minus).collect();
    LabeledTree::from_pairs(n, &edges).expect("two-star edges form a tree")
}

/// One codeword per index in `A_{n,m}`, ordered by step then center.
pub fn construct_two_star_code(n: usize, m: usize) -> Result<TreeCode> {
    let d = validate(n, m)?;
    let words = (1..=max_step(n, m))
        .flat_map(|t| {
            step_centers(n, t)
                .into_iter()
                .map(move |s| two_star_tree(n, s, t))
        })
        .collect();
    TreeCode::new(n, d, words)
}

/// Recovers `(s, t)` from the surviving structure around the centers.
pub fn decode_two_star(code: &TreeCode, m: usize, forest: &Forest) -> Result<LabeledTree> {
    let n = code.n();
    validate(n, m)?;
    if forest.n() != n {
        return Err(Error::NodeCountMismatch {
            left: n,
            right: forest.n(),
        });
    }
    let top = max_step(n, m);
    let degrees = forest_degrees(forest);
    let centers: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 2).collect();
    let (s, t) = match centers.as_slice() {
        [a, b] => {
            let forward = (2 * (a + n - b)) % n;
            let backward = (2 * (b + n - a)) % n;
            match ((1..=top).contains(&forward), (1..=top).contains(&backward)) {
                (true, false) => (*b, forward),
                (false, true) => (*a, backward),
                _ => {
                    return Err(Error::ChannelViolation(format!(
                        "centers {a} and {b} give no unique step"
                    )))
                }
            }
        }
        [a] => {
            let a = *a;
            let diffs: Vec<usize> = forest
                .edges()
                .iter()
                .filter_map(|e| e.other(a))
                .map(|v| (v + n - a) % n)
                .collect();
            let steps: Vec<usize> = (1..=top)
                .filter(|&t| {
                    [half(n), half(n) - 1].iter().any(|&alpha| {
                        let w = two_star_w_set(n, t, alpha);
                        diffs.iter().all(|x| w.contains(x))
                    })
                })
                .collect();
            let [t] = steps.as_slice() else {
                return Err(Error::ChannelViolation(format!(
                    "neighbour differences {diffs:?} match steps {steps:?}"
                )));
            };
            let other = (a + n - half(n) * t % n) % n;
            match (
                two_star_membership(a, *t, n, m),
                two_star_membership(other, *t, n, m),
            ) {
                (true, false) => (a, *t),
                (false, true) => (other, *t),
                _ => {
                    return Err(Error::Certification(format!(
                        "centers {a} and {other} are both or neither admissible for t={t}"
                    )))
                }
            }
        }
        [] => return Err(Error::Undecodable("no node keeps two edges".into())),
        _ => {
            return Err(Error::ChannelViolation(format!(
                "{} nodes keep two edges",
                centers.len()
            )))
        }
    };
    confirm(code, forest, two_star_tree(n, s, t))
}

/// Exclusivity of the two center candidates; returns the nodes `a` where it fails.
pub fn exclusivity_failures(n: usize, m: usize) -> Result<Vec<(usize, usize)>> {
    validate(n, m)?;
    let mut bad = Vec::new();
    for t in 1..=max_step(n, m) {
        for a in 0..n {
            let other = (a + n - half(n) * t % n) % n;
            if two_star_membership(a, t, n, m) == two_star_membership(other, t, n, m) {
                bad.push((a, t));
            }
        }
    }
    Ok(bad)
}

/// Largest `|W(t1, alpha) ∩ W(t2, alpha)|` over distinct admissible steps, and the claimed strict ceiling.
pub fn max_step_overlap(n: usize, m: usize, alpha: usize) -> (usize, usize) {
    let top = max_step(n, m);
    let mut worst = 0;
    for t1 in 1..=top {
        let w1 = two_star_w_set(n, t1, alpha);
        for t2 in t1 + 1..=top {
            worst = worst.max(w1.intersection(&two_star_w_set(n, t2, alpha)).count());
        }
    }
    (worst, n.div_ceil(4) + (3 * n).div_ceil(2 * m) + 1)
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;
    use crate::codes::{generic_erasure_decode, min_tree_distance};

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..40).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn parameters() {
        let c = construct_two_star_code(13, 6).unwrap();
        assert_eq!((c.len(), c.declared_distance()), (12, 3));
        assert!(min_tree_distance(&c).unwrap() >= 3);
        let c = construct_two_star_code(11, 5).unwrap();
        assert_eq!((c.len(), c.declared_distance()), (10, 2));
        assert!(min_tree_distance(&c).unwrap() >= 2);
        assert!(matches!(
            construct_two_star_code(11, 3),
            Err(Error::InvalidParameters(_))
        ));
        assert!(construct_two_star_code(15, 5).is_err());
        assert!(construct_two_star_code(13, 13).is_err());
    }

    #[test]
    fn structure_for_primes_to_31() {
        for n in (5..=31).filter(|&p| is_prime(p)) {
            for m in 3..n {
                if two_star_distance(n, m) < 1 {
                    continue;
                }
                let code = construct_two_star_code(n, m).unwrap();
                assert_eq!(code.len(), (n - 1) / 2 * max_step(n, m));
                for t in 1..=max_step(n, m) {
                    assert_eq!(step_centers(n, t).len(), (n - 1) / 2);
                    for s in step_centers(n, t) {
                        let p = TwoStarParams::new(n, m, s, t).unwrap();
                        let tree = p.tree();
                        assert_eq!(tree.leaves().len(), n - 2);
                        assert_eq!(tree.degree(s), (n + 1) / 2);
                        assert_eq!(tree.degree(p.partner()), (n - 1) / 2);
                    }
                }
            }
        }
    }

    #[test]
    fn w_sets_have_full_size() {
        for n in [5, 7, 11, 13, 17] {
            for t in 1..n {
                assert_eq!(two_star_w_set(n, t, (n + 1) / 2).len(), (n + 1) / 2);
            }
        }
    }

    #[test]
    fn membership_matches_b_t() {
        for n in [11, 13] {
            for m in 3..n {
                for t in 1..=max_step(n, m) {
                    let b = step_centers(n, t);
                    for s in 0..n {
                        assert_eq!(two_star_membership(s, t, n, m), b.contains(&s));
                    }
                }
            }
        }
    }

    #[test]
    fn exclusivity_fails_only_at_zero() {
        for m in [4, 5] {
            let bad = exclusivity_failures(11, m).unwrap();
            let expected: Vec<_> = (1..=max_step(11, m)).map(|t| (0, t)).collect();
            assert_eq!(bad, expected);
        }
    }

    #[test]
    fn overlap_bound() {
        for n in [11, 13, 17] {
            for m in 3..n {
                if two_star_distance(n, m) < 1 {
                    continue;
                }
                for alpha in [(n + 1) / 2, (n - 1) / 2] {
                    let (worst, ceiling) = max_step_overlap(n, m, alpha);
                    assert!(worst < ceiling, "n={n} m={m} alpha={alpha}");
                }
            }
        }
    }

    fn sweep(n: usize, m: usize, erasures: usize) {
        let code = construct_two_star_code(n, m).unwrap();
        for word in code.codewords() {
            for removed in word.edges().iter().copied().combinations(erasures) {
                let f = word.remove_edges(&removed).unwrap();
                let got = decode_two_star(&code, m, &f).unwrap();
                assert_eq!(&got, word);
                assert_eq!(got, generic_erasure_decode(&code, &f).unwrap());
            }
        }
    }

    #[test]
    fn decodes_single_erasures_n11() {
        sweep(11, 5, 0);
        sweep(11, 5, 1);
    }

    #[test]
    fn decodes_double_erasures_n13() {
        sweep(13, 6, 1);
        sweep(13, 6, 2);
    }

    #[test]
    fn decodes_within_capability_n17() {
        let d = two_star_distance(17, 6) as usize;
        sweep(17, 6, d - 1);
    }
}
