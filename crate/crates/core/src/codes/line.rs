use crate::codes::decode::confirm;
use crate::codes::TreeCode;
use crate::error::{out_of_range, Error, Result};
use crate::tree::{line, Forest, LabeledTree};

/// Zigzag order `s, s-1, s+1, s-2, s+2, ...` modulo `n`.
pub fn zigzag_order(n: usize, s: usize) -> Vec<usize> {
    (0..n)
        .map(|i| {
            let k = i.div_ceil(2);
            if i % 2 == 0 {
                (s + k) % n
            } else {
                (s + n - k % n) % n
            }
        })
        .collect()
}

/// Edge-disjoint Hamiltonian paths `T_0 .. T_{floor(n/2)-1}`; distance `n - 1`.
pub fn construct_line_code(n: usize) -> Result<TreeCode> {
    if n < 3 {
        return Err(out_of_range("n", n, "n >= 3"));
    }
    let words = (0..n / 2)
        .map(|s| line(n, &zigzag_order(n, s)))
        .collect::<Result<Vec<_>>>()?;
    TreeCode::new(n, n - 1, words)
}

/// Any surviving edge identifies its codeword.
pub fn decode_line_code(code: &TreeCode, forest: &Forest) -> Result<LabeledTree> {
    let edge = forest
        .edges()
        .first()
        .ok_or_else(|| Error::Undecodable("every edge was erased".into()))?;
    let word = code
        .codewords()
        .iter()
        .find(|w| w.contains_edge(edge))
        .ok_or_else(|| Error::ChannelViolation(format!("edge {edge} belongs to no codeword")))?;
    confirm(code, forest, word.clone())
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;
    use crate::codes::{generic_erasure_decode, min_tree_distance};

    #[test]
    fn zigzag_endpoints() {
        assert_eq!(zigzag_order(5, 0), vec![0, 4, 1, 3, 2]);
        assert_eq!(zigzag_order(6, 1), vec![1, 0, 2, 5, 3, 4]);
        for n in 3..20 {
            for s in 0..n / 2 {
                let order = zigzag_order(n, s);
                let last = if n % 2 == 1 {
                    (s + (n - 1) / 2) % n
                } else {
                    (s + n - n / 2) % n
                };
                assert_eq!(order[n - 1], last);
            }
        }
    }

    #[test]
    fn sizes_and_distance() {
        assert_eq!(construct_line_code(10).unwrap().len(), 5);
        assert_eq!(construct_line_code(3).unwrap().len(), 1);
        assert!(construct_line_code(2).is_err());
        assert_eq!(min_tree_distance(&construct_line_code(8).unwrap()), Some(7));
        let four = construct_line_code(4).unwrap();
        assert_eq!(four.codewords()[0].shared_edges(&four.codewords()[1]), 0);
    }

    #[test]
    fn pairwise_disjoint_up_to_forty() {
        for n in 3..=40 {
            let code = construct_line_code(n).unwrap();
            for (a, b) in code.codewords().iter().tuple_combinations() {
                assert_eq!(a.shared_edges(b), 0, "n={n}");
            }
        }
    }

    #[test]
    fn decodes_every_heavy_erasure() {
        let code = construct_line_code(10).unwrap();
        let word = &code.codewords()[2];
        for removed in word.edges().iter().copied().combinations(8) {
            let f = word.remove_edges(&removed).unwrap();
            assert_eq!(&decode_line_code(&code, &f).unwrap(), word);
            assert_eq!(generic_erasure_decode(&code, &f).unwrap(), *word);
        }
        assert_eq!(&decode_line_code(&code, &word.as_forest()).unwrap(), word);
    }

    #[test]
    fn rejects_bad_forests() {
        let code = construct_line_code(6).unwrap();
        let empty = Forest::new(6, []).unwrap();
        assert!(matches!(
            decode_line_code(&code, &empty),
            Err(Error::Undecodable(_))
        ));
        // Edges from two different codewords.
        let mixed: Forest = "n=6; edges=0-1,0-5".parse().unwrap();
        assert!(matches!(
            decode_line_code(&code, &mixed),
            Err(Error::ChannelViolation(_))
        ));
        // For odd n some edges lie in no codeword.
        let seven = construct_line_code(7).unwrap();
        let orphan = crate::tree::Edge::from_index(
            (0..21)
                .find(|&i| {
                    let e = crate::tree::Edge::from_index(i, 7).unwrap();
                    !seven.codewords().iter().any(|w| w.contains_edge(&e))
                })
                .unwrap(),
            7,
        )
        .unwrap();
        let f = Forest::new(7, [orphan]).unwrap();
        assert!(matches!(
            decode_line_code(&seven, &f),
            Err(Error::ChannelViolation(_))
        ));
    }
}
