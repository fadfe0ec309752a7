use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{edge_vector, universe_size, EdgeVector, LabeledTree};

/// Primitive polynomial for GF(2^m), bit `m` included.
fn primitive_polynomial(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0b111,
        3 => 0b1011,
        4 => 0b1_0011,
        5 => 0b10_0101,
        6 => 0b100_0011,
        7 => 0b1000_1001,
        8 => 0x11D,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        _ => return None,
    })
}

/// Successive powers of the primitive element, `powers[k] = alpha^k`.
fn field_powers(m: u32, poly: u32) -> Vec<u32> {
    let order = (1usize << m) - 1;
    let mut powers = Vec::with_capacity(order);
    let mut x = 1u32;
    for _ in 0..order {
        powers.push(x);
        x <<= 1;
        if x & (1 << m) != 0 {
            x ^= poly;
        }
    }
    powers
}

/// Shortened narrow-sense primitive binary BCH code on the edge positions of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryCodeSpec {
    pub n: usize,
    pub tree_distance: usize,
    pub length: usize,
    pub field_degree: u32,
    pub designed_distance: usize,
    pub parity_rows: usize,
    pub rank: usize,
    /// Column `j` of the parity-check matrix packed into an integer.
    #[serde(skip)]
    columns: Vec<u128>,
}

/// Builds the parity-check matrix with designed Hamming distance `2d - 1`.
pub fn build_binary_code(n: usize, d: usize) -> Result<BinaryCodeSpec> {
    let length = universe_size(n);
    if d < 2 {
        return Err(Error::InvalidParameters(format!(
            "tree distance d={d} must be at least 2"
        )));
    }
    let designed = 2 * d - 1;
    if designed > length {
        return Err(Error::InvalidParameters(format!(
            "designed distance 2d-1={designed} exceeds the edge count C({n},2)={length}"
        )));
    }
    let field_degree = usize::BITS - length.leading_zeros();
    let poly = primitive_polynomial(field_degree).ok_or_else(|| {
        Error::InvalidParameters(format!(
            "no field of degree {field_degree} available for n={n}"
        ))
    })?;
    // Odd powers 1, 3, ..., 2d-3 generate all required zeros.
    let odd: Vec<usize> = (1..=designed - 2).step_by(2).collect();
    let parity_rows = odd.len() * field_degree as usize;
    if parity_rows > 128 {
        return Err(Error::InvalidParameters(format!(
            "{parity_rows} parity rows do not fit the syndrome width"
        )));
    }
    let powers = field_powers(field_degree, poly);
    let order = powers.len();
    let columns: Vec<u128> = (0..length)
        .map(|j| {
            odd.iter().enumerate().fold(0u128, |acc, (r, &i)| {
                acc | (u128::from(powers[(i * j) % order]) << (r as u32 * field_degree))
            })
        })
        .collect();
    let rank = xor_rank(&columns);
    Ok(BinaryCodeSpec {
        n,
        tree_distance: d,
        length,
        field_degree,
        designed_distance: designed,
        parity_rows,
        rank,
        columns,
    })
}

fn xor_rank(vectors: &[u128]) -> usize {
    let mut basis = [0u128; 128];
    let mut rank = 0;
    for &v in vectors {
        let mut x = v;
        while x != 0 {
            let top = 127 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                rank += 1;
                break;
            }
            x ^= basis[top];
        }
    }
    rank
}

impl BinaryCodeSpec {
    pub fn columns(&self) -> &[u128] {
        &self.columns
    }

    pub fn syndrome_of_bits(&self, bits: &[bool]) -> u128 {
        bits.iter()
            .zip(&self.columns)
            .filter(|(b, _)| **b)
            .fold(0, |acc, (_, c)| acc ^ c)
    }

    pub fn syndrome_of_vector(&self, v: &EdgeVector) -> u128 {
        self.syndrome_of_bits(v.bits())
    }

    pub fn syndrome(&self, tree: &LabeledTree) -> u128 {
        tree.edges()
            .iter()
            .fold(0, |acc, e| acc ^ self.columns[e.index_unchecked(self.n)])
    }

    pub fn tree_syndrome_via_vector(&self, tree: &LabeledTree) -> u128 {
        self.syndrome_of_vector(&edge_vector(tree))
    }

    /// Number of codewords in each coset, `2^(length - rank)`.
    pub fn coset_size(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::from(2u8).pow((self.length - self.rank) as u32)
    }

    /// Minimum nonzero weight of the kernel by enumerating it; `None` past `max_dimension`.
    pub fn min_distance_by_scan(&self, max_dimension: usize) -> Option<usize> {
        if self.length > 128 {
            return None;
        }
        let kernel = self.kernel_basis();
        if kernel.len() > max_dimension {
            return None;
        }
        if kernel.is_empty() {
            return Some(usize::MAX);
        }
        // Gray-code walk over all nonzero combinations.
        let mut word = 0u128;
        let mut best = usize::MAX;
        for step in 1u64..(1u64 << kernel.len()) {
            word ^= kernel[step.trailing_zeros() as usize];
            best = best.min(word.count_ones() as usize);
        }
        Some(best)
    }

    /// Basis of `{x : H x = 0}` as position bitmasks.
    fn kernel_basis(&self) -> Vec<u128> {
        // Pivot slot per leading bit, holding the reduced column and the positions combined into it.
        let mut pivots: Vec<Option<(u128, u128)>> = vec![None; 128];
        let mut kernel = Vec::new();
        for (j, &col) in self.columns.iter().enumerate() {
            let (mut x, mut combo) = (col, 1u128 << j);
            loop {
                if x == 0 {
                    kernel.push(combo);
                    break;
                }
                let top = 127 - x.leading_zeros() as usize;
                match pivots[top] {
                    Some((p, c)) => {
                        x ^= p;
                        combo ^= c;
                    }
                    None => {
                        pivots[top] = Some((x, combo));
                        break;
                    }
                }
            }
        }
        kernel
    }
}

/// `n^(n-2) / 2^rank` rounded up: the pigeonhole floor on the largest bucket.
pub fn coset_size_lower_bound(spec: &BinaryCodeSpec) -> num_bigint::BigUint {
    let trees = crate::tree::tree_count(spec.n);
    let buckets = num_bigint::BigUint::from(2u8).pow(spec.rank as u32);
    num_integer::Integer::div_ceil(&trees, &buckets)
}
