//! Margin types and the small calculus the recursion is written in.
//!
//! Vectors indexed by a column *value* (counts vectors and compositions) are
//! stored zero-based: slot `0` holds the entry for value `1`.

use std::borrow::Borrow;
use std::fmt;

use crate::error::{Error, Result};

/// Row sums `p` and column sums `q` of a matrix family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MarginSpec {
    row_sums: Vec<u32>,
    col_sums: Vec<u32>,
}

impl MarginSpec {
    pub fn new(row_sums: Vec<u32>, col_sums: Vec<u32>) -> Self {
        Self { row_sums, col_sums }
    }

    pub fn row_sums(&self) -> &[u32] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u32] {
        &self.col_sums
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.row_sums.len()
    }

    /// Number of columns `n`.
    pub fn cols(&self) -> usize {
        self.col_sums.len()
    }

    pub fn max_row_sum(&self) -> u32 {
        self.row_sums.iter().copied().max().unwrap_or(0)
    }

    pub fn max_col_sum(&self) -> u32 {
        self.col_sums.iter().copied().max().unwrap_or(0)
    }

    pub fn row_total(&self) -> u64 {
        self.row_sums.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn col_total(&self) -> u64 {
        self.col_sums.iter().map(|&x| u64::from(x)).sum()
    }

    /// True when the row and column totals agree.
    pub fn is_balanced(&self) -> bool {
        self.row_total() == self.col_total()
    }

    /// Swaps the roles of rows and columns. Counts are invariant under this.
    pub fn transposed(&self) -> Self {
        Self::new(self.col_sums.clone(), self.row_sums.clone())
    }

    pub fn counts_vector(&self) -> CountsVector {
        CountsVector::from_sums(&self.col_sums)
    }

    /// Checks that `matrix` is `m x n` with exactly these margins.
    pub fn is_satisfied_by(&self, matrix: &[Vec<u32>]) -> bool {
        if matrix.len() != self.rows() {
            return false;
        }
        let mut cols = vec![0u64; self.cols()];
        for (row, &p) in matrix.iter().zip(&self.row_sums) {
            if row.len() != self.cols() {
                return false;
            }
            if row.iter().map(|&x| u64::from(x)).sum::<u64>() != u64::from(p) {
                return false;
            }
            for (acc, &x) in cols.iter_mut().zip(row) {
                *acc += u64::from(x);
            }
        }
        cols.iter().zip(&self.col_sums).all(|(&a, &q)| a == u64::from(q))
    }
}

/// Column-sum multiplicities: entry `i` (zero-based) is the number of columns
/// whose current sum is `i + 1`. Always kept with trailing zeros trimmed, so
/// equal vectors hash equal.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CountsVector(Vec<u32>);

impl CountsVector {
    /// Builds the counts vector of a sequence of column sums. Zero sums fall
    /// in no bucket.
    pub fn from_sums(sums: &[u32]) -> Self {
        let max = sums.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &s in sums.iter().filter(|&&s| s > 0) {
            counts[s as usize - 1] += 1;
        }
        Self(counts)
    }

    /// Wraps raw multiplicities, trimming trailing zeros.
    pub fn from_counts(mut counts: Vec<u32>) -> Self {
        trim(&mut counts);
        Self(counts)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Largest column value present (`b`), zero when empty.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonempty columns.
    pub fn columns(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// `W(r) = sum_i i * r_i`, the total remaining column mass.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * u64::from(c))
            .sum()
    }

    /// `r - s + Ls`: the state after placing a row that takes one unit from
    /// `s_i` of the columns currently at value `i`.
    pub fn reduce(&self, s: &Composition) -> Result<CountsVector> {
        let parts = s.parts();
        let len = self.0.len().max(parts.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let r = i64::from(self.0.get(i).copied().unwrap_or(0));
            let si = i64::from(parts.get(i).copied().unwrap_or(0));
            let next = i64::from(parts.get(i + 1).copied().unwrap_or(0));
            let v = r - si + next;
            if v < 0 {
                return Err(Error::ReduceUnderflow { index: i });
            }
            out.push(v as u32);
        }
        Ok(Self::from_counts(out))
    }

    /// [`reduce`](Self::reduce) for callers that already hold an admissible
    /// composition of the same length.
    pub(crate) fn reduce_unchecked(&self, parts: &[u32]) -> CountsVector {
        let mut out = Vec::with_capacity(self.0.len());
        self.reduce_into(parts, &mut out);
        Self(out)
    }

    /// Writes the trimmed entries of `r - s + Ls` into `out`.
    pub(crate) fn reduce_into(&self, parts: &[u32], out: &mut Vec<u32>) {
        debug_assert_eq!(parts.len(), self.0.len());
        let b = self.0.len();
        out.clear();
        for i in 0..b {
            let next = if i + 1 < b { parts[i + 1] } else { 0 };
            out.push(self.0[i] + next - parts[i]);
        }
        trim(out);
    }
}

impl fmt::Debug for CountsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("CountsVector").field(&self.0).finish()
    }
}

// Hashes and compares like its entries, so maps keyed by counts vectors can
// be probed with a plain slice.
impl Borrow<[u32]> for CountsVector {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for CountsVector {
    fn from(counts: Vec<u32>) -> Self {
        Self::from_counts(counts)
    }
}

/// A weak composition `s` of `k`, indexed like a [`CountsVector`]: part `i`
/// (zero-based) is the number of columns at value `i + 1` that receive an
/// entry from the row being placed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Self(parts)
    }
}

/// The conjugate `r'_i = #{j : r_j >= i}` for `i = 1..=max(r)`.
pub fn conjugate(r: &[u32]) -> Vec<u32> {
    let max = r.iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![0u32; max];
    for &x in r {
        for slot in out.iter_mut().take(x as usize) {
            *slot += 1;
        }
    }
    out
}

/// Gale-Ryser test: does a binary matrix with row sums `p` and column
/// multiplicities `q_counts` exist?
pub fn gale_ryser_feasible(p: &[u32], q_counts: &CountsVector) -> bool {
    let mut sorted = p.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    gale_ryser_sorted(&sorted, q_counts)
}

/// Gale-Ryser on row sums already in non-increasing order.
pub(crate) fn gale_ryser_sorted(p_desc: &[u32], q_counts: &CountsVector) -> bool {
    debug_assert!(p_desc.windows(2).all(|w| w[0] >= w[1]));
    let total: u64 = p_desc.iter().map(|&x| u64::from(x)).sum();
    if total != q_counts.weight() {
        return false;
    }
    let counts = q_counts.as_slice();
    // conjugate of q from suffix sums of the counts vector
    let mut conj = vec![0u64; counts.len()];
    let mut acc = 0u64;
    for i in (0..counts.len()).rev() {
        acc += u64::from(counts[i]);
        conj[i] = acc;
    }
    let m = p_desc.len();
    let (mut lhs, mut rhs) = (0u64, 0u64);
    for (j, &pj) in p_desc.iter().enumerate() {
        lhs += u64::from(pj);
        rhs += conj.get(j).copied().unwrap_or(0);
        if j + 1 < m && lhs > rhs {
            return false;
        }
    }
    lhs == rhs
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}
