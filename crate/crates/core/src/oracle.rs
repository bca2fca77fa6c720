//! Brute-force reference counts for small instances.
//!
//! Fills the matrix cell by cell, tracking remaining row and column sums.
//! Shares nothing with the recursion beyond [`MarginSpec`], so agreement
//! between the two is real evidence.

use std::collections::HashMap;

use crate::enumerate::Mode;
use crate::error::{Error, Result};
use crate::margins::MarginSpec;
use crate::{BigCount, Matrix};

/// Largest `m * n` the oracle accepts.
pub const MAX_CELLS: usize = 20;
/// Largest single margin the oracle accepts.
pub const MAX_MARGIN: u32 = 4;
/// Largest list [`brute_enumerate`] will build.
pub const MAX_LISTED: usize = 100_000;

/// All matrices with given margins, indexed by their row-major byte encoding.
#[derive(Debug, Clone, Default)]
pub struct MatrixList {
    matrices: Vec<Matrix>,
    index: HashMap<Vec<u8>, usize>,
}

impl MatrixList {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Position of `m` in the list, if present.
    pub fn position(&self, m: &[Vec<u32>]) -> Option<usize> {
        self.index.get(&encode(m)?).copied()
    }

    pub fn contains(&self, m: &[Vec<u32>]) -> bool {
        self.position(m).is_some()
    }

    fn push(&mut self, m: Matrix) {
        let key = encode(&m).expect("oracle entries fit in a byte");
        let pos = self.matrices.len();
        let prev = self.index.insert(key, pos);
        debug_assert!(prev.is_none(), "duplicate matrix");
        self.matrices.push(m);
    }
}

/// Row-major bytes, `None` if an entry exceeds `u8`.
pub fn encode(m: &[Vec<u32>]) -> Option<Vec<u8>> {
    m.iter()
        .flatten()
        .map(|&x| u8::try_from(x).ok())
        .collect()
}

fn guard(spec: &MarginSpec) -> Result<()> {
    let cells = spec.rows() * spec.cols();
    if cells > MAX_CELLS {
        return Err(Error::OracleGuard(format!("{cells} cells > {MAX_CELLS}")));
    }
    let max = spec.max_row_sum().max(spec.max_col_sum());
    if max > MAX_MARGIN {
        return Err(Error::OracleGuard(format!("margin {max} > {MAX_MARGIN}")));
    }
    Ok(())
}

struct Filler {
    m: usize,
    n: usize,
    cap: u32,
    row_left: Vec<u32>,
    col_left: Vec<u32>,
    cells: Vec<u32>,
}

impl Filler {
    fn new(spec: &MarginSpec, mode: Mode) -> Self {
        Self {
            m: spec.rows(),
            n: spec.cols(),
            cap: match mode {
                Mode::Binary => 1,
                Mode::Natural => u32::MAX,
            },
            row_left: spec.row_sums().to_vec(),
            col_left: spec.col_sums().to_vec(),
            cells: vec![0; spec.rows() * spec.cols()],
        }
    }

    /// Visits every completion from cell `at` on; `visit` returns false to
    /// stop early.
    fn run(&mut self, at: usize, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if at == self.m * self.n {
            return visit(&self.cells);
        }
        let (i, j) = (at / self.n, at % self.n);
        let hi = self.row_left[i].min(self.col_left[j]).min(self.cap);
        // the last cell of a row or column is forced
        let lo = if j + 1 == self.n {
            self.row_left[i]
        } else if i + 1 == self.m {
            self.col_left[j]
        } else {
            0
        };
        if lo > hi {
            return true;
        }
        let hi = if j + 1 == self.n || i + 1 == self.m { lo } else { hi };
        for x in lo..=hi {
            self.cells[at] = x;
            self.row_left[i] -= x;
            self.col_left[j] -= x;
            let go_on = self.run(at + 1, visit);
            self.row_left[i] += x;
            self.col_left[j] += x;
            if !go_on {
                return false;
            }
        }
        self.cells[at] = 0;
        true
    }
}

fn complete(spec: &MarginSpec, mode: Mode, visit: &mut dyn FnMut(&[u32]) -> bool) {
    if !spec.is_balanced() {
        return;
    }
    if spec.rows() == 0 || spec.cols() == 0 {
        // only the empty matrix, and only if every margin is zero
        if spec.row_total() == 0 {
            visit(&[]);
        }
        return;
    }
    Filler::new(spec, mode).run(0, visit);
}

/// Number of matrices by exhaustive filling.
pub fn brute_count(spec: &MarginSpec, mode: Mode) -> Result<BigCount> {
    guard(spec)?;
    let mut total = 0u64;
    complete(spec, mode, &mut |_| {
        total += 1;
        true
    });
    Ok(total.into())
}

/// Every matrix with the given margins.
pub fn brute_enumerate(spec: &MarginSpec, mode: Mode) -> Result<MatrixList> {
    guard(spec)?;
    let (m, n) = (spec.rows(), spec.cols());
    let mut list = MatrixList::default();
    let mut overflow = false;
    complete(spec, mode, &mut |cells| {
        if list.len() == MAX_LISTED {
            overflow = true;
            return false;
        }
        let matrix: Matrix = if n == 0 {
            vec![Vec::new(); m]
        } else {
            cells.chunks(n).map(<[u32]>::to_vec).collect()
        };
        list.push(matrix);
        true
    });
    if overflow {
        return Err(Error::OracleGuard(format!("more than {MAX_LISTED} matrices")));
    }
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> MarginSpec {
        MarginSpec::new(vec![2, 2, 1, 1], vec![3, 2, 1])
    }

    #[test]
    fn toy_counts() {
        assert_eq!(brute_count(&toy(), Mode::Binary).unwrap(), 8u32.into());
        assert_eq!(brute_count(&toy(), Mode::Natural).unwrap(), 24u32.into());
    }

    #[test]
    fn toy_binary_list_is_the_eight_matrices() {
        let listed = brute_enumerate(&toy(), Mode::Binary).unwrap();
        let expect: [[[u32; 3]; 4]; 8] = [
            [[1, 1, 0], [1, 1, 0], [1, 0, 0], [0, 0, 1]],
            [[1, 1, 0], [1, 1, 0], [0, 0, 1], [1, 0, 0]],
            [[1, 1, 0], [1, 0, 1], [1, 0, 0], [0, 1, 0]],
            [[1, 1, 0], [1, 0, 1], [0, 1, 0], [1, 0, 0]],
            [[1, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 0]],
            [[1, 0, 1], [1, 1, 0], [1, 0, 0], [0, 1, 0]],
            [[1, 0, 1], [1, 1, 0], [0, 1, 0], [1, 0, 0]],
            [[0, 1, 1], [1, 1, 0], [1, 0, 0], [1, 0, 0]],
        ];
        assert_eq!(listed.len(), 8);
        for m in expect {
            let m: Matrix = m.iter().map(|r| r.to_vec()).collect();
            assert!(listed.contains(&m), "{m:?}");
        }
    }

    #[test]
    fn forced_cases() {
        let spec = MarginSpec::new(vec![1, 1], vec![1, 1]);
        let list = brute_enumerate(&spec, Mode::Binary).unwrap();
        assert_eq!(list.len(), 2);
        assert!(list.contains(&[vec![1, 0], vec![0, 1]]));
        assert!(list.contains(&[vec![0, 1], vec![1, 0]]));

        let spec = MarginSpec::new(vec![2], vec![1, 1]);
        let list = brute_enumerate(&spec, Mode::Natural).unwrap();
        assert_eq!(list.matrices(), &[vec![vec![1, 1]]]);
    }

    #[test]
    fn zero_and_degenerate_margins() {
        for mode in [Mode::Binary, Mode::Natural] {
            assert_eq!(brute_count(&MarginSpec::new(vec![0, 0], vec![0]), mode).unwrap(), 1u32.into());
            assert_eq!(brute_count(&MarginSpec::default(), mode).unwrap(), 1u32.into());
            assert_eq!(brute_count(&MarginSpec::new(vec![0, 0], vec![]), mode).unwrap(), 1u32.into());
            assert_eq!(brute_count(&MarginSpec::new(vec![], vec![1]), mode).unwrap(), 0u32.into());
            assert_eq!(brute_count(&MarginSpec::new(vec![2], vec![1]), mode).unwrap(), 0u32.into());
        }
        assert_eq!(brute_count(&MarginSpec::new(vec![2], vec![2]), Mode::Binary).unwrap(), 0u32.into());
    }

    #[test]
    fn list_matches_count_and_margins() {
        let spec = MarginSpec::new(vec![2, 3, 1, 2], vec![1, 3, 2, 2]);
        for mode in [Mode::Binary, Mode::Natural] {
            let list = brute_enumerate(&spec, mode).unwrap();
            assert_eq!(BigCount::from(list.len()), brute_count(&spec, mode).unwrap());
            for m in list.matrices() {
                assert!(spec.is_satisfied_by(m));
                if mode == Mode::Binary {
                    assert!(m.iter().flatten().all(|&x| x <= 1));
                }
            }
        }
    }

    #[test]
    fn guard_refuses_large_instances() {
        let big = MarginSpec::new(vec![1; 5], vec![1; 5]);
        assert!(matches!(brute_count(&big, Mode::Binary), Err(Error::OracleGuard(_))));
        let heavy = MarginSpec::new(vec![5], vec![5]);
        assert!(matches!(brute_enumerate(&heavy, Mode::Natural), Err(Error::OracleGuard(_))));
    }
}
