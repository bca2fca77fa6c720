//! Memoized row-by-row recursion for the number of matrices with given
//! margins.
//!
//! Rows are sorted in non-increasing order and consumed one at a time. After
//! `j` rows the remaining problem depends only on the counts vector `r` of the
//! residual column sums, so the memo is keyed by `(j, r)`. A row of sum `k`
//! leaving the state `r` is grouped by the composition `s` recording how many
//! columns of each current value it touches:
//!
//! ```text
//! binary:  N(j, r) = sum_{s <= r}       prod_i C(r_i, s_i)           N(j+1, r - s + Ls)
//! natural: M(j, r) = sum_{s <= r + Ls}  prod_i C(r_i + s_{i+1}, s_i) M(j+1, r - s + Ls)
//! ```

mod binomial;
mod compositions;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

pub use binomial::BinomialTable;
pub use compositions::{
    bounded_compositions, shifted_compositions, BoundedCompositions, ShiftedCompositions,
};

use crate::error::{Error, Result};
use crate::margins::{gale_ryser_sorted, Composition, CountsVector, MarginSpec};
use crate::BigCount;

/// Which matrix family is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Entries in `{0, 1}`.
    Binary,
    /// Entries in `{0, 1, 2, ...}`.
    Natural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    /// Short-circuit binary states that fail the Gale-Ryser test. Has no
    /// effect in natural mode.
    pub gale_ryser: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self { gale_ryser: true }
    }
}

/// Counters collected while filling a [`MemoTable`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// States stored in the table.
    pub nodes: u64,
    /// Nonzero child terms summed.
    pub terms: u64,
    /// Binary states answered zero by the Gale-Ryser test.
    pub pruned: u64,
    pub elapsed: Duration,
}

/// The completed recursion: every visited state and its count.
///
/// Built by [`count`]; read-only afterwards, apart from
/// [`count_state`](MemoTable::count_state) which may extend it.
#[derive(Debug, Clone)]
pub struct MemoTable {
    mode: Mode,
    sorted_rows: Vec<u32>,
    /// `permutation[j]` is the caller's index of sorted row `j`.
    permutation: Vec<usize>,
    /// `suffix_mass[j]` = sum of `sorted_rows[j..]`.
    suffix_mass: Vec<u64>,
    root: CountsVector,
    balanced: bool,
    levels: Vec<FxHashMap<CountsVector, BigCount>>,
    binomials: BinomialTable,
    gale_ryser: bool,
    stats: Stats,
}

/// Counts the matrices of the given family with margins `spec`, returning the
/// count together with the populated memo table.
pub fn count(spec: &MarginSpec, mode: Mode) -> (BigCount, MemoTable) {
    count_with(spec, mode, CountOptions::default())
}

pub fn count_with(spec: &MarginSpec, mode: Mode, options: CountOptions) -> (BigCount, MemoTable) {
    let mut table = MemoTable::new(spec, mode, options);
    let total = table.fill();
    (total, table)
}

// recursion depth is one frame per row
const DEEP_ROWS: usize = 512;

impl MemoTable {
    fn new(spec: &MarginSpec, mode: Mode, options: CountOptions) -> Self {
        let mut permutation: Vec<usize> = (0..spec.rows()).collect();
        // stable, so equal rows keep caller order
        permutation.sort_by(|&a, &b| spec.row_sums()[b].cmp(&spec.row_sums()[a]));
        let sorted_rows: Vec<u32> = permutation.iter().map(|&i| spec.row_sums()[i]).collect();
        let mut suffix_mass = vec![0u64; sorted_rows.len() + 1];
        for j in (0..sorted_rows.len()).rev() {
            suffix_mass[j] = suffix_mass[j + 1] + u64::from(sorted_rows[j]);
        }
        let root = spec.counts_vector();
        let nonempty = root.columns() as usize;
        Self {
            mode,
            balanced: spec.is_balanced(),
            levels: vec![FxHashMap::default(); sorted_rows.len() + 1],
            binomials: BinomialTable::new(nonempty),
            gale_ryser: options.gale_ryser,
            stats: Stats::default(),
            sorted_rows,
            permutation,
            suffix_mass,
            root,
        }
    }

    fn fill(&mut self) -> BigCount {
        if !self.balanced {
            return BigCount::zero();
        }
        let start = Instant::now();
        let root = self.root.clone();
        if self.sorted_rows.len() > DEEP_ROWS {
            let stack = 64 * 1024 + self.sorted_rows.len() * 4096;
            std::thread::scope(|scope| {
                std::thread::Builder::new()
                    .stack_size(stack)
                    .spawn_scoped(scope, || self.ensure(0, &root))
                    .expect("spawn counting thread")
                    .join()
                    .expect("counting thread panicked");
            });
        } else {
            self.ensure(0, &root);
        }
        self.stats.elapsed = start.elapsed();
        self.levels[0][&root].clone()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Row sums in the order the recursion consumes them (non-increasing).
    pub fn sorted_rows(&self) -> &[u32] {
        &self.sorted_rows
    }

    /// Maps sorted row position to the caller's row index.
    pub fn row_permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.sorted_rows.len()
    }

    /// Mass of the rows not yet consumed after `j` rows.
    pub fn remaining_mass(&self, j: usize) -> u64 {
        self.suffix_mass[j]
    }

    /// The initial state (counts vector of the column sums).
    pub fn root(&self) -> &CountsVector {
        &self.root
    }

    /// Count at the root, zero if the margins are unbalanced.
    pub fn total(&self) -> BigCount {
        self.get(0, &self.root).cloned().unwrap_or_default()
    }

    pub fn get(&self, j: usize, r: &CountsVector) -> Option<&BigCount> {
        self.levels.get(j)?.get(r)
    }

    /// Number of stored states.
    pub fn len(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every stored `(rows consumed, state, count)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &CountsVector, &BigCount)> {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(j, level)| level.iter().map(move |(r, v)| (j, r, v)))
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    pub fn binomials(&self) -> &BinomialTable {
        &self.binomials
    }

    /// True when state `(j, r)` was answered by the Gale-Ryser test rather
    /// than by expanding its children.
    pub fn is_pruned(&self, j: usize, r: &CountsVector) -> bool {
        self.mode == Mode::Binary
            && self.gale_ryser
            && j < self.rows()
            && !gale_ryser_sorted(&self.sorted_rows[j..], r)
    }

    /// Count of the residual problem with rows `sorted_rows[j..]` and column
    /// multiplicities `r`, computing and caching it if needed.
    ///
    /// Panics if `W(r)` differs from the remaining row mass, since no such
    /// state is reachable.
    pub fn count_state(&mut self, j: usize, r: &CountsVector) -> BigCount {
        assert!(j <= self.rows(), "row index {j} beyond {} rows", self.rows());
        assert_eq!(
            r.weight(),
            self.suffix_mass[j],
            "state weight must equal the remaining row mass"
        );
        self.ensure(j, r);
        self.levels[j][r].clone()
    }

    /// The compositions labelling the children of a state at row `j`.
    pub fn compositions(&self, j: usize, r: &CountsVector) -> Compositions {
        let k = u64::from(self.sorted_rows[j]);
        Compositions::new(self.mode, r.as_slice().to_vec(), k)
    }

    /// Multiplicity of the child labelled `parts` (see [`coefficient`]),
    /// without the admissibility check.
    pub(crate) fn coefficient_unchecked(&self, r: &[u32], parts: &[u32]) -> BigCount {
        product_of_binomials(self.mode, r, parts, &self.binomials)
    }

    fn ensure(&mut self, j: usize, r: &CountsVector) {
        if self.levels[j].contains_key(r) {
            return;
        }
        debug_assert_eq!(r.weight(), self.suffix_mass[j]);
        let value = if j == self.rows() {
            // weight zero forces the empty state
            BigCount::one()
        } else if self.is_pruned(j, r) {
            self.stats.pruned += 1;
            BigCount::zero()
        } else {
            self.expand(j, r)
        };
        self.stats.nodes += 1;
        self.levels[j].insert(r.clone(), value);
    }

    fn expand(&mut self, j: usize, r: &CountsVector) -> BigCount {
        let mut acc = BigCount::zero();
        let mut children = self.compositions(j, r);
        let mut child = Vec::with_capacity(r.len());
        while let Some(parts) = children.advance() {
            r.reduce_into(parts, &mut child);
            if !self.levels[j + 1].contains_key(child.as_slice()) {
                self.ensure(j + 1, &CountsVector::from_counts(child.clone()));
            }
            let sub = &self.levels[j + 1][child.as_slice()];
            if sub.is_zero() {
                continue;
            }
            match small_product(self.mode, r.as_slice(), parts, &self.binomials) {
                Some(c) => acc += sub * c,
                None => acc += product_of_binomials(self.mode, r.as_slice(), parts, &self.binomials) * sub,
            }
            self.stats.terms += 1;
        }
        acc
    }
}

/// Composition stream for either mode, with a shared lending interface.
#[derive(Debug, Clone)]
pub enum Compositions {
    Bounded(BoundedCompositions),
    Shifted(ShiftedCompositions),
}

impl Compositions {
    fn new(mode: Mode, bounds: Vec<u32>, k: u64) -> Self {
        match mode {
            Mode::Binary => Self::Bounded(BoundedCompositions::with_bounds(bounds, k)),
            Mode::Natural => Self::Shifted(ShiftedCompositions::with_bounds(bounds, k)),
        }
    }

    pub fn advance(&mut self) -> Option<&[u32]> {
        match self {
            Self::Bounded(it) => it.advance(),
            Self::Shifted(it) => it.advance(),
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.advance().map(|p| Composition::new(p.to_vec()))
    }
}

/// Number of rows that map to the child labelled `s`:
/// `prod_i C(r_i, s_i)` in binary mode, `prod_i C(r_i + s_{i+1}, s_i)` in
/// natural mode.
pub fn coefficient(
    r: &CountsVector,
    s: &Composition,
    mode: Mode,
    binomials: &BinomialTable,
) -> Result<BigCount> {
    let (r, parts) = (r.as_slice(), s.parts());
    let inadmissible = || Error::InadmissibleComposition {
        counts: r.to_vec(),
        parts: parts.to_vec(),
    };
    if parts.len() != r.len() {
        return Err(inadmissible());
    }
    for i in 0..r.len() {
        let top = match mode {
            Mode::Binary => r[i],
            Mode::Natural => r[i] + parts.get(i + 1).copied().unwrap_or(0),
        };
        if parts[i] > top {
            return Err(inadmissible());
        }
    }
    Ok(product_of_binomials(mode, r, parts, binomials))
}

/// [`product_of_binomials`] in `u128`, `None` on overflow.
fn small_product(mode: Mode, r: &[u32], parts: &[u32], binomials: &BinomialTable) -> Option<u128> {
    let mut acc: u128 = 1;
    for (i, &s) in parts.iter().enumerate() {
        let top = match mode {
            Mode::Binary => r[i],
            Mode::Natural => r[i] + parts.get(i + 1).copied().unwrap_or(0),
        };
        if s == 0 || s == top {
            continue;
        }
        acc = acc.checked_mul(binomials.get_small(top, s)?)?;
    }
    Some(acc)
}

fn product_of_binomials(mode: Mode, r: &[u32], parts: &[u32], binomials: &BinomialTable) -> BigCount {
    let mut acc = BigUint::one();
    for (i, &s) in parts.iter().enumerate() {
        let top = match mode {
            Mode::Binary => r[i],
            Mode::Natural => r[i] + parts.get(i + 1).copied().unwrap_or(0),
        };
        if s == 0 || s == top {
            continue;
        }
        acc *= binomials.get(top, s).expect("admissible composition");
    }
    acc
}
