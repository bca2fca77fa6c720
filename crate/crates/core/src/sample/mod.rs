//! Exact uniform sampling driven by a completed [`MemoTable`].
//!
//! Each row is drawn in two steps. First a child of the current state is
//! picked with probability proportional to (number of rows mapping to it) x
//! (count of the child), by drawing a uniform integer in `1..=count` and
//! walking the children in generator order. Then one of the rows mapping to
//! that child is picked uniformly. Given uniform input bits the resulting
//! matrix is exactly uniform over all matrices with the margins.

mod random;
mod rows;

use num_traits::Zero;

pub use random::RandomSource;
pub use rows::{reconstruct_row_binary, reconstruct_row_natural, ColumnState};

use crate::enumerate::{count, MemoTable, Mode};
use crate::error::{Error, Result};
use crate::margins::{Composition, CountsVector, MarginSpec};
use crate::{BigCount, Matrix};

/// Everything needed for repeated draws. Immutable once built, so one
/// context can serve concurrent draws as long as each draw has its own
/// [`RandomSource`].
#[derive(Debug, Clone)]
pub struct SamplerContext {
    spec: MarginSpec,
    table: MemoTable,
    total: BigCount,
}

impl SamplerContext {
    /// Runs the counter and binds its table to the margins.
    pub fn prepare(spec: &MarginSpec, mode: Mode) -> Result<Self> {
        let (_, table) = count(spec, mode);
        Self::from_table(spec, table)
    }

    /// Uses a table already built by [`count`] for the same margins.
    pub fn from_table(spec: &MarginSpec, table: MemoTable) -> Result<Self> {
        assert_eq!(table.rows(), spec.rows(), "table built for different margins");
        assert_eq!(table.root(), &spec.counts_vector(), "table built for different margins");
        let total = table.total();
        if total.is_zero() {
            return Err(Error::Infeasible);
        }
        Ok(Self {
            spec: spec.clone(),
            table,
            total,
        })
    }

    pub fn spec(&self) -> &MarginSpec {
        &self.spec
    }

    pub fn mode(&self) -> Mode {
        self.table.mode()
    }

    pub fn table(&self) -> &MemoTable {
        &self.table
    }

    /// Number of matrices being sampled from.
    pub fn total(&self) -> &BigCount {
        &self.total
    }

    /// Picks the composition for row `j` out of state `r`, with probability
    /// `coefficient(r, s) * count(j + 1, r - s + Ls) / count(j, r)`.
    pub fn select_child(&self, j: usize, r: &CountsVector, rng: &mut RandomSource) -> Result<Composition> {
        let here = self.table.get(j, r).ok_or(Error::Infeasible)?;
        let target = rng.uniform_bigint(here)?;
        let mut cumulative = BigCount::zero();
        let mut chosen = None;
        let mut children = self.table.compositions(j, r);
        while let Some(parts) = children.advance() {
            let child = r.reduce_unchecked(parts);
            let sub = self
                .table
                .get(j + 1, &child)
                .expect("children of an expanded state are in the table");
            if sub.is_zero() {
                continue;
            }
            cumulative += self.table.coefficient_unchecked(r.as_slice(), parts) * sub;
            if chosen.is_none() && cumulative >= target {
                chosen = Some(Composition::new(parts.to_vec()));
            }
        }
        assert_eq!(&cumulative, here, "child weights must partition the state count");
        Ok(chosen.expect("target lies within the state count"))
    }

    /// Draws one matrix, rows in the caller's original order.
    pub fn draw(&self, rng: &mut RandomSource) -> Matrix {
        let m = self.spec.rows();
        let mut columns = ColumnState::new(self.spec.col_sums().to_vec());
        let mut state = self.table.root().clone();
        let mut out = vec![Vec::new(); m];
        for j in 0..m {
            let s = self
                .select_child(j, &state, rng)
                .expect("reachable states have a positive count");
            let row = match self.mode() {
                Mode::Binary => reconstruct_row_binary(&columns, &s, rng),
                Mode::Natural => reconstruct_row_natural(&columns, &s, rng),
            }
            .expect("selected composition is admissible");
            columns.remove_row(&row);
            state = state.reduce_unchecked(s.parts());
            assert_eq!(columns.counts(), state, "column sums drifted from the recursion state");
            assert_eq!(columns.total(), self.table.remaining_mass(j + 1));
            out[self.table.row_permutation()[j]] = row;
        }
        out
    }

    /// `num` consecutive draws from one stream.
    pub fn draw_many(&self, rng: &mut RandomSource, num: usize) -> Vec<Matrix> {
        (0..num).map(|_| self.draw(rng)).collect()
    }
}
