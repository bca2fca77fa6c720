//! Recovering an actual row from the composition chosen by the sampler.
//!
//! The recursion only tracks how many columns sit at each value. Given the
//! real column sums `v` and a composition `s`, these functions pick one of
//! the rows `u` with `counts(v - u) = counts(v) - s + Ls` uniformly at
//! random.

use crate::error::{Error, Result};
use crate::margins::{Composition, CountsVector};
use crate::sample::RandomSource;

/// Current column sums in caller column order, with the columns bucketed by
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnState {
    sums: Vec<u32>,
}

impl ColumnState {
    pub fn new(sums: Vec<u32>) -> Self {
        Self { sums }
    }

    pub fn sums(&self) -> &[u32] {
        &self.sums
    }

    pub fn counts(&self) -> CountsVector {
        CountsVector::from_sums(&self.sums)
    }

    pub fn total(&self) -> u64 {
        self.sums.iter().map(|&x| u64::from(x)).sum()
    }

    /// `buckets()[i]` lists, in column order, the columns whose sum is `i + 1`.
    pub fn buckets(&self) -> Vec<Vec<usize>> {
        let max = self.sums.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); max];
        for (j, &v) in self.sums.iter().enumerate() {
            if v > 0 {
                out[v as usize - 1].push(j);
            }
        }
        out
    }

    /// Subtracts a placed row.
    pub fn remove_row(&mut self, row: &[u32]) {
        for (v, &u) in self.sums.iter_mut().zip(row) {
            *v -= u;
        }
    }
}

/// Binary row: for each value `i`, a uniform `s_i`-subset of the columns at
/// value `i` receives a one.
pub fn reconstruct_row_binary(
    state: &ColumnState,
    s: &Composition,
    rng: &mut RandomSource,
) -> Result<Vec<u32>> {
    let buckets = state.buckets();
    let parts = s.parts();
    let inadmissible = || Error::InadmissibleComposition {
        counts: state.counts().as_slice().to_vec(),
        parts: parts.to_vec(),
    };
    if parts.len() > buckets.len() && parts[buckets.len()..].iter().any(|&x| x > 0) {
        return Err(inadmissible());
    }
    let mut row = vec![0u32; state.sums.len()];
    for (bucket, &want) in buckets.into_iter().zip(parts) {
        if want as usize > bucket.len() {
            return Err(inadmissible());
        }
        for j in choose_subset(bucket, want as usize, rng)? {
            row[j] = 1;
        }
    }
    Ok(row)
}

/// Natural row. With `t = counts(v) - s + Ls`, walk values `i` from the
/// largest down, adding the columns at value `i` to a pool of unchosen
/// columns; pick `t_i` of the pool uniformly and leave each of them at `i`
/// (entry `v_j - i`). Columns never picked are emptied (entry `v_j`).
pub fn reconstruct_row_natural(
    state: &ColumnState,
    s: &Composition,
    rng: &mut RandomSource,
) -> Result<Vec<u32>> {
    let counts = state.counts();
    let buckets = state.buckets();
    let parts = s.parts();
    let inadmissible = || Error::InadmissibleComposition {
        counts: counts.as_slice().to_vec(),
        parts: parts.to_vec(),
    };
    let d = buckets.len();
    if parts.len() > d && parts[d..].iter().any(|&x| x > 0) {
        return Err(inadmissible());
    }
    let part = |i: usize| i64::from(parts.get(i).copied().unwrap_or(0));
    let mut row = vec![0u32; state.sums.len()];
    let mut pool: Vec<usize> = Vec::new();
    for (i, bucket) in buckets.into_iter().enumerate().rev() {
        let keep = i64::from(counts.as_slice()[i]) - part(i) + part(i + 1);
        pool.extend(bucket);
        if keep < 0 || keep as usize > pool.len() {
            return Err(inadmissible());
        }
        let value = i as u32 + 1;
        let chosen = choose_prefix(&mut pool, keep as usize, rng)?;
        for j in pool.drain(..chosen) {
            row[j] = state.sums[j] - value;
        }
    }
    for j in pool {
        row[j] = state.sums[j];
    }
    Ok(row)
}

/// Moves a uniform `k`-subset of `pool` to its front (partial Fisher-Yates)
/// and returns `k`.
fn choose_prefix(pool: &mut [usize], k: usize, rng: &mut RandomSource) -> Result<usize> {
    for t in 0..k {
        let pick = t + rng.uniform_below(pool.len() - t)?;
        pool.swap(t, pick);
    }
    Ok(k)
}

fn choose_subset(mut pool: Vec<usize>, k: usize, rng: &mut RandomSource) -> Result<Vec<usize>> {
    choose_prefix(&mut pool, k, rng)?;
    pool.truncate(k);
    Ok(pool)
}
