//! Generators for the compositions summed over by the recursion.
//!
//! Both generators expose a lending interface ([`advance`]) that rewrites one
//! buffer in place, and an owning [`Iterator`] on top of it. The order is
//! fixed and deterministic because the sampler's child walk depends on it:
//!
//! * [`BoundedCompositions`] yields `s` with `s <= r` in lexicographic order
//!   of `(s_1, ..., s_b)`.
//! * [`ShiftedCompositions`] yields `s` with `s_i <= r_i + s_{i+1}` in
//!   lexicographic order of the reversed tuple `(s_b, ..., s_1)`, since parts
//!   are assigned from index `b` down.
//!
//! [`advance`]: BoundedCompositions::advance

use crate::margins::{Composition, CountsVector};

/// `C^r(k)`: compositions of `k` into `b = len(r)` parts with `s_i <= r_i`.
#[derive(Debug, Clone)]
pub struct BoundedCompositions {
    bounds: Vec<u32>,
    /// `cap[i]` = sum of bounds from `i` to the end.
    cap: Vec<u64>,
    parts: Vec<u32>,
    /// Mass left to distribute before slot `i` is assigned.
    rem: Vec<u64>,
    started: bool,
    done: bool,
}

impl BoundedCompositions {
    pub fn new(r: &CountsVector, k: u64) -> Self {
        Self::with_bounds(r.as_slice().to_vec(), k)
    }

    pub(crate) fn with_bounds(bounds: Vec<u32>, k: u64) -> Self {
        let b = bounds.len();
        let mut cap = vec![0u64; b + 1];
        for i in (0..b).rev() {
            cap[i] = cap[i + 1] + u64::from(bounds[i]);
        }
        let mut it = Self {
            parts: vec![0; b],
            rem: vec![0; b + 1],
            done: k > cap[0],
            bounds,
            cap,
            started: false,
        };
        if !it.done {
            it.fill(0, k);
        }
        it
    }

    /// Assigns the smallest feasible value to every slot from `from` on.
    fn fill(&mut self, from: usize, mut rem: u64) {
        for i in from..self.parts.len() {
            self.rem[i] = rem;
            let lo = rem.saturating_sub(self.cap[i + 1]);
            self.parts[i] = lo as u32;
            rem -= lo;
        }
        self.rem[self.parts.len()] = rem;
        debug_assert_eq!(rem, 0);
    }

    /// Moves to the next composition and returns it, or `None` when exhausted.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let b = self.parts.len();
        // the last slot is forced by the remaining sum
        for i in (0..b.saturating_sub(1)).rev() {
            let hi = u64::from(self.bounds[i]).min(self.rem[i]);
            if u64::from(self.parts[i]) < hi {
                self.parts[i] += 1;
                let rem = self.rem[i] - u64::from(self.parts[i]);
                self.fill(i + 1, rem);
                return Some(&self.parts);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for BoundedCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.advance().map(|p| Composition::new(p.to_vec()))
    }
}

/// `{s : s in C^{r+Ls}(k)}`: compositions of `k` into `b = len(r)` parts with
/// `s_i <= r_i + s_{i+1}` (and `s_{b+1} = 0`).
#[derive(Debug, Clone)]
pub struct ShiftedCompositions {
    bounds: Vec<u32>,
    /// `below[i]` = `sum_{t < i} (t + 1) * r_t`, the most mass slots `0..i`
    /// can absorb beyond what the shift from slot `i` provides.
    below: Vec<u64>,
    parts: Vec<u32>,
    rem: Vec<u64>,
    started: bool,
    done: bool,
}

impl ShiftedCompositions {
    pub fn new(r: &CountsVector, k: u64) -> Self {
        Self::with_bounds(r.as_slice().to_vec(), k)
    }

    pub(crate) fn with_bounds(bounds: Vec<u32>, k: u64) -> Self {
        let b = bounds.len();
        let mut below = vec![0u64; b + 1];
        for i in 0..b {
            below[i + 1] = below[i] + (i as u64 + 1) * u64::from(bounds[i]);
        }
        let mut it = Self {
            parts: vec![0; b],
            rem: vec![0; b + 1],
            done: k > below[b],
            bounds,
            below,
            started: false,
        };
        if !it.done {
            it.fill(b, k);
        }
        it
    }

    fn hi(&self, i: usize) -> u64 {
        let carry = self.parts.get(i + 1).copied().unwrap_or(0);
        (u64::from(self.bounds[i]) + u64::from(carry)).min(self.rem[i])
    }

    /// Slot `i` (value `i + 1`) must take at least enough that slots below it
    /// can still absorb the rest: `rem <= (i + 1) * s_i + below[i]`.
    fn lo(&self, i: usize, rem: u64) -> u64 {
        let need = rem.saturating_sub(self.below[i]);
        need.div_ceil(i as u64 + 1)
    }

    /// Assigns the smallest feasible value to every slot below `upto`.
    fn fill(&mut self, upto: usize, mut rem: u64) {
        for i in (0..upto).rev() {
            self.rem[i] = rem;
            let lo = self.lo(i, rem);
            debug_assert!(lo <= self.hi(i));
            self.parts[i] = lo as u32;
            rem -= lo;
        }
        debug_assert_eq!(rem, 0);
    }

    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let b = self.parts.len();
        // slot 0 is forced; try to bump the lowest-significance slot first
        for i in 1..b {
            if u64::from(self.parts[i]) < self.hi(i) {
                self.parts[i] += 1;
                let rem = self.rem[i] - u64::from(self.parts[i]);
                self.fill(i, rem);
                return Some(&self.parts);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for ShiftedCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        self.advance().map(|p| Composition::new(p.to_vec()))
    }
}

/// Bounded compositions `s <= r` summing to `k`, lexicographic order.
pub fn bounded_compositions(r: &CountsVector, k: u64) -> BoundedCompositions {
    BoundedCompositions::new(r, k)
}

/// Shifted compositions `s <= r + Ls` summing to `k`, reversed-lexicographic
/// order.
pub fn shifted_compositions(r: &CountsVector, k: u64) -> ShiftedCompositions {
    ShiftedCompositions::new(r, k)
}
