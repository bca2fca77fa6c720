//! Ehrhart polynomials of the Birkhoff polytope.
//!
//! `H_n(r)`, the number of `n x n` non-negative integer matrices with every
//! row and column summing to `r`, is a polynomial in `r` of degree
//! `d = (n-1)^2`. It vanishes at `r = -1, ..., -(n-1)` and satisfies the
//! reciprocity `H_n(-n-r) = (-1)^d H_n(r)`. Counting `H_n(0..=k)` directly for
//! `k = C(n-1, 2)` and filling in the other `d - k` nodes from those two
//! facts gives `d + 1` interpolation points; an exact Vandermonde solve then
//! yields the coefficients.

mod bareiss;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use bareiss::solve as solve_exact;

use crate::enumerate::{count, Mode};
use crate::margins::MarginSpec;
use crate::BigCount;

/// Largest `n` the tooling is exercised on.
pub const SUPPORTED_MAX_N: usize = 8;

/// `k = C(n-1, 2)`: number of positive values computed directly.
pub fn direct_values(n: usize) -> usize {
    (n - 1) * n.saturating_sub(2) / 2
}

/// `d = (n-1)^2`.
pub fn degree(n: usize) -> usize {
    (n - 1) * (n - 1)
}

/// `H_n(r)` by direct counting.
pub fn h_value(n: usize, r: u32) -> BigCount {
    let spec = MarginSpec::new(vec![r; n], vec![r; n]);
    count(&spec, Mode::Natural).0
}

/// `H_n(r)` for each `r` in `rs`, computed in parallel.
pub fn h_values(n: usize, rs: impl IntoIterator<Item = u32>) -> Vec<BigCount> {
    let rs: Vec<u32> = rs.into_iter().collect();
    rs.par_iter().map(|&r| h_value(n, r)).collect()
}

/// The values `H_n(x)` at the `d + 1` nodes `x = -n-k+1, ..., k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyVector {
    n: usize,
    values: Vec<BigInt>,
}

impl StanleyVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Interpolation nodes, ascending.
    pub fn nodes(&self) -> impl Iterator<Item = i64> {
        node_range(self.n)
    }
}

fn node_range(n: usize) -> impl Iterator<Item = i64> {
    let k = direct_values(n) as i64;
    let n = n as i64;
    (1 - n - k)..=k
}

/// Builds the node vector from `H_n(0), ..., H_n(k)`.
pub fn stanley_vector_from(n: usize, direct: &[BigCount]) -> StanleyVector {
    assert!(n >= 2, "need n >= 2");
    let k = direct_values(n);
    assert_eq!(direct.len(), k + 1, "need H_n(0..=k)");
    let odd = degree(n) % 2 == 1;
    let values = node_range(n)
        .map(|x| {
            let nn = n as i64;
            if x >= 0 {
                BigInt::from(direct[x as usize].clone())
            } else if x > -nn {
                BigInt::zero()
            } else {
                let mirrored = BigInt::from(direct[(-nn - x) as usize].clone());
                if odd {
                    -mirrored
                } else {
                    mirrored
                }
            }
        })
        .collect();
    StanleyVector { n, values }
}

/// Counts `H_n(0..=k)` and assembles the node vector.
pub fn stanley_vector(n: usize) -> StanleyVector {
    assert!(n >= 2, "need n >= 2");
    let direct = h_values(n, 0..=direct_values(n) as u32);
    stanley_vector_from(n, &direct)
}

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coefficients: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Horner evaluation at an integer.
    pub fn evaluate(&self, r: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(r));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}) r")?,
                _ => write!(f, "({c}) r^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Solves the Vandermonde system `A u = v` with `A_ij = x_i^j` over the
/// nodes of `v`.
pub fn solve_coefficients(v: &StanleyVector) -> RationalPoly {
    let d = degree(v.n);
    assert_eq!(v.values.len(), d + 1, "node vector length");
    let a: Vec<Vec<BigInt>> = v
        .nodes()
        .map(|x| {
            let x = BigInt::from(x);
            let mut row = Vec::with_capacity(d + 1);
            let mut p = BigInt::one();
            for _ in 0..=d {
                row.push(p.clone());
                p *= &x;
            }
            row
        })
        .collect();
    let u = bareiss::solve(&a, &v.values).expect("Vandermonde matrix on distinct nodes is invertible");
    RationalPoly::new(u)
}

/// `H_n` as a polynomial, together with the direct values it was fit to.
pub fn ehrhart_polynomial(n: usize) -> (RationalPoly, StanleyVector) {
    let v = stanley_vector(n);
    (solve_coefficients(&v), v)
}
