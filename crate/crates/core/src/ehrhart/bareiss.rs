//! Fraction-free Gauss-Jordan elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Solves `a x = b` exactly. Returns `None` if `a` is singular.
///
/// Every intermediate entry is an integer minor of the augmented matrix:
/// after step `k` each row is updated as
/// `a_ij <- (a_kk a_ij - a_ik a_kj) / p`, where `p` is the previous pivot and
/// the division is exact. At the end every diagonal entry equals `det(a)` (up
/// to the sign of row swaps) and the right-hand side holds `det(a) * x`.
/// Pivots are chosen by largest magnitude in the column.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .max_by(|&x, &y| m[x][k].abs().cmp(&m[y][k].abs()))?;
        m.swap(k, pivot_row);
        let (head, tail) = m.split_at_mut(k);
        let (pivot, below) = tail.split_first_mut().expect("row k exists");
        for row in head.iter_mut().chain(below.iter_mut()) {
            let factor = row[k].clone();
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let num = &pivot[k] * &row[j] - &factor * &pivot[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free step must divide exactly");
                row[j] = q;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot[k].clone();
    }

    Some(
        m.into_iter()
            .enumerate()
            .map(|(i, row)| BigRational::new(row[n].clone(), row[i].clone()))
            .collect(),
    )
}
