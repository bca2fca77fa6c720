use num_bigint::BigUint;
use num_traits::One;

/// Pascal's triangle of `C(i, j)` for `0 <= j <= i <= limit`, built by
/// additions only.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
    // same entries where they fit, for the hot loop
    small: Vec<Vec<Option<u128>>>,
}

impl BinomialTable {
    pub fn new(limit: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(limit + 1);
        rows.push(vec![BigUint::one()]);
        for i in 1..=limit {
            let prev = &rows[i - 1];
            let mut row = Vec::with_capacity(i + 1);
            row.push(BigUint::one());
            for j in 1..i {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        let small = rows
            .iter()
            .map(|row| row.iter().map(|x| u128::try_from(x).ok()).collect())
            .collect();
        Self { rows, small }
    }

    /// Largest `i` held by the table.
    pub fn limit(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero when `k > n`. Panics if `n` exceeds the table limit.
    pub fn get(&self, n: u32, k: u32) -> Option<&BigUint> {
        let row = self
            .rows
            .get(n as usize)
            .unwrap_or_else(|| panic!("binomial C({n}, _) beyond table limit {}", self.limit()));
        row.get(k as usize)
    }

    /// `C(n, k)` as a `u128` when it fits. Panics like [`get`](Self::get).
    pub fn get_small(&self, n: u32, k: u32) -> Option<u128> {
        let row = self
            .small
            .get(n as usize)
            .unwrap_or_else(|| panic!("binomial C({n}, _) beyond table limit {}", self.limit()));
        row.get(k as usize).copied().flatten()
    }
}
