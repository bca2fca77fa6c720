use num_bigint::BigUint;
use num_traits::One;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::BigCount;

/// Seedable bit stream with exact uniform integer draws by rejection.
///
/// A draw from `{1, ..., k}` reads `ceil(log2 k)` fresh bits per attempt and
/// rejects values past `k`, so fewer than two attempts are needed on
/// average. Uniformity is exact given uniform input bits. The stream is
/// reproducible bit for bit from the seed.
#[derive(Debug, Clone)]
pub struct RandomSource {
    rng: ChaCha20Rng,
    buf: u64,
    avail: u32,
    bits_read: u64,
}

impl RandomSource {
    pub fn seed_from_u64(seed: u64) -> Self {
        Self {
            rng: ChaCha20Rng::seed_from_u64(seed),
            buf: 0,
            avail: 0,
            bits_read: 0,
        }
    }

    /// Total bits consumed so far.
    pub fn bits_read(&self) -> u64 {
        self.bits_read
    }

    /// The next `n <= 64` bits of the stream as the low bits of a word.
    pub fn take_bits(&mut self, n: u32) -> u64 {
        assert!(n <= 64);
        if n == 0 {
            return 0;
        }
        self.bits_read += u64::from(n);
        if n <= self.avail {
            let out = self.buf & mask(n);
            self.buf = if n == 64 { 0 } else { self.buf >> n };
            self.avail -= n;
            return out;
        }
        // drain what is buffered, top up from a fresh word
        let low = self.buf;
        let have = self.avail;
        let word = self.rng.next_u64();
        let need = n - have;
        let out = low | ((word & mask(need)) << have);
        self.buf = if need == 64 { 0 } else { word >> need };
        self.avail = 64 - need;
        out
    }

    /// Uniform on `{1, ..., k}`.
    pub fn uniform_bigint(&mut self, k: &BigCount) -> Result<BigCount> {
        if k.bits() == 0 {
            return Err(Error::EmptyRange);
        }
        if k.is_one() {
            return Ok(BigCount::one());
        }
        let bits = (k - 1u32).bits();
        loop {
            let mut digits = Vec::with_capacity(bits.div_ceil(64) as usize);
            let mut left = bits;
            while left > 0 {
                let take = left.min(64) as u32;
                digits.push(self.take_bits(take));
                left -= u64::from(take);
            }
            let x = BigUint::from_slice(&to_u32_digits(&digits));
            if &x < k {
                return Ok(x + 1u32);
            }
        }
    }

    /// Uniform on `{0, ..., n - 1}`.
    pub fn uniform_below(&mut self, n: usize) -> Result<usize> {
        if n == 0 {
            return Err(Error::EmptyRange);
        }
        if n == 1 {
            return Ok(0);
        }
        let bits = usize::BITS - (n - 1).leading_zeros();
        loop {
            let x = self.take_bits(bits) as usize;
            if x < n {
                return Ok(x);
            }
        }
    }
}

fn mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn to_u32_digits(words: &[u64]) -> Vec<u32> {
    words
        .iter()
        .flat_map(|&w| [w as u32, (w >> 32) as u32])
        .collect()
}
