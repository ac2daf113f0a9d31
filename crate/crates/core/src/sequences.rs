//! Lucas, modified Lucas and Fibonacci numbers as exact big integers.
//!
//! Values live in an append-only [`SequenceCache`]. The free functions
//! [`lucas`], [`lucas_tilde`] and [`fibonacci`] share one process-wide cache
//! behind a read/write lock: lookups take the read lock, growth takes the
//! write lock.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Memoized Lucas and Fibonacci values.
///
/// `lucas_values[0]` holds `l_{-1} = -1`, so `l_n` sits at position `n + 1`.
#[derive(Debug, Clone)]
pub struct SequenceCache {
    lucas_values: Vec<BigInt>,
    fib_values: Vec<BigInt>,
}

impl Default for SequenceCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SequenceCache {
    pub fn new() -> Self {
        Self {
            lucas_values: vec![BigInt::from(-1), BigInt::from(2), BigInt::from(1)],
            fib_values: vec![BigInt::from(0), BigInt::from(1)],
        }
    }

    fn grow_lucas(&mut self, n: usize) {
        while self.lucas_values.len() < n + 2 {
            let k = self.lucas_values.len();
            let next = &self.lucas_values[k - 1] + &self.lucas_values[k - 2];
            self.lucas_values.push(next);
        }
    }

    fn grow_fib(&mut self, n: usize) {
        while self.fib_values.len() < n + 1 {
            let k = self.fib_values.len();
            let next = &self.fib_values[k - 1] + &self.fib_values[k - 2];
            self.fib_values.push(next);
        }
    }

    fn cached_lucas(&self, n: i64) -> Option<&BigInt> {
        self.lucas_values.get(usize::try_from(n + 1).ok()?)
    }

    fn cached_fib(&self, n: i64) -> Option<&BigInt> {
        self.fib_values.get(usize::try_from(n).ok()?)
    }

    /// `l_n` for `n >= -1`.
    pub fn lucas(&mut self, n: i64) -> Result<BigInt> {
        let pos = lucas_index(n)?;
        if pos > 0 {
            self.grow_lucas(pos - 1);
        }
        Ok(self.lucas_values[pos].clone())
    }

    /// `l̃_n`: 1, 2, then `l_n` from `n = 2` on.
    pub fn lucas_tilde(&mut self, n: i64) -> Result<BigInt> {
        match n {
            n if n < 0 => Err(Error::domain(format!("l̃ index must be >= 0, got {n}"))),
            0 => Ok(BigInt::from(1)),
            1 => Ok(BigInt::from(2)),
            n => self.lucas(n),
        }
    }

    /// `f_n` for `n >= 0`.
    pub fn fibonacci(&mut self, n: i64) -> Result<BigInt> {
        let idx = fib_index(n)?;
        self.grow_fib(idx);
        Ok(self.fib_values[idx].clone())
    }

    /// Number of Lucas values currently cached (excluding `l_{-1}`).
    pub fn lucas_len(&self) -> usize {
        self.lucas_values.len() - 1
    }
}

fn lucas_index(n: i64) -> Result<usize> {
    if n < -1 {
        return Err(Error::domain(format!("Lucas index must be >= -1, got {n}")));
    }
    usize::try_from(n + 1).map_err(|_| Error::domain(format!("Lucas index {n} out of range")))
}

fn fib_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::domain(format!("Fibonacci index must be >= 0, got {n}")))
}

static SHARED: LazyLock<RwLock<SequenceCache>> = LazyLock::new(|| RwLock::new(SequenceCache::new()));

/// `l_n` for `n >= -1`, with `l_{-1} = -1`.
pub fn lucas(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::domain(format!("Lucas index must be >= -1, got {n}")));
    }
    if let Some(v) = SHARED.read().expect("sequence cache poisoned").cached_lucas(n) {
        return Ok(v.clone());
    }
    SHARED.write().expect("sequence cache poisoned").lucas(n)
}

/// `l̃_n` for `n >= 0`. Strictly increasing: 1, 2, 3, 4, 7, 11, 18, ...
pub fn lucas_tilde(n: i64) -> Result<BigInt> {
    match n {
        n if n < 0 => Err(Error::domain(format!("l̃ index must be >= 0, got {n}"))),
        0 => Ok(BigInt::from(1)),
        1 => Ok(BigInt::from(2)),
        n => lucas(n),
    }
}

/// `f_n` for `n >= 0`.
pub fn fibonacci(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!("Fibonacci index must be >= 0, got {n}")));
    }
    if let Some(v) = SHARED.read().expect("sequence cache poisoned").cached_fib(n) {
        return Ok(v.clone());
    }
    SHARED.write().expect("sequence cache poisoned").fibonacci(n)
}

/// `l_n` for a nonnegative index; never fails.
pub(crate) fn lucas_at(n: usize) -> BigInt {
    lucas(n as i64).expect("nonnegative Lucas index")
}

/// `l̃_0, l̃_1, ...` for every term that fits in a `u64`.
pub(crate) static LUCAS_TILDE_U64: LazyLock<Vec<u64>> = LazyLock::new(|| {
    let mut v: Vec<u64> = vec![1, 2, 3];
    let mut prev: u64 = 1; // l_1
    let mut cur: u64 = 3; // l_2
    while let Some(next) = prev.checked_add(cur) {
        v.push(next);
        prev = cur;
        cur = next;
    }
    v
});

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0).unwrap(), big(2));
        assert_eq!(lucas(1).unwrap(), big(1));
        assert_eq!(lucas(6).unwrap(), big(18));
        assert_eq!(lucas(-1).unwrap(), big(-1));
        // 2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123
        assert_eq!(lucas(10).unwrap(), big(123));
        assert!(matches!(lucas(-2), Err(Error::Domain(_))));
    }

    #[test]
    fn lucas_tilde_examples() {
        assert_eq!(lucas_tilde(0).unwrap(), big(1));
        assert_eq!(lucas_tilde(1).unwrap(), big(2));
        assert_eq!(lucas_tilde(5).unwrap(), big(11));
        assert!(lucas_tilde(-1).is_err());
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci(0).unwrap(), big(0));
        assert_eq!(fibonacci(6).unwrap(), big(8));
        // 0 1 1 2 3 5 8 13 21 34 55 89 144
        assert_eq!(fibonacci(12).unwrap(), big(144));
        assert!(fibonacci(-1).is_err());
    }

    #[test]
    fn private_cache_matches_shared() {
        let mut cache = SequenceCache::new();
        for n in -1..60 {
            assert_eq!(cache.lucas(n).unwrap(), lucas(n).unwrap());
        }
        for n in 0..60 {
            assert_eq!(cache.fibonacci(n).unwrap(), fibonacci(n).unwrap());
            assert_eq!(cache.lucas_tilde(n).unwrap(), lucas_tilde(n).unwrap());
        }
        assert!(cache.lucas(-3).is_err());
        assert!(cache.lucas_len() >= 60);
    }

    #[test]
    fn beyond_u64() {
        // l_100 = 792070839848372253127
        assert_eq!(
            lucas(100).unwrap().to_string(),
            "792070839848372253127"
        );
    }

    #[test]
    fn shift_identity() {
        for a in 1..=30 {
            for i in 0..=30 {
                let lhs = lucas(a + i).unwrap();
                let rhs = fibonacci(i + 1).unwrap() * lucas(a).unwrap()
                    + fibonacci(i).unwrap() * lucas(a - 1).unwrap();
                assert_eq!(lhs, rhs, "a={a} i={i}");
            }
        }
    }

    #[test]
    fn fibonacci_binomial_sum() {
        for a in 1..=30i64 {
            let sum: BigInt = (0..=(a - 1) / 2)
                .map(|j| BigInt::from(num_integer::binomial((a - 1 - j) as u64, j as u64)))
                .sum();
            assert_eq!(sum, fibonacci(a).unwrap(), "a={a}");
        }
    }

    #[test]
    fn lucas_fibonacci_bridge() {
        for a in 2..=30 {
            assert_eq!(lucas(a).unwrap(), fibonacci(a + 2).unwrap() - fibonacci(a - 2).unwrap());
        }
    }

    #[test]
    fn tilde_strictly_increasing() {
        for n in 0..200 {
            assert!(lucas_tilde(n).unwrap() < lucas_tilde(n + 1).unwrap());
        }
        let t = &*LUCAS_TILDE_U64;
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        for (i, v) in t.iter().enumerate() {
            assert_eq!(BigInt::from(*v), lucas_tilde(i as i64).unwrap());
        }
    }
}
