//! Zeckendorf decompositions over the modified Lucas sequence
//! `l̃ = 1, 2, 3, 4, 7, 11, 18, ...` and sparse-subset counting.
//!
//! Every `x >= 1` is a unique sum of distinct `l̃_i` with no two consecutive
//! indices and never both indices 0 and 2. The summand count is `β(x)`, the
//! top index is `γ(x)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::semigroup::DEFAULT_TABLE_BOUND;
use crate::sequences::{lucas, lucas_tilde, LUCAS_TILDE_U64};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeckendorfDecomposition {
    pub x: BigInt,
    /// Strictly increasing positions `i` with `b_i = 1`.
    pub indices: Vec<usize>,
}

impl ZeckendorfDecomposition {
    pub fn beta(&self) -> usize {
        self.indices.len()
    }

    /// `None` for `x = 0`.
    pub fn gamma(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// Checks the four structural invariants.
    pub fn validate(&self) -> Result<()> {
        let sum: BigInt = self
            .indices
            .iter()
            .map(|&i| lucas_tilde(i as i64))
            .sum::<Result<BigInt>>()?;
        if sum != self.x {
            return Err(Error::internal(format!(
                "decomposition of {} sums to {sum}",
                self.x
            )));
        }
        if self.indices.windows(2).any(|w| w[1] <= w[0] + 1) {
            return Err(Error::internal(format!(
                "decomposition of {} has consecutive or unsorted indices {:?}",
                self.x, self.indices
            )));
        }
        if self.indices.starts_with(&[0, 2]) {
            return Err(Error::internal(format!(
                "decomposition of {} uses both l̃_0 and l̃_2",
                self.x
            )));
        }
        if let Some(g) = self.gamma() {
            let lo = lucas_tilde(g as i64)?;
            let hi = lucas_tilde(g as i64 + 1)?;
            if !(lo <= self.x && self.x < hi) {
                return Err(Error::internal(format!(
                    "top index {g} does not bracket {}",
                    self.x
                )));
            }
        }
        Ok(())
    }
}

/// Largest `k` with `l̃_k <= x`, for `x >= 1`.
pub fn gamma(x: &BigInt) -> Result<usize> {
    if !x.is_positive() {
        return Err(Error::domain(format!("γ(x) needs x >= 1, got {x}")));
    }
    if let Some(small) = x.to_u64() {
        return Ok(gamma_u64(small).expect("x >= 1"));
    }
    // Exponential then binary search over the cached sequence.
    let mut hi = LUCAS_TILDE_U64.len();
    while lucas_tilde(hi as i64)? <= *x {
        hi *= 2;
    }
    let mut lo = hi / 2;
    // Invariant: l̃_lo <= x < l̃_hi.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if lucas_tilde(mid as i64)? <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn gamma_u64(x: u64) -> Option<usize> {
    if x == 0 {
        return None;
    }
    Some(LUCAS_TILDE_U64.partition_point(|&v| v <= x) - 1)
}

/// Greedy decomposition of a machine-sized value. Indices come out ascending.
pub fn decompose_u64(x: u64) -> Vec<usize> {
    let mut indices = Vec::new();
    let mut rest = x;
    while let Some(k) = gamma_u64(rest) {
        indices.push(k);
        rest -= LUCAS_TILDE_U64[k];
    }
    indices.reverse();
    indices
}

pub fn beta_u64(x: u64) -> usize {
    let mut count = 0;
    let mut rest = x;
    while let Some(k) = gamma_u64(rest) {
        count += 1;
        rest -= LUCAS_TILDE_U64[k];
    }
    count
}

/// The unique decomposition of `x >= 0`, validated before it is returned.
pub fn decompose(x: &BigInt) -> Result<ZeckendorfDecomposition> {
    if x.is_negative() {
        return Err(Error::domain(format!("cannot decompose negative {x}")));
    }
    let indices = if let Some(small) = x.to_u64() {
        decompose_u64(small)
    } else {
        let mut indices = Vec::new();
        let mut rest = x.clone();
        while !rest.is_zero() {
            let k = gamma(&rest)?;
            rest -= lucas_tilde(k as i64)?;
            indices.push(k);
        }
        indices.reverse();
        indices
    };
    let d = ZeckendorfDecomposition {
        x: x.clone(),
        indices,
    };
    d.validate()?;
    Ok(d)
}

/// `β(x)`: summand count of the decomposition, which is also the fewest
/// `l̃` terms (with repetition) summing to `x`.
pub fn beta(x: &BigInt) -> Result<usize> {
    if x.is_negative() {
        return Err(Error::domain(format!("β(x) needs x >= 0, got {x}")));
    }
    match x.to_u64() {
        Some(small) => Ok(beta_u64(small)),
        None => decompose(x).map(|d| d.beta()),
    }
}

/// Fewest coins summing to `x` when the coins are `l̃_0, ..., l̃_max_index`
/// and each may be used any number of times. Plain unbounded-knapsack DP.
///
/// Kept free of the greedy machinery above so it can check it.
pub fn beta_bruteforce(x: u64, max_index: usize) -> u64 {
    let mut coins = vec![1u64, 2];
    let (mut p, mut q) = (1u64, 3u64); // l_1, l_2
    while coins.len() <= max_index {
        coins.push(q);
        let r = p + q;
        p = q;
        q = r;
    }
    coins.truncate(max_index + 1);
    coins.retain(|&c| c <= x);

    let x = x as usize;
    let mut best = vec![u64::MAX; x + 1];
    best[0] = 0;
    for v in 1..=x {
        for &c in &coins {
            let c = c as usize;
            if c <= v && best[v - c] != u64::MAX {
                best[v] = best[v].min(best[v - c] + 1);
            }
        }
    }
    best[x]
}

/// A subset of `{0, ..., n-1}` with no two consecutive members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparseSubset {
    pub n: usize,
    pub members: Vec<usize>,
}

impl SparseSubset {
    pub fn is_valid(&self) -> bool {
        self.members.iter().all(|&m| m < self.n) && self.members.windows(2).all(|w| w[1] > w[0] + 1)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Number of `m`-element subsets of `{0, ..., n-1}` without consecutive
/// members: `C(n+1-m, m)`, zero once `2m > n+1`, and 1 for `n = m = 0`.
pub fn count_sparse_subsets(n: i64, m: i64) -> Result<BigUint> {
    if n < 0 || m < 0 {
        return Err(Error::domain(format!(
            "sparse subset count needs n, m >= 0, got ({n}, {m})"
        )));
    }
    if 2 * m > n + 1 {
        return Ok(BigUint::zero());
    }
    if n == 0 {
        // Only m = 0 survives the check above.
        return Ok(BigUint::from(1u32));
    }
    Ok(num_integer::binomial(
        BigUint::from((n + 1 - m) as u64),
        BigUint::from(m as u64),
    ))
}

/// All `m`-element sparse subsets of `{0, ..., n-1}` in lexicographic order.
pub fn enumerate_sparse_subsets(n: usize, m: usize) -> Vec<SparseSubset> {
    fn go(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<SparseSubset>) {
        if cur.len() == m {
            out.push(SparseSubset {
                n,
                members: cur.clone(),
            });
            return;
        }
        let left = m - cur.len();
        // The remaining `left` members need at least 2*left - 1 slots.
        let mut i = start;
        while i + 2 * left - 1 <= n {
            cur.push(i);
            go(n, m, i + 2, cur, out);
            cur.pop();
            i += 1;
        }
    }
    let mut out = Vec::new();
    go(n, m, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

/// The index sets of the decompositions of `1, ..., l_a - 1`, in order of `x`.
///
/// Each is a sparse subset of `{0, ..., a-1}` never holding both 0 and 2, and
/// the map from `x` to its set is a bijection onto this family.
pub fn enumerate_l(a: i64) -> Result<Vec<SparseSubset>> {
    if a < 4 {
        return Err(Error::domain(format!("𝓛(a) needs a >= 4, got {a}")));
    }
    let la = lucas(a)?;
    let la = la
        .to_u64()
        .filter(|&v| v <= DEFAULT_TABLE_BOUND)
        .ok_or_else(|| Error::Resource {
            what: "𝓛(a) enumeration",
            requested: la.to_string(),
            bound: DEFAULT_TABLE_BOUND,
        })?;
    Ok((1..la)
        .map(|x| SparseSubset {
            n: a as usize,
            members: decompose_u64(x),
        })
        .collect())
}

/// Expected number of sets of each size `m = 1, ..., ⌊(a+1)/2⌋` in
/// [`enumerate_l`]: sparse `m`-subsets of `{0..a-1}` minus those starting
/// with the forbidden prefix `{0, 2}`, counted as `#F_{a-4}(m-2)`.
pub fn l_family_size_counts(a: i64) -> Result<Vec<BigUint>> {
    if a < 4 {
        return Err(Error::domain(format!("𝓛(a) needs a >= 4, got {a}")));
    }
    (1..=(a + 1) / 2)
        .map(|m| {
            let all = count_sparse_subsets(a, m)?;
            let excluded = if m >= 2 {
                count_sparse_subsets(a - 4, m - 2)?
            } else {
                BigUint::zero()
            };
            Ok(all - excluded)
        })
        .collect()
}
