//! A generic numerical-semigroup engine.
//!
//! Everything here is computed from residue tables: for a chosen `n` in the
//! semigroup, `w(i)` is the least element congruent to `i` modulo `n`. The
//! tables are filled with the round-robin method: generators are added one
//! at a time and each addition walks the cycles of `i -> i + g (mod n)` once,
//! starting from the cheapest entry of each cycle.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of entries in any residue table.
pub const DEFAULT_TABLE_BOUND: u64 = 10_000_000;

const UNREACHED: u64 = u64::MAX;

/// `Ap(S, n)` as the list `w(0), ..., w(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    n: u64,
    w: Vec<u64>,
}

impl AperyTable {
    /// Wraps an explicit list of values; `values[i]` must be congruent to `i`.
    pub fn from_values(values: Vec<u64>) -> Result<Self> {
        let n = values.len() as u64;
        if n == 0 {
            return Err(Error::domain("an Apéry table needs at least one entry"));
        }
        if values[0] != 0 {
            return Err(Error::domain("w(0) must be 0"));
        }
        if let Some(i) = (0..values.len()).find(|&i| values[i] % n != i as u64) {
            return Err(Error::domain(format!("w({i}) = {} is not congruent to {i} mod {n}", values[i])));
        }
        Ok(Self { n, w: values })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn w(&self, residue: u64) -> u64 {
        self.w[residue as usize]
    }

    pub fn values(&self) -> &[u64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn max(&self) -> u64 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    pub fn sum(&self) -> BigUint {
        // Partial sums stay in u128: at most 10^7 entries below 2^64.
        let s: u128 = self.w.iter().map(|&v| v as u128).sum();
        BigUint::from(s)
    }

    /// `x ∈ S` iff `x >= w(x mod n)`.
    pub fn contains(&self, x: &BigInt) -> bool {
        if x.is_negative() {
            return false;
        }
        let r = (x % self.n).to_u64().expect("residue fits");
        *x >= BigInt::from(self.w[r as usize])
    }

    pub fn contains_u64(&self, x: u64) -> bool {
        x >= self.w[(x % self.n) as usize]
    }

    /// `F(S) = max(Ap) - n`.
    pub fn frobenius(&self) -> BigInt {
        BigInt::from(self.max()) - BigInt::from(self.n)
    }

    /// `g(S) = (1/n) Σ w - (n-1)/2`, evaluated as `(Σ w - n(n-1)/2) / n`.
    pub fn genus(&self) -> Result<BigUint> {
        let n = BigUint::from(self.n);
        let shift = &n * (&n - 1u32) / 2u32;
        let sum = self.sum();
        if sum < shift {
            return Err(Error::internal("Apéry sum below n(n-1)/2"));
        }
        let (q, r) = (sum - shift).div_rem(&n);
        if !r.is_zero() {
            return Err(Error::internal("Apéry sum not compatible with genus formula"));
        }
        Ok(q)
    }

    /// `g(S) = Σ k_i` where `w(i) = k_i n + i`.
    pub fn genus_from_quotients(&self) -> BigUint {
        let s: u128 = self
            .w
            .iter()
            .enumerate()
            .map(|(i, &v)| ((v - i as u64) / self.n) as u128)
            .sum();
        BigUint::from(s)
    }
}

/// Working table for the round-robin algorithm.
#[derive(Debug, Clone)]
struct ResidueTable {
    n: u64,
    w: Vec<u64>,
}

impl ResidueTable {
    fn new(n: u64) -> Self {
        let mut w = vec![UNREACHED; n as usize];
        w[0] = 0;
        Self { n, w }
    }

    fn contains(&self, x: u64) -> bool {
        let w = self.w[(x % self.n) as usize];
        w != UNREACHED && x >= w
    }

    fn is_complete(&self) -> bool {
        self.w.iter().all(|&v| v != UNREACHED)
    }

    /// Closes the table under `+ g`.
    fn add_generator(&mut self, g: u64) -> Result<()> {
        let n = self.n;
        let step = g % n;
        if step == 0 {
            return Ok(());
        }
        let cycles = step.gcd(&n);
        let cycle_len = n / cycles;
        for start in 0..cycles {
            // Cheapest entry on this cycle.
            let mut best = start;
            let mut pos = start;
            for _ in 1..cycle_len {
                pos = (pos + step) % n;
                if self.w[pos as usize] < self.w[best as usize] {
                    best = pos;
                }
            }
            if self.w[best as usize] == UNREACHED {
                continue;
            }
            let mut cur = best;
            for _ in 1..cycle_len {
                let next = (cur + step) % n;
                let cand = self.w[cur as usize]
                    .checked_add(g)
                    .filter(|&c| c != UNREACHED)
                    .ok_or_else(|| Error::Overflow(format!("Apéry entry exceeds u64 adding generator {g}")))?;
                if cand < self.w[next as usize] {
                    self.w[next as usize] = cand;
                }
                cur = next;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct Oracle {
    apery: AperyTable,
    msg: Vec<BigUint>,
}

/// A numerical semigroup given by a generating set with gcd 1.
///
/// Oracle artifacts (the Apéry table for the multiplicity and the minimal
/// generators) are computed on first use and cached.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<BigUint>,
    table_bound: u64,
    oracle: OnceLock<Oracle>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[BigInt]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::domain("empty generator list"));
        }
        let mut generators = gens
            .iter()
            .map(|g| {
                g.to_biguint()
                    .filter(|v| !v.is_zero())
                    .ok_or_else(|| Error::domain(format!("generators must be positive, got {g}")))
            })
            .collect::<Result<Vec<_>>>()?;
        generators.sort();
        generators.dedup();
        let gcd = generators.iter().fold(BigUint::zero(), |acc, g| acc.gcd(g));
        if !gcd.is_one() {
            return Err(Error::NotNumericalSemigroup {
                gcd: gcd.to_string(),
            });
        }
        Ok(Self {
            generators,
            table_bound: DEFAULT_TABLE_BOUND,
            oracle: OnceLock::new(),
        })
    }

    pub fn from_u64s(gens: &[u64]) -> Result<Self> {
        let gens: Vec<BigInt> = gens.iter().map(|&g| BigInt::from(g)).collect();
        Self::from_generators(&gens)
    }

    /// `ℕ = ⟨1⟩`.
    pub fn naturals() -> Self {
        Self::from_u64s(&[1]).expect("⟨1⟩ is a numerical semigroup")
    }

    pub fn with_table_bound(mut self, bound: u64) -> Self {
        self.table_bound = bound;
        self.oracle = OnceLock::new();
        self
    }

    pub fn table_bound(&self) -> u64 {
        self.table_bound
    }

    /// Sorted, deduplicated generators as given (not necessarily minimal).
    pub fn generators(&self) -> &[BigUint] {
        &self.generators
    }

    /// Least nonzero element: the smallest generator.
    pub fn multiplicity(&self) -> &BigUint {
        &self.generators[0]
    }

    fn check_bound(&self, what: &'static str, size: &BigUint) -> Result<u64> {
        size.to_u64()
            .filter(|&v| v <= self.table_bound)
            .ok_or_else(|| Error::Resource {
                what,
                requested: size.to_string(),
                bound: self.table_bound,
            })
    }

    fn oracle(&self) -> Result<&Oracle> {
        if let Some(o) = self.oracle.get() {
            return Ok(o);
        }
        let computed = self.compute_oracle()?;
        // A concurrent first computation yields the same value.
        let _ = self.oracle.set(computed);
        Ok(self.oracle.get().expect("just set"))
    }

    /// One ascending pass: a generator is redundant iff the table built from
    /// the smaller ones already contains it; otherwise it is kept and added.
    /// The finished table is `Ap(S, m)`.
    fn compute_oracle(&self) -> Result<Oracle> {
        let m = self.check_bound("Apéry table", self.multiplicity())?;
        let mut table = ResidueTable::new(m);
        let mut msg = vec![self.generators[0].clone()];
        for g in &self.generators[1..] {
            match g.to_u64() {
                Some(small) => {
                    if !table.contains(small) {
                        table.add_generator(small)?;
                        msg.push(g.clone());
                    }
                }
                None => {
                    // Every finite entry is a u64, so a complete table covers g.
                    if !table.is_complete() {
                        return Err(Error::Overflow(format!("generator {g} does not fit in u64")));
                    }
                }
            }
        }
        if !table.is_complete() {
            return Err(Error::internal("residue table incomplete although gcd is 1"));
        }
        Ok(Oracle {
            apery: AperyTable { n: m, w: table.w },
            msg,
        })
    }

    /// `Ap(S, m)` for the multiplicity `m`.
    pub fn apery_multiplicity(&self) -> Result<&AperyTable> {
        self.oracle().map(|o| &o.apery)
    }

    /// `Ap(S, n)` for any nonzero `n ∈ S`.
    pub fn apery(&self, n: &BigUint) -> Result<AperyTable> {
        if n.is_zero() {
            return Err(Error::domain("Apéry set needs a nonzero element"));
        }
        let nb = BigInt::from(n.clone());
        if !self.apery_multiplicity()?.contains(&nb) {
            return Err(Error::domain(format!("{n} is not in the semigroup")));
        }
        if n == self.multiplicity() {
            return self.apery_multiplicity().cloned();
        }
        let n = self.check_bound("Apéry table", n)?;
        let mut table = ResidueTable::new(n);
        for g in self.minimal_generators()? {
            let g = g.to_u64().ok_or_else(|| Error::Overflow(format!("generator {g} does not fit in u64")))?;
            table.add_generator(g)?;
        }
        Ok(AperyTable { n, w: table.w })
    }

    pub fn membership(&self, x: &BigInt) -> Result<bool> {
        if x.is_negative() {
            return Ok(false);
        }
        Ok(self.apery_multiplicity()?.contains(x))
    }

    /// `-1` for `ℕ`.
    pub fn frobenius(&self) -> Result<BigInt> {
        Ok(self.apery_multiplicity()?.frobenius())
    }

    pub fn genus(&self) -> Result<BigUint> {
        self.apery_multiplicity()?.genus()
    }

    /// Positive integers outside `S`, ascending, by sieving `1..=F(S)`.
    pub fn gaps(&self) -> Result<Vec<u64>> {
        let table = self.apery_multiplicity()?;
        let f = table.frobenius();
        if f.is_negative() {
            return Ok(Vec::new());
        }
        let f = self.check_bound("gap sieve", &f.to_biguint().expect("nonnegative"))?;
        Ok((1..=f).filter(|&x| !table.contains_u64(x)).collect())
    }

    pub fn minimal_generators(&self) -> Result<Vec<BigUint>> {
        self.oracle().map(|o| o.msg.clone())
    }

    pub fn embedding_dimension(&self) -> Result<usize> {
        self.oracle().map(|o| o.msg.len())
    }

    /// `n(S) = #{s ∈ S : s < F(S)}`, counted class by class.
    pub fn sporadic_count(&self) -> Result<BigUint> {
        let table = self.apery_multiplicity()?;
        let f = table.frobenius();
        if f.is_negative() {
            return Ok(BigUint::zero());
        }
        let f = f.to_u64().expect("F < max Apéry entry");
        let m = table.n();
        let count: u128 = table
            .values()
            .iter()
            .filter(|&&w| w < f)
            .map(|&w| ((f - 1 - w) / m + 1) as u128)
            .sum();
        Ok(BigUint::from(count))
    }

    /// `F(S) + 1 <= e(S) n(S)`.
    pub fn wilf_check(&self) -> Result<bool> {
        let lhs = self.frobenius()? + 1;
        let rhs = BigInt::from(self.embedding_dimension()?) * BigInt::from(self.sporadic_count()?);
        Ok(lhs <= rhs)
    }
}
