//! The families `S(a)` and `T(a)`: construction, closed forms, and
//! closed-form-versus-oracle reports.
//!
//! Closed forms have explicit domains (`a >= 2` for most `S(a)` results,
//! `a >= 3` for `T(a)`). Below them the report falls back to the generic
//! engine on the explicit small semigroups.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::semigroup::{AperyTable, NumericalSemigroup, DEFAULT_TABLE_BOUND};
use crate::sequences::{lucas, lucas_at, lucas_tilde};
use crate::zeckendorf::{beta_u64, enumerate_l};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `⟨l_a, l_a + l_n : n ≥ 0⟩`
    S,
    /// `⟨l_a + l_n : n ≥ 0⟩`
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::T => "T",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "T" | "t" => Ok(Family::T),
            other => Err(Error::domain(format!("unknown family {other:?}, expected S or T"))),
        }
    }
}

fn la(a: u32) -> BigUint {
    lucas_at(a as usize).to_biguint().expect("l_a > 0 for a >= 0")
}

fn to_big_int(v: &[BigUint]) -> Vec<BigInt> {
    v.iter().cloned().map(BigInt::from).collect()
}

/// `⌈(a-1)/2⌉` for `a >= 1`.
fn half_up(a: u32) -> u32 {
    a / 2
}

/// `{l_a} ∪ {l_a + l_i : 0 <= i < a}`, sorted. `a >= 2`.
fn s_generators(a: u32) -> Vec<BigUint> {
    let base = la(a);
    let mut gens = vec![base.clone()];
    gens.extend((0..a).map(|i| &base + la(i)));
    gens.sort();
    gens
}

/// `{l_a + l_i : 0 <= i <= a}`, sorted. `a >= 3`.
fn t_generators(a: u32) -> Vec<BigUint> {
    let base = la(a);
    let mut gens: Vec<BigUint> = (0..=a).map(|i| &base + la(i)).collect();
    gens.sort();
    gens
}

pub fn build_s(a: u32) -> NumericalSemigroup {
    let gens: Vec<u64> = match a {
        0 => vec![2, 3],
        1 => vec![1],
        _ => return NumericalSemigroup::from_generators(&to_big_int(&s_generators(a))).expect("gcd(l_a+1, l_a+2) = 1"),
    };
    NumericalSemigroup::from_u64s(&gens).expect("explicit small semigroup")
}

pub fn build_t(a: u32) -> NumericalSemigroup {
    let gens: Vec<u64> = match a {
        0 => vec![3, 4, 5],
        1 => vec![2, 3],
        2 => vec![4, 5, 6, 7],
        _ => return NumericalSemigroup::from_generators(&to_big_int(&t_generators(a))).expect("gcd(l_a+1, l_a+2) = 1"),
    };
    NumericalSemigroup::from_u64s(&gens).expect("explicit small semigroup")
}

/// `build_s` plus the first generators beyond the minimal range
/// (`l_a + l_a`, `l_a + l_{a+1}`, `l_a + l_{a+2}`), which the oracle must
/// discard again.
pub fn build_s_padded(a: u32) -> NumericalSemigroup {
    let base = la(a);
    let mut gens: Vec<BigInt> = to_big_int(build_s(a).generators());
    gens.extend((a..a + 3).map(|i| BigInt::from(&base + la(i))));
    NumericalSemigroup::from_generators(&gens).expect("superset of a generating set")
}

/// `build_t` plus `l_a + l_{a+1}`, `l_a + l_{a+2}`, `l_a + l_{a+3}`.
pub fn build_t_padded(a: u32) -> NumericalSemigroup {
    let base = la(a);
    let mut gens: Vec<BigInt> = to_big_int(build_t(a).generators());
    gens.extend((a + 1..a + 4).map(|i| BigInt::from(&base + la(i))));
    NumericalSemigroup::from_generators(&gens).expect("superset of a generating set")
}

pub fn build(family: Family, a: u32) -> NumericalSemigroup {
    match family {
        Family::S => build_s(a),
        Family::T => build_t(a),
    }
}

fn closed_applies(family: Family, a: u32) -> bool {
    match family {
        Family::S => a >= 2,
        Family::T => a >= 3,
    }
}

fn require(family: Family, a: u32, what: &str) -> Result<()> {
    if closed_applies(family, a) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "closed form for {what} of {family}(a) needs a >= {}, got {a}",
            if family == Family::S { 2 } else { 3 }
        )))
    }
}

/// Minimal generators from the closed form, ascending.
pub fn msg_closed(family: Family, a: u32) -> Result<Vec<BigUint>> {
    require(family, a, "msg")?;
    Ok(match family {
        Family::S => s_generators(a),
        Family::T => t_generators(a),
    })
}

/// `e = a + 1`.
pub fn embedding_dimension_closed(family: Family, a: u32) -> Result<u64> {
    require(family, a, "embedding dimension")?;
    Ok(a as u64 + 1)
}

/// Multiplicity: `l_a` for `S(a)`, `l_a + l_1` for `T(a)`.
pub fn multiplicity_closed(family: Family, a: u32) -> Result<BigUint> {
    require(family, a, "multiplicity")?;
    Ok(match family {
        Family::S => la(a),
        Family::T => la(a) + 1u32,
    })
}

/// `Ap(S(a), l_a)` with `w(x) = β(x) l_a + x`.
pub fn apery_closed_form(a: u32, bound: u64) -> Result<AperyTable> {
    if a < 2 {
        return Err(Error::domain(format!("closed-form Apéry table needs a >= 2, got {a}")));
    }
    let n = la(a);
    let n = n.to_u64().filter(|&v| v <= bound).ok_or_else(|| Error::Resource {
        what: "closed-form Apéry table",
        requested: n.to_string(),
        bound,
    })?;
    let w = (0..n).map(|x| beta_u64(x) as u64 * n + x).collect();
    AperyTable::from_values(w)
}

/// `max Ap(S(a), l_a) = ⌈(a-1)/2⌉ l_a + l_a - 1`.
pub fn apery_max_closed(a: u32) -> Result<BigUint> {
    if a < 2 {
        return Err(Error::domain(format!("needs a >= 2, got {a}")));
    }
    Ok(la(a) * (half_up(a) + 1) - 1u32)
}

/// `F(S(a)) = ⌈(a-1)/2⌉ l_a - 1`.
pub fn frobenius_s_closed(a: u32) -> Result<BigInt> {
    if a < 2 {
        return Err(Error::domain(format!("F(S(a)) closed form needs a >= 2, got {a}")));
    }
    Ok(BigInt::from(la(a) * half_up(a)) - 1)
}

/// `F(S(a)) = ⌈(e-2)/2⌉ m - 1` with `e = a + 1`, `m = l_a`.
pub fn frobenius_s_from_invariants(e: u64, m: &BigUint) -> BigInt {
    let k = (e - 2).div_ceil(2);
    BigInt::from(m * k) - 1
}

/// `g(S(a)) = a (l_a + l_{a-2}) / 5`, for `a >= 1` (`l_{-1} = -1`).
pub fn genus_s_closed(a: u32) -> Result<BigUint> {
    if a < 1 {
        return Err(Error::domain("g(S(a)) closed form needs a >= 1, got 0"));
    }
    let a_big = BigInt::from(a);
    let numerator = a_big * (lucas(a as i64)? + lucas(a as i64 - 2)?);
    let (q, r) = numerator.div_rem(&BigInt::from(5));
    if !r.is_zero() {
        return Err(Error::internal(format!("a (l_a + l_(a-2)) not divisible by 5 at a = {a}")));
    }
    q.to_biguint()
        .ok_or_else(|| Error::internal(format!("negative genus at a = {a}")))
}

/// The double binomial sum for `g(S(a))`, `a >= 3`.
pub fn genus_s_binomial(a: u32) -> Result<BigUint> {
    if a < 3 {
        return Err(Error::domain(format!("binomial genus sum needs a >= 3, got {a}")));
    }
    let a = a as u64;
    let c = |n: u64, k: u64| BigInt::from(num_integer::binomial(BigUint::from(n), BigUint::from(k)));
    let plus: BigInt = (1..=a.div_ceil(2)).map(|i| BigInt::from(i) * c(a + 1 - i, i)).sum();
    let minus: BigInt = (0..=(a - 3) / 2).map(|i| BigInt::from(i + 2) * c(a - 3 - i, i)).sum();
    (plus - minus)
        .to_biguint()
        .ok_or_else(|| Error::internal("binomial genus sum went negative"))
}

/// `g(S(a)) = Σ_{x=1}^{l_a - 1} β(x)`, `a >= 2`.
pub fn genus_beta_sum(a: u32, bound: u64) -> Result<BigUint> {
    if a < 2 {
        return Err(Error::domain(format!("β-sum genus needs a >= 2, got {a}")));
    }
    let n = la(a);
    let n = n.to_u64().filter(|&v| v <= bound).ok_or_else(|| Error::Resource {
        what: "β-sum over 1..l_a",
        requested: n.to_string(),
        bound,
    })?;
    let s: u128 = (1..n).map(|x| beta_u64(x) as u128).sum();
    Ok(BigUint::from(s))
}

/// `F(T(a)) = max(F(S(a)), 2 l_a + 1)`, `a >= 3`.
pub fn frobenius_t_closed(a: u32) -> Result<BigInt> {
    if a < 3 {
        return Err(Error::domain(format!("F(T(a)) closed form needs a >= 3, got {a}")));
    }
    if a <= 5 {
        Ok(BigInt::from(la(a) * 2u32 + 1u32))
    } else {
        frobenius_s_closed(a)
    }
}

/// `g(T(a)) = g(S(a)) + 2`, `a >= 3`.
pub fn genus_t_closed(a: u32) -> Result<BigUint> {
    if a < 3 {
        return Err(Error::domain(format!("g(T(a)) closed form needs a >= 3, got {a}")));
    }
    Ok(genus_s_closed(a)? + 2u32)
}

/// Elements of `S(a) \ T(a)` up to `max(F(S(a)), F(T(a))) + 1`.
pub fn s_minus_t(a: u32, bound: u64) -> Result<Vec<u64>> {
    if a < 3 {
        return Err(Error::domain(format!("S(a) \\ T(a) needs a >= 3, got {a}")));
    }
    let s = build_s(a).with_table_bound(bound);
    let t = build_t(a).with_table_bound(bound);
    let (sa, ta) = (s.apery_multiplicity()?, t.apery_multiplicity()?);
    let limit: BigInt = sa.frobenius().max(ta.frobenius()) + 1;
    let limit = limit.to_u64().ok_or_else(|| Error::Overflow("membership limit".into()))?;
    Ok((0..=limit)
        .filter(|&x| sa.contains_u64(x) && !ta.contains_u64(x))
        .collect())
}

/// `S(a) = T(a) ∪ {l_a, 2 l_a + 1}` with the union disjoint, checked by
/// membership up to `max F + 1`.
pub fn check_s_t_decomposition(a: u32, bound: u64) -> Result<bool> {
    if a < 3 {
        return Err(Error::domain(format!("S/T decomposition needs a >= 3, got {a}")));
    }
    let s = build_s(a).with_table_bound(bound);
    let t = build_t(a).with_table_bound(bound);
    let (sa, ta) = (s.apery_multiplicity()?, t.apery_multiplicity()?);
    let l = la(a).to_u64().ok_or_else(|| Error::Overflow("l_a".into()))?;
    let extra = [l, 2 * l + 1];
    if extra.iter().any(|&x| ta.contains_u64(x)) {
        return Ok(false);
    }
    let limit = (sa.frobenius().max(ta.frobenius()) + BigInt::from(1))
        .to_u64()
        .ok_or_else(|| Error::Overflow("membership limit".into()))?;
    Ok((0..=limit).all(|x| sa.contains_u64(x) == (ta.contains_u64(x) || extra.contains(&x))))
}

/// `{|B| l_a + Σ_{b∈B} l̃_b : B ∈ 𝓛(a)}` in ascending order, `a >= 4`.
///
/// Fails with an internal error if two sets give the same value.
pub fn apery_from_index_sets(a: u32) -> Result<Vec<u64>> {
    let sets = enumerate_l(a as i64)?;
    let l = la(a).to_u64().ok_or_else(|| Error::Overflow("l_a".into()))?;
    let mut values = sets
        .iter()
        .map(|b| {
            let tail: u64 = b
                .members
                .iter()
                .map(|&i| lucas_tilde(i as i64).map(|v| v.to_u64().expect("index below a")))
                .sum::<Result<u64>>()?;
            Ok(b.len() as u64 * l + tail)
        })
        .collect::<Result<Vec<u64>>>()?;
    values.sort_unstable();
    if values.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::internal(format!("two index sets give the same Apéry element at a = {a}")));
    }
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// Closed forms where they apply, the engine elsewhere.
    Closed,
    /// The engine only.
    Oracle,
    /// Closed forms cross-checked against the engine.
    Both,
}

impl FromStr for ReportMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(ReportMode::Closed),
            "oracle" => Ok(ReportMode::Oracle),
            "both" => Ok(ReportMode::Both),
            other => Err(Error::domain(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub label: String,
    pub closed: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: Family,
    pub a: u32,
    /// Whether the reported values come from closed forms.
    pub closed_form: bool,
    pub msg: Vec<BigUint>,
    pub e: u64,
    pub m: BigUint,
    pub frobenius: BigInt,
    pub genus: BigUint,
    pub n_count: BigUint,
    pub wilf_ok: bool,
    pub oracle_checked: bool,
    pub mismatches: Vec<Mismatch>,
}

impl FamilyReport {
    /// `F + 1` and `e n`, the two sides of Wilf's inequality.
    pub fn wilf_sides(&self) -> (BigInt, BigInt) {
        (
            &self.frobenius + 1,
            BigInt::from(self.e) * BigInt::from(self.n_count.clone()),
        )
    }
}

struct Values {
    msg: Vec<BigUint>,
    e: u64,
    m: BigUint,
    frobenius: BigInt,
    genus: BigUint,
    n_count: BigUint,
}

fn closed_values(family: Family, a: u32) -> Result<Values> {
    let (frobenius, genus) = match family {
        Family::S => (frobenius_s_closed(a)?, genus_s_closed(a)?),
        Family::T => (frobenius_t_closed(a)?, genus_t_closed(a)?),
    };
    let n_count = (&frobenius + BigInt::from(1) - BigInt::from(genus.clone()))
        .to_biguint()
        .ok_or_else(|| Error::internal(format!("closed forms give g > F + 1 for {family}({a})")))?;
    Ok(Values {
        msg: msg_closed(family, a)?,
        e: embedding_dimension_closed(family, a)?,
        m: multiplicity_closed(family, a)?,
        frobenius,
        genus,
        n_count,
    })
}

fn oracle_values(s: &NumericalSemigroup) -> Result<Values> {
    let msg = s.minimal_generators()?;
    Ok(Values {
        e: msg.len() as u64,
        msg,
        m: s.multiplicity().clone(),
        frobenius: s.frobenius()?,
        genus: s.genus()?,
        n_count: s.sporadic_count()?,
    })
}

fn compare(closed: &Values, oracle: &Values, out: &mut Vec<Mismatch>) {
    let mut check = |label: &str, c: String, o: String| {
        if c != o {
            out.push(Mismatch {
                label: label.to_string(),
                closed: c,
                oracle: o,
            });
        }
    };
    let join = |v: &[BigUint]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    check("msg", join(&closed.msg), join(&oracle.msg));
    check("e", closed.e.to_string(), oracle.e.to_string());
    check("m", closed.m.to_string(), oracle.m.to_string());
    check("F", closed.frobenius.to_string(), oracle.frobenius.to_string());
    check("g", closed.genus.to_string(), oracle.genus.to_string());
    check("n", closed.n_count.to_string(), oracle.n_count.to_string());
}

fn first_apery_difference(closed: &AperyTable, oracle: &AperyTable) -> Option<Mismatch> {
    if closed.n() != oracle.n() {
        return Some(Mismatch {
            label: "apery.n".into(),
            closed: closed.n().to_string(),
            oracle: oracle.n().to_string(),
        });
    }
    (0..closed.n()).find(|&i| closed.w(i) != oracle.w(i)).map(|i| Mismatch {
        label: format!("apery.w({i})"),
        closed: closed.w(i).to_string(),
        oracle: oracle.w(i).to_string(),
    })
}

/// Builds a report with the default table bound; `use_oracle` selects
/// [`ReportMode::Both`] over [`ReportMode::Closed`].
pub fn report(family: Family, a: u32, use_oracle: bool) -> Result<FamilyReport> {
    let mode = if use_oracle { ReportMode::Both } else { ReportMode::Closed };
    report_with(family, a, mode, DEFAULT_TABLE_BOUND)
}

pub fn report_with(family: Family, a: u32, mode: ReportMode, bound: u64) -> Result<FamilyReport> {
    let use_closed = mode != ReportMode::Oracle && closed_applies(family, a);
    let semigroup = || build(family, a).with_table_bound(bound);

    let mut mismatches = Vec::new();
    let mut oracle_checked = false;
    let values = if use_closed {
        let closed = closed_values(family, a)?;
        if mode == ReportMode::Both {
            let s = semigroup();
            let oracle = oracle_values(&s)?;
            compare(&closed, &oracle, &mut mismatches);
            match family {
                Family::S => {
                    let table = apery_closed_form(a, bound)?;
                    mismatches.extend(first_apery_difference(&table, s.apery_multiplicity()?));
                }
                Family::T => {
                    if !check_s_t_decomposition(a, bound)? {
                        mismatches.push(Mismatch {
                            label: "S(a) = T(a) ∪ {l_a, 2l_a+1}".into(),
                            closed: "true".into(),
                            oracle: "false".into(),
                        });
                    }
                }
            }
            oracle_checked = true;
        }
        closed
    } else {
        oracle_values(&semigroup())?
    };

    #[allow(clippy::int_plus_one)]
    let wilf_ok = &values.frobenius + 1 <= BigInt::from(values.e) * BigInt::from(values.n_count.clone());
    Ok(FamilyReport {
        family,
        a,
        closed_form: use_closed,
        msg: values.msg,
        e: values.e,
        m: values.m,
        frobenius: values.frobenius,
        genus: values.genus,
        n_count: values.n_count,
        wilf_ok,
        oracle_checked,
        mismatches,
    })
}
