//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use lucas_frobenius::lucas_family::{
    apery_closed_form, apery_from_index_sets, apery_max_closed, build_s, build_t, check_s_t_decomposition,
    frobenius_s_closed, frobenius_t_closed, genus_beta_sum, genus_s_binomial, genus_s_closed, genus_t_closed,
    msg_closed, report, report_with,
};
use lucas_frobenius::semigroup::DEFAULT_TABLE_BOUND;
use lucas_frobenius::zeckendorf::{
    beta, beta_bruteforce, count_sparse_subsets, decompose, enumerate_l, enumerate_sparse_subsets, gamma,
};
use lucas_frobenius::{lucas, lucas_tilde, Family, ReportMode, SequenceCache};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn l(a: u32) -> u64 {
    lucas(a as i64).unwrap().to_u64().unwrap()
}

fn bu(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn is_lucas_number(x: u64) -> bool {
    // 2, 1, 3, 4, 7, ... : every value of l_n for n >= 0.
    x == 2 || (0..93).map(|i| lucas_tilde(i).unwrap()).any(|v| v == BigInt::from(x))
}

fn ceil_half(k: i64) -> usize {
    (k.max(0) as usize).div_ceil(2)
}

/// S(6) worked example.
fn ac1() -> Check {
    let msg = build_s(6).minimal_generators().map_err(|e| e.to_string())?;
    ensure(msg == bu(&[18, 19, 20, 21, 22, 25, 29]), || format!("msg(S(6)) = {msg:?}"))?;
    ensure(msg.len() == 7, || "e(S(6)) != 7".into())?;
    let table = apery_closed_form(6, DEFAULT_TABLE_BOUND).map_err(|e| e.to_string())?;
    let expected: [u64; 18] = [0, 19, 20, 21, 22, 41, 42, 25, 44, 45, 46, 29, 48, 49, 50, 51, 70, 71];
    ensure(table.values() == expected, || format!("Ap(S(6), 18) = {:?}", table.values()))?;
    ensure(frobenius_s_closed(6).unwrap() == BigInt::from(53), || "F(S(6)) != 53".into())?;
    ensure(genus_s_closed(6).unwrap() == BigUint::from(30u32), || "g(S(6)) != 30".into())
}

/// Closed-form Apéry table, F and g of S(a) against the engine, a in [2, 20].
fn ac2() -> Check {
    for a in 2..=20 {
        let s = build_s(a);
        let oracle = s.apery_multiplicity().map_err(|e| e.to_string())?;
        let closed = apery_closed_form(a, DEFAULT_TABLE_BOUND).map_err(|e| e.to_string())?;
        ensure(closed == *oracle, || format!("Apéry table differs at a={a}"))?;
        ensure(frobenius_s_closed(a).unwrap() == s.frobenius().unwrap(), || format!("F differs at a={a}"))?;
        ensure(genus_s_closed(a).unwrap() == s.genus().unwrap(), || format!("g differs at a={a}"))?;
        ensure(
            BigUint::from(oracle.max()) == apery_max_closed(a).unwrap(),
            || format!("max Apéry differs at a={a}"),
        )?;
    }
    Ok(())
}

/// T(a) for a in [3, 16].
fn ac3() -> Check {
    for a in 3..=16 {
        let t = build_t(a);
        let closed_msg = msg_closed(Family::T, a).unwrap();
        ensure(t.minimal_generators().unwrap() == closed_msg, || format!("msg(T({a})) not minimal"))?;
        ensure(t.frobenius().unwrap() == frobenius_t_closed(a).unwrap(), || format!("F(T({a}))"))?;
        ensure(t.genus().unwrap() == genus_t_closed(a).unwrap(), || format!("g(T({a}))"))?;
        ensure(
            check_s_t_decomposition(a, DEFAULT_TABLE_BOUND).map_err(|e| e.to_string())?,
            || format!("S({a}) != T({a}) ∪ {{l_a, 2l_a+1}}"),
        )?;
        let la = l(a);
        for x in [la, 2 * la + 1] {
            ensure(!t.membership(&BigInt::from(x)).unwrap(), || format!("{x} ∈ T({a})"))?;
        }
    }
    Ok(())
}

/// Decomposition invariants and β/γ identities.
fn ac4() -> Check {
    for x in 1..=100_000u64 {
        let xb = BigInt::from(x);
        let d = decompose(&xb).map_err(|e| format!("x={x}: {e}"))?;
        d.validate().map_err(|e| format!("x={x}: {e}"))?;
        let g = gamma(&xb).unwrap();
        let b = beta(&xb).unwrap();
        ensure(d.gamma() == Some(g) && d.beta() == b, || format!("x={x}: β/γ disagree"))?;
        // β(x) = β(x - l̃_γ(x)) + 1
        let rest = &xb - lucas_tilde(g as i64).unwrap();
        ensure(beta(&rest).unwrap() + 1 == b, || format!("x={x}: β recursion"))?;
        if !is_lucas_number(x) {
            ensure(rest >= BigInt::from(1), || format!("x={x}: remainder zero"))?;
            ensure(gamma(&rest).unwrap() + 2 <= g, || format!("x={x}: γ drop"))?;
            ensure(b <= ceil_half(g as i64), || format!("x={x}: β > ⌈γ/2⌉"))?;
        }
    }
    for x in 1..=2000u64 {
        let g = gamma(&BigInt::from(x)).unwrap();
        let b = beta(&BigInt::from(x)).unwrap() as u64;
        ensure(b == beta_bruteforce(x, g), || format!("x={x}: β != DP"))?;
    }
    for a in std::iter::once(0).chain(2..=25) {
        let v = lucas_tilde(a).unwrap() - 1;
        ensure(beta(&v).unwrap() == ceil_half(a - 1), || format!("β(l̃_{a} - 1)"))?;
    }
    Ok(())
}

/// Three genus routes and the genus recurrence.
fn ac5() -> Check {
    for a in 3..=60 {
        ensure(genus_s_closed(a).unwrap() == genus_s_binomial(a).unwrap(), || format!("a={a}: closed != binomial"))?;
    }
    for a in 3..=20 {
        ensure(
            genus_s_closed(a).unwrap() == genus_beta_sum(a, DEFAULT_TABLE_BOUND).unwrap(),
            || format!("a={a}: closed != β-sum"),
        )?;
    }
    for a in 5..=60u32 {
        let lhs = genus_s_closed(a).unwrap();
        let rhs = genus_s_closed(a - 1).unwrap()
            + genus_s_closed(a - 2).unwrap()
            + lucas(a as i64 - 2).unwrap().to_biguint().unwrap();
        ensure(lhs == rhs, || format!("a={a}: genus recurrence"))?;
    }
    Ok(())
}

/// Sparse-subset counting, 𝓛(a), and the index-set reconstruction of Ap.
fn ac6() -> Check {
    for n in 0..=18usize {
        // Exhaustive: every bitmask over {0..n-1}, bucketed by size.
        let mut by_size = vec![0u64; n + 1];
        for mask in 0u32..(1 << n) {
            if mask & (mask >> 1) == 0 {
                by_size[mask.count_ones() as usize] += 1;
            }
        }
        for m in 0..=n {
            let want_exhaustive = BigUint::from(by_size[m]);
            let counted = count_sparse_subsets(n as i64, m as i64).unwrap();
            ensure(counted == want_exhaustive, || format!("({n},{m}): formula {counted} vs exhaustive {want_exhaustive}"))?;
            let got = enumerate_sparse_subsets(n, m);
            ensure(got.iter().all(|s| s.is_valid() && s.len() == m), || format!("({n},{m}) invalid set"))?;
            let want = count_sparse_subsets(n as i64, m as i64).unwrap();
            ensure(BigUint::from(got.len()) == want, || format!("({n},{m}): {} vs {want}", got.len()))?;
        }
    }
    for a in 4..=15u32 {
        let sets = enumerate_l(a as i64).unwrap();
        ensure(sets.len() as u64 == l(a) - 1, || format!("|𝓛({a})| = {}", sets.len()))?;
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        ensure(sorted.len() == sets.len(), || format!("𝓛({a}) has repeats"))?;

        let rebuilt = apery_from_index_sets(a).map_err(|e| e.to_string())?;
        let mut oracle: Vec<u64> = build_s(a).apery_multiplicity().unwrap().values()[1..].to_vec();
        oracle.sort_unstable();
        ensure(rebuilt == oracle, || format!("a={a}: rebuilt Apéry set differs"))?;
    }
    Ok(())
}

/// Wilf's inequality.
fn ac7() -> Check {
    for family in [Family::S, Family::T] {
        for a in 0..=60 {
            let r = report_with(family, a, ReportMode::Closed, DEFAULT_TABLE_BOUND).map_err(|e| e.to_string())?;
            ensure(r.wilf_ok, || format!("Wilf fails for {family}({a})"))?;
        }
    }
    for (family, lo) in [(Family::S, 2), (Family::T, 3)] {
        for a in lo..=16 {
            let closed = report_with(family, a, ReportMode::Closed, DEFAULT_TABLE_BOUND).unwrap();
            let sg = if family == Family::S { build_s(a) } else { build_t(a) };
            let n = sg.sporadic_count().unwrap();
            ensure(n == closed.n_count, || format!("{family}({a}): n oracle {n} vs closed {}", closed.n_count))?;
            ensure(sg.wilf_check().unwrap(), || format!("{family}({a}): oracle Wilf fails"))?;
        }
    }
    Ok(())
}

/// Closed forms at scale.
fn ac8() -> Check {
    let started = Instant::now();
    let r = report(Family::S, 200, false).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("report(S, 200) took {elapsed:?}"))?;

    // Independent arithmetic on a private cache.
    let mut cache = SequenceCache::new();
    let l200 = cache.lucas(200).unwrap();
    ensure(r.frobenius == &l200 * 100 - 1, || "F(S(200)) != 100 l_200 - 1".into())?;
    let mut g = vec![BigInt::from(0); 201];
    g[3] = BigInt::from(3);
    g[4] = BigInt::from(8);
    for a in 5..=200 {
        g[a] = &g[a - 1] + &g[a - 2] + cache.lucas(a as i64 - 2).unwrap();
    }
    ensure(BigInt::from(r.genus.clone()) == g[200], || "g(S(200)) disagrees with recurrence".into())?;
    ensure(r.e == 201 && r.msg.len() == 201 && r.wilf_ok, || "S(200) e/msg/Wilf".into())?;

    for a in 1..=500 {
        genus_s_closed(a).map_err(|e| format!("a={a}: {e}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("AC1 golden S(6) example", ac1, Duration::from_secs(1)),
        ("AC2 S(a) closed forms = oracle, a in [2,20]", ac2, Duration::from_secs(60)),
        ("AC3 T(a) closed forms = oracle, a in [3,16]", ac3, Duration::from_secs(60)),
        ("AC4 Zeckendorf suite", ac4, Duration::from_secs(30)),
        ("AC5 genus pipeline agreement", ac5, Duration::from_secs(10)),
        ("AC6 combinatorics and index-set reconstruction", ac6, Duration::from_secs(30)),
        ("AC7 Wilf inequality", ac7, Duration::from_secs(5)),
        ("AC8 closed forms at scale", ac8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
        });
        match result {
            Ok(()) => println!("[PASS] {name} ({:.3}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name} ({:.3}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
