use std::ffi::{c_char, CStr, CString};
use std::ptr;

use lucas_frobenius_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { lf_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lf_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn sequence_values_as_strings() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lf_lucas(100, &mut out) }, LfStatus::Ok);
    assert_eq!(take_string(out), "792070839848372253127");
    assert_eq!(unsafe { lf_fibonacci(12, &mut out) }, LfStatus::Ok);
    assert_eq!(take_string(out), "144");
    assert_eq!(unsafe { lf_lucas_tilde(5, &mut out) }, LfStatus::Ok);
    assert_eq!(take_string(out), "11");

    let before = out;
    assert_eq!(unsafe { lf_lucas(-2, &mut out) }, LfStatus::DomainError);
    assert_eq!(out, before, "out-pointer untouched on failure");
    assert!(!last_error().is_empty());
}

#[test]
fn decompose_with_caller_buffer() {
    let x = CString::new("1000").unwrap();
    let mut len = 0usize;
    assert_eq!(unsafe { lf_decompose(x.as_ptr(), ptr::null_mut(), 0, &mut len) }, LfStatus::BufferTooSmall);
    assert!(len > 0);
    let mut buf = vec![0usize; len];
    assert_eq!(unsafe { lf_decompose(x.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut len) }, LfStatus::Ok);
    let sum: u64 = buf.iter().map(|&i| u64::try_from(lucas_frobenius::lucas_tilde(i as i64).unwrap()).unwrap()).sum();
    assert_eq!(sum, 1000);

    let bad = CString::new("12a").unwrap();
    assert_eq!(unsafe { lf_decompose(bad.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut len) }, LfStatus::InvalidArgument);
    assert_eq!(unsafe { lf_decompose(ptr::null(), buf.as_mut_ptr(), buf.len(), &mut len) }, LfStatus::NullPointer);
}

#[test]
fn generic_semigroup_handle() {
    let gens = [5u64, 7, 9];
    let mut sg = ptr::null_mut();
    assert_eq!(unsafe { lf_semigroup_new(gens.as_ptr(), gens.len(), &mut sg) }, LfStatus::Ok);

    let (mut f, mut g, mut n, mut m, mut e) = (0i64, 0u64, 0u64, 0u64, 0usize);
    unsafe {
        assert_eq!(lf_semigroup_frobenius(sg, &mut f), LfStatus::Ok);
        assert_eq!(lf_semigroup_genus(sg, &mut g), LfStatus::Ok);
        assert_eq!(lf_semigroup_sporadic_count(sg, &mut n), LfStatus::Ok);
        assert_eq!(lf_semigroup_multiplicity(sg, &mut m), LfStatus::Ok);
        assert_eq!(lf_semigroup_embedding_dimension(sg, &mut e), LfStatus::Ok);
    }
    // <5,7,9> has gaps 1,2,3,4,6,8,11,13.
    assert_eq!((f, g, n, m, e), (13, 8, 6, 5, 3));
    assert_eq!(g + n, (f + 1) as u64);

    let mut w = [0u64; 5];
    let mut len = 0;
    assert_eq!(unsafe { lf_semigroup_apery(sg, w.as_mut_ptr(), w.len(), &mut len) }, LfStatus::Ok);
    assert_eq!(w, [0, 16, 7, 18, 9]);

    let mut member = true;
    assert_eq!(unsafe { lf_semigroup_contains(sg, 13, &mut member) }, LfStatus::Ok);
    assert!(!member);
    assert_eq!(unsafe { lf_semigroup_contains(sg, 14, &mut member) }, LfStatus::Ok);
    assert!(member);

    let mut wilf = false;
    assert_eq!(unsafe { lf_semigroup_wilf(sg, &mut wilf) }, LfStatus::Ok);
    assert!(wilf);
    unsafe { lf_semigroup_free(sg) };
}

#[test]
fn semigroup_errors() {
    let gens = [4u64, 6];
    let mut sg = ptr::null_mut();
    assert_eq!(unsafe { lf_semigroup_new(gens.as_ptr(), gens.len(), &mut sg) }, LfStatus::NotNumericalSemigroup);
    assert!(sg.is_null());
    assert!(last_error().contains('2'));

    assert_eq!(unsafe { lf_semigroup_new(ptr::null(), 3, &mut sg) }, LfStatus::NullPointer);

    let mut f = 0;
    assert_eq!(unsafe { lf_semigroup_frobenius(ptr::null(), &mut f) }, LfStatus::NullPointer);

    let gens = [1_000_003u64, 1_000_033];
    assert_eq!(unsafe { lf_semigroup_new(gens.as_ptr(), gens.len(), &mut sg) }, LfStatus::Ok);
    assert_eq!(unsafe { lf_semigroup_set_table_bound(sg, 1000) }, LfStatus::Ok);
    assert_eq!(unsafe { lf_semigroup_frobenius(sg, &mut f) }, LfStatus::ResourceError);
    unsafe { lf_semigroup_free(sg) };

    unsafe {
        lf_semigroup_free(ptr::null_mut());
        lf_report_free(ptr::null_mut());
        lf_string_free(ptr::null_mut());
    }
}

#[test]
fn family_semigroup_and_report_agree() {
    for a in 3..=15u32 {
        for fam in [LfFamily::S, LfFamily::T] {
            let mut sg = ptr::null_mut();
            assert_eq!(unsafe { lf_semigroup_new_family(fam, a, &mut sg) }, LfStatus::Ok);
            let mut f = 0i64;
            assert_eq!(unsafe { lf_semigroup_frobenius(sg, &mut f) }, LfStatus::Ok);
            unsafe { lf_semigroup_free(sg) };

            let mut r = ptr::null_mut();
            assert_eq!(unsafe { lf_report_new(fam, a, LfMode::Both, 0, &mut r) }, LfStatus::Ok);
            let mut out = ptr::null_mut();
            assert_eq!(unsafe { lf_report_frobenius(r, &mut out) }, LfStatus::Ok);
            assert_eq!(take_string(out), f.to_string(), "{fam:?}({a})");
            let mut mismatches = 99;
            assert_eq!(unsafe { lf_report_mismatch_count(r, &mut mismatches) }, LfStatus::Ok);
            assert_eq!(mismatches, 0);
            unsafe { lf_report_free(r) };
        }
    }
}

#[test]
fn large_report_through_strings() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { lf_report_new(LfFamily::S, 200, LfMode::Closed, 0, &mut r) }, LfStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lf_report_frobenius(r, &mut out) }, LfStatus::Ok);
    let l200 = lucas_frobenius::lucas(200).unwrap();
    assert_eq!(take_string(out), (l200 * 100u32 - 1u32).to_string());

    let mut e = 0;
    assert_eq!(unsafe { lf_report_embedding_dimension(r, &mut e) }, LfStatus::Ok);
    assert_eq!(e, 201);

    assert_eq!(unsafe { lf_report_json(r, &mut out) }, LfStatus::Ok);
    let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(json["a"], "200");
    unsafe { lf_report_free(r) };

    assert_eq!(unsafe { lf_report_new(LfFamily::S, 200, LfMode::Oracle, 1000, &mut r) }, LfStatus::ResourceError);
}
