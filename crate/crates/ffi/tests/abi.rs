use std::ffi::{CStr, CString};
use std::ptr;

use lctkit_ffi::*;

fn rational(num: i64, den: i64) -> LctRational {
    LctRational {
        num,
        den,
        infinite: false,
    }
}

const INF: LctRational = LctRational {
    num: 0,
    den: 0,
    infinite: true,
};

fn last_error() -> String {
    unsafe { CStr::from_ptr(lct_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn system(text: &str) -> *mut LctRootSystem {
    let text = CString::new(text).unwrap();
    let mut rs = ptr::null_mut();
    assert_eq!(
        unsafe { lct_root_system_new(text.as_ptr(), &mut rs) },
        LctStatus::Ok
    );
    assert!(!rs.is_null());
    rs
}

#[test]
fn orbit_epsilon_with_witness() {
    let parts = [6u32, 4];
    let mut out = INF;
    let mut k = 0usize;
    let status = unsafe { lct_orbit_epsilon(parts.as_ptr(), parts.len(), &mut out, &mut k) };
    assert_eq!(status, LctStatus::Ok);
    assert_eq!((out, k), (rational(13, 41), 2));

    let zero = [1u32; 5];
    let status = unsafe { lct_orbit_epsilon(zero.as_ptr(), zero.len(), &mut out, ptr::null_mut()) };
    assert_eq!(status, LctStatus::Ok);
    assert_eq!(out, INF);
}

#[test]
fn handles_and_lattice_routes() {
    let rs = system("G2");
    let (mut h, mut rank, mut npos) = (0u32, 0usize, 0usize);
    unsafe {
        assert_eq!(lct_root_system_coxeter(rs, &mut h), LctStatus::Ok);
        assert_eq!(lct_root_system_rank(rs, &mut rank), LctStatus::Ok);
        assert_eq!(lct_root_system_num_positive(rs, &mut npos), LctStatus::Ok);
    }
    assert_eq!((h, rank, npos), (6, 2, 6));
    let mut out = INF;
    assert_eq!(unsafe { lct_arrangement_lct(rs, &mut out) }, LctStatus::Ok);
    assert_eq!(out, rational(1, 3));
    unsafe { lct_root_system_free(rs) };

    let mut gl = ptr::null_mut();
    assert_eq!(unsafe { lct_root_system_gl(4, &mut gl) }, LctStatus::Ok);
    // Levi gl2 × gl2: simple roots 1 and 3.
    let labels = [1usize, 3];
    let (mut closed, mut oracle) = (INF, INF);
    unsafe {
        assert_eq!(
            lct_relative_lct(gl, labels.as_ptr(), 2, 1, &mut closed),
            LctStatus::Ok
        );
        assert_eq!(
            lct_relative_lct_oracle(gl, labels.as_ptr(), 2, 1, &mut oracle),
            LctStatus::Ok
        );
    }
    assert_eq!(closed, oracle);
    assert_eq!(closed, rational(1, 1));
    unsafe { lct_root_system_free(gl) };
    unsafe { lct_root_system_free(ptr::null_mut()) };
}

#[test]
fn thin_wrappers() {
    let mut out = INF;
    assert_eq!(unsafe { lct_power_measure(10, 3, &mut out) }, LctStatus::Ok);
    assert_eq!(out, rational(1, 3));
    let lambda = [3u32, 3, 2];
    assert_eq!(
        unsafe { lct_homogeneous(lambda.as_ptr(), 3, &mut out) },
        LctStatus::Ok
    );
    assert_eq!(out, rational(1, 3));
    assert_eq!(
        unsafe { lct_mult_exponent(rational(2, 5), &mut out) },
        LctStatus::Ok
    );
    assert_eq!(out, rational(3, 7));
    assert_eq!(unsafe { lct_mult_exponent(INF, &mut out) }, LctStatus::Ok);
    assert_eq!(out, rational(-1, 1));
    let factors = CString::new("A5,D4").unwrap();
    assert_eq!(
        unsafe { lct_rep_bound(factors.as_ptr(), &mut out) },
        LctStatus::Ok
    );
    assert_eq!(out, rational(1, 3));
    let version = unsafe { CStr::from_ptr(lct_version()) };
    assert_eq!(version.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn error_codes_and_messages() {
    let mut out = INF;
    let bad = [1u32, 2];
    assert_eq!(
        unsafe { lct_orbit_epsilon(bad.as_ptr(), 2, &mut out, ptr::null_mut()) },
        LctStatus::InvalidInput
    );
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { lct_power_measure(10, 3, &mut out) }, LctStatus::Ok);
    assert!(last_error().is_empty());

    assert_eq!(
        unsafe { lct_power_measure(10, 3, ptr::null_mut()) },
        LctStatus::NullPointer
    );
    assert_eq!(
        unsafe { lct_orbit_epsilon(ptr::null(), 3, &mut out, ptr::null_mut()) },
        LctStatus::NullPointer
    );
    assert_eq!(
        unsafe { lct_arrangement_lct(ptr::null(), &mut out) },
        LctStatus::NullPointer
    );
    assert_eq!(
        unsafe { lct_mult_exponent(rational(1, 0), &mut out) },
        LctStatus::InvalidInput
    );

    let mut rs = ptr::null_mut();
    let text = CString::new("Q7").unwrap();
    assert_eq!(
        unsafe { lct_root_system_new(text.as_ptr(), &mut rs) },
        LctStatus::InvalidInput
    );
    assert!(last_error().contains("Q7"), "{}", last_error());

    let big = system("E8");
    assert_eq!(
        unsafe { lct_arrangement_lct(big, &mut out) },
        LctStatus::CapExceeded
    );
    let mut h = 0;
    assert_eq!(
        unsafe { lct_root_system_coxeter(big, &mut h) },
        LctStatus::Ok
    );
    assert_eq!(h, 30);
    unsafe { lct_root_system_free(big) };

    let pair = system("A1,A2");
    assert_eq!(
        unsafe { lct_root_system_coxeter(pair, &mut h) },
        LctStatus::InvalidInput
    );
    unsafe { lct_root_system_free(pair) };
}

#[test]
fn errors_are_per_thread() {
    let mut out = INF;
    assert_eq!(
        unsafe { lct_power_measure(1, 3, &mut out) },
        LctStatus::InvalidInput
    );
    let other = std::thread::spawn(last_error).join().unwrap();
    assert!(other.is_empty());
    assert!(!last_error().is_empty());
}
