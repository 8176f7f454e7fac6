//! C ABI over `lctkit`.
//!
//! Every fallible call returns an [`LctStatus`] and writes its result
//! through an out-pointer. On failure, [`lct_last_error`] returns a message
//! for the calling thread. Root systems are opaque handles created by
//! [`lct_root_system_new`] or [`lct_root_system_gl`] and released with
//! [`lct_root_system_free`]. Enumeration caps are the library defaults.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lctkit::apps::{self, PowerMeasureSpec};
use lctkit::epsilon::{self, Witness};
use lctkit::error::Error;
use lctkit::lattice::{ArrangementLattice, LatticeCaps};
use lctkit::partition::Partition;
use lctkit::rational::ExtRational;
use lctkit::roots::{CartanType, RootSystem, Subsystem};
use num_traits::ToPrimitive;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LctStatus {
    Ok = 0,
    InvalidInput = 2,
    CapExceeded = 3,
    Internal = 4,
    NullPointer = 5,
    /// The exact value does not fit in 64-bit integers.
    Overflow = 6,
}

/// An exact value `num/den` with `den > 0`, or `+∞` when `infinite` is set
/// (then `num` and `den` are 0).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LctRational {
    pub num: i64,
    pub den: i64,
    pub infinite: bool,
}

/// Opaque root system handle.
pub struct LctRootSystem {
    inner: RootSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(LctStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            3 => LctStatus::CapExceeded,
            4 => LctStatus::Internal,
            _ => LctStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

/// Run `body`, store its value through `out` and translate errors and panics.
fn guarded<T>(out: *mut T, body: impl FnOnce() -> FfiResult<T>) -> LctStatus {
    if out.is_null() {
        set_error("null output pointer");
        return LctStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            // SAFETY: checked non-null; the caller guarantees it is writable.
            unsafe { out.write(value) };
            set_error("");
            LctStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside lctkit");
            LctStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(LctStatus::NullPointer, "null input pointer".into())
}

fn to_c(value: &ExtRational) -> FfiResult<LctRational> {
    let Some(r) = value.finite() else {
        return Ok(LctRational {
            num: 0,
            den: 0,
            infinite: true,
        });
    };
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(num), Some(den)) => Ok(LctRational {
            num,
            den,
            infinite: false,
        }),
        _ => Err(Failure(
            LctStatus::Overflow,
            format!("{value} does not fit in i64"),
        )),
    }
}

fn from_c(value: LctRational) -> FfiResult<ExtRational> {
    match value {
        LctRational { infinite: true, .. } => Ok(ExtRational::Infinite),
        LctRational { den: 0, .. } => {
            Err(Failure(LctStatus::InvalidInput, "zero denominator".into()))
        }
        LctRational { num, den, .. } => Ok(ExtRational::ratio(num, den)),
    }
}

/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> FfiResult<&'a str> {
    if text.is_null() {
        return Err(null());
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure(LctStatus::InvalidInput, "input is not UTF-8".into()))
}

/// # Safety
/// `data` must be null or point to `len` readable elements.
unsafe fn read_slice<'a, T>(data: *const T, len: usize) -> FfiResult<&'a [T]> {
    match (data.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(null()),
        (false, _) => Ok(std::slice::from_raw_parts(data, len)),
    }
}

/// # Safety
/// `parts` must point to `len` readable values.
unsafe fn read_partition(parts: *const u32, len: usize) -> FfiResult<Partition> {
    Ok(Partition::new(read_slice(parts, len)?.to_vec())?)
}

/// # Safety
/// `rs` must be null or a live handle.
unsafe fn handle<'a>(rs: *const LctRootSystem) -> FfiResult<&'a RootSystem> {
    rs.as_ref().map(|h| &h.inner).ok_or_else(null)
}

/// Message for the most recent failure on this thread; empty after a
/// success. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn lct_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lct_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Build a root system from text such as `"A3"`, `"A5,D4"` or `"gl4"`.
///
/// # Safety
/// `type_text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_new(
    type_text: *const c_char,
    out: *mut *mut LctRootSystem,
) -> LctStatus {
    guarded(out, || {
        let inner = RootSystem::parse(read_str(type_text)?)?;
        Ok(Box::into_raw(Box::new(LctRootSystem { inner })))
    })
}

/// The root system of gl_n in its n-coordinate realization.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_gl(n: usize, out: *mut *mut LctRootSystem) -> LctStatus {
    guarded(out, || {
        let inner = RootSystem::gl(n)?;
        Ok(Box::into_raw(Box::new(LctRootSystem { inner })))
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `rs` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_free(rs: *mut LctRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Semisimple rank.
///
/// # Safety
/// `rs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_rank(
    rs: *const LctRootSystem,
    out: *mut usize,
) -> LctStatus {
    guarded(out, || Ok(handle(rs)?.rank()))
}

/// Number of positive roots.
///
/// # Safety
/// `rs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_num_positive(
    rs: *const LctRootSystem,
    out: *mut usize,
) -> LctStatus {
    guarded(out, || Ok(handle(rs)?.num_positive()))
}

/// Coxeter number; the system must be simple.
///
/// # Safety
/// `rs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_root_system_coxeter(
    rs: *const LctRootSystem,
    out: *mut u32,
) -> LctStatus {
    guarded(out, || {
        let rs = handle(rs)?;
        if rs.factors().len() != 1 {
            return Err(Error::Reducible.into());
        }
        let h = rs.coxeter_number()?;
        h.to_u32()
            .ok_or(Failure(LctStatus::Overflow, format!("h = {h}")))
    })
}

/// ε⋆ of the nilpotent orbit of gl_n with Jordan blocks `parts`. When
/// `witness_k` is non-null it receives the minimizing prefix length, or 0
/// for the zero orbit.
///
/// # Safety
/// `parts` must point to `len` values; `out` must be writable; `witness_k`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn lct_orbit_epsilon(
    parts: *const u32,
    len: usize,
    out: *mut LctRational,
    witness_k: *mut usize,
) -> LctStatus {
    guarded(out, || {
        let report = epsilon::epsilon_orbit_gln(&read_partition(parts, len)?)?;
        let value = to_c(&report.value)?;
        if let Some(k) = witness_k.as_mut() {
            *k = match report.witness {
                Witness::K(k) => k,
                _ => 0,
            };
        }
        Ok(value)
    })
}

/// lct of the Weyl discriminant, from the dense flats of the arrangement.
///
/// # Safety
/// `rs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_arrangement_lct(
    rs: *const LctRootSystem,
    out: *mut LctRational,
) -> LctStatus {
    guarded(out, || {
        let lattice = ArrangementLattice::enumerate(handle(rs)?, LatticeCaps::default())?;
        to_c(&lattice.lct().0)
    })
}

/// # Safety
/// `labels` must point to `len` values.
unsafe fn levi(rs: &RootSystem, labels: *const usize, len: usize) -> FfiResult<Subsystem> {
    Ok(rs.levi_subsystem(read_slice(labels, len)?)?)
}

/// Relative lct for the standard Levi spanned by the 1-based simple-root
/// `labels`, by the closed minimum over simple-derived Levis.
///
/// # Safety
/// `rs` must be a live handle; `labels` must point to `len` values; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_relative_lct(
    rs: *const LctRootSystem,
    labels: *const usize,
    len: usize,
    m: u32,
    out: *mut LctRational,
) -> LctStatus {
    guarded(out, || {
        let rs = handle(rs)?;
        let levi = levi(rs, labels, len)?;
        to_c(&epsilon::general_relative_lct(rs, &levi, m, LatticeCaps::default())?.value)
    })
}

/// Relative lct as in [`lct_relative_lct`], from the intersection lattice.
///
/// # Safety
/// As for [`lct_relative_lct`].
#[no_mangle]
pub unsafe extern "C" fn lct_relative_lct_oracle(
    rs: *const LctRootSystem,
    labels: *const usize,
    len: usize,
    m: u32,
    out: *mut LctRational,
) -> LctStatus {
    guarded(out, || {
        let rs = handle(rs)?;
        let levi = levi(rs, labels, len)?;
        let lattice = ArrangementLattice::enumerate(rs, LatticeCaps::default())?;
        to_c(&lattice.relative_lct(&levi, m)?.0)
    })
}

/// ε⋆ of the `ell`-th power of a Haar-random `n × n` unitary matrix.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_power_measure(n: u32, ell: u32, out: *mut LctRational) -> LctStatus {
    guarded(out, || {
        let spec = PowerMeasureSpec::new(n, ell)?;
        to_c(&apps::epsilon_power_measure(&spec)?)
    })
}

/// ε⋆ of `L²(U_n / U_λ)` for block sizes `parts`.
///
/// # Safety
/// `parts` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_homogeneous(
    parts: *const u32,
    len: usize,
    out: *mut LctRational,
) -> LctStatus {
    guarded(out, || {
        to_c(&apps::epsilon_homogeneous_unitary(&read_partition(
            parts, len,
        )?)?)
    })
}

/// Multiplicity exponent `(1 − ε)/(1 + ε)`; `+∞` maps to −1.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_mult_exponent(
    epsilon: LctRational,
    out: *mut LctRational,
) -> LctStatus {
    guarded(out, || to_c(&apps::mult_exponent(&from_c(epsilon)?)?))
}

/// Lower bound `min 2/h` over simple factors such as `"A5,D4"`.
///
/// # Safety
/// `factors` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lct_rep_bound(factors: *const c_char, out: *mut LctRational) -> LctStatus {
    guarded(out, || {
        let list = CartanType::parse_list(read_str(factors)?)?;
        to_c(&epsilon::lower_bound_representation(&list)?.value)
    })
}
