//! C interface to `cw_moduli`.
//!
//! Groups and character tables are opaque handles created by `*_new`
//! functions and released with the matching `*_free`. Every fallible call
//! returns a `CwStatus`; on failure a message is kept per thread and can be
//! read with `cw_last_error_message`. Output arrays are caller-allocated and
//! their capacity is passed alongside; when it is too small the call returns
//! `CW_STATUS_BUFFER_TOO_SMALL` and stores the required length in `*needed`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cw_moduli::chartab::CharacterTable;
use cw_moduli::cw::cw_character;
use cw_moduli::error::{Error, GroupError};
use cw_moduli::group::{FiniteGroup, GroupBuilder, GroupSpec, MetacyclicParams, DEFAULT_ORDER_CAP};
use cw_moduli::hurwitz::{visit_hurwitz_vectors, BranchingData, EnumOptions, HurwitzVector};
use cw_moduli::metacyclic::{rr_component_lower_bound, schur_multiplier_order};
use cw_moduli::modular::DEFAULT_SEED;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Unparsable group spec or vector JSON.
    Parse = 3,
    Group = 4,
    Arithmetic = 5,
    CharTable = 6,
    Hurwitz = 7,
    Multiplicity = 8,
    Decomposition = 9,
    Metacyclic = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

/// A finite group.
pub struct CwGroup(FiniteGroup);

/// A character table together with its working prime.
pub struct CwTable(CharacterTable);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> CwStatus {
    if e.is_usage() {
        return CwStatus::Parse;
    }
    match e {
        Error::Group(_) | Error::Usage(_) => CwStatus::Group,
        Error::Arithmetic(_) => CwStatus::Arithmetic,
        Error::CharTable(_) => CwStatus::CharTable,
        Error::Hurwitz(_) => CwStatus::Hurwitz,
        Error::Cw(_) => CwStatus::Multiplicity,
        Error::Decomposition(_) => CwStatus::Decomposition,
        Error::Metacyclic(_) => CwStatus::Metacyclic,
    }
}

enum Failure {
    Status(CwStatus, String),
    Domain(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CwStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Domain(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            CwStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(CwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Status(CwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(p: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(v);
    Ok(())
}

unsafe fn write_slice(src: &[u64], out: *mut u64, cap: usize, needed: *mut usize) -> Result<(), Failure> {
    if !needed.is_null() {
        needed.write(src.len());
    }
    if cap < src.len() {
        return Err(Failure::Status(
            CwStatus::BufferTooSmall,
            format!("buffer holds {cap} values, {} needed", src.len()),
        ));
    }
    if src.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("out"));
    }
    std::ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    Ok(())
}

/// Copies the last error message of this thread into `buf` (NUL
/// terminated, truncated to `len - 1` bytes) and returns the full message
/// length excluding the terminator.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cw_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            buf.add(n).write(0);
        }
        msg.len()
    })
}

/// Builds a group from a spec such as `cyclic:3`, `metacyclic:4,2,3` or
/// `perm:(1 2 3);(1 2)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_group_new(spec: *const c_char, out: *mut *mut CwGroup) -> CwStatus {
    guard(|| {
        let text = string(spec, "spec")?;
        let g = text.parse::<GroupSpec>()?.build_with(GroupBuilder::new(DEFAULT_ORDER_CAP))?;
        write_out(out, Box::into_raw(Box::new(CwGroup(g))), "out")
    })
}

/// # Safety
/// `g` must be null or a handle from `cw_group_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cw_group_free(g: *mut CwGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn cw_group_order(g: *const CwGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Genus of the curve encoded by a Hurwitz vector given as JSON
/// `{"g_quot": .., "handles": [..], "branches": [..]}`; the vector is
/// validated first.
///
/// # Safety
/// `g` must be a live group handle, `vector_json` NUL-terminated, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cw_vector_genus(g: *const CwGroup, vector_json: *const c_char, out: *mut i64) -> CwStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        let v = HurwitzVector::from_json(string(vector_json, "vector_json")?)?;
        v.validate(g)?;
        write_out(out, v.genus(g)?, "out")
    })
}

/// Counts Hurwitz vectors with quotient genus `g_quot` and the `n_orders`
/// branch orders in `orders`, optionally one per conjugacy orbit.
///
/// # Safety
/// `g` must be a live group handle, `orders` must point to `n_orders`
/// values (or be null when `n_orders == 0`), `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_count_hurwitz_vectors(
    g: *const CwGroup,
    g_quot: usize,
    orders: *const usize,
    n_orders: usize,
    up_to_conjugacy: bool,
    out: *mut u64,
) -> CwStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        let orders = if n_orders == 0 {
            Vec::new()
        } else if orders.is_null() {
            return Err(null("orders"));
        } else {
            std::slice::from_raw_parts(orders, n_orders).to_vec()
        };
        let d = BranchingData::new(g, g_quot, orders)?;
        let opts = EnumOptions { up_to_conjugacy, cap: usize::MAX, threads: 1 };
        let n = visit_hurwitz_vectors(g, &d, &opts, |_| std::ops::ControlFlow::Continue(()))?;
        write_out(out, n as u64, "out")
    })
}

/// Character table valid for levels up to `k_max` and genera up to `g_max`.
///
/// # Safety
/// `g` must be a live group handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cw_table_new(g: *const CwGroup, k_max: u64, g_max: u64, out: *mut *mut CwTable) -> CwStatus {
    guard(|| {
        let g = &borrow(g, "group")?.0;
        let t = CharacterTable::with_seed(g, k_max, g_max, DEFAULT_SEED)?;
        write_out(out, Box::into_raw(Box::new(CwTable(t))), "out")
    })
}

/// # Safety
/// `t` must be null or a handle from `cw_table_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cw_table_free(t: *mut CwTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of irreducible characters, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cw_table_len(t: *const CwTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Working prime of the table, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cw_table_prime(t: *const CwTable) -> u64 {
    t.as_ref().map_or(0, |t| t.0.prime().p())
}

/// Degrees of the irreducible characters in table order.
///
/// # Safety
/// `t` must be a live table handle, `out` must hold `cap` values and
/// `needed` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cw_table_degrees(
    t: *const CwTable,
    out: *mut u64,
    cap: usize,
    needed: *mut usize,
) -> CwStatus {
    guard(|| {
        let t = &borrow(t, "table")?.0;
        write_slice(&t.degrees(), out, cap, needed)
    })
}

/// Character values of irreducible `rho` as residues mod the working prime,
/// one per conjugacy class.
///
/// # Safety
/// As for `cw_table_degrees`.
#[no_mangle]
pub unsafe extern "C" fn cw_table_character(
    t: *const CwTable,
    rho: usize,
    out: *mut u64,
    cap: usize,
    needed: *mut usize,
) -> CwStatus {
    guard(|| {
        let t = &borrow(t, "table")?.0;
        let chi = t.character(rho)?;
        write_slice(chi.values(), out, cap, needed)
    })
}

/// Multiplicities of every irreducible character in `H^0(omega^k)` for the
/// curve encoded by `vector_json`.
///
/// # Safety
/// `t` must be a live table handle, `vector_json` NUL-terminated, `out`
/// must hold `cap` values and `needed` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cw_multiplicities(
    t: *const CwTable,
    vector_json: *const c_char,
    k: u64,
    out: *mut u64,
    cap: usize,
    needed: *mut usize,
) -> CwStatus {
    guard(|| {
        let t = &borrow(t, "table")?.0;
        let v = HurwitzVector::from_json(string(vector_json, "vector_json")?)?;
        let mv = cw_character(&v, t, k)?;
        write_slice(&mv.mults, out, cap, needed)
    })
}

fn params(m: u64, n: u64, r: u64) -> Result<MetacyclicParams, GroupError> {
    MetacyclicParams::new(m, n, r)
}

/// Order of the Schur multiplier of `<x, y | x^m = y^n = 1, y x y^-1 = x^r>`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_schur_multiplier_order(m: u64, n: u64, r: u64, out: *mut u64) -> CwStatus {
    guard(|| {
        let d = schur_multiplier_order(params(m, n, r)?)?.d;
        write_out(out, d, "out")
    })
}

/// Lower bound on components of the regular-representation locus in genus
/// `genus` for a nonabelian split metacyclic group.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cw_rr_component_lower_bound(m: u64, n: u64, r: u64, genus: u64, out: *mut u64) -> CwStatus {
    guard(|| {
        let d = rr_component_lower_bound(params(m, n, r)?, genus)?;
        write_out(out, d, "out")
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
