//! C ABI over `polytope_algebra`.
//!
//! Every function returns a [`PaStatus`]. On failure the message is available
//! from [`pa_last_error_message`] on the same thread. Handles are opaque and
//! must be released with their `_free` function. Strings returned through
//! `out` parameters are owned by the caller and released with
//! [`pa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polytope_algebra::polyclass::{lattice_volume, parse_polytope_json, FaceLattice, VPolytope};
use polytope_algebra::rational::{fmt_q, to_i64};
use polytope_algebra::spectra::{
    a_decompose, b_decompose, b_generators, eta_mobius_table, EtaTable,
};
use polytope_algebra::{Arrangement, ArrangementKind, Error};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaStatus {
    Ok = 0,
    /// Malformed argument: bad flat string, bad JSON, unknown arrangement.
    InvalidInput = 1,
    /// Operation does not apply to this arrangement or object.
    Precondition = 2,
    ArrangementMismatch = 3,
    NotDeformation = 4,
    /// Requested size is beyond the enumeration bounds.
    ResourceLimit = 5,
    Internal = 6,
    NullPointer = 7,
    /// A verification ran and at least one check failed.
    VerificationFailed = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: Error) -> PaStatus {
    set_error(&e.to_string());
    match e {
        Error::Input(_) => PaStatus::InvalidInput,
        Error::Precondition(_) => PaStatus::Precondition,
        Error::ArrangementMismatch(..) => PaStatus::ArrangementMismatch,
        Error::NotDeformation(_) => PaStatus::NotDeformation,
        Error::Resource(_) => PaStatus::ResourceLimit,
        Error::Internal(_) => PaStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), PaStatus>) -> PaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PaStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside polytope_algebra");
            PaStatus::Panic
        }
    }
}

fn null() -> PaStatus {
    set_error("null pointer argument");
    PaStatus::NullPointer
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, PaStatus> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        PaStatus::InvalidInput
    })
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), PaStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// An enumerated arrangement with a lazily computed η table.
pub struct PaArrangement {
    arr: Arrangement,
    eta: Option<EtaTable>,
}

/// A deformation of a Coxeter zonotope together with its arrangement.
pub struct PaPolytope {
    arr: Arrangement,
    p: VPolytope,
}

/// Message of the last failure on this thread. Valid until the next call
/// into this library from the same thread. Never null.
#[no_mangle]
pub extern "C" fn pa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is accepted.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds arrangement `kind` ("A", "B" or "C") of rank `d`.
///
/// # Safety
/// `kind` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_arrangement_new(
    kind: *const c_char,
    d: usize,
    out: *mut *mut PaArrangement,
) -> PaStatus {
    guard(|| {
        let k = ArrangementKind::from_letter(str_arg(kind)?, d).map_err(fail)?;
        let arr = Arrangement::new(k).map_err(fail)?;
        write_out(
            out,
            Box::into_raw(Box::new(PaArrangement { arr, eta: None })),
        )
    })
}

/// Releases an arrangement handle. Null is accepted.
///
/// # Safety
/// `a` must come from [`pa_arrangement_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pa_arrangement_free(a: *mut PaArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of faces, flats and chambers; any `out` may be null.
///
/// # Safety
/// `a` must be a live handle; non-null outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pa_arrangement_counts(
    a: *const PaArrangement,
    faces: *mut usize,
    flats: *mut usize,
    chambers: *mut usize,
) -> PaStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(null)?;
        for (out, v) in [
            (faces, a.arr.num_faces()),
            (flats, a.arr.num_flats()),
            (chambers, a.arr.num_chambers()),
        ] {
            if !out.is_null() {
                out.write(v);
            }
        }
        Ok(())
    })
}

/// `η_X(Ξ_r)` for the flat written as `flat` (e.g. "{12,3}" or "X_{1,3}").
///
/// # Safety
/// `a` must be a live handle, `flat` a nul-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pa_arrangement_eta(
    a: *mut PaArrangement,
    flat: *const c_char,
    r: usize,
    out: *mut u64,
) -> PaStatus {
    guard(|| {
        let a = a.as_mut().ok_or_else(null)?;
        let x = a.arr.parse_flat_index(str_arg(flat)?).map_err(fail)?;
        if a.eta.is_none() {
            a.eta = Some(eta_mobius_table(&a.arr).map_err(fail)?);
        }
        let v = if r <= a.arr.d() {
            a.eta.as_ref().expect("filled above").get(x, r)
        } else {
            0
        };
        write_out(out, v)
    })
}

/// Parses `{"arrangement": "A", "d": 3, "points": [["1/2", ...], ...]}` and
/// checks that the points span a deformation.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_from_json(
    json: *const c_char,
    out: *mut *mut PaPolytope,
) -> PaStatus {
    guard(|| {
        let (kind, points) = parse_polytope_json(str_arg(json)?).map_err(fail)?;
        let arr = Arrangement::new(kind).map_err(fail)?;
        let p = VPolytope::from_points(&arr, &points).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(PaPolytope { arr, p })))
    })
}

/// Releases a polytope handle. Null is accepted.
///
/// # Safety
/// `p` must come from [`pa_polytope_from_json`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_free(p: *mut PaPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of distinct vertices and affine dimension.
///
/// # Safety
/// `p` must be a live handle; non-null outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_shape(
    p: *const PaPolytope,
    vertices: *mut usize,
    dim: *mut usize,
) -> PaStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        if !vertices.is_null() {
            vertices.write(p.p.num_vertices());
        }
        if !dim.is_null() {
            dim.write(p.p.dim());
        }
        Ok(())
    })
}

/// Lattice volume as an exact rational string such as "27/48".
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_volume(
    p: *const PaPolytope,
    out: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        write_out(out, to_c_string(fmt_q(&lattice_volume(&p.arr, &p.p))))
    })
}

/// Coefficients of the h-polynomial, lowest degree first. Writes at most
/// `cap` values to `buf` and the full length to `len`. A null `buf` with
/// `cap == 0` queries the length.
///
/// # Safety
/// `p` must be a live handle, `buf` valid for `cap` writes, `len` valid.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_h_vector(
    p: *const PaPolytope,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> PaStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let h = FaceLattice::new(&p.arr, &p.p).h_polynomial();
        let coeffs: Vec<i64> = h
            .coeffs()
            .iter()
            .map(|c| {
                to_i64(c)
                    .ok_or_else(|| fail(Error::Internal("h-vector entry is not an integer".into())))
            })
            .collect::<Result<_, _>>()?;
        if cap > 0 && buf.is_null() {
            return Err(null());
        }
        for (i, c) in coeffs.iter().take(cap).enumerate() {
            buf.add(i).write(*c);
        }
        write_out(len, coeffs.len())
    })
}

/// Signed Minkowski decomposition into simplices as a JSON object
/// `{generator: "coeff"}`. Braid and type B arrangements only.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_polytope_decompose_json(
    p: *const PaPolytope,
    out: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let dec = match p.arr.kind() {
            ArrangementKind::BraidA(_) => a_decompose(&p.arr, &p.p),
            ArrangementKind::TypeB(_) => {
                b_generators(&p.arr).and_then(|fam| b_decompose(&p.arr, &fam, &p.p))
            }
            ArrangementKind::Coordinate(_) => Err(Error::Precondition(
                "decompositions are defined for types A and B".into(),
            )),
        }
        .map_err(fail)?;
        write_out(out, to_c_string(dec.to_json().to_string()))
    })
}

/// Runs `polyalg verify <suite> [--d d] --seed seed` and returns its JSON
/// report. `d == 0` selects the suite default. Returns
/// `PA_STATUS_VERIFICATION_FAILED` when a check fails; the report is still
/// written.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pa_verify_json(
    suite: *const c_char,
    d: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> PaStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let mut argv = vec![
            "polyalg".to_string(),
            "verify".into(),
            str_arg(suite)?.to_string(),
        ];
        if d > 0 {
            argv.extend(["--d".into(), d.to_string()]);
        }
        argv.extend(["--seed".into(), seed.to_string()]);
        let mut buf = Vec::new();
        let code = polytope_algebra::cli::run_with(argv, &mut buf);
        match code {
            0 | 1 => {
                out.write(to_c_string(String::from_utf8_lossy(&buf).into_owned()));
                if code == 0 {
                    Ok(())
                } else {
                    set_error("verification failed");
                    Err(PaStatus::VerificationFailed)
                }
            }
            _ => {
                out.write(ptr::null_mut());
                set_error("invalid verify arguments");
                Err(PaStatus::InvalidInput)
            }
        }
    })
}
