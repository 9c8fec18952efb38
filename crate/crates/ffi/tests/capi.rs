use std::ffi::{CStr, CString};
use std::ptr;

use polytope_algebra_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { pa_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pa_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn arrangement_counts_and_eta() {
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { pa_arrangement_new(c("A").as_ptr(), 3, &mut a) },
        PaStatus::Ok
    );
    let (mut faces, mut flats, mut chambers) = (0, 0, 0);
    assert_eq!(
        unsafe { pa_arrangement_counts(a, &mut faces, &mut flats, &mut chambers) },
        PaStatus::Ok
    );
    assert_eq!((faces, flats, chambers), (13, 5, 6));
    // Braid η counts permutations with the given cycle partition by excedances.
    let mut v = 0u64;
    for (flat, r, want) in [
        ("{1,2,3}", 0, 1),
        ("{1,2,3}", 1, 0),
        ("{12,3}", 1, 1),
        ("{123}", 1, 1),
        ("{123}", 2, 1),
    ] {
        assert_eq!(
            unsafe { pa_arrangement_eta(a, c(flat).as_ptr(), r, &mut v) },
            PaStatus::Ok
        );
        assert_eq!(v, want, "{flat} r = {r}");
    }
    assert_eq!(
        unsafe { pa_arrangement_eta(a, c("{12,4}").as_ptr(), 1, &mut v) },
        PaStatus::InvalidInput
    );
    assert!(!last_error().is_empty());
    unsafe { pa_arrangement_free(a) };
}

#[test]
fn cube_eta_is_an_indicator() {
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { pa_arrangement_new(c("cube").as_ptr(), 3, &mut a) },
        PaStatus::Ok
    );
    let mut v = 9u64;
    for (r, want) in [(0, 0), (1, 0), (2, 1), (3, 0)] {
        assert_eq!(
            unsafe { pa_arrangement_eta(a, c("X_{1,3}").as_ptr(), r, &mut v) },
            PaStatus::Ok
        );
        assert_eq!(v, want, "r = {r}");
    }
    unsafe { pa_arrangement_free(a) };
}

#[test]
fn errors_and_null_pointers() {
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { pa_arrangement_new(c("Q").as_ptr(), 3, &mut a) },
        PaStatus::InvalidInput
    );
    assert!(a.is_null());
    assert_eq!(
        unsafe { pa_arrangement_new(ptr::null(), 3, &mut a) },
        PaStatus::NullPointer
    );
    assert_eq!(
        unsafe { pa_arrangement_new(c("A").as_ptr(), 3, ptr::null_mut()) },
        PaStatus::NullPointer
    );
    assert_eq!(
        unsafe {
            pa_arrangement_counts(
                ptr::null(),
                ptr::null_mut(),
                ptr::null_mut(),
                ptr::null_mut(),
            )
        },
        PaStatus::NullPointer
    );
    unsafe {
        pa_arrangement_free(ptr::null_mut());
        pa_polytope_free(ptr::null_mut());
        pa_string_free(ptr::null_mut());
    }
}

const HEXAGON: &str = r#"{"arrangement":"A","d":3,"points":[["1","2","3"],["1","3","2"],["2","1","3"],["2","3","1"],["3","1","2"],["3","2","1"]]}"#;

#[test]
fn polytope_volume_h_vector_and_decomposition() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { pa_polytope_from_json(c(HEXAGON).as_ptr(), &mut p) },
        PaStatus::Ok
    );
    let (mut nv, mut dim) = (0, 0);
    assert_eq!(
        unsafe { pa_polytope_shape(p, &mut nv, &mut dim) },
        PaStatus::Ok
    );
    assert_eq!((nv, dim), (6, 2));
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pa_polytope_volume(p, &mut s) }, PaStatus::Ok);
    assert_eq!(take_string(s), "3");
    let mut len = 0;
    assert_eq!(
        unsafe { pa_polytope_h_vector(p, ptr::null_mut(), 0, &mut len) },
        PaStatus::Ok
    );
    let mut buf = vec![0i64; len];
    assert_eq!(
        unsafe { pa_polytope_h_vector(p, buf.as_mut_ptr(), len, &mut len) },
        PaStatus::Ok
    );
    assert_eq!(buf, vec![1, 4, 1]);
    assert_eq!(
        unsafe { pa_polytope_decompose_json(p, &mut s) },
        PaStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"D[1,2]": "1", "D[1,3]": "1", "D[2,3]": "1"})
    );
    unsafe { pa_polytope_free(p) };
}

#[test]
fn non_deformation_is_rejected() {
    let bad = r#"{"arrangement":"A","d":3,"points":[["0","0","0"],["2","1","0"]]}"#;
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { pa_polytope_from_json(c(bad).as_ptr(), &mut p) },
        PaStatus::NotDeformation
    );
    assert!(p.is_null());
    assert_eq!(
        unsafe { pa_polytope_from_json(c("{").as_ptr(), &mut p) },
        PaStatus::InvalidInput
    );
}

#[test]
fn verify_through_the_c_abi() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { pa_verify_json(c("thm-b").as_ptr(), 2, 0, &mut s) },
        PaStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(
        unsafe { pa_verify_json(c("nonsense").as_ptr(), 0, 0, &mut s) },
        PaStatus::InvalidInput
    );
    assert!(s.is_null());
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = std::env::temp_dir().join("polytope_algebra_header_check.c");
    std::fs::write(
        &src,
        "#include \"polytope_algebra.h\"\nint main(void) { PaArrangement *a = 0; \
         return pa_arrangement_new(\"A\", 3, &a) == PA_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let out = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .output()
        .expect("a C compiler is on PATH");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
