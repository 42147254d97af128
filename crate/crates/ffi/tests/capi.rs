use std::ffi::{c_char, c_int, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rb_shuffle_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(rb_last_error()) }.to_str().unwrap().to_string()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    rb_string_free(p);
    s
}

struct Session(*mut RbSession);

impl Session {
    fn new(handle: &str, lambda: &str) -> Self {
        let mut s = ptr::null_mut();
        let rc = unsafe { rb_session_new(c(handle).as_ptr(), ptr::null(), c(lambda).as_ptr(), &mut s) };
        assert_eq!(rc, RB_OK, "{}", last_error());
        Session(s)
    }

    fn eval(&self, src: &str) -> Result<*mut RbElement, c_int> {
        let mut e = ptr::null_mut();
        match unsafe { rb_eval(self.0, c(src).as_ptr(), &mut e) } {
            RB_OK => Ok(e),
            rc => Err(rc),
        }
    }
}

impl Drop for Session {
    fn drop(&mut self) {
        unsafe { rb_session_free(self.0) }
    }
}

unsafe fn show(e: *const RbElement) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(rb_element_to_string(e, &mut out), RB_OK);
    take(out)
}

#[test]
fn eval_and_arithmetic() {
    let s = Session::new("sha(poly(x,y))", "1");
    unsafe {
        let a = s.eval("x # 1").unwrap();
        let b = s.eval("y # 1 # 1").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(rb_element_mul(a, b, &mut p), RB_OK);
        assert_eq!(show(p), "3*(x*y # 1 # 1 # 1) + 2*(x*y # 1 # 1)");
        let mut sum = ptr::null_mut();
        assert_eq!(rb_element_add(a, a, &mut sum), RB_OK);
        assert_eq!(show(sum), "2*(x # 1)");

        let same = s.eval("(x # 1)*(y # 1 # 1)").unwrap();
        let mut eq = -1;
        assert_eq!(rb_element_equal(p, same, &mut eq), RB_OK);
        assert_eq!(eq, 1);
        assert_eq!(rb_element_equal(a, b, &mut eq), RB_OK);
        assert_eq!(eq, 0);

        let mut json = ptr::null_mut();
        assert_eq!(rb_element_to_json(a, &mut json), RB_OK);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert!(v.is_object() || v.is_array());

        for e in [a, b, p, sum, same] {
            rb_element_free(e);
        }
    }
}

#[test]
fn error_codes() {
    let s = Session::new("hur(poly(x),3)", "0");
    assert_eq!(s.eval("x +").unwrap_err(), RB_PARSE_ERROR);
    assert!(last_error().contains("1:4"), "{}", last_error());
    assert_eq!(s.eval("x").unwrap_err(), RB_TYPE_ERROR);
    assert_eq!(s.eval("[1; x]").map(|e| unsafe { rb_element_free(e) }), Ok(()));
    assert_eq!(last_error(), "");

    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(rb_eval(ptr::null(), c("1").as_ptr(), &mut out), RB_NULL_POINTER);
        assert_eq!(rb_eval(s.0, ptr::null(), &mut out), RB_NULL_POINTER);
        assert_eq!(rb_eval(s.0, c("1").as_ptr(), ptr::null_mut()), RB_NULL_POINTER);
        let bad = [0xffu8, 0];
        assert_eq!(rb_eval(s.0, bad.as_ptr().cast(), &mut out), RB_INVALID_UTF8);

        let mut sess = ptr::null_mut();
        assert_eq!(
            rb_session_new(c("poly(x").as_ptr(), ptr::null(), ptr::null(), &mut sess),
            RB_PARSE_ERROR
        );
        assert_eq!(
            rb_session_new(c("poly(x)").as_ptr(), c("r").as_ptr(), ptr::null(), &mut sess),
            RB_PARSE_ERROR
        );
        assert!(sess.is_null());
    }
}

#[test]
fn mixing_sessions_is_a_type_error() {
    let s1 = Session::new("poly(x)", "0");
    let s2 = Session::new("poly(x,y)", "0");
    unsafe {
        let a = s1.eval("x").unwrap();
        let b = s2.eval("x").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(rb_element_add(a, b, &mut out), RB_TYPE_ERROR);
        assert!(out.is_null());
        let mut eq = -1;
        assert_eq!(rb_element_equal(a, b, &mut eq), RB_OK);
        assert_eq!(eq, 0);
        rb_element_free(a);
        rb_element_free(b);
    }
}

#[test]
fn law_checks() {
    let s = Session::new("poly(x)", "0");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(rb_check(s.0, c("rb_identity").as_ptr(), 7, 20, &mut out), RB_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["reports"][0]["law"], "rb_identity");
        assert_eq!(v["reports"][0]["seed"], 7);

        let mut out2 = ptr::null_mut();
        assert_eq!(rb_check(s.0, c("nosuch").as_ptr(), 7, 1, &mut out2), RB_UNKNOWN_SUITE);
        assert!(out2.is_null());
        assert!(last_error().contains("nosuch"));

        let mut all = ptr::null_mut();
        assert_eq!(rb_check(s.0, ptr::null(), 1, 1, &mut all), RB_OK);
        let v: serde_json::Value = serde_json::from_str(&take(all)).unwrap();
        assert!(v["reports"].as_array().unwrap().len() >= 17);
    }
}

#[test]
fn frees_accept_null() {
    unsafe {
        rb_session_free(ptr::null_mut());
        rb_element_free(ptr::null_mut());
        rb_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_and_links() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include/rb_shuffle.h");
    assert!(header.exists(), "header not generated");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "rb_session_new",
        "rb_session_free",
        "rb_eval",
        "rb_element_add",
        "rb_element_mul",
        "rb_element_equal",
        "rb_element_to_string",
        "rb_element_to_json",
        "rb_element_free",
        "rb_check",
        "rb_last_error",
        "rb_string_free",
    ] {
        assert!(text.contains(&format!("{f}(")), "{f} missing from header");
    }

    // the test binary lives in <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    let staticlib = lib_dir.join("librb_shuffle_ffi.a");
    assert!(staticlib.exists(), "{} missing", staticlib.display());
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bin = out_dir.join("rb_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(root.join("include"))
        .arg(root.join("tests/c/smoke.c"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "3*(x*y # 1 # 1 # 1) + 2*(x*y # 1 # 1)");
    assert!(lines[1].starts_with("1:4:"), "{}", lines[1]);
}
