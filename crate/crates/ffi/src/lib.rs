//! C ABI over the hopf-galois library.
//!
//! Systems are opaque handles created from a built-in id or a JSON document and released
//! with `hg_system_free`. Commands write a JSON report into a string that the caller
//! releases with `hg_string_free`. Every function returns a status code; the message of
//! the last failure on the calling thread is available from `hg_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopf_galois::cli::battery;
use hopf_galois::crossed::CrossedSystem;
use hopf_galois::exactlin::Field;
use hopf_galois::examples::{builtin, Builtin};
use hopf_galois::galois::{analyze_galois, forward_certificate, verify_yd_equivalence};
use hopf_galois::io::{export_builtin, to_json, Loaded, Target};
use hopf_galois::ydcat::{BraidingMode, Category};
use hopf_galois::{Error, ErrorClass};
use serde_json::json;

/// Success; for commands, every requested check passed or a verdict was computed.
pub const HG_OK: i32 = 0;
/// A requested verification failed.
pub const HG_VERIFICATION_FAILED: i32 = 1;
/// Malformed input, unknown id, or unusable parameters.
pub const HG_INPUT_ERROR: i32 = 2;
/// A linear-algebra precondition failed during a computation.
pub const HG_MATH_ERROR: i32 = 3;
/// A required pointer argument was null.
pub const HG_NULL_POINTER: i32 = -1;
/// The library panicked; this is a bug.
pub const HG_INTERNAL_ERROR: i32 = -2;

/// Braiding selector: the Yetter-Drinfeld braiding.
pub const HG_BRAIDING_YD: i32 = 0;
/// Braiding selector: the plain flip on the same objects.
pub const HG_BRAIDING_SWAP: i32 = 1;

/// A loaded system together with its category.
pub struct HgSystem {
    cat: Category,
    target: Target,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Verification => HG_VERIFICATION_FAILED,
        ErrorClass::Input => HG_INPUT_ERROR,
        ErrorClass::Math => HG_MATH_ERROR,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<i32, Failure>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is null"));
            HG_NULL_POINTER
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal error".into());
            HG_INTERNAL_ERROR
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure::Lib(Error::Parse {
            location: what.into(),
            message: "not valid UTF-8".into(),
        })
    })
}

fn mode_of(braiding: i32) -> Result<BraidingMode, Failure> {
    match braiding {
        HG_BRAIDING_YD => Ok(BraidingMode::YetterDrinfeld),
        HG_BRAIDING_SWAP => Ok(BraidingMode::Swap),
        other => Err(Failure::Lib(Error::Parse {
            location: "braiding".into(),
            message: format!("unknown braiding selector {other}"),
        })),
    }
}

unsafe fn write_string(out: *mut *mut c_char, text: String) {
    *out = CString::new(text).expect("json has no nul").into_raw();
}

unsafe fn write_system(out: *mut *mut HgSystem, sys: HgSystem) {
    *out = Box::into_raw(Box::new(sys));
}

/// Creates a system from a built-in id such as `adjoint-smash:h4`.
///
/// `field` is `rational` or `fp:<prime>`.
///
/// # Safety
/// `id` and `field` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_system_from_builtin(
    id: *const c_char,
    field: *const c_char,
    braiding: i32,
    out: *mut *mut HgSystem,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let id = read_str(id, "id")?;
        let field: Field = read_str(field, "field")?.parse()?;
        let b = builtin(id, field, mode_of(braiding)?)?;
        let sys = match b {
            Builtin::Hopf { cat, h } => HgSystem {
                cat,
                target: Target::Hopf(h),
            },
            Builtin::Crossed { cat, sys } => HgSystem {
                cat,
                target: Target::Crossed(sys),
            },
            Builtin::Comodule { cat, a } => HgSystem {
                cat,
                target: Target::ComoduleAlgebra(a),
            },
        };
        write_system(out, sys);
        Ok(HG_OK)
    })
}

/// Creates a system from a structure-constant document. A null `name` selects the
/// unique crossed or comodule-algebra system of the document.
///
/// # Safety
/// `json` must be a nul-terminated string, `name` null or nul-terminated, and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_system_from_json(
    json: *const c_char,
    name: *const c_char,
    braiding: i32,
    out: *mut *mut HgSystem,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let text = read_str(json, "json")?;
        let loaded = Loaded::from_json(text, mode_of(braiding)?)?;
        let name = if name.is_null() {
            loaded.default_system()?
        } else {
            read_str(name, "name")?.to_string()
        };
        let target = loaded.target(&name)?;
        write_system(
            out,
            HgSystem {
                cat: loaded.cat,
                target,
            },
        );
        Ok(HG_OK)
    })
}

/// Releases a system. Null is ignored.
///
/// # Safety
/// `sys` must come from one of the constructors and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_system_free(sys: *mut HgSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

unsafe fn system<'a>(sys: *const HgSystem, out: *mut *mut c_char) -> Result<&'a HgSystem, Failure> {
    if sys.is_null() {
        return Err(Failure::Null("system"));
    }
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = ptr::null_mut();
    Ok(&*sys)
}

fn crossed(s: &HgSystem) -> Result<&CrossedSystem, Failure> {
    match &s.target {
        Target::Crossed(sys) => Ok(sys),
        t => Err(Failure::Lib(Error::Parse {
            location: "system".into(),
            message: format!("expected a crossed system, found {}", t.kind()),
        })),
    }
}

/// Runs the axiom battery for the system's kind and writes the report.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_check(sys: *const HgSystem, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let s = system(sys, out)?;
        let report = battery(&s.cat, &s.target)?;
        let passed = report.passed();
        let value = json!({ "kind": s.target.kind(), "passed": passed, "report": report });
        write_string(out, value.to_string());
        Ok(if passed {
            HG_OK
        } else {
            HG_VERIFICATION_FAILED
        })
    })
}

/// Decides the Galois property. For crossed systems the full certificate is verified;
/// a comodule algebra that is not Galois still returns `HG_OK` with `"galois": false`.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_galois(sys: *const HgSystem, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let s = system(sys, out)?;
        let (code, value) = match &s.target {
            Target::Crossed(c) => {
                let cert = forward_certificate(&s.cat, c)?;
                let passed = cert.report.passed();
                let value = json!({
                    "galois": true,
                    "dim_a": cert.a.dim(),
                    "dim_b": cert.p.cols(),
                    "dim_tensor_over_b": cert.q.rows(),
                    "passed": passed,
                    "report": cert.report,
                });
                (
                    if passed {
                        HG_OK
                    } else {
                        HG_VERIFICATION_FAILED
                    },
                    value,
                )
            }
            Target::ComoduleAlgebra(a) => {
                let g = analyze_galois(&s.cat, a)?;
                (
                    HG_OK,
                    serde_json::to_value(g.summary()).expect("summary serializes"),
                )
            }
            t => {
                return Err(Failure::Lib(Error::Parse {
                    location: "system".into(),
                    message: format!(
                        "expected a crossed system or comodule algebra, found {}",
                        t.kind()
                    ),
                }))
            }
        };
        write_string(out, value.to_string());
        Ok(code)
    })
}

/// Builds the Galois data of a crossed system, extracts the action and cocycle back with
/// the identity normal basis, and compares them with the originals.
///
/// # Safety
/// `sys` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_roundtrip(sys: *const HgSystem, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let s = system(sys, out)?;
        let outcome = verify_yd_equivalence(&s.cat, crossed(s)?)?;
        let passed = outcome.report.passed();
        write_string(
            out,
            json!({ "passed": passed, "report": outcome.report }).to_string(),
        );
        Ok(if passed {
            HG_OK
        } else {
            HG_VERIFICATION_FAILED
        })
    })
}

/// Writes a built-in as a structure-constant document.
///
/// # Safety
/// `id` and `field` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_export_builtin(
    id: *const c_char,
    field: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = ptr::null_mut();
        let id = read_str(id, "id")?;
        let field: Field = read_str(field, "field")?.parse()?;
        let b = builtin(id, field, BraidingMode::YetterDrinfeld)?;
        write_string(out, to_json(&export_builtin(&b)));
        Ok(HG_OK)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failure on this thread, or null. Valid until the next call
/// into the library on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// The library version as a static string.
#[no_mangle]
pub extern "C" fn hg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
