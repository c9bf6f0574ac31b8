//! C ABI over the nilcomplex library.
//!
//! Structures are opaque `NcStructure` handles. Every call returns an
//! `NcStatus`; on failure `nc_last_error` describes the cause for the calling
//! thread. Strings handed out by the library are freed with `nc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use nilcomplex::classify::{
    classify_checked, identify, Family, NonNilpotentParams, ThreeStepTriple, TwoStepTriple,
};
use nilcomplex::cli::{full_report, parse_complex, parse_metric, Input};
use nilcomplex::cohomology::hodge_table;
use nilcomplex::exterior::{parse_rational, Rational, Scalar};
use nilcomplex::hermitian::{metric_flags, sg_exists};
use nilcomplex::liealg::StructureEquations;
use nilcomplex::spectral::FrolicherSequence;
use nilcomplex::error::{Error, ErrorKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Alarm = 5,
    /// The answer is not known for this structure.
    Unsupported = 6,
    Panic = 7,
}

/// Flags of one Hermitian metric.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct NcMetricFlags {
    pub balanced: bool,
    pub gauduchon: bool,
    pub strongly_gauduchon: bool,
}

/// Opaque handle to a complex structure.
pub struct NcStructure {
    input: Input,
    eqs: StructureEquations,
    sequence: OnceLock<Result<FrolicherSequence, Error>>,
}

impl NcStructure {
    fn new(input: Input) -> Result<Self, Error> {
        let eqs = input.equations()?;
        Ok(NcStructure { input, eqs, sequence: OnceLock::new() })
    }

    fn sequence(&self) -> Result<&FrolicherSequence, Error> {
        self.sequence
            .get_or_init(|| {
                let s = FrolicherSequence::new(&self.eqs)?;
                s.verify()?;
                Ok(s)
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Failure {
    Null,
    Utf8,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn status_of(f: &Failure) -> NcStatus {
    match f {
        Failure::Null => NcStatus::NullPointer,
        Failure::Utf8 => NcStatus::InvalidUtf8,
        Failure::Lib(Error::Unsupported(_)) => NcStatus::Unsupported,
        Failure::Lib(e) => match e.kind() {
            ErrorKind::Parse => NcStatus::Parse,
            ErrorKind::Domain => NcStatus::Domain,
            ErrorKind::Alarm => NcStatus::Alarm,
        },
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            NcStatus::Ok
        }
        Ok(Err(f)) => {
            let msg = match &f {
                Failure::Null => "null pointer argument".to_string(),
                Failure::Utf8 => "string argument is not valid UTF-8".to_string(),
                Failure::Lib(e) => e.to_string(),
            };
            set_error(&msg);
            status_of(&f)
        }
        Err(_) => {
            set_error("internal panic");
            NcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn handle<'a>(s: *const NcStructure) -> Result<&'a NcStructure, Failure> {
    s.as_ref().ok_or(Failure::Null)
}

fn rational(s: &str) -> Result<Rational, Error> {
    parse_rational(s).ok_or_else(|| Error::Parse { pos: 0, msg: format!("'{s}' is not a rational number") })
}

unsafe fn emit(out: *mut *mut NcStructure, input: Input) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = Box::into_raw(Box::new(NcStructure::new(input)?));
    Ok(())
}

unsafe fn write_table(out: *mut u32, rows: &[Vec<usize>]) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    for (p, row) in rows.iter().enumerate() {
        for (q, v) in row.iter().enumerate() {
            *out.add(p * row.len() + q) = *v as u32;
        }
    }
    Ok(())
}

/// Parses complex structure equations such as `dw1=0; dw2=0; dw3=w1^w2`.
///
/// # Safety
/// `equations` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_structure_from_equations(equations: *const c_char, out: *mut *mut NcStructure) -> NcStatus {
    guard(|| emit(out, Input::Complex(parse_complex(text(equations)?)?)))
}

/// Two-step family with rational `lambda` and Gaussian-rational `d`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_structure_two_step(
    rho: u8,
    lambda: *const c_char,
    d: *const c_char,
    out: *mut *mut NcStructure,
) -> NcStatus {
    guard(|| {
        let t = TwoStepTriple::new(rho, rational(text(lambda)?)?, text(d)?.parse::<Scalar>()?)?;
        emit(out, Input::Family(Family::TwoStep(t)))
    })
}

/// Three-step family with Gaussian-rational `b` and rational `c`.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_structure_three_step(
    rho: u8,
    b: *const c_char,
    c: *const c_char,
    out: *mut *mut NcStructure,
) -> NcStatus {
    guard(|| {
        let t = ThreeStepTriple::new(rho, text(b)?.parse::<Scalar>()?, rational(text(c)?)?)?;
        emit(out, Input::Family(Family::ThreeStep(t)))
    })
}

/// Non-nilpotent family; `positive` selects the sign.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_structure_non_nilpotent(eps: u8, positive: bool, out: *mut *mut NcStructure) -> NcStatus {
    guard(|| {
        let f = Family::NonNilpotent(NonNilpotentParams { eps, positive });
        f.validate()?;
        emit(out, Input::Family(f))
    })
}

/// # Safety
/// `s` must come from a constructor above and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nc_structure_free(s: *mut NcStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Name of the underlying Lie algebra, e.g. "h12". Free with `nc_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_classify(s: *const NcStructure, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let s = handle(s)?;
        let class = match &s.input {
            Input::Family(f) => classify_checked(f)?,
            _ => identify(&s.eqs)?,
        };
        write_string(out, class.name())
    })
}

/// Dolbeault numbers h^{p,q} into `out[4*p + q]` (16 entries).
///
/// # Safety
/// `s` must be a live handle; `out` must hold 16 values.
#[no_mangle]
pub unsafe extern "C" fn nc_hodge(s: *const NcStructure, out: *mut u32) -> NcStatus {
    guard(|| write_table(out, &hodge_table(&handle(s)?.eqs)?.hodge))
}

/// Betti numbers b_0..b_6 (7 entries).
///
/// # Safety
/// `s` must be a live handle; `out` must hold 7 values.
#[no_mangle]
pub unsafe extern "C" fn nc_betti(s: *const NcStructure, out: *mut u32) -> NcStatus {
    guard(|| write_table(out, &[hodge_table(&handle(s)?.eqs)?.betti]))
}

/// dim E_r^{p,q} into `out[4*p + q]` for 1 ≤ r ≤ 4.
///
/// # Safety
/// `s` must be a live handle; `out` must hold 16 values.
#[no_mangle]
pub unsafe extern "C" fn nc_frolicher_dims(s: *const NcStructure, r: u32, out: *mut u32) -> NcStatus {
    guard(|| {
        if r == 0 {
            return Err(Error::Domain("page index starts at 1".into()).into());
        }
        write_table(out, &handle(s)?.sequence()?.dims(r as usize)?)
    })
}

/// Least r with E_r = E_∞.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_degeneration_step(s: *const NcStructure, out: *mut u32) -> NcStatus {
    guard(|| {
        let step = handle(s)?.sequence()?.degeneration_step();
        out.as_mut().map(|o| *o = step as u32).ok_or(Failure::Null)
    })
}

/// Behaviour signature such as "E1≅E2≇E3≅E∞". Free with `nc_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_behaviour(s: *const NcStructure, out: *mut *mut c_char) -> NcStatus {
    guard(|| write_string(out, &handle(s)?.sequence()?.behaviour().to_string()))
}

/// Flags of the metric `r2,s2,t2,u,v,z`.
///
/// # Safety
/// `s` must be a live handle, `metric` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nc_metric_flags(s: *const NcStructure, metric: *const c_char, out: *mut NcMetricFlags) -> NcStatus {
    guard(|| {
        let f = metric_flags(&handle(s)?.eqs, &parse_metric(text(metric)?)?)?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        *out = NcMetricFlags { balanced: f.balanced, gauduchon: f.gauduchon, strongly_gauduchon: f.strongly_gauduchon };
        Ok(())
    })
}

/// Whether the structure admits a strongly Gauduchon metric. Only structures
/// built from a family are supported.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_sg_exists(s: *const NcStructure, out: *mut bool) -> NcStatus {
    guard(|| {
        let Input::Family(f) = &handle(s)?.input else {
            return Err(Error::Unsupported("sG existence needs a family structure".into()).into());
        };
        let e = sg_exists(f)?;
        out.as_mut().map(|o| *o = e.exists).ok_or(Failure::Null)
    })
}

/// Full JSON report, in the CLI schema. Free with `nc_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_report_json(s: *const NcStructure, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let report = full_report(&handle(s)?.input, None)?;
        let json = serde_json::to_string(&report).map_err(|e| Error::Alarm(e.to_string()))?;
        write_string(out, &json)
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = CString::new(s).map_err(|_| Error::Alarm("string contains nul".into()))?.into_raw();
    Ok(())
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn nc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
