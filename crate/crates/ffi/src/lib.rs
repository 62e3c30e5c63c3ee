//! C ABI over `rectsub`.
//!
//! Every fallible function returns an [`RsStatus`]; on failure a message is
//! available from [`rs_last_error_message`] on the same thread. Strings handed
//! out by the library are NUL-terminated UTF-8 and must be released with
//! [`rs_string_free`]; handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use rectsub::io::{
    format_segments, from_json, parse_formula, parse_segments, render_svg, to_pretty_json, Overlay, ReductionReport,
    SolutionDocument,
};
use rectsub::reductions::{build_reduction, verify_lemma, ReductionOutput};
use rectsub::solvers::{
    exact_mds, exact_mis, exact_stab, greedy_mds, greedy_mis, greedy_stab, local_search_stab, verify_solution,
    FaceFilter, LocalSearchConfig, Problem, SearchBudget, Solution,
};
use rectsub::{SegmentSet, Subdivision};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GeometryError = 4,
    InvalidArgument = 5,
    ReductionError = 6,
    Panic = 7,
}

pub const RS_PROBLEM_STAB: u32 = 0;
pub const RS_PROBLEM_MIS: u32 = 1;
pub const RS_PROBLEM_MDS: u32 = 2;

pub const RS_FACES_ALL: u32 = 0;
pub const RS_FACES_RECT: u32 = 1;

pub const RS_ALGO_GREEDY: u32 = 0;
pub const RS_ALGO_EXACT: u32 = 1;
pub const RS_ALGO_LOCAL: u32 = 2;

/// Opaque subdivision handle.
pub struct RsSubdivision {
    set: SegmentSet,
    sub: Subdivision,
}

/// Opaque handle to a compiled formula.
pub struct RsReduction {
    out: ReductionOutput,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

type Outcome<T> = Result<T, (RsStatus, String)>;

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Outcome<()>) -> RsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RsStatus::Panic
        }
    }
}

fn fail<T>(status: RsStatus, msg: impl ToString) -> Outcome<T> {
    Err((status, msg.to_string()))
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Outcome<&'a str> {
    if s.is_null() {
        return fail(RsStatus::NullPointer, "null string argument");
    }
    CStr::from_ptr(s).to_str().map_err(|e| (RsStatus::InvalidUtf8, e.to_string()))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return fail(RsStatus::NullPointer, "null output pointer");
    }
    let c = CString::new(s).map_err(|e| (RsStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn problem(code: u32) -> Outcome<Problem> {
    match code {
        RS_PROBLEM_STAB => Ok(Problem::Stab),
        RS_PROBLEM_MIS => Ok(Problem::Mis),
        RS_PROBLEM_MDS => Ok(Problem::Mds),
        _ => fail(RsStatus::InvalidArgument, format!("unknown problem code {code}")),
    }
}

fn filter(code: u32) -> Outcome<FaceFilter> {
    match code {
        RS_FACES_ALL => Ok(FaceFilter::All),
        RS_FACES_RECT => Ok(FaceFilter::Rect),
        _ => fail(RsStatus::InvalidArgument, format!("unknown face filter code {code}")),
    }
}

fn budget(node_limit: u64, seconds: f64) -> Outcome<SearchBudget> {
    if node_limit == 0 || !seconds.is_finite() || seconds <= 0.0 {
        return fail(RsStatus::InvalidArgument, "budget limits must be positive");
    }
    Ok(SearchBudget::new(node_limit, Duration::from_secs_f64(seconds)))
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn rs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `.segs` text and builds its subdivision.
///
/// # Safety
/// `segs` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_subdivision_from_segs(segs: *const c_char, out: *mut *mut RsSubdivision) -> RsStatus {
    guard(|| {
        if out.is_null() {
            return fail(RsStatus::NullPointer, "null output pointer");
        }
        let set = parse_segments(read_str(segs)?).map_err(|e| (RsStatus::ParseError, e.to_string()))?;
        let sub = Subdivision::build(&set).map_err(|e| (RsStatus::GeometryError, e.to_string()))?;
        *out = Box::into_raw(Box::new(RsSubdivision { set, sub }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`rs_subdivision_from_segs`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rs_subdivision_free(h: *mut RsSubdivision) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of bounded faces; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_subdivision_face_count(h: *const RsSubdivision) -> usize {
    h.as_ref().map_or(0, |h| h.sub.face_count())
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_subdivision_vertex_count(h: *const RsSubdivision) -> usize {
    h.as_ref().map_or(0, |h| h.sub.vertices().len())
}

/// Solves `problem` with `algo` and writes a solution document (JSON).
/// `k` is the swap size for local search and ignored otherwise.
///
/// # Safety
/// `h` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_solve(
    h: *const RsSubdivision,
    problem_code: u32,
    algo: u32,
    faces: u32,
    k: usize,
    node_limit: u64,
    time_limit_seconds: f64,
    json_out: *mut *mut c_char,
) -> RsStatus {
    guard(|| {
        let h = h.as_ref().ok_or((RsStatus::NullPointer, "null handle".to_string()))?;
        let p = problem(problem_code)?;
        let f = filter(faces)?;
        let b = budget(node_limit, time_limit_seconds)?;
        let doc = match (p, algo) {
            (Problem::Stab, RS_ALGO_GREEDY) => SolutionDocument::from_points(&h.set, f, &greedy_stab(&h.sub, f)),
            (Problem::Stab, RS_ALGO_EXACT) => SolutionDocument::from_points(&h.set, f, &exact_stab(&h.sub, f, &b)),
            (Problem::Stab, RS_ALGO_LOCAL) => {
                let cfg = LocalSearchConfig::new(k, f).map_err(|e| (RsStatus::InvalidArgument, e.to_string()))?;
                SolutionDocument::from_points(&h.set, f, &local_search_stab(&h.sub, &cfg))
            }
            (Problem::Mis, RS_ALGO_GREEDY) => SolutionDocument::from_faces(&h.set, p, f, &greedy_mis(&h.sub, f)),
            (Problem::Mis, RS_ALGO_EXACT) => SolutionDocument::from_faces(&h.set, p, f, &exact_mis(&h.sub, f, &b)),
            (Problem::Mds, RS_ALGO_GREEDY) => SolutionDocument::from_faces(&h.set, p, f, &greedy_mds(&h.sub, f)),
            (Problem::Mds, RS_ALGO_EXACT) => SolutionDocument::from_faces(&h.set, p, f, &exact_mds(&h.sub, f, &b)),
            _ => return fail(RsStatus::InvalidArgument, format!("algorithm {algo} not available for {p}")),
        };
        write_string(json_out, to_pretty_json(&doc))
    })
}

/// Checks a solution document against the subdivision; writes 1 to
/// `feasible_out` when feasible, 0 otherwise.
///
/// # Safety
/// `h` must be a live handle, `solution_json` a NUL-terminated string and
/// `feasible_out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_verify(
    h: *const RsSubdivision,
    problem_code: u32,
    faces: u32,
    solution_json: *const c_char,
    feasible_out: *mut c_int,
) -> RsStatus {
    guard(|| {
        let h = h.as_ref().ok_or((RsStatus::NullPointer, "null handle".to_string()))?;
        if feasible_out.is_null() {
            return fail(RsStatus::NullPointer, "null output pointer");
        }
        let doc: SolutionDocument =
            from_json(read_str(solution_json)?).map_err(|e| (RsStatus::ParseError, e.to_string()))?;
        doc.check_instance(&h.set).map_err(|e| (RsStatus::InvalidArgument, e.to_string()))?;
        let sol = doc.solution().map_err(|e| (RsStatus::ParseError, e.to_string()))?;
        let report = verify_solution(&h.sub, problem(problem_code)?, &sol, filter(faces)?)
            .map_err(|e| (RsStatus::InvalidArgument, e.to_string()))?;
        *feasible_out = c_int::from(report.feasible);
        Ok(())
    })
}

/// Renders the subdivision as SVG, overlaying `solution_json` when non-null.
///
/// # Safety
/// `h` must be a live handle, `solution_json` null or NUL-terminated, and
/// `svg_out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_render_svg(
    h: *const RsSubdivision,
    solution_json: *const c_char,
    svg_out: *mut *mut c_char,
) -> RsStatus {
    guard(|| {
        let h = h.as_ref().ok_or((RsStatus::NullPointer, "null handle".to_string()))?;
        let mut overlay = Overlay::default();
        if !solution_json.is_null() {
            let doc: SolutionDocument =
                from_json(read_str(solution_json)?).map_err(|e| (RsStatus::ParseError, e.to_string()))?;
            match doc.solution().map_err(|e| (RsStatus::ParseError, e.to_string()))? {
                Solution::Points(p) => overlay.points = p,
                Solution::Faces(f) => overlay.faces = f,
            }
        }
        write_string(svg_out, render_svg(&h.sub, &overlay))
    })
}

/// Compiles a formula document into a hardness instance.
///
/// # Safety
/// `formula_json` must be NUL-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_reduce(
    formula_json: *const c_char,
    problem_code: u32,
    variant: u32,
    out: *mut *mut RsReduction,
) -> RsStatus {
    guard(|| {
        if out.is_null() {
            return fail(RsStatus::NullPointer, "null output pointer");
        }
        let inst = parse_formula(read_str(formula_json)?).map_err(|e| (RsStatus::ParseError, e.to_string()))?;
        let red = build_reduction(&inst, problem(problem_code)?, filter(variant)?)
            .map_err(|e| (RsStatus::ReductionError, e.to_string()))?;
        *out = Box::into_raw(Box::new(RsReduction { out: red }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from [`rs_reduce`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rs_reduction_free(h: *mut RsReduction) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Target optimum of the compiled instance; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rs_reduction_target(h: *const RsReduction) -> usize {
    h.as_ref().map_or(0, |h| h.out.target)
}

/// `.segs` text of the compiled instance.
///
/// # Safety
/// `h` must be a live handle; `segs_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_reduction_segments(h: *const RsReduction, segs_out: *mut *mut c_char) -> RsStatus {
    guard(|| {
        let h = h.as_ref().ok_or((RsStatus::NullPointer, "null handle".to_string()))?;
        write_string(segs_out, format_segments(&h.out.segments))
    })
}

/// Manifest, target and canonical solutions as a JSON report.
///
/// # Safety
/// `h` must be a live handle; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_reduction_report(h: *const RsReduction, json_out: *mut *mut c_char) -> RsStatus {
    guard(|| {
        let h = h.as_ref().ok_or((RsStatus::NullPointer, "null handle".to_string()))?;
        write_string(json_out, to_pretty_json(&ReductionReport::new(&h.out)))
    })
}

/// Runs the exhaustive lemma check and writes its report (JSON).
///
/// # Safety
/// `formula_json` must be NUL-terminated; `json_out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rs_verify_lemma(
    formula_json: *const c_char,
    problem_code: u32,
    variant: u32,
    node_limit: u64,
    time_limit_seconds: f64,
    json_out: *mut *mut c_char,
) -> RsStatus {
    guard(|| {
        let inst = parse_formula(read_str(formula_json)?).map_err(|e| (RsStatus::ParseError, e.to_string()))?;
        let b = budget(node_limit, time_limit_seconds)?;
        let report = verify_lemma(&inst, problem(problem_code)?, filter(variant)?, &b)
            .map_err(|e| (RsStatus::ReductionError, e.to_string()))?;
        write_string(json_out, to_pretty_json(&report))
    })
}
