//! C ABI over the benchmark pipeline.
//!
//! Conventions:
//!
//! - Handles are opaque (`SbInstance`); free them with the matching
//!   `*_free` function exactly once.
//! - Every fallible call returns an [`SbStatus`]; on failure the
//!   per-thread message from [`sb_last_error_message`] explains why.
//! - String results are NUL-terminated, UTF-8, owned by the caller and
//!   released with [`sb_string_free`]. Structured results are JSON.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use stepbench::catalog::{self, Instance, TaskId};
use stepbench::harness::echo;
use stepbench::prompt::{PromptMode, TemplateSet};
use stepbench::scoring;

/// Status code of a C-ABI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbStatus {
    /// Success.
    SbOk = 0,
    /// A required pointer argument was NULL.
    SbNullPointer = 1,
    /// A string argument was not valid UTF-8.
    SbInvalidUtf8 = 2,
    /// Unknown task id or prompt mode.
    SbUnknownTask = 3,
    /// Argument outside the admitted grid (size, seed, keyword).
    SbInvalidArgument = 4,
    /// Rendering failed.
    SbRenderError = 5,
    /// Oracle or scoring failure.
    SbPipelineError = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl std::fmt::Display) {
    let text = CString::new(message.to_string())
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn string_out(value: String, out: *mut *mut c_char) -> SbStatus {
    let Ok(cstr) = CString::new(value) else {
        set_error("result contained an interior NUL byte");
        return SbStatus::SbPipelineError;
    };
    unsafe { *out = cstr.into_raw() };
    SbStatus::SbOk
}

/// # Safety
/// `ptr` must be NULL or a pointer previously returned by this library's
/// string-producing functions, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(unsafe { CString::from_raw(ptr) });
    }
}

/// Returns the library version as a static string (do not free).
#[no_mangle]
pub extern "C" fn sb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns and clears the per-thread error message from the last failed
/// call, or NULL when none is pending. Free with [`sb_string_free`].
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow_mut().take() {
        Some(text) => text.into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Opaque benchmark instance: payload plus gold answer and gold trace.
pub struct SbInstance {
    inner: Instance,
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, SbStatus> {
    if ptr.is_null() {
        set_error(format!("{what} is NULL"));
        return Err(SbStatus::SbNullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        SbStatus::SbInvalidUtf8
    })
}

fn parse_task(name: &str) -> Result<TaskId, SbStatus> {
    TaskId::parse(name).map_err(|e| {
        set_error(e);
        SbStatus::SbUnknownTask
    })
}

/// Writes a JSON array describing all 32 registered tasks (id, family,
/// admitted sizes, comparison mode, trace variable).
///
/// # Safety
/// `out_json` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn sb_tasks_json(out_json: *mut *mut c_char) -> SbStatus {
    if out_json.is_null() {
        set_error("out_json is NULL");
        return SbStatus::SbNullPointer;
    }
    match serde_json::to_string(catalog::list_tasks()) {
        Ok(json) => string_out(json, out_json),
        Err(e) => {
            set_error(e);
            SbStatus::SbPipelineError
        }
    }
}

/// Samples the deterministic instance of `task` for `(size, seed)` and
/// returns an owned handle.
///
/// # Safety
/// `task` must be a NUL-terminated string and `out_instance` a valid
/// pointer; the handle must be released with [`sb_instance_free`].
#[no_mangle]
pub unsafe extern "C" fn sb_instance_sample(
    task: *const c_char,
    size: usize,
    seed: u64,
    out_instance: *mut *mut SbInstance,
) -> SbStatus {
    if out_instance.is_null() {
        set_error("out_instance is NULL");
        return SbStatus::SbNullPointer;
    }
    let task = match unsafe { read_str(task, "task") }.and_then(parse_task) {
        Ok(task) => task,
        Err(status) => return status,
    };
    match catalog::sample_instance(task, size, seed) {
        Ok(inner) => {
            unsafe { *out_instance = Box::into_raw(Box::new(SbInstance { inner })) };
            SbStatus::SbOk
        }
        Err(e) => {
            set_error(e);
            SbStatus::SbInvalidArgument
        }
    }
}

/// # Safety
/// `instance` must be NULL or a handle from [`sb_instance_sample`], not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_instance_free(instance: *mut SbInstance) {
    if !instance.is_null() {
        drop(unsafe { Box::from_raw(instance) });
    }
}

unsafe fn borrow_instance<'a>(
    instance: *const SbInstance,
) -> Result<&'a Instance, SbStatus> {
    if instance.is_null() {
        set_error("instance is NULL");
        return Err(SbStatus::SbNullPointer);
    }
    Ok(&unsafe { &*instance }.inner)
}

/// Serializes the instance (task, seed, size, payload, gold answer, gold
/// trace) as JSON.
///
/// # Safety
/// `instance` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_instance_json(
    instance: *const SbInstance,
    out_json: *mut *mut c_char,
) -> SbStatus {
    if out_json.is_null() {
        set_error("out_json is NULL");
        return SbStatus::SbNullPointer;
    }
    let inst = match unsafe { borrow_instance(instance) } {
        Ok(inst) => inst,
        Err(status) => return status,
    };
    match serde_json::to_string(inst) {
        Ok(json) => string_out(json, out_json),
        Err(e) => {
            set_error(e);
            SbStatus::SbPipelineError
        }
    }
}

/// Renders the instance's prompt body for `mode` (`"nl"` or `"code"`).
///
/// # Safety
/// `instance` must be a live handle; `mode` a NUL-terminated string;
/// `out_body` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_render(
    instance: *const SbInstance,
    mode: *const c_char,
    out_body: *mut *mut c_char,
) -> SbStatus {
    if out_body.is_null() {
        set_error("out_body is NULL");
        return SbStatus::SbNullPointer;
    }
    let inst = match unsafe { borrow_instance(instance) } {
        Ok(inst) => inst,
        Err(status) => return status,
    };
    let mode = match unsafe { read_str(mode, "mode") } {
        Ok(text) => match PromptMode::parse(text) {
            Ok(mode) => mode,
            Err(e) => {
                set_error(e);
                return SbStatus::SbUnknownTask;
            }
        },
        Err(status) => return status,
    };
    match TemplateSet::embedded().render(inst, mode) {
        Ok(rendered) => string_out(rendered.body, out_body),
        Err(e) => {
            set_error(e);
            SbStatus::SbRenderError
        }
    }
}

/// Writes the oracle-echo response for the instance: the gold trace and
/// answer serialized in the task's expected textual step format.
///
/// # Safety
/// `instance` must be a live handle and `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_oracle_echo(
    instance: *const SbInstance,
    out_text: *mut *mut c_char,
) -> SbStatus {
    if out_text.is_null() {
        set_error("out_text is NULL");
        return SbStatus::SbNullPointer;
    }
    match unsafe { borrow_instance(instance) } {
        Ok(inst) => string_out(echo::oracle_response(inst), out_text),
        Err(status) => status,
    }
}

/// Scores `response_text` against the instance's gold data; writes a JSON
/// object with `final_correct`, `extraction_failed`,
/// `intermediate_correct` and `process`.
///
/// # Safety
/// `instance` must be a live handle; `response_text` a NUL-terminated
/// string; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_score_response(
    instance: *const SbInstance,
    response_text: *const c_char,
    out_json: *mut *mut c_char,
) -> SbStatus {
    if out_json.is_null() {
        set_error("out_json is NULL");
        return SbStatus::SbNullPointer;
    }
    let inst = match unsafe { borrow_instance(instance) } {
        Ok(inst) => inst,
        Err(status) => return status,
    };
    let text = match unsafe { read_str(response_text, "response_text") } {
        Ok(text) => text,
        Err(status) => return status,
    };
    let score = scoring::score_response(inst, text);
    match serde_json::to_string(&score) {
        Ok(json) => string_out(json, out_json),
        Err(e) => {
            set_error(e);
            SbStatus::SbPipelineError
        }
    }
}
