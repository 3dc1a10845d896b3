//! C ABI for the sgb library: opaque context handles, UTF-8 string based
//! input and output, and integer error codes. Every returned string is
//! owned by the caller and must be released with `sgb_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use sgb::euclid::EuclideanScalar;
use sgb::groebner::{member, reduced_strong_groebner, spoly_of_set, EngineOpts};
use sgb::linsys::{gnf_uniform, kernel, solve, MatrixFile, PolyMatrix, SolveResult};
use sgb::polyvec::{AdmissibleOrder, Context, MonoOrder, PolyVector};
use sgb::text::{format_vector, parse_vector};

/// Success.
pub const SGB_OK: c_int = 0;
/// A required pointer argument was null.
pub const SGB_ERR_NULL: c_int = -1;
/// An argument was not valid UTF-8.
pub const SGB_ERR_UTF8: c_int = -2;
/// Input could not be parsed; details via `sgb_last_error_message`.
pub const SGB_ERR_PARSE: c_int = -3;
/// The computation failed; details via `sgb_last_error_message`.
pub const SGB_ERR_MATH: c_int = -4;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|c| *c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

/// The message of the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sgb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

enum Ring {
    Int,
    Rat,
}

/// An opaque handle bundling the coefficient ring, the variable names, the
/// number of vector components and the admissible order.
pub struct SgbContext {
    ring: Ring,
    ctx: Arc<Context>,
    ord: AdmissibleOrder,
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, c_int> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(SGB_ERR_NULL);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SGB_ERR_UTF8
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "")).unwrap().into_raw()
}

/// Creates a context. `ring` is "Z" or "Q", `vars` a comma separated list
/// of variable names, `ncomps` the number of vector components (>= 1).
/// Returns null on invalid input.
#[no_mangle]
pub unsafe extern "C" fn sgb_context_new(
    ring: *const c_char,
    vars: *const c_char,
    ncomps: usize,
) -> *mut SgbContext {
    let (Ok(ring), Ok(vars)) = (read_str(ring), read_str(vars)) else {
        return std::ptr::null_mut();
    };
    let ring = match ring {
        "Z" => Ring::Int,
        "Q" => Ring::Rat,
        other => {
            set_error(&format!("unknown ring `{other}` (expected Z or Q)"));
            return std::ptr::null_mut();
        }
    };
    if ncomps == 0 {
        set_error("ncomps must be at least 1");
        return std::ptr::null_mut();
    }
    let names: Vec<String> = vars
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let ctx = Context::new(names, ncomps);
    let ord = AdmissibleOrder::pot_lex(ncomps);
    Box::into_raw(Box::new(SgbContext { ring, ctx, ord }))
}

/// Releases a context created by `sgb_context_new`.
#[no_mangle]
pub unsafe extern "C" fn sgb_context_free(ctx: *mut SgbContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sgb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn parse_lines<R: EuclideanScalar>(
    ctx: &Arc<Context>,
    text: &str,
) -> Result<Vec<PolyVector<R>>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = parse_vector::<R>(ctx, line).map_err(|e| format!("line {}: {e}", i + 1))?;
        out.push(v);
    }
    if out.is_empty() {
        return Err("no polynomial vectors in input".into());
    }
    Ok(out)
}

fn basis_impl<R: EuclideanScalar>(handle: &SgbContext, gens: &str) -> Result<String, (c_int, String)> {
    let gens =
        parse_lines::<R>(&handle.ctx, gens).map_err(|e| (SGB_ERR_PARSE, e))?;
    let basis = reduced_strong_groebner(&gens, &handle.ord, &EngineOpts::default())
        .map_err(|e| (SGB_ERR_MATH, e.to_string()))?;
    Ok(basis
        .iter()
        .map(|f| format_vector(f, &handle.ord))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// The reduced strong Groebner basis of the module generated by the
/// newline separated vectors in `gens`, one basis element per line in
/// strictly decreasing order. Returns null on error.
#[no_mangle]
pub unsafe extern "C" fn sgb_reduced_basis(
    ctx: *const SgbContext,
    gens: *const c_char,
) -> *mut c_char {
    if ctx.is_null() {
        set_error("null context");
        return std::ptr::null_mut();
    }
    let handle = &*ctx;
    let Ok(gens) = read_str(gens) else { return std::ptr::null_mut() };
    let res = match handle.ring {
        Ring::Int => basis_impl::<BigInt>(handle, gens),
        Ring::Rat => basis_impl::<BigRational>(handle, gens),
    };
    match res {
        Ok(s) => to_c_string(s),
        Err((_, msg)) => {
            set_error(&msg);
            std::ptr::null_mut()
        }
    }
}

fn member_impl<R: EuclideanScalar>(
    handle: &SgbContext,
    f: &str,
    gens: &str,
) -> Result<bool, (c_int, String)> {
    let f = parse_vector::<R>(&handle.ctx, f).map_err(|e| (SGB_ERR_PARSE, e.to_string()))?;
    let gens = parse_lines::<R>(&handle.ctx, gens).map_err(|e| (SGB_ERR_PARSE, e))?;
    let basis = reduced_strong_groebner(&gens, &handle.ord, &EngineOpts::default())
        .map_err(|e| (SGB_ERR_MATH, e.to_string()))?;
    Ok(member(&f, &basis, &handle.ord))
}

/// Whether `f` lies in the module generated by the newline separated
/// vectors in `gens`: 1 yes, 0 no, negative error code on failure.
#[no_mangle]
pub unsafe extern "C" fn sgb_member(
    ctx: *const SgbContext,
    f: *const c_char,
    gens: *const c_char,
) -> c_int {
    if ctx.is_null() {
        set_error("null context");
        return SGB_ERR_NULL;
    }
    let handle = &*ctx;
    let (f, gens) = match (read_str(f), read_str(gens)) {
        (Ok(f), Ok(g)) => (f, g),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    let res = match handle.ring {
        Ring::Int => member_impl::<BigInt>(handle, f, gens),
        Ring::Rat => member_impl::<BigRational>(handle, f, gens),
    };
    match res {
        Ok(true) => 1,
        Ok(false) => 0,
        Err((code, msg)) => {
            set_error(&msg);
            code
        }
    }
}

fn spoly_impl<R: EuclideanScalar>(
    handle: &SgbContext,
    f: &str,
    g: &str,
) -> Result<String, (c_int, String)> {
    let f = parse_vector::<R>(&handle.ctx, f).map_err(|e| (SGB_ERR_PARSE, e.to_string()))?;
    let g = parse_vector::<R>(&handle.ctx, g).map_err(|e| (SGB_ERR_PARSE, e.to_string()))?;
    let h = spoly_of_set(&f, &g, &handle.ord).map_err(|e| (SGB_ERR_MATH, e.to_string()))?;
    Ok(format_vector(&h, &handle.ord))
}

/// The S-polynomial vector of `f` and `g`. Returns null on error.
#[no_mangle]
pub unsafe extern "C" fn sgb_spoly(
    ctx: *const SgbContext,
    f: *const c_char,
    g: *const c_char,
) -> *mut c_char {
    if ctx.is_null() {
        set_error("null context");
        return std::ptr::null_mut();
    }
    let handle = &*ctx;
    let (f, g) = match (read_str(f), read_str(g)) {
        (Ok(f), Ok(g)) => (f, g),
        _ => return std::ptr::null_mut(),
    };
    let res = match handle.ring {
        Ring::Int => spoly_impl::<BigInt>(handle, f, g),
        Ring::Rat => spoly_impl::<BigRational>(handle, f, g),
    };
    match res {
        Ok(s) => to_c_string(s),
        Err((_, msg)) => {
            set_error(&msg);
            std::ptr::null_mut()
        }
    }
}

enum MatrixOp {
    Gnf,
    Solve,
    Kernel,
}

fn matrix_op_impl<R: EuclideanScalar>(file: &MatrixFile, op: MatrixOp) -> Result<String, String> {
    let ctx = Context::new(file.ring.vars.clone(), 1);
    let ncols = file
        .matrix
        .first()
        .map(|r| r.len())
        .ok_or_else(|| "matrix has no rows".to_string())?;
    if ncols == 0 || file.matrix.iter().any(|r| r.len() != ncols) {
        return Err("matrix must be rectangular with at least one column".into());
    }
    let mut rows = Vec::with_capacity(file.matrix.len());
    for (i, row) in file.matrix.iter().enumerate() {
        let mut parsed = Vec::with_capacity(ncols);
        for (j, s) in row.iter().enumerate() {
            parsed.push(
                parse_vector::<R>(&ctx, s)
                    .map_err(|e| format!("matrix entry ({}, {}): {e}", i + 1, j + 1))?,
            );
        }
        rows.push(parsed);
    }
    let a = PolyMatrix::new(ctx.clone(), ncols, rows);
    let order = match &file.order {
        None => MonoOrder::Lex,
        Some(spec) if spec.kind == "lex" => MonoOrder::Lex,
        Some(spec) if spec.kind == "matrix" => MonoOrder::Matrix(
            spec.matrix
                .clone()
                .ok_or_else(|| "order of type matrix lacks a matrix".to_string())?,
        ),
        Some(spec) => return Err(format!("unknown order type `{}`", spec.kind)),
    };
    let opts = EngineOpts::default();
    let scalar_ord = AdmissibleOrder::pot_lex(1);
    let fmt_rows = |m: &PolyMatrix<R>| -> Vec<Vec<String>> {
        m.rows()
            .iter()
            .map(|row| row.iter().map(|p| format_vector(p, &scalar_ord)).collect())
            .collect()
    };
    let result = match op {
        MatrixOp::Gnf => {
            let h = gnf_uniform(&a, &order, &opts).map_err(|e| e.to_string())?;
            json!({ "gnf": fmt_rows(&h) })
        }
        MatrixOp::Kernel => {
            let d = kernel(&a, &order, &opts).map_err(|e| e.to_string())?;
            json!({ "kernel": fmt_rows(&d) })
        }
        MatrixOp::Solve => {
            let rhs = file
                .rhs
                .as_ref()
                .ok_or_else(|| "solve needs an rhs entry".to_string())?;
            let mut b = Vec::with_capacity(rhs.len());
            for (i, s) in rhs.iter().enumerate() {
                b.push(
                    parse_vector::<R>(&ctx, s).map_err(|e| format!("rhs entry {}: {e}", i + 1))?,
                );
            }
            match solve(&a, &b, &order, &opts).map_err(|e| e.to_string())? {
                SolveResult::Solution { particular, kernel } => {
                    let part: Vec<String> = particular
                        .iter()
                        .map(|p| format_vector(p, &scalar_ord))
                        .collect();
                    json!({ "solution": part, "kernel": fmt_rows(&kernel) })
                }
                SolveResult::NoSolution { colon_basis } => {
                    let basis: Vec<String> = colon_basis
                        .iter()
                        .map(|p| format_vector(p, &scalar_ord))
                        .collect();
                    json!({ "solution": null, "colon_basis": basis })
                }
            }
        }
    };
    Ok(json!({ "result": result }).to_string())
}

unsafe fn matrix_entry(input: *const c_char, op: MatrixOp) -> *mut c_char {
    let Ok(text) = read_str(input) else { return std::ptr::null_mut() };
    let file: MatrixFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => {
            set_error(&format!("invalid matrix file: {e}"));
            return std::ptr::null_mut();
        }
    };
    let res = match file.ring.coeff.as_str() {
        "Z" => matrix_op_impl::<BigInt>(&file, op),
        "Q" => matrix_op_impl::<BigRational>(&file, op),
        other => Err(format!("unknown ring `{other}` (expected Z or Q)")),
    };
    match res {
        Ok(s) => to_c_string(s),
        Err(msg) => {
            set_error(&msg);
            std::ptr::null_mut()
        }
    }
}

/// Groebner normal form of the matrix in the JSON document `input`.
/// The result is a JSON document with a "result" object; null on error.
#[no_mangle]
pub unsafe extern "C" fn sgb_gnf_json(input: *const c_char) -> *mut c_char {
    matrix_entry(input, MatrixOp::Gnf)
}

/// Solves A x = b for the matrix and rhs in the JSON document `input`.
#[no_mangle]
pub unsafe extern "C" fn sgb_solve_json(input: *const c_char) -> *mut c_char {
    matrix_entry(input, MatrixOp::Solve)
}

/// A Groebner normal form of the kernel of the matrix in `input`.
#[no_mangle]
pub unsafe extern "C" fn sgb_kernel_json(input: *const c_char) -> *mut c_char {
    matrix_entry(input, MatrixOp::Kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take(p: *mut c_char) -> String {
        assert!(!p.is_null(), "unexpected null result");
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        sgb_string_free(p);
        s
    }

    #[test]
    fn basis_through_c_api() {
        unsafe {
            let ctx = sgb_context_new(cs("Z").as_ptr(), cs("x,y").as_ptr(), 1);
            assert!(!ctx.is_null());
            let out = take(sgb_reduced_basis(ctx, cs("2*x\n3*y\n").as_ptr()));
            assert_eq!(out, "x*y\n2*x\n3*y");
            sgb_context_free(ctx);
        }
    }

    #[test]
    fn member_through_c_api() {
        unsafe {
            let ctx = sgb_context_new(cs("Z").as_ptr(), cs("x,y").as_ptr(), 1);
            assert_eq!(sgb_member(ctx, cs("x*y").as_ptr(), cs("2*x\n3*y").as_ptr()), 1);
            assert_eq!(sgb_member(ctx, cs("x").as_ptr(), cs("2*x\n3*y").as_ptr()), 0);
            sgb_context_free(ctx);
        }
    }

    #[test]
    fn spoly_through_c_api() {
        unsafe {
            let ctx = sgb_context_new(cs("Z").as_ptr(), cs("x,y").as_ptr(), 3);
            let out = take(sgb_spoly(
                ctx,
                cs("(10*x^2*y^2 + y, 0, x)").as_ptr(),
                cs("(4*x^3*y + x^2, 1, 0)").as_ptr(),
            ));
            assert_eq!(out, "(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)");
            sgb_context_free(ctx);
        }
    }

    #[test]
    fn solve_through_c_api() {
        unsafe {
            let input = cs(
                r#"{"ring":{"coeff":"Z","vars":["x","y"]},
                    "matrix":[["10*y","0","4*x"]],
                    "rhs":["4*x^3"]}"#,
            );
            let out = take(sgb_solve_json(input.as_ptr()));
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v["result"]["solution"][2], "x^2");
            assert_eq!(v["result"]["kernel"][0][0], "2*x");
        }
    }

    #[test]
    fn errors_reported() {
        unsafe {
            let ctx = sgb_context_new(cs("Z").as_ptr(), cs("x").as_ptr(), 1);
            let out = sgb_reduced_basis(ctx, cs("2*q").as_ptr());
            assert!(out.is_null());
            let msg = CStr::from_ptr(sgb_last_error_message()).to_str().unwrap();
            assert!(msg.contains("unknown variable"));
            sgb_context_free(ctx);
            assert!(sgb_context_new(cs("F7").as_ptr(), cs("x").as_ptr(), 1).is_null());
        }
    }
}
