//! C ABI for the `ddlpb` solver.
//!
//! Every entry point returns a [`DdlpbStatus`]; results come back through out
//! pointers. Cavities and reports are opaque heap handles released with the
//! matching `_free` function. The message of the most recent failure on the
//! calling thread is available from [`ddlpb_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ddlpb::cavity::{read_pqr_file, Ball, Cavity, PointCharge};
use ddlpb::geometry::Vec3;
use ddlpb::operators::SolventParams;
use ddlpb::oracle::{born_energy_screened, kirkwood_energy, KirkwoodProblem};
use ddlpb::solver::{solve, SolveConfig, SolveMode, SolveReport};
use ddlpb::Error;

/// Result code of every call.
#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdlpbStatus {
    DDLPB_OK = 0,
    DDLPB_NULL_POINTER = 1,
    DDLPB_INVALID_ARGUMENT = 2,
    DDLPB_PARSE_ERROR = 3,
    DDLPB_IO_ERROR = 4,
    DDLPB_UNSUPPORTED_GRID = 5,
    DDLPB_CHARGE_OUTSIDE_CAVITY = 6,
    DDLPB_SINGULAR_EVALUATION = 7,
    DDLPB_NO_CONVERGENCE = 8,
    DDLPB_NO_EXPOSED_SURFACE = 9,
    DDLPB_BUFFER_TOO_SMALL = 10,
    DDLPB_INTERNAL_ERROR = 11,
}

/// Linear-system strategy, see [`DdlpbSolveParams::mode`].
#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdlpbMode {
    DDLPB_MODE_OUTER = 0,
    DDLPB_MODE_GLOBAL = 1,
}

/// Medium and discretization parameters of one solve.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DdlpbSolveParams {
    pub eps1: f64,
    pub eps2: f64,
    /// 1/Å; zero selects the salt-free limit.
    pub kappa: f64,
    pub lmax: u32,
    pub n_leb: u32,
    pub tol: f64,
    pub gmres_tol: f64,
    pub mode: DdlpbMode,
    /// Nonzero runs every operator application on the calling thread.
    pub deterministic: i32,
}

/// Opaque solute: balls plus the point charges that generate the field.
pub struct DdlpbCavity {
    cavity: Cavity,
    charges: Vec<PointCharge>,
}

/// Opaque result of a solve.
pub struct DdlpbReport {
    report: SolveReport,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(err: &Error) -> DdlpbStatus {
    use DdlpbStatus::*;
    match err {
        Error::Parse { .. } | Error::EmptyStructure => DDLPB_PARSE_ERROR,
        Error::Io { .. } => DDLPB_IO_ERROR,
        Error::UnsupportedGridSize(_) => DDLPB_UNSUPPORTED_GRID,
        Error::ChargeOutsideCavity { .. } => DDLPB_CHARGE_OUTSIDE_CAVITY,
        Error::SingularEvaluation { .. } => DDLPB_SINGULAR_EVALUATION,
        Error::NoConvergence { .. } | Error::SeriesNotConverged { .. } => DDLPB_NO_CONVERGENCE,
        Error::NoExposedSurface => DDLPB_NO_EXPOSED_SURFACE,
        _ => DDLPB_INVALID_ARGUMENT,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (DdlpbStatus, String)>) -> DdlpbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DdlpbStatus::DDLPB_OK,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DdlpbStatus::DDLPB_INTERNAL_ERROR
        }
    }
}

fn lib_err(e: Error) -> (DdlpbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (DdlpbStatus, String) {
    (DdlpbStatus::DDLPB_NULL_POINTER, format!("{what} is null"))
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], (DdlpbStatus, String)> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn points(xyz: *const f64, n: usize, what: &str) -> Result<Vec<Vec3>, (DdlpbStatus, String)> {
    Ok(slice(xyz, 3 * n, what)?.chunks_exact(3).map(|c| Vec3::new(c[0], c[1], c[2])).collect())
}

/// Default parameters: ε1 = 1, ε2 = 78.54, κ = 0.104 Å⁻¹, ℓmax = 7 on 86 nodes,
/// outer iteration to a relative energy increment of 1e-4.
#[no_mangle]
pub extern "C" fn ddlpb_solve_params_default() -> DdlpbSolveParams {
    let c = SolveConfig::default();
    let p = SolventParams::default();
    DdlpbSolveParams {
        eps1: p.eps1,
        eps2: p.eps2,
        kappa: p.kappa,
        lmax: c.lmax as u32,
        n_leb: c.n_leb as u32,
        tol: c.tol,
        gmres_tol: c.gmres_tol,
        mode: DdlpbMode::DDLPB_MODE_OUTER,
        deterministic: 0,
    }
}

/// Creates a cavity of `n` balls. `centers` holds `3n` coordinates in Å;
/// each ball carries its charge at its center.
///
/// # Safety
/// `centers` must point to `3n` doubles, `radii` and `charges` to `n` each,
/// and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_cavity_new(
    n: usize,
    centers: *const f64,
    radii: *const f64,
    charges: *const f64,
    out: *mut *mut DdlpbCavity,
) -> DdlpbStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = points(centers, n, "centers")?;
        let r = slice(radii, n, "radii")?;
        let q = slice(charges, n, "charges")?;
        let balls = (0..n).map(|k| Ball::new(c[k], r[k], q[k])).collect();
        let cavity = Cavity::new(balls).map_err(lib_err)?;
        let charges = cavity.center_charges();
        *out = Box::into_raw(Box::new(DdlpbCavity { cavity, charges }));
        Ok(())
    })
}

/// Reads a cavity from a PQR file; charges sit at the atom centers.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_cavity_from_pqr(path: *const c_char, out: *mut *mut DdlpbCavity) -> DdlpbStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let p = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| (DdlpbStatus::DDLPB_INVALID_ARGUMENT, "path is not valid UTF-8".to_string()))?;
        let cavity = read_pqr_file(p).map_err(lib_err)?;
        let charges = cavity.center_charges();
        *out = Box::into_raw(Box::new(DdlpbCavity { cavity, charges }));
        Ok(())
    })
}

/// Replaces the point charges of a cavity with `n` charges at `positions` (3n doubles).
///
/// # Safety
/// `cavity` must come from a `ddlpb_cavity_*` constructor; the arrays must
/// hold `3n` and `n` doubles.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_cavity_set_charges(
    cavity: *mut DdlpbCavity,
    n: usize,
    positions: *const f64,
    charges: *const f64,
) -> DdlpbStatus {
    guard(|| {
        let cav = cavity.as_mut().ok_or_else(|| null("cavity"))?;
        let p = points(positions, n, "positions")?;
        let q = slice(charges, n, "charges")?;
        cav.charges = p.into_iter().zip(q).map(|(x, c)| PointCharge::new(x, *c)).collect();
        Ok(())
    })
}

/// Number of balls.
///
/// # Safety
/// `cavity` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_cavity_len(cavity: *const DdlpbCavity, out: *mut usize) -> DdlpbStatus {
    guard(|| {
        let cav = cavity.as_ref().ok_or_else(|| null("cavity"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = cav.cavity.len();
        Ok(())
    })
}

/// Releases a cavity. Passing null is a no-op.
///
/// # Safety
/// `cavity` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_cavity_free(cavity: *mut DdlpbCavity) {
    if !cavity.is_null() {
        drop(Box::from_raw(cavity));
    }
}

/// Solves for the reaction potential and solvation energy.
///
/// # Safety
/// `cavity` must be a live handle, `params` and `out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_solve(
    cavity: *const DdlpbCavity,
    params: *const DdlpbSolveParams,
    out: *mut *mut DdlpbReport,
) -> DdlpbStatus {
    guard(|| {
        let cav = cavity.as_ref().ok_or_else(|| null("cavity"))?;
        let p = params.as_ref().ok_or_else(|| null("params"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let solvent = SolventParams::new(p.eps1, p.eps2, p.kappa).map_err(lib_err)?;
        let config = SolveConfig {
            lmax: p.lmax as usize,
            n_leb: p.n_leb as usize,
            tol: p.tol,
            gmres_tol: p.gmres_tol,
            mode: match p.mode {
                DdlpbMode::DDLPB_MODE_OUTER => SolveMode::Outer,
                DdlpbMode::DDLPB_MODE_GLOBAL => SolveMode::Global,
            },
            deterministic: p.deterministic != 0,
            ..SolveConfig::default()
        };
        let report = solve(&cav.cavity, &cav.charges, &solvent, &config).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(DdlpbReport { report }));
        Ok(())
    })
}

/// Solvation energy in kcal/mol.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_report_energy(report: *const DdlpbReport, out: *mut f64) -> DdlpbStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.report.energy;
        Ok(())
    })
}

/// Outer iterations performed (1 in global mode).
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_report_outer_iterations(report: *const DdlpbReport, out: *mut usize) -> DdlpbStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.report.outer_iterations;
        Ok(())
    })
}

/// Number of exposed surface samples.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_report_surface_len(report: *const DdlpbReport, out: *mut usize) -> DdlpbStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.report.surface.len();
        Ok(())
    })
}

/// Copies the surface samples as rows `x y z psi_r` into `buf`, which must
/// hold `4 × ddlpb_report_surface_len` doubles; `capacity` counts doubles.
///
/// # Safety
/// `report` must be a live handle and `buf` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_report_surface(report: *const DdlpbReport, buf: *mut f64, capacity: usize) -> DdlpbStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let need = 4 * r.report.surface.len();
        if capacity < need {
            return Err((DdlpbStatus::DDLPB_BUFFER_TOO_SMALL, format!("need {need} doubles, got {capacity}")));
        }
        if need == 0 {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        let out = std::slice::from_raw_parts_mut(buf, need);
        for (row, s) in out.chunks_exact_mut(4).zip(&r.report.surface) {
            row.copy_from_slice(&[s.position.x, s.position.y, s.position.z, s.psi_r]);
        }
        Ok(())
    })
}

/// Releases a report. Passing null is a no-op.
///
/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_report_free(report: *mut DdlpbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Kirkwood reference energy (kcal/mol) of `n` charges inside a sphere of
/// radius `radius` centered at the origin, without salt.
///
/// # Safety
/// `positions` must hold `3n` doubles, `charges` `n`, and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_kirkwood_energy(
    n: usize,
    positions: *const f64,
    charges: *const f64,
    radius: f64,
    eps1: f64,
    eps2: f64,
    out: *mut f64,
) -> DdlpbStatus {
    guard(|| {
        let p = points(positions, n, "positions")?;
        let q = slice(charges, n, "charges")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let charges = p.into_iter().zip(q).map(|(x, c)| PointCharge::new(x, *c)).collect();
        *out = kirkwood_energy(&KirkwoodProblem::new(radius, charges, eps1, eps2)).map_err(lib_err)?;
        Ok(())
    })
}

/// Energy (kcal/mol) of a charge at the center of one ball in a screened solvent.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_born_energy(q: f64, radius: f64, eps1: f64, eps2: f64, kappa: f64, out: *mut f64) -> DdlpbStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = born_energy_screened(q, radius, eps1, eps2, kappa).map_err(lib_err)?;
        Ok(())
    })
}

/// Copies the last error message of this thread, NUL-terminated and truncated
/// to `capacity` bytes. Returns the full message length excluding the NUL.
///
/// # Safety
/// `buf` must be null or hold `capacity` bytes.
#[no_mangle]
pub unsafe extern "C" fn ddlpb_last_error_message(buf: *mut c_char, capacity: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && capacity > 0 {
            let n = msg.len().min(capacity - 1);
            ptr::copy_nonoverlapping(msg.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ddlpb_status_string(status: DdlpbStatus) -> *const c_char {
    use DdlpbStatus::*;
    let s: &'static [u8] = match status {
        DDLPB_OK => b"ok\0",
        DDLPB_NULL_POINTER => b"null pointer argument\0",
        DDLPB_INVALID_ARGUMENT => b"invalid argument\0",
        DDLPB_PARSE_ERROR => b"structure parse error\0",
        DDLPB_IO_ERROR => b"i/o error\0",
        DDLPB_UNSUPPORTED_GRID => b"unsupported Lebedev grid size\0",
        DDLPB_CHARGE_OUTSIDE_CAVITY => b"charge outside cavity\0",
        DDLPB_SINGULAR_EVALUATION => b"charge on a surface node\0",
        DDLPB_NO_CONVERGENCE => b"no convergence\0",
        DDLPB_NO_EXPOSED_SURFACE => b"no exposed surface\0",
        DDLPB_BUFFER_TOO_SMALL => b"buffer too small\0",
        DDLPB_INTERNAL_ERROR => b"internal error\0",
    };
    s.as_ptr() as *const c_char
}
