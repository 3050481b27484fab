//! The `ddlpb` command-line driver.

mod cases;

pub use cases::{builtin_case, BUILTIN_CASES};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::cavity::{read_pqr_file, Cavity, PointCharge};
use crate::error::{Error, Result};
use crate::operators::SolventParams;
use crate::solver::{convergence_sweep, solve, SolveConfig, SolveMode, SolveReport, SweepRow};
use crate::units::{codata, ROOM_TEMPERATURE};

/// Exit status for malformed flags, unreadable input or invalid parameters.
pub const EXIT_PARSE: i32 = 1;
/// Exit status for failures during the solve itself.
pub const EXIT_SOLVE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Outer,
    Global,
}

impl From<ModeArg> for SolveMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Outer => SolveMode::Outer,
            ModeArg::Global => SolveMode::Global,
        }
    }
}

/// Electrostatic solvation energy of a solute in an ionic solvent.
#[derive(Debug, Clone, Parser)]
#[command(name = "ddlpb", version, about)]
#[command(group(clap::ArgGroup::new("structure").required(true).args(["pqr", "case"])))]
pub struct CliArgs {
    /// PQR file with one ATOM/HETATM record per ball.
    #[arg(long, value_name = "PATH")]
    pub pqr: Option<PathBuf>,
    /// Built-in structure: born, kirkwood1..kirkwood5 or formaldehyde.
    #[arg(long, value_name = "NAME")]
    pub case: Option<String>,
    /// Solute dielectric constant.
    #[arg(long, default_value_t = 1.0)]
    pub eps1: f64,
    /// Solvent dielectric constant.
    #[arg(long, default_value_t = 78.54)]
    pub eps2: f64,
    /// Debye–Hückel screening constant in 1/Å.
    #[arg(long, conflicts_with = "ionic_strength")]
    pub kappa: Option<f64>,
    /// Ionic strength in mol/L, converted to a screening constant at 298.15 K.
    #[arg(long, value_name = "MOLAR")]
    pub ionic_strength: Option<f64>,
    #[arg(long, default_value_t = 7)]
    pub lmax: usize,
    /// Lebedev grid size.
    #[arg(long, default_value_t = 86)]
    pub nleb: usize,
    /// Relative energy increment ending the outer iteration.
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub gmres_tol: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Outer)]
    pub mode: ModeArg,
    /// Multiplier applied to every radius.
    #[arg(long, default_value_t = 1.0)]
    pub radius_scale: f64,
    /// Comma-separated `lmax:nleb` pairs to run in turn.
    #[arg(long, value_name = "L:N,...")]
    pub sweep: Option<String>,
    /// Write `x y z psi_r` for every exposed node.
    #[arg(long, value_name = "PATH")]
    pub surface_out: Option<PathBuf>,
    /// Write the energy table as CSV.
    #[arg(long, value_name = "PATH")]
    pub csv_out: Option<PathBuf>,
    /// Run operator applications on one thread.
    #[arg(long)]
    pub deterministic: bool,
}

pub const DEFAULT_KAPPA: f64 = 0.104;

/// `κ = sqrt(8π e² N_A I / (1000 ε2 k_B T))` in Å⁻¹ for `I` in mol/L.
pub fn kappa_from_ionic_strength(ionic_strength: f64, eps2: f64, temperature: f64) -> Result<f64> {
    if !(ionic_strength >= 0.0) {
        return Err(Error::NegativeIonicStrength(ionic_strength));
    }
    if !(temperature > 0.0) {
        return Err(Error::NonPositiveArgument(temperature));
    }
    if !(eps2 > 0.0) {
        return Err(Error::NonPositiveArgument(eps2));
    }
    let e = codata::ELEMENTARY_CHARGE_ESU;
    let k2_cm = 8.0 * std::f64::consts::PI * e * e * codata::AVOGADRO * ionic_strength
        / (1000.0 * eps2 * codata::BOLTZMANN_ERG * temperature);
    Ok((k2_cm * 1e-16).sqrt())
}

/// Parses `"3:26,5:50"` into `[(3, 26), (5, 50)]`.
pub fn parse_sweep(text: &str) -> Result<Vec<(usize, usize)>> {
    let bad = |tok: &str| Error::InvalidConfig(format!("sweep entry '{tok}' is not of the form lmax:nleb"));
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let (l, n) = tok.split_once(':').ok_or_else(|| bad(tok))?;
            Ok((l.trim().parse().map_err(|_| bad(tok))?, n.trim().parse().map_err(|_| bad(tok))?))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| if v.is_empty() { Err(Error::InvalidConfig("empty sweep".into())) } else { Ok(v) })
}

struct Prepared {
    cavity: Cavity,
    charges: Vec<PointCharge>,
    params: SolventParams,
    config: SolveConfig,
    sweep: Option<Vec<(usize, usize)>>,
}

fn prepare(args: &CliArgs) -> Result<Prepared> {
    let (cavity, charges) = match (&args.pqr, &args.case) {
        (Some(path), _) => {
            let c = read_pqr_file(path)?;
            let q = c.center_charges();
            (c, q)
        }
        (None, Some(name)) => builtin_case(name)?,
        (None, None) => return Err(Error::InvalidConfig("one of --pqr or --case is required".into())),
    };
    let cavity = cavity.rescaled(args.radius_scale)?;
    let kappa = match (args.kappa, args.ionic_strength) {
        (Some(k), _) => k,
        (None, Some(i)) => kappa_from_ionic_strength(i, args.eps2, ROOM_TEMPERATURE)?,
        (None, None) => DEFAULT_KAPPA,
    };
    let params = SolventParams::new(args.eps1, args.eps2, kappa)?;
    let config = SolveConfig {
        lmax: args.lmax,
        n_leb: args.nleb,
        tol: args.tol,
        gmres_tol: args.gmres_tol,
        mode: args.mode.into(),
        deterministic: args.deterministic,
        ..SolveConfig::default()
    };
    config.validate()?;
    crate::angular::lebedev_grid(config.n_leb)?;
    let sweep = args.sweep.as_deref().map(parse_sweep).transpose()?;
    if let Some(pairs) = &sweep {
        for (_, n) in pairs {
            crate::angular::lebedev_grid(*n)?;
        }
    }
    Ok(Prepared { cavity, charges, params, config, sweep })
}

/// Runs the driver on process arguments and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing the report and diagnostics to the given sinks.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match CliArgs::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let prep = match prepare(&args) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let res = match &prep.sweep {
        Some(pairs) => run_sweep(&prep, pairs, &args, out),
        None => run_single(&prep, &args, out),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_SOLVE
        }
    }
}

fn io_err(path: &std::path::Path) -> impl Fn(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

fn run_single(prep: &Prepared, args: &CliArgs, out: &mut dyn Write) -> Result<()> {
    let report = solve(&prep.cavity, &prep.charges, &prep.params, &prep.config)?;
    let secs = report.setup_seconds + report.solve_seconds;
    writeln!(
        out,
        "E_s = {:.4} kcal/mol  outer_iterations = {}  wall_time = {:.3} s",
        report.energy, report.outer_iterations, secs
    )
    .map_err(io_err(std::path::Path::new("<stdout>")))?;
    if let Some(path) = &args.csv_out {
        let row = SweepRow {
            lmax: prep.config.lmax,
            n_leb: prep.config.n_leb,
            energy: Some(report.energy),
            outer_iterations: report.outer_iterations,
            seconds: secs,
            error: None,
        };
        write_csv(path, &[row])?;
    }
    if let Some(path) = &args.surface_out {
        write_surface(path, &report)?;
    }
    Ok(())
}

fn run_sweep(prep: &Prepared, pairs: &[(usize, usize)], args: &CliArgs, out: &mut dyn Write) -> Result<()> {
    let (ls, ns): (Vec<usize>, Vec<usize>) = pairs.iter().copied().unzip();
    let rows = convergence_sweep(&prep.cavity, &prep.charges, &prep.params, &ls, &ns, &prep.config)?;
    let stdout = std::path::Path::new("<stdout>");
    for r in &rows {
        match (r.energy, &r.error) {
            (Some(e), _) => writeln!(
                out,
                "lmax = {:2}  nleb = {:4}  E_s = {:.4} kcal/mol  outer_iterations = {}  wall_time = {:.3} s",
                r.lmax, r.n_leb, e, r.outer_iterations, r.seconds
            ),
            (None, err) => writeln!(out, "lmax = {:2}  nleb = {:4}  failed: {}", r.lmax, r.n_leb, err.as_deref().unwrap_or("")),
        }
        .map_err(io_err(stdout))?;
    }
    if let Some(path) = &args.csv_out {
        write_csv(path, &rows)?;
    }
    if let Some(first_err) = rows.iter().find_map(|r| r.error.clone()) {
        return Err(Error::InvalidConfig(format!("sweep row failed: {first_err}")));
    }
    Ok(())
}

/// Writes the convergence table; relative errors are taken against the row
/// with the largest `(lmax, nleb)`.
pub fn write_csv(path: &std::path::Path, rows: &[SweepRow]) -> Result<()> {
    let finest = rows
        .iter()
        .filter(|r| r.energy.is_some())
        .max_by_key(|r| (r.lmax, r.n_leb))
        .and_then(|r| r.energy);
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_err(path, e))?;
    w.write_record(["lmax", "nleb", "energy_kcal_mol", "rel_err_vs_finest", "outer_iters", "seconds"])
        .map_err(|e| csv_err(path, e))?;
    for r in rows {
        let (energy, rel) = match (r.energy, finest) {
            (Some(e), Some(f)) => (e.to_string(), ((e - f) / f).abs().to_string()),
            (Some(e), None) => (e.to_string(), String::new()),
            (None, _) => ("nan".to_string(), String::new()),
        };
        w.write_record([
            r.lmax.to_string(),
            r.n_leb.to_string(),
            energy,
            rel,
            r.outer_iterations.to_string(),
            r.seconds.to_string(),
        ])
        .map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

fn csv_err(path: &std::path::Path, e: csv::Error) -> Error {
    Error::Io { path: path.to_path_buf(), source: std::io::Error::other(e.to_string()) }
}

/// One line `x y z psi_r` per exposed node, Å and e/Å.
pub fn write_surface(path: &std::path::Path, report: &SolveReport) -> Result<()> {
    let mut text = String::with_capacity(report.surface.len() * 80);
    for s in &report.surface {
        text.push_str(&format!("{} {} {} {}\n", s.position.x, s.position.y, s.position.z, s.psi_r));
    }
    std::fs::write(path, text).map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ionic_strength_conversion() {
        let k = kappa_from_ionic_strength(0.1, 78.54, 298.15).unwrap();
        assert!((k - 0.104).abs() < 1e-3, "{k}");
        assert_eq!(kappa_from_ionic_strength(0.0, 78.54, 298.15).unwrap(), 0.0);
        let k4 = kappa_from_ionic_strength(0.4, 78.54, 298.15).unwrap();
        assert!((k4 - 2.0 * k).abs() < 1e-15);
        assert!(matches!(kappa_from_ionic_strength(-1.0, 78.54, 298.15), Err(Error::NegativeIonicStrength(_))));
    }

    #[test]
    fn sweep_spec() {
        assert_eq!(parse_sweep("3:26, 5:50").unwrap(), vec![(3, 26), (5, 50)]);
        assert!(parse_sweep("3-26").is_err());
        assert!(parse_sweep("").is_err());
    }

    #[test]
    fn missing_structure_is_parse_error() {
        let mut o = Vec::new();
        let mut e = Vec::new();
        assert_eq!(run_with(["ddlpb", "--lmax", "3"], &mut o, &mut e), EXIT_PARSE);
    }
}
