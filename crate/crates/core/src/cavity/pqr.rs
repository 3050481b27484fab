use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use super::{Ball, Cavity};
use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Reads ATOM/HETATM records from whitespace-separated PQR text.
///
/// The last five fields of each record are `x y z charge radius`, so an
/// optional chain identifier is accepted. Other records are skipped.
pub fn parse_pqr<R: Read>(reader: R) -> Result<Cavity> {
    let mut balls = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            Some(&"ATOM") | Some(&"HETATM") => {}
            _ => continue,
        }
        if fields.len() < 10 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected at least 10 fields, found {}", fields.len()),
            });
        }
        let tail = &fields[fields.len() - 5..];
        let mut vals = [0.0; 5];
        for (v, tok) in vals.iter_mut().zip(tail) {
            *v = tok.parse::<f64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("cannot parse number '{tok}'"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse { line: lineno, message: format!("non-finite value '{tok}'") });
            }
        }
        let [x, y, z, q, r] = vals;
        if r <= 0.0 {
            return Err(Error::Parse { line: lineno, message: format!("radius must be positive, got {r}") });
        }
        balls.push(Ball::new(Vec3::new(x, y, z), r, q));
    }
    Cavity::new(balls)
}

pub fn parse_pqr_str(text: &str) -> Result<Cavity> {
    parse_pqr(text.as_bytes())
}

pub fn read_pqr_file(path: impl AsRef<Path>) -> Result<Cavity> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_pqr(file)
}
