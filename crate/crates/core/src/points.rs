//! Finite point sets in the half-open unit cube and their CSV representation.
//!
//! The file format is one point per line, `d` comma-separated decimal reals
//! in `[0,1)`. An optional first line `# d=<d> n=<N>` declares the shape; when
//! present it is checked against the rows that follow. Blank lines are ignored.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// An ordered multiset of points in `[0,1)^d`, stored row-major.
///
/// Point order is significant: prefixes and the lifting construction read it.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
}

impl PointSet {
    /// An empty set in dimension `dim`. Useful as a builder; discrepancy
    /// routines reject it.
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { dim, coords: Vec::new() })
    }

    /// Builds a point set from row-major coordinates, validating the range.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates do not form whole points of dimension {dim}",
                coords.len()
            )));
        }
        for (i, &c) in coords.iter().enumerate() {
            check_coordinate(c, i / dim, i % dim)?;
        }
        Ok(Self { dim, coords })
    }

    pub fn from_rows<R: AsRef<[f64]>>(dim: usize, rows: &[R]) -> Result<Self> {
        let mut set = Self::empty(dim)?;
        for row in rows {
            set.push(row.as_ref())?;
        }
        Ok(set)
    }

    /// Appends one point.
    pub fn push(&mut self, point: &[f64]) -> Result<()> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: point.len() });
        }
        let row = self.len();
        for (j, &c) in point.iter().enumerate() {
            check_coordinate(c, row, j)?;
        }
        self.coords.extend_from_slice(point);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, f64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// Values of coordinate `axis` over all points, in point order.
    pub fn axis(&self, axis: usize) -> Vec<f64> {
        self.iter().map(|p| p[axis]).collect()
    }

    /// The first `n` points (or all of them if `n` exceeds the size).
    pub fn prefix(&self, n: usize) -> PointSet {
        let n = n.min(self.len());
        Self { dim: self.dim, coords: self.coords[..n * self.dim].to_vec() }
    }

    /// Fails with [`Error::EmptyPointSet`] when there is nothing to evaluate.
    pub fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyPointSet)
        } else {
            Ok(())
        }
    }

    /// Returns a copy with coordinates transformed pointwise. The caller is
    /// responsible for keeping values in `[0,1)`; the result is re-validated.
    pub fn map_coords(&self, mut f: impl FnMut(usize, f64) -> f64) -> Result<PointSet> {
        let dim = self.dim;
        let coords = self.coords.iter().enumerate().map(|(i, &c)| f(i % dim, c)).collect();
        Self::from_flat(dim, coords)
    }

    /// Parses the CSV point format.
    pub fn read_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut declared: Option<(usize, usize)> = None;
        let mut dim: Option<usize> = None;
        let mut coords = Vec::new();
        let mut rows = 0usize;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                if rows > 0 || declared.is_some() {
                    return Err(Error::Parse { line: lineno, msg: "header must be the first line".into() });
                }
                declared = Some(parse_header(rest, lineno)?);
                continue;
            }
            let start = coords.len();
            for (col, field) in trimmed.split(',').enumerate() {
                let field = field.trim();
                let value: f64 = field.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("column {}: cannot parse {field:?} as a real", col + 1),
                })?;
                check_coordinate(value, rows, col)?;
                coords.push(value);
            }
            let width = coords.len() - start;
            match dim {
                None => dim = Some(width),
                Some(d) if d != width => {
                    return Err(Error::Parse { line: lineno, msg: format!("expected {d} columns, found {width}") })
                }
                _ => {}
            }
            rows += 1;
        }
        let dim = match (dim, declared) {
            (Some(d), Some((hd, hn))) => {
                if d != hd {
                    return Err(Error::DimensionMismatch { expected: hd, found: d });
                }
                if rows != hn {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("header declares n={hn} but {rows} rows were read"),
                    });
                }
                d
            }
            (Some(d), None) => d,
            (None, Some((hd, 0))) => hd,
            (None, Some((_, hn))) => {
                return Err(Error::Parse { line: 1, msg: format!("header declares n={hn} but no rows follow") })
            }
            (None, None) => return Err(Error::Parse { line: 0, msg: "no points and no header".into() }),
        };
        Self::from_flat(dim, coords)
    }

    /// Writes the CSV point format with a `# d= n=` header. Coordinates are
    /// printed in shortest round-trip form, so reading them back is exact.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# d={} n={}", self.dim, self.len())?;
        let mut line = String::new();
        for p in self.iter() {
            line.clear();
            for (j, c) in p.iter().enumerate() {
                if j > 0 {
                    line.push(',');
                }
                write!(line, "{c}").expect("writing to a String");
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

fn check_coordinate(value: f64, row: usize, col: usize) -> Result<()> {
    if (0.0..1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::CoordinateOutOfRange { row: row + 1, col: col + 1, value })
    }
}

fn parse_header(rest: &str, line: usize) -> Result<(usize, usize)> {
    let mut d = None;
    let mut n = None;
    for tok in rest.split_whitespace() {
        let (key, val) =
            tok.split_once('=').ok_or_else(|| Error::Parse { line, msg: format!("malformed header token {tok:?}") })?;
        let val: usize =
            val.parse().map_err(|_| Error::Parse { line, msg: format!("header value {val:?} is not an integer") })?;
        match key {
            "d" => d = Some(val),
            "n" => n = Some(val),
            _ => return Err(Error::Parse { line, msg: format!("unknown header key {key:?}") }),
        }
    }
    match (d, n) {
        (Some(0), _) => Err(Error::ZeroDimension),
        (Some(d), Some(n)) => Ok((d, n)),
        _ => Err(Error::Parse { line, msg: "header must be `# d=<d> n=<N>`".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_header() {
        let src = "# d=2 n=2\n0.5,0.25\n0,0.75\n";
        let p = PointSet::read_csv(src.as_bytes()).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.len(), 2);
        assert_eq!(p.point(1), &[0.0, 0.75]);
    }

    #[test]
    fn parses_without_header() {
        let p = PointSet::read_csv("0.1\n0.2\n\n0.3\n".as_bytes()).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.axis(0), vec![0.1, 0.2, 0.3]);
    }

    #[test]
    fn rejects_out_of_range() {
        let err = PointSet::read_csv("0.1\n1.0\n".as_bytes()).unwrap_err();
        match err {
            Error::CoordinateOutOfRange { row, col, value } => {
                assert_eq!((row, col), (2, 1));
                assert_eq!(value, 1.0);
            }
            e => panic!("unexpected {e}"),
        }
        assert!(PointSet::read_csv("-0.0001\n".as_bytes()).is_err());
        assert!(PointSet::read_csv("nan\n".as_bytes()).is_err());
    }

    #[test]
    fn rejects_ragged_rows_and_header_mismatch() {
        assert!(matches!(PointSet::read_csv("0.1,0.2\n0.3\n".as_bytes()), Err(Error::Parse { line: 2, .. })));
        assert!(PointSet::read_csv("# d=1 n=3\n0.1\n0.2\n".as_bytes()).is_err());
        assert!(matches!(
            PointSet::read_csv("# d=2 n=1\n0.1\n".as_bytes()),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn empty_set_with_header_is_allowed() {
        let p = PointSet::read_csv("# d=3 n=0\n".as_bytes()).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.dim(), 3);
        assert!(matches!(p.require_nonempty(), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let p = PointSet::from_flat(2, vec![0.1, 1.0 / 3.0, 0.999_999_999_999, 0.0]).unwrap();
        let mut buf = Vec::new();
        p.write_csv(&mut buf).unwrap();
        let q = PointSet::read_csv(buf.as_slice()).unwrap();
        assert_eq!(p, q);
    }
}
