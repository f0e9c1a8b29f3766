//! Plain-text input formats.
//!
//! A sequence file holds whitespace-separated signed decimal integers. A
//! matrix file starts with a `w h` line followed by `h` lines of `w`
//! integers each.

use std::fmt::Write as _;

use oppm::Matrix;

use crate::{CliError, Result};

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| parse_error(line_no, format!("not an integer: `{tok}`")))
        })
        .collect()
}

pub fn parse_sequence(src: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for (k, line) in src.lines().enumerate() {
        out.extend(parse_ints(k + 1, line)?);
    }
    Ok(out)
}

pub fn parse_matrix(src: &str) -> Result<Matrix> {
    // blank lines are ignored but still counted for error reporting
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `w h` header"))?;
    let dims = parse_ints(line_no, header)?;
    let [w, h] = dims[..] else {
        return Err(parse_error(line_no, "header must be `w h`"));
    };
    if w < 0 || h < 0 {
        return Err(parse_error(line_no, "negative dimensions"));
    }
    let (w, h) = (w as usize, h as usize);
    let mut cells = Vec::with_capacity(w * h);
    let mut rows = 0;
    for (line_no, line) in lines {
        if rows == h {
            return Err(parse_error(line_no, format!("more than {h} rows")));
        }
        let row = parse_ints(line_no, line)?;
        if row.len() != w {
            return Err(parse_error(
                line_no,
                format!("expected {w} values, found {}", row.len()),
            ));
        }
        cells.extend(row);
        rows += 1;
    }
    if rows != h {
        let last = src.lines().count().max(1);
        return Err(parse_error(
            last,
            format!("expected {h} rows, found {rows}"),
        ));
    }
    Ok(Matrix::new(w, h, cells)?)
}

pub fn format_sequence(s: &[i64]) -> String {
    let mut out = String::with_capacity(s.len() * 4);
    for (k, v) in s.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
    out
}

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.width(), m.height());
    for y in 0..m.height() {
        out.push_str(&format_sequence(m.row(y)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(
            parse_sequence("10 50\n 30\t-60 40\n").unwrap(),
            vec![10, 50, 30, -60, 40]
        );
        assert_eq!(parse_sequence("").unwrap(), Vec::<i64>::new());
        match parse_sequence("1 2\n3 x\n") {
            Err(CliError::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert_eq!(format_sequence(&[1, -2, 3]), "1 -2 3\n");
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("2 2\n1 2\n4 3\n").unwrap();
        assert_eq!(m.cells(), &[1, 2, 4, 3]);
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn matrix_errors_carry_lines() {
        let line = |src: &str| match parse_matrix(src) {
            Err(CliError::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("2\n"), 1);
        assert_eq!(line("2 2\n1 2\n3\n"), 3);
        assert_eq!(line("2 1\n1 2\n3 4\n"), 3);
        assert_eq!(line("2 3\n1 2\n3 4\n"), 3);
    }
}
