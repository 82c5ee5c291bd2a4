//! On-disk formats: algebra tables, derivation records and problem files.
//!
//! An algebra file holds one or more algebras, each written as
//!
//! ```text
//! size 3
//! 0 1 2
//! 1 2 2
//! 2 2 2
//! 0 1 2
//! 0 0 1
//! 0 0 0
//! ```
//!
//! the `+` rows followed by the `->` rows, here the three-element
//! Łukasiewicz chain. Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::{Path, PathBuf};

use hoopkit_core::horn::{parse_problem, HornError, HornProblem};
use hoopkit_core::{Derivation, FiniteAlgebra};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Algebra { line: usize, message: String },
    #[error("derivation record: {0}")]
    Json(#[from] serde_json::Error),
    #[error("problem file: {0}")]
    Problem(#[from] HornError),
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), FileError> {
    fs::write(path, text).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses every algebra in `text`, in order. Table shape is checked here;
/// the pocrim laws are not.
pub fn parse_algebras(text: &str) -> Result<Vec<FiniteAlgebra>, FileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((line, header)) = lines.next() {
        let bad = |message: String| FileError::Algebra { line, message };
        let n: usize = header
            .strip_prefix("size")
            .map(str::trim)
            .ok_or_else(|| bad(format!("expected `size n`, found `{header}`")))?
            .parse()
            .map_err(|_| bad(format!("bad size in `{header}`")))?;
        let mut cells = Vec::with_capacity(2 * n * n);
        for row in 0..2 * n {
            let (line, text) = lines.next().ok_or(FileError::Algebra {
                line,
                message: format!("expected {} table rows, found {row}", 2 * n),
            })?;
            let before = cells.len();
            for tok in text.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| FileError::Algebra {
                    line,
                    message: format!("`{tok}` is not an element index"),
                })?;
                cells.push(v);
            }
            if cells.len() - before != n {
                return Err(FileError::Algebra {
                    line,
                    message: format!("row has {} entries, expected {n}", cells.len() - before),
                });
            }
        }
        let (add, imp) = cells.split_at(n * n);
        out.push(FiniteAlgebra::from_tables(n, add, imp).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

/// Parses a file holding exactly one algebra.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, FileError> {
    let mut algs = parse_algebras(text)?;
    match algs.len() {
        1 => Ok(algs.remove(0)),
        k => Err(FileError::Algebra {
            line: 1,
            message: format!("expected one algebra, found {k}"),
        }),
    }
}

pub fn read_algebra(path: &Path) -> Result<FiniteAlgebra, FileError> {
    parse_algebra(&read(path)?)
}

pub fn read_algebras(path: &Path) -> Result<Vec<FiniteAlgebra>, FileError> {
    parse_algebras(&read(path)?)
}

/// Writes algebras separated by blank lines.
pub fn format_algebras(algs: &[FiniteAlgebra]) -> String {
    algs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn write_algebras(path: &Path, algs: &[FiniteAlgebra]) -> Result<(), FileError> {
    write(path, &format_algebras(algs))
}

pub fn parse_derivation(text: &str) -> Result<Derivation, FileError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_derivation(path: &Path) -> Result<Derivation, FileError> {
    parse_derivation(&read(path)?)
}

pub fn write_derivation(path: &Path, d: &Derivation) -> Result<(), FileError> {
    let mut text = serde_json::to_string_pretty(d)?;
    text.push('\n');
    write(path, &text)
}

pub fn read_problem(path: &Path) -> Result<HornProblem, FileError> {
    Ok(parse_problem(&read(path)?)?)
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FileError> {
    write(path, text)
}

pub fn create_dir(path: &Path) -> Result<(), FileError> {
    fs::create_dir_all(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_text_round_trip() {
        let algs = vec![
            FiniteAlgebra::lukasiewicz(3),
            FiniteAlgebra::drastic_chain(4),
            FiniteAlgebra::trivial(),
        ];
        let text = format_algebras(&algs);
        assert_eq!(parse_algebras(&text).unwrap(), algs);
        assert_eq!(parse_algebra(&algs[1].to_string()).unwrap(), algs[1]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# the two-element chain\n\nsize 2\n0 1\n1 1\n\n0 1\n0 0\n";
        assert_eq!(parse_algebra(text).unwrap(), FiniteAlgebra::boolean());
    }

    #[test]
    fn malformed_tables() {
        let err = |t: &str| parse_algebras(t).unwrap_err().to_string();
        assert!(err("size x\n").contains("bad size"));
        assert!(err("size 2\n0 1\n1 1\n0 0\n").contains("expected 4 table rows"));
        assert!(err("size 2\n0 1 1\n1 1\n0 0\n1 0\n").contains("row has 3"));
        assert!(err("size 2\n0 1\n1 5\n0 0\n1 0\n").contains("outside"));
        assert!(err("0 1\n").contains("expected `size n`"));
        assert!(parse_algebra("").is_err());
    }
}
