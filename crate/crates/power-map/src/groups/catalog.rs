//! Plain-text catalogs of permutation groups.
//!
//! One group per line: `name degree k img_1 … img_k` where each `img_i` is a
//! comma-separated list of `degree` integers giving one generator's images on
//! the points 0..degree (0-based). Lines starting with `#` and blank lines
//! are skipped. ASCII, LF line endings.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::GroupSpec;

/// Largest permutation degree a catalog may declare.
pub const MAX_DEGREE: u64 = 10_000;

#[derive(Debug)]
pub enum CatalogError {
    Io(std::io::Error),
    /// Wrong token shape, count, or range on a line (1-based line numbers).
    Malformed { line: usize, what: String },
    /// A generator image list is not a permutation of 0..degree.
    NotAPermutation { line: usize },
    /// k = 0 generators.
    EmptyGenerators { line: usize },
    DuplicateName { line: usize, name: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "catalog io error: {e}"),
            CatalogError::Malformed { line, what } => {
                write!(f, "catalog line {line}: {what}")
            }
            CatalogError::NotAPermutation { line } => {
                write!(f, "catalog line {line}: generator is not a permutation")
            }
            CatalogError::EmptyGenerators { line } => {
                write!(f, "catalog line {line}: empty generator set")
            }
            CatalogError::DuplicateName { line, name } => {
                write!(f, "catalog line {line}: duplicate group name {name}")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<std::io::Error> for CatalogError {
    fn from(e: std::io::Error) -> CatalogError {
        CatalogError::Io(e)
    }
}

/// Parses a whole catalog; group order stays unknown until realization.
pub fn load_catalog<R: BufRead>(reader: R) -> Result<Vec<(String, GroupSpec)>, CatalogError> {
    let mut entries: Vec<(String, GroupSpec)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = |what: String| CatalogError::Malformed {
            line: lineno,
            what,
        };
        let mut tokens = text.split_whitespace();
        let name = tokens.next().unwrap().to_string();
        let degree: u64 = tokens
            .next()
            .ok_or_else(|| malformed("missing degree".into()))?
            .parse()
            .map_err(|_| malformed("degree is not an integer".into()))?;
        if degree < 1 || degree > MAX_DEGREE {
            return Err(malformed(format!("degree {degree} out of range")));
        }
        let k: usize = tokens
            .next()
            .ok_or_else(|| malformed("missing generator count".into()))?
            .parse()
            .map_err(|_| malformed("generator count is not an integer".into()))?;
        if k == 0 {
            return Err(CatalogError::EmptyGenerators { line: lineno });
        }
        let mut generators = Vec::with_capacity(k);
        for _ in 0..k {
            let img = tokens
                .next()
                .ok_or_else(|| malformed(format!("expected {k} generators")))?;
            let images = img
                .split(',')
                .map(|t| t.parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| malformed("image is not an integer".into()))?;
            if images.len() != degree as usize {
                return Err(malformed(format!(
                    "generator has {} images, degree is {degree}",
                    images.len()
                )));
            }
            let mut seen = vec![false; degree as usize];
            for &v in &images {
                if v >= degree || seen[v as usize] {
                    return Err(CatalogError::NotAPermutation { line: lineno });
                }
                seen[v as usize] = true;
            }
            generators.push(images.iter().map(|&v| v as u16).collect());
        }
        if tokens.next().is_some() {
            return Err(malformed("trailing tokens".into()));
        }
        if entries.iter().any(|(n, _)| *n == name) {
            return Err(CatalogError::DuplicateName { line: lineno, name });
        }
        entries.push((
            name.clone(),
            GroupSpec::Permutation {
                degree: degree as u16,
                generators,
                name,
            },
        ));
    }
    Ok(entries)
}

pub fn load_catalog_file(path: &Path) -> Result<Vec<(String, GroupSpec)>, CatalogError> {
    load_catalog(BufReader::new(File::open(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Vec<(String, GroupSpec)>, CatalogError> {
        load_catalog(s.as_bytes())
    }

    #[test]
    fn parses_quaternion_line() {
        let cat = "# sample\n\nq8 8 2 2,3,1,0,6,7,5,4 4,5,7,6,1,0,2,3\n";
        let entries = parse(cat).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].0, "q8");
        let g = entries[0].1.realize().unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn parses_several_lines_in_order() {
        let cat = "c2 2 1 1,0\nc3 3 1 1,2,0\n# tail comment\n";
        let entries = parse(cat).unwrap();
        let names: Vec<&str> = entries.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["c2", "c3"]);
        assert_eq!(entries[1].1.realize().unwrap().order(), 3);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse("g 3\n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse("g x 1 0\n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse("g 3 1 0,1\n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse("g 3 1 0,1,2 9,9,9\n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse("g 3 0\n"),
            Err(CatalogError::EmptyGenerators { line: 1 })
        ));
        assert!(matches!(
            parse("ok 2 1 1,0\ng 3 1 0,0,1\n"),
            Err(CatalogError::NotAPermutation { line: 2 })
        ));
        assert!(matches!(
            parse("g 3 1 0,1,5\n"),
            Err(CatalogError::NotAPermutation { line: 1 })
        ));
        assert!(matches!(
            parse("g 2 1 1,0\ng 2 1 1,0\n"),
            Err(CatalogError::DuplicateName { line: 2, .. })
        ));
        assert!(matches!(
            parse("g 0 1 \n"),
            Err(CatalogError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn identity_only_group_is_legal() {
        let entries = parse("triv 1 1 0\n").unwrap();
        assert_eq!(entries[0].1.realize().unwrap().order(), 1);
    }
}
