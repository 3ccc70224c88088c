//! Plain-text solution files.
//!
//! Lines starting with `#` and blank lines are ignored. The first remaining
//! line holds `n`; each of the next `n` lines lists the images
//! `σ_x(1) … σ_x(n)` with points numbered from 1.

use super::Solution;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Parses a table of left actions. Axioms are not checked here; see
/// [`super::validate_table`].
pub fn parse_table(text: &str) -> Result<Vec<Permutation>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, first) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing size line".into() })?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a size, found {first:?}") })?;
    if n == 0 {
        return Err(Error::Parse { line, msg: "size must be positive".into() });
    }

    let mut sigma = Vec::with_capacity(n);
    let mut last_line = line;
    for x in 0..n {
        let (line, row) = lines
            .next()
            .ok_or(Error::Parse { line: last_line, msg: format!("expected {n} rows, found {x}") })?;
        last_line = line;
        let images = row
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::Parse { line, msg: format!("entry {tok:?} is not a point in 1..={n}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::Parse { line, msg: format!("row has {} entries, expected {n}", images.len()) });
        }
        let p = Permutation::from_images(images)
            .map_err(|_| Error::Parse { line, msg: format!("row {} is not a permutation", x + 1) })?;
        sigma.push(p);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "unexpected data after the last row".into() });
    }
    Ok(sigma)
}

/// Parses and validates a solution.
pub fn parse(text: &str) -> Result<Solution> {
    Solution::new(parse_table(text)?)
}

pub fn write(s: &Solution) -> String {
    let mut out = format!("{}\n", s.size());
    for p in s.sigmas() {
        let row: Vec<String> = p.images().iter().map(|&y| (y + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_round_trip() {
        let text = "# flip\n2\n2 1\n\n2 1\n";
        let s = parse(text).unwrap();
        assert_eq!(write(&s), "2\n2 1\n2 1\n");
        assert_eq!(parse(&write(&s)).unwrap(), s);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 0),
            ("x\n", 1),
            ("2\n2 1\n", 2),
            ("2\n1 2\n1 1\n", 3),
            ("2\n1 3\n1 2\n", 2),
            ("2\n1\n1 2\n", 2),
            ("2\n1 2\n1 2\n9\n", 4),
        ];
        for (text, expected) in cases {
            match parse_table(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn invalid_solution_parses_as_table() {
        let text = "2\n1 2\n2 1\n";
        assert!(parse_table(text).is_ok());
        assert!(matches!(parse(text), Err(Error::InvalidSolution(_))));
    }
}
