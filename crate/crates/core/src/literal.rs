//! Text literals shared by the CLI and file formats.
//!
//! Grammar: type literal `[A-G][0-9]+` (e.g. "B3"); root literal =
//! comma-separated simple-root coefficients ("1,1,0"); subset literal =
//! semicolon-joined root literals ("1,0;-1,0"); weight literal = root
//! syntax with a `w:` prefix ("w:1,0,2").

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType, Root, Weight};

pub fn parse_lie_type(s: &str) -> Result<LieType> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse("empty type literal".into()))?;
    let family = Family::from_letter(letter)?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in type literal '{s}'")))?;
    LieType::new(family, rank)
}

pub fn format_lie_type(t: LieType) -> String {
    format!("{}{}", t.family().letter(), t.rank())
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer '{}'", tok.trim())))
        })
        .collect()
}

pub fn parse_root(s: &str) -> Result<Root> {
    Ok(Root::new(parse_int_list(s)?))
}

pub fn format_root(r: &Root) -> String {
    join_ints(r.coeffs())
}

/// Parses "1,0;-1,0" into a list of roots; an empty string is the empty set.
pub fn parse_subset(s: &str) -> Result<Vec<Root>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_root).collect()
}

pub fn format_subset(roots: &[&Root]) -> String {
    let parts: Vec<String> = roots.iter().map(|r| format_root(r)).collect();
    parts.join(";")
}

pub fn parse_weight(s: &str) -> Result<Weight> {
    let body = s
        .trim()
        .strip_prefix("w:")
        .ok_or_else(|| Error::Parse(format!("weight literal must start with 'w:': '{s}'")))?;
    Ok(Weight::new(parse_int_list(body)?))
}

pub fn format_weight(w: &Weight) -> String {
    format!("w:{}", join_ints(w.coords()))
}

fn join_ints(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_literals() {
        let t = parse_lie_type("B3").unwrap();
        assert_eq!(format_lie_type(t), "B3");
        assert!(parse_lie_type("H3").is_err());
        assert!(parse_lie_type("B").is_err());
        assert!(parse_lie_type("B0").is_err());
    }

    #[test]
    fn root_and_subset_literals() {
        let r = parse_root("1,1,0").unwrap();
        assert_eq!(r.coeffs(), &[1, 1, 0]);
        let s = parse_subset("1,0;-1,0").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[1].coeffs(), &[-1, 0]);
        assert!(parse_subset("").unwrap().is_empty());
        assert!(parse_subset("1,x").is_err());
    }

    #[test]
    fn weight_literals() {
        let w = parse_weight("w:1,0,2").unwrap();
        assert_eq!(w.coords(), &[1, 0, 2]);
        assert_eq!(format_weight(&w), "w:1,0,2");
        assert!(parse_weight("1,0,2").is_err());
    }
}
