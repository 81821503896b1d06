//! Problem files: TOML with `n`, `mode`, polynomial lists and an optional
//! `[scan]` table.

use std::fmt;
use std::path::Path;

use ndcert_core::poly::{parse_polynomial, parse_rational_polynomial, PolyError, QPoly, TPoly};
use serde::Deserialize;
use toml::Spanned;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Single,
    Product,
    Family,
    Pair,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Single => "single",
            Mode::Product => "product",
            Mode::Family => "family",
            Mode::Pair => "pair",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSection {
    pub eps1: Option<f64>,
    pub eps2: Option<f64>,
    pub eta: Option<f64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    n: Spanned<i64>,
    mode: Mode,
    polynomials: Option<Vec<Spanned<String>>>,
    f: Option<Vec<Spanned<String>>>,
    g: Option<Vec<Spanned<String>>>,
    scan: Option<ScanSection>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Members {
    Rational(Vec<QPoly>),
    Family(Vec<TPoly>),
    Pair(Vec<QPoly>, Vec<QPoly>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub n: usize,
    pub mode: Mode,
    pub members: Members,
    pub scan: ScanSection,
}

/// An input error located at `file:line:col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub file: String,
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.file, self.line, self.col, self.msg)
    }
}

impl std::error::Error for InputError {}

struct Source<'a> {
    file: String,
    text: &'a str,
}

impl Source<'_> {
    fn error_at(&self, offset: usize, msg: impl Into<String>) -> InputError {
        let offset = offset.min(self.text.len());
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        InputError {
            file: self.file.clone(),
            line,
            col: before[line_start..].chars().count() + 1,
            msg: msg.into(),
        }
    }

    fn poly_error(&self, item: &Spanned<String>, e: &PolyError) -> InputError {
        // Skip the opening quote of the TOML string.
        let start = item.span().start + 1;
        let inner = match e {
            PolyError::Syntax { pos, .. }
            | PolyError::VariableOutOfRange { pos, .. }
            | PolyError::ExponentCap { pos } => *pos,
            _ => 0,
        };
        self.error_at(start + inner, e.to_string())
    }

    fn rational_list(&self, items: &[Spanned<String>], n: usize) -> Result<Vec<QPoly>, InputError> {
        items
            .iter()
            .map(|it| parse_rational_polynomial(it.get_ref(), n).map_err(|e| self.poly_error(it, &e)))
            .collect()
    }

    fn family_list(&self, items: &[Spanned<String>], n: usize) -> Result<Vec<TPoly>, InputError> {
        items
            .iter()
            .map(|it| {
                parse_polynomial(it.get_ref(), n)
                    .map(|p| p.into_parametric())
                    .map_err(|e| self.poly_error(it, &e))
            })
            .collect()
    }
}

pub fn parse_problem(file: &str, text: &str) -> Result<Problem, InputError> {
    let src = Source {
        file: file.to_string(),
        text,
    };
    let raw: RawProblem = toml::from_str(text).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        src.error_at(offset, e.message().to_string())
    })?;
    let n = *raw.n.get_ref();
    if !(1..=ndcert_core::poly::AMBIENT_CAP as i64).contains(&n) {
        return Err(src.error_at(
            raw.n.span().start,
            format!("n must lie in 1..={}", ndcert_core::poly::AMBIENT_CAP),
        ));
    }
    let n = n as usize;
    let nonempty = |key: &str, list: Option<Vec<Spanned<String>>>| -> Result<Vec<Spanned<String>>, InputError> {
        match list {
            Some(l) if !l.is_empty() => Ok(l),
            _ => Err(src.error_at(0, format!("mode requires a nonempty `{key}` list"))),
        }
    };
    let unexpected = |key: &str, present: bool| -> Result<(), InputError> {
        if present {
            Err(src.error_at(0, format!("key `{key}` is not used in mode {}", raw.mode)))
        } else {
            Ok(())
        }
    };
    let members = match raw.mode {
        Mode::Single | Mode::Product | Mode::Family => {
            unexpected("f", raw.f.is_some())?;
            unexpected("g", raw.g.is_some())?;
            let items = nonempty("polynomials", raw.polynomials)?;
            if raw.mode == Mode::Single && items.len() != 1 {
                return Err(src.error_at(items[1].span().start, "mode single takes exactly one polynomial"));
            }
            if raw.mode == Mode::Family {
                Members::Family(src.family_list(&items, n)?)
            } else {
                Members::Rational(src.rational_list(&items, n)?)
            }
        }
        Mode::Pair => {
            unexpected("polynomials", raw.polynomials.is_some())?;
            let f = nonempty("f", raw.f)?;
            let g = nonempty("g", raw.g)?;
            if f.len() != g.len() {
                return Err(src.error_at(
                    g[0].span().start,
                    format!("lists f and g differ in length ({} and {})", f.len(), g.len()),
                ));
            }
            Members::Pair(src.rational_list(&f, n)?, src.rational_list(&g, n)?)
        }
    };
    Ok(Problem {
        n,
        mode: raw.mode,
        members,
        scan: raw.scan.unwrap_or_default(),
    })
}

pub fn load_problem(path: &Path) -> Result<Problem, InputError> {
    let file = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError {
        file: file.clone(),
        line: 0,
        col: 0,
        msg: e.to_string(),
    })?;
    parse_problem(&file, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_file() {
        let p = parse_problem("p.toml", "n = 2\nmode = \"pair\"\nf = [\"z1^2\"]\ng = [\"2*z1^2\"]\n").unwrap();
        assert_eq!(p.mode, Mode::Pair);
        assert!(matches!(p.members, Members::Pair(ref f, ref g) if f.len() == 1 && g.len() == 1));
    }

    #[test]
    fn polynomial_error_is_located() {
        let e = parse_problem("p.toml", "n = 2\nmode = \"single\"\npolynomials = [\"z1 + * z2\"]\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 22));
        assert!(e.to_string().starts_with("p.toml:3:22: syntax error"));
    }

    #[test]
    fn parameter_outside_family_is_rejected() {
        let e = parse_problem("p.toml", "n = 1\nmode = \"product\"\npolynomials = [\"t*z1\"]\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn unknown_key_is_rejected() {
        let e = parse_problem("p.toml", "n = 1\nmode = \"product\"\npolys = [\"z1\"]\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn pair_lengths_must_match() {
        assert!(parse_problem(
            "p.toml",
            "n = 1\nmode = \"pair\"\nf = [\"z1\"]\ng = [\"z1\", \"z1^2\"]\n"
        )
        .is_err());
    }
}
