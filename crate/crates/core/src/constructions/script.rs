//! Construction scripts.
//!
//! One `key=value` or operation per line, `#` starts a comment:
//!
//! ```text
//! m=7
//! f=3,1,0              # cyclic code (1 + x + x^3)
//! extend
//! puncture=8           # 1-based positions, comma separated
//! ```
//!
//! A source is one of
//!
//! * `f=` with `m=`: the cyclic code (f) of length m;
//! * `f1=`, `f2=`, `p=` with `m=`: the matrix-product code
//!   `{(u | u p + v) : u in (f1), v in (f2)}` of length 2m;
//! * `input=<path>`: a matrix file, resolved by the caller;
//! * nothing, in which case the caller supplies the starting matrix.
//!
//! Polynomials are comma-separated exponent lists (`0` is the constant
//! term). `cofactor:<list>` stands for `(x^m - 1) / h`. `p` is reduced modulo
//! `x^m - 1` on input. Operations apply in order.

use super::codes::{cofactor, cyclic_code_generator, is_subcode, matrix_product_code};
use super::codes::{extend_code, puncture_code};
use super::polynomial::{BinaryPolynomial, ModulusRing};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Word};

/// A polynomial as written in a script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySpec {
    Exponents(BinaryPolynomial),
    /// `(x^m - 1) / h`.
    Cofactor(BinaryPolynomial),
}

impl PolySpec {
    fn resolve(&self, ring: ModulusRing) -> Result<BinaryPolynomial> {
        match self {
            PolySpec::Exponents(p) => Ok(p.clone()),
            PolySpec::Cofactor(h) => cofactor(h, ring),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Cyclic {
        f: PolySpec,
    },
    MatrixProduct {
        f1: PolySpec,
        f2: PolySpec,
        p: PolySpec,
    },
    Input(String),
    /// Matrix supplied by the caller.
    External,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Extend,
    /// 0-based columns.
    Puncture(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub m: Option<usize>,
    pub source: Source,
    /// Operations with their 1-based line numbers.
    pub ops: Vec<(usize, Op)>,
    source_line: usize,
}

/// Result of running a script.
#[derive(Debug, Clone)]
pub struct Construction<W: Word> {
    pub matrix: BitMatrix<W>,
    /// Non-fatal findings, such as non-nested component codes.
    pub warnings: Vec<String>,
}

fn parse_list(line: usize, v: &str) -> Result<Vec<usize>> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("bad exponent or position {s:?}")))
        })
        .collect()
}

fn parse_poly(line: usize, v: &str) -> Result<PolySpec> {
    match v.trim().strip_prefix("cofactor:") {
        Some(rest) => Ok(PolySpec::Cofactor(BinaryPolynomial::from_exponents(
            &parse_list(line, rest)?,
        ))),
        None => Ok(PolySpec::Exponents(BinaryPolynomial::from_exponents(
            &parse_list(line, v)?,
        ))),
    }
}

impl std::str::FromStr for Script {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut m = None;
        let (mut f, mut f1, mut f2, mut p, mut input) = (None, None, None, None, None);
        let mut source_line = 0;
        let mut ops = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if body == "extend" {
                ops.push((line, Op::Extend));
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(Error::parse(
                    line,
                    format!("expected key=value or an operation, got {body:?}"),
                ));
            };
            let (key, value) = (key.trim(), value.trim());
            let slot = match key {
                "m" => {
                    let v = value
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::parse(line, format!("bad ring length {value:?}")))?;
                    m = Some(v);
                    continue;
                }
                "puncture" => {
                    let pos = parse_list(line, value)?;
                    if pos.is_empty() || pos.contains(&0) {
                        return Err(Error::parse(
                            line,
                            "puncture positions are 1-based and nonempty",
                        ));
                    }
                    ops.push((line, Op::Puncture(pos.iter().map(|p| p - 1).collect())));
                    continue;
                }
                "input" => {
                    input = Some(value.to_string());
                    source_line = source_line.max(line);
                    continue;
                }
                "f" => &mut f,
                "f1" => &mut f1,
                "f2" => &mut f2,
                "p" => &mut p,
                _ => return Err(Error::parse(line, format!("unknown key {key:?}"))),
            };
            if !ops.is_empty() {
                return Err(Error::parse(line, "code definition after an operation"));
            }
            *slot = Some(parse_poly(line, value)?);
            source_line = source_line.max(line);
        }
        let source = match (f, f1, f2, p, input) {
            (None, None, None, None, None) => Source::External,
            (None, None, None, None, Some(path)) => Source::Input(path),
            (Some(f), None, None, None, None) => Source::Cyclic { f },
            (None, Some(f1), Some(f2), Some(p), None) => Source::MatrixProduct { f1, f2, p },
            _ => {
                return Err(Error::parse(
                    source_line.max(1),
                    "a script defines one of: f; f1, f2 and p; input",
                ))
            }
        };
        if matches!(source, Source::Cyclic { .. } | Source::MatrixProduct { .. }) && m.is_none() {
            return Err(Error::parse(source_line, "polynomial codes need m="));
        }
        Ok(Script {
            m,
            source,
            ops,
            source_line,
        })
    }
}

impl Script {
    /// Builds the code. `start` is used when the script names no polynomial
    /// source; `input=` must already have been loaded into it by the caller.
    pub fn run<W: Word>(&self, start: Option<BitMatrix<W>>) -> Result<Construction<W>> {
        let at = |line: usize| {
            move |e: Error| Error::Script {
                line,
                source: Box::new(e),
            }
        };
        let mut warnings = Vec::new();
        let mut g = match &self.source {
            Source::External | Source::Input(_) => start.ok_or_else(|| {
                Error::parse(self.source_line.max(1), "script needs an input matrix")
            })?,
            Source::Cyclic { f } => {
                let ring = ModulusRing::new(self.m.expect("checked on parse"));
                let f = f.resolve(ring).map_err(at(self.source_line))?;
                cyclic_code_generator(&f, ring).map_err(at(self.source_line))?
            }
            Source::MatrixProduct { f1, f2, p } => {
                let ring = ModulusRing::new(self.m.expect("checked on parse"));
                let wrap = at(self.source_line);
                let f1 = f1.resolve(ring).map_err(wrap)?;
                let f2 = f2.resolve(ring).map_err(wrap)?;
                let p_raw = p.resolve(ring).map_err(wrap)?;
                let p = ring.reduce(&p_raw);
                if p != p_raw {
                    warnings.push(format!(
                        "p reduced modulo x^{} - 1 to degree {}",
                        ring.m(),
                        p.degree().map_or(0, |d| d)
                    ));
                }
                let g1: BitMatrix<W> = cyclic_code_generator(&f1, ring).map_err(wrap)?;
                let g2: BitMatrix<W> = cyclic_code_generator(&f2, ring).map_err(wrap)?;
                if !is_subcode(&g2, &g1)? && !is_subcode(&g1, &g2)? {
                    warnings.push("component codes (f1) and (f2) are not nested".to_string());
                }
                matrix_product_code(&g1, &g2, &p, ring).map_err(wrap)?
            }
        };
        for (line, op) in &self.ops {
            g = match op {
                Op::Extend => extend_code(&g),
                Op::Puncture(pos) => puncture_code(&g, pos).map_err(at(*line))?,
            };
        }
        Ok(Construction {
            matrix: g,
            warnings,
        })
    }
}
