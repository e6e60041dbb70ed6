//! Text formats for graphs, grid functions, polynomials, polytopes and
//! point clouds, plus the fixed-width numeric formatter shared with the
//! CLI.
//!
//! Numbers are printed with 12 significant digits. The bottom element
//! serializes as the token of the numeric infinity it stands for: `-inf`
//! under max-plus, `inf` under min-plus (and the other token is the top
//! element). Parsers accept comma or whitespace separation and skip
//! `#`-comment lines; where a format carries its own header comment, the
//! last comment line before the data is the header.

use num_complex::Complex64;
use thiserror::Error;

use crate::dequant::GeneralizedPolynomial;
use crate::fractal::PointCloud;
use crate::graph::WeightedDigraph;
use crate::grid::{GridFunction, GridGeom};
use crate::polytope::Polytope;
use crate::semiring::{ExtendedScalar, SemiringSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("FormatError: {0}")]
    Format(String),
}

/// `%.12g`-style rendering with 12 significant digits.
pub fn format_num(x: f64) -> String {
    format_significant(x, 12)
}

pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let formatted = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exponent) = formatted.split_once('e').expect("exp format always has e");
    let exp: i32 = exponent.parse().expect("exp format exponent parses");
    let neg = mantissa.starts_with('-');
    let digits_only: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits_trimmed = digits_only.trim_end_matches('0');
    let digits_trimmed = if digits_trimmed.is_empty() { "0" } else { digits_trimmed };
    let sign = if neg { "-" } else { "" };
    let body = if exp >= 0 && (exp as usize) < digits.max(1) + 3 {
        let e = exp as usize;
        if digits_trimmed.len() > e + 1 {
            format!("{}.{}", &digits_trimmed[..=e], &digits_trimmed[e + 1..])
        } else {
            format!("{}{}", digits_trimmed, "0".repeat(e + 1 - digits_trimmed.len()))
        }
    } else if exp < 0 && exp >= -4 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits_trimmed)
    } else {
        let head = &digits_trimmed[..1];
        let tail = &digits_trimmed[1..];
        if tail.is_empty() {
            format!("{head}e{exp}")
        } else {
            format!("{head}.{tail}e{exp}")
        }
    };
    format!("{sign}{body}")
}

/// Token for a semiring scalar under a spec: finite values print as
/// numbers, ⊥/⊤ as the infinity they denote.
pub fn scalar_token(v: ExtendedScalar, spec: SemiringSpec) -> String {
    let minplus = matches!(spec, SemiringSpec::MinPlus);
    match v {
        ExtendedScalar::Finite(x) => format_num(x),
        ExtendedScalar::Bottom => if minplus { "inf" } else { "-inf" }.into(),
        ExtendedScalar::Top => if minplus { "-inf" } else { "inf" }.into(),
    }
}

pub fn parse_scalar_token(tok: &str, spec: SemiringSpec) -> Result<ExtendedScalar, IoError> {
    let minplus = matches!(spec, SemiringSpec::MinPlus);
    match tok {
        "inf" | "+inf" => Ok(if minplus { ExtendedScalar::Bottom } else { ExtendedScalar::Top }),
        "-inf" => Ok(if minplus { ExtendedScalar::Top } else { ExtendedScalar::Bottom }),
        _ => {
            let v: f64 = tok.parse().map_err(|_| IoError::Parse(format!("bad number {tok:?}")))?;
            if !v.is_finite() {
                return Err(IoError::Parse(format!("non-finite literal {tok:?}")));
            }
            Ok(ExtendedScalar::Finite(v))
        }
    }
}

fn tokens(line: &str) -> Vec<&str> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect()
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_f64(tok: &str, line: usize) -> Result<f64, IoError> {
    let v: f64 = tok.parse().map_err(|_| IoError::Parse(format!("line {line}: bad number {tok:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(IoError::Parse(format!("line {line}: non-finite number {tok:?}")))
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, IoError> {
    tok.parse().map_err(|_| IoError::Parse(format!("line {line}: bad count {tok:?}")))
}

// ---------------------------------------------------------------------
// graph: `n m` then `u v w` per edge
// ---------------------------------------------------------------------

pub fn parse_graph(text: &str) -> Result<WeightedDigraph, IoError> {
    let mut lines = data_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| IoError::Parse("empty graph file".into()))?;
    let head = tokens(header);
    if head.len() != 2 {
        return Err(IoError::Parse(format!("line {ln}: expected `n m`, got {header:?}")));
    }
    let n = parse_usize(head[0], ln)?;
    let m = parse_usize(head[1], ln)?;
    let mut g = WeightedDigraph::new(n);
    let mut count = 0;
    for (ln, line) in lines {
        let t = tokens(line);
        if t.len() != 3 {
            return Err(IoError::Parse(format!("line {ln}: expected `u v w`, got {line:?}")));
        }
        g.add_edge(parse_usize(t[0], ln)?, parse_usize(t[1], ln)?, parse_f64(t[2], ln)?)
            .map_err(|e| IoError::Parse(format!("line {ln}: {e}")))?;
        count += 1;
    }
    if count != m {
        return Err(IoError::Parse(format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_graph(g: &WeightedDigraph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edges().len());
    for &(u, v, w) in g.edges() {
        out.push_str(&format!("{u} {v} {}\n", format_num(w)));
    }
    out
}

// ---------------------------------------------------------------------
// grid: header `# dim step.. origin.. extent..`, one value per line
// ---------------------------------------------------------------------

pub fn parse_grid(text: &str, spec: SemiringSpec) -> Result<GridFunction, IoError> {
    let header = text
        .lines()
        .map(str::trim)
        .take_while(|l| l.is_empty() || l.starts_with('#'))
        .filter(|l| l.starts_with('#'))
        .last()
        .ok_or_else(|| IoError::Parse("missing grid header line".into()))?;
    let t = tokens(header.trim_start_matches('#'));
    if t.is_empty() {
        return Err(IoError::Parse("empty grid header".into()));
    }
    let dim = parse_usize(t[0], 1)?;
    if t.len() != 1 + 3 * dim {
        return Err(IoError::Parse(format!(
            "grid header needs dim + {dim} steps + {dim} origins + {dim} extents, got {header:?}"
        )));
    }
    let step: Vec<f64> = t[1..1 + dim].iter().map(|s| parse_f64(s, 1)).collect::<Result<_, _>>()?;
    let origin: Vec<f64> = t[1 + dim..1 + 2 * dim].iter().map(|s| parse_f64(s, 1)).collect::<Result<_, _>>()?;
    let extents: Vec<usize> =
        t[1 + 2 * dim..].iter().map(|s| parse_usize(s, 1)).collect::<Result<_, _>>()?;
    let geom = GridGeom::new(origin, step, extents).map_err(|e| IoError::Parse(e.to_string()))?;
    let mut values = Vec::with_capacity(geom.len());
    for (ln, line) in data_lines(text) {
        for tok in tokens(line) {
            values.push(parse_scalar_token(tok, spec).map_err(|e| IoError::Parse(format!("line {ln}: {e}")))?);
        }
    }
    GridFunction::new(geom, spec, values).map_err(|e| IoError::Parse(e.to_string()))
}

pub fn write_grid(f: &GridFunction) -> String {
    let g = f.geom();
    let join = |v: Vec<String>| v.join(" ");
    let mut out = format!(
        "# {} {} {} {}\n",
        g.dim(),
        join(g.step.iter().map(|&s| format_num(s)).collect()),
        join(g.origin.iter().map(|&o| format_num(o)).collect()),
        join(g.extents.iter().map(|&e| e.to_string()).collect()),
    );
    for &v in f.values() {
        out.push_str(&scalar_token(v, f.spec()));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------
// polynomial: one term per line `re(a) im(a) d1 [d2 [d3]]`
// ---------------------------------------------------------------------

pub fn parse_polynomial(text: &str) -> Result<GeneralizedPolynomial, IoError> {
    let mut terms: Vec<(Complex64, Vec<f64>)> = Vec::new();
    let mut vars: Option<usize> = None;
    for (ln, line) in data_lines(text) {
        let t = tokens(line);
        if t.len() < 3 || t.len() > 5 {
            return Err(IoError::Parse(format!(
                "line {ln}: expected `re im d1 [d2 [d3]]`, got {line:?}"
            )));
        }
        let n_here = t.len() - 2;
        if *vars.get_or_insert(n_here) != n_here {
            return Err(IoError::Parse(format!("line {ln}: inconsistent variable count")));
        }
        let re = parse_f64(t[0], ln)?;
        let im = parse_f64(t[1], ln)?;
        let d: Vec<f64> = t[2..].iter().map(|s| parse_f64(s, ln)).collect::<Result<_, _>>()?;
        terms.push((Complex64::new(re, im), d));
    }
    let n = vars.ok_or_else(|| IoError::Parse("empty polynomial file".into()))?;
    GeneralizedPolynomial::new(n, terms).map_err(|e| IoError::Parse(e.to_string()))
}

pub fn write_polynomial(f: &GeneralizedPolynomial) -> String {
    let mut out = String::new();
    for (a, d) in f.terms() {
        let exps: Vec<String> = d.iter().map(|&x| format_num(x)).collect();
        out.push_str(&format!("{} {} {}\n", format_num(a.re), format_num(a.im), exps.join(" ")));
    }
    out
}

// ---------------------------------------------------------------------
// polytope: one vertex per line
// ---------------------------------------------------------------------

pub fn parse_polytope(text: &str) -> Result<Polytope, IoError> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    for (ln, line) in data_lines(text) {
        let t = tokens(line);
        if t.is_empty() {
            continue;
        }
        if *dim.get_or_insert(t.len()) != t.len() {
            return Err(IoError::Parse(format!("line {ln}: inconsistent vertex arity")));
        }
        points.push(t.iter().map(|s| parse_f64(s, ln)).collect::<Result<_, _>>()?);
    }
    let dim = dim.ok_or_else(|| IoError::Parse("empty polytope file".into()))?;
    Polytope::from_points(dim, points).map_err(|e| IoError::Parse(e.to_string()))
}

pub fn write_polytope(p: &Polytope) -> String {
    let mut out = String::new();
    for v in p.vertices() {
        let coords: Vec<String> = v.iter().map(|&x| format_num(x)).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------
// point cloud: one point per line
// ---------------------------------------------------------------------

pub fn parse_point_cloud(text: &str) -> Result<PointCloud, IoError> {
    let mut coords: Vec<f64> = Vec::new();
    let mut dim: Option<usize> = None;
    for (ln, line) in data_lines(text) {
        let t = tokens(line);
        if *dim.get_or_insert(t.len()) != t.len() {
            return Err(IoError::Parse(format!("line {ln}: inconsistent point arity")));
        }
        for tok in t {
            coords.push(parse_f64(tok, ln)?);
        }
    }
    let dim = dim.ok_or_else(|| IoError::Parse("empty point cloud".into()))?;
    PointCloud::new(dim, coords).map_err(|e| IoError::Parse(e.to_string()))
}

pub fn write_points(points: &[[f64; 2]]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format!("{},{}\n", format_num(p[0]), format_num(p[1])));
    }
    out
}
