//! Parsing of invertible polynomials and `.poly` spec files.
//!
//! Grammar (line-oriented file):
//! ```text
//! vars: x y z
//! f: x^2*y + y^2*z + z^3
//! subgroup: (1/2,0,1/2) (0,1/3,2/3)
//! ```
//! or the matrix form `E: [[2,1,0],[0,2,1],[0,0,3]]` in place of `f:`.
//! Blank lines and lines starting with `#` are ignored. Error positions are
//! byte offsets into the input.

use crate::abelian::{GroupElement, IntMat};
use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial `Σ_i a_i ∏_j x_j^{E_ij}` with as many monomials as
/// variables and `det E ≠ 0`. The coefficients are recorded but inert: none
/// of the symmetry or duality computations depend on them.
#[derive(Clone, PartialEq, Eq)]
pub struct InvertiblePolynomial {
    var_names: Vec<String>,
    coefficients: Vec<Ratio<i64>>,
    e: IntMat,
}

impl InvertiblePolynomial {
    pub fn new(
        var_names: Vec<String>,
        coefficients: Vec<Ratio<i64>>,
        e: IntMat,
    ) -> Result<InvertiblePolynomial> {
        if e.rows() != e.cols() || e.rows() != var_names.len() {
            return Err(Error::NotSquare {
                monomials: e.rows(),
                vars: var_names.len(),
            });
        }
        assert_eq!(coefficients.len(), var_names.len());
        assert!(coefficients.iter().all(|c| !c.is_zero()));
        for i in 0..e.rows() {
            for j in 0..e.cols() {
                assert!(e[(i, j)] >= 0, "exponents must be nonnegative");
            }
        }
        if e.det() == 0 {
            return Err(Error::Degenerate);
        }
        Ok(InvertiblePolynomial {
            var_names,
            coefficients,
            e,
        })
    }

    pub fn from_matrix(e: IntMat) -> Result<InvertiblePolynomial> {
        let n = e.rows();
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        InvertiblePolynomial::new(names, vec![Ratio::one(); n], e)
    }

    pub fn n(&self) -> usize {
        self.e.rows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.e
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn coefficients(&self) -> &[Ratio<i64>] {
        &self.coefficients
    }

    /// The Berglund–Hübsch transpose: same coefficients, matrix `E^T`.
    pub fn transpose(&self) -> InvertiblePolynomial {
        InvertiblePolynomial {
            var_names: self.var_names.clone(),
            coefficients: self.coefficients.clone(),
            e: self.e.transpose(),
        }
    }
}

impl fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut lead = true;
            if !self.coefficients[i].is_one() {
                write!(f, "{}", self.coefficients[i])?;
                lead = false;
            }
            for j in 0..self.n() {
                match self.e[(i, j)] {
                    0 => continue,
                    exp => {
                        if !lead {
                            write!(f, "*")?;
                        }
                        lead = false;
                        write!(f, "{}", self.var_names[j])?;
                        if exp != 1 {
                            write!(f, "^{exp}")?;
                        }
                    }
                }
            }
            if lead {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for InvertiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Split `text` on `sep`, reporting each piece with its byte offset.
fn split_with_pos(text: &str, base: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        if ch == sep {
            out.push((base + start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((base + start, &text[start..]));
    out
}

fn trim_with_pos(piece: (usize, &str)) -> (usize, &str) {
    let (pos, s) = piece;
    let trimmed_start = s.len() - s.trim_start().len();
    (pos + trimmed_start, s.trim())
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ratio(s: &str, pos: usize) -> Result<Ratio<i64>> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| Error::parse(pos, format!("expected a rational, found {s:?}")))?;
    let den: i64 = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(pos, format!("expected a rational, found {s:?}")))?,
        None => 1,
    };
    if den == 0 {
        return Err(Error::parse(pos, "zero denominator"));
    }
    Ok(Ratio::new(num, den))
}

/// One parsed monomial: coefficient and exponent per variable name.
struct Monomial {
    pos: usize,
    coeff: Ratio<i64>,
    exps: Vec<(String, i128)>,
}

fn parse_monomial(piece: (usize, &str)) -> Result<Monomial> {
    let (pos, text) = trim_with_pos(piece);
    if text.is_empty() {
        return Err(Error::parse(pos, "empty monomial"));
    }
    let mut coeff = Ratio::one();
    let mut exps: Vec<(String, i128)> = Vec::new();
    for (first, factor) in split_with_pos(text, pos, '*').into_iter().enumerate().map(|(i, p)| (i == 0, p)) {
        let (fpos, factor) = trim_with_pos(factor);
        if factor.is_empty() {
            return Err(Error::parse(fpos, "empty factor"));
        }
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => {
                let exp: i128 = e.trim().parse().map_err(|_| {
                    Error::parse(fpos + v.len() + 1, format!("bad exponent {:?}", e.trim()))
                })?;
                (v.trim_end(), exp)
            }
            None => (factor, 1),
        };
        if is_ident(var) {
            if exp < 0 {
                return Err(Error::parse(fpos, "negative exponent"));
            }
            match exps.iter_mut().find(|(name, _)| name == var) {
                Some((_, e)) => *e += exp,
                None => exps.push((var.to_string(), exp)),
            }
        } else if first && !factor.contains('^') {
            let c = parse_ratio(factor, fpos)?;
            if c.is_zero() {
                return Err(Error::parse(fpos, "zero coefficient"));
            }
            coeff *= c;
        } else {
            return Err(Error::parse(fpos, format!("bad factor {factor:?}")));
        }
    }
    Ok(Monomial { pos, coeff, exps })
}

fn assemble(monomials: Vec<Monomial>, vars: Vec<String>) -> Result<InvertiblePolynomial> {
    if monomials.len() != vars.len() {
        return Err(Error::NotSquare {
            monomials: monomials.len(),
            vars: vars.len(),
        });
    }
    let mut rows = Vec::new();
    let mut coefficients = Vec::new();
    for m in monomials {
        let mut row = vec![0i128; vars.len()];
        for (name, exp) in m.exps {
            let j = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::parse(m.pos, format!("unknown variable {name:?}")))?;
            row[j] = exp;
        }
        rows.push(row);
        coefficients.push(m.coeff);
    }
    InvertiblePolynomial::new(vars, coefficients, IntMat::from_rows(rows))
}

/// Parse a polynomial expression with a declared variable list.
pub fn parse_polynomial_with_vars(text: &str, vars: &[String]) -> Result<InvertiblePolynomial> {
    parse_expr(text, 0, Some(vars))
}

/// Parse a polynomial expression, inferring variables in order of first
/// appearance.
pub fn parse_polynomial(text: &str) -> Result<InvertiblePolynomial> {
    parse_expr(text, 0, None)
}

fn parse_expr(text: &str, base: usize, vars: Option<&[String]>) -> Result<InvertiblePolynomial> {
    let monomials: Vec<Monomial> = split_with_pos(text, base, '+')
        .into_iter()
        .map(parse_monomial)
        .collect::<Result<_>>()?;
    let vars: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut seen = Vec::new();
            for m in &monomials {
                for (name, _) in &m.exps {
                    if !seen.contains(name) {
                        seen.push(name.clone());
                    }
                }
            }
            seen
        }
    };
    assemble(monomials, vars)
}

/// Parse `[[2,1,0],[0,2,1],[0,0,3]]`.
fn parse_matrix(text: &str, base: usize) -> Result<IntMat> {
    let s = text.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(base, "matrix must be [[..],[..]]"))?;
    let mut rows: Vec<Vec<i128>> = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::parse(base, "expected [ starting a matrix row"))?;
        let (row_txt, tail) = body
            .split_once(']')
            .ok_or_else(|| Error::parse(base, "unclosed matrix row"))?;
        let row: Vec<i128> = row_txt
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| Error::parse(base, format!("bad matrix entry {:?}", x.trim())))
            })
            .collect::<Result<_>>()?;
        if let Some(prev) = rows.first() {
            if prev.len() != row.len() {
                return Err(Error::parse(base, "ragged matrix rows"));
            }
        }
        rows.push(row);
        rest = tail.trim().strip_prefix(',').unwrap_or(tail).trim_start();
    }
    if rows.is_empty() || rows.len() != rows[0].len() {
        return Err(Error::parse(base, "matrix must be square"));
    }
    Ok(IntMat::from_rows(rows))
}

/// A parsed `.poly` spec: the polynomial plus an optional subgroup
/// generator list.
pub struct PolyFile {
    pub poly: InvertiblePolynomial,
    pub subgroup: Option<Vec<GroupElement>>,
}

pub fn parse_poly_file(text: &str) -> Result<PolyFile> {
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let base = offset;
        offset += line.len();
        let line = line.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(base, format!("expected key: value, found {trimmed:?}")))?;
        let key = key.trim();
        if !matches!(key, "vars" | "f" | "E" | "subgroup") {
            return Err(Error::parse(base, format!("unknown key {key:?}")));
        }
        let vbase = base + line.len() - value.len();
        if fields.insert(key, (vbase, value)).is_some() {
            return Err(Error::parse(base, format!("duplicate key {key:?}")));
        }
    }

    let vars: Option<Vec<String>> = match fields.get("vars") {
        Some(&(pos, v)) => {
            let names: Vec<String> = v.split_whitespace().map(str::to_string).collect();
            for name in &names {
                if !is_ident(name) {
                    return Err(Error::parse(pos, format!("bad variable name {name:?}")));
                }
            }
            let mut dedup = names.clone();
            dedup.sort();
            dedup.dedup();
            if dedup.len() != names.len() {
                return Err(Error::parse(pos, "duplicate variable name"));
            }
            Some(names)
        }
        None => None,
    };

    let poly = match (fields.get("f"), fields.get("E")) {
        (Some(&(pos, expr)), None) => parse_expr(expr, pos, vars.as_deref())?,
        (None, Some(&(pos, m))) => {
            let e = parse_matrix(m, pos)?;
            match vars {
                Some(names) => {
                    if names.len() != e.rows() {
                        return Err(Error::parse(pos, "vars do not match matrix size"));
                    }
                    InvertiblePolynomial::new(names, vec![Ratio::one(); e.rows()], e)?
                }
                None => InvertiblePolynomial::from_matrix(e)?,
            }
        }
        (Some(_), Some(&(pos, _))) => {
            return Err(Error::parse(pos, "give exactly one of f: or E:"))
        }
        (None, None) => return Err(Error::parse(0, "missing f: or E: line")),
    };

    let subgroup = match fields.get("subgroup") {
        Some(&(pos, v)) => Some(parse_generator_list(v, pos, poly.n())?),
        None => None,
    };

    Ok(PolyFile { poly, subgroup })
}

/// Parse a whitespace-separated list of group elements,
/// `(1/2,0,1/2) (0,1/3,2/3)`, each with `dim` coordinates.
pub fn parse_generator_list(text: &str, pos: usize, dim: usize) -> Result<Vec<GroupElement>> {
    let mut gens = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let end = rest
            .find(')')
            .ok_or_else(|| Error::parse(pos, "unclosed subgroup generator"))?;
        let g: GroupElement = rest[..=end]
            .trim()
            .parse()
            .map_err(|e| Error::parse(pos, format!("{e}")))?;
        if g.dim() != dim {
            return Err(Error::parse(
                pos,
                format!("generator has {} coordinates, expected {}", g.dim(), dim),
            ));
        }
        gens.push(g);
        rest = rest[end + 1..].trim_start();
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_exponent_matrices() {
        let p = parse_polynomial("x^2").unwrap();
        assert_eq!(p.matrix(), &IntMat::from_rows(vec![vec![2]]));
        assert_eq!(p.var_names(), ["x"]);

        let p = parse_polynomial("x^2*y + y^3").unwrap();
        assert_eq!(p.matrix(), &IntMat::from_rows(vec![vec![2, 1], vec![0, 3]]));

        // det = 2: accepted even though a monomial is not a pure power
        let p = parse_polynomial("x^2 + x*y").unwrap();
        assert_eq!(p.matrix(), &IntMat::from_rows(vec![vec![2, 0], vec![1, 1]]));
        assert_eq!(p.matrix().det(), 2);
    }

    #[test]
    fn coefficients_are_recorded() {
        let p = parse_polynomial("2*x^2*y + 1/3*y^3").unwrap();
        assert_eq!(p.coefficients(), [Ratio::new(2, 1), Ratio::new(1, 3)]);
        assert_eq!(p.to_string(), "2*x^2*y + 1/3*y^3");
        let p = parse_polynomial("-1*x^2 + y^2").unwrap();
        assert_eq!(p.coefficients()[0], Ratio::new(-1, 1));
    }

    #[test]
    fn shape_errors() {
        // repeated monomial row: det = 0
        assert!(matches!(
            parse_polynomial("x*y + x*y"),
            Err(Error::Degenerate)
        ));
        // one monomial, two variables
        assert!(matches!(
            parse_polynomial("x*y"),
            Err(Error::NotSquare { monomials: 1, vars: 2 })
        ));
        // three monomials, two variables
        assert!(matches!(
            parse_polynomial("x^2 + y^2 + x*y"),
            Err(Error::NotSquare { monomials: 3, vars: 2 })
        ));
        // square but singular
        assert!(matches!(
            parse_polynomial("x*y + x^2*y^2"),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x^2 + y^") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial("x^2 + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("x^-1").is_err());
        assert!(parse_polynomial("0*x").is_err());
    }

    #[test]
    fn transpose_is_an_involution() {
        let p = parse_polynomial("x^2*y + y^3").unwrap();
        let t = p.transpose();
        assert_eq!(t.matrix(), &IntMat::from_rows(vec![vec![2, 0], vec![1, 3]]));
        assert_eq!(t.to_string(), "x^2 + x*y^3");
        assert_eq!(t.transpose(), p);

        let fermat = parse_polynomial("x^3 + y^3").unwrap();
        assert_eq!(fermat.transpose(), fermat);
    }

    #[test]
    fn poly_files() {
        let spec = "# a chain\nvars: x y\nf: x^2*y + y^3\nsubgroup: (1/2,1/2) (0,1/3)\n";
        let pf = parse_poly_file(spec).unwrap();
        assert_eq!(pf.poly.to_string(), "x^2*y + y^3");
        let gens = pf.subgroup.unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], "(1/2, 1/2)".parse().unwrap());

        let pf = parse_poly_file("E: [[2,1],[0,3]]\n").unwrap();
        assert_eq!(pf.poly.var_names(), ["x1", "x2"]);
        assert_eq!(pf.poly.matrix(), &IntMat::from_rows(vec![vec![2, 1], vec![0, 3]]));
        assert!(pf.subgroup.is_none());

        let pf = parse_poly_file("vars: u v\nE: [[3,0],[0,3]]\n").unwrap();
        assert_eq!(pf.poly.to_string(), "u^3 + v^3");
    }

    #[test]
    fn poly_file_errors() {
        assert!(parse_poly_file("f: x^2\nE: [[2]]\n").is_err());
        assert!(parse_poly_file("vars: x\n").is_err());
        assert!(parse_poly_file("f: x^2\nf: x^3\n").is_err());
        assert!(parse_poly_file("bogus: 1\n").is_err());
        assert!(parse_poly_file("vars: x x\nf: x^2\n").is_err());
        assert!(parse_poly_file("f: x^2\nsubgroup: (1/2,0)\n").is_err());
        // vars line fixes the variable set: y is unknown
        assert!(parse_poly_file("vars: x\nf: y^2\n").is_err());
    }
}
