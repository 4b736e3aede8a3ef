//! Text formats: point files, polynomial literals and the JSON result schema.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bm::BmResult;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{Point, PointSet};
use crate::order::{Exponent, TermOrder};
use crate::poly::Polynomial;

/// Parses `x,y` lines; `#` starts a comment, blank lines are skipped.
/// Errors carry 1-based line numbers, duplicates included.
pub fn parse_points<F: Field>(field: &F, text: &str) -> Result<PointSet<F>> {
    let mut points = Vec::new();
    let mut seen: HashMap<Point<F::Elem>, usize> = HashMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line, msg };
        let (x, y) = body
            .split_once(',')
            .ok_or_else(|| err(format!("expected \"x,y\", got {body:?}")))?;
        if y.contains(',') {
            return Err(err(format!("expected two coordinates, got {body:?}")));
        }
        let p = Point::new(
            field.parse(x).map_err(|e| err(e.to_string()))?,
            field.parse(y).map_err(|e| err(e.to_string()))?,
        );
        if let Some(&first) = seen.get(&p) {
            return Err(Error::DuplicatePoint { first, second: line });
        }
        seen.insert(p.clone(), line);
        points.push(p);
    }
    PointSet::new(field, points)
}

pub fn write_points<F: Field>(ps: &PointSet<F>) -> String {
    let mut out = String::new();
    for p in ps.iter() {
        let _ = writeln!(out, "{},{}", p.x, p.y);
    }
    out
}

/// Parses literals like `x^4-6x^3+11x^2-6x`, `1/2x^2y-(3/4)y+1` or `2*x*y^3`.
pub fn parse_polynomial<F: Field>(field: &F, src: &str) -> Result<Polynomial<F>> {
    let s: String = src.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let bad = |msg: &str| Error::BadLiteral(format!("{msg} in {src:?}"));
    let bytes = s.as_bytes();
    let mut p = Polynomial::zero(field);
    let mut pos = 0;
    if bytes.is_empty() {
        return Err(bad("empty polynomial"));
    }
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos > 0 {
            return Err(bad("missing sign between terms"));
        }
        let start = pos;
        let coeff = if bytes.get(pos) == Some(&b'(') {
            let close = s[pos..].find(')').ok_or_else(|| bad("unclosed parenthesis"))? + pos;
            pos = close + 1;
            Some(field.parse(&s[start + 1..close])?)
        } else {
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            (pos > start).then(|| field.parse(&s[start..pos])).transpose()?
        };
        let mut e = Exponent::ONE;
        let mut has_var = false;
        while pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b'y') {
            let var = bytes[pos];
            pos += 1;
            let mut pow = 1;
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                let d = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                pow = s[d..pos].parse().map_err(|_| bad("bad exponent"))?;
            }
            if var == b'x' {
                e.i += pow;
            } else {
                e.j += pow;
            }
            has_var = true;
        }
        if coeff.is_none() && !has_var {
            return Err(bad("empty term"));
        }
        let c = coeff.unwrap_or_else(|| field.one());
        p.add_term(e, &if negative { field.neg(&c) } else { c });
    }
    Ok(p)
}

pub type Triple = (u32, u32, String);

/// Serialized form of a [`BmResult`]; polynomials are `[i, j, "coeff"]`
/// triples descending under the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultJson {
    pub field: String,
    pub order: String,
    pub algorithm: String,
    #[serde(rename = "G")]
    pub g: Vec<Vec<Triple>>,
    #[serde(rename = "N")]
    pub n: Vec<(u32, u32)>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<Triple>>,
    #[serde(rename = "pointPermutation")]
    pub point_permutation: Vec<usize>,
}

impl ResultJson {
    pub fn from_result<F: Field>(r: &BmResult<F>, algorithm: &str) -> Self {
        let o = r.order;
        Self {
            field: r.field.spec().to_string(),
            order: o.name().to_string(),
            algorithm: algorithm.to_string(),
            g: r.g.iter().map(|p| p.to_triples(o)).collect(),
            n: r.n.iter().map(|e| (e.i, e.j)).collect(),
            q: r.q.iter().map(|p| p.to_triples(o)).collect(),
            point_permutation: r.point_permutation.clone(),
        }
    }

    pub fn term_order(&self) -> Result<TermOrder> {
        self.order.parse()
    }

    pub fn g_polys<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        self.g.iter().map(|t| Polynomial::from_triples(field, t)).collect()
    }

    pub fn q_polys<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        self.q.iter().map(|t| Polynomial::from_triples(field, t)).collect()
    }

    pub fn n_exponents(&self) -> Vec<Exponent> {
        self.n.iter().map(|&(i, j)| Exponent::new(i, j)).collect()
    }
}

/// Human-readable listing of `G`, `N` and `Q`.
pub fn render_text<F: Field>(r: &BmResult<F>) -> String {
    let o = r.order;
    let mut out = String::new();
    let _ = writeln!(out, "G ({}):", r.g.len());
    for g in &r.g {
        let _ = writeln!(out, "  {}", g.display(o));
    }
    let n: Vec<String> = r.n.iter().map(|e| e.to_string()).collect();
    let _ = writeln!(out, "N ({}): {}", r.n.len(), n.join(", "));
    let _ = writeln!(out, "Q ({}):", r.q.len());
    for q in &r.q {
        let _ = writeln!(out, "  {}", q.display(o));
    }
    let perm: Vec<String> = r.point_permutation.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "point permutation: {}", perm.join(" "));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bm::spbm_run;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn points_round_trip() {
        let r = Rationals;
        let ps = parse_points(&r, "# header\n0,0\n 5/2 , 1 # note\n\n-1,3/4\n").unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(write_points(&ps), "0,0\n5/2,1\n-1,3/4\n");
        assert_eq!(parse_points(&r, &write_points(&ps)).unwrap(), ps);
    }

    #[test]
    fn point_errors_carry_lines() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(parse_points(&f7, "1,2\n# c\n3,4\n8,2\n"), Err(Error::DuplicatePoint { first: 1, second: 4 }));
        assert!(matches!(parse_points(&f7, "1,2\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points(&f7, "1,2,3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points(&f7, "1,a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points(&f7, "1/7,1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn polynomial_literals() {
        let f7 = PrimeField::new(7).unwrap();
        let p = parse_polynomial(&f7, "2x^3 + x^2 + 4x").unwrap();
        assert_eq!(p.display(TermOrder::Lex).to_string(), "2x^3+x^2+4x");
        let q = parse_polynomial(&Rationals, "1/8y^3-(5/8)y^2+3/4*y-1").unwrap();
        assert_eq!(q.display(TermOrder::Inlex).to_string(), "(1/8)y^3-(5/8)y^2+(3/4)y-1");
        assert_eq!(parse_polynomial(&Rationals, "xy-yx").unwrap(), Polynomial::zero(&Rationals));
        for bad in ["", "x+", "2x3y", "(1/2x", "x^"] {
            assert!(parse_polynomial(&Rationals, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_round_trip() {
        let ps = PointSet::from_ints(&Rationals, &[(0, 1), (0, 3), (1, 0), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1)]).unwrap();
        let r = spbm_run(&ps, TermOrder::Inlex).unwrap();
        let j = ResultJson::from_result(&r, "spbm");
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with("{\"field\":\"rational\",\"order\":\"inlex\",\"algorithm\":\"spbm\",\"G\":[[[4,0,\"1\"],"));
        let back: ResultJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.g_polys(&Rationals).unwrap(), r.g);
        assert_eq!(back.q_polys(&Rationals).unwrap(), r.q);
        assert_eq!(back.n_exponents(), r.n);
        assert_eq!(back.term_order().unwrap(), TermOrder::Inlex);
        let text = render_text(&r);
        assert!(text.starts_with("G (4):\n  x^4-6x^3+11x^2-6x\n"));
        assert!(text.contains("N (9): 1, y, y^2, y^3, x, xy, x^2, x^2y, x^3\n"));
    }
}
