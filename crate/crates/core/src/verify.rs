//! Independent checks on BM output, and a dense-elimination oracle.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bm::BmResult;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{LowerSet, Point, PointSet};
use crate::order::{Exponent, TermOrder};
use crate::poly::Polynomial;

/// Largest point set [`oracle_dense`] accepts.
pub const DEFAULT_ORACLE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new() -> Self {
        Self {
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, counterexample: Option<String>) {
        let passed = counterexample.is_none();
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            counterexample,
        });
    }

    pub fn merge(mut self, other: VerifyReport) -> Self {
        self.passed &= other.passed;
        self.checks.extend(other.checks);
        self
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "ok    {}", c.name)?,
                Some(why) => writeln!(f, "FAIL  {}: {why}", c.name)?,
            }
        }
        let failed = self.failed().count();
        write!(
            f,
            "verify: {} ({} checks, {failed} failed)",
            if self.passed { "passed" } else { "FAILED" },
            self.checks.len()
        )
    }
}

fn show_point<E: fmt::Display>(p: &Point<E>) -> String {
    format!("({}, {})", p.x, p.y)
}

pub fn check_vanishing<F: Field>(g: &[Polynomial<F>], ps: &PointSet<F>) -> VerifyReport {
    let f = ps.field();
    let bad = g.iter().enumerate().find_map(|(k, p)| {
        ps.iter()
            .find(|pt| !f.is_zero(&p.eval(&pt.x, &pt.y)))
            .map(|pt| format!("G[{k}] is nonzero at {}", show_point(pt)))
    });
    let mut r = VerifyReport::new();
    r.push("G vanishes on the points", bad);
    r
}

/// Shape checks that pin down the reduced Gröbner basis of a `mu`-point
/// vanishing ideal together with its éscalier `n`.
pub fn check_reduced_gb<F: Field>(g: &[Polynomial<F>], n: &[Exponent], order: TermOrder, mu: usize) -> VerifyReport {
    let mut r = VerifyReport::new();
    let leads: Vec<Option<(Exponent, F::Elem)>> = g.iter().map(|p| p.leading_term(order).ok()).collect();
    r.push(
        "G is monic",
        leads.iter().enumerate().find_map(|(k, lt)| match lt {
            None => Some(format!("G[{k}] is zero")),
            Some((_, c)) if !g[k].field().is_one(c) => Some(format!("G[{k}] has leading coefficient {c}")),
            _ => None,
        }),
    );
    let lms: Vec<Exponent> = leads.iter().flatten().map(|(e, _)| *e).collect();
    let mut divisible = None;
    'outer: for (a, s) in lms.iter().enumerate() {
        for (b, t) in lms.iter().enumerate() {
            if a != b && s.divides(*t) {
                divisible = Some(format!("LM(G[{a}]) = {s} divides LM(G[{b}]) = {t}"));
                break 'outer;
            }
        }
    }
    r.push("leading monomials are pairwise non-divisible", divisible);

    let nset: HashSet<Exponent> = n.iter().copied().collect();
    r.push(
        "tails of G lie in N",
        g.iter().enumerate().find_map(|(k, p)| {
            let lm = p.leading_monomial(order).ok()?;
            p.support()
                .find(|t| *t != lm && !nset.contains(t))
                .map(|t| format!("G[{k}] has tail monomial {t} outside N"))
        }),
    );
    let lower = LowerSet::from_exponents(n.iter().copied()).ok();
    r.push(
        "N is a lower set",
        match (&lower, nset.len() == n.len()) {
            (_, false) => Some("N has repeated monomials".to_string()),
            (None, _) => Some("N is not closed under division".to_string()),
            _ => None,
        },
    );
    r.push(
        "#N equals the number of points",
        (n.len() != mu).then(|| format!("#N = {}, expected {mu}", n.len())),
    );
    r.push(
        "N avoids the leading monomials",
        n.iter()
            .find_map(|t| lms.iter().find(|s| s.divides(*t)).map(|s| format!("{s} divides {t} ∈ N"))),
    );
    r.push(
        "border of N is covered by the leading monomials",
        lower.and_then(|ls| {
            ls.border()
                .into_iter()
                .find(|t| !lms.iter().any(|s| s.divides(*t)))
                .map(|t| format!("border monomial {t} is not divisible by any LM(G)"))
        }),
    );
    r
}

/// `Q[k](points[m]) = δ_km` for all `m ≤ k`.
pub fn check_newton<F: Field>(q: &[Polynomial<F>], points: &[Point<F::Elem>]) -> Result<VerifyReport> {
    if q.len() != points.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            got: q.len(),
        });
    }
    let bad = q.iter().enumerate().find_map(|(k, p)| {
        let f = p.field();
        points[..=k].iter().enumerate().find_map(|(m, pt)| {
            let v = p.eval(&pt.x, &pt.y);
            let ok = if m == k { f.is_one(&v) } else { f.is_zero(&v) };
            (!ok).then(|| format!("Q[{k}] at point {m} {} is {v}", show_point(pt)))
        })
    });
    let mut r = VerifyReport::new();
    r.push("Q is triangular on the ordered points", bad);
    Ok(r)
}

/// All checks for a run on `ps`.
pub fn verify_result<F: Field>(r: &BmResult<F>, ps: &PointSet<F>) -> Result<VerifyReport> {
    let points = r.point_permutation.iter().map(|&k| ps.points().get(k).cloned());
    let points: Option<Vec<_>> = points.collect();
    let newton = match points {
        Some(pts) => check_newton(&r.q, &pts)?,
        None => {
            let mut v = VerifyReport::new();
            v.push("Q is triangular on the ordered points", Some("point index out of range".into()));
            v
        }
    };
    Ok(check_vanishing(&r.g, ps)
        .merge(check_reduced_gb(&r.g, &r.n, r.order, ps.len()))
        .merge(newton))
}

pub fn oracle_dense<F: Field>(ps: &PointSet<F>, order: TermOrder) -> Result<(Vec<Polynomial<F>>, Vec<Exponent>)> {
    oracle_dense_capped(ps, order, DEFAULT_ORACLE_CAP)
}

/// Ground truth by Gauss–Jordan elimination on the full evaluation matrix
/// of every monomial of total degree `≤ #Ξ`, columns ascending under
/// `order`. Pivot columns give `N`; the reduced column of each corner
/// monomial gives its normal form.
pub fn oracle_dense_capped<F: Field>(
    ps: &PointSet<F>,
    order: TermOrder,
    cap: usize,
) -> Result<(Vec<Polynomial<F>>, Vec<Exponent>)> {
    let mu = ps.len();
    if mu == 0 {
        return Err(Error::EmptySet);
    }
    if mu > cap {
        return Err(Error::OracleCapExceeded { size: mu, cap });
    }
    let f = ps.field();
    let d = mu as u32;
    let mut monos: Vec<Exponent> = (0..=d).flat_map(|i| (0..=d - i).map(move |j| Exponent::new(i, j))).collect();
    order.sort(&mut monos);
    let mut a: Vec<Vec<F::Elem>> = ps
        .iter()
        .map(|p| monos.iter().map(|t| f.mul(&f.pow(&p.x, t.i), &f.pow(&p.y, t.j))).collect())
        .collect();

    let mut pivots: Vec<usize> = Vec::with_capacity(mu);
    for c in 0..monos.len() {
        let r = pivots.len();
        if r == mu {
            break;
        }
        let Some(s) = (r..mu).find(|&s| !f.is_zero(&a[s][c])) else {
            continue;
        };
        a.swap(r, s);
        let inv = f.inv(&a[r][c])?;
        for v in a[r].iter_mut() {
            *v = f.mul(v, &inv);
        }
        let pivot_row = a[r].clone();
        for (s, row) in a.iter_mut().enumerate() {
            if s == r || f.is_zero(&row[c]) {
                continue;
            }
            let m = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                f.sub_mul_assign(v, &m, p);
            }
        }
        pivots.push(c);
    }
    if pivots.len() < mu {
        return Err(Error::BadState(format!("oracle degree bound {d} reached at rank {}", pivots.len())));
    }

    let n: Vec<Exponent> = pivots.iter().map(|&c| monos[c]).collect();
    let nset: HashSet<Exponent> = n.iter().copied().collect();
    let mut g = Vec::new();
    for (c, &t) in monos.iter().enumerate() {
        let corner = !nset.contains(&t)
            && (t.i == 0 || nset.contains(&Exponent::new(t.i - 1, t.j)))
            && (t.j == 0 || nset.contains(&Exponent::new(t.i, t.j - 1)));
        if !corner {
            continue;
        }
        let mut p = Polynomial::monomial(f, t, f.one());
        for (k, &pc) in pivots.iter().enumerate() {
            p.add_term(monos[pc], &f.neg(&a[k][c]));
        }
        g.push(p);
    }
    Ok((g, n))
}
