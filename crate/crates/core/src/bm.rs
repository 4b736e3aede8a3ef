//! The Buchberger–Möller loop and its two seeded variants.
//!
//! [`bm_run`] starts from `L = {1}` with an empty basis. [`spbm_run`] seeds
//! the loop with the Newton basis of a full line cover (lex or inlex only),
//! [`gpbm_run`] with the Newton basis of a maximal cartesian subset. All three
//! return the same `(G, N)`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{line_cover, max_cartesian_subset, order_points_gpbm, Axis, LowerSet, Point, PointSet};
use crate::newton::{evaluation_matrix, newton_basis_cols, newton_basis_rows, EchelonMatrix, NewtonBasis};
use crate::order::{Exponent, TermOrder};
use crate::poly::Polynomial;

/// Output of a BM run.
#[derive(Debug, Clone)]
pub struct BmResult<F: Field> {
    pub field: F,
    pub order: TermOrder,
    /// Reduced Gröbner basis, monic, ascending by leading monomial.
    pub g: Vec<Polynomial<F>>,
    /// Éscalier in processing order; `N[k]` is the leading monomial of `Q[k]`.
    pub n: Vec<Exponent>,
    pub q: Vec<Polynomial<F>>,
    /// Input indices such that `Q[k]` at point `point_permutation[m]` is
    /// `δ_km` for `m ≤ k`.
    pub point_permutation: Vec<usize>,
    /// Monomials taken from `L` by the loop (seeded monomials excluded).
    pub monomials_processed: usize,
    /// Size of the seeded basis; 0 for a plain run.
    pub seeded: usize,
}

impl<F: Field> BmResult<F> {
    /// `N` sorted ascending under the run's order.
    pub fn n_sorted(&self) -> Vec<Exponent> {
        let mut n = self.n.clone();
        self.order.sort(&mut n);
        n
    }

    /// Input points listed by `point_permutation`.
    pub fn ordered_points(&self, ps: &PointSet<F>) -> Vec<Point<F::Elem>> {
        self.point_permutation.iter().map(|&k| ps.get(k).clone()).collect()
    }
}

/// Mutable state of the loop: `N`, `Q`, `L`, `B` plus the accumulated `G`.
///
/// `Q[k]` and the tails of `G` are stored as coefficient vectors over `N`.
/// Columns of `B` are the input points in the order given by `columns`.
#[derive(Debug, Clone)]
pub struct BmState<F: Field> {
    field: F,
    order: TermOrder,
    points: Vec<Point<F::Elem>>,
    columns: Vec<usize>,
    n: Vec<Exponent>,
    q: Vec<Vec<F::Elem>>,
    l: Vec<Exponent>,
    b: EchelonMatrix<F::Elem>,
    g: Vec<(Exponent, Vec<F::Elem>)>,
    xpow: Vec<Vec<F::Elem>>,
    ypow: Vec<Vec<F::Elem>>,
    seeded: usize,
}

impl<F: Field> BmState<F> {
    /// The unseeded start: `L = {1}`, everything else empty.
    pub fn new(ps: &PointSet<F>, order: TermOrder) -> Result<Self> {
        if ps.is_empty() {
            return Err(Error::EmptySet);
        }
        let columns: Vec<usize> = (0..ps.len()).collect();
        let mut s = Self::blank(ps, order, columns);
        s.l.push(Exponent::ONE);
        Ok(s)
    }

    /// A state seeded with a Newton basis whose points are the first
    /// `basis.len()` entries of `columns` (indices into `ps`).
    pub fn seeded(ps: &PointSet<F>, order: TermOrder, columns: Vec<usize>, basis: &NewtonBasis<F>) -> Result<Self> {
        if ps.is_empty() {
            return Err(Error::EmptySet);
        }
        if columns.len() != ps.len() {
            return Err(Error::LengthMismatch {
                expected: ps.len(),
                got: columns.len(),
            });
        }
        let mut s = Self::blank(ps, order, columns);
        s.b = evaluation_matrix(basis, &s.points)?;
        let index: HashMap<Exponent, usize> = basis.index_order.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        for (k, phi) in basis.polys.iter().enumerate() {
            let mut coeffs = vec![s.field.zero(); k + 1];
            for (e, c) in phi.iter() {
                match index.get(&e) {
                    Some(&m) if m <= k => coeffs[m] = c.clone(),
                    _ => return Err(Error::BadState(format!("basis polynomial {k} has term {e} outside its prefix"))),
                }
            }
            s.q.push(coeffs);
        }
        s.n = basis.index_order.clone();
        s.l = border(&s.n, order)?;
        s.seeded = s.n.len();
        debug_assert!(s.check().is_ok(), "{:?}", s.check());
        Ok(s)
    }

    fn blank(ps: &PointSet<F>, order: TermOrder, columns: Vec<usize>) -> Self {
        let field = ps.field().clone();
        let points: Vec<Point<F::Elem>> = columns.iter().map(|&k| ps.get(k).clone()).collect();
        let ones = vec![field.one(); points.len()];
        Self {
            order,
            b: EchelonMatrix::new(points.len()),
            xpow: vec![ones.clone()],
            ypow: vec![ones],
            points,
            columns,
            n: Vec::new(),
            q: Vec::new(),
            l: Vec::new(),
            g: Vec::new(),
            seeded: 0,
            field,
        }
    }

    /// Structural consistency of a (seeded) state.
    pub fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::BadState(m.to_string()));
        if !self.b.satisfies_invariants(&self.field) {
            return bad("B is not in unit row-echelon form");
        }
        if self.b.nrows() != self.n.len() || self.q.len() != self.n.len() {
            return bad("N, Q and B have different lengths");
        }
        if self.q.iter().enumerate().any(|(k, c)| c.len() != k + 1 || self.field.is_zero(&c[k])) {
            return bad("Q[k] must have leading monomial N[k]");
        }
        LowerSet::from_exponents(self.n.iter().copied())?;
        if self.l.windows(2).any(|w| self.order.cmp(w[0], w[1]) != Ordering::Less) {
            return bad("L is not strictly ascending");
        }
        if self.l.iter().any(|t| self.n.contains(t)) {
            return bad("L meets N");
        }
        Ok(())
    }

    fn column_powers(pows: &mut Vec<Vec<F::Elem>>, f: &F, coords: impl Fn(usize) -> F::Elem, e: usize) {
        while pows.len() <= e {
            let last = pows.last().expect("power table starts with ones");
            let next = last.iter().enumerate().map(|(m, v)| f.mul(v, &coords(m))).collect();
            pows.push(next);
        }
    }

    /// Evaluations of `t` at every column.
    fn eval_monomial(&mut self, t: Exponent) -> Vec<F::Elem> {
        let (f, pts) = (&self.field, &self.points);
        Self::column_powers(&mut self.xpow, f, |m| pts[m].x.clone(), t.i as usize);
        Self::column_powers(&mut self.ypow, f, |m| pts[m].y.clone(), t.j as usize);
        let (xs, ys) = (&self.xpow[t.i as usize], &self.ypow[t.j as usize]);
        xs.iter().zip(ys).map(|(a, b)| f.mul(a, b)).collect()
    }

    /// `−Σ a_k Q[k]` over the current `N`.
    fn combination(&self, coeffs: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.n.len()];
        for (k, a) in coeffs {
            for (m, c) in self.q[*k].iter().enumerate() {
                f.sub_mul_assign(&mut out[m], a, c);
            }
        }
        out
    }

    fn insert_candidate(&mut self, s: Exponent) {
        if self.l.iter().any(|u| u.divides(s)) || self.g.iter().any(|(u, _)| u.divides(s)) {
            return;
        }
        let order = self.order;
        let pos = self.l.partition_point(|u| order.cmp(*u, s) == Ordering::Less);
        self.l.insert(pos, s);
    }

    /// Runs the loop until `L` is empty.
    pub fn run(mut self) -> Result<BmResult<F>> {
        let mut processed = 0;
        while !self.l.is_empty() {
            let t = self.l.remove(0);
            processed += 1;
            let mut v = self.eval_monomial(t);
            let coeffs = self.b.reduce_in_place(&self.field, &mut v);
            let tail = self.combination(&coeffs);
            match v.iter().position(|c| !self.field.is_zero(c)) {
                None => {
                    self.l.retain(|u| !t.divides(*u));
                    self.g.push((t, tail));
                }
                Some(pivot) => {
                    let f = &self.field;
                    let inv = f.inv(&v[pivot])?;
                    let row = v.iter().map(|c| f.mul(c, &inv)).collect();
                    let mut q: Vec<F::Elem> = tail.iter().map(|c| f.mul(c, &inv)).collect();
                    q.push(inv);
                    self.b.push_row(row, pivot);
                    self.q.push(q);
                    self.n.push(t);
                    self.insert_candidate(t.times_x());
                    self.insert_candidate(t.times_y());
                }
            }
        }
        Ok(self.finish(processed))
    }

    fn finish(self, processed: usize) -> BmResult<F> {
        let f = &self.field;
        let over_n = |lead: Option<Exponent>, coeffs: &[F::Elem]| {
            let tail = coeffs.iter().zip(&self.n).map(|(c, e)| (*e, c.clone()));
            Polynomial::from_terms(f, lead.map(|t| (t, f.one())).into_iter().chain(tail))
        };
        let mut g: Vec<(Exponent, Polynomial<F>)> = self.g.iter().map(|(t, c)| (*t, over_n(Some(*t), c))).collect();
        g.sort_by(|a, b| self.order.cmp(a.0, b.0));
        BmResult {
            field: f.clone(),
            order: self.order,
            g: g.into_iter().map(|(_, p)| p).collect(),
            q: self.q.iter().map(|c| over_n(None, c)).collect(),
            n: self.n.clone(),
            point_permutation: self.b.pivots().iter().map(|&p| self.columns[p]).collect(),
            monomials_processed: processed,
            seeded: self.seeded,
        }
    }
}

/// `{x t, y t : t ∈ N} \ N`, ascending under `order`.
pub fn border(n: &[Exponent], order: TermOrder) -> Result<Vec<Exponent>> {
    let mut b = LowerSet::from_exponents(n.iter().copied())?.border();
    order.sort(&mut b);
    Ok(b)
}

pub fn bm_run<F: Field>(ps: &PointSet<F>, order: TermOrder) -> Result<BmResult<F>> {
    BmState::new(ps, order)?.run()
}

/// Seeds `N` and `Q` from the full row cover (lex) or column cover (inlex).
pub fn spbm_run<F: Field>(ps: &PointSet<F>, order: TermOrder) -> Result<BmResult<F>> {
    let basis = match order {
        TermOrder::Lex => newton_basis_rows(ps.field(), &line_cover(ps, Axis::Rows)?)?,
        TermOrder::Inlex => newton_basis_cols(ps.field(), &line_cover(ps, Axis::Columns)?)?,
        TermOrder::Tdinlex => return Err(Error::UnsupportedOrder(order)),
    };
    let index: HashMap<&Point<F::Elem>, usize> = ps.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let columns = basis.point_order.iter().map(|p| index[p]).collect();
    BmState::seeded(ps, order, columns, &basis)?.run()
}

/// Seeds `N` and `Q` from the row cover of a maximal cartesian subset.
pub fn gpbm_run<F: Field>(ps: &PointSet<F>, order: TermOrder) -> Result<BmResult<F>> {
    let sub = max_cartesian_subset(ps)?.subset;
    let rows = line_cover(&sub, Axis::Rows)?;
    let basis = newton_basis_rows(ps.field(), &rows)?;
    let columns = order_points_gpbm(ps, &sub, &rows)?;
    BmState::seeded(ps, order, columns, &basis)?.run()
}
