//! Newton bases on line covers and the triangular evaluation matrix.
//!
//! For a row cover, `φˣ_ij = c · ∏_{t<j}(y − y_0t) · ∏_{s<i}(x − x_sj)`; for a
//! column cover, `φʸ_ij = c · ∏_{s<i}(x − x_s0) · ∏_{t<j}(y − y_it)`, each
//! normalised so that `φ_ij(u_ij) = 1`. Listed in ascending inlex (rows) or
//! lex (columns) order on `(i, j)`, the basis evaluated at the matching
//! points is upper unitriangular.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{lower_set_of, Axis, LineCover, LowerSet, Point};
use crate::order::Exponent;
use crate::poly::Polynomial;

/// `scale · ∏(x − x_roots) · ∏(y − y_roots)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Factored<E> {
    scale: E,
    x_roots: Vec<E>,
    y_roots: Vec<E>,
}

impl<E: Clone> Factored<E> {
    fn eval<F: Field<Elem = E>>(&self, f: &F, x: &E, y: &E) -> E {
        let xs = self.x_roots.iter().map(|r| f.sub(x, r));
        let ys = self.y_roots.iter().map(|r| f.sub(y, r));
        xs.chain(ys).fold(self.scale.clone(), |acc, d| f.mul(&acc, &d))
    }

    fn expand<F: Field<Elem = E>>(&self, f: &F) -> Polynomial<F> {
        let xc = from_roots(f, &self.x_roots);
        let yc = from_roots(f, &self.y_roots);
        let mut terms = Vec::with_capacity(xc.len() * yc.len());
        for (s, a) in xc.iter().enumerate() {
            let sa = f.mul(&self.scale, a);
            for (t, b) in yc.iter().enumerate() {
                terms.push((Exponent::new(s as u32, t as u32), f.mul(&sa, b)));
            }
        }
        Polynomial::from_terms(f, terms)
    }
}

/// Ascending coefficients of `∏(z − r)`.
fn from_roots<F: Field>(f: &F, roots: &[F::Elem]) -> Vec<F::Elem> {
    let mut c = vec![f.one()];
    for r in roots {
        let mut next = vec![f.zero(); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] = f.add(&next[k + 1], a);
            f.sub_mul_assign(&mut next[k], r, a);
        }
        c = next;
    }
    c
}

/// A Newton basis built from a line cover.
#[derive(Debug, Clone)]
pub struct NewtonBasis<F: Field> {
    field: F,
    pub polys: Vec<Polynomial<F>>,
    /// `(i, j)` of each basis polynomial; also its leading exponent.
    pub index_order: Vec<Exponent>,
    /// `u_ij` for each entry of `index_order`.
    pub point_order: Vec<Point<F::Elem>>,
    pub lower_set: LowerSet,
    factors: Vec<Factored<F::Elem>>,
}

impl<F: Field> NewtonBasis<F> {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `polys[k]` at `p`, from the factored form.
    pub fn eval(&self, k: usize, p: &Point<F::Elem>) -> F::Elem {
        self.factors[k].eval(&self.field, &p.x, &p.y)
    }
}

fn build<F: Field>(field: &F, cover: &LineCover<F::Elem>, axis: Axis) -> Result<NewtonBasis<F>> {
    if cover.is_empty() {
        return Err(Error::EmptySet);
    }
    if cover.axis != axis {
        return Err(Error::BadState(format!("expected a {axis:?} cover")));
    }
    let f = field;
    let keys: Vec<F::Elem> = cover.lines.iter().map(|l| l.key.clone()).collect();
    let mut factors = Vec::with_capacity(cover.len());
    let mut index_order = Vec::with_capacity(cover.len());
    let mut point_order = Vec::with_capacity(cover.len());
    for (a, line) in cover.lines.iter().enumerate() {
        for b in 0..line.coords.len() {
            // (a, b) = (line index, position on line)
            let (e, p, x_roots, y_roots) = match axis {
                Axis::Rows => (
                    Exponent::new(b as u32, a as u32),
                    Point::new(line.coords[b].clone(), line.key.clone()),
                    line.coords[..b].to_vec(),
                    keys[..a].to_vec(),
                ),
                Axis::Columns => (
                    Exponent::new(a as u32, b as u32),
                    Point::new(line.key.clone(), line.coords[b].clone()),
                    keys[..a].to_vec(),
                    line.coords[..b].to_vec(),
                ),
            };
            let raw = Factored {
                scale: f.one(),
                x_roots,
                y_roots,
            };
            let scale = f.inv(&raw.eval(f, &p.x, &p.y))?;
            factors.push(Factored { scale, ..raw });
            index_order.push(e);
            point_order.push(p);
        }
    }
    let polys = factors.iter().map(|fac| fac.expand(f)).collect();
    Ok(NewtonBasis {
        field: f.clone(),
        polys,
        index_order,
        point_order,
        lower_set: lower_set_of(cover),
        factors,
    })
}

/// `φˣ_ij` for `(i, j) ∈ S_x`, ascending inlex on `(i, j)`.
pub fn newton_basis_rows<F: Field>(field: &F, cover: &LineCover<F::Elem>) -> Result<NewtonBasis<F>> {
    build(field, cover, Axis::Rows)
}

/// `φʸ_ij` for `(i, j) ∈ S_y`, ascending lex on `(i, j)`.
pub fn newton_basis_cols<F: Field>(field: &F, cover: &LineCover<F::Elem>) -> Result<NewtonBasis<F>> {
    build(field, cover, Axis::Columns)
}

/// Row-echelon matrix over a field with unit pivots.
///
/// Invariants: every row has a 1 at its pivot column and zeros to the left
/// of it; each row is zero at the pivot columns of all earlier rows; pivot
/// columns are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonMatrix<E> {
    ncols: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone> EchelonMatrix<E> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, k: usize) -> &[E] {
        &self.rows[k]
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Appends a row without checking the invariants.
    pub fn push_row(&mut self, row: Vec<E>, pivot: usize) {
        debug_assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
        self.pivots.push(pivot);
    }

    pub fn satisfies_invariants<F: Field<Elem = E>>(&self, f: &F) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.rows.iter().zip(&self.pivots).enumerate().all(|(k, (row, &p))| {
            row.len() == self.ncols
                && p < self.ncols
                && seen.insert(p)
                && f.is_one(&row[p])
                && row[..p].iter().all(|v| f.is_zero(v))
                && self.pivots[..k].iter().all(|&q| f.is_zero(&row[q]))
        })
    }

    /// Subtracts multiples of the rows from `v` (in row order) until `v` is
    /// zero at every pivot. Returns the multiplier of each row used.
    pub fn reduce_in_place<F: Field<Elem = E>>(&self, f: &F, v: &mut [E]) -> Vec<(usize, E)> {
        debug_assert_eq!(v.len(), self.ncols);
        let mut coeffs = Vec::new();
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if f.is_zero(&v[p]) {
                continue;
            }
            let a = v[p].clone();
            for c in p..self.ncols {
                f.sub_mul_assign(&mut v[c], &a, &row[c]);
            }
            coeffs.push((k, a));
        }
        coeffs
    }
}

/// `(residual, coefficients)` with `residual = v − Σ a_k · row_k`.
pub type Reduction<E> = (Vec<E>, Vec<(usize, E)>);

/// Reduces a copy of `v` against the rows of `b`.
pub fn reduce_vector<F: Field>(f: &F, b: &EchelonMatrix<F::Elem>, v: &[F::Elem]) -> Result<Reduction<F::Elem>> {
    if v.len() != b.ncols() {
        return Err(Error::LengthMismatch {
            expected: b.ncols(),
            got: v.len(),
        });
    }
    let mut r = v.to_vec();
    let coeffs = b.reduce_in_place(f, &mut r);
    Ok((r, coeffs))
}

/// `B[k][m] = polys[k](all_points[m])`. The leading square block is upper
/// unitriangular, so row `k` pivots at column `k`.
pub fn evaluation_matrix<F: Field>(
    basis: &NewtonBasis<F>,
    all_points: &[Point<F::Elem>],
) -> Result<EchelonMatrix<F::Elem>> {
    if all_points.len() < basis.len() || all_points[..basis.len()] != basis.point_order[..] {
        return Err(Error::OrderingViolation);
    }
    let mut b = EchelonMatrix::new(all_points.len());
    for k in 0..basis.len() {
        let row: Vec<F::Elem> = all_points.iter().map(|p| basis.eval(k, p)).collect();
        b.push_row(row, k);
    }
    debug_assert!(b.satisfies_invariants(basis.field()));
    Ok(b)
}

/// The unique element of the basis span taking `values[m]` at
/// `point_order[m]`, by forward substitution.
pub fn interpolate<F: Field>(basis: &NewtonBasis<F>, values: &[F::Elem]) -> Result<Polynomial<F>> {
    if values.len() != basis.len() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            got: values.len(),
        });
    }
    let f = basis.field();
    let mut coeffs: Vec<F::Elem> = Vec::with_capacity(values.len());
    for (m, p) in basis.point_order.iter().enumerate() {
        let mut c = values[m].clone();
        for (k, ck) in coeffs.iter().enumerate() {
            f.sub_mul_assign(&mut c, ck, &basis.eval(k, p));
        }
        coeffs.push(c);
    }
    let mut out = Polynomial::zero(f);
    for (c, phi) in coeffs.iter().zip(&basis.polys) {
        if !f.is_zero(c) {
            out = out.add(&phi.scale(c));
        }
    }
    Ok(out)
}
