//! Point sets, line covers, lower sets and cartesian subsets.
//!
//! A row cover groups the points of a set by ordinate (lines parallel to the
//! x-axis), a column cover by abscissa. Lines are ordered by decreasing size,
//! ties by ascending key; points on a line by ascending varying coordinate.
//! "Ascending" always means the field's representative order ([`Field::Elem`]'s
//! `Ord`). With this convention the row cover yields `S_x` and the column
//! cover `S_y`, and the point `u_ij` is the `i`-th point of row `j`
//! (respectively the `j`-th point of column `i`).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<E> {
    pub x: E,
    pub y: E,
}

impl<E> Point<E> {
    pub fn new(x: E, y: E) -> Self {
        Self { x, y }
    }
}

/// An ordered list of pairwise distinct points over one field.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet<F: Field> {
    field: F,
    points: Vec<Point<F::Elem>>,
}

impl<F: Field> PointSet<F> {
    /// Fails with [`Error::DuplicatePoint`] (1-based positions) on repeats.
    pub fn new(field: &F, points: Vec<Point<F::Elem>>) -> Result<Self> {
        let mut seen: HashMap<&Point<F::Elem>, usize> = HashMap::with_capacity(points.len());
        for (k, p) in points.iter().enumerate() {
            if let Some(first) = seen.insert(p, k) {
                return Err(Error::DuplicatePoint {
                    first: first + 1,
                    second: k + 1,
                });
            }
        }
        Ok(Self {
            field: field.clone(),
            points,
        })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(field: &F, coords: &[(i64, i64)]) -> Result<Self> {
        let pts = coords
            .iter()
            .map(|&(x, y)| Point::new(field.from_i64(x), field.from_i64(y)))
            .collect();
        Self::new(field, pts)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<F::Elem>] {
        &self.points
    }

    pub fn get(&self, k: usize) -> &Point<F::Elem> {
        &self.points[k]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point<F::Elem>> {
        self.points.iter()
    }

    /// The points at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Self {
        Self {
            field: self.field.clone(),
            points: indices.iter().map(|&k| self.points[k].clone()).collect(),
        }
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.points.is_empty() {
            Err(Error::EmptySet)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Lines parallel to the x-axis, keyed by ordinate.
    Rows,
    /// Lines parallel to the y-axis, keyed by abscissa.
    Columns,
}

/// One covering line: its fixed coordinate and the sorted varying coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<E> {
    pub key: E,
    pub coords: Vec<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCover<E> {
    pub axis: Axis,
    pub lines: Vec<Line<E>>,
}

impl<E: Clone + Ord> LineCover<E> {
    pub fn len(&self) -> usize {
        self.lines.iter().map(|l| l.coords.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lines.iter().map(|l| l.coords.len()).collect()
    }

    /// The point `u_ij`.
    pub fn point(&self, e: Exponent) -> Point<E> {
        let (i, j) = (e.i as usize, e.j as usize);
        match self.axis {
            Axis::Rows => {
                let line = &self.lines[j];
                Point::new(line.coords[i].clone(), line.key.clone())
            }
            Axis::Columns => {
                let line = &self.lines[i];
                Point::new(line.key.clone(), line.coords[j].clone())
            }
        }
    }

    /// Coordinate sets `H_j` (rows) or `V_i` (columns) in line order.
    pub fn coordinate_sets(&self) -> Vec<BTreeSet<E>> {
        self.lines
            .iter()
            .map(|l| l.coords.iter().cloned().collect())
            .collect()
    }
}

pub fn line_cover<F: Field>(ps: &PointSet<F>, axis: Axis) -> Result<LineCover<F::Elem>> {
    ps.require_nonempty()?;
    let mut groups: BTreeMap<&F::Elem, Vec<F::Elem>> = BTreeMap::new();
    for p in ps.iter() {
        let (key, c) = match axis {
            Axis::Rows => (&p.y, &p.x),
            Axis::Columns => (&p.x, &p.y),
        };
        groups.entry(key).or_default().push(c.clone());
    }
    // BTreeMap iteration is ascending by key; the stable sort keeps that as tie-break.
    let mut lines: Vec<Line<F::Elem>> = groups
        .into_iter()
        .map(|(key, mut coords)| {
            coords.sort();
            Line {
                key: key.clone(),
                coords,
            }
        })
        .collect();
    lines.sort_by_key(|l| std::cmp::Reverse(l.coords.len()));
    Ok(LineCover { axis, lines })
}

/// A finite lower (down-closed) subset of ℕ₀², stored by row lengths:
/// `rows[j]` is the number of exponents with y-exponent `j`, i.e. `m_j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LowerSet {
    rows: Vec<u32>,
}

impl LowerSet {
    /// From `L_x`-style row lengths `(m_0 + 1, m_1 + 1, ...)`.
    pub fn from_row_lengths(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotLowerSet);
        }
        Ok(Self { rows })
    }

    /// From `L_y`-style column lengths `(n_0 + 1, n_1 + 1, ...)`.
    pub fn from_col_lengths(cols: &[u32]) -> Result<Self> {
        if cols.contains(&0) || cols.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotLowerSet);
        }
        let height = cols.first().copied().unwrap_or(0);
        let rows = (0..height)
            .map(|j| cols.iter().take_while(|&&c| c > j).count() as u32)
            .collect();
        Ok(Self { rows })
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let set: BTreeSet<Exponent> = exps.into_iter().collect();
        let height = set.iter().map(|e| e.j + 1).max().unwrap_or(0);
        let mut rows = vec![0u32; height as usize];
        for e in &set {
            rows[e.j as usize] += 1;
        }
        let ls = Self::from_row_lengths(rows)?;
        if set.iter().all(|e| ls.contains(*e)) {
            Ok(ls)
        } else {
            Err(Error::NotLowerSet)
        }
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, e: Exponent) -> bool {
        self.rows.get(e.j as usize).is_some_and(|&r| e.i < r)
    }

    /// `L_x` tuple `(m_0, ..., m_ν)`.
    pub fn lx(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r - 1).collect()
    }

    /// `L_y` tuple `(n_0, ..., n_{m_0})`.
    pub fn ly(&self) -> Vec<u32> {
        let width = self.rows.first().copied().unwrap_or(0);
        (0..width)
            .map(|i| self.rows.iter().take_while(|&&r| r > i).count() as u32 - 1)
            .collect()
    }

    /// Exponents ordered by y-exponent, then x-exponent (ascending inlex).
    pub fn exponents(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, &r)| (0..r).map(move |i| Exponent::new(i, j as u32)))
    }

    /// `{x t, y t : t ∈ set} \ set`, sorted by `(i, j)`.
    pub fn border(&self) -> Vec<Exponent> {
        let mut out: Vec<Exponent> = self
            .exponents()
            .flat_map(|t| [t.times_x(), t.times_y()])
            .filter(|t| !self.contains(*t))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// `S_x` from a row cover, `S_y` from a column cover.
pub fn lower_set_of<E: Clone + Ord>(cover: &LineCover<E>) -> LowerSet {
    let sizes: Vec<u32> = cover.sizes().into_iter().map(|s| s as u32).collect();
    match cover.axis {
        Axis::Rows => LowerSet::from_row_lengths(sizes),
        Axis::Columns => LowerSet::from_col_lengths(&sizes),
    }
    .expect("cover sizes are positive and non-increasing")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartesianTest {
    /// `S_x(Ξ) = S_y(Ξ)`.
    SxEqSy,
    /// `H_0 ⊇ H_1 ⊇ ...` and `V_0 ⊇ V_1 ⊇ ...`.
    NestedChains,
}

pub fn is_cartesian<F: Field>(ps: &PointSet<F>, method: CartesianTest) -> Result<bool> {
    let rows = line_cover(ps, Axis::Rows)?;
    let cols = line_cover(ps, Axis::Columns)?;
    Ok(match method {
        CartesianTest::SxEqSy => lower_set_of(&rows) == lower_set_of(&cols),
        CartesianTest::NestedChains => is_chain(&rows.coordinate_sets()) && is_chain(&cols.coordinate_sets()),
    })
}

fn is_chain<E: Ord>(sets: &[BTreeSet<E>]) -> bool {
    sets.windows(2).all(|w| w[1].is_subset(&w[0]))
}

/// Output of [`max_cartesian_subset`]; indices refer to the input set.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianSubset<F: Field> {
    /// The subset, in the order its points were collected.
    pub subset: PointSet<F>,
    pub subset_indices: Vec<usize>,
    /// Input points outside the subset, in input order.
    pub removed: Vec<usize>,
}

/// Greedy maximal cartesian subset: repeatedly take the largest remaining
/// row (smallest ordinate on ties), then discard every remaining point whose
/// abscissa does not occur on that row, until the remainder is cartesian.
pub fn max_cartesian_subset<F: Field>(ps: &PointSet<F>) -> Result<CartesianSubset<F>> {
    ps.require_nonempty()?;
    let mut remaining: Vec<usize> = (0..ps.len()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while !remaining.is_empty() {
        let rest = ps.select(&remaining);
        if is_cartesian(&rest, CartesianTest::SxEqSy)? {
            chosen.extend_from_slice(&remaining);
            break;
        }
        let cover = line_cover(&rest, Axis::Rows)?;
        let top = &cover.lines[0];
        let abscissae: BTreeSet<&F::Elem> = top.coords.iter().collect();
        let mut row: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&k| ps.get(k).y == top.key)
            .collect();
        row.sort_by(|&a, &b| ps.get(a).x.cmp(&ps.get(b).x));
        chosen.extend_from_slice(&row);
        remaining.retain(|&k| {
            let p = ps.get(k);
            p.y != top.key && abscissae.contains(&p.x)
        });
    }
    let mut in_subset = vec![false; ps.len()];
    for &k in &chosen {
        in_subset[k] = true;
    }
    let removed = (0..ps.len()).filter(|&k| !in_subset[k]).collect();
    Ok(CartesianSubset {
        subset: ps.select(&chosen),
        subset_indices: chosen,
        removed,
    })
}

/// Indices of `ps` ordered for the preprocessed run: the points of `sub`
/// by ascending inlex on their `S_x(sub)` index `(i, j)` (taken from
/// `sub_rows`, the row cover of `sub`), followed by the remaining points of
/// `ps` in input order.
pub fn order_points_gpbm<F: Field>(
    ps: &PointSet<F>,
    sub: &PointSet<F>,
    sub_rows: &LineCover<F::Elem>,
) -> Result<Vec<usize>> {
    if sub_rows.axis != Axis::Rows || sub_rows.len() != sub.len() {
        return Err(Error::NotSubset);
    }
    let index: HashMap<&Point<F::Elem>, usize> = ps.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut taken = vec![false; ps.len()];
    let mut order = Vec::with_capacity(ps.len());
    for e in lower_set_of(sub_rows).exponents() {
        let p = sub_rows.point(e);
        let &k = index.get(&p).ok_or(Error::NotSubset)?;
        taken[k] = true;
        order.push(k);
    }
    order.extend((0..ps.len()).filter(|&k| !taken[k]));
    Ok(order)
}
