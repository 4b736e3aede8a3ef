//! Sparse bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::{Exponent, TermOrder};

/// A polynomial in `x, y` over `F`, stored as a map from exponent to nonzero
/// coefficient. Term order only matters when asking for a leading term or a
/// rendering, so it is supplied at those call sites.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    terms: BTreeMap<Exponent, F::Elem>,
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(TermOrder::Tdinlex))
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F) -> Self {
        Self {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::monomial(field, Exponent::ONE, c)
    }

    pub fn monomial(field: &F, e: Exponent, c: F::Elem) -> Self {
        let mut p = Self::zero(field);
        if !field.is_zero(&c) {
            p.terms.insert(e, c);
        }
        p
    }

    /// Builds a polynomial from (possibly repeated, possibly zero) terms.
    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (Exponent, F::Elem)>) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> Option<&F::Elem> {
        self.terms.get(&e)
    }

    pub fn support(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.terms.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Exponent, &F::Elem)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms sorted descending under `order`.
    pub fn terms_desc(&self, order: TermOrder) -> Vec<(Exponent, &F::Elem)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, e: Exponent, c: &F::Elem) {
        if self.field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old = self.field.add(old, c);
                if self.field.is_zero(old) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn leading_term(&self, order: TermOrder) -> Result<(Exponent, F::Elem)> {
        self.iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(e, c)| (e, c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Result<Exponent> {
        self.leading_term(order).map(|(e, _)| e)
    }

    pub fn eval(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.field;
        let (mut max_i, mut max_j) = (0, 0);
        for e in self.terms.keys() {
            max_i = max_i.max(e.i);
            max_j = max_j.max(e.j);
        }
        let xs = powers(f, x, max_i);
        let ys = powers(f, y, max_j);
        self.iter().fold(f.zero(), |acc, (e, c)| {
            let m = f.mul(&xs[e.i as usize], &ys[e.j as usize]);
            f.add(&acc, &f.mul(c, &m))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field);
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, self.field.mul(v, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Exponent) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.times(m), c.clone())).collect(),
        }
    }

    pub fn make_monic(&self, order: TermOrder) -> Result<Self> {
        let (_, lc) = self.leading_term(order)?;
        Ok(self.scale(&self.field.inv(&lc)?))
    }

    /// Renders as e.g. `2x^3+x^2+4x`, terms descending under `order`.
    pub fn display(&self, order: TermOrder) -> PolyDisplay<'_, F> {
        PolyDisplay { poly: self, order }
    }

    /// `[i, j, "coeff"]` triples descending under `order`.
    pub fn to_triples(&self, order: TermOrder) -> Vec<(u32, u32, String)> {
        self.terms_desc(order)
            .into_iter()
            .map(|(e, c)| (e.i, e.j, c.to_string()))
            .collect()
    }

    pub fn from_triples(field: &F, triples: &[(u32, u32, String)]) -> Result<Self> {
        let mut p = Self::zero(field);
        for (i, j, c) in triples {
            p.add_term(Exponent::new(*i, *j), &field.parse(c)?);
        }
        Ok(p)
    }
}

pub(crate) fn powers<F: Field>(f: &F, base: &F::Elem, max: u32) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(f.one());
    for k in 0..max as usize {
        out.push(f.mul(&out[k], base));
    }
    out
}

pub struct PolyDisplay<'a, F: Field> {
    poly: &'a Polynomial<F>,
    order: TermOrder,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms_desc(self.order);
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let s = c.to_string();
            let (negative, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, s.as_str()),
            };
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if e == Exponent::ONE {
                f.write_str(mag)?;
            } else {
                if mag.contains('/') {
                    write!(f, "({mag})")?;
                } else if mag != "1" {
                    f.write_str(mag)?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn e(i: u32, j: u32) -> Exponent {
        Exponent::new(i, j)
    }

    fn q(s: &str) -> BigRational {
        Rationals.parse(s).unwrap()
    }

    fn rat_poly(terms: &[(u32, u32, &str)]) -> Polynomial<Rationals> {
        Polynomial::from_terms(&Rationals, terms.iter().map(|(i, j, c)| (e(*i, *j), q(c))))
    }

    #[test]
    fn leading_term_examples() {
        // xy^2 - y^2 + 1/2 x^2 y - 9/2 xy + 4y - 1/2 x^2 + 7/2 x - 3
        let g = rat_poly(&[
            (1, 2, "1"),
            (0, 2, "-1"),
            (2, 1, "1/2"),
            (1, 1, "-9/2"),
            (0, 1, "4"),
            (2, 0, "-1/2"),
            (1, 0, "7/2"),
            (0, 0, "-3"),
        ]);
        assert_eq!(g.leading_term(TermOrder::Inlex).unwrap(), (e(1, 2), q("1")));

        let c = Polynomial::constant(&Rationals, q("5"));
        for o in TermOrder::ALL {
            assert_eq!(c.leading_term(o).unwrap(), (e(0, 0), q("5")));
        }

        // x^3 - 13/2 x^2 - 3xy^2 + ...
        let g = rat_poly(&[
            (3, 0, "1"),
            (2, 0, "-13/2"),
            (1, 2, "-3"),
            (1, 1, "6"),
            (1, 0, "10"),
            (0, 3, "-15/4"),
        ]);
        assert_eq!(g.leading_term(TermOrder::Lex).unwrap(), (e(3, 0), q("1")));
        assert_eq!(Polynomial::zero(&Rationals).leading_term(TermOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let p = Polynomial::from_terms(&f7, [(e(2, 0), 4), (e(1, 0), 3)]);
        assert_eq!(p.eval(&2, &1), 1);
        let p = rat_poly(&[(2, 1, "1")]);
        assert_eq!(p.eval(&q("3"), &q("2")), q("18"));
        let one = Polynomial::constant(&f7, 1);
        assert_eq!(one.eval(&5, &6), 1);
    }

    #[test]
    fn ops_examples() {
        let r = Rationals;
        let a = rat_poly(&[(1, 0, "1"), (0, 0, "1")]);
        let b = rat_poly(&[(1, 0, "-1")]);
        assert_eq!(a.add(&b), Polynomial::constant(&r, q("1")));

        let f7 = PrimeField::new(7).unwrap();
        let p = Polynomial::from_terms(&f7, [(e(0, 3), 2), (e(0, 1), 5)]);
        let m = p.make_monic(TermOrder::Inlex).unwrap();
        assert_eq!(m, Polynomial::from_terms(&f7, [(e(0, 3), 1), (e(0, 1), 6)]));
        assert_eq!(Polynomial::zero(&f7).make_monic(TermOrder::Lex), Err(Error::ZeroPolynomial));

        let yp1 = rat_poly(&[(0, 1, "1"), (0, 0, "1")]);
        assert_eq!(yp1.mul_monomial(e(1, 0)), rat_poly(&[(1, 1, "1"), (1, 0, "1")]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn rendering() {
        let f7 = PrimeField::new(7).unwrap();
        let p = Polynomial::from_terms(&f7, [(e(3, 0), 2), (e(2, 0), 1), (e(1, 0), 4)]);
        assert_eq!(p.display(TermOrder::Lex).to_string(), "2x^3+x^2+4x");
        let p = rat_poly(&[(0, 3, "1/8"), (0, 2, "-5/8"), (0, 1, "3/4"), (0, 0, "-1")]);
        assert_eq!(p.display(TermOrder::Lex).to_string(), "(1/8)y^3-(5/8)y^2+(3/4)y-1");
        assert_eq!(Polynomial::zero(&f7).display(TermOrder::Lex).to_string(), "0");
        let p = rat_poly(&[(1, 0, "-1"), (0, 0, "1")]);
        assert_eq!(p.display(TermOrder::Inlex).to_string(), "-x+1");
        assert_eq!(
            p.to_triples(TermOrder::Lex),
            vec![(1, 0, "-1".to_string()), (0, 0, "1".to_string())]
        );
        assert_eq!(Polynomial::from_triples(&Rationals, &p.to_triples(TermOrder::Lex)).unwrap(), p);
    }

    fn poly17() -> impl Strategy<Value = Polynomial<PrimeField>> {
        prop::collection::vec((0u32..5, 0u32..5, 0u64..17), 0..8).prop_map(|ts| {
            let f = PrimeField::new(17).unwrap();
            Polynomial::from_terms(&f, ts.into_iter().map(|(i, j, c)| (Exponent::new(i, j), c)))
        })
    }

    proptest! {
        #[test]
        fn eval_is_a_homomorphism(p in poly17(), r in poly17(), x in 0u64..17, y in 0u64..17, c in 0u64..17, i in 0u32..4, j in 0u32..4) {
            let f = PrimeField::new(17).unwrap();
            prop_assert_eq!(p.add(&r).eval(&x, &y), f.add(&p.eval(&x, &y), &r.eval(&x, &y)));
            prop_assert_eq!(p.scale(&c).eval(&x, &y), f.mul(&c, &p.eval(&x, &y)));
            let m = f.mul(&f.pow(&x, i), &f.pow(&y, j));
            prop_assert_eq!(p.mul_monomial(Exponent::new(i, j)).eval(&x, &y), f.mul(&m, &p.eval(&x, &y)));
        }

        #[test]
        fn monic_has_unit_leading_coefficient(p in poly17(), oi in 0usize..3) {
            let o = TermOrder::ALL[oi];
            prop_assume!(!p.is_zero());
            let m = p.make_monic(o).unwrap();
            let (lm, lc) = m.leading_term(o).unwrap();
            prop_assert_eq!(lc, 1);
            prop_assert_eq!(lm, p.leading_monomial(o).unwrap());
        }
    }
}
