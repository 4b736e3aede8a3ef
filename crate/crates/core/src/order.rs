//! Bivariate exponents and the three supported term orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent {
    pub i: u32,
    pub j: u32,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { i: 0, j: 0 };

    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }

    pub fn degree(self) -> u32 {
        self.i + self.j
    }

    /// `self | other` as monomials.
    pub fn divides(self, other: Exponent) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn times(self, other: Exponent) -> Exponent {
        Exponent::new(self.i + other.i, self.j + other.j)
    }

    pub fn times_x(self) -> Exponent {
        Exponent::new(self.i + 1, self.j)
    }

    pub fn times_y(self) -> Exponent {
        Exponent::new(self.i, self.j + 1)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => f.write_str("1"),
            (i, j) => {
                let var = |f: &mut fmt::Formatter<'_>, v: &str, e: u32| match e {
                    0 => Ok(()),
                    1 => f.write_str(v),
                    e => write!(f, "{v}^{e}"),
                };
                var(f, "x", i)?;
                var(f, "y", j)
            }
        }
    }
}

/// Term orders on bivariate monomials.
///
/// * `Lex`: x-exponent first, then y-exponent.
/// * `Inlex`: y-exponent first, then x-exponent.
/// * `Tdinlex`: total degree first; within a degree the larger x-exponent is
///   the larger monomial, so `y^4 < x y^3 < ... < x^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    Inlex,
    Tdinlex,
}

impl TermOrder {
    pub const ALL: [TermOrder; 3] = [TermOrder::Lex, TermOrder::Inlex, TermOrder::Tdinlex];

    pub fn cmp(self, a: Exponent, b: Exponent) -> Ordering {
        match self {
            TermOrder::Lex => (a.i, a.j).cmp(&(b.i, b.j)),
            TermOrder::Inlex => (a.j, a.i).cmp(&(b.j, b.i)),
            TermOrder::Tdinlex => (a.degree(), a.i).cmp(&(b.degree(), b.i)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Inlex => "inlex",
            TermOrder::Tdinlex => "tdinlex",
        }
    }

    /// Sorts ascending under this order.
    pub fn sort(self, exps: &mut [Exponent]) {
        exps.sort_by(|a, b| self.cmp(*a, *b));
    }
}

/// Free-function form of [`TermOrder::cmp`].
pub fn cmp_exponents(order: TermOrder, a: Exponent, b: Exponent) -> Ordering {
    order.cmp(a, b)
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "lex" => Ok(TermOrder::Lex),
            "inlex" => Ok(TermOrder::Inlex),
            "tdinlex" => Ok(TermOrder::Tdinlex),
            other => Err(Error::UnknownOrder(other.to_string())),
        }
    }
}
