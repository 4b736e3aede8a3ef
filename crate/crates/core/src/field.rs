//! Exact coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`], a context object
//! that owns the arithmetic for its element type. Two implementations exist:
//! [`PrimeField`] (canonical residues in `[0, p)` stored in a `u64`, `p < 2^31`)
//! and [`Rationals`] (reduced big-integer fractions). [`FieldSpec`] is the
//! runtime-selected variant parsed from `"q:<p>"` / `"rational"`.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    /// Field element. `Ord` is the "representative" order used for every
    /// deterministic tie-break: residues by canonical integer, rationals by value.
    type Elem: Clone + Debug + Display + Eq + Ord + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Canonical element for `num / den`.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    /// Whether `a` is in canonical form for this context.
    fn is_canonical(&self, a: &Self::Elem) -> bool;

    fn spec(&self) -> FieldSpec;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_ratio(&BigInt::from(v), &BigInt::one())
            .expect("unit denominator")
    }

    /// `acc -= a * b`, the inner step of every row reduction.
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(a, b));
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Parses `"a"` or `"a/b"` with decimal (possibly signed) integers.
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let (num, den) = parse_fraction(s)?;
        self.from_ratio(&num, &den)
    }
}

fn parse_fraction(s: &str) -> Result<(BigInt, BigInt)> {
    let s = s.trim();
    let bad = || Error::BadLiteral(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(n).map_err(|_| bad())?;
    let den = BigInt::from_str(d).map_err(|_| bad())?;
    Ok((num, den))
}

/// Deterministic trial division; callers bound `n` below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_signed(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let n = self.reduce_signed(num);
        let d = self.reduce_signed(den);
        self.div(&n, &d)
    }

    #[inline]
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        let prod = a * b % self.p;
        *acc = self.sub(acc, &prod);
    }

    fn is_canonical(&self, a: &u64) -> bool {
        *a < self.p
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(*self)
    }
}

/// The rational numbers ℚ over arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn sub_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if !a.is_zero() && !b.is_zero() {
            *acc -= a * b;
        }
    }

    fn is_canonical(&self, a: &BigRational) -> bool {
        a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
}

/// Runtime field selection, written `"q:<p>"` or `"rational"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(PrimeField),
    Rational,
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("q:")
            .ok_or_else(|| Error::BadSpec(s.to_string()))?;
        if digits.starts_with('-') {
            return Err(Error::NotPrime(digits.to_string()));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::BadSpec(s.to_string()))?;
        Ok(FieldSpec::Prime(PrimeField::new(p)?))
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(fp) => write!(f, "q:{}", fp.modulus()),
            FieldSpec::Rational => f.write_str("rational"),
        }
    }
}

/// Parses a field spec string into a validated context.
pub fn make_field(spec: &str) -> Result<FieldSpec> {
    spec.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

impl ArithOp {
    fn name(self) -> &'static str {
        match self {
            ArithOp::Add => "add",
            ArithOp::Sub => "sub",
            ArithOp::Mul => "mul",
            ArithOp::Div => "div",
            ArithOp::Inv => "inv",
            ArithOp::Neg => "neg",
        }
    }
}

/// Applies `op` to `a` (and `b` for binary operations) in `field`.
pub fn arith<F: Field>(field: &F, op: ArithOp, a: &F::Elem, b: Option<&F::Elem>) -> Result<F::Elem> {
    let rhs = || b.ok_or(Error::MissingOperand(op.name()));
    Ok(match op {
        ArithOp::Add => field.add(a, rhs()?),
        ArithOp::Sub => field.sub(a, rhs()?),
        ArithOp::Mul => field.mul(a, rhs()?),
        ArithOp::Div => field.div(a, rhs()?)?,
        ArithOp::Inv => field.inv(a)?,
        ArithOp::Neg => field.neg(a),
    })
}
