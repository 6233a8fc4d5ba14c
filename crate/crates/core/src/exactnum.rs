//! Exact scalars: arbitrary-precision rationals and sparse multivariate
//! polynomials in the fixed deformation parameters `e1`, `e2`, `s`, `lambda`.
//!
//! Every structure constant, cocycle value and curve invariant in this crate
//! is a [`ParamPolynomial`]; specializing a family means substituting into
//! these polynomials, never re-deriving a bracket table.  All arithmetic is
//! exact over the rationals — there is no floating point anywhere.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number.  Always stored reduced, denominator positive,
/// zero as `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`.  Panics if `den == 0`; use [`Rational::from_str`] for
    /// fallible construction from text.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub(crate) fn as_big(&self) -> &BigRational {
        &self.0
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p` or `p/q` with optional sign, e.g. `-3/2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_str).map_err(|_| bad())?;
        let den = BigInt::from_str(den_str).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// The closed set of parameter names.  `e1`, `e2` are the branch points of
/// the two-parameter family, `s` fixes a line through the origin, and
/// `lambda` carries the rescaling with `e1 = lambda^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    E1,
    E2,
    S,
    Lambda,
}

pub const PARAM_COUNT: usize = 4;

impl Param {
    pub const ALL: [Param; PARAM_COUNT] = [Param::E1, Param::E2, Param::S, Param::Lambda];

    pub fn index(self) -> usize {
        match self {
            Param::E1 => 0,
            Param::E2 => 1,
            Param::S => 2,
            Param::Lambda => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::E1 => "e1",
            Param::E2 => "e2",
            Param::S => "s",
            Param::Lambda => "lambda",
        }
    }

    pub fn from_name(name: &str) -> Result<Param> {
        match name {
            "e1" => Ok(Param::E1),
            "e2" => Ok(Param::E2),
            "s" => Ok(Param::S),
            "lambda" => Ok(Param::Lambda),
            other => Err(Error::UnknownParameter(other.to_string())),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product of the fixed parameters.  The exponent vector is the
/// canonical form; a zero exponent just means the parameter is absent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u32; PARAM_COUNT],
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: [0; PARAM_COUNT] }
    }

    pub fn var(p: Param, exp: u32) -> Self {
        let mut exps = [0; PARAM_COUNT];
        exps[p.index()] = exp;
        Monomial { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, p: Param) -> u32 {
        self.exps[p.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for i in 0..PARAM_COUNT {
            exps[i] += other.exps[i];
        }
        Monomial { exps }
    }

    fn with_exponent(&self, p: Param, exp: u32) -> Monomial {
        let mut exps = self.exps;
        exps[p.index()] = exp;
        Monomial { exps }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Param, u32)> + '_ {
        Param::ALL
            .iter()
            .copied()
            .map(move |p| (p, self.exps[p.index()]))
            .filter(|&(_, e)| e > 0)
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic order: total degree first, then exponents with
    /// `e1` most significant.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, e) in self.exponents() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", p)?;
            } else {
                write!(f, "{}^{}", p, e)?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial over [`Rational`] in the fixed parameters.
///
/// Invariants: no stored coefficient is zero and monomial keys are the
/// canonical exponent vectors, so term-map equality is polynomial equality
/// and the stored form is independent of construction order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPolynomial {
    pub fn zero() -> Self {
        ParamPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        ParamPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = ParamPolynomial::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        ParamPolynomial::constant(Rational::from_int(n))
    }

    pub fn var(p: Param) -> Self {
        ParamPolynomial::var_pow(p, 1)
    }

    pub fn var_pow(p: Param, exp: u32) -> Self {
        let mut poly = ParamPolynomial::zero();
        poly.add_term(Monomial::var(p, exp), Rational::one());
        poly
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn params(&self) -> BTreeSet<Param> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            for (p, _) in m.exponents() {
                set.insert(p);
            }
        }
        set
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPolynomial::zero();
        }
        ParamPolynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_int(n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ParamPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous exact substitution; unbound parameters stay themselves.
    pub fn substitute(&self, bindings: &BTreeMap<Param, ParamPolynomial>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = ParamPolynomial::zero();
        for (m, c) in &self.terms {
            let mut term = ParamPolynomial::constant(c.clone());
            for (p, e) in m.exponents() {
                let factor = match bindings.get(&p) {
                    Some(b) => b.pow(e),
                    None => ParamPolynomial::var_pow(p, e),
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    /// Exact evaluation at a rational point.  Every parameter occurring in
    /// the polynomial must be bound.
    pub fn eval(&self, point: &BTreeMap<Param, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (p, e) in m.exponents() {
                let b = point.get(&p).ok_or(Error::UnboundParameter(p))?;
                val = &val * &b.pow(e);
            }
            total = &total + &val;
        }
        Ok(total)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, p: Param) -> Self {
        let mut out = ParamPolynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(p);
            if e > 0 {
                out.add_term(m.with_exponent(p, e - 1), c * &Rational::from_int(e as i64));
            }
        }
        out
    }

    /// Coefficient of the pure monomial `p^1` (all other exponents zero),
    /// i.e. the linear part of the polynomial in `p` at the origin.
    pub fn linear_part_at_origin(&self, p: Param) -> Rational {
        let key = Monomial::var(p, 1);
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact division by `p^exp`; `None` unless every term is divisible.
    pub fn try_div_monomial(&self, p: Param, exp: u32) -> Option<Self> {
        let mut out = ParamPolynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(p);
            if e < exp {
                return None;
            }
            out.add_term(m.with_exponent(p, e - exp), c.clone());
        }
        Some(out)
    }

    /// Componentwise minimum of all exponent vectors — the largest monomial
    /// dividing every term.  Unit monomial for the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let first = match iter.next() {
            Some(m) => *m,
            None => return Monomial::unit(),
        };
        let mut exps = first.exps;
        for m in iter {
            for i in 0..PARAM_COUNT {
                exps[i] = exps[i].min(m.exps[i]);
            }
        }
        Monomial { exps }
    }

    /// Exact division by a monomial known to divide every term.
    pub(crate) fn div_monomial(&self, m: &Monomial) -> Self {
        let mut out = self.clone();
        for (p, e) in m.exponents() {
            out = out.try_div_monomial(p, e).expect("monomial divides");
        }
        out
    }

    /// Coefficient of the graded-lex leading term; zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }
}

impl From<Rational> for ParamPolynomial {
    fn from(c: Rational) -> Self {
        ParamPolynomial::constant(c)
    }
}

impl Add<&ParamPolynomial> for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn add(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&ParamPolynomial> for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn sub(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&ParamPolynomial> for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn mul(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = ParamPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(self) -> ParamPolynomial {
        ParamPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for ParamPolynomial {
    /// Terms in descending graded-lex order, e.g. `2*e1^2 - e1*e2 - e2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

struct MonomialMap<'a>(&'a Monomial);

impl Serialize for MonomialMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<(Param, u32)> = self.0.exponents().collect();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (p, e) in entries {
            map.serialize_entry(p.name(), &e)?;
        }
        map.end()
    }
}

impl Serialize for ParamPolynomial {
    /// The shared report schema: a list of `{monomial, coeff}` records in
    /// descending graded-lex order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            #[derive(Serialize)]
            struct Term<'a> {
                monomial: MonomialMap<'a>,
                coeff: &'a Rational,
            }
            seq.serialize_element(&Term { monomial: MonomialMap(m), coeff: c })?;
        }
        seq.end()
    }
}

// Keep the struct-serialize import used even when reports move elsewhere.
#[allow(unused)]
fn _schema_marker<S: Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
    let st = s.serialize_struct("_", 0)?;
    st.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> ParamPolynomial {
        ParamPolynomial::var(Param::E1)
    }

    fn e2() -> ParamPolynomial {
        ParamPolynomial::var(Param::E2)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&e1() + &e2()) * &(&e1() - &e2());
        let rhs = &e1().pow(2) - &e2().pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let p = &(&e1() * &e2()).scale(&Rational::new(5, 3)) - &e2().pow(3);
        assert_eq!(&p + &ParamPolynomial::zero(), p);
    }

    #[test]
    fn hand_expansion() {
        // (e1-e2)(2e1+e2) = 2e1^2 - e1e2 - e2^2
        let p = &(&e1() - &e2()) * &(&e1().scale_int(2) + &e2());
        let mut expected = ParamPolynomial::zero();
        expected.add_term(Monomial::var(Param::E1, 2), Rational::from_int(2));
        expected.add_term(
            Monomial::var(Param::E1, 1).mul(&Monomial::var(Param::E2, 1)),
            Rational::from_int(-1),
        );
        expected.add_term(Monomial::var(Param::E2, 2), Rational::from_int(-1));
        assert_eq!(p, expected);
    }

    #[test]
    fn substitute_ds_line() {
        // e2 <- s*e1 in (e1-e2)(2e1+e2) gives e1^2 (1-s)(2+s), expanded.
        let p = &(&e1() - &e2()) * &(&e1().scale_int(2) + &e2());
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, &ParamPolynomial::var(Param::S) * &e1());
        let got = p.substitute(&bind);

        let s = ParamPolynomial::var(Param::S);
        let want = &e1().pow(2)
            * &(&(&ParamPolynomial::one() - &s) * &(&ParamPolynomial::from_int(2) + &s));
        assert_eq!(got, want);
    }

    #[test]
    fn substitute_zero() {
        let p = e1().scale_int(3);
        let mut bind = BTreeMap::new();
        bind.insert(Param::E1, ParamPolynomial::zero());
        bind.insert(Param::E2, ParamPolynomial::zero());
        assert!(p.substitute(&bind).is_zero());
    }

    #[test]
    fn substitute_curve_c() {
        // e2 <- 2 e1^2: (e1-2e1^2)(2e1+2e1^2) = 2 e1^2 (1-2e1)(1+e1)
        let p = &(&e1() - &e2()) * &(&e1().scale_int(2) + &e2());
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, e1().pow(2).scale_int(2));
        let got = p.substitute(&bind);
        let want = &e1().pow(2).scale_int(2)
            * &(&(&ParamPolynomial::one() - &e1().scale_int(2))
                * &(&ParamPolynomial::one() + &e1()));
        assert_eq!(got, want);
    }

    #[test]
    fn eval_examples() {
        // e1^2 (1-s)(2+s) at e1=1, s=0 -> 2
        let s = ParamPolynomial::var(Param::S);
        let p = &e1().pow(2)
            * &(&(&ParamPolynomial::one() - &s) * &(&ParamPolynomial::from_int(2) + &s));
        let mut pt = BTreeMap::new();
        pt.insert(Param::E1, Rational::one());
        pt.insert(Param::S, Rational::zero());
        assert_eq!(p.eval(&pt).unwrap(), Rational::from_int(2));

        // constant 5/3 anywhere
        let c = ParamPolynomial::constant(Rational::new(5, 3));
        assert_eq!(c.eval(&BTreeMap::new()).unwrap(), Rational::new(5, 3));

        // (e1-e2)(2e1+e2) at (1,2) -> -4
        let q = &(&e1() - &e2()) * &(&e1().scale_int(2) + &e2());
        let mut pt = BTreeMap::new();
        pt.insert(Param::E1, Rational::one());
        pt.insert(Param::E2, Rational::from_int(2));
        assert_eq!(q.eval(&pt).unwrap(), Rational::from_int(-4));
    }

    #[test]
    fn eval_unbound_is_an_error() {
        let p = e1();
        assert_eq!(
            p.eval(&BTreeMap::new()),
            Err(Error::UnboundParameter(Param::E1))
        );
    }

    #[test]
    fn rational_parse_display_round_trip() {
        for s in ["0", "5", "-7", "5/3", "-22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn display_descending_grlex() {
        let p = &(&e1() - &e2()) * &(&e1().scale_int(2) + &e2());
        assert_eq!(p.to_string(), "2*e1^2 - e1*e2 - e2^2");
        assert_eq!(ParamPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_schema_shape() {
        let p = &e1().scale_int(2) - &ParamPolynomial::constant(Rational::new(1, 2));
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"monomial": {"e1": 1}, "coeff": "2"},
                {"monomial": {}, "coeff": "-1/2"}
            ])
        );
    }

    #[test]
    fn derivative_and_linear_part() {
        let s = ParamPolynomial::var(Param::S);
        let p = &(&e1().pow(2) * &s) + &e1().scale_int(3);
        assert_eq!(
            p.derivative(Param::E1),
            &(&e1().scale_int(2) * &s) + &ParamPolynomial::from_int(3)
        );
        assert_eq!(p.linear_part_at_origin(Param::E1), Rational::from_int(3));
        assert_eq!(p.linear_part_at_origin(Param::S), Rational::zero());
    }

    #[test]
    fn monomial_division() {
        let lam = ParamPolynomial::var(Param::Lambda);
        let p = &lam.pow(4) * &ParamPolynomial::from_int(3);
        assert_eq!(
            p.try_div_monomial(Param::Lambda, 4).unwrap(),
            ParamPolynomial::from_int(3)
        );
        assert!(ParamPolynomial::one().try_div_monomial(Param::Lambda, 1).is_none());
    }
}
