//! Univariate polynomials and rational functions in the grading variable `q`.
//!
//! [`RatFunc`] values are always kept reduced with a monic denominator, so
//! structural equality is mathematical equality. Laurent monomials such as
//! `q^-2` are represented as `1 / q^2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Fraction, Scalar};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `q^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn q() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// Builds a polynomial from integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = F::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(q^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "q^0 substitution collapses the grading");
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![F::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `p(q + c)` by Horner's scheme.
    pub fn taylor_shift(&self, c: &F) -> Self {
        let lin = Self::new(vec![c.clone(), F::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| &(&acc * &lin) + &Self::constant(a.clone()))
    }

    /// Coefficients reversed with respect to degree `d`: `q^d p(1/q)`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![F::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= d, "reversal degree below polynomial degree");
            coeffs[d - i] = c.clone();
        }
        Self::new(coeffs)
    }
}

impl<F: Scalar> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<F: Scalar> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<F: Scalar> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Arithmetic operation selector for [`RatFunc::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Substitutions for the grading variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution<F> {
    /// `q -> 1/q`
    QInverse,
    /// `q -> q + c`
    QShift(F),
    /// `q -> q^k`, `k >= 1`
    QPower(usize),
}

impl<F: Scalar> Substitution<F> {
    pub fn q_plus_one() -> Self {
        Substitution::QShift(F::one())
    }

    pub fn q_minus_one() -> Self {
        Substitution::QShift(-F::one())
    }
}

impl<F: Scalar> RatFunc<F> {
    /// Reduces `num / den`; fails when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (mut den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc = den.leading().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = F::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(F::from_int(c))
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(F::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly<F>> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Same value, rebuilt from scratch through [`RatFunc::new`].
    pub fn normalized(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone()).expect("stored denominator is nonzero")
    }

    pub fn arith(&self, rhs: &Self, op: Op) -> Result<Self> {
        match op {
            Op::Add => Ok(self + rhs),
            Op::Sub => Ok(self - rhs),
            Op::Mul => Ok(self * rhs),
            Op::Div => self.checked_div(rhs),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn substitute(&self, sub: &Substitution<F>) -> Self {
        match sub {
            Substitution::QInverse => {
                let dn = self.num.degree().unwrap_or(0);
                let dd = self.den.degree().unwrap_or(0);
                let num = self.num.reversed(dn).shift_up(dd);
                let den = self.den.reversed(dd).shift_up(dn);
                Self::new(num, den).expect("reversed denominator is nonzero")
            }
            Substitution::QShift(c) => {
                Self::new(self.num.taylor_shift(c), self.den.taylor_shift(c))
                    .expect("shifted denominator is nonzero")
            }
            Substitution::QPower(k) => {
                Self::new(self.num.compose_power(*k), self.den.compose_power(*k))
                    .expect("composed denominator is nonzero")
            }
        }
    }

    /// Value at `q = r`; the reduced form is evaluated, so removable
    /// singularities are not poles.
    pub fn eval(&self, r: &F) -> Result<F> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::Pole(format!("{r}")));
        }
        Ok(self.num.eval(r) / d)
    }
}

impl<F: Scalar> From<Poly<F>> for RatFunc<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Scalar> Add for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: Self) -> RatFunc<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<F: Scalar> Sub for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: Self) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Mul for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: Self) -> RatFunc<F> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<F: Scalar> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ident, $tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for $t<F> {
            type Output = $t<F>;
            fn $m(self, rhs: Self) -> $t<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Scalar> $tr<&$t<F>> for $t<F> {
            type Output = $t<F>;
            fn $m(self, rhs: &$t<F>) -> $t<F> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Poly, Add, add);
forward_owned!(Poly, Sub, sub);
forward_owned!(Poly, Mul, mul);
forward_owned!(RatFunc, Add, add);
forward_owned!(RatFunc, Sub, sub);
forward_owned!(RatFunc, Mul, mul);

impl<F: Scalar> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

impl<F: Scalar> std::iter::Sum for RatFunc<F> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl<F: Scalar> std::iter::Product for RatFunc<F> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

// Rendering. Numerator and denominator are scaled by one common rational so
// that both have integer coefficients with overall gcd 1 and a positive
// leading denominator coefficient.

fn integer_parts<F: Fraction>(f: &RatFunc<F>) -> (Vec<F::Int>, Vec<F::Int>) {
    let mut lcm = F::Int::one();
    for c in f.num.coeffs().iter().chain(f.den.coeffs()) {
        lcm = lcm.lcm(&c.denom_int());
    }
    let to_int = |c: &F| c.numer_int() * (lcm.clone() / c.denom_int());
    let mut num: Vec<F::Int> = f.num.coeffs().iter().map(to_int).collect();
    let mut den: Vec<F::Int> = f.den.coeffs().iter().map(to_int).collect();
    let mut g = F::Int::zero();
    for c in num.iter().chain(den.iter()) {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c = c.clone() / g.clone();
        }
    }
    (num, den)
}

fn write_int_poly<I: Integer + num_traits::Signed + Clone + fmt::Display>(
    out: &mut String,
    coeffs: &[I],
) {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        first = false;
        let var = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{a}*{var}"));
        }
    }
    if first {
        out.push('0');
    }
}

impl<F: Fraction> RatFunc<F> {
    /// Canonical `"(num)/(den)"` string used on the wire.
    pub fn to_wire(&self) -> String {
        let (num, den) = integer_parts(self);
        let mut s = String::from("(");
        write_int_poly(&mut s, &num);
        s.push_str(")/(");
        write_int_poly(&mut s, &den);
        s.push(')');
        s
    }

    /// Compact human form: polynomials without the `/(1)` suffix.
    pub fn to_plain(&self) -> String {
        let (num, den) = integer_parts(self);
        let mut s = String::new();
        write_int_poly(&mut s, &num);
        if den.len() == 1 && den[0].is_one() {
            return s;
        }
        let mut d = String::new();
        write_int_poly(&mut d, &den);
        format!("({s})/({d})")
    }

    pub fn to_latex(&self) -> String {
        let (num, den) = integer_parts(self);
        let mut s = String::new();
        write_int_poly(&mut s, &num);
        let s = latexify(&s);
        if den.len() == 1 && den[0].is_one() {
            return s;
        }
        let mut d = String::new();
        write_int_poly(&mut d, &den);
        format!("\\frac{{{s}}}{{{}}}", latexify(&d))
    }
}

fn latexify(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut exp = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            _ => out.push(c),
        }
    }
    out
}

impl<F: Fraction> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

fn parse_poly<F: Scalar>(s: &str) -> Result<Poly<F>> {
    let bad = || Error::Parse(format!("malformed polynomial '{s}'"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || !compact.is_ascii() {
        return Err(bad());
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && !(i > 0 && compact[..i].ends_with('^')) {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if i != 0 {
                return Err(bad());
            }
            neg = c == '-';
        } else {
            cur.push(c);
        }
    }
    if cur.is_empty() {
        return Err(bad());
    }
    terms.push((neg, cur));

    let parse_int = |t: &str| -> Result<F> {
        let (a, b) = match t.split_once('/') {
            Some((a, b)) => (a, b),
            None => (t, "1"),
        };
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        Ok(F::from_int(a) / F::from_int(b))
    };

    let mut acc = Poly::zero();
    for (neg, t) in terms {
        let (coeff, var) = match t.find('q') {
            None => (parse_int(&t)?, None),
            Some(pos) => {
                let c = &t[..pos];
                let c = c.strip_suffix('*').unwrap_or(c);
                let coeff = if c.is_empty() { F::one() } else { parse_int(c)? };
                (coeff, Some(&t[pos + 1..]))
            }
        };
        let k = match var {
            None => 0,
            Some("") => 1,
            Some(rest) => rest
                .strip_prefix('^')
                .and_then(|e| e.parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        let coeff = if neg { -coeff } else { coeff };
        acc = &acc + &Poly::monomial(coeff, k);
    }
    Ok(acc)
}

impl<F: Scalar> FromStr for RatFunc<F> {
    type Err = Error;

    /// Accepts the wire form `"(num)/(den)"` or a bare polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(') {
            if let Some((num, den)) = inner.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("malformed rational function '{s}'")))?;
                return RatFunc::new(parse_poly(num)?, parse_poly(den)?);
            }
        }
        Ok(RatFunc::from_poly(parse_poly(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, QRat, Q};
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn qr(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn common_factor_cancels() {
        let a = QRat::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(a, QRat::from_poly(QPoly::from_ints(&[1, 1])));
        assert!(a.is_polynomial());
    }

    #[test]
    fn inverse_pair() {
        let one_minus_q = QRat::from_poly(QPoly::from_ints(&[1, -1]));
        let inv = one_minus_q.inv().unwrap();
        assert_eq!(&inv * &one_minus_q, QRat::one());
        assert_eq!(inv.denom(), &QPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = QRat::q();
        assert_eq!(&(&q + &QRat::one()) - &QRat::one(), q);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(QRat::one().checked_div(&QRat::zero()), Err(Error::DivisionByZero));
        assert_eq!(QRat::one().arith(&QRat::zero(), Op::Div), Err(Error::DivisionByZero));
        assert!(QRat::new(QPoly::one(), QPoly::zero()).is_err());
    }

    #[test]
    fn q_inverse_of_monomial() {
        let r = qr("q^2").substitute(&Substitution::QInverse);
        assert_eq!(r, QRat::q_pow(-2));
        assert_eq!(r.denom(), &QPoly::monomial(Q::from_int(1), 2));
    }

    #[test]
    fn q_inverse_denominator_is_power_of_q() {
        let r = qr("q^3 + 2*q + 5").substitute(&Substitution::QInverse);
        assert_eq!(r.denom(), &QPoly::monomial(Q::from_int(1), 3));
        assert_eq!(r.numer(), &QPoly::from_ints(&[1, 0, 2, 5]));
    }

    #[test]
    fn q_plus_one_expands() {
        let r = qr("q^2 - 1").substitute(&Substitution::q_plus_one());
        assert_eq!(r, qr("q^2 + 2*q"));
    }

    #[test]
    fn evaluation_after_reduction() {
        let r = QRat::new(QPoly::from_ints(&[-1, 0, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.eval(&Q::from_int(1)).unwrap(), Q::from_int(3));
        let pole = QRat::new(QPoly::one(), QPoly::from_ints(&[-1, 1])).unwrap();
        assert!(matches!(pole.eval(&Q::from_int(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn q_power_substitution() {
        let r = qr("(1)/(1 - q)").substitute(&Substitution::QPower(3));
        assert_eq!(r, qr("(1)/(1 - q^3)"));
    }

    #[test]
    fn wire_format() {
        assert_eq!(qr("q^2 + 2*q").to_wire(), "(q^2 + 2*q)/(1)");
        assert_eq!(QRat::zero().to_wire(), "(0)/(1)");
        assert_eq!(qr("-q + 1").to_wire(), "(-q + 1)/(1)");
        let half = QRat::constant(Ratio::new(1.into(), 2.into()));
        assert_eq!(half.to_wire(), "(1)/(2)");
        let r = QRat::new(QPoly::from_ints(&[1]), QPoly::from_ints(&[1, -1])).unwrap();
        assert_eq!(r.to_wire(), "(-1)/(q - 1)");
        assert_eq!(r.to_latex(), "\\frac{-1}{q - 1}");
        assert_eq!(qr("3*q^2 - q").to_latex(), "3q^{2} - q");
    }

    #[test]
    fn generic_over_i64_ratios() {
        type P = Poly<Ratio<i64>>;
        type R = RatFunc<Ratio<i64>>;
        let a = R::new(P::from_ints(&[-1, 0, 1]), P::from_ints(&[1, 1])).unwrap();
        assert_eq!(a, R::from_poly(P::from_ints(&[-1, 1])));
        assert_eq!(a.to_wire(), "(q - 1)/(1)");
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| QPoly::from_ints(&c))
    }

    fn arb_rat() -> impl Strategy<Value = QRat> {
        (arb_poly(), arb_poly()).prop_map(|(n, d)| {
            let d = if d.is_zero() { QPoly::one() } else { d };
            QRat::new(n, d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn self_subtraction_and_unit(a in arb_rat()) {
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &QRat::one(), a.clone());
        }

        #[test]
        fn q_inverse_is_an_involution(a in arb_rat()) {
            let b = a.substitute(&Substitution::QInverse).substitute(&Substitution::QInverse);
            prop_assert_eq!(b, a);
        }

        #[test]
        fn normalization_is_idempotent(a in arb_rat()) {
            prop_assert_eq!(a.normalized(), a);
        }

        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }

        #[test]
        fn wire_round_trip(a in arb_rat()) {
            let back: QRat = a.to_wire().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
