use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::angle::Angle15;
use crate::exactnum::rat::Rat;
use crate::exactnum::Scalar;

/// An element `a + b*sqrt2 + c*sqrt3 + d*sqrt6` of Q(sqrt2, sqrt3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

fn sign_of(r: &Rat) -> Ordering {
    r.signum()
}

/// u + v*sqrt2, used for the nested sign and inverse computations.
#[derive(Clone)]
struct Q2 {
    u: Rat,
    v: Rat,
}

impl Q2 {
    fn mul(&self, o: &Q2) -> Q2 {
        Q2 {
            u: &self.u * &o.u + (&self.v * &o.v) * rat(2, 1),
            v: &self.u * &o.v + &self.v * &o.u,
        }
    }
    fn sub(&self, o: &Q2) -> Q2 {
        Q2 { u: &self.u - &o.u, v: &self.v - &o.v }
    }
    fn scale(&self, k: &Rat) -> Q2 {
        Q2 { u: &self.u * k, v: &self.v * k }
    }
    fn sign(&self) -> Ordering {
        let su = sign_of(&self.u);
        let sv = sign_of(&self.v);
        if sv == Ordering::Equal || su == sv {
            return su;
        }
        if su == Ordering::Equal {
            return sv;
        }
        // Opposite signs: compare u^2 with 2 v^2.
        let diff = &self.u * &self.u - &self.v * &self.v * rat(2, 1);
        let s = sign_of(&diff);
        if su == Ordering::Greater {
            s
        } else {
            s.reverse()
        }
    }
    fn inverse(&self) -> Option<Q2> {
        let n = &self.u * &self.u - &self.v * &self.v * rat(2, 1);
        if n.is_zero() {
            return None;
        }
        Some(Q2 { u: &self.u / &n, v: -(&self.v / &n) })
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        ExactScalar { a: Rat::from_big(a), b: Rat::from_big(b), c: Rat::from_big(c), d: Rat::from_big(d) }
    }

    /// Components as `(num, den)` pairs of machine integers.
    pub fn from_parts(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        ExactScalar { a: rat(a.0, a.1), b: rat(b.0, b.1), c: rat(c.0, c.1), d: rat(d.0, d.1) }
    }

    pub fn rational(r: BigRational) -> Self {
        ExactScalar { a: Rat::from_big(r), ..Default::default() }
    }

    pub fn int(n: i64) -> Self {
        ExactScalar { a: Rat::int(n), ..Default::default() }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExactScalar { a: rat(n, d), ..Default::default() }
    }

    pub fn sqrt2() -> Self {
        ExactScalar { b: rat(1, 1), ..Default::default() }
    }

    pub fn sqrt3() -> Self {
        ExactScalar { c: rat(1, 1), ..Default::default() }
    }

    pub fn sqrt6() -> Self {
        ExactScalar { d: rat(1, 1), ..Default::default() }
    }

    pub fn components(&self) -> [BigRational; 4] {
        [self.a.to_big(), self.b.to_big(), self.c.to_big(), self.d.to_big()]
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn split3(&self) -> (Q2, Q2) {
        (
            Q2 { u: self.a.clone(), v: self.b.clone() },
            Q2 { u: self.c.clone(), v: self.d.clone() },
        )
    }

    fn join3(p: Q2, q: Q2) -> Self {
        ExactScalar { a: p.u, b: p.v, c: q.u, d: q.v }
    }

    /// Exact sign, decided by nested squaring.
    pub fn sign(&self) -> Ordering {
        let (p, q) = self.split3();
        let sp = p.sign();
        let sq = q.sign();
        if sq == Ordering::Equal || sp == sq {
            return sp;
        }
        if sp == Ordering::Equal {
            return sq;
        }
        // Opposite signs: compare P^2 with 3 Q^2 inside Q(sqrt2).
        let diff = p.mul(&p).sub(&q.mul(&q).scale(&rat(3, 1)));
        let s = diff.sign();
        if sp == Ordering::Greater {
            s
        } else {
            s.reverse()
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let (p, q) = self.split3();
        // 1/(P + Q sqrt3) = (P - Q sqrt3) / (P^2 - 3 Q^2)
        let n = p.mul(&p).sub(&q.mul(&q).scale(&rat(3, 1)));
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ni = n.inverse().ok_or(Error::DivisionByZero)?;
        let qn = Q2 { u: -q.u.clone(), v: -q.v.clone() };
        Ok(ExactScalar::join3(p.mul(&ni), qn.mul(&ni)))
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rat| r.to_f64();
        f(&self.a)
            + f(&self.b) * std::f64::consts::SQRT_2
            + f(&self.c) * 3f64.sqrt()
            + f(&self.d) * 6f64.sqrt()
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn cos(angle: Angle15) -> Self {
        angle.cos()
    }

    pub fn sin(angle: Angle15) -> Self {
        angle.sin()
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::from_big(BigRational::new(n, d)))
        }
        None => Ok(Rat::from_big(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))),
    }
}

fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, ""), (&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")];
        let mut out = String::new();
        for (r, unit) in terms {
            if r.is_zero() {
                continue;
            }
            let neg = r.is_negative();
            let mag = r.abs();
            let body = if !unit.is_empty() && mag.is_one() {
                unit.to_string()
            } else {
                format!("{}{}", fmt_rat(&mag), unit)
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactScalar {
    type Err = Error;
    /// Accepts the display form (`"-1/2 + 3√2 - √6"`), a plain rational, or
    /// the JSON object form.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return Ok(serde_json::from_str(t)?);
        }
        let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = ExactScalar::default();
        for term in terms {
            let (coef, slot) = match term.find('√') {
                Some(i) => {
                    let slot = match &term[i + '√'.len_utf8()..] {
                        "2" => &mut out.b,
                        "3" => &mut out.c,
                        "6" => &mut out.d,
                        _ => return Err(Error::Parse(format!("bad term '{term}'"))),
                    };
                    let coef = match term[..i].trim_start_matches('+') {
                        "" => Rat::int(1),
                        "-" => Rat::int(-1),
                        c => parse_rat(c)?,
                    };
                    (coef, slot)
                }
                None => (parse_rat(term.trim_start_matches('+'))?, &mut out.a),
            };
            *slot += coef;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    a: String,
    b: String,
    c: String,
    d: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            a: fmt_rat(&self.a),
            b: fmt_rat(&self.b),
            c: fmt_rat(&self.c),
            d: fmt_rat(&self.d),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        let p = |s: &str| parse_rat(s).map_err(D::Error::custom);
        Ok(ExactScalar { a: p(&r.a)?, b: p(&r.b)?, c: p(&r.c)?, d: p(&r.d)? })
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, o: &Self) -> Ordering {
        (self - o).sign()
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

/// Sum of the products `x * y * k` over the pairs with both factors nonzero.
fn dot(terms: &[(&Rat, &Rat, i64)]) -> Rat {
    let mut acc = Rat::default();
    for &(x, y, k) in terms {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let p = x * y;
        if k == 1 {
            acc += p;
        } else {
            acc += p * Rat::int(k);
        }
    }
    acc
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if o.is_rational() {
            let k = &o.a;
            return ExactScalar { a: &self.a * k, b: &self.b * k, c: &self.c * k, d: &self.d * k };
        }
        if self.is_rational() {
            return o * self;
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        ExactScalar {
            a: dot(&[(a, e, 1), (b, f, 2), (c, g, 3), (d, h, 6)]),
            b: dot(&[(a, f, 1), (b, e, 1), (c, h, 3), (d, g, 3)]),
            c: dot(&[(a, g, 1), (c, e, 1), (b, h, 2), (d, f, 2)]),
            d: dot(&[(a, h, 1), (d, e, 1), (b, g, 1), (c, f, 1)]),
        }
    }
}

impl<'a> Neg for &'a ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero; use [`ExactScalar::inverse`] to handle it.
    fn div(self, o: &ExactScalar) -> ExactScalar {
        self * &o.inverse().expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar { $tr::$m(&self, &o) }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar { $tr::$m(&self, o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Scalar for ExactScalar {
    const EXACT: bool = true;

    fn zero() -> Self {
        ExactScalar::default()
    }
    fn one() -> Self {
        ExactScalar::int(1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ExactScalar::ratio(num, den)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        x.clone()
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inverse()?)
    }
    fn signum(&self) -> Ordering {
        self.sign()
    }
    fn to_f64(&self) -> f64 {
        ExactScalar::to_f64(self)
    }
    fn unit_vector(num: i64, den: i64) -> Option<(Self, Self)> {
        if den == 0 || (24 * num) % den != 0 {
            return None;
        }
        let a = Angle15::new((24 * num / den) as i32);
        Some((a.cos(), a.sin()))
    }
    fn key(&self) -> String {
        format!("{},{},{},{}", fmt_rat(&self.a), fmt_rat(&self.b), fmt_rat(&self.c), fmt_rat(&self.d))
    }
}
