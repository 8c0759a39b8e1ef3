use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Prime(u64),
    Rationals,
}

/// The base field: GF(p) for a prime p, or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field(Kind);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Mod(u64),
    Rat(Box<BigRational>),
}

/// A field element in canonical form: a residue in `0..p` or a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Value);

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        Ok(Field(Kind::Prime(p)))
    }

    pub fn rationals() -> Field {
        Field(Kind::Rationals)
    }

    /// `Some(p)` for GF(p).
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.modulus().is_some()
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    /// Field order for GF(p); `UnsupportedEnumeration` over the rationals.
    pub fn order(&self) -> Result<u64> {
        self.modulus().ok_or(Error::UnsupportedEnumeration)
    }

    pub fn zero(&self) -> Scalar {
        match self.0 {
            Kind::Prime(_) => Scalar(Value::Mod(0)),
            Kind::Rationals => Scalar(Value::Rat(Box::new(BigRational::zero()))),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Value::Mod(v.rem_euclid(p as i64) as u64)),
            Kind::Rationals => Scalar(Value::Rat(Box::new(BigRational::from_integer(v.into())))),
        }
    }

    /// The residue `v mod p` in GF(p); only meaningful for prime fields.
    pub fn residue(&self, v: u64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Value::Mod(v % p)),
            Kind::Rationals => self.from_i64(v as i64),
        }
    }

    /// `num/den` as a field element.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.div(&self.from_i64(num), &self.from_i64(den))
    }

    pub fn from_rational(&self, r: BigRational) -> Result<Scalar> {
        match self.0 {
            Kind::Rationals => Ok(Scalar(Value::Rat(Box::new(r)))),
            Kind::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().unwrap_or(0)
                };
                let n = Scalar(Value::Mod(reduce(r.numer())));
                let d = Scalar(Value::Mod(reduce(r.denom())));
                self.div(&n, &d)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&a.0, &b.0, self.0) {
            (Value::Mod(x), Value::Mod(y), Kind::Prime(p)) => Scalar(Value::Mod((x + y) % p)),
            (Value::Rat(x), Value::Rat(y), Kind::Rationals) => {
                Scalar(Value::Rat(Box::new(x.as_ref() + y.as_ref())))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&a.0, self.0) {
            (Value::Mod(x), Kind::Prime(p)) => Scalar(Value::Mod((p - x) % p)),
            (Value::Rat(x), Kind::Rationals) => Scalar(Value::Rat(Box::new(-x.as_ref()))),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&a.0, &b.0, self.0) {
            (Value::Mod(x), Value::Mod(y), Kind::Prime(p)) => Scalar(Value::Mod((x * y) % p)),
            (Value::Rat(x), Value::Rat(y), Kind::Rationals) => {
                Scalar(Value::Rat(Box::new(x.as_ref() * y.as_ref())))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&a.0, self.0) {
            (Value::Mod(x), Kind::Prime(p)) => Ok(Scalar(Value::Mod(pow_mod(*x, p - 2, p)))),
            (Value::Rat(x), Kind::Rationals) => Ok(Scalar(Value::Rat(Box::new(x.recip())))),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u32) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// All field elements in residue order. GF(p) only.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        let p = self.order()?;
        Ok((0..p).map(|v| Scalar(Value::Mod(v))).collect())
    }

    /// Some `r` with `r² = s`, the smallest residue over GF(p).
    pub fn sqrt(&self, s: &Scalar) -> Option<Scalar> {
        self.root(s, 2)
    }

    /// Some `r` with `r³ = s`.
    pub fn cbrt(&self, s: &Scalar) -> Option<Scalar> {
        self.root(s, 3)
    }

    fn root(&self, s: &Scalar, k: u32) -> Option<Scalar> {
        match (&s.0, self.0) {
            (Value::Mod(_), Kind::Prime(p)) => (0..p)
                .map(|v| Scalar(Value::Mod(v)))
                .find(|r| &self.pow(r, k) == s),
            (Value::Rat(x), Kind::Rationals) => {
                if x.is_negative() && k.is_multiple_of(2) {
                    return None;
                }
                let n = exact_root(x.numer(), k)?;
                let d = exact_root(x.denom(), k)?;
                Some(Scalar(Value::Rat(Box::new(BigRational::new(n, d)))))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Parses a decimal integer (GF(p)) or an integer / `num/den` (rationals).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::Scalar(text.to_string());
        let t = text.trim();
        match self.0 {
            Kind::Prime(p) => {
                let v: BigInt = t.parse().map_err(|_| bad())?;
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                Ok(Scalar(Value::Mod(r.to_u64().ok_or_else(bad)?)))
            }
            Kind::Rationals => {
                let (n, d) = match t.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (t, "1"),
                };
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(Value::Rat(Box::new(BigRational::new(n, d)))))
            }
        }
    }

    pub fn zero_vector(&self, n: usize) -> Vector {
        vec![self.zero(); n]
    }

    /// The i-th standard basis vector (0-based).
    pub fn unit_vector(&self, n: usize, i: usize) -> Vector {
        let mut v = self.zero_vector(n);
        v[i] = self.one();
        v
    }

    pub fn vector_from_ints(&self, v: &[i64]) -> Vector {
        v.iter().map(|&x| self.from_i64(x)).collect()
    }

    pub fn add_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn sub_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    pub fn scale_vector(&self, c: &Scalar, a: &[Scalar]) -> Vector {
        a.iter().map(|x| self.mul(c, x)).collect()
    }

    /// `a += c·b` in place.
    pub fn axpy(&self, a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = self.add(x, &self.mul(c, y));
            }
        }
    }

    /// Rescales `v` so its first nonzero entry is 1.
    pub fn normalize(&self, v: &[Scalar]) -> Vector {
        match v.iter().find(|x| !x.is_zero()) {
            None => v.to_vec(),
            Some(lead) => {
                let inv = self.inv(lead).expect("nonzero");
                self.scale_vector(&inv, v)
            }
        }
    }

    /// `Some(c)` with `a = c·b`, when `a` is a multiple of the nonzero vector `b`.
    pub fn proportionality(&self, a: &[Scalar], b: &[Scalar]) -> Option<Scalar> {
        let k = b.iter().position(|x| !x.is_zero())?;
        let c = self.div(&a[k], &b[k]).ok()?;
        if self.scale_vector(&c, b) == a {
            Some(c)
        } else {
            None
        }
    }
}

fn exact_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *x {
        Some(r)
    } else {
        None
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rationals => write!(f, "Q"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    /// Accepts `GF(p)`, `GF p`, `p`, or `Q`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::rationals());
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("unknown field `{t}`")))?;
        Field::prime(p)
    }
}

/// Scalars serialize as their display string (`"3"`, `"-1/2"`).
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Field, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Value::Mod(x) => *x == 0,
            Value::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Value::Mod(x) => *x == 1,
            Value::Rat(x) => x.is_one(),
        }
    }

    /// The residue for GF(p) scalars.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Value::Mod(x) => Some(*x),
            Value::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Value::Rat(x) => Some(x),
            Value::Mod(_) => None,
        }
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Value::Mod(a), Value::Mod(b)) => a.cmp(b),
            (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
            (Value::Mod(_), Value::Rat(_)) => Ordering::Less,
            (Value::Rat(_), Value::Mod(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Value::Mod(x) => write!(f, "{x}"),
            Value::Rat(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Formats a vector as `(a, b, c)`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
