use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::Error;

/// Ground field: the rationals or a prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rational,
    Prime(u64),
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field {
    /// F_p; rejects composite moduli and moduli too large for word arithmetic.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if p >= 1 << 62 || !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::zero()),
            Field::Prime(p) => Scalar::P(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_int(n)),
            Field::Prime(p) => Scalar::P((n as i128).rem_euclid(*p as i128) as u64, *p),
        }
    }

    /// `num / den` in this field; `None` if `den` vanishes here.
    pub fn frac(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.int(den);
        Some(self.int(num) * d.inv()?)
    }

    /// Maps an exact rational into this field (reduction mod p).
    pub fn from_rational(&self, r: &Rational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::Q(r.clone())),
            Field::Prime(p) => r.reduce_mod(*p).map(|v| Scalar::P(v, *p)),
        }
    }

    /// Parses a scalar written as `a/b` (rationals) or a decimal residue
    /// `0 <= r < p` (prime fields).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::Parse(format!("invalid scalar {s:?} for field {self}"));
        match self {
            Field::Rational => Rational::parse(s).map(Scalar::Q).ok_or_else(bad),
            Field::Prime(p) => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
                    return Err(bad());
                }
                let v: u64 = s.parse().map_err(|_| bad())?;
                if v >= *p {
                    return Err(bad());
                }
                Ok(Scalar::P(v, *p))
            }
        }
    }

    /// Parses `Q` or `Fp:<p>` (file form), also accepting `q` / `fp:<p>` (flag form).
    pub fn parse_spec(s: &str) -> Result<Field, Error> {
        if s == "Q" || s == "q" {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("fp:"))
            .ok_or_else(|| Error::Parse(format!("unknown field spec {s:?}")))?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("unknown field spec {s:?}")));
        }
        let p: u64 = rest.parse().map_err(|_| Error::Parse(format!("modulus out of range in {s:?}")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Element of the ground field. Arithmetic between elements of different
/// fields is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    /// residue, modulus
    P(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::P(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::P(0, _) => None,
            Scalar::P(v, p) => Some(Scalar::P(inv_mod(*v, *p), *p)),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = self.field().one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::P(s, p), Scalar::P(x, _), Scalar::P(y, _)) => {
                *s = ((*s as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            _ => {
                let t = &*self + &(a * b);
                *self = t;
            }
        }
    }

    pub fn add_assign_ref(&mut self, a: &Scalar) {
        match (&mut *self, a) {
            (Scalar::P(s, p), Scalar::P(x, _)) => {
                let t = *s + *x;
                *s = if t >= *p { t - *p } else { t };
            }
            _ => {
                let t = &*self + a;
                *self = t;
            }
        }
    }
}

fn mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P(a, p), Scalar::P(b, q)) if p == q => {
                let t = a + b;
                Scalar::P(if t >= *p { t - p } else { t }, *p)
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.sub(b)),
            (Scalar::P(a, p), Scalar::P(b, q)) if p == q => Scalar::P(if a >= b { a - b } else { a + p - b }, *p),
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P(a, p), Scalar::P(b, q)) if p == q => Scalar::P(mul_mod(*a, *b, *p), *p),
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P(0, p) => Scalar::P(0, *p),
            Scalar::P(a, p) => Scalar::P(p - a, *p),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::P(v, _) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
