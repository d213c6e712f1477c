//! Exact arithmetic in `Q` and in real quadratic fields `Q(sqrt d)`.
//!
//! A [`Scalar`] is `a + b*sqrt(d)` with `a, b` reduced fractions and `d` a
//! squarefree integer greater than one, or `d = 0` for a plain rational.
//! Values from two different extensions never mix: the checked operations
//! report [`Error::MixedDiscriminants`] and the operator impls panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    d: u64,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar { a, b: BigRational::zero(), d: 0 }
    }

    /// `r * sqrt(d)`. `d` must be squarefree; `d` in {0, 1} gives a rational.
    pub fn adjoin(r: BigRational, d: u64) -> Result<Self> {
        match d {
            0 => Ok(Self::zero()),
            1 => Ok(Self::from_rational(r)),
            _ => {
                if !is_squarefree(d)? {
                    return Err(Error::NonSquarefreeDiscriminant(d.to_string()));
                }
                Ok(Self::canonical(BigRational::zero(), r, d))
            }
        }
    }

    /// `a + b*sqrt(d)` with the same squarefree requirement as [`Scalar::adjoin`].
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        let radical = Self::adjoin(b, d)?;
        Ok(Self::from_rational(a) + radical)
    }

    /// Square root of a non-negative rational, reducing the radicand to its
    /// squarefree part (`sqrt(12)` becomes `2*sqrt(3)`).
    pub fn sqrt_rational(r: &BigRational) -> Result<Option<Self>> {
        if r.is_negative() {
            return Ok(None);
        }
        if r.is_zero() {
            return Ok(Some(Self::zero()));
        }
        // sqrt(n/m) = sqrt(n*m)/m
        let n = r.numer().magnitude() * r.denom().magnitude();
        let (root, core) = squarefree_decompose(&n)?;
        let coeff = BigRational::new(BigInt::from_biguint(Sign::Plus, root), r.denom().clone());
        if core.is_one() {
            return Ok(Some(Self::from_rational(coeff)));
        }
        let d = u64::try_from(&core).map_err(|_| Error::DiscriminantTooLarge(core.to_string()))?;
        Ok(Some(Self::canonical(BigRational::zero(), coeff, d)))
    }

    fn canonical(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            Scalar { a, b: BigRational::zero(), d: 0 }
        } else {
            Scalar { a, b, d }
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    /// The discriminant `d`, or 0 for a rational value.
    pub fn disc(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    /// Exact sign of the real number `a + b*sqrt(d)`.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
        // a^2 == b^2 d is impossible for non-square d
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> Self {
        Scalar { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// `a^2 - d b^2`, always rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d))
    }

    fn joint_disc(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::MixedDiscriminants(d, e)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.joint_disc(other)?;
        Ok(Self::canonical(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.joint_disc(other)?;
        Ok(Self::canonical(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.joint_disc(other)?;
        if self.b.is_zero() {
            return Ok(Self::canonical(&self.a * &other.a, &self.a * &other.b, d));
        }
        if other.b.is_zero() {
            return Ok(Self::canonical(&self.a * &other.a, &self.b * &other.a, d));
        }
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::canonical(a, b, d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::from_rational(self.a.recip()));
        }
        let n = self.norm();
        Ok(Self::canonical(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.joint_disc(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Non-negative square root, if it exists over `Q` or some `Q(sqrt e)`.
    ///
    /// Rationals may open a new extension. An irrational value only has a
    /// root inside its own field; otherwise `MixedDiscriminants` is returned.
    /// Negative values give `Ok(None)`.
    pub fn sqrt(&self) -> Result<Option<Self>> {
        if self.sign() < 0 {
            return Ok(None);
        }
        if self.b.is_zero() {
            return Self::sqrt_rational(&self.a);
        }
        // (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 = (a +- sqrt(norm)) / 2
        let norm_root = match rational_sqrt_exact(&self.norm()) {
            Some(n) => n,
            None => return Err(Error::MixedDiscriminants(self.d, 0)),
        };
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &norm_root) / &two, (&self.a - &norm_root) / &two] {
            if cand.is_zero() {
                continue;
            }
            if let Some(p) = rational_sqrt_exact(&cand) {
                let q = &self.b / (&two * &p);
                let root = Self::canonical(p, q, self.d);
                return Ok(Some(root.abs()));
            }
        }
        Err(Error::MixedDiscriminants(self.d, 0))
    }

    pub fn cmp_value(&self, other: &Self) -> Result<Ordering> {
        let diff = self.checked_sub(other)?;
        Ok(diff.sign().cmp(&0))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// The shared discriminant of a family of scalars.
pub fn common_disc<'a, I: IntoIterator<Item = &'a Scalar>>(values: I) -> Result<u64> {
    let mut d = 0;
    for v in values {
        match (d, v.d) {
            (_, 0) => {}
            (0, e) => d = e,
            (x, e) if x == e => {}
            (x, e) => return Err(Error::MixedDiscriminants(x, e)),
        }
    }
    Ok(d)
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

fn rational_sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().magnitude();
    let m = r.denom().magnitude();
    let rn = n.sqrt();
    let rm = m.sqrt();
    if &(&rn * &rn) == n && &(&rm * &rm) == m {
        Some(BigRational::new(BigInt::from_biguint(Sign::Plus, rn), BigInt::from_biguint(Sign::Plus, rm)))
    } else {
        None
    }
}

fn is_squarefree(d: u64) -> Result<bool> {
    let (root, _) = squarefree_decompose(&BigUint::from(d))?;
    Ok(root.is_one())
}

/// Writes `n = root^2 * core` with `core` squarefree.
///
/// Integers up to 128 bits are factored completely. Larger ones are factored
/// as far as bounded trial division and Pollard rho reach; an unsplit
/// remainder is kept in `core` unless it is itself a perfect square.
pub fn squarefree_decompose(n: &BigUint) -> Result<(BigUint, BigUint)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), BigUint::one()));
    }
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    let (factors, rest) = num_prime::nt_funcs::factors(n.clone(), None);
    for (p, e) in factors {
        root *= p.pow((e / 2) as u32);
        if e.is_odd() {
            core *= p;
        }
    }
    for r in rest.unwrap_or_default() {
        let s = r.sqrt();
        if s.clone() * &s == r {
            root *= s;
        } else {
            core *= r;
        }
    }
    Ok((root, core))
}

fn assert_ok<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("scalar arithmetic: {e}"),
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                assert_ok(self.$checked(rhs))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                assert_ok((&self).$checked(&rhs))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                assert_ok((&self).$checked(rhs))
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                assert_ok(self.$checked(&rhs))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_value(other).ok()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Literal grammar: `INT`, `INT/INT`, `[A+]B*sqrt(D)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let radical = format!("{}*sqrt({})", fmt_rational(&self.b.abs()), self.d);
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{}+{radical}", fmt_rational(&self.a)),
            (false, true) => write!(f, "{}-{radical}", fmt_rational(&self.a)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str, allow_sign: bool| {
        let digits = if allow_sign { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, true) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::ParseScalar(input.to_string());
        let Some(idx) = s.find("sqrt(") else {
            return parse_rational(&s).map(Scalar::from_rational).ok_or_else(bad);
        };
        let radicand = s[idx + 5..].strip_suffix(')').ok_or_else(bad)?;
        if radicand.is_empty() || !radicand.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let d: u64 = radicand.parse().map_err(|_| bad())?;
        let prefix = &s[..idx];

        // split "A+B*" into the rational part and the signed coefficient
        let (rational, coeff) = match prefix.strip_suffix('*') {
            Some(body) => {
                let bytes = body.as_bytes();
                let split = (1..bytes.len())
                    .rev()
                    .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit());
                match split {
                    Some(i) => {
                        let coeff =
                            if bytes[i] == b'-' { format!("-{}", &body[i + 1..]) } else { body[i + 1..].to_string() };
                        (body[..i].to_string(), coeff)
                    }
                    None => (String::new(), body.to_string()),
                }
            }
            None => match prefix {
                "" | "+" => (String::new(), "1".to_string()),
                "-" => (String::new(), "-1".to_string()),
                p if p.ends_with('+') => (p[..p.len() - 1].to_string(), "1".to_string()),
                p if p.ends_with('-') => (p[..p.len() - 1].to_string(), "-1".to_string()),
                _ => return Err(bad()),
            },
        };
        let coeff = coeff.replace("+-", "-").replace("--", "");
        let b = parse_rational(&coeff).ok_or_else(bad)?;
        let a = if rational.is_empty() { BigRational::zero() } else { parse_rational(&rational).ok_or_else(bad)? };
        if d <= 1 {
            return Ok(Scalar::from_rational(a + b * BigRational::from_integer(BigInt::from(d))));
        }
        // non-squarefree radicands are reduced: 1*sqrt(12) == 2*sqrt(3)
        let root = Scalar::sqrt_rational(&BigRational::from_integer(BigInt::from(d)))?.expect("positive radicand");
        Ok(Scalar::from_rational(a) + root * Scalar::from_rational(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Scalar {
        lit.parse().unwrap()
    }

    #[test]
    fn adjoin_examples() {
        let r19 = Scalar::adjoin(BigRational::one(), 19).unwrap();
        assert_eq!(r19.to_string(), "1*sqrt(19)");
        assert_eq!(r19.disc(), 19);

        let zero = Scalar::adjoin(BigRational::zero(), 6).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.disc(), 0);

        let two_r6 = Scalar::adjoin(BigRational::from_integer(2.into()), 6).unwrap();
        assert_eq!(Scalar::zero() + &two_r6, two_r6);
        assert_eq!(two_r6.to_string(), "2*sqrt(6)");
    }

    #[test]
    fn adjoin_rejects_square_factor() {
        assert!(matches!(Scalar::adjoin(BigRational::one(), 12), Err(Error::NonSquarefreeDiscriminant(_))));
    }

    #[test]
    fn literal_reduces_radicand() {
        assert_eq!(s("sqrt(12)"), s("2*sqrt(3)"));
        assert_eq!(s("1*sqrt(4)"), Scalar::from_int(2));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(s("1-1*sqrt(2)").sign(), -1);
        assert_eq!(Scalar::zero().sign(), 0);
        assert_eq!(s("-4+1*sqrt(19)").sign(), 1);
        assert_eq!(s("5-1*sqrt(19)").sign(), 1);
        assert_eq!(s("-5+1*sqrt(19)").sign(), -1);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s("-4+1*sqrt(19)") * s("-4-1*sqrt(19)"), Scalar::from_int(-3));
        let x = s("9/2+1/2*sqrt(89)");
        assert_eq!(&x * &Scalar::one(), x);
        assert_eq!(s("2*sqrt(6)").square(), Scalar::from_int(24));
        // (u+1)(u^2+4) at u = 2
        assert_eq!(Scalar::from_int(3) * Scalar::from_int(8), Scalar::from_int(24));
    }

    #[test]
    fn inverse_and_division() {
        let x = s("-4+1*sqrt(19)");
        assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
        assert_eq!(x.inv().unwrap(), s("4/3+1/3*sqrt(19)"));
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(x.checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_discriminants_rejected() {
        let a = s("sqrt(2)");
        let b = s("sqrt(3)");
        assert_eq!(a.checked_add(&b), Err(Error::MixedDiscriminants(2, 3)));
        assert_eq!(a.checked_mul(&b), Err(Error::MixedDiscriminants(2, 3)));
        assert!(a.checked_mul(&Scalar::from_int(5)).is_ok());
        assert_eq!(common_disc([&a, &Scalar::one(), &a]), Ok(2));
        assert!(common_disc([&a, &b]).is_err());
    }

    #[test]
    fn cancellation_canonicalizes() {
        let r = s("1+1*sqrt(5)") - s("1*sqrt(5)");
        assert_eq!(r, Scalar::one());
        assert!(r.is_rational());
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::from_ratio(3, 4).sqrt().unwrap().unwrap(), s("1/2*sqrt(3)"));
        assert_eq!(Scalar::from_ratio(9, 4).sqrt().unwrap().unwrap(), Scalar::from_ratio(3, 2));
        assert_eq!(Scalar::from_int(-1).sqrt().unwrap(), None);
        // (2 + sqrt 3)^2 = 7 + 4 sqrt 3
        assert_eq!(s("7+4*sqrt(3)").sqrt().unwrap().unwrap(), s("2+1*sqrt(3)"));
        // (1 - sqrt 3)^2 = 4 - 2 sqrt 3, positive root is sqrt 3 - 1
        assert_eq!(s("4-2*sqrt(3)").sqrt().unwrap().unwrap(), s("-1+1*sqrt(3)"));
        assert!(s("1+1*sqrt(3)").sqrt().is_err());
    }

    #[test]
    fn literal_grammar() {
        for lit in ["0", "-7", "3/5", "-4+1*sqrt(19)", "9/2+1/2*sqrt(89)", "2*sqrt(6)", "-2/3-5/7*sqrt(2)"] {
            assert_eq!(s(lit).to_string(), lit);
        }
        assert_eq!(s("-4+-1*sqrt(19)"), s("-4-1*sqrt(19)"));
        assert_eq!(s("-4+sqrt(19)"), s("-4+1*sqrt(19)"));
        assert_eq!(s("-sqrt(19)"), s("-1*sqrt(19)"));
        assert_eq!(s(" 10/4 "), Scalar::from_ratio(5, 2));
        for bad in ["", "1/0", "abc", "1+", "sqrt()", "2*sqrt(x)", "1/2/3", "4*sqrt(3"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn squarefree_parts() {
        let (r, c) = squarefree_decompose(&BigUint::from(72u32)).unwrap();
        assert_eq!((r, c), (BigUint::from(6u32), BigUint::from(2u32)));
        let big = BigUint::from(1_000_000_007u64).pow(2) * BigUint::from(998_244_353u64).pow(2) * 3u32;
        let (r, c) = squarefree_decompose(&big).unwrap();
        assert_eq!(c, BigUint::from(3u32));
        assert_eq!(r, BigUint::from(1_000_000_007u64) * BigUint::from(998_244_353u64));
    }
}
