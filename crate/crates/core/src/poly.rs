//! Sparse polynomials in three variables over the rationals, with just
//! enough structure for identity checks and resultant eliminations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Scalar;

pub type Exponent = [u32; 3];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::monomial(c, [0, 0, 0])
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Poly::monomial(BigRational::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::int(1), |acc, _| &acc * self)
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut e2 = *e;
                e2[var] -= 1;
                out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[var])));
            }
        }
        out
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: usize, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = *e;
                e2[var] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Replace variable `var` by the constant `value`.
    pub fn specialize(&self, var: usize, value: &BigRational) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[var] = 0;
            let mut k = c.clone();
            for _ in 0..e[var] {
                k *= value;
            }
            out.add_term(e2, k);
        }
        out
    }

    pub fn eval(&self, point: &[Scalar; 3]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = Scalar::from_rational(c.clone());
            for (x, &k) in point.iter().zip(e) {
                term = term * x.pow(k);
            }
            acc = acc + term;
        }
        acc
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Dense coefficients `[c0, c1, ...]` of a polynomial in `var` alone.
    pub fn univariate(&self, var: usize) -> Option<Vec<BigRational>> {
        let n = self.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![BigRational::zero(); n];
        for (e, c) in &self.terms {
            if (0..3).any(|i| i != var && e[i] != 0) {
                return None;
            }
            out[e[var] as usize] = c.clone();
        }
        Some(out)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: String = ["x", "y", "z"]
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                    .collect();
                format!("({c}){vars}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Resultant of `f` and `g` with respect to `var`, via the Sylvester
/// determinant expanded over the polynomial ring.
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Poly {
    let (m, n) = match (f.degree_in(var), g.degree_in(var)) {
        (Some(m), Some(n)) => (m as usize, n as usize),
        _ => return Poly::zero(),
    };
    let size = m + n;
    if size == 0 {
        return Poly::int(1);
    }
    let fc: Vec<Poly> = (0..=m).rev().map(|k| f.coeff_in(var, k as u32)).collect();
    let gc: Vec<Poly> = (0..=n).rev().map(|k| g.coeff_in(var, k as u32)).collect();
    let mut rows = vec![vec![Poly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in fc.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gc.iter().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    determinant(&rows)
}

fn determinant(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (j, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = entry * &determinant(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Monic gcd of dense univariate polynomials; empty for the zero polynomial.
pub fn gcd_univariate(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = remainder(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

fn remainder(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let k = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &k * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}
