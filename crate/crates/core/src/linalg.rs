//! Small exact linear algebra over [`Scalar`]: 3-vectors, 3x3 matrices,
//! null spaces by row reduction, and canonical scaling of homogeneous tuples.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;

pub type Vec3 = [Scalar; 3];

pub fn vec3(x: i64, y: i64, z: i64) -> Vec3 {
    [Scalar::from_int(x), Scalar::from_int(y), Scalar::from_int(z)]
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

pub fn scale(v: &Vec3, k: &Scalar) -> Vec3 {
    [&v[0] * k, &v[1] * k, &v[2] * k]
}

pub fn add(u: &Vec3, v: &Vec3) -> Vec3 {
    [&u[0] + &v[0], &u[1] + &v[1], &u[2] + &v[2]]
}

pub fn sub(u: &Vec3, v: &Vec3) -> Vec3 {
    [&u[0] - &v[0], &u[1] - &v[1], &u[2] - &v[2]]
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// True when `u` and `v` are proportional (including when either is zero).
pub fn proportional(u: &Vec3, v: &Vec3) -> bool {
    is_zero(&cross(u, v))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3 {
    pub rows: [[Scalar; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[Scalar; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3 { rows: rows.map(|r| r.map(Scalar::from_int)) }
    }

    pub fn from_cols(cols: [Vec3; 3]) -> Self {
        Mat3::from_rows(cols).transpose()
    }

    pub fn identity() -> Self {
        Mat3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn scalar(k: &Scalar) -> Self {
        let mut m = Mat3::identity();
        for i in 0..3 {
            m.rows[i][i] = k.clone();
        }
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn col(&self, j: usize) -> Vec3 {
        [self.rows[0][j].clone(), self.rows[1][j].clone(), self.rows[2][j].clone()]
    }

    pub fn transpose(&self) -> Self {
        Mat3 { rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())) }
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Mat3 {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..3).fold(Scalar::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j])
                })
            }),
        }
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        std::array::from_fn(|i| dot(&self.rows[i], v))
    }

    pub fn scaled(&self, k: &Scalar) -> Mat3 {
        Mat3 { rows: std::array::from_fn(|i| std::array::from_fn(|j| &self.rows[i][j] * k)) }
    }

    pub fn add(&self, other: &Mat3) -> Mat3 {
        Mat3 { rows: std::array::from_fn(|i| std::array::from_fn(|j| &self.rows[i][j] + &other.rows[i][j])) }
    }

    pub fn sub(&self, other: &Mat3) -> Mat3 {
        Mat3 { rows: std::array::from_fn(|i| std::array::from_fn(|j| &self.rows[i][j] - &other.rows[i][j])) }
    }

    pub fn det(&self) -> Scalar {
        let r = &self.rows;
        dot(&r[0], &cross(&r[1], &r[2]))
    }

    /// Classical adjugate, `adj(M) M = det(M) I`.
    pub fn adjugate(&self) -> Mat3 {
        let r = &self.rows;
        // columns of the adjugate are the pairwise cross products of the rows
        Mat3::from_cols([cross(&r[1], &r[2]), cross(&r[2], &r[0]), cross(&r[0], &r[1])])
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.adjugate().scaled(&det.inv()?))
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.rows.iter().flatten()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.rows[i][j] == self.rows[j][i]))
    }
}

/// A basis of `{ v : rows * v = 0 }`.
pub fn null_space(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<Scalar> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        m[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][f];
            }
            v
        })
        .collect()
}

/// Canonical representative of a homogeneous tuple up to nonzero scaling.
///
/// Divide by the last nonzero entry, clear all rational and radical parts to
/// coprime integers with a positive factor, then make the first nonzero entry
/// positive.
pub fn canonicalize(v: &mut [Scalar]) -> Result<()> {
    let last = v.iter().rposition(|x| !x.is_zero()).ok_or(Error::ZeroTriple)?;
    if !v[last].is_one() {
        let inv = v[last].inv()?;
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    for x in v.iter() {
        for part in [x.rational_part(), x.radical_part()] {
            if !part.is_zero() {
                lcm = lcm.lcm(part.denom());
                gcd = gcd.gcd(part.numer());
            }
        }
    }
    let factor = Scalar::from_rational(BigRational::new(lcm, gcd.abs()));
    let first = v.iter().position(|x| !x.is_zero()).expect("nonzero");
    let factor = if v[first].sign() < 0 { -factor } else { factor };
    if !factor.is_one() {
        for x in v.iter_mut() {
            *x = &*x * &factor;
        }
    }
    Ok(())
}
