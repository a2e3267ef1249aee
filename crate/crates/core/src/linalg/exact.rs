//! Exact integer linear algebra: Bareiss determinants and the integer
//! characteristic polynomial `det(x D - A)` of a graph's degree/adjacency pencil.
//!
//! The roots of `det(x D - A)` are `1 - λ` over the normalized Laplacian
//! eigenvalues `λ`, and dividing by `det D` gives a monic rational polynomial.
//! Two graphs are normalized Laplacian cospectral exactly when those monic
//! forms coincide, which turns cospectrality into integer arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order limit for exact characteristic polynomials.
pub const DEFAULT_SIZE_GUARD: usize = 64;

/// Square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            data: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        IntMatrix { order, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::InvalidArgument(format!("row {i} has wrong length")));
        }
        Ok(Self::from_fn(order, |i, j| BigInt::from(rows[i][j])))
    }

    /// Combinatorial Laplacian `D - A`.
    pub fn laplacian(g: &Graph) -> Self {
        Self::from_fn(g.order(), |i, j| {
            if i == j {
                BigInt::from(g.degree(i))
            } else if g.has_edge(i, j) {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.order + j] = v;
    }

    /// Deletes row and column `k`.
    pub fn minor(&self, k: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.order).filter(|&i| i != k).collect();
        IntMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_det(self)
    }
}

/// Fraction-free Gaussian elimination. Every division is exact.
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.data.clone();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = (&a[i * n + j] * &pivot - &lead * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Integer polynomial, coefficient `k` multiplies `x^k`. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coefficients.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Interpolates the unique polynomial of degree `< values.len()` with
    /// `p(k) = values[k]`, via Newton forward differences over the rationals.
    /// Fails if the result is not integral.
    pub fn interpolate_at_naturals(values: &[BigInt]) -> Result<Self> {
        let len = values.len();
        // forward differences Δ^k p(0)
        let mut diffs: Vec<BigInt> = values.to_vec();
        let mut newton = Vec::with_capacity(len);
        for k in 0..len {
            newton.push(diffs[0].clone());
            for i in 0..len - k - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
        }
        // p(x) = Σ Δ^k p(0) / k! · x (x-1) ... (x-k+1)
        let mut coeffs = vec![BigRational::zero(); len];
        let mut falling = vec![BigInt::one()];
        let mut factorial = BigInt::one();
        for (k, dk) in newton.iter().enumerate() {
            if k > 0 {
                factorial *= BigInt::from(k);
                let shift = BigInt::from(k - 1);
                let mut next = vec![BigInt::zero(); falling.len() + 1];
                for (i, c) in falling.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * &shift;
                }
                falling = next;
            }
            if dk.is_zero() {
                continue;
            }
            let scale = BigRational::new(dk.clone(), factorial.clone());
            for (i, c) in falling.iter().enumerate() {
                coeffs[i] += &scale * BigRational::from_integer(c.clone());
            }
        }
        let mut out = Vec::with_capacity(len);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Consistency(format!(
                    "interpolated coefficient of x^{i} is not an integer: {c}"
                )));
            }
            out.push(c.to_integer());
        }
        Ok(IntPolynomial::new(out))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                _ => write!(f, "{abs}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(x D - A)` together with `det D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCharPoly {
    pub poly: IntPolynomial,
    pub det_d: BigInt,
}

impl ExactCharPoly {
    pub fn coefficients(&self) -> &[BigInt] {
        self.poly.coefficients()
    }
}

/// Evaluates `det(x · diag - A(g))` at `x = 0..=n` and interpolates.
fn charpoly_of_pencil(g: &Graph, diag: &[BigInt]) -> Result<IntPolynomial> {
    let n = g.order();
    let values: Vec<BigInt> = (0..=n)
        .into_par_iter()
        .map(|x| {
            let x = BigInt::from(x);
            let m = IntMatrix::from_fn(n, |i, j| {
                if i == j {
                    &x * &diag[i]
                } else if g.has_edge(i, j) {
                    -BigInt::one()
                } else {
                    BigInt::zero()
                }
            });
            bareiss_det(&m)
        })
        .collect();
    IntPolynomial::interpolate_at_naturals(&values)
}

/// Exact pencil polynomial `det(x D - A)` with the default size guard.
pub fn pencil_charpoly(g: &Graph) -> Result<ExactCharPoly> {
    pencil_charpoly_with_limit(g, DEFAULT_SIZE_GUARD)
}

pub fn pencil_charpoly_with_limit(g: &Graph, limit: usize) -> Result<ExactCharPoly> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeGuard { order: n, limit });
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let diag: Vec<BigInt> = g.degrees().into_iter().map(BigInt::from).collect();
    let det_d: BigInt = diag.iter().product();
    let poly = charpoly_of_pencil(g, &diag)?;
    if poly.degree() != Some(n) || poly.leading() != det_d {
        return Err(Error::Consistency(format!(
            "leading coefficient {} differs from det D = {det_d}",
            poly.leading()
        )));
    }
    Ok(ExactCharPoly { poly, det_d })
}

/// Exact adjacency characteristic polynomial `det(x I - A)`.
pub fn adjacency_charpoly(g: &Graph) -> Result<IntPolynomial> {
    adjacency_charpoly_with_limit(g, DEFAULT_SIZE_GUARD)
}

pub fn adjacency_charpoly_with_limit(g: &Graph, limit: usize) -> Result<IntPolynomial> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeGuard { order: n, limit });
    }
    charpoly_of_pencil(g, &vec![BigInt::one(); n])
}

/// Coefficients of `p(x) / det D`, lowest degree first.
pub fn monic_rational_form(p: &ExactCharPoly) -> Vec<BigRational> {
    p.coefficients()
        .iter()
        .map(|c| BigRational::new(c.clone(), p.det_d.clone()))
        .collect()
}

/// `"p/q"` with the sign on `p`, always with an explicit denominator.
pub fn fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(bareiss_det(&IntMatrix::identity(5)), BigInt::one());
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(bareiss_det(&m), BigInt::from(3));
        assert_eq!(bareiss_det(&IntMatrix::zeros(0)), BigInt::one());
        // needs a row swap
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(bareiss_det(&m), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(bareiss_det(&m), BigInt::zero());
    }

    #[test]
    fn k4_laplacian_minors() {
        let l = IntMatrix::laplacian(&generate(Family::Complete, &[4]).unwrap());
        for k in 0..4 {
            assert_eq!(l.minor(k).determinant(), BigInt::from(16));
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = IntPolynomial::new(ints(&[7, -3, 0, 2]));
        let values: Vec<BigInt> = (0..6).map(|x| p.eval(&BigInt::from(x))).collect();
        assert_eq!(IntPolynomial::interpolate_at_naturals(&values).unwrap(), p);
        // 1/2 x^2 + 1/2 x is integer-valued but not integral
        let tri: Vec<BigInt> = (0..3).map(|x| BigInt::from(x * (x + 1) / 2)).collect();
        assert!(IntPolynomial::interpolate_at_naturals(&tri).is_err());
    }

    #[test]
    fn pencil_examples() {
        let k2 = generate(Family::Complete, &[2]).unwrap();
        let p = pencil_charpoly(&k2).unwrap();
        assert_eq!(p.coefficients(), ints(&[-1, 0, 1]).as_slice());
        assert_eq!(p.det_d, BigInt::one());
        assert_eq!(monic_rational_form(&p), vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);

        let p3 = generate(Family::Path, &[3]).unwrap();
        let p = pencil_charpoly(&p3).unwrap();
        assert_eq!(p.coefficients(), ints(&[0, -2, 0, 2]).as_slice());
        assert_eq!(p.det_d, BigInt::from(2));

        let c4 = generate(Family::Cycle, &[4]).unwrap();
        let star = generate(Family::CompleteBipartite, &[1, 3]).unwrap();
        let x4_minus_x2 = vec![rat(0, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)];
        assert_eq!(monic_rational_form(&pencil_charpoly(&c4).unwrap()), x4_minus_x2);
        assert_eq!(monic_rational_form(&pencil_charpoly(&star).unwrap()), x4_minus_x2);
    }

    #[test]
    fn pencil_guards() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(pencil_charpoly(&g), Err(Error::IsolatedVertex(2)));
        let c5 = generate(Family::Cycle, &[5]).unwrap();
        assert_eq!(
            pencil_charpoly_with_limit(&c5, 4),
            Err(Error::SizeGuard { order: 5, limit: 4 })
        );
    }

    #[test]
    fn pencil_vanishes_at_one() {
        let p = generate(Family::Petersen, &[]).unwrap();
        let cp = pencil_charpoly(&p).unwrap();
        assert!(cp.poly.eval(&BigInt::one()).is_zero());
        assert_eq!(cp.poly.leading(), BigInt::from(3u32.pow(10)));
    }

    #[test]
    fn adjacency_polynomial_of_k3() {
        // (x - 2)(x + 1)^2 = x^3 - 3x - 2
        let k3 = generate(Family::Complete, &[3]).unwrap();
        assert_eq!(adjacency_charpoly(&k3).unwrap().coefficients(), ints(&[-2, -3, 0, 1]).as_slice());
    }

    #[test]
    fn display_and_fraction_strings() {
        let p = IntPolynomial::new(ints(&[0, -2, 0, 2]));
        assert_eq!(p.to_string(), "2x^3 - 2x");
        assert_eq!(IntPolynomial::new(vec![]).to_string(), "0");
        assert_eq!(fraction_string(&rat(-2, 4)), "-1/2");
        assert_eq!(fraction_string(&rat(3, 1)), "3/1");
    }
}
