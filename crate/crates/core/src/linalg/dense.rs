use crate::error::{Error, Result};

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_TOL: f64 = 1e-13;
const PIVOT_REL_FLOOR: f64 = 1e-12;

/// Dense real symmetric matrix, stored in full row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = 1.0;
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![1.0; order * order],
        }
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle `i <= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        let m = SymMatrix { order, data };
        for i in 0..order {
            for j in 0..order {
                let v = m.get(i, j);
                if !v.is_finite() {
                    return Err(Error::InvalidArgument(format!("entry ({i}, {j}) is not finite")));
                }
                if v != m.get(j, i) {
                    return Err(Error::InvalidArgument(format!("entries ({i}, {j}) and ({j}, {i}) differ")));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.order.max(1)).take(self.order).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.data[i * self.order..(i + 1) * self.order].iter().sum())
            .collect()
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        SymMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a * b).collect(),
        }
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: f64, other: &SymMatrix, b: f64) -> SymMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        SymMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(x, y)| a * x + b * y).collect(),
        }
    }

    /// `x I - self`.
    pub fn shifted(&self, x: f64) -> SymMatrix {
        let mut m = SymMatrix {
            order: self.order,
            data: self.data.iter().map(|v| -v).collect(),
        };
        for i in 0..self.order {
            m.data[i * self.order + i] += x;
        }
        m
    }

    /// All eigenvalues in ascending order, by cyclic Jacobi rotations.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        jacobi_eigenvalues(self)
    }

    pub fn determinant(&self) -> f64 {
        Lu::factor(self).determinant()
    }

    /// Solves `self * x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        Lu::factor(self).solve(b)
    }
}

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// `1e-13 * order * max|entry|`.
pub fn jacobi_eigenvalues(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    if n == 0 {
        return Err(Error::InvalidArgument("eigenvalues of an empty matrix".into()));
    }
    let mut a = m.data.clone();
    let scale = m.max_abs();
    let threshold = JACOBI_REL_TOL * n as f64 * scale;
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..=JACOBI_MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            residual: off_norm(&a),
        });
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub(crate) struct Lu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    sign: f64,
    scale: f64,
    singular: bool,
}

impl Lu {
    pub(crate) fn factor(m: &SymMatrix) -> Self {
        Self::factor_raw(m.order, m.data.clone())
    }

    pub(crate) fn factor_raw(n: usize, mut lu: Vec<f64>) -> Self {
        let scale = lu.iter().fold(0.0f64, |s, v| s.max(v.abs()));
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;
        for k in 0..n {
            let (piv, pmax) = (k..n)
                .map(|i| (i, lu[i * n + k].abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pmax <= PIVOT_REL_FLOOR * scale || pmax == 0.0 {
                singular = true;
            }
            if pmax == 0.0 {
                continue;
            }
            if piv != k {
                for j in 0..n {
                    lu.swap(k * n + j, piv * n + j);
                }
                perm.swap(k, piv);
                sign = -sign;
            }
            let pivot = lu[k * n + k];
            for i in k + 1..n {
                let f = lu[i * n + k] / pivot;
                lu[i * n + k] = f;
                if f != 0.0 {
                    for j in k + 1..n {
                        lu[i * n + j] -= f * lu[k * n + j];
                    }
                }
            }
        }
        Lu {
            n,
            lu,
            perm,
            sign,
            scale,
            singular,
        }
    }

    pub(crate) fn determinant(&self) -> f64 {
        (0..self.n).fold(self.sign, |d, i| d * self.lu[i * self.n + i])
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        assert_eq!(b.len(), n, "right-hand side length");
        if self.singular {
            return Err(Error::Singular(format!(
                "pivot below {PIVOT_REL_FLOOR:e} x {:e}",
                self.scale
            )));
        }
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let s: f64 = (0..i).map(|j| self.lu[i * n + j] * x[j]).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let s: f64 = (i + 1..n).map(|j| self.lu[i * n + j] * x[j]).sum();
            x[i] = (x[i] - s) / self.lu[i * n + i];
        }
        Ok(x)
    }
}
