use num_complex::Complex64;

use crate::energy::EnergizedComplex;
use crate::error::{Error, Result};
use crate::rings::{IntegralDomain, Quaternion};

use super::det::{complex_embedding, det_complex, det_exact, Dieudonne};
use super::{build_g, Matrix};

/// Determinant of the submatrix on `rows` x `cols`.
pub fn minor_det<R: IntegralDomain>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> Result<R> {
    if rows.len() != cols.len() {
        return Err(Error::ShapeError(format!(
            "{} rows vs {} columns",
            rows.len(),
            cols.len()
        )));
    }
    if let Some(&bad) = rows
        .iter()
        .find(|&&i| i >= m.rows())
        .or(cols.iter().find(|&&j| j >= m.cols()))
    {
        return Err(Error::ShapeError(format!("index {bad} out of range")));
    }
    det_exact(&m.submatrix(rows, cols))
}

/// All subsets of `0..n` as sorted index lists, grouped by size.
pub fn subsets_by_size(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_size = vec![Vec::new(); n + 1];
    for mask in 0u64..(1u64 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        by_size[s.len()].push(s);
    }
    by_size
}

/// `(det(1 + F^T G), sum over |Q| = |P| of det F_QP det G_QP)`.
pub fn cauchy_binet_check<R: IntegralDomain>(f: &Matrix<R>, g: &Matrix<R>) -> Result<(R, R)> {
    if f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(Error::ShapeError(format!(
            "{}x{} vs {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    let lhs = det_exact(&Matrix::identity(f.cols()).add(&f.transpose().mul(g)?)?)?;
    let rows = subsets_by_size(f.rows());
    let cols = subsets_by_size(f.cols());
    let mut rhs = R::zero();
    for (qs, ps) in rows.iter().zip(&cols) {
        for q in qs {
            for p in ps {
                rhs = rhs.add(&minor_det(f, q, p)?.mul(&minor_det(g, q, p)?));
            }
        }
    }
    Ok((lhs, rhs))
}

/// det(1 + g* g) over an exact commutative ring.
pub fn fredholm_energy<R: IntegralDomain>(e: &EnergizedComplex<R>) -> Result<R> {
    let g = build_g(e);
    det_exact(&Matrix::identity(g.rows()).add(&g.adjoint().mul(&g)?)?)
}

/// Sum of N(det g_AB) over all pairs of equal-size index sets.
pub fn fredholm_minor_sum<R: IntegralDomain>(e: &EnergizedComplex<R>) -> Result<R> {
    let g = build_g(e);
    let subsets = subsets_by_size(g.rows());
    let mut acc = R::zero();
    for level in &subsets {
        for a in level {
            for b in level {
                acc = acc.add(&minor_det(&g, a, b)?.norm());
            }
        }
    }
    Ok(acc)
}

/// det(1 + g* g) for complex doubles; real up to rounding.
pub fn fredholm_energy_complex(e: &EnergizedComplex<Complex64>) -> Result<f64> {
    let g = build_g(e);
    Ok(det_complex(&Matrix::identity(g.rows()).add(&g.adjoint().mul(&g)?)?)?.re)
}

/// Dieudonne determinant of 1 + g* g for double quaternions.
pub fn fredholm_energy_quaternion(e: &EnergizedComplex<Quaternion<f64>>) -> Result<Dieudonne<f64>> {
    let g = build_g(e);
    let m = Matrix::identity(g.rows()).add(&g.adjoint().mul(&g)?)?;
    Ok(Dieudonne {
        study: det_complex(&complex_embedding(&m))?.re,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete;
    use crate::rings::{BigRational, Ring};

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    #[test]
    fn one_by_one_cauchy_binet() {
        let f = Matrix::from_rows(vec![vec![q(1)]]).unwrap();
        assert_eq!(cauchy_binet_check(&f, &f).unwrap(), (q(2), q(2)));
    }

    #[test]
    fn full_minor_is_determinant() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(5)]]).unwrap();
        assert_eq!(minor_det(&m, &[0, 1], &[0, 1]).unwrap(), q(-1));
        assert!(matches!(
            minor_det(&m, &[0], &[0, 1]),
            Err(Error::ShapeError(_))
        ));
        assert_eq!(minor_det(&m, &[], &[]).unwrap(), q(1));
    }

    #[test]
    fn fredholm_single_point_and_k2() {
        let p = EnergizedComplex::new(complete(1), vec![q(1)]).unwrap();
        assert_eq!(fredholm_energy(&p).unwrap(), q(2));
        let k2 = EnergizedComplex::from_fn(complete(2), |x| q(x.omega()));
        assert_eq!(
            fredholm_energy(&k2).unwrap(),
            fredholm_minor_sum(&k2).unwrap()
        );
    }
}
