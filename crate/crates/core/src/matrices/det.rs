use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::rings::{Field, Gaussian, IntegralDomain, Quaternion, Ring};

use super::Matrix;

fn require_square<R: Ring>(m: &Matrix<R>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::ShapeError(format!(
            "{}x{} matrix has no determinant",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so polynomial entries
/// stay polynomial and each division is exact.
pub fn det_exact<R: IntegralDomain>(m: &Matrix<R>) -> Result<R> {
    require_square(m)?;
    if !R::EXACT {
        return Err(Error::UnsupportedRing(R::NAME.into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let factor = a.get(i, k).clone();
            for j in k + 1..n {
                let num = pivot.mul(a.get(i, j)).sub(&factor.mul(a.get(k, j)));
                let q = num.exact_div(&prev).expect("Bareiss division is exact");
                a.set(i, j, q);
            }
            a.set(i, k, R::zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { d.neg() } else { d })
}

/// Rank over a field by Gaussian elimination.
pub fn rank<R: Field>(m: &Matrix<R>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for i in r + 1..rows {
            let f = a.get(i, c).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                a.set(i, j, v);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Dieudonne determinant, stored through the Study determinant
/// `study = |det|^2` of the complex embedding.
#[derive(Clone, Debug, PartialEq)]
pub struct Dieudonne<T> {
    pub study: T,
}

impl Dieudonne<BigRational> {
    pub fn value(&self) -> f64 {
        crate::rings::Scalar::to_f64(&self.study).sqrt()
    }
}

impl Dieudonne<f64> {
    pub fn value(&self) -> f64 {
        self.study.max(0.0).sqrt()
    }
}

/// Replaces each quaternion by its 2x2 complex block.
pub fn complex_embedding(m: &Matrix<Quaternion<f64>>) -> Matrix<Complex64> {
    Matrix::from_fn(2 * m.rows(), 2 * m.cols(), |i, j| {
        m.get(i / 2, j / 2).complex_block()[i % 2][j % 2]
    })
}

pub fn complex_embedding_exact(m: &Matrix<Quaternion<BigRational>>) -> Matrix<Gaussian> {
    Matrix::from_fn(2 * m.rows(), 2 * m.cols(), |i, j| {
        m.get(i / 2, j / 2).complex_block()[i % 2][j % 2].clone()
    })
}

/// Exact Study determinant for rational quaternion matrices.
pub fn det_dieudonne_exact(m: &Matrix<Quaternion<BigRational>>) -> Result<Dieudonne<BigRational>> {
    require_square(m)?;
    let d = det_exact(&complex_embedding_exact(m))?;
    debug_assert!(d.im == BigRational::zero(), "Study determinant is real");
    Ok(Dieudonne { study: d.re })
}

/// Floating Study determinant for double quaternion matrices.
pub fn det_dieudonne(m: &Matrix<Quaternion<f64>>) -> Result<Dieudonne<f64>> {
    require_square(m)?;
    Ok(Dieudonne {
        study: det_complex(&complex_embedding(m))?.re,
    })
}

/// |det| for complex matrices.
pub fn det_dieudonne_complex(m: &Matrix<Complex64>) -> Result<f64> {
    Ok(det_complex(m)?.norm())
}

/// LU determinant of a complex matrix.
pub fn det_complex(m: &Matrix<Complex64>) -> Result<Complex64> {
    require_square(m)?;
    if m.rows() == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(to_dmatrix(m).determinant())
}

pub fn to_dmatrix(m: &Matrix<Complex64>) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| *m.get(i, j))
}

pub fn from_dmatrix(d: &DMatrix<Complex64>) -> Matrix<Complex64> {
    Matrix::from_fn(d.nrows(), d.ncols(), |i, j| d[(i, j)])
}

/// Coefficients `c_0..c_n` of the monic `det(t I - m)`, by similarity
/// reduction to upper Hessenberg form followed by the Hessenberg recurrence.
pub fn charpoly<R: Field>(m: &Matrix<R>) -> Result<Vec<R>> {
    require_square(m)?;
    let n = m.rows();
    let mut a = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !a.get(i, j).is_zero()) else {
            continue;
        };
        if p != j + 1 {
            a.swap_rows(p, j + 1);
            for r in 0..n {
                let (x, y) = (a.get(r, p).clone(), a.get(r, j + 1).clone());
                a.set(r, p, y);
                a.set(r, j + 1, x);
            }
        }
        let inv = a.get(j + 1, j).inv().expect("nonzero pivot");
        for r in j + 2..n {
            let f = a.get(r, j).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = a.get(r, c).sub(&f.mul(a.get(j + 1, c)));
                a.set(r, c, v);
            }
            for c in 0..n {
                let v = a.get(c, j + 1).add(&f.mul(a.get(c, r)));
                a.set(c, j + 1, v);
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    let mut p: Vec<Vec<R>> = vec![vec![R::one()]];
    for k in 0..n {
        let mut next = vec![R::zero(); k + 2];
        for (d, c) in p[k].iter().enumerate() {
            next[d + 1] = next[d + 1].add(c);
            next[d] = next[d].sub(&a.get(k, k).mul(c));
        }
        let mut sub = R::one();
        for i in (0..k).rev() {
            sub = sub.mul(a.get(i + 1, i));
            let coef = a.get(i, k).mul(&sub);
            if coef.is_zero() {
                continue;
            }
            for (d, c) in p[i].iter().enumerate() {
                next[d] = next[d].sub(&coef.mul(c));
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Poly;

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(
            det_exact(&Matrix::<BigRational>::zeros(0, 0)).unwrap(),
            q(1)
        );
        assert_eq!(det_exact(&qm(&[&[0, 1], &[1, 0]])).unwrap(), q(-1));
        assert_eq!(det_exact(&qm(&[&[2, 4], &[1, 2]])).unwrap(), q(0));
        assert_eq!(
            det_exact(&qm(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]])).unwrap(),
            q(-6)
        );
        assert!(matches!(
            det_exact(&Matrix::<BigRational>::zeros(2, 3)),
            Err(Error::ShapeError(_))
        ));
    }

    #[test]
    fn polynomial_determinant_is_expanded() {
        let (x, y) = (Poly::var(0), Poly::var(1));
        let m = Matrix::from_rows(vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]])
            .unwrap();
        assert_eq!(det_exact(&m).unwrap(), x.mul(&x).sub(&y.mul(&y)));
    }

    #[test]
    fn floats_are_not_exact() {
        let m = Matrix::<f64>::identity(2);
        assert!(matches!(det_exact(&m), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&qm(&[&[1, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rank(&Matrix::<BigRational>::zeros(3, 2)), 0);
    }

    #[test]
    fn study_of_diagonal_quaternions() {
        let q1 = Quaternion::new(1.0, 2.0, 0.0, -1.0);
        let q2 = Quaternion::new(0.5, 0.0, 3.0, 1.0);
        let m = Matrix::diagonal(&[q1.clone(), q2.clone()]);
        let d = det_dieudonne(&m).unwrap();
        let expect = q1.norm_sq().sqrt() * q2.norm_sq().sqrt();
        assert!((d.value() - expect).abs() < 1e-12 * expect);
        let unit = Matrix::diagonal(&[Quaternion::new(0.5, 0.5, 0.5, 0.5)]);
        assert!((det_dieudonne(&unit).unwrap().value() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn charpoly_of_small_matrix() {
        // t^2 - 5t + 4 for [[2,1],[2,3]]
        assert_eq!(
            charpoly(&qm(&[&[2, 1], &[2, 3]])).unwrap(),
            vec![q(4), q(-5), q(1)]
        );
        assert_eq!(
            charpoly(&Matrix::<BigRational>::zeros(0, 0)).unwrap(),
            vec![q(1)]
        );
        // needs a row swap: (t^2 - 1)(t - 2)
        let m = qm(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(charpoly(&m).unwrap(), vec![q(2), q(-1), q(-2), q(1)]);
        let m = qm(&[&[1, 2, 3], &[0, 0, 4], &[5, 6, 0]]);
        // t^3 - t^2 - 39 t - 16
        assert_eq!(charpoly(&m).unwrap(), vec![q(-16), q(-39), q(-1), q(1)]);
    }
}
