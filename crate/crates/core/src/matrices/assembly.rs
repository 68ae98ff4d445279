use crate::energy::EnergizedComplex;
use crate::error::{Error, Result};
use crate::rings::Ring;

use super::Matrix;

/// L(u, v) = sum of h(x) over members x contained in both u and v.
pub fn build_l<R: Ring>(e: &EnergizedComplex<R>) -> Matrix<R> {
    let s = e.geometry().simplices();
    let n = s.len();
    let mut m = Matrix::<R>::zeros(n, n);
    for (x, hx) in s.iter().zip(e.h()) {
        let star: Vec<usize> = (0..n).filter(|&u| x.is_subset(&s[u])).collect();
        for &u in &star {
            for &v in &star {
                let next = m.get(u, v).add(hx);
                m.set(u, v, next);
            }
        }
    }
    m
}

/// g(u, v) = omega(u) omega(v) times the sum of h(x) over members x containing u and v.
pub fn build_g<R: Ring>(e: &EnergizedComplex<R>) -> Matrix<R> {
    let s = e.geometry().simplices();
    let w = e.geometry().omegas();
    let n = s.len();
    let mut m = Matrix::<R>::zeros(n, n);
    for (x, hx) in s.iter().zip(e.h()) {
        let core: Vec<usize> = (0..n).filter(|&u| s[u].is_subset(x)).collect();
        for &u in &core {
            for &v in &core {
                let next = m.get(u, v).add(&hx.scale(w[u] * w[v]));
                m.set(u, v, next);
            }
        }
    }
    m
}

/// Rank-one checkerboard S(x, y) = omega(x) omega(y).
pub fn checkerboard<R: Ring>(e: &EnergizedComplex<R>) -> Matrix<R> {
    let w = e.geometry().omegas();
    Matrix::from_fn(w.len(), w.len(), |i, j| R::from_int(w[i] * w[j]))
}

/// diag(omega). Conjugating by it multiplies entrywise by the checkerboard,
/// and tr(diag(omega) m) is the super trace.
pub fn sign_diagonal<R: Ring>(e: &EnergizedComplex<R>) -> Matrix<R> {
    let w: Vec<R> = e.geometry().omegas().into_iter().map(R::from_int).collect();
    Matrix::diagonal(&w)
}

/// The product g* L. Requires a simplicial complex.
pub fn green_star_product<R: Ring>(e: &EnergizedComplex<R>) -> Result<Matrix<R>> {
    if !e.geometry().is_complex() {
        return Err(Error::NotAComplex);
    }
    build_g(e).adjoint().mul(&build_l(e))
}

/// g* L for vector-valued `h` where the product `h(u)* h(v)` is replaced by
/// the real inner product. Entries are real.
pub fn green_star_product_inner(
    geometry: &crate::complex::Geometry,
    vectors: &[Vec<f64>],
) -> Result<Matrix<f64>> {
    if !geometry.is_complex() {
        return Err(Error::NotAComplex);
    }
    let s = geometry.simplices();
    let n = s.len();
    if vectors.len() != n {
        return Err(Error::ShapeError(format!(
            "{} vectors for {} simplices",
            vectors.len(),
            n
        )));
    }
    let w = geometry.omegas();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let gram = Matrix::from_fn(n, n, |u, v| dot(&vectors[u], &vectors[v]));
    Ok(Matrix::from_fn(n, n, |x, y| {
        let mut acc = 0.0;
        for z in 0..n {
            let sign = (w[x] * w[z]) as f64;
            for u in (0..n).filter(|&u| s[x].is_subset(&s[u]) && s[z].is_subset(&s[u])) {
                for v in (0..n).filter(|&v| s[v].is_subset(&s[z]) && s[v].is_subset(&s[y])) {
                    acc += sign * gram.get(u, v);
                }
            }
        }
        acc
    }))
}
