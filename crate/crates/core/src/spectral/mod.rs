//! Eigen-analysis of self-adjoint matrices derived from an energized complex.
//!
//! Floating point eigen-solves go through `nalgebra` on complex Hermitian
//! matrices; real inputs are embedded as complex ones.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;

use crate::energy::EnergizedComplex;
use crate::error::{Error, Result};
use crate::matrices::det::{from_dmatrix, to_dmatrix};
use crate::matrices::{build_g, build_l, charpoly, Matrix};
use crate::rings::{Gaussian, Ring, Scalar};

mod hodge;

pub use hodge::{hodge_betti, mckean_singer_check, HodgeReport};

const HERMITIAN_TOL: f64 = 1e-9;

/// Rings whose values embed in the complex numbers.
pub trait ToComplex: Ring {
    fn to_c64(&self) -> Complex64;
}

impl ToComplex for f64 {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl ToComplex for Complex64 {
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

impl ToComplex for BigRational {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl ToComplex for Gaussian {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

pub fn to_complex<R: ToComplex>(m: &Matrix<R>) -> Matrix<Complex64> {
    m.map(ToComplex::to_c64)
}

/// Eigenvalues in ascending order with unit eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl Eigen {
    /// `V diag(f(lambda)) V*`.
    pub fn apply(&self, f: impl Fn(f64) -> Complex64) -> Matrix<Complex64> {
        let d =
            DMatrix::from_diagonal(&self.values.iter().map(|&l| f(l)).collect::<Vec<_>>().into());
        from_dmatrix(&(&self.vectors * d * self.vectors.adjoint()))
    }
}

fn frobenius(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian eigen-solve after the (m + m*)/2 guard.
pub fn eigen_self_adjoint(m: &Matrix<Complex64>) -> Result<Eigen> {
    if !m.is_square() {
        return Err(Error::ShapeError(format!(
            "{}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let d = to_dmatrix(m);
    let skew = frobenius(&(&d - d.adjoint()));
    if skew > HERMITIAN_TOL * frobenius(&d).max(1.0) {
        return Err(Error::NotSelfAdjoint(skew));
    }
    let sym = (&d + d.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..m.rows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(m.rows(), m.rows(), |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(Eigen { values, vectors })
}

/// Eigenvalues with inertia counts and optional zeta samples.
#[derive(Clone, Debug, Default)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub zeta: Vec<(Complex64, Complex64)>,
}

impl SpectralReport {
    pub fn from_eigenvalues(eigenvalues: Vec<f64>) -> Self {
        let scale = eigenvalues.iter().fold(1f64, |a, l| a.max(l.abs()));
        let tol = 1e-9 * scale;
        SpectralReport {
            positive: eigenvalues.iter().filter(|&&l| l > tol).count(),
            negative: eigenvalues.iter().filter(|&&l| l < -tol).count(),
            zero: eigenvalues.iter().filter(|&&l| l.abs() <= tol).count(),
            eigenvalues,
            zeta: Vec::new(),
        }
    }
}

pub fn spectrum<R: ToComplex>(m: &Matrix<R>) -> Result<SpectralReport> {
    Ok(SpectralReport::from_eigenvalues(
        eigen_self_adjoint(&to_complex(m))?.values,
    ))
}

/// Number of sign changes in a coefficient list, zeros skipped.
pub fn sign_changes(coeffs: &[BigRational]) -> usize {
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|c| !Ring::is_zero(*c))
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exact (positive, negative, zero) root counts of a real-rooted polynomial
/// given by ascending coefficients.
pub fn real_rooted_inertia(coeffs: &[BigRational]) -> (usize, usize, usize) {
    let zero = coeffs.iter().take_while(|c| Ring::is_zero(*c)).count();
    let pos = sign_changes(coeffs);
    let mirrored: Vec<BigRational> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
        .collect();
    (pos, sign_changes(&mirrored), zero)
}

/// True when the roots are closed under `t -> 1/t` with multiplicity,
/// i.e. `c_0 c_{n-k} = c_k` for all k.
pub fn is_reciprocal(coeffs: &[BigRational]) -> bool {
    let n = coeffs.len() - 1;
    let c0 = &coeffs[0];
    !Ring::is_zero(c0) && (0..=n).all(|k| c0.mul(&coeffs[n - k]) == coeffs[k])
}

/// Sign counts of h next to the inertia of L and g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub h: (usize, usize),
    pub l: (usize, usize),
    pub g: (usize, usize),
    /// Descartes counts on the exact characteristic polynomials of L and g.
    pub exact: Option<((usize, usize), (usize, usize))>,
}

impl Signature {
    pub fn agrees(&self) -> bool {
        self.l == self.h
            && self.g == self.h
            && self.exact.is_none_or(|(l, g)| l == self.h && g == self.h)
    }
}

pub const EXACT_SIGNATURE_LIMIT: usize = 12;

pub fn signature_counts<R: Scalar + ToComplex>(e: &EnergizedComplex<R>) -> Result<Signature> {
    if let Some(i) = e.h().iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroEnergy(e.geometry().simplices()[i].to_string()));
    }
    let pos = e.h().iter().filter(|v| v.to_f64() > 0.0).count();
    let h = (pos, e.len() - pos);
    let (l, g) = (build_l(e), build_g(e));
    let count = |m: &Matrix<R>| spectrum(m).map(|r| (r.positive, r.negative));
    let exact = match e
        .h()
        .iter()
        .map(Scalar::to_rational)
        .collect::<Option<Vec<_>>>()
    {
        Some(q) if e.len() <= EXACT_SIGNATURE_LIMIT => {
            let exact = EnergizedComplex::new(e.geometry().clone(), q)?;
            let inertia = |m: &Matrix<BigRational>| -> Result<(usize, usize)> {
                let (p, n, _) = real_rooted_inertia(&charpoly(m)?);
                Ok((p, n))
            };
            Some((inertia(&build_l(&exact))?, inertia(&build_g(&exact))?))
        }
        _ => None,
    };
    Ok(Signature {
        h,
        l: count(&l)?,
        g: count(&g)?,
        exact,
    })
}

/// Spectral data of H = L* L.
pub fn heat_operator<R: ToComplex>(e: &EnergizedComplex<R>) -> Result<Eigen> {
    let l = to_complex(&build_l(e));
    let h = l.adjoint().mul(&l)?;
    let eig = eigen_self_adjoint(&h)?;
    let max = eig.values.last().copied().unwrap_or(1.0).max(1.0);
    if let Some(&min) = eig.values.first() {
        if min <= 1e-12 * max {
            return Err(Error::SingularOperator(min));
        }
    }
    Ok(eig)
}

/// zeta(s) = tr(H^s) = sum of lambda^s over the spectrum of H = L* L.
pub fn zeta_values(eigenvalues: &[f64], s: Complex64) -> Complex64 {
    eigenvalues.iter().map(|&l| (s * l.ln()).exp()).sum()
}

pub fn zeta<R: ToComplex>(
    e: &EnergizedComplex<R>,
    s_values: &[Complex64],
) -> Result<SpectralReport> {
    let eig = heat_operator(e)?;
    let mut report = SpectralReport::from_eigenvalues(eig.values.clone());
    report.zeta = s_values
        .iter()
        .map(|&s| (s, zeta_values(&eig.values, s)))
        .collect();
    Ok(report)
}

/// H^s for H = L* L.
pub fn heat_power<R: ToComplex>(
    e: &EnergizedComplex<R>,
    s: Complex64,
) -> Result<Matrix<Complex64>> {
    Ok(heat_operator(e)?.apply(|l| (s * l.ln()).exp()))
}

/// U(t) = (g* g)^{it}.
pub fn schrodinger_operator<R: ToComplex>(
    e: &EnergizedComplex<R>,
    t: f64,
) -> Result<Matrix<Complex64>> {
    let g = to_complex(&build_g(e));
    let a = g.adjoint().mul(&g)?;
    let eig = eigen_self_adjoint(&a)?;
    if let Some(&min) = eig.values.first() {
        if min <= 1e-12 * eig.values.last().copied().unwrap_or(1.0).max(1.0) {
            return Err(Error::SingularOperator(min));
        }
    }
    Ok(eig.apply(|l| (Complex64::new(0.0, t) * l.ln()).exp()))
}

pub fn schrodinger_flow<R: ToComplex>(
    e: &EnergizedComplex<R>,
    t: f64,
    u0: &[Complex64],
) -> Result<Vec<Complex64>> {
    if u0.len() != e.len() {
        return Err(Error::ShapeError(format!(
            "state of length {} for {} simplices",
            u0.len(),
            e.len()
        )));
    }
    let u = schrodinger_operator(e, t)?;
    Ok((0..u.rows())
        .map(|i| u.row(i).iter().zip(u0).map(|(a, b)| a * b).sum())
        .collect())
}

/// Trajectory u(0), ..., u(steps) of u(k+1) = L_k* L_k u(k), where L_k is
/// assembled with h = u(k).
pub fn nonlinear_flow(
    e0: &EnergizedComplex<Complex64>,
    steps: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let mut trajectory = vec![e0.h().to_vec()];
    let mut e = e0.clone();
    for _ in 0..steps {
        let l = build_l(&e);
        let h = l.adjoint().mul(&l)?;
        let next: Vec<Complex64> = (0..h.rows())
            .map(|i| h.row(i).iter().zip(e.h()).map(|(a, b)| a * b).sum())
            .collect();
        e = EnergizedComplex::new(e.geometry().clone(), next.clone())?;
        trajectory.push(next);
    }
    Ok(trajectory)
}
