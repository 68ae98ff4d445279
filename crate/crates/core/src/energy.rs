//! Scalar functionals of an energized complex.
//!
//! Double sums over `x, y` are ordered and include the diagonal, so
//! `h(x)* h(y)` and `h(y)* h(x)` both appear in the quadratic energy.

use crate::complex::{omega_sign, Geometry, Simplex};
use crate::error::{Error, Result};
use crate::matrices::{build_g, sign_diagonal, Matrix};
use crate::rings::sample::EnergyAssignment;
use crate::rings::{Associative, Ring, Tagged};

/// A geometry together with `h`, stored in canonical simplex order.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergizedComplex<R> {
    geometry: Geometry,
    h: Vec<R>,
}

impl<R: Ring> EnergizedComplex<R> {
    pub fn new(geometry: Geometry, h: Vec<R>) -> Result<Self> {
        if h.len() != geometry.len() {
            return Err(Error::ShapeError(format!(
                "{} values for {} simplices",
                h.len(),
                geometry.len()
            )));
        }
        Ok(EnergizedComplex { geometry, h })
    }

    /// Assigns `f(x)` to every simplex.
    pub fn from_fn(geometry: Geometry, f: impl FnMut(&Simplex) -> R) -> Self {
        let h = geometry.simplices().iter().map(f).collect();
        EnergizedComplex { geometry, h }
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn h(&self) -> &[R] {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn value(&self, x: &Simplex) -> Result<&R> {
        Ok(&self.h[self.geometry.require(x)?])
    }

    /// chi(A) = sum of h over `subset`, or over the whole geometry.
    pub fn chi(&self, subset: Option<&[Simplex]>) -> Result<R> {
        match subset {
            None => Ok(R::sum(&self.h)),
            Some(a) => a
                .iter()
                .try_fold(R::zero(), |acc, x| Ok(acc.add(self.value(x)?))),
        }
    }

    /// omega(G) = sum of h(x)* h(y) over intersecting ordered pairs.
    pub fn omega_quadratic(&self) -> R {
        let s = self.geometry.simplices();
        let mut acc = R::zero();
        for (i, x) in s.iter().enumerate() {
            let hx = self.h[i].conj();
            for (j, y) in s.iter().enumerate() {
                if x.intersects(y) {
                    acc = acc.add(&hx.mul(&self.h[j]));
                }
            }
        }
        acc
    }

    /// The same pair sum restricted to a subset, with no identity attached.
    pub fn omega_subset(&self, subset: &[Simplex]) -> Result<R> {
        let idx = subset
            .iter()
            .map(|x| self.geometry.require(x))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = R::zero();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx {
                if subset[a].intersects(&self.geometry.simplices()[j]) {
                    acc = acc.add(&self.h[i].conj().mul(&self.h[j]));
                }
            }
        }
        Ok(acc)
    }

    /// omega_3(G) = sum of h(x)* h(y) h(z) over ordered triples whose three
    /// pairwise intersections are nonempty.
    pub fn omega_cubic(&self) -> Result<R> {
        if !R::ASSOCIATIVE {
            return Err(Error::UnsupportedRing(R::NAME.into()));
        }
        let s = self.geometry.simplices();
        let n = s.len();
        let meets: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| s[i].intersects(&s[j])).collect())
            .collect();
        let mut acc = R::zero();
        for x in 0..n {
            let hx = self.h[x].conj();
            for y in (0..n).filter(|&y| meets[x][y]) {
                let hxy = hx.mul(&self.h[y]);
                for z in (0..n).filter(|&z| meets[x][z] && meets[y][z]) {
                    acc = acc.add(&hxy.mul(&self.h[z]));
                }
            }
        }
        Ok(acc)
    }

    /// K(x) = omega(x) g(x, x).
    pub fn curvature(&self, x: &Simplex) -> Result<R> {
        self.geometry.require(x)?;
        let total = self
            .geometry
            .simplices()
            .iter()
            .zip(&self.h)
            .filter(|(z, _)| x.is_subset(z))
            .fold(R::zero(), |acc, (_, v)| acc.add(v));
        // omega(x) g(x,x) = omega(x)^3 chi(W+(x)) = omega(x) chi(W+(x))
        Ok(total.scale(omega_sign(x)))
    }

    /// Sum of all Green matrix entries.
    pub fn green_total(&self) -> R {
        build_g(self).total()
    }

    /// sum over x, y of omega(x) omega(y) |g(x,y)|^2.
    pub fn green_quadratic_total(&self) -> R {
        let g = build_g(self);
        let w = self.geometry.omegas();
        let mut acc = R::zero();
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                acc = acc.add(&g.get(i, j).norm().scale(w[i] * w[j]));
            }
        }
        acc
    }
}

impl<R: Tagged> EnergizedComplex<R> {
    pub fn from_assignment(geometry: Geometry, h: &EnergyAssignment) -> Result<Self> {
        Self::new(geometry, h.typed()?)
    }
}

/// str(m) = sum of omega(x) m(x, x).
pub fn super_trace<R: Ring>(m: &Matrix<R>, e: &EnergizedComplex<R>) -> Result<R> {
    if m.rows() != e.len() || m.cols() != e.len() {
        return Err(Error::ShapeError(format!(
            "{}x{} matrix for {} simplices",
            m.rows(),
            m.cols(),
            e.len()
        )));
    }
    let w = e.geometry().omegas();
    Ok((0..m.rows()).fold(R::zero(), |acc, i| acc.add(&m.get(i, i).scale(w[i]))))
}

/// tr(S m) with the diagonal sign matrix S = diag(omega).
pub fn signed_trace<R: Associative>(m: &Matrix<R>, e: &EnergizedComplex<R>) -> Result<R> {
    Ok(sign_diagonal(e).mul(m)?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{complete, parse_geometry};
    use crate::rings::{BigRational, Poly, Symbols};

    fn k2_symbolic() -> (EnergizedComplex<Poly>, Symbols) {
        let g = complete(2);
        (
            EnergizedComplex::new(g, (0..3).map(Poly::var).collect()).unwrap(),
            Symbols::indexed("x", 3),
        )
    }

    fn sx(v: &[u32]) -> Simplex {
        Simplex::from_labels(v)
    }

    #[test]
    fn chi_examples() {
        let (e, s) = k2_symbolic();
        assert_eq!(e.chi(None).unwrap().display(&s).to_string(), "x1 + x2 + x3");
        assert!(e.chi(Some(&[])).unwrap().is_zero());
        assert!(matches!(
            e.chi(Some(&[sx(&[7])])),
            Err(Error::NotAMember(_))
        ));
        let top = EnergizedComplex::from_fn(complete(2), |x| BigRational::from_int(x.omega()));
        assert!(top.chi(None).unwrap().is_one());
    }

    #[test]
    fn omega_k2_symbolic_commutative() {
        let (e, s) = k2_symbolic();
        assert_eq!(
            e.omega_quadratic().display(&s).to_string(),
            "x1^2 + 2 x1 x3 + x2^2 + 2 x2 x3 + x3^2"
        );
    }

    #[test]
    fn omega_of_triangle_boundary_is_zero() {
        let g = parse_geometry(&[
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ])
        .unwrap();
        let e = EnergizedComplex::from_fn(g, |x| BigRational::from_int(x.omega()));
        assert!(e.omega_quadratic().is_zero());
        assert!(e.chi(None).unwrap().is_zero());
    }

    #[test]
    fn single_point() {
        let g = parse_geometry(&[vec![4]]).unwrap();
        let e = EnergizedComplex::new(g, vec![BigRational::from_int(3)]).unwrap();
        assert_eq!(e.omega_quadratic(), BigRational::from_int(9));
        let one =
            EnergizedComplex::new(e.geometry().clone(), vec![BigRational::from_int(1)]).unwrap();
        assert!(one.omega_cubic().unwrap().is_one());
    }

    #[test]
    fn curvature_k2() {
        let (e, s) = k2_symbolic();
        assert_eq!(
            e.curvature(&sx(&[1])).unwrap().display(&s).to_string(),
            "x1 + x3"
        );
        assert_eq!(
            e.curvature(&sx(&[1, 2])).unwrap().display(&s).to_string(),
            "-x3"
        );
        let total = e
            .geometry()
            .simplices()
            .iter()
            .fold(Poly::zero(), |acc, x| acc.add(&e.curvature(x).unwrap()));
        assert_eq!(total, e.chi(None).unwrap());
    }

    #[test]
    fn super_trace_examples() {
        let (e, s) = k2_symbolic();
        let g = build_g(&e);
        assert_eq!(
            super_trace(&g, &e).unwrap().display(&s).to_string(),
            "x1 + x2 + x3"
        );
        assert!(super_trace(&Matrix::identity(3), &e).unwrap().is_one());
        assert!(matches!(
            super_trace(&Matrix::identity(2), &e),
            Err(Error::ShapeError(_))
        ));
        assert_eq!(signed_trace(&g, &e).unwrap(), super_trace(&g, &e).unwrap());
    }

    #[test]
    fn octonion_cubic_rejected() {
        use crate::rings::Octonion;
        let e = EnergizedComplex::new(complete(1), vec![Octonion::basis(3)]).unwrap();
        assert_eq!(
            e.omega_cubic(),
            Err(Error::UnsupportedRing("octonion".into()))
        );
    }
}
