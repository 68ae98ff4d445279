use num_rational::BigRational;

use crate::complex::Geometry;
use crate::error::{Error, Result};
use crate::matrices::{rank, Matrix};
use crate::rings::Ring;

use super::{eigen_self_adjoint, to_complex};

/// Incidence matrices, Hodge blocks and Betti numbers of a complex.
#[derive(Clone, Debug)]
pub struct HodgeReport {
    /// `d[k]` maps k-chains to (k+1)-chains, of shape `f_{k+1} x f_k`.
    pub d: Vec<Matrix<BigRational>>,
    /// `h[k] = d[k-1] d[k-1]^T + d[k]^T d[k]` on k-chains.
    pub h: Vec<Matrix<BigRational>>,
    pub betti: Vec<usize>,
}

impl HodgeReport {
    /// Coefficients of the Poincare polynomial, which are the Betti numbers.
    pub fn poincare(&self) -> &[usize] {
        &self.betti
    }

    pub fn poincare_at(&self, t: i64) -> i64 {
        self.betti
            .iter()
            .rev()
            .fold(0, |acc, &b| acc * t + b as i64)
    }

    pub fn euler_poincare(&self) -> i64 {
        self.poincare_at(-1)
    }
}

fn by_dimension(g: &Geometry) -> Vec<Vec<usize>> {
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for (i, x) in g.simplices().iter().enumerate() {
        if levels.len() <= x.dim() {
            levels.resize(x.dim() + 1, Vec::new());
        }
        levels[x.dim()].push(i);
    }
    levels
}

pub fn hodge_betti(g: &Geometry) -> Result<HodgeReport> {
    if !g.is_complex() {
        return Err(Error::NotAComplex);
    }
    let s = g.simplices();
    let levels = by_dimension(g);
    let top = levels.len();
    let d: Vec<Matrix<BigRational>> = (0..top.saturating_sub(1))
        .map(|k| {
            Matrix::from_fn(levels[k + 1].len(), levels[k].len(), |r, c| {
                let (y, x) = (&s[levels[k + 1][r]], &s[levels[k][c]]);
                if !x.is_subset(y) {
                    return BigRational::zero();
                }
                // y minus its i-th vertex carries the sign (-1)^i
                let i = y
                    .vertices()
                    .iter()
                    .position(|v| !x.vertices().contains(v))
                    .expect("one extra vertex");
                BigRational::from_int(if i % 2 == 0 { 1 } else { -1 })
            })
        })
        .collect();
    let mut h = Vec::with_capacity(top);
    let mut betti = Vec::with_capacity(top);
    for k in 0..top {
        let n = levels[k].len();
        let mut block = Matrix::zeros(n, n);
        let mut ranks = 0;
        if k > 0 {
            block = block.add(&d[k - 1].mul(&d[k - 1].transpose())?)?;
            ranks += rank(&d[k - 1]);
        }
        if k < d.len() {
            block = block.add(&d[k].transpose().mul(&d[k])?)?;
            ranks += rank(&d[k]);
        }
        betti.push(n - ranks);
        h.push(block);
    }
    Ok(HodgeReport { d, h, betti })
}

/// `(str(exp(-H t)), chi)` with the super trace weighted by (-1)^k on k-chains.
pub fn mckean_singer_check(g: &Geometry, t: f64) -> Result<(f64, i64)> {
    let report = hodge_betti(g)?;
    let mut str_val = 0.0;
    for (k, block) in report.h.iter().enumerate() {
        let heat: f64 = eigen_self_adjoint(&to_complex(block))?
            .values
            .iter()
            .map(|l| (-l * t).exp())
            .sum();
        str_val += if k % 2 == 0 { heat } else { -heat };
    }
    Ok((str_val, g.euler_characteristic()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{complete, parse_geometry};

    #[test]
    fn k2_is_contractible() {
        let r = hodge_betti(&complete(2)).unwrap();
        assert_eq!(r.betti, vec![1, 0]);
        assert_eq!(r.euler_poincare(), 1);
    }

    #[test]
    fn circle() {
        let g = parse_geometry(&[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let g = crate::complex::downward_closure(&g);
        let r = hodge_betti(&g).unwrap();
        assert_eq!(r.betti, vec![1, 1]);
        assert_eq!(r.euler_poincare(), 0);
        let (s, chi) = mckean_singer_check(&g, 0.5).unwrap();
        assert!((s - chi as f64).abs() < 1e-8);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let r = hodge_betti(&complete(4)).unwrap();
        for w in r.d.windows(2) {
            assert!(w[1]
                .mul(&w[0])
                .unwrap()
                .entries()
                .iter()
                .all(|v| v.is_zero()));
        }
        assert_eq!(r.betti, vec![1, 0, 0, 0]);
        for (k, block) in r.h.iter().enumerate() {
            assert_eq!(block.rows() - rank(block), r.betti[k]);
        }
    }

    #[test]
    fn non_complex_rejected() {
        let g = parse_geometry(&[vec![1], vec![1, 2]]).unwrap();
        assert!(matches!(hodge_betti(&g), Err(Error::NotAComplex)));
    }
}
