//! Theorem and corollary checks with pass, fail or inapplicable verdicts.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::complex::Geometry;
use crate::energy::{super_trace, EnergizedComplex};
use crate::error::{Error, Result};
use crate::matrices::det::{det_complex, det_dieudonne, det_dieudonne_exact};
use crate::matrices::{
    build_g, build_l, charpoly, det_exact, fredholm_energy, fredholm_minor_sum, green_star_product,
    sign_diagonal, Matrix,
};
use crate::rings::sample::{is_unit_valued, EnergyAssignment};
use crate::rings::{
    FreeElem, Gaussian, IntegralDomain, Octonion, Poly, Quaternion, Ring, RingTag, Symbols, Tagged,
};
use crate::spectral::{
    heat_operator, hodge_betti, is_reciprocal, mckean_singer_check, signature_counts, zeta_values,
    ToComplex,
};

/// Relative tolerance for identities over float rings.
pub const FLOAT_TOL: f64 = 1e-9;
/// Tolerance for g* L = 1 over float rings.
pub const INVERSE_TOL: f64 = 1e-10;
/// Largest n for which minors are enumerated.
pub const MINOR_LIMIT: usize = 8;
pub const ZETA_GRID_RE: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];
pub const ZETA_GRID_IM: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];
pub const HEAT_TIMES: [f64; 2] = [0.5, 2.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    GaussBonnet,
    QuadTrace,
    Cubic,
    Signature,
    ZetaFe,
    Isospectral,
    CauchyBinet,
    McKeanSinger,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::GaussBonnet,
        TheoremId::QuadTrace,
        TheoremId::Cubic,
        TheoremId::Signature,
        TheoremId::ZetaFe,
        TheoremId::Isospectral,
        TheoremId::CauchyBinet,
        TheoremId::McKeanSinger,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::GaussBonnet => "C_gaussbonnet",
            TheoremId::QuadTrace => "C_quadtrace",
            TheoremId::Cubic => "C_cubic",
            TheoremId::Signature => "C_signature",
            TheoremId::ZetaFe => "C_zeta_fe",
            TheoremId::Isospectral => "C_isospectral",
            TheoremId::CauchyBinet => "C_cauchybinet",
            TheoremId::McKeanSinger => "C_mckeansinger",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown theorem id '{s}'")))
    }
}

/// Parses `T1,T2,...` or `all`.
pub fn parse_suite(s: &str) -> Result<Vec<TheoremId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let ids = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>>>()?;
    if ids.is_empty() {
        return Err(Error::Parse("empty suite".into()));
    }
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        }
    }
}

/// The two sides of a failed identity, rendered in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub expected: String,
    pub actual: String,
    pub at: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub id: TheoremId,
    pub status: Status,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
}

impl VerificationOutcome {
    pub fn pass(id: TheoremId) -> Self {
        VerificationOutcome {
            id,
            status: Status::Pass,
            witness: None,
            reason: None,
        }
    }

    pub fn fail(id: TheoremId, expected: String, actual: String, at: Option<String>) -> Self {
        VerificationOutcome {
            id,
            status: Status::Fail,
            witness: Some(Witness {
                expected,
                actual,
                at,
            }),
            reason: None,
        }
    }

    pub fn inapplicable(id: TheoremId, reason: impl Into<String>) -> Self {
        VerificationOutcome {
            id,
            status: Status::Inapplicable,
            witness: None,
            reason: Some(reason.into()),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("id".into(), json!(self.id.as_str()));
        m.insert("status".into(), json!(self.status.as_str()));
        if let Some(w) = &self.witness {
            let mut wj = Map::new();
            wj.insert("expected".into(), json!(w.expected));
            wj.insert("actual".into(), json!(w.actual));
            if let Some(at) = &w.at {
                wj.insert("at".into(), json!(at));
            }
            m.insert("witness".into(), Value::Object(wj));
        }
        if let Some(r) = &self.reason {
            m.insert("reason".into(), json!(r));
        }
        Value::Object(m)
    }
}

fn show<R: Tagged>(v: &R, s: &Symbols) -> String {
    v.clone().into_value().render(s)
}

fn same<R: Ring>(a: &R, b: &R) -> bool {
    if R::EXACT {
        a == b
    } else {
        a.approx_eq(b, FLOAT_TOL)
    }
}

fn compare<R: Tagged>(id: TheoremId, expected: &R, actual: &R, s: &Symbols) -> VerificationOutcome {
    if same(expected, actual) {
        VerificationOutcome::pass(id)
    } else {
        VerificationOutcome::fail(id, show(expected, s), show(actual, s), None)
    }
}

fn first_mismatch<R: Tagged>(
    id: TheoremId,
    expected: &Matrix<R>,
    actual: &Matrix<R>,
    g: &Geometry,
    s: &Symbols,
    tol: f64,
    name: &str,
) -> VerificationOutcome {
    let x = g.simplices();
    for i in 0..expected.rows() {
        for j in 0..expected.cols() {
            let (a, b) = (expected.get(i, j), actual.get(i, j));
            let ok = if R::EXACT {
                a == b
            } else {
                a.approx_eq(b, tol)
            };
            if !ok {
                return VerificationOutcome::fail(
                    id,
                    show(a, s),
                    show(b, s),
                    Some(format!("{name}({},{})", x[i], x[j])),
                );
            }
        }
    }
    VerificationOutcome::pass(id)
}

fn product<R: Ring>(values: &[R]) -> R {
    values.iter().fold(R::one(), |acc, v| acc.mul(v))
}

fn needs_complex<R: Ring>(id: TheoremId, e: &EnergizedComplex<R>) -> Option<VerificationOutcome> {
    (!e.geometry().is_complex())
        .then(|| VerificationOutcome::inapplicable(id, "geometry is not a simplicial complex"))
}

/// Ring specific parts of the suite. Defaults are inapplicable.
pub trait RingChecks: Tagged {
    fn determinant(e: &EnergizedComplex<Self>, _s: &Symbols) -> Result<VerificationOutcome> {
        let _ = e;
        Ok(VerificationOutcome::inapplicable(
            TheoremId::T3,
            format!("no determinant over {}", Self::NAME),
        ))
    }

    fn signature(_e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        Ok(VerificationOutcome::inapplicable(
            TheoremId::Signature,
            format!("{} is not an ordered real ring", Self::NAME),
        ))
    }

    fn zeta_fe(_e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        Ok(VerificationOutcome::inapplicable(
            TheoremId::ZetaFe,
            format!("no spectral embedding for {}", Self::NAME),
        ))
    }

    fn cauchy_binet(_e: &EnergizedComplex<Self>, _s: &Symbols) -> Result<VerificationOutcome> {
        Ok(VerificationOutcome::inapplicable(
            TheoremId::CauchyBinet,
            format!("{} is not an exact commutative ring", Self::NAME),
        ))
    }
}

fn determinant_commutative<R: IntegralDomain + Tagged>(
    e: &EnergizedComplex<R>,
    s: &Symbols,
) -> Result<VerificationOutcome> {
    let expected = product(e.h());
    let (dl, dg) = (det_exact(&build_l(e))?, det_exact(&build_g(e))?);
    let id = TheoremId::T3;
    Ok(if !same(&dl, &expected) {
        VerificationOutcome::fail(id, show(&expected, s), show(&dl, s), Some("det(L)".into()))
    } else if !same(&dg, &expected) {
        VerificationOutcome::fail(id, show(&expected, s), show(&dg, s), Some("det(g)".into()))
    } else {
        VerificationOutcome::pass(id)
    })
}

fn study_outcome(expected: f64, dl: f64, dg: f64) -> VerificationOutcome {
    let close = |a: f64| (a - expected).abs() <= FLOAT_TOL * expected.abs().max(1.0);
    match (close(dl), close(dg)) {
        (true, true) => VerificationOutcome::pass(TheoremId::T3),
        (false, _) => VerificationOutcome::fail(
            TheoremId::T3,
            expected.to_string(),
            dl.to_string(),
            Some("Study(L)".into()),
        ),
        (_, false) => VerificationOutcome::fail(
            TheoremId::T3,
            expected.to_string(),
            dg.to_string(),
            Some("Study(g)".into()),
        ),
    }
}

fn zeta_fe_check<R: ToComplex>(e: &EnergizedComplex<R>) -> Result<VerificationOutcome> {
    let id = TheoremId::ZetaFe;
    if !e.h().iter().all(Ring::is_one) {
        return Ok(VerificationOutcome::inapplicable(
            id,
            "the functional equation is stated for h = 1",
        ));
    }
    let eig = match heat_operator(e) {
        Ok(eig) => eig,
        Err(err) => return Ok(VerificationOutcome::inapplicable(id, err.to_string())),
    };
    for a in ZETA_GRID_RE {
        for b in ZETA_GRID_IM {
            let lhs = zeta_values(&eig.values, Complex64::new(a, b));
            let rhs = zeta_values(&eig.values, Complex64::new(-a, b));
            if (lhs - rhs).norm() > FLOAT_TOL * lhs.norm().max(1.0) {
                return Ok(VerificationOutcome::fail(
                    id,
                    format!("{lhs}"),
                    format!("{rhs}"),
                    Some(format!("zeta({a}{b:+}i) vs zeta({}{b:+}i)", -a)),
                ));
            }
        }
    }
    Ok(VerificationOutcome::pass(id))
}

fn cauchy_binet_exact<R: IntegralDomain + Tagged>(
    e: &EnergizedComplex<R>,
    s: &Symbols,
) -> Result<VerificationOutcome> {
    let id = TheoremId::CauchyBinet;
    if e.len() > MINOR_LIMIT {
        return Ok(VerificationOutcome::inapplicable(
            id,
            format!("minor enumeration limited to n <= {MINOR_LIMIT}"),
        ));
    }
    Ok(compare(
        id,
        &fredholm_energy(e)?,
        &fredholm_minor_sum(e)?,
        s,
    ))
}

impl RingChecks for BigRational {
    fn determinant(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        determinant_commutative(e, s)
    }

    fn signature(e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        let id = TheoremId::Signature;
        match signature_counts(e) {
            Err(err @ Error::ZeroEnergy(_)) => {
                Ok(VerificationOutcome::inapplicable(id, err.to_string()))
            }
            Err(err) => Err(err),
            Ok(sig) if sig.agrees() => Ok(VerificationOutcome::pass(id)),
            Ok(sig) => Ok(VerificationOutcome::fail(
                id,
                format!("{:?}", sig.h),
                format!("L {:?}, g {:?}, exact {:?}", sig.l, sig.g, sig.exact),
                None,
            )),
        }
    }

    fn zeta_fe(e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        zeta_fe_check(e)
    }

    fn cauchy_binet(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        cauchy_binet_exact(e, s)
    }
}

impl RingChecks for Gaussian {
    fn determinant(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        determinant_commutative(e, s)
    }

    fn zeta_fe(e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        zeta_fe_check(e)
    }

    fn cauchy_binet(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        cauchy_binet_exact(e, s)
    }
}

impl RingChecks for Poly {
    fn determinant(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        determinant_commutative(e, s)
    }

    fn cauchy_binet(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        cauchy_binet_exact(e, s)
    }
}

impl RingChecks for Complex64 {
    fn determinant(e: &EnergizedComplex<Self>, s: &Symbols) -> Result<VerificationOutcome> {
        let expected = product(e.h());
        let (dl, dg) = (det_complex(&build_l(e))?, det_complex(&build_g(e))?);
        let id = TheoremId::T3;
        Ok(if !same(&dl, &expected) {
            VerificationOutcome::fail(id, show(&expected, s), show(&dl, s), Some("det(L)".into()))
        } else if !same(&dg, &expected) {
            VerificationOutcome::fail(id, show(&expected, s), show(&dg, s), Some("det(g)".into()))
        } else {
            VerificationOutcome::pass(id)
        })
    }

    fn zeta_fe(e: &EnergizedComplex<Self>) -> Result<VerificationOutcome> {
        zeta_fe_check(e)
    }
}

impl RingChecks for Quaternion<BigRational> {
    fn determinant(e: &EnergizedComplex<Self>, _s: &Symbols) -> Result<VerificationOutcome> {
        let expected = product(&e.h().iter().map(Quaternion::norm_sq).collect::<Vec<_>>());
        let dl = det_dieudonne_exact(&build_l(e))?.study;
        let dg = det_dieudonne_exact(&build_g(e))?.study;
        let id = TheoremId::T3;
        Ok(if dl != expected {
            VerificationOutcome::fail(
                id,
                expected.to_string(),
                dl.to_string(),
                Some("Study(L)".into()),
            )
        } else if dg != expected {
            VerificationOutcome::fail(
                id,
                expected.to_string(),
                dg.to_string(),
                Some("Study(g)".into()),
            )
        } else {
            VerificationOutcome::pass(id)
        })
    }
}

impl RingChecks for Quaternion<f64> {
    fn determinant(e: &EnergizedComplex<Self>, _s: &Symbols) -> Result<VerificationOutcome> {
        let expected: f64 = e.h().iter().map(Quaternion::norm_sq).product();
        Ok(study_outcome(
            expected,
            det_dieudonne(&build_l(e))?.study,
            det_dieudonne(&build_g(e))?.study,
        ))
    }
}

impl RingChecks for Octonion {}

impl RingChecks for FreeElem {}

/// Runs one check on a typed energized complex.
pub fn check<R: RingChecks>(
    id: TheoremId,
    e: &EnergizedComplex<R>,
    s: &Symbols,
) -> Result<VerificationOutcome> {
    let outcome = match id {
        TheoremId::T1 => compare(id, &e.chi(None)?, &e.green_total(), s),
        TheoremId::T2 => compare(id, &e.omega_quadratic(), &e.green_quadratic_total(), s),
        TheoremId::T3 => R::determinant(e, s)?,
        TheoremId::T4 => {
            if let Some(o) = needs_complex(id, e) {
                return Ok(o);
            }
            if !is_unit_valued(e.h()) {
                return Ok(VerificationOutcome::inapplicable(
                    id,
                    "h is not unit-valued",
                ));
            }
            let gl = green_star_product(e)?;
            first_mismatch(
                id,
                &Matrix::identity(e.len()),
                &gl,
                e.geometry(),
                s,
                INVERSE_TOL,
                "g*L",
            )
        }
        TheoremId::GaussBonnet => {
            if let Some(o) = needs_complex(id, e) {
                return Ok(o);
            }
            let chi = e.chi(None)?;
            let str_g = super_trace(&build_g(e), e)?;
            let curvature = e
                .geometry()
                .simplices()
                .iter()
                .try_fold(R::zero(), |acc, x| {
                    Ok::<_, Error>(acc.add(&e.curvature(x)?))
                })?;
            match compare(id, &chi, &str_g, s) {
                o if o.status == Status::Pass => compare(id, &chi, &curvature, s),
                o => o,
            }
        }
        TheoremId::QuadTrace => {
            if let Some(o) = needs_complex(id, e) {
                return Ok(o);
            }
            let (sd, g) = (sign_diagonal(e), build_g(e));
            let t = sd.mul(&g.adjoint())?.trace_of_product(&sd.mul(&g)?)?;
            compare(id, &e.omega_quadratic(), &t, s)
        }
        TheoremId::Cubic => {
            if let Some(o) = needs_complex(id, e) {
                return Ok(o);
            }
            if !R::ASSOCIATIVE {
                return Ok(VerificationOutcome::inapplicable(
                    id,
                    format!("{} is not associative", R::NAME),
                ));
            }
            let (sd, g) = (sign_diagonal(e), build_g(e));
            let sg = sd.mul(&g)?;
            let t = sd.mul(&g.adjoint())?.mul(&sg)?.trace_of_product(&sg)?;
            compare(id, &e.omega_cubic()?, &t, s)
        }
        TheoremId::Signature => R::signature(e)?,
        TheoremId::ZetaFe => R::zeta_fe(e)?,
        TheoremId::Isospectral => {
            if !e.h().iter().all(Ring::is_one) {
                return Ok(VerificationOutcome::inapplicable(
                    id,
                    "iso-spectrality is stated for h = 1",
                ));
            }
            let ones = EnergizedComplex::from_fn(e.geometry().clone(), |_| BigRational::one());
            let p = charpoly(&build_l(&ones))?;
            if is_reciprocal(&p) {
                VerificationOutcome::pass(id)
            } else {
                let rendered: Vec<String> = p.iter().map(ToString::to_string).collect();
                VerificationOutcome::fail(
                    id,
                    "reciprocal characteristic polynomial".into(),
                    rendered.join(" "),
                    None,
                )
            }
        }
        TheoremId::CauchyBinet => R::cauchy_binet(e, s)?,
        TheoremId::McKeanSinger => {
            if let Some(o) = needs_complex(id, e) {
                return Ok(o);
            }
            let report = hodge_betti(e.geometry())?;
            let chi = e.geometry().euler_characteristic();
            if report.euler_poincare() != chi {
                return Ok(VerificationOutcome::fail(
                    id,
                    chi.to_string(),
                    report.euler_poincare().to_string(),
                    Some("betti".into()),
                ));
            }
            for t in HEAT_TIMES {
                let (str_val, _) = mckean_singer_check(e.geometry(), t)?;
                if (str_val - chi as f64).abs() > 1e-8 {
                    return Ok(VerificationOutcome::fail(
                        id,
                        chi.to_string(),
                        str_val.to_string(),
                        Some(format!("t={t}")),
                    ));
                }
            }
            VerificationOutcome::pass(id)
        }
    };
    Ok(outcome)
}

fn check_all<R: RingChecks>(
    e: &EnergizedComplex<R>,
    s: &Symbols,
    suite: &[TheoremId],
) -> Result<Vec<VerificationOutcome>> {
    suite.par_iter().map(|&id| check(id, e, s)).collect()
}

/// Runs `suite` in order of appearance; results do not depend on thread count.
pub fn verify(
    g: &Geometry,
    h: &EnergyAssignment,
    suite: &[TheoremId],
) -> Result<Vec<VerificationOutcome>> {
    let s = h.symbols();
    let g = g.clone();
    match h.tag() {
        RingTag::Rational => check_all(
            &EnergizedComplex::<BigRational>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Gaussian => check_all(
            &EnergizedComplex::<Gaussian>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Complex64 => check_all(
            &EnergizedComplex::<Complex64>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Quaternion => check_all(
            &EnergizedComplex::<Quaternion<BigRational>>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Quaternion64 => check_all(
            &EnergizedComplex::<Quaternion<f64>>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Octonion => check_all(
            &EnergizedComplex::<Octonion>::from_assignment(g, h)?,
            s,
            suite,
        ),
        RingTag::Poly => check_all(&EnergizedComplex::<Poly>::from_assignment(g, h)?, s, suite),
        RingTag::Free => check_all(
            &EnergizedComplex::<FreeElem>::from_assignment(g, h)?,
            s,
            suite,
        ),
    }
}

pub fn verdicts_json(outcomes: &[VerificationOutcome]) -> Value {
    json!({
        "schema": crate::io::SCHEMA,
        "outcomes": outcomes.iter().map(VerificationOutcome::to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{complete, parse_geometry};
    use crate::rings::sample::{sample_units, symbolic_generators, SymbolicRing, UnitFamily};

    fn statuses(out: &[VerificationOutcome]) -> Vec<Status> {
        out.iter().map(|o| o.status).collect()
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(
            parse_suite("T1, c_cubic").unwrap(),
            vec![TheoremId::T1, TheoremId::Cubic]
        );
        assert_eq!(parse_suite("all").unwrap().len(), 12);
        assert!(parse_suite("T9").is_err());
        assert!(parse_suite("").is_err());
    }

    #[test]
    fn k2_symbolic_passes_first_three() {
        let g = complete(2);
        let h = symbolic_generators(&g, SymbolicRing::Poly, None);
        let out = verify(&g, &h, &[TheoremId::T1, TheoremId::T2, TheoremId::T3]).unwrap();
        assert_eq!(statuses(&out), vec![Status::Pass; 3]);
    }

    #[test]
    fn non_complex_witnesses() {
        let g = parse_geometry(&[vec![1], vec![2], vec![1, 2, 3]]).unwrap();
        let h = symbolic_generators(&g, SymbolicRing::Poly, Some(Symbols::new(["x", "y", "z"])));
        let out = verify(
            &g,
            &h,
            &[TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4],
        )
        .unwrap();
        assert_eq!(
            statuses(&out),
            vec![
                Status::Fail,
                Status::Fail,
                Status::Pass,
                Status::Inapplicable
            ]
        );
        assert_eq!(out[0].witness.as_ref().unwrap().actual, "x + y + 9 z");
        assert_eq!(out[0].witness.as_ref().unwrap().expected, "x + y + z");
    }

    #[test]
    fn pm1_inverse() {
        let g = complete(2);
        let h = sample_units(&g, UnitFamily::Pm1, 11);
        let out = verify(&g, &h, &[TheoremId::T4]).unwrap();
        assert_eq!(out[0].status, Status::Pass);
    }

    #[test]
    fn octonion_applicability() {
        let g = complete(2);
        let h = crate::rings::sample::EnergyAssignment::from_typed(
            (0..3).map(|i| Octonion::basis(i + 1)).collect::<Vec<_>>(),
            Symbols::default(),
        );
        let out = verify(&g, &h, &[TheoremId::T2, TheoremId::T3, TheoremId::Cubic]).unwrap();
        assert_eq!(
            statuses(&out),
            vec![Status::Pass, Status::Inapplicable, Status::Inapplicable]
        );
    }

    #[test]
    fn outcome_json_shape() {
        let o = VerificationOutcome::fail(TheoremId::T1, "a".into(), "b".into(), None);
        assert_eq!(
            o.to_json(),
            json!({"id": "T1", "status": "fail", "witness": {"expected": "a", "actual": "b"}})
        );
    }
}
