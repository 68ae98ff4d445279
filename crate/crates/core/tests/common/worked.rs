//! The worked examples, entry by entry, in closed form.

use energeia::complex::{parse_geometry, Geometry};
use energeia::energy::EnergizedComplex;
use energeia::matrices::{build_g, build_l, green_star_product, Matrix};
use energeia::rings::parse::{parse_free, parse_poly};
use energeia::rings::{FreeElem, Poly, Ring, Symbols};

pub struct Example {
    pub name: &'static str,
    pub sets: Vec<Vec<i64>>,
    pub vars: Vec<&'static str>,
    pub matrices: Vec<(&'static str, Vec<Vec<&'static str>>)>,
}

fn rows(r: &[&[&'static str]]) -> Vec<Vec<&'static str>> {
    r.iter().map(|row| row.to_vec()).collect()
}

pub fn k2() -> Example {
    Example {
        name: "K2",
        sets: vec![vec![1], vec![2], vec![1, 2]],
        vars: vec!["x1", "x2", "x3"],
        matrices: vec![
            (
                "L",
                rows(&[
                    &["x1", "0", "x1"],
                    &["0", "x2", "x2"],
                    &["x1", "x2", "x1+x2+x3"],
                ]),
            ),
            (
                "g",
                rows(&[
                    &["x1+x3", "x3", "-x3"],
                    &["x3", "x2+x3", "-x3"],
                    &["-x3", "-x3", "x3"],
                ]),
            ),
            (
                "g*L",
                rows(&[
                    &["x1* x1", "0", "x1* x1 - x3* x3"],
                    &["0", "x2* x2", "x2* x2 - x3* x3"],
                    &["0", "0", "x3* x3"],
                ]),
            ),
        ],
    }
}

pub fn triangle_boundary() -> Example {
    Example {
        name: "circle",
        sets: vec![
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ],
        vars: vec!["x", "y", "z", "a", "b", "c"],
        matrices: vec![
            (
                "L",
                rows(&[
                    &["x", "0", "0", "x", "x", "0"],
                    &["0", "y", "0", "y", "0", "y"],
                    &["0", "0", "z", "0", "z", "z"],
                    &["x", "y", "0", "a+x+y", "x", "y"],
                    &["x", "0", "z", "x", "b+x+z", "z"],
                    &["0", "y", "z", "y", "z", "c+y+z"],
                ]),
            ),
            (
                "g",
                rows(&[
                    &["a+b+x", "a", "b", "-a", "-b", "0"],
                    &["a", "a+c+y", "c", "-a", "0", "-c"],
                    &["b", "c", "b+c+z", "0", "-b", "-c"],
                    &["-a", "-a", "0", "a", "0", "0"],
                    &["-b", "0", "-b", "0", "b", "0"],
                    &["0", "-c", "-c", "0", "0", "c"],
                ]),
            ),
            (
                "g*L",
                rows(&[
                    &["x* x", "0", "0", "x* x - a* a", "x* x - b* b", "0"],
                    &["0", "y* y", "0", "y* y - a* a", "0", "y* y - c* c"],
                    &["0", "0", "z* z", "0", "z* z - b* b", "z* z - c* c"],
                    &["0", "0", "0", "a* a", "0", "0"],
                    &["0", "0", "0", "0", "b* b", "0"],
                    &["0", "0", "0", "0", "0", "c* c"],
                ]),
            ),
        ],
    }
}

pub fn non_complex() -> Example {
    Example {
        name: "non-complex",
        sets: vec![vec![1], vec![2], vec![1, 2, 3]],
        vars: vec!["x", "y", "z"],
        matrices: vec![
            (
                "L",
                rows(&[&["x", "0", "x"], &["0", "y", "y"], &["x", "y", "x+y+z"]]),
            ),
            (
                "g",
                rows(&[&["x+z", "z", "z"], &["z", "y+z", "z"], &["z", "z", "z"]]),
            ),
        ],
    }
}

pub fn examples() -> Vec<Example> {
    vec![k2(), triangle_boundary(), non_complex()]
}

impl Example {
    pub fn geometry(&self) -> Geometry {
        parse_geometry(&self.sets).unwrap()
    }

    pub fn symbols(&self) -> Symbols {
        Symbols::new(self.vars.iter().copied())
    }

    pub fn free(&self) -> EnergizedComplex<FreeElem> {
        let h = (0..self.vars.len() as u32).map(FreeElem::gen).collect();
        EnergizedComplex::new(self.geometry(), h).unwrap()
    }

    pub fn poly(&self) -> EnergizedComplex<Poly> {
        let h = (0..self.vars.len() as u32).map(Poly::var).collect();
        EnergizedComplex::new(self.geometry(), h).unwrap()
    }

    pub fn free_expr(&self, s: &str) -> FreeElem {
        let mut names = self.symbols();
        let v = parse_free(s, &mut names).unwrap();
        assert_eq!(names.len(), self.vars.len(), "unknown name in {s}");
        v
    }

    pub fn poly_expr(&self, s: &str) -> Poly {
        let mut names = self.symbols();
        let v = parse_poly(s, &mut names).unwrap();
        assert_eq!(names.len(), self.vars.len(), "unknown name in {s}");
        v
    }

    fn reference<R: Ring>(&self, table: &[Vec<&str>], f: impl Fn(&str) -> R) -> Matrix<R> {
        Matrix::from_rows(
            table
                .iter()
                .map(|r| r.iter().map(|s| f(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// `(matrix name, computed, expected)` over the free *-algebra.
    pub fn free_pairs(&self) -> Vec<(&'static str, Matrix<FreeElem>, Matrix<FreeElem>)> {
        let e = self.free();
        self.matrices
            .iter()
            .map(|(name, table)| {
                let computed = match *name {
                    "L" => build_l(&e),
                    "g" => build_g(&e),
                    _ => green_star_product(&e).unwrap(),
                };
                (
                    *name,
                    computed,
                    self.reference(table, |s| self.free_expr(s)),
                )
            })
            .collect()
    }

    /// The same over commuting real variables.
    pub fn poly_pairs(&self) -> Vec<(&'static str, Matrix<Poly>, Matrix<Poly>)> {
        let e = self.poly();
        self.matrices
            .iter()
            .map(|(name, table)| {
                let computed = match *name {
                    "L" => build_l(&e),
                    "g" => build_g(&e),
                    _ => green_star_product(&e).unwrap(),
                };
                (
                    *name,
                    computed,
                    self.reference(table, |s| self.poly_expr(s)),
                )
            })
            .collect()
    }
}
