//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on bitmask vertex sets and straight from the
//! definitions, independent of the library's assembly code.

#![allow(dead_code)]

pub mod worked;

use energeia::complex::{random_complex, Geometry};
use energeia::matrices::Matrix;
use energeia::rings::{BigRational, Commutative, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_int(n)
}

/// Vertex sets as bitmasks, in the library's canonical order.
pub fn masks(g: &Geometry) -> Vec<u64> {
    g.simplices()
        .iter()
        .map(|x| x.vertices().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

pub fn sign(mask: u64) -> i64 {
    if mask.count_ones() % 2 == 1 {
        1
    } else {
        -1
    }
}

fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// L(u, v) summed over members inside u & v.
pub fn oracle_l<R: Ring>(g: &Geometry, h: &[R]) -> Matrix<R> {
    let m = masks(g);
    Matrix::from_fn(m.len(), m.len(), |u, v| {
        let common = m[u] & m[v];
        m.iter()
            .zip(h)
            .filter(|(x, _)| subset(**x, common))
            .fold(R::zero(), |acc, (_, hx)| acc.add(hx))
    })
}

/// g(u, v) with the signed sum over members containing u | v.
pub fn oracle_g<R: Ring>(g: &Geometry, h: &[R]) -> Matrix<R> {
    let m = masks(g);
    Matrix::from_fn(m.len(), m.len(), |u, v| {
        let joint = m[u] | m[v];
        let s = m
            .iter()
            .zip(h)
            .filter(|(x, _)| subset(joint, **x))
            .fold(R::zero(), |acc, (_, hx)| acc.add(hx));
        s.scale(sign(m[u]) * sign(m[v]))
    })
}

/// (g* L)(x, y) = omega(x) sum over members u with x <= u <= y of omega(u) |h(u)|^2.
pub fn oracle_gstar_l<R: Ring>(g: &Geometry, h: &[R]) -> Matrix<R> {
    let m = masks(g);
    Matrix::from_fn(m.len(), m.len(), |x, y| {
        let s = m
            .iter()
            .zip(h)
            .filter(|(u, _)| subset(m[x], **u) && subset(**u, m[y]))
            .fold(R::zero(), |acc, (u, hu)| {
                acc.add(&hu.norm().scale(sign(*u)))
            });
        s.scale(sign(m[x]))
    })
}

pub fn oracle_chi<R: Ring>(h: &[R]) -> R {
    h.iter().fold(R::zero(), |acc, v| acc.add(v))
}

pub fn oracle_omega<R: Ring>(g: &Geometry, h: &[R]) -> R {
    let m = masks(g);
    let mut acc = R::zero();
    for i in 0..m.len() {
        for j in 0..m.len() {
            if m[i] & m[j] != 0 {
                acc = acc.add(&h[i].conj().mul(&h[j]));
            }
        }
    }
    acc
}

pub fn oracle_omega3<R: Ring>(g: &Geometry, h: &[R]) -> R {
    let m = masks(g);
    let mut acc = R::zero();
    for i in 0..m.len() {
        for j in 0..m.len() {
            for k in 0..m.len() {
                if m[i] & m[j] != 0 && m[j] & m[k] != 0 && m[i] & m[k] != 0 {
                    acc = acc.add(&h[i].conj().mul(&h[j]).mul(&h[k]));
                }
            }
        }
    }
    acc
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at `pos` moves the new largest element past len - pos others
            let flips = (p.len() - pos) as i64;
            out.push((q, if flips % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// Leibniz expansion, for n <= 8.
pub fn leibniz_det<R: Commutative>(m: &Matrix<R>) -> R {
    assert!(m.is_square() && m.rows() <= 8);
    let mut acc = R::zero();
    for (p, s) in permutations(m.rows()) {
        let term = p
            .iter()
            .enumerate()
            .fold(R::one(), |t, (i, &j)| t.mul(m.get(i, j)));
        acc = acc.add(&term.scale(s));
    }
    acc
}

/// Faddeev-LeVerrier coefficients c_0..c_n of det(t - m).
pub fn faddeev_leverrier(m: &Matrix<BigRational>) -> Vec<BigRational> {
    let n = m.rows();
    let mut c = vec![q(0); n + 1];
    c[n] = q(1);
    let mut mk = Matrix::<BigRational>::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk).unwrap();
        for i in 0..n {
            let v = next.get(i, i).add(&c[n - k + 1]);
            next.set(i, i, v);
        }
        let t = m.mul(&next).unwrap().trace();
        c[n - k] = -t / q(k as i64);
        mk = next;
    }
    c
}

/// (evens, odds) among z with y <= z <= x, by enumerating all subsets of x.
pub fn oracle_parity(x: u64, y: u64) -> (usize, usize) {
    let mut z = x;
    let (mut even, mut odd) = (0, 0);
    loop {
        if subset(y, z) && z != 0 {
            if z.count_ones() % 2 == 1 {
                even += 1;
            } else {
                odd += 1;
            }
        }
        if z == 0 {
            break;
        }
        z = (z - 1) & x;
    }
    (even, odd)
}

/// Random complexes with at most `max_vertices` vertices and `max_len` simplices.
pub fn complex_pool(seed: u64, count: usize, max_vertices: usize, max_len: usize) -> Vec<Geometry> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = r.random_range(1..=max_vertices);
        let density = r.random_range(0.2..0.9);
        let g = random_complex(&mut r, v, density);
        if g.len() <= max_len {
            out.push(g);
        }
    }
    out
}

pub fn elapsed(start: std::time::Instant) -> f64 {
    start.elapsed().as_secs_f64()
}
