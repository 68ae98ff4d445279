//! Finite sets of sets and simplicial complexes.
//!
//! A [`Geometry`] stores its members in canonical order: ascending by
//! cardinality, ties broken lexicographically. Every matrix in this crate is
//! indexed by that order, which makes the Green-star product upper triangular.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A nonempty finite set of positive vertex labels, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = i64>>(labels: I) -> Result<Self> {
        let mut v = Vec::new();
        for l in labels {
            if l <= 0 || l > u32::MAX as i64 {
                return Err(Error::InvalidLabel(l));
            }
            v.push(l as u32);
        }
        if v.is_empty() {
            return Err(Error::InvalidSimplex);
        }
        v.sort_unstable();
        v.dedup();
        Ok(Simplex(v))
    }

    /// Builds from labels that are already known to be positive.
    pub fn from_labels(labels: &[u32]) -> Self {
        Self::new(labels.iter().map(|&l| l as i64)).expect("valid labels")
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// (-1)^dim.
    pub fn omega(&self) -> i64 {
        omega_sign(self)
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }
}

fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &v in a {
        while j < b.len() && b[j] < v {
            j += 1;
        }
        if j == b.len() || b[j] != v {
            return false;
        }
        j += 1;
    }
    true
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `(-1)^dim(x)` with `dim(x) = |x| - 1`.
pub fn omega_sign(x: &Simplex) -> i64 {
    if x.len() % 2 == 1 {
        1
    } else {
        -1
    }
}

/// A finite set of simplices in canonical order.
#[derive(Clone, Debug)]
pub struct Geometry {
    simplices: Vec<Simplex>,
    support: Vec<u32>,
    is_complex: bool,
    index: HashMap<Simplex, usize>,
}

impl PartialEq for Geometry {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for Geometry {}

impl Geometry {
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(iter: I) -> Self {
        let set: BTreeSet<Simplex> = iter.into_iter().collect();
        let simplices: Vec<Simplex> = set.into_iter().collect();
        let support: BTreeSet<u32> = simplices.iter().flat_map(|s| s.0.iter().copied()).collect();
        let index = simplices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut g = Geometry {
            simplices,
            support: support.into_iter().collect(),
            is_complex: false,
            index,
        };
        g.is_complex = g.check_closed();
        g
    }

    pub fn empty() -> Self {
        Self::from_simplices(std::iter::empty())
    }

    fn check_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            // closure under codimension-one faces is enough by induction
            s.len() == 1
                || (0..s.len()).all(|skip| {
                    let face: Vec<u32> =
                        s.0.iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &v)| v)
                            .collect();
                    self.index.contains_key(&Simplex(face))
                })
        })
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn vertex_support(&self) -> &[u32] {
        &self.support
    }

    pub fn is_complex(&self) -> bool {
        self.is_complex
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn position(&self, x: &Simplex) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn require(&self, x: &Simplex) -> Result<usize> {
        self.position(x)
            .ok_or_else(|| Error::NotAMember(x.to_string()))
    }

    /// Signs `omega(x)` in canonical order.
    pub fn omegas(&self) -> Vec<i64> {
        self.simplices.iter().map(omega_sign).collect()
    }

    /// W+(x): members containing `x` (non-strict).
    pub fn star(&self, x: &Simplex) -> Result<Vec<Simplex>> {
        self.require(x)?;
        Ok(self
            .simplices
            .iter()
            .filter(|z| x.is_subset(z))
            .cloned()
            .collect())
    }

    /// W-(x): members contained in `x` (non-strict).
    pub fn core(&self, x: &Simplex) -> Result<Vec<Simplex>> {
        self.require(x)?;
        Ok(self
            .simplices
            .iter()
            .filter(|z| z.is_subset(x))
            .cloned()
            .collect())
    }

    /// Alternating count `sum omega(x)`, the topological Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(omega_sign).sum()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = Vec::new();
        for s in &self.simplices {
            let d = s.dim();
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        FVector {
            first_dim: 0,
            counts,
        }
    }

    pub fn to_sets(&self) -> Vec<Vec<u32>> {
        self.simplices.iter().map(|s| s.0.clone()).collect()
    }
}

/// Parses a list of integer lists into a canonically ordered geometry.
pub fn parse_geometry(sets: &[Vec<i64>]) -> Result<Geometry> {
    let simplices = sets
        .iter()
        .map(|s| Simplex::new(s.iter().copied()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Geometry::from_simplices(simplices))
}

fn nonempty_subsets(v: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    assert!(v.len() < 32, "simplex too large to enumerate faces");
    (1u32..(1u32 << v.len())).map(move |mask| {
        v.iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// Smallest simplicial complex containing `g`.
pub fn downward_closure(g: &Geometry) -> Geometry {
    if g.is_complex() {
        return g.clone();
    }
    let mut all = BTreeSet::new();
    for s in g.simplices() {
        for f in nonempty_subsets(&s.0) {
            all.insert(Simplex(f));
        }
    }
    Geometry::from_simplices(all)
}

/// Counts per dimension. `first_dim` is -1 when the void is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub first_dim: i32,
    pub counts: Vec<usize>,
}

impl FVector {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `sum_k f_k t^(k + 1 - first_dim)` evaluated at `t = -1`, i.e. the
    /// alternating sum starting with sign +1 at `first_dim`.
    pub fn alternating_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// A set of sets that may contain the void, with a fixed vertex universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedGeometry {
    members: Vec<Vec<u32>>,
    universe: Vec<u32>,
}

fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl ExtendedGeometry {
    pub fn new(members: Vec<Vec<u32>>, universe: Vec<u32>) -> Self {
        let mut members: Vec<Vec<u32>> = members
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        members.sort_by(|a, b| canonical_cmp(a, b));
        members.dedup();
        let mut universe = universe;
        universe.sort_unstable();
        universe.dedup();
        ExtendedGeometry { members, universe }
    }

    pub fn from_geometry(g: &Geometry) -> Self {
        ExtendedGeometry {
            members: g.to_sets(),
            universe: g.vertex_support().to_vec(),
        }
    }

    pub fn members(&self) -> &[Vec<u32>] {
        &self.members
    }

    pub fn universe(&self) -> &[u32] {
        &self.universe
    }

    pub fn contains_void(&self) -> bool {
        self.members.first().is_some_and(|m| m.is_empty())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// omega of the void is -1.
    pub fn omega_of(member: &[u32]) -> i64 {
        if member.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn f_vector(&self) -> FVector {
        if self.members.is_empty() {
            return FVector {
                first_dim: 0,
                counts: vec![],
            };
        }
        let first_dim = if self.contains_void() { -1 } else { 0 };
        let mut counts = Vec::new();
        for m in &self.members {
            let slot = (m.len() as i32 - 1 - first_dim) as usize;
            if counts.len() <= slot {
                counts.resize(slot + 1, 0);
            }
            counts[slot] += 1;
        }
        FVector { first_dim, counts }
    }

    /// Complement of every member inside the stored universe.
    pub fn complement_dual(&self) -> ExtendedGeometry {
        let members = self
            .members
            .iter()
            .map(|m| {
                self.universe
                    .iter()
                    .copied()
                    .filter(|v| m.binary_search(v).is_err())
                    .collect()
            })
            .collect();
        ExtendedGeometry::new(members, self.universe.clone())
    }

    /// Converts back when the void is absent.
    pub fn to_geometry(&self) -> Option<Geometry> {
        if self.contains_void() {
            return None;
        }
        Some(Geometry::from_simplices(
            self.members.iter().map(|m| Simplex(m.clone())),
        ))
    }
}

/// Maps each member `x` to `V \ x` over `V = vertex_support(g)`.
pub fn complement_dual(g: &Geometry) -> ExtendedGeometry {
    ExtendedGeometry::from_geometry(g).complement_dual()
}

/// The extended complex `{ z \ y : y ⊆ z ⊆ x }`.
pub fn link_image(x: &Simplex, y: &Simplex) -> Result<ExtendedGeometry> {
    if !y.is_subset(x) {
        return Err(Error::NotASubset {
            sub: y.to_string(),
            sup: x.to_string(),
        });
    }
    let rest: Vec<u32> =
        x.0.iter()
            .copied()
            .filter(|v| y.0.binary_search(v).is_err())
            .collect();
    let mut members = vec![Vec::new()];
    members.extend(nonempty_subsets(&rest));
    Ok(ExtendedGeometry::new(members, rest))
}

/// Number of even- and odd-dimensional `z` with `y ⊆ z ⊆ x`.
pub fn parity_count(x: &Simplex, y: &Simplex) -> Result<(usize, usize)> {
    if !y.is_subset(x) {
        return Err(Error::NotASubset {
            sub: y.to_string(),
            sup: x.to_string(),
        });
    }
    let free = x.len() - y.len();
    let (mut evens, mut odds) = (0usize, 0usize);
    for mask in 0u64..(1u64 << free) {
        let size = y.len() + mask.count_ones() as usize;
        if size % 2 == 1 {
            evens += 1;
        } else {
            odds += 1;
        }
    }
    Ok((evens, odds))
}

/// Geometry generators used by the CLI and the property suites.
#[derive(Clone, Debug)]
pub enum GeneratorKind {
    Complete(usize),
    Whitney(Vec<(u32, u32)>),
    Random {
        vertices: usize,
        density: f64,
        seed: u64,
    },
}

pub fn generate(kind: &GeneratorKind) -> Geometry {
    match kind {
        GeneratorKind::Complete(n) => complete(*n),
        GeneratorKind::Whitney(edges) => whitney(edges),
        GeneratorKind::Random {
            vertices,
            density,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            random_complex(&mut rng, *vertices, *density)
        }
    }
}

/// All nonempty subsets of `{1..n}`.
pub fn complete(n: usize) -> Geometry {
    let verts: Vec<u32> = (1..=n as u32).collect();
    Geometry::from_simplices(nonempty_subsets(&verts).map(Simplex))
}

/// Clique complex of a graph given by its edges.
pub fn whitney(edges: &[(u32, u32)]) -> Geometry {
    let mut adj: HashMap<u32, BTreeSet<u32>> = HashMap::new();
    for &(a, b) in edges {
        if a == b {
            adj.entry(a).or_default();
            continue;
        }
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    }
    let mut verts: Vec<u32> = adj.keys().copied().collect();
    verts.sort_unstable();
    let mut out = Vec::new();
    // extend cliques by larger vertices only, so each clique is built once
    let mut stack: Vec<Vec<u32>> = verts.iter().map(|&v| vec![v]).collect();
    while let Some(clique) = stack.pop() {
        let last = *clique.last().unwrap();
        for &w in adj[&last].range(last + 1..) {
            if clique.iter().all(|u| adj[u].contains(&w)) {
                let mut next = clique.clone();
                next.push(w);
                stack.push(next);
            }
        }
        out.push(Simplex(clique));
    }
    Geometry::from_simplices(out)
}

/// Downward closure of a random pool of faces on `vertices` vertices.
///
/// Every vertex is present; a candidate face with `k >= 2` vertices enters
/// the pool with probability `density^(k-1)`.
pub fn random_complex<R: Rng>(rng: &mut R, vertices: usize, density: f64) -> Geometry {
    let verts: Vec<u32> = (1..=vertices as u32).collect();
    let density = density.clamp(0.0, 1.0);
    let mut pool: Vec<Simplex> = verts.iter().map(|&v| Simplex(vec![v])).collect();
    for face in nonempty_subsets(&verts).filter(|f| f.len() >= 2) {
        let p = density.powi(face.len() as i32 - 1);
        if rng.random_bool(p) {
            pool.push(Simplex(face));
        }
    }
    downward_closure(&Geometry::from_simplices(pool))
}

/// A random set of sets without any closure requirement.
pub fn random_sets_of_sets<R: Rng>(rng: &mut R, vertices: usize, members: usize) -> Geometry {
    let verts: Vec<u32> = (1..=vertices as u32).collect();
    let mut set = BTreeSet::new();
    let cap = (1usize << vertices) - 1;
    while set.len() < members.min(cap) {
        let mut face: Vec<u32> = verts
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        if face.is_empty() {
            face.push(verts[rng.random_range(0..verts.len())]);
        }
        set.insert(Simplex(face));
    }
    Geometry::from_simplices(set)
}
