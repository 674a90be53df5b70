//! Lattice polytopes with the origin in their interior.
//!
//! Facets are found by brute force over vertex subsets, which is plenty for
//! the dozen-vertex polytopes this crate is meant for. The boundary is
//! triangulated without new vertices (pulling the lexicographically smallest
//! vertex of every non-simplicial face) and the simplices, coned from the
//! origin, give a fan whose cones are made half-open by a lexicographic
//! perturbation so that they tile `Z^n` exactly once.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::linalg;
use crate::series::Rational;

/// Facet `{x : <normal, x> = rhs}` with the polytope on the `<=` side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetInequality {
    normal: Vec<i64>,
    rhs: i64,
    vertices: Vec<usize>,
}

impl FacetInequality {
    /// Primitive integer normal `g`.
    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    /// Lattice distance `c >= 1` of the facet from the origin.
    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    /// `g / c`, the linear form equal to 1 on the facet.
    pub fn normal_normalized(&self) -> Vec<Rational> {
        self.normal
            .iter()
            .map(|&g| Rational::new(BigInt::from(g), BigInt::from(self.rhs)))
            .collect()
    }

    /// Indices (into the polytope's vertex list) of the vertices on this facet.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn value(&self, x: &[i64]) -> i64 {
        dot(&self.normal, x)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug)]
struct Derived {
    facets: Vec<FacetInequality>,
    /// lcm of all facet right-hand sides.
    scale: i64,
    /// `g_F * scale / c_F`, so that `nu(x) = max_F <scaled_F, x> / scale`.
    scaled_normals: Vec<Vec<i64>>,
    simplices: Vec<Vec<usize>>,
    simplicial: bool,
}

/// Full-dimensional lattice polytope containing the origin in its interior.
#[derive(Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    derived: OnceBox<Derived>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        let derived = OnceBox::new();
        if let Some(d) = self.derived.get() {
            let _ = derived.set(alloc::boxed::Box::new(Derived {
                facets: d.facets.clone(),
                scale: d.scale,
                scaled_normals: d.scaled_normals.clone(),
                simplices: d.simplices.clone(),
                simplicial: d.simplicial,
            }));
        }
        Self {
            dim: self.dim,
            vertices: self.vertices.clone(),
            derived,
        }
    }
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

fn check_shape(dim: usize, points: &[Vec<i64>]) -> Result<()> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    for (index, p) in points.iter().enumerate() {
        if p.len() != dim {
            return Err(Error::CoordinateCount {
                index,
                found: p.len(),
                expected: dim,
            });
        }
    }
    Ok(())
}

/// All facets of the convex hull of `points`.
///
/// Does not require the origin to be interior; callers check the sign of `rhs`.
fn enumerate_hull_facets(dim: usize, points: &[Vec<i64>]) -> Result<Vec<(Vec<i64>, i64)>> {
    let refs: Vec<&[i64]> = points.iter().map(Vec::as_slice).collect();
    if points.len() <= dim || linalg::affine_dim(&refs) != Some(dim) {
        return Err(Error::NotFullDimensional);
    }
    let mut found: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut seen = BTreeSet::new();
    for subset in Combinations::new(points.len(), dim) {
        let sub: Vec<&[i64]> = subset.iter().map(|&i| refs[i]).collect();
        let Some((g, c)) = linalg::hyperplane_through(&sub) else {
            continue;
        };
        let (mut below, mut above) = (false, false);
        for p in &refs {
            let s: BigInt = g
                .iter()
                .zip(p.iter())
                .map(|(a, &b)| a * BigInt::from(b))
                .sum::<BigInt>()
                - &c;
            if s.is_positive() {
                above = true;
            } else if s.is_negative() {
                below = true;
            }
        }
        let (g, c) = match (below, above) {
            (_, false) => (g, c),
            (false, true) => (g.iter().map(|v| -v).collect(), -c),
            (true, true) => continue,
        };
        let g: Vec<i64> = g
            .iter()
            .map(|v| v.to_i64().ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        let c = c.to_i64().ok_or(Error::Overflow)?;
        if seen.insert((g.clone(), c)) {
            found.push((g, c));
        }
    }
    Ok(found)
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

fn build_facets(dim: usize, vertices: &[Vec<i64>]) -> Result<Vec<FacetInequality>> {
    let raw = enumerate_hull_facets(dim, vertices)?;
    let mut facets: Vec<FacetInequality> = raw
        .into_iter()
        .map(|(normal, rhs)| {
            let on: Vec<usize> = vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| dot(&normal, v) == rhs)
                .map(|(i, _)| i)
                .collect();
            FacetInequality {
                normal,
                rhs,
                vertices: on,
            }
        })
        .collect();
    if facets.iter().any(|f| f.rhs <= 0) {
        return Err(Error::OriginNotInterior);
    }
    // Canonical order: normals in decreasing lexicographic order.
    facets.sort_by(|a, b| b.normal.cmp(&a.normal));
    Ok(facets)
}

/// Indices of points that are extreme points of their hull, given its facets.
fn extreme_points(dim: usize, n_points: usize, facets: &[FacetInequality]) -> Vec<bool> {
    (0..n_points)
        .map(|i| {
            let normals: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|f| f.vertices.contains(&i))
                .map(|f| f.normal.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            linalg::rank(normals) == dim
        })
        .collect()
}

impl LatticePolytope {
    /// Validates a vertex list: every point must be an extreme point, the
    /// hull must be full-dimensional and contain the origin in its interior.
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        check_shape(dim, &vertices)?;
        let mut seen = BTreeSet::new();
        for (i, v) in vertices.iter().enumerate() {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateVertex(i));
            }
        }
        let facets = build_facets(dim, &vertices)?;
        if let Some(i) = extreme_points(dim, vertices.len(), &facets)
            .iter()
            .position(|e| !e)
        {
            return Err(Error::NotAVertex(i));
        }
        let p = Self {
            dim,
            vertices,
            derived: OnceBox::new(),
        };
        let derived = p.derive(facets);
        let _ = p.derived.set(alloc::boxed::Box::new(derived));
        Ok(p)
    }

    /// Convex hull of arbitrary lattice points; duplicates and non-extreme
    /// points are dropped, first occurrence order is kept.
    pub fn convex_hull(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        check_shape(dim, points)?;
        let mut seen = BTreeSet::new();
        let unique: Vec<Vec<i64>> = points
            .iter()
            .filter(|p| seen.insert((*p).clone()))
            .cloned()
            .collect();
        let facets = build_facets(dim, &unique)?;
        let keep = extreme_points(dim, unique.len(), &facets);
        let vertices = unique
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(v, _)| v)
            .collect();
        Self::new(dim, vertices)
    }

    /// Conv(±e_1, ..., ±e_n).
    pub fn cross_polytope(n: usize) -> Self {
        let mut vertices = Vec::with_capacity(2 * n);
        for i in 0..n {
            for s in [1, -1] {
                let mut v = vec![0; n];
                v[i] = s;
                vertices.push(v);
            }
        }
        Self::new(n, vertices).expect("cross-polytope is valid")
    }

    /// The segment `[a, b]` in dimension one; requires `a < 0 < b`.
    pub fn segment(a: i64, b: i64) -> Result<Self> {
        Self::new(1, vec![vec![a], vec![b]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let facets = build_facets(self.dim, &self.vertices)
                .expect("polytope invariants hold by construction");
            alloc::boxed::Box::new(self.derive(facets))
        })
    }

    fn derive(&self, facets: Vec<FacetInequality>) -> Derived {
        let scale = facets.iter().fold(1i64, |acc, f| acc.lcm(&f.rhs));
        let scaled_normals = facets
            .iter()
            .map(|f| f.normal.iter().map(|g| g * (scale / f.rhs)).collect())
            .collect();
        let simplicial = facets.iter().all(|f| f.vertices.len() == self.dim);
        let simplices = facets
            .iter()
            .flat_map(|f| self.pulling_triangulation(&f.vertices, self.dim - 1, &facets))
            .collect();
        Derived {
            facets,
            scale,
            scaled_normals,
            simplices,
            simplicial,
        }
    }

    fn affine_dim_of(&self, idx: &[usize]) -> Option<usize> {
        let pts: Vec<&[i64]> = idx.iter().map(|&i| self.vertices[i].as_slice()).collect();
        linalg::affine_dim(&pts)
    }

    /// Triangulates the face spanned by `face` (of affine dimension `d`) by
    /// pulling its lexicographically smallest vertex.
    fn pulling_triangulation(
        &self,
        face: &[usize],
        d: usize,
        facets: &[FacetInequality],
    ) -> Vec<Vec<usize>> {
        if face.len() == d + 1 {
            return vec![face.to_vec()];
        }
        let apex = *face
            .iter()
            .min_by(|&&a, &&b| self.vertices[a].cmp(&self.vertices[b]))
            .expect("nonempty face");
        let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let sub: Vec<usize> = face
                .iter()
                .copied()
                .filter(|i| f.vertices.contains(i))
                .collect();
            if sub.len() < d || sub.len() == face.len() || sub.contains(&apex) {
                continue;
            }
            if self.affine_dim_of(&sub) == Some(d - 1) {
                subfaces.insert(sub);
            }
        }
        let mut out = Vec::new();
        for sub in subfaces {
            for mut simplex in self.pulling_triangulation(&sub, d - 1, facets) {
                simplex.push(apex);
                simplex.sort_unstable();
                out.push(simplex);
            }
        }
        out
    }

    pub fn facets(&self) -> &[FacetInequality] {
        &self.derived().facets
    }

    /// Whether every facet has exactly `dim` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.derived().simplicial
    }

    /// Boundary simplices (vertex index lists of length `dim`) of the pulling triangulation.
    pub fn boundary_simplices(&self) -> &[Vec<usize>] {
        &self.derived().simplices
    }

    /// Integer `k` with `nu(x) = k / newton_scale()`.
    pub fn scaled_degree(&self, x: &[i64]) -> i64 {
        self.derived()
            .scaled_normals
            .iter()
            .map(|g| dot(g, x))
            .max()
            .expect("polytope has facets")
    }

    /// Common denominator of all values of the Newton function.
    pub fn newton_scale(&self) -> i64 {
        self.derived().scale
    }

    /// Newton function `nu(x) = min{λ >= 0 : x ∈ λP}`.
    pub fn newton_degree(&self, x: &[i64]) -> Rational {
        Rational::new(
            BigInt::from(self.scaled_degree(x)),
            BigInt::from(self.newton_scale()),
        )
    }

    /// Integer bounding box of `mP`.
    fn bounding_box(&self, m: i64) -> (Vec<i64>, Vec<i64>) {
        let lo = (0..self.dim)
            .map(|i| m * self.vertices.iter().map(|v| v[i]).min().unwrap_or(0))
            .collect();
        let hi = (0..self.dim)
            .map(|i| m * self.vertices.iter().map(|v| v[i]).max().unwrap_or(0))
            .collect();
        (lo, hi)
    }

    /// Calls `f` with every lattice point `x` of `mP` and its scaled degree.
    pub fn for_each_point(&self, m: u64, mut f: impl FnMut(&[i64], i64)) {
        let m = m as i64;
        let (lo, hi) = self.bounding_box(m);
        let limit = m * self.newton_scale();
        for_each_in_box(&lo, &hi, |x| {
            let k = self.scaled_degree(x);
            if k <= limit {
                f(x, k);
            }
        });
    }

    /// `|mP ∩ Z^n|`.
    pub fn count_points(&self, m: u64) -> u64 {
        let mut c = 0;
        self.for_each_point(m, |_, _| c += 1);
        c
    }

    /// Lattice points strictly inside `mP`.
    pub fn count_interior_points(&self, m: u64) -> u64 {
        let limit = m as i64 * self.newton_scale();
        let mut c = 0;
        self.for_each_point(m, |_, k| {
            if k < limit {
                c += 1
            }
        });
        c
    }

    /// Lattice points on the boundary of `mP`.
    pub fn count_boundary_points(&self, m: u64) -> u64 {
        let limit = m as i64 * self.newton_scale();
        let mut c = 0;
        self.for_each_point(m, |_, k| {
            if k == limit {
                c += 1
            }
        });
        c
    }

    /// Every facet at lattice distance one from the origin.
    pub fn is_reflexive(&self) -> bool {
        self.facets().iter().all(|f| f.rhs == 1)
    }
}

/// Odometer over the integer box `lo..=hi`.
pub(crate) fn for_each_in_box(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == x.len() {
                return;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Complete, duplicate-free facet list computed from scratch.
pub fn facet_representation(p: &LatticePolytope) -> Result<Vec<FacetInequality>> {
    build_facets(p.dim, &p.vertices)
}

pub fn newton_degree(p: &LatticePolytope, x: &[i64]) -> Rational {
    p.newton_degree(x)
}

/// Lattice points of `mP`, in odometer order (first coordinate fastest).
pub fn lattice_points(p: &LatticePolytope, m: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    p.for_each_point(m, |x, _| out.push(x.to_vec()));
    out
}

/// `|∂(mP) ∩ Z^n|`.
pub fn boundary_lattice_point_count(p: &LatticePolytope, m: u64) -> u64 {
    p.count_boundary_points(m)
}

/// `P ⊕ Q = conv(P × {0} ∪ {0} × Q)`.
pub fn free_sum(p: &LatticePolytope, q: &LatticePolytope) -> LatticePolytope {
    let dim = p.dim + q.dim;
    let mut vertices = Vec::with_capacity(p.vertices.len() + q.vertices.len());
    for v in &p.vertices {
        let mut w = v.clone();
        w.resize(dim, 0);
        vertices.push(w);
    }
    for v in &q.vertices {
        let mut w = vec![0; p.dim];
        w.extend_from_slice(v);
        vertices.push(w);
    }
    // Valid by construction; facets are derived on first use.
    LatticePolytope {
        dim,
        vertices,
        derived: OnceBox::new(),
    }
}

/// `n! vol(P)`, summed over the boundary triangulation coned at the origin.
pub fn normalized_volume(p: &LatticePolytope) -> u64 {
    p.boundary_simplices()
        .iter()
        .map(|s| {
            let rows: Vec<&[i64]> = s.iter().map(|&i| p.vertices[i].as_slice()).collect();
            linalg::det(linalg::to_big(&rows))
                .abs()
                .to_u64()
                .expect("volume fits in u64")
        })
        .sum()
}

/// Simplicial cone with some facets removed.
///
/// Facet `j` is the cone over all generators except `j`; when `open_flags[j]`
/// is set, points on that facet are excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenSimplicialCone {
    generators: Vec<Vec<i64>>,
    open_flags: Vec<bool>,
    det: u64,
    /// `inverse * det`: row `j` gives `det * λ_j(x)`.
    inv_scaled: Vec<Vec<i128>>,
}

impl HalfOpenSimplicialCone {
    /// Builds the cone over `generators`, picking open facets by the side
    /// the perturbed reference point `xi + ε e_1 + ε² e_2 + ...` lies on.
    pub fn new(generators: Vec<Vec<i64>>, xi: &[i64]) -> Result<Self> {
        let n = generators.len();
        // Columns are generators, so build the transpose row-wise.
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| generators.iter().map(|g| BigInt::from(g[i])).collect())
            .collect();
        let (d, adj) = linalg::adjugate(&m);
        if d.is_zero() {
            return Err(Error::NotFullDimensional);
        }
        let sign = if d.is_negative() { -1i128 } else { 1 };
        let det = d.abs().to_u64().ok_or(Error::Overflow)?;
        let inv_scaled: Vec<Vec<i128>> = adj
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_i128().map(|x| x * sign).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let open_flags = inv_scaled
            .iter()
            .map(|row| {
                let at_xi: i128 = row.iter().zip(xi).map(|(a, &b)| a * b as i128).sum();
                let s = if at_xi != 0 {
                    at_xi
                } else {
                    *row.iter().find(|v| **v != 0).expect("invertible")
                };
                s < 0
            })
            .collect();
        Ok(Self {
            generators,
            open_flags,
            det,
            inv_scaled,
        })
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn open_flags(&self) -> &[bool] {
        &self.open_flags
    }

    /// Absolute determinant of the generator matrix.
    pub fn det(&self) -> u64 {
        self.det
    }

    fn scaled_coords(&self, x: &[i64]) -> Vec<i128> {
        self.inv_scaled
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, &b)| a * b as i128).sum())
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.scaled_coords(x)
            .iter()
            .zip(&self.open_flags)
            .all(|(&a, &open)| if open { a > 0 } else { a >= 0 })
    }

    /// Lattice points of the half-open fundamental parallelepiped with the
    /// sum of their barycentric coordinates (the Newton degree when the
    /// generators lie on one facet).
    pub fn box_points(&self) -> Vec<(Vec<i64>, Rational)> {
        let n = self.generators.len();
        let lo: Vec<i64> = (0..n)
            .map(|i| self.generators.iter().map(|g| g[i].min(0)).sum())
            .collect();
        let hi: Vec<i64> = (0..n)
            .map(|i| self.generators.iter().map(|g| g[i].max(0)).sum())
            .collect();
        let d = self.det as i128;
        let mut out = Vec::new();
        for_each_in_box(&lo, &hi, |x| {
            let coords = self.scaled_coords(x);
            let inside = coords.iter().zip(&self.open_flags).all(|(&a, &open)| {
                if open {
                    a > 0 && a <= d
                } else {
                    a >= 0 && a < d
                }
            });
            if inside {
                let total: i128 = coords.iter().sum();
                out.push((
                    x.to_vec(),
                    Rational::new(BigInt::from(total), BigInt::from(d)),
                ));
            }
        });
        out
    }
}

/// Half-open cones over the boundary simplices, tiling `R^n` disjointly.
pub fn half_open_decomposition(p: &LatticePolytope) -> Result<Vec<HalfOpenSimplicialCone>> {
    let first = &p.facets()[0];
    let xi: Vec<i64> = (0..p.dim)
        .map(|i| first.vertices.iter().map(|&v| p.vertices[v][i]).sum())
        .collect();
    p.boundary_simplices()
        .iter()
        .map(|s| {
            let gens = s.iter().map(|&i| p.vertices[i].clone()).collect();
            HalfOpenSimplicialCone::new(gens, &xi)
        })
        .collect()
}
