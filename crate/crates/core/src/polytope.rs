//! The idempotent semiring of convex compact sets under the Minkowski
//! operations, in vertex representation (dimensions 1-3).
//!
//! `⊕` is the convex hull of the union, `⊙` the Minkowski sum, the
//! ⊙-identity the single point at the origin. Polytopes are kept in
//! canonical form: extreme points only, sorted lexicographically, and
//! counterclockwise from the lexicographic minimum in 2-D. Coordinate
//! comparisons use an absolute `1e-9` tolerance.

use thiserror::Error;

pub const COORD_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConvexError {
    #[error("DimMismatch: expected dimension {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("DimensionUnsupported: dimension {0} (supported: 1-3)")]
    DimensionUnsupported(usize),
    #[error("EmptyPolytope: a polytope needs at least one vertex")]
    EmptyPolytope,
    #[error("NonFiniteVertex: vertex coordinates must be finite")]
    NonFiniteVertex,
    #[error("LawViolation: {law} failed{witness}")]
    LawViolation { law: String, witness: String },
}

/// Convex compact polytope given by its extreme points.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl Polytope {
    /// Canonical hull of an arbitrary finite point set.
    pub fn from_points(dim: usize, points: Vec<Vec<f64>>) -> Result<Self, ConvexError> {
        if !(1..=3).contains(&dim) {
            return Err(ConvexError::DimensionUnsupported(dim));
        }
        if points.is_empty() {
            return Err(ConvexError::EmptyPolytope);
        }
        for p in &points {
            if p.len() != dim {
                return Err(ConvexError::DimMismatch { expected: dim, got: p.len() });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(ConvexError::NonFiniteVertex);
            }
        }
        Ok(Polytope { dim, vertices: canonicalize(dim, points) })
    }

    /// The ⊙-identity `{0}`.
    pub fn origin(dim: usize) -> Result<Self, ConvexError> {
        Self::from_points(dim, vec![vec![0.0; dim]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    fn check_dim(&self, other: &Self) -> Result<(), ConvexError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(ConvexError::DimMismatch { expected: self.dim, got: other.dim })
        }
    }

    /// Minkowski sum `P ⊙ Q`: hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self, ConvexError> {
        self.check_dim(other)?;
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::from_points(self.dim, sums)
    }

    /// `P ⊕ Q`: hull of the two vertex sets; idempotent.
    pub fn hull_union(&self, other: &Self) -> Result<Self, ConvexError> {
        self.check_dim(other)?;
        let mut pts = self.vertices.clone();
        pts.extend(other.vertices.iter().cloned());
        Self::from_points(self.dim, pts)
    }

    /// Support value `max_v (v, x)` over the vertices.
    pub fn support_function(&self, x: &[f64]) -> Result<f64, ConvexError> {
        if x.len() != self.dim {
            return Err(ConvexError::DimMismatch { expected: self.dim, got: x.len() });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max))
    }

    /// Equality of canonical vertex lists within the coordinate tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.vertices.len() == other.vertices.len()
            && self
                .vertices
                .iter()
                .zip(&other.vertices)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= COORD_TOL))
    }
}

/// A sublinear function `p(x) = max_i (v_i, x)` given by its linear pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct SublinearFunction {
    dim: usize,
    pieces: Vec<Vec<f64>>,
}

impl SublinearFunction {
    pub fn new(dim: usize, pieces: Vec<Vec<f64>>) -> Result<Self, ConvexError> {
        if pieces.is_empty() {
            return Err(ConvexError::EmptyPolytope);
        }
        for p in &pieces {
            if p.len() != dim {
                return Err(ConvexError::DimMismatch { expected: dim, got: p.len() });
            }
        }
        Ok(SublinearFunction { dim, pieces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Vec<f64>] {
        &self.pieces
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.pieces
            .iter()
            .map(|v| v.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Pointwise sum `p₁ + p₂`: pieces are all pairwise sums.
    pub fn sum(&self, other: &Self) -> Result<Self, ConvexError> {
        if self.dim != other.dim {
            return Err(ConvexError::DimMismatch { expected: self.dim, got: other.dim });
        }
        let mut pieces = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::new(self.dim, pieces)
    }

    /// Pointwise max `max(p₁, p₂)`: union of pieces.
    pub fn max(&self, other: &Self) -> Result<Self, ConvexError> {
        if self.dim != other.dim {
            return Err(ConvexError::DimMismatch { expected: self.dim, got: other.dim });
        }
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        Self::new(self.dim, pieces)
    }

    /// Subdifferential at the origin: the hull of the defining slopes, a
    /// nonempty convex compact set.
    pub fn subdifferential_at_origin(&self) -> Result<Polytope, ConvexError> {
        Polytope::from_points(self.dim, self.pieces.clone())
    }
}

/// Per-law outcome of [`semiring_law_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub laws: Vec<(String, bool)>,
}

/// Checks the Minkowski semiring laws on a triple, with canonical-form
/// equality, plus the subdifferential homomorphism identities
/// `∂(p₁+p₂) = ∂p₁ ⊙ ∂p₂` and `∂(max{p₁,p₂}) = ∂p₁ ⊕ ∂p₂` for the support
/// functions of the first two operands. Fails with `LawViolation` on the
/// first broken identity.
pub fn semiring_law_check(p: &Polytope, q: &Polytope, r: &Polytope) -> Result<LawReport, ConvexError> {
    p.check_dim(q)?;
    p.check_dim(r)?;
    let origin = Polytope::origin(p.dim())?;
    let mut laws: Vec<(String, bool)> = Vec::new();
    let mut check = |law: &str, a: &Polytope, b: &Polytope| -> Result<(), ConvexError> {
        let ok = a.approx_eq(b);
        laws.push((law.to_string(), ok));
        if ok {
            Ok(())
        } else {
            Err(ConvexError::LawViolation {
                law: law.into(),
                witness: format!(": lhs {:?} vs rhs {:?}", a.vertices(), b.vertices()),
            })
        }
    };

    check("⊕ commutative", &p.hull_union(q)?, &q.hull_union(p)?)?;
    check("⊕ associative", &p.hull_union(q)?.hull_union(r)?, &p.hull_union(&q.hull_union(r)?)?)?;
    check("⊕ idempotent", &p.hull_union(p)?, p)?;
    check("⊙ commutative", &p.minkowski_sum(q)?, &q.minkowski_sum(p)?)?;
    check("⊙ associative", &p.minkowski_sum(q)?.minkowski_sum(r)?, &p.minkowski_sum(&q.minkowski_sum(r)?)?)?;
    check("⊙ identity", &p.minkowski_sum(&origin)?, p)?;
    check(
        "distributivity",
        &p.minkowski_sum(&q.hull_union(r)?)?,
        &p.minkowski_sum(q)?.hull_union(&p.minkowski_sum(r)?)?,
    )?;

    let p1 = SublinearFunction::new(p.dim(), p.vertices().to_vec())?;
    let p2 = SublinearFunction::new(q.dim(), q.vertices().to_vec())?;
    check(
        "∂(p1+p2) = ∂p1 ⊙ ∂p2",
        &p1.sum(&p2)?.subdifferential_at_origin()?,
        &p.minkowski_sum(q)?,
    )?;
    check(
        "∂(max{p1,p2}) = ∂p1 ⊕ ∂p2",
        &p1.max(&p2)?.subdifferential_at_origin()?,
        &p.hull_union(q)?,
    )?;
    Ok(LawReport { laws })
}

fn dedup(points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| q.iter().zip(&p).all(|(a, b)| (a - b).abs() <= COORD_TOL)) {
            out.push(p);
        }
    }
    out
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > COORD_TOL {
            return x.partial_cmp(y).unwrap();
        }
    }
    std::cmp::Ordering::Equal
}

fn canonicalize(dim: usize, points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let pts = dedup(points);
    match dim {
        1 => {
            let lo = pts.iter().cloned().min_by(|a, b| lex_cmp(a, b)).unwrap();
            let hi = pts.iter().cloned().max_by(|a, b| lex_cmp(a, b)).unwrap();
            if (hi[0] - lo[0]).abs() <= COORD_TOL {
                vec![lo]
            } else {
                vec![lo, hi]
            }
        }
        2 => hull_2d(pts),
        _ => {
            let mut ext = extreme_points_nd(pts);
            ext.sort_by(|a, b| lex_cmp(a, b));
            ext
        }
    }
}

/// Andrew's monotone chain; output is counterclockwise starting from the
/// lexicographic minimum, strictly extreme points only.
fn hull_2d(mut pts: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    pts.sort_by(|a, b| lex_cmp(a, b));
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &[f64], a: &[f64], b: &[f64]| -> f64 {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<Vec<f64>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= COORD_TOL {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<f64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= COORD_TOL {
            upper.pop();
        }
        upper.push(p.clone());
    }
    // Drop the duplicated chain endpoints; collinear input collapses to the
    // two extremes, which both chains then share.
    lower.pop();
    upper.pop();
    if upper.len() == 1 && lower.len() == 1 {
        return vec![lower.remove(0), upper.remove(0)];
    }
    lower.extend(upper);
    lower
}

/// Extreme points of a finite set in dimension 3 (works for any dim): a
/// point is kept iff it is not a convex combination of the others.
fn extreme_points_nd(pts: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    if pts.len() <= 2 {
        return pts;
    }
    let mut keep = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<&Vec<f64>> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
        if !in_convex_hull(p, &others) {
            keep.push(p.clone());
        }
    }
    keep
}

/// Convex-combination membership via a phase-1 simplex on
/// `Σ λ_i q_i = p, Σ λ_i = 1, λ ≥ 0` (Bland's rule; tolerance `1e-9`).
fn in_convex_hull(p: &[f64], others: &[&Vec<f64>]) -> bool {
    let dim = p.len();
    let rows = dim + 1;
    let m = others.len();
    // Tableau columns: m structural λ's, `rows` artificials, then the RHS.
    let cols = m + rows + 1;
    let mut t = vec![vec![0.0f64; cols]; rows];
    for (r, row) in t.iter_mut().enumerate() {
        for (j, q) in others.iter().enumerate() {
            row[j] = if r < dim { q[r] } else { 1.0 };
        }
        row[m + r] = 1.0;
        row[cols - 1] = if r < dim { p[r] } else { 1.0 };
        if row[cols - 1] < 0.0 {
            for v in row.iter_mut() {
                *v = -*v;
            }
            row[m + r] = 1.0; // keep the artificial basis column positive
            for (rr, entry) in (0..rows).map(|rr| (rr, m + rr)) {
                if rr != r {
                    row[entry] = 0.0;
                }
            }
        }
    }
    // Phase-1 objective: minimize the sum of artificials. Reduced costs are
    // maintained for the negated objective row z = -Σ artificials rows.
    let mut obj = vec![0.0f64; cols];
    for row in &t {
        for (j, v) in row.iter().enumerate() {
            obj[j] += v;
        }
    }
    for r in 0..rows {
        obj[m + r] = 0.0;
    }
    let mut basis: Vec<usize> = (0..rows).map(|r| m + r).collect();
    for _pivot in 0..10_000 {
        // Entering column: first with positive reduced cost (Bland).
        let Some(enter) = (0..m + rows).find(|&j| obj[j] > 1e-12) else { break };
        // Ratio test, lowest basis index on ties (Bland).
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for r in 0..rows {
            if t[r][enter] > 1e-12 {
                let ratio = t[r][cols - 1] / t[r][enter];
                if ratio < best - 1e-15 || (ratio < best + 1e-15 && leave.map_or(true, |l| basis[r] < basis[l])) {
                    best = ratio;
                    leave = Some(r);
                }
            }
        }
        let Some(lr) = leave else { break };
        let piv = t[lr][enter];
        for v in t[lr].iter_mut() {
            *v /= piv;
        }
        for r in 0..rows {
            if r != lr {
                let f = t[r][enter];
                if f != 0.0 {
                    for j in 0..cols {
                        t[r][j] -= f * t[lr][j];
                    }
                }
            }
        }
        let f = obj[enter];
        if f != 0.0 {
            for j in 0..cols {
                obj[j] -= f * t[lr][j];
            }
        }
        basis[lr] = enter;
    }
    let infeasibility: f64 = (0..rows)
        .filter(|&r| basis[r] >= m)
        .map(|r| t[r][cols - 1].abs())
        .sum();
    infeasibility <= COORD_TOL
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly2(pts: &[[f64; 2]]) -> Polytope {
        Polytope::from_points(2, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn poly1(pts: &[f64]) -> Polytope {
        Polytope::from_points(1, pts.iter().map(|&p| vec![p]).collect()).unwrap()
    }

    #[test]
    fn canonical_form_2d() {
        // Interior and edge points are dropped, order is CCW from lex-min.
        let p = poly2(&[[1.0, 0.0], [0.0, 0.0], [0.5, 0.25], [0.0, 1.0], [0.5, 0.0]]);
        assert_eq!(p.vertices(), &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]);
        let again = Polytope::from_points(2, p.vertices().to_vec()).unwrap();
        assert!(p.approx_eq(&again));
    }

    #[test]
    fn degenerate_polytopes() {
        assert_eq!(poly1(&[2.0, 2.0]).vertices(), &[vec![2.0]]);
        assert_eq!(poly1(&[3.0, -1.0, 0.5]).vertices(), &[vec![-1.0], vec![3.0]]);
        let seg = poly2(&[[0.0, 0.0], [2.0, 2.0], [1.0, 1.0]]);
        assert_eq!(seg.vertices().len(), 2);
        let pt = poly2(&[[1.0, 1.0], [1.0, 1.0]]);
        assert_eq!(pt.vertices().len(), 1);
    }

    #[test]
    fn minkowski_examples() {
        let tri = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let origin = Polytope::origin(2).unwrap();
        assert!(tri.minkowski_sum(&origin).unwrap().approx_eq(&tri));
        let seg = poly1(&[0.0, 1.0]);
        assert_eq!(seg.minkowski_sum(&seg).unwrap().vertices(), &[vec![0.0], vec![2.0]]);
        // Brute-force vertex-sum hull: the doubled triangle.
        let double = tri.minkowski_sum(&tri).unwrap();
        assert!(double.approx_eq(&poly2(&[[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]])));
    }

    #[test]
    fn hull_union_examples() {
        let tri = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert!(tri.hull_union(&tri).unwrap().approx_eq(&tri));
        let a = poly1(&[0.0]);
        let b = poly1(&[1.0]);
        assert_eq!(a.hull_union(&b).unwrap().vertices(), &[vec![0.0], vec![1.0]]);
        // Two disjoint triangles against a quickhull-style oracle on the
        // union point set: hull has the four outer corners.
        let t1 = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let t2 = poly2(&[[3.0, 0.0], [4.0, 0.0], [4.0, 1.0]]);
        let u = t1.hull_union(&t2).unwrap();
        assert!(u.approx_eq(&poly2(&[[0.0, 0.0], [4.0, 0.0], [4.0, 1.0], [0.0, 1.0]])));
    }

    #[test]
    fn support_examples() {
        let pt = poly2(&[[2.0, -1.0]]);
        assert_eq!(pt.support_function(&[3.0, 1.0]).unwrap(), 5.0);
        let seg = poly1(&[0.0, 4.0]);
        assert_eq!(seg.support_function(&[1.0]).unwrap(), 4.0);
        let tri = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(tri.support_function(&[1.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn subdifferential_examples() {
        let lin = SublinearFunction::new(2, vec![vec![2.0, 3.0]]).unwrap();
        assert_eq!(lin.subdifferential_at_origin().unwrap().vertices(), &[vec![2.0, 3.0]]);
        let abs = SublinearFunction::new(1, vec![vec![1.0], vec![-1.0]]).unwrap();
        let sub = abs.subdifferential_at_origin().unwrap();
        assert_eq!(sub.vertices(), &[vec![-1.0], vec![1.0]]);
        for &x in &[-2.0, -0.5, 0.0, 1.0, 3.0] {
            assert_eq!(sub.support_function(&[x]).unwrap(), abs.eval(&[x]));
        }
        let p = SublinearFunction::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let tri = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        assert!(p.subdifferential_at_origin().unwrap().approx_eq(&tri));
    }

    #[test]
    fn law_check_on_triangles_and_degenerates() {
        let p = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let q = poly2(&[[2.0, 2.0], [3.0, 2.5], [2.5, 3.0]]);
        let r = poly2(&[[-1.0, 0.0], [0.0, -1.0], [-1.0, -1.0]]);
        let report = semiring_law_check(&p, &q, &r).unwrap();
        assert!(report.laws.iter().all(|(_, ok)| *ok));
        // Points and segments embedded in 2-D.
        let pt = poly2(&[[0.5, 0.5]]);
        let seg = poly2(&[[0.0, 0.0], [1.0, 1.0]]);
        assert!(semiring_law_check(&pt, &seg, &p).is_ok());
    }

    #[test]
    fn canonical_vertices_are_extreme() {
        // Every canonical vertex must fail the convex-combination test
        // against the others (Minkowski sums may generate interior points
        // of the sum before re-canonicalization).
        let p = poly2(&[[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [2.0, 2.0]]);
        let q = poly2(&[[0.0, 0.0], [1.0, 0.5], [0.5, 1.0]]);
        let sum = p.minkowski_sum(&q).unwrap();
        assert!(sum.vertices().len() <= p.vertices().len() * q.vertices().len());
        for (i, v) in sum.vertices().iter().enumerate() {
            let others: Vec<&Vec<f64>> = sum
                .vertices()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q)
                .collect();
            assert!(!in_convex_hull(v, &others), "vertex {v:?} is not extreme");
        }
        assert!(Polytope::from_points(2, vec![vec![f64::NAN, 0.0]]).is_err());
    }

    #[test]
    fn extreme_points_3d() {
        // Unit tetrahedron plus its centroid and an edge midpoint.
        let pts = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.25, 0.25, 0.25],
            vec![0.5, 0.5, 0.0],
        ];
        let p = Polytope::from_points(3, pts).unwrap();
        assert_eq!(p.vertices().len(), 4);
        // Planar square embedded in 3-D with its center.
        let sq = Polytope::from_points(
            3,
            vec![
                vec![0.0, 0.0, 1.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 1.0],
                vec![0.0, 1.0, 1.0],
                vec![0.5, 0.5, 1.0],
            ],
        )
        .unwrap();
        assert_eq!(sq.vertices().len(), 4);
        // Minkowski sum of two 3-D segments is a parallelogram (4 vertices).
        let sa = Polytope::from_points(3, vec![vec![0.0; 3], vec![1.0, 0.0, 0.0]]).unwrap();
        let sb = Polytope::from_points(3, vec![vec![0.0; 3], vec![0.0, 1.0, 1.0]]).unwrap();
        assert_eq!(sa.minkowski_sum(&sb).unwrap().vertices().len(), 4);
    }

    #[test]
    fn support_probe_matches_canonical_equality() {
        // Canonical-list equality agrees with the behavioral notion:
        // equal support values on a 64-direction probe plus equal counts.
        let probe: Vec<[f64; 2]> = (0..64)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / 64.0;
                [a.cos(), a.sin()]
            })
            .collect();
        let same_by_probe = |p: &Polytope, q: &Polytope| {
            p.vertices().len() == q.vertices().len()
                && probe.iter().all(|d| {
                    (p.support_function(d).unwrap() - q.support_function(d).unwrap()).abs() <= 1e-9
                })
        };
        let tri = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let tri_permuted = poly2(&[[0.0, 1.0], [0.0, 0.0], [0.5, 0.0], [1.0, 0.0]]);
        let other = poly2(&[[0.0, 0.0], [1.0, 0.0], [0.25, 1.0]]);
        assert!(tri.approx_eq(&tri_permuted) && same_by_probe(&tri, &tri_permuted));
        assert!(!tri.approx_eq(&other) && !same_by_probe(&tri, &other));
    }

    #[test]
    fn law_check_3d_triple() {
        let p = Polytope::from_points(3, vec![vec![0.0; 3], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        let q = Polytope::from_points(3, vec![vec![1.0, 1.0, 1.0], vec![2.0, 1.0, 1.5]]).unwrap();
        let r = Polytope::from_points(3, vec![vec![-0.5, 0.25, 0.0]]).unwrap();
        assert!(semiring_law_check(&p, &q, &r).is_ok());
    }
}
