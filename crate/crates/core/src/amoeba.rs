//! Amoebas of plane curves under the dequantization deformation, tropical
//! curves (corner loci), and Hausdorff distance between them.
//!
//! For a real plane curve `f` the deformation rescales coefficients as
//! `a ↦ sign(a)·|a|^{1/h}` (so `f₁ = f`), which pins the constants of the
//! limiting corner locus at `log|a|`. Amoeba points are `Log_h` images of
//! zeros of the deformed curve, sampled column-wise on a log-modulus ×
//! angle lattice in both variables; each emitted point is verified by a
//! relative root residual. The tropical curve is computed combinatorially:
//! each pair of terms contributes its tie line clipped by dominance over
//! the remaining terms, with coincident loci merged at the largest lattice
//! weight.

use num_complex::Complex64;
use thiserror::Error;

use crate::dequant::{DequantError, GeneralizedPolynomial, TropicalPolynomial};

const TOL: f64 = 1e-9;
const N_THETA: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AmoebaError {
    #[error("DegenerateCurve: {0}")]
    DegenerateCurve(String),
    #[error("EmptyWindow: no points of {0} fall inside the window")]
    EmptyWindow(&'static str),
    #[error("InvalidCurve: {0}")]
    InvalidCurve(String),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Dequant(#[from] DequantError),
}

/// A plane curve `f(x, y) = 0` with real nonzero coefficients and integer
/// exponents, at least two terms.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    coeffs: Vec<f64>,
    exps: Vec<[i64; 2]>,
}

impl PlaneCurve {
    pub fn new(poly: &GeneralizedPolynomial) -> Result<Self, AmoebaError> {
        if poly.variables() != 2 {
            return Err(AmoebaError::InvalidCurve(format!(
                "plane curves have 2 variables, got {}",
                poly.variables()
            )));
        }
        let mut coeffs = Vec::new();
        let mut exps = Vec::new();
        for (a, d) in poly.terms() {
            if a.im != 0.0 {
                return Err(AmoebaError::InvalidCurve(format!("coefficient {a} is not real")));
            }
            let mut e = [0i64; 2];
            for k in 0..2 {
                let r = d[k].round();
                if (d[k] - r).abs() > TOL {
                    return Err(AmoebaError::InvalidCurve(format!("exponent {} is not an integer", d[k])));
                }
                e[k] = r as i64;
            }
            coeffs.push(a.re);
            exps.push(e);
        }
        if coeffs.len() < 2 {
            return Err(AmoebaError::InvalidCurve("a plane curve needs at least two terms".into()));
        }
        Ok(PlaneCurve { coeffs, exps })
    }

    pub fn from_real_terms(terms: Vec<(f64, [i64; 2])>) -> Result<Self, AmoebaError> {
        let poly = GeneralizedPolynomial::from_real(
            2,
            terms.into_iter().map(|(a, d)| (a, vec![d[0] as f64, d[1] as f64])).collect(),
        )?;
        Self::new(&poly)
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, [i64; 2])> + '_ {
        self.coeffs.iter().copied().zip(self.exps.iter().copied())
    }

    pub fn polynomial(&self) -> GeneralizedPolynomial {
        GeneralizedPolynomial::from_real(
            2,
            self.terms().map(|(a, d)| (a, vec![d[0] as f64, d[1] as f64])).collect(),
        )
        .expect("curve terms are a valid polynomial")
    }

    /// Coefficient deformation `a ↦ sign(a)·|a|^{1/h}`; the identity at `h = 1`.
    pub fn deform(&self, h: f64) -> Result<PlaneCurve, AmoebaError> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(AmoebaError::InvalidParameter(format!("h must be a positive real, got {h}")));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.signum() * a.abs().powf(1.0 / h))
            .collect();
        Ok(PlaneCurve { coeffs, exps: self.exps.clone() })
    }

    /// The piecewise-linear support `X ↦ max_d (d·X + log|a_d|)` whose
    /// corner locus is the tropical curve.
    pub fn tropical_support(&self) -> TropicalPolynomial {
        TropicalPolynomial::new(
            self.terms()
                .map(|(a, d)| (a.abs().ln(), vec![d[0] as f64, d[1] as f64]))
                .collect(),
        )
    }

    fn depends_on_both(&self) -> bool {
        (0..2).all(|k| {
            let first = self.exps[0][k];
            self.exps.iter().any(|e| e[k] != first)
        })
    }
}

/// Axis-aligned sampling/clipping window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self, AmoebaError> {
        if x0 < x1 && y0 < y1 && [x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
            Ok(Window { x0, x1, y0, y1 })
        } else {
            Err(AmoebaError::InvalidParameter(format!("bad window [{x0},{x1}]x[{y0},{y1}]")))
        }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.x0 && p[0] <= self.x1 && p[1] >= self.y0 && p[1] <= self.y1
    }

    fn diameter(&self) -> f64 {
        ((self.x1 - self.x0).powi(2) + (self.y1 - self.y0).powi(2)).sqrt()
    }
}

/// One 1-cell of a tropical curve. Directions are primitive integer
/// vectors; `weight` is the lattice length of the dual edge.
#[derive(Debug, Clone, PartialEq)]
pub enum CurvePiece {
    Segment { a: [f64; 2], b: [f64; 2], dir: [i64; 2], weight: u64 },
    Ray { base: [f64; 2], dir: [i64; 2], weight: u64 },
    Line { point: [f64; 2], dir: [i64; 2], weight: u64 },
}

impl CurvePiece {
    pub fn weight(&self) -> u64 {
        match self {
            CurvePiece::Segment { weight, .. }
            | CurvePiece::Ray { weight, .. }
            | CurvePiece::Line { weight, .. } => *weight,
        }
    }

    /// Parametric form `(base, direction, t-range)`.
    fn parametrize(&self) -> ([f64; 2], [f64; 2], f64, f64) {
        match self {
            CurvePiece::Segment { a, b, .. } => (*a, [b[0] - a[0], b[1] - a[1]], 0.0, 1.0),
            CurvePiece::Ray { base, dir, .. } => {
                (*base, [dir[0] as f64, dir[1] as f64], 0.0, f64::INFINITY)
            }
            CurvePiece::Line { point, dir, .. } => {
                (*point, [dir[0] as f64, dir[1] as f64], f64::NEG_INFINITY, f64::INFINITY)
            }
        }
    }

    /// The portion inside the window as a finite segment, if any.
    pub fn clip(&self, w: &Window) -> Option<([f64; 2], [f64; 2])> {
        let (base, d, mut lo, mut hi) = self.parametrize();
        for (b, x, axis_lo, axis_hi) in [(base[0], d[0], w.x0, w.x1), (base[1], d[1], w.y0, w.y1)] {
            if x.abs() <= 1e-15 {
                if b < axis_lo - TOL || b > axis_hi + TOL {
                    return None;
                }
            } else {
                let (t0, t1) = ((axis_lo - b) / x, (axis_hi - b) / x);
                lo = lo.max(t0.min(t1));
                hi = hi.min(t0.max(t1));
            }
        }
        if lo > hi {
            return None;
        }
        Some(([base[0] + lo * d[0], base[1] + lo * d[1]], [base[0] + hi * d[0], base[1] + hi * d[1]]))
    }
}

/// The corner locus of a tropical polynomial: 1-cells plus the finite
/// vertices where they meet.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalCurve {
    pub pieces: Vec<CurvePiece>,
    pub vertices: Vec<[f64; 2]>,
}

impl TropicalCurve {
    /// Window clip of every piece, for plotting or dense sampling.
    pub fn clipped_segments(&self, w: &Window) -> Vec<([f64; 2], [f64; 2])> {
        self.pieces.iter().filter_map(|p| p.clip(w)).collect()
    }

    /// Verifies the balancing condition at every vertex: the
    /// weight-multiplied primitive directions of incident 1-cells sum to
    /// zero. Returns per-vertex sums.
    pub fn balancing_sums(&self) -> Vec<([f64; 2], [i64; 2])> {
        self.vertices
            .iter()
            .map(|&v| {
                let mut sum = [0i64; 2];
                for piece in &self.pieces {
                    let w = piece.weight() as i64;
                    match piece {
                        CurvePiece::Ray { base, dir, .. } if close(*base, v) => {
                            sum[0] += w * dir[0];
                            sum[1] += w * dir[1];
                        }
                        CurvePiece::Segment { a, b, dir, .. } => {
                            if close(*a, v) {
                                let s = seg_orientation(*a, *b, *dir);
                                sum[0] += w * s * dir[0];
                                sum[1] += w * s * dir[1];
                            } else if close(*b, v) {
                                let s = seg_orientation(*b, *a, *dir);
                                sum[0] += w * s * dir[0];
                                sum[1] += w * s * dir[1];
                            }
                        }
                        _ => {}
                    }
                }
                (v, sum)
            })
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_sums().iter().all(|(_, s)| *s == [0, 0])
    }
}

fn close(a: [f64; 2], b: [f64; 2]) -> bool {
    (a[0] - b[0]).abs() <= TOL && (a[1] - b[1]).abs() <= TOL
}

/// Sign making `dir` point from `from` toward `to`.
fn seg_orientation(from: [f64; 2], to: [f64; 2], dir: [i64; 2]) -> i64 {
    let dot = (to[0] - from[0]) * dir[0] as f64 + (to[1] - from[1]) * dir[1] as f64;
    if dot >= 0.0 {
        1
    } else {
        -1
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Corner locus of `max_d (d·X + log|a_d|)` over the curve's terms.
pub fn tropical_curve(f: &PlaneCurve) -> Result<TropicalCurve, AmoebaError> {
    let terms: Vec<([i64; 2], f64)> = f.terms().map(|(a, d)| (d, a.abs().ln())).collect();
    let m = terms.len();
    let mut raw: Vec<CurvePiece> = Vec::new();
    for p in 0..m {
        for q in p + 1..m {
            let n = [terms[p].0[0] - terms[q].0[0], terms[p].0[1] - terms[q].0[1]];
            if n == [0, 0] {
                continue;
            }
            let gamma = terms[q].1 - terms[p].1;
            let n2 = (n[0] * n[0] + n[1] * n[1]) as f64;
            let x0 = [n[0] as f64 * gamma / n2, n[1] as f64 * gamma / n2];
            let g = gcd(n[0], n[1]);
            let dir = [-n[1] / g, n[0] / g];
            let dirf = [dir[0] as f64, dir[1] as f64];
            // Dominance of the tied pair over every remaining term, linear
            // in the line parameter.
            let mut lo = f64::NEG_INFINITY;
            let mut hi = f64::INFINITY;
            let mut empty = false;
            for r in 0..m {
                if r == p || r == q {
                    continue;
                }
                let dn = [terms[p].0[0] - terms[r].0[0], terms[p].0[1] - terms[r].0[1]];
                let a = dn[0] as f64 * x0[0] + dn[1] as f64 * x0[1] + terms[p].1 - terms[r].1;
                let b = dn[0] as f64 * dirf[0] + dn[1] as f64 * dirf[1];
                if b.abs() <= 1e-12 {
                    if a < -TOL {
                        empty = true;
                        break;
                    }
                } else if b > 0.0 {
                    lo = lo.max(-a / b);
                } else {
                    hi = hi.min(-a / b);
                }
            }
            if empty {
                continue;
            }
            if lo.is_finite() && hi.is_finite() && lo > hi - TOL {
                continue; // dominated away, or pinched to a single point
            }
            let weight = g as u64;
            let at = |t: f64| [x0[0] + t * dirf[0], x0[1] + t * dirf[1]];
            let piece = match (lo.is_finite(), hi.is_finite()) {
                (false, false) => CurvePiece::Line { point: x0, dir, weight },
                (true, false) => CurvePiece::Ray { base: at(lo), dir, weight },
                (false, true) => CurvePiece::Ray { base: at(hi), dir: [-dir[0], -dir[1]], weight },
                (true, true) => {
                    let (a, b) = (at(lo), at(hi));
                    CurvePiece::Segment { a, b, dir, weight }
                }
            };
            raw.push(piece);
        }
    }
    // Collinear exponent triples with collinear lifts emit coincident
    // copies; the widest pair carries the true lattice weight.
    let mut pieces: Vec<CurvePiece> = Vec::new();
    for piece in raw {
        if let Some(existing) = pieces.iter_mut().find(|e| same_geometry(e, &piece)) {
            if piece.weight() > existing.weight() {
                *existing = piece;
            }
        } else {
            pieces.push(piece);
        }
    }
    let mut vertices: Vec<[f64; 2]> = Vec::new();
    let mut push_vertex = |v: [f64; 2]| {
        if !vertices.iter().any(|&u| close(u, v)) {
            vertices.push(v);
        }
    };
    for piece in &pieces {
        match piece {
            CurvePiece::Segment { a, b, .. } => {
                push_vertex(*a);
                push_vertex(*b);
            }
            CurvePiece::Ray { base, .. } => push_vertex(*base),
            CurvePiece::Line { .. } => {}
        }
    }
    Ok(TropicalCurve { pieces, vertices })
}

fn same_geometry(a: &CurvePiece, b: &CurvePiece) -> bool {
    let canon_dir = |d: [i64; 2]| {
        if d[0] < 0 || (d[0] == 0 && d[1] < 0) {
            [-d[0], -d[1]]
        } else {
            d
        }
    };
    match (a, b) {
        (CurvePiece::Segment { a: a1, b: b1, .. }, CurvePiece::Segment { a: a2, b: b2, .. }) => {
            (close(*a1, *a2) && close(*b1, *b2)) || (close(*a1, *b2) && close(*b1, *a2))
        }
        (CurvePiece::Ray { base: p1, dir: d1, .. }, CurvePiece::Ray { base: p2, dir: d2, .. }) => {
            close(*p1, *p2) && d1 == d2
        }
        (CurvePiece::Line { point: p1, dir: d1, .. }, CurvePiece::Line { point: p2, dir: d2, .. }) => {
            close(*p1, *p2) && canon_dir(*d1) == canon_dir(*d2)
        }
        _ => false,
    }
}

/// `Log_h` samples of the deformed curve's zero set.
///
/// Columns run over a log-modulus lattice spanning the window range and a
/// uniform angle lattice, in both variables (fixing `x` and solving for
/// `y`, then the reverse, so every tentacle direction is reachable). Each
/// root is kept only if the relative residual of the deformed polynomial
/// is below `1e-9`; columns without roots are skipped, and
/// `DegenerateCurve` is reported when no column produces any point.
pub fn sample_amoeba(
    f: &PlaneCurve,
    h: f64,
    n_samples: usize,
    window: &Window,
) -> Result<Vec<[f64; 2]>, AmoebaError> {
    let detailed = sample_amoeba_detailed(f, h, n_samples, window)?;
    let points: Vec<[f64; 2]> =
        detailed.into_iter().filter(|&(_, r)| r <= 1e-9).map(|(p, _)| p).collect();
    if points.is_empty() {
        return Err(AmoebaError::DegenerateCurve("no sampled root passed verification".into()));
    }
    Ok(points)
}

/// Like [`sample_amoeba`] but returns every computed root together with its
/// relative residual, unfiltered.
pub fn sample_amoeba_detailed(
    f: &PlaneCurve,
    h: f64,
    n_samples: usize,
    window: &Window,
) -> Result<Vec<([f64; 2], f64)>, AmoebaError> {
    if n_samples == 0 {
        return Err(AmoebaError::InvalidParameter("n_samples must be at least 1".into()));
    }
    if !f.depends_on_both() {
        return Err(AmoebaError::DegenerateCurve(
            "the curve must depend on both variables".into(),
        ));
    }
    let fh = f.deform(h)?;
    let mut points = Vec::new();
    for swap in [false, true] {
        let (lo, hi) = if swap { (window.y0, window.y1) } else { (window.x0, window.x1) };
        for k in 0..n_samples {
            let frac = if n_samples == 1 { 0.5 } else { k as f64 / (n_samples - 1) as f64 };
            let logmod = (lo + frac * (hi - lo)) / h;
            for l in 0..N_THETA {
                let theta = std::f64::consts::TAU * (l as f64 + 0.5) / N_THETA as f64;
                for (r_log, residual) in column_roots(&fh, swap, logmod, theta) {
                    let fixed_coord = h * logmod;
                    let free_coord = h * r_log;
                    let p = if swap { [free_coord, fixed_coord] } else { [fixed_coord, free_coord] };
                    points.push((p, residual));
                }
            }
        }
    }
    if points.is_empty() {
        return Err(AmoebaError::DegenerateCurve("every sampled column was rootless".into()));
    }
    Ok(points)
}

/// Roots of the curve along one column: the fixed variable is pinned at
/// `exp(logmod + i·theta)` and the polynomial in the free variable is
/// solved. Returns `(log|root|, relative residual)` pairs. All magnitude
/// handling happens in a max-shifted log frame, so huge `|x|` cannot
/// overflow.
fn column_roots(f: &PlaneCurve, swap: bool, logmod: f64, theta: f64) -> Vec<(f64, f64)> {
    let (fixed, free) = if swap { (1, 0) } else { (0, 1) };
    let jmin = f.exps.iter().map(|e| e[free]).min().unwrap();
    let jmax = f.exps.iter().map(|e| e[free]).max().unwrap();
    let width = (jmax - jmin) as usize + 1;
    // Shift by the largest contribution magnitude before exponentiating.
    let m = f
        .terms()
        .map(|(a, d)| a.abs().ln() + d[fixed] as f64 * logmod)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); width];
    // A coefficient counts as zero only relative to its own addends, so a
    // genuinely tiny leading coefficient (a root of huge modulus) survives.
    let mut addend_scale = vec![0.0f64; width];
    for (a, d) in f.terms() {
        let mag = (a.abs().ln() + d[fixed] as f64 * logmod - m).exp();
        let phase = d[fixed] as f64 * theta + if a < 0.0 { std::f64::consts::PI } else { 0.0 };
        let slot = (d[free] - jmin) as usize;
        coeffs[slot] += Complex64::from_polar(mag, phase);
        addend_scale[slot] = addend_scale[slot].max(mag);
    }
    let effectively_zero = |j: usize| coeffs[j].norm() <= 1e-12 * addend_scale[j];
    let mut lo = 0;
    let mut hi = width;
    while lo < hi && effectively_zero(lo) {
        lo += 1; // roots at the torus-excluded origin
    }
    while hi > lo && effectively_zero(hi - 1) {
        hi -= 1;
    }
    if hi - lo < 2 {
        return Vec::new();
    }
    let roots = poly_roots(&coeffs[lo..hi]);
    roots
        .into_iter()
        .filter(|w| w.norm() > 0.0)
        .map(|w| (w.norm().ln(), relative_residual(f, fixed, free, logmod, theta, w)))
        .collect()
}

fn relative_residual(
    f: &PlaneCurve,
    fixed: usize,
    free: usize,
    logmod: f64,
    theta: f64,
    w: Complex64,
) -> f64 {
    let wlog = w.norm().ln();
    let warg = w.arg();
    let mags: Vec<f64> = f
        .terms()
        .map(|(a, d)| a.abs().ln() + d[fixed] as f64 * logmod + d[free] as f64 * wlog)
        .collect();
    let m = mags.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = Complex64::new(0.0, 0.0);
    for ((a, d), mag) in f.terms().zip(&mags) {
        let phase =
            d[fixed] as f64 * theta + d[free] as f64 * warg + if a < 0.0 { std::f64::consts::PI } else { 0.0 };
        sum += Complex64::from_polar((mag - m).exp(), phase);
    }
    sum.norm()
}

/// All complex roots of `c₀ + c₁ z + … + c_d z^d` (`c_d ≠ 0` after the
/// caller's trimming). Degrees 1 and 2 are closed-form; higher degrees use
/// Durand-Kerner iteration, good for the small degrees that arise here.
fn poly_roots(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    match d {
        0 => Vec::new(),
        1 => vec![-c[0] / c[1]],
        2 => {
            let (a, b, cc) = (c[2], c[1], c[0]);
            let disc = (b * b - 4.0 * a * cc).sqrt();
            let q = if (b + disc).norm() >= (b - disc).norm() { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
            if q.norm() == 0.0 {
                vec![Complex64::new(0.0, 0.0), -b / a]
            } else {
                vec![q / a, cc / q]
            }
        }
        _ => {
            let lead = c[d];
            let monic: Vec<Complex64> = c.iter().map(|&x| x / lead).collect();
            let radius = 1.0
                + monic[..d]
                    .iter()
                    .map(|x| x.norm())
                    .fold(0.0f64, f64::max);
            let seed = Complex64::new(0.4, 0.9);
            let mut z: Vec<Complex64> = (0..d).map(|k| radius * seed.powu(k as u32 + 1)).collect();
            for _ in 0..400 {
                let mut moved = 0.0f64;
                for i in 0..d {
                    let mut denom = Complex64::new(1.0, 0.0);
                    for j in 0..d {
                        if j != i {
                            denom *= z[i] - z[j];
                        }
                    }
                    if denom.norm() == 0.0 {
                        continue;
                    }
                    let mut val = monic[d];
                    for k in (0..d).rev() {
                        val = val * z[i] + monic[k];
                    }
                    let delta = val / denom;
                    z[i] -= delta;
                    moved = moved.max(delta.norm());
                }
                if moved < 1e-13 * radius.max(1.0) {
                    break;
                }
            }
            z
        }
    }
}

/// Symmetric Hausdorff distance between a point sample and a tropical
/// curve, both restricted to the window. The curve is sampled as a dense
/// polyline; errors with `EmptyWindow` if either restriction is empty.
pub fn hausdorff_distance(
    points: &[[f64; 2]],
    curve: &TropicalCurve,
    window: &Window,
) -> Result<f64, AmoebaError> {
    let a: Vec<[f64; 2]> = points.iter().copied().filter(|&p| window.contains(p)).collect();
    if a.is_empty() {
        return Err(AmoebaError::EmptyWindow("the point sample"));
    }
    let res = window.diameter() / 512.0;
    let mut b: Vec<[f64; 2]> = Vec::new();
    for (p, q) in curve.clipped_segments(window) {
        let len = ((q[0] - p[0]).powi(2) + (q[1] - p[1]).powi(2)).sqrt();
        let steps = (len / res).ceil().max(1.0) as usize;
        for k in 0..=steps {
            let t = k as f64 / steps as f64;
            b.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
        }
    }
    if b.is_empty() {
        return Err(AmoebaError::EmptyWindow("the tropical curve"));
    }
    let directed = |from: &[[f64; 2]], to: &[[f64; 2]]| -> f64 {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max)
    };
    Ok(directed(&a, &b).max(directed(&b, &a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_curve() -> PlaneCurve {
        PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (1.0, [0, 1]), (1.0, [0, 0])]).unwrap()
    }

    fn conic_curve() -> PlaneCurve {
        PlaneCurve::from_real_terms(vec![
            (1.0, [1, 1]),
            (1.0, [1, 0]),
            (1.0, [0, 1]),
            (1.0, [0, 0]),
        ])
        .unwrap()
    }

    #[test]
    fn deform_examples() {
        let f = line_curve();
        assert_eq!(f.deform(1.0).unwrap(), f);
        let g = PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (1.0, [0, 1]), (2.0, [0, 0])]).unwrap();
        let gh = g.deform(0.5).unwrap();
        let coeffs: Vec<f64> = gh.terms().map(|(a, _)| a).collect();
        assert_eq!(coeffs, vec![4.0, 1.0, 1.0]); // terms sorted by exponent
        // Unit coefficients are fixed by every deformation.
        assert_eq!(f.deform(0.061).unwrap(), f);
        // Signs survive.
        let s = PlaneCurve::from_real_terms(vec![(-3.0, [1, 0]), (1.0, [0, 1])]).unwrap();
        let sh = s.deform(0.5).unwrap();
        assert_eq!(sh.terms().map(|(a, _)| a).collect::<Vec<_>>(), vec![1.0, -9.0]);
    }

    #[test]
    fn tropical_line_has_three_rays() {
        let t = tropical_curve(&line_curve()).unwrap();
        assert_eq!(t.pieces.len(), 3);
        assert_eq!(t.vertices, vec![[0.0, 0.0]]);
        let mut dirs: Vec<[i64; 2]> = t
            .pieces
            .iter()
            .map(|p| match p {
                CurvePiece::Ray { dir, .. } => *dir,
                other => panic!("expected ray, got {other:?}"),
            })
            .collect();
        dirs.sort();
        assert_eq!(dirs, vec![[-1, 0], [0, -1], [1, 1]]);
        assert!(t.is_balanced());
    }

    #[test]
    fn two_term_curve_is_a_line() {
        let f = PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (1.0, [0, 1])]).unwrap();
        let t = tropical_curve(&f).unwrap();
        assert_eq!(t.pieces.len(), 1);
        match &t.pieces[0] {
            CurvePiece::Line { point, dir, weight } => {
                assert!(close(*point, [0.0, 0.0]));
                assert_eq!(dir.map(i64::abs), [1, 1]);
                assert_eq!(*weight, 1);
            }
            other => panic!("expected full line, got {other:?}"),
        }
        assert!(t.vertices.is_empty());
    }

    #[test]
    fn tropical_conic_is_two_axes() {
        let t = tropical_curve(&conic_curve()).unwrap();
        assert_eq!(t.vertices, vec![[0.0, 0.0]]);
        let mut dirs: Vec<[i64; 2]> = t
            .pieces
            .iter()
            .filter_map(|p| match p {
                CurvePiece::Ray { dir, .. } => Some(*dir),
                _ => None,
            })
            .collect();
        dirs.sort();
        assert_eq!(dirs, vec![[-1, 0], [0, -1], [0, 1], [1, 0]]);
        assert!(t.is_balanced());
    }

    #[test]
    fn collinear_exponents_merge_with_lattice_weight() {
        // 1 + x + x² with flat lifts: one vertical line of weight 2.
        let f = PlaneCurve::from_real_terms(vec![(1.0, [0, 0]), (1.0, [1, 0]), (1.0, [2, 0])]).unwrap();
        let t = tropical_curve(&f).unwrap();
        assert_eq!(t.pieces.len(), 1);
        assert_eq!(t.pieces[0].weight(), 2);
        // A heavier middle lift splits it into two weight-1 lines.
        let g = PlaneCurve::from_real_terms(vec![(1.0, [0, 0]), (4.0, [1, 0]), (1.0, [2, 0])]).unwrap();
        let t2 = tropical_curve(&g).unwrap();
        assert_eq!(t2.pieces.len(), 2);
        assert!(t2.pieces.iter().all(|p| p.weight() == 1));
    }

    #[test]
    fn shifted_constants_move_the_vertex() {
        // x + y + 2: the vertex sits at (log 2, log 2).
        let f = PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (1.0, [0, 1]), (2.0, [0, 0])]).unwrap();
        let t = tropical_curve(&f).unwrap();
        let l2 = 2.0f64.ln();
        assert_eq!(t.vertices.len(), 1);
        assert!(close(t.vertices[0], [l2, l2]));
        // The curve's support function agrees with the tropical polynomial.
        let support = f.tropical_support();
        assert_eq!(support.eval(&[l2, l2]), l2);
    }

    #[test]
    fn curve_pieces_lie_in_tie_sets() {
        for f in [line_curve(), conic_curve()] {
            let t = tropical_curve(&f).unwrap();
            let support = f.tropical_support();
            let w = Window::new(-3.0, 3.0, -3.0, 3.0).unwrap();
            for (p, q) in t.clipped_segments(&w) {
                for frac in [0.25, 0.5, 0.75] {
                    let x = [p[0] + frac * (q[0] - p[0]), p[1] + frac * (q[1] - p[1])];
                    let top = support.eval(&x);
                    let near: usize = f
                        .tropical_support()
                        .terms()
                        .iter()
                        .filter(|(c, d)| (c + d[0] * x[0] + d[1] * x[1] - top).abs() <= 1e-9)
                        .count();
                    assert!(near >= 2, "point {x:?} is not on a tie locus");
                }
            }
        }
    }

    #[test]
    fn sample_line_amoeba_points_verify() {
        let f = line_curve();
        let w = Window::new(-3.0, 3.0, -3.0, 3.0).unwrap();
        let pts = sample_amoeba(&f, 1.0, 41, &w).unwrap();
        assert!(pts.len() > 500);
        // Triangle-inequality characterization of the line amoeba.
        for &[x, y] in &pts {
            let (ex, ey) = (x.exp(), y.exp());
            assert!(ex <= ey + 1.0 + 1e-6 && ey <= ex + 1.0 + 1e-6 && 1.0 <= ex + ey + 1e-6, "({x},{y})");
        }
    }

    #[test]
    fn known_point_on_line_amoeba() {
        // x = -1/2 forces y = -1/2: the Log point is (-log 2, -log 2).
        let f = line_curve();
        let roots = column_roots(&f, false, 0.5f64.ln(), std::f64::consts::PI);
        assert_eq!(roots.len(), 1);
        let (log_y, residual) = roots[0];
        assert!(residual <= 1e-12);
        assert!((log_y - 0.5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn monomial_like_input_degenerates() {
        let f = PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (2.0, [2, 0])]).unwrap();
        let w = Window::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert!(matches!(sample_amoeba(&f, 1.0, 5, &w), Err(AmoebaError::DegenerateCurve(_))));
    }

    #[test]
    fn hausdorff_basics() {
        let t = tropical_curve(&line_curve()).unwrap();
        let w = Window::new(-3.0, 3.0, -3.0, 3.0).unwrap();
        // Points sampled exactly on the curve: distance within resolution.
        let on_curve: Vec<[f64; 2]> = (0..200)
            .flat_map(|k| {
                let s = 3.0 * k as f64 / 199.0;
                [[-s, 0.0], [0.0, -s], [s, s]]
            })
            .collect();
        let d = hausdorff_distance(&on_curve, &t, &w).unwrap();
        assert!(d <= 0.02, "on-curve distance {d}");
        // A translated copy is off by ε·√2.
        let eps = 0.125;
        let shifted: Vec<[f64; 2]> = on_curve.iter().map(|p| [p[0] + eps, p[1] + eps]).collect();
        let d = hausdorff_distance(&shifted, &t, &w).unwrap();
        assert!((d - eps * std::f64::consts::SQRT_2).abs() <= 0.05, "shifted distance {d}");
        let far = vec![[10.0, 10.0]];
        assert!(matches!(hausdorff_distance(&far, &t, &w), Err(AmoebaError::EmptyWindow(_))));
    }

    #[test]
    fn amoeba_shrinks_toward_tropical_line() {
        let f = line_curve();
        let t = tropical_curve(&f).unwrap();
        let w = Window::new(-3.0, 3.0, -3.0, 3.0).unwrap();
        let mut dist = Vec::new();
        for &h in &[1.0, 0.25, 0.05] {
            let pts = sample_amoeba(&f, h, 81, &w).unwrap();
            dist.push(hausdorff_distance(&pts, &t, &w).unwrap());
        }
        assert!(dist[2] < dist[0], "distances {dist:?}");
        assert!(dist.windows(2).all(|d| d[1] <= d[0] * 1.15), "distances {dist:?}");
    }

    #[test]
    fn quartic_curve_roots_verify() {
        // y⁴ + x + 1 = 0 has quartic columns, exercising the iterative
        // root path end to end; every emitted root must pass verification.
        let f = PlaneCurve::from_real_terms(vec![(1.0, [0, 4]), (1.0, [1, 0]), (1.0, [0, 0])]).unwrap();
        let w = Window::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let detailed = sample_amoeba_detailed(&f, 1.0, 17, &w).unwrap();
        assert!(detailed.len() > 1000);
        let worst = detailed.iter().map(|&(_, r)| r).fold(0.0f64, f64::max);
        assert!(worst <= 1e-9, "worst residual {worst}");
    }

    #[test]
    fn durand_kerner_cubic() {
        // (z-1)(z-2i)(z+3) = z³ + (2 - 2i)z² + (-3 - ... ) — just verify
        // residuals at the returned roots instead of hand-expanding.
        let roots_expected = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 2.0),
            Complex64::new(-3.0, 0.0),
        ];
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for r in roots_expected {
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] += ci;
                next[i] -= ci * r;
            }
            c = next;
        }
        let got = poly_roots(&c);
        assert_eq!(got.len(), 3);
        for r in roots_expected {
            assert!(
                got.iter().any(|z| (z - r).norm() < 1e-9),
                "missing root {r}, got {got:?}"
            );
        }
    }
}
