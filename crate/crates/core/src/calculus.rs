//! Idempotent integration, sup-convolution, the Legendre transform and
//! grid kernel operators.
//!
//! Everything here is an exact finite ⊕-reduction over gridpoints: the
//! integral is `sup φ` (max-plus) or `inf φ` (min-plus), convolution is
//! `(φ ⊛ ψ)(g) = ⊕_{x}(φ(x) ⊙ ψ(g − x))`, and the transform is
//! `φ̃(ξ) = ⊕_x(ξ·x ⊙ φ(x))`. The transform exchanges ⊛ with pointwise ⊙
//! and its sign convention is `+φ(x)`, i.e. the classical Fenchel
//! conjugate of `−φ`.

use crate::grid::{GridError, GridFunction, GridGeom, Kernel};
use crate::semiring::{ExtendedScalar, SemiringSpec};

/// ⊕-reduction of all grid values: `sup_x φ(x)` for max-plus,
/// `inf_x φ(x)` for min-plus.
pub fn idempotent_integral(phi: &GridFunction) -> Result<ExtendedScalar, GridError> {
    if !phi.is_nonempty() {
        return Err(GridError::EmptyFunction);
    }
    Ok(phi.spec().sum(phi.values().iter().copied()))
}

/// Integral of `φ` against the idempotent measure with density `ψ`:
/// `⊕_x (φ(x) ⊙ ψ(x))`.
pub fn measure_integral(phi: &GridFunction, psi: &GridFunction) -> Result<ExtendedScalar, GridError> {
    if phi.spec() != psi.spec() {
        return Err(GridError::SpecMismatch);
    }
    if phi.geom() != psi.geom() {
        return Err(GridError::GridMismatch);
    }
    let s = phi.spec();
    Ok(s.sum(phi.values().iter().zip(psi.values()).map(|(&a, &b)| s.mul(a, b))))
}

/// The idempotent scalar product `⟨φ, ψ⟩`; same reduction as
/// [`measure_integral`], exposed under the pairing name.
pub fn scalar_product(phi: &GridFunction, psi: &GridFunction) -> Result<ExtendedScalar, GridError> {
    measure_integral(phi, psi)
}

/// Sup-convolution `(φ ⊛ ψ)(g) = ⊕_{x+y=g} (φ(x) ⊙ ψ(y))`.
///
/// Steps must agree per axis; the result grid is the Minkowski sum of the
/// two domains (origins add, extents combine to `n + m − 1`).
pub fn sup_convolution(phi: &GridFunction, psi: &GridFunction) -> Result<GridFunction, GridError> {
    if phi.spec() != psi.spec() {
        return Err(GridError::SpecMismatch);
    }
    let (ga, gb) = (phi.geom(), psi.geom());
    if ga.dim() != gb.dim() {
        return Err(GridError::GridMismatch);
    }
    if ga.step != gb.step {
        return Err(GridError::StepMismatch);
    }
    let origin: Vec<f64> = ga.origin.iter().zip(&gb.origin).map(|(a, b)| a + b).collect();
    let extents: Vec<usize> = ga.extents.iter().zip(&gb.extents).map(|(a, b)| a + b - 1).collect();
    let out_geom = GridGeom::new(origin, ga.step.clone(), extents)?;
    let s = phi.spec();
    let mut values = vec![s.zero(); out_geom.len()];
    for ia in 0..ga.len() {
        let va = phi.value(ia);
        if va.is_bottom() {
            continue;
        }
        let ma = ga.unflat(ia);
        for ib in 0..gb.len() {
            let term = s.mul(va, psi.value(ib));
            if term.is_bottom() {
                continue;
            }
            let mb = gb.unflat(ib);
            let mk: Vec<usize> = ma.iter().zip(&mb).map(|(a, b)| a + b).collect();
            let k = out_geom.flat(&mk);
            values[k] = s.add(values[k], term);
        }
    }
    GridFunction::new(out_geom, s, values)
}

/// The transform `φ̃(ξ) = ⊕_x (ξ·x ⊙ φ(x))`, sampled on the caller's ξ grid.
///
/// Dispatches to an `O(N+M)` monotone-argmax sweep when `φ` is 1-D with a
/// contiguous finite window that passes the discrete concavity check
/// (convexity for min-plus); otherwise falls back to the `O(N·M)` reduction.
/// The two paths agree exactly whenever grid arithmetic is exact.
pub fn legendre_transform(phi: &GridFunction, xi: &GridGeom) -> Result<GridFunction, GridError> {
    if !phi.is_nonempty() {
        return Err(GridError::EmptyFunction);
    }
    if xi.dim() != phi.geom().dim() {
        return Err(GridError::GridMismatch);
    }
    if phi.geom().dim() == 1 {
        if let Some(window) = sweepable_window(phi) {
            return legendre_sweep(phi, xi, window);
        }
    }
    legendre_transform_brute(phi, xi)
}

/// The `O(N·M)` reduction; the independent reference path for
/// [`legendre_transform`].
pub fn legendre_transform_brute(phi: &GridFunction, xi: &GridGeom) -> Result<GridFunction, GridError> {
    if !phi.is_nonempty() {
        return Err(GridError::EmptyFunction);
    }
    let g = phi.geom();
    if xi.dim() != g.dim() {
        return Err(GridError::GridMismatch);
    }
    let s = phi.spec();
    let mut values = Vec::with_capacity(xi.len());
    for fx in 0..xi.len() {
        let xi_pt = xi.coord(&xi.unflat(fx));
        let mut acc = s.zero();
        for fp in 0..g.len() {
            let v = phi.value(fp);
            if v.is_bottom() {
                continue;
            }
            let x = g.coord(&g.unflat(fp));
            let dot: f64 = xi_pt.iter().zip(&x).map(|(a, b)| a * b).sum();
            acc = s.add(acc, s.mul(ExtendedScalar::finite(dot), v));
        }
        values.push(acc);
    }
    GridFunction::new(xi.clone(), s, values)
}

/// Contiguous finite window `[lo, hi]` on which the 1-D function is finite
/// and discretely concave (max-plus) or convex (min-plus); `None` disables
/// the fast transform path.
fn sweepable_window(phi: &GridFunction) -> Option<(usize, usize)> {
    let vals = phi.values();
    let lo = vals.iter().position(|v| !v.is_bottom())?;
    let hi = vals.iter().rposition(|v| !v.is_bottom())?;
    let mut fin = Vec::with_capacity(hi - lo + 1);
    for v in &vals[lo..=hi] {
        fin.push(v.as_finite()?);
    }
    // Second differences must not change the bending direction anywhere.
    let concave_for_max = matches!(phi.spec(), SemiringSpec::MaxPlus);
    for w in fin.windows(3) {
        let bend = (w[2] - w[1]) - (w[1] - w[0]);
        if (concave_for_max && bend > 0.0) || (!concave_for_max && bend < 0.0) {
            return None;
        }
    }
    Some((lo, hi))
}

fn legendre_sweep(phi: &GridFunction, xi: &GridGeom, window: (usize, usize)) -> Result<GridFunction, GridError> {
    let g = phi.geom();
    let s = phi.spec();
    let (lo, hi) = window;
    let score = |i: usize, xi_v: f64| xi_v * g.coord1(i) + phi.value(i).unwrap_finite();
    // For max-plus the maximizer index is nondecreasing in ξ; for min-plus
    // the minimizer of ξx + φ(x) over convex φ is nonincreasing in ξ, so the
    // sweep runs over ξ in descending order with the same advance rule.
    let descending = matches!(phi.spec(), SemiringSpec::MinPlus);
    let better = |a: f64, b: f64| if descending { a <= b } else { a >= b };
    let mut out = vec![ExtendedScalar::Bottom; xi.len()];
    let mut j = lo;
    for k in 0..xi.len() {
        let fx = if descending { xi.len() - 1 - k } else { k };
        let xi_v = xi.coord1(fx);
        while j < hi && better(score(j + 1, xi_v), score(j, xi_v)) {
            j += 1;
        }
        out[fx] = ExtendedScalar::finite(score(j, xi_v));
    }
    GridFunction::new(xi.clone(), s, out)
}

/// Suggests a ξ grid covering the finite-difference slope range of a 1-D
/// function. The transform itself never infers its output grid; this is a
/// convenience for callers that have no better domain knowledge.
pub fn suggest_slope_grid(phi: &GridFunction, len: usize) -> Result<GridGeom, GridError> {
    let g = phi.geom();
    if g.dim() != 1 {
        return Err(GridError::DimensionUnsupported { got: g.dim(), supported: "1" });
    }
    let finite: Vec<(f64, f64)> = (0..g.len())
        .filter_map(|i| phi.value(i).as_finite().map(|v| (g.coord1(i), v)))
        .collect();
    if finite.len() < 2 {
        return Err(GridError::EmptyFunction);
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for w in finite.windows(2) {
        let slope = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
        lo = lo.min(-slope).min(slope);
        hi = hi.max(-slope).max(slope);
    }
    let len = len.max(2);
    let span = (hi - lo).max(1e-9);
    GridGeom::line(lo, span / (len - 1) as f64, len)
}

/// Inverse-direction reduction `⊕̄_ξ (φ̃(ξ) − x·ξ)` (inf for max-plus grids).
///
/// On a ξ grid wide enough to contain the active slopes this recovers the
/// least concave majorant of the original function at interior points, and
/// the function itself when it is concave piecewise-linear.
pub fn biconjugate(phi_tilde: &GridFunction, x: &GridGeom) -> Result<GridFunction, GridError> {
    if !phi_tilde.is_nonempty() {
        return Err(GridError::EmptyFunction);
    }
    let g = phi_tilde.geom();
    if g.dim() != 1 || x.dim() != 1 {
        return Err(GridError::DimensionUnsupported { got: g.dim().max(x.dim()), supported: "1" });
    }
    let max_semantics = matches!(phi_tilde.spec(), SemiringSpec::MaxPlus);
    let mut values = Vec::with_capacity(x.len());
    for ix in 0..x.len() {
        let xv = x.coord1(ix);
        let mut acc: Option<f64> = None;
        for ixi in 0..g.len() {
            if let Some(t) = phi_tilde.value(ixi).as_finite() {
                let cand = t - xv * g.coord1(ixi);
                acc = Some(match acc {
                    None => cand,
                    // The envelope runs against the grid's own reduction.
                    Some(a) if max_semantics => a.min(cand),
                    Some(a) => a.max(cand),
                });
            }
        }
        values.push(match acc {
            Some(v) => ExtendedScalar::finite(v),
            None => ExtendedScalar::Bottom,
        });
    }
    GridFunction::new(x.clone(), phi_tilde.spec(), values)
}

/// Least concave majorant of a finite 1-D grid function, sampled on the same
/// grid (the hull-of-subgraph addition of concave function spaces).
pub fn least_concave_majorant(phi: &GridFunction) -> Result<GridFunction, GridError> {
    let g = phi.geom();
    if g.dim() != 1 {
        return Err(GridError::DimensionUnsupported { got: g.dim(), supported: "1" });
    }
    let pts: Vec<(f64, f64)> = (0..g.len())
        .filter_map(|i| phi.value(i).as_finite().map(|v| (g.coord1(i), v)))
        .collect();
    if pts.is_empty() {
        return Err(GridError::EmptyFunction);
    }
    // Upper hull by a monotone scan: keep turns convex-side-down.
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (p.0 - a.0) * (b.1 - a.1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let eval = |x: f64| -> f64 {
        match hull.iter().position(|&(hx, _)| hx >= x) {
            Some(0) => hull[0].1,
            None => hull[hull.len() - 1].1,
            Some(k) => {
                let (x0, y0) = hull[k - 1];
                let (x1, y1) = hull[k];
                y0 + (y1 - y0) * (x - x0) / (x1 - x0)
            }
        }
    };
    let values = (0..g.len())
        .map(|i| match phi.value(i) {
            ExtendedScalar::Bottom => ExtendedScalar::Bottom,
            _ => ExtendedScalar::finite(eval(g.coord1(i))),
        })
        .collect();
    GridFunction::new(g.clone(), phi.spec(), values)
}

/// Kernel application `(Kφ)(y) = ⊕_x (K(x, y) ⊙ φ(x))`.
///
/// Reduces over x in ascending index order, which makes the result agree
/// bit-for-bit with the matrix product of the transposed kernel and φ as a
/// column vector.
pub fn apply_kernel(k: &Kernel, phi: &GridFunction) -> Result<GridFunction, GridError> {
    if k.grid_function().spec() != phi.spec() {
        return Err(GridError::SpecMismatch);
    }
    if k.x_geom() != *phi.geom() {
        return Err(GridError::GridMismatch);
    }
    let s = phi.spec();
    let y_geom = k.y_geom();
    let mut values = Vec::with_capacity(y_geom.len());
    for yj in 0..y_geom.len() {
        let mut acc = s.zero();
        for xi in 0..phi.geom().len() {
            acc = s.add(acc, s.mul(k.value(xi, yj), phi.value(xi)));
        }
        values.push(acc);
    }
    GridFunction::new(y_geom, s, values)
}
