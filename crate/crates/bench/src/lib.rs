//! Fixture generators shared by the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tropical_core::semiring::ExtendedScalar;
use tropical_core::*;

pub fn rng() -> StdRng {
    StdRng::seed_from_u64(0x5eed)
}

/// Random min-plus adjacency matrix with nonnegative dyadic weights and
/// roughly `density` filled entries, star-convergent by construction.
pub fn random_adjacency(n: usize, density: f64, r: &mut StdRng) -> SemiringMatrix {
    let spec = SemiringSpec::MinPlus;
    let mut m = SemiringMatrix::zero(n, n, spec);
    for i in 0..n {
        for j in 0..n {
            if i != j && r.gen_bool(density) {
                m.set(i, j, ExtendedScalar::finite(r.gen_range(0..512) as f64 / 32.0));
            }
        }
    }
    m
}

/// Concave max-plus grid function of the given length.
pub fn concave_grid(len: usize) -> GridFunction {
    let geom = GridGeom::line(-2.0, 4.0 / (len - 1) as f64, len).unwrap();
    GridFunction::from_values_fn(geom, SemiringSpec::MaxPlus, |x| -x[0] * x[0]).unwrap()
}

/// Random finite max-plus grid function.
pub fn rough_grid(len: usize, r: &mut StdRng) -> GridFunction {
    let geom = GridGeom::line(0.0, 0.125, len).unwrap();
    GridFunction::new(
        geom,
        SemiringSpec::MaxPlus,
        (0..len).map(|_| ExtendedScalar::finite(r.gen_range(-256..256) as f64 / 16.0)).collect(),
    )
    .unwrap()
}

/// The quadratic Hopf-Lax fixture on an `n`-point grid.
pub fn quadratic_problem(n: usize) -> HJProblem {
    let geom = GridGeom::line(-2.0, 4.0 / (n - 1) as f64, n).unwrap();
    let pot = GridFunction::from_values_fn(geom.clone(), SemiringSpec::MinPlus, |_| 0.0).unwrap();
    let s0 = GridFunction::from_values_fn(geom, SemiringSpec::MinPlus, |x| x[0] * x[0] / 2.0).unwrap();
    HJProblem::new(1.0, pot, s0).unwrap()
}

/// Middle-thirds midpoint sample of the given depth.
pub fn cantor(depth: u32) -> PointCloud {
    tropical_core::fractal::cantor_midpoints(depth)
}

/// The line fixture x + y + 1.
pub fn line_curve() -> PlaneCurve {
    PlaneCurve::from_real_terms(vec![(1.0, [1, 0]), (1.0, [0, 1]), (1.0, [0, 0])]).unwrap()
}
