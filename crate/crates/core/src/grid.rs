//! Functions sampled on uniform 1-D and 2-D grids.

use thiserror::Error;

use crate::semiring::{ExtendedScalar, SemiringSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("GridMismatch: operands live on different grids")]
    GridMismatch,
    #[error("StepMismatch: operands use different grid steps")]
    StepMismatch,
    #[error("SpecMismatch: operands use different semiring specs")]
    SpecMismatch,
    #[error("EmptyFunction: the function is ⊥ everywhere")]
    EmptyFunction,
    #[error("DimensionUnsupported: got dimension {got}, supported {supported}")]
    DimensionUnsupported { got: usize, supported: &'static str },
    #[error("BadGeometry: {0}")]
    BadGeometry(String),
}

/// Geometry of a uniform grid: per-axis origin, step and extent.
#[derive(Debug, Clone, PartialEq)]
pub struct GridGeom {
    pub origin: Vec<f64>,
    pub step: Vec<f64>,
    pub extents: Vec<usize>,
}

impl GridGeom {
    pub fn new(origin: Vec<f64>, step: Vec<f64>, extents: Vec<usize>) -> Result<Self, GridError> {
        let dim = origin.len();
        if dim == 0 || dim > 2 {
            return Err(GridError::DimensionUnsupported { got: dim, supported: "1 or 2" });
        }
        if step.len() != dim || extents.len() != dim {
            return Err(GridError::BadGeometry("origin/step/extent arity mismatch".into()));
        }
        if step.iter().any(|&s| !(s > 0.0) || !s.is_finite()) {
            return Err(GridError::BadGeometry(format!("steps must be positive reals, got {step:?}")));
        }
        if extents.iter().any(|&n| n == 0) {
            return Err(GridError::BadGeometry("extents must be positive".into()));
        }
        if origin.iter().any(|o| !o.is_finite()) {
            return Err(GridError::BadGeometry("origin must be finite".into()));
        }
        Ok(GridGeom { origin, step, extents })
    }

    /// Uniform 1-D grid `origin, origin+step, …` with `len` points.
    pub fn line(origin: f64, step: f64, len: usize) -> Result<Self, GridError> {
        Self::new(vec![origin], vec![step], vec![len])
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    /// Total number of gridpoints.
    pub fn len(&self) -> usize {
        self.extents.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate of the multi-index.
    pub fn coord(&self, idx: &[usize]) -> Vec<f64> {
        idx.iter()
            .zip(self.origin.iter().zip(&self.step))
            .map(|(&i, (&o, &s))| o + i as f64 * s)
            .collect()
    }

    /// 1-D coordinate shortcut.
    pub fn coord1(&self, i: usize) -> f64 {
        debug_assert_eq!(self.dim(), 1);
        self.origin[0] + i as f64 * self.step[0]
    }

    /// Flat index of a multi-index (row-major).
    pub fn flat(&self, idx: &[usize]) -> usize {
        match *idx {
            [i] => i,
            [i, j] => i * self.extents[1] + j,
            _ => unreachable!("grids are 1-D or 2-D"),
        }
    }

    /// Multi-index of a flat index.
    pub fn unflat(&self, flat: usize) -> Vec<usize> {
        match self.dim() {
            1 => vec![flat],
            _ => vec![flat / self.extents[1], flat % self.extents[1]],
        }
    }
}

/// A function sampled on a uniform grid with values in an idempotent
/// semiring (max-plus or min-plus semantics per the attached spec).
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    geom: GridGeom,
    spec: SemiringSpec,
    values: Vec<ExtendedScalar>,
}

impl GridFunction {
    pub fn new(geom: GridGeom, spec: SemiringSpec, values: Vec<ExtendedScalar>) -> Result<Self, GridError> {
        if !spec.is_idempotent() {
            return Err(GridError::BadGeometry(
                "grid functions carry max-plus or min-plus semantics only".into(),
            ));
        }
        if values.len() != geom.len() {
            return Err(GridError::BadGeometry(format!(
                "value count {} does not match grid extent {}",
                values.len(),
                geom.len()
            )));
        }
        Ok(GridFunction { geom, spec, values })
    }

    /// Sample a closure over the grid coordinates.
    pub fn from_fn(
        geom: GridGeom,
        spec: SemiringSpec,
        f: impl Fn(&[f64]) -> ExtendedScalar,
    ) -> Result<Self, GridError> {
        let values = (0..geom.len()).map(|flat| f(&geom.coord(&geom.unflat(flat)))).collect();
        Self::new(geom, spec, values)
    }

    /// Sample a plain real-valued closure (all values finite).
    pub fn from_values_fn(
        geom: GridGeom,
        spec: SemiringSpec,
        f: impl Fn(&[f64]) -> f64,
    ) -> Result<Self, GridError> {
        Self::from_fn(geom, spec, |x| ExtendedScalar::finite(f(x)))
    }

    pub fn geom(&self) -> &GridGeom {
        &self.geom
    }

    pub fn spec(&self) -> SemiringSpec {
        self.spec
    }

    pub fn values(&self) -> &[ExtendedScalar] {
        &self.values
    }

    pub fn value(&self, flat: usize) -> ExtendedScalar {
        self.values[flat]
    }

    pub fn set_value(&mut self, flat: usize, v: ExtendedScalar) {
        self.values[flat] = v;
    }

    /// True when at least one value is not ⊥ (nonempty effective domain).
    pub fn is_nonempty(&self) -> bool {
        self.values.iter().any(|v| !v.is_bottom())
    }

    /// Pointwise ⊙ with a scalar (`c + φ`).
    pub fn scale(&self, c: ExtendedScalar) -> GridFunction {
        let values = self.values.iter().map(|&v| self.spec.mul(c, v)).collect();
        GridFunction { geom: self.geom.clone(), spec: self.spec, values }
    }

    /// Pointwise ⊕ of two functions on the same grid.
    pub fn combine(&self, other: &GridFunction) -> Result<GridFunction, GridError> {
        if self.spec != other.spec {
            return Err(GridError::SpecMismatch);
        }
        if self.geom != other.geom {
            return Err(GridError::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        Ok(GridFunction { geom: self.geom.clone(), spec: self.spec, values })
    }
}

/// An integral kernel `K(x, y)`: a 2-D grid function whose rows are indexed
/// by the input grid X and columns by the output grid Y.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel(GridFunction);

impl Kernel {
    pub fn new(f: GridFunction) -> Result<Self, GridError> {
        if f.geom().dim() != 2 {
            return Err(GridError::DimensionUnsupported { got: f.geom().dim(), supported: "2" });
        }
        Ok(Kernel(f))
    }

    pub fn grid_function(&self) -> &GridFunction {
        &self.0
    }

    /// Geometry of the input axis X.
    pub fn x_geom(&self) -> GridGeom {
        let g = self.0.geom();
        GridGeom { origin: vec![g.origin[0]], step: vec![g.step[0]], extents: vec![g.extents[0]] }
    }

    /// Geometry of the output axis Y.
    pub fn y_geom(&self) -> GridGeom {
        let g = self.0.geom();
        GridGeom { origin: vec![g.origin[1]], step: vec![g.step[1]], extents: vec![g.extents[1]] }
    }

    pub fn value(&self, xi: usize, yj: usize) -> ExtendedScalar {
        self.0.value(self.0.geom().flat(&[xi, yj]))
    }
}
