//! Dense matrices over a semiring, Kleene closure and Bellman solvers.
//!
//! The central object is the stationary Bellman equation `X = H ⊙ X ⊕ F`.
//! Its least solution is `X = H* ⊙ F`, where `H* = I ⊕ H ⊕ H² ⊕ …` is the
//! Kleene closure, computed here by in-place elimination (the algebraic-path
//! generalization of Floyd-Warshall). Two iterative schemes are provided as
//! well: [`jacobi_iterate`] applies `X ← H ⊙ X ⊕ F` globally per round,
//! [`gauss_seidel_iterate`] re-uses rows already updated within a sweep.

use thiserror::Error;

use crate::semiring::{ExtendedScalar, SemiringError, SemiringSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("ShapeMismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("SpecMismatch: operands use different semiring specs")]
    SpecMismatch,
    #[error("DivergentClosure: star diverges on the eliminated diagonal at node {node}")]
    DivergentClosure { node: usize },
    #[error("NotConverged: no exact fixpoint after {iters} iterations")]
    NotConverged { iters: usize, last: Box<SemiringMatrix> },
    #[error(transparent)]
    Semiring(#[from] SemiringError),
}

/// Dense row-major matrix of semiring scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiringMatrix {
    rows: usize,
    cols: usize,
    spec: SemiringSpec,
    entries: Vec<ExtendedScalar>,
}

impl SemiringMatrix {
    /// All-`0̄` matrix.
    pub fn zero(rows: usize, cols: usize, spec: SemiringSpec) -> Self {
        SemiringMatrix { rows, cols, spec, entries: vec![spec.zero(); rows * cols] }
    }

    /// `1̄` on the diagonal, `0̄` elsewhere.
    pub fn identity(n: usize, spec: SemiringSpec) -> Self {
        let mut m = Self::zero(n, n, spec);
        for i in 0..n {
            m.set(i, i, spec.one());
        }
        m
    }

    pub fn from_rows(spec: SemiringSpec, rows: Vec<Vec<ExtendedScalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{r}x{c}"),
                got: "ragged rows".into(),
            });
        }
        Ok(SemiringMatrix { rows: r, cols: c, spec, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> SemiringSpec {
        self.spec
    }

    pub fn get(&self, i: usize, j: usize) -> ExtendedScalar {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtendedScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[ExtendedScalar] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows, self.spec);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_spec(&self, other: &Self) -> Result<(), LinalgError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(LinalgError::SpecMismatch)
        }
    }

    /// Entrywise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_spec(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        Ok(SemiringMatrix { rows: self.rows, cols: self.cols, spec: self.spec, entries })
    }

    /// Matrix product `C[i][j] = ⊕_k A[i][k] ⊙ B[k][j]`.
    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_spec(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                expected: format!("{} inner", self.cols),
                got: format!("{} inner", other.rows),
            });
        }
        let s = self.spec;
        let mut out = Self::zero(self.rows, other.cols, s);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = s.zero();
                for k in 0..self.cols {
                    acc = s.add(acc, s.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Kleene closure `H* = I ⊕ H ⊕ H² ⊕ …` by n-pass in-place elimination.
    ///
    /// At pass `k` the pivot `M[k][k]` is starred; a divergent pivot means a
    /// cycle outside the star-convergence region (a negative cycle for
    /// min-plus, a positive one for max-plus) and aborts with
    /// `DivergentClosure`. For min-plus, `H*[i][j]` is the least path weight
    /// from `i` to `j`, counting the empty path on the diagonal.
    pub fn kleene_closure(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch {
                expected: "square".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let s = self.spec;
        let n = self.rows;
        let mut m = self.clone();
        for k in 0..n {
            let star = match s.scalar_star(m.get(k, k)) {
                Ok(v) => v,
                Err(SemiringError::Divergent { .. }) => return Err(LinalgError::DivergentClosure { node: k }),
                Err(e) => return Err(e.into()),
            };
            for i in 0..n {
                let left = s.mul(m.get(i, k), star);
                if left.is_bottom() {
                    continue;
                }
                for j in 0..n {
                    let via = s.mul(left, m.get(k, j));
                    m.set(i, j, s.add(m.get(i, j), via));
                }
            }
        }
        for i in 0..n {
            m.set(i, i, s.add(m.get(i, i), s.one()));
        }
        Ok(m)
    }
}

/// Least solution of `X = H ⊙ X ⊕ F`, computed as `H* ⊙ F`.
///
/// The residual identity is verified exactly before returning. Closure
/// entries and the residual's sums may associate floating-point additions
/// differently, so when the raw product misses the identity by rounding,
/// the iterate is refined by `X ← H ⊙ X ⊕ F` until it is a bit-exact
/// fixpoint (a no-op for weights on which addition is exact).
pub fn solve_bellman(h: &SemiringMatrix, f: &SemiringMatrix) -> Result<SemiringMatrix, LinalgError> {
    h.check_spec(f)?;
    if !h.is_square() || h.cols() != f.rows() {
        return Err(LinalgError::ShapeMismatch {
            expected: format!("{n}x{n} ⊙ {n}xm", n = h.rows()),
            got: format!("{}x{} ⊙ {}x{}", h.rows(), h.cols(), f.rows(), f.cols()),
        });
    }
    let star = h.kleene_closure()?;
    let mut x = star.matmul(f)?;
    for _ in 0..=h.rows() {
        let next = h.matmul(&x)?.add(f)?;
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    // A sub-ulp oscillation can only be driven by a cycle whose rounded
    // weight straddles zero; report it as divergent.
    Err(LinalgError::DivergentClosure { node: 0 })
}

/// Iterates `X ← H ⊙ X ⊕ F` until an exact fixpoint, at most `max_iters`
/// rounds. Returns the fixpoint and the number of applications performed.
pub fn jacobi_iterate(
    h: &SemiringMatrix,
    f: &SemiringMatrix,
    x0: &SemiringMatrix,
    max_iters: usize,
) -> Result<(SemiringMatrix, usize), LinalgError> {
    check_iteration_shapes(h, f, x0)?;
    let mut x = x0.clone();
    for it in 1..=max_iters {
        let next = h.matmul(&x)?.add(f)?;
        if next == x {
            return Ok((x, it));
        }
        x = next;
    }
    Err(LinalgError::NotConverged { iters: max_iters, last: Box::new(x) })
}

/// Gauss-Seidel sweeps of the Bellman map: rows are recomputed in ascending
/// index order and each row update is visible to the rows after it within
/// the same sweep. Converges to the same fixpoint as [`jacobi_iterate`]
/// whenever both converge. Returns the fixpoint and the number of sweeps.
pub fn gauss_seidel_iterate(
    h: &SemiringMatrix,
    f: &SemiringMatrix,
    x0: &SemiringMatrix,
    max_iters: usize,
) -> Result<(SemiringMatrix, usize), LinalgError> {
    check_iteration_shapes(h, f, x0)?;
    let s = h.spec();
    let n = h.rows();
    let m = f.cols();
    let mut x = x0.clone();
    for sweep in 1..=max_iters {
        let mut changed = false;
        for i in 0..n {
            for j in 0..m {
                let mut acc = f.get(i, j);
                for k in 0..n {
                    acc = s.add(acc, s.mul(h.get(i, k), x.get(k, j)));
                }
                if acc != x.get(i, j) {
                    x.set(i, j, acc);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok((x, sweep));
        }
    }
    Err(LinalgError::NotConverged { iters: max_iters, last: Box::new(x) })
}

fn check_iteration_shapes(
    h: &SemiringMatrix,
    f: &SemiringMatrix,
    x0: &SemiringMatrix,
) -> Result<(), LinalgError> {
    h.check_spec(f)?;
    h.check_spec(x0)?;
    if !h.is_square() || h.cols() != f.rows() || (f.rows(), f.cols()) != (x0.rows(), x0.cols()) {
        return Err(LinalgError::ShapeMismatch {
            expected: format!("{n}x{n}, {n}xm, {n}xm", n = h.rows()),
            got: format!(
                "{}x{}, {}x{}, {}x{}",
                h.rows(),
                h.cols(),
                f.rows(),
                f.cols(),
                x0.rows(),
                x0.cols()
            ),
        });
    }
    Ok(())
}
