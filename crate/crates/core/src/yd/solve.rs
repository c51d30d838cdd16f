use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::{kernel, Matrix, Scalar, Subspace};
use crate::homcore::HomHopfAlgebra;

use super::module::{yd_sides, YDModule};

/// Coactions compatible with a fixed action. `linear` is the solution space
/// of the YD condition together with `σ∘ν = (ν⊗α)∘σ`, in coordinates of the
/// row-major entries of the `(d*dH) x d` coaction matrix. `coactions` are the
/// points of the counit-affine slice on the coefficient grid that also pass
/// coassociativity (and hence the full YD check).
#[derive(Clone, Debug)]
pub struct CoactionSolutions {
    pub linear: Subspace,
    pub counital_dim: Option<usize>,
    pub coactions: Vec<Matrix>,
    pub search_complete: bool,
}

const GRID_LIMIT: usize = 6561;

fn unit_matrix(h: &HomHopfAlgebra, rows: usize, cols: usize, idx: usize) -> Matrix {
    let f = h.field();
    let mut m = Matrix::zeros(f, rows, cols);
    m.set(idx / cols, idx % cols, f.one());
    m
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// Solves the linear part of the YD system for the coaction, then searches
/// the counital affine slice on the grid {0, 1, -1} (or {0, 1} when large)
/// and keeps coassociative points.
pub fn yd_solve_coactions(h: &Arc<HomHopfAlgebra>, action: &Matrix, mu: &Matrix) -> Result<CoactionSolutions> {
    let f = h.field();
    let (d, dh) = (mu.rows(), h.dim());
    let (rows, cols) = (d * dh, d);
    let n = rows * cols;
    // linear constraints, one column per unit coaction
    let mut constraint_cols = Vec::with_capacity(n);
    let mut counit_cols = Vec::with_capacity(n);
    for idx in 0..n {
        let x = unit_matrix(h, rows, cols, idx);
        let v = YDModule::new(h.clone(), mu.clone(), action.clone(), x.clone())?;
        let (lhs, rhs) = yd_sides(&v)?;
        let colin = x.mul(mu).sub(&mu.kron(h.alpha()).mul(&x));
        let mut c = flatten(&lhs.sub(&rhs));
        c.extend(flatten(&colin));
        constraint_cols.push(c);
        let counit = crate::exactlin::Diagram::new(f, &[d]).split(0, &x, d, dh).erase(1, h.counit()).matrix();
        counit_cols.push(flatten(&counit));
    }
    let len = constraint_cols.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(f, len, &constraint_cols);
    let linear = if n == 0 { Subspace::zero(f, 0) } else { kernel(&system) };
    let basis = linear.basis_matrix();
    // counit: (id⊗ε)σ = ν^{-1}
    let counit_map = Matrix::from_columns(f, d * d, &counit_cols);
    let Some(target) = mu.inverse() else {
        return Ok(CoactionSolutions { linear, counital_dim: None, coactions: Vec::new(), search_complete: true });
    };
    let reduced = counit_map.mul(&basis);
    let aug = reduced.hstack(&Matrix::column_vector(f, &flatten(&target)));
    let (r, pivots) = aug.rref_with_pivots();
    let k = linear.dim();
    if pivots.contains(&k) {
        return Ok(CoactionSolutions { linear, counital_dim: None, coactions: Vec::new(), search_complete: true });
    }
    let mut t0 = vec![f.zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        t0[p] = r.get(i, k).clone();
    }
    let directions = kernel(&reduced);
    let kd = directions.dim();
    let grid: Vec<Scalar> = if 3usize.checked_pow(kd as u32).is_some_and(|c| c <= GRID_LIMIT) {
        vec![f.zero(), f.one(), -f.one()]
    } else {
        vec![f.zero(), f.one()]
    };
    let total = (grid.len() as u128).checked_pow(kd as u32);
    let search_complete = total.is_some_and(|t| t <= GRID_LIMIT as u128);
    let limit = total.map_or(GRID_LIMIT, |t| t.min(GRID_LIMIT as u128) as usize);
    let mut coactions: Vec<Matrix> = Vec::new();
    for point in 0..limit {
        let mut t = t0.clone();
        let mut rest = point;
        for z in directions.basis() {
            let c = &grid[rest % grid.len()];
            rest /= grid.len();
            if c.is_zero() {
                continue;
            }
            for (ti, zi) in t.iter_mut().zip(z) {
                ti.add_mul(c, zi);
            }
        }
        let entries = basis.apply(&t);
        let x = Matrix::from_entries(f, rows, cols, entries);
        if coactions.contains(&x) {
            continue;
        }
        let v = YDModule::new(h.clone(), mu.clone(), action.clone(), x.clone())?.certify();
        if v.is_verified() {
            coactions.push(x);
        }
    }
    Ok(CoactionSolutions { linear, counital_dim: Some(kd), coactions, search_complete })
}
