use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Rational, Scalar};
use crate::homcore::{yau_twist, HomHopfAlgebra};

/// Group algebra of the cyclic group C_n, basis `g^0, ..., g^{n-1}`, α = id.
pub fn group_algebra(n: usize, field: Field) -> Result<HomHopfAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group order must be at least 1".into()));
    }
    let one = field.one();
    let mut mul = Matrix::zeros(field, n, n * n);
    let mut comul = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mul.set((i + j) % n, i * n + j, one.clone());
        }
        comul.set(i * n + i, i, one.clone());
        antipode.set((n - i) % n, i, one.clone());
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, one.clone());
    let counit = Matrix::row_vector(field, &vec![one; n]);
    HomHopfAlgebra::from_maps(mul, unit, comul, counit, antipode, Matrix::identity(field, n))
}

/// The automorphism `g ↦ g^k` of k[C_n].
pub fn power_map(n: usize, k: usize, field: Field) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        m.set((i * k) % n, i, field.one());
    }
    m
}

/// Yau twist of k[C_n] by `g ↦ g^k`; requires gcd(k, n) = 1.
pub fn cyclic_twist(n: usize, k: usize, field: Field) -> Result<HomHopfAlgebra> {
    if n == 0 || k.gcd(&n) != 1 {
        return Err(Error::InvalidParameter(format!("gcd({k}, {n}) must be 1")));
    }
    yau_twist(&group_algebra(n, field)?, &power_map(n, k, field))
}

/// Sweedler's 4-dimensional Hopf algebra, basis `1, g, x, gx`, with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`, `Sx = -gx`.
pub fn sweedler(field: Field) -> Result<HomHopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidParameter("Sweedler's algebra needs characteristic different from 2".into()));
    }
    // basis indices: 1 -> 0, g -> 1, x -> 2, gx -> 3
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (1, 2)],
        [(1, 2), (-1, 3), (0, 0), (0, 0)],
        [(1, 3), (-1, 2), (0, 0), (0, 0)],
    ];
    let mut mul = Matrix::zeros(field, 4, 16);
    for (i, row) in table.iter().enumerate() {
        for (j, &(c, k)) in row.iter().enumerate() {
            if c != 0 {
                mul.set(k, i * 4 + j, field.int(c));
            }
        }
    }
    let mut comul = Matrix::zeros(field, 16, 4);
    let terms: [&[(usize, usize)]; 4] = [&[(0, 0)], &[(1, 1)], &[(2, 0), (1, 2)], &[(3, 1), (0, 3)]];
    for (i, ts) in terms.iter().enumerate() {
        for &(a, b) in ts.iter() {
            comul.set(a * 4 + b, i, field.one());
        }
    }
    let mut unit = Matrix::zeros(field, 4, 1);
    unit.set(0, 0, field.one());
    let counit = Matrix::row_vector(field, &[field.one(), field.one(), field.zero(), field.zero()]);
    let antipode = Matrix::from_ints(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    HomHopfAlgebra::from_maps(mul, unit, comul, counit, antipode, Matrix::identity(field, 4))
}

/// The automorphism `g ↦ g`, `x ↦ c x` of Sweedler's algebra.
pub fn sweedler_scaling(c: &Scalar) -> Matrix {
    let f = c.field();
    let mut m = Matrix::identity(f, 4);
    m.set(2, 2, c.clone());
    m.set(3, 3, c.clone());
    m
}

/// Sweedler's algebra twisted by `α_c: g ↦ g, x ↦ c x`.
pub fn sweedler_twist(c: &Rational, field: Field) -> Result<HomHopfAlgebra> {
    let cs = field
        .from_rational(c)
        .ok_or_else(|| Error::InvalidParameter(format!("c = {c} is not defined in {field}")))?;
    if cs.is_zero() {
        return Err(Error::InvalidParameter("c must be nonzero".into()));
    }
    yau_twist(&sweedler(field)?, &sweedler_scaling(&cs))
}
