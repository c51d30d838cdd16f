use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Rational, Scalar};
use crate::homcore::{HomHopfAlgebra, VerificationReport};
use crate::yd::{verify_yd, yd_sides, YDModule};

use super::hopf::{cyclic_twist, sweedler_twist};

/// One-dimensional YD module over `cyclic_twist(n, k)`: `v◁g^i = χ^i v`,
/// `v ↦ v⊗g^d`, ν = id. Rejected with [`Error::NoSolution`] unless
/// `verify_yd` passes.
pub fn graded_yd(n: usize, k: usize, d: usize, chi: &Scalar, field: Field) -> Result<YDModule> {
    let h = Arc::new(cyclic_twist(n, k, field)?);
    graded_yd_over(&h, d, chi)
}

/// [`graded_yd`] over an already built `cyclic_twist(n, k)`.
pub fn graded_yd_over(h: &Arc<HomHopfAlgebra>, d: usize, chi: &Scalar) -> Result<YDModule> {
    let n = h.dim();
    let f = h.field();
    if chi.field() != f {
        return Err(Error::InvalidParameter(format!("chi = {chi} is not in {f}")));
    }
    if d >= n {
        return Err(Error::InvalidParameter(format!("degree {d} out of range for C_{n}")));
    }
    if !chi.pow(n as u32).is_one() {
        return Err(Error::InvalidParameter(format!("chi = {chi} is not an {n}-th root of unity")));
    }
    let values: Vec<Scalar> = (0..n).map(|i| chi.pow(i as u32)).collect();
    let action = Matrix::row_vector(f, &values);
    let mut coaction = Matrix::zeros(f, n, 1);
    coaction.set(d, 0, f.one());
    checked_yd(h, action, coaction, &format!("graded data (d = {d}, chi = {chi})"))
}

/// One-dimensional YD modules over `sweedler_twist(c)`: `v◁g = ±v`,
/// `v◁x = 0`, coaction `v ↦ v⊗1` for `+1` and `v ↦ v⊗g` for `-1`.
pub fn sweedler_yd(c: &Rational, sign: i64, field: Field) -> Result<YDModule> {
    let h = Arc::new(sweedler_twist(c, field)?);
    sweedler_yd_over(&h, sign)
}

/// [`sweedler_yd`] over an already built Sweedler twist.
pub fn sweedler_yd_over(h: &Arc<HomHopfAlgebra>, sign: i64) -> Result<YDModule> {
    let f = h.field();
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter(format!("sign must be 1 or -1, got {sign}")));
    }
    if h.dim() != 4 {
        return Err(Error::Shape(format!("expected a 4-dimensional algebra, got {}", h.dim())));
    }
    let action = Matrix::row_vector(f, &[f.one(), f.int(sign), f.zero(), f.zero()]);
    let mut coaction = Matrix::zeros(f, 4, 1);
    coaction.set(if sign == 1 { 0 } else { 1 }, 0, f.one());
    checked_yd(h, action, coaction, &format!("Sweedler character (sign {sign})"))
}

fn checked_yd(h: &Arc<HomHopfAlgebra>, action: Matrix, coaction: Matrix, what: &str) -> Result<YDModule> {
    let f = h.field();
    let v = YDModule::new(h.clone(), Matrix::identity(f, 1), action, coaction)?;
    let report = verify_yd(&v)?;
    if report.passed() {
        return Ok(v.certify());
    }
    Err(Error::NoSolution(format!("{what} is not Yetter-Drinfel'd: {}", describe_failure(&v, &report))))
}

/// First failing check; for the YD condition both sides are printed.
fn describe_failure(v: &YDModule, report: &VerificationReport) -> String {
    let Some(c) = report.failures().next() else {
        return "no failing check".into();
    };
    let Some(w) = &c.witness else {
        return c.name.clone();
    };
    let base = format!("{} at {:?}", c.name, w.tuple);
    if c.name != "yd_condition" {
        let res: Vec<String> = w.residual.iter().map(ToString::to_string).collect();
        return format!("{base}, residual [{}]", res.join(", "));
    }
    let dims = [v.dim, v.hdim()];
    let col = w.tuple.iter().zip(dims).fold(0, |acc, (&t, d)| acc * d + t);
    let Ok((lhs, rhs)) = yd_sides(v) else {
        return base;
    };
    let show = |m: &Matrix| m.column(col).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    format!("{base}: lhs [{}], rhs [{}]", show(&lhs), show(&rhs))
}

/// H as a YD module over itself: `g◁h = (S(h_1)α^{-1}(g))α(h_2)`, coaction Δ,
/// ν = α.
pub fn adjoint_yd(h: &Arc<HomHopfAlgebra>) -> Result<YDModule> {
    let action = crate::homcore::adjoint_right_map(h)?;
    let v = YDModule::new(h.clone(), h.alpha().clone(), action, h.comul().clone())?;
    let report = verify_yd(&v)?;
    if !report.passed() {
        return Err(Error::NoSolution(format!("adjoint data is not Yetter-Drinfel'd: {}", describe_failure(&v, &report))));
    }
    Ok(v.certify())
}
