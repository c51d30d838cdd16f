use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Tensor3};
use crate::homcore::{
    verify_hom_algebra, verify_hom_bialgebra, verify_hom_coalgebra, verify_hom_hopf, HomAlgebra, HomBialgebra,
    HomCoalgebra, HomHopfAlgebra, VerificationReport,
};
use crate::homrep::{
    verify_bicovariant, verify_bimodule, verify_comodule, verify_left_covariant, verify_module, verify_right_covariant,
    HomRepresentation, Side,
};
use crate::yd::{verify_yd, YDModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    HomAlgebra,
    HomCoalgebra,
    HomBialgebra,
    HomHopf,
    Module,
    Comodule,
    Bimodule,
    Covariant,
    Yd,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::HomAlgebra,
        Kind::HomCoalgebra,
        Kind::HomBialgebra,
        Kind::HomHopf,
        Kind::Module,
        Kind::Comodule,
        Kind::Bimodule,
        Kind::Covariant,
        Kind::Yd,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::HomAlgebra => "hom_algebra",
            Kind::HomCoalgebra => "hom_coalgebra",
            Kind::HomBialgebra => "hom_bialgebra",
            Kind::HomHopf => "hom_hopf",
            Kind::Module => "module",
            Kind::Comodule => "comodule",
            Kind::Bimodule => "bimodule",
            Kind::Covariant => "covariant",
            Kind::Yd => "yd",
        }
    }

    fn is_representation(&self) -> bool {
        !matches!(self, Kind::HomAlgebra | Kind::HomCoalgebra | Kind::HomBialgebra | Kind::HomHopf)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown kind {s:?}")))
    }
}

/// Tensor names in their canonical order.
pub const TENSOR_NAMES: [&str; 11] = [
    "mul",
    "unit",
    "comul",
    "counit",
    "antipode",
    "alpha",
    "mu",
    "action_left",
    "action_right",
    "coaction_left",
    "coaction_right",
];

/// A structure constant array in nested (row-major) order. Rank 1 for
/// `unit`/`counit`, rank 2 for `antipode`/`alpha`/`mu` (entry `[i][j]` is
/// the coefficient of `e_j` in the image of `e_i`), rank 3 otherwise with
/// the inputs-first convention of [`Tensor3`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedTensor {
    pub name: &'static str,
    pub shape: Vec<usize>,
    pub entries: Vec<Scalar>,
}

impl NamedTensor {
    fn vector(name: &'static str, m: &Matrix) -> Self {
        NamedTensor { name, shape: vec![m.rows() * m.cols()], entries: m.entries().to_vec() }
    }

    fn square(name: &'static str, m: &Matrix) -> Self {
        NamedTensor { name, shape: vec![m.cols(), m.rows()], entries: m.transpose().entries().to_vec() }
    }

    fn rank3(name: &'static str, t: Tensor3) -> Self {
        let (a, b, c) = t.shape();
        NamedTensor { name, shape: vec![a, b, c], entries: t.entries().to_vec() }
    }
}

/// Any of the structures the file format can carry.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    HomAlgebra(HomAlgebra),
    HomCoalgebra(HomCoalgebra),
    HomBialgebra(HomBialgebra),
    HomHopf(HomHopfAlgebra),
    Representation(Kind, HomRepresentation),
    Yd(YDModule),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::HomAlgebra(_) => Kind::HomAlgebra,
            Structure::HomCoalgebra(_) => Kind::HomCoalgebra,
            Structure::HomBialgebra(_) => Kind::HomBialgebra,
            Structure::HomHopf(_) => Kind::HomHopf,
            Structure::Representation(k, _) => *k,
            Structure::Yd(_) => Kind::Yd,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Structure::HomAlgebra(a) => a.field(),
            Structure::HomCoalgebra(c) => c.field(),
            Structure::HomBialgebra(b) => b.algebra.field(),
            Structure::HomHopf(h) => h.field(),
            Structure::Representation(_, m) => m.field(),
            Structure::Yd(v) => v.field(),
        }
    }

    /// Dimension of the carrier (the algebra, or the module).
    pub fn dim(&self) -> usize {
        match self {
            Structure::HomAlgebra(a) => a.dim,
            Structure::HomCoalgebra(c) => c.dim,
            Structure::HomBialgebra(b) => b.algebra.dim,
            Structure::HomHopf(h) => h.dim(),
            Structure::Representation(_, m) => m.dim,
            Structure::Yd(v) => v.dim,
        }
    }

    /// Wraps a representation, choosing the kind from the maps present.
    pub fn from_representation(m: HomRepresentation) -> Structure {
        let actions = (m.left_action.is_some(), m.right_action.is_some());
        let coactions = m.left_coaction.is_some() || m.right_coaction.is_some();
        let kind = match (actions, coactions) {
            ((true, true), true) => Kind::Covariant,
            ((true, true), false) => Kind::Bimodule,
            ((false, false), true) => Kind::Comodule,
            _ => Kind::Module,
        };
        Structure::Representation(kind, m)
    }

    /// Named tensors in canonical order.
    pub fn tensors(&self) -> Vec<NamedTensor> {
        let mut out = Vec::new();
        let algebra = |out: &mut Vec<NamedTensor>, a: &HomAlgebra| {
            out.push(NamedTensor::rank3("mul", a.mul_tensor()));
            out.push(NamedTensor::vector("unit", &a.unit));
        };
        let coalgebra = |out: &mut Vec<NamedTensor>, c: &HomCoalgebra| {
            out.push(NamedTensor::rank3("comul", c.comul_tensor()));
            out.push(NamedTensor::vector("counit", &c.counit));
        };
        let hopf = |out: &mut Vec<NamedTensor>, h: &HomHopfAlgebra| {
            algebra(out, &h.bialgebra.algebra);
            coalgebra(out, &h.bialgebra.coalgebra);
            out.push(NamedTensor::square("antipode", &h.antipode));
            out.push(NamedTensor::square("alpha", h.alpha()));
        };
        match self {
            Structure::HomAlgebra(a) => {
                algebra(&mut out, a);
                out.push(NamedTensor::square("alpha", &a.alpha));
            }
            Structure::HomCoalgebra(c) => {
                coalgebra(&mut out, c);
                out.push(NamedTensor::square("alpha", &c.gamma));
            }
            Structure::HomBialgebra(b) => {
                algebra(&mut out, &b.algebra);
                coalgebra(&mut out, &b.coalgebra);
                out.push(NamedTensor::square("alpha", &b.algebra.alpha));
            }
            Structure::HomHopf(h) => hopf(&mut out, h),
            Structure::Representation(_, m) => {
                hopf(&mut out, &m.over);
                out.push(NamedTensor::square("mu", &m.mu));
                let (d, dh) = (m.dim, m.hdim());
                if let Some(x) = &m.left_action {
                    out.push(NamedTensor::rank3("action_left", Tensor3::from_binary_map(x, dh, d)));
                }
                if let Some(x) = &m.right_action {
                    out.push(NamedTensor::rank3("action_right", Tensor3::from_binary_map(x, d, dh)));
                }
                if let Some(x) = &m.left_coaction {
                    out.push(NamedTensor::rank3("coaction_left", Tensor3::from_split_map(x, dh, d)));
                }
                if let Some(x) = &m.right_coaction {
                    out.push(NamedTensor::rank3("coaction_right", Tensor3::from_split_map(x, d, dh)));
                }
            }
            Structure::Yd(v) => {
                hopf(&mut out, &v.over);
                out.push(NamedTensor::square("mu", &v.mu));
                out.push(NamedTensor::rank3("action_right", v.action_tensor()));
                out.push(NamedTensor::rank3("coaction_right", v.coaction_tensor()));
            }
        }
        out
    }

    /// Rebuilds a structure from named tensors. Every tensor the kind
    /// needs must be present with the right shape; anything else is
    /// rejected. Nothing is verified or certified.
    pub fn from_tensors(kind: Kind, field: Field, dim: usize, tensors: &[NamedTensor]) -> Result<Structure> {
        let mut seen: Vec<&str> = Vec::new();
        for t in tensors {
            if !TENSOR_NAMES.contains(&t.name) {
                return Err(Error::Parse(format!("unknown tensor {:?}", t.name)));
            }
            if seen.contains(&t.name) {
                return Err(Error::Parse(format!("tensor {:?} given twice", t.name)));
            }
            if t.entries.iter().any(|s| s.field() != field) {
                return Err(Error::Parse(format!("tensor {:?} has entries outside {field}", t.name)));
            }
            let count = t.shape.iter().try_fold(1usize, |a, &b| a.checked_mul(b));
            if count != Some(t.entries.len()) {
                return Err(Error::Shape(format!("tensor {:?} has {} entries for shape {:?}", t.name, t.entries.len(), t.shape)));
            }
            seen.push(t.name);
        }
        let allowed: &[&str] = match kind {
            Kind::HomAlgebra => &["mul", "unit", "alpha"],
            Kind::HomCoalgebra => &["comul", "counit", "alpha"],
            Kind::HomBialgebra => &["mul", "unit", "comul", "counit", "alpha"],
            Kind::HomHopf => &TENSOR_NAMES[..6],
            Kind::Yd => &["mul", "unit", "comul", "counit", "antipode", "alpha", "mu", "action_right", "coaction_right"],
            _ => &TENSOR_NAMES,
        };
        if let Some(extra) = seen.iter().find(|n| !allowed.contains(n)) {
            return Err(Error::Parse(format!("tensor {extra:?} is not allowed for kind {kind}")));
        }
        let get = |name: &str| tensors.iter().find(|t| t.name == name);
        let need = |name: &str| get(name).ok_or_else(|| Error::Missing(format!("tensor {name:?}")));
        let dh = match kind.is_representation() {
            true => need("alpha")?.shape.first().copied().unwrap_or(0),
            false => dim,
        };
        let shape = |t: &NamedTensor, expected: &[usize]| -> Result<()> {
            let empty = expected.iter().try_fold(1usize, |a, &b| a.checked_mul(b)) == Some(0);
            if t.shape != expected && !(empty && t.entries.is_empty()) {
                return Err(Error::Shape(format!("tensor {:?} has shape {:?}, expected {expected:?}", t.name, t.shape)));
            }
            Ok(())
        };
        let square = |name: &str, n: usize| -> Result<Matrix> {
            let t = need(name)?;
            shape(t, &[n, n])?;
            Ok(Matrix::from_entries(field, n, n, t.entries.clone()).transpose())
        };
        let column = |name: &str, n: usize| -> Result<Matrix> {
            let t = need(name)?;
            shape(t, &[n])?;
            Ok(Matrix::from_entries(field, n, 1, t.entries.clone()))
        };
        let rank3 = |name: &str, s: (usize, usize, usize)| -> Result<Tensor3> {
            let t = need(name)?;
            shape(t, &[s.0, s.1, s.2])?;
            Ok(Tensor3::from_entries(field, s, t.entries.clone()))
        };
        let mul = || rank3("mul", (dh, dh, dh)).map(|t| t.to_binary_map());
        let comul = || rank3("comul", (dh, dh, dh)).map(|t| t.to_split_map());
        let counit = || column("counit", dh).map(|m| m.transpose());
        let hopf = || -> Result<HomHopfAlgebra> {
            HomHopfAlgebra::from_maps(mul()?, column("unit", dh)?, comul()?, counit()?, square("antipode", dh)?, square("alpha", dh)?)
        };
        Ok(match kind {
            Kind::HomAlgebra => Structure::HomAlgebra(HomAlgebra::new(mul()?, column("unit", dh)?, square("alpha", dh)?)?),
            Kind::HomCoalgebra => Structure::HomCoalgebra(HomCoalgebra::new(comul()?, counit()?, square("alpha", dh)?)?),
            Kind::HomBialgebra => {
                let alpha = square("alpha", dh)?;
                let a = HomAlgebra::new(mul()?, column("unit", dh)?, alpha.clone())?;
                Structure::HomBialgebra(HomBialgebra::new(a, HomCoalgebra::new(comul()?, counit()?, alpha)?)?)
            }
            Kind::HomHopf => Structure::HomHopf(hopf()?),
            Kind::Yd => {
                let h = Arc::new(hopf()?);
                let action = rank3("action_right", (dim, dh, dim))?.to_binary_map();
                let coaction = rank3("coaction_right", (dim, dim, dh))?.to_split_map();
                Structure::Yd(YDModule::new(h, square("mu", dim)?, action, coaction)?)
            }
            _ => {
                let h = Arc::new(hopf()?);
                let mut m = HomRepresentation::new(h, square("mu", dim)?)?;
                let has = |n: &str| get(n).is_some();
                let (al, ar, cl, cr) = (has("action_left"), has("action_right"), has("coaction_left"), has("coaction_right"));
                let ok = match kind {
                    Kind::Module => (al || ar) && !(cl || cr),
                    Kind::Comodule => (cl || cr) && !(al || ar),
                    Kind::Bimodule => al && ar && !(cl || cr),
                    _ => al && ar && (cl || cr),
                };
                if !ok {
                    return Err(Error::Missing(format!("the (co)actions present do not form a {kind}")));
                }
                if al {
                    m = m.with_left_action(rank3("action_left", (dh, dim, dim))?.to_binary_map())?;
                }
                if ar {
                    m = m.with_right_action(rank3("action_right", (dim, dh, dim))?.to_binary_map())?;
                }
                if cl {
                    m = m.with_left_coaction(rank3("coaction_left", (dim, dh, dim))?.to_split_map())?;
                }
                if cr {
                    m = m.with_right_coaction(rank3("coaction_right", (dim, dim, dh))?.to_split_map())?;
                }
                Structure::Representation(kind, m)
            }
        })
    }

    /// Runs the verifier matching the kind. Representations also report on
    /// the underlying Hom-Hopf algebra under the `hopf/` prefix. A twist
    /// that must be inverted but is singular is a failed check, not an error.
    pub fn verify(&self) -> Result<VerificationReport> {
        match self.verify_inner() {
            Err(Error::NotInvertible(what)) => {
                let mut r = VerificationReport::new();
                if let Structure::Representation(_, m) = self {
                    r.absorb("hopf", verify_hom_hopf(&m.over));
                } else if let Structure::Yd(v) = self {
                    r.absorb("hopf", verify_hom_hopf(&v.over));
                }
                r.expect(&format!("{what}_invertible"), false, "needed by the remaining checks");
                Ok(r)
            }
            other => other,
        }
    }

    fn verify_inner(&self) -> Result<VerificationReport> {
        Ok(match self {
            Structure::HomAlgebra(a) => verify_hom_algebra(a),
            Structure::HomCoalgebra(c) => verify_hom_coalgebra(c),
            Structure::HomBialgebra(b) => verify_hom_bialgebra(b),
            Structure::HomHopf(h) => verify_hom_hopf(h),
            Structure::Representation(kind, m) => {
                let mut r = VerificationReport::new();
                r.absorb("hopf", verify_hom_hopf(&m.over));
                let body = match kind {
                    Kind::Module => {
                        let mut b = VerificationReport::new();
                        if m.left_action.is_some() {
                            b.absorb("left", verify_module(m, Side::Left)?);
                        }
                        if m.right_action.is_some() {
                            b.absorb("right", verify_module(m, Side::Right)?);
                        }
                        b
                    }
                    Kind::Comodule => {
                        let mut b = VerificationReport::new();
                        if m.left_coaction.is_some() {
                            b.absorb("left", verify_comodule(m, Side::Left)?);
                        }
                        if m.right_coaction.is_some() {
                            b.absorb("right", verify_comodule(m, Side::Right)?);
                        }
                        b
                    }
                    Kind::Bimodule => verify_bimodule(m)?,
                    _ => match (m.left_coaction.is_some(), m.right_coaction.is_some()) {
                        (true, true) => verify_bicovariant(m)?,
                        (true, false) => verify_left_covariant(m)?,
                        _ => verify_right_covariant(m)?,
                    },
                };
                r.absorb("", body);
                r
            }
            Structure::Yd(v) => {
                let mut r = VerificationReport::new();
                r.absorb("hopf", verify_hom_hopf(&v.over));
                r.absorb("", verify_yd(v)?);
                r
            }
        })
    }
}
