use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Rational, Scalar};
use crate::homcore::HomHopfAlgebra;
use crate::yd::{functor_f, trivial_yd};

use super::hopf::{cyclic_twist, group_algebra, sweedler_twist};
use super::modules::{regular_comodule, regular_module};
use super::structure::{Kind, Structure};
use super::yd::{adjoint_yd, graded_yd_over, sweedler_yd_over};

/// A catalog family: name, kind of the emitted structure, accepted
/// parameters (besides `field` and `seed`) and a one-line description.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub name: &'static str,
    pub kind: Kind,
    pub params: &'static [&'static str],
    pub about: &'static str,
}

const BASE: &[&str] = &["base", "n", "k", "c"];

pub const FAMILIES: &[Family] = &[
    Family { name: "group_algebra", kind: Kind::HomHopf, params: &["n"], about: "k[C_n], alpha = id" },
    Family { name: "cyclic_twist", kind: Kind::HomHopf, params: &["n", "k"], about: "k[C_n] twisted by g -> g^k" },
    Family { name: "sweedler_twist", kind: Kind::HomHopf, params: &["c"], about: "Sweedler's algebra twisted by x -> cx" },
    Family { name: "regular_module", kind: Kind::Bimodule, params: BASE, about: "H over itself by multiplication" },
    Family { name: "regular_comodule", kind: Kind::Comodule, params: BASE, about: "H over itself by comultiplication" },
    Family { name: "trivial_yd", kind: Kind::Yd, params: BASE, about: "k as a YD module" },
    Family { name: "adjoint_yd", kind: Kind::Yd, params: BASE, about: "H with the adjoint action and coaction Delta" },
    Family { name: "graded_yd", kind: Kind::Yd, params: &["n", "k", "d", "chi"], about: "v<g = chi v, v -> v(x)g^d" },
    Family { name: "sweedler_yd", kind: Kind::Yd, params: &["c", "sign"], about: "v<g = sign v, v<x = 0" },
    Family { name: "free_graded_yd", kind: Kind::Covariant, params: &["n", "k", "d", "chi"], about: "H(x)V for graded V" },
    Family { name: "free_sweedler_yd", kind: Kind::Covariant, params: &["c", "sign"], about: "H(x)V for Sweedler V" },
    Family { name: "free_trivial_yd", kind: Kind::Covariant, params: BASE, about: "H(x)k, bicovariant" },
];

/// Largest cyclic group order the catalog builds.
pub const MAX_ORDER: usize = 64;

const COMMON: [&str; 2] = ["field", "seed"];

pub fn family(name: &str) -> Option<&'static Family> {
    FAMILIES.iter().find(|f| f.name == name)
}

/// Splits `key=value` pairs separated by whitespace or commas. Keys are
/// lowercase identifiers; repeated keys are rejected.
pub fn parse_instance_params(s: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
        if k.is_empty() || !k.bytes().all(|b| b.is_ascii_lowercase() || b == b'_') {
            return Err(Error::Parse(format!("invalid parameter name {k:?}")));
        }
        if v.is_empty() || v.contains('=') {
            return Err(Error::Parse(format!("invalid value for {k:?}")));
        }
        if out.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Parse(format!("parameter {k:?} given twice")));
        }
    }
    Ok(out)
}

/// A named catalog instance with validated parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl fmt::Display for InstanceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl InstanceDescriptor {
    /// Validates the family name, the parameter names and the
    /// family-specific constraints; the structure is built to check them.
    pub fn new(name: &str, params: BTreeMap<String, String>) -> Result<Self> {
        let fam = family(name).ok_or_else(|| Error::InvalidParameter(format!("unknown catalog instance {name:?}")))?;
        if let Some(k) = params.keys().find(|k| !fam.params.contains(&k.as_str()) && !COMMON.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!("{name} does not take parameter {k:?}")));
        }
        let d = InstanceDescriptor { name: name.to_string(), params };
        d.build()?;
        Ok(d)
    }

    pub fn parse(name: &str, params: &str) -> Result<Self> {
        Self::new(name, parse_instance_params(params)?)
    }

    pub fn family(&self) -> &'static Family {
        family(&self.name).expect("validated family")
    }

    pub fn field(&self) -> Result<Field> {
        self.params.get("field").map_or(Ok(Field::Rational), |s| Field::parse_spec(s))
    }

    pub fn seed(&self) -> Result<Option<u64>> {
        self.params
            .get("seed")
            .map(|s| s.parse().map_err(|_| Error::InvalidParameter(format!("seed {s:?} is not a u64"))))
            .transpose()
    }

    fn count(&self, key: &str, default: Option<usize>) -> Result<usize> {
        match self.params.get(key) {
            Some(s) => s.parse().map_err(|_| Error::InvalidParameter(format!("{key} = {s:?} is not a count"))),
            None => default.ok_or_else(|| Error::InvalidParameter(format!("{} needs parameter {key}", self.name))),
        }
    }

    /// Group order, default 3, at most [`MAX_ORDER`].
    fn order(&self) -> Result<usize> {
        let n = self.count("n", Some(3))?;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("n = {n} must lie in 1..={MAX_ORDER}")));
        }
        Ok(n)
    }

    fn rational(&self, key: &str, default: i64) -> Result<Rational> {
        match self.params.get(key) {
            Some(s) => Rational::parse(s).ok_or_else(|| Error::InvalidParameter(format!("{key} = {s:?} is not a rational"))),
            None => Ok(Rational::from_int(default)),
        }
    }

    fn scalar(&self, key: &str, field: Field) -> Result<Scalar> {
        let r = self.rational(key, 1)?;
        field.from_rational(&r).ok_or_else(|| Error::InvalidParameter(format!("{key} = {r} is not defined in {field}")))
    }

    fn cyclic(&self, field: Field) -> Result<HomHopfAlgebra> {
        let n = self.order()?;
        let k = self.count("k", Some(1))?;
        if k.gcd(&n) != 1 {
            return Err(Error::InvalidParameter(format!("gcd({k}, {n}) must be 1")));
        }
        cyclic_twist(n, k, field)
    }

    fn sign(&self) -> Result<i64> {
        match self.params.get("sign").map(String::as_str) {
            None | Some("1") => Ok(1),
            Some("-1") => Ok(-1),
            Some(s) => Err(Error::InvalidParameter(format!("sign = {s:?} must be 1 or -1"))),
        }
    }

    /// The algebra named by `base` (default `group_algebra`).
    fn base(&self, field: Field) -> Result<HomHopfAlgebra> {
        match self.params.get("base").map_or("group_algebra", String::as_str) {
            "group_algebra" => {
                self.reject(&["k", "c"], "group_algebra")?;
                group_algebra(self.order()?, field)
            }
            "cyclic_twist" => {
                self.reject(&["c"], "cyclic_twist")?;
                self.cyclic(field)
            }
            "sweedler_twist" => {
                self.reject(&["n", "k"], "sweedler_twist")?;
                sweedler_twist(&self.rational("c", 1)?, field)
            }
            other => Err(Error::InvalidParameter(format!("unknown base {other:?}"))),
        }
    }

    fn reject(&self, keys: &[&str], base: &str) -> Result<()> {
        match keys.iter().find(|k| self.params.contains_key(**k)) {
            Some(k) => Err(Error::InvalidParameter(format!("base {base} does not take parameter {k:?}"))),
            None => Ok(()),
        }
    }

    /// Builds the instance; every output is certified by its verifier.
    pub fn build(&self) -> Result<Structure> {
        let field = self.field()?;
        self.seed()?;
        let graded = || -> Result<_> {
            let h = Arc::new(self.cyclic(field)?);
            let d = self.count("d", Some(0))?;
            graded_yd_over(&h, d, &self.scalar("chi", field)?)
        };
        let sweedler = || -> Result<_> {
            let h = Arc::new(sweedler_twist(&self.rational("c", 1)?, field)?);
            sweedler_yd_over(&h, self.sign()?)
        };
        let rep = Structure::from_representation;
        Ok(match self.name.as_str() {
            "group_algebra" => Structure::HomHopf(group_algebra(self.order()?, field)?),
            "cyclic_twist" => Structure::HomHopf(self.cyclic(field)?),
            "sweedler_twist" => Structure::HomHopf(sweedler_twist(&self.rational("c", 1)?, field)?),
            "regular_module" => rep(regular_module(&Arc::new(self.base(field)?))),
            "regular_comodule" => rep(regular_comodule(&Arc::new(self.base(field)?))),
            "trivial_yd" => Structure::Yd(trivial_yd(&Arc::new(self.base(field)?))),
            "adjoint_yd" => Structure::Yd(adjoint_yd(&Arc::new(self.base(field)?))?),
            "graded_yd" => Structure::Yd(graded()?),
            "sweedler_yd" => Structure::Yd(sweedler()?),
            "free_graded_yd" => rep(functor_f(&graded()?)?),
            "free_sweedler_yd" => rep(functor_f(&sweedler()?)?),
            "free_trivial_yd" => rep(functor_f(&trivial_yd(&Arc::new(self.base(field)?)))?),
            other => return Err(Error::InvalidParameter(format!("unknown catalog instance {other:?}"))),
        })
    }
}
