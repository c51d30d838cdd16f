use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{
    apply_perturbation, parse_instance_params, InstanceDescriptor, PerturbationStream, Structure, FAMILIES,
};
use crate::covmonoidal::{hexagons_bicov, tensor_over_h, verify_braiding_bicov};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Subspace};
use crate::homcore::{yau_twist, VerificationReport};
use crate::homrep::{coinvariants_left, coinvariants_right, projector_left, projector_right, HomRepresentation};
use crate::yd::{
    functor_f, verify_braided_equivalence, verify_phi2, verify_phi2_coherence, verify_round_trips, verify_yd_braiding,
    yd_hexagons, YDModule,
};

use super::format::{emit_structure, parse_matrix_file, parse_structure};
use super::report::{digest, ReportFile};

#[derive(Parser, Debug)]
#[command(name = "homhopf", version, about = "Exact checks for monoidal Hom-Hopf algebras and their bimodules")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Ground field: `q` or `fp:<p>`. For file inputs it must match the file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Seed recorded in reports and used by `fuzz`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    pub out: OutFormat,
    /// Treat skipped checks as failures.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Category {
    Bicov,
    Yd,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the verifier matching the file's kind.
    Verify { path: PathBuf },
    /// Yau twist of a classical Hom-Hopf algebra by a bialgebra automorphism.
    Twist {
        path: PathBuf,
        #[arg(long)]
        aut: PathBuf,
    },
    /// Coinvariants of a covariant bimodule and the projection onto them.
    Coinv {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Tensor product over H of two covariant bimodules.
    TensorH { a: PathBuf, b: PathBuf },
    /// Braiding checks and both hexagons (the third object defaults to the first).
    BraidCheck {
        a: PathBuf,
        b: PathBuf,
        c: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Category::Bicov)]
        category: Category,
    },
    /// Yetter-Drinfel'd verification.
    YdCheck { path: PathBuf },
    /// The braided equivalence between YD modules and bicovariant bimodules on (V, W).
    EquivalenceCheck { v: PathBuf, w: PathBuf },
    /// Catalog instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Perturbation fuzzing of a catalog instance.
    Fuzz {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        /// Instance parameters, `key=value`.
        params: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Emit {
        name: String,
        /// Instance parameters, `key=value`.
        params: Vec<String>,
    },
}

/// What a command produced: exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Input and shape problems are operational (exit 2); everything else is a
/// mathematical failure (exit 1).
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Shape(_) | Error::InvalidParameter(_) | Error::Missing(_) => 2,
        _ => 1,
    }
}

/// Parses arguments and runs one command without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let ctx = Ctx { opts: cli.global.clone() };
    match ctx.dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Ctx {
    opts: GlobalOpts,
}

struct Loaded {
    structure: Structure,
    bytes: Vec<u8>,
}

impl Ctx {
    fn flag_field(&self) -> Result<Option<Field>> {
        self.opts.field.as_deref().map(Field::parse_spec).transpose()
    }

    fn load(&self, path: &Path) -> Result<Loaded> {
        let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let text = std::str::from_utf8(&bytes).map_err(|_| Error::Parse(format!("{}: not UTF-8", path.display())))?;
        let structure = parse_structure(text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            Error::Shape(m) => Error::Shape(format!("{}: {m}", path.display())),
            other => other,
        })?;
        if let Some(f) = self.flag_field()? {
            if f != structure.field() {
                return Err(Error::InvalidParameter(format!(
                    "--field {f} does not match {} in {}",
                    structure.field(),
                    path.display()
                )));
            }
        }
        Ok(Loaded { structure, bytes })
    }

    fn report(&self, command: &str, inputs: &[&Loaded]) -> ReportFile {
        let bytes: Vec<&[u8]> = inputs.iter().map(|l| l.bytes.as_slice()).collect();
        let field = inputs.first().map_or_else(
            || self.flag_field().ok().flatten().unwrap_or(Field::Rational).to_string(),
            |l| l.structure.field().to_string(),
        );
        ReportFile::new(command, digest(&bytes), field, self.opts.seed, self.opts.strict)
    }

    fn render(&self, r: &ReportFile) -> Outcome {
        let stdout = match self.opts.out {
            OutFormat::Json => r.to_json(),
            OutFormat::Text => r.to_text(),
        };
        Outcome { code: if r.passed() { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn dispatch(&self, cmd: &Command) -> Result<Outcome> {
        match cmd {
            Command::Verify { path } => self.verify(path),
            Command::Twist { path, aut } => self.twist(path, aut),
            Command::Coinv { path, side } => self.coinv(path, *side),
            Command::TensorH { a, b } => self.tensor_h(a, b),
            Command::BraidCheck { a, b, c, category } => self.braid_check(a, b, c.as_deref(), *category),
            Command::YdCheck { path } => self.yd_check(path),
            Command::EquivalenceCheck { v, w } => self.equivalence(v, w),
            Command::Catalog { action: CatalogAction::List } => Ok(self.catalog_list()),
            Command::Catalog { action: CatalogAction::Emit { name, params } } => self.catalog_emit(name, params),
            Command::Fuzz { family, trials, params } => self.fuzz(family, *trials, params),
        }
    }

    fn verify(&self, path: &Path) -> Result<Outcome> {
        let l = self.load(path)?;
        let mut r = self.report("verify", &[&l]);
        r.detail("kind", json!(l.structure.kind().as_str()));
        r.add("", &l.structure.verify()?);
        Ok(self.render(&r))
    }

    /// Verifies an input under `prefix`; returns whether it passed.
    fn check_input(&self, r: &mut ReportFile, prefix: &str, s: &Structure) -> Result<bool> {
        let v = s.verify()?;
        r.add(prefix, &v);
        Ok(v.passed())
    }

    fn twist(&self, path: &Path, aut: &Path) -> Result<Outcome> {
        let l = self.load(path)?;
        let Structure::HomHopf(h) = &l.structure else {
            return Err(Error::InvalidParameter(format!("twist needs a hom_hopf file, got {}", l.structure.kind())));
        };
        let aut_bytes = std::fs::read(aut).map_err(|e| Error::Parse(format!("{}: {e}", aut.display())))?;
        let text = std::str::from_utf8(&aut_bytes).map_err(|_| Error::Parse(format!("{}: not UTF-8", aut.display())))?;
        let (field, m) = parse_matrix_file(text)?;
        if field != h.field() {
            return Err(Error::InvalidParameter(format!("automorphism over {field}, algebra over {}", h.field())));
        }
        let mut r = self.report("twist", &[&l]);
        if !self.check_input(&mut r, "input", &l.structure)? {
            return Ok(self.render(&r));
        }
        match yau_twist(h, &m) {
            Ok(t) => {
                let s = Structure::HomHopf(t);
                Ok(Outcome { code: 0, stdout: emit_structure(&s), stderr: format!("twisted: dim {}\n", s.dim()) })
            }
            Err(e) if exit_code(&e) == 1 => {
                let mut v = VerificationReport::new();
                v.expect("automorphism", false, &e.to_string());
                r.add("twist", &v);
                Ok(self.render(&r))
            }
            Err(e) => Err(e),
        }
    }

    fn representation(&self, l: &Loaded) -> Result<HomRepresentation> {
        match &l.structure {
            Structure::Representation(_, m) => Ok(m.clone().certify()),
            other => Err(Error::InvalidParameter(format!("expected a covariant bimodule file, got {}", other.kind()))),
        }
    }

    fn yd_module(&self, l: &Loaded) -> Result<YDModule> {
        match &l.structure {
            Structure::Yd(v) => Ok(v.clone().certify()),
            other => Err(Error::InvalidParameter(format!("expected a yd file, got {}", other.kind()))),
        }
    }

    fn coinv(&self, path: &Path, side: SideArg) -> Result<Outcome> {
        let l = self.load(path)?;
        let m = self.representation(&l)?;
        let mut r = self.report("coinv", &[&l]);
        if !self.check_input(&mut r, "input", &l.structure)? {
            return Ok(self.render(&r));
        }
        let covariant = match side {
            SideArg::Left => m.flags().is_left_covariant,
            SideArg::Right => m.flags().is_right_covariant,
        };
        if !covariant {
            let mut v = VerificationReport::new();
            v.expect("covariant", false, "input is not covariant on this side");
            r.add("input", &v);
            return Ok(self.render(&r));
        }
        let (space, p) = match side {
            SideArg::Left => (coinvariants_left(&m)?, projector_left(&m)?),
            SideArg::Right => (coinvariants_right(&m)?, projector_right(&m)?),
        };
        let mut v = VerificationReport::new();
        v.compare("projector_idempotent", &p.mul(&p), &p, &[m.dim]);
        v.expect("image_is_coinvariants", Subspace::column_space(&p) == space, "");
        r.add("coinvariants", &v);
        r.detail("side", json!(if side == SideArg::Left { "left" } else { "right" }));
        r.detail("coinvariants_dim", json!(space.dim()));
        r.detail("coinvariants_basis", vectors(space.basis()));
        Ok(self.render(&r))
    }

    fn tensor_h(&self, a: &Path, b: &Path) -> Result<Outcome> {
        let (la, lb) = (self.load(a)?, self.load(b)?);
        let (ma, mb) = (self.representation(&la)?, self.representation(&lb)?);
        let mut r = self.report("tensor-h", &[&la, &lb]);
        let ok_a = self.check_input(&mut r, "left_input", &la.structure)?;
        let ok_b = self.check_input(&mut r, "right_input", &lb.structure)?;
        if !(ok_a && ok_b) {
            return Ok(self.render(&r));
        }
        let t = tensor_over_h(&ma, &mb)?;
        let s = Structure::from_representation(t.structure.clone());
        let stderr = format!(
            "dims: left {} right {} ambient {} quotient {}\n",
            ma.dim,
            mb.dim,
            ma.dim * mb.dim,
            t.dim()
        );
        Ok(Outcome { code: 0, stdout: emit_structure(&s), stderr })
    }

    fn braid_check(&self, a: &Path, b: &Path, c: Option<&Path>, cat: Category) -> Result<Outcome> {
        let la = self.load(a)?;
        let lb = self.load(b)?;
        let lc = c.map(|p| self.load(p)).transpose()?;
        let mut inputs = vec![&la, &lb];
        inputs.extend(lc.as_ref());
        let mut r = self.report("braid-check", &inputs);
        let mut ok = true;
        for (i, l) in inputs.iter().enumerate() {
            ok &= self.check_input(&mut r, &format!("input_{i}"), &l.structure)?;
        }
        if !ok {
            return Ok(self.render(&r));
        }
        let third = lc.as_ref().unwrap_or(&la);
        match cat {
            Category::Bicov => {
                let (m, n, p) = (self.representation(&la)?, self.representation(&lb)?, self.representation(third)?);
                r.add("", &verify_braiding_bicov(&m, &n)?);
                r.add("", &hexagons_bicov(&m, &n, &p)?);
            }
            Category::Yd => {
                let (m, n, p) = (self.yd_module(&la)?, self.yd_module(&lb)?, self.yd_module(third)?);
                r.add("", &verify_yd_braiding(&m, &n)?);
                r.add("", &yd_hexagons(&m, &n, &p)?);
            }
        }
        Ok(self.render(&r))
    }

    fn yd_check(&self, path: &Path) -> Result<Outcome> {
        let l = self.load(path)?;
        self.yd_module(&l)?;
        let mut r = self.report("yd-check", &[&l]);
        r.add("", &l.structure.verify()?);
        Ok(self.render(&r))
    }

    fn equivalence(&self, v: &Path, w: &Path) -> Result<Outcome> {
        let (lv, lw) = (self.load(v)?, self.load(w)?);
        let (yv, yw) = (self.yd_module(&lv)?, self.yd_module(&lw)?);
        let mut r = self.report("equivalence-check", &[&lv, &lw]);
        let ok_v = self.check_input(&mut r, "input_v", &lv.structure)?;
        let ok_w = self.check_input(&mut r, "input_w", &lw.structure)?;
        if !(ok_v && ok_w) {
            return Ok(self.render(&r));
        }
        r.add("phi2", &verify_phi2(&yv, &yw)?);
        r.add("phi2", &verify_phi2_coherence(&yv, &yw, &yv)?);
        r.add("", &verify_braided_equivalence(&yv, &yw)?);
        r.add("round_trip", &verify_round_trips(&yv, &functor_f(&yw)?)?);
        Ok(self.render(&r))
    }

    fn catalog_list(&self) -> Outcome {
        let mut out = String::new();
        for f in FAMILIES {
            out.push_str(&format!("{:<18} {:<10} [{}]  {}\n", f.name, f.kind.as_str(), f.params.join(" "), f.about));
        }
        Outcome { code: 0, stdout: out, stderr: String::new() }
    }

    fn descriptor(&self, name: &str, params: &[String]) -> Result<InstanceDescriptor> {
        let mut p = parse_instance_params(&params.join(" "))?;
        if let Some(f) = &self.opts.field {
            let flag = Field::parse_spec(f)?;
            match p.get("field") {
                Some(g) if Field::parse_spec(g)? != flag => {
                    return Err(Error::InvalidParameter(format!("--field {flag} conflicts with field={g}")));
                }
                _ => {
                    p.insert("field".into(), f.clone());
                }
            }
        }
        InstanceDescriptor::new(name, p)
    }

    fn catalog_emit(&self, name: &str, params: &[String]) -> Result<Outcome> {
        let d = self.descriptor(name, params)?;
        let s = d.build()?;
        Ok(Outcome { code: 0, stdout: emit_structure(&s), stderr: String::new() })
    }

    fn fuzz(&self, family: &str, trials: usize, params: &[String]) -> Result<Outcome> {
        let d = self.descriptor(family, params)?;
        let base = d.build()?;
        let seed = self.opts.seed.unwrap_or(0);
        let text = d.to_string();
        let mut r = ReportFile::new("fuzz", digest(&[text.as_bytes()]), base.field().to_string(), Some(seed), self.opts.strict);
        r.detail("instance", json!(text));
        let mut rows = Vec::with_capacity(trials);
        let mut v = VerificationReport::new();
        for (i, p) in PerturbationStream::new(&base, seed).take(trials).enumerate() {
            let outcome = apply_perturbation(&base, &p).and_then(|s| s.verify());
            let (class, first) = match &outcome {
                Ok(rep) if rep.passed() => (0, None),
                Ok(rep) => (1, rep.failures().next().map(|c| c.name.clone())),
                Err(e) => (exit_code(e), Some(e.to_string())),
            };
            v.expect(&format!("trial_{i:04}"), class == 1, "perturbation not detected");
            rows.push(json!({
                "trial": i,
                "tensor": p.tensor,
                "index": p.index,
                "delta": p.delta.to_string(),
                "exit_class": class,
                "first_failure": first,
            }));
        }
        r.add("", &v);
        r.detail("trials", Value::Array(rows));
        Ok(self.render(&r))
    }
}

fn vectors(vs: &[Vec<crate::exactlin::Scalar>]) -> Value {
    Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(|s| json!(s.to_string())).collect())).collect())
}
