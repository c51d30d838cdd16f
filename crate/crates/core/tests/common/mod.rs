#![allow(dead_code)]

pub mod classical;

use std::sync::Arc;

use homhopf::catalog::{
    adjoint_yd, character_module, cyclic_twist, graded_yd_over, left_character_module, regular_module,
    sweedler_twist, sweedler_yd_over,
};
use homhopf::exactlin::{Field, Rational, Scalar};
use homhopf::homcore::{HomHopfAlgebra, VerificationReport};
use homhopf::homrep::{direct_sum, HomRepresentation};
use homhopf::yd::{trivial_yd, yd_direct_sum, YDModule};

pub const P: u64 = 10007;

pub fn fp() -> Field {
    Field::prime(P).unwrap()
}

pub fn fields() -> [Field; 2] {
    [Field::Rational, fp()]
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn sweedler_params() -> [Rational; 4] {
    [q(1, 1), q(2, 1), q(-1, 1), q(1, 2)]
}

/// What a catalog algebra was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic { n: usize, k: usize },
    Sweedler,
}

#[derive(Clone)]
pub struct Named {
    pub name: String,
    pub family: Family,
    pub h: Arc<HomHopfAlgebra>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// kC_n for n ≤ 6 with every twist g ↦ g^k, k coprime to n, then the
/// Sweedler twists c ∈ {1, 2, -1, 1/2}.
pub fn hopf_catalog(field: Field) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for k in (1..=n.max(1)).filter(|&k| gcd(k, n) == 1 && (k < n || n == 1)) {
            out.push(Named {
                name: format!("cyclic_twist n={n} k={k} over {field}"),
                family: Family::Cyclic { n, k },
                h: Arc::new(cyclic_twist(n, k, field).unwrap()),
            });
        }
    }
    for c in sweedler_params() {
        out.push(Named {
            name: format!("sweedler_twist c={c} over {field}"),
            family: Family::Sweedler,
            h: Arc::new(sweedler_twist(&c, field).unwrap()),
        });
    }
    out
}

/// Algebras of dimension at most 4 used for the heavier categorical checks.
pub fn small_hopf(field: Field) -> Vec<Named> {
    let cyc = |n, k| Named {
        name: format!("cyclic_twist n={n} k={k} over {field}"),
        family: Family::Cyclic { n, k },
        h: Arc::new(cyclic_twist(n, k, field).unwrap()),
    };
    let sw = |c: Rational| Named {
        name: format!("sweedler_twist c={c} over {field}"),
        family: Family::Sweedler,
        h: Arc::new(sweedler_twist(&c, field).unwrap()),
    };
    vec![cyc(2, 1), cyc(3, 2), cyc(4, 3), sw(q(2, 1)), sw(q(-1, 1))]
}

/// n-th roots of unity of the field.
pub fn roots_of_unity(n: usize, field: Field) -> Vec<Scalar> {
    match field {
        Field::Rational => {
            let mut r = vec![field.one()];
            if n.is_multiple_of(2) {
                r.push(field.int(-1));
            }
            r
        }
        _ => (1..field.characteristic() as i64).map(|x| field.int(x)).filter(|x| x.pow(n as u32).is_one()).collect(),
    }
}

/// Trivial, graded or Sweedler one-dimensional modules, and the adjoint
/// module (μ = α) when dim H ≤ 4.
pub fn yd_catalog(a: &Named) -> Vec<(String, YDModule)> {
    let h = &a.h;
    let mut out = vec![("trivial".to_string(), trivial_yd(h))];
    match a.family {
        Family::Cyclic { n, .. } => {
            for d in 0..n {
                for chi in roots_of_unity(n, h.field()) {
                    if d == 0 && chi.is_one() {
                        continue;
                    }
                    if let Ok(v) = graded_yd_over(h, d, &chi) {
                        out.push((format!("graded d={d} chi={chi}"), v));
                    }
                }
            }
        }
        Family::Sweedler => {
            for sign in [1, -1] {
                out.push((format!("sweedler sign={sign}"), sweedler_yd_over(h, sign).unwrap()));
            }
        }
    }
    if h.dim() <= 4 {
        out.push(("adjoint".to_string(), adjoint_yd(h).unwrap()));
    }
    out
}

/// YD modules of dimension at most 3, including direct sums.
pub fn small_yd(a: &Named) -> Vec<(String, YDModule)> {
    let base: Vec<_> = yd_catalog(a).into_iter().filter(|(_, v)| v.dim <= 3).collect();
    let mut out = base.clone();
    if base.len() >= 2 {
        let (n0, v0) = &base[0];
        let (n1, v1) = &base[base.len() - 1];
        if v0.dim + v1.dim <= 3 {
            out.push((format!("{n0} + {n1}"), yd_direct_sum(v0, v1).unwrap().0.certify()));
        }
    }
    out
}

/// Candidate characters: the counit, and for cyclic algebras g ↦ ζ with
/// ζ^n = 1, kept when the resulting module verifies.
fn characters(a: &Named) -> Vec<Vec<Scalar>> {
    let h = &a.h;
    let f = h.field();
    let mut out = vec![h.counit().row(0).to_vec()];
    if let Family::Cyclic { n, .. } = a.family {
        for z in roots_of_unity(n, f).into_iter().filter(|z| !z.is_one()) {
            out.push((0..n).map(|i| z.pow(i as u32)).collect());
        }
    }
    if a.family == Family::Sweedler {
        out.push(vec![f.one(), f.int(-1), f.zero(), f.zero()]);
    }
    out
}

/// Right Hom-modules of dimension at most 3: characters, a sum of two
/// characters, and H itself when dim H ≤ 3.
pub fn right_modules(a: &Named) -> Vec<(String, HomRepresentation)> {
    modules(a, true)
}

pub fn left_modules(a: &Named) -> Vec<(String, HomRepresentation)> {
    modules(a, false)
}

fn modules(a: &Named, right: bool) -> Vec<(String, HomRepresentation)> {
    use homhopf::homrep::{verify_module, Side};
    let h = &a.h;
    let side = if right { Side::Right } else { Side::Left };
    let mut out = Vec::new();
    for (i, ch) in characters(a).into_iter().enumerate() {
        let m = if right { character_module(h, &ch) } else { left_character_module(h, &ch) };
        if let Ok(m) = m {
            if verify_module(&m, side).unwrap().passed() {
                out.push((format!("character {i}"), m));
            }
        }
    }
    if out.len() >= 2 {
        let s = direct_sum(&out[0].1, &out[1].1).unwrap().0.certify();
        out.push(("character 0 + 1".into(), s));
    }
    if h.dim() <= 3 {
        out.push(("regular".into(), regular_module(h)));
    }
    out
}

pub fn failure_names(r: &VerificationReport) -> Vec<String> {
    r.failures().map(|c| c.name.clone()).collect()
}

#[track_caller]
pub fn assert_passes(r: &VerificationReport, what: &str) {
    assert!(r.passed(), "{what}: failing checks {:?}", failure_names(r));
}

/// Accumulates check counts and failures for one acceptance criterion.
#[derive(Default)]
pub struct Tally {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn report(&mut self, ctx: &str, r: &VerificationReport) {
        self.checks += r.checks.len();
        for c in r.failures() {
            let at = c.witness.as_ref().map(|w| format!(" at {:?}", w.tuple)).unwrap_or_default();
            self.failures.push(format!("{ctx}: {}{at}", c.name));
        }
    }

    pub fn strict(&mut self, ctx: &str, r: &VerificationReport) {
        self.report(ctx, r);
        for c in r.checks.iter().filter(|c| c.status == homhopf::homcore::Status::Skipped) {
            self.failures.push(format!("{ctx}: {} skipped", c.name));
        }
    }

    pub fn expect(&mut self, ctx: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(ctx.to_string());
        }
    }
}
