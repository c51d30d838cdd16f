//! Classical (untwisted) Hopf, module, comodule, bicovariant and
//! Yetter-Drinfel'd laws, evaluated on basis elements with plain loops.
//! Only `Matrix::get` is used to read structure constants.

use std::collections::BTreeMap;

use homhopf::exactlin::{Field, Matrix, Scalar};
use homhopf::homcore::HomHopfAlgebra;
use homhopf::homrep::HomRepresentation;
use homhopf::yd::YDModule;

type V = Vec<Scalar>;

pub type Verdicts = BTreeMap<String, bool>;

fn zero(f: Field, n: usize) -> V {
    vec![f.zero(); n]
}

fn basis(f: Field, n: usize, i: usize) -> V {
    let mut v = zero(f, n);
    v[i] = f.one();
    v
}

fn axpy(acc: &mut V, a: &Scalar, x: &V) {
    for (t, s) in acc.iter_mut().zip(x) {
        *t = &*t + &(a * s);
    }
}

fn kron(x: &V, y: &V) -> V {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Σ x_i images[i].
fn lin(f: Field, x: &V, images: &[V], out: usize) -> V {
    let mut acc = zero(f, out);
    for (a, img) in x.iter().zip(images) {
        if !a.is_zero() {
            axpy(&mut acc, a, img);
        }
    }
    acc
}

/// (f ⊗ g)(x) for x in A⊗B given by the images of basis vectors.
fn lin2(f: Field, x: &V, fa: &[V], gb: &[V]) -> V {
    let (da, db) = (fa.len(), gb.len());
    let out = fa[0].len() * gb[0].len();
    let mut acc = zero(f, out);
    for i in 0..da {
        for j in 0..db {
            let a = &x[i * db + j];
            if !a.is_zero() {
                axpy(&mut acc, a, &kron(&fa[i], &gb[j]));
            }
        }
    }
    acc
}

/// Σ x_ij table[i][j] for a bilinear map given on basis pairs.
fn bil(f: Field, x: &V, y: &V, table: &[Vec<V>], out: usize) -> V {
    let mut acc = zero(f, out);
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if !b.is_zero() {
                axpy(&mut acc, &(a * b), &table[i][j]);
            }
        }
    }
    acc
}

/// Bilinear map applied to a tensor x in A⊗B.
fn bil_t(f: Field, x: &V, db: usize, table: &[Vec<V>], out: usize) -> V {
    let mut acc = zero(f, out);
    for (idx, a) in x.iter().enumerate() {
        if !a.is_zero() {
            axpy(&mut acc, a, &table[idx / db][idx % db]);
        }
    }
    acc
}

fn columns(m: &Matrix) -> Vec<V> {
    (0..m.cols()).map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).collect()).collect()
}

/// Binary map `out x (a*b)` as a table of images of basis pairs.
fn table(m: &Matrix, a: usize, b: usize) -> Vec<Vec<V>> {
    let cols = columns(m);
    (0..a).map(|i| (0..b).map(|j| cols[i * b + j].clone()).collect()).collect()
}

/// Classical Hopf algebra data read off the structure matrices.
pub struct Hopf {
    pub f: Field,
    pub d: usize,
    m: Vec<Vec<V>>,
    u: V,
    c: Vec<V>,
    e: Vec<Scalar>,
    s: Vec<V>,
}

impl Hopf {
    pub fn new(h: &HomHopfAlgebra) -> Self {
        let d = h.dim();
        Hopf {
            f: h.field(),
            d,
            m: table(h.mul(), d, d),
            u: columns(h.unit()).remove(0),
            c: columns(h.comul()),
            e: (0..d).map(|i| h.counit().get(0, i).clone()).collect(),
            s: columns(&h.antipode),
        }
    }

    fn b(&self, i: usize) -> V {
        basis(self.f, self.d, i)
    }

    fn mul(&self, x: &V, y: &V) -> V {
        bil(self.f, x, y, &self.m, self.d)
    }

    fn mul_t(&self, x: &V) -> V {
        bil_t(self.f, x, self.d, &self.m, self.d)
    }

    fn delta(&self, x: &V) -> V {
        lin(self.f, x, &self.c, self.d * self.d)
    }

    fn eps(&self, x: &V) -> Scalar {
        x.iter().zip(&self.e).fold(self.f.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    fn anti(&self, x: &V) -> V {
        lin(self.f, x, &self.s, self.d)
    }

    fn ids(&self) -> Vec<V> {
        (0..self.d).map(|i| self.b(i)).collect()
    }

    fn deltas(&self) -> Vec<V> {
        self.c.clone()
    }

    fn antis(&self) -> Vec<V> {
        self.s.clone()
    }

    fn for_pairs(&self, law: impl Fn(&V, &V) -> bool) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| law(&self.b(i), &self.b(j))))
    }

    fn for_all(&self, law: impl Fn(&V) -> bool) -> bool {
        (0..self.d).all(|i| law(&self.b(i)))
    }

    /// The classical reading of each named Hopf check.
    pub fn verdicts(&self) -> Verdicts {
        let f = self.f;
        let d = self.d;
        let one = &self.u;
        let mut out = Verdicts::new();
        let mut put = |name: &str, ok: bool| {
            out.insert(name.to_string(), ok);
        };
        for trivially in [
            "alpha_invertible",
            "alpha_multiplicative",
            "alpha_unital",
            "gamma_invertible",
            "gamma_comultiplicative",
            "gamma_counital",
            "same_automorphism",
            "antipode_commutes_alpha",
        ] {
            put(trivially, true);
        }
        put(
            "hom_associativity",
            (0..d).all(|k| self.for_pairs(|a, b| self.mul(&self.mul(a, b), &self.b(k)) == self.mul(a, &self.mul(b, &self.b(k))))),
        );
        put("weak_unit_left", self.for_all(|a| self.mul(one, a) == *a));
        put("weak_unit_right", self.for_all(|a| self.mul(a, one) == *a));
        let ids = self.ids();
        put(
            "hom_coassociativity",
            self.for_all(|a| {
                let da = self.delta(a);
                lin2(f, &da, &self.deltas(), &ids) == lin2(f, &da, &ids, &self.deltas())
            }),
        );
        let eps_id: Vec<V> = (0..d).map(|i| vec![self.e[i].clone()]).collect();
        put("weak_counit_right", self.for_all(|a| lin2(f, &self.delta(a), &ids, &eps_id) == *a));
        put("weak_counit_left", self.for_all(|a| lin2(f, &self.delta(a), &eps_id, &ids) == *a));
        // a1 ⊗ a211 ⊗ a212 ⊗ a22 against a11 ⊗ a12 ⊗ a21 ⊗ a22
        put(
            "coassociativity_reindexing",
            self.for_all(|a| {
                let two = lin2(f, &self.delta(a), &ids, &self.deltas());
                let d_id: Vec<V> =
                    (0..d * d).map(|ij| kron(&self.c[ij / d], &self.b(ij % d))).collect();
                let ids_sq: Vec<V> = (0..d * d).map(|ij| basis(f, d * d, ij)).collect();
                let lhs = lin2(f, &two, &ids, &d_id);
                let rhs = lin2(f, &two, &self.deltas(), &ids_sq);
                lhs == rhs
            }),
        );
        put(
            "comul_multiplicative",
            self.for_pairs(|a, b| {
                let (da, db) = (self.delta(a), self.delta(b));
                let mut prod = zero(f, d * d);
                for (x, ax) in da.iter().enumerate() {
                    for (y, by) in db.iter().enumerate() {
                        let w = ax * by;
                        if !w.is_zero() {
                            let l = self.mul(&self.b(x / d), &self.b(y / d));
                            let r = self.mul(&self.b(x % d), &self.b(y % d));
                            axpy(&mut prod, &w, &kron(&l, &r));
                        }
                    }
                }
                self.delta(&self.mul(a, b)) == prod
            }),
        );
        put("comul_unital", self.delta(one) == kron(one, one));
        put("counit_multiplicative", self.for_pairs(|a, b| self.eps(&self.mul(a, b)) == &self.eps(a) * &self.eps(b)));
        put("counit_unital", self.eps(one).is_one());
        let unit_eps = |a: &V| one.iter().map(|x| x * &self.eps(a)).collect::<V>();
        put(
            "convolution_left",
            self.for_all(|a| self.mul_t(&lin2(f, &self.delta(a), &self.antis(), &ids)) == unit_eps(a)),
        );
        put(
            "convolution_right",
            self.for_all(|a| self.mul_t(&lin2(f, &self.delta(a), &ids, &self.antis())) == unit_eps(a)),
        );
        put(
            "antipode_anti_multiplicative",
            self.for_pairs(|a, b| self.anti(&self.mul(a, b)) == self.mul(&self.anti(b), &self.anti(a))),
        );
        put("antipode_unital", self.anti(one) == *one);
        put(
            "antipode_anti_comultiplicative",
            self.for_all(|a| {
                let lhs = self.delta(&self.anti(a));
                let da = self.delta(a);
                let mut rhs = zero(f, d * d);
                for (x, w) in da.iter().enumerate() {
                    if !w.is_zero() {
                        axpy(&mut rhs, w, &kron(&self.s[x % d], &self.s[x / d]));
                    }
                }
                lhs == rhs
            }),
        );
        put("antipode_counital", self.for_all(|a| self.eps(&self.anti(a)) == self.eps(a)));
        out
    }
}

/// A classical representation: any subset of the four structure maps.
pub struct Rep<'a> {
    h: &'a Hopf,
    n: usize,
    left: Option<Vec<Vec<V>>>,
    right: Option<Vec<Vec<V>>>,
    rho: Option<Vec<V>>,
    sigma: Option<Vec<V>>,
}

impl<'a> Rep<'a> {
    pub fn new(h: &'a Hopf, m: &HomRepresentation) -> Self {
        let (n, d) = (m.dim, h.d);
        Rep {
            h,
            n,
            left: m.psi().ok().map(|x| table(x, d, n)),
            right: m.phi().ok().map(|x| table(x, n, d)),
            rho: m.rho().ok().map(columns),
            sigma: m.sigma().ok().map(columns),
        }
    }

    pub fn from_yd(h: &'a Hopf, v: &YDModule) -> Self {
        Rep {
            h,
            n: v.dim,
            left: None,
            right: Some(table(&v.action, v.dim, h.d)),
            rho: None,
            sigma: Some(columns(&v.coaction)),
        }
    }

    fn f(&self) -> Field {
        self.h.f
    }

    fn vb(&self, i: usize) -> V {
        basis(self.f(), self.n, i)
    }

    fn ids(&self) -> Vec<V> {
        (0..self.n).map(|i| self.vb(i)).collect()
    }

    fn hl(&self, x: &V, m: &V) -> V {
        bil(self.f(), x, m, self.left.as_ref().unwrap(), self.n)
    }

    fn hr(&self, m: &V, x: &V) -> V {
        bil(self.f(), m, x, self.right.as_ref().unwrap(), self.n)
    }

    fn rho(&self, m: &V) -> V {
        lin(self.f(), m, self.rho.as_ref().unwrap(), self.h.d * self.n)
    }

    fn sigma(&self, m: &V) -> V {
        lin(self.f(), m, self.sigma.as_ref().unwrap(), self.n * self.h.d)
    }

    fn all_mh(&self, law: impl Fn(&V, &V) -> bool) -> bool {
        (0..self.n).all(|i| (0..self.h.d).all(|j| law(&self.vb(i), &self.h.b(j))))
    }

    fn all_m(&self, law: impl Fn(&V) -> bool) -> bool {
        (0..self.n).all(|i| law(&self.vb(i)))
    }

    fn all_hmg(&self, law: impl Fn(&V, &V, &V) -> bool) -> bool {
        let d = self.h.d;
        (0..d).all(|a| (0..self.n).all(|i| (0..d).all(|b| law(&self.h.b(a), &self.vb(i), &self.h.b(b)))))
    }

    pub fn right_module(&self, out: &mut Verdicts) {
        let h = self.h;
        out.insert("mu_invertible".into(), true);
        out.insert(
            "right_action_associativity".into(),
            (0..h.d).all(|k| self.all_mh(|m, g| self.hr(m, &h.mul(g, &h.b(k))) == self.hr(&self.hr(m, g), &h.b(k)))),
        );
        out.insert("right_action_unit".into(), self.all_m(|m| self.hr(m, &h.u) == *m));
        out.insert("right_action_morphism".into(), true);
    }

    pub fn left_module(&self, out: &mut Verdicts) {
        let h = self.h;
        out.insert("mu_invertible".into(), true);
        out.insert(
            "left_action_associativity".into(),
            (0..h.d).all(|k| self.all_mh(|m, g| self.hl(&h.mul(&h.b(k), g), m) == self.hl(&h.b(k), &self.hl(g, m)))),
        );
        out.insert("left_action_unit".into(), self.all_m(|m| self.hl(&h.u, m) == *m));
        out.insert("left_action_morphism".into(), true);
    }

    pub fn right_comodule(&self, out: &mut Verdicts) {
        let (f, h) = (self.f(), self.h);
        let hid = h.ids();
        out.insert("mu_invertible".into(), true);
        out.insert(
            "right_coaction_coassociativity".into(),
            self.all_m(|m| {
                let s = self.sigma(m);
                lin2(f, &s, &self.ids(), &h.deltas()) == lin2(f, &s, self.sigma.as_ref().unwrap(), &hid)
            }),
        );
        let eps: Vec<V> = (0..h.d).map(|i| vec![h.e[i].clone()]).collect();
        out.insert("right_coaction_counit".into(), self.all_m(|m| lin2(f, &self.sigma(m), &self.ids(), &eps) == *m));
        out.insert("right_coaction_morphism".into(), true);
    }

    pub fn left_comodule(&self, out: &mut Verdicts) {
        let (f, h) = (self.f(), self.h);
        out.insert("mu_invertible".into(), true);
        out.insert(
            "left_coaction_coassociativity".into(),
            self.all_m(|m| {
                let r = self.rho(m);
                lin2(f, &r, &h.deltas(), &self.ids()) == lin2(f, &r, &h.ids(), self.rho.as_ref().unwrap())
            }),
        );
        let eps: Vec<V> = (0..h.d).map(|i| vec![h.e[i].clone()]).collect();
        out.insert("left_coaction_counit".into(), self.all_m(|m| lin2(f, &self.rho(m), &eps, &self.ids()) == *m));
        out.insert("left_coaction_morphism".into(), true);
    }

    /// H⊗M or M⊗H acted on componentwise.
    fn act_hm(&self, x: &V, hm: &V, g: &V) -> V {
        let (f, h, n) = (self.f(), self.h, self.n);
        let mut acc = zero(f, h.d * n);
        for (idx, w) in hm.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let (a, m) = (h.b(idx / n), self.vb(idx % n));
            let dx = h.delta(x);
            let dg = h.delta(g);
            for (p, wp) in dx.iter().enumerate() {
                for (q, wq) in dg.iter().enumerate() {
                    let c = &(w * wp) * wq;
                    if c.is_zero() {
                        continue;
                    }
                    let left = h.mul(&h.mul(&h.b(p / h.d), &a), &h.b(q / h.d));
                    let right = self.hr(&self.hl(&h.b(p % h.d), &m), &h.b(q % h.d));
                    axpy(&mut acc, &c, &kron(&left, &right));
                }
            }
        }
        acc
    }

    fn act_mh(&self, x: &V, mh: &V, g: &V) -> V {
        let (f, h, n) = (self.f(), self.h, self.n);
        let mut acc = zero(f, n * h.d);
        for (idx, w) in mh.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let (m, a) = (self.vb(idx / h.d), h.b(idx % h.d));
            let dx = h.delta(x);
            let dg = h.delta(g);
            for (p, wp) in dx.iter().enumerate() {
                for (q, wq) in dg.iter().enumerate() {
                    let c = &(w * wp) * wq;
                    if c.is_zero() {
                        continue;
                    }
                    let left = self.hr(&self.hl(&h.b(p / h.d), &m), &h.b(q / h.d));
                    let right = h.mul(&h.mul(&h.b(p % h.d), &a), &h.b(q % h.d));
                    axpy(&mut acc, &c, &kron(&left, &right));
                }
            }
        }
        acc
    }

    /// Bimodule, both comodules, both covariances and commuting coactions,
    /// keyed like `verify_bicovariant`.
    pub fn bicovariant(&self) -> Verdicts {
        let mut out = Verdicts::new();
        self.left_module(&mut out);
        self.right_module(&mut out);
        out.insert(
            "bimodule_compatibility".into(),
            self.all_hmg(|x, m, g| self.hr(&self.hl(x, m), g) == self.hl(x, &self.hr(m, g))),
        );
        self.left_comodule(&mut out);
        self.right_comodule(&mut out);
        out.insert(
            "left_covariance".into(),
            self.all_hmg(|x, m, g| self.rho(&self.hr(&self.hl(x, m), g)) == self.act_hm(x, &self.rho(m), g)),
        );
        out.insert(
            "right_covariance".into(),
            self.all_hmg(|x, m, g| self.sigma(&self.hr(&self.hl(x, m), g)) == self.act_mh(x, &self.sigma(m), g)),
        );
        let f = self.f();
        let hid = self.h.ids();
        out.insert(
            "hom_commutativity".into(),
            self.all_m(|m| {
                lin2(f, &self.rho(m), &hid, self.sigma.as_ref().unwrap())
                    == lin2(f, &self.sigma(m), self.rho.as_ref().unwrap(), &hid)
            }),
        );
        out
    }

    /// Right module, right comodule and the classical YD condition
    /// `v_(0)◁h_1 ⊗ v_(1)h_2 = (v◁h_2)_(0) ⊗ h_1(v◁h_2)_(1)`, keyed like `verify_yd`.
    pub fn yd(&self) -> Verdicts {
        let (f, h, n) = (self.f(), self.h, self.n);
        let mut module = Verdicts::new();
        self.right_module(&mut module);
        let mut comodule = Verdicts::new();
        self.right_comodule(&mut comodule);
        let laws_hold = module.values().chain(comodule.values()).all(|&b| b);
        let mut out: Verdicts = module.into_iter().map(|(k, v)| (format!("module/{k}"), v)).collect();
        out.extend(comodule.into_iter().map(|(k, v)| (format!("comodule/{k}"), v)));
        if !laws_hold {
            return out;
        }
        let yd = self.all_mh(|v, x| {
            let dx = h.delta(x);
            let sv = self.sigma(v);
            let mut lhs = zero(f, n * h.d);
            let mut rhs = zero(f, n * h.d);
            for (p, wp) in dx.iter().enumerate() {
                if wp.is_zero() {
                    continue;
                }
                let (h1, h2) = (h.b(p / h.d), h.b(p % h.d));
                for (q, wq) in sv.iter().enumerate() {
                    let c = wp * wq;
                    if !c.is_zero() {
                        let (v0, v1) = (self.vb(q / h.d), h.b(q % h.d));
                        axpy(&mut lhs, &c, &kron(&self.hr(&v0, &h1), &h.mul(&v1, &h2)));
                    }
                }
                let s = self.sigma(&self.hr(v, &h2));
                for (q, wq) in s.iter().enumerate() {
                    let c = wp * wq;
                    if !c.is_zero() {
                        let (v0, v1) = (self.vb(q / h.d), h.b(q % h.d));
                        axpy(&mut rhs, &c, &kron(&v0, &h.mul(&h1, &v1)));
                    }
                }
            }
            lhs == rhs
        });
        out.insert("yd_condition".into(), yd);
        out.insert("yd_condition_alt".into(), yd);
        out.insert("yd_forms_agree".into(), true);
        out
    }
}
