mod common;

use common::{assert_passes, failure_names, fields, q};
use homhopf::catalog::{cyclic_twist, group_algebra, power_map, sweedler, sweedler_scaling, sweedler_twist};
use homhopf::exactlin::{Field, Matrix, Scalar};
use homhopf::homcore::{
    adjoint_left_map, adjoint_right_map, convolution, verify_adjoint_left_module_algebra,
    verify_adjoint_right_module_algebra, verify_hom_algebra, verify_hom_coalgebra, verify_hom_hopf, yau_twist,
    HomAlgebra, HomCoalgebra, HomHopfAlgebra, Status,
};

/// Column `j` of a map, i.e. the image of `e_j`.
fn image(m: &Matrix, j: usize) -> Vec<Scalar> {
    m.column(j)
}

/// `mul(e_i, e_j)` read entrywise.
fn product(h: &HomHopfAlgebra, i: usize, j: usize) -> Vec<Scalar> {
    image(h.mul(), i * h.dim() + j)
}

fn unit_vector(f: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

fn first_witness(r: &homhopf::homcore::VerificationReport, name: &str) -> Option<Vec<usize>> {
    r.checks.iter().find(|c| c.name == name && c.status == Status::Fail).and_then(|c| c.witness.as_ref()).map(|w| w.tuple.clone())
}

#[test]
fn classical_group_algebra_passes() {
    for f in fields() {
        for n in 1..=6 {
            assert_passes(&verify_hom_hopf(&group_algebra(n, f).unwrap()), &format!("kC_{n} over {f}"));
        }
    }
}

#[test]
fn cyclic_twist_table_matches_group_law() {
    // m̃(g^i, g^j) = α(g^{i+j}) = g^{k(i+j) mod n}
    for (n, k) in [(3, 2), (5, 2), (5, 3), (6, 5)] {
        let h = cyclic_twist(n, k, Field::Rational).unwrap();
        assert_passes(&verify_hom_hopf(&h), &format!("cyclic_twist({n}, {k})"));
        for i in 0..n {
            for j in 0..n {
                let want = unit_vector(h.field(), n, (k * (i + j)) % n);
                assert_eq!(product(&h, i, j), want, "({n},{k}) g^{i} g^{j}");
            }
        }
    }
}

#[test]
fn perturbed_multiplication_breaks_hom_associativity() {
    let h = cyclic_twist(3, 2, Field::Rational).unwrap();
    let mut mul = h.mul().clone();
    let e = mul.get(1, 0).clone();
    mul.set(1, 0, &e + &Field::Rational.one());
    let a = HomAlgebra::new(mul, h.unit().clone(), h.alpha().clone()).unwrap();
    let r = verify_hom_algebra(&a);
    assert!(failure_names(&r).contains(&"hom_associativity".to_string()));
    let w = first_witness(&r, "hom_associativity").expect("witness");
    assert_eq!(w.len(), 3);
}

#[test]
fn coalgebra_examples() {
    let f = Field::Rational;
    let kc2 = group_algebra(2, f).unwrap();
    let c = HomCoalgebra::new(kc2.comul().clone(), kc2.counit().clone(), Matrix::identity(f, 2)).unwrap();
    assert_passes(&verify_hom_coalgebra(&c), "kC2 coalgebra");
    let t = cyclic_twist(3, 2, f).unwrap();
    let c = HomCoalgebra::new(t.comul().clone(), t.counit().clone(), t.alpha().clone()).unwrap();
    assert_passes(&verify_hom_coalgebra(&c), "twisted kC3 coalgebra");
    let zero = HomCoalgebra::new(t.comul().clone(), Matrix::zeros(f, 1, 3), t.alpha().clone()).unwrap();
    let fails = failure_names(&verify_hom_coalgebra(&zero));
    assert!(fails.contains(&"weak_counit_right".to_string()) && fails.contains(&"weak_counit_left".to_string()));
}

#[test]
fn sweedler_twists_pass() {
    for f in fields() {
        for c in common::sweedler_params() {
            assert_passes(&verify_hom_hopf(&sweedler_twist(&c, f).unwrap()), &format!("sweedler c={c} over {f}"));
        }
    }
}

#[test]
fn flipped_antipode_breaks_convolution() {
    let h = sweedler_twist(&q(2, 1), Field::Rational).unwrap();
    let mut s = h.antipode.clone();
    // basis 1, g, x, gx: flip the sign of S(x)
    for r in 0..4 {
        let v = -s.get(r, 2).clone();
        s.set(r, 2, v);
    }
    let bad = HomHopfAlgebra::new(h.bialgebra.clone(), s).unwrap();
    let fails = failure_names(&verify_hom_hopf(&bad));
    assert!(fails.contains(&"convolution_left".to_string()) && fails.contains(&"convolution_right".to_string()));
}

#[test]
fn yau_twist_by_identity_is_identity() {
    let h = group_algebra(4, Field::Rational).unwrap();
    assert_eq!(yau_twist(&h, &Matrix::identity(Field::Rational, 4)).unwrap(), h);
}

#[test]
fn yau_twist_of_kc3() {
    let f = Field::Rational;
    let t = yau_twist(&group_algebra(3, f).unwrap(), &power_map(3, 2, f)).unwrap();
    assert_eq!(t, cyclic_twist(3, 2, f).unwrap());
    assert_eq!(product(&t, 1, 1), unit_vector(f, 3, 1));
}

#[test]
fn yau_twist_of_sweedler() {
    let f = Field::Rational;
    let t = yau_twist(&sweedler(f).unwrap(), &sweedler_scaling(&f.int(2))).unwrap();
    assert_passes(&verify_hom_hopf(&t), "sweedler twisted by x -> 2x");
    assert!(!t.alpha().is_identity());
    // m̃(x, g) = α(xg) = α(-gx) = -2gx
    assert_eq!(product(&t, 2, 1), vec![f.zero(), f.zero(), f.zero(), f.int(-2)]);
}

#[test]
fn yau_twist_rejects_non_automorphism() {
    let f = Field::Rational;
    let mut bad = Matrix::identity(f, 3);
    bad.set(0, 1, f.one());
    assert!(yau_twist(&group_algebra(3, f).unwrap(), &bad).is_err());
}

/// `(S(h_1)α^{-1}(g))α(h_2)` expanded with loops over structure constants.
fn adjoint_right_oracle(h: &HomHopfAlgebra, g: usize, k: usize) -> Vec<Scalar> {
    let d = h.dim();
    let f = h.field();
    let (s, ai, al) = (&h.antipode, h.alpha_inv().unwrap(), h.alpha());
    let dk = image(h.comul(), k);
    let mut out = vec![f.zero(); d];
    for (p, c) in dk.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (k1, k2) = (p / d, p % d);
        for a in 0..d {
            let sa = s.get(a, k1);
            for b in 0..d {
                let gb = ai.get(b, g);
                for e in 0..d {
                    let ae = al.get(e, k2);
                    let coeff = &(&(c * sa) * gb) * ae;
                    if coeff.is_zero() {
                        continue;
                    }
                    // (e_a e_b) e_e
                    let ab = product(h, a, b);
                    for (t, x) in ab.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        let abe = product(h, t, e);
                        for (o, y) in abe.iter().enumerate() {
                            out[o].add_mul(&(&coeff * x), y);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn adjoint_right_unit_is_alpha() {
    for f in fields() {
        for h in [sweedler_twist(&q(2, 1), f).unwrap(), cyclic_twist(5, 3, f).unwrap()] {
            let ad = adjoint_right_map(&h).unwrap();
            let d = h.dim();
            for g in 0..d {
                // g ◁ 1_H = α(g)
                assert_eq!(image(&ad, g * d), image(h.alpha(), g));
            }
        }
    }
}

#[test]
fn adjoint_right_on_commutative_twist() {
    // commutative: (S(h_1)α^{-1}(g))α(h_2) = ε(h)α(g)
    let h = cyclic_twist(3, 2, Field::Rational).unwrap();
    let ad = adjoint_right_map(&h).unwrap();
    for g in 0..3 {
        for k in 0..3 {
            assert_eq!(image(&ad, g * 3 + k), image(h.alpha(), g), "g^{g} ◁ g^{k}");
        }
    }
}

#[test]
fn adjoint_right_matches_expansion_on_sweedler() {
    for c in common::sweedler_params() {
        let h = sweedler_twist(&c, Field::Rational).unwrap();
        let ad = adjoint_right_map(&h).unwrap();
        for g in 0..4 {
            for k in 0..4 {
                assert_eq!(image(&ad, g * 4 + k), adjoint_right_oracle(&h, g, k), "c={c} e{g} ◁ e{k}");
            }
        }
    }
    // x ◁ g for c = 2, frozen from the expansion
    let h = sweedler_twist(&q(2, 1), Field::Rational).unwrap();
    let ad = adjoint_right_map(&h).unwrap();
    let f = Field::Rational;
    assert_eq!(image(&ad, 2 * 4 + 1), vec![f.zero(), f.zero(), f.int(-2), f.zero()]);
}

#[test]
fn adjoint_left_unit_and_commutative_case() {
    let f = Field::Rational;
    let h = sweedler_twist(&q(-1, 1), f).unwrap();
    let ad = adjoint_left_map(&h).unwrap();
    for g in 0..4 {
        // 1_H ▷ g = α(g); input order h ⊗ g
        assert_eq!(image(&ad, g), image(h.alpha(), g));
    }
    let kc2 = group_algebra(2, f).unwrap();
    let ad = adjoint_left_map(&kc2).unwrap();
    for k in 0..2 {
        for g in 0..2 {
            assert_eq!(image(&ad, k * 2 + g), image(kc2.alpha(), g));
        }
    }
}

#[test]
fn adjoint_module_algebra_laws() {
    for f in fields() {
        for h in [sweedler_twist(&q(1, 2), f).unwrap(), cyclic_twist(6, 5, f).unwrap()] {
            assert_passes(&verify_adjoint_right_module_algebra(&h).unwrap(), "ad_R");
            assert_passes(&verify_adjoint_left_module_algebra(&h).unwrap(), "ad_L");
        }
    }
}

#[test]
fn perturbed_antipode_breaks_adjoint_module_law() {
    use homhopf::homrep::{verify_module, HomRepresentation, Side};
    use std::sync::Arc;
    let f = Field::Rational;
    let h = sweedler_twist(&q(2, 1), f).unwrap();
    let mut s = h.antipode.clone();
    let e = s.get(3, 2).clone();
    s.set(3, 2, &e + &f.one());
    let bad = Arc::new(HomHopfAlgebra::new(h.bialgebra.clone(), s).unwrap());
    let m = HomRepresentation::new(bad.clone(), bad.alpha().clone())
        .unwrap()
        .with_right_action(adjoint_right_map(&bad).unwrap())
        .unwrap();
    let r = verify_module(&m, Side::Right).unwrap();
    let failed: Vec<_> = r.failures().filter(|c| c.witness.is_some()).map(|c| c.name.clone()).collect();
    assert!(!failed.is_empty(), "{:?}", failure_names(&r));
}

#[test]
fn convolution_identities() {
    let f = Field::Rational;
    let h = sweedler_twist(&q(2, 1), f).unwrap();
    let id = Matrix::identity(f, 4);
    assert_eq!(convolution(&h.antipode, &id, &h), h.unit_counit());
    // on kC_2 every basis element is group-like, so (id ∗ id)(g^i) = g^{2i} = 1
    let kc2 = group_algebra(2, f).unwrap();
    let sq = convolution(&Matrix::identity(f, 2), &Matrix::identity(f, 2), &kc2);
    assert_eq!(sq, Matrix::from_ints(f, &[&[1, 1], &[0, 0]]));
}

#[test]
fn sweedler_antipode_has_order_four() {
    let f = Field::Rational;
    let h = sweedler_twist(&q(2, 1), f).unwrap();
    let s = &h.antipode;
    assert!(!s.mul(s).is_identity());
    assert!(s.pow(4).is_identity());
    let si = h.antipode_inv().unwrap();
    assert!(s.mul(si).is_identity());
}
