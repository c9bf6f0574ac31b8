use nilcomplex::classify::*;
use num::Zero;
use nilcomplex::exterior::{rat, rat_int, Rational, Scalar};
use AlgebraClass::*;

fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

fn two(rho: u8, lambda: Rational, d: &str) -> Family {
    Family::TwoStep(TwoStepTriple::new(rho, lambda, q(d)).unwrap())
}

fn three(rho: u8, b: &str, c: Rational) -> Family {
    Family::ThreeStep(ThreeStepTriple::new(rho, q(b), c).unwrap())
}

fn samples() -> Vec<(Family, AlgebraClass)> {
    vec![
        (Family::General(GeneralNilpotentParams::parallelizable(0)), H1),
        (Family::General(GeneralNilpotentParams::parallelizable(1)), H5),
        (two(0, rat_int(0), "i"), H2),
        (two(0, rat_int(0), "1+2i"), H2),
        (two(0, rat_int(1), "i"), H2),
        (two(0, rat_int(0), "1"), H3),
        (two(0, rat_int(0), "-2"), H3),
        (two(0, rat_int(0), "0"), H8),
        (two(0, rat_int(1), "1/2i"), H4),
        (two(0, rat_int(1), "-2+3/2i"), H4),
        (two(0, rat_int(1), "0"), H5),
        (two(0, rat_int(1), "1/8"), H5),
        (two(1, rat_int(1), "i"), H2),
        (two(1, rat_int(0), "i"), H2),
        (two(1, rat_int(1), "1"), H4),
        (two(1, rat_int(0), "1/2i"), H4),
        (two(1, rat_int(0), "0"), H5),
        (two(1, rat_int(0), "1"), H5),
        (two(1, rat(1, 2), "1/8i"), H5),
        (two(1, rat_int(1), "0"), H6),
        (two(1, rat_int(1), "-1"), H4),
        (three(1, "1", rat_int(0)), H7),
        (three(0, "1", rat_int(1)), H9),
        (three(0, "i", rat_int(1)), H9),
        (three(0, "0", rat_int(1)), H15),
        (three(0, "1", rat_int(2)), H15),
        (three(1, "0", rat_int(1)), H10),
        (three(1, "2", rat_int(1)), H11),
        (three(1, "1/2", rat(1, 2)), H11),
        (three(1, "1+i", rat_int(1)), H12),
        (three(1, "1+2i", rat_int(2)), H12),
        (three(1, "1", rat_int(1)), H13),
        (three(1, "i", rat_int(1)), H13),
        (three(1, "1", rat_int(2)), H14),
        (three(1, "i", rat_int(2)), H14),
        (three(1, "1", rat_int(3)), H15),
        (three(1, "0", rat_int(3)), H15),
        (three(1, "0", rat_int(0)), H15),
        (three(1, "-1", rat_int(0)), H16),
        (three(1, "i", rat_int(0)), H16),
        (Family::NonNilpotent(NonNilpotentParams { eps: 0, positive: true }), H19Minus),
        (Family::NonNilpotent(NonNilpotentParams { eps: 0, positive: false }), H19Minus),
        (Family::NonNilpotent(NonNilpotentParams { eps: 1, positive: true }), H26Plus),
        (Family::NonNilpotent(NonNilpotentParams { eps: 1, positive: false }), H26Plus),
    ]
}

#[test]
fn fingerprints_separate_all_classes() {
    let table = fingerprint_table();
    assert_eq!(table.len(), 18);
    for (i, (a, fa)) in table.iter().enumerate() {
        for (b, fb) in &table[i + 1..] {
            assert_ne!(fa, fb, "{a} and {b} share a fingerprint");
        }
    }
}

#[test]
fn family_decisions_agree_with_invariants() {
    for (f, expected) in samples() {
        assert_eq!(classify(&f).unwrap(), expected, "{f}");
        assert_eq!(classify_checked(&f).unwrap(), expected, "{f}");
    }
}

#[test]
fn every_class_is_sampled_twice() {
    let s = samples();
    for c in AlgebraClass::ALL {
        let hits = s.iter().filter(|(_, e)| *e == c).count();
        assert!(hits >= 1, "{c}");
        if c != H1 && c != H10 && c != H6 && c != H7 && c != H8 {
            assert!(hits >= 2, "{c}");
        }
    }
}

#[test]
fn general_family_reaches_three_step_classes() {
    let g = GeneralNilpotentParams { eps: 1, rho: 1, a: Scalar::zero(), b: q("1"), c: q("1"), d: Scalar::zero() };
    assert_eq!(classify(&Family::General(g)).unwrap(), H13);
    let g = GeneralNilpotentParams { eps: 0, rho: 1, a: q("1"), b: Scalar::zero(), c: Scalar::zero(), d: q("i") };
    assert_eq!(classify(&Family::General(g)).unwrap(), H2);
}

#[test]
fn salamon_strings_identify_themselves() {
    for c in AlgebraClass::ALL {
        let real = nilcomplex::liealg::RealStructureEquations::from_salamon(c.salamon()).unwrap();
        assert_eq!(identify_real(&real).unwrap(), c);
    }
}

#[test]
fn class_names_round_trip() {
    for c in AlgebraClass::ALL {
        assert_eq!(c.name().parse::<AlgebraClass>().unwrap(), c);
    }
    assert!("h17".parse::<AlgebraClass>().is_err());
}

#[test]
fn invalid_parameters_are_domain_errors() {
    assert!(TwoStepTriple::new(2, rat_int(0), q("0")).is_err());
    assert!(TwoStepTriple::new(1, rat_int(-1), q("0")).is_err());
    assert!(TwoStepTriple::new(1, rat_int(0), q("-i")).is_err());
    assert!(ThreeStepTriple::new(0, q("0"), rat_int(0)).is_err());
    assert!(ThreeStepTriple::new(1, q("0"), rat_int(-1)).is_err());
}

fn nonabelian(lambda: Rational, d: Scalar) -> TwoStepTriple {
    TwoStepTriple::new(1, lambda, d).unwrap()
}

/// Rational grid points where the transfer square root is rational.
fn transferable() -> Vec<(TwoStepTriple, TwoStepTriple)> {
    let mut out = Vec::new();
    let lambdas = [rat_int(0), rat(1, 2), rat_int(1), rat(3, 2), rat_int(2)];
    let parts = [rat_int(-1), rat(-1, 2), rat_int(0), rat(1, 4), rat(1, 2), rat_int(1), rat(3, 2)];
    for l in &lambdas {
        for t in &lambdas {
            if l == t {
                continue;
            }
            for x in &parts {
                for y in &parts {
                    if y.numer() < &0.into() || (x.numer() == &0.into() && y.numer() == &0.into()) {
                        continue;
                    }
                    let d = Scalar::new(x.clone(), y.clone());
                    if let Ok(Some(e)) = transfer_target(l, &d, t) {
                        out.push((nonabelian(l.clone(), d), nonabelian(t.clone(), e)));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn transfer_targets_are_equivalent_and_witnessed() {
    let pairs = transferable();
    assert!(pairs.len() >= 20, "only {} rational transfers", pairs.len());
    let mut witnessed = 0;
    for (a, b) in &pairs {
        assert_eq!(a.d.norm_sqr(), b.d.norm_sqr());
        assert!(equivalent_2step(a, b).unwrap());
        assert!(equivalent_2step(b, a).unwrap(), "symmetry {a:?} {b:?}");
        assert_eq!(classify_2step(a).unwrap(), classify_2step(b).unwrap());
        match automorphism_witness(a, b) {
            Ok(w) => {
                assert!(w.verify(a, b).unwrap());
                witnessed += 1;
            }
            Err(nilcomplex::Error::Unsupported(_)) => {}
            Err(e) => panic!("{a:?} -> {b:?}: {e}"),
        }
    }
    assert!(witnessed * 2 >= pairs.len(), "{witnessed} of {}", pairs.len());
}

#[test]
fn same_lambda_means_same_d() {
    let a = nonabelian(rat_int(1), q("i"));
    assert!(equivalent_2step(&a, &a).unwrap());
    assert!(!equivalent_2step(&a, &nonabelian(rat_int(1), q("1"))).unwrap());
    assert!(!equivalent_2step(&a, &nonabelian(rat_int(1), q("2i"))).unwrap());
    assert_eq!(automorphism_witness(&a, &a).unwrap(), Witness::identity());
}

#[test]
fn equivalence_is_only_for_nonabelian_structures() {
    let a = TwoStepTriple::new(0, rat_int(0), q("i")).unwrap();
    assert!(equivalent_2step(&a, &a).is_err());
}

#[test]
fn h5_family_two_member() {
    // λ = 1/2, D = 5/32 i transfers to λ = 0 with a rational square root
    let a = nonabelian(rat(1, 2), q("5/32i"));
    assert_eq!(classify_2step(&a).unwrap(), H5);
    let e = transfer_target(&a.lambda, &a.d, &rat_int(0)).unwrap().unwrap();
    let b = nonabelian(rat_int(0), e.clone());
    assert_eq!(e.norm_sqr(), rat(25, 1024));
    assert!(rat_int(4) * e.im() * e.im() < rat_int(1) + rat_int(4) * e.re());
    let w = automorphism_witness(&a, &b).unwrap();
    assert!(w.verify(&a, &b).unwrap());
}

#[test]
fn canonical_forms_keep_the_class() {
    for (f, expected) in samples() {
        match canonical_form(&f) {
            Ok(c) => assert_eq!(classify_checked(&c).unwrap(), expected, "{f} -> {c}"),
            Err(nilcomplex::Error::Unrepresentable(_)) => {}
            Err(e) => panic!("{f}: {e}"),
        }
    }
}

#[test]
fn canonical_forms_of_nonabelian_h2_h4_have_lambda_one() {
    for d in ["i", "1/2i"] {
        let f = two(1, rat_int(0), d);
        if let Ok(Family::TwoStep(t)) = canonical_form(&f) {
            assert_eq!(t.lambda, rat_int(1));
        }
    }
    let f = two(1, rat_int(0), "1/2i");
    let Family::TwoStep(t) = canonical_form(&f).unwrap() else { panic!() };
    assert_eq!(t.lambda, rat_int(1));
    assert_eq!(classify_2step(&t).unwrap(), H4);
}

#[test]
fn abelian_canonical_forms() {
    let Family::TwoStep(t) = canonical_form(&two(0, rat_int(2), "4i")).unwrap() else { panic!() };
    assert_eq!((t.lambda, t.d), (rat_int(1), q("i")));
    let Family::ThreeStep(t) = canonical_form(&three(0, "3/5+4/5i", rat_int(2))).unwrap() else { panic!() };
    assert_eq!((t.b, t.c), (q("1"), rat_int(2)));
}
