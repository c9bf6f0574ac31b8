use nilcomplex::classify::*;
use nilcomplex::exterior::{rat, rat_int, Rational, Scalar};
use nilcomplex::hermitian::*;
use num::Zero;

fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

fn two(rho: u8, lambda: Rational, d: &str) -> Family {
    Family::TwoStep(TwoStepTriple::new(rho, lambda, q(d)).unwrap())
}

fn h19(positive: bool) -> Family {
    Family::NonNilpotent(NonNilpotentParams { eps: 0, positive })
}

#[test]
fn omega_is_real() {
    let p = HermitianParams { u: q("1/3-i"), v: q("2i"), z: q("-1/2+1/5i"), ..HermitianParams::standard() };
    let w = build_omega(&p);
    assert!(w.is_real());
    assert_eq!(w.conjugate(), w);
}

#[test]
fn positivity_examples() {
    assert_eq!(HermitianParams::standard().positivity(), Positivity::Positive);
    let p = HermitianParams { u: q("2"), ..HermitianParams::standard() };
    assert_eq!(p.positivity(), Positivity::Indefinite);
    let p = HermitianParams::diagonal(rat_int(1), rat_int(0), rat_int(1));
    assert_eq!(p.positivity(), Positivity::Degenerate);
    let p = HermitianParams { u: q("1"), ..HermitianParams::standard() };
    assert_eq!(p.positivity(), Positivity::Degenerate);
}

#[test]
fn top_power_vanishes_exactly_when_degenerate() {
    for p in [
        HermitianParams { u: q("1"), ..HermitianParams::standard() },
        HermitianParams::standard(),
        HermitianParams { u: q("i"), v: q("1"), z: q("1"), ..HermitianParams::standard() },
    ] {
        let w = build_omega(&p);
        let top = w.wedge(&w).wedge(&w);
        assert_eq!(top.is_zero(), p.determinant().is_zero(), "{p:?}");
    }
}

#[test]
fn non_positive_metric_is_rejected() {
    let eqs = two(1, rat_int(1), "0").equations().unwrap();
    let p = HermitianParams { u: q("2"), ..HermitianParams::standard() };
    assert!(matches!(metric_flags(&eqs, &p), Err(nilcomplex::Error::NotPositive)));
}

#[test]
fn h19_sample_metrics() {
    for sign in [true, false] {
        let eqs = h19(sign).equations().unwrap();
        let f = metric_flags(&eqs, &h19_sample_metric(rat_int(0), rat_int(0))).unwrap();
        assert!(f.balanced);
        let f = metric_flags(&eqs, &h19_sample_metric(rat_int(0), rat(1, 2))).unwrap();
        assert!(f.strongly_gauduchon && !f.balanced, "sign {sign}");
        let f = metric_flags(&eqs, &h19_sample_metric(rat_int(1), rat(1, 2))).unwrap();
        assert!(!f.strongly_gauduchon, "sign {sign}");
        let f = metric_flags(&eqs, &h19_sample_metric(rat(-2, 3), rat_int(0))).unwrap();
        assert!(!f.strongly_gauduchon, "sign {sign}");
    }
}

#[test]
fn h26_has_no_sg_metric() {
    let f = Family::NonNilpotent(NonNilpotentParams { eps: 1, positive: true });
    let eqs = f.equations().unwrap();
    for p in [HermitianParams::standard(), h19_sample_metric(rat_int(0), rat_int(1))] {
        assert!(!metric_flags(&eqs, &p).unwrap().strongly_gauduchon);
    }
    assert!(!sg_exists(&f).unwrap().exists);
}

#[test]
fn nonabelian_two_step_metrics_are_all_sg() {
    let metrics = [
        HermitianParams::standard(),
        HermitianParams { u: q("1/2+1/3i"), v: q("-1/4"), z: q("1/5i"), ..HermitianParams::diagonal(rat_int(2), rat_int(1), rat_int(3)) },
    ];
    for f in [two(1, rat_int(1), "i"), two(1, rat_int(1), "1"), two(1, rat_int(0), "0"), two(1, rat_int(1), "0")] {
        let eqs = f.equations().unwrap();
        for p in &metrics {
            assert!(metric_flags(&eqs, p).unwrap().strongly_gauduchon, "{f}");
        }
    }
}

#[test]
fn abelian_sg_matches_balanced() {
    let metrics = [
        HermitianParams::standard(),
        HermitianParams { u: q("1/2"), ..HermitianParams::diagonal(rat_int(1), rat(1, 2), rat_int(1)) },
        HermitianParams::diagonal(rat_int(1), rat_int(1), rat_int(3)),
    ];
    for f in [two(0, rat_int(0), "-1"), two(0, rat_int(0), "1"), two(0, rat_int(1), "i"), two(0, rat_int(1), "0")] {
        let eqs = f.equations().unwrap();
        for p in &metrics {
            let flags = metric_flags(&eqs, p).unwrap();
            assert_eq!(flags.balanced, flags.strongly_gauduchon, "{f} {p:?}");
        }
    }
}

#[test]
fn balanced_existence_table() {
    let cases = [
        (two(1, rat_int(1), "2/5i"), true),
        (two(1, rat_int(1), "1/2i"), false),
        (two(1, rat_int(1), "1/5"), true),
        (two(1, rat_int(1), "1/4"), false),
        (two(1, rat_int(2), "3/4"), true),
        (two(1, rat_int(0), "-1/8"), true),
        (two(1, rat_int(0), "0"), false),
        (two(1, rat_int(0), "1/8i"), false),
        (two(1, rat_int(1), "0"), true),
        (two(0, rat_int(0), "-1"), true),
        (two(0, rat_int(0), "1"), false),
        (two(0, rat_int(1), "1/4"), false),
        (two(0, rat_int(1), "0"), true),
        (h19(true), true),
        (Family::ThreeStep(ThreeStepTriple::new(1, q("1"), rat_int(1)).unwrap()), false),
        (Family::General(GeneralNilpotentParams::parallelizable(1)), true),
        (Family::General(GeneralNilpotentParams::parallelizable(0)), true),
    ];
    for (f, expected) in cases {
        let e = balanced_exists(&f).unwrap();
        assert_eq!(e.exists, expected, "{f}");
        assert_eq!(e.witness.is_some(), expected);
    }
}

#[test]
fn sg_existence_examples() {
    let h15 = Family::ThreeStep(ThreeStepTriple::new(1, q("1"), rat_int(3)).unwrap());
    assert!(!sg_exists(&h15).unwrap().exists);
    let h6 = sg_exists(&two(1, rat_int(1), "0")).unwrap();
    assert!(h6.exists);
    assert!(!sg_exists(&two(0, rat_int(1), "1/4")).unwrap().exists);
    // sG without balanced on h2
    let f = two(1, rat_int(1), "1/2i");
    assert!(sg_exists(&f).unwrap().exists && !balanced_exists(&f).unwrap().exists);
}

#[test]
fn class_rule() {
    use AlgebraClass::*;
    for c in AlgebraClass::ALL {
        assert_eq!(sg_exists_for_class(c), matches!(c, H1 | H2 | H3 | H4 | H5 | H6 | H19Minus));
    }
}

#[test]
fn sg_forces_early_degeneration() {
    let suite = vec![
        two(1, rat_int(0), "0"),
        two(1, rat_int(1), "0"),
        two(1, rat_int(1), "i"),
        two(0, rat_int(0), "-1"),
        h19(true),
        Family::ThreeStep(ThreeStepTriple::new(1, q("1"), rat_int(1)).unwrap()),
    ];
    let rows = sg_implies_e2(&suite).unwrap();
    assert!(rows.iter().all(|r| !r.violation), "{rows:?}");
    assert_eq!((rows[0].sg_exists, rows[0].step), (true, 2));
    assert_eq!((rows[1].sg_exists, rows[1].step), (true, 1));
}

#[test]
fn witnesses_are_positive() {
    for f in [two(1, rat_int(1), "1/5"), two(1, rat(1, 2), "1/16i"), two(0, rat_int(0), "-3")] {
        let w = balanced_exists(&f).unwrap().witness.unwrap();
        assert_eq!(w.positivity(), Positivity::Positive);
    }
}

#[test]
fn flags_are_scale_invariant() {
    let eqs = h19(false).equations().unwrap();
    let p = h19_sample_metric(rat_int(0), rat(1, 3));
    assert_eq!(metric_flags(&eqs, &p).unwrap(), metric_flags(&eqs, &p.scaled(&rat(7, 2))).unwrap());
    assert!(Scalar::zero().is_zero());
}
