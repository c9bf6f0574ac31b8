//! Strategies shared by the property suites and the acceptance run.
#![allow(dead_code)]

use nilcomplex::classify::*;
use nilcomplex::exterior::{rat, Basis, Form, Scalar};
use nilcomplex::hermitian::{metric_flags, HermitianParams, Positivity};
use nilcomplex::liealg::StructureEquations;
use proptest::prelude::*;

pub fn gauss() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, q)| Scalar::gauss(a, q, b, q))
}

pub fn positive_rational() -> impl Strategy<Value = num::BigRational> {
    (1i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Homogeneous k-form on 3 generators with up to four terms.
pub fn form(k: usize) -> impl Strategy<Value = Form> {
    let monos = Basis::total(3, k).monomials().to_vec();
    let len = monos.len();
    prop::collection::vec((0..len, gauss()), 1..=4)
        .prop_map(move |terms| Form::from_terms(3, terms.into_iter().map(|(i, c)| (monos[i], c))))
}

pub fn two_step() -> impl Strategy<Value = Family> {
    (0u8..=1, 0i64..=3, 1i64..=2, gauss()).prop_filter_map("outside the family", |(rho, l, q, d)| {
        let d = if d.im() < &num::Zero::zero() { d.conj() } else { d };
        TwoStepTriple::new(rho, rat(l, q), d).ok().map(Family::TwoStep)
    })
}

pub fn three_step() -> impl Strategy<Value = Family> {
    (0u8..=1, gauss(), 0i64..=4, 1i64..=2)
        .prop_filter_map("outside the family", |(rho, b, c, q)| ThreeStepTriple::new(rho, b, rat(c, q)).ok().map(Family::ThreeStep))
}

pub fn non_nilpotent() -> impl Strategy<Value = Family> {
    (0u8..=1, any::<bool>()).prop_map(|(eps, positive)| Family::NonNilpotent(NonNilpotentParams { eps, positive }))
}

pub fn general() -> impl Strategy<Value = Family> {
    (0u8..=1, 0u8..=1, gauss(), gauss(), gauss(), gauss()).prop_filter_map("outside the family", |(eps, rho, a, b, c, d)| {
        let p = GeneralNilpotentParams { eps, rho, a, b, c, d };
        p.validate().ok().map(|_| Family::General(p))
    })
}

pub fn metric() -> impl Strategy<Value = HermitianParams> {
    (positive_rational(), positive_rational(), positive_rational(), gauss(), gauss(), gauss())
        .prop_map(|(r2, s2, t2, u, v, z)| HermitianParams { r2, s2, t2, u, v, z })
        .prop_filter("not positive definite", |p| p.positivity() == Positivity::Positive)
}

pub fn corpus_structure() -> impl Strategy<Value = StructureEquations> {
    let eqs: Vec<StructureEquations> = corpus().into_iter().map(|(f, _)| f.equations().unwrap()).collect();
    (0..eqs.len()).prop_map(move |i| eqs[i].clone())
}

pub fn check_implications(f: &Family, p: &HermitianParams) -> Result<(), TestCaseError> {
    let flags = metric_flags(&f.equations().unwrap(), p).unwrap();
    prop_assert!(!flags.balanced || flags.strongly_gauduchon, "{f}: balanced but not sG");
    prop_assert!(!flags.strongly_gauduchon || flags.gauduchon, "{f}: sG but not Gauduchon");
    if f.is_abelian() {
        prop_assert_eq!(flags.strongly_gauduchon, flags.balanced, "{}: abelian sG differs from balanced", f);
    }
    let scaled = metric_flags(&f.equations().unwrap(), &p.scaled(&rat(7, 3))).unwrap();
    prop_assert_eq!(scaled, flags);
    Ok(())
}


/// d(a∧b) = da∧b + (-1)^k a∧db and d²a = 0 for a k-form `a`.
pub fn check_derivation(eqs: &StructureEquations, k: usize, a: &Form, b: &Form) -> Result<(), TestCaseError> {
    let d = |f: &Form| eqs.differential(f);
    let sign = if k % 2 == 0 { Scalar::from_int(1) } else { Scalar::from_int(-1) };
    let rhs = &d(a).wedge(b) + &a.wedge(&d(b)).scale(&sign);
    prop_assert_eq!(d(&a.wedge(b)), rhs);
    prop_assert!(d(&d(a)).is_zero());
    Ok(())
}

/// A k-form together with its degree.
pub fn graded_form() -> impl Strategy<Value = (usize, Form)> {
    (0usize..=4).prop_flat_map(|k| (Just(k), form(k)))
}
