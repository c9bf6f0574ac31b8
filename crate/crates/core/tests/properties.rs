use nilcomplex::classify::*;
use nilcomplex::cohomology::hodge_table;
use nilcomplex::hermitian::sg_implies_e2;
use nilcomplex::spectral::FrolicherSequence;
use proptest::prelude::*;

mod common;
use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn d_is_an_antiderivation(eqs in corpus_structure(), (k, a) in graded_form(), b in form(2)) {
        check_derivation(&eqs, k, &a, &b)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn metric_implications_two_step(f in two_step(), p in metric()) { check_implications(&f, &p)?; }

    #[test]
    fn metric_implications_three_step(f in three_step(), p in metric()) { check_implications(&f, &p)?; }

    #[test]
    fn metric_implications_non_nilpotent(f in non_nilpotent(), p in metric()) { check_implications(&f, &p)?; }

    #[test]
    fn metric_implications_general(f in general(), p in metric()) { check_implications(&f, &p)?; }
}

#[test]
fn e1_is_dolbeault_and_e_infinity_is_de_rham() {
    for (f, _) in corpus() {
        let eqs = f.equations().unwrap();
        let seq = FrolicherSequence::new(&eqs).unwrap();
        let t = hodge_table(&eqs).unwrap();
        assert_eq!(seq.dims(1).unwrap(), t.hodge, "{f}");
        let inf = seq.dims(seq.infinity()).unwrap();
        for k in 0..=6 {
            let total: usize = (0..=3).filter(|&p| k >= p && k - p <= 3).map(|p| inf[p][k - p]).sum();
            assert_eq!(total, t.betti[k], "{f} degree {k}");
        }
    }
}

#[test]
fn pages_are_cohomology_of_the_previous_differential() {
    for (f, _) in corpus() {
        let seq = FrolicherSequence::new(&f.equations().unwrap()).unwrap();
        for r in 1..4 {
            for p in 0..=3usize {
                for q in 0..=3usize {
                    let out = seq.dr_map(r, p, q).unwrap().rank();
                    let incoming = if p >= r && q + r <= 4 { seq.dr_map(r, p - r, q + r - 1).unwrap().rank() } else { 0 };
                    assert_eq!(seq.dim(r + 1, p, q).unwrap(), seq.dim(r, p, q).unwrap() - out - incoming, "{f} E{}^{{{p},{q}}}", r + 1);
                    // d_r ∘ d_r = 0
                    if p + r <= 3 && q + 1 >= r {
                        let second = seq.dr_map(r, p + r, q + 1 - r).unwrap();
                        assert!(second.mul(&seq.dr_map(r, p, q).unwrap()).is_zero());
                    }
                }
            }
        }
        seq.verify().unwrap();
    }
}

#[test]
fn sg_structures_degenerate_by_the_second_page() {
    let fams: Vec<Family> = corpus().into_iter().map(|(f, _)| f).collect();
    let rows = sg_implies_e2(&fams).unwrap();
    assert_eq!(rows.len(), fams.len());
    for r in &rows {
        if r.sg_exists {
            assert!(r.step <= 2, "{r:?}");
        }
    }
    assert!(rows.iter().any(|r| r.sg_exists) && rows.iter().any(|r| !r.sg_exists));
}
