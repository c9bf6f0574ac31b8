//! E_2 from the explicit description in terms of ∂ and ∂̄, checked against
//! the filtration computation.

use nilcomplex::classify::{corpus, Family, ThreeStepTriple};
use nilcomplex::cohomology::DoubleComplex;
use nilcomplex::exterior::{rat, Basis};
use nilcomplex::linalg::SubspaceBasis;
use nilcomplex::spectral::FrolicherSequence;

/// E_2^{p,q} = {α : ∂̄α = 0, ∂α ∈ ∂̄A^{p+1,q-1}} / (∂̄A^{p,q-1} + ∂ ker ∂̄|A^{p-1,q})
fn e2_dim(dc: &DoubleComplex, p: usize, q: usize) -> usize {
    let n = dc.n();
    let ambient = Basis::bidegree(n, p, q).len();
    let closed = dc.delbar_matrix(p, q).kernel();
    let z = if p < n {
        let target_dim = Basis::bidegree(n, p + 1, q).len();
        let exact_above = if q > 0 { dc.delbar_matrix(p + 1, q - 1).image() } else { SubspaceBasis::zero(target_dim) };
        closed.intersect(&dc.del_matrix(p, q).preimage(&exact_above))
    } else {
        closed
    };
    let mut b = if q > 0 { dc.delbar_matrix(p, q - 1).image() } else { SubspaceBasis::zero(ambient) };
    if p > 0 {
        let closed_left = dc.delbar_matrix(p - 1, q).kernel();
        b = b.sum(&dc.del_matrix(p - 1, q).image_of(&closed_left));
    }
    assert!(b.is_subspace_of(&z));
    z.dim() - b.dim()
}

#[test]
fn second_page_matches_on_corpus() {
    for (f, _) in corpus() {
        let eqs = f.equations().unwrap();
        let seq = FrolicherSequence::new(&eqs).unwrap();
        let dc = DoubleComplex::new(&eqs).unwrap();
        for p in 0..=3 {
            for q in 0..=3 {
                assert_eq!(e2_dim(&dc, p, q), seq.dim(2, p, q).unwrap(), "{f} E2^{{{p},{q}}}");
            }
        }
    }
}

#[test]
fn d2_on_the_class_of_w2b3b_is_nonzero() {
    let f = Family::ThreeStep(ThreeStepTriple::new(1, "4".parse().unwrap(), rat(1, 2)).unwrap());
    let seq = FrolicherSequence::new(&f.equations().unwrap()).unwrap();
    assert_eq!(seq.dim(2, 0, 2).unwrap(), 2);
    assert!(seq.dr_map(2, 0, 2).unwrap().rank() > 0);
    // large r: filtration exhausted
    for p in 0..=3 {
        for q in 0..=3 {
            assert!(seq.dr_map(4, p, q).unwrap().is_zero());
        }
    }
}
