//! Dolbeault and de Rham cohomology of the Chevalley–Eilenberg double complex.

use std::collections::HashMap;

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exterior::{Basis, Form, Monomial, Scalar};
use crate::liealg::{RealStructureEquations, StructureEquations};
use crate::linalg::{Matrix, SubspaceBasis, Vector};

/// Cached d on every monomial of ⋀(ω, ω̄).
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    eqs: StructureEquations,
    d: HashMap<Monomial, Form>,
}

impl DoubleComplex {
    pub fn new(eqs: &StructureEquations) -> Result<Self> {
        eqs.check_integrability()?;
        let n = eqs.n();
        let mut d = HashMap::new();
        for k in 0..=2 * n {
            for m in Basis::total(n, k).monomials() {
                d.insert(*m, eqs.differential(&Form::monomial(n, *m, Scalar::one())));
            }
        }
        Ok(DoubleComplex { eqs: eqs.clone(), d })
    }

    pub fn equations(&self) -> &StructureEquations {
        &self.eqs
    }

    pub fn n(&self) -> usize {
        self.eqs.n()
    }

    pub fn d_monomial(&self, m: &Monomial) -> &Form {
        &self.d[m]
    }

    fn matrix(&self, from: &Basis, to: &Basis, keep: impl Fn(&Monomial) -> bool) -> Matrix {
        let cols: Vec<Vector> = from
            .monomials()
            .iter()
            .map(|m| {
                let image = Form::from_terms(
                    self.n(),
                    self.d[m].terms().filter(|(mm, _)| keep(mm)).map(|(mm, c)| (*mm, c.clone())),
                );
                to.coordinates(&image).expect("image lies in the target basis")
            })
            .collect();
        Matrix::from_columns(to.len(), &cols)
    }

    /// ∂̄: ⋀^{p,q} → ⋀^{p,q+1}
    pub fn delbar_matrix(&self, p: usize, q: usize) -> Matrix {
        let n = self.n();
        self.matrix(&Basis::bidegree(n, p, q), &Basis::bidegree(n, p, q + 1), |m| m.bidegree() == (p, q + 1))
    }

    /// ∂: ⋀^{p,q} → ⋀^{p+1,q}
    pub fn del_matrix(&self, p: usize, q: usize) -> Matrix {
        let n = self.n();
        self.matrix(&Basis::bidegree(n, p, q), &Basis::bidegree(n, p + 1, q), |m| m.bidegree() == (p + 1, q))
    }

    /// d: A^k → A^{k+1} in the total-degree bases.
    pub fn d_matrix(&self, k: usize) -> Matrix {
        let n = self.n();
        self.matrix(&Basis::total(n, k), &Basis::total(n, k + 1), |_| true)
    }
}

/// A cohomology space with canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub dim: usize,
    pub representatives: Vec<Form>,
}

fn quotient(kernel: &SubspaceBasis, image: &SubspaceBasis, basis: &Basis) -> CohomologyGroup {
    let reps = kernel.quotient_representatives(image);
    CohomologyGroup { dim: reps.dim(), representatives: reps.rows().iter().map(|r| basis.form(r)).collect() }
}

impl DoubleComplex {
    pub fn dolbeault(&self, p: usize, q: usize) -> CohomologyGroup {
        let n = self.n();
        let kernel = self.delbar_matrix(p, q).kernel();
        let image = if q == 0 {
            SubspaceBasis::zero(kernel.ambient())
        } else {
            self.delbar_matrix(p, q - 1).image()
        };
        quotient(&kernel, &image, &Basis::bidegree(n, p, q))
    }

    pub fn de_rham(&self, k: usize) -> CohomologyGroup {
        let n = self.n();
        let kernel = self.d_matrix(k).kernel();
        let image = if k == 0 { SubspaceBasis::zero(1) } else { self.d_matrix(k - 1).image() };
        quotient(&kernel, &image, &Basis::total(n, k))
    }

    pub fn hodge_table(&self) -> HodgeTable {
        let n = self.n();
        let hodge = (0..=n).map(|p| (0..=n).map(|q| self.dolbeault(p, q).dim).collect()).collect();
        let betti = (0..=2 * n).map(|k| self.de_rham(k).dim).collect();
        HodgeTable { hodge, betti }
    }
}

/// h^{p,q} indexed `hodge[p][q]`, and Betti numbers b_0..b_{2n}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeTable {
    pub hodge: Vec<Vec<usize>>,
    pub betti: Vec<usize>,
}

impl HodgeTable {
    /// Σ_{p+q=k} h^{p,q}
    pub fn total(&self, k: usize) -> usize {
        let n = self.hodge.len() - 1;
        (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| self.hodge[p][k - p]).sum()
    }

    /// Rows of the Hodge diamond from degree 0 to 2n, each listed by increasing p.
    pub fn diamond(&self) -> Vec<Vec<usize>> {
        let n = self.hodge.len() - 1;
        (0..=2 * n)
            .map(|k| (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| self.hodge[p][k - p]).collect())
            .collect()
    }
}

pub fn dolbeault(eqs: &StructureEquations, p: usize, q: usize) -> Result<CohomologyGroup> {
    Ok(DoubleComplex::new(eqs)?.dolbeault(p, q))
}

pub fn de_rham(eqs: &StructureEquations, k: usize) -> Result<CohomologyGroup> {
    Ok(DoubleComplex::new(eqs)?.de_rham(k))
}

pub fn hodge_table(eqs: &StructureEquations) -> Result<HodgeTable> {
    Ok(DoubleComplex::new(eqs)?.hodge_table())
}

/// Betti numbers of a real Lie algebra.
pub fn betti_numbers(real: &RealStructureEquations) -> Vec<usize> {
    (0..=real.dim()).map(|k| real.coalgebra().betti(k)).collect()
}
