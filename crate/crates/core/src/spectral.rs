//! The Frölicher spectral sequence E_r^{p,q} ⇒ H_dR, computed from the
//! filtration F^p A^k = ⊕_{i≥p} ⋀^{i,k-i}.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::DoubleComplex;
use crate::error::{Error, Result};
use crate::exterior::{Basis, Form};
use crate::liealg::StructureEquations;
use crate::linalg::{Matrix, SubspaceBasis};

/// dim E_r^{p,q} indexed `[p][q]`.
pub type TermDims = Vec<Vec<usize>>;

#[derive(Clone, Debug)]
struct Term {
    z: SubspaceBasis,
    b: SubspaceBasis,
    reps: SubspaceBasis,
}

/// All pages E_0..E_{n+1} of the spectral sequence; E_{n+1} = E_∞.
#[derive(Clone, Debug)]
pub struct FrolicherSequence {
    dc: DoubleComplex,
    bases: Vec<Basis>,
    d: Vec<Matrix>,
    terms: HashMap<(usize, usize, usize), Term>,
}

struct Builder<'a> {
    n: i64,
    bases: &'a [Basis],
    d: &'a [Matrix],
    memo: HashMap<(i64, i64, i64), SubspaceBasis>,
}

impl Builder<'_> {
    fn dim(&self, k: i64) -> usize {
        if k < 0 || k > 2 * self.n {
            0
        } else {
            self.bases[k as usize].len()
        }
    }

    fn filtration(&self, p: i64, k: i64) -> SubspaceBasis {
        if k < 0 || k > 2 * self.n {
            return SubspaceBasis::zero(0);
        }
        let basis = &self.bases[k as usize];
        let idx = basis.monomials().iter().enumerate().filter(|(_, m)| m.bidegree().0 as i64 >= p).map(|(i, _)| i);
        SubspaceBasis::coordinate(basis.len(), idx)
    }

    /// Z_r^{p,k-p} = F^p A^k ∩ d^{-1}(F^{p+r} A^{k+1})
    fn z(&mut self, r: i64, p: i64, k: i64) -> SubspaceBasis {
        if let Some(s) = self.memo.get(&(r, p, k)) {
            return s.clone();
        }
        let out = if k < 0 || k > 2 * self.n {
            SubspaceBasis::zero(0)
        } else {
            let target = self.filtration(p + r, k + 1);
            self.filtration(p, k).intersect(&self.d[k as usize].preimage(&target))
        };
        self.memo.insert((r, p, k), out.clone());
        out
    }

    fn term(&mut self, r: i64, p: i64, q: i64) -> Term {
        let k = p + q;
        let z = self.z(r, p, k);
        let shifted = self.z(r - 1, p + 1, k);
        let boundary = if k >= 1 {
            let src = self.z(r - 1, p - r + 1, k - 1);
            self.d[(k - 1) as usize].image_of(&src)
        } else {
            SubspaceBasis::zero(self.dim(k))
        };
        let b = shifted.sum(&boundary).intersect(&z);
        let reps = z.quotient_representatives(&b);
        Term { z, b, reps }
    }
}

impl FrolicherSequence {
    pub fn new(eqs: &StructureEquations) -> Result<Self> {
        let dc = DoubleComplex::new(eqs)?;
        let n = eqs.n();
        let bases: Vec<Basis> = (0..=2 * n).map(|k| Basis::total(n, k)).collect();
        let mut d: Vec<Matrix> = (0..2 * n).map(|k| dc.d_matrix(k)).collect();
        d.push(Matrix::zeros(0, bases[2 * n].len()));
        let mut terms = HashMap::new();
        {
            let mut b = Builder { n: n as i64, bases: &bases, d: &d, memo: HashMap::new() };
            for r in 0..=n + 1 {
                for p in 0..=n {
                    for q in 0..=n {
                        let t = b.term(r as i64, p as i64, q as i64);
                        if t.reps.dim() != t.z.dim() - t.b.dim() {
                            return Err(Error::Alarm(format!("E_{r}^{{{p},{q}}}: quotient dimension mismatch")));
                        }
                        terms.insert((r, p, q), t);
                    }
                }
            }
        }
        Ok(FrolicherSequence { dc, bases, d, terms })
    }

    pub fn n(&self) -> usize {
        self.dc.n()
    }

    pub fn double_complex(&self) -> &DoubleComplex {
        &self.dc
    }

    /// Index of the page equal to E_∞.
    pub fn infinity(&self) -> usize {
        self.n() + 1
    }

    fn check_page(&self, r: usize) -> Result<()> {
        if r > self.infinity() {
            return Err(Error::Domain(format!("page {r} beyond E_{} = E_∞", self.infinity())));
        }
        Ok(())
    }

    pub fn dim(&self, r: usize, p: usize, q: usize) -> Result<usize> {
        self.check_page(r)?;
        Ok(self.terms.get(&(r, p, q)).map(|t| t.reps.dim()).unwrap_or(0))
    }

    pub fn dims(&self, r: usize) -> Result<TermDims> {
        let n = self.n();
        (0..=n).map(|p| (0..=n).map(|q| self.dim(r, p, q)).collect()).collect()
    }

    /// Representatives of E_r^{p,q} as forms in F^p A^{p+q}.
    pub fn representatives(&self, r: usize, p: usize, q: usize) -> Result<Vec<Form>> {
        self.check_page(r)?;
        let Some(t) = self.terms.get(&(r, p, q)) else { return Ok(Vec::new()) };
        Ok(t.reps.rows().iter().map(|v| self.bases[p + q].form(v)).collect())
    }

    /// Matrix of d_r: E_r^{p,q} → E_r^{p+r,q-r+1} in the canonical representatives.
    pub fn dr_map(&self, r: usize, p: usize, q: usize) -> Result<Matrix> {
        self.check_page(r)?;
        let n = self.n();
        let src = &self.terms[&(r, p, q)];
        let k = p + q;
        if p + r > n || q + 1 < r {
            return Ok(Matrix::zeros(0, src.reps.dim()));
        }
        let tgt = &self.terms[&(r, p + r, q + 1 - r)];
        let d = &self.d[k];
        for b in src.b.rows() {
            if !tgt.b.contains(&d.apply(b)) {
                return Err(Error::Alarm(format!("d_{r} is not well defined on E_{r}^{{{p},{q}}}")));
            }
        }
        let cols = src
            .reps
            .rows()
            .iter()
            .map(|v| {
                let w = d.apply(v);
                if !tgt.z.contains(&w) {
                    return Err(Error::Alarm(format!("d of a representative of E_{r}^{{{p},{q}}} leaves Z_{r}")));
                }
                tgt.reps
                    .coefficients(&tgt.b.reduce(&w))
                    .ok_or_else(|| Error::Alarm(format!("image of d_{r} outside the representative span")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(tgt.reps.dim(), &cols))
    }

    /// Least r ≥ 1 with E_r = E_∞ (dimensions compared termwise).
    pub fn degeneration_step(&self) -> usize {
        let inf = self.dims(self.infinity()).expect("E_inf");
        (1..=self.infinity()).find(|&r| self.dims(r).expect("page") == inf).unwrap_or(self.infinity())
    }

    pub fn behaviour(&self) -> BehaviourSignature {
        let step = self.degeneration_step();
        let drops = (1..step).filter(|&r| self.dims(r).ok() != self.dims(r + 1).ok()).collect();
        BehaviourSignature { drops, step }
    }

    /// Internal consistency: E_∞ totals equal the Betti numbers and each page
    /// is the cohomology of the previous differential.
    pub fn verify(&self) -> Result<()> {
        let n = self.n();
        let inf = self.infinity();
        for k in 0..=2 * n {
            let total: usize = (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| self.terms[&(inf, p, k - p)].reps.dim()).sum();
            let b = self.dc.de_rham(k).dim;
            if total != b {
                return Err(Error::Alarm(format!("E_∞ total in degree {k} is {total}, Betti number {b}")));
            }
        }
        for r in 1..inf {
            for p in 0..=n {
                for q in 0..=n {
                    let out = self.dr_map(r, p, q)?.rank();
                    let incoming = if p >= r && q + r <= n + 1 && q + r >= 1 { self.dr_map(r, p - r, q + r - 1)?.rank() } else { 0 };
                    let expect = self.dim(r, p, q)? - out - incoming;
                    if self.dim(r + 1, p, q)? != expect {
                        return Err(Error::Alarm(format!("E_{}^{{{p},{q}}} is not the cohomology of d_{r}", r + 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Pages where the sequence strictly drops, and the degeneration step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehaviourSignature {
    pub drops: Vec<usize>,
    pub step: usize,
}

impl fmt::Display for BehaviourSignature {
    /// Renders e.g. `E1≅E2≇E3≅E∞`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E1")?;
        for r in 1..self.step {
            let rel = if self.drops.contains(&r) { "≇" } else { "≅" };
            write!(f, "{rel}E{}", r + 1)?;
        }
        write!(f, "≅E∞")
    }
}

pub fn frolicher_dims(eqs: &StructureEquations, r: usize) -> Result<TermDims> {
    FrolicherSequence::new(eqs)?.dims(r)
}

pub fn degeneration_step(eqs: &StructureEquations) -> Result<usize> {
    Ok(FrolicherSequence::new(eqs)?.degeneration_step())
}

pub fn behaviour_signature(eqs: &StructureEquations) -> Result<BehaviourSignature> {
    Ok(FrolicherSequence::new(eqs)?.behaviour())
}
