use std::collections::HashMap;

use num::Zero;

use super::form::Form;
use super::monomial::Monomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Subsets of `{0..n}` of size `k` as bitmasks, in lexicographic order of their index lists.
fn subsets(n: usize, k: usize) -> Vec<u8> {
    fn rec(start: usize, n: usize, k: usize, acc: u8, out: &mut Vec<u8>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for j in start..n {
            if n - j < k {
                break;
            }
            rec(j + 1, n, k - 1, acc | (1 << j), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Ordered monomial basis of a graded piece of the exterior algebra.
#[derive(Clone, Debug)]
pub struct Basis {
    n: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Basis {
    fn from_monomials(n: usize, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        Basis { n, monomials, index }
    }

    /// Basis of ⋀^{p,q}, of size C(n,p)·C(n,q), lexicographic.
    pub fn bidegree(n: usize, p: usize, q: usize) -> Self {
        let mut ms = Vec::new();
        for h in subsets(n, p) {
            for a in subsets(n, q) {
                ms.push(Monomial::from_masks(h, a));
            }
        }
        Basis::from_monomials(n, ms)
    }

    /// Basis of the total degree `k` part, grouped by holomorphic degree ascending.
    pub fn total(n: usize, k: usize) -> Self {
        let mut ms = Vec::new();
        for p in 0..=k.min(n) {
            if k - p <= n {
                ms.extend(Basis::bidegree(n, p, k - p).monomials);
            }
        }
        Basis::from_monomials(n, ms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn coordinates(&self, f: &Form) -> Result<Vec<Scalar>> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch(format!("form over {} generators, basis over {}", f.n(), self.n)));
        }
        let mut v = vec![Scalar::zero(); self.len()];
        for (m, c) in f.terms() {
            let k = self.index_of(m).ok_or_else(|| Error::OutsideBasis(m.to_string()))?;
            v[k] = c.clone();
        }
        Ok(v)
    }

    pub fn form(&self, coords: &[Scalar]) -> Form {
        assert_eq!(coords.len(), self.len());
        Form::from_terms(self.n, self.monomials.iter().copied().zip(coords.iter().cloned()))
    }
}

/// Coordinates of `f` in the lexicographic basis of ⋀^{p,q}.
pub fn coordinates(f: &Form, p: usize, q: usize) -> Result<Vec<Scalar>> {
    Basis::bidegree(f.n(), p, q)
        .coordinates(f)
        .map_err(|_| Error::WrongDegree(format!("{f} is not of bidegree ({p},{q})")))
}
