use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coalgebra::LieCoalgebra;
use super::real::RealStructureEquations;
use crate::error::{Error, Result};
use crate::exterior::{Basis, Form, Rational, Scalar};
use crate::linalg::{Matrix, SubspaceBasis, Vector};

/// Isomorphism invariants used to recognise the real Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim_derived: usize,
    pub dim_g2: usize,
    pub dim_g3: usize,
    pub dim_center: usize,
    pub betti: [usize; 3],
    /// Largest number of independent decomposable exact 2-forms.
    pub alpha: usize,
    /// Ranks of the cup products H^1⊗H^1→H^2, H^1⊗H^2→H^3, H^2⊗H^2→H^4.
    pub cup_ranks: [usize; 3],
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[g,g]={} g2={} g3={} z={} b=({},{},{}) alpha={} cup=({},{},{})",
            self.dim_derived,
            self.dim_g2,
            self.dim_g3,
            self.dim_center,
            self.betti[0],
            self.betti[1],
            self.betti[2],
            self.alpha,
            self.cup_ranks[0],
            self.cup_ranks[1],
            self.cup_ranks[2]
        )
    }
}

pub fn fingerprint(real: &RealStructureEquations) -> Result<Fingerprint> {
    let co = real.coalgebra();
    let lcs = co.lower_central_series(3);
    Ok(Fingerprint {
        dim_derived: lcs[0],
        dim_g2: lcs[1],
        dim_g3: lcs[2],
        dim_center: co.center().dim(),
        betti: [co.betti(1), co.betti(2), co.betti(3)],
        alpha: alpha(co)?,
        cup_ranks: [cup_rank(co, 1, 1), cup_rank(co, 1, 2), cup_rank(co, 2, 2)],
    })
}

/// Dimension of the image of H^i ⊗ H^j → H^{i+j}.
pub fn cup_rank(co: &LieCoalgebra, i: usize, j: usize) -> usize {
    let m = co.dim();
    let (zi, _) = co.cycles_and_boundaries(i);
    let (zj, _) = co.cycles_and_boundaries(j);
    let (_, bk) = co.cycles_and_boundaries(i + j);
    let (basis_i, basis_j, basis_k) = (Basis::bidegree(m, i, 0), Basis::bidegree(m, j, 0), Basis::bidegree(m, i + j, 0));
    let mut span = bk.clone();
    for a in zi.rows() {
        let fa = basis_i.form(a);
        for b in zj.rows() {
            let prod = fa.wedge(&basis_j.form(b));
            span.insert(basis_k.coordinates(&prod).expect("degree i+j"));
        }
    }
    span.dim() - bk.dim()
}

type Sym = Vec<Vec<Rational>>;

fn real_part(s: &Scalar) -> Result<Rational> {
    if !s.is_real() {
        return Err(Error::Alarm(format!("expected a real coefficient, got {s}")));
    }
    Ok(s.re().clone())
}

/// α: dimension of the span of the decomposable elements of d(g*).
///
/// τ is decomposable iff τ∧τ = 0, so the decomposables of V = d(g*) are the
/// real common zeros of the quadratic forms given by the coordinates of τ∧τ.
pub fn alpha(co: &LieCoalgebra) -> Result<usize> {
    let two = Basis::bidegree(co.dim(), 2, 0);
    let v = SubspaceBasis::span(two.len(), co.equations().iter().map(|f| two.coordinates(f).expect("2-form")));
    decomposable_span(co.dim(), &v)
}

/// Dimension of the span of the decomposable 2-forms inside a subspace of ⋀^2.
pub fn decomposable_span(m: usize, v: &SubspaceBasis) -> Result<usize> {
    let two = Basis::bidegree(m, 2, 0);
    let four = Basis::bidegree(m, 4, 0);
    let taus: Vec<Form> = v.rows().iter().map(|r| two.form(r)).collect();
    let k = taus.len();
    let mut forms: Vec<Sym> = vec![vec![vec![Rational::zero(); k]; k]; four.len()];
    for a in 0..k {
        for b in a..k {
            let w = four.coordinates(&taus[a].wedge(&taus[b])).expect("4-form");
            for (c, x) in w.iter().enumerate() {
                let x = real_part(x)?;
                forms[c][a][b] = x.clone();
                forms[c][b][a] = x;
            }
        }
    }
    span_of_common_zeros(forms, k)
}

fn pencil_basis(forms: Vec<Sym>, k: usize) -> Vec<Sym> {
    let flat = |s: &Sym| -> Vector { (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).map(|(i, j)| Scalar::real(s[i][j].clone())).collect() };
    let mut span = SubspaceBasis::zero(k * (k + 1) / 2);
    forms.into_iter().filter(|s| span.insert(flat(s))).collect()
}

/// Dimension of the linear span of the real common zeros of the quadratic forms.
fn span_of_common_zeros(forms: Vec<Sym>, k: usize) -> Result<usize> {
    let basis = pencil_basis(forms, k);
    match basis.len() {
        0 => return Ok(k),
        1 => {
            let (pos, neg, zero) = inertia(&basis[0]);
            // an indefinite form has isotropic vectors spanning the space
            return Ok(if pos > 0 && neg > 0 { k } else { zero });
        }
        _ => {}
    }
    let mut candidates: Vec<Sym> = basis.clone();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            candidates.push(combine(&basis[a], &basis[b], true));
            candidates.push(combine(&basis[a], &basis[b], false));
        }
    }
    for q in &candidates {
        let (pos, neg, _) = inertia(q);
        if pos + neg > 0 && (pos == 0 || neg == 0) {
            // zeros of a semidefinite form form its radical; restrict there
            let ker = sym_matrix(q).kernel();
            let r = ker.dim();
            let restricted = basis
                .iter()
                .map(|s| {
                    (0..r)
                        .map(|i| (0..r).map(|j| restrict(s, &ker.rows()[i], &ker.rows()[j])).collect())
                        .collect()
                })
                .collect();
            return span_of_common_zeros(restricted, r);
        }
    }
    Err(Error::Unsupported("decomposable exact 2-forms: pencil of indefinite quadrics".into()))
}

fn combine(a: &Sym, b: &Sym, plus: bool) -> Sym {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| if plus { x + y } else { x - y }).collect())
        .collect()
}

fn sym_matrix(s: &Sym) -> Matrix {
    let k = s.len();
    Matrix::from_rows(k, s.iter().map(|r| r.iter().cloned().map(Scalar::real).collect()).collect())
}

fn restrict(s: &Sym, x: &[Scalar], y: &[Scalar]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += xi.re() * &s[i][j] * yj.re();
        }
    }
    acc
}

/// (positive, negative, zero) counts of a rational symmetric matrix by congruence.
pub fn inertia(s: &Sym) -> (usize, usize, usize) {
    let mut a = s.clone();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        if let Some(&p) = live.iter().find(|&&p| !a[p][p].is_zero()) {
            let piv = a[p][p].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            live.retain(|&x| x != p);
            for &i in &live {
                for &j in &live {
                    let t = &a[i][p] * &a[p][j] / &piv;
                    a[i][j] -= t;
                }
            }
            continue;
        }
        let pair = live.iter().flat_map(|&i| live.iter().map(move |&j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = pair else { break };
        // e_i -> e_i + e_j makes the (i,i) entry 2·a_ij ≠ 0
        let n = a.len();
        for c in 0..n {
            let v = a[j][c].clone();
            a[i][c] += v;
        }
        for r in 0..n {
            let v = a[r][j].clone();
            a[r][i] += v;
        }
    }
    (pos, neg, live.len())
}
