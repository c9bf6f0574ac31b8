use num::Zero;

use crate::error::{Error, Result};
use crate::exterior::{Basis, Form, Gen, Monomial, Scalar};
use crate::linalg::{Matrix, SubspaceBasis, Vector};

/// Chevalley–Eilenberg data of a Lie algebra: `d[k]` = de^{k+1} as a 2-form in
/// unbarred generators e^1..e^dim. Brackets follow dω(X,Y) = -ω([X,Y]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCoalgebra {
    dim: usize,
    d: Vec<Form>,
}

impl LieCoalgebra {
    pub fn new(d: Vec<Form>) -> Result<Self> {
        let dim = d.len();
        for (k, f) in d.iter().enumerate() {
            if f.n() != dim || !f.is_homogeneous_of(2) || f.terms().any(|(m, _)| m.bidegree().1 != 0) {
                return Err(Error::WrongDegree(format!("de^{} = {f} is not a 2-form in e^1..e^{dim}", k + 1)));
            }
        }
        Ok(LieCoalgebra { dim, d })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn d_of(&self, k: usize) -> &Form {
        &self.d[k - 1]
    }

    pub fn equations(&self) -> &[Form] {
        &self.d
    }

    pub fn differential(&self, f: &Form) -> Form {
        f.apply_derivation(&|g| match g {
            Gen::Holo(k) => self.d[k - 1].clone(),
            Gen::Anti(_) => unreachable!("coalgebra forms carry no barred generators"),
        })
    }

    /// Jacobi identity in dual form.
    pub fn check_d_squared(&self) -> Result<()> {
        for (k, f) in self.d.iter().enumerate() {
            let dd = self.differential(f);
            if !dd.is_zero() {
                return Err(Error::NotDifferential(format!("d(de^{}) = {dd}", k + 1)));
            }
        }
        Ok(())
    }

    /// Coordinates of [X_i, X_j] in the basis dual to e^1..e^dim (1-based).
    pub fn bracket(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim];
        if i == j {
            return v;
        }
        let (a, b, sign) = if i < j { (i, j, -1) } else { (j, i, 1) };
        let m = Monomial::new(&[a, b], &[]);
        for (k, f) in self.d.iter().enumerate() {
            v[k] = f.coeff(&m).scale(&crate::exterior::rat_int(sign));
        }
        v
    }

    fn bracket_with(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.bracket(i, j + 1)) {
                *o += &(c * &b);
            }
        }
        out
    }

    /// [g, s] for a subspace `s` of g.
    pub fn bracket_with_algebra(&self, s: &SubspaceBasis) -> SubspaceBasis {
        SubspaceBasis::span(
            self.dim,
            (1..=self.dim).flat_map(|i| s.rows().iter().map(move |r| self.bracket_with(i, r)).collect::<Vec<_>>()),
        )
    }

    /// Dimensions of g^1 = [g,g], g^2 = [g,g^1], ... up to `len` terms.
    pub fn lower_central_series(&self, len: usize) -> Vec<usize> {
        let mut s = SubspaceBasis::full(self.dim);
        (0..len)
            .map(|_| {
                s = self.bracket_with_algebra(&s);
                s.dim()
            })
            .collect()
    }

    pub fn center(&self) -> SubspaceBasis {
        let mut rows = Vec::new();
        for i in 1..=self.dim {
            let cols: Vec<Vector> = (1..=self.dim).map(|j| self.bracket(i, j)).collect();
            let m = Matrix::from_columns(self.dim, &cols);
            rows.extend((0..self.dim).map(|r| m.row(r).to_vec()));
        }
        Matrix::from_rows(self.dim, rows).kernel()
    }

    /// Matrix of d: ⋀^k -> ⋀^{k+1} in lexicographic bases.
    pub fn d_matrix(&self, k: usize) -> Matrix {
        let from = Basis::bidegree(self.dim, k, 0);
        let to = Basis::bidegree(self.dim, k + 1, 0);
        let cols: Vec<Vector> = from
            .monomials()
            .iter()
            .map(|m| {
                let f = self.differential(&Form::monomial(self.dim, *m, Scalar::from_int(1)));
                to.coordinates(&f).expect("d raises degree by one")
            })
            .collect();
        Matrix::from_columns(to.len(), &cols)
    }

    /// Closed and exact k-forms as subspaces of ⋀^k.
    pub fn cycles_and_boundaries(&self, k: usize) -> (SubspaceBasis, SubspaceBasis) {
        let z = self.d_matrix(k).kernel();
        let b = if k == 0 {
            SubspaceBasis::zero(1)
        } else {
            self.d_matrix(k - 1).image()
        };
        (z, b)
    }

    pub fn betti(&self, k: usize) -> usize {
        let (z, b) = self.cycles_and_boundaries(k);
        z.dim() - b.dim()
    }

    /// New coframe `f^i = Σ_j m[i][j] e^j`; returns the structure equations in it.
    pub fn change_coframe(&self, m: &Matrix) -> Result<LieCoalgebra> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!("coframe matrix must be {0}x{0}", self.dim)));
        }
        let inv = m.inverse()?;
        let old_in_new: Vec<Form> = (0..self.dim)
            .map(|j| {
                Form::from_terms(
                    self.dim,
                    (0..self.dim).map(|k| (Monomial::generator(Gen::Holo(k + 1)), inv.get(j, k).clone())),
                )
            })
            .collect();
        let d = (0..self.dim)
            .map(|i| {
                let mut acc = Form::zero(self.dim);
                for j in 0..self.dim {
                    let c = m.get(i, j);
                    if !c.is_zero() {
                        acc = &acc + &self.d[j].scale(c);
                    }
                }
                acc.substitute(&old_in_new)
            })
            .collect();
        LieCoalgebra::new(d)
    }
}
