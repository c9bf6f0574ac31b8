use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::{Form, Gen, Monomial, Scalar};

use super::coalgebra::LieCoalgebra;

/// Complex structure equations: `d[j]` is dω^{j+1} for a coframe of (1,0)-forms.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureEquations {
    n: usize,
    d: Vec<Form>,
    dbar: Vec<Form>,
}

impl StructureEquations {
    /// `d[j]` must be a 2-form over `d.len()` generators.
    pub fn new(d: Vec<Form>) -> Result<Self> {
        let n = d.len();
        for (j, f) in d.iter().enumerate() {
            if f.n() != n {
                return Err(Error::DimensionMismatch(format!("dω^{} is over {} generators, expected {n}", j + 1, f.n())));
            }
            if !f.is_homogeneous_of(2) {
                return Err(Error::WrongDegree(format!("dω^{} = {f} is not a 2-form", j + 1)));
            }
        }
        let dbar = d.iter().map(Form::conjugate).collect();
        Ok(StructureEquations { n, d, dbar })
    }

    /// Like [`StructureEquations::new`] but also requires integrability and d² = 0.
    pub fn integrable(d: Vec<Form>) -> Result<Self> {
        let eqs = Self::new(d)?;
        eqs.check_integrability()?;
        Ok(eqs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// dω^j for 1-based `j`.
    pub fn d_of(&self, j: usize) -> &Form {
        &self.d[j - 1]
    }

    pub fn equations(&self) -> &[Form] {
        &self.d
    }

    pub fn d_gen(&self, g: Gen) -> &Form {
        match g {
            Gen::Holo(j) => &self.d[j - 1],
            Gen::Anti(j) => &self.dbar[j - 1],
        }
    }

    pub fn differential(&self, f: &Form) -> Form {
        f.apply_derivation(&|g| self.d_gen(g).clone())
    }

    /// (∂f, ∂̄f) for `f` of pure bidegree.
    pub fn del_and_delbar(&self, f: &Form) -> Result<(Form, Form)> {
        let bd = f.bidegrees();
        if bd.len() > 1 {
            return Err(Error::WrongDegree(format!("{f} is not of pure bidegree")));
        }
        let Some(&(p, q)) = bd.iter().next() else {
            return Ok((Form::zero(self.n), Form::zero(self.n)));
        };
        let df = self.differential(f);
        let (del, delbar) = (df.project(p + 1, q), df.project(p, q + 1));
        if (&del + &delbar) != df {
            return Err(Error::NotIntegrable(format!("d({f}) has components outside ({},{}) and ({},{})", p + 1, q, p, q + 1)));
        }
        Ok((del, delbar))
    }

    pub fn del(&self, f: &Form) -> Result<Form> {
        Ok(self.del_and_delbar(f)?.0)
    }

    pub fn delbar(&self, f: &Form) -> Result<Form> {
        Ok(self.del_and_delbar(f)?.1)
    }

    /// Checks π^{0,2}(dω^j) = 0 and d²ω^j = 0.
    pub fn check_integrability(&self) -> Result<()> {
        for (j, f) in self.d.iter().enumerate() {
            let bad = f.project(0, 2);
            if !bad.is_zero() {
                return Err(Error::NotIntegrable(format!("dω^{} has (0,2)-part {bad}", j + 1)));
            }
            let dd = self.differential(f);
            if !dd.is_zero() {
                return Err(Error::NotDifferential(format!("d(dω^{}) = {dd}", j + 1)));
            }
        }
        Ok(())
    }

    pub fn is_integrable(&self) -> bool {
        self.check_integrability().is_ok()
    }

    /// True when dω^j = 0 for all j.
    pub fn is_abelian_zero(&self) -> bool {
        self.d.iter().all(Form::is_zero)
    }

    /// Flat coalgebra over (ω^1..ω^n, ω^1̄..ω^n̄) renamed to e^1..e^{2n}.
    pub fn to_coalgebra(&self) -> LieCoalgebra {
        let d = self.d.iter().chain(&self.dbar).map(|f| flatten(f, self.n)).collect();
        LieCoalgebra::new(d).expect("flattened equations are 2-forms")
    }

    /// Inverse of [`StructureEquations::to_coalgebra`]; the last `n` generators
    /// must be the conjugates of the first `n`.
    pub fn from_coalgebra(co: &LieCoalgebra, n: usize) -> Result<Self> {
        if co.dim() != 2 * n {
            return Err(Error::DimensionMismatch(format!("coalgebra of dimension {} is not 2·{n}", co.dim())));
        }
        let d: Vec<Form> = (1..=n).map(|j| unflatten(co.d_of(j), n)).collect();
        let eqs = StructureEquations::new(d)?;
        for j in 1..=n {
            if unflatten(co.d_of(n + j), n) != eqs.dbar[j - 1] {
                return Err(Error::Alarm(format!("generator {} is not the conjugate of generator {j}", n + j)));
            }
        }
        Ok(eqs)
    }
}

pub(crate) fn flatten(f: &Form, n: usize) -> Form {
    Form::from_terms(
        2 * n,
        f.terms().map(|(m, c)| (Monomial::from_masks(m.holo_mask() | (m.anti_mask() << n), 0), c.clone())),
    )
}

pub(crate) fn unflatten(f: &Form, n: usize) -> Form {
    let low = (1u8 << n) - 1;
    Form::from_terms(n, f.terms().map(|(m, c)| (Monomial::from_masks(m.holo_mask() & low, m.holo_mask() >> n), c.clone())))
}

impl fmt::Display for StructureEquations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.d.iter().enumerate().map(|(j, form)| format!("dw{} = {form}", j + 1)).collect();
        write!(f, "{}", lines.join("; "))
    }
}

impl fmt::Debug for StructureEquations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `c·ω^{holo}∧ω^{anti-bar}` over `n` generators; a shorthand for building equations.
pub fn term(n: usize, holo: &[usize], anti: &[usize], c: Scalar) -> Form {
    Form::monomial(n, Monomial::new(holo, anti), c)
}
