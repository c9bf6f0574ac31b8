//! Real-basis complex structures J for the deformation families, checked in
//! floating point against the exact complex structure equations.

use nalgebra::DMatrix;
use num::complex::Complex64;

use super::{degeneration_d, h15_raw};
use crate::classify::{AlgebraClass, TwoStepTriple};
use crate::error::{Error, Result};
use crate::exterior::{rational_to_f64, Monomial, Rational, Scalar};
use crate::liealg::{RealStructureEquations, StructureEquations};

/// J on 1-forms (row k holds J e^{k+1} in the e-basis) and a (1,0)-coframe.
#[derive(Clone, Debug)]
pub struct RealFixture {
    pub name: String,
    pub class: AlgebraClass,
    pub j: [[f64; 6]; 6],
    pub coframe: [[Complex64; 6]; 3],
    pub expected: StructureEquations,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ci(im: f64) -> Complex64 {
    Complex64::new(0.0, im)
}

/// ω = e^k - iJe^k for the 1-form e^k (0-based `k`).
fn holomorphic_part(j: &[[f64; 6]; 6], k: usize) -> [Complex64; 6] {
    let mut w = [Complex64::new(0.0, 0.0); 6];
    w[k] += 1.0;
    for l in 0..6 {
        w[l] -= ci(j[k][l]);
    }
    w
}

impl RealFixture {
    /// Largest of |J² + I|, |ωJ - iω| and the mismatch between dω computed
    /// from the real equations and the expected complex equations.
    pub fn residual(&self) -> Result<f64> {
        let j = DMatrix::from_fn(6, 6, |a, b| self.j[a][b]);
        let mut worst = (&j * &j + DMatrix::identity(6, 6)).abs().max();
        let jc = j.map(c);
        for w in &self.coframe {
            let row = DMatrix::from_row_slice(1, 6, w);
            worst = worst.max((&row * &jc - row.map(|x| x * ci(1.0))).map(|x| x.norm()).max());
        }
        let real = RealStructureEquations::from_salamon(self.class.salamon())?;
        let p = DMatrix::from_fn(6, 6, |a, b| if a < 3 { self.coframe[a][b] } else { self.coframe[a - 3][b].conj() });
        let q = p.clone().try_inverse().ok_or(Error::Singular)?;
        let structure: Vec<DMatrix<Complex64>> = (1..=6)
            .map(|m| {
                let mut a = DMatrix::from_element(6, 6, c(0.0));
                for (mono, coef) in real.d_of(m).terms() {
                    let h = mono.holo();
                    let v = c(rational_to_f64(coef.re()));
                    a[(h[0] - 1, h[1] - 1)] = v;
                    a[(h[1] - 1, h[0] - 1)] = -v;
                }
                q.transpose() * a * &q
            })
            .collect();
        for row in 0..3 {
            let mut dw = DMatrix::from_element(6, 6, c(0.0));
            for (m, s) in structure.iter().enumerate() {
                dw += s * p[(row, m)];
            }
            let expected = self.expected.d_of(row + 1);
            for a in 0..6 {
                for b in a + 1..6 {
                    let mono = pair_monomial(a, b);
                    let want = expected.coeff(&mono).to_complex64();
                    worst = worst.max((dw[(a, b)] - want).norm());
                }
            }
        }
        Ok(worst)
    }
}

/// θ^a∧θ^b for θ = (ω^1, ω^2, ω^3, ω^1̄, ω^2̄, ω^3̄), a < b.
fn pair_monomial(a: usize, b: usize) -> Monomial {
    match (a < 3, b < 3) {
        (true, true) => Monomial::new(&[a + 1, b + 1], &[]),
        (true, false) => Monomial::new(&[a + 1], &[b - 2]),
        _ => Monomial::new(&[], &[a - 2, b - 2]),
    }
}

/// Non-abelian h5 structure (1, λ, i·d(t, λ)) and its deforming J_t, λ ≠ 1.
pub fn h5_degeneration(lambda: &Rational, t: &Rational) -> Result<RealFixture> {
    let d = rational_to_f64(&degeneration_d(t, lambda));
    let l = rational_to_f64(lambda);
    let m = 1.0 - l * l;
    let alpha = (m * m - 4.0 * d * d).sqrt();
    let a2 = alpha * alpha;
    let j = [
        [4.0 * d * (1.0 - l) / a2, -m / alpha, -2.0 * d * (1.0 - l).powi(2) / a2, 8.0 * d * d * (1.0 - l) / (a2 * alpha), 0.0, 0.0],
        [m / alpha, 0.0, 0.0, 2.0 * d * m / a2, 0.0, 0.0],
        [-2.0 * d / (1.0 - l).powi(2), -2.0 * alpha / (m * (1.0 - l)), 0.0, -(1.0 + l).powi(2) / alpha, 0.0, 0.0],
        [-2.0 * (1.0 - l) / alpha, 2.0 * d / m, (1.0 - l).powi(2) / alpha, -4.0 * d * (1.0 - l) / a2, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 2.0 * d / m, -(4.0 * d * d + m * m) / (alpha * m)],
        [0.0, 0.0, 0.0, 0.0, alpha / m, -2.0 * d / m],
    ];
    let k = 1.0 / (1.0 - l);
    let coframe = [
        [c(m / alpha), ci(1.0), c(0.0), c(2.0 * d * m / a2), c(0.0), c(0.0)],
        [
            c(-(1.0 - l) / alpha) + ci(k * 2.0 * d / alpha),
            ci(k),
            c((1.0 - l) / alpha),
            c(-2.0 * d * (1.0 - l) / a2) + ci(k * m * m / a2),
            c(0.0),
            c(0.0),
        ],
        [c(0.0), c(0.0), c(0.0), c(0.0), c(1.0), c(-2.0 * d / alpha) + ci(m / alpha)],
    ];
    let triple = TwoStepTriple::new(1, lambda.clone(), Scalar::new(Rational::from_integer(0.into()), degeneration_d(t, lambda)))?;
    Ok(RealFixture { name: format!("h5_degeneration lambda={lambda} t={t}"), class: AlgebraClass::H5, j, coframe, expected: triple.equations()? })
}

/// The h15 family at s, against its raw equations.
pub fn h15_behaviours(s: &Rational) -> Result<RealFixture> {
    let x = rational_to_f64(s);
    let a = (3.0 * (3.0 - x) * (7.0 + 3.0 * x) / ((5.0 + x) * (11.0 - x))).sqrt();
    let b = (3.0 * (3.0 - x) * (11.0 - x) / ((5.0 + x) * (7.0 + 3.0 * x))).sqrt();
    let g = ((11.0 - x) * (7.0 + 3.0 * x) / (3.0 * (3.0 - x) * (5.0 + x))).sqrt();
    let mut j = [[0.0; 6]; 6];
    j[0][1] = -a;
    j[1][0] = 1.0 / a;
    j[2][3] = b;
    j[3][2] = -1.0 / b;
    j[4][5] = -g;
    j[5][4] = 1.0 / g;
    let z = c(0.0);
    let p = (5.0 + x) * (7.0 + 3.0 * x);
    let coframe = [
        [c(((11.0 - x) * (5.0 + x)).sqrt() / 4.0), ci((3.0 * (3.0 - x) * (7.0 + 3.0 * x)).sqrt() / 4.0), z, z, z, z],
        [z, z, c(p / 8.0), ci(-(3.0 * (5.0 + x) * (3.0 - x) * (11.0 - x) * (7.0 + 3.0 * x)).sqrt() / 8.0), z, z],
        [
            z,
            z,
            z,
            z,
            c(p * 3.0 * (3.0 - x) * ((11.0 - x) * (5.0 + x)).sqrt() / 128.0),
            ci(p * (11.0 - x) * (3.0 * (3.0 - x) * (7.0 + 3.0 * x)).sqrt() / 128.0),
        ],
    ];
    Ok(RealFixture { name: format!("h15_behaviours s={s}"), class: AlgebraClass::H15, j, coframe, expected: h15_raw(s)? })
}

/// h5 with (1, λ, 0), λ² < 1/2.
pub fn h5_balanced_lambda(lambda: &Rational) -> Result<RealFixture> {
    let l = rational_to_f64(lambda);
    let mut j = [[0.0; 6]; 6];
    j[0][1] = -1.0;
    j[1][0] = 1.0;
    j[2][1] = -2.0 / (1.0 - l);
    j[2][3] = -(1.0 + l) / (1.0 - l);
    j[3][0] = -2.0 / (1.0 + l);
    j[3][2] = (1.0 - l) / (1.0 + l);
    j[4][5] = -1.0;
    j[5][4] = 1.0;
    // e^5 - iJe^5 alone gives dω^3 = (ω^{12} + ω^{11̄} + λω^{12̄})/(1+λ)
    let coframe = [holomorphic_part(&j, 0), holomorphic_part(&j, 2), holomorphic_part(&j, 4).map(|v| v * (1.0 + l))];
    let triple = TwoStepTriple::new(1, lambda.clone(), Scalar::from_int(0))?;
    Ok(RealFixture { name: format!("h5_balanced lambda={lambda}"), class: AlgebraClass::H5, j, coframe, expected: triple.equations()? })
}

/// h5 with (1, 0, x), x > -1/4.
pub fn h5_balanced_x(x: &Rational) -> Result<RealFixture> {
    let xf = rational_to_f64(x);
    let r = (1.0 + 4.0 * xf).sqrt();
    let mut j = [[0.0; 6]; 6];
    j[0][1] = (4.0 * xf - 1.0) / r;
    j[0][3] = 2.0 * xf / r;
    j[1][0] = r;
    j[1][2] = 2.0 * xf / r;
    j[2][1] = -2.0 * r;
    j[2][3] = -r;
    j[3][0] = -2.0 * r;
    j[3][2] = (1.0 - 4.0 * xf) / r;
    j[4][5] = -r;
    j[5][4] = 1.0 / r;
    let w1 = holomorphic_part(&j, 1).map(|v| v * ci(1.0));
    let w2 = holomorphic_part(&j, 2).map(|v| v / r);
    let coframe = [w1, w2, holomorphic_part(&j, 4)];
    let triple = TwoStepTriple::new(1, Rational::from_integer(0.into()), Scalar::real(x.clone()))?;
    Ok(RealFixture { name: format!("h5_balanced x={x}"), class: AlgebraClass::H5, j, coframe, expected: triple.equations()? })
}
