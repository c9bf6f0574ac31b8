use num::{One, Signed, Zero};

use super::decide::classify_2step;
use super::families::{AlgebraClass, Family, ThreeStepTriple, TwoStepTriple};
use crate::error::{Error, Result};
use crate::exterior::{rat, rat_int, rational_sqrt, Form, Gen, Monomial, Rational, Scalar};
use crate::liealg::{flatten, StructureEquations};
use crate::linalg::Matrix;

/// For non-abelian two-step structures: the E with (1,λ,D) ~ (1,t,E), or
/// `None` when 4y² - (t²-λ²)(4x+t²-λ²) < 0 and no such E exists.
pub fn transfer_target(lambda: &Rational, d: &Scalar, t: &Rational) -> Result<Option<Scalar>> {
    let k = lambda * lambda - t * t;
    if k.is_zero() {
        return Ok(Some(d.clone()));
    }
    let (x, y) = (d.re(), d.im());
    let disc = rat_int(4) * y * y + &k * (rat_int(4) * x - &k);
    if disc.is_negative() {
        return Ok(None);
    }
    let s = rational_sqrt(&disc).ok_or_else(|| Error::Unrepresentable(format!("sqrt({disc}) is irrational")))?;
    let beta = rat_int(2) * y + s;
    let num = Scalar::new(beta.clone(), k.clone());
    let den = Scalar::new(beta, -k);
    Ok(Some(&(d * &num) / &den))
}

fn require_nonabelian(t: &TwoStepTriple) -> Result<()> {
    t.validate()?;
    if t.rho != 1 {
        return Err(Error::Domain("equivalence is decided for non-abelian (rho = 1) two-step structures".into()));
    }
    Ok(())
}

/// Whether (1,λ,D) and (1,t,E) define equivalent complex structures.
pub fn equivalent_2step(a: &TwoStepTriple, b: &TwoStepTriple) -> Result<bool> {
    require_nonabelian(a)?;
    require_nonabelian(b)?;
    let (lambda, d, t, e) = (&a.lambda, &a.d, &b.lambda, &b.d);
    if d.is_zero() || e.is_zero() {
        return Ok(lambda == t && d == e);
    }
    if d.norm_sqr() != e.norm_sqr() {
        return Ok(false);
    }
    if lambda == t {
        return Ok(d == e);
    }
    Ok(transfer_target(lambda, d, t)?.as_ref() == Some(e))
}

/// Coefficients of σ^1 = aω^1 + bω^2, σ^2 = cω^1 + fω^2, σ^3 = eω^3 carrying
/// the equations of one two-step structure onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub e: Scalar,
    pub f: Scalar,
}

impl Witness {
    pub fn identity() -> Self {
        Witness { a: Scalar::one(), b: Scalar::zero(), c: Scalar::zero(), e: Scalar::one(), f: Scalar::one() }
    }

    pub fn coframe(&self) -> Matrix {
        let z = Scalar::zero();
        Matrix::from_rows(
            3,
            vec![
                vec![self.a.clone(), self.b.clone(), z.clone()],
                vec![self.c.clone(), self.f.clone(), z.clone()],
                vec![z.clone(), z, self.e.clone()],
            ],
        )
    }

    /// Substitutes the coframe into both sets of structure equations.
    pub fn verify(&self, from: &TwoStepTriple, to: &TwoStepTriple) -> Result<bool> {
        Ok(pulls_back(&from.equations()?, &to.equations()?, &self.coframe()))
    }

    /// First `self`, then `next`.
    pub fn then(&self, next: &Witness) -> Witness {
        let m = next.coframe().mul(&self.coframe());
        Witness {
            a: m.get(0, 0).clone(),
            b: m.get(0, 1).clone(),
            c: m.get(1, 0).clone(),
            f: m.get(1, 1).clone(),
            e: m.get(2, 2).clone(),
        }
    }

    fn inverse(&self) -> Option<Witness> {
        let det = &(&self.a * &self.f) - &(&self.b * &self.c);
        if det.is_zero() || self.e.is_zero() {
            return None;
        }
        Some(Witness {
            a: &self.f / &det,
            b: -&(&self.b / &det),
            c: -&(&self.c / &det),
            e: self.e.inv()?,
            f: &self.a / &det,
        })
    }
}

/// Whether σ = mω (σ^j = Σ m_jk ω^k) satisfies dσ = (target equations)(σ)
/// when dω is given by `source`.
pub fn pulls_back(source: &StructureEquations, target: &StructureEquations, m: &Matrix) -> bool {
    let n = source.n();
    let sigma: Vec<Form> = (0..n)
        .map(|j| Form::from_terms(n, (0..n).map(|k| (Monomial::generator(Gen::Holo(k + 1)), m.get(j, k).clone()))))
        .collect();
    let images: Vec<Form> = sigma.iter().map(|s| flatten(s, n)).chain(sigma.iter().map(|s| flatten(&s.conjugate(), n))).collect();
    (0..n).all(|j| {
        let lhs = flatten(&source.differential(&sigma[j]), n);
        let rhs = flatten(target.d_of(j + 1), n).substitute(&images);
        lhs == rhs
    })
}


/// Explicit coframe change for equivalent non-abelian two-step structures with D ≠ 0.
pub fn automorphism_witness(a: &TwoStepTriple, b: &TwoStepTriple) -> Result<Witness> {
    if !equivalent_2step(a, b)? {
        return Err(Error::Domain("structures are not equivalent".into()));
    }
    if let Some(w) = direct_witness(a, b)? {
        return Ok(w);
    }
    // both directions degenerate (e = 0); route through an intermediate λ
    for q in 1..=12i64 {
        for p in 1..=2 * q {
            let mid = rat(p, q);
            if mid.denom() != &q.into() || mid == a.lambda || mid == b.lambda {
                continue;
            }
            let Ok(Some(e)) = transfer_target(&a.lambda, &a.d, &mid) else { continue };
            let m = TwoStepTriple::new(1, mid, e)?;
            let (Some(w1), Some(w2)) = (direct_witness(a, &m)?, direct_witness(&m, b)?) else { continue };
            let w = w1.then(&w2);
            if w.verify(a, b)? {
                return Ok(w);
            }
            return Err(Error::Alarm("composed witness failed substitution check".into()));
        }
    }
    Err(Error::Unsupported(format!("no rational witness found for {a:?} -> {b:?}")))
}

fn direct_witness(a: &TwoStepTriple, b: &TwoStepTriple) -> Result<Option<Witness>> {
    if let Some(w) = construct_witness(a, b)? {
        return Ok(Some(w));
    }
    let Some(w) = construct_witness(b, a)?.and_then(|w| w.inverse()) else { return Ok(None) };
    if w.verify(a, b)? {
        Ok(Some(w))
    } else {
        Err(Error::Alarm("inverted witness failed substitution check".into()))
    }
}

/// `None` when the construction degenerates.
fn construct_witness(a: &TwoStepTriple, b: &TwoStepTriple) -> Result<Option<Witness>> {
    let (lambda, d, t, e_t) = (&a.lambda, &a.d, &b.lambda, &b.d);
    if lambda == t {
        return Ok(Some(Witness::identity()));
    }
    let k = lambda * lambda - t * t;
    let (x, y) = (d.re(), d.im());
    let disc = rat_int(4) * y * y + &k * (rat_int(4) * x - &k);
    let beta = rat_int(2) * y + rational_sqrt(&disc).ok_or_else(|| Error::Unrepresentable(format!("sqrt({disc})")))?;
    let e_dir = Scalar::new(&beta / &k, Rational::one());
    let h = d * &e_dir;
    if h.im().is_zero() || d == &e_t.conj() {
        return Ok(None);
    }
    for f in [Scalar::one(), Scalar::i(), Scalar::gauss(1, 1, 1, 1), Scalar::from_int(2)] {
        let (f1, f2) = (f.re(), f.im());
        let nf = f.norm_sqr();
        let (h1, h2) = (h.re(), h.im());
        let rhs = lambda * (t * h1 * (f1 * f1 - f2 * f2) + rat_int(2) * t * h2 * f1 * f2 - lambda * &nf * h1);
        let e2 = (rat_int(2) * h2 * y * &nf - rhs) / (rat_int(2) * h2 * h2);
        // e = 0 is not a coframe
        if e2.is_zero() {
            continue;
        }
        let e = e_dir.scale(&e2);
        let one = Scalar::one();
        let lf = f.scale(lambda);
        let tf = f.conj().scale(t);
        let denom = &one - &(d / &e_t.conj());
        let b_bar = &(&lf - &tf) / &denom;
        let bb = b_bar.conj();
        let c = -&(&bb / e_t).conj();
        let aa = &(&e + &(&bb * &c)) / &f;
        let w = Witness { a: aa, b: bb, c, e, f };
        if w.verify(a, b)? {
            return Ok(Some(w));
        }
        return Err(Error::Alarm("witness construction failed substitution check".into()));
    }
    Ok(None)
}

fn in_region_one(t: &TwoStepTriple) -> bool {
    if !t.d.re().is_zero() || t.lambda.is_zero() {
        return false;
    }
    let l2 = &t.lambda * &t.lambda;
    let two_y = rat_int(2) * t.d.im();
    if l2 < rat(1, 2) {
        two_y < l2
    } else {
        two_y < (rat_int(1) - &l2).abs()
    }
}

fn in_region_two(t: &TwoStepTriple) -> bool {
    let (x, y) = (t.d.re(), t.d.im());
    t.lambda.is_zero() && rat_int(4) * y * y < rat_int(1) + rat_int(4) * x
}

fn transferred(t: &TwoStepTriple, target: Rational) -> Result<TwoStepTriple> {
    let e = transfer_target(&t.lambda, &t.d, &target)?
        .ok_or_else(|| Error::Alarm(format!("no equivalent structure with lambda = {target}")))?;
    TwoStepTriple::new(1, target, e)
}

fn canonical_two_step(t: &TwoStepTriple) -> Result<TwoStepTriple> {
    let abs_d = || t.d.abs_exact().ok_or_else(|| Error::Unrepresentable(format!("|{}| is irrational", t.d)));
    if t.rho == 0 {
        if !t.lambda.is_zero() {
            let l2 = Scalar::real(&t.lambda * &t.lambda);
            return TwoStepTriple::new(0, rat_int(1), &t.d / &l2);
        }
        if t.d.is_zero() {
            return Ok(t.clone());
        }
        return TwoStepTriple::new(0, rat_int(0), &t.d / &Scalar::real(abs_d()?));
    }
    match classify_2step(t)? {
        AlgebraClass::H6 => Ok(t.clone()),
        AlgebraClass::H2 | AlgebraClass::H4 => transferred(t, rat_int(1)),
        _ if in_region_one(t) || in_region_two(t) => Ok(t.clone()),
        _ => {
            let l2 = &t.lambda * &t.lambda;
            let two_x = rat_int(2) * t.d.re();
            if l2 >= two_x {
                let t2 = &l2 - &two_x;
                let s = rational_sqrt(&t2).ok_or_else(|| Error::Unrepresentable(format!("sqrt({t2}) is irrational")))?;
                let cand = TwoStepTriple::new(1, s, Scalar::new(rat_int(0), abs_d()?))?;
                if in_region_one(&cand) || in_region_two(&cand) {
                    return Ok(cand);
                }
                return transferred(&cand, rat_int(0));
            }
            transferred(t, rat_int(0))
        }
    }
}

/// Normal form of a structure within its declared family.
pub fn canonical_form(f: &Family) -> Result<Family> {
    match f {
        Family::TwoStep(t) => Ok(Family::TwoStep(canonical_two_step(t)?)),
        Family::ThreeStep(t) if t.rho == 0 => {
            t.validate()?;
            if t.b.is_zero() {
                return Ok(Family::ThreeStep(ThreeStepTriple::new(0, Scalar::zero(), rat_int(1))?));
            }
            let nb = t.b.abs_exact().ok_or_else(|| Error::Unrepresentable(format!("|{}| is irrational", t.b)))?;
            Ok(Family::ThreeStep(ThreeStepTriple::new(0, Scalar::one(), &t.c / &nb)?))
        }
        other => {
            other.validate()?;
            Ok(other.clone())
        }
    }
}
