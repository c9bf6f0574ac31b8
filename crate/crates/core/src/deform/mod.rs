//! Explicit one-parameter deformation families and sweeps of their invariants.

pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{canonical_form, classify_checked, identify, pulls_back, AlgebraClass, Family, ThreeStepTriple, TwoStepTriple};
use crate::error::{Error, Result};
use crate::exterior::{rat, rat_int, Form, Rational, Scalar};
use crate::hermitian::{balanced_exists, sg_exists, HermitianParams};
use crate::liealg::{term, StructureEquations};
use crate::linalg::Matrix;
use crate::spectral::{FrolicherSequence, TermDims};

/// The deformation families; each takes one (Gaussian-)rational parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeformationFamily {
    /// (1, λ, i·d(t,λ)) on h5, parameter t ∈ [0, 1/2).
    H5Degeneration {
        #[serde(serialize_with = "as_string")]
        lambda: Rational,
    },
    /// The h15 family with s ∈ [-1, 1] in place of sin t.
    H15Behaviours,
    /// (1, λ, 0) on h5 with λ² ∈ [0, 1/2).
    H5BalancedLambda,
    /// (1, 0, x) on h5 with x > -1/4.
    H5BalancedX,
    /// Deformation of the abelian structure on h4, parameter a with |a| < 1.
    H4BalancedLoss,
}

fn as_string<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl fmt::Display for DeformationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformationFamily::H5Degeneration { lambda } => write!(f, "h5_degeneration(lambda={lambda})"),
            DeformationFamily::H15Behaviours => write!(f, "h15_behaviours"),
            DeformationFamily::H5BalancedLambda => write!(f, "h5_balanced_lambda"),
            DeformationFamily::H5BalancedX => write!(f, "h5_balanced_x"),
            DeformationFamily::H4BalancedLoss => write!(f, "h4_balanced_loss"),
        }
    }
}

impl FromStr for DeformationFamily {
    type Err = Error;

    /// `h15_behaviours`, `h4_balanced_loss`, `h5_balanced_lambda`, `h5_balanced_x`, `h5_degeneration:<lambda>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(l) = s.strip_prefix("h5_degeneration") {
            let l = l.trim_start_matches([':', '=']).trim_start_matches("lambda=");
            let lambda = crate::exterior::parse_rational(l)
                .ok_or_else(|| Error::parse(0, format!("h5_degeneration needs a rational lambda, got '{l}'")))?;
            return Ok(DeformationFamily::H5Degeneration { lambda });
        }
        match s {
            "h15_behaviours" => Ok(DeformationFamily::H15Behaviours),
            "h5_balanced_lambda" => Ok(DeformationFamily::H5BalancedLambda),
            "h5_balanced_x" => Ok(DeformationFamily::H5BalancedX),
            "h4_balanced_loss" => Ok(DeformationFamily::H4BalancedLoss),
            _ => Err(Error::parse(0, format!("unknown deformation family '{s}'"))),
        }
    }
}

/// One member of a family: the equations in the family's own coframe and the
/// normal-form structure they are equivalent to.
#[derive(Clone, Debug)]
pub struct Instance {
    pub equations: StructureEquations,
    pub normal_form: Result<Family>,
}

fn real_param(p: &Scalar) -> Result<Rational> {
    if !p.is_real() {
        return Err(Error::Domain(format!("parameter {p} must be real")));
    }
    Ok(p.re().clone())
}

/// d(t, λ) for the h5 family: the imaginary part of D.
pub fn degeneration_d(t: &Rational, lambda: &Rational) -> Rational {
    let l2 = lambda * lambda;
    if lambda.is_zero() {
        t.clone()
    } else if l2 < rat(1, 2) {
        t * &l2 / rat_int(4)
    } else if l2 < rat_int(1) {
        t * (rat_int(1) - &l2) / rat_int(4)
    } else {
        -(t * (rat_int(1) - &l2) / rat_int(4))
    }
}

/// dω^2 = ω^{11̄}, dω^3 = ((1-s)/2)ω^{12} + 2ω^{12̄} + ((1+s)/4)ω^{21̄}.
pub fn h15_raw(s: &Rational) -> Result<StructureEquations> {
    let d3 = &(&term(3, &[1, 2], &[], Scalar::real((rat_int(1) - s) / rat_int(2)))
        + &term(3, &[1], &[2], Scalar::from_int(2)))
        + &term(3, &[2], &[1], Scalar::real((rat_int(1) + s) / rat_int(4)));
    StructureEquations::integrable(vec![Form::zero(3), term(3, &[1], &[1], Scalar::one()), d3])
}

/// dη^3 = (i/2)η^{11̄} + (1/2)η^{12̄} + (1/2)η^{21̄}, the abelian structure on h4.
pub fn h4_eta() -> StructureEquations {
    let half = Scalar::ratio(1, 2);
    let d3 = &(&term(3, &[1], &[1], Scalar::gauss(0, 1, 1, 2)) + &term(3, &[1], &[2], half.clone()))
        + &term(3, &[2], &[1], half);
    StructureEquations::integrable(vec![Form::zero(3), Form::zero(3), d3]).expect("abelian h4")
}

/// Complex structure with (1,0)-forms μ^1 = η^1 + aη^1̄ - iaη^2̄, μ^2 = η^2,
/// μ^3 = η^3, derived from the η equations by a change of real coframe.
pub fn h4_raw_derived(a: &Scalar) -> Result<StructureEquations> {
    let z = Scalar::zero;
    let one = Scalar::one;
    let ia = &Scalar::i() * a;
    let mut rows = vec![
        vec![one(), z(), z(), a.clone(), -&ia, z()],
        vec![z(), one(), z(), z(), z(), z()],
        vec![z(), z(), one(), z(), z(), z()],
    ];
    let conj: Vec<Vec<Scalar>> = rows.iter().map(|r| r[3..].iter().chain(&r[..3]).map(Scalar::conj).collect()).collect();
    rows.extend(conj);
    let co = h4_eta().to_coalgebra().change_coframe(&Matrix::from_rows(6, rows))?;
    let eqs = StructureEquations::from_coalgebra(&co, 3)?;
    eqs.check_integrability()?;
    Ok(eqs)
}

/// Closed form of the same equations: 2(1-|a|²)dμ^3 = 2āμ^{12} + iμ^{11̄} + μ^{12̄} + μ^{21̄} - i|a|²μ^{22̄}.
pub fn h4_raw_closed_form(a: &Scalar) -> Result<StructureEquations> {
    let n2 = a.norm_sqr();
    let k = Scalar::real((rat_int(2) * (rat_int(1) - &n2)).recip());
    let parts = [
        term(3, &[1, 2], &[], a.conj().scale(&rat_int(2))),
        term(3, &[1], &[1], Scalar::i()),
        term(3, &[1], &[2], Scalar::one()),
        term(3, &[2], &[1], Scalar::one()),
        term(3, &[2], &[2], Scalar::new(rat_int(0), -n2)),
    ];
    let d3 = parts.iter().fold(Form::zero(3), |x, y| &x + y).scale(&k);
    StructureEquations::integrable(vec![Form::zero(3), Form::zero(3), d3])
}

/// Coframe change from μ to the normal form (1, 1/|a|, (1-|a|²)/(4|a|²)), a ≠ 0.
/// Three steps: rescale μ^3 so the ω^{12} coefficient is 1, pass to τ, then
/// rotate so the ω^{12̄} coefficient -1/a becomes its modulus.
pub fn h4_normalizing_coframe(a: &Scalar) -> Result<Matrix> {
    let abs = a.abs_exact().ok_or_else(|| Error::Unrepresentable(format!("|{a}| is irrational")))?;
    let z = Scalar::zero;
    let one = Scalar::one;
    let i = Scalar::i();
    let ab = a.conj();
    let k = &Scalar::real(rat_int(1) - a.norm_sqr()) / &ab;
    let step1 = Matrix::from_rows(3, vec![vec![one(), z(), z()], vec![z(), one(), z()], vec![z(), z(), k]]);
    let m2 = -&(&i * &ab.scale(&rat_int(2)));
    let step2 = Matrix::from_rows(3, vec![vec![one(), -&i, z()], vec![z(), m2.clone(), z()], vec![z(), z(), m2]]);
    // w = B/|B| with B = -1/a; p = 1 + w satisfies p/p̄ = w
    let w = -&(&ab / &Scalar::real(abs));
    let p = if w == -&one() { i.clone() } else { &one() + &w };
    let q = p.conj();
    let pq = &p * &q;
    let step3 = Matrix::from_rows(3, vec![vec![p, z(), z()], vec![z(), q, z()], vec![z(), z(), pq]]);
    Ok(step3.mul(&step2).mul(&step1))
}

/// The normal-form triple of the h4 family at a ≠ 0.
pub fn h4_normal_triple(a: &Scalar) -> Result<TwoStepTriple> {
    let abs = a.abs_exact().ok_or_else(|| Error::Unrepresentable(format!("|{a}| is irrational")))?;
    let n2 = a.norm_sqr();
    TwoStepTriple::new(1, abs.recip(), Scalar::real((rat_int(1) - &n2) / (rat_int(4) * n2)))
}

/// 2Ω = ir²μ^{11̄} + i|a|²r²μ^{22̄} + it²μ^{33̄} on the h4 family.
pub fn h4_balanced_ansatz(a: &Scalar, r2: Rational, t2: Rational) -> HermitianParams {
    let s2 = a.norm_sqr() * &r2;
    HermitianParams::diagonal(r2, s2, t2)
}

impl DeformationFamily {
    pub fn check_domain(&self, p: &Scalar) -> Result<()> {
        let out = |why: &str| Err(Error::Domain(format!("{p} is outside the domain of {self}: {why}")));
        match self {
            DeformationFamily::H4BalancedLoss => {
                if p.norm_sqr() >= rat_int(1) {
                    return out("|a| < 1");
                }
            }
            DeformationFamily::H5Degeneration { lambda } => {
                let t = real_param(p)?;
                if lambda.is_negative() || lambda == &rat_int(1) {
                    return Err(Error::Domain(format!("lambda = {lambda} must be >= 0 and != 1")));
                }
                if t.is_negative() || t >= rat(1, 2) {
                    return out("t in [0, 1/2)");
                }
            }
            DeformationFamily::H15Behaviours => {
                if real_param(p)?.abs() > rat_int(1) {
                    return out("s in [-1, 1]");
                }
            }
            DeformationFamily::H5BalancedLambda => {
                let l = real_param(p)?;
                if l.is_negative() || &l * &l >= rat(1, 2) {
                    return out("lambda >= 0, lambda^2 < 1/2");
                }
            }
            DeformationFamily::H5BalancedX => {
                if real_param(p)? <= rat(-1, 4) {
                    return out("x > -1/4");
                }
            }
        }
        Ok(())
    }

    pub fn instantiate(&self, p: &Scalar) -> Result<Instance> {
        self.check_domain(p)?;
        match self {
            DeformationFamily::H5Degeneration { lambda } => {
                let d = Scalar::new(rat_int(0), degeneration_d(&real_param(p)?, lambda));
                let t = TwoStepTriple::new(1, lambda.clone(), d)?;
                Ok(Instance { equations: t.equations()?, normal_form: Ok(Family::TwoStep(t)) })
            }
            DeformationFamily::H5BalancedLambda => {
                let t = TwoStepTriple::new(1, real_param(p)?, Scalar::zero())?;
                Ok(Instance { equations: t.equations()?, normal_form: Ok(Family::TwoStep(t)) })
            }
            DeformationFamily::H5BalancedX => {
                let t = TwoStepTriple::new(1, rat_int(0), Scalar::real(real_param(p)?))?;
                Ok(Instance { equations: t.equations()?, normal_form: Ok(Family::TwoStep(t)) })
            }
            DeformationFamily::H15Behaviours => {
                let s = real_param(p)?;
                let raw = h15_raw(&s)?;
                let one = rat_int(1);
                let nf = if s == one {
                    canonical_form(&Family::ThreeStep(ThreeStepTriple::new(0, Scalar::from_int(2), rat(1, 2))?))
                } else {
                    let den = &one - &s;
                    ThreeStepTriple::new(1, Scalar::real(rat_int(4) / &den), (&one + &s) / (rat_int(2) * &den))
                        .map(Family::ThreeStep)
                };
                Ok(Instance { equations: raw, normal_form: nf })
            }
            DeformationFamily::H4BalancedLoss => {
                let raw = h4_raw_derived(p)?;
                let nf = if p.is_zero() {
                    TwoStepTriple::new(0, rat_int(1), Scalar::ratio(1, 4)).map(Family::TwoStep)
                } else {
                    h4_normal_triple(p).map(Family::TwoStep)
                };
                Ok(Instance { equations: raw, normal_form: nf })
            }
        }
    }
}

/// Verifies that the raw equations of an instance carry over to its normal form
/// by an explicit coframe change, where one is known.
pub fn verify_instance(fam: &DeformationFamily, p: &Scalar, inst: &Instance) -> Result<bool> {
    let Ok(nf) = &inst.normal_form else { return Ok(true) };
    let target = nf.equations()?;
    let m = match fam {
        DeformationFamily::H15Behaviours => {
            // at s = 1 the abelian raw triple (0, 2, 1/2) rescales to (0, 1, 1/4)
            let k = if p.re() == &rat_int(1) { Scalar::ratio(1, 2) } else { Scalar::real(rat_int(2) / (rat_int(1) - p.re())) };
            Matrix::from_rows(3, vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), k],
            ])
        }
        DeformationFamily::H4BalancedLoss if !p.is_zero() => h4_normalizing_coframe(p)?,
        DeformationFamily::H4BalancedLoss => {
            // η in terms of the ω of the (0, 1, 1/4) normal form
            let i = Scalar::i();
            let eta_in_omega = Matrix::from_rows(3, vec![
                vec![Scalar::from_int(2), Scalar::one(), Scalar::zero()],
                vec![i.scale(&rat_int(4)), i.clone(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), i.scale(&rat_int(2))],
            ]);
            return Ok(pulls_back(&target, &h4_eta(), &eta_in_omega) && inst.equations == h4_eta());
        }
        _ => Matrix::identity(3),
    };
    Ok(pulls_back(&inst.equations, &target, &m))
}

/// One evaluated family member.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub parameter: Scalar,
    pub normal_form: Option<String>,
    pub class: Option<AlgebraClass>,
    /// dim E_r^{p,q} for r = 1..=4
    pub pages: Vec<TermDims>,
    pub behaviour: Option<String>,
    pub step: Option<usize>,
    pub sg_exists: Option<bool>,
    pub balanced_exists: Option<bool>,
    pub error: Option<String>,
}

fn evaluate(fam: &DeformationFamily, p: &Scalar) -> SweepRow {
    let mut row = SweepRow {
        parameter: p.clone(),
        normal_form: None,
        class: None,
        pages: Vec::new(),
        behaviour: None,
        step: None,
        sg_exists: None,
        balanced_exists: None,
        error: None,
    };
    if let Err(e) = fill_row(fam, p, &mut row) {
        row.error = Some(e.to_string());
    }
    row
}

fn fill_row(fam: &DeformationFamily, p: &Scalar, row: &mut SweepRow) -> Result<()> {
    let inst = fam.instantiate(p)?;
    let seq = FrolicherSequence::new(&inst.equations)?;
    seq.verify()?;
    row.pages = (1..=4).map(|r| seq.dims(r)).collect::<Result<_>>()?;
    row.behaviour = Some(seq.behaviour().to_string());
    row.step = Some(seq.degeneration_step());
    let by_invariants = identify(&inst.equations)?;
    row.class = Some(by_invariants);
    let nf = inst.normal_form.clone()?;
    row.normal_form = Some(nf.to_string());
    if !verify_instance(fam, p, &inst)? {
        return Err(Error::Alarm(format!("{fam} at {p}: raw equations do not map to {nf}")));
    }
    let class = classify_checked(&nf)?;
    if class != by_invariants {
        return Err(Error::Alarm(format!("normal form class {class} differs from {by_invariants}")));
    }
    row.sg_exists = Some(sg_exists(&nf)?.exists);
    row.balanced_exists = Some(balanced_exists(&nf)?.exists);
    Ok(())
}

fn param_key(p: &Scalar) -> (Rational, Rational) {
    (p.re().clone(), p.im().clone())
}

/// Evaluates every parameter independently; rows are sorted by parameter and
/// failures are reported per row.
pub fn sweep(fam: &DeformationFamily, params: &[Scalar]) -> Vec<SweepRow> {
    let mut rows: Vec<SweepRow> = params.par_iter().map(|p| evaluate(fam, p)).collect();
    rows.sort_by_key(|r| param_key(&r.parameter));
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Jump {
    UpperJump,
    LowerJump,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpCell {
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub center: usize,
    pub nearby: Vec<usize>,
    pub jump: Jump,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemicontinuityReport {
    pub center: Scalar,
    pub nearby: Vec<Scalar>,
    pub center_step: usize,
    pub nearby_steps: Vec<usize>,
    pub cells: Vec<JumpCell>,
}

impl SemicontinuityReport {
    pub fn cell(&self, r: usize, p: usize, q: usize) -> Option<&JumpCell> {
        self.cells.iter().find(|c| (c.r, c.p, c.q) == (r, p, q))
    }
}

/// Compares dim E_r^{p,q} at `center` with every `nearby` parameter, for r = 1..=4.
pub fn semicontinuity_report(fam: &DeformationFamily, center: &Scalar, nearby: &[Scalar]) -> Result<SemicontinuityReport> {
    let seq_of = |p: &Scalar| -> Result<FrolicherSequence> { FrolicherSequence::new(&fam.instantiate(p)?.equations) };
    let c = seq_of(center)?;
    let others = nearby.par_iter().map(seq_of).collect::<Result<Vec<_>>>()?;
    let n = c.n();
    let mut cells = Vec::new();
    for r in 1..=c.infinity() {
        for p in 0..=n {
            for q in 0..=n {
                let cv = c.dim(r, p, q)?;
                let nv = others.iter().map(|s| s.dim(r, p, q)).collect::<Result<Vec<_>>>()?;
                if nv.is_empty() {
                    continue;
                }
                let jump = if nv.iter().all(|&v| cv > v) {
                    Jump::UpperJump
                } else if nv.iter().all(|&v| cv < v) {
                    Jump::LowerJump
                } else {
                    continue;
                };
                cells.push(JumpCell { r, p, q, center: cv, nearby: nv, jump });
            }
        }
    }
    Ok(SemicontinuityReport {
        center: center.clone(),
        nearby: nearby.to_vec(),
        center_step: c.degeneration_step(),
        nearby_steps: others.iter().map(|s| s.degeneration_step()).collect(),
        cells,
    })
}

/// Parses `lo:hi:step` into the rational grid lo, lo+step, ... ≤ hi.
pub fn parse_grid(s: &str) -> Result<Vec<Scalar>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::parse(0, format!("grid '{s}' is not lo:hi:step")));
    }
    let mut pos = 0;
    let mut vals = Vec::new();
    for part in &parts {
        vals.push(crate::exterior::parse_rational(part).ok_or_else(|| Error::parse(pos, format!("'{part}' is not rational")))?);
        pos += part.len() + 1;
    }
    let (lo, hi, step) = (&vals[0], &vals[1], &vals[2]);
    if !step.is_positive() {
        return Err(Error::parse(0, "grid step must be positive"));
    }
    let mut out = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        out.push(Scalar::real(x.clone()));
        x += step;
        if out.len() > 100_000 {
            return Err(Error::Domain("grid has more than 100000 points".into()));
        }
    }
    Ok(out)
}
