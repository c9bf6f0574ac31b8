//! Invariant Hermitian metrics on three-dimensional complex structures and
//! the balanced, Gauduchon and strongly Gauduchon conditions.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::classify::{classify, AlgebraClass, Family, TwoStepTriple};
use crate::cohomology::DoubleComplex;
use crate::error::{Error, Result};
use crate::exterior::{rat, rat_int, Basis, Form, Rational, Scalar};
use crate::liealg::{term, StructureEquations};
use crate::spectral::degeneration_step;

/// 2Ω = i(r²ω^{11̄} + s²ω^{22̄} + t²ω^{33̄}) + uω^{12̄} - ūω^{21̄} + vω^{23̄} - v̄ω^{32̄} + zω^{13̄} - z̄ω^{31̄}
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermitianParams {
    #[serde(serialize_with = "as_string")]
    pub r2: Rational,
    #[serde(serialize_with = "as_string")]
    pub s2: Rational,
    #[serde(serialize_with = "as_string")]
    pub t2: Rational,
    pub u: Scalar,
    pub v: Scalar,
    pub z: Scalar,
}

fn as_string<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Positivity {
    Positive,
    Degenerate,
    Indefinite,
}

impl HermitianParams {
    pub fn diagonal(r2: Rational, s2: Rational, t2: Rational) -> Self {
        HermitianParams { r2, s2, t2, u: Scalar::zero(), v: Scalar::zero(), z: Scalar::zero() }
    }

    pub fn standard() -> Self {
        Self::diagonal(rat_int(1), rat_int(1), rat_int(1))
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        HermitianParams {
            r2: &self.r2 * k,
            s2: &self.s2 * k,
            t2: &self.t2 * k,
            u: self.u.scale(k),
            v: self.v.scale(k),
            z: self.z.scale(k),
        }
    }

    /// r²s²t² + 2Re(iūv̄z) - t²|u|² - r²|v|² - s²|z|², a positive multiple of Ω³/vol.
    pub fn determinant(&self) -> Rational {
        let iuvz = &(&(&Scalar::i() * &self.u.conj()) * &self.v.conj()) * &self.z;
        &self.r2 * &self.s2 * &self.t2 + rat_int(2) * iuvz.re()
            - &self.t2 * self.u.norm_sqr()
            - &self.r2 * self.v.norm_sqr()
            - &self.s2 * self.z.norm_sqr()
    }

    pub fn positivity(&self) -> Positivity {
        let det = self.determinant();
        if det.is_zero() {
            return Positivity::Degenerate;
        }
        let positive = self.r2.is_positive()
            && &self.r2 * &self.s2 > self.u.norm_sqr()
            && &self.s2 * &self.t2 > self.v.norm_sqr()
            && &self.r2 * &self.t2 > self.z.norm_sqr()
            && det.is_positive();
        if positive {
            Positivity::Positive
        } else {
            Positivity::Indefinite
        }
    }
}

pub fn is_positive(p: &HermitianParams) -> Positivity {
    p.positivity()
}

/// The fundamental form Ω itself (not 2Ω).
pub fn build_omega(p: &HermitianParams) -> Form {
    let i = Scalar::i();
    let parts = [
        term(3, &[1], &[1], i.scale(&p.r2)),
        term(3, &[2], &[2], i.scale(&p.s2)),
        term(3, &[3], &[3], i.scale(&p.t2)),
        term(3, &[1], &[2], p.u.clone()),
        term(3, &[2], &[1], -&p.u.conj()),
        term(3, &[2], &[3], p.v.clone()),
        term(3, &[3], &[2], -&p.v.conj()),
        term(3, &[1], &[3], p.z.clone()),
        term(3, &[3], &[1], -&p.z.conj()),
    ];
    parts.iter().fold(Form::zero(3), |a, b| &a + b).scale(&Scalar::real(rat(1, 2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MetricFlags {
    pub balanced: bool,
    pub gauduchon: bool,
    #[serde(rename = "sG")]
    pub strongly_gauduchon: bool,
}

/// Balanced: d(Ω²) = 0. Gauduchon: ∂∂̄(Ω²) = 0. sG: ∂(Ω²) ∈ ∂̄(⋀^{3,1}).
pub fn metric_flags(eqs: &StructureEquations, p: &HermitianParams) -> Result<MetricFlags> {
    if eqs.n() != 3 {
        return Err(Error::DimensionMismatch(format!("metrics are implemented for n = 3, got {}", eqs.n())));
    }
    if p.positivity() != Positivity::Positive {
        return Err(Error::NotPositive);
    }
    let dc = DoubleComplex::new(eqs)?;
    let omega = build_omega(p);
    let omega2 = omega.wedge(&omega);
    let balanced = eqs.differential(&omega2).is_zero();
    let (del, delbar) = eqs.del_and_delbar(&omega2)?;
    let gauduchon = eqs.del(&delbar)?.is_zero();
    let target = Basis::bidegree(3, 3, 2).coordinates(&del)?;
    let strongly_gauduchon = dc.delbar_matrix(3, 1).image().contains(&target);
    let flags = MetricFlags { balanced, gauduchon, strongly_gauduchon };
    if (balanced && !strongly_gauduchon) || (strongly_gauduchon && !gauduchon) {
        return Err(Error::Alarm(format!("implication balanced => sG => Gauduchon fails: {flags:?}")));
    }
    Ok(flags)
}

/// Answer of an existence decider, with a verified metric when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Existence {
    pub exists: bool,
    pub witness: Option<HermitianParams>,
}

impl Existence {
    fn none() -> Self {
        Existence { exists: false, witness: None }
    }
}

fn checked(eqs: &StructureEquations, p: HermitianParams, want_balanced: bool) -> Result<Existence> {
    let flags = metric_flags(eqs, &p)?;
    let ok = if want_balanced { flags.balanced } else { flags.strongly_gauduchon };
    if !ok {
        return Err(Error::Alarm(format!("witness {p:?} fails its own condition ({flags:?})")));
    }
    Ok(Existence { exists: true, witness: Some(p) })
}

/// Balanced metrics on a two-step triple, using the ansatz r² = t² = 1, v = z = 0.
fn balanced_two_step(t: &TwoStepTriple) -> Option<HermitianParams> {
    let (x, y) = (t.d.re().clone(), t.d.im().clone());
    let l = &t.lambda;
    if l.is_zero() {
        if y.is_zero() && x.is_negative() {
            return Some(HermitianParams::diagonal(rat_int(1), -x, rat_int(1)));
        }
        return None;
    }
    let l2 = l * l;
    if (&l2 * &l2 - rat_int(4) * &x * &l2 - rat_int(4) * &y * &y).is_positive() {
        let s2 = (&l2 - rat_int(2) * &x) / rat_int(2);
        let u = Scalar::new(&y / l, (&s2 + &x) / l);
        return Some(HermitianParams { u, ..HermitianParams::diagonal(rat_int(1), s2, rat_int(1)) });
    }
    None
}

/// Whether the structure admits a balanced metric.
pub fn balanced_exists(f: &Family) -> Result<Existence> {
    f.validate()?;
    let eqs = f.equations()?;
    let witness = match f {
        Family::TwoStep(t) => balanced_two_step(t),
        Family::General(g) if g.is_parallelizable() => Some(HermitianParams::standard()),
        Family::General(g) if g.eps == 1 => None,
        Family::General(_) => {
            return Err(Error::Unsupported("balanced existence needs a two-step normal form".into()));
        }
        Family::ThreeStep(_) => None,
        Family::NonNilpotent(p) if p.eps == 0 => Some(HermitianParams::diagonal(rat_int(1), rat_int(2), rat_int(2))),
        Family::NonNilpotent(_) => None,
    };
    match witness {
        Some(p) => checked(&eqs, p, true),
        None => Ok(Existence::none()),
    }
}

/// Whether some complex structure on the algebra admits an sG metric.
pub fn sg_exists_for_class(c: AlgebraClass) -> bool {
    use AlgebraClass::*;
    matches!(c, H1 | H2 | H3 | H4 | H5 | H6 | H19Minus)
}

/// Whether this complex structure admits an sG metric.
///
/// Non-abelian nilpotent structures with ε = 0 make every metric sG; abelian
/// ones are sG exactly when balanced.
pub fn sg_exists(f: &Family) -> Result<Existence> {
    let class = classify(f)?;
    if !sg_exists_for_class(class) {
        return Ok(Existence::none());
    }
    let eqs = f.equations()?;
    // nilpotent, non-abelian and in h1..h6 forces ε = 0
    let every_metric_sg = f.is_nilpotent() && !f.is_abelian();
    let balanced = match balanced_exists(f) {
        Ok(b) => Some(b),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = &balanced {
        if b.exists {
            return checked(&eqs, b.witness.clone().expect("witness"), false);
        }
    }
    if every_metric_sg {
        return checked(&eqs, HermitianParams::standard(), false);
    }
    match balanced {
        Some(_) => Ok(Existence::none()),
        None => Err(Error::Unsupported("sG existence for this abelian structure needs a two-step normal form".into())),
    }
}

/// One row of the sG versus Frölicher degeneration check.
#[derive(Clone, Debug, Serialize)]
pub struct SgDegeneration {
    pub structure: String,
    pub class: AlgebraClass,
    pub sg_exists: bool,
    pub step: usize,
    pub violation: bool,
}

/// For each structure: sG existence and the degeneration step. An sG metric
/// forces degeneration by E_2, and by E_1 away from h5.
pub fn sg_implies_e2(structures: &[Family]) -> Result<Vec<SgDegeneration>> {
    structures
        .iter()
        .map(|f| {
            let class = classify(f)?;
            let sg = sg_exists(f)?.exists;
            let step = degeneration_step(&f.equations()?)?;
            let violation = sg && (step > 2 || (class != AlgebraClass::H5 && step != 1));
            Ok(SgDegeneration { structure: f.to_string(), class, sg_exists: sg, step, violation })
        })
        .collect()
}

/// r = 1, v = 0, u and z real, s² = t² = 2(u² + z² + 1).
pub fn h19_sample_metric(u: Rational, z: Rational) -> HermitianParams {
    let s2 = rat_int(2) * (&u * &u + &z * &z + Rational::one());
    HermitianParams {
        r2: rat_int(1),
        s2: s2.clone(),
        t2: s2,
        u: Scalar::real(u),
        v: Scalar::zero(),
        z: Scalar::real(z),
    }
}
