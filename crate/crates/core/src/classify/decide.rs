use std::sync::OnceLock;

use num::{Signed, Zero};

use super::families::{bit, AlgebraClass, Family, GeneralNilpotentParams, ThreeStepTriple, TwoStepTriple};
use crate::error::{Error, Result};
use crate::exterior::{rat_int, Scalar};
use crate::liealg::{fingerprint, Fingerprint, RealStructureEquations, StructureEquations};

/// Decides the class of a two-step structure from ρ, λ and D = x + iy.
pub fn classify_2step(t: &TwoStepTriple) -> Result<AlgebraClass> {
    t.validate()?;
    let rho = bit(t.rho);
    let (x, y) = (t.d.re(), t.d.im());
    if t.lambda == rho {
        return Ok(if y.is_positive() {
            AlgebraClass::H2
        } else {
            match (t.rho, x.is_zero()) {
                (0, false) => AlgebraClass::H3,
                (0, true) => AlgebraClass::H8,
                (_, false) => AlgebraClass::H4,
                (_, true) => AlgebraClass::H6,
            }
        });
    }
    let l2 = &t.lambda * &t.lambda;
    let lhs = rat_int(4) * y * y;
    let rhs = (&rho - &l2) * (rat_int(4) * x + &rho - &l2);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => AlgebraClass::H2,
        std::cmp::Ordering::Equal => AlgebraClass::H4,
        std::cmp::Ordering::Less => AlgebraClass::H5,
    })
}

/// Δ = c⁴ - 2(|B|²+1)c² + (|B|²-1)²
pub fn three_step_discriminant(b: &Scalar, c: &crate::exterior::Rational) -> crate::exterior::Rational {
    let nb = b.norm_sqr();
    let c2 = c * c;
    let one = rat_int(1);
    &c2 * &c2 - rat_int(2) * (&nb + &one) * &c2 + (&nb - &one) * (&nb - &one)
}

/// Decides the class of a three-step structure from ρ, B and c.
pub fn classify_3step(t: &ThreeStepTriple) -> Result<AlgebraClass> {
    t.validate()?;
    let one = Scalar::from_int(1);
    if t.rho == 0 {
        // B ≠ 0 rescales to (0, 1, c/|B|), which is h9 exactly when c/|B| = 1
        return Ok(if !t.b.is_zero() && &t.c * &t.c == t.b.norm_sqr() { AlgebraClass::H9 } else { AlgebraClass::H15 });
    }
    if t.b == one && t.c.is_zero() {
        return Ok(AlgebraClass::H7);
    }
    if t.c.is_zero() && t.b.norm_sqr() == rat_int(1) {
        return Ok(AlgebraClass::H16);
    }
    if !t.c.is_zero() && &t.c * &t.c == (&t.b - &one).norm_sqr() {
        return Ok(if t.b.is_zero() {
            AlgebraClass::H10
        } else if t.b.is_real() {
            AlgebraClass::H11
        } else {
            AlgebraClass::H12
        });
    }
    let delta = three_step_discriminant(&t.b, &t.c);
    Ok(if delta.is_negative() {
        AlgebraClass::H13
    } else if delta.is_zero() {
        AlgebraClass::H14
    } else {
        AlgebraClass::H15
    })
}

fn classify_general(g: &GeneralNilpotentParams) -> Result<AlgebraClass> {
    g.validate()?;
    if g.is_parallelizable() {
        return Ok(if g.rho == 0 { AlgebraClass::H1 } else { AlgebraClass::H5 });
    }
    identify(&g.equations()?)
}

/// Class of a structure from its family parameters.
pub fn classify(f: &Family) -> Result<AlgebraClass> {
    match f {
        Family::TwoStep(t) => classify_2step(t),
        Family::ThreeStep(t) => classify_3step(t),
        Family::General(g) => classify_general(g),
        Family::NonNilpotent(p) => {
            p.validate()?;
            Ok(if p.eps == 0 { AlgebraClass::H19Minus } else { AlgebraClass::H26Plus })
        }
    }
}

/// Family decision cross-checked against the fingerprint of the real algebra.
pub fn classify_checked(f: &Family) -> Result<AlgebraClass> {
    let by_family = classify(f)?;
    let by_invariants = identify(&f.equations()?)?;
    if by_family != by_invariants {
        return Err(Error::Alarm(format!("family decision {by_family} disagrees with invariants {by_invariants}")));
    }
    Ok(by_family)
}

/// Fingerprints of the eighteen algebras, computed from their Salamon equations.
pub fn fingerprint_table() -> &'static [(AlgebraClass, Fingerprint)] {
    static TABLE: OnceLock<Vec<(AlgebraClass, Fingerprint)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        AlgebraClass::ALL
            .iter()
            .map(|&c| {
                let real = RealStructureEquations::from_salamon(c.salamon()).expect("valid Salamon equations");
                (c, fingerprint(&real).expect("fingerprint of a listed algebra"))
            })
            .collect()
    })
}

pub fn identify_real(real: &RealStructureEquations) -> Result<AlgebraClass> {
    if real.dim() != 6 {
        return Err(Error::Domain(format!("only 6-dimensional algebras are tabulated, got {}", real.dim())));
    }
    let fp = fingerprint(real)?;
    let hits: Vec<AlgebraClass> = fingerprint_table().iter().filter(|(_, f)| *f == fp).map(|(c, _)| *c).collect();
    match hits.as_slice() {
        [] => Err(Error::NoMatch(fp.to_string())),
        [c] => Ok(*c),
        many => Err(Error::Ambiguous(many.iter().map(|c| c.name()).collect::<Vec<_>>().join(", "))),
    }
}

/// Class of arbitrary complex structure equations on a 6-dimensional algebra.
pub fn identify(eqs: &StructureEquations) -> Result<AlgebraClass> {
    eqs.check_integrability()?;
    identify_real(&eqs.to_real())
}
