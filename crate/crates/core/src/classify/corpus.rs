//! A fixed sample of structures covering every class, and the Frölicher
//! behaviour the family rules predict for them.

use num::Zero;

use crate::error::{Error, Result};
use crate::exterior::{parse_rational, Scalar};
use crate::spectral::BehaviourSignature;

use super::decide::classify;
use super::families::{
    AlgebraClass, Family, GeneralNilpotentParams, NonNilpotentParams, ThreeStepTriple, TwoStepTriple,
};

fn two(rho: u8, lambda: &str, d: &str) -> Family {
    Family::TwoStep(TwoStepTriple::new(rho, parse_rational(lambda).expect("lambda"), d.parse().expect("D")).expect("corpus triple"))
}

fn three(rho: u8, b: &str, c: &str) -> Family {
    Family::ThreeStep(ThreeStepTriple::new(rho, b.parse().expect("B"), parse_rational(c).expect("c")).expect("corpus triple"))
}

fn non_nilpotent(eps: u8, positive: bool) -> Family {
    Family::NonNilpotent(NonNilpotentParams { eps, positive })
}

/// At least one structure per class; h7 included although no behaviour is predicted for it.
pub fn corpus() -> Vec<(Family, AlgebraClass)> {
    use AlgebraClass::*;
    vec![
        (Family::General(GeneralNilpotentParams::parallelizable(0)), H1),
        (two(0, "0", "i"), H2),
        (two(1, "1", "i"), H2),
        (two(0, "0", "1"), H3),
        (two(0, "0", "-1"), H3),
        (two(0, "1", "1/2i"), H4),
        (two(1, "1", "1"), H4),
        (two(1, "0", "0"), H5),
        (two(1, "0", "1/4i"), H5),
        (Family::General(GeneralNilpotentParams::parallelizable(1)), H5),
        (two(0, "1", "0"), H5),
        (two(1, "1", "0"), H6),
        (three(1, "1", "0"), H7),
        (two(0, "0", "0"), H8),
        (three(0, "1", "1"), H9),
        (three(1, "0", "1"), H10),
        (three(1, "2", "1"), H11),
        (three(1, "1+i", "1"), H12),
        (three(1, "1", "1"), H13),
        (three(1, "2", "3"), H14),
        (three(0, "1", "1/4"), H15),
        (three(1, "2", "0"), H15),
        (three(1, "4", "1/2"), H15),
        (three(1, "-1", "0"), H16),
        (non_nilpotent(0, true), H19Minus),
        (non_nilpotent(0, false), H19Minus),
        (non_nilpotent(1, true), H26Plus),
        (non_nilpotent(1, false), H26Plus),
    ]
}

fn signature(drops: &[usize], step: usize) -> BehaviourSignature {
    BehaviourSignature { drops: drops.to_vec(), step }
}

/// Behaviour of the Frölicher sequence read off from the class and the
/// family parameters alone, without computing any cohomology.
pub fn predicted_behaviour(f: &Family) -> Result<BehaviourSignature> {
    use AlgebraClass::*;
    let e1 = signature(&[], 1);
    let e2 = signature(&[1], 2);
    let class = classify(f)?;
    let unsupported = || Error::Unsupported(format!("no behaviour rule for {f} in {class}"));
    Ok(match class {
        H1 | H3 | H6 | H8 | H9 | H10 | H11 | H12 | H19Minus => e1,
        H2 | H4 => {
            if f.is_abelian() {
                e2
            } else {
                e1
            }
        }
        H5 => match f {
            _ if f.is_parallelizable() => e2,
            Family::TwoStep(t) => {
                if t.rho == 1 && !t.d.is_zero() {
                    e1
                } else {
                    e2
                }
            }
            _ => return Err(unsupported()),
        },
        H16 | H26Plus => e2,
        H13 | H14 => signature(&[2], 3),
        H15 => {
            let Family::ThreeStep(t) = f else { return Err(unsupported()) };
            let rho = Scalar::from_int(t.rho as i64);
            let shifted = (&t.b - &rho).norm_sqr();
            let c2 = &t.c * &t.c;
            if t.c.is_zero() && !shifted.is_zero() {
                e2
            } else if !t.c.is_zero() && shifted != c2 {
                if t.rho == 1 {
                    signature(&[2], 3)
                } else {
                    signature(&[1, 2], 3)
                }
            } else {
                return Err(unsupported());
            }
        }
        H7 => return Err(unsupported()),
    })
}
