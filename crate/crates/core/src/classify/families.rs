use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{rat_int, Form, Rational, Scalar};
use crate::liealg::{term, StructureEquations};

/// The eighteen real Lie algebras carrying complex structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraClass {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
    H12,
    H13,
    H14,
    H15,
    H16,
    H19Minus,
    H26Plus,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 18] = [
        AlgebraClass::H1,
        AlgebraClass::H2,
        AlgebraClass::H3,
        AlgebraClass::H4,
        AlgebraClass::H5,
        AlgebraClass::H6,
        AlgebraClass::H7,
        AlgebraClass::H8,
        AlgebraClass::H9,
        AlgebraClass::H10,
        AlgebraClass::H11,
        AlgebraClass::H12,
        AlgebraClass::H13,
        AlgebraClass::H14,
        AlgebraClass::H15,
        AlgebraClass::H16,
        AlgebraClass::H19Minus,
        AlgebraClass::H26Plus,
    ];

    pub fn name(self) -> &'static str {
        use AlgebraClass::*;
        match self {
            H1 => "h1",
            H2 => "h2",
            H3 => "h3",
            H4 => "h4",
            H5 => "h5",
            H6 => "h6",
            H7 => "h7",
            H8 => "h8",
            H9 => "h9",
            H10 => "h10",
            H11 => "h11",
            H12 => "h12",
            H13 => "h13",
            H14 => "h14",
            H15 => "h15",
            H16 => "h16",
            H19Minus => "h19-",
            H26Plus => "h26+",
        }
    }

    /// Real structure equations in Salamon notation.
    pub fn salamon(self) -> &'static str {
        use AlgebraClass::*;
        match self {
            H1 => "(0,0,0,0,0,0)",
            H2 => "(0,0,0,0,12,34)",
            H3 => "(0,0,0,0,0,12+34)",
            H4 => "(0,0,0,0,12,14+23)",
            H5 => "(0,0,0,0,13+42,14+23)",
            H6 => "(0,0,0,0,12,13)",
            H7 => "(0,0,0,12,13,23)",
            H8 => "(0,0,0,0,0,12)",
            H9 => "(0,0,0,0,12,14+25)",
            H10 => "(0,0,0,12,13,14)",
            H11 => "(0,0,0,12,13,14+23)",
            H12 => "(0,0,0,12,13,24)",
            H13 => "(0,0,0,12,13+14,24)",
            H14 => "(0,0,0,12,14,13+42)",
            H15 => "(0,0,0,12,13+42,14+23)",
            H16 => "(0,0,0,12,14,24)",
            H19Minus => "(0,0,0,12,23,14-35)",
            H26Plus => "(0,0,12,13,23,14+25)",
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('−', "-");
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.name() == t)
            .ok_or_else(|| Error::parse(0, format!("unknown algebra class '{s}'")))
    }
}

impl Serialize for AlgebraClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for AlgebraClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_bit(name: &str, v: u8) -> Result<()> {
    if v > 1 {
        return Err(Error::Domain(format!("{name} must be 0 or 1, got {v}")));
    }
    Ok(())
}

/// dω^1 = dω^2 = 0, dω^3 = ρω^{12} + ω^{11̄} + λω^{12̄} + Dω^{22̄}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepTriple {
    pub rho: u8,
    pub lambda: Rational,
    pub d: Scalar,
}

impl TwoStepTriple {
    pub fn new(rho: u8, lambda: Rational, d: Scalar) -> Result<Self> {
        let t = TwoStepTriple { rho, lambda, d };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        check_bit("rho", self.rho)?;
        if self.lambda.is_negative() {
            return Err(Error::Domain(format!("lambda = {} must be >= 0", self.lambda)));
        }
        if self.d.im().is_negative() {
            return Err(Error::Domain(format!("Im D = {} must be >= 0", self.d.im())));
        }
        Ok(())
    }

    pub fn equations(&self) -> Result<StructureEquations> {
        self.validate()?;
        let d3 = [
            term(3, &[1, 2], &[], Scalar::from_int(self.rho as i64)),
            term(3, &[1], &[1], Scalar::one()),
            term(3, &[1], &[2], Scalar::real(self.lambda.clone())),
            term(3, &[2], &[2], self.d.clone()),
        ];
        StructureEquations::integrable(vec![Form::zero(3), Form::zero(3), sum(d3)])
    }
}

/// dω^1 = 0, dω^2 = ω^{11̄}, dω^3 = ρω^{12} + Bω^{12̄} + cω^{21̄}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeStepTriple {
    pub rho: u8,
    pub b: Scalar,
    pub c: Rational,
}

impl ThreeStepTriple {
    pub fn new(rho: u8, b: Scalar, c: Rational) -> Result<Self> {
        let t = ThreeStepTriple { rho, b, c };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        check_bit("rho", self.rho)?;
        if self.c.is_negative() {
            return Err(Error::Domain(format!("c = {} must be >= 0", self.c)));
        }
        if self.rho == 0 && self.b.is_zero() && self.c.is_zero() {
            return Err(Error::Domain("rho = B = c = 0 is not a 3-step structure".into()));
        }
        Ok(())
    }

    pub fn equations(&self) -> Result<StructureEquations> {
        self.validate()?;
        let d3 = [
            term(3, &[1, 2], &[], Scalar::from_int(self.rho as i64)),
            term(3, &[1], &[2], self.b.clone()),
            term(3, &[2], &[1], Scalar::real(self.c.clone())),
        ];
        StructureEquations::integrable(vec![Form::zero(3), term(3, &[1], &[1], Scalar::one()), sum(d3)])
    }
}

/// dω^1 = 0, dω^2 = εω^{11̄},
/// dω^3 = ρω^{12} + (1-ε)Aω^{11̄} + Bω^{12̄} + Cω^{21̄} + (1-ε)Dω^{22̄}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralNilpotentParams {
    pub eps: u8,
    pub rho: u8,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl GeneralNilpotentParams {
    /// dω^3 = ρω^{12}, the complex-parallelizable structures.
    pub fn parallelizable(rho: u8) -> Self {
        GeneralNilpotentParams { eps: 0, rho, a: Scalar::zero(), b: Scalar::zero(), c: Scalar::zero(), d: Scalar::zero() }
    }

    pub fn validate(&self) -> Result<()> {
        check_bit("epsilon", self.eps)?;
        check_bit("rho", self.rho)
    }

    pub fn is_parallelizable(&self) -> bool {
        self.eps == 0 && [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_zero())
    }

    pub fn equations(&self) -> Result<StructureEquations> {
        self.validate()?;
        let e = Scalar::from_int(self.eps as i64);
        let one_minus = Scalar::from_int(1 - self.eps as i64);
        let d3 = [
            term(3, &[1, 2], &[], Scalar::from_int(self.rho as i64)),
            term(3, &[1], &[1], &one_minus * &self.a),
            term(3, &[1], &[2], self.b.clone()),
            term(3, &[2], &[1], self.c.clone()),
            term(3, &[2], &[2], &one_minus * &self.d),
        ];
        StructureEquations::integrable(vec![Form::zero(3), term(3, &[1], &[1], e), sum(d3)])
    }
}

/// dω^1 = 0, dω^2 = ω^{13} + ω^{13̄}, dω^3 = iεω^{11̄} ± i(ω^{12̄} - ω^{21̄}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonNilpotentParams {
    pub eps: u8,
    pub positive: bool,
}

impl NonNilpotentParams {
    pub fn validate(&self) -> Result<()> {
        check_bit("epsilon", self.eps)
    }

    pub fn equations(&self) -> Result<StructureEquations> {
        self.validate()?;
        let i = Scalar::i();
        let pm = if self.positive { i.clone() } else { -&i };
        let d2 = &term(3, &[1, 3], &[], Scalar::one()) + &term(3, &[1], &[3], Scalar::one());
        let d3 = [
            term(3, &[1], &[1], &i * &Scalar::from_int(self.eps as i64)),
            term(3, &[1], &[2], pm.clone()),
            term(3, &[2], &[1], -&pm),
        ];
        StructureEquations::integrable(vec![Form::zero(3), d2, sum(d3)])
    }
}

fn sum<const N: usize>(fs: [Form; N]) -> Form {
    fs.iter().fold(Form::zero(3), |a, b| &a + b)
}

/// A complex structure given in one of the declared normal-form families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    TwoStep(TwoStepTriple),
    ThreeStep(ThreeStepTriple),
    General(GeneralNilpotentParams),
    NonNilpotent(NonNilpotentParams),
}

impl Family {
    pub fn equations(&self) -> Result<StructureEquations> {
        match self {
            Family::TwoStep(t) => t.equations(),
            Family::ThreeStep(t) => t.equations(),
            Family::General(g) => g.equations(),
            Family::NonNilpotent(p) => p.equations(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Family::TwoStep(t) => t.validate(),
            Family::ThreeStep(t) => t.validate(),
            Family::General(g) => g.validate(),
            Family::NonNilpotent(p) => p.validate(),
        }
    }

    /// Abelian complex structures are the nilpotent ones with ρ = 0.
    pub fn is_abelian(&self) -> bool {
        match self {
            Family::TwoStep(t) => t.rho == 0,
            Family::ThreeStep(t) => t.rho == 0,
            Family::General(g) => g.rho == 0,
            Family::NonNilpotent(_) => false,
        }
    }

    pub fn is_parallelizable(&self) -> bool {
        matches!(self, Family::General(g) if g.is_parallelizable())
    }

    pub fn is_nilpotent(&self) -> bool {
        !matches!(self, Family::NonNilpotent(_))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TwoStep(t) => write!(f, "two-step (rho={}, lambda={}, D={})", t.rho, t.lambda, t.d),
            Family::ThreeStep(t) => write!(f, "three-step (rho={}, B={}, c={})", t.rho, t.b, t.c),
            Family::General(g) => {
                write!(f, "nilpotent (eps={}, rho={}, A={}, B={}, C={}, D={})", g.eps, g.rho, g.a, g.b, g.c, g.d)
            }
            Family::NonNilpotent(p) => write!(f, "non-nilpotent (eps={}, sign={})", p.eps, if p.positive { "+" } else { "-" }),
        }
    }
}

/// `n` as a rational, for comparisons with ρ.
pub(crate) fn bit(n: u8) -> Rational {
    rat_int(n as i64)
}
