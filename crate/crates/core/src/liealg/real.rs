use std::fmt;

use num::{One, Zero};

use super::coalgebra::LieCoalgebra;
use super::structure::StructureEquations;
use crate::error::{Error, Result};
use crate::exterior::{rat, Form, Gen, Scalar};
use crate::linalg::{Matrix, SubspaceBasis, Vector};

/// Structure equations of a real Lie algebra in a real coframe e^1..e^m.
#[derive(Clone, PartialEq, Eq)]
pub struct RealStructureEquations {
    co: LieCoalgebra,
}

impl RealStructureEquations {
    /// Requires rational coefficients and d² = 0.
    pub fn new(d: Vec<Form>) -> Result<Self> {
        let co = LieCoalgebra::new(d)?;
        if let Some(f) = co.equations().iter().find(|f| f.terms().any(|(_, c)| !c.is_real())) {
            return Err(Error::Domain(format!("real structure equations have a non-real coefficient in {f}")));
        }
        co.check_d_squared()?;
        Ok(RealStructureEquations { co })
    }

    pub fn dim(&self) -> usize {
        self.co.dim()
    }

    pub fn coalgebra(&self) -> &LieCoalgebra {
        &self.co
    }

    pub fn d_of(&self, k: usize) -> &Form {
        self.co.d_of(k)
    }

    /// Parses real Salamon notation such as `(0,0,0,0,12,34)` or `(0,0,0,12,13+42,14-35)`.
    pub fn from_salamon(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "Salamon notation must be enclosed in parentheses"))?;
        let offset = s.len() - s.trim_start().len() + 1;
        let entries: Vec<&str> = inner.split(',').collect();
        let m = entries.len();
        if m > 9 {
            return Err(Error::parse(0, "Salamon notation supports at most 9 generators"));
        }
        let mut pos = offset;
        let mut d = Vec::with_capacity(m);
        for entry in entries {
            d.push(parse_entry(entry, m, pos)?);
            pos += entry.len() + 1;
        }
        Self::new(d)
    }

    /// Inverse of [`RealStructureEquations::from_salamon`]; only ±1 coefficients are expressible.
    pub fn to_salamon(&self) -> Result<String> {
        if self.dim() > 9 {
            return Err(Error::Unrepresentable("more than 9 generators".into()));
        }
        let one = Scalar::one();
        let entries: Result<Vec<String>> = self
            .co
            .equations()
            .iter()
            .map(|f| {
                if f.is_zero() {
                    return Ok("0".to_string());
                }
                let mut out = String::new();
                for (mono, c) in f.terms() {
                    let ix = mono.holo();
                    let sign = if *c == one {
                        "+"
                    } else if *c == -&one {
                        "-"
                    } else {
                        return Err(Error::Unrepresentable(format!("coefficient {c} in Salamon notation")));
                    };
                    if !(out.is_empty() && sign == "+") {
                        out.push_str(sign);
                    }
                    out.push_str(&format!("{}{}", ix[0], ix[1]));
                }
                Ok(out)
            })
            .collect();
        Ok(format!("({})", entries?.join(",")))
    }

    /// Complex structure for `J` acting on 1-forms (row k of `j` is J e^{k+1}),
    /// with (1,0)-coframe σ = e^k - iJe^k for the first independent choices of k.
    pub fn complexify(&self, j: &Matrix) -> Result<StructureEquations> {
        let m = self.dim();
        if j.rows() != m || j.cols() != m {
            return Err(Error::DimensionMismatch(format!("J must be {m}x{m}")));
        }
        if !m.is_multiple_of(2) {
            return Err(Error::Domain("odd-dimensional algebra has no almost complex structure".into()));
        }
        let neg_id = {
            let mut x = Matrix::identity(m);
            for k in 0..m {
                x.set(k, k, -Scalar::one());
            }
            x
        };
        if j.mul(j) != neg_id {
            return Err(Error::Domain("J does not square to -1".into()));
        }
        let i = Scalar::i();
        let mut span = SubspaceBasis::zero(m);
        let mut rows = Vec::new();
        for k in 0..m {
            let mut v: Vector = j.row(k).iter().map(|x| -(&i * x)).collect();
            v[k] += &Scalar::one();
            if span.insert(v.clone()) {
                rows.push(v);
            }
        }
        if rows.len() != m / 2 {
            return Err(Error::Alarm("i-eigenspace of J has the wrong dimension".into()));
        }
        self.complexify_with_basis(&rows)
    }

    /// Complex structure equations for an explicit (1,0)-coframe given in e-coordinates.
    pub fn complexify_with_basis(&self, rows: &[Vector]) -> Result<StructureEquations> {
        let m = self.dim();
        let n = rows.len();
        if 2 * n != m || rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(format!("need {} rows of length {m}", m / 2)));
        }
        let mut all: Vec<Vector> = rows.to_vec();
        all.extend(rows.iter().map(|r| r.iter().map(Scalar::conj).collect::<Vector>()));
        let co = self.co.change_coframe(&Matrix::from_rows(m, all))?;
        let eqs = StructureEquations::from_coalgebra(&co, n)?;
        eqs.check_integrability()?;
        Ok(eqs)
    }
}

fn parse_entry(entry: &str, m: usize, pos: usize) -> Result<Form> {
    let e: String = entry.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('−', "-");
    if e == "0" {
        return Ok(Form::zero(m));
    }
    if e.is_empty() {
        return Err(Error::parse(pos, "empty entry"));
    }
    let mut out = Form::zero(m);
    let chars: Vec<char> = e.chars().collect();
    let mut k = 0;
    let mut first = true;
    while k < chars.len() {
        let neg = match chars[k] {
            '+' if !first => {
                k += 1;
                false
            }
            '-' => {
                k += 1;
                true
            }
            _ if first => false,
            c => return Err(Error::parse(pos + k, format!("expected '+' or '-', found '{c}'"))),
        };
        first = false;
        let digits: String = chars[k..].iter().take_while(|c| c.is_ascii_digit()).collect();
        if digits.len() != 2 {
            return Err(Error::parse(pos + k, format!("expected a two-digit term in '{entry}'")));
        }
        let a = digits.as_bytes()[0] - b'0';
        let b = digits.as_bytes()[1] - b'0';
        let (a, b) = (a as usize, b as usize);
        if a == 0 || b == 0 || a > m || b > m || a == b {
            return Err(Error::parse(pos + k, format!("invalid term '{digits}'")));
        }
        let t = Form::product(m, &[Gen::Holo(a), Gen::Holo(b)]);
        out = if neg { &out - &t } else { &out + &t };
        k += 2;
    }
    Ok(out)
}

impl StructureEquations {
    /// Real form in the coframe e^{2j-1} = Re ω^j, e^{2j} = Im ω^j.
    pub fn to_real(&self) -> RealStructureEquations {
        let n = self.n();
        let half = Scalar::real(rat(1, 2));
        let ihalf = Scalar::new(rat(0, 1), rat(1, 2));
        let mut rows = Vec::with_capacity(2 * n);
        for j in 0..n {
            let mut x = vec![Scalar::zero(); 2 * n];
            x[j] = half.clone();
            x[n + j] = half.clone();
            let mut y = vec![Scalar::zero(); 2 * n];
            y[j] = -&ihalf;
            y[n + j] = ihalf.clone();
            rows.push(x);
            rows.push(y);
        }
        let co = self
            .to_coalgebra()
            .change_coframe(&Matrix::from_rows(2 * n, rows))
            .expect("real coframe change is invertible");
        RealStructureEquations::new(co.equations().to_vec()).expect("real parts of integrable equations")
    }
}

impl fmt::Display for RealStructureEquations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_salamon() {
            Ok(s) => write!(f, "{s}"),
            Err(_) => {
                let lines: Vec<String> =
                    self.co.equations().iter().enumerate().map(|(k, d)| format!("de{} = {d}", k + 1)).collect();
                write!(f, "{}", lines.join("; ").replace('w', "e"))
            }
        }
    }
}

impl fmt::Debug for RealStructureEquations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
