use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};

use super::monomial::{Gen, Monomial, MAX_GENERATORS};
use super::scalar::Scalar;

/// Element of ⋀(ω^1..ω^n, ω^1̄..ω^n̄) with exact coefficients. Zero terms are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Form {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators supported");
        Form { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Form::monomial(n, Monomial::one(), Scalar::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        assert!(m.max_index() <= n, "monomial {m} uses generators beyond {n}");
        let mut f = Form::zero(n);
        f.add_term(m, &c);
        f
    }

    pub fn generator(n: usize, g: Gen) -> Self {
        Form::monomial(n, Monomial::generator(g), Scalar::one())
    }

    /// Wedge of generators in the given order, e.g. `[Anti(1), Holo(2)]` = -ω^{21̄}.
    pub fn product(n: usize, gens: &[Gen]) -> Self {
        gens.iter().fold(Form::one(n), |acc, &g| acc.wedge(&Form::generator(n, g)))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut f = Form::zero(n);
        for (m, c) in terms {
            f.add_term(m, &c);
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &Scalar) {
        self.add_term(m, &-c);
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        if c.is_zero() {
            return Form::zero(self.n);
        }
        Form { n: self.n, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n, "wedge of forms over different generator counts");
        let mut out = Form::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = ma.wedge(mb) {
                    let c = ca * cb;
                    if neg {
                        out.sub_term(m, &c);
                    } else {
                        out.add_term(m, &c);
                    }
                }
            }
        }
        out
    }

    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in &self.terms {
            let (neg, mc) = m.conjugate();
            let cc = c.conj();
            out.add_term(mc, &if neg { -cc } else { cc });
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Component of bidegree `(p, q)`.
    pub fn project(&self, p: usize, q: usize) -> Form {
        Form {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.bidegree() == (p, q)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn bidegrees(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(|m| m.bidegree()).collect()
    }

    /// Total degree if all terms share it; zero forms have none.
    pub fn degree(&self) -> Option<usize> {
        let degs: BTreeSet<usize> = self.terms.keys().map(|m| m.degree()).collect();
        if degs.len() == 1 {
            degs.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    /// Replaces each unbarred generator ω^j by `images[j-1]`. Only valid for
    /// forms without barred generators.
    pub fn substitute(&self, images: &[Form]) -> Form {
        let n = images.first().map(|f| f.n).unwrap_or(self.n);
        let mut out = Form::zero(n);
        for (m, c) in &self.terms {
            assert_eq!(m.anti_mask(), 0, "substitute expects forms without barred generators");
            let mut acc = Form::one(n);
            for j in m.holo() {
                acc = acc.wedge(&images[j - 1]);
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// Applies the degree +1 anti-derivation with the given values on generators.
    pub fn apply_derivation(&self, image: &dyn Fn(Gen) -> Form) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in &self.terms {
            let gens = m.generators();
            for (i, &g) in gens.iter().enumerate() {
                let dg = image(g);
                if dg.is_zero() {
                    continue;
                }
                let before = Form::product(self.n, &gens[..i]);
                let after = Form::product(self.n, &gens[i + 1..]);
                let term = before.wedge(&dg).wedge(&after);
                let sign = if i % 2 == 1 { -c.clone() } else { c.clone() };
                out = &out + &term.scale(&sign);
            }
        }
        out
    }

    /// Same form over a larger generator set.
    pub fn widen(&self, n: usize) -> Form {
        assert!(n >= self.n);
        Form { n, terms: self.terms.clone() }
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.sub_term(*m, c);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg_real = c.is_real() && c.re() < &num::rational::BigRational::zero();
            let mag = if neg_real { -c } else { c.clone() };
            let sep = match (k, neg_real) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}")?;
            let unit = m.degree() == 0;
            if mag.is_one() && !unit {
                write!(f, "{m}")?;
            } else if unit {
                write!(f, "({mag})")?;
            } else {
                write!(f, "({mag})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    fn w(n: usize, g: Gen) -> Form {
        Form::generator(n, g)
    }

    #[test]
    fn anticommutation() {
        let a = w(3, Holo(1));
        let b = w(3, Anti(2));
        assert_eq!(a.wedge(&b), -&b.wedge(&a));
        assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn conjugate_is_involution() {
        let f = &Form::product(3, &[Holo(1), Anti(2)]).scale(&Scalar::gauss(1, 2, 3, 1))
            + &Form::product(3, &[Holo(1), Holo(3)]);
        assert_eq!(f.conjugate().conjugate(), f);
        // conj(ω^{11̄}) = -ω^{11̄}
        let v = Form::product(3, &[Holo(1), Anti(1)]);
        assert_eq!(v.conjugate(), -&v);
    }

    #[test]
    fn projection_splits_form() {
        let f = &Form::product(3, &[Holo(1), Holo(2)]) + &Form::product(3, &[Holo(1), Anti(1)]);
        assert_eq!(&f.project(2, 0) + &f.project(1, 1), f);
        assert_eq!(f.bidegrees().len(), 2);
        assert_eq!(f.degree(), Some(2));
    }

    #[test]
    fn display() {
        let f = &Form::product(3, &[Holo(1), Holo(2)]) - &Form::product(3, &[Holo(2), Anti(1)]).scale(&Scalar::ratio(1, 2));
        assert_eq!(f.to_string(), "w1^w2 - (1/2)*w2^w1b");
    }
}
