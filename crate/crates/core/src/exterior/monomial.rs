use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of generators of either type a monomial can carry.
pub const MAX_GENERATORS: usize = 8;

/// A generator of the exterior algebra, 1-based: `Holo(j)` is ω^j, `Anti(j)` is ω^j̄.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Holo(usize),
    Anti(usize),
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::Holo(j) | Gen::Anti(j) => j,
        }
    }

    pub fn conj(self) -> Gen {
        match self {
            Gen::Holo(j) => Gen::Anti(j),
            Gen::Anti(j) => Gen::Holo(j),
        }
    }
}

/// Wedge product of distinct generators in canonical order: unbarred
/// ascending, then barred ascending. Bit `j-1` of a mask stands for index `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    holo: u8,
    anti: u8,
}

fn bits(mask: u8) -> impl Iterator<Item = usize> {
    (0..8).filter(move |b| mask & (1 << b) != 0)
}

/// Number of pairs `(a, b)` with `a` in `x`, `b` in `y` and `a > b`.
fn inversions(x: u8, y: u8) -> u32 {
    bits(y).map(|b| ((x as u32) >> (b + 1)).count_ones()).sum()
}

fn lex_cmp(a: u8, b: u8) -> Ordering {
    let mut ia = bits(a);
    let mut ib = bits(b);
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => return x.cmp(&y),
            _ => {}
        }
    }
}

fn mask_of(indices: &[usize]) -> Result<u8> {
    let mut mask = 0u8;
    let mut last = 0;
    for &j in indices {
        if j == 0 || j > MAX_GENERATORS {
            return Err(Error::DimensionMismatch(format!("generator index {j} out of range")));
        }
        if j <= last {
            return Err(Error::DimensionMismatch(format!("indices {indices:?} are not strictly ascending")));
        }
        last = j;
        mask |= 1 << (j - 1);
    }
    Ok(mask)
}

impl Monomial {
    /// Builds ω^{holo} ∧ ω^{anti-bar} from strictly ascending 1-based index lists.
    pub fn try_new(holo: &[usize], anti: &[usize]) -> Result<Self> {
        Ok(Monomial { holo: mask_of(holo)?, anti: mask_of(anti)? })
    }

    /// Panicking variant of [`Monomial::try_new`] for literal indices.
    pub fn new(holo: &[usize], anti: &[usize]) -> Self {
        Self::try_new(holo, anti).expect("invalid monomial indices")
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub(crate) fn from_masks(holo: u8, anti: u8) -> Self {
        Monomial { holo, anti }
    }

    pub fn generator(g: Gen) -> Self {
        match g {
            Gen::Holo(j) => Monomial::new(&[j], &[]),
            Gen::Anti(j) => Monomial::new(&[], &[j]),
        }
    }

    pub(crate) fn holo_mask(&self) -> u8 {
        self.holo
    }

    pub(crate) fn anti_mask(&self) -> u8 {
        self.anti
    }

    pub fn holo(&self) -> Vec<usize> {
        bits(self.holo).map(|b| b + 1).collect()
    }

    pub fn anti(&self) -> Vec<usize> {
        bits(self.anti).map(|b| b + 1).collect()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.holo.count_ones() as usize, self.anti.count_ones() as usize)
    }

    pub fn degree(&self) -> usize {
        (self.holo.count_ones() + self.anti.count_ones()) as usize
    }

    /// Largest generator index used, 0 for the unit.
    pub fn max_index(&self) -> usize {
        (8 - (self.holo | self.anti).leading_zeros()) as usize
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> Vec<Gen> {
        bits(self.holo).map(|b| Gen::Holo(b + 1)).chain(bits(self.anti).map(|b| Gen::Anti(b + 1))).collect()
    }

    /// `self ∧ other = sign · m`, or `None` when a generator repeats.
    pub fn wedge(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.holo & other.holo != 0 || self.anti & other.anti != 0 {
            return None;
        }
        let parity = self.anti.count_ones() * other.holo.count_ones()
            + inversions(self.holo, other.holo)
            + inversions(self.anti, other.anti);
        Some((parity % 2 == 1, Monomial { holo: self.holo | other.holo, anti: self.anti | other.anti }))
    }

    /// Conjugate monomial and whether the reordering flips the sign.
    pub fn conjugate(&self) -> (bool, Monomial) {
        let parity = self.holo.count_ones() * self.anti.count_ones();
        (parity % 2 == 1, Monomial { holo: self.anti, anti: self.holo })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.holo, other.holo).then_with(|| lex_cmp(self.anti, other.anti))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .generators()
            .into_iter()
            .map(|g| match g {
                Gen::Holo(j) => format!("w{j}"),
                Gen::Anti(j) => format!("w{j}b"),
            })
            .collect();
        write!(f, "{}", parts.join("^"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        let m12b = Monomial::new(&[1], &[2]);
        let m21b = Monomial::new(&[2], &[1]);
        // w1^w2b ^ w2^w1b = + w1^w2^w1b^w2b
        assert_eq!(m12b.wedge(&m21b), Some((false, Monomial::new(&[1, 2], &[1, 2]))));
        let m11b = Monomial::new(&[1], &[1]);
        let m22b = Monomial::new(&[2], &[2]);
        assert_eq!(m11b.wedge(&m22b), Some((true, Monomial::new(&[1, 2], &[1, 2]))));
        assert_eq!(m11b.wedge(&m12b), None);
    }

    #[test]
    fn conjugation_sign() {
        let (neg, m) = Monomial::new(&[1], &[2]).conjugate();
        assert!(neg);
        assert_eq!(m, Monomial::new(&[2], &[1]));
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(Monomial::try_new(&[2, 1], &[]).is_err());
        assert!(Monomial::try_new(&[1, 1], &[]).is_err());
        assert!(Monomial::try_new(&[0], &[]).is_err());
    }

    #[test]
    fn order_is_lexicographic() {
        let mut v = vec![Monomial::new(&[1, 2], &[]), Monomial::new(&[1], &[2]), Monomial::new(&[1], &[1])];
        v.sort();
        assert_eq!(v, vec![Monomial::new(&[1], &[1]), Monomial::new(&[1], &[2]), Monomial::new(&[1, 2], &[])]);
    }
}
