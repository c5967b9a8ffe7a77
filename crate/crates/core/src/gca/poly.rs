use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{GeneratorSet, Monomial};
use crate::Rational;

/// Homogeneous element of a free graded-commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(degree: u32) -> Self {
        Poly { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(0, Monomial::one(), Rational::one())
    }

    /// Single term. The caller vouches that `degree` is the monomial's degree;
    /// use [`Poly::monomial`] to have it computed.
    pub fn term(degree: u32, monomial: Monomial, coeff: Rational) -> Self {
        let mut p = Self::zero(degree);
        p.add_term(monomial, coeff);
        p
    }

    pub fn monomial(gens: &GeneratorSet, monomial: Monomial, coeff: Rational) -> Self {
        Self::term(monomial.degree(gens), monomial, coeff)
    }

    pub fn generator(gens: &GeneratorSet, index: usize) -> Self {
        Self::term(gens.degree(index), Monomial::generator(index), Rational::one())
    }

    pub fn degree(&self) -> u32 {
        self.degree
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

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Rational, other: &Poly) {
        assert_eq!(self.degree, other.degree, "adding polynomials of different degree");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        let mut p = Poly::zero(self.degree);
        if !factor.is_zero() {
            p.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect();
        }
        p
    }

    /// Graded-commutative product.
    pub fn mul(&self, other: &Poly, gens: &GeneratorSet) -> Poly {
        let mut out = Poly::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((m, negative)) = a.mul(b, gens) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        out
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, gens }
    }
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    gens: &'a GeneratorSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(self.gens))?;
            } else {
                write!(f, "{mag}*{}", m.display(self.gens))?;
            }
        }
        Ok(())
    }
}
