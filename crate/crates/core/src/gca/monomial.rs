use std::cmp::Ordering;
use std::fmt;

use super::{GcaError, GeneratorSet};

/// Product of generators, stored as an exponent vector aligned with a
/// [`GeneratorSet`]. Trailing zero exponents are trimmed, so a monomial keeps
/// its identity when the generator set grows.
///
/// Ordering is descending lexicographic on exponents: `x1^2 < x1*x2 < x2^2`.
/// Restricted to one degree this is the basis order used everywhere.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(gens: &GeneratorSet, mut exponents: Vec<u32>) -> Result<Self, GcaError> {
        if exponents.len() > gens.len() && exponents[gens.len()..].iter().any(|&e| e != 0) {
            return Err(GcaError::UnknownGenerator(format!("index {}", gens.len())));
        }
        for (i, &e) in exponents.iter().enumerate() {
            if e > 1 && gens.is_odd(i) {
                return Err(GcaError::OddSquare(gens.name(i).to_string()));
            }
        }
        trim(&mut exponents);
        Ok(Monomial(exponents))
    }

    pub(crate) fn from_raw(mut exponents: Vec<u32>) -> Self {
        trim(&mut exponents);
        Monomial(exponents)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `(generator index, exponent)` for every generator that occurs.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self, gens: &GeneratorSet) -> u32 {
        self.factors().map(|(i, e)| e * gens.degree(i)).sum()
    }

    /// Product with Koszul sign. `None` when an odd generator would repeat.
    /// The boolean is `true` when the sign is negative.
    pub fn mul(&self, other: &Monomial, gens: &GeneratorSet) -> Option<(Monomial, bool)> {
        let len = self.0.len().max(other.0.len());
        let mut exps = vec![0u32; len];
        let mut negative = false;
        // odd generators of `self` with index above the current one
        let mut odd_above = 0u32;
        for i in (0..len).rev() {
            let (a, b) = (self.exponent(i), other.exponent(i));
            if gens.is_odd(i) {
                if a > 0 && b > 0 {
                    return None;
                }
                if b > 0 && odd_above % 2 == 1 {
                    negative = !negative;
                }
                if a > 0 {
                    odd_above += 1;
                }
            }
            exps[i] = a + b;
        }
        Some((Monomial::from_raw(exps), negative))
    }

    /// Splits off everything before generator `index` and everything after it.
    pub(crate) fn split_at(&self, index: usize) -> (Monomial, Monomial) {
        let mut left = self.0.clone();
        left.truncate(index);
        let mut right = self.0.clone();
        for e in right.iter_mut().take(index + 1) {
            *e = 0;
        }
        (Monomial::from_raw(left), Monomial::from_raw(right))
    }

    pub fn display<'a>(&'a self, gens: &'a GeneratorSet) -> impl fmt::Display + 'a {
        MonomialDisplay { monomial: self, gens }
    }
}

fn trim(e: &mut Vec<u32>) {
    while e.last() == Some(&0) {
        e.pop();
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            match other.exponent(i).cmp(&self.exponent(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    gens: &'a GeneratorSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.monomial.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.gens.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
