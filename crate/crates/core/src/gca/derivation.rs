use super::{GcaError, GeneratorSet, Monomial, Poly};
use crate::Rational;

/// Degree +1 derivation, determined by its values on generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    images: Vec<Poly>,
}

impl Derivation {
    pub fn zero(gens: &GeneratorSet) -> Self {
        Derivation { images: (0..gens.len()).map(|i| Poly::zero(gens.degree(i) + 1)).collect() }
    }

    pub fn from_images(gens: &GeneratorSet, images: Vec<Poly>) -> Result<Self, GcaError> {
        if images.len() != gens.len() {
            return Err(GcaError::DerivationLength { expected: gens.len(), found: images.len() });
        }
        for (i, p) in images.iter().enumerate() {
            check_image_degree(gens, i, p)?;
        }
        Ok(Derivation { images })
    }

    /// Extends the derivation to a generator appended after the existing ones.
    pub fn push(&mut self, gens: &GeneratorSet, image: Poly) -> Result<(), GcaError> {
        let index = self.images.len();
        if index >= gens.len() {
            return Err(GcaError::DerivationLength { expected: gens.len(), found: index + 1 });
        }
        check_image_degree(gens, index, &image)?;
        self.images.push(image);
        Ok(())
    }

    pub fn set(&mut self, gens: &GeneratorSet, index: usize, image: Poly) -> Result<(), GcaError> {
        check_image_degree(gens, index, &image)?;
        self.images[index] = image;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, index: usize) -> &Poly {
        &self.images[index]
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// First generator whose image has a term of word length below two.
    pub fn first_non_decomposable(&self) -> Option<usize> {
        self.images.iter().position(|p| p.terms().any(|(m, _)| m.word_length() < 2))
    }

    pub fn is_minimal(&self) -> bool {
        self.first_non_decomposable().is_none()
    }

    /// Leibniz extension to a monomial: for each generator `g` of exponent `e`
    /// in `m = L g^e R`, the term `e (-1)^{|L|} L g^{e-1} D(g) R`.
    pub fn apply_monomial(&self, gens: &GeneratorSet, m: &Monomial) -> Poly {
        let mut out = Poly::zero(m.degree(gens) + 1);
        let mut prefix_degree = 0;
        for (j, e) in m.factors() {
            let image = &self.images[j];
            if !image.is_zero() {
                let (mut left, right) = m.split_at(j);
                if e > 1 {
                    let (l, _) = left.mul(&Monomial::from_raw(power(j, e - 1)), gens).expect("even power");
                    left = l;
                }
                let mut factor = Rational::from_integer(e.into());
                if prefix_degree % 2 == 1 {
                    factor = -factor;
                }
                for (t, c) in image.terms() {
                    let Some((lt, neg1)) = left.mul(t, gens) else { continue };
                    let Some((ltr, neg2)) = lt.mul(&right, gens) else { continue };
                    let coeff = c * &factor;
                    out.add_term(ltr, if neg1 ^ neg2 { -coeff } else { coeff });
                }
            }
            prefix_degree += e * gens.degree(j);
        }
        out
    }

    pub fn apply(&self, gens: &GeneratorSet, p: &Poly) -> Poly {
        let mut out = Poly::zero(p.degree() + 1);
        for (m, c) in p.terms() {
            out.add_scaled(c, &self.apply_monomial(gens, m));
        }
        out
    }
}

fn power(index: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; index + 1];
    v[index] = e;
    v
}

fn check_image_degree(gens: &GeneratorSet, index: usize, p: &Poly) -> Result<(), GcaError> {
    let expected = gens.degree(index) + 1;
    let found = p.terms().map(|(m, _)| m.degree(gens)).find(|&d| d != p.degree()).unwrap_or(p.degree());
    if p.degree() != expected || found != expected {
        return Err(GcaError::DegreeMismatch { generator: gens.name(index).to_string(), expected, found });
    }
    Ok(())
}
