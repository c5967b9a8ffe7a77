//! Machine-readable model document and its inverse for fixtures.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use minimal4::linalg::SparseVec;
use minimal4::{
    build, BuildOptions, CohomologyAlgebra, Derivation, GeneratorSet, MinimalModelStage, Monomial, Poly, QuasiMorphism,
    Rational,
};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
/// Fields are declared in alphabetical order, so tools that sort object keys
/// reproduce the layout (rank keys sort numerically, which differs from
/// string order only once degrees reach 10).
pub struct ModelDocument {
    pub generators: Vec<GeneratorEntry>,
    pub meta: Meta,
    pub ranks: BTreeMap<u32, u64>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub degree: u32,
    pub differential: Vec<Term>,
    pub name: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Term {
    /// Exact rational as `"p/q"`.
    pub coeff: String,
    pub monomial: Vec<(String, u32)>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub b2: usize,
    pub b2minus: usize,
    pub b2plus: usize,
    pub max_degree: u32,
    pub sigma: i64,
}

pub fn rational_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl ModelDocument {
    pub fn from_stage(stage: &MinimalModelStage, split: (usize, usize)) -> Self {
        let gens = stage.generators();
        let generators = gens
            .iter()
            .enumerate()
            .map(|(i, g)| GeneratorEntry {
                degree: g.degree,
                differential: stage
                    .differential()
                    .image(i)
                    .terms()
                    .map(|(m, c)| Term {
                        coeff: rational_string(c),
                        monomial: m.factors().map(|(j, e)| (gens.name(j).to_string(), e)).collect(),
                    })
                    .collect(),
                name: g.name.clone(),
            })
            .collect();
        let (p, q) = split;
        ModelDocument {
            generators,
            meta: Meta { b2: p + q, b2minus: q, b2plus: p, max_degree: stage.k(), sigma: p as i64 - q as i64 },
            ranks: stage.rank_table().entries().clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Rebuilds the stage described by the document. The map to cohomology
    /// is not stored, so each generator takes the image of the generator of
    /// the same name in a freshly built reference model (zero if absent).
    pub fn to_stage(&self, guard: usize) -> Result<(MinimalModelStage, CohomologyAlgebra)> {
        let m = &self.meta;
        if m.b2plus + m.b2minus != m.b2 || m.sigma != m.b2plus as i64 - m.b2minus as i64 {
            bail!("inconsistent meta block");
        }
        let algebra = CohomologyAlgebra::four_manifold(m.b2plus, m.b2minus);
        let reference = build(&algebra, m.max_degree, &BuildOptions { guard, ..Default::default() })
            .context("building the reference model")?
            .stage;
        let gens = GeneratorSet::from_pairs(self.generators.iter().map(|g| (g.name.clone(), g.degree)))?;
        let mut images = Vec::new();
        for g in &self.generators {
            let mut p = Poly::zero(g.degree + 1);
            for t in &g.differential {
                let mut exps = vec![0; gens.len()];
                for (name, e) in &t.monomial {
                    let i =
                        gens.position(name).ok_or_else(|| anyhow!("unknown generator `{name}` in d({})", g.name))?;
                    exps[i] += e;
                }
                let mono = Monomial::from_exponents(&gens, exps)?;
                let coeff: Rational = t.coeff.parse().map_err(|_| anyhow!("bad coefficient `{}`", t.coeff))?;
                p.add_term(mono, coeff);
            }
            images.push(p);
        }
        let diff = Derivation::from_images(&gens, images)?;
        let qm = QuasiMorphism::from_images(
            gens.iter()
                .map(|g| {
                    let r = reference.generators();
                    r.position(&g.name).map_or_else(SparseVec::new, |i| reference.quasi_morphism().image(i).clone())
                })
                .collect(),
        );
        Ok((MinimalModelStage::from_parts(gens, diff, qm, m.max_degree), algebra))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = CohomologyAlgebra::four_manifold(2, 1);
        let out = build(&a, 4, &BuildOptions::default()).unwrap();
        let doc = ModelDocument::from_stage(&out.stage, (2, 1));
        let json = doc.to_json();
        let back: ModelDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        let (stage, _) = back.to_stage(minimal4::DEFAULT_BASIS_GUARD).unwrap();
        assert_eq!(&stage, &out.stage);
    }

    #[test]
    fn rationals_keep_denominator() {
        assert_eq!(rational_string(&Rational::from_integer((-1).into())), "-1/1");
        assert_eq!(rational_string(&Rational::new(6.into(), 4.into())), "3/2");
    }
}
