//! Random pseudodiagrams for the confluence checks, built as concatenations of
//! basis diagrams so that every sample is realisable.

use rand::seq::SliceRandom;
use rand::Rng;

use super::fold::x_product;
use super::xdiagram::enumerate_bx;
use crate::diagram::{abacus_concat, Diagram};
use crate::error::Result;
use crate::params::LaurentPoly;

fn decorations(d: &Diagram) -> usize {
    d.pairs().iter().map(|p| p.word.len()).sum()
}

/// A pseudodiagram sample with the factors it was built from.
#[derive(Clone, Debug)]
pub struct Sample {
    pub factors: Vec<Diagram>,
    pub diagram: Diagram,
}

impl Sample {
    /// Reduce the factors one product at a time on the periodic side.
    pub fn periodic_value(&self) -> Result<(LaurentPoly, Diagram)> {
        let mut k = LaurentPoly::one();
        let mut cur = self.factors[0].clone();
        for f in &self.factors[1..] {
            let (k2, c) = x_product(&cur, f)?;
            k = &k * &k2;
            cur = c;
        }
        Ok((k, cur))
    }
}

/// Sampler over `B^x_m` for one rank.
pub struct Sampler {
    basis: Vec<Diagram>,
}

impl Sampler {
    pub fn new(m: u32) -> Result<Self> {
        Ok(Sampler { basis: enumerate_bx(m)? })
    }

    /// Concatenate two to four basis diagrams, keeping at most
    /// `max_decorations` blobs in total.
    pub fn sample(&self, rng: &mut impl Rng, max_decorations: usize) -> Result<Sample> {
        let count = rng.gen_range(2..=4);
        let mut factors = Vec::with_capacity(count);
        let mut budget = max_decorations;
        for _ in 0..count {
            let fits: Vec<&Diagram> = self.basis.iter().filter(|d| decorations(d) <= budget).collect();
            let d = (*fits.choose(rng).expect("the identity always fits")).clone();
            budget -= decorations(&d);
            factors.push(d);
        }
        let mut diagram = factors[0].clone();
        for f in &factors[1..] {
            diagram = abacus_concat(&diagram, f)?;
        }
        Ok(Sample { factors, diagram })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{rect_reduce, rect_reduce_first};
    use rand::SeedableRng;

    #[test]
    fn random_samples_are_confluent() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for m in 1..=3 {
            let s = Sampler::new(m).unwrap();
            for _ in 0..100 {
                let x = s.sample(&mut rng, 4).unwrap();
                let first = rect_reduce_first(&x.diagram).unwrap();
                let mut r2 = rand::rngs::StdRng::seed_from_u64(11);
                let random = rect_reduce(&x.diagram, &mut |n| r2.gen_range(0..n)).unwrap();
                assert_eq!(first, random, "{}", x.diagram);
                assert_eq!(first, x.periodic_value().unwrap(), "{}", x.diagram);
            }
        }
    }
}
