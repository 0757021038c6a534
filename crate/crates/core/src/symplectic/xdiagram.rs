//! Rectangular bases of the big and small L/R blob algebras, found by direct
//! enumeration over Temperley-Lieb shapes.

use super::fold::unfold_raw;
use crate::diagram::{enumerate::sort_diagrams, exposure_levels_from, tl_diagrams, Diagram, Edge};
use crate::error::Result;
use crate::params::LaurentPoly;

fn has_mixed_adjacency(w: &str) -> bool {
    w.as_bytes().windows(2).any(|p| p[0] != p[1])
}

/// True when a line word or loop carries a reducible feature (`LL`, `RR`,
/// `LRL`, `RLR`) or the diagram has loops.
pub fn has_features(d: &Diagram) -> bool {
    d.has_loops()
        || d.pairs().iter().any(|p| {
            let w = &p.word;
            w.contains("LL") || w.contains("RR") || w.contains("LRL") || w.contains("RLR")
        })
}

fn is_l_then_r(w: &str) -> bool {
    let first_r = w.find('R').unwrap_or(w.len());
    !w[first_r..].contains('L')
}

fn decorations(d: &Diagram) -> Result<Vec<Vec<&'static str>>> {
    let west = exposure_levels_from(d, Edge::West)?;
    let east = exposure_levels_from(d, Edge::East)?;
    Ok(west
        .iter()
        .zip(&east)
        .map(|(&w, &e)| match (w == 0, e == 0) {
            (true, true) => vec!["", "L", "R", "LR", "RL"],
            (true, false) => vec!["", "L"],
            (false, true) => vec!["", "R"],
            (false, false) => vec![""],
        })
        .collect())
}

/// Decorate every shape in all admissible ways. Without propagating lines the
/// letters along each edge, read left to right, must be all `L`s then all
/// `R`s so that every blob can reach its wall at once.
fn enumerate_with(m: u32, max_mixed: usize) -> Result<Vec<Diagram>> {
    let mut out = Vec::new();
    for shape in tl_diagrams(m) {
        let choices = decorations(&shape)?;
        let p = shape.propagating_count();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let words: Vec<&str> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            let mixed = words.iter().filter(|w| has_mixed_adjacency(w)).count();
            let ok = mixed <= max_mixed && (p > 0 || edge_words_ordered(&shape, &words));
            if ok {
                let d = Diagram::new(
                    m,
                    m,
                    shape.pairs().iter().zip(&words).map(|(q, w)| (q.a, q.b, w.to_string())),
                    [],
                )?;
                out.push(d);
            }
            // Odometer step.
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    sort_diagrams(&mut out);
    Ok(out)
}

fn edge_words_ordered(shape: &Diagram, words: &[&str]) -> bool {
    let mut top = String::new();
    let mut bottom = String::new();
    // Pairs are sorted by their least end, which is left to right on each edge.
    for (p, w) in shape.pairs().iter().zip(words) {
        if p.a.primed {
            bottom.push_str(w);
        } else {
            top.push_str(w);
        }
    }
    is_l_then_r(&top) && is_l_then_r(&bottom)
}

/// `B^{x'}_m`: feature-free L/R blob diagrams.
pub fn enumerate_bx_prime(m: u32) -> Result<Vec<Diagram>> {
    enumerate_with(m, usize::MAX)
}

/// `B^x_m`: as `B^{x'}_m` with at most one line carrying both blob types.
pub fn enumerate_bx(m: u32) -> Result<Vec<Diagram>> {
    enumerate_with(m, 1)
}

/// A pair of distinct diagrams of `B^{x'}_m` whose unfoldings agree up to a
/// monomial: `μ(a) = k μ(b)` after reduction.
#[derive(Clone, Debug)]
pub struct NonInjectivityWitness {
    pub a: Diagram,
    pub b: Diagram,
    pub factor: LaurentPoly,
}

pub fn non_injectivity_witness(max_m: u32) -> Result<Option<NonInjectivityWitness>> {
    for m in 1..=max_m {
        let mut images = std::collections::BTreeMap::new();
        for d in enumerate_bx_prime(m)? {
            let (fc, s) = unfold_raw(&d)?.reduce();
            if let Some((other, k)) = images.get(&s) {
                let (other, k): (&Diagram, &LaurentPoly) = (other, k);
                let factor = fc.scalar().div_exact(k).expect("monomials divide");
                return Ok(Some(NonInjectivityWitness { a: d.clone(), b: other.clone(), factor }));
            }
            images.insert(s, (d, fc.scalar()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_bx(1).unwrap().len(), 5);
        assert_eq!(enumerate_bx(2).unwrap().len(), 19);
        assert_eq!(enumerate_bx(3).unwrap().len(), 84);
    }

    #[test]
    fn big_algebra_is_larger() {
        assert_eq!(enumerate_bx_prime(2).unwrap().len(), 20);
    }

    #[test]
    fn witness_at_rank_two() {
        let w = non_injectivity_witness(3).unwrap().expect("witness");
        assert_eq!(w.a.n(), 2);
        assert_ne!(w.a, w.b);
    }
}
